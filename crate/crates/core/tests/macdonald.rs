use dbflab::macdonald::{delta_prime, modified_macdonald, nabla, pi_op};
use dbflab::partition::partitions_of;
use dbflab::{MPoly, Partition, SymFunc, Var};

#[test]
fn htilde_normalisation_and_symmetry() {
    for n in 1..=8 {
        for mu in partitions_of(n) {
            let h = modified_macdonald(&mu);
            assert_eq!(h.coefficient(&Partition::row(n)), MPoly::one(), "{mu}");
            let swapped = h.map_coeffs(|c| c.swap_vars(Var::Q, Var::T));
            assert_eq!(swapped, modified_macdonald(&mu.conjugate()), "{mu}");
            // at q = t = 1 every H̃_μ is h_1^n
            let ones = h.map_coeffs(|c| MPoly::constant(c.at_ones()));
            let h1n = (0..n).fold(SymFunc::s(Partition::empty()), |acc, _| {
                dbflab::sym::multiply(&acc, &SymFunc::e_n(1))
            });
            assert_eq!(ones, h1n.to_s(), "{mu}");
        }
    }
}

#[test]
fn diagonal_operators_commute() {
    for n in 2..=4 {
        let en = SymFunc::e_n(n);
        for k in 0..n {
            let a = nabla(&delta_prime(k, &en).unwrap()).unwrap();
            let b = delta_prime(k, &nabla(&en).unwrap()).unwrap();
            assert_eq!(a, b, "n={n} k={k}");
        }
    }
}

#[test]
fn pi_round_trip() {
    let f = SymFunc::s("[2,1]".parse().unwrap());
    let back = pi_op(&pi_op(&f, false).unwrap(), true).unwrap();
    assert_eq!(back, f);
}
