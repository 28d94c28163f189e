//! The universal formula `𝔻𝔹𝔽_n = E_n[q − εu; z]`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::partition::{subpartitions, Partition};
use crate::poly::{MPoly, Var};
use crate::sym::{skew_schur, super_schur, super_schur_at_ones, Basis, SymFunc, TensorFrobenius};

/// How the alphabets are specialised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Coefficients in `q1..qk, u1..uj`.
    Symbolic,
    /// Every letter set to one.
    Ones,
}

/// `Σ_μ Σ_λ c_{λμ} s_λ[q − εu] s_μ(z)` with `k` bosonic and `j` fermionic
/// letters.
pub fn eval_main_conjecture(e: &TensorFrobenius, k: usize, j: usize, mode: Mode) -> SymFunc {
    let (qs, us) = (Var::qs(k), Var::us(j));
    let mut out = SymFunc::zero(Basis::S);
    for ((lam, _, mu), c) in e.entries() {
        let c = BigRational::from_integer(c.clone());
        let coeff = match mode {
            Mode::Symbolic => super_schur(lam, &qs, &us).scale(&c),
            Mode::Ones => MPoly::constant(super_schur_at_ones(lam, k, j) * c),
        };
        out.add_term(mu.clone(), &coeff);
    }
    out
}

/// The same prediction in tensor form `Σ c · s_ν(q) s_ρ(u) s_μ(z)`, using
/// `s_{λ'/ν'} = Σ_ρ c^{λ'}_{ν'ρ} s_ρ` and dropping Schur polynomials in too
/// few letters.
pub fn eval_main_tensor(e: &TensorFrobenius, k: usize, j: usize) -> TensorFrobenius {
    let mut out = TensorFrobenius::new();
    for ((lam, _, mu), c) in e.entries() {
        let lc = lam.conjugate();
        for nu in subpartitions(lam) {
            if nu.len() > k {
                continue;
            }
            for (rho, d) in skew_schur(&lc, &nu.conjugate()).terms() {
                if rho.len() > j {
                    continue;
                }
                let d: BigInt = d
                    .constant_value()
                    .expect("integral LR coefficient")
                    .to_integer();
                out.add(nu.clone(), rho.clone(), mu.clone(), &(c * d));
            }
        }
    }
    out
}

/// Renames `q1, q2, u1, u2` to the single letters `q, t, u, v`.
pub fn to_letters(f: &SymFunc) -> SymFunc {
    let map = [
        (Var::q(1), Var::Q),
        (Var::q(2), Var::T),
        (Var::u(1), Var::U),
        (Var::u(2), Var::V),
    ]
    .into_iter()
    .collect();
    f.map_coeffs(|c| c.rename(&map))
}

/// Renames `q, t, u, v` to `q1, q2, u1, u2`.
pub fn from_letters(f: &SymFunc) -> SymFunc {
    let map = [
        (Var::Q, Var::q(1)),
        (Var::T, Var::q(2)),
        (Var::U, Var::u(1)),
        (Var::V, Var::u(2)),
    ]
    .into_iter()
    .collect();
    f.map_coeffs(|c| c.rename(&map))
}

/// The dimension `Σ_μ coefficient · f^μ`.
pub fn dimension(f: &SymFunc) -> MPoly {
    f.drop_z()
}

/// `⟨f, s_{1^n}⟩`.
pub fn alternating_component(f: &SymFunc, n: usize) -> MPoly {
    f.to_s().coefficient(&Partition::column(n))
}

#[cfg(test)]
mod tests {
    use super::super::data::embedded_e;
    use super::*;

    fn show(f: &SymFunc) -> String {
        f.to_string()
    }

    #[test]
    fn n3_specialisations() {
        let e = embedded_e(3).unwrap();
        assert_eq!(
            show(&eval_main_conjecture(&e, 0, 1, Mode::Symbolic)),
            "s[3] : 1\ns[2,1] : u1\ns[1,1,1] : u1^2\n"
        );
        let qu = to_letters(&eval_main_conjecture(&e, 1, 1, Mode::Symbolic));
        assert_eq!(
            qu.coefficient(&"[2,1]".parse().unwrap()).to_string(),
            "q^2 + q*u + q + u"
        );
        assert_eq!(
            qu.coefficient(&"[1,1,1]".parse().unwrap()).to_string(),
            "q^3 + q^2*u + q*u + u^2"
        );
        let ones = eval_main_conjecture(&e, 3, 2, Mode::Ones);
        assert_eq!(dimension(&ones), MPoly::int(74));
    }

    #[test]
    fn tensor_form_agrees_with_polynomials() {
        let e = embedded_e(3).unwrap();
        for (k, j) in [(1, 1), (2, 1), (2, 2), (0, 3), (3, 0)] {
            let t = eval_main_tensor(&e, k, j);
            assert_eq!(
                t.to_symfunc(&Var::qs(k), &Var::us(j)),
                eval_main_conjecture(&e, k, j, Mode::Symbolic),
                "({k},{j})"
            );
            assert_eq!(t.at_ones(k, j), eval_main_conjecture(&e, k, j, Mode::Ones));
        }
    }
}
