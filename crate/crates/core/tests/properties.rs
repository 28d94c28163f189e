use dbflab::partition::partitions_of;
use dbflab::sym::multiply;
use dbflab::{MPoly, Partition, SymFunc, Var};
use num_rational::BigRational;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
        terms.into_iter().fold(MPoly::zero(), |acc, (c, a, b)| {
            &acc + &MPoly::monomial(&[(Var::Q, a), (Var::T, b)])
                .scale(&BigRational::from_integer(c.into()))
        })
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=5).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        let text = a.to_string();
        prop_assert_eq!(text.parse::<MPoly>().unwrap(), a);
    }

    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn schur_products_commute(a in partition(), b in partition()) {
        let (x, y) = (SymFunc::s(a), SymFunc::s(b));
        prop_assert_eq!(multiply(&x, &y), multiply(&y, &x));
    }
}
