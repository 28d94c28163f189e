//! Products, skewing, Kronecker products and the Hall scalar product.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::symfunc::{Basis, SymFunc};
use super::tables::tables;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::{rat, MPoly};

type LrMap = BTreeMap<Partition, i64>;

fn lr_cache() -> &'static RwLock<HashMap<(Partition, Partition), Arc<LrMap>>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), Arc<LrMap>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Schur expansion of `s_μ s_ν`: the Littlewood–Richardson coefficients
/// `c^λ_{μν}` keyed by `λ`.
pub fn lr_product(mu: &Partition, nu: &Partition) -> Arc<LrMap> {
    let (mu, nu) = if nu.size() > mu.size() {
        (nu, mu)
    } else {
        (mu, nu)
    };
    let key = (mu.clone(), nu.clone());
    if let Some(m) = lr_cache().read().unwrap().get(&key) {
        return m.clone();
    }
    let mut out = LrMap::new();
    add_letter(nu.parts(), 0, mu.parts(), &[], &mut out);
    let out = Arc::new(out);
    lr_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert(out)
        .clone()
}

/// Places `content[i]` copies of letter `i` as a horizontal strip on `shape`,
/// subject to the lattice condition against the previous letter's per-row
/// counts `prev`, then recurses on the next letter.
fn add_letter(content: &[usize], i: usize, shape: &[usize], prev: &[usize], out: &mut LrMap) {
    if i == content.len() {
        *out.entry(Partition::from_unsorted(shape.to_vec()))
            .or_default() += 1;
        return;
    }
    let mut strip = vec![0usize; shape.len() + 1];
    choose_strip(
        content, i, shape, prev, 0, content[i], 0, 0, &mut strip, out,
    );
}

#[allow(clippy::too_many_arguments)]
fn choose_strip(
    content: &[usize],
    i: usize,
    shape: &[usize],
    prev: &[usize],
    row: usize,
    left: usize,
    placed: usize,
    prev_above: usize,
    strip: &mut Vec<usize>,
    out: &mut LrMap,
) {
    if row == strip.len() {
        if left == 0 {
            let mut next: Vec<usize> = (0..strip.len())
                .map(|r| shape.get(r).copied().unwrap_or(0) + strip[r])
                .collect();
            while next.last() == Some(&0) {
                next.pop();
            }
            let counts = strip.clone();
            add_letter(content, i + 1, &next, &counts, out);
        }
        return;
    }
    let current = shape.get(row).copied().unwrap_or(0);
    let cap_strip = if row == 0 {
        left
    } else {
        shape[row - 1] - current
    };
    // letters i in rows ≤ row may not outnumber letters i-1 in rows < row
    let cap_lattice = if i == 0 { left } else { prev_above - placed };
    let max_here = left.min(cap_strip).min(cap_lattice);
    let prev_here = prev.get(row).copied().unwrap_or(0);
    for x in 0..=max_here {
        strip[row] = x;
        choose_strip(
            content,
            i,
            shape,
            prev,
            row + 1,
            left - x,
            placed + x,
            prev_above + prev_here,
            strip,
            out,
        );
    }
    strip[row] = 0;
}

/// Product, returned in the Schur basis (or in the power-sum basis when
/// both factors are power sums).
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    if f.basis() == Basis::P && g.basis() == Basis::P {
        return multiply_p(f, g);
    }
    let (a, b) = (f.to_s(), g.to_s());
    let mut out = SymFunc::zero(Basis::S);
    for (mu, c) in a.terms() {
        for (nu, d) in b.terms() {
            let cd = c * d;
            for (lam, &n) in lr_product(mu, nu).iter() {
                out.add_term(lam.clone(), &cd.scale(&rat(n)));
            }
        }
    }
    out
}

/// Product of two power-sum expansions.
pub fn multiply_p(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::P);
    for (mu, c) in f.terms() {
        for (nu, d) in g.terms() {
            let mut parts = mu.parts().to_vec();
            parts.extend_from_slice(nu.parts());
            out.add_term(Partition::from_unsorted(parts), &(c * d));
        }
    }
    out
}

/// Skew Schur function `s_{λ/ν}` in the Schur basis; zero unless `ν ⊆ λ`.
pub fn skew_schur(lam: &Partition, nu: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(Basis::S);
    if !lam.contains(nu) {
        return out;
    }
    for mu in partitions_of(lam.size() - nu.size()) {
        if !lam.contains(&mu) {
            continue;
        }
        if let Some(&c) = lr_product(nu, &mu).get(lam) {
            out.add_term(mu, &MPoly::int(c));
        }
    }
    out
}

/// `g^⊥ f`, the Hall adjoint of multiplication by `g`.
pub fn skew(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let (a, b) = (f.to_s(), g.to_s());
    let mut out = SymFunc::zero(Basis::S);
    for (lam, c) in a.terms() {
        for (nu, d) in b.terms() {
            if !lam.contains(nu) {
                continue;
            }
            let cd = c * d;
            for (mu, e) in skew_schur(lam, nu).terms() {
                out.add_term(mu.clone(), &(&cd * e));
            }
        }
    }
    out
}

/// Kronecker (inner) product of homogeneous functions of equal degree.
pub fn kronecker(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    if f.is_zero() || g.is_zero() {
        return Ok(SymFunc::zero(Basis::S));
    }
    let (Some(df), Some(dg)) = (f.homogeneous_degree(), g.homogeneous_degree()) else {
        return Err(Error::DegreeMismatch(
            "Kronecker product needs homogeneous arguments".into(),
        ));
    };
    if df != dg {
        return Err(Error::DegreeMismatch(format!(
            "Kronecker product of degrees {df} and {dg}"
        )));
    }
    let a = f.convert(Basis::P)?;
    let b = g.convert(Basis::P)?;
    let t = tables(df);
    let mut out = SymFunc::zero(Basis::P);
    for (rho, c) in a.terms() {
        let d = b.coefficient(rho);
        if d.is_zero() {
            continue;
        }
        let z = num_rational::BigRational::from_integer(t.z[t.index(rho)].clone());
        out.add_term(rho.clone(), &(c * &d).scale(&z));
    }
    Ok(out.to_s())
}

/// Hall scalar product, making the Schur functions orthonormal.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> MPoly {
    let (a, b) = (f.to_s(), g.to_s());
    let mut out = MPoly::zero();
    for (lam, c) in a.terms() {
        let d = b.coefficient(lam);
        if !d.is_zero() {
            out += &(c * &d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;
    use crate::sym::schur_poly::schur_poly;

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s_of(pairs: &[(&[usize], i64)]) -> SymFunc {
        SymFunc::from_terms(Basis::S, pairs.iter().map(|(p, c)| (pt(p), MPoly::int(*c))))
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            multiply(&SymFunc::s(pt(&[1])), &SymFunc::s(pt(&[1]))),
            s_of(&[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            multiply(&SymFunc::s(pt(&[2, 1])), &SymFunc::s(pt(&[1]))),
            s_of(&[(&[3, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1)])
        );
        assert_eq!(
            multiply(&SymFunc::s(pt(&[2])), &SymFunc::s(pt(&[2]))),
            s_of(&[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1)])
        );
    }

    #[test]
    fn classic_lr_coefficient() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        let m = lr_product(&pt(&[2, 1]), &pt(&[2, 1]));
        assert_eq!(m.get(&pt(&[4, 2])), Some(&1));
        assert_eq!(m.get(&pt(&[3, 2, 1])), Some(&2));
        assert_eq!(m.values().sum::<i64>(), 8);
    }

    /// Compares the tableau rule against the power-sum product.
    #[test]
    fn lr_matches_power_sum_product() {
        for a in 0..=4 {
            for b in 0..=4 {
                for mu in partitions_of(a) {
                    for nu in partitions_of(b) {
                        let fast = multiply(&SymFunc::s(mu.clone()), &SymFunc::s(nu.clone()));
                        let slow = multiply_p(
                            &SymFunc::s(mu.clone()).convert(Basis::P).unwrap(),
                            &SymFunc::s(nu.clone()).convert(Basis::P).unwrap(),
                        )
                        .to_s();
                        assert_eq!(fast, slow, "{mu} * {nu}");
                    }
                }
            }
        }
    }

    /// Checks `s_2 s_2` by expanding Schur polynomials in four variables.
    #[test]
    fn lr_matches_polynomial_expansion() {
        let vars = Var::qs(4);
        let lhs = &schur_poly(&pt(&[2]), &vars) * &schur_poly(&pt(&[2]), &vars);
        let rhs: MPoly = multiply(&SymFunc::s(pt(&[2])), &SymFunc::s(pt(&[2])))
            .terms()
            .map(|(l, c)| &schur_poly(l, &vars) * c)
            .sum();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn skew_examples() {
        let s21 = SymFunc::s(pt(&[2, 1]));
        assert_eq!(
            skew(&s21, &SymFunc::e_n(1)),
            s_of(&[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(skew(&s21, &SymFunc::e_n(2)), s_of(&[(&[1], 1)]));
        assert!(skew(&s21, &SymFunc::s(pt(&[3]))).is_zero());
        assert!(skew_schur(&pt(&[2, 1]), &pt(&[1, 1, 1])).is_zero());
    }

    #[test]
    fn skew_is_adjoint() {
        for a in 0..=3 {
            for b in 0..=3 {
                for mu in partitions_of(a) {
                    for nu in partitions_of(b) {
                        for lam in partitions_of(a + b) {
                            let f = SymFunc::s(lam.clone());
                            let g = SymFunc::s(mu.clone());
                            let h = SymFunc::s(nu.clone());
                            assert_eq!(
                                hall_inner(&skew(&f, &g), &h),
                                hall_inner(&f, &multiply(&g, &h))
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        let s21 = SymFunc::s(pt(&[2, 1]));
        assert_eq!(
            kronecker(&s21, &s21).unwrap(),
            s_of(&[(&[3], 1), (&[2, 1], 1), (&[1, 1, 1], 1)])
        );
        for lam in partitions_of(4) {
            let f = SymFunc::s(lam.clone());
            assert_eq!(kronecker(&SymFunc::s(Partition::row(4)), &f).unwrap(), f);
            assert_eq!(
                kronecker(&SymFunc::s(Partition::column(4)), &f).unwrap(),
                SymFunc::s(lam.conjugate())
            );
        }
        assert!(kronecker(&s21, &SymFunc::s(pt(&[2]))).is_err());
    }

    #[test]
    fn hall_examples() {
        let p21 = SymFunc::p(pt(&[2, 1]));
        assert_eq!(hall_inner(&p21, &p21), MPoly::int(2));
        assert!(hall_inner(&SymFunc::h_n(2), &SymFunc::s(pt(&[1, 1]))).is_zero());
        assert_eq!(
            hall_inner(&SymFunc::s(pt(&[2, 1])), &SymFunc::s(pt(&[2, 1]))),
            MPoly::one()
        );
    }
}
