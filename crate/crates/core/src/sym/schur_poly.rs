//! Schur functions in finitely many variables, super-Schur functions and
//! principal specializations.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::product::skew_schur;
use super::tables::tables;
use crate::error::{Error, Result};
use crate::partition::{subpartitions, Partition};
use crate::poly::{rat, MPoly, Monomial, Var};

type PolyCache = RwLock<HashMap<(Partition, Vec<Var>), Arc<MPoly>>>;

fn schur_cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Monomial symmetric polynomial `m_μ(x_1, …, x_k)`.
pub fn monomial_symmetric(mu: &Partition, vars: &[Var]) -> MPoly {
    if mu.len() > vars.len() {
        return MPoly::zero();
    }
    let mut exps: Vec<u32> = (0..vars.len()).map(|i| mu.get(i) as u32).collect();
    exps.sort_unstable();
    let mut out = MPoly::zero();
    // iterate over distinct permutations of the exponent multiset
    loop {
        let pairs: Vec<(Var, u32)> = vars.iter().copied().zip(exps.iter().copied()).collect();
        out.add_term(Monomial::new(&pairs), BigRational::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Schur polynomial `s_λ(x_1, …, x_k)`; zero when `ℓ(λ) > k`.
pub fn schur_poly(lam: &Partition, vars: &[Var]) -> MPoly {
    if lam.len() > vars.len() {
        return MPoly::zero();
    }
    if lam.is_empty() {
        return MPoly::one();
    }
    let key = (lam.clone(), vars.to_vec());
    if let Some(p) = schur_cache().read().unwrap().get(&key) {
        return (**p).clone();
    }
    let t = tables(lam.size());
    let i = t.index(lam);
    let mut out = MPoly::zero();
    for (j, mu) in t.parts.iter().enumerate() {
        let k = t.kostka[i][j];
        if k != 0 && mu.len() <= vars.len() {
            out += &monomial_symmetric(mu, vars).scale(&rat(k));
        }
    }
    schur_cache()
        .write()
        .unwrap()
        .insert(key, Arc::new(out.clone()));
    out
}

/// Skew Schur polynomial `s_{λ/ν}(x_1, …, x_k)`.
pub fn skew_schur_poly(lam: &Partition, nu: &Partition, vars: &[Var]) -> MPoly {
    skew_schur(lam, nu)
        .terms()
        .map(|(mu, c)| &schur_poly(mu, vars) * c)
        .sum()
}

/// The super-Schur function `s_θ[q − εu] = Σ_{ν⊆θ} s_ν(q) s_{θ'/ν'}(u)`.
pub fn super_schur(theta: &Partition, qvars: &[Var], uvars: &[Var]) -> MPoly {
    let tc = theta.conjugate();
    let mut out = MPoly::zero();
    for nu in subpartitions(theta) {
        let a = schur_poly(&nu, qvars);
        if a.is_zero() {
            continue;
        }
        let b = skew_schur_poly(&tc, &nu.conjugate(), uvars);
        out += &(&a * &b);
    }
    out
}

/// `super_schur` on the standard alphabets `q1..qk`, `u1..uj`.
pub fn super_schur_kj(theta: &Partition, k: usize, j: usize) -> MPoly {
    super_schur(theta, &Var::qs(k), &Var::us(j))
}

/// `s_λ(1^k)` by the hook-content formula.
pub fn schur_at_ones(lam: &Partition, k: usize) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (a, b) in lam.cells() {
        let c = k as i64 + a as i64 - b as i64;
        if c <= 0 {
            return BigRational::zero();
        }
        num *= c;
        den *= lam.hook_length(a, b);
    }
    BigRational::new(num, den)
}

/// `s_λ(1^x)` as a polynomial in the formal variable `x`.
pub fn schur_at_ones_formal(lam: &Partition, x: Var) -> MPoly {
    let mut out = MPoly::one();
    let mut den = BigInt::one();
    for (a, b) in lam.cells() {
        out = &out * &(&MPoly::var(x) + &MPoly::int(a as i64 - b as i64));
        den *= lam.hook_length(a, b);
    }
    out.scale(&BigRational::new(BigInt::one(), den))
}

/// `s_{λ/ν}(1^k)`.
pub fn skew_schur_at_ones(lam: &Partition, nu: &Partition, k: usize) -> BigRational {
    skew_schur(lam, nu)
        .terms()
        .fold(BigRational::zero(), |acc, (mu, c)| {
            acc + c.constant_term() * schur_at_ones(mu, k)
        })
}

/// `s_θ[q − εu]` with every letter set to one.
pub fn super_schur_at_ones(theta: &Partition, k: usize, j: usize) -> BigRational {
    let tc = theta.conjugate();
    subpartitions(theta)
        .iter()
        .map(|nu| {
            let a = schur_at_ones(nu, k);
            if a.is_zero() {
                a
            } else {
                a * skew_schur_at_ones(&tc, &nu.conjugate(), j)
            }
        })
        .fold(BigRational::zero(), |x, y| x + y)
}

/// `s_θ[q − εu]` at all-ones alphabets of formal sizes `k` and `j`.
pub fn super_schur_at_ones_formal(theta: &Partition) -> MPoly {
    let tc = theta.conjugate();
    let mut out = MPoly::zero();
    for nu in subpartitions(theta) {
        let a = schur_at_ones_formal(&nu, Var::K);
        let b: MPoly = skew_schur(&tc, &nu.conjugate())
            .terms()
            .map(|(mu, c)| &schur_at_ones_formal(mu, Var::J) * c)
            .sum();
        out += &(&a * &b);
    }
    out
}

/// Expands a polynomial, symmetric separately in `qvars` and in `uvars`, as
/// `Σ c_{λρ} s_λ(q) s_ρ(u)`.
///
/// Peels off the lexicographically leading monomial `q^λ u^ρ`, whose
/// coefficient is `c_{λρ}`, until nothing is left.
pub fn schur_expand(
    poly: &MPoly,
    qvars: &[Var],
    uvars: &[Var],
) -> Result<BTreeMap<(Partition, Partition), BigRational>> {
    type Key = (Vec<u32>, Vec<u32>);
    let mut rest: BTreeMap<Key, BigRational> = BTreeMap::new();
    let key_of = |m: &Monomial| -> Result<Key> {
        let mut qe = vec![0u32; qvars.len()];
        let mut ue = vec![0u32; uvars.len()];
        for &(v, e) in m.pairs() {
            if let Some(i) = qvars.iter().position(|&w| w == v) {
                qe[i] = e;
            } else if let Some(i) = uvars.iter().position(|&w| w == v) {
                ue[i] = e;
            } else {
                return Err(Error::AlphabetMismatch(format!(
                    "variable {v} outside the expansion alphabets"
                )));
            }
        }
        Ok((qe, ue))
    };
    for (m, c) in poly.terms() {
        rest.insert(key_of(m)?, c.clone());
    }
    let mut out = BTreeMap::new();
    while let Some((key, c)) = rest.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
        let dominant = |v: &[u32]| v.windows(2).all(|w| w[0] >= w[1]);
        if !dominant(&key.0) || !dominant(&key.1) {
            return Err(Error::AlphabetMismatch(format!(
                "polynomial is not symmetric (leading exponents {key:?})"
            )));
        }
        let lam = Partition::from_unsorted(key.0.iter().map(|&e| e as usize).collect());
        let rho = Partition::from_unsorted(key.1.iter().map(|&e| e as usize).collect());
        let s = &schur_poly(&lam, qvars) * &schur_poly(&rho, uvars);
        for (m, d) in s.terms() {
            let k = key_of(m)?;
            let entry = rest.entry(k.clone()).or_insert_with(BigRational::zero);
            *entry -= &c * d;
            if entry.is_zero() {
                rest.remove(&k);
            }
        }
        out.insert((lam, rho), c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_schur_polynomials() {
        let x = Var::qs(2);
        assert_eq!(schur_poly(&pt(&[2, 1]), &x), p("q1^2*q2 + q1*q2^2"));
        assert_eq!(schur_poly(&pt(&[1, 1, 1]), &x), MPoly::zero());
        assert_eq!(schur_poly(&pt(&[2]), &x), p("q1^2 + q1*q2 + q2^2"));
    }

    #[test]
    fn principal_values() {
        assert_eq!(schur_at_ones(&pt(&[2]), 1), rat(1));
        assert_eq!(schur_at_ones(&pt(&[1, 1]), 1), rat(0));
        assert_eq!(schur_at_ones(&pt(&[2, 1]), 2), rat(2));
        for n in 0..=5 {
            for lam in partitions_of(n) {
                for k in 0..=4 {
                    let direct = schur_poly(&lam, &Var::qs(k)).at_ones();
                    assert_eq!(schur_at_ones(&lam, k), direct);
                    let formal = schur_at_ones_formal(&lam, Var::K).eval(|_| rat(k as i64));
                    assert_eq!(formal, direct);
                }
            }
        }
    }

    #[test]
    fn super_schur_examples() {
        assert_eq!(super_schur_kj(&pt(&[1]), 1, 1), p("q1 + u1"));
        // single bosonic and single fermionic letter, θ = (1,1,1)
        assert_eq!(super_schur_kj(&pt(&[1, 1, 1]), 1, 1), p("q1*u1^2 + u1^3"));
        let two = super_schur_kj(&pt(&[2]), 2, 2);
        let expect = &(&schur_poly(&pt(&[2]), &Var::qs(2))
            + &(&schur_poly(&pt(&[1]), &Var::qs(2)) * &schur_poly(&pt(&[1]), &Var::us(2))))
            + &schur_poly(&pt(&[1, 1]), &Var::us(2));
        assert_eq!(two, expect);
    }

    #[test]
    fn super_schur_degenerations() {
        for n in 0..=4 {
            for th in partitions_of(n) {
                assert_eq!(super_schur_kj(&th, 3, 0), schur_poly(&th, &Var::qs(3)));
                assert_eq!(
                    super_schur_kj(&th, 0, 3),
                    schur_poly(&th.conjugate(), &Var::us(3))
                );
            }
        }
    }

    #[test]
    fn super_schur_at_ones_agrees() {
        for n in 0..=4 {
            for th in partitions_of(n) {
                for (k, j) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
                    let direct = super_schur_kj(&th, k, j).at_ones();
                    assert_eq!(super_schur_at_ones(&th, k, j), direct);
                    let formal = super_schur_at_ones_formal(&th).eval(|v| {
                        if v == Var::K {
                            rat(k as i64)
                        } else {
                            rat(j as i64)
                        }
                    });
                    assert_eq!(formal, direct);
                }
            }
        }
    }

    #[test]
    fn expansion_round_trip() {
        let q = Var::qs(3);
        let u = Var::us(2);
        let poly = &(&schur_poly(&pt(&[2, 1]), &q) * &schur_poly(&pt(&[1]), &u)).scale(&rat(3))
            + &schur_poly(&pt(&[3]), &q);
        let e = schur_expand(&poly, &q, &u).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[&(pt(&[2, 1]), pt(&[1]))], rat(3));
        assert_eq!(e[&(pt(&[3]), pt(&[]))], rat(1));
        assert!(schur_expand(&p("q1"), &q, &u).is_err());
    }
}
