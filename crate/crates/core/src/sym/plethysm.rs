//! Plethystic substitution through power sums.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::symfunc::{Basis, SymFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{MPoly, Monomial, Var};

/// A formal alphabet `Σ c · ε^e · p_ρ(Z)` with polynomial coefficients `c`.
///
/// The sign letter `ε` satisfies `p_k[ε] = (-1)^k` and `ε² = 1`. Alphabets
/// built from geometric series are flagged so that plethysm can insist on a
/// degree cap.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Alphabet {
    terms: BTreeMap<(Partition, bool), MPoly>,
    series: bool,
}

impl Alphabet {
    pub fn zero() -> Alphabet {
        Alphabet::default()
    }

    fn single(rho: Partition, eps: bool, c: MPoly) -> Alphabet {
        let mut a = Alphabet::zero();
        a.add_term(rho, eps, &c);
        a
    }

    fn add_term(&mut self, rho: Partition, eps: bool, c: &MPoly) {
        let key = (rho, eps);
        let e = self.terms.entry(key.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// The alphabet `Z` of the symmetric-function variables.
    pub fn z() -> Alphabet {
        Alphabet::single(Partition::row(1), false, MPoly::one())
    }

    /// A scalar alphabet: each monomial of `c` is one letter, weighted by
    /// its coefficient.
    pub fn scalar(c: MPoly) -> Alphabet {
        Alphabet::single(Partition::empty(), false, c)
    }

    /// The letters `x_1 + … + x_k`.
    pub fn letters(vars: &[Var]) -> Alphabet {
        Alphabet::scalar(vars.iter().map(|&v| MPoly::var(v)).sum())
    }

    /// The sign letter `ε`.
    pub fn epsilon() -> Alphabet {
        Alphabet::single(Partition::empty(), true, MPoly::one())
    }

    /// `1/(1 − m) = Σ_{i ≤ cap} m^i` for a monomial `m`.
    pub fn geometric(m: &Monomial, cap: u32) -> Alphabet {
        let d = m.degree().max(1);
        let terms: MPoly = (0..=cap / d)
            .map(|i| MPoly::term(BigRational::from_integer(1.into()), m.pow(i)))
            .sum();
        let mut a = Alphabet::scalar(terms);
        a.series = true;
        a
    }

    /// `Ω(x_1..x_k) = Π 1/(1 − x_i)`: every monomial of degree at most `cap`.
    pub fn omega(vars: &[Var], cap: u32) -> Alphabet {
        let mut total = MPoly::one();
        for &v in vars {
            total = total.mul_truncated(
                &Alphabet::geometric(&Monomial::var(v), cap).scalar_part(),
                cap,
            );
        }
        let mut a = Alphabet::scalar(total);
        a.series = true;
        a
    }

    /// Reads a symmetric function in `Z` as an alphabet.
    pub fn from_symfunc(f: &SymFunc) -> Alphabet {
        let p = f
            .convert(Basis::P)
            .expect("power sums are a classical basis");
        let mut a = Alphabet::zero();
        for (rho, c) in p.terms() {
            a.add_term(rho.clone(), false, c);
        }
        a
    }

    pub fn is_series(&self) -> bool {
        self.series
    }

    fn scalar_part(&self) -> MPoly {
        self.terms
            .get(&(Partition::empty(), false))
            .cloned()
            .unwrap_or_default()
    }

    pub fn scale(&self, c: &MPoly) -> Alphabet {
        let mut a = Alphabet {
            terms: BTreeMap::new(),
            series: self.series,
        };
        for ((rho, eps), d) in &self.terms {
            a.add_term(rho.clone(), *eps, &(d * c));
        }
        a
    }

    /// `p_k[self]`, as a power-sum expansion truncated at `cap`.
    fn power(&self, k: usize, cap: Option<u32>) -> SymFunc {
        let mut out = SymFunc::zero(Basis::P);
        for ((rho, eps), c) in &self.terms {
            let mut ck = MPoly::zero();
            for (m, a) in c.terms() {
                let mk = m.pow(k as u32);
                if cap.is_some_and(|cap| mk.degree() > cap) {
                    continue;
                }
                ck.add_term(mk, a.clone());
            }
            if *eps && k % 2 == 1 {
                ck = -ck;
            }
            let scaled = Partition::from_unsorted(rho.parts().iter().map(|&r| r * k).collect());
            out.add_term(scaled, &ck);
        }
        out
    }
}

impl Add for &Alphabet {
    type Output = Alphabet;
    fn add(self, rhs: &Alphabet) -> Alphabet {
        let mut a = self.clone();
        a.series |= rhs.series;
        for ((rho, eps), c) in &rhs.terms {
            a.add_term(rho.clone(), *eps, c);
        }
        a
    }
}

impl Neg for &Alphabet {
    type Output = Alphabet;
    fn neg(self) -> Alphabet {
        self.scale(&MPoly::int(-1))
    }
}

impl Sub for &Alphabet {
    type Output = Alphabet;
    fn sub(self, rhs: &Alphabet) -> Alphabet {
        self + &(-rhs)
    }
}

impl Mul for &Alphabet {
    type Output = Alphabet;
    fn mul(self, rhs: &Alphabet) -> Alphabet {
        let mut a = Alphabet {
            terms: BTreeMap::new(),
            series: self.series || rhs.series,
        };
        for ((r1, e1), c1) in &self.terms {
            for ((r2, e2), c2) in &rhs.terms {
                let mut parts = r1.parts().to_vec();
                parts.extend_from_slice(r2.parts());
                a.add_term(Partition::from_unsorted(parts), e1 ^ e2, &(c1 * c2));
            }
        }
        a
    }
}

fn truncate(f: &SymFunc, cap: Option<u32>) -> SymFunc {
    match cap {
        None => f.clone(),
        Some(cap) => f.map_coeffs(|c| c.truncate(cap)),
    }
}

/// `f[A]` in the power-sum basis. Coefficients are truncated at total
/// parameter degree `cap` when one is given; series alphabets require it.
pub fn plethysm(f: &SymFunc, a: &Alphabet, cap: Option<u32>) -> Result<SymFunc> {
    if a.series && cap.is_none() {
        return Err(Error::MissingCap("plethysm into a series alphabet".into()));
    }
    let fp = f.convert(Basis::P)?;
    let mut powers: HashMap<usize, SymFunc> = HashMap::new();
    let mut products: HashMap<Vec<usize>, SymFunc> = HashMap::new();
    products.insert(Vec::new(), SymFunc::p(Partition::empty()));
    let mut out = SymFunc::zero(Basis::P);
    for (lam, c) in fp.terms() {
        // build Π_i p_{λ_i}[A] from the longest cached prefix
        let parts = lam.parts();
        let mut len = parts.len();
        while !products.contains_key(&parts[..len]) {
            len -= 1;
        }
        for i in len..parts.len() {
            let k = parts[i];
            let pk = powers.entry(k).or_insert_with(|| a.power(k, cap)).clone();
            let prev = &products[&parts[..i]];
            let next = truncate(&super::product::multiply_p(prev, &pk), cap);
            products.insert(parts[..=i].to_vec(), next);
        }
        let term = products[parts].scale(c);
        out = &out + &truncate(&term, cap);
    }
    Ok(out)
}

/// `f[A]` for an alphabet without `Z`, returned as a polynomial.
pub fn plethysm_scalar(f: &SymFunc, a: &Alphabet, cap: Option<u32>) -> Result<MPoly> {
    if a.terms.keys().any(|(rho, _)| !rho.is_empty()) {
        return Err(Error::AlphabetMismatch(
            "alphabet involves Z; use plethysm".into(),
        ));
    }
    let r = plethysm(f, a, cap)?;
    Ok(r.coefficient(&Partition::empty()))
}

/// `s_μ[Ω(q_1..q_k)]`, the multiplicity generating function of the
/// μ-isotypic part of polynomials in a `k × |μ|` matrix of variables,
/// truncated at degree `cap`.
pub fn polyring_coefficient(mu: &Partition, k: usize, cap: u32) -> Result<MPoly> {
    plethysm_scalar(
        &SymFunc::s(mu.clone()),
        &Alphabet::omega(&Var::qs(k), cap),
        Some(cap),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::poly::rat;
    use crate::sym::schur_poly::super_schur_kj;

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn power_sum_composition() {
        let r = plethysm(
            &SymFunc::p_n(2),
            &Alphabet::from_symfunc(&SymFunc::p_n(3)),
            None,
        )
        .unwrap();
        assert_eq!(r, SymFunc::p_n(6));
    }

    #[test]
    fn schur_plethysm_s2_s2() {
        let r = plethysm(
            &SymFunc::s(pt(&[2])),
            &Alphabet::from_symfunc(&SymFunc::s(pt(&[2]))),
            None,
        )
        .unwrap()
        .to_s();
        let expect = &SymFunc::s(pt(&[4])) + &SymFunc::s(pt(&[2, 2]));
        assert_eq!(r, expect);
    }

    #[test]
    fn series_requires_cap() {
        let a = &Alphabet::z() * &Alphabet::geometric(&Monomial::var(Var::Q), 3);
        assert!(matches!(
            plethysm(&SymFunc::h_n(2), &a, None),
            Err(Error::MissingCap(_))
        ));
        let r = plethysm(&SymFunc::h_n(2), &a, Some(3)).unwrap().to_s();
        let at_zero = r.map_coeffs(|c| c.substitute(Var::Q, &MPoly::zero()));
        assert_eq!(at_zero, SymFunc::h_n(2).to_s());
    }

    #[test]
    fn polyring_examples() {
        assert_eq!(
            polyring_coefficient(&pt(&[1]), 1, 3).unwrap(),
            "1 + q1 + q1^2 + q1^3".parse().unwrap()
        );
        let r = polyring_coefficient(&pt(&[3]), 2, 4).unwrap();
        assert_eq!(r.constant_term(), rat(1));
    }

    #[test]
    fn super_schur_two_ways() {
        let q = Var::qs(2);
        let u = Var::us(2);
        let alpha = &Alphabet::letters(&q) - &(&Alphabet::epsilon() * &Alphabet::letters(&u));
        for n in 0..=5 {
            for th in partitions_of(n) {
                let via = plethysm_scalar(&SymFunc::s(th.clone()), &alpha, None).unwrap();
                assert_eq!(via, super_schur_kj(&th, 2, 2), "{th}");
            }
        }
    }

    #[test]
    fn e3_single_letters() {
        let alpha = &Alphabet::letters(&[Var::q(1)])
            - &(&Alphabet::epsilon() * &Alphabet::letters(&[Var::u(1)]));
        let v = plethysm_scalar(&SymFunc::e_n(3), &alpha, None).unwrap();
        assert_eq!(v, "q1*u1^2 + u1^3".parse().unwrap());
    }
}
