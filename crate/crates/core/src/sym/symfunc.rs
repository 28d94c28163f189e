use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use super::tables::tables;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{rat, MPoly};

/// Linear basis of the ring of symmetric functions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
    /// Modified Macdonald functions; coefficients live in `q, t`.
    HTilde,
}

impl Basis {
    pub fn prefix(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
            Basis::HTilde => "H",
        }
    }

    fn from_prefix(s: &str) -> Result<Basis> {
        Ok(match s {
            "m" => Basis::M,
            "e" => Basis::E,
            "h" => Basis::H,
            "p" => Basis::P,
            "s" => Basis::S,
            "H" => Basis::HTilde,
            _ => return Err(Error::Parse(format!("unknown basis `{s}`"))),
        })
    }
}

/// A finite combination of basis elements with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, MPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> SymFunc {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> SymFunc {
        SymFunc::s(Partition::empty())
    }

    pub fn element(basis: Basis, p: Partition) -> SymFunc {
        SymFunc::from_terms(basis, [(p, MPoly::one())])
    }

    pub fn s(p: Partition) -> SymFunc {
        SymFunc::element(Basis::S, p)
    }

    pub fn p(p: Partition) -> SymFunc {
        SymFunc::element(Basis::P, p)
    }

    pub fn m(p: Partition) -> SymFunc {
        SymFunc::element(Basis::M, p)
    }

    /// `h_n`.
    pub fn h_n(n: usize) -> SymFunc {
        SymFunc::element(Basis::H, Partition::row(n))
    }

    /// `e_n`.
    pub fn e_n(n: usize) -> SymFunc {
        SymFunc::element(Basis::E, Partition::row(n))
    }

    /// `p_n`.
    pub fn p_n(n: usize) -> SymFunc {
        SymFunc::element(Basis::P, Partition::row(n))
    }

    pub fn from_terms(basis: Basis, iter: impl IntoIterator<Item = (Partition, MPoly)>) -> SymFunc {
        let mut f = SymFunc::zero(basis);
        for (p, c) in iter {
            f.add_term(p, &c);
        }
        f
    }

    pub fn add_term(&mut self, p: Partition, c: &MPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &MPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, p: &Partition) -> MPoly {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, or `None` when mixed or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::size);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn scale(&self, c: &MPoly) -> SymFunc {
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_rat(&self, c: &BigRational) -> SymFunc {
        self.map_coeffs(|x| x.scale(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&MPoly) -> MPoly) -> SymFunc {
        SymFunc::from_terms(
            self.basis,
            self.terms.iter().map(|(p, c)| (p.clone(), f(c))),
        )
    }

    /// Degree `d` component.
    pub fn component(&self, d: usize) -> SymFunc {
        SymFunc::from_terms(
            self.basis,
            self.terms
                .iter()
                .filter(|(p, _)| p.size() == d)
                .map(|(p, c)| (p.clone(), c.clone())),
        )
    }

    /// Re-expresses in the Schur basis.
    pub fn to_s(&self) -> SymFunc {
        if self.basis == Basis::S {
            return self.clone();
        }
        if self.basis == Basis::HTilde {
            return crate::macdonald::htilde_to_s(self);
        }
        let mut out = SymFunc::zero(Basis::S);
        for (mu, c) in &self.terms {
            let t = tables(mu.size());
            let j = t.index(mu);
            for (i, lam) in t.parts.iter().enumerate() {
                let x = match self.basis {
                    Basis::H => t.kostka[i][j],
                    Basis::E => t.kostka[t.conj[i]][j],
                    Basis::M => t.kostka_inv[j][i],
                    Basis::P => t.chi[i][j],
                    Basis::S | Basis::HTilde => unreachable!(),
                };
                if x != 0 {
                    out.add_term(lam.clone(), &c.scale(&rat(x)));
                }
            }
        }
        out
    }

    /// Re-expresses in a classical basis. The modified Macdonald basis is
    /// handled by [`crate::macdonald::expand_in_macdonald`] because its
    /// coefficients are rational functions.
    pub fn convert(&self, target: Basis) -> Result<SymFunc> {
        if target == self.basis {
            return Ok(self.clone());
        }
        if target == Basis::HTilde {
            return Err(Error::Unsupported("conversion into the modified Macdonald basis yields rational coefficients; use expand_in_macdonald".into()));
        }
        let s = self.to_s();
        if target == Basis::S {
            return Ok(s);
        }
        let mut out = SymFunc::zero(target);
        for (lam, c) in &s.terms {
            let t = tables(lam.size());
            let i = t.index(lam);
            for (j, mu) in t.parts.iter().enumerate() {
                let x: BigRational = match target {
                    Basis::M => rat(t.kostka[i][j]),
                    Basis::H => rat(t.kostka_inv[j][i]),
                    Basis::E => rat(t.kostka_inv[j][t.conj[i]]),
                    Basis::P => BigRational::new(t.chi[i][j].into(), t.z[j].clone()),
                    Basis::S | Basis::HTilde => unreachable!(),
                };
                if !x.is_zero() {
                    out.add_term(mu.clone(), &c.scale(&x));
                }
            }
        }
        Ok(out)
    }

    /// Equality as symmetric functions, regardless of basis.
    pub fn equals(&self, other: &SymFunc) -> bool {
        if self.basis == other.basis {
            return self == other;
        }
        self.to_s() == other.to_s()
    }

    /// Replaces each Schur function `s_μ` by the number `f^μ` of standard
    /// tableaux, i.e. takes the dimension of the represented module.
    pub fn drop_z(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (mu, c) in &self.to_s().terms {
            let f = mu.count_syt().unwrap_or_else(|_| 1.into());
            out += &c.scale(&BigRational::from_integer(f));
        }
        out
    }

    fn aligned(&self, other: &SymFunc) -> (SymFunc, SymFunc) {
        if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (self.to_s(), other.to_s())
        }
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let (mut a, b) = self.aligned(rhs);
        for (p, c) in b.terms {
            a.add_term(p, &c);
        }
        a
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: SymFunc) -> SymFunc {
        &self + &rhs
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

/// One line per term, `s[2,1] : q^2 + q`, sorted by partition. The zero
/// function renders as `0`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (p, c) in &self.terms {
            writeln!(f, "{}{} : {}", self.basis.prefix(), p, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_string();
        write!(f, "{}", s.trim_end().replace('\n', "; "))
    }
}

impl FromStr for SymFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<SymFunc> {
        let mut basis = None;
        let mut terms = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if line == "0" {
                continue;
            }
            let (head, poly) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("missing `:` in `{line}`")))?;
            let head = head.trim();
            let open = head
                .find('[')
                .ok_or_else(|| Error::Parse(format!("missing partition in `{line}`")))?;
            let b = Basis::from_prefix(&head[..open])?;
            if basis.is_some_and(|x| x != b) {
                return Err(Error::Parse("mixed bases".into()));
            }
            basis = Some(b);
            terms.push((
                head[open..].parse::<Partition>()?,
                poly.trim().parse::<MPoly>()?,
            ));
        }
        Ok(SymFunc::from_terms(basis.unwrap_or(Basis::S), terms))
    }
}
