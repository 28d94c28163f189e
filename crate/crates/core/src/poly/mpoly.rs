use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::var::Var;
use crate::error::{Error, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A power product stored as `(variable, exponent)` pairs sorted by variable,
/// with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(pairs: &[(Var, u32)]) -> Self {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for &(v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Splits into the part in `vars` and the rest.
    pub fn split(&self, vars: &BTreeSet<Var>) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|(v, _)| vars.contains(v));
        (Monomial(a), Monomial(b))
    }

    fn without(&self, v: Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        (
            e,
            Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect()),
        )
    }
}

/// Graded lexicographic order: total degree first, then the larger exponent
/// of the earliest variable wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly { terms }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(BigRational::one(), Monomial::var(v))
    }

    pub fn monomial(pairs: &[(Var, u32)]) -> Self {
        Self::term(BigRational::one(), Monomial::new(pairs))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_constant() {
            Some(self.coefficient(&Monomial::one()))
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Monomial::one())
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Leading term in graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Keeps the terms of total degree at most `cap`.
    pub fn truncate(&self, cap: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms whose total degree in `vars` is at most `cap`.
    pub fn truncate_in(&self, vars: &[Var], cap: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().map(|&v| m.exponent(v)).sum::<u32>() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product truncated to total degree `cap`.
    pub fn mul_truncated(&self, other: &MPoly, cap: u32) -> MPoly {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, a) in &self.terms {
            let dm = m.degree();
            if dm > cap {
                continue;
            }
            for (n, b) in &other.terms {
                if dm + n.degree() > cap {
                    continue;
                }
                *acc.entry(m.mul(n)).or_insert_with(BigRational::zero) += a * b;
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Replaces `v` by `value`.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        let mut powers: Vec<MPoly> = vec![MPoly::one()];
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.without(v);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out += &powers[e as usize].mul_monomial(&rest).scale(c);
        }
        out
    }

    /// Substitutes rational values for the listed variables.
    pub fn eval_partial(&self, values: &HashMap<Var, BigRational>) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.pairs() {
                match values.get(&v) {
                    Some(x) => coeff *= num_traits::pow(x.clone(), e as usize),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// Evaluates with every variable replaced by `value(v)`.
    pub fn eval(&self, value: impl Fn(Var) -> BigRational) -> BigRational {
        let mut cache: HashMap<(Var, u32), BigRational> = HashMap::new();
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let p = cache
                    .entry((v, e))
                    .or_insert_with(|| num_traits::pow(value(v), e as usize));
                t *= &*p;
            }
            acc += t;
        }
        acc
    }

    /// Sets every variable to one.
    pub fn at_ones(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    pub fn rename(&self, map: &BTreeMap<Var, Var>) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let pairs: Vec<(Var, u32)> = m
                .pairs()
                .iter()
                .map(|&(v, e)| (*map.get(&v).unwrap_or(&v), e))
                .collect();
            (Monomial::new(&pairs), c.clone())
        }))
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> MPoly {
        let map = BTreeMap::from([(a, b), (b, a)]);
        self.rename(&map)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        let (lm, lc) = divisor.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(&lm)?;
            let c = rc / &lc;
            let t = MPoly::term(c.clone(), m.clone());
            rem -= &(&t * divisor);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Writes `self = factor · primitive` with `primitive` integral, its
    /// coefficients coprime and its leading coefficient positive.
    pub fn integer_primitive(&self) -> (BigRational, MPoly) {
        if self.is_zero() {
            return (BigRational::one(), MPoly::zero());
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut factor = BigRational::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            factor = -factor;
        }
        let prim = self.scale(&factor.recip());
        (factor, prim)
    }

    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Coefficients in `v`: entry `i` is the coefficient of `v^i`.
    pub fn as_univariate(&self, v: Var) -> Vec<MPoly> {
        let mut out: Vec<MPoly> = vec![MPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.without(v);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    pub fn from_univariate(coeffs: &[MPoly], v: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            out += &c.mul_monomial(&Monomial::new(&[(v, i as u32)]));
        }
        out
    }

    /// Groups terms by their monomial outside `vars`.
    pub fn split_by_outer(&self, vars: &BTreeSet<Var>) -> BTreeMap<Monomial, MPoly> {
        let mut out: BTreeMap<Monomial, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inner, outer) = m.split(vars);
            out.entry(outer).or_default().add_term(inner, c.clone());
        }
        out
    }

    /// Formal power-series quotient `self / den` truncated at total degree
    /// `cap`; `den` must have a nonzero constant term.
    pub fn series_div(&self, den: &MPoly, cap: u32) -> Result<MPoly> {
        let c0 = den.constant_term();
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv0 = c0.recip();
        let rest = den - &MPoly::constant(c0);
        let mut quot = MPoly::zero();
        let num = self.truncate(cap);
        for d in 0..=cap {
            // degree-d part of quot = (num_d - Σ rest_e quot_{d-e}) / c0
            let mut part = MPoly {
                terms: num
                    .terms
                    .iter()
                    .filter(|(m, _)| m.degree() == d)
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect(),
            };
            for (m, c) in &rest.terms {
                let e = m.degree();
                if e > d {
                    continue;
                }
                for (qm, qc) in quot.terms.iter().filter(|(qm, _)| qm.degree() == d - e) {
                    part.add_term(m.mul(qm), -(c * qc));
                }
            }
            for (m, c) in part.terms {
                quot.add_term(m, c * &inv0);
            }
        }
        Ok(quot)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MPoly> {
        Parser {
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
        .poly()
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at position {} in `{}`",
            self.pos,
            self.chars.iter().collect::<String>()
        ))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn poly(mut self) -> Result<MPoly> {
        let mut out = MPoly::zero();
        if self.chars.is_empty() {
            return Err(self.err("empty polynomial"));
        }
        let mut sign = 1;
        if self.peek() == Some('-') {
            sign = -1;
            self.pos += 1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let (c, m) = self.term()?;
            out.add_term(m, c * rat(sign));
            match self.peek() {
                None => break,
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn number(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>()
            .map_err(|_| self.err("expected a number"))
    }

    fn term(&mut self) -> Result<(BigRational, Monomial)> {
        let mut coeff = BigRational::one();
        let mut pairs = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.number()?;
                    let mut value = BigRational::from_integer(num);
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        let den = self.number()?;
                        if den.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        value /= BigRational::from_integer(den);
                    }
                    coeff *= value;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let start = self.pos;
                    self.pos += 1;
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let name: String = self.chars[start..self.pos].iter().collect();
                    let v: Var = name.parse()?;
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        e = self
                            .number()?
                            .try_into()
                            .map_err(|_| self.err("exponent too large"))?;
                    }
                    pairs.push((v, e));
                }
                _ => return Err(self.err("expected a factor")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Monomial::new(&pairs)))
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                *acc.entry(m.mul(n)).or_insert_with(BigRational::zero) += a * b;
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        let mut out = MPoly::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

impl From<BigRational> for MPoly {
    fn from(c: BigRational) -> Self {
        MPoly::constant(c)
    }
}

impl From<BigInt> for MPoly {
    fn from(c: BigInt) -> Self {
        MPoly::constant(BigRational::from_integer(c))
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::int(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("q + t") * &p("q - t"), p("q^2 - t^2"));
    }

    #[test]
    fn substitution() {
        assert_eq!(p("q^2 + q*t").substitute(Var::Q, &MPoly::one()), p("1 + t"));
        assert_eq!(p("q^2").substitute(Var::Q, &p("t + 1")), p("t^2 + 2*t + 1"));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p("1 + t*q^2*2").to_string(), "2*q^2*t + 1");
        assert_eq!(p("t - q").to_string(), "-q + t");
        assert_eq!(p("1/2*q1*u1^2 - 3").to_string(), "1/2*q1*u1^2 - 3");
        assert_eq!(MPoly::zero().to_string(), "0");
        assert_eq!(
            p("q + t + u + v + q1 + u1").to_string(),
            "q + t + u + v + q1 + u1"
        );
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(&[(Var::Q, 2)]);
        let b = Monomial::new(&[(Var::Q, 1), (Var::T, 1)]);
        let c = Monomial::new(&[(Var::T, 2)]);
        assert!(a > b && b > c);
        assert!(Monomial::new(&[(Var::T, 3)]) > a);
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("q^2 - 1").div_exact(&p("q - 1")), Some(p("q + 1")));
        assert_eq!(p("q^2 + 1").div_exact(&p("q - 1")), None);
        let a = p("q^3*t - 2*q*t^2 + t + 5");
        let b = p("q*t - t^2 + 3");
        assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn series_division() {
        // 1/(1-q) = 1 + q + q^2 + q^3 up to degree 3
        let one = MPoly::one();
        let s = one.series_div(&p("1 - q"), 3).unwrap();
        assert_eq!(s, p("1 + q + q^2 + q^3"));
        assert!(one.series_div(&p("q"), 3).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<MPoly>().is_err());
        assert!("q +".parse::<MPoly>().is_err());
        assert!("x".parse::<MPoly>().is_err());
        assert!("1/0".parse::<MPoly>().is_err());
    }

    #[test]
    fn self_subtraction_normalizes_to_zero() {
        let a = p("3*q^2*t - 1/5*u1 + 7");
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).num_terms(), 0);
    }

    fn arb_poly() -> impl proptest::strategy::Strategy<Value = MPoly> {
        use proptest::prelude::*;
        proptest::collection::vec((-4i64..=4, 0u32..=2, 0u32..=2, 0u32..=1), 0..5).prop_map(|ts| {
            MPoly::from_terms(ts.into_iter().map(|(c, a, b, e)| {
                (
                    Monomial::new(&[(Var::Q, a), (Var::T, b), (Var::u(1), e)]),
                    rat(c),
                )
            }))
        })
    }

    proptest::proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            proptest::prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            proptest::prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            proptest::prop_assert_eq!(&a * &b, &b * &a);
            proptest::prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            let back: MPoly = a.to_string().parse().unwrap();
            proptest::prop_assert_eq!(back, a);
        }
    }
}
