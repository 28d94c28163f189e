//! Monomials of the superspace ring in `k` rows of commuting variables and
//! `j` rows of anticommuting variables, each row having `n` columns.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

const FIELD: u32 = 4;
const MAX_EXP: u32 = (1 << FIELD) - 1;

/// A canonical monomial `x^A θ_{f1} θ_{f2} ⋯` with the `θ` factors ordered by
/// `(row, column)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SuperMonomial {
    /// Exponent matrix of the commuting variables, `k × n`.
    pub x: Vec<Vec<u32>>,
    /// Support of the anticommuting variables, `j × n`.
    pub theta: Vec<Vec<bool>>,
}

impl SuperMonomial {
    /// Row degrees, commuting rows first.
    pub fn multidegree(&self) -> Vec<usize> {
        let a = self.x.iter().map(|r| r.iter().sum::<u32>() as usize);
        let b = self.theta.iter().map(|r| r.iter().filter(|&&v| v).count());
        a.chain(b).collect()
    }
}

/// `x11^2*x12*θ21`, or `1`.
impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (a, row) in self.x.iter().enumerate() {
            for (i, &e) in row.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}{}", a + 1, i + 1)),
                    _ => factors.push(format!("x{}{}^{e}", a + 1, i + 1)),
                }
            }
        }
        for (b, row) in self.theta.iter().enumerate() {
            for (i, &on) in row.iter().enumerate() {
                if on {
                    factors.push(format!("θ{}{}", b + 1, i + 1));
                }
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// Packed encoding of monomials as `u128` keys. Commuting slots take four
/// bits each starting from the top, then one bit per anticommuting slot, so
/// numeric order is lexicographic order on exponent vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ring {
    pub k: usize,
    pub j: usize,
    pub n: usize,
}

pub type Key = u128;

/// Sparse vector over monomials.
pub type Vector = BTreeMap<Key, BigRational>;

impl Ring {
    pub fn new(k: usize, j: usize, n: usize) -> Result<Ring> {
        if k * n * FIELD as usize + j * n > 128 {
            return Err(Error::ResourceCap(format!(
                "ring with k={k}, j={j}, n={n} is too large for the packed encoding"
            )));
        }
        Ok(Ring { k, j, n })
    }

    fn x_shift(&self, a: usize, i: usize) -> u32 {
        128 - FIELD * (a * self.n + i + 1) as u32
    }

    fn f_bit(&self, f: usize) -> u32 {
        128 - FIELD * (self.k * self.n) as u32 - 1 - f as u32
    }

    pub fn x_exp(&self, key: Key, a: usize, i: usize) -> u32 {
        ((key >> self.x_shift(a, i)) & MAX_EXP as u128) as u32
    }

    pub fn has_theta(&self, key: Key, b: usize, i: usize) -> bool {
        key >> self.f_bit(b * self.n + i) & 1 == 1
    }

    pub fn encode(&self, m: &SuperMonomial) -> Result<Key> {
        let mut key = 0u128;
        for (a, row) in m.x.iter().enumerate() {
            for (i, &e) in row.iter().enumerate() {
                if e > MAX_EXP {
                    return Err(Error::ResourceCap(format!(
                        "exponent {e} exceeds the packed encoding"
                    )));
                }
                key |= (e as u128) << self.x_shift(a, i);
            }
        }
        for (b, row) in m.theta.iter().enumerate() {
            for (i, &on) in row.iter().enumerate() {
                if on {
                    key |= 1 << self.f_bit(b * self.n + i);
                }
            }
        }
        Ok(key)
    }

    pub fn decode(&self, key: Key) -> SuperMonomial {
        SuperMonomial {
            x: (0..self.k)
                .map(|a| (0..self.n).map(|i| self.x_exp(key, a, i)).collect())
                .collect(),
            theta: (0..self.j)
                .map(|b| (0..self.n).map(|i| self.has_theta(key, b, i)).collect())
                .collect(),
        }
    }

    /// `v · m` for the commuting variable in row `a`, column `i`.
    pub fn mul_x(&self, key: Key, a: usize, i: usize) -> Key {
        debug_assert!(self.x_exp(key, a, i) < MAX_EXP);
        key + (1 << self.x_shift(a, i))
    }

    /// `θ · m` for the anticommuting variable in row `b`, column `i`, with
    /// the sign of moving it into place; `None` when the product vanishes.
    pub fn mul_theta(&self, key: Key, b: usize, i: usize) -> Option<(bool, Key)> {
        let f = b * self.n + i;
        let bit = self.f_bit(f);
        if key >> bit & 1 == 1 {
            return None;
        }
        // factors before position f in canonical order sit at higher bits
        let top = 128 - FIELD * (self.k * self.n) as u32;
        let below_top = if top == 128 {
            !0u128
        } else {
            (1u128 << top) - 1
        };
        let upto_bit = if bit == 127 {
            !0u128
        } else {
            (1u128 << (bit + 1)) - 1
        };
        let mask = below_top & !upto_bit;
        let negative = (key & mask).count_ones() % 2 == 1;
        Some((negative, key | 1 << bit))
    }

    /// Relabels commuting rows by `xrows`, anticommuting rows by `frows` and
    /// columns by `cols` (all maps old index → new index). Returns the sign
    /// of restoring canonical order and the new key.
    pub fn transform(
        &self,
        key: Key,
        xrows: &[usize],
        frows: &[usize],
        cols: &[usize],
    ) -> (bool, Key) {
        let mut out = 0u128;
        for a in 0..self.k {
            for i in 0..self.n {
                let e = self.x_exp(key, a, i);
                if e != 0 {
                    out |= (e as u128) << self.x_shift(xrows[a], cols[i]);
                }
            }
        }
        // images of the odd factors in their original order
        let mut images = Vec::new();
        for b in 0..self.j {
            for i in 0..self.n {
                if self.has_theta(key, b, i) {
                    let g = frows[b] * self.n + cols[i];
                    images.push(g);
                    out |= 1 << self.f_bit(g);
                }
            }
        }
        let mut inversions = 0;
        for x in 0..images.len() {
            for y in x + 1..images.len() {
                if images[x] > images[y] {
                    inversions += 1;
                }
            }
        }
        (inversions % 2 == 1, out)
    }

    /// Acts by a column permutation given as a map `i → σ(i)`.
    pub fn act(&self, key: Key, sigma: &[usize]) -> (bool, Key) {
        let xrows: Vec<usize> = (0..self.k).collect();
        let frows: Vec<usize> = (0..self.j).collect();
        self.transform(key, &xrows, &frows, sigma)
    }

    /// All canonical monomials of the given multidegree in increasing key
    /// order.
    pub fn monomials(&self, degree: &[usize]) -> Vec<Key> {
        assert_eq!(degree.len(), self.k + self.j);
        let mut keys = vec![0u128];
        for (a, &d) in degree[..self.k].iter().enumerate() {
            let mut next = Vec::new();
            for comp in compositions(d, self.n) {
                let mut part = 0u128;
                for (i, &e) in comp.iter().enumerate() {
                    part |= (e as u128) << self.x_shift(a, i);
                }
                next.extend(keys.iter().map(|k| k | part));
            }
            keys = next;
        }
        for (b, &d) in degree[self.k..].iter().enumerate() {
            let mut next = Vec::new();
            for subset in subsets(self.n, d) {
                let mut part = 0u128;
                for i in subset {
                    part |= 1 << self.f_bit(b * self.n + i);
                }
                next.extend(keys.iter().map(|k| k | part));
            }
            keys = next;
        }
        keys.sort_unstable();
        keys
    }

    pub fn fits(&self, degree: &[usize]) -> bool {
        degree[..self.k].iter().all(|&d| d as u32 <= MAX_EXP)
            && degree[self.k..].iter().all(|&d| d <= self.n)
    }
}

/// Compositions of `d` into `parts` nonnegative parts.
pub fn compositions(d: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `d`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, d, &mut Vec::new(), &mut out);
    out
}

/// All permutations of `0..n` as maps `i → σ(i)`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub(crate) fn add_scaled(v: &mut Vector, key: Key, c: &BigRational) {
    let e = v.entry(key).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&key);
    }
}

pub(crate) fn signed(negative: bool) -> BigRational {
    if negative {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

/// All canonical monomials of multidegree `degree`.
pub fn super_monomials(
    k: usize,
    j: usize,
    n: usize,
    degree: &[usize],
) -> Result<Vec<SuperMonomial>> {
    let ring = Ring::new(k, j, n)?;
    if degree.len() != k + j {
        return Err(Error::DegreeMismatch(format!(
            "multidegree has {} entries, expected {}",
            degree.len(),
            k + j
        )));
    }
    if !ring.fits(degree) {
        return Ok(Vec::new());
    }
    Ok(ring
        .monomials(degree)
        .into_iter()
        .map(|key| ring.decode(key))
        .collect())
}

/// `σ · m` as a sign (`true` for negative) and a canonical monomial; `σ` maps
/// column `i` to `σ(i)`.
pub fn apply_sigma(m: &SuperMonomial, sigma: &[usize]) -> Result<(bool, SuperMonomial)> {
    let k = m.x.len();
    let j = m.theta.len();
    let n = sigma.len();
    let ring = Ring::new(k, j, n)?;
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return Err(Error::Parse(format!("{sigma:?} is not a permutation")));
        }
    }
    let (neg, key) = ring.act(ring.encode(m)?, sigma);
    Ok((neg, ring.decode(key)))
}
