//! Integer partitions, Young diagrams and standard tableaux.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{MPoly, Var};

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is by size first and then reverse-lexicographic, so
/// that `[3] < [2,1] < [1,1,1]` and sorted maps list partitions of the same
/// size in the order produced by [`partitions_of`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zero entries.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n - a, 1^a)`; requires `a < n`.
    pub fn hook(n: usize, a: usize) -> Self {
        assert!(a < n, "hook (n-a,1^a) needs a < n");
        let mut parts = vec![n - a];
        parts.extend(std::iter::repeat_n(1, a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.first());
        for c in 0..self.first() {
            parts.push(self.parts.iter().take_while(|&&p| p > c).count());
        }
        Partition { parts }
    }

    /// Young diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `Σ_i μ_i (i - 1)` with rows indexed from one.
    pub fn eta(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Cells as `(a, b)` with `a` the column (q direction) and `b` the row
    /// (t direction), both 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(b, &len)| (0..len).map(move |a| (a, b)))
    }

    /// Arm length of the cell at column `a`, row `b`.
    pub fn arm(&self, a: usize, b: usize) -> usize {
        self.parts[b] - a - 1
    }

    /// Leg length of the cell at column `a`, row `b`.
    pub fn leg(&self, a: usize, b: usize) -> usize {
        self.parts
            .iter()
            .skip(b + 1)
            .take_while(|&&p| p > a)
            .count()
    }

    pub fn hook_length(&self, a: usize, b: usize) -> usize {
        self.arm(a, b) + self.leg(a, b) + 1
    }

    /// Multiplicities `d_i` of each part size `i ≥ 1`, indexed by `i - 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut d = vec![0; self.first()];
        for &p in &self.parts {
            d[p - 1] += 1;
        }
        d
    }

    /// `z_λ = Π_i i^{d_i} d_i!`, the centralizer order of a permutation of
    /// cycle type λ.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &d) in self.multiplicities().iter().enumerate() {
            for m in 1..=d {
                z *= BigInt::from((i + 1) * m);
            }
        }
        z
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn count_syt(&self) -> Result<BigInt> {
        if self.is_empty() {
            return Err(Error::InvalidPartition(
                "count_syt of the empty partition".into(),
            ));
        }
        let mut num = BigInt::one();
        for m in 2..=self.size() {
            num *= BigInt::from(m);
        }
        let mut den = BigInt::one();
        for (a, b) in self.cells() {
            den *= BigInt::from(self.hook_length(a, b));
        }
        Ok(num / den)
    }

    /// `B_μ = Σ_{(a,b) ∈ μ} q^a t^b`.
    pub fn biexponent(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (a, b) in self.cells() {
            out += &MPoly::monomial(&[(Var::Q, a as u32), (Var::T, b as u32)]);
        }
        out
    }

    /// Partitions obtained by removing one corner cell.
    pub fn remove_corners(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.get(i) > self.get(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Partitions obtained by adding one cell.
    pub fn add_cells(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.get(i) < self.get(i - 1) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Dominance order `self ⊵ other`; sizes must agree.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.get(i);
            b += other.get(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition `{s}` must be bracketed")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("`{t}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        current.push(p);
        fill_partitions(rest - p, p, current, out);
        current.pop();
    }
}

/// Partitions of `n` with at most `len` parts.
pub fn partitions_with_length(n: usize, len: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.len() <= len)
        .collect()
}

/// All partitions contained in `outer`.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        outer: &Partition,
        i: usize,
        max: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        out.push(Partition { parts: cur.clone() });
        if i >= outer.len() {
            return;
        }
        for p in 1..=outer.get(i).min(max) {
            cur.push(p);
            rec(outer, i + 1, p, cur, out);
            cur.pop();
        }
    }
    rec(outer, 0, usize::MAX, &mut current, &mut out);
    out.sort();
    out
}

/// A standard Young tableau stored as rows of entries `1..=n` (English
/// convention: row 0 on top).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    fn row_of(&self) -> Vec<usize> {
        let n: usize = self.rows.iter().map(Vec::len).sum();
        let mut where_ = vec![0; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                where_[e] = r;
            }
        }
        where_
    }

    /// Entries `i` such that `i + 1` sits in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        let row_of = self.row_of();
        (1..row_of.len() - 1)
            .filter(|&i| row_of[i + 1] > row_of[i])
            .collect()
    }

    pub fn major_index(&self) -> usize {
        self.descents().iter().sum()
    }
}

/// All standard tableaux of shape `shape`, generated by placing the largest
/// entry in each removable corner.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    if shape.is_empty() {
        return vec![StandardTableau { rows: Vec::new() }];
    }
    let n = shape.size();
    let mut out = Vec::new();
    for smaller in shape.remove_corners() {
        let row = (0..shape.len())
            .find(|&i| shape.get(i) != smaller.get(i))
            .unwrap();
        for mut t in standard_tableaux(&smaller) {
            if row == t.rows.len() {
                t.rows.push(Vec::new());
            }
            t.rows[row].push(n);
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn partition_counts_match_euler_recurrence() {
        // p(n) = Σ_k (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
        let mut pn: Vec<i64> = vec![1];
        for n in 1..=20i64 {
            let mut s = 0;
            for k in 1..=n {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
                    if g <= n {
                        s += sign * pn[(n - g) as usize];
                    }
                }
            }
            pn.push(s);
        }
        for n in 0..=20 {
            assert_eq!(partitions_of(n).len() as i64, pn[n]);
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn eta_values() {
        assert_eq!(p(&[4]).eta(), 0);
        assert_eq!(p(&[1, 1, 1]).eta(), 3);
        assert_eq!(p(&[2, 1]).eta(), 1);
    }

    #[test]
    fn eta_of_conjugate_is_sum_of_binomials() {
        for n in 0..=10 {
            for mu in partitions_of(n) {
                let direct: usize = mu
                    .parts()
                    .iter()
                    .map(|&m| m * (m.saturating_sub(1)) / 2)
                    .sum();
                assert_eq!(mu.conjugate().eta(), direct, "{mu}");
            }
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(p(&[5]).count_syt().unwrap(), BigInt::from(1));
        assert_eq!(p(&[2, 1]).count_syt().unwrap(), BigInt::from(2));
        assert_eq!(p(&[3, 2]).count_syt().unwrap(), BigInt::from(5));
        assert!(Partition::empty().count_syt().is_err());
    }

    #[test]
    fn hook_length_formula_matches_enumeration() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                let tabs = standard_tableaux(&mu);
                assert_eq!(BigInt::from(tabs.len()), mu.count_syt().unwrap(), "{mu}");
            }
        }
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        let mut fact = BigInt::one();
        for n in 1..=8usize {
            fact *= BigInt::from(n);
            let s: BigInt = partitions_of(n)
                .iter()
                .map(|m| m.count_syt().unwrap().pow(2))
                .sum();
            assert_eq!(s, fact);
        }
    }

    #[test]
    fn descents_and_major_index() {
        let t = standard_tableaux(&p(&[1, 1, 1]));
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].descents(), vec![1, 2]);
        assert_eq!(t[0].major_index(), 3);
        let mut majs: Vec<usize> = standard_tableaux(&p(&[2, 1]))
            .iter()
            .map(|t| t.major_index())
            .collect();
        majs.sort();
        assert_eq!(majs, vec![1, 2]);
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[2, 1]).z(), BigInt::from(2));
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(p(&[2, 2]).z(), BigInt::from(8));
    }

    #[test]
    fn biexponent_examples() {
        assert_eq!(p(&[1]).biexponent().to_string(), "1");
        assert_eq!(p(&[2]).biexponent().to_string(), "q + 1");
        assert_eq!(p(&[2, 1]).biexponent().to_string(), "q + t + 1");
    }

    #[test]
    fn biexponent_conjugation_swaps_q_and_t() {
        for n in 0..=8 {
            for mu in partitions_of(n) {
                let swapped = mu.biexponent().swap_vars(Var::Q, Var::T);
                assert_eq!(mu.conjugate().biexponent(), swapped, "{mu}");
            }
        }
    }

    #[test]
    fn text_round_trip_and_errors() {
        assert_eq!("[3,2,1]".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 2, 1]).to_string(), "[3,2,1]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,2".parse::<Partition>().is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn subpartitions_of_21() {
        let subs = subpartitions(&p(&[2, 1]));
        assert_eq!(
            subs,
            vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])]
        );
    }

    #[test]
    fn dominance() {
        assert!(p(&[3]).dominates(&p(&[2, 1])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(500))]
        #[test]
        fn conjugation_is_an_involution(parts in proptest::collection::vec(1usize..=5, 0..=4)) {
            let mu = Partition::from_unsorted(parts);
            proptest::prop_assert_eq!(mu.conjugate().conjugate(), mu);
        }
    }
}
