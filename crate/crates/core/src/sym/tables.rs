//! Per-degree transition data: Kostka numbers, their inverse, and the
//! character table of the symmetric group.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::partition::{partitions_of, Partition};

/// Transition data for one degree `n`.
///
/// Rows and columns are indexed by [`Tables::parts`], which lists the
/// partitions of `n` in reverse-lexicographic order. In that order the Kostka
/// matrix is upper unitriangular.
pub struct Tables {
    pub n: usize,
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `kostka[λ][μ]`: semistandard tableaux of shape λ and content μ.
    pub kostka: Vec<Vec<i64>>,
    pub kostka_inv: Vec<Vec<i64>>,
    /// `chi[λ][ρ]`: irreducible character λ on cycle type ρ.
    pub chi: Vec<Vec<i64>>,
    pub z: Vec<BigInt>,
    /// Index of the conjugate partition.
    pub conj: Vec<usize>,
}

impl Tables {
    pub fn index(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<Tables>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared tables for degree `n`, built on first use.
pub fn tables(n: usize) -> Arc<Tables> {
    if let Some(t) = cache().read().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(build(n));
    cache().write().unwrap().entry(n).or_insert(built).clone()
}

fn build(n: usize) -> Tables {
    let parts = partitions_of(n);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let len = parts.len();

    let mut kostka = vec![vec![0i64; len]; len];
    for (i, lam) in parts.iter().enumerate() {
        for (j, mu) in parts.iter().enumerate() {
            kostka[i][j] = kostka_number(lam, mu);
        }
    }

    let mut kostka_inv = vec![vec![0i64; len]; len];
    for col in 0..len {
        // solve K x = e_col by back substitution (K upper unitriangular)
        for row in (0..=col).rev() {
            let mut acc = if row == col { 1 } else { 0 };
            for m in row + 1..=col {
                acc -= kostka[row][m] * kostka_inv[m][col];
            }
            kostka_inv[row][col] = acc;
        }
    }

    let mut chi = vec![vec![0i64; len]; len];
    for (i, lam) in parts.iter().enumerate() {
        for (j, rho) in parts.iter().enumerate() {
            chi[i][j] = character(lam, rho);
        }
    }

    let z = parts.iter().map(Partition::z).collect();
    let conj = parts.iter().map(|p| index[&p.conjugate()]).collect();
    Tables {
        n,
        parts,
        index,
        kostka,
        kostka_inv,
        chi,
        z,
        conj,
    }
}

/// Partitions `ν ⊆ λ` such that `λ/ν` is a horizontal strip of size `m`.
pub fn remove_horizontal_strips(lam: &Partition, m: usize) -> Vec<Partition> {
    let l = lam.parts();
    let mut out = Vec::new();
    let mut cur = vec![0usize; l.len()];
    fn rec(l: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == l.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let lower = l.get(i + 1).copied().unwrap_or(0);
        let max_remove = (l[i] - lower).min(left);
        for r in 0..=max_remove {
            cur[i] = l[i] - r;
            rec(l, i + 1, left - r, cur, out);
        }
    }
    rec(l, 0, m, &mut cur, &mut out);
    out
}

/// `K_{λμ}` for `|λ| = |μ|`, by peeling off the largest letter.
pub fn kostka_number(lam: &Partition, mu: &Partition) -> i64 {
    if lam.size() != mu.size() {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    if !lam.dominates(mu) {
        return 0;
    }
    let last = mu.get(mu.len() - 1);
    let rest = Partition::new(mu.parts()[..mu.len() - 1].to_vec()).expect("prefix of a partition");
    let t = tables(rest.size());
    let ri = t.index(&rest);
    remove_horizontal_strips(lam, last)
        .iter()
        .map(|nu| t.kostka[t.index(nu)][ri])
        .sum()
}

/// Beta numbers of `λ` with `len` beads.
fn beta(lam: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| lam.get(i) + len - 1 - i).collect()
}

fn from_beta(mut b: Vec<usize>) -> Partition {
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len();
    Partition::from_unsorted(
        b.iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .collect(),
    )
}

/// Partitions reachable by removing a rim hook of size `r`, with the sign
/// `(-1)^{height}`.
pub fn remove_rim_hooks(lam: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let len = lam.len();
    let b = beta(lam, len);
    let mut out = Vec::new();
    for (i, &x) in b.iter().enumerate() {
        if x < r || b.contains(&(x - r)) {
            continue;
        }
        let y = x - r;
        let between = b.iter().filter(|&&w| w > y && w < x).count();
        let mut nb = b.clone();
        nb[i] = y;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((from_beta(nb), sign));
    }
    out
}

/// Murnaghan–Nakayama: `χ^λ(ρ)`.
pub fn character(lam: &Partition, rho: &Partition) -> i64 {
    if lam.size() != rho.size() {
        return 0;
    }
    if rho.is_empty() {
        return 1;
    }
    let r = rho.first();
    let rest = Partition::new(rho.parts()[1..].to_vec()).expect("suffix of a partition");
    let t = tables(rest.size());
    let ri = t.index(&rest);
    remove_rim_hooks(lam, r)
        .into_iter()
        .map(|(nu, sign)| sign * t.chi[t.index(&nu)][ri])
        .sum()
}
