//! Modified Macdonald functions from the inversion/major-index statistics on
//! fillings.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::partition::{partitions_of, Partition};
use crate::poly::{MPoly, Monomial, Var};
use crate::sym::{Basis, SymFunc};

fn cache() -> &'static RwLock<HashMap<Partition, Arc<SymFunc>>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<SymFunc>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Cell geometry of a diagram in French notation, cells listed row by row
/// from the bottom.
struct Shape {
    /// For each cell: index of the cell directly below, if any.
    below: Vec<Option<usize>>,
    /// Arm and leg plus one, per cell.
    arm: Vec<u32>,
    leg1: Vec<u32>,
    /// Attacking pairs `(u, v)` with `u` before `v` in reading order.
    attacks: Vec<(usize, usize)>,
}

impl Shape {
    fn new(mu: &Partition) -> Shape {
        let mut index = HashMap::new();
        let cells: Vec<(usize, usize)> = mu.cells().collect();
        for (i, &c) in cells.iter().enumerate() {
            index.insert(c, i);
        }
        let below = cells
            .iter()
            .map(|&(a, b)| {
                if b == 0 {
                    None
                } else {
                    Some(index[&(a, b - 1)])
                }
            })
            .collect();
        let arm = cells.iter().map(|&(a, b)| mu.arm(a, b) as u32).collect();
        let leg1 = cells
            .iter()
            .map(|&(a, b)| mu.leg(a, b) as u32 + 1)
            .collect();
        let mut attacks = Vec::new();
        for (i, &(a1, b1)) in cells.iter().enumerate() {
            for (j, &(a2, b2)) in cells.iter().enumerate() {
                // same row, left to right
                if b1 == b2 && a1 < a2 {
                    attacks.push((i, j));
                }
                // upper row strictly right of the lower one; the upper row is read first
                if b1 == b2 + 1 && a1 > a2 {
                    attacks.push((i, j));
                }
            }
        }
        Shape {
            below,
            arm,
            leg1,
            attacks,
        }
    }

    fn stats(&self, filling: &[u8]) -> (u32, u32) {
        let mut inv: i64 = 0;
        for &(u, v) in &self.attacks {
            if filling[u] > filling[v] {
                inv += 1;
            }
        }
        let mut maj = 0;
        for (u, below) in self.below.iter().enumerate() {
            if let Some(v) = *below {
                if filling[u] > filling[v] {
                    maj += self.leg1[u];
                    inv -= self.arm[u] as i64;
                }
            }
        }
        debug_assert!(inv >= 0);
        (inv as u32, maj)
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
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

/// `H̃_μ` in the Schur basis with coefficients in `q, t`.
///
/// The coefficient of `m_α` is the sum of `q^{inv} t^{maj}` over fillings of
/// the diagram with content `α`; it is computed for each dominant weight and
/// the result converted to Schur functions.
pub fn modified_macdonald(mu: &Partition) -> SymFunc {
    if let Some(f) = cache().read().unwrap().get(mu) {
        return (**f).clone();
    }
    let n = mu.size();
    let shape = Shape::new(mu);
    let mut m_expansion = SymFunc::zero(Basis::M);
    for alpha in partitions_of(n) {
        let mut filling: Vec<u8> = Vec::with_capacity(n);
        for (letter, &count) in alpha.parts().iter().enumerate() {
            filling.extend(std::iter::repeat_n(letter as u8, count));
        }
        let mut counts: HashMap<(u32, u32), i64> = HashMap::new();
        loop {
            *counts.entry(shape.stats(&filling)).or_default() += 1;
            if !next_permutation(&mut filling) {
                break;
            }
        }
        let poly = MPoly::from_terms(counts.into_iter().map(|((i, m), c)| {
            (
                Monomial::new(&[(Var::Q, i), (Var::T, m)]),
                BigRational::from_integer(BigInt::from(c)),
            )
        }));
        m_expansion.add_term(alpha, &poly);
    }
    let s = m_expansion.to_s();
    cache()
        .write()
        .unwrap()
        .insert(mu.clone(), Arc::new(s.clone()));
    s
}

/// Installs a precomputed `H̃_μ`, for instance one read from disk.
pub fn seed_modified_macdonald(mu: &Partition, f: SymFunc) {
    cache().write().unwrap().insert(mu.clone(), Arc::new(f));
}

/// Expands a combination of `H̃_μ` in the Schur basis.
pub fn htilde_to_s(f: &SymFunc) -> SymFunc {
    assert_eq!(f.basis(), Basis::HTilde);
    let mut out = SymFunc::zero(Basis::S);
    for (mu, c) in f.terms() {
        for (lam, d) in modified_macdonald(mu).terms() {
            out.add_term(lam.clone(), &(c * d));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s_of(pairs: &[(&[usize], &str)]) -> SymFunc {
        SymFunc::from_terms(
            Basis::S,
            pairs.iter().map(|(p, c)| (pt(p), c.parse().unwrap())),
        )
    }

    #[test]
    fn small_cases() {
        assert_eq!(modified_macdonald(&pt(&[1])), s_of(&[(&[1], "1")]));
        assert_eq!(
            modified_macdonald(&pt(&[2])),
            s_of(&[(&[2], "1"), (&[1, 1], "q")])
        );
        assert_eq!(
            modified_macdonald(&pt(&[1, 1])),
            s_of(&[(&[2], "1"), (&[1, 1], "t")])
        );
        assert_eq!(
            modified_macdonald(&pt(&[2, 1])),
            s_of(&[(&[3], "1"), (&[2, 1], "q + t"), (&[1, 1, 1], "q*t")])
        );
    }

    #[test]
    fn one_row_is_transformed_complete() {
        // H̃_(n)(q, t) = Σ_λ K̃ with t-free coefficients; at q = 1 it is h_1^n
        for n in 1..=5 {
            let h = modified_macdonald(&Partition::row(n));
            assert!(h.terms().all(|(_, c)| c.degree_in(Var::T) == 0));
            let at_one = h.map_coeffs(|c| c.substitute(Var::Q, &MPoly::one()));
            let p1n = SymFunc::p(Partition::column(n)).to_s();
            assert_eq!(at_one, p1n);
        }
    }
}
