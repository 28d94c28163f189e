//! Graded quotient of the superspace ring by its positive-degree invariants.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::ring::{
    add_scaled, compositions, permutations, signed, Key, Ring, SuperMonomial, Vector,
};
use super::OracleReport;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::MPoly;
use crate::sym::{Basis, SymFunc, TensorFrobenius};

/// Default bound on `n` for oracle runs.
pub const DEFAULT_N_BOUND: usize = 4;

/// One graded piece of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeData {
    /// Commuting row degrees then anticommuting row degrees, each block
    /// weakly decreasing.
    pub degree: Vec<usize>,
    pub dim: usize,
    /// Trace of a permutation of each cycle type on the piece.
    pub traces: BTreeMap<Partition, BigInt>,
}

impl DegreeData {
    /// Frobenius characteristic `Σ_ρ trace_ρ p_ρ / z_ρ` in the Schur basis.
    pub fn frobenius(&self) -> SymFunc {
        SymFunc::from_terms(
            Basis::P,
            self.traces.iter().map(|(rho, tr)| {
                (
                    rho.clone(),
                    MPoly::constant(BigRational::new(tr.clone(), rho.z())),
                )
            }),
        )
        .to_s()
    }
}

/// Reduced echelon data of the ideal in one multidegree: every non-standard
/// monomial `p` is congruent to a combination of standard ones.
struct Layer {
    standard: Vec<Key>,
    nf: HashMap<Key, Vec<(Key, BigRational)>>,
}

impl Layer {
    /// Ideal elements `p − NF(p)`, one per pivot, in increasing pivot order.
    fn elements(&self) -> Vec<Vec<(Key, BigRational)>> {
        let mut pivots: Vec<&Key> = self.nf.keys().collect();
        pivots.sort_unstable();
        pivots
            .into_iter()
            .map(|p| {
                let mut e = vec![(*p, BigRational::one())];
                e.extend(self.nf[p].iter().map(|(k, c)| (*k, -c)));
                e
            })
            .collect()
    }
}

/// Incremental row echelon form keyed by leading monomial.
#[derive(Default)]
struct Echelon {
    rows: HashMap<Key, Vec<(Key, BigRational)>>,
}

impl Echelon {
    fn insert(&mut self, mut v: Vector) {
        while let Some((&lead, c)) = v.last_key_value() {
            match self.rows.get(&lead) {
                Some(row) => {
                    let c = c.clone();
                    for (k, x) in row {
                        add_scaled(&mut v, *k, &-(&c * x));
                    }
                }
                None => {
                    let inv = c.recip();
                    let row = v.into_iter().rev().map(|(k, x)| (k, x * &inv)).collect();
                    self.rows.insert(lead, row);
                    return;
                }
            }
        }
    }

    /// Full reduction against the standard monomials of `monomials`.
    fn into_layer(self, monomials: &[Key]) -> Layer {
        let standard: Vec<Key> = monomials
            .iter()
            .copied()
            .filter(|m| !self.rows.contains_key(m))
            .collect();
        let mut pivots: Vec<Key> = self.rows.keys().copied().collect();
        pivots.sort_unstable();
        let mut nf: HashMap<Key, Vec<(Key, BigRational)>> = HashMap::with_capacity(pivots.len());
        for p in pivots {
            let mut acc = Vector::new();
            for (k, c) in &self.rows[&p][1..] {
                match nf.get(k) {
                    Some(sub) => {
                        for (s, x) in sub {
                            add_scaled(&mut acc, *s, &-(c * x));
                        }
                    }
                    None => add_scaled(&mut acc, *k, &-c),
                }
            }
            nf.insert(p, acc.into_iter().collect());
        }
        Layer { standard, nf }
    }
}

/// Splits a multidegree into its sorted representative and the row maps
/// carrying the representative back.
fn sort_degree(ring: &Ring, d: &[usize]) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let order = |block: &[usize]| {
        let mut idx: Vec<usize> = (0..block.len()).collect();
        idx.sort_by(|&a, &b| block[b].cmp(&block[a]).then(a.cmp(&b)));
        idx
    };
    let xo = order(&d[..ring.k]);
    let fo = order(&d[ring.k..]);
    let mut sorted: Vec<usize> = xo.iter().map(|&i| d[i]).collect();
    sorted.extend(fo.iter().map(|&i| d[ring.k + i]));
    (sorted, xo, fo)
}

fn is_sorted_degree(ring: &Ring, d: &[usize]) -> bool {
    d[..ring.k].windows(2).all(|w| w[0] >= w[1]) && d[ring.k..].windows(2).all(|w| w[0] >= w[1])
}

struct Computation {
    ring: Ring,
    perms: Vec<Vec<usize>>,
    layers: HashMap<Vec<usize>, Arc<Layer>>,
}

impl Computation {
    /// Ideal elements in an arbitrary multidegree, transported from the
    /// sorted representative.
    fn ideal_elements(&self, d: &[usize]) -> Vec<Vector> {
        if !self.ring.fits(d) {
            return Vec::new();
        }
        let (sorted, xo, fo) = sort_degree(&self.ring, d);
        let layer = &self.layers[&sorted];
        let cols: Vec<usize> = (0..self.ring.n).collect();
        layer
            .elements()
            .into_iter()
            .map(|e| {
                let mut v = Vector::new();
                for (k, c) in e {
                    let (neg, key) = self.ring.transform(k, &xo, &fo, &cols);
                    add_scaled(&mut v, key, &if neg { -c } else { c });
                }
                v
            })
            .collect()
    }

    /// Orbit sums `Σ_σ σ·m` spanning the invariants of multidegree `d`.
    fn invariants(&self, monomials: &[Key]) -> Vec<Vector> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &m in monomials {
            if seen.contains(&m) {
                continue;
            }
            let mut v = Vector::new();
            for sigma in &self.perms {
                let (neg, key) = self.ring.act(m, sigma);
                seen.insert(key);
                add_scaled(&mut v, key, &signed(neg));
            }
            if !v.is_empty() {
                out.push(v);
            }
        }
        out
    }

    fn layer(&self, d: &[usize]) -> Layer {
        let monomials = self.ring.monomials(d);
        if d.iter().all(|&x| x == 0) {
            return Layer {
                standard: monomials,
                nf: HashMap::new(),
            };
        }
        let mut ech = Echelon::default();
        for (row, &dr) in d.iter().enumerate() {
            if dr == 0 {
                continue;
            }
            let mut lower = d.to_vec();
            lower[row] -= 1;
            for e in self.ideal_elements(&lower) {
                for i in 0..self.ring.n {
                    let mut v = Vector::new();
                    for (k, c) in &e {
                        if row < self.ring.k {
                            add_scaled(&mut v, self.ring.mul_x(*k, row, i), c);
                        } else if let Some((neg, key)) =
                            self.ring.mul_theta(*k, row - self.ring.k, i)
                        {
                            add_scaled(&mut v, key, &if neg { -c.clone() } else { c.clone() });
                        }
                    }
                    ech.insert(v);
                }
            }
        }
        for v in self.invariants(&monomials) {
            ech.insert(v);
        }
        ech.into_layer(&monomials)
    }

    fn degree_data(&self, d: &[usize], layer: &Layer) -> DegreeData {
        let n = self.ring.n;
        let mut traces = BTreeMap::new();
        for rho in partitions_of(n) {
            let sigma = cycle_representative(&rho);
            let mut tr = BigRational::zero();
            for &s in &layer.standard {
                let (neg, img) = self.ring.act(s, &sigma);
                let c = if img == s {
                    BigRational::one()
                } else {
                    match layer.nf.get(&img) {
                        Some(row) => row
                            .iter()
                            .find(|(k, _)| *k == s)
                            .map(|(_, c)| c.clone())
                            .unwrap_or_else(BigRational::zero),
                        None => BigRational::zero(),
                    }
                };
                if neg {
                    tr -= c;
                } else {
                    tr += c;
                }
            }
            debug_assert!(tr.is_integer());
            traces.insert(rho, tr.to_integer());
        }
        DegreeData {
            degree: d.to_vec(),
            dim: layer.standard.len(),
            traces,
        }
    }
}

/// A permutation of cycle type `rho` built from consecutive cycles.
pub fn cycle_representative(rho: &Partition) -> Vec<usize> {
    let mut sigma = Vec::with_capacity(rho.size());
    let mut start = 0;
    for &r in rho.parts() {
        for i in 0..r {
            sigma.push(start + (i + 1) % r);
        }
        start += r;
    }
    sigma
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Sorted multidegrees of total degree `total` that contain monomials.
fn sorted_degrees(ring: &Ring, total: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = compositions(total, ring.k + ring.j)
        .into_iter()
        .filter(|d| is_sorted_degree(ring, d) && ring.fits(d))
        .collect();
    out.sort();
    out
}

/// Spanning set of the invariants in multidegree `d`, as combinations of
/// canonical monomials.
pub fn invariants_of_multidegree(
    k: usize,
    j: usize,
    n: usize,
    d: &[usize],
) -> Result<Vec<Vec<(SuperMonomial, BigRational)>>> {
    let ring = Ring::new(k, j, n)?;
    if d.len() != k + j {
        return Err(Error::DegreeMismatch(format!(
            "multidegree has {} entries, expected {}",
            d.len(),
            k + j
        )));
    }
    if !ring.fits(d) {
        return Ok(Vec::new());
    }
    let comp = Computation {
        ring,
        perms: permutations(n),
        layers: HashMap::new(),
    };
    Ok(comp
        .invariants(&ring.monomials(d))
        .into_iter()
        .map(|v| {
            v.into_iter()
                .map(|(key, c)| (ring.decode(key), c))
                .collect()
        })
        .collect())
}

/// Multigraded Frobenius characteristic of the coinvariant quotient, with
/// `n` limited by [`DEFAULT_N_BOUND`].
pub fn coinvariant_frobenius(k: usize, j: usize, n: usize) -> Result<OracleReport> {
    coinvariant_frobenius_bounded(k, j, n, DEFAULT_N_BOUND)
}

/// As [`coinvariant_frobenius`] with an explicit bound on `n`.
pub fn coinvariant_frobenius_bounded(
    k: usize,
    j: usize,
    n: usize,
    n_bound: usize,
) -> Result<OracleReport> {
    if k + j == 0 {
        return Err(Error::Unsupported(
            "the oracle needs at least one row of variables".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Unsupported("the oracle needs n ≥ 1".into()));
    }
    if n > n_bound {
        return Err(Error::ResourceCap(format!(
            "oracle runs are limited to n ≤ {n_bound}"
        )));
    }
    let ring = Ring::new(k, j, n)?;
    let mut comp = Computation {
        ring,
        perms: permutations(n),
        layers: HashMap::new(),
    };
    // everything should vanish past binom(n,2); one more layer is checked
    let cap = binom2(n) + 1;
    let mut degrees = Vec::new();
    for total in 0..=cap {
        let ds = sorted_degrees(&ring, total);
        let results: Vec<(Vec<usize>, Layer)> =
            ds.par_iter().map(|d| (d.clone(), comp.layer(d))).collect();
        let mut nonzero = false;
        for (d, layer) in results {
            if !layer.standard.is_empty() {
                nonzero = true;
                if total == cap {
                    return Err(Error::DegreeAnomaly(format!(
                        "quotient of dimension {} in multidegree {d:?}, beyond total degree {}",
                        layer.standard.len(),
                        cap - 1
                    )));
                }
                degrees.push(comp.degree_data(&d, &layer));
            }
            comp.layers.insert(d, Arc::new(layer));
        }
        if !nonzero {
            break;
        }
    }
    let frobenius = assemble(k, j, &degrees)?;
    Ok(OracleReport {
        k,
        j,
        n,
        degrees,
        frobenius,
    })
}

/// Turns graded characters at dominant weights into Schur-expanded
/// `GL_k × GL_j` characters.
fn assemble(k: usize, j: usize, degrees: &[DegreeData]) -> Result<TensorFrobenius> {
    // μ → (fermionic weight → bosonic weight expansion in m)
    let mut by_mu: BTreeMap<Partition, BTreeMap<Partition, SymFunc>> = BTreeMap::new();
    for dd in degrees {
        let nu = Partition::from_unsorted(dd.degree[..k].to_vec());
        let pi = Partition::from_unsorted(dd.degree[k..].to_vec());
        for (mu, c) in dd.frobenius().terms() {
            by_mu
                .entry(mu.clone())
                .or_default()
                .entry(pi.clone())
                .or_insert_with(|| SymFunc::zero(Basis::M))
                .add_term(nu.clone(), c);
        }
    }
    let mut out = TensorFrobenius::new();
    for (mu, per_pi) in by_mu {
        // λ → fermionic expansion in m
        let mut by_lam: BTreeMap<Partition, SymFunc> = BTreeMap::new();
        for (pi, f) in per_pi {
            for (lam, c) in f.to_s().terms() {
                if lam.len() <= k {
                    by_lam
                        .entry(lam.clone())
                        .or_insert_with(|| SymFunc::zero(Basis::M))
                        .add_term(pi.clone(), c);
                }
            }
        }
        for (lam, g) in by_lam {
            for (rho, c) in g.to_s().terms() {
                if rho.len() > j {
                    continue;
                }
                let v = c.constant_value().ok_or_else(|| {
                    Error::NegativeCoefficient(format!(
                        "non-constant coefficient at {lam} {rho} {mu}"
                    ))
                })?;
                if !v.is_integer() || v.is_negative() {
                    return Err(Error::NegativeCoefficient(format!(
                        "coefficient {v} at {lam} {rho} {mu}"
                    )));
                }
                out.add(lam.clone(), rho.clone(), mu.clone(), &v.to_integer());
            }
        }
    }
    Ok(out)
}

/// The coefficients `c_{λμ}` of `E_n = Σ_μ C_μ ⊗ s_μ`, read off the bosonic
/// quotient with `n` rows of variables.
pub fn extract_generic_e(n: usize) -> Result<TensorFrobenius> {
    extract_generic_e_bounded(n, DEFAULT_N_BOUND)
}

pub fn extract_generic_e_bounded(n: usize, n_bound: usize) -> Result<TensorFrobenius> {
    let report = coinvariant_frobenius_bounded(n, 0, n, n_bound)?;
    report.frobenius.check_support()?;
    Ok(report.frobenius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Var};

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn invariant_examples() {
        let one = invariants_of_multidegree(1, 0, 2, &[1]).unwrap();
        assert_eq!(one.len(), 1);
        let text: Vec<String> = one[0].iter().map(|(m, c)| format!("{c}*{m}")).collect();
        assert_eq!(text, ["1*x12", "1*x11"]);
        let odd = invariants_of_multidegree(0, 1, 2, &[1]).unwrap();
        assert_eq!(odd.len(), 1);
        assert_eq!(odd[0].len(), 2);
        assert!(invariants_of_multidegree(0, 1, 2, &[2]).unwrap().is_empty());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_representative(&pt(&[3])), vec![1, 2, 0]);
        assert_eq!(cycle_representative(&pt(&[2, 1])), vec![1, 0, 2]);
    }

    #[test]
    fn small_quotients() {
        // one row: C[x]/(x) has only the constants
        let r = coinvariant_frobenius(1, 0, 1).unwrap();
        assert_eq!(r.frobenius.to_string(), "[] [] [1] 1\n");
        // two columns, one row: span{1, x1 − x2}
        let r = coinvariant_frobenius(1, 0, 2).unwrap();
        assert_eq!(r.frobenius.to_string(), "[] [] [2] 1\n[1] [] [1,1] 1\n");
        // one odd row: span{1, θ1 − θ2}
        let r = coinvariant_frobenius(0, 1, 2).unwrap();
        assert_eq!(r.frobenius.to_string(), "[] [] [2] 1\n[] [1] [1,1] 1\n");
    }

    #[test]
    fn chevalley_hilbert_series() {
        for n in 1..=5 {
            let r = coinvariant_frobenius_bounded(1, 0, n, 5).unwrap();
            let mut series = MPoly::zero();
            for dd in &r.degrees {
                series += &MPoly::var(Var::Q)
                    .pow(dd.degree[0] as u32)
                    .scale(&rat(dd.dim as i64));
            }
            let mut fact = MPoly::one();
            for i in 1..=n {
                let qi: MPoly = (0..i).map(|e| MPoly::var(Var::Q).pow(e as u32)).sum();
                fact = &fact * &qi;
            }
            assert_eq!(series, fact, "n = {n}");
        }
    }

    #[test]
    fn characters_have_the_right_dimension() {
        let r = coinvariant_frobenius(1, 1, 3).unwrap();
        for dd in &r.degrees {
            assert_eq!(dd.frobenius().drop_z(), MPoly::int(dd.dim as i64));
            assert_eq!(dd.traces[&Partition::column(3)], BigInt::from(dd.dim));
        }
        assert_eq!(r.degrees[0].dim, 1);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            coinvariant_frobenius(1, 0, 5),
            Err(Error::ResourceCap(_))
        ));
    }
}
