//! Exact evaluation of Macdonald eigenoperators at rational points `(q, t)`
//! and recovery of polynomial results by interpolation.
//!
//! At a point every coefficient is a rational number, so expanding in the
//! `H̃` basis is a finite computation with the `*`-scalar product, under
//! which the `H̃_μ` are orthogonal with norms `w̃_μ`. Results are assembled
//! on a growing grid of nodes and accepted once they agree with fresh
//! evaluations at pseudo-random points.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::htilde::modified_macdonald;
use super::interp::interpolate_2d;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::{MPoly, Monomial, Var};
use crate::sym::{Basis, SymFunc};

/// Largest per-variable degree tried before giving up.
const MAX_DEGREE: usize = 160;
/// Number of random points used to accept an interpolant.
const CHECK_POINTS: usize = 3;
const SEED: u64 = 0x5eed_0f_d8f;

fn htilde_p_cache() -> &'static RwLock<HashMap<Partition, Arc<SymFunc>>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<SymFunc>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `H̃_μ` in the power-sum basis.
pub fn htilde_p(mu: &Partition) -> Arc<SymFunc> {
    if let Some(f) = htilde_p_cache().read().unwrap().get(mu) {
        return f.clone();
    }
    let f = Arc::new(
        modified_macdonald(mu)
            .convert(Basis::P)
            .expect("classical basis"),
    );
    htilde_p_cache()
        .write()
        .unwrap()
        .entry(mu.clone())
        .or_insert(f)
        .clone()
}

fn pow(x: &BigRational, e: usize) -> BigRational {
    num_traits::pow(x.clone(), e)
}

/// Degree-`n` data evaluated at one point.
pub struct PointData {
    pub q: BigRational,
    pub t: BigRational,
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `h[μ][ρ]`: coefficient of `p_ρ` in `H̃_μ`.
    h: Vec<Vec<BigRational>>,
    /// `⟨p_ρ, p_ρ⟩_*`.
    star: Vec<BigRational>,
    /// `⟨H̃_μ, H̃_μ⟩_*`.
    norm: Vec<BigRational>,
}

impl PointData {
    pub fn new(n: usize, q: &BigRational, t: &BigRational) -> Result<PointData> {
        let parts = partitions_of(n);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let at = |c: &MPoly| {
            c.eval(|v| {
                if v == Var::Q {
                    q.clone()
                } else if v == Var::T {
                    t.clone()
                } else {
                    panic!("unexpected variable {v}")
                }
            })
        };
        let mut h = Vec::with_capacity(parts.len());
        for mu in &parts {
            let hp = htilde_p(mu);
            let mut row = vec![BigRational::zero(); parts.len()];
            for (rho, c) in hp.terms() {
                row[index[rho]] = at(c);
            }
            h.push(row);
        }
        let one = BigRational::one();
        let star = parts
            .iter()
            .map(|rho| {
                let mut v = BigRational::from_integer(rho.z());
                if (n - rho.len()) % 2 == 1 {
                    v = -v;
                }
                for &r in rho.parts() {
                    v *= (&one - pow(q, r)) * (&one - pow(t, r));
                }
                v
            })
            .collect();
        let mut norm = Vec::with_capacity(parts.len());
        for mu in &parts {
            let mut w = BigRational::one();
            for (a, b) in mu.cells() {
                let (arm, leg) = (mu.arm(a, b), mu.leg(a, b));
                w *= (pow(q, arm) - pow(t, leg + 1)) * (pow(t, leg) - pow(q, arm + 1));
            }
            if w.is_zero() {
                return Err(Error::DivisionByZero);
            }
            norm.push(w);
        }
        Ok(PointData {
            q: q.clone(),
            t: t.clone(),
            parts,
            index,
            h,
            star,
            norm,
        })
    }

    /// Coordinates of a degree-`n` power-sum vector in the `H̃` basis.
    pub fn to_htilde(&self, f: &[BigRational]) -> Vec<BigRational> {
        let weighted: Vec<BigRational> = f.iter().zip(&self.star).map(|(a, b)| a * b).collect();
        self.h
            .iter()
            .zip(&self.norm)
            .map(|(row, w)| {
                let mut acc = BigRational::zero();
                for (x, y) in row.iter().zip(&weighted) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                acc / w
            })
            .collect()
    }

    /// Power-sum vector of `Σ c_μ H̃_μ`.
    pub fn from_htilde(&self, c: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.parts.len()];
        for (cm, row) in c.iter().zip(&self.h) {
            if cm.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o += cm * x;
                }
            }
        }
        out
    }

    pub fn index(&self, p: &Partition) -> usize {
        self.index[p]
    }
}

fn point_cache() -> &'static RwLock<HashMap<(usize, BigRational, BigRational), Arc<PointData>>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, BigRational, BigRational), Arc<PointData>>>> =
        OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Point data, cached when `(q, t)` is a grid node.
pub fn point_data(
    n: usize,
    q: &BigRational,
    t: &BigRational,
    cached: bool,
) -> Result<Arc<PointData>> {
    if !cached {
        return Ok(Arc::new(PointData::new(n, q, t)?));
    }
    let key = (n, q.clone(), t.clone());
    if let Some(d) = point_cache().read().unwrap().get(&key) {
        return Ok(d.clone());
    }
    let d = Arc::new(PointData::new(n, q, t)?);
    Ok(point_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert(d)
        .clone())
}

fn primes(count: usize) -> Vec<i64> {
    let mut out = Vec::new();
    let mut c = 2i64;
    while out.len() < count {
        if (2..c).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Interpolation nodes for `q` and `t`: signed primes from two disjoint
/// sets, so no power of a `q` node equals a power of a `t` node.
fn nodes() -> &'static (Vec<BigRational>, Vec<BigRational>) {
    static NODES: OnceLock<(Vec<BigRational>, Vec<BigRational>)> = OnceLock::new();
    NODES.get_or_init(|| {
        let ps = primes(MAX_DEGREE + 2);
        let signed = |start: usize| -> Vec<BigRational> {
            ps.iter()
                .skip(start)
                .step_by(2)
                .flat_map(|&p| [p, -p])
                .take(MAX_DEGREE + 1)
                .map(|p| BigRational::from_integer(BigInt::from(p)))
                .collect()
        };
        (signed(0), signed(1))
    })
}

/// A symmetric function split by the monomials in variables other than
/// `q, t`: `f = Σ_outer outer · Σ_ρ c_ρ(q, t) p_ρ`.
#[derive(Clone, Debug, Default)]
pub struct Split {
    pub parts: BTreeMap<Monomial, BTreeMap<Partition, MPoly>>,
}

impl Split {
    pub fn new(f: &SymFunc) -> Split {
        let fp = f.convert(Basis::P).expect("classical basis");
        let qt: BTreeSet<Var> = [Var::Q, Var::T].into_iter().collect();
        let mut parts: BTreeMap<Monomial, BTreeMap<Partition, MPoly>> = BTreeMap::new();
        for (rho, c) in fp.terms() {
            for (outer, inner) in c.split_by_outer(&qt) {
                parts.entry(outer).or_default().insert(rho.clone(), inner);
            }
        }
        Split { parts }
    }

    pub fn degrees(&self) -> BTreeSet<usize> {
        self.parts
            .values()
            .flat_map(|m| m.keys().map(Partition::size))
            .collect()
    }

    /// Largest degree in `q` or `t` of any coefficient.
    pub fn qt_degree(&self) -> usize {
        self.parts
            .values()
            .flat_map(|m| m.values())
            .map(|c| c.degree_in(Var::Q).max(c.degree_in(Var::T)) as usize)
            .max()
            .unwrap_or(0)
    }

    /// Degree-`n` power-sum vectors at a point, per outer monomial.
    pub fn at(&self, n: usize, pd: &PointData) -> Vec<(Monomial, Vec<BigRational>)> {
        let mut out = Vec::new();
        for (outer, m) in &self.parts {
            let mut v = vec![BigRational::zero(); pd.parts.len()];
            let mut any = false;
            for (rho, c) in m.iter().filter(|(r, _)| r.size() == n) {
                v[pd.index(rho)] = c.eval(|x| {
                    if x == Var::Q {
                        pd.q.clone()
                    } else {
                        pd.t.clone()
                    }
                });
                any = true;
            }
            if any {
                out.push((outer.clone(), v));
            }
        }
        out
    }
}

/// Values at one point, keyed by `(outer monomial, ρ)`.
pub type PointValues = BTreeMap<(Monomial, Partition), BigRational>;

/// Recovers the polynomial whose values `eval` computes, growing the grid
/// until the interpolant survives the random checks. The grid grows at most
/// twice past `start_degree`, which should already bound the true degree.
pub fn recover<F>(eval: F, start_degree: usize) -> Result<SymFunc>
where
    F: Fn(&BigRational, &BigRational, bool) -> Result<PointValues> + Sync,
{
    let (qs, ts) = nodes();
    let mut grid: HashMap<(usize, usize), PointValues> = HashMap::new();
    let mut degree = start_degree.clamp(2, MAX_DEGREE);
    let limit = (4 * degree + 3).min(MAX_DEGREE);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    loop {
        let missing: Vec<(usize, usize)> = (0..=degree)
            .flat_map(|i| (0..=degree).map(move |j| (i, j)))
            .filter(|k| !grid.contains_key(k))
            .collect();
        let fresh: Vec<((usize, usize), Result<PointValues>)> = missing
            .par_iter()
            .map(|&(i, j)| ((i, j), eval(&qs[i], &ts[j], true)))
            .collect();
        for (k, v) in fresh {
            grid.insert(k, v?);
        }
        let keys: BTreeSet<(Monomial, Partition)> =
            grid.values().flat_map(|m| m.keys().cloned()).collect();
        let xs = &qs[..=degree];
        let ys = &ts[..=degree];
        let mut result: BTreeMap<(Monomial, Partition), MPoly> = BTreeMap::new();
        for key in &keys {
            let vals: Vec<Vec<BigRational>> = (0..=degree)
                .map(|i| {
                    (0..=degree)
                        .map(|j| {
                            grid[&(i, j)]
                                .get(key)
                                .cloned()
                                .unwrap_or_else(BigRational::zero)
                        })
                        .collect()
                })
                .collect();
            let p = interpolate_2d(xs, ys, &vals, Var::Q, Var::T);
            if !p.is_zero() {
                result.insert(key.clone(), p);
            }
        }
        if verify(&eval, &result, &mut rng)? {
            let mut out = SymFunc::zero(Basis::P);
            for ((outer, rho), p) in result {
                out.add_term(rho, &p.mul_monomial(&outer));
            }
            return Ok(out.to_s());
        }
        if degree >= limit {
            return Err(Error::DenominatorsDoNotClear(format!(
                "no polynomial of degree ≤ {limit} in q and t fits the operator values"
            )));
        }
        degree = (2 * degree + 1).min(limit);
    }
}

fn verify<F>(
    eval: &F,
    result: &BTreeMap<(Monomial, Partition), MPoly>,
    rng: &mut ChaCha8Rng,
) -> Result<bool>
where
    F: Fn(&BigRational, &BigRational, bool) -> Result<PointValues> + Sync,
{
    let mut checked = 0;
    let mut attempts = 0;
    while checked < CHECK_POINTS {
        attempts += 1;
        if attempts > 50 {
            return Err(Error::Interpolation(
                "could not find nonsingular check points".into(),
            ));
        }
        let draw = |rng: &mut ChaCha8Rng| {
            let v: i64 = rng.gen_range(1_000..1_000_000);
            BigRational::from_integer(BigInt::from(if rng.gen_bool(0.5) { v } else { -v }))
        };
        let (q, t) = (draw(rng), draw(rng));
        let values = match eval(&q, &t, false) {
            Ok(v) => v,
            Err(Error::DivisionByZero) => continue,
            Err(e) => return Err(e),
        };
        let at = |p: &MPoly| p.eval(|v| if v == Var::Q { q.clone() } else { t.clone() });
        for (k, v) in &values {
            let expect = result.get(k).map(at).unwrap_or_else(BigRational::zero);
            if &expect != v {
                return Ok(false);
            }
        }
        for (k, p) in result {
            if !values.contains_key(k) && !at(p).is_zero() {
                return Ok(false);
            }
        }
        checked += 1;
    }
    Ok(true)
}

/// Elementary symmetric function `e_k` of a list of numbers.
pub fn elementary(values: &[BigRational], k: usize) -> BigRational {
    let mut e = vec![BigRational::zero(); k + 1];
    e[0] = BigRational::one();
    for v in values {
        for i in (1..=k).rev() {
            let add = &e[i - 1] * v;
            e[i] += add;
        }
    }
    e.swap_remove(k)
}

/// Monomials `q^a t^b` of the cells of `μ` other than `(0, 0)`.
pub fn biexponent_values(mu: &Partition, q: &BigRational, t: &BigRational) -> Vec<BigRational> {
    mu.cells()
        .filter(|&c| c != (0, 0))
        .map(|(a, b)| pow(q, a) * pow(t, b))
        .collect()
}

/// Applies an operator diagonal in the `H̃` basis.
pub fn apply_diagonal<E>(
    f: &SymFunc,
    eigen: E,
    eig_degree: impl Fn(usize) -> usize,
) -> Result<SymFunc>
where
    E: Fn(&Partition, &BigRational, &BigRational) -> BigRational + Sync,
{
    let split = Split::new(f);
    let degrees = split.degrees();
    if degrees.is_empty() {
        return Ok(SymFunc::zero(Basis::S));
    }
    let start = split.qt_degree()
        + degrees
            .iter()
            .map(|&n| eig_degree(n) + 2 * n)
            .max()
            .unwrap_or(0);
    let eval = |q: &BigRational, t: &BigRational, cached: bool| -> Result<PointValues> {
        let mut out = PointValues::new();
        for &n in &degrees {
            let pd = point_data(n, q, t, cached)?;
            let eig: Vec<BigRational> = pd.parts.iter().map(|mu| eigen(mu, q, t)).collect();
            for (outer, v) in split.at(n, &pd) {
                let c: Vec<BigRational> = pd
                    .to_htilde(&v)
                    .into_iter()
                    .zip(&eig)
                    .map(|(a, b)| a * b)
                    .collect();
                for (rho, x) in pd.parts.iter().zip(pd.from_htilde(&c)) {
                    if !x.is_zero() {
                        out.insert((outer.clone(), rho.clone()), x);
                    }
                }
            }
        }
        Ok(out)
    };
    recover(eval, start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn htilde_orthogonality_at_points() {
        for n in 1..=5 {
            let pd = PointData::new(n, &rat(2), &rat(3)).unwrap();
            for (i, _) in pd.parts.iter().enumerate() {
                let mut e = vec![BigRational::zero(); pd.parts.len()];
                e[i] = BigRational::one();
                let v = pd.from_htilde(&e);
                assert_eq!(pd.to_htilde(&v), e);
            }
        }
    }

    #[test]
    fn elementary_values() {
        let v = [rat(2), rat(3), rat(5)];
        assert_eq!(elementary(&v, 0), rat(1));
        assert_eq!(elementary(&v, 2), rat(31));
        assert_eq!(elementary(&v, 4), rat(0));
    }

    #[test]
    fn nodes_are_distinct() {
        let (q, t) = nodes();
        let all: BTreeSet<_> = q.iter().chain(t.iter()).collect();
        assert_eq!(all.len(), q.len() + t.len());
    }
}
