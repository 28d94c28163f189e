//! The operators `∇`, `Δ′_{e_k}`, `Π` and `Θ_g`, the plethystic `g ↦ g*`,
//! and exact expansion in the `H̃` basis.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::engine::{
    apply_diagonal, biexponent_values, elementary, htilde_p, point_data, recover, PointValues,
    Split,
};
use super::htilde::modified_macdonald;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::{MFrac, MPoly, Monomial, Var};
use crate::sym::{plethysm, Alphabet, Basis, SymFunc};

fn pow(x: &BigRational, e: usize) -> BigRational {
    num_traits::pow(x.clone(), e)
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `∇`: `H̃_μ ↦ q^{η(μ')} t^{η(μ)} H̃_μ`.
pub fn nabla(f: &SymFunc) -> Result<SymFunc> {
    apply_diagonal(
        f,
        |mu, q, t| pow(q, mu.conjugate().eta()) * pow(t, mu.eta()),
        binom2,
    )
}

/// `∇` eigenvalue as a polynomial.
pub fn nabla_eigenvalue(mu: &Partition) -> MPoly {
    MPoly::monomial(&[
        (Var::Q, mu.conjugate().eta() as u32),
        (Var::T, mu.eta() as u32),
    ])
}

/// `Δ′_{e_k}`: `H̃_μ ↦ e_k[B_μ − 1] H̃_μ`.
pub fn delta_prime(k: usize, f: &SymFunc) -> Result<SymFunc> {
    apply_diagonal(
        f,
        |mu, q, t| elementary(&biexponent_values(mu, q, t), k),
        move |n| k * n,
    )
}

/// `e_k[B_μ − 1]` as a polynomial.
pub fn delta_prime_eigenvalue(k: usize, mu: &Partition) -> MPoly {
    let cells: Vec<MPoly> = mu
        .cells()
        .filter(|&c| c != (0, 0))
        .map(|(a, b)| MPoly::monomial(&[(Var::Q, a as u32), (Var::T, b as u32)]))
        .collect();
    let mut e = vec![MPoly::zero(); k + 1];
    e[0] = MPoly::one();
    for c in &cells {
        for i in (1..=k).rev() {
            let add = &e[i - 1] * c;
            e[i] += &add;
        }
    }
    e.swap_remove(k)
}

/// `Π` eigenvalue `Π_{cells ≠ (0,0)} (1 − q^a t^b)`.
pub fn pi_eigenvalue(mu: &Partition) -> MPoly {
    let mut out = MPoly::one();
    for (a, b) in mu.cells().filter(|&c| c != (0, 0)) {
        out = &out * &(&MPoly::one() - &MPoly::monomial(&[(Var::Q, a as u32), (Var::T, b as u32)]));
    }
    out
}

fn pi_value(mu: &Partition, q: &BigRational, t: &BigRational) -> BigRational {
    biexponent_values(mu, q, t)
        .into_iter()
        .fold(BigRational::one(), |acc, v| acc * (BigRational::one() - v))
}

/// `Π` or, with `inverse`, `Π^{-1}`. The inverse fails with
/// [`Error::DenominatorsDoNotClear`] unless the result is polynomial.
pub fn pi_op(f: &SymFunc, inverse: bool) -> Result<SymFunc> {
    if inverse {
        apply_diagonal(f, |mu, q, t| pi_value(mu, q, t).recip(), |n| n * n)
    } else {
        apply_diagonal(f, pi_value, |n| n * n)
    }
}

/// `Θ_g f = Π g* Π^{-1} f`, where `g* = g[Z/((1−q)(1−t))]`.
pub fn theta(g: &SymFunc, f: &SymFunc) -> Result<SymFunc> {
    let fs = Split::new(f);
    let gs = Split::new(g);
    let fdeg = fs.degrees();
    let gdeg = gs.degrees();
    if fdeg.is_empty() || gdeg.is_empty() {
        return Ok(SymFunc::zero(Basis::S));
    }
    let top = fdeg.iter().max().unwrap() + gdeg.iter().max().unwrap();
    let start = fs.qt_degree() + gs.qt_degree() + binom2(top) + 2 * top;
    let eval = |q: &BigRational, t: &BigRational, cached: bool| -> Result<PointValues> {
        let mut acc: BTreeMap<(Monomial, Partition), BigRational> = BTreeMap::new();
        for &n in &fdeg {
            let pd = point_data(n, q, t, cached)?;
            let pis: Vec<BigRational> = pd.parts.iter().map(|mu| pi_value(mu, q, t)).collect();
            for (fo, v) in fs.at(n, &pd) {
                let c: Vec<BigRational> = pd
                    .to_htilde(&v)
                    .into_iter()
                    .zip(&pis)
                    .map(|(a, b)| a / b)
                    .collect();
                let w = pd.from_htilde(&c);
                for (go, gmap) in &gs.parts {
                    // multiply by g* in the power-sum basis, degree by degree
                    let mut prod: BTreeMap<usize, BTreeMap<Partition, BigRational>> =
                        BTreeMap::new();
                    for (sigma, gc) in gmap {
                        let mut gv = gc.eval(|x| if x == Var::Q { q.clone() } else { t.clone() });
                        if gv.is_zero() {
                            continue;
                        }
                        for &r in sigma.parts() {
                            gv /=
                                (BigRational::one() - pow(q, r)) * (BigRational::one() - pow(t, r));
                        }
                        for (rho, x) in pd.parts.iter().zip(&w) {
                            if x.is_zero() {
                                continue;
                            }
                            let mut parts = rho.parts().to_vec();
                            parts.extend_from_slice(sigma.parts());
                            let key = Partition::from_unsorted(parts);
                            let e = prod
                                .entry(key.size())
                                .or_default()
                                .entry(key)
                                .or_insert_with(BigRational::zero);
                            *e += x * &gv;
                        }
                    }
                    let outer = fo.mul(go);
                    for (m, vec) in prod {
                        let pm = point_data(m, q, t, cached)?;
                        let mut dense = vec![BigRational::zero(); pm.parts.len()];
                        for (rho, x) in vec {
                            dense[pm.index(&rho)] = x;
                        }
                        let pis_m: Vec<BigRational> =
                            pm.parts.iter().map(|mu| pi_value(mu, q, t)).collect();
                        let c: Vec<BigRational> = pm
                            .to_htilde(&dense)
                            .into_iter()
                            .zip(&pis_m)
                            .map(|(a, b)| a * b)
                            .collect();
                        for (rho, x) in pm.parts.iter().zip(pm.from_htilde(&c)) {
                            if x.is_zero() {
                                continue;
                            }
                            let e = acc
                                .entry((outer.clone(), rho.clone()))
                                .or_insert_with(BigRational::zero);
                            *e += x;
                        }
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(acc)
    };
    recover(eval, start)
}

/// `g* = g[Z/((1−q)(1−t))]` with the geometric series truncated at total
/// `q, t` degree `cap`.
pub fn star(g: &SymFunc, cap: u32) -> Result<SymFunc> {
    let a = &(&Alphabet::z() * &Alphabet::geometric(&Monomial::var(Var::Q), cap))
        * &Alphabet::geometric(&Monomial::var(Var::T), cap);
    plethysm(g, &a, Some(cap))
}

/// `g*` exactly: power-sum coefficients as rational functions.
pub fn star_exact(g: &SymFunc) -> Result<BTreeMap<Partition, MFrac>> {
    let gp = g.convert(Basis::P)?;
    let mut out = BTreeMap::new();
    for (rho, c) in gp.terms() {
        let mut den = MPoly::one();
        for &r in rho.parts() {
            let qr = MPoly::monomial(&[(Var::Q, r as u32)]);
            let tr = MPoly::monomial(&[(Var::T, r as u32)]);
            den = &den * &(&(&MPoly::one() - &qr) * &(&MPoly::one() - &tr));
        }
        out.insert(rho.clone(), MFrac::new(c.clone(), den)?);
    }
    Ok(out)
}

/// `⟨p_ρ, p_ρ⟩_* = (−1)^{n−ℓ} z_ρ Π (1 − q^{ρ_i})(1 − t^{ρ_i})`.
pub fn star_norm_p(rho: &Partition) -> MPoly {
    let mut v = MPoly::constant(BigRational::from_integer(rho.z()));
    if (rho.size() - rho.len()) % 2 == 1 {
        v = -v;
    }
    for &r in rho.parts() {
        let qr = MPoly::monomial(&[(Var::Q, r as u32)]);
        let tr = MPoly::monomial(&[(Var::T, r as u32)]);
        v = &v * &(&(&MPoly::one() - &qr) * &(&MPoly::one() - &tr));
    }
    v
}

/// `w̃_μ = Π_c (q^{a} − t^{l+1})(t^{l} − q^{a+1})`, the `*`-norm of `H̃_μ`.
pub fn htilde_norm(mu: &Partition) -> MPoly {
    let mut w = MPoly::one();
    for (a, b) in mu.cells() {
        let (arm, leg) = (mu.arm(a, b) as u32, mu.leg(a, b) as u32);
        let x = &MPoly::monomial(&[(Var::Q, arm)]) - &MPoly::monomial(&[(Var::T, leg + 1)]);
        let y = &MPoly::monomial(&[(Var::T, leg)]) - &MPoly::monomial(&[(Var::Q, arm + 1)]);
        w = &w * &(&x * &y);
    }
    w
}

/// `⟨f, g⟩_*` computed in the power-sum basis.
pub fn star_scalar(f: &SymFunc, g: &SymFunc) -> MPoly {
    let a = f.convert(Basis::P).expect("classical basis");
    let b = g.convert(Basis::P).expect("classical basis");
    let mut out = MPoly::zero();
    for (rho, c) in a.terms() {
        let d = b.coefficient(rho);
        if !d.is_zero() {
            out += &(&(c * &d) * &star_norm_p(rho));
        }
    }
    out
}

/// Coefficients `c_μ` with `f = Σ c_μ H̃_μ`, as exact rational functions.
pub fn expand_in_macdonald(f: &SymFunc) -> Result<BTreeMap<Partition, MFrac>> {
    if f.basis() == Basis::HTilde {
        return Ok(f
            .terms()
            .map(|(mu, c)| (mu.clone(), MFrac::from(c.clone())))
            .collect());
    }
    let fp = f.convert(Basis::P)?;
    let degrees: std::collections::BTreeSet<usize> = fp.terms().map(|(p, _)| p.size()).collect();
    let mut out = BTreeMap::new();
    for n in degrees {
        let part = fp.component(n);
        for mu in partitions_of(n) {
            let num = star_scalar(&part, &htilde_p(&mu));
            if num.is_zero() {
                continue;
            }
            out.insert(mu.clone(), MFrac::new(num, htilde_norm(&mu))?);
        }
    }
    Ok(out)
}

/// `Σ c_μ · λ_μ · H̃_μ` in the Schur basis with exact rational-function
/// coefficients; [`Error::DenominatorsDoNotClear`] if any coefficient is not
/// a polynomial.
pub fn apply_diagonal_symbolic(
    f: &SymFunc,
    eigen: impl Fn(&Partition) -> MPoly,
) -> Result<SymFunc> {
    let coords = expand_in_macdonald(f)?;
    let mut acc: BTreeMap<Partition, MFrac> = BTreeMap::new();
    for (mu, c) in coords {
        let scaled = &c * &MFrac::from(eigen(&mu));
        for (lam, d) in modified_macdonald(&mu).terms() {
            let e = acc.entry(lam.clone()).or_insert_with(MFrac::zero);
            *e = &*e + &(&scaled * &MFrac::from(d.clone()));
        }
    }
    let mut out = SymFunc::zero(Basis::S);
    for (lam, c) in acc {
        let p = c.to_poly().ok_or_else(|| {
            Error::DenominatorsDoNotClear(format!("coefficient of s{lam} is {c}"))
        })?;
        out.add_term(lam, &p);
    }
    Ok(out)
}

/// `∇` computed entirely over the fraction field; used as a cross-check.
pub fn nabla_symbolic(f: &SymFunc) -> Result<SymFunc> {
    apply_diagonal_symbolic(f, nabla_eigenvalue)
}
