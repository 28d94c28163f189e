//! Closed formulas for the low-rank cases, each evaluated literally.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::main_conj::{eval_main_conjecture, from_letters, Mode};
use crate::error::{Error, Result};
use crate::macdonald::{delta_prime, nabla, theta};
use crate::partition::{partitions_of, standard_tableaux, Partition};
use crate::poly::{MPoly, Monomial, Var};
use crate::sym::{
    kronecker, monomial_symmetric, plethysm, plethysm_scalar, tables, Alphabet, Basis, SymFunc,
    TensorFrobenius,
};

/// Every formula the library can evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    K1J0,
    K0J1,
    K0Jj,
    K2J0,
    K1J1,
    K0J2,
    K0J2Kron,
    K2J1,
    K1J1FromK2J1,
    K1J2,
    K2J2,
    MSeries,
    LowDegRhs,
}

impl FormulaId {
    pub const ALL: [FormulaId; 13] = [
        FormulaId::K1J0,
        FormulaId::K0J1,
        FormulaId::K0Jj,
        FormulaId::K2J0,
        FormulaId::K1J1,
        FormulaId::K0J2,
        FormulaId::K0J2Kron,
        FormulaId::K2J1,
        FormulaId::K1J1FromK2J1,
        FormulaId::K1J2,
        FormulaId::K2J2,
        FormulaId::MSeries,
        FormulaId::LowDegRhs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::K1J0 => "K1J0",
            FormulaId::K0J1 => "K0J1",
            FormulaId::K0Jj => "K0Jj",
            FormulaId::K2J0 => "K2J0",
            FormulaId::K1J1 => "K1J1",
            FormulaId::K0J2 => "K0J2",
            FormulaId::K0J2Kron => "K0J2_KRON",
            FormulaId::K2J1 => "K2J1",
            FormulaId::K1J1FromK2J1 => "K1J1_FROM_K2J1",
            FormulaId::K1J2 => "K1J2",
            FormulaId::K2J2 => "K2J2",
            FormulaId::MSeries => "M_SERIES",
            FormulaId::LowDegRhs => "LOWDEG_RHS",
        }
    }

    /// The `(k, j)` cell the formula describes, when it has one.
    pub fn cell(self) -> Option<(usize, usize)> {
        match self {
            FormulaId::K1J0 => Some((1, 0)),
            FormulaId::K0J1 => Some((0, 1)),
            FormulaId::K2J0 => Some((2, 0)),
            FormulaId::K1J1 | FormulaId::K1J1FromK2J1 => Some((1, 1)),
            FormulaId::K0J2 | FormulaId::K0J2Kron => Some((0, 2)),
            FormulaId::K2J1 => Some((2, 1)),
            FormulaId::K1J2 => Some((1, 2)),
            FormulaId::K2J2 => Some((2, 2)),
            FormulaId::K0Jj | FormulaId::MSeries | FormulaId::LowDegRhs => None,
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FormulaId> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown formula `{s}`")))
    }
}

/// Extra inputs some formulas need.
#[derive(Clone, Debug, Default)]
pub struct FormulaParams {
    /// Degree cap for series-valued formulas.
    pub cap: Option<u32>,
    /// Number of bosonic letters (for the low-degree right side).
    pub k: usize,
    /// Number of fermionic letters (for `K0Jj` and the M series).
    pub j: usize,
    /// Generic bosonic data, needed by `K0Jj`.
    pub en: Option<TensorFrobenius>,
    /// Start the `K2J2` outer sum at zero instead of one.
    pub k2j2_from_zero: bool,
}

/// The formula `id` at size `n`. Bosonic letters are `q1 = q`, `q2 = t`,
/// fermionic ones `u1 = u`, `u2 = v`.
pub fn closed_form(id: FormulaId, n: usize, params: &FormulaParams) -> Result<SymFunc> {
    if n == 0 {
        return Err(Error::Unsupported("formulas are stated for n ≥ 1".into()));
    }
    let cap = || {
        params
            .cap
            .ok_or_else(|| Error::MissingCap(format!("{id} is a series")))
    };
    match id {
        FormulaId::K1J0 => k1j0(n, cap()?),
        FormulaId::K0J1 => Ok(k0j1(n)),
        FormulaId::K0Jj => {
            let e = params
                .en
                .as_ref()
                .ok_or_else(|| Error::Unsupported("K0Jj needs the generic data E_n".into()))?;
            Ok(eval_main_conjecture(e, 0, params.j, Mode::Symbolic))
        }
        FormulaId::K2J0 => Ok(from_letters(&nabla(&SymFunc::e_n(n))?)),
        FormulaId::K1J1 => Ok(k1j1(n)),
        FormulaId::K0J2 => k0j2(n),
        FormulaId::K0J2Kron => Ok(k0j2_kron(n)),
        FormulaId::K2J1 => k2j1(n),
        FormulaId::K1J1FromK2J1 => {
            let f = k2j1(n)?;
            Ok(f.map_coeffs(|c| c.substitute(Var::q(2), &MPoly::zero())))
        }
        FormulaId::K1J2 => Ok(k1j2(n)),
        FormulaId::K2J2 => k2j2(n, params.k2j2_from_zero),
        FormulaId::MSeries => m_series(n, params.j),
        FormulaId::LowDegRhs => lowdeg_rhs(n, params.k, cap()?),
    }
}

fn hook(n: usize, a: usize) -> Partition {
    Partition::hook(n, a)
}

fn var(v: Var) -> MPoly {
    MPoly::var(v)
}

/// `h_n[Z/(1−q)] / h_n[1/(1−q)]`, truncated at `q`-degree `cap`.
fn k1j0(n: usize, cap: u32) -> Result<SymFunc> {
    let q = Monomial::var(Var::q(1));
    let geo = Alphabet::geometric(&q, cap);
    let num = plethysm(&SymFunc::h_n(n), &(&Alphabet::z() * &geo), Some(cap))?;
    let den = plethysm_scalar(&SymFunc::h_n(n), &geo, Some(cap))?;
    let mut quot = SymFunc::zero(Basis::P);
    for (rho, c) in num.terms() {
        quot.add_term(rho.clone(), &c.series_div(&den, cap)?);
    }
    Ok(quot.to_s())
}

/// `Σ_a u^a s_{(n−a,1^a)}`.
fn k0j1(n: usize) -> SymFunc {
    let u = var(Var::u(1));
    SymFunc::from_terms(Basis::S, (0..n).map(|a| (hook(n, a), u.pow(a as u32))))
}

/// Gaussian binomial `[m choose k]` in `q`.
pub fn q_binomial(m: usize, k: usize, q: Var) -> MPoly {
    if k > m {
        return MPoly::zero();
    }
    let qint = |i: usize| -> MPoly { (0..i).map(|e| MPoly::var(q).pow(e as u32)).sum() };
    // product formula, divided exactly step by step
    let mut num = MPoly::one();
    for i in 0..k {
        num = &num * &qint(m - i);
        num = num
            .div_exact(&qint(i + 1))
            .expect("Gaussian binomials are polynomials");
    }
    num
}

/// Tableau formula: `Σ_k Σ_τ q^{maj − k des + binom(k,2)} [des choose k]_q u^k s_λ`.
fn k1j1(n: usize) -> SymFunc {
    let (q, u) = (Var::q(1), Var::u(1));
    let mut out = SymFunc::zero(Basis::S);
    for lam in partitions_of(n) {
        for tau in standard_tableaux(&lam) {
            let des = tau.descents().len();
            let maj = tau.major_index();
            for k in 0..n.min(des + 1) {
                let alpha = maj + k * k.saturating_sub(1) / 2 - k * des;
                let c = q_binomial(des, k, q)
                    .mul_monomial(&Monomial::new(&[(q, alpha as u32), (u, k as u32)]));
                out.add_term(lam.clone(), &c);
            }
        }
    }
    out
}

/// Kronecker differences of hooks, with hooks of negative leg read as zero.
fn k0j2(n: usize) -> Result<SymFunc> {
    let (u, v) = (var(Var::u(1)), var(Var::u(2)));
    let mut out = SymFunc::zero(Basis::S);
    for a in 0..n {
        for b in 0..n - a {
            let mut f = kronecker(&SymFunc::s(hook(n, a)), &SymFunc::s(hook(n, b)))?;
            if a >= 1 && b >= 1 {
                f = &f - &kronecker(&SymFunc::s(hook(n, a - 1)), &SymFunc::s(hook(n, b - 1)))?;
            }
            out = &out + &f.scale(&(&u.pow(a as u32) * &v.pow(b as u32)));
        }
    }
    Ok(out)
}

/// Kronecker coefficient `g^μ_{αβ}` from the character table.
pub fn kronecker_coefficient(alpha: &Partition, beta: &Partition, mu: &Partition) -> BigRational {
    let t = tables(mu.size());
    let (a, b, m) = (t.index(alpha), t.index(beta), t.index(mu));
    let mut g = BigRational::zero();
    for r in 0..t.len() {
        let x = t.chi[a][r] * t.chi[b][r] * t.chi[m][r];
        if x != 0 {
            g += BigRational::new(BigInt::from(x), t.z[r].clone());
        }
    }
    g
}

/// The same in Kronecker-coefficient form with hooks in Frobenius notation.
fn k0j2_kron(n: usize) -> SymFunc {
    let (u, v) = (var(Var::u(1)), var(Var::u(2)));
    let mut out = SymFunc::zero(Basis::S);
    for mu in partitions_of(n) {
        let mut c = MPoly::zero();
        for b in 0..n {
            for d in 0..n - b {
                let mut g = kronecker_coefficient(&hook(n, b), &hook(n, d), &mu);
                if b >= 1 && d >= 1 {
                    g -= kronecker_coefficient(&hook(n, b - 1), &hook(n, d - 1), &mu);
                }
                c += &(&u.pow(b as u32) * &v.pow(d as u32)).scale(&g);
            }
        }
        out.add_term(mu, &c);
    }
    out
}

/// `Σ_a u^a Δ′_{e_{n−a−1}} e_n`.
fn k2j1(n: usize) -> Result<SymFunc> {
    let u = var(Var::u(1));
    let en = SymFunc::e_n(n);
    let mut out = SymFunc::zero(Basis::S);
    for a in 0..n {
        let d = from_letters(&delta_prime(n - a - 1, &en)?);
        out = &out + &d.scale(&u.pow(a as u32));
    }
    Ok(out)
}

fn multinomial(parts: &[usize]) -> BigInt {
    let mut out = BigInt::one();
    let mut total = 0usize;
    for &p in parts {
        for i in 1..=p {
            total += 1;
            out = out * BigInt::from(total) / BigInt::from(i);
        }
    }
    out
}

/// `½ Σ_μ 2^{ℓ(μ)} (−1)^{n−ℓ(μ)} binom(ℓ(μ); d_1..d_n) p_μ`.
fn k1j2(n: usize) -> SymFunc {
    let mut out = SymFunc::zero(Basis::P);
    for mu in partitions_of(n) {
        let l = mu.len();
        let mut c = BigInt::from(2).pow(l as u32) * multinomial(&mu.multiplicities());
        if (n - l).is_odd() {
            c = -c;
        }
        out.add_term(mu, &MPoly::constant(BigRational::new(c, BigInt::from(2))));
    }
    out.to_s()
}

/// `Σ_{k} Σ_{i+j=k} u^i v^j Θ_{e_i e_j} ∇ e_{n−k}`, from `k = 1` as printed
/// or from `k = 0`.
fn k2j2(n: usize, from_zero: bool) -> Result<SymFunc> {
    let (u, v) = (var(Var::u(1)), var(Var::u(2)));
    let mut out = SymFunc::zero(Basis::S);
    for k in (if from_zero { 0 } else { 1 })..n {
        let f = nabla(&SymFunc::e_n(n - k))?;
        for i in 0..=k {
            let g = crate::sym::multiply(&SymFunc::e_n(i), &SymFunc::e_n(k - i));
            let term = from_letters(&theta(&g, &f)?);
            out = &out + &term.scale(&(&u.pow(i as u32) * &v.pow((k - i) as u32)));
        }
    }
    Ok(out)
}

/// `Σ_k Σ_{ν⊢k} m_ν(u_1..u_r) Θ_{e_ν} ∇ e_{n−k}`.
fn m_series(n: usize, r: usize) -> Result<SymFunc> {
    let us = Var::us(r);
    let mut out = SymFunc::zero(Basis::S);
    for k in 0..n {
        let f = nabla(&SymFunc::e_n(n - k))?;
        for nu in partitions_of(k) {
            let m = monomial_symmetric(&nu, &us);
            if m.is_zero() {
                continue;
            }
            let g = SymFunc::element(Basis::E, nu);
            let term = from_letters(&theta(&g, &f)?);
            out = &out + &term.scale(&m);
        }
    }
    Ok(out)
}

/// `h_n[Ω(q) Z] / h_n[Ω(q)]` in `k` letters, truncated at total degree `cap`.
fn lowdeg_rhs(n: usize, k: usize, cap: u32) -> Result<SymFunc> {
    let omega = Alphabet::omega(&Var::qs(k), cap);
    let num = plethysm(&SymFunc::h_n(n), &(&omega * &Alphabet::z()), Some(cap))?;
    let den = plethysm_scalar(&SymFunc::h_n(n), &omega, Some(cap))?;
    let mut quot = SymFunc::zero(Basis::P);
    for (rho, c) in num.terms() {
        quot.add_term(rho.clone(), &c.series_div(&den, cap)?);
    }
    Ok(quot.to_s())
}
