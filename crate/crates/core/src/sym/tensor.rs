//! Triple-indexed Schur data `Σ c · s_λ(q) s_ρ(u) s_μ(z)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::schur_poly::{schur_at_ones, schur_at_ones_formal, schur_expand, schur_poly};
use super::symfunc::{Basis, SymFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{MPoly, Var};

pub type TensorKey = (Partition, Partition, Partition);

/// Integer table `(λ, ρ, μ) → c` standing for `Σ c · s_λ(q) s_ρ(u) s_μ(z)`.
/// Purely bosonic data keeps `ρ = ∅`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorFrobenius {
    entries: BTreeMap<TensorKey, BigInt>,
}

impl TensorFrobenius {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, lam: Partition, rho: Partition, mu: Partition, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (lam, rho, mu);
        let e = self.entries.entry(key.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn get(&self, lam: &Partition, rho: &Partition, mu: &Partition) -> BigInt {
        self.entries
            .get(&(lam.clone(), rho.clone(), mu.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&TensorKey, &BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_bosonic(&self) -> bool {
        self.entries.keys().all(|(_, rho, _)| rho.is_empty())
    }

    /// The common size of the `μ` indices.
    pub fn n(&self) -> Option<usize> {
        let mut it = self.entries.keys().map(|(_, _, mu)| mu.size());
        let n = it.next()?;
        it.all(|m| m == n).then_some(n)
    }

    /// Checks nonnegativity, a common `|μ|`, and for bosonic data the support
    /// bounds `|λ| ≤ binom(n,2) − η(μ')` and `ℓ(λ) ≤ n − μ_1`.
    pub fn check_support(&self) -> Result<()> {
        let n = match self.n() {
            Some(n) => n,
            None if self.is_empty() => return Ok(()),
            None => {
                return Err(Error::DegreeMismatch(
                    "entries have different z-degrees".into(),
                ))
            }
        };
        for ((lam, rho, mu), c) in &self.entries {
            if c.is_negative() {
                return Err(Error::NegativeCoefficient(format!("{lam} {rho} {mu} {c}")));
            }
            if rho.is_empty() {
                let bound = n * (n.saturating_sub(1)) / 2 - mu.conjugate().eta();
                if lam.size() > bound || lam.len() > n - mu.first() {
                    return Err(Error::DegreeAnomaly(format!(
                        "entry {lam} {mu} outside the support bounds"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `Σ c · s_λ(q) s_ρ(u) s_μ(z)` with explicit alphabets.
    pub fn to_symfunc(&self, qvars: &[Var], uvars: &[Var]) -> SymFunc {
        let mut out = SymFunc::zero(Basis::S);
        for ((lam, rho, mu), c) in &self.entries {
            let a = schur_poly(lam, qvars);
            if a.is_zero() {
                continue;
            }
            let b = schur_poly(rho, uvars);
            out.add_term(
                mu.clone(),
                &(&a * &b).scale(&BigRational::from_integer(c.clone())),
            );
        }
        out
    }

    /// Specialization with all `k` bosonic and `j` fermionic letters set to
    /// one.
    pub fn at_ones(&self, k: usize, j: usize) -> SymFunc {
        let mut out = SymFunc::zero(Basis::S);
        for ((lam, rho, mu), c) in &self.entries {
            let v = schur_at_ones(lam, k)
                * schur_at_ones(rho, j)
                * BigRational::from_integer(c.clone());
            out.add_term(mu.clone(), &MPoly::constant(v));
        }
        out
    }

    /// As [`TensorFrobenius::at_ones`] with `k`, `j` kept as formal variables.
    pub fn at_ones_formal(&self) -> SymFunc {
        let mut out = SymFunc::zero(Basis::S);
        for ((lam, rho, mu), c) in &self.entries {
            let v = &schur_at_ones_formal(lam, Var::K) * &schur_at_ones_formal(rho, Var::J);
            out.add_term(mu.clone(), &v.scale(&BigRational::from_integer(c.clone())));
        }
        out
    }

    /// Reads a Schur-basis function whose coefficients are symmetric in
    /// `qvars` and in `uvars` back into tensor form.
    pub fn from_symfunc(f: &SymFunc, qvars: &[Var], uvars: &[Var]) -> Result<TensorFrobenius> {
        let mut out = TensorFrobenius::new();
        for (mu, c) in f.to_s().terms() {
            for ((lam, rho), x) in schur_expand(c, qvars, uvars)? {
                if !x.is_integer() {
                    return Err(Error::NegativeCoefficient(format!(
                        "non-integral coefficient {x} at {lam} {rho} {mu}"
                    )));
                }
                out.add(lam, rho, mu.clone(), &x.to_integer());
            }
        }
        Ok(out)
    }

    /// Restricts to entries with `ℓ(λ) ≤ k` and `ℓ(ρ) ≤ j`.
    pub fn restrict(&self, k: usize, j: usize) -> TensorFrobenius {
        TensorFrobenius {
            entries: self
                .entries
                .iter()
                .filter(|((l, r, _), _)| l.len() <= k && r.len() <= j)
                .map(|(a, b)| (a.clone(), b.clone()))
                .collect(),
        }
    }
}

/// One line per entry, `[λ] [ρ] [μ] c`.
impl fmt::Display for TensorFrobenius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((lam, rho, mu), c) in &self.entries {
            writeln!(f, "{lam} {rho} {mu} {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorFrobenius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string().trim_end().replace('\n', "; "))
    }
}

impl FromStr for TensorFrobenius {
    type Err = Error;

    fn from_str(s: &str) -> Result<TensorFrobenius> {
        let mut out = TensorFrobenius::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [l, r, m, c] = fields[..] else {
                return Err(Error::Parse(format!(
                    "expected `[l] [r] [m] c`, got `{line}`"
                )));
            };
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in `{line}`")))?;
            out.add(l.parse()?, r.parse()?, m.parse()?, &c);
        }
        Ok(out)
    }
}
