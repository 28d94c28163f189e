//! Coefficientwise comparison and the named checks built on it.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;

use super::formulas::{closed_form, FormulaId, FormulaParams};
use super::main_conj::{eval_main_conjecture, from_letters, Mode};
use crate::error::{Error, Result};
use crate::macdonald::delta_prime;
use crate::partition::Partition;
use crate::poly::{MPoly, Var};
use crate::sym::{schur_poly, skew, SymFunc, TensorFrobenius};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Match,
    Mismatch,
    /// Agreement where the claim applies, with differences outside it.
    Partial,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::Partial => "partial",
        })
    }
}

/// First basis element where two sides differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub element: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.element, self.left, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub id: String,
    pub n: usize,
    pub k: usize,
    pub j: usize,
    pub cap: Option<u32>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn new(id: impl Into<String>, n: usize, k: usize, j: usize) -> VerifyReport {
        VerifyReport {
            id: id.into(),
            n,
            k,
            j,
            cap: None,
            status: Status::Match,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn is_match(&self) -> bool {
        self.status != Status::Mismatch
    }

    /// Records the outcome of a comparison.
    pub fn with(mut self, outcome: Option<Witness>) -> VerifyReport {
        if let Some(w) = outcome {
            self.status = Status::Mismatch;
            self.witness = Some(w);
        }
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> VerifyReport {
        self.notes.push(text.into());
        self
    }

    /// `CHECK <id> n=<n> k=<k> j=<j> STATUS <status> [witness=...]`.
    pub fn machine_line(&self) -> String {
        let mut s = format!(
            "CHECK {} n={} k={} j={} STATUS {}",
            self.id, self.n, self.k, self.j, self.status
        );
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness={}", w.to_string().replace(' ', "")));
        }
        s
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n={}, k={}, j={}", self.id, self.n, self.k, self.j)?;
        if let Some(c) = self.cap {
            write!(f, ", cap={c}")?;
        }
        write!(f, "): {}", self.status)?;
        if let Some(w) = &self.witness {
            write!(f, "; first difference at {w}")?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

/// How two expansions are compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompareMode {
    Exact,
    /// Coefficients truncated at this total degree in the given letters.
    UpToDegree(Vec<Var>, u32),
    /// Both sides evaluated at a point first.
    AfterSpecialization(Vec<(Var, BigRational)>),
}

/// First Schur coefficient, in partition order, where `a` and `b` differ.
pub fn compare(a: &SymFunc, b: &SymFunc, mode: &CompareMode) -> Option<Witness> {
    let prep = |f: &SymFunc| -> SymFunc {
        let s = f.to_s();
        match mode {
            CompareMode::Exact => s,
            CompareMode::UpToDegree(vars, d) => s.map_coeffs(|c| c.truncate_in(vars, *d)),
            CompareMode::AfterSpecialization(point) => s.map_coeffs(|c| {
                let mut c = c.clone();
                for (v, x) in point {
                    c = c.substitute(*v, &MPoly::constant(x.clone()));
                }
                c
            }),
        }
    };
    let (a, b) = (prep(a), prep(b));
    let keys: BTreeSet<&Partition> = a
        .terms()
        .map(|(p, _)| p)
        .chain(b.terms().map(|(p, _)| p))
        .collect();
    for p in keys {
        let (x, y) = (a.coefficient(p), b.coefficient(p));
        if x != y {
            return Some(Witness {
                element: format!("s{p}"),
                left: x.to_string(),
                right: y.to_string(),
            });
        }
    }
    None
}

/// First tensor entry where two tables differ.
pub fn compare_tensors(a: &TensorFrobenius, b: &TensorFrobenius) -> Option<Witness> {
    let keys: BTreeSet<_> = a
        .entries()
        .map(|(k, _)| k.clone())
        .chain(b.entries().map(|(k, _)| k.clone()))
        .collect();
    for (l, r, m) in keys {
        let (x, y) = (a.get(&l, &r, &m), b.get(&l, &r, &m));
        if x != y {
            return Some(Witness {
                element: format!("{l} {r} {m}"),
                left: x.to_string(),
                right: y.to_string(),
            });
        }
    }
    None
}

/// Checks `Σ_μ (e_k^⊥ C_μ)(q, t) s_μ = Δ′_{e_{n−k−1}} e_n`.
pub fn skew_conjecture_check(e: &TensorFrobenius, n: usize, k: usize) -> Result<VerifyReport> {
    if k >= n {
        return Err(Error::Unsupported(format!(
            "need k ≤ n − 1, got k = {k}, n = {n}"
        )));
    }
    let two = Var::qs(2);
    let ek = SymFunc::e_n(k);
    let mut left = SymFunc::zero(crate::sym::Basis::S);
    for ((lam, _, mu), c) in e.entries() {
        let skewed = skew(&SymFunc::s(lam.clone()), &ek);
        let mut value = MPoly::zero();
        for (kappa, d) in skewed.terms() {
            value += &(&schur_poly(kappa, &two) * d);
        }
        left.add_term(
            mu.clone(),
            &value.scale(&BigRational::from_integer(c.clone())),
        );
    }
    let right = from_letters(&delta_prime(n - k - 1, &SymFunc::e_n(n))?);
    Ok(VerifyReport::new("skew", n, k, 0).with(compare(&left, &right, &CompareMode::Exact)))
}

/// Compares the bosonic prediction with `h_n[Ω(q) z] / h_n[Ω(q)]` through
/// total degree `cap`; the next degree is reported for information only.
pub fn low_degree_check(e: &TensorFrobenius, n: usize, k: usize, cap: u32) -> Result<VerifyReport> {
    let qs = Var::qs(k);
    let left = eval_main_conjecture(e, k, 0, Mode::Symbolic);
    let params = FormulaParams {
        cap: Some(cap + 1),
        k,
        ..Default::default()
    };
    let right = closed_form(FormulaId::LowDegRhs, n, &params)?;
    let mut report = VerifyReport::new("lowdeg", n, k, 0).with(compare(
        &left,
        &right,
        &CompareMode::UpToDegree(qs.clone(), cap),
    ));
    report.cap = Some(cap);
    if report.is_match() {
        let exact =
            |f: &SymFunc| f.map_coeffs(|c| c.truncate_in(&qs, cap + 1) - c.truncate_in(&qs, cap));
        if let Some(w) = compare(&exact(&left), &exact(&right), &CompareMode::Exact) {
            report.status = Status::Partial;
            report = report.note(format!(
                "degree {} differs outside the claim, first at {w}",
                cap + 1
            ));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::data::embedded_e;
    use super::*;

    #[test]
    fn compare_examples() {
        let x = SymFunc::s("[2,1]".parse().unwrap());
        assert_eq!(compare(&x, &x, &CompareMode::Exact), None);
        let w = compare(
            &SymFunc::s("[2]".parse().unwrap()),
            &SymFunc::s("[1,1]".parse().unwrap()),
            &CompareMode::Exact,
        )
        .unwrap();
        assert_eq!(w.to_string(), "s[2]: 1 vs 0");
        let r = VerifyReport::new("demo", 2, 0, 0).with(Some(w));
        assert_eq!(
            r.machine_line(),
            "CHECK demo n=2 k=0 j=0 STATUS mismatch witness=s[2]:1vs0"
        );
    }

    #[test]
    fn skew_small_cases() {
        for n in 1..=3 {
            let e = embedded_e(n).unwrap();
            for k in 0..n {
                assert!(
                    skew_conjecture_check(&e, n, k).unwrap().is_match(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn low_degree_small_cases() {
        let e1 = embedded_e(1).unwrap();
        for k in 1..=3 {
            assert_eq!(
                low_degree_check(&e1, 1, k, 6).unwrap().status,
                Status::Match
            );
        }
        let e3 = embedded_e(3).unwrap();
        assert!(low_degree_check(&e3, 3, 3, 3).unwrap().is_match());
        // one letter: an identity in every degree
        assert_eq!(
            low_degree_check(&e3, 3, 1, 8).unwrap().status,
            Status::Match
        );
    }
}
