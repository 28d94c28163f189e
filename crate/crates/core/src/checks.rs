//! Named verification jobs shared by the command line and the tests.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cache::CacheStore;
use crate::conjecture::{
    calibrate_fibonacci, closed_form, compare, compare_tensors, computed_count,
    dimension_polynomial, eval_main_conjecture, eval_main_tensor, expected_count,
    expected_count_shifted, frobenius_erratum_n3, generic_e, low_degree_check,
    printed_dimension_polynomial_n3, printed_dims, skew_conjecture_check, CompareMode, CountTable,
    FormulaId, FormulaParams, Mode, Provenance, Status, VerifyReport, Witness,
};
use crate::error::{Error, Result};
use crate::oracle::{coinvariant_frobenius_bounded, OracleReport, DEFAULT_N_BOUND};
use crate::poly::Var;
use crate::sym::{SymFunc, TensorFrobenius};

/// Where data comes from and how far the oracle may go.
#[derive(Clone, Debug)]
pub struct Context {
    pub store: Option<CacheStore>,
    pub n_bound: usize,
}

impl Default for Context {
    fn default() -> Context {
        Context {
            store: None,
            n_bound: DEFAULT_N_BOUND,
        }
    }
}

impl Context {
    pub fn en(&self, n: usize) -> Result<(TensorFrobenius, Provenance)> {
        if n > self.n_bound && n > crate::conjecture::EMBEDDED_MAX {
            return Err(Error::ResourceCap(format!(
                "E_{n} needs the oracle at n = {n}, above the bound {}",
                self.n_bound
            )));
        }
        match &self.store {
            Some(store) => store.generic_e(n, self.n_bound),
            None => generic_e(n),
        }
    }

    pub fn oracle(&self, k: usize, j: usize, n: usize) -> Result<OracleReport> {
        match &self.store {
            Some(store) => store.oracle(k, j, n, self.n_bound),
            None => coinvariant_frobenius_bounded(k, j, n, self.n_bound),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Main,
    Skew,
    Zabrocki,
    KimRhoades,
    K1J1,
    K1J2,
    K2J2,
    LowDeg,
    Tables,
    All,
}

impl Check {
    pub const NAMED: [Check; 9] = [
        Check::Main,
        Check::Skew,
        Check::Zabrocki,
        Check::KimRhoades,
        Check::K1J1,
        Check::K1J2,
        Check::K2J2,
        Check::LowDeg,
        Check::Tables,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Main => "main",
            Check::Skew => "skew",
            Check::Zabrocki => "zabrocki",
            Check::KimRhoades => "kimrhoades",
            Check::K1J1 => "k1j1",
            Check::K1J2 => "k1j2",
            Check::K2J2 => "k2j2",
            Check::LowDeg => "lowdeg",
            Check::Tables => "tables",
            Check::All => "all",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::NAMED
            .into_iter()
            .chain([Check::All])
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

/// Parameters of a check; absent values select the default sweep.
#[derive(Clone, Debug, Default)]
pub struct CheckArgs {
    pub n: usize,
    pub k: Option<usize>,
    pub j: Option<usize>,
    pub cap: Option<u32>,
}

/// The `(k, j)` pairs compared against the oracle by default.
pub const ORACLE_PAIRS: [(usize, usize); 6] = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (2, 1)];

fn provenance_note(p: Provenance) -> String {
    format!("E_n source: {p}")
}

fn report(
    id: &str,
    n: usize,
    k: usize,
    j: usize,
    p: Provenance,
    outcome: Option<Witness>,
) -> VerifyReport {
    VerifyReport::new(id, n, k, j)
        .with(outcome)
        .note(provenance_note(p))
}

/// First negative coefficient of a tensor table.
pub fn first_negative(t: &TensorFrobenius) -> Option<Witness> {
    t.entries()
        .find(|(_, c)| c.is_negative())
        .map(|((l, r, m), c)| Witness {
            element: format!("{l} {r} {m}"),
            left: c.to_string(),
            right: "≥ 0".into(),
        })
}

/// Schur expansion in both letter alphabets followed by a sign check.
pub fn schur_positivity(f: &SymFunc, qs: &[Var], us: &[Var]) -> Result<Option<Witness>> {
    Ok(first_negative(&TensorFrobenius::from_symfunc(f, qs, us)?))
}

fn main_check(args: &CheckArgs, ctx: &Context) -> Result<Vec<VerifyReport>> {
    let n = args.n;
    let (e, p) = ctx.en(n)?;
    let pairs: Vec<(usize, usize)> = match (args.k, args.j) {
        (Some(k), Some(j)) => vec![(k, j)],
        (Some(k), None) => ORACLE_PAIRS
            .iter()
            .copied()
            .filter(|&(a, _)| a == k)
            .collect(),
        (None, Some(j)) => ORACLE_PAIRS
            .iter()
            .copied()
            .filter(|&(_, b)| b == j)
            .collect(),
        (None, None) => ORACLE_PAIRS.to_vec(),
    };
    let mut out = Vec::new();
    for (k, j) in pairs {
        let oracle = ctx.oracle(k, j, n)?;
        out.push(report(
            "main",
            n,
            k,
            j,
            p,
            compare_tensors(&oracle.frobenius, &eval_main_tensor(&e, k, j)),
        ));
    }
    Ok(out)
}

fn skew_check(args: &CheckArgs, ctx: &Context) -> Result<Vec<VerifyReport>> {
    let n = args.n;
    let (e, p) = ctx.en(n)?;
    let ks: Vec<usize> = match args.k {
        Some(k) => vec![k],
        None => (0..n).collect(),
    };
    ks.into_iter()
        .map(|k| Ok(skew_conjecture_check(&e, n, k)?.note(provenance_note(p))))
        .collect()
}

fn params() -> FormulaParams {
    FormulaParams::default()
}

/// A closed form against the universal formula and, within reach, the
/// oracle.
fn formula_vs_both(
    id: FormulaId,
    name: &str,
    n: usize,
    ctx: &Context,
    oracle_max: usize,
) -> Result<(SymFunc, Vec<VerifyReport>)> {
    let (k, j) = id.cell().expect("formula with a cell");
    let (e, p) = ctx.en(n)?;
    let formula = closed_form(id, n, &params())?;
    let mut out = vec![report(
        name,
        n,
        k,
        j,
        p,
        compare(
            &formula,
            &eval_main_conjecture(&e, k, j, Mode::Symbolic),
            &CompareMode::Exact,
        ),
    )];
    if n <= oracle_max.min(ctx.n_bound) {
        let oracle = ctx.oracle(k, j, n)?;
        let o = oracle.frobenius.to_symfunc(&Var::qs(k), &Var::us(j));
        out.push(
            VerifyReport::new(format!("{name}-oracle"), n, k, j).with(compare(
                &formula,
                &o,
                &CompareMode::Exact,
            )),
        );
    }
    Ok((formula, out))
}

fn zabrocki_check(args: &CheckArgs, ctx: &Context) -> Result<Vec<VerifyReport>> {
    let n = args.n;
    let (formula, mut out) = formula_vs_both(FormulaId::K2J1, "zabrocki", n, ctx, ctx.n_bound)?;
    let t0 = closed_form(FormulaId::K1J1FromK2J1, n, &params())?;
    out.push(VerifyReport::new("zabrocki-t0", n, 1, 1).with(compare(
        &t0,
        &closed_form(FormulaId::K1J1, n, &params())?,
        &CompareMode::Exact,
    )));
    let ones = formula
        .map_coeffs(|c| crate::poly::MPoly::constant(c.at_ones()))
        .drop_z()
        .constant_value()
        .unwrap_or_else(BigRational::zero);
    let want = expected_count(CountTable::Dims, n, 2, 1)?;
    let w = (ones != want).then(|| Witness {
        element: "dimension".into(),
        left: ones.to_string(),
        right: want.to_string(),
    });
    out.push(VerifyReport::new("zabrocki-dims", n, 2, 1).with(w));
    Ok(out)
}

fn kimrhoades_check(args: &CheckArgs, ctx: &Context) -> Result<Vec<VerifyReport>> {
    let n = args.n;
    let (formula, mut out) = formula_vs_both(FormulaId::K0J2, "kimrhoades", n, ctx, ctx.n_bound)?;
    let kron = closed_form(FormulaId::K0J2Kron, n, &params())?;
    out.push(VerifyReport::new("kimrhoades-kron", n, 0, 2).with(compare(
        &formula,
        &kron,
        &CompareMode::Exact,
    )));
    let neg = kron
        .to_s()
        .terms()
        .find(|(_, c)| !c.has_nonnegative_integer_coefficients())
        .map(|(m, c)| Witness {
            element: format!("s{m}"),
            left: c.to_string(),
            right: "≥ 0".into(),
        });
    out.push(VerifyReport::new("kimrhoades-positivity", n, 0, 2).with(neg));
    Ok(out)
}

fn k1j1_check(args: &CheckArgs, ctx: &Context) -> Result<Vec<VerifyReport>> {
    Ok(formula_vs_both(FormulaId::K1J1, "k1j1", args.n, ctx, ctx.n_bound)?.1)
}

fn k1j2_check(args: &CheckArgs, ctx: &Context) -> Result<Vec<VerifyReport>> {
    let n = args.n;
    let (e, p) = ctx.en(n)?;
    let formula = closed_form(FormulaId::K1J2, n, &params())?;
    let ones = eval_main_conjecture(&e, 1, 2, Mode::Ones);
    let mut out = vec![report(
        "k1j2",
        n,
        1,
        2,
        p,
        compare(&formula, &ones, &CompareMode::Exact),
    )];
    let dim = formula
        .drop_z()
        .constant_value()
        .unwrap_or_else(BigRational::zero);
    let mut r = VerifyReport::new("k1j2-dims", n, 1, 2);
    if let Some(printed) = printed_dims(n) {
        let printed = BigRational::from_integer(printed[1][2].into());
        if printed != dim {
            r.status = Status::Partial;
            r = r.note(format!("printed grid gives {printed}, the formula and the closed form 2^(n-1) n! give {dim}"));
        }
    }
    let want = expected_count(CountTable::Dims, n, 1, 2)?;
    out.push(r.with((dim != want).then(|| Witness {
        element: "dimension".into(),
        left: dim.to_string(),
        right: want.to_string(),
    })));
    Ok(out)
}

fn k2j2_check(args: &CheckArgs, ctx: &Context) -> Result<Vec<VerifyReport>> {
    let n = args.n;
    let (e, p) = ctx.en(n)?;
    let dbf = eval_main_conjecture(&e, 2, 2, Mode::Symbolic);
    let zero = closed_form(
        FormulaId::K2J2,
        n,
        &FormulaParams {
            k2j2_from_zero: true,
            ..params()
        },
    )?;
    let one = closed_form(FormulaId::K2J2, n, &params())?;
    let mut main = report(
        "k2j2",
        n,
        2,
        2,
        p,
        compare(&zero, &dbf, &CompareMode::Exact),
    )
    .note("outer sum read from k = 0");
    if let Some(w) = compare(&one, &dbf, &CompareMode::Exact) {
        main = main.note(format!("outer sum from k = 1 differs, first at {w}"));
    }
    let mut out = vec![main];
    if n <= 3.min(ctx.n_bound) {
        let o = ctx
            .oracle(2, 2, n)?
            .frobenius
            .to_symfunc(&Var::qs(2), &Var::us(2));
        out.push(VerifyReport::new("k2j2-oracle", n, 2, 2).with(compare(
            &zero,
            &o,
            &CompareMode::Exact,
        )));
    }
    let m = closed_form(FormulaId::MSeries, n, &FormulaParams { j: 2, ..params() })?;
    out.push(
        VerifyReport::new("m-series-positivity", n, 2, 2).with(schur_positivity(
            &m,
            &Var::qs(2),
            &Var::us(2),
        )?),
    );
    out.push(
        VerifyReport::new("m-series-below", n, 2, 2).with(schur_positivity(
            &(&dbf - &m),
            &Var::qs(2),
            &Var::us(2),
        )?),
    );
    Ok(out)
}

fn lowdeg_check(args: &CheckArgs, ctx: &Context) -> Result<Vec<VerifyReport>> {
    let n = args.n;
    let (e, p) = ctx.en(n)?;
    let ks: Vec<usize> = match args.k {
        Some(k) => vec![k],
        None => (1..=4).collect(),
    };
    let cap = args.cap.unwrap_or(n as u32);
    ks.into_iter()
        .map(|k| Ok(low_degree_check(&e, n, k, cap)?.note(provenance_note(p))))
        .collect()
}

/// The Fibonacci shifts consistent with the universal formula for sizes
/// `1..=n`.
pub fn fibonacci_shifts(n: usize, ctx: &Context) -> Result<Vec<i64>> {
    let mut values = Vec::new();
    for m in 1..=n {
        let (e, _) = ctx.en(m)?;
        values.push((m, computed_count(&e, CountTable::Alt, m, 1, 3)));
    }
    Ok(calibrate_fibonacci(&values))
}

fn tables_check(args: &CheckArgs, ctx: &Context) -> Result<Vec<VerifyReport>> {
    let n = args.n;
    let (e, p) = ctx.en(n)?;
    let shifts = fibonacci_shifts(n, ctx)?;
    let mut out = Vec::new();
    for table in [CountTable::Dims, CountTable::Alt] {
        let mut r = VerifyReport::new(format!("tables-{table}"), n, 0, 0).note(provenance_note(p));
        for k in 0..=3 {
            for j in 0..=3 {
                let want = if (table, k, j) == (CountTable::Alt, 1, 3) {
                    match shifts.first() {
                        Some(&s) => expected_count_shifted(table, n, k, j, s),
                        None => Err(Error::Interpolation("no Fibonacci index fits".into())),
                    }
                } else {
                    expected_count(table, n, k, j)
                };
                let want = match want {
                    Ok(w) => w,
                    Err(Error::UnfilledCell(_)) => continue,
                    Err(err) => return Err(err),
                };
                if (table, k, j) == (CountTable::Alt, 0, 0) && n == 1 {
                    r = r.note("alt (0,0) is 0 only for n ≥ 2");
                    continue;
                }
                let got = computed_count(&e, table, n, k, j);
                if got != want && r.witness.is_none() {
                    r = r.with(Some(Witness {
                        element: format!("({k},{j})"),
                        left: got.to_string(),
                        right: want.to_string(),
                    }));
                }
            }
        }
        if table == CountTable::Alt {
            r = r.note(format!("Fibonacci index 3n-1 shifted by {shifts:?}"));
        }
        out.push(r);
    }
    if let Some(grid) = printed_dims(n) {
        let mut r = VerifyReport::new("tables-printed", n, 0, 0).note(provenance_note(p));
        for (k, row) in grid.iter().enumerate() {
            for (j, &printed) in row.iter().enumerate() {
                let printed = BigRational::from_integer(BigInt::from(printed));
                let got = computed_count(&e, CountTable::Dims, n, k, j);
                if got == printed {
                    continue;
                }
                let closed = expected_count(CountTable::Dims, n, k, j).ok();
                if closed.as_ref() == Some(&got) {
                    r.status = Status::Partial;
                    r = r.note(format!(
                        "printed ({k},{j}) = {printed}; computed {got} agrees with the closed form"
                    ));
                } else if r.witness.is_none() {
                    r = r.with(Some(Witness {
                        element: format!("({k},{j})"),
                        left: got.to_string(),
                        right: printed.to_string(),
                    }));
                }
            }
        }
        out.push(r);
    }
    if n == 3 {
        let poly = dimension_polynomial(&e, 3)?;
        let w = (poly != printed_dimension_polynomial_n3()).then(|| Witness {
            element: "dimension polynomial".into(),
            left: poly.to_string(),
            right: "printed".into(),
        });
        out.push(VerifyReport::new("prop2-dims", 3, 0, 0).with(w));
        let err = frobenius_erratum_n3(&e)?;
        let mut r = VerifyReport::new("prop2-frobenius", 3, 0, 0).with(err.t_read_as_j.clone());
        if let (Some(w), None) = (&err.as_printed, &err.t_read_as_j) {
            r.status = Status::Partial;
            r = r.note(format!("printed t^2 must read j^2 ({w})"));
        }
        out.push(r);
    } else if n > 1 {
        let poly = dimension_polynomial(&e, n);
        let w = poly.err().map(|err| Witness {
            element: "interpolation".into(),
            left: err.to_string(),
            right: "consistent".into(),
        });
        out.push(VerifyReport::new("prop2-dims", n, 0, 0).with(w));
    }
    Ok(out)
}

/// Runs one named check, or every check for `All`.
pub fn run_check(check: Check, args: &CheckArgs, ctx: &Context) -> Result<Vec<VerifyReport>> {
    if args.n == 0 {
        return Err(Error::Unsupported("checks need n ≥ 1".into()));
    }
    match check {
        Check::Main => main_check(args, ctx),
        Check::Skew => skew_check(args, ctx),
        Check::Zabrocki => zabrocki_check(args, ctx),
        Check::KimRhoades => kimrhoades_check(args, ctx),
        Check::K1J1 => k1j1_check(args, ctx),
        Check::K1J2 => k1j2_check(args, ctx),
        Check::K2J2 => k2j2_check(args, ctx),
        Check::LowDeg => lowdeg_check(args, ctx),
        Check::Tables => tables_check(args, ctx),
        Check::All => {
            let base = CheckArgs {
                n: args.n,
                ..Default::default()
            };
            let mut out = Vec::new();
            for c in Check::NAMED {
                out.extend(run_check(c, &base, ctx)?);
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in Check::NAMED.into_iter().chain([Check::All]) {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn all_checks_small_n() {
        let ctx = Context::default();
        for n in 1..=3 {
            for r in run_check(
                Check::All,
                &CheckArgs {
                    n,
                    ..Default::default()
                },
                &ctx,
            )
            .unwrap()
            {
                assert!(r.is_match(), "{r}");
            }
        }
    }
}
