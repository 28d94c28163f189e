//! One line per acceptance criterion. A criterion may only fail through a
//! known misprint in the printed data; anything else fails the test.

use std::io::Write;
use std::time::{Duration, Instant};

use dbflab::checks::schur_positivity;
use dbflab::cli;
use dbflab::conjecture::*;
use dbflab::macdonald::{delta_prime, nabla};
use dbflab::oracle::coinvariant_frobenius;
use dbflab::{MPoly, Partition, SymFunc, TensorFrobenius, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Printed values contradicted by every independent computation.
const KNOWN_ERRATA: [&str; 1] = ["printed n=3 (k,j)=(1,2) dimension 23"];

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn report(id: usize, title: &str, started: Instant, limit: Duration, mut o: Outcome) {
    let elapsed = started.elapsed();
    o.require(
        elapsed <= limit,
        format!("took {elapsed:?}, limit {limit:?}"),
    );
    let status = if o.failures.is_empty() {
        "PASS"
    } else {
        "FAIL"
    };
    let mut line = format!(
        "ACCEPTANCE {id:>2} {status} {title} [{:.1}s]",
        elapsed.as_secs_f64()
    );
    for f in &o.failures {
        line.push_str(&format!(" | failure: {f}"));
    }
    for n in &o.notes {
        line.push_str(&format!(" | note: {n}"));
    }
    // Written past the test harness capture so the line always shows.
    writeln!(std::io::stdout().lock(), "{line}").unwrap();
    let unexpected: Vec<&String> = o
        .failures
        .iter()
        .filter(|f| !KNOWN_ERRATA.contains(&f.as_str()))
        .collect();
    assert!(unexpected.is_empty(), "criterion {id}: {unexpected:?}");
}

fn r(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * big(n - i) / big(i + 1))
}

fn at_ones(f: &SymFunc) -> SymFunc {
    f.map_coeffs(|c| MPoly::constant(c.at_ones()))
}

fn dim(f: &SymFunc) -> BigRational {
    at_ones(f)
        .drop_z()
        .constant_value()
        .unwrap_or_else(BigRational::zero)
}

fn alt(f: &SymFunc, n: usize) -> BigRational {
    at_ones(f)
        .to_s()
        .coefficient(&Partition::column(n))
        .constant_value()
        .unwrap_or_else(BigRational::zero)
}

fn schur_positive(f: &SymFunc) -> bool {
    f.to_s()
        .terms()
        .all(|(_, c)| c.has_nonnegative_integer_coefficients())
}

fn catalan(n: u64) -> BigInt {
    binom(2 * n, n) / big(n + 1)
}

fn fib(i: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..i {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}

/// Ordered set partitions of an n-set: `a(n) = Σ_k binom(n,k) a(n−k)`.
fn fubini(n: usize) -> BigInt {
    let mut a = vec![BigInt::one()];
    for m in 1..=n {
        let v = (1..=m).map(|k| binom(m as u64, k as u64) * &a[m - k]).sum();
        a.push(v);
    }
    a[n].clone()
}

fn e(n: usize) -> TensorFrobenius {
    generic_e(n).unwrap().0
}

fn none() -> FormulaParams {
    FormulaParams::default()
}

const E3_PRINTED: &str = "[] [3] 1\n[1] [2,1] 1\n[2] [2,1] 1\n[1,1] [1,1,1] 1\n[3] [1,1,1] 1\n";

#[test]
fn criterion_01_worked_example() {
    let t = Instant::now();
    let mut o = Outcome::new();
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap().to_string();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(
        ["dbf", "--cache-dir", &cache, "en", "--n", "3"],
        &mut out,
        &mut err,
    );
    o.require(code == 0, format!("dbf en exited {code}"));
    o.require(
        String::from_utf8(out).unwrap() == E3_PRINTED,
        "E_3 differs from the printed table",
    );
    let e3 = e(3);
    for d in &DISPLAYS_N3 {
        let (printed, computed) = render_display(&e3, d).unwrap();
        o.require(printed == computed, format!("{} differs", d.label));
    }
    let (mut out, mut err) = (Vec::new(), Vec::new());
    cli::run(
        [
            "dbf",
            "--cache-dir",
            &cache,
            "eval",
            "--n",
            "3",
            "--k",
            "0",
            "--j",
            "1",
        ],
        &mut out,
        &mut err,
    );
    o.require(
        String::from_utf8(out).unwrap() == "s[3] : 1\ns[2,1] : u1\ns[1,1,1] : u1^2\n",
        "dbf eval (0;u) output",
    );
    o.note(format!("{} displays compared", DISPLAYS_N3.len()));
    report(1, "n=3 worked example", t, Duration::from_secs(10), o);
}

#[test]
fn criterion_02_dimension_tables() {
    let t = Instant::now();
    let mut o = Outcome::new();
    for n in [3, 4] {
        let en = e(n);
        let grid = printed_dims(n).unwrap();
        for (k, row) in grid.iter().enumerate() {
            for (j, &printed) in row.iter().enumerate() {
                let got = dim(&eval_main_conjecture(&en, k, j, Mode::Ones));
                if got != r(printed as i64) {
                    if n == 3 && (k, j) == (1, 2) {
                        o.failures.push(KNOWN_ERRATA[0].into());
                        o.note(format!("computed {got}; 2^(n-1) n! = 24"));
                    } else {
                        o.failures
                            .push(format!("n={n} ({k},{j}) computed {got}, printed {printed}"));
                    }
                }
            }
        }
    }
    let n = 5;
    let grid = printed_dims(n).unwrap();
    let cells: [(FormulaId, FormulaParams); 8] = [
        (
            FormulaId::K1J0,
            FormulaParams {
                cap: Some(10),
                ..none()
            },
        ),
        (FormulaId::K0J1, none()),
        (FormulaId::K2J0, none()),
        (FormulaId::K2J1, none()),
        (FormulaId::K0J2, none()),
        (FormulaId::K1J1, none()),
        (FormulaId::K1J2, none()),
        (
            FormulaId::K2J2,
            FormulaParams {
                k2j2_from_zero: true,
                ..none()
            },
        ),
    ];
    for (id, params) in cells {
        let (k, j) = id.cell().unwrap();
        let got = dim(&closed_form(id, n, &params).unwrap());
        o.require(
            got == r(grid[k][j] as i64),
            format!("n=5 {id} gives {got}, printed {}", grid[k][j]),
        );
    }
    o.note("n=5 row k=3 and cell (0,0) have no closed form and are not checked");
    report(
        2,
        "dimension tables n=3,4,5",
        t,
        Duration::from_secs(1800),
        o,
    );
}

#[test]
fn criterion_03_oracle_cross_check() {
    let t = Instant::now();
    let mut o = Outcome::new();
    for n in 1..=4 {
        let en = e(n);
        for (k, j) in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (2, 1)] {
            let start = Instant::now();
            let oracle = coinvariant_frobenius(k, j, n).unwrap();
            let limit = if n <= 3 { 60 } else { 3600 };
            o.require(
                start.elapsed().as_secs() < limit,
                format!("oracle ({k},{j},{n}) too slow"),
            );
            if let Some(w) = compare_tensors(&oracle.frobenius, &eval_main_tensor(&en, k, j)) {
                o.failures.push(format!("({k},{j},{n}) at {w}"));
            }
        }
    }
    report(
        3,
        "oracle equals the universal formula",
        t,
        Duration::from_secs(6 * 3600),
        o,
    );
}

#[test]
fn criterion_04_macdonald_stack() {
    let t = Instant::now();
    let mut o = Outcome::new();
    let printed: SymFunc =
        "s[3] : 1\ns[2,1] : q^2 + q*t + t^2 + q + t\ns[1,1,1] : q^3 + q^2*t + q*t^2 + t^3 + q*t"
            .parse()
            .unwrap();
    o.require(
        nabla(&SymFunc::e_n(3)).unwrap() == printed,
        "nabla e_3 display",
    );
    for n in 1..=7usize {
        let ne = nabla(&SymFunc::e_n(n)).unwrap();
        o.require(
            alt(&ne, n) == BigRational::from_integer(catalan(n as u64)),
            format!("Catalan at n={n}"),
        );
        if n <= 6 {
            o.require(
                schur_positive(&ne),
                format!("nabla e_{n} not Schur positive"),
            );
            o.require(
                delta_prime(n - 1, &SymFunc::e_n(n)).unwrap() == ne,
                format!("delta' e_{} e_{n}", n - 1),
            );
        }
    }
    report(4, "Macdonald operators", t, Duration::from_secs(3600), o);
}

#[test]
fn criterion_05_zabrocki() {
    let t = Instant::now();
    let mut o = Outcome::new();
    let two = [Var::q(1), Var::q(2)];
    for n in 1..=6usize {
        let f = closed_form(FormulaId::K2J1, n, &none()).unwrap();
        if n <= 4 {
            let oracle = coinvariant_frobenius(2, 1, n)
                .unwrap()
                .frobenius
                .to_symfunc(&two, &[Var::u(1)]);
            o.require(
                compare(&f, &oracle, &CompareMode::Exact).is_none(),
                format!("oracle at n={n}"),
            );
        }
        let t0 = f.map_coeffs(|c| c.substitute(Var::q(2), &MPoly::zero()));
        if n <= 5 {
            o.require(
                t0 == closed_form(FormulaId::K1J1, n, &none()).unwrap(),
                format!("t=0 vs tableau formula at n={n}"),
            );
        }
        o.require(
            dim(&t0) == BigRational::from_integer(fubini(n)),
            format!("t=0 dimension at n={n}"),
        );
        let table: BigInt = (0..=n + 1)
            .map(|i| binom(n as u64 + 1, i as u64) * big(i as u64).pow(n as u32))
            .sum::<BigInt>()
            / big(2 * (n as u64 + 1));
        o.require(
            dim(&f) == BigRational::from_integer(table),
            format!("dimension at n={n}"),
        );
    }
    o.note("the 13, 75, 541 column is the t=0 restriction; the full dimension follows the (2,1) column");
    report(
        5,
        "two bosonic rows, one fermionic",
        t,
        Duration::from_secs(3600),
        o,
    );
}

#[test]
fn criterion_06_kim_rhoades() {
    let t = Instant::now();
    let mut o = Outcome::new();
    for n in 1..=8usize {
        let f = closed_form(FormulaId::K0J2, n, &none()).unwrap();
        if n <= 4 {
            let oracle = coinvariant_frobenius(0, 2, n)
                .unwrap()
                .frobenius
                .to_symfunc(&[], &[Var::u(1), Var::u(2)]);
            o.require(
                compare(&f, &oracle, &CompareMode::Exact).is_none(),
                format!("oracle at n={n}"),
            );
        }
        if n <= 7 {
            let kron = closed_form(FormulaId::K0J2Kron, n, &none()).unwrap();
            o.require(kron == f, format!("Kronecker form at n={n}"));
            o.require(
                schur_positive(&kron),
                format!("negative difference at n={n}"),
            );
        }
        o.require(
            dim(&f) == BigRational::from_integer(binom(2 * n as u64 - 1, n as u64)),
            format!("dimension at n={n}"),
        );
    }
    report(6, "two fermionic rows", t, Duration::from_secs(3600), o);
}

#[test]
fn criterion_07_power_sum_formula() {
    let t = Instant::now();
    let mut o = Outcome::new();
    for n in 1..=4usize {
        let f = closed_form(FormulaId::K1J2, n, &none()).unwrap();
        let conj = eval_main_conjecture(&e(n), 1, 2, Mode::Ones);
        o.require(dim(&f) == dim(&conj), format!("dimension at n={n}"));
        o.require(
            compare(&f, &conj, &CompareMode::Exact).is_none(),
            format!("Frobenius at n={n}"),
        );
        if let Some(grid) = printed_dims(n) {
            if dim(&f) != r(grid[1][2] as i64) {
                o.failures.push(KNOWN_ERRATA[0].into());
                o.note(format!("n={n}: formula and conjecture give {}", dim(&f)));
            }
        }
    }
    report(
        7,
        "power-sum formula at (1,2)",
        t,
        Duration::from_secs(600),
        o,
    );
}

#[test]
fn criterion_08_two_by_two() {
    let t = Instant::now();
    let mut o = Outcome::new();
    let (qs, us) = (Var::qs(2), Var::us(2));
    for n in 1..=3usize {
        let oracle = coinvariant_frobenius(2, 2, n)
            .unwrap()
            .frobenius
            .to_symfunc(&qs, &us);
        let from_zero = closed_form(
            FormulaId::K2J2,
            n,
            &FormulaParams {
                k2j2_from_zero: true,
                ..none()
            },
        )
        .unwrap();
        let from_one = closed_form(FormulaId::K2J2, n, &none()).unwrap();
        let zero_ok = compare(&from_zero, &oracle, &CompareMode::Exact).is_none();
        let one_ok = compare(&from_one, &oracle, &CompareMode::Exact).is_none();
        o.require(zero_ok || one_ok, format!("no reading matches at n={n}"));
        o.note(format!(
            "n={n}: from k=0 {}, from k=1 {}",
            if zero_ok { "matches" } else { "differs" },
            if one_ok { "matches" } else { "differs" }
        ));
    }
    for n in 1..=4usize {
        let m = closed_form(FormulaId::MSeries, n, &FormulaParams { j: 2, ..none() }).unwrap();
        o.require(
            schur_positivity(&m, &qs, &us).unwrap().is_none(),
            format!("M series at n={n}"),
        );
        let below = &eval_main_conjecture(&e(n), 2, 2, Mode::Symbolic) - &m;
        o.require(
            schur_positivity(&below, &qs, &us).unwrap().is_none(),
            format!("DBF minus M at n={n}"),
        );
    }
    report(
        8,
        "two bosonic and two fermionic rows",
        t,
        Duration::from_secs(3600),
        o,
    );
}

#[test]
fn criterion_09_skew() {
    let t = Instant::now();
    let mut o = Outcome::new();
    for n in 1..=4 {
        let en = e(n);
        for k in 0..n {
            o.require(
                skew_conjecture_check(&en, n, k).unwrap().status == Status::Match,
                format!("n={n} k={k}"),
            );
        }
    }
    report(
        9,
        "skewing by e_k gives delta'",
        t,
        Duration::from_secs(3600),
        o,
    );
}

#[test]
fn criterion_10_low_degree() {
    let t = Instant::now();
    let mut o = Outcome::new();
    for n in 1..=4usize {
        let en = e(n);
        for k in 1..=4 {
            o.require(
                low_degree_check(&en, n, k, n as u32).unwrap().is_match(),
                format!("n={n} k={k}"),
            );
        }
        let full = (n * (n - 1) / 2 + 3) as u32;
        o.require(
            low_degree_check(&en, n, 1, full).unwrap().status == Status::Match,
            format!("one letter, n={n}, all degrees"),
        );
    }
    report(10, "low-degree agreement", t, Duration::from_secs(3600), o);
}

#[test]
fn criterion_11_dimension_polynomial() {
    let t = Instant::now();
    let mut o = Outcome::new();
    let e3 = e(3);
    let p = dimension_polynomial(&e3, 3).unwrap();
    let a: MPoly = "k + j + 1".parse().unwrap();
    let b: MPoly = "k^2 + 2*k*j + j^2 + 11*k + 5*j + 6".parse().unwrap();
    o.require(
        p == (&a * &b).scale(&BigRational::new(1.into(), 6.into())),
        "n=3 polynomial",
    );
    let err = frobenius_erratum_n3(&e3).unwrap();
    o.require(
        err.t_read_as_j.is_none(),
        "Frobenius polynomial beyond the t/j misprint",
    );
    if let Some(w) = err.as_printed {
        o.note(format!("printed t^2 reads j^2: {w}"));
    }
    for n in 1..=4 {
        let en = e(n);
        o.require(
            dimension_polynomial(&en, n).is_ok(),
            format!("interpolation at n={n}"),
        );
        o.require(
            frobenius_polynomial(&en, n).is_ok(),
            format!("Frobenius interpolation at n={n}"),
        );
    }
    report(
        11,
        "polynomiality in k and j",
        t,
        Duration::from_secs(3600),
        o,
    );
}

#[test]
fn criterion_12_alternating() {
    let t = Instant::now();
    let mut o = Outcome::new();
    let pow = |b: u64, e: usize| BigRational::from_integer(big(b).pow(e as u32));
    let schroeder = |n: usize| -> BigRational {
        let s: BigInt = (0..n)
            .map(|i| {
                binom(n as u64, i as u64) * binom(n as u64, i as u64 + 1) * big(2).pow(i as u32)
            })
            .sum();
        BigRational::new(s, big(n as u64))
    };
    let mut fib_values = Vec::new();
    for n in 1..=4usize {
        let en = e(n);
        let a = |k, j| alt(&eval_main_conjecture(&en, k, j, Mode::Ones), n);
        let nn = n as i64;
        o.require(a(1, 1) == pow(2, n - 1), format!("(1,1) n={n}"));
        o.require(a(1, 2) == pow(3, n - 1), format!("(1,2) n={n}"));
        o.require(a(2, 1) == schroeder(n), format!("(2,1) n={n}"));
        o.require(
            a(2, 2) == pow(2, n - 1) * BigRational::from_integer(catalan(n as u64)),
            format!("(2,2) n={n}"),
        );
        o.require(a(0, 2) == r(nn), format!("(0,2) n={n}"));
        o.require(a(0, 3) == r(nn * nn - nn + 1), format!("(0,3) n={n}"));
        fib_values.push((n, a(1, 3)));
    }
    let shifts: Vec<i64> = (-3..=3i64)
        .filter(|s| {
            fib_values.iter().all(|(n, v)| {
                usize::try_from(3 * *n as i64 - 1 + s)
                    .is_ok_and(|i| BigRational::new(fib(i), big(2)) == *v)
            })
        })
        .collect();
    o.require(shifts.len() == 1, format!("Fibonacci shifts {shifts:?}"));
    o.note(format!("(1,3) equals F_(3n-1+s)/2 with s in {shifts:?}"));
    for n in 5..=6usize {
        let check =
            |id: FormulaId, params: FormulaParams| alt(&closed_form(id, n, &params).unwrap(), n);
        o.require(
            check(FormulaId::K1J1, none()) == pow(2, n - 1),
            format!("(1,1) n={n}"),
        );
        o.require(
            check(FormulaId::K1J2, none()) == pow(3, n - 1),
            format!("(1,2) n={n}"),
        );
        o.require(
            check(FormulaId::K2J1, none()) == schroeder(n),
            format!("(2,1) n={n}"),
        );
        o.require(
            check(FormulaId::K0J2, none()) == r(n as i64),
            format!("(0,2) n={n}"),
        );
        let v = check(
            FormulaId::K2J2,
            FormulaParams {
                k2j2_from_zero: true,
                ..none()
            },
        );
        o.require(
            v == pow(2, n - 1) * BigRational::from_integer(catalan(n as u64)),
            format!("(2,2) n={n}"),
        );
    }
    o.note("columns (0,3) and (1,3) need E_n and stop at n=4");
    report(12, "sign multiplicities", t, Duration::from_secs(3600), o);
}
