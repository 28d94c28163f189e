//! Closed-form counts for dimensions and alternating multiplicities, and
//! the polynomial dependence on `k`, `j`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::main_conj::{eval_main_conjecture, Mode};
use crate::error::{Error, Result};
use crate::macdonald::interpolate_2d;
use crate::partition::Partition;
use crate::poly::{MPoly, Var};
use crate::sym::{Basis, SymFunc, TensorFrobenius};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountTable {
    /// Total dimensions.
    Dims,
    /// Multiplicity of the sign representation.
    Alt,
}

impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountTable::Dims => "dims",
            CountTable::Alt => "alt",
        })
    }
}

impl FromStr for CountTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<CountTable> {
        match s {
            "dims" => Ok(CountTable::Dims),
            "alt" => Ok(CountTable::Alt),
            _ => Err(Error::Parse(format!("unknown table `{s}`"))),
        }
    }
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(big).product()
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial(big(n as u64), big(k as u64))
}

fn pow(b: usize, e: usize) -> BigInt {
    big(b as u64).pow(e as u32)
}

/// Stirling number of the second kind.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j] * big(j as u64) + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k].clone()
}

/// Fibonacci numbers with `F_1 = F_2 = 1`, extended by `F_0 = 0`.
pub fn fibonacci(i: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..i {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}

/// Small Schröder number `(1/n) Σ_i binom(n,i) binom(n,i+1) 2^i`.
pub fn small_schroeder(n: usize) -> BigRational {
    let s: BigInt = (0..n)
        .map(|i| binom(n, i) * binom(n, i + 1) * pow(2, i))
        .sum();
    BigRational::new(s, big(n as u64))
}

/// The printed closed form for a filled cell. The Fibonacci column is read
/// with index `3n − 1 + fib_shift`.
pub fn expected_count_shifted(
    table: CountTable,
    n: usize,
    k: usize,
    j: usize,
    fib_shift: i64,
) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Unsupported("counts are stated for n ≥ 1".into()));
    }
    let int = |x: BigInt| BigRational::from_integer(x);
    let frac = |a: BigInt, b: BigInt| BigRational::new(a, b);
    let nn = n as u64;
    let v = match (table, k, j) {
        (CountTable::Dims, 0, 0) => int(BigInt::one()),
        (CountTable::Dims, 0, 1) => int(pow(2, n - 1)),
        (CountTable::Dims, 0, 2) => int(binom(2 * n - 1, n)),
        (CountTable::Dims, 1, 0) => int(factorial(n)),
        (CountTable::Dims, 1, 1) => int((1..=n).map(|i| factorial(i) * stirling2(n, i)).sum()),
        (CountTable::Dims, 1, 2) => int(pow(2, n - 1) * factorial(n)),
        (CountTable::Dims, 2, 0) => int(pow(n + 1, n - 1)),
        (CountTable::Dims, 2, 1) => frac(
            (0..=n + 1).map(|i| binom(n + 1, i) * pow(i, n)).sum(),
            big(2 * (nn + 1)),
        ),
        (CountTable::Dims, 3, 0) => frac(pow(2, n) * pow(n + 1, n), pow(n + 1, 2)),
        (CountTable::Alt, 0, 0) => int(BigInt::zero()),
        (CountTable::Alt, 0, 1) => int(BigInt::one()),
        (CountTable::Alt, 0, 2) => int(big(nn)),
        (CountTable::Alt, 0, 3) => int(big(nn * nn - nn + 1)),
        (CountTable::Alt, 1, 0) => int(BigInt::one()),
        (CountTable::Alt, 1, 1) => int(pow(2, n - 1)),
        (CountTable::Alt, 1, 2) => int(pow(3, n - 1)),
        (CountTable::Alt, 1, 3) => {
            let i = 3 * n as i64 - 1 + fib_shift;
            if i < 0 {
                return Err(Error::Unsupported(format!(
                    "Fibonacci index {i} is negative"
                )));
            }
            frac(fibonacci(i as usize), big(2))
        }
        (CountTable::Alt, 2, 0) => frac(binom(2 * n, n), big(nn + 1)),
        (CountTable::Alt, 2, 1) => small_schroeder(n),
        (CountTable::Alt, 2, 2) => frac(pow(2, n - 1) * binom(2 * n, n), big(nn + 1)),
        (CountTable::Alt, 3, 0) => frac(big(2) * binom(4 * n + 1, n - 1), big(nn * (nn + 1))),
        _ => {
            return Err(Error::UnfilledCell(format!(
                "the {table} table has no formula at k={k}, j={j}"
            )))
        }
    };
    Ok(v)
}

/// The printed closed form, Fibonacci index as printed.
pub fn expected_count(table: CountTable, n: usize, k: usize, j: usize) -> Result<BigRational> {
    expected_count_shifted(table, n, k, j, 0)
}

/// The index shifts `s` in `−3..=3` for which `½ F_{3n−1+s}` reproduces
/// every given `(n, value)` pair.
pub fn calibrate_fibonacci(values: &[(usize, BigRational)]) -> Vec<i64> {
    (-3..=3)
        .filter(|&s| {
            values.iter().all(|(n, v)| {
                expected_count_shifted(CountTable::Alt, *n, 1, 3, s)
                    .map(|x| &x == v)
                    .unwrap_or(false)
            })
        })
        .collect()
}

/// Value of a count computed from the universal formula.
pub fn computed_count(
    e: &TensorFrobenius,
    table: CountTable,
    n: usize,
    k: usize,
    j: usize,
) -> BigRational {
    let f = eval_main_conjecture(e, k, j, Mode::Ones);
    let v = match table {
        CountTable::Dims => f.drop_z(),
        CountTable::Alt => f.coefficient(&Partition::column(n)),
    };
    v.constant_value().unwrap_or_else(BigRational::zero)
}

/// Degree bound in each of `k` and `j` for the polynomial dependence:
/// `|λ| ≤ binom(n,2)` for every nonzero `c_{λμ}`.
pub fn polynomial_degree_bound(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).max(1)
}

fn interpolate_grid(values: impl Fn(usize, usize) -> BigRational, bound: usize) -> MPoly {
    let xs: Vec<BigRational> = (0..=bound)
        .map(|i| BigRational::from_integer(big(i as u64)))
        .collect();
    let vals: Vec<Vec<BigRational>> = (0..=bound)
        .map(|k| (0..=bound).map(|j| values(k, j)).collect())
        .collect();
    interpolate_2d(&xs, &xs, &vals, Var::K, Var::J)
}

fn check_extra(
    p: &MPoly,
    values: impl Fn(usize, usize) -> BigRational,
    bound: usize,
    what: &str,
) -> Result<()> {
    for (k, j) in [
        (bound + 1, 0),
        (0, bound + 1),
        (bound + 1, bound + 2),
        (bound + 3, 1),
    ] {
        let at = p.eval(|v| BigRational::from_integer(big(if v == Var::K { k } else { j } as u64)));
        if at != values(k, j) {
            return Err(Error::Interpolation(format!(
                "{what} disagrees with the data at (k,j)=({k},{j})"
            )));
        }
    }
    Ok(())
}

/// `𝔻𝔹𝔽_n(k; j)` as a polynomial in `k`, `j`, interpolated on a grid and
/// checked at points off the grid.
pub fn dimension_polynomial(e: &TensorFrobenius, n: usize) -> Result<MPoly> {
    let bound = polynomial_degree_bound(n);
    let values = |k: usize, j: usize| computed_count(e, CountTable::Dims, n, k, j);
    let p = interpolate_grid(values, bound);
    check_extra(&p, values, bound, "dimension polynomial")?;
    Ok(p)
}

/// `𝔻𝔹𝔽_n(k; j; z)` with each Schur coefficient a polynomial in `k`, `j`.
pub fn frobenius_polynomial(e: &TensorFrobenius, n: usize) -> Result<SymFunc> {
    let bound = polynomial_degree_bound(n);
    let grid: Vec<Vec<SymFunc>> = (0..=bound + 3)
        .map(|k| {
            (0..=bound + 3)
                .map(|j| eval_main_conjecture(e, k, j, Mode::Ones))
                .collect()
        })
        .collect();
    let mut out = SymFunc::zero(Basis::S);
    for mu in crate::partition::partitions_of(n) {
        let values = |k: usize, j: usize| {
            grid[k][j]
                .coefficient(&mu)
                .constant_value()
                .unwrap_or_else(BigRational::zero)
        };
        let p = interpolate_grid(values, bound);
        check_extra(&p, values, bound, &format!("coefficient of s{mu}"))?;
        out.add_term(mu, &p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::data::embedded_e;
    use super::*;

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn printed_examples() {
        assert_eq!(expected_count(CountTable::Dims, 5, 2, 0).unwrap(), r(1296));
        assert_eq!(expected_count(CountTable::Alt, 4, 2, 0).unwrap(), r(14));
        assert_eq!(expected_count(CountTable::Dims, 4, 1, 1).unwrap(), r(75));
        assert_eq!(expected_count(CountTable::Dims, 5, 2, 1).unwrap(), r(3936));
        assert_eq!(expected_count(CountTable::Dims, 4, 3, 0).unwrap(), r(400));
        assert_eq!(expected_count(CountTable::Alt, 4, 2, 1).unwrap(), r(45));
        assert!(matches!(
            expected_count(CountTable::Dims, 3, 2, 2),
            Err(Error::UnfilledCell(_))
        ));
    }

    #[test]
    fn sequences() {
        assert_eq!(
            (0..8).map(fibonacci).collect::<Vec<_>>(),
            [0, 1, 1, 2, 3, 5, 8, 13].map(BigInt::from)
        );
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(
            (1..=5).map(small_schroeder).collect::<Vec<_>>(),
            [1, 3, 11, 45, 197].map(r)
        );
    }

    #[test]
    fn formulas_agree_with_universal_formula_up_to_n3() {
        let mut errata = Vec::new();
        for n in 1..=3 {
            let e = embedded_e(n).unwrap();
            for table in [CountTable::Dims, CountTable::Alt] {
                for k in 0..=3 {
                    for j in 0..=3 {
                        let Ok(want) = expected_count_shifted(table, n, k, j, 1) else {
                            continue;
                        };
                        if (table, k, j) == (CountTable::Alt, 0, 0) && n == 1 {
                            continue;
                        }
                        if computed_count(&e, table, n, k, j) != want {
                            errata.push((table, n, k, j));
                        }
                    }
                }
            }
        }
        assert!(errata.is_empty(), "{errata:?}");
    }

    #[test]
    fn n3_polynomial() {
        let e = embedded_e(3).unwrap();
        let p = dimension_polynomial(&e, 3).unwrap();
        for k in 0..6i64 {
            for j in 0..6i64 {
                let at = p.eval(|v| r(if v == Var::K { k } else { j }));
                let closed = (k + j + 1) * (k * k + 2 * k * j + j * j + 11 * k + 5 * j + 6);
                assert_eq!(at * r(6), r(closed), "({k},{j})");
            }
        }
        let one = dimension_polynomial(&embedded_e(1).unwrap(), 1).unwrap();
        assert_eq!(one, MPoly::one());
    }
}
