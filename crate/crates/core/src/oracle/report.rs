//! Text form of oracle results.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::coinvariant::DegreeData;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::sym::TensorFrobenius;

/// Graded characters of the quotient at every dominant multidegree with a
/// nonzero piece, and the assembled Schur expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub k: usize,
    pub j: usize,
    pub n: usize,
    pub degrees: Vec<DegreeData>,
    pub frobenius: TensorFrobenius,
}

impl OracleReport {
    /// Dimension of the whole quotient, counting every multidegree.
    pub fn total_dimension(&self) -> BigInt {
        let v = self.frobenius.at_ones(self.k, self.j).drop_z();
        v.constant_value()
            .map(|c| c.to_integer())
            .unwrap_or_default()
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// ```text
/// oracle k=1 j=1 n=3
/// deg (1|0) dim 2 trace[1,1,1]=2 trace[2,1]=0 trace[3]=-1
/// frobenius
/// [1] [] [2,1] 1
/// ```
impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "oracle k={} j={} n={}", self.k, self.j, self.n)?;
        for dd in &self.degrees {
            write!(
                f,
                "deg ({}|{}) dim {}",
                join(&dd.degree[..self.k]),
                join(&dd.degree[self.k..]),
                dd.dim
            )?;
            for (rho, tr) in &dd.traces {
                write!(f, " trace{rho}={tr}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "frobenius")?;
        write!(f, "{}", self.frobenius)
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.parse()
                .map_err(|_| Error::Parse(format!("bad degree entry `{x}`")))
        })
        .collect()
}

fn parse_eq(s: &str, name: &str) -> Result<usize> {
    s.strip_prefix(name)
        .and_then(|v| v.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected `{name}=<int>`, got `{s}`")))
}

impl FromStr for OracleReport {
    type Err = Error;

    fn from_str(s: &str) -> Result<OracleReport> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let head: Vec<&str> = lines
            .next()
            .ok_or_else(|| Error::Parse("empty oracle report".into()))?
            .split_whitespace()
            .collect();
        let ["oracle", k, j, n] = head[..] else {
            return Err(Error::Parse("expected `oracle k=<k> j=<j> n=<n>`".into()));
        };
        let (k, j, n) = (parse_eq(k, "k")?, parse_eq(j, "j")?, parse_eq(n, "n")?);
        let mut degrees = Vec::new();
        let mut rest = String::new();
        let mut in_frobenius = false;
        for line in lines {
            if in_frobenius {
                rest.push_str(line);
                rest.push('\n');
                continue;
            }
            if line == "frobenius" {
                in_frobenius = true;
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() < 4 || fields[0] != "deg" || fields[2] != "dim" {
                return Err(Error::Parse(format!("bad degree line `{line}`")));
            }
            let inner = fields[1]
                .strip_prefix('(')
                .and_then(|x| x.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad multidegree in `{line}`")))?;
            let (a, b) = inner
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("bad multidegree in `{line}`")))?;
            let mut degree = parse_list(a)?;
            degree.extend(parse_list(b)?);
            if degree.len() != k + j {
                return Err(Error::Parse(format!(
                    "multidegree of the wrong length in `{line}`"
                )));
            }
            let dim = fields[3]
                .parse()
                .map_err(|_| Error::Parse(format!("bad dimension in `{line}`")))?;
            let mut traces = BTreeMap::new();
            for t in &fields[4..] {
                let body = t
                    .strip_prefix("trace")
                    .ok_or_else(|| Error::Parse(format!("bad trace `{t}`")))?;
                let (p, v) = body
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("bad trace `{t}`")))?;
                let p: Partition = p.parse()?;
                let v: BigInt = v
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad trace `{t}`")))?;
                traces.insert(p, v);
            }
            degrees.push(DegreeData {
                degree,
                dim,
                traces,
            });
        }
        if !in_frobenius {
            return Err(Error::Parse("missing `frobenius` block".into()));
        }
        Ok(OracleReport {
            k,
            j,
            n,
            degrees,
            frobenius: rest.parse()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::coinvariant_frobenius;
    use super::*;

    #[test]
    fn text_round_trip() {
        let r = coinvariant_frobenius(1, 1, 2).unwrap();
        let back: OracleReport = r.to_string().parse().unwrap();
        assert_eq!(back, r);
        assert!("oracle k=1 j=0\n".parse::<OracleReport>().is_err());
    }
}
