use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A polynomial variable.
///
/// Variables are totally ordered `q < t < u < v < q1 < q2 < … < u1 < u2 < …`,
/// followed by the formal counting variables `k` and `j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u16);

const QI_BASE: u16 = 100;
const UI_BASE: u16 = 1000;
const MAX_INDEX: usize = 899;

impl Var {
    pub const Q: Var = Var(0);
    pub const T: Var = Var(1);
    pub const U: Var = Var(2);
    pub const V: Var = Var(3);
    /// Formal number of bosonic alphabets.
    pub const K: Var = Var(5000);
    /// Formal number of fermionic alphabets.
    pub const J: Var = Var(5001);

    /// Bosonic letter `q_i`, `i ≥ 1`.
    pub fn q(i: usize) -> Var {
        assert!((1..=MAX_INDEX).contains(&i), "q index out of range");
        Var(QI_BASE + i as u16)
    }

    /// Fermionic-weight letter `u_i`, `i ≥ 1`.
    pub fn u(i: usize) -> Var {
        assert!((1..=MAX_INDEX).contains(&i), "u index out of range");
        Var(UI_BASE + i as u16)
    }

    pub fn qs(k: usize) -> Vec<Var> {
        (1..=k).map(Var::q).collect()
    }

    pub fn us(j: usize) -> Vec<Var> {
        (1..=j).map(Var::u).collect()
    }

    /// True for the indexed families `q1, q2, …` and `u1, u2, …`.
    pub fn is_indexed(self) -> bool {
        (QI_BASE + 1..UI_BASE + MAX_INDEX as u16 + 1).contains(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "q"),
            1 => write!(f, "t"),
            2 => write!(f, "u"),
            3 => write!(f, "v"),
            5000 => write!(f, "k"),
            5001 => write!(f, "j"),
            i if (QI_BASE..UI_BASE).contains(&i) => write!(f, "q{}", i - QI_BASE),
            i => write!(f, "u{}", i - UI_BASE),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        let bad = || Error::Parse(format!("unknown variable `{s}`"));
        match s {
            "q" => Ok(Var::Q),
            "t" => Ok(Var::T),
            "u" => Ok(Var::U),
            "v" => Ok(Var::V),
            "k" => Ok(Var::K),
            "j" => Ok(Var::J),
            _ => {
                let (head, idx) = s.split_at(1);
                let i: usize = idx.parse().map_err(|_| bad())?;
                if !(1..=MAX_INDEX).contains(&i) {
                    return Err(bad());
                }
                match head {
                    "q" => Ok(Var::q(i)),
                    "u" => Ok(Var::u(i)),
                    _ => Err(bad()),
                }
            }
        }
    }
}
