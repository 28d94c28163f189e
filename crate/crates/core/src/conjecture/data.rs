//! Canonical generic bosonic data `E_n = Σ_μ C_μ ⊗ s_μ`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::oracle::extract_generic_e;
use crate::sym::TensorFrobenius;

/// Where a table of `E_n` coefficients came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Shipped with the library.
    Embedded,
    /// Extracted from the brute-force quotient.
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Embedded => "embedded",
            Provenance::Oracle => "oracle",
        })
    }
}

const E1: &str = "[] [] [1] 1\n";
const E2: &str = "[] [] [2] 1\n[1] [] [1,1] 1\n";
const E3: &str =
    "[] [] [3] 1\n[1] [] [2,1] 1\n[2] [] [2,1] 1\n[1,1] [] [1,1,1] 1\n[3] [] [1,1,1] 1\n";

/// Largest `n` with shipped data.
pub const EMBEDDED_MAX: usize = 3;

/// The shipped `E_n` for `n ≤ 3`.
pub fn embedded_e(n: usize) -> Result<TensorFrobenius> {
    let text = match n {
        1 => E1,
        2 => E2,
        3 => E3,
        _ => return Err(Error::Unsupported(format!("no embedded data for n = {n}"))),
    };
    text.parse()
}

fn extracted() -> &'static Mutex<BTreeMap<usize, TensorFrobenius>> {
    static MEMO: OnceLock<Mutex<BTreeMap<usize, TensorFrobenius>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `E_n` from the shipped data when available, otherwise extracted from the
/// quotient with `n` bosonic rows. Extracted tables are memoised.
pub fn generic_e(n: usize) -> Result<(TensorFrobenius, Provenance)> {
    if n <= EMBEDDED_MAX {
        return Ok((embedded_e(n)?, Provenance::Embedded));
    }
    let mut memo = extracted().lock().unwrap();
    if let Some(e) = memo.get(&n) {
        return Ok((e.clone(), Provenance::Oracle));
    }
    let e = extract_generic_e(n)?;
    memo.insert(n, e.clone());
    Ok((e, Provenance::Oracle))
}
