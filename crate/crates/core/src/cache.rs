//! Versioned text files holding expensive results.
//!
//! Every file starts with `DBFLAB v1 <kind> <params> <sha256>`, the hash
//! taken over the body that follows the header line. A file that fails the
//! check is reported, never silently replaced.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use crate::conjecture::{embedded_e, Provenance, EMBEDDED_MAX};
use crate::error::{Error, Result};
use crate::macdonald::{modified_macdonald, seed_modified_macdonald};
use crate::oracle::{coinvariant_frobenius_bounded, extract_generic_e_bounded, OracleReport};
use crate::partition::{partitions_of, Partition};
use crate::sym::{SymFunc, TensorFrobenius};

pub const MAGIC: &str = "DBFLAB";
pub const VERSION: &str = "v1";

static WRITE_LOCK: Mutex<()> = Mutex::new(());

/// What a cache file holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CacheKey {
    /// `H̃_μ` in the Schur basis for every `μ ⊢ n`.
    Htilde(usize),
    /// `E_n` as `lambda mu coeff` triples.
    En(usize),
    /// An oracle report for `(k, j, n)`.
    Oracle(usize, usize, usize),
}

impl CacheKey {
    pub fn kind(&self) -> &'static str {
        match self {
            CacheKey::Htilde(_) => "htilde",
            CacheKey::En(_) => "en",
            CacheKey::Oracle(..) => "oracle",
        }
    }

    pub fn params(&self) -> String {
        match self {
            CacheKey::Htilde(n) | CacheKey::En(n) => format!("n={n}"),
            CacheKey::Oracle(k, j, n) => format!("k={k},j={j},n={n}"),
        }
    }

    pub fn file_name(&self) -> String {
        match self {
            CacheKey::Htilde(n) => format!("htilde.{n}.dat"),
            CacheKey::En(n) => format!("en.{n}.dat"),
            CacheKey::Oracle(k, j, n) => format!("oracle.{k}.{j}.{n}.dat"),
        }
    }

    /// Inverse of [`CacheKey::file_name`].
    pub fn from_file_name(name: &str) -> Option<CacheKey> {
        let parts: Vec<&str> = name.strip_suffix(".dat")?.split('.').collect();
        let num = |s: &str| s.parse::<usize>().ok();
        match parts[..] {
            ["htilde", n] => Some(CacheKey::Htilde(num(n)?)),
            ["en", n] => Some(CacheKey::En(num(n)?)),
            ["oracle", k, j, n] => Some(CacheKey::Oracle(num(k)?, num(j)?, num(n)?)),
            _ => None,
        }
    }
}

impl fmt::Display for CacheKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.file_name())
    }
}

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

/// Header line plus body.
pub fn encode(key: &CacheKey, body: &str) -> String {
    format!(
        "{MAGIC} {VERSION} {} {} {}\n{body}",
        key.kind(),
        key.params(),
        digest(body)
    )
}

/// Checks the header against `key` and the hash against the body.
pub fn decode(key: &CacheKey, text: &str) -> Result<String> {
    let (header, body) = text.split_once('\n').unwrap_or((text, ""));
    let fields: Vec<&str> = header.split(' ').collect();
    let [magic, version, kind, params, hash] = fields[..] else {
        return Err(Error::Parse(format!("{key}: malformed header")));
    };
    if magic != MAGIC {
        return Err(Error::Parse(format!("{key}: not a cache file")));
    }
    if version != VERSION {
        return Err(Error::VersionMismatch(format!(
            "{key}: found {version}, expected {VERSION}"
        )));
    }
    if kind != key.kind() || params != key.params() {
        return Err(Error::Parse(format!(
            "{key}: header describes {kind} {params}"
        )));
    }
    if digest(body) != hash {
        return Err(Error::HashMismatch(format!(
            "{key}: content does not match the recorded hash"
        )));
    }
    Ok(body.to_string())
}

fn io(path: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

/// A directory of cache files.
#[derive(Clone, Debug)]
pub struct CacheStore {
    dir: PathBuf,
}

impl CacheStore {
    pub fn new(dir: impl Into<PathBuf>) -> Result<CacheStore> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| io(&dir, e))?;
        Ok(CacheStore { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// Writes through a temporary file in the same directory, then renames.
    pub fn write(&self, key: &CacheKey, body: &str) -> Result<()> {
        let _guard = WRITE_LOCK.lock().unwrap();
        let path = self.path(key);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| io(&self.dir, e))?;
        tmp.write_all(encode(key, body).as_bytes())
            .map_err(|e| io(&path, e))?;
        tmp.persist(&path).map_err(|e| io(&path, e.error))?;
        Ok(())
    }

    /// The verified body, or `None` when the file does not exist.
    pub fn read(&self, key: &CacheKey) -> Result<Option<String>> {
        let path = self.path(key);
        match fs::read_to_string(&path) {
            Ok(text) => decode(key, &text).map(Some),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(io(&path, e)),
        }
    }

    /// Every recognised cache file with the outcome of verifying it.
    pub fn entries(&self) -> Result<Vec<(CacheKey, Result<()>)>> {
        let mut out = Vec::new();
        for entry in fs::read_dir(&self.dir).map_err(|e| io(&self.dir, e))? {
            let entry = entry.map_err(|e| io(&self.dir, e))?;
            if let Some(key) = entry
                .file_name()
                .to_str()
                .and_then(CacheKey::from_file_name)
            {
                out.push((key, self.read(&key).map(|_| ())));
            }
        }
        out.sort_by_key(|(k, _)| *k);
        Ok(out)
    }

    /// `H̃_μ` for every `μ ⊢ n`, loaded when cached and stored otherwise.
    /// Loaded tables also seed the in-memory cache.
    pub fn htilde(&self, n: usize) -> Result<BTreeMap<Partition, SymFunc>> {
        let key = CacheKey::Htilde(n);
        if let Some(body) = self.read(&key)? {
            let table = parse_htilde(&body)?;
            for (mu, f) in &table {
                seed_modified_macdonald(mu, f.clone());
            }
            return Ok(table);
        }
        let table: BTreeMap<Partition, SymFunc> = partitions_of(n)
            .into_iter()
            .map(|mu| (mu.clone(), modified_macdonald(&mu)))
            .collect();
        self.write(&key, &render_htilde(&table))?;
        Ok(table)
    }

    /// `E_n`: shipped data for small `n`, otherwise the cached or freshly
    /// extracted table. The shipped tables are written out as well.
    pub fn generic_e(&self, n: usize, n_bound: usize) -> Result<(TensorFrobenius, Provenance)> {
        let key = CacheKey::En(n);
        if n <= EMBEDDED_MAX {
            let e = embedded_e(n)?;
            if self.read(&key)?.is_none() {
                self.write(&key, &render_en(&e))?;
            }
            return Ok((e, Provenance::Embedded));
        }
        if let Some(body) = self.read(&key)? {
            return Ok((parse_en(&body)?, Provenance::Oracle));
        }
        let e = extract_generic_e_bounded(n, n_bound)?;
        self.write(&key, &render_en(&e))?;
        Ok((e, Provenance::Oracle))
    }

    /// Oracle report for `(k, j, n)`, loaded when cached.
    pub fn oracle(&self, k: usize, j: usize, n: usize, n_bound: usize) -> Result<OracleReport> {
        let key = CacheKey::Oracle(k, j, n);
        if let Some(body) = self.read(&key)? {
            return body.parse();
        }
        let report = coinvariant_frobenius_bounded(k, j, n, n_bound)?;
        self.write(&key, &report.to_string())?;
        Ok(report)
    }
}

/// `H[μ] s[λ] : <poly>` lines.
pub fn render_htilde(table: &BTreeMap<Partition, SymFunc>) -> String {
    let mut out = String::new();
    for (mu, f) in table {
        for (lam, c) in f.terms() {
            out.push_str(&format!("H{mu} s{lam} : {c}\n"));
        }
    }
    out
}

pub fn parse_htilde(body: &str) -> Result<BTreeMap<Partition, SymFunc>> {
    let mut lines: BTreeMap<Partition, String> = BTreeMap::new();
    for line in body.lines().filter(|l| !l.trim().is_empty()) {
        let (head, rest) = line
            .split_once(' ')
            .ok_or_else(|| Error::Parse(format!("bad line `{line}`")))?;
        let mu: Partition = head
            .strip_prefix('H')
            .ok_or_else(|| Error::Parse(format!("bad line `{line}`")))?
            .parse()?;
        let entry = lines.entry(mu).or_default();
        entry.push_str(rest);
        entry.push('\n');
    }
    lines
        .into_iter()
        .map(|(mu, text)| Ok((mu, text.parse()?)))
        .collect()
}

/// `lambda mu coeff` lines for a bosonic table.
pub fn render_en(e: &TensorFrobenius) -> String {
    e.entries()
        .map(|((lam, _, mu), c)| format!("{lam} {mu} {c}\n"))
        .collect()
}

pub fn parse_en(body: &str) -> Result<TensorFrobenius> {
    let mut e = TensorFrobenius::new();
    for line in body.lines().filter(|l| !l.trim().is_empty()) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [lam, mu, c] = fields[..] else {
            return Err(Error::Parse(format!(
                "expected `lambda mu coeff`, got `{line}`"
            )));
        };
        let c: BigInt = c
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient in `{line}`")))?;
        e.add(lam.parse()?, Partition::empty(), mu.parse()?, &c);
    }
    Ok(e)
}
