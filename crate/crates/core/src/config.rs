//! Run-wide settings for the command line.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle::DEFAULT_N_BOUND;

pub const DEFAULT_CACHE_DIR: &str = ".dbflab-cache";
pub const DEFAULT_SERIES_CAP: u32 = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    /// One `CHECK ...` or `TABLE ...` line per result.
    Machine,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Machine => "machine",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "machine" => Ok(OutputFormat::Machine),
            _ => Err(Error::Parse(format!("unknown output format `{s}`"))),
        }
    }
}

/// Defaults: cache in `.dbflab-cache`, series cap 8, oracle bound 4,
/// all cores, text output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub cache_dir: PathBuf,
    /// Degree cap for series-valued formulas.
    pub series_cap: u32,
    pub n_bound: usize,
    /// Worker threads; zero means one per core.
    pub threads: usize,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            cache_dir: PathBuf::from(DEFAULT_CACHE_DIR),
            series_cap: DEFAULT_SERIES_CAP,
            n_bound: DEFAULT_N_BOUND,
            threads: 0,
            format: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.series_cap == 0 {
            return Err(Error::Parse("the series cap must be positive".into()));
        }
        if self.n_bound == 0 {
            return Err(Error::Parse("the oracle bound must be positive".into()));
        }
        Ok(())
    }
}
