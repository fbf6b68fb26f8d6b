//! Limits on the brute-force oracles.

use std::env;

use crate::error::{Error, Result};

pub const BOUNDS_ENV: &str = "ZRANK_ORACLE_BOUNDS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    /// Largest shape handed to the decomposition enumerator.
    pub decomp_cells: usize,
    /// Largest number of interval sets summed over.
    pub interval_sets: usize,
    /// Largest shape filled by the tableau counter.
    pub ssyt_cells: usize,
    /// Largest alphabet for the tableau counter.
    pub ssyt_t: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            decomp_cells: 10,
            interval_sets: 40320,
            ssyt_cells: 8,
            ssyt_t: 4,
        }
    }
}

impl OracleBounds {
    /// Parses `key=value` pairs separated by commas, e.g.
    /// `decomp_cells=12,ssyt_t=5`. Unnamed keys keep their defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut b = OracleBounds::default();
        let bad = |reason: String| Error::MalformedBounds {
            literal: text.to_string(),
            reason,
        };
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got {item:?}")))?;
            let value: usize = value
                .parse()
                .map_err(|_| bad(format!("bound {key} is not a nonnegative integer")))?;
            match key {
                "decomp_cells" => b.decomp_cells = value,
                "interval_sets" => b.interval_sets = value,
                "ssyt_cells" => b.ssyt_cells = value,
                "ssyt_t" => b.ssyt_t = value,
                _ => return Err(bad(format!("unknown bound {key:?}"))),
            }
        }
        Ok(b)
    }

    /// Defaults, overridden by the environment variable when set.
    pub fn from_env() -> Result<Self> {
        match env::var(BOUNDS_ENV) {
            Ok(text) => Self::parse(&text),
            Err(_) => Ok(Self::default()),
        }
    }
}
