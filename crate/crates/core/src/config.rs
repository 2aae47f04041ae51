use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const DEFAULT_ORDER: i32 = 12;
pub const DEFAULT_BRUTE_LIMIT: usize = 13;
pub const DEFAULT_GENUS_LIMIT: u32 = 2;
pub const WORKERS_ENV: &str = "GENUS_WORKERS";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::InvalidConfig(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest `n` for brute-force censuses.
    pub brute_limit: usize,
    /// Largest genus the catalogue search accepts.
    pub genus_limit: u32,
    /// Series truncation order.
    pub order: i32,
    /// Worker threads; `None` lets rayon decide.
    pub workers: Option<usize>,
    pub format: OutputFormat,
    pub catalogue: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            brute_limit: DEFAULT_BRUTE_LIMIT,
            genus_limit: DEFAULT_GENUS_LIMIT,
            order: DEFAULT_ORDER,
            workers: None,
            format: OutputFormat::Text,
            catalogue: None,
        }
    }
}

impl Config {
    /// Defaults, with the worker count taken from `GENUS_WORKERS` if set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Config::default();
        if let Ok(v) = std::env::var(WORKERS_ENV) {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("{WORKERS_ENV}={v:?} is not a count")))?;
            cfg.workers = Some(n);
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.brute_limit == 0 {
            return Err(Error::InvalidConfig("brute limit must be positive".into()));
        }
        if self.genus_limit == 0 {
            return Err(Error::InvalidConfig("genus limit must be positive".into()));
        }
        if self.order <= 0 {
            return Err(Error::InvalidConfig(
                "truncation order must be positive".into(),
            ));
        }
        if self.workers == Some(0) {
            return Err(Error::InvalidConfig("worker count must be positive".into()));
        }
        Ok(())
    }

    /// Sizes the global rayon pool; a no-op once the pool exists.
    pub fn install_workers(&self) {
        if let Some(n) = self.workers {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}
