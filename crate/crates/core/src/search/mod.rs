//! Exhaustive extremal search over small graphs.

mod cache;
pub mod enumerate;
mod extremal;

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{class_forms, enumerate_graphs, EnumerationStats};
pub use extremal::{
    compute_p, lower_bound_from_constructions, p1_upper_bound, verify_uniqueness, CensusEntry,
    ExtremalResult, RunStats, UniquenessReport,
};

/// Largest order the exhaustive mode accepts (about 1.2e7 classes).
pub const EXHAUSTIVE_CEILING: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    ConstructionsOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Levelwise dedup below order 10, canonical augmentation at 10.
    Auto,
    LevelwiseDedup,
    CanonicalAugmentation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_order: usize,
    pub workers: usize,
    pub mode: Mode,
    pub strategy: Strategy,
    pub cache_dir: Option<PathBuf>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_order: EXHAUSTIVE_CEILING,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            mode: Mode::Exhaustive,
            strategy: Strategy::Auto,
            cache_dir: None,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::Input("workers must be at least 1".into()));
        }
        if self.mode == Mode::Exhaustive && self.max_order > EXHAUSTIVE_CEILING {
            return Err(Error::Capacity {
                order: self.max_order,
                ceiling: EXHAUSTIVE_CEILING,
            });
        }
        Ok(())
    }

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        self.validate()?;
        if order == 0 {
            return Err(Error::Input("order must be at least 1".into()));
        }
        let ceiling = self.max_order.min(EXHAUSTIVE_CEILING);
        if order > ceiling {
            return Err(Error::Capacity { order, ceiling });
        }
        Ok(())
    }

    pub(crate) fn resolved_strategy(&self, order: usize) -> Strategy {
        match self.strategy {
            Strategy::Auto if order >= 10 => Strategy::CanonicalAugmentation,
            Strategy::Auto => Strategy::LevelwiseDedup,
            s => s,
        }
    }
}
