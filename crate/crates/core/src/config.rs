//! Pipeline knobs.

use crate::error::{domain, Result};

/// Free constants of the pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Treewidth bound of the modulator.
    pub t: usize,
    /// Cut threshold for the center construction (the excluded
    /// topological minor's order).
    pub r: usize,
    /// Region size: replaceable regions have `b < |Y| ≤ 2b` vertices.
    pub b: usize,
    /// Maximum region boundary, also the largest annotation size typed.
    pub d: usize,
    /// Modulator size multiplier.
    pub c: usize,
    /// Connected interiors examined per region search.
    pub region_budget: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { t: 0, r: 4, b: 8, d: 5, c: 4, region_budget: 4000, seed: 0 }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.r == 0 || self.b == 0 || self.d == 0 || self.c == 0 {
            return Err(domain("r, b, d and c must be positive"));
        }
        if 2 * self.b > 20 {
            return Err(domain("b above 10 makes region typing intractable"));
        }
        Ok(())
    }
}
