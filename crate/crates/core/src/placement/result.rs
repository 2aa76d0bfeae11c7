use serde::{Deserialize, Serialize};

use super::{CandidateSet, SpanSelection};

/// Placement scheme that produced a [`PlacementResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Proposed,
    Benchmark,
    OracleGreedy,
}

impl Scheme {
    pub fn as_str(&self) -> &'static str {
        match self {
            Scheme::Proposed => "proposed",
            Scheme::Benchmark => "benchmark",
            Scheme::OracleGreedy => "oracle-greedy",
        }
    }
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Diagnostics of one sequential deployment step.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    /// One-based position in the deployment order (the center is step 1).
    pub step: usize,
    /// One-based PA index.
    pub pa: usize,
    pub reference_x: f64,
    pub candidate_sets: Vec<CandidateSet>,
    pub selection: Option<SpanSelection>,
    pub position: f64,
    /// Set when the chosen point fell inside the spacing exclusion zone and
    /// was moved to `reference_x`.
    pub clamped: bool,
    /// Exact `Σ_m |ĥ_m|²` after this step.
    pub gain: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlacementResult {
    pub scheme: Scheme,
    /// PA positions ordered by PA index, hence ascending in x.
    pub positions: Vec<f64>,
    pub center_x: f64,
    /// Exact gain with only the central PA placed.
    pub initial_gain: f64,
    pub steps: Vec<StepRecord>,
    pub snr: f64,
    pub rate: f64,
}

impl PlacementResult {
    /// Gain after every deployment step, starting with the central PA alone.
    pub fn gains(&self) -> Vec<f64> {
        std::iter::once(self.initial_gain)
            .chain(self.steps.iter().map(|s| s.gain))
            .collect()
    }

    /// Smallest gap between adjacent PAs, `+∞` for a single PA.
    pub fn min_adjacent_gap(&self) -> f64 {
        self.positions
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }

    /// `min gap − min_spacing`; non-negative when the spacing constraint holds.
    pub fn spacing_slack(&self, min_spacing: f64) -> f64 {
        self.min_adjacent_gap() - min_spacing
    }
}
