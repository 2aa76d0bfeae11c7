use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::channel::{LinkBudget, Scenario, UserArray, WaveguideParams, DEFAULT_NOISE_POWER_DBM};
use crate::error::{Error, Result};
use crate::placement::{Scheme, DEFAULT_CANDIDATES_PER_ANTENNA};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WaveguideConfig {
    pub carrier_frequency_hz: f64,
    pub effective_refractive_index: f64,
    #[serde(default)]
    pub feed_x_m: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UserConfig {
    pub positions_m: Vec<f64>,
    pub vertical_distance_m: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetConfig {
    pub total_power_dbm: f64,
    #[serde(default = "default_noise")]
    pub noise_power_dbm: f64,
}

fn default_noise() -> f64 {
    DEFAULT_NOISE_POWER_DBM
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub waveguide: WaveguideConfig,
    pub user: UserConfig,
    pub pa_count: usize,
    pub budget: BudgetConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepAxis {
    #[serde(rename = "transmit_power_dBm")]
    TransmitPowerDbm,
    #[serde(rename = "user_distance_d_m")]
    UserDistance,
    #[serde(rename = "pa_count_N")]
    PaCount,
    #[serde(rename = "user_antenna_count_M")]
    UserAntennaCount,
}

/// A sweep over one scenario parameter, loaded from JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub scenario: ScenarioConfig,
    pub sweep_axis: SweepAxis,
    pub axis_values: Vec<f64>,
    pub schemes: Vec<Scheme>,
    #[serde(default = "default_candidates")]
    pub candidates_per_antenna: usize,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub seed: u64,
}

fn default_candidates() -> usize {
    DEFAULT_CANDIDATES_PER_ANTENNA
}

fn config_err(field: &str, reason: impl Into<String>) -> Error {
    Error::Config {
        field: field.to_string(),
        reason: reason.into(),
    }
}

fn wrap(field: &str, err: Error) -> Error {
    match err {
        Error::InvalidArgument { reason, .. } => config_err(field, reason),
        other => other,
    }
}

fn as_count(field: &str, v: f64) -> Result<usize> {
    if v.fract() != 0.0 || v < 1.0 || v > u32::MAX as f64 {
        return Err(config_err(field, format!("expected a positive integer, got {v}")));
    }
    Ok(v as usize)
}

impl ScenarioConfig {
    pub fn build(&self) -> Result<Scenario> {
        let wg = &self.waveguide;
        let waveguide = WaveguideParams::new(wg.carrier_frequency_hz, wg.effective_refractive_index, wg.feed_x_m)
            .map_err(|e| wrap("scenario.waveguide", e))?;
        let user = UserArray::new(self.user.positions_m.clone(), self.user.vertical_distance_m)
            .map_err(|e| wrap("scenario.user", e))?;
        let budget = LinkBudget::from_dbm(self.budget.total_power_dbm, self.budget.noise_power_dbm)
            .map_err(|e| wrap("scenario.budget", e))?;
        Scenario::new(waveguide, user, self.pa_count, budget).map_err(|e| wrap("scenario.pa_count", e))
    }
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SweepConfig = serde_json::from_str(text).map_err(|e| config_err("<json>", e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        self.scenario.build()?;
        if self.axis_values.is_empty() {
            return Err(config_err("axis_values", "must not be empty"));
        }
        if self.axis_values.iter().any(|v| !v.is_finite()) {
            return Err(config_err("axis_values", "must be finite"));
        }
        if self.axis_values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(config_err("axis_values", "must be strictly increasing"));
        }
        if self.schemes.is_empty() {
            return Err(config_err("schemes", "must not be empty"));
        }
        let mut seen = self.schemes.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.schemes.len() {
            return Err(config_err("schemes", "duplicate scheme"));
        }
        if self.candidates_per_antenna == 0 {
            return Err(config_err("candidates_per_antenna", "must be at least 1"));
        }
        for &v in &self.axis_values {
            self.scenario_at(v)?;
        }
        Ok(())
    }

    /// Base scenario with the swept parameter set to `value`.
    pub fn scenario_at(&self, value: f64) -> Result<Scenario> {
        let mut s = self.scenario.build()?;
        match self.sweep_axis {
            SweepAxis::TransmitPowerDbm => {
                s.budget = LinkBudget::from_dbm(value, self.scenario.budget.noise_power_dbm)
                    .map_err(|e| wrap("axis_values", e))?;
            }
            SweepAxis::UserDistance => {
                s.user = s.user.with_vertical_distance(value).map_err(|e| wrap("axis_values", e))?;
            }
            SweepAxis::PaCount => s.pa_count = as_count("axis_values", value)?,
            SweepAxis::UserAntennaCount => {
                let m = as_count("axis_values", value)?;
                s.user = UserArray::uniform(s.user.first(), s.user.last(), m, s.user.vertical_distance())
                    .map_err(|e| wrap("axis_values", e))?;
            }
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASE: &str = r#"{
        "scenario": {
            "waveguide": {"carrier_frequency_hz": 28e9, "effective_refractive_index": 1.4},
            "user": {"positions_m": [9.9, 10.1], "vertical_distance_m": 4.0},
            "pa_count": 16,
            "budget": {"total_power_dbm": 20.0}
        },
        "sweep_axis": "transmit_power_dBm",
        "axis_values": [10, 20, 30, 40],
        "schemes": ["proposed", "benchmark"]
    }"#;

    #[test]
    fn parses_with_defaults() {
        let cfg = SweepConfig::from_json(BASE).unwrap();
        assert_eq!(cfg.candidates_per_antenna, 4);
        assert_eq!(cfg.scenario.budget.noise_power_dbm, -90.0);
        assert_eq!(cfg.scenario.waveguide.feed_x_m, 0.0);
        assert_eq!(cfg.schemes, vec![Scheme::Proposed, Scheme::Benchmark]);
        let s = cfg.scenario_at(30.0).unwrap();
        assert!((s.budget.total_power() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn unknown_key_rejected() {
        let bad = BASE.replace("\"effective_refractive_index\"", "\"effective_refractive_indx\"");
        let err = SweepConfig::from_json(&bad).unwrap_err();
        assert!(err.to_string().contains("effective_refractive_indx"), "{err}");
    }

    #[test]
    fn carrier_frequency_is_mandatory() {
        let bad = BASE.replace("\"carrier_frequency_hz\": 28e9, ", "");
        assert!(SweepConfig::from_json(&bad).is_err());
    }

    #[test]
    fn field_named_in_errors() {
        let bad = BASE.replace("[10, 20, 30, 40]", "[10, 30, 20]");
        match SweepConfig::from_json(&bad) {
            Err(Error::Config { field, .. }) => assert_eq!(field, "axis_values"),
            other => panic!("{other:?}"),
        }
        let bad = BASE.replace("[\"proposed\", \"benchmark\"]", "[]");
        match SweepConfig::from_json(&bad) {
            Err(Error::Config { field, .. }) => assert_eq!(field, "schemes"),
            other => panic!("{other:?}"),
        }
        let bad = BASE.replace("\"vertical_distance_m\": 4.0", "\"vertical_distance_m\": -1");
        match SweepConfig::from_json(&bad) {
            Err(Error::Config { field, .. }) => assert_eq!(field, "scenario.user"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn count_axes_need_integers() {
        let bad = BASE
            .replace("transmit_power_dBm", "pa_count_N")
            .replace("[10, 20, 30, 40]", "[8, 12.5]");
        assert!(SweepConfig::from_json(&bad).is_err());
    }

    #[test]
    fn antenna_count_axis_spreads_over_aperture() {
        let cfg = BASE
            .replace("transmit_power_dBm", "user_antenna_count_M")
            .replace("[10, 20, 30, 40]", "[2, 4]")
            .replace("[9.9, 10.1]", "[9.7, 10.3]");
        let cfg = SweepConfig::from_json(&cfg).unwrap();
        let s = cfg.scenario_at(4.0).unwrap();
        let p = s.user.positions();
        assert_eq!(p.len(), 4);
        for (a, b) in p.iter().zip([9.7, 9.9, 10.1, 10.3]) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
