use std::io::Write;

use rayon::prelude::*;

use super::{SweepConfig, ORACLE_GRID_FRACTION};
use crate::channel::Scenario;
use crate::error::Result;
use crate::placement::{benchmark_place, oracle_greedy_place, place_all, PlacementResult, Scheme};

pub const SWEEP_CSV_HEADER: [&str; 5] = [
    "axis_value",
    "scheme",
    "rate_bps_hz",
    "snr_db",
    "positions_semicolon_separated_m",
];

#[derive(Debug, Clone, PartialEq)]
pub enum RowOutcome {
    Placed { rate: f64, snr: f64, positions: Vec<f64> },
    Failed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub axis_value: f64,
    pub scheme: Scheme,
    pub outcome: RowOutcome,
}

pub(crate) fn run_scheme(scheme: Scheme, scenario: &Scenario, candidates: usize) -> Result<PlacementResult> {
    match scheme {
        Scheme::Proposed => place_all(scenario, candidates),
        Scheme::Benchmark => benchmark_place(scenario),
        Scheme::OracleGreedy => oracle_greedy_place(scenario, scenario.waveguide.wavelength() * ORACLE_GRID_FRACTION),
    }
}

/// Run every scheme at every axis value.
///
/// Rows come back ordered by axis value, then by the scheme order of the
/// config. A failing placement is recorded in its row and does not stop the
/// sweep; only an invalid config is an error.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let jobs: Vec<(f64, Scheme)> = config
        .axis_values
        .iter()
        .flat_map(|&v| config.schemes.iter().map(move |&s| (v, s)))
        .collect();
    jobs.into_par_iter()
        .map(|(axis_value, scheme)| {
            let scenario = config.scenario_at(axis_value)?;
            let outcome = match run_scheme(scheme, &scenario, config.candidates_per_antenna) {
                Ok(r) => RowOutcome::Placed {
                    rate: r.rate,
                    snr: r.snr,
                    positions: r.positions,
                },
                Err(e) => RowOutcome::Failed(e.to_string()),
            };
            Ok(SweepRow {
                axis_value,
                scheme,
                outcome,
            })
        })
        .collect()
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_CSV_HEADER)?;
    for row in rows {
        let (rate, snr_db, positions) = match &row.outcome {
            RowOutcome::Placed { rate, snr, positions } => (
                rate.to_string(),
                (10.0 * snr.log10()).to_string(),
                positions.iter().map(f64::to_string).collect::<Vec<_>>().join(";"),
            ),
            RowOutcome::Failed(msg) => ("NaN".into(), "NaN".into(), format!("error: {msg}")),
        };
        w.write_record([row.axis_value.to_string(), row.scheme.to_string(), rate, snr_db, positions])?;
    }
    w.flush()?;
    Ok(())
}
