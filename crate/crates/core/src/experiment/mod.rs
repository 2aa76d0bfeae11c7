//! Parameter sweeps and single-step traces over placement scenarios.

mod config;
mod sweep;
mod trace;

pub use config::{BudgetConfig, ScenarioConfig, SweepAxis, SweepConfig, UserConfig, WaveguideConfig};
pub use sweep::{run_sweep, write_sweep_csv, RowOutcome, SweepRow, SWEEP_CSV_HEADER};
pub use trace::{trace_scenario, trace_step, write_trace_csv, StepTrace, TracePoint};

/// Oracle grid step as a fraction of the free-space wavelength.
pub const ORACLE_GRID_FRACTION: f64 = 1e-3;
