//! Run a JSON-configured sweep and print the CSV table.
//!
//! cargo run --example sweep -- examples/configs/distance_sweep.json

use pinching::experiment::{run_sweep, write_sweep_csv, SweepConfig};

fn main() -> pinching::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs/power_sweep.json").into());
    let cfg = SweepConfig::load(path)?;
    write_sweep_csv(&run_sweep(&cfg)?, std::io::stdout().lock())
}
