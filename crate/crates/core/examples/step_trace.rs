//! Exact and linearized phase differences and the gain curves around one
//! placement step, written as CSV to stdout.

use pinching::experiment::{trace_step, write_trace_csv, SweepConfig};

fn main() -> pinching::Result<()> {
    let cfg = SweepConfig::load(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs/step_trace.json"))?;
    let trace = trace_step(&cfg, 2)?;
    eprintln!(
        "PA {} on the {:?} side from x^s = {:.6} m: chosen {:.6} m, grid optimum {:.6} m ({:.4} of max)",
        trace.pa,
        trace.side,
        trace.reference_x,
        trace.chosen.0,
        trace.oracle.0,
        trace.chosen.1 / trace.oracle.1
    );
    write_trace_csv(&trace, std::io::stdout().lock())
}
