//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;

use pinching::verify::{self, CheckOutcome, DEFAULT_SEED};

fn main() -> ExitCode {
    let checks: [fn() -> CheckOutcome; 11] = [
        || verify::sliding_window_exactness(DEFAULT_SEED),
        || verify::center_interval_and_concavity(DEFAULT_SEED),
        || verify::symmetric_center(DEFAULT_SEED),
        || verify::single_antenna_near_optimal(DEFAULT_SEED),
        verify::reference_step_trace,
        verify::ordering_versus_pa_count,
        verify::gap_versus_antenna_count,
        verify::ordering_versus_distance,
        || verify::derivative_checks(DEFAULT_SEED),
        || verify::spacing_audit(DEFAULT_SEED),
        || verify::mrc_identity(DEFAULT_SEED),
    ];
    let mut failed = 0;
    for check in checks {
        let outcome = check();
        println!("{outcome}");
        failed += usize::from(!outcome.passed);
    }
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
