//! Step-by-step deployment: candidate sets, the chosen cluster, and the gain
//! after every PA.

use pinching::channel::{LinkBudget, Scenario, UserArray, WaveguideParams};
use pinching::placement::place_all;

fn main() -> pinching::Result<()> {
    let s = Scenario::new(
        WaveguideParams::default(),
        UserArray::new(vec![9.9, 10.1], 4.0)?,
        8,
        LinkBudget::from_dbm(30.0, -90.0)?,
    )?;
    let result = place_all(&s, 4)?;
    println!("center x = {:.6} m, G = {:.4e}", result.center_x, result.initial_gain);
    for step in &result.steps {
        println!("step {} -> PA {} (x^s = {:.6} m)", step.step, step.pa, step.reference_x);
        for set in &step.candidate_sets {
            let xs: Vec<String> = set.candidates.iter().map(|c| format!("{:.6}", c.x)).collect();
            println!("  antenna {}: [{}]", set.antenna + 1, xs.join(", "));
        }
        if let Some(sel) = &step.selection {
            println!("  span {:.2e} m", sel.span);
        }
        println!(
            "  placed at {:.6} m{}, G = {:.4e}",
            step.position,
            if step.clamped { " (clamped)" } else { "" },
            step.gain
        );
    }
    println!("rate {:.4} bit/s/Hz, SNR {:.3e}", result.rate, result.snr);
    Ok(())
}
