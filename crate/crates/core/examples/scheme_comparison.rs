//! Proposed placement, the virtual-center benchmark and the greedy grid oracle
//! on the same scenarios.

use pinching::channel::{LinkBudget, Scenario, UserArray, WaveguideParams};
use pinching::placement::{benchmark_place, oracle_greedy_place, place_all};

fn main() -> pinching::Result<()> {
    let wg = WaveguideParams::default();
    println!("{:>28} {:>4} {:>10} {:>10} {:>10}", "user", "N", "proposed", "benchmark", "oracle");
    for (users, n) in [
        (vec![9.9, 10.1], 8),
        (vec![9.9, 10.1], 32),
        (vec![9.7, 10.3], 16),
        (vec![9.7, 9.9, 10.1, 10.3], 16),
    ] {
        let s = Scenario::new(wg, UserArray::new(users.clone(), 4.0)?, n, LinkBudget::from_dbm(30.0, -90.0)?)?;
        println!(
            "{:>28} {n:>4} {:>10.4} {:>10.4} {:>10.4}",
            format!("{users:?}"),
            place_all(&s, 4)?.rate,
            benchmark_place(&s)?.rate,
            oracle_greedy_place(&s, wg.wavelength() / 1000.0)?.rate
        );
    }
    Ok(())
}
