//! Per-PA channel coefficients, the aggregated channel at each receive
//! antenna, and the resulting MRC rate.

use pinching::channel::{
    achievable_rate, aggregate_channel, dbm_to_watts, phase_delay, LinkBudget, Scenario, UserArray, WaveguideParams,
};

fn main() -> pinching::Result<()> {
    let wg = WaveguideParams::default();
    println!(
        "f_c = {:.0} GHz, λ = {:.4} mm, λ_g = {:.4} mm, η = {:.3e}",
        wg.carrier_frequency() / 1e9,
        wg.wavelength() * 1e3,
        wg.guided_wavelength() * 1e3,
        wg.eta()
    );

    let user = UserArray::new(vec![9.9, 10.1], 4.0)?;
    let positions = [9.97, 9.978, 9.986, 10.0, 10.008, 10.016, 10.024, 10.032];
    for (m, h) in aggregate_channel(&wg, &user, &positions)?.iter().enumerate() {
        println!(
            "antenna {}: θ(x=10) = {:.3} rad, h = {:.4e} {:+.4e}j, |h|² = {:.4e}",
            m + 1,
            phase_delay(&wg, &user, m, 10.0)?,
            h.re,
            h.im,
            h.norm_sqr()
        );
    }

    for p_dbm in [10.0, 20.0, 30.0] {
        let s = Scenario::new(wg, user.clone(), positions.len(), LinkBudget::from_dbm(p_dbm, -90.0)?)?;
        println!("P = {p_dbm} dBm ({} W): rate {:.3} bit/s/Hz", dbm_to_watts(p_dbm), achievable_rate(&s, &positions)?);
    }
    Ok(())
}
