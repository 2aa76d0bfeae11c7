//! Numerical acceptance checks: each heuristic step against its brute-force
//! reference, plus the scheme-ordering properties of the standard sweeps.
//!
//! Every check is deterministic for a given seed and reports a single
//! pass/fail outcome with a short diagnostic string.

use std::f64::consts::TAU;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::center::{
    inverse_path_loss, inverse_path_loss_derivative, inverse_path_loss_second_derivative, optimize_center,
    DEFAULT_CENTER_TOLERANCE,
};
use crate::channel::{
    channel_coefficient, phase_delay, phase_delay_slope, received_snr, LinkBudget, Scenario, UserArray,
    WaveguideParams,
};
use crate::error::Result;
use crate::experiment::{run_sweep, trace_scenario, RowOutcome, SweepConfig};
use crate::oracle::{dense_argmax, exhaustive_min_span, finite_difference, second_difference, GridSpec};
use crate::placement::{
    benchmark_place, min_span, oracle_greedy_place, place_all, PlacementResult, Scheme,
    DEFAULT_CANDIDATES_PER_ANTENNA,
};

pub const DEFAULT_SEED: u64 = 0x5eed_2025;

/// Receiver noise and power sweep used by the scheme-ordering checks.
pub const NOISE_POWER_DBM: f64 = -90.0;
pub const POWER_SWEEP_DBM: [f64; 7] = [10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0];

/// Peak position of the traced gain curve reported for the reference
/// configuration, kept for comparison only.
pub const REPORTED_STEP_PEAK_X: f64 = 10.043;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:<6} {}: {} ({:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

fn timed(
    id: &'static str,
    title: &'static str,
    limit: Option<Duration>,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> CheckOutcome {
    let start = Instant::now();
    let (mut passed, mut detail) = match body() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail.push_str(&format!("; exceeded {:.0} s budget", limit.as_secs_f64()));
        }
    }
    CheckOutcome {
        id,
        title,
        passed,
        detail,
        elapsed,
    }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Random sorted user array: `m` antennas over an aperture of `span`.
fn random_user(r: &mut impl Rng, m: usize, span: f64, d: f64) -> UserArray {
    let start = r.gen_range(-5.0..15.0);
    let mut p: Vec<f64> = (0..m.saturating_sub(2)).map(|_| start + r.gen_range(0.0..=span)).collect();
    p.push(start);
    if m > 1 {
        p.push(start + span);
    }
    p.sort_by(f64::total_cmp);
    UserArray::new(p, d).expect("sorted finite positions")
}

fn default_scenario(positions: &[f64], d: f64, pa_count: usize, power_dbm: f64) -> Result<Scenario> {
    Scenario::new(
        WaveguideParams::default(),
        UserArray::new(positions.to_vec(), d)?,
        pa_count,
        LinkBudget::from_dbm(power_dbm, NOISE_POWER_DBM)?,
    )
}

/// Sliding-window selection equals exhaustive enumeration on random instances.
pub fn sliding_window_exactness(seed: u64) -> CheckOutcome {
    timed("1", "sliding-window exactness", Some(Duration::from_secs(10)), || {
        let mut r = rng(seed, 1);
        let mut mismatches = 0;
        for _ in 0..1000 {
            let m = r.gen_range(2..=4);
            let z = r.gen_range(2..=6);
            let sets: Vec<Vec<f64>> = (0..m).map(|_| (0..z).map(|_| r.gen::<f64>()).collect()).collect();
            if min_span(&sets)?.span != exhaustive_min_span(&sets)?.span {
                mismatches += 1;
            }
        }
        Ok((mismatches == 0, format!("{mismatches}/1000 span mismatches")))
    })
}

/// Interval membership of the maximizer, concavity on narrow apertures, and
/// agreement of the center optimizer with a dense grid.
pub fn center_interval_and_concavity(seed: u64) -> CheckOutcome {
    timed("2", "center maximizer in aperture / concavity", Some(Duration::from_secs(30)), || {
        let mut r = rng(seed, 2);
        let (mut outside, mut convex, mut far, mut concave_cases) = (0, 0, 0, 0);
        let mut worst: f64 = 0.0;
        for _ in 0..1000 {
            let m = r.gen_range(1..=8);
            let d = r.gen_range(0.5..10.0);
            let span = if m == 1 { 0.0 } else { r.gen_range(0.0..=4.0 * d) };
            let user = random_user(&mut r, m, span, d);
            let (lo, hi) = (user.first(), user.last());

            // wide grid around the aperture; antenna positions first so exact ties resolve to them
            let reach = 2.0 * d + span;
            let grid = GridSpec::new(lo - reach, hi + reach, (hi - lo + 2.0 * reach) / 4000.0)?;
            let mut best = (f64::NAN, f64::NEG_INFINITY);
            for x in user.positions().iter().copied().chain(grid.points()) {
                let v = inverse_path_loss(&user, x);
                if v > best.1 {
                    best = (x, v);
                }
            }
            if !(lo..=hi).contains(&best.0) {
                outside += 1;
            }

            if span < d / 3f64.sqrt() {
                concave_cases += 1;
                if span > 0.0 {
                    let g = GridSpec::new(lo, hi, span / 999.0)?;
                    if g.points().any(|x| inverse_path_loss_second_derivative(&user, x) >= 0.0) {
                        convex += 1;
                    }
                }
                let found = optimize_center(&user, DEFAULT_CENTER_TOLERANCE)?.x_center;
                let reference = if span > 0.0 {
                    dense_argmax(|x| inverse_path_loss(&user, x), lo, hi, 1e-8)?.0
                } else {
                    lo
                };
                let err = (found - reference).abs();
                worst = worst.max(err);
                if err > 1e-6 {
                    far += 1;
                }
            }
        }
        Ok((
            outside == 0 && convex == 0 && far == 0,
            format!(
                "{outside}/1000 maximizers outside; {concave_cases} narrow apertures: {convex} with L''>=0, \
                 {far} off-grid by >1e-6 m (worst {worst:.2e} m)"
            ),
        ))
    })
}

/// Symmetric arrays: the geometric center is stationary and is the grid maximizer.
pub fn symmetric_center(seed: u64) -> CheckOutcome {
    timed("3", "symmetric array center", None, || {
        let mut r = rng(seed, 3);
        let mut failures = 0;
        let mut worst_ratio: f64 = 0.0;
        for _ in 0..200 {
            let m = r.gen_range(2..=8);
            let d = r.gen_range(0.5..10.0);
            let half = 0.5 * r.gen_range(0.01 * d..d / 3f64.sqrt());
            let c = r.gen_range(-5.0..15.0);
            let mut offsets: Vec<f64> = (0..m / 2 - 1).map(|_| r.gen_range(0.0..half)).collect();
            offsets.push(half);
            let mut p: Vec<f64> = offsets.iter().flat_map(|&o| [c - o, c + o]).collect();
            if m % 2 == 1 {
                p.push(c);
            }
            p.sort_by(f64::total_cmp);
            let user = UserArray::new(p, d)?;
            let center = user.midpoint();

            let grid = GridSpec::new(user.first(), user.last(), user.span() / 999.0)?;
            let max_slope = grid
                .points()
                .map(|x| inverse_path_loss_derivative(&user, x).abs())
                .fold(0.0, f64::max);
            let ratio = inverse_path_loss_derivative(&user, center).abs() / max_slope;
            worst_ratio = worst_ratio.max(ratio);
            let (x_grid, _) = grid.argmax(|x| inverse_path_loss(&user, x));
            if ratio > 1e-9 || (x_grid - center).abs() > grid.step {
                failures += 1;
            }
        }
        Ok((
            failures == 0,
            format!("{failures}/200 failures; worst |L'(center)|/max|L'| = {worst_ratio:.1e}"),
        ))
    })
}

/// Single receive antenna: the closed-form placement tracks the greedy grid oracle.
pub fn single_antenna_near_optimal(seed: u64) -> CheckOutcome {
    timed("4", "single-antenna placement vs greedy oracle", None, || {
        let mut r = rng(seed, 4);
        let (mut far, mut low_rate, mut far_on_fine_grid) = (0, 0, 0);
        let (mut worst_dx, mut worst_ratio): (f64, f64) = (0.0, f64::INFINITY);
        for _ in 0..100 {
            let wg = WaveguideParams::new(28e9, 1.4, r.gen_range(-5.0..0.0))?;
            let user = UserArray::new(vec![r.gen_range(0.0..20.0)], r.gen_range(1.0..10.0))?;
            let n = r.gen_range(2..=16);
            let s = Scenario::new(wg, user, n, LinkBudget::from_dbm(r.gen_range(10.0..40.0), NOISE_POWER_DBM)?)?;
            let proposed = place_all(&s, DEFAULT_CANDIDATES_PER_ANTENNA)?;
            let oracle = oracle_greedy_place(&s, wg.wavelength() / 1000.0)?;
            let dx = proposed
                .positions
                .iter()
                .zip(&oracle.positions)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            worst_dx = worst_dx.max(dx);
            if dx > wg.wavelength() / 100.0 {
                far += 1;
                let fine = oracle_greedy_place(&s, wg.wavelength() / 10_000.0)?;
                let fine_dx = proposed
                    .positions
                    .iter()
                    .zip(&fine.positions)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                if fine_dx > wg.wavelength() / 100.0 {
                    far_on_fine_grid += 1;
                }
            }
            let ratio = proposed.rate / oracle.rate;
            worst_ratio = worst_ratio.min(ratio);
            if ratio < 0.999 {
                low_rate += 1;
            }
        }
        Ok((
            far == 0 && low_rate == 0,
            format!(
                "{far}/100 with a position off by >λ/100 (worst {worst_dx:.2e} m; \
                 {far_on_fine_grid} remain at a λ/10000 oracle grid), \
                 {low_rate}/100 with rate ratio <0.999 (worst {worst_ratio:.6})"
            ),
        ))
    })
}

/// Circular distance between two wrapped phases.
fn phase_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Two-antenna trace of the fifth PA: linear phase model accuracy, per-antenna
/// peaks at the candidates, and the chosen point against the grid optimum.
pub fn reference_step_trace() -> CheckOutcome {
    timed("5", "two-antenna step trace", None, || {
        let s = default_scenario(&[9.9, 10.1], 4.0, 8, 30.0)?;
        let wg = s.waveguide;
        let t = trace_scenario(&s, 2, DEFAULT_CANDIDATES_PER_ANTENNA)?;
        let center = optimize_center(&s.user, DEFAULT_CENTER_TOLERANCE)?.x_center;

        // (a) one guided wavelength past the reference position
        let window = wg.guided_wavelength();
        let worst_phase = t
            .points
            .iter()
            .filter(|p| (p.x - t.reference_x).abs() <= window)
            .flat_map(|p| p.exact_phase_diff.iter().zip(&p.linear_phase_diff).map(|(a, b)| phase_gap(*a, *b)))
            .fold(0.0, f64::max);

        // (b) nearest local maximum of g_m to every interior candidate
        let tol = wg.wavelength() / 100.0;
        let mut worst_peak: f64 = 0.0;
        let mut checked = 0;
        for (m, set) in t.candidate_sets.iter().enumerate() {
            let g: Vec<f64> = t.points.iter().map(|p| p.antenna_gain[m]).collect();
            let peaks: Vec<f64> = (1..g.len() - 1)
                .filter(|&i| g[i] > g[i - 1] && g[i] >= g[i + 1])
                .map(|i| t.points[i].x)
                .collect();
            for c in &set.candidates {
                if c.x <= t.grid.lo + tol || c.x >= t.grid.hi - tol {
                    continue;
                }
                checked += 1;
                let gap = peaks.iter().map(|p| (p - c.x).abs()).fold(f64::INFINITY, f64::min);
                worst_peak = worst_peak.max(gap);
            }
        }

        // (c)
        let ratio = t.chosen.1 / t.oracle.1;
        let passed = center == 10.0 && worst_phase <= 0.05 && checked > 0 && worst_peak <= tol && ratio >= 0.95;
        Ok((
            passed,
            format!(
                "center {center} m; linear-model error {worst_phase:.2e} rad; {checked} candidates, \
                 farthest gain peak {worst_peak:.2e} m; chosen {:.5} m reaches {ratio:.4} of grid max at {:.5} m \
                 (reported peak {REPORTED_STEP_PEAK_X} m uses unstated parameters)",
                t.chosen.0, t.oracle.0
            ),
        ))
    })
}

fn sweep_config(positions: &[f64], d: f64, pa_count: usize, axis: &str, values: &[f64]) -> Result<SweepConfig> {
    let cfg = serde_json::json!({
        "scenario": {
            "waveguide": {"carrier_frequency_hz": 28e9, "effective_refractive_index": 1.4},
            "user": {"positions_m": positions, "vertical_distance_m": d},
            "pa_count": pa_count,
            "budget": {"total_power_dbm": 30.0, "noise_power_dbm": NOISE_POWER_DBM}
        },
        "sweep_axis": axis,
        "axis_values": values,
        "schemes": ["proposed", "benchmark"]
    });
    SweepConfig::from_json(&cfg.to_string())
}

/// Rates of both schemes along a sweep, in axis order.
fn sweep_rates(cfg: &SweepConfig) -> Result<(Vec<f64>, Vec<f64>)> {
    let rows = run_sweep(cfg)?;
    let mut proposed = Vec::new();
    let mut benchmark = Vec::new();
    for row in rows {
        let rate = match row.outcome {
            RowOutcome::Placed { rate, .. } => rate,
            RowOutcome::Failed(e) => {
                return Err(crate::Error::State(format!("{} at {}: {e}", row.scheme, row.axis_value)))
            }
        };
        match row.scheme {
            Scheme::Proposed => proposed.push(rate),
            Scheme::Benchmark => benchmark.push(rate),
            Scheme::OracleGreedy => {}
        }
    }
    Ok((proposed, benchmark))
}

/// Δ_u = 0.2 m, d = 4 m, N ∈ {8, 16, 32}: proposed at or above the benchmark
/// at every power, and nondecreasing in N.
pub fn ordering_versus_pa_count() -> CheckOutcome {
    timed("6(i)", "proposed >= benchmark, rate grows with N", Some(Duration::from_secs(60)), || {
        let mut curves = Vec::new();
        let mut shortfalls = Vec::new();
        for n in [8, 16, 32] {
            let (p, b) = sweep_rates(&sweep_config(&[9.9, 10.1], 4.0, n, "transmit_power_dBm", &POWER_SWEEP_DBM)?)?;
            let worst = p.iter().zip(&b).map(|(p, b)| p - b).fold(f64::INFINITY, f64::min);
            if worst < 0.0 {
                shortfalls.push(format!("N={n} trails by {:.2e} bit/s/Hz", -worst));
            }
            curves.push((n, p, b));
        }
        let grows = curves
            .windows(2)
            .all(|w| w[0].1.iter().zip(&w[1].1).all(|(a, b)| b >= a));
        let summary: Vec<String> = curves
            .iter()
            .map(|(n, p, b)| format!("N={n} @40dBm {:.4}/{:.4}", p[p.len() - 1], b[b.len() - 1]))
            .collect();
        let passed = shortfalls.is_empty() && grows;
        Ok((
            passed,
            format!(
                "proposed/benchmark {}; nondecreasing in N: {grows}{}",
                summary.join(", "),
                if shortfalls.is_empty() {
                    String::new()
                } else {
                    format!("; {}", shortfalls.join(", "))
                }
            ),
        ))
    })
}

/// N = 16, d = 4 m: the advantage over the benchmark shrinks from M = 2 to M = 4.
pub fn gap_versus_antenna_count() -> CheckOutcome {
    timed("6(ii)", "gain over benchmark shrinks with M", Some(Duration::from_secs(60)), || {
        let mut gaps = Vec::new();
        for positions in [&[9.7, 10.3][..], &[9.7, 9.9, 10.1, 10.3][..]] {
            let (p, b) = sweep_rates(&sweep_config(positions, 4.0, 16, "transmit_power_dBm", &[30.0])?)?;
            gaps.push(p[0] - b[0]);
        }
        Ok((
            gaps[1] < gaps[0],
            format!("gap at 30 dBm: M=2 {:.3}, M=4 {:.3} bit/s/Hz", gaps[0], gaps[1]),
        ))
    })
}

/// Δ_u = 0.4 m, N = 16, d from 2 to 10 m: proposed strictly decreasing,
/// benchmark rising to an interior peak and falling again.
pub fn ordering_versus_distance() -> CheckOutcome {
    timed("6(iii)", "rate versus user distance", Some(Duration::from_secs(60)), || {
        let distances: Vec<f64> = (0..=16).map(|i| 2.0 + 0.5 * i as f64).collect();
        let (p, b) = sweep_rates(&sweep_config(&[9.8, 10.2], 4.0, 16, "user_distance_d_m", &distances)?)?;
        let decreasing = p.windows(2).all(|w| w[1] < w[0]);
        let (peak, _) = b
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc });
        let hump = peak > 0 && peak + 1 < b.len() && b[peak] > b[0] && b[peak] > b[b.len() - 1];
        Ok((
            decreasing && hump,
            format!(
                "proposed strictly decreasing: {decreasing}; benchmark peaks at d = {} m \
                 ({:.3} vs {:.3} at 2 m and {:.3} at 10 m)",
                distances[peak],
                b[peak],
                b[0],
                b[b.len() - 1]
            ),
        ))
    })
}

/// Relative error against the natural scale of a sum of terms.
fn rel_err(analytic: f64, numeric: f64, scale: f64) -> f64 {
    (analytic - numeric).abs() / scale.max(analytic.abs())
}

/// Analytic first and second derivatives of the inverse path loss and the
/// exact phase slope against central differences.
pub fn derivative_checks(seed: u64) -> CheckOutcome {
    timed("7", "analytic derivatives vs finite differences", None, || {
        let mut r = rng(seed, 7);
        let wg = WaveguideParams::default();
        let (mut w1, mut w2, mut w3): (f64, f64, f64) = (0.0, 0.0, 0.0);
        for _ in 0..1000 {
            let m = r.gen_range(1..=8);
            let d = r.gen_range(0.5..10.0);
            let span = r.gen_range(0.0..2.0 * d);
            let user = random_user(&mut r, m, span, d);
            let x = r.gen_range(user.first() - 2.0 * d..user.last() + 2.0 * d);
            let d2 = d * d;
            let terms = |f: &dyn Fn(f64) -> f64| user.positions().iter().map(|&xm| f(x - xm).abs()).sum::<f64>();

            let scale1 = terms(&|u| 2.0 * u / (u * u + d2).powi(2));
            let fd1 = finite_difference(|t| inverse_path_loss(&user, t), x, 1e-4 * d);
            w1 = w1.max(rel_err(inverse_path_loss_derivative(&user, x), fd1, scale1));

            let scale2 = terms(&|u| (6.0 * u * u + 2.0 * d2) / (u * u + d2).powi(3));
            let fd2 = second_difference(|t| inverse_path_loss(&user, t), x, 1e-3 * d);
            w2 = w2.max(rel_err(inverse_path_loss_second_derivative(&user, x), fd2, scale2));

            let a = r.gen_range(0..m);
            let fd3 = finite_difference(|t| phase_delay(&wg, &user, a, t).expect("antenna in range"), x, 1e-6);
            w3 = w3.max(rel_err(phase_delay_slope(&wg, &user, a, x)?, fd3, 0.0));
        }
        let worst = w1.max(w2).max(w3);
        Ok((
            worst <= 1e-4,
            format!("worst relative error: L' {w1:.1e}, L'' {w2:.1e}, phase slope {w3:.1e}"),
        ))
    })
}

fn random_multi_antenna_scenario(r: &mut impl Rng) -> Result<Scenario> {
    let m = r.gen_range(1..=4);
    let d = r.gen_range(2.0..8.0);
    let span = if m == 1 { 0.0 } else { r.gen_range(0.0..0.6) };
    let user = random_user(r, m, span, d);
    Scenario::new(
        WaveguideParams::new(28e9, 1.4, user.first() - r.gen_range(1.0..10.0))?,
        user,
        r.gen_range(1..=32),
        LinkBudget::from_dbm(r.gen_range(10.0..40.0), NOISE_POWER_DBM)?,
    )
}

/// Every scheme keeps adjacent PAs at least half a wavelength apart.
pub fn spacing_audit(seed: u64) -> CheckOutcome {
    timed("8", "half-wavelength spacing audit", None, || {
        let mut r = rng(seed, 8);
        let mut scenarios: Vec<Scenario> = (0..60)
            .map(|_| random_multi_antenna_scenario(&mut r))
            .collect::<Result<_>>()?;
        scenarios.push(default_scenario(&[9.9, 10.1], 4.0, 32, 30.0)?);
        scenarios.push(default_scenario(&[9.7, 9.9, 10.1, 10.3], 4.0, 16, 30.0)?);
        scenarios.push(default_scenario(&[9.8, 10.2], 2.0, 16, 30.0)?);

        let mut results: Vec<(Scenario, PlacementResult)> = Vec::new();
        for s in &scenarios {
            results.push((s.clone(), place_all(s, DEFAULT_CANDIDATES_PER_ANTENNA)?));
            results.push((s.clone(), benchmark_place(s)?));
            results.push((s.clone(), oracle_greedy_place(s, s.waveguide.wavelength() / 1000.0)?));
        }
        let worst = results
            .iter()
            .map(|(s, res)| res.spacing_slack(s.waveguide.min_spacing()))
            .fold(f64::INFINITY, f64::min);
        let violations = results
            .iter()
            .filter(|(s, res)| res.spacing_slack(s.waveguide.min_spacing()) < -1e-12)
            .count();
        Ok((
            violations == 0,
            format!("{} placements, {violations} violations, smallest slack {worst:.3e} m", results.len()),
        ))
    })
}

/// Post-combining SNR equals (γ̃/N) Σ_m |Σ_n h_{m,n}|² built term by term.
pub fn mrc_identity(seed: u64) -> CheckOutcome {
    timed("9", "MRC SNR identity", None, || {
        let mut r = rng(seed, 9);
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let s = random_multi_antenna_scenario(&mut r)?;
            let half = s.waveguide.min_spacing();
            let mut x = s.user.first() - 0.1;
            let positions: Vec<f64> = (0..s.pa_count)
                .map(|_| {
                    x += half + r.gen_range(0.0..2.0 * half);
                    x
                })
                .collect();
            let mut gain = 0.0;
            for m in 0..s.user.len() {
                let mut re = 0.0;
                let mut im = 0.0;
                for &p in &positions {
                    let h = channel_coefficient(&s.waveguide, &s.user, m, p)?;
                    re += h.re;
                    im += h.im;
                }
                gain += re * re + im * im;
            }
            let expected = s.budget.transmit_snr() / s.pa_count as f64 * gain;
            let got = received_snr(&s, &positions)?;
            worst = worst.max(((got - expected) / expected).abs());
        }
        Ok((worst <= 1e-12, format!("worst relative deviation {worst:.1e}")))
    })
}

/// Run every acceptance check in order.
pub fn run_all(seed: u64) -> Vec<CheckOutcome> {
    vec![
        sliding_window_exactness(seed),
        center_interval_and_concavity(seed),
        symmetric_center(seed),
        single_antenna_near_optimal(seed),
        reference_step_trace(),
        ordering_versus_pa_count(),
        gap_versus_antenna_count(),
        ordering_versus_distance(),
        derivative_checks(seed),
        spacing_audit(seed),
        mrc_identity(seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn phase_gap_is_circular() {
        assert!((phase_gap(0.01, TAU - 0.01) - 0.02).abs() < 1e-12);
        assert!((phase_gap(PI, 0.0) - PI).abs() < 1e-12);
    }

    #[test]
    fn random_users_are_valid() {
        let mut r = rng(1, 0);
        for _ in 0..100 {
            let u = random_user(&mut r, 5, 1.5, 2.0);
            assert_eq!(u.len(), 5);
            assert!((u.span() - 1.5).abs() < 1e-12);
        }
    }
}
