use std::io::Write;

use super::{SweepConfig, ORACLE_GRID_FRACTION};
use crate::center::{optimize_center, DEFAULT_CENTER_TOLERANCE};
use crate::channel::{coefficient_at, phase_delay_at, wrap_phase, Scenario};
use crate::error::{Error, Result};
use crate::oracle::{gain_with_pa, grid_argmax_gain, GridSpec};
use crate::placement::{
    candidate_positions, place_next, CandidateSet, PlacementState, Side, ORACLE_SEARCH_WAVELENGTHS,
};

/// Per-antenna quantities at one trial position of the traced PA.
#[derive(Debug, Clone, PartialEq)]
pub struct TracePoint {
    pub x: f64,
    /// Exact phase difference to the accumulated channel, wrapped to [0, 2π).
    pub exact_phase_diff: Vec<f64>,
    /// Same difference under the linear phase model, wrapped to [0, 2π).
    pub linear_phase_diff: Vec<f64>,
    /// `g_m = |ĥ_m + h_m(x)|²`.
    pub antenna_gain: Vec<f64>,
    /// `Σ_m g_m`.
    pub total_gain: f64,
}

/// Everything seen while placing the `step`-th PA of the deployment order.
#[derive(Debug, Clone, PartialEq)]
pub struct StepTrace {
    pub step: usize,
    pub pa: usize,
    pub side: Side,
    pub reference_x: f64,
    pub normalized_phases: Vec<f64>,
    pub candidate_sets: Vec<CandidateSet>,
    pub grid: GridSpec,
    pub points: Vec<TracePoint>,
    /// Position picked by the sequential placement and its exact gain.
    pub chosen: (f64, f64),
    /// Grid maximizer of the exact gain over the same grid.
    pub oracle: (f64, f64),
}

/// Trace the `step`-th placement (2 ≤ step ≤ N) of the config's base scenario.
pub fn trace_step(config: &SweepConfig, step: usize) -> Result<StepTrace> {
    config.validate()?;
    let scenario = config.scenario.build()?;
    trace_scenario(&scenario, step, config.candidates_per_antenna)
}

pub fn trace_scenario(scenario: &Scenario, step: usize, candidates_per_antenna: usize) -> Result<StepTrace> {
    let (wg, user) = (&scenario.waveguide, &scenario.user);
    if !(2..=scenario.pa_count).contains(&step) {
        return Err(Error::Config {
            field: "step".into(),
            reason: format!("must lie in 2..={}, got {step}", scenario.pa_count),
        });
    }
    let center = optimize_center(user, DEFAULT_CENTER_TOLERANCE)?.x_center;
    let mut state = PlacementState::new(wg, user, scenario.pa_count, center)?;
    while state.placed_count() + 1 < step {
        let n = state.next_pa().expect("step ≤ N");
        place_next(&mut state, n, candidates_per_antenna, wg, user)?;
    }
    let pa = state.next_pa().expect("step ≤ N");
    let side = state.side_of(pa)?;
    let reference_x = state.reference_position(pa, wg)?;
    let candidate_sets = (0..user.len())
        .map(|m| candidate_positions(&state, pa, m, candidates_per_antenna, wg, user))
        .collect::<Result<Vec<_>>>()?;
    let normalized_phases = (0..user.len())
        .map(|m| state.normalized_phase(m))
        .collect::<Result<Vec<_>>>()?;

    let reach = ORACLE_SEARCH_WAVELENGTHS * wg.guided_wavelength();
    let step_len = wg.wavelength() * ORACLE_GRID_FRACTION;
    let grid = match side {
        Side::Right => GridSpec::new(reference_x, reference_x + reach, step_len)?,
        Side::Left => GridSpec::new(reference_x - reach, reference_x, step_len)?,
    };

    let d = user.vertical_distance();
    let points = grid
        .points()
        .map(|x| {
            let mut exact = Vec::with_capacity(user.len());
            let mut linear = Vec::with_capacity(user.len());
            let mut gains = Vec::with_capacity(user.len());
            for (m, &xm) in user.positions().iter().enumerate() {
                let target = normalized_phases[m];
                exact.push(wrap_phase(phase_delay_at(wg, xm, d, x) - target));
                linear.push(wrap_phase(candidate_sets[m].linear_phase(x) - target));
                gains.push((state.accumulated()[m] + coefficient_at(wg, xm, d, x)).norm_sqr());
            }
            TracePoint {
                x,
                exact_phase_diff: exact,
                linear_phase_diff: linear,
                total_gain: gains.iter().sum(),
                antenna_gain: gains,
            }
        })
        .collect();

    let oracle = grid_argmax_gain(&state, pa, grid, wg, user)?;
    let mut placed = state.clone();
    let record = place_next(&mut placed, pa, candidates_per_antenna, wg, user)?;
    let chosen = (record.position, gain_with_pa(&state, wg, user, record.position));

    Ok(StepTrace {
        step,
        pa,
        side,
        reference_x,
        normalized_phases,
        candidate_sets,
        grid,
        points,
        chosen,
        oracle,
    })
}

pub fn write_trace_csv<W: Write>(trace: &StepTrace, out: W) -> Result<()> {
    let antennas = trace.normalized_phases.len();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["x_m".to_string()];
    for m in 1..=antennas {
        header.push(format!("phase_diff_exact_{m}"));
        header.push(format!("phase_diff_linear_{m}"));
        header.push(format!("gain_{m}"));
    }
    header.push("total_gain".into());
    w.write_record(&header)?;
    for p in &trace.points {
        let mut rec = vec![p.x.to_string()];
        for m in 0..antennas {
            rec.push(p.exact_phase_diff[m].to_string());
            rec.push(p.linear_phase_diff[m].to_string());
            rec.push(p.antenna_gain[m].to_string());
        }
        rec.push(p.total_gain.to_string());
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{LinkBudget, UserArray, WaveguideParams};

    fn scenario(positions: &[f64], n: usize) -> Scenario {
        Scenario::new(
            WaveguideParams::default(),
            UserArray::new(positions.to_vec(), 4.0).unwrap(),
            n,
            LinkBudget::from_dbm(30.0, -90.0).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn curve_argmax_is_the_oracle() {
        let t = trace_scenario(&scenario(&[9.9, 10.1], 8), 2, 4).unwrap();
        assert_eq!(t.pa, 5);
        let best = t
            .points
            .iter()
            .fold((f64::NAN, f64::NEG_INFINITY), |b, p| if p.total_gain > b.1 { (p.x, p.total_gain) } else { b });
        assert_eq!(best, t.oracle);
    }

    #[test]
    fn left_branch_trace() {
        let t = trace_scenario(&scenario(&[9.9, 10.1], 8), 6, 4).unwrap();
        assert_eq!((t.pa, t.side), (3, Side::Left));
        assert!(t.points.iter().all(|p| p.x <= t.reference_x + 1e-12));
    }

    #[test]
    fn step_bounds() {
        let s = scenario(&[10.0], 4);
        assert!(trace_scenario(&s, 1, 4).is_err());
        assert!(trace_scenario(&s, 5, 4).is_err());
        assert!(trace_scenario(&s, 4, 4).is_ok());
    }

    #[test]
    fn csv_columns() {
        let t = trace_scenario(&scenario(&[9.9, 10.1], 4), 2, 4).unwrap();
        let mut buf = Vec::new();
        write_trace_csv(&t, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            "x_m,phase_diff_exact_1,phase_diff_linear_1,gain_1,phase_diff_exact_2,phase_diff_linear_2,gain_2,total_gain"
        );
        assert_eq!(text.lines().count(), t.points.len() + 1);
    }
}
