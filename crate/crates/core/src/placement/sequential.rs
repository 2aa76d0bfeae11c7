use num_complex::Complex64;

use super::{
    aligned_candidates, candidate_positions, deployment_order, linearized_slope, min_span_select,
    CandidateSet, DeploymentOrder, PlacementResult, Scheme, Side, StepRecord,
};
use crate::center::{optimize_center, DEFAULT_CENTER_TOLERANCE};
use crate::channel::{
    channel_gain, coefficient_at, phase_delay_at, rate_from_snr, wrap_phase, ComplexChannel, Scenario, UserArray,
    WaveguideParams,
};
use crate::error::{Error, Result};
use crate::oracle::{grid_argmax_gain, GridSpec};

pub const DEFAULT_CANDIDATES_PER_ANTENNA: usize = 4;

/// Width of the oracle search window, in guided wavelengths past the
/// reference position.
pub const ORACLE_SEARCH_WAVELENGTHS: f64 = 4.0;

/// Incremental state of a center-outward deployment.
#[derive(Debug, Clone, PartialEq)]
pub struct PlacementState {
    order: DeploymentOrder,
    placed: usize,
    positions: Vec<Option<f64>>,
    accumulated: Vec<ComplexChannel>,
    /// Σ_i e^{−jθ_{m,i}} over placed PAs: the accumulated channel with every
    /// path loss replaced by the common `amplitude_scale`.
    unit_phasors: Vec<ComplexChannel>,
    amplitude_scale: Vec<f64>,
    left_frontier: f64,
    right_frontier: f64,
}

impl PlacementState {
    /// State with only the central PA placed at `center_x`.
    pub fn new(wg: &WaveguideParams, user: &UserArray, pa_count: usize, center_x: f64) -> Result<Self> {
        let order = deployment_order(pa_count)?;
        if !center_x.is_finite() {
            return Err(Error::arg("center_x", "must be finite"));
        }
        let d = user.vertical_distance();
        let mut positions = vec![None; pa_count];
        positions[order.center() - 1] = Some(center_x);
        Ok(Self {
            order,
            placed: 1,
            positions,
            accumulated: user
                .positions()
                .iter()
                .map(|&xm| coefficient_at(wg, xm, d, center_x))
                .collect(),
            unit_phasors: user
                .positions()
                .iter()
                .map(|&xm| Complex64::from_polar(1.0, -phase_delay_at(wg, xm, d, center_x)))
                .collect(),
            amplitude_scale: user
                .positions()
                .iter()
                .map(|&xm| (wg.eta() / ((xm - center_x).powi(2) + d * d)).sqrt())
                .collect(),
            left_frontier: center_x,
            right_frontier: center_x,
        })
    }

    pub fn pa_count(&self) -> usize {
        self.positions.len()
    }

    pub fn center(&self) -> usize {
        self.order.center()
    }

    pub fn order(&self) -> &DeploymentOrder {
        &self.order
    }

    /// Number of PAs placed so far.
    pub fn placed_count(&self) -> usize {
        self.placed
    }

    /// Next PA index in deployment order, if any remain.
    pub fn next_pa(&self) -> Option<usize> {
        self.order.as_slice().get(self.placed).copied()
    }

    pub fn position(&self, n: usize) -> Option<f64> {
        n.checked_sub(1).and_then(|i| self.positions.get(i)).copied().flatten()
    }

    /// Accumulated channel ĥ_m for every receive antenna.
    pub fn accumulated(&self) -> &[ComplexChannel] {
        &self.accumulated
    }

    /// Path-loss amplitude of each antenna as seen from the central PA.
    pub fn amplitude_scale(&self) -> &[f64] {
        &self.amplitude_scale
    }

    pub fn frontiers(&self) -> (f64, f64) {
        (self.left_frontier, self.right_frontier)
    }

    /// Accumulated channel under the common path-loss model,
    /// `l_m Σ_i e^{−jθ_{m,i}}`.
    pub fn modeled_channel(&self, m: usize) -> Result<ComplexChannel> {
        let sum = self.unit_phasors.get(m).ok_or(Error::AntennaIndex {
            index: m,
            len: self.unit_phasors.len(),
        })?;
        Ok(sum * self.amplitude_scale[m])
    }

    /// Normalized phase delay of the modeled accumulated channel at antenna
    /// `m`, in [0, 2π).
    pub fn normalized_phase(&self, m: usize) -> Result<f64> {
        Ok(wrap_phase(-self.modeled_channel(m)?.arg()))
    }

    /// Exact `Σ_m |ĥ_m|²`.
    pub fn gain(&self) -> f64 {
        channel_gain(&self.accumulated)
    }

    pub fn side_of(&self, n: usize) -> Result<Side> {
        let c = self.center();
        match n {
            0 => Err(Error::arg("n", "PA indices start at 1")),
            _ if n > self.pa_count() => Err(Error::arg("n", format!("PA {n} exceeds N = {}", self.pa_count()))),
            _ if n > c => Ok(Side::Right),
            _ if n < c => Ok(Side::Left),
            _ => Err(Error::State(format!("PA {n} is the central PA"))),
        }
    }

    /// Closest admissible position for PA `n`: half a wavelength outward of its
    /// already placed inward neighbor.
    pub fn reference_position(&self, n: usize, wg: &WaveguideParams) -> Result<f64> {
        let side = self.side_of(n)?;
        if self.position(n).is_some() {
            return Err(Error::State(format!("PA {n} is already placed")));
        }
        let neighbor = match side {
            Side::Right => n - 1,
            Side::Left => n + 1,
        };
        let x = self
            .position(neighbor)
            .ok_or_else(|| Error::State(format!("PA {n} needs neighbor {neighbor} placed first")))?;
        Ok(match side {
            Side::Right => x + wg.min_spacing(),
            Side::Left => x - wg.min_spacing(),
        })
    }

    fn expect_next(&self, n: usize) -> Result<()> {
        match self.next_pa() {
            Some(next) if next == n => Ok(()),
            Some(next) => Err(Error::State(format!("PA {next} is next in deployment order, not {n}"))),
            None => Err(Error::State("all PAs are already placed".into())),
        }
    }

    /// Place the next PA at `x` and fold its exact channel into the state.
    pub fn commit(&mut self, n: usize, x: f64, wg: &WaveguideParams, user: &UserArray) -> Result<()> {
        self.expect_next(n)?;
        let reference = self.reference_position(n, wg)?;
        let feasible = match self.side_of(n)? {
            Side::Right => x >= reference,
            Side::Left => x <= reference,
        };
        if !(x.is_finite() && feasible) {
            return Err(Error::State(format!(
                "PA {n} at {x} violates the spacing constraint (reference {reference})"
            )));
        }
        let d = user.vertical_distance();
        for ((acc, unit), &xm) in self.accumulated.iter_mut().zip(&mut self.unit_phasors).zip(user.positions()) {
            *acc += coefficient_at(wg, xm, d, x);
            *unit += Complex64::from_polar(1.0, -phase_delay_at(wg, xm, d, x));
        }
        match self.side_of(n)? {
            Side::Right => self.right_frontier = x,
            Side::Left => self.left_frontier = x,
        }
        self.positions[n - 1] = Some(x);
        self.placed += 1;
        Ok(())
    }

    fn into_positions(self) -> Result<Vec<f64>> {
        self.positions
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| Error::State(format!("PA {} was never placed", i + 1))))
            .collect()
    }
}

/// Place PA `n`: collect phase-aligned candidates for every receive antenna,
/// pick the tightest cluster and put the PA at its midpoint.
pub fn place_next(
    state: &mut PlacementState,
    n: usize,
    candidates_per_antenna: usize,
    wg: &WaveguideParams,
    user: &UserArray,
) -> Result<StepRecord> {
    state.expect_next(n)?;
    let reference_x = state.reference_position(n, wg)?;
    let sets = (0..user.len())
        .map(|m| candidate_positions(state, n, m, candidates_per_antenna, wg, user))
        .collect::<Result<Vec<_>>>()?;
    let selection = min_span_select(&sets)?;

    let mut position = selection.midpoint;
    let clamped = match state.side_of(n)? {
        Side::Right => position < reference_x,
        Side::Left => position > reference_x,
    };
    if clamped {
        position = reference_x;
    }
    state.commit(n, position, wg, user)?;
    Ok(StepRecord {
        step: state.placed_count(),
        pa: n,
        reference_x,
        candidate_sets: sets,
        selection: Some(selection),
        position,
        clamped,
        gain: state.gain(),
    })
}

fn finish(
    scheme: Scheme,
    scenario: &Scenario,
    state: PlacementState,
    initial_gain: f64,
    center_x: f64,
    steps: Vec<StepRecord>,
) -> Result<PlacementResult> {
    let gain = state.gain();
    let positions = state.into_positions()?;
    let snr = scenario.budget.transmit_snr() / scenario.pa_count as f64 * gain;
    Ok(PlacementResult {
        scheme,
        positions,
        center_x,
        initial_gain,
        steps,
        snr,
        rate: rate_from_snr(snr),
    })
}

/// Two-layer placement: optimized center, then sequential cluster-midpoint
/// deployment of the remaining PAs.
pub fn place_all(scenario: &Scenario, candidates_per_antenna: usize) -> Result<PlacementResult> {
    let center = optimize_center(&scenario.user, DEFAULT_CENTER_TOLERANCE)?;
    place_all_from_center(scenario, candidates_per_antenna, center.x_center)
}

/// Sequential deployment around a caller-supplied central PA position.
pub fn place_all_from_center(
    scenario: &Scenario,
    candidates_per_antenna: usize,
    center_x: f64,
) -> Result<PlacementResult> {
    let (wg, user) = (&scenario.waveguide, &scenario.user);
    let mut state = PlacementState::new(wg, user, scenario.pa_count, center_x)?;
    let initial_gain = state.gain();
    let mut steps = Vec::with_capacity(scenario.pa_count - 1);
    while let Some(n) = state.next_pa() {
        steps.push(place_next(&mut state, n, candidates_per_antenna, wg, user)?);
    }
    finish(Scheme::Proposed, scenario, state, initial_gain, center_x, steps)
}

/// Single-antenna scheme applied to a virtual receive antenna at the array
/// center: every PA is put one full phase cycle past its inward neighbor.
pub fn benchmark_place(scenario: &Scenario) -> Result<PlacementResult> {
    let (wg, user) = (&scenario.waveguide, &scenario.user);
    let d = user.vertical_distance();
    let virtual_x = user.midpoint();
    let mut state = PlacementState::new(wg, user, scenario.pa_count, virtual_x)?;
    let initial_gain = state.gain();
    let mut steps = Vec::with_capacity(scenario.pa_count - 1);

    while let Some(n) = state.next_pa() {
        let side = state.side_of(n)?;
        let reference_x = state.reference_position(n, wg)?;
        let neighbor_x = match side {
            Side::Right => state.position(n - 1),
            Side::Left => state.position(n + 1),
        }
        .expect("reference_position checked the neighbor");
        let reference_phase = phase_delay_at(wg, virtual_x, d, reference_x);
        let slope = linearized_slope(wg, virtual_x, d, reference_x);
        if !(slope > 0.0) {
            return Err(Error::ModelViolation {
                pa: n,
                antenna: 0,
                x: reference_x,
                slope,
            });
        }
        let target = wrap_phase(phase_delay_at(wg, virtual_x, d, neighbor_x));
        let candidates = aligned_candidates(side, reference_x, reference_phase, slope, target, 1);
        let position = candidates[0].x;
        state.commit(n, position, wg, user)?;
        steps.push(StepRecord {
            step: state.placed_count(),
            pa: n,
            reference_x,
            candidate_sets: vec![CandidateSet {
                antenna: 0,
                side,
                reference_x,
                reference_phase,
                phase_slope: slope,
                candidates,
            }],
            selection: None,
            position,
            clamped: false,
            gain: state.gain(),
        });
    }
    finish(Scheme::Benchmark, scenario, state, initial_gain, virtual_x, steps)
}

/// Greedy reference: same center and order as [`place_all`], but each PA goes
/// to the grid maximizer of the exact step gain within
/// [`ORACLE_SEARCH_WAVELENGTHS`] guided wavelengths of its reference position.
pub fn oracle_greedy_place(scenario: &Scenario, grid_step: f64) -> Result<PlacementResult> {
    if !(grid_step.is_finite() && grid_step > 0.0) {
        return Err(Error::arg("grid_step", format!("must be positive, got {grid_step}")));
    }
    let (wg, user) = (&scenario.waveguide, &scenario.user);
    let center_x = optimize_center(user, DEFAULT_CENTER_TOLERANCE)?.x_center;
    let mut state = PlacementState::new(wg, user, scenario.pa_count, center_x)?;
    let initial_gain = state.gain();
    let reach = ORACLE_SEARCH_WAVELENGTHS * wg.guided_wavelength();
    let mut steps = Vec::with_capacity(scenario.pa_count - 1);

    while let Some(n) = state.next_pa() {
        let reference_x = state.reference_position(n, wg)?;
        let grid = match state.side_of(n)? {
            Side::Right => GridSpec::new(reference_x, reference_x + reach, grid_step)?,
            Side::Left => GridSpec::new(reference_x - reach, reference_x, grid_step)?,
        };
        let (position, _) = grid_argmax_gain(&state, n, grid, wg, user)?;
        state.commit(n, position, wg, user)?;
        steps.push(StepRecord {
            step: state.placed_count(),
            pa: n,
            reference_x,
            candidate_sets: Vec::new(),
            selection: None,
            position,
            clamped: false,
            gain: state.gain(),
        });
    }
    finish(Scheme::OracleGreedy, scenario, state, initial_gain, center_x, steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{aggregate_channel, LinkBudget};

    fn scenario(positions: &[f64], d: f64, n: usize) -> Scenario {
        Scenario::new(
            WaveguideParams::default(),
            UserArray::new(positions.to_vec(), d).unwrap(),
            n,
            LinkBudget::from_dbm(30.0, -90.0).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn reference_positions_follow_frontier() {
        let wg = WaveguideParams::default();
        let user = UserArray::new(vec![9.9, 10.1], 4.0).unwrap();
        let mut st = PlacementState::new(&wg, &user, 8, 10.0).unwrap();
        let half = wg.min_spacing();
        assert_eq!(st.reference_position(5, &wg).unwrap(), 10.0 + half);
        assert_eq!(st.reference_position(3, &wg).unwrap(), 10.0 - half);
        assert!(matches!(st.reference_position(6, &wg), Err(Error::State(_))));
        assert!(matches!(st.reference_position(4, &wg), Err(Error::State(_))));
        st.commit(5, 10.043, &wg, &user).unwrap();
        assert_eq!(st.reference_position(6, &wg).unwrap(), 10.043 + half);
        assert_eq!(st.frontiers(), (10.0, 10.043));
    }

    #[test]
    fn commit_rejects_out_of_order_and_too_close() {
        let wg = WaveguideParams::default();
        let user = UserArray::new(vec![10.0], 4.0).unwrap();
        let mut st = PlacementState::new(&wg, &user, 4, 10.0).unwrap();
        assert!(st.commit(4, 10.02, &wg, &user).is_err());
        assert!(st.commit(3, 10.001, &wg, &user).is_err());
        st.commit(3, 10.01, &wg, &user).unwrap();
    }

    #[test]
    fn normalized_phase_in_range() {
        let wg = WaveguideParams::default();
        let user = UserArray::new(vec![9.9, 10.1], 4.0).unwrap();
        let st = PlacementState::new(&wg, &user, 8, 10.0).unwrap();
        for m in 0..2 {
            let p = st.normalized_phase(m).unwrap();
            assert!((0.0..std::f64::consts::TAU).contains(&p));
            let h = st.accumulated()[m];
            let back = Complex64::from_polar(h.norm(), -p);
            assert!((back - h).norm() < 1e-12 * h.norm());
            // with one PA the modeled channel is exact
            assert!((st.modeled_channel(m).unwrap() - h).norm() < 1e-12 * h.norm());
        }
        assert!(st.normalized_phase(2).is_err());
    }

    #[test]
    fn single_pa() {
        let s = scenario(&[7.5], 3.0, 1);
        let r = place_all(&s, 4).unwrap();
        assert_eq!(r.positions, vec![7.5]);
        assert!(r.steps.is_empty());
        let want = s.budget.transmit_snr() * s.waveguide.eta() / 9.0;
        assert!(((r.snr - want) / want).abs() < 1e-12);
    }

    #[test]
    fn two_pas_single_antenna_add_coherently() {
        let s = scenario(&[7.5], 3.0, 2);
        let r = place_all(&s, 4).unwrap();
        let h1 = aggregate_channel(&s.waveguide, &s.user, &r.positions[..1]).unwrap()[0].norm();
        let h2 = aggregate_channel(&s.waveguide, &s.user, &r.positions).unwrap()[0].norm();
        assert!((h2 / h1 - 2.0).abs() < 0.02, "ratio {}", h2 / h1);
    }

    #[test]
    fn single_antenna_uses_nearest_candidate() {
        let s = scenario(&[10.0], 4.0, 8);
        let r = place_all(&s, 4).unwrap();
        for step in &r.steps {
            let sel = step.selection.as_ref().unwrap();
            assert_eq!(sel.span, 0.0);
            assert_eq!(step.position, step.candidate_sets[0].nearest().x);
        }
    }

    #[test]
    fn gains_recomputable_from_positions() {
        let s = scenario(&[9.8, 10.0, 10.25], 3.0, 9);
        let r = place_all(&s, 4).unwrap();
        let order = deployment_order(9).unwrap();
        let gains = r.gains();
        for (k, g) in gains.iter().enumerate() {
            let placed: Vec<f64> = order.as_slice()[..=k].iter().map(|&n| r.positions[n - 1]).collect();
            let h = aggregate_channel(&s.waveguide, &s.user, &placed).unwrap();
            assert!(((channel_gain(&h) - g) / g).abs() < 1e-12);
        }
    }

    #[test]
    fn single_antenna_gain_increases_every_step() {
        let s = scenario(&[10.0], 4.0, 16);
        let g = place_all(&s, 4).unwrap().gains();
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn benchmark_matches_proposed_for_single_antenna() {
        let s = scenario(&[10.0], 4.0, 16);
        let a = place_all(&s, 4).unwrap();
        let b = benchmark_place(&s).unwrap();
        let tol = s.waveguide.wavelength() / 100.0;
        for (x, y) in a.positions.iter().zip(&b.positions) {
            assert!((x - y).abs() < tol);
        }
    }

    #[test]
    fn benchmark_spacing_is_one_phase_period() {
        let s = scenario(&[9.9, 10.1], 4.0, 8);
        let b = benchmark_place(&s).unwrap();
        for step in &b.steps {
            let set = &step.candidate_sets[0];
            let nb = match set.side {
                Side::Right => b.positions[step.pa - 2],
                Side::Left => b.positions[step.pa],
            };
            let period = std::f64::consts::TAU / set.phase_slope;
            assert!(((step.position - nb).abs() - period).abs() < 0.01 * period);
        }
    }

    #[test]
    fn oracle_greedy_rejects_bad_step() {
        let s = scenario(&[10.0], 4.0, 4);
        assert!(oracle_greedy_place(&s, 0.0).is_err());
    }

    #[test]
    fn coincident_antennas_reduce_to_single() {
        let one = place_all(&scenario(&[10.0], 4.0, 8), 4).unwrap();
        let two = place_all(&scenario(&[10.0, 10.0], 4.0, 8), 4).unwrap();
        assert_eq!(one.positions, two.positions);
    }

    #[test]
    fn lateral_user_raises_model_violation() {
        // PAs far to the left of a close user: linearized slope turns negative
        let s = scenario(&[10.0], 0.05, 64);
        let err = place_all_from_center(&s, 4, 10.0);
        assert!(matches!(err, Err(Error::ModelViolation { .. })), "{err:?}");
    }
}
