//! Phase-aligned candidate positions for the next PA under a first-order
//! model of the channel phase around the reference position.

use std::f64::consts::TAU;

use super::{PlacementState, Side};
use crate::channel::{phase_delay_at, wrap_phase, UserArray, WaveguideParams};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate {
    /// Integer phase-cycle index of the alignment condition.
    pub z: i64,
    pub x: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSet {
    pub antenna: usize,
    pub side: Side,
    pub reference_x: f64,
    /// Exact phase at `reference_x`.
    pub reference_phase: f64,
    /// Linearized phase slope at `reference_x`, rad/m.
    pub phase_slope: f64,
    /// Sorted by ascending `x`.
    pub candidates: Vec<Candidate>,
}

impl CandidateSet {
    pub fn positions(&self) -> Vec<f64> {
        self.candidates.iter().map(|c| c.x).collect()
    }

    /// Candidate closest to the reference position.
    pub fn nearest(&self) -> Candidate {
        match self.side {
            Side::Right => self.candidates[0],
            Side::Left => self.candidates[self.candidates.len() - 1],
        }
    }

    /// Phase predicted by the linear model at `x`.
    pub fn linear_phase(&self, x: f64) -> f64 {
        self.reference_phase + self.phase_slope * (x - self.reference_x)
    }
}

/// Phase slope at `x` with the lateral offset measured against `d` rather
/// than the true distance, valid while the offset is small compared to `d`.
pub fn linearized_slope(wg: &WaveguideParams, xm: f64, d: f64, x: f64) -> f64 {
    TAU / wg.wavelength() * (x - xm) / d + TAU / wg.guided_wavelength()
}

/// The `count` positions nearest to `reference_x` (on the given side) whose
/// linearized phase is congruent to `target` modulo 2π.
pub fn aligned_candidates(
    side: Side,
    reference_x: f64,
    reference_phase: f64,
    slope: f64,
    target: f64,
    count: usize,
) -> Vec<Candidate> {
    let period = TAU / slope;
    match side {
        Side::Right => {
            let residual = wrap_phase(target - reference_phase);
            let z0 = ((reference_phase - target + residual) / TAU).round() as i64;
            (0..count)
                .map(|j| Candidate {
                    z: z0 + j as i64,
                    x: reference_x + residual / slope + period * j as f64,
                })
                .collect()
        }
        Side::Left => {
            let residual = wrap_phase(reference_phase - target);
            let z0 = ((reference_phase - target - residual) / TAU).round() as i64;
            (0..count)
                .rev()
                .map(|j| Candidate {
                    z: z0 - j as i64,
                    x: reference_x - residual / slope - period * j as f64,
                })
                .collect()
        }
    }
}

/// Candidate positions of PA `n` for receive antenna `m`, aligned with the
/// normalized phase of that antenna's accumulated channel.
pub fn candidate_positions(
    state: &PlacementState,
    n: usize,
    m: usize,
    count: usize,
    wg: &WaveguideParams,
    user: &UserArray,
) -> Result<CandidateSet> {
    if count == 0 {
        return Err(Error::arg("candidates_per_antenna", "must be at least 1"));
    }
    let side = state.side_of(n)?;
    let reference_x = state.reference_position(n, wg)?;
    let xm = user.position(m)?;
    let d = user.vertical_distance();
    let reference_phase = phase_delay_at(wg, xm, d, reference_x);
    let phase_slope = linearized_slope(wg, xm, d, reference_x);
    if !(phase_slope > 0.0) {
        return Err(Error::ModelViolation {
            pa: n,
            antenna: m,
            x: reference_x,
            slope: phase_slope,
        });
    }
    let target = state.normalized_phase(m)?;
    Ok(CandidateSet {
        antenna: m,
        side,
        reference_x,
        reference_phase,
        phase_slope,
        candidates: aligned_candidates(side, reference_x, reference_phase, phase_slope, target, count),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zero_residual_right() {
        let slope = 400.0 * PI;
        let c = aligned_candidates(Side::Right, 2.0, 10.0 * TAU + 1.0, slope, 1.0, 2);
        assert!((c[0].x - 2.0).abs() < 1e-12);
        assert!((c[1].x - 2.005).abs() < 1e-12);
        assert_eq!(c[1].z - c[0].z, 1);
    }

    #[test]
    fn half_cycle_residual() {
        let c = aligned_candidates(Side::Right, 2.0, 10.0 * TAU, 400.0 * PI, PI, 3);
        assert!((c[0].x - 2.0025).abs() < 1e-12);
        // exact condition: target + 2zπ − θ_s = residual
        assert!((PI + TAU * c[0].z as f64 - 10.0 * TAU - PI).abs() < 1e-9);
    }

    #[test]
    fn left_branch_sorted_and_below_reference() {
        let slope = 800.0;
        let c = aligned_candidates(Side::Left, 5.0, 123.4, slope, 0.7, 4);
        assert!(c.windows(2).all(|w| w[0].x < w[1].x));
        assert!(c.iter().all(|k| k.x <= 5.0));
        for w in c.windows(2) {
            assert!(((w[1].x - w[0].x) - TAU / slope).abs() < 1e-9 * TAU / slope);
            assert_eq!(w[1].z - w[0].z, 1);
        }
        for k in &c {
            let phase = 123.4 + slope * (k.x - 5.0);
            let off = wrap_phase(phase - 0.7);
            assert!(off < 1e-9 || TAU - off < 1e-9);
        }
    }

    #[test]
    fn spacing_is_one_linear_period() {
        let slope = 777.0;
        let c = aligned_candidates(Side::Right, 1.0, 3.0, slope, 5.5, 6);
        for w in c.windows(2) {
            let gap = w[1].x - w[0].x;
            assert!(((gap - TAU / slope) / (TAU / slope)).abs() < 1e-9);
        }
    }
}
