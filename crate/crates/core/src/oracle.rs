//! Brute-force reference computations used to check the fast paths:
//! dense grid search, exhaustive span enumeration and finite differences.
//!
//! Nothing here shares code with the routines it verifies beyond the exact
//! channel model in [`crate::channel`].

use crate::channel::{coefficient_at, UserArray, WaveguideParams};
use crate::error::{Error, Result};
use crate::placement::{PlacementState, Side, SpanSelection};

/// Upper bound on grid points for a single scan.
pub const MAX_GRID_POINTS: f64 = 1e7;

/// Upper bound on combinations for [`exhaustive_min_span`].
pub const MAX_COMBINATIONS: usize = 1_000_000;

/// Uniform grid `lo, lo + step, …` up to and including `hi` (within rounding).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::arg("grid", format!("need lo < hi, got [{lo}, {hi}]")));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::arg("step", format!("must be positive, got {step}")));
        }
        if (hi - lo) / step > MAX_GRID_POINTS {
            return Err(Error::arg("step", format!("grid over [{lo}, {hi}] with step {step} is too dense")));
        }
        Ok(Self { lo, hi, step })
    }

    pub fn len(&self) -> usize {
        ((self.hi - self.lo) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn point(&self, i: usize) -> f64 {
        self.lo + self.step * i as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|i| self.point(i))
    }

    /// Maximizer over the grid; the first point wins ties.
    pub fn argmax(&self, mut f: impl FnMut(f64) -> f64) -> (f64, f64) {
        let mut best = (self.lo, f64::NEG_INFINITY);
        for x in self.points() {
            let v = f(x);
            if v > best.1 {
                best = (x, v);
            }
        }
        best
    }
}

/// Zooming grid search for the maximizer of a unimodal `f` on `[lo, hi]`,
/// refined until the grid step is at most `resolution`.
pub fn dense_argmax(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, resolution: f64) -> Result<(f64, f64)> {
    const CELLS: f64 = 1000.0;
    let mut grid = GridSpec::new(lo, hi, ((hi - lo) / CELLS).max(resolution))?;
    loop {
        let (x, v) = grid.argmax(&mut f);
        if grid.step <= resolution {
            return Ok((x, v));
        }
        let a = (x - grid.step).max(lo);
        let b = (x + grid.step).min(hi);
        grid = GridSpec::new(a, b, ((b - a) / CELLS).max(resolution))?;
    }
}

/// Centered difference `(f(x + h) − f(x − h)) / 2h`.
pub fn finite_difference(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Second-order central difference `(f(x + h) − 2 f(x) + f(x − h)) / h²`.
pub fn second_difference(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
}

/// Exact gain `Σ_m |ĥ_m + h_m(x)|²` of adding one PA at `x` to `state`.
pub fn gain_with_pa(state: &PlacementState, wg: &WaveguideParams, user: &UserArray, x: f64) -> f64 {
    let d = user.vertical_distance();
    state
        .accumulated()
        .iter()
        .zip(user.positions())
        .map(|(acc, &xm)| (acc + coefficient_at(wg, xm, d, x)).norm_sqr())
        .sum()
}

/// Grid search for the PA position maximizing the exact step gain.
///
/// The grid has to lie on the feasible side of the reference position for
/// PA `n`.
pub fn grid_argmax_gain(
    state: &PlacementState,
    n: usize,
    grid: GridSpec,
    wg: &WaveguideParams,
    user: &UserArray,
) -> Result<(f64, f64)> {
    let reference = state.reference_position(n, wg)?;
    let feasible = match state.side_of(n)? {
        Side::Right => grid.lo >= reference - 1e-12,
        Side::Left => grid.hi <= reference + 1e-12,
    };
    if !feasible {
        return Err(Error::arg(
            "grid",
            format!("[{}, {}] leaves the feasible region of PA {n} (reference {reference})", grid.lo, grid.hi),
        ));
    }
    Ok(grid.argmax(|x| gain_with_pa(state, wg, user, x)))
}

/// Minimal-span selection by enumerating every way to pick one value per set.
///
/// Ties go to the lexicographically smallest tuple of picks.
pub fn exhaustive_min_span(sets: &[Vec<f64>]) -> Result<SpanSelection> {
    if sets.is_empty() || sets.iter().any(|s| s.is_empty()) {
        return Err(Error::arg("candidate_sets", "every set must be non-empty"));
    }
    let combos = sets
        .iter()
        .try_fold(1usize, |acc, s| acc.checked_mul(s.len()).filter(|&c| c <= MAX_COMBINATIONS));
    if combos.is_none() {
        return Err(Error::arg("candidate_sets", "too many combinations to enumerate"));
    }

    let mut idx = vec![0usize; sets.len()];
    let mut best: Option<(f64, Vec<f64>)> = None;
    loop {
        let pick: Vec<f64> = idx.iter().zip(sets).map(|(&i, s)| s[i]).collect();
        let lo = pick.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = pick.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let span = hi - lo;
        let better = match &best {
            None => true,
            Some((b, bp)) => span < *b || (span == *b && lex_less(&pick, bp)),
        };
        if better {
            best = Some((span, pick));
        }

        // odometer increment
        let mut k = sets.len();
        loop {
            if k == 0 {
                let (span, chosen) = best.expect("at least one combination");
                return Ok(SpanSelection::from_chosen(chosen, span));
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < sets[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn lex_less(a: &[f64], b: &[f64]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return true;
        }
        if x > y {
            return false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_guards() {
        assert!(GridSpec::new(1.0, 1.0, 0.1).is_err());
        assert!(GridSpec::new(0.0, 1.0, 0.0).is_err());
        assert!(GridSpec::new(0.0, 1.0, 1e-8).is_err());
        let g = GridSpec::new(0.0, 1.0, 0.25).unwrap();
        assert_eq!(g.points().collect::<Vec<_>>(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }

    #[test]
    fn constant_function_returns_lo() {
        let g = GridSpec::new(-2.0, 3.0, 0.01).unwrap();
        assert_eq!(g.argmax(|_| 7.0), (-2.0, 7.0));
    }

    #[test]
    fn dense_argmax_on_parabola() {
        let (x, _) = dense_argmax(|x| -(x - 0.123_456_7).powi(2), -3.0, 5.0, 1e-8).unwrap();
        assert!((x - 0.123_456_7).abs() <= 1e-8);
    }

    #[test]
    fn finite_differences_of_polynomials() {
        assert!((finite_difference(|x| 3.5 * x - 2.0, 1.7, 1e-3) - 3.5).abs() < 1e-12);
        assert!((second_difference(|x| x * x, 0.3, 1e-3) - 2.0).abs() < 1e-6);
    }

    #[test]
    fn exhaustive_examples() {
        let s = exhaustive_min_span(&[vec![2.5]]).unwrap();
        assert_eq!(s.span, 0.0);

        let s = exhaustive_min_span(&[vec![1.0, 10.0], vec![2.0, 11.0]]).unwrap();
        assert_eq!(s.span, 1.0);
        assert_eq!(s.chosen, vec![1.0, 2.0]);

        let shared = vec![0.2, 0.4, 0.9];
        let s = exhaustive_min_span(&[shared.clone(), shared.clone(), shared]).unwrap();
        assert_eq!(s.span, 0.0);
        assert_eq!(s.midpoint, 0.2);

        let s = exhaustive_min_span(&[vec![0.0, 6.0], vec![3.0], vec![2.0, 7.0]]).unwrap();
        assert_eq!(s.span, 3.0);
        assert_eq!(s.chosen, vec![0.0, 3.0, 2.0]);
        assert_eq!(s.midpoint, 1.5);

        assert!(exhaustive_min_span(&[vec![1.0], vec![]]).is_err());
    }
}
