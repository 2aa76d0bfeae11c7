//! Placement of the central PA by maximizing the aggregated inverse path loss
//! `L(x) = Σ_m 1 / ((x − x̃_m)² + d²)` over the user aperture.

use crate::channel::UserArray;
use crate::error::{Error, Result};

pub const DEFAULT_CENTER_TOLERANCE: f64 = 1e-7;

/// Mirror-test slack for the closed-form symmetric case.
pub const SYMMETRY_SLACK: f64 = 1e-12;

const MIN_GRID_STEP: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CenterMethod {
    SymmetricClosedForm,
    TernarySearch,
    GridRefined,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterSolution {
    pub x_center: f64,
    /// `L(x_center)` in 1/m².
    pub value: f64,
    pub method: CenterMethod,
    /// True when `L` is provably strictly concave on the user aperture.
    pub concavity_certified: bool,
}

pub fn inverse_path_loss(user: &UserArray, x: f64) -> f64 {
    let d2 = user.vertical_distance().powi(2);
    user.positions().iter().map(|&xm| 1.0 / ((x - xm).powi(2) + d2)).sum()
}

pub fn inverse_path_loss_derivative(user: &UserArray, x: f64) -> f64 {
    let d2 = user.vertical_distance().powi(2);
    user.positions()
        .iter()
        .map(|&xm| 2.0 * (xm - x) / ((x - xm).powi(2) + d2).powi(2))
        .sum()
}

pub fn inverse_path_loss_second_derivative(user: &UserArray, x: f64) -> f64 {
    let d2 = user.vertical_distance().powi(2);
    user.positions()
        .iter()
        .map(|&xm| {
            let u2 = (x - xm).powi(2);
            (6.0 * u2 - 2.0 * d2) / (u2 + d2).powi(3)
        })
        .sum()
}

/// `L(b) − L(a)` without cancelling two nearly equal sums.
fn inverse_path_loss_increment(user: &UserArray, a: f64, b: f64) -> f64 {
    let d2 = user.vertical_distance().powi(2);
    user.positions()
        .iter()
        .map(|&xm| {
            let (ua, ub) = (a - xm, b - xm);
            (a - b) * (ua + ub) / ((ua * ua + d2) * (ub * ub + d2))
        })
        .sum()
}

/// Whether the array is mirror-symmetric about its geometric center.
pub fn is_symmetric(user: &UserArray) -> bool {
    let p = user.positions();
    let twice_center = p[0] + p[p.len() - 1];
    p.iter()
        .zip(p.iter().rev())
        .all(|(a, b)| (a + b - twice_center).abs() <= SYMMETRY_SLACK)
}

/// Ternary search for the maximizer of `L` on `[lo, hi]`.
fn ternary_max(user: &UserArray, mut lo: f64, mut hi: f64, tolerance: f64) -> f64 {
    for _ in 0..400 {
        if hi - lo <= tolerance {
            break;
        }
        let third = (hi - lo) / 3.0;
        let (m1, m2) = (lo + third, hi - third);
        if inverse_path_loss_increment(user, m1, m2) > 0.0 {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    0.5 * (lo + hi)
}

/// Optimize the x-coordinate of the central PA.
///
/// Symmetric arrays take the geometric center directly. When the aperture is
/// narrower than `d/√3` the objective is strictly concave on it and a plain
/// ternary search suffices; wider apertures get a coarse grid scan
/// (step `100·tolerance`, at least 0.1 mm) refined by ternary search in the
/// best cell.
pub fn optimize_center(user: &UserArray, tolerance: f64) -> Result<CenterSolution> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::arg("tolerance", format!("must be positive, got {tolerance}")));
    }
    let (lo, hi) = (user.first(), user.last());

    if is_symmetric(user) {
        let x = user.midpoint();
        return Ok(CenterSolution {
            x_center: x,
            value: inverse_path_loss(user, x),
            method: CenterMethod::SymmetricClosedForm,
            concavity_certified: user.span() < user.vertical_distance() / 3f64.sqrt(),
        });
    }

    if user.span() < user.vertical_distance() / 3f64.sqrt() {
        let x = ternary_max(user, lo, hi, tolerance).clamp(lo, hi);
        return Ok(CenterSolution {
            x_center: x,
            value: inverse_path_loss(user, x),
            method: CenterMethod::TernarySearch,
            concavity_certified: true,
        });
    }

    let step = (tolerance * 100.0).max(MIN_GRID_STEP);
    let cells = ((hi - lo) / step).ceil() as usize;
    let point = |i: usize| if i >= cells { hi } else { lo + step * i as f64 };
    let (best, _) = (0..=cells)
        .map(|i| (i, inverse_path_loss(user, point(i))))
        .fold((0, f64::NEG_INFINITY), |acc, (i, v)| if v > acc.1 { (i, v) } else { acc });

    let (cell_lo, cell_hi) = (point(best.saturating_sub(1)), point((best + 1).min(cells)));
    let refined = ternary_max(user, cell_lo, cell_hi, tolerance).clamp(lo, hi);
    let x = if inverse_path_loss_increment(user, point(best), refined) >= 0.0 {
        refined
    } else {
        point(best)
    };
    Ok(CenterSolution {
        x_center: x,
        value: inverse_path_loss(user, x),
        method: CenterMethod::GridRefined,
        concavity_certified: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{dense_argmax, finite_difference, second_difference, GridSpec};

    fn user(p: &[f64], d: f64) -> UserArray {
        UserArray::new(p.to_vec(), d).unwrap()
    }

    #[test]
    fn objective_closed_forms() {
        let u = user(&[2.5], 1.5);
        assert!((inverse_path_loss(&u, 2.5) - 1.0 / 2.25).abs() < 1e-15);
        let u = user(&[-0.3, 0.3], 2.0);
        assert!((inverse_path_loss(&u, 0.0) - 2.0 / (0.09 + 4.0)).abs() < 1e-15);

        let u = user(&[0.1, 0.7, 1.9], 0.8);
        let x = 0.55;
        let direct: f64 = [0.1, 0.7, 1.9].iter().map(|m| 1.0 / ((x - m) * (x - m) + 0.64)).sum();
        assert_eq!(inverse_path_loss(&u, x), direct);
    }

    #[test]
    fn derivative_stationary_points() {
        assert_eq!(inverse_path_loss_derivative(&user(&[4.0], 2.0), 4.0), 0.0);
        assert!(inverse_path_loss_derivative(&user(&[9.7, 10.3], 4.0), 10.0).abs() < 1e-15);
        let d = 1.3;
        let v = inverse_path_loss_second_derivative(&user(&[4.0], d), 4.0);
        assert!((v + 2.0 / d.powi(4)).abs() < 1e-15);
    }

    #[test]
    fn second_derivative_negative_near_all_antennas() {
        let d = 3.0;
        let u = user(&[0.0, 0.4, 0.9], d);
        let reach = d / 3f64.sqrt();
        // every point within d/√3 of all antennas
        for i in 0..=100 {
            let x = 0.9 - reach + (reach * 2.0 - 0.9) * i as f64 / 100.0;
            if u.positions().iter().all(|m| (x - m).abs() < reach) {
                assert!(inverse_path_loss_second_derivative(&u, x) < 0.0, "x = {x}");
            }
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let u = user(&[1.0, 1.3, 2.2], 1.7);
        for x in [-0.4, 0.9, 1.25, 1.8, 3.5] {
            let fd = finite_difference(|t| inverse_path_loss(&u, t), x, 1e-6);
            let an = inverse_path_loss_derivative(&u, x);
            assert!(((fd - an) / an).abs() < 1e-5, "x={x}: {fd} vs {an}");
            let fd2 = second_difference(|t| inverse_path_loss(&u, t), x, 1e-3);
            let an2 = inverse_path_loss_second_derivative(&u, x);
            assert!(((fd2 - an2) / an2).abs() < 1e-4, "x={x}: {fd2} vs {an2}");
        }
    }

    #[test]
    fn symmetric_pair_hits_closed_form() {
        let s = optimize_center(&user(&[9.7, 10.3], 4.0), DEFAULT_CENTER_TOLERANCE).unwrap();
        assert_eq!(s.x_center, 10.0);
        assert_eq!(s.method, CenterMethod::SymmetricClosedForm);
        assert!(s.concavity_certified);
    }

    #[test]
    fn single_antenna() {
        let s = optimize_center(&user(&[5.0], 2.0), DEFAULT_CENTER_TOLERANCE).unwrap();
        assert_eq!(s.x_center, 5.0);
        assert_eq!(s.value, 0.25);
    }

    #[test]
    fn asymmetric_matches_dense_grid() {
        let u = user(&[0.0, 0.1, 0.5], 4.0);
        let s = optimize_center(&u, DEFAULT_CENTER_TOLERANCE).unwrap();
        assert_eq!(s.method, CenterMethod::TernarySearch);
        let (x_grid, _) = dense_argmax(|x| inverse_path_loss(&u, x), 0.0, 0.5, 1e-6).unwrap();
        assert!((s.x_center - x_grid).abs() <= 1e-6, "{} vs {}", s.x_center, x_grid);
    }

    #[test]
    fn wide_aperture_uses_grid_and_stays_inside() {
        let u = user(&[0.0, 0.2, 5.0], 1.0);
        let s = optimize_center(&u, DEFAULT_CENTER_TOLERANCE).unwrap();
        assert_eq!(s.method, CenterMethod::GridRefined);
        assert!(!s.concavity_certified);
        assert!((0.0..=5.0).contains(&s.x_center));
        let grid = GridSpec::new(0.0, 5.0, 1e-5).unwrap();
        let (_, best) = grid.argmax(|x| inverse_path_loss(&u, x));
        assert!(s.value >= best - 1e-12);
    }

    #[test]
    fn idempotent_on_own_interval() {
        let u = user(&[0.0, 0.1, 0.5], 4.0);
        let s = optimize_center(&u, 1e-8).unwrap();
        let again = ternary_max(&u, u.first(), u.last(), 1e-8);
        assert!((s.x_center - again).abs() <= 1e-8);
    }

    #[test]
    fn rejects_nonpositive_tolerance() {
        assert!(optimize_center(&user(&[0.0], 1.0), 0.0).is_err());
        assert!(optimize_center(&user(&[0.0], 1.0), -1.0).is_err());
    }
}
