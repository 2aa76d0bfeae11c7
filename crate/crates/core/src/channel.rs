//! Line-of-sight channel between a waveguide-fed pinching antenna and the
//! receive antennas of a single user.
//!
//! Geometry is two-dimensional: pinching antennas (PAs) sit on the x-axis at
//! `(x_n, 0)`, receive antenna `m` sits at `(x̃_m, d)`. All lengths are meters.
//! Antenna indices are zero-based throughout the crate API.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

pub const DEFAULT_CARRIER_FREQUENCY: f64 = 28e9;
pub const DEFAULT_EFFECTIVE_REFRACTIVE_INDEX: f64 = 1.4;
pub const DEFAULT_NOISE_POWER_DBM: f64 = -90.0;

/// Complex baseband gain of one PA-to-antenna link (or a sum of such links).
pub type ComplexChannel = Complex64;

/// Physical constants of the waveguide and carrier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveguideParams {
    carrier_frequency: f64,
    effective_refractive_index: f64,
    feed_x: f64,
    wavelength: f64,
    guided_wavelength: f64,
    eta: f64,
}

impl WaveguideParams {
    pub fn new(carrier_frequency: f64, effective_refractive_index: f64, feed_x: f64) -> Result<Self> {
        if !(carrier_frequency.is_finite() && carrier_frequency > 0.0) {
            return Err(Error::arg("carrier_frequency", format!("must be positive, got {carrier_frequency}")));
        }
        if !(effective_refractive_index.is_finite() && effective_refractive_index >= 1.0) {
            return Err(Error::arg(
                "effective_refractive_index",
                format!("must be >= 1, got {effective_refractive_index}"),
            ));
        }
        if !feed_x.is_finite() {
            return Err(Error::arg("feed_x", "must be finite"));
        }
        let wavelength = SPEED_OF_LIGHT / carrier_frequency;
        Ok(Self {
            carrier_frequency,
            effective_refractive_index,
            feed_x,
            wavelength,
            guided_wavelength: wavelength / effective_refractive_index,
            eta: SPEED_OF_LIGHT * SPEED_OF_LIGHT / (16.0 * PI * PI * carrier_frequency * carrier_frequency),
        })
    }

    pub fn carrier_frequency(&self) -> f64 {
        self.carrier_frequency
    }

    pub fn effective_refractive_index(&self) -> f64 {
        self.effective_refractive_index
    }

    pub fn feed_x(&self) -> f64 {
        self.feed_x
    }

    /// Free-space wavelength λ.
    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    /// In-guide wavelength λ / n_eff.
    pub fn guided_wavelength(&self) -> f64 {
        self.guided_wavelength
    }

    /// Free-space path-gain constant c² / (16 π² f_c²).
    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Minimum spacing between adjacent PAs.
    pub fn min_spacing(&self) -> f64 {
        0.5 * self.wavelength
    }

    /// Copy with the feed point moved to `feed_x`.
    pub fn with_feed_x(&self, feed_x: f64) -> Result<Self> {
        Self::new(self.carrier_frequency, self.effective_refractive_index, feed_x)
    }
}

impl Default for WaveguideParams {
    fn default() -> Self {
        Self::new(DEFAULT_CARRIER_FREQUENCY, DEFAULT_EFFECTIVE_REFRACTIVE_INDEX, 0.0)
            .expect("default waveguide parameters are valid")
    }
}

/// Receive antennas of the user, ordered along x, at height `d` above the waveguide.
#[derive(Debug, Clone, PartialEq)]
pub struct UserArray {
    positions: Vec<f64>,
    vertical_distance: f64,
}

impl UserArray {
    /// Positions must be sorted ascending. Coincident antennas are accepted.
    pub fn new(positions: Vec<f64>, vertical_distance: f64) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::arg("positions", "user needs at least one antenna"));
        }
        if positions.iter().any(|x| !x.is_finite()) {
            return Err(Error::arg("positions", "must be finite"));
        }
        if positions.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::arg("positions", "must be sorted ascending"));
        }
        if !(vertical_distance.is_finite() && vertical_distance > 0.0) {
            return Err(Error::arg("vertical_distance", format!("must be positive, got {vertical_distance}")));
        }
        Ok(Self {
            positions,
            vertical_distance,
        })
    }

    /// `count` antennas spread evenly over `[lo, hi]`.
    pub fn uniform(lo: f64, hi: f64, count: usize, vertical_distance: f64) -> Result<Self> {
        if count == 0 {
            return Err(Error::arg("count", "must be at least 1"));
        }
        let positions = if count == 1 {
            vec![0.5 * (lo + hi)]
        } else {
            let step = (hi - lo) / (count - 1) as f64;
            (0..count)
                .map(|i| if i + 1 == count { hi } else { lo + step * i as f64 })
                .collect()
        };
        Self::new(positions, vertical_distance)
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn position(&self, m: usize) -> Result<f64> {
        self.positions.get(m).copied().ok_or(Error::AntennaIndex {
            index: m,
            len: self.positions.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn vertical_distance(&self) -> f64 {
        self.vertical_distance
    }

    pub fn first(&self) -> f64 {
        self.positions[0]
    }

    pub fn last(&self) -> f64 {
        self.positions[self.positions.len() - 1]
    }

    /// Aperture x̃_M − x̃_1.
    pub fn span(&self) -> f64 {
        self.last() - self.first()
    }

    /// Geometric center 0.5 (x̃_1 + x̃_M).
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.first() + self.last())
    }

    pub fn with_vertical_distance(&self, vertical_distance: f64) -> Result<Self> {
        Self::new(self.positions.clone(), vertical_distance)
    }

    /// Same array with every coordinate shifted by `dx`.
    pub fn translated(&self, dx: f64) -> Result<Self> {
        Self::new(self.positions.iter().map(|x| x + dx).collect(), self.vertical_distance)
    }
}

/// Transmit power and receiver noise, both in watts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget {
    total_power: f64,
    noise_power: f64,
}

impl LinkBudget {
    pub fn new(total_power: f64, noise_power: f64) -> Result<Self> {
        if !(total_power.is_finite() && total_power > 0.0) {
            return Err(Error::arg("total_power", format!("must be positive, got {total_power}")));
        }
        if !(noise_power.is_finite() && noise_power > 0.0) {
            return Err(Error::arg("noise_power", format!("must be positive, got {noise_power}")));
        }
        Ok(Self {
            total_power,
            noise_power,
        })
    }

    pub fn from_dbm(total_power_dbm: f64, noise_power_dbm: f64) -> Result<Self> {
        Self::new(dbm_to_watts(total_power_dbm), dbm_to_watts(noise_power_dbm))
    }

    pub fn total_power(&self) -> f64 {
        self.total_power
    }

    pub fn noise_power(&self) -> f64 {
        self.noise_power
    }

    /// P / σ².
    pub fn transmit_snr(&self) -> f64 {
        self.total_power / self.noise_power
    }
}

pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

/// A complete placement problem.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub waveguide: WaveguideParams,
    pub user: UserArray,
    pub pa_count: usize,
    pub budget: LinkBudget,
}

impl Scenario {
    pub fn new(waveguide: WaveguideParams, user: UserArray, pa_count: usize, budget: LinkBudget) -> Result<Self> {
        if pa_count == 0 {
            return Err(Error::arg("pa_count", "must be at least 1"));
        }
        Ok(Self {
            waveguide,
            user,
            pa_count,
            budget,
        })
    }
}

fn distance(user: &UserArray, xm: f64, x: f64) -> f64 {
    (xm - x).hypot(user.vertical_distance)
}

/// Unwrapped phase θ_{m,n} accumulated along the waveguide from the feed to
/// `x` and then through free space to receive antenna `m`.
pub fn phase_delay(wg: &WaveguideParams, user: &UserArray, m: usize, x: f64) -> Result<f64> {
    let xm = user.position(m)?;
    Ok(phase_delay_at(wg, xm, user.vertical_distance, x))
}

pub(crate) fn phase_delay_at(wg: &WaveguideParams, xm: f64, d: f64, x: f64) -> f64 {
    TAU / wg.wavelength * (xm - x).hypot(d) + TAU / wg.guided_wavelength * (x - wg.feed_x)
}

/// Exact derivative of [`phase_delay`] with respect to the PA position.
pub fn phase_delay_slope(wg: &WaveguideParams, user: &UserArray, m: usize, x: f64) -> Result<f64> {
    let xm = user.position(m)?;
    let r = distance(user, xm, x);
    Ok(TAU / wg.wavelength * (x - xm) / r + TAU / wg.guided_wavelength)
}

/// Channel from the feed through a PA at `x` to receive antenna `m`.
pub fn channel_coefficient(wg: &WaveguideParams, user: &UserArray, m: usize, x: f64) -> Result<ComplexChannel> {
    let xm = user.position(m)?;
    Ok(coefficient_at(wg, xm, user.vertical_distance, x))
}

pub(crate) fn coefficient_at(wg: &WaveguideParams, xm: f64, d: f64, x: f64) -> ComplexChannel {
    let magnitude = wg.eta.sqrt() / (xm - x).hypot(d);
    Complex64::from_polar(magnitude, -phase_delay_at(wg, xm, d, x))
}

/// Per-antenna sum of the channels of all PAs at `positions`.
pub fn aggregate_channel(wg: &WaveguideParams, user: &UserArray, positions: &[f64]) -> Result<Vec<ComplexChannel>> {
    if positions.is_empty() {
        return Err(Error::arg("positions", "at least one PA position is required"));
    }
    let d = user.vertical_distance;
    Ok(user
        .positions
        .iter()
        .map(|&xm| positions.iter().map(|&x| coefficient_at(wg, xm, d, x)).sum())
        .collect())
}

/// Σ_m |h_m|².
pub fn channel_gain(channels: &[ComplexChannel]) -> f64 {
    channels.iter().map(|h| h.norm_sqr()).sum()
}

/// Post-MRC SNR with the transmit power split evenly across the PAs.
pub fn received_snr(scenario: &Scenario, positions: &[f64]) -> Result<f64> {
    if positions.len() != scenario.pa_count {
        return Err(Error::arg(
            "positions",
            format!("expected {} PA positions, got {}", scenario.pa_count, positions.len()),
        ));
    }
    let h = aggregate_channel(&scenario.waveguide, &scenario.user, positions)?;
    Ok(scenario.budget.transmit_snr() / scenario.pa_count as f64 * channel_gain(&h))
}

/// Spectral efficiency log2(1 + SNR) in bit/s/Hz.
pub fn rate_from_snr(snr: f64) -> f64 {
    snr.ln_1p() / std::f64::consts::LN_2
}

pub fn achievable_rate(scenario: &Scenario, positions: &[f64]) -> Result<f64> {
    received_snr(scenario, positions).map(rate_from_snr)
}

/// Reduce a phase into [0, 2π).
pub fn wrap_phase(phase: f64) -> f64 {
    let r = phase.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}
