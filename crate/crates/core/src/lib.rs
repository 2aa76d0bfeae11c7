//! Pinching-antenna placement along a dielectric waveguide serving a single
//! user with several receive antennas.
//!
//! The central PA is positioned by maximizing the aggregated inverse path
//! loss over the user aperture ([`center`]). The remaining PAs are deployed
//! center-outward ([`placement`]): for each new PA every receive antenna
//! contributes a periodic set of phase-aligned candidate positions, the
//! tightest cluster covering all antennas is found with a sliding window,
//! and the PA goes to the cluster midpoint.
//!
//! [`oracle`] holds brute-force references for each heuristic step,
//! [`experiment`] drives parameter sweeps and per-step traces, and
//! [`verify`] bundles the numerical acceptance checks.

pub mod center;
pub mod channel;
pub mod error;
pub mod experiment;
pub mod oracle;
pub mod placement;
pub mod verify;

pub use error::{Error, Result};
