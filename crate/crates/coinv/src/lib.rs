//! Simultaneous imaging of a sound-soft cavity and the point sources it
//! encloses, from total-field measurements on two interior curves.
//!
//! The workflow has three stages:
//!
//! 1. **Data collection** ([`forward`]): a Nyström boundary-integral solver
//!    produces synthetic total fields on the measurement curves, optionally
//!    corrupted by multiplicative random noise.
//! 2. **Decoupling** ([`decouple`]): a block single-layer system on two
//!    auxiliary circles splits each total field into its incident and
//!    scattered parts via Tikhonov regularization with the discrepancy
//!    principle.
//! 3. **Imaging** ([`locate`], [`reconstruct`]): a direct sampling indicator
//!    recovers the source locations, and Levenberg–Marquardt optimization
//!    over star-like trigonometric boundaries recovers the cavity.
//!
//! [`pipeline`] orchestrates the stages behind a JSON config and writes all
//! artifacts (curves, measurements, densities, indicator rasters, the
//! reconstructed boundary) as CSV/JSON files.
//!
//! Data-parallel loops use rayon when the `parallel` feature (default) is
//! enabled; disabling it yields a dependency-free sequential build.

pub mod decouple;
mod error;
mod exec;
pub mod forward;
pub mod geometry;
pub mod locate;
pub mod pipeline;
pub mod reconstruct;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;

use serde::{Deserialize, Serialize};

/// Wavenumber, noise level and decoupling tolerance shared across stages.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveParams {
    /// Wavenumber `k > 0`.
    pub k: f64,
    /// Relative noise level, in `[0, 1)`.
    pub delta: f64,
    /// Decoupling tolerance added to the discrepancy target (tiny).
    pub epsilon: f64,
}

impl WaveParams {
    pub fn new(k: f64, delta: f64, epsilon: f64) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::Domain(format!("wavenumber must be positive, got {k}")));
        }
        if !(0.0..1.0).contains(&delta) {
            return Err(Error::Domain(format!("noise level must lie in [0,1), got {delta}")));
        }
        if !(epsilon >= 0.0) || epsilon >= 1.0 {
            return Err(Error::Domain(format!("tolerance must be small and nonnegative, got {epsilon}")));
        }
        Ok(Self { k, delta, epsilon })
    }
}
