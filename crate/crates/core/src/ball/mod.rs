//! The Steklov spectrum of Euclidean unit balls, as a numerical laboratory.
//!
//! On the unit ball `B^n ⊂ R^n` the harmonic extension of a degree-`k`
//! spherical harmonic is its homogeneous extension, and its normal
//! derivative on the boundary sphere is `k` times itself. The Steklov
//! eigenvalues are therefore exactly the nonnegative integers, `k` occurring
//! with the multiplicity of degree-`k` spherical harmonics in `n` variables.
//! Everything downstream of that one fact is computable to high accuracy:
//!
//! * [`steklov_multiplicity`] — exact eigenvalue multiplicities;
//! * [`heat_trace`] — the trace `Σ m_k e^{-kt}`, truncated with a controlled
//!   relative tail;
//! * [`fit_heat_invariants`] — least-squares recovery of the coefficients in
//!   `t^{n-1} Σ m_k e^{-kt} = c_0 + c_1 t + c_2 t^2 + O(t^3)` from trace
//!   samples, which must reproduce the integrated local invariants;
//! * [`unit_ball_expansion`] — those integrated invariants, produced by the
//!   exact symbolic derivation evaluated on the round sphere;
//! * [`weyl_residual`] — eigenvalue counting against the two-term Weyl law.
//!
//! The ball is the one domain where both sides of the comparison are
//! available in closed form, so it serves as an end-to-end numerical witness
//! for the symbolic pipeline.

mod fit;
mod spectrum;
mod trace;
mod weyl;

pub use fit::{fit_heat_invariants, unit_ball_expansion, HeatFit};
pub use spectrum::steklov_multiplicity;
pub use trace::heat_trace;
pub use weyl::{weyl_residual, WeylSample};

use thiserror::Error;

/// Errors from the ball laboratory.
#[derive(Debug, Error)]
pub enum BallError {
    /// Spectra are only defined for balls in dimension two and up.
    #[error("need dimension >= 2, got {dim}")]
    UnsupportedDimension {
        /// Rejected dimension.
        dim: u32,
    },
    /// Trace times and counting thresholds must be positive and finite.
    #[error("need a positive finite parameter, got {value}")]
    InvalidParameter {
        /// Rejected value.
        value: f64,
    },
    /// A multiplicity exceeded the 128-bit integer range.
    #[error("multiplicity of degree {degree} in dimension {dim} overflows 128 bits")]
    MultiplicityOverflow {
        /// Ball dimension.
        dim: u32,
        /// Eigenvalue (= harmonic degree).
        degree: u32,
    },
    /// The truncated trace did not reach the requested relative tail.
    #[error("heat trace at t = {t} in dimension {dim} did not converge within the term budget")]
    TruncationFailure {
        /// Ball dimension.
        dim: u32,
        /// Trace time.
        t: f64,
    },
    /// The fit needs more samples than unknowns.
    #[error("need at least {needed} grid points, got {got}")]
    InsufficientGrid {
        /// Minimum sample count.
        needed: usize,
        /// Supplied sample count.
        got: usize,
    },
    /// The least-squares system was numerically singular.
    #[error("fit design matrix is numerically singular (condition {condition:.3e})")]
    SingularFit {
        /// Estimated condition number.
        condition: f64,
    },
    /// The counting function jumps at integers, so it is only sampled
    /// between jumps.
    #[error("sigma = {sigma} is not a half-integer; the count is ambiguous at jumps")]
    JumpAmbiguity {
        /// Rejected threshold.
        sigma: f64,
    },
}
