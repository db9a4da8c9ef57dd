//! Eigenvalue counting for the unit ball against the two-term Weyl law.

use super::BallError;

/// Largest supported counting threshold; keeps the exact count loop cheap.
const MAX_SIGMA: f64 = 1.0e7;

/// One point of the counting-function comparison.
///
/// `count` is exact; `prediction` and `residual` are floats, and `residual`
/// is only meaningful while `count` fits `f64` exactly (below `2^53`).
#[derive(Clone, Copy, Debug)]
pub struct WeylSample {
    /// Counting threshold.
    pub sigma: f64,
    /// Exact number of eigenvalues `<= sigma`, with multiplicity.
    pub count: u128,
    /// Two-term prediction `A σ^{n-1} + B σ^{n-2}` from the integrated
    /// invariants `a_0` and `a_1` of the boundary sphere.
    pub prediction: f64,
    /// `count - prediction`.
    pub residual: f64,
}

/// Compare the exact eigenvalue count of the unit ball `B^dim` below
/// `sigma` with the two-term Weyl prediction.
///
/// The prediction coefficients come from the short-time trace expansion
/// `t^{n-1} Σ m_k e^{-kt} = c_0 + c_1 t + ...` via `A = c_0/Γ(n)` and
/// `B = c_1/Γ(n-1)`. On the unit ball `c_0 = Γ(n-1) P` and
/// `c_1 = Γ(n-1) (n-2) P / 2` with
/// `P = Vol(S^{n-2}) Vol(S^{n-1}) (2π)^{-(n-1)}`, so `A = P/(n-1)` and
/// `B = P (n-2)/2`. The counting function jumps at integers, so sample at
/// half-integers for stable readings; there the residual of the
/// three-dimensional ball is exactly `1/4`.
pub fn weyl_residual(dim: u32, sigma: f64) -> Result<WeylSample, BallError> {
    if dim < 2 {
        return Err(BallError::UnsupportedDimension { dim });
    }
    if !sigma.is_finite() || sigma <= 0.0 || sigma > MAX_SIGMA {
        return Err(BallError::InvalidParameter { value: sigma });
    }
    // Half-integers only: sigma - 1/2 must be a nonnegative integer
    // (exactly representable throughout the supported range).
    if (sigma - 0.5).fract() != 0.0 {
        return Err(BallError::JumpAmbiguity { sigma });
    }
    let k_max = sigma.floor() as u64;
    let n = u128::from(dim);
    let overflow = |degree: u64| BallError::MultiplicityOverflow {
        dim,
        degree: degree as u32,
    };

    // Exact running count: b = C(k+n-2, n-2) updated multiplicatively (the
    // division is exact at every step), m_k = b + previous b.
    let mut count: u128 = 1;
    let mut b: u128 = 1;
    for k in 1..=k_max {
        let kk = u128::from(k);
        let b_next = b.checked_mul(kk + n - 2).ok_or_else(|| overflow(k))? / kk;
        count = count
            .checked_add(b_next)
            .and_then(|c| c.checked_add(b))
            .ok_or_else(|| overflow(k))?;
        b = b_next;
    }

    let nf = f64::from(dim);
    let p = sphere_volume(dim - 2) * sphere_volume(dim - 1)
        / (2.0 * std::f64::consts::PI).powi(dim as i32 - 1);
    let prediction = p / (nf - 1.0) * sigma.powi(dim as i32 - 1)
        + p * (nf - 2.0) / 2.0 * sigma.powi(dim as i32 - 2);
    let residual = count as f64 - prediction;
    Ok(WeylSample {
        sigma,
        count,
        prediction,
        residual,
    })
}

/// Volume of the round unit sphere `S^d`, via
/// `Vol(S^0) = 2`, `Vol(S^1) = 2π`, `Vol(S^d) = 2π Vol(S^{d-2})/(d-1)`.
pub(super) fn sphere_volume(d: u32) -> f64 {
    match d {
        0 => 2.0,
        1 => 2.0 * std::f64::consts::PI,
        _ => 2.0 * std::f64::consts::PI * sphere_volume(d - 2) / f64::from(d - 1),
    }
}
