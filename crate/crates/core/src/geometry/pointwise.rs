//! The local invariants evaluated on explicit curvature data.

use serde::Serialize;

use super::GeometryError;
use crate::extract::numeric_prefactor;

/// Curvature data of one boundary point of an `dim`-dimensional domain.
///
/// `h1` and `h2` are the normalized mean curvatures: with principal
/// curvatures `λ_a`,
///
/// ```text
///   (n-1) h1 = Σ λ_a,
///   (n-1)(n-2) h2 = (Σ λ_a)^2 - Σ λ_a^2.
/// ```
///
/// `r_dom` is the scalar curvature of the ambient domain at the point and
/// `r_bd` the intrinsic scalar curvature of the boundary.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CurvatureData {
    /// Ambient dimension `n >= 2`.
    pub dim: u32,
    /// First mean curvature `H_1`.
    pub h1: f64,
    /// Second mean curvature `H_2` (irrelevant when `dim == 2`).
    pub h2: f64,
    /// Ambient scalar curvature `R_dom`.
    pub r_dom: f64,
    /// Boundary scalar curvature `R_bd`.
    pub r_bd: f64,
}

impl CurvatureData {
    /// Data for a boundary point of a domain in a space form of sectional
    /// curvature `kappa`: the ambient scalar curvature is `n(n-1)κ` and the
    /// Gauss equation fixes the boundary scalar curvature as
    /// `(n-1)(n-2)(κ + H_2)`.
    pub fn space_form(dim: u32, h1: f64, h2: f64, kappa: f64) -> Result<Self, GeometryError> {
        if dim < 2 {
            return Err(GeometryError::UnsupportedDimension { dim });
        }
        if !kappa.is_finite() {
            return Err(GeometryError::InvalidParameter {
                name: "kappa",
                value: kappa,
            });
        }
        let n = f64::from(dim);
        Ok(Self {
            dim,
            h1,
            h2,
            r_dom: n * (n - 1.0) * kappa,
            r_bd: (n - 1.0) * (n - 2.0) * (kappa + h2),
        })
    }
}

/// The pointwise invariants of one boundary point.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct PointwiseInvariants {
    /// `a_0(x)` — a constant depending only on the dimension.
    pub a0: f64,
    /// `a_1(x)` — proportional to the mean curvature.
    pub a1: f64,
    /// `a_2(x)`; `None` in dimension two, where `a_2` is not a local
    /// quantity.
    pub a2: Option<f64>,
}

/// Evaluate `a_0(x), a_1(x), a_2(x)` on curvature data.
///
/// Numerically mirrors the exact closed forms: with the dimensional
/// prefactor `pref = Vol(S^{n-2}) (2π)^{-(n-1)}`,
///
/// ```text
///   a_0 = pref Γ(n-1),
///   a_1 = pref Γ(n-1) (n-2) H_1 / 2,
///   a_2 = pref Γ(n-2)/8 [ (n-1)(n-2)(n^2-n-4)/(n+1) H_1^2
///           - n(n-3)(n-2)/(n+1) H_2
///           + (n-2)/(n-1) R_dom - (n-4)/(3(n-1)) R_bd ].
/// ```
pub fn pointwise_invariants(data: &CurvatureData) -> Result<PointwiseInvariants, GeometryError> {
    let CurvatureData {
        dim,
        h1,
        h2,
        r_dom,
        r_bd,
    } = *data;
    if dim < 2 {
        return Err(GeometryError::UnsupportedDimension { dim });
    }
    for (name, value) in [("h1", h1), ("h2", h2), ("r_dom", r_dom), ("r_bd", r_bd)] {
        if !value.is_finite() {
            return Err(GeometryError::InvalidParameter { name, value });
        }
    }
    let n = f64::from(dim);
    let pref = numeric_prefactor(dim);
    let gamma_n1 = factorial(dim - 2); // Γ(n-1)
    let a0 = pref * gamma_n1;
    let a1 = pref * gamma_n1 * (n - 2.0) / 2.0 * h1;
    let a2 = if dim >= 3 {
        let gamma_n2 = factorial(dim - 3); // Γ(n-2)
        let bracket = (n - 1.0) * (n - 2.0) * (n * n - n - 4.0) / (n + 1.0) * h1 * h1
            - n * (n - 3.0) * (n - 2.0) / (n + 1.0) * h2
            + (n - 2.0) / (n - 1.0) * r_dom
            - (n - 4.0) / (3.0 * (n - 1.0)) * r_bd;
        Some(pref * gamma_n2 / 8.0 * bracket)
    } else {
        None
    };
    Ok(PointwiseInvariants { a0, a1, a2 })
}

/// `k!` as a float; exact through `k = 18`.
fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}
