//! Recovering the short-time expansion of the ball trace, and the values it
//! must recover.

use nalgebra::{DMatrix, DVector};

use super::trace::heat_trace;
use super::weyl::sphere_volume;
use super::BallError;
use crate::extract::{expected_invariant, numeric_prefactor, CurvatureIndeterminate};

/// Result of the least-squares recovery of `t^{n-1} trace(t) ≈ c_0 + c_1 t
/// + c_2 t^2 + c_3 t^3`.
#[derive(Clone, Copy, Debug)]
pub struct HeatFit {
    /// Fitted `c_0, c_1, c_2, c_3`. The cubic term is a guard absorbing the
    /// next order of the expansion; only the first three carry meaning.
    pub coefficients: [f64; 4],
    /// Root-mean-square residual of the fit.
    pub residual_rms: f64,
    /// Condition number of the design matrix.
    pub condition: f64,
}

/// Fit the coefficients of the short-time expansion of `t^{n-1}` times the
/// ball heat trace from samples on `grid`.
///
/// A cubic model is fitted even though only `c_0..c_2` are compared against
/// theory; the extra term keeps the truncation bias of the model away from
/// the quadratic coefficient. Grids should be logarithmically spaced (an
/// unweighted fit on a log grid weighs the samples uniformly in `log t`)
/// and sample times around `[0.005, 0.05]` give the cleanest recovery:
/// larger times leak higher expansion orders into the quadratic
/// coefficient, while trace rounding noise only matters several orders of
/// magnitude lower.
pub fn fit_heat_invariants(dim: u32, grid: &[f64]) -> Result<HeatFit, BallError> {
    if dim < 2 {
        return Err(BallError::UnsupportedDimension { dim });
    }
    if grid.len() < 8 {
        return Err(BallError::InsufficientGrid {
            needed: 8,
            got: grid.len(),
        });
    }
    let rows = grid.len();
    let mut samples = DVector::zeros(rows);
    for (i, &t) in grid.iter().enumerate() {
        // heat_trace validates positivity and finiteness of t.
        samples[i] = t.powi(dim as i32 - 1) * heat_trace(dim, t)?;
    }
    let design = DMatrix::from_fn(rows, 4, |i, j| grid[i].powi(j as i32));
    let svd = design.clone().svd(true, true);
    let largest = svd.singular_values.max();
    let smallest = svd.singular_values.min();
    let condition = largest / smallest;
    if !condition.is_finite() || smallest <= largest * 1e-13 {
        return Err(BallError::SingularFit { condition });
    }
    let solution = svd
        .solve(&samples, 0.0)
        .map_err(|_| BallError::SingularFit { condition })?;
    let residual_rms = (&design * &solution - &samples).norm() / (rows as f64).sqrt();
    Ok(HeatFit {
        coefficients: [solution[0], solution[1], solution[2], solution[3]],
        residual_rms,
        condition,
    })
}

/// The integrated invariants of the unit ball, straight from the exact
/// symbolic derivation: `expected_invariant` evaluated on the round unit
/// sphere (all principal curvatures 1, sectional curvature 1, second
/// normal jets `M(a,b) = 2 δ_ab`), times the prefactor and the boundary
/// volume.
///
/// Returns `[c_0, c_1]` in dimension 2 (where `a_2` is not a local
/// quantity) and `[c_0, c_1, c_2]` from dimension 3 up. These are the
/// values [`fit_heat_invariants`] must recover.
pub fn unit_ball_expansion(dim: u32) -> Result<Vec<f64>, BallError> {
    if !(2..=200).contains(&dim) {
        return Err(BallError::UnsupportedDimension { dim });
    }
    let assign = |ind: &CurvatureIndeterminate| -> f64 {
        let delta = |i: u8, j: u8| if i == j { 1.0 } else { 0.0 };
        match *ind {
            CurvatureIndeterminate::Lambda(_) => 1.0,
            CurvatureIndeterminate::Riem(a, b, c, d) => {
                delta(a, c) * delta(b, d) - delta(a, d) * delta(b, c)
            }
            CurvatureIndeterminate::Ric(a, b) => f64::from(dim - 2) * delta(a, b),
            CurvatureIndeterminate::MJet(a, b) => 2.0 * delta(a, b),
            CurvatureIndeterminate::Mixed(..) => 0.0,
        }
    };
    let scale = numeric_prefactor(dim) * sphere_volume(dim - 1);
    let orders = if dim == 2 { 2 } else { 3 };
    let mut out = Vec::with_capacity(orders);
    for k in 0..orders as u32 {
        let poly = expected_invariant(dim, k)
            .expect("closed forms exist for validated dimension and order");
        out.push(scale * poly.evaluate_body(&assign));
    }
    Ok(out)
}
