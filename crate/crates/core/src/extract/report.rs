//! Machine-readable summaries of a full derivation run.
//!
//! Everything upstream is exact rational arithmetic in units of the
//! prefactor `V_n (2π)^{-(n-1)}`, `V_n = Vol(S^{n-2})`. The report renders
//! each coefficient both ways: as an exact rational string in those units,
//! and as a floating-point value with the prefactor folded in (the form
//! quoted in surface-theory formulas, e.g. `1/(16π)` for the `H_1^2` term
//! of `a_2` on a three-dimensional domain).

use serde::Serialize;

use super::invariants::{expected_invariant, heat_invariant_with_stats, DerivationStats};
use super::poly::{rat_to_f64, CurvaturePolynomial};
use super::ExtractError;
use crate::symbol::coeff::factorial_rat;
use crate::symbol::{Rat, SymbolError};

/// One coefficient of an invariant, exactly and numerically.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormCoefficient {
    /// What the coefficient multiplies: a canonical curvature monomial
    /// (`"lam(1)*lam(2)"`) or a named geometric quantity (`"H1^2"`).
    pub quantity: String,
    /// Exact rational value, in units of the prefactor.
    pub exact: String,
    /// Floating-point value with the prefactor folded in.
    pub numeric: f64,
}

/// The derivation of a single coefficient order, with its cross-check.
#[derive(Clone, Debug, Serialize)]
pub struct OrderReport {
    /// Coefficient order `k` of `a_k`.
    pub order: u32,
    /// The derived polynomial, one canonical monomial per entry.
    pub derived: Vec<ClosedFormCoefficient>,
    /// The independently coded closed form, grouped by named quantity.
    pub closed_form: Vec<ClosedFormCoefficient>,
    /// Whether derived and closed form agree exactly (rational equality on
    /// the canonical basis, not a floating-point comparison).
    pub matches_closed_form: bool,
    /// Term counts and timing for the derivation stages.
    pub stats: DerivationStats,
}

/// A derivation run over all orders `0..=depth` in one dimension.
#[derive(Clone, Debug, Serialize)]
pub struct DerivationReport {
    /// Ambient dimension `n` (the boundary has dimension `n - 1`).
    pub dim: u32,
    /// Highest coefficient order derived.
    pub depth: u32,
    /// Numeric value of the implicit prefactor `V_n (2π)^{-(n-1)}`.
    pub prefactor: f64,
    /// Per-order results.
    pub orders: Vec<OrderReport>,
    /// True when every order matched its closed form exactly.
    pub all_match: bool,
}

/// Run the full derivation for `k = 0..=depth` in dimension `dim` and
/// package the results with their closed-form cross-checks.
pub fn derivation_report(dim: u32, depth: u32) -> Result<DerivationReport, ExtractError> {
    if !(2..=200).contains(&dim) {
        return Err(SymbolError::UnsupportedDimension { dim }.into());
    }
    let prefactor = numeric_prefactor(dim);
    let mut orders = Vec::with_capacity(depth as usize + 1);
    let mut all_match = true;
    for k in 0..=depth {
        let (derived, stats) = heat_invariant_with_stats(dim, k)?;
        let expected = expected_invariant(dim, k)?;
        let matches_closed_form = derived == expected;
        all_match &= matches_closed_form;
        orders.push(OrderReport {
            order: k,
            derived: monomial_lines(&derived, prefactor),
            closed_form: closed_form_lines(dim, k, prefactor),
            matches_closed_form,
            stats,
        });
    }
    Ok(DerivationReport {
        dim,
        depth,
        prefactor,
        orders,
        all_match,
    })
}

/// Render a canonical polynomial as one line per monomial.
fn monomial_lines(poly: &CurvaturePolynomial, prefactor: f64) -> Vec<ClosedFormCoefficient> {
    poly.body()
        .iter()
        .map(|(mono, c)| ClosedFormCoefficient {
            quantity: mono.to_string(),
            exact: c.to_string(),
            numeric: rat_to_f64(c) * prefactor,
        })
        .collect()
}

/// The closed form of `a_k`, grouped by named geometric quantity.
fn closed_form_lines(dim: u32, k: u32, prefactor: f64) -> Vec<ClosedFormCoefficient> {
    let n = i64::from(dim);
    let rr = |a: i64, b: i64| Rat::new(a.into(), b.into());
    let line = |quantity: &str, exact: Rat| ClosedFormCoefficient {
        quantity: quantity.to_string(),
        numeric: rat_to_f64(&exact) * prefactor,
        exact: exact.to_string(),
    };
    match k {
        0 => vec![line("1", factorial_rat((n - 2) as u64))],
        1 => vec![line("H1", factorial_rat((n - 2) as u64) * rr(n - 2, 2))],
        _ => {
            let pref = factorial_rat((n - 3) as u64) * rr(1, 8);
            vec![
                line(
                    "H1^2",
                    pref.clone() * rr((n - 1) * (n - 2) * (n * n - n - 4), n + 1),
                ),
                line("H2", pref.clone() * rr(-n * (n - 3) * (n - 2), n + 1)),
                line("R_dom", pref.clone() * rr(n - 2, n - 1)),
                line("R_bd", pref * rr(-(n - 4), 3 * (n - 1))),
            ]
        }
    }
}

/// `Γ(z)` for positive half-integer `z = two_z / 2`.
fn gamma_half(two_z: u32) -> f64 {
    debug_assert!(two_z >= 1, "gamma argument must be positive");
    let m = two_z / 2;
    if two_z.is_multiple_of(2) {
        // Γ(m) = (m - 1)!
        (1..m).map(f64::from).product()
    } else {
        // Γ(m + 1/2) = (2m - 1)!! √π / 2^m
        (0..m).fold(std::f64::consts::PI.sqrt(), |acc, i| {
            acc * f64::from(2 * i + 1) / 2.0
        })
    }
}

/// Numeric value of `V_n (2π)^{-(n-1)}` with `V_n = Vol(S^{n-2})`.
pub(crate) fn numeric_prefactor(dim: u32) -> f64 {
    use std::f64::consts::PI;
    let n = dim as i32;
    let vol = 2.0 * PI.powf(f64::from(n - 1) / 2.0) / gamma_half(dim - 1);
    vol * (2.0 * PI).powi(-(n - 1))
}
