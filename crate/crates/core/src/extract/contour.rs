//! Residue reduction of the resolvent contour integral.
//!
//! For a contour `C` wrapping the positive real axis and `a > 0`,
//!
//! ```text
//!     ∮_C e^{-lambda} (a - lambda)^{-l} d lambda = -2πi e^{-a} / (l-1)!,
//! ```
//!
//! so applying `i (2π)^{-n} ∮_C e^{-lambda} · d lambda` to a parametrix term
//! `c (sqrt(Q)-lambda)^{-l} X` yields `(2π)^{-(n-1)} e^{-sqrt(Q)} c X /
//! (l-1)!`. [`contour_reduce`] performs the per-term reduction exactly; the
//! global factor `(2π)^{-(n-1)}` and the `e^{-sqrt(Q)}` fibre weight are
//! left implicit, to be consumed by the moment integration.

use num_complex::Complex;
use num_traits::Zero;

use super::ExtractError;
use crate::symbol::{Rat, SymbolSum, SymbolTerm};

/// Collapse every resolvent factor via the residue formula: the term
/// `c (sqrt(Q)-lambda)^{-l} X` becomes `(c/(l-1)!) X`.
///
/// Errors with [`ExtractError::MalformedParametrix`] if any term lacks a
/// resolvent factor (every honest parametrix term has one).
pub fn contour_reduce(s: &SymbolSum) -> Result<SymbolSum, ExtractError> {
    let mut out = Vec::with_capacity(s.len());
    for t in s.terms() {
        if t.resolvent_exp == 0 {
            return Err(ExtractError::MalformedParametrix {
                term: t.to_string(),
            });
        }
        let fact = crate::symbol::coeff::factorial(u64::from(t.resolvent_exp - 1));
        let scale = Complex::new(Rat::new(1.into(), fact), Rat::zero());
        out.push(SymbolTerm::new(
            t.coeff.clone() * scale,
            t.q_half_exp,
            0,
            t.xi.clone(),
            t.jets.clone(),
        ));
    }
    Ok(SymbolSum::from_terms(s.dim(), out))
}
