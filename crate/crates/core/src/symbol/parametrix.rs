//! Resolvent parametrix recursion.
//!
//! Given the operator symbols `r_1 + r_0 + r_{-1} + ...` of a first-order
//! operator with principal symbol `sqrt(Q)`, the parametrix of the resolvent
//! `(op - lambda)^{-1}` has symbol `s_{-1} + s_{-2} + ...` determined by
//!
//! ```text
//!   s_{-1}   = (r_1 - lambda)^{-1},
//!   s_{-1-m} = -(r_1 - lambda)^{-1} sum_{j,k,K} ((-i)^{|K|} / K!) ∂_xi^K r_k · ∂_x^K s_j,
//! ```
//!
//! where `-m <= j <= -1`, `-m <= k <= 1`, and `|K| = m + k + j >= 0` with
//! `K` ranging over tangential multi-indices. Because `r_1 = sqrt(Q)`
//! exactly, division by `(r_1 - lambda)` is multiplication by a resolvent
//! factor, which the term representation supports natively.

use super::coeff::{cint, creal, neg_i_pow, Rat};
use super::sum::{apply_multi_derivative, multi_indices, sqrt_q, SymbolSum};
use super::SymbolError;

/// Compute the parametrix symbols `[s_{-1}, s_{-2}, ..., s_{-1-depth}]`.
///
/// `rs` must hold the operator symbols `[r_1, r_0, ..., r_{1-depth}]` (as
/// produced by [`super::dtn_symbols`]); deeper entries are unused. The
/// returned vector has `depth + 1` entries with `s_{-1-i}` at index `i`.
pub fn parametrix_symbols(rs: &[SymbolSum], depth: u32) -> Result<Vec<SymbolSum>, SymbolError> {
    let first = rs
        .first()
        .ok_or(SymbolError::MissingSymbolOrder { order: 1 })?;
    let dim = first.dim();
    if rs.len() < (depth + 1) as usize {
        return Err(SymbolError::MissingSymbolOrder {
            order: 1 - rs.len() as i64,
        });
    }
    for (i, r) in rs.iter().enumerate() {
        if r.terms().iter().any(|t| t.resolvent_exp != 0) {
            return Err(SymbolError::ResolventInOperator {
                order: 1 - i as i64,
            });
        }
    }
    if *first != sqrt_q(dim) {
        return Err(SymbolError::InvalidPrincipalSymbol);
    }

    // s[i] = s_{-1-i}; division by (r_1 - lambda) is multiplication by a
    // single resolvent factor.
    let resolvent = SymbolSum::resolvent_power(dim, cint(1), 1);
    let neg_resolvent = SymbolSum::resolvent_power(dim, cint(-1), 1);
    let mut s: Vec<SymbolSum> = vec![resolvent];

    for m in 1..=depth as i64 {
        let mut acc = SymbolSum::zero(dim);
        for j in -m..=-1 {
            for k in -m..=1 {
                let p = m + k + j;
                if p < 0 {
                    continue;
                }
                let rk = &rs[(1 - k) as usize];
                let sj = &s[(-j - 1) as usize];
                for (kidx, kfact) in multi_indices(dim, p as u32) {
                    let dxi = apply_multi_derivative(rk, &kidx, true);
                    if dxi.is_empty() {
                        continue;
                    }
                    let dx = apply_multi_derivative(sj, &kidx, false);
                    if dx.is_empty() {
                        continue;
                    }
                    let scale = neg_i_pow(p as u32) * creal(Rat::new(1.into(), kfact));
                    acc = acc.add(&dxi.mul(&dx).scale(&scale));
                }
            }
        }
        s.push(neg_resolvent.mul(&acc));
    }
    Ok(s)
}
