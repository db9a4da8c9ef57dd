//! Riccati recursion for the symbol of the Dirichlet-to-Neumann operator.
//!
//! Writing the Laplacian near the boundary as `D_n^2 + iE D_n + Q(x, D)`,
//! the full symbol `\hat r_1 + \hat r_0 + \hat r_{-1} + ...` of the
//! associated first-order operator with parameter `x^n` satisfies
//!
//! ```text
//!   \hat r_1     = -sqrt(q2),
//!   \hat r_0     = (2 sqrt(q2))^{-1} ( sum_a ∂_{xi^a} sqrt(q2) · D_{x^a} sqrt(q2)
//!                    - q1 - ∂_n sqrt(q2) + E sqrt(q2) ),
//!   \hat r_{-m-1} = (2 sqrt(q2))^{-1} ( sum_{K, j, k} (1/K!) ∂_xi^K \hat r_j · D_x^K \hat r_k
//!                    + ∂_n \hat r_{-m} - E \hat r_{-m} ),
//! ```
//!
//! where the sum ranges over `-m <= j, k <= 1` and multi-indices `K` with
//! `|K| = j + k + m`, and `D = -i ∂`. The Dirichlet-to-Neumann symbols are
//! `r_j = -\hat r_j` restricted to `x^n = 0`; the restriction leaves jet
//! indeterminates untouched and simply stops any further normal
//! differentiation, so it is a no-op here.

use num_traits::One;

use super::coeff::{cimag, creal, neg_i_pow, Rat};
use super::jet::Dir;
use super::operator::{build_operator_data, check_dim};
use super::sum::{
    apply_multi_derivative, half_inv_sqrt_q, multi_indices, sqrt_q, DiffDir, SymbolSum,
};
use super::SymbolError;

/// Compute the Dirichlet-to-Neumann symbols `[r_1, r_0, ..., r_{1-depth}]`.
///
/// `depth` is the number of orders past the principal symbol; the returned
/// vector has `depth + 1` entries, with `r_{1-i}` at index `i`.
pub fn dtn_symbols(dim: u32, depth: u32) -> Result<Vec<SymbolSum>, SymbolError> {
    check_dim(dim)?;
    let op = build_operator_data(dim)?;
    let max_tan = (dim - 1) as u8;
    let root = sqrt_q(dim);
    let half_inv = half_inv_sqrt_q(dim);

    // hat[i] = \hat r_{1-i}.
    let mut hat: Vec<SymbolSum> = vec![root.neg()];

    if depth >= 1 {
        let mut acc = SymbolSum::zero(dim);
        for a in 1..=max_tan {
            let dxi = root.diff(DiffDir::Xi(a));
            let dx = root
                .diff(DiffDir::Space(Dir::Tan(a)))
                .scale(&cimag(-Rat::one()));
            acc = acc.add(&dxi.mul(&dx));
        }
        acc = acc.sub(&op.q1);
        acc = acc.sub(&root.diff(DiffDir::Space(Dir::Nor)));
        acc = acc.add(&op.curvature_coeff.mul(&root));
        hat.push(half_inv.mul(&acc));
    }

    for m in 0..depth.saturating_sub(1) {
        // Compute \hat r_{-m-1} from \hat r_1 ... \hat r_{-m}.
        let mut acc = SymbolSum::zero(dim);
        for j in -(m as i64)..=1 {
            for k in -(m as i64)..=1 {
                let p = j + k + m as i64;
                if p < 0 {
                    continue;
                }
                let rj = &hat[(1 - j) as usize];
                let rk = &hat[(1 - k) as usize];
                for (kidx, kfact) in multi_indices(dim, p as u32) {
                    let dxi = apply_multi_derivative(rj, &kidx, true);
                    if dxi.is_empty() {
                        continue;
                    }
                    let dx = apply_multi_derivative(rk, &kidx, false);
                    if dx.is_empty() {
                        continue;
                    }
                    let scale = neg_i_pow(p as u32) * creal(Rat::new(1.into(), kfact));
                    acc = acc.add(&dxi.mul(&dx).scale(&scale));
                }
            }
        }
        let prev = &hat[(1 + m as i64) as usize];
        acc = acc.add(&prev.diff(DiffDir::Space(Dir::Nor)));
        acc = acc.sub(&op.curvature_coeff.mul(prev));
        hat.push(half_inv.mul(&acc));
    }

    Ok(hat.into_iter().map(|h| h.neg()).collect())
}
