//! Symbol data of the Laplacian in boundary normal coordinates.
//!
//! With `D_j = -i ∂_j`, the Laplace-Beltrami operator near the boundary
//! takes the form `D_n^2 + i E(x) D_n + Q(x, D)`, where the tangential part
//! `Q` has full symbol `q2 + q1` with
//!
//! ```text
//!     q2 = sum_{a,b} g^{ab} xi^a xi^b,
//!     q1 = -i sum_{a,b} ( (1/2) g^{ab} ∂_a log det g + ∂_a g^{ab} ) xi^b,
//!     E  = -(1/2) sum_{a,b} g^{ab} ∂_n g_{ab}.
//! ```
//!
//! All three are returned as exact symbol sums over jet indeterminates.

use super::coeff::{cimag, cint, crat, rat, rint};
use super::jet::{Dir, Jet};
use super::sum::SymbolSum;
use super::term::SymbolTerm;
use super::SymbolError;

/// The three coefficient symbols of the boundary-adapted Laplacian.
#[derive(Clone, Debug)]
pub struct OperatorData {
    /// Principal tangential symbol `q2` (degree 2 in `xi`).
    pub q2: SymbolSum,
    /// Subprincipal tangential symbol `q1` (degree 1 in `xi`, purely
    /// imaginary coefficients).
    pub q1: SymbolSum,
    /// Normal first-order coefficient `E = -(1/2) tr(g^{-1} ∂_n g)`.
    pub curvature_coeff: SymbolSum,
}

/// Validate an ambient dimension for the symbol calculus.
pub fn check_dim(dim: u32) -> Result<(), SymbolError> {
    if (2..=200).contains(&dim) {
        Ok(())
    } else {
        Err(SymbolError::UnsupportedDimension { dim })
    }
}

/// Build `q2`, `q1`, and `E` for ambient dimension `dim`.
pub fn build_operator_data(dim: u32) -> Result<OperatorData, SymbolError> {
    check_dim(dim)?;
    let max_tan = (dim - 1) as u8;

    let mut q2 = Vec::new();
    let mut e_terms = Vec::new();
    for a in 1..=max_tan {
        for b in a..=max_tan {
            let sym = if a == b { 1 } else { 2 };
            q2.push(SymbolTerm::new(
                cint(sym),
                0,
                0,
                vec![a, b],
                vec![Jet::inv_metric(a, b, &[])],
            ));
            e_terms.push(SymbolTerm::new(
                crat(-sym, 2),
                0,
                0,
                vec![],
                vec![Jet::inv_metric(a, b, &[]), Jet::metric(a, b, &[Dir::Nor])],
            ));
        }
    }

    let mut q1 = Vec::new();
    for a in 1..=max_tan {
        for b in 1..=max_tan {
            q1.push(SymbolTerm::new(
                cimag(rat(-1, 2)),
                0,
                0,
                vec![b],
                vec![Jet::inv_metric(a, b, &[]), Jet::log_det(&[Dir::Tan(a)])],
            ));
            q1.push(SymbolTerm::new(
                cimag(rint(-1)),
                0,
                0,
                vec![b],
                vec![Jet::inv_metric(a, b, &[Dir::Tan(a)])],
            ));
        }
    }

    Ok(OperatorData {
        q2: SymbolSum::from_terms(dim, q2),
        q1: SymbolSum::from_terms(dim, q1),
        curvature_coeff: SymbolSum::from_terms(dim, e_terms),
    })
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;

    #[test]
    fn rejects_dimension_below_two() {
        assert!(matches!(
            build_operator_data(1),
            Err(SymbolError::UnsupportedDimension { dim: 1 })
        ));
    }

    #[test]
    fn q2_has_one_term_per_symmetric_component() {
        let op = build_operator_data(3).unwrap();
        // Components (1,1), (1,2), (2,2).
        assert_eq!(op.q2.len(), 3);
        let off = op
            .q2
            .terms()
            .iter()
            .find(|t| t.xi == vec![1, 2])
            .expect("off-diagonal");
        assert_eq!(off.coeff, cint(2));
        for t in op.q2.terms() {
            assert_eq!(t.symbol_order(), 2);
            assert_eq!(t.total_weight(), 0);
        }
    }

    #[test]
    fn q1_is_purely_imaginary_of_weight_one() {
        let op = build_operator_data(3).unwrap();
        for t in op.q1.terms() {
            assert!(
                t.coeff.re.is_zero(),
                "q1 coefficient must be imaginary: {t}"
            );
            assert_eq!(t.total_weight(), 1);
            assert_eq!(t.normal_weight(), 0);
            assert_eq!(t.xi_degree(), 1);
        }
    }

    #[test]
    fn curvature_coeff_merges_symmetric_pairs() {
        // At dim 3 the four products g^{ab} ∂_n g_{ab} collapse to three
        // canonical terms, the off-diagonal one carrying coefficient -1.
        let op = build_operator_data(3).unwrap();
        assert_eq!(op.curvature_coeff.len(), 3);
        let off = op
            .curvature_coeff
            .terms()
            .iter()
            .find(|t| t.jets[0] == Jet::inv_metric(1, 2, &[]))
            .expect("off-diagonal");
        assert_eq!(off.coeff, cint(-1));
        for t in op.curvature_coeff.terms() {
            assert_eq!(t.total_weight(), 1);
            assert_eq!(t.normal_weight(), 1);
            assert_eq!(t.xi_degree(), 0);
        }
    }
}
