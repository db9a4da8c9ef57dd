//! From symbol sums to curvature polynomials.
//!
//! The heat-trace coefficient of order `k` is obtained from the parametrix
//! symbol `s_{-1-k}` in four exact steps:
//!
//! 1. [`contour_reduce`] — the residue calculus for the contour integral in
//!    the resolvent parameter turns each factor
//!    `(sqrt(Q)-lambda)^{-l}` into `1/(l-1)!` and leaves an implicit
//!    `e^{-sqrt(Q)}` weight on the cotangent fibre;
//! 2. [`evaluate_at_base_point`](table::evaluate_at_base_point) — jets are
//!    replaced by their values at the base point of boundary normal
//!    coordinates: principal curvatures, boundary curvature components, and
//!    second normal jets;
//! 3. [`xi_moment`] — the fibre integral of `e^{-|xi|}` against each
//!    surviving monomial, exact in units of `V_n = Vol(S^{n-2})`;
//! 4. canonicalization — Ricci contractions are expanded into Riemann
//!    components and the Riemann symmetry group is used to pick canonical
//!    representatives, cancelling everything that must cancel.
//!
//! [`heat_invariant`] chains all four behind the symbol recursions, and
//! [`expected_invariant`] builds the independently known closed forms in the
//! same monomial basis, so `==` between the two is a meaningful exact test.

mod contour;
mod curvature;
mod invariants;
mod moments;
mod poly;
mod report;
mod table;

pub use contour::contour_reduce;
pub use curvature::{canonical_riemann, CurvMonomial, CurvatureIndeterminate};
pub use invariants::{
    expected_invariant, heat_invariant, heat_invariant_with_stats, integrate_eval_terms,
    DerivationStats,
};
pub use moments::xi_moment;
pub use poly::CurvaturePolynomial;
pub(crate) use report::numeric_prefactor;
pub use report::{derivation_report, ClosedFormCoefficient, DerivationReport, OrderReport};
pub use table::{evaluate_at_base_point, EvalTerm};

use thiserror::Error;

use crate::symbol::SymbolError;

/// Errors from the extraction pipeline.
#[derive(Debug, Error)]
pub enum ExtractError {
    /// Propagated recursion error.
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    /// `a_k(x)` is a local quantity only for `k <= dim - 1`.
    #[error("heat coefficient a_{order} is not local in dimension {dim}; need dim >= {}", order + 1)]
    InvariantNotLocal {
        /// Ambient dimension.
        dim: u32,
        /// Requested coefficient order.
        order: u32,
    },
    /// The evaluation table covers jets of weight at most 2, which is
    /// exactly what coefficients up to `a_2` consume.
    #[error("coefficient order {order} exceeds the evaluation table (orders 0..=2)")]
    UnsupportedOrder {
        /// Requested coefficient order.
        order: u32,
    },
    /// Contour reduction expects every term to carry a resolvent factor.
    #[error("term without resolvent factor fed to contour reduction: {term}")]
    MalformedParametrix {
        /// Dump of the offending term.
        term: String,
    },
    /// Base-point evaluation expects contour-reduced input.
    #[error("term still carries a resolvent factor: {term}")]
    UnreducedResolvent {
        /// Dump of the offending term.
        term: String,
    },
    /// A jet outside the evaluation table reached evaluation.
    #[error("no base-point value for jet {jet}")]
    UnsupportedJet {
        /// Display form of the jet.
        jet: String,
    },
    /// The fibre integral diverges for this homogeneity.
    #[error("divergent fibre moment: homogeneity {homogeneity} in dimension {dim}")]
    DivergentMoment {
        /// Total homogeneity `K` of the integrand.
        homogeneity: i64,
        /// Ambient dimension.
        dim: u32,
    },
    /// Moment exponents must be even (odd monomials vanish upstream).
    #[error("odd exponent {exponent} passed to the fibre moment")]
    OddMomentExponent {
        /// The rejected exponent.
        exponent: u32,
    },
    /// A cancellation that must happen did not — a bug, not a user error.
    #[error("internal inconsistency: {detail}")]
    InternalInconsistency {
        /// What survived that should not have.
        detail: String,
    },
}
