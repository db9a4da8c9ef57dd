//! Exact term calculus for boundary symbols.
//!
//! Symbols are represented as finite sums of monomial terms
//!
//! ```text
//!     c * Q^(e/2) * (sqrt(Q) - lambda)^(-l) * xi^M * (jet factors)
//! ```
//!
//! where `Q = sum_{a,b} g^{ab} xi^a xi^b` is the principal symbol of the
//! tangential Laplacian, `lambda` is the resolvent parameter, `xi^M` is a
//! monomial in the tangential cotangent variables, and each jet factor is a
//! partial derivative of a metric coefficient (or of `log det g`) in boundary
//! normal coordinates. Coefficients `c` are complex numbers with exact
//! rational parts, so the calculus is closed under the five operations it
//! needs: addition, multiplication, differentiation in `x` (tangential or
//! normal), differentiation in `xi`, and scaling.
//!
//! The two recursions built on top of the calculus are
//! [`dtn_symbols`] (the Riccati recursion for the Dirichlet-to-Neumann
//! symbol) and [`parametrix_symbols`] (the resolvent parametrix recursion).
//! [`structure_audit`] checks the homogeneity, weight, and parity laws that
//! every symbol produced by those recursions must satisfy.

mod audit;
pub(crate) mod coeff;
mod dtn;
mod jet;
mod operator;
mod parametrix;
mod sum;
mod term;

pub use audit::{structure_audit, AuditReport, AuditViolation, ViolationKind};
pub use coeff::{fmt_coeff, Coeff, Rat};
pub use dtn::dtn_symbols;
pub use jet::{Dir, Jet, JetFamily};
pub use operator::{build_operator_data, OperatorData};
pub use parametrix::parametrix_symbols;
pub use sum::{DiffDir, SymbolSum};
pub use term::SymbolTerm;

use thiserror::Error;

/// Errors from the symbol recursions.
#[derive(Debug, Error)]
pub enum SymbolError {
    /// The ambient dimension must be at least 2 (one tangential direction)
    /// and small enough for `u8` direction indices.
    #[error("unsupported ambient dimension {dim}; need 2 <= dim <= 200")]
    UnsupportedDimension {
        /// The rejected dimension.
        dim: u32,
    },
    /// The parametrix recursion needs the operator symbol down to a given
    /// order before it can produce the requested parametrix depth.
    #[error("operator symbol of order {order} is required but was not supplied")]
    MissingSymbolOrder {
        /// The first missing symbol order.
        order: i64,
    },
    /// Operator symbols fed to the parametrix recursion must not contain
    /// resolvent factors.
    #[error("operator symbol of order {order} contains a resolvent factor")]
    ResolventInOperator {
        /// Order of the offending symbol.
        order: i64,
    },
    /// The parametrix recursion divides by `(sqrt(Q) - lambda)`, which is
    /// only valid when the principal operator symbol is exactly `sqrt(Q)`.
    #[error("principal operator symbol is not sqrt(Q); cannot form the resolvent")]
    InvalidPrincipalSymbol,
}
