//! Exact symbolic and numerical tools for the heat trace of the
//! Dirichlet-to-Neumann (Steklov) operator.
//!
//! The centerpiece is an exact term calculus for symbols of pseudodifferential
//! operators on a boundary, written in boundary normal coordinates. Driving
//! the calculus through the Riccati recursion for the Dirichlet-to-Neumann
//! symbol, the resolvent parametrix recursion, a residue reduction of the
//! contour integral, and exact moment integration over the cotangent fibre
//! yields the local heat-trace coefficients `a_0(x)`, `a_1(x)`, `a_2(x)` as
//! polynomials in principal curvatures and boundary curvature components,
//! with arbitrary-precision rational coefficients. The derived polynomials
//! are compared, exactly, against independently coded closed forms.
//!
//! Three numerical companions round the crate out:
//!
//! * [`ball`] — Steklov spectra of Euclidean unit balls: exact eigenvalue
//!   multiplicities, truncated heat traces, least-squares recovery of the
//!   small-time expansion, and Weyl counting residuals.
//! * [`geometry`] — pointwise invariants from curvature data, plus discrete
//!   curvature integration over triangle meshes (cotangent mean curvature,
//!   angle-defect Gaussian curvature) for surfaces in `R^3`.
//! * [`extract`] — the bridge from symbol sums to curvature polynomials:
//!   contour reduction, evaluation at the base point, moment integration,
//!   and tensor-symmetry canonicalization.
//!
//! All exact arithmetic uses arbitrary-precision rationals; nothing in the
//! derivation path ever touches floating point.

pub mod ball;
pub mod extract;
pub mod geometry;
pub mod symbol;

pub use extract::{
    contour_reduce, derivation_report, expected_invariant, heat_invariant,
    heat_invariant_with_stats, xi_moment, CurvatureIndeterminate, CurvaturePolynomial,
    DerivationReport, DerivationStats, ExtractError,
};
pub use symbol::{
    build_operator_data, dtn_symbols, parametrix_symbols, structure_audit, AuditReport, Dir, Jet,
    JetFamily, OperatorData, SymbolError, SymbolSum, SymbolTerm,
};

pub use ball::{
    fit_heat_invariants, heat_trace, steklov_multiplicity, unit_ball_expansion, weyl_residual,
    BallError, HeatFit, WeylSample,
};
pub use geometry::{
    ellipsoid, icosphere, integrate_invariants, mesh_curvatures, pointwise_invariants, torus,
    CurvatureData, GeometryError, MeshCurvatures, PointwiseInvariants, SurfaceMesh, SurfaceReport,
};
