//! Pointwise invariants from curvature data, and discrete curvature
//! integration on triangle meshes.
//!
//! Two layers live here. The dimension-general layer
//! ([`pointwise_invariants`]) evaluates the derived local invariants
//! `a_0(x), a_1(x), a_2(x)` on explicit curvature data — mean curvatures,
//! ambient and boundary scalar curvature — including the space-form
//! specialization where both scalar curvatures collapse to one sectional
//! constant.
//!
//! The surface layer works on closed oriented triangle meshes in `R^3`
//! ([`SurfaceMesh`]): cotangent-formula mean curvature with Meyer mixed
//! Voronoi areas, angle-defect Gaussian curvature, and
//! [`integrate_invariants`], which assembles the integrated invariants, a
//! Gauss–Bonnet consistency residual, and the Cauchy–Schwarz deficit
//! `(area ∫H_1^2)^{1/2} - |∫H_1|` whose vanishing pins the round sphere
//! among surfaces sharing its invariants.

mod curvature;
mod generators;
mod mesh;
mod pointwise;
mod report;

pub use curvature::{mesh_curvatures, MeshCurvatures};
pub use generators::{ellipsoid, icosphere, torus};
pub use mesh::SurfaceMesh;
pub use pointwise::{pointwise_invariants, CurvatureData, PointwiseInvariants};
pub use report::{integrate_invariants, SurfaceReport};

use thiserror::Error;

/// Errors from mesh handling and invariant evaluation.
#[derive(Debug, Error)]
pub enum GeometryError {
    /// Pointwise invariants need an ambient dimension of at least two.
    #[error("need dimension >= 2, got {dim}")]
    UnsupportedDimension {
        /// Rejected dimension.
        dim: u32,
    },
    /// Curvature data and generator parameters must be finite and in range.
    #[error("invalid parameter {name} = {value}")]
    InvalidParameter {
        /// Which parameter was rejected.
        name: &'static str,
        /// The rejected value.
        value: f64,
    },
    /// Mesh file I/O failed.
    #[error("mesh I/O failed")]
    Io(#[from] std::io::Error),
    /// A mesh file could not be parsed.
    #[error("parse error at line {line}: {detail}")]
    Parse {
        /// One-based line number.
        line: usize,
        /// What went wrong.
        detail: String,
    },
    /// A triangle references a vertex that does not exist.
    #[error("triangle {triangle} references vertex {index}, but there are only {count} vertices")]
    IndexOutOfRange {
        /// Triangle position.
        triangle: usize,
        /// Offending vertex index.
        index: u32,
        /// Vertex count.
        count: usize,
    },
    /// A triangle repeats a vertex.
    #[error("triangle {triangle} is degenerate")]
    DegenerateTriangle {
        /// Triangle position.
        triangle: usize,
    },
    /// The mesh has no triangles.
    #[error("mesh is empty")]
    EmptyMesh,
    /// An edge is not shared by exactly two triangles: the surface is not
    /// closed (or not manifold).
    #[error("mesh is not closed: edge ({a}, {b}) borders {uses} triangle(s)")]
    NotClosed {
        /// Edge tail.
        a: u32,
        /// Edge head.
        b: u32,
        /// Number of incident triangles counted.
        uses: usize,
    },
    /// Two adjacent triangles traverse a shared edge in the same direction.
    #[error("mesh is not consistently oriented across edge ({a}, {b})")]
    NotOriented {
        /// Edge tail.
        a: u32,
        /// Edge head.
        b: u32,
    },
    /// A vertex ended up with a nonpositive mixed area (degenerate
    /// geometry, e.g. zero-area triangles).
    #[error("vertex {vertex} has nonpositive mixed area")]
    DegenerateVertexArea {
        /// Offending vertex.
        vertex: usize,
    },
}
