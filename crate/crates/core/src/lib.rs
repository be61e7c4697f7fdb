//! exact-arithmetic toolkit for supermodules over products of sl(1|1) and
//! over exterior superalgebras: super Jordan types at odd points, certified
//! constancy of Jordan type across the self-commuting cone, projectivity /
//! endotriviality / indecomposability tests, the standard module
//! constructions, and the fiber bundles attached to modules of constant
//! type.
//!
//! everything is computed over the rationals; verdicts are certificates,
//! not floating point estimates.

pub mod algebra;
pub mod construct;
pub mod format;
pub mod groebner;
pub mod jordan;
pub mod limits;
pub mod linalg;
pub mod poly;
pub mod recipe;
pub mod sample;
pub mod scalar;
pub mod symbolic;
pub mod theta;

pub use algebra::{
    point_operator, restrict_to_subalgebra, strata, stratum_operator, stratum_point,
    symbolic_operator, AlgebraSpec, Cone, Matrix, ModuleError, OddPoint, Parity, Stratum,
    SuperDim, Supermodule,
};
pub use jordan::{
    check_cjt, fiber_at, indecomposability, is_endotrivial, is_projective, jordan_type_at,
    stable_equivalent, CjtReport, CjtVerdict, EndotrivialReport, IndecompVerdict,
    IndecomposabilityReport, JordanType, Method, StratumCertificate,
};
pub use limits::{Limits, ResourceError};
pub use scalar::{rat, rint, Rat, Scalar};
pub use theta::{
    build_theta, certify_bundle, fiber_functors, graded_window_dims, BundleReport, BundleVerdict,
    FiberReport, ThetaOperator, WindowRow,
};

/// rational polynomials in the cone coordinates.
pub type QPoly = poly::Poly<Rat>;
/// ideals of rational polynomials.
pub type QIdeal = groebner::Ideal<Rat>;
/// rational symbolic operator families.
pub type QOperator = symbolic::SymbolicOperator<Rat>;
/// rational subspaces of a coordinate space.
pub type Space = linalg::Subspace<Rat>;
