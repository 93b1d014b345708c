//! Cohomology of symmetric products of punctured surfaces and the
//! characteristic-class invariants that separate them up to homeomorphism.

pub mod charclass;
pub mod classifier;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod macdonald;
pub mod par;
pub mod skeleton;
pub mod surface;
pub mod tensor;

pub use classifier::{
    compare, compare_reports, report, skew_rank, table, Comparison, GridRanges, InvariantReport,
    SpaceSpec, Verdict,
};
pub use error::{Error, Result};
pub use exterior::{ExtAlgebra, ExtElement, ExtMonomial, Ring};
pub use par::Execution;
