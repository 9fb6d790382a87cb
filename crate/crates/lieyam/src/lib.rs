//! Exact computations for Lie-Yamaguti algebras, their representations,
//! cohomology, deformations, Nijenhuis and relative Rota-Baxter structures.

pub mod algebra;
pub mod cohomology;
pub mod deform;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod io;
pub mod pair;
pub mod quadratic;
pub mod rep;
pub mod report;
pub mod rota_baxter;
pub mod wedge;

pub use algebra::{AlgebraBuilder, LieYamagutiAlgebra};
pub use error::{Error, Result};
pub use exact::{Matrix, Poly, Rational, Scalar, Tensor};
pub use rep::{DerivedD, LieYRepPair, Representation};
pub use report::{CheckReport, CheckResult, Witness};
