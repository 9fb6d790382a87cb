//! Exact scalars, dense matrices and tensors, and linear algebra over ℚ.

pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod sparse;
pub mod tensor;

pub use linalg::{determinant, invert, nullspace, nullspace_dim, rank, rank_poly, rref, solve};
pub use matrix::{dot, unit, vec_add, vec_is_zero, vec_scale, vec_sub, Matrix};
pub use poly::Poly;
pub use rational::{q, Rational};
pub use scalar::{poly_is_zero, Scalar};
pub use sparse::{sparse_axpy, sparse_from_dense, sparse_rank, sparse_to_dense, EchelonBasis, SparseVec};
pub use tensor::{multi_indices, Tensor};
