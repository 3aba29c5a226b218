//! Exact computations with finite-dimensional Hopf algebras and the
//! quantum groups U_q(sl2), U_q(affine sl2) and Y(sl2).

pub mod affine;
pub mod classical;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod rep;
pub mod scalar;
pub mod uqsl2;
pub mod yangian;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use scalar::{Rational, Scalar, Series, Var};
