//! Exact coefficient fields.

pub mod cyclotomic;
pub mod poly;
pub mod qcomb;
pub mod rational;
pub mod ratfunc;
#[allow(clippy::module_inception)]
pub mod scalar;
pub mod series;
pub mod var;

pub use cyclotomic::{cyclotomic_field, CycloField, Cyclotomic};
pub use poly::{Monomial, Poly};
pub use qcomb::{q_binomial, q_binomial_at, q_factorial, q_factorial_at, q_int, q_int_at};
pub use rational::Rational;
pub use ratfunc::RatFunc;
pub use scalar::Scalar;
pub use series::{Coeff, Series};
pub use var::{Var, VarKind};
