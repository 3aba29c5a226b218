//! U_q(affine sl2): evaluation modules, strings and the trigonometric R-matrix.

pub mod eval;
pub mod spectral;
pub mod strings;

pub use eval::{eval_dual_shift, eval_rep, invariant_covectors, invariant_vectors, rep_dual, verify_affine_relations, AffineReport};
pub use spectral::{spectral_checks, trig_r_matrix, SpectralReport};
pub use strings::{decompose_into_strings, drinfeld_polynomial, general_position, irreducibility_test, string_of, EvalPoint, StringDesc, StringMultiset};

use crate::scalar::Scalar;

/// The deformation parameter, a formal variable.
pub fn q() -> Scalar {
    Scalar::var("q")
}
