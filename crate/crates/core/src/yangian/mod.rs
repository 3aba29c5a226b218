//! The Yangian of gl2 through its evaluation modules: Yang's R-matrix, the
//! FRT relation, the Gauss decomposition and q-characters.

pub mod gauss;
pub mod qchar;
pub mod rmatrix;
pub mod tseries;

pub use gauss::{gauss_decompose, loop_relation_check, Gauss, LoopReport};
pub use qchar::{
    dominant_monomials, eigen_to_monomial, h_eigen_highest, h_spectrum, qchar_closed_form, qchar_from_module, qchar_from_tensor, qchar_multiply, reconstruct, HSpectrum, QCharacter, RootPoly,
    ShiftParam, YMonomial,
};
pub use rmatrix::{yang_qybe_check, yang_r};
pub use tseries::{evaluation_T, frt_check, qdet2, qdet_is_central, yangian_eval_module, Gl2Module, TSeries};

use crate::scalar::Var;

/// The spectral parameter of all series.
pub fn u() -> Var {
    Var::new("u")
}
