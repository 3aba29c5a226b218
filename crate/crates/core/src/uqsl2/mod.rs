//! U_q(sl2) at generic q: PBW arithmetic and finite-dimensional modules.

pub mod modules;
pub mod pbw;
pub mod rmatrix;

pub use modules::{casimir_matrix, centrality_check, check_relations, decompose_type_I, double_dual_trace, irrep, irrep_at, qnum, verma, verma_default, weight_spaces, WeightDecomposition};
pub use pbw::{PbwElement, PbwTensor};
pub use rmatrix::{braiding, braiding_checks, universal_r_action, BraidReport};
