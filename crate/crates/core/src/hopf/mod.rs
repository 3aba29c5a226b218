//! Finite-dimensional Hopf algebras by structure constants.

pub mod axioms;
pub mod cocycle;
pub mod data;
pub mod double;
pub mod dual;
pub mod echelon;
pub mod pairing;
pub mod primitive;
pub mod elem;
pub mod json;
pub mod quasi;
pub mod quotient;
pub mod small;
pub mod zoo;

pub use axioms::{verify_hopf_axioms, AxiomReport};
pub use data::{FiniteHopf, Table};
pub use double::{drinfeld_double, drinfeld_double_with, Double, Straightening};
pub use dual::{cop, dual_hopf};
pub use cocycle::pentagon_cocycle_check;
pub use echelon::Echelon;
pub use pairing::{canonical_taft_pairing, check_hopf_pairing, HopfPairing};
pub use primitive::{grouplikes, skew_primitives};
pub use elem::Elem;
pub use json::{from_json, to_json, HopfJson};
pub use quasi::{quasitriangular_check, QuasiReport};
pub use small::{small_quantum_group, SmallQuantumGroup};
pub use quotient::{hopf_quotient, hopf_quotient_with_cap, Quotient};
pub use zoo::{build_function_algebra, build_group_algebra, build_nichols, build_smash_product, build_taft, build_uq_borel_minus, build_uq_borel_plus, GroupTable};
