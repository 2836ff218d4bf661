//! Hom-bilinear maps and tensor products of finite regular Hom-groups.

mod bilinear;
mod construct;
pub(crate) use construct::oracle_with_relations;
pub mod snf;

pub use bilinear::{
    enumerate_bilinear, is_hom_bilinear, BilinearEnumeration, BilinearReport, EQUIVARIANT, LEFT_ADDITIVE,
    RIGHT_ADDITIVE,
};
pub use construct::{
    symmetry_check, tensor_oracle, tensor_paper, universal_property_check, Provenance, SymmetryReport, TensorCandidate,
    UniversalStatus, UniversalVerdict, UniversalWitness,
};
