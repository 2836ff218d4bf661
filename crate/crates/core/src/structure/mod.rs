//! Hom-subgroups, normality, quotients, abelianization and simplicity.

mod abelian;
mod lattice;
mod quotient;
mod subgroup;
mod subset;

pub use abelian::{
    abelianization, abelianization_universal_check, commutator, commutator_subgroup, pushforward_pullback_check,
    Abelianization, CommutatorSubgroup, UniversalReport,
};
pub use lattice::{normal_lattice, NormalLattice};
pub use quotient::{quotient, QuotientHomGroup};
pub use subgroup::*;
pub use subset::SubSet;
