//! Finite Hom-structures and the free regular Hom-group.
//!
//! * [`group`]: finite Hom-groups, their axioms, homomorphisms and identities.
//! * [`structure`]: subgroups, normality, quotients, abelianization, lattices.
//! * [`free`]: weighted bicolored trees and their reduction system.
//! * [`tensor`]: Hom-bilinear maps and tensor products.
//! * [`ring`]: Hom-rings, polynomial and group-ring examples.
//! * [`module`]: modules over α-Hom-rings.

pub mod budget;
pub mod catalog;
pub mod classical;
pub mod error;
pub mod free;
pub mod group;
pub mod io;
pub mod module;
pub mod report;
pub mod ring;
pub mod structure;
pub mod table;
pub mod tensor;

pub use budget::Budget;
pub use error::{Error, Result};
pub use group::{ElementId, FiniteHomGroup};
