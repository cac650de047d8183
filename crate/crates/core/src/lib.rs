//! Numerical semigroups, their Wilf function, Γ-semimodules and gap Wilf
//! numbers, with exhaustive enumeration by genus.

mod bits;
pub mod catalog;
pub mod enumeration;
pub mod error;
pub mod lattice;
pub mod semigroup;
pub mod semimodule;
pub mod spec_string;
pub mod wilf;

pub use bits::BitTable;
pub use error::{Error, Result};
pub use semigroup::{AperySet, NumericalSemigroup, SemigroupRecord};
pub use spec_string::{parse_int_list, parse_semigroup, SemigroupSpec};
