//! Computations in the mapping class group of a 2n-punctured genus-g
//! surface: named generators of the handlebody-extension subgroup as
//! free-group automorphisms, the relation suite certifying the planar
//! conventions, membership search with certificates, and link-complement
//! presentations from gluing words.

pub mod autrep;
pub mod ext;
pub mod gens;
pub mod laurent;
pub mod linalg;
pub mod link;
pub mod par;
pub mod surface;
pub mod twists;
pub mod word;

pub use num_bigint;

pub use autrep::{Automorphism, HomologyAction, PuncturePermutation};
pub use ext::{membership, relation_suite, Certificate, RefutedReason};
pub use gens::{GeneratorTable, MappingClass};
pub use surface::{catalog, CurveCatalog, Signature};
pub use word::Word;
