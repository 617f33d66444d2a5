//! Braid-factorization and monodromy-representation calculus.
//!
//! The crate models factorizations of the full twist `Δ²` in the braid group,
//! the Hurwitz / conjugation / node-pair moves that act on them, geometric
//! monodromy representations into symmetric groups, van Kampen presentations
//! of complements, the homology of the associated branched covers, and chains
//! of factorizations across dimensions.
//!
//! All products are read left to right: in `a · b` the factor `a` acts first.

pub mod braid;
pub mod cover;
pub mod error;
pub mod factorization;
pub mod free_group;
pub mod garside;
pub mod induction;
pub mod io;
pub mod lattice;
pub mod monodromy;
pub mod perm;
pub mod report;
pub mod search;
pub mod snf;
mod text;
pub mod van_kampen;

pub use braid::BraidWord;
pub use error::{Error, Result};
pub use factorization::{BraidFactorization, Direction, Factor};
pub use free_group::FreeWord;
pub use garside::NormalForm;
pub use monodromy::MonodromyRep;
pub use perm::Permutation;
pub use report::{Census, Check, ValidationReport};
pub use van_kampen::{AbelianInvariants, GroupPresentation, Mode};
pub use cover::{build_cover, CoverModel, SymplecticAction};
pub use induction::{derive_theta2_shadow, validate_chain, ChainOptions, ChainVerdict, LinearSystemData};
