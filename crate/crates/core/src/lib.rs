//! Finite skew braces, bi-skew braces and Hopf–Galois structure counts,
//! all by exhaustive computation on multiplication tables.
//!
//! ```
//! use bracelab::{templates, SkewBrace};
//!
//! let s3 = templates::symmetric(3).0;
//! let b = SkewBrace::opposite(&s3);
//! assert!(b.is_valid() && b.is_biskew());
//! ```

pub mod algebra;
pub mod aut;
pub mod brace;
pub mod cli;
pub mod demos;
pub mod enumerate;
pub mod error;
pub mod factorization;
pub mod group;
pub mod hgs;
pub mod io;
pub mod perm;
pub mod recognize;
pub mod templates;

pub use algebra::{catalog, CatalogEntry, NilpotentAlgebra};
pub use aut::{are_isomorphic, automorphism_group, holomorph, SearchBudget};
pub use brace::{Additive, BraceAutGroup, Counterexample, SkewBrace};
pub use enumerate::{classify_braces, oracle_tables, regular_subgroups_of_holomorph, BraceCensus};
pub use error::{Error, Result};
pub use factorization::{ExactFactorization, Side};
pub use group::{FiniteGroup, GroupHom};
pub use hgs::{count_hgs, reciprocity_check, HgsCountReport};
pub use perm::{Perm, PermutationGroup};
pub use recognize::{recognize, GroupName};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/braces.md")]
    mod braces {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/factorizations.md")]
    mod factorizations {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
