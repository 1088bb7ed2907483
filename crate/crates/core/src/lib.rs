pub mod algebra_action;
pub mod block;
pub mod error;
pub mod group;
pub mod report;
pub mod set_action;

mod equivalence;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod book_introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/groups-and-cosets.md")]
pub mod book_groups_and_cosets {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/partial-actions-on-sets.md")]
pub mod book_partial_actions_on_sets {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/block-algebras.md")]
pub mod book_block_algebras {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/globalization.md")]
pub mod book_globalization {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod book_cli {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/document-format.md")]
pub mod book_document_format {}
