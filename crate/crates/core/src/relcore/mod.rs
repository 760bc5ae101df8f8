//! Index sets, the [`Relation`] value type and its text formats.

mod index;
pub mod io;
mod relation;

pub use index::{IndexSet, IndexSubset};
pub use relation::Relation;
