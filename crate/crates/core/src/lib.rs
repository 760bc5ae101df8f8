//! Finite binary relations as 0/1 incidence matrices.
//!
//! Relations on a finite carrier form a unitary semiring under union and
//! composition, and composition of relations is the max-product `⊙` of their
//! incidence matrices. On top of that this crate decides, counts and
//! enumerates the solutions of `R∘X = S` and `X∘R = S`, inverts permutation
//! relations and builds Cartesian products.
//!
//! ```
//! use relsolve::{relcore::Relation, solver};
//!
//! let r = Relation::from_pairs(["1", "2", "3"], [("1", "2"), ("2", "1"), ("3", "2"), ("3", "3")])?;
//! let s = Relation::from_pairs(["1", "2", "3"], [("1", "1"), ("1", "2"), ("3", "1"), ("3", "2")])?;
//! let space = solver::solution_space(&r, &s)?.into_space().expect("solvable");
//! assert_eq!(space.count(), 4u32.into());
//! # Ok::<(), relsolve::Error>(())
//! ```
//!
//! ## Feature flags
//!
//! * `parallel` (default): row-parallel `⊙`, column-parallel solving and
//!   counting, and a parallel brute-force oracle, on the rayon pool. Without
//!   it everything runs on the calling thread with identical results.

pub mod bits;
pub mod cli;
mod error;
pub mod oracle;
pub mod relcore;
pub mod semiring;
pub mod solver;

pub use error::{Error, Result};
