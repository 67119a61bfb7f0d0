//! Integer partitions, their intersection relations, and exact search for
//! maximum (properly) t-intersecting families of partitions.
//!
//! The pieces, bottom up:
//!
//! - [`partition`]: partitions, lexicographic enumeration, `p(n,k)` counts.
//! - [`intersection`]: the multiset and proper relations and their set
//!   encodings.
//! - [`star`]: the star families `P(n,k)<t>`, `P(n,k)(T)` and `P(n)<t>`.
//! - [`search`]: intersection graphs and exact maximum clique search,
//!   including uniqueness of the star.
//! - [`constructions`]: the injection, shifted family and cover set used in
//!   the counting arguments, with their claimed properties checked.
//! - [`harness`]: batch sweeps, lemma suites, reports and the result cache.

pub mod config;
pub mod constructions;
pub mod error;
pub mod harness;
pub mod intersection;
pub mod partition;
pub mod search;
pub mod star;

pub use config::Limits;
pub use error::{Error, Result};
pub use intersection::Relation;
pub use partition::{CountTable, Partition};
