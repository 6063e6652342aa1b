//! Permutation statistics, code bijections and exhaustive equidistribution
//! checks around the major index and the inversion number.
//!
//! Layout:
//! - [`word`], [`perm`], [`posset`]: words, permutations, descent sets and
//!   the classical statistics `des`, `maj`, `inv`.
//! - [`codes`], [`slots`]: Lehmer code, major-index code, the subdiagonal
//!   codes `Lc`, `Ic`, `Mc`, and the complement map `δ`.
//! - [`set_stats`]: `eul`, `Eul`, `El`.
//! - [`bijections`]: the constructive maps (prefix rotation, prefix sorting,
//!   shuffle-class bijection, descent-set complement), shifted shuffles and
//!   descent classes.
//! - [`harness`]: enumeration, statistic registry, distributions, the n = 4
//!   golden table and the check suite.

pub mod bijections;
pub mod codes;
pub mod error;
pub mod harness;
pub mod perm;
pub mod posset;
pub mod set_stats;
pub mod slots;
pub mod word;

pub use codes::{SubdiagonalWord, SubexcedentWord};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use posset::PositionSet;
pub use word::IntWord;
