//! Partially ordered generalized permutation patterns.
//!
//! A pattern is a word over `1..=k` with a dash flag in each gap. Equal
//! letters impose no order between the entries matching them; an undashed
//! gap forces the two matched entries to be adjacent. See [`Pogp`].
//!
//! ```
//! use pogp::{count_sequence, Pogp};
//!
//! let p: Pogp = "3-12".parse().unwrap();
//! let counts = count_sequence(&[p], 6).unwrap();
//! assert_eq!(counts.to_string(), "1 1 2 5 15 52 203");
//! ```

pub mod bijections;
pub mod enumeration;
pub mod equivalence;
pub mod error;
pub mod pattern;
pub mod perm;
pub mod series;

pub use enumeration::{
    avoiders, count_avoiders, count_sequence, max_length, witness_difference, CountSeq,
    DEFAULT_MAX_N, MAX_N_ENV,
};
pub use equivalence::{
    brute_equivalent, classify_single_dash, equivalent, insertion_criterion, DashCase,
    EquivalenceVerdict,
};
pub use error::{Error, Result};
pub use pattern::{avoids, count_occurrences, is_occurrence, Pogp};
pub use perm::Permutation;
