//! Exact computation in Grigorchuk's group `G` acting on the rooted binary
//! tree, together with a finite-depth model of its lift to the mapping class
//! group of a pants-tree surface and the induced permutation action on the
//! homology of an infinite-genus surface built from "shoes".
//!
//! The crate is organized around the tree:
//!
//! - [`words`]: binary words, the vertices of the tree.
//! - [`group`]: the four generators `a, b, c, d`, word reduction, the word
//!   problem, element orders.
//! - [`portrait`]: swap-vertex portraits and closed-form swap enumeration.
//! - [`schreier`]: level action graphs.
//! - [`pants`]: lifted elements carrying Dehn-twist coordinates and the
//!   cocycle product; kernel vectors of relators.
//! - [`homology`]: the shoe permutation representation and its action on
//!   truncated first homology.
//! - [`evidence`]: torsion sampling, ball growth, freeness refutations.
//! - [`verify`]: the aggregated self-check suite behind `grig verify`.
//!
//! All values are immutable; every public operation is a pure function and is
//! safe to call concurrently.

pub mod emit;
pub mod evidence;
pub mod group;
pub mod homology;
pub mod pants;
pub mod portrait;
pub mod schreier;
pub mod verify;
pub mod words;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word literal contained something other than the expected alphabet.
    #[error("invalid character {found:?}; expected one of {expected}")]
    InvalidCharacter { found: char, expected: &'static str },
    /// A 1-based bit index fell outside the word.
    #[error("index {index} out of range for word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    /// A depth/level/size parameter exceeded the configured cap.
    #[error("{what}={requested} exceeds cap {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    /// The word-problem recursion ran out of budget. The contraction
    /// property guarantees termination, so hitting this signals a bug.
    #[error("recursion budget exhausted ({budget} calls)")]
    RecursionBudgetExceeded { budget: u64 },
    /// An element order exceeded the configured exponent cap.
    #[error("order exceeds 2^{cap_exp}")]
    CapExceeded { cap_exp: u32 },
    /// Two lifted elements of different depths were multiplied.
    #[error("depth mismatch: {left} vs {right}")]
    DepthMismatch { left: usize, right: usize },
    /// A kernel operation was handed a word that is nontrivial in G.
    #[error("word {word:?} is not a relator (nontrivial in G)")]
    NotARelator { word: String },
}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

pub use group::{Gen, GenWord, ReducedWord, Sections};
pub use pants::{LiftedElement, PantsClass};
pub use portrait::Portrait;
pub use schreier::SchreierGraph;
pub use words::{BinaryWord, LevelSet};

/// Default cap on tree depth (level enumeration, portraits, Schreier graphs).
pub const DEFAULT_DEPTH_CAP: usize = 24;
/// Default cap on element orders, as an exponent: orders up to `2^20`.
pub const DEFAULT_ORDER_CAP_EXP: u32 = 20;
/// Default budget for the word-problem recursion, in calls.
pub const DEFAULT_RECURSION_BUDGET: u64 = 1_000_000;
/// Default cap on ball radius for growth enumeration.
pub const DEFAULT_BALL_CAP: usize = 12;
