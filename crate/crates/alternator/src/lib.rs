//! Finding the alternator coin with a balance scale.
//!
//! Among `N` look-alike coins exactly one, the alternator, flips between
//! weighing like a fake (lighter) coin and weighing like a real one each
//! time it lands on the scale. This crate answers, exactly, how many
//! weighings are needed to single it out, in three flavors:
//!
//! * [`jacobsthal`](mod@jacobsthal) — the counting side: Jacobsthal
//!   numbers, the string argument that lower-bounds every strategy, and
//!   the closed-form optimum per starting state.
//! * [`strategy`] — construction of explicit decision trees that meet
//!   those optima, plus simulation of trees against concrete worlds.
//! * [`verifier`] — exhaustive, construction-independent proof that a
//!   tree (from anywhere, including JSON documents) is correct and tight.
//! * [`search`] — an adversarial minimax oracle that recomputes the
//!   optimum from scratch over a class-count abstraction, confirming the
//!   closed form without reusing the construction.
//! * [`model`] — the game mechanics everything above is built on.
//! * [`tree_doc`] — the canonical JSON interchange format for trees.
//!
//! Coins are 0-indexed everywhere.
//!
//! The three routes to the optimum agree by construction and by test:
//!
//! ```
//! use alternator::{min_weighings_bound, optimal_weighings, verify, InitialState, StrategyTree};
//!
//! let state = InitialState::Unknown;
//! let tree = StrategyTree::build(5, state);
//! let report = verify(&tree);
//! assert!(report.is_valid());
//! assert_eq!(report.max_depth, 3);
//! assert_eq!(min_weighings_bound(5, state), 3);
//! assert_eq!(optimal_weighings(5, state, 8), Some(3));
//! ```

#![forbid(unsafe_code)]

pub mod jacobsthal;
pub mod model;
pub mod search;
pub mod strategy;
pub mod tree_doc;
pub mod verifier;

pub use jacobsthal::{
    classic_fake_capacity, count_admissible_strings, enumerate_admissible_strings, jacobsthal,
    jacobsthal_split, min_weighings_bound, trivial_bounds,
};
pub use model::{
    AlternatorState, CoinId, Hypothesis, Identification, InitialState, KnowledgeState, ModelError,
    Outcome, Weighing, World,
};
pub use search::{extract_optimal_tree, optimal_weighings, ClassCounts, Move, Searcher};
pub use strategy::{RunRecord, StrategyNode, StrategyTree};
pub use verifier::{verify, verify_against_bound, VerificationReport};
