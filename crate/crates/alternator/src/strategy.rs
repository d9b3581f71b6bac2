//! Decision trees that find the alternator, and the recursive
//! construction that meets the Jacobsthal lower bound exactly.
//!
//! A [`StrategyTree`] is a ternary tree: every internal node holds a
//! weighing and one child per outcome (`E`, `L`, `R`), every leaf names
//! the coin the path has identified, and branches no consistent world can
//! reach are materialized as explicit [`StrategyNode::Unreachable`] nodes
//! so the tree keeps its uniform shape for serialization and checking.
//!
//! Construction, for a pile known to hold the alternator:
//!
//! * **due-fake pile of n coins** (`J(k) < n <= J(k+1)`): weigh `J(k-1)`
//!   coins against the next `J(k-1)`. A tipped scale puts the alternator
//!   in the lighter pan, now due-real — recurse on that pan. Balance
//!   leaves it among the `m = n - 2*J(k-1)` set-aside coins, still
//!   due-fake.
//! * **due-real pile, n even**: weigh half against half. Balance is
//!   forced, and every weighed coin comes out due-fake — recurse on the
//!   whole pile as a due-fake pile.
//! * **due-real pile, n odd**: set the highest-indexed coin aside and run
//!   the even case on the rest; if every weighing balances until nothing
//!   is left, the set-aside coin is the alternator.
//! * **unknown start**: same opening weighing as the due-real case, but a
//!   tipped scale is now possible and pins the alternator to the lighter
//!   pan in the due-real state.
//!
//! Pans always take the lowest-indexed eligible coins, so the same input
//! always produces the identical tree.

use std::fmt;

use thiserror::Error;

use crate::jacobsthal::jacobsthal_split;
use crate::model::{
    AlternatorState, CoinId, InitialState, ModelError, Outcome, Weighing, World,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("strategy tree needs at least one coin")]
    NoCoins,
    #[error(transparent)]
    InvalidWeighing(#[from] ModelError),
    #[error("leaf names coin {coin} but the tree has {n_coins} coins")]
    LeafOutOfRange { coin: CoinId, n_coins: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("tree is for {tree} coins but the world has {world}")]
    CoinCountMismatch { tree: usize, world: usize },
    #[error("tree assumes starting state '{tree}' but the world starts in '{world}'")]
    StartStateMismatch {
        tree: InitialState,
        world: AlternatorState,
    },
    #[error("reached an unreachable branch after outcomes \"{outcomes}\"")]
    ReachedUnreachable { outcomes: String },
}

/// One node of a strategy tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrategyNode {
    Weigh {
        weighing: Weighing,
        on_equal: Box<StrategyNode>,
        on_left_light: Box<StrategyNode>,
        on_right_light: Box<StrategyNode>,
    },
    Leaf {
        alternator: CoinId,
    },
    /// A branch no consistent world can realize.
    Unreachable,
}

impl StrategyNode {
    pub fn leaf(alternator: usize) -> Self {
        StrategyNode::Leaf {
            alternator: CoinId(alternator),
        }
    }

    pub fn weigh(
        weighing: Weighing,
        on_equal: StrategyNode,
        on_left_light: StrategyNode,
        on_right_light: StrategyNode,
    ) -> Self {
        StrategyNode::Weigh {
            weighing,
            on_equal: Box::new(on_equal),
            on_left_light: Box::new(on_left_light),
            on_right_light: Box::new(on_right_light),
        }
    }

    /// Child for an outcome; `None` on leaves and unreachable nodes.
    pub fn child(&self, outcome: Outcome) -> Option<&StrategyNode> {
        match self {
            StrategyNode::Weigh {
                on_equal,
                on_left_light,
                on_right_light,
                ..
            } => Some(match outcome {
                Outcome::Equal => on_equal,
                Outcome::LeftLight => on_left_light,
                Outcome::RightLight => on_right_light,
            }),
            _ => None,
        }
    }

    /// Longest root-to-leaf weighing count; paths that dead-end in an
    /// unreachable node do not count.
    fn depth(&self) -> Option<u32> {
        match self {
            StrategyNode::Leaf { .. } => Some(0),
            StrategyNode::Unreachable => None,
            StrategyNode::Weigh {
                on_equal,
                on_left_light,
                on_right_light,
                ..
            } => [on_equal, on_left_light, on_right_light]
                .iter()
                .filter_map(|child| child.depth())
                .max()
                .map(|d| d + 1),
        }
    }

    fn validate(&self, n_coins: usize) -> Result<(), TreeError> {
        match self {
            StrategyNode::Leaf { alternator } => {
                if alternator.0 >= n_coins {
                    return Err(TreeError::LeafOutOfRange {
                        coin: *alternator,
                        n_coins,
                    });
                }
            }
            StrategyNode::Unreachable => {}
            StrategyNode::Weigh {
                weighing,
                on_equal,
                on_left_light,
                on_right_light,
            } => {
                weighing.validate_for(n_coins)?;
                on_equal.validate(n_coins)?;
                on_left_light.validate(n_coins)?;
                on_right_light.validate(n_coins)?;
            }
        }
        Ok(())
    }
}

/// Everything recorded while running a strategy against one world.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunRecord {
    pub identified: CoinId,
    pub transcript: Vec<(Weighing, Outcome)>,
}

impl RunRecord {
    /// The outcome letters of the transcript, e.g. `"EEL"`.
    pub fn outcome_string(&self) -> String {
        self.transcript.iter().map(|(_, o)| o.letter()).collect()
    }
}

/// A complete, structurally valid decision tree for one game size and
/// starting assumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyTree {
    n_coins: usize,
    initial_state: InitialState,
    root: StrategyNode,
}

impl StrategyTree {
    /// Wraps a hand-built root, checking coin ranges and pan structure
    /// throughout.
    pub fn new(
        n_coins: usize,
        initial_state: InitialState,
        root: StrategyNode,
    ) -> Result<Self, TreeError> {
        if n_coins == 0 {
            return Err(TreeError::NoCoins);
        }
        root.validate(n_coins)?;
        Ok(StrategyTree {
            n_coins,
            initial_state,
            root,
        })
    }

    /// Builds the optimal-depth tree for `n_coins` coins starting in
    /// `initial_state`. The result has depth exactly
    /// [`min_weighings_bound`](crate::jacobsthal::min_weighings_bound).
    pub fn build(n_coins: usize, initial_state: InitialState) -> StrategyTree {
        assert!(n_coins >= 1, "a game needs at least one coin");
        let coins: Vec<CoinId> = (0..n_coins).map(CoinId).collect();
        let root = match initial_state {
            InitialState::Fake => build_fake(&coins),
            InitialState::Real => build_real(&coins),
            InitialState::Unknown => build_unknown(&coins),
        };
        StrategyTree {
            n_coins,
            initial_state,
            root,
        }
    }

    pub fn n_coins(&self) -> usize {
        self.n_coins
    }

    pub fn initial_state(&self) -> InitialState {
        self.initial_state
    }

    pub fn root(&self) -> &StrategyNode {
        &self.root
    }

    pub fn depth(&self) -> u32 {
        self.root.depth().unwrap_or(0)
    }

    /// Plays the tree against a concrete world and reports the leaf it
    /// lands on together with the full transcript.
    pub fn run(&self, world: &World) -> Result<RunRecord, RunError> {
        if world.n_coins() != self.n_coins {
            return Err(RunError::CoinCountMismatch {
                tree: self.n_coins,
                world: world.n_coins(),
            });
        }
        if !self.initial_state.admits(world.state()) {
            return Err(RunError::StartStateMismatch {
                tree: self.initial_state,
                world: world.state(),
            });
        }
        let mut current = *world;
        let mut node = &self.root;
        let mut transcript = Vec::new();
        loop {
            match node {
                StrategyNode::Leaf { alternator } => {
                    return Ok(RunRecord {
                        identified: *alternator,
                        transcript,
                    });
                }
                StrategyNode::Unreachable => {
                    let outcomes = transcript.iter().map(|(_, o)| o.letter()).collect();
                    return Err(RunError::ReachedUnreachable { outcomes });
                }
                StrategyNode::Weigh { weighing, .. } => {
                    let (outcome, next) = current
                        .weigh(weighing)
                        .expect("tree weighings are validated at construction");
                    transcript.push((weighing.clone(), outcome));
                    current = next;
                    node = node.child(outcome).expect("weigh nodes have children");
                }
            }
        }
    }
}

/// Compact one-node-per-line rendering, mostly for debugging and the
/// simulate command.
impl fmt::Display for StrategyTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rec(
            node: &StrategyNode,
            prefix: &str,
            label: &str,
            f: &mut fmt::Formatter<'_>,
        ) -> fmt::Result {
            match node {
                StrategyNode::Leaf { alternator } => {
                    writeln!(f, "{prefix}{label}alternator {alternator}")
                }
                StrategyNode::Unreachable => writeln!(f, "{prefix}{label}unreachable"),
                StrategyNode::Weigh {
                    weighing,
                    on_equal,
                    on_left_light,
                    on_right_light,
                } => {
                    writeln!(f, "{prefix}{label}weigh {weighing}")?;
                    let deeper = format!("{prefix}  ");
                    rec(on_equal, &deeper, "E: ", f)?;
                    rec(on_left_light, &deeper, "L: ", f)?;
                    rec(on_right_light, &deeper, "R: ", f)
                }
            }
        }
        writeln!(
            f,
            "strategy for {} coins, start '{}'",
            self.n_coins, self.initial_state
        )?;
        rec(&self.root, "", "", f)
    }
}

fn pans(coins: &[CoinId], pan_size: usize) -> Weighing {
    Weighing::new(
        coins[..pan_size].to_vec(),
        coins[pan_size..2 * pan_size].to_vec(),
    )
    .expect("pans cut from distinct sorted coins are valid")
}

/// Pile known to hold the alternator, every hypothesis due-fake.
fn build_fake(coins: &[CoinId]) -> StrategyNode {
    match coins.len() {
        0 => StrategyNode::Unreachable,
        1 => StrategyNode::Leaf {
            alternator: coins[0],
        },
        n => {
            let split = jacobsthal_split(n).expect("two or more coins");
            let weighing = pans(coins, split.pan_size);
            let left = &coins[..split.pan_size];
            let right = &coins[split.pan_size..2 * split.pan_size];
            let leftover = &coins[2 * split.pan_size..];
            StrategyNode::weigh(
                weighing,
                build_fake(leftover),
                build_real(left),
                build_real(right),
            )
        }
    }
}

/// Pile known to hold the alternator, every hypothesis due-real.
fn build_real(coins: &[CoinId]) -> StrategyNode {
    match coins.len() {
        0 => StrategyNode::Unreachable,
        1 => StrategyNode::Leaf {
            alternator: coins[0],
        },
        n if n % 2 == 0 => {
            // All coins go on the scale; a due-real pile cannot tip it.
            StrategyNode::weigh(
                pans(coins, n / 2),
                build_fake(coins),
                StrategyNode::Unreachable,
                StrategyNode::Unreachable,
            )
        }
        n => {
            let (rest, aside) = coins.split_at(n - 1);
            let sub = build_real(rest);
            graft_on_balanced_end(
                sub,
                StrategyNode::Leaf {
                    alternator: aside[0],
                },
            )
        }
    }
}

/// Pile known to hold the alternator, starting state unknown.
fn build_unknown(coins: &[CoinId]) -> StrategyNode {
    match coins.len() {
        0 => StrategyNode::Unreachable,
        1 => StrategyNode::Leaf {
            alternator: coins[0],
        },
        n if n % 2 == 0 => unknown_even(coins),
        n => {
            let (rest, aside) = coins.split_at(n - 1);
            let sub = unknown_even(rest);
            graft_on_balanced_end(
                sub,
                StrategyNode::Leaf {
                    alternator: aside[0],
                },
            )
        }
    }
}

fn unknown_even(coins: &[CoinId]) -> StrategyNode {
    let half = coins.len() / 2;
    // A tipped opening means the alternator just acted fake on the
    // lighter pan, so it sits there in the due-real state.
    StrategyNode::weigh(
        pans(coins, half),
        build_fake(coins),
        build_real(&coins[..half]),
        build_real(&coins[half..]),
    )
}

/// Replaces the unreachable node at the end of the all-balanced path with
/// `replacement`.
///
/// Used for odd piles: the even-sized remainder eliminates every weighed
/// coin along the all-balanced path (balance removes an even number of
/// coins each time, ending at zero), so that path dead-ends in an
/// unreachable node. Setting one coin aside makes the path real again: if
/// every weighing balances, the set-aside coin is the alternator.
fn graft_on_balanced_end(node: StrategyNode, replacement: StrategyNode) -> StrategyNode {
    match node {
        StrategyNode::Unreachable => replacement,
        StrategyNode::Weigh {
            weighing,
            on_equal,
            on_left_light,
            on_right_light,
        } => StrategyNode::Weigh {
            weighing,
            on_equal: Box::new(graft_on_balanced_end(*on_equal, replacement)),
            on_left_light,
            on_right_light,
        },
        StrategyNode::Leaf { .. } => {
            unreachable!("the all-balanced path of an even pile ends unreachable")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobsthal::min_weighings_bound;

    fn w(left: &[usize], right: &[usize]) -> Weighing {
        Weighing::from_indices(left, right).unwrap()
    }

    fn world(n: usize, alt: usize, state: AlternatorState) -> World {
        World::new(n, CoinId(alt), state).unwrap()
    }

    #[test]
    fn three_coins_fake_is_one_weighing() {
        let tree = StrategyTree::build(3, InitialState::Fake);
        let expected = StrategyNode::weigh(
            w(&[0], &[1]),
            StrategyNode::leaf(2),
            StrategyNode::leaf(0),
            StrategyNode::leaf(1),
        );
        assert_eq!(tree.root(), &expected);
        assert_eq!(tree.depth(), 1);
    }

    #[test]
    fn five_coins_unknown_sets_one_aside() {
        let tree = StrategyTree::build(5, InitialState::Unknown);
        assert_eq!(tree.depth(), 3);
        let StrategyNode::Weigh { weighing, on_equal, .. } = tree.root() else {
            panic!("root must weigh");
        };
        assert_eq!(weighing, &w(&[0, 1], &[2, 3]));
        // All-balanced path ends at the set-aside coin.
        let mut node: &StrategyNode = on_equal;
        while let StrategyNode::Weigh { on_equal, .. } = node {
            node = on_equal;
        }
        assert_eq!(node, &StrategyNode::leaf(4));
    }

    #[test]
    fn single_coin_is_a_leaf() {
        let tree = StrategyTree::build(1, InitialState::Unknown);
        assert_eq!(tree.root(), &StrategyNode::leaf(0));
        assert_eq!(tree.depth(), 0);
    }

    #[test]
    fn eleven_coins_fake_needs_three() {
        assert_eq!(StrategyTree::build(11, InitialState::Fake).depth(), 3);
    }

    #[test]
    fn four_coins_unknown_needs_three() {
        assert_eq!(StrategyTree::build(4, InitialState::Unknown).depth(), 3);
    }

    #[test]
    fn depth_matches_bound_up_to_two_hundred() {
        for n in 1..=200usize {
            for state in [InitialState::Fake, InitialState::Real, InitialState::Unknown] {
                assert_eq!(
                    StrategyTree::build(n, state).depth(),
                    min_weighings_bound(n, state),
                    "N={n} state={state}"
                );
            }
        }
    }

    #[test]
    fn run_balanced_case_of_three_fake() {
        let tree = StrategyTree::build(3, InitialState::Fake);
        let record = tree.run(&world(3, 2, AlternatorState::Fake)).unwrap();
        assert_eq!(record.identified, CoinId(2));
        assert_eq!(record.transcript, vec![(w(&[0], &[1]), Outcome::Equal)]);
    }

    #[test]
    fn run_all_balanced_names_the_aside_coin() {
        let tree = StrategyTree::build(5, InitialState::Unknown);
        let record = tree.run(&world(5, 4, AlternatorState::Fake)).unwrap();
        assert_eq!(record.identified, CoinId(4));
        assert_eq!(record.outcome_string(), "EEE");
    }

    #[test]
    fn run_two_coins_real_toggles_then_tips() {
        let tree = StrategyTree::build(2, InitialState::Real);
        let record = tree.run(&world(2, 0, AlternatorState::Real)).unwrap();
        assert_eq!(record.identified, CoinId(0));
        assert_eq!(
            record.transcript,
            vec![
                (w(&[0], &[1]), Outcome::Equal),
                (w(&[0], &[1]), Outcome::LeftLight),
            ]
        );
    }

    #[test]
    fn run_rejects_mismatched_worlds() {
        let tree = StrategyTree::build(3, InitialState::Fake);
        assert_eq!(
            tree.run(&world(4, 0, AlternatorState::Fake)).unwrap_err(),
            RunError::CoinCountMismatch { tree: 3, world: 4 }
        );
        assert_eq!(
            tree.run(&world(3, 0, AlternatorState::Real)).unwrap_err(),
            RunError::StartStateMismatch {
                tree: InitialState::Fake,
                world: AlternatorState::Real,
            }
        );
    }

    #[test]
    fn every_run_identifies_its_world_and_stays_admissible() {
        for n in 1..=60usize {
            for state in [InitialState::Fake, InitialState::Real, InitialState::Unknown] {
                let tree = StrategyTree::build(n, state);
                let mut seen: std::collections::HashMap<String, CoinId> =
                    std::collections::HashMap::new();
                for coin in 0..n {
                    for &start in state.possible_states() {
                        let record = tree.run(&world(n, coin, start)).unwrap();
                        assert_eq!(record.identified, CoinId(coin), "N={n} state={state}");
                        let letters = record.outcome_string();
                        assert!(
                            !letters
                                .as_bytes()
                                .windows(2)
                                .any(|p| p[0] != b'E' && p[1] != b'E'),
                            "adjacent tips in \"{letters}\""
                        );
                        // Outcome strings of different coins never collide.
                        if let Some(prev) = seen.insert(letters.clone(), CoinId(coin)) {
                            assert_eq!(prev, CoinId(coin), "string \"{letters}\" reused");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transcripts_are_enumerated_admissible_strings() {
        use crate::jacobsthal::enumerate_admissible_strings;
        for n in 1..=20usize {
            let tree = StrategyTree::build(n, InitialState::Unknown);
            for coin in 0..n {
                for &start in InitialState::Unknown.possible_states() {
                    let record = tree.run(&world(n, coin, start)).unwrap();
                    let letters = record.outcome_string();
                    let all = enumerate_admissible_strings(letters.len() as u32).unwrap();
                    assert!(all.binary_search(&letters).is_ok());
                }
            }
        }
    }

    #[test]
    fn hand_built_trees_are_validated() {
        let bad_leaf = StrategyTree::new(2, InitialState::Fake, StrategyNode::leaf(2));
        assert_eq!(
            bad_leaf.unwrap_err(),
            TreeError::LeafOutOfRange {
                coin: CoinId(2),
                n_coins: 2
            }
        );
        let bad_weighing = StrategyTree::new(
            2,
            InitialState::Fake,
            StrategyNode::weigh(
                w(&[0], &[5]),
                StrategyNode::Unreachable,
                StrategyNode::leaf(0),
                StrategyNode::leaf(1),
            ),
        );
        assert!(matches!(
            bad_weighing.unwrap_err(),
            TreeError::InvalidWeighing(ModelError::CoinOutOfRange { .. })
        ));
        assert_eq!(
            StrategyTree::new(0, InitialState::Fake, StrategyNode::Unreachable).unwrap_err(),
            TreeError::NoCoins
        );
    }
}
