//! Exhaustive proof that a strategy tree is correct.
//!
//! The check is independent of how the tree was built: every world
//! consistent with the tree's starting assumption is simulated through
//! the tree, and the tree is valid only if each one ends at a leaf naming
//! its alternator. A second pass walks the tree with knowledge-state
//! updates and confirms that every branch marked unreachable really
//! admits no hypothesis. Worlds whose coin never reaches the scale on
//! their path behave identically in both starting states, so for the
//! unknown start those pairs are checked once.

use std::fmt;

use crate::jacobsthal::min_weighings_bound;
use crate::model::{CoinId, Hypothesis, KnowledgeState, Outcome, World};
use crate::strategy::{RunError, StrategyNode, StrategyTree};

/// One world the tree got wrong, and how.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationFailure {
    pub world: World,
    pub description: String,
}

/// Outcome of [`verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Longest transcript any consistent world realizes.
    pub max_depth: u32,
    /// Number of distinct world behaviors simulated.
    pub worlds_checked: usize,
    pub failures: Vec<VerificationFailure>,
    /// Realized outcome strings with two adjacent tips, which the game
    /// mechanics forbid.
    pub path_string_violations: Vec<String>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty() && self.path_string_violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "valid: {}", self.is_valid())?;
        writeln!(f, "worlds checked: {}", self.worlds_checked)?;
        writeln!(f, "max depth: {}", self.max_depth)?;
        for failure in &self.failures {
            writeln!(
                f,
                "counterexample: {} — {}",
                failure.world, failure.description
            )?;
        }
        for letters in &self.path_string_violations {
            writeln!(f, "inadmissible outcome string: \"{letters}\"")?;
        }
        Ok(())
    }
}

/// Simulates every consistent world through the tree and inspects every
/// unreachable branch.
pub fn verify(tree: &StrategyTree) -> VerificationReport {
    let mut report = VerificationReport {
        max_depth: 0,
        worlds_checked: 0,
        failures: Vec::new(),
        path_string_violations: Vec::new(),
    };

    for coin in 0..tree.n_coins() {
        let mut states = tree.initial_state().possible_states().iter();
        let first = *states.next().expect("every start admits a state");
        let world = World::new(tree.n_coins(), CoinId(coin), first)
            .expect("world enumeration stays in range");
        let coin_was_weighed = check_world(tree, &world, &mut report);
        report.worlds_checked += 1;
        for &state in states {
            // A coin that never reached the scale produces the same
            // transcript in either starting state.
            if !coin_was_weighed {
                continue;
            }
            let world = World::new(tree.n_coins(), CoinId(coin), state)
                .expect("world enumeration stays in range");
            check_world(tree, &world, &mut report);
            report.worlds_checked += 1;
        }
    }

    let start = KnowledgeState::initial(tree.n_coins(), tree.initial_state());
    let origins = start
        .hypotheses()
        .map(|h| {
            let world = World::new(tree.n_coins(), h.coin, h.state)
                .expect("initial hypotheses are in range");
            (h, world)
        })
        .collect();
    check_unreachable_branches(tree.root(), start, origins, String::new(), &mut report);

    report
}

/// `true` iff the world's own coin appeared on the scale along its path.
fn check_world(tree: &StrategyTree, world: &World, report: &mut VerificationReport) -> bool {
    match tree.run(world) {
        Ok(record) => {
            report.max_depth = report.max_depth.max(record.transcript.len() as u32);
            let letters = record.outcome_string();
            if letters
                .as_bytes()
                .windows(2)
                .any(|pair| pair[0] != b'E' && pair[1] != b'E')
            {
                report.path_string_violations.push(letters);
            }
            if record.identified != world.alternator() {
                report.failures.push(VerificationFailure {
                    world: *world,
                    description: format!(
                        "identified coin {} after outcomes \"{}\"",
                        record.identified,
                        record.outcome_string()
                    ),
                });
            }
            record
                .transcript
                .iter()
                .any(|(weighing, _)| weighing.contains(world.alternator()))
        }
        Err(RunError::ReachedUnreachable { outcomes }) => {
            report.failures.push(VerificationFailure {
                world: *world,
                description: format!("ran into an unreachable branch after \"{outcomes}\""),
            });
            // Cannot rule out state-dependence of the path.
            true
        }
        Err(other) => unreachable!("enumerated worlds always match the tree: {other}"),
    }
}

/// Descends with knowledge updates; an unreachable node reached with a
/// non-empty hypothesis set is a failure. `origins` carries, for each
/// surviving hypothesis, the starting world it came from so failures can
/// name a concrete counterexample.
fn check_unreachable_branches(
    node: &StrategyNode,
    knowledge: KnowledgeState,
    origins: Vec<(Hypothesis, World)>,
    path: String,
    report: &mut VerificationReport,
) {
    match node {
        StrategyNode::Leaf { .. } => {}
        StrategyNode::Unreachable => {
            if !knowledge.is_empty() {
                let world = origins
                    .first()
                    .map(|(_, world)| *world)
                    .expect("non-empty knowledge has an origin");
                report.failures.push(VerificationFailure {
                    world,
                    description: format!(
                        "branch \"{path}\" is marked unreachable but {} hypotheses survive",
                        knowledge.len()
                    ),
                });
            }
        }
        StrategyNode::Weigh { weighing, .. } => {
            for outcome in Outcome::ALL {
                let next = knowledge.update(weighing, outcome);
                let next_origins = origins
                    .iter()
                    .filter_map(|(h, origin)| {
                        let world = World::new(knowledge.n_coins(), h.coin, h.state)
                            .expect("hypotheses stay in range");
                        let (o, advanced) = world
                            .weigh(weighing)
                            .expect("tree weighings are validated at construction");
                        (o == outcome).then(|| {
                            (
                                Hypothesis {
                                    coin: advanced.alternator(),
                                    state: advanced.state(),
                                },
                                *origin,
                            )
                        })
                    })
                    .collect();
                let mut next_path = path.clone();
                next_path.push(outcome.letter());
                check_unreachable_branches(
                    node.child(outcome).expect("weigh nodes have children"),
                    next,
                    next_origins,
                    next_path,
                    report,
                );
            }
        }
    }
}

/// Valid and within the optimal bound for its size and starting state.
pub fn verify_against_bound(tree: &StrategyTree) -> bool {
    let report = verify(tree);
    report.is_valid()
        && report.max_depth <= min_weighings_bound(tree.n_coins(), tree.initial_state())
}
