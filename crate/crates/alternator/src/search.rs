//! Brute-force minimax oracle for the exact optimum.
//!
//! This module computes the minimum guaranteed number of weighings by
//! searching *all* strategies, not by trusting the recursive
//! construction in [`strategy`](crate::strategy). The two must agree;
//! that agreement is what proves the constructed trees optimal.
//!
//! Coins whose surviving hypothesis sets are equal are interchangeable,
//! so a knowledge state quotients down to four counts ([`ClassCounts`]):
//! coins that may be the alternator in either state, in the due-fake
//! state only, in the due-real state only, and coins proven real. A
//! weighing likewise reduces to how many coins of each class sit on each
//! pan ([`Move`]), with the pans ordered canonically since swapping them
//! only relabels two outcomes. This collapses the search space from
//! exponential in the number of coins to polynomial.
//!
//! The game value of a class state does not depend on any budget, so the
//! memo table caches exact values where the search completed and lower
//! bounds where it ran out of budget. Each state is also pre-screened
//! against the admissible-outcome-string count: `c` candidate coins need
//! `c` distinct no-adjacent-tips strings, and candidates that might still
//! be due-real need strings starting with a balance, so a state whose
//! candidates outnumber the strings of the remaining depth is hopeless
//! without expansion.
//!
//! Proven-real coins may be placed on the pans as ballast. Whether
//! ballast is ever *required* for optimality is answered empirically by
//! a test in this module: up to nine coins it never is, but the moves
//! stay in the search so the oracle ranges over every legal strategy.

use std::collections::HashMap;

use crate::jacobsthal::jacobsthal;
use crate::model::{CoinId, InitialState, Outcome, Weighing};
use crate::strategy::{StrategyNode, StrategyTree};

/// A knowledge state quotiented by coin interchangeability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassCounts {
    /// Coins that may be the alternator in either pending state.
    pub both: usize,
    /// Coins that may only be a due-fake alternator.
    pub fake_only: usize,
    /// Coins that may only be a due-real alternator.
    pub real_only: usize,
    /// Coins proven real.
    pub cleared: usize,
}

impl ClassCounts {
    pub fn initial(n_coins: usize, state: InitialState) -> Self {
        assert!(n_coins >= 1, "a game needs at least one coin");
        match state {
            InitialState::Unknown => ClassCounts {
                both: n_coins,
                fake_only: 0,
                real_only: 0,
                cleared: 0,
            },
            InitialState::Fake => ClassCounts {
                both: 0,
                fake_only: n_coins,
                real_only: 0,
                cleared: 0,
            },
            InitialState::Real => ClassCounts {
                both: 0,
                fake_only: 0,
                real_only: n_coins,
                cleared: 0,
            },
        }
    }

    pub fn total(&self) -> usize {
        self.both + self.fake_only + self.real_only + self.cleared
    }

    /// Coins that may still be the alternator.
    pub fn candidates(&self) -> usize {
        self.both + self.fake_only + self.real_only
    }

    /// The alternator's identity is pinned down (its state may stay
    /// unknown, which is fine).
    pub fn is_terminal(&self) -> bool {
        self.candidates() <= 1
    }

    /// State after playing `mv` and observing `outcome`, or `None` if no
    /// surviving hypothesis predicts that outcome.
    pub fn successor(&self, mv: &Move, outcome: Outcome) -> Option<ClassCounts> {
        assert!(mv.is_valid_for(self), "move does not fit this state");
        let on_both = mv.left.both + mv.right.both;
        let on_fake = mv.left.fake_only + mv.right.fake_only;
        let on_real = mv.left.real_only + mv.right.real_only;
        let next = match outcome {
            // Weighed due-fake hypotheses die, weighed due-real
            // hypotheses come out due-fake, off-scale coins are inert.
            Outcome::Equal => ClassCounts {
                both: self.both - on_both,
                fake_only: self.fake_only - on_fake + on_both + on_real,
                real_only: self.real_only - on_real,
                cleared: self.cleared + on_fake,
            },
            // Only a fake-acting coin on the light pan explains a tip;
            // it is now due-real and everyone else is clean.
            Outcome::LeftLight => ClassCounts {
                both: 0,
                fake_only: 0,
                real_only: mv.left.both + mv.left.fake_only,
                cleared: self.total() - mv.left.both - mv.left.fake_only,
            },
            Outcome::RightLight => ClassCounts {
                both: 0,
                fake_only: 0,
                real_only: mv.right.both + mv.right.fake_only,
                cleared: self.total() - mv.right.both - mv.right.fake_only,
            },
        };
        (next.candidates() > 0).then_some(next)
    }
}

/// Coins of each class placed on one pan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PanLoad {
    pub both: usize,
    pub fake_only: usize,
    pub real_only: usize,
    pub cleared: usize,
}

impl PanLoad {
    pub fn size(&self) -> usize {
        self.both + self.fake_only + self.real_only + self.cleared
    }
}

/// A weighing in class-count space. Canonical form keeps
/// `left >= right` (lexicographically) because swapping pans only swaps
/// the two tip outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub left: PanLoad,
    pub right: PanLoad,
}

impl Move {
    pub fn is_valid_for(&self, counts: &ClassCounts) -> bool {
        let size = self.left.size();
        size >= 1
            && size == self.right.size()
            && self.left.both + self.right.both <= counts.both
            && self.left.fake_only + self.right.fake_only <= counts.fake_only
            && self.left.real_only + self.right.real_only <= counts.real_only
            && self.left.cleared + self.right.cleared <= counts.cleared
    }
}

/// Every canonical move available in `counts`, in lexicographic order.
pub fn legal_moves(counts: &ClassCounts) -> Vec<Move> {
    let mut moves = Vec::new();
    let max_pan = counts.total() / 2;
    for pan_size in 1..=max_pan {
        for left in pan_loads(pan_size, counts) {
            let remaining = ClassCounts {
                both: counts.both - left.both,
                fake_only: counts.fake_only - left.fake_only,
                real_only: counts.real_only - left.real_only,
                cleared: counts.cleared - left.cleared,
            };
            for right in pan_loads(pan_size, &remaining) {
                if left >= right {
                    moves.push(Move { left, right });
                }
            }
        }
    }
    moves.sort_unstable();
    moves
}

/// All ways to pick `size` coins from the available classes.
fn pan_loads(size: usize, available: &ClassCounts) -> Vec<PanLoad> {
    let mut loads = Vec::new();
    for both in 0..=available.both.min(size) {
        for fake_only in 0..=available.fake_only.min(size - both) {
            for real_only in 0..=available.real_only.min(size - both - fake_only) {
                let cleared = size - both - fake_only - real_only;
                if cleared <= available.cleared {
                    loads.push(PanLoad {
                        both,
                        fake_only,
                        real_only,
                        cleared,
                    });
                }
            }
        }
    }
    loads
}

#[derive(Debug, Clone, Copy)]
enum Cached {
    Exact(u32),
    AtLeast(u32),
}

/// Memoized minimax search. Reusable across queries; the memo is keyed
/// on [`ClassCounts`] alone because game values are budget-independent.
#[derive(Debug, Default)]
pub struct Searcher {
    memo: HashMap<ClassCounts, Cached>,
}

impl Searcher {
    pub fn new() -> Self {
        Searcher::default()
    }

    /// Exact game value of `counts`, or `None` if it exceeds `budget`.
    pub fn value(&mut self, counts: ClassCounts, budget: u32) -> Option<u32> {
        if counts.is_terminal() {
            return Some(0);
        }
        let floor = self.admissible_lower_bound(&counts);
        if floor > budget {
            return None;
        }
        match self.memo.get(&counts) {
            Some(Cached::Exact(v)) => return (*v <= budget).then_some(*v),
            Some(Cached::AtLeast(lb)) if *lb > budget => return None,
            _ => {}
        }
        if budget == 0 {
            // Non-terminal, so at least one weighing is still needed.
            self.note_at_least(counts, 1);
            return None;
        }

        let mut best: Option<u32> = None;
        for mv in legal_moves(&counts) {
            let child_budget = match best {
                // Only a strictly better move is interesting now.
                Some(b) => b - 2,
                None => budget - 1,
            };
            let mut worst = 0u32;
            let mut reachable = 0usize;
            let mut fits = true;
            for outcome in Outcome::ALL {
                let Some(child) = counts.successor(&mv, outcome) else {
                    continue;
                };
                reachable += 1;
                match self.value(child, child_budget) {
                    Some(v) => worst = worst.max(v),
                    None => {
                        fits = false;
                        break;
                    }
                }
            }
            if fits && reachable > 0 {
                best = Some(1 + worst);
                if best == Some(floor) {
                    break; // provably optimal already
                }
            }
        }

        match best {
            Some(v) => {
                self.memo.insert(counts, Cached::Exact(v));
                Some(v)
            }
            None => {
                self.note_at_least(counts, budget + 1);
                None
            }
        }
    }

    /// Lexicographically smallest canonical move achieving `value`.
    pub fn best_move(&mut self, counts: ClassCounts, value: u32) -> Option<Move> {
        debug_assert!(value >= 1 && !counts.is_terminal());
        for mv in legal_moves(&counts) {
            let mut worst = 0u32;
            let mut reachable = 0usize;
            let mut fits = true;
            for outcome in Outcome::ALL {
                let Some(child) = counts.successor(&mv, outcome) else {
                    continue;
                };
                reachable += 1;
                match self.value(child, value - 1) {
                    Some(v) => worst = worst.max(v),
                    None => {
                        fits = false;
                        break;
                    }
                }
            }
            if fits && reachable > 0 && 1 + worst == value {
                return Some(mv);
            }
        }
        None
    }

    fn note_at_least(&mut self, counts: ClassCounts, bound: u32) {
        let entry = self.memo.entry(counts).or_insert(Cached::AtLeast(bound));
        if let Cached::AtLeast(existing) = entry {
            *existing = (*existing).max(bound);
        }
    }

    /// Counting floor on the value: every candidate needs its own
    /// admissible outcome string of the remaining length, and every
    /// possibly-due-real candidate needs one that starts with a balance.
    fn admissible_lower_bound(&self, counts: &ClassCounts) -> u32 {
        fn smallest_w(coins: usize, shift: u32) -> u32 {
            let mut w = 0u32;
            while jacobsthal(w + shift).expect("small indices") < coins as u64 {
                w += 1;
            }
            w
        }
        if counts.candidates() <= 1 {
            return 0;
        }
        let all = smallest_w(counts.candidates(), 2);
        let due_real = smallest_w(counts.both + counts.real_only, 1);
        all.max(due_real)
    }
}

/// Exact minimum number of weighings that guarantees finding the
/// alternator, or `None` if it exceeds `budget`.
pub fn optimal_weighings(n_coins: usize, state: InitialState, budget: u32) -> Option<u32> {
    Searcher::new().value(ClassCounts::initial(n_coins, state), budget)
}

/// Materializes one optimal policy as a concrete tree, assigning
/// lowest-indexed coins to class slots at every node. `None` if the
/// optimum exceeds `budget`.
pub fn extract_optimal_tree(
    n_coins: usize,
    state: InitialState,
    budget: u32,
) -> Option<StrategyTree> {
    let mut searcher = Searcher::new();
    let counts = ClassCounts::initial(n_coins, state);
    searcher.value(counts, budget)?;
    let assignment = Assignment::initial(n_coins, state);
    let root = extract_node(&mut searcher, &assignment, budget);
    Some(
        StrategyTree::new(n_coins, state, root)
            .expect("extracted trees are structurally valid by construction"),
    )
}

/// Concrete coins backing each class while a policy is materialized.
#[derive(Debug, Clone)]
struct Assignment {
    both: Vec<CoinId>,
    fake_only: Vec<CoinId>,
    real_only: Vec<CoinId>,
    cleared: Vec<CoinId>,
}

impl Assignment {
    fn initial(n_coins: usize, state: InitialState) -> Self {
        let coins: Vec<CoinId> = (0..n_coins).map(CoinId).collect();
        let empty = Assignment {
            both: Vec::new(),
            fake_only: Vec::new(),
            real_only: Vec::new(),
            cleared: Vec::new(),
        };
        match state {
            InitialState::Unknown => Assignment {
                both: coins,
                ..empty
            },
            InitialState::Fake => Assignment {
                fake_only: coins,
                ..empty
            },
            InitialState::Real => Assignment {
                real_only: coins,
                ..empty
            },
        }
    }

    fn counts(&self) -> ClassCounts {
        ClassCounts {
            both: self.both.len(),
            fake_only: self.fake_only.len(),
            real_only: self.real_only.len(),
            cleared: self.cleared.len(),
        }
    }

    fn sole_candidate(&self) -> CoinId {
        *self
            .both
            .iter()
            .chain(&self.fake_only)
            .chain(&self.real_only)
            .next()
            .expect("terminal states keep exactly one candidate")
    }

    /// Splits each class list into (left pan, right pan, off scale)
    /// following the move's counts, lowest indices first.
    fn apply(&self, mv: &Move) -> (Weighing, [Assignment; 3]) {
        fn cut(coins: &[CoinId], l: usize, r: usize) -> (Vec<CoinId>, Vec<CoinId>, Vec<CoinId>) {
            (
                coins[..l].to_vec(),
                coins[l..l + r].to_vec(),
                coins[l + r..].to_vec(),
            )
        }
        let (both_l, both_r, both_off) = cut(&self.both, mv.left.both, mv.right.both);
        let (fake_l, fake_r, fake_off) =
            cut(&self.fake_only, mv.left.fake_only, mv.right.fake_only);
        let (real_l, real_r, real_off) =
            cut(&self.real_only, mv.left.real_only, mv.right.real_only);
        let (clear_l, clear_r, _) = cut(&self.cleared, mv.left.cleared, mv.right.cleared);

        let collect = |parts: &[&[CoinId]]| -> Vec<CoinId> {
            let mut v: Vec<CoinId> = parts.iter().flat_map(|p| p.iter().copied()).collect();
            v.sort_unstable();
            v
        };
        let left_pan = collect(&[&both_l, &fake_l, &real_l, &clear_l]);
        let right_pan = collect(&[&both_r, &fake_r, &real_r, &clear_r]);
        let weighing = Weighing::new(left_pan.clone(), right_pan.clone())
            .expect("class slices are disjoint");

        let on_equal = Assignment {
            both: both_off.clone(),
            fake_only: collect(&[&fake_off, &both_l, &both_r, &real_l, &real_r]),
            real_only: real_off.clone(),
            cleared: collect(&[&self.cleared, &fake_l, &fake_r]),
        };
        let survivors_left = collect(&[&both_l, &fake_l]);
        let on_left = Assignment {
            both: Vec::new(),
            fake_only: Vec::new(),
            real_only: survivors_left.clone(),
            cleared: all_except(self, &survivors_left),
        };
        let survivors_right = collect(&[&both_r, &fake_r]);
        let on_right = Assignment {
            both: Vec::new(),
            fake_only: Vec::new(),
            real_only: survivors_right.clone(),
            cleared: all_except(self, &survivors_right),
        };
        (weighing, [on_equal, on_left, on_right])
    }
}

fn all_except(assignment: &Assignment, survivors: &[CoinId]) -> Vec<CoinId> {
    let mut v: Vec<CoinId> = assignment
        .both
        .iter()
        .chain(&assignment.fake_only)
        .chain(&assignment.real_only)
        .chain(&assignment.cleared)
        .copied()
        .filter(|c| !survivors.contains(c))
        .collect();
    v.sort_unstable();
    v
}

fn extract_node(searcher: &mut Searcher, assignment: &Assignment, budget: u32) -> StrategyNode {
    let counts = assignment.counts();
    if counts.is_terminal() {
        return StrategyNode::Leaf {
            alternator: assignment.sole_candidate(),
        };
    }
    let value = searcher
        .value(counts, budget)
        .expect("extraction only descends states within budget");
    let mv = searcher
        .best_move(counts, value)
        .expect("a non-terminal state with a finite value has an optimal move");
    let (weighing, branches) = assignment.apply(&mv);
    let [on_equal, on_left, on_right] = branches;
    let child = |searcher: &mut Searcher, outcome: Outcome, branch: &Assignment| {
        if counts.successor(&mv, outcome).is_some() {
            extract_node(searcher, branch, value - 1)
        } else {
            StrategyNode::Unreachable
        }
    };
    let on_equal = child(searcher, Outcome::Equal, &on_equal);
    let on_left = child(searcher, Outcome::LeftLight, &on_left);
    let on_right = child(searcher, Outcome::RightLight, &on_right);
    StrategyNode::weigh(weighing, on_equal, on_left, on_right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobsthal::min_weighings_bound;
    use crate::model::{AlternatorState, Hypothesis, KnowledgeState};
    use crate::verifier::verify;

    const ALL_STATES: [InitialState; 3] = [
        InitialState::Fake,
        InitialState::Real,
        InitialState::Unknown,
    ];

    fn pan(both: usize, fake_only: usize, real_only: usize, cleared: usize) -> PanLoad {
        PanLoad {
            both,
            fake_only,
            real_only,
            cleared,
        }
    }

    #[test]
    fn successor_examples() {
        let start = ClassCounts::initial(4, InitialState::Unknown);
        let mv = Move {
            left: pan(2, 0, 0, 0),
            right: pan(2, 0, 0, 0),
        };
        assert_eq!(
            start.successor(&mv, Outcome::LeftLight),
            Some(ClassCounts {
                both: 0,
                fake_only: 0,
                real_only: 2,
                cleared: 2
            })
        );
        assert_eq!(
            start.successor(&mv, Outcome::Equal),
            Some(ClassCounts {
                both: 0,
                fake_only: 4,
                real_only: 0,
                cleared: 0
            })
        );

        // Both remaining due-fake candidates on the scale: balance would
        // eliminate everyone, so that outcome is impossible.
        let two_fake = ClassCounts {
            both: 0,
            fake_only: 2,
            real_only: 0,
            cleared: 2,
        };
        let face_off = Move {
            left: pan(0, 1, 0, 0),
            right: pan(0, 1, 0, 0),
        };
        assert_eq!(two_fake.successor(&face_off, Outcome::Equal), None);
    }

    #[test]
    fn terminal_states() {
        let t = |both, fake_only, real_only, cleared| ClassCounts {
            both,
            fake_only,
            real_only,
            cleared,
        };
        assert!(t(1, 0, 0, 3).is_terminal());
        assert!(t(0, 0, 1, 3).is_terminal());
        assert!(!t(0, 2, 0, 2).is_terminal());
    }

    #[test]
    fn optimal_values_match_known_cases() {
        assert_eq!(optimal_weighings(4, InitialState::Unknown, 5), Some(3));
        assert_eq!(optimal_weighings(3, InitialState::Fake, 5), Some(1));
        assert_eq!(optimal_weighings(1, InitialState::Fake, 0), Some(0));
        assert_eq!(optimal_weighings(4, InitialState::Unknown, 2), None);
    }

    #[test]
    fn values_are_monotone_in_coin_count() {
        for state in ALL_STATES {
            let mut previous = 0;
            for n in 1..=9usize {
                let value = optimal_weighings(n, state, 8).unwrap();
                assert!(value >= previous, "N={n} state={state}");
                previous = value;
            }
        }
    }

    /// Embeds counts into a concrete knowledge state on lowest indices:
    /// both-class coins first, then fake-only, real-only, cleared.
    fn embed(counts: &ClassCounts) -> KnowledgeState {
        let mut hypotheses = Vec::new();
        let mut next = 0usize;
        for _ in 0..counts.both {
            hypotheses.push(Hypothesis::new(next, AlternatorState::Fake));
            hypotheses.push(Hypothesis::new(next, AlternatorState::Real));
            next += 1;
        }
        for _ in 0..counts.fake_only {
            hypotheses.push(Hypothesis::new(next, AlternatorState::Fake));
            next += 1;
        }
        for _ in 0..counts.real_only {
            hypotheses.push(Hypothesis::new(next, AlternatorState::Real));
            next += 1;
        }
        KnowledgeState::from_hypotheses(counts.total(), hypotheses)
    }

    /// Quotients a concrete knowledge state back to counts.
    fn classes_of(ks: &KnowledgeState) -> ClassCounts {
        let mut counts = ClassCounts {
            both: 0,
            fake_only: 0,
            real_only: 0,
            cleared: 0,
        };
        for coin in 0..ks.n_coins() {
            let fake = ks.contains(&Hypothesis::new(coin, AlternatorState::Fake));
            let real = ks.contains(&Hypothesis::new(coin, AlternatorState::Real));
            match (fake, real) {
                (true, true) => counts.both += 1,
                (true, false) => counts.fake_only += 1,
                (false, true) => counts.real_only += 1,
                (false, false) => counts.cleared += 1,
            }
        }
        counts
    }

    /// The concrete weighing a move denotes under the lowest-index
    /// embedding.
    fn embed_move(counts: &ClassCounts, mv: &Move) -> Weighing {
        let b0 = 0;
        let f0 = counts.both;
        let r0 = f0 + counts.fake_only;
        let x0 = r0 + counts.real_only;
        let mut left: Vec<usize> = Vec::new();
        let mut right: Vec<usize> = Vec::new();
        let mut take = |base: usize, l: usize, r: usize| {
            left.extend(base..base + l);
            right.extend(base + l..base + l + r);
        };
        take(b0, mv.left.both, mv.right.both);
        take(f0, mv.left.fake_only, mv.right.fake_only);
        take(r0, mv.left.real_only, mv.right.real_only);
        take(x0, mv.left.cleared, mv.right.cleared);
        Weighing::from_indices(&left, &right).unwrap()
    }

    #[test]
    fn successor_agrees_with_knowledge_updates() {
        // Every reachable-looking count split of up to five coins, every
        // canonical move, every outcome.
        for total in 1..=5usize {
            for both in 0..=total {
                for fake_only in 0..=(total - both) {
                    for real_only in 0..=(total - both - fake_only) {
                        let counts = ClassCounts {
                            both,
                            fake_only,
                            real_only,
                            cleared: total - both - fake_only - real_only,
                        };
                        let ks = embed(&counts);
                        for mv in legal_moves(&counts) {
                            let weighing = embed_move(&counts, &mv);
                            for outcome in Outcome::ALL {
                                let expected = {
                                    let updated = ks.update(&weighing, outcome);
                                    (!updated.is_empty()).then(|| classes_of(&updated))
                                };
                                assert_eq!(
                                    counts.successor(&mv, outcome),
                                    expected,
                                    "{counts:?} {mv:?} {outcome:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn extracted_trees_verify_at_the_optimum() {
        let tree = extract_optimal_tree(4, InitialState::Unknown, 4).unwrap();
        let report = verify(&tree);
        assert!(report.is_valid(), "{report}");
        assert_eq!(report.max_depth, 3);

        let tree = extract_optimal_tree(1, InitialState::Fake, 0).unwrap();
        assert_eq!(tree.root(), &StrategyNode::leaf(0));

        let tree = extract_optimal_tree(5, InitialState::Real, 4).unwrap();
        let report = verify(&tree);
        assert!(report.is_valid(), "{report}");
        assert_eq!(report.max_depth, 3);

        assert!(extract_optimal_tree(4, InitialState::Unknown, 2).is_none());
    }

    #[test]
    fn extracted_trees_verify_for_small_sizes() {
        for n in 1..=7usize {
            for state in ALL_STATES {
                let bound = min_weighings_bound(n, state);
                let tree = extract_optimal_tree(n, state, bound).unwrap();
                let report = verify(&tree);
                assert!(report.is_valid(), "N={n} state={state}: {report}");
                assert_eq!(report.max_depth, bound, "N={n} state={state}");
            }
        }
    }

    /// Budget-limited minimax with a move filter, sharing successor and
    /// move generation with the real searcher but none of its caching,
    /// used to probe whether ballast coins are ever needed.
    fn plain_value(
        counts: ClassCounts,
        budget: u32,
        allow_ballast: bool,
        memo: &mut HashMap<(ClassCounts, u32), Option<u32>>,
    ) -> Option<u32> {
        if counts.is_terminal() {
            return Some(0);
        }
        if budget == 0 {
            return None;
        }
        if let Some(cached) = memo.get(&(counts, budget)) {
            return *cached;
        }
        let mut best: Option<u32> = None;
        for mv in legal_moves(&counts) {
            if !allow_ballast && (mv.left.cleared > 0 || mv.right.cleared > 0) {
                continue;
            }
            let mut worst = 0u32;
            let mut feasible = true;
            for outcome in Outcome::ALL {
                let Some(child) = counts.successor(&mv, outcome) else {
                    continue;
                };
                match plain_value(child, budget - 1, allow_ballast, memo) {
                    Some(v) => worst = worst.max(v),
                    None => {
                        feasible = false;
                        break;
                    }
                }
            }
            if feasible {
                let value = 1 + worst;
                if best.is_none_or(|b| value < b) {
                    best = Some(value);
                }
            }
        }
        memo.insert((counts, budget), best);
        best
    }

    #[test]
    fn ballast_is_never_required_at_small_sizes() {
        let mut with = HashMap::new();
        let mut without = HashMap::new();
        for n in 1..=9usize {
            for state in ALL_STATES {
                let counts = ClassCounts::initial(n, state);
                assert_eq!(
                    plain_value(counts, 7, true, &mut with),
                    plain_value(counts, 7, false, &mut without),
                    "N={n} state={state}"
                );
            }
        }
    }
}
