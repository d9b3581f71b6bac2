//! Exact mechanics of the alternator game.
//!
//! One coin among `n_coins` is the alternator. Every time it sits on the
//! balance scale it flips between two behaviors: acting *fake* (lighter
//! than a real coin, so its pan is the light one) and acting *real*
//! (indistinguishable from the others). All other coins are real and
//! weigh the same, and pans always hold the same number of coins, so the
//! outcome of a weighing depends only on where the alternator is and
//! which behavior it is due for:
//!
//! * alternator off the scale → the pans balance, its state is untouched;
//! * alternator on a pan, due to act fake → that pan is lighter, and the
//!   coin is now due to act real;
//! * alternator on a pan, due to act real → the pans balance, and the coin
//!   is now due to act fake.
//!
//! [`World`] is the ground truth used in simulation. [`KnowledgeState`] is
//! the solver's view: the set of `(coin, state)` pairs still consistent
//! with every outcome observed so far. Updating knowledge is hypothesis
//! filtering — each hypothesis predicts exactly one outcome, so the three
//! possible outcomes partition the hypothesis set.
//!
//! Coins are 0-indexed throughout.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// 0-based index of a coin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoinId(pub usize);

impl fmt::Display for CoinId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The behavior the alternator will show the next time it is weighed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlternatorState {
    /// Will act lighter than a real coin.
    Fake,
    /// Will act like a real coin.
    Real,
}

impl AlternatorState {
    /// State after one appearance on the scale.
    pub fn toggled(self) -> Self {
        match self {
            AlternatorState::Fake => AlternatorState::Real,
            AlternatorState::Real => AlternatorState::Fake,
        }
    }

    pub fn letter(self) -> char {
        match self {
            AlternatorState::Fake => 'f',
            AlternatorState::Real => 'r',
        }
    }
}

impl fmt::Display for AlternatorState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// What is known about the alternator's state before the first weighing.
///
/// `Fake` and `Real` are the deterministic variants; `Unknown` means the
/// starting behavior is not given, so both states must be entertained for
/// every coin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InitialState {
    Fake,
    Real,
    Unknown,
}

impl InitialState {
    /// Concrete starting states a world may have under this assumption.
    pub fn possible_states(self) -> &'static [AlternatorState] {
        match self {
            InitialState::Fake => &[AlternatorState::Fake],
            InitialState::Real => &[AlternatorState::Real],
            InitialState::Unknown => &[AlternatorState::Fake, AlternatorState::Real],
        }
    }

    pub fn admits(self, state: AlternatorState) -> bool {
        self.possible_states().contains(&state)
    }

    pub fn letter(self) -> char {
        match self {
            InitialState::Fake => 'f',
            InitialState::Real => 'r',
            InitialState::Unknown => 'a',
        }
    }

    pub fn from_letter(letter: char) -> Option<Self> {
        match letter {
            'f' => Some(InitialState::Fake),
            'r' => Some(InitialState::Real),
            'a' => Some(InitialState::Unknown),
            _ => None,
        }
    }
}

impl fmt::Display for InitialState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Result of one weighing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    /// Pans balance (letter `E`).
    Equal,
    /// Left pan is lighter (letter `L`).
    LeftLight,
    /// Right pan is lighter (letter `R`).
    RightLight,
}

impl Outcome {
    pub const ALL: [Outcome; 3] = [Outcome::Equal, Outcome::LeftLight, Outcome::RightLight];

    pub fn letter(self) -> char {
        match self {
            Outcome::Equal => 'E',
            Outcome::LeftLight => 'L',
            Outcome::RightLight => 'R',
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Which pan a coin sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pan {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a weighing needs at least one coin per pan")]
    EmptyPans,
    #[error("pans must hold the same number of coins (left {left}, right {right})")]
    UnequalPans { left: usize, right: usize },
    #[error("coin {coin} appears more than once in the weighing")]
    RepeatedCoin { coin: CoinId },
    #[error("coin {coin} is out of range for {n_coins} coins")]
    CoinOutOfRange { coin: CoinId, n_coins: usize },
    #[error("a world needs at least one coin")]
    NoCoins,
}

/// Two disjoint, equally sized sets of coins placed on a balance scale.
///
/// Pans of different sizes are rejected outright: with identical real
/// coins an unequal weighing says nothing about the alternator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weighing {
    left: Vec<CoinId>,
    right: Vec<CoinId>,
}

impl Weighing {
    /// Builds a weighing, sorting each pan. Fails on empty or unequal
    /// pans and on any coin appearing twice.
    pub fn new(mut left: Vec<CoinId>, mut right: Vec<CoinId>) -> Result<Self, ModelError> {
        if left.is_empty() || right.is_empty() {
            return Err(ModelError::EmptyPans);
        }
        if left.len() != right.len() {
            return Err(ModelError::UnequalPans {
                left: left.len(),
                right: right.len(),
            });
        }
        left.sort_unstable();
        right.sort_unstable();
        let mut seen = BTreeSet::new();
        for &coin in left.iter().chain(right.iter()) {
            if !seen.insert(coin) {
                return Err(ModelError::RepeatedCoin { coin });
            }
        }
        Ok(Weighing { left, right })
    }

    /// Convenience constructor from raw indices.
    pub fn from_indices(left: &[usize], right: &[usize]) -> Result<Self, ModelError> {
        Weighing::new(
            left.iter().copied().map(CoinId).collect(),
            right.iter().copied().map(CoinId).collect(),
        )
    }

    pub fn left(&self) -> &[CoinId] {
        &self.left
    }

    pub fn right(&self) -> &[CoinId] {
        &self.right
    }

    pub fn pan_size(&self) -> usize {
        self.left.len()
    }

    /// Pan holding `coin`, if any.
    pub fn pan_of(&self, coin: CoinId) -> Option<Pan> {
        if self.left.binary_search(&coin).is_ok() {
            Some(Pan::Left)
        } else if self.right.binary_search(&coin).is_ok() {
            Some(Pan::Right)
        } else {
            None
        }
    }

    pub fn contains(&self, coin: CoinId) -> bool {
        self.pan_of(coin).is_some()
    }

    /// Checks that every coin id is valid for a game of `n_coins` coins.
    pub fn validate_for(&self, n_coins: usize) -> Result<(), ModelError> {
        for &coin in self.left.iter().chain(self.right.iter()) {
            if coin.0 >= n_coins {
                return Err(ModelError::CoinOutOfRange { coin, n_coins });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Weighing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_pan = |pan: &[CoinId]| {
            pan.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{}] v [{}]", fmt_pan(&self.left), fmt_pan(&self.right))
    }
}

/// Ground truth for simulation: which coin is the alternator and what it
/// will do next time it is weighed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct World {
    n_coins: usize,
    alternator: CoinId,
    state: AlternatorState,
}

impl World {
    pub fn new(
        n_coins: usize,
        alternator: CoinId,
        state: AlternatorState,
    ) -> Result<Self, ModelError> {
        if n_coins == 0 {
            return Err(ModelError::NoCoins);
        }
        if alternator.0 >= n_coins {
            return Err(ModelError::CoinOutOfRange {
                coin: alternator,
                n_coins,
            });
        }
        Ok(World {
            n_coins,
            alternator,
            state,
        })
    }

    pub fn n_coins(&self) -> usize {
        self.n_coins
    }

    pub fn alternator(&self) -> CoinId {
        self.alternator
    }

    pub fn state(&self) -> AlternatorState {
        self.state
    }

    /// Performs one weighing. Deterministic: the outcome and the next
    /// world are fixed by the current world and the chosen pans.
    pub fn weigh(&self, weighing: &Weighing) -> Result<(Outcome, World), ModelError> {
        weighing.validate_for(self.n_coins)?;
        let Some(pan) = weighing.pan_of(self.alternator) else {
            return Ok((Outcome::Equal, *self));
        };
        let next = World {
            state: self.state.toggled(),
            ..*self
        };
        let outcome = match (self.state, pan) {
            (AlternatorState::Fake, Pan::Left) => Outcome::LeftLight,
            (AlternatorState::Fake, Pan::Right) => Outcome::RightLight,
            (AlternatorState::Real, _) => Outcome::Equal,
        };
        Ok((outcome, next))
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alternator={} state={} of {} coins",
            self.alternator, self.state, self.n_coins
        )
    }
}

/// One still-possible account of the hidden coin: its identity and the
/// behavior it is due for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypothesis {
    pub coin: CoinId,
    pub state: AlternatorState,
}

impl Hypothesis {
    pub fn new(coin: usize, state: AlternatorState) -> Self {
        Hypothesis {
            coin: CoinId(coin),
            state,
        }
    }
}

/// Verdict of [`KnowledgeState::identification`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identification {
    /// All hypotheses agree on one coin. Identifying the coin while its
    /// state stays unknown counts: a coin that was never weighed is
    /// pinned down even though both of its states survive.
    Identified(CoinId),
    /// More than one coin is still a candidate.
    Undetermined,
    /// No hypothesis survives; the observed outcome sequence was
    /// impossible for the assumed starting knowledge.
    Inconsistent,
}

/// The set of hypotheses consistent with everything observed so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnowledgeState {
    n_coins: usize,
    hypotheses: BTreeSet<Hypothesis>,
}

impl KnowledgeState {
    /// Knowledge before any weighing: every coin in every admitted state.
    pub fn initial(n_coins: usize, state: InitialState) -> Self {
        assert!(n_coins >= 1, "a game needs at least one coin");
        let hypotheses = (0..n_coins)
            .flat_map(|coin| {
                state
                    .possible_states()
                    .iter()
                    .map(move |&s| Hypothesis::new(coin, s))
            })
            .collect();
        KnowledgeState {
            n_coins,
            hypotheses,
        }
    }

    /// Builds a knowledge state from explicit hypotheses (duplicates
    /// collapse). Intended for tests and for reconstructing mid-game
    /// states.
    pub fn from_hypotheses(
        n_coins: usize,
        hypotheses: impl IntoIterator<Item = Hypothesis>,
    ) -> Self {
        let hypotheses: BTreeSet<_> = hypotheses.into_iter().collect();
        for h in &hypotheses {
            assert!(h.coin.0 < n_coins, "hypothesis coin out of range");
        }
        KnowledgeState {
            n_coins,
            hypotheses,
        }
    }

    pub fn n_coins(&self) -> usize {
        self.n_coins
    }

    pub fn len(&self) -> usize {
        self.hypotheses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hypotheses.is_empty()
    }

    pub fn contains(&self, hypothesis: &Hypothesis) -> bool {
        self.hypotheses.contains(hypothesis)
    }

    pub fn hypotheses(&self) -> impl Iterator<Item = Hypothesis> + '_ {
        self.hypotheses.iter().copied()
    }

    /// Keeps exactly the hypotheses that predict `outcome` for this
    /// weighing, each advanced past the weighing. An empty result means
    /// the outcome was impossible under this knowledge.
    pub fn update(&self, weighing: &Weighing, outcome: Outcome) -> KnowledgeState {
        let hypotheses = self
            .hypotheses
            .iter()
            .filter_map(|h| {
                let world = World::new(self.n_coins, h.coin, h.state)
                    .expect("hypotheses are in range by construction");
                let (o, next) = world
                    .weigh(weighing)
                    .expect("weighing must be valid for this knowledge state");
                (o == outcome).then(|| Hypothesis {
                    coin: next.alternator(),
                    state: next.state(),
                })
            })
            .collect();
        KnowledgeState {
            n_coins: self.n_coins,
            hypotheses,
        }
    }

    /// Whether the surviving hypotheses pin down the alternator's
    /// identity.
    pub fn identification(&self) -> Identification {
        let mut coins = self.hypotheses.iter().map(|h| h.coin);
        let Some(first) = coins.next() else {
            return Identification::Inconsistent;
        };
        if coins.all(|c| c == first) {
            Identification::Identified(first)
        } else {
            Identification::Undetermined
        }
    }
}
