//! Round-trip and canonicality checks for the tree document format.

use alternator::model::InitialState;
use alternator::strategy::StrategyTree;
use alternator::tree_doc::{from_json, to_json};

const ALL_STATES: [InitialState; 3] = [
    InitialState::Fake,
    InitialState::Real,
    InitialState::Unknown,
];

#[test]
fn documents_round_trip_structurally() {
    for n in 1..=50usize {
        for state in ALL_STATES {
            let tree = StrategyTree::build(n, state);
            let text = to_json(&tree);
            let parsed = from_json(&text).unwrap_or_else(|e| panic!("N={n} state={state}: {e}"));
            assert_eq!(parsed, tree, "N={n} state={state}");
        }
    }
}

#[test]
fn documents_are_byte_stable() {
    for n in [1usize, 2, 5, 11, 42] {
        for state in ALL_STATES {
            let first = to_json(&StrategyTree::build(n, state));
            let second = to_json(&StrategyTree::build(n, state));
            assert_eq!(first, second, "N={n} state={state}");
            assert!(first.ends_with('\n'));
            // Canonical pans are written ascending.
            assert_eq!(from_json(&first).unwrap(), StrategyTree::build(n, state));
        }
    }
}
