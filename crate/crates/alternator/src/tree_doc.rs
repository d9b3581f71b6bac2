//! Canonical JSON representation of strategy trees.
//!
//! A document looks like
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "initial_state": "f",
//!   "n_coins": 3,
//!   "root": {
//!     "on_equal": { "alternator": 2 },
//!     "on_left_light": { "alternator": 0 },
//!     "on_right_light": { "alternator": 1 },
//!     "weigh": { "left": [0], "right": [1] }
//!   }
//! }
//! ```
//!
//! Every node is exactly one of a weighing object (keys `weigh`,
//! `on_equal`, `on_left_light`, `on_right_light`), a leaf
//! (`{"alternator": id}`), or `{"unreachable": true}`. Coin ids are
//! 0-indexed and ascend within each pan array. Output is canonical —
//! sorted keys, two-space indentation, a trailing newline — so building
//! the same tree twice yields byte-identical files. Parsing is strict:
//! unknown keys, unsorted pans, or a foreign `format_version` are
//! rejected.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::model::{CoinId, InitialState, Weighing};
use crate::strategy::{StrategyNode, StrategyTree, TreeError};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum DocError {
    #[error("document is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("document is not a valid strategy tree: {0}")]
    Schema(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn schema(message: impl Into<String>) -> DocError {
    DocError::Schema(message.into())
}

/// Serializes a tree into the canonical document text.
pub fn to_json(tree: &StrategyTree) -> String {
    let doc = json!({
        "format_version": FORMAT_VERSION,
        "initial_state": tree.initial_state().letter().to_string(),
        "n_coins": tree.n_coins(),
        "root": node_to_value(tree.root()),
    });
    // serde_json's default map is ordered, so keys come out sorted.
    let mut text = serde_json::to_string_pretty(&doc).expect("trees serialize infallibly");
    text.push('\n');
    text
}

fn node_to_value(node: &StrategyNode) -> Value {
    match node {
        StrategyNode::Leaf { alternator } => json!({ "alternator": alternator.0 }),
        StrategyNode::Unreachable => json!({ "unreachable": true }),
        StrategyNode::Weigh {
            weighing,
            on_equal,
            on_left_light,
            on_right_light,
        } => json!({
            "weigh": {
                "left": weighing.left().iter().map(|c| c.0).collect::<Vec<_>>(),
                "right": weighing.right().iter().map(|c| c.0).collect::<Vec<_>>(),
            },
            "on_equal": node_to_value(on_equal),
            "on_left_light": node_to_value(on_left_light),
            "on_right_light": node_to_value(on_right_light),
        }),
    }
}

/// Parses and structurally validates a canonical document.
pub fn from_json(text: &str) -> Result<StrategyTree, DocError> {
    let value: Value = serde_json::from_str(text)?;
    let object = as_object(&value, "document")?;
    expect_keys(object, &["format_version", "initial_state", "n_coins", "root"], "document")?;

    let version = object
        .get("format_version")
        .and_then(Value::as_str)
        .ok_or_else(|| schema("format_version must be a string"))?;
    if version != FORMAT_VERSION {
        return Err(schema(format!(
            "unsupported format_version \"{version}\" (expected \"{FORMAT_VERSION}\")"
        )));
    }

    let state_text = object
        .get("initial_state")
        .and_then(Value::as_str)
        .ok_or_else(|| schema("initial_state must be a string"))?;
    let initial_state = match state_text {
        s if s.len() == 1 => InitialState::from_letter(s.chars().next().unwrap()),
        _ => None,
    }
    .ok_or_else(|| schema(format!("initial_state must be \"f\", \"r\" or \"a\", got \"{state_text}\"")))?;

    let n_coins = object
        .get("n_coins")
        .and_then(Value::as_u64)
        .ok_or_else(|| schema("n_coins must be a non-negative integer"))?;
    let n_coins = usize::try_from(n_coins).map_err(|_| schema("n_coins is too large"))?;

    let root = value_to_node(object.get("root").expect("key checked above"))?;
    Ok(StrategyTree::new(n_coins, initial_state, root)?)
}

fn as_object<'v>(value: &'v Value, what: &str) -> Result<&'v Map<String, Value>, DocError> {
    value
        .as_object()
        .ok_or_else(|| schema(format!("{what} must be a JSON object")))
}

fn expect_keys(object: &Map<String, Value>, keys: &[&str], what: &str) -> Result<(), DocError> {
    for key in keys {
        if !object.contains_key(*key) {
            return Err(schema(format!("{what} is missing key \"{key}\"")));
        }
    }
    for key in object.keys() {
        if !keys.contains(&key.as_str()) {
            return Err(schema(format!("{what} has unexpected key \"{key}\"")));
        }
    }
    Ok(())
}

fn value_to_node(value: &Value) -> Result<StrategyNode, DocError> {
    let object = as_object(value, "node")?;
    if object.contains_key("alternator") {
        expect_keys(object, &["alternator"], "leaf node")?;
        let id = object["alternator"]
            .as_u64()
            .ok_or_else(|| schema("alternator must be a non-negative integer"))?;
        let id = usize::try_from(id).map_err(|_| schema("alternator id is too large"))?;
        return Ok(StrategyNode::Leaf {
            alternator: CoinId(id),
        });
    }
    if object.contains_key("unreachable") {
        expect_keys(object, &["unreachable"], "unreachable node")?;
        if object["unreachable"] != Value::Bool(true) {
            return Err(schema("unreachable must be literally true"));
        }
        return Ok(StrategyNode::Unreachable);
    }
    if object.contains_key("weigh") {
        expect_keys(
            object,
            &["on_equal", "on_left_light", "on_right_light", "weigh"],
            "weighing node",
        )?;
        let pans = as_object(&object["weigh"], "weigh")?;
        expect_keys(pans, &["left", "right"], "weigh")?;
        let left = parse_pan(&pans["left"], "left")?;
        let right = parse_pan(&pans["right"], "right")?;
        let weighing =
            Weighing::new(left, right).map_err(|e| schema(format!("invalid weighing: {e}")))?;
        return Ok(StrategyNode::weigh(
            weighing,
            value_to_node(&object["on_equal"])?,
            value_to_node(&object["on_left_light"])?,
            value_to_node(&object["on_right_light"])?,
        ));
    }
    Err(schema(
        "node must be a weighing, {\"alternator\": id}, or {\"unreachable\": true}",
    ))
}

fn parse_pan(value: &Value, side: &str) -> Result<Vec<CoinId>, DocError> {
    let items = value
        .as_array()
        .ok_or_else(|| schema(format!("{side} pan must be an array")))?;
    let mut pan = Vec::with_capacity(items.len());
    for item in items {
        let id = item
            .as_u64()
            .ok_or_else(|| schema(format!("{side} pan holds a non-integer coin id")))?;
        let id = usize::try_from(id).map_err(|_| schema("coin id is too large"))?;
        pan.push(CoinId(id));
    }
    if !pan.windows(2).all(|pair| pair[0] < pair[1]) {
        return Err(schema(format!(
            "{side} pan ids must be strictly ascending"
        )));
    }
    Ok(pan)
}
