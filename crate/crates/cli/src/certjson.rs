//! Versioned JSON schema for certificate trees.
//!
//! A node is an object with keys `problem` (sorted integer array), `kostka`
//! (decimal string, so arbitrary precision survives JSON), `clause`, and for
//! recursive clauses `rearrangement` (ordered array whose last two entries
//! are the split pair) plus nested `merged` and `decremented` nodes. The
//! root additionally carries `"schema": 1`. The reduction is recomputed on
//! parse rather than stored.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use schublines_core::{AlternatingCertificate, Clause, SchubertProblem};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

pub fn certificate_to_json(cert: &AlternatingCertificate) -> Value {
    let Value::Object(mut root) = node_to_json(cert) else {
        unreachable!("nodes serialize to objects");
    };
    root.insert("schema".into(), json!(SCHEMA_VERSION));
    Value::Object(root)
}

fn node_to_json(cert: &AlternatingCertificate) -> Value {
    let mut node = Map::new();
    node.insert("problem".into(), json!(cert.problem.conditions()));
    node.insert("kostka".into(), json!(cert.kostka_value.to_string()));
    node.insert("clause".into(), json!(cert.clause.as_str()));
    if let Some(r) = &cert.rearrangement {
        node.insert("rearrangement".into(), json!(r));
    }
    if let Some(child) = &cert.merged_child {
        node.insert("merged".into(), node_to_json(child));
    }
    if let Some(child) = &cert.decremented_child {
        node.insert("decremented".into(), node_to_json(child));
    }
    Value::Object(node)
}

pub fn certificate_from_json(value: &Value) -> Result<AlternatingCertificate, String> {
    let schema = value
        .get("schema")
        .and_then(Value::as_u64)
        .ok_or("missing schema version")?;
    if schema != SCHEMA_VERSION {
        return Err(format!("unsupported schema version {schema}"));
    }
    node_from_json(value)
}

fn node_from_json(value: &Value) -> Result<AlternatingCertificate, String> {
    let obj = value.as_object().ok_or("node must be an object")?;
    let problem = parse_problem(obj.get("problem").ok_or("missing problem")?)?;
    let kostka_str = obj
        .get("kostka")
        .and_then(Value::as_str)
        .ok_or("missing kostka")?;
    let kostka_value =
        BigUint::from_str(kostka_str).map_err(|e| format!("bad kostka value: {e}"))?;
    let clause = match obj.get("clause").and_then(Value::as_str) {
        Some("base-small-k") => Clause::BaseSmallK,
        Some("both-branches-one") => Clause::BothBranchesOne,
        Some("unequal-branches") => Clause::UnequalBranches,
        other => return Err(format!("bad clause: {other:?}")),
    };
    let rearrangement = match obj.get("rearrangement") {
        None => None,
        Some(v) => Some(parse_u32_array(v)?),
    };
    let merged_child = obj
        .get("merged")
        .map(node_from_json)
        .transpose()?
        .map(Arc::new);
    let decremented_child = obj
        .get("decremented")
        .map(node_from_json)
        .transpose()?
        .map(Arc::new);
    let reduced = problem
        .reduce()
        .map_err(|e| format!("problem is not reducible: {e}"))?;
    Ok(AlternatingCertificate {
        problem,
        reduced,
        kostka_value,
        clause,
        rearrangement,
        merged_child,
        decremented_child,
    })
}

fn parse_problem(value: &Value) -> Result<SchubertProblem, String> {
    SchubertProblem::new(parse_u32_array(value)?).map_err(|e| e.to_string())
}

fn parse_u32_array(value: &Value) -> Result<Vec<u32>, String> {
    value
        .as_array()
        .ok_or("expected an array")?
        .iter()
        .map(|x| {
            x.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| "expected a small positive integer".to_string())
        })
        .collect()
}
