//! JSON interchange for truncated cubical sets and their morphisms.
//!
//! Format:
//! ```json
//! {"trunc": 1,
//!  "levels": {"0": ["a"], "1": ["a"]},
//!  "action": {"1->0:[]": {"a": "a"}}}
//! ```
//! Identity actions may be omitted and are inferred. Morphism files carry
//! `source`, `target` and a `components` table of the same shape.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::{all_cube_mors, PresheafError, TCSet, TCSetMor};
use crate::cube::CubeMor;

fn parse_err(msg: impl Into<String>) -> PresheafError {
    PresheafError::Other(msg.into())
}

pub fn tcset_to_json(x: &TCSet) -> Value {
    let mut levels = Map::new();
    for n in 0..=x.trunc() {
        levels.insert(
            n.to_string(),
            Value::Array(x.level(n).iter().map(|e| json!(e)).collect()),
        );
    }
    let mut action = Map::new();
    for s in all_cube_mors(x.trunc()) {
        if s.is_identity() {
            continue;
        }
        let mut table = Map::new();
        for i in 0..x.level_size(s.cod()) {
            table.insert(
                x.elem_name(s.cod(), i).to_string(),
                json!(x.elem_name(s.dom(), x.act(&s, i))),
            );
        }
        action.insert(s.to_string(), Value::Object(table));
    }
    json!({"trunc": x.trunc(), "levels": levels, "action": action})
}

pub fn tcset_from_json(v: &Value) -> Result<TCSet, PresheafError> {
    let trunc = v
        .get("trunc")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("missing or invalid `trunc`"))? as usize;
    let levels_obj = v
        .get("levels")
        .and_then(Value::as_object)
        .ok_or_else(|| parse_err("missing `levels` object"))?;
    let mut levels: Vec<Vec<String>> = Vec::with_capacity(trunc + 1);
    for n in 0..=trunc {
        let arr = levels_obj
            .get(&n.to_string())
            .and_then(Value::as_array)
            .ok_or(PresheafError::MissingLevel { level: n, trunc })?;
        let names = arr
            .iter()
            .map(|e| {
                e.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| parse_err(format!("non-string element at level {n}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        levels.push(names);
    }
    let action_obj = v
        .get("action")
        .and_then(Value::as_object)
        .ok_or_else(|| parse_err("missing `action` object"))?;
    let mut action: BTreeMap<CubeMor, Vec<usize>> = BTreeMap::new();
    for (key, table) in action_obj {
        let s: CubeMor = key
            .parse()
            .map_err(|e| parse_err(format!("bad morphism key `{key}`: {e}")))?;
        let table = table
            .as_object()
            .ok_or_else(|| parse_err(format!("action at {key} is not an object")))?;
        let mut tab = Vec::with_capacity(levels[s.cod()].len());
        for name in &levels[s.cod()] {
            let target = table
                .get(name)
                .and_then(Value::as_str)
                .ok_or_else(|| parse_err(format!("action at {key} missing entry for `{name}`")))?;
            let j = levels[s.dom()]
                .iter()
                .position(|e| e == target)
                .ok_or_else(|| parse_err(format!("action at {key}: unknown target `{target}`")))?;
            tab.push(j);
        }
        action.insert(s, tab);
    }
    // omitted identity actions are inferred by `TCSet::act`
    TCSet::new(trunc, levels, action)
}

pub fn tcsetmor_to_json(f: &TCSetMor) -> Value {
    let mut components = Map::new();
    for n in 0..=f.source().trunc() {
        let mut table = Map::new();
        for i in 0..f.source().level_size(n) {
            table.insert(
                f.source().elem_name(n, i).to_string(),
                json!(f.target().elem_name(n, f.apply(n, i))),
            );
        }
        components.insert(n.to_string(), Value::Object(table));
    }
    json!({
        "source": tcset_to_json(f.source()),
        "target": tcset_to_json(f.target()),
        "components": components,
    })
}

pub fn tcsetmor_from_json(v: &Value) -> Result<TCSetMor, PresheafError> {
    let source = tcset_from_json(v.get("source").ok_or_else(|| parse_err("missing `source`"))?)?;
    let target = tcset_from_json(v.get("target").ok_or_else(|| parse_err("missing `target`"))?)?;
    let comps_obj = v
        .get("components")
        .and_then(Value::as_object)
        .ok_or_else(|| parse_err("missing `components` object"))?;
    let mut components = Vec::with_capacity(source.trunc() + 1);
    for n in 0..=source.trunc() {
        let table = comps_obj
            .get(&n.to_string())
            .and_then(Value::as_object)
            .ok_or_else(|| parse_err(format!("missing components at level {n}")))?;
        let mut level = Vec::with_capacity(source.level_size(n));
        for name in source.level(n) {
            let tgt = table
                .get(name)
                .and_then(Value::as_str)
                .ok_or_else(|| parse_err(format!("component missing for `{name}` at level {n}")))?;
            let j = target
                .elem_index(n, tgt)
                .ok_or_else(|| parse_err(format!("unknown target element `{tgt}`")))?;
            level.push(j);
        }
        components.push(level);
    }
    TCSetMor::new(source, target, components)
}
