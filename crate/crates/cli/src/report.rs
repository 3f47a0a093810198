//! JSON rendering. All maps are serde_json's default BTree-backed maps, so
//! output is deterministic byte for byte.

use serde_json::{json, Map, Value};
use torsion_core::*;

/// The stable top-level document shape.
pub fn document(
    command: &str,
    ring: &str,
    result: Value,
    witnesses: Value,
    elapsed_ms: Option<u128>,
) -> Value {
    json!({
        "command": command,
        "ring": ring,
        "result": result,
        "witnesses": witnesses,
        "elapsed_ms": elapsed_ms.map(|ms| ms as u64),
    })
}

pub fn betti_json(table: &BettiTable) -> Value {
    let mut graded = Map::new();
    for ((i, j), b) in table.entries() {
        graded.insert(format!("{i},{j}"), json!(b));
    }
    json!({ "totals": table.totals(), "graded": graded })
}

pub fn presentation_json(module: &PresentedModule) -> Value {
    let vars = module.ring().vars();
    let map = module.presentation();
    let matrix: Vec<Vec<String>> = map
        .entries()
        .iter()
        .map(|row| row.iter().map(|p| p.render(vars)).collect())
        .collect();
    json!({
        "generator_degrees": module.generator_degrees(),
        "relation_degrees": map.source().twists(),
        "matrix": matrix,
        "minimal": module.is_minimal(),
    })
}

pub fn ext_json(profile: &ExtProfile) -> Value {
    let mut slots = Vec::new();
    for i in 0..=profile.max_index() {
        let module = profile.module(i);
        let lo = module
            .generator_degrees()
            .iter()
            .copied()
            .min()
            .unwrap_or(0);
        let dims: Map<String, Value> = profile
            .graded_dims(i, lo, lo + 8)
            .into_iter()
            .filter(|(_, n)| *n > 0)
            .map(|(d, n)| (d.to_string(), json!(n)))
            .collect();
        slots.push(json!({
            "i": i,
            "is_zero": profile.is_zero(i),
            "generators": module.generators().rank(),
            "dims": dims,
        }));
    }
    json!({ "max_index": profile.max_index(), "slots": slots })
}

pub fn cap_json(c: &CapResult) -> Value {
    match c {
        CapResult::Exact(n) => json!(n),
        CapResult::CapReached => json!("cap-reached"),
    }
}

pub fn grade_json(g: &Grade) -> Value {
    match g {
        Grade::Finite(n) => json!(n),
        Grade::Infinite => json!("infinity"),
    }
}

pub fn profile_json(p: &RingProfile) -> Value {
    json!({
        "dim": p.dimension,
        "depth": p.depth,
        "type": p.cm_type,
        "edim": p.edim,
        "multiplicity": p.multiplicity,
        "cohen_macaulay": p.is_cohen_macaulay,
        "gorenstein": p.is_gorenstein,
        "minimal_multiplicity": p.has_minimal_multiplicity,
    })
}

pub fn hilbert_json(hs: &HilbertSeries) -> Value {
    let (off, numer) = hs.numerator();
    let (roff, reduced) = hs.reduced_numerator();
    json!({
        "numerator_offset": off,
        "numerator": numer,
        "reduced_offset": roff,
        "reduced_numerator": reduced,
        "dimension": hs.dimension(),
        "multiplicity": hs.multiplicity(),
    })
}
