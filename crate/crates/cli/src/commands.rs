//! Command implementations: each returns the JSON document to print plus an
//! exit code (0 success/pass, 1 scenario failure, 2 input error handled by
//! the caller).

use crate::error::Result;
use crate::report;
use crate::scenario::{run_scenario, ScenarioResult, Status, SCENARIO_IDS};
use crate::workspace::Workspace;
use serde_json::{json, Value};
use std::time::Instant;
use torsion_core::*;

pub struct Outcome {
    pub document: Value,
    pub failed: bool,
}

fn finish(
    command: &str,
    ring: &str,
    result: Value,
    witnesses: Value,
    start: Instant,
    timings: bool,
) -> Outcome {
    let elapsed = timings.then(|| start.elapsed().as_millis());
    Outcome {
        document: report::document(command, ring, result, witnesses, elapsed),
        failed: false,
    }
}

pub fn resolve_cmd(
    ws: &Workspace,
    ring_id: &str,
    module: &str,
    length: usize,
    timings: bool,
) -> Result<Outcome> {
    let start = Instant::now();
    let m = ws.module(module)?;
    let res = resolve(&m, length);
    let table = betti_table(&res);
    let result = json!({
        "module": module,
        "length": length,
        "betti": report::betti_json(&table),
        "valid": res.validate(),
    });
    Ok(finish("resolve", ring_id, result, json!({}), start, timings))
}

pub fn betti_cmd(
    ws: &Workspace,
    ring_id: &str,
    module: &str,
    length: usize,
    timings: bool,
) -> Result<Outcome> {
    let start = Instant::now();
    let m = ws.module(module)?;
    let table = betti_table(&resolve(&m, length));
    Ok(finish(
        "betti",
        ring_id,
        report::betti_json(&table),
        json!({ "module": module, "length": length }),
        start,
        timings,
    ))
}

pub fn transpose_cmd(ws: &Workspace, ring_id: &str, module: &str, timings: bool) -> Result<Outcome> {
    let start = Instant::now();
    let m = ws.module(module)?;
    let tr = transpose(&m);
    Ok(finish(
        "transpose",
        ring_id,
        report::presentation_json(&tr),
        json!({ "module": module }),
        start,
        timings,
    ))
}

pub fn ext_cmd(
    ws: &Workspace,
    ring_id: &str,
    module: &str,
    of: &str,
    max_index: usize,
    timings: bool,
) -> Result<Outcome> {
    let start = Instant::now();
    let m = ws.module(module)?;
    let n = ws.module(of)?;
    let profile = ext(&m, &n, max_index);
    Ok(finish(
        "ext",
        ring_id,
        report::ext_json(&profile),
        json!({ "module": module, "of": of }),
        start,
        timings,
    ))
}

pub fn tf_index_cmd(
    ws: &Workspace,
    ring_id: &str,
    module: &str,
    cap: Option<usize>,
    timings: bool,
) -> Result<Outcome> {
    let start = Instant::now();
    let m = ws.module(module)?;
    let cap = cap.unwrap_or_else(|| default_tf_cap(&ws.ring));
    let v = tf_index(&m, cap);
    let result = json!({
        "index": report::cap_json(&v.index),
        "cap": v.cap,
        "witness": v.witness,
    });
    Ok(finish("tf-index", ring_id, result, json!({ "module": module }), start, timings))
}

pub fn syzygy_order_cmd(
    ws: &Workspace,
    ring_id: &str,
    module: &str,
    cap: Option<usize>,
    timings: bool,
) -> Result<Outcome> {
    let start = Instant::now();
    let m = ws.module(module)?;
    let cap = cap.unwrap_or_else(|| default_syzygy_cap(&ws.ring));
    let v = syzygy_order(&m, cap);
    let chain: Vec<Value> = v
        .chain
        .iter()
        .map(|c| {
            json!({
                "generators": c.generators().rank(),
                "relations": c.relation_count(),
            })
        })
        .collect();
    let result = json!({
        "order": report::cap_json(&v.order),
        "cap": v.cap,
        "chain": chain,
    });
    Ok(finish("syzygy-order", ring_id, result, json!({ "module": module }), start, timings))
}

pub fn gab_cmd(
    ws: &Workspace,
    ring_id: &str,
    module: &str,
    a: usize,
    b: usize,
    timings: bool,
) -> Result<Outcome> {
    let start = Instant::now();
    let m = ws.module(module)?;
    let member = gab_membership(&m, a, b);
    Ok(finish(
        "gab",
        ring_id,
        json!({ "member": member, "a": a, "b": b }),
        json!({ "module": module }),
        start,
        timings,
    ))
}

pub fn invariants_cmd(ws: &Workspace, ring_id: &str, timings: bool) -> Result<Outcome> {
    let start = Instant::now();
    let profile = ring_profile(&ws.ring);
    let hs = hilbert_series(&free_module(&ws.ring, vec![0]));
    Ok(finish(
        "invariants",
        ring_id,
        report::profile_json(&profile),
        json!({ "hilbert": report::hilbert_json(&hs) }),
        start,
        timings,
    ))
}

/// Default caps from the ring's depth: tf cap t+3, syzygy cap t+2.
pub fn default_tf_cap(ring: &RingDescriptor) -> usize {
    ring_profile(ring).depth + 3
}

pub fn default_syzygy_cap(ring: &RingDescriptor) -> usize {
    ring_profile(ring).depth + 2
}

/// Run scenarios over a list of (ring id, workspace), ordered by
/// (scenario id, ring id) regardless of execution order.
pub fn verify_cmd(
    targets: &[(String, Workspace)],
    scenario: Option<&str>,
    timings: bool,
) -> Result<Outcome> {
    let start = Instant::now();
    let scenarios: Vec<&str> = match scenario {
        Some(s) => {
            if !SCENARIO_IDS.contains(&s) {
                return Err(crate::error::CliError::UnknownScenario(s.to_string()));
            }
            vec![s]
        }
        None => SCENARIO_IDS.to_vec(),
    };
    let mut results: Vec<ScenarioResult> = Vec::new();
    for sid in &scenarios {
        for (ring_id, ws) in targets {
            results.push(run_scenario(sid, ring_id, ws)?);
        }
    }
    results.sort_by(|a, b| (a.scenario.clone(), a.ring.clone()).cmp(&(b.scenario.clone(), b.ring.clone())));
    let failed = results.iter().any(|r| r.status == Status::Fail);
    let passes = results.iter().filter(|r| r.status == Status::Pass).count();
    let skips = results.iter().filter(|r| r.status == Status::Skip).count();
    let rows: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "scenario": r.scenario,
                "ring": r.ring,
                "status": r.status.as_str(),
                "witnesses": r.witnesses,
                "elapsed_ms": timings.then_some(r.elapsed_ms as u64),
            })
        })
        .collect();
    // Per-ring profiles, recorded alongside the scenario table.
    let mut profiles = serde_json::Map::new();
    for (ring_id, ws) in targets {
        profiles.insert(
            ring_id.clone(),
            report::profile_json(&ring_profile(&ws.ring)),
        );
    }
    let result = json!({
        "status": if failed { "fail" } else { "pass" },
        "passes": passes,
        "skips": skips,
        "failures": results.len() - passes - skips,
        "scenarios": rows,
        "profiles": profiles,
    });
    let ring_label = if targets.len() == 1 {
        targets[0].0.clone()
    } else {
        "corpus".to_string()
    };
    let mut out = finish("verify", &ring_label, result, json!({}), start, timings);
    out.failed = failed;
    Ok(out)
}
