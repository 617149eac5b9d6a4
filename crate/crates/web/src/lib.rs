//! Browser bindings. Each export returns a JSON string; the plain functions
//! behind them are ordinary Rust so they can be tested natively.

use pgv_core::constructions::{
    build_family, family_graph, support_table, sigma_cycle_check, verify_family, Family, FamilySpec,
};
use pgv_core::symmetry::conceivable_triple_check;
use pgv_core::RunConfig;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest graph the page will draw.
pub const DRAW_LIMIT: usize = 2520;

/// Budgets small enough for a browser tab: the large families report their
/// graph claims as skipped instead of freezing the page.
pub fn browser_config() -> RunConfig {
    RunConfig {
        vertex_budget: 5_000,
        aut_vertex_limit: 400,
        ..RunConfig::default()
    }
}

fn spec(family: &str, p: u32) -> Result<FamilySpec, String> {
    let family: Family = family.parse().map_err(|e: pgv_core::Error| e.to_string())?;
    let p = (family == Family::AltP).then_some(u64::from(p));
    FamilySpec::new(family, p, false).map_err(|e| e.to_string())
}

/// Vertices and edges of a family graph, for drawing.
pub fn graph_json(family: &str, p: u32) -> Result<String, String> {
    let spec = spec(family, p)?;
    let mut config = browser_config();
    config.vertex_budget = DRAW_LIMIT;
    let bundle = build_family(spec).map_err(|e| e.to_string())?;
    let cg = family_graph(&bundle, &config).map_err(|e| e.to_string())?;
    let edges: Vec<[u32; 2]> = cg.graph.edges().map(|(u, v)| [u, v]).collect();
    Ok(json!({
        "vertices": cg.graph.vertex_count(),
        "valency": cg.graph.valency(),
        "edges": edges,
    })
    .to_string())
}

/// The full verification report under browser budgets.
pub fn report_json(family: &str, p: u32) -> Result<String, String> {
    let report = verify_family(spec(family, p)?, &browser_config()).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Support of every product of two translates, and whether the support-5
/// pairs close up into a single cycle.
pub fn support_json(p: u32) -> Result<String, String> {
    let p = u64::from(p);
    let cells = support_table(p).map_err(|e| e.to_string())?;
    let cycle = sigma_cycle_check(p).map_err(|e| e.to_string())?;
    Ok(json!({ "p": p, "cells": cells, "single_cycle": cycle }).to_string())
}

/// Every pair `(l, k)` with `k | l | p-1`, and whether the arithmetic
/// filter admits it.
pub fn triples_json(p: u32) -> Result<String, String> {
    let p = u64::from(p);
    let mut rows = Vec::new();
    for ell in (1..p).filter(|l| (p - 1) % l == 0) {
        for k in (1..=ell).filter(|k| ell % k == 0) {
            let ok = conceivable_triple_check(p, k, ell).map_err(|e| e.to_string())?;
            rows.push(json!({ "l": ell, "k": k, "conceivable": ok }));
        }
    }
    Ok(json!({ "p": p, "pairs": rows }).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = graphJson)]
pub fn graph_json_js(family: &str, p: u32) -> Result<String, JsError> {
    js(graph_json(family, p))
}

#[wasm_bindgen(js_name = reportJson)]
pub fn report_json_js(family: &str, p: u32) -> Result<String, JsError> {
    js(report_json(family, p))
}

#[wasm_bindgen(js_name = supportJson)]
pub fn support_json_js(p: u32) -> Result<String, JsError> {
    js(support_json(p))
}

#[wasm_bindgen(js_name = triplesJson)]
pub fn triples_json_js(p: u32) -> Result<String, JsError> {
    js(triples_json(p))
}
