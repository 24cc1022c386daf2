//! Browser bindings. Each export takes text and returns a JSON string; the
//! plain functions underneath are what the native tests exercise.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use zdg_core::graph::{zero_divisor_graph, SimpleGraph};
use zdg_core::ring::{ag_conjecture_check, comaximal_suite, FiniteRing, IdealOp};
use zdg_core::spectral::{specs_theorem_suite, FinitePoset, PosetJson, SpectralPoset};
use zdg_core::topology::{FiniteSpace, SpaceJson};
use zdg_core::Limits;

/// Tighter than the native defaults so the page stays responsive.
fn limits() -> Limits {
    Limits {
        ring_order: 256,
        chromatic_vertices: 40,
        ..Limits::default()
    }
}

fn graph_json(g: &SimpleGraph, title: &str, l: &Limits) -> Result<Value, String> {
    let inv = g.invariants(l).map_err(|e| e.to_string())?;
    Ok(json!({
        "title": title,
        "vertices": g.labels(),
        "edges": g.edges(),
        "invariants": inv,
        "summary": inv.to_string(),
        "dot": g.to_dot(title),
    }))
}

pub fn ring_report(spec: &str) -> Result<Value, String> {
    let l = limits();
    let r = FiniteRing::parse(spec, &l).map_err(|e| e.to_string())?;
    let name = r.to_string();
    let ideals = r.ideals(&l).map_err(|e| e.to_string())?;
    let gamma = zero_divisor_graph(&r.multiplicative_semigroup());
    let ag = zero_divisor_graph(&ideals.semigroup(IdealOp::Mult).table);
    let ag_verdict = ag_conjecture_check(&r, &l).map_err(|e| e.to_string())?;
    let comax = comaximal_suite(&r, &l).map_err(|e| e.to_string())?;
    Ok(json!({
        "ring": name,
        "order": r.order(),
        "reduced": r.is_reduced(),
        "ideals": ideals.labels(),
        "maximal": ideals.maximal().iter().map(|&i| ideals.label(i)).collect::<Vec<_>>(),
        "gamma": graph_json(&gamma, &format!("Γ({name})"), &l)?,
        "ag": graph_json(&ag, &format!("AG({name})"), &l)?,
        "ag_verdict": ag_verdict,
        "comaximal": { "summary": comax.invariants.to_string(), "passed": comax.passed(), "parts": comax.parts },
    }))
}

/// `input` is a fan model string or poset JSON.
pub fn spectral_report(input: &str) -> Result<Value, String> {
    let l = limits();
    let input = input.trim();
    let p = if input.starts_with("fan:") {
        SpectralPoset::parse_fan(input).map_err(|e| e.to_string())?
    } else {
        let raw: PosetJson = serde_json::from_str(input).map_err(|e| e.to_string())?;
        SpectralPoset::Finite(FinitePoset::from_json(&raw, &l).map_err(|e| e.to_string())?)
    };
    let rep = specs_theorem_suite(&p, &l).map_err(|e| e.to_string())?;
    let mut v = serde_json::to_value(&rep).map_err(|e| e.to_string())?;
    v["passed"] = json!(rep.passed());
    v["g_summary"] = json!(rep.g.to_string());
    v["h_summary"] = json!(rep.h.to_string());
    Ok(v)
}

pub fn space_report(input: &str) -> Result<Value, String> {
    let l = limits();
    let raw: SpaceJson = serde_json::from_str(input).map_err(|e| e.to_string())?;
    let x = FiniteSpace::from_json(&raw, &l).map_err(|e| e.to_string())?;
    let flags = x.axiom_suite();
    let gamma = zero_divisor_graph(&x.closure_lattice());
    let alpha = match x.alpha_map() {
        Ok(g) => {
            let rep = zdg_core::semigroup::armendariz_invariant_suite(&g, &l).map_err(|e| e.to_string())?;
            json!({ "passed": rep.passed(), "parts": rep.parts })
        }
        Err(e) => json!({ "error": e.to_string() }),
    };
    Ok(json!({
        "points": x.points(),
        "closed_sets": x.closed_sets().iter().map(|&m| x.set_label(m)).collect::<Vec<_>>(),
        "axioms": flags,
        "gamma": graph_json(&gamma, "Γ(σ(X))", &l)?,
        "alpha": alpha,
    }))
}

fn finish(v: Result<Value, String>) -> Result<String, String> {
    v.map(|v| v.to_string())
}

#[wasm_bindgen(js_name = analyzeRing)]
pub fn analyze_ring(spec: &str) -> Result<String, String> {
    finish(ring_report(spec))
}

#[wasm_bindgen(js_name = spectralSuite)]
pub fn spectral_suite(input: &str) -> Result<String, String> {
    finish(spectral_report(input))
}

#[wasm_bindgen(js_name = spaceAxioms)]
pub fn space_axioms(input: &str) -> Result<String, String> {
    finish(space_report(input))
}
