//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes plain strings and returns one JSON document, either the
//! result or `{"error": {"kind", "message"}}`. The `*_json` functions are the
//! same operations without the wasm layer, so they run in native tests.

use serde_json::{json, Value};
use svcfc_core::generate::{generate_instance, GeneratorSpec};
use svcfc_core::io::{edges_json, kernel_report_json, parse_instance, Format};
use svcfc_core::kernel::AnnotatedInstance;
use svcfc_core::{
    approx_twin_cover, chromatic_number_exact, decompose_twin_cliques, exact_twin_cover, extension_number,
    is_strong_cfvc_coloring, kernelize_annotated, svcfc_exact, svcfc_upper_coloring, Error, Graph, TwinCover,
    DEFAULT_PATH_CAP,
};
use wasm_bindgen::prelude::*;

/// Search nodes allowed per request, so the page never hangs.
const BUDGET: Option<u64> = Some(20_000_000);
/// Largest graph for which the exact strong CFVC number is attempted.
const EXACT_LIMIT: usize = 12;
const EXACT_COVER_LIMIT: usize = 20;

fn render(result: Result<Value, Error>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": { "kind": e.kind(), "message": e.to_string() } }).to_string(),
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": edges_json(g) })
}

fn cover_of(g: &Graph, given: Option<Vec<usize>>) -> Result<TwinCover, Error> {
    match given {
        Some(x) => TwinCover::new(g, x),
        None if g.n() <= EXACT_COVER_LIMIT => exact_twin_cover(g, BUDGET),
        None => Ok(approx_twin_cover(g)),
    }
}

/// Generates an instance from a spec and kernelizes it with the planted cover.
pub fn kernelize_json(spec: &str, k: usize) -> Result<Value, Error> {
    let spec: GeneratorSpec = serde_json::from_str(spec).map_err(|e| Error::Input(format!("generator spec: {e}")))?;
    let (g, x) = generate_instance(&spec)?;
    let report = kernelize_annotated(&AnnotatedInstance::new(g.clone(), k, x.vertices().to_vec())?)?;
    let deleted: Vec<usize> = report.deletions.iter().flat_map(|d| d.vertices.iter().copied()).collect();
    Ok(json!({
        "input": graph_json(&g),
        "cover": x,
        "deleted": deleted,
        "kernel": kernel_report_json(&report),
    }))
}

/// Twin cover, χ, the `χ + |X|` coloring and, for small graphs, the exact optimum.
pub fn analyze_json(instance: &str) -> Result<Value, Error> {
    let inst = parse_instance(instance, Format::EdgeList)?;
    let g = &inst.graph;
    if !g.is_connected() {
        return Err(Error::Validity("the graph is not connected".into()));
    }
    let cover = cover_of(g, inst.cover)?;
    let d = decompose_twin_cliques(g, &cover)?;
    let cliques: Vec<Value> =
        d.cliques().iter().map(|c| json!({ "S": c.neighborhood, "vertices": c.vertices })).collect();
    let (chi, proper) = chromatic_number_exact(g, BUDGET)?;
    let upper = svcfc_upper_coloring(g, &cover, cover.vertices(), BUDGET)?;
    let strong = is_strong_cfvc_coloring(g, &upper, DEFAULT_PATH_CAP)?.is_strong;
    let exact = if g.n() <= EXACT_LIMIT {
        match svcfc_exact(g, DEFAULT_PATH_CAP, BUDGET) {
            Ok(opt) => json!({ "svcfc": opt.svcfc, "witness": opt.witness }),
            Err(Error::Budget(_)) => Value::Null,
            Err(e) => return Err(e),
        }
    } else {
        Value::Null
    };
    Ok(json!({
        "graph": graph_json(g),
        "cover": cover,
        "cliques": cliques,
        "chi": chi,
        "proper": proper,
        "upper": { "coloring": upper, "colors": upper.num_colors(), "strong": strong },
        "exact": exact,
    }))
}

/// `K_φ` and its extension for colors `phi` on the instance's twin cover.
pub fn extension_json(instance: &str, phi: &str) -> Result<Value, Error> {
    let inst = parse_instance(instance, Format::EdgeList)?;
    let cover = cover_of(&inst.graph, inst.cover)?;
    let phi: Vec<usize> = phi
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Input(format!("color {t:?} is not a positive integer"))))
        .collect::<Result<_, _>>()?;
    let rep = extension_number(&inst.graph, &cover, &phi)?;
    Ok(json!({
        "graph": graph_json(&inst.graph),
        "cover": cover,
        "k_phi": rep.k_phi,
        "S": rep.witness_s,
        "coloring": rep.extension,
    }))
}

#[wasm_bindgen]
pub fn kernelize(spec: &str, k: usize) -> String {
    render(kernelize_json(spec, k))
}

#[wasm_bindgen]
pub fn analyze(instance: &str) -> String {
    render(analyze_json(instance))
}

#[wasm_bindgen]
pub fn extension(instance: &str, phi: &str) -> String {
    render(extension_json(instance, phi))
}
