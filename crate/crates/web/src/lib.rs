//! WebAssembly bindings for the static demo page in `www/`. Each export takes
//! plain strings and numbers and returns a JSON document.

use serde_json::{json, Value};
use spectraham::families::{build_family, FamilySpec, GraphRef};
use spectraham::io::{parse_graph6, write_graph6};
use spectraham::oracle::OracleConfig;
use spectraham::report::{bipartite_digest, graph_digest};
use spectraham::spectral::{bounds_report, spectral_radius, SpectralKind, SpectralOptions};
use spectraham::theorems::{check_theorem, cross_validate, TheoremId, TheoremOptions};
use spectraham::BipartiteGraph;
use wasm_bindgen::prelude::*;

/// Keeps the exponential oracle responsive in a browser tab.
pub const ORACLE_CAP: usize = 16;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn spectra_json(graph6: &str) -> Result<Value, String> {
    let g = parse_graph6(graph6.trim()).map_err(err)?;
    let opts = SpectralOptions::default();
    let mu = spectral_radius(&g, SpectralKind::Adjacency, &opts).map_err(err)?;
    let q = spectral_radius(&g, SpectralKind::SignlessLaplacian, &opts).map_err(err)?;
    let bounds = bounds_report(&g, None).map_err(err)?;
    Ok(json!({
        "digest": graph_digest(&g, None),
        "order": g.order(),
        "edges": g.edge_count(),
        "min_degree": g.min_degree(),
        "mu": mu.value,
        "q": q.value,
        "bounds": bounds,
    }))
}

/// `x_size == 0` reads the graph as a plain graph; otherwise vertices
/// `0..x_size` form the part X.
pub fn check_json(graph6: &str, x_size: usize, theorem: &str, k: usize) -> Result<Value, String> {
    let id: TheoremId = theorem.parse().map_err(err)?;
    let g = parse_graph6(graph6.trim()).map_err(err)?;
    let bipartite = match x_size {
        0 => None,
        x => Some(BipartiteGraph::from_graph(&g, x).map_err(err)?),
    };
    let input = match &bipartite {
        Some(b) => GraphRef::Bipartite(b),
        None => GraphRef::Simple(&g),
    };
    let verdict = check_theorem(id, input, k, &TheoremOptions::default()).map_err(err)?;
    let validation = cross_validate(&verdict, input, &OracleConfig { cap: ORACLE_CAP }).map_err(err)?;
    Ok(json!({
        "digest": bipartite.as_ref().map_or_else(|| graph_digest(&g, None), bipartite_digest),
        "verdict": verdict,
        "cross_validation": validation,
    }))
}

pub fn family_json(family: &str, n: usize, k: usize) -> Result<Value, String> {
    let spec = FamilySpec::from_name(family, Some(n), Some(k)).map_err(err)?;
    let fg = build_family(&spec).map_err(err)?;
    let g = fg.graph();
    Ok(json!({
        "family": spec,
        "graph6": write_graph6(&g),
        "order": g.order(),
        "edges": g.edge_count(),
        "x_size": fg.as_bipartite().map(|b| b.x_size()),
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn spectra(graph6: &str) -> Result<String, JsError> {
    to_js(spectra_json(graph6))
}

#[wasm_bindgen]
pub fn check(graph6: &str, x_size: usize, theorem: &str, k: usize) -> Result<String, JsError> {
    to_js(check_json(graph6, x_size, theorem, k))
}

#[wasm_bindgen]
pub fn family(family: &str, n: usize, k: usize) -> Result<String, JsError> {
    to_js(family_json(family, n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_spectra() {
        let v = spectra_json("Bw").unwrap();
        assert!((v["mu"].as_f64().unwrap() - 2.0).abs() < 1e-10);
        assert!((v["q"].as_f64().unwrap() - 4.0).abs() < 1e-10);
        assert_eq!(v["edges"], 3);
    }

    #[test]
    fn family_then_check() {
        let f = family_json("Cnk", 4, 1).unwrap();
        assert_eq!(f["x_size"], 3);
        let g6 = f["graph6"].as_str().unwrap();
        let v = check_json(g6, 3, "T3_9", 1).unwrap();
        assert_eq!(v["verdict"]["conclusion"]["kind"], "Exception");
        let v = check_json("H~~~~~~", 0, "t2_10", 2).unwrap();
        assert_eq!(v["verdict"]["conclusion"]["kind"], "Certified");
        assert_eq!(v["cross_validation"]["status"], "Agree");
    }

    #[test]
    fn bad_input_is_an_error() {
        assert!(spectra_json("B").is_err());
        assert!(check_json("Bw", 0, "T9_9", 1).is_err());
        assert!(family_json("Nope", 4, 1).is_err());
    }
}
