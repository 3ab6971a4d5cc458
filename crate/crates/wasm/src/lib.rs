//! Browser bindings for the demo page: analyze a group, decide an edge-list
//! graph, and sweep a theorem family. Every function returns a JSON string
//! so the page needs no generated TypeScript glue beyond `JSON.parse`.

use wasm_bindgen::prelude::*;

use coprime_divisor::analysis::analyze;
use coprime_divisor::classify::{verify_families, VerifyOptions};
use coprime_divisor::graph::Graph;
use coprime_divisor::group::GroupSpec;
use coprime_divisor::recognize::{brute_force_is_divisor, is_divisor_graph};

fn ok(value: serde_json::Value) -> String {
    serde_json::json!({ "ok": value }).to_string()
}

fn err(message: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": message.to_string() }).to_string()
}

/// Full analysis of a group spec (`"S 7"`, `"D 12"`, `"DP (Z 4) (S 3)"`,
/// `"SPEC M23 : 2,3,..."`): spectrum, radical graph, verdict, certificate.
#[wasm_bindgen]
pub fn analyze_group(spec_text: &str) -> String {
    let spec: GroupSpec = match spec_text.parse() {
        Ok(spec) => spec,
        Err(e) => return err(e),
    };
    match analyze(&spec) {
        Ok(report) => ok(report.to_json()),
        Err(e) => err(e),
    }
}

/// Decides an edge-list graph (`u v` lines, lone tokens for isolated
/// vertices, `#` comments). Set `oracle` to cross-check with the
/// brute-force ordering search (graphs of at most 9 vertices).
#[wasm_bindgen]
pub fn decide_edge_list(text: &str, oracle: bool) -> String {
    let g = match Graph::parse_edge_list(text) {
        Ok(g) => g,
        Err(e) => return err(e),
    };
    let verdict = is_divisor_graph(&g);
    let oracle_verdict = if oracle {
        match brute_force_is_divisor(&g) {
            Ok(v) => Some(v),
            Err(e) => return err(e),
        }
    } else {
        None
    };
    ok(serde_json::json!({
        "vertices": g.labels().collect::<Vec<_>>(),
        "edges": g.edges(),
        "is_divisor": verdict.is_divisor,
        "method": verdict.method.to_string(),
        "oracle": oracle_verdict,
        "certificate": verdict.certificate.as_ref().map(|cert| serde_json::json!({
            "orientation": cert.orientation.to_json(),
            "labels": cert.labeling.to_json()["labels"].clone(),
        })),
        "obstruction": verdict.obstruction.as_ref().map(|o| {
            serde_json::json!({
                "detail": o.to_string(),
                "data": serde_json::to_value(o).expect("obstruction serializes"),
            })
        }),
    }))
}

/// Runs one verification family (for example `dihedral` or `sporadic`) with
/// the given parameter bound, returning the per-case report.
#[wasm_bindgen]
pub fn sweep_family(family: &str, max_n: u32, oracle_cases: u32, seed: u32) -> String {
    let mut options = VerifyOptions {
        family: Some(family.to_owned()),
        oracle_cases: oracle_cases as usize,
        seed: u64::from(seed),
        ..VerifyOptions::default()
    };
    if max_n > 0 {
        options.max_dihedral_n = u64::from(max_n);
        options.max_dicyclic_t = u64::from(max_n);
        options.max_degree = max_n.min(64);
    }
    match verify_families(&options) {
        Ok(reports) => ok(reports[0].to_json()),
        Err(e) => err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_round_trips_json() {
        let raw = analyze_group("S 7");
        let value: serde_json::Value = serde_json::from_str(&raw).unwrap();
        assert_eq!(value["ok"]["verdict"]["is_divisor"], serde_json::json!(true));

        let bad: serde_json::Value = serde_json::from_str(&analyze_group("W 1")).unwrap();
        assert!(bad["error"].is_string());
    }

    #[test]
    fn decide_reports_structure() {
        let raw = decide_edge_list("a b\nb c\n", true);
        let value: serde_json::Value = serde_json::from_str(&raw).unwrap();
        assert_eq!(value["ok"]["is_divisor"], serde_json::json!(true));
        assert_eq!(value["ok"]["oracle"], serde_json::json!(true));
    }

    #[test]
    fn sweep_family_reports() {
        let raw = sweep_family("dihedral", 40, 0, 7);
        let value: serde_json::Value = serde_json::from_str(&raw).unwrap();
        assert_eq!(value["ok"]["all_agree"], serde_json::json!(true));

        let bad: serde_json::Value =
            serde_json::from_str(&sweep_family("nonsense", 10, 0, 7)).unwrap();
        assert!(bad["error"].is_string());
    }
}
