//! Group analysis reports: one call bundles the spectrum, the radical
//! graph, and the certified divisor-graph verdict, with text, JSON, and DOT
//! renderings. JSON output is byte-deterministic for identical inputs.

use std::fmt::Write as _;

use crate::classify::{coprime_is_divisor_from_spectrum, ClassifyError};
use crate::group::{GroupSpec, DEFAULT_ELEMENT_CAP};
use crate::group_graphs::{radical_graph, RadicalGraph};
use crate::recognize::Verdict;

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub spec: String,
    /// |G| when the spectrum has exact multiplicities.
    pub group_order: Option<u64>,
    pub pi: Vec<u64>,
    pub pi_e: Vec<u64>,
    pub radicals: Vec<u64>,
    pub radical_graph: RadicalGraph,
    pub verdict: Verdict,
}

/// Analyzes one group: spectrum, radical graph, and certified verdict.
pub fn analyze(spec: &GroupSpec) -> Result<AnalysisReport, ClassifyError> {
    analyze_with_cap(spec, DEFAULT_ELEMENT_CAP)
}

/// As `analyze`, with a custom enumeration cap.
pub fn analyze_with_cap(spec: &GroupSpec, cap: usize) -> Result<AnalysisReport, ClassifyError> {
    let spectrum = spec.order_spectrum_with_cap(cap)?;
    let verdict = coprime_is_divisor_from_spectrum(&spectrum);
    Ok(AnalysisReport {
        spec: spec.to_string(),
        group_order: spectrum.total(),
        pi: spectrum.prime_set().into_iter().collect(),
        pi_e: spectrum.pi_e().into_iter().collect(),
        radicals: spectrum.radicals().into_iter().collect(),
        radical_graph: radical_graph(&spectrum),
        verdict,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> serde_json::Value {
        let verdict = serde_json::json!({
            "is_divisor": self.verdict.is_divisor,
            "method": self.verdict.method.to_string(),
            "certificate": self.verdict.certificate.as_ref().map(|cert| {
                serde_json::json!({
                    "orientation": cert.orientation.to_json(),
                    "labels": cert.labeling.to_json()["labels"].clone(),
                })
            }),
            "obstruction": self.verdict.obstruction.as_ref().map(|o| {
                serde_json::to_value(o).expect("obstruction serializes")
            }),
        });
        serde_json::json!({
            "spec": self.spec,
            "group_order": self.group_order,
            "pi": self.pi,
            "pi_e": self.pi_e,
            "radicals": self.radicals,
            "radical_graph": self.radical_graph.to_json(),
            "verdict": verdict,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group:        {}", self.spec);
        match self.group_order {
            Some(order) => {
                let _ = writeln!(out, "order:        {order}");
            }
            None => {
                let _ = writeln!(out, "order:        (support-only spectrum)");
            }
        }
        let _ = writeln!(out, "pi(G):        {}", format_set(&self.pi));
        let _ = writeln!(out, "pi_e(G):      {}", format_set(&self.pi_e));
        let _ = writeln!(out, "radicals:     {}", format_set(&self.radicals));
        let _ = writeln!(
            out,
            "radical graph: {} vertices, {} edges",
            self.radical_graph.vertex_count(),
            self.radical_graph.graph().edge_count()
        );
        if self.verdict.is_divisor {
            let _ = writeln!(out, "verdict:      divisor graph ({})", self.verdict.method);
        } else {
            let _ = writeln!(out, "verdict:      NOT a divisor graph ({})", self.verdict.method);
        }
        if let Some(cert) = &self.verdict.certificate {
            let arrows: Vec<String> = cert
                .orientation
                .directed_edges()
                .map(|(u, v)| format!("{u}->{v}"))
                .collect();
            let _ = writeln!(out, "orientation:  {}", arrows.join(" "));
            let labels: Vec<String> =
                cert.labeling.labels().iter().map(|(v, n)| format!("{v}={n}")).collect();
            let _ = writeln!(out, "labels:       {}", labels.join(" "));
        }
        if let Some(obstruction) = &self.verdict.obstruction {
            let _ = writeln!(out, "obstruction:  {obstruction}");
        }
        out
    }

    /// Radical graph as DOT: a digraph annotated with divisor labels when
    /// certified, a plain graph otherwise.
    pub fn to_dot(&self) -> String {
        match &self.verdict.certificate {
            Some(cert) => self.radical_graph.graph().to_dot_oriented(
                "radicals",
                &cert.orientation,
                |v| {
                    cert.labeling
                        .get(v)
                        .map(|n| format!("label=\"{v}\\ndiv {n}\""))
                },
            ),
            None => self.radical_graph.graph().to_dot("radicals", |_| None),
        }
    }

    /// CLI exit-code convention: 0 divisor, 1 not.
    pub fn exit_code(&self) -> i32 {
        if self.verdict.is_divisor {
            0
        } else {
            1
        }
    }
}

fn format_set(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s7_report() {
        let report = analyze(&"S 7".parse().unwrap()).unwrap();
        assert_eq!(report.group_order, Some(5040));
        assert_eq!(report.pi, vec![2, 3, 5, 7]);
        assert_eq!(report.radicals, vec![2, 3, 5, 6, 7, 10]);
        assert!(report.verdict.is_divisor);
        let json = report.to_json();
        assert_eq!(json["verdict"]["method"], "four-prime-theorem");
        assert!(json["verdict"]["certificate"]["orientation"].is_array());
        assert!(report.to_text().contains("divisor graph"));
        assert!(report.to_dot().starts_with("digraph"));
    }

    #[test]
    fn z30_report_has_obstruction() {
        let report = analyze(&"Z 30".parse().unwrap()).unwrap();
        assert!(!report.verdict.is_divisor);
        assert_eq!(report.exit_code(), 1);
        let json = report.to_json();
        assert_eq!(json["verdict"]["obstruction"]["kind"], "composite-radical");
        assert!(report.to_dot().starts_with("graph"));
    }

    #[test]
    fn json_is_deterministic() {
        let a = analyze(&"D 60".parse().unwrap()).unwrap().to_json().to_string();
        let b = analyze(&"D 60".parse().unwrap()).unwrap().to_json().to_string();
        assert_eq!(a, b);
    }

    #[test]
    fn support_only_spectrum_has_no_order() {
        let report =
            analyze(&"SPEC M23 : 2,3,4,5,6,7,8,11,14,15,23".parse().unwrap()).unwrap();
        assert_eq!(report.group_order, None);
        assert!(report.verdict.is_divisor);
    }
}
