//! JSON emission for augmentation runs. Key order is fixed by the struct,
//! so identical runs produce byte-identical documents.

use serde::Serialize;

use crate::aug::AugmentationSet;
use crate::verify::{AugmentationReport, Optimality};

#[derive(Serialize)]
struct JsonDoc {
    n: usize,
    r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower_bound: Option<usize>,
    eca: Vec<[usize; 2]>,
    round_tags: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    achieved_kappa: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    optimal: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

fn optimality_str(o: Optimality) -> &'static str {
    match o {
        Optimality::ProvenOptimal => "proven-optimal",
        Optimality::MatchesLowerBound => "matches-lower-bound",
        Optimality::Unknown => "unknown",
    }
}

/// Render a run as a single JSON object. Report fields appear only when a
/// verification report is supplied.
pub fn emit_json(
    n: usize,
    r: usize,
    eca: &AugmentationSet,
    report: Option<&AugmentationReport>,
) -> String {
    let doc = JsonDoc {
        n,
        r,
        lower_bound: report.map(|rep| rep.lower_bound),
        eca: eca.edges().iter().map(|&(u, v)| [u, v]).collect(),
        round_tags: eca.tags().iter().map(|t| t.to_string()).collect(),
        achieved_kappa: report.map(|rep| rep.achieved_kappa),
        optimal: report.map(|rep| optimality_str(rep.optimal)),
        witness: report.and_then(|rep| {
            rep.witness
                .as_ref()
                .map(|w| w.vertices.iter().copied().collect())
        }),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("serialization cannot fail");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aug::RoundTag;
    use crate::testutil::path;
    use crate::verify::verify_augmentation;

    #[test]
    fn bare_run_has_only_core_fields() {
        let mut eca = AugmentationSet::new();
        eca.push(1, 4, RoundTag::CycleClosure).unwrap();
        let text = emit_json(4, 2, &eca, None);
        assert!(text.contains("\"n\": 4"));
        assert!(text.contains("[\n      1,\n      4\n    ]"));
        assert!(text.contains("cycle-closure"));
        assert!(!text.contains("lower_bound"));
        assert!(!text.contains("witness"));
    }

    #[test]
    fn verified_run_includes_report() {
        let mut eca = AugmentationSet::new();
        eca.push(1, 4, RoundTag::CycleClosure).unwrap();
        let report = verify_augmentation(&path(4), &eca, 2).unwrap();
        let text = emit_json(4, 2, &eca, Some(&report));
        assert!(text.contains("\"lower_bound\": 1"));
        assert!(text.contains("\"achieved_kappa\": 2"));
        assert!(text.contains("matches-lower-bound"));
        assert!(!text.contains("witness"));
    }

    #[test]
    fn failed_verification_includes_witness() {
        let eca = AugmentationSet::new();
        let report = verify_augmentation(&path(4), &eca, 2).unwrap();
        let text = emit_json(4, 2, &eca, Some(&report));
        assert!(text.contains("\"achieved_kappa\": 1"));
        assert!(text.contains("witness"));
    }
}
