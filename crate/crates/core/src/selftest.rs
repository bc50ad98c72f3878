//! End-to-end checks of the three flagship computations, with timings.
//!
//! Timings are reported but never serialised, so machine-readable output
//! stays byte-identical across runs.

use crate::chebyshev;
use crate::exact_arith::Rational;
use crate::ks::{self, Certificate, Vec3};
use crate::unitfrac;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, Serialize)]
pub struct LegReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelfTestReport {
    pub legs: Vec<LegReport>,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.legs.iter().all(|l| l.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

fn timed(name: &'static str, body: impl FnOnce() -> (bool, String)) -> LegReport {
    let start = Instant::now();
    let (passed, detail) = body();
    LegReport { name, passed, detail, millis: start.elapsed().as_millis() }
}

pub fn run() -> SelfTestReport {
    let items = ks::peres33()
        .into_iter()
        .zip(ks::peres33_compact())
        .map(|(v, label)| (v, Some(label)))
        .collect();
    SelfTestReport {
        legs: vec![run_unitfrac_leg(), run_ks_leg(items), run_chebyshev_leg()],
    }
}

fn run_unitfrac_leg() -> LegReport {
    timed("unitfrac-classification", || {
        let expected: Vec<Vec<u64>> = vec![vec![2, 3, 6], vec![2, 4, 4], vec![3, 3, 3]];
        match unitfrac::enumerate(3, &Rational::from_integer(1.into()), 2) {
            Ok(found) if found == expected => {
                (true, "1 = 1/p + 1/q + 1/r with 2 <= p <= q <= r: (2,3,6), (2,4,4), (3,3,3)".into())
            }
            Ok(found) => (false, format!("expected {expected:?}, got {found:?}")),
            Err(e) => (false, format!("enumeration failed: {e}")),
        }
    })
}

/// The dataset is injectable so a sabotaged build (e.g. a vector dropped
/// from the table) is reported as a deviation from the golden outcome.
pub fn run_ks_leg(items: Vec<(Vec3, Option<String>)>) -> LegReport {
    timed("ks-uncolourability", || {
        let graph = match ks::OrthGraph::build_labeled(items) {
            Ok(g) => g,
            Err(e) => return (false, format!("graph construction failed: {e}")),
        };
        let summary = format!(
            "{} rays, {} orthogonal pairs, {} triples",
            graph.len(),
            graph.edges().len(),
            graph.triples().len()
        );
        let cert = match ks::search(&graph, &[]) {
            Ok(c) => c,
            Err(e) => return (false, format!("search failed: {e}")),
        };
        if let Err(e) = ks::check_certificate(&graph, &[], &cert) {
            return (false, format!("certificate rejected by the checker: {e}"));
        }
        match &cert {
            Certificate::Uncolourable { tree } => (
                true,
                format!(
                    "{summary}: uncolourable, checker-valid refutation with {} branches",
                    tree.branch_count()
                ),
            ),
            Certificate::Colourable { .. } => (
                false,
                format!("{summary}: colourable — deviates from the golden verdict (uncolourable)"),
            ),
        }
    })
}

fn run_chebyshev_leg() -> LegReport {
    timed("chebyshev-membership", || {
        let (member, witness) = match chebyshev::prove_mult_formula() {
            Ok(pair) => pair,
            Err(e) => return (false, format!("membership computation failed: {e}")),
        };
        if !member {
            return (false, "goal reported outside the ideal".into());
        }
        let Some(witness) = witness else {
            return (false, "member verdict arrived without a witness".into());
        };
        let inst = chebyshev::instance();
        match witness.verify(&inst.goal, &inst.generators) {
            Ok(true) => (
                true,
                "product-formula goal is in the ideal; witness re-expands to the goal".into(),
            ),
            Ok(false) => (false, "witness does not re-expand to the goal".into()),
            Err(e) => (false, format!("witness verification failed: {e}")),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_fresh_build_passes_all_legs() {
        let report = run();
        assert_eq!(report.legs.len(), 3);
        for leg in &report.legs {
            assert!(leg.passed, "{}: {}", leg.name, leg.detail);
        }
        assert!(report.passed());
    }

    #[test]
    fn dropping_a_vector_is_flagged_as_a_deviation() {
        let mut items: Vec<_> = ks::peres33()
            .into_iter()
            .zip(ks::peres33_compact())
            .map(|(v, label)| (v, Some(label)))
            .collect();
        items.pop();
        let leg = run_ks_leg(items);
        assert!(!leg.passed);
        assert!(leg.detail.contains("deviates"), "{}", leg.detail);
        assert!(leg.detail.contains("32 rays"), "{}", leg.detail);
    }

    #[test]
    fn json_report_carries_no_timings() {
        let report = SelfTestReport {
            legs: vec![LegReport {
                name: "example",
                passed: true,
                detail: "ok".into(),
                millis: 17,
            }],
        };
        let json = report.to_json();
        assert!(!json.contains("millis"), "{json}");
        assert!(json.contains("\"passed\": true"), "{json}");
    }
}
