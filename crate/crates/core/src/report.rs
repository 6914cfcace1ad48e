//! Aggregated per-graph check results.

use std::fmt::Write as _;

use serde::Serialize;

use crate::checks::{
    charney_davis_check, has_eulerian_independence_complex, is_w2, is_well_covered, CharneyDavis, Verdict,
};
use crate::error::CheckError;
use crate::graph::Graph;
use crate::homology::{is_cm_over_q, is_gorenstein_over_q};

/// Which checks to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckSelection {
    pub well_covered: bool,
    pub w2: bool,
    pub eulerian: bool,
    pub cm: bool,
    pub gorenstein: bool,
    pub charney_davis: bool,
}

impl CheckSelection {
    pub fn all() -> Self {
        CheckSelection {
            well_covered: true,
            w2: true,
            eulerian: true,
            cm: true,
            gorenstein: true,
            charney_davis: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == CheckSelection::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub n: usize,
    pub alpha: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub well_covered: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w2: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eulerian: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cm: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charney_davis: Option<CharneyDavis>,
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "alpha: {}", self.alpha);
        let rows = [
            ("well-covered", &self.well_covered),
            ("w2", &self.w2),
            ("eulerian", &self.eulerian),
            ("cm", &self.cm),
            ("gorenstein", &self.gorenstein),
        ];
        for (name, v) in rows {
            if let Some(v) = v {
                let _ = writeln!(out, "{name}: {v}");
            }
        }
        if let Some(cd) = &self.charney_davis {
            let _ = writeln!(out, "charney-davis: {cd}");
        }
        out
    }
}

/// Runs the selected checks. The W2 size cap is the only error.
pub fn run_checks(graph: &Graph, selection: CheckSelection, force: bool) -> Result<CheckReport, CheckError> {
    let w2 = if selection.w2 { Some(is_w2(graph, force)?) } else { None };
    Ok(CheckReport {
        n: graph.n(),
        alpha: graph.independence_number(),
        well_covered: selection.well_covered.then(|| is_well_covered(graph)),
        w2,
        eulerian: selection.eulerian.then(|| has_eulerian_independence_complex(graph)),
        cm: selection.cm.then(|| is_cm_over_q(graph)),
        gorenstein: selection.gorenstein.then(|| is_gorenstein_over_q(graph)),
        charney_davis: selection.charney_davis.then(|| charney_davis_check(graph)),
    })
}
