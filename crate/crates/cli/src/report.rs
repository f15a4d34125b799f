//! Run reports, printed as `key: value` lines or as JSON with the same values.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

/// Outcome of the uniqueness re-check of a reported solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verification {
    Ok,
    Failed,
    Skipped,
}

impl Verification {
    fn as_str(self) -> &'static str {
        match self {
            Verification::Ok => "ok",
            Verification::Failed => "failed",
            Verification::Skipped => "skipped",
        }
    }
}

/// Everything a solver run reports. Vertex lists are 1-based.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub solver: String,
    pub instance: String,
    pub seed: u64,
    pub tie_break: String,
    pub opt: usize,
    pub witness: Vec<usize>,
    pub unique_cover: Option<Vec<usize>>,
    pub time_ms: f64,
    pub verification: Verification,
}

fn ids(list: &[usize]) -> String {
    list.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

impl RunReport {
    pub fn new(solver: &str, instance: &str, seed: u64, tie_break: &str, opt: usize, witness: Vec<usize>, elapsed: Duration) -> Self {
        RunReport {
            solver: solver.to_string(),
            instance: instance.to_string(),
            seed,
            tie_break: tie_break.to_string(),
            opt,
            witness,
            unique_cover: None,
            time_ms: elapsed.as_secs_f64() * 1e3,
            verification: Verification::Skipped,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# seed: {}, tie-break: {}", self.seed, self.tie_break);
        let _ = writeln!(s, "solver: {}", self.solver);
        let _ = writeln!(s, "instance: {}", self.instance);
        let _ = writeln!(s, "opt: {}", self.opt);
        let _ = writeln!(s, "witness: {}", ids(&self.witness));
        if let Some(c) = &self.unique_cover {
            let _ = writeln!(s, "unique_cover: {}", ids(c));
        }
        let _ = writeln!(s, "time_ms: {:.3}", self.time_ms);
        let _ = writeln!(s, "verification: {}", self.verification.as_str());
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
