use serde::Serialize;

/// Sidecar written by `elhs expand`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionReport {
    pub n: usize,
    pub p: usize,
    pub m: usize,
    pub degree: f64,
    /// `none`, `centered` or `geometric`.
    pub metric: String,
    /// Score of the returned design under `metric`; null when not optimizing.
    pub metric_value: Option<f64>,
    pub candidates_evaluated: usize,
    pub seed: u64,
    /// Centered L2 discrepancy of the output, reported whatever the target.
    pub centered_l2: f64,
}

impl ExpansionReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
