//! Versioned JSON report shapes. Key order is fixed by field declaration
//! order and no other keys are ever emitted; timings live in dedicated
//! fields so the rest of a report is byte-identical across identical runs.

use serde::Serialize;
use truemper::model::ModelReport;
use truemper::Witness;

#[derive(Serialize)]
pub struct StageMs {
    pub stage: &'static str,
    pub ms: f64,
}

#[derive(Serialize)]
pub struct DetectReport {
    pub schema: &'static str,
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub contains_k23: bool,
    pub stage: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precondition_violation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelReport>,
    pub timings_ms: Vec<StageMs>,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub schema: &'static str,
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub method: &'static str,
    pub contains: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separator: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub elapsed_ms: f64,
}

#[derive(Serialize, Clone, Copy)]
pub struct MethodAnswers {
    pub pipeline: bool,
    #[serde(rename = "model-search")]
    pub model_search: bool,
    #[serde(rename = "separator-criterion")]
    pub separator_criterion: bool,
    #[serde(rename = "exhaustive-config")]
    pub exhaustive_config: bool,
}

impl MethodAnswers {
    pub fn unanimous(&self) -> bool {
        self.pipeline == self.model_search
            && self.pipeline == self.separator_criterion
            && self.pipeline == self.exhaustive_config
    }
}

#[derive(Serialize)]
pub struct MethodCounts {
    pub pipeline: usize,
    #[serde(rename = "model-search")]
    pub model_search: usize,
    #[serde(rename = "separator-criterion")]
    pub separator_criterion: usize,
    #[serde(rename = "exhaustive-config")]
    pub exhaustive_config: usize,
}

#[derive(Serialize)]
pub struct Counterexample {
    pub edgelist: String,
    pub answers: MethodAnswers,
}

#[derive(Serialize)]
pub struct XcheckReport {
    pub schema: &'static str,
    pub n: usize,
    pub count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checked: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub positives_by_method: MethodCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: f64,
}

#[derive(Serialize)]
pub struct BenchRun {
    pub mode: &'static str,
    pub runs_ms: Vec<f64>,
    pub mean_ms: f64,
    pub positives: usize,
}

#[derive(Serialize)]
pub struct BenchReport {
    pub schema: &'static str,
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub reps: usize,
    pub results: Vec<BenchRun>,
}

pub fn print_json<T: Serialize>(report: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("reports serialize")
    );
}
