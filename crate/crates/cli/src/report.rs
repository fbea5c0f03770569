//! The JSON report schema.
//!
//! Every struct rejects unknown fields, so [`validate`] doubles as a schema
//! check: a document is valid when it deserializes into a [`Report`] and
//! serializes back to the same bytes.

use rmcode::codes::Cell;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "rmcode.report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema: String,
    pub version: String,
    pub input: Input,
    pub budget: u64,
    pub analyses: Vec<String>,
    pub results: Results,
    /// Steps that stopped on the budget; their results are absent.
    pub incomplete: Vec<Incomplete>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Input {
    pub field: FieldSpec,
    pub order: String,
    pub affine: bool,
    /// Projective points, after the closure for affine input.
    pub points: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    /// Coefficients `m_0 .. m_k` of the defining polynomial.
    pub modulus: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Incomplete {
    pub analysis: String,
    pub error: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Results {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indicators: Option<IndicatorResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codes: Option<Vec<CodeResult>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ghw: Option<GhwResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_matrix: Option<WeightResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub footprint: Option<Vec<Vec<Option<i64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selfdual: Option<Vec<SelfDualResult>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regular_form: Option<RegularFormResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<GorensteinResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealResult {
    /// Reduced Groebner basis.
    pub gb: Vec<String>,
    pub minimal_generators: usize,
    pub complete_intersection: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HilbertResult {
    /// `H(0), ..., H(r0)`.
    pub values: Vec<u64>,
    pub h_vector: Vec<u64>,
    pub r0: u32,
    pub degree: u64,
    pub symmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndicatorResult {
    pub functions: Vec<String>,
    /// `f_i(P_i)`.
    pub values: Vec<String>,
    pub v_numbers: Vec<u32>,
    pub v_number: u32,
    pub essential: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeResult {
    pub degree: u32,
    pub length: u64,
    pub dimension: u64,
    /// Absent when enumeration exceeds the budget.
    pub min_distance: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GhwResult {
    pub degree: u32,
    pub r: usize,
    pub value: Cell,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightResult {
    /// `cells[d-1][r-1]`.
    pub cells: Vec<Vec<Cell>>,
    pub fully_resolved: bool,
    pub footprint_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualityResult {
    pub holds: bool,
    pub symmetric_sum: bool,
    pub v_all_r0: bool,
    pub beta: Option<Vec<String>>,
    pub beta_source: Option<String>,
    pub verified_degrees: Vec<u32>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub degree: Option<u32>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelfDualResult {
    pub degree: u32,
    pub self_orthogonal: bool,
    pub self_dual: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegularFormResult {
    pub h: String,
    pub extension_degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GorensteinResult {
    pub h: String,
    pub extension_degree: u32,
    #[serde(rename = "type")]
    pub socle_type: usize,
    pub level: bool,
    pub gorenstein: bool,
    pub complete_intersection: bool,
    pub s_number: u32,
    pub socle_degrees: Vec<u32>,
    pub socle: Vec<String>,
    pub socle_monomial: Option<String>,
    /// Global duality holds exactly when the ideal is Gorenstein.
    pub duality_crosscheck: Option<bool>,
}

/// Canonical JSON text of a report.
pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

/// Parses `text` as a report and checks that it is in canonical form.
pub fn validate(text: &str) -> Result<Report, String> {
    let report: Report = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if report.schema != SCHEMA {
        return Err(format!("unknown schema {:?}, expected {SCHEMA:?}", report.schema));
    }
    if to_json(&report) != text {
        return Err("document is not in canonical form".into());
    }
    Ok(report)
}
