//! Output types and format rendering. JSON is the machine contract:
//! every JSON document printed here parses back into its emitting type.

use appell_core::{Parity, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Tsv,
}

impl Format {
    /// Separator for tabular rows: CSV matches the documented
    /// comma-space table format, TSV uses tabs.
    pub fn sep(self) -> &'static str {
        match self {
            Format::Csv => ", ",
            _ => "\t",
        }
    }
}

pub fn join_row<I: IntoIterator<Item = String>>(format: Format, cells: I) -> String {
    cells.into_iter().collect::<Vec<_>>().join(format.sep())
}

/// 17 significant digits; round-trips f64 exactly and keeps output
/// byte-identical across runs.
pub fn f64_repr(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueRow {
    pub n: usize,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumbersOutput {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<u32>,
    pub max: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub values: Option<Vec<ValueRow>>,
    /// Stirling triangle rows; row n lists s(n,0)..s(n,n).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rows: Option<Vec<Vec<Rational>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyOutput {
    pub coeffs: Vec<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub at: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisOutput {
    pub kind: String,
    pub n: usize,
    pub a: Rational,
    pub basis: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberOutput {
    pub kind: String,
    pub n: usize,
    pub a: Rational,
    pub in_span: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coordinates: Option<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeOutput {
    pub parameter_a: Rational,
    pub parity: Parity,
    pub a_coeffs: Vec<Rational>,
    pub remainder_coeffs: Vec<Rational>,
    pub n: usize,
    /// Coefficients of the reconstructed P_n.
    pub reconstruction: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierOutput {
    pub target: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<u32>,
    pub variant: String,
    pub x: Rational,
    pub terms: u64,
    pub partial_sum: f64,
    pub imag_residue: f64,
    pub exact: Rational,
    pub abs_error: f64,
}

impl FourierOutput {
    /// Hand-rendered JSON so the doubles carry 17 significant digits.
    pub fn to_json(&self) -> String {
        let order = match self.order {
            Some(r) => format!("\"order\":{r},"),
            None => String::new(),
        };
        format!(
            "{{\"target\":\"{}\",\"n\":{},{}\"variant\":\"{}\",\"x\":\"{}\",\"terms\":{},\
             \"partial_sum\":{},\"imag_residue\":{},\"exact\":\"{}\",\"abs_error\":{}}}",
            self.target,
            self.n,
            order,
            self.variant,
            self.x,
            self.terms,
            f64_repr(self.partial_sum),
            f64_repr(self.imag_residue),
            self.exact,
            f64_repr(self.abs_error),
        )
    }

    /// Plot row: x, partial sum, exact value, absolute error.
    pub fn row(&self, format: Format) -> String {
        join_row(
            format,
            [
                f64_repr(self.x.to_f64()),
                f64_repr(self.partial_sum),
                f64_repr(self.exact.to_f64()),
                f64_repr(self.abs_error),
            ],
        )
    }
}
