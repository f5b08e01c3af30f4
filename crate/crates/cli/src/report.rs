//! Serializable output models. Every JSON document printed by the binary has
//! a struct here, and each struct round-trips: parsing the printed form gives
//! back an equal value.

use circ_spectra_core::circulant::{EigenvalueKind, EigenvalueRecord, MatrixKind, SpectrumReport};
use circ_spectra_core::integrality::IntegralityCertificate;
use serde::{Deserialize, Serialize};

use crate::sweep::{Disagreement, SweepOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub n: u64,
    pub set: Vec<u64>,
    pub matrix: String,
    pub eigenvalues: Vec<EigenvalueJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueJson {
    pub j: u64,
    pub value: String,
    pub kind: String,
}

pub fn matrix_name(kind: MatrixKind) -> &'static str {
    match kind {
        MatrixKind::Adjacency => "adj",
        MatrixKind::HermitianSecondKind => "hs",
    }
}

pub fn kind_name(kind: &EigenvalueKind) -> &'static str {
    match kind {
        EigenvalueKind::Integer(_) => "integer",
        EigenvalueKind::Eisenstein(_) => "eisenstein",
        EigenvalueKind::NonIntegral => "non-integral",
    }
}

/// Exact rendering: the integer or Eisenstein value when one exists,
/// otherwise the reduced root-of-unity sum itself.
pub fn value_string(record: &EigenvalueRecord) -> String {
    match &record.kind {
        EigenvalueKind::Integer(m) => m.to_string(),
        EigenvalueKind::Eisenstein(e) => e.render(),
        EigenvalueKind::NonIntegral => record.exact.render(),
    }
}

impl From<&SpectrumReport> for SpectrumJson {
    fn from(report: &SpectrumReport) -> Self {
        SpectrumJson {
            n: report.n,
            set: report.set.clone(),
            matrix: matrix_name(report.matrix).to_owned(),
            eigenvalues: report
                .entries
                .iter()
                .map(|e| EigenvalueJson {
                    j: e.j,
                    value: value_string(e),
                    kind: kind_name(&e.kind).to_owned(),
                })
                .collect(),
        }
    }
}

/// Numeric form, preferring the classified exact value (no summation noise)
/// and falling back to the floating sum only for non-integral entries.
fn clean_numeric(record: &EigenvalueRecord) -> num_complex::Complex64 {
    use num_traits::ToPrimitive;
    match &record.kind {
        EigenvalueKind::Integer(m) => {
            num_complex::Complex64::new(m.to_f64().unwrap_or(f64::NAN), 0.0)
        }
        EigenvalueKind::Eisenstein(e) => e.to_complex(),
        EigenvalueKind::NonIntegral => record.numeric,
    }
}

/// CSV with columns j, re, im, exact, kind. None of the exact renderings
/// contain commas, so no quoting is needed.
pub fn spectrum_csv(report: &SpectrumReport) -> String {
    let mut out = String::from("j,re,im,exact,kind\n");
    for e in &report.entries {
        let numeric = clean_numeric(e);
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            e.j,
            numeric.re,
            numeric.im,
            value_string(e),
            kind_name(&e.kind)
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewAtomJson {
    pub d: u64,
    pub class: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub symmetric_divisors: Vec<u64>,
    pub skew_atoms: Vec<SkewAtomJson>,
}

impl From<&IntegralityCertificate> for CertificateJson {
    fn from(cert: &IntegralityCertificate) -> Self {
        CertificateJson {
            symmetric_divisors: cert.symmetric_divisors().to_vec(),
            skew_atoms: cert
                .skew_atoms()
                .iter()
                .map(|&(d, class)| SkewAtomJson { d, class })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub n: u64,
    pub set: Vec<u64>,
    pub hs_integral: bool,
    pub eisenstein_integral: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdClassJson {
    pub d: u64,
    pub members: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewClassJson {
    pub d: u64,
    pub class: u8,
    pub members: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomsJson {
    pub n: u64,
    pub gcd_classes: Vec<GcdClassJson>,
    pub skew_classes: Vec<SkewClassJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamanujanJson {
    pub n: u64,
    pub q: u64,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TsumJson {
    pub n: u64,
    pub q: u64,
    pub method: String,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratedSetJson {
    pub members: Vec<u64>,
    pub certificate: CertificateJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateJson {
    pub n: u64,
    pub count: u64,
    pub sets: Vec<EnumeratedSetJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisagreementJson {
    pub n: u64,
    pub members: Vec<u64>,
    pub matrix: String,
    pub structural: bool,
    pub oracle: bool,
}

impl From<&Disagreement> for DisagreementJson {
    fn from(d: &Disagreement) -> Self {
        DisagreementJson {
            n: d.n,
            members: d.members.clone(),
            matrix: d.which.to_owned(),
            structural: d.structural,
            oracle: d.oracle,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepJson {
    pub n_low: u64,
    pub n_high: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples_per_n: Option<u64>,
    pub sets_checked: u64,
    pub disagreements: Vec<DisagreementJson>,
}

impl SweepJson {
    pub fn new(n_low: u64, n_high: u64, samples_per_n: Option<u64>, outcome: &SweepOutcome) -> Self {
        SweepJson {
            n_low,
            n_high,
            samples_per_n,
            sets_checked: outcome.sets_checked,
            disagreements: outcome.disagreements.iter().map(DisagreementJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub exhaustive: SweepJson,
    pub sampled: SweepJson,
    pub agreement: bool,
}
