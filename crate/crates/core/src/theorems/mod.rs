//! The matrix `S_q = [(a_i^2 + a_i a_j + a_j^2) chi(a_i^2 + a_i a_j + a_j^2)]`
//! over GF(q), its determinant in terms of trinomial coefficients, and checks
//! for every identity used along the way.
//!
//! Each check returns a [`VerificationReport`] carrying both compared sides so
//! a failure can be inspected without rerunning anything.

mod carlitz;
mod cyclotomic;
mod lemmas;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::field::{Field, FieldElem};

pub use carlitz::{build_carlitz, carlitz_check, carlitz_expected, CARLITZ_MAX_P};
pub use cyclotomic::{
    build_circulant_row, build_s, build_s_ordered, corollary_a_report, det_s, det_s_circulant,
    pipeline_report, singular_scan, singular_scan_with, singularity_witness, thm_a_report,
    thm_b_formula, thm_b_preconditions, thm_b_report,
};
pub use lemmas::{
    eq_3_2_check, f_polynomial, lemma_2_1_check, lemma_2_2_check, lemma_3_1_check,
    lemma_3_1_random, lemma_3_2_check, power_sums,
};

/// Which identity a report verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Identity {
    ThmA,
    ThmB,
    CorollaryA,
    Lemma2_1,
    Lemma2_2,
    Lemma3_1,
    Lemma3_2,
    Eq3_2,
    Carlitz,
    SingularScanEntry,
    /// Circulant-row identities of the determinant pipeline: symmetry, plain
    /// and alternating sums, and agreement of the circulant determinant.
    Pipeline,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::ThmA,
        Identity::ThmB,
        Identity::CorollaryA,
        Identity::Lemma2_1,
        Identity::Lemma2_2,
        Identity::Lemma3_1,
        Identity::Lemma3_2,
        Identity::Eq3_2,
        Identity::Carlitz,
        Identity::SingularScanEntry,
        Identity::Pipeline,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Identity::ThmA => "ThmA",
            Identity::ThmB => "ThmB",
            Identity::CorollaryA => "CorollaryA",
            Identity::Lemma2_1 => "Lemma2_1",
            Identity::Lemma2_2 => "Lemma2_2",
            Identity::Lemma3_1 => "Lemma3_1",
            Identity::Lemma3_2 => "Lemma3_2",
            Identity::Eq3_2 => "Eq3_2",
            Identity::Carlitz => "Carlitz",
            Identity::SingularScanEntry => "SingularScanEntry",
            Identity::Pipeline => "Pipeline",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|i| i.as_str() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Status::Skipped(r) => Some(r),
            _ => None,
        }
    }
}

/// A compared quantity in serializable form.
///
/// Prime-field elements and small integers are `Int`; extension-field elements
/// are coefficient vectors (constant first); integer polynomials are lists of
/// decimal strings (constant first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Int(i64),
    Bool(bool),
    Coeffs(Vec<u32>),
    Poly(Vec<String>),
    List(Vec<Quantity>),
    Null,
}

impl Quantity {
    pub fn elem(field: &Field, x: FieldElem) -> Quantity {
        if field.is_prime_field() {
            Quantity::Int(x.index() as i64)
        } else {
            Quantity::Coeffs(field.coeffs(x))
        }
    }

    pub fn elems(field: &Field, xs: &[FieldElem]) -> Quantity {
        Quantity::List(xs.iter().map(|&x| Quantity::elem(field, x)).collect())
    }

    pub fn poly<T: ToString>(coeffs: &[T]) -> Quantity {
        Quantity::Poly(coeffs.iter().map(ToString::to_string).collect())
    }
}

/// Outcome of one identity check at one field size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: Identity,
    pub q: u64,
    pub p: u64,
    pub n: u32,
    pub modulus: Vec<u32>,
    pub status: Status,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub witness: Option<Quantity>,
    pub notes: Vec<String>,
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(identity: Identity, field: &Field) -> Self {
        VerificationReport {
            identity,
            q: field.order() as u64,
            p: field.p() as u64,
            n: field.degree(),
            modulus: field.modulus().to_vec(),
            status: Status::Skipped("not evaluated".into()),
            lhs: Quantity::Null,
            rhs: Quantity::Null,
            witness: None,
            notes: Vec::new(),
            seed: None,
            elapsed_ms: 0,
        }
    }

    pub(crate) fn skipped(identity: Identity, field: &Field, reason: impl Into<String>) -> Self {
        let mut r = Self::new(identity, field);
        r.status = Status::Skipped(reason.into());
        r
    }
}

/// Runs `body` and stamps the wall time onto the report it returns.
pub(crate) fn timed(body: impl FnOnce() -> VerificationReport) -> VerificationReport {
    let start = Instant::now();
    let mut report = body();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// `(q + 1) / 2`, the exponent and trinomial row index used throughout.
pub(crate) fn half_up(field: &Field) -> usize {
    (field.order() as usize).div_ceil(2)
}

/// `a / b` for small integer constants, computed in the field.
pub(crate) fn ratio(field: &Field, a: i64, b: i64) -> FieldElem {
    field
        .div(field.from_int(a), field.from_int(b))
        .expect("denominator invertible under the caller's preconditions")
}
