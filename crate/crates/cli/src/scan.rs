//! Verification scans over ranges of q with a resumable result store.

use std::path::PathBuf;

use cyclodet_core::primes::{is_prime, odd_prime_powers};
use cyclodet_core::theorems::{
    build_circulant_row, carlitz_check, corollary_a_report, eq_3_2_check, lemma_2_1_check, lemma_2_2_check,
    lemma_3_1_random, lemma_3_2_check, pipeline_report, thm_a_report, thm_b_report, CARLITZ_MAX_P,
};
use cyclodet_core::{Field, Identity, VerificationReport};
use thiserror::Error;

use crate::record::{exit_code, ResultRecord};
use crate::store::{completed_keys, read_store, StoreError, StoreWriter};

/// Random instances per field for the `det[P(x_i y_j)]` product formula.
pub const LEMMA_3_1_INSTANCES: usize = 100;
pub const LEMMA_3_1_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    A,
    B,
    Corollary,
    Lemmas,
    All,
}

impl Selector {
    /// Identities evaluated at order q, in record order.
    pub fn identities(self, q: u64) -> Vec<Identity> {
        let mut out = Vec::new();
        if matches!(self, Selector::A | Selector::All) {
            out.push(Identity::ThmA);
        }
        if matches!(self, Selector::B | Selector::All) {
            out.push(Identity::ThmB);
        }
        if matches!(self, Selector::Corollary | Selector::All) && is_prime(q) {
            out.push(Identity::CorollaryA);
        }
        if matches!(self, Selector::Lemmas | Selector::All) {
            out.extend([
                Identity::Pipeline,
                Identity::Lemma2_1,
                Identity::Lemma2_2,
                Identity::Lemma3_1,
                Identity::Lemma3_2,
                Identity::Eq3_2,
            ]);
            if is_prime(q) && q <= CARLITZ_MAX_P {
                out.push(Identity::Carlitz);
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub selector: Selector,
    pub q_min: u64,
    pub q_max: u64,
    pub jobs: usize,
    pub out: PathBuf,
    pub resume: bool,
    pub seed: u64,
    pub include_edge: bool,
    pub max_q: u64,
    /// Write measured `elapsed_ms`; when false it is recorded as 0 so that
    /// repeated runs produce byte-identical stores.
    pub record_timing: bool,
}

impl ScanConfig {
    pub fn new(selector: Selector, q_min: u64, q_max: u64, out: impl Into<PathBuf>) -> Self {
        ScanConfig {
            selector,
            q_min,
            q_max,
            jobs: 1,
            out: out.into(),
            resume: false,
            seed: 0,
            include_edge: false,
            max_q: cyclodet_core::field::max_q_from_env(),
            record_timing: true,
        }
    }

    pub fn validate(&self) -> Result<(), ScanError> {
        if self.q_min > self.q_max {
            return Err(ScanError::Config(format!("q_min = {} exceeds q_max = {}", self.q_min, self.q_max)));
        }
        if self.jobs == 0 {
            return Err(ScanError::Config("jobs must be at least 1".into()));
        }
        if self.q_max > self.max_q {
            return Err(ScanError::Config(format!(
                "q_max = {} exceeds the size bound {} (set CYCLODET_MAX_Q to raise it)",
                self.q_max, self.max_q
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0} already exists; pass --resume to continue it or choose another path")]
    StoreExists(PathBuf),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("q = {q}: {message}")]
    Job { q: u64, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutcome {
    pub new_records: usize,
    pub total_records: usize,
    pub exit_code: i32,
}

/// Evaluates one identity at one field.
pub fn evaluate(identity: Identity, field: &Field, cfg: &ScanConfig) -> Result<VerificationReport, String> {
    let q = field.order() as u64;
    let p = field.p() as u64;
    let err = |e: cyclodet_core::TheoremError| e.to_string();
    Ok(match identity {
        Identity::ThmA => thm_a_report(field, cfg.include_edge),
        Identity::ThmB => thm_b_report(field),
        Identity::CorollaryA => corollary_a_report(p, cfg.include_edge).map_err(err)?,
        Identity::Pipeline => pipeline_report(field),
        Identity::Lemma2_1 => {
            let row = build_circulant_row(field, field.primitive_element()).map_err(err)?;
            lemma_2_1_check(field, &row).map_err(err)?
        }
        Identity::Lemma2_2 => lemma_2_2_check(field, 3 * (q as usize - 1)).map_err(err)?,
        Identity::Lemma3_1 => lemma_3_1_random(field, cfg.seed, LEMMA_3_1_INSTANCES, LEMMA_3_1_MAX_N),
        Identity::Lemma3_2 => lemma_3_2_check(field),
        Identity::Eq3_2 => eq_3_2_check(field),
        Identity::Carlitz => carlitz_check(p).map_err(err)?,
        Identity::SingularScanEntry => return Err("singular-scan entries are produced by the singular-scan command".into()),
    })
}

fn run_q(q: u64, identities: &[Identity], cfg: &ScanConfig) -> Result<Vec<ResultRecord>, ScanError> {
    let field = Field::of_order(q, cfg.max_q).map_err(|e| ScanError::Job { q, message: e.to_string() })?;
    identities
        .iter()
        .map(|&id| {
            evaluate(id, &field, cfg)
                .map(|r| ResultRecord::from_report(r, cfg.seed, cfg.record_timing))
                .map_err(|message| ScanError::Job { q, message })
        })
        .collect()
}

/// Runs a scan, appending only `(identity, q)` pairs missing from the store.
///
/// Work is grouped per q. With `jobs > 1` batches of q values are computed
/// concurrently and written back in ascending q, so the record order does not
/// depend on the worker count.
pub fn run_verify(cfg: &ScanConfig) -> Result<ScanOutcome, ScanError> {
    cfg.validate()?;
    let existing = if cfg.resume {
        read_store(&cfg.out)?
    } else {
        if std::fs::metadata(&cfg.out).is_ok_and(|m| m.len() > 0) {
            return Err(ScanError::StoreExists(cfg.out.clone()));
        }
        Vec::new()
    };
    let done = completed_keys(&existing);
    let pending: Vec<(u64, Vec<Identity>)> = odd_prime_powers(cfg.q_min, cfg.q_max)
        .into_iter()
        .map(|q| {
            let ids = cfg.selector.identities(q).into_iter().filter(|id| !done.contains(&(*id, q))).collect();
            (q, ids)
        })
        .filter(|(_, ids): &(u64, Vec<Identity>)| !ids.is_empty())
        .collect();

    let mut writer = StoreWriter::append(&cfg.out)?;
    let mut new_records = Vec::new();
    let batch = if cfg.jobs > 1 { cfg.jobs * 2 } else { 1 };
    let pool = thread_pool(cfg.jobs)?;
    for chunk in pending.chunks(batch) {
        let results = compute_chunk(&pool, chunk, cfg);
        for res in results {
            for rec in res? {
                writer.write(&rec)?;
                new_records.push(rec);
            }
        }
        writer.flush()?;
    }
    let exit = exit_code(existing.iter().chain(new_records.iter()));
    Ok(ScanOutcome {
        new_records: new_records.len(),
        total_records: existing.len() + new_records.len(),
        exit_code: exit,
    })
}

#[cfg(feature = "parallel")]
type Pool = rayon::ThreadPool;
#[cfg(not(feature = "parallel"))]
type Pool = ();

#[cfg(feature = "parallel")]
fn thread_pool(jobs: usize) -> Result<Pool, ScanError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| ScanError::Config(format!("cannot start {jobs} workers: {e}")))
}

#[cfg(not(feature = "parallel"))]
fn thread_pool(_jobs: usize) -> Result<Pool, ScanError> {
    Ok(())
}

#[cfg(feature = "parallel")]
fn compute_chunk(pool: &Pool, chunk: &[(u64, Vec<Identity>)], cfg: &ScanConfig) -> Vec<Result<Vec<ResultRecord>, ScanError>> {
    use rayon::prelude::*;
    pool.install(|| chunk.par_iter().map(|(q, ids)| run_q(*q, ids, cfg)).collect())
}

#[cfg(not(feature = "parallel"))]
fn compute_chunk(_pool: &Pool, chunk: &[(u64, Vec<Identity>)], cfg: &ScanConfig) -> Vec<Result<Vec<ResultRecord>, ScanError>> {
    chunk.iter().map(|(q, ids)| run_q(*q, ids, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selector_identities() {
        assert_eq!(Selector::A.identities(9), vec![Identity::ThmA]);
        assert_eq!(Selector::Corollary.identities(9), vec![]);
        assert_eq!(Selector::Corollary.identities(7), vec![Identity::CorollaryA]);
        assert!(Selector::Lemmas.identities(7).contains(&Identity::Carlitz));
        assert!(!Selector::Lemmas.identities(37).contains(&Identity::Carlitz));
        assert_eq!(Selector::All.identities(7).len(), 10);
    }

    #[test]
    fn config_validation() {
        let mut cfg = ScanConfig::new(Selector::A, 9, 7, "x.jsonl");
        assert!(cfg.validate().is_err());
        cfg.q_min = 5;
        cfg.jobs = 0;
        assert!(cfg.validate().is_err());
        cfg.jobs = 1;
        cfg.max_q = 2048;
        assert!(cfg.validate().is_ok());
        cfg.q_max = 4096;
        assert!(cfg.validate().is_err());
    }
}
