//! Scan orchestration, JSON Lines result store and CSV export for the
//! `cyclodet` command-line tool.

pub mod export;
pub mod query;
pub mod record;
pub mod scan;
pub mod store;

pub use export::export_csv;
pub use record::{ResultRecord, SCHEMA_VERSION};
pub use scan::{run_verify, ScanConfig, ScanOutcome, Selector};
