//! CSV projection of a result store.

use std::path::Path;

use cyclodet_core::Quantity;

use crate::store::{read_store, StoreError};

pub const CSV_HEADER: [&str; 9] = ["identity", "q", "p", "deg", "status", "lhs", "rhs", "witness", "elapsed_ms"];

#[derive(Debug, thiserror::Error)]
pub enum ExportError {
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("{0}")]
    Csv(#[from] csv::Error),
}

/// Flat cell text: vectors joined with `;`, nested vectors parenthesized.
pub fn render(q: &Quantity) -> String {
    fn inner(q: &Quantity, nested: bool) -> String {
        let wrap = |s: String| if nested { format!("({s})") } else { s };
        match q {
            Quantity::Int(v) => v.to_string(),
            Quantity::Bool(b) => b.to_string(),
            Quantity::Coeffs(c) => wrap(c.iter().map(u32::to_string).collect::<Vec<_>>().join(";")),
            Quantity::Poly(c) => wrap(c.join(";")),
            Quantity::List(items) => wrap(items.iter().map(|i| inner(i, true)).collect::<Vec<_>>().join(";")),
            Quantity::Null => String::new(),
        }
    }
    inner(q, false)
}

/// Writes one row per stored record and returns the row count.
pub fn export_csv(store: &Path, out: &Path) -> Result<usize, ExportError> {
    let records = read_store(store)?;
    let mut w = csv::Writer::from_path(out)?;
    w.write_record(CSV_HEADER)?;
    for r in &records {
        w.write_record([
            r.identity.to_string(),
            r.q.to_string(),
            r.p.to_string(),
            r.deg.to_string(),
            r.status.clone(),
            render(&r.lhs),
            render(&r.rhs),
            r.witness.as_ref().map(render).unwrap_or_default(),
            r.elapsed_ms.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(records.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        assert_eq!(render(&Quantity::Int(-1)), "-1");
        assert_eq!(render(&Quantity::Coeffs(vec![1, 0])), "1;0");
        assert_eq!(render(&Quantity::List(vec![Quantity::Int(6), Quantity::Int(2)])), "6;2");
        assert_eq!(
            render(&Quantity::List(vec![Quantity::Coeffs(vec![1, 0]), Quantity::Coeffs(vec![2, 2])])),
            "(1;0);(2;2)"
        );
        assert_eq!(render(&Quantity::poly(&[1, 0, 1])), "1;0;1");
        assert_eq!(render(&Quantity::Null), "");
    }
}
