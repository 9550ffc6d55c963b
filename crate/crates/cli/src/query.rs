//! Single-shot queries behind `det` and `trinomial`.

use cyclodet_core::matrix::{determinant_and_rank, Exec};
use cyclodet_core::theorems::{build_s, det_s_circulant};
use cyclodet_core::trinomial::TrinomialRow;
use cyclodet_core::{Field, FieldError, Quantity};
use serde_json::{json, Value};

/// Determinant summary for `S_q`: both determinant routes, rank, and
/// `T_{(q+1)/2} mod p`.
pub fn det_summary(q: u64, max_q: u64) -> Result<Value, FieldError> {
    let field = Field::of_order(q, max_q)?;
    let (det, rank) = determinant_and_rank(&field, &build_s(&field), Exec::default()).expect("field entries");
    let g = field.primitive_element();
    let det_c = det_s_circulant(&field, g).expect("primitive element");
    let central = TrinomialRow::modular((q as usize).div_ceil(2), field.p())?.central();
    Ok(json!({
        "q": q,
        "p": field.p(),
        "deg": field.degree(),
        "modulus": field.modulus(),
        "primitive": Quantity::elem(&field, g),
        "det": Quantity::elem(&field, det),
        "det_circulant": Quantity::elem(&field, det_c),
        "rank": rank,
        "singular": rank < q as usize - 1,
        "central_trinomial_mod_p": central,
    }))
}

/// Row or single coefficient of `(x + 1 + 1/x)^n`; values are decimal strings.
pub fn trinomial_summary(n: usize, modulus: Option<u32>, k: Option<i64>) -> Result<Value, FieldError> {
    let row = cyclodet_core::trinomial_row(n, modulus)?;
    Ok(match k {
        Some(k) => json!({ "n": n, "modulus": modulus, "k": k, "value": row.get(k).to_string() }),
        None => json!({
            "n": n,
            "modulus": modulus,
            "row": row.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    })
}
