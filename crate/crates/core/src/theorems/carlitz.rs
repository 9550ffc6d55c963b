//! Carlitz's Legendre-symbol matrix `C_p = [((j - i)/p)]` and its
//! characteristic polynomial, used to cross-check the Berkowitz routine.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::TheoremError;
use crate::field::{legendre_symbol, Field};
use crate::matrix::{char_poly, Matrix};

use super::{timed, Identity, Quantity, Status, VerificationReport};

pub const CARLITZ_MAX_P: u64 = 31;

/// `(p-1) x (p-1)` integer matrix with entry `(i, j)` equal to `((j - i)/p)`.
pub fn build_carlitz(p: u64) -> Result<Matrix<BigInt>, TheoremError> {
    // validates p as an odd prime
    legendre_symbol(0, p)?;
    let dim = p as usize - 1;
    Ok(Matrix::from_fn(dim, |i, j| {
        BigInt::from(legendre_symbol(j as i64 - i as i64, p).expect("p validated"))
    }))
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::default(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Ascending coefficients of
/// `(t^2 - (-1)^((p-1)/2) p)^((p-3)/2) (t^2 - (-1)^((p-1)/2))`.
pub fn carlitz_expected(p: u64) -> Vec<BigInt> {
    let sign: i64 = if ((p - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let quad = |c: i64| vec![BigInt::from(-c), BigInt::from(0), BigInt::one()];
    let mut acc = quad(sign);
    for _ in 0..(p - 3) / 2 {
        acc = poly_mul(&acc, &quad(sign * p as i64));
    }
    acc
}

/// Berkowitz characteristic polynomial of `C_p` against the closed form.
pub fn carlitz_check(p: u64) -> Result<VerificationReport, TheoremError> {
    let field = Field::prime(p)?;
    if p > CARLITZ_MAX_P {
        return Err(TheoremError::CarlitzBound { p, max: CARLITZ_MAX_P });
    }
    Ok(timed(|| {
        let mut r = VerificationReport::new(Identity::Carlitz, &field);
        let m = build_carlitz(p).expect("p validated");
        let got = char_poly(&m).expect("dimension within bound");
        let expected = carlitz_expected(p);
        r.status = Status::from_bool(got == expected);
        r.lhs = Quantity::poly(&got);
        r.rhs = Quantity::poly(&expected);
        r
    }))
}
