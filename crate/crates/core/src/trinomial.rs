//! Trinomial coefficients `binom(n, k)_2`, the coefficients of
//! `(x + 1 + 1/x)^n = sum_{k=-n}^{n} binom(n, k)_2 x^k`, and the central
//! trinomial coefficients `T_n = binom(n, 0)_2`.
//!
//! Rows are built by repeated convolution with `(1, 1, 1)`, which needs no
//! division and therefore works unchanged modulo any prime.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::FieldError;
use crate::primes::is_prime;

/// The `2n + 1` coefficients of `(x + 1 + 1/x)^n`, stored with offset `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrinomialRow<T> {
    n: usize,
    modulus: Option<u32>,
    coeffs: Vec<T>,
}

impl<T: Clone + Zero> TrinomialRow<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` for exact integer rows.
    pub fn modulus(&self) -> Option<u32> {
        self.modulus
    }

    /// Coefficients for `k = -n..=n`.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `binom(n, k)_2`; zero outside `|k| <= n`.
    pub fn get(&self, k: i64) -> T {
        if k.unsigned_abs() as usize > self.n {
            return T::zero();
        }
        self.coeffs[(k + self.n as i64) as usize].clone()
    }

    /// `T_n`.
    pub fn central(&self) -> T {
        self.coeffs[self.n].clone()
    }
}

impl TrinomialRow<BigUint> {
    /// Exact row over the integers.
    pub fn exact(n: usize) -> Self {
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let len = row.len() + 2;
            let mut next = vec![BigUint::zero(); len];
            for (i, c) in row.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
                next[i + 2] += c;
            }
            row = next;
        }
        TrinomialRow { n, modulus: None, coeffs: row }
    }

    /// This row reduced modulo `p`.
    pub fn reduce(&self, p: u32) -> TrinomialRow<u32> {
        let m = BigUint::from(p);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| u32::try_from(c % &m).expect("residue fits u32"))
            .collect();
        TrinomialRow { n: self.n, modulus: Some(p), coeffs }
    }
}

impl TrinomialRow<u32> {
    /// Row modulo an odd prime `p`, reduced after every convolution step.
    pub fn modular(n: usize, p: u32) -> Result<Self, FieldError> {
        validate_modulus(p)?;
        let p = p as u64;
        let mut row = vec![1u32];
        for _ in 0..n {
            row = (0..row.len() + 2)
                .map(|i| {
                    let window = &row[i.saturating_sub(2)..=i.min(row.len() - 1)];
                    (window.iter().map(|&c| c as u64).sum::<u64>() % p) as u32
                })
                .collect();
        }
        Ok(TrinomialRow { n, modulus: Some(p as u32), coeffs: row })
    }
}

fn validate_modulus(p: u32) -> Result<(), FieldError> {
    match p {
        0 | 1 => Err(FieldError::Unit(p as u64)),
        _ if p.is_multiple_of(2) => Err(FieldError::EvenCharacteristic(p as u64)),
        _ if !is_prime(p as u64) => Err(FieldError::Composite(p as u64)),
        _ => Ok(()),
    }
}

/// Row of `(x + 1 + 1/x)^n`, exact or modulo an odd prime. Modular values are
/// returned as their least non-negative residues.
pub fn trinomial_row(n: usize, modulus: Option<u32>) -> Result<TrinomialRow<BigUint>, FieldError> {
    match modulus {
        None => Ok(TrinomialRow::exact(n)),
        Some(p) => {
            let row = TrinomialRow::modular(n, p)?;
            Ok(TrinomialRow {
                n,
                modulus: Some(p),
                coeffs: row.coeffs.into_iter().map(BigUint::from).collect(),
            })
        }
    }
}

/// `T_n`, exact or modulo an odd prime. Always taken from the convolution row.
pub fn central_trinomial(n: usize, modulus: Option<u32>) -> Result<BigUint, FieldError> {
    match modulus {
        None => Ok(TrinomialRow::exact(n).central()),
        Some(p) => Ok(BigUint::from(TrinomialRow::modular(n, p)?.central())),
    }
}

/// `binom(n, k)_2`, exact or modulo an odd prime; zero for `|k| > n`.
pub fn trinomial_coeff(n: usize, k: i64, modulus: Option<u32>) -> Result<BigUint, FieldError> {
    Ok(trinomial_row(n, modulus)?.get(k))
}

/// Exact `T_n` from `n T_n = (2n - 1) T_{n-1} + 3 (n - 1) T_{n-2}`.
///
/// Only valid over the integers; the division by `n` has no modular analogue
/// when `p | n`.
pub fn central_trinomial_recurrence(n: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    if n == 0 {
        return prev;
    }
    for m in 2..=n {
        let next = (BigUint::from(2 * m - 1) * &cur + BigUint::from(3 * (m - 1)) * &prev) / m;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn row_examples() {
        assert_eq!(TrinomialRow::exact(2).coeffs(), big(&[1, 2, 3, 2, 1]).as_slice());
        assert_eq!(TrinomialRow::exact(0).coeffs(), big(&[1]).as_slice());
        assert_eq!(
            TrinomialRow::exact(5).coeffs(),
            big(&[1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1]).as_slice()
        );
        assert_eq!(
            TrinomialRow::modular(5, 3).unwrap().coeffs(),
            &[1, 2, 0, 0, 0, 0, 0, 0, 0, 2, 1]
        );
        assert_eq!(
            TrinomialRow::exact(4).coeffs(),
            big(&[1, 4, 10, 16, 19, 16, 10, 4, 1]).as_slice()
        );
    }

    #[test]
    fn central_examples() {
        assert_eq!(central_trinomial(0, None).unwrap(), BigUint::from(1u32));
        assert_eq!(central_trinomial(4, None).unwrap(), BigUint::from(19u32));
        assert_eq!(central_trinomial(5, Some(3)).unwrap(), BigUint::from(0u32));
        assert_eq!(central_trinomial(4, Some(7)).unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(trinomial_coeff(4, 1, None).unwrap(), BigUint::from(16u32));
        assert_eq!(trinomial_coeff(4, -1, None).unwrap(), BigUint::from(16u32));
        assert_eq!(trinomial_coeff(4, 9, None).unwrap(), BigUint::from(0u32));
        // q = 7: binom(4, 2)_2 = 10 = 3 mod 7 = 3/8 mod 7
        assert_eq!(trinomial_coeff(4, 2, Some(7)).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn invalid_modulus() {
        assert_eq!(TrinomialRow::modular(3, 9), Err(FieldError::Composite(9)));
        assert_eq!(TrinomialRow::modular(3, 2), Err(FieldError::EvenCharacteristic(2)));
        assert!(trinomial_row(3, Some(1)).is_err());
    }

    #[test]
    fn exact_row_invariants() {
        let mut three_pow = BigUint::one();
        for n in 0..=200 {
            let row = TrinomialRow::exact(n);
            let c = row.coeffs();
            assert_eq!(c.len(), 2 * n + 1);
            for k in 0..=n as i64 {
                assert_eq!(row.get(k), row.get(-k));
            }
            assert_eq!(row.get(n as i64), BigUint::one());
            let total: BigUint = c.iter().sum();
            assert_eq!(total, three_pow);
            // alternating sum: even offsets minus odd offsets
            let even: BigUint = c.iter().step_by(2).sum();
            let odd: BigUint = c.iter().skip(1).step_by(2).sum();
            assert_eq!(even, odd + BigUint::one());
            assert_eq!(row.central(), central_trinomial_recurrence(n));
            three_pow *= 3u32;
        }
    }

    #[test]
    fn modular_row_matches_reduced_exact_row() {
        for p in [3u32, 5, 7, 11, 13] {
            for n in 0..=60 {
                assert_eq!(TrinomialRow::modular(n, p).unwrap(), TrinomialRow::exact(n).reduce(p));
            }
        }
    }
}
