//! Dense polynomials over GF(p), coefficients stored constant term first.
//!
//! Only what field construction needs: products and remainders, modular
//! powers of `x`, and gcd for the irreducibility test.

use crate::error::FieldError;
use crate::primes::prime_divisors;

pub(crate) fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); a is nonzero mod p
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let t = r0 / r1;
        (r0, r1) = (r1, r0 - t * r1);
        (s0, s1) = (s1, s0 - t * s1);
    }
    debug_assert_eq!(r0, 1, "{a} not invertible mod {p}");
    s0.rem_euclid(p as i64) as u64
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a nonzero `m`.
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = inv_mod(m[dm], p);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = r[dr] * lead_inv % p;
        let shift = dr - dm;
        for (i, &mi) in m[..=dm].iter().enumerate() {
            r[i + shift] = (r[i + shift] + p - c * mi % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    // normalize to monic
    if let Some(d) = degree(&a) {
        let inv = inv_mod(a[d], p);
        for c in a.iter_mut() {
            *c = *c * inv % p;
        }
    }
    a
}

/// `base^e mod m` by square-and-multiply.
pub(crate) fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

/// `x^(p^k) mod f`, computed by k successive p-th powers so the exponent never
/// overflows.
fn frobenius_x(k: u32, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[0, 1], f, p);
    for _ in 0..k {
        acc = powmod(&acc, p, f, p);
    }
    acc
}

/// Irreducibility test for a monic polynomial over GF(p).
///
/// `f` is irreducible of degree n iff `x^(p^n) = x (mod f)` and
/// `gcd(x^(p^(n/l)) - x, f) = 1` for every prime `l | n`.
pub fn irreducible_check(p: u64, f: &[u64]) -> Result<bool, FieldError> {
    let f: Vec<u64> = trim(f.iter().map(|c| c % p).collect());
    let n = match degree(&f) {
        Some(d) if d >= 1 => d,
        _ => return Err(FieldError::DegreeTooSmall),
    };
    if f[n] != 1 {
        return Err(FieldError::NotMonic);
    }
    if n == 1 {
        return Ok(true);
    }
    let x = vec![0, 1];
    if frobenius_x(n as u32, &f, p) != rem(&x, &f, p) {
        return Ok(false);
    }
    for l in prime_divisors(n as u64) {
        let h = sub(&frobenius_x(n as u32 / l as u32, &f, p), &x, p);
        if gcd(&h, &f, p) != [1] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The lexicographically smallest monic irreducible polynomial of degree `n`
/// over GF(p), ordering candidates by constant coefficient first, then the
/// linear coefficient, and so on.
pub(crate) fn smallest_irreducible(p: u64, n: u32) -> Vec<u64> {
    let n = n as usize;
    let mut low = vec![0u64; n];
    loop {
        let mut f = low.clone();
        f.push(1);
        if irreducible_check(p, &f).expect("candidate is monic") {
            return f;
        }
        // increment with low[0] as the most significant digit
        let mut i = n;
        loop {
            // irreducibles of every degree exist, so the scan terminates
            assert!(i > 0, "no irreducible of degree {n} over GF({p})");
            i -= 1;
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
        }
    }
}
