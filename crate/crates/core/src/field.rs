//! Finite fields GF(p^n) of odd characteristic.
//!
//! Elements are small integer handles. For the prime field the handle is the
//! residue itself. For an extension the handle encodes the coefficient vector
//! `(c_0, ..., c_{n-1})` of `c_0 + c_1 x + ... + c_{n-1} x^{n-1}` in base `p`
//! with `c_0` as the most significant digit, so that increasing handles walk
//! the coefficient vectors in lexicographic order. The canonical enumeration
//! of nonzero elements is therefore simply handles `1..q`.
//!
//! Extension-field products go through discrete log tables built from the
//! primitive element; the tables themselves are built with plain polynomial
//! multiplication modulo the defining polynomial, which stays available as
//! [`Field::mul_reference`] for cross-checking.

use std::fmt;

use crate::error::FieldError;
use crate::poly;
use crate::primes::{is_prime, prime_divisors};

/// Default upper bound on q for extension fields and scans.
pub const DEFAULT_MAX_Q: u64 = 2048;
/// Environment variable overriding [`DEFAULT_MAX_Q`].
pub const MAX_Q_ENV: &str = "CYCLODET_MAX_Q";

/// Size bound taken from `CYCLODET_MAX_Q`, falling back to [`DEFAULT_MAX_Q`].
pub fn max_q_from_env() -> u64 {
    std::env::var(MAX_Q_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_Q)
}

/// Handle of an element of some [`Field`]. Only meaningful together with the
/// field that produced it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug)]
enum Arith {
    Prime,
    Extension { exp: Vec<u32>, log: Vec<u32> },
}

/// A finite field GF(p^n) with p odd.
#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    n: u32,
    q: u32,
    /// `p^(n-1)`, the place value of the constant coefficient.
    top_place: u32,
    modulus: Vec<u32>,
    one: FieldElem,
    primitive: FieldElem,
    arith: Arith,
}

fn validate_characteristic(p: u64) -> Result<(), FieldError> {
    if p < 2 {
        return Err(FieldError::Unit(p));
    }
    if p.is_multiple_of(2) {
        return Err(FieldError::EvenCharacteristic(p));
    }
    if !is_prime(p) {
        return Err(FieldError::Composite(p));
    }
    Ok(())
}

impl Field {
    /// GF(p) for an odd prime `p`.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        validate_characteristic(p)?;
        if p > u32::MAX as u64 {
            return Err(FieldError::TooLarge { p, n: 1, max_q: u32::MAX as u64 });
        }
        let mut field = Field {
            p: p as u32,
            n: 1,
            q: p as u32,
            top_place: 1,
            modulus: vec![0, 1],
            one: FieldElem(1),
            primitive: FieldElem(1),
            arith: Arith::Prime,
        };
        field.primitive = field.find_primitive();
        Ok(field)
    }

    /// GF(p^n) for `n >= 2`, bounded by `CYCLODET_MAX_Q`.
    pub fn extension(p: u64, n: u32) -> Result<Field, FieldError> {
        Self::extension_with_bound(p, n, max_q_from_env())
    }

    /// GF(p^n) for `n >= 2` with an explicit bound on q. The modulus is the
    /// lexicographically smallest monic irreducible of degree n (constant
    /// coefficient compared first).
    pub fn extension_with_bound(p: u64, n: u32, max_q: u64) -> Result<Field, FieldError> {
        validate_characteristic(p)?;
        match n {
            0 => return Err(FieldError::DegreeZero),
            1 => return Err(FieldError::DegreeOne),
            _ => {}
        }
        let too_large = FieldError::TooLarge { p, n, max_q };
        let q = p.checked_pow(n).ok_or(too_large.clone())?;
        if q > max_q || q > u32::MAX as u64 {
            return Err(too_large);
        }
        let modulus: Vec<u32> = poly::smallest_irreducible(p, n)
            .into_iter()
            .map(|c| c as u32)
            .collect();
        let top_place = p.pow(n - 1) as u32;
        let mut field = Field {
            p: p as u32,
            n,
            q: q as u32,
            top_place,
            modulus,
            one: FieldElem(top_place),
            primitive: FieldElem(top_place),
            arith: Arith::Prime,
        };
        // the search runs on the reference arithmetic since no tables exist yet
        field.primitive = field.find_primitive();
        field.arith = field.build_log_tables();
        Ok(field)
    }

    /// The field with `q` elements, dispatching on whether q is prime.
    pub fn of_order(q: u64, max_q: u64) -> Result<Field, FieldError> {
        let (p, n) = crate::primes::odd_prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        if q > max_q {
            return Err(FieldError::TooLarge { p, n, max_q });
        }
        if n == 1 {
            Field::prime(p)
        } else {
            Field::extension_with_bound(p, n, max_q)
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Defining polynomial, constant coefficient first. For a prime field this
    /// is the formal polynomial `x`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.n == 1
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        self.one
    }

    /// Checked conversion from a raw handle.
    pub fn elem(&self, index: u32) -> Result<FieldElem, FieldError> {
        if index < self.q {
            Ok(FieldElem(index))
        } else {
            Err(FieldError::ForeignElement(index))
        }
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        x.0 < self.q
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElem {
        let r = v.rem_euclid(self.p as i64) as u32;
        FieldElem(r * self.top_place)
    }

    /// Element with the given coefficients (constant first, length n).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElem, FieldError> {
        if coeffs.len() != self.n as usize {
            return Err(FieldError::WrongLength { got: coeffs.len(), expected: self.n as usize });
        }
        let mut idx = 0u32;
        for &c in coeffs {
            if c >= self.p {
                return Err(FieldError::ForeignElement(c));
            }
            idx = idx * self.p + c;
        }
        Ok(FieldElem(idx))
    }

    /// Coefficient vector of `x`, constant first, length n.
    pub fn coeffs(&self, x: FieldElem) -> Vec<u32> {
        let mut out = vec![0u32; self.n as usize];
        let mut v = x.0;
        for slot in out.iter_mut().rev() {
            *slot = v % self.p;
            v /= self.p;
        }
        out
    }

    /// The residue of `x` if it lies in the prime subfield.
    pub fn prime_residue(&self, x: FieldElem) -> Option<u32> {
        x.0.is_multiple_of(self.top_place).then(|| x.0 / self.top_place)
    }

    pub fn in_prime_subfield(&self, x: FieldElem) -> bool {
        self.prime_residue(x).is_some()
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.n == 1 {
            let s = a.0 as u64 + b.0 as u64;
            return FieldElem((s % self.p as u64) as u32);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.n {
            out += (x % self.p + y % self.p) % self.p * place;
            place *= self.p;
            x /= self.p;
            y /= self.p;
        }
        FieldElem(out)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.n == 1 {
            return FieldElem((self.p - a.0) % self.p);
        }
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.n {
            out += (self.p - x % self.p) % self.p * place;
            place *= self.p;
            x /= self.p;
        }
        FieldElem(out)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.arith {
            Arith::Prime if self.n == 1 => {
                FieldElem((a.0 as u64 * b.0 as u64 % self.p as u64) as u32)
            }
            Arith::Prime => self.mul_reference(a, b),
            Arith::Extension { exp, log } => {
                if a.0 == 0 || b.0 == 0 {
                    return FieldElem::ZERO;
                }
                let m = self.q - 1;
                let e = (log[a.0 as usize] + log[b.0 as usize]) % m;
                FieldElem(exp[e as usize])
            }
        }
    }

    /// Multiplication by schoolbook polynomial product and reduction modulo
    /// the defining polynomial. Independent of the log tables.
    pub fn mul_reference(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.n == 1 {
            return FieldElem((a.0 as u64 * b.0 as u64 % self.p as u64) as u32);
        }
        let p = self.p as u64;
        let modulus: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let pa = poly::trim(self.coeffs(a).into_iter().map(u64::from).collect());
        let pb = poly::trim(self.coeffs(b).into_iter().map(u64::from).collect());
        let r = poly::mulmod(&pa, &pb, &modulus, p);
        let mut coeffs = vec![0u32; self.n as usize];
        for (slot, c) in coeffs.iter_mut().zip(r) {
            *slot = c as u32;
        }
        self.from_coeffs(&coeffs).expect("reduced product fits the field")
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.arith {
            Arith::Extension { exp, log } => {
                let m = self.q - 1;
                FieldElem(exp[((m - log[a.0 as usize]) % m) as usize])
            }
            Arith::Prime if self.n == 1 => FieldElem(poly::inv_mod(a.0 as u64, self.p as u64) as u32),
            Arith::Prime => self.pow(a, self.q as u64 - 2),
        })
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `x^e` by square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, x: FieldElem, mut e: u64) -> FieldElem {
        let mut acc = self.one;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x^e` for any integer e; negative exponents go through `x^{-1}`.
    pub fn pow_signed(&self, x: FieldElem, e: i64) -> Result<FieldElem, FieldError> {
        if e >= 0 {
            Ok(self.pow(x, e as u64))
        } else {
            Ok(self.pow(self.inv(x)?, e.unsigned_abs()))
        }
    }

    /// Quadratic character: 0 at zero, otherwise `x^((q-1)/2)` read as +-1.
    pub fn quadratic_character(&self, x: FieldElem) -> i8 {
        if x.is_zero() {
            return 0;
        }
        let r = self.pow(x, (self.q as u64 - 1) / 2);
        if r == self.one {
            1
        } else {
            debug_assert_eq!(r, self.neg(self.one));
            -1
        }
    }

    /// Canonical enumeration `a_1, ..., a_{q-1}` of the nonzero elements.
    pub fn nonzero(&self) -> impl ExactSizeIterator<Item = FieldElem> + Clone {
        (1..self.q).map(FieldElem)
    }

    /// All elements, zero first.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = FieldElem> + Clone {
        (0..self.q).map(FieldElem)
    }

    /// The first element of the canonical enumeration generating the
    /// multiplicative group.
    pub fn primitive_element(&self) -> FieldElem {
        self.primitive
    }

    pub fn is_primitive(&self, g: FieldElem) -> bool {
        if g.is_zero() || !self.contains(g) {
            return false;
        }
        let m = self.q as u64 - 1;
        prime_divisors(m).into_iter().all(|l| self.pow(g, m / l) != self.one)
    }

    fn find_primitive(&self) -> FieldElem {
        self.nonzero()
            .find(|&g| self.is_primitive(g))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    fn build_log_tables(&self) -> Arith {
        let m = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(m);
        let mut log = vec![0u32; self.q as usize];
        let mut cur = self.one;
        for i in 0..m {
            exp.push(cur.0);
            log[cur.0 as usize] = i as u32;
            cur = self.mul_reference(cur, self.primitive);
        }
        debug_assert_eq!(cur, self.one);
        Arith::Extension { exp, log }
    }

    /// `sum_{x != 0} x^k`.
    pub fn power_sum(&self, k: i64) -> FieldElem {
        self.nonzero().fold(self.zero(), |acc, x| {
            let term = self.pow_signed(x, k).expect("x is nonzero");
            self.add(acc, term)
        })
    }

    /// First square root of `x` in canonical order (zero first), if any.
    pub fn sqrt(&self, x: FieldElem) -> Option<FieldElem> {
        self.elements().find(|&u| self.mul(u, u) == x)
    }

    /// Sum of a sequence of elements.
    pub fn sum<I: IntoIterator<Item = FieldElem>>(&self, items: I) -> FieldElem {
        items.into_iter().fold(self.zero(), |a, b| self.add(a, b))
    }

    /// Product of a sequence of elements.
    pub fn product<I: IntoIterator<Item = FieldElem>>(&self, items: I) -> FieldElem {
        items.into_iter().fold(self.one, |a, b| self.mul(a, b))
    }
}

/// Legendre symbol `(a/p)` for an odd prime p, via Euler's criterion.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8, FieldError> {
    validate_characteristic(p)?;
    let r = a.rem_euclid(p as i64) as u128;
    if r == 0 {
        return Ok(0);
    }
    let p128 = p as u128;
    let (mut acc, mut base, mut e) = (1u128, r, (p - 1) / 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p128;
        }
        base = base * base % p128;
        e >>= 1;
    }
    Ok(if acc == 1 { 1 } else { -1 })
}
