//! Exact arithmetic for cyclotomic matrices over finite fields.
//!
//! * [`field`]: GF(p^n) construction, characters, primitive elements, power sums.
//! * [`trinomial`]: trinomial coefficients, exact and modulo p.
//! * [`matrix`]: determinants, rank, circulants, Berkowitz characteristic polynomials.
//! * [`theorems`]: the matrices `S_q`, `C_p` and the identity checks built on them.

pub mod error;
pub mod field;
pub mod matrix;
pub mod par;
pub mod poly;
pub mod primes;
pub mod theorems;
pub mod trinomial;

pub use error::{FieldError, MatrixError, TheoremError};
pub use field::{legendre_symbol, Field, FieldElem};
pub use poly::irreducible_check;
pub use matrix::{circulant, determinant, rank, vandermonde_pair_product, Exec, Matrix};
pub use trinomial::{central_trinomial, trinomial_coeff, trinomial_row, TrinomialRow};
pub use theorems::{Identity, Quantity, Status, VerificationReport};
