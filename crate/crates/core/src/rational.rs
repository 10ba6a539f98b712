//! Exact rational scalars.

use alloc::string::{String, ToString};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational, always stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// Embed an integer.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `(-1)^e` as a rational.
pub fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `(-1)^e` as `±1`.
pub fn sign_i(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Parse `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse(text: &str) -> Option<Rational> {
    let t = text.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(Rational::new(p, q))
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Strictly positive.
pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}
