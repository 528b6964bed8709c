//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in canonical form (reduced, positive denominator) by
//! `num-rational`. There is no floating point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Scalar = num_rational::BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Canonical textual form `p/q` with `q > 0` and `gcd(|p|, q) = 1`.
pub fn format_scalar(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

/// Parses `p/q` (or a bare integer `p`). The denominator must be positive;
/// non-reduced inputs are canonicalized.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let bad = || Error::BadParams(format!("invalid rational literal `{text}`"));
    let (num_part, den_part) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = num_part.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match den_part {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::BadParams(format!("zero denominator in `{text}`")));
    }
    if denom.is_negative() {
        return Err(Error::BadParams(format!(
            "denominator must be positive in `{text}`"
        )));
    }
    Ok(Scalar::new(numer, denom))
}
