//! Helpers around `num::BigRational`: integer lifts, exact binomials, and
//! the `p/q` string form used by every report format.

use num::bigint::BigInt;
use num::{BigRational, Zero};
use std::fmt;
use std::str::FromStr;

/// Exact binomial coefficient.
///
/// # Panics
/// Panics if the result does not fit in `u64` (cannot happen for n <= 64).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // divisible at every step: product of i+1 consecutive integers
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

pub fn rat_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn rat_u64(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// p/q with i64 parts.
///
/// # Panics
/// Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> BigRational {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders a rational as `p/q`, keeping the `/q` part even when q = 1, so
/// report values are uniform ("21/1", "0/1", "35/6").
pub fn frac_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFracError {
    input: String,
}

impl fmt::Display for ParseFracError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not a rational: `{}` (expected `p` or `p/q` with nonzero q)",
            self.input
        )
    }
}

impl std::error::Error for ParseFracError {}

/// Parses `p` or `p/q` with arbitrary-precision parts.
pub fn parse_frac(s: &str) -> Result<BigRational, ParseFracError> {
    let s = s.trim();
    let bad = || ParseFracError {
        input: s.to_string(),
    };
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}
