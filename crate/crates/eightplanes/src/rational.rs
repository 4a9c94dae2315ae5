//! Exact rational scalars.
//!
//! All coefficients in this crate are arbitrary-precision rationals kept in
//! lowest terms with positive denominator (the invariants maintained by
//! [`num_rational::BigRational`]).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Parse a rational written as `p/q` or as a plain integer string.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("invalid numerator in {s:?}"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("invalid denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Rational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| format!("invalid integer {s:?}"))?;
        Ok(Rational::from(n))
    }
}

/// Canonical text form: integers without `/1`, otherwise `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rational>>(rs: I) -> BigInt {
    let mut lcm = BigInt::one();
    for r in rs {
        lcm = num_integer::lcm(lcm, r.denom().abs());
    }
    lcm
}
