//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`BigRational`], which is always kept in
//! lowest terms with a positive denominator, so a zero test is a plain
//! comparison.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Renders `p/q`, omitting `q` when it is 1.
pub fn render(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn render_latex(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else if s.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -s.numer(), s.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", s.numer(), s.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse(text: &str) -> Result<Scalar, Error> {
    let text = text.trim();
    let bad = || Error::InvalidScalar(text.to_string());
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = text.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Raises a scalar to a nonnegative power.
pub fn pow(s: &Scalar, n: u32) -> Scalar {
    num_traits::pow(s.clone(), n as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_rendering() {
        assert_eq!(render(&frac(6, -4)), "-3/2");
        assert_eq!(render(&frac(4, 2)), "2");
        assert_eq!(parse(" -3/6 ").unwrap(), frac(-1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert_eq!(render_latex(&frac(-1, 2)), "-\\frac{1}{2}");
    }
}
