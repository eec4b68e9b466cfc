//! Scalar abstractions shared by every module.
//!
//! Everything that only adds, multiplies and compares is generic over
//! [`Scalar`], so exact big rationals, machine rationals, plain integers and
//! floats all run the same code. Operations that halve or divide require a
//! [`Field`].

use std::fmt::{Debug, Display};

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{BigRational, FromPrimitive, Num, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An ordered ring element: enough for Möbius transforms, quadratic forms and
/// the sign tests of the negative-type criterion.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Num
    + Signed
    + PartialOrd
    + ToPrimitive
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Num
        + Signed
        + PartialOrd
        + ToPrimitive
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Scalars where `/` is true field division.
pub trait Field: Scalar {}

impl Field for f32 {}
impl Field for f64 {}
impl Field for Ratio<i32> {}
impl Field for Ratio<i64> {}
impl Field for Ratio<i128> {}
impl Field for BigRational {}

/// Small integer constant in any scalar type.
pub fn int<T: Scalar>(k: i64) -> T {
    T::from_i64(k).expect("small integers are representable")
}

pub fn half<T: Field>() -> T {
    T::one() / (T::one() + T::one())
}

pub fn to_f64<T: Scalar>(x: &T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `(-1)^k` as a scalar.
pub fn sign<T: Scalar>(k: u32) -> T {
    if k.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// Parses an integer, a decimal (`-0.125`) or a fraction (`3/2`).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::MalformedRational(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = parse_integer(p.trim()).ok_or_else(bad)?;
        let q: BigInt = parse_integer(q.trim()).ok_or_else(bad)?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = ip.starts_with('-');
        let ip_digits = ip.trim_start_matches(['-', '+']);
        if !ip_digits.bytes().all(|b| b.is_ascii_digit()) || ip.len() - ip_digits.len() > 1 {
            return Err(bad());
        }
        let whole = if ip_digits.is_empty() {
            BigInt::zero()
        } else {
            parse_integer(ip_digits).ok_or_else(bad)?
        };
        let frac: BigInt = parse_integer(fp).ok_or_else(bad)?;
        let scale = num::pow(BigInt::from(10u8), fp.len());
        let mut value = BigRational::from_integer(whole) + BigRational::new(frac, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    parse_integer(t)
        .map(BigRational::from_integer)
        .ok_or_else(bad)
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str_radix(s.trim_start_matches('+'), 10).ok()
}

/// `p/q` for non-integers, plain `p` otherwise.
pub fn format_rational(x: &BigRational) -> String {
    x.to_string()
}

/// Exact rational value of a finite float.
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

pub fn is_nonnegative<T: Scalar>(x: &T) -> bool {
    !x.is_negative()
}

pub fn one_if<T: Scalar>(cond: bool) -> T {
    if cond {
        T::one()
    } else {
        T::zero()
    }
}
