//! Exact rational scalars and the small amount of shared numeric plumbing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used for all worth arithmetic.
pub type Rat = BigRational;

/// Absolute tolerance used by float-mode comparisons on payoffs.
pub const FLOAT_TOL: f64 = 1e-9;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Lossy conversion to `f64`; magnitudes outside the double range map to ±inf.
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact integer power with negative exponents rejected.
pub fn pow_u32(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// A payoff-like quantity in either numeric mode.
#[derive(Clone, Debug, PartialEq)]
pub enum ScalarValue {
    Exact(Rat),
    Float(f64),
}

impl ScalarValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ScalarValue::Exact(r) => to_f64(r),
            ScalarValue::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        match self {
            ScalarValue::Exact(r) => Some(r),
            ScalarValue::Float(_) => None,
        }
    }
}

/// Renders an exact rational as `p/q`, or just `p` when the denominator is one.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Formats `x` with twelve significant digits, the house style for report decimals.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (11 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Parses an exact rational literal: `p/q`, an integer, or a decimal with an
/// optional exponent part. Decimals convert exactly via power-of-ten denominators.
pub fn parse_exact(text: &str) -> Option<Rat> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    // Decimal form: [sign] digits [. digits] [ (e|E) [sign] digits ]
    let (mantissa, exp10) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return None;
    }
    let n: BigInt = digits.parse().ok()?;
    let mut value = Rat::from_integer(n);
    let scale = exp10 - frac_part.len() as i32;
    let ten = rat(10);
    if scale > 0 {
        value *= pow_u32(&ten, scale as u32);
    } else if scale < 0 {
        value /= pow_u32(&ten, (-scale) as u32);
    }
    Some(value)
}
