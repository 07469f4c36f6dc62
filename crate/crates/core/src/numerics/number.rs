use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu::base::{Abs, Sign};
use dashu::float::DBig;
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Working precision, in significant decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrecisionContext {
    significant_digits: usize,
}

impl PrecisionContext {
    pub const DEFAULT_DIGITS: usize = 25;
    /// Extra digits carried inside transcendental evaluations.
    pub const GUARD_DIGITS: usize = 10;

    pub fn new(significant_digits: usize) -> Result<Self> {
        if significant_digits == 0 {
            return Err(Error::Config("precision must be positive".into()));
        }
        Ok(Self { significant_digits })
    }

    pub fn digits(&self) -> usize {
        self.significant_digits
    }

    /// A context carrying `extra` more digits than this one.
    pub fn widened(&self, extra: usize) -> Self {
        Self {
            significant_digits: self.significant_digits + extra,
        }
    }

    /// `10^(5 - digits)`: the relative size below which a real pivot counts as zero.
    pub fn threshold(&self) -> Number {
        threshold_for(self.significant_digits)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self {
            significant_digits: Self::DEFAULT_DIGITS,
        }
    }
}

pub(crate) fn threshold_for(digits: usize) -> Number {
    Number::Rational(pow10(5 - digits as isize))
}

/// `10^e` as an exact rational.
pub fn pow10(e: isize) -> RBig {
    RBig::from(10).pow(e)
}

/// A value that is either an exact rational or a finite decimal float tagged
/// with its precision.
///
/// Rationals stay in lowest terms with a positive denominator. Mixing a
/// rational with a real rounds the rational to the real's precision; two
/// reals combine at the wider of their precisions.
#[derive(Clone, Debug)]
pub enum Number {
    Rational(RBig),
    Real(DBig),
}

impl Number {
    pub fn zero() -> Self {
        Number::Rational(RBig::ZERO)
    }

    pub fn one() -> Self {
        Number::Rational(RBig::ONE)
    }

    pub fn int(v: i64) -> Self {
        Number::Rational(RBig::from(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Number::Rational(RBig::from_parts_signed(IBig::from(num), IBig::from(den)))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Number::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&RBig> {
        match self {
            Number::Rational(r) => Some(r),
            Number::Real(_) => None,
        }
    }

    /// Precision of a real, `None` for exact rationals.
    pub fn precision(&self) -> Option<usize> {
        match self {
            Number::Rational(_) => None,
            Number::Real(x) => Some(x.precision()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Number::Rational(r) => r.is_zero(),
            Number::Real(x) => x.repr().significand().is_zero(),
        }
    }

    pub fn sign(&self) -> Sign {
        match self {
            Number::Rational(r) => r.sign(),
            Number::Real(x) => x.sign(),
        }
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.sign() == Sign::Negative
    }

    pub fn abs(&self) -> Self {
        match self {
            Number::Rational(r) => Number::Rational(r.clone().abs()),
            Number::Real(x) => Number::Real(x.clone().abs()),
        }
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn powi(&self, e: i32) -> Self {
        match self {
            Number::Rational(r) => Number::Rational(r.pow(e as isize)),
            Number::Real(x) => {
                let p = x.precision();
                if e >= 0 {
                    Number::Real(x.powi(IBig::from(e)))
                } else {
                    let pos = x.powi(IBig::from(-e));
                    Number::Real(real(RBig::ONE, p) / pos)
                }
            }
        }
    }

    /// The exact rational value. Reals are finite decimals, so this never rounds.
    pub fn to_rational(&self) -> RBig {
        match self {
            Number::Rational(r) => r.clone(),
            Number::Real(x) => RBig::try_from(x.clone()).expect("finite decimal"),
        }
    }

    /// Rounds to a real with `digits` significant digits.
    pub fn to_real(&self, digits: usize) -> DBig {
        match self {
            Number::Rational(r) => real(r.clone(), digits),
            Number::Real(x) => x.clone().with_precision(digits).value(),
        }
    }

    /// Like [`Number::to_real`] but wrapped back into a `Number`.
    pub fn rounded(&self, digits: usize) -> Number {
        Number::Real(self.to_real(digits))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Rational(r) => r.to_f64().value(),
            Number::Real(x) => x.to_f64().value(),
        }
    }

    /// Scientific-notation string with exactly `digits` significant digits,
    /// e.g. `1.3863e0`. Exact zero renders as `0`.
    pub fn to_sci_string(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let x = self.to_real(digits);
        let (sig, exp) = x.repr().clone().into_parts();
        let neg = sig.sign() == Sign::Negative;
        let mut s = sig.abs().to_string();
        let e = exp + s.len() as isize - 1;
        debug_assert!(s.len() <= digits);
        if s.len() < digits {
            s.extend(std::iter::repeat_n('0', digits - s.len()));
        }
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&s[..1]);
        if s.len() > 1 {
            out.push('.');
            out.push_str(&s[1..]);
        }
        out.push('e');
        out.push_str(&e.to_string());
        out
    }

    /// Human-oriented rendering at `digits` significant digits: plain decimal
    /// for moderate magnitudes, `m.mmmme±x` otherwise.
    pub fn display_sig(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let sci = self.to_sci_string(digits);
        let (mant, exp) = sci.split_once('e').expect("scientific form");
        let exp: isize = exp.parse().expect("exponent");
        if !(-4..7).contains(&exp) {
            return sci;
        }
        let neg = mant.starts_with('-');
        let digits_only: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
        let point = exp + 1;
        let body = if point <= 0 {
            format!("0.{}{}", "0".repeat((-point) as usize), digits_only)
        } else if point as usize >= digits_only.len() {
            format!(
                "{}{}",
                digits_only,
                "0".repeat(point as usize - digits_only.len())
            )
        } else {
            let (a, b) = digits_only.split_at(point as usize);
            format!("{a}.{b}")
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Parses an exact value: an integer, `p/q`, or a decimal with optional
    /// exponent. Decimals become exact rationals.
    pub fn parse_exact(s: &str) -> std::result::Result<RBig, String> {
        parse_exact_rational(s)
    }
}

pub(crate) fn real(r: RBig, digits: usize) -> DBig {
    r.to_float(digits).value()
}

fn parse_exact_rational(s: &str) -> std::result::Result<RBig, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty value".into());
    }
    if let Some((p, q)) = t.split_once('/') {
        let num = parse_int(p)?;
        let den = parse_int(q)?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{t}`"));
        }
        return Ok(RBig::from_parts_signed(num, den));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => {
            let e: isize = t[pos + 1..]
                .parse()
                .map_err(|_| format!("bad exponent in `{t}`"))?;
            (&t[..pos], e)
        }
        None => (t, 0),
    };
    let (neg, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("no digits in `{t}`"));
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("not a number: `{t}`"));
    }
    let digits = format!("{int_part}{frac_part}");
    let mut sig = IBig::from(UBig::from_str(&digits).map_err(|e| e.to_string())?);
    if neg {
        sig = -sig;
    }
    let scale = exponent - frac_part.len() as isize;
    Ok(RBig::from(sig) * pow10(scale))
}

fn parse_int(s: &str) -> std::result::Result<IBig, String> {
    let s = s.trim();
    let body = s.strip_prefix('+').unwrap_or(s);
    IBig::from_str(body).map_err(|_| format!("not an integer: `{s}`"))
}

impl PartialEq for Number {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for Number {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Number {
    fn cmp_value(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Number::Rational(a), Number::Rational(b)) => a.cmp(b),
            (Number::Real(a), Number::Real(b)) => a.cmp(b),
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }
}

fn promote(a: &Number, b: &Number) -> (DBig, DBig) {
    let p = a.precision().max(b.precision()).expect("at least one real");
    (a.to_real_at_least(p), b.to_real_at_least(p))
}

impl Number {
    fn to_real_at_least(&self, p: usize) -> DBig {
        match self {
            Number::Rational(r) => real(r.clone(), p),
            Number::Real(x) if x.precision() >= p => x.clone(),
            Number::Real(x) => x.clone().with_precision(p).value(),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&Number> for &Number {
            type Output = Number;
            fn $method(self, rhs: &Number) -> Number {
                match (self, rhs) {
                    (Number::Rational(a), Number::Rational(b)) => Number::Rational(a $op b),
                    _ => {
                        let (a, b) = promote(self, rhs);
                        Number::Real(a $op b)
                    }
                }
            }
        }
        impl $tr<Number> for Number {
            type Output = Number;
            fn $method(self, rhs: Number) -> Number {
                &self $op &rhs
            }
        }
        impl $tr<&Number> for Number {
            type Output = Number;
            fn $method(self, rhs: &Number) -> Number {
                &self $op rhs
            }
        }
        impl $tr<Number> for &Number {
            type Output = Number;
            fn $method(self, rhs: Number) -> Number {
                self $op &rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for Number {
    type Output = Number;
    fn neg(self) -> Number {
        match self {
            Number::Rational(r) => Number::Rational(-r),
            Number::Real(x) => Number::Real(-x),
        }
    }
}

impl Neg for &Number {
    type Output = Number;
    fn neg(self) -> Number {
        -self.clone()
    }
}

impl From<RBig> for Number {
    fn from(r: RBig) -> Self {
        Number::Rational(r)
    }
}

impl From<i64> for Number {
    fn from(v: i64) -> Self {
        Number::int(v)
    }
}

impl From<DBig> for Number {
    fn from(x: DBig) -> Self {
        Number::Real(x)
    }
}

/// Rationals print as `p` or `p/q`; reals in scientific form at their own
/// precision. [`FromStr`] inverts this exactly.
impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Rational(r) => {
                if r.denominator().is_one() {
                    write!(f, "{}", r.numerator())
                } else {
                    write!(f, "{}/{}", r.numerator(), r.denominator())
                }
            }
            Number::Real(x) => f.write_str(&self.to_sci_string(x.precision().max(1))),
        }
    }
}

impl FromStr for Number {
    type Err = String;

    /// Strings carrying an exponent marker are reals whose precision is the
    /// mantissa digit count; everything else parses as an exact rational.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let t = s.trim();
        match t.find(['e', 'E']) {
            Some(pos) => {
                let mantissa = &t[..pos];
                let digits = mantissa.chars().filter(|c| c.is_ascii_digit()).count();
                let value = parse_exact_rational(t)?;
                Ok(Number::Real(real(value, digits.max(1))))
            }
            None => parse_exact_rational(t).map(Number::Rational),
        }
    }
}

impl Serialize for Number {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Number {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_canonical() {
        let a = Number::ratio(6, -4);
        let r = a.as_rational().unwrap();
        assert_eq!(r.numerator(), &IBig::from(-3));
        assert_eq!(r.denominator(), &UBig::from(2u8));
        let b = &a * &Number::ratio(4, 9);
        assert_eq!(b.to_string(), "-2/3");
    }

    #[test]
    fn mixing_promotes_to_real() {
        let x = Number::Real(real(RBig::from(2), 30));
        let y = &x + &Number::ratio(1, 3);
        assert_eq!(y.precision(), Some(30));
        let z = &y + &Number::Real(real(RBig::from(1), 40));
        assert_eq!(z.precision(), Some(40));
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(Number::parse_exact("1.5e-3").unwrap(), RBig::from_parts(15.into(), 10000u32.into()));
        assert_eq!(Number::parse_exact("-2.25").unwrap(), RBig::from_parts((-9).into(), 4u8.into()));
        assert_eq!(Number::parse_exact("+3").unwrap(), RBig::from(3));
        assert_eq!(Number::parse_exact(".5").unwrap(), RBig::from_parts(1.into(), 2u8.into()));
        assert!(Number::parse_exact("3/0").is_err());
        assert!(Number::parse_exact("abc").is_err());
        assert!(Number::parse_exact("1.2.3").is_err());
    }

    #[test]
    fn display_and_parse_invert() {
        for s in ["741/200", "-6", "0", "1.386294361119890618834464e0", "-4.6586e-1"] {
            let n: Number = s.parse().unwrap();
            assert_eq!(n.to_string(), s);
        }
    }

    #[test]
    fn significant_digit_rendering() {
        assert_eq!(Number::ratio(76526, 10).display_sig(5), "7652.6");
        assert_eq!(Number::int(224180000).display_sig(5), "2.2418e8");
        assert_eq!(Number::ratio(-1119, 10000).display_sig(5), "-0.11190");
        assert_eq!(Number::ratio(741, 200).display_sig(5), "3.7050");
        assert_eq!(Number::ratio(999996, 100000).display_sig(5), "10.000");
        assert_eq!(Number::ratio(8, 10000).display_sig(1), "0.0008");
        assert_eq!(Number::ratio(8, 100000).display_sig(1), "8e-5");
    }

    #[test]
    fn threshold_matches_digits() {
        let ctx = PrecisionContext::default();
        assert_eq!(ctx.threshold(), Number::Rational(pow10(-20)));
    }
}
