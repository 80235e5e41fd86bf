//! Exact rational numbers.
//!
//! Every length, weight, distance and objective value in the crate is a
//! [`Scalar`]. Values that fit in a machine word are kept as `Ratio<i64>` and
//! arithmetic on them is checked; anything that overflows is promoted to a
//! big rational and demoted again once it fits. Both forms are always fully
//! reduced, so comparison and equality are exact.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
enum Repr {
    Small(Ratio<i64>),
    Big(BigRational),
}

/// An exact rational number.
#[derive(Clone)]
pub struct Scalar(Repr);

/// Error returned when a string is not an integer or a plain decimal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid number `{0}`")]
pub struct ParseScalarError(pub String);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Small(Ratio::from_integer(0)))
    }

    pub fn one() -> Self {
        Scalar(Repr::Small(Ratio::from_integer(1)))
    }

    pub fn from_int(n: i64) -> Self {
        if n == i64::MIN {
            return Self::from_big(BigRational::from_integer(BigInt::from(n)));
        }
        Scalar(Repr::Small(Ratio::from_integer(n)))
    }

    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        if num == i64::MIN || den == i64::MIN {
            return Self::from_big(BigRational::new(BigInt::from(num), BigInt::from(den)));
        }
        Scalar(Repr::Small(Ratio::new(num, den)))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_big(BigRational::new(num, den))
    }

    fn from_big(r: BigRational) -> Self {
        // i64::MIN is excluded so that negation never overflows the small form.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => {
                Scalar(Repr::Small(Ratio::new_raw(n, d)))
            }
            _ => Scalar(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.numer()),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.denom()),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(r) => r.is_zero(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_negative(),
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_positive(),
            Repr::Big(r) => r.is_positive(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_integer(),
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(r) => *r.numer() as f64 / *r.denom() as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Exact midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Scalar) -> Scalar {
        (self + other) / Scalar::from_int(2)
    }

    pub fn min_of<'a>(&'a self, other: &'a Scalar) -> &'a Scalar {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max_of<'a>(&'a self, other: &'a Scalar) -> &'a Scalar {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Decimal rendering with `digits` significant digits. Display only.
    pub fn to_decimal(&self, digits: usize) -> String {
        let value = self.to_f64();
        if value == 0.0 {
            return "0".to_string();
        }
        let magnitude = libm_log10_floor(value.abs());
        let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
        let mut out = alloc::format!("{:.*}", decimals, value);
        if out.contains('.') {
            while out.ends_with('0') {
                out.pop();
            }
            if out.ends_with('.') {
                out.pop();
            }
        }
        out
    }
}

fn libm_log10_floor(mut x: f64) -> i32 {
    let mut e = 0;
    while x >= 10.0 {
        x /= 10.0;
        e += 1;
    }
    while x < 1.0 {
        x *= 10.0;
        e -= 1;
    }
    e
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_big(r)
    }
}

impl From<&Scalar> for BigRational {
    fn from(s: &Scalar) -> Self {
        s.to_big()
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
                    if let Some(r) = a.$checked(b) {
                        if *r.numer() != i64::MIN && *r.denom() != i64::MIN {
                            return Scalar(Repr::Small(r));
                        }
                    }
                }
                Scalar::from_big(self.to_big().$method(rhs.to_big()))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            // numer is never i64::MIN in the small form
            Repr::Small(r) => Scalar(Repr::Small(Ratio::new_raw(-*r.numer(), *r.denom()))),
            Repr::Big(r) => Scalar::from_big(-r.clone()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `-?digits`, `-?digits.digits`, `.digits` and `p/q` forms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: Scalar = num.parse().map_err(|_| err())?;
            let den: Scalar = den.parse().map_err(|_| err())?;
            if den.is_zero() || !num.is_integer() || !den.is_integer() {
                return Err(err());
            }
            return Ok(num / den);
        }
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err());
        }
        let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(int_part) || !all_digits(frac_part) {
            return Err(err());
        }
        let mut digits = String::with_capacity(int_part.len() + frac_part.len());
        digits.push_str(int_part);
        digits.push_str(frac_part);
        let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| err())?;
        let den = num_traits::pow(BigInt::from(10), frac_part.len());
        let value = BigRational::new(if negative { -num } else { num }, den);
        Ok(Scalar::from_big(value))
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    #[test]
    fn parses_integers_and_decimals() {
        assert_eq!("5".parse::<Scalar>().unwrap(), Scalar::from_int(5));
        assert_eq!("2.5".parse::<Scalar>().unwrap(), s(5, 2));
        assert_eq!("-0.125".parse::<Scalar>().unwrap(), s(-1, 8));
        assert_eq!(".5".parse::<Scalar>().unwrap(), s(1, 2));
        assert_eq!("3/6".parse::<Scalar>().unwrap(), s(1, 2));
        assert!("".parse::<Scalar>().is_err());
        assert!("1e3".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Scalar::from_int(i64::MAX - 1);
        let sum = &big + &big;
        assert!(matches!(sum.0, Repr::Big(_)));
        let back = &sum - &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(_)));
        let prod = &big * &big;
        assert_eq!(&prod / &big, big);
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(s(6, 4).to_string(), "3/2");
        assert_eq!(s(-4, 2).to_string(), "-2");
        assert_eq!(s(1, 3).to_decimal(12), "0.333333333333");
        assert_eq!(Scalar::from_int(1500).to_decimal(12), "1500");
    }

    proptest! {
        #[test]
        fn add_then_subtract_is_identity(an in -10_000i64..10_000, ad in 1i64..1000,
                                         bn in -10_000i64..10_000, bd in 1i64..1000) {
            let a = s(an, ad);
            let b = s(bn, bd);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&(&a * &b) + &a, &a * &(&b + &Scalar::one()));
        }

        #[test]
        fn mixed_representations_compare_exactly(a in any::<i64>(), b in any::<i64>()) {
            let x = Scalar::from_int(a);
            let y = Scalar::from_int(b);
            let sum = &x + &y;
            let expected = BigInt::from(a) + BigInt::from(b);
            prop_assert_eq!(sum.numer(), expected);
            prop_assert_eq!(x.cmp(&y), a.cmp(&b));
        }
    }
}
