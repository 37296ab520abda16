//! Exact dyadic rationals `n / 2^e`.

use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `numerator / 2^exponent`, normalized so the numerator is odd, or zero
/// with exponent 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Self {
        let mut numerator = numerator.into();
        let mut exponent = exponent;
        if numerator.is_zero() {
            return Dyadic::zero();
        }
        while exponent > 0 && numerator.is_even() {
            numerator >>= 1u32;
            exponent -= 1;
        }
        Dyadic { numerator, exponent }
    }

    pub fn zero() -> Self {
        Dyadic { numerator: BigInt::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        Dyadic::integer(1)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Dyadic { numerator: n.into(), exponent: 0 }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn signum(&self) -> i8 {
        match self.numerator.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn half(&self) -> Self {
        Dyadic::new(self.numerator.clone(), self.exponent + 1)
    }

    /// Multiplies by `2^k`.
    pub fn times_pow2(&self, k: u32) -> Self {
        if k <= self.exponent {
            Dyadic::new(self.numerator.clone(), self.exponent - k)
        } else {
            Dyadic::integer(&self.numerator << (k - self.exponent))
        }
    }

    /// The value as an integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.exponent == 0).then(|| self.numerator.clone())
    }

    /// Exact decimal expansion; every dyadic has a terminating one.
    pub fn to_decimal_string(&self) -> String {
        if self.exponent == 0 {
            return self.numerator.to_string();
        }
        // n / 2^e = n * 5^e / 10^e
        let scaled = self.numerator.abs() * BigInt::from(5u32).pow(self.exponent);
        let digits = scaled.to_string();
        let e = self.exponent as usize;
        let (int_part, frac_part) = if digits.len() > e {
            let (a, b) = digits.split_at(digits.len() - e);
            (String::from(a), String::from(b))
        } else {
            (String::from("0"), format!("{digits:0>e$}"))
        };
        let sign = if self.numerator.is_negative() { "-" } else { "" };
        format!("{sign}{int_part}.{frac_part}")
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let e = self.exponent.max(other.exponent);
        (
            &self.numerator << (e - self.exponent),
            &other.numerator << (e - other.exponent),
            e,
        )
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a - b, e)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        &self - &rhs
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { numerator: -self.numerator, exponent: self.exponent }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::integer(n)
    }
}

impl core::iter::Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |acc, x| &acc + &x)
    }
}

/// Prints as `n/2^e`.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.numerator, self.exponent)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self, self.to_decimal_string())
    }
}

impl core::str::FromStr for Dyadic {
    type Err = ();

    /// Parses `n/2^e` or a plain integer.
    fn from_str(s: &str) -> Result<Self, ()> {
        let (num, exp) = match s.split_once("/2^") {
            Some((n, e)) => (n, e.parse::<u32>().map_err(|_| ())?),
            None => (s, 0),
        };
        let num: BigInt = num.parse().map_err(|_| ())?;
        Ok(Dyadic::new(num, exp))
    }
}

impl Dyadic {
    /// `(-1/2)^i` as a dyadic.
    pub fn neg_half_pow(i: u32) -> Self {
        let sign = if i.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        Dyadic::new(sign, i)
    }
}
