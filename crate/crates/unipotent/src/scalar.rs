use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact Gaussian rational `re + im i`, ordered lexicographically by
/// `(re, im)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: Rational64,
    im: Rational64,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { re: Rational64::new_raw(0, 1), im: Rational64::new_raw(0, 1) };

    pub fn new(re: Rational64, im: Rational64) -> Scalar {
        Scalar { re, im }
    }

    pub fn real(re: Rational64) -> Scalar {
        Scalar { re, im: Rational64::zero() }
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::real(Rational64::from_integer(n))
    }

    /// `n / 2`.
    pub fn half(n: i64) -> Scalar {
        Scalar::real(Rational64::new(n, 2))
    }

    pub fn re(&self) -> Rational64 {
        self.re
    }

    pub fn im(&self) -> Rational64 {
        self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// A rational integer.
    pub fn is_integer(&self) -> bool {
        self.is_real() && self.re.is_integer()
    }

    /// Real and strictly positive.
    pub fn is_positive(&self) -> bool {
        self.is_real() && self.re.is_positive()
    }

    /// The larger of `self` and `-self`.
    pub fn abs(self) -> Scalar {
        self.max(-self)
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.re, self.im).cmp(&(other.re, other.im))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        Scalar { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{} i", self.re, -self.im)
        } else {
            write!(f, "{}+{} i", self.re, self.im)
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Accepts `p`, `p/q`, `p/q+r/s i` and `p/q-r/s i`.
impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let t = s.trim();
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Scalar::real(parse_rational(t)?));
        };
        let body = body.trim_end();
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| Error::Parse(format!("bad scalar `{s}`")))?;
        let re = parse_rational(&body[..split])?;
        let im = parse_rational(body[split..].trim_start_matches('+'))?;
        Ok(Scalar { re, im })
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
