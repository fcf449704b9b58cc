use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::json_int::JsonInt;

/// A Gaussian integer `re + im * i`.
///
/// Serializes as the JSON pair `[re, im]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "(JsonInt, JsonInt)", into = "(JsonInt, JsonInt)")]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl From<(JsonInt, JsonInt)> for GaussInt {
    fn from((re, im): (JsonInt, JsonInt)) -> Self {
        GaussInt { re: re.0, im: im.0 }
    }
}

impl From<GaussInt> for (JsonInt, JsonInt) {
    fn from(z: GaussInt) -> Self {
        (JsonInt(z.re), JsonInt(z.im))
    }
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> GaussInt {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> GaussInt {
        GaussInt::default()
    }

    pub fn one() -> GaussInt {
        GaussInt::new(1, 0)
    }

    pub fn i() -> GaussInt {
        GaussInt::new(0, 1)
    }

    /// `i^k`.
    pub fn i_pow(k: u8) -> GaussInt {
        match k % 4 {
            0 => GaussInt::new(1, 0),
            1 => GaussInt::new(0, 1),
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> GaussInt {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact quotient in Z[i], or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &GaussInt) -> Option<GaussInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &d.conj();
        let (re, r1) = num.re.div_rem(&n);
        let (im, r2) = num.im.div_rem(&n);
        (r1.is_zero() && r2.is_zero()).then_some(GaussInt { re, im })
    }

    /// Exponent `k` with `self == i^k`, if `self` is a unit.
    pub fn unit_exponent(&self) -> Option<u8> {
        (0..4).find(|&k| *self == GaussInt::i_pow(k))
    }

    pub fn scale(&self, c: &BigInt) -> GaussInt {
        GaussInt {
            re: &self.re * c,
            im: &self.im * c,
        }
    }
}

impl Add<&GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn add(self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl Sub<&GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn sub(self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl Mul<&GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn mul(self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im.is_one() => write!(f, "i"),
            (true, false) if (-&self.im).is_one() => write!(f, "-i"),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => write!(f, "{}{:+}i", self.re, self.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_units() {
        let i = GaussInt::i();
        assert_eq!(&i * &i, GaussInt::new(-1, 0));
        assert_eq!(GaussInt::new(3, 4).norm(), BigInt::from(25));
        assert_eq!(GaussInt::i_pow(3), GaussInt::new(0, -1));
        assert_eq!(GaussInt::new(0, -1).unit_exponent(), Some(3));
        assert_eq!(GaussInt::new(2, 0).unit_exponent(), None);
        assert_eq!(i.conj().to_string(), "-i");
    }

    #[test]
    fn exact_division() {
        let a = GaussInt::new(2, 3);
        let b = GaussInt::new(1, -1);
        let p = &a * &b;
        assert_eq!(p.div_exact(&b), Some(a));
        assert_eq!(GaussInt::new(1, 0).div_exact(&GaussInt::new(2, 0)), None);
    }

    #[test]
    fn json_pair() {
        assert_eq!(serde_json::to_string(&GaussInt::new(0, -1)).unwrap(), "[0,-1]");
    }
}
