//! Exact integer polynomials, real-root isolation and interlacing tests.

mod interlace;
mod root;
mod sturm;

pub use interlace::{common_interlacing, interlaces, is_real_rooted, real_roots, roots_numeric};
pub use root::{compare_roots, isolate_largest_root, refine, AlgebraicRoot};
pub use sturm::SturmChain;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Dense polynomial with arbitrary-precision integer coefficients, lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::new(vec![c])
    }

    /// `c * x^d`.
    pub fn monomial(c: BigInt, d: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.push(c);
        IntPoly::new(coeffs)
    }

    pub fn x() -> IntPoly {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`, or `None` if some division is inexact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<IntPoly> {
        if c.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntPoly::new(out))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Content removed, leading coefficient made positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c).expect("content divides")
    }

    /// Content removed, sign kept.
    fn primitive_keep_sign(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        self.div_scalar_exact(&self.content()).expect("content divides")
    }

    /// Exact quotient `self / d` in Z[x], or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let Some(dr) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if dr < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); dr - dd + 1];
        for k in (0..=dr - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * di;
            }
            q[k] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    /// Remainder of `|lc(d)|^(deg a - deg d + 1) * self` by `d`. The positive
    /// multiplier keeps signs intact, which Sturm chains rely on.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < dd {
            return self.clone();
        }
        let lc = d.leading().unwrap();
        let mult = num_traits::pow(lc.abs(), da - dd + 1);
        let mut r: Vec<BigInt> = self.coeffs.iter().map(|c| c * &mult).collect();
        for k in (0..=da - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let c = top / lc;
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * di;
            }
        }
        r.truncate(dd);
        IntPoly::new(r)
    }

    /// Primitive gcd with positive leading coefficient (zero only if both are zero).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// The product of the distinct irreducible factors, primitive.
    pub fn square_free_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive().div_exact(&g).expect("gcd divides").primitive()
    }

    /// Yun's square-free decomposition: pairs `(f_i, i)` with each `f_i`
    /// square-free, pairwise coprime, non-constant, and `self = c * prod f_i^i`.
    pub fn square_free_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let b = self.primitive();
        let db = b.derivative();
        let c = b.gcd(&db);
        let mut w = b.div_exact(&c).expect("gcd divides");
        let mut y = db.div_exact(&c).expect("gcd divides derivative");
        let mut z = &y - &w.derivative();
        let mut i = 1;
        while w.degree().unwrap_or(0) > 0 {
            let g = w.gcd(&z);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
            }
            w = w.div_exact(&g).expect("gcd divides");
            y = z.div_exact(&g).expect("gcd divides");
            z = &y - &w.derivative();
            i += 1;
        }
        out
    }

    /// Sign of `p(v)`, computed exactly.
    pub fn sign_at(&self, v: &BigRational) -> Ordering {
        let (num, den) = (v.numer(), v.denom());
        // den^d * p(num/den) via homogenized Horner; den > 0 keeps the sign.
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.sign_ordering()
    }

    pub fn eval_rational(&self, v: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * v + BigRational::from(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Coefficients of every degree with parity opposite to `deg` vanish,
    /// i.e. `p(-x) = ±p(x)`.
    pub fn has_symmetric_roots(&self) -> bool {
        let Some(d) = self.degree() else {
            return true;
        };
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| (d - i) % 2 == 0 || c.is_zero())
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl From<Vec<i64>> for IntPoly {
    fn from(v: Vec<i64>) -> IntPoly {
        IntPoly::from_i64(&v)
    }
}

fn zip_with(a: &IntPoly, b: &IntPoly, f: impl Fn(BigInt, &BigInt) -> BigInt) -> IntPoly {
    let len = a.coeffs.len().max(b.coeffs.len());
    let zero = BigInt::zero();
    IntPoly::new(
        (0..len)
            .map(|i| f(a.coeffs.get(i).cloned().unwrap_or_default(), b.coeffs.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// JSON form: coefficient array, lowest degree first. Coefficients that fit in
/// an `i64` are numbers; larger ones are decimal strings.
impl Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }
        let raw = Vec::<Coeff>::deserialize(de)?;
        raw.into_iter()
            .map(|c| match c {
                Coeff::Int(v) => Ok(BigInt::from(v)),
                Coeff::Text(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn rational_string(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub(crate) fn rational_to_f64(v: &BigRational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}
