use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{rational_string, rational_to_f64, IntPoly, SturmChain};
use crate::error::{Error, Result};

/// A real algebraic number: a root of a square-free integer polynomial,
/// pinned down by a rational isolating interval.
///
/// Either `lo == hi` and the number is exactly that rational, or `lo < hi`,
/// neither endpoint is a root, and exactly one root of `poly` lies strictly
/// between them.
#[derive(Clone)]
pub struct AlgebraicRoot {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// Strict bound on the moduli of all roots (Cauchy), as an integer.
fn cauchy_bound(p: &IntPoly) -> BigInt {
    let lc = p.leading().expect("nonzero").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    BigInt::one() + max.div_ceil(&lc)
}

impl AlgebraicRoot {
    /// The exact rational `v`.
    pub fn from_rational(v: BigRational) -> AlgebraicRoot {
        let poly = IntPoly::new(vec![-v.numer().clone(), v.denom().clone()]);
        AlgebraicRoot {
            poly,
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn from_integer(v: i64) -> AlgebraicRoot {
        AlgebraicRoot::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// Wraps an isolating interval of a root of square-free `chain.poly()`,
    /// collapsing to an exact value when the root is an integer.
    fn isolated(chain: &SturmChain, lo: BigRational, hi: BigRational) -> AlgebraicRoot {
        let mut root = AlgebraicRoot {
            poly: chain.poly().clone(),
            lo,
            hi,
        };
        root.snap_integer();
        root
    }

    fn snap_integer(&mut self) {
        if self.is_exact() {
            return;
        }
        while &self.hi - &self.lo >= BigRational::one() {
            self.bisect();
            if self.is_exact() {
                return;
            }
        }
        let k = BigRational::from_integer(self.lo.floor().to_integer() + 1);
        if k < self.hi && self.poly.sign_at(&k) == Ordering::Equal {
            self.lo = k.clone();
            self.hi = k;
        }
    }

    /// Defining polynomial (square-free, primitive, positive leading coefficient).
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The value, when it is known to be rational.
    pub fn exact_value(&self) -> Option<&BigRational> {
        self.is_exact().then_some(&self.lo)
    }

    /// Halves the isolating interval.
    pub fn bisect(&mut self) {
        if self.is_exact() {
            return;
        }
        let mid = half(&self.lo, &self.hi);
        match self.poly.sign_at(&mid) {
            Ordering::Equal => {
                self.lo = mid.clone();
                self.hi = mid;
            }
            s if s == self.poly.sign_at(&self.lo) => self.lo = mid,
            _ => self.hi = mid,
        }
    }

    /// Bisects until the interval is narrower than `eps` (or exact).
    pub fn refine_to(&mut self, eps: &BigRational) {
        assert!(eps.is_positive(), "eps must be positive");
        while !self.is_exact() && &(&self.hi - &self.lo) >= eps {
            self.bisect();
        }
    }

    /// A float within about `1e-15` relative of the value.
    pub fn approx(&self) -> f64 {
        let mut r = self.clone();
        let scale = r.hi.abs().max(r.lo.abs()).max(BigRational::one());
        r.refine_to(&(scale * BigRational::new(BigInt::one(), BigInt::from(1u64 << 52))));
        rational_to_f64(&half(&r.lo, &r.hi))
    }

    /// `-self`.
    pub fn neg(&self) -> AlgebraicRoot {
        let poly = self.poly.reflect().primitive();
        AlgebraicRoot {
            poly,
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, v: &BigRational) -> Ordering {
        if self.is_exact() {
            return self.lo.cmp(v);
        }
        if v <= &self.lo {
            return Ordering::Greater;
        }
        if v >= &self.hi {
            return Ordering::Less;
        }
        match self.poly.sign_at(v) {
            Ordering::Equal => Ordering::Equal,
            s if s == self.poly.sign_at(&self.lo) => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// `"[lo, hi]"` with exact rational endpoints.
    pub fn interval_string(&self) -> String {
        format!("[{}, {}]", rational_string(&self.lo), rational_string(&self.hi))
    }

    /// A copy whose interval is narrower than `2^-bits` (for reports).
    pub fn refined(&self, bits: u32) -> AlgebraicRoot {
        let mut r = self.clone();
        r.refine_to(&BigRational::new(BigInt::one(), BigInt::one() << bits));
        r
    }

    fn max(self, other: AlgebraicRoot) -> AlgebraicRoot {
        if compare_roots(&self, &other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    /// The larger of the two.
    pub fn max_of(a: AlgebraicRoot, b: AlgebraicRoot) -> AlgebraicRoot {
        a.max(b)
    }
}

/// JSON form: defining polynomial, an isolating interval narrower than
/// `2^-40` with exact rational endpoints, and a decimal approximation.
impl serde::Serialize for AlgebraicRoot {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let r = self.refined(40);
        let mut st = ser.serialize_struct("AlgebraicRoot", 4)?;
        st.serialize_field("poly", &r.poly.to_string())?;
        st.serialize_field("interval", &r.interval_string())?;
        st.serialize_field("exact", &r.exact_value().map(rational_string))?;
        st.serialize_field("approx", &r.approx())?;
        st.end()
    }
}

impl fmt::Display for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact_value() {
            Some(v) => write!(f, "{}", rational_string(v)),
            None => write!(f, "{:.6} (root of {} in {})", self.approx(), self.poly, self.interval_string()),
        }
    }
}

impl fmt::Debug for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicRoot({} in {})", self.poly, self.interval_string())
    }
}

impl PartialEq for AlgebraicRoot {
    fn eq(&self, other: &Self) -> bool {
        compare_roots(self, other) == Ordering::Equal
    }
}

impl Eq for AlgebraicRoot {}

impl PartialOrd for AlgebraicRoot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicRoot {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_roots(self, other)
    }
}

/// A point strictly inside `(lo, hi)` that is not a root of the chain's polynomial.
fn split_point(chain: &SturmChain, lo: &BigRational, hi: &BigRational) -> BigRational {
    let mid = half(lo, hi);
    if chain.poly().sign_at(&mid) != Ordering::Equal {
        return mid;
    }
    // lo + (hi - lo) * k / (2k + 1), k = 1, 2, ... are distinct, so only
    // finitely many of them can be roots.
    let width = hi - lo;
    (1u32..)
        .map(|k| lo + &width * BigRational::new(BigInt::from(k), BigInt::from(2 * k + 1)))
        .find(|m| chain.poly().sign_at(m) != Ordering::Equal)
        .expect("finitely many roots")
}

/// Isolating intervals for every real root of square-free `chain.poly()`, ascending.
pub(crate) fn isolate_all(chain: &SturmChain) -> Vec<AlgebraicRoot> {
    let p = chain.poly();
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let b = BigRational::from_integer(cauchy_bound(p));
    let mut out = Vec::new();
    let total = chain.count_real();
    isolate_rec(chain, -b.clone(), b, total, &mut out);
    out
}

fn isolate_rec(
    chain: &SturmChain,
    lo: BigRational,
    hi: BigRational,
    count: usize,
    out: &mut Vec<AlgebraicRoot>,
) {
    match count {
        0 => {}
        1 => out.push(AlgebraicRoot::isolated(chain, lo, hi)),
        _ => {
            let m = split_point(chain, &lo, &hi);
            let left = chain.count_in(&lo, &m);
            isolate_rec(chain, lo, m.clone(), left, out);
            isolate_rec(chain, m, hi, count - left, out);
        }
    }
}

/// The largest real root of `p`.
pub fn isolate_largest_root(p: &IntPoly) -> Result<AlgebraicRoot> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free_part();
    if sf.degree() == Some(0) {
        return Err(Error::NoRealRoot(p.to_string()));
    }
    let chain = SturmChain::new(&sf);
    let b = BigRational::from_integer(cauchy_bound(&sf));
    let mut lo = -b.clone();
    let hi = b;
    if chain.count_above(&lo) == 0 {
        return Err(Error::NoRealRoot(p.to_string()));
    }
    let mut hi = hi;
    loop {
        let above = chain.count_in(&lo, &hi);
        if above == 1 {
            return Ok(AlgebraicRoot::isolated(&chain, lo, hi));
        }
        let m = split_point(&chain, &lo, &hi);
        if chain.count_in(&m, &hi) >= 1 {
            lo = m;
        } else {
            hi = m;
        }
    }
}

/// Isolating interval of `a` narrower than `eps`; an exact root gives `[v, v]`.
pub fn refine(a: &AlgebraicRoot, eps: &BigRational) -> (BigRational, BigRational) {
    let mut r = a.clone();
    r.refine_to(eps);
    (r.lo, r.hi)
}

/// Exact order of two real algebraic numbers.
///
/// Intervals are bisected until they separate. Before that, a shared root of
/// the two defining polynomials inside the overlap of the intervals, detected
/// through their gcd, proves equality; without one the numbers differ and
/// bisection terminates.
pub fn compare_roots(a: &AlgebraicRoot, b: &AlgebraicRoot) -> Ordering {
    if let Some(v) = a.exact_value() {
        return b.cmp_rational(v).reverse();
    }
    if let Some(v) = b.exact_value() {
        return a.cmp_rational(v);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut gcd_checked = false;
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if !gcd_checked {
            gcd_checked = true;
            let g = a.poly.gcd(&b.poly);
            if g.degree().unwrap_or(0) > 0 {
                // endpoints are non-roots of a.poly / b.poly, hence of g
                let lo = (&a.lo).max(&b.lo).clone();
                let hi = (&a.hi).min(&b.hi).clone();
                if SturmChain::new(&g).count_in(&lo, &hi) > 0 {
                    return Ordering::Equal;
                }
            }
        }
        if &a.hi - &a.lo >= &b.hi - &b.lo {
            a.bisect();
        } else {
            b.bisect();
        }
        if let Some(v) = a.exact_value() {
            return b.cmp_rational(v).reverse();
        }
        if let Some(v) = b.exact_value() {
            return a.cmp_rational(v);
        }
    }
}
