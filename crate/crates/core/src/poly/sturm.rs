use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::Signed;

use super::IntPoly;

/// Sturm sequence of a square-free polynomial, with every remainder scaled to
/// a primitive integer polynomial by a positive factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    /// `p` must be square-free and non-zero.
    pub fn new(p: &IntPoly) -> SturmChain {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut seq = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            seq.push(d.primitive_keep_sign());
            loop {
                let k = seq.len();
                let r = seq[k - 2].pseudo_rem(&seq[k - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push((-&r).primitive_keep_sign());
            }
        }
        debug_assert_eq!(
            seq.last().and_then(IntPoly::degree),
            Some(0),
            "input was not square-free"
        );
        SturmChain { seq }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.seq[0]
    }

    fn changes(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Sign variations at `v`, zeros dropped.
    pub fn variations_at(&self, v: &BigRational) -> usize {
        Self::changes(self.seq.iter().map(|p| p.sign_at(v)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::changes(self.seq.iter().map(|p| {
            let lc = p.leading().expect("nonzero");
            let flip = !positive && p.degree().unwrap() % 2 == 1;
            match (lc.is_positive(), flip) {
                (true, false) | (false, true) => Ordering::Greater,
                _ => Ordering::Less,
            }
        }))
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }

    /// Distinct real roots in total.
    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Distinct real roots greater than `a`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at_infinity(true)
    }
}
