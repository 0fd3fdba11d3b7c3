//! Real algebraic numbers and Sturm-sequence root isolation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::dense::{self, QPoly, ZPoly};
use crate::laurent::{LaurentPoly, Rational};

/// A real root of an integer polynomial, pinned by an isolating interval.
///
/// Either `lo == hi` (the root is that rational) or `lo < hi`, neither endpoint
/// is a root, and the polynomial has exactly one root strictly between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicReal {
    poly: ZPoly,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicReal {
    pub fn from_rational(q: Rational) -> Self {
        // denom·x - numer
        let poly = vec![-q.numer().clone(), q.denom().clone()];
        Self { poly, lo: q.clone(), hi: q }
    }

    /// Validates that `poly` has exactly one root in `[lo, hi]`.
    pub fn new(poly: &LaurentPoly, lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidAlgebraic("empty interval".into()));
        }
        let Some((_, _, ints)) = poly.integer_primitive() else {
            return Err(Error::InvalidAlgebraic("zero defining polynomial".into()));
        };
        if poly.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::InvalidAlgebraic("defining polynomial must be an ordinary polynomial".into()));
        }
        let shift = poly.min_exp().unwrap();
        let mut ints = ints;
        if shift > 0 {
            // root 0 appears as a factor x^shift
            let mut v = vec![BigInt::zero(); shift as usize];
            v.extend(ints);
            ints = v;
        }
        let sq = squarefree_part(&ints);
        if lo == hi {
            if !eval_z(&sq, &lo).is_zero() {
                return Err(Error::InvalidAlgebraic("point is not a root".into()));
            }
            return Ok(Self { poly: sq, lo, hi });
        }
        if eval_z(&sq, &lo).is_zero() || eval_z(&sq, &hi).is_zero() {
            return Err(Error::InvalidAlgebraic("interval endpoint is a root".into()));
        }
        let sturm = Sturm::new(&sq);
        if sturm.count_open(&lo, &hi) != 1 {
            return Err(Error::InvalidAlgebraic("interval does not isolate a single root".into()));
        }
        Ok(Self { poly: sq, lo, hi })
    }

    pub fn poly(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, self.poly.clone())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    /// Bisects until `hi - lo <= width` (no-op for rational points).
    pub fn refine(&mut self, width: &Rational) {
        if self.lo == self.hi {
            return;
        }
        let q = dense::z_to_q(&self.poly);
        let sign_lo = dense::q_eval(&q, &self.lo).is_positive();
        while &(&self.hi - &self.lo) > width {
            let mid = (&self.lo + &self.hi) / Rational::from_integer(2.into());
            let v = dense::q_eval(&q, &mid);
            if v.is_zero() {
                self.lo = mid.clone();
                self.hi = mid;
                return;
            }
            if v.is_positive() == sign_lo {
                self.lo = mid;
            } else {
                self.hi = mid;
            }
        }
    }

    pub fn refined(mut self, width: &Rational) -> Self {
        self.refine(width);
        self
    }

    /// Midpoint of a tight isolating interval.
    pub fn to_f64(&self) -> f64 {
        let mut tight = self.clone();
        tight.refine(&Rational::new(1.into(), BigInt::from(10).pow(30)));
        let mid = (&tight.lo + &tight.hi) / Rational::from_integer(2.into());
        rational_to_f64(&mid)
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if let Some(r) = self.as_rational() {
            return r.cmp(q);
        }
        if !eval_z(&self.poly, q).is_zero() || q <= &self.lo || q >= &self.hi {
            let mut me = self.clone();
            loop {
                if q <= &me.lo {
                    return Ordering::Greater;
                }
                if q >= &me.hi {
                    return Ordering::Less;
                }
                let w = (&me.hi - &me.lo) / Rational::from_integer(2.into());
                me.refine(&w);
                if let Some(r) = me.as_rational() {
                    return r.cmp(q);
                }
            }
        }
        // q is a root of poly inside (lo, hi): it is this root
        Ordering::Equal
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn compare(&self, other: &AlgebraicReal) -> Ordering {
        if let Some(r) = other.as_rational() {
            return self.cmp_rational(r);
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_rational(r).reverse();
        }
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        if lo < hi {
            let g = dense::q_gcd(&dense::z_to_q(&self.poly), &dense::z_to_q(&other.poly));
            if g.len() > 1 && Sturm::new(&dense::q_primitive(&g)).count_open(&lo, &hi) > 0 {
                return Ordering::Equal;
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            let two = Rational::from_integer(2.into());
            let wa = (&a.hi - &a.lo) / &two;
            let wb = (&b.hi - &b.lo) / &two;
            a.refine(&wa);
            b.refine(&wb);
            if a.as_rational().is_some() || b.as_rational().is_some() {
                return a.compare(&b);
            }
        }
    }

    /// Is this number a root of `p`?
    pub fn is_root_of(&self, p: &[BigInt]) -> bool {
        if let Some(r) = self.as_rational() {
            return eval_z(p, r).is_zero();
        }
        let g = dense::q_gcd(&dense::z_to_q(&self.poly), &dense::z_to_q(p));
        if g.len() <= 1 {
            return false;
        }
        let g = dense::q_primitive(&g);
        Sturm::new(&g).count_open(&self.lo, &self.hi) > 0
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "root of {} in ({}, {})", self.poly(), self.lo, self.hi),
        }
    }
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    // scale so both parts fit comfortably in f64
    let n = q.numer();
    let d = q.denom();
    let shift = (n.bits().max(d.bits()) as i64 - 900).max(0) as usize;
    let nf = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let df = (d >> shift).to_f64().unwrap_or(f64::NAN);
    if df == 0.0 {
        return q.to_f64().unwrap_or(f64::NAN);
    }
    nf / df
}

pub(crate) fn eval_z(p: &[BigInt], x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

/// Squarefree part as a primitive integer polynomial.
pub(crate) fn squarefree_part(p: &[BigInt]) -> ZPoly {
    let q = dense::z_to_q(p);
    if q.len() <= 1 {
        return dense::q_primitive(&q);
    }
    let g = dense::q_gcd(&q, &dense::q_derivative(&q));
    dense::q_primitive(&dense::q_divrem(&q, &g).0)
}

/// Sturm chain of a squarefree polynomial.
pub(crate) struct Sturm {
    chain: Vec<QPoly>,
}

impl Sturm {
    pub fn new(p: &[BigInt]) -> Self {
        let p0 = dense::z_to_q(p);
        let mut chain = vec![p0.clone()];
        let p1 = dense::q_derivative(&p0);
        if !p1.is_empty() {
            chain.push(p1);
            loop {
                let n = chain.len();
                let (_, r) = dense::q_divrem(&chain[n - 2], &chain[n - 1]);
                if r.is_empty() {
                    break;
                }
                let neg: QPoly = r.iter().map(|c| -c).collect();
                chain.push(neg);
            }
        }
        Self { chain }
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for s in &self.chain {
            let v = dense::q_eval(s, x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if last.is_some_and(|l| l != pos) {
                count += 1;
            }
            last = Some(pos);
        }
        count
    }

    /// Distinct roots in `(a, b)`; `a`, `b` must not be roots.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Isolates every real root of `p` in the open interval `(a, b)`, ascending.
/// `a` and `b` must not be roots.
pub fn isolate_roots(p: &[BigInt], a: &Rational, b: &Rational) -> Vec<AlgebraicReal> {
    let sq = squarefree_part(p);
    if sq.len() <= 1 {
        return Vec::new();
    }
    let sturm = Sturm::new(&sq);
    let mut out = Vec::new();
    isolate_in(&sq, &sturm, a.clone(), b.clone(), &mut out);
    out
}

fn isolate_in(p: &[BigInt], sturm: &Sturm, a: Rational, b: Rational, out: &mut Vec<AlgebraicReal>) {
    let n = sturm.count_open(&a, &b);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(AlgebraicReal { poly: p.to_vec(), lo: a, hi: b });
        return;
    }
    let two = Rational::from_integer(2.into());
    let mid = (&a + &b) / &two;
    if !eval_z(p, &mid).is_zero() {
        isolate_in(p, sturm, a, mid.clone(), out);
        isolate_in(p, sturm, mid, b, out);
        return;
    }
    // mid is an exact root: carve out a root-free collar around it
    let mut delta = (&b - &a) / Rational::from_integer(4.into());
    loop {
        let l = &mid - &delta;
        let r = &mid + &delta;
        if !eval_z(p, &l).is_zero() && !eval_z(p, &r).is_zero() && sturm.count_open(&l, &r) == 1 {
            isolate_in(p, sturm, a, l, out);
            out.push(AlgebraicReal { poly: p.to_vec(), lo: mid.clone(), hi: mid });
            isolate_in(p, sturm, r, b, out);
            return;
        }
        delta /= &two;
    }
}
