//! Exact Laurent polynomials over the rationals.
//!
//! [`LaurentPoly`] is the currency of the whole crate: Alexander polynomials,
//! localization polynomials and module orders are all values of this type.
//! Associate classes under the units `±q·t^k` are represented by
//! [`LaurentPoly::normalize`].

pub(crate) mod dense;
mod factor;
mod fox_milnor;
mod modp;
mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use dense::{QPoly, ZPoly};

pub use factor::{factor, is_irreducible, squarefree_decomposition, FactorList};
pub use fox_milnor::fox_milnor_test;

/// Reduced rational with positive denominator.
pub type Rational = BigRational;

/// A finite sum of `coeff·t^exp` with nonzero rational coefficients.
///
/// The zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds `Σ coeffs[i]·t^(low + i)`.
    pub fn from_coeffs<I, C>(low: i64, coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter_map(|(i, c)| {
                let c: BigInt = c.into();
                (!c.is_zero()).then(|| (low + i as i64, Rational::from_integer(c)))
            })
            .collect();
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero with a single exponent, i.e. a unit of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max exponent - min exponent`; `None` for zero.
    pub fn degree_span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Exact value at a nonzero rational (or at any rational if all exponents are nonnegative).
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        if x.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return None;
            }
            return Some(self.coeff(0));
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rational(x, *e);
        }
        Some(acc)
    }

    /// Substitution `t ↦ t⁻¹`.
    pub fn conjugate(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitution `t ↦ t^c`.
    pub fn inflate(&self, c: u32) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidComplexity);
        }
        let mut terms = BTreeMap::new();
        for (e, coef) in &self.terms {
            let ne = e.checked_mul(i64::from(c)).ok_or(Error::ExponentOverflow)?;
            terms.insert(ne, coef.clone());
        }
        Ok(Self { terms })
    }

    /// Canonical associate: minimum exponent 0, coprime integer coefficients,
    /// positive leading coefficient. Zero maps to zero.
    pub fn normalize(&self) -> Self {
        match self.integer_primitive() {
            None => Self::zero(),
            Some((_, _, ints)) => Self::from_coeffs(0, ints),
        }
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// `true` iff `p ≐ p(t⁻¹)`.
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.normalize() == self.conjugate().normalize())
    }

    /// Splits `self = unit · t^shift · Σ ints[i]·t^i` where `ints` is primitive
    /// with a positive leading coefficient and a nonzero constant term.
    pub(crate) fn integer_primitive(&self) -> Option<(Rational, i64, ZPoly)> {
        let shift = self.min_exp()?;
        let (_, dense) = self.to_dense();
        let ints = dense::q_primitive(&dense);
        let unit = self.leading_coeff().unwrap() / Rational::from_integer(ints.last().unwrap().clone());
        Some((unit, shift, ints))
    }

    /// Dense ascending coefficients starting at the minimum exponent.
    pub(crate) fn to_dense(&self) -> (i64, QPoly) {
        let Some(low) = self.min_exp() else {
            return (0, Vec::new());
        };
        let high = self.max_exp().unwrap();
        let mut out = vec![Rational::zero(); (high - low) as usize + 1];
        for (e, c) in &self.terms {
            out[(e - low) as usize] = c.clone();
        }
        (low, out)
    }

    pub(crate) fn from_dense(low: i64, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, c.clone())),
        )
    }

    /// The quotient `self / d` when `d` divides `self` in the Laurent ring.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let (la, a) = self.to_dense();
        let (lb, b) = d.to_dense();
        let (q, r) = dense::q_divrem(&a, &b);
        if !r.is_empty() {
            return Ok(None);
        }
        Ok(Some(Self::from_dense(la - lb, &q)))
    }

    pub fn divides(&self, other: &LaurentPoly) -> Result<bool> {
        Ok(other.div_exact(self)?.is_some())
    }

    /// Largest `k` with `d^k | self`; `d` must be a non-unit.
    pub fn multiplicity_of(&self, d: &LaurentPoly) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if d.is_unit() {
            return Err(Error::ConstantPolynomial);
        }
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(d)? {
            k += 1;
            cur = q;
        }
        Ok(k)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Ordering used for deterministic factor lists: by degree span, then by
    /// coefficients read from the highest exponent down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let sa = self.degree_span().unwrap_or(-1);
        let sb = other.degree_span().unwrap_or(-1);
        sa.cmp(&sb).then_with(|| {
            let (la, a) = self.to_dense();
            let (lb, b) = other.to_dense();
            a.iter()
                .rev()
                .zip(b.iter().rev())
                .map(|(x, y)| x.cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
                .then(la.cmp(&lb))
        })
    }
}

/// Normalized gcd; rejects two zero inputs.
pub fn gcd(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_zero() {
        return Ok(q.normalize());
    }
    if q.is_zero() {
        return Ok(p.normalize());
    }
    let (_, a) = p.to_dense();
    let (_, b) = q.to_dense();
    let g = dense::q_gcd(&a, &b);
    Ok(LaurentPoly::from_dense(0, &g).normalize())
}

pub fn is_coprime(p: &LaurentPoly, q: &LaurentPoly) -> Result<bool> {
    Ok(gcd(p, q)?.is_one())
}

pub(crate) fn pow_rational(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = Rational::one();
    let mut b = base;
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        k >>= 1;
    }
    acc
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
        )
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *map.entry(ea + eb).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// `n` as an exact rational.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
