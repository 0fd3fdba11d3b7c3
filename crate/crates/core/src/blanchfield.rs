//! Linking forms on cyclic Alexander modules `ℚ[t^{±1}]/(Δ*)`.
//!
//! A module element is a polynomial `f`, standing for `f·x₀` with `x₀` a
//! fixed generator. The form is determined by `B₀₀ = Bℓ(x₀, x₀)` through
//! `Bℓ(f·x₀, g·x₀) = f·ḡ·B₀₀`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{factor, gcd, is_coprime, LaurentPoly, Rational};
use crate::linalg;
use crate::seifert::{alexander_poly, SeifertMatrix};

/// An element of `ℚ(t)/ℚ[t^{±1}]` in canonical form: the denominator is
/// normalized, the numerator is a reduced polynomial of degree below it, and
/// the two are coprime. The zero class is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunctionClass {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunctionClass {
    pub fn new(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(num, den)?;
        let num = num.div_exact(&g)?.expect("gcd divides");
        let den = den.div_exact(&g)?.expect("gcd divides");
        let d0 = den.normalize();
        // den = u·t^k·d0, so num/den = (num·t^-k/u)/d0
        let (k, u) = {
            let k = den.min_exp().unwrap();
            let u = den.leading_coeff().unwrap() / d0.leading_coeff().unwrap();
            (k, u)
        };
        if d0.degree_span() == Some(0) {
            return Ok(Self::zero());
        }
        let num = num.shift(-k).scale(&(Rational::from_integer(1.into()) / u));
        let num = reduce_mod(&num, &d0);
        Ok(Self { num, den: d0 })
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(&self.num.conjugate(), &self.den.conjugate()).expect("nonzero denominator")
    }

    pub fn mul_poly(&self, f: &LaurentPoly) -> Self {
        Self::new(&(&self.num * f), &self.den).expect("nonzero denominator")
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(&num, &(&self.den * &other.den)).expect("nonzero denominator")
    }

    /// Substitutes `t ↦ t^c` in numerator and denominator.
    pub fn inflate(&self, c: u32) -> Result<Self> {
        Self::new(&self.num.inflate(c)?, &self.den.inflate(c)?)
    }
}

impl fmt::Display for RationalFunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Remainder of an ordinary polynomial (`min_exp ≥ 0`) modulo `d0`.
fn poly_rem(p: &LaurentPoly, d0: &LaurentPoly) -> LaurentPoly {
    let (low, a) = p.to_dense();
    debug_assert!(low >= 0);
    let mut full = vec![Rational::zero(); low.max(0) as usize];
    full.extend(a);
    let (_, b) = d0.to_dense();
    let (_, r) = crate::laurent::dense::q_divrem(&full, &b);
    LaurentPoly::from_dense(0, &r)
}

fn mul_mod(a: &LaurentPoly, b: &LaurentPoly, d0: &LaurentPoly) -> LaurentPoly {
    poly_rem(&(a * b), d0)
}

/// The residue of a Laurent polynomial modulo `d0` (normalized, `d0(0) ≠ 0`).
fn reduce_mod(p: &LaurentPoly, d0: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let m = p.min_exp().unwrap();
    let body = poly_rem(&p.shift(-m), d0);
    if m >= 0 {
        return poly_rem(&body.shift(m), d0);
    }
    // t⁻¹ ≡ −(d0 − d0(0)) / (d0(0)·t)
    let d00 = d0.coeff(0);
    let rest = (d0 - &LaurentPoly::constant(d00.clone())).shift(-1);
    let tinv = rest.scale(&(-Rational::from_integer(1.into()) / d00));
    let mut e = m.unsigned_abs();
    let mut base = poly_rem(&tinv, d0);
    let mut acc = body;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &base, d0);
        }
        base = mul_mod(&base, &base, d0);
        e >>= 1;
    }
    acc
}

/// How a module was obtained from the Seifert data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    Inflated(u32),
    /// Localized at the polynomial, recorded in text form.
    Localized(String),
}

/// `ℚ[t^{±1}]/(order)` with the form determined by `pairing = Bℓ(x₀, x₀)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedModule {
    order: LaurentPoly,
    pairing: RationalFunctionClass,
    provenance: Vec<Step>,
}

impl PairedModule {
    /// Builds a module directly; `order` must be nonzero and `pairing`
    /// must be annihilated by it.
    pub fn new(order: &LaurentPoly, pairing: RationalFunctionClass) -> Result<Self> {
        if order.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let order = order.normalize();
        if !pairing.mul_poly(&order).is_zero() {
            return Err(Error::NotADivisor(format!("pairing denominator {} vs order {order}", pairing.den)));
        }
        Ok(Self { order, pairing, provenance: Vec::new() })
    }

    pub fn zero_module() -> Self {
        Self { order: LaurentPoly::one(), pairing: RationalFunctionClass::zero(), provenance: Vec::new() }
    }

    pub fn order(&self) -> &LaurentPoly {
        &self.order
    }

    pub fn generator_pairing(&self) -> &RationalFunctionClass {
        &self.pairing
    }

    pub fn provenance(&self) -> &[Step] {
        &self.provenance
    }

    pub fn is_zero_module(&self) -> bool {
        self.order.is_one()
    }

    /// Dimension over ℚ.
    pub fn dimension(&self) -> i64 {
        self.order.degree_span().unwrap_or(0)
    }

    /// `Bℓ(f·x₀, g·x₀) = f·ḡ·B₀₀`.
    pub fn pair(&self, f: &LaurentPoly, g: &LaurentPoly) -> RationalFunctionClass {
        self.pairing.mul_poly(&(f * &g.conjugate()))
    }

    /// Is the pairing nondegenerate (`denominator(B₀₀) ≐ order`)?
    pub fn is_nondegenerate(&self) -> bool {
        self.pairing.den == self.order
    }

    pub fn is_hermitian(&self) -> bool {
        self.pairing.conjugate() == self.pairing
    }

    /// The same module with `B₀₀` multiplied by a unit of ℚ[t^{±1}].
    pub fn rescaled(&self, unit: &LaurentPoly) -> Result<Self> {
        if !unit.is_unit() {
            return Err(Error::ConstantPolynomial);
        }
        Ok(Self { pairing: self.pairing.mul_poly(unit), ..self.clone() })
    }

    pub fn inflate(&self, c: u32) -> Result<Self> {
        let order = self.order.inflate(c)?.normalize();
        let pairing = self.pairing.inflate(c)?;
        let mut provenance = self.provenance.clone();
        if c != 1 {
            provenance.push(Step::Inflated(c));
        }
        Ok(Self { order, pairing, provenance })
    }
}

/// The form `(1−t)·x̄ᵀ(tV−Vᵀ)⁻¹y` on vectors of Laurent polynomials.
pub fn seifert_pairing(v: &SeifertMatrix, x: &[LaurentPoly], y: &[LaurentPoly]) -> Result<RationalFunctionClass> {
    let n = v.size();
    if x.len() != n || y.len() != n {
        return Err(Error::InvalidSeifert(format!("vectors must have length {n}")));
    }
    if n == 0 {
        return Ok(RationalFunctionClass::zero());
    }
    let m = v.presentation();
    let adj = linalg::poly_adjugate(&m);
    let det = linalg::poly_det(&m);
    let mut acc = LaurentPoly::zero();
    for i in 0..n {
        for j in 0..n {
            acc = &acc + &(&(&x[i].conjugate() * &adj[i][j]) * &y[j]);
        }
    }
    let one_minus_t = &LaurentPoly::one() - &LaurentPoly::t();
    RationalFunctionClass::new(&(&one_minus_t * &acc), &det)
}

/// The module of `V` with complexity `c`: order `Δ(t^c)`, generator pairing
/// inflated by `t ↦ t^c`. Only cyclic presentations (`V` of size ≤ 2 with
/// squarefree `Δ`) are accepted.
pub fn pairing_from_seifert(v: &SeifertMatrix, c: u32) -> Result<PairedModule> {
    if c == 0 {
        return Err(Error::InvalidComplexity);
    }
    if v.size() == 0 {
        return Ok(PairedModule::zero_module());
    }
    if v.size() > 2 {
        return Err(Error::NonCyclic(format!("presentation of size {} is outside the cyclic case", v.size())));
    }
    let delta = alexander_poly(v);
    if !crate::laurent::squarefree_decomposition(&delta)?.is_squarefree() {
        return Err(Error::NonCyclic(format!("Alexander polynomial {delta} is not squarefree")));
    }
    let m = v.presentation();
    let adj = linalg::poly_adjugate(&m);
    let det = linalg::poly_det(&m);
    let generator = [(1, 0), (0, 1), (1, 1), (1, -1)]
        .into_iter()
        .map(|(a, b)| [LaurentPoly::constant(Rational::from_integer(a.into())), LaurentPoly::constant(Rational::from_integer(b.into()))])
        .find(|x| generates(&adj, &det, x, &delta))
        .ok_or_else(|| Error::NonCyclic("no generator among small vectors".into()))?;
    let b00 = seifert_pairing(v, &generator, &generator)?;
    let base = PairedModule { order: delta, pairing: b00, provenance: Vec::new() };
    debug_assert!(base.is_nondegenerate() && base.is_hermitian());
    base.inflate(c)
}

/// `x` generates the cokernel of `M` iff `M⁻¹x` has denominators with lcm `≐ Δ`.
fn generates(adj: &[Vec<LaurentPoly>], det: &LaurentPoly, x: &[LaurentPoly], delta: &LaurentPoly) -> bool {
    let mut l = LaurentPoly::one();
    for row in adj {
        let mut s = LaurentPoly::zero();
        for (a, xi) in row.iter().zip(x) {
            s = &s + &(a * xi);
        }
        if s.is_zero() {
            continue;
        }
        let g = gcd(&s, det).expect("det nonzero");
        let den = det.div_exact(&g).unwrap().unwrap();
        let lg = gcd(&l, &den).expect("nonzero");
        l = (&l * &den).div_exact(&lg).unwrap().unwrap();
    }
    l.normalize() == *delta
}

/// Keeps the part of the module supported on the irreducible factors of the
/// order that share a factor with `p`; the generator becomes `E·x₀` where
/// `E` is the complementary part of the order.
pub fn localize(m: &PairedModule, p: &LaurentPoly) -> Result<PairedModule> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if m.is_zero_module() {
        let mut out = m.clone();
        out.provenance.push(Step::Localized(p.normalize().to_string()));
        return Ok(out);
    }
    let fl = factor(&m.order)?;
    let mut kept = LaurentPoly::one();
    let mut rest = LaurentPoly::one();
    for (f, e) in &fl.factors {
        if is_coprime(f, p)? {
            rest = &rest * &f.pow(*e);
        } else {
            kept = &kept * &f.pow(*e);
        }
    }
    let mut provenance = m.provenance.clone();
    provenance.push(Step::Localized(p.normalize().to_string()));
    Ok(PairedModule { order: kept.normalize(), pairing: m.pair(&rest, &rest), provenance })
}

/// The submodule generated by `g·x₀` for a normalized divisor `g` of the order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    generator_divisor: LaurentPoly,
}

impl Submodule {
    pub fn new(m: &PairedModule, g: &LaurentPoly) -> Result<Self> {
        if g.is_zero() || !g.divides(&m.order)? {
            return Err(Error::NotADivisor(g.to_string()));
        }
        Ok(Self { generator_divisor: g.normalize() })
    }

    pub fn generator_divisor(&self) -> &LaurentPoly {
        &self.generator_divisor
    }

    /// The zero submodule (`g ≐ order`).
    pub fn is_trivial(&self, m: &PairedModule) -> bool {
        self.generator_divisor == m.order
    }

    /// Dimension over ℚ: `deg(order) − deg(g)`.
    pub fn dimension(&self, m: &PairedModule) -> i64 {
        m.dimension() - self.generator_divisor.degree_span().unwrap_or(0)
    }
}

/// One submodule per normalized divisor of the order.
pub fn submodules(m: &PairedModule) -> Result<Vec<Submodule>> {
    if m.is_zero_module() {
        return Ok(vec![Submodule { generator_divisor: LaurentPoly::one() }]);
    }
    Ok(factor(&m.order)?.divisors().into_iter().map(|g| Submodule { generator_divisor: g }).collect())
}

/// `g·ḡ·B₀₀ ≡ 0`.
pub fn is_isotropic(m: &PairedModule, s: &Submodule) -> bool {
    let g = &s.generator_divisor;
    m.pair(g, g).is_zero()
}

/// `s^⊥` as a submodule: `⟨h·x₀⟩` with `h = D / gcd(D, ḡ)`, `D` the
/// denominator of `B₀₀`.
pub fn perp(m: &PairedModule, s: &Submodule) -> Submodule {
    let d = m.pairing.denominator();
    let gbar = s.generator_divisor.conjugate();
    let common = gcd(d, &gbar).expect("nonzero");
    let h = d.div_exact(&common).unwrap().unwrap();
    Submodule { generator_divisor: h.normalize() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicSubmodule {
    pub submodule: Submodule,
    pub lagrangian: bool,
}

/// Every nontrivial isotropic submodule, with its Lagrangian flag.
pub fn find_isotropic(m: &PairedModule) -> Result<Vec<IsotropicSubmodule>> {
    let mut out = Vec::new();
    for s in submodules(m)? {
        if s.is_trivial(m) || !is_isotropic(m, &s) {
            continue;
        }
        let lagrangian = perp(m, &s) == s;
        out.push(IsotropicSubmodule { submodule: s, lagrangian });
    }
    Ok(out)
}
