use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::roots::{isolate_roots, rational_to_f64, AlgebraicReal};
use super::{alexander_poly, signature, SeifertMatrix};
use crate::error::{Error, Result};
use crate::laurent::dense::{self, QPoly, ZPoly};
use crate::laurent::Rational;
use crate::linalg;

/// A point where the Levine–Tristram signature changes value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jump {
    /// `z = ω + ω̄` of the jump.
    pub location: AlgebraicReal,
    /// Value on the arc between this jump and `ω = 1`.
    pub value_toward_one: i64,
    /// Value on the arc between this jump and `ω = −1`.
    pub value_toward_minus_one: i64,
}

/// The Levine–Tristram signature as a step function of `z ∈ (−2, 2)`.
///
/// Jumps are listed from `ω = 1` towards `ω = −1`, i.e. by decreasing `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureProfile {
    pub jumps: Vec<Jump>,
    pub base_value: i64,
    pub sigma_at_minus_one: i64,
}

impl SignatureProfile {
    /// Value of the step function at `z`; locations of jumps are rejected.
    pub fn value_at(&self, z: &AlgebraicReal) -> Result<i64> {
        let mut value = self.base_value;
        for j in &self.jumps {
            match z.compare(&j.location) {
                Ordering::Equal => return Err(Error::AtJump),
                Ordering::Less => value = j.value_toward_minus_one,
                Ordering::Greater => break,
            }
        }
        Ok(value)
    }

    pub fn total_variation(&self) -> i64 {
        self.jumps.iter().map(|j| (j.value_toward_minus_one - j.value_toward_one).abs()).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.jumps.is_empty()
    }
}

/// One summand `weight · arccos(z/2) / π` of ρ⁽⁰⁾.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoTerm {
    pub weight: i64,
    pub location: AlgebraicReal,
}

/// ρ⁽⁰⁾ = `constant + Σ weight·arccos(z/2)/π`, with a numeric evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct RhoZero {
    pub constant: i64,
    pub terms: Vec<RhoTerm>,
    pub numeric_value: f64,
    pub error_bound: f64,
}

impl RhoZero {
    /// The value as a rational, when every jump sits at `z ∈ {−1, 0, 1}`.
    pub fn exact_value(&self) -> Option<Rational> {
        let mut acc = Rational::from_integer(self.constant.into());
        for term in &self.terms {
            let z = term.location.as_rational()?;
            let frac = arccos_fraction(z)?;
            acc += frac * Rational::from_integer(term.weight.into());
        }
        Some(acc)
    }

    pub fn is_exactly_zero(&self) -> bool {
        self.exact_value().is_some_and(|v| v.is_zero())
    }

    pub fn exact_form(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for RhoZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for term in &self.terms {
            let sign = if term.weight < 0 { "-" } else { "+" };
            match term.location.as_rational() {
                Some(z) => write!(f, " {sign} {}*acos({})/pi", term.weight.abs(), z / Rational::from_integer(2.into()))?,
                None => write!(f, " {sign} {}*acos(z/2)/pi [z {}]", term.weight.abs(), term.location)?,
            }
        }
        Ok(())
    }
}

/// `arccos(z/2)/π` for the rational `z` where it is rational.
fn arccos_fraction(z: &Rational) -> Option<Rational> {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    if *z == r(1, 1) {
        Some(r(1, 3))
    } else if z.is_zero() {
        Some(r(1, 2))
    } else if *z == r(-1, 1) {
        Some(r(2, 3))
    } else {
        None
    }
}

/// `q` with `Δ(t) = t^h · q(t + t⁻¹)` for the normalized, symmetric `Δ` of span `2h`.
pub(crate) fn symmetric_rewrite(v: &SeifertMatrix) -> ZPoly {
    let delta = alexander_poly(v);
    let (_, c) = delta.to_dense();
    let span = c.len() - 1;
    debug_assert!(span % 2 == 0, "Alexander polynomial of a knot has even span");
    let h = span / 2;
    // D_k(z) = t^k + t^-k as polynomials in z
    let mut d: Vec<QPoly> = vec![vec![Rational::from_integer(2.into())], vec![Rational::zero(), Rational::one()]];
    while d.len() <= h {
        let k = d.len();
        let mut zd: QPoly = vec![Rational::zero()];
        zd.extend(d[k - 1].iter().cloned());
        d.push(dense::q_sub(&zd, &d[k - 2]));
    }
    let mut q: QPoly = vec![c[h].clone()];
    for k in 1..=h {
        let term = dense::q_scale(&d[k], &c[h + k]);
        q = dense::q_sub(&q, &term.iter().map(|x| -x).collect());
    }
    dense::q_primitive(&q)
}

fn z_of_u(u: &Rational) -> Rational {
    let u2 = u * u;
    let one = Rational::one();
    Rational::from_integer(2.into()) * (&u2 - &one) / (&u2 + &one)
}

/// A rational `u ≥ 0` with `lo < z(u) < hi`, where `z(u) = 2(u²−1)/(u²+1)`.
fn pick_u(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo < hi);
    let mut a = Rational::zero();
    let mut b = Rational::one();
    loop {
        let zb = z_of_u(&b);
        if &zb >= hi {
            break;
        }
        if &zb > lo {
            return b;
        }
        a = b.clone();
        b = &b * Rational::from_integer(2.into());
    }
    loop {
        let m = (&a + &b) / Rational::from_integer(2.into());
        let zm = z_of_u(&m);
        if &zm > lo && &zm < hi {
            return m;
        }
        if &zm <= lo {
            a = m;
        } else {
            b = m;
        }
    }
}

/// Signature of `(1−ω)V + (1−ω̄)Vᵀ` for `ω = e^{iθ}` with `u = cot(θ/2)`.
///
/// Dividing by `1 − cos θ > 0` leaves the Hermitian matrix `S − iuK`, whose
/// realification `[[S, uK], [−uK, S]]` has twice its signature.
fn signature_at_u(v: &SeifertMatrix, u: &Rational) -> i64 {
    let (s, k) = v.sym_antisym();
    let n = v.size();
    let mut real = vec![vec![Rational::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let uk = u * &k[i][j];
            real[i][j] = s[i][j].clone();
            real[n + i][n + j] = s[i][j].clone();
            real[i][n + j] = uk.clone();
            real[n + i][j] = -uk;
        }
    }
    let sig = linalg::signature(&real);
    debug_assert!(sig % 2 == 0);
    sig / 2
}

/// Roots of `q` in (−2, 2), ascending, with rational windows strictly inside
/// each complementary arc (`windows.len() == roots.len() + 1`).
struct Arcs {
    roots: Vec<AlgebraicReal>,
    windows: Vec<(Rational, Rational)>,
}

fn arcs(q: &ZPoly) -> Arcs {
    let two = Rational::from_integer(2.into());
    let m2 = -two.clone();
    let mut roots = if q.len() > 1 { isolate_roots(q, &m2, &two) } else { Vec::new() };
    // separate neighbouring isolating intervals from each other and from ±2
    loop {
        let mut dirty = false;
        for i in 0..=roots.len() {
            let left_hi = if i == 0 { m2.clone() } else { roots[i - 1].hi().clone() };
            let right_lo = if i == roots.len() { two.clone() } else { roots[i].lo().clone() };
            if left_hi >= right_lo {
                dirty = true;
                for idx in [i.checked_sub(1), (i < roots.len()).then_some(i)].into_iter().flatten() {
                    let w = (roots[idx].hi() - roots[idx].lo()) / &two;
                    roots[idx].refine(&w);
                }
            }
        }
        if !dirty {
            break;
        }
    }
    let windows = (0..=roots.len())
        .map(|i| {
            let lo = if i == 0 { m2.clone() } else { roots[i - 1].hi().clone() };
            let hi = if i == roots.len() { two.clone() } else { roots[i].lo().clone() };
            (lo, hi)
        })
        .collect();
    Arcs { roots, windows }
}

fn check_circle(z: &AlgebraicReal) -> Result<()> {
    let two = Rational::from_integer(2.into());
    if z.cmp_rational(&-two.clone()) == Ordering::Less || z.cmp_rational(&two) != Ordering::Less {
        return Err(Error::OutsideUnitCircle);
    }
    Ok(())
}

/// Levine–Tristram signature at the unit-circle point with `z = ω + ω̄`.
///
/// `z` must lie in `[−2, 2)` and must not be a root of the symmetric rewrite
/// of the Alexander polynomial.
pub fn levine_tristram(v: &SeifertMatrix, z: &AlgebraicReal) -> Result<i64> {
    check_circle(z)?;
    if v.size() == 0 {
        return Ok(0);
    }
    let q = symmetric_rewrite(v);
    if z.is_root_of(&q) {
        return Err(Error::AtJump);
    }
    let minus_two = Rational::from_integer(BigInt::from(-2));
    if z.as_rational() == Some(&minus_two) {
        return Ok(signature(v));
    }
    let arcs = arcs(&q);
    let idx = arcs.roots.iter().filter(|r| r.compare(z) == Ordering::Less).count();
    let (lo, hi) = &arcs.windows[idx];
    Ok(signature_at_u(v, &pick_u(lo, hi)))
}

/// The full signature step function.
pub fn signature_profile(v: &SeifertMatrix) -> SignatureProfile {
    let sigma_at_minus_one = signature(v);
    if v.size() == 0 {
        return SignatureProfile { jumps: Vec::new(), base_value: 0, sigma_at_minus_one };
    }
    let q = symmetric_rewrite(v);
    let arcs = arcs(&q);
    let values: Vec<i64> = arcs.windows.iter().map(|(lo, hi)| signature_at_u(v, &pick_u(lo, hi))).collect();
    debug_assert_eq!(values[0], sigma_at_minus_one);
    let mut jumps = Vec::new();
    for (i, root) in arcs.roots.iter().enumerate().rev() {
        if values[i + 1] != values[i] {
            jumps.push(Jump { location: root.clone(), value_toward_one: values[i + 1], value_toward_minus_one: values[i] });
        }
    }
    SignatureProfile { jumps, base_value: *values.last().unwrap(), sigma_at_minus_one }
}

/// ρ⁽⁰⁾: the integral of the signature function over the unit circle of total measure 1.
///
/// With jumps at `θ₁ < … < θ_m` in `(0, π)` and arc values `v₀ … v_m`, the
/// integral is `v_m + Σ (v_{k−1} − v_k) θ_k / π`.
pub fn rho_zero(v: &SeifertMatrix) -> RhoZero {
    let profile = signature_profile(v);
    let tight = Rational::new(1.into(), BigInt::from(10).pow(30));
    let mut terms = Vec::new();
    let mut numeric = profile.sigma_at_minus_one as f64;
    let mut error = f64::EPSILON * (1.0 + numeric.abs());
    for j in &profile.jumps {
        let weight = j.value_toward_one - j.value_toward_minus_one;
        let loc = j.location.clone().refined(&tight);
        let lo = (rational_to_f64(loc.lo()) / 2.0).clamp(-1.0, 1.0);
        let hi = (rational_to_f64(loc.hi()) / 2.0).clamp(-1.0, 1.0);
        let theta = (lo.acos() + hi.acos()) / 2.0;
        numeric += weight as f64 * theta / std::f64::consts::PI;
        let spread = (lo.acos() - hi.acos()).abs() + 4.0 * f64::EPSILON;
        error += weight.abs() as f64 * spread / std::f64::consts::PI + 4.0 * f64::EPSILON * weight.abs() as f64;
        terms.push(RhoTerm { weight, location: j.location.clone() });
    }
    RhoZero { constant: profile.sigma_at_minus_one, terms, numeric_value: numeric, error_bound: error }
}
