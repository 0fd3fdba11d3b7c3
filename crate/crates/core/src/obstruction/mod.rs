//! Certificates for the concordance obstruction: bounded strong
//! coprimality, `(c, p)`-anisotropy, the localization case split and the
//! linear-independence certificate with its verifier.

mod certificate;
mod hypotheses;
mod verify;

use serde::{Deserialize, Serialize};

use crate::blanchfield::{find_isotropic, localize, PairedModule};
use crate::error::{Error, Result};
use crate::laurent::{factor, gcd, is_coprime, squarefree_decomposition, LaurentPoly};
use crate::twist::detect_twist;

pub use certificate::{
    certify_independence, AnisotropyRecord, CertifyFailure, CoprimalityRecord, IndependenceCertificate, IrreducibilityRecord,
    LocalizationRecord, RhoRecord, Scope, SCHEMA_VERSION,
};
pub use hypotheses::{cable_transfer, FiniteOrderEvidence, IrreducibilityEvidence, KnotHypotheses, RhoOneAssertion};
pub use verify::verify_certificate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdCheck {
    pub c: u32,
    pub d: u32,
    pub gcd: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprimalityCertificate {
    pub c_max: u32,
    pub d_max: u32,
    pub checks: Vec<GcdCheck>,
    pub all_coprime: bool,
    /// Unbounded statement that applies to the inputs, if any.
    pub citation: Option<String>,
}

fn nonconstant(p: &LaurentPoly) -> Result<()> {
    match p.degree_span() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(()),
    }
}

pub(crate) fn twist_pair_citation(a: i64, b: i64) -> String {
    let (a, b) = (a.min(b), a.max(b));
    format!("Bullock-Davis (BD12): Delta_{a} and Delta_{b} are strongly coprime (distinct twist parameters)")
}

pub(crate) fn twist_irreducibility_citation(n: i64) -> String {
    format!("Bullock-Davis (BD12): Delta_{n} is strongly irreducible ({n} is neither m(m-1) nor a perfect power)")
}

/// Checks `gcd(p(t^c), q(t^d)) = 1` for `1 ≤ c ≤ c_max`, `1 ≤ d ≤ d_max`.
pub fn strong_coprimality_bounded(p: &LaurentPoly, q: &LaurentPoly, c_max: u32, d_max: u32) -> Result<CoprimalityCertificate> {
    nonconstant(p)?;
    nonconstant(q)?;
    if c_max == 0 || d_max == 0 {
        return Err(Error::InvalidComplexity);
    }
    let mut checks = Vec::new();
    for c in 1..=c_max {
        let pc = p.inflate(c)?;
        for d in 1..=d_max {
            let g = gcd(&pc, &q.inflate(d)?)?;
            checks.push(GcdCheck { c, d, gcd: g });
        }
    }
    let all_coprime = checks.iter().all(|g| g.gcd.is_one());
    let citation = match (detect_twist(p), detect_twist(q)) {
        (Some(a), Some(b)) if a != b => Some(twist_pair_citation(a, b)),
        _ => None,
    };
    Ok(CoprimalityCertificate { c_max, d_max, checks, all_coprime, citation })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalizationCase {
    /// `gcd(Δ(t^c), p) = 1`: the localized invariant reduces to ρ⁽⁰⁾.
    CaseARho0,
    /// `Δ(t^c) ≐ p`: the localized invariant is ρ⁽¹⁾.
    CaseBRho1,
    Indeterminate { gcd: LaurentPoly },
}

pub fn localization_case(delta: &LaurentPoly, c: u32, p: &LaurentPoly) -> Result<LocalizationCase> {
    if delta.is_zero() || p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = delta.inflate(c)?;
    let g = gcd(&d, p)?;
    if g.is_one() {
        return Ok(LocalizationCase::CaseARho0);
    }
    if d.normalize() == p.normalize() {
        return Ok(LocalizationCase::CaseBRho1);
    }
    Ok(LocalizationCase::Indeterminate { gcd: g })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnisotropyMethod {
    /// `Δ(t^c)` and `p` are coprime, so the localized module vanishes.
    Coprime,
    /// Every factor of `p` is symmetric and `Δ(t^c)` is squarefree.
    Squarefree,
    /// Every factor of `p` is symmetric and divides `Δ(t^c)` at most once.
    SymmetricMultiplicity,
    /// Exhaustive search over submodules of the localized module.
    ExhaustiveSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnisotropyVerdict {
    Certified,
    Refuted { witness: LaurentPoly, lagrangian: bool },
    Unknown { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnisotropyCertificate {
    pub method: Option<AnisotropyMethod>,
    pub verdict: AnisotropyVerdict,
}

impl AnisotropyCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == AnisotropyVerdict::Certified
    }
}

/// First sufficient condition for `(c, p)`-anisotropy that holds, in the
/// order coprime, squarefree, multiplicity.
pub(crate) fn sufficient_condition(delta: &LaurentPoly, c: u32, p: &LaurentPoly) -> Result<Option<AnisotropyMethod>> {
    let d = delta.inflate(c)?;
    if is_coprime(&d, p)? {
        return Ok(Some(AnisotropyMethod::Coprime));
    }
    let pf = factor(p)?;
    for (f, _) in &pf.factors {
        if !f.is_symmetric()? {
            return Ok(None);
        }
    }
    if squarefree_decomposition(&d)?.is_squarefree() {
        return Ok(Some(AnisotropyMethod::Squarefree));
    }
    for (f, _) in &pf.factors {
        if d.multiplicity_of(f)? > 1 {
            return Ok(None);
        }
    }
    Ok(Some(AnisotropyMethod::SymmetricMultiplicity))
}

/// Decides `(c, p)`-anisotropy of a knot with Alexander polynomial `delta`.
///
/// The oracle, when given, must be the complexity-`c` module of the knot; it
/// is consulted only if no sufficient condition applies.
pub fn anisotropy_certificate(
    delta: &LaurentPoly,
    c: u32,
    p: &LaurentPoly,
    oracle: Option<&PairedModule>,
) -> Result<AnisotropyCertificate> {
    if p.is_zero() || delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(method) = sufficient_condition(delta, c, p)? {
        return Ok(AnisotropyCertificate { method: Some(method), verdict: AnisotropyVerdict::Certified });
    }
    let Some(m) = oracle else {
        return Ok(AnisotropyCertificate {
            method: None,
            verdict: AnisotropyVerdict::Unknown { reason: "no sufficient condition applies and no module was supplied".into() },
        });
    };
    let expected = delta.inflate(c)?.normalize();
    if *m.order() != expected {
        return Err(Error::OracleMismatch(format!("module order {} but Delta(t^{c}) = {expected}", m.order())));
    }
    let local = localize(m, p)?;
    let found = find_isotropic(&local)?;
    let verdict = match found.into_iter().next() {
        None => AnisotropyVerdict::Certified,
        Some(s) => AnisotropyVerdict::Refuted { witness: s.submodule.generator_divisor().clone(), lagrangian: s.lagrangian },
    };
    Ok(AnisotropyCertificate { method: Some(AnisotropyMethod::ExhaustiveSearch), verdict })
}
