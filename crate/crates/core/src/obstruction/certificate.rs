use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::hypotheses::{FiniteOrderEvidence, IrreducibilityEvidence, KnotHypotheses};
use super::{
    anisotropy_certificate, localization_case, twist_irreducibility_citation, twist_pair_citation, AnisotropyMethod,
    AnisotropyVerdict, LocalizationCase,
};
use crate::blanchfield::pairing_from_seifert;
use crate::laurent::{gcd, is_irreducible, LaurentPoly};
use crate::seifert::rho_zero;
use crate::twist::strong_irreducibility;

pub const SCHEMA_VERSION: &str = "v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrreducibilityRecord {
    pub index: usize,
    pub c: u32,
    pub inflated: String,
    pub irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoprimalityRecord {
    pub i: usize,
    pub j: usize,
    pub c: u32,
    pub d: u32,
    pub gcd: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalizationRecord {
    pub j: usize,
    pub c: u32,
    pub p: String,
    pub i: usize,
    pub case: LocalizationCase,
    pub gcd: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnisotropyRecord {
    pub j: usize,
    pub c: u32,
    pub i: usize,
    pub method: AnisotropyMethod,
    pub verdict: AnisotropyVerdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RhoZeroMethod {
    /// Signature profile of the Seifert matrix has no jumps and vanishes at −1.
    ComputedFromSeifert,
    /// Finite order in `AC_ℚ` forces the signature function to vanish.
    ImpliedByFiniteOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RhoRecord {
    pub index: usize,
    pub rho_one_nonzero: bool,
    pub rho_zero: String,
    pub rho_zero_method: RhoZeroMethod,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scope {
    /// Every check below is machine-verified for `1 ≤ c ≤` this bound.
    pub verified_max_complexity: u32,
    /// Whether cited strong irreducibility / coprimality cover every `c`.
    pub all_complexities_cited: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndependenceCertificate {
    pub schema: String,
    pub c_max: u32,
    pub family: Vec<KnotHypotheses>,
    pub hypotheses_sha256: String,
    pub irreducibility: Vec<IrreducibilityRecord>,
    pub coprimality: Vec<CoprimalityRecord>,
    pub localization: Vec<LocalizationRecord>,
    pub anisotropy: Vec<AnisotropyRecord>,
    pub rho: Vec<RhoRecord>,
    pub citations: Vec<String>,
    pub scope: Scope,
    pub conclusion: String,
}

impl IndependenceCertificate {
    /// Canonical JSON: keys sorted, two-space indentation, trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("certificate serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }
}

pub(crate) fn hypotheses_digest(family: &[KnotHypotheses]) -> String {
    let v = serde_json::to_value(family).expect("hypotheses serialize");
    let bytes = serde_json::to_vec(&v).expect("value serializes");
    hex::encode(Sha256::digest(&bytes))
}

pub(crate) fn conclusion_text(n: usize, c_max: u32, cited: bool) -> String {
    let coeffs = if n == 1 { "a_1 = 0".to_string() } else { format!("a_1 = ... = a_{n} = 0") };
    let mut s = format!("{coeffs} for every combination of the family members that is rationally slice with complexity c <= {c_max}");
    if cited {
        s.push_str("; larger complexities are covered by the cited strong irreducibility and strong coprimality");
    }
    s
}

pub(crate) fn citations_and_scope(family: &[KnotHypotheses]) -> (Vec<String>, bool) {
    let twist_n = |h: &KnotHypotheses| match h.strong_irreducibility {
        IrreducibilityEvidence::BullockDavis { n } => Some(n),
        _ => None,
    };
    let mut citations = BTreeSet::new();
    for h in family {
        if let Some(n) = twist_n(h) {
            citations.insert(twist_irreducibility_citation(n));
        }
    }
    let mut all = family.iter().all(|h| h.cable == 1 && twist_n(h).is_some());
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            match (twist_n(a), twist_n(b)) {
                (Some(x), Some(y)) if x != y && a.cable == 1 && b.cable == 1 => {
                    citations.insert(twist_pair_citation(x, y));
                }
                _ => all = false,
            }
        }
    }
    (citations.into_iter().collect(), all)
}

/// The first unmet hypothesis, in the fixed evaluation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyFailure {
    InvalidComplexity,
    EmptyFamily,
    DuplicateLabel(String),
    InconsistentHypotheses { label: String, reason: String },
    StrongIrreducibility { label: String, reason: String },
    NotIrreducible { label: String, c: u32, inflated: LaurentPoly },
    NotCoprime { first: String, second: String, c: u32, d: u32, gcd: LaurentPoly },
    Localization { target: String, member: String, c: u32, gcd: LaurentPoly },
    NotAnisotropic { label: String, c: u32, p: LaurentPoly, detail: String },
    RhoOneUnasserted { label: String },
    FiniteOrderUnestablished { label: String, reason: String },
    RhoZeroNonzero { label: String, value: String },
    Algebra(String),
}

impl CertifyFailure {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::InvalidComplexity => "invalid_complexity",
            Self::EmptyFamily => "empty_family",
            Self::DuplicateLabel(_) => "duplicate_label",
            Self::InconsistentHypotheses { .. } => "inconsistent_hypotheses",
            Self::StrongIrreducibility { .. } | Self::NotIrreducible { .. } => "strong_irreducibility",
            Self::NotCoprime { .. } => "strong_coprimality",
            Self::Localization { .. } => "localization_indeterminate",
            Self::NotAnisotropic { .. } => "anisotropy",
            Self::RhoOneUnasserted { .. } => "rho1_unasserted",
            Self::FiniteOrderUnestablished { .. } => "finite_order",
            Self::RhoZeroNonzero { .. } => "rho0_nonzero",
            Self::Algebra(_) => "algebra_error",
        }
    }
}

impl fmt::Display for CertifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidComplexity => write!(f, "complexity bound must be positive"),
            Self::EmptyFamily => write!(f, "family is empty"),
            Self::DuplicateLabel(l) => write!(f, "duplicate label {l}"),
            Self::InconsistentHypotheses { label, reason } => write!(f, "inconsistent hypotheses for {label}: {reason}"),
            Self::StrongIrreducibility { label, reason } => write!(f, "strong irreducibility: {reason} [{label}]"),
            Self::NotIrreducible { label, c, inflated } => {
                write!(f, "strong irreducibility: Delta(t^{c}) = {inflated} is reducible [{label}]")
            }
            Self::NotCoprime { first, second, c, d, gcd } => {
                write!(f, "strong coprimality: gcd({first} at t^{c}, {second} at t^{d}) = {gcd}")
            }
            Self::Localization { target, member, c, gcd } => {
                write!(f, "localization: {member} against p = Delta_{target}(t^{c}) is indeterminate, gcd = {gcd}")
            }
            Self::NotAnisotropic { label, c, p, detail } => write!(f, "anisotropy: {label} at complexity {c}, p = {p}: {detail}"),
            Self::RhoOneUnasserted { label } => write!(f, "rho1: unasserted for {label}"),
            Self::FiniteOrderUnestablished { label, reason } => write!(f, "finite order: {reason} [{label}]"),
            Self::RhoZeroNonzero { label, value } => write!(f, "rho0: {value} is not zero [{label}]"),
            Self::Algebra(e) => write!(f, "algebra error: {e}"),
        }
    }
}

impl std::error::Error for CertifyFailure {}

impl From<crate::Error> for CertifyFailure {
    fn from(e: crate::Error) -> Self {
        Self::Algebra(e.to_string())
    }
}

fn inflated(h: &KnotHypotheses, c: u32) -> Result<LaurentPoly, CertifyFailure> {
    Ok(h.delta.inflate(c)?.normalize())
}

/// Builds the independence certificate for `family`, checking complexities
/// `1 ≤ c ≤ c_max`.
pub fn certify_independence(family: &[KnotHypotheses], c_max: u32) -> Result<IndependenceCertificate, CertifyFailure> {
    if c_max == 0 {
        return Err(CertifyFailure::InvalidComplexity);
    }
    if family.is_empty() {
        return Err(CertifyFailure::EmptyFamily);
    }
    let mut seen = BTreeSet::new();
    for h in family {
        if !seen.insert(h.label.as_str()) {
            return Err(CertifyFailure::DuplicateLabel(h.label.clone()));
        }
    }
    for h in family {
        h.check_consistency()
            .map_err(|reason| CertifyFailure::InconsistentHypotheses { label: h.label.clone(), reason })?;
    }

    // strong irreducibility
    let mut irreducibility = Vec::new();
    for (index, h) in family.iter().enumerate() {
        match &h.strong_irreducibility {
            IrreducibilityEvidence::BullockDavis { n } => {
                let si = strong_irreducibility(*n)
                    .map_err(|e| CertifyFailure::StrongIrreducibility { label: h.label.clone(), reason: e.to_string() })?;
                if !si.criterion_holds {
                    return Err(CertifyFailure::StrongIrreducibility { label: h.label.clone(), reason: si.reasons.join("; ") });
                }
            }
            IrreducibilityEvidence::Direct { .. } => {}
            IrreducibilityEvidence::Absent { reason } => {
                return Err(CertifyFailure::StrongIrreducibility { label: h.label.clone(), reason: reason.clone() })
            }
        }
        for c in 1..=c_max {
            let d = inflated(h, c)?;
            if !is_irreducible(&d)? {
                return Err(CertifyFailure::NotIrreducible { label: h.label.clone(), c, inflated: d });
            }
            irreducibility.push(IrreducibilityRecord { index, c, inflated: d.to_string(), irreducible: true });
        }
    }

    // pairwise strong coprimality
    let mut coprimality = Vec::new();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            for c in 1..=c_max {
                let a = inflated(&family[i], c)?;
                for d in 1..=c_max {
                    let g = gcd(&a, &inflated(&family[j], d)?)?;
                    if !g.is_one() {
                        return Err(CertifyFailure::NotCoprime {
                            first: family[i].label.clone(),
                            second: family[j].label.clone(),
                            c,
                            d,
                            gcd: g,
                        });
                    }
                    coprimality.push(CoprimalityRecord { i, j, c, d, gcd: g.to_string() });
                }
            }
        }
    }

    // localization cases
    let mut localization = Vec::new();
    for (j, target) in family.iter().enumerate() {
        for c in 1..=c_max {
            let p = inflated(target, c)?;
            for (i, h) in family.iter().enumerate() {
                let case = localization_case(&h.delta, c, &p)?;
                let expected = if i == j { LocalizationCase::CaseBRho1 } else { LocalizationCase::CaseARho0 };
                if case != expected {
                    let g = gcd(&inflated(h, c)?, &p)?;
                    return Err(CertifyFailure::Localization { target: target.label.clone(), member: h.label.clone(), c, gcd: g });
                }
                let g = gcd(&inflated(h, c)?, &p)?;
                localization.push(LocalizationRecord { j, c, p: p.to_string(), i, case, gcd: g.to_string() });
            }
        }
    }

    // anisotropy
    let mut anisotropy = Vec::new();
    for (j, target) in family.iter().enumerate() {
        for c in 1..=c_max {
            let p = inflated(target, c)?;
            for (i, h) in family.iter().enumerate() {
                let mut cert = anisotropy_certificate(&h.delta, c, &p, None)?;
                if !cert.is_certified() {
                    if let Some(v) = h.seifert.as_ref().filter(|v| v.size() <= 2) {
                        let module = pairing_from_seifert(v, h.cable * c)?;
                        cert = anisotropy_certificate(&h.delta, c, &p, Some(&module))?;
                    }
                }
                let method = match (&cert.verdict, cert.method) {
                    (AnisotropyVerdict::Certified, Some(m)) => m,
                    (verdict, _) => {
                        return Err(CertifyFailure::NotAnisotropic { label: h.label.clone(), c, p, detail: format!("{verdict:?}") })
                    }
                };
                anisotropy.push(AnisotropyRecord { j, c, i, method, verdict: cert.verdict });
            }
        }
    }

    // rho assertions
    let mut rho = Vec::new();
    for (index, h) in family.iter().enumerate() {
        if !h.rho_one.is_asserted_nonzero() {
            return Err(CertifyFailure::RhoOneUnasserted { label: h.label.clone() });
        }
        if let FiniteOrderEvidence::Unestablished { reason } = &h.finite_order {
            return Err(CertifyFailure::FiniteOrderUnestablished { label: h.label.clone(), reason: reason.clone() });
        }
        let method = match &h.seifert {
            Some(v) => {
                let r = rho_zero(v);
                if !r.is_exactly_zero() {
                    return Err(CertifyFailure::RhoZeroNonzero { label: h.label.clone(), value: r.to_string() });
                }
                RhoZeroMethod::ComputedFromSeifert
            }
            None => RhoZeroMethod::ImpliedByFiniteOrder,
        };
        rho.push(RhoRecord { index, rho_one_nonzero: true, rho_zero: "0".into(), rho_zero_method: method });
    }

    let (citations, cited) = citations_and_scope(family);
    Ok(IndependenceCertificate {
        schema: SCHEMA_VERSION.into(),
        c_max,
        family: family.to_vec(),
        hypotheses_sha256: hypotheses_digest(family),
        irreducibility,
        coprimality,
        localization,
        anisotropy,
        rho,
        citations,
        scope: Scope { verified_max_complexity: c_max, all_complexities_cited: cited },
        conclusion: conclusion_text(family.len(), c_max, cited),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::cable_transfer;
    use crate::twist::Rho1Table;

    fn family(ns: &[i64], table: &Rho1Table) -> Vec<KnotHypotheses> {
        ns.iter().map(|&n| KnotHypotheses::twist(n, table).unwrap()).collect()
    }

    #[test]
    fn davis_family_certifies() {
        let table = Rho1Table::shipped();
        let cert = certify_independence(&family(&[34, 310, 874], &table), 3).unwrap();
        assert_eq!(cert.irreducibility.len(), 9);
        assert_eq!(cert.coprimality.len(), 27);
        assert_eq!(cert.localization.len(), 27);
        assert_eq!(cert.anisotropy.len(), 27);
        assert!(cert.scope.all_complexities_cited);
        assert_eq!(cert.citations.len(), 6);
        assert_eq!(cert.to_canonical_json(), cert.clone().to_canonical_json());
    }

    #[test]
    fn failures_name_the_first_unmet_hypothesis() {
        let table = Rho1Table::shipped();
        let err = certify_independence(&family(&[34, 4], &table), 3).unwrap_err();
        assert!(err.to_string().starts_with("strong irreducibility: 4 is a perfect power"), "{err}");
        let err = certify_independence(&family(&[34], &table.without(34)), 3).unwrap_err();
        assert_eq!(err, CertifyFailure::RhoOneUnasserted { label: "K_34".into() });
        let err = certify_independence(&family(&[34, 34], &table), 1).unwrap_err();
        assert_eq!(err, CertifyFailure::DuplicateLabel("K_34".into()));
        assert_eq!(certify_independence(&[], 1).unwrap_err(), CertifyFailure::EmptyFamily);
    }

    #[test]
    fn cables_certify_at_complexity_one() {
        let table = Rho1Table::shipped();
        let base = family(&[34, 310, 874], &table);
        let cables: Vec<KnotHypotheses> =
            base.iter().flat_map(|h| (1..=3).map(move |c| cable_transfer(h, c).unwrap())).collect();
        let cert = certify_independence(&cables, 1).unwrap();
        assert_eq!(cert.family.len(), 9);
        assert!(!cert.scope.all_complexities_cited);
        // Δ(t²) of one cable meets Δ(t) of the (2,1)-cable at complexity 2
        assert!(matches!(certify_independence(&cables, 2), Err(CertifyFailure::NotCoprime { .. })));
    }
}
