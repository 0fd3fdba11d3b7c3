use std::collections::BTreeSet;

use serde_json::Value;

use super::certificate::{
    citations_and_scope, conclusion_text, hypotheses_digest, AnisotropyRecord, CoprimalityRecord, IndependenceCertificate,
    IrreducibilityRecord, LocalizationRecord, RhoRecord, RhoZeroMethod, Scope, SCHEMA_VERSION,
};
use super::hypotheses::{FiniteOrderEvidence, IrreducibilityEvidence, KnotHypotheses};
use super::{AnisotropyMethod, AnisotropyVerdict, LocalizationCase};
use crate::blanchfield::{find_isotropic, localize, pairing_from_seifert};
use crate::error::{Error, Result};
use crate::laurent::{factor, gcd, is_irreducible, squarefree_decomposition, LaurentPoly};
use crate::seifert::signature_profile;

/// Checks a serialized certificate by recomputing every record.
///
/// `Ok(false)` means the document parses but some entry is wrong; malformed
/// documents are an error.
pub fn verify_certificate(json: &str) -> Result<bool> {
    let raw: Value = serde_json::from_str(json).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    if raw.get("schema").and_then(Value::as_str) != Some(SCHEMA_VERSION) {
        return Err(Error::MalformedCertificate(format!("schema must be \"{SCHEMA_VERSION}\"")));
    }
    let cert: IndependenceCertificate =
        serde_json::from_value(raw.clone()).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    if cert.family.is_empty() {
        return Err(Error::MalformedCertificate("empty family".into()));
    }
    if cert.c_max == 0 {
        return Err(Error::MalformedCertificate("c_max must be positive".into()));
    }
    // non-canonical spellings (e.g. unnormalized polynomials) are rejected
    if serde_json::to_value(&cert).ok().as_ref() != Some(&raw) {
        return Ok(false);
    }
    check(&cert)
}

fn check(cert: &IndependenceCertificate) -> Result<bool> {
    let family = &cert.family;
    let c_max = cert.c_max;
    if cert.hypotheses_sha256 != hypotheses_digest(family) {
        return Ok(false);
    }
    let labels: BTreeSet<&str> = family.iter().map(|h| h.label.as_str()).collect();
    if labels.len() != family.len() || family.iter().any(|h| h.check_consistency().is_err()) {
        return Ok(false);
    }
    let inflated: Vec<Vec<LaurentPoly>> = family
        .iter()
        .map(|h| (1..=c_max).map(|c| h.delta.inflate(c).map(|d| d.normalize())).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let at = |i: usize, c: u32| &inflated[i][c as usize - 1];

    let mut irreducibility = Vec::new();
    for (index, h) in family.iter().enumerate() {
        let evidence_ok = match &h.strong_irreducibility {
            IrreducibilityEvidence::BullockDavis { n } => twist_criterion(*n),
            IrreducibilityEvidence::Direct { .. } => true,
            IrreducibilityEvidence::Absent { .. } => false,
        };
        if !evidence_ok {
            return Ok(false);
        }
        for c in 1..=c_max {
            let d = at(index, c);
            if !is_irreducible(d)? {
                return Ok(false);
            }
            irreducibility.push(IrreducibilityRecord { index, c, inflated: d.to_string(), irreducible: true });
        }
    }
    if irreducibility != cert.irreducibility {
        return Ok(false);
    }

    let mut coprimality = Vec::new();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            for c in 1..=c_max {
                for d in 1..=c_max {
                    let g = gcd(at(i, c), at(j, d))?;
                    if !g.is_one() {
                        return Ok(false);
                    }
                    coprimality.push(CoprimalityRecord { i, j, c, d, gcd: g.to_string() });
                }
            }
        }
    }
    if coprimality != cert.coprimality {
        return Ok(false);
    }

    let mut localization = Vec::new();
    let mut anisotropy = Vec::new();
    for j in 0..family.len() {
        for c in 1..=c_max {
            let p = at(j, c);
            for (i, h) in family.iter().enumerate() {
                let d = at(i, c);
                let g = gcd(d, p)?;
                let case = if i == j && d == p {
                    LocalizationCase::CaseBRho1
                } else if i != j && g.is_one() {
                    LocalizationCase::CaseARho0
                } else {
                    return Ok(false);
                };
                localization.push(LocalizationRecord { j, c, p: p.to_string(), i, case, gcd: g.to_string() });
                let Some(method) = anisotropy_method(h, c, d, p)? else {
                    return Ok(false);
                };
                anisotropy.push(AnisotropyRecord { j, c, i, method, verdict: AnisotropyVerdict::Certified });
            }
        }
    }
    anisotropy.sort_by_key(|r| (r.j, r.c, r.i));
    if localization != cert.localization || anisotropy != cert.anisotropy {
        return Ok(false);
    }

    let mut rho = Vec::new();
    for (index, h) in family.iter().enumerate() {
        if !h.rho_one.is_asserted_nonzero() || matches!(h.finite_order, FiniteOrderEvidence::Unestablished { .. }) {
            return Ok(false);
        }
        let rho_zero_method = match &h.seifert {
            Some(v) => {
                let profile = signature_profile(v);
                if !profile.jumps.is_empty() || profile.sigma_at_minus_one != 0 {
                    return Ok(false);
                }
                RhoZeroMethod::ComputedFromSeifert
            }
            None => RhoZeroMethod::ImpliedByFiniteOrder,
        };
        rho.push(RhoRecord { index, rho_one_nonzero: true, rho_zero: "0".into(), rho_zero_method });
    }
    if rho != cert.rho {
        return Ok(false);
    }

    let (citations, cited) = citations_and_scope(family);
    Ok(citations == cert.citations
        && cert.scope == Scope { verified_max_complexity: c_max, all_complexities_cited: cited }
        && cert.conclusion == conclusion_text(family.len(), c_max, cited))
}

/// `n ≥ 2`, not `m(m − 1)`, not `m^k` with `k ≥ 2`.
fn twist_criterion(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u128;
    let mut m: u128 = 2;
    while m * m <= n {
        if m * (m - 1) == n {
            return false;
        }
        let mut q = m * m;
        while q < n {
            q *= m;
        }
        if q == n {
            return false;
        }
        m += 1;
    }
    // m(m − 1) with m² > n still possible at the boundary
    m * (m - 1) != n
}

/// The first route that proves `(c, p)`-anisotropy of member `h`, with
/// `d = Δ_h(t^c)`.
fn anisotropy_method(h: &KnotHypotheses, c: u32, d: &LaurentPoly, p: &LaurentPoly) -> Result<Option<AnisotropyMethod>> {
    if gcd(d, p)?.is_one() {
        return Ok(Some(AnisotropyMethod::Coprime));
    }
    let pf = factor(p)?;
    let symmetric = pf.factors.iter().map(|(f, _)| f.is_symmetric()).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
    if symmetric {
        if squarefree_decomposition(d)?.is_squarefree() {
            return Ok(Some(AnisotropyMethod::Squarefree));
        }
        let mut once = true;
        for (f, _) in &pf.factors {
            once &= d.multiplicity_of(f)? <= 1;
        }
        if once {
            return Ok(Some(AnisotropyMethod::SymmetricMultiplicity));
        }
    }
    let Some(v) = h.seifert.as_ref().filter(|v| v.size() <= 2) else {
        return Ok(None);
    };
    let module = pairing_from_seifert(v, h.cable * c)?;
    if module.order() != d {
        return Ok(None);
    }
    let empty = find_isotropic(&localize(&module, p)?)?.is_empty();
    Ok(empty.then_some(AnisotropyMethod::ExhaustiveSearch))
}
