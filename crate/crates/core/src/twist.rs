//! The twist knots `K_n` (positive clasp, `n ≥ 0` twists).

use std::collections::BTreeMap;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{rational, LaurentPoly};
use crate::seifert::SeifertMatrix;

const DEFAULT_RHO1_TABLE: &str = include_str!("../data/rho1_table.json");

fn check_n(n: i64) -> Result<u64> {
    u64::try_from(n).map_err(|_| Error::NegativeTwist(n))
}

/// `[[−1, 1], [0, n]]`, or the empty matrix for `n = 0`.
pub fn seifert_matrix(n: i64) -> Result<SeifertMatrix> {
    check_n(n)?;
    if n == 0 {
        return Ok(SeifertMatrix::unknot());
    }
    SeifertMatrix::new(vec![vec![-1, 1], vec![0, n]])
}

/// `Δ_n = normalize(n t² − (2n+1) t + n)`.
pub fn alexander(n: i64) -> Result<LaurentPoly> {
    check_n(n)?;
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let n = i128::from(n);
    Ok(LaurentPoly::from_coeffs(0, [n, -(2 * n + 1), n]).normalize())
}

/// Recognizes `p ≐ Δ_n` for some `n ≥ 1`.
pub fn detect_twist(p: &LaurentPoly) -> Option<i64> {
    let p = p.normalize();
    if p.degree_span() != Some(2) {
        return None;
    }
    let a = p.coeff(2);
    if !a.is_integer() || p.coeff(0) != a || p.coeff(1) != -(&a * rational(2) + rational(1)) {
        return None;
    }
    i64::try_from(a.to_integer()).ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcClassification {
    pub n: i64,
    pub algebraically_slice: bool,
    pub order_two: bool,
    pub order_two_witness: Option<(u64, u64)>,
    /// `n = m²`: of order one over ℚ.
    pub square: bool,
    pub perfect_power: bool,
}

fn slice_root(n: u64) -> Option<u64> {
    // n = m(m − 1)  ⇔  4n + 1 = (2m − 1)²
    let d = 4 * u128::from(n) + 1;
    let r = d.sqrt();
    (r * r == d).then(|| ((r + 1) / 2) as u64)
}

fn exact_sqrt(x: u64) -> Option<u64> {
    let r = x.sqrt();
    (r * r == x).then_some(r)
}

/// `(m, k)` with `n = m^k`, `k ≥ 2` maximal.
pub fn perfect_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return Some((n, 2));
    }
    let mut best = None;
    for k in 2..64u32 {
        let m = n.nth_root(k);
        if m < 2 {
            break;
        }
        if m.checked_pow(k) == Some(n) {
            best = Some((m, k));
        }
    }
    best
}

/// Algebraic-concordance status of `K_n`: slice when `n = m(m−1)`, order two
/// when `n = a² − a + b²` with `a, b > 0` and not slice.
pub fn classify_ac(n: i64) -> Result<AcClassification> {
    let nu = check_n(n)?;
    let algebraically_slice = slice_root(nu).is_some();
    let mut witness = None;
    if !algebraically_slice {
        let bound = nu.sqrt() + 2;
        for a in 1..=bound {
            let base = a * a - a;
            if base >= nu {
                break;
            }
            if let Some(b) = exact_sqrt(nu - base) {
                witness = Some((a, b));
                break;
            }
        }
    }
    Ok(AcClassification {
        n,
        algebraically_slice,
        order_two: witness.is_some(),
        order_two_witness: witness,
        square: exact_sqrt(nu).is_some(),
        perfect_power: perfect_power(nu).is_some(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongIrreducibility {
    pub n: i64,
    pub criterion_holds: bool,
    pub reasons: Vec<String>,
}

/// Whether `n` avoids both `m(m−1)` and `m^k` (`k > 1`), which makes `Δ_n`
/// strongly irreducible.
pub fn strong_irreducibility(n: i64) -> Result<StrongIrreducibility> {
    if n < 2 {
        return Err(Error::TwistTooSmall { n, min: 2 });
    }
    let nu = n as u64;
    let mut reasons = Vec::new();
    if let Some(m) = slice_root(nu) {
        reasons.push(format!("{n} = {m}*{} is of the form m(m-1)", m - 1));
    }
    if let Some((m, k)) = perfect_power(nu) {
        reasons.push(format!("{n} is a perfect power ({m}^{k})"));
    }
    Ok(StrongIrreducibility { n, criterion_holds: reasons.is_empty(), reasons })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DavisChecks {
    pub n_mod_3_is_one: bool,
    pub two_adic_valuation_is_one: bool,
    pub witness: (u64, u64),
    pub witness_valid: bool,
    pub classified_order_two: bool,
    pub strongly_irreducible: bool,
}

impl DavisChecks {
    pub fn all_pass(&self) -> bool {
        self.n_mod_3_is_one
            && self.two_adic_valuation_is_one
            && self.witness_valid
            && self.classified_order_two
            && self.strongly_irreducible
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DavisMember {
    pub k: i64,
    pub n: i64,
    pub checks: DavisChecks,
}

/// `n = 36k² − 6k + 4` for odd `k > 0`.
pub fn davis_family(k: i64) -> Result<DavisMember> {
    if k <= 0 || k % 2 == 0 {
        return Err(Error::InvalidFamilyIndex(k));
    }
    let n = 36i64
        .checked_mul(k)
        .and_then(|x| x.checked_mul(k))
        .and_then(|x| x.checked_sub(6 * k))
        .and_then(|x| x.checked_add(4))
        .ok_or(Error::InvalidFamilyIndex(k))?;
    let a = 6 * k as u64;
    let b = 2u64;
    let nu = n as u64;
    let checks = DavisChecks {
        n_mod_3_is_one: n % 3 == 1,
        two_adic_valuation_is_one: nu.trailing_zeros() == 1,
        witness: (a, b),
        witness_valid: u128::from(a) * u128::from(a) - u128::from(a) + 4 == u128::from(nu),
        classified_order_two: classify_ac(n)?.order_two,
        strongly_irreducible: strong_irreducibility(n)?.criterion_holds,
    };
    Ok(DavisMember { k, n, checks })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoOneStatus {
    pub n: i64,
    pub nonzero: bool,
    /// `None` means the table makes no claim about `n`.
    pub source: Option<String>,
}

impl RhoOneStatus {
    pub fn is_asserted_nonzero(&self) -> bool {
        self.nonzero && self.source.is_some()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableRow {
    n: i64,
    nonzero: bool,
    source: String,
}

/// The external ρ⁽¹⁾ status table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rho1Table {
    rows: BTreeMap<i64, (bool, String)>,
}

impl Rho1Table {
    pub fn shipped() -> Self {
        Self::from_json(DEFAULT_RHO1_TABLE).expect("shipped table is valid")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: Vec<TableRow> = serde_json::from_str(s).map_err(|e| Error::InvalidTable(e.to_string()))?;
        let mut rows = BTreeMap::new();
        for r in raw {
            if r.source.trim().is_empty() {
                return Err(Error::InvalidTable(format!("entry n = {} has no source", r.n)));
            }
            if rows.insert(r.n, (r.nonzero, r.source)).is_some() {
                return Err(Error::InvalidTable(format!("duplicate entry n = {}", r.n)));
            }
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self { rows: BTreeMap::new() }
    }

    pub fn status(&self, n: i64) -> RhoOneStatus {
        match self.rows.get(&n) {
            Some((nonzero, source)) => RhoOneStatus { n, nonzero: *nonzero, source: Some(source.clone()) },
            None => RhoOneStatus { n, nonzero: false, source: None },
        }
    }

    pub fn without(&self, n: i64) -> Self {
        let mut rows = self.rows.clone();
        rows.remove(&n);
        Self { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Looks `n` up in the shipped table.
pub fn rho_one_status(n: i64) -> RhoOneStatus {
    Rho1Table::shipped().status(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::alexander_poly;

    #[test]
    fn matrices_and_polynomials() {
        assert_eq!(seifert_matrix(1).unwrap().rows(), &[vec![-1, 1], vec![0, 1]]);
        assert_eq!(seifert_matrix(0).unwrap(), SeifertMatrix::unknot());
        assert_eq!(seifert_matrix(-1), Err(Error::NegativeTwist(-1)));
        assert_eq!(alexander(1).unwrap().to_string(), "1*t^2 + -3*t^1 + 1*t^0");
        assert_eq!(alexander(6).unwrap().to_string(), "6*t^2 + -13*t^1 + 6*t^0");
        assert!(alexander(0).unwrap().is_one());
        for n in 0..40 {
            assert_eq!(alexander(n).unwrap(), alexander_poly(&seifert_matrix(n).unwrap()));
        }
        assert_eq!(detect_twist(&alexander(34).unwrap().shift(5).scale(&rational(-3))), Some(34));
        assert_eq!(detect_twist(&"1*t^2 + -1*t^1 + 1*t^0".parse().unwrap()), None);
    }

    #[test]
    fn classification_examples() {
        let c2 = classify_ac(2).unwrap();
        assert!(c2.algebraically_slice && !c2.order_two);
        let c4 = classify_ac(4).unwrap();
        assert_eq!(c4.order_two_witness, Some((1, 2)));
        assert!(c4.square && c4.perfect_power);
        let c34 = classify_ac(34).unwrap();
        assert_eq!(c34.order_two_witness, Some((6, 2)));
        assert!(!c34.square && !c34.perfect_power);
        assert!(classify_ac(0).unwrap().algebraically_slice);
    }

    #[test]
    fn strong_irreducibility_examples() {
        assert!(strong_irreducibility(34).unwrap().criterion_holds);
        let four = strong_irreducibility(4).unwrap();
        assert_eq!(four.reasons, vec!["4 is a perfect power (2^2)".to_string()]);
        let six = strong_irreducibility(6).unwrap();
        assert!(!six.criterion_holds);
        assert!(six.reasons[0].contains("m(m-1)"));
        assert_eq!(strong_irreducibility(1), Err(Error::TwistTooSmall { n: 1, min: 2 }));
        assert_eq!(perfect_power(64), Some((2, 6)));
    }

    #[test]
    fn davis_family_examples() {
        let k1 = davis_family(1).unwrap();
        assert_eq!((k1.n, k1.checks.witness), (34, (6, 2)));
        assert!(k1.checks.all_pass());
        assert_eq!(davis_family(3).unwrap().n, 310);
        assert_eq!(davis_family(5).unwrap().n, 874);
        assert_eq!(davis_family(2), Err(Error::InvalidFamilyIndex(2)));
        assert_eq!(davis_family(-1), Err(Error::InvalidFamilyIndex(-1)));
    }

    #[test]
    fn rho_table_lookups() {
        assert!(rho_one_status(34).is_asserted_nonzero());
        assert!(rho_one_status(34).source.unwrap().contains("Dav12a"));
        assert_eq!(rho_one_status(1).source, None);
        assert!(!rho_one_status(1_000_007).is_asserted_nonzero());
        assert!(matches!(
            Rho1Table::from_json(r#"[{"n":1,"nonzero":true,"source":"x"},{"n":1,"nonzero":true,"source":"y"}]"#),
            Err(Error::InvalidTable(_))
        ));
        assert!(matches!(Rho1Table::from_json("{"), Err(Error::InvalidTable(_))));
        assert!(!Rho1Table::shipped().without(34).status(34).is_asserted_nonzero());
    }
}
