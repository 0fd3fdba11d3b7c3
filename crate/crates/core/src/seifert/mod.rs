//! Invariants read off a Seifert matrix `V`: the Alexander polynomial
//! `det(tV − Vᵀ)`, the signature of `V + Vᵀ`, the Levine–Tristram signature
//! function and its normalized integral ρ⁽⁰⁾.
//!
//! Points `ω` of the unit circle are parameterized by the real number
//! `z = ω + ω̄ ∈ [−2, 2]`; `z = 2` is `ω = 1` and `z = −2` is `ω = −1`.

mod profile;
mod roots;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Rational};
use crate::linalg;

pub use profile::{levine_tristram, rho_zero, signature_profile, Jump, RhoTerm, RhoZero, SignatureProfile};
pub use roots::{isolate_roots, AlgebraicReal};

/// A square integer matrix of even size `2g` with `det(V − Vᵀ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    rows: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeifertJson {
    size: usize,
    rows: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n % 2 != 0 {
            return Err(Error::InvalidSeifert(format!("size {n} is odd")));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidSeifert(format!("row {bad} has length {}, expected {n}", rows[bad].len())));
        }
        let m = Self { rows };
        let k: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(m.rows[i][j]) - BigInt::from(m.rows[j][i])).collect())
            .collect();
        let d = linalg::int_det(&k);
        if d != BigInt::from(1) {
            return Err(Error::InvalidSeifert(format!("det(V - V^T) = {d}, expected 1")));
        }
        Ok(m)
    }

    pub fn unknot() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: SeifertJson = serde_json::from_str(s).map_err(|e| Error::Parse(format!("Seifert matrix JSON: {e}")))?;
        if raw.size != raw.rows.len() {
            return Err(Error::InvalidSeifert(format!(
                "declared size {} but {} rows given",
                raw.size,
                raw.rows.len()
            )));
        }
        Self::new(raw.rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SeifertJson { size: self.size(), rows: self.rows.clone() }).expect("plain data serializes")
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn genus(&self) -> usize {
        self.rows.len() / 2
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    /// `tV − Vᵀ` over ℚ[t^{±1}].
    pub fn presentation(&self) -> Vec<Vec<LaurentPoly>> {
        let n = self.size();
        let t = LaurentPoly::t();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = t.scale(&int(self.rows[i][j]));
                        let b = LaurentPoly::constant(int(self.rows[j][i]));
                        &a - &b
                    })
                    .collect()
            })
            .collect()
    }

    /// `V + Vᵀ` and `V − Vᵀ` as rational matrices.
    pub(crate) fn sym_antisym(&self) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
        let n = self.size();
        let s = (0..n).map(|i| (0..n).map(|j| int(self.rows[i][j]) + int(self.rows[j][i])).collect()).collect();
        let k = (0..n).map(|i| (0..n).map(|j| int(self.rows[i][j]) - int(self.rows[j][i])).collect()).collect();
        (s, k)
    }
}

impl Serialize for SeifertMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeifertJson { size: self.size(), rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SeifertMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SeifertJson::deserialize(d)?;
        if raw.size != raw.rows.len() {
            return Err(serde::de::Error::custom("declared size does not match row count"));
        }
        SeifertMatrix::new(raw.rows).map_err(serde::de::Error::custom)
    }
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// `normalize(det(tV − Vᵀ))`.
pub fn alexander_poly(v: &SeifertMatrix) -> LaurentPoly {
    linalg::poly_det(&v.presentation()).normalize()
}

/// Signature of `V + Vᵀ`.
pub fn signature(v: &SeifertMatrix) -> i64 {
    linalg::signature(&v.sym_antisym().0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SeifertMatrix {
        SeifertMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn alexander_polynomials_of_small_knots() {
        assert_eq!(alexander_poly(&SeifertMatrix::unknot()), LaurentPoly::one());
        assert_eq!(alexander_poly(&m(&[&[-1, 1], &[0, 1]])).to_string(), "1*t^2 + -3*t^1 + 1*t^0");
        assert_eq!(alexander_poly(&m(&[&[-1, 1], &[0, 4]])).to_string(), "4*t^2 + -9*t^1 + 4*t^0");
        assert_eq!(alexander_poly(&m(&[&[-1, 1], &[0, -1]])).to_string(), "1*t^2 + -1*t^1 + 1*t^0");
    }

    #[test]
    fn ordinary_signatures() {
        assert_eq!(signature(&SeifertMatrix::unknot()), 0);
        assert_eq!(signature(&m(&[&[-1, 1], &[0, 1]])), 0);
        assert_eq!(signature(&m(&[&[-1, 1], &[0, -1]])), -2);
    }

    #[test]
    fn construction_validates_shape_and_pairing() {
        assert!(matches!(SeifertMatrix::new(vec![vec![1]]), Err(Error::InvalidSeifert(_))));
        assert!(matches!(SeifertMatrix::new(vec![vec![1, 0], vec![0]]), Err(Error::InvalidSeifert(_))));
        assert!(SeifertMatrix::new(vec![vec![-1, 0], vec![1, 1]]).is_ok());
        assert!(matches!(SeifertMatrix::new(vec![vec![1, 2], vec![0, 1]]), Err(Error::InvalidSeifert(_))));
        assert!(matches!(SeifertMatrix::new(vec![vec![0, 0], vec![0, 0]]), Err(Error::InvalidSeifert(_))));
    }

    #[test]
    fn json_round_trip() {
        let v = SeifertMatrix::from_json(r#"{"size": 2, "rows": [[-1, 1], [0, 4]]}"#).unwrap();
        assert_eq!(SeifertMatrix::from_json(&v.to_json()).unwrap(), v);
        assert!(matches!(SeifertMatrix::from_json(r#"{"size": 4, "rows": [[-1, 1], [0, 4]]}"#), Err(Error::InvalidSeifert(_))));
        assert!(matches!(SeifertMatrix::from_json(r#"{"size": 2}"#), Err(Error::Parse(_))));
        assert!(matches!(SeifertMatrix::from_json("[1,2]"), Err(Error::Parse(_))));
        assert_eq!(SeifertMatrix::from_json(r#"{"size": 0, "rows": []}"#).unwrap(), SeifertMatrix::unknot());
    }
}
