//! Family files for `certify`.
//!
//! ```json
//! {"members": [{"twist": 34}, {"twist": 310, "cable": 2},
//!              {"seifert": "k.json", "label": "K", "finite_order_citation": "...", "rho1_source": "..."}]}
//! ```
//!
//! Seifert paths are resolved relative to the family file.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use knotconc::obstruction::{cable_transfer, KnotHypotheses};
use knotconc::seifert::SeifertMatrix;
use knotconc::twist::Rho1Table;
use knotconc::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub members: Vec<MemberSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberSpec {
    pub twist: Option<i64>,
    pub seifert: Option<PathBuf>,
    pub label: Option<String>,
    pub cable: Option<u32>,
    pub finite_order_citation: Option<String>,
    pub rho1_source: Option<String>,
}

impl FamilySpec {
    pub fn from_json(s: &str) -> Result<Self> {
        let spec: Self = serde_json::from_str(s).map_err(|e| Error::Parse(format!("family file: {e}")))?;
        for (i, m) in spec.members.iter().enumerate() {
            match (&m.twist, &m.seifert) {
                (Some(_), None) => {
                    if m.finite_order_citation.is_some() || m.rho1_source.is_some() {
                        return Err(Error::Parse(format!("member {i}: twist members take their evidence from the built-in criteria and the table")));
                    }
                }
                (None, Some(_)) => {}
                _ => return Err(Error::Parse(format!("member {i}: exactly one of \"twist\" and \"seifert\" is required"))),
            }
            if m.cable == Some(0) {
                return Err(Error::Parse(format!("member {i}: cable must be positive")));
            }
        }
        Ok(spec)
    }

    /// Builds the hypothesis records. `read_seifert` loads a Seifert file
    /// given its resolved path.
    pub fn resolve<F>(&self, base: &Path, table: &Rho1Table, c_max: u32, mut read_seifert: F) -> Result<Vec<KnotHypotheses>>
    where
        F: FnMut(&Path) -> Result<SeifertMatrix>,
    {
        let mut out = Vec::with_capacity(self.members.len());
        for m in &self.members {
            let cable = m.cable.unwrap_or(1);
            let mut h = match (&m.twist, &m.seifert) {
                (Some(n), _) => KnotHypotheses::twist(*n, table)?,
                (None, Some(path)) => {
                    let v = read_seifert(&base.join(path))?;
                    let label = m.label.clone().unwrap_or_else(|| path.display().to_string());
                    let bound = c_max.checked_mul(cable).ok_or(Error::ExponentOverflow)?;
                    KnotHypotheses::seifert(&label, v, bound, m.finite_order_citation.clone(), m.rho1_source.clone())?
                }
                (None, None) => unreachable!("checked in from_json"),
            };
            if m.twist.is_some() {
                if let Some(l) = &m.label {
                    h.label = l.clone();
                }
            }
            out.push(cable_transfer(&h, cable)?);
        }
        Ok(out)
    }
}
