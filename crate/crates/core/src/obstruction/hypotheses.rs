use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::seifert::{alexander_poly, SeifertMatrix};
use crate::twist::{self, Rho1Table};

/// Why the knot (or, for a cable, its companion) has finite order in `AC_ℚ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum FiniteOrderEvidence {
    /// `K_n` with `n = a² − a + b²`, `a, b > 0`, and `n ≠ m(m − 1)`.
    OrderTwoTwist { n: i64, a: u64, b: u64 },
    AssertedExternal { citation: String },
    Unestablished { reason: String },
}

/// Why the companion's Alexander polynomial is strongly irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum IrreducibilityEvidence {
    /// The twist-knot criterion for `Δ_n`, valid for every complexity.
    BullockDavis { n: i64 },
    /// `Δ(t^c)` was factored for every `c ≤ c_max`.
    Direct { c_max: u32 },
    Absent { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RhoOneAssertion {
    pub nonzero: bool,
    /// `None` when nothing is asserted.
    pub source: Option<String>,
}

impl RhoOneAssertion {
    pub fn is_asserted_nonzero(&self) -> bool {
        self.nonzero && self.source.as_deref().is_some_and(|s| !s.trim().is_empty())
    }
}

/// Hypotheses about one family member.
///
/// A member is the `(cable, 1)`-cable of a companion knot (`cable = 1` is the
/// companion itself). `delta` is the member's own Alexander polynomial; the
/// evidence fields and `seifert` describe the companion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotHypotheses {
    pub label: String,
    pub delta: LaurentPoly,
    pub cable: u32,
    pub seifert: Option<SeifertMatrix>,
    pub finite_order: FiniteOrderEvidence,
    pub strong_irreducibility: IrreducibilityEvidence,
    pub rho_one: RhoOneAssertion,
}

impl KnotHypotheses {
    /// Hypotheses for `K_n` read off the twist-knot criteria and the table.
    pub fn twist(n: i64, table: &Rho1Table) -> Result<Self> {
        let v = twist::seifert_matrix(n)?;
        let cls = twist::classify_ac(n)?;
        let finite_order = match cls.order_two_witness {
            Some((a, b)) => FiniteOrderEvidence::OrderTwoTwist { n, a, b },
            None if cls.algebraically_slice => FiniteOrderEvidence::AssertedExternal {
                citation: format!("{n} = m(m-1): K_{n} is algebraically slice"),
            },
            None => FiniteOrderEvidence::Unestablished { reason: format!("{n} is not of the form a^2 - a + b^2") },
        };
        let status = table.status(n);
        Ok(Self {
            label: format!("K_{n}"),
            delta: twist::alexander(n)?,
            cable: 1,
            seifert: Some(v),
            finite_order,
            strong_irreducibility: IrreducibilityEvidence::BullockDavis { n },
            rho_one: RhoOneAssertion { nonzero: status.nonzero, source: status.source },
        })
    }

    /// Hypotheses for a knot given by a Seifert matrix; strong irreducibility
    /// is established directly up to `c_max`.
    pub fn seifert(
        label: &str,
        v: SeifertMatrix,
        c_max: u32,
        finite_order_citation: Option<String>,
        rho_one_source: Option<String>,
    ) -> Result<Self> {
        if c_max == 0 {
            return Err(Error::InvalidComplexity);
        }
        let finite_order = match finite_order_citation {
            Some(citation) => FiniteOrderEvidence::AssertedExternal { citation },
            None => FiniteOrderEvidence::Unestablished { reason: "no finite-order citation supplied".into() },
        };
        Ok(Self {
            label: label.to_string(),
            delta: alexander_poly(&v),
            cable: 1,
            seifert: Some(v),
            finite_order,
            strong_irreducibility: IrreducibilityEvidence::Direct { c_max },
            rho_one: RhoOneAssertion { nonzero: rho_one_source.is_some(), source: rho_one_source },
        })
    }

    /// Internal consistency of the record; `Err` carries the reason.
    pub fn check_consistency(&self) -> std::result::Result<(), String> {
        if self.label.trim().is_empty() {
            return Err("empty label".into());
        }
        if self.cable == 0 {
            return Err("cable parameter must be positive".into());
        }
        if self.delta != self.delta.normalize() {
            return Err(format!("delta {} is not normalized", self.delta));
        }
        if self.delta.is_symmetric() != Ok(true) {
            return Err(format!("delta {} is not symmetric", self.delta));
        }
        let at_one = self.delta.eval(&crate::laurent::rational(1));
        if !at_one.is_some_and(|v| v.abs() == crate::laurent::rational(1)) {
            return Err(format!("|delta(1)| != 1 for {}", self.delta));
        }
        let inflated = |p: &LaurentPoly| p.inflate(self.cable).map(|q| q.normalize()).map_err(|e| e.to_string());
        if let Some(v) = &self.seifert {
            if inflated(&alexander_poly(v))? != self.delta {
                return Err("delta does not match the Seifert matrix".into());
            }
        }
        match &self.finite_order {
            FiniteOrderEvidence::OrderTwoTwist { n, a, b } => {
                let nu = u64::try_from(*n).map_err(|_| format!("negative twist parameter {n}"))?;
                if *a == 0 || *b == 0 || u128::from(*a) * u128::from(*a) - u128::from(*a) + u128::from(*b) * u128::from(*b) != u128::from(nu) {
                    return Err(format!("order-two witness ({a}, {b}) does not give n = {n}"));
                }
                if twist::classify_ac(*n).map_err(|e| e.to_string())?.algebraically_slice {
                    return Err(format!("K_{n} is algebraically slice"));
                }
                if inflated(&twist::alexander(*n).map_err(|e| e.to_string())?)? != self.delta {
                    return Err(format!("delta does not match Delta_{n}"));
                }
            }
            FiniteOrderEvidence::AssertedExternal { citation } if citation.trim().is_empty() => {
                return Err("empty finite-order citation".into());
            }
            _ => {}
        }
        if let IrreducibilityEvidence::BullockDavis { n } = &self.strong_irreducibility {
            let d = twist::alexander(*n).map_err(|e| e.to_string())?;
            if inflated(&d)? != self.delta {
                return Err(format!("delta does not match Delta_{n}"));
            }
        }
        Ok(())
    }
}

/// Hypotheses for the `(c, 1)`-cable: `Δ ↦ Δ(t^c)`, evidence carried over
/// from the companion with the complexity recorded in `cable`.
pub fn cable_transfer(hyp: &KnotHypotheses, c: u32) -> Result<KnotHypotheses> {
    if c == 0 {
        return Err(Error::InvalidComplexity);
    }
    if c == 1 {
        return Ok(hyp.clone());
    }
    let cable = hyp.cable.checked_mul(c).ok_or(Error::ExponentOverflow)?;
    let strong_irreducibility = match &hyp.strong_irreducibility {
        IrreducibilityEvidence::Direct { c_max } if c_max / c == 0 => IrreducibilityEvidence::Absent {
            reason: format!("direct check up to {c_max} does not cover complexity {c}"),
        },
        IrreducibilityEvidence::Direct { c_max } => IrreducibilityEvidence::Direct { c_max: c_max / c },
        other => other.clone(),
    };
    let rho_one = RhoOneAssertion {
        nonzero: hyp.rho_one.nonzero,
        source: hyp.rho_one.source.as_ref().map(|s| format!("({c},1)-cable of {}: localized rho1 at complexity 1 equals that of the companion at complexity {c}; {s}", hyp.label)),
    };
    Ok(KnotHypotheses {
        label: format!("{}_({c},1)", hyp.label),
        delta: hyp.delta.inflate(c)?.normalize(),
        cable,
        seifert: hyp.seifert.clone(),
        finite_order: hyp.finite_order.clone(),
        strong_irreducibility,
        rho_one,
    })
}
