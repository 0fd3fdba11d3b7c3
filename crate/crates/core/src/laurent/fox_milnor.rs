use super::{factor, LaurentPoly};
use crate::error::{Error, Result};

/// Decides whether `p ≐ f(t)·f(t⁻¹)` for some `f`, returning a witness.
///
/// Rational scalars are units, so only the factor pattern matters: every
/// self-conjugate irreducible needs even multiplicity and every other
/// irreducible must occur exactly as often as its conjugate. The witness takes
/// half of each self-conjugate power and the canonically smaller member of
/// each conjugate pair.
pub fn fox_milnor_test(p: &LaurentPoly) -> Result<Option<LaurentPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let fl = factor(p)?;
    let mut witness = LaurentPoly::one();
    for (i, (f, m)) in fl.factors.iter().enumerate() {
        let conj = f.conjugate().normalize();
        if conj == *f {
            if m % 2 != 0 {
                return Ok(None);
            }
            witness = &witness * &f.pow(m / 2);
            continue;
        }
        let partner = fl.factors.iter().position(|(g, _)| *g == conj);
        match partner {
            Some(j) if fl.factors[j].1 == *m => {
                if i < j {
                    witness = &witness * &f.pow(*m);
                }
            }
            _ => return Ok(None),
        }
    }
    debug_assert_eq!((&witness * &witness.conjugate()).normalize(), p.normalize());
    Ok(Some(witness.normalize()))
}
