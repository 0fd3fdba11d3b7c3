//! Squarefree decomposition and complete factorization over the rationals.
//!
//! Factorization is Zassenhaus-style: factor modulo a small prime (DDF + EDF),
//! Hensel-lift quadratically past the Mignotte bound, then recombine subsets
//! of the lifted factors by trial division over the integers.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dense::{self, QPoly, ZPoly};
use super::modp::{Field, Pp};
use super::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// `unit · t^shift · ∏ factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList {
    pub unit: Rational,
    pub shift: i64,
    /// Normalized factors with multiplicities, in canonical order.
    pub factors: Vec<(LaurentPoly, u32)>,
}

impl FactorList {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::monomial(self.unit.clone(), self.shift);
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    pub fn multiplicity(&self, f: &LaurentPoly) -> u32 {
        let f = f.normalize();
        self.factors
            .iter()
            .find(|(g, _)| *g == f)
            .map_or(0, |(_, m)| *m)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }

    /// Every normalized divisor, as exponent choices `0..=m` per factor.
    pub fn divisors(&self) -> Vec<LaurentPoly> {
        let mut out = vec![LaurentPoly::one()];
        for (f, m) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (*m as usize + 1));
            for d in &out {
                let mut acc = d.clone();
                next.push(acc.clone());
                for _ in 0..*m {
                    acc = &acc * f;
                    next.push(acc.clone());
                }
            }
            out = next;
        }
        let mut out: Vec<LaurentPoly> = out.into_iter().map(|d| d.normalize()).collect();
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }
}

fn sort_factors(factors: &mut [(LaurentPoly, u32)]) {
    factors.sort_by(|(a, ma), (b, mb)| a.canonical_cmp(b).then(ma.cmp(mb)));
}

fn unit_for(p: &LaurentPoly, shift: i64, factors: &[(LaurentPoly, u32)]) -> Rational {
    let partial = FactorList {
        unit: Rational::one(),
        shift,
        factors: factors.to_vec(),
    }
    .expand();
    p.leading_coeff().unwrap() / partial.leading_coeff().unwrap()
}

/// Yun decomposition `p ≐ ∏ a_i^i` with squarefree, pairwise coprime `a_i`.
pub fn squarefree_decomposition(p: &LaurentPoly) -> Result<FactorList> {
    let (_, shift, prim) = p.integer_primitive().ok_or(Error::ZeroPolynomial)?;
    let mut factors: Vec<(LaurentPoly, u32)> = yun(&dense::z_to_q(&prim))
        .into_iter()
        .map(|(a, i)| (LaurentPoly::from_coeffs(0, a), i))
        .collect();
    sort_factors(&mut factors);
    let unit = unit_for(p, shift, &factors);
    Ok(FactorList { unit, shift, factors })
}

/// Squarefree parts as primitive integer polynomials with their multiplicities.
fn yun(f: &QPoly) -> Vec<(ZPoly, u32)> {
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let df = dense::q_derivative(f);
    let c = dense::q_gcd(f, &df);
    let mut w = dense::q_divrem(f, &c).0;
    let mut y = dense::q_divrem(&df, &c).0;
    let mut z = dense::q_sub(&y, &dense::q_derivative(&w));
    let mut i = 1u32;
    while w.len() > 1 {
        let g = dense::q_gcd(&w, &z);
        if g.len() > 1 {
            out.push((dense::q_primitive(&g), i));
        }
        w = dense::q_divrem(&w, &g).0;
        y = dense::q_divrem(&z, &g).0;
        z = dense::q_sub(&y, &dense::q_derivative(&w));
        i += 1;
    }
    out
}

/// Complete factorization into normalized rational irreducibles.
pub fn factor(p: &LaurentPoly) -> Result<FactorList> {
    let (_, shift, prim) = p.integer_primitive().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    for (part, mult) in yun(&dense::z_to_q(&prim)) {
        for irr in factor_squarefree_primitive(&part) {
            factors.push((LaurentPoly::from_coeffs(0, irr), mult));
        }
    }
    sort_factors(&mut factors);
    let unit = unit_for(p, shift, &factors);
    Ok(FactorList { unit, shift, factors })
}

/// Rejects zero and units.
pub fn is_irreducible(p: &LaurentPoly) -> Result<bool> {
    match p.degree_span() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => {
            let fl = factor(p)?;
            Ok(fl.factors.len() == 1 && fl.factors[0].1 == 1)
        }
    }
}

const PRIME_TRIALS: usize = 4;

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn reduce_mod_p(f: &[BigInt], p: u64) -> Pp {
    let pb = BigInt::from(p);
    let mut out: Pp = f
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    Field::trim(&mut out);
    out
}

/// Factors a primitive squarefree integer polynomial with positive leading
/// coefficient and nonzero constant term.
fn factor_squarefree_primitive(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();

    let mut best: Option<(Field, Vec<Pp>)> = None;
    let mut tried = 0;
    for p in small_primes().take_while(|&p| p < (1 << 31)) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fld = Field::new(p);
        let fp = reduce_mod_p(f, p);
        if fp.len() != f.len() {
            continue;
        }
        let g = fld.gcd(&fp, &fld.derivative(&fp));
        if g.len() > 1 {
            continue;
        }
        let parts = fld.factor_squarefree(&fld.monic(&fp), n as u64);
        if parts.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| parts.len() < b.len()) {
            best = Some((fld, parts));
        }
        tried += 1;
        if tried >= PRIME_TRIALS {
            break;
        }
    }
    let (fld, parts) = best.expect("no admissible prime below 2^31");

    // Coefficients of any factor, scaled by lc, are below lc · 2^n · ‖f‖₂.
    let bound = BigInt::from(2u32) * lc.abs() * (BigInt::one() << n) * dense::z_norm2_ceil(f);
    let pb = BigInt::from(fld.p);
    let mut modulus = pb.clone();
    let mut steps = 0;
    while modulus <= bound {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let lifted = lift_all(f, &parts, fld, steps);
    recombine(f, lifted, &modulus)
}

fn modp_to_z(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    dense::trim_z(&mut out);
    out
}

fn zmul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    zmod(&dense::z_mul(a, b), m)
}

fn zadd(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    zmod(&v, m)
}

fn zsub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect();
    zmod(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn zdivrem_monic(a: &[BigInt], h: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let mut r = zmod(a, m);
    if r.len() < h.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - h.len() + 1];
    while r.len() >= h.len() && !r.is_empty() {
        let shift = r.len() - h.len();
        let coef = r.last().unwrap().clone();
        for (j, hc) in h.iter().enumerate() {
            r[shift + j] = (&r[shift + j] - &coef * hc).mod_floor(m);
        }
        q[shift] = coef;
        dense::trim_z(&mut r);
    }
    dense::trim_z(&mut q);
    (q, r)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

struct Lifting {
    g: ZPoly,
    h: ZPoly,
    s: ZPoly,
    t: ZPoly,
}

/// One quadratic Hensel step from `m` to `m²`: `f ≡ g·h`, `s·g + t·h ≡ 1`, `h` monic.
fn hensel_step(f: &[BigInt], st: &Lifting, m: &BigInt) -> Lifting {
    let m2 = m * m;
    let e = zsub(f, &zmul(&st.g, &st.h, &m2), &m2);
    let (q, r) = zdivrem_monic(&zmul(&st.s, &e, &m2), &st.h, &m2);
    let g = zadd(&zadd(&st.g, &zmul(&st.t, &e, &m2), &m2), &zmul(&q, &st.g, &m2), &m2);
    let h = zadd(&st.h, &r, &m2);
    let b = zsub(
        &zadd(&zmul(&st.s, &g, &m2), &zmul(&st.t, &h, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = zdivrem_monic(&zmul(&st.s, &b, &m2), &h, &m2);
    let s = zsub(&st.s, &d, &m2);
    let t = zsub(&zsub(&st.t, &zmul(&st.t, &b, &m2), &m2), &zmul(&c, &g, &m2), &m2);
    Lifting { g, h, s, t }
}

/// Lifts `f ≡ lc(f)·∏ parts (mod p)` to monic factors modulo `p^(2^steps)`.
fn lift_all(f: &[BigInt], parts: &[Pp], fld: Field, steps: u32) -> Vec<ZPoly> {
    let pb = BigInt::from(fld.p);
    let mut top = pb.clone();
    for _ in 0..steps {
        top = &top * &top;
    }
    if parts.len() == 1 {
        let lc = f.last().unwrap();
        let inv = mod_inverse(lc, &top);
        return vec![zmod(&f.iter().map(|c| c * &inv).collect::<ZPoly>(), &top)];
    }
    let h0 = &parts[0];
    let lc_p = f.last().unwrap().mod_floor(&pb).to_u64().unwrap();
    let g0 = parts[1..]
        .iter()
        .fold(vec![lc_p], |acc, u| fld.mul(&acc, u));
    let (one, s0, t0) = fld.ext_gcd(&g0, h0);
    debug_assert_eq!(one, vec![1]);
    let mut st = Lifting {
        g: modp_to_z(&g0),
        h: modp_to_z(h0),
        s: modp_to_z(&s0),
        t: modp_to_z(&t0),
    };
    let mut m = pb;
    for _ in 0..steps {
        st = hensel_step(f, &st, &m);
        m = &m * &m;
    }
    let mut out = vec![st.h];
    out.extend(lift_all(&st.g, &parts[1..], fld, steps));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    let mut out: ZPoly = a
        .iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect();
    dense::trim_z(&mut out);
    out
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn recombine(f: &[BigInt], mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut rest: ZPoly = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let lc = rest.last().unwrap().clone();
            let cand = idx
                .iter()
                .fold(vec![lc], |acc, &i| zmul(&acc, &lifted[i], modulus));
            let mut g = symmetric(&cand, modulus);
            dense::z_make_primitive(&mut g);
            if g.len() > 1 {
                if let Some(q) = dense::z_div_exact(&rest, &g) {
                    found.push(g);
                    rest = q;
                    for &i in idx.iter().rev() {
                        lifted.remove(i);
                    }
                    continue 'outer;
                }
            }
            if !next_combination(&mut idx, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    if rest.len() > 1 {
        if rest.last().unwrap().sign() == Sign::Minus {
            rest.iter_mut().for_each(|c| *c = -c.clone());
        }
        found.push(rest);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn factor_strings(s: &str) -> Vec<(String, u32)> {
        factor(&p(s))
            .unwrap()
            .factors
            .into_iter()
            .map(|(f, m)| (f.to_string(), m))
            .collect()
    }

    #[test]
    fn factors_paper_examples() {
        assert_eq!(
            factor_strings("4*t^4 + -9*t^2 + 4*t^0"),
            vec![
                ("2*t^2 + -1*t^1 + -2*t^0".to_string(), 1),
                ("2*t^2 + 1*t^1 + -2*t^0".to_string(), 1)
            ]
        );
        assert_eq!(factor_strings("1*t^2 + -3*t^1 + 1*t^0"), vec![("1*t^2 + -3*t^1 + 1*t^0".to_string(), 1)]);
        assert_eq!(
            factor_strings("6*t^2 + -13*t^1 + 6*t^0"),
            vec![("2*t^1 + -3*t^0".to_string(), 1), ("3*t^1 + -2*t^0".to_string(), 1)]
        );
    }

    #[test]
    fn x4_plus_1_is_irreducible() {
        // reducible modulo every prime, irreducible over Q
        assert!(is_irreducible(&p("1*t^4 + 1*t^0")).unwrap());
    }

    #[test]
    fn expansion_reproduces_input_with_units() {
        let f = p("-3/2*t^7 + 3/2*t^3");
        let fl = factor(&f).unwrap();
        assert_eq!(fl.expand(), f);
        assert_eq!(fl.shift, 3);
        // t^4 - 1 = (t-1)(t+1)(t^2+1)
        assert_eq!(fl.factors.len(), 3);
    }

    #[test]
    fn squarefree_examples() {
        let sq = squarefree_decomposition(&p("1*t^2")).unwrap();
        assert_eq!(sq.shift, 2);
        assert!(sq.factors.is_empty());
        assert_eq!(sq.expand(), p("1*t^2"));

        let f = &p("1*t^1 + -1*t^0").pow(2) * &p("1*t^1 + 1*t^0");
        let sq = squarefree_decomposition(&f).unwrap();
        assert_eq!(
            sq.factors,
            vec![(p("1*t^1 + -1*t^0"), 2), (p("1*t^1 + 1*t^0"), 1)]
        );
        assert_eq!(sq.expand(), f);

        let d = p("1*t^2 + -3*t^1 + 1*t^0");
        assert_eq!(squarefree_decomposition(&d).unwrap().factors, vec![(d, 1)]);
    }

    #[test]
    fn irreducibility_rejects_degenerate_input() {
        assert_eq!(is_irreducible(&LaurentPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(is_irreducible(&p("5*t^3")), Err(Error::ConstantPolynomial));
        assert!(!is_irreducible(&p("1*t^2 + -1*t^0")).unwrap());
        assert!(!is_irreducible(&p("4*t^4 + -9*t^2 + 4*t^0")).unwrap());
    }

    #[test]
    fn factor_rejects_zero() {
        assert_eq!(factor(&LaurentPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(squarefree_decomposition(&LaurentPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn swinnerton_dyer_style_input_recombines() {
        // (t^4 - 10t^2 + 1) is irreducible but splits into linears/quadratics mod every prime
        let f = p("1*t^4 + -10*t^2 + 1*t^0");
        assert!(is_irreducible(&f).unwrap());
        let g = &f * &p("1*t^2 + -3*t^1 + 1*t^0");
        assert_eq!(factor(&g).unwrap().factors.len(), 2);
    }

    #[test]
    fn divisors_enumerate_exponent_choices() {
        let f = &p("1*t^1 + -2*t^0").pow(2) * &p("1*t^1 + 3*t^0");
        assert_eq!(factor(&f).unwrap().divisors().len(), 6);
    }
}
