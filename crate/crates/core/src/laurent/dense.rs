//! Dense univariate helpers shared by the Laurent layer.
//!
//! Coefficient vectors are ascending (`v[i]` is the coefficient of `x^i`) and
//! trimmed: empty for zero, nonzero last entry otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type QPoly = Vec<BigRational>;
pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim_q(a: &mut QPoly) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

pub(crate) fn trim_z(a: &mut ZPoly) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

pub(crate) fn q_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let mut out: QPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim_q(&mut out);
    out
}

pub(crate) fn q_scale(a: &QPoly, s: &BigRational) -> QPoly {
    let mut out: QPoly = a.iter().map(|c| c * s).collect();
    trim_q(&mut out);
    out
}

pub(crate) fn q_derivative(a: &QPoly) -> QPoly {
    let mut out: QPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim_q(&mut out);
    out
}

/// Euclidean division; panics on a zero divisor.
pub(crate) fn q_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.clone();
    trim_q(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().unwrap().recip();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let coef = r.last().unwrap() * &lead_inv;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &coef * bc;
        }
        q[shift] = coef;
        r.pop();
        trim_q(&mut r);
    }
    trim_q(&mut q);
    (q, r)
}

pub(crate) fn q_monic(a: &QPoly) -> QPoly {
    match a.last() {
        None => Vec::new(),
        Some(l) => {
            let inv = l.recip();
            q_scale(a, &inv)
        }
    }
}

/// Monic gcd; gcd(0, 0) = 0.
pub(crate) fn q_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim_q(&mut x);
    trim_q(&mut y);
    while !y.is_empty() {
        let (_, r) = q_divrem(&x, &y);
        x = y;
        y = q_monic(&r);
    }
    q_monic(&x)
}

pub(crate) fn z_to_q(a: &[BigInt]) -> QPoly {
    let mut out: QPoly = a.iter().cloned().map(BigRational::from_integer).collect();
    trim_q(&mut out);
    out
}

/// Clears denominators and content; the result has a positive leading coefficient.
pub(crate) fn q_primitive(a: &QPoly) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let lcm = a
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: ZPoly = a
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    z_make_primitive(&mut ints);
    ints
}

pub(crate) fn z_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and fixes the sign of the leading coefficient.
pub(crate) fn z_make_primitive(a: &mut ZPoly) {
    trim_z(a);
    if a.is_empty() {
        return;
    }
    let mut g = z_content(a);
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in a.iter_mut() {
            *c /= &g;
        }
    }
}

pub(crate) fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_z(&mut out);
    out
}

/// Exact division in Z[x]; `None` when `b` does not divide `a`.
pub(crate) fn z_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r: ZPoly = a.to_vec();
    trim_z(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let lead = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (coef, rem) = r.last().unwrap().div_rem(lead);
        if !rem.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &coef * bc;
        }
        q[shift] = coef;
        r.pop();
        trim_z(&mut r);
        if r.is_empty() {
            break;
        }
    }
    if !r.is_empty() {
        return None;
    }
    trim_z(&mut q);
    Some(q)
}

pub(crate) fn z_norm2_ceil(a: &[BigInt]) -> BigInt {
    let sum: BigInt = a.iter().map(|c| c * c).sum();
    sum.sqrt() + BigInt::one()
}

pub(crate) fn q_eval(a: &[BigRational], x: &BigRational) -> BigRational {
    a.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}
