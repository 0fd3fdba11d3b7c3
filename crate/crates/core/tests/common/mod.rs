//! Test oracles written against plain `i128` coefficient vectors, sharing no
//! code with the library beyond conversion.
#![allow(dead_code)]

use std::path::PathBuf;

use knotconc::LaurentPoly;
use num_traits::ToPrimitive;

/// Ascending coefficients, no trailing zeros.
pub type IPoly = Vec<i128>;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn corpus_polys() -> Vec<LaurentPoly> {
    let text = std::fs::read_to_string(fixtures().join("polys.txt")).unwrap();
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse().unwrap())
        .collect()
}

pub fn trim(mut a: IPoly) -> IPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn deg(a: &IPoly) -> usize {
    a.len().saturating_sub(1)
}

pub fn mul(a: &IPoly, b: &IPoly) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `a / b` when it is exact over the integers.
pub fn div_exact(a: &IPoly, b: &IPoly) -> Option<IPoly> {
    if b.is_empty() || a.len() < b.len() {
        return if a.is_empty() { Some(vec![]) } else { None };
    }
    let mut r = a.clone();
    let lb = *b.last().unwrap();
    let mut q = vec![0; a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = r[k + b.len() - 1];
        if top % lb != 0 {
            return None;
        }
        let c = top / lb;
        q[k] = c;
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= c * y;
        }
    }
    r.iter().all(|&x| x == 0).then(|| trim(q))
}

pub fn eval(a: &IPoly, x: i128) -> i128 {
    a.iter().rev().fold(0, |acc, c| acc * x + c)
}

fn gcd_i(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i(b, a % b)
    }
}

/// Content removed, positive leading coefficient.
pub fn primitive(a: &IPoly) -> IPoly {
    let g = a.iter().fold(0, |g, &c| gcd_i(g, c));
    if g == 0 {
        return vec![];
    }
    let s = if *a.last().unwrap() < 0 { -g } else { g };
    a.iter().map(|c| c / s).collect()
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// All sign/value assignments `(d_0, …, d_k)` along the chosen nodes,
/// interpolated through Newton divided differences; only integral
/// differences can come from an integer factor.
fn kronecker_degree(f: &IPoly, k: usize) -> Option<IPoly> {
    let mut nodes: Vec<(i128, Vec<i128>)> = (-8i128..=8)
        .filter_map(|x| {
            let v = eval(f, x);
            (v != 0).then(|| (x, divisors(v)))
        })
        .collect();
    nodes.sort_by_key(|(x, ds)| (ds.len(), x.abs()));
    nodes.truncate(k + 1);
    if nodes.len() < k + 1 {
        return None;
    }
    let xs: Vec<i128> = nodes.iter().map(|n| n.0).collect();
    let options: Vec<Vec<i128>> = nodes
        .iter()
        .enumerate()
        .map(|(i, (_, ds))| {
            if i == 0 {
                ds.clone()
            } else {
                ds.iter().flat_map(|&d| [d, -d]).collect()
            }
        })
        .collect();
    let mut idx = vec![0usize; k + 1];
    loop {
        let ys: Vec<i128> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        if let Some(g) = interpolate(&xs, &ys) {
            if deg(&g) == k && f.last().unwrap() % g.last().unwrap() == 0 {
                if div_exact(f, &g).is_some() {
                    return Some(primitive(&g));
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos > k {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn interpolate(xs: &[i128], ys: &[i128]) -> Option<IPoly> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i] - dd[i - 1];
            let den = xs[i] - xs[i - level];
            if num % den != 0 {
                return None;
            }
            dd[i] = num / den;
        }
    }
    // Newton form to monomial coefficients
    let mut poly: IPoly = vec![dd[n - 1]];
    for i in (0..n - 1).rev() {
        poly = mul(&poly, &vec![-xs[i], 1]);
        if poly.is_empty() {
            poly = vec![0];
        }
        poly[0] += dd[i];
    }
    Some(trim(poly))
}

/// A proper factor of a primitive `f` with `f(0) ≠ 0`, if one exists.
pub fn proper_factor(f: &IPoly) -> Option<IPoly> {
    (1..=deg(f) / 2).find_map(|k| kronecker_degree(f, k))
}

/// Full factorization into primitive irreducibles, sorted.
pub fn factor_oracle(f: &IPoly) -> Vec<IPoly> {
    let f = primitive(f);
    if deg(&f) == 0 {
        return vec![];
    }
    match proper_factor(&f) {
        None => vec![f],
        Some(g) => {
            let h = primitive(&div_exact(&f, &g).unwrap());
            let mut out = factor_oracle(&g);
            out.extend(factor_oracle(&h));
            out.sort();
            out
        }
    }
}

pub fn from_laurent(p: &LaurentPoly) -> IPoly {
    let n = p.normalize();
    let Some(top) = n.max_exp() else { return vec![] };
    (0..=top)
        .map(|e| {
            let c = n.coeff(e);
            assert!(c.is_integer());
            c.to_integer().to_i128().unwrap()
        })
        .collect()
}

pub fn to_laurent(a: &IPoly) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, a.iter().copied())
}

/// `t^{deg} a(t⁻¹)` of an ascending vector.
pub fn reverse(a: &IPoly) -> IPoly {
    a.iter().rev().copied().collect()
}

/// Paths to every scalar leaf of a JSON document.
pub fn json_leaves(v: &serde_json::Value) -> Vec<Vec<serde_json::Value>> {
    fn walk(v: &serde_json::Value, path: &mut Vec<serde_json::Value>, out: &mut Vec<Vec<serde_json::Value>>) {
        match v {
            serde_json::Value::Object(m) => {
                for (k, x) in m {
                    path.push(k.clone().into());
                    walk(x, path, out);
                    path.pop();
                }
            }
            serde_json::Value::Array(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    path.push(i.into());
                    walk(x, path, out);
                    path.pop();
                }
            }
            _ => out.push(path.clone()),
        }
    }
    let mut out = Vec::new();
    walk(v, &mut Vec::new(), &mut out);
    out
}

/// Changes the leaf at `path` to a different value of the same kind.
pub fn mutate_leaf(v: &mut serde_json::Value, path: &[serde_json::Value], salt: u64) {
    use serde_json::Value;
    let mut cur = v;
    for step in path {
        cur = match step {
            Value::String(k) => cur.get_mut(k.as_str()).unwrap(),
            Value::Number(i) => cur.get_mut(i.as_u64().unwrap() as usize).unwrap(),
            _ => unreachable!(),
        };
    }
    *cur = match cur.take() {
        Value::Bool(b) => Value::Bool(!b),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Value::from(i + 1 + (salt % 3) as i64),
            None => Value::from(n.as_f64().unwrap() + 1.0),
        },
        Value::String(s) if salt % 2 == 0 || s.is_empty() => Value::String(format!("{s}x")),
        Value::String(s) => {
            let mut chars: Vec<char> = s.chars().collect();
            let i = (salt as usize / 2) % chars.len();
            chars[i] = if chars[i] == '1' { '2' } else { '1' };
            Value::String(chars.into_iter().collect())
        }
        Value::Null => Value::from(0),
        other => other,
    };
}
