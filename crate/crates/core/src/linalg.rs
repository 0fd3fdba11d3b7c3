//! Small exact matrix routines: Bareiss determinants over ℤ and over
//! ℚ[t^{±1}], adjugates, and inertia of rational symmetric matrices.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::laurent::{LaurentPoly, Rational};

pub(crate) fn int_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub(crate) fn poly_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v
                    .div_exact(&prev)
                    .expect("Bareiss pivot is nonzero")
                    .expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `adj(M)` with `M·adj(M) = det(M)·I`.
pub(crate) fn poly_adjugate(m: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![LaurentPoly::one()]];
    }
    let mut out = vec![vec![LaurentPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<LaurentPoly>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c].clone()).collect())
                .collect();
            let c = poly_det(&minor);
            // adj[j][i] is the (i, j) cofactor
            out[j][i] = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    out
}

/// `(positive, negative, zero)` eigenvalue counts of a symmetric rational
/// matrix, by congruence diagonalization.
pub(crate) fn inertia(m: &[Vec<Rational>]) -> (usize, usize, usize) {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut n = a.len();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    while n > 0 {
        let pivot = (0..n).find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let off = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = off else {
                    zero += n;
                    break;
                };
                // row_i += row_j, col_i += col_j gives a_ii = 2 a_ij
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                i
            }
        };
        // move the pivot to the last slot and eliminate
        a.swap(p, n - 1);
        for row in a.iter_mut() {
            row.swap(p, n - 1);
        }
        let d = a[n - 1][n - 1].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in 0..n - 1 {
            let f = &a[i][n - 1] / &d;
            if f.is_zero() {
                continue;
            }
            for j in 0..n - 1 {
                let v = &f * &a[n - 1][j];
                a[i][j] -= v;
            }
        }
        n -= 1;
        a.truncate(n);
        for row in a.iter_mut() {
            row.truncate(n);
        }
    }
    (pos, neg, zero)
}

pub(crate) fn signature(m: &[Vec<Rational>]) -> i64 {
    let (p, n, _) = inertia(m);
    p as i64 - n as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect()
    }

    #[test]
    fn integer_determinants() {
        let m: Vec<Vec<BigInt>> = [[0i64, 1, 2], [3, 4, 5], [6, 7, 9]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(int_det(&m), BigInt::from(-3));
        assert_eq!(int_det(&[]), BigInt::from(1));
    }

    #[test]
    fn inertia_handles_zero_diagonal() {
        assert_eq!(inertia(&q(&[&[0, 1], &[1, 0]])), (1, 1, 0));
        assert_eq!(inertia(&q(&[&[-2, 1], &[1, -2]])), (0, 2, 0));
        assert_eq!(inertia(&q(&[&[1, 1], &[1, 1]])), (1, 0, 1));
        assert_eq!(inertia(&q(&[&[0, 0], &[0, 0]])), (0, 0, 2));
    }

    #[test]
    fn adjugate_identity() {
        let t = LaurentPoly::t();
        let c = |x: i64| LaurentPoly::constant(Rational::from_integer(x.into()));
        let m = vec![vec![&t * &c(-1) + c(1), t.clone() - c(0)], vec![c(-1), &t * &c(4) - c(4)]];
        let adj = poly_adjugate(&m);
        let det = poly_det(&m);
        for i in 0..2 {
            for j in 0..2 {
                let mut s = LaurentPoly::zero();
                for k in 0..2 {
                    s = &s + &(&m[i][k] * &adj[k][j]);
                }
                assert_eq!(s, if i == j { det.clone() } else { LaurentPoly::zero() });
            }
        }
    }
}
