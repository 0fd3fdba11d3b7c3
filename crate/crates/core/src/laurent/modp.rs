//! Polynomials over a prime field `F_p` with `p < 2^31`, and their
//! distinct-degree / equal-degree factorization.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) type Pp = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 31));
        Self { p }
    }

    fn mulm(self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulm(acc, a);
            }
            a = self.mulm(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn trim(a: &mut Pp) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn sub(self, a: &[u64], b: &[u64]) -> Pp {
        let n = a.len().max(b.len());
        let mut out: Pp = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + self.p - y) % self.p
            })
            .collect();
        Self::trim(&mut out);
        out
    }

    pub fn mul(self, a: &[u64], b: &[u64]) -> Pp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(&mut out);
        out
    }

    pub fn scale(self, a: &[u64], s: u64) -> Pp {
        let mut out: Pp = a.iter().map(|&c| self.mulm(c, s)).collect();
        Self::trim(&mut out);
        out
    }

    pub fn monic(self, a: &[u64]) -> Pp {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub fn divrem(self, a: &[u64], b: &[u64]) -> (Pp, Pp) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let mut r: Pp = a.to_vec();
        Self::trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let inv = self.inv(*b.last().unwrap());
        let mut q = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let coef = self.mulm(*r.last().unwrap(), inv);
            for (j, &bc) in b.iter().enumerate() {
                let sub = self.mulm(coef, bc);
                r[shift + j] = (r[shift + j] + self.p - sub) % self.p;
            }
            q[shift] = coef;
            r.pop();
            Self::trim(&mut r);
        }
        Self::trim(&mut q);
        (q, r)
    }

    pub fn rem(self, a: &[u64], b: &[u64]) -> Pp {
        self.divrem(a, b).1
    }

    pub fn gcd(self, a: &[u64], b: &[u64]) -> Pp {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        Self::trim(&mut x);
        Self::trim(&mut y);
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn ext_gcd(self, a: &[u64], b: &[u64]) -> (Pp, Pp, Pp) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1): (Pp, Pp) = (vec![1], Vec::new());
        let (mut t0, mut t1): (Pp, Pp) = (Vec::new(), vec![1]);
        Self::trim(&mut r0);
        Self::trim(&mut r1);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let l = self.inv(*r0.last().expect("ext_gcd of two zero polynomials"));
        (self.scale(&r0, l), self.scale(&s0, l), self.scale(&t0, l))
    }

    pub fn derivative(self, a: &[u64]) -> Pp {
        let mut out: Pp = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
            .collect();
        Self::trim(&mut out);
        out
    }

    pub fn powmod(self, base: &[u64], exp: &BigUint, modulus: &[u64]) -> Pp {
        let mut acc: Pp = vec![1];
        let b = self.rem(base, modulus);
        for i in (0..exp.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), modulus);
            if exp.bit(i) {
                acc = self.rem(&self.mul(&acc, &b), modulus);
            }
        }
        self.rem(&acc, modulus)
    }

    /// Complete factorization of a monic squarefree polynomial into monic irreducibles.
    pub fn factor_squarefree(self, f: &[u64], seed: u64) -> Vec<Pp> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ self.p);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            self.equal_degree(&g, d, &mut rng, &mut out);
        }
        out
    }

    fn distinct_degree(self, f: &[u64]) -> Vec<(Pp, usize)> {
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x: Pp = vec![0, 1];
        let p_big = BigUint::from(self.p);
        let mut h = x.clone();
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                out.push((rest.clone(), rest.len() - 1));
                break;
            }
            h = self.powmod(&h, &p_big, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        out
    }

    fn equal_degree(self, f: &[u64], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Pp>) {
        let n = f.len() - 1;
        if n == d {
            out.push(f.to_vec());
            return;
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let mut a: Pp = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
            Self::trim(&mut a);
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &exp, f), &[1]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let other = self.divrem(f, &g).0;
                self.equal_degree(&g, d, rng, out);
                self.equal_degree(&self.monic(&other), d, rng, out);
                return;
            }
        }
    }
}
