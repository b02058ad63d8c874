//! Reference arithmetic written without the library, used as oracles.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// GF(p^m) on integer indices whose base-p digits are polynomial
/// coefficients, reduced by a monic modulus given low degree first.
#[derive(Clone, Debug)]
pub struct OField {
    pub p: u32,
    pub m: usize,
    pub q: u32,
    modulus: Vec<u32>,
}

impl OField {
    pub fn new(p: u32, modulus: &[u32]) -> Self {
        let m = modulus.len() - 1;
        assert_eq!(modulus[m], 1);
        OField {
            p,
            m,
            q: p.pow(m as u32),
            modulus: modulus.to_vec(),
        }
    }

    pub fn prime(p: u32) -> Self {
        OField::new(p, &[0, 1])
    }

    /// GF(4) = GF(2)[w]/(w^2 + w + 1).
    pub fn gf4() -> Self {
        OField::new(2, &[1, 1, 1])
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.undigits(&s)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let s: Vec<u32> = self.digits(a).iter().map(|&u| (self.p - u) % self.p).collect();
        self.undigits(&s)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return a * b % self.p;
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; 2 * self.m];
        for (i, u) in x.iter().enumerate() {
            for (j, v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        for top in (self.m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for k in 0..=self.m {
                let idx = top - self.m + k;
                prod[idx] = (prod[idx] + (self.p - c) * self.modulus[k]) % self.p;
            }
        }
        self.undigits(&prod[..self.m])
    }

    pub fn poly_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &u) in a.iter().enumerate() {
            for (j, &v) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(u, v));
            }
        }
        out
    }

    /// Whether monic `d` divides `a`.
    pub fn divides(&self, d: &[u32], a: &[u32]) -> bool {
        let mut r = a.to_vec();
        let dd = d.len() - 1;
        while r.len() > dd {
            let c = r[r.len() - 1];
            let shift = r.len() - 1 - dd;
            for (k, &dk) in d.iter().enumerate() {
                r[shift + k] = self.add(r[shift + k], self.neg(self.mul(c, dk)));
            }
            r.pop();
        }
        r.iter().all(|&x| x == 0)
    }

    /// Monic divisors of x^n - 1, by degree then index order.
    pub fn divisors_of_xn_minus_1(&self, n: usize) -> Vec<Vec<u32>> {
        let mut target = vec![0u32; n + 1];
        target[0] = self.neg(1);
        target[n] = 1;
        let mut out = Vec::new();
        for deg in 0..=n {
            for mut low in self.all_vectors(deg) {
                low.push(1);
                if self.divides(&low, &target) {
                    out.push(low);
                }
            }
        }
        out
    }

    /// Every vector of length `len` over the field, in index order.
    pub fn all_vectors(&self, len: usize) -> Vec<Vec<u32>> {
        let total = (self.q as u64).pow(len as u32);
        (0..total)
            .map(|mut i| {
                (0..len)
                    .map(|_| {
                        let d = (i % self.q as u64) as u32;
                        i /= self.q as u64;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    /// `{m(x) g(x) : deg m < n - deg g}` as length-n vectors.
    pub fn generated_code(&self, g: &[u32], n: usize) -> BTreeSet<Vec<u32>> {
        let k = n + 1 - g.len();
        self.all_vectors(k)
            .into_iter()
            .map(|msg| {
                let mut c = if k == 0 { vec![0] } else { self.poly_mul(&msg, g) };
                c.resize(n, 0);
                c
            })
            .collect()
    }

    /// All GF(q)-combinations of `rows`.
    pub fn span(&self, rows: &[Vec<u32>], len: usize) -> BTreeSet<Vec<u32>> {
        self.all_vectors(rows.len())
            .into_iter()
            .map(|coef| {
                let mut v = vec![0u32; len];
                for (c, row) in coef.iter().zip(rows) {
                    for (x, &r) in v.iter_mut().zip(row) {
                        *x = self.add(*x, self.mul(*c, r));
                    }
                }
                v
            })
            .collect()
    }
}

/// Multiplication in GF(2^n) on bitmasks; `modulus` includes the x^n bit.
pub fn gf2n_mul(mut a: u64, mut b: u64, modulus: u64, n: usize) -> u64 {
    let mut r = 0u64;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> n & 1 == 1 {
            a ^= modulus;
        }
    }
    r
}

/// `a^(2^j)` in GF(2^n).
pub fn gf2n_frob(mut a: u64, j: usize, modulus: u64, n: usize) -> u64 {
    for _ in 0..j {
        a = gf2n_mul(a, a, modulus, n);
    }
    a
}

/// Circulant rows with entry `(i, j) = v[(i - j) mod n]`.
pub fn circulant_rows(v: &[u32]) -> Vec<Vec<u32>> {
    let n = v.len();
    (0..n).map(|i| (0..n).map(|j| v[(i + n - j) % n]).collect()).collect()
}

pub fn is_shift_closed(words: &BTreeSet<Vec<u32>>) -> bool {
    words.iter().all(|w| {
        let mut s = w.clone();
        s.rotate_right(1);
        words.contains(&s)
    })
}

pub fn min_weight(words: &BTreeSet<Vec<u32>>) -> Option<usize> {
    words
        .iter()
        .map(|w| w.iter().filter(|&&x| x != 0).count())
        .filter(|&w| w > 0)
        .min()
}

/// Converts library vectors to plain indices.
pub fn plain(words: impl IntoIterator<Item = Vec<qcyclic::gf::Fq>>) -> BTreeSet<Vec<u32>> {
    words.into_iter().map(|w| w.iter().map(|x| x.0).collect()).collect()
}
