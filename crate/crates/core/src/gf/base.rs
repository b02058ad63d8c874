use std::fmt;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Fields up to this order get full addition/multiplication tables.
const TABLE_LIMIT: u32 = 256;

/// An element of GF(q).
///
/// The wrapped integer is the element's index: its base-`p` digits are the
/// coefficients over GF(p), lowest degree first. The prime subfield is
/// exactly the indices `0..p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fq(pub u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field GF(q) = GF(p)[t]/(base_poly) with q = p^m.
#[derive(Clone)]
pub struct BaseField {
    p: u32,
    m: usize,
    q: u32,
    /// Monic defining polynomial over GF(p), low degree first, length m + 1.
    modulus: Vec<u32>,
    add_table: Vec<u32>,
    mul_table: Vec<u32>,
    inv_table: Vec<u32>,
}

impl PartialEq for BaseField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for BaseField {}

impl fmt::Debug for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaseField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl BaseField {
    /// The prime field GF(p), defined by the degree-1 polynomial `x`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let p32 = u32::try_from(p).map_err(|_| Error::FieldTooLarge(format!("p = {p}")))?;
        Self::with_modulus(p32, vec![0, 1])
    }

    /// GF(p^m) defined by the lexicographically first monic irreducible of
    /// degree `m` over GF(p).
    pub fn new(p: u64, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let prime = Self::prime(p)?;
        if m == 1 {
            return Ok(prime);
        }
        let modulus = Poly::first_irreducible(&prime, m)?;
        Self::with_modulus(prime.p, modulus.coeffs().iter().map(|c| c.0).collect())
    }

    fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        let m = modulus.len() - 1;
        let q = (p as u64)
            .checked_pow(m as u32)
            .filter(|&q| q < (1 << 31))
            .ok_or_else(|| Error::FieldTooLarge(format!("{p}^{m}")))? as u32;
        let mut field = BaseField {
            p,
            m,
            q,
            modulus,
            add_table: Vec::new(),
            mul_table: Vec::new(),
            inv_table: Vec::new(),
        };
        if q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0; n * n];
            let mut mul = vec![0; n * n];
            let mut inv = vec![0; n];
            for a in 0..q {
                for b in 0..q {
                    let idx = a as usize * n + b as usize;
                    add[idx] = field.add_slow(a, b);
                    mul[idx] = field.mul_slow(a, b);
                    if mul[idx] == 1 {
                        inv[a as usize] = b;
                    }
                }
            }
            field.add_table = add;
            field.mul_table = mul;
            field.inv_table = inv;
        }
        Ok(field)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The defining polynomial over GF(p) as a polynomial with prime-field coefficients.
    pub fn modulus(&self) -> Poly {
        Poly::new(self.modulus.iter().map(|&c| Fq(c)).collect())
    }

    pub fn contains(&self, a: Fq) -> bool {
        a.0 < self.q
    }

    pub fn check(&self, value: u64) -> Result<Fq> {
        if value < self.q as u64 {
            Ok(Fq(value as u32))
        } else {
            Err(Error::InvalidCoefficient { value, q: self.q })
        }
    }

    /// Reduces an integer into the prime subfield.
    pub fn from_int(&self, v: i64) -> Fq {
        Fq(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q).map(Fq)
    }

    pub fn prime_elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.p).map(Fq)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.p == 2 {
            return Fq(a.0 ^ b.0);
        }
        if !self.add_table.is_empty() {
            return Fq(self.add_table[a.0 as usize * self.q as usize + b.0 as usize]);
        }
        Fq(self.add_slow(a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        if self.p == 2 {
            return a;
        }
        let mut d = self.digits(a.0);
        for x in d.iter_mut() {
            *x = (self.p - *x) % self.p;
        }
        Fq(self.undigits(&d))
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if !self.mul_table.is_empty() {
            return Fq(self.mul_table[a.0 as usize * self.q as usize + b.0 as usize]);
        }
        Fq(self.mul_slow(a.0, b.0))
    }

    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a.is_zero() {
            return None;
        }
        if !self.inv_table.is_empty() {
            return Some(Fq(self.inv_table[a.0 as usize]));
        }
        Some(self.pow(a, self.q as u64 - 2))
    }

    pub fn pow(&self, a: Fq, mut e: u64) -> Fq {
        let (mut base, mut acc) = (a, Fq::ONE);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a * x + y`, the inner step of every dot product.
    #[inline]
    pub fn mul_add(&self, a: Fq, x: Fq, y: Fq) -> Fq {
        self.add(self.mul(a, x), y)
    }

    fn digits(&self, mut v: u32) -> Vec<u32> {
        let mut d = vec![0; self.m];
        for x in d.iter_mut() {
            *x = v % self.p;
            v /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&s)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * self.m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce by the monic modulus, top degree down
        for k in (self.m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..self.m {
                let t = c * self.modulus[i] as u64 % p;
                prod[k - self.m + i] = (prod[k - self.m + i] + p - t) % p;
            }
        }
        let d: Vec<u32> = prod[..self.m].iter().map(|&x| x as u32).collect();
        self.undigits(&d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_arithmetic() {
        let f = BaseField::new(2, 2).unwrap();
        assert_eq!(f.q(), 4);
        assert_eq!(f.modulus().coeffs(), &[Fq(1), Fq(1), Fq(1)]);
        // t * t = t + 1
        assert_eq!(f.mul(Fq(2), Fq(2)), Fq(3));
        for a in 1..4 {
            assert_eq!(f.mul(Fq(a), f.inv(Fq(a)).unwrap()), Fq::ONE);
        }
    }

    #[test]
    fn slow_path_matches_tables() {
        let f = BaseField::new(3, 2).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(f.mul(Fq(a), Fq(b)).0, f.mul_slow(a, b));
                assert_eq!(f.add(Fq(a), Fq(b)).0, f.add_slow(a, b));
            }
            assert!(f.add(Fq(a), f.neg(Fq(a))).is_zero());
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = BaseField::new(2, 9).unwrap();
        assert!(f.mul_table.is_empty());
        for a in [1u32, 2, 3, 100, 511] {
            let inv = f.inv(Fq(a)).unwrap();
            assert_eq!(f.mul(Fq(a), inv), Fq::ONE);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(BaseField::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(BaseField::new(2, 0), Err(Error::ZeroDegree));
    }
}
