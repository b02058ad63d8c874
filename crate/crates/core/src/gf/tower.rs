use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::prime_factors;
use crate::error::{Error, Result};
use crate::gf::{BaseField, Fq};
use crate::poly::{format_vector, parse_vector, Poly};

/// Default ceiling on `r - 1` for discrete logarithms and coset work.
pub const DEFAULT_DLOG_BOUND: u64 = 1 << 24;

/// Which field of the tower an enumeration ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Prime,
    Base,
    Top,
}

/// An element of GF(q^n): coefficients over GF(q) in the power basis of
/// `ext_poly`, lowest degree first. Always exactly `n` long.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(Vec<Fq>);

impl FieldElement {
    pub fn coeffs(&self) -> &[Fq] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn to_text(&self) -> String {
        format_vector(&self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Poly::new(self.0.clone()))
    }
}

#[derive(Clone)]
struct TowerInner {
    base: Arc<BaseField>,
    n: usize,
    ext_poly: Poly,
    /// `frobenius[j]` is the matrix of `a -> a^(q^j)` on power-basis
    /// coordinates, stored by columns: `frobenius[j][i]` is `(x^i)^(q^j)`.
    frobenius: Vec<Vec<Vec<Fq>>>,
    dlog_bound: u64,
}

/// The tower GF(p) ⊆ GF(q) = GF(p^m) ⊆ GF(q^n). Cheap to clone.
#[derive(Clone)]
pub struct FieldTower {
    inner: Arc<TowerInner>,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTower")
            .field("p", &self.p())
            .field("m", &self.m())
            .field("n", &self.n())
            .field("base_poly", &self.base_poly().to_text())
            .field("ext_poly", &self.inner.ext_poly.to_text())
            .finish()
    }
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.base == other.inner.base && self.inner.ext_poly == other.inner.ext_poly)
    }
}

impl FieldTower {
    /// Builds the tower from the lexicographically first monic irreducibles
    /// of degree `m` over GF(p) and degree `n` over GF(q).
    pub fn build(p: u64, m: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let base = Arc::new(BaseField::new(p, m)?);
        let ext_poly = Poly::first_irreducible(&base, n)?;
        Ok(Self::with_ext_poly(base, ext_poly))
    }

    fn with_ext_poly(base: Arc<BaseField>, ext_poly: Poly) -> Self {
        let n = ext_poly.degree().expect("nonzero ext_poly");
        let mut tower = FieldTower {
            inner: Arc::new(TowerInner {
                base,
                n,
                ext_poly,
                frobenius: Vec::new(),
                dlog_bound: DEFAULT_DLOG_BOUND,
            }),
        };
        let frobenius = tower.frobenius_tables();
        Arc::get_mut(&mut tower.inner).expect("unique").frobenius = frobenius;
        tower
    }

    fn frobenius_tables(&self) -> Vec<Vec<Vec<Fq>>> {
        let n = self.n();
        let q = self.q() as u64;
        let mut tables = Vec::with_capacity(n);
        // x^(q^j), starting from x itself
        let mut xq = self.gen();
        for _ in 0..n {
            let mut cols = Vec::with_capacity(n);
            let mut acc = self.one();
            for _ in 0..n {
                cols.push(acc.0.clone());
                acc = self.mul(&acc, &xq);
            }
            tables.push(cols);
            xq = self.pow(&xq, q);
        }
        tables
    }

    /// Same tower with a different discrete-log bound.
    pub fn with_dlog_bound(&self, bound: u64) -> Self {
        let mut inner = (*self.inner).clone();
        inner.dlog_bound = bound;
        FieldTower {
            inner: Arc::new(inner),
        }
    }

    pub fn base(&self) -> &Arc<BaseField> {
        &self.inner.base
    }

    pub fn p(&self) -> u32 {
        self.inner.base.p()
    }

    pub fn m(&self) -> usize {
        self.inner.base.m()
    }

    pub fn q(&self) -> u32 {
        self.inner.base.q()
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn dlog_bound(&self) -> u64 {
        self.inner.dlog_bound
    }

    pub fn base_poly(&self) -> Poly {
        self.inner.base.modulus()
    }

    pub fn ext_poly(&self) -> &Poly {
        &self.inner.ext_poly
    }

    /// `r = q^n`, when it fits in a `u64`.
    pub fn order(&self) -> Option<u64> {
        self.level_order(Level::Top)
    }

    pub fn level_order(&self, level: Level) -> Option<u64> {
        match level {
            Level::Prime => Some(self.p() as u64),
            Level::Base => Some(self.q() as u64),
            Level::Top => (self.q() as u64).checked_pow(self.n() as u32),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![Fq::ZERO; self.n()])
    }

    pub fn one(&self) -> FieldElement {
        self.embed(Fq::ONE)
    }

    /// The class of `x` modulo `ext_poly`.
    pub fn gen(&self) -> FieldElement {
        let x = Poly::monomial(Fq::ONE, 1);
        self.reduce(&x)
    }

    /// GF(q) embedded as constants.
    pub fn embed(&self, c: Fq) -> FieldElement {
        let mut v = vec![Fq::ZERO; self.n()];
        v[0] = c;
        FieldElement(v)
    }

    /// Validating constructor; shorter vectors are rejected, not padded.
    pub fn element(&self, coeffs: Vec<Fq>) -> Result<FieldElement> {
        if coeffs.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: coeffs.len(),
            });
        }
        for c in &coeffs {
            self.inner.base.check(c.0 as u64)?;
        }
        Ok(FieldElement(coeffs))
    }

    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        self.element(parse_vector(text, self.base())?)
    }

    pub fn reduce(&self, poly: &Poly) -> FieldElement {
        let r = poly.rem(&self.inner.ext_poly, self.base()).expect("nonzero modulus");
        FieldElement(r.to_vec(self.n()))
    }

    /// Element whose coefficients are the base-q digits of `index`.
    pub fn from_index(&self, mut index: u64) -> FieldElement {
        let q = self.q() as u64;
        let mut v = Vec::with_capacity(self.n());
        for _ in 0..self.n() {
            v.push(Fq((index % q) as u32));
            index /= q;
        }
        FieldElement(v)
    }

    pub fn index_of(&self, a: &FieldElement) -> Option<u64> {
        let q = self.q() as u64;
        a.0.iter()
            .rev()
            .try_fold(0u64, |acc, c| acc.checked_mul(q)?.checked_add(c.0 as u64))
    }

    /// Every element of the chosen level, embedded in GF(q^n), in index order
    /// starting from zero.
    pub fn enumerate_elements(&self, level: Level) -> Result<impl Iterator<Item = FieldElement> + '_> {
        let count = self
            .level_order(level)
            .ok_or_else(|| Error::FieldTooLarge(format!("{}^{}", self.q(), self.n())))?;
        Ok((0..count).map(move |i| match level {
            Level::Top => self.from_index(i),
            _ => self.embed(Fq(i as u32)),
        }))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let f = self.base();
        FieldElement(a.0.iter().zip(&b.0).map(|(&x, &y)| f.add(x, y)).collect())
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let f = self.base();
        FieldElement(a.0.iter().zip(&b.0).map(|(&x, &y)| f.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let f = self.base();
        FieldElement(a.0.iter().map(|&x| f.neg(x)).collect())
    }

    /// Multiplication by a GF(q) scalar.
    pub fn scale(&self, c: Fq, a: &FieldElement) -> FieldElement {
        let f = self.base();
        FieldElement(a.0.iter().map(|&x| f.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let f = self.base();
        let n = self.n();
        let mut t = vec![Fq::ZERO; 2 * n - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                t[i + j] = f.mul_add(x, y, t[i + j]);
            }
        }
        let ext = self.inner.ext_poly.coeffs();
        for k in (n..t.len()).rev() {
            let c = t[k];
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                t[k - n + i] = f.sub(t[k - n + i], f.mul(c, ext[i]));
            }
        }
        t.truncate(n);
        FieldElement(t)
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.base();
        let (_, s) = Poly::gcd_ext(&Poly::new(a.0.clone()), &self.inner.ext_poly, f);
        Ok(self.reduce(&s))
    }

    /// `a^(q^j)`, applied through the precomputed Frobenius matrices.
    pub fn frobenius(&self, a: &FieldElement, j: usize) -> FieldElement {
        let f = self.base();
        let cols = &self.inner.frobenius[j % self.n()];
        let mut out = vec![Fq::ZERO; self.n()];
        for (col, &c) in cols.iter().zip(&a.0) {
            if c.is_zero() {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(col) {
                *o = f.mul_add(c, v, *o);
            }
        }
        FieldElement(out)
    }

    /// The conjugates `a, a^q, ..., a^(q^(n-1))`.
    pub fn conjugates(&self, a: &FieldElement) -> Vec<FieldElement> {
        (0..self.n()).map(|j| self.frobenius(a, j)).collect()
    }

    pub fn is_in_base(&self, a: &FieldElement) -> bool {
        a.0[1..].iter().all(|c| c.is_zero())
    }

    fn group_order(&self) -> Result<u64> {
        self.order()
            .map(|r| r - 1)
            .ok_or_else(|| Error::FieldTooLarge(format!("{}^{}", self.q(), self.n())))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: &FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut order = self.group_order()?;
        for l in prime_factors(order) {
            while order % l == 0 && self.pow(a, order / l) == self.one() {
                order /= l;
            }
        }
        Ok(order)
    }

    /// First element, in index order, generating GF(q^n)^*.
    pub fn primitive_element(&self) -> Result<FieldElement> {
        let order = self.group_order()?;
        let factors = prime_factors(order);
        let one = self.one();
        (1..=order)
            .map(|i| self.from_index(i))
            .find(|a| factors.iter().all(|&l| self.pow(a, order / l) != one))
            .ok_or(Error::NotInGroup)
    }

    /// The exponent `s` in `[0, r - 2]` with `gamma^s = lambda`, by
    /// baby-step giant-step.
    pub fn discrete_log(&self, gamma: &FieldElement, lambda: &FieldElement) -> Result<u64> {
        if lambda.is_zero() || gamma.is_zero() {
            return Err(Error::ZeroElement);
        }
        let order = self.group_order()?;
        if order > self.dlog_bound() {
            return Err(Error::DlogBoundExceeded {
                order,
                bound: self.dlog_bound(),
            });
        }
        let step = (order as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(step as usize);
        let mut cur = self.one();
        for j in 0..step {
            baby.entry(cur.clone()).or_insert(j);
            cur = self.mul(&cur, gamma);
        }
        let giant = self.inv(&self.pow(gamma, step))?;
        let mut cur = lambda.clone();
        for i in 0..=step {
            if let Some(&j) = baby.get(&cur) {
                return Ok((i * step + j) % order);
            }
            cur = self.mul(&cur, &giant);
        }
        Err(Error::NotInGroup)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> FieldTower {
        FieldTower::build(2, 1, 3).unwrap()
    }

    fn el(t: &FieldTower, s: &str) -> FieldElement {
        t.parse_element(s).unwrap()
    }

    #[test]
    fn build_examples() {
        let t = gf8();
        assert_eq!(t.base_poly().to_text(), "0,1");
        assert_eq!(t.ext_poly().to_text(), "1,1,0,1");
        let t = FieldTower::build(2, 2, 1).unwrap();
        assert_eq!(t.base_poly().to_text(), "1,1,1");
        assert_eq!(t.ext_poly().degree(), Some(1));
        let t = FieldTower::build(3, 1, 2).unwrap();
        assert_eq!(t.ext_poly().to_text(), "1,0,1");
        assert_eq!(FieldTower::build(4, 1, 3).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldTower::build(2, 1, 0).unwrap_err(), Error::ZeroDegree);
        assert_eq!(FieldTower::build(2, 0, 3).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn arithmetic_examples() {
        let t = gf8();
        let x = el(&t, "0,1,0");
        assert!(t.add(&x, &x).is_zero());
        assert_eq!(t.mul(&x, &el(&t, "0,0,1")), el(&t, "1,1,0"));
        assert_eq!(t.inv(&t.one()).unwrap(), t.one());
        assert_eq!(t.inv(&t.zero()), Err(Error::DivisionByZero));
        assert!(t.element(vec![Fq(1)]).is_err());
        assert!(t.element(vec![Fq(2), Fq(0), Fq(0)]).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let t = gf8();
        let a = el(&t, "1,1,0");
        assert_eq!(t.frobenius(&a, 0), a);
        assert_eq!(t.frobenius(&a, 1), el(&t, "1,0,1"));
        for i in 0..8 {
            let a = t.from_index(i);
            assert_eq!(t.frobenius(&a, 3), a);
            assert_eq!(t.frobenius(&a, 1), t.pow(&a, 2));
        }
    }

    #[test]
    fn primitive_examples() {
        let t = gf8();
        assert_eq!(t.primitive_element().unwrap(), el(&t, "0,1,0"));
        let t2 = FieldTower::build(2, 1, 1).unwrap();
        assert_eq!(t2.primitive_element().unwrap(), t2.one());
        let t9 = FieldTower::build(3, 1, 2).unwrap();
        assert_eq!(t9.multiplicative_order(&el(&t9, "0,1")).unwrap(), 4);
        assert_eq!(t9.primitive_element().unwrap(), el(&t9, "1,1"));
    }

    #[test]
    fn discrete_log_examples() {
        let t = gf8();
        let g = t.primitive_element().unwrap();
        assert_eq!(t.discrete_log(&g, &t.one()).unwrap(), 0);
        assert_eq!(t.discrete_log(&g, &g).unwrap(), 1);
        assert_eq!(t.discrete_log(&g, &el(&t, "1,1,0")).unwrap(), 3);
        assert_eq!(t.discrete_log(&g, &t.zero()), Err(Error::ZeroElement));
        let small = t.with_dlog_bound(4);
        assert!(matches!(
            small.discrete_log(&g, &g),
            Err(Error::DlogBoundExceeded { order: 7, bound: 4 })
        ));
    }

    #[test]
    fn discrete_log_exhaustive_gf81() {
        let t = FieldTower::build(3, 2, 2).unwrap();
        let g = t.primitive_element().unwrap();
        let mut cur = t.one();
        for s in 0..80 {
            assert_eq!(t.discrete_log(&g, &cur).unwrap(), s);
            cur = t.mul(&cur, &g);
        }
    }

    #[test]
    fn enumeration_examples() {
        let t2 = FieldTower::build(2, 1, 1).unwrap();
        let all: Vec<_> = t2.enumerate_elements(Level::Top).unwrap().collect();
        assert_eq!(all, vec![t2.zero(), t2.one()]);

        let t4 = FieldTower::build(2, 2, 1).unwrap();
        let mut all: Vec<_> = t4.enumerate_elements(Level::Top).unwrap().collect();
        all.dedup();
        assert_eq!(all.len(), 4);

        let t = gf8();
        let g = t.primitive_element().unwrap();
        let mut powers: Vec<_> = (0..7).map(|s| t.pow(&g, s)).collect();
        powers.sort();
        let mut nonzero: Vec<_> = t.enumerate_elements(Level::Top).unwrap().skip(1).collect();
        nonzero.sort();
        assert_eq!(powers, nonzero);
        assert_eq!(t.enumerate_elements(Level::Prime).unwrap().count(), 2);
    }

    #[test]
    fn tower_over_gf4() {
        let t = FieldTower::build(2, 2, 3).unwrap();
        assert_eq!(t.order(), Some(64));
        let g = t.primitive_element().unwrap();
        assert_eq!(t.multiplicative_order(&g).unwrap(), 63);
        let fixed: Vec<_> = t
            .enumerate_elements(Level::Top)
            .unwrap()
            .filter(|a| t.frobenius(a, 1) == *a)
            .collect();
        let base: Vec<_> = t.enumerate_elements(Level::Base).unwrap().collect();
        assert_eq!(fixed, base);
    }
}
