//! Univariate polynomials over GF(q).
//!
//! Coefficients are stored low degree first and kept normalized, so the
//! zero polynomial is the empty vector. The text form is the comma-separated
//! coefficient list, `"1,1,0,1"` being `1 + x + x^3`; each coefficient is a
//! GF(q) element index.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{BaseField, Fq};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    coeffs: Vec<Fq>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fq>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Fq::ONE] }
    }

    pub fn monomial(c: Fq, degree: usize) -> Self {
        let mut coeffs = vec![Fq::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    /// `x^n - 1` over the given field.
    pub fn x_n_minus_one(field: &BaseField, n: usize) -> Self {
        let mut coeffs = vec![Fq::ZERO; n + 1];
        coeffs[0] = field.from_int(-1);
        coeffs[n] = field.add(coeffs[n], Fq::ONE);
        Poly::new(coeffs)
    }

    /// The monic polynomial of degree `degree` whose lower coefficients are
    /// the base-q digits of `index`.
    pub fn monic_from_index(field: &BaseField, degree: usize, mut index: u64) -> Self {
        let q = field.q() as u64;
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push(Fq((index % q) as u32));
            index /= q;
        }
        coeffs.push(Fq::ONE);
        Poly { coeffs }
    }

    /// Number of monic polynomials of the given degree, if it fits in `u64`.
    pub fn monic_count(field: &BaseField, degree: usize) -> Option<u64> {
        (field.q() as u64).checked_pow(degree as u32)
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Fq {
        self.coeffs.last().copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Fq::ONE
    }

    /// Coefficient vector padded with zeros to length `len`.
    pub fn to_vec(&self, len: usize) -> Vec<Fq> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), Fq::ZERO);
        v
    }

    pub fn add(&self, other: &Poly, f: &BaseField) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &BaseField) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, c: Fq, f: &BaseField) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &BaseField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fq::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(a, b, out[i + j]);
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; fails only for a zero divisor.
    pub fn div_rem(&self, divisor: &Poly, f: &BaseField) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading()).ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Fq::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = f.mul(rem[k], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly, f: &BaseField) -> Result<Poly> {
        Ok(self.div_rem(divisor, f)?.1)
    }

    /// `Some(quotient)` when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Poly, f: &BaseField) -> Option<Poly> {
        match self.div_rem(divisor, f) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn make_monic(&self, f: &BaseField) -> Poly {
        match f.inv(self.leading()) {
            Some(inv) => self.scale(inv, f),
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly, f: &BaseField) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic(f)
    }

    /// Extended Euclid: returns `(g, s)` with `s * a ≡ g (mod m)`, `g` monic.
    pub fn gcd_ext(a: &Poly, m: &Poly, f: &BaseField) -> (Poly, Poly) {
        let (mut r0, mut r1) = (m.clone(), a.rem(m, f).expect("nonzero modulus"));
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (quot, rem) = r0.div_rem(&r1, f).expect("nonzero divisor");
            let s2 = s0.sub(&quot.mul(&s1, f), f);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let inv = f.inv(r0.leading()).unwrap_or(Fq::ZERO);
        (r0.scale(inv, f), s0.scale(inv, f))
    }

    /// `x^n * p(1/x)` for `n = deg p`, the reciprocal polynomial.
    pub fn reciprocal(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(c)
    }

    /// Irreducibility by trial division with every monic polynomial of
    /// degree at most half the degree.
    pub fn is_irreducible(&self, f: &BaseField) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        for k in 1..=d / 2 {
            let count = Poly::monic_count(f, k).unwrap_or(u64::MAX);
            for idx in 0..count {
                let cand = Poly::monic_from_index(f, k, idx);
                if self.exact_div(&cand, f).is_some() {
                    return false;
                }
            }
        }
        true
    }

    /// Lexicographically first monic irreducible of the given degree, with
    /// polynomials ordered by their coefficient index (constant term least
    /// significant).
    pub fn first_irreducible(f: &BaseField, degree: usize) -> Result<Poly> {
        let count = Poly::monic_count(f, degree)
            .ok_or_else(|| Error::FieldTooLarge(format!("degree {degree} over GF({})", f.q())))?;
        (0..count)
            .map(|idx| Poly::monic_from_index(f, degree, idx))
            .find(|cand| cand.is_irreducible(f))
            .ok_or_else(|| Error::FieldTooLarge("no irreducible found".into()))
    }

    pub fn eval(&self, x: Fq, f: &BaseField) -> Fq {
        self.coeffs.iter().rev().fold(Fq::ZERO, |acc, &c| f.mul_add(acc, x, c))
    }

    /// Parses the comma-separated coefficient list.
    pub fn parse(text: &str, f: &BaseField) -> Result<Poly> {
        Ok(Poly::new(parse_vector(text, f)?))
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        format_vector(&self.coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c.0 == 1 && i > 0 { String::new() } else { c.0.to_string() };
            match i {
                0 => write!(f, "{}", c.0)?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Parses a comma-separated list of GF(q) element indices.
pub fn parse_vector(text: &str, f: &BaseField) -> Result<Vec<Fq>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::parse("empty coefficient list"));
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let v: u64 = tok
                .parse()
                .map_err(|_| Error::parse(format!("bad coefficient {tok:?}")))?;
            f.check(v)
        })
        .collect()
}

pub fn format_vector(v: &[Fq]) -> String {
    v.iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> BaseField {
        BaseField::prime(2).unwrap()
    }

    #[test]
    fn text_round_trip() {
        let f = gf2();
        let p = Poly::parse("1,1,0,1", &f).unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.to_text(), "1,1,0,1");
        assert_eq!(p.to_string(), "x^3 + x + 1");
        assert!(Poly::parse("1,2", &f).is_err());
        assert!(Poly::parse("", &f).is_err());
        assert!(Poly::parse("1,,0", &f).is_err());
    }

    #[test]
    fn division_of_x7_minus_1() {
        let f = gf2();
        let g = Poly::parse("1,1,0,1", &f).unwrap();
        let h = Poly::x_n_minus_one(&f, 7).exact_div(&g, &f).unwrap();
        assert_eq!(h.to_text(), "1,1,1,0,1");
    }

    #[test]
    fn irreducible_scan() {
        let f = gf2();
        assert_eq!(Poly::first_irreducible(&f, 3).unwrap().to_text(), "1,1,0,1");
        assert_eq!(Poly::first_irreducible(&f, 2).unwrap().to_text(), "1,1,1");
        let f3 = BaseField::prime(3).unwrap();
        assert_eq!(Poly::first_irreducible(&f3, 2).unwrap().to_text(), "1,0,1");
    }

    #[test]
    fn gcd_and_inverse() {
        let f = BaseField::prime(5).unwrap();
        let a = Poly::parse("1,2,3", &f).unwrap();
        let m = Poly::parse("2,0,0,1", &f).unwrap();
        let (g, s) = Poly::gcd_ext(&a, &m, &f);
        let check = s.mul(&a, &f).rem(&m, &f).unwrap();
        assert_eq!(check.make_monic(&f), g);
        assert_eq!(Poly::gcd(&a, &Poly::zero(), &f), a.make_monic(&f));
    }
}
