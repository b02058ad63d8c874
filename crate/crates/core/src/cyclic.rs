//! Classical cyclic-code algebra over GF(q): factoring `x^n - 1`, codes from
//! generator or parity-check polynomials, generator matrices, enumeration
//! and minimum distance.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{BaseField, Fq};
use crate::linalg::{check_cap, vector_poly, CodewordSet, Matrix};
use crate::poly::Poly;

/// Default cap on the number of codewords any enumeration may visit.
pub const DEFAULT_CAP: u64 = 1 << 20;

/// Complete factorization of `x^n - 1` over GF(q) into monic irreducibles
/// with multiplicities, ordered by degree then coefficient index.
///
/// Trial division by monic polynomials in increasing degree: any divisor
/// found at the smallest remaining degree is necessarily irreducible.
pub fn factor_xn_minus_1(field: &BaseField, n: usize) -> Vec<(Poly, usize)> {
    let mut rest = Poly::x_n_minus_one(field, n);
    let mut factors = Vec::new();
    let mut d = 1;
    while let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        if 2 * d > deg {
            factors.push((rest.make_monic(field), 1));
            break;
        }
        let count = Poly::monic_count(field, d).unwrap_or(u64::MAX);
        for idx in 0..count {
            let cand = Poly::monic_from_index(field, d, idx);
            let mut mult = 0;
            while let Some(quot) = rest.exact_div(&cand, field) {
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                factors.push((cand, mult));
            }
            if rest.degree().map_or(true, |deg| deg < d) {
                break;
            }
        }
        d += 1;
    }
    factors
}

/// Every monic divisor of `x^n - 1`, sorted by degree then coefficients.
pub fn divisors_of_xn_minus_1(field: &BaseField, n: usize) -> Vec<Poly> {
    let mut divisors = vec![Poly::one()];
    for (factor, mult) in factor_xn_minus_1(field, n) {
        let mut next = Vec::with_capacity(divisors.len() * (mult + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..mult {
                acc = acc.mul(&factor, field);
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    divisors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    divisors
}

/// `{s q^j mod modulus : j >= 0}`.
pub fn q_cyclotomic_coset(s: u64, modulus: u64, q: u64) -> BTreeSet<u64> {
    let modulus = modulus.max(1);
    let mut coset = BTreeSet::new();
    let mut cur = s % modulus;
    while coset.insert(cur) {
        cur = ((cur as u128 * q as u128) % modulus as u128) as u64;
    }
    coset
}

/// The partition of `0..modulus` into q-cyclotomic cosets, by least element.
pub fn cyclotomic_cosets(modulus: u64, q: u64) -> Vec<BTreeSet<u64>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for s in 0..modulus {
        if seen.contains(&s) {
            continue;
        }
        let c = q_cyclotomic_coset(s, modulus, q);
        seen.extend(c.iter().copied());
        out.push(c);
    }
    out
}

/// `(c_(n-1), c_0, ..., c_(n-2))`.
pub fn cyclic_shift(word: &[Fq]) -> Vec<Fq> {
    let mut w = word.to_vec();
    w.rotate_right(1);
    w
}

/// Whether the set is closed under the one-step cyclic shift.
pub fn is_cyclic_set(words: &CodewordSet) -> Result<bool> {
    let mut lens = words.iter().map(Vec::len);
    if let Some(len) = lens.next() {
        if lens.any(|l| l != len) {
            return Err(Error::RaggedWords);
        }
    }
    Ok(words.iter().all(|w| words.contains(&cyclic_shift(w))))
}

pub fn hamming_weight(word: &[Fq]) -> usize {
    word.iter().filter(|c| !c.is_zero()).count()
}

/// The ideal `<g>` of GF(q)[x]/(x^n - 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    field: Arc<BaseField>,
    n: usize,
    generator: Poly,
    parity_check: Poly,
}

/// Parameters `[n, k, d]`. `d` is absent when enumeration was refused or
/// the code is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub weights: Option<Vec<u64>>,
}

impl CodeReport {
    pub fn label(&self) -> String {
        match self.d {
            Some(d) => format!("[{},{},{}]", self.n, self.k, d),
            None => format!("[{},{}]", self.n, self.k),
        }
    }
}

impl CyclicCode {
    pub fn from_generator(field: &Arc<BaseField>, g: Poly, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let h = Poly::x_n_minus_one(field, n)
            .exact_div(&g, field)
            .ok_or(Error::NotDivisor { n })?;
        Ok(CyclicCode {
            field: field.clone(),
            n,
            generator: g,
            parity_check: h,
        })
    }

    pub fn from_parity_check(field: &Arc<BaseField>, h: Poly, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if !h.is_monic() {
            return Err(Error::NotMonic);
        }
        let g = Poly::x_n_minus_one(field, n)
            .exact_div(&h, field)
            .ok_or(Error::NotDivisor { n })?;
        Self::from_generator(field, g, n)
    }

    /// The cyclic code spanned by `words`, whose generator is the monic gcd
    /// of `x^n - 1` and every word. Fails if the span is not cyclic.
    pub fn from_words(field: &Arc<BaseField>, n: usize, words: &[Vec<Fq>]) -> Result<Self> {
        let g = words.iter().fold(Poly::x_n_minus_one(field, n), |acc, w| {
            Poly::gcd(&acc, &vector_poly(w), field)
        });
        let code = Self::from_generator(field, g, n)?;
        let span = Matrix::from_rows(field.clone(), n, words)?;
        if !span.row_space_equal(&code.generator_matrix())? {
            return Err(Error::NotCyclic);
        }
        Ok(code)
    }

    pub fn field(&self) -> &Arc<BaseField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.generator_degree()
    }

    pub fn generator_degree(&self) -> usize {
        self.generator.degree().expect("monic generator")
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn parity_check(&self) -> &Poly {
        &self.parity_check
    }

    /// The code of reversed codewords, generated by the monic reciprocal of g.
    pub fn reciprocal(&self) -> CyclicCode {
        let g = self.generator.reciprocal().make_monic(&self.field);
        Self::from_generator(&self.field, g, self.n).expect("reciprocal of a divisor divides")
    }

    fn shifted_generator(&self, i: usize) -> Vec<Fq> {
        let mut row = vec![Fq::ZERO; self.n];
        for (j, &c) in self.generator.coeffs().iter().enumerate() {
            let idx = (i + j) % self.n;
            row[idx] = self.field.add(row[idx], c);
        }
        row
    }

    /// The k×n matrix with rows `x^i g(x)`, `0 <= i < k`. For the zero code
    /// this is a single zero row.
    pub fn generator_matrix(&self) -> Matrix {
        let rows: Vec<_> = (0..self.k()).map(|i| self.shifted_generator(i)).collect();
        Matrix::from_rows(self.field.clone(), self.n, &rows).expect("rows of length n")
    }

    /// The n×n matrix whose row `i` is `x^i g(x) mod (x^n - 1)`.
    pub fn g1_matrix(&self) -> Matrix {
        let rows: Vec<_> = (0..self.n).map(|i| self.shifted_generator(i)).collect();
        Matrix::from_rows(self.field.clone(), self.n, &rows).expect("rows of length n")
    }

    /// Nonsystematic encoding `m(x) g(x) mod (x^n - 1)`.
    pub fn encode(&self, message: &[Fq]) -> Result<Vec<Fq>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                got: message.len(),
            });
        }
        let f = &self.field;
        let mut word = vec![Fq::ZERO; self.n];
        for (i, &m) in message.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (j, &g) in self.generator.coeffs().iter().enumerate() {
                let idx = (i + j) % self.n;
                word[idx] = f.mul_add(m, g, word[idx]);
            }
        }
        Ok(word)
    }

    /// All `q^k` codewords, encoding messages in index order (first symbol
    /// fastest).
    pub fn codewords(&self, cap: u64) -> Result<Vec<Vec<Fq>>> {
        check_cap(self.field.q(), self.k(), cap)?;
        let q = self.field.q();
        let k = self.k();
        let mut out = Vec::new();
        let mut msg = vec![Fq::ZERO; k];
        loop {
            out.push(self.encode(&msg)?);
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(out);
                }
                msg[i].0 += 1;
                if msg[i].0 < q {
                    break;
                }
                msg[i] = Fq::ZERO;
                i += 1;
            }
        }
    }

    pub fn codeword_set(&self, cap: u64) -> Result<CodewordSet> {
        Ok(self.codewords(cap)?.into_iter().collect())
    }

    /// Weight distribution `A_0, ..., A_n` by exhaustive enumeration.
    pub fn weight_distribution(&self, cap: u64) -> Result<Vec<u64>> {
        let mut weights = vec![0u64; self.n + 1];
        for w in self.codewords(cap)? {
            weights[hamming_weight(&w)] += 1;
        }
        Ok(weights)
    }

    pub fn minimum_distance(&self, cap: u64) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        let weights = self.weight_distribution(cap)?;
        Ok((1..=self.n).find(|&w| weights[w] > 0).expect("a nonzero codeword exists"))
    }

    /// `[n, k, d]`, with `d` and the weights left out past the cap.
    pub fn report(&self, cap: u64) -> CodeReport {
        let weights = self.weight_distribution(cap).ok();
        let d = weights
            .as_ref()
            .and_then(|w| (1..=self.n).find(|&i| w[i] > 0));
        CodeReport {
            n: self.n,
            k: self.k(),
            d,
            weights,
        }
    }
}
