//! Conversions among generator polynomial `g`, parity-check polynomial `h`,
//! check element `λ` in GF(q^n) and q-polynomial `l` for a cyclic code of
//! length n over GF(q).
//!
//! In normal coordinates `l` acts as the circulant of its coefficients, and
//! `λ^(q^i)` has coordinates `x^i h(x) mod (x^n - 1)`.

use std::fmt;

use serde::Serialize;

use crate::cyclic::{is_cyclic_set, q_cyclotomic_coset, CyclicCode};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTower, Fq, Level};
use crate::linalg::{check_cap, span_of, CodewordSet, Matrix};
use crate::normal::{conjugate_matrix, NormalBasis};
use crate::poly::Poly;
use crate::qpoly::QPolynomial;

/// A nonzero `λ` in GF(q^n) defining `C_λ = {c : Σ c_i λ^(q^i) = 0}`.
#[derive(Clone, Debug)]
pub struct CheckElement {
    tower: FieldTower,
    lambda: FieldElement,
}

impl CheckElement {
    pub fn new(tower: &FieldTower, lambda: FieldElement) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(CheckElement {
            tower: tower.clone(),
            lambda,
        })
    }

    /// `λ = Σ v_i α^(q^i)`.
    pub fn from_normal_coords(basis: &NormalBasis, coords: &[Fq]) -> Result<Self> {
        Self::new(basis.tower(), basis.from_coords(coords)?)
    }

    /// `λ = γ^s`.
    pub fn from_power(tower: &FieldTower, gamma: &FieldElement, log_exponent: u64) -> Result<Self> {
        Self::new(tower, tower.pow(gamma, log_exponent))
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }

    pub fn normal_coords(&self, basis: &NormalBasis) -> Vec<Fq> {
        basis.coords(&self.lambda)
    }
}

/// `C_λ`, computed as a nullspace.
#[derive(Clone, Debug)]
pub struct LambdaCode {
    check_matrix: Matrix,
    basis: Vec<Vec<Fq>>,
}

impl LambdaCode {
    /// Column `i` holds the power-basis coordinates of `λ^(q^i)`.
    pub fn check_matrix(&self) -> &Matrix {
        &self.check_matrix
    }

    pub fn basis(&self) -> &[Vec<Fq>] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn generator_matrix(&self) -> Matrix {
        let m = &self.check_matrix;
        Matrix::from_rows(m.field().clone(), m.cols(), &self.basis).expect("rows of length n")
    }

    pub fn codewords(&self, cap: u64) -> Result<CodewordSet> {
        let m = &self.check_matrix;
        span_of(m.field(), m.cols(), &self.basis, cap)
    }
}

/// `C_λ` as the GF(q)-nullspace of `c -> Σ c_i λ^(q^i)`.
pub fn code_from_lambda(lam: &CheckElement) -> LambdaCode {
    let check_matrix = conjugate_matrix(&lam.tower, &lam.lambda);
    let basis = check_matrix.nullspace();
    LambdaCode {
        check_matrix,
        basis,
    }
}

/// The circulant of `λ`'s normal coordinates; `dim C_λ = n - rank`.
pub fn b_lambda_matrix(lam: &CheckElement, basis: &NormalBasis) -> Matrix {
    Matrix::circulant(lam.tower.base().clone(), &lam.normal_coords(basis)).expect("n >= 1")
}

/// `n - |coset of s mod (r - 1)|` where `λ = γ^s`; a lower bound on `dim C_λ`.
pub fn coset_dimension_bound(lam: &CheckElement, gamma: &FieldElement) -> Result<usize> {
    let t = &lam.tower;
    let log_exponent = t.discrete_log(gamma, &lam.lambda)?;
    let r = t.order().expect("discrete_log checked the order");
    let coset = q_cyclotomic_coset(log_exponent, r - 1, t.q() as u64);
    Ok(t.n().saturating_sub(coset.len()))
}

/// `λ = Σ h_i α^(q^i)` for the parity-check polynomial `h` of a cyclic code.
///
/// Only `deg h <= n - 1` is accepted: the full code (`h = x^n - 1`) would
/// need `λ = 0`.
pub fn lambda_from_parity_check(h: &Poly, basis: &NormalBasis) -> Result<CheckElement> {
    let t = basis.tower();
    let n = t.n();
    let deg = h.degree().ok_or(Error::ZeroElement)?;
    if deg == n && CyclicCode::from_parity_check(t.base(), h.clone(), n).is_ok() {
        return Err(Error::FullCodeUnsupported);
    }
    CyclicCode::from_parity_check(t.base(), h.clone(), n)?;
    CheckElement::from_normal_coords(basis, &h.to_vec(n))
}

/// The q-polynomial whose circulant has row space `<g>`: `l_0 = g_0`,
/// `l_(n-i) = g_i` for `1 <= i <= deg g`, all other coefficients zero.
///
/// Equivalently `l_((-i) mod n)` accumulates `g_i`, which for `deg g = n`
/// (the zero code) folds `g_n` onto `l_0` and gives `l = 0`.
pub fn ell_from_generator(tower: &FieldTower, g: &Poly) -> Result<QPolynomial> {
    let n = tower.n();
    let f = tower.base();
    CyclicCode::from_generator(f, g.clone(), n)?;
    let mut ell = vec![Fq::ZERO; n];
    for (i, &c) in g.coeffs().iter().enumerate() {
        let idx = (n - i % n) % n;
        ell[idx] = f.add(ell[idx], c);
    }
    QPolynomial::new(tower, ell)
}

/// The n×n circulant with entry `(i, j) = l_((i - j) mod n)`.
pub fn image_code_generator_matrix(ell: &QPolynomial) -> Matrix {
    Matrix::circulant(ell.tower().base().clone(), ell.coeffs()).expect("n >= 1")
}

/// The image code straight from its definition: normal coordinates of
/// `l(y)` for every `y` in GF(q^n).
pub fn image_code_by_definition(ell: &QPolynomial, basis: &NormalBasis, cap: u64) -> Result<CodewordSet> {
    let t = ell.tower();
    if t != basis.tower() {
        return Err(Error::FieldMismatch("q-polynomial and normal basis use different towers".into()));
    }
    check_cap(t.q(), t.n(), cap)?;
    Ok(t.enumerate_elements(Level::Top)?
        .map(|y| basis.coords(&ell.evaluate(&y)))
        .collect())
}

/// A q-polynomial paired with the normal basis that turns its image into
/// coordinate vectors.
#[derive(Clone, Debug)]
pub struct ImageCode {
    ell: QPolynomial,
    basis: NormalBasis,
}

impl ImageCode {
    pub fn new(ell: QPolynomial, basis: NormalBasis) -> Result<Self> {
        if ell.tower() != basis.tower() {
            return Err(Error::FieldMismatch("q-polynomial and normal basis use different towers".into()));
        }
        Ok(ImageCode { ell, basis })
    }

    pub fn ell(&self) -> &QPolynomial {
        &self.ell
    }

    pub fn basis(&self) -> &NormalBasis {
        &self.basis
    }

    pub fn generator_matrix(&self) -> Matrix {
        image_code_generator_matrix(&self.ell)
    }

    pub fn by_definition(&self, cap: u64) -> Result<CodewordSet> {
        image_code_by_definition(&self.ell, &self.basis, cap)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

/// Outcome of [`verify_equivalence`] for one generator polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub q: u32,
    pub n: usize,
    pub generator: String,
    pub parity_check: String,
    pub ell: String,
    pub beta: String,
    pub k: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// One `STATUS id detail` line per check.
    pub fn lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| format!("{} {} {}", c.status, c.id, c.detail))
            .collect()
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn assert(&mut self, id: &str, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.0.push(Check {
            id: id.into(),
            status,
            detail: detail.into(),
        });
    }

    fn skip(&mut self, id: &str, detail: impl Into<String>) {
        self.0.push(Check {
            id: id.into(),
            status: Status::Skip,
            detail: detail.into(),
        });
    }

    fn cyclic(&mut self, id: &str, words: &CodewordSet) {
        let ok = is_cyclic_set(words).unwrap_or(false);
        self.assert(id, ok, format!("{} words", words.len()));
    }
}

/// Builds `<g>` four ways and checks that they agree:
///
/// * `<g>` from its k×n generator matrix, and the n×n matrix `G1`;
/// * the circulant of `ell_from_generator(g)` (row space);
/// * the image code of that q-polynomial by its definition, over `basis`;
/// * `C_λ` with `λ` from the parity-check polynomial.
///
/// Rank and dimension identities are checked alongside, and every enumerated
/// set is tested for shift closure. Enumerations larger than `cap` are
/// reported as skipped.
pub fn verify_equivalence(g: &Poly, basis: &NormalBasis, cap: u64) -> Result<VerificationReport> {
    let tower = basis.tower();
    let field = tower.base();
    let n = tower.n();
    let code = CyclicCode::from_generator(field, g.clone(), n)?;
    let k = code.k();
    let generator_degree = code.generator_degree();
    let ell = ell_from_generator(tower, g)?;
    let mut checks = Checks(Vec::new());

    let standard = code.generator_matrix();
    let g1 = code.g1_matrix();
    let circ = image_code_generator_matrix(&ell);

    checks.assert(
        "generator-rank",
        standard.rank() == k,
        format!("rank {} = n - deg g = {k}", standard.rank()),
    );
    checks.assert(
        "g1-rank",
        g1.rank() == k,
        format!("rank(G1) {} vs n - deg g = {k}", g1.rank()),
    );
    checks.assert(
        "g1-row-space",
        g1.row_space_equal(&standard)?,
        "row space of G1 equals <g>",
    );
    checks.assert(
        "ell-circulant-rank",
        circ.rank() == k,
        format!("rank(G) {} vs n - deg g = {k}", circ.rank()),
    );
    checks.assert(
        "ell-circulant-row-space",
        circ.row_space_equal(&standard)?,
        format!("row space of circulant({}) equals <g>", ell.to_text()),
    );

    let generator_words = code.codeword_set(cap);
    match &generator_words {
        Ok(words) => checks.cyclic("cyclic-generator", words),
        Err(e) => checks.skip("cyclic-generator", e.to_string()),
    }
    match circ.span(cap) {
        Ok(words) => checks.cyclic("cyclic-ell-circulant", &words),
        Err(e) => checks.skip("cyclic-ell-circulant", e.to_string()),
    }

    match image_code_by_definition(&ell, basis, cap) {
        Ok(def_words) => {
            match &generator_words {
                Ok(words) => checks.assert(
                    "image-definition",
                    def_words == *words,
                    format!(
                        "{} words by definition vs {} in <g>",
                        def_words.len(),
                        words.len()
                    ),
                ),
                Err(e) => checks.skip("image-definition", e.to_string()),
            }
            match circ.transpose().span(cap) {
                Ok(cols) => checks.assert(
                    "image-definition-column-space",
                    def_words == cols,
                    "definition equals the column space of the circulant, <reciprocal of g>",
                ),
                Err(e) => checks.skip("image-definition-column-space", e.to_string()),
            }
            checks.cyclic("cyclic-image-definition", &def_words);
        }
        Err(e) => {
            checks.skip("image-definition", e.to_string());
            checks.skip("image-definition-column-space", e.to_string());
            checks.skip("cyclic-image-definition", e.to_string());
        }
    }

    let h = code.parity_check();
    let deg_h = h.degree().expect("nonzero");
    match lambda_from_parity_check(h, basis) {
        Ok(lam) => {
            let lambda_code = code_from_lambda(&lam);
            checks.assert(
                "lambda-row-space",
                lambda_code.generator_matrix().row_space_equal(&standard)?,
                format!("C_λ for λ = {} equals <g>", lam.lambda().to_text()),
            );
            let b_rank = b_lambda_matrix(&lam, basis).rank();
            let dim = lambda_code.dimension();
            checks.assert(
                "lambda-dimension",
                dim == n - b_rank && dim == deg_h,
                format!("dim C_λ {dim}, n - rank(B_λ) {}, deg h {deg_h}", n - b_rank),
            );
            match lambda_code.codewords(cap) {
                Ok(words) => checks.cyclic("cyclic-lambda", &words),
                Err(e) => checks.skip("cyclic-lambda", e.to_string()),
            }
        }
        Err(Error::FullCodeUnsupported) => {
            let detail = "full code: deg h = n needs λ = 0";
            checks.skip("lambda-row-space", detail);
            checks.skip("lambda-dimension", detail);
            checks.skip("cyclic-lambda", detail);
        }
        Err(e) => return Err(e),
    }

    Ok(VerificationReport {
        q: tower.q(),
        n,
        generator: g.to_text(),
        parity_check: h.to_text(),
        ell: ell.to_text(),
        beta: basis.alpha().to_text(),
        k: n - generator_degree,
        checks: checks.0,
    })
}
