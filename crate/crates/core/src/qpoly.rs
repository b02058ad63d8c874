//! q-polynomials `l(x) = Σ l_i x^(q^i)` with coefficients in GF(q), viewed as
//! GF(q)-linear maps on GF(q^n).

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTower, Fq};
use crate::linalg::Matrix;
use crate::normal::NormalBasis;
use crate::poly::{format_vector, parse_vector};

const TEXT_PREFIX: &str = "qpoly:";

#[derive(Clone, Debug)]
pub struct QPolynomial {
    tower: FieldTower,
    coeffs: Vec<Fq>,
}

impl PartialEq for QPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.tower == other.tower && self.coeffs == other.coeffs
    }
}

impl QPolynomial {
    /// Zero-pads to length n; longer coefficient vectors are rejected.
    pub fn new(tower: &FieldTower, mut coeffs: Vec<Fq>) -> Result<Self> {
        let n = tower.n();
        if coeffs.len() > n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: coeffs.len(),
            });
        }
        for c in &coeffs {
            tower.base().check(c.0 as u64)?;
        }
        coeffs.resize(n, Fq::ZERO);
        Ok(QPolynomial {
            tower: tower.clone(),
            coeffs,
        })
    }

    pub fn zero(tower: &FieldTower) -> Self {
        Self::new(tower, vec![]).expect("empty is valid")
    }

    /// `l(x) = x`.
    pub fn identity(tower: &FieldTower) -> Self {
        Self::new(tower, vec![Fq::ONE]).expect("length 1 is valid")
    }

    /// `l(x) = x + x^q + ... + x^(q^(n-1))`, the trace map.
    pub fn trace(tower: &FieldTower) -> Self {
        Self::new(tower, vec![Fq::ONE; tower.n()]).expect("length n is valid")
    }

    /// Accepts `"qpoly:1,0,1"` or the bare coefficient list.
    pub fn parse(tower: &FieldTower, text: &str) -> Result<Self> {
        let body = text.trim();
        let body = body.strip_prefix(TEXT_PREFIX).unwrap_or(body);
        Self::new(tower, parse_vector(body, tower.base())?)
    }

    pub fn to_text(&self) -> String {
        format!("{TEXT_PREFIX}{}", format_vector(&self.coeffs))
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `Σ l_i y^(q^i)`.
    pub fn evaluate(&self, y: &FieldElement) -> FieldElement {
        let t = &self.tower;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(t.zero(), |acc, (i, &c)| {
                t.add(&acc, &t.scale(c, &t.frobenius(y, i)))
            })
    }

    /// Evaluation carried out on normal coordinates:
    /// `c_i = Σ_j l_j y_((i - j) mod n)`.
    pub fn evaluate_in_coords(&self, y: &[Fq]) -> Result<Vec<Fq>> {
        let n = self.coeffs.len();
        if y.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: y.len(),
            });
        }
        let f = self.tower.base();
        Ok((0..n)
            .map(|i| {
                (0..n).fold(Fq::ZERO, |acc, j| {
                    f.mul_add(self.coeffs[j], y[(i + n - j) % n], acc)
                })
            })
            .collect())
    }

    /// Matrix of `y -> l(y)` in the given normal basis: column `j` is the
    /// coordinate vector of `l(beta^(q^j))`.
    pub fn map_matrix(&self, basis: &NormalBasis) -> Matrix {
        let t = &self.tower;
        let n = t.n();
        let cols: Vec<Vec<Fq>> = t
            .conjugates(basis.alpha())
            .iter()
            .map(|b| basis.coords(&self.evaluate(b)))
            .collect();
        let data = (0..n).flat_map(|i| cols.iter().map(move |c| c[i])).collect();
        Matrix::new(t.base().clone(), n, n, data).expect("square")
    }

    /// A basis of `Im(l)` in normal coordinates (reduced echelon rows).
    pub fn image_basis(&self, basis: &NormalBasis) -> Vec<Vec<Fq>> {
        self.map_matrix(basis).transpose().row_space_basis()
    }

    /// Dimension of the kernel, from the power-basis matrix of the map.
    pub fn kernel_dim(&self) -> usize {
        let t = &self.tower;
        let n = t.n();
        let cols: Vec<FieldElement> = (0..n)
            .map(|j| {
                let mut e = vec![Fq::ZERO; n];
                e[j] = Fq::ONE;
                self.evaluate(&t.element(e).expect("unit vector"))
            })
            .collect();
        let data = (0..n).flat_map(|i| cols.iter().map(move |c| c.coeffs()[i])).collect();
        let m = Matrix::new(t.base().clone(), n, n, data).expect("square");
        n - m.rank()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Level;

    fn gf8() -> FieldTower {
        FieldTower::build(2, 1, 3).unwrap()
    }

    fn v(s: &[u32]) -> Vec<Fq> {
        s.iter().map(|&x| Fq(x)).collect()
    }

    #[test]
    fn construction() {
        let t = gf8();
        let l = QPolynomial::new(&t, v(&[1])).unwrap();
        assert_eq!(l.coeffs(), &v(&[1, 0, 0])[..]);
        assert!(QPolynomial::new(&t, v(&[1, 0, 0, 1])).is_err());
        assert!(QPolynomial::new(&t, v(&[2])).is_err());
        let parsed = QPolynomial::parse(&t, "qpoly:1,0,1").unwrap();
        assert_eq!(parsed.to_text(), "qpoly:1,0,1");
        assert_eq!(QPolynomial::parse(&t, "1,0,1").unwrap(), parsed);
    }

    #[test]
    fn evaluate_examples() {
        let t = gf8();
        let id = QPolynomial::identity(&t);
        let tr = QPolynomial::trace(&t);
        let zero = QPolynomial::zero(&t);
        for y in t.enumerate_elements(Level::Top).unwrap() {
            assert_eq!(id.evaluate(&y), y);
            assert!(zero.evaluate(&y).is_zero());
            let expected = t.add(&t.add(&y, &t.pow(&y, 2)), &t.pow(&y, 4));
            assert_eq!(tr.evaluate(&y), expected);
            assert!(t.is_in_base(&tr.evaluate(&y)));
        }
        assert!(tr.evaluate(&t.gen()).is_zero());
    }

    #[test]
    fn image_basis_examples() {
        let t = gf8();
        let nb = NormalBasis::find(&t);
        assert_eq!(QPolynomial::identity(&t).image_basis(&nb).len(), 3);
        assert!(QPolynomial::zero(&t).image_basis(&nb).is_empty());
        let img = QPolynomial::trace(&t).image_basis(&nb);
        assert_eq!(img.len(), 1);
        // the image is GF(2) = {0, 1}, and 1 has normal coordinates (1,1,1)
        assert_eq!(img[0], v(&[1, 1, 1]));
        assert_eq!(QPolynomial::trace(&t).kernel_dim(), 2);
    }

    #[test]
    fn evaluate_in_coords_examples() {
        let t = gf8();
        let y = v(&[1, 0, 1]);
        assert_eq!(QPolynomial::identity(&t).evaluate_in_coords(&y).unwrap(), y);
        let l = QPolynomial::new(&t, v(&[1, 0, 1])).unwrap();
        assert_eq!(l.evaluate_in_coords(&v(&[1, 0, 0])).unwrap(), v(&[1, 0, 1]));
        assert_eq!(l.evaluate_in_coords(&v(&[0, 0, 0])).unwrap(), v(&[0, 0, 0]));
        assert!(l.evaluate_in_coords(&v(&[1])).is_err());
    }

    #[test]
    fn linearity_and_rank_nullity_exhaustive() {
        for (p, m, n) in [(2, 1, 3), (2, 1, 4), (3, 1, 3)] {
            let t = FieldTower::build(p, m, n).unwrap();
            let nb = NormalBasis::find(&t);
            let elems: Vec<_> = t.enumerate_elements(Level::Top).unwrap().collect();
            let l = QPolynomial::new(&t, (0..n as u32).map(|i| Fq(i % t.q())).collect()).unwrap();
            for y1 in &elems {
                for y2 in &elems {
                    assert_eq!(
                        l.evaluate(&t.add(y1, y2)),
                        t.add(&l.evaluate(y1), &l.evaluate(y2))
                    );
                }
                for c in t.base().elements() {
                    assert_eq!(l.evaluate(&t.scale(c, y1)), t.scale(c, &l.evaluate(y1)));
                }
            }
            assert_eq!(l.image_basis(&nb).len() + l.kernel_dim(), n);
        }
    }
}
