//! Normal elements of GF(q^n) over GF(q) and coordinates in the normal basis
//! `{a, a^q, ..., a^(q^(n-1))}`.

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTower, Fq};
use crate::linalg::Matrix;

/// The n×n matrix whose column `i` is `a^(q^i)` in power-basis coordinates.
pub fn conjugate_matrix(tower: &FieldTower, a: &FieldElement) -> Matrix {
    let n = tower.n();
    let cols = tower.conjugates(a);
    let data = (0..n)
        .flat_map(|i| cols.iter().map(move |c| c.coeffs()[i]))
        .collect();
    Matrix::new(tower.base().clone(), n, n, data).expect("square matrix over the base field")
}

pub fn is_normal(tower: &FieldTower, a: &FieldElement) -> bool {
    !a.is_zero() && conjugate_matrix(tower, a).rank() == tower.n()
}

#[derive(Clone, Debug)]
pub struct NormalBasis {
    tower: FieldTower,
    alpha: FieldElement,
    basis: Matrix,
    inverse: Matrix,
}

impl NormalBasis {
    pub fn new(tower: &FieldTower, alpha: FieldElement) -> Result<Self> {
        let basis = conjugate_matrix(tower, &alpha);
        let inverse = basis
            .inverse()
            .ok_or_else(|| Error::NotNormal(alpha.to_text()))?;
        Ok(NormalBasis {
            tower: tower.clone(),
            alpha,
            basis,
            inverse,
        })
    }

    /// The first normal element in index order.
    pub fn find(tower: &FieldTower) -> Self {
        Self::all(tower).next().expect("a normal basis always exists")
    }

    /// Every normal basis, by index of its generating element.
    pub fn all(tower: &FieldTower) -> impl Iterator<Item = NormalBasis> + '_ {
        let end = tower.order().unwrap_or(u64::MAX);
        (1..end).filter_map(move |i| NormalBasis::new(tower, tower.from_index(i)).ok())
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.inverse
    }

    /// The unique `(l_0, ..., l_(n-1))` with `x = Σ l_i alpha^(q^i)`.
    pub fn coords(&self, x: &FieldElement) -> Vec<Fq> {
        self.inverse.mat_vec(x.coeffs()).expect("length n")
    }

    pub fn from_coords(&self, v: &[Fq]) -> Result<FieldElement> {
        let coeffs = self.basis.mat_vec(v)?;
        self.tower.element(coeffs)
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
    fn is_normal_examples() {
        let t = gf8();
        assert!(!is_normal(&t, &t.parse_element("0,1,0").unwrap()));
        assert!(is_normal(&t, &t.parse_element("1,1,0").unwrap()));
        assert!(!is_normal(&t, &t.zero()));
    }

    #[test]
    fn find_examples() {
        let t = gf8();
        assert_eq!(NormalBasis::find(&t).alpha(), &t.parse_element("1,1,0").unwrap());
        let t1 = FieldTower::build(3, 1, 1).unwrap();
        assert_eq!(NormalBasis::find(&t1).alpha(), &t1.one());
        let t4 = FieldTower::build(2, 1, 2).unwrap();
        assert_eq!(NormalBasis::find(&t4).alpha(), &t4.parse_element("0,1").unwrap());
    }

    #[test]
    fn coords_examples() {
        let t = gf8();
        let nb = NormalBasis::find(&t);
        assert_eq!(nb.coords(nb.alpha()), v(&[1, 0, 0]));
        assert_eq!(nb.coords(&t.zero()), v(&[0, 0, 0]));
        assert_eq!(nb.coords(&t.one()), v(&[1, 1, 1]));
        assert_eq!(nb.from_coords(&v(&[1, 0, 0])).unwrap(), *nb.alpha());
        assert_eq!(nb.from_coords(&v(&[0, 0, 0])).unwrap(), t.zero());
        assert!(nb.from_coords(&v(&[1, 0])).is_err());
        assert!(NormalBasis::new(&t, t.one()).is_err());
    }

    #[test]
    fn normal_elements_of_gf8_match_independence_oracle() {
        // oracle: conjugates are independent iff no nonzero GF(2) combination vanishes
        let t = gf8();
        for a in t.enumerate_elements(Level::Top).unwrap() {
            let conj = t.conjugates(&a);
            let dependent = (1u32..8).any(|mask| {
                (0..3)
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(t.zero(), |acc, i| t.add(&acc, &conj[i]))
                    .is_zero()
            });
            assert_eq!(is_normal(&t, &a), !dependent, "{a}");
        }
        let found: Vec<_> = NormalBasis::all(&t).take(3).map(|b| b.alpha().clone()).collect();
        assert_eq!(found.len(), 3);
    }

    #[test]
    fn frobenius_is_cyclic_shift_on_coords() {
        for (p, m, n) in [(2, 1, 3), (2, 1, 4), (3, 1, 3), (2, 2, 3)] {
            let t = FieldTower::build(p, m, n).unwrap();
            let nb = NormalBasis::find(&t);
            for x in t.enumerate_elements(Level::Top).unwrap() {
                let c = nb.coords(&x);
                let mut shifted = c.clone();
                shifted.rotate_right(1);
                assert_eq!(nb.coords(&t.frobenius(&x, 1)), shifted);
                assert_eq!(nb.from_coords(&c).unwrap(), x);
            }
        }
    }
}
