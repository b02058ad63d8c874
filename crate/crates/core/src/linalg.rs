//! Dense matrices over GF(q): echelon forms, rank, nullspace, circulants.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{BaseField, Fq};
use crate::poly::{format_vector, parse_vector, Poly};

/// A set of codewords, ordered so that equality checks are plain comparisons.
pub type CodewordSet = BTreeSet<Vec<Fq>>;

/// `q^k`, saturating into `u128`.
pub(crate) fn power_count(q: u32, k: usize) -> u128 {
    (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

pub(crate) fn check_cap(q: u32, k: usize, cap: u64) -> Result<()> {
    let needed = power_count(q, k);
    if needed > cap as u128 {
        return Err(Error::CapExceeded { needed, cap });
    }
    Ok(())
}

/// Row-major matrix over GF(q). Never empty: at least one row and one column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Arc<BaseField>,
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: Arc<BaseField>, rows: usize, cols: usize, data: Vec<Fq>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrix must have at least one row and column".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        if let Some(bad) = data.iter().find(|c| !field.contains(**c)) {
            return Err(Error::InvalidCoefficient {
                value: bad.0 as u64,
                q: field.q(),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Arc<BaseField>, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Fq::ZERO; rows * cols],
        }
    }

    pub fn identity(field: Arc<BaseField>, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Fq::ONE;
        }
        m
    }

    /// Stacks the given rows. An empty list gives a single zero row, which
    /// generates the zero code.
    pub fn from_rows(field: Arc<BaseField>, cols: usize, rows: &[Vec<Fq>]) -> Result<Self> {
        if rows.is_empty() {
            return Ok(Matrix::zeros(field, 1, cols));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    /// The circulant with entry `(i, j) = v[(i - j) mod n]`, so `v` is the
    /// first column and row 0 reads `v0, v(n-1), ..., v1`.
    pub fn circulant(field: Arc<BaseField>, v: &[Fq]) -> Result<Self> {
        let n = v.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("circulant of an empty vector".into()));
        }
        let data = (0..n)
            .flat_map(|i| (0..n).map(move |j| v[(i + n - j) % n]))
            .collect();
        Matrix::new(field, n, n, data)
    }

    pub fn field(&self) -> &Arc<BaseField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Fq] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fq>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Fq> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let data = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| self.get(i, j)))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "GF({}) vs GF({})",
                self.field.q(),
                other.field.q()
            )));
        }
        Ok(())
    }

    pub fn mat_vec(&self, v: &[Fq]) -> Result<Vec<Fq>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Fq::ZERO, |acc, (&a, &b)| f.mul_add(a, b, acc))
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = &self.field;
        let mut data = vec![Fq::ZERO; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let d = &mut data[i * other.cols + j];
                    *d = f.mul_add(a, other.get(k, j), *d);
                }
            }
        }
        Matrix::new(self.field.clone(), self.rows, other.cols, data)
    }

    /// Gauss-Jordan elimination: leftmost pivot column, first usable row.
    pub fn rref(&self) -> Echelon {
        let f = &self.field;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in 0..cols {
                m.data[r * cols + j] = f.mul(m.data[r * cols + j], inv);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor.is_zero() {
                    continue;
                }
                for j in 0..cols {
                    let sub = f.mul(factor, m.data[r * cols + j]);
                    m.data[i * cols + j] = f.sub(m.data[i * cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Nonzero rows of the reduced echelon form.
    pub fn row_space_basis(&self) -> Vec<Vec<Fq>> {
        let e = self.rref();
        (0..e.pivots.len()).map(|i| e.matrix.row(i).to_vec()).collect()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column: a 1 in that
    /// column and the negated pivot-row entries in the pivot columns.
    pub fn nullspace(&self) -> Vec<Vec<Fq>> {
        let f = &self.field;
        let e = self.rref();
        let free = (0..self.cols).filter(|c| !e.pivots.contains(c));
        free.map(|fc| {
            let mut v = vec![Fq::ZERO; self.cols];
            v[fc] = Fq::ONE;
            for (r, &pc) in e.pivots.iter().enumerate() {
                v[pc] = f.neg(e.matrix.get(r, fc));
            }
            v
        })
        .collect()
    }

    pub fn row_space_equal(&self, other: &Matrix) -> Result<bool> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        Ok(self.row_space_basis() == other.row_space_basis())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = Fq::ONE;
        }
        let e = aug.rref();
        if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
            return None;
        }
        let data = (0..n)
            .flat_map(|i| e.matrix.row(i)[n..].to_vec())
            .collect();
        Matrix::new(self.field.clone(), n, n, data).ok()
    }

    /// Every vector in the row space, refusing if there are more than `cap`.
    pub fn span(&self, cap: u64) -> Result<CodewordSet> {
        span_of(&self.field, self.cols, &self.row_space_basis(), cap)
    }

    /// Export document; see [`MatrixDoc`].
    pub fn to_doc(&self) -> String {
        let doc = MatrixDoc {
            format: MATRIX_FORMAT.into(),
            p: self.field.p(),
            m: self.field.m(),
            base_poly: self.field.modulus().to_text(),
            level: "q".into(),
            rows: self.rows,
            cols: self.cols,
            entries: self.row_vecs().iter().map(|r| format_vector(r)).collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    /// Imports a matrix document, building GF(q) from its header.
    pub fn from_doc(text: &str) -> Result<Matrix> {
        let doc = parse_doc(text)?;
        let field = Arc::new(BaseField::new(doc.p as u64, doc.m)?);
        Self::from_parsed(doc, field)
    }

    /// Imports a matrix document that must live over `field`.
    pub fn from_doc_in(text: &str, field: &Arc<BaseField>) -> Result<Matrix> {
        Self::from_parsed(parse_doc(text)?, field.clone())
    }

    fn from_parsed(doc: MatrixDoc, field: Arc<BaseField>) -> Result<Matrix> {
        if doc.format != MATRIX_FORMAT || doc.level != "q" {
            return Err(Error::parse(format!(
                "unsupported document format {:?} / level {:?}",
                doc.format, doc.level
            )));
        }
        if doc.p != field.p() || doc.m != field.m() || doc.base_poly != field.modulus().to_text() {
            return Err(Error::FieldMismatch(format!(
                "document is over GF({}^{}) with base_poly {}, expected GF({}^{}) with {}",
                doc.p,
                doc.m,
                doc.base_poly,
                field.p(),
                field.m(),
                field.modulus().to_text()
            )));
        }
        if doc.entries.len() != doc.rows {
            return Err(Error::parse(format!(
                "declared {} rows, found {}",
                doc.rows,
                doc.entries.len()
            )));
        }
        let mut data = Vec::with_capacity(doc.rows * doc.cols);
        for (i, row) in doc.entries.iter().enumerate() {
            let v = parse_vector(row, &field)?;
            if v.len() != doc.cols {
                return Err(Error::parse(format!(
                    "row {i} has {} entries, declared {} columns",
                    v.len(),
                    doc.cols
                )));
            }
            data.extend(v);
        }
        Matrix::new(field, doc.rows, doc.cols, data)
    }

    pub fn render(&self) -> String {
        let width = self.data.iter().map(|c| c.0.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| format!("{:>width$}", c.0)).collect();
            out.push_str("  [");
            out.push_str(&cells.join(" "));
            out.push_str("]\n");
        }
        out
    }
}

/// The row space spanned by `basis` (assumed independent), enumerated in
/// message order with the first coefficient varying fastest.
pub fn span_of(field: &BaseField, len: usize, basis: &[Vec<Fq>], cap: u64) -> Result<CodewordSet> {
    check_cap(field.q(), basis.len(), cap)?;
    let q = field.q();
    let mut out = CodewordSet::new();
    let mut coeffs = vec![0u32; basis.len()];
    loop {
        let mut word = vec![Fq::ZERO; len];
        for (c, b) in coeffs.iter().zip(basis) {
            if *c == 0 {
                continue;
            }
            for (w, &x) in word.iter_mut().zip(b) {
                *w = field.mul_add(Fq(*c), x, *w);
            }
        }
        out.insert(word);
        // odometer increment
        let mut i = 0;
        loop {
            if i == coeffs.len() {
                return Ok(out);
            }
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// Row vector to polynomial (coefficient `i` at degree `i`).
pub fn vector_poly(v: &[Fq]) -> Poly {
    Poly::new(v.to_vec())
}

const MATRIX_FORMAT: &str = "gfq-matrix";

/// Serialized form of a [`Matrix`]: field header, shape, and one
/// comma-separated entry string per row.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub format: String,
    pub p: u32,
    pub m: usize,
    pub base_poly: String,
    pub level: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

fn parse_doc(text: &str) -> Result<MatrixDoc> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: Some(e.line()),
        msg: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: usize) -> Arc<BaseField> {
        Arc::new(BaseField::new(p, m).unwrap())
    }

    fn v(s: &[u32]) -> Vec<Fq> {
        s.iter().map(|&x| Fq(x)).collect()
    }

    fn mat(f: &Arc<BaseField>, rows: &[&[u32]]) -> Matrix {
        let rows: Vec<_> = rows.iter().map(|r| v(r)).collect();
        Matrix::from_rows(f.clone(), rows[0].len(), &rows).unwrap()
    }

    #[test]
    fn circulant_examples() {
        let f = gf(2, 1);
        assert_eq!(Matrix::circulant(f.clone(), &v(&[1, 0, 0])).unwrap(), Matrix::identity(f.clone(), 3));
        let ones = Matrix::circulant(f.clone(), &v(&[1, 1, 1])).unwrap();
        assert!(ones.data.iter().all(|&c| c == Fq::ONE));
        let c = Matrix::circulant(f.clone(), &v(&[1, 0, 1])).unwrap();
        assert_eq!(c, mat(&f, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]));
        assert!(Matrix::circulant(f, &[]).is_err());
    }

    #[test]
    fn rank_examples() {
        let f = gf(2, 1);
        assert_eq!(Matrix::identity(f.clone(), 5).rank(), 5);
        assert_eq!(Matrix::circulant(f.clone(), &v(&[1, 1, 1, 1])).unwrap().rank(), 1);
        let hamming = Matrix::circulant(f, &v(&[1, 0, 0, 0, 1, 0, 1])).unwrap();
        assert_eq!(hamming.rank(), 4);
    }

    #[test]
    fn nullspace_examples() {
        let f = gf(2, 1);
        assert!(Matrix::identity(f.clone(), 4).nullspace().is_empty());
        let z = Matrix::zeros(f.clone(), 3, 3).nullspace();
        assert_eq!(z, vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let m = mat(&f, &[&[1, 1, 1]]);
        assert_eq!(m.nullspace(), vec![v(&[1, 1, 0]), v(&[1, 0, 1])]);
    }

    #[test]
    fn row_space_equal_examples() {
        let f = gf(2, 1);
        let a = Matrix::circulant(f.clone(), &v(&[1, 1, 0])).unwrap();
        assert!(a.row_space_equal(&a).unwrap());
        let id = Matrix::identity(f.clone(), 3);
        assert!(!id.row_space_equal(&Matrix::zeros(f.clone(), 3, 3)).unwrap());
        let b = mat(&f, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(a.row_space_equal(&b).unwrap());
        assert!(id.row_space_equal(&Matrix::identity(f.clone(), 2)).is_err());
        assert!(id.row_space_equal(&Matrix::identity(gf(3, 1), 3)).is_err());
    }

    #[test]
    fn mat_vec_examples() {
        let f = gf(2, 1);
        let x = v(&[1, 0, 1, 1]);
        assert_eq!(Matrix::identity(f.clone(), 4).mat_vec(&x).unwrap(), x);
        let ones = Matrix::circulant(f.clone(), &v(&[1, 1, 1])).unwrap();
        assert_eq!(ones.mat_vec(&v(&[1, 1, 0])).unwrap(), v(&[0, 0, 0]));
        let c = Matrix::circulant(f, &v(&[1, 0, 1])).unwrap();
        assert_eq!(c.mat_vec(&v(&[1, 0, 0])).unwrap(), v(&[1, 0, 1]));
        assert!(c.mat_vec(&v(&[1, 0])).is_err());
    }

    #[test]
    fn inverse_over_gf4() {
        let f = gf(2, 2);
        let m = mat(&f, &[&[1, 2], &[2, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f.clone(), 2));
        assert!(Matrix::zeros(f, 2, 2).inverse().is_none());
    }

    #[test]
    fn span_and_cap() {
        let f = gf(3, 1);
        let m = mat(&f, &[&[1, 1, 1]]);
        assert_eq!(m.span(10).unwrap().len(), 3);
        assert!(matches!(Matrix::identity(f, 3).span(26), Err(Error::CapExceeded { needed: 27, cap: 26 })));
    }

    #[test]
    fn doc_round_trip_and_errors() {
        let f = gf(2, 2);
        let m = mat(&f, &[&[1, 2, 3], &[0, 1, 0]]);
        let doc = m.to_doc();
        assert_eq!(Matrix::from_doc(&doc).unwrap(), m);
        assert_eq!(Matrix::from_doc(&doc).unwrap().to_doc(), doc);

        let truncated: String = doc.lines().take(6).collect::<Vec<_>>().join("\n");
        match Matrix::from_doc(&truncated) {
            Err(Error::Parse { line: Some(l), .. }) => assert!(l >= 6),
            other => panic!("expected parse error with line, got {other:?}"),
        }
        assert!(matches!(Matrix::from_doc_in(&doc, &gf(3, 1)), Err(Error::FieldMismatch(_))));
        let bad = doc.replace("\"rows\": 2", "\"rows\": 3");
        assert!(matches!(Matrix::from_doc(&bad), Err(Error::Parse { .. })));
    }
}
