//! Dense matrices over a `FieldSpec`, with the handful of exact operations
//! the oracle needs: products, inverses, rank, determinant, and canonical
//! integer encodings for hashing enumerated group elements.

use std::sync::Arc;

use super::field::{FieldElt, FieldSpec};
use crate::{Error, Result};

#[derive(Clone)]
pub struct GFMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FieldElt>,
    pub field: Arc<FieldSpec>,
}

impl PartialEq for GFMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.field.q == other.field.q
            && self.data == other.data
    }
}
impl Eq for GFMatrix {}

impl std::fmt::Debug for GFMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "GFMatrix {}x{} over GF({})", self.rows, self.cols, self.field.q)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl GFMatrix {
    pub fn zero(field: Arc<FieldSpec>, rows: usize, cols: usize) -> Self {
        GFMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
            field,
        }
    }

    pub fn identity(field: Arc<FieldSpec>, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn diagonal(field: Arc<FieldSpec>, entries: &[FieldElt]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(field, n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElt {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_diagonal(&self) -> bool {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c && self.get(r, c) != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn diagonal_entries(&self) -> Vec<FieldElt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn mul(&self, other: &GFMatrix) -> GFMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.field.q, other.field.q);
        let f = &self.field;
        let mut out = GFMatrix::zero(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> GFMatrix {
        let mut out = GFMatrix::zero(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Entrywise e-th power (used for Frobenius maps x -> x^q).
    pub fn entrywise_pow(&self, e: u64) -> GFMatrix {
        let f = &self.field;
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            if *v != 0 {
                *v = f.pow(*v, e as i64);
            }
        }
        out
    }

    pub fn add(&self, other: &GFMatrix) -> GFMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let mut out = self.clone();
        for (v, w) in out.data.iter_mut().zip(&other.data) {
            *v = f.add(*v, *w);
        }
        out
    }

    pub fn sub(&self, other: &GFMatrix) -> GFMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let mut out = self.clone();
        for (v, w) in out.data.iter_mut().zip(&other.data) {
            *v = f.sub(*v, *w);
        }
        out
    }

    pub fn rank(&self) -> usize {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| m.get(r, col) != 0);
            let Some(pivot) = pivot else { continue };
            for c in 0..m.cols {
                let tmp = m.get(rank, c);
                m.set(rank, c, m.get(pivot, c));
                m.set(pivot, c, tmp);
            }
            let inv = f.inv(m.get(rank, col)).unwrap();
            for c in 0..m.cols {
                m.set(rank, c, f.mul(m.get(rank, c), inv));
            }
            for r in 0..m.rows {
                if r != rank && m.get(r, col) != 0 {
                    let factor = m.get(r, col);
                    for c in 0..m.cols {
                        let v = f.sub(m.get(r, c), f.mul(factor, m.get(rank, c)));
                        m.set(r, c, v);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn det(&self) -> FieldElt {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let mut m = self.clone();
        let n = m.rows;
        let mut det: FieldElt = 1;
        for col in 0..n {
            let pivot = match (col..n).find(|&r| m.get(r, col) != 0) {
                Some(p) => p,
                None => return 0,
            };
            if pivot != col {
                for c in 0..n {
                    let tmp = m.get(col, c);
                    m.set(col, c, m.get(pivot, c));
                    m.set(pivot, c, tmp);
                }
                det = f.neg(det);
            }
            det = f.mul(det, m.get(col, col));
            let inv = f.inv(m.get(col, col)).unwrap();
            for r in (col + 1)..n {
                if m.get(r, col) != 0 {
                    let factor = f.mul(m.get(r, col), inv);
                    for c in col..n {
                        let v = f.sub(m.get(r, c), f.mul(factor, m.get(col, c)));
                        m.set(r, c, v);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<GFMatrix> {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = GFMatrix::identity(f.clone(), n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| m.get(r, col) != 0)
                .ok_or_else(|| Error::parameter("singular matrix has no inverse"))?;
            if pivot != col {
                for c in 0..n {
                    let tmp = m.get(col, c);
                    m.set(col, c, m.get(pivot, c));
                    m.set(pivot, c, tmp);
                    let tmp = inv.get(col, c);
                    inv.set(col, c, inv.get(pivot, c));
                    inv.set(pivot, c, tmp);
                }
            }
            let piv_inv = f.inv(m.get(col, col)).unwrap();
            for c in 0..n {
                m.set(col, c, f.mul(m.get(col, c), piv_inv));
                inv.set(col, c, f.mul(inv.get(col, c), piv_inv));
            }
            for r in 0..n {
                if r != col && m.get(r, col) != 0 {
                    let factor = m.get(r, col);
                    for c in 0..n {
                        let v = f.sub(m.get(r, c), f.mul(factor, m.get(col, c)));
                        m.set(r, c, v);
                        let v = f.sub(inv.get(r, c), f.mul(factor, inv.get(col, c)));
                        inv.set(r, c, v);
                    }
                }
            }
        }
        Ok(inv)
    }

    pub fn conjugate_by(&self, g: &GFMatrix, g_inv: &GFMatrix) -> GFMatrix {
        g.mul(self).mul(g_inv)
    }

    pub fn commutes_with(&self, other: &GFMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Canonical integer encoding when the whole matrix fits in 64 bits
    /// (entries in `bits = ceil(log2 q)` bits, row-major).
    pub fn encode_u64(&self) -> Option<u64> {
        let bits = 64 - (self.field.q - 1).leading_zeros() as usize;
        if self.rows * self.cols * bits > 64 {
            return None;
        }
        let mut out: u64 = 0;
        for &v in &self.data {
            out = (out << bits) | v as u64;
        }
        Some(out)
    }

    /// Hex rendering of the canonical encoding (fixtures, logs).
    pub fn encode_hex(&self) -> String {
        match self.encode_u64() {
            Some(v) => format!("{v:x}"),
            None => self
                .data
                .iter()
                .map(|v| format!("{v:x}"))
                .collect::<Vec<_>>()
                .join("."),
        }
    }
}

/// Dickson invariant test for orthogonal matrices in characteristic 2:
/// true when rank(m - I) is even (the element lies in Omega).
pub fn dickson_even(m: &GFMatrix) -> bool {
    assert_eq!(m.rows, m.cols);
    assert_eq!(m.field.p, 2, "Dickson invariant lives in characteristic 2");
    let id = GFMatrix::identity(m.field.clone(), m.rows);
    m.sub(&id).rank() % 2 == 0
}
