//! Dense exact linear algebra with deterministic pivoting.
//!
//! Subspaces are always represented by a matrix whose rows form a basis.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Build from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [F] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = vec![F::zero(); self.cols];
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(r)) {
                if !a.is_zero() {
                    *o = o.clone() + x.clone() * a.clone();
                }
            }
        }
        out
    }

    /// Reduced row echelon form with leftmost-first pivoting, and pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inverse().expect("nonzero pivot");
            for x in m.row_mut(r) {
                if !x.is_zero() {
                    *x = x.clone() * inv.clone();
                }
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, p) in m.row_mut(i).iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = x.clone() - f.clone() * p.clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis (as rows, in reduced echelon form) of `{x : A x = 0}`.
    pub fn kernel(&self) -> Matrix<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            basis.push(v);
        }
        row_space(&Matrix::from_rows(self.cols, basis))
    }

    /// Basis (as rows, in reduced echelon form) of the column space.
    pub fn image(&self) -> Matrix<F> {
        row_space(&self.transpose())
    }

    /// One solution of `A x = b`, free variables set to zero, or `None`.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = F::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red[(r, n + c)].clone();
            }
        }
        Some(inv)
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

/// Reduced echelon basis of the row space.
pub fn row_space<F: Scalar>(m: &Matrix<F>) -> Matrix<F> {
    let (r, pivots) = m.rref();
    let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    Matrix::from_rows(m.cols(), rows)
}

/// Complement of `span(u)` in the ambient space `F^n`: standard basis vectors at the
/// non-pivot positions of the echelon form of `u`.
pub fn complement<F: Scalar>(u: &Matrix<F>) -> Matrix<F> {
    let n = u.cols();
    let (_, pivots) = u.rref();
    let rows = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|c| {
            let mut v = vec![F::zero(); n];
            v[c] = F::one();
            v
        })
        .collect();
    Matrix::from_rows(n, rows)
}

/// Complement of `span(u)` inside `span(v)` (assumed to contain it), selected greedily
/// from the reduced echelon basis of `v`.
pub fn complement_in<F: Scalar>(u: &Matrix<F>, v: &Matrix<F>) -> Result<Matrix<F>> {
    if u.cols() != v.cols() {
        return Err(Error::DimensionMismatch("complement_in: ambient dimensions differ".into()));
    }
    let mut ech = Echelon::new(u.cols(), PivotRule::First);
    for r in 0..u.rows() {
        ech.insert(u.row(r).to_vec());
    }
    let vb = row_space(v);
    let mut out = Vec::new();
    for r in 0..vb.rows() {
        if ech.insert(vb.row(r).to_vec()).is_some() {
            out.push(vb.row(r).to_vec());
        }
    }
    Ok(Matrix::from_rows(u.cols(), out))
}

/// Basis of `span(u) ∩ span(v)` in reduced echelon form.
pub fn intersect<F: Scalar>(u: &Matrix<F>, v: &Matrix<F>) -> Result<Matrix<F>> {
    if u.cols() != v.cols() {
        return Err(Error::DimensionMismatch("intersect: ambient dimensions differ".into()));
    }
    let u = row_space(u);
    let v = row_space(v);
    // x u = y v  <=>  (x, -y) [u; v] = 0
    let mut stacked = Vec::new();
    for r in 0..u.rows() {
        stacked.push(u.row(r).to_vec());
    }
    for r in 0..v.rows() {
        stacked.push(v.row(r).iter().map(|x| -x.clone()).collect());
    }
    let s = Matrix::from_rows(u.cols(), stacked);
    let k = s.transpose().kernel();
    let mut out = Vec::new();
    for r in 0..k.rows() {
        out.push(u.apply_left(&k.row(r)[..u.rows()]));
    }
    Ok(row_space(&Matrix::from_rows(u.cols(), out)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotRule {
    /// Pivot on the lowest nonzero coordinate.
    First,
    /// Pivot on the highest nonzero coordinate.
    Last,
}

/// Incrementally grown semi-echelon basis. Rows are kept with a unit pivot and zeros
/// at all earlier pivots, so a single pass in insertion order reduces any vector.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    dim: usize,
    rule: PivotRule,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    pivot_of: BTreeMap<usize, usize>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(dim: usize, rule: PivotRule) -> Self {
        Echelon { dim, rule, rows: Vec::new(), pivots: Vec::new(), pivot_of: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_of.contains_key(&c)
    }

    /// Reduce `v` modulo the span; the result has zeros at every pivot.
    pub fn reduce(&self, v: &mut [F]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
    }

    /// Reduce `v` and also return the coefficients `c` with `v_old = Σ c_i row_i + v_new`.
    pub fn reduce_with_coeffs(&self, v: &mut [F]) -> Vec<F> {
        let mut coeffs = vec![F::zero(); self.rows.len()];
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
            coeffs[i] = f;
        }
        coeffs
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Insert `v`; returns the new pivot if `v` was independent.
    pub fn insert(&mut self, mut v: Vec<F>) -> Option<usize> {
        assert_eq!(v.len(), self.dim, "echelon dimension mismatch");
        self.reduce(&mut v);
        let p = match self.rule {
            PivotRule::First => v.iter().position(|x| !x.is_zero())?,
            PivotRule::Last => v.iter().rposition(|x| !x.is_zero())?,
        };
        let inv = v[p].inverse().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        self.pivot_of.insert(p, self.rows.len());
        self.rows.push(v);
        self.pivots.push(p);
        Some(p)
    }

    /// Fully reduced basis: every pivot column is a unit column.
    pub fn reduced_rows(&self) -> Vec<(usize, Vec<F>)> {
        let mut rows = self.rows.clone();
        for i in (0..rows.len()).rev() {
            let p = self.pivots[i];
            let pivot_row = rows[i].clone();
            for (j, row) in rows.iter_mut().enumerate() {
                if j == i {
                    continue;
                }
                let f = row[p].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
        }
        self.pivots.iter().copied().zip(rows).collect()
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.dim, self.rows.clone())
    }
}

/// Sparse vectors keyed by basis index; zero entries are never stored.
pub mod sparse {
    use super::*;

    pub type SparseVec<F> = BTreeMap<usize, F>;

    pub fn axpy<F: Scalar>(acc: &mut SparseVec<F>, c: &F, x: &SparseVec<F>) {
        if c.is_zero() {
            return;
        }
        for (&k, v) in x {
            add_term(acc, k, c.clone() * v.clone());
        }
    }

    pub fn add_term<F: Scalar>(acc: &mut SparseVec<F>, k: usize, v: F) {
        if v.is_zero() {
            return;
        }
        match acc.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + v;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale<F: Scalar>(x: &SparseVec<F>, c: &F) -> SparseVec<F> {
        if c.is_zero() {
            return SparseVec::new();
        }
        x.iter().map(|(&k, v)| (k, v.clone() * c.clone())).collect()
    }

    pub fn to_dense<F: Scalar>(x: &SparseVec<F>, n: usize) -> Vec<F> {
        let mut v = vec![F::zero(); n];
        for (&k, c) in x {
            v[k] = c.clone();
        }
        v
    }

    pub fn from_dense<F: Scalar>(v: &[F]) -> SparseVec<F> {
        v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect()
    }

    pub fn unit<F: Scalar>(k: usize) -> SparseVec<F> {
        let mut s = SparseVec::new();
        s.insert(k, F::one());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type M = Matrix<Rational>;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn rref_examples() {
        let (r, p) = M::identity(2).rref();
        assert_eq!(r, M::identity(2));
        assert_eq!(p, vec![0, 1]);

        let (r, p) = M::zeros(2, 3).rref();
        assert!(r.is_zero());
        assert!(p.is_empty());

        let (r, p) = M::from_i64(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, M::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn subspace_examples() {
        assert_eq!(M::identity(3).kernel().rows(), 0);
        let c = complement(&M::from_i64(&[&[1, 0]]));
        assert_eq!(c, M::from_i64(&[&[0, 1]]));
        let x = M::from_i64(&[&[1, 1], &[0, 1]]).solve(&[q(3), q(1)]).unwrap().unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        assert!(M::from_i64(&[&[1, 1], &[1, 1]]).solve(&[q(1), q(2)]).unwrap().is_none());
        assert!(M::identity(2).solve(&[q(1)]).is_err());
    }

    #[test]
    fn intersection_of_planes() {
        let u = M::from_i64(&[&[1, 0, 0], &[0, 1, 0]]);
        let v = M::from_i64(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(intersect(&u, &v).unwrap(), M::from_i64(&[&[0, 1, 0]]));
    }

    #[test]
    fn complement_inside_subspace() {
        let u = M::from_i64(&[&[1, 1, 0]]);
        let v = M::from_i64(&[&[1, 0, 0], &[0, 1, 0]]);
        let c = complement_in(&u, &v).unwrap();
        assert_eq!(c.rows(), 1);
        let mut e = Echelon::new(3, PivotRule::First);
        assert!(e.insert(u.row(0).to_vec()).is_some());
        assert!(e.insert(c.row(0).to_vec()).is_some());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = M::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), M::identity(2));
        assert!(M::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn echelon_last_rule_reduces() {
        let mut e = Echelon::<Rational>::new(3, PivotRule::Last);
        e.insert(vec![q(1), q(0), q(1)]);
        e.insert(vec![q(0), q(1), q(1)]);
        assert_eq!(e.pivots(), &[2, 1]);
        let mut v = vec![q(0), q(0), q(1)];
        e.reduce(&mut v);
        assert_eq!(v, vec![q(-1), q(0), q(0)]);
        assert!(e.contains(&[q(1), q(-1), q(0)]));
    }
}
