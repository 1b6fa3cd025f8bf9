//! Dense exact matrices over a field tower. Reduced row echelon form is the
//! single workhorse; kernels, ranks and solves all go through it.

use std::sync::Arc;

use crate::error::{KextError, Result};
use crate::exact::tower::{Elem, Tower};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    tower: Tower,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Mat {
    pub fn zeros(tower: &Tower, rows: usize, cols: usize) -> Self {
        let z = tower.zero(tower.levels());
        Mat {
            tower: tower.clone(),
            rows,
            cols,
            data: vec![z; rows * cols],
        }
    }

    pub fn identity(tower: &Tower, n: usize) -> Self {
        let mut m = Mat::zeros(tower, n, n);
        let one = tower.one(tower.levels());
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }

    pub fn from_rows(tower: &Tower, rows: Vec<Vec<Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat {
            tower: tower.clone(),
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_fn(tower: &Tower, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            tower: tower.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Elem> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.tower.is_zero_elem(e))
    }

    pub fn same_tower(&self, other: &Mat) -> bool {
        Arc::ptr_eq(&self.tower, &other.tower) || *self.tower == *other.tower
    }

    fn lv(&self) -> usize {
        self.tower.levels()
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        if !self.same_tower(other) {
            return Err(KextError::MixedFields);
        }
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let lv = self.lv();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.tower.add(lv, a, b))
            .collect();
        Ok(Mat {
            tower: self.tower.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        if !self.same_tower(other) {
            return Err(KextError::MixedFields);
        }
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let lv = self.lv();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.tower.sub(lv, a, b))
            .collect();
        Ok(Mat {
            tower: self.tower.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &Elem) -> Mat {
        let lv = self.lv();
        let data = self.data.iter().map(|a| self.tower.mul(lv, a, s)).collect();
        Mat {
            tower: self.tower.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn matmul(&self, other: &Mat) -> Result<Mat> {
        if !self.same_tower(other) {
            return Err(KextError::MixedFields);
        }
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let lv = self.lv();
        let t = &self.tower;
        let mut out = Mat::zeros(t, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if t.is_zero_elem(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if t.is_zero_elem(b) {
                        continue;
                    }
                    let prod = t.mul(lv, a, b);
                    let cur = out.get(i, j).clone();
                    out.set(i, j, t.add(lv, &cur, &prod));
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.tower, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            tower: self.tower.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut r = self.row_vec(i);
            r.extend(other.row(i).iter().cloned());
            rows.push(r);
        }
        Mat::from_rows(&self.tower, rows)
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        Mat::from_fn(&self.tower, r1 - r0, c1 - c0, |i, j| {
            self.get(r0 + i, c0 + j).clone()
        })
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref_mut(&mut self) -> Vec<usize> {
        let lv = self.lv();
        let t = self.tower.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // find pivot
            let mut piv = None;
            for i in r..self.rows {
                if !t.is_zero_elem(self.get(i, c)) {
                    piv = Some(i);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            // swap rows p and r
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            // normalize pivot row
            let inv = t.inv(lv, self.get(r, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let v = t.mul(lv, self.get(r, j), &inv);
                self.set(r, j, v);
            }
            // eliminate everywhere else
            for i in 0..self.rows {
                if i == r || t.is_zero_elem(self.get(i, c)) {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    let sub = t.mul(lv, self.get(r, j), &f);
                    let v = t.sub(lv, self.get(i, j), &sub);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        // drop zero rows
        let rank = pivots.len();
        self.data.truncate(rank * self.cols);
        self.rows = rank;
        pivots
    }

    /// Reduced row echelon form with zero rows removed.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_mut();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space {v : self . v^T = 0}, rows are basis
    /// vectors in reduced echelon form.
    pub fn kernel(&self) -> Mat {
        let (r, pivots) = self.rref();
        let t = &self.tower;
        let lv = self.lv();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![t.zero(lv); self.cols];
            v[f] = t.one(lv);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = t.neg(lv, r.get(i, f));
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Mat::zeros(t, 0, self.cols);
        }
        let mut k = Mat::from_rows(t, rows);
        k.rref_mut();
        k
    }

    /// Row space membership test: reduces v against the rows of an rref
    /// basis; returns the residual.
    pub fn reduce_against_rref(&self, pivots: &[usize], v: &[Elem]) -> Vec<Elem> {
        let t = &self.tower;
        let lv = self.lv();
        let mut v = v.to_vec();
        for (i, &p) in pivots.iter().enumerate() {
            if t.is_zero_elem(&v[p]) {
                continue;
            }
            let f = v[p].clone();
            for j in 0..self.cols {
                let sub = t.mul(lv, self.get(i, j), &f);
                v[j] = t.sub(lv, &v[j], &sub);
            }
        }
        v
    }

    /// Solves x . self = rhs for a row vector x; returns None when
    /// inconsistent.
    pub fn solve_left(&self, rhs: &[Elem]) -> Option<Vec<Elem>> {
        // augment self^T with rhs^T as extra column, solve self^T x^T = rhs^T
        let t = &self.tower;
        let lv = self.lv();
        let at = self.transpose();
        let b = Mat::from_rows(t, vec![rhs.to_vec()]).transpose();
        let aug = at.hstack(&b);
        let (r, pivots) = aug.rref();
        // inconsistent if pivot in last column
        if pivots.contains(&self.rows) {
            return None;
        }
        let mut x = vec![t.zero(lv); self.rows];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.rows).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, None if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(&self.tower, n));
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(r.submatrix(0, n, n, 2 * n))
    }

    /// Determinant by fraction-full Gaussian elimination.
    pub fn det(&self) -> Elem {
        assert_eq!(self.rows, self.cols);
        let t = self.tower.clone();
        let lv = self.lv();
        let mut m = self.clone();
        let n = m.rows;
        let mut det = t.one(lv);
        for c in 0..n {
            let mut piv = None;
            for i in c..n {
                if !t.is_zero_elem(m.get(i, c)) {
                    piv = Some(i);
                    break;
                }
            }
            let Some(p) = piv else {
                return t.zero(lv);
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = t.neg(lv, &det);
            }
            let pivval = m.get(c, c).clone();
            det = t.mul(lv, &det, &pivval);
            let inv = t.inv(lv, &pivval).expect("nonzero pivot");
            for i in c + 1..n {
                if t.is_zero_elem(m.get(i, c)) {
                    continue;
                }
                let f = t.mul(lv, m.get(i, c), &inv);
                for j in c..n {
                    let sub = t.mul(lv, m.get(c, j), &f);
                    let v = t.sub(lv, m.get(i, j), &sub);
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Flattens the matrix into one row vector (row-major).
    pub fn flatten(&self) -> Vec<Elem> {
        self.data.clone()
    }

    pub fn from_flat(tower: &Tower, rows: usize, cols: usize, data: Vec<Elem>) -> Mat {
        assert_eq!(data.len(), rows * cols);
        Mat {
            tower: tower.clone(),
            rows,
            cols,
            data,
        }
    }
}

/// A canonical subspace: rows of a matrix in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    mat: Mat,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn from_rows(tower: &Tower, ambient: usize, rows: Vec<Vec<Elem>>) -> Self {
        if rows.is_empty() {
            return SubspaceBasis {
                ambient,
                mat: Mat::zeros(tower, 0, ambient),
                pivots: vec![],
            };
        }
        let m = Mat::from_rows(tower, rows);
        let (mat, pivots) = m.rref();
        SubspaceBasis {
            ambient,
            mat,
            pivots,
        }
    }

    pub fn from_mat(m: &Mat) -> Self {
        let (mat, pivots) = m.rref();
        SubspaceBasis {
            ambient: m.cols(),
            mat,
            pivots,
        }
    }

    pub fn zero(tower: &Tower, ambient: usize) -> Self {
        SubspaceBasis::from_rows(tower, ambient, vec![])
    }

    pub fn full(tower: &Tower, ambient: usize) -> Self {
        SubspaceBasis::from_mat(&Mat::identity(tower, ambient))
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.mat
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let t = self.mat.tower();
        let res = self.mat.reduce_against_rref(&self.pivots, v);
        res.iter().all(|e| t.is_zero_elem(e))
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        (0..other.dim()).all(|i| self.contains(other.mat.row(i)))
    }

    /// Coordinates of v in this basis, None if not contained.
    pub fn coords(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let _t = self.mat.tower();
        if !self.contains(v) {
            return None;
        }
        // rref basis: coordinate i is just v at pivot column i
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn join(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 {
            return other.clone();
        }
        if other.dim() == 0 {
            return self.clone();
        }
        SubspaceBasis::from_mat(&self.mat.vstack(&other.mat))
    }

    /// Completes the basis to a full invertible matrix by appending the
    /// lexicographically first unit vectors at non-pivot columns.
    pub fn complete(&self) -> Mat {
        let t = self.mat.tower();
        let lv = t.levels();
        let mut rows: Vec<Vec<Elem>> = (0..self.dim()).map(|i| self.mat.row_vec(i)).collect();
        for c in 0..self.ambient {
            if !self.pivots.contains(&c) {
                let mut v = vec![t.zero(lv); self.ambient];
                v[c] = t.one(lv);
                rows.push(v);
            }
        }
        Mat::from_rows(t, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::towers;
    use crate::exact::tower::Elem;

    fn mat_i64(t: &Tower, rows: Vec<Vec<i64>>) -> Mat {
        let lv = t.levels();
        Mat::from_rows(
            t,
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| t.from_int(lv, x)).collect())
                .collect(),
        )
    }

    #[test]
    fn kernel_identity_empty() {
        let q = towers::q();
        let m = Mat::identity(&q, 3);
        assert_eq!(m.kernel().rows(), 0);
    }

    #[test]
    fn kernel_zero_full() {
        let q = towers::q();
        let m = Mat::zeros(&q, 2, 3);
        assert_eq!(m.kernel().rows(), 3);
    }

    #[test]
    fn kernel_gf2_ones() {
        let t = towers::gf(2);
        let m = mat_i64(&t, vec![vec![1, 1], vec![1, 1]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), &[Elem::Fp(1), Elem::Fp(1)][..]);
    }

    #[test]
    fn rank_nullity() {
        let q = towers::q();
        let m = mat_i64(&q, vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let r = m.rank();
        let k = m.kernel();
        assert_eq!(r + k.rows(), 3);
        // A * v^T = 0 for every kernel row
        let prod = m.matmul(&k.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let q = towers::q();
        let m = mat_i64(&q, vec![vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv).unwrap(), Mat::identity(&q, 2));
    }

    #[test]
    fn det_values() {
        let q = towers::q();
        let lv = q.levels();
        let m = mat_i64(&q, vec![vec![2, 1], vec![1, 1]]);
        assert_eq!(m.det(), q.from_int(lv, 1));
        let s = mat_i64(&q, vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(s.det(), q.from_int(lv, 0));
    }

    #[test]
    fn solve_left_works() {
        let q = towers::q();
        let lv = q.levels();
        let m = mat_i64(&q, vec![vec![1, 0, 1], vec![0, 1, 1]]);
        let rhs = vec![q.from_int(lv, 2), q.from_int(lv, 3), q.from_int(lv, 5)];
        let x = m.solve_left(&rhs).unwrap();
        // x . m == rhs
        let xm = Mat::from_rows(&q, vec![x]).matmul(&m).unwrap();
        assert_eq!(xm.row(0), &rhs[..]);
    }

    #[test]
    fn subspace_canonical() {
        let q = towers::q();
        let lv = q.levels();
        let a = SubspaceBasis::from_rows(
            &q,
            3,
            vec![
                vec![q.from_int(lv, 2), q.from_int(lv, 0), q.from_int(lv, 2)],
                vec![q.from_int(lv, 0), q.from_int(lv, 3), q.from_int(lv, 0)],
            ],
        );
        let b = SubspaceBasis::from_rows(
            &q,
            3,
            vec![
                vec![q.from_int(lv, 1), q.from_int(lv, 1), q.from_int(lv, 1)],
                vec![q.from_int(lv, 0), q.from_int(lv, 1), q.from_int(lv, 0)],
            ],
        );
        assert_eq!(a, b);
        assert!(a.contains(&[q.from_int(lv, 3), q.from_int(lv, 5), q.from_int(lv, 3)]));
        let c = a.complete();
        assert!(c.inverse().is_some());
    }
}
