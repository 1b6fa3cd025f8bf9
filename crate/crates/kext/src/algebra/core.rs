//! Finite-dimensional associative unital algebras given by structure
//! constants over a field tower.

use std::sync::{Arc, OnceLock};

use crate::error::{KextError, Result};
use crate::exact::mat::{Mat, SubspaceBasis};
use crate::exact::tower::{Elem, Tower};

/// Multiplication table of a finite group: `table[g][h]` is the index of
/// g*h, identity at index 0.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub names: Vec<String>,
}

impl GroupData {
    /// Validates closure, identity, inverses and associativity of the table.
    pub fn new(table: Vec<Vec<usize>>, names: Vec<String>) -> Result<GroupData> {
        let n = table.len();
        if n == 0 || names.len() != n {
            return Err(KextError::NotAGroup("empty table or name count mismatch".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(KextError::NotAGroup("row size or entry out of range".into()));
            }
        }
        for g in 0..n {
            if table[0][g] != g || table[g][0] != g {
                return Err(KextError::NotAGroup("index 0 is not an identity".into()));
            }
        }
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            for h in 0..n {
                if table[g][h] == 0 && table[h][g] == 0 {
                    inv[g] = h;
                }
            }
            if inv[g] == usize::MAX {
                return Err(KextError::NotAGroup("element without inverse".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(KextError::NotAGroup("table is not associative".into()));
                    }
                }
            }
        }
        Ok(GroupData {
            order: n,
            table,
            inv,
            names,
        })
    }

    /// A small generating set, found greedily by closure.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.order;
        let closure = |gens: &[usize]| -> usize {
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut frontier = vec![0usize];
            while let Some(g) = frontier.pop() {
                for &s in gens {
                    let h = self.table[g][s];
                    if !seen[h] {
                        seen[h] = true;
                        frontier.push(h);
                    }
                }
            }
            seen.iter().filter(|&&b| b).count()
        };
        for g in 1..n {
            if closure(&[g]) == n {
                return vec![g];
            }
        }
        for g in 1..n {
            for h in g + 1..n {
                if closure(&[g, h]) == n {
                    return vec![g, h];
                }
            }
        }
        (1..n).collect()
    }
}

/// A finite-dimensional associative algebra with unit, presented by its
/// structure constants: e_i * e_j = sum_k sc[i][j][k] e_k.
pub struct Algebra {
    tower: Tower,
    name: String,
    dim: usize,
    sc: Vec<Vec<Vec<Elem>>>,
    unit: Vec<Elem>,
    /// Generating elements (coordinate vectors); together with the unit they
    /// generate the algebra. Empty means "use the whole basis".
    gens: Vec<Vec<Elem>>,
    group: Option<GroupData>,
    radical: OnceLock<SubspaceBasis>,
}

pub type AlgRef = Arc<Algebra>;

impl Algebra {
    /// Validates associativity and the unit laws before constructing.
    pub fn new(
        tower: Tower,
        name: &str,
        sc: Vec<Vec<Vec<Elem>>>,
        unit: Vec<Elem>,
        gens: Vec<Vec<Elem>>,
        group: Option<GroupData>,
    ) -> Result<AlgRef> {
        let dim = sc.len();
        if dim == 0 {
            return Err(KextError::BadParameters("zero-dimensional algebra".into()));
        }
        for row in &sc {
            if row.len() != dim || row.iter().any(|v| v.len() != dim) {
                return Err(KextError::BadParameters(
                    "structure constants have inconsistent dimensions".into(),
                ));
            }
        }
        if unit.len() != dim {
            return Err(KextError::BadUnit);
        }
        let alg = Algebra {
            tower,
            name: name.to_string(),
            dim,
            sc,
            unit,
            gens,
            group,
            radical: OnceLock::new(),
        };
        // unit laws
        for i in 0..dim {
            let e = alg.basis_vec(i);
            if alg.mul_vec(&alg.unit, &e) != e || alg.mul_vec(&e, &alg.unit) != e {
                return Err(KextError::BadUnit);
            }
        }
        // associativity on basis triples
        for i in 0..dim {
            for j in 0..dim {
                let ij = alg.sc[i][j].clone();
                for k in 0..dim {
                    let left = alg.mul_vec(&ij, &alg.basis_vec(k));
                    let right = alg.mul_vec(&alg.basis_vec(i), &alg.sc[j][k]);
                    if left != right {
                        return Err(KextError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(Arc::new(alg))
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sc(&self) -> &Vec<Vec<Vec<Elem>>> {
        &self.sc
    }

    pub fn unit(&self) -> &[Elem] {
        &self.unit
    }

    pub fn group(&self) -> Option<&GroupData> {
        self.group.as_ref()
    }

    pub(crate) fn radical_cache(&self) -> &OnceLock<SubspaceBasis> {
        &self.radical
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Elem> {
        let lv = self.tower.levels();
        let mut v = vec![self.tower.zero(lv); self.dim];
        v[i] = self.tower.one(lv);
        v
    }

    /// Generating elements; defaults to the whole basis.
    pub fn generators(&self) -> Vec<Vec<Elem>> {
        if self.gens.is_empty() {
            (0..self.dim).map(|i| self.basis_vec(i)).collect()
        } else {
            self.gens.clone()
        }
    }

    pub fn mul_vec(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let lv = self.tower.levels();
        let mut out = vec![self.tower.zero(lv); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if self.tower.is_zero_elem(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if self.tower.is_zero_elem(bj) {
                    continue;
                }
                let c = self.tower.mul(lv, ai, bj);
                for (k, s) in self.sc[i][j].iter().enumerate() {
                    if !self.tower.is_zero_elem(s) {
                        let t = self.tower.mul(lv, &c, s);
                        out[k] = self.tower.add(lv, &out[k], &t);
                    }
                }
            }
        }
        out
    }

    /// Left multiplication by a as a matrix in the row-vector convention:
    /// row i holds the coordinates of a * e_i.
    pub fn lmat(&self, a: &[Elem]) -> Mat {
        let rows = (0..self.dim)
            .map(|i| self.mul_vec(a, &self.basis_vec(i)))
            .collect();
        Mat::from_rows(&self.tower, rows)
    }

    /// Right multiplication by a: row i holds the coordinates of e_i * a.
    /// These are the action matrices of the regular right module.
    pub fn rmat(&self, a: &[Elem]) -> Mat {
        let rows = (0..self.dim)
            .map(|i| self.mul_vec(&self.basis_vec(i), a))
            .collect();
        Mat::from_rows(&self.tower, rows)
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.sc[i][j] != self.sc[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// Basis of the center as a subspace of the algebra.
    pub fn center(&self) -> SubspaceBasis {
        let n = self.dim;
        let mut cols: Option<Mat> = None;
        for j in 0..n {
            let r = self.rmat(&self.basis_vec(j));
            let l = self.lmat(&self.basis_vec(j));
            let d = r.sub(&l).unwrap();
            cols = Some(match cols {
                None => d,
                Some(c) => c.hstack(&d),
            });
        }
        // left null space: rows x with x * (R - L) = 0
        let kernel = cols.unwrap().transpose().kernel();
        SubspaceBasis::from_mat(&kernel)
    }

    /// The trace of left multiplication by a.
    pub fn trace_left(&self, a: &[Elem]) -> Elem {
        let lv = self.tower.levels();
        let m = self.lmat(a);
        let mut t = self.tower.zero(lv);
        for i in 0..self.dim {
            t = self.tower.add(lv, &t, m.get(i, i));
        }
        t
    }
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra({}, dim {})", self.name, self.dim)
    }
}

/// Quotient of an algebra by a two-sided ideal, together with the
/// projection (dim x qdim) and section (qdim x dim) matrices.
pub fn quotient_by_ideal(
    alg: &AlgRef,
    ideal: &SubspaceBasis,
    name: &str,
) -> Result<(AlgRef, Mat, Mat)> {
    let n = alg.dim();
    let r = ideal.dim();
    if r >= n {
        return Err(KextError::BadParameters("quotient by the whole algebra".into()));
    }
    let t = ideal.complete(); // n x n, first r rows span the ideal
    let tinv = t.inverse().expect("completion must be invertible");
    let q = n - r;
    // projection: coords in the completed basis, keep the last q
    let proj = tinv.submatrix(0, n, r, n); // n x q
    let section = t.submatrix(r, n, 0, n); // q x n
    let project = |v: &[Elem]| -> Vec<Elem> {
        Mat::from_rows(alg.tower(), vec![v.to_vec()])
            .matmul(&proj)
            .unwrap()
            .row_vec(0)
    };
    let mut sc = vec![vec![Vec::new(); q]; q];
    let basis_lift: Vec<Vec<Elem>> = (0..q).map(|i| section.row_vec(i)).collect();
    for i in 0..q {
        for j in 0..q {
            let prod = alg.mul_vec(&basis_lift[i], &basis_lift[j]);
            sc[i][j] = project(&prod);
        }
    }
    let unit = project(alg.unit());
    let quo = Algebra::new(alg.tower().clone(), name, sc, unit, vec![], None)?;
    Ok((quo, proj, section))
}
