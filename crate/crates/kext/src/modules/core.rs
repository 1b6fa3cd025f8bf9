//! Right modules over a structure-constant algebra, given by one action
//! matrix per algebra basis element (row-vector convention: v -> v * rho(a)).

use std::sync::Arc;

use crate::algebra::core::AlgRef;
use crate::error::{KextError, Result};
use crate::exact::mat::{Mat, SubspaceBasis};
use crate::exact::tower::{Elem, Tower};

pub struct Module {
    algebra: AlgRef,
    name: String,
    dim: usize,
    action: Vec<Mat>,
}

pub type ModRef = Arc<Module>;

impl Module {
    /// Validates that the matrices define a unital right action.
    pub fn new(algebra: AlgRef, name: &str, action: Vec<Mat>) -> Result<ModRef> {
        let n = algebra.dim();
        if action.len() != n {
            return Err(KextError::BadParameters(
                "one action matrix per algebra basis element required".into(),
            ));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(KextError::BadParameters(
                    "action matrices must be square of equal size".into(),
                ));
            }
            if m.tower() != algebra.tower() {
                return Err(KextError::FieldMismatch);
            }
        }
        let module = Module {
            algebra,
            name: name.to_string(),
            dim,
            action,
        };
        if dim > 0 {
            let alg = &module.algebra;
            // rho(1) = I
            let id = Mat::identity(alg.tower(), dim);
            if module.act(alg.unit()) != id {
                return Err(KextError::BadParameters(
                    "unit does not act as the identity".into(),
                ));
            }
            // rho(e_i) rho(e_j) = rho(e_i e_j)
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    let lhs = module.action[i].matmul(&module.action[j])?;
                    if lhs != module.act(&alg.sc()[i][j]) {
                        return Err(KextError::BadParameters(format!(
                            "action is not multiplicative at basis pair ({i}, {j})"
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(module))
    }

    pub fn algebra(&self) -> &AlgRef {
        &self.algebra
    }

    pub fn tower(&self) -> &Tower {
        self.algebra.tower()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    /// rho(a) for an algebra element in coordinates.
    pub fn act(&self, a: &[Elem]) -> Mat {
        let tower = self.tower();
        let _lv = tower.levels();
        let mut out = Mat::zeros(tower, self.dim, self.dim);
        for (k, c) in a.iter().enumerate() {
            if !tower.is_zero_elem(c) {
                out = out.add(&self.action[k].scale(c)).unwrap();
            }
        }
        out
    }

    pub fn act_vec(&self, v: &[Elem], a: &[Elem]) -> Vec<Elem> {
        Mat::from_rows(self.tower(), vec![v.to_vec()])
            .matmul(&self.act(a))
            .unwrap()
            .row_vec(0)
    }

    /// Action matrices of the algebra generators (with the unit they
    /// generate the algebra, so intertwining with these suffices).
    pub fn generator_actions(&self) -> Vec<Mat> {
        self.algebra
            .generators()
            .iter()
            .map(|g| self.act(g))
            .collect()
    }

    /// Smallest submodule containing the given vectors.
    pub fn spin(&self, vectors: &[Vec<Elem>]) -> SubspaceBasis {
        let tower = self.tower();
        let gens = self.generator_actions();
        let mut span = SubspaceBasis::from_rows(tower, self.dim, vectors.to_vec());
        loop {
            let mut grew = false;
            let basis = span.basis().clone();
            for g in &gens {
                let image = basis.matmul(g).unwrap();
                let joined = span.join(&SubspaceBasis::from_mat(&image));
                if joined.dim() > span.dim() {
                    span = joined;
                    grew = true;
                }
            }
            if !grew {
                return span;
            }
        }
    }

    /// Whether a subspace is stable under the action.
    pub fn is_stable(&self, sub: &SubspaceBasis) -> bool {
        for g in &self.generator_actions() {
            let image = sub.basis().matmul(g).unwrap();
            for i in 0..image.rows() {
                if !sub.contains(image.row(i)) {
                    return false;
                }
            }
        }
        true
    }

    /// Realizes a stable subspace as a module on its echelon basis.
    /// Returns the module and the inclusion matrix (sub-dim x dim).
    pub fn submodule(&self, sub: &SubspaceBasis, name: &str) -> Result<(ModRef, Mat)> {
        if !self.is_stable(sub) {
            return Err(KextError::BadParameters("subspace is not a submodule".into()));
        }
        let b = sub.basis().clone();
        let mut action = Vec::with_capacity(self.action.len());
        for rho in &self.action {
            let image = b.matmul(rho)?;
            // rows of image lie in the subspace; rewrite in its coordinates
            let rows = (0..image.rows())
                .map(|i| sub.coords(image.row(i)).expect("stable subspace"))
                .collect();
            action.push(Mat::from_rows(self.tower(), rows));
        }
        let m = Module::new(self.algebra.clone(), name, action)?;
        Ok((m, b))
    }

    /// Realizes the quotient by a stable subspace via the canonical
    /// completion of its echelon basis. Returns the module and the
    /// projection matrix (dim x quotient-dim).
    pub fn quotient(&self, sub: &SubspaceBasis, name: &str) -> Result<(ModRef, Mat)> {
        if !self.is_stable(sub) {
            return Err(KextError::BadParameters("subspace is not a submodule".into()));
        }
        let n = self.dim;
        let r = sub.dim();
        let t = sub.complete();
        let tinv = t.inverse().expect("completion is invertible");
        let proj = tinv.submatrix(0, n, r, n); // n x (n - r)
        let section = t.submatrix(r, n, 0, n); // (n - r) x n
        let mut action = Vec::with_capacity(self.action.len());
        for rho in &self.action {
            action.push(section.matmul(rho)?.matmul(&proj)?);
        }
        let m = Module::new(self.algebra.clone(), name, action)?;
        Ok((m, proj))
    }

    pub fn direct_sum(&self, other: &Module, name: &str) -> Result<ModRef> {
        if !Arc::ptr_eq(&self.algebra, &other.algebra) {
            return Err(KextError::DifferentAlgebras);
        }
        let tower = self.tower();
        let (d1, d2) = (self.dim, other.dim);
        let mut action = Vec::with_capacity(self.action.len());
        for (a, b) in self.action.iter().zip(&other.action) {
            let m = Mat::from_fn(tower, d1 + d2, d1 + d2, |i, j| {
                if i < d1 && j < d1 {
                    a.get(i, j).clone()
                } else if i >= d1 && j >= d1 {
                    b.get(i - d1, j - d1).clone()
                } else {
                    tower.zero(tower.levels())
                }
            });
            action.push(m);
        }
        Module::new(self.algebra.clone(), name, action)
    }
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Module({}, dim {})", self.name, self.dim)
    }
}

/// The regular right module: the algebra acting on itself by right
/// multiplication.
pub fn regular_module(alg: &AlgRef) -> Result<ModRef> {
    let action = (0..alg.dim())
        .map(|k| alg.rmat(&alg.basis_vec(k)))
        .collect();
    Module::new(alg.clone(), &format!("{}_reg", alg.name()), action)
}

/// Direct sum of several modules over the same algebra.
pub fn direct_sum_all(mods: &[ModRef], name: &str) -> Result<ModRef> {
    if mods.is_empty() {
        return Err(KextError::BadParameters("empty direct sum".into()));
    }
    let mut acc = mods[0].clone();
    for m in &mods[1..] {
        acc = acc.direct_sum(m, name)?;
    }
    if mods.len() == 1 {
        // rebuild to apply the requested name
        acc = Module::new(acc.algebra().clone(), name, acc.action().to_vec())?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::construct::*;
    use crate::algebra::groups;
    use crate::exact::scalar::towers;

    #[test]
    fn regular_module_of_group_algebra() {
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C3]").unwrap();
        let m = regular_module(&a).unwrap();
        assert_eq!(m.dim(), 3);
    }

    #[test]
    fn spin_in_triangular_regular() {
        let a = triangular_algebra(towers::q(), 2, "T2").unwrap();
        let m = regular_module(&a).unwrap();
        // basis order: E11, E12, E22. Spin of E12: E12*E11 = 0, E12*E22 = E12
        let v = a.basis_vec(1);
        let s = m.spin(&[v]);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn submodule_and_quotient_roundtrip() {
        let a = triangular_algebra(towers::q(), 2, "T2").unwrap();
        let m = regular_module(&a).unwrap();
        let s = m.spin(&[a.basis_vec(1)]);
        let (sub, _) = m.submodule(&s, "sub").unwrap();
        let (quo, _) = m.quotient(&s, "quo").unwrap();
        assert_eq!(sub.dim(), 1);
        assert_eq!(quo.dim(), 2);
    }

    #[test]
    fn direct_sum_dims() {
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C2]").unwrap();
        let m = regular_module(&a).unwrap();
        let s = m.direct_sum(&m, "m+m").unwrap();
        assert_eq!(s.dim(), 4);
    }
}
