//! Tensor products and duals of modules over group algebras, where the
//! stored multiplication table provides the diagonal action and inversion.

use crate::error::{KextError, Result};
use crate::exact::mat::Mat;
use crate::modules::core::{ModRef, Module};

fn kronecker(a: &Mat, b: &Mat) -> Mat {
    let tower = a.tower().clone();
    let lv = tower.levels();
    let (m, n) = (a.rows(), b.rows());
    Mat::from_fn(&tower, m * n, m * n, |i, j| {
        let (i1, i2) = (i / n, i % n);
        let (j1, j2) = (j / n, j % n);
        tower.mul(lv, a.get(i1, j1), b.get(i2, j2))
    })
}

/// M (x) N with the diagonal action g -> rho_M(g) (x) rho_N(g); only
/// defined over group algebras.
pub fn tensor_module(m: &Module, n: &Module, name: &str) -> Result<ModRef> {
    let alg = m.algebra();
    if !std::sync::Arc::ptr_eq(alg, n.algebra()) {
        return Err(KextError::DifferentAlgebras);
    }
    let Some(_) = alg.group() else {
        return Err(KextError::NotAGroupAlgebra);
    };
    let action = (0..alg.dim())
        .map(|g| kronecker(&m.action()[g], &n.action()[g]))
        .collect();
    Module::new(alg.clone(), name, action)
}

/// The dual module: g acts as the transpose of the action of g^{-1}.
pub fn dual_module(m: &Module, name: &str) -> Result<ModRef> {
    let alg = m.algebra();
    let Some(group) = alg.group() else {
        return Err(KextError::NotAGroupAlgebra);
    };
    let action = (0..alg.dim())
        .map(|g| m.action()[group.inv[g]].transpose())
        .collect();
    Module::new(alg.clone(), name, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::construct::group_algebra;
    use crate::algebra::groups;
    use crate::exact::scalar::towers;
    use crate::modules::core::regular_module;
    use crate::modules::hom::hom_dim;

    #[test]
    fn tensor_of_regulars_has_product_dim() {
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C2]").unwrap();
        let m = regular_module(&a).unwrap();
        let t = tensor_module(&m, &m, "m(x)m").unwrap();
        assert_eq!(t.dim(), 4);
    }

    #[test]
    fn dual_of_regular_is_isomorphic_for_c3() {
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C3]").unwrap();
        let m = regular_module(&a).unwrap();
        let d = dual_module(&m, "m*").unwrap();
        // F[G] is self-dual; hom space detects the isomorphism
        assert_eq!(hom_dim(&m, &d).unwrap(), hom_dim(&m, &m).unwrap());
    }

    #[test]
    fn non_group_algebra_rejected() {
        use crate::algebra::construct::matrix_algebra;
        let a = matrix_algebra(towers::q(), 2, "M2").unwrap();
        let m = regular_module(&a).unwrap();
        assert!(matches!(
            tensor_module(&m, &m, "t"),
            Err(KextError::NotAGroupAlgebra)
        ));
    }
}
