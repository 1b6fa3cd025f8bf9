//! Scalar extension along a tower inclusion: the functor t sending an
//! algebra E over F to F'⊗E and a module (X, mu) to (F'⊗X, mu⊗id). Since
//! inclusions are literal step-list extensions, both amount to
//! reinterpreting coefficients in the larger tower.

pub mod checks;
pub mod lattice;

use crate::algebra::core::{AlgRef, Algebra};
use crate::error::{KextError, Result};
use crate::exact::mat::Mat;
use crate::exact::parse::describe_tower;
use crate::exact::tower::{Elem, Step, Tower};
use crate::modules::core::{ModRef, Module};

pub use checks::{
    check_exactness, check_relative_full_faithfulness, check_semisimplicity_permanence,
    check_tensor_functoriality, FfReport, PermanenceReport, TensorReport,
};
pub use lattice::{ideal_subobject_check, split_simple, LatticeReport, SplitReport};

/// An extension F'/F of field towers: the large tower's step list literally
/// begins with the small tower's.
#[derive(Clone)]
pub struct TowerInclusion {
    small: Tower,
    large: Tower,
    separable: bool,
}

impl TowerInclusion {
    pub fn new(small: Tower, large: Tower) -> Result<TowerInclusion> {
        if !large.extends(&small) {
            return Err(KextError::FieldMismatch);
        }
        // separable iff every added algebraic step is; transcendental steps
        // are separably generated and pass
        let separable = large.steps()[small.levels()..].iter().all(|s| match s {
            Step::Transcendental { .. } => true,
            Step::Algebraic { separable, .. } => *separable,
        });
        Ok(TowerInclusion {
            small,
            large,
            separable,
        })
    }

    pub fn identity(t: &Tower) -> TowerInclusion {
        TowerInclusion {
            small: t.clone(),
            large: t.clone(),
            separable: true,
        }
    }

    pub fn small(&self) -> &Tower {
        &self.small
    }

    pub fn large(&self) -> &Tower {
        &self.large
    }

    pub fn is_separable(&self) -> bool {
        self.separable
    }

    pub fn is_trivial(&self) -> bool {
        self.small.levels() == self.large.levels()
    }

    /// Reinterprets a scalar of F as a scalar of F'.
    pub fn extend_scalar(&self, e: &Elem) -> Elem {
        self.large
            .embed(self.small.levels(), self.large.levels(), e)
    }

    pub fn extend_vec(&self, v: &[Elem]) -> Vec<Elem> {
        v.iter().map(|e| self.extend_scalar(e)).collect()
    }

    /// Entrywise reinterpretation of a matrix over F as a matrix over F'.
    pub fn extend_mat(&self, m: &Mat) -> Mat {
        Mat::from_flat(
            &self.large,
            m.rows(),
            m.cols(),
            m.flatten().iter().map(|e| self.extend_scalar(e)).collect(),
        )
    }
}

impl std::fmt::Debug for TowerInclusion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} -> {}",
            describe_tower(&self.small),
            describe_tower(&self.large)
        )
    }
}

/// F'⊗E: the same structure constants read over the larger tower.
pub fn extend_algebra(alg: &AlgRef, inc: &TowerInclusion) -> Result<AlgRef> {
    if alg.tower().as_ref() != inc.small.as_ref() {
        return Err(KextError::FieldMismatch);
    }
    let n = alg.dim();
    let mut sc = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            sc[i][j] = inc.extend_vec(&alg.sc()[i][j]);
        }
    }
    let unit = inc.extend_vec(alg.unit());
    let gens = alg.generators().iter().map(|g| inc.extend_vec(g)).collect();
    let name = format!("{} over {}", alg.name(), describe_tower(&inc.large));
    Algebra::new(inc.large.clone(), &name, sc, unit, gens, alg.group().cloned())
}

/// t(M): the same action matrices over the extended algebra.
pub fn extend_module(m: &ModRef, ext_alg: &AlgRef, inc: &TowerInclusion) -> Result<ModRef> {
    if m.algebra().tower().as_ref() != inc.small.as_ref()
        || ext_alg.tower().as_ref() != inc.large.as_ref()
        || ext_alg.dim() != m.algebra().dim()
    {
        return Err(KextError::FieldMismatch);
    }
    let action = m.action().iter().map(|rho| inc.extend_mat(rho)).collect();
    Module::new(ext_alg.clone(), &format!("t({})", m.name()), action)
}

/// Convenience: extend the algebra and the module in one step.
pub fn extend_pair(m: &ModRef, inc: &TowerInclusion) -> Result<(AlgRef, ModRef)> {
    let ext_alg = extend_algebra(m.algebra(), inc)?;
    let tm = extend_module(m, &ext_alg, inc)?;
    Ok((ext_alg, tm))
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::TowerInclusion;
    use crate::exact::factor::TowerBuilder;
    use crate::exact::tower::Base;

    pub(crate) fn gf4_over_gf2() -> TowerInclusion {
        let mut b = TowerBuilder::new(Base::Prime(2)).unwrap();
        let f2 = b.current().unwrap();
        b.add_algebraic("w", vec![f2.one(0), f2.one(0), f2.one(0)]).unwrap();
        TowerInclusion::new(f2, b.current().unwrap()).unwrap()
    }

    pub(crate) fn qi_over_q() -> TowerInclusion {
        let mut b = TowerBuilder::new(Base::Rationals).unwrap();
        let q = b.current().unwrap();
        b.add_algebraic("i", vec![q.one(0), q.zero(0), q.one(0)]).unwrap();
        TowerInclusion::new(q, b.current().unwrap()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::testutil::{gf4_over_gf2, qi_over_q};
    use super::*;
    use crate::algebra::construct::*;
    use crate::algebra::groups;
    use crate::algebra::radical::is_semisimple;
    use crate::exact::scalar::{towers, Poly};
    use crate::modules::core::regular_module;

    #[test]
    fn identity_extension_is_trivial() {
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C3]").unwrap();
        let inc = TowerInclusion::identity(a.tower());
        let b = extend_algebra(&a, &inc).unwrap();
        assert_eq!(a.sc(), b.sc());
        assert_eq!(a.dim(), b.dim());
    }

    #[test]
    fn gf4_as_gf2_algebra_splits_after_extension() {
        // GF(4) as a 2-dim GF(2)-algebra, extended to GF(4): becomes
        // GF(4) x GF(4), so semisimple and commutative of dim 2
        let inc = gf4_over_gf2();
        let f2 = inc.small().clone();
        let f = Poly::from_ints(&f2, "x", &[1, 1, 1]);
        let a = poly_quotient_algebra(&f, "GF(4)/GF(2)").unwrap();
        let b = extend_algebra(&a, &inc).unwrap();
        assert_eq!(b.dim(), 2);
        assert!(is_semisimple(&b).unwrap());
        // idempotents exist: decompose the regular module into two lines
        let m = regular_module(&b).unwrap();
        let d = crate::modules::decompose::decompose(&m).unwrap();
        let dims: Vec<usize> = d.summands.iter().map(|s| s.module.dim()).collect();
        assert_eq!(dims, vec![1, 1]);
    }

    #[test]
    fn quaternions_stay_semisimple_over_qi() {
        let inc = qi_over_q();
        let q = inc.small().clone();
        let m1 = q.from_int(0, -1);
        let a = quaternion_algebra(q, &m1, &m1, "H").unwrap();
        let b = extend_algebra(&a, &inc).unwrap();
        assert!(is_semisimple(&b).unwrap());
        assert_eq!(b.center().dim(), 1);
        // M2(Q(i)): the regular module splits as two 2-dim simples
        let m = regular_module(&b).unwrap();
        let d = crate::modules::decompose::decompose(&m).unwrap();
        let mut dims: Vec<usize> = d.summands.iter().map(|s| s.module.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![2, 2]);
        assert_eq!(d.classes.len(), 1);
    }

    #[test]
    fn extension_preserves_module_validity() {
        let inc = gf4_over_gf2();
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(inc.small().clone(), g, "GF(2)[C3]").unwrap();
        let m = regular_module(&a).unwrap();
        let (_, tm) = extend_pair(&m, &inc).unwrap();
        assert_eq!(tm.dim(), 3);
    }
}
