//! Splitting of extended simples and the right-ideal / subobject bijection
//! for E' = F'⊗End(S) acting on t(S).

use serde::Serialize;

use crate::algebra::core::AlgRef;
use crate::error::{KextError, Result};
use crate::exact::mat::{Mat, SubspaceBasis};
use crate::exact::tower::{Elem, Tower};
use crate::modules::core::{regular_module, ModRef};
use crate::modules::decompose::{decompose, is_simple};
use crate::modules::hom::end_algebra;
use crate::scalarext::{extend_algebra, extend_module, TowerInclusion};

const ENUM_LIMIT: u128 = 1 << 16;

#[derive(Debug, Clone, Serialize)]
pub struct SplitReport {
    pub simple: String,
    pub dim: usize,
    pub end_dim_small: usize,
    pub end_dim_large: usize,
    /// Whether t(S) is semisimple (None over fields without a radical
    /// algorithm).
    pub semisimple: Option<bool>,
    /// (dimension, multiplicity) per isomorphism class of simple summands
    /// of the semisimplification of t(S).
    pub classes: Vec<(usize, usize)>,
    /// Composition length of t(S).
    pub length_ts: Option<usize>,
    /// Length of E' = F'⊗End(S) as a right module over itself.
    pub length_end: Option<usize>,
    pub pass: bool,
}

/// How the simple S splits after scalar extension, cross-checked against
/// the length of E' = F'⊗End(S).
pub fn split_simple(s: &ModRef, inc: &TowerInclusion) -> Result<SplitReport> {
    if !is_simple(s)? {
        return Err(KextError::NotSimple);
    }
    let (endo, _) = end_algebra(s, &format!("End({})", s.name()))?;
    let end_dim_small = endo.dim();
    let ext_alg = extend_algebra(s.algebra(), inc)?;
    let ts = extend_module(s, &ext_alg, inc)?;
    let eprime = extend_algebra(&endo, inc)?;
    let end_dim_large = eprime.dim();

    let (semisimple, classes, length_ts) = match decompose(&ts) {
        Ok(dec) => {
            let classes: Vec<(usize, usize)> = dec
                .classes
                .iter()
                .map(|&(rep, mult)| (dec.summands[rep].module.dim(), mult))
                .collect();
            (Some(dec.input_semisimple), classes, Some(dec.summands.len()))
        }
        Err(KextError::UnsupportedField(_)) => (None, Vec::new(), None),
        Err(e) => return Err(e),
    };
    let length_end = match decompose(&regular_module(&eprime)?) {
        Ok(dec) => Some(dec.summands.len()),
        Err(KextError::UnsupportedField(_)) => None,
        Err(e) => return Err(e),
    };
    // dim is preserved by reinterpretation; lengths must agree when both
    // sides are computable
    let pass = ts.dim() == s.dim()
        && match (length_ts, length_end) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
    Ok(SplitReport {
        simple: s.name().to_string(),
        dim: s.dim(),
        end_dim_small,
        end_dim_large,
        semisimple,
        classes,
        length_ts,
        length_end,
        pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeReport {
    pub ideal_count: usize,
    pub submodule_count: usize,
    pub bijective: bool,
    pub inclusions_preserved: bool,
    pub pass: bool,
}

fn push_unique(list: &mut Vec<SubspaceBasis>, s: SubspaceBasis) -> bool {
    if list.iter().any(|x| x.basis() == s.basis()) {
        false
    } else {
        list.push(s);
        true
    }
}

/// Projective representatives of the nonzero vectors of F^n: first nonzero
/// coordinate normalized to 1. Cyclic submodules only depend on the line.
fn projective_vectors(tower: &Tower, n: usize) -> Result<Vec<Vec<Elem>>> {
    let lv = tower.levels();
    let q = tower.field_size(lv).ok_or(KextError::TooLarge)?;
    if q.checked_pow(n as u32).is_none_or(|t| t > ENUM_LIMIT) {
        return Err(KextError::TooLarge);
    }
    let field = tower.enumerate(lv).ok_or(KextError::TooLarge)?;
    let mut out = Vec::new();
    for pivot in 0..n {
        // zeros before the pivot, 1 at it, arbitrary entries after
        let tail = n - pivot - 1;
        let mut idx = vec![0usize; tail];
        'pivot: loop {
            let mut v = vec![tower.zero(lv); n];
            v[pivot] = tower.one(lv);
            for (k, &i) in idx.iter().enumerate() {
                v[pivot + 1 + k] = field[i].clone();
            }
            out.push(v);
            let mut pos = 0;
            loop {
                if pos == tail {
                    break 'pivot;
                }
                idx[pos] += 1;
                if idx[pos] < field.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
    Ok(out)
}

/// The full lattice of submodules: cyclic submodules of every vector line,
/// closed under joins. (Every submodule is the join of the cyclic
/// submodules of its elements, so the closure is exhaustive. The cyclic
/// submodule of v is span{v * rho(e_k)}, one pass over the basis.)
pub fn all_submodules(m: &ModRef) -> Result<Vec<SubspaceBasis>> {
    let tower = m.tower().clone();
    let mut lattice: Vec<SubspaceBasis> = vec![SubspaceBasis::zero(&tower, m.dim())];
    for v in projective_vectors(&tower, m.dim())? {
        let vm = Mat::from_rows(&tower, vec![v]);
        let rows: Vec<Vec<Elem>> = m
            .action()
            .iter()
            .map(|rho| vm.matmul(rho).unwrap().row_vec(0))
            .collect();
        push_unique(
            &mut lattice,
            SubspaceBasis::from_rows(&tower, m.dim(), rows),
        );
    }
    // close under pairwise joins
    loop {
        let mut added = false;
        let snapshot = lattice.clone();
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                if push_unique(&mut lattice, snapshot[i].join(&snapshot[j])) {
                    added = true;
                }
            }
        }
        if !added {
            return Ok(lattice);
        }
    }
}

/// All right ideals of a finite algebra, via the regular module.
pub fn all_right_ideals(alg: &AlgRef) -> Result<Vec<SubspaceBasis>> {
    all_submodules(&regular_module(alg)?)
}

/// Exhaustively verifies the inclusion-preserving bijection between right
/// ideals of E' = F'⊗End(S) and submodules of t(S): a right ideal I maps to
/// the submodule generated by the images of the endomorphisms in I.
pub fn ideal_subobject_check(s: &ModRef, inc: &TowerInclusion) -> Result<LatticeReport> {
    if !is_simple(s)? {
        return Err(KextError::NotSimple);
    }
    let (endo, endo_basis) = end_algebra(s, &format!("End({})", s.name()))?;
    let eprime = extend_algebra(&endo, inc)?;
    let ext_alg = extend_algebra(s.algebra(), inc)?;
    let ts = extend_module(s, &ext_alg, inc)?;
    let tower = inc.large().clone();
    let lv = tower.levels();
    // extended echelon basis of End(S), identified with a basis of End(t(S))
    let phi: Vec<Mat> = endo_basis.iter().map(|b| inc.extend_mat(b)).collect();

    let ideals = all_right_ideals(&eprime)?;
    let submodules = all_submodules(&ts)?;

    // I -> submodule generated by images of a basis of I
    let image_of = |ideal: &SubspaceBasis| -> SubspaceBasis {
        let mut acc = SubspaceBasis::zero(&tower, ts.dim());
        for r in 0..ideal.dim() {
            let coords = ideal.basis().row(r);
            let mut mat = Mat::zeros(&tower, ts.dim(), ts.dim());
            for (k, c) in coords.iter().enumerate() {
                if !tower.is_zero_elem(c) {
                    mat = mat.add(&phi[k].scale(c)).unwrap();
                }
            }
            acc = acc.join(&SubspaceBasis::from_mat(&mat));
        }
        let _ = lv;
        acc
    };

    let images: Vec<SubspaceBasis> = ideals.iter().map(image_of).collect();
    // every image must be a submodule of t(S)
    let mut bijective = images.iter().all(|im| ts.is_stable(im));
    // injective and surjective onto the submodule lattice
    let mut seen: Vec<&SubspaceBasis> = Vec::new();
    for im in &images {
        if seen.iter().any(|x| x.basis() == im.basis()) {
            bijective = false;
        }
        seen.push(im);
    }
    if images.len() != submodules.len()
        || !images
            .iter()
            .all(|im| submodules.iter().any(|s| s.basis() == im.basis()))
    {
        bijective = false;
    }
    // inclusion preserved in both directions on every pair
    let mut inclusions_preserved = true;
    for i in 0..ideals.len() {
        for j in 0..ideals.len() {
            let sub_ideal = ideals[j].contains_subspace(&ideals[i]);
            let sub_image = images[j].contains_subspace(&images[i]);
            if sub_ideal != sub_image {
                inclusions_preserved = false;
            }
        }
    }
    let pass = bijective && inclusions_preserved;
    Ok(LatticeReport {
        ideal_count: ideals.len(),
        submodule_count: submodules.len(),
        bijective,
        inclusions_preserved,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::construct::*;
    use crate::algebra::groups;
    use crate::exact::scalar::Poly;
    use crate::modules::decompose::find_proper_submodule;
    use crate::scalarext::testutil::{gf4_over_gf2, qi_over_q};

    fn gf2_c3_simple2() -> ModRef {
        let inc = gf4_over_gf2();
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(inc.small().clone(), g, "GF(2)[C3]").unwrap();
        let m = regular_module(&a).unwrap();
        let d = decompose(&m).unwrap();
        for s in &d.summands {
            if s.module.dim() == 2 {
                return s.module.clone();
            }
        }
        panic!("expected a 2-dim simple");
    }

    #[test]
    fn gf4_simple_splits_into_two_lines() {
        let inc = gf4_over_gf2();
        let f2 = inc.small().clone();
        let f = Poly::from_ints(&f2, "x", &[1, 1, 1]);
        let a = poly_quotient_algebra(&f, "GF(4)/GF(2)").unwrap();
        let s = regular_module(&a).unwrap();
        let r = split_simple(&s, &inc).unwrap();
        assert_eq!(r.end_dim_small, 2);
        assert_eq!(r.classes, vec![(1, 1), (1, 1)]);
        assert_eq!(r.length_ts, Some(2));
        assert_eq!(r.length_end, Some(2));
        assert!(r.pass);
    }

    #[test]
    fn gf2_c3_simple_splits() {
        let inc = gf4_over_gf2();
        let s = gf2_c3_simple2();
        let r = split_simple(&s, &inc).unwrap();
        assert_eq!(r.semisimple, Some(true));
        assert_eq!(r.classes.iter().map(|c| c.1).sum::<usize>(), 2);
        assert!(r.classes.iter().all(|c| c.0 == 1));
        assert!(r.pass);
    }

    #[test]
    fn ideal_lattice_gf4_over_gf2() {
        let inc = gf4_over_gf2();
        let f2 = inc.small().clone();
        let f = Poly::from_ints(&f2, "x", &[1, 1, 1]);
        let a = poly_quotient_algebra(&f, "GF(4)/GF(2)").unwrap();
        let s = regular_module(&a).unwrap();
        let r = ideal_subobject_check(&s, &inc).unwrap();
        assert_eq!(r.ideal_count, 4);
        assert_eq!(r.submodule_count, 4);
        assert!(r.pass);
    }

    #[test]
    fn ideal_lattice_gf2_c3_simple() {
        let inc = gf4_over_gf2();
        let s = gf2_c3_simple2();
        let r = ideal_subobject_check(&s, &inc).unwrap();
        assert_eq!(r.ideal_count, 4);
        assert_eq!(r.submodule_count, 4);
        assert!(r.pass);
    }

    #[test]
    fn trivial_module_lattice() {
        let inc = gf4_over_gf2();
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(inc.small().clone(), g, "GF(2)[C2]").unwrap();
        use crate::exact::mat::Mat;
        let triv = crate::modules::core::Module::new(
            a.clone(),
            "triv",
            (0..2).map(|_| Mat::identity(a.tower(), 1)).collect(),
        )
        .unwrap();
        let r = ideal_subobject_check(&triv, &inc).unwrap();
        assert_eq!(r.ideal_count, 2);
        assert_eq!(r.submodule_count, 2);
        assert!(r.pass);
    }

    #[test]
    fn q_c3_simple_over_q_omega() {
        // the 2-dim simple of Q[C3] gains length 2 over Q(w)
        let mut b = crate::exact::factor::TowerBuilder::new(crate::exact::tower::Base::Rationals)
            .unwrap();
        let q = b.current().unwrap();
        b.add_algebraic("w", vec![q.one(0), q.one(0), q.one(0)]).unwrap();
        let inc = TowerInclusion::new(q.clone(), b.current().unwrap()).unwrap();
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(q, g, "Q[C3]").unwrap();
        let m = regular_module(&a).unwrap();
        let d = decompose(&m).unwrap();
        let s = d
            .summands
            .iter()
            .find(|s| s.module.dim() == 2)
            .unwrap()
            .module
            .clone();
        let r = split_simple(&s, &inc).unwrap();
        assert_eq!(r.length_ts, Some(2));
        assert_eq!(r.length_end, Some(2));
        assert!(r.pass);
    }

    #[test]
    fn quaternions_over_qi_stay_simple_per_summand() {
        let inc = qi_over_q();
        let q = inc.small().clone();
        let m1 = q.from_int(0, -1);
        let a = quaternion_algebra(q, &m1, &m1, "H").unwrap();
        let m = regular_module(&a).unwrap();
        // the regular module of H is simple as an H-module
        assert!(find_proper_submodule(&m).unwrap().is_none());
        let r = split_simple(&m, &inc).unwrap();
        assert_eq!(r.dim, 4);
        assert_eq!(r.end_dim_small, 4);
        assert_eq!(r.end_dim_large, 4);
        assert_eq!(r.semisimple, Some(true));
        assert!(r.pass);
    }
}
