//! Homomorphism spaces between modules.

use crate::algebra::construct::algebra_from_matrix_span;
use crate::algebra::core::AlgRef;
use crate::error::{KextError, Result};
use crate::exact::mat::Mat;
use crate::exact::scalar::Poly;
use crate::exact::tower::Tower;
use crate::modules::core::Module;

/// Basis of Hom_A(M, N) as matrices Phi (dim M x dim N) satisfying
/// rho_M(a) Phi = Phi rho_N(a); canonical echelon form on flattened entries.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<Mat>> {
    if !std::sync::Arc::ptr_eq(m.algebra(), n.algebra()) && m.algebra().sc() != n.algebra().sc() {
        return Err(KextError::DifferentAlgebras);
    }
    let tower = m.tower().clone();
    let (dm, dn) = (m.dim(), n.dim());
    if dm == 0 || dn == 0 {
        return Ok(vec![]);
    }
    let gens_m = m.generator_actions();
    let gens_n = n.generator_actions();
    // unknown Phi flattened row-major, x_(k*dn + l) = Phi[k][l];
    // constraint (g,i,j): sum_k A[i][k] Phi[k][j] - sum_l Phi[i][l] B[l][j] = 0
    let unknowns = dm * dn;
    let mut cols: Vec<Vec<crate::exact::tower::Elem>> = Vec::new();
    let lv = tower.levels();
    for (a, b) in gens_m.iter().zip(&gens_n) {
        for i in 0..dm {
            for j in 0..dn {
                let mut col = vec![tower.zero(lv); unknowns];
                for k in 0..dm {
                    // coefficient of Phi[k][j]
                    col[k * dn + j] = tower.add(lv, &col[k * dn + j], a.get(i, k));
                }
                for l in 0..dn {
                    // coefficient of Phi[i][l]
                    let c = tower.neg(lv, b.get(l, j));
                    col[i * dn + l] = tower.add(lv, &col[i * dn + l], &c);
                }
                cols.push(col);
            }
        }
    }
    // constraint matrix: unknowns x constraints; solutions are the left
    // kernel, i.e. the right kernel of the transpose
    let cmat = Mat::from_rows(&tower, cols); // constraints x unknowns
    let ker = cmat.kernel();
    let mut out = Vec::with_capacity(ker.rows());
    for r in 0..ker.rows() {
        out.push(Mat::from_flat(&tower, dm, dn, ker.row_vec(r)));
    }
    Ok(out)
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

/// End_A(M) realized as a structure-constant algebra together with its
/// basis of endomorphism matrices.
pub fn end_algebra(m: &Module, name: &str) -> Result<(AlgRef, Vec<Mat>)> {
    let basis = hom_space(m, m)?;
    if basis.is_empty() {
        return Err(KextError::BadParameters(
            "endomorphism algebra of the zero module".into(),
        ));
    }
    algebra_from_matrix_span(m.tower(), &basis, name)
}

/// Minimal polynomial of a square matrix over its tower.
pub fn min_poly(mat: &Mat, var: &str) -> Poly {
    let tower = mat.tower().clone();
    let n = mat.rows();
    let lv = tower.levels();
    let mut powers: Vec<Mat> = vec![Mat::identity(&tower, n)];
    loop {
        let k = powers.len();
        let next = powers[k - 1].matmul(mat).unwrap();
        // is next a combination of the previous powers?
        let stacked = Mat::from_rows(&tower, powers.iter().map(|p| p.flatten()).collect());
        if let Some(x) = stacked.solve_left(&next.flatten()) {
            // mat^k = sum x_i mat^i  ->  minpoly = t^k - sum x_i t^i
            let mut coeffs = vec![tower.zero(lv); k + 1];
            for (i, c) in x.iter().enumerate() {
                coeffs[i] = tower.neg(lv, c);
            }
            coeffs[k] = tower.one(lv);
            return Poly::new(tower, var, coeffs);
        }
        powers.push(next);
    }
}

/// Whether the matrices rho_M(g), mapped through Phi, intertwine; used to
/// double-check witnesses.
pub fn is_hom(m: &Module, n: &Module, phi: &Mat) -> bool {
    let gens_m = m.generator_actions();
    let gens_n = n.generator_actions();
    for (a, b) in gens_m.iter().zip(&gens_n) {
        let lhs = a.matmul(phi).unwrap();
        let rhs = phi.matmul(b).unwrap();
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Invertible homomorphism between two modules, if one can be found inside
/// the hom space pencil (always works for iso simple modules by Schur).
pub fn find_iso(m: &Module, n: &Module) -> Result<Option<Mat>> {
    if m.dim() != n.dim() {
        return Ok(None);
    }
    let homs = hom_space(m, n)?;
    for phi in &homs {
        if phi.inverse().is_some() {
            return Ok(Some(phi.clone()));
        }
    }
    // try small combinations
    let tower = m.tower().clone();
    let lv = tower.levels();
    for i in 0..homs.len() {
        for j in i + 1..homs.len() {
            for c in 1..=4i64 {
                let cand = homs[i].add(&homs[j].scale(&tower.from_int(lv, c))).unwrap();
                if cand.inverse().is_some() {
                    return Ok(Some(cand));
                }
            }
        }
    }
    Ok(None)
}

pub fn tower_of(m: &Module) -> Tower {
    m.tower().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::construct::*;
    use crate::algebra::groups;
    use crate::exact::scalar::towers;
    use crate::modules::core::regular_module;

    #[test]
    fn end_of_regular_c2_over_q() {
        // Q[C2] = Q x Q; End of the regular module is 2-dimensional
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C2]").unwrap();
        let m = regular_module(&a).unwrap();
        assert_eq!(hom_dim(&m, &m).unwrap(), 2);
    }

    #[test]
    fn end_of_regular_m2() {
        // M2(Q) regular module = S^2 for the 2-dim simple S; End = M2(Q)
        let a = matrix_algebra(towers::q(), 2, "M2").unwrap();
        let m = regular_module(&a).unwrap();
        assert_eq!(hom_dim(&m, &m).unwrap(), 4);
        let (e, _) = end_algebra(&m, "End").unwrap();
        assert_eq!(e.dim(), 4);
        assert!(!e.is_commutative());
    }

    #[test]
    fn min_poly_of_idempotent() {
        let q = towers::q();
        let mut m = Mat::zeros(&q, 2, 2);
        m.set(0, 0, q.one(0));
        let p = min_poly(&m, "x");
        // x^2 - x
        assert_eq!(p, Poly::from_ints(&q, "x", &[0, -1, 1]));
    }

    #[test]
    fn min_poly_of_identity() {
        let q = towers::q();
        let m = Mat::identity(&q, 3);
        let p = min_poly(&m, "x");
        assert_eq!(p, Poly::from_ints(&q, "x", &[-1, 1]));
    }

    #[test]
    fn hom_between_different_simples_is_zero() {
        // T2(Q) regular module: socle pieces give non-isomorphic simples
        let a = triangular_algebra(towers::q(), 2, "T2").unwrap();
        let m = regular_module(&a).unwrap();
        let s1 = m.spin(&[a.basis_vec(1)]); // E12 spans a 1-dim submodule
        let (sub, _) = m.submodule(&s1, "S").unwrap();
        let (quo, _) = m.quotient(&s1, "M/S").unwrap();
        // sub is the simple where E22 acts as 1; quo contains the other type
        let d = hom_dim(&sub, &quo).unwrap();
        assert!(d <= 1);
    }
}
