//! Socle, socle filtration, and semisimplification.

use serde::Serialize;

use crate::algebra::radical::radical;
use crate::error::Result;
use crate::exact::mat::{Mat, SubspaceBasis};
use crate::modules::core::{direct_sum_all, ModRef, Module};

/// soc(M) = {v : v * r = 0 for all r in rad(A)}: the largest semisimple
/// submodule.
pub fn socle(m: &Module) -> Result<SubspaceBasis> {
    let tower = m.tower().clone();
    let rad = radical(m.algebra())?;
    if rad.dim() == 0 || m.dim() == 0 {
        return Ok(SubspaceBasis::full(&tower, m.dim()));
    }
    let mut stacked: Option<Mat> = None;
    for i in 0..rad.dim() {
        let rho = m.act(&rad.basis().row_vec(i));
        stacked = Some(match stacked {
            None => rho,
            Some(s) => s.hstack(&rho),
        });
    }
    // v (row) with v * [rho(r_1) | rho(r_2) | ...] = 0
    let ker = stacked.unwrap().transpose().kernel();
    Ok(SubspaceBasis::from_mat(&ker))
}

#[derive(Debug, Clone, Serialize)]
pub struct FiltrationLayer {
    /// Dimension of soc^i(M) inside M.
    pub cumulative_dim: usize,
    /// Dimension of the i-th layer soc^i/soc^{i-1}.
    pub layer_dim: usize,
}

pub struct Filtration {
    /// Ascending chain 0 < soc(M) < soc^2(M) <= ... = M, in M coordinates.
    pub subspaces: Vec<SubspaceBasis>,
    /// The layer modules soc^i/soc^{i-1}.
    pub layers: Vec<ModRef>,
    pub report: Vec<FiltrationLayer>,
}

/// Ascending socle filtration computed through canonical quotients and
/// pullbacks.
pub fn socle_filtration(m: &ModRef) -> Result<Filtration> {
    let tower = m.tower().clone();
    let n = m.dim();
    let mut subspaces: Vec<SubspaceBasis> = Vec::new();
    let mut layers: Vec<ModRef> = Vec::new();
    let mut report = Vec::new();
    let mut current = SubspaceBasis::zero(&tower, n);
    let mut step = 0usize;
    while current.dim() < n {
        step += 1;
        let (quo, proj) = m.quotient(&current, &format!("{}/soc^{}", m.name(), step - 1))?;
        let s = socle(&quo)?;
        if s.dim() == 0 {
            return Err(crate::error::KextError::BadParameters(
                "socle filtration stalled; module has no semisimple part".into(),
            ));
        }
        // pull back: {v in M : image of v in the quotient lies in s}
        // completed basis coords: v belongs iff proj(v) in s
        let qdim = quo.dim();
        let pulled = pullback(&current, &proj, &s, n, qdim, &tower);
        let (layer, _) = quo.submodule(&s, &format!("soc-layer {step} of {}", m.name()))?;
        report.push(FiltrationLayer {
            cumulative_dim: pulled.dim(),
            layer_dim: layer.dim(),
        });
        layers.push(layer);
        subspaces.push(pulled.clone());
        current = pulled;
    }
    Ok(Filtration {
        subspaces,
        layers,
        report,
    })
}

/// Preimage of a quotient subspace under the projection, joined with the
/// kernel of the projection.
fn pullback(
    base: &SubspaceBasis,
    proj: &Mat,
    s: &SubspaceBasis,
    n: usize,
    _qdim: usize,
    _tower: &crate::exact::tower::Tower,
) -> SubspaceBasis {
    // rows v (in M) with proj(v) in s: solve v * proj * C = 0 where C has
    // columns completing s to the quotient (the non-pivot coordinates of the
    // reduced vector); equivalently kernel of proj * K where K = kernel
    // directions of s... simplest: kernel of (proj * Q) with Q projecting
    // onto a complement of s in the quotient.
    let t = s.complete();
    let tinv = t.inverse().expect("completion invertible");
    let r = s.dim();
    let qproj = tinv.submatrix(0, t.rows(), r, t.rows()); // qdim x (qdim - r)
    let total = proj.matmul(&qproj).unwrap(); // n x (qdim - r)
    let ker = total.transpose().kernel(); // rows v with v * total = 0
    let mut out = SubspaceBasis::from_mat(&ker);
    out = out.join(base);
    debug_assert_eq!(out.ambient(), n);
    out
}

/// Composition length: total number of simple factors across the socle
/// filtration layers.
pub fn composition_length(m: &ModRef) -> Result<usize> {
    if m.dim() == 0 {
        return Ok(0);
    }
    let f = socle_filtration(m)?;
    let mut len = 0;
    for layer in &f.layers {
        len += crate::modules::decompose::decompose(layer)?.summands.len();
    }
    Ok(len)
}

/// Direct sum of the socle-filtration layers: the semisimplification of M.
pub fn semisimplify(m: &ModRef) -> Result<ModRef> {
    if m.dim() == 0 {
        return Ok(m.clone());
    }
    let f = socle_filtration(m)?;
    direct_sum_all(&f.layers, &format!("ss({})", m.name()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::construct::*;
    use crate::algebra::groups;
    use crate::exact::scalar::towers;
    use crate::modules::core::regular_module;

    #[test]
    fn socle_of_semisimple_is_everything() {
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C3]").unwrap();
        let m = regular_module(&a).unwrap();
        assert_eq!(socle(&m).unwrap().dim(), 3);
    }

    #[test]
    fn socle_of_t2_regular() {
        // T2(Q) regular module: soc = span(E12, E22) of dimension 2
        let a = triangular_algebra(towers::q(), 2, "T2").unwrap();
        let m = regular_module(&a).unwrap();
        let s = socle(&m).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&a.basis_vec(1)));
        assert!(s.contains(&a.basis_vec(2)));
    }

    #[test]
    fn filtration_of_t2() {
        let a = triangular_algebra(towers::q(), 2, "T2").unwrap();
        let m = regular_module(&a).unwrap();
        let f = socle_filtration(&m).unwrap();
        let dims: Vec<usize> = f.report.iter().map(|l| l.cumulative_dim).collect();
        assert_eq!(dims, vec![2, 3]);
        let layer_dims: Vec<usize> = f.report.iter().map(|l| l.layer_dim).collect();
        assert_eq!(layer_dims, vec![2, 1]);
    }

    #[test]
    fn semisimplification_of_gf2_c2() {
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(towers::gf(2), g, "GF(2)[C2]").unwrap();
        let m = regular_module(&a).unwrap();
        let ss = semisimplify(&m).unwrap();
        assert_eq!(ss.dim(), 2);
        // semisimplification is annihilated by the radical
        assert_eq!(socle(&ss).unwrap().dim(), 2);
    }

    #[test]
    fn dual_numbers_filtration() {
        use crate::exact::scalar::Poly;
        let q = towers::q();
        let f = Poly::from_ints(&q, "x", &[0, 0, 1]);
        let a = poly_quotient_algebra(&f, "Q[x]/(x^2)").unwrap();
        let m = regular_module(&a).unwrap();
        let fil = socle_filtration(&m).unwrap();
        assert_eq!(fil.layers.len(), 2);
        assert_eq!(fil.report[0].layer_dim, 1);
    }
}
