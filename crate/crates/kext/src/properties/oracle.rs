//! Brute-force oracles over small finite fields: full subspace enumeration,
//! stability filtering, socle and composition length read off the lattice.

use crate::error::{KextError, Result};
use crate::exact::mat::SubspaceBasis;
use crate::exact::tower::{Elem, Tower};
use crate::modules::core::ModRef;

const VECTOR_LIMIT: u128 = 1 << 16;

pub struct OracleLattice {
    /// Every stable subspace, in canonical echelon form.
    pub submodules: Vec<SubspaceBasis>,
    /// Socle: join of the minimal nonzero submodules.
    pub socle: SubspaceBasis,
    /// Composition length: longest chain in the lattice.
    pub length: usize,
}

fn all_vectors(tower: &Tower, n: usize) -> Result<Vec<Vec<Elem>>> {
    let lv = tower.levels();
    let q = tower.field_size(lv).ok_or(KextError::TooLarge)?;
    if q.checked_pow(n as u32).is_none_or(|t| t > VECTOR_LIMIT) {
        return Err(KextError::TooLarge);
    }
    let field = tower.enumerate(lv).ok_or(KextError::TooLarge)?;
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        out.push(idx.iter().map(|&i| field[i].clone()).collect::<Vec<_>>());
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(out);
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

/// Every subspace of F^n, by breadth-first extension with single vectors.
/// Independent of any module structure.
pub fn all_subspaces(tower: &Tower, n: usize) -> Result<Vec<SubspaceBasis>> {
    let vectors = all_vectors(tower, n)?;
    let mut all: Vec<SubspaceBasis> = vec![SubspaceBasis::zero(tower, n)];
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for sp in &frontier {
            for v in &vectors {
                if sp.contains(v) {
                    continue;
                }
                let bigger = sp.join(&SubspaceBasis::from_rows(tower, n, vec![v.clone()]));
                if !all.iter().any(|x| x.basis() == bigger.basis()) {
                    all.push(bigger.clone());
                    next.push(bigger);
                }
            }
        }
        frontier = next;
    }
    Ok(all)
}

/// Checks stability against EVERY algebra basis element (not just the
/// generator set the engine uses), keeping the oracle independent.
fn is_stable_full(m: &ModRef, sp: &SubspaceBasis) -> bool {
    for rho in m.action() {
        let image = sp.basis().matmul(rho).unwrap();
        for i in 0..image.rows() {
            if !sp.contains(image.row(i)) {
                return false;
            }
        }
    }
    true
}

/// Full submodule lattice of a small finite-field module by exhaustive
/// subspace enumeration, with socle and length derived from the lattice.
pub fn oracle_submodule_lattice(m: &ModRef) -> Result<OracleLattice> {
    let tower = m.tower().clone();
    let n = m.dim();
    let submodules: Vec<SubspaceBasis> = all_subspaces(&tower, n)?
        .into_iter()
        .filter(|sp| is_stable_full(m, sp))
        .collect();
    // minimal nonzero submodules
    let mut socle = SubspaceBasis::zero(&tower, n);
    for sp in &submodules {
        if sp.dim() == 0 {
            continue;
        }
        let minimal = submodules
            .iter()
            .all(|x| x.dim() == 0 || x.basis() == sp.basis() || !sp.contains_subspace(x));
        if minimal {
            socle = socle.join(sp);
        }
    }
    // longest chain 0 < ... < M via recursion over the inclusion order
    fn longest_from(start: &SubspaceBasis, all: &[SubspaceBasis]) -> usize {
        let mut best = 0;
        for sp in all {
            if sp.dim() > start.dim() && sp.contains_subspace(start) && sp.basis() != start.basis()
            {
                best = best.max(1 + longest_from(sp, all));
            }
        }
        best
    }
    let length = longest_from(&SubspaceBasis::zero(&tower, n), &submodules);
    Ok(OracleLattice {
        submodules,
        socle,
        length,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::construct::group_algebra;
    use crate::algebra::groups;
    use crate::exact::scalar::towers;
    use crate::modules::core::regular_module;

    #[test]
    fn gf2_c2_regular_lattice() {
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(towers::gf(2), g, "GF(2)[C2]").unwrap();
        let m = regular_module(&a).unwrap();
        let l = oracle_submodule_lattice(&m).unwrap();
        // 0, span(1+g), whole: a chain of length 2
        assert_eq!(l.submodules.len(), 3);
        assert_eq!(l.socle.dim(), 1);
        assert_eq!(l.length, 2);
    }

    #[test]
    fn gf2_c3_regular_lattice() {
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(towers::gf(2), g, "GF(2)[C3]").unwrap();
        let m = regular_module(&a).unwrap();
        let l = oracle_submodule_lattice(&m).unwrap();
        // semisimple, length 2: 0, trivial, 2-dim simple, whole
        assert_eq!(l.submodules.len(), 4);
        assert_eq!(l.socle.dim(), 3);
        assert_eq!(l.length, 2);
    }

    #[test]
    fn subspace_counts_are_gaussian_binomials() {
        // GF(2)^3: 1 + 7 + 7 + 1 = 16 subspaces
        assert_eq!(all_subspaces(&towers::gf(2), 3).unwrap().len(), 16);
        // GF(3)^2: 1 + 4 + 1 = 6
        assert_eq!(all_subspaces(&towers::gf(3), 2).unwrap().len(), 6);
    }

    #[test]
    fn too_large_is_refused() {
        assert!(matches!(
            all_subspaces(&towers::gf(3), 20),
            Err(KextError::TooLarge)
        ));
    }
}
