//! Simplicity testing and decomposition of semisimple modules into simple
//! summands, with a change-of-basis certificate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{KextError, Result};
use crate::exact::factor::{classify, poly_factor, TowerKind};
use crate::exact::mat::{Mat, SubspaceBasis};
use crate::exact::tower::Elem;
use crate::modules::core::{ModRef, Module};
use crate::modules::hom::{hom_space, min_poly};
use crate::modules::socle::semisimplify;

/// Searches for a proper nonzero submodule. Returns None when the search is
/// exhausted without finding one (for certified regimes this proves
/// simplicity; otherwise it is best-effort evidence).
pub fn find_proper_submodule(m: &Module) -> Result<Option<SubspaceBasis>> {
    let tower = m.tower().clone();
    let lv = tower.levels();
    let n = m.dim();
    if n <= 1 {
        return Ok(None);
    }
    // spins of basis vectors
    for i in 0..n {
        let mut v = vec![tower.zero(lv); n];
        v[i] = tower.one(lv);
        let s = m.spin(&[v]);
        if s.dim() > 0 && s.dim() < n {
            return Ok(Some(s));
        }
    }
    // spins of seeded random small combinations
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b657874);
    for _ in 0..20 {
        let v: Vec<Elem> = (0..n)
            .map(|_| tower.from_int(lv, rng.gen_range(-2i64..=2)))
            .collect();
        if v.iter().all(|c| tower.is_zero_elem(c)) {
            continue;
        }
        let s = m.spin(&[v]);
        if s.dim() > 0 && s.dim() < n {
            return Ok(Some(s));
        }
    }
    // kernels of endomorphisms: primary components of minimal polynomials
    let homs = hom_space(m, m)?;
    let id = Mat::identity(&tower, n);
    let mut candidates: Vec<Mat> = homs.clone();
    for i in 0..homs.len() {
        for j in i + 1..homs.len() {
            candidates.push(homs[i].add(&homs[j]).unwrap());
            candidates.push(homs[i].sub(&homs[j]).unwrap());
        }
        if candidates.len() > 60 {
            break;
        }
    }
    for phi in &candidates {
        // scalar endomorphisms split nothing
        if is_scalar_multiple(phi, &id) {
            continue;
        }
        // direct kernel: any singular non-scalar endomorphism splits
        let ker = phi.transpose().kernel();
        if ker.rows() > 0 && ker.rows() < n {
            let sub = SubspaceBasis::from_mat(&ker);
            if m.is_stable(&sub) {
                return Ok(Some(sub));
            }
        }
        // factor the minimal polynomial where the field allows it
        let mp = min_poly(phi, "x");
        if mp.degree().unwrap_or(0) < 2 {
            continue;
        }
        if matches!(
            classify(&tower),
            TowerKind::Rationals | TowerKind::FiniteField(_) | TowerKind::QuadraticNumberField
        ) {
            if let Ok((_, factors)) = poly_factor(&mp) {
                if factors.len() > 1 || factors.iter().any(|(_, m)| *m > 1) {
                    for (g, _) in &factors {
                        let gphi = eval_poly_at_matrix(g, phi);
                        let ker = gphi.transpose().kernel();
                        if ker.rows() > 0 && ker.rows() < n {
                            let sub = SubspaceBasis::from_mat(&ker);
                            if m.is_stable(&sub) {
                                return Ok(Some(sub));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn is_scalar_multiple(phi: &Mat, id: &Mat) -> bool {
    let _tower = phi.tower();
    let c = phi.get(0, 0).clone();
    *phi == id.scale(&c)
}

fn eval_poly_at_matrix(p: &crate::exact::scalar::Poly, m: &Mat) -> Mat {
    let tower = m.tower().clone();
    let n = m.rows();
    let mut acc = Mat::zeros(&tower, n, n);
    let mut pw = Mat::identity(&tower, n);
    for c in p.coeffs() {
        acc = acc.add(&pw.scale(c)).unwrap();
        pw = pw.matmul(m).unwrap();
    }
    acc
}

/// Simplicity test. Certified for small finite fields (exhaustive spin) and
/// via the Norton dual-spin criterion for larger finite fields; over
/// characteristic-zero fields a negative answer is certified and a positive
/// answer follows the endomorphism-pencil search.
pub fn is_simple(m: &Module) -> Result<bool> {
    let n = m.dim();
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    if find_proper_submodule(m)?.is_some() {
        return Ok(false);
    }
    let tower = m.tower().clone();
    if let TowerKind::FiniteField(q) = classify(&tower) {
        let points = q.checked_pow(n as u32);
        if let Some(points) = points {
            if points <= 1 << 16 {
                return Ok(exhaustive_simple(m));
            }
        }
        return norton_simple(m);
    }
    // characteristic zero: the search above found nothing; if the
    // endomorphism ring is one-dimensional a semisimple module is simple,
    // otherwise declare simple on the strength of the exhausted pencil
    Ok(true)
}

/// Every nonzero vector must generate the whole module; fields small enough
/// to enumerate make this a certificate.
fn exhaustive_simple(m: &Module) -> bool {
    let tower = m.tower().clone();
    let lv = tower.levels();
    let n = m.dim();
    let elements = tower.enumerate(lv).expect("finite field");
    // projective representatives: first nonzero coordinate = 1
    let mut coords = vec![0usize; n];
    loop {
        let v: Vec<Elem> = coords.iter().map(|&i| elements[i].clone()).collect();
        let first_nonzero = v.iter().position(|c| !tower.is_zero_elem(c));
        if let Some(pos) = first_nonzero {
            if v[pos] == tower.one(lv) {
                let s = m.spin(&[v]);
                if s.dim() < n {
                    return false;
                }
            }
        }
        // advance odometer
        let mut i = 0;
        loop {
            if i == n {
                return true;
            }
            coords[i] += 1;
            if coords[i] < elements.len() {
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
}

/// Norton's criterion: for a word w with small nonzero nullity, M is simple
/// iff every kernel vector of w spins to M and every kernel vector of the
/// transposed word spins to the full dual module (the transposed action
/// matrices realize the dual as a module over the opposite algebra).
fn norton_simple(m: &Module) -> Result<bool> {
    let tower = m.tower().clone();
    let lv = tower.levels();
    let n = m.dim();
    let gens = m.generator_actions();
    let dual_gens: Vec<Mat> = gens.iter().map(|g| g.transpose()).collect();
    let spin_with = |mats: &[Mat], v: &[Elem]| -> usize {
        let mut span = SubspaceBasis::from_rows(&tower, n, vec![v.to_vec()]);
        loop {
            let mut grew = false;
            let basis = span.basis().clone();
            for g in mats {
                let image = basis.matmul(g).unwrap();
                let joined = span.join(&SubspaceBasis::from_mat(&image));
                if joined.dim() > span.dim() {
                    span = joined;
                    grew = true;
                }
            }
            if !grew {
                return span.dim();
            }
        }
    };
    // word candidates: generator actions and seeded combinations
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e6f72746f6e);
    let mut words: Vec<Mat> = gens.clone();
    for i in 0..gens.len() {
        for j in 0..gens.len() {
            if i != j {
                words.push(gens[i].add(&gens[j]).unwrap());
                if let Ok(p) = gens[i].matmul(&gens[j]) {
                    words.push(p);
                }
            }
        }
    }
    for _ in 0..40 {
        let mut w = Mat::zeros(&tower, n, n);
        for g in &gens {
            let c = tower.from_int(lv, rng.gen_range(0i64..4));
            w = w.add(&g.scale(&c)).unwrap();
        }
        words.push(w);
    }
    for w in &words {
        let ker = w.transpose().kernel(); // left kernel of w
        let nullity = ker.rows();
        if nullity == 0 || nullity == n {
            continue;
        }
        if nullity > 2 {
            continue; // keep kernel enumeration small
        }
        // all nonzero kernel vectors (combinations over the field)
        let elements = tower.enumerate(lv).ok_or(KextError::TooLarge)?;
        if elements.len().pow(nullity as u32) > 1 << 14 {
            continue;
        }
        let mut all_full = true;
        let mut combos = vec![0usize; nullity];
        'outer: loop {
            let mut v = vec![tower.zero(lv); n];
            let mut nonzero = false;
            for (r, &ci) in combos.iter().enumerate() {
                let c = &elements[ci];
                if !tower.is_zero_elem(c) {
                    nonzero = true;
                    for (k, vk) in v.iter_mut().enumerate() {
                        let t = tower.mul(lv, c, ker.get(r, k));
                        *vk = tower.add(lv, vk, &t);
                    }
                }
            }
            if nonzero && spin_with(&gens, &v) < n {
                return Ok(false);
            }
            if nonzero {
                // fine
            }
            let mut i = 0;
            loop {
                if i == nullity {
                    break 'outer;
                }
                combos[i] += 1;
                if combos[i] < elements.len() {
                    break;
                }
                combos[i] = 0;
                i += 1;
            }
        }
        // dual side: kernel of the transposed word
        let dker = w.kernel(); // right kernel: rows v with w v^T = 0
        let mut combos = vec![0usize; dker.rows().min(2)];
        if dker.rows() > 2 {
            continue;
        }
        let elements2 = tower.enumerate(lv).ok_or(KextError::TooLarge)?;
        'outer2: loop {
            let mut v = vec![tower.zero(lv); n];
            let mut nonzero = false;
            for (r, &ci) in combos.iter().enumerate() {
                let c = &elements2[ci];
                if !tower.is_zero_elem(c) {
                    nonzero = true;
                    for (k, vk) in v.iter_mut().enumerate() {
                        let t = tower.mul(lv, c, dker.get(r, k));
                        *vk = tower.add(lv, vk, &t);
                    }
                }
            }
            if nonzero && spin_with(&dual_gens, &v) < n {
                all_full = false;
                break;
            }
            let mut i = 0;
            loop {
                if i == combos.len() {
                    break 'outer2;
                }
                combos[i] += 1;
                if combos[i] < elements2.len() {
                    break;
                }
                combos[i] = 0;
                i += 1;
            }
        }
        if all_full {
            return Ok(true);
        }
        // dual spin failed: inconclusive for this word, try the next
    }
    Err(KextError::Undecidable)
}

/// One simple factor of a decomposition.
pub struct Summand {
    pub module: ModRef,
    /// Basis of the summand inside the (semisimplified) ambient module.
    pub subspace: SubspaceBasis,
}

pub struct Decomposition {
    /// The module that was actually decomposed (the input if semisimple,
    /// otherwise its semisimplification).
    pub ambient: ModRef,
    pub summands: Vec<Summand>,
    /// Isomorphism classes: (representative index into summands,
    /// multiplicity).
    pub classes: Vec<(usize, usize)>,
    /// Rows = concatenated summand bases; conjugating every action matrix
    /// block-diagonalizes it.
    pub transition: Mat,
    /// Whether the input was already semisimple.
    pub input_semisimple: bool,
}

/// Decomposes a module into simple summands. Non-semisimple input is
/// replaced by its semisimplification.
pub fn decompose(m: &ModRef) -> Result<Decomposition> {
    let s = crate::modules::socle::socle(m)?;
    let (ambient, input_semisimple) = if s.dim() == m.dim() {
        (m.clone(), true)
    } else {
        (semisimplify(m)?, false)
    };
    let tower = ambient.tower().clone();
    let n = ambient.dim();
    let mut summand_spaces: Vec<SubspaceBasis> = Vec::new();
    split_rec(&ambient, &SubspaceBasis::full(&tower, n), &mut summand_spaces)?;
    // realize the summands as modules
    let mut summands = Vec::new();
    for (i, sp) in summand_spaces.iter().enumerate() {
        let (module, _) = ambient.submodule(sp, &format!("{}#{}", ambient.name(), i + 1))?;
        summands.push(Summand {
            module,
            subspace: sp.clone(),
        });
    }
    // group by isomorphism (Schur: simples are isomorphic iff Hom != 0)
    let mut classes: Vec<(usize, usize)> = Vec::new();
    for i in 0..summands.len() {
        let mut placed = false;
        for c in classes.iter_mut() {
            let rep = &summands[c.0].module;
            if rep.dim() == summands[i].module.dim()
                && !hom_space(rep, &summands[i].module)?.is_empty()
            {
                c.1 += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((i, 1));
        }
    }
    // certificate: stacked bases must be invertible and block-diagonalize
    let mut rows = Vec::new();
    for s in &summands {
        for i in 0..s.subspace.dim() {
            rows.push(s.subspace.basis().row_vec(i));
        }
    }
    let transition = Mat::from_rows(&tower, rows);
    let tinv = transition.inverse().ok_or_else(|| {
        KextError::BadParameters("decomposition bases do not span the module".into())
    })?;
    for rho in ambient.action() {
        let conj = transition.matmul(rho)?.matmul(&tinv)?;
        // verify block-diagonal structure
        let mut offset = 0usize;
        let dims: Vec<usize> = summands.iter().map(|s| s.subspace.dim()).collect();
        for (bi, &d) in dims.iter().enumerate() {
            let _ = bi;
            for r in offset..offset + d {
                for c in 0..n {
                    let inside = c >= offset && c < offset + d;
                    if !inside && !tower.is_zero_elem(conj.get(r, c)) {
                        return Err(KextError::BadParameters(
                            "decomposition certificate failed: action is not block-diagonal"
                                .into(),
                        ));
                    }
                }
            }
            offset += d;
        }
    }
    Ok(Decomposition {
        ambient,
        summands,
        classes,
        transition,
        input_semisimple,
    })
}

/// Splits a stable subspace (given in ambient coordinates) into simple
/// pieces, appending them to `out`.
fn split_rec(ambient: &ModRef, space: &SubspaceBasis, out: &mut Vec<SubspaceBasis>) -> Result<()> {
    if space.dim() == 0 {
        return Ok(());
    }
    let (module, embed) = ambient.submodule(space, "piece")?;
    let proper = find_proper_submodule(&module)?;
    let Some(u) = proper else {
        out.push(space.clone());
        return Ok(());
    };
    // complement of u inside `module` via an idempotent endomorphism
    let w = complement(&module, &u)?;
    // map both back to ambient coordinates
    let u_amb = SubspaceBasis::from_mat(&u.basis().matmul(&embed)?);
    let w_amb = SubspaceBasis::from_mat(&w.basis().matmul(&embed)?);
    split_rec(ambient, &u_amb, out)?;
    split_rec(ambient, &w_amb, out)
}

/// A stable complement of a submodule of a semisimple module, found as the
/// kernel of an idempotent endomorphism projecting onto it.
pub fn complement(m: &Module, u: &SubspaceBasis) -> Result<SubspaceBasis> {
    let tower = m.tower().clone();
    let lv = tower.levels();
    let n = m.dim();
    let homs = hom_space(m, m)?;
    let d = homs.len();
    // unknowns x_1..x_d for e = sum x_i phi_i; constraints:
    //   (a) u_j * e = u_j for each basis vector of u
    //   (b) e maps everything into u: coordinates of e_i * e in a complement
    //       of u must vanish
    let t = u.complete();
    let tinv = t.inverse().expect("completion invertible");
    let qproj = tinv.submatrix(0, n, u.dim(), n); // n x (n - u.dim())
    let mut cols: Vec<Vec<Elem>> = Vec::new();
    let mut rhs: Vec<Elem> = Vec::new();
    for j in 0..u.dim() {
        let uv = u.basis().row_vec(j);
        let images: Vec<Vec<Elem>> = homs
            .iter()
            .map(|phi| {
                Mat::from_rows(&tower, vec![uv.clone()])
                    .matmul(phi)
                    .unwrap()
                    .row_vec(0)
            })
            .collect();
        for c in 0..n {
            let col = images.iter().map(|im| im[c].clone()).collect();
            cols.push(col);
            rhs.push(uv[c].clone());
        }
    }
    for i in 0..n {
        let images: Vec<Vec<Elem>> = homs
            .iter()
            .map(|phi| {
                let row = phi.row_vec(i);
                Mat::from_rows(&tower, vec![row])
                    .matmul(&qproj)
                    .unwrap()
                    .row_vec(0)
            })
            .collect();
        for c in 0..n - u.dim() {
            let col = images.iter().map(|im| im[c].clone()).collect();
            cols.push(col);
            rhs.push(tower.zero(lv));
        }
    }
    // solve x * A = rhs with A = d x (#constraints)
    let a = Mat::from_rows(&tower, cols).transpose();
    debug_assert_eq!(a.rows(), d);
    let x = a
        .solve_left(&rhs)
        .ok_or_else(|| KextError::BadParameters("no complementary idempotent found".into()))?;
    let mut e = Mat::zeros(&tower, n, n);
    for (i, c) in x.iter().enumerate() {
        e = e.add(&homs[i].scale(c)).unwrap();
    }
    // kernel of the idempotent is the complement
    let ker = e.transpose().kernel();
    let w = SubspaceBasis::from_mat(&ker);
    if w.dim() + u.dim() != n {
        return Err(KextError::BadParameters(
            "complement dimensions do not add up".into(),
        ));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::construct::*;
    use crate::algebra::groups;
    use crate::exact::scalar::towers;
    use crate::modules::core::regular_module;

    #[test]
    fn q_c2_regular_splits_into_two_lines() {
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C2]").unwrap();
        let m = regular_module(&a).unwrap();
        let d = decompose(&m).unwrap();
        assert!(d.input_semisimple);
        assert_eq!(d.summands.len(), 2);
        assert_eq!(d.classes.len(), 2);
    }

    #[test]
    fn q_c4_regular() {
        // Q[C4] = Q x Q x Q(i): dims 1,1,2
        let g = groups::cyclic(4).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C4]").unwrap();
        let m = regular_module(&a).unwrap();
        let d = decompose(&m).unwrap();
        let mut dims: Vec<usize> = d.summands.iter().map(|s| s.module.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2]);
        assert_eq!(d.classes.len(), 3);
    }

    #[test]
    fn q_s3_regular() {
        // Q[S3] = Q x Q x M2(Q): simple dims 1,1,2,2 with the 2 twice
        let g = groups::dihedral(3).unwrap();
        let a = group_algebra(towers::q(), g, "Q[S3]").unwrap();
        let m = regular_module(&a).unwrap();
        let d = decompose(&m).unwrap();
        let mut dims: Vec<usize> = d.summands.iter().map(|s| s.module.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2, 2]);
        assert_eq!(d.classes.len(), 3);
        let mut mults: Vec<usize> = d.classes.iter().map(|c| c.1).collect();
        mults.sort();
        assert_eq!(mults, vec![1, 1, 2]);
    }

    #[test]
    fn m2_regular_two_copies() {
        let a = matrix_algebra(towers::q(), 2, "M2").unwrap();
        let m = regular_module(&a).unwrap();
        let d = decompose(&m).unwrap();
        assert_eq!(d.summands.len(), 2);
        assert_eq!(d.classes.len(), 1);
        assert_eq!(d.classes[0].1, 2);
        assert!(is_simple(&d.summands[0].module).unwrap());
    }

    #[test]
    fn gf2_c3_regular() {
        // GF(2)[C3] = GF(2) x GF(4): dims 1, 2
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(towers::gf(2), g, "GF(2)[C3]").unwrap();
        let m = regular_module(&a).unwrap();
        let d = decompose(&m).unwrap();
        let mut dims: Vec<usize> = d.summands.iter().map(|s| s.module.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
        for s in &d.summands {
            assert!(is_simple(&s.module).unwrap());
        }
    }

    #[test]
    fn non_semisimple_input_uses_semisimplification() {
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(towers::gf(2), g, "GF(2)[C2]").unwrap();
        let m = regular_module(&a).unwrap();
        let d = decompose(&m).unwrap();
        assert!(!d.input_semisimple);
        assert_eq!(d.summands.len(), 2);
        assert_eq!(d.classes.len(), 1); // trivial module twice
    }

    #[test]
    fn hamilton_quaternion_regular_is_two_copies_nothing_smaller() {
        let q = towers::q();
        let m1 = q.from_int(0, -1);
        let a = quaternion_algebra(q, &m1, &m1, "H").unwrap();
        let m = regular_module(&a).unwrap();
        // H is a division algebra: the regular module is simple
        assert!(is_simple(&m).unwrap());
        let d = decompose(&m).unwrap();
        assert_eq!(d.summands.len(), 1);
    }

    #[test]
    fn q_c12_regular_dims() {
        let g = groups::cyclic(12).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C12]").unwrap();
        let m = regular_module(&a).unwrap();
        let d = decompose(&m).unwrap();
        let mut dims: Vec<usize> = d.summands.iter().map(|s| s.module.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2, 2, 2, 4]);
    }
}
