//! Separability of finite-dimensional algebras.
//!
//! An algebra is separable iff it stays semisimple under every field
//! extension; equivalently it is semisimple with separable center.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::core::{AlgRef, Algebra};
use crate::algebra::radical::is_semisimple;
use crate::error::{KextError, Result};
use crate::exact::factor::{classify, poly_factor, TowerKind};
use crate::exact::scalar::{is_separable_step, Poly};
use crate::exact::tower::Elem;
use crate::modules::hom::min_poly;

/// Minimal polynomial of an algebra element (via right multiplication).
pub fn element_min_poly(alg: &AlgRef, a: &[Elem], var: &str) -> Poly {
    min_poly(&alg.rmat(a), var)
}

/// Tries to find a primitive element: z whose minimal polynomial has degree
/// equal to the dimension. Searches basis elements and seeded combinations.
fn primitive_element(alg: &AlgRef) -> Option<(Vec<Elem>, Poly)> {
    let tower = alg.tower().clone();
    let lv = tower.levels();
    let n = alg.dim();
    let mut candidates: Vec<Vec<Elem>> = (0..n).map(|i| alg.basis_vec(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = alg.basis_vec(i);
            for (k, c) in alg.basis_vec(j).iter().enumerate() {
                v[k] = tower.add(lv, &v[k], c);
            }
            candidates.push(v);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7072696d);
    for _ in 0..40 {
        let v: Vec<Elem> = (0..n)
            .map(|_| tower.from_int(lv, rng.gen_range(-3i64..=3)))
            .collect();
        candidates.push(v);
    }
    for z in candidates {
        let mp = element_min_poly(alg, &z, "x");
        if mp.degree() == Some(n) {
            return Some((z, mp));
        }
    }
    None
}

/// Separability test.
///
/// Commutative monogenic algebras are decided directly from the minimal
/// polynomial of a primitive element (valid over every field, including
/// function fields). Otherwise the algebra must be semisimple and its
/// center must split into separable field extensions.
pub fn is_separable_algebra(alg: &AlgRef) -> Result<bool> {
    let n = alg.dim();
    if n == 1 {
        return Ok(true);
    }
    // monogenic fast path
    if alg.is_commutative() {
        if let Some((_, mp)) = primitive_element(alg) {
            return Ok(is_separable_step(&mp));
        }
    }
    // general path needs the radical and center factorization
    if !is_semisimple(alg)? {
        return Ok(false);
    }
    let z = center_as_algebra(alg)?;
    commutative_separable(&z)
}

/// Realizes the center as a structure-constant algebra on its echelon basis.
fn center_as_algebra(alg: &AlgRef) -> Result<AlgRef> {
    let tower = alg.tower().clone();
    let c = alg.center();
    let k = c.dim();
    let b = c.basis();
    let mut sc = vec![vec![Vec::new(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let prod = alg.mul_vec(b.row(i), b.row(j));
            sc[i][j] = c
                .coords(&prod)
                .ok_or_else(|| KextError::BadParameters("center is not closed".into()))?;
        }
    }
    let unit = c
        .coords(alg.unit())
        .ok_or_else(|| KextError::BadParameters("unit not in center".into()))?;
    Algebra::new(tower, &format!("Z({})", alg.name()), sc, unit, vec![], None)
}

/// Separability of a commutative (semisimple) algebra: split into field
/// factors along coprime factorizations of element minimal polynomials, then
/// test each factor's defining polynomial.
fn commutative_separable(alg: &AlgRef) -> Result<bool> {
    let n = alg.dim();
    if n == 1 {
        return Ok(true);
    }
    if let Some((_, mp)) = primitive_element(alg) {
        return Ok(is_separable_step(&mp));
    }
    // find an element whose minimal polynomial splits into coprime factors
    if !matches!(
        classify(alg.tower()),
        TowerKind::Rationals | TowerKind::FiniteField(_) | TowerKind::QuadraticNumberField
    ) {
        return Err(KextError::UnsupportedField(
            "cannot split the center over this field".into(),
        ));
    }
    let tower = alg.tower().clone();
    let lv = tower.levels();
    let mut candidates: Vec<Vec<Elem>> = (0..n).map(|i| alg.basis_vec(i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x73706c69);
    for _ in 0..40 {
        candidates.push(
            (0..n)
                .map(|_| tower.from_int(lv, rng.gen_range(-3i64..=3)))
                .collect(),
        );
    }
    for z in &candidates {
        let mp = element_min_poly(alg, z, "x");
        let d = mp.degree().unwrap_or(0);
        if d < 2 {
            continue;
        }
        let (_, factors) = poly_factor(&mp)?;
        if factors.len() < 2 {
            continue;
        }
        // split off the primary component of the first factor
        let (g, e) = &factors[0];
        let mut gpow = Poly::from_ints(&tower, "x", &[1]);
        for _ in 0..*e {
            gpow = gpow.mul(g);
        }
        let (h, rem) = mp.divrem(&gpow);
        debug_assert!(rem.is_zero());
        // Bezout: u g^e + v h = 1, idempotent = (v h)(z)
        let (gcd, u, v) = tower.pext_gcd(lv, gpow.coeffs(), h.coeffs());
        debug_assert_eq!(gcd.len(), 1);
        let ginv = tower.inv(lv, &gcd[0])?;
        let _ = u;
        let vh = tower.pmul(lv, &tower.pmul_scalar(lv, &v, &ginv), h.coeffs());
        let idem = eval_in_algebra(alg, &vh, z);
        return split_and_recurse(alg, &idem);
    }
    Err(KextError::Undecidable)
}

fn eval_in_algebra(alg: &AlgRef, poly: &[Elem], z: &[Elem]) -> Vec<Elem> {
    let tower = alg.tower().clone();
    let lv = tower.levels();
    let n = alg.dim();
    let mut acc = vec![tower.zero(lv); n];
    let mut pw = alg.unit().to_vec();
    for c in poly {
        for k in 0..n {
            let t = tower.mul(lv, c, &pw[k]);
            acc[k] = tower.add(lv, &acc[k], &t);
        }
        pw = alg.mul_vec(&pw, z);
    }
    acc
}

/// Splits a commutative algebra along an idempotent e into e*A and (1-e)*A
/// and recurses on both factors.
fn split_and_recurse(alg: &AlgRef, e: &[Elem]) -> Result<bool> {
    let tower = alg.tower().clone();
    let lv = tower.levels();
    let n = alg.dim();
    let one_minus_e: Vec<Elem> = alg
        .unit()
        .iter()
        .zip(e)
        .map(|(u, ei)| tower.sub(lv, u, ei))
        .collect();
    for idem in [e.to_vec(), one_minus_e] {
        // basis of idem * A
        let rows: Vec<Vec<Elem>> = (0..n).map(|i| alg.mul_vec(&idem, &alg.basis_vec(i))).collect();
        let span = crate::exact::mat::SubspaceBasis::from_rows(&tower, n, rows);
        let k = span.dim();
        if k == 0 || k == n {
            return Err(KextError::BadParameters("idempotent failed to split".into()));
        }
        let b = span.basis();
        let mut sc = vec![vec![Vec::new(); k]; k];
        for i in 0..k {
            for j in 0..k {
                let prod = alg.mul_vec(b.row(i), b.row(j));
                sc[i][j] = span
                    .coords(&prod)
                    .ok_or_else(|| KextError::BadParameters("factor not closed".into()))?;
            }
        }
        let unit = span
            .coords(&idem)
            .ok_or_else(|| KextError::BadParameters("idempotent not in its factor".into()))?;
        let factor = Algebra::new(
            tower.clone(),
            &format!("{}-factor", alg.name()),
            sc,
            unit,
            vec![],
            None,
        )?;
        if !commutative_separable(&factor)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::construct::*;
    use crate::algebra::groups;
    use crate::exact::factor::TowerBuilder;
    use crate::exact::scalar::towers;
    use crate::exact::tower::Base;

    #[test]
    fn group_algebra_q_s3_separable() {
        let g = groups::dihedral(3).unwrap();
        let a = group_algebra(towers::q(), g, "Q[S3]").unwrap();
        assert!(is_separable_algebra(&a).unwrap());
    }

    #[test]
    fn dual_numbers_not_separable() {
        let q = towers::q();
        let f = Poly::from_ints(&q, "x", &[0, 0, 1]);
        let a = poly_quotient_algebra(&f, "Q[x]/(x^2)").unwrap();
        assert!(!is_separable_algebra(&a).unwrap());
    }

    #[test]
    fn inseparable_field_extension_detected() {
        // GF(2)(t)[s]/(s^2 - t): a field, but an inseparable extension
        let mut b = TowerBuilder::new(Base::Prime(2)).unwrap();
        b.add_transcendental("t").unwrap();
        let cur = b.current().unwrap();
        let tgen = cur.generator(1, 1);
        let f = Poly::new(
            cur.clone(),
            "x",
            vec![cur.neg(1, &tgen), cur.zero(1), cur.one(1)],
        );
        let a = poly_quotient_algebra(&f, "GF(2)(t)[s]/(s^2-t)").unwrap();
        assert!(!is_separable_algebra(&a).unwrap());
    }

    #[test]
    fn separable_extension_as_algebra() {
        let q = towers::q();
        let f = Poly::from_ints(&q, "x", &[1, 0, 1]); // x^2 + 1
        let a = poly_quotient_algebra(&f, "Q(i)").unwrap();
        assert!(is_separable_algebra(&a).unwrap());
    }

    #[test]
    fn matrix_algebra_separable() {
        let a = matrix_algebra(towers::gf(2), 2, "M2(GF(2))").unwrap();
        assert!(is_separable_algebra(&a).unwrap());
    }

    #[test]
    fn modular_group_algebra_not_separable() {
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(towers::gf(2), g, "GF(2)[C2]").unwrap();
        assert!(!is_separable_algebra(&a).unwrap());
    }

    #[test]
    fn quaternions_separable() {
        let q = towers::q();
        let m1 = q.from_int(0, -1);
        let a = quaternion_algebra(q, &m1, &m1, "H").unwrap();
        assert!(is_separable_algebra(&a).unwrap());
    }

    #[test]
    fn product_of_two_fields_separable() {
        let q = towers::q();
        let f = Poly::from_ints(&q, "x", &[1, 0, 1]);
        let k = poly_quotient_algebra(&f, "Q(i)").unwrap();
        let p = product_algebra(&k, &k, "Q(i)^2").unwrap();
        assert!(is_separable_algebra(&p).unwrap());
    }
}
