//! Jacobson radical of a finite-dimensional algebra.
//!
//! Characteristic zero uses the trace-form kernel; finite fields use the
//! layered trace method on the restriction of scalars to the prime field.
//! Function fields of positive characteristic are not supported.

use crate::algebra::core::{quotient_by_ideal, AlgRef};
use crate::error::{KextError, Result};
use crate::exact::factor::{classify, TowerKind};
use crate::exact::mat::{Mat, SubspaceBasis};
use crate::exact::tower::{Elem, FieldTower, Step, Tower};

/// Basis of the Jacobson radical as a subspace of the algebra. Cached on the
/// algebra; the result is verified nilpotent and the quotient is verified to
/// have zero radical.
pub fn radical(alg: &AlgRef) -> Result<SubspaceBasis> {
    if let Some(r) = alg.radical_cache().get() {
        return Ok(r.clone());
    }
    let rad = compute_radical(alg)?;
    verify_radical(alg, &rad)?;
    let _ = alg.radical_cache().set(rad.clone());
    Ok(rad)
}

pub fn is_semisimple(alg: &AlgRef) -> Result<bool> {
    Ok(radical(alg)?.dim() == 0)
}

fn compute_radical(alg: &AlgRef) -> Result<SubspaceBasis> {
    let tower = alg.tower();
    match classify(tower) {
        TowerKind::Rationals | TowerKind::QuadraticNumberField | TowerKind::OtherNumberField => {
            Ok(radical_char0(alg))
        }
        TowerKind::FunctionField => {
            if tower.characteristic() == 0 {
                Ok(radical_char0(alg))
            } else {
                Err(KextError::UnsupportedField(
                    "radical over function fields of positive characteristic".into(),
                ))
            }
        }
        TowerKind::FiniteField(_) => radical_finite(alg),
    }
}

/// Dickson: over a field of characteristic zero the radical is the kernel of
/// the trace form G[i][j] = tr(L_{e_i e_j}).
fn radical_char0(alg: &AlgRef) -> SubspaceBasis {
    let tower = alg.tower();
    let n = alg.dim();
    let g = Mat::from_fn(tower, n, n, |i, j| alg.trace_left(&alg.sc()[i][j]));
    SubspaceBasis::from_mat(&g.kernel())
}

// --- restriction of scalars to the prime field -----------------------------

/// Monomial basis of the (finite) tower field over its prime field.
fn fp_basis(tower: &Tower) -> Vec<Elem> {
    let lv = tower.levels();
    let mut basis = vec![tower.one(lv)];
    for (i, step) in tower.steps().iter().enumerate() {
        let deg = match step {
            Step::Algebraic { min_poly, .. } => min_poly.len() - 1,
            Step::Transcendental { .. } => unreachable!("finite tower"),
        };
        let gen = tower.generator(i + 1, lv);
        let mut next = Vec::with_capacity(basis.len() * deg);
        let mut gpow = tower.one(lv);
        for _ in 0..deg {
            for b in &basis {
                next.push(tower.mul(lv, &gpow, b));
            }
            gpow = tower.mul(lv, &gpow, &gen);
        }
        basis = next;
    }
    basis
}

/// Coordinates of a field element with respect to the monomial basis,
/// as integers in 0..p.
fn fp_coords(tower: &FieldTower, lv: usize, e: &Elem, out: &mut Vec<u64>) {
    if lv == 0 {
        match e {
            Elem::Fp(n) => out.push(*n),
            _ => unreachable!("finite base"),
        }
        return;
    }
    let deg = match &tower.steps()[lv - 1] {
        Step::Algebraic { min_poly, .. } => min_poly.len() - 1,
        Step::Transcendental { .. } => unreachable!("finite tower"),
    };
    let coeffs: &[Elem] = match e {
        Elem::Ext(c) => c,
        _ => unreachable!("expected extension element"),
    };
    let zero = tower.zero(lv - 1);
    for d in 0..deg {
        let c = coeffs.get(d).unwrap_or(&zero);
        fp_coords(tower, lv - 1, c, out);
    }
}

/// Layered trace method over a finite field, computed on the restriction of
/// scalars to GF(p). The radical is a ring-theoretic invariant, so the
/// GF(p)-computation finds the same subset.
fn radical_finite(alg: &AlgRef) -> Result<SubspaceBasis> {
    let tower = alg.tower().clone();
    let lv = tower.levels();
    let p = tower.characteristic();
    let n = alg.dim();
    let fbasis = fp_basis(&tower);
    let e = fbasis.len();
    let nn = n * e; // dimension over GF(p)

    // element of A from GF(p) coordinates (length nn, layout i*e + b)
    let from_fp = |v: &[u64]| -> Vec<Elem> {
        let mut out = vec![tower.zero(lv); n];
        for i in 0..n {
            for b in 0..e {
                let c = v[i * e + b] % p;
                if c != 0 {
                    let s = tower.mul(lv, &tower.from_int(lv, c as i64), &fbasis[b]);
                    out[i] = tower.add(lv, &out[i], &s);
                }
            }
        }
        out
    };
    let to_fp = |a: &[Elem]| -> Vec<u64> {
        let mut out = Vec::with_capacity(nn);
        for c in a {
            fp_coords(&tower, lv, c, &mut out);
        }
        debug_assert_eq!(out.len(), nn);
        out
    };
    // integer lift of the left-multiplication matrix of a on the restricted
    // algebra: row (i,b) = coords of a * (fbasis[b] e_i)
    let lmat_fp = |a: &[Elem]| -> Vec<Vec<u64>> {
        let mut rows = Vec::with_capacity(nn);
        for i in 0..n {
            for b in 0..e {
                let mut v = vec![tower.zero(lv); n];
                v[i] = fbasis[b].clone();
                rows.push(to_fp(&alg.mul_vec(a, &v)));
            }
        }
        rows
    };

    let gfp = FieldTower::prime_field(p)?;
    // current ideal: rows of GF(p) coordinates, initially the whole algebra
    let mut ideal: Vec<Vec<u64>> = (0..nn)
        .map(|i| {
            let mut v = vec![0u64; nn];
            v[i] = 1;
            v
        })
        .collect();
    let mut layers = 0usize;
    {
        let mut cap = 1u128;
        while cap < nn as u128 {
            cap *= p as u128;
            layers += 1;
        }
    }
    for i in 0..=layers {
        let m = ideal.len();
        if m == 0 {
            break;
        }
        let exp = (p as u128).pow(i as u32);
        let modulus = (p as u128).pow(i as u32 + 1);
        let pi = exp;
        // constraint matrix over GF(p): rows s (unknown side), columns t
        let mut cons = vec![vec![0u64; m]; m];
        for (s, xs) in ideal.iter().enumerate() {
            let x = from_fp(xs);
            for (t, yt) in ideal.iter().enumerate() {
                let y = from_fp(yt);
                let z = alg.mul_vec(&x, &y);
                let l = lmat_fp(&z);
                let tr = trace_of_power(&l, exp, modulus);
                debug_assert_eq!(tr % pi, 0, "layered trace divisibility");
                cons[s][t] = ((tr / pi) % p as u128) as u64;
            }
        }
        // kernel over GF(p) in the s-coordinates
        let cmat = Mat::from_fn(&gfp, m, m, |s, t| Elem::Fp(cons[s][t]));
        let ker = cmat.transpose().kernel();
        let mut next = Vec::with_capacity(ker.rows());
        for r in 0..ker.rows() {
            let mut v = vec![0u64; nn];
            for s in 0..m {
                let c = match ker.get(r, s) {
                    Elem::Fp(c) => *c,
                    _ => unreachable!(),
                };
                for k in 0..nn {
                    v[k] = (v[k] + c * ideal[s][k]) % p;
                }
            }
            next.push(v);
        }
        ideal = next;
    }
    // map back to the algebra and echelonize over the full field
    let rows: Vec<Vec<Elem>> = ideal.iter().map(|v| from_fp(v)).collect();
    if rows.is_empty() {
        return Ok(SubspaceBasis::zero(&tower, n));
    }
    Ok(SubspaceBasis::from_rows(&tower, n, rows))
}

/// tr(M^exp) mod modulus for a small nonnegative integer matrix.
fn trace_of_power(m: &[Vec<u64>], exp: u128, modulus: u128) -> u128 {
    let n = m.len();
    let mut base: Vec<Vec<u128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as u128 % modulus).collect())
        .collect();
    let mut acc: Option<Vec<Vec<u128>>> = None;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => matmul_mod(&a, &base, modulus),
            });
        }
        e >>= 1;
        if e > 0 {
            base = matmul_mod(&base, &base, modulus);
        }
    }
    let acc = acc.expect("exponent must be positive");
    let mut t = 0u128;
    for (i, _) in acc.iter().enumerate().take(n) {
        t = (t + acc[i][i]) % modulus;
    }
    t
}

fn matmul_mod(a: &[Vec<u128>], b: &[Vec<u128>], m: u128) -> Vec<Vec<u128>> {
    let n = a.len();
    let mut out = vec![vec![0u128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + aik * b[k][j]) % m;
            }
        }
    }
    out
}

/// Post-conditions: the computed radical is nilpotent and the quotient by it
/// has zero radical.
fn verify_radical(alg: &AlgRef, rad: &SubspaceBasis) -> Result<()> {
    let tower = alg.tower();
    let n = alg.dim();
    if rad.dim() == 0 {
        return Ok(());
    }
    // nilpotency: powers of the subspace must reach zero
    let mut cur = rad.clone();
    let mut steps = 0;
    loop {
        if cur.dim() == 0 {
            break;
        }
        steps += 1;
        if steps > n {
            return Err(KextError::BadParameters(
                "computed radical is not nilpotent".into(),
            ));
        }
        let mut rows = Vec::new();
        for i in 0..cur.dim() {
            for j in 0..rad.dim() {
                rows.push(alg.mul_vec(&cur.basis().row_vec(i), &rad.basis().row_vec(j)));
            }
        }
        cur = SubspaceBasis::from_rows(tower, n, rows);
    }
    // ideal property: closed under multiplication by basis elements
    for i in 0..rad.dim() {
        let v = rad.basis().row_vec(i);
        for b in 0..n {
            let eb = alg.basis_vec(b);
            if !rad.contains(&alg.mul_vec(&v, &eb)) || !rad.contains(&alg.mul_vec(&eb, &v)) {
                return Err(KextError::BadParameters(
                    "computed radical is not an ideal".into(),
                ));
            }
        }
    }
    // the quotient must be semisimple
    let (quo, _, _) = quotient_by_ideal(alg, rad, &format!("{}/rad", alg.name()))?;
    let qr = compute_radical(&quo)?;
    if qr.dim() != 0 {
        return Err(KextError::BadParameters(
            "quotient by computed radical still has radical".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::construct::*;
    use crate::algebra::groups;
    use crate::exact::scalar::{towers, Poly};

    #[test]
    fn semisimple_group_algebra_char0() {
        let g = groups::dihedral(3).unwrap();
        let a = group_algebra(towers::q(), g, "Q[S3]").unwrap();
        assert!(is_semisimple(&a).unwrap());
    }

    #[test]
    fn radical_of_dual_numbers() {
        let q = towers::q();
        let f = Poly::from_ints(&q, "x", &[0, 0, 1]);
        let a = poly_quotient_algebra(&f, "Q[x]/(x^2)").unwrap();
        let r = radical(&a).unwrap();
        assert_eq!(r.dim(), 1);
        // spanned by x
        assert!(r.contains(&a.basis_vec(1)));
    }

    #[test]
    fn modular_group_algebra_c2_gf2() {
        // GF(2)[C2] has radical spanned by 1 + g
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(towers::gf(2), g, "GF(2)[C2]").unwrap();
        let r = radical(&a).unwrap();
        assert_eq!(r.dim(), 1);
        let t = towers::gf(2);
        assert!(r.contains(&[t.one(0), t.one(0)]));
    }

    #[test]
    fn maschke_gf2_c3() {
        // |C3| = 3 invertible in GF(2): semisimple
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(towers::gf(2), g, "GF(2)[C3]").unwrap();
        assert!(is_semisimple(&a).unwrap());
    }

    #[test]
    fn matrix_algebra_gf2_semisimple() {
        // trace form degenerates here; the layered method is required
        let a = matrix_algebra(towers::gf(2), 2, "M2(GF(2))").unwrap();
        assert!(is_semisimple(&a).unwrap());
    }

    #[test]
    fn triangular_radical() {
        let a = triangular_algebra(towers::q(), 2, "T2(Q)").unwrap();
        let r = radical(&a).unwrap();
        assert_eq!(r.dim(), 1); // spanned by E12
    }

    #[test]
    fn modular_gf3_c3() {
        let g = groups::cyclic(3).unwrap();
        let a = group_algebra(towers::gf(3), g, "GF(3)[C3]").unwrap();
        let r = radical(&a).unwrap();
        assert_eq!(r.dim(), 2);
    }

    #[test]
    fn gf4_group_algebra_radical() {
        // GF(4)[C2]: radical spanned by 1+g, computed through restriction
        // of scalars to GF(2)
        use crate::exact::factor::TowerBuilder;
        use crate::exact::tower::Base;
        let mut b = TowerBuilder::new(Base::Prime(2)).unwrap();
        let gf2 = towers::gf(2);
        b.add_algebraic("w", vec![gf2.one(0), gf2.one(0), gf2.one(0)]).unwrap();
        let t = b.finish().unwrap();
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(t.clone(), g, "GF(4)[C2]").unwrap();
        let r = radical(&a).unwrap();
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&[t.one(1), t.one(1)]));
    }

    #[test]
    fn function_field_char_p_unsupported() {
        use crate::exact::factor::TowerBuilder;
        use crate::exact::tower::Base;
        let mut b = TowerBuilder::new(Base::Prime(2)).unwrap();
        b.add_transcendental("t").unwrap();
        let t = b.finish().unwrap();
        let g = groups::cyclic(2).unwrap();
        let a = group_algebra(t, g, "GF(2)(t)[C2]").unwrap();
        assert!(matches!(radical(&a), Err(KextError::UnsupportedField(_))));
    }

    #[test]
    fn quaternions_over_q_semisimple() {
        let q = towers::q();
        let m1 = q.from_int(0, -1);
        let a = quaternion_algebra(q, &m1, &m1, "H").unwrap();
        assert!(is_semisimple(&a).unwrap());
    }
}
