//! Constructors for the standard algebra families.

use crate::algebra::core::{AlgRef, Algebra, GroupData};
use crate::error::{KextError, Result};
use crate::exact::mat::Mat;
use crate::exact::scalar::Poly;
use crate::exact::tower::{Elem, Tower};

/// Validated structure-constant algebra from raw data.
pub fn build_algebra(
    tower: Tower,
    name: &str,
    sc: Vec<Vec<Vec<Elem>>>,
    unit: Vec<Elem>,
) -> Result<AlgRef> {
    Algebra::new(tower, name, sc, unit, vec![], None)
}

pub fn group_algebra(tower: Tower, group: GroupData, name: &str) -> Result<AlgRef> {
    let n = group.order;
    let lv = tower.levels();
    let zero = tower.zero(lv);
    let one = tower.one(lv);
    let mut sc = vec![vec![vec![zero.clone(); n]; n]; n];
    for g in 0..n {
        for h in 0..n {
            sc[g][h][group.table[g][h]] = one.clone();
        }
    }
    let mut unit = vec![zero.clone(); n];
    unit[0] = one.clone();
    let gens: Vec<Vec<Elem>> = group
        .generators()
        .into_iter()
        .map(|g| {
            let mut v = vec![zero.clone(); n];
            v[g] = one.clone();
            v
        })
        .collect();
    Algebra::new(tower, name, sc, unit, gens, Some(group))
}

/// The quaternion algebra (a, b / F): basis 1, i, j, k with i^2 = a,
/// j^2 = b, ij = -ji = k.
pub fn quaternion_algebra(tower: Tower, a: &Elem, b: &Elem, name: &str) -> Result<AlgRef> {
    let lv = tower.levels();
    if tower.characteristic() == 2 {
        return Err(KextError::BadParameters(
            "quaternion algebras need characteristic != 2".into(),
        ));
    }
    if tower.is_zero_elem(a) || tower.is_zero_elem(b) {
        return Err(KextError::BadParameters(
            "quaternion parameters must be nonzero".into(),
        ));
    }
    let z = tower.zero(lv);
    let o = tower.one(lv);
    let na = tower.neg(lv, a);
    let nb = tower.neg(lv, b);
    let ab = tower.mul(lv, a, b);
    let nab = tower.neg(lv, &ab);
    let vec4 = |c0: &Elem, c1: &Elem, c2: &Elem, c3: &Elem| {
        vec![c0.clone(), c1.clone(), c2.clone(), c3.clone()]
    };
    // basis order 1, i, j, k
    let e = |idx: usize| {
        let mut v = vec![z.clone(); 4];
        v[idx] = o.clone();
        v
    };
    let mut sc = vec![vec![vec![z.clone(); 4]; 4]; 4];
    for t in 0..4 {
        sc[0][t] = e(t);
        sc[t][0] = e(t);
    }
    sc[1][1] = vec4(a, &z, &z, &z); // i*i = a
    sc[1][2] = e(3); // i*j = k
    sc[2][1] = vec4(&z, &z, &z, &tower.neg(lv, &o)); // j*i = -k
    sc[2][2] = vec4(b, &z, &z, &z); // j*j = b
    sc[1][3] = vec4(&z, &z, a, &z); // i*k = a j
    sc[3][1] = vec4(&z, &z, &na, &z); // k*i = -a j
    sc[2][3] = vec4(&z, &nb, &z, &z); // j*k = -b i
    sc[3][2] = vec4(&z, b, &z, &z); // k*j = b i
    sc[3][3] = vec4(&nab, &z, &z, &z); // k*k = -ab
    let unit = e(0);
    let gens = vec![e(1), e(2)];
    Algebra::new(tower, name, sc, unit, gens, None)
}

/// Full matrix algebra M_n(F), basis E_rc indexed by r*n + c.
pub fn matrix_algebra(tower: Tower, n: usize, name: &str) -> Result<AlgRef> {
    if n == 0 || n > 6 {
        return Err(KextError::BadParameters("matrix algebra size out of range".into()));
    }
    let lv = tower.levels();
    let dim = n * n;
    let z = tower.zero(lv);
    let o = tower.one(lv);
    let mut sc = vec![vec![vec![z.clone(); dim]; dim]; dim];
    for r in 0..n {
        for c in 0..n {
            for r2 in 0..n {
                for c2 in 0..n {
                    if c == r2 {
                        sc[r * n + c][r2 * n + c2][r * n + c2] = o.clone();
                    }
                }
            }
        }
    }
    let mut unit = vec![z.clone(); dim];
    for r in 0..n {
        unit[r * n + r] = o.clone();
    }
    Algebra::new(tower, name, sc, unit, vec![], None)
}

/// Upper-triangular n x n matrices; basis E_rc with r <= c.
pub fn triangular_algebra(tower: Tower, n: usize, name: &str) -> Result<AlgRef> {
    if n == 0 || n > 4 {
        return Err(KextError::BadParameters("triangular algebra size out of range".into()));
    }
    let lv = tower.levels();
    let mut idx = Vec::new();
    for r in 0..n {
        for c in r..n {
            idx.push((r, c));
        }
    }
    let dim = idx.len();
    let z = tower.zero(lv);
    let o = tower.one(lv);
    let pos = |r: usize, c: usize| idx.iter().position(|&p| p == (r, c)).unwrap();
    let mut sc = vec![vec![vec![z.clone(); dim]; dim]; dim];
    for (a, &(r, c)) in idx.iter().enumerate() {
        for (b, &(r2, c2)) in idx.iter().enumerate() {
            if c == r2 {
                sc[a][b][pos(r, c2)] = o.clone();
            }
        }
    }
    let mut unit = vec![z.clone(); dim];
    for r in 0..n {
        unit[pos(r, r)] = o.clone();
    }
    Algebra::new(tower, name, sc, unit, vec![], None)
}

/// F[x]/(f) for monic f of degree >= 1.
pub fn poly_quotient_algebra(f: &Poly, name: &str) -> Result<AlgRef> {
    let tower = f.tower().clone();
    let lv = tower.levels();
    if !f.is_monic() || f.degree().unwrap_or(0) == 0 {
        return Err(KextError::BadParameters(
            "quotient needs a monic polynomial of degree >= 1".into(),
        ));
    }
    let d = f.degree().unwrap();
    let z = tower.zero(lv);
    let o = tower.one(lv);
    let mut sc = vec![vec![vec![z.clone(); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            let mut m = vec![z.clone(); i + j + 1];
            m[i + j] = o.clone();
            let (_, r) = tower.pdivrem(lv, &m, f.coeffs());
            for (k, c) in r.iter().enumerate() {
                sc[i][j][k] = c.clone();
            }
        }
    }
    let mut unit = vec![z.clone(); d];
    unit[0] = o.clone();
    let gens = if d >= 2 {
        let mut x = vec![z.clone(); d];
        x[1] = o.clone();
        vec![x]
    } else {
        vec![unit.clone()]
    };
    Algebra::new(tower, name, sc, unit, gens, None)
}

/// Direct product of two algebras over the same tower.
pub fn product_algebra(a: &AlgRef, b: &AlgRef, name: &str) -> Result<AlgRef> {
    if a.tower() != b.tower() {
        return Err(KextError::FieldMismatch);
    }
    let tower = a.tower().clone();
    let lv = tower.levels();
    let (na, nb) = (a.dim(), b.dim());
    let dim = na + nb;
    let z = tower.zero(lv);
    let mut sc = vec![vec![vec![z.clone(); dim]; dim]; dim];
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                sc[i][j][k] = a.sc()[i][j][k].clone();
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                sc[na + i][na + j][na + k] = b.sc()[i][j][k].clone();
            }
        }
    }
    let embed_a = |v: &[Elem]| -> Vec<Elem> {
        let mut out = vec![z.clone(); dim];
        out[..na].clone_from_slice(v);
        out
    };
    let embed_b = |v: &[Elem]| -> Vec<Elem> {
        let mut out = vec![z.clone(); dim];
        out[na..].clone_from_slice(v);
        out
    };
    let unit_a = embed_a(a.unit());
    let unit_b = embed_b(b.unit());
    let mut unit = vec![z.clone(); dim];
    for i in 0..dim {
        unit[i] = tower.add(lv, &unit_a[i], &unit_b[i]);
    }
    // the component idempotents are needed to generate the product
    let mut gens = vec![unit_a, unit_b];
    for g in a.generators() {
        gens.push(embed_a(&g));
    }
    for g in b.generators() {
        gens.push(embed_b(&g));
    }
    Algebra::new(tower, name, sc, unit, gens, None)
}

/// Realizes a set of matrices spanning a unital subalgebra of End(V) as a
/// structure-constant algebra. Returns the algebra together with the chosen
/// basis matrices (rows of the span in canonical echelon form).
pub fn algebra_from_matrix_span(
    tower: &Tower,
    mats: &[Mat],
    name: &str,
) -> Result<(AlgRef, Vec<Mat>)> {
    if mats.is_empty() {
        return Err(KextError::BadParameters("empty matrix span".into()));
    }
    let m = mats[0].rows();
    for mat in mats {
        if mat.rows() != m || mat.cols() != m {
            return Err(KextError::BadParameters("matrix sizes differ".into()));
        }
    }
    let flat = Mat::from_rows(tower, mats.iter().map(|x| x.flatten()).collect());
    let (span, _) = flat.rref();
    let dim = span.rows();
    let basis: Vec<Mat> = (0..dim)
        .map(|i| Mat::from_flat(tower, m, m, span.row_vec(i)))
        .collect();
    let coords = |x: &Mat| -> Result<Vec<Elem>> {
        span.solve_left(&x.flatten()).ok_or_else(|| {
            KextError::BadParameters("matrix span is not multiplicatively closed".into())
        })
    };
    let unit = coords(&Mat::identity(tower, m))?;
    let mut sc = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            sc[i][j] = coords(&basis[i].matmul(&basis[j])?)?;
        }
    }
    let alg = Algebra::new(tower.clone(), name, sc, unit, vec![], None)?;
    Ok((alg, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::groups;
    use crate::exact::scalar::towers;

    #[test]
    fn group_algebra_c4_over_q() {
        let g = groups::cyclic(4).unwrap();
        let a = group_algebra(towers::q(), g, "Q[C4]").unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.is_commutative());
    }

    #[test]
    fn s3_group_algebra_noncommutative() {
        let g = groups::dihedral(3).unwrap();
        let a = group_algebra(towers::q(), g, "Q[S3]").unwrap();
        assert_eq!(a.dim(), 6);
        assert!(!a.is_commutative());
        // center of Q[S3] has dimension 3 (three conjugacy classes)
        assert_eq!(a.center().dim(), 3);
    }

    #[test]
    fn hamilton_quaternions() {
        let q = towers::q();
        let m1 = q.from_int(0, -1);
        let a = quaternion_algebra(q, &m1, &m1, "(-1,-1/Q)").unwrap();
        assert_eq!(a.dim(), 4);
        assert!(!a.is_commutative());
        assert_eq!(a.center().dim(), 1);
    }

    #[test]
    fn matrix_algebra_m2() {
        let a = matrix_algebra(towers::q(), 2, "M2(Q)").unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.center().dim(), 1);
    }

    #[test]
    fn triangular_t2() {
        let a = triangular_algebra(towers::q(), 2, "T2(Q)").unwrap();
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn poly_quotient_x2() {
        let q = towers::q();
        let f = Poly::from_ints(&q, "x", &[0, 0, 1]); // x^2
        let a = poly_quotient_algebra(&f, "Q[x]/(x^2)").unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());
    }

    #[test]
    fn product_of_fields() {
        let q = towers::q();
        let f = Poly::from_ints(&q, "x", &[1, 0, 1]); // x^2+1
        let k = poly_quotient_algebra(&f, "Q(i)").unwrap();
        let p = product_algebra(&k, &k, "Q(i) x Q(i)").unwrap();
        assert_eq!(p.dim(), 4);
        assert!(p.is_commutative());
    }

    #[test]
    fn span_algebra_from_matrices() {
        let q = towers::q();
        // span of I and the nilpotent E12 inside M2: 2-dimensional
        let i = Mat::identity(&q, 2);
        let mut n = Mat::zeros(&q, 2, 2);
        n.set(0, 1, q.one(0));
        let (alg, basis) = algebra_from_matrix_span(&q, &[i, n], "span").unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(basis.len(), 2);
    }
}
