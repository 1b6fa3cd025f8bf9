//! Polynomial factorization: Berlekamp over finite fields, Zassenhaus over
//! the rationals, root extraction in quadratic number fields, and the
//! validated tower builder that certifies irreducibility where it can.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{KextError, Result};
use crate::exact::scalar::{Poly, Scalar};
use crate::exact::tower::{Base, Elem, FieldTower, Step, Tower};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TowerKind {
    Rationals,
    FiniteField(u128),
    /// Q with a single quadratic algebraic step.
    QuadraticNumberField,
    /// Algebraic over Q but not a single quadratic step.
    OtherNumberField,
    /// Any tower containing a transcendental step.
    FunctionField,
}

pub fn classify(tower: &FieldTower) -> TowerKind {
    let has_trans = tower
        .steps()
        .iter()
        .any(|s| matches!(s, Step::Transcendental { .. }));
    if has_trans {
        return TowerKind::FunctionField;
    }
    match tower.base() {
        Base::Prime(_) => TowerKind::FiniteField(tower.field_size(tower.levels()).unwrap_or(u128::MAX)),
        Base::Rationals => {
            if tower.levels() == 0 {
                TowerKind::Rationals
            } else if tower.levels() == 1 {
                match &tower.steps()[0] {
                    Step::Algebraic { min_poly, .. } if min_poly.len() == 3 => {
                        TowerKind::QuadraticNumberField
                    }
                    _ => TowerKind::OtherNumberField,
                }
            } else {
                TowerKind::OtherNumberField
            }
        }
    }
}

/// Factors f into monic irreducible factors with multiplicities; the unit is
/// the leading coefficient so that unit * prod(factors^mult) = f.
pub fn poly_factor(f: &Poly) -> Result<(Scalar, Vec<(Poly, usize)>)> {
    let tower = f.tower().clone();
    if f.is_zero() {
        return Err(KextError::BadParameters("cannot factor zero".into()));
    }
    let lv = tower.levels();
    let unit = Scalar::new(tower.clone(), f.coeffs().last().unwrap().clone());
    if f.is_constant() {
        return Ok((unit, vec![]));
    }
    let monic = f.monic();
    let factors = match classify(&tower) {
        TowerKind::FiniteField(q) => {
            if q > 1 << 20 {
                return Err(KextError::TooLarge);
            }
            factor_finite(&tower, monic.coeffs())?
        }
        TowerKind::Rationals => factor_rationals(&tower, monic.coeffs())?,
        TowerKind::QuadraticNumberField => factor_quadratic_field(&tower, monic.coeffs())?,
        TowerKind::OtherNumberField => {
            return Err(KextError::UnsupportedField(
                "general number-field factorization".into(),
            ))
        }
        TowerKind::FunctionField => {
            return Err(KextError::UnsupportedField(
                "factorization over function fields".into(),
            ))
        }
    };
    let out = factors
        .into_iter()
        .map(|(c, m)| (Poly::new(tower.clone(), f.var(), c), m))
        .collect();
    let _ = lv;
    Ok((unit, out))
}

pub fn is_irreducible(f: &Poly) -> Result<bool> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let (_, fac) = poly_factor(f)?;
    Ok(fac.len() == 1 && fac[0].1 == 1)
}

/// Roots of f in its own coefficient field, with multiplicity collapsed
/// (each root listed once).
pub fn roots(f: &Poly) -> Result<Vec<Scalar>> {
    let tower = f.tower().clone();
    match classify(&tower) {
        TowerKind::FiniteField(q) if q <= 1 << 16 => {
            let lv = tower.levels();
            let all = tower.enumerate(lv).ok_or(KextError::TooLarge)?;
            let mut out = Vec::new();
            for e in all {
                let s = Scalar::new(tower.clone(), e);
                if f.eval(&s).is_zero() {
                    out.push(s);
                }
            }
            Ok(out)
        }
        TowerKind::Rationals => {
            let (_, fac) = poly_factor(f)?;
            let lv = tower.levels();
            let mut out = Vec::new();
            for (g, _) in fac {
                if g.degree() == Some(1) {
                    // monic x + c -> root -c
                    let c = g.coeffs()[0].clone();
                    out.push(Scalar::new(tower.clone(), tower.neg(lv, &c)));
                }
            }
            Ok(out)
        }
        TowerKind::QuadraticNumberField => {
            if f.degree().unwrap_or(0) > 4 {
                return Err(KextError::UnsupportedField(
                    "root extraction limited to degree <= 4 over number fields".into(),
                ));
            }
            quadratic_field_roots(&tower, f.coeffs())
        }
        _ => Err(KextError::UnsupportedField("root extraction".into())),
    }
}

// ---------------------------------------------------------------------------
// finite fields
// ---------------------------------------------------------------------------

/// Full factorization over a finite tower field; input monic, output monic
/// irreducible factors with multiplicities.
fn factor_finite(tower: &Tower, f: &[Elem]) -> Result<Vec<(Vec<Elem>, usize)>> {
    let mut out: Vec<(Vec<Elem>, usize)> = Vec::new();
    factor_finite_rec(tower, f.to_vec(), 1, &mut out)?;
    out.sort_by_key(|(c, _)| format!("{c:?}"));
    Ok(out)
}

fn factor_finite_rec(
    tower: &Tower,
    f: Vec<Elem>,
    mult: usize,
    out: &mut Vec<(Vec<Elem>, usize)>,
) -> Result<()> {
    let lv = tower.levels();
    if f.len() <= 1 {
        return Ok(());
    }
    let deriv = tower.pderiv(lv, &f);
    if deriv.is_empty() {
        // f = g(x^p): take p-th roots of the surviving coefficients
        let p = tower.characteristic() as usize;
        let q = tower.field_size(lv).ok_or(KextError::TooLarge)?;
        let root_exp = (q / p as u128) as u64;
        let mut g = Vec::new();
        for (i, c) in f.iter().enumerate() {
            if i % p == 0 {
                g.push(tower.pow(lv, c, root_exp.max(1)));
            } else if !tower.is_zero_elem(c) {
                return Err(KextError::BadParameters(
                    "polynomial with zero derivative is not a p-th power".into(),
                ));
            }
        }
        return factor_finite_rec(tower, tower.ptrim(g), mult * p, out);
    }
    let g = tower.pgcd(lv, &f, &deriv);
    if g.len() == 1 {
        // squarefree: split into irreducibles, all with this multiplicity
        for h in berlekamp_squarefree(tower, &f)? {
            push_factor(out, h, mult);
        }
        return Ok(());
    }
    // squarefree part w carries every factor of f whose multiplicity is not
    // divisible by p (and in char 0 all of them)
    let (w, _) = tower.pdivrem(lv, &f, &g);
    let mut rem = f.clone();
    for h in berlekamp_squarefree(tower, &w)? {
        let mut e = 0;
        loop {
            let (q, r) = tower.pdivrem(lv, &rem, &h);
            if r.is_empty() {
                rem = q;
                e += 1;
            } else {
                break;
            }
        }
        debug_assert!(e >= 1);
        push_factor(out, h, mult * e);
    }
    if rem.len() > 1 {
        factor_finite_rec(tower, rem, mult, out)?;
    }
    Ok(())
}

fn push_factor(out: &mut Vec<(Vec<Elem>, usize)>, f: Vec<Elem>, mult: usize) {
    for (g, m) in out.iter_mut() {
        if *g == f {
            *m += mult;
            return;
        }
    }
    out.push((f, mult));
}

/// Berlekamp splitting of a monic squarefree polynomial over a finite field
/// small enough to enumerate.
fn berlekamp_squarefree(tower: &Tower, f: &[Elem]) -> Result<Vec<Vec<Elem>>> {
    use crate::exact::mat::Mat;
    let lv = tower.levels();
    let n = f.len() - 1;
    if n == 1 {
        return Ok(vec![tower.pmonic(lv, f)]);
    }
    let q = tower.field_size(lv).ok_or(KextError::TooLarge)?;
    // Frobenius matrix: row i = x^(i*q) mod f
    let xq = pow_mod(tower, &[tower.zero(lv), tower.one(lv)], q, f);
    let mut rows = Vec::with_capacity(n);
    let mut cur = vec![tower.one(lv)];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, tower.zero(lv));
        rows.push(row);
        cur = mul_mod(tower, &cur, &xq, f);
    }
    let b = Mat::from_rows(tower, rows);
    let bmi = b.sub(&Mat::identity(tower, n)).unwrap();
    // rows v with v (as coefficients) satisfying v^q = v: left null space
    let kernel = bmi.transpose().kernel();
    let r = kernel.rows();
    if r == 1 {
        return Ok(vec![tower.pmonic(lv, f)]);
    }
    let elements = tower.enumerate(lv).ok_or(KextError::TooLarge)?;
    let mut factors = vec![f.to_vec()];
    'outer: for i in 0..r {
        let v = tower.ptrim(kernel.row_vec(i));
        if v.len() <= 1 {
            continue; // constant vector splits nothing
        }
        for c in &elements {
            if factors.len() == r {
                break 'outer;
            }
            let mut next = Vec::new();
            let shifted = tower.psub(lv, &v, std::slice::from_ref(c));
            for fac in &factors {
                if fac.len() - 1 <= 1 {
                    next.push(fac.clone());
                    continue;
                }
                let g = tower.pgcd(lv, fac, &shifted);
                if g.len() > 1 && g.len() < fac.len() {
                    let (h, _) = tower.pdivrem(lv, fac, &g);
                    next.push(g);
                    next.push(h);
                } else {
                    next.push(fac.clone());
                }
            }
            factors = next;
        }
    }
    Ok(factors.into_iter().map(|f| tower.pmonic(lv, &f)).collect())
}

fn mul_mod(tower: &Tower, a: &[Elem], b: &[Elem], m: &[Elem]) -> Vec<Elem> {
    let lv = tower.levels();
    let prod = tower.pmul(lv, a, b);
    tower.pdivrem(lv, &prod, m).1
}

fn pow_mod(tower: &Tower, a: &[Elem], mut e: u128, m: &[Elem]) -> Vec<Elem> {
    let lv = tower.levels();
    let mut base = tower.pdivrem(lv, a, m).1;
    let mut acc = vec![tower.one(lv)];
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(tower, &acc, &base, m);
        }
        base = mul_mod(tower, &base, &base, m);
        e >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// rationals (Zassenhaus)
// ---------------------------------------------------------------------------

fn rat(e: &Elem) -> &BigRational {
    match e {
        Elem::Rat(r) => r,
        _ => panic!("expected rational element"),
    }
}

/// Monic rational polynomial -> monic irreducible factors with
/// multiplicities.
fn factor_rationals(tower: &Tower, f: &[Elem]) -> Result<Vec<(Vec<Elem>, usize)>> {
    let lv = tower.levels();
    let mut out: Vec<(Vec<Elem>, usize)> = Vec::new();
    // Yun squarefree decomposition (characteristic zero)
    let deriv = tower.pderiv(lv, f);
    let g = tower.pgcd(lv, f, &deriv);
    let mut parts: Vec<(Vec<Elem>, usize)> = Vec::new();
    if g.len() == 1 {
        parts.push((f.to_vec(), 1));
    } else {
        let (mut c, _) = tower.pdivrem(lv, f, &g);
        let (mut w, _) = tower.pdivrem(lv, &deriv, &g);
        let mut i = 1;
        while c.len() > 1 {
            let y = tower.psub(lv, &w, &tower.pderiv(lv, &c));
            let p = tower.pgcd(lv, &c, &y);
            if p.len() > 1 {
                parts.push((p.clone(), i));
            }
            let (cn, _) = tower.pdivrem(lv, &c, &p);
            let (wn, _) = tower.pdivrem(lv, &y, &p);
            c = cn;
            w = wn;
            i += 1;
        }
    }
    for (part, mult) in parts {
        for irr in factor_squarefree_q(tower, &part)? {
            push_factor(&mut out, irr, mult);
        }
    }
    out.sort_by_key(|(c, _)| format!("{c:?}"));
    Ok(out)
}

/// Integer polynomial helpers.
fn zb_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn zb_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zb_trim(out)
}

fn zb_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zb_trim(a.iter().map(|c| ((c % m) + m) % m).collect())
}

/// Division by a monic divisor over Z (or Z/m when reduced afterwards).
fn zb_divrem_monic(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(b.last().is_some_and(|x| x.is_one()), "divisor must be monic");
    let mut rem: Vec<BigInt> = a.to_vec();
    rem = zb_trim(rem);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quo = vec![BigInt::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let c = rem.last().unwrap().clone();
        quo[k] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] -= bc * &c;
        }
        rem = zb_trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (zb_trim(quo), rem)
}

/// Factors a monic squarefree rational polynomial into monic irreducibles.
fn factor_squarefree_q(tower: &Tower, f: &[Elem]) -> Result<Vec<Vec<Elem>>> {
    let lv = tower.levels();
    let n = f.len() - 1;
    if n <= 1 {
        return Ok(vec![f.to_vec()]);
    }
    // clear denominators -> primitive integer polynomial
    let mut den = BigInt::one();
    for c in f {
        den = num_integer::lcm(den, rat(c).denom().clone());
    }
    let zf: Vec<BigInt> = f.iter().map(|c| (rat(c) * &den).to_integer()).collect();
    let content = zf
        .iter()
        .fold(BigInt::zero(), |acc, c| num_integer::gcd(acc, c.clone()));
    let zf: Vec<BigInt> = zf.iter().map(|c| c / &content).collect();
    // monicize: G(x) = lc^(n-1) * F(x/lc), so coeff of x^i is zf[i]*lc^(n-1-i)
    let lc = zf.last().unwrap().clone();
    let gpoly: Vec<BigInt> = (0..=n)
        .map(|i| {
            if i == n {
                BigInt::one()
            } else {
                &zf[i] * lc.pow((n - 1 - i) as u32)
            }
        })
        .collect();
    let factors_g = factor_monic_squarefree_z(&gpoly)?;
    // map back: h(x) -> monic over Q of h(lc * x)
    let mut out = Vec::new();
    for h in factors_g {
        let d = h.len() - 1;
        let coeffs: Vec<Elem> = h
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let v = BigRational::new(c * lc.pow(i as u32), BigInt::one());
                Elem::Rat(v)
            })
            .collect();
        let monic = tower.pmonic(lv, &tower.ptrim(coeffs));
        debug_assert_eq!(monic.len() - 1, d);
        out.push(monic);
    }
    Ok(out)
}

/// Zassenhaus on a monic squarefree integer polynomial.
fn factor_monic_squarefree_z(f: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let n = f.len() - 1;
    if n <= 1 {
        return Ok(vec![f.to_vec()]);
    }
    // choose a prime where f stays squarefree
    let primes: [u64; 14] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
    let mut chosen = None;
    'ploop: for &p in &primes {
        let t = FieldTower::prime_field(p).unwrap();
        let fp: Vec<Elem> = zb_mod(f, &BigInt::from(p))
            .iter()
            .map(|c| t.from_bigint(0, c))
            .collect();
        let fp = t.ptrim(fp);
        if fp.len() != f.len() {
            continue 'ploop; // degree dropped (cannot happen for monic, but keep the guard)
        }
        let d = t.pderiv(0, &fp);
        if d.is_empty() {
            continue;
        }
        if t.pgcd(0, &fp, &d).len() == 1 {
            chosen = Some((p, t, fp));
            break;
        }
    }
    let (p, tp, fp) = chosen.ok_or_else(|| {
        KextError::BadParameters("no suitable prime for modular factorization".into())
    })?;
    let modular = berlekamp_squarefree(&tp, &fp)?;
    if modular.len() == 1 {
        return Ok(vec![f.to_vec()]);
    }
    // Mignotte-style bound on factor coefficients
    let norm2_sq: BigInt = f.iter().map(|c| c * c).sum();
    let mut norm = BigInt::one();
    while &norm * &norm < norm2_sq {
        norm += 1;
    }
    let bound: BigInt = (BigInt::one() << (n + 1)) * norm;
    let target: BigInt = BigInt::from(2) * &bound + 1;
    // lift the whole tree to one modulus >= target
    let mut modulus = BigInt::from(p);
    while modulus < target {
        modulus = &modulus * &modulus;
    }
    let modular_z: Vec<Vec<BigInt>> = modular
        .iter()
        .map(|g| g.iter().map(elem_fp_to_bigint).collect())
        .collect();
    let lifted = hensel_tree(&zb_mod(f, &modulus), &modular_z, p, &modulus);
    // subset recombination
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut current = f.to_vec();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = None;
        for combo in combinations(remaining.len(), size) {
            let mut cand = vec![BigInt::one()];
            for &i in &combo {
                cand = zb_mul(&cand, &remaining[i]);
            }
            let cand = symmetric(&zb_mod(&cand, &modulus), &modulus);
            let (q, r) = zb_divrem_monic(&current, &cand);
            if r.is_empty() {
                found = Some((combo, cand, q));
                break;
            }
        }
        if let Some((combo, cand, q)) = found {
            out.push(cand);
            current = q;
            let mut keep = Vec::new();
            for (i, g) in remaining.into_iter().enumerate() {
                if !combo.contains(&i) {
                    keep.push(g);
                }
            }
            remaining = keep;
        } else {
            size += 1;
        }
    }
    if current.len() > 1 {
        out.push(current);
    }
    Ok(out)
}

fn elem_fp_to_bigint(e: &Elem) -> BigInt {
    match e {
        Elem::Fp(n) => BigInt::from(*n),
        _ => panic!("expected prime-field element"),
    }
}

fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    zb_trim(
        v.iter()
            .map(|c| if c > &half { c - m } else { c.clone() })
            .collect(),
    )
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Lifts the factorization f = prod(factors) (mod p) to the given modulus,
/// splitting the factor list as a binary tree.
fn hensel_tree(
    f: &[BigInt],
    factors_p: &[Vec<BigInt>],
    p: u64,
    modulus: &BigInt,
) -> Vec<Vec<BigInt>> {
    if factors_p.len() == 1 {
        return vec![zb_mod(f, modulus)];
    }
    let mid = factors_p.len() / 2;
    let pb = BigInt::from(p);
    let mut g0 = vec![BigInt::one()];
    for fac in &factors_p[..mid] {
        g0 = zb_mod(&zb_mul(&g0, fac), &pb);
    }
    let mut h0 = vec![BigInt::one()];
    for fac in &factors_p[mid..] {
        h0 = zb_mod(&zb_mul(&h0, fac), &pb);
    }
    let (g, h) = hensel_pair(f, &g0, &h0, p, modulus);
    let mut out = hensel_tree(&g, &factors_p[..mid], p, modulus);
    out.extend(hensel_tree(&h, &factors_p[mid..], p, modulus));
    out
}

/// Quadratic Hensel lifting of a coprime monic pair from mod p to at least
/// the given modulus (which must be p^(2^j)).
fn hensel_pair(
    f: &[BigInt],
    g0: &[BigInt],
    h0: &[BigInt],
    p: u64,
    modulus: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    // Bezout mod p via field arithmetic
    let tp = FieldTower::prime_field(p).unwrap();
    let to_fp = |v: &[BigInt]| -> Vec<Elem> {
        tp.ptrim(
            zb_mod(v, &BigInt::from(p))
                .iter()
                .map(|c| tp.from_bigint(0, c))
                .collect(),
        )
    };
    let gf = to_fp(g0);
    let hf = to_fp(h0);
    let (gcd, u, v) = tp.pext_gcd(0, &gf, &hf);
    assert_eq!(gcd.len(), 1, "lift requires coprime factors");
    let ginv = tp.inv(0, &gcd[0]).unwrap();
    let u = tp.pmul_scalar(0, &u, &ginv);
    let v = tp.pmul_scalar(0, &v, &ginv);
    let from_fp = |w: &[Elem]| -> Vec<BigInt> { w.iter().map(elem_fp_to_bigint).collect() };

    let mut m = BigInt::from(p);
    let mut g = zb_mod(g0, &m);
    let mut h = zb_mod(h0, &m);
    let mut s = from_fp(&u);
    let mut t = from_fp(&v);
    while &m < modulus {
        let m2 = &m * &m;
        let e = zb_mod(&zb_sub(&zb_mod(f, &m2), &zb_mul(&g, &h)), &m2);
        let se = zb_mod(&zb_mul(&s, &e), &m2);
        let (q, r) = zb_divrem_monic(&se, &h);
        let q = zb_mod(&q, &m2);
        let r = zb_mod(&r, &m2);
        let gstar = zb_mod(
            &zb_add(&zb_add(&g, &zb_mul(&t, &e)), &zb_mul(&q, &g)),
            &m2,
        );
        let hstar = zb_mod(&zb_add(&h, &r), &m2);
        let b = zb_mod(
            &zb_sub(
                &zb_add(&zb_mul(&s, &gstar), &zb_mul(&t, &hstar)),
                &[BigInt::one()],
            ),
            &m2,
        );
        let sb = zb_mod(&zb_mul(&s, &b), &m2);
        let (c, d) = zb_divrem_monic(&sb, &hstar);
        let c = zb_mod(&c, &m2);
        let d = zb_mod(&d, &m2);
        s = zb_mod(&zb_sub(&s, &d), &m2);
        t = zb_mod(&zb_sub(&t, &zb_add(&zb_mul(&t, &b), &zb_mul(&c, &gstar))), &m2);
        g = gstar;
        h = hstar;
        m = m2;
    }
    (g, h)
}

fn zb_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x + y);
    }
    zb_trim(out)
}

fn zb_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x - y);
    }
    zb_trim(out)
}

// ---------------------------------------------------------------------------
// quadratic number fields
// ---------------------------------------------------------------------------

/// Roots of f (coefficients in Q(alpha), deg alpha = 2) inside the field.
fn quadratic_field_roots(tower: &Tower, f: &[Elem]) -> Result<Vec<Scalar>> {
    let lv = tower.levels();
    assert_eq!(lv, 1);
    let (p1, p0) = match &tower.steps()[0] {
        Step::Algebraic { min_poly, .. } => {
            (rat(&min_poly[1]).clone(), rat(&min_poly[0]).clone())
        }
        _ => unreachable!(),
    };
    // conjugation alpha -> -p1 - alpha
    let conj = |e: &Elem| -> Elem {
        match e {
            Elem::Ext(c) => {
                let c0 = c.first().map(|x| rat(x).clone()).unwrap_or_else(BigRational::zero);
                let c1 = c.get(1).map(|x| rat(x).clone()).unwrap_or_else(BigRational::zero);
                let n0 = &c0 - &c1 * &p1;
                let n1 = -c1;
                Elem::Ext(tower.ptrim(vec![Elem::Rat(n0), Elem::Rat(n1)]))
            }
            _ => panic!("expected extension element"),
        }
    };
    let fconj: Vec<Elem> = f.iter().map(conj).collect();
    let prod = tower.pmul(lv, f, &fconj);
    // descend coefficients to Q
    let q = FieldTower::rationals();
    let mut rq = Vec::with_capacity(prod.len());
    for c in &prod {
        match c {
            Elem::Ext(v) if v.len() <= 1 => {
                rq.push(v.first().cloned().unwrap_or_else(|| q.zero(0)));
            }
            _ => {
                return Err(KextError::BadParameters(
                    "norm polynomial is not rational".into(),
                ))
            }
        }
    }
    let rq = q.ptrim(rq);
    let (_, fac) = poly_factor(&Poly::new(q.clone(), "x", rq))?;
    let disc_k = &p1 * &p1 - BigRational::from_integer(BigInt::from(4)) * &p0;
    let mut out: Vec<Scalar> = Vec::new();
    let mut push_root = |x: Elem| {
        let s = Scalar::new(tower.clone(), x);
        let val = tower.peval(lv, f, s.repr());
        if tower.is_zero_elem(&val) && !out.contains(&s) {
            out.push(s);
        }
    };
    for (g, _) in &fac {
        match g.degree() {
            Some(1) => {
                // rational candidate -c0
                let c0 = rat(&g.coeffs()[0]).clone();
                let cand = tower.lift(1, Elem::Rat(-c0));
                push_root(cand);
            }
            Some(2) => {
                let b = rat(&g.coeffs()[1]).clone();
                let c = rat(&g.coeffs()[0]).clone();
                let d = &b * &b - BigRational::from_integer(BigInt::from(4)) * &c;
                // sqrt(d) = u + v*alpha with u = p1*v/2, v^2 = 4d/disc_k
                if disc_k.is_zero() {
                    continue;
                }
                let v2 = BigRational::from_integer(BigInt::from(4)) * &d / &disc_k;
                let Some(v) = rational_sqrt(&v2) else { continue };
                for sign in [BigRational::one(), -BigRational::one()] {
                    let vv = &v * &sign;
                    let u = &p1 * &vv / BigRational::from_integer(BigInt::from(2));
                    // root = (-b + sqrt(d)) / 2
                    let two = BigRational::from_integer(BigInt::from(2));
                    let x0 = (&u - &b) / &two;
                    let x1 = &vv / &two;
                    let cand = Elem::Ext(tower.ptrim(vec![Elem::Rat(x0), Elem::Rat(x1)]));
                    push_root(cand);
                }
            }
            _ => {}
        }
    }
    Ok(out)
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

/// Partial factorization over a quadratic number field: pull out roots of
/// polynomials of degree <= 4; certify the cofactor irreducible when its
/// degree allows, otherwise report the field unsupported.
fn factor_quadratic_field(tower: &Tower, f: &[Elem]) -> Result<Vec<(Vec<Elem>, usize)>> {
    let lv = tower.levels();
    let n = f.len() - 1;
    if n > 4 {
        return Err(KextError::UnsupportedField(
            "number-field factorization beyond degree 4".into(),
        ));
    }
    let roots = quadratic_field_roots(tower, f)?;
    let mut out: Vec<(Vec<Elem>, usize)> = Vec::new();
    let mut rem = f.to_vec();
    for root in &roots {
        let lin = vec![tower.neg(lv, root.repr()), tower.one(lv)];
        let mut e = 0;
        loop {
            let (q, r) = tower.pdivrem(lv, &rem, &lin);
            if r.is_empty() {
                rem = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            push_factor(&mut out, lin, e);
        }
    }
    match rem.len() - 1 {
        0 => {}
        1 => push_factor(&mut out, tower.pmonic(lv, &rem), 1),
        2 | 3 => push_factor(&mut out, tower.pmonic(lv, &rem), 1), // no roots -> irreducible
        _ => {
            return Err(KextError::UnsupportedField(
                "rootless quartic over a number field".into(),
            ))
        }
    }
    out.sort_by_key(|(c, _)| format!("{c:?}"));
    Ok(out)
}

// ---------------------------------------------------------------------------
// tower builder
// ---------------------------------------------------------------------------

/// Builds a tower step by step, certifying irreducibility of each algebraic
/// step where factorization is supported and recording separability.
pub struct TowerBuilder {
    base: Base,
    steps: Vec<Step>,
}

impl TowerBuilder {
    pub fn new(base: Base) -> Result<Self> {
        // validate characteristic eagerly
        FieldTower::new_unchecked(base.clone(), vec![])?;
        Ok(TowerBuilder { base, steps: vec![] })
    }

    pub fn current(&self) -> Result<Tower> {
        FieldTower::new_unchecked(self.base.clone(), self.steps.clone())
    }

    pub fn add_transcendental(&mut self, var: &str) -> Result<()> {
        self.steps.push(Step::Transcendental { var: var.into() });
        self.current()?; // runs duplicate-variable validation
        Ok(())
    }

    /// Adds an algebraic step; the coefficients are elements at the current
    /// level. Irreducibility is certified where factorization is supported,
    /// otherwise the step is flagged unverified.
    pub fn add_algebraic(&mut self, var: &str, min_poly: Vec<Elem>) -> Result<()> {
        let cur = self.current()?;
        let lv = cur.levels();
        let coeffs = cur.ptrim(min_poly);
        if coeffs.len() < 2 {
            return Err(KextError::BadParameters(format!(
                "minimal polynomial of '{var}' must have degree >= 1"
            )));
        }
        if *coeffs.last().unwrap() != cur.one(lv) {
            return Err(KextError::BadParameters(format!(
                "minimal polynomial of '{var}' must be monic"
            )));
        }
        let poly = Poly::new(cur.clone(), "x", coeffs.clone());
        let verified = match classify(&cur) {
            TowerKind::Rationals | TowerKind::FiniteField(_) => {
                if !is_irreducible(&poly)? {
                    return Err(KextError::ReducibleMinPoly(var.into()));
                }
                true
            }
            TowerKind::QuadraticNumberField if coeffs.len() <= 5 => {
                let rts = quadratic_field_roots(&cur, &coeffs)?;
                if !rts.is_empty() && coeffs.len() > 2 {
                    return Err(KextError::ReducibleMinPoly(var.into()));
                }
                coeffs.len() <= 4 // degree <= 3 without roots is irreducible
            }
            _ => false,
        };
        let separable = crate::exact::scalar::is_separable_step(&poly);
        self.steps.push(Step::Algebraic {
            var: var.into(),
            min_poly: coeffs,
            separable,
            verified,
        });
        self.current()?;
        Ok(())
    }

    pub fn finish(self) -> Result<Tower> {
        FieldTower::new_unchecked(self.base, self.steps)
    }
}
