//! Exact arithmetic in field towers.
//!
//! A tower starts at Q or GF(p) and grows by transcendental or algebraic
//! steps. Elements are kept in a canonical nested form so that equality is
//! structural: residue polynomials of degree < deg(minpoly) at algebraic
//! levels, reduced fractions with monic denominator at transcendental levels.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{KextError, Result};

/// Base field of a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    Rationals,
    Prime(u64),
}

/// One extension step of a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Transcendental {
        var: String,
    },
    Algebraic {
        var: String,
        /// Monic minimal polynomial over the tower below this step,
        /// stored with all deg+1 coefficients (leading coefficient one).
        min_poly: Vec<Elem>,
        /// gcd(f, f') = 1 at this step.
        separable: bool,
        /// Irreducibility was certified by factorization; otherwise it is
        /// asserted by the caller.
        verified: bool,
    },
}

impl Step {
    pub fn var(&self) -> &str {
        match self {
            Step::Transcendental { var } => var,
            Step::Algebraic { var, .. } => var,
        }
    }
}

/// Canonical element representation. The meaning of a node depends on the
/// tower level it sits at; elements never store their owner.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Rat(BigRational),
    Fp(u64),
    /// Algebraic level: residue polynomial coefficients over the level
    /// below, trailing zeros trimmed. Empty = zero.
    Ext(Vec<Elem>),
    /// Transcendental level: numerator / denominator polynomials over the
    /// level below. Denominator monic, gcd(num, den) = 1.
    Frac(Vec<Elem>, Vec<Elem>),
}

#[derive(Debug, PartialEq, Eq)]
pub struct FieldTower {
    base: Base,
    steps: Vec<Step>,
}

pub type Tower = Arc<FieldTower>;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldTower {
    /// Builds and validates a tower. Algebraic steps are checked monic here;
    /// irreducibility certification is done by `tower_build` in `factor`,
    /// which has access to the factorization routines.
    pub fn new_unchecked(base: Base, steps: Vec<Step>) -> Result<Tower> {
        if let Base::Prime(p) = base {
            if !is_prime(p) {
                return Err(KextError::NonPrimeCharacteristic(p));
            }
        }
        let mut seen: Vec<&str> = Vec::new();
        for s in &steps {
            if seen.contains(&s.var()) {
                return Err(KextError::DuplicateVariable(s.var().to_string()));
            }
            seen.push(s.var());
        }
        let tower = FieldTower { base, steps };
        for lv in 1..=tower.steps.len() {
            if let Step::Algebraic { min_poly, var, .. } = &tower.steps[lv - 1] {
                if min_poly.len() < 2 {
                    return Err(KextError::BadParameters(format!(
                        "minimal polynomial of '{var}' must have degree >= 1"
                    )));
                }
                let lead = min_poly.last().unwrap();
                if *lead != tower.one(lv - 1) {
                    return Err(KextError::BadParameters(format!(
                        "minimal polynomial of '{var}' must be monic"
                    )));
                }
            }
        }
        Ok(Arc::new(tower))
    }

    pub fn rationals() -> Tower {
        Self::new_unchecked(Base::Rationals, vec![]).unwrap()
    }

    pub fn prime_field(p: u64) -> Result<Tower> {
        Self::new_unchecked(Base::Prime(p), vec![])
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn levels(&self) -> usize {
        self.steps.len()
    }

    pub fn characteristic(&self) -> u64 {
        match self.base {
            Base::Rationals => 0,
            Base::Prime(p) => p,
        }
    }

    pub fn var_level(&self, var: &str) -> Option<usize> {
        self.steps.iter().position(|s| s.var() == var).map(|i| i + 1)
    }

    /// A tower extends another if its step list literally begins with it.
    pub fn extends(&self, other: &FieldTower) -> bool {
        self.base == other.base
            && self.steps.len() >= other.steps.len()
            && self.steps[..other.steps.len()] == other.steps[..]
    }

    // ---- element constructors ----

    pub fn zero(&self, lv: usize) -> Elem {
        if lv == 0 {
            match self.base {
                Base::Rationals => Elem::Rat(BigRational::zero()),
                Base::Prime(_) => Elem::Fp(0),
            }
        } else {
            match &self.steps[lv - 1] {
                Step::Algebraic { .. } => Elem::Ext(vec![]),
                Step::Transcendental { .. } => Elem::Frac(vec![], vec![self.one(lv - 1)]),
            }
        }
    }

    pub fn one(&self, lv: usize) -> Elem {
        self.from_int(lv, 1)
    }

    pub fn from_int(&self, lv: usize, n: i64) -> Elem {
        self.from_bigint(lv, &BigInt::from(n))
    }

    pub fn from_bigint(&self, lv: usize, n: &BigInt) -> Elem {
        if lv == 0 {
            match self.base {
                Base::Rationals => Elem::Rat(BigRational::from_integer(n.clone())),
                Base::Prime(p) => {
                    let m = ((n % p) + p) % p;
                    let digits = m.to_u64_digits().1;
                    Elem::Fp(if digits.is_empty() { 0 } else { digits[0] })
                }
            }
        } else {
            self.lift(lv, self.from_bigint(lv - 1, n))
        }
    }

    /// Wraps an element of level lv-1 as an element of level lv.
    pub fn lift(&self, lv: usize, e: Elem) -> Elem {
        debug_assert!(lv >= 1);
        let z = self.is_zero_elem(&e);
        match &self.steps[lv - 1] {
            Step::Algebraic { .. } => {
                if z {
                    Elem::Ext(vec![])
                } else {
                    Elem::Ext(vec![e])
                }
            }
            Step::Transcendental { .. } => {
                let num = if z { vec![] } else { vec![e] };
                Elem::Frac(num, vec![self.one(lv - 1)])
            }
        }
    }

    /// Embeds an element from level `from` up to level `to`.
    pub fn embed(&self, from: usize, to: usize, e: &Elem) -> Elem {
        let mut cur = e.clone();
        for lv in from + 1..=to {
            cur = self.lift(lv, cur);
        }
        cur
    }

    /// The generator of step `lv` (1-based) as an element of level `to`.
    pub fn generator(&self, lv: usize, to: usize) -> Elem {
        let g = match &self.steps[lv - 1] {
            Step::Algebraic { .. } => Elem::Ext(vec![self.zero(lv - 1), self.one(lv - 1)]),
            Step::Transcendental { .. } => {
                Elem::Frac(vec![self.zero(lv - 1), self.one(lv - 1)], vec![self.one(lv - 1)])
            }
        };
        self.embed(lv, to, &g)
    }

    pub fn is_zero_elem(&self, e: &Elem) -> bool {
        match e {
            Elem::Rat(r) => r.is_zero(),
            Elem::Fp(n) => *n == 0,
            Elem::Ext(c) => c.is_empty(),
            Elem::Frac(n, _) => n.is_empty(),
        }
    }

    // ---- field operations ----

    pub fn add(&self, lv: usize, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Elem::Fp(x), Elem::Fp(y)) => {
                let p = self.characteristic();
                Elem::Fp((x + y) % p)
            }
            (Elem::Ext(x), Elem::Ext(y)) => Elem::Ext(self.padd(lv - 1, x, y)),
            (Elem::Frac(n1, d1), Elem::Frac(n2, d2)) => {
                let lw = lv - 1;
                let num = self.padd(
                    lw,
                    &self.pmul(lw, n1, d2),
                    &self.pmul(lw, n2, d1),
                );
                let den = self.pmul(lw, d1, d2);
                self.make_frac(lw, num, den)
            }
            _ => panic!("mixed element shapes in add"),
        }
    }

    pub fn neg(&self, lv: usize, a: &Elem) -> Elem {
        match a {
            Elem::Rat(x) => Elem::Rat(-x),
            Elem::Fp(x) => {
                let p = self.characteristic();
                Elem::Fp((p - x) % p)
            }
            Elem::Ext(x) => Elem::Ext(self.pneg(lv - 1, x)),
            Elem::Frac(n, d) => Elem::Frac(self.pneg(lv - 1, n), d.clone()),
        }
    }

    pub fn sub(&self, lv: usize, a: &Elem, b: &Elem) -> Elem {
        self.add(lv, a, &self.neg(lv, b))
    }

    pub fn mul(&self, lv: usize, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Elem::Fp(x), Elem::Fp(y)) => {
                let p = self.characteristic() as u128;
                Elem::Fp(((*x as u128 * *y as u128) % p) as u64)
            }
            (Elem::Ext(x), Elem::Ext(y)) => {
                let lw = lv - 1;
                let prod = self.pmul(lw, x, y);
                let mp = self.min_poly_at(lv);
                let (_, r) = self.pdivrem(lw, &prod, &mp);
                Elem::Ext(r)
            }
            (Elem::Frac(n1, d1), Elem::Frac(n2, d2)) => {
                let lw = lv - 1;
                self.make_frac(lw, self.pmul(lw, n1, n2), self.pmul(lw, d1, d2))
            }
            _ => panic!("mixed element shapes in mul"),
        }
    }

    pub fn inv(&self, lv: usize, a: &Elem) -> Result<Elem> {
        if self.is_zero_elem(a) {
            return Err(KextError::DivisionByZero);
        }
        Ok(match a {
            Elem::Rat(x) => Elem::Rat(x.recip()),
            Elem::Fp(x) => Elem::Fp(self.fp_inv(*x)),
            Elem::Ext(x) => {
                let lw = lv - 1;
                let mp = self.min_poly_at(lv);
                // u*x + v*mp = g with g a nonzero constant when mp is
                // irreducible over the level below.
                let (g, u, _) = self.pext_gcd(lw, x, &mp);
                if g.len() != 1 {
                    return Err(KextError::ReducibleMinPoly(
                        self.steps[lv - 1].var().to_string(),
                    ));
                }
                let ginv = self.inv(lw, &g[0])?;
                let u = self.pmul_scalar(lw, &u, &ginv);
                let (_, r) = self.pdivrem(lw, &u, &mp);
                Elem::Ext(r)
            }
            Elem::Frac(n, d) => self.make_frac(lv - 1, d.clone(), n.clone()),
        })
    }

    pub fn div(&self, lv: usize, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(lv, a, &self.inv(lv, b)?))
    }

    pub fn pow(&self, lv: usize, a: &Elem, mut n: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one(lv);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(lv, &acc, &base);
            }
            base = self.mul(lv, &base, &base);
            n >>= 1;
        }
        acc
    }

    fn fp_inv(&self, x: u64) -> u64 {
        let p = self.characteristic();
        // p is prime, x != 0
        let mut exp = p - 2;
        let mut base = x as u128;
        let mut acc = 1u128;
        let p = p as u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u64
    }

    fn min_poly_at(&self, lv: usize) -> Vec<Elem> {
        match &self.steps[lv - 1] {
            Step::Algebraic { min_poly, .. } => min_poly.clone(),
            _ => panic!("not an algebraic level"),
        }
    }

    /// Builds a canonical fraction at level lw+1 from polynomials over lw.
    fn make_frac(&self, lw: usize, num: Vec<Elem>, den: Vec<Elem>) -> Elem {
        let num = self.ptrim(num);
        let den = self.ptrim(den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return Elem::Frac(vec![], vec![self.one(lw)]);
        }
        let g = self.pgcd(lw, &num, &den);
        let (num, den) = if g.len() > 1 {
            let (qn, _) = self.pdivrem(lw, &num, &g);
            let (qd, _) = self.pdivrem(lw, &den, &g);
            (qn, qd)
        } else {
            (num, den)
        };
        // make denominator monic
        let lc = den.last().unwrap().clone();
        if lc == self.one(lw) {
            Elem::Frac(num, den)
        } else {
            let lcinv = self.inv(lw, &lc).expect("unit leading coefficient");
            Elem::Frac(
                self.pmul_scalar(lw, &num, &lcinv),
                self.pmul_scalar(lw, &den, &lcinv),
            )
        }
    }

    // ---- polynomials over a level (coefficient lists, trailing zeros trimmed) ----

    pub fn ptrim(&self, mut v: Vec<Elem>) -> Vec<Elem> {
        while let Some(last) = v.last() {
            if self.is_zero_elem(last) {
                v.pop();
            } else {
                break;
            }
        }
        v
    }

    pub fn padd(&self, lv: usize, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_else(|| self.zero(lv));
            let y = b.get(i).cloned().unwrap_or_else(|| self.zero(lv));
            out.push(self.add(lv, &x, &y));
        }
        self.ptrim(out)
    }

    pub fn pneg(&self, lv: usize, a: &[Elem]) -> Vec<Elem> {
        a.iter().map(|c| self.neg(lv, c)).collect()
    }

    pub fn psub(&self, lv: usize, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        self.padd(lv, a, &self.pneg(lv, b))
    }

    pub fn pmul(&self, lv: usize, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![self.zero(lv); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.is_zero_elem(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if self.is_zero_elem(y) {
                    continue;
                }
                let t = self.mul(lv, x, y);
                out[i + j] = self.add(lv, &out[i + j], &t);
            }
        }
        self.ptrim(out)
    }

    pub fn pmul_scalar(&self, lv: usize, a: &[Elem], s: &Elem) -> Vec<Elem> {
        if self.is_zero_elem(s) {
            return vec![];
        }
        self.ptrim(a.iter().map(|c| self.mul(lv, c, s)).collect())
    }

    /// Division with remainder; the divisor may have any nonzero leading
    /// coefficient (it is inverted).
    pub fn pdivrem(&self, lv: usize, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut rem: Vec<Elem> = a.to_vec();
        rem = self.ptrim(rem);
        let db = b.len() - 1;
        if rem.len() < b.len() {
            return (vec![], rem);
        }
        let lcinv = self
            .inv(lv, b.last().unwrap())
            .expect("invertible leading coefficient");
        let mut quo = vec![self.zero(lv); rem.len() - db];
        while rem.len() >= b.len() && !rem.is_empty() {
            let k = rem.len() - b.len();
            let c = self.mul(lv, rem.last().unwrap(), &lcinv);
            quo[k] = c.clone();
            for (i, bc) in b.iter().enumerate() {
                let t = self.mul(lv, bc, &c);
                rem[k + i] = self.sub(lv, &rem[k + i], &t);
            }
            rem = self.ptrim(rem);
        }
        (self.ptrim(quo), rem)
    }

    pub fn pmonic(&self, lv: usize, a: &[Elem]) -> Vec<Elem> {
        if a.is_empty() {
            return vec![];
        }
        let lc = a.last().unwrap();
        if *lc == self.one(lv) {
            return a.to_vec();
        }
        let inv = self.inv(lv, lc).expect("unit leading coefficient");
        self.pmul_scalar(lv, a, &inv)
    }

    /// Monic gcd.
    pub fn pgcd(&self, lv: usize, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let mut x = self.ptrim(a.to_vec());
        let mut y = self.ptrim(b.to_vec());
        while !y.is_empty() {
            let (_, r) = self.pdivrem(lv, &x, &y);
            x = y;
            y = r;
        }
        self.pmonic(lv, &x)
    }

    /// Extended gcd: returns (g, u, v) with u*a + v*b = g (g not normalized
    /// monic).
    pub fn pext_gcd(&self, lv: usize, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>, Vec<Elem>) {
        let mut r0 = self.ptrim(a.to_vec());
        let mut r1 = self.ptrim(b.to_vec());
        let mut s0 = vec![self.one(lv)];
        let mut s1: Vec<Elem> = vec![];
        let mut t0: Vec<Elem> = vec![];
        let mut t1 = vec![self.one(lv)];
        while !r1.is_empty() {
            let (q, r) = self.pdivrem(lv, &r0, &r1);
            let ns = self.psub(lv, &s0, &self.pmul(lv, &q, &s1));
            let nt = self.psub(lv, &t0, &self.pmul(lv, &q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
            t0 = t1;
            t1 = nt;
        }
        (r0, s0, t0)
    }

    pub fn pderiv(&self, lv: usize, a: &[Elem]) -> Vec<Elem> {
        let mut out = Vec::new();
        for (i, c) in a.iter().enumerate().skip(1) {
            let k = self.from_bigint(lv, &BigInt::from(i));
            out.push(self.mul(lv, c, &k));
        }
        self.ptrim(out)
    }

    pub fn peval(&self, lv: usize, a: &[Elem], x: &Elem) -> Elem {
        let mut acc = self.zero(lv);
        for c in a.iter().rev() {
            acc = self.mul(lv, &acc, x);
            acc = self.add(lv, &acc, c);
        }
        acc
    }

    /// Enumerates all elements at level lv when the tower up to lv is a
    /// finite field. Returns None otherwise.
    pub fn enumerate(&self, lv: usize) -> Option<Vec<Elem>> {
        match self.base {
            Base::Rationals => return None,
            Base::Prime(p) => {
                if lv == 0 {
                    return Some((0..p).map(Elem::Fp).collect());
                }
            }
        }
        match &self.steps[lv - 1] {
            Step::Transcendental { .. } => None,
            Step::Algebraic { min_poly, .. } => {
                let d = min_poly.len() - 1;
                let lower = self.enumerate(lv - 1)?;
                let mut digits: Vec<Vec<Elem>> = vec![vec![]];
                for _ in 0..d {
                    let mut next = Vec::with_capacity(digits.len() * lower.len());
                    for c in &digits {
                        for x in &lower {
                            let mut cc = c.clone();
                            cc.push(x.clone());
                            next.push(cc);
                        }
                    }
                    digits = next;
                }
                Some(digits.into_iter().map(|c| Elem::Ext(self.ptrim(c))).collect())
            }
        }
    }

    /// Field size at level lv, None for infinite fields and overflow guard
    /// above 2^63.
    pub fn field_size(&self, lv: usize) -> Option<u128> {
        let p = match self.base {
            Base::Rationals => return None,
            Base::Prime(p) => p as u128,
        };
        let mut q = p;
        for s in &self.steps[..lv] {
            match s {
                Step::Transcendental { .. } => return None,
                Step::Algebraic { min_poly, .. } => {
                    let d = (min_poly.len() - 1) as u32;
                    q = q.checked_pow(d)?;
                }
            }
        }
        Some(q)
    }
}

impl fmt::Display for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.base {
            Base::Rationals => write!(f, "Q")?,
            Base::Prime(p) => write!(f, "GF({p})")?,
        }
        for s in &self.steps {
            write!(f, "({})", s.var())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Tower {
        // GF(4) = GF(2)[w]/(w^2+w+1)
        let gf2 = FieldTower::prime_field(2).unwrap();
        let mp = vec![gf2.one(0), gf2.one(0), gf2.one(0)];
        FieldTower::new_unchecked(
            Base::Prime(2),
            vec![Step::Algebraic {
                var: "w".into(),
                min_poly: mp,
                separable: true,
                verified: true,
            }],
        )
        .unwrap()
    }

    #[test]
    fn gf4_arithmetic() {
        let t = gf4();
        let w = t.generator(1, 1);
        let w2 = t.mul(1, &w, &w);
        // w^2 = w + 1
        let expect = t.add(1, &w, &t.one(1));
        assert_eq!(w2, expect);
        // w^3 = 1
        assert_eq!(t.pow(1, &w, 3), t.one(1));
        // inverse: w * w^2 = 1
        assert_eq!(t.inv(1, &w).unwrap(), w2);
    }

    #[test]
    fn gf4_enumeration() {
        let t = gf4();
        let all = t.enumerate(1).unwrap();
        assert_eq!(all.len(), 4);
        assert_eq!(t.field_size(1), Some(4));
    }

    #[test]
    fn function_field_fractions() {
        // GF(2)(t)
        let t = FieldTower::new_unchecked(
            Base::Prime(2),
            vec![Step::Transcendental { var: "t".into() }],
        )
        .unwrap();
        let x = t.generator(1, 1);
        let xinv = t.inv(1, &x).unwrap();
        assert_eq!(t.mul(1, &x, &xinv), t.one(1));
        // (t+1)/(t) + 1/t = (t)/t... in char 2: (t+1+1)/t = t/t = 1
        let one = t.one(1);
        let a = t.div(1, &t.add(1, &x, &one), &x).unwrap();
        let b = t.div(1, &one, &x).unwrap();
        assert_eq!(t.add(1, &a, &b), one);
    }

    #[test]
    fn inseparable_tower_sqrt_t() {
        // GF(2)(t)(s), s^2 = t
        let ft = FieldTower::new_unchecked(
            Base::Prime(2),
            vec![Step::Transcendental { var: "t".into() }],
        )
        .unwrap();
        let tgen = ft.generator(1, 1);
        let mp = vec![ft.neg(1, &tgen), ft.zero(1), ft.one(1)];
        let tower = FieldTower::new_unchecked(
            Base::Prime(2),
            vec![
                Step::Transcendental { var: "t".into() },
                Step::Algebraic {
                    var: "s".into(),
                    min_poly: mp,
                    separable: false,
                    verified: true,
                },
            ],
        )
        .unwrap();
        let s = tower.generator(2, 2);
        let t_at2 = tower.generator(1, 2);
        assert_eq!(tower.mul(2, &s, &s), t_at2);
        let sinv = tower.inv(2, &s).unwrap();
        assert_eq!(tower.mul(2, &s, &sinv), tower.one(2));
    }

    #[test]
    fn gaussian_rationals() {
        // Q(i)
        let q = FieldTower::rationals();
        let mp = vec![q.one(0), q.zero(0), q.one(0)];
        let t = FieldTower::new_unchecked(
            Base::Rationals,
            vec![Step::Algebraic {
                var: "i".into(),
                min_poly: mp,
                separable: true,
                verified: true,
            }],
        )
        .unwrap();
        let i = t.generator(1, 1);
        assert_eq!(t.mul(1, &i, &i), t.from_int(1, -1));
        // (1+i)(1-i) = 2
        let a = t.add(1, &t.one(1), &i);
        let b = t.sub(1, &t.one(1), &i);
        assert_eq!(t.mul(1, &a, &b), t.from_int(1, 2));
        // 1/(1+i) = (1-i)/2
        let inv = t.inv(1, &a).unwrap();
        let half = t.div(1, &t.one(1), &t.from_int(1, 2)).unwrap();
        assert_eq!(inv, t.mul(1, &b, &half));
    }
}
