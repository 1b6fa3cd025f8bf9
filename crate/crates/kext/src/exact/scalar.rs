//! Owned scalar values over a tower, at the full tower level.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::Result;
use crate::exact::tower::{Elem, FieldTower, Tower};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    tower: Tower,
    repr: Elem,
}

impl Scalar {
    pub fn new(tower: Tower, repr: Elem) -> Self {
        Scalar { tower, repr }
    }

    pub fn zero(tower: &Tower) -> Self {
        let repr = tower.zero(tower.levels());
        Scalar::new(tower.clone(), repr)
    }

    pub fn one(tower: &Tower) -> Self {
        let repr = tower.one(tower.levels());
        Scalar::new(tower.clone(), repr)
    }

    pub fn from_int(tower: &Tower, n: i64) -> Self {
        Scalar::new(tower.clone(), tower.from_int(tower.levels(), n))
    }

    pub fn generator(tower: &Tower, var: &str) -> Option<Self> {
        let lv = tower.var_level(var)?;
        Some(Scalar::new(tower.clone(), tower.generator(lv, tower.levels())))
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn repr(&self) -> &Elem {
        &self.repr
    }

    pub fn into_repr(self) -> Elem {
        self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.tower.is_zero_elem(&self.repr)
    }

    pub fn inv(&self) -> Result<Self> {
        let lv = self.tower.levels();
        Ok(Scalar::new(self.tower.clone(), self.tower.inv(lv, &self.repr)?))
    }

    pub fn pow(&self, n: u64) -> Self {
        let lv = self.tower.levels();
        Scalar::new(self.tower.clone(), self.tower.pow(lv, &self.repr, n))
    }

    fn same_tower(&self, other: &Scalar) -> bool {
        Arc::ptr_eq(&self.tower, &other.tower) || *self.tower == *other.tower
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                assert!(self.same_tower(rhs), "scalars from different towers");
                let lv = self.tower.levels();
                Scalar::new(self.tower.clone(), self.tower.$op(lv, &self.repr, &rhs.repr))
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, add);
scalar_binop!(Sub, sub, sub);
scalar_binop!(Mul, mul, mul);

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(self.same_tower(rhs), "scalars from different towers");
        let lv = self.tower.levels();
        Scalar::new(
            self.tower.clone(),
            self.tower.div(lv, &self.repr, &rhs.repr).expect("division by zero"),
        )
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let lv = self.tower.levels();
        Scalar::new(self.tower.clone(), self.tower.neg(lv, &self.repr))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::exact::parse::print_scalar(&self.tower, &self.repr)
        )
    }
}

/// Univariate polynomial with coefficients at the full level of its tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    tower: Tower,
    var: String,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(tower: Tower, var: &str, coeffs: Vec<Elem>) -> Self {
        let coeffs = tower.ptrim(coeffs);
        Poly {
            tower,
            var: var.to_string(),
            coeffs,
        }
    }

    pub fn from_scalars(tower: &Tower, var: &str, coeffs: &[Scalar]) -> Self {
        Poly::new(
            tower.clone(),
            var,
            coeffs.iter().map(|c| c.repr().clone()).collect(),
        )
    }

    pub fn from_ints(tower: &Tower, var: &str, coeffs: &[i64]) -> Self {
        let lv = tower.levels();
        Poly::new(
            tower.clone(),
            var,
            coeffs.iter().map(|&c| tower.from_int(lv, c)).collect(),
        )
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        let lv = self.tower.levels();
        self.coeffs.last() == Some(&self.tower.one(lv))
    }

    fn lv(&self) -> usize {
        self.tower.levels()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly::new(
            self.tower.clone(),
            &self.var,
            self.tower.padd(self.lv(), &self.coeffs, &other.coeffs),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        Poly::new(
            self.tower.clone(),
            &self.var,
            self.tower.psub(self.lv(), &self.coeffs, &other.coeffs),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        Poly::new(
            self.tower.clone(),
            &self.var,
            self.tower.pmul(self.lv(), &self.coeffs, &other.coeffs),
        )
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(
            self.tower.clone(),
            &self.var,
            self.tower.pmul_scalar(self.lv(), &self.coeffs, s.repr()),
        )
    }

    pub fn divrem(&self, other: &Poly) -> (Poly, Poly) {
        let (q, r) = self.tower.pdivrem(self.lv(), &self.coeffs, &other.coeffs);
        (
            Poly::new(self.tower.clone(), &self.var, q),
            Poly::new(self.tower.clone(), &self.var, r),
        )
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        Poly::new(
            self.tower.clone(),
            &self.var,
            self.tower.pgcd(self.lv(), &self.coeffs, &other.coeffs),
        )
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.tower.clone(),
            &self.var,
            self.tower.pderiv(self.lv(), &self.coeffs),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        Scalar::new(
            self.tower.clone(),
            self.tower.peval(self.lv(), &self.coeffs, x.repr()),
        )
    }

    pub fn monic(&self) -> Poly {
        Poly::new(
            self.tower.clone(),
            &self.var,
            self.tower.pmonic(self.lv(), &self.coeffs),
        )
    }
}

/// gcd(f, f') is a nonzero constant exactly when the step is separable.
/// In characteristic p an inseparable minimal polynomial has f' sharing a
/// factor with f (possibly f' = 0, where gcd(f, 0) = f).
pub fn is_separable_step(f: &Poly) -> bool {
    let d = f.derivative();
    if d.is_zero() {
        return f.is_constant();
    }
    f.gcd(&d).is_constant()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::exact::parse::print_poly(&self.tower, &self.var, &self.coeffs)
        )
    }
}

// re-export for convenience
pub use crate::exact::tower::{Base, Step};
pub type TowerRef = Tower;
pub use crate::exact::tower::FieldTower as TowerData;

/// Convenience constructors for the towers that show up everywhere.
pub mod towers {
    use super::*;

    pub fn q() -> Tower {
        FieldTower::rationals()
    }

    pub fn gf(p: u64) -> Tower {
        FieldTower::prime_field(p).unwrap()
    }
}
