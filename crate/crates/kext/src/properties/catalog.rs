//! The curated instance catalog: named algebras and tower extensions the
//! verification suite runs over.

use std::sync::OnceLock;

use crate::algebra::construct::{
    group_algebra, matrix_algebra, poly_quotient_algebra, quaternion_algebra, triangular_algebra,
};
use crate::algebra::core::AlgRef;
use crate::algebra::groups::{all_group_names, group_by_name};
use crate::error::{KextError, Result};
use crate::exact::factor::TowerBuilder;
use crate::exact::scalar::{towers, Poly};
use crate::exact::tower::{Base, Tower};
use crate::scalarext::TowerInclusion;

pub struct CatalogAlgebra {
    pub name: String,
    pub algebra: AlgRef,
}

pub struct CatalogExtension {
    pub name: String,
    pub inc: TowerInclusion,
}

pub struct Catalog {
    pub algebras: Vec<CatalogAlgebra>,
    pub extensions: Vec<CatalogExtension>,
}

/// GF(2)(t): rational functions over GF(2).
pub fn gf2_t() -> Tower {
    let mut b = TowerBuilder::new(Base::Prime(2)).unwrap();
    b.add_transcendental("t").unwrap();
    b.current().unwrap()
}

/// GF(2)(t)(s) with s^2 = t: the inseparable extension of gf2_t.
pub fn gf2_t_s() -> Tower {
    let mut b = TowerBuilder::new(Base::Prime(2)).unwrap();
    b.add_transcendental("t").unwrap();
    let f = b.current().unwrap();
    let t = f.generator(1, 1);
    b.add_algebraic("s", vec![f.neg(1, &t), f.zero(1), f.one(1)]).unwrap();
    b.current().unwrap()
}

pub fn q_i() -> Tower {
    let mut b = TowerBuilder::new(Base::Rationals).unwrap();
    let q = b.current().unwrap();
    b.add_algebraic("i", vec![q.one(0), q.zero(0), q.one(0)]).unwrap();
    b.current().unwrap()
}

pub fn q_omega() -> Tower {
    let mut b = TowerBuilder::new(Base::Rationals).unwrap();
    let q = b.current().unwrap();
    b.add_algebraic("w", vec![q.one(0), q.one(0), q.one(0)]).unwrap();
    b.current().unwrap()
}

pub fn gf4() -> Tower {
    let mut b = TowerBuilder::new(Base::Prime(2)).unwrap();
    let f2 = b.current().unwrap();
    b.add_algebraic("w", vec![f2.one(0), f2.one(0), f2.one(0)]).unwrap();
    b.current().unwrap()
}

/// GF(16) as GF(4)(v) with v^2 + v + w = 0.
pub fn gf16() -> Tower {
    let mut b = TowerBuilder::new(Base::Prime(2)).unwrap();
    let f2 = b.current().unwrap();
    b.add_algebraic("w", vec![f2.one(0), f2.one(0), f2.one(0)]).unwrap();
    let f4 = b.current().unwrap();
    let w = f4.generator(1, 1);
    b.add_algebraic("v", vec![w, f4.one(1), f4.one(1)]).unwrap();
    b.current().unwrap()
}

pub fn gf9() -> Tower {
    let mut b = TowerBuilder::new(Base::Prime(3)).unwrap();
    let f3 = b.current().unwrap();
    b.add_algebraic("u", vec![f3.one(0), f3.zero(0), f3.one(0)]).unwrap();
    b.current().unwrap()
}

fn field_label(t: &Tower) -> String {
    match (t.characteristic(), t.levels()) {
        (0, 0) => "Q".into(),
        (2, 0) => "GF(2)".into(),
        (3, 0) => "GF(3)".into(),
        _ => crate::exact::parse::describe_tower(t),
    }
}

fn build_algebras() -> Vec<CatalogAlgebra> {
    let mut out: Vec<CatalogAlgebra> = Vec::new();
    let mut push = |name: String, a: Result<AlgRef>| {
        out.push(CatalogAlgebra {
            name: name.clone(),
            algebra: a.expect(&name),
        });
    };
    // group algebras of every group of order <= 12 over Q, GF(2), GF(3)
    for tower in [towers::q(), towers::gf(2), towers::gf(3)] {
        for g in all_group_names() {
            let name = format!("{}[{}]", field_label(&tower), g);
            push(
                name.clone(),
                group_algebra(tower.clone(), group_by_name(g).unwrap(), &name),
            );
        }
    }
    // a few group algebras over extension and function fields, so the
    // suite exercises those coefficient fields on the small side too
    for (tower, names) in [
        (gf4(), &["C2", "C3", "S3"][..]),
        (gf2_t(), &["C2", "C3"][..]),
    ] {
        for g in names {
            let name = format!("{}[{}]", field_label(&tower), g);
            push(
                name.clone(),
                group_algebra(tower.clone(), group_by_name(g).unwrap(), &name),
            );
        }
    }
    // polynomial quotients of degree <= 4
    let q = towers::q();
    let f2 = towers::gf(2);
    let f3 = towers::gf(3);
    let polys: Vec<(Tower, &str, Vec<i64>)> = vec![
        (q.clone(), "Q[x]/(x^2)", vec![0, 0, 1]),
        (q.clone(), "Q[x]/(x^2+1)", vec![1, 0, 1]),
        (q.clone(), "Q[x]/(x^2+x+1)", vec![1, 1, 1]),
        (q.clone(), "Q[x]/(x^3-x)", vec![0, -1, 0, 1]),
        (q.clone(), "Q[x]/(x^4-1)", vec![-1, 0, 0, 0, 1]),
        (q.clone(), "Q[x]/(x^3)", vec![0, 0, 0, 1]),
        (f2.clone(), "GF(4)/GF(2)", vec![1, 1, 1]),
        (f2.clone(), "GF(2)[x]/(x^2)", vec![0, 0, 1]),
        (f2.clone(), "GF(8)/GF(2)", vec![1, 1, 0, 1]),
        (f2.clone(), "GF(16)/GF(2)", vec![1, 1, 0, 0, 1]),
        (f3.clone(), "GF(9)/GF(3)", vec![1, 0, 1]),
        (f3.clone(), "GF(3)[x]/(x^3-x)", vec![0, -1, 0, 1]),
    ];
    for (tower, name, coeffs) in polys {
        let f = Poly::from_ints(&tower, "x", &coeffs);
        push(name.to_string(), poly_quotient_algebra(&f, name));
    }
    // triangular matrices n <= 3
    for tower in [q.clone(), f2.clone(), f3.clone()] {
        for n in 2..=3usize {
            let name = format!("T{}({})", n, field_label(&tower));
            push(name.clone(), triangular_algebra(tower.clone(), n, &name));
        }
    }
    // full matrix algebras
    for tower in [q.clone(), f2.clone(), f3.clone()] {
        let name = format!("M2({})", field_label(&tower));
        push(name.clone(), matrix_algebra(tower.clone(), 2, &name));
    }
    // quaternion algebras
    let m1 = q.from_int(0, -1);
    let p1 = q.from_int(0, 1);
    push("H".to_string(), quaternion_algebra(q.clone(), &m1, &m1, "H"));
    push(
        "H(1,1)".to_string(),
        quaternion_algebra(q.clone(), &p1, &p1, "H(1,1)"),
    );
    let m1_3 = f3.from_int(0, -1);
    push(
        "H(-1,-1;GF(3))".to_string(),
        quaternion_algebra(f3.clone(), &m1_3, &m1_3, "H(-1,-1;GF(3))"),
    );
    // the inseparable witness algebra: GF(2)(t)[x]/(x^2 - t)
    let ft = gf2_t();
    let t = ft.generator(1, 1);
    let f = Poly::new(ft.clone(), "x", vec![ft.neg(1, &t), ft.zero(1), ft.one(1)]);
    push(
        "GF(2)(t)[x]/(x^2-t)".to_string(),
        poly_quotient_algebra(&f, "GF(2)(t)[x]/(x^2-t)"),
    );
    out
}

fn build_extensions() -> Vec<CatalogExtension> {
    let mut out = Vec::new();
    let mut push = |name: &str, small: Tower, large: Tower| {
        out.push(CatalogExtension {
            name: name.to_string(),
            inc: TowerInclusion::new(small, large).expect(name),
        });
    };
    push("Q->Q", towers::q(), towers::q());
    push("Q->Q(i)", towers::q(), q_i());
    push("Q->Q(w)", towers::q(), q_omega());
    push("GF(2)->GF(4)", towers::gf(2), gf4());
    push("GF(2)->GF(16)", towers::gf(2), gf16());
    push("GF(4)->GF(16)", gf4(), gf16());
    push("GF(3)->GF(9)", towers::gf(3), gf9());
    push("GF(2)(t)->GF(2)(t)(s)", gf2_t(), gf2_t_s());
    out
}

/// The shipped instance catalog, built once per process.
pub fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| Catalog {
        algebras: build_algebras(),
        extensions: build_extensions(),
    })
}

pub fn algebra_by_name(name: &str) -> Result<AlgRef> {
    catalog()
        .algebras
        .iter()
        .find(|a| a.name == name)
        .map(|a| a.algebra.clone())
        .ok_or_else(|| KextError::BadInput(format!("unknown catalog algebra '{name}'")))
}

pub fn extension_by_name(name: &str) -> Result<TowerInclusion> {
    catalog()
        .extensions
        .iter()
        .find(|e| e.name == name)
        .map(|e| e.inc.clone())
        .ok_or_else(|| KextError::BadInput(format!("unknown catalog extension '{name}'")))
}

/// Catalog extensions applicable to an algebra (same coefficient tower).
pub fn extensions_of(alg: &AlgRef) -> Vec<&'static CatalogExtension> {
    catalog()
        .extensions
        .iter()
        .filter(|e| e.inc.small().as_ref() == alg.tower().as_ref())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_nonempty_and_named() {
        let c = catalog();
        assert!(c.algebras.len() >= 80);
        assert_eq!(c.extensions.len(), 8);
        assert!(algebra_by_name("Q[C3]").is_ok());
        assert!(algebra_by_name("GF(2)(t)[x]/(x^2-t)").is_ok());
        assert!(extension_by_name("Q->Q(w)").is_ok());
        assert!(extension_by_name("GF(2)(t)->GF(2)(t)(s)").is_ok());
    }

    #[test]
    fn inseparable_pair_is_flagged() {
        let inc = extension_by_name("GF(2)(t)->GF(2)(t)(s)").unwrap();
        assert!(!inc.is_separable());
        let inc = extension_by_name("GF(2)->GF(4)").unwrap();
        assert!(inc.is_separable());
    }

    #[test]
    fn extensions_match_towers() {
        let a = algebra_by_name("GF(2)[C3]").unwrap();
        let exts: Vec<&str> = extensions_of(&a).iter().map(|e| e.name.as_str()).collect();
        assert_eq!(exts, vec!["GF(2)->GF(4)", "GF(2)->GF(16)"]);
    }
}
