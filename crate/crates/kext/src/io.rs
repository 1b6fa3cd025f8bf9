//! JSON (de)serialization of towers, algebras, and modules.
//!
//! Tower: {"base": "Q" | {"GF": p}, "steps": [{"transcendental": "t"} |
//!   {"algebraic": {"var": "s", "minpoly": ["-t", "0", "1"]}}]}
//! Algebra: {"field": <tower>, "dim": n, "sc": [[[...]]], "unit": [...]}
//!   or shorthands {"group": "C3"}, {"quaternion": ["-1", "-1"]},
//!   {"polyquotient": {"minpoly": [...]}}, {"triangular": n},
//!   {"product": [A, B]} (each with "field").
//! Module: {"algebra": <inline or "catalog:NAME">, "dim": m,
//!   "action": [[[...]]]} or {"regular": true}, {"trivial": true},
//!   {"permutation": [[images], ...]} (one permutation per group element).
//!
//! Scalars are canonical strings; "catalog:NAME" resolves against the
//! built-in catalog, overridable per-name by files in $KEXT_CATALOG_DIR.

use serde_json::{json, Value};

use crate::algebra::construct::{
    group_algebra, poly_quotient_algebra, product_algebra, quaternion_algebra, triangular_algebra,
};
use crate::algebra::core::{AlgRef, Algebra};
use crate::algebra::groups::group_by_name;
use crate::error::{KextError, Result};
use crate::exact::factor::TowerBuilder;
use crate::exact::mat::Mat;
use crate::exact::parse::{parse_scalar_at, print_scalar, print_scalar_at};
use crate::exact::scalar::Poly;
use crate::exact::tower::{Base, Elem, Step, Tower};
use crate::modules::core::{regular_module, ModRef, Module};

fn bad(msg: impl Into<String>) -> KextError {
    KextError::BadInput(msg.into())
}

pub fn tower_to_json(t: &Tower) -> Value {
    let base = match t.base() {
        Base::Rationals => json!("Q"),
        Base::Prime(p) => json!({ "GF": p }),
    };
    let mut steps = Vec::new();
    for (i, s) in t.steps().iter().enumerate() {
        steps.push(match s {
            Step::Transcendental { var } => json!({ "transcendental": var }),
            Step::Algebraic { var, min_poly, .. } => {
                // coefficients live one level below this step
                let coeffs: Vec<String> =
                    min_poly.iter().map(|c| print_scalar_at(t, i, c)).collect();
                json!({ "algebraic": { "var": var, "minpoly": coeffs } })
            }
        });
    }
    json!({ "base": base, "steps": steps })
}

pub fn tower_from_json(v: &Value) -> Result<Tower> {
    let base = match v.get("base") {
        Some(Value::String(s)) if s == "Q" => Base::Rationals,
        Some(Value::Object(o)) => {
            let p = o
                .get("GF")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("base.GF must be a prime number"))?;
            Base::Prime(p)
        }
        _ => return Err(bad("tower needs \"base\": \"Q\" or {\"GF\": p}")),
    };
    let mut b = TowerBuilder::new(base)?;
    if let Some(steps) = v.get("steps") {
        let steps = steps.as_array().ok_or_else(|| bad("steps must be an array"))?;
        for s in steps {
            if let Some(var) = s.get("transcendental").and_then(Value::as_str) {
                b.add_transcendental(var)?;
            } else if let Some(a) = s.get("algebraic") {
                let var = a
                    .get("var")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("algebraic step needs var"))?;
                let cur = b.current()?;
                let coeffs = a
                    .get("minpoly")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("algebraic step needs minpoly"))?
                    .iter()
                    .map(|c| scalar_from_json(&cur, c))
                    .collect::<Result<Vec<Elem>>>()?;
                b.add_algebraic(var, coeffs)?;
            } else {
                return Err(bad("unknown tower step"));
            }
        }
    }
    b.finish()
}

fn scalar_from_json(t: &Tower, v: &Value) -> Result<Elem> {
    let lv = t.levels();
    match v {
        Value::String(s) => parse_scalar_at(t, lv, s),
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| bad("numeric scalars must be integers; use a string otherwise"))?;
            Ok(t.from_int(lv, i))
        }
        _ => Err(bad("scalar must be a string or integer")),
    }
}

fn vec_from_json(t: &Tower, v: &Value, n: usize) -> Result<Vec<Elem>> {
    let arr = v.as_array().ok_or_else(|| bad("expected an array of scalars"))?;
    if arr.len() != n {
        return Err(bad(format!("expected {} scalars, got {}", n, arr.len())));
    }
    arr.iter().map(|c| scalar_from_json(t, c)).collect()
}

fn vec_to_json(t: &Tower, v: &[Elem]) -> Value {
    Value::Array(v.iter().map(|e| json!(print_scalar(t, e))).collect())
}

pub fn algebra_to_json(a: &AlgRef) -> Value {
    let t = a.tower();
    let n = a.dim();
    let sc: Vec<Value> = (0..n)
        .map(|i| Value::Array((0..n).map(|j| vec_to_json(t, &a.sc()[i][j])).collect()))
        .collect();
    json!({
        "name": a.name(),
        "field": tower_to_json(t),
        "dim": n,
        "sc": sc,
        "unit": vec_to_json(t, a.unit()),
    })
}

/// Resolves "catalog:NAME", honoring $KEXT_CATALOG_DIR overrides.
fn resolve_catalog_algebra(name: &str) -> Result<AlgRef> {
    if let Ok(dir) = std::env::var("KEXT_CATALOG_DIR") {
        let path = std::path::Path::new(&dir).join(format!("{name}.json"));
        if path.is_file() {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
            let v: Value =
                serde_json::from_str(&text).map_err(|e| KextError::Parse(e.to_string()))?;
            return algebra_from_json(&v);
        }
    }
    crate::properties::catalog::algebra_by_name(name)
}

pub fn algebra_from_json(v: &Value) -> Result<AlgRef> {
    if let Some(s) = v.as_str() {
        if let Some(name) = s.strip_prefix("catalog:") {
            return resolve_catalog_algebra(name);
        }
        return Err(bad("algebra string must start with \"catalog:\""));
    }
    // shorthands split on "product" first, which has no "field"
    if let Some(p) = v.get("product") {
        let parts = p.as_array().ok_or_else(|| bad("product needs [A, B]"))?;
        if parts.len() != 2 {
            return Err(bad("product needs exactly two factors"));
        }
        let a = algebra_from_json(&parts[0])?;
        let b = algebra_from_json(&parts[1])?;
        return product_algebra(&a, &b, &format!("{}x{}", a.name(), b.name()));
    }
    let field = v
        .get("field")
        .ok_or_else(|| bad("algebra needs \"field\""))
        .and_then(tower_from_json)?;
    let name = v.get("name").and_then(Value::as_str);
    if let Some(g) = v.get("group").and_then(Value::as_str) {
        let group = group_by_name(g)?;
        return group_algebra(field, group, name.unwrap_or(g));
    }
    if let Some(q) = v.get("quaternion") {
        let ab = vec_from_json(&field, q, 2)?;
        return quaternion_algebra(field.clone(), &ab[0], &ab[1], name.unwrap_or("quaternion"));
    }
    if let Some(p) = v.get("polyquotient") {
        let coeffs = p
            .get("minpoly")
            .ok_or_else(|| bad("polyquotient needs minpoly"))?;
        let arr = coeffs.as_array().ok_or_else(|| bad("minpoly must be an array"))?;
        let coeffs = arr
            .iter()
            .map(|c| scalar_from_json(&field, c))
            .collect::<Result<Vec<Elem>>>()?;
        let f = Poly::new(field.clone(), "x", coeffs);
        return poly_quotient_algebra(&f, name.unwrap_or("polyquotient"));
    }
    if let Some(n) = v.get("triangular").and_then(Value::as_u64) {
        return triangular_algebra(field, n as usize, name.unwrap_or("triangular"));
    }
    // full structure-constant form
    let n = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("algebra needs \"dim\""))? as usize;
    let sc_v = v
        .get("sc")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("algebra needs \"sc\""))?;
    if sc_v.len() != n {
        return Err(bad("sc must have dim rows"));
    }
    let mut sc = vec![vec![Vec::new(); n]; n];
    for (i, row) in sc_v.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| bad("sc rows must be arrays"))?;
        if row.len() != n {
            return Err(bad("sc must be dim x dim"));
        }
        for (j, entry) in row.iter().enumerate() {
            sc[i][j] = vec_from_json(&field, entry, n)?;
        }
    }
    let unit = vec_from_json(
        &field,
        v.get("unit").ok_or_else(|| bad("algebra needs \"unit\""))?,
        n,
    )?;
    Algebra::new(field, name.unwrap_or("algebra"), sc, unit, vec![], None)
}

fn mat_from_json(t: &Tower, v: &Value, rows: usize, cols: usize) -> Result<Mat> {
    let arr = v.as_array().ok_or_else(|| bad("matrix must be an array of rows"))?;
    if arr.len() != rows {
        return Err(bad(format!("expected {} matrix rows", rows)));
    }
    let mut data = Vec::new();
    for row in arr {
        data.extend(vec_from_json(t, row, cols)?);
    }
    Ok(Mat::from_flat(t, rows, cols, data))
}

fn mat_to_json(t: &Tower, m: &Mat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| vec_to_json(t, m.row(i)))
            .collect(),
    )
}

pub fn module_to_json(m: &ModRef) -> Value {
    let t = m.tower();
    json!({
        "name": m.name(),
        "algebra": algebra_to_json(m.algebra()),
        "dim": m.dim(),
        "action": m.action().iter().map(|a| mat_to_json(t, a)).collect::<Vec<Value>>(),
    })
}

pub fn module_from_json(v: &Value) -> Result<ModRef> {
    let alg = algebra_from_json(
        v.get("algebra")
            .ok_or_else(|| bad("module needs \"algebra\""))?,
    )?;
    module_from_json_over(&alg, v)
}

/// Builds the module over a caller-supplied algebra (so several modules can
/// share one algebra instance).
pub fn module_from_json_over(alg: &AlgRef, v: &Value) -> Result<ModRef> {
    let t = alg.tower().clone();
    if v.get("regular").and_then(Value::as_bool) == Some(true) {
        return regular_module(alg);
    }
    if v.get("trivial").and_then(Value::as_bool) == Some(true) {
        if alg.group().is_none() {
            return Err(KextError::NotAGroupAlgebra);
        }
        let action = (0..alg.dim()).map(|_| Mat::identity(&t, 1)).collect();
        return Module::new(alg.clone(), "trivial", action);
    }
    if let Some(p) = v.get("permutation") {
        let Some(group) = alg.group() else {
            return Err(KextError::NotAGroupAlgebra);
        };
        let perms = p
            .as_array()
            .ok_or_else(|| bad("permutation needs one image array per group element"))?;
        if perms.len() != group.order {
            return Err(bad("permutation count must equal the group order"));
        }
        let points = perms[0]
            .as_array()
            .ok_or_else(|| bad("permutations are arrays of images"))?
            .len();
        let mut action = Vec::new();
        for perm in perms {
            let images = perm
                .as_array()
                .ok_or_else(|| bad("permutations are arrays of images"))?;
            let mut m = Mat::zeros(&t, points, points);
            for (from, img) in images.iter().enumerate() {
                let to = img
                    .as_u64()
                    .filter(|&x| (x as usize) < points)
                    .ok_or_else(|| bad("permutation image out of range"))?;
                m.set(from, to as usize, t.one(t.levels()));
            }
            action.push(m);
        }
        return Module::new(alg.clone(), "permutation", action);
    }
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("module needs \"dim\""))? as usize;
    let action_v = v
        .get("action")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("module needs \"action\""))?;
    if action_v.len() != alg.dim() {
        return Err(bad("one action matrix per algebra basis element required"));
    }
    let action = action_v
        .iter()
        .map(|a| mat_from_json(&t, a, dim, dim))
        .collect::<Result<Vec<Mat>>>()?;
    Module::new(
        alg.clone(),
        v.get("name").and_then(Value::as_str).unwrap_or("module"),
        action,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_round_trip() {
        let t = crate::properties::catalog::gf2_t_s();
        let j = tower_to_json(&t);
        let back = tower_from_json(&j).unwrap();
        assert_eq!(t.as_ref(), back.as_ref());
    }

    #[test]
    fn algebra_round_trip() {
        let a = crate::properties::catalog::algebra_by_name("Q[S3]").unwrap();
        let j = algebra_to_json(&a);
        let back = algebra_from_json(&j).unwrap();
        assert_eq!(a.sc(), back.sc());
        assert_eq!(a.unit(), back.unit());
    }

    #[test]
    fn shorthands_parse() {
        let v = json!({ "group": "C3", "field": { "base": "Q", "steps": [] } });
        let a = algebra_from_json(&v).unwrap();
        assert_eq!(a.dim(), 3);
        let v = json!({ "quaternion": ["-1", "-1"], "field": { "base": "Q", "steps": [] } });
        let a = algebra_from_json(&v).unwrap();
        assert_eq!(a.dim(), 4);
        let v = json!({ "triangular": 2, "field": { "base": { "GF": 3 }, "steps": [] } });
        let a = algebra_from_json(&v).unwrap();
        assert_eq!(a.dim(), 3);
        let v = json!({
            "polyquotient": { "minpoly": ["1", "1", "1"] },
            "field": { "base": { "GF": 2 }, "steps": [] }
        });
        let a = algebra_from_json(&v).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn catalog_reference_parses() {
        let v = json!("catalog:Q[C3]");
        let a = algebra_from_json(&v).unwrap();
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn module_round_trip_and_constructors() {
        let v = json!({ "algebra": "catalog:GF(2)[C3]", "regular": true });
        let m = module_from_json(&v).unwrap();
        assert_eq!(m.dim(), 3);
        let j = module_to_json(&m);
        let back = module_from_json(&j).unwrap();
        assert_eq!(back.dim(), 3);
        assert_eq!(m.action(), back.action());
        let v = json!({ "algebra": "catalog:GF(2)[C3]", "trivial": true });
        let m = module_from_json(&v).unwrap();
        assert_eq!(m.dim(), 1);
        // C3 acting on 3 points cyclically
        let v = json!({
            "algebra": "catalog:GF(2)[C3]",
            "permutation": [[0,1,2],[1,2,0],[2,0,1]]
        });
        let m = module_from_json(&v).unwrap();
        assert_eq!(m.dim(), 3);
    }
}
