//! Named proposition checkers over the instance catalog, with seeded
//! instance generation and deterministic reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::core::AlgRef;
use crate::algebra::frobenius::is_frobenius;
use crate::algebra::radical::{is_semisimple, radical};
use crate::algebra::separable::is_separable_algebra;
use crate::error::{KextError, Result};
use crate::exact::scalar::is_separable_step;
use crate::exact::tower::Elem;
use crate::modules::core::{regular_module, ModRef};
use crate::modules::decompose::decompose;
use crate::modules::hom::{end_algebra, find_iso, hom_dim};
use crate::modules::socle::{composition_length, semisimplify, socle};
use crate::properties::catalog::{catalog, extensions_of, gf2_t};
use crate::properties::oracle::oracle_submodule_lattice;
use crate::scalarext::lattice::all_submodules;
use crate::scalarext::{
    check_relative_full_faithfulness, check_semisimplicity_permanence, check_tensor_functoriality,
    extend_pair, ideal_subobject_check, split_simple,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckId {
    FfT,
    SsSeparable,
    SsEndosep,
    InsepCounterexample,
    HomSsBound,
    FrobeniusSocTop,
    FrobeniusStable,
    SemisimpleImpliesFrobenius,
    IdealLattice,
    TensorFunctor,
    LengthEnd,
    OracleLattice,
}

impl CheckId {
    pub fn all() -> Vec<CheckId> {
        use CheckId::*;
        vec![
            FfT,
            SsSeparable,
            SsEndosep,
            InsepCounterexample,
            HomSsBound,
            FrobeniusSocTop,
            FrobeniusStable,
            SemisimpleImpliesFrobenius,
            IdealLattice,
            TensorFunctor,
            LengthEnd,
            OracleLattice,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        use CheckId::*;
        match self {
            FfT => "FF_T",
            SsSeparable => "SS_SEPARABLE",
            SsEndosep => "SS_ENDOSEP",
            InsepCounterexample => "INSEP_COUNTEREXAMPLE",
            HomSsBound => "HOM_SS_BOUND",
            FrobeniusSocTop => "FROBENIUS_SOC_TOP",
            FrobeniusStable => "FROBENIUS_STABLE",
            SemisimpleImpliesFrobenius => "SEMISIMPLE_IMPLIES_FROBENIUS",
            IdealLattice => "IDEAL_LATTICE",
            TensorFunctor => "TENSOR_FUNCTOR",
            LengthEnd => "LENGTH_END",
            OracleLattice => "ORACLE_LATTICE",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = KextError;
    fn from_str(s: &str) -> Result<CheckId> {
        CheckId::all()
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| KextError::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceOutcome {
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub check: String,
    pub seed: u64,
    pub trials: usize,
    pub instances: Vec<InstanceOutcome>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub wall_ms: u128,
}

fn ok(instance: String, pass: bool, detail: Option<String>) -> InstanceOutcome {
    InstanceOutcome {
        instance,
        pass,
        detail,
    }
}

/// Deterministic pool of modules over an algebra: the regular module plus
/// seeded submodules, quotients, and a direct sum.
fn module_pool(alg: &AlgRef, rng: &mut ChaCha8Rng, extra: usize, cap: usize) -> Vec<ModRef> {
    let mut pool: Vec<ModRef> = Vec::new();
    let Ok(reg) = regular_module(alg) else {
        return pool;
    };
    if reg.dim() <= cap {
        pool.push(reg.clone());
    }
    let tower = alg.tower().clone();
    let lv = tower.levels();
    for round in 0..extra {
        let v: Vec<Elem> = (0..reg.dim())
            .map(|_| tower.from_int(lv, rng.gen_range(-2i64..=2)))
            .collect();
        let span = reg.spin(&[v]);
        if span.dim() > 0 && span.dim() < reg.dim() {
            if let Ok((sub, _)) = reg.submodule(&span, &format!("{}<{}>", alg.name(), round)) {
                if sub.dim() <= cap {
                    pool.push(sub);
                }
            }
            if let Ok((quo, _)) = reg.quotient(&span, &format!("{}/<{}>", alg.name(), round)) {
                if quo.dim() <= cap {
                    pool.push(quo);
                }
            }
        }
    }
    if pool.len() >= 2 {
        let a = pool[0].clone();
        let b = pool[pool.len() - 1].clone();
        if a.dim() + b.dim() <= cap {
            if let Ok(s) = a.direct_sum(&b, &format!("{}(+)", alg.name())) {
                pool.push(s);
            }
        }
    }
    pool
}

/// Representatives of the isomorphism classes of simple summands of the
/// regular module (only over fields where decomposition is supported).
fn simples_of(alg: &AlgRef) -> Result<Vec<ModRef>> {
    let reg = regular_module(alg)?;
    let dec = decompose(&reg)?;
    Ok(dec
        .classes
        .iter()
        .map(|&(rep, _)| dec.summands[rep].module.clone())
        .collect())
}

fn is_function_field(alg: &AlgRef) -> bool {
    matches!(
        crate::exact::factor::classify(alg.tower()),
        crate::exact::factor::TowerKind::FunctionField
    )
}

fn check_ff_t(seed: u64, trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // spread the budget across the extensions so every coefficient field
    // in the catalog gets exercised, whatever the total trial count
    let per_ext = (trials.max(100) / catalog().extensions.len()).max(12);
    for ext in &catalog().extensions {
        let mut budget = per_ext;
        for ca in &catalog().algebras {
            if ca.algebra.tower().as_ref() != ext.inc.small().as_ref() {
                continue;
            }
            if ca.algebra.dim() > 12 || budget == 0 {
                continue;
            }
            let extra = if ca.algebra.dim() <= 6 { 1 } else { 0 };
            let pool = module_pool(&ca.algebra, &mut rng, extra, 12);
            for m in &pool {
                for n in &pool {
                    if budget == 0 {
                        break;
                    }
                    let r = check_relative_full_faithfulness(m, n, &ext.inc)?;
                    out.push(ok(
                        format!("FF_T {} Hom({},{})", ext.name, m.name(), n.name()),
                        r.pass,
                        Some(format!("dims {} = {}", r.dim_small, r.dim_large)),
                    ));
                    budget -= 1;
                }
            }
        }
    }
    Ok(out)
}

fn check_ss_separable(seed: u64, _trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for ext in &catalog().extensions {
        if !ext.inc.is_separable() {
            continue;
        }
        for ca in &catalog().algebras {
            if ca.algebra.tower().as_ref() != ext.inc.small().as_ref() || ca.algebra.dim() > 12 {
                continue;
            }
            if !is_semisimple(&ca.algebra)? {
                continue;
            }
            for m in module_pool(&ca.algebra, &mut rng, 1, 12) {
                let (_, tm) = extend_pair(&m, &ext.inc)?;
                let soc = socle(&tm)?;
                out.push(ok(
                    format!("SS_SEPARABLE {} t({})", ext.name, m.name()),
                    soc.dim() == tm.dim(),
                    Some(format!("soc dim {} of {}", soc.dim(), tm.dim())),
                ));
            }
        }
    }
    Ok(out)
}

fn check_ss_endosep(_seed: u64, _trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    for ext in &catalog().extensions {
        for ca in &catalog().algebras {
            if ca.algebra.tower().as_ref() != ext.inc.small().as_ref()
                || ca.algebra.dim() > 9
                || is_function_field(&ca.algebra)
            {
                continue;
            }
            if !is_semisimple(&ca.algebra)? {
                continue;
            }
            // hypothesis: every simple summand has separable endomorphisms
            let mut applies = true;
            for s in simples_of(&ca.algebra)? {
                let (endo, _) = end_algebra(&s, "End")?;
                if !is_separable_algebra(&endo)? {
                    applies = false;
                    break;
                }
            }
            if !applies {
                continue;
            }
            let m = regular_module(&ca.algebra)?;
            let r = check_semisimplicity_permanence(&m, &ext.inc)?;
            out.push(ok(
                format!("SS_ENDOSEP {} {}", ext.name, ca.name),
                r.pass && r.semisimple_large == Some(true),
                Some(format!("regime {}", r.regime)),
            ));
        }
    }
    Ok(out)
}

fn check_insep_counterexample(_seed: u64, _trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    // the defining polynomial x^2 - t is inseparable
    let ft = gf2_t();
    let t = ft.generator(1, 1);
    let f = crate::exact::scalar::Poly::new(
        ft.clone(),
        "x",
        vec![ft.neg(1, &t), ft.zero(1), ft.one(1)],
    );
    out.push(ok(
        "INSEP x^2 - t is inseparable over GF(2)(t)".into(),
        !is_separable_step(&f),
        None,
    ));
    let alg = crate::properties::catalog::algebra_by_name("GF(2)(t)[x]/(x^2-t)")?;
    let inc = crate::properties::catalog::extension_by_name("GF(2)(t)->GF(2)(t)(s)")?;
    let m = regular_module(&alg)?;
    let r = check_semisimplicity_permanence(&m, &inc)?;
    let witness = r.witness.clone().map(|w| w.join(", "));
    out.push(ok(
        "INSEP nilpotent witness in F'(x)F'".into(),
        r.regime == "nilpotent-witness"
            && r.semisimple_large == Some(false)
            && r.witness.is_some(),
        witness,
    ));
    Ok(out)
}

fn check_hom_ss_bound(seed: u64, trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut budget = trials.max(200);
    // the strict-inequality witness: X = Y = regular Q[x]/(x^2)
    let dual = crate::properties::catalog::algebra_by_name("Q[x]/(x^2)")?;
    let m = regular_module(&dual)?;
    let ssm = semisimplify(&m)?;
    let (a, b) = (hom_dim(&m, &m)?, hom_dim(&ssm, &ssm)?);
    out.push(ok(
        "HOM_SS_BOUND witness Q[x]/(x^2) regular".into(),
        a == 2 && b == 4,
        Some(format!("{a} <= {b}")),
    ));
    for ca in &catalog().algebras {
        if ca.algebra.dim() > 8 || is_function_field(&ca.algebra) || budget == 0 {
            continue;
        }
        let pool = module_pool(&ca.algebra, &mut rng, 2, 8);
        for x in &pool {
            for y in &pool {
                if budget == 0 {
                    break;
                }
                let lhs = hom_dim(x, y)?;
                let (ssx, ssy) = (semisimplify(x)?, semisimplify(y)?);
                let rhs = hom_dim(&ssx, &ssy)?;
                out.push(ok(
                    format!("HOM_SS_BOUND Hom({},{})", x.name(), y.name()),
                    lhs <= rhs,
                    Some(format!("{lhs} <= {rhs}")),
                ));
                budget -= 1;
            }
        }
    }
    Ok(out)
}

fn soc_top_iso(alg: &AlgRef) -> Result<bool> {
    let m = regular_module(alg)?;
    let soc = socle(&m)?;
    let (soc_mod, _) = m.submodule(&soc, "soc(E)")?;
    let rad = radical(alg)?;
    let (top_mod, _) = m.quotient(&rad, "E/rad(E)")?;
    Ok(find_iso(&soc_mod, &top_mod)?.is_some())
}

fn check_frobenius_soc_top(_seed: u64, _trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    for ca in &catalog().algebras {
        if ca.algebra.dim() > 8 || is_function_field(&ca.algebra) {
            continue;
        }
        let r = is_frobenius(&ca.algebra)?;
        if r.frobenius {
            let iso = soc_top_iso(&ca.algebra)?;
            out.push(ok(
                format!("FROBENIUS_SOC_TOP {}", ca.name),
                iso,
                Some("Frobenius => soc(E) ~ E/rad(E)".into()),
            ));
        }
    }
    // the standard failure: T2 is neither Frobenius nor soc ~ top
    for name in ["T2(Q)", "T2(GF(2))", "T2(GF(3))"] {
        let alg = crate::properties::catalog::algebra_by_name(name)?;
        let r = is_frobenius(&alg)?;
        let iso = soc_top_iso(&alg)?;
        out.push(ok(
            format!("FROBENIUS_SOC_TOP {name} fails both"),
            !r.frobenius && r.certified && !iso,
            None,
        ));
    }
    Ok(out)
}

fn check_frobenius_stable(_seed: u64, _trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    for ca in &catalog().algebras {
        if ca.algebra.dim() > 12 || is_function_field(&ca.algebra) {
            continue;
        }
        let r = is_frobenius(&ca.algebra)?;
        if !r.frobenius {
            continue;
        }
        for ext in extensions_of(&ca.algebra) {
            let ealg = crate::scalarext::extend_algebra(&ca.algebra, &ext.inc)?;
            let re = is_frobenius(&ealg)?;
            out.push(ok(
                format!("FROBENIUS_STABLE {} {}", ext.name, ca.name),
                re.frobenius,
                None,
            ));
        }
    }
    Ok(out)
}

fn check_ss_implies_frobenius(_seed: u64, _trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    for ca in &catalog().algebras {
        if is_function_field(&ca.algebra) || ca.algebra.dim() > 12 {
            continue;
        }
        if !is_semisimple(&ca.algebra)? {
            continue;
        }
        let r = is_frobenius(&ca.algebra)?;
        out.push(ok(
            format!("SEMISIMPLE_IMPLIES_FROBENIUS {}", ca.name),
            r.frobenius,
            None,
        ));
    }
    Ok(out)
}

fn check_ideal_lattice(_seed: u64, _trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    for ca in &catalog().algebras {
        let t = ca.algebra.tower();
        if t.field_size(t.levels()).is_none() || ca.algebra.dim() > 6 {
            continue;
        }
        let simples = simples_of(&ca.algebra)?;
        for ext in extensions_of(&ca.algebra) {
            for s in &simples {
                match ideal_subobject_check(s, &ext.inc) {
                    Ok(r) => out.push(ok(
                        format!("IDEAL_LATTICE {} {} dim {}", ext.name, ca.name, s.dim()),
                        r.pass,
                        Some(format!("{} ideals <-> {} submodules", r.ideal_count, r.submodule_count)),
                    )),
                    Err(KextError::TooLarge) => continue,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(out)
}

fn check_tensor_functor(seed: u64, _trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for ca in &catalog().algebras {
        if ca.algebra.group().is_none() || ca.algebra.dim() > 6 {
            continue;
        }
        for ext in extensions_of(&ca.algebra) {
            let pool = module_pool(&ca.algebra, &mut rng, 1, 6);
            for m in &pool {
                for n in &pool {
                    if m.dim() * n.dim() > 16 {
                        continue;
                    }
                    let r = check_tensor_functoriality(m, n, &ext.inc)?;
                    out.push(ok(
                        format!("TENSOR_FUNCTOR {} {} ({},{})", ext.name, ca.name, m.name(), n.name()),
                        r.pass,
                        None,
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn check_length_end(_seed: u64, _trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    for ca in &catalog().algebras {
        if is_function_field(&ca.algebra) || ca.algebra.dim() > 8 {
            continue;
        }
        let simples = match simples_of(&ca.algebra) {
            Ok(s) => s,
            Err(KextError::Undecidable) => continue,
            Err(e) => return Err(e),
        };
        for ext in extensions_of(&ca.algebra) {
            for s in &simples {
                match split_simple(s, &ext.inc) {
                    Ok(r) => {
                        let dims_ok = {
                            let m_end = hom_dim(s, s)?;
                            let (_, ts) = extend_pair(s, &ext.inc)?;
                            hom_dim(&ts, &ts)? == m_end
                        };
                        out.push(ok(
                            format!("LENGTH_END {} {} dim {}", ext.name, ca.name, s.dim()),
                            r.pass && dims_ok,
                            Some(format!("length {:?} = {:?}", r.length_ts, r.length_end)),
                        ));
                    }
                    Err(KextError::NotSimple) | Err(KextError::Undecidable) => continue,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(out)
}

fn check_oracle_lattice(_seed: u64, _trials: usize) -> Result<Vec<InstanceOutcome>> {
    let mut out = Vec::new();
    for ca in &catalog().algebras {
        let t = ca.algebra.tower();
        let q = match t.field_size(t.levels()) {
            Some(q) if t.levels() == 0 && (q == 2 || q == 3) => q,
            _ => continue,
        };
        let _ = q;
        if ca.algebra.dim() > 4 {
            continue;
        }
        let m = regular_module(&ca.algebra)?;
        let oracle = oracle_submodule_lattice(&m)?;
        let engine = all_submodules(&m)?;
        let soc = socle(&m)?;
        let length = composition_length(&m)?;
        let lattices_equal = engine.len() == oracle.submodules.len()
            && engine
                .iter()
                .all(|e| oracle.submodules.iter().any(|o| o.basis() == e.basis()));
        let soc_equal = soc.basis() == oracle.socle.basis();
        let len_equal = length == oracle.length;
        out.push(ok(
            format!("ORACLE_LATTICE {} regular", ca.name),
            lattices_equal && soc_equal && len_equal,
            Some(format!(
                "{} submodules, soc dim {}, length {}",
                oracle.submodules.len(),
                oracle.socle.dim(),
                oracle.length
            )),
        ));
    }
    Ok(out)
}

/// Runs a registered checker over catalog and seeded instances.
pub fn run_check(id: CheckId, seed: u64, trials: usize) -> Result<PropertyReport> {
    let start = Instant::now();
    let instances = match id {
        CheckId::FfT => check_ff_t(seed, trials)?,
        CheckId::SsSeparable => check_ss_separable(seed, trials)?,
        CheckId::SsEndosep => check_ss_endosep(seed, trials)?,
        CheckId::InsepCounterexample => check_insep_counterexample(seed, trials)?,
        CheckId::HomSsBound => check_hom_ss_bound(seed, trials)?,
        CheckId::FrobeniusSocTop => check_frobenius_soc_top(seed, trials)?,
        CheckId::FrobeniusStable => check_frobenius_stable(seed, trials)?,
        CheckId::SemisimpleImpliesFrobenius => check_ss_implies_frobenius(seed, trials)?,
        CheckId::IdealLattice => check_ideal_lattice(seed, trials)?,
        CheckId::TensorFunctor => check_tensor_functor(seed, trials)?,
        CheckId::LengthEnd => check_length_end(seed, trials)?,
        CheckId::OracleLattice => check_oracle_lattice(seed, trials)?,
    };
    let pass = instances.iter().all(|i| i.pass);
    let counterexample = instances.iter().find(|i| !i.pass).map(|i| i.instance.clone());
    Ok(PropertyReport {
        check: id.as_str().to_string(),
        seed,
        trials,
        instances,
        pass,
        counterexample,
        wall_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_ids_round_trip() {
        for id in CheckId::all() {
            assert_eq!(CheckId::from_str(id.as_str()).unwrap(), id);
        }
        assert!(matches!(
            CheckId::from_str("NOPE"),
            Err(KextError::UnknownCheck(_))
        ));
    }

    #[test]
    fn insep_counterexample_passes() {
        let r = run_check(CheckId::InsepCounterexample, 0, 1).unwrap();
        assert!(r.pass, "{:?}", r.counterexample);
        assert_eq!(r.instances.len(), 2);
    }

    #[test]
    fn oracle_lattice_passes() {
        let r = run_check(CheckId::OracleLattice, 0, 1).unwrap();
        assert!(r.pass, "{:?}", r.counterexample);
        assert!(!r.instances.is_empty());
    }
}
