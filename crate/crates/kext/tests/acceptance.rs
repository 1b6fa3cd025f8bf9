//! Acceptance gate: one named criterion per test, each printing a single
//! pass/fail line (visible with `--nocapture`) and asserting the outcome.

use std::time::Instant;

use kext::exact::mat::Mat;
use kext::exact::tower::Elem;
use kext::modules::core::regular_module;
use kext::modules::decompose::decompose;
use kext::modules::hom::hom_dim;
use kext::modules::socle::{semisimplify, socle};
use kext::properties::catalog::{algebra_by_name, extension_by_name};
use kext::properties::checks::{run_check, CheckId, PropertyReport};
use kext::scalarext::{extend_algebra, extend_pair, ideal_subobject_check, split_simple};

fn report(n: usize, name: &str, pass: bool, detail: String) {
    println!(
        "criterion {n:2} {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} {name} failed: {detail}");
}

fn gate(n: usize, name: &str, r: &PropertyReport, min_instances: usize, budget_ms: u128) {
    let pass = r.pass && r.instances.len() >= min_instances && r.wall_ms <= budget_ms;
    report(
        n,
        name,
        pass,
        format!(
            "{} instances, {} ms{}",
            r.instances.len(),
            r.wall_ms,
            r.counterexample
                .as_deref()
                .map(|c| format!(", counterexample: {c}"))
                .unwrap_or_default()
        ),
    );
}

#[test]
fn criterion_01_ff_t() {
    let r = run_check(CheckId::FfT, 42, 200).unwrap();
    gate(1, "FF_T", &r, 100, 30_000);
}

#[test]
fn criterion_02_ss_separable() {
    let r = run_check(CheckId::SsSeparable, 42, 200).unwrap();
    gate(2, "SS_SEPARABLE", &r, 1, 30_000);
}

#[test]
fn criterion_03_insep_counterexample() {
    let r = run_check(CheckId::InsepCounterexample, 42, 200).unwrap();
    gate(3, "INSEP_COUNTEREXAMPLE", &r, 2, 1_000);
}

#[test]
fn criterion_04_hom_ss_bound() {
    // the strict-inequality witness, asserted with its exact values
    let dual = algebra_by_name("Q[x]/(x^2)").unwrap();
    let m = regular_module(&dual).unwrap();
    let ss = semisimplify(&m).unwrap();
    assert_eq!(hom_dim(&m, &m).unwrap(), 2);
    assert_eq!(hom_dim(&ss, &ss).unwrap(), 4);
    let r = run_check(CheckId::HomSsBound, 42, 200).unwrap();
    // 200 seeded pairs plus the witness instance
    gate(4, "HOM_SS_BOUND", &r, 201, 60_000);
}

#[test]
fn criterion_05_frobenius_suite() {
    let a = run_check(CheckId::SemisimpleImpliesFrobenius, 42, 200).unwrap();
    let b = run_check(CheckId::FrobeniusStable, 42, 200).unwrap();
    let c = run_check(CheckId::FrobeniusSocTop, 42, 200).unwrap();
    let wall = a.wall_ms + b.wall_ms + c.wall_ms;
    let pass = a.pass && b.pass && c.pass && wall <= 30_000;
    report(
        5,
        "FROBENIUS",
        pass,
        format!(
            "{} instances, {} ms",
            a.instances.len() + b.instances.len() + c.instances.len(),
            wall
        ),
    );
}

#[test]
fn criterion_06_ideal_lattice() {
    // the named instance: GF(4) (x) GF(4) has 4 right ideals and 4 submodules
    let alg = algebra_by_name("GF(4)/GF(2)").unwrap();
    let inc = extension_by_name("GF(2)->GF(4)").unwrap();
    let s = regular_module(&alg).unwrap();
    let r = ideal_subobject_check(&s, &inc).unwrap();
    assert!(r.pass);
    assert_eq!(r.ideal_count, 4);
    assert_eq!(r.submodule_count, 4);
    let r = run_check(CheckId::IdealLattice, 42, 200).unwrap();
    gate(6, "IDEAL_LATTICE", &r, 1, 60_000);
}

#[test]
fn criterion_07_length_end() {
    let r = run_check(CheckId::LengthEnd, 42, 200).unwrap();
    gate(7, "LENGTH_END", &r, 1, 30_000);
}

#[test]
fn criterion_08_tensor_functor() {
    let r = run_check(CheckId::TensorFunctor, 42, 200).unwrap();
    gate(8, "TENSOR_FUNCTOR", &r, 1, 30_000);
}

#[test]
fn criterion_09_oracle_lattice() {
    let r = run_check(CheckId::OracleLattice, 42, 200).unwrap();
    gate(9, "ORACLE_LATTICE", &r, 1, 60_000);
}

/// Index of the unique basis vector a coordinate vector equals.
fn basis_index(tower: &kext::exact::tower::Tower, v: &[Elem]) -> usize {
    let lv = tower.levels();
    let hits: Vec<usize> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !tower.is_zero_elem(c))
        .map(|(i, _)| i)
        .collect();
    assert_eq!(hits.len(), 1);
    assert_eq!(v[hits[0]], tower.one(lv));
    hits[0]
}

/// The 2-dimensional simple summand of the regular module.
fn two_dim_simple(name: &str) -> kext::modules::core::ModRef {
    let alg = algebra_by_name(name).unwrap();
    let reg = regular_module(&alg).unwrap();
    let dec = decompose(&reg).unwrap();
    dec.summands
        .iter()
        .map(|s| s.module.clone())
        .find(|m| m.dim() == 2)
        .unwrap()
}

#[test]
fn criterion_10_splitting_examples() {
    let start = Instant::now();

    // GF(2)[C3]: the 2-dim simple splits into two 1-dim simples over GF(4)
    let s = two_dim_simple("GF(2)[C3]");
    let inc = extension_by_name("GF(2)->GF(4)").unwrap();
    assert!(split_simple(&s, &inc).unwrap().pass);
    let (_, ts) = extend_pair(&s, &inc).unwrap();
    let dec = decompose(&ts).unwrap();
    assert!(dec.input_semisimple);
    assert!(dec.summands.iter().all(|x| x.module.dim() == 1));
    assert_eq!(dec.classes.len(), 2, "two non-isomorphic 1-dim simples");

    // Q[C3]: the 2-dim simple gets length 2 over Q(w), exhibited by the
    // explicit character idempotents (1/3)(1 + w^2 g + w g^2) and conjugate
    let s = two_dim_simple("Q[C3]");
    let inc = extension_by_name("Q->Q(w)").unwrap();
    let r = split_simple(&s, &inc).unwrap();
    assert!(r.pass);
    assert_eq!(r.length_ts, Some(2));
    let ealg = extend_algebra(s.algebra(), &inc).unwrap();
    let (_, ts) = extend_pair(&s, &inc).unwrap();
    let t = ealg.tower().clone();
    let idx_e = basis_index(&t, ealg.unit());
    let idx_g = (0..3).find(|&i| i != idx_e).unwrap();
    let g = ealg.basis_vec(idx_g);
    let idx_g2 = basis_index(&t, &ealg.mul_vec(&g, &g));
    let lv = t.levels();
    let w = t.generator(1, lv);
    let w2 = t.mul(lv, &w, &w);
    let third = t.div(lv, &t.one(lv), &t.from_int(lv, 3)).unwrap();
    let mut e1 = vec![t.zero(lv); 3];
    let mut e2 = vec![t.zero(lv); 3];
    e1[idx_e] = third.clone();
    e1[idx_g] = t.mul(lv, &third, &w2);
    e1[idx_g2] = t.mul(lv, &third, &w);
    e2[idx_e] = third.clone();
    e2[idx_g] = t.mul(lv, &third, &w);
    e2[idx_g2] = t.mul(lv, &third, &w2);
    assert_eq!(ealg.mul_vec(&e1, &e1), e1, "e1 idempotent");
    assert_eq!(ealg.mul_vec(&e2, &e2), e2, "e2 idempotent");
    let zero = vec![t.zero(lv); 3];
    assert_eq!(ealg.mul_vec(&e1, &e2), zero, "orthogonal");
    let (p1, p2) = (ts.act(&e1), ts.act(&e2));
    assert_eq!(p1.rank(), 1);
    assert_eq!(p2.rank(), 1);
    let sum = p1.add(&p2).unwrap().sub(&Mat::identity(&t, 2)).unwrap();
    assert!(sum.is_zero(), "idempotents resolve the identity on t(S)");

    // quaternions: regular module stays 4-dimensional and semisimple over
    // Q(i), with endomorphism dimension 4 on both sides
    let h = algebra_by_name("H").unwrap();
    let reg = regular_module(&h).unwrap();
    let inc = extension_by_name("Q->Q(i)").unwrap();
    assert_eq!(hom_dim(&reg, &reg).unwrap(), 4);
    let (_, th) = extend_pair(&reg, &inc).unwrap();
    assert_eq!(th.dim(), 4);
    assert_eq!(hom_dim(&th, &th).unwrap(), 4);
    assert_eq!(socle(&th).unwrap().dim(), 4);

    let ms = start.elapsed().as_millis();
    report(10, "SPLITTING_EXAMPLES", ms <= 10_000, format!("{ms} ms"));
}
