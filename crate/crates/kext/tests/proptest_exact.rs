//! Property-based invariants of the exact arithmetic layer: field axioms
//! over sampled towers, canonical-form idempotence of scalar printing,
//! kernel consistency, and polynomial factorization round-trips.

use proptest::prelude::*;

use kext::exact::factor::poly_factor;
use kext::exact::mat::Mat;
use kext::exact::parse::{parse_scalar, print_scalar};
use kext::exact::scalar::{towers, Poly};
use kext::exact::tower::{Elem, Tower};
use kext::properties::catalog::{gf2_t, gf4, q_i};

fn sample_towers() -> Vec<Tower> {
    vec![towers::q(), towers::gf(5), gf4(), q_i(), gf2_t()]
}

/// Deterministic element from three small integers: an integer part, a
/// generator multiple, and a never-zero denominator (generator + shift),
/// so fraction representations get exercised on function fields.
fn mk(t: &Tower, a: i64, b: i64, c: i64) -> Elem {
    let lv = t.levels();
    let mut x = t.from_int(lv, a);
    if lv > 0 {
        let g = t.generator(lv, lv);
        x = t.add(lv, &x, &t.mul(lv, &t.from_int(lv, b), &g));
        if c % 2 == 0 {
            // g + n is never zero: g is not in the base field
            let den = t.add(lv, &g, &t.from_int(lv, c));
            x = t.div(lv, &x, &den).unwrap();
        }
    } else {
        let den = t.from_int(lv, c);
        if !t.is_zero_elem(&den) {
            x = t.div(lv, &x, &den).unwrap();
        }
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(
        a in -6i64..=6, b in -6i64..=6, c in 1i64..=6,
        d in -6i64..=6, e in -6i64..=6, f in 1i64..=6,
        g in -6i64..=6, h in -6i64..=6, k in 1i64..=6,
    ) {
        for t in sample_towers() {
            let lv = t.levels();
            let x = mk(&t, a, b, c);
            let y = mk(&t, d, e, f);
            let z = mk(&t, g, h, k);
            // associativity and commutativity
            prop_assert_eq!(
                t.add(lv, &t.add(lv, &x, &y), &z),
                t.add(lv, &x, &t.add(lv, &y, &z))
            );
            prop_assert_eq!(
                t.mul(lv, &t.mul(lv, &x, &y), &z),
                t.mul(lv, &x, &t.mul(lv, &y, &z))
            );
            prop_assert_eq!(t.add(lv, &x, &y), t.add(lv, &y, &x));
            prop_assert_eq!(t.mul(lv, &x, &y), t.mul(lv, &y, &x));
            // distributivity
            prop_assert_eq!(
                t.mul(lv, &x, &t.add(lv, &y, &z)),
                t.add(lv, &t.mul(lv, &x, &y), &t.mul(lv, &x, &z))
            );
            // identities and inverses
            prop_assert_eq!(t.add(lv, &x, &t.zero(lv)), x.clone());
            prop_assert_eq!(t.mul(lv, &x, &t.one(lv)), x.clone());
            prop_assert!(t.is_zero_elem(&t.add(lv, &x, &t.neg(lv, &x))));
            if !t.is_zero_elem(&x) {
                let xi = t.inv(lv, &x).unwrap();
                prop_assert_eq!(t.mul(lv, &x, &xi), t.one(lv));
            }
        }
    }

    #[test]
    fn print_parse_round_trip(
        a in -20i64..=20, b in -20i64..=20, c in 1i64..=9,
    ) {
        for t in sample_towers() {
            let x = mk(&t, a, b, c);
            let s = print_scalar(&t, &x);
            let back = parse_scalar(&t, &s).unwrap();
            prop_assert_eq!(&back, &x, "tower round trip via '{}'", s);
            // printing is canonical: reprinting gives the same string
            prop_assert_eq!(print_scalar(&t, &back), s);
        }
    }

    #[test]
    fn kernel_consistency(
        entries in prop::collection::vec(-4i64..=4, 16),
        rows in 1usize..=4, cols in 1usize..=4,
    ) {
        for t in [towers::q(), towers::gf(5), gf4()] {
            let lv = t.levels();
            let m = Mat::from_fn(&t, rows, cols, |i, j| {
                t.from_int(lv, entries[i * 4 + j])
            });
            let k = m.kernel();
            // rows of the kernel are right null vectors: m . v^T = 0
            if k.rows() > 0 {
                prop_assert!(m.matmul(&k.transpose()).unwrap().is_zero());
                prop_assert_eq!(k.rank(), k.rows());
            }
            prop_assert_eq!(m.rank() + k.rows(), cols);
        }
    }

    #[test]
    fn factor_round_trip(
        c1 in prop::collection::vec(0i64..=4, 2..=3),
        c2 in prop::collection::vec(0i64..=4, 2..=3),
    ) {
        for t in [towers::q(), towers::gf(5), gf4()] {
            let lv = t.levels();
            let monic = |c: &[i64]| {
                let mut v: Vec<Elem> = c.iter().map(|&n| t.from_int(lv, n)).collect();
                v.push(t.one(lv));
                Poly::new(t.clone(), "x", v)
            };
            let f = monic(&c1).mul(&monic(&c2));
            let (lead, factors) = poly_factor(&f).unwrap();
            prop_assert!(!lead.is_zero());
            let mut prod = Poly::from_scalars(&t, "x", &[lead]);
            for (p, mult) in &factors {
                prop_assert!(p.is_monic());
                for _ in 0..*mult {
                    prod = prod.mul(p);
                }
            }
            prop_assert_eq!(prod.coeffs(), f.coeffs());
        }
    }
}
