use std::sync::Arc;

use pisys_core::counting::{canonicalize, cross_check, finite_mult, finite_mult_brute, finite_mult_chain, CountOptions};
use pisys_core::gcm::{diagram_isomorphic, named_diagram, Gcm};
use pisys_core::overext::{canonical_pi, ext_subdiagrams};
use pisys_core::{RootClass, RootSystem, WeylWord};
use proptest::prelude::*;

fn g(name: &str) -> Gcm {
    named_diagram(name).unwrap()
}

const AMBIENTS: [&str; 6] = ["E10", "A2++", "D4++", "A1~", "D5", "hyp:fig2:5"];

fn word(rank: usize) -> impl Strategy<Value = WeylWord> {
    prop::collection::vec(0..rank, 0..12).prop_map(WeylWord)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_preserve_norm_and_class(a in 0..AMBIENTS.len(), seed in prop::collection::vec(0usize..16, 12)) {
        let rs = RootSystem::new(g(AMBIENTS[a])).unwrap();
        let n = rs.rank();
        let w = WeylWord(seed.iter().map(|s| s % n).collect());
        let start: Vec<i64> = (0..n).map(|i| i64::from(i == seed[0] % n)).collect();
        let moved = rs.apply_word(&w, &start).unwrap();
        prop_assert_eq!(rs.norm(&moved), rs.norm(&start));
        prop_assert_eq!(rs.classify_element(&moved), RootClass::RealRoot);
        prop_assert_eq!(rs.apply_word(&w.inverse(), &moved).unwrap(), start);
    }

    #[test]
    fn canonicalize_is_orbit_invariant(w in word(10)) {
        let rs = Arc::new(RootSystem::new(g("A8++")).unwrap());
        for z in ext_subdiagrams(rs.gcm()).unwrap() {
            let pi = canonical_pi(&rs, &z.vertices).unwrap();
            prop_assert_eq!(canonicalize(&pi.apply_word(&w).unwrap()).unwrap(), canonicalize(&pi).unwrap());
        }
    }

    #[test]
    fn isomorphism_is_symmetric(a in 0..AMBIENTS.len(), perm_seed in any::<u64>()) {
        let x = g(AMBIENTS[a]);
        let n = x.rank();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let y = Gcm::new((0..n).map(|i| (0..n).map(|j| x.entry(perm[i], perm[j])).collect()).collect()).unwrap();
        let f = diagram_isomorphic(&x, &y);
        let b = diagram_isomorphic(&y, &x);
        prop_assert!(f.is_some() && b.is_some());
        let f = f.unwrap();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(y.entry(f[i], f[j]), x.entry(i, j));
            }
        }
    }
}

#[test]
fn finite_routes_agree() {
    let pairs = [("A1", "A4"), ("A2", "D5"), ("A3", "A6"), ("A1", "E6"), ("A2", "E6"), ("D4", "D5"), ("A4", "A5")];
    for (k, z) in pairs {
        let brute = finite_mult_brute(&g(k), &g(z)).unwrap();
        assert_eq!(brute, finite_mult_chain(&g(k), &g(z)).unwrap(), "({k}, {z})");
    }
}

#[test]
fn finite_rank_bound() {
    for (k, z) in [("A3", "A2"), ("D4", "A3"), ("E6", "D5")] {
        assert_eq!(finite_mult(&g(k), &g(z)).unwrap(), 0);
    }
}

#[test]
fn ext_values_are_finite() {
    let o = CountOptions::default();
    for x in ["E10", "A8++", "D10++", "E11", "hyp:fig2:7"] {
        for k in ["A1++", "A2++", "D4++", "E6++"] {
            let r = pisys_core::mult(&g(k), &g(x), &o).unwrap();
            assert!(matches!(r.value, pisys_core::MultValue::Finite(_)), "({k}, {x})");
        }
    }
    let r = pisys_core::mult(&g("D8++"), &g("E10"), &o).unwrap();
    assert_eq!(r.value, pisys_core::MultValue::Finite(2 * finite_mult(&g("D8"), &g("E8")).unwrap()));
}

#[test]
fn cross_check_small_ambients() {
    let o = CountOptions::default();
    for x in ["A1++", "A2++", "A3++", "hyp:fig2:1", "hyp:fig2:4"] {
        let c = cross_check(&g("A1++"), &g(x), 8, &o).unwrap();
        assert!(c.agrees, "{x}: {c:?}");
    }
}

#[test]
fn shipped_table_matches_live() {
    let text = include_str!("../../../data/finite_mult.jsonl");
    let table = pisys_core::counting::FiniteTable::parse(text).unwrap();
    assert!(table.len() > 100);
    let opts = CountOptions { table: Some(Arc::new(table)), ..Default::default() };
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        let e: pisys_core::counting::TableEntry = serde_json::from_str(line).unwrap();
        let (k, z) = (g(&e.k), g(&e.z));
        if z.rank() <= 6 {
            assert_eq!(pisys_core::counting::finite_mult_with(&k, &z, &opts).unwrap(), e.value, "{line}");
        }
    }
}
