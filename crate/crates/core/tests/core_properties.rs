mod common;

use common::*;
use divkit::format::{diversity_from_json, diversity_to_json, parse_diversity, render};
use divkit::{Diversity, ValidationMode};
use proptest::prelude::*;
use rand::Rng;

/// Zero on small sets, small random values elsewhere: mostly not diversities.
fn random_table(rng: &mut impl Rng, n: usize) -> Diversity {
    let base = random_diversity(rng, n);
    let table = base
        .table()
        .iter()
        .enumerate()
        .map(|(a, v)| {
            if a.count_ones() >= 2 && rng.gen_bool(0.15) {
                v + rand_signed_q(rng, 4, 2)
            } else {
                v.clone()
            }
        })
        .collect();
    Diversity::from_table(labels(n), table).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_roundtrip(seed in any::<u64>(), n in 1usize..=6) {
        let d = random_diversity(&mut rng(seed), n);
        let text = render(&diversity_to_json(&d), false);
        prop_assert_eq!(parse_diversity(&text).unwrap(), d.clone());
        let pretty = render(&diversity_to_json(&d), true);
        prop_assert_eq!(parse_diversity(&pretty).unwrap(), d.clone());
        let dense = divkit::format::dense_diversity_to_json(&d);
        prop_assert_eq!(diversity_from_json(&dense).unwrap(), d);
    }

    #[test]
    fn valid_diversities_are_monotone(seed in any::<u64>(), n in 2usize..=7) {
        let d = random_diversity(&mut rng(seed), n);
        prop_assert!(d.validate(ValidationMode::Fast).unwrap().ok);
        let full = d.full_mask();
        for a in 0..=full {
            for b in 0..=full {
                if a & b == a {
                    prop_assert!(d.value(a) <= d.value(b));
                }
            }
        }
    }

    #[test]
    fn induced_metric_is_a_metric(seed in any::<u64>(), n in 2usize..=7) {
        let d = random_diversity(&mut rng(seed), n);
        let m = d.induced_metric();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    prop_assert!(m.get(i, k) <= &(m.get(i, j) + m.get(j, k)));
                }
            }
        }
        if m.zero_pairs().is_empty() {
            prop_assert!(m.is_metric());
        }
    }
}

#[test]
fn fast_and_naive_validation_agree() {
    let mut r = rng(11);
    let mut rejected = 0;
    for t in 0..200 {
        let n = 2 + t % 5;
        let d = random_table(&mut r, n);
        let fast = d.validate(ValidationMode::Fast).unwrap();
        let naive = d.validate(ValidationMode::Naive).unwrap();
        assert_eq!(fast.ok, naive.ok, "table {t}: {:?}", d.table());
        rejected += usize::from(!fast.ok);
    }
    assert!(
        rejected > 20,
        "corpus should contain invalid tables, got {rejected}"
    );
}

#[test]
fn validation_flags_each_axiom() {
    // a negative pair value
    let mut t = all_ones(3).into_table();
    t[0b011] = q(-1, 1);
    t[0b111] = q(2, 1);
    let d = Diversity::from_table(labels(3), t).unwrap();
    let r = d.validate(ValidationMode::Fast).unwrap();
    assert!(!r.ok);
    assert!(r
        .violations
        .iter()
        .any(|v| v.kind == divkit::ViolationKind::D1));
    // a zero pair value is allowed but not strict
    let cut = divkit::l1cone::cut_diversity::<Q>(labels(3), 0b100).unwrap();
    let r = cut.validate(ValidationMode::Fast).unwrap();
    assert!(r.ok && !r.is_strict());
    assert_eq!(r.degenerate, vec![0b011]);
}
