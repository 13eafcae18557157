mod common;

use proptest::prelude::*;
use unipotent::{CollapseKind, Partition};

#[test]
fn collapse_matches_brute_force() {
    for n in 0..=12 {
        for p in Partition::all(n) {
            for kind in [CollapseKind::B, CollapseKind::C, CollapseKind::D] {
                if n % 2 != kind.total_parity() {
                    assert!(p.collapse(kind).is_err());
                    continue;
                }
                assert_eq!(p.collapse(kind).unwrap(), common::brute_collapse(&p, kind), "{kind:?} {p}");
            }
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=10 {
        let all = Partition::all(n);
        for a in &all {
            assert!(a.dominates(a).unwrap());
            for b in &all {
                let ab = a.dominates(b).unwrap();
                if ab && b.dominates(a).unwrap() {
                    assert_eq!(a, b);
                }
                if !ab {
                    continue;
                }
                for c in &all {
                    if b.dominates(c).unwrap() {
                        assert!(a.dominates(c).unwrap(), "{a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn transpose_reverses_dominance() {
    for n in 1..=9 {
        let all = Partition::all(n);
        for a in &all {
            for b in &all {
                assert_eq!(a.dominates(b).unwrap(), b.transpose().dominates(&a.transpose()).unwrap());
            }
        }
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..12, 0..10).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in partition()) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().total(), p.total());
    }

    #[test]
    fn collapse_is_idempotent_and_below(p in partition()) {
        for kind in [CollapseKind::B, CollapseKind::C, CollapseKind::D] {
            if p.total() % 2 != kind.total_parity() {
                continue;
            }
            let q = p.collapse(kind).unwrap();
            prop_assert!(q.in_class(kind.class()));
            prop_assert!(p.dominates(&q).unwrap());
            prop_assert_eq!(q.collapse(kind).unwrap(), q.clone());
        }
    }

    #[test]
    fn display_parses_back(p in partition()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), p);
    }
}
