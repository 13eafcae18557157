mod common;

use proptest::prelude::*;
use unipotent::parameter::{is_regular, ArthurParameter, Character, Group, Summand};
use unipotent::{Case, Scalar};

fn sorted_abs(v: &[Scalar]) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = v.iter().map(|x| x.abs()).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[test]
fn unipotent_infinitesimal_character_matches_eigenvalues() {
    for case in Case::ALL {
        for n in 0..=8 {
            for psi in common::parameters(case, n) {
                if psi.summands().iter().any(|s| !s.chi.is_trivial()) {
                    continue;
                }
                let dims: Vec<usize> = psi.summands().iter().map(|s| s.dim).collect();
                let (l, m) = psi.infinitesimal_character().unwrap();
                assert_eq!(l, common::infchar_oracle(&dims, n), "{psi}");
                assert_eq!(l, m);
            }
        }
    }
}

#[test]
fn infinitesimal_character_has_rank_coordinates() {
    for case in Case::ALL {
        for n in 0..=5 {
            for psi in common::parameters(case, n) {
                let (l, m) = psi.infinitesimal_character().unwrap();
                assert_eq!((l.len(), m.len()), (n, n), "{psi}");
                let d = psi.decompose().unwrap();
                assert_eq!(ArthurParameter::reassemble(psi.group, &d), psi);
            }
        }
    }
}

#[test]
fn printed_infinitesimal_characters() {
    let h = |v: &[i64]| v.iter().map(|&x| Scalar::half(x)).collect::<Vec<_>>();
    let (l, _) = common::triv(Case::Cn, &[5, 3, 3, 1, 1]).infinitesimal_character().unwrap();
    assert_eq!(l, h(&[4, 2, 2, 2, 0, 0]));
    let (l, _) = common::triv(Case::Bn, &[6, 6, 4, 2]).infinitesimal_character().unwrap();
    assert_eq!(l, h(&[5, 5, 3, 3, 3, 1, 1, 1, 1]));
}

#[test]
fn regularity_ignores_order_and_signs() {
    let v: Vec<Scalar> = [3, -1, 2].iter().map(|&x| Scalar::int(x)).collect();
    assert!(is_regular(&v, false));
    assert!(is_regular(&sorted_abs(&v), false));
    assert!(!is_regular(&[Scalar::int(1), Scalar::int(-1)], true));
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, -6i64..=6).prop_map(|(re, im)| {
        let im = Scalar::half(im);
        format!("{}{}{} i", Scalar::half(re), if im.re() < 0.into() { "-" } else { "+" }, im.abs())
            .parse()
            .unwrap()
    })
}

fn parameter() -> impl Strategy<Value = ArthurParameter> {
    let summand = (scalar(), scalar(), 1usize..6).prop_map(|(a, b, d)| Summand::new(Character::new(a, b), d));
    (prop::sample::select(Case::ALL.to_vec()), 0usize..8, prop::collection::vec(summand, 0..5))
        .prop_map(|(case, rank, s)| ArthurParameter::new(Group::new(case, rank), s))
}

proptest! {
    #[test]
    fn json_round_trips(psi in parameter()) {
        let v = psi.to_json();
        let text = serde_json::to_string(&v).unwrap();
        let back = ArthurParameter::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
        prop_assert_eq!(back, psi);
    }

    #[test]
    fn validation_is_order_independent(psi in parameter()) {
        let mut s = psi.summands().to_vec();
        s.reverse();
        let again = ArthurParameter::new(psi.group, s);
        prop_assert_eq!(again.validate(true), psi.validate(true));
    }

    #[test]
    fn scalar_text_round_trips(x in scalar()) {
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }
}
