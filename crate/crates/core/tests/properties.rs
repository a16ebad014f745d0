use proptest::prelude::*;

use demazure_pbw::demchar::{demazure_character, verify_against_points};
use demazure_pbw::ideal::theorem_generators;
use demazure_pbw::polytope::{build_system, enumerate_points, minkowski_check, minkowski_decompose, SystemOptions};
use demazure_pbw::rootsys::{Family, LieType, ReflectionWord, Weight, WordVariant};

fn word_strategy() -> impl Strategy<Value = ReflectionWord> {
    (0usize..4, 0usize..3, 1usize..5, any::<bool>()).prop_map(|(fi, extra, start, full)| {
        let f = [Family::A, Family::B, Family::C, Family::D][fi];
        let n = f.min_rank().max(2) + extra;
        let t = LieType::new(f, n).unwrap();
        let v = match f {
            Family::D if full => WordVariant::Full,
            Family::D => WordVariant::Hatted,
            _ => WordVariant::Standard,
        };
        let start = (start - 1) % ReflectionWord::max_start(t, v) + 1;
        ReflectionWord::reflection(t, start, v).unwrap()
    })
}

fn weight_for(w: &ReflectionWord, raw: &[i64]) -> Weight {
    Weight(raw[..w.lie_type().rank()].to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn points_match_character(w in word_strategy(), raw in prop::collection::vec(0i64..=1, 6)) {
        let lam = weight_for(&w, &raw);
        let sys = build_system(&w, &SystemOptions::default()).unwrap();
        let pts = enumerate_points(&sys, &lam, None).unwrap();
        let report = verify_against_points(&w, &lam, &pts).unwrap();
        prop_assert!(report.pass(), "{:?}", report.first_mismatch);
    }

    #[test]
    fn minkowski_containment(w in word_strategy(), a in prop::collection::vec(0i64..=1, 6), b in prop::collection::vec(0i64..=1, 6)) {
        let sys = build_system(&w, &SystemOptions::default()).unwrap();
        let r = minkowski_check(&sys, &weight_for(&w, &a), &weight_for(&w, &b), None).unwrap();
        prop_assert!(r.contained);
    }

    #[test]
    fn enumerated_points_satisfy_system(w in word_strategy(), raw in prop::collection::vec(0i64..=2, 6)) {
        let lam = weight_for(&w, &raw);
        let sys = build_system(&w, &SystemOptions::default()).unwrap();
        for p in enumerate_points(&sys, &lam, None).unwrap().points {
            prop_assert!(sys.contains(&lam, &p));
        }
    }

    #[test]
    fn decomposition_sums_back(w in word_strategy(), raw in prop::collection::vec(0i64..=1, 6), pick in any::<prop::sample::Index>()) {
        let lam = weight_for(&w, &raw);
        let sys = build_system(&w, &SystemOptions::default()).unwrap();
        let pts = enumerate_points(&sys, &lam, None).unwrap();
        let p = pick.get(&pts.points).clone();
        let parts = minkowski_decompose(&sys, &lam, &p).unwrap();
        let mut total = vec![0u32; p.len()];
        for s in &parts {
            for (t, v) in total.iter_mut().zip(&s.point) {
                *t += v;
            }
        }
        prop_assert_eq!(total, p);
    }

    #[test]
    fn generators_lie_outside(w in word_strategy(), raw in prop::collection::vec(0i64..=1, 6)) {
        let lam = weight_for(&w, &raw);
        let sys = build_system(&w, &SystemOptions::default()).unwrap();
        for g in theorem_generators(&sys, &lam).unwrap().generators {
            prop_assert!(!sys.contains(&lam, &g.point));
        }
    }

    #[test]
    fn weight_text_round_trip(raw in prop::collection::vec(-5i64..=5, 1..8)) {
        let w = Weight(raw);
        prop_assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
    }
}

#[test]
fn zero_weight_is_trivial() {
    for f in [Family::A, Family::B, Family::C, Family::D] {
        let n = f.min_rank().max(2);
        let t = LieType::new(f, n).unwrap();
        let v = if f == Family::D { WordVariant::Hatted } else { WordVariant::Standard };
        let w = ReflectionWord::reflection(t, 1, v).unwrap();
        assert_eq!(demazure_character(&w, &Weight::zero(n)).unwrap().dimension(), 1);
    }
}
