use proptest::prelude::*;
use zipmorph::cg::{run_cg, CgRule};
use zipmorph::laws::{self, strategy::*};
use zipmorph::{compose, DeletionSet, WriterArrow, WriterZipper, Zipper};

#[test]
fn full_law_suite() {
    let report = laws::run_all(0x5eed, 300);
    assert!(report.all_passed(), "{report}");
}

#[test]
fn other_seeds_agree() {
    for seed in [1, 2, 3] {
        let report = laws::run_all(seed, 40);
        assert!(report.all_passed(), "seed {seed}\n{report}");
    }
}

proptest! {
    #[test]
    fn zipper_roundtrips_through_vec(z in zipper()) {
        let back = Zipper::from_vec(z.to_vec(), z.position()).unwrap();
        prop_assert_eq!(back, z.clone());
        prop_assert_eq!(z.refocusings().count(), z.len());
    }

    #[test]
    fn materialize_drops_exactly_the_logged_positions(w in writer_zipper()) {
        let kept = w.materialize().unwrap();
        prop_assert_eq!(kept.len(), w.zipper().len() - w.log().len());
        let expected: Vec<char> = w
            .zipper()
            .iter()
            .enumerate()
            .filter(|(i, _)| !w.log().contains(*i))
            .map(|(_, &c)| c)
            .collect();
        prop_assert_eq!(kept, expected);
    }

    #[test]
    fn extend_only_grows_the_log(w in writer_zipper(), f in writer_arrow()) {
        let out = w.extend(&f.arrow());
        prop_assert!(w.log().iter().all(|p| out.log().contains(p)));
    }

    #[test]
    fn composing_with_identity_on_either_side_extends_alike(w in writer_zipper(), f in writer_arrow()) {
        let f = f.arrow();
        let id = WriterArrow::identity();
        prop_assert_eq!(w.extend(&compose(&id, &f)), w.extend(&f));
        prop_assert_eq!(w.extend(&compose(&f, &id)), w.extend(&f));
    }

    #[test]
    fn deletion_set_union_is_set_union(a in deletion_set(), b in deletion_set()) {
        let u = a.union(&b);
        prop_assert!(u.iter().all(|p| a.contains(p) || b.contains(p)));
        prop_assert!(a.iter().chain(b.iter()).all(|p| u.contains(p)));
        prop_assert!(u.len() <= a.len() + b.len());
        prop_assert_eq!(DeletionSet::empty().len(), 0);
    }

    #[test]
    fn cg_output_never_empty_and_shrinks(s in sentence(), rules in proptest::collection::vec(rule(), 0..6)) {
        let out = run_cg(&s, &rules).unwrap();
        prop_assert_eq!(out.len(), s.len());
        for (a, b) in out.tokens().iter().zip(s.tokens()) {
            prop_assert!(a.readings().next().is_some());
            prop_assert!(a.is_subset(b));
        }
    }

    #[test]
    fn cg_is_deterministic(s in sentence(), rules in proptest::collection::vec(rule(), 0..4)) {
        prop_assert_eq!(run_cg(&s, &rules).unwrap(), run_cg(&s, &rules).unwrap());
    }

    #[test]
    fn rule_display_reparses(r in rule()) {
        let parsed: CgRule = zipmorph::cg::parse_rule(&r.to_string()).unwrap();
        prop_assert_eq!(parsed, r);
    }

    #[test]
    fn writer_zipper_of_word_is_lossless(z in zipper()) {
        prop_assert_eq!(WriterZipper::new(z.clone()).materialize().unwrap(), z.to_vec());
    }
}
