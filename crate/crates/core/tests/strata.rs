use proptest::prelude::*;
use qdiff::strata::{
    canonical_double_cover, classify, dimension, enumerate_patterns, enumerate_strata,
    family_members, hyperelliptic_family, is_empty, strip_marked, ComponentStatus, FamilyId,
};
use qdiff::{SingularityPattern, Stratum};

fn pattern_strategy() -> impl Strategy<Value = SingularityPattern> {
    (prop::collection::vec(-1i64..=12, 1..10), -1i64..=12).prop_filter_map(
        "needs a valid sum",
        |(mut orders, fix)| {
            let sum: i64 = orders.iter().sum::<i64>() + fix;
            // pad with poles until the sum is a multiple of 4
            orders.push(fix);
            for _ in 0..sum.rem_euclid(4) {
                orders.push(-1);
            }
            SingularityPattern::new(orders).ok()
        },
    )
}

proptest! {
    #[test]
    fn gauss_bonnet_and_dimension(p in pattern_strategy()) {
        let g = p.genus() as i64;
        prop_assert_eq!(p.sum(), 4 * g - 4);
        prop_assert_eq!(dimension(&p), 2 * g + p.len() as i64 - 2);
        prop_assert_eq!(Stratum::new(p.clone()).dimension(), dimension(&p));
    }

    #[test]
    fn canonical_cover_genus(p in pattern_strategy()) {
        let c = canonical_double_cover(&p).unwrap();
        let g = p.genus() as i64;
        prop_assert_eq!(2 * c.genus as i64 - 2, 2 * (2 * g - 2) + p.odd_count() as i64);
        prop_assert_eq!(c.zero_orders.iter().sum::<i64>(), 2 * c.genus as i64 - 2);
        prop_assert!(c.zero_orders.iter().all(|&k| k >= 1));
    }

    #[test]
    fn marked_points_do_not_change_the_verdict(p in pattern_strategy(), extra in 0usize..3) {
        let mut orders = p.orders().to_vec();
        orders.extend(std::iter::repeat_n(0, extra));
        let marked = SingularityPattern::new(orders).unwrap();
        prop_assert_eq!(classify(&marked), classify(&p));
        prop_assert_eq!(is_empty(&marked), is_empty(&p));
        prop_assert_eq!(strip_marked(&marked), strip_marked(&p));
    }

    #[test]
    fn text_round_trip(p in pattern_strategy()) {
        let back: SingularityPattern = p.compact().parse().unwrap();
        prop_assert_eq!(&back, &p);
        let back: SingularityPattern = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn family_matches_are_members(p in pattern_strategy()) {
        if let Some(m) = hyperelliptic_family(&p) {
            let mut member = m.family_id.orders(m.g, m.k);
            member.sort_unstable_by(|a, b| b.cmp(a));
            let stripped = strip_marked(&p);
            prop_assert_eq!(member.as_slice(), stripped.orders());
            prop_assert!(m.family_id.contains(m.g, m.k));
        }
    }
}

#[test]
fn enumeration_respects_bounds() {
    for g in 0..=3 {
        for p in enumerate_patterns(g, 6, 6, true) {
            assert_eq!(p.genus(), g);
            assert!(p.len() <= 6);
            assert!(p.orders()[0] <= 6);
        }
        for p in enumerate_strata(g, 6) {
            assert!(!p.has_marked_points());
        }
    }
}

#[test]
fn families_split_from_genus_three_on() {
    for g in 3..=8 {
        for s in family_members(g).unwrap() {
            let r = classify(&s.pattern);
            assert_eq!(r.status, ComponentStatus::TwoComponents, "{}", s.pattern);
            assert_eq!(r.hyperelliptic_count(), 1);
        }
    }
}

#[test]
fn item_one_dimension_is_2g_plus_2() {
    for g in 1..=10 {
        for k in FamilyId::F4.k_range(g) {
            let p = SingularityPattern::new(FamilyId::F4.orders(g, k)).unwrap();
            assert_eq!(dimension(&p), 2 * g + 2);
        }
    }
}
