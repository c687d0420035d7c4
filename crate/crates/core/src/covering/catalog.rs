//! Direct instantiation of the known dimension-preserving maps.
//!
//! Three hyperelliptic maps, one per family, are double covers of the
//! sphere:
//!
//! * F4: `Q(2(g-k)-3, 2k+1, -1^{2g+2}) -> Q(2(g-k)-3, 2(g-k)-3, 2k+1, 2k+1)`,
//!   branched over the `2g+2` poles;
//! * F3: `Q(2(g-k)-3, 2k, -1^{2g+1}) -> Q(2(g-k)-3, 2(g-k)-3, 4k+2)`,
//!   branched over the poles and the point of order `2k`;
//! * F2: `Q(2(g-k)-4, 2k, -1^{2g}) -> Q(4(g-k)-6, 4k+2)`, branched
//!   over every singularity.
//!
//! Three exceptional maps start from the pillowcase stratum `Q(-1^4)`,
//! possibly with marked points:
//!
//! * `Q(-1^4, 0, 0) -> Q(2, 2)` and `Q(-1^4, 0) -> Q(-1, -1, 2)`, degree `2d`;
//! * `Q(-1^4) -> Q(-1^4)`, degree `2d` or `2d + 1`.

use std::collections::BTreeMap;

use crate::covering::{CoveringType, FiberProfile, MapKey, MapTag, SearchBounds, StratumMap};
use crate::error::CoveringError;
use crate::strata::FamilyId;

fn poles(count: i64, partition: &[u32]) -> impl Iterator<Item = FiberProfile> + '_ {
    (0..count).map(move |_| FiberProfile::new(-1, partition.to_vec()))
}

fn build(degree: u32, fibers: Vec<FiberProfile>, tag: MapTag) -> StratumMap {
    let covering = CoveringType::new(degree, 0, fibers).expect("catalog data is a valid covering");
    StratumMap::from_covering(covering, tag).expect("catalog data pulls back")
}

/// The double cover of family F4, F3 or F2 at parameters `(g, k)`.
pub fn hyperelliptic_map(family: FamilyId, g: i64, k: i64) -> Result<StratumMap, CoveringError> {
    if !family.contains(g, k) {
        return Err(CoveringError::ParameterOutOfRange {
            family: family.to_string(),
            g,
            k,
        });
    }
    let a = 2 * (g - k) - 3;
    let map = match family {
        FamilyId::F4 => {
            let mut f = vec![
                FiberProfile::new(a, vec![1, 1]),
                FiberProfile::new(2 * k + 1, vec![1, 1]),
            ];
            f.extend(poles(2 * g + 2, &[2]));
            build(2, f, MapTag::Hyperelliptic1)
        }
        FamilyId::F3 => {
            let mut f = vec![
                FiberProfile::new(a, vec![1, 1]),
                FiberProfile::new(2 * k, vec![2]),
            ];
            f.extend(poles(2 * g + 1, &[2]));
            build(2, f, MapTag::Hyperelliptic2)
        }
        FamilyId::F2 => {
            let mut f = vec![
                FiberProfile::new(a - 1, vec![2]),
                FiberProfile::new(2 * k, vec![2]),
            ];
            f.extend(poles(2 * g, &[2]));
            build(2, f, MapTag::Hyperelliptic3)
        }
    };
    Ok(map)
}

fn twos_then_ones(twos: u32, ones: u32) -> Vec<u32> {
    let mut v = vec![2; twos as usize];
    v.extend(std::iter::repeat_n(1, ones as usize));
    v
}

/// Exceptional map number `which` (1, 2 or 3) at the given degree, if it
/// exists there.
///
/// Maps 1 and 2 need even degree. Map 3 exists in every degree: at odd
/// degree `2j + 1` each pole has fiber `(2^j, 1)`.
pub fn exceptional_map(which: u8, degree: u32) -> Option<StratumMap> {
    if degree < 2 {
        return None;
    }
    let half = degree / 2;
    let even = degree.is_multiple_of(2);
    let marked = FiberProfile::new(0, twos_then_ones(1, degree - 2));
    let full = twos_then_ones(half, 0);
    let short = twos_then_ones(half - 1, 2);
    match (which, even) {
        (1, true) => {
            let mut f: Vec<_> = poles(4, &full).collect();
            f.extend([marked.clone(), marked]);
            Some(build(degree, f, MapTag::Exceptional1))
        }
        (2, true) => {
            let mut f: Vec<_> = poles(3, &full).collect();
            f.extend(poles(1, &short));
            f.push(marked);
            Some(build(degree, f, MapTag::Exceptional2))
        }
        (3, true) => {
            let mut f: Vec<_> = poles(2, &full).collect();
            f.extend(poles(2, &short));
            Some(build(degree, f, MapTag::Exceptional3))
        }
        (3, false) => {
            let f = poles(4, &twos_then_ones(half, 1)).collect();
            Some(build(degree, f, MapTag::Exceptional3))
        }
        _ => None,
    }
}

fn within(map: &StratumMap, bounds: &SearchBounds) -> bool {
    let d = map.covering.degree();
    let base = &map.base.pattern;
    d >= bounds.min_degree.max(2)
        && d <= bounds.max_degree
        && map.base.genus <= bounds.max_base_genus
        && base.len() <= bounds.max_points
        && base.orders().first().is_none_or(|&k| k <= bounds.max_order)
}

/// Every catalogued map within `bounds`, one per (degree, base, target),
/// in report order.
///
/// Where a hyperelliptic and an exceptional map coincide (both at degree 2)
/// the hyperelliptic tag is kept.
pub fn catalog(bounds: &SearchBounds) -> Vec<StratumMap> {
    let mut by_key: BTreeMap<MapKey, StratumMap> = BTreeMap::new();
    let mut add = |map: StratumMap| {
        if within(&map, bounds) {
            by_key.entry(map.key()).or_insert(map);
        }
    };
    // base length is 2g+2 at least, so g is bounded by the point budget
    let max_g = bounds.max_points as i64;
    for family in [FamilyId::F4, FamilyId::F3, FamilyId::F2] {
        for g in 1..=max_g {
            for k in family.k_range(g) {
                if let Ok(map) = hyperelliptic_map(family, g, k) {
                    add(map);
                }
            }
        }
    }
    for degree in 2..=bounds.max_degree {
        for which in 1..=3 {
            if let Some(map) = exceptional_map(which, degree) {
                add(map);
            }
        }
    }
    let mut out: Vec<StratumMap> = by_key.into_values().collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}
