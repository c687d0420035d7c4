//! Exhaustive search for dimension-preserving coverings.
//!
//! For every degree and base genus within bounds, every base pattern is
//! tried with every assignment of ramification profiles that ramifies over
//! each marked point. Assignments are first pruned by
//! [`weakened_inequality_holds`], which only depends on how many points of
//! each kind are critical values. Survivors must have dimension gap 0, a
//! non-empty target and a pullback that is not known to be a square.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::covering::{
    catalog, covered_genus, dimension_gap, pullback_is_square, pullback_pattern,
    weakened_inequality_holds, CoveringType, FiberProfile, MapKey, MapTag, PointCounts,
    SquareStatus, StratumMap,
};
use crate::error::CoveringError;
use crate::pattern::SingularityPattern;
use crate::strata::{enumerate_patterns, is_empty};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub max_degree: u32,
    pub max_base_genus: u32,
    pub max_order: i64,
    pub max_points: usize,
    /// Lower end of the degree range; values below 2 mean 2.
    pub min_degree: u32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self {
            max_degree: 6,
            max_base_genus: 2,
            max_order: 12,
            max_points: 12,
            min_degree: 2,
        }
    }
}

impl SearchBounds {
    /// The bounds must at least admit double covers of `Q(-1^4)`.
    pub fn check(&self) -> Result<(), CoveringError> {
        if self.max_degree < 2 {
            return Err(CoveringError::BoundsTooSmall(format!(
                "max degree {} is below 2",
                self.max_degree
            )));
        }
        if self.max_points < 4 {
            return Err(CoveringError::BoundsTooSmall(format!(
                "max points {} is below 4",
                self.max_points
            )));
        }
        if self.max_order < -1 {
            return Err(CoveringError::BoundsTooSmall(format!(
                "max order {} is below -1",
                self.max_order
            )));
        }
        Ok(())
    }

    fn degrees(&self) -> std::ops::RangeInclusive<u32> {
        self.min_degree.max(2)..=self.max_degree
    }
}

/// Partitions of `d` in non-increasing order, the trivial one last.
fn partitions(d: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Non-decreasing index sequences of length `size` over `0..n`.
fn multisets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(
        n: usize,
        size: usize,
        start: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if prefix.len() == size {
            out.push(prefix.clone());
            return;
        }
        for i in start..n {
            prefix.push(i);
            rec(n, size, i, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, size, 0, &mut Vec::with_capacity(size), &mut out);
    out
}

struct Cell<'a> {
    degree: u32,
    genus: u32,
    prune: bool,
    /// Non-trivial partitions of the degree.
    ramified: &'a [Vec<u32>],
}

impl Cell<'_> {
    fn run(&self, bounds: &SearchBounds) -> Vec<StratumMap> {
        let mut out = Vec::new();
        for base in enumerate_patterns(self.genus, bounds.max_order, bounds.max_points, true) {
            if is_empty(&base) {
                continue;
            }
            let groups = base.groups();
            let mut critical = Vec::with_capacity(groups.len());
            self.choose_counts(&base, &groups, &mut critical, &mut out);
        }
        out
    }

    /// Picks how many points of each group are critical values.
    fn choose_counts(
        &self,
        base: &SingularityPattern,
        groups: &[(i64, usize)],
        critical: &mut Vec<usize>,
        out: &mut Vec<StratumMap>,
    ) {
        let i = critical.len();
        if i == groups.len() {
            let counts = counts_of(groups, critical);
            if self.prune && !weakened_inequality_holds(self.degree, self.genus, counts) {
                return;
            }
            let mut fibers = Vec::with_capacity(base.len());
            self.choose_profiles(base, groups, critical, &mut fibers, out);
            return;
        }
        let (k, mult) = groups[i];
        let low = if k == 0 { mult } else { 0 };
        for c in low..=mult {
            critical.push(c);
            self.choose_counts(base, groups, critical, out);
            critical.pop();
        }
    }

    fn choose_profiles(
        &self,
        base: &SingularityPattern,
        groups: &[(i64, usize)],
        critical: &[usize],
        fibers: &mut Vec<FiberProfile>,
        out: &mut Vec<StratumMap>,
    ) {
        let i = fibers_done(groups, fibers.len());
        if i == groups.len() {
            if let Some(map) = self.evaluate(base, fibers.clone()) {
                out.push(map);
            }
            return;
        }
        let (k, mult) = groups[i];
        let before = fibers.len();
        for choice in multisets(self.ramified.len(), critical[i]) {
            fibers.extend(
                choice
                    .iter()
                    .map(|&j| FiberProfile::new(k, self.ramified[j].clone())),
            );
            fibers.extend((critical[i]..mult).map(|_| FiberProfile::trivial(k, self.degree)));
            self.choose_profiles(base, groups, critical, fibers, out);
            fibers.truncate(before);
        }
    }

    fn evaluate(&self, base: &SingularityPattern, fibers: Vec<FiberProfile>) -> Option<StratumMap> {
        let covering = CoveringType::new(self.degree, self.genus, fibers).ok()?;
        covered_genus(&covering).ok()?;
        let target = pullback_pattern(&covering, base).ok()?;
        if is_empty(&target) {
            return None;
        }
        if dimension_gap(&covering, base).ok()? != 0 {
            return None;
        }
        if pullback_is_square(&covering, base).ok()? == SquareStatus::Yes {
            return None;
        }
        StratumMap::from_covering(covering, MapTag::Other).ok()
    }
}

/// Index of the group the next fiber belongs to.
fn fibers_done(groups: &[(i64, usize)], placed: usize) -> usize {
    let mut seen = 0;
    for (i, &(_, mult)) in groups.iter().enumerate() {
        if placed == seen {
            return i;
        }
        seen += mult;
    }
    groups.len()
}

fn counts_of(groups: &[(i64, usize)], critical: &[usize]) -> PointCounts {
    let mut c = PointCounts::default();
    for (&(k, mult), &crit) in groups.iter().zip(critical) {
        let (crit, regular) = (crit as i64, (mult - crit) as i64);
        match k {
            0 => c.m += crit,
            -1 => c.p += crit,
            _ => c.n += crit,
        }
        c.r += regular;
    }
    c
}

fn run_cells(bounds: &SearchBounds, prune: bool) -> Vec<StratumMap> {
    let cells: Vec<(u32, u32)> = bounds
        .degrees()
        .flat_map(|d| (0..=bounds.max_base_genus).map(move |g| (d, g)))
        .collect();
    let mut out: Vec<StratumMap> = cells
        .into_par_iter()
        .flat_map_iter(|(degree, genus)| {
            let mut ramified = partitions(degree);
            ramified.pop();
            Cell {
                degree,
                genus,
                prune,
                ramified: &ramified,
            }
            .run(bounds)
        })
        .collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// Every surviving covering type, one entry per ramification profile and
/// untagged. With `prune` off the weakened inequality is skipped, which is
/// only practical for small bounds.
pub fn search_survivors(
    bounds: &SearchBounds,
    prune: bool,
) -> Result<Vec<StratumMap>, CoveringError> {
    bounds.check()?;
    Ok(run_cells(bounds, prune))
}

/// Dimension-preserving maps within `bounds`, one per (degree, base,
/// target), tagged against the catalog.
///
/// When several profiles realize the same map, the catalogued profile is
/// reported if it is among them and the first one otherwise.
pub fn search_dimension_preserving(
    bounds: &SearchBounds,
) -> Result<Vec<StratumMap>, CoveringError> {
    let survivors = search_survivors(bounds, true)?;
    Ok(group_and_tag(survivors, bounds))
}

pub(crate) fn group_and_tag(survivors: Vec<StratumMap>, bounds: &SearchBounds) -> Vec<StratumMap> {
    let known: BTreeMap<MapKey, StratumMap> =
        catalog(bounds).into_iter().map(|m| (m.key(), m)).collect();
    let mut groups: BTreeMap<MapKey, Vec<StratumMap>> = BTreeMap::new();
    for m in survivors {
        groups.entry(m.key()).or_default().push(m);
    }
    let mut out: Vec<StratumMap> = groups
        .into_iter()
        .map(|(key, members)| match known.get(&key) {
            Some(k) if members.iter().any(|m| m.covering == k.covering) => k.clone(),
            Some(k) => StratumMap {
                tag: k.tag,
                ..members.into_iter().next().expect("groups are non-empty")
            },
            None => members.into_iter().next().expect("groups are non-empty"),
        })
        .collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> SingularityPattern {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_of_small_numbers() {
        assert_eq!(
            partitions(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        let counts: Vec<usize> = (1..=8).map(|d| partitions(d).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn multiset_counts() {
        // C(n + s - 1, s)
        assert_eq!(multisets(3, 2).len(), 6);
        assert_eq!(multisets(4, 3).len(), 20);
        assert_eq!(multisets(5, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn bounds_checked() {
        let mut b = SearchBounds {
            max_points: 3,
            ..SearchBounds::default()
        };
        assert!(matches!(
            search_dimension_preserving(&b),
            Err(CoveringError::BoundsTooSmall(_))
        ));
        b.max_points = 4;
        b.max_degree = 1;
        assert!(matches!(
            search_dimension_preserving(&b),
            Err(CoveringError::BoundsTooSmall(_))
        ));
    }

    #[test]
    fn small_search_finds_marked_pillowcase_map() {
        let b = SearchBounds {
            max_degree: 2,
            max_base_genus: 0,
            max_order: 2,
            max_points: 6,
            min_degree: 2,
        };
        let maps = search_dimension_preserving(&b).unwrap();
        assert!(maps
            .iter()
            .any(|m| m.base.pattern == pat("0,-1^4") && m.target.pattern == pat("2,-1,-1")));
        assert!(maps.iter().all(|m| m.tag != MapTag::Other));
    }

    #[test]
    fn pruning_loses_nothing_on_small_bounds() {
        let b = SearchBounds {
            max_degree: 4,
            max_base_genus: 1,
            max_order: 3,
            max_points: 6,
            min_degree: 2,
        };
        let pruned = search_survivors(&b, true).unwrap();
        let full = search_survivors(&b, false).unwrap();
        assert_eq!(pruned, full);
    }
}
