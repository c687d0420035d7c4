//! The three hyperelliptic families.
//!
//! | id | stratum                                   | range                      |
//! |----|-------------------------------------------|----------------------------|
//! | F4 | `Q(2(g-k)-3, 2(g-k)-3, 2k+1, 2k+1)`       | `k >= -1, g >= 1, g-k >= 2` |
//! | F3 | `Q(2(g-k)-3, 2(g-k)-3, 4k+2)`             | `k >= 0, g >= 1, g-k >= 1`  |
//! | F2 | `Q(4(g-k)-6, 4k+2)`                       | `k >= 0, g >= 2, g-k >= 2`  |
//!
//! Each stratum is reached by a double cover of the sphere; the covering
//! data lives in [`crate::covering::catalog`].

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::StrataError;
use crate::pattern::SingularityPattern;
use crate::strata::{strip_marked, Stratum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    F2,
    F3,
    F4,
}

impl FamilyId {
    pub fn contains(self, g: i64, k: i64) -> bool {
        match self {
            FamilyId::F4 => k >= -1 && g >= 1 && g - k >= 2,
            FamilyId::F3 => k >= 0 && g >= 1 && g - k >= 1,
            FamilyId::F2 => k >= 0 && g >= 2 && g - k >= 2,
        }
    }

    /// The family member at parameters `(g, k)`, unchecked.
    pub fn orders(self, g: i64, k: i64) -> Vec<i64> {
        match self {
            FamilyId::F4 => {
                let a = 2 * (g - k) - 3;
                let b = 2 * k + 1;
                vec![a, a, b, b]
            }
            FamilyId::F3 => {
                let a = 2 * (g - k) - 3;
                vec![a, a, 4 * k + 2]
            }
            FamilyId::F2 => vec![4 * (g - k) - 6, 4 * k + 2],
        }
    }

    /// Smallest and largest `k` admissible at genus `g`.
    pub fn k_range(self, g: i64) -> std::ops::RangeInclusive<i64> {
        match self {
            FamilyId::F4 => -1..=g - 2,
            FamilyId::F3 => 0..=g - 1,
            FamilyId::F2 => 0..=g - 2,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyId::F2 => "F2",
            FamilyId::F3 => "F3",
            FamilyId::F4 => "F4",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyMatch {
    pub family_id: FamilyId,
    pub g: i64,
    pub k: i64,
}

fn candidate(family: FamilyId, g: i64, k: i64, orders: &[i64]) -> Option<FamilyMatch> {
    if !family.contains(g, k) {
        return None;
    }
    let mut member = family.orders(g, k);
    member.sort_unstable_by(|a, b| b.cmp(a));
    (member == orders).then_some(FamilyMatch {
        family_id: family,
        g,
        k,
    })
}

/// Smallest-`k` parameters `(g, k)` with `{a, b} = {2(g-k)-3, 2k+1}`.
fn solve_odd_pair(a: i64, b: i64, family: FamilyId, orders: &[i64]) -> Option<FamilyMatch> {
    [(a, b), (b, a)]
        .into_iter()
        .filter(|(_, y)| y % 2 != 0)
        .filter_map(|(x, y)| {
            let k = (y - 1) / 2;
            let g = (x + 3) / 2 + k;
            candidate(family, g, k, orders)
        })
        .min_by_key(|m| m.k)
}

/// Matches a pattern against the families, in the order F4, F3, F2.
///
/// Marked points are ignored. When a stratum has two parameterizations
/// (the families are symmetric under `k -> g - k - 2` or similar) the one
/// with the smaller `k` is returned.
pub fn hyperelliptic_family(pattern: &SingularityPattern) -> Option<FamilyMatch> {
    let stripped = strip_marked(pattern);
    let o = stripped.orders();
    match o.len() {
        4 if o[0] == o[1] && o[2] == o[3] => solve_odd_pair(o[0], o[2], FamilyId::F4, o),
        3 => {
            let (a, c) = if o[0] == o[1] {
                (o[0], o[2])
            } else if o[1] == o[2] {
                (o[1], o[0])
            } else {
                return None;
            };
            if a % 2 == 0 || (c - 2).rem_euclid(4) != 0 {
                return None;
            }
            let k = (c - 2) / 4;
            let g = (a + 3) / 2 + k;
            candidate(FamilyId::F3, g, k, o)
        }
        2 => [(o[0], o[1]), (o[1], o[0])]
            .into_iter()
            .filter(|&(c1, c2)| (c1 - 2).rem_euclid(4) == 0 && (c2 - 2).rem_euclid(4) == 0)
            .filter_map(|(c1, c2)| {
                let k = (c2 - 2) / 4;
                let g = (c1 + 6) / 4 + k;
                candidate(FamilyId::F2, g, k, o)
            })
            .min_by_key(|m| m.k),
        _ => None,
    }
}

/// All strata of genus `g` carrying a hyperelliptic component, deduplicated
/// and sorted by pattern.
pub fn family_members(g: u32) -> Result<Vec<Stratum>, StrataError> {
    if g < 3 {
        return Err(StrataError::GenusTooSmall(g));
    }
    let g = g as i64;
    let mut seen = BTreeSet::new();
    for family in [FamilyId::F2, FamilyId::F3, FamilyId::F4] {
        for k in family.k_range(g) {
            let p = SingularityPattern::new(family.orders(g, k))?;
            seen.insert(p);
        }
    }
    Ok(seen.into_iter().map(Stratum::new).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Option<FamilyMatch> {
        hyperelliptic_family(&s.parse().unwrap())
    }

    #[test]
    fn family_examples() {
        assert_eq!(
            fam("6,6"),
            Some(FamilyMatch {
                family_id: FamilyId::F2,
                g: 4,
                k: 1
            })
        );
        assert_eq!(
            fam("-1,-1,2"),
            Some(FamilyMatch {
                family_id: FamilyId::F3,
                g: 1,
                k: 0
            })
        );
        assert_eq!(fam("12"), None);
        assert_eq!(
            fam("5,5,-1,-1"),
            Some(FamilyMatch {
                family_id: FamilyId::F4,
                g: 3,
                k: -1
            })
        );
        assert_eq!(
            fam("1,1,1,1"),
            Some(FamilyMatch {
                family_id: FamilyId::F4,
                g: 2,
                k: 0
            })
        );
        assert_eq!(
            fam("6,2"),
            Some(FamilyMatch {
                family_id: FamilyId::F2,
                g: 3,
                k: 0
            })
        );
        assert_eq!(
            fam("3,3,1,1"),
            Some(FamilyMatch {
                family_id: FamilyId::F4,
                g: 3,
                k: 0
            })
        );
        assert_eq!(fam("2,2,2,2"), None);
        assert_eq!(
            fam("3,3,2"),
            Some(FamilyMatch {
                family_id: FamilyId::F3,
                g: 3,
                k: 0
            })
        );
        assert_eq!(fam("2,2,4"), None);
        assert_eq!(fam("9,-1"), None);
        assert_eq!(fam("4"), None);
    }

    #[test]
    fn family_members_genus_three() {
        let members = family_members(3).unwrap();
        let pats: Vec<String> = members.iter().map(|s| s.pattern.compact()).collect();
        assert!(pats.contains(&"6,2".to_string()));
        assert!(!pats.contains(&"2,6".to_string()));
        assert!(pats.contains(&"5^2,-1^2".to_string()));
        let mut dedup = pats.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), pats.len());
        for m in &members {
            assert_eq!(m.genus, 3);
            assert!(hyperelliptic_family(&m.pattern).is_some());
        }
        assert_eq!(family_members(2), Err(StrataError::GenusTooSmall(2)));
    }

    #[test]
    fn every_member_matches_back() {
        for g in 1..=12 {
            for family in [FamilyId::F2, FamilyId::F3, FamilyId::F4] {
                for k in family.k_range(g) {
                    if !family.contains(g, k) {
                        continue;
                    }
                    let p = SingularityPattern::new(family.orders(g, k)).unwrap();
                    let m = hyperelliptic_family(&p).expect("member must match");
                    assert_eq!(m.family_id, family);
                    assert_eq!(m.g, g);
                    assert_eq!(p.genus() as i64, g);
                }
            }
        }
    }
}
