//! Strata `Q(k_1, ..., k_n)`, their invariants and component classification.

mod classify;
mod enumerate;
mod family;
mod surgery;

use serde::{Deserialize, Serialize};

use crate::error::{PatternError, StrataError};
use crate::pattern::SingularityPattern;

pub use classify::{classify, ComponentLabel, ComponentReport, ComponentStatus, VerdictSource};
pub use enumerate::{enumerate_patterns, enumerate_strata};
pub use family::{family_members, hyperelliptic_family, FamilyId, FamilyMatch};
pub use surgery::{break_zero_three, break_zero_two};

/// The four patterns whose strata are empty (Masur–Smillie).
pub const EMPTY_PATTERNS: [&[i64]; 4] = [&[], &[1, -1], &[4], &[3, 1]];

/// A stratum: a pattern together with its genus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Stratum {
    pub pattern: SingularityPattern,
    pub genus: u32,
}

impl Stratum {
    pub fn new(pattern: SingularityPattern) -> Self {
        let genus = pattern.genus();
        Self { pattern, genus }
    }

    pub fn from_orders(orders: Vec<i64>) -> Result<Self, PatternError> {
        Ok(Self::new(SingularityPattern::new(orders)?))
    }

    /// Complex dimension `2g + n - 2`; marked points count in `n`.
    pub fn dimension(&self) -> i64 {
        dimension(&self.pattern)
    }

    pub fn is_empty(&self) -> bool {
        is_empty(&self.pattern)
    }
}

impl From<SingularityPattern> for Stratum {
    fn from(pattern: SingularityPattern) -> Self {
        Self::new(pattern)
    }
}

pub fn dimension(pattern: &SingularityPattern) -> i64 {
    2 * pattern.genus() as i64 + pattern.len() as i64 - 2
}

/// Removes marked points; the genus is unchanged.
pub fn strip_marked(pattern: &SingularityPattern) -> SingularityPattern {
    let orders = pattern
        .orders()
        .iter()
        .copied()
        .filter(|&k| k != 0)
        .collect();
    SingularityPattern::new(orders).expect("dropping zeros keeps the sum")
}

/// True for the four empty strata, after forgetting marked points.
pub fn is_empty(pattern: &SingularityPattern) -> bool {
    let stripped = strip_marked(pattern);
    EMPTY_PATTERNS.contains(&stripped.orders())
}

/// Orders of an Abelian differential together with its marked points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianPattern {
    /// Zero orders, non-increasing, all at least 1.
    pub zero_orders: Vec<i64>,
    pub marked_count: usize,
    pub genus: u32,
}

/// Singularity data of `ω` on the canonical double cover where `π*ψ = ω²`.
///
/// Odd singularities are branch points: an order-`k` point lifts to one
/// zero of `ω` of order `k + 1`. Even ones are regular values and lift to
/// two zeros of order `k / 2`. Orders 0 are reported as marked points.
///
/// This is pure arithmetic; it does not check whether the stratum is empty.
pub fn canonical_double_cover(pattern: &SingularityPattern) -> Result<AbelianPattern, StrataError> {
    let odd = pattern.odd_count();
    if !odd.is_multiple_of(2) {
        return Err(StrataError::OddCountNotEven);
    }
    let mut zero_orders = Vec::new();
    let mut marked_count = 0;
    for &k in pattern.orders() {
        let (order, copies) = if k % 2 != 0 { (k + 1, 1) } else { (k / 2, 2) };
        if order == 0 {
            marked_count += copies;
        } else {
            zero_orders.extend(std::iter::repeat_n(order, copies));
        }
    }
    zero_orders.sort_unstable_by(|a, b| b.cmp(a));
    let genus = 2 * pattern.genus() as i64 - 1 + odd as i64 / 2;
    let sum: i64 = zero_orders.iter().sum();
    debug_assert_eq!(sum, 2 * genus - 2);
    Ok(AbelianPattern {
        zero_orders,
        marked_count,
        genus: genus as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> SingularityPattern {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&pat("2,2")), 4);
        assert_eq!(dimension(&pat("3,1,-1^8")), 8);
        assert_eq!(dimension(&pat("-1^4,0,0")), dimension(&pat("2,2")));
        assert_eq!(dimension(&SingularityPattern::empty()), 0);
    }

    #[test]
    fn emptiness_ignores_marked_points() {
        assert!(is_empty(&pat("1,3")));
        assert!(is_empty(&pat("4,0")));
        assert!(is_empty(&pat("1,-1")));
        assert!(is_empty(&pat("0,0")));
        assert!(!is_empty(&pat("2,2")));
        assert!(!is_empty(&pat("-1^4")));
    }

    #[test]
    fn strip_marked_examples() {
        assert_eq!(strip_marked(&pat("2,2,0,0")), pat("2,2"));
        assert_eq!(strip_marked(&pat("2,2")), pat("2,2"));
        assert_eq!(strip_marked(&pat("-1^4,0")), pat("-1^4"));
    }

    #[test]
    fn canonical_cover_examples() {
        let c = canonical_double_cover(&pat("2,2")).unwrap();
        assert_eq!(c.zero_orders, vec![1, 1, 1, 1]);
        assert_eq!(c.genus, 3);
        assert_eq!(c.marked_count, 0);

        let c = canonical_double_cover(&pat("-1^4")).unwrap();
        assert!(c.zero_orders.is_empty());
        assert_eq!(c.marked_count, 4);
        assert_eq!(c.genus, 1);

        // computed even though Q(1,3) is empty
        let c = canonical_double_cover(&pat("1,3")).unwrap();
        assert_eq!(c.zero_orders, vec![4, 2]);
        assert_eq!(c.genus, 4);

        let c = canonical_double_cover(&pat("2,0,-1^6")).unwrap();
        assert_eq!(c.zero_orders, vec![1, 1]);
        assert_eq!(c.marked_count, 8);
    }
}
