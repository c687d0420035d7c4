//! Singularity patterns `(k_1, ..., k_n)` and their text syntax.
//!
//! Text form is a comma-separated list of integers with optional exponent
//! sugar: `3,1,-1^8` stands for `3,1` followed by eight `-1`. Rendering
//! always expands the exponents.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::PatternError;

/// Multiset of singularity orders, kept sorted in non-increasing order.
///
/// `-1` is a simple pole, `0` a marked point, `k >= 1` a zero of order `k`.
/// Construction enforces the Gauss–Bonnet constraints: the sum is a
/// multiple of 4 and at least -4.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SingularityPattern {
    orders: Vec<i64>,
}

/// Checks the pattern constraints on a raw list and returns the genus.
pub fn genus_of(orders: &[i64]) -> Result<u32, PatternError> {
    if let Some(&bad) = orders.iter().find(|&&k| k < -1) {
        return Err(PatternError::EntryBelowMinusOne(bad));
    }
    let sum: i64 = orders.iter().sum();
    if sum.rem_euclid(4) != 0 {
        return Err(PatternError::SumNotDivisibleBy4(sum));
    }
    if sum < -4 {
        return Err(PatternError::SumBelowMinusFour(sum));
    }
    Ok(((sum + 4) / 4) as u32)
}

impl SingularityPattern {
    pub fn new(mut orders: Vec<i64>) -> Result<Self, PatternError> {
        genus_of(&orders)?;
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { orders })
    }

    /// The empty pattern `Q(∅)`, of genus 1.
    pub fn empty() -> Self {
        Self { orders: Vec::new() }
    }

    pub fn orders(&self) -> &[i64] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.orders.iter().sum()
    }

    pub fn genus(&self) -> u32 {
        ((self.sum() + 4) / 4) as u32
    }

    /// Number of entries equal to `k`.
    pub fn count(&self, k: i64) -> usize {
        self.orders.iter().filter(|&&x| x == k).count()
    }

    pub fn has_marked_points(&self) -> bool {
        self.orders.contains(&0)
    }

    pub fn odd_count(&self) -> usize {
        self.orders.iter().filter(|&&k| k % 2 != 0).count()
    }

    /// Pairs `(order, multiplicity)` in canonical order.
    pub fn groups(&self) -> Vec<(i64, usize)> {
        let mut out: Vec<(i64, usize)> = Vec::new();
        for &k in &self.orders {
            match out.last_mut() {
                Some((last, m)) if *last == k => *m += 1,
                _ => out.push((k, 1)),
            }
        }
        out
    }

    /// Renders with exponent sugar, e.g. `3,1,-1^8`.
    pub fn compact(&self) -> String {
        self.groups()
            .into_iter()
            .map(|(k, m)| {
                if m == 1 {
                    k.to_string()
                } else {
                    format!("{k}^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl TryFrom<Vec<i64>> for SingularityPattern {
    type Error = PatternError;

    fn try_from(orders: Vec<i64>) -> Result<Self, Self::Error> {
        Self::new(orders)
    }
}

impl From<SingularityPattern> for Vec<i64> {
    fn from(p: SingularityPattern) -> Self {
        p.orders
    }
}

/// Parses the comma-separated list with exponent sugar, without checking
/// the pattern constraints.
pub fn parse_orders(text: &str) -> Result<Vec<i64>, PatternError> {
    let text = text.trim();
    let text = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text);
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b.trim(), Some(e.trim())),
            None => (token, None),
        };
        let k: i64 = base
            .parse()
            .map_err(|_| PatternError::Syntax(format!("bad order {base:?}")))?;
        let m: usize = match exp {
            Some(e) => e
                .parse()
                .map_err(|_| PatternError::Syntax(format!("bad exponent {e:?}")))?,
            None => 1,
        };
        out.extend(std::iter::repeat_n(k, m));
    }
    Ok(out)
}

impl FromStr for SingularityPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(parse_orders(s)?)
    }
}

impl fmt::Display for SingularityPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
