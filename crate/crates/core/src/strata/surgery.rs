//! Breaking a zero into two or three singularities, at the level of patterns.
//!
//! Geometrically the zero is replaced by nearby singularities joined by
//! short horizontal saddle connections; only the resulting orders are
//! modelled here.

use crate::error::StrataError;
use crate::pattern::SingularityPattern;

fn allowed_part(l: i64) -> bool {
    l == -1 || l >= 1
}

fn replace(
    pattern: &SingularityPattern,
    index: usize,
    parts: &[i64],
) -> Result<SingularityPattern, StrataError> {
    let mut orders = pattern.orders().to_vec();
    orders.remove(index);
    orders.extend_from_slice(parts);
    Ok(SingularityPattern::new(orders)?)
}

fn entry(pattern: &SingularityPattern, index: usize) -> Result<i64, StrataError> {
    pattern
        .orders()
        .get(index)
        .copied()
        .ok_or(StrataError::IndexOutOfRange {
            index,
            len: pattern.len(),
        })
}

/// Replaces the entry at `index` (canonical order) by `l1, l2`.
///
/// An odd order splits into any two parts from `{-1, 1, 2, ...}`; an even
/// order only into two even parts, each at least 2.
pub fn break_zero_two(
    pattern: &SingularityPattern,
    index: usize,
    l1: i64,
    l2: i64,
) -> Result<SingularityPattern, StrataError> {
    let k = entry(pattern, index)?;
    if l1 + l2 != k {
        return Err(StrataError::ParityViolation(format!(
            "{l1} + {l2} does not equal {k}"
        )));
    }
    if k % 2 == 0 && (l1 % 2 != 0 || l2 % 2 != 0) {
        return Err(StrataError::ParityViolation(format!(
            "even order {k} needs even parts, got {l1}, {l2}"
        )));
    }
    for l in [l1, l2] {
        if !allowed_part(l) {
            return Err(StrataError::ZeroPartNotAllowed(l));
        }
    }
    replace(pattern, index, &[l1, l2])
}

/// Replaces the odd entry at `index` by three odd parts.
pub fn break_zero_three(
    pattern: &SingularityPattern,
    index: usize,
    l1: i64,
    l2: i64,
    l3: i64,
) -> Result<SingularityPattern, StrataError> {
    let k = entry(pattern, index)?;
    if k % 2 == 0 {
        return Err(StrataError::ParityViolation(format!("order {k} is even")));
    }
    if l1 + l2 + l3 != k {
        return Err(StrataError::ParityViolation(format!(
            "{l1} + {l2} + {l3} does not equal {k}"
        )));
    }
    for l in [l1, l2, l3] {
        if l % 2 == 0 {
            return Err(StrataError::ParityViolation(format!("part {l} is even")));
        }
        if !allowed_part(l) {
            return Err(StrataError::ZeroPartNotAllowed(l));
        }
    }
    replace(pattern, index, &[l1, l2, l3])
}
