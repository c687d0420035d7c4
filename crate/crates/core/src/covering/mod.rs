//! Ramified coverings of a fixed combinatorial type and the maps they induce
//! between strata.
//!
//! A covering of degree `d` is recorded by one [`FiberProfile`] per
//! singular or marked point of the base: the partition of `d` given by the
//! ramification indices of its preimages. A preimage of index `e` over a
//! point of order `k` carries order `e(k + 2) - 2` upstairs. Preimages of
//! order 0 are never marked on the covering surface.
//!
//! Base points are sorted into four kinds, following the dimension count
//! for the induced map:
//!
//! * `n`: true zeros that are critical values,
//! * `m`: marked points (always critical),
//! * `p`: simple poles that are critical values,
//! * `r`: zeros and poles that are regular values.

pub mod catalog;
pub mod search;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CoveringError;
use crate::pattern::{self, SingularityPattern};
use crate::strata::Stratum;

pub use catalog::{catalog, exceptional_map, hyperelliptic_map};
pub use search::{search_dimension_preserving, search_survivors, SearchBounds};

/// Order upstairs at a preimage of ramification index `e` over a point of
/// order `k`.
pub fn local_order(k: i64, e: u32) -> i64 {
    e as i64 * (k + 2) - 2
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiberProfile {
    pub base_order: i64,
    /// Ramification indices, non-increasing.
    pub ram_indices: Vec<u32>,
}

impl FiberProfile {
    pub fn new(base_order: i64, mut ram_indices: Vec<u32>) -> Self {
        ram_indices.sort_unstable_by(|a, b| b.cmp(a));
        Self {
            base_order,
            ram_indices,
        }
    }

    pub fn trivial(base_order: i64, degree: u32) -> Self {
        Self::new(base_order, vec![1; degree as usize])
    }

    pub fn is_critical(&self) -> bool {
        self.ram_indices.iter().any(|&e| e > 1)
    }

    pub fn count_index(&self, e: u32) -> usize {
        self.ram_indices.iter().filter(|&&x| x == e).count()
    }

    /// Sum of `e - 1` over the fiber.
    pub fn ramification(&self) -> i64 {
        self.ram_indices.iter().map(|&e| e as i64 - 1).sum()
    }
}

impl fmt::Display for FiberProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ram_indices.iter().map(|e| e.to_string()).collect();
        write!(f, "{}:[{}]", self.base_order, parts.join(","))
    }
}

/// The parameters `(n, m, p, r)` of a covering, see the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct PointCounts {
    pub n: i64,
    pub m: i64,
    pub p: i64,
    pub r: i64,
}

impl PointCounts {
    pub fn total(&self) -> i64 {
        self.n + self.m + self.p + self.r
    }
}

/// Degree, base genus and one fiber per base singularity, sorted
/// canonically (base order descending, then partition descending).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoveringType {
    degree: u32,
    base_genus: u32,
    fibers: Vec<FiberProfile>,
}

impl CoveringType {
    /// Builds a covering type, requiring ramification over every marked point.
    pub fn new(
        degree: u32,
        base_genus: u32,
        fibers: Vec<FiberProfile>,
    ) -> Result<Self, CoveringError> {
        let c = Self::allowing_unramified_marked(degree, base_genus, fibers)?;
        if c.fibers
            .iter()
            .any(|f| f.base_order == 0 && !f.is_critical())
        {
            return Err(CoveringError::UnramifiedMarkedPoint);
        }
        Ok(c)
    }

    /// Same as [`CoveringType::new`] but marked points may be regular
    /// values. Covers read off explicit flat surfaces need this, since a
    /// surface may have regular vertices the cover does not branch over.
    pub fn allowing_unramified_marked(
        degree: u32,
        base_genus: u32,
        mut fibers: Vec<FiberProfile>,
    ) -> Result<Self, CoveringError> {
        if degree < 2 {
            return Err(CoveringError::DegreeTooSmall(degree));
        }
        for f in &mut fibers {
            f.ram_indices.sort_unstable_by(|a, b| b.cmp(a));
            if f.ram_indices.contains(&0) {
                return Err(CoveringError::ZeroIndex(f.base_order));
            }
            if f.ram_indices.iter().sum::<u32>() != degree {
                return Err(CoveringError::PartitionSum {
                    order: f.base_order,
                    indices: f.ram_indices.clone(),
                    degree,
                });
            }
        }
        fibers.sort_unstable_by(|a, b| b.cmp(a));
        let orders: Vec<i64> = fibers.iter().map(|f| f.base_order).collect();
        let derived = pattern::genus_of(&orders)?;
        if derived != base_genus {
            return Err(CoveringError::BaseGenusMismatch {
                stated: base_genus,
                derived,
            });
        }
        Ok(Self {
            degree,
            base_genus,
            fibers,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn base_genus(&self) -> u32 {
        self.base_genus
    }

    pub fn fibers(&self) -> &[FiberProfile] {
        &self.fibers
    }

    pub fn base_pattern(&self) -> SingularityPattern {
        SingularityPattern::new(self.fibers.iter().map(|f| f.base_order).collect())
            .expect("checked at construction")
    }

    pub fn counts(&self) -> PointCounts {
        let mut c = PointCounts::default();
        for f in &self.fibers {
            match (f.base_order, f.is_critical()) {
                (0, _) => c.m += 1,
                (-1, true) => c.p += 1,
                (_, true) => c.n += 1,
                (_, false) => c.r += 1,
            }
        }
        c
    }

    /// Sum of `e - 1` over all points of the cover.
    pub fn total_ramification(&self) -> i64 {
        self.fibers.iter().map(FiberProfile::ramification).sum()
    }
}

/// Genus of the covering surface by Riemann–Hurwitz:
/// `2g' - 2 = d(2g - 2) + Σ(e - 1)`.
pub fn covered_genus(covering: &CoveringType) -> Result<u32, CoveringError> {
    let d = covering.degree as i64;
    let chi = d * (2 * covering.base_genus as i64 - 2) + covering.total_ramification();
    if chi % 2 != 0 {
        return Err(CoveringError::NonIntegralGenus(chi));
    }
    if chi < -2 {
        return Err(CoveringError::NegativeGenus(chi));
    }
    Ok(((chi + 2) / 2) as u32)
}

fn check_aligned(covering: &CoveringType, base: &SingularityPattern) -> Result<(), CoveringError> {
    let fibers: Vec<i64> = covering.fibers.iter().map(|f| f.base_order).collect();
    if fibers != base.orders() {
        return Err(CoveringError::FiberMismatch {
            fibers,
            pattern: base.orders().to_vec(),
        });
    }
    Ok(())
}

/// Singularity pattern of the pulled-back differential, marked points dropped.
pub fn pullback_pattern(
    covering: &CoveringType,
    base: &SingularityPattern,
) -> Result<SingularityPattern, CoveringError> {
    check_aligned(covering, base)?;
    let orders: Vec<i64> = covering
        .fibers
        .iter()
        .flat_map(|f| {
            f.ram_indices
                .iter()
                .map(move |&e| local_order(f.base_order, e))
        })
        .filter(|&k| k != 0)
        .collect();
    let genus = covered_genus(covering)?;
    let sum: i64 = orders.iter().sum();
    if sum != 4 * genus as i64 - 4 {
        return Err(CoveringError::GaussBonnetMismatch { sum, genus });
    }
    Ok(SingularityPattern::new(orders)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SquareStatus {
    Yes,
    No,
    Unknown,
}

/// Whether the pulled-back differential is the square of an Abelian one.
///
/// An odd order upstairs rules it out, and so does an odd degree: the
/// holonomy character of the base is non-trivial, and a connected cover on
/// which it dies factors through the canonical double cover. For double
/// covers of the sphere the answer is exact: the pullback is a square
/// precisely when the branch points are the odd singularities. Other cases
/// depend on the monodromy and are reported as unknown.
pub fn pullback_is_square(
    covering: &CoveringType,
    base: &SingularityPattern,
) -> Result<SquareStatus, CoveringError> {
    let target = pullback_pattern(covering, base)?;
    if target.odd_count() > 0 || covering.degree % 2 == 1 {
        return Ok(SquareStatus::No);
    }
    if covering.degree == 2 && covering.base_genus == 0 {
        let canonical = covering
            .fibers
            .iter()
            .all(|f| f.is_critical() == (f.base_order % 2 != 0));
        return Ok(if canonical {
            SquareStatus::Yes
        } else {
            SquareStatus::No
        });
    }
    Ok(SquareStatus::Unknown)
}

/// `dim Q' - dim Q` for the induced map, computed twice: from the target
/// pattern, and from the closed form
/// `(d - 1)(2g + n + m + p + r - 2) - #{e = 1 over marked} - #{e = 2 over poles}`.
pub fn dimension_gap(
    covering: &CoveringType,
    base: &SingularityPattern,
) -> Result<i64, CoveringError> {
    let target = pullback_pattern(covering, base)?;
    let target_genus = covered_genus(covering)? as i64;
    let target_dim = 2 * target_genus + target.len() as i64 - 2;
    let base_dim = 2 * covering.base_genus as i64 + base.len() as i64 - 2;
    let direct = target_dim - base_dim;

    let d = covering.degree as i64;
    let c = covering.counts();
    let lost: i64 = covering
        .fibers
        .iter()
        .map(|f| match f.base_order {
            0 => f.count_index(1) as i64,
            -1 => f.count_index(2) as i64,
            _ => 0,
        })
        .sum();
    let closed = (d - 1) * (2 * covering.base_genus as i64 + c.total() - 2) - lost;

    if direct != closed {
        return Err(CoveringError::InternalFormulaMismatch { direct, closed });
    }
    Ok(direct)
}

/// `(d - 1)(2g - 2 + n + r) <= p(1 - d/2) - m`, a necessary condition for a
/// dimension-preserving covering, in integer form.
pub fn weakened_inequality_holds(degree: u32, base_genus: u32, c: PointCounts) -> bool {
    let d = degree as i64;
    let g = base_genus as i64;
    2 * (d - 1) * (2 * g - 2 + c.n + c.r) <= c.p * (2 - d) - 2 * c.m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MapTag {
    #[serde(rename = "hyperelliptic_1")]
    Hyperelliptic1,
    #[serde(rename = "hyperelliptic_2")]
    Hyperelliptic2,
    #[serde(rename = "hyperelliptic_3")]
    Hyperelliptic3,
    #[serde(rename = "exceptional_1")]
    Exceptional1,
    #[serde(rename = "exceptional_2")]
    Exceptional2,
    #[serde(rename = "exceptional_3")]
    Exceptional3,
    #[serde(rename = "canonical_square")]
    CanonicalSquare,
    #[serde(rename = "other")]
    Other,
}

impl MapTag {
    pub fn is_exceptional(self) -> bool {
        matches!(
            self,
            MapTag::Exceptional1 | MapTag::Exceptional2 | MapTag::Exceptional3
        )
    }

    pub fn is_hyperelliptic(self) -> bool {
        matches!(
            self,
            MapTag::Hyperelliptic1 | MapTag::Hyperelliptic2 | MapTag::Hyperelliptic3
        )
    }
}

/// Identity of a map at the level of strata: degree, base and target.
pub type MapKey = (u32, SingularityPattern, SingularityPattern);

/// The local map `Q(base) -> Q(target)` induced by a covering type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumMap {
    pub base: Stratum,
    pub covering: CoveringType,
    pub target: Stratum,
    pub base_dim: i64,
    pub target_dim: i64,
    pub tag: MapTag,
}

impl StratumMap {
    pub fn from_covering(covering: CoveringType, tag: MapTag) -> Result<Self, CoveringError> {
        let base = Stratum::new(covering.base_pattern());
        let target_pattern = pullback_pattern(&covering, &base.pattern)?;
        let target_genus = covered_genus(&covering)?;
        let target = Stratum::new(target_pattern);
        debug_assert_eq!(target.genus, target_genus);
        Ok(Self {
            base_dim: base.dimension(),
            target_dim: target.dimension(),
            base,
            covering,
            target,
            tag,
        })
    }

    pub fn key(&self) -> MapKey {
        (
            self.covering.degree(),
            self.base.pattern.clone(),
            self.target.pattern.clone(),
        )
    }

    /// Deterministic report order: degree, base genus, base pattern, profile.
    pub fn sort_key(&self) -> (u32, u32, &SingularityPattern, &[FiberProfile]) {
        (
            self.covering.degree(),
            self.base.genus,
            &self.base.pattern,
            self.covering.fibers(),
        )
    }

    pub fn record(&self) -> MapRecord {
        MapRecord {
            base: self.base.pattern.clone(),
            degree: self.covering.degree(),
            profile: self.covering.fibers().to_vec(),
            target: self.target.pattern.clone(),
            dims: Dims {
                base: self.base_dim,
                target: self.target_dim,
            },
            tag: self.tag,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub base: i64,
    pub target: i64,
}

/// JSON form of a [`StratumMap`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRecord {
    pub base: SingularityPattern,
    pub degree: u32,
    pub profile: Vec<FiberProfile>,
    pub target: SingularityPattern,
    pub dims: Dims,
    pub tag: MapTag,
}

impl Serialize for StratumMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.record().serialize(serializer)
    }
}

/// Tags an arbitrary covering: square pullbacks, catalogued maps, or other.
pub fn tag_covering(covering: &CoveringType) -> Result<MapTag, CoveringError> {
    let base = covering.base_pattern();
    if pullback_is_square(covering, &base)? == SquareStatus::Yes {
        return Ok(MapTag::CanonicalSquare);
    }
    let probe = StratumMap::from_covering(covering.clone(), MapTag::Other)?;
    let bounds = SearchBounds {
        max_degree: covering.degree(),
        max_base_genus: covering.base_genus(),
        max_order: base.orders().first().copied().unwrap_or(0).max(1),
        max_points: base.len().max(4),
        min_degree: covering.degree(),
    };
    Ok(catalog(&bounds)
        .into_iter()
        .find(|m| m.key() == probe.key())
        .map_or(MapTag::Other, |m| m.tag))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> SingularityPattern {
        s.parse().unwrap()
    }

    fn fibers(spec: &[(i64, &[u32])]) -> Vec<FiberProfile> {
        spec.iter()
            .map(|(k, e)| FiberProfile::new(*k, e.to_vec()))
            .collect()
    }

    #[test]
    fn local_order_examples() {
        assert_eq!(local_order(-1, 2), 0);
        assert_eq!(local_order(2, 2), 6);
        assert_eq!(local_order(5, 1), 5);
        assert_eq!(local_order(0, 3), 4);
    }

    #[test]
    fn covered_genus_examples() {
        let c = CoveringType::new(
            2,
            0,
            fibers(&[(3, &[1, 1]), (1, &[1, 1])])
                .into_iter()
                .chain((0..8).map(|_| FiberProfile::new(-1, vec![2])))
                .collect(),
        )
        .unwrap();
        assert_eq!(covered_genus(&c), Ok(3));

        let c = CoveringType::new(2, 0, vec![FiberProfile::new(-1, vec![2]); 4]).unwrap();
        assert_eq!(covered_genus(&c), Ok(1));

        assert_eq!(
            CoveringType::new(1, 0, vec![FiberProfile::new(-1, vec![1]); 4]),
            Err(CoveringError::DegreeTooSmall(1))
        );
        let odd = CoveringType::new(
            2,
            0,
            fibers(&[(-1, &[2]), (-1, &[2]), (-1, &[2]), (-1, &[1, 1])]),
        )
        .unwrap();
        assert_eq!(
            covered_genus(&odd),
            Err(CoveringError::NonIntegralGenus(-1))
        );
        let neg = CoveringType::new(2, 0, vec![FiberProfile::trivial(-1, 2); 4]).unwrap();
        assert_eq!(covered_genus(&neg), Err(CoveringError::NegativeGenus(-4)));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            CoveringType::new(
                2,
                0,
                fibers(&[(-1, &[2]), (-1, &[2]), (-1, &[2]), (-1, &[2]), (0, &[1, 1])])
            ),
            Err(CoveringError::UnramifiedMarkedPoint)
        );
        assert!(CoveringType::allowing_unramified_marked(
            2,
            0,
            fibers(&[(-1, &[2]), (-1, &[2]), (-1, &[2]), (-1, &[2]), (0, &[1, 1])])
        )
        .is_ok());
        assert!(matches!(
            CoveringType::new(
                3,
                0,
                fibers(&[(-1, &[2]), (-1, &[2]), (-1, &[2]), (-1, &[2])])
            ),
            Err(CoveringError::PartitionSum { .. })
        ));
        assert!(matches!(
            CoveringType::new(2, 1, vec![FiberProfile::new(-1, vec![2]); 4]),
            Err(CoveringError::BaseGenusMismatch { .. })
        ));
    }

    #[test]
    fn pullback_examples() {
        // F4 at g = 3, k = 0
        let base = pat("3,1,-1^8");
        let mut f = fibers(&[(3, &[1, 1]), (1, &[1, 1])]);
        f.extend(vec![FiberProfile::new(-1, vec![2]); 8]);
        let c = CoveringType::new(2, 0, f).unwrap();
        assert_eq!(target_of(&c, &base), pat("3,3,1,1"));
        assert_eq!(pullback_is_square(&c, &base), Ok(SquareStatus::No));

        // F2 at g = 3, k = 0
        let base = pat("2,0,-1^6");
        let mut f = fibers(&[(2, &[2]), (0, &[2])]);
        f.extend(vec![FiberProfile::new(-1, vec![2]); 6]);
        let c = CoveringType::new(2, 0, f).unwrap();
        assert_eq!(target_of(&c, &base), pat("6,2"));
        assert_eq!(pullback_is_square(&c, &base), Ok(SquareStatus::No));

        // misaligned base
        assert!(matches!(
            pullback_pattern(&c, &pat("2,2")),
            Err(CoveringError::FiberMismatch { .. })
        ));
    }

    fn target_of(c: &CoveringType, base: &SingularityPattern) -> SingularityPattern {
        pullback_pattern(c, base).unwrap()
    }

    #[test]
    fn canonical_cover_is_square() {
        // branch exactly over the odd points of (3,1,-1^8)
        let base = pat("3,1,-1^8");
        let mut f = fibers(&[(3, &[2]), (1, &[2])]);
        f.extend(vec![FiberProfile::new(-1, vec![2]); 8]);
        let c = CoveringType::new(2, 0, f).unwrap();
        assert_eq!(target_of(&c, &base), pat("8,4"));
        assert_eq!(pullback_is_square(&c, &base), Ok(SquareStatus::Yes));
    }

    #[test]
    fn square_status_unknown_beyond_double_covers_of_sphere() {
        // degree 3 over the torus Q(2,-1,-1), unramified: pullback (2^3,-1^6)
        // has odd entries; ramify fully over the poles to get even orders.
        let c =
            CoveringType::new(3, 1, fibers(&[(2, &[1, 1, 1]), (-1, &[3]), (-1, &[3])])).unwrap();
        let base = c.base_pattern();
        assert_eq!(target_of(&c, &base), pat("2,2,2,1,1"));
        assert_eq!(pullback_is_square(&c, &base), Ok(SquareStatus::No));

        let c =
            CoveringType::new(3, 1, fibers(&[(2, &[3]), (-1, &[2, 1]), (-1, &[2, 1])])).unwrap();
        let base = c.base_pattern();
        let t = target_of(&c, &base);
        assert_eq!(t, pat("10,-1,-1"));
        assert_eq!(pullback_is_square(&c, &base), Ok(SquareStatus::No));

        let c = CoveringType::new(
            3,
            1,
            fibers(&[(2, &[1, 1, 1]), (-1, &[1, 1, 1]), (-1, &[1, 1, 1])]),
        )
        .unwrap();
        let base = c.base_pattern();
        assert_eq!(pullback_is_square(&c, &base), Ok(SquareStatus::No));

        let c = CoveringType::new(3, 2, fibers(&[(2, &[1, 1, 1]), (2, &[1, 1, 1])])).unwrap();
        let base = c.base_pattern();
        assert_eq!(target_of(&c, &base), pat("2^6"));
        assert_eq!(pullback_is_square(&c, &base), Ok(SquareStatus::No));

        let c = CoveringType::new(4, 2, fibers(&[(2, &[1, 1, 1, 1]), (2, &[1, 1, 1, 1])])).unwrap();
        let base = c.base_pattern();
        assert_eq!(target_of(&c, &base), pat("2^8"));
        assert_eq!(pullback_is_square(&c, &base), Ok(SquareStatus::Unknown));

        // double covers of higher genus bases need the monodromy as well
        let c = CoveringType::new(2, 2, fibers(&[(2, &[1, 1]), (2, &[1, 1])])).unwrap();
        let base = c.base_pattern();
        assert_eq!(pullback_is_square(&c, &base), Ok(SquareStatus::Unknown));
    }

    #[test]
    fn dimension_gap_examples() {
        let base = pat("3,1,-1^8");
        let mut f = fibers(&[(3, &[1, 1]), (1, &[1, 1])]);
        f.extend(vec![FiberProfile::new(-1, vec![2]); 8]);
        let c = CoveringType::new(2, 0, f).unwrap();
        assert_eq!(dimension_gap(&c, &base), Ok(0));

        let base = pat("0,0,-1^4");
        let c = CoveringType::new(
            2,
            0,
            vec![
                FiberProfile::new(0, vec![2]),
                FiberProfile::new(0, vec![2]),
                FiberProfile::new(-1, vec![2]),
                FiberProfile::new(-1, vec![2]),
                FiberProfile::new(-1, vec![2]),
                FiberProfile::new(-1, vec![2]),
            ],
        )
        .unwrap();
        assert_eq!(target_of(&c, &base), pat("2,2"));
        assert_eq!(dimension_gap(&c, &base), Ok(0));

        // unramified double cover of Q(2,2): target Q(2,2,2,2) in genus 3,
        // dimension 8 against 4
        let base = pat("2,2");
        let c = CoveringType::new(2, 2, vec![FiberProfile::trivial(2, 2); 2]).unwrap();
        assert_eq!(covered_genus(&c), Ok(3));
        assert_eq!(dimension_gap(&c, &base), Ok(4));

        // the unramified double cover of the sphere is disconnected
        let base = pat("-1^4");
        let c = CoveringType::new(2, 0, vec![FiberProfile::trivial(-1, 2); 4]).unwrap();
        assert_eq!(
            dimension_gap(&c, &base),
            Err(CoveringError::NegativeGenus(-4))
        );
    }

    #[test]
    fn counts_and_inequality() {
        let c = CoveringType::new(2, 0, {
            let mut f = fibers(&[(3, &[1, 1]), (1, &[1, 1])]);
            f.extend(vec![FiberProfile::new(-1, vec![2]); 8]);
            f
        })
        .unwrap();
        assert_eq!(
            c.counts(),
            PointCounts {
                n: 0,
                m: 0,
                p: 8,
                r: 2
            }
        );
        assert!(weakened_inequality_holds(2, 0, c.counts()));
        assert!(!weakened_inequality_holds(
            2,
            1,
            PointCounts {
                n: 1,
                m: 0,
                p: 0,
                r: 0
            }
        ));
    }
}
