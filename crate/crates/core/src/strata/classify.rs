use serde::{Deserialize, Serialize};

use crate::pattern::SingularityPattern;
use crate::strata::{hyperelliptic_family, is_empty, strip_marked, FamilyMatch, Stratum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentStatus {
    Empty,
    Connected,
    TwoComponents,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentLabel {
    Unique,
    Hyperelliptic,
    Nonhyperelliptic,
    ExceptionalComponent1,
    ExceptionalComponent2,
}

/// Which known result the verdict rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictSource {
    /// One of the four empty strata of Masur and Smillie.
    MasurSmillie,
    /// Genus zero strata are connected (Kontsevich).
    GenusZero,
    GenusOne,
    /// Connected stratum equal to its hyperelliptic component.
    HyperellipticCoincides,
    /// The two genus-2 hyperelliptic strata that split, from the zero
    /// breaking constructions at `g = 2`.
    GenusTwoSplitting,
    HyperellipticSplitting,
    LowGenusException,
    GenericConnected,
}

/// Strata in genus 1 and 2 that coincide with their hyperelliptic component.
const COINCIDING: [&[i64]; 5] = [
    &[2, -1, -1],
    &[1, 1, -1, -1],
    &[2, 2],
    &[2, 1, 1],
    &[1, 1, 1, 1],
];

/// The four non-hyperelliptic strata with two components (genus 3 and 4).
const EXCEPTIONAL: [&[i64]; 4] = [&[9, -1], &[6, 3, -1], &[3, 3, 3, -1], &[12]];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub stratum: Stratum,
    pub status: ComponentStatus,
    pub components: Vec<ComponentLabel>,
    pub family: Option<FamilyMatch>,
    pub source: VerdictSource,
}

impl ComponentReport {
    pub fn hyperelliptic_count(&self) -> usize {
        self.components
            .iter()
            .filter(|&&c| c == ComponentLabel::Hyperelliptic)
            .count()
    }
}

/// Connected components of the stratum, after forgetting marked points.
pub fn classify(pattern: &SingularityPattern) -> ComponentReport {
    use ComponentLabel::*;
    use ComponentStatus::*;

    let stratum = Stratum::new(strip_marked(pattern));
    let family = hyperelliptic_family(&stratum.pattern);
    let orders = stratum.pattern.orders();
    let report = |status, components: Vec<ComponentLabel>, source| ComponentReport {
        stratum: stratum.clone(),
        status,
        components,
        family,
        source,
    };

    if is_empty(&stratum.pattern) {
        return report(Empty, vec![], VerdictSource::MasurSmillie);
    }
    if stratum.genus == 0 {
        return report(Connected, vec![Unique], VerdictSource::GenusZero);
    }
    if let Some(f) = family {
        if COINCIDING.contains(&orders) {
            return report(
                Connected,
                vec![Hyperelliptic],
                VerdictSource::HyperellipticCoincides,
            );
        }
        if stratum.genus >= 2 {
            let source = if f.g == 2 {
                VerdictSource::GenusTwoSplitting
            } else {
                VerdictSource::HyperellipticSplitting
            };
            return report(TwoComponents, vec![Hyperelliptic, Nonhyperelliptic], source);
        }
    }
    if stratum.genus == 1 {
        return report(Connected, vec![Unique], VerdictSource::GenusOne);
    }
    if EXCEPTIONAL.contains(&orders) {
        return report(
            TwoComponents,
            vec![ExceptionalComponent1, ExceptionalComponent2],
            VerdictSource::LowGenusException,
        );
    }
    report(Connected, vec![Unique], VerdictSource::GenericConnected)
}
