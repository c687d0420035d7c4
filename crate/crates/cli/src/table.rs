//! Component classification of every stratum up to a given genus.

use std::fmt::Write;

use qdiff::strata::{classify, enumerate_strata, ComponentStatus};
use qdiff::ComponentReport;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct GenusRow {
    pub genus: u32,
    pub strata: Vec<ComponentReport>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub connected: usize,
    pub two_components: usize,
    pub empty: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub max_genus: u32,
    pub max_points: usize,
    pub genera: Vec<GenusRow>,
    pub summary: Summary,
}

/// Classifies all zero-free strata of genus at most `max_genus` with at
/// most `max_points` singularities.
pub fn build(max_genus: u32, max_points: usize) -> Table {
    let mut summary = Summary::default();
    let genera = (0..=max_genus)
        .map(|genus| {
            let strata: Vec<ComponentReport> = enumerate_strata(genus, max_points)
                .iter()
                .map(classify)
                .collect();
            for r in &strata {
                summary.total += 1;
                match r.status {
                    ComponentStatus::Connected => summary.connected += 1,
                    ComponentStatus::TwoComponents => summary.two_components += 1,
                    ComponentStatus::Empty => summary.empty += 1,
                }
            }
            GenusRow { genus, strata }
        })
        .collect();
    Table {
        max_genus,
        max_points,
        genera,
        summary,
    }
}

fn status_name(s: ComponentStatus) -> &'static str {
    match s {
        ComponentStatus::Empty => "empty",
        ComponentStatus::Connected => "connected",
        ComponentStatus::TwoComponents => "two components",
    }
}

/// Markdown rendering: one section per genus, listing only the strata that
/// are empty or disconnected, followed by the summary counts.
pub fn markdown(table: &Table) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# Strata up to genus {} with at most {} singularities\n",
        table.max_genus, table.max_points
    );
    for row in &table.genera {
        let _ = writeln!(out, "## Genus {}\n", row.genus);
        let special: Vec<&ComponentReport> = row
            .strata
            .iter()
            .filter(|r| r.status != ComponentStatus::Connected)
            .collect();
        let _ = writeln!(
            out,
            "{} strata, {} connected.\n",
            row.strata.len(),
            row.strata.len() - special.len()
        );
        if special.is_empty() {
            continue;
        }
        let _ = writeln!(out, "| stratum | status | family |");
        let _ = writeln!(out, "|---|---|---|");
        for r in special {
            let family = r
                .family
                .map(|f| format!("{} (g={}, k={})", f.family_id, f.g, f.k))
                .unwrap_or_else(|| "-".into());
            let _ = writeln!(
                out,
                "| Q{} | {} | {} |",
                r.stratum.pattern,
                status_name(r.status),
                family
            );
        }
        out.push('\n');
    }
    let s = table.summary;
    let _ = writeln!(
        out,
        "Total {}: {} connected, {} with two components, {} empty.",
        s.total, s.connected, s.two_components, s.empty
    );
    out
}
