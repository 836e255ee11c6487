//! Catalog versus reference-list comparison.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use super::bounds::{reference_bounds, CageBounds};
use super::reference::{RefClass, ReferenceList};
use super::store::{representatives, CatalogRecord};
use crate::search::Verdict;

/// Counts claimed for the HBG, vertex-transitive and symmetric lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClaimedCounts {
    pub until: usize,
    pub hbg: usize,
    pub vertex_transitive: usize,
    pub symmetric: usize,
}

const CLAIMED: &[(usize, ClaimedCounts)] = &[
    (6, claimed(50, 19, 19, 10)),
    (8, claimed(90, 29, 21, 6)),
    (10, claimed(160, 29, 15, 7)),
    (12, claimed(400, 84, 26, 16)),
    (14, claimed(1000, 164, 35, 11)),
];

const fn claimed(until: usize, hbg: usize, vertex_transitive: usize, symmetric: usize) -> ClaimedCounts {
    ClaimedCounts {
        until,
        hbg,
        vertex_transitive,
        symmetric,
    }
}

pub fn claimed_counts(g: usize) -> Option<ClaimedCounts> {
    CLAIMED.iter().find(|c| c.0 == g).map(|c| c.1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListComparison {
    pub name: String,
    pub class: RefClass,
    pub count: usize,
    pub both: Vec<usize>,
    pub catalog_only: Vec<usize>,
    pub reference_only: Vec<usize>,
    /// Every reference order with whether the catalog has a graph there.
    pub coverage: Vec<(usize, bool)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub girth: usize,
    pub until: usize,
    /// Orders with an `Exists` record.
    pub catalog_orders: Vec<usize>,
    pub nonexistent_orders: Vec<usize>,
    pub inconclusive_orders: Vec<usize>,
    /// Representative `b` per catalog order.
    pub representative_b: Vec<(usize, usize)>,
    pub lists: Vec<ListComparison>,
    pub claimed: Option<ClaimedCounts>,
    pub bounds: Option<CageBounds>,
    pub notes: Vec<String>,
}

pub fn compare_report(
    catalog: &[CatalogRecord],
    references: &[ReferenceList],
    g: usize,
    until: usize,
) -> ComparisonReport {
    let reps = representatives(catalog, g);
    let in_range = reps.iter().filter(|(&o, _)| o <= until);
    let with = |v: Verdict| -> Vec<usize> {
        in_range.clone().filter(|(_, r)| r.verdict == v).map(|(&o, _)| o).collect()
    };
    let catalog_orders = with(Verdict::Exists);
    let cat: BTreeSet<usize> = catalog_orders.iter().copied().collect();

    let lists = references
        .iter()
        .map(|l| {
            let refs: BTreeSet<usize> = l.orders.iter().copied().filter(|&o| o <= until).collect();
            ListComparison {
                name: l.name.clone(),
                class: l.class.clone(),
                count: refs.len(),
                both: cat.intersection(&refs).copied().collect(),
                catalog_only: cat.difference(&refs).copied().collect(),
                reference_only: refs.difference(&cat).copied().collect(),
                coverage: refs.iter().map(|&o| (o, cat.contains(&o))).collect(),
            }
        })
        .collect();

    let bounds = reference_bounds(g).ok();
    let mut notes = Vec::new();
    if let (Some(b), Some(&least)) = (bounds, cat.first()) {
        if least < b.lower {
            notes.push(format!(
                "smallest catalog order {least} is below the lower bound {} for n(3,{g})",
                b.lower
            ));
        } else if b.is_exact() && least == b.lower {
            notes.push(format!("order {least} is the (3,{g}) cage order ({})", b.attribution));
        } else if least <= b.upper {
            notes.push(format!(
                "order {least} is within {}..={} for n(3,{g}) ({})",
                b.lower, b.upper, b.attribution
            ));
        }
    }
    let claimed = claimed_counts(g).filter(|c| c.until == until);
    if let Some(c) = claimed {
        if c.hbg != cat.len() {
            notes.push(format!("claimed HBG count {} differs from catalog count {}", c.hbg, cat.len()));
        }
    }

    ComparisonReport {
        girth: g,
        until,
        representative_b: catalog_orders.iter().map(|o| (*o, reps[o].b)).collect(),
        catalog_orders,
        nonexistent_orders: with(Verdict::NonExistent),
        inconclusive_orders: with(Verdict::Inconclusive),
        lists,
        claimed,
        bounds,
        notes,
    }
}

fn join(v: &[usize]) -> String {
    if v.is_empty() {
        return "-".to_string();
    }
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

impl ComparisonReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "(3,{}) until {}", self.girth, self.until);
        let _ = writeln!(s, "HBG catalog: {} orders", self.catalog_orders.len());
        let _ = writeln!(s, "  exists:       {}", join(&self.catalog_orders));
        let _ = writeln!(s, "  nonexistent:  {}", join(&self.nonexistent_orders));
        let _ = writeln!(s, "  inconclusive: {}", join(&self.inconclusive_orders));
        for l in &self.lists {
            let _ = writeln!(s, "{} ({}): {} orders", l.name, l.class, l.count);
            let _ = writeln!(s, "  on both:        {}", join(&l.both));
            let _ = writeln!(s, "  catalog only:   {}", join(&l.catalog_only));
            let _ = writeln!(s, "  reference only: {}", join(&l.reference_only));
        }
        if let Some(c) = self.claimed {
            let _ = writeln!(
                s,
                "claimed counts: HBG {}, vertex-transitive {}, symmetric {}",
                c.hbg, c.vertex_transitive, c.symmetric
            );
        }
        if let Some(b) = self.bounds {
            if b.is_exact() {
                let _ = writeln!(s, "n(3,{}) = {} ({})", b.girth, b.lower, b.attribution);
            } else {
                let _ = writeln!(s, "{} <= n(3,{}) <= {} ({})", b.lower, b.girth, b.upper, b.attribution);
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
