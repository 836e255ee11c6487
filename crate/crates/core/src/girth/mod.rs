//! Girth of chord-index graphs.
//!
//! Rotation by two steps times the symmetry factor is an automorphism, so the
//! truncated traversal trees from the roots `1..=2b` see every cycle. The
//! shortest cycle closed at the lowest halting depth among them is the girth.
//! [`girth_oracle`] recomputes it without any symmetry assumption.

mod family;
mod oracle;
mod traversal;

pub use family::{spot_check, stabilization, FamilyCertificate, SpotCheck};
pub use oracle::girth_oracle;
pub use traversal::{traverse, EdgeKind, RepeatEvent, TraversalTree, TreeNode};

pub(crate) use traversal::{grow, FiniteCover, RawTree};

use serde::Serialize;

use crate::error::{HbgError, Result};
use crate::graph::{build_graph, HbGraph};
use crate::spec::{ChordIndexSpec, ChordMap};

/// Orders up to this size are re-checked against the oracle in debug builds.
const DEBUG_ORACLE_LIMIT: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GirthResult {
    pub girth: usize,
    /// Closed label sequence, first = last, `girth + 1` entries.
    pub witness: Vec<usize>,
    pub root_used: usize,
}

/// Exact girth through the `2b` symmetry-reduced traversal trees.
///
/// Ties go to the lowest root. The witness cycle is re-verified edge by edge
/// before returning.
pub fn girth_symmetric(spec: &ChordIndexSpec) -> Result<GirthResult> {
    let result = girth_symmetric_unchecked(spec)?;
    if cfg!(debug_assertions) && spec.order() <= DEBUG_ORACLE_LIMIT {
        let oracle = girth_oracle(&build_graph(spec)?)?;
        debug_assert_eq!(result.girth, oracle, "girth engine disagrees with oracle on {spec}");
    }
    Ok(result)
}

/// [`girth_symmetric`] without the debug-build oracle cross-check.
pub(crate) fn girth_symmetric_unchecked(spec: &ChordIndexSpec) -> Result<GirthResult> {
    let map = ChordMap::new(spec)?;
    let cover = FiniteCover {
        map: &map,
        order: spec.order(),
    };
    let mut best: Option<(usize, RawTree, usize)> = None;
    for root in 0..2 * spec.sym_factor() {
        let limit = best.as_ref().map_or(spec.m() + 1, |(len, _, _)| len / 2);
        let tree = grow(&cover, root as i64, limit);
        if let Some(len) = tree.cycle_len() {
            if best.as_ref().map_or(true, |(b, _, _)| len < *b) {
                best = Some((len, tree, root));
            }
        }
    }
    let (girth, tree, root) = best.ok_or_else(|| {
        HbgError::MalformedGraph(format!("no repeat found in traversal trees of {spec}"))
    })?;
    let walk = tree.closed_walk().expect("tree with a repeat has a walk");
    let witness: Vec<usize> = walk.iter().map(|&v| v as usize + 1).collect();
    let graph = HbGraph::from_map(&map, spec.order());
    verify_cycle(&graph, &witness)?;
    if witness.len() - 1 != girth {
        return Err(HbgError::VerificationFailed(format!(
            "witness of length {} for girth {girth} in {spec}",
            witness.len() - 1
        )));
    }
    Ok(GirthResult {
        girth,
        witness,
        root_used: root + 1,
    })
}

/// Checks that `cycle` is closed, simple and follows edges of `graph`.
pub fn verify_cycle(graph: &HbGraph, cycle: &[usize]) -> Result<()> {
    let fail = |why: String| Err(HbgError::VerificationFailed(why));
    if cycle.len() < 4 || cycle.first() != cycle.last() {
        return fail(format!("{cycle:?} is not a closed walk of length >= 3"));
    }
    let body = &cycle[..cycle.len() - 1];
    let mut seen = vec![false; graph.order() + 1];
    for &x in body {
        if x == 0 || x > graph.order() || std::mem::replace(&mut seen[x], true) {
            return fail(format!("{cycle:?} repeats or leaves the label range at {x}"));
        }
    }
    for pair in cycle.windows(2) {
        if !graph.is_adjacent(pair[0], pair[1]) {
            return fail(format!("{} and {} are not adjacent", pair[0], pair[1]));
        }
    }
    Ok(())
}
