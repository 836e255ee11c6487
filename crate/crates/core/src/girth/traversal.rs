//! Non-backtracking breadth-first traversal trees.
//!
//! A tree grows from a root by giving every node its three neighbours minus
//! the one it was reached from, and stops at the first depth where some
//! label occurs twice in the tree. The two occurrences close a cycle.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{HbgError, Result};
use crate::spec::{ChordIndexSpec, ChordMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Prev,
    Next,
    Chord,
}

/// Neighbourhood oracle for a traversal. Labels are 0-based integers;
/// finite graphs reduce them mod the order, the periodic cover does not.
pub(crate) trait Cover {
    /// Neighbours in the order prev, next, chord.
    fn step(&self, v: i64) -> [(i64, EdgeKind); 3];
}

pub(crate) struct FiniteCover<'a> {
    pub(crate) map: &'a ChordMap,
    pub(crate) order: usize,
}

impl Cover for FiniteCover<'_> {
    fn step(&self, v: i64) -> [(i64, EdgeKind); 3] {
        let n = self.order as i64;
        [
            ((v - 1).rem_euclid(n), EdgeKind::Prev),
            ((v + 1).rem_euclid(n), EdgeKind::Next),
            (self.map.partner(v as usize) as i64, EdgeKind::Chord),
        ]
    }
}

/// The infinite periodic graph on all integers that every finite order
/// covers: `x -> x ± 1` plus the periodic chords, never wrapped.
pub(crate) struct UnreducedCover<'a> {
    pub(crate) map: &'a ChordMap,
}

impl Cover for UnreducedCover<'_> {
    fn step(&self, v: i64) -> [(i64, EdgeKind); 3] {
        [
            (v - 1, EdgeKind::Prev),
            (v + 1, EdgeKind::Next),
            (self.map.partner_unreduced(v), EdgeKind::Chord),
        ]
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct RawNode {
    pub(crate) v: i64,
    /// Index into the previous layer; unused at depth 0.
    pub(crate) parent: u32,
    pub(crate) via: Option<EdgeKind>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Position {
    pub(crate) depth: usize,
    pub(crate) index: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct RawTree {
    pub(crate) layers: Vec<Vec<RawNode>>,
    /// Repeated label with its first and second occurrence.
    pub(crate) repeat: Option<(i64, Position, Position)>,
}

impl RawTree {
    /// Cycle length `s + t` of the repeat event.
    pub(crate) fn cycle_len(&self) -> Option<usize> {
        self.repeat.map(|(_, a, b)| a.depth + b.depth)
    }

    fn node(&self, p: Position) -> &RawNode {
        &self.layers[p.depth][p.index]
    }

    fn parent_of(&self, p: Position) -> Position {
        Position {
            depth: p.depth - 1,
            index: self.node(p).parent as usize,
        }
    }

    /// Closed walk through the repeat, with any common prefix of the two
    /// root paths trimmed: `a, .., lca, .., a`.
    pub(crate) fn closed_walk(&self) -> Option<Vec<i64>> {
        let (_, first, second) = self.repeat?;
        let mut up = vec![self.node(second).v];
        let mut down = vec![self.node(first).v];
        let (mut x, mut y) = (second, first);
        while x.depth > y.depth {
            x = self.parent_of(x);
            up.push(self.node(x).v);
        }
        while y.depth > x.depth {
            y = self.parent_of(y);
            down.push(self.node(y).v);
        }
        while x != y {
            x = self.parent_of(x);
            y = self.parent_of(y);
            up.push(self.node(x).v);
            down.push(self.node(y).v);
        }
        // both end at the common ancestor
        down.pop();
        up.extend(down.into_iter().rev());
        Some(up)
    }

    /// Largest minus smallest label displacement from the root.
    pub(crate) fn span(&self) -> (i64, i64) {
        let root = self.layers[0][0].v;
        self.layers
            .iter()
            .flatten()
            .fold((0, 0), |(lo, hi), n| (lo.min(n.v - root), hi.max(n.v - root)))
    }
}

/// Grows the tree from `root` until the first repeated label. Among several
/// repeated labels in the halting layer the highest label wins; its first
/// occurrence is the earliest in breadth-first order.
pub(crate) fn grow<C: Cover>(cover: &C, root: i64, max_depth: usize) -> RawTree {
    let mut layers = vec![vec![RawNode {
        v: root,
        parent: 0,
        via: None,
    }]];
    let mut seen: HashMap<i64, Position> = HashMap::new();
    seen.insert(root, Position { depth: 0, index: 0 });

    for depth in 1..=max_depth {
        let prev = &layers[depth - 1];
        let mut layer = Vec::with_capacity(prev.len() * 2 + 1);
        for (pi, p) in prev.iter().enumerate() {
            let back = if depth == 1 {
                None
            } else {
                Some(layers[depth - 2][p.parent as usize].v)
            };
            for (w, kind) in cover.step(p.v) {
                if Some(w) == back {
                    continue;
                }
                layer.push(RawNode {
                    v: w,
                    parent: pi as u32,
                    via: Some(kind),
                });
            }
        }

        let mut best: Option<(i64, Position, Position)> = None;
        for (index, node) in layer.iter().enumerate() {
            let here = Position { depth, index };
            match seen.get(&node.v) {
                Some(&first) => {
                    if best.map_or(true, |(a, _, _)| node.v > a) {
                        best = Some((node.v, first, here));
                    }
                }
                None => {
                    seen.insert(node.v, here);
                }
            }
        }
        layers.push(layer);
        if best.is_some() {
            return RawTree {
                layers,
                repeat: best,
            };
        }
    }
    RawTree {
        layers,
        repeat: None,
    }
}

/// Repeated label with its starting and terminating depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RepeatEvent {
    pub label: usize,
    pub first_depth: usize,
    pub second_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub label: usize,
    /// Index of the parent in the previous layer (`None` for the root).
    pub parent: Option<usize>,
    pub via: Option<EdgeKind>,
}

/// Truncated traversal tree with 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraversalTree {
    pub root: usize,
    pub layers: Vec<Vec<TreeNode>>,
    pub repeat_event: Option<RepeatEvent>,
}

impl TraversalTree {
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn cycle_len(&self) -> Option<usize> {
        self.repeat_event.map(|r| r.first_depth + r.second_depth)
    }
}

/// Traversal tree of the graph `spec` from root label `1 <= root <= 2b`.
pub fn traverse(root: usize, spec: &ChordIndexSpec) -> Result<TraversalTree> {
    let map = ChordMap::new(spec)?;
    let max = 2 * spec.sym_factor();
    if root == 0 || root > max {
        return Err(HbgError::RootOutOfRange { root, max });
    }
    let cover = FiniteCover {
        map: &map,
        order: spec.order(),
    };
    let raw = grow(&cover, root as i64 - 1, spec.m() + 1);
    Ok(TraversalTree {
        root,
        layers: raw
            .layers
            .iter()
            .enumerate()
            .map(|(depth, layer)| {
                layer
                    .iter()
                    .map(|n| TreeNode {
                        label: n.v as usize + 1,
                        parent: (depth > 0).then_some(n.parent as usize),
                        via: n.via,
                    })
                    .collect()
            })
            .collect(),
        repeat_event: raw.repeat.map(|(v, a, b)| RepeatEvent {
            label: v as usize + 1,
            first_depth: a.depth,
            second_depth: b.depth,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(order: usize, chords: &[usize]) -> ChordIndexSpec {
        ChordIndexSpec::new(order, chords.len(), chords.to_vec())
    }

    #[test]
    fn order_12_chord_5_stops_at_7() {
        let t = traverse(1, &spec(12, &[5])).unwrap();
        let labels = |d: usize| t.layers[d].iter().map(|n| n.label).collect::<Vec<_>>();
        assert_eq!(labels(1), vec![12, 2, 6]);
        assert_eq!(
            t.repeat_event,
            Some(RepeatEvent {
                label: 7,
                first_depth: 2,
                second_depth: 2
            })
        );
        assert_eq!(t.cycle_len(), Some(4));
    }

    #[test]
    fn order_14_chord_5_stops_at_12() {
        let t = traverse(1, &spec(14, &[5])).unwrap();
        assert_eq!(
            t.repeat_event,
            Some(RepeatEvent {
                label: 12,
                first_depth: 3,
                second_depth: 3
            })
        );
    }

    #[test]
    fn general_order_chord_5_repeats_two_below_order() {
        for order in (14..=60).step_by(2) {
            let t = traverse(1, &spec(order, &[5])).unwrap();
            let r = t.repeat_event.unwrap();
            assert_eq!((r.label, r.first_depth, r.second_depth), (order - 2, 3, 3), "order {order}");
        }
    }

    #[test]
    fn tree_shape_three_then_two() {
        let t = traverse(2, &spec(30, &[3, 5, 7])).unwrap();
        assert_eq!(t.layers[0].len(), 1);
        assert_eq!(t.layers[1].len(), 3);
        for d in 2..t.layers.len() {
            assert_eq!(t.layers[d].len(), 2 * t.layers[d - 1].len());
        }
    }

    #[test]
    fn root_range() {
        assert!(matches!(
            traverse(3, &spec(12, &[5])),
            Err(HbgError::RootOutOfRange { root: 3, max: 2 })
        ));
        assert!(traverse(0, &spec(12, &[5])).is_err());
        assert!(traverse(1, &spec(12, &[4])).is_err());
    }
}
