//! Explicit trivalent realization of a chord-index spec.

use crate::error::{HbgError, Result};
use crate::spec::{ChordIndexSpec, ChordMap};

/// Hamiltonian bipartite trivalent graph on labels `1..=order`.
///
/// Hamiltonian edges `x - next(x)` are implicit; only the chord matching is
/// stored (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HbGraph {
    chord_of: Vec<u32>,
}

impl HbGraph {
    /// Builds a graph from an explicit 1-based chord matching
    /// (`chords[x - 1]` is the chord partner of label `x`).
    pub fn from_chords(chords: &[usize]) -> Result<Self> {
        let chord_of = chords
            .iter()
            .map(|&c| {
                if c == 0 {
                    u32::MAX
                } else {
                    (c - 1) as u32
                }
            })
            .collect();
        let g = Self { chord_of };
        g.check_invariants()?;
        Ok(g)
    }

    pub(crate) fn from_map(map: &ChordMap, order: usize) -> Self {
        let chord_of = (0..order).map(|v| map.partner(v) as u32).collect();
        Self { chord_of }
    }

    pub fn order(&self) -> usize {
        self.chord_of.len()
    }

    /// Chord partner of a 1-based label.
    pub fn chord(&self, label: usize) -> usize {
        self.chord_of[label - 1] as usize + 1
    }

    /// Neighbours of a 1-based label in ascending order.
    pub fn neighbors(&self, label: usize) -> [usize; 3] {
        let mut n = self.neighbors0(label - 1).map(|v| v + 1);
        n.sort_unstable();
        n
    }

    /// `[prev, next, chord]` of a 0-based vertex.
    pub(crate) fn neighbors0(&self, v: usize) -> [usize; 3] {
        let n = self.order();
        [(v + n - 1) % n, (v + 1) % n, self.chord_of[v] as usize]
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.order() && self.neighbors0(a - 1).contains(&(b.wrapping_sub(1)))
    }

    /// All edges as `(low, high)` 1-based pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.order() * 3 / 2);
        for x in 1..=self.order() {
            for y in self.neighbors(x) {
                if x < y {
                    edges.push((x, y));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    /// Checks 3-regularity, simplicity, bipartiteness along label parity
    /// and the chord involution.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.order();
        if n < 4 || n % 2 != 0 {
            return Err(HbgError::MalformedGraph(format!("order {n} is not an even number >= 4")));
        }
        for v in 0..n {
            let c = self.chord_of[v] as usize;
            if c >= n {
                return Err(HbgError::MalformedGraph(format!("label {} has no chord", v + 1)));
            }
            if self.chord_of[c] as usize != v {
                return Err(HbgError::MalformedGraph(format!(
                    "chord of {} is {} but chord of {} is {}",
                    v + 1,
                    c + 1,
                    c + 1,
                    self.chord_of[c] + 1
                )));
            }
            if c % 2 == v % 2 {
                return Err(HbgError::MalformedGraph(format!(
                    "chord {}-{} joins labels of equal parity",
                    v + 1,
                    c + 1
                )));
            }
            if c == (v + 1) % n || c == (v + n - 1) % n {
                return Err(HbgError::MalformedGraph(format!(
                    "chord {}-{} doubles a Hamiltonian edge",
                    v + 1,
                    c + 1
                )));
            }
        }
        Ok(())
    }
}

/// Materializes a valid spec.
pub fn build_graph(spec: &ChordIndexSpec) -> Result<HbGraph> {
    let map = ChordMap::new(spec)?;
    Ok(HbGraph::from_map(&map, spec.order()))
}
