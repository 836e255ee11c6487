use std::collections::VecDeque;

use crate::error::{HbgError, Result};
use crate::graph::HbGraph;

/// Exact girth by breadth-first search from every vertex.
///
/// Each non-tree edge `(u, w)` met during the search from `s` closes a walk
/// of length `dist(u) + dist(w) + 1` through `s`; the minimum over all
/// sources is the girth. Uses no symmetry of the graph.
pub fn girth_oracle(graph: &HbGraph) -> Result<usize> {
    graph.check_invariants()?;
    let n = graph.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            // nothing shorter can appear beyond this radius
            if 2 * dist[u] >= best {
                break;
            }
            for w in graph.neighbors0(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        return Err(HbgError::MalformedGraph("graph is acyclic".into()));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::spec::ChordIndexSpec;

    fn g(order: usize, chords: &[usize]) -> HbGraph {
        build_graph(&ChordIndexSpec::new(order, chords.len(), chords.to_vec())).unwrap()
    }

    /// Shortest cycle by enumerating simple paths, for tiny graphs only.
    fn brute_force_girth(graph: &HbGraph) -> usize {
        fn extend(graph: &HbGraph, path: &mut Vec<usize>, best: &mut usize) {
            let last = *path.last().unwrap();
            for w in graph.neighbors0(last) {
                if w == path[0] && path.len() >= 3 {
                    *best = (*best).min(path.len());
                } else if !path.contains(&w) && w > path[0] && path.len() < *best {
                    path.push(w);
                    extend(graph, path, best);
                    path.pop();
                }
            }
        }
        let mut best = usize::MAX;
        for s in 0..graph.order() {
            extend(graph, &mut vec![s], &mut best);
        }
        best
    }

    #[test]
    fn known_girths() {
        assert_eq!(girth_oracle(&g(14, &[5])).unwrap(), 6);
        assert_eq!(girth_oracle(&g(8, &[3])).unwrap(), 4);
        assert_eq!(girth_oracle(&g(12, &[5])).unwrap(), 4);
    }

    #[test]
    fn agrees_with_path_enumeration() {
        assert_eq!(brute_force_girth(&g(8, &[3])), 4);
        for (order, chords) in [
            (14, vec![5]),
            (12, vec![5]),
            (16, vec![5]),
            (18, vec![5, 7, 9]),
            (20, vec![5, 9]),
            (30, vec![3, 5, 7]),
            (24, vec![3, 3]),
        ] {
            let graph = g(order, &chords);
            assert_eq!(girth_oracle(&graph).unwrap(), brute_force_girth(&graph), "{order} {chords:?}");
        }
    }
}
