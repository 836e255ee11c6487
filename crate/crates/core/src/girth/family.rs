//! Girth-stable infinite families.
//!
//! Every order `2m` with `2b | 2m` covers one infinite periodic graph on the
//! integers (chords never wrap). Its girth `g` is an upper bound for every
//! finite member: a shortest cycle upstairs projects to a closed
//! non-backtracking walk. Conversely a finite cycle is either the image of a
//! cycle upstairs (length >= g) or winds around the order at least once.
//! A winding cycle of length `L` carries at most `L / 2` chords, so its net
//! displacement is at most `L (D + 1) / 2` with `D` the largest chord, and
//! it must reach `2m`. From `2m >= g (D + 1) / 2` on the girth is exactly
//! `g`; below that bound the orders are checked one by one, which yields the
//! least threshold.

use serde::Serialize;

use super::traversal::{grow, UnreducedCover};
use super::girth_symmetric_unchecked;
use crate::error::{HbgError, Result};
use crate::spec::{residues_biject, ChordIndexSpec, ChordMap, MIN_CHORD};

/// Deepest unreduced traversal attempted (cycle lengths up to twice this).
const MAX_FAMILY_DEPTH: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCertificate {
    pub sym_factor: usize,
    pub chords: Vec<usize>,
    /// Least order `2bk` from which every order `2b(k + i)` has girth
    /// `stable_girth`.
    pub threshold_order: usize,
    pub stable_girth: usize,
    /// Largest spread of label displacements over the unreduced trees.
    pub span_bound: usize,
    /// Order from which stability holds by the winding bound alone.
    pub analytic_order: usize,
    /// Number of orders in `[threshold_order, analytic_order)` computed
    /// explicitly.
    pub checked_orders: usize,
}

impl FamilyCertificate {
    pub fn step(&self) -> usize {
        2 * self.sym_factor
    }

    pub fn spec_at(&self, order: usize) -> ChordIndexSpec {
        ChordIndexSpec::new(order, self.sym_factor, self.chords.clone())
    }

    /// Default spot-check orders: threshold, one step above, twenty above,
    /// then further multiples of twenty steps up to `count` orders.
    pub fn spot_orders(&self, count: usize) -> Vec<usize> {
        [0usize, 1, 20]
            .into_iter()
            .chain((2..).map(|k| 20 * k))
            .take(count)
            .map(|k| self.threshold_order + k * self.step())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpotCheck {
    pub order: usize,
    pub girth: usize,
    pub agrees: bool,
}

/// Certifies the girth of the family generated by `chords` with symmetry
/// factor `b` beyond an explicit threshold order.
///
/// `girth_hint`, when given, caps the unreduced traversal at depth
/// `hint / 2`.
pub fn stabilization(
    chords: &[usize],
    b: usize,
    girth_hint: Option<usize>,
) -> Result<FamilyCertificate> {
    if b == 0 || chords.len() != b {
        return Err(HbgError::DegenerateChords(format!(
            "symmetry factor {b} needs exactly {b} chords, got {}",
            chords.len()
        )));
    }
    if let Some(&d) = chords.iter().find(|&&d| d < MIN_CHORD || d % 2 == 0) {
        return Err(HbgError::DegenerateChords(format!(
            "chord {d} is not an odd integer >= {MIN_CHORD}"
        )));
    }
    if !residues_biject(chords) {
        return Err(HbgError::DegenerateChords(format!(
            "chords {chords:?} do not induce a perfect matching at any order"
        )));
    }

    let map = ChordMap::unchecked(0, chords);
    let cover = UnreducedCover { map: &map };
    let max_depth = girth_hint.map_or(MAX_FAMILY_DEPTH, |g| g / 2);
    let mut stable: Option<usize> = None;
    let (mut lo, mut hi) = (0i64, 0i64);
    for root in 0..2 * b {
        let tree = grow(&cover, root as i64, max_depth);
        let len = tree.cycle_len().ok_or_else(|| {
            HbgError::VerificationFailed(format!(
                "no cycle within depth {max_depth} from root {}",
                root + 1
            ))
        })?;
        stable = Some(stable.map_or(len, |s| s.min(len)));
        let (l, h) = tree.span();
        lo = lo.min(l);
        hi = hi.max(h);
    }
    let stable_girth = stable.expect("at least one root");
    let span_bound = (hi - lo) as usize;

    let step = 2 * b;
    let round_up = |x: usize| x.div_ceil(step) * step;
    let max_chord = *chords.iter().max().expect("non-empty");
    let min_order = round_up((max_chord + MIN_CHORD).max(4));
    let analytic_order = round_up(min_order.max((stable_girth * (max_chord + 1)).div_ceil(2)));

    let mut threshold_order = analytic_order;
    let mut checked_orders = 0;
    while threshold_order > min_order {
        let order = threshold_order - step;
        let spec = ChordIndexSpec::new(order, b, chords.to_vec());
        checked_orders += 1;
        if girth_symmetric_unchecked(&spec)?.girth != stable_girth {
            break;
        }
        threshold_order = order;
    }

    Ok(FamilyCertificate {
        sym_factor: b,
        chords: chords.to_vec(),
        threshold_order,
        stable_girth,
        span_bound,
        analytic_order,
        checked_orders,
    })
}

/// Recomputes the girth at each order and compares with the certificate.
pub fn spot_check(cert: &FamilyCertificate, orders: &[usize]) -> Result<Vec<SpotCheck>> {
    orders
        .iter()
        .map(|&order| {
            let girth = girth_symmetric_unchecked(&cert.spec_at(order))?.girth;
            Ok(SpotCheck {
                order,
                girth,
                agrees: girth == cert.stable_girth,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::girth::girth_oracle;
    use crate::graph::build_graph;

    #[test]
    fn chord_five_stabilizes_at_fourteen() {
        let cert = stabilization(&[5], 1, None).unwrap();
        assert_eq!(cert.stable_girth, 6);
        assert_eq!(cert.threshold_order, 14);
        assert_eq!(cert.threshold_order % cert.step(), 0);
        assert!(cert.threshold_order >= 5 + 3);
    }

    #[test]
    fn chord_three_is_always_girth_four() {
        let cert = stabilization(&[3], 1, None).unwrap();
        assert_eq!(cert.stable_girth, 4);
        assert_eq!(cert.threshold_order, 6);
        for order in (8..=40).step_by(2) {
            let g = build_graph(&cert.spec_at(order)).unwrap();
            assert_eq!(girth_oracle(&g).unwrap(), 4);
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(stabilization(&[3, 5], 2, None), Err(HbgError::DegenerateChords(_))));
        assert!(matches!(stabilization(&[4], 1, None), Err(HbgError::DegenerateChords(_))));
        assert!(matches!(stabilization(&[1], 1, None), Err(HbgError::DegenerateChords(_))));
        assert!(matches!(stabilization(&[5], 2, None), Err(HbgError::DegenerateChords(_))));
    }

    #[test]
    fn hint_too_small_is_reported() {
        assert!(stabilization(&[5], 1, Some(4)).is_err());
        assert_eq!(stabilization(&[5], 1, Some(6)).unwrap().stable_girth, 6);
    }

    #[test]
    fn spot_schedule() {
        let cert = stabilization(&[5], 1, None).unwrap();
        assert_eq!(cert.spot_orders(3), vec![14, 16, 54]);
        assert_eq!(cert.spot_orders(5), vec![14, 16, 54, 94, 134]);
        assert!(spot_check(&cert, &cert.spot_orders(5)).unwrap().iter().all(|s| s.agrees));
    }
}
