//! Chord-index specifications and their validation.
//!
//! A spec `(2m, b, d_1..d_b)` describes the graph on labels `1..=2m` whose
//! Hamiltonian cycle is `1 -> 2 -> ... -> 2m -> 1` and whose odd label
//! `2j - 1` carries a chord of displacement `d_{((j - 1) mod b) + 1}`.
//! Public functions speak 1-based labels; everything under the hood is
//! 0-based, where the chord sources are the even internal vertices.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HbgError, Result};

/// Smallest admissible chord index. Displacements 1 and `2m - 1` would
/// duplicate a Hamiltonian edge.
pub const MIN_CHORD: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChordIndexSpec {
    order: usize,
    sym_factor: usize,
    chords: Vec<usize>,
}

impl ChordIndexSpec {
    /// Builds a spec without checking it. Use [`validate_spec`] or
    /// [`ChordIndexSpec::checked`] before materializing it.
    pub fn new(order: usize, sym_factor: usize, chords: Vec<usize>) -> Self {
        Self {
            order,
            sym_factor,
            chords,
        }
    }

    pub fn checked(order: usize, sym_factor: usize, chords: Vec<usize>) -> Result<Self> {
        let spec = Self::new(order, sym_factor, chords);
        spec.ensure_valid()?;
        Ok(spec)
    }

    /// Full-symmetry-factor spec from a complete sequence `l_1..l_m`.
    pub fn from_full(order: usize, chords: Vec<usize>) -> Self {
        Self::new(order, order / 2, chords)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Half the order.
    pub fn m(&self) -> usize {
        self.order / 2
    }

    pub fn sym_factor(&self) -> usize {
        self.sym_factor
    }

    pub fn chords(&self) -> &[usize] {
        &self.chords
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = validate_spec(self);
        if report.is_valid() {
            Ok(())
        } else {
            Err(HbgError::InvalidSpec(report))
        }
    }
}

impl fmt::Display for ChordIndexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order={} b={} chords=", self.order, self.sym_factor)?;
        write_chords(f, &self.chords)
    }
}

pub(crate) fn write_chords(f: &mut impl fmt::Write, chords: &[usize]) -> fmt::Result {
    for (i, d) in chords.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

/// One failed invariant. Indices are 1-based positions into the chord list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "code")]
pub enum Violation {
    OrderNotEven { order: usize },
    OrderTooSmall { order: usize },
    ZeroSymFactor,
    DivisibilityViolation { sym_factor: usize, m: usize },
    ChordCountMismatch { expected: usize, found: usize },
    EvenChordIndex { index: usize, value: usize },
    ChordOutOfRange { index: usize, value: usize, min: usize, max: usize },
    /// Several odd labels chord to the same even label.
    NotAMatching { target: usize, sources: Vec<usize> },
    /// Residue-level collision, reported when the order does not admit a
    /// label-level check (the period does not divide `m`).
    ResidueCollision { residue: usize, indices: Vec<usize> },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::OrderNotEven { .. } => "OrderNotEven",
            Violation::OrderTooSmall { .. } => "OrderTooSmall",
            Violation::ZeroSymFactor => "ZeroSymFactor",
            Violation::DivisibilityViolation { .. } => "DivisibilityViolation",
            Violation::ChordCountMismatch { .. } => "ChordCountMismatch",
            Violation::EvenChordIndex { .. } => "EvenChordIndex",
            Violation::ChordOutOfRange { .. } => "ChordOutOfRange",
            Violation::NotAMatching { .. } => "NotAMatching",
            Violation::ResidueCollision { .. } => "ResidueCollision",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OrderNotEven { order } => write!(f, "OrderNotEven: order {order} is odd"),
            Violation::OrderTooSmall { order } => {
                write!(f, "OrderTooSmall: order {order} is below 4")
            }
            Violation::ZeroSymFactor => write!(f, "ZeroSymFactor: symmetry factor must be positive"),
            Violation::DivisibilityViolation { sym_factor, m } => {
                write!(f, "DivisibilityViolation: {sym_factor} does not divide {m}")
            }
            Violation::ChordCountMismatch { expected, found } => {
                write!(f, "ChordCountMismatch: expected {expected} chords, found {found}")
            }
            Violation::EvenChordIndex { index, value } => {
                write!(f, "EvenChordIndex: d_{index} = {value} is even")
            }
            Violation::ChordOutOfRange {
                index,
                value,
                min,
                max,
            } => write!(
                f,
                "ChordOutOfRange: d_{index} = {value} is outside [{min}, {max}]"
            ),
            Violation::NotAMatching { target, sources } => {
                write!(f, "NotAMatching: labels ")?;
                write_chords(f, sources)?;
                write!(f, " all chord to {target}")
            }
            Violation::ResidueCollision { residue, indices } => {
                write!(f, "ResidueCollision: chords at positions ")?;
                write_chords(f, indices)?;
                write!(f, " land on residue {residue}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.is_valid() {
            "valid"
        } else {
            "invalid"
        }
    }

    pub fn has(&self, code: &str) -> bool {
        self.violations.iter().any(|v| v.code() == code)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        write!(f, "invalid")?;
        for v in &self.violations {
            write!(f, "; {v}")?;
        }
        Ok(())
    }
}

/// Checks every spec invariant and reports all failures.
pub fn validate_spec(spec: &ChordIndexSpec) -> ValidationReport {
    let mut violations = Vec::new();
    let order = spec.order;
    let b = spec.sym_factor;
    let m = order / 2;

    let order_ok = order % 2 == 0 && m >= 2;
    if order % 2 != 0 {
        violations.push(Violation::OrderNotEven { order });
    } else if m < 2 {
        violations.push(Violation::OrderTooSmall { order });
    }
    if b == 0 {
        violations.push(Violation::ZeroSymFactor);
    } else if order_ok && m % b != 0 {
        violations.push(Violation::DivisibilityViolation { sym_factor: b, m });
    }
    if spec.chords.len() != b {
        violations.push(Violation::ChordCountMismatch {
            expected: b,
            found: spec.chords.len(),
        });
    }

    let max = order.saturating_sub(MIN_CHORD);
    let mut all_odd = true;
    for (i, &d) in spec.chords.iter().enumerate() {
        if d % 2 == 0 {
            all_odd = false;
            violations.push(Violation::EvenChordIndex {
                index: i + 1,
                value: d,
            });
        }
        if order_ok && !(MIN_CHORD..=max).contains(&d) {
            violations.push(Violation::ChordOutOfRange {
                index: i + 1,
                value: d,
                min: MIN_CHORD,
                max,
            });
        }
    }

    if b > 0 && all_odd && spec.chords.len() == b {
        if order_ok && m % b == 0 {
            violations.extend(label_collisions(order, &spec.chords));
        } else {
            violations.extend(residue_collisions(&spec.chords));
        }
    }

    ValidationReport { violations }
}

fn label_collisions(order: usize, chords: &[usize]) -> Vec<Violation> {
    let b = chords.len();
    let mut by_target: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in (0..order).step_by(2) {
        let d = chords[(v / 2) % b];
        let target = (v + d) % order;
        by_target.entry(target + 1).or_default().push(v + 1);
    }
    by_target
        .into_iter()
        .filter(|(_, sources)| sources.len() > 1)
        .map(|(target, sources)| Violation::NotAMatching { target, sources })
        .collect()
}

fn residue_collisions(chords: &[usize]) -> Vec<Violation> {
    let b = chords.len();
    let mut by_residue: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &d) in chords.iter().enumerate() {
        by_residue.entry((2 * i + d) % (2 * b)).or_default().push(i + 1);
    }
    by_residue
        .into_iter()
        .filter(|(_, idx)| idx.len() > 1)
        .map(|(residue, indices)| Violation::ResidueCollision { residue, indices })
        .collect()
}

/// True when the b chords send the b chord-bearing residues mod `2b`
/// bijectively onto the other b residues. Independent of the order.
pub fn residues_biject(chords: &[usize]) -> bool {
    let b = chords.len();
    if b == 0 || chords.iter().any(|d| d % 2 == 0) {
        return false;
    }
    let mut seen = vec![false; 2 * b];
    for (i, &d) in chords.iter().enumerate() {
        let r = (2 * i + d) % (2 * b);
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

/// Periodic extension `l_1..l_m` of the chord tuple.
pub fn expand_indices(spec: &ChordIndexSpec) -> Result<Vec<usize>> {
    let report = validate_spec(spec);
    let blocking = report.violations.iter().any(|v| {
        !matches!(
            v,
            Violation::NotAMatching { .. } | Violation::ResidueCollision { .. }
        )
    });
    if blocking {
        return Err(HbgError::InvalidSpec(report));
    }
    let b = spec.sym_factor;
    Ok((0..spec.m()).map(|i| spec.chords[i % b]).collect())
}

/// Chord structure of a valid spec, 0-based, with the inverse map from
/// chord-receiving residues back to the chord position.
#[derive(Debug, Clone)]
pub(crate) struct ChordMap {
    order: usize,
    chords: Vec<usize>,
    /// For an odd residue `r` mod `2b`: index of the chord landing there.
    landing: Vec<usize>,
}

impl ChordMap {
    pub(crate) fn new(spec: &ChordIndexSpec) -> Result<Self> {
        spec.ensure_valid()?;
        Ok(Self::unchecked(spec.order, &spec.chords))
    }

    /// Caller guarantees [`residues_biject`]. `order` may be 0 for the
    /// unreduced (integer) labelling used by family certification.
    pub(crate) fn unchecked(order: usize, chords: &[usize]) -> Self {
        let b = chords.len();
        let mut landing = vec![usize::MAX; 2 * b];
        for (i, &d) in chords.iter().enumerate() {
            landing[(2 * i + d) % (2 * b)] = i;
        }
        Self {
            order,
            chords: chords.to_vec(),
            landing,
        }
    }

    pub(crate) fn period(&self) -> usize {
        2 * self.chords.len()
    }

    /// Chord partner of a 0-based vertex on the cycle of length `order`.
    pub(crate) fn partner(&self, v: usize) -> usize {
        let n = self.order;
        let p = self.period();
        if v % 2 == 0 {
            (v + self.chords[(v / 2) % self.chords.len()]) % n
        } else {
            let d = self.chords[self.landing[v % p]];
            (v + n - d % n) % n
        }
    }

    /// Chord partner of an integer vertex in the infinite periodic cover.
    pub(crate) fn partner_unreduced(&self, v: i64) -> i64 {
        let p = self.period() as i64;
        if v.rem_euclid(2) == 0 {
            let i = (v.div_euclid(2)).rem_euclid(self.chords.len() as i64) as usize;
            v + self.chords[i] as i64
        } else {
            let i = self.landing[v.rem_euclid(p) as usize];
            v - self.chords[i] as i64
        }
    }
}

/// Chord neighbour of the 1-based label `x`.
pub fn chord_target(x: usize, spec: &ChordIndexSpec) -> Result<usize> {
    check_label(x, spec.order)?;
    let map = ChordMap::new(spec)?;
    Ok(map.partner(x - 1) + 1)
}

pub fn prev_label(x: usize, order: usize) -> Result<usize> {
    check_label(x, order)?;
    Ok(if x == 1 { order } else { x - 1 })
}

pub fn next_label(x: usize, order: usize) -> Result<usize> {
    check_label(x, order)?;
    Ok(if x == order { 1 } else { x + 1 })
}

fn check_label(label: usize, order: usize) -> Result<()> {
    if label == 0 || label > order {
        Err(HbgError::LabelOutOfRange { label, order })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(order: usize, b: usize, chords: &[usize]) -> ChordIndexSpec {
        ChordIndexSpec::new(order, b, chords.to_vec())
    }

    #[test]
    fn heawood_spec_is_valid() {
        let r = validate_spec(&spec(14, 1, &[5]));
        assert!(r.is_valid(), "{r}");
        assert_eq!(r.verdict(), "valid");
    }

    #[test]
    fn even_chord_rejected() {
        let r = validate_spec(&spec(14, 1, &[4]));
        assert!(r.has("EvenChordIndex"));
        assert_eq!(r.verdict(), "invalid");
    }

    #[test]
    fn divisibility_violation() {
        let r = validate_spec(&spec(20, 3, &[3, 5, 7]));
        assert!(r.has("DivisibilityViolation"), "{r}");
    }

    #[test]
    fn not_a_matching_names_colliding_labels() {
        let r = validate_spec(&spec(8, 2, &[3, 5]));
        assert!(r.violations.contains(&Violation::NotAMatching {
            target: 8,
            sources: vec![3, 5]
        }));
        assert!(r.violations.contains(&Violation::NotAMatching {
            target: 4,
            sources: vec![1, 7]
        }));
    }

    #[test]
    fn reports_every_violation() {
        // odd order, wrong count, even chord
        let r = validate_spec(&spec(15, 2, &[4]));
        assert!(r.has("OrderNotEven"));
        assert!(r.has("ChordCountMismatch"));
        assert!(r.has("EvenChordIndex"));
        assert_eq!(r.violations.len(), 3);
    }

    #[test]
    fn range_edges() {
        assert!(validate_spec(&spec(12, 1, &[9])).is_valid());
        let r = validate_spec(&spec(12, 1, &[11]));
        assert!(r.has("ChordOutOfRange"));
        // displacement 1 would double the Hamiltonian edge 1-2
        assert!(validate_spec(&spec(12, 1, &[1])).has("ChordOutOfRange"));
    }

    #[test]
    fn residue_collision_without_divisibility() {
        let r = validate_spec(&spec(20, 3, &[3, 1, 7]));
        // (0+3)%6=3, (2+1)%6=3
        assert!(r.has("ResidueCollision"), "{r}");
    }

    #[test]
    fn expansion() {
        assert_eq!(expand_indices(&spec(12, 1, &[5])).unwrap(), vec![5; 6]);
        assert_eq!(
            expand_indices(&spec(12, 3, &[3, 5, 7])).unwrap(),
            vec![3, 5, 7, 3, 5, 7]
        );
        let full = vec![5, 5, 5, 5, 5, 5, 5];
        assert_eq!(expand_indices(&spec(14, 7, &full)).unwrap(), full);
        // 13 exceeds 2m - 3 = 11
        let err = expand_indices(&spec(14, 7, &[3, 5, 7, 9, 11, 13, 3])).unwrap_err();
        assert!(matches!(err, HbgError::InvalidSpec(r) if r.has("ChordOutOfRange")));
        assert!(matches!(
            expand_indices(&spec(20, 3, &[3, 5, 7])),
            Err(HbgError::InvalidSpec(_))
        ));
    }

    #[test]
    fn chord_targets_from_worked_examples() {
        let s = spec(12, 1, &[5]);
        assert_eq!(chord_target(1, &s).unwrap(), 6);
        assert_eq!(chord_target(7, &s).unwrap(), 12);
        assert_eq!(chord_target(11, &s).unwrap(), 4);
        assert_eq!(chord_target(6, &s).unwrap(), 1);
        assert_eq!(chord_target(4, &s).unwrap(), 11);
        assert!(matches!(
            chord_target(13, &s),
            Err(HbgError::LabelOutOfRange { label: 13, order: 12 })
        ));
        assert!(chord_target(0, &s).is_err());
    }

    #[test]
    fn chord_target_is_parity_swapping_involution() {
        let s = spec(24, 3, &[5, 7, 9]);
        assert!(validate_spec(&s).is_valid());
        for x in 1..=24 {
            let y = chord_target(x, &s).unwrap();
            assert_ne!(x % 2, y % 2);
            assert_eq!(chord_target(y, &s).unwrap(), x);
        }
    }

    #[test]
    fn prev_next_wrap() {
        assert_eq!(prev_label(1, 12).unwrap(), 12);
        assert_eq!(next_label(12, 12).unwrap(), 1);
        assert_eq!(next_label(5, 12).unwrap(), 6);
        assert_eq!(prev_label(5, 12).unwrap(), 4);
        assert!(prev_label(0, 12).is_err());
        assert!(next_label(13, 12).is_err());
    }

    #[test]
    fn residue_bijection_matches_label_check() {
        for order in (8..=30).step_by(2) {
            let m: usize = order / 2;
            for b in (1..=m).filter(|b| m % b == 0 && *b <= 3) {
                let odd: Vec<usize> = (3..=order - 3).step_by(2).collect();
                let mut idx = vec![0usize; b];
                loop {
                    let chords: Vec<usize> = idx.iter().map(|&i| odd[i]).collect();
                    let r = validate_spec(&spec(order, b, &chords));
                    assert_eq!(r.is_valid(), residues_biject(&chords), "{order} {chords:?}");
                    let mut k = 0;
                    while k < b {
                        idx[k] += 1;
                        if idx[k] < odd.len() {
                            break;
                        }
                        idx[k] = 0;
                        k += 1;
                    }
                    if k == b {
                        break;
                    }
                }
            }
        }
    }
}
