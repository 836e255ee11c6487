//! Canonical forms of chord tuples under relabelings of the Hamiltonian
//! cycle.
//!
//! Every map `x -> ±x + r` of the labels (0-based, mod `2m`) carries the
//! graph of a tuple onto the graph of another tuple with the same period, the
//! same girth and the same Hamiltonian cycle. Modulo rotations by `2b` this
//! is a group of `4b` maps. A tuple is canonical when no image is
//! lexicographically smaller.

use std::cmp::Ordering;

/// Image of `tuple` (period `b = tuple.len()`, order `order`) under
/// `x -> sign * x + shift`.
pub fn transform(tuple: &[usize], order: usize, reflect: bool, shift: usize) -> Vec<usize> {
    let b = tuple.len();
    let n = order as i64;
    let map = |x: i64| -> i64 {
        let y = if reflect { -x } else { x };
        (y + shift as i64).rem_euclid(n)
    };
    let mut out = vec![0; b];
    for (i, &d) in tuple.iter().enumerate() {
        let src = 2 * i as i64;
        let (a, c) = (map(src), map(src + d as i64));
        let (from, to) = if a % 2 == 0 { (a, c) } else { (c, a) };
        out[(from as usize / 2) % b] = (to - from).rem_euclid(n) as usize;
    }
    out
}

/// Whether `tuple` is the lexicographic minimum of its orbit.
pub fn is_canonical(tuple: &[usize], order: usize) -> bool {
    let b = tuple.len();
    for shift in 0..2 * b {
        for reflect in [false, true] {
            if (shift, reflect) == (0, false) {
                continue;
            }
            if transform(tuple, order, reflect, shift).as_slice() < tuple {
                return false;
            }
        }
    }
    true
}

/// Lexicographic minimum of the orbit of `tuple`.
pub fn canonical_form(tuple: &[usize], order: usize) -> Vec<usize> {
    let b = tuple.len();
    (0..2 * b)
        .flat_map(|shift| [false, true].map(move |r| (shift, r)))
        .map(|(shift, reflect)| transform(tuple, order, reflect, shift))
        .min()
        .unwrap_or_default()
}

/// Prefix test used during the search: `prefix` holds `d_1..d_k` of a
/// tuple of period `b`. Returns false when some image under an even
/// rotation, optionally composed with the reflection, is already known to
/// be smaller than every completion of `prefix`. Those images only move
/// positions around, so their leading entries are determined by the prefix.
pub(crate) fn prefix_may_be_canonical(prefix: &[usize], order: usize) -> bool {
    let k = prefix.len();
    // rotation: image starts with prefix[s..]
    for s in 1..k {
        if prefix[s..].cmp(&prefix[..k - s]) == Ordering::Less {
            return false;
        }
    }
    // reflection then rotation: image[j] = order - prefix[s - j] for j <= s
    for s in 0..k {
        let image = (0..=s).map(|j| order - prefix[s - j]);
        if image.cmp(prefix[..=s].iter().copied()) == Ordering::Less {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::girth::girth_oracle;
    use crate::graph::build_graph;
    use crate::spec::{validate_spec, ChordIndexSpec};

    fn valid(order: usize, t: &[usize]) -> bool {
        validate_spec(&ChordIndexSpec::new(order, t.len(), t.to_vec())).is_valid()
    }

    #[test]
    fn identity_and_simple_images() {
        assert_eq!(transform(&[5], 14, false, 0), vec![5]);
        assert_eq!(transform(&[5], 14, true, 0), vec![9]);
        // odd rotation reverses chord direction
        assert_eq!(transform(&[5], 14, false, 1), vec![9]);
        assert_eq!(transform(&[3, 5, 7], 30, false, 2), vec![7, 3, 5]);
    }

    #[test]
    fn images_are_valid_with_equal_girth() {
        for (order, t) in [(30, vec![3, 5, 7]), (24, vec![5, 9]), (36, vec![5, 7, 9]), (40, vec![3, 7, 11, 15])] {
            if !valid(order, &t) {
                continue;
            }
            let g0 = girth_oracle(&build_graph(&ChordIndexSpec::new(order, t.len(), t.clone())).unwrap()).unwrap();
            for shift in 0..2 * t.len() {
                for reflect in [false, true] {
                    let img = transform(&t, order, reflect, shift);
                    assert!(valid(order, &img), "{t:?} -> {img:?}");
                    let g = build_graph(&ChordIndexSpec::new(order, t.len(), img)).unwrap();
                    assert_eq!(girth_oracle(&g).unwrap(), g0);
                }
            }
        }
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let t = vec![3, 7, 11, 15];
        let order = 40;
        let c = canonical_form(&t, order);
        assert!(is_canonical(&c, order));
        for shift in 0..8 {
            for reflect in [false, true] {
                assert_eq!(canonical_form(&transform(&t, order, reflect, shift), order), c);
            }
        }
    }

    #[test]
    fn prefix_rule_never_rejects_a_canonical_tuple() {
        let order = 20;
        let odd: Vec<usize> = (3..=17).step_by(2).collect();
        for &a in &odd {
            for &b in &odd {
                for &c in &odd {
                    for &d in &odd {
                        for &e in &odd {
                            let t = [a, b, c, d, e];
                            if !valid(order, &t) || !is_canonical(&t, order) {
                                continue;
                            }
                            for k in 1..=5 {
                                assert!(prefix_may_be_canonical(&t[..k], order), "{t:?} at {k}");
                            }
                        }
                    }
                }
            }
        }
    }
}
