#![allow(dead_code)]

use hbg::ChordIndexSpec;
use rand::seq::SliceRandom;
use rand::Rng;

/// Uniformly shaped random valid spec with `b <= max_b` and order at most
/// `max_order`.
pub fn random_spec<R: Rng>(rng: &mut R, max_b: usize, max_order: usize) -> ChordIndexSpec {
    loop {
        let b = rng.gen_range(1..=max_b);
        let step = 2 * b;
        let k_max = max_order / step;
        if k_max == 0 {
            continue;
        }
        let order = step * rng.gen_range(1..=k_max);
        if order < 8 {
            continue;
        }
        // 2i + d_i runs over the odd residues mod 2b exactly once
        let mut targets: Vec<usize> = (0..b).map(|r| 2 * r + 1).collect();
        targets.shuffle(rng);
        let mut chords = Vec::with_capacity(b);
        for (i, &t) in targets.iter().enumerate() {
            let base = (t + step * order - 2 * i) % step;
            let choices: Vec<usize> = (0..order)
                .map(|k| base + k * step)
                .filter(|&d| d >= 3 && d + 3 <= order)
                .collect();
            match choices.choose(rng) {
                Some(&d) => chords.push(d),
                None => break,
            }
        }
        if chords.len() == b {
            let spec = ChordIndexSpec::new(order, b, chords);
            assert!(hbg::validate_spec(&spec).is_valid(), "{spec}");
            return spec;
        }
    }
}
