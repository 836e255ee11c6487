//! Known bounds on the order of trivalent cages.

use serde::Serialize;

use crate::error::{HbgError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CageBounds {
    pub girth: usize,
    pub lower: usize,
    pub upper: usize,
    /// Number of cages, where known.
    pub cages: Option<usize>,
    pub attribution: &'static str,
}

impl CageBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

// Exoo and Jajcay, "Dynamic cage survey" (2011), even girth.
const BOUNDS: &[CageBounds] = &[
    row(6, 14, 14, Some(1), "Heawood"),
    row(8, 30, 30, Some(1), "Tutte"),
    row(10, 70, 70, Some(3), "O'Keefe-Wong"),
    row(12, 126, 126, Some(1), "Benson"),
    row(14, 258, 384, None, "Exoo; lower bound McKay"),
    row(16, 512, 960, None, "Exoo"),
    row(18, 1024, 2560, None, "Exoo"),
    row(20, 2048, 5376, None, "Exoo"),
    row(22, 4096, 16206, None, "Biggs-Hoare"),
    row(24, 8192, 49608, None, "Bray-Parker-Rowley"),
    row(26, 16384, 109200, None, "Bray-Parker-Rowley"),
    row(28, 32768, 415104, None, "Bray-Parker-Rowley"),
    row(30, 65536, 1143408, None, "Exoo-Jajcay"),
    row(32, 131072, 3650304, None, "Bray-Parker-Rowley"),
];

const fn row(
    girth: usize,
    lower: usize,
    upper: usize,
    cages: Option<usize>,
    attribution: &'static str,
) -> CageBounds {
    CageBounds {
        girth,
        lower,
        upper,
        cages,
        attribution,
    }
}

/// Known trivalent cages as `(girth, order, count)`, same survey.
pub const KNOWN_CAGES: &[(usize, usize, usize)] = &[
    (5, 10, 1),
    (6, 14, 1),
    (7, 24, 1),
    (8, 30, 1),
    (9, 58, 18),
    (10, 70, 3),
    (11, 112, 1),
    (12, 126, 1),
];

/// Bounds on `n(3, g)` for even `6 <= g <= 32`.
pub fn reference_bounds(g: usize) -> Result<CageBounds> {
    BOUNDS
        .iter()
        .find(|b| b.girth == g)
        .copied()
        .ok_or(HbgError::OutOfTable(g))
}

pub fn bounds_table() -> &'static [CageBounds] {
    BOUNDS
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows() {
        let b = reference_bounds(8).unwrap();
        assert_eq!((b.lower, b.upper, b.attribution), (30, 30, "Tutte"));
        let b = reference_bounds(14).unwrap();
        assert_eq!((b.lower, b.upper, b.attribution), (258, 384, "Exoo; lower bound McKay"));
        let b = reference_bounds(16).unwrap();
        assert_eq!((b.lower, b.upper, b.attribution), (512, 960, "Exoo"));
    }

    #[test]
    fn out_of_table() {
        for g in [4, 5, 7, 34] {
            assert!(matches!(reference_bounds(g), Err(HbgError::OutOfTable(_))));
        }
    }

    #[test]
    fn cages_agree_with_bounds() {
        for &(g, n, _) in KNOWN_CAGES.iter().filter(|c| c.0 % 2 == 0) {
            let b = reference_bounds(g).unwrap();
            assert!(b.is_exact());
            assert_eq!(b.lower, n);
        }
        for b in bounds_table() {
            assert!(b.lower <= b.upper);
        }
    }
}
