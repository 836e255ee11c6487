//! Validate chord-index specs and list every violated invariant.

use hbg::{expand_indices, validate_spec, ChordIndexSpec};

fn main() {
    let specs = [
        ChordIndexSpec::new(14, 1, vec![5]),
        ChordIndexSpec::new(30, 3, vec![7, 9, 17]),
        ChordIndexSpec::new(20, 3, vec![3, 5, 7]),
        ChordIndexSpec::new(24, 3, vec![3, 7, 11]),
        ChordIndexSpec::new(13, 1, vec![4]),
    ];
    for spec in &specs {
        let report = validate_spec(spec);
        println!("{spec}: {}", report.verdict());
        for v in &report.violations {
            println!("  {v}");
        }
        if report.is_valid() {
            println!("  expanded: {:?}", expand_indices(spec).unwrap());
        }
    }
}
