//! Construct the Heawood graph from chord index 5 and walk its labels.

use hbg::{build_graph, chord_target, next_label, prev_label, ChordIndexSpec};

fn main() -> hbg::Result<()> {
    let spec = ChordIndexSpec::checked(14, 1, vec![5])?;
    let g = build_graph(&spec)?;
    println!("{spec}: {} vertices, {} edges", g.order(), g.edges().len());
    for x in 1..=4 {
        println!(
            "{x}: prev {} next {} chord {} neighbours {:?}",
            prev_label(x, spec.order())?,
            next_label(x, spec.order())?,
            chord_target(x, &spec)?,
            g.neighbors(x)
        );
    }
    g.check_invariants()?;
    Ok(())
}
