//! Girth through the symmetry-reduced traversal trees, checked against the
//! all-sources oracle.
//!
//! cargo run --example girth -- 30 7,9,17

use hbg::girth::traverse;
use hbg::{build_graph, girth_oracle, girth_symmetric, ChordIndexSpec};

fn main() -> hbg::Result<()> {
    let mut args = std::env::args().skip(1);
    let order: usize = args.next().map_or(12, |a| a.parse().expect("order"));
    let chords: Vec<usize> = args
        .next()
        .map_or(vec![5], |a| a.split(',').map(|c| c.parse().expect("chord")).collect());
    let spec = ChordIndexSpec::new(order, chords.len(), chords);

    let tree = traverse(1, &spec)?;
    for (d, layer) in tree.layers.iter().enumerate() {
        let labels: Vec<_> = layer.iter().map(|n| n.label).collect();
        println!("depth {d}: {labels:?}");
    }
    println!("repeat: {:?}", tree.repeat_event);

    let r = girth_symmetric(&spec)?;
    println!("girth {} from root {}, cycle {:?}", r.girth, r.root_used, r.witness);
    println!("oracle {}", girth_oracle(&build_graph(&spec)?)?);
    Ok(())
}
