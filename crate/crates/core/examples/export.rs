//! Adjacency, DOT and graph6 exports, and reading them back.

use hbg::catalog::{export_graph, from_graph6, parse_adjacency, ExportFormat};
use hbg::{build_graph, ChordIndexSpec};

fn main() -> hbg::Result<()> {
    let spec = ChordIndexSpec::new(14, 1, vec![5]);
    let g = build_graph(&spec)?;
    for f in [ExportFormat::Adjacency, ExportFormat::Dot, ExportFormat::Graph6] {
        let text = String::from_utf8(export_graph(&spec, f)?).expect("ascii");
        println!("--- {f:?}\n{text}");
    }
    let adj = String::from_utf8(export_graph(&spec, ExportFormat::Adjacency)?).expect("ascii");
    let g6 = String::from_utf8(export_graph(&spec, ExportFormat::Graph6)?).expect("ascii");
    assert_eq!(parse_adjacency(&adj)?, g);
    assert_eq!(from_graph6(&g6)?, g);
    println!("round trips ok");
    Ok(())
}
