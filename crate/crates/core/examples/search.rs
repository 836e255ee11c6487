//! Search one (girth, order, symmetry factor) and print the statistics.
//!
//! cargo run --release --example search -- 8 32 16

use hbg::search::certify_nonexistence;
use hbg::{search_with, SearchOptions, SearchTask};

fn main() -> hbg::Result<()> {
    let a: Vec<usize> = std::env::args().skip(1).map(|x| x.parse().expect("number")).collect();
    let (g, order, b) = match a[..] {
        [g, order, b] => (g, order, b),
        _ => (6, 14, 1),
    };
    let o = search_with(&SearchTask::new(g, order, b), &SearchOptions::default())?;
    println!("(3,{g}) order {order} b={b}: {}", o.verdict);
    if let Some(w) = &o.witness {
        println!("witness {w}");
    }
    println!("nodes {} in {:.3}s", o.stats.nodes, o.stats.seconds);
    for (depth, l) in o.stats.levels.iter().enumerate() {
        println!(
            "  depth {depth}: nodes {} residue {} girth {} canonical {}",
            l.nodes, l.residue_prunes, l.girth_prunes, l.canonical_prunes
        );
    }

    let (_, cert) = certify_nonexistence(8, 20, 10, &SearchOptions::default())?;
    println!("(3,8) order 20 b=10 reduction: {}", cert.reduction);
    Ok(())
}
