//! Scan the (3,8) orders 20..=90 with progress on stderr.

use hbg::search::Progress;
use hbg::{scan_orders, SearchOptions, SymPolicy};

fn main() -> hbg::Result<()> {
    let progress = |p: &Progress| eprintln!("nodes {} depth {}", p.nodes, p.depth);
    let opts = SearchOptions {
        progress_every: 100_000,
        progress: Some(&progress),
        ..Default::default()
    };
    for r in scan_orders(8, 20, 90, &SymPolicy::Ascending, 0, &opts)? {
        let tried: Vec<_> = r.attempts.iter().map(|a| a.task.sym_factor).collect();
        match &r.best.witness {
            Some(w) => println!("{}: {} {w} (tried b in {tried:?})", r.order, r.verdict),
            None => println!("{}: {} (tried b in {tried:?})", r.order, r.verdict),
        }
    }
    Ok(())
}
