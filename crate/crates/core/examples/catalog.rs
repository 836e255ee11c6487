//! Persist search outcomes in a JSONL catalog and query it back.

use hbg::catalog::{CatalogRecord, CatalogStore, Filter};
use hbg::{scan_orders, ChordIndexSpec, SearchOptions, SymPolicy, Verdict};

fn main() -> hbg::Result<()> {
    let path = std::env::temp_dir().join(format!("hbg-example-{}.jsonl", std::process::id()));
    let store = CatalogStore::open(&path);

    for r in scan_orders(6, 10, 20, &SymPolicy::default(), 0, &SearchOptions::default())? {
        store.append_outcome(&r.best)?;
    }
    // a wrong claim is refused before it reaches the file
    let bad = CatalogRecord::exists(6, &ChordIndexSpec::new(12, 1, vec![5]));
    println!("append girth-4 graph as girth 6: {}", store.append(&bad).unwrap_err());

    for rec in store.load(&Filter::girth(6).verdict(Verdict::Exists))? {
        println!("{} b={} chords={:?}", rec.order, rec.b, rec.chords.unwrap_or_default());
    }
    let refuted = store.load(&Filter::girth(6).verdict(Verdict::NonExistent))?;
    println!("refuted: {:?}", refuted.iter().map(|r| r.order).collect::<Vec<_>>());
    println!("{}", std::fs::read_to_string(&path)?.lines().next().unwrap_or(""));
    std::fs::remove_file(&path)?;
    Ok(())
}
