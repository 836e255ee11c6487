//! Compare a (3,6) scan with the bundled vertex-transitive and symmetric
//! lists.

use hbg::catalog::{builtin_references, compare_report, CatalogRecord};
use hbg::{scan_orders, SearchOptions, SymPolicy};

fn main() -> hbg::Result<()> {
    let records: Vec<CatalogRecord> = scan_orders(6, 10, 50, &SymPolicy::default(), 0, &SearchOptions::default())?
        .iter()
        .map(|r| CatalogRecord::from_outcome(&r.best))
        .collect();
    let report = compare_report(&records, &builtin_references(6), 6, 50);
    print!("{}", report.to_text());
    if std::env::args().any(|a| a == "--json") {
        println!("{}", report.to_json());
    }
    Ok(())
}
