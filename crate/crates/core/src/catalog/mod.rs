//! Persisted results, reference lists, reports and exports.

mod bounds;
mod export;
mod reference;
mod report;
mod store;

pub use bounds::{bounds_table, reference_bounds, CageBounds, KNOWN_CAGES};
pub use export::{
    export_graph, from_edges, from_graph6, parse_adjacency, parse_graph6, render, to_adjacency, to_dot,
    to_graph6, ExportFormat,
};
pub use reference::{builtin_references, ingest_reference, parse_reference, RefClass, RefFormat, ReferenceList};
pub use report::{claimed_counts, compare_report, ClaimedCounts, ComparisonReport, ListComparison};
pub use store::{representatives, CatalogRecord, CatalogStore, Filter, SCHEMA};
