//! Hamiltonian bipartite trivalent graphs described by chord indices.
//!
//! * [`spec`] and [`graph`]: the chord-index language and its realization.
//! * [`girth`]: symmetry-reduced girth, an independent oracle, and
//!   certificates for girth-stable infinite families.
//! * [`search`]: exhaustive backtracking over chord tuples.
//! * [`catalog`]: persisted results, reference lists, reports and exports.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod girth;
pub mod graph;
pub mod search;
pub mod spec;

pub use error::{HbgError, Result};
pub use girth::{girth_oracle, girth_symmetric, stabilization, FamilyCertificate, GirthResult};
pub use graph::{build_graph, HbGraph};
pub use search::{count_survivors, scan_orders, search, search_with, SearchOptions, SearchOutcome, SearchTask, SymPolicy, Verdict};
pub use spec::{chord_target, expand_indices, next_label, prev_label, validate_spec, ChordIndexSpec};
