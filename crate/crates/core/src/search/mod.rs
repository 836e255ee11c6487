//! Exhaustive backtracking over chord tuples.
//!
//! Tuples `d_1..d_b` are assigned in increasing lexicographic order. After
//! each assignment the partial graph (Hamiltonian cycle plus the chords
//! placed so far, repeated with period `2b`) is checked for a residue
//! collision and for a cycle shorter than the target through the new chord.
//! Chords only add edges, so a prefix failing either test has no completion.

mod canonical;
mod dfs;

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{HbgError, Result};
use crate::girth::girth_symmetric;
use crate::spec::ChordIndexSpec;
use dfs::{Ctx, State, Step};

pub use canonical::{canonical_form, is_canonical, transform};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchTask {
    pub girth: usize,
    pub order: usize,
    pub sym_factor: usize,
    /// Maximum number of search-tree nodes; 0 means unbounded.
    pub budget: u64,
    pub prune_canonical: bool,
}

impl SearchTask {
    pub fn new(girth: usize, order: usize, sym_factor: usize) -> Self {
        Self {
            girth,
            order,
            sym_factor,
            budget: 0,
            prune_canonical: true,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_canonical(mut self, on: bool) -> Self {
        self.prune_canonical = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(HbgError::InvalidTask(msg));
        if self.girth < 6 || self.girth % 2 != 0 {
            return bad(format!("girth target {} must be even and >= 6", self.girth));
        }
        if self.order < 6 || self.order % 2 != 0 {
            return bad(format!("order {} must be even and >= 6", self.order));
        }
        let m = self.order / 2;
        if self.sym_factor == 0 || m % self.sym_factor != 0 {
            return bad(format!("symmetry factor {} does not divide m = {m}", self.sym_factor));
        }
        if self.order > u16::MAX as usize {
            return bad(format!("order {} is too large", self.order));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, serde::Deserialize)]
pub enum Verdict {
    Exists,
    NonExistent,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Exists => "Exists",
            Verdict::NonExistent => "NonExistent",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Verdict {
    type Err = HbgError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exists" => Ok(Verdict::Exists),
            "nonexistent" => Ok(Verdict::NonExistent),
            "inconclusive" => Ok(Verdict::Inconclusive),
            _ => Err(HbgError::InvalidTask(format!("unknown verdict {s:?}"))),
        }
    }
}

/// Counters for one depth of the search tree (depth `i` assigns `d_{i+1}`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub nodes: u64,
    pub residue_prunes: u64,
    pub girth_prunes: u64,
    pub canonical_prunes: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub levels: Vec<LevelStats>,
    pub seconds: f64,
}

impl SearchStats {
    pub fn girth_prunes_total(&self) -> u64 {
        self.levels.iter().map(|l| l.girth_prunes).sum()
    }

    pub fn canonical_prunes_total(&self) -> u64 {
        self.levels.iter().map(|l| l.canonical_prunes).sum()
    }

    pub fn residue_prunes_total(&self) -> u64 {
        self.levels.iter().map(|l| l.residue_prunes).sum()
    }

    /// Complete tuples that passed every feasibility check.
    pub fn leaves(&self) -> u64 {
        self.levels.iter().rev().nth(1).map_or(0, |l| l.nodes)
    }
}

/// Snapshot passed to progress callbacks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progress {
    pub nodes: u64,
    pub depth: usize,
    pub girth_prunes: u64,
    pub canonical_prunes: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub task: SearchTask,
    pub verdict: Verdict,
    pub witness: Option<ChordIndexSpec>,
    pub stats: SearchStats,
}

pub type ProgressFn = dyn Fn(&Progress) + Sync + Send;

#[derive(Clone, Default)]
pub struct SearchOptions<'a> {
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Report progress every this many nodes (0 = never).
    pub progress_every: u64,
    pub progress: Option<&'a ProgressFn>,
    /// Accept any witness instead of the lexicographically least one. Node
    /// counts then depend on scheduling.
    pub any_witness: bool,
}

/// Runs `task` with default options.
pub fn search(task: &SearchTask) -> Result<SearchOutcome> {
    search_with(task, &SearchOptions::default())
}

pub fn search_with(task: &SearchTask, opts: &SearchOptions<'_>) -> Result<SearchOutcome> {
    task.validate()?;
    match opts.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| HbgError::InvalidTask(e.to_string()))?;
            pool.install(|| run(task, opts))
        }
        None => run(task, opts),
    }
}

fn run(task: &SearchTask, opts: &SearchOptions<'_>) -> Result<SearchOutcome> {
    let start = Instant::now();
    let b = task.sym_factor;
    let shared_nodes = AtomicU64::new(0);
    let winner = AtomicUsize::new(usize::MAX);
    let progress = opts.progress.map(|p| p as &(dyn Fn(&Progress) + Sync));
    let ctx = Ctx {
        order: task.order,
        b,
        girth: task.girth,
        canonical: task.prune_canonical,
        budget: task.budget,
        progress_every: opts.progress_every,
        progress,
        shared_nodes: &shared_nodes,
        winner: &winner,
        any_witness: opts.any_witness,
        count_all: false,
    };

    // budgeted runs stay sequential so the cut-off point is reproducible
    let cut = if task.budget > 0 || b == 1 { b } else { 2.min(b - 1) };
    let mut stats = SearchStats::empty(b);
    let mut frontier = Vec::new();
    let mut root = State::new(task.order, b);
    let step = root.dfs(&ctx, 0, &mut stats, cut, &mut frontier);

    let (verdict, tuple) = match step {
        Step::Found => (Verdict::Exists, Some(root.tuple.clone())),
        Step::Exhausted => (Verdict::Inconclusive, None),
        Step::Cancelled => unreachable!("nothing to cancel before partitioning"),
        Step::Continue if frontier.is_empty() => (Verdict::NonExistent, None),
        Step::Continue => {
            let results: Vec<(Step, SearchStats, Vec<usize>)> = frontier
                .par_iter()
                .enumerate()
                .map(|(idx, prefix)| {
                    let mut st = State::with_prefix(task.order, b, prefix);
                    let mut s = SearchStats::empty(b);
                    let step = st.dfs(&ctx, idx, &mut s, b, &mut Vec::new());
                    if matches!(step, Step::Found) {
                        winner.fetch_min(idx, Ordering::Relaxed);
                    }
                    (step, s, st.tuple)
                })
                .collect();
            let win = winner.load(Ordering::Relaxed);
            let mut tuple = None;
            for (idx, (step, s, t)) in results.into_iter().enumerate() {
                if opts.any_witness || idx <= win {
                    stats.absorb(&s);
                }
                if idx == win && matches!(step, Step::Found) {
                    tuple = Some(t);
                }
            }
            match tuple {
                Some(t) => (Verdict::Exists, Some(t)),
                None => (Verdict::NonExistent, None),
            }
        }
    };

    let witness = match tuple {
        Some(t) => {
            let spec = ChordIndexSpec::new(task.order, b, t);
            let g = girth_symmetric(&spec)?.girth;
            if g < task.girth {
                return Err(HbgError::VerificationFailed(format!(
                    "search produced {spec} with girth {g} < {}",
                    task.girth
                )));
            }
            Some(spec)
        }
        None => None,
    };
    stats.seconds = start.elapsed().as_secs_f64();
    Ok(SearchOutcome {
        task: task.clone(),
        verdict,
        witness,
        stats,
    })
}

/// Number of complete tuples of period `b` with girth at least `girth`
/// (canonical representatives only when `canonical`). Runs sequentially.
pub fn count_survivors(girth: usize, order: usize, b: usize, canonical: bool) -> Result<u64> {
    let task = SearchTask::new(girth, order, b).with_canonical(canonical);
    task.validate()?;
    let shared_nodes = AtomicU64::new(0);
    let winner = AtomicUsize::new(usize::MAX);
    let ctx = Ctx {
        order,
        b,
        girth,
        canonical,
        budget: 0,
        progress_every: 0,
        progress: None,
        shared_nodes: &shared_nodes,
        winner: &winner,
        any_witness: false,
        count_all: true,
    };
    let mut stats = SearchStats::empty(b);
    State::new(order, b).dfs(&ctx, 0, &mut stats, b, &mut Vec::new());
    Ok(stats.levels[b].nodes)
}

/// Replayable summary of an unbounded enumeration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnumerationCertificate {
    /// Symmetry reduction applied to the tuple space.
    pub reduction: String,
    /// Complete tuples that passed the incremental checks but were not
    /// returned (non-canonical leaves).
    pub leaves_refuted: u64,
    pub levels: Vec<LevelStats>,
}

/// Unbounded search whose verdict is either `Exists` or `NonExistent`.
pub fn certify_nonexistence(
    girth: usize,
    order: usize,
    b: usize,
    opts: &SearchOptions<'_>,
) -> Result<(SearchOutcome, EnumerationCertificate)> {
    let task = SearchTask::new(girth, order, b);
    let outcome = search_with(&task, opts)?;
    let cert = EnumerationCertificate {
        reduction: if task.prune_canonical {
            format!("dihedral relabelings x -> ±x + r ({} maps)", 4 * b)
        } else {
            "none".to_string()
        },
        leaves_refuted: outcome.stats.levels[b].canonical_prunes,
        levels: outcome.stats.levels.clone(),
    };
    Ok((outcome, cert))
}

/// Order in which symmetry factors are tried for one order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum SymPolicy {
    /// Divisors of `m`, smallest first.
    #[default]
    Ascending,
    /// Divisors of `m`, largest first.
    Descending,
    /// Only `b = m`.
    Full,
    /// The given factors that divide `m`, in the given order.
    List(Vec<usize>),
}

impl SymPolicy {
    pub fn factors(&self, order: usize) -> Vec<usize> {
        let m = order / 2;
        let divisors: Vec<usize> = (1..=m).filter(|b| m % b == 0).collect();
        match self {
            SymPolicy::Ascending => divisors,
            SymPolicy::Descending => divisors.into_iter().rev().collect(),
            SymPolicy::Full => vec![m],
            SymPolicy::List(l) => l.iter().copied().filter(|&b| b > 0 && m % b == 0).collect(),
        }
    }
}

impl std::str::FromStr for SymPolicy {
    type Err = HbgError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascending" | "asc" => Ok(SymPolicy::Ascending),
            "descending" | "desc" => Ok(SymPolicy::Descending),
            "full" => Ok(SymPolicy::Full),
            _ => s
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map(SymPolicy::List)
                .map_err(|_| HbgError::InvalidRange(format!("unknown symmetry policy {s:?}"))),
        }
    }
}

/// Result for one order of a scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderResult {
    pub order: usize,
    pub verdict: Verdict,
    /// The deciding outcome: the witness search, the `b = m` refutation, or
    /// the last attempt.
    pub best: SearchOutcome,
    /// Every search run for this order, in policy order.
    pub attempts: Vec<SearchOutcome>,
}

/// Scans even orders `lo..=hi`, trying symmetry factors per `policy` until a
/// witness appears. An order is `NonExistent` only when `b = m` was refuted
/// exhaustively.
pub fn scan_orders(
    girth: usize,
    lo: usize,
    hi: usize,
    policy: &SymPolicy,
    budget: u64,
    opts: &SearchOptions<'_>,
) -> Result<Vec<OrderResult>> {
    if lo % 2 != 0 || hi % 2 != 0 || lo > hi || lo < 6 {
        return Err(HbgError::InvalidRange(format!(
            "order range {lo}..{hi} must be even, ascending, and start at >= 6"
        )));
    }
    let mut out = Vec::new();
    for order in (lo..=hi).step_by(2) {
        let m = order / 2;
        let mut attempts: Vec<SearchOutcome> = Vec::new();
        let mut verdict = Verdict::Inconclusive;
        let mut best = None;
        for b in policy.factors(order) {
            let task = SearchTask::new(girth, order, b).with_budget(budget);
            let o = search_with(&task, opts)?;
            match o.verdict {
                Verdict::Exists => {
                    verdict = Verdict::Exists;
                    best = Some(o.clone());
                    attempts.push(o);
                    break;
                }
                Verdict::NonExistent if b == m => {
                    verdict = Verdict::NonExistent;
                    best = Some(o.clone());
                }
                _ => {}
            }
            attempts.push(o);
        }
        let best = match best.or_else(|| attempts.last().cloned()) {
            Some(b) => b,
            // empty policy for this order: nothing attempted
            None => continue,
        };
        out.push(OrderResult {
            order,
            verdict,
            best,
            attempts,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(g: usize, order: usize, b: usize) -> SearchOutcome {
        search(&SearchTask::new(g, order, b)).unwrap()
    }

    #[test]
    fn order_14_single_chord() {
        let o = run(6, 14, 1);
        assert_eq!(o.verdict, Verdict::Exists);
        assert_eq!(o.witness.unwrap().chords(), &[5]);
    }

    #[test]
    fn girth_six_small_orders_refuted() {
        assert_eq!(run(6, 10, 5).verdict, Verdict::NonExistent);
        assert_eq!(run(6, 12, 6).verdict, Verdict::NonExistent);
    }

    #[test]
    fn girth_eight_order_20_full() {
        assert_eq!(run(8, 20, 10).verdict, Verdict::NonExistent);
    }

    #[test]
    fn tutte_order() {
        let found = [1, 3, 5, 15]
            .iter()
            .any(|&b| run(8, 30, b).verdict == Verdict::Exists);
        assert!(found);
    }

    #[test]
    fn invalid_tasks() {
        for t in [SearchTask::new(7, 14, 1), SearchTask::new(6, 14, 2), SearchTask::new(4, 14, 1)] {
            assert!(matches!(search(&t), Err(HbgError::InvalidTask(_))));
        }
    }

    #[test]
    fn canonical_agrees_with_plain() {
        for order in (10..=20).step_by(2) {
            for b in (1..=order / 2).filter(|b| (order / 2) % b == 0) {
                for g in [6, 8] {
                    let a = search(&SearchTask::new(g, order, b)).unwrap();
                    let p = search(&SearchTask::new(g, order, b).with_canonical(false)).unwrap();
                    assert_eq!(a.verdict, p.verdict, "g={g} order={order} b={b}");
                    assert_eq!(a.witness, p.witness, "g={g} order={order} b={b}");
                }
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_result() {
        let task = SearchTask::new(8, 34, 17);
        let one = search_with(&task, &SearchOptions { threads: Some(1), ..Default::default() }).unwrap();
        let four = search_with(&task, &SearchOptions { threads: Some(4), ..Default::default() }).unwrap();
        assert_eq!(one.verdict, four.verdict);
        assert_eq!(one.witness, four.witness);
        assert_eq!(one.stats.nodes, four.stats.nodes);
        assert_eq!(one.stats.levels, four.stats.levels);
    }

    #[test]
    fn budget_makes_inconclusive() {
        let o = search(&SearchTask::new(8, 32, 16).with_budget(50)).unwrap();
        assert_eq!(o.verdict, Verdict::Inconclusive);
        let again = search(&SearchTask::new(8, 32, 16).with_budget(50)).unwrap();
        assert_eq!(o.stats.nodes, again.stats.nodes);
    }

    #[test]
    fn scan_small_girth_six() {
        let r = scan_orders(6, 10, 16, &SymPolicy::default(), 0, &SearchOptions::default()).unwrap();
        let v: Vec<_> = r.iter().map(|r| (r.order, r.verdict)).collect();
        assert_eq!(
            v,
            vec![
                (10, Verdict::NonExistent),
                (12, Verdict::NonExistent),
                (14, Verdict::Exists),
                (16, Verdict::Exists)
            ]
        );
        assert!(scan_orders(6, 11, 16, &SymPolicy::default(), 0, &SearchOptions::default()).is_err());
    }

    #[test]
    fn survivor_counts() {
        assert_eq!(count_survivors(6, 12, 6, false).unwrap(), 0);
        let all = count_survivors(6, 14, 7, false).unwrap();
        let canon = count_survivors(6, 14, 7, true).unwrap();
        assert!(all > 0 && canon > 0 && canon <= all);
        assert_eq!(count_survivors(6, 14, 1, false).unwrap(), 2);
    }

    #[test]
    fn policies() {
        assert_eq!(SymPolicy::Ascending.factors(24), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(SymPolicy::Descending.factors(24), vec![12, 6, 4, 3, 2, 1]);
        assert_eq!(SymPolicy::Full.factors(24), vec![12]);
        assert_eq!("5,4,3".parse::<SymPolicy>().unwrap().factors(24), vec![4, 3]);
    }
}
