//! Backtracking over chord tuples with incremental girth checks.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use super::canonical::{is_canonical, prefix_may_be_canonical};
use super::{LevelStats, Progress, SearchStats};
use crate::spec::MIN_CHORD;

const NONE: u32 = u32::MAX;
/// Nodes between flushes of the shared progress counter.
const FLUSH_EVERY: u64 = 4096;

/// Read-only parameters shared by every partition.
pub(crate) struct Ctx<'a> {
    pub(crate) order: usize,
    pub(crate) b: usize,
    pub(crate) girth: usize,
    pub(crate) canonical: bool,
    /// 0 = unbounded.
    pub(crate) budget: u64,
    pub(crate) progress_every: u64,
    pub(crate) progress: Option<&'a (dyn Fn(&Progress) + Sync)>,
    pub(crate) shared_nodes: &'a AtomicU64,
    /// Index of the earliest partition known to hold a witness.
    pub(crate) winner: &'a AtomicUsize,
    /// Stop every partition after the first witness instead of only the
    /// later ones.
    pub(crate) any_witness: bool,
    /// Count every surviving complete tuple instead of stopping at the first.
    pub(crate) count_all: bool,
}

pub(crate) enum Step {
    Continue,
    Found,
    /// A partition earlier in lexicographic order already holds a witness.
    Cancelled,
    Exhausted,
}

/// Partial chord assignment on a `b`-periodic graph of the given order.
pub(crate) struct State {
    n: usize,
    b: usize,
    chord: Vec<u32>,
    pub(crate) tuple: Vec<usize>,
    landed: Vec<bool>,
    // BFS scratch
    stamp: Vec<u32>,
    dist: Vec<u16>,
    epoch: u32,
    queue: Vec<u32>,
    /// Per level: vertices too close to that level's chord source.
    blocked: Vec<Vec<u32>>,
    /// Bit `level % 64` set when the vertex is in `blocked[level]`.
    blocked_mark: Vec<u64>,
    unflushed: u64,
}

impl State {
    pub(crate) fn new(order: usize, b: usize) -> Self {
        Self {
            n: order,
            b,
            chord: vec![NONE; order],
            tuple: Vec::with_capacity(b),
            landed: vec![false; 2 * b],
            stamp: vec![0; order],
            dist: vec![0; order],
            epoch: 0,
            queue: Vec::with_capacity(order),
            blocked: vec![Vec::new(); b],
            blocked_mark: vec![0; order],
            unflushed: 0,
        }
    }

    /// Replays an already-vetted prefix.
    pub(crate) fn with_prefix(order: usize, b: usize, prefix: &[usize]) -> Self {
        let mut s = Self::new(order, b);
        for &d in prefix {
            s.assign(d);
        }
        s
    }

    fn assign(&mut self, d: usize) {
        let i = self.tuple.len();
        let mut u = 2 * i;
        while u < self.n {
            let t = (u + d) % self.n;
            self.chord[u] = t as u32;
            self.chord[t] = u as u32;
            u += 2 * self.b;
        }
        self.landed[(2 * i + d) % (2 * self.b)] = true;
        self.tuple.push(d);
    }

    fn unassign(&mut self) {
        let d = self.tuple.pop().expect("non-empty tuple");
        let i = self.tuple.len();
        let mut u = 2 * i;
        while u < self.n {
            let t = (u + d) % self.n;
            self.chord[u] = NONE;
            self.chord[t] = NONE;
            u += 2 * self.b;
        }
        self.landed[(2 * i + d) % (2 * self.b)] = false;
    }

    /// Breadth-first distances from `src` up to `limit`, skipping the edge
    /// `src - skip`. Returns true as soon as `target` is reached.
    fn bfs(&mut self, src: usize, limit: usize, skip: usize, target: usize) -> bool {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        let n = self.n;
        self.queue.clear();
        self.queue.push(src as u32);
        self.stamp[src] = self.epoch;
        self.dist[src] = 0;
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head] as usize;
            head += 1;
            let du = self.dist[u] as usize;
            if du == limit {
                continue;
            }
            let c = self.chord[u];
            let nbrs = [(u + n - 1) % n, (u + 1) % n, c as usize];
            for (k, &w) in nbrs.iter().enumerate() {
                if k == 2 && (c == NONE || (u == src && w == skip)) {
                    continue;
                }
                if self.stamp[w] != self.epoch {
                    if w == target {
                        return true;
                    }
                    self.stamp[w] = self.epoch;
                    self.dist[w] = (du + 1) as u16;
                    self.queue.push(w as u32);
                }
            }
        }
        false
    }

    /// Depth-first search from the current prefix. With `cut < b`, tuples
    /// reaching length `cut` are collected into `frontier` instead of being
    /// expanded further.
    pub(crate) fn dfs(
        &mut self,
        ctx: &Ctx<'_>,
        partition: usize,
        stats: &mut SearchStats,
        cut: usize,
        frontier: &mut Vec<Vec<usize>>,
    ) -> Step {
        let level = self.tuple.len();
        if level == ctx.b {
            if ctx.canonical && !is_canonical(&self.tuple, ctx.order) {
                stats.levels[level].canonical_prunes += 1;
                return Step::Continue;
            }
            if ctx.count_all {
                stats.levels[level].nodes += 1;
                return Step::Continue;
            }
            return Step::Found;
        }
        if level == cut {
            frontier.push(self.tuple.clone());
            return Step::Continue;
        }
        let winner = ctx.winner.load(Ordering::Relaxed);
        if winner < partition || (ctx.any_witness && winner != usize::MAX) {
            return Step::Cancelled;
        }

        let n = self.n;
        let src = 2 * level;
        let copies = n / (2 * ctx.b);
        let limit = ctx.girth - 2;
        // every vertex within `limit` of src is a forbidden chord target
        self.bfs(src, limit, usize::MAX, usize::MAX);
        let mut blocked = std::mem::take(&mut self.blocked[level]);
        blocked.clear();
        blocked.extend_from_slice(&self.queue);
        for &v in &blocked {
            self.blocked_mark[v as usize] |= 1 << (level % 64);
        }

        let result = self.try_values(ctx, partition, stats, cut, frontier, level, src, copies, limit);

        for &v in &blocked {
            self.blocked_mark[v as usize] &= !(1 << (level % 64));
        }
        self.blocked[level] = blocked;
        result
    }

    #[allow(clippy::too_many_arguments)]
    fn try_values(
        &mut self,
        ctx: &Ctx<'_>,
        partition: usize,
        stats: &mut SearchStats,
        cut: usize,
        frontier: &mut Vec<Vec<usize>>,
        level: usize,
        src: usize,
        copies: usize,
        limit: usize,
    ) -> Step {
        let n = self.n;
        let bit = 1u64 << (level % 64);
        let mut d = MIN_CHORD;
        while d + MIN_CHORD <= n {
            let value = d;
            d += 2;
            let t = (src + value) % n;
            let lv = &mut stats.levels[level];
            if self.landed[t % (2 * ctx.b)] {
                lv.residue_prunes += 1;
                continue;
            }
            if self.blocked_mark[t] & bit != 0 {
                lv.girth_prunes += 1;
                continue;
            }
            if ctx.canonical {
                self.tuple.push(value);
                let ok = prefix_may_be_canonical(&self.tuple, ctx.order);
                self.tuple.pop();
                if !ok {
                    lv.canonical_prunes += 1;
                    continue;
                }
            }
            self.assign(value);
            if copies > 1 && self.bfs(src, limit, t, t) {
                self.unassign();
                stats.levels[level].girth_prunes += 1;
                continue;
            }
            stats.levels[level].nodes += 1;
            stats.nodes += 1;
            self.tick(ctx, stats, level);
            if ctx.budget > 0 && stats.nodes > ctx.budget {
                self.unassign();
                return Step::Exhausted;
            }
            match self.dfs(ctx, partition, stats, cut, frontier) {
                Step::Continue => self.unassign(),
                Step::Found => return Step::Found,
                other => {
                    self.unassign();
                    return other;
                }
            }
        }
        Step::Continue
    }

    fn tick(&mut self, ctx: &Ctx<'_>, stats: &SearchStats, level: usize) {
        if ctx.progress_every == 0 {
            return;
        }
        self.unflushed += 1;
        if self.unflushed < FLUSH_EVERY.min(ctx.progress_every) {
            return;
        }
        let before = ctx.shared_nodes.fetch_add(self.unflushed, Ordering::Relaxed);
        let after = before + self.unflushed;
        self.unflushed = 0;
        if before / ctx.progress_every != after / ctx.progress_every {
            if let Some(cb) = ctx.progress {
                cb(&Progress {
                    nodes: after,
                    depth: level + 1,
                    girth_prunes: stats.girth_prunes_total(),
                    canonical_prunes: stats.canonical_prunes_total(),
                });
            }
        }
    }
}

impl SearchStats {
    pub(crate) fn empty(b: usize) -> Self {
        Self {
            nodes: 0,
            levels: vec![LevelStats::default(); b + 1],
            seconds: 0.0,
        }
    }

    pub(crate) fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        for (a, b) in self.levels.iter_mut().zip(&other.levels) {
            a.nodes += b.nodes;
            a.residue_prunes += b.residue_prunes;
            a.girth_prunes += b.girth_prunes;
            a.canonical_prunes += b.canonical_prunes;
        }
    }
}
