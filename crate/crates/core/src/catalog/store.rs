//! Append-only JSON Lines store of search results.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::error::{HbgError, Result};
use crate::girth::girth_symmetric;
use crate::search::{SearchOutcome, Verdict};
use crate::spec::ChordIndexSpec;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRecord {
    pub schema: u32,
    pub g: usize,
    pub order: usize,
    pub b: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chords: Option<Vec<usize>>,
    pub verdict: Verdict,
    pub verified: bool,
    pub nodes: u64,
    pub seconds: f64,
    /// Unix seconds.
    pub ts: u64,
}

impl CatalogRecord {
    pub fn exists(g: usize, spec: &ChordIndexSpec) -> Self {
        Self {
            schema: SCHEMA,
            g,
            order: spec.order(),
            b: spec.sym_factor(),
            chords: Some(spec.chords().to_vec()),
            verdict: Verdict::Exists,
            verified: false,
            nodes: 0,
            seconds: 0.0,
            ts: now(),
        }
    }

    pub fn from_outcome(o: &SearchOutcome) -> Self {
        Self {
            schema: SCHEMA,
            g: o.task.girth,
            order: o.task.order,
            b: o.task.sym_factor,
            chords: o.witness.as_ref().map(|w| w.chords().to_vec()),
            verdict: o.verdict,
            verified: false,
            nodes: o.stats.nodes,
            seconds: o.stats.seconds,
            ts: now(),
        }
    }

    pub fn spec(&self) -> Option<ChordIndexSpec> {
        self.chords
            .as_ref()
            .map(|c| ChordIndexSpec::new(self.order, self.b, c.clone()))
    }

    /// Checks the shape of the record and, for `Exists`, recomputes the
    /// girth of the witness.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(HbgError::VerificationFailed(msg));
        if self.schema != SCHEMA {
            return fail(format!("unsupported schema {}", self.schema));
        }
        match (self.verdict, self.spec()) {
            (Verdict::Exists, Some(spec)) => {
                spec.ensure_valid()?;
                let got = girth_symmetric(&spec)?.girth;
                if got < self.g {
                    return fail(format!("{spec} has girth {got}, claimed >= {}", self.g));
                }
                Ok(())
            }
            (Verdict::Exists, None) => fail("Exists record without chords".into()),
            (_, Some(_)) => fail(format!("{} record carries chords", self.verdict)),
            (_, None) => Ok(()),
        }
    }
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

#[derive(Debug, Clone, Default)]
pub struct Filter {
    pub g: Option<usize>,
    pub orders: Option<RangeInclusive<usize>>,
    pub verdict: Option<Verdict>,
}

impl Filter {
    pub fn girth(g: usize) -> Self {
        Self {
            g: Some(g),
            ..Self::default()
        }
    }

    pub fn verdict(mut self, v: Verdict) -> Self {
        self.verdict = Some(v);
        self
    }

    pub fn orders(mut self, r: RangeInclusive<usize>) -> Self {
        self.orders = Some(r);
        self
    }

    pub fn matches(&self, r: &CatalogRecord) -> bool {
        self.g.map_or(true, |g| r.g == g)
            && self.orders.as_ref().map_or(true, |o| o.contains(&r.order))
            && self.verdict.map_or(true, |v| r.verdict == v)
    }
}

/// A catalog file. Every append is a single `write` of one complete line;
/// an unterminated last line left by a crash is ignored on load and cut off
/// before the next append.
#[derive(Debug, Clone)]
pub struct CatalogStore {
    path: PathBuf,
}

impl CatalogStore {
    pub fn open(path: impl Into<PathBuf>) -> Self {
        Self { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Re-verifies and appends the record; returns it as written.
    pub fn append(&self, record: &CatalogRecord) -> Result<CatalogRecord> {
        let mut rec = record.clone();
        rec.verify()?;
        rec.verified = rec.verdict == Verdict::Exists;
        let mut line = serde_json::to_string(&rec)?;
        line.push('\n');

        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        let mut file = OpenOptions::new()
            .read(true)
            .append(true)
            .create(true)
            .open(&self.path)?;
        drop_torn_tail(&mut file)?;
        file.write_all(line.as_bytes())?;
        file.sync_data()?;
        Ok(rec)
    }

    pub fn append_outcome(&self, outcome: &SearchOutcome) -> Result<CatalogRecord> {
        self.append(&CatalogRecord::from_outcome(outcome))
    }

    /// All records, re-verified. A missing file is an empty catalog.
    pub fn load_all(&self) -> Result<Vec<CatalogRecord>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let corrupt = |line: usize, reason: String| HbgError::CorruptStore {
            path: self.path.clone(),
            line,
            reason,
        };
        let mut reader = BufReader::new(file);
        let mut out = Vec::new();
        let mut buf = String::new();
        let mut line_no = 0;
        loop {
            buf.clear();
            if reader.read_line(&mut buf)? == 0 {
                break;
            }
            line_no += 1;
            if !buf.ends_with('\n') {
                // torn tail of an interrupted append
                break;
            }
            let text = buf.trim();
            if text.is_empty() {
                continue;
            }
            let rec: CatalogRecord =
                serde_json::from_str(text).map_err(|e| corrupt(line_no, e.to_string()))?;
            rec.verify().map_err(|e| corrupt(line_no, e.to_string()))?;
            out.push(rec);
        }
        Ok(out)
    }

    pub fn load(&self, filter: &Filter) -> Result<Vec<CatalogRecord>> {
        Ok(self
            .load_all()?
            .into_iter()
            .filter(|r| filter.matches(r))
            .collect())
    }
}

fn drop_torn_tail(file: &mut File) -> Result<()> {
    let len = file.metadata()?.len();
    if len == 0 {
        return Ok(());
    }
    let mut last = [0u8];
    file.seek(SeekFrom::Start(len - 1))?;
    file.read_exact(&mut last)?;
    if last[0] == b'\n' {
        return Ok(());
    }
    let mut data = Vec::new();
    file.seek(SeekFrom::Start(0))?;
    file.read_to_end(&mut data)?;
    let keep = data.iter().rposition(|&c| c == b'\n').map_or(0, |i| i + 1);
    file.set_len(keep as u64)?;
    Ok(())
}

/// Per order, the record shown in reports: the `Exists` record with the
/// largest `b`, else a `NonExistent` one, else the latest `Inconclusive`.
pub fn representatives(records: &[CatalogRecord], g: usize) -> BTreeMap<usize, &CatalogRecord> {
    let rank = |r: &CatalogRecord| match r.verdict {
        Verdict::Exists => (2, r.b),
        Verdict::NonExistent => (1, r.b),
        Verdict::Inconclusive => (0, r.b),
    };
    let mut out: BTreeMap<usize, &CatalogRecord> = BTreeMap::new();
    for r in records.iter().filter(|r| r.g == g) {
        match out.get(&r.order) {
            Some(cur) if rank(cur) > rank(r) => {}
            _ => {
                out.insert(r.order, r);
            }
        }
    }
    out
}
