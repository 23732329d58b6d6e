//! Checks of the degree identities and structural invariants over a corpus of
//! small groups.

mod checks;
mod corpus;

use std::cell::OnceCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::chartab::{build_table, CharacterTable};
use crate::error::{ErrorClass, Result};
use crate::families::{build_group_with, BuildContext};
use crate::perm::lattice::DEFAULT_SUBGROUP_BOUND;
use crate::perm::{profile, FiniteGroup, GroupProfile};
use crate::quasiperm::{c_search_with, galois_orbits, mu_search, GaloisOrbit, MuWitness, QuasiPermWitness, SearchConfig};

pub use checks::{check, checks};
pub use corpus::{abelian_invariant_lists, abelian_spec, Corpus, CorpusSelection};

/// File name looked up in the data directory for the class-3 Camina instance.
pub const CAMINA3_FILE: &str = "camina3.grp";

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub corpus: CorpusSelection,
    pub include_camina3: bool,
    pub mu_bound: usize,
    pub search: SearchConfig,
    pub build: BuildContext,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            corpus: CorpusSelection::Default,
            include_camina3: false,
            mu_bound: DEFAULT_SUBGROUP_BOUND,
            search: SearchConfig::default(),
            build: BuildContext::default(),
        }
    }
}

/// A group from the corpus with its derived data computed on first use.
pub struct Entry {
    pub spec: String,
    pub group: FiniteGroup,
    search: SearchConfig,
    mu_bound: usize,
    profile: OnceCell<GroupProfile>,
    table: OnceCell<CharacterTable>,
    orbits: OnceCell<Vec<GaloisOrbit>>,
    c: OnceCell<QuasiPermWitness>,
    mu: OnceCell<MuWitness>,
}

fn cached<'a, T>(cell: &'a OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&'a T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

impl Entry {
    pub fn profile(&self) -> &GroupProfile {
        self.profile.get_or_init(|| profile(&self.group))
    }

    pub fn table(&self) -> Result<&CharacterTable> {
        cached(&self.table, || build_table("auto", &self.group))
    }

    pub fn orbits(&self) -> Result<&[GaloisOrbit]> {
        let table = self.table()?;
        Ok(self.orbits.get_or_init(|| galois_orbits(table)))
    }

    pub fn c(&self) -> Result<&QuasiPermWitness> {
        let orbits = self.orbits()?;
        cached(&self.c, || c_search_with(&self.group, orbits, None, &self.search))
    }

    pub fn mu(&self) -> Result<&MuWitness> {
        cached(&self.mu, || mu_search(&self.group, self.mu_bound, &self.search))
    }

    pub fn search(&self) -> &SearchConfig {
        &self.search
    }

    pub fn mu_bound(&self) -> usize {
        self.mu_bound
    }
}

/// Shared state for one verification run.
pub struct Context {
    pub options: VerifyOptions,
    pub corpus: Corpus,
    entries: HashMap<String, Rc<Entry>>,
}

impl Context {
    pub fn new(options: VerifyOptions) -> Context {
        Context {
            corpus: Corpus::new(options.corpus),
            options,
            entries: HashMap::new(),
        }
    }

    pub fn entry(&mut self, spec: &str) -> Result<Rc<Entry>> {
        if let Some(e) = self.entries.get(spec) {
            return Ok(Rc::clone(e));
        }
        let group = build_group_with(spec, &self.options.build)?;
        let entry = Rc::new(Entry {
            spec: spec.to_string(),
            group,
            search: self.options.search,
            mu_bound: self.options.mu_bound,
            profile: OnceCell::new(),
            table: OnceCell::new(),
            orbits: OnceCell::new(),
            c: OnceCell::new(),
            mu: OnceCell::new(),
        });
        self.entries.insert(spec.to_string(), Rc::clone(&entry));
        Ok(entry)
    }
}

/// Per-check accumulator of cases and failures.
#[derive(Debug, Default)]
pub struct Tally {
    cases: usize,
    failures: Vec<String>,
    skip: Option<String>,
}

impl Tally {
    pub fn case(&mut self, label: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(format!("{label}: {}", detail()));
        }
    }

    /// Unwrap a per-case result. Bound and time-limit errors abort the run;
    /// any other error is recorded as a failed case.
    pub fn guard<T>(&mut self, label: &str, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e) if e.class() == ErrorClass::Bounds => Err(e),
            Err(e) => {
                self.cases += 1;
                self.failures.push(format!("{label}: {e}"));
                Ok(None)
            }
        }
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        self.skip = Some(reason.into());
    }
}

/// One named invariant evaluated over the corpus.
pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, ctx: &mut Context, tally: &mut Tally) -> Result<()>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub description: &'static str,
    pub status: Status,
    pub cases: usize,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Wall time, shown in text output only so that structured output is
    /// reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub corpus: CorpusSelection,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn result(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<8} {:<28} {:>5} cases  {:>9.3}s", c.status, c.name, c.cases, c.elapsed.as_secs_f64())?;
            if let Some(r) = &c.reason {
                write!(f, "  ({r})")?;
            }
            writeln!(f)?;
            for fail in &c.failures {
                writeln!(f, "         - {fail}")?;
            }
        }
        let fails = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let skips = self.checks.iter().filter(|c| c.status == Status::Skipped).count();
        writeln!(
            f,
            "{}: {} checks, {fails} failed, {skips} skipped",
            if self.passed { "ok" } else { "FAILED" },
            self.checks.len()
        )
    }
}

/// Run every registered check. Fails only on bound or time-limit errors;
/// invariant violations are reported in the result.
pub fn verify_theorems(options: VerifyOptions) -> Result<VerifyReport> {
    let mut ctx = Context::new(options);
    let mut results = Vec::new();
    for check in checks() {
        let start = Instant::now();
        let mut tally = Tally::default();
        check.run(&mut ctx, &mut tally)?;
        let status = if !tally.failures.is_empty() {
            Status::Fail
        } else if tally.skip.is_some() || tally.cases == 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        let reason = match status {
            Status::Skipped => Some(tally.skip.unwrap_or_else(|| "no applicable groups in the corpus".into())),
            _ => None,
        };
        results.push(CheckResult {
            name: check.name(),
            description: check.description(),
            status,
            cases: tally.cases,
            failures: tally.failures,
            reason,
            elapsed: start.elapsed(),
        });
    }
    Ok(VerifyReport {
        corpus: ctx.options.corpus,
        passed: results.iter().all(|r| r.status != Status::Fail),
        checks: results,
    })
}
