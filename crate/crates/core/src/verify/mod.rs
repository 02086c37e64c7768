//! Instance-level verification suites over a finite universe of groups.
//!
//! Each suite encodes one statement about finite groups as a check that runs
//! on every group of the universe it applies to. A suite passes when every
//! instance passes. Failing instances are replayed on a freshly built lattice
//! so a reported counterexample never depends on cached state.

mod suites;

use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::classes::GroupClass;
use crate::error::{Error, Result};
use crate::groupspec::GroupSpec;
use crate::lattice::{Limits, SubgroupLattice};

pub const DEFAULT_SUITE_BUDGET: Duration = Duration::from_secs(120);

/// One group of the universe with its lattice.
pub struct Entry {
    pub spec: GroupSpec,
    pub lattice: Arc<SubgroupLattice>,
}

impl Entry {
    pub fn build(spec: GroupSpec, limits: Limits) -> Result<Entry> {
        let group = spec.close(limits.element_cap)?;
        let lattice = Arc::new(SubgroupLattice::with_limits(Arc::new(group), limits)?);
        Ok(Entry { spec, lattice })
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }
}

/// The finite set of groups a verification run quantifies over.
#[derive(Default)]
pub struct Universe {
    pub entries: Vec<Entry>,
    pub limits: Limits,
}

impl Universe {
    pub fn build(specs: Vec<GroupSpec>, limits: Limits) -> Result<Universe> {
        let entries = specs
            .into_par_iter()
            .map(|spec| Entry::build(spec, limits))
            .collect::<Result<Vec<_>>>()?;
        Ok(Universe { entries, limits })
    }

    pub fn builtin(limits: Limits) -> Result<Universe> {
        Universe::build(catalog::builtin_catalog(), limits)
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name().to_string()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub group: String,
    pub pass: bool,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite_id: String,
    pub description: String,
    /// Groups the suite applied to.
    pub universe: Vec<String>,
    pub instances: Vec<InstanceResult>,
    /// Groups not checked because the suite ran out of time.
    pub skipped: Vec<String>,
    pub pass: bool,
    /// Wall time, recorded only when timings are requested so that reports
    /// stay byte-identical across runs.
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub universe: Vec<String>,
    pub pass: bool,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<VerifyReport> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub budget: Duration,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_SUITE_BUDGET,
            timings: false,
        }
    }
}

/// Verdict of one check on one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub pass: bool,
    pub witness: String,
}

impl Outcome {
    pub fn pass(witness: impl Into<String>) -> Self {
        Self { pass: true, witness: witness.into() }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Self { pass: false, witness: witness.into() }
    }
}

pub(crate) struct SuiteDef {
    pub id: &'static str,
    pub description: &'static str,
    pub applies: fn(&SubgroupLattice) -> bool,
    pub check: fn(&SubgroupLattice) -> Result<Outcome>,
}

/// Ids of all suites, in run order. `"all"` is accepted in addition.
pub fn suite_ids() -> Vec<&'static str> {
    suites::SUITES.iter().map(|s| s.id).collect()
}

pub fn suite_description(id: &str) -> Option<&'static str> {
    find_suite(id).map(|s| s.description)
}

fn find_suite(id: &str) -> Option<&'static SuiteDef> {
    suites::SUITES.iter().find(|s| s.id == id)
}

/// Runs the check of `suite_id` on one lattice without the runner's replay
/// and budget handling.
pub fn check_instance(lat: &SubgroupLattice, suite_id: &str) -> Result<Option<Outcome>> {
    let suite = find_suite(suite_id).ok_or_else(|| Error::UnknownSuite(suite_id.into()))?;
    if !(suite.applies)(lat) {
        return Ok(None);
    }
    evaluate(suite, lat).map(Some)
}

fn evaluate(suite: &SuiteDef, lat: &SubgroupLattice) -> Result<Outcome> {
    match (suite.check)(lat) {
        Ok(outcome) => Ok(outcome),
        Err(e) if e.is_resource() => Err(e),
        Err(e) => Ok(Outcome::fail(format!("error: {e}"))),
    }
}

/// Rebuilds the group from its spec and reruns the check, so the verdict is
/// independent of any state cached on the original lattice.
pub fn replay(spec: &GroupSpec, suite_id: &str, limits: Limits) -> Result<Option<Outcome>> {
    let entry = Entry::build(spec.clone(), limits)?;
    check_instance(&entry.lattice, suite_id)
}

pub fn run_suite(universe: &Universe, suite_id: &str, opts: &VerifyOptions) -> Result<SuiteResult> {
    let suite = find_suite(suite_id).ok_or_else(|| Error::UnknownSuite(suite_id.into()))?;
    let start = Instant::now();
    let applicable: Vec<&Entry> = universe
        .entries
        .iter()
        .filter(|e| (suite.applies)(&e.lattice))
        .collect();
    let results = applicable
        .par_iter()
        .map(|entry| {
            if start.elapsed() > opts.budget {
                return Ok(None);
            }
            let mut outcome = evaluate(suite, &entry.lattice)?;
            if !outcome.pass {
                let note = match replay(&entry.spec, suite_id, universe.limits)? {
                    Some(r) if !r.pass => "replayed on a fresh lattice: still fails",
                    _ => "replayed on a fresh lattice: passes (cached-state artifact)",
                };
                outcome.witness = format!("{} [{note}]", outcome.witness);
            }
            Ok(Some(outcome))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut instances = Vec::new();
    let mut skipped = Vec::new();
    for (entry, outcome) in applicable.iter().zip(results) {
        match outcome {
            Some(o) => instances.push(InstanceResult {
                group: entry.name().to_string(),
                pass: o.pass,
                witness: o.witness,
            }),
            None => skipped.push(entry.name().to_string()),
        }
    }
    Ok(SuiteResult {
        suite_id: suite.id.to_string(),
        description: suite.description.to_string(),
        universe: applicable.iter().map(|e| e.name().to_string()).collect(),
        pass: instances.iter().all(|i| i.pass),
        instances,
        skipped,
        elapsed_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Runs the requested suites in order; `"all"` expands to every suite.
/// Duplicates are run once.
pub fn run_suites(universe: &Universe, ids: &[String], opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut requested: Vec<&str> = Vec::new();
    for id in ids {
        if id == "all" {
            requested.extend(suite_ids());
        } else if find_suite(id).is_some() {
            requested.push(id);
        } else {
            return Err(Error::UnknownSuite(id.clone()));
        }
    }
    let mut seen = std::collections::HashSet::new();
    requested.retain(|id| seen.insert(*id));
    let suites = requested
        .iter()
        .map(|id| run_suite(universe, id, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        universe: universe.names(),
        pass: suites.iter().all(|s| s.pass),
        suites,
    })
}

/// Whether `lat`'s group lies outside `class` while every proper subgroup
/// lies inside.
pub fn is_minimal_non(lat: &SubgroupLattice, class: GroupClass) -> Result<bool> {
    if class.contains(lat)? {
        return Ok(false);
    }
    for h in lat.ids().filter(|&h| h != lat.top()) {
        if !class.contains(&*lat.subgroup_lattice(h)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Names of the universe members that are minimal non-`class` groups.
pub fn find_minimal_non(universe: &Universe, class: GroupClass) -> Result<Vec<String>> {
    let flags = universe
        .entries
        .par_iter()
        .map(|e| is_minimal_non(&e.lattice, class))
        .collect::<Result<Vec<_>>>()?;
    Ok(universe
        .entries
        .iter()
        .zip(flags)
        .filter(|(_, f)| *f)
        .map(|(e, _)| e.name().to_string())
        .collect())
}
