//! Theorem-verification harness.
//!
//! Every check produces a [`VerificationReport`]. Sweeps over finite
//! parameter ranges corroborate a statement on those instances; they are
//! not proofs.

mod cospectral;
mod families;
mod properties;
mod trees;

pub use cospectral::{check_pair, cospectral_pairs, connected_graphs_up_to_iso, verify_cospectral, CospectralPair, Witness};
pub use families::{
    consistency_sentinel, crosscheck_family, default_grid, verify_inertia, verify_star_determinants, FamilyCase,
    FamilyKind, InertiaFamily,
};
pub use properties::{run_property_suites, SuiteCounts, DEFAULT_SEED};
pub use trees::{sweep_trees, verify_tree_conjecture, verify_tree_irreducibility, SweepOptions, MAX_DEFAULT_N};

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Failures kept verbatim in a report; the total is always counted.
pub const MAX_RECORDED_FAILURES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub instance: String,
    pub observed: String,
    pub expected: String,
}

/// Outcome of one verification run.
///
/// Reports merge associatively: counts and counters add, the deviation is
/// the maximum, and failures are kept sorted by instance descriptor.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub claim: String,
    pub parameter_range: String,
    pub instances_checked: u64,
    failures: Vec<Failure>,
    failure_count: u64,
    pub max_deviation: f64,
    pub elapsed: Duration,
    pub counters: BTreeMap<String, u64>,
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>, parameter_range: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.into(),
            parameter_range: parameter_range.into(),
            instances_checked: 0,
            failures: Vec::new(),
            failure_count: 0,
            max_deviation: 0.0,
            elapsed: Duration::ZERO,
            counters: BTreeMap::new(),
            note: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn failure_count(&self) -> u64 {
        self.failure_count
    }

    pub fn checked(&mut self) {
        self.instances_checked += 1;
    }

    pub fn deviation(&mut self, dev: f64) {
        if dev > self.max_deviation || dev.is_nan() {
            self.max_deviation = dev;
        }
    }

    pub fn fail(&mut self, instance: impl Into<String>, observed: impl fmt::Display, expected: impl fmt::Display) {
        self.failure_count += 1;
        self.failures.push(Failure {
            instance: instance.into(),
            observed: observed.to_string(),
            expected: expected.to_string(),
        });
        if self.failures.len() > 2 * MAX_RECORDED_FAILURES {
            self.trim();
        }
    }

    pub fn count(&mut self, key: &str, by: u64) {
        *self.counters.entry(key.to_string()).or_insert(0) += by;
    }

    pub fn counter(&self, key: &str) -> u64 {
        self.counters.get(key).copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        self.failures.sort();
        self.failures.truncate(MAX_RECORDED_FAILURES);
    }

    /// Folds `other` into `self`; claim and range of `self` are kept.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.instances_checked += other.instances_checked;
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self.trim();
        self.deviation(other.max_deviation);
        self.elapsed += other.elapsed;
        for (k, v) in other.counters {
            *self.counters.entry(k).or_insert(0) += v;
        }
        if self.note.is_none() {
            self.note = other.note;
        }
        self
    }

    pub(crate) fn finish(mut self, started: std::time::Instant) -> Self {
        self.trim();
        self.elapsed = started.elapsed();
        self
    }

    /// Human-readable summary table. Timing is left out so the text is
    /// reproducible; see [`VerificationReport::elapsed`].
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{:<18} {}\n", "claim", self.claim));
        out.push_str(&format!("{:<18} {}\n", "status", status));
        out.push_str(&format!("{:<18} {}\n", "parameters", self.parameter_range));
        out.push_str(&format!("{:<18} {}\n", "instances", self.instances_checked));
        out.push_str(&format!("{:<18} {}\n", "failures", self.failure_count));
        out.push_str(&format!("{:<18} {:.3e}\n", "max deviation", self.max_deviation));
        for (k, v) in &self.counters {
            out.push_str(&format!("{:<18} {}\n", k, v));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("{:<18} {}\n", "note", note));
        }
        for f in &self.failures {
            out.push_str(&format!("  {}: observed {}, expected {}\n", f.instance, f.observed, f.expected));
        }
        out
    }
}

/// The JSON form omits `elapsed` so that repeated runs serialize identically.
impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VerificationReport", 9)?;
        st.serialize_field("claim", &self.claim)?;
        st.serialize_field("passed", &self.passed())?;
        st.serialize_field("parameter_range", &self.parameter_range)?;
        st.serialize_field("instances_checked", &self.instances_checked)?;
        st.serialize_field("failure_count", &self.failure_count)?;
        st.serialize_field("failures", &self.failures)?;
        st.serialize_field("max_deviation", &self.max_deviation)?;
        st.serialize_field("counters", &self.counters)?;
        st.serialize_field("note", &self.note)?;
        st.end()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table())
    }
}

pub(crate) const FINITE_NOTE: &str = "finite corroboration over the stated range, not a proof";
