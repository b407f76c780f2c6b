use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

/// One failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a verification suite. The suite passes iff `mismatches` is
/// empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cells_checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub elapsed_ms: u64,
    /// Remarks shown in text output only.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} ({} cells, {} mismatches, {} ms)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cells_checked,
            self.mismatches.len(),
            self.elapsed_ms
        )?;
        for m in &self.mismatches {
            writeln!(
                f,
                "  mismatch {}: expected {}, got {}",
                m.input, m.expected, m.actual
            )?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

/// Accumulates cells and mismatches while a suite runs.
pub(crate) struct ReportBuilder {
    suite: String,
    start: Instant,
    cells: u64,
    mismatches: Vec<Mismatch>,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(suite: &str) -> Self {
        ReportBuilder {
            suite: suite.to_string(),
            start: Instant::now(),
            cells: 0,
            mismatches: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records one comparison.
    pub fn check<T: PartialEq + fmt::Display>(
        &mut self,
        input: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) {
        self.cells += 1;
        if expected != actual {
            self.mismatches.push(Mismatch {
                input: input(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Records a property that must hold.
    pub fn require(&mut self, input: impl FnOnce() -> String, holds: bool, what: &str) {
        self.cells += 1;
        if !holds {
            self.mismatches.push(Mismatch {
                input: input(),
                expected: what.to_string(),
                actual: "violated".to_string(),
            });
        }
    }

    pub fn note(&mut self, note: String) {
        self.notes.push(note);
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            suite: self.suite,
            cells_checked: self.cells,
            mismatches: self.mismatches,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            notes: self.notes,
        }
    }
}
