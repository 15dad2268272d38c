//! Named pass/fail results shared by the reports.

use crate::algmod::ValidationReport;
use crate::exactlin::{Mat, Witness};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.to_string(), passed, detail: detail.into() }
    }

    /// Exact matrix equality; the detail names the first differing column.
    pub fn mat_eq(name: &str, lhs: &Mat, rhs: &Mat) -> Check {
        if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
            return Check::new(
                name,
                false,
                format!("shapes differ: {}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()),
            );
        }
        match (0..lhs.cols()).find(|&j| lhs.col(j) != rhs.col(j)) {
            None => Check::new(name, true, format!("equal as {}x{} matrices", lhs.rows(), lhs.cols())),
            Some(j) => Check::new(name, false, format!("differ on basis vector {j}")),
        }
    }

    pub fn report(name: &str, rep: &ValidationReport) -> Check {
        Check::new(name, rep.ok(), rep.summary())
    }

    pub fn bijective(name: &str, m: &Mat) -> Check {
        match m.bijectivity_witness() {
            None => Check::new(name, true, format!("bijective ({}x{})", m.rows(), m.cols())),
            Some(w) => Check::new(name, false, witness_text(&w)),
        }
    }

    /// A check that failed because the computation itself errored.
    pub fn error(name: &str, e: &crate::Error) -> Check {
        Check::new(name, false, e.to_string())
    }
}

pub fn witness_text(w: &Witness) -> String {
    w.to_string()
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
