//! Exhaustive desk-scale verification of the defect inequalities, one
//! verifier per statement. Each verifier sits behind a common trait and is
//! selected by name at runtime, so the CLI is a thin dispatcher.
//!
//! Strict inequalities are always checked on integers as `defect <= bound - 1`;
//! there is no tolerance anywhere.

mod closed_forms;
mod enumerate;
mod gl_o;
mod gl_vv;
mod o_oxo;
mod oracle_check;
mod pi_pibar;

pub use enumerate::{enum_graded, enum_ungraded, partition_count, partitions, GradedConstraint};

use std::fmt;

use serde::Serialize;

/// One failed case: the representation, its defect (or computed value) and
/// the bound (or expected value) it was checked against.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub case: String,
    pub defect: i64,
    pub bound: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub family: String,
    pub range: String,
    pub cases_checked: u64,
    pub violations: Vec<Violation>,
    /// `bound - worst defect` over all cases; strictly positive exactly when
    /// every strict inequality holds with integer slack. Equality-style
    /// verifiers report 0.
    pub min_margin: i64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "family={} range={} cases={} violations={} min_margin={} {}",
            self.family,
            self.range,
            self.cases_checked,
            self.violations.len(),
            self.min_margin,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary_line())?;
        for v in &self.violations {
            writeln!(f, "violation: case={} defect={} bound={}", v.case, v.defect, v.bound)?;
        }
        Ok(())
    }
}

/// Enumeration bounds, shared across verifiers; each verifier reads the
/// fields it needs.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    pub max_dim: u32,
    pub max_lambda: u32,
    pub jobs: usize,
}

pub trait Verifier: Sync {
    /// Registry key, e.g. `"gl-o"`.
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn default_bounds(&self) -> Bounds;
    fn run(&self, bounds: &Bounds) -> VerifyReport;
}

pub fn registry() -> Vec<Box<dyn Verifier>> {
    vec![
        Box::new(gl_o::GlO),
        Box::new(o_oxo::OOxO),
        Box::new(pi_pibar::PiPibar),
        Box::new(gl_vv::GlVv),
        Box::new(closed_forms::ClosedForms),
        Box::new(oracle_check::OracleAgreement),
    ]
}

pub fn find(name: &str) -> Option<Box<dyn Verifier>> {
    registry().into_iter().find(|v| v.name() == name)
}

/// Outcome of a single case.
pub(crate) struct CaseResult {
    margin: i64,
    violation: Option<Violation>,
}

/// Strict integer inequality `defect < bound`.
pub(crate) fn case_strict(case: impl Into<String>, defect: i64, bound: i64) -> CaseResult {
    let violation = (defect >= bound).then(|| Violation {
        case: case.into(),
        defect,
        bound,
    });
    CaseResult {
        margin: bound - defect,
        violation,
    }
}

/// Exact equality of two computation routes.
pub(crate) fn case_equal(case: impl Into<String>, got: i64, want: i64) -> CaseResult {
    let violation = (got != want).then(|| Violation {
        case: case.into(),
        defect: got,
        bound: want,
    });
    CaseResult {
        margin: 0,
        violation,
    }
}

/// Runs every case, optionally splitting the list across worker threads.
/// Results are merged in enumeration order regardless of `jobs`, so reports
/// are byte-for-byte reproducible.
pub(crate) fn run_cases<T, F>(items: &[T], jobs: usize, f: F) -> (u64, Vec<Violation>, i64)
where
    T: Sync,
    F: Fn(&T) -> CaseResult + Sync,
{
    let results: Vec<CaseResult> = if jobs <= 1 || items.len() < 2 {
        items.iter().map(&f).collect()
    } else {
        let chunk = items.len().div_ceil(jobs);
        let mut chunks: Vec<Vec<CaseResult>> = Vec::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = items
                .chunks(chunk)
                .map(|part| scope.spawn(|| part.iter().map(&f).collect::<Vec<_>>()))
                .collect();
            for h in handles {
                chunks.push(h.join().expect("verifier worker panicked"));
            }
        });
        chunks.into_iter().flatten().collect()
    };
    let cases = results.len() as u64;
    let mut min_margin = i64::MAX;
    let mut violations = Vec::new();
    for r in results {
        min_margin = min_margin.min(r.margin);
        if let Some(v) = r.violation {
            violations.push(v);
        }
    }
    if cases == 0 {
        min_margin = 0;
    }
    (cases, violations, min_margin)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique() {
        let names: Vec<_> = registry().iter().map(|v| v.name()).collect();
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(names.len(), dedup.len());
        assert!(find("gl-o").is_some());
        assert!(find("nope").is_none());
    }

    #[test]
    fn reports_are_deterministic_across_jobs() {
        let v = find("pi-pibar").unwrap();
        let b1 = Bounds { max_dim: 7, max_lambda: 0, jobs: 1 };
        let b3 = Bounds { max_dim: 7, max_lambda: 0, jobs: 3 };
        let r1 = v.run(&b1);
        let r3 = v.run(&b3);
        assert_eq!(r1.summary_line(), r3.summary_line());
        assert_eq!(r1.to_string(), r3.to_string());
    }
}
