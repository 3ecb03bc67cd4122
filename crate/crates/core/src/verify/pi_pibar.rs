//! For every weight multiset `pi` with `1 <= dim <= max_dim`, the graded
//! direct sum `pi (+) pi-bar` has strictly negative defect.

use super::{case_strict, enum_ungraded, run_cases, Bounds, Verifier, VerifyReport};
use crate::rep::UngradedRep;

pub struct PiPibar;

impl Verifier for PiPibar {
    fn name(&self) -> &'static str {
        "pi-pibar"
    }

    fn description(&self) -> &'static str {
        "def(pi (+) pi-bar) < 0 for every ungraded pi with dim <= max-dim"
    }

    fn default_bounds(&self) -> Bounds {
        Bounds { max_dim: 12, max_lambda: 0, jobs: 1 }
    }

    fn run(&self, bounds: &Bounds) -> VerifyReport {
        let cases: Vec<UngradedRep> = (1..=bounds.max_dim).flat_map(enum_ungraded).collect();
        let (cases_checked, violations, min_margin) = run_cases(&cases, bounds.jobs, |p| {
            case_strict(p.to_string(), p.bar_sum_graded().defect(), 0)
        });
        VerifyReport {
            family: self.name().to_string(),
            range: format!("dim 1..{}", bounds.max_dim),
            cases_checked,
            violations,
            min_margin,
        }
    }
}
