//! For every weight multiset `pi` with `2 <= dim <= max_dim`, the graded
//! tensor square `pi (x) pi-bar` has defect strictly below -1.

use super::{case_strict, enum_ungraded, run_cases, Bounds, Verifier, VerifyReport};
use crate::rep::UngradedRep;

pub struct GlO;

impl Verifier for GlO {
    fn name(&self) -> &'static str {
        "gl-o"
    }

    fn description(&self) -> &'static str {
        "def(pi (x) pi-bar) < -1 for every ungraded pi with 2 <= dim <= max-dim"
    }

    fn default_bounds(&self) -> Bounds {
        Bounds { max_dim: 12, max_lambda: 0, jobs: 1 }
    }

    fn run(&self, bounds: &Bounds) -> VerifyReport {
        let cases: Vec<UngradedRep> = (2..=bounds.max_dim).flat_map(enum_ungraded).collect();
        let (cases_checked, violations, min_margin) = run_cases(&cases, bounds.jobs, |p| {
            case_strict(p.to_string(), p.bar_tensor_graded().defect(), -1)
        });
        VerifyReport {
            family: self.name().to_string(),
            range: format!("dim 2..{}", bounds.max_dim),
            cases_checked,
            violations,
            min_margin,
        }
    }
}
