//! For every nonzero graded `pi` with equal even and odd parts that is
//! isomorphic to its dual, the exterior square has strictly negative defect.
//! Only even total dimensions admit equal parts, so odd levels are empty.

use super::{case_strict, enum_graded, run_cases, Bounds, GradedConstraint, Verifier, VerifyReport};
use crate::rep::GradedRep;

pub struct OOxO;

impl Verifier for OOxO {
    fn name(&self) -> &'static str {
        "o-oxo"
    }

    fn description(&self) -> &'static str {
        "def(Lambda^2 pi) < 0 for every self-dual graded pi with equal parts, dim <= max-dim"
    }

    fn default_bounds(&self) -> Bounds {
        Bounds { max_dim: 12, max_lambda: 0, jobs: 1 }
    }

    fn run(&self, bounds: &Bounds) -> VerifyReport {
        let constraint = GradedConstraint {
            require_self_dual: true,
            require_equal_parts: true,
            require_nonzero: true,
        };
        let cases: Vec<GradedRep> = (1..=bounds.max_dim)
            .flat_map(|n| enum_graded(n, &constraint))
            .collect();
        let (cases_checked, violations, min_margin) = run_cases(&cases, bounds.jobs, |p| {
            case_strict(p.to_string(), p.wedge2().defect(), 0)
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
