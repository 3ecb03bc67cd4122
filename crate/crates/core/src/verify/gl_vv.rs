//! Doubled general linear pair, checked through the graded correspondence:
//! graded maps into the pair amount to graded `pi` with equal even and odd
//! parts of size n, and the graded adjoint action is `pi (x) pi^*`. The
//! verifier checks `def(pi (x) pi^*) < 0` exhaustively for `n <= max_half`.

use super::{case_strict, enum_graded, run_cases, Bounds, GradedConstraint, Verifier, VerifyReport};
use crate::rep::GradedRep;

pub struct GlVv;

impl Verifier for GlVv {
    fn name(&self) -> &'static str {
        "gl-vv"
    }

    fn description(&self) -> &'static str {
        "def(pi (x) pi*) < 0 for every graded pi with dim_0 = dim_1 = n <= max-dim"
    }

    fn default_bounds(&self) -> Bounds {
        Bounds { max_dim: 6, max_lambda: 0, jobs: 1 }
    }

    fn run(&self, bounds: &Bounds) -> VerifyReport {
        let constraint = GradedConstraint {
            require_equal_parts: true,
            require_nonzero: true,
            ..Default::default()
        };
        let cases: Vec<GradedRep> = (1..=bounds.max_dim)
            .flat_map(|n| enum_graded(2 * n, &constraint))
            .collect();
        let (cases_checked, violations, min_margin) = run_cases(&cases, bounds.jobs, |p| {
            case_strict(p.to_string(), p.tensor(&p.dual()).defect(), 0)
        });
        VerifyReport {
            family: self.name().to_string(),
            range: format!("half-dim 1..{}", bounds.max_dim),
            cases_checked,
            violations,
            min_margin,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::Sign;

    #[test]
    fn standard_rep_case() {
        let p = GradedRep::irrep(1, Sign::Plus);
        // V(1,+) (x) V(1,-) = V(2,-) + V(0,+), defects -2 and 0.
        assert_eq!(
            p.tensor(&p.dual()),
            GradedRep::from_parts(&[(2, Sign::Minus, 1), (0, Sign::Plus, 1)])
        );
        assert_eq!(p.tensor(&p.dual()).defect(), -2);
    }

    #[test]
    fn split_pair_case() {
        let p = GradedRep::from_parts(&[(0, Sign::Plus, 1), (0, Sign::Minus, 1)]);
        assert_eq!(p.tensor(&p.dual()).defect(), -2);
    }

    #[test]
    fn exhaustive_small() {
        let report = GlVv.run(&Bounds { max_dim: 4, max_lambda: 0, jobs: 1 });
        assert!(report.passed(), "{report}");
    }
}
