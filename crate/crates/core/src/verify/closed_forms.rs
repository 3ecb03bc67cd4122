//! The closed forms for tensor and exterior-square defects against full
//! expansion, for all weights up to `max_lambda` and all signs.

use super::{case_equal, run_cases, Bounds, Verifier, VerifyReport};
use crate::rep::{closed_form_tensor_defect, closed_form_wedge2_defect, GradedRep, Sign};

pub struct ClosedForms;

enum Case {
    Tensor(u32, Sign, u32, Sign),
    Wedge2(u32, Sign),
}

impl Verifier for ClosedForms {
    fn name(&self) -> &'static str {
        "closed-forms"
    }

    fn description(&self) -> &'static str {
        "closed-form tensor / exterior-square defects agree with full expansion"
    }

    fn default_bounds(&self) -> Bounds {
        Bounds { max_dim: 0, max_lambda: 10, jobs: 1 }
    }

    fn run(&self, bounds: &Bounds) -> VerifyReport {
        let signs = [Sign::Plus, Sign::Minus];
        let mut cases = Vec::new();
        for l1 in 0..=bounds.max_lambda {
            for w1 in signs {
                for l2 in l1..=bounds.max_lambda {
                    for w2 in signs {
                        if l1 == l2 && w2 < w1 {
                            continue;
                        }
                        cases.push(Case::Tensor(l1, w1, l2, w2));
                    }
                }
            }
        }
        for l in 0..=bounds.max_lambda {
            for w in signs {
                cases.push(Case::Wedge2(l, w));
            }
        }
        let (cases_checked, violations, min_margin) =
            run_cases(&cases, bounds.jobs, |case| match *case {
                Case::Tensor(l1, w1, l2, w2) => {
                    let expanded = GradedRep::irrep(l1, w1)
                        .tensor(&GradedRep::irrep(l2, w2))
                        .defect();
                    case_equal(
                        format!("tensor(V({l1},{w1}),V({l2},{w2}))"),
                        closed_form_tensor_defect(l1, w1, l2, w2),
                        expanded,
                    )
                }
                Case::Wedge2(l, w) => {
                    let formula = closed_form_wedge2_defect(l, w);
                    debug_assert!(formula.is_integer());
                    case_equal(
                        format!("wedge2(V({l},{w}))"),
                        formula.to_integer(),
                        GradedRep::irrep(l, w).wedge2().defect(),
                    )
                }
            });
        VerifyReport {
            family: self.name().to_string(),
            range: format!("lambda 0..{}", bounds.max_lambda),
            cases_checked,
            violations,
            min_margin,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_up_to_lambda_ten() {
        let report = ClosedForms.run(&Bounds { max_dim: 0, max_lambda: 10, jobs: 1 });
        assert!(report.passed(), "{report}");
    }
}
