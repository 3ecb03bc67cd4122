//! Formula engine against the matrix oracle. Every operation of the formal
//! calculus is recomputed on explicit matrices and decomposed back; both the
//! multiset and the defect must agree exactly.

use super::{enum_graded, enum_ungraded, run_cases, Bounds, CaseResult, GradedConstraint,
            Verifier, VerifyReport, Violation};
use crate::oracle::{self, MatrixRep};
use crate::rep::{GradedIrrep, GradedRep, Sign, UngradedRep};

pub struct OracleAgreement;

enum Case {
    Roundtrip(GradedRep),
    Dual(GradedIrrep),
    Tensor(GradedIrrep, GradedIrrep),
    Wedge2(GradedIrrep),
    BarSum(UngradedRep),
    BarTensor(UngradedRep),
}

fn irreps_up_to(max_lambda: u32) -> Vec<GradedIrrep> {
    let mut out = Vec::new();
    for l in 0..=max_lambda {
        out.push(GradedIrrep::new(l, Sign::Plus));
        out.push(GradedIrrep::new(l, Sign::Minus));
    }
    out
}

/// A fixed composite of dimension `target` built greedily from weights up to
/// `max_lambda`, alternating signs. Deterministic stand-in for "large" reps.
fn greedy_rep(target: u32, max_lambda: u32) -> GradedRep {
    let mut rep = GradedRep::empty();
    let mut remaining = u64::from(target);
    let mut count = 0u32;
    while remaining > 0 {
        let lambda = u32::min(max_lambda, (remaining - 1) as u32);
        let sign = if count % 2 == 0 { Sign::Plus } else { Sign::Minus };
        rep.add(GradedIrrep::new(lambda, sign), 1);
        remaining -= u64::from(lambda) + 1;
        count += 1;
    }
    rep
}

fn failed(case: String, got: i64, want: i64) -> CaseResult {
    CaseResult {
        margin: 0,
        violation: Some(Violation { case, defect: got, bound: want }),
    }
}

fn compare(case: String, formula_rep: &GradedRep, formula_def: i64, m: &MatrixRep) -> CaseResult {
    let oracle_rep = match oracle::decompose(m) {
        Ok(r) => r,
        Err(e) => {
            return failed(
                format!("{case}: oracle rejected the matrix model ({e})"),
                formula_def,
                0,
            )
        }
    };
    let oracle_def = match oracle::oracle_defect(m) {
        Ok(d) => d,
        Err(e) => return failed(format!("{case}: oracle defect failed ({e})"), formula_def, 0),
    };
    if &oracle_rep != formula_rep {
        return failed(
            format!("{case}: formula [{formula_rep}] vs oracle [{oracle_rep}]"),
            formula_def,
            oracle_def,
        );
    }
    if oracle_def != formula_def {
        return failed(format!("{case}: defect mismatch"), formula_def, oracle_def);
    }
    CaseResult { margin: 0, violation: None }
}

impl Verifier for OracleAgreement {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "formal calculus vs exact matrix oracle on duals, tensors, exterior squares, bar gradings and round-trips"
    }

    fn default_bounds(&self) -> Bounds {
        Bounds { max_dim: 40, max_lambda: 8, jobs: 1 }
    }

    fn run(&self, bounds: &Bounds) -> VerifyReport {
        let irreps = irreps_up_to(bounds.max_lambda);
        let mut cases = Vec::new();
        for (k, &a) in irreps.iter().enumerate() {
            cases.push(Case::Dual(a));
            cases.push(Case::Wedge2(a));
            for &b in &irreps[k..] {
                cases.push(Case::Tensor(a, b));
            }
        }
        for n in 1..=bounds.max_dim.min(8) {
            for p in enum_ungraded(n) {
                cases.push(Case::BarSum(p.clone()));
                cases.push(Case::BarTensor(p));
            }
        }
        for n in 1..=bounds.max_dim.min(12) {
            for r in enum_graded(n, &GradedConstraint::default()) {
                cases.push(Case::Roundtrip(r));
            }
        }
        let mut target = 13;
        while target <= bounds.max_dim {
            cases.push(Case::Roundtrip(greedy_rep(target, bounds.max_lambda)));
            target += 7;
        }

        let (cases_checked, violations, min_margin) =
            run_cases(&cases, bounds.jobs, |case| match case {
                Case::Roundtrip(r) => {
                    compare(format!("roundtrip({r})"), r, r.defect(), &oracle::materialize(r))
                }
                Case::Dual(a) => {
                    let formula = GradedRep::irrep(a.lambda, a.sign).dual();
                    let m = oracle::mdual(&oracle::build_irrep(a.lambda, a.sign));
                    compare(format!("dual({a})"), &formula, formula.defect(), &m)
                }
                Case::Tensor(a, b) => {
                    let formula =
                        GradedRep::irrep(a.lambda, a.sign).tensor(&GradedRep::irrep(b.lambda, b.sign));
                    let m = oracle::tprod(
                        &oracle::build_irrep(a.lambda, a.sign),
                        &oracle::build_irrep(b.lambda, b.sign),
                    );
                    compare(format!("tensor({a},{b})"), &formula, formula.defect(), &m)
                }
                Case::Wedge2(a) => {
                    let formula = GradedRep::irrep(a.lambda, a.sign).wedge2();
                    let m = oracle::mwedge2(&oracle::build_irrep(a.lambda, a.sign));
                    compare(format!("wedge2({a})"), &formula, formula.defect(), &m)
                }
                Case::BarSum(p) => {
                    let formula = p.bar_sum_graded();
                    let m = oracle::build_bar_sum(p);
                    compare(format!("barsum({p})"), &formula, formula.defect(), &m)
                }
                Case::BarTensor(p) => {
                    let formula = p.bar_tensor_graded();
                    let m = oracle::build_bar_tensor(p);
                    compare(format!("bartensor({p})"), &formula, formula.defect(), &m)
                }
            });
        VerifyReport {
            family: self.name().to_string(),
            range: format!("lambda 0..{}, dim 1..{}", bounds.max_lambda, bounds.max_dim),
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
    fn greedy_reps_hit_the_target_dimension() {
        for target in [13, 20, 27, 40] {
            assert_eq!(greedy_rep(target, 8).dim(), u64::from(target));
        }
    }

    #[test]
    fn small_grid_agrees() {
        let report = OracleAgreement.run(&Bounds { max_dim: 5, max_lambda: 3, jobs: 1 });
        assert!(report.passed(), "{report}");
    }
}
