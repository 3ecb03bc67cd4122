//! Exhaustive, duplicate-free enumeration of representations by total
//! dimension: integer partitions with parts `lambda + 1`, then sign splits
//! for the graded case. Enumeration order is fixed, so every verifier run
//! is reproducible.

use crate::rep::{GradedIrrep, GradedRep, Sign, UngradedRep};

/// All partitions of `n` into positive parts, each as a nonincreasing list,
/// largest first part first.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partition count by the Euler pentagonal recurrence; an independent check
/// on [`partitions`].
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
            k += 1;
        }
        p[m] = acc;
    }
    p[n] as u64
}

/// Every multiset of highest weights with total dimension exactly `n`.
pub fn enum_ungraded(n: u32) -> Vec<UngradedRep> {
    partitions(n)
        .into_iter()
        .map(|parts| {
            let mut r = UngradedRep::default();
            for part in parts {
                r.add(part - 1, 1);
            }
            r
        })
        .collect()
}

/// Filters on graded enumeration.
#[derive(Debug, Clone, Copy, Default)]
pub struct GradedConstraint {
    /// Graded self-duality: at every odd weight, equal `+` and `-`
    /// multiplicities (even weights are always self-dual).
    pub require_self_dual: bool,
    /// Equal even and odd dimensions.
    pub require_equal_parts: bool,
    pub require_nonzero: bool,
}

impl GradedConstraint {
    pub fn satisfied(&self, r: &GradedRep) -> bool {
        if self.require_nonzero && r.is_empty() {
            return false;
        }
        if self.require_equal_parts && r.dim_even() != r.dim_odd() {
            return false;
        }
        if self.require_self_dual && !r.is_self_dual() {
            return false;
        }
        true
    }
}

/// Every graded multiset of total dimension exactly `n` satisfying `c`,
/// each exactly once: one sign split per partition, plus-heavy splits first.
pub fn enum_graded(n: u32, c: &GradedConstraint) -> Vec<GradedRep> {
    let mut out = Vec::new();
    for parts in partitions(n) {
        // Collapse the partition to (part, multiplicity) in descending order.
        let mut distinct: Vec<(u32, u64)> = Vec::new();
        for part in parts {
            match distinct.last_mut() {
                Some((p, m)) if *p == part => *m += 1,
                _ => distinct.push((part, 1)),
            }
        }
        split_signs(&distinct, 0, &mut GradedRep::empty(), c, &mut out);
    }
    out
}

fn split_signs(
    distinct: &[(u32, u64)],
    i: usize,
    cur: &mut GradedRep,
    c: &GradedConstraint,
    out: &mut Vec<GradedRep>,
) {
    if i == distinct.len() {
        if c.satisfied(cur) {
            out.push(cur.clone());
        }
        return;
    }
    let (part, m) = distinct[i];
    let lambda = part - 1;
    for plus in (0..=m).rev() {
        let mut next = cur.clone();
        next.add(GradedIrrep::new(lambda, Sign::Plus), plus);
        next.add(GradedIrrep::new(lambda, Sign::Minus), m - plus);
        split_signs(distinct, i + 1, &mut next, c, out);
    }
}
