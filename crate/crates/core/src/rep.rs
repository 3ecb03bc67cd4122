//! The formal side of the calculus: graded irreducibles `V(lambda, w)`,
//! finite multisets of them, and the operations dual, tensor, exterior
//! square and defect, all in exact integer arithmetic.
//!
//! A graded representation of sl2 lives on a Z/2Z-graded space; `h`
//! preserves parity while `e` and `f` reverse it. An irreducible one is
//! determined by its highest weight `lambda` together with the sign
//! `w = (-1)^p`, where `p` is the parity of the highest weight vector.
//! Semisimplicity makes every graded representation a finite multiset of
//! such irreducibles, which is exactly what [`GradedRep`] stores.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;

/// Sign of a highest weight vector: `Plus` for even parity, `Minus` for odd.
///
/// `Plus` sorts before `Minus`; together with ascending `lambda` this fixes
/// the canonical ordering used for equality, hashing and display.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn parity(self) -> u8 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }

    pub fn from_parity(p: u8) -> Sign {
        if p % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Multiplies by `(-1)^k`.
    pub fn twist(self, k: u32) -> Sign {
        if k % 2 == 0 {
            self
        } else {
            self.mul(Sign::Minus)
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// The irreducible graded representation `V(lambda, w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedIrrep {
    pub lambda: u32,
    pub sign: Sign,
}

impl GradedIrrep {
    pub fn new(lambda: u32, sign: Sign) -> GradedIrrep {
        GradedIrrep { lambda, sign }
    }

    pub fn dim(&self) -> u64 {
        u64::from(self.lambda) + 1
    }

    /// Weight vectors alternate parity starting from the highest one, so the
    /// even part has `ceil((lambda+1)/2)` dimensions when `w = +1` and
    /// `floor((lambda+1)/2)` when `w = -1`.
    pub fn dim_even(&self) -> u64 {
        match self.sign {
            Sign::Plus => (u64::from(self.lambda) + 2) / 2,
            Sign::Minus => (u64::from(self.lambda) + 1) / 2,
        }
    }

    pub fn dim_odd(&self) -> u64 {
        self.dim() - self.dim_even()
    }

    /// `V(lambda, w)^* = V(lambda, w * (-1)^lambda)`.
    pub fn dual(&self) -> GradedIrrep {
        GradedIrrep::new(self.lambda, self.sign.twist(self.lambda))
    }

    /// Defect of a single irreducible: `(w(lambda+1) - 1)/2` for even
    /// `lambda`, `(w*lambda - 1)/2` for odd. Both are exact integers.
    pub fn defect(&self) -> i64 {
        let l = i64::from(self.lambda);
        let w = self.sign.value();
        if l % 2 == 0 {
            (w * (l + 1) - 1) / 2
        } else {
            (w * l - 1) / 2
        }
    }
}

impl fmt::Display for GradedIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V({},{})", self.lambda, self.sign)
    }
}

/// A finite multiset of graded irreducibles. The empty multiset (the zero
/// representation) is a legal value with defect 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedRep {
    mult: BTreeMap<GradedIrrep, u64>,
}

impl GradedRep {
    pub fn empty() -> GradedRep {
        GradedRep::default()
    }

    pub fn irrep(lambda: u32, sign: Sign) -> GradedRep {
        let mut r = GradedRep::default();
        r.add(GradedIrrep::new(lambda, sign), 1);
        r
    }

    pub fn from_parts(parts: &[(u32, Sign, u64)]) -> GradedRep {
        let mut r = GradedRep::default();
        for &(lambda, sign, m) in parts {
            r.add(GradedIrrep::new(lambda, sign), m);
        }
        r
    }

    /// Adds `m` copies of `irrep`; zero multiplicities are never stored.
    pub fn add(&mut self, irrep: GradedIrrep, m: u64) {
        if m > 0 {
            *self.mult.entry(irrep).or_insert(0) += m;
        }
    }

    pub fn mult_of(&self, irrep: GradedIrrep) -> u64 {
        self.mult.get(&irrep).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Summands in canonical order (ascending lambda, `+` before `-`).
    pub fn iter(&self) -> impl Iterator<Item = (GradedIrrep, u64)> + '_ {
        self.mult.iter().map(|(&i, &m)| (i, m))
    }

    pub fn dim(&self) -> u64 {
        self.iter().map(|(i, m)| i.dim() * m).sum()
    }

    pub fn dim_even(&self) -> u64 {
        self.iter().map(|(i, m)| i.dim_even() * m).sum()
    }

    pub fn dim_odd(&self) -> u64 {
        self.iter().map(|(i, m)| i.dim_odd() * m).sum()
    }

    /// Multiset union (direct sum).
    pub fn union(&self, other: &GradedRep) -> GradedRep {
        let mut out = self.clone();
        for (i, m) in other.iter() {
            out.add(i, m);
        }
        out
    }

    pub fn scaled(&self, k: u64) -> GradedRep {
        let mut out = GradedRep::default();
        for (i, m) in self.iter() {
            out.add(i, m * k);
        }
        out
    }

    /// Applies duality summand-wise; an involution.
    pub fn dual(&self) -> GradedRep {
        let mut out = GradedRep::default();
        for (i, m) in self.iter() {
            out.add(i.dual(), m);
        }
        out
    }

    /// Clebsch-Gordan with signs:
    /// `V(l1,w1) (x) V(l2,w2) = sum_i V(l1+l2-2i, w1 w2 (-1)^i)` for
    /// `i = 0..min(l1,l2)`, extended bilinearly by multiplicity-weighted
    /// convolution (copies are never expanded).
    pub fn tensor(&self, other: &GradedRep) -> GradedRep {
        let mut out = GradedRep::default();
        for (a, ma) in self.iter() {
            for (b, mb) in other.iter() {
                add_irrep_tensor(&mut out, a, b, ma * mb);
            }
        }
        out
    }

    /// Exterior square. For a single irreducible,
    /// `Lambda^2 V(l,w) = sum_i V(2l-4i-2, -1)` over `i = 0..floor((l-1)/2)`;
    /// a multiplicity-`m` summand contributes `m` copies of that plus
    /// `C(m,2)` copies of the plain tensor square, and distinct summands
    /// contribute their pairwise tensor products.
    pub fn wedge2(&self) -> GradedRep {
        let summands: Vec<(GradedIrrep, u64)> = self.iter().collect();
        let mut out = GradedRep::default();
        for (k, &(a, m)) in summands.iter().enumerate() {
            if a.lambda >= 1 {
                for i in 0..=(a.lambda - 1) / 2 {
                    out.add(
                        GradedIrrep::new(2 * a.lambda - 4 * i - 2, Sign::Minus),
                        m,
                    );
                }
            }
            if m >= 2 {
                add_irrep_tensor(&mut out, a, a, m * (m - 1) / 2);
            }
            for &(b, n) in &summands[k + 1..] {
                add_irrep_tensor(&mut out, a, b, m * n);
            }
        }
        out
    }

    /// Total defect: the sum of the per-irreducible closed form, weighted by
    /// multiplicity. Always an exact integer.
    pub fn defect(&self) -> i64 {
        self.iter().map(|(i, m)| i.defect() * m as i64).sum()
    }

    /// Graded self-duality. Even-lambda summands are self-dual; odd-lambda
    /// duals flip the sign, so the test is equality of `+` and `-`
    /// multiplicities at every odd lambda.
    pub fn is_self_dual(&self) -> bool {
        self.iter().all(|(i, m)| {
            i.lambda % 2 == 0 || self.mult_of(GradedIrrep::new(i.lambda, i.sign.mul(Sign::Minus))) == m
        })
    }
}

fn add_irrep_tensor(out: &mut GradedRep, a: GradedIrrep, b: GradedIrrep, m: u64) {
    if m == 0 {
        return;
    }
    let lo = a.lambda.min(b.lambda);
    for i in 0..=lo {
        out.add(
            GradedIrrep::new(a.lambda + b.lambda - 2 * i, a.sign.mul(b.sign).twist(i)),
            m,
        );
    }
}

impl fmt::Display for GradedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, m)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// An ungraded representation: a multiset of highest weights. Duality is
/// invisible here (`V(lambda)` is self-dual as an ungraded module), so only
/// the weights are stored; the sign-flipped partner used by the two special
/// gradings below is carried implicitly.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UngradedRep {
    mult: BTreeMap<u32, u64>,
}

impl UngradedRep {
    pub fn irrep(lambda: u32) -> UngradedRep {
        UngradedRep::from_parts(&[(lambda, 1)])
    }

    pub fn from_parts(parts: &[(u32, u64)]) -> UngradedRep {
        let mut r = UngradedRep::default();
        for &(lambda, m) in parts {
            r.add(lambda, m);
        }
        r
    }

    pub fn add(&mut self, lambda: u32, m: u64) {
        if m > 0 {
            *self.mult.entry(lambda).or_insert(0) += m;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.mult.iter().map(|(&l, &m)| (l, m))
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn dim(&self) -> u64 {
        self.iter().map(|(l, m)| (u64::from(l) + 1) * m).sum()
    }

    /// The grading on `pi (+) pi-bar` induced by the swap involution
    /// `s(v (+) w) = w (+) v`. Each copy of `V(lambda)` splits into one
    /// highest weight vector per parity, so the result is
    /// `V(lambda,+) (+) V(lambda,-)` per copy.
    pub fn bar_sum_graded(&self) -> GradedRep {
        let mut out = GradedRep::default();
        for (l, m) in self.iter() {
            out.add(GradedIrrep::new(l, Sign::Plus), m);
            out.add(GradedIrrep::new(l, Sign::Minus), m);
        }
        out
    }

    /// The grading on `pi (x) pi-bar` induced by `s(v (x) w) = -w (x) v`.
    ///
    /// A diagonal block `V(lambda) (x) V(lambda)-bar` decomposes as
    /// `sum_{i=0..lambda} V(2*lambda-2i, -1)`. Every off-diagonal pair of
    /// blocks (distinct weights, or distinct copies of the same weight) is
    /// swapped by `s` and contributes each ungraded Clebsch-Gordan
    /// constituent once per parity.
    pub fn bar_tensor_graded(&self) -> GradedRep {
        let summands: Vec<(u32, u64)> = self.iter().collect();
        let mut out = GradedRep::default();
        for (k, &(l, m)) in summands.iter().enumerate() {
            for i in 0..=l {
                out.add(GradedIrrep::new(2 * l - 2 * i, Sign::Minus), m);
            }
            if m >= 2 {
                add_both_parities(&mut out, l, l, m * (m - 1) / 2);
            }
            for &(l2, n) in &summands[k + 1..] {
                add_both_parities(&mut out, l, l2, m * n);
            }
        }
        out
    }
}

fn add_both_parities(out: &mut GradedRep, l1: u32, l2: u32, m: u64) {
    for i in 0..=l1.min(l2) {
        let nu = l1 + l2 - 2 * i;
        out.add(GradedIrrep::new(nu, Sign::Plus), m);
        out.add(GradedIrrep::new(nu, Sign::Minus), m);
    }
}

impl fmt::Display for UngradedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, m)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "V({l})")?;
        }
        Ok(())
    }
}

/// Closed form for `def(V(l1,w1) (x) V(l2,w2))`, dispatching on the parities
/// of the weights. Agrees with expanding the tensor product and summing
/// per-irreducible defects; the verifiers check this exhaustively.
pub fn closed_form_tensor_defect(l1: u32, w1: Sign, l2: u32, w2: Sign) -> i64 {
    let lo = i64::from(l1.min(l2));
    let hi = i64::from(l1.max(l2));
    let ww = w1.value() * w2.value();
    let x: Rational64 = if l1 % 2 != l2 % 2 {
        let eps = if lo % 2 == 0 { 1 } else { -1 };
        let inner = hi + lo + 1 + eps * ((hi - lo) - 1);
        Rational64::from_integer(lo + 1) - Rational64::new(ww * inner, 2)
    } else if l1 % 2 == 0 {
        Rational64::from_integer(lo + 1 - ww * (hi + 1))
    } else {
        Rational64::from_integer((lo + 1) * (1 - ww))
    };
    let v = -x / 2;
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// Closed form for `def(Lambda^2 V(l,w))`:
/// `-l^2/4 - l/2 - (1 + (-1)^(l+1))/8`, independent of the sign. The value
/// is rational term by term but always sums to an integer.
pub fn closed_form_wedge2_defect(l: u32, _w: Sign) -> Rational64 {
    let l = i64::from(l);
    let parity_term = if l % 2 == 0 { 0 } else { 2 };
    -Rational64::new(l * l, 4) - Rational64::new(l, 2) - Rational64::new(parity_term, 8)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(l: u32, s: Sign) -> GradedRep {
        GradedRep::irrep(l, s)
    }

    #[test]
    fn dual_examples() {
        assert_eq!(v(0, Sign::Plus).dual(), v(0, Sign::Plus));
        assert_eq!(v(3, Sign::Plus).dual(), v(3, Sign::Minus));
        let r = GradedRep::from_parts(&[(2, Sign::Minus, 2)]);
        assert_eq!(r.dual(), r);
    }

    #[test]
    fn dual_is_involution() {
        let r = GradedRep::from_parts(&[(0, Sign::Plus, 3), (1, Sign::Minus, 2), (5, Sign::Plus, 1)]);
        assert_eq!(r.dual().dual(), r);
    }

    #[test]
    fn tensor_examples() {
        let triv = v(0, Sign::Plus);
        let r = GradedRep::from_parts(&[(2, Sign::Minus, 1), (4, Sign::Plus, 3)]);
        assert_eq!(triv.tensor(&r), r);

        assert_eq!(
            v(1, Sign::Plus).tensor(&v(1, Sign::Plus)),
            GradedRep::from_parts(&[(2, Sign::Plus, 1), (0, Sign::Minus, 1)])
        );
        assert_eq!(
            v(2, Sign::Plus).tensor(&v(1, Sign::Minus)),
            GradedRep::from_parts(&[(3, Sign::Minus, 1), (1, Sign::Plus, 1)])
        );
    }

    #[test]
    fn tensor_dim_is_multiplicative() {
        let a = GradedRep::from_parts(&[(3, Sign::Minus, 2), (1, Sign::Plus, 1)]);
        let b = GradedRep::from_parts(&[(2, Sign::Plus, 1), (0, Sign::Minus, 4)]);
        assert_eq!(a.tensor(&b).dim(), a.dim() * b.dim());
    }

    #[test]
    fn wedge2_examples() {
        assert_eq!(v(0, Sign::Plus).wedge2(), GradedRep::empty());
        assert_eq!(
            v(3, Sign::Plus).wedge2(),
            GradedRep::from_parts(&[(4, Sign::Minus, 1), (0, Sign::Minus, 1)])
        );
        let two_copies = GradedRep::from_parts(&[(1, Sign::Plus, 2)]);
        assert_eq!(
            two_copies.wedge2(),
            GradedRep::from_parts(&[(2, Sign::Plus, 1), (0, Sign::Minus, 3)])
        );
    }

    #[test]
    fn wedge2_dim_is_binomial() {
        let r = GradedRep::from_parts(&[(2, Sign::Minus, 2), (3, Sign::Plus, 1)]);
        let d = r.dim();
        assert_eq!(r.wedge2().dim(), d * (d - 1) / 2);
    }

    #[test]
    fn defect_examples() {
        assert_eq!(v(0, Sign::Plus).defect(), 0);
        assert_eq!(v(2, Sign::Minus).defect(), -2);
        assert_eq!(
            GradedRep::from_parts(&[(1, Sign::Plus, 1), (1, Sign::Minus, 1)]).defect(),
            -1
        );
    }

    #[test]
    fn defect_additive_over_union() {
        let a = GradedRep::from_parts(&[(4, Sign::Minus, 2), (1, Sign::Plus, 1)]);
        let b = GradedRep::from_parts(&[(2, Sign::Plus, 3)]);
        assert_eq!(a.union(&b).defect(), a.defect() + b.defect());
    }

    #[test]
    fn bar_sum_examples() {
        assert_eq!(
            UngradedRep::irrep(0).bar_sum_graded(),
            GradedRep::from_parts(&[(0, Sign::Plus, 1), (0, Sign::Minus, 1)])
        );
        assert_eq!(
            UngradedRep::irrep(1).bar_sum_graded(),
            GradedRep::from_parts(&[(1, Sign::Plus, 1), (1, Sign::Minus, 1)])
        );
        assert_eq!(
            UngradedRep::from_parts(&[(2, 2)]).bar_sum_graded(),
            GradedRep::from_parts(&[(2, Sign::Plus, 2), (2, Sign::Minus, 2)])
        );
    }

    #[test]
    fn bar_sum_has_equal_parts() {
        let p = UngradedRep::from_parts(&[(0, 2), (3, 1), (4, 1)]);
        let g = p.bar_sum_graded();
        assert_eq!(g.dim_even(), p.dim());
        assert_eq!(g.dim_odd(), p.dim());
    }

    #[test]
    fn bar_tensor_examples() {
        assert_eq!(
            UngradedRep::irrep(0).bar_tensor_graded(),
            GradedRep::from_parts(&[(0, Sign::Minus, 1)])
        );
        assert_eq!(
            UngradedRep::irrep(3).bar_tensor_graded(),
            GradedRep::from_parts(&[
                (6, Sign::Minus, 1),
                (4, Sign::Minus, 1),
                (2, Sign::Minus, 1),
                (0, Sign::Minus, 1),
            ])
        );
        assert_eq!(
            UngradedRep::from_parts(&[(1, 1), (0, 1)]).bar_tensor_graded(),
            GradedRep::from_parts(&[
                (2, Sign::Minus, 1),
                (0, Sign::Minus, 2),
                (1, Sign::Plus, 1),
                (1, Sign::Minus, 1),
            ])
        );
    }

    #[test]
    fn bar_tensor_dim_is_square() {
        let p = UngradedRep::from_parts(&[(2, 2), (1, 1), (0, 3)]);
        assert_eq!(p.bar_tensor_graded().dim(), p.dim() * p.dim());
    }

    #[test]
    fn closed_form_tensor_defect_examples() {
        assert_eq!(closed_form_tensor_defect(0, Sign::Plus, 0, Sign::Plus), 0);
        // lambda1 = lambda2 = 2, both plus: expansion gives
        // V(4,+) + V(2,-) + V(0,+) with defects 2, -2, 0.
        let expanded = v(2, Sign::Plus).tensor(&v(2, Sign::Plus)).defect();
        assert_eq!(expanded, 0);
        assert_eq!(closed_form_tensor_defect(2, Sign::Plus, 2, Sign::Plus), expanded);
        // (3,+) x (1,-): V(4,-) + V(2,+), defects -3 and 1.
        let expanded = v(3, Sign::Plus).tensor(&v(1, Sign::Minus)).defect();
        assert_eq!(expanded, -2);
        assert_eq!(closed_form_tensor_defect(3, Sign::Plus, 1, Sign::Minus), expanded);
    }

    #[test]
    fn closed_form_wedge2_defect_examples() {
        use num_traits::Zero;
        assert!(closed_form_wedge2_defect(0, Sign::Plus).is_zero());
        assert_eq!(
            closed_form_wedge2_defect(1, Sign::Minus),
            Rational64::from_integer(-1)
        );
        // Lambda^2 V(3,w) = V(4,-) + V(0,-), defects -3 and -1.
        assert_eq!(
            closed_form_wedge2_defect(3, Sign::Plus),
            Rational64::from_integer(-4)
        );
        assert_eq!(v(3, Sign::Plus).wedge2().defect(), -4);
    }

    #[test]
    fn self_duality_test() {
        assert!(GradedRep::from_parts(&[(2, Sign::Minus, 3)]).is_self_dual());
        assert!(!v(1, Sign::Plus).is_self_dual());
        assert!(GradedRep::from_parts(&[(1, Sign::Plus, 2), (1, Sign::Minus, 2)]).is_self_dual());
    }

    #[test]
    fn display_is_canonical() {
        let r = GradedRep::from_parts(&[(2, Sign::Minus, 1), (0, Sign::Minus, 3), (2, Sign::Plus, 1)]);
        assert_eq!(r.to_string(), "3*V(0,-) + V(2,+) + V(2,-)");
        assert_eq!(GradedRep::empty().to_string(), "0");
        assert_eq!(UngradedRep::from_parts(&[(0, 2), (3, 1)]).to_string(), "2*V(0) + V(3)");
    }
}
