//! Brute-force referee for the formal calculus: graded representations as
//! explicit exact-rational matrix triples `(E, H, F)` with a parity vector,
//! decomposition back into multisets of irreducibles by highest-weight
//! analysis, and the defect computed literally from its definition
//! `Tr(h on the even part of ker e) - dim(odd part)`.

pub mod mat;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rep::{GradedIrrep, GradedRep, Sign, UngradedRep};
use mat::{rat, Mat};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("not a graded sl2 rep: {0}")]
    NotGradedRep(String),
}

fn bad(msg: impl Into<String>) -> OracleError {
    OracleError::NotGradedRep(msg.into())
}

/// A graded representation given by matrices in some basis where the parity
/// of every basis vector is known.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub e: Mat,
    pub h: Mat,
    pub f: Mat,
    pub parity: Vec<u8>,
}

impl MatrixRep {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// Checks the commutation relations `[h,e] = 2e`, `[h,f] = -2f`,
    /// `[e,f] = h` exactly, and that `h` preserves the parity blocks while
    /// `e` and `f` exchange them.
    pub fn validate(&self) -> Result<(), OracleError> {
        let n = self.dim();
        for (name, m) in [("e", &self.e), ("h", &self.h), ("f", &self.f)] {
            if m.rows() != n || m.cols() != n {
                return Err(bad(format!("{name} is not {n}x{n}")));
            }
        }
        let comm = |a: &Mat, b: &Mat| a.mul(b).sub(&b.mul(a));
        if comm(&self.h, &self.e) != self.e.scale(&rat(2)) {
            return Err(bad("[h,e] != 2e"));
        }
        if comm(&self.h, &self.f) != self.f.scale(&rat(-2)) {
            return Err(bad("[h,f] != -2f"));
        }
        if comm(&self.e, &self.f) != self.h {
            return Err(bad("[e,f] != h"));
        }
        for i in 0..n {
            for j in 0..n {
                let same = self.parity[i] == self.parity[j];
                if !self.h.at(i, j).is_zero() && !same {
                    return Err(bad("h does not preserve the grading"));
                }
                if (!self.e.at(i, j).is_zero() || !self.f.at(i, j).is_zero()) && same {
                    return Err(bad("e or f does not reverse the grading"));
                }
            }
        }
        Ok(())
    }
}

/// The irreducible `V(lambda, w)` in the weight basis `v_0..v_lambda`, with
/// `H v_k = (lambda - 2k) v_k`, `F v_k = v_{k+1}` and
/// `E v_k = k (lambda - k + 1) v_{k-1}`. All entries are integers.
pub fn build_irrep(lambda: u32, sign: Sign) -> MatrixRep {
    let n = lambda as usize + 1;
    let l = i64::from(lambda);
    let h = Mat::from_i64_fn(n, n, |i, j| if i == j { l - 2 * i as i64 } else { 0 });
    let f = Mat::from_i64_fn(n, n, |i, j| u64::from(i == j + 1) as i64);
    let e = Mat::from_i64_fn(n, n, |i, j| {
        if j == i + 1 {
            let k = j as i64;
            k * (l - k + 1)
        } else {
            0
        }
    });
    let p0 = sign.parity();
    let parity = (0..n).map(|k| (p0 + k as u8) % 2).collect();
    MatrixRep { e, h, f, parity }
}

/// Block-diagonal direct sum.
pub fn dsum(a: &MatrixRep, b: &MatrixRep) -> MatrixRep {
    let mut parity = a.parity.clone();
    parity.extend_from_slice(&b.parity);
    MatrixRep {
        e: a.e.block_diag(&b.e),
        h: a.h.block_diag(&b.h),
        f: a.f.block_diag(&b.f),
        parity,
    }
}

/// Tensor product: `X -> X (x) I + I (x) X`, with parities added mod 2.
pub fn tprod(a: &MatrixRep, b: &MatrixRep) -> MatrixRep {
    let ia = Mat::identity(a.dim());
    let ib = Mat::identity(b.dim());
    let lift = |x: &Mat, y: &Mat| x.kron(&ib).add(&ia.kron(y));
    let mut parity = Vec::with_capacity(a.dim() * b.dim());
    for &pa in &a.parity {
        for &pb in &b.parity {
            parity.push((pa + pb) % 2);
        }
    }
    MatrixRep {
        e: lift(&a.e, &b.e),
        h: lift(&a.h, &b.h),
        f: lift(&a.f, &b.f),
        parity,
    }
}

/// Dual representation: `X -> -X^t`, parities unchanged.
pub fn mdual(a: &MatrixRep) -> MatrixRep {
    MatrixRep {
        e: a.e.transpose().neg(),
        h: a.h.transpose().neg(),
        f: a.f.transpose().neg(),
        parity: a.parity.clone(),
    }
}

/// Exterior square: the induced action on the antisymmetric subspace of
/// `a (x) a`, in the basis `e_i ^ e_j` with `i < j`.
pub fn mwedge2(a: &MatrixRep) -> MatrixRep {
    let n = a.dim();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut index = vec![vec![usize::MAX; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = k;
    }
    let act = |x: &Mat| {
        let mut out = Mat::zeros(pairs.len(), pairs.len());
        let mut add = |out: &mut Mat, row_i: usize, row_j: usize, col: usize, c: &num_rational::BigRational| {
            if row_i == row_j {
                return;
            }
            let (lo, hi, flip) = if row_i < row_j {
                (row_i, row_j, false)
            } else {
                (row_j, row_i, true)
            };
            let cur = out.at(index[lo][hi], col).clone();
            let v = if flip { cur - c } else { cur + c };
            out.set(index[lo][hi], col, v);
        };
        for (col, &(i, j)) in pairs.iter().enumerate() {
            for k in 0..n {
                let c = x.at(k, i);
                if !c.is_zero() {
                    add(&mut out, k, j, col, c);
                }
            }
            for k in 0..n {
                let c = x.at(k, j);
                if !c.is_zero() {
                    add(&mut out, i, k, col, c);
                }
            }
        }
        out
    };
    let parity = pairs
        .iter()
        .map(|&(i, j)| (a.parity[i] + a.parity[j]) % 2)
        .collect();
    MatrixRep {
        e: act(&a.e),
        h: act(&a.h),
        f: act(&a.f),
        parity,
    }
}

/// Builds the matrix model of a formal multiset, in canonical order.
pub fn materialize(r: &GradedRep) -> MatrixRep {
    let mut out = MatrixRep {
        e: Mat::zeros(0, 0),
        h: Mat::zeros(0, 0),
        f: Mat::zeros(0, 0),
        parity: Vec::new(),
    };
    for (irrep, m) in r.iter() {
        let block = build_irrep(irrep.lambda, irrep.sign);
        for _ in 0..m {
            out = dsum(&out, &block);
        }
    }
    out
}

/// Ungraded matrix model of a weight multiset (parities all zero, unused).
fn materialize_ungraded(p: &UngradedRep) -> MatrixRep {
    let mut out = MatrixRep {
        e: Mat::zeros(0, 0),
        h: Mat::zeros(0, 0),
        f: Mat::zeros(0, 0),
        parity: Vec::new(),
    };
    for (l, m) in p.iter() {
        let block = build_irrep(l, Sign::Plus);
        for _ in 0..m {
            out = dsum(&out, &block);
        }
    }
    out
}

/// Regrades a representation by an involution `s` that commutes with `h`
/// and anticommutes with `e` and `f`: the fixed space of `s` becomes the
/// even part, its `-1` eigenspace the odd part.
fn grade_by_involution(e: Mat, h: Mat, f: Mat, s: &Mat) -> MatrixRep {
    let n = e.rows();
    debug_assert_eq!(s.mul(s), Mat::identity(n));
    debug_assert_eq!(s.mul(&h), h.mul(s));
    debug_assert_eq!(s.mul(&e), e.mul(s).neg());
    debug_assert_eq!(s.mul(&f), f.mul(s).neg());
    let fixed = s.sub(&Mat::identity(n)).kernel();
    let anti = s.add(&Mat::identity(n)).kernel();
    let k0 = fixed.cols();
    let p = fixed.hstack(&anti);
    let pinv = p.inverse().expect("eigenbasis of an involution is invertible");
    let conj = |x: &Mat| pinv.mul(x).mul(&p);
    let mut parity = vec![0u8; k0];
    parity.extend(std::iter::repeat(1).take(n - k0));
    MatrixRep {
        e: conj(&e),
        h: conj(&h),
        f: conj(&f),
        parity,
    }
}

/// `pi (+) pi-bar` graded by the swap `s(v (+) w) = w (+) v`, where `pi-bar`
/// negates `e` and `f`.
pub fn build_bar_sum(p: &UngradedRep) -> MatrixRep {
    let a = materialize_ungraded(p);
    let m = a.dim();
    let e = a.e.block_diag(&a.e.neg());
    let h = a.h.block_diag(&a.h);
    let f = a.f.block_diag(&a.f.neg());
    let mut s = Mat::zeros(2 * m, 2 * m);
    for i in 0..m {
        s.set(i, m + i, rat(1));
        s.set(m + i, i, rat(1));
    }
    grade_by_involution(e, h, f, &s)
}

/// `pi (x) pi-bar` graded by `s(v (x) w) = -w (x) v`.
pub fn build_bar_tensor(p: &UngradedRep) -> MatrixRep {
    let a = materialize_ungraded(p);
    let m = a.dim();
    let im = Mat::identity(m);
    let e = a.e.kron(&im).sub(&im.kron(&a.e));
    let h = a.h.kron(&im).add(&im.kron(&a.h));
    let f = a.f.kron(&im).sub(&im.kron(&a.f));
    let mut s = Mat::zeros(m * m, m * m);
    for i in 0..m {
        for j in 0..m {
            s.set(j * m + i, i * m + j, rat(-1));
        }
    }
    grade_by_involution(e, h, f, &s)
}

/// The kernel of `e` intersected with one parity block, lifted back to
/// coordinates of the full space. Columns form a basis.
fn graded_kernel_of_e(m: &MatrixRep, p: u8) -> (Mat, Vec<usize>) {
    let n = m.dim();
    let idx: Vec<usize> = (0..n).filter(|&i| m.parity[i] == p).collect();
    if idx.is_empty() {
        return (Mat::zeros(n, 0), idx);
    }
    let ker = m.e.select_columns(&idx).kernel();
    let mut lifted = Mat::zeros(n, ker.cols());
    for (row, &i) in idx.iter().enumerate() {
        for c in 0..ker.cols() {
            lifted.set(i, c, ker.at(row, c).clone());
        }
    }
    (lifted, idx)
}

/// Integer eigenvalue decomposition of `h` restricted to an invariant
/// subspace, by exact kernel tests over the candidate range `-n..=n`.
fn integer_eigen_multiplicities(t: &Mat, n: usize) -> Result<Vec<(i64, usize)>, OracleError> {
    let k = t.rows();
    let mut found = 0;
    let mut out = Vec::new();
    for cand in -(n as i64)..=(n as i64) {
        let shifted = t.sub(&Mat::identity(k).scale(&rat(cand)));
        let mult = shifted.kernel().cols();
        if mult > 0 {
            out.push((cand, mult));
            found += mult;
        }
    }
    if found != k {
        return Err(bad(
            "h is not diagonalizable with integer eigenvalues on ker e",
        ));
    }
    Ok(out)
}

/// Decomposes a matrix model into its multiset of graded irreducibles.
///
/// The highest weights are the eigenvalues of `h` on `ker e`; gradedness lets
/// us intersect `ker e` with each parity block first, so every highest weight
/// vector found is parity-homogeneous and its parity determines the sign.
pub fn decompose(m: &MatrixRep) -> Result<GradedRep, OracleError> {
    m.validate()?;
    let n = m.dim();
    let mut out = GradedRep::empty();
    let mut total: u64 = 0;
    for p in [0u8, 1] {
        let (basis, _) = graded_kernel_of_e(m, p);
        if basis.cols() == 0 {
            continue;
        }
        let t = Mat::solve_in_span(&basis, &m.h.mul(&basis))
            .ok_or_else(|| bad("h does not stabilize ker e within a parity block"))?;
        for (lambda, mult) in integer_eigen_multiplicities(&t, n)? {
            if lambda < 0 {
                return Err(bad("negative highest weight in ker e"));
            }
            out.add(GradedIrrep::new(lambda as u32, Sign::from_parity(p)), mult as u64);
            total += (lambda as u64 + 1) * mult as u64;
        }
    }
    if total != n as u64 {
        return Err(bad("highest weight spaces do not account for the dimension"));
    }
    Ok(out)
}

/// The defect computed literally: the trace of `h` on the even part of
/// `ker e`, minus the dimension of the odd part.
pub fn oracle_defect(m: &MatrixRep) -> Result<i64, OracleError> {
    m.validate()?;
    let dim_odd = m.parity.iter().filter(|&&p| p == 1).count() as i64;
    let (basis, _) = graded_kernel_of_e(m, 0);
    let tr = if basis.cols() == 0 {
        num_rational::BigRational::zero()
    } else {
        Mat::solve_in_span(&basis, &m.h.mul(&basis))
            .ok_or_else(|| bad("h does not stabilize the even part of ker e"))?
            .trace()
    };
    if !tr.denom().is_one() {
        return Err(bad("trace of h on ker e is not an integer"));
    }
    let tr: i64 = num_traits::ToPrimitive::to_i64(&tr.to_integer())
        .ok_or_else(|| bad("trace overflow"))?;
    Ok(tr - dim_odd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irrep_shapes() {
        let r = build_irrep(0, Sign::Plus);
        assert!(r.e.is_zero() && r.h.is_zero() && r.f.is_zero());
        assert_eq!(r.parity, vec![0]);
        r.validate().unwrap();

        let r = build_irrep(1, Sign::Plus);
        assert_eq!(r.h.at(0, 0), &rat(1));
        assert_eq!(r.h.at(1, 1), &rat(-1));
        assert_eq!(r.parity, vec![0, 1]);
        r.validate().unwrap();

        let r = build_irrep(2, Sign::Minus);
        assert_eq!(
            (r.h.at(0, 0), r.h.at(1, 1), r.h.at(2, 2)),
            (&rat(2), &rat(0), &rat(-2))
        );
        assert_eq!(r.parity, vec![1, 0, 1]);
        r.validate().unwrap();
    }

    #[test]
    fn validate_rejects_broken_brackets() {
        let mut r = build_irrep(2, Sign::Plus);
        r.e = r.e.scale(&rat(3));
        assert!(r.validate().is_err());
    }

    #[test]
    fn decompose_roundtrips() {
        let r = build_irrep(5, Sign::Minus);
        assert_eq!(decompose(&r).unwrap(), GradedRep::irrep(5, Sign::Minus));

        let pair = dsum(&build_irrep(2, Sign::Plus), &build_irrep(2, Sign::Plus));
        assert_eq!(
            decompose(&pair).unwrap(),
            GradedRep::from_parts(&[(2, Sign::Plus, 2)])
        );
    }

    #[test]
    fn dsum_of_trivials() {
        let r = dsum(&build_irrep(0, Sign::Plus), &build_irrep(0, Sign::Minus));
        assert!(r.e.is_zero());
        assert_eq!(r.parity, vec![0, 1]);
    }

    #[test]
    fn tensor_of_standard_reps() {
        let a = build_irrep(1, Sign::Plus);
        let t = tprod(&a, &a);
        assert_eq!(
            decompose(&t).unwrap(),
            GradedRep::from_parts(&[(2, Sign::Plus, 1), (0, Sign::Minus, 1)])
        );
    }

    #[test]
    fn dual_flips_odd_weights() {
        let d = mdual(&build_irrep(3, Sign::Plus));
        assert_eq!(decompose(&d).unwrap(), GradedRep::irrep(3, Sign::Minus));
    }

    #[test]
    fn wedge2_matches_formula() {
        let w = mwedge2(&build_irrep(3, Sign::Plus));
        assert_eq!(
            decompose(&w).unwrap(),
            GradedRep::from_parts(&[(4, Sign::Minus, 1), (0, Sign::Minus, 1)])
        );
    }

    #[test]
    fn bar_constructions() {
        let p = UngradedRep::irrep(0);
        assert_eq!(
            decompose(&build_bar_sum(&p)).unwrap(),
            GradedRep::from_parts(&[(0, Sign::Plus, 1), (0, Sign::Minus, 1)])
        );
        assert_eq!(
            decompose(&build_bar_tensor(&p)).unwrap(),
            GradedRep::irrep(0, Sign::Minus)
        );
        assert_eq!(
            decompose(&build_bar_tensor(&UngradedRep::irrep(2))).unwrap(),
            GradedRep::from_parts(&[(4, Sign::Minus, 1), (2, Sign::Minus, 1), (0, Sign::Minus, 1)])
        );
    }

    #[test]
    fn oracle_defect_examples() {
        assert_eq!(oracle_defect(&build_irrep(0, Sign::Plus)).unwrap(), 0);
        assert_eq!(oracle_defect(&build_irrep(2, Sign::Minus)).unwrap(), -2);
        assert_eq!(
            oracle_defect(&build_bar_tensor(&UngradedRep::irrep(3))).unwrap(),
            -10
        );
    }
}
