//! Special symmetric Toeplitz matrices `T_{α,β}(d)` (α on the diagonal, β
//! everywhere else) and the universal determinantal representations they give:
//!
//! ```text
//! p_a(z, s) = det(zI + diag(λ) + s·T_{α,β}(d)),   a_i = det T_{α,β}(i) / i!
//! ```
//!
//! Recovery of `(α, β)` from a sequence works in `ℚ(√D)` with
//! `D = α² − 2a_2`, so irrational β is handled exactly.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SymMatrix};
use crate::nuij::{build_pencil, HyperbolicPoly, NuijCandidate};
use crate::poly::{bipoly_interpolate, BiPoly};
use crate::scalar::{QuadExt, Rational};

/// Sizes up to this use cofactor expansion in [`toeplitz_det_oracle`].
pub const COFACTOR_LIMIT: usize = 10;

/// `T_{α,β}(d)` with α, β in a common `ℚ(√D)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialToeplitz {
    d: usize,
    alpha: QuadExt,
    beta: QuadExt,
}

impl SpecialToeplitz {
    pub fn new(d: usize, alpha: QuadExt, beta: QuadExt) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        if alpha.radicand() != beta.radicand() {
            return Err(Error::RadicandMismatch {
                left: alpha.radicand().to_string(),
                right: beta.radicand().to_string(),
            });
        }
        Ok(SpecialToeplitz { d, alpha, beta })
    }

    pub fn rational(d: usize, alpha: &Rational, beta: &Rational) -> Result<Self> {
        let zero = Rational::zero();
        SpecialToeplitz::new(
            d,
            QuadExt::rational(alpha.clone(), &zero)?,
            QuadExt::rational(beta.clone(), &zero)?,
        )
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn alpha(&self) -> &QuadExt {
        &self.alpha
    }

    pub fn beta(&self) -> &QuadExt {
        &self.beta
    }

    pub fn to_matrix(&self) -> Matrix<QuadExt> {
        Matrix::from_fn(self.d, |i, j| {
            if i == j {
                self.alpha.clone()
            } else {
                self.beta.clone()
            }
        })
    }

    /// The matrix as a [`SymMatrix`], when α and β are rational.
    pub fn to_sym_matrix(&self) -> Option<SymMatrix> {
        let a = self.alpha.as_rational()?;
        let b = self.beta.as_rational()?;
        let rows = (0..self.d)
            .map(|i| {
                (0..self.d)
                    .map(|j| if i == j { a.clone() } else { b.clone() })
                    .collect()
            })
            .collect();
        Some(SymMatrix::new(rows).expect("symmetric by construction"))
    }

    pub fn det(&self) -> QuadExt {
        toeplitz_det_closed(&self.alpha, &self.beta, self.d).expect("shared radicand")
    }
}

/// `det T_{α,β}(k) = (α − β)^(k−1) (α + (k−1)β)`.
pub fn toeplitz_det_closed(alpha: &QuadExt, beta: &QuadExt, k: usize) -> Result<QuadExt> {
    if k == 0 {
        return Err(Error::ZeroDimension);
    }
    let diff = alpha.try_sub(beta)?;
    let tail = alpha.try_add(&beta.scale(&Rational::from((k - 1) as i64)))?;
    diff.pow((k - 1) as u32).try_mul(&tail)
}

/// `det T_{α,β}(k)` from the matrix itself: cofactor expansion up to
/// [`COFACTOR_LIMIT`], fraction-free elimination above.
pub fn toeplitz_det_oracle(alpha: &QuadExt, beta: &QuadExt, k: usize) -> Result<QuadExt> {
    let t = SpecialToeplitz::new(k, alpha.clone(), beta.clone())?;
    if let (Some(x), Some(y)) = (alpha.as_rational(), beta.as_rational()) {
        // integer entries after clearing denominators: det(L·T) = L^k det T
        let lcm = Rational::from(x.denom().lcm(y.denom()));
        let (xl, yl) = (x * &lcm, y * &lcm);
        let m = Matrix::from_fn(k, |i, j| if i == j { xl.clone() } else { yl.clone() });
        let one = Rational::one();
        let det = if k <= COFACTOR_LIMIT {
            m.det_cofactor(&one)
        } else {
            m.det_bareiss(&one)
        };
        let det = det.checked_div(&lcm.pow(k as u32))?;
        return QuadExt::rational(det, alpha.radicand());
    }
    let one = QuadExt::one_in(alpha.radicand())?;
    let m = t.to_matrix();
    Ok(if k <= COFACTOR_LIMIT {
        m.det_cofactor(&one)
    } else {
        m.det_bareiss(&one)
    })
}

/// `(t(1)/1!, …, t(d)/d!)` with `t(i) = det T_{α,β}(i)`. Fails if some entry
/// is irrational.
pub fn udr_sequence(alpha: &QuadExt, beta: &QuadExt, d: usize) -> Result<NuijCandidate> {
    let mut a = Vec::with_capacity(d);
    for i in 1..=d {
        let ai = toeplitz_det_closed(alpha, beta, i)?.scale(&Rational::factorial(i).recip()?);
        match ai.as_rational() {
            Some(r) => a.push(r.clone()),
            None => {
                return Err(Error::IrrationalCoefficient {
                    index: i,
                    value: ai.to_string(),
                })
            }
        }
    }
    NuijCandidate::new(a)
}

/// Rational convenience wrapper around [`udr_sequence`].
pub fn udr_sequence_rational(alpha: &Rational, beta: &Rational, d: usize) -> Result<NuijCandidate> {
    let t = SpecialToeplitz::rational(d.max(1), alpha, beta)?;
    udr_sequence(t.alpha(), t.beta(), d)
}

/// Parameters `(α, β)` reproducing a sequence. At `d = 2` both `±β` are
/// listed (one entry when β = 0); otherwise β is unique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UdrWitness {
    pub alpha: QuadExt,
    #[serde(rename = "beta")]
    pub beta_solutions: Vec<QuadExt>,
}

/// Why a sequence has no universal determinantal representation.
///
/// `residual` is `t_{α,β}(i)/i! − a_i` at the first failing index `i` for the
/// candidate β that survives longest. A failure at index 2 means
/// `D = α² − 2a_2 < 0`; the residual is then `D` itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UdrRejection {
    pub member: bool,
    pub failed_index: usize,
    pub residual: QuadExt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum UdrOutcome {
    Accepted(UdrWitness),
    Rejected(UdrRejection),
}

impl UdrOutcome {
    pub fn is_accepted(&self) -> bool {
        matches!(self, UdrOutcome::Accepted(_))
    }

    pub fn witness(&self) -> Option<&UdrWitness> {
        match self {
            UdrOutcome::Accepted(w) => Some(w),
            UdrOutcome::Rejected(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&UdrRejection> {
        match self {
            UdrOutcome::Accepted(_) => None,
            UdrOutcome::Rejected(r) => Some(r),
        }
    }
}

/// Recovers `(α, β)` with `a_i = det T_{α,β}(i) / i!` for all `i`, or reports
/// the first index where no choice works.
pub fn recover_udr(a: &NuijCandidate) -> UdrOutcome {
    let d = a.d();
    let alpha = a.get(1);
    if d == 1 {
        let zero = Rational::zero();
        return UdrOutcome::Accepted(UdrWitness {
            alpha: QuadExt::rational(alpha, &zero).expect("zero radicand"),
            beta_solutions: vec![QuadExt::zero_in(&zero).expect("zero radicand")],
        });
    }

    // t(2)/2! = (α² − β²)/2
    let radicand = &alpha * &alpha - Rational::from(2) * a.get(2);
    if radicand.is_negative() {
        return UdrOutcome::Rejected(UdrRejection {
            member: false,
            failed_index: 2,
            residual: QuadExt::rational(radicand, &Rational::zero()).expect("zero radicand"),
        });
    }
    let alpha_q = QuadExt::rational(alpha, &radicand).expect("nonnegative radicand");
    let root = QuadExt::sqrt(&radicand).expect("nonnegative radicand");
    let mut candidates = vec![root.clone()];
    if !root.is_zero() {
        candidates.push(root.neg());
    }

    let mut survivors = Vec::new();
    let mut best_failure: Option<(usize, QuadExt)> = None;
    for beta in candidates {
        match first_mismatch(a, &alpha_q, &beta) {
            None => survivors.push(beta),
            Some((i, residual)) => {
                if best_failure.as_ref().is_none_or(|(j, _)| i > *j) {
                    best_failure = Some((i, residual));
                }
            }
        }
    }
    if survivors.is_empty() {
        let (failed_index, residual) = best_failure.expect("every candidate failed");
        return UdrOutcome::Rejected(UdrRejection {
            member: false,
            failed_index,
            residual,
        });
    }
    UdrOutcome::Accepted(UdrWitness {
        alpha: alpha_q,
        beta_solutions: survivors,
    })
}

/// First `i` with `t_{α,β}(i)/i! ≠ a_i`, together with the difference.
fn first_mismatch(a: &NuijCandidate, alpha: &QuadExt, beta: &QuadExt) -> Option<(usize, QuadExt)> {
    (1..=a.d()).find_map(|i| {
        let t = toeplitz_det_closed(alpha, beta, i).expect("shared radicand");
        let target = QuadExt::rational(a.get(i), alpha.radicand()).expect("valid radicand");
        let residual = t
            .scale(&Rational::factorial(i).recip().expect("nonzero"))
            .try_sub(&target)
            .expect("shared radicand");
        (!residual.is_zero()).then_some((i, residual))
    })
}

pub fn is_udr(a: &NuijCandidate) -> bool {
    recover_udr(a).is_accepted()
}

/// `det(zI + diag(λ) + s·T_{α,β}(d))` as an exact polynomial in `(z, s)`,
/// obtained by evaluating at the nodes `0..=d` on each axis and interpolating.
pub fn detrep_bipoly(lambdas: &[Rational], alpha: &Rational, beta: &Rational) -> BiPoly {
    let d = lambdas.len();
    if d == 0 {
        return BiPoly::one();
    }
    let nodes: Vec<Rational> = (0..=d).map(|k| Rational::from(k as i64)).collect();
    let one = Rational::one();
    let values: Vec<Vec<Rational>> = nodes
        .iter()
        .map(|z| {
            nodes
                .iter()
                .map(|s| {
                    let m = Matrix::from_fn(d, |i, j| {
                        if i == j {
                            z + &lambdas[i] + s * alpha
                        } else {
                            s * beta
                        }
                    });
                    m.det_bareiss(&one)
                })
                .collect()
        })
        .collect();
    bipoly_interpolate(&values, &nodes, &nodes, d, d).expect("distinct nodes on a square grid")
}

/// Checks `det(zI + diag(λ) + sT_{α,β}) = p_a(z, s)` for `p = ∏(z + λ_i)` and
/// `a = udr_sequence(α, β, d)`.
pub fn verify_udr(lambdas: &[Rational], alpha: &Rational, beta: &Rational) -> Result<bool> {
    let a = udr_sequence_rational(alpha, beta, lambdas.len())?;
    let p = HyperbolicPoly::from_lambdas(lambdas);
    let pencil = build_pencil(&p, &a)?;
    Ok(detrep_bipoly(lambdas, alpha, beta) == *pencil.bipoly())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::principal_minors_all_equal;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn rq(s: &str) -> QuadExt {
        QuadExt::rational(q(s), &Rational::zero()).unwrap()
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(
            toeplitz_det_closed(&rq("7/3"), &rq("-2"), 1).unwrap(),
            rq("7/3")
        );
        for k in 2..7 {
            assert!(toeplitz_det_closed(&rq("1"), &rq("1"), k)
                .unwrap()
                .is_zero());
        }
        let (a, b) = (rq("5/2"), rq("-1/3"));
        let expect = a
            .try_mul(&a)
            .unwrap()
            .try_sub(&b.try_mul(&b).unwrap())
            .unwrap();
        assert_eq!(toeplitz_det_closed(&a, &b, 2).unwrap(), expect);
        assert_eq!(toeplitz_det_closed(&a, &b, 0), Err(Error::ZeroDimension));
    }

    #[test]
    fn oracle_values() {
        assert_eq!(
            toeplitz_det_oracle(&rq("-4/5"), &rq("3"), 1).unwrap(),
            rq("-4/5")
        );
        assert_eq!(toeplitz_det_oracle(&rq("2"), &rq("1"), 3).unwrap(), rq("4"));
        assert_eq!(toeplitz_det_closed(&rq("2"), &rq("1"), 3).unwrap(), rq("4"));
        assert!(toeplitz_det_oracle(&rq("1"), &rq("1"), 4)
            .unwrap()
            .is_zero());
        // above the cofactor limit the elimination kernel takes over
        let (a, b) = (rq("3/2"), rq("-1/5"));
        assert_eq!(
            toeplitz_det_oracle(&a, &b, 12).unwrap(),
            toeplitz_det_closed(&a, &b, 12).unwrap()
        );
    }

    #[test]
    fn sequences_from_toeplitz() {
        for d in 1..=6 {
            assert_eq!(
                udr_sequence_rational(&q("1"), &q("1"), d).unwrap(),
                NuijCandidate::classical(d).unwrap()
            );
        }
        let alpha = q("-3/2");
        let a = udr_sequence_rational(&alpha, &q("0"), 4).unwrap();
        let expect: Vec<Rational> = (1..=4)
            .map(|i| alpha.pow(i as u32) / Rational::factorial(i))
            .collect();
        assert_eq!(a.coeffs(), expect.as_slice());
        assert_eq!(
            udr_sequence_rational(&q("2"), &q("1"), 3).unwrap(),
            NuijCandidate::new(vec![q("2"), q("3/2"), q("2/3")]).unwrap()
        );
    }

    #[test]
    fn irrational_sequence_rejected() {
        let d = q("2");
        let alpha = QuadExt::rational(q("2"), &d).unwrap();
        let beta = QuadExt::sqrt(&d).unwrap();
        // t(2) = 4 - 2 is rational, t(3) is not
        assert!(udr_sequence(&alpha, &beta, 2).is_ok());
        assert!(matches!(
            udr_sequence(&alpha, &beta, 3),
            Err(Error::IrrationalCoefficient { index: 3, .. })
        ));
    }

    #[test]
    fn recovery_roundtrip() {
        let a = udr_sequence_rational(&q("3"), &q("2"), 5).unwrap();
        let w = recover_udr(&a).witness().cloned().unwrap();
        assert_eq!(w.alpha.as_rational(), Some(&q("3")));
        assert_eq!(w.beta_solutions.len(), 1);
        assert_eq!(w.beta_solutions[0].as_rational(), Some(&q("2")));
    }

    #[test]
    fn recovery_two_signs_at_d2() {
        // α = 5/3, β = 1/2
        let a = NuijCandidate::new(vec![q("5/3"), (q("25/9") - q("1/4")) / q("2")]).unwrap();
        let w = recover_udr(&a).witness().cloned().unwrap();
        let betas: Vec<_> = w
            .beta_solutions
            .iter()
            .map(|b| b.as_rational().cloned().unwrap())
            .collect();
        assert_eq!(betas, vec![q("1/2"), q("-1/2")]);
    }

    #[test]
    fn recovery_beta_zero_is_single() {
        let a = udr_sequence_rational(&q("2"), &q("0"), 4).unwrap();
        let w = recover_udr(&a).witness().cloned().unwrap();
        assert_eq!(w.beta_solutions.len(), 1);
        assert!(w.beta_solutions[0].is_zero());
    }

    #[test]
    fn double_nuij_has_no_representation() {
        let b = NuijCandidate::from_ints(&[2, 1, 0]).unwrap();
        let r = recover_udr(&b).rejection().cloned().unwrap();
        assert_eq!(r.failed_index, 3);
        // t(3)/6 at α=2, β=√2 is (−4 + 4√2)/6
        assert_eq!(r.residual.x(), &q("-2/3"));
        assert_eq!(r.residual.y(), &q("2/3"));
        assert_eq!(r.residual.radicand(), &q("2"));
        assert!(!is_udr(&b));
        assert!(is_udr(&NuijCandidate::from_ints(&[2, 1]).unwrap()));
        assert!(is_udr(&NuijCandidate::classical(5).unwrap()));
    }

    #[test]
    fn negative_radicand_rejected_at_two() {
        // α = 1, a_2 = 1 gives β² = −1
        let r = recover_udr(&NuijCandidate::from_ints(&[1, 1, 0]).unwrap());
        let r = r.rejection().cloned().unwrap();
        assert_eq!(r.failed_index, 2);
        assert_eq!(r.residual.as_rational(), Some(&q("-1")));
    }

    #[test]
    fn d1_always_accepts() {
        let w = recover_udr(&NuijCandidate::new(vec![q("-7/2")]).unwrap());
        let w = w.witness().cloned().unwrap();
        assert_eq!(w.alpha.as_rational(), Some(&q("-7/2")));
        assert!(w.beta_solutions[0].is_zero());
    }

    #[test]
    fn toeplitz_principal_minors() {
        let t = SpecialToeplitz::rational(4, &q("3/2"), &q("-2")).unwrap();
        let m = t.to_sym_matrix().unwrap();
        for j in 1..=4 {
            assert!(principal_minors_all_equal(&m, j).unwrap());
        }
    }

    #[test]
    fn determinantal_pencils() {
        let lam = q("-4/3");
        let alpha = q("5");
        let expect = &(&BiPoly::z() + &BiPoly::constant(lam.clone())) + &BiPoly::s().scale(&alpha);
        assert_eq!(detrep_bipoly(&[lam], &alpha, &q("9")), expect);

        let zz = detrep_bipoly(&[q("0"), q("0")], &q("1"), &q("1"));
        let expect = &BiPoly::z().pow(2) + &(&BiPoly::z() * &BiPoly::s()).scale(&q("2"));
        assert_eq!(zz, expect);
        assert!(verify_udr(&[q("0"), q("0")], &q("1"), &q("1")).unwrap());
        assert!(verify_udr(&[q("2/7")], &q("-3"), &q("11")).unwrap());
        assert!(verify_udr(&[q("1"), q("-1/2"), q("3")], &q("2/3"), &q("-5/4")).unwrap());
    }
}
