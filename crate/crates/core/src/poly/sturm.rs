//! Real-root counting and isolation over ℚ.
//!
//! Everything here is exact: Sturm chains are built on square-free
//! polynomials, endpoints at infinity use leading-coefficient signs, and
//! isolating intervals are refined by rational bisection.

use serde::Serialize;

use super::UniPoly;
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Interval endpoint for [`sturm_root_count`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl From<Rational> for Bound {
    fn from(r: Rational) -> Self {
        Bound::Finite(r)
    }
}

/// `p / gcd(p, p')`, monic.
pub fn square_free_part(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative(1));
    p.exact_div(&g)?.monic()
}

pub fn is_square_free(p: &UniPoly) -> bool {
    !p.is_zero() && p.gcd(&p.derivative(1)).is_constant()
}

/// Yun's decomposition `p = lc · ∏ f_i^i` with monic, square-free, pairwise
/// coprime `f_i`. Only non-constant factors are returned, paired with their
/// multiplicity.
pub fn square_free_decomposition(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let f = p.monic()?;
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative(1);
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0)?;
    let mut c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative(1);
    let mut mult = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative(1);
        if !a.is_constant() {
            out.push((a, mult));
        }
        mult += 1;
    }
    Ok(out)
}

/// Divide by the absolute content so that signs are untouched.
fn shrink(p: UniPoly) -> UniPoly {
    let (content, prim) = p.content_and_primitive();
    if content.is_negative() {
        -&prim
    } else {
        prim
    }
}

/// Sturm chain `p, p', -rem(p, p'), …` of a square-free polynomial, each
/// member rescaled by a positive constant.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    /// Builds the chain; `p` must be nonzero and square-free.
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !is_square_free(p) {
            return Err(Error::NotSquareFree);
        }
        Ok(Self::new_unchecked(p))
    }

    fn new_unchecked(p: &UniPoly) -> Self {
        let mut chain = vec![shrink(p.clone())];
        let mut next = shrink(p.derivative(1));
        while !next.is_zero() {
            let prev = chain.last().expect("chain is nonempty");
            let (_, r) = prev.div_rem(&next).expect("nonzero divisor");
            chain.push(next);
            next = shrink(-&r);
        }
        SturmChain { chain }
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.chain
    }

    fn signs_at(&self, at: &Bound) -> impl Iterator<Item = i32> + '_ {
        let at = at.clone();
        self.chain.iter().map(move |q| {
            let lc_sign = q.leading().map_or(0, Rational::signum);
            match &at {
                Bound::PosInf => lc_sign,
                Bound::NegInf => {
                    let deg = q.degree().unwrap_or(0);
                    if deg % 2 == 0 {
                        lc_sign
                    } else {
                        -lc_sign
                    }
                }
                Bound::Finite(x) => q.sign_at(x),
            }
        })
    }

    /// Sign variations of the chain at `at`, zeros dropped.
    pub fn variations(&self, at: &Bound) -> usize {
        let mut last = 0;
        let mut count = 0;
        for s in self.signs_at(at).filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Number of distinct real roots of a square-free `p` in `(lo, hi]`.
pub fn sturm_root_count(p: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    Ok(chain.count(lo, hi))
}

/// Whether every root of `p` is real. Nonzero constants are hyperbolic.
pub fn is_hyperbolic(p: &UniPoly) -> Result<bool> {
    let sqf = square_free_part(p)?;
    let deg = sqf.degree().expect("nonzero");
    if deg == 0 {
        return Ok(true);
    }
    let chain = SturmChain::new_unchecked(&sqf);
    Ok(chain.count(&Bound::NegInf, &Bound::PosInf) == deg)
}

/// Real roots of `p` counted with multiplicity.
pub fn real_root_count_with_multiplicity(p: &UniPoly) -> Result<usize> {
    Ok(square_free_decomposition(p)?
        .iter()
        .map(|(f, m)| m * SturmChain::new_unchecked(f).count(&Bound::NegInf, &Bound::PosInf))
        .sum())
}

/// One isolating interval. `lo == hi` means the root is exactly `lo`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Sorted, pairwise disjoint isolating intervals, one per distinct real root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootIsolation {
    pub intervals: Vec<RootInterval>,
}

impl RootIsolation {
    pub fn total_multiplicity(&self) -> usize {
        self.intervals.iter().map(|iv| iv.multiplicity).sum()
    }
}

/// Cauchy bound: every root has absolute value below `1 + max |c_i / c_n|`.
fn cauchy_bound(p: &UniPoly) -> Rational {
    let lc = p.leading().expect("nonzero").abs();
    let deg = p.degree().expect("nonzero");
    let max = p.coeffs()[..deg]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// Isolates every root of a hyperbolic `p` in an interval of width at most
/// `width` by Sturm-guided bisection, with multiplicities read off the
/// square-free decomposition.
pub fn isolate_and_refine_roots(p: &UniPoly, width: &Rational) -> Result<RootIsolation> {
    if !width.is_positive() {
        return Err(Error::NonPositiveWidth(width.to_string()));
    }
    let sqf = square_free_part(p)?;
    let n = sqf.degree().expect("nonzero");
    let chain = SturmChain::new_unchecked(&sqf);
    if chain.count(&Bound::NegInf, &Bound::PosInf) != n {
        return Err(Error::NotHyperbolic);
    }
    let two = Rational::from(2);

    // isolation: half-open cells (lo, hi] holding exactly one root
    let b = cauchy_bound(&sqf);
    let mut pending = vec![(-&b, b, n)];
    let mut cells = Vec::with_capacity(n);
    while let Some((lo, hi, c)) = pending.pop() {
        match c {
            0 => {}
            1 => cells.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                let left = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()));
                pending.push((mid.clone(), hi, c - left));
                pending.push((lo, mid, left));
            }
        }
    }

    let mut intervals = Vec::with_capacity(cells.len());
    for (mut lo, mut hi) in cells {
        // refine until narrow, with neither endpoint a root
        let (lo, hi) = loop {
            if sqf.sign_at(&hi) == 0 {
                break (hi.clone(), hi);
            }
            let lo_sign = sqf.sign_at(&lo);
            if lo_sign != 0 && &hi - &lo <= *width {
                break (lo, hi);
            }
            let mid = (&lo + &hi) / &two;
            let mid_sign = sqf.sign_at(&mid);
            if mid_sign == 0 {
                break (mid.clone(), mid);
            }
            let root_left = if lo_sign != 0 {
                lo_sign != mid_sign
            } else {
                chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone())) == 1
            };
            if root_left {
                hi = mid;
            } else {
                lo = mid;
            }
        };
        intervals.push(RootInterval {
            lo,
            hi,
            multiplicity: 0,
        });
    }

    for (f, m) in square_free_decomposition(p)? {
        let fchain = SturmChain::new_unchecked(&f);
        for iv in intervals.iter_mut() {
            let hit = if iv.is_exact() {
                f.eval(&iv.lo).is_zero()
            } else {
                fchain.count(&Bound::Finite(iv.lo.clone()), &Bound::Finite(iv.hi.clone())) == 1
            };
            if hit {
                iv.multiplicity = m;
            }
        }
    }
    intervals.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(RootIsolation { intervals })
}
