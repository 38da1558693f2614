use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::UniPoly;
use crate::scalar::Rational;

/// Sparse polynomial in two variables `(z, s)` over ℚ.
///
/// Keys are `(deg_z, deg_s)`; zero coefficients are never stored, so
/// structural equality is polynomial equality. Callers that need a second
/// variable under another name (for instance `w`) use the `s` slot.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<BiTerm>", into = "Vec<BiTerm>")]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Rational>,
}

/// Wire form of a single term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiTerm {
    pub dz: usize,
    pub ds: usize,
    pub c: Rational,
}

impl From<Vec<BiTerm>> for BiPoly {
    fn from(terms: Vec<BiTerm>) -> Self {
        let mut p = BiPoly::zero();
        for t in terms {
            p.add_term(t.dz, t.ds, &t.c);
        }
        p
    }
}

impl From<BiPoly> for Vec<BiTerm> {
    fn from(p: BiPoly) -> Self {
        p.terms
            .into_iter()
            .map(|((dz, ds), c)| BiTerm { dz, ds, c })
            .collect()
    }
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    /// `c · z^dz · s^ds`.
    pub fn monomial(c: Rational, dz: usize, ds: usize) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(dz, ds, &c);
        p
    }

    pub fn z() -> Self {
        BiPoly::monomial(Rational::one(), 1, 0)
    }

    pub fn s() -> Self {
        BiPoly::monomial(Rational::one(), 0, 1)
    }

    /// Lifts `p(z)` into the bivariate ring.
    pub fn from_z(p: &UniPoly) -> Self {
        let mut out = BiPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(k, 0, c);
        }
        out
    }

    /// Lifts `p(s)` into the bivariate ring.
    pub fn from_s(p: &UniPoly) -> Self {
        let mut out = BiPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, k, c);
        }
        out
    }

    pub fn add_term(&mut self, dz: usize, ds: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((dz, ds)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(dz, ds));
        }
    }

    pub fn coeff(&self, dz: usize, ds: usize) -> Rational {
        self.terms
            .get(&(dz, ds))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.terms.iter().map(|(&(dz, ds), c)| (dz, ds, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_z(&self) -> Option<usize> {
        self.terms.keys().map(|&(dz, _)| dz).max()
    }

    pub fn deg_s(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, ds)| ds).max()
    }

    pub fn eval(&self, z: &Rational, s: &Rational) -> Rational {
        self.terms()
            .map(|(dz, ds, c)| c * &z.pow(dz as u32) * s.pow(ds as u32))
            .sum()
    }

    /// Substitutes `s = s0`, leaving a polynomial in `z`.
    pub fn eval_s(&self, s0: &Rational) -> UniPoly {
        let n = self.deg_z().map_or(0, |d| d + 1);
        let mut coeffs = vec![Rational::zero(); n];
        for (dz, ds, c) in self.terms() {
            coeffs[dz] += &(c * &s0.pow(ds as u32));
        }
        UniPoly::new(coeffs)
    }

    /// The coefficient of `z^k` as a polynomial in `s`.
    pub fn z_coeff(&self, k: usize) -> UniPoly {
        let n = self.deg_s().map_or(0, |d| d + 1);
        let mut coeffs = vec![Rational::zero(); n];
        for (dz, ds, c) in self.terms() {
            if dz == k {
                coeffs[ds] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = BiPoly::zero();
        for (dz, ds, a) in self.terms() {
            out.add_term(dz, ds, &(a * c));
        }
        out
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(BiPoly::one(), |acc, _| &acc * self)
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (dz, ds, c) in rhs.terms() {
            out.add_term(dz, ds, c);
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (dz, ds, c) in rhs.terms() {
            out.add_term(dz, ds, &-c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (az, as_, a) in self.terms() {
            for (bz, bs, b) in rhs.terms() {
                out.add_term(az + bz, as_ + bs, &(a * b));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&Rational::from(-1))
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(dz, ds), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match dz {
                0 => {}
                1 => write!(f, "*z")?,
                _ => write!(f, "*z^{dz}")?,
            }
            match ds {
                0 => {}
                1 => write!(f, "*s")?,
                _ => write!(f, "*s^{ds}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}
