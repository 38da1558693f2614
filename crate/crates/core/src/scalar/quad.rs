use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ArithOp, Rational};
use crate::error::{Error, Result};

/// An element `x + y·√D` of the real quadratic field `ℚ(√D)`.
///
/// `D` is kept as given (not reduced to its square-free part). When `D` is the
/// square of a rational `r` the value collapses to `(x + y·r, 0, D)`, so two
/// values are equal exactly when their components are.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawQuadExt", into = "RawQuadExt")]
pub struct QuadExt {
    x: Rational,
    y: Rational,
    radicand: Rational,
}

#[derive(Serialize, Deserialize)]
struct RawQuadExt {
    x: Rational,
    y: Rational,
    #[serde(rename = "D")]
    radicand: Rational,
}

impl TryFrom<RawQuadExt> for QuadExt {
    type Error = Error;
    fn try_from(raw: RawQuadExt) -> Result<Self> {
        QuadExt::new(raw.x, raw.y, raw.radicand)
    }
}

impl From<QuadExt> for RawQuadExt {
    fn from(q: QuadExt) -> Self {
        RawQuadExt {
            x: q.x,
            y: q.y,
            radicand: q.radicand,
        }
    }
}

impl QuadExt {
    pub fn new(x: Rational, y: Rational, radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand(radicand.to_string()));
        }
        Ok(match radicand.sqrt_exact() {
            Some(r) => QuadExt {
                x: x + &y * &r,
                y: Rational::zero(),
                radicand,
            },
            None => QuadExt { x, y, radicand },
        })
    }

    /// Embeds a rational into `ℚ(√D)`.
    pub fn rational(x: Rational, radicand: &Rational) -> Result<Self> {
        QuadExt::new(x, Rational::zero(), radicand.clone())
    }

    /// `√D` itself.
    pub fn sqrt(radicand: &Rational) -> Result<Self> {
        QuadExt::new(Rational::zero(), Rational::one(), radicand.clone())
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// The rational value when the irrational part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.y.is_zero().then_some(&self.x)
    }

    pub fn zero_in(radicand: &Rational) -> Result<Self> {
        QuadExt::rational(Rational::zero(), radicand)
    }

    pub fn one_in(radicand: &Rational) -> Result<Self> {
        QuadExt::rational(Rational::one(), radicand)
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            x: self.x.clone(),
            y: -&self.y,
            radicand: self.radicand.clone(),
        }
    }

    /// Field norm `x² − D·y²`.
    pub fn norm(&self) -> Rational {
        &self.x * &self.x - &self.radicand * &self.y * &self.y
    }

    pub fn neg(&self) -> Self {
        QuadExt {
            x: -&self.x,
            y: -&self.y,
            radicand: self.radicand.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuadExt {
            x: &self.x * c,
            y: &self.y * c,
            radicand: self.radicand.clone(),
        }
    }

    fn check_radicand(&self, rhs: &QuadExt) -> Result<()> {
        if self.radicand != rhs.radicand {
            return Err(Error::RadicandMismatch {
                left: self.radicand.to_string(),
                right: rhs.radicand.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &QuadExt) -> Result<Self> {
        self.check_radicand(rhs)?;
        Ok(QuadExt {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            radicand: self.radicand.clone(),
        })
    }

    pub fn try_sub(&self, rhs: &QuadExt) -> Result<Self> {
        self.check_radicand(rhs)?;
        Ok(QuadExt {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
            radicand: self.radicand.clone(),
        })
    }

    pub fn try_mul(&self, rhs: &QuadExt) -> Result<Self> {
        self.check_radicand(rhs)?;
        if self.y.is_zero() || rhs.y.is_zero() {
            return Ok(QuadExt {
                x: &self.x * &rhs.x,
                y: &self.x * &rhs.y + &rhs.x * &self.y,
                radicand: self.radicand.clone(),
            });
        }
        Ok(QuadExt {
            x: &self.x * &rhs.x + &self.radicand * &self.y * &rhs.y,
            y: &self.x * &rhs.y + &rhs.x * &self.y,
            radicand: self.radicand.clone(),
        })
    }

    pub fn try_div(&self, rhs: &QuadExt) -> Result<Self> {
        self.check_radicand(rhs)?;
        // nonzero for rhs ≠ 0: D is either a non-square or rhs.y = 0
        let norm = rhs.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.try_mul(&rhs.conj())?;
        Ok(QuadExt {
            x: num.x.checked_div(&norm)?,
            y: num.y.checked_div(&norm)?,
            radicand: self.radicand.clone(),
        })
    }

    pub fn arith(&self, op: ArithOp, rhs: &QuadExt) -> Result<Self> {
        match op {
            ArithOp::Add => self.try_add(rhs),
            ArithOp::Sub => self.try_sub(rhs),
            ArithOp::Mul => self.try_mul(rhs),
            ArithOp::Div => self.try_div(rhs),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = QuadExt {
            x: Rational::one(),
            y: Rational::zero(),
            radicand: self.radicand.clone(),
        };
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("shared radicand");
            }
            base = base.try_mul(&base).expect("shared radicand");
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            write!(f, "{}", self.x)
        } else {
            write!(f, "{} + ({})·√{}", self.x, self.y, self.radicand)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}·√{})", self.x, self.y, self.radicand)
    }
}
