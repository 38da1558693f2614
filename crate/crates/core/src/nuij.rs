//! Nuij sequences `a = (a_1, …, a_d)` and the pencils
//! `p_a(z, s) = p(z) + Σ a_k s^k p^(k)(z)` they generate.
//!
//! Membership is decided by a single hyperbolicity test on
//! `q_a(z) = z^d + Σ a_k (d!/(d−k)!) z^(d−k)`, the pencil of `z^d` at `s = 1`.
//! Throughout, a root vector `λ` stands for the polynomial `∏ (z + λ_i)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{self, BiPoly, UniPoly};
use crate::scalar::Rational;

/// A candidate sequence `(a_1, …, a_d)`; `a_0 = 1` is implicit.
///
/// No membership requirement is imposed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCandidate")]
pub struct NuijCandidate {
    d: usize,
    a: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawCandidate {
    d: usize,
    a: Vec<Rational>,
}

impl TryFrom<RawCandidate> for NuijCandidate {
    type Error = Error;
    fn try_from(raw: RawCandidate) -> Result<Self> {
        if raw.a.len() != raw.d {
            return Err(Error::DimensionMismatch(raw.d, raw.a.len()));
        }
        NuijCandidate::new(raw.a)
    }
}

impl NuijCandidate {
    pub fn new(a: Vec<Rational>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(NuijCandidate { d: a.len(), a })
    }

    pub fn from_ints(a: &[i64]) -> Result<Self> {
        NuijCandidate::new(a.iter().map(|&x| Rational::from(x)).collect())
    }

    pub fn zeros(d: usize) -> Result<Self> {
        NuijCandidate::new(vec![Rational::zero(); d])
    }

    /// `(1, 0, …, 0)`: the sequence behind `p + s p'`.
    pub fn classical(d: usize) -> Result<Self> {
        let mut a = vec![Rational::zero(); d];
        if let Some(first) = a.first_mut() {
            *first = Rational::one();
        }
        NuijCandidate::new(a)
    }

    /// `(x, 0, …, 0)`.
    pub fn elementary(x: Rational, d: usize) -> Result<Self> {
        let mut a = NuijCandidate::zeros(d)?;
        a.a[0] = x;
        Ok(a)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.a
    }

    /// `a_k` with `a_0 = 1` and zero past `d`.
    pub fn get(&self, k: usize) -> Rational {
        match k {
            0 => Rational::one(),
            _ => self.a.get(k - 1).cloned().unwrap_or_else(Rational::zero),
        }
    }

    /// `(d·a_1, …, d!/(d−k)!·a_k, …, d!·a_d)`, the coefficients of `q_a`
    /// below the leading term.
    pub fn bd_map(&self) -> Vec<Rational> {
        self.a
            .iter()
            .enumerate()
            .map(|(i, ak)| ak * &Rational::falling_factorial(self.d, i + 1))
            .collect()
    }

    /// `q_a(z) = z^d + Σ_k a_k (d!/(d−k)!) z^(d−k)`.
    pub fn q_poly(&self) -> UniPoly {
        monic_from_coeffs(&self.bd_map())
    }

    pub fn is_nuij(&self) -> bool {
        poly::is_hyperbolic(&self.q_poly()).expect("q_a is monic, hence nonzero")
    }

    /// Membership together with its certificate polynomial.
    pub fn membership(&self) -> MembershipReport {
        let q = self.q_poly();
        let real = poly::real_root_count_with_multiplicity(&q).expect("q_a is nonzero");
        let member = real == self.d;
        MembershipReport {
            member,
            q_poly: q,
            witness_nonreal_root_count: (!member).then_some(self.d - real),
        }
    }

    /// `a(s) = (s a_1, s² a_2, …, s^d a_d)`.
    pub fn scaled(&self, s: &Rational) -> NuijCandidate {
        let mut pw = Rational::one();
        let a = self
            .a
            .iter()
            .map(|ak| {
                pw = &pw * s;
                ak * &pw
            })
            .collect();
        NuijCandidate { d: self.d, a }
    }

    /// The operator `T_a(p) = Σ_{k=0}^{d} a_k p^(k)`.
    pub fn apply(&self, p: &UniPoly) -> UniPoly {
        (0..=self.d).fold(UniPoly::zero(), |acc, k| {
            &acc + &p.derivative(k).scale(&self.get(k))
        })
    }
}

/// Monic polynomial `z^d + c_1 z^(d−1) + … + c_d`.
pub fn monic_from_coeffs(c: &[Rational]) -> UniPoly {
    let mut coeffs: Vec<Rational> = c.iter().rev().cloned().collect();
    coeffs.push(Rational::one());
    UniPoly::new(coeffs)
}

/// Result of a membership query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub member: bool,
    pub q_poly: UniPoly,
    /// Number of non-real roots of `q_poly`, counted with multiplicity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_nonreal_root_count: Option<usize>,
}

/// A monic polynomial certified to have only real roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicPoly {
    poly: UniPoly,
}

impl HyperbolicPoly {
    pub fn new(poly: UniPoly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !poly.is_monic() {
            return Err(Error::NotMonic);
        }
        if !poly::is_hyperbolic(&poly)? {
            return Err(Error::NotHyperbolic);
        }
        Ok(HyperbolicPoly { poly })
    }

    /// `∏ (z + λ_i)`.
    pub fn from_lambdas(lambdas: &[Rational]) -> Self {
        let poly = lambdas.iter().fold(UniPoly::one(), |acc, l| {
            &acc * &UniPoly::new(vec![l.clone(), Rational::one()])
        });
        HyperbolicPoly { poly }
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("nonzero")
    }
}

/// A bivariate `f(z, s)`, monic of degree `d` in `z`, whose `z^(d−i)`
/// coefficient has degree at most `i` in `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pencil {
    f: BiPoly,
    d: usize,
}

impl Pencil {
    pub fn new(f: BiPoly, d: usize) -> Result<Self> {
        if f.deg_z() != Some(d) {
            return Err(Error::InvalidPencil(format!("degree in z is not {d}")));
        }
        if f.z_coeff(d) != UniPoly::one() {
            return Err(Error::InvalidPencil(
                "leading z coefficient is not 1".into(),
            ));
        }
        for (dz, ds, _) in f.terms() {
            if ds > d - dz {
                return Err(Error::InvalidPencil(format!(
                    "coefficient of z^{dz} has degree {ds} in s"
                )));
            }
        }
        Ok(Pencil { f, d })
    }

    pub fn bipoly(&self) -> &BiPoly {
        &self.f
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `z ↦ f(z, s0)`, monic of degree `d`.
    pub fn section(&self, s0: &Rational) -> UniPoly {
        self.f.eval_s(s0)
    }
}

/// `p(z) + Σ_k a_k s^k p^(k)(z)`.
pub fn build_pencil(p: &HyperbolicPoly, a: &NuijCandidate) -> Result<Pencil> {
    if p.degree() != a.d() {
        return Err(Error::DegreeMismatch {
            expected: a.d(),
            found: p.degree(),
        });
    }
    let mut f = BiPoly::from_z(p.poly());
    for k in 1..=a.d() {
        let term = &BiPoly::from_z(&p.poly().derivative(k)) * &BiPoly::monomial(a.get(k), 0, k);
        f = &f + &term;
    }
    Pencil::new(f, a.d())
}

pub fn pencil_section(pencil: &Pencil, s0: &Rational) -> UniPoly {
    pencil.section(s0)
}

/// `b ∘ a`: applying `a` then `b`, i.e. `c_k = Σ_{i=0}^{k} a_i b_{k−i}`,
/// truncated at `d`.
pub fn compose(a: &NuijCandidate, b: &NuijCandidate) -> Result<NuijCandidate> {
    if a.d() != b.d() {
        return Err(Error::DimensionMismatch(a.d(), b.d()));
    }
    let c = (1..=a.d())
        .map(|k| (0..=k).map(|i| a.get(i) * b.get(k - i)).sum())
        .collect();
    NuijCandidate::new(c)
}

/// Left fold of [`compose`].
pub fn iterate_compose(seqs: &[NuijCandidate]) -> Result<NuijCandidate> {
    let (first, rest) = seqs.split_first().ok_or(Error::EmptySequenceList)?;
    rest.iter()
        .try_fold(first.clone(), |acc, next| compose(&acc, next))
}

/// Elementary symmetric polynomials `(e_1(x), …, e_d(x))`: the coefficients
/// of `∏ (z + x_i)` below the leading term.
pub fn viete(roots: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for x in roots {
        e.push(Rational::zero());
        for k in (1..e.len()).rev() {
            let add = &e[k - 1] * x;
            e[k] += &add;
        }
    }
    e.split_off(1)
}

/// Both sides of `T_a((z+w)^d) = q_a(z+w)`, with `w` in the `s` slot.
pub fn shift_identity_sides(a: &NuijCandidate) -> (BiPoly, BiPoly) {
    let d = a.d();
    let mut lhs = BiPoly::zero();
    for i in 0..=d {
        // T_a(z^i) = Σ_j a_j i!/(i−j)! z^(i−j)
        for j in 0..=i {
            let c = Rational::binomial(d, i) * a.get(j) * Rational::falling_factorial(i, j);
            lhs.add_term(i - j, d - i, &c);
        }
    }
    let z_plus_w = &BiPoly::z() + &BiPoly::s();
    let q = a.q_poly();
    let mut rhs = BiPoly::zero();
    for c in q.coeffs().iter().rev() {
        rhs = &(&rhs * &z_plus_w) + &BiPoly::constant(c.clone());
    }
    (lhs, rhs)
}

pub fn verify_shift_identity(a: &NuijCandidate) -> bool {
    let (lhs, rhs) = shift_identity_sides(a);
    lhs == rhs
}
