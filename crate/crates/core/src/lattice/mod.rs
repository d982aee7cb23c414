//! Exact arithmetic on the intersection lattice H²(X,ℤ) of a closed,
//! simply connected, oriented 4-manifold.
//!
//! Everything here is integer or rational and exact: cup-product pairings,
//! the characteristic-class predicate c·x ≡ x·x (mod 2), expected dimensions
//! w_c = ¼(c² − 2e − 3σ), the positive cone and its walls/chambers, blow-up
//! lattices with exceptional classes, and the chamber-claim and emptiness
//! certificates used in the rationality argument. Wall membership (c·u = 0)
//! must be decided exactly, so real cohomology classes are represented by
//! rational vectors.

pub mod chamber;
mod diag;
pub mod surface;

pub use chamber::{
    chamber_side, claim_check, hitchin_predicate, positive_cone_component, same_chamber,
    step1_emptiness_certificate, wall_exists, ChamberSide, ClaimVerdict, ConePosition,
    Step1Certificate,
};
pub use surface::{blowup_surface, class_c_i, polarization_class, threshold_n, SurfaceDescriptor};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rationals serialize as exact "p/q" strings to keep reports diff-friendly.
pub(crate) fn serialize_rational<S>(x: &BigRational, s: S) -> Result<S::Ok, S::Error>
where
    S: serde::Serializer,
{
    s.serialize_str(&x.to_string())
}

pub(crate) fn serialize_rational_vec<S>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error>
where
    S: serde::Serializer,
{
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

#[derive(Debug, Error, PartialEq)]
pub enum LatticeError {
    #[error("class length {got} does not match lattice rank {rank}")]
    DimensionMismatch { got: usize, rank: usize },
    #[error("intersection form is not symmetric")]
    NotSymmetric,
    #[error("intersection form is degenerate (det = 0)")]
    Degenerate,
    #[error("operation requires b₂⁺ = 1, lattice has b₂⁺ = {b_plus}")]
    NotLorentzian { b_plus: usize },
    #[error("reference class is degenerate: u·u > 0 but u·k = 0")]
    DegenerateReference,
    #[error("class lies on a wall: pairing with c is zero")]
    OnWall,
    #[error("exceptional index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("precondition violated: {reason}")]
    PreconditionViolated { reason: String },
    #[error("descriptor invariant violated: {reason}")]
    InvalidDescriptor { reason: String },
    #[error("c·ω = 0: the period point lies on the wall of type c")]
    WallPosition,
}

/// An integral cohomology class in the chosen basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass(pub Vec<i64>);

impl CohClass {
    pub fn zero(rank: usize) -> Self {
        CohClass(vec![0; rank])
    }

    pub fn add(&self, o: &CohClass) -> CohClass {
        CohClass(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &CohClass) -> CohClass {
        CohClass(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: i64) -> CohClass {
        CohClass(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> CohClass {
        self.scale(-1)
    }

    pub fn realify(&self) -> RealClass {
        RealClass(self.0.iter().map(|&a| integer(a)).collect())
    }
}

/// A de Rham (real) cohomology class, stored with exact rational
/// coordinates so that wall membership is decidable.
#[derive(Debug, Clone, PartialEq)]
pub struct RealClass(pub Vec<BigRational>);

impl RealClass {
    pub fn scale(&self, s: &BigRational) -> RealClass {
        RealClass(self.0.iter().map(|a| a * s).collect())
    }

    pub fn add(&self, o: &RealClass) -> RealClass {
        RealClass(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RealClass) -> RealClass {
        RealClass(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }
}

/// H²(X,ℤ) with its intersection form.
#[derive(Debug, Clone, PartialEq)]
pub struct CohomologyLattice {
    rank: usize,
    form: Vec<Vec<i64>>,
    labels: Vec<String>,
    b_plus: usize,
    b_minus: usize,
    det: BigInt,
}

impl CohomologyLattice {
    /// Validates symmetry and nondegeneracy and caches the signature.
    pub fn new(form: Vec<Vec<i64>>, labels: Option<Vec<String>>) -> Result<Self, LatticeError> {
        let rank = form.len();
        for row in &form {
            if row.len() != rank {
                return Err(LatticeError::NotSymmetric);
            }
        }
        for i in 0..rank {
            for j in 0..i {
                if form[i][j] != form[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        let det = diag::determinant(&form);
        if det.is_zero() {
            return Err(LatticeError::Degenerate);
        }
        let (b_plus, b_minus, zero) = diag::inertia(&form);
        debug_assert_eq!(zero, 0);
        let labels = labels.unwrap_or_else(|| (0..rank).map(|i| format!("b{i}")).collect());
        Ok(CohomologyLattice {
            rank,
            form,
            labels,
            b_plus,
            b_minus,
            det,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// (b₂⁺, b₂⁻)
    pub fn signature_pair(&self) -> (usize, usize) {
        (self.b_plus, self.b_minus)
    }

    pub fn signature(&self) -> i64 {
        self.b_plus as i64 - self.b_minus as i64
    }

    pub fn determinant(&self) -> &BigInt {
        &self.det
    }

    /// Basis class with a single unit coordinate.
    pub fn basis_class(&self, i: usize) -> CohClass {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        CohClass(v)
    }

    fn check_len(&self, len: usize) -> Result<(), LatticeError> {
        if len != self.rank {
            return Err(LatticeError::DimensionMismatch {
                got: len,
                rank: self.rank,
            });
        }
        Ok(())
    }

    /// Cup-product pairing of integral classes, exact.
    pub fn pair_int(&self, u: &CohClass, v: &CohClass) -> Result<i64, LatticeError> {
        self.check_len(u.0.len())?;
        self.check_len(v.0.len())?;
        let mut acc: i128 = 0;
        for i in 0..self.rank {
            if u.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc += u.0[i] as i128 * self.form[i][j] as i128 * v.0[j] as i128;
            }
        }
        Ok(i64::try_from(acc).expect("pairing overflow"))
    }

    /// Cup-product pairing of rational classes, exact.
    pub fn pair(&self, u: &RealClass, v: &RealClass) -> Result<BigRational, LatticeError> {
        self.check_len(u.0.len())?;
        self.check_len(v.0.len())?;
        let mut acc = BigRational::zero();
        for i in 0..self.rank {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if self.form[i][j] == 0 || v.0[j].is_zero() {
                    continue;
                }
                acc += &u.0[i] * integer(self.form[i][j]) * &v.0[j];
            }
        }
        Ok(acc)
    }

    /// Mixed pairing of an integral class with a rational class.
    pub fn pair_mixed(&self, c: &CohClass, u: &RealClass) -> Result<BigRational, LatticeError> {
        self.pair(&c.realify(), u)
    }

    pub fn self_pair_int(&self, u: &CohClass) -> Result<i64, LatticeError> {
        self.pair_int(u, u)
    }

    /// Is c characteristic: c·x ≡ x·x (mod 2) for every basis vector x?
    pub fn is_characteristic(&self, c: &CohClass) -> Result<bool, LatticeError> {
        self.check_len(c.0.len())?;
        for i in 0..self.rank {
            let x = self.basis_class(i);
            let cx = self.pair_int(c, &x)?;
            let xx = self.pair_int(&x, &x)?;
            if (cx - xx).rem_euclid(2) != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Expected dimension w_c = ¼(c² − 2e − 3σ) of the monopole moduli space,
/// with the characteristic-predicate flag carried along.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedDimension {
    pub value: BigRational,
    /// Whether c actually satisfies the characteristic condition; the value
    /// is returned regardless.
    pub characteristic: bool,
}

pub fn expected_dimension(
    c: &CohClass,
    s: &SurfaceDescriptor,
) -> Result<ExpectedDimension, LatticeError> {
    let csq = s.lattice.self_pair_int(c)?;
    let value = rational(csq - 2 * s.euler - 3 * s.signature, 4);
    let characteristic = s.lattice.is_characteristic(c)?;
    Ok(ExpectedDimension {
        value,
        characteristic,
    })
}

/// Almost canonical: characteristic with expected dimension zero,
/// i.e. c² = 2e(X) + 3σ(X).
pub fn is_almost_canonical(c: &CohClass, s: &SurfaceDescriptor) -> Result<bool, LatticeError> {
    let w = expected_dimension(c, s)?;
    Ok(w.characteristic && w.value.is_zero())
}
