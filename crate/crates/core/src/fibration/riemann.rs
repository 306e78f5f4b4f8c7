//! `CP¹` as `C ∪ {∞}` and as the round sphere `S² ⊂ R³`, and the Möbius
//! transformations induced by projective maps of `CP¹`.
//!
//! Conventions: `[h₁ : h₂] ↦ z = h₁ / h₂`, so `[1 : 0]` is `∞`; the north
//! pole `(0, 0, 1)` corresponds to `∞` and the south pole to `0`.

use std::fmt;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::numerics::{CVec, Field, Mat, Tolerance, C64};
use crate::projective::{ProjMap, ProjPoint};

/// A point of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedComplex {
    Finite(C64),
    Infinity,
}

impl ExtendedComplex {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedComplex::Infinity)
    }

    /// Both infinite, or both finite with `|a − b| ≤ eps · max(1, |a|, |b|)`.
    pub fn approx_eq(&self, other: &ExtendedComplex, eps: f64) -> bool {
        match (self, other) {
            (ExtendedComplex::Infinity, ExtendedComplex::Infinity) => true,
            (ExtendedComplex::Finite(a), ExtendedComplex::Finite(b)) => {
                (a - b).norm() <= eps * 1.0_f64.max(a.norm()).max(b.norm())
            }
            _ => false,
        }
    }
}

impl From<C64> for ExtendedComplex {
    fn from(z: C64) -> Self {
        ExtendedComplex::Finite(z)
    }
}

impl fmt::Display for ExtendedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedComplex::Finite(z) => write!(f, "{z}"),
            ExtendedComplex::Infinity => f.write_str("inf"),
        }
    }
}

fn check_cp1(p: &ProjPoint) -> Result<()> {
    Error::check_field(Field::Complex, p.field())?;
    Error::check_dim(1, p.dim())
}

/// `z = h₁ / h₂`, or `∞` when `|h₂| ≤ eps_abs`.
pub fn cp1_affine(p: &ProjPoint, tol: &Tolerance) -> Result<ExtendedComplex> {
    check_cp1(p)?;
    let h = p.coords();
    if h[1].norm() <= tol.eps_abs() {
        Ok(ExtendedComplex::Infinity)
    } else {
        Ok(ExtendedComplex::Finite(h[0] / h[1]))
    }
}

/// `[z : 1]`, or `[1 : 0]` for `∞`.
pub fn cp1_from_affine(z: ExtendedComplex) -> Result<ProjPoint> {
    let v = match z {
        ExtendedComplex::Finite(z) => {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite);
            }
            [z, C64::new(1.0, 0.0)]
        }
        ExtendedComplex::Infinity => [C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
    };
    ProjPoint::from_vector(Field::Complex, &CVec::from_column_slice(&v), &Tolerance::default())
}

/// Inverse stereographic image `(2 Re z, 2 Im z, |z|² − 1) / (|z|² + 1)`.
pub fn cp1_to_sphere(p: &ProjPoint) -> Result<[f64; 3]> {
    check_cp1(p)?;
    // Homogeneous form of the same formula; avoids dividing by a tiny h₂.
    let h = p.coords();
    let (a, b) = (h[0], h[1]);
    let (na, nb) = (a.norm_sqr(), b.norm_sqr());
    let s = na + nb;
    let w = a * b.conj();
    Ok([2.0 * w.re / s, 2.0 * w.im / s, (na - nb) / s])
}

/// Stereographic projection from the north pole back to `CP¹`.
pub fn sphere_to_cp1(x: [f64; 3], tol: &Tolerance) -> Result<ProjPoint> {
    let norm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidRange(format!("point has norm {norm}, expected 1")));
    }
    let [x1, x2, x3] = x;
    // [x₁ + i x₂ : 1 − x₃] = [1 + x₃ : x₁ − i x₂]; use whichever is far from 0/0.
    let v = if x3 <= 0.0 {
        [C64::new(x1, x2), C64::new(1.0 - x3, 0.0)]
    } else {
        [C64::new(1.0 + x3, 0.0), C64::new(x1, -x2)]
    };
    ProjPoint::from_vector(Field::Complex, &CVec::from_column_slice(&v), tol)
}

/// `z ↦ (a z + b) / (c z + d)` with `ad − bc ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl Mobius {
    pub fn new(a: C64, b: C64, c: C64, d: C64, tol: &Tolerance) -> Result<Self> {
        let det = a * d - b * c;
        if det.norm() <= tol.eps_abs() {
            return Err(Error::SingularCoefficients(det.norm()));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn determinant(&self) -> C64 {
        self.a * self.d - self.b * self.c
    }

    /// The matrix `[[a, b], [c, d]]`.
    pub fn matrix(&self) -> Mat {
        Mat::from_complex_rows(2, 2, &[self.a, self.b, self.c, self.d]).expect("finite coefficients")
    }

    pub fn apply(&self, z: ExtendedComplex, tol: &Tolerance) -> ExtendedComplex {
        let eps = tol.eps_abs();
        match z {
            ExtendedComplex::Finite(z) => {
                let den = self.c * z + self.d;
                if den.norm() <= eps {
                    ExtendedComplex::Infinity
                } else {
                    ExtendedComplex::Finite((self.a * z + self.b) / den)
                }
            }
            ExtendedComplex::Infinity => {
                if self.c.norm() > eps {
                    ExtendedComplex::Finite(self.a / self.c)
                } else {
                    ExtendedComplex::Infinity
                }
            }
        }
    }

    /// `-d / c`, the finite point sent to `∞`, if any.
    pub fn pole(&self, tol: &Tolerance) -> Option<C64> {
        (self.c.norm() > tol.eps_abs()).then(|| -self.d / self.c)
    }
}

/// Whether the Möbius formula agrees with the projective action of
/// `[[a, b], [c, d]]` read in the affine coordinate, on `0`, `∞`, the pole,
/// and `samples` random points. Finite values agree to `1e-9` relative
/// to `max(1, |w|)`; `∞` must match `∞`.
pub fn mobius_matches_projective<R: Rng + ?Sized>(
    mobius: &Mobius,
    samples: usize,
    rng: &mut R,
    tol: &Tolerance,
) -> Result<bool> {
    let map = ProjMap::from_matrix(&mobius.matrix(), tol)?;
    let mut points = vec![ExtendedComplex::Finite(C64::new(0.0, 0.0)), ExtendedComplex::Infinity];
    points.extend(mobius.pole(tol).map(ExtendedComplex::Finite));
    for _ in 0..samples {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        points.push(ExtendedComplex::Finite(C64::new(3.0 * re, 3.0 * im)));
    }
    for z in points {
        let via_projective = cp1_affine(&map.apply(&cp1_from_affine(z)?)?, tol)?;
        let direct = mobius.apply(z, tol);
        if !via_projective.approx_eq(&direct, 1e-9) {
            return Ok(false);
        }
    }
    Ok(true)
}
