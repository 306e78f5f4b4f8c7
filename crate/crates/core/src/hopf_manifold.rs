//! The quotient of `Fⁿ \ {0}` by the cyclic group `{λᵐ : m ∈ ℤ}`, `|λ| > 1`.
//!
//! Each class has exactly one representative with norm in the half-open
//! window `[1, |λ|)`. For complex `λ` the action includes its phase, so the
//! representative of `λᵐ v` is `λ^(m-k) v` for the matching shift `k`, not a
//! pure rescaling.

use crate::error::{Error, Result};
use crate::grassmann::Subspace;
use crate::numerics::{self, CVec, Field, Mat, Tolerance, C64};
use crate::projective::{ProjMap, ProjPoint};

/// Relative slack at the window edges; norms this close to `|λ|` are moved
/// down to the lower endpoint.
const WINDOW_SLACK: f64 = 1e-12;

/// Multiplication by integer powers of a fixed scalar `λ` with `|λ| > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleGroup {
    field: Field,
    lambda: C64,
}

impl ScaleGroup {
    pub fn new(field: Field, lambda: C64, tol: &Tolerance) -> Result<Self> {
        if !field.admits(lambda) {
            return Err(Error::FieldMismatch {
                expected: field,
                found: Field::Complex,
            });
        }
        if !lambda.norm().is_finite() || lambda.norm() < 1.0 + tol.eps_abs() {
            return Err(Error::InvalidRange(format!(
                "|lambda| must exceed 1, got {}",
                lambda.norm()
            )));
        }
        Ok(Self { field, lambda })
    }

    /// `λ = 2`.
    pub fn doubling(field: Field) -> Self {
        Self {
            field,
            lambda: C64::new(2.0, 0.0),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn lambda(&self) -> C64 {
        self.lambda
    }

    /// `λᵐ`.
    pub fn power(&self, m: i32) -> C64 {
        if m == 0 {
            C64::new(1.0, 0.0)
        } else {
            self.lambda.powi(m)
        }
    }

    fn act(&self, m: i32, v: &CVec) -> CVec {
        if m == 0 {
            v.clone()
        } else {
            let mut w = v * self.power(m);
            if self.field == Field::Real {
                w.iter_mut().for_each(|z| z.im = 0.0);
            }
            w
        }
    }
}

/// A class `[v]` of `Fⁿ \ {0}` modulo `λ^ℤ`.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfPoint {
    group: ScaleGroup,
    rep: CVec,
}

impl HopfPoint {
    pub fn group(&self) -> &ScaleGroup {
        &self.group
    }

    /// Representative with `1 ≤ ‖rep‖ < |λ|`.
    pub fn rep(&self) -> &CVec {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.len()
    }

    pub fn equals(&self, other: &HopfPoint, tol: &Tolerance) -> Result<bool> {
        Error::check_field(self.group.field, other.group.field)?;
        Error::check_dim(self.dim(), other.dim())?;
        if self.group.lambda != other.group.lambda {
            return Err(Error::InvalidRange("points belong to different scale groups".into()));
        }
        let close = |a: &CVec, b: &CVec| numerics::max_abs_diff(a.iter(), b.iter()) < tol.eps_abs();
        // A representative sitting on the window edge may land on either side
        // of it after roundoff; neighbours one step apart are the same class.
        Ok(close(&self.rep, &other.rep)
            || close(&self.group.act(1, &self.rep), &other.rep)
            || close(&self.rep, &self.group.act(1, &other.rep)))
    }
}

/// `[v]` together with the exponent `m` such that `rep = λ⁻ᵐ v`.
pub fn quotient_project_with_exponent(v: &CVec, g: &ScaleGroup, tol: &Tolerance) -> Result<(HopfPoint, i32)> {
    if v.iter().any(|z| !g.field.admits(*z)) {
        return Err(Error::FieldMismatch {
            expected: g.field,
            found: Field::Complex,
        });
    }
    if v.is_empty() {
        return Err(Error::InvalidRange("vector must be nonempty".into()));
    }
    let norm = v.norm();
    if !norm.is_finite() {
        return Err(Error::NonFinite);
    }
    if norm <= tol.eps_abs() {
        return Err(Error::ZeroVector);
    }
    let base = g.lambda.norm();
    let mut m = (norm.ln() / base.ln()).floor() as i32;
    let ratio = norm / base.powi(m);
    if ratio < 1.0 - WINDOW_SLACK {
        m -= 1;
    } else if ratio >= base * (1.0 - WINDOW_SLACK) {
        m += 1;
    }
    let rep = g.act(-m, v);
    Ok((HopfPoint { group: *g, rep }, m))
}

/// The class of `v`.
pub fn quotient_project(v: &CVec, g: &ScaleGroup, tol: &Tolerance) -> Result<HopfPoint> {
    quotient_project_with_exponent(v, g, tol).map(|(p, _)| p)
}

/// Whether `w = λᵐ v` for some integer `m`.
pub fn hopf_points_equal(v: &CVec, w: &CVec, g: &ScaleGroup, tol: &Tolerance) -> Result<bool> {
    Error::check_dim(v.len(), w.len())?;
    let a = quotient_project(v, g, tol)?;
    let b = quotient_project(w, g, tol)?;
    a.equals(&b, tol)
}

/// The line through the representative; constant on classes.
pub fn to_projective(h: &HopfPoint) -> Result<ProjPoint> {
    ProjPoint::from_vector(h.group.field, &h.rep, &Tolerance::default())
}

/// `[G v]`, well defined because `G` commutes with scalars.
pub fn induced_linear(g: &Mat, h: &HopfPoint, tol: &Tolerance) -> Result<HopfPoint> {
    Error::check_field(h.group.field, g.field())?;
    numerics::check_conditioning(g, tol)?;
    Error::check_dim(h.dim(), g.cols())?;
    let image = g.as_matrix() * &h.rep;
    quotient_project(&image, &h.group, tol)
}

/// The same linear map viewed on the projective space of `Fⁿ`.
pub fn projectivize(g: &Mat, tol: &Tolerance) -> Result<ProjMap> {
    ProjMap::from_matrix(g, tol)
}

/// Whether the class lies in the image of a linear subspace; `λ`-invariant.
pub fn subspace_trace_membership(h: &HopfPoint, s: &Subspace, tol: &Tolerance) -> Result<bool> {
    Error::check_field(h.group.field, s.field())?;
    s.contains(&h.rep, tol)
}
