use crate::error::{Error, Result};
use crate::numerics::{CVec, Field, Tolerance, C64};

use super::canonicalize;

/// A point of `RPⁿ` or `CPⁿ` held by its canonical homogeneous coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint {
    field: Field,
    h: CVec,
    pivot: usize,
}

impl ProjPoint {
    /// The line through `v ∈ Fⁿ⁺¹`, `n ≥ 1`.
    pub fn from_vector(field: Field, v: &CVec, tol: &Tolerance) -> Result<Self> {
        if v.len() < 2 {
            return Err(Error::InvalidRange(format!(
                "homogeneous coordinates need at least 2 entries, got {}",
                v.len()
            )));
        }
        if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        if let Some(z) = v.iter().find(|z| !field.admits(**z)) {
            return Err(Error::InvalidRange(format!("entry {z} is not real")));
        }
        if v.norm() <= tol.eps_abs() {
            return Err(Error::ZeroVector);
        }
        Self::canonical(field, v, tol).ok_or(Error::ZeroVector)
    }

    /// Convenience constructor from real coordinates.
    pub fn from_real(coords: &[f64], tol: &Tolerance) -> Result<Self> {
        let v = CVec::from_iterator(coords.len(), coords.iter().map(|&x| C64::new(x, 0.0)));
        Self::from_vector(Field::Real, &v, tol)
    }

    pub fn from_complex(coords: &[C64], tol: &Tolerance) -> Result<Self> {
        Self::from_vector(Field::Complex, &CVec::from_column_slice(coords), tol)
    }

    /// Canonical form of any nonzero vector, skipping the `eps_abs` floor.
    pub(crate) fn canonical(field: Field, v: &CVec, tol: &Tolerance) -> Option<Self> {
        let (mut h, pivot) = canonicalize(v, tol.eps_abs())?;
        if field == Field::Real {
            h.iter_mut().for_each(|z| z.im = 0.0);
        }
        Some(Self { field, h, pivot })
    }

    /// The coordinate point `e_i` (zero-based) of `Fⁿ⁺¹`.
    pub fn basis_point(field: Field, n: usize, i: usize) -> Result<Self> {
        if i > n {
            return Err(Error::InvalidRange(format!("axis {i} outside 0..={n}")));
        }
        let mut v = CVec::zeros(n + 1);
        v[i] = C64::new(1.0, 0.0);
        Self::from_vector(field, &v, &Tolerance::default())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Projective dimension `n`.
    pub fn dim(&self) -> usize {
        self.h.len() - 1
    }

    /// Canonical unit representative in `Fⁿ⁺¹`.
    pub fn coords(&self) -> &CVec {
        &self.h
    }

    /// Zero-based index of the real positive pivot coordinate.
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub(crate) fn check_compatible(&self, field: Field, dim: usize) -> Result<()> {
        Error::check_field(field, self.field)?;
        Error::check_dim(dim, self.dim())
    }

    /// Whether both points are the same line.
    ///
    /// `q`'s representative is aligned to `p`'s by the phase of their inner
    /// product, then compared coordinatewise at `eps_abs`. This agrees with
    /// comparing canonical forms whenever both chose the same pivot, and stays
    /// correct when a near-tie made them pick different ones.
    pub fn equals(&self, other: &ProjPoint, tol: &Tolerance) -> Result<bool> {
        other.check_compatible(self.field, self.dim())?;
        let inner = self.h.dotc(&other.h);
        let modulus = inner.norm();
        if modulus < 0.5 {
            return Ok(false);
        }
        let align = inner.conj() / modulus;
        let close = self
            .h
            .iter()
            .zip(other.h.iter())
            .all(|(a, b)| (a - b * align).norm() < tol.eps_abs());
        Ok(close)
    }

    /// Largest coordinate difference after phase alignment, for diagnostics.
    pub fn distance(&self, other: &ProjPoint) -> Result<f64> {
        other.check_compatible(self.field, self.dim())?;
        let inner = self.h.dotc(&other.h);
        let modulus = inner.norm();
        if modulus == 0.0 {
            return Ok(1.0);
        }
        let align = inner.conj() / modulus;
        Ok(self
            .h
            .iter()
            .zip(other.h.iter())
            .map(|(a, b)| (a - b * align).norm())
            .fold(0.0, f64::max))
    }
}
