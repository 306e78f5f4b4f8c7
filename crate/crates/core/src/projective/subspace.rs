use crate::error::{Error, Result};
use crate::grassmann::Subspace;
use crate::numerics::{self, Field, Mat, Tolerance};

use super::{ProjMap, ProjPoint};

/// `P(L)`: the lines of a linear subspace `L ⊂ Fⁿ⁺¹`, a copy of `FPˡ` inside
/// `FPⁿ` with `0 ≤ l < n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjSubspace {
    linear: Subspace,
}

impl ProjSubspace {
    pub fn span(m: &Mat, tol: &Tolerance) -> Result<Self> {
        Ok(Self {
            linear: Subspace::span(m, tol)?,
        })
    }

    pub(crate) fn from_orthonormal(basis: Mat) -> Result<Self> {
        Ok(Self {
            linear: Subspace::from_orthonormal(basis)?,
        })
    }

    pub fn from_linear(linear: Subspace) -> Self {
        Self { linear }
    }

    pub fn linear(&self) -> &Subspace {
        &self.linear
    }

    pub fn field(&self) -> Field {
        self.linear.field()
    }

    /// Ambient projective dimension `n`.
    pub fn ambient_dim(&self) -> usize {
        self.linear.ambient_dim() - 1
    }

    /// Projective dimension `l = dim L − 1`.
    pub fn proj_dim(&self) -> usize {
        self.linear.dim() - 1
    }

    /// `‖(I − B Bᴴ) h‖ < eps_abs`.
    pub fn contains(&self, p: &ProjPoint, tol: &Tolerance) -> Result<bool> {
        p.check_compatible(self.field(), self.ambient_dim())?;
        self.linear.contains(p.coords(), tol)
    }

    /// `P(A(L))` for the map's representative `A`.
    pub fn image(&self, t: &ProjMap) -> Result<ProjSubspace> {
        Error::check_field(self.field(), t.field())?;
        Error::check_dim(self.ambient_dim(), t.dim())?;
        let image = t.matrix().mul(self.linear.basis())?;
        Self::from_orthonormal(numerics::column_space(&image, self.linear.dim()))
    }
}
