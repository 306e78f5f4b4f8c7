use crate::error::{Error, Result};
use crate::numerics::{self, CMat, Field, Mat, Tolerance, C64};

use super::{pivot_index, ProjPoint};

/// A projective linear transformation: an invertible `(n+1) × (n+1)` matrix
/// modulo nonzero scalars, held with unit Frobenius norm and a real positive
/// pivot entry (largest modulus, first in row-major order on ties).
#[derive(Debug, Clone, PartialEq)]
pub struct ProjMap {
    field: Field,
    m: CMat,
    pivot: (usize, usize),
}

impl ProjMap {
    pub fn from_matrix(a: &Mat, tol: &Tolerance) -> Result<Self> {
        numerics::check_conditioning(a, tol)?;
        if a.rows() < 2 {
            return Err(Error::InvalidRange("projective maps need n >= 1".into()));
        }
        Ok(Self::canonical(a.field(), a.as_matrix(), tol))
    }

    fn canonical(field: Field, a: &CMat, tol: &Tolerance) -> Self {
        let mut m = a.unscale(a.norm());
        let row_major = m.transpose();
        let flat = pivot_index(row_major.iter(), tol.eps_abs());
        let n = m.ncols();
        let pivot = (flat / n, flat % n);
        let z = m[pivot];
        let modulus = z.norm();
        let unphase = z.conj() / modulus;
        m.iter_mut().for_each(|x| *x *= unphase);
        m[pivot] = C64::new(modulus, 0.0);
        if field == Field::Real {
            m.iter_mut().for_each(|x| x.im = 0.0);
        }
        Self { field, m, pivot }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self::canonical(field, &CMat::identity(n + 1, n + 1), &Tolerance::default())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Projective dimension `n` of the space acted on.
    pub fn dim(&self) -> usize {
        self.m.nrows() - 1
    }

    /// Canonical representative matrix.
    pub fn matrix(&self) -> Mat {
        Mat::coerce(self.field, self.m.clone())
    }

    pub fn as_matrix(&self) -> &CMat {
        &self.m
    }

    /// Row-major position of the pivot entry.
    pub fn pivot(&self) -> (usize, usize) {
        self.pivot
    }

    fn check_compatible(&self, other: &ProjMap) -> Result<()> {
        Error::check_field(self.field, other.field)?;
        Error::check_dim(self.dim(), other.dim())
    }

    /// The image of `p`: the line through `M h`.
    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        p.check_compatible(self.field, self.dim())?;
        let image = &self.m * p.coords();
        // M is invertible, so the image of a unit vector is nonzero.
        ProjPoint::canonical(self.field, &image, &Tolerance::default()).ok_or(Error::ZeroVector)
    }

    /// `self ∘ other`, the class of `M₁ M₂`.
    pub fn compose(&self, other: &ProjMap, tol: &Tolerance) -> Result<ProjMap> {
        self.check_compatible(other)?;
        let product = Mat::coerce(self.field, &self.m * &other.m);
        ProjMap::from_matrix(&product, tol)
    }

    /// The class of `M⁻¹`.
    pub fn inverse(&self, tol: &Tolerance) -> Result<ProjMap> {
        let inv = numerics::invert(&self.matrix(), tol)?;
        Ok(Self::canonical(self.field, inv.as_matrix(), tol))
    }

    /// Whether both induce the same transformation, i.e. `M₂ = α M₁`.
    ///
    /// Representatives are phase-aligned through their Frobenius inner
    /// product before the entrywise `eps_abs` comparison.
    pub fn equals(&self, other: &ProjMap, tol: &Tolerance) -> Result<bool> {
        self.check_compatible(other)?;
        let inner = self.m.dotc(&other.m);
        let modulus = inner.norm();
        if modulus < 0.5 {
            return Ok(false);
        }
        let align = inner.conj() / modulus;
        Ok(self
            .m
            .iter()
            .zip(other.m.iter())
            .all(|(a, b)| (a - b * align).norm() < tol.eps_abs()))
    }
}

/// Dimension `(n+1)² − 1` of the projective linear group acting on `Fⁿ⁺¹`,
/// counted over the field itself.
pub fn group_dimension(n: usize, _field: Field) -> usize {
    (n + 1) * (n + 1) - 1
}

/// A projective map taking `p` to `q`: the class of `U_q U_pᴴ`, where `U_x`
/// completes the representative of `x` to an orthonormal basis.
pub fn transitive_witness(p: &ProjPoint, q: &ProjPoint) -> Result<ProjMap> {
    q.check_compatible(p.field(), p.dim())?;
    let tol = Tolerance::default();
    let complete = |x: &ProjPoint| -> CMat {
        let row = Mat::coerce(
            x.field(),
            CMat::from_row_slice(1, x.coords().len(), x.coords().conjugate().as_slice()),
        );
        let rest = numerics::kernel(&row, &tol);
        let n1 = x.coords().len();
        let mut u = CMat::zeros(n1, n1);
        u.set_column(0, x.coords());
        u.view_mut((0, 1), (n1, n1 - 1)).copy_from(rest.as_matrix());
        u
    };
    let product = complete(q) * complete(p).adjoint();
    ProjMap::from_matrix(&Mat::coerce(p.field(), product), &tol)
}
