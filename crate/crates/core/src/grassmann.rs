//! Grassmannians `G(k, n)` of k-dimensional subspaces of `Fⁿ`.
//!
//! A subspace is held by an orthonormal `n × k` basis. Bases are not unique,
//! so equality goes through the orthogonal projector `B Bᴴ`.
//!
//! Around a base subspace `L` with a complement `M`, the graph chart sends a
//! linear map `A: L → M` (an `(n-k) × k` matrix in the chosen bases) to the
//! subspace `{v + A v : v ∈ L}`. Every subspace transverse to `M` has exactly
//! one such parameter.

use crate::error::{Error, Result};
use crate::numerics::{self, CMat, CVec, Field, Mat, Tolerance, C64};
use crate::projective::ProjPoint;

/// A k-dimensional linear subspace of `Fⁿ` with `1 ≤ k < n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    basis: Mat,
}

impl Subspace {
    /// Span of the columns of `m`, which must have rank strictly between 0 and `rows`.
    pub fn span(m: &Mat, tol: &Tolerance) -> Result<Self> {
        let basis = numerics::orthonormalize(m, tol)?;
        Self::from_orthonormal(basis)
    }

    pub(crate) fn from_orthonormal(basis: Mat) -> Result<Self> {
        let (n, k) = (basis.rows(), basis.cols());
        if k == 0 || k >= n {
            return Err(Error::InvalidRange(format!(
                "subspace dimension {k} must satisfy 1 <= k < {n}"
            )));
        }
        Ok(Self { basis })
    }

    /// Span of standard basis vectors `e_i` (zero-based indices).
    pub fn coordinate(field: Field, n: usize, axes: &[usize]) -> Result<Self> {
        let mut m = CMat::zeros(n, axes.len());
        for (col, &i) in axes.iter().enumerate() {
            if i >= n {
                return Err(Error::InvalidRange(format!("axis {i} outside 0..{n}")));
            }
            m[(i, col)] = C64::new(1.0, 0.0);
        }
        Self::span(&Mat::new(field, m)?, &Tolerance::default())
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    /// Ambient dimension `n`.
    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Subspace dimension `k`.
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn projector(&self) -> CMat {
        numerics::projector(self.basis.as_matrix())
    }

    /// Frobenius distance between orthogonal projectors.
    pub fn distance(&self, other: &Subspace) -> f64 {
        numerics::projector_distance(self.basis.as_matrix(), other.basis.as_matrix())
    }

    /// Same field, ambient dimension and span within `eps_abs` projector distance.
    pub fn approx_eq(&self, other: &Subspace, tol: &Tolerance) -> bool {
        self.field() == other.field()
            && self.ambient_dim() == other.ambient_dim()
            && self.dim() == other.dim()
            && self.distance(other) < tol.eps_abs()
    }

    /// Norm of the component of `v` orthogonal to the subspace.
    pub fn residual(&self, v: &CVec) -> Result<f64> {
        Error::check_dim(self.ambient_dim(), v.len())?;
        let b = self.basis.as_matrix();
        Ok((v - b * (b.adjoint() * v)).norm())
    }

    pub fn contains(&self, v: &CVec, tol: &Tolerance) -> Result<bool> {
        Ok(self.residual(v)? < tol.eps_abs())
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        Error::check_field(self.field(), other.field())?;
        Error::check_dim(self.ambient_dim(), other.ambient_dim())
    }

    /// The line spanned by a projective point's representative.
    pub fn from_point(p: &ProjPoint) -> Result<Self> {
        Self::from_orthonormal(Mat::coerce(p.field(), CMat::from_columns(&[p.coords().clone()])))
    }

    /// The projective point of a line; errors unless `k = 1`.
    pub fn to_point(&self, tol: &Tolerance) -> Result<ProjPoint> {
        Error::check_dim(1, self.dim())?;
        ProjPoint::from_vector(self.field(), &self.basis.column(0), tol)
    }
}

/// Dimension of `G(k, n)` over its field: `k (n - k)`.
pub fn grassmann_dimension(k: usize, n: usize) -> Result<usize> {
    if k == 0 || k >= n {
        return Err(Error::InvalidRange(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    Ok(k * (n - k))
}

/// Graph-chart coordinates around `base`, parametrized by maps into `complement`.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphChart {
    base: Subspace,
    complement: Subspace,
    // [B_L B_M], invertible by transversality.
    frame_inv: CMat,
}

impl GraphChart {
    pub fn new(base: Subspace, complement: Subspace, tol: &Tolerance) -> Result<Self> {
        base.check_compatible(&complement)?;
        let n = base.ambient_dim();
        Error::check_dim(n - base.dim(), complement.dim())?;
        let frame = stack_columns(base.basis(), complement.basis());
        let sigma = frame.singular_values();
        let smallest = sigma.last().copied().unwrap_or(0.0);
        if smallest <= tol.eps_abs() {
            return Err(Error::NotTransverse(smallest));
        }
        let frame_inv = numerics::invert(&frame, tol)?.into_matrix();
        Ok(Self {
            base,
            complement,
            frame_inv,
        })
    }

    /// Chart around `base` using its orthogonal complement.
    pub fn around(base: Subspace) -> Self {
        let complement = orthogonal_complement(&base);
        let tol = Tolerance::default();
        Self::new(base, complement, &tol).expect("orthogonal complement is transverse")
    }

    pub fn base(&self) -> &Subspace {
        &self.base
    }

    pub fn complement(&self) -> &Subspace {
        &self.complement
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    /// Shape `(n - k, k)` of chart parameters; its area is `k (n - k)`.
    pub fn parameter_shape(&self) -> (usize, usize) {
        (self.complement.dim(), self.base.dim())
    }

    /// The subspace `{B_L x + B_M A x}`.
    pub fn graph(&self, a: &Mat) -> Result<Subspace> {
        let (rows, cols) = self.parameter_shape();
        if (a.rows(), a.cols()) != (rows, cols) {
            return Err(Error::ShapeMismatch {
                expected_rows: rows,
                expected_cols: cols,
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        Error::check_field(self.field(), a.field())?;
        let bl = self.base.basis.as_matrix();
        let bm = self.complement.basis.as_matrix();
        let spanning = Mat::coerce(self.field(), bl + bm * a.as_matrix());
        // The columns are independent: their L-components are orthonormal.
        Subspace::from_orthonormal(numerics::column_space(&spanning, self.base.dim()))
    }

    /// The parameter of `x`, or `None` when `x` meets the complement.
    pub fn coords(&self, x: &Subspace, tol: &Tolerance) -> Result<Option<Mat>> {
        self.base.check_compatible(x)?;
        Error::check_dim(self.base.dim(), x.dim())?;
        let k = self.base.dim();
        let parts = &self.frame_inv * x.basis.as_matrix();
        let l_part = Mat::coerce(self.field(), parts.rows(0, k).into_owned());
        let m_part = parts.rows(k, parts.nrows() - k).into_owned();
        let smallest = l_part.singular_values().last().copied().unwrap_or(0.0);
        if smallest <= tol.eps_abs() {
            return Ok(None);
        }
        let l_inv = match numerics::invert(&l_part, tol) {
            Ok(inv) => inv,
            Err(Error::IllConditioned { .. }) => return Ok(None),
            Err(e) => return Err(e),
        };
        Ok(Some(Mat::coerce(self.field(), m_part * l_inv.as_matrix())))
    }
}

fn stack_columns(a: &Mat, b: &Mat) -> Mat {
    let (n, ka, kb) = (a.rows(), a.cols(), b.cols());
    let mut m = CMat::zeros(n, ka + kb);
    m.view_mut((0, 0), (n, ka)).copy_from(a.as_matrix());
    m.view_mut((0, ka), (n, kb)).copy_from(b.as_matrix());
    Mat::coerce(a.field(), m)
}

/// Image `G(S)` of a subspace under an invertible matrix.
pub fn apply_gl(g: &Mat, s: &Subspace, tol: &Tolerance) -> Result<Subspace> {
    Error::check_field(s.field(), g.field())?;
    numerics::check_conditioning(g, tol)?;
    Error::check_dim(s.ambient_dim(), g.cols())?;
    let image = g.mul(s.basis())?;
    Subspace::from_orthonormal(numerics::column_space(&image, s.dim()))
}

/// A unitary `G` with `G(l1) = l2`, built from orthonormal completions.
pub fn transitive_witness(l1: &Subspace, l2: &Subspace) -> Result<Mat> {
    l1.check_compatible(l2)?;
    Error::check_dim(l1.dim(), l2.dim())?;
    let u1 = stack_columns(l1.basis(), orthogonal_complement(l1).basis());
    let u2 = stack_columns(l2.basis(), orthogonal_complement(l2).basis());
    u2.mul(&u1.adjoint())
}

/// `S⊥` under the Hermitian inner product.
pub fn orthogonal_complement(s: &Subspace) -> Subspace {
    let k = numerics::kernel(&s.basis.adjoint(), &Tolerance::default());
    Subspace::from_orthonormal(k).expect("complement of a proper subspace is proper")
}

/// Annihilator of `S` under the bilinear pairing `Σ fᵢ vᵢ`, identified with `Fⁿ`.
pub fn annihilator(s: &Subspace) -> Subspace {
    let k = numerics::kernel(&s.basis.transpose(), &Tolerance::default());
    Subspace::from_orthonormal(k).expect("annihilator of a proper subspace is proper")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(grassmann_dimension(1, 4), Ok(3));
        assert_eq!(grassmann_dimension(2, 4), Ok(4));
        assert_eq!(grassmann_dimension(3, 6), Ok(9));
        assert!(grassmann_dimension(0, 4).is_err());
        assert!(grassmann_dimension(4, 4).is_err());
    }

    #[test]
    fn span_rejects_full_space() {
        assert!(Subspace::span(&Mat::identity(Field::Real, 3), &Tolerance::default()).is_err());
    }

    #[test]
    fn zero_parameter_is_the_base() {
        let base = Subspace::coordinate(Field::Real, 4, &[0, 2]).unwrap();
        let chart = GraphChart::around(base.clone());
        let g = chart.graph(&Mat::zeros(Field::Real, 2, 2)).unwrap();
        assert!(g.distance(&base) < 1e-14);
    }

    #[test]
    fn line_of_slope_t() {
        let tol = Tolerance::default();
        let l = Subspace::coordinate(Field::Real, 2, &[0]).unwrap();
        let m = Subspace::coordinate(Field::Real, 2, &[1]).unwrap();
        let chart = GraphChart::new(l, m, &tol).unwrap();
        let t = 0.75;
        let g = chart.graph(&Mat::from_real_rows(1, 1, &[t]).unwrap()).unwrap();
        let expected = Subspace::span(&Mat::from_real_rows(2, 1, &[1.0, t]).unwrap(), &tol).unwrap();
        assert!(g.distance(&expected) < 1e-14);
    }

    #[test]
    fn graph_rejects_wrong_shape() {
        let chart = GraphChart::around(Subspace::coordinate(Field::Real, 3, &[0]).unwrap());
        assert!(matches!(
            chart.graph(&Mat::zeros(Field::Real, 1, 2)),
            Err(Error::ShapeMismatch {
                expected_rows: 2,
                expected_cols: 1,
                ..
            })
        ));
    }

    #[test]
    fn coords_at_base_and_boundary() {
        let tol = Tolerance::default();
        let base = Subspace::coordinate(Field::Complex, 4, &[0, 1]).unwrap();
        let chart = GraphChart::around(base.clone());
        let a = chart.coords(&base, &tol).unwrap().unwrap();
        assert!(a.frobenius_norm() < 1e-14);
        let m = chart.complement().clone();
        assert_eq!(chart.coords(&m, &tol).unwrap(), None);
    }

    #[test]
    fn non_transverse_chart_is_rejected() {
        let l = Subspace::coordinate(Field::Real, 2, &[0]).unwrap();
        assert!(matches!(
            GraphChart::new(l.clone(), l, &Tolerance::default()),
            Err(Error::NotTransverse(_))
        ));
    }

    #[test]
    fn complement_of_axis() {
        let s = Subspace::coordinate(Field::Real, 3, &[0]).unwrap();
        let expected = Subspace::coordinate(Field::Real, 3, &[1, 2]).unwrap();
        assert!(orthogonal_complement(&s).distance(&expected) < 1e-12);
        assert!(annihilator(&s).distance(&expected) < 1e-12);
    }

    #[test]
    fn annihilator_differs_from_complement_over_c() {
        let tol = Tolerance::default();
        let s = Subspace::span(
            &Mat::from_complex_rows(2, 1, &[c(1.0, 0.0), c(0.0, 1.0)]).unwrap(),
            &tol,
        )
        .unwrap();
        let ann = annihilator(&s);
        // Solving f₁ + i f₂ = 0 gives f = (-i, 1).
        let expected = Subspace::span(
            &Mat::from_complex_rows(2, 1, &[c(0.0, -1.0), c(1.0, 0.0)]).unwrap(),
            &tol,
        )
        .unwrap();
        assert!(ann.distance(&expected) < 1e-12);
        let f = ann.basis().column(0);
        let pairing = f[0] * c(1.0, 0.0) + f[1] * c(0.0, 1.0);
        assert!(pairing.norm() < 1e-12);
        // The Hermitian complement is the conjugate line (i, 1).
        assert!(orthogonal_complement(&s).distance(&ann) > 1.0);
    }

    #[test]
    fn gl_permutation_moves_axes() {
        let tol = Tolerance::default();
        let s = Subspace::coordinate(Field::Real, 4, &[0, 1]).unwrap();
        let mut p = vec![0.0; 16];
        for (from, to) in [(0, 2), (1, 3), (2, 0), (3, 1)] {
            p[to * 4 + from] = 1.0;
        }
        let g = Mat::from_real_rows(4, 4, &p).unwrap();
        let image = apply_gl(&g, &s, &tol).unwrap();
        let expected = Subspace::coordinate(Field::Real, 4, &[2, 3]).unwrap();
        assert!(image.distance(&expected) < 1e-14);
    }

    #[test]
    fn gl_rejects_singular() {
        let s = Subspace::coordinate(Field::Real, 2, &[0]).unwrap();
        let g = Mat::from_real_rows(2, 2, &[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert!(matches!(
            apply_gl(&g, &s, &Tolerance::default()),
            Err(Error::IllConditioned { .. })
        ));
    }

    #[test]
    fn witness_between_axes() {
        let tol = Tolerance::default();
        let l1 = Subspace::coordinate(Field::Real, 3, &[0]).unwrap();
        let l2 = Subspace::coordinate(Field::Real, 3, &[1]).unwrap();
        let g = transitive_witness(&l1, &l2).unwrap();
        assert!(apply_gl(&g, &l1, &tol).unwrap().distance(&l2) < 1e-10);
    }
}
