//! Dense field-tagged linear algebra shared by every geometric module.
//!
//! Entries are stored as `Complex64` regardless of field. A [`Mat`] tagged
//! [`Field::Real`] always has exactly zero imaginary parts, and every routine
//! here preserves that: factorizations of real matrices run in real
//! arithmetic so that no spurious complex phases leak into bases.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

/// Scalar field of a value: the reals or the complex numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub const ALL: [Field; 2] = [Field::Real, Field::Complex];

    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }

    /// Whether `z` is a scalar of this field.
    pub fn admits(self, z: C64) -> bool {
        match self {
            Field::Real => z.im == 0.0,
            Field::Complex => true,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" | "R" => Ok(Field::Real),
            "complex" | "C" => Ok(Field::Complex),
            other => Err(Error::InvalidRange(format!("unknown field `{other}`"))),
        }
    }
}

/// Absolute comparison threshold plus the largest accepted condition number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eps_abs: f64,
    cond_max: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;
    pub const DEFAULT_COND_MAX: f64 = 1e12;

    pub fn new(eps_abs: f64, cond_max: f64) -> Result<Self> {
        if !(eps_abs > 0.0 && eps_abs.is_finite()) {
            return Err(Error::InvalidRange(format!("eps_abs must be positive, got {eps_abs}")));
        }
        if cond_max.is_nan() || cond_max <= 1.0 {
            return Err(Error::InvalidRange(format!("cond_max must exceed 1, got {cond_max}")));
        }
        Ok(Self { eps_abs, cond_max })
    }

    pub fn eps_abs(&self) -> f64 {
        self.eps_abs
    }

    pub fn cond_max(&self) -> f64 {
        self.cond_max
    }

    pub fn with_eps(self, eps_abs: f64) -> Result<Self> {
        Self::new(eps_abs, self.cond_max)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps_abs: Self::DEFAULT_EPS,
            cond_max: Self::DEFAULT_COND_MAX,
        }
    }
}

/// A dense matrix over a tagged field.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    field: Field,
    data: CMat,
}

impl Mat {
    /// Validates finiteness and, for the real field, zero imaginary parts.
    pub fn new(field: Field, data: CMat) -> Result<Self> {
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        if let Some(&z) = data.iter().find(|z| !field.admits(**z)) {
            return Err(Error::InvalidRange(format!("entry {z} is not real")));
        }
        Ok(Self { field, data })
    }

    /// Wraps `data`, discarding imaginary parts when `field` is real.
    pub(crate) fn coerce(field: Field, mut data: CMat) -> Self {
        if field == Field::Real {
            data.iter_mut().for_each(|z| z.im = 0.0);
        }
        Self { field, data }
    }

    pub fn from_real_rows(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        Error::check_dim(rows * cols, entries.len())?;
        Self::new(
            Field::Real,
            CMat::from_row_iterator(rows, cols, entries.iter().map(|&x| C64::new(x, 0.0))),
        )
    }

    pub fn from_complex_rows(rows: usize, cols: usize, entries: &[C64]) -> Result<Self> {
        Error::check_dim(rows * cols, entries.len())?;
        Self::new(Field::Complex, CMat::from_row_slice(rows, cols, entries))
    }

    pub fn from_columns(field: Field, columns: &[CVec]) -> Result<Self> {
        Self::new(field, CMat::from_columns(columns))
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self {
            field,
            data: CMat::identity(n, n),
        }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self {
            field,
            data: CMat::zeros(rows, cols),
        }
    }

    pub fn diagonal(field: Field, diag: &[C64]) -> Result<Self> {
        Self::new(field, CMat::from_diagonal(&CVec::from_column_slice(diag)))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.data.nrows()
    }

    pub fn cols(&self) -> usize {
        self.data.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn as_matrix(&self) -> &CMat {
        &self.data
    }

    pub fn into_matrix(self) -> CMat {
        self.data
    }

    pub fn column(&self, j: usize) -> CVec {
        self.data.column(j).into_owned()
    }

    pub fn adjoint(&self) -> Mat {
        Mat::coerce(self.field, self.data.adjoint())
    }

    pub fn transpose(&self) -> Mat {
        Mat::coerce(self.field, self.data.transpose())
    }

    pub fn scale(&self, alpha: C64) -> Result<Mat> {
        Error::check_field(self.field, field_of_scalar(alpha).promote(self.field))?;
        Ok(Mat::coerce(self.field, &self.data * alpha))
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat> {
        Error::check_field(self.field, rhs.field)?;
        Error::check_dim(self.cols(), rhs.rows())?;
        Ok(Mat::coerce(self.field, &self.data * &rhs.data))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.norm()
    }

    /// Singular values in descending order.
    pub fn singular_values(&self) -> Vec<f64> {
        svd(self).sigma
    }

    /// Ratio of extreme singular values; infinite for singular matrices.
    pub fn condition_number(&self) -> f64 {
        condition_of(&self.singular_values())
    }
}

impl Field {
    /// The smaller field containing both.
    pub fn promote(self, other: Field) -> Field {
        if self == Field::Complex || other == Field::Complex {
            Field::Complex
        } else {
            Field::Real
        }
    }
}

/// Smallest field containing `z`.
pub fn field_of_scalar(z: C64) -> Field {
    if z.im == 0.0 {
        Field::Real
    } else {
        Field::Complex
    }
}

struct Svd {
    u: CMat,
    sigma: Vec<f64>,
    v_t: CMat,
}

const JACOBI_MAX_SWEEPS: usize = 80;

/// One-sided Jacobi SVD of a tall matrix (`rows ≥ cols`): `A = U Σ Vᴴ`
/// with `U` of size `rows × cols`, unsorted.
///
/// Column pairs are rotated until every pair is orthogonal to working
/// precision. Real input stays exactly real because the phase of a real
/// inner product is `±1`.
fn jacobi_tall(a: &CMat) -> (CMat, Vec<f64>, CMat) {
    let (m, n) = a.shape();
    let mut w = a.clone();
    let mut v = CMat::identity(n, n);
    let one = C64::new(1.0, 0.0);
    // Columns this small are zero for every purpose here; rotating them
    // would work with subnormal inner products and lose unitarity.
    let negligible = (f64::EPSILON * f64::EPSILON * a.norm()).powi(2);
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = w.column(p).norm_squared();
                let beta = w.column(q).norm_squared();
                let gamma = w.column(p).dotc(&w.column(q));
                let g = gamma.norm();
                if alpha <= negligible || beta <= negligible || g <= f64::EPSILON * alpha.sqrt() * beta.sqrt() {
                    continue;
                }
                rotated = true;
                // Turn the pair real, then apply the real Jacobi rotation.
                let e = (gamma / g).conj();
                let e = e / e.norm();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for mat in [&mut w, &mut v] {
                    for i in 0..mat.nrows() {
                        let x = mat[(i, p)];
                        let y = mat[(i, q)] * e;
                        mat[(i, p)] = x * c - y * s;
                        mat[(i, q)] = x * s + y * c;
                    }
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let sigma: Vec<f64> = (0..n).map(|j| w.column(j).norm()).collect();
    let largest = sigma.iter().copied().fold(0.0, f64::max);
    let mut u = CMat::zeros(m, n);
    let mut filled = vec![false; n];
    for j in 0..n {
        if sigma[j] > largest * f64::EPSILON * m as f64 && sigma[j] > 0.0 {
            u.set_column(j, &(w.column(j) / C64::new(sigma[j], 0.0)));
            filled[j] = true;
        }
    }
    // Complete U with unit vectors orthogonal to the columns found so far.
    let mut candidate = 0;
    for j in 0..n {
        if filled[j] {
            continue;
        }
        while candidate < m {
            let mut r = CVec::zeros(m);
            r[candidate] = one;
            candidate += 1;
            for _ in 0..2 {
                for k in (0..n).filter(|&k| filled[k]) {
                    let proj = u.column(k).dotc(&r);
                    r.axpy(-proj, &u.column(k), one);
                }
            }
            let norm = r.norm();
            if norm > 0.5 {
                u.set_column(j, &(r / C64::new(norm, 0.0)));
                filled[j] = true;
                break;
            }
        }
    }
    (u, sigma, v.adjoint())
}

/// Thin SVD with descending singular values.
fn svd(m: &Mat) -> Svd {
    let (u, sigma, v_t) = if m.rows() >= m.cols() {
        jacobi_tall(&m.data)
    } else {
        // Aᴴ = U Σ Vᴴ gives A = V Σ Uᴴ.
        let (u, sigma, v_t) = jacobi_tall(&m.data.adjoint());
        (v_t.adjoint(), sigma, u.adjoint())
    };
    let mut order: Vec<usize> = (0..sigma.len()).collect();
    order.sort_by(|&a, &b| sigma[b].total_cmp(&sigma[a]));
    let sigma_sorted = order.iter().map(|&i| sigma[i]).collect();
    let u_sorted = CMat::from_columns(&order.iter().map(|&i| u.column(i)).collect::<Vec<_>>());
    let v_sorted = CMat::from_rows(&order.iter().map(|&i| v_t.row(i)).collect::<Vec<_>>());
    Svd {
        u: u_sorted,
        sigma: sigma_sorted,
        v_t: v_sorted,
    }
}

fn condition_of(sigma: &[f64]) -> f64 {
    match (sigma.first(), sigma.last()) {
        (Some(&max), Some(&min)) if min > 0.0 => max / min,
        (Some(_), Some(_)) => f64::INFINITY,
        _ => 1.0,
    }
}

/// Rejects non-square input and matrices whose condition estimate exceeds
/// `tol.cond_max()`. Returns the estimate on success.
pub fn check_conditioning(m: &Mat, tol: &Tolerance) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let cond = m.condition_number();
    if cond > tol.cond_max() || !cond.is_finite() {
        return Err(Error::IllConditioned {
            cond,
            cond_max: tol.cond_max(),
        });
    }
    Ok(cond)
}

/// Inverse through the SVD, guarded by the condition estimate.
pub fn invert(m: &Mat, tol: &Tolerance) -> Result<Mat> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let Svd { u, sigma, v_t } = svd(m);
    let cond = condition_of(&sigma);
    if cond > tol.cond_max() || !cond.is_finite() {
        return Err(Error::IllConditioned {
            cond,
            cond_max: tol.cond_max(),
        });
    }
    let mut v = v_t.adjoint();
    for (j, s) in sigma.iter().enumerate() {
        v.column_mut(j).scale_mut(1.0 / s);
    }
    Ok(Mat::coerce(m.field, v * u.adjoint()))
}

/// Orthonormal basis of the column span of `m`, in column order.
///
/// Columns are swept by modified Gram-Schmidt with one reorthogonalization
/// pass; a column is dropped when its residual falls to `eps_abs` times the
/// largest input column norm.
pub fn orthonormalize(m: &Mat, tol: &Tolerance) -> Result<Mat> {
    let largest = m.data.column_iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    if largest <= tol.eps_abs() {
        return Err(Error::RankDeficientToZero);
    }
    let cutoff = tol.eps_abs() * largest;
    let mut basis: Vec<CVec> = Vec::with_capacity(m.cols());
    for col in m.data.column_iter() {
        let mut r = col.into_owned();
        for _ in 0..2 {
            for q in &basis {
                let proj = q.dotc(&r);
                r.axpy(-proj, q, C64::new(1.0, 0.0));
            }
        }
        let norm = r.norm();
        if norm > cutoff {
            basis.push(r / C64::new(norm, 0.0));
        }
    }
    if basis.is_empty() {
        return Err(Error::RankDeficientToZero);
    }
    Ok(Mat::coerce(m.field, CMat::from_columns(&basis)))
}

/// Orthonormal basis of `{x : m x = 0}`, possibly with zero columns.
///
/// A right singular vector belongs to the kernel when its singular value is
/// at most `eps_abs` times the largest one.
pub fn kernel(m: &Mat, tol: &Tolerance) -> Mat {
    let (p, n) = (m.rows(), m.cols());
    if n == 0 {
        return Mat::zeros(m.field, 0, 0);
    }
    // Pad with zero rows so the SVD yields all n right singular vectors.
    let padded = if p < n {
        let mut data = CMat::zeros(n, n);
        data.view_mut((0, 0), (p, n)).copy_from(&m.data);
        Mat::coerce(m.field, data)
    } else {
        m.clone()
    };
    let Svd { sigma, v_t, .. } = svd(&padded);
    let largest = sigma.first().copied().unwrap_or(0.0);
    let cutoff = tol.eps_abs() * largest;
    let columns: Vec<CVec> = sigma
        .iter()
        .enumerate()
        .filter(|(_, &s)| s <= cutoff)
        .map(|(i, _)| v_t.row(i).adjoint())
        .collect();
    if columns.is_empty() {
        Mat::zeros(m.field, n, 0)
    } else {
        Mat::coerce(m.field, CMat::from_columns(&columns))
    }
}

/// Orthonormal basis of the span of the leading `k` left singular vectors.
///
/// For a matrix known to have rank `k` this is its column space, without a
/// rank cutoff that could misfire on badly scaled columns.
pub fn column_space(m: &Mat, k: usize) -> Mat {
    let Svd { u, .. } = svd(m);
    Mat::coerce(m.field, u.columns(0, k.min(u.ncols())).into_owned())
}

/// Numerical rank: singular values above `eps_abs` times the largest.
pub fn rank(m: &Mat, tol: &Tolerance) -> usize {
    let sigma = m.singular_values();
    let largest = sigma.first().copied().unwrap_or(0.0);
    sigma.iter().filter(|&&s| s > tol.eps_abs() * largest).count()
}

/// Orthogonal projector `Q Qᴴ` onto the span of orthonormal columns.
pub fn projector(q: &CMat) -> CMat {
    q * q.adjoint()
}

/// Frobenius distance between the projectors of two orthonormal bases.
pub fn projector_distance(q1: &CMat, q2: &CMat) -> f64 {
    (projector(q1) - projector(q2)).norm()
}

/// Largest entry modulus of `a - b`.
pub fn max_abs_diff<'a>(a: impl IntoIterator<Item = &'a C64>, b: impl IntoIterator<Item = &'a C64>) -> f64 {
    a.into_iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `e^{iθ}`.
pub fn phase(theta: f64) -> C64 {
    C64::from_polar(1.0, theta)
}
