use crate::error::{Error, Result};
use crate::numerics::{CVec, Field, Mat, Tolerance, C64};

use super::{ProjPoint, ProjSubspace};

/// The affine chart `w ↦ [w with 1 inserted at position j]`, embedding `Fⁿ`
/// into projective space through the affine hyperplane `H_j + e_j`.
///
/// `j` is one-based, `1 ≤ j ≤ n+1`. Affine coordinates keep ambient order
/// with position `j` removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineChart {
    field: Field,
    n: usize,
    j: usize,
}

impl AffineChart {
    pub fn new(field: Field, n: usize, j: usize) -> Result<Self> {
        if n == 0 || j == 0 || j > n + 1 {
            return Err(Error::InvalidRange(format!("chart index {j} outside 1..={}", n + 1)));
        }
        Ok(Self { field, n, j })
    }

    /// The chart centred on `p`'s pivot coordinate, where `|h_j| ≥ 1/√(n+1)`.
    pub fn cover(p: &ProjPoint) -> Self {
        Self {
            field: p.field(),
            n: p.dim(),
            j: p.pivot() + 1,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// One-based pivot index.
    pub fn index(&self) -> usize {
        self.j
    }

    pub fn embed(&self, w: &CVec) -> Result<ProjPoint> {
        Error::check_dim(self.n, w.len())?;
        let k = self.j - 1;
        let v = CVec::from_iterator(
            self.n + 1,
            (0..=self.n).map(|i| match i.cmp(&k) {
                std::cmp::Ordering::Less => w[i],
                std::cmp::Ordering::Equal => C64::new(1.0, 0.0),
                std::cmp::Ordering::Greater => w[i - 1],
            }),
        );
        ProjPoint::from_vector(self.field, &v, &Tolerance::default())
    }

    /// Affine coordinates `h_i / h_j`, or `None` on the missing locus `|h_j| ≤ eps_abs`.
    pub fn extract(&self, p: &ProjPoint, tol: &Tolerance) -> Result<Option<CVec>> {
        p.check_compatible(self.field, self.n)?;
        let h = p.coords();
        let k = self.j - 1;
        let denom = h[k];
        if denom.norm() <= tol.eps_abs() {
            return Ok(None);
        }
        let w = CVec::from_iterator(
            self.n,
            h.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, z)| z / denom),
        );
        Ok(Some(w))
    }

    /// `P(H_j)`: the points the chart misses, of projective dimension `n − 1`.
    pub fn missing_locus(&self) -> ProjSubspace {
        let k = self.j - 1;
        let mut basis = Mat::zeros(self.field, self.n + 1, self.n).into_matrix();
        for (col, i) in (0..=self.n).filter(|&i| i != k).enumerate() {
            basis[(i, col)] = C64::new(1.0, 0.0);
        }
        ProjSubspace::from_orthonormal(Mat::new(self.field, basis).expect("coordinate basis"))
            .expect("coordinate hyperplane is proper")
    }
}

/// `extract(to, embed(from, w))`; `None` when the point lies on `to`'s missing locus.
pub fn chart_transition(from: &AffineChart, to: &AffineChart, w: &CVec, tol: &Tolerance) -> Result<Option<CVec>> {
    Error::check_field(from.field, to.field)?;
    Error::check_dim(from.n, to.n)?;
    to.extract(&from.embed(w)?, tol)
}
