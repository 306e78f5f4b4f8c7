//! Sphere-to-projective-space projections and their fibers.
//!
//! Over `R` each point of `RPⁿ` has two preimages on the unit sphere of
//! `Rⁿ⁺¹`; over `C` each point of `CPⁿ` has a circle `{e^{iθ} h}` of them.
//! For `n = 1` those circles sit in `S³` and any two of them link once.

mod linking;
mod riemann;

pub use linking::{gauss_integral, linking_integral, linking_number, stereographic_from_south, LinkingReport};
pub use riemann::{
    cp1_affine, cp1_from_affine, cp1_to_sphere, mobius_matches_projective, sphere_to_cp1, ExtendedComplex, Mobius,
};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{self, CVec, Field, Tolerance};
use crate::projective::ProjPoint;

/// A unit vector of `Fⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint {
    field: Field,
    x: CVec,
}

impl SpherePoint {
    /// Accepts `x` when `|‖x‖ − 1| ≤ 1e-12`.
    pub fn new(field: Field, x: CVec) -> Result<Self> {
        if x.iter().any(|z| !field.admits(*z)) {
            return Err(Error::FieldMismatch {
                expected: field,
                found: Field::Complex,
            });
        }
        if (x.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidRange(format!("sphere point has norm {}", x.norm())));
        }
        Ok(Self { field, x })
    }

    /// `v / ‖v‖`.
    pub fn normalize(field: Field, v: &CVec, tol: &Tolerance) -> Result<Self> {
        let norm = v.norm();
        if norm <= tol.eps_abs() {
            return Err(Error::ZeroVector);
        }
        Self::new(field, v.unscale(norm))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coords(&self) -> &CVec {
        &self.x
    }

    /// Coordinates in the underlying real space: `(x₁, …)` over `R`,
    /// `(Re x₁, Im x₁, Re x₂, Im x₂, …)` over `C`.
    pub fn real_coords(&self) -> Vec<f64> {
        match self.field {
            Field::Real => self.x.iter().map(|z| z.re).collect(),
            Field::Complex => self.x.iter().flat_map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn distance(&self, other: &SpherePoint) -> f64 {
        (&self.x - &other.x).norm()
    }
}

/// The line through `x`.
pub fn hopf_project(x: &SpherePoint) -> ProjPoint {
    ProjPoint::from_vector(x.field, &x.x, &Tolerance::default()).expect("unit vectors are nonzero")
}

/// The two antipodal preimages `(h, −h)` of a real projective point.
pub fn real_fiber(p: &ProjPoint) -> Result<[SpherePoint; 2]> {
    Error::check_field(Field::Real, p.field())?;
    let h = p.coords().clone();
    let minus = -&h;
    Ok([
        SpherePoint {
            field: Field::Real,
            x: h,
        },
        SpherePoint {
            field: Field::Real,
            x: minus,
        },
    ])
}

/// `m` equally spaced points `e^{2πit/m} h` of the circle over a complex point.
pub fn complex_fiber_sample(p: &ProjPoint, m: usize) -> Result<Vec<SpherePoint>> {
    Error::check_field(Field::Complex, p.field())?;
    if m == 0 {
        return Err(Error::InvalidRange("sample count must be positive".into()));
    }
    Ok((0..m)
        .map(|t| SpherePoint {
            field: Field::Complex,
            x: p.coords() * numerics::phase(2.0 * PI * t as f64 / m as f64),
        })
        .collect())
}

/// Exact distance between two fibers: `min_θ ‖h_p − e^{iθ} h_q‖ = √(2 − 2|⟨h_p, h_q⟩|)`.
pub fn fiber_distance(p: &ProjPoint, q: &ProjPoint) -> Result<f64> {
    Error::check_field(p.field(), q.field())?;
    Error::check_dim(p.dim(), q.dim())?;
    let overlap = p.coords().dotc(q.coords()).norm().min(1.0);
    Ok((2.0 - 2.0 * overlap).max(0.0).sqrt())
}

/// Smallest distance between `m`-point samples of two distinct complex fibers.
pub fn fibers_min_distance(p: &ProjPoint, q: &ProjPoint, m: usize, tol: &Tolerance) -> Result<f64> {
    Error::check_field(Field::Complex, p.field())?;
    if p.equals(q, tol)? {
        return Err(Error::SamePoint);
    }
    let a = complex_fiber_sample(p, m)?;
    let b = complex_fiber_sample(q, m)?;
    Ok(a.iter()
        .flat_map(|x| b.iter().map(move |y| x.distance(y)))
        .fold(f64::INFINITY, f64::min))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::C64;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn projection_identifies_antipodes_and_phases() {
        let e1 = SpherePoint::new(
            Field::Real,
            CVec::from_column_slice(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]),
        )
        .unwrap();
        assert_eq!(hopf_project(&e1), ProjPoint::basis_point(Field::Real, 2, 0).unwrap());
        let minus = SpherePoint::new(Field::Real, -e1.coords()).unwrap();
        assert_eq!(hopf_project(&e1), hopf_project(&minus));

        let s = std::f64::consts::FRAC_1_SQRT_2;
        let x = SpherePoint::new(Field::Complex, CVec::from_column_slice(&[c(s, 0.0), c(0.0, s)])).unwrap();
        let rotated = SpherePoint::new(Field::Complex, x.coords() * numerics::phase(1.234)).unwrap();
        assert!(hopf_project(&x).equals(&hopf_project(&rotated), &tol()).unwrap());
    }

    #[test]
    fn real_fiber_of_axis() {
        let p = ProjPoint::from_real(&[1.0, 0.0], &tol()).unwrap();
        let [a, b] = real_fiber(&p).unwrap();
        assert_eq!(a.real_coords(), vec![1.0, 0.0]);
        assert_eq!(b.real_coords(), vec![-1.0, 0.0]);
        let cp = ProjPoint::from_complex(&[c(1.0, 0.0), c(0.0, 0.0)], &tol()).unwrap();
        assert!(matches!(real_fiber(&cp), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn complex_fiber_of_axis() {
        let p = ProjPoint::from_complex(&[c(1.0, 0.0), c(0.0, 0.0)], &tol()).unwrap();
        let pts = complex_fiber_sample(&p, 4).unwrap();
        let expected = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
        for (x, e) in pts.iter().zip(expected) {
            assert!((x.coords()[0] - e).norm() < 1e-15);
            assert_eq!(x.coords()[1], c(0.0, 0.0));
        }
        let rp = ProjPoint::from_real(&[1.0, 0.0], &tol()).unwrap();
        assert!(complex_fiber_sample(&rp, 4).is_err());
    }

    #[test]
    fn orthogonal_fibers_are_root_two_apart() {
        let p = ProjPoint::from_complex(&[c(1.0, 0.0), c(0.0, 0.0)], &tol()).unwrap();
        let q = ProjPoint::from_complex(&[c(0.0, 0.0), c(1.0, 0.0)], &tol()).unwrap();
        for m in [1, 7, 64] {
            let d = fibers_min_distance(&p, &q, m, &tol()).unwrap();
            assert!((d - 2.0_f64.sqrt()).abs() < 1e-14);
        }
        assert!((fiber_distance(&p, &q).unwrap() - 2.0_f64.sqrt()).abs() < 1e-15);
        assert_eq!(fibers_min_distance(&p, &p, 8, &tol()), Err(Error::SamePoint));
    }
}
