//! Seeded random inputs for property checks.
//!
//! Vectors are Gaussian (uniform direction on the sphere); matrices have
//! entries uniform in `[-1, 1]`, with independent real and imaginary parts
//! over `C`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::grassmann::Subspace;
use crate::numerics::{CMat, CVec, Field, Mat, Tolerance, C64};
use crate::projective::ProjPoint;

/// Deterministic generator used by every seeded check.
pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn gaussian_scalar<R: Rng + ?Sized>(rng: &mut R, field: Field) -> C64 {
    let re: f64 = StandardNormal.sample(rng);
    match field {
        Field::Real => C64::new(re, 0.0),
        Field::Complex => {
            let im: f64 = StandardNormal.sample(rng);
            C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
        }
    }
}

pub fn gaussian_vector<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize) -> CVec {
    CVec::from_fn(n, |_, _| gaussian_scalar(rng, field))
}

pub fn uniform_scalar<R: Rng + ?Sized>(rng: &mut R, field: Field) -> C64 {
    match field {
        Field::Real => C64::new(rng.random_range(-1.0..=1.0), 0.0),
        Field::Complex => C64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)),
    }
}

pub fn uniform_matrix<R: Rng + ?Sized>(rng: &mut R, field: Field, rows: usize, cols: usize) -> Mat {
    Mat::new(field, CMat::from_fn(rows, cols, |_, _| uniform_scalar(rng, field))).expect("finite entries")
}

/// A square matrix regenerated until its condition number is below `cond_below`.
pub fn well_conditioned<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize, cond_below: f64) -> Mat {
    loop {
        let m = uniform_matrix(rng, field, n, n);
        if m.condition_number() < cond_below {
            return m;
        }
    }
}

/// A nonzero scalar with modulus in `[0.1, 10]`.
pub fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, field: Field) -> C64 {
    let modulus = 10f64.powf(rng.random_range(-1.0..=1.0));
    match field {
        Field::Real => C64::new(if rng.random_bool(0.5) { modulus } else { -modulus }, 0.0),
        Field::Complex => C64::from_polar(modulus, rng.random_range(0.0..std::f64::consts::TAU)),
    }
}

pub fn proj_point<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize) -> ProjPoint {
    loop {
        let v = gaussian_vector(rng, field, n + 1);
        if let Ok(p) = ProjPoint::from_vector(field, &v, &Tolerance::default()) {
            return p;
        }
    }
}

/// A random `k`-dimensional subspace of `Fⁿ`.
pub fn subspace<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize, k: usize) -> Subspace {
    loop {
        let cols: Vec<CVec> = (0..k).map(|_| gaussian_vector(rng, field, n)).collect();
        let m = Mat::from_columns(field, &cols).expect("finite entries");
        if let Ok(s) = Subspace::span(&m, &Tolerance::default()) {
            if s.dim() == k {
                return s;
            }
        }
    }
}

/// Two distinct random points of the same space.
pub fn distinct_points<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize) -> (ProjPoint, ProjPoint) {
    let tol = Tolerance::default();
    loop {
        let p = proj_point(rng, field, n);
        let q = proj_point(rng, field, n);
        if !p.equals(&q, &tol).unwrap_or(true) {
            return (p, q);
        }
    }
}
