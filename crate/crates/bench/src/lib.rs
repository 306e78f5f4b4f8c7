//! Deterministic inputs shared by the benchmarks.

use projgeo_core::grassmann::Subspace;
use projgeo_core::{sample, Field, Mat, ProjMap, ProjPoint, Tolerance};

pub const SEED: u64 = 0x5eed;

pub fn points(field: Field, n: usize, count: usize) -> Vec<ProjPoint> {
    let mut rng = sample::rng(SEED);
    (0..count).map(|_| sample::proj_point(&mut rng, field, n)).collect()
}

pub fn map(field: Field, n: usize) -> ProjMap {
    let mut rng = sample::rng(SEED + 1);
    ProjMap::from_matrix(
        &sample::well_conditioned(&mut rng, field, n + 1, 1e6),
        &Tolerance::default(),
    )
    .expect("well-conditioned fixture")
}

pub fn matrix(field: Field, n: usize) -> Mat {
    let mut rng = sample::rng(SEED + 2);
    sample::well_conditioned(&mut rng, field, n, 1e6)
}

pub fn subspace(field: Field, n: usize, k: usize) -> Subspace {
    let mut rng = sample::rng(SEED + 3);
    sample::subspace(&mut rng, field, n, k)
}

/// Two distinct points of `CP¹`.
pub fn cp1_pair() -> (ProjPoint, ProjPoint) {
    let mut rng = sample::rng(SEED + 4);
    sample::distinct_points(&mut rng, Field::Complex, 1)
}
