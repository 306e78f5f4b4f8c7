//! Real and complex projective spaces `RPⁿ`, `CPⁿ`.
//!
//! A point is a line through the origin of `Fⁿ⁺¹`; a projective map is an
//! invertible matrix up to a nonzero scalar. Both are stored in a canonical
//! form (unit norm, real positive pivot) so that class equality becomes a
//! coordinatewise comparison.

mod chart;
mod map;
mod point;
mod subspace;

pub use chart::{chart_transition, AffineChart};
pub use map::{group_dimension, transitive_witness, ProjMap};
pub use point::ProjPoint;
pub use subspace::ProjSubspace;

use crate::numerics::{CVec, C64};

/// Index of the largest-modulus entry, taking the first index whose modulus
/// is within `window` of the maximum.
pub(crate) fn pivot_index<'a>(entries: impl Iterator<Item = &'a C64> + Clone, window: f64) -> usize {
    let max = entries.clone().map(|z| z.norm()).fold(0.0, f64::max);
    entries.into_iter().position(|z| z.norm() >= max - window).unwrap_or(0)
}

/// Unit-norm representative of the class of `v` whose pivot entry is real and
/// positive. `None` for zero or non-finite input.
pub(crate) fn canonicalize(v: &CVec, window: f64) -> Option<(CVec, usize)> {
    let norm = v.norm();
    if !(norm > 0.0 && norm.is_finite()) {
        return None;
    }
    let mut h = v.unscale(norm);
    let pivot = pivot_index(h.iter(), window);
    let z = h[pivot];
    let modulus = z.norm();
    let unphase = z.conj() / modulus;
    h.iter_mut().for_each(|x| *x *= unphase);
    h[pivot] = C64::new(modulus, 0.0);
    Some((h, pivot))
}
