//! Gauss linking integral of two Hopf circles in `S³`, evaluated after
//! stereographic projection to `R³`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{Field, Tolerance, C64};
use crate::projective::ProjPoint;

use super::complex_fiber_sample;

/// Fibers closer than this to the projection pole trigger a fallback rotation.
const POLE_CLEARANCE: f64 = 1e-3;

/// Fallback poles in `S³ ⊂ R⁴`, tried in order after `−e₄`. They lie over
/// distinct points of `CP¹`, so at most two of them can be blocked.
const FALLBACK_POLES: [[f64; 4]; 3] = [
    [0.6, -0.3, 0.5, -0.55],
    [-0.4, 0.7, -0.2, -0.56],
    [0.25, 0.35, -0.8, -0.4],
];

const MIN_SEGMENTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkingReport {
    /// Discretized Gauss integral before rounding.
    pub integral: f64,
    /// Nearest integer to `integral`.
    pub number: i64,
    /// 0 when projecting from `−e₄`, otherwise the one-based fallback used.
    pub pole: usize,
}

/// Stereographic projection `S³ \ {−e₄} → R³`, `x ↦ (x₁, x₂, x₃) / (1 + x₄)`.
pub fn stereographic_from_south(x: [f64; 4]) -> Option<[f64; 3]> {
    let denom = 1.0 + x[3];
    if denom <= 0.0 {
        return None;
    }
    Some([x[0] / denom, x[1] / denom, x[2] / denom])
}

type Rot4 = [[f64; 4]; 4];

fn identity4() -> Rot4 {
    let mut r = [[0.0; 4]; 4];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    r
}

/// A rotation taking the unit vector `pole` to `−e₄`: the Householder
/// reflection swapping them, followed by `x₁ ↦ −x₁` to restore orientation.
fn rotation_to_south(pole: [f64; 4]) -> Rot4 {
    let norm = pole.iter().map(|x| x * x).sum::<f64>().sqrt();
    let p = pole.map(|x| x / norm);
    let mut u = p;
    u[3] += 1.0;
    let un = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    let u = u.map(|x| x / un);
    let mut r = identity4();
    for i in 0..4 {
        for j in 0..4 {
            r[i][j] -= 2.0 * u[i] * u[j];
        }
    }
    r[0] = r[0].map(|x| -x);
    r
}

fn rotate(r: &Rot4, x: [f64; 4]) -> [f64; 4] {
    let mut y = [0.0; 4];
    for i in 0..4 {
        y[i] = (0..4).map(|j| r[i][j] * x[j]).sum();
    }
    y
}

/// Preimage of `−e₄` under `r`, as a vector of `C²`.
fn pole_of(r: &Rot4) -> [C64; 2] {
    // r is orthogonal, so the preimage is rᵀ(−e₄), i.e. minus the last row.
    let p = r[3].map(|x| -x);
    [C64::new(p[0], p[1]), C64::new(p[2], p[3])]
}

fn clearance(h: &ProjPoint, pole: [C64; 2]) -> f64 {
    let c = h.coords();
    let overlap = (c[0].conj() * pole[0] + c[1].conj() * pole[1]).norm().min(1.0);
    (2.0 - 2.0 * overlap).max(0.0).sqrt()
}

fn projected_fiber(p: &ProjPoint, m: usize, r: &Rot4) -> Result<Vec<[f64; 3]>> {
    complex_fiber_sample(p, m)?
        .iter()
        .map(|x| {
            let v = x.real_coords();
            stereographic_from_south(rotate(r, [v[0], v[1], v[2], v[3]])).ok_or(Error::DegenerateProjection)
        })
        .collect()
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Chord midpoints and chord vectors of a closed polygon.
fn segments(pts: &[[f64; 3]]) -> Vec<([f64; 3], [f64; 3])> {
    (0..pts.len())
        .map(|i| {
            let a = pts[i];
            let b = pts[(i + 1) % pts.len()];
            (
                [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0, (a[2] + b[2]) / 2.0],
                sub(b, a),
            )
        })
        .collect()
}

/// Midpoint-rule Gauss double integral
/// `(1/4π) ΣΣ (rᵢ − sⱼ) · (drᵢ × dsⱼ) / |rᵢ − sⱼ|³` over two closed polygons.
pub fn gauss_integral(curve_a: &[[f64; 3]], curve_b: &[[f64; 3]]) -> f64 {
    let sa = segments(curve_a);
    let sb = segments(curve_b);
    // Fixed summation order: one partial sum per segment of the first curve.
    let total: f64 = sa
        .iter()
        .map(|&(ra, da)| {
            sb.iter()
                .map(|&(rb, db)| {
                    let d = sub(ra, rb);
                    let r2 = dot(d, d);
                    dot(d, cross(da, db)) / (r2 * r2.sqrt())
                })
                .sum::<f64>()
        })
        .sum();
    total / (4.0 * PI)
}

/// Linking integral of the Hopf fibers over distinct `p, q ∈ CP¹`, with `m`
/// segments per fiber.
pub fn linking_integral(p: &ProjPoint, q: &ProjPoint, m: usize, tol: &Tolerance) -> Result<LinkingReport> {
    Error::check_field(Field::Complex, p.field())?;
    Error::check_field(Field::Complex, q.field())?;
    Error::check_dim(1, p.dim())?;
    Error::check_dim(1, q.dim())?;
    if m < MIN_SEGMENTS {
        return Err(Error::InvalidRange(format!(
            "need at least {MIN_SEGMENTS} segments, got {m}"
        )));
    }
    if p.equals(q, tol)? {
        return Err(Error::SamePoint);
    }
    let candidates = std::iter::once(identity4()).chain(FALLBACK_POLES.iter().map(|&pole| rotation_to_south(pole)));
    for (index, r) in candidates.enumerate() {
        let pole = pole_of(&r);
        if clearance(p, pole) < POLE_CLEARANCE || clearance(q, pole) < POLE_CLEARANCE {
            continue;
        }
        let a = projected_fiber(p, m, &r)?;
        let b = projected_fiber(q, m, &r)?;
        let integral = gauss_integral(&a, &b);
        return Ok(LinkingReport {
            integral,
            number: integral.round() as i64,
            pole: index,
        });
    }
    Err(Error::DegenerateProjection)
}

pub fn linking_number(p: &ProjPoint, q: &ProjPoint, m: usize, tol: &Tolerance) -> Result<i64> {
    linking_integral(p, q, m, tol).map(|r| r.number)
}
