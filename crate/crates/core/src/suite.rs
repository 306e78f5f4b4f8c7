//! Seeded property suites, one per geometric module.
//!
//! Every property draws from its own generator, seeded from the run seed and
//! the property's name, so a report depends only on `(suite, trials, seed)`.

use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fibration::{self, Mobius};
use crate::grassmann::{self, GraphChart, Subspace};
use crate::hopf_manifold::{self, ScaleGroup};
use crate::numerics::{self, CMat, Field, Mat, Tolerance, C64};
use crate::projective::{self, AffineChart, ProjMap, ProjPoint, ProjSubspace};
use crate::sample;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Projective,
    Grassmann,
    HopfManifold,
    Fibration,
    All,
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "projective" => Ok(SuiteName::Projective),
            "grassmann" => Ok(SuiteName::Grassmann),
            "hopf-manifold" => Ok(SuiteName::HopfManifold),
            "fibration" => Ok(SuiteName::Fibration),
            "all" => Ok(SuiteName::All),
            other => Err(Error::InvalidRange(format!("unknown suite `{other}`"))),
        }
    }
}

type Check = fn(&mut ChaCha8Rng, usize, &Tolerance) -> Result<bool>;

struct Property {
    name: &'static str,
    check: Check,
    /// Upper bound on trials for expensive properties.
    max_trials: Option<usize>,
}

const fn prop(name: &'static str, check: Check) -> Property {
    Property {
        name,
        check,
        max_trials: None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyOutcome {
    pub suite: &'static str,
    pub name: &'static str,
    pub trials: usize,
    pub passed: usize,
    pub first_failure: Option<String>,
}

impl PropertyOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub seed: u64,
    pub trials: usize,
    pub outcomes: Vec<PropertyOutcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {} trials {}", self.seed, self.trials)?;
        for o in &self.outcomes {
            let status = if o.ok() { "pass" } else { "FAIL" };
            write!(f, "{status} {}.{} {}/{}", o.suite, o.name, o.passed, o.trials)?;
            if let Some(msg) = &o.first_failure {
                write!(f, " ({msg})")?;
            }
            writeln!(f)?;
        }
        let failed = self.outcomes.iter().filter(|o| !o.ok()).count();
        if failed == 0 {
            writeln!(f, "all {} properties passed", self.outcomes.len())
        } else {
            writeln!(f, "{failed} of {} properties failed", self.outcomes.len())
        }
    }
}

fn property_seed(seed: u64, suite: &str, name: &str) -> u64 {
    // FNV-1a over "suite.name", mixed with the run seed.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in suite.bytes().chain(std::iter::once(b'.')).chain(name.bytes()) {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn run_properties(
    suite: &'static str,
    props: &[Property],
    trials: usize,
    seed: u64,
    tol: &Tolerance,
) -> Vec<PropertyOutcome> {
    props
        .iter()
        .map(|p| {
            let mut rng = sample::rng(property_seed(seed, suite, p.name));
            let count = p.max_trials.map_or(trials, |cap| trials.min(cap));
            let mut passed = 0;
            let mut first_failure = None;
            for t in 0..count {
                match (p.check)(&mut rng, t, tol) {
                    Ok(true) => passed += 1,
                    Ok(false) => {
                        first_failure.get_or_insert_with(|| format!("trial {t}: property violated"));
                    }
                    Err(e) => {
                        first_failure.get_or_insert_with(|| format!("trial {t}: {e}"));
                    }
                }
            }
            PropertyOutcome {
                suite,
                name: p.name,
                trials: count,
                passed,
                first_failure,
            }
        })
        .collect()
}

pub fn run(suite: SuiteName, trials: usize, seed: u64, tol: &Tolerance) -> Report {
    let selected: &[(&'static str, &[Property])] = &[
        ("projective", PROJECTIVE),
        ("grassmann", GRASSMANN),
        ("hopf-manifold", HOPF_MANIFOLD),
        ("fibration", FIBRATION),
    ];
    let outcomes = selected
        .iter()
        .filter(|(name, _)| match suite {
            SuiteName::All => true,
            SuiteName::Projective => *name == "projective",
            SuiteName::Grassmann => *name == "grassmann",
            SuiteName::HopfManifold => *name == "hopf-manifold",
            SuiteName::Fibration => *name == "fibration",
        })
        .flat_map(|(name, props)| run_properties(name, props, trials, seed, tol))
        .collect();
    Report { seed, trials, outcomes }
}

// ---- helpers ---------------------------------------------------------------

const PROJ_DIMS: [usize; 4] = [1, 2, 3, 5];
const COND_BOUND: f64 = 1e6;

fn field_for(trial: usize) -> Field {
    Field::ALL[trial % 2]
}

fn pick_dim(rng: &mut ChaCha8Rng) -> usize {
    *PROJ_DIMS.choose(rng).expect("nonempty")
}

fn random_map(rng: &mut ChaCha8Rng, field: Field, n: usize, tol: &Tolerance) -> Result<ProjMap> {
    ProjMap::from_matrix(&sample::well_conditioned(rng, field, n + 1, COND_BOUND), tol)
}

fn close_at(tol: &Tolerance, eps: f64) -> Result<Tolerance> {
    tol.with_eps(eps)
}

// ---- projective ------------------------------------------------------------

const PROJECTIVE: &[Property] =
    &[
        prop("scalar_invariance", |rng, t, tol| {
            let field = field_for(t);
            let n = pick_dim(rng);
            let v = sample::gaussian_vector(rng, field, n + 1);
            let alpha = sample::nonzero_scalar(rng, field);
            let p = ProjPoint::from_vector(field, &v, tol)?;
            let q = ProjPoint::from_vector(field, &(&v * alpha), tol)?;
            let a = sample::well_conditioned(rng, field, n + 1, COND_BOUND);
            let ma = ProjMap::from_matrix(&a, tol)?;
            let mb = ProjMap::from_matrix(&a.scale(alpha)?, tol)?;
            Ok(numerics::max_abs_diff(p.coords().iter(), q.coords().iter()) < 1e-12
                && numerics::max_abs_diff(ma.as_matrix().iter(), mb.as_matrix().iter()) < 1e-12)
        }),
        prop("functoriality", |rng, t, tol| {
            let field = field_for(t);
            let n = pick_dim(rng);
            let t1 = random_map(rng, field, n, tol)?;
            let t2 = random_map(rng, field, n, tol)?;
            let p = sample::proj_point(rng, field, n);
            let composed = t1.compose(&t2, tol)?.apply(&p)?;
            let stepwise = t1.apply(&t2.apply(&p)?)?;
            let product = ProjMap::from_matrix(&t1.matrix().mul(&t2.matrix())?, tol)?;
            let tight = close_at(tol, 1e-9)?;
            Ok(composed.equals(&stepwise, &tight)? && product.equals(&t1.compose(&t2, tol)?, &tight)?)
        }),
        prop("inverse_law", |rng, t, tol| {
            let field = field_for(t);
            let n = pick_dim(rng);
            let map = random_map(rng, field, n, tol)?;
            let inv = map.inverse(tol)?;
            let p = sample::proj_point(rng, field, n);
            let tight = close_at(tol, 1e-9)?;
            Ok(map.compose(&inv, tol)?.equals(&ProjMap::identity(field, n), &tight)?
                && inv.apply(&map.apply(&p)?)?.equals(&p, &tight)?)
        }),
        prop("scalar_class", |rng, t, tol| {
            let field = field_for(t);
            let n = pick_dim(rng);
            let a = sample::well_conditioned(rng, field, n + 1, COND_BOUND);
            let alpha = sample::nonzero_scalar(rng, field);
            let same = ProjMap::from_matrix(&a, tol)?.equals(&ProjMap::from_matrix(&a.scale(alpha)?, tol)?, tol)?;
            let noise = sample::uniform_matrix(rng, field, n + 1, n + 1);
            let perturbed = Mat::new(field, a.as_matrix() + noise.as_matrix() * C64::new(0.1, 0.0))?;
            let different = match ProjMap::from_matrix(&perturbed, tol) {
                Ok(b) => !ProjMap::from_matrix(&a, tol)?.equals(&b, tol)?,
                Err(Error::IllConditioned { .. }) => true,
                Err(e) => return Err(e),
            };
            Ok(same && different)
        }),
        prop("atlas_coverage", |rng, t, tol| {
            let field = field_for(t);
            let n = pick_dim(rng);
            let p = sample::proj_point(rng, field, n);
            let chart = AffineChart::cover(&p);
            let hj = p.coords()[chart.index() - 1].norm();
            let Some(w) = chart.extract(&p, tol)? else {
                return Ok(false);
            };
            let back = chart.embed(&w)?;
            let again = chart.extract(&back, tol)?.ok_or(Error::ZeroVector)?;
            Ok(hj >= 1.0 / ((n + 1) as f64).sqrt() - 1e-12
                && back.equals(&p, &close_at(tol, 1e-10)?)?
                && (again - w).norm() < 1e-10 * (1.0 + (n as f64).sqrt()))
        }),
        prop("missing_locus_identity", |rng, t, tol| {
            let field = field_for(t);
            let n = pick_dim(rng);
            let mut v = sample::gaussian_vector(rng, field, n + 1);
            // Every other trial puts the point on a coordinate hyperplane.
            if t % 4 >= 2 {
                let k = rng.random_range(0..=n);
                v[k] = C64::new(0.0, 0.0);
            }
            let p = ProjPoint::from_vector(field, &v, tol)?;
            for j in 1..=n + 1 {
                let chart = AffineChart::new(field, n, j)?;
                let absent = chart.extract(&p, tol)?.is_none();
                if absent != chart.missing_locus().contains(&p, tol)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        prop("chart_transition_round_trip", |rng, t, tol| {
            let field = field_for(t);
            let n = pick_dim(rng);
            let c1 = AffineChart::new(field, n, rng.random_range(1..=n + 1))?;
            let c2 = AffineChart::new(field, n, rng.random_range(1..=n + 1))?;
            let w = sample::gaussian_vector(rng, field, n);
            match projective::chart_transition(&c1, &c2, &w, tol)? {
                Some(u) => {
                    let back = projective::chart_transition(&c2, &c1, &u, tol)?.ok_or(Error::ZeroVector)?;
                    Ok((back - &w).norm() < 1e-9 * (1.0 + w.norm()))
                }
                None => Ok(c1 != c2),
            }
        }),
        prop("transitivity", |rng, t, tol| {
            let field = field_for(t);
            let n = pick_dim(rng);
            let p = sample::proj_point(rng, field, n);
            let q = sample::proj_point(rng, field, n);
            let witness = projective::transitive_witness(&p, &q)?;
            witness.apply(&p)?.equals(&q, &close_at(tol, 1e-9)?)
        }),
        prop("subspace_image_membership", |rng, t, tol| {
            let field = field_for(t);
            let n = pick_dim(rng).max(2);
            let k = rng.random_range(1..=n);
            let s = ProjSubspace::from_linear(sample::subspace(rng, field, n + 1, k));
            let coeffs = sample::gaussian_vector(rng, field, k);
            let v = s.linear().basis().as_matrix() * coeffs;
            let p = ProjPoint::from_vector(field, &v, tol)?;
            let map = random_map(rng, field, n, tol)?;
            Ok(s.contains(&p, tol)?
                && s.image(&map)?.contains(&map.apply(&p)?, tol)?
                && s.image(&map)?.proj_dim() == k - 1)
        }),
    ];

// ---- grassmann -------------------------------------------------------------

fn pick_gr(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let n = rng.random_range(2..=6);
    (rng.random_range(1..n), n)
}

const GRASSMANN: &[Property] = &[
    prop("graph_chart_round_trip", |rng, t, tol| {
        let field = field_for(t);
        let (k, n) = pick_gr(rng);
        let chart = GraphChart::around(sample::subspace(rng, field, n, k));
        let a = sample::uniform_matrix(rng, field, n - k, k);
        let x = chart.graph(&a)?;
        let Some(back) = chart.coords(&x, tol)? else {
            return Ok(false);
        };
        let frame = Mat::new(
            field,
            stack(x.basis().as_matrix(), chart.complement().basis().as_matrix()),
        )?;
        Ok(x.dim() == k
            && numerics::max_abs_diff(back.as_matrix().iter(), a.as_matrix().iter()) < 1e-9
            && numerics::rank(&frame, tol) == n)
    }),
    prop("coords_then_graph", |rng, t, tol| {
        let field = field_for(t);
        let (k, n) = pick_gr(rng);
        let chart = GraphChart::around(sample::subspace(rng, field, n, k));
        let x = sample::subspace(rng, field, n, k);
        match chart.coords(&x, tol)? {
            Some(a) => Ok(chart.graph(&a)?.distance(&x) < 1e-9),
            None => Ok(false),
        }
    }),
    prop("parameter_dimension", |rng, t, _tol| {
        let field = field_for(t);
        let (k, n) = pick_gr(rng);
        let chart = GraphChart::around(sample::subspace(rng, field, n, k));
        let (rows, cols) = chart.parameter_shape();
        Ok(rows * cols == grassmann::grassmann_dimension(k, n)?)
    }),
    prop("gl_action", |rng, t, tol| {
        let field = field_for(t);
        let (k, n) = pick_gr(rng);
        let s = sample::subspace(rng, field, n, k);
        let g1 = sample::well_conditioned(rng, field, n, COND_BOUND);
        let g2 = sample::well_conditioned(rng, field, n, COND_BOUND);
        let alpha = sample::nonzero_scalar(rng, field);
        let identity = grassmann::apply_gl(&Mat::identity(field, n), &s, tol)?.distance(&s) < 1e-12;
        let lhs = grassmann::apply_gl(&g1.mul(&g2)?, &s, tol)?;
        let rhs = grassmann::apply_gl(&g1, &grassmann::apply_gl(&g2, &s, tol)?, tol)?;
        let scaled = grassmann::apply_gl(&g1.scale(alpha)?, &s, tol)?;
        Ok(identity
            && lhs.distance(&rhs) < 1e-9
            && lhs.dim() == k
            && scaled.distance(&grassmann::apply_gl(&g1, &s, tol)?) < 1e-9)
    }),
    prop("transitivity", |rng, t, tol| {
        let field = field_for(t);
        let (k, n) = pick_gr(rng);
        let l1 = sample::subspace(rng, field, n, k);
        let l2 = sample::subspace(rng, field, n, k);
        let g = grassmann::transitive_witness(&l1, &l2)?;
        Ok(grassmann::apply_gl(&g, &l1, tol)?.distance(&l2) < 1e-9)
    }),
    prop("complement_involution", |rng, t, _tol| {
        let field = field_for(t);
        let (k, n) = pick_gr(rng);
        let s = sample::subspace(rng, field, n, k);
        let perp = grassmann::orthogonal_complement(&s);
        let cross = s.basis().as_matrix().adjoint() * perp.basis().as_matrix();
        Ok(perp.dim() == n - k && cross.norm() < 1e-10 && grassmann::orthogonal_complement(&perp).distance(&s) < 1e-10)
    }),
    prop("annihilator_involution", |rng, t, _tol| {
        let field = field_for(t);
        let (k, n) = pick_gr(rng);
        let s = sample::subspace(rng, field, n, k);
        let ann = grassmann::annihilator(&s);
        let pairing = s.basis().as_matrix().transpose() * ann.basis().as_matrix();
        Ok(ann.dim() == n - k && pairing.norm() < 1e-10 && grassmann::annihilator(&ann).distance(&s) < 1e-10)
    }),
    prop("line_point_correspondence", |rng, t, tol| {
        let field = field_for(t);
        let n = pick_dim(rng);
        let p = sample::proj_point(rng, field, n);
        let line = Subspace::from_point(&p)?;
        let back = line.to_point(tol)?;
        let s = sample::subspace(rng, field, n + 1, 1);
        let round = Subspace::from_point(&s.to_point(tol)?)?;
        Ok(back.equals(&p, &close_at(tol, 1e-12)?)? && round.distance(&s) < 1e-12)
    }),
];

fn stack(a: &CMat, b: &CMat) -> CMat {
    let mut m = CMat::zeros(a.nrows(), a.ncols() + b.ncols());
    m.view_mut((0, 0), a.shape()).copy_from(a);
    m.view_mut((0, a.ncols()), b.shape()).copy_from(b);
    m
}

// ---- hopf manifold ---------------------------------------------------------

fn pick_group(rng: &mut ChaCha8Rng, field: Field, tol: &Tolerance) -> Result<ScaleGroup> {
    let choices: &[C64] = match field {
        Field::Real => &[C64::new(2.0, 0.0), C64::new(3.0, 0.0), C64::new(-2.5, 0.0)],
        Field::Complex => &[C64::new(2.0, 0.0), C64::new(0.0, 2.0), C64::new(1.0, 1.5)],
    };
    ScaleGroup::new(field, *choices.choose(rng).expect("nonempty"), tol)
}

fn hopf_input(
    rng: &mut ChaCha8Rng,
    t: usize,
    min_dim: usize,
    tol: &Tolerance,
) -> Result<(Field, ScaleGroup, usize, numerics::CVec)> {
    let field = field_for(t);
    let g = pick_group(rng, field, tol)?;
    let n = rng.random_range(min_dim..=4);
    let v = sample::gaussian_vector(rng, field, n) * C64::new(10f64.powf(rng.random_range(-3.0..3.0)), 0.0);
    Ok((field, g, n, v))
}

const HOPF_MANIFOLD: &[Property] = &[
    prop("class_equality", |rng, t, tol| {
        let (_, g, _, v) = hopf_input(rng, t, 1, tol)?;
        let m = rng.random_range(-10..=10);
        let w = &v * g.power(m);
        hopf_manifold::hopf_points_equal(&v, &w, &g, tol)
    }),
    prop("window_law", |rng, t, tol| {
        let (_, g, _, v) = hopf_input(rng, t, 1, tol)?;
        let (h, m) = hopf_manifold::quotient_project_with_exponent(&v, &g, tol)?;
        let norm = h.rep().norm();
        let top = g.lambda().norm();
        let rebuilt = h.rep() * g.power(m);
        Ok(norm >= 1.0 - 1e-12 && norm < top && (rebuilt - &v).norm() <= 1e-12 * v.norm())
    }),
    prop("idempotence", |rng, t, tol| {
        let (_, g, _, v) = hopf_input(rng, t, 1, tol)?;
        let h = hopf_manifold::quotient_project(&v, &g, tol)?;
        let again = hopf_manifold::quotient_project(h.rep(), &g, tol)?;
        Ok(again.rep() == h.rep())
    }),
    prop("fiber_over_point", |rng, t, tol| {
        let (field, g, _, v) = hopf_input(rng, t, 2, tol)?;
        let base = hopf_manifold::to_projective(&hopf_manifold::quotient_project(&v, &g, tol)?)?;
        let modulus = rng.random_range(1.0..g.lambda().norm());
        let alpha = match field {
            Field::Real => C64::new(if rng.random_bool(0.5) { modulus } else { -modulus }, 0.0),
            Field::Complex => C64::from_polar(modulus, rng.random_range(0.0..std::f64::consts::TAU)),
        };
        let image = hopf_manifold::to_projective(&hopf_manifold::quotient_project(&(&v * alpha), &g, tol)?)?;
        image.equals(&base, &close_at(tol, 1e-10)?)
    }),
    prop("equivariance", |rng, t, tol| {
        let (field, g, n, v) = hopf_input(rng, t, 2, tol)?;
        let gl = sample::well_conditioned(rng, field, n, COND_BOUND);
        let h = hopf_manifold::quotient_project(&v, &g, tol)?;
        let top = hopf_manifold::to_projective(&hopf_manifold::induced_linear(&gl, &h, tol)?)?;
        let bottom = hopf_manifold::projectivize(&gl, tol)?.apply(&hopf_manifold::to_projective(&h)?)?;
        top.equals(&bottom, &close_at(tol, 1e-9)?)
    }),
    prop("representative_independence", |rng, t, tol| {
        let (field, g, n, v) = hopf_input(rng, t, 1, tol)?;
        let gl = sample::well_conditioned(rng, field, n, COND_BOUND);
        let a = hopf_manifold::induced_linear(&gl, &hopf_manifold::quotient_project(&v, &g, tol)?, tol)?;
        let shifted = &v * g.power(3);
        let b = hopf_manifold::induced_linear(&gl, &hopf_manifold::quotient_project(&shifted, &g, tol)?, tol)?;
        a.equals(&b, &close_at(tol, 1e-9)?)
    }),
    prop("trace_membership_invariance", |rng, t, tol| {
        let field = field_for(t);
        let g = pick_group(rng, field, tol)?;
        let n = rng.random_range(2..=5);
        let k = rng.random_range(1..n);
        let s = sample::subspace(rng, field, n, k);
        let inside = t % 4 < 2;
        let v = if inside {
            s.basis().as_matrix() * sample::gaussian_vector(rng, field, s.dim())
        } else {
            sample::gaussian_vector(rng, field, n)
        };
        let base = hopf_manifold::subspace_trace_membership(&hopf_manifold::quotient_project(&v, &g, tol)?, &s, tol)?;
        for m in -5..=5 {
            let h = hopf_manifold::quotient_project(&(&v * g.power(m)), &g, tol)?;
            if hopf_manifold::subspace_trace_membership(&h, &s, tol)? != base {
                return Ok(false);
            }
        }
        Ok(base == inside)
    }),
];

// ---- fibration ---------------------------------------------------------------

const FIBRATION: &[Property] = &[
    prop("real_double_cover", |rng, _t, tol| {
        let n = pick_dim(rng);
        let p = sample::proj_point(rng, Field::Real, n);
        let fiber = fibration::real_fiber(&p)?;
        let [a, b] = &fiber;
        let tight = close_at(tol, 1e-10)?;
        Ok(a.coords() == &(-b.coords())
            && a.distance(b) > 1.0
            && fiber.iter().all(|x| (x.coords().norm() - 1.0).abs() < 1e-12)
            && fibration::hopf_project(a).equals(&p, &tight)?
            && fibration::hopf_project(b).equals(&p, &tight)?)
    }),
    prop("circle_fiber_constancy", |rng, _t, tol| {
        let n = rng.random_range(1..=2);
        let p = sample::proj_point(rng, Field::Complex, n);
        let m = 64;
        let pts = fibration::complex_fiber_sample(&p, m)?;
        let tight = close_at(tol, 1e-10)?;
        for x in &pts {
            if !fibration::hopf_project(x).equals(&p, &tight)? {
                return Ok(false);
            }
        }
        let (i, j) = (rng.random_range(0..m), rng.random_range(0..m));
        let chord = 2.0 * (std::f64::consts::PI * (i as f64 - j as f64) / m as f64).sin().abs();
        Ok((pts[i].distance(&pts[j]) - chord).abs() < 1e-12)
    }),
    prop("disjointness", |rng, _t, tol| {
        let n = rng.random_range(1..=2);
        let (p, q) = sample::distinct_points(rng, Field::Complex, n);
        let sampled = fibration::fibers_min_distance(&p, &q, 256, tol)?;
        let exact = fibration::fiber_distance(&p, &q)?;
        Ok(sampled > 1e-3 && sampled > 0.9 * exact && sampled >= exact - 1e-12)
    }),
    prop("mobius_agreement", |rng, _t, tol| {
        let mobius = loop {
            let [a, b, c, d] = [(); 4].map(|_| sample::uniform_scalar(rng, Field::Complex));
            if (a * d - b * c).norm() > 0.1 {
                break Mobius::new(a, b, c, d, tol)?;
            }
        };
        fibration::mobius_matches_projective(&mobius, 100, rng, tol)
    }),
    prop("sphere_bijection", |rng, _t, tol| {
        let p = sample::proj_point(rng, Field::Complex, 1);
        let x = fibration::cp1_to_sphere(&p)?;
        let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
        let back = fibration::sphere_to_cp1(x, tol)?;
        let z = fibration::cp1_affine(&p, tol)?;
        let z_back = fibration::cp1_affine(&fibration::cp1_from_affine(z)?, tol)?;
        Ok((norm - 1.0).abs() < 1e-12 && back.equals(&p, &close_at(tol, 1e-10)?)? && z_back.approx_eq(&z, 1e-12))
    }),
    Property {
        name: "linking",
        check: |rng, _t, tol| {
            let (p, q) = sample::distinct_points(rng, Field::Complex, 1);
            let report = fibration::linking_integral(&p, &q, 1024, tol)?;
            Ok(report.number.abs() == 1 && (report.integral - report.number as f64).abs() < 0.05)
        },
        max_trials: Some(10),
    },
];
