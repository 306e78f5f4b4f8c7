use projgeo_core::projective::{chart_transition, group_dimension, transitive_witness};
use projgeo_core::sample::{distinct_points, gaussian_vector, nonzero_scalar, proj_point, rng, well_conditioned};
use projgeo_core::{AffineChart, CVec, Error, Field, Mat, ProjMap, ProjPoint, ProjSubspace, Tolerance, C64};
use proptest::prelude::*;

fn tol() -> Tolerance {
    Tolerance::default()
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn real(coords: &[f64]) -> ProjPoint {
    ProjPoint::from_real(coords, &tol()).unwrap()
}

fn rvec(x: &[f64]) -> CVec {
    CVec::from_iterator(x.len(), x.iter().map(|&v| c(v, 0.0)))
}

fn map(rows: usize, entries: &[f64]) -> ProjMap {
    ProjMap::from_matrix(&Mat::from_real_rows(rows, rows, entries).unwrap(), &tol()).unwrap()
}

fn random_map(seed: u64, field: Field, n: usize) -> ProjMap {
    ProjMap::from_matrix(&well_conditioned(&mut rng(seed), field, n + 1, 1e3), &tol()).unwrap()
}

fn assert_coords(p: &ProjPoint, expected: &[C64]) {
    for (a, b) in p.coords().iter().zip(expected) {
        assert!((a - b).norm() < 1e-12, "{a} vs {b}");
    }
}

#[test]
fn canonical_representatives() {
    assert_coords(&real(&[2.0, 0.0, 0.0]), &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
    let p = ProjPoint::from_complex(&[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 3.0)], &tol()).unwrap();
    assert_coords(&p, &[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
    assert_coords(&real(&[1.0; 4]), &[c(0.5, 0.0); 4]);
    assert_eq!(ProjPoint::from_real(&[0.0, 0.0], &tol()), Err(Error::ZeroVector));
}

#[test]
fn point_equality_examples() {
    assert!(real(&[1.0, 2.0]).equals(&real(&[-3.0, -6.0]), &tol()).unwrap());
    assert!(!real(&[1.0, 0.0]).equals(&real(&[0.0, 1.0]), &tol()).unwrap());
    // i·(i, 1) = (−1, i) by direct multiplication.
    let v = [c(0.0, 1.0), c(1.0, 0.0)];
    let w: Vec<C64> = v.iter().map(|z| c(0.0, 1.0) * z).collect();
    assert_eq!(w, [c(-1.0, 0.0), c(0.0, 1.0)]);
    let p = ProjPoint::from_complex(&v, &tol()).unwrap();
    let q = ProjPoint::from_complex(&w, &tol()).unwrap();
    assert!(p.equals(&q, &tol()).unwrap());
    assert!(matches!(
        real(&[1.0, 0.0]).equals(&real(&[1.0, 0.0, 0.0]), &tol()),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn map_canonical_forms() {
    let two_i = map(3, &[2.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 2.0]);
    let s = 1.0 / 3f64.sqrt();
    for i in 0..3 {
        for j in 0..3 {
            let e = if i == j { s } else { 0.0 };
            assert!((two_i.as_matrix()[(i, j)] - c(e, 0.0)).norm() < 1e-15);
        }
    }
    let a = well_conditioned(&mut rng(1), Field::Real, 4, 1e3);
    let base = ProjMap::from_matrix(&a, &tol()).unwrap();
    for alpha in [c(5.0, 0.0), c(-1.0, 0.0)] {
        let scaled = ProjMap::from_matrix(&a.scale(alpha).unwrap(), &tol()).unwrap();
        assert!((scaled.as_matrix() - base.as_matrix()).norm() < 1e-12);
    }
    let id3 = ProjMap::identity(Field::Real, 2);
    assert!(!id3
        .equals(&map(3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0]), &tol())
        .unwrap());

    let b = well_conditioned(&mut rng(2), Field::Complex, 3, 1e3);
    let phased = b.scale(C64::from_polar(1.0, 2.3)).unwrap();
    let lhs = ProjMap::from_matrix(&b, &tol()).unwrap();
    assert!(lhs
        .equals(&ProjMap::from_matrix(&phased, &tol()).unwrap(), &tol())
        .unwrap());
}

#[test]
fn apply_examples() {
    let p = real(&[1.0, 1.0]);
    assert!(ProjMap::identity(Field::Real, 1)
        .apply(&p)
        .unwrap()
        .equals(&p, &tol())
        .unwrap());
    // diag(1, 2)·(1, 1) = (1, 2) by hand.
    let image = map(2, &[1.0, 0.0, 0.0, 2.0]).apply(&p).unwrap();
    assert!(image.equals(&real(&[1.0, 2.0]), &tol()).unwrap());
    let swap = map(3, &[0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
    assert!(swap
        .apply(&real(&[1.0, 0.0, 0.0]))
        .unwrap()
        .equals(&real(&[0.0, 1.0, 0.0]), &tol())
        .unwrap());
}

#[test]
fn compose_and_inverse_examples() {
    let t = random_map(3, Field::Complex, 2);
    let id = ProjMap::identity(Field::Complex, 2);
    assert!(t.compose(&id, &tol()).unwrap().equals(&t, &tol()).unwrap());
    assert!(t
        .compose(&t.inverse(&tol()).unwrap(), &tol())
        .unwrap()
        .equals(&id, &tol())
        .unwrap());
    assert!(id.inverse(&tol()).unwrap().equals(&id, &tol()).unwrap());
    let d = map(3, &[1.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 4.0]);
    let d_inv = map(3, &[1.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.25]);
    assert!(d.inverse(&tol()).unwrap().equals(&d_inv, &tol()).unwrap());
}

#[test]
fn inverse_round_trip_on_fifty_points() {
    let mut r = rng(4);
    let t = random_map(4, Field::Real, 4);
    let t_inv = t.inverse(&tol()).unwrap();
    for _ in 0..50 {
        let p = proj_point(&mut r, Field::Real, 4);
        let back = t_inv.apply(&t.apply(&p).unwrap()).unwrap();
        assert!(back.distance(&p).unwrap() < 1e-9);
    }
}

#[test]
fn group_dimensions() {
    assert_eq!(group_dimension(1, Field::Real), 3);
    assert_eq!(group_dimension(2, Field::Complex), 8);
    assert_eq!(group_dimension(3, Field::Real), 15);
}

#[test]
fn chart_examples() {
    let c3 = AffineChart::new(Field::Real, 2, 3).unwrap();
    assert!(c3
        .embed(&rvec(&[0.0, 0.0]))
        .unwrap()
        .equals(&real(&[0.0, 0.0, 1.0]), &tol())
        .unwrap());
    let c1 = AffineChart::new(Field::Real, 2, 1).unwrap();
    assert!(c1
        .embed(&rvec(&[1.0, 1.0]))
        .unwrap()
        .equals(&real(&[1.0, 1.0, 1.0]), &tol())
        .unwrap());

    let w = c1.extract(&real(&[1.0, 5.0, 7.0]), &tol()).unwrap().unwrap();
    assert!((w - rvec(&[5.0, 7.0])).norm() < 1e-12);
    let c2 = AffineChart::new(Field::Real, 2, 2).unwrap();
    assert_eq!(c2.extract(&real(&[1.0, 0.0, 0.0]), &tol()).unwrap(), None);

    assert_eq!(AffineChart::cover(&real(&[0.0, 0.0, 1.0])).index(), 3);
    assert_eq!(AffineChart::cover(&real(&[1.0, 1.0, 1.0])).index(), 1);
}

#[test]
fn chart_embeddings_are_injective_and_invertible() {
    let mut r = rng(8);
    for field in [Field::Real, Field::Complex] {
        for j in 1..=5 {
            let chart = AffineChart::new(field, 4, j).unwrap();
            for _ in 0..20 {
                let w1 = gaussian_vector(&mut r, field, 4);
                let w2 = gaussian_vector(&mut r, field, 4);
                let p1 = chart.embed(&w1).unwrap();
                assert!(!p1.equals(&chart.embed(&w2).unwrap(), &tol()).unwrap());
                let back = chart.extract(&p1, &tol()).unwrap().unwrap();
                assert!((back - &w1).norm() <= 1e-12 * (1.0 + w1.norm()));
            }
        }
    }
}

#[test]
fn covering_chart_meets_the_pigeonhole_bound() {
    let mut r = rng(9);
    for _ in 0..1000 {
        let p = proj_point(&mut r, Field::Complex, 3);
        let j = AffineChart::cover(&p).index();
        assert!(p.coords()[j - 1].norm() >= 0.5 - 1e-15);
    }
}

#[test]
fn missing_loci() {
    let locus = AffineChart::new(Field::Real, 2, 1).unwrap().missing_locus();
    assert_eq!(locus.proj_dim(), 1);
    assert!(locus.contains(&real(&[0.0, 1.0, 0.0]), &tol()).unwrap());
    assert!(locus.contains(&real(&[0.0, 0.0, 1.0]), &tol()).unwrap());
    assert!(!locus.contains(&real(&[1.0, 0.0, 0.0]), &tol()).unwrap());

    let point_locus = AffineChart::new(Field::Real, 1, 2).unwrap().missing_locus();
    assert_eq!(point_locus.proj_dim(), 0);
    assert!(point_locus.contains(&real(&[1.0, 0.0]), &tol()).unwrap());

    let mut r = rng(10);
    for field in [Field::Real, Field::Complex] {
        for i in 0..200 {
            let mut v = gaussian_vector(&mut r, field, 4);
            let j = 1 + i % 4;
            if i % 2 == 0 {
                v[j - 1] = c(0.0, 0.0);
            }
            let p = ProjPoint::from_vector(field, &v, &tol()).unwrap();
            let chart = AffineChart::new(field, 3, j).unwrap();
            let absent = chart.extract(&p, &tol()).unwrap().is_none();
            assert_eq!(absent, chart.missing_locus().contains(&p, &tol()).unwrap());
        }
    }
}

#[test]
fn line_atlas_transition_is_reciprocal() {
    let c1 = AffineChart::new(Field::Real, 1, 1).unwrap();
    let c2 = AffineChart::new(Field::Real, 1, 2).unwrap();
    for t in [0.5, -3.0, 7.25] {
        let w = chart_transition(&c1, &c2, &rvec(&[t]), &tol()).unwrap().unwrap();
        assert!((w[0] - c(1.0 / t, 0.0)).norm() < 1e-12);
        let same = chart_transition(&c1, &c1, &rvec(&[t]), &tol()).unwrap().unwrap();
        assert!((same[0] - c(t, 0.0)).norm() < 1e-12);
    }
    assert_eq!(chart_transition(&c1, &c2, &rvec(&[0.0]), &tol()).unwrap(), None);
}

#[test]
fn subspace_membership_and_images() {
    let e12 = ProjSubspace::span(
        &Mat::from_real_rows(3, 2, &[1.0, 0.0, 0.0, 1.0, 0.0, 0.0]).unwrap(),
        &tol(),
    )
    .unwrap();
    assert!(e12.contains(&real(&[0.0, 1.0, 0.0]), &tol()).unwrap());
    assert!(!e12.contains(&real(&[0.0, 0.0, 1.0]), &tol()).unwrap());

    let id = ProjMap::identity(Field::Real, 2);
    let same = e12.image(&id).unwrap();
    assert!(same.linear().distance(e12.linear()) < 1e-12);

    let e1 = ProjSubspace::span(&Mat::from_real_rows(3, 1, &[1.0, 0.0, 0.0]).unwrap(), &tol()).unwrap();
    let cycle = map(3, &[0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
    assert!(e1
        .image(&cycle)
        .unwrap()
        .contains(&real(&[0.0, 1.0, 0.0]), &tol())
        .unwrap());

    let mut r = rng(11);
    for field in [Field::Real, Field::Complex] {
        for seed in 0..30 {
            let basis = projgeo_core::sample::uniform_matrix(&mut r, field, 5, 3);
            let s = ProjSubspace::span(&basis, &tol()).unwrap();
            let coeffs = gaussian_vector(&mut r, field, 3);
            let p = ProjPoint::from_vector(field, &(basis.as_matrix() * coeffs), &tol()).unwrap();
            assert!(s.contains(&p, &tol()).unwrap());
            let t = random_map(100 + seed, field, 4);
            assert!(s.image(&t).unwrap().contains(&t.apply(&p).unwrap(), &tol()).unwrap());
        }
    }
}

#[test]
fn transitive_witnesses() {
    let p = real(&[1.0, 0.0]);
    let q = real(&[0.0, 1.0]);
    let w = transitive_witness(&p, &q).unwrap();
    assert!(w.apply(&p).unwrap().equals(&q, &tol()).unwrap());
    assert!(transitive_witness(&p, &p)
        .unwrap()
        .apply(&p)
        .unwrap()
        .equals(&p, &tol())
        .unwrap());

    let mut r = rng(12);
    for _ in 0..100 {
        let (p, q) = distinct_points(&mut r, Field::Complex, 3);
        let image = transitive_witness(&p, &q).unwrap().apply(&p).unwrap();
        assert!(image.distance(&q).unwrap() < 1e-9);
    }
}

proptest! {
    #[test]
    fn scalar_multiples_give_identical_points(seed in any::<u64>(), n in 1usize..=6, complex in any::<bool>()) {
        let field = if complex { Field::Complex } else { Field::Real };
        let mut r = rng(seed);
        let v = gaussian_vector(&mut r, field, n + 1);
        let alpha = nonzero_scalar(&mut r, field);
        let p = ProjPoint::from_vector(field, &v, &tol()).unwrap();
        let q = ProjPoint::from_vector(field, &(v * alpha), &tol()).unwrap();
        prop_assert!((p.coords() - q.coords()).norm() < 1e-12);
    }

    #[test]
    fn composition_agrees_with_sequential_application(seed in any::<u64>(), complex in any::<bool>()) {
        let field = if complex { Field::Complex } else { Field::Real };
        let t1 = random_map(seed, field, 3);
        let t2 = random_map(seed ^ 1, field, 3);
        let p = proj_point(&mut rng(seed ^ 2), field, 3);
        let lhs = t1.compose(&t2, &tol()).unwrap().apply(&p).unwrap();
        let rhs = t1.apply(&t2.apply(&p).unwrap()).unwrap();
        prop_assert!(lhs.distance(&rhs).unwrap() < 1e-9);
    }

    #[test]
    fn chart_transitions_round_trip(seed in any::<u64>(), j1 in 1usize..=4, j2 in 1usize..=4) {
        let mut r = rng(seed);
        let c1 = AffineChart::new(Field::Complex, 3, j1).unwrap();
        let c2 = AffineChart::new(Field::Complex, 3, j2).unwrap();
        let w = gaussian_vector(&mut r, Field::Complex, 3);
        if let Some(u) = chart_transition(&c1, &c2, &w, &tol()).unwrap() {
            let back = chart_transition(&c2, &c1, &u, &tol()).unwrap().unwrap();
            prop_assert!((back - &w).norm() <= 1e-9 * (1.0 + w.norm()));
        }
    }
}
