use projgeo_core::grassmann::{annihilator, apply_gl, grassmann_dimension, orthogonal_complement, transitive_witness};
use projgeo_core::numerics::{projector_distance, rank};
use projgeo_core::sample::{proj_point, rng, subspace, uniform_matrix, well_conditioned};
use projgeo_core::{CMat, Error, Field, GraphChart, Mat, Subspace, Tolerance, C64};
use proptest::prelude::*;

fn tol() -> Tolerance {
    Tolerance::default()
}

fn axes(field: Field, n: usize, a: &[usize]) -> Subspace {
    Subspace::coordinate(field, n, a).unwrap()
}

fn random_chart(seed: u64, field: Field, n: usize, k: usize) -> GraphChart {
    let mut r = rng(seed);
    loop {
        let base = subspace(&mut r, field, n, k);
        let complement = subspace(&mut r, field, n, n - k);
        if let Ok(c) = GraphChart::new(base, complement, &tol()) {
            return c;
        }
    }
}

#[test]
fn zero_parameter_gives_the_base() {
    let chart = random_chart(1, Field::Real, 5, 2);
    let x = chart.graph(&Mat::zeros(Field::Real, 3, 2)).unwrap();
    assert!(x.distance(chart.base()) < 1e-12);
    let a = chart.coords(chart.base(), &tol()).unwrap().unwrap();
    assert!(a.frobenius_norm() < 1e-12);
}

#[test]
fn slope_line_in_the_plane() {
    let chart = GraphChart::new(axes(Field::Real, 2, &[0]), axes(Field::Real, 2, &[1]), &tol()).unwrap();
    let t = 2.5;
    let x = chart.graph(&Mat::from_real_rows(1, 1, &[t]).unwrap()).unwrap();
    let oracle = Subspace::span(&Mat::from_real_rows(2, 1, &[1.0, t]).unwrap(), &tol()).unwrap();
    assert!(x.distance(&oracle) < 1e-12);
    assert!(matches!(
        chart.graph(&Mat::zeros(Field::Real, 2, 1)),
        Err(Error::ShapeMismatch { .. })
    ));
}

#[test]
fn graphs_are_transverse_to_the_complement() {
    let mut r = rng(2);
    for field in [Field::Real, Field::Complex] {
        for seed in 0..20 {
            let chart = random_chart(seed, field, 6, 2);
            let x = chart.graph(&uniform_matrix(&mut r, field, 4, 2)).unwrap();
            assert_eq!(x.dim(), 2);
            let stacked = CMat::from_columns(
                &(0..2)
                    .map(|j| x.basis().column(j))
                    .chain((0..4).map(|j| chart.complement().basis().column(j)))
                    .collect::<Vec<_>>(),
            );
            assert_eq!(rank(&Mat::new(field, stacked).unwrap(), &tol()), 6);
        }
    }
}

#[test]
fn the_complement_has_no_coordinates() {
    let l = axes(Field::Complex, 4, &[0, 1]);
    let m = axes(Field::Complex, 4, &[2, 3]);
    let chart = GraphChart::new(l, m.clone(), &tol()).unwrap();
    assert_eq!(chart.coords(&m, &tol()).unwrap(), None);
}

#[test]
fn grassmann_dimensions() {
    assert_eq!(grassmann_dimension(1, 4), Ok(3));
    assert_eq!(grassmann_dimension(2, 4), Ok(4));
    assert_eq!(grassmann_dimension(3, 6), Ok(9));
    assert!(matches!(grassmann_dimension(0, 4), Err(Error::InvalidRange(_))));
    assert!(matches!(grassmann_dimension(4, 4), Err(Error::InvalidRange(_))));
}

#[test]
fn gl_action_examples() {
    let s = axes(Field::Real, 4, &[0, 1]);
    assert!(
        apply_gl(&Mat::identity(Field::Real, 4), &s, &tol())
            .unwrap()
            .distance(&s)
            < 1e-12
    );
    // e0 → e2, e1 → e3, e2 → e0, e3 → e1.
    let perm = Mat::from_real_rows(
        4,
        4,
        &[
            0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0,
        ],
    )
    .unwrap();
    let image = apply_gl(&perm, &s, &tol()).unwrap();
    assert!(image.distance(&axes(Field::Real, 4, &[2, 3])) < 1e-12);

    let g = well_conditioned(&mut rng(3), Field::Complex, 4, 1e3);
    let s = subspace(&mut rng(4), Field::Complex, 4, 2);
    let scaled = g.scale(C64::new(-0.3, 2.0)).unwrap();
    assert!(
        apply_gl(&g, &s, &tol())
            .unwrap()
            .distance(&apply_gl(&scaled, &s, &tol()).unwrap())
            < 1e-10
    );
}

#[test]
fn transitive_witness_examples() {
    let e1 = axes(Field::Real, 3, &[0]);
    let e2 = axes(Field::Real, 3, &[1]);
    let g = transitive_witness(&e1, &e2).unwrap();
    assert!(apply_gl(&g, &e1, &tol()).unwrap().distance(&e2) < 1e-10);
    let fixed = transitive_witness(&e1, &e1).unwrap();
    assert!(apply_gl(&fixed, &e1, &tol()).unwrap().distance(&e1) < 1e-10);

    let mut r = rng(5);
    for _ in 0..100 {
        let l1 = subspace(&mut r, Field::Complex, 5, 2);
        let l2 = subspace(&mut r, Field::Complex, 5, 2);
        let g = transitive_witness(&l1, &l2).unwrap();
        assert!(apply_gl(&g, &l1, &tol()).unwrap().distance(&l2) < 1e-9);
    }
}

#[test]
fn complement_of_an_axis() {
    let c = orthogonal_complement(&axes(Field::Real, 3, &[0]));
    assert!(c.distance(&axes(Field::Real, 3, &[1, 2])) < 1e-12);
    let a = annihilator(&axes(Field::Real, 3, &[0]));
    assert!(a.distance(&c) < 1e-12);
}

#[test]
fn annihilator_uses_the_bilinear_pairing() {
    let i = C64::new(0.0, 1.0);
    let one = C64::new(1.0, 0.0);
    let s = Subspace::span(&Mat::from_complex_rows(2, 1, &[one, i]).unwrap(), &tol()).unwrap();
    let ann = annihilator(&s);
    assert_eq!(ann.dim(), 1);
    let f = ann.basis().column(0);
    // 1·f₁ + i·f₂ = 0 is solved by f = (−i, 1).
    assert!((f[0] + i * f[1]).norm() < 1e-12);
    let oracle = Subspace::span(&Mat::from_complex_rows(2, 1, &[-i, one]).unwrap(), &tol()).unwrap();
    assert!(ann.distance(&oracle) < 1e-12);
    // The Hermitian complement is a different line: span{(i, 1)}.
    let perp = orthogonal_complement(&s);
    let perp_oracle = Subspace::span(&Mat::from_complex_rows(2, 1, &[i, one]).unwrap(), &tol()).unwrap();
    assert!(perp.distance(&perp_oracle) < 1e-12);
    assert!(perp.distance(&ann) > 1.0);
}

#[test]
fn lines_are_projective_points() {
    let mut r = rng(6);
    for field in [Field::Real, Field::Complex] {
        for _ in 0..50 {
            let p = proj_point(&mut r, field, 3);
            let line = Subspace::from_point(&p).unwrap();
            assert_eq!(line.dim(), 1);
            assert!(line.to_point(&tol()).unwrap().equals(&p, &tol()).unwrap());
        }
    }
}

proptest! {
    #[test]
    fn coordinates_of_a_graph_recover_the_parameter(seed in any::<u64>(), n in 2usize..=6, k in 1usize..=5, complex in any::<bool>()) {
        prop_assume!(k < n);
        let field = if complex { Field::Complex } else { Field::Real };
        let chart = random_chart(seed, field, n, k);
        let a = uniform_matrix(&mut rng(seed ^ 7), field, n - k, k);
        let back = chart.coords(&chart.graph(&a).unwrap(), &tol()).unwrap().unwrap();
        prop_assert!((back.as_matrix() - a.as_matrix()).norm() < 1e-9);
    }

    #[test]
    fn gl_action_composes(seed in any::<u64>(), complex in any::<bool>()) {
        let field = if complex { Field::Complex } else { Field::Real };
        let mut r = rng(seed);
        let g1 = well_conditioned(&mut r, field, 5, 1e2);
        let g2 = well_conditioned(&mut r, field, 5, 1e2);
        let s = subspace(&mut r, field, 5, 2);
        let lhs = apply_gl(&g1.mul(&g2).unwrap(), &s, &tol()).unwrap();
        let rhs = apply_gl(&g1, &apply_gl(&g2, &s, &tol()).unwrap(), &tol()).unwrap();
        prop_assert!(lhs.distance(&rhs) < 1e-9);
    }

    #[test]
    fn dualities_are_involutions(seed in any::<u64>(), n in 2usize..=7, k in 1usize..=6, complex in any::<bool>()) {
        prop_assume!(k < n);
        let field = if complex { Field::Complex } else { Field::Real };
        let s = subspace(&mut rng(seed), field, n, k);
        let perp = orthogonal_complement(&s);
        prop_assert_eq!(perp.dim(), n - k);
        prop_assert!((s.basis().as_matrix().adjoint() * perp.basis().as_matrix()).norm() < 1e-10);
        prop_assert!(orthogonal_complement(&perp).distance(&s) < 1e-10);
        let ann = annihilator(&s);
        prop_assert_eq!(ann.dim(), n - k);
        prop_assert!((s.basis().as_matrix().transpose() * ann.basis().as_matrix()).norm() < 1e-10);
        prop_assert!(projector_distance(annihilator(&ann).basis().as_matrix(), s.basis().as_matrix()) < 1e-10);
    }
}
