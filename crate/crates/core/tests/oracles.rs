//! Library results checked against brute-force computations that share no
//! code with the implementation.

mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2, TAU};

use infsup::bounds::{
    alpha_theta_from, closed_form_dm, hp_lower_bound, m_inf_sup, m_sup_inf, p_value, polygon_m_inf_sup,
    polygon_m_sup_inf,
};
use infsup::cutbound::{beta_upper_squared, CutSpec};
use infsup::geometry::Derivative;
use infsup::{BoundOptions, CurvePrimitive, Family, Point, PolarBoundary, Shape64, TriangleCenter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn polygon_radius_matches_ray_casting() {
    let mut r = rng(1);
    for _ in 0..40 {
        let poly = common::star_polygon(&mut r);
        let b = poly.to_boundary().unwrap();
        for _ in 0..25 {
            let theta = r.gen_range(0.0..TAU);
            let exact = common::ray_distance(&poly, poly.center, theta);
            let got = b.eval_f(theta) * b.normalization_scale();
            assert!((got - exact).abs() <= 1e-12 * exact, "θ = {theta}: {got} vs {exact}");
        }
    }
}

#[test]
fn derivative_matches_finite_differences() {
    let shapes = [
        Shape64::Ellipse { a: 1.0, b: 3.0 },
        Shape64::CupidsBow { c: 1.3 },
        Shape64::DoubleStadium { epsilon: 0.3 },
        Shape64::RegularPolygon {
            sides: 7,
            circumradius: 2.0,
        },
    ];
    let h = 1e-6;
    for s in &shapes {
        let b = s.build().unwrap();
        for i in 0..300 {
            let theta = TAU * (i as f64 + 0.37) / 300.0;
            if b.joint_at(theta - 2.0 * h).is_some() || b.joint_at(theta + 2.0 * h).is_some() {
                continue;
            }
            let fd = (b.eval_f(theta + h) - b.eval_f(theta - h)) / (2.0 * h);
            let Derivative::Smooth(d) = b.eval_fprime(theta) else {
                continue;
            };
            assert!((d - fd).abs() < 1e-6 * (1.0 + d.abs()), "{s:?} at {theta}: {d} vs {fd}");
        }
    }
}

#[test]
fn polygon_area_matches_shoelace() {
    let mut r = rng(2);
    for _ in 0..40 {
        let poly = common::star_polygon(&mut r);
        let b = poly.to_boundary().unwrap();
        let exact = common::shoelace(&poly.vertices);
        let got = b.raw_area(1e-12).unwrap();
        assert!((got - exact).abs() <= 1e-12 * exact, "{got} vs {exact}");
    }
}

/// Area of a boundary by the shoelace formula over a dense polar sample.
fn sampled_area(b: &PolarBoundary<f64>, n: usize) -> f64 {
    let pts: Vec<_> = (0..n)
        .map(|i| {
            let theta = TAU * i as f64 / n as f64;
            Point::polar(b.eval_f(theta) * b.normalization_scale(), theta)
        })
        .collect();
    common::shoelace(&pts)
}

#[test]
fn curved_areas_match_dense_polygonal_approximation() {
    for (s, exact) in [
        (Shape64::Disk { radius: 1.5 }, PI * 2.25),
        (Shape64::Ellipse { a: 0.5, b: 2.0 }, PI),
    ] {
        let b = s.build().unwrap();
        let quad = b.raw_area(1e-12).unwrap();
        assert!((quad - exact).abs() < 1e-11 * exact);
        assert!((sampled_area(&b, 200_000) - exact).abs() < 1e-8 * exact);
    }
}

#[test]
fn off_center_disk_star_radius() {
    // Dense-grid minimum of f cos γ = f / √(1 + t²).
    let b = PolarBoundary::from_curve(
        Point::new(0.5, 0.0),
        &[CurvePrimitive::Circle {
            center: Point::default(),
            radius: 1.0,
        }],
    )
    .unwrap();
    let opts = BoundOptions::default();
    let n = 200_000;
    let grid_min = (0..n)
        .map(|i| {
            let theta = TAU * i as f64 / n as f64;
            let t = b.gamma(theta).tan();
            b.eval_f(theta) / (1.0 + t * t).sqrt()
        })
        .fold(f64::INFINITY, f64::min);
    let scale = b.normalization_scale();
    assert!((b.rho_max(&opts.sweep) - grid_min).abs() < 1e-9);
    assert!((b.rho_max(&opts.sweep) * scale - 0.5).abs() < 1e-12);
    assert!((b.raw_r_min(&opts.sweep) - 1.5).abs() < 1e-12);
}

/// `M` of a polygon by brute force: `P` on a dense `θ` grid of every side and
/// a dense `α` grid.
fn brute_force_polygon_m(poly: &infsup::Polygon64) -> f64 {
    let b = poly.to_boundary().unwrap();
    let mut data = Vec::new();
    for p in b.pieces() {
        for i in 0..=40 {
            data.push(p.eval(p.start + p.length * i as f64 / 40.0));
        }
    }
    let n = 20_000;
    (1..n)
        .map(|i| {
            let alpha = i as f64 / n as f64;
            data.iter()
                .map(|&(f, fp)| common::p_direct(alpha, f, fp))
                .map(|v| if v.is_nan() || v < 0.0 { f64::INFINITY } else { v })
                .fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn big_m_matches_dense_alpha_grid() {
    let mut r = rng(3);
    let opts = BoundOptions::default();
    for _ in 0..8 {
        let poly = common::star_polygon(&mut r);
        let brute = brute_force_polygon_m(&poly);
        let got = polygon_m_inf_sup(&poly, &opts).unwrap().value;
        // The grid only overestimates the infimum, and by little.
        assert!(got <= brute * (1.0 + 1e-12), "{got} vs {brute}");
        assert!(got >= brute * (1.0 - 1e-3), "{got} vs {brute}");
    }
}

#[test]
fn p_matches_definition() {
    let mut r = rng(4);
    for _ in 0..1000 {
        let f: f64 = r.gen_range(0.1..1.0);
        let fp: f64 = r.gen_range(-5.0..5.0);
        let alpha = r.gen_range(0.01..0.99);
        let exact = common::p_direct(alpha, f, fp);
        let got = p_value(alpha, f, fp);
        assert!((got - exact).abs() <= 1e-12 * exact, "{got} vs {exact}");
    }
    assert_eq!(p_value(0.5, 1.0, 0.0), 2.0);
    assert!((p_value(0.5f64, 1.0, 1.0) - 6.0).abs() < 1e-15);
}

#[test]
fn alpha_theta_solves_quadratic() {
    let mut r = rng(5);
    for _ in 0..1000 {
        let f: f64 = r.gen_range(0.1..1.0);
        let t: f64 = r.gen_range(-10.0..10.0);
        let zeta = alpha_theta_from(f, t) * f * f;
        let residual = zeta * zeta - 2.0 * (1.0 + t * t) * zeta + 1.0 + t * t;
        assert!(residual.abs() < 1e-12 * (1.0 + t * t), "t = {t}: {residual}");
        assert!(zeta > 0.0 && zeta <= 1.0);
    }
    assert!((alpha_theta_from(1.0, 1.0) - (2.0 - SQRT_2)).abs() < 1e-15);
    assert_eq!(alpha_theta_from(1.0, 0.0), 1.0);
}

#[test]
fn polygon_closed_forms() {
    let opts = BoundOptions::default();
    let tri = Shape64::RegularPolygon {
        sides: 3,
        circumradius: 1.0,
    }
    .polygon()
    .unwrap()
    .unwrap();
    let expect = 7.0 + 4.0 * 3f64.sqrt();
    assert!((polygon_m_inf_sup(&tri, &opts).unwrap().value - expect).abs() < 1e-10);
    assert!((closed_form_dm(0.5).unwrap().0 - expect).abs() < 1e-12);

    let rect = Shape64::Rectangle {
        width: 2.0,
        height: 1.0,
    }
    .polygon()
    .unwrap()
    .unwrap();
    let expect = 9.0 + 4.0 * 5f64.sqrt();
    assert!((polygon_m_inf_sup(&rect, &opts).unwrap().value - expect).abs() < 1e-9);
    assert!((closed_form_dm(1.0 / 5f64.sqrt()).unwrap().0 - expect).abs() < 1e-12);

    let square = Shape64::Rectangle {
        width: 1.0,
        height: 1.0,
    };
    let poly = square.polygon().unwrap().unwrap();
    assert!((polygon_m_sup_inf(&poly).unwrap() - (3.0 + 2.0 * SQRT_2)).abs() < 1e-12);
    let (_, alpha) = closed_form_dm(FRAC_PI_4.cos()).unwrap();
    assert!((alpha - (2.0 - SQRT_2)).abs() < 1e-15);
    let found = polygon_m_inf_sup(&poly, &opts).unwrap();
    assert!((found.alpha - alpha).abs() < 1e-6);
}

#[test]
fn horgan_payne_values_on_built_shapes() {
    let opts = BoundOptions::default();
    let b = Shape64::CupidsBow { c: 2.58 }.build().unwrap();
    let omega = b.horgan_payne_angle(&opts.sweep).unwrap();
    assert!((omega - (1.0f64 / 2.58).atan()).abs() < 1e-14);
    assert!((omega - 0.36976).abs() < 1e-5);
    let hp = hp_lower_bound(&b, &opts).unwrap();
    assert!((hp * hp - Family::CupidsBow.claimed_beta_sq(2.58).unwrap()).abs() < 1e-15);

    let b = Shape64::DoubleStadium { epsilon: 0.05 }.build().unwrap();
    let omega = b.horgan_payne_angle(&opts.sweep).unwrap();
    assert!((omega - 0.05f64.asin()).abs() < 1e-12);
}

#[test]
fn counterexample_cuts_match_geometry() {
    let families = [
        (Family::CupidsBow, [0.5, 0.8, 1.0, 1.5, 2.0, 2.58, 3.0, 4.0, 5.0, 6.0]),
        (Family::DoubleStadium, [0.9, 0.7, 0.5, 0.3, 0.2, 0.1, 0.05, 0.02, 0.01, 0.005]),
        (Family::Octagon, [0.9, 0.7, 0.5, 0.25, 0.1, 0.05, 0.02, 0.01, 0.005, 0.003]),
    ];
    for (family, params) in families {
        for p in params {
            let closed = family.cut(p).unwrap();
            let b = family.shape(p).build().unwrap();
            let measured = CutSpec::through_center(&b, FRAC_PI_2, 1e-12).unwrap();
            for (a, e, what) in [
                (measured.area_plus, closed.area_plus, "|Ω₊|"),
                (measured.area_minus, closed.area_minus, "|Ω₋|"),
                (measured.width, closed.width, "L"),
            ] {
                assert!((a - e).abs() <= 1e-6 * e, "{family} {p}: {what} {a} vs {e}");
            }
            let total = b.raw_area(1e-12).unwrap();
            assert!((total - closed.area_total).abs() <= 1e-6 * total);
        }
    }
}

#[test]
fn counterexample_values() {
    // Closed forms evaluated independently.
    let c: f64 = 2.58;
    let width = 2.0 * (-c * PI / 2.0).exp();
    assert!((width - 0.034752).abs() < 1e-6);
    let cut = Family::CupidsBow.cut(c).unwrap();
    assert!((cut.width - width).abs() < 1e-16);
    assert!((cut.area_plus - (1.0 - (-c * PI).exp()) / 5.16).abs() < 1e-15);

    let eps: f64 = 0.01;
    let r = Family::DoubleStadium.refutation_report(eps).unwrap();
    let s = (1.0 - eps * eps).sqrt();
    let half = 2.0 * s * (1.0 / eps - 1.0) + PI - (eps.asin() - eps * s);
    assert!((r.proven_upper_beta_sq - 64.0 / 3.0 * eps * eps / half).abs() < 1e-18);
    assert!((r.claimed_beta_sq - 2.50e-5).abs() < 1e-8);
    assert!((r.proven_upper_beta_sq - 1.06e-5).abs() < 1e-8);

    let q: f64 = 0.25;
    let cut = Family::Octagon.cut(q).unwrap();
    assert!((cut.area_plus - 2.0 * (1.0 + q * q) * q / (2.0 * SQRT_2)).abs() < 1e-16);
    assert_eq!(cut.width, 2.0 * q * q);

    let r = Family::CupidsBow.refutation_report(1.0).unwrap();
    assert!(r.margin < 0.0);
}

#[test]
fn cut_bound_on_explicit_data() {
    let cut = CutSpec::planar(2.0f64, 3.0, 0.1).unwrap();
    let expect = 8.0 / 3.0 * 5.0 * 0.01 / 6.0;
    assert!((beta_upper_squared(&cut).unwrap() - expect).abs() < 1e-16);
}

#[test]
fn triangle_centers() {
    let vertices = [Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(0.5, 2.0)];
    let opts = BoundOptions::default();
    let bary = Shape64::Triangle {
        vertices,
        center: TriangleCenter::Barycenter,
    };
    let inc = Shape64::Triangle {
        vertices,
        center: TriangleCenter::Incenter,
    };
    let pb = bary.polygon().unwrap().unwrap();
    let pi = inc.polygon().unwrap().unwrap();
    assert!((pb.center.x - 1.5).abs() < 1e-15 && (pb.center.y - 2.0 / 3.0).abs() < 1e-15);
    // At the incenter the triangle is circumscribed, so m = M.
    let b = pi.to_boundary().unwrap();
    let (m, big) = (m_sup_inf(&b, &opts), m_inf_sup(&b, &opts).value);
    assert!((m - big).abs() < 1e-8 * big);
    let b = pb.to_boundary().unwrap();
    assert!(m_sup_inf(&b, &opts) <= m_inf_sup(&b, &opts).value + 1e-8);
}
