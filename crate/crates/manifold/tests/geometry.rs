//! Randomized consistency checks for the geometric kernels: exp/log round
//! trips, transport isometry, curvature identities and finite-difference
//! oracles for the Jacobi operators.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use geospline_manifold::linalg::{axpy, norm, sub};
use geospline_manifold::sampling::{random_in_ball, random_point, random_tangent};
use geospline_manifold::{Manifold, Point, Tangent};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn manifolds() -> [Manifold; 2] {
    [Manifold::euclidean(3), Manifold::sphere(2)]
}

/// In-guard pair: both points in a ball of radius below the guard bound.
fn random_pair(m: &Manifold, rng: &mut ChaCha8Rng) -> (Point, Point) {
    let center = random_point(m, rng);
    let p = random_in_ball(&center, 0.6, rng);
    let q = random_in_ball(&center, 0.6, rng);
    (p, q)
}

#[test]
fn exp_log_round_trips() {
    for m in manifolds() {
        let mut r = rng(11);
        for _ in 0..1000 {
            let (p, q) = random_pair(&m, &mut r);
            let v = m.log(&p, &q).unwrap();
            let q2 = m.exp(&v).unwrap();
            assert!(q2.approx_eq(&q, 1e-9), "exp(log) failed on {m}");
            assert!((v.norm() - m.distance(&p, &q).unwrap()).abs() < 1e-9);

            let w = random_tangent(&p, 1.0, &mut r);
            let qq = m.exp(&w).unwrap();
            let w2 = m.log(&p, &qq).unwrap();
            assert!(norm(&sub(w2.vec(), w.vec())) < 1e-9, "log(exp) failed on {m}");
        }
    }
}

#[test]
fn transport_is_isometric() {
    for m in manifolds() {
        let mut r = rng(12);
        for _ in 0..500 {
            let (p, q) = random_pair(&m, &mut r);
            let u = random_tangent(&p, 2.0, &mut r);
            let v = random_tangent(&p, 2.0, &mut r);
            let tu = m.transport(&u, &q).unwrap();
            let tv = m.transport(&v, &q).unwrap();
            assert!((tu.inner(&tv) - u.inner(&v)).abs() < 1e-9);
            assert!((tu.norm() - u.norm()).abs() < 1e-9);
        }
    }
}

#[test]
fn geodesic_point_matches_exp_of_scaled_log() {
    for m in manifolds() {
        let mut r = rng(13);
        for _ in 0..200 {
            let (p, q) = random_pair(&m, &mut r);
            for t in [0.0, 0.25, 0.5, 0.75, 1.0, 1.6, -0.4] {
                let g = m.geodesic_point(&p, &q, t).unwrap();
                let v = m.log(&p, &q).unwrap().scaled(t);
                let e = m.exp(&v).unwrap();
                assert!(g.approx_eq(&e, 1e-12));
            }
            let d = m.distance(&p, &q).unwrap();
            let g = m.geodesic_point(&p, &q, 0.3).unwrap();
            assert!((m.distance(&p, &g).unwrap() - 0.3 * d).abs() < 1e-9);
        }
    }
}

#[test]
fn sphere_curvature_first_bianchi() {
    let m = Manifold::sphere(3);
    let mut r = rng(14);
    for _ in 0..200 {
        let p = random_point(&m, &mut r);
        let x = random_tangent(&p, 1.0, &mut r);
        let y = random_tangent(&p, 1.0, &mut r);
        let z = random_tangent(&p, 1.0, &mut r);
        let a = m.curvature_tensor(&x, &y, &z).unwrap();
        let b = m.curvature_tensor(&y, &z, &x).unwrap();
        let c = m.curvature_tensor(&z, &x, &y).unwrap();
        let total = a.add(&b).unwrap().add(&c).unwrap();
        assert!(total.norm() < 1e-9);

        // antisymmetry in the first two slots
        let ba = m.curvature_tensor(&y, &x, &z).unwrap();
        assert!(a.add(&ba).unwrap().norm() < 1e-12);
    }
}

/// Holonomy oracle: parallel transport around a small geodesic quadrilateral
/// spanned by `εx`, `εy` differs from the identity by `ε² R(x,y) + O(ε³)`.
/// Richardson extrapolation over ε and ε/2 removes the cubic term.
#[test]
fn sphere_curvature_matches_transport_holonomy() {
    let m = Manifold::sphere(2);
    let mut r = rng(15);

    let holonomy = |p: &Point, x: &Tangent, y: &Tangent, z: &Tangent, eps: f64| -> Vec<f64> {
        let a = m.exp(&x.scaled(eps)).unwrap();
        let xb = m.transport(&y.scaled(eps), &a).unwrap();
        let c = m.exp(&xb).unwrap();
        let b = m.exp(&y.scaled(eps)).unwrap();
        let mut v = z.clone();
        for target in [&a, &c, &b, p] {
            v = m.transport(&v, target).unwrap();
        }
        sub(v.vec(), z.vec())
    };

    for _ in 0..50 {
        let p = random_point(&m, &mut r);
        let x = random_tangent(&p, 1.0, &mut r);
        let y = random_tangent(&p, 1.0, &mut r);
        let z = random_tangent(&p, 1.0, &mut r);

        let eps = 1e-3;
        let d1 = holonomy(&p, &x, &y, &z, eps);
        let d2 = holonomy(&p, &x, &y, &z, eps / 2.0);
        // Δ(ε) = Hε² + Kε³ + …, so (8·Δ(ε/2) − Δ(ε)) / ε² = H exactly in K
        let extrapolated: Vec<f64> = d1
            .iter()
            .zip(&d2)
            .map(|(a, b)| (8.0 * b - a) / (eps * eps))
            .collect();
        let expected = m.curvature_tensor(&x, &y, &z).unwrap();
        // loop orientation p → a → c → b → p yields −R(x,y)z at leading order
        let diff = axpy(&extrapolated, 1.0, expected.vec());
        let scale = expected.norm().max(1.0);
        assert!(
            norm(&diff) < 2e-4 * scale,
            "holonomy mismatch: {:?} vs {:?}",
            extrapolated,
            expected.vec()
        );
    }
}

#[test]
fn dexp_matches_finite_differences() {
    for m in manifolds() {
        let mut r = rng(16);
        for _ in 0..200 {
            let p = random_point(&m, &mut r);
            let v = random_tangent(&p, 1.5, &mut r);
            let w = random_tangent(&p, 1.0, &mut r);
            let out = m.dexp(&v, &w).unwrap();

            let h = 1e-5;
            let plus = m.exp(&v.add(&w.scaled(h)).unwrap()).unwrap();
            let minus = m.exp(&v.add(&w.scaled(-h)).unwrap()).unwrap();
            let fd: Vec<f64> = plus
                .coords()
                .iter()
                .zip(minus.coords())
                .map(|(a, b)| (a - b) / (2.0 * h))
                .collect();
            let err = norm(&sub(out.vec(), &fd));
            assert!(
                err < 1e-6 * out.norm().max(1.0),
                "dexp finite-difference mismatch on {m}: {err}"
            );
        }
    }
}

#[test]
fn dexp_inverse_is_inverse() {
    for m in manifolds() {
        let mut r = rng(17);
        for _ in 0..300 {
            let p = random_point(&m, &mut r);
            let v = random_tangent(&p, 2.0, &mut r);
            let w = random_tangent(&p, 1.0, &mut r);
            let u = m.dexp(&v, &w).unwrap();
            let back = m.dexp_inverse(&v, &u).unwrap();
            assert!(norm(&sub(back.vec(), w.vec())) < 1e-8);
        }
    }
}

#[test]
fn dgeodesic_operators_match_finite_differences() {
    for m in manifolds() {
        let mut r = rng(18);
        for _ in 0..200 {
            let (p, q) = random_pair(&m, &mut r);
            let v = random_tangent(&p, 1.0, &mut r);
            for t in [0.2, 0.7, 1.7] {
                let out = m.dgeodesic_start(&p, &q, t, &v).unwrap();
                let h = 1e-6;
                let pp = m.exp(&v.scaled(h)).unwrap();
                let pm = m.exp(&v.scaled(-h)).unwrap();
                let gp = m.geodesic_point(&pp, &q, t).unwrap();
                let gm = m.geodesic_point(&pm, &q, t).unwrap();
                let fd: Vec<f64> = gp
                    .coords()
                    .iter()
                    .zip(gm.coords())
                    .map(|(a, b)| (a - b) / (2.0 * h))
                    .collect();
                assert!(norm(&sub(out.vec(), &fd)) < 1e-5 * out.norm().max(1.0));
            }

            // endpoint derivative via reversal
            let w = random_tangent(&q, 1.0, &mut r);
            let t = 0.4;
            let out = m.dgeodesic_end(&p, &q, t, &w).unwrap();
            let h = 1e-6;
            let qp = m.exp(&w.scaled(h)).unwrap();
            let qm = m.exp(&w.scaled(-h)).unwrap();
            let gp = m.geodesic_point(&p, &qp, t).unwrap();
            let gm = m.geodesic_point(&p, &qm, t).unwrap();
            let fd: Vec<f64> = gp
                .coords()
                .iter()
                .zip(gm.coords())
                .map(|(a, b)| (a - b) / (2.0 * h))
                .collect();
            assert!(norm(&sub(out.vec(), &fd)) < 1e-5 * out.norm().max(1.0));
        }
    }
}

#[test]
fn dgeodesic_adjoints_satisfy_inner_product_identity() {
    for m in manifolds() {
        let mut r = rng(19);
        for _ in 0..300 {
            let (p, q) = random_pair(&m, &mut r);
            let t = 0.6;
            let v = random_tangent(&p, 1.0, &mut r);
            let gt = m.geodesic_point(&p, &q, t).unwrap();
            let z = random_tangent(&gt, 1.0, &mut r);

            let fwd = m.dgeodesic_start(&p, &q, t, &v).unwrap();
            let adj = m.dgeodesic_start_adjoint(&p, &q, t, &z).unwrap();
            assert!((fwd.inner(&z) - v.inner(&adj)).abs() < 1e-10);

            let w = random_tangent(&q, 1.0, &mut r);
            let fwd_e = m.dgeodesic_end(&p, &q, t, &w).unwrap();
            let adj_e = m.dgeodesic_end_adjoint(&p, &q, t, &z).unwrap();
            assert!((fwd_e.inner(&z) - w.inner(&adj_e)).abs() < 1e-10);
        }
    }
}

#[test]
fn jacobi_ivp_matches_finite_differences() {
    for m in manifolds() {
        let mut r = rng(20);
        for _ in 0..200 {
            let p = random_point(&m, &mut r);
            let x = random_tangent(&p, 1.2, &mut r);
            let j0 = random_tangent(&p, 1.0, &mut r);
            let dj0 = random_tangent(&p, 1.0, &mut r);

            // variation s ↦ exp_{exp_p(s·j0)}( transported (x + s·dj0) )
            let h = 1e-6;
            let eval = |s: f64| -> Point {
                let base = m.exp(&j0.scaled(s)).unwrap();
                let shifted = x.add(&dj0.scaled(s)).unwrap();
                let moved = m.transport(&shifted, &base).unwrap();
                m.exp(&moved).unwrap()
            };
            let plus = eval(h);
            let minus = eval(-h);
            let fd: Vec<f64> = plus
                .coords()
                .iter()
                .zip(minus.coords())
                .map(|(a, b)| (a - b) / (2.0 * h))
                .collect();
            let out = m.jacobi_ivp(&x, &j0, &dj0).unwrap();
            assert!(
                norm(&sub(out.vec(), &fd)) < 2e-5 * out.norm().max(1.0),
                "jacobi ivp mismatch on {m}"
            );
        }
    }
}
