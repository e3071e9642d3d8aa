//! Randomized property suites for the geometric core: metric axioms and
//! invariances of the vector-valued distance, the Cartan projection against
//! an independent Jacobi eigenvalue oracle, equivariance of ζ-directions
//! under frame transport, and log-domain arithmetic against plain doubles in
//! the representable range.

use anosov_core::logscalar::LogScalar;
use anosov_core::symspace::{
    cartan_vector, frame_transport, model_constants, riem_distance, vector_distance,
    zeta_direction, GroupElement, SpdPoint,
};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random unit-determinant SPD point: exp of a random traceless symmetric
/// matrix (eigenvalue spread a couple of units, well inside f64 range).
fn random_spd(rng: &mut ChaCha8Rng, d: usize) -> SpdPoint {
    let mut s = DMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let x = rng.gen_range(-1.0..1.0);
            s[(i, j)] = x;
            s[(j, i)] = x;
        }
    }
    let eig = s.symmetric_eigen();
    let mean = eig.eigenvalues.iter().sum::<f64>() / d as f64;
    let expd = DMatrix::from_diagonal(&eig.eigenvalues.map(|v: f64| (v - mean).exp()));
    let m = &eig.eigenvectors * expd * eig.eigenvectors.transpose();
    SpdPoint::new((&m + m.transpose()) * 0.5).expect("exp of traceless symmetric is valid")
}

/// Random element of SL(d,ℝ): a random matrix with determinant normalized to
/// one (row-negated first if negative; resampled if near-singular).
fn random_sl(rng: &mut ChaCha8Rng, d: usize) -> GroupElement {
    loop {
        let mut m = DMatrix::from_fn(d, d, |_, _| rng.gen_range(-1.0..1.0));
        let det: f64 = m.determinant();
        if det.abs() < 1e-2 {
            continue;
        }
        if det < 0.0 {
            for j in 0..d {
                m[(0, j)] = -m[(0, j)];
            }
        }
        let det: f64 = m.determinant();
        m /= det.powf(1.0 / d as f64);
        return GroupElement::new(m).expect("normalized matrix is in SL(d)");
    }
}

#[test]
fn vector_distance_triangle_inequality_on_random_quadruples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut worst: f64 = 0.0;
    for &d in &[2usize, 3, 4] {
        for _ in 0..334 {
            let pts: Vec<SpdPoint> = (0..4).map(|_| random_spd(&mut rng, d)).collect();
            // All four triangles of the quadruple.
            for (a, b, c) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
                let ab = riem_distance(&pts[a], &pts[b]).unwrap();
                let bc = riem_distance(&pts[b], &pts[c]).unwrap();
                let ac = riem_distance(&pts[a], &pts[c]).unwrap();
                worst = worst.max(ac - (ab + bc));
            }
        }
    }
    assert!(worst <= 1e-9, "triangle inequality violated by {worst:.3e}");
}

#[test]
fn vector_distance_metric_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for &d in &[2usize, 3, 4] {
        for _ in 0..100 {
            let p = random_spd(&mut rng, d);
            let q = random_spd(&mut rng, d);
            assert!(riem_distance(&p, &p).unwrap() <= 1e-12);
            let pq = riem_distance(&p, &q).unwrap();
            let qp = riem_distance(&q, &p).unwrap();
            assert!((pq - qp).abs() <= 1e-9);
            assert!(pq > 0.0);
        }
    }
}

#[test]
fn vector_distance_is_g_invariant_and_iota_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for &d in &[2usize, 3, 4] {
        for _ in 0..70 {
            let p = random_spd(&mut rng, d);
            let q = random_spd(&mut rng, d);
            let g = random_sl(&mut rng, d);
            let v = vector_distance(&p, &q).unwrap();
            let vg = vector_distance(&p.translate(&g), &q.translate(&g)).unwrap();
            let vrev = vector_distance(&q, &p).unwrap();
            let vio = v.iota();
            for i in 0..d {
                assert!((v.entries()[i] - vg.entries()[i]).abs() <= 1e-9, "G-invariance");
                assert!((vrev.entries()[i] - vio.entries()[i]).abs() <= 1e-12, "iota symmetry");
            }
        }
    }
}

/// Cyclic-order Jacobi eigenvalue iteration: an oracle for the eigenvalues
/// of a symmetric matrix that shares no code with the nalgebra paths used by
/// the library.
fn jacobi_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let d = m.nrows();
    let mut a = m.clone();
    for _ in 0..200 {
        let mut off = 0.0;
        for p in 0..d {
            for q in (p + 1)..d {
                off += a[(p, q)] * a[(p, q)];
            }
        }
        if off <= 1e-30 {
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                if a[(p, q)].abs() <= 1e-300 {
                    continue;
                }
                let theta = 0.5 * (2.0 * a[(p, q)]).atan2(a[(q, q)] - a[(p, p)]);
                let (c, s) = (theta.cos(), theta.sin());
                for k in 0..d {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..d {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..d).map(|i| a[(i, i)]).collect();
    eigs.sort_by(|x, y| y.total_cmp(x));
    eigs
}

#[test]
fn cartan_vector_matches_jacobi_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for &d in &[2usize, 3, 4] {
        for _ in 0..40 {
            let g = random_sl(&mut rng, d);
            let v = cartan_vector(&g).unwrap();
            // log singular values of g = ½·log eigenvalues of gᵀg.
            let gtg = g.matrix().transpose() * g.matrix();
            let eigs = jacobi_eigenvalues(&gtg);
            let logs: Vec<f64> = eigs.iter().map(|&e| 0.5 * e.ln()).collect();
            let mean = logs.iter().sum::<f64>() / d as f64;
            for i in 0..d {
                assert!(
                    (v.entries()[i] - (logs[i] - mean)).abs() <= 1e-10,
                    "cartan vs jacobi at d={d}: {} vs {}",
                    v.entries()[i],
                    logs[i] - mean
                );
            }
        }
    }
}

#[test]
fn zeta_direction_is_equivariant_under_frame_transport() {
    let mc = model_constants(3, &[1, 2]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut checked = 0;
    for _ in 0..200 {
        let p = random_spd(&mut rng, 3);
        let q = random_spd(&mut rng, 3);
        let g = random_sl(&mut rng, 3);
        // Skip wall-adjacent pairs (the direction is defined to fail there).
        let (z, zg) = match (
            zeta_direction(&p, &q, &mc),
            zeta_direction(&p.translate(&g), &q.translate(&g), &mc),
        ) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        let k = frame_transport(&p, &g);
        let pushed = &k * z.matrix() * k.transpose();
        assert!((zg.matrix() - pushed).norm() <= 1e-8);
        checked += 1;
    }
    assert!(checked >= 150, "only {checked} regular pairs out of 200");
}

#[test]
fn logscalar_matches_double_arithmetic_in_representable_range() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut cases = 0;
    while cases < 10_000 {
        let x = rng.gen_range(-1.0..1.0) * 10f64.powf(rng.gen_range(-300.0..300.0));
        let y = rng.gen_range(-1.0..1.0) * 10f64.powf(rng.gen_range(-300.0..300.0));
        if x == 0.0 || y == 0.0 {
            continue;
        }
        let (lx, ly) = (LogScalar::from_f64(x).unwrap(), LogScalar::from_f64(y).unwrap());

        let prod = lx.mul(ly).to_f64();
        if (x * y).is_normal() {
            assert!(((prod - x * y) / (x * y)).abs() <= 1e-12, "mul {x} {y}");
        }
        let quot = lx.div(ly).to_f64();
        if (x / y).is_normal() {
            assert!(((quot - x / y) / (x / y)).abs() <= 1e-12, "div {x} {y}");
        }
        if let Ok(sum) = lx.add(ly) {
            let direct = x + y;
            if direct.is_normal() {
                assert!(((sum.to_f64() - direct) / direct).abs() <= 1e-12, "add {x} {y}");
            }
        }
        assert_eq!(lx.le(ly), x <= y, "compare {x} {y}");
        cases += 1;
    }
}
