//! Denjoy-Wolff iteration for disc self-maps: interior attractors, boundary
//! attractors, and the slow parabolic crawl.
//!
//! ```bash
//! cargo run --example denjoy_wolff
//! ```

use hardy_smirnov::mobius::{denjoy_wolff_iterate, FixedPoint, MobiusMap};
use num_complex::Complex64;

fn report(label: &str, phi: &MobiusMap, z0: Complex64, n_max: usize, tol: f64) {
    match denjoy_wolff_iterate(phi, z0, n_max, tol) {
        Ok(run) => {
            let fixed: Vec<String> = phi
                .fixed_points()
                .map(|pts| {
                    pts.iter()
                        .map(|p| match p {
                            FixedPoint::Finite(z) => format!("{z:.4}"),
                            FixedPoint::Infinity => "∞".into(),
                        })
                        .collect()
                })
                .unwrap_or_default();
            println!(
                "{label:<18} limit {:.8}  after {:>7} iterations  (fixed points: {})",
                run.limit,
                run.iterations,
                fixed.join(", ")
            );
        }
        Err(e) => println!("{label:<18} {e}"),
    }
}

fn main() {
    // interior attracting point
    let half = MobiusMap::affine(Complex64::new(0.5, 0.0), Complex64::ZERO).unwrap();
    report("z/2", &half, Complex64::new(0.9, 0.0), 1000, 1e-12);

    // boundary Denjoy-Wolff point with geometric convergence
    let tangent = MobiusMap::affine(Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0)).unwrap();
    report("0.5z + 0.5", &tangent, Complex64::ZERO, 1000, 1e-12);

    // interior fixed point of z/(2 - z): iterates fall like 2^-n to 0
    let interior = MobiusMap::new(
        Complex64::new(1.0, 0.0),
        Complex64::ZERO,
        Complex64::new(-1.0, 0.0),
        Complex64::new(2.0, 0.0),
    )
    .unwrap();
    report("z/(2-z)", &interior, Complex64::new(0.5, 0.0), 10_000, 1e-12);

    // parabolic boundary point of 1/(2 - z): iterates crawl like 1 - 1/n
    let parabolic = MobiusMap::new(
        Complex64::ZERO,
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(2.0, 0.0),
    )
    .unwrap();
    report("1/(2-z)", &parabolic, Complex64::new(0.5, 0.0), 5_000_000, 1e-13);

    // elliptic automorphisms are refused
    let rotation = MobiusMap::affine(Complex64::new(0.0, 1.0), Complex64::ZERO).unwrap();
    report("i·z", &rotation, Complex64::new(0.5, 0.0), 1000, 1e-12);
}
