//! The quadrature oracle: contour-integral coefficient extraction as an
//! independent check of the series-assembled operator matrices.
//!
//! ```bash
//! cargo run --example oracle_check
//! ```

use hardy_smirnov::hardy::{
    composition_matrix, quadrature_matrix_oracle, weighted_composition_matrix,
};
use hardy_smirnov::{MobiusMap, RiemannMap, TruncatedSeries};
use num_complex::Complex64;

fn main() {
    let order = 32;
    let samples = 16 * order;
    let radius = 0.75;

    // plain composition by z/(2 - z)
    let phi = MobiusMap::new(
        Complex64::new(1.0, 0.0),
        Complex64::ZERO,
        Complex64::new(-1.0, 0.0),
        Complex64::new(2.0, 0.0),
    )
    .unwrap();
    let series_route = composition_matrix(&phi, order).unwrap();
    let oracle =
        quadrature_matrix_oracle(|_| Complex64::ONE, |z| phi.apply(z), order, samples, radius)
            .unwrap();
    println!(
        "C_(z/(2-z)):   series vs oracle on trusted block  {:.3e}   (block {})",
        series_route.trusted_distance(&oracle),
        series_route.trusted_block()
    );

    // weighted composition with a polynomial weight
    let psi = TruncatedSeries::from_fn(order - 1, |k| match k {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(-0.5, 0.25),
        3 => Complex64::new(0.0, 0.4),
        _ => Complex64::ZERO,
    });
    let w = weighted_composition_matrix(&psi, &phi, order).unwrap();
    let psi_eval = psi.clone();
    let oracle = quadrature_matrix_oracle(
        move |z| psi_eval.eval(z),
        |z| phi.apply(z),
        order,
        samples,
        radius,
    )
    .unwrap();
    println!(
        "W_(ψ,φ):       series vs oracle on trusted block  {:.3e}",
        w.trusted_distance(&oracle)
    );

    // the canonical weight of a translation symbol collapses to a constant;
    // the oracle sees the same matrix as the series pipeline
    let tau1 = RiemannMap::tau1();
    let disc_map = MobiusMap::affine(Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0)).unwrap();
    let weight = |z: Complex64| {
        hardy_smirnov::series::principal_sqrt(tau1.prime(z) / tau1.prime(disc_map.apply(z)))
    };
    let oracle =
        quadrature_matrix_oracle(weight, |z| disc_map.apply(z), order, samples, radius).unwrap();
    let reference = composition_matrix(&disc_map, order)
        .unwrap()
        .scale(Complex64::new(0.5, 0.0));
    println!(
        "W_φ = λ·C_φ:   oracle vs λ·composition           {:.3e}",
        oracle.trusted_distance(&reference)
    );
}
