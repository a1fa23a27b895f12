//! Reproducing kernels on H²(Ω): the closed form against the V-route.
//!
//! ```bash
//! cargo run --example kernels
//! ```

use hardy_smirnov::hardy::inner_product;
use hardy_smirnov::smirnov::{
    kernel_k_omega, kernel_vector_omega, v_forward_poly, v_inverse_eval, SmirnovFunction,
};
use hardy_smirnov::RiemannMap;
use num_complex::Complex64;

fn main() {
    let order = 64;

    // On the right half-plane the kernel collapses to 1/(conj(u) + w).
    let tau1 = RiemannMap::tau1();
    let (u, w) = (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
    let value = kernel_k_omega(&tau1, u, w).unwrap();
    println!("half-plane kernel k_1(1)        = {value:.12}  (exact: 0.5)");

    // Two-route agreement: closed form vs. evaluation through V-coordinates.
    let tau2 = RiemannMap::tau2();
    let (u, w) = (Complex64::new(0.3, 1.4), Complex64::new(-0.2, 2.1));
    let closed = kernel_k_omega(&tau2, u, w).unwrap();
    let kernel = kernel_vector_omega(&tau2, u, order).unwrap();
    let f = SmirnovFunction {
        tau: tau2,
        vcoeffs: kernel.vcoeffs,
    };
    let via_v = v_inverse_eval(&f, w).unwrap();
    println!("upper half-plane two-route gap  = {:.3e}", (closed - via_v).norm());

    // The reproducing property f(u) = <f, k_u> for a polynomial pushed
    // through the isometry.
    let disc = RiemannMap::from_coefficients(
        Complex64::new(1.0, 0.0),
        Complex64::new(3.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(2.0, 0.0),
    )
    .unwrap();
    let poly = [
        Complex64::new(1.0, 0.0),
        Complex64::new(-0.5, 0.25),
        Complex64::new(0.0, 0.4),
    ];
    let f = v_forward_poly(&disc, &poly, order).unwrap();
    let u = disc.apply(Complex64::new(0.2, -0.3));
    let kernel = kernel_vector_omega(&disc, u, order).unwrap();
    let reproduced = inner_product(&f.vcoeffs, &kernel.vcoeffs);
    let direct: Complex64 = poly.iter().rev().fold(Complex64::ZERO, |acc, p| acc * u + p);
    println!("reproducing defect on a disc    = {:.3e}", (reproduced - direct).norm());
    println!("norm² through the isometry      = {:.9}", f.norm_sqr());
}
