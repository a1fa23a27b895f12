//! The adjoint of a composition operator is again (a multiple of) a
//! composition operator; this example evaluates the closed formula and its
//! matrix certificate.
//!
//! ```bash
//! cargo run --example adjoint_formula
//! ```

use hardy_smirnov::classify::{adjoint_certificate_residual, adjoint_symbol};
use hardy_smirnov::{AffineSymbol, RiemannMap};
use num_complex::Complex64;

fn main() {
    let order = 64;

    // The half-plane formula: Φ(w) = λw + r with λ = 2, r = 1 + i gives
    // C_Φ* = (1/2)·C_{Φ⋆} with Φ⋆(w) = w/2 + (1 - i)/2.
    let tau1 = RiemannMap::tau1();
    let phi = AffineSymbol::new(Complex64::new(2.0, 0.0), Complex64::new(1.0, 1.0)).unwrap();
    let pair = adjoint_symbol(&tau1, &phi, None).unwrap();
    println!("right half-plane, Φ(w) = 2w + (1+i):");
    println!("  λ  = {:.6}", pair.lambda);
    println!(
        "  Φ⋆ = {:.6}·w + {:.6}",
        pair.phi_star.slope(),
        pair.phi_star.offset()
    );
    let res = adjoint_certificate_residual(&tau1, &phi, &pair, order).unwrap();
    println!("  block-norm(W_Φ* − λ·W_Φ⋆) = {res:.3e}");

    // Same symbol on the upper half-plane: the conjugate offset flips sign.
    let tau2 = RiemannMap::tau2();
    let pair = adjoint_symbol(&tau2, &phi, None).unwrap();
    println!("upper half-plane, same symbol:");
    println!(
        "  Φ⋆ = {:.6}·w + {:.6}",
        pair.phi_star.slope(),
        pair.phi_star.offset()
    );
    let res = adjoint_certificate_residual(&tau2, &phi, &pair, order).unwrap();
    println!("  certificate residual = {res:.3e}");

    // Bounded disc: the generic case pins λ = 1 and conjugates the slope.
    let disc = RiemannMap::from_coefficients(
        Complex64::new(1.0, 0.0),
        Complex64::new(3.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(2.0, 0.0),
    )
    .unwrap();
    let s = hardy_smirnov::classify::tau_scalars(&disc);
    let r = Complex64::new(0.4, 0.3);
    let phi = AffineSymbol::new(r, (r - Complex64::ONE) * s.beta / s.gamma).unwrap();
    let pair = adjoint_symbol(&disc, &phi, None).unwrap();
    println!("bounded disc, rotation-dilation about the center:");
    println!("  λ  = {:.6} (forced)", pair.lambda);
    println!("  Φ⋆ slope = {:.6} (conjugated)", pair.phi_star.slope());
    let res = adjoint_certificate_residual(&disc, &phi, &pair, order).unwrap();
    println!("  certificate residual = {res:.3e}");
}
