//! The conjugations J, J_Ω and J_{Ω,Ψ}: axioms, pointwise action, and which
//! composition operators they make complex symmetric.
//!
//! ```bash
//! cargo run --example conjugations
//! ```

use hardy_smirnov::smirnov::w_phi_matrix;
use hardy_smirnov::symmetry::{c_symmetry_residual, conj_j, conj_j_omega, conj_j_omega_psi};
use hardy_smirnov::{AffineSymbol, RiemannMap};
use num_complex::Complex64;

fn main() {
    let order = 64;
    let tau1 = RiemannMap::tau1();

    let j = conj_j(order);
    println!(
        "J:        isometry {:.3e}  involution {:.3e}",
        j.isometry_residual(),
        j.involution_residual()
    );

    let j_omega = conj_j_omega(&tau1, order);
    println!(
        "J_Ω:      isometry {:.3e}  involution {:.3e}  pointwise {:.3e}",
        j_omega.isometry_residual(),
        j_omega.involution_residual(),
        j_omega.pointwise_residual().unwrap()
    );

    // transported conjugation for the unitary symbol Ψ(w) = w + 2i
    let psi = AffineSymbol::new(Complex64::ONE, Complex64::new(0.0, 2.0)).unwrap();
    let j_omega_psi = conj_j_omega_psi(&tau1, &psi, order).unwrap();
    println!(
        "J_Ω,Ψ:    isometry {:.3e}  involution {:.3e}  pointwise {:.3e}  (trusted block {})",
        j_omega_psi.isometry_residual(),
        j_omega_psi.involution_residual(),
        j_omega_psi.pointwise_residual().unwrap(),
        j_omega_psi.trusted_block(),
    );

    // translations are J_Ω-symmetric on the half-plane; dilations are not
    println!("\nC-symmetry residuals under J_Ω:");
    for (label, slope, offset) in [
        ("w + 1      (family)", 1.0, Complex64::new(1.0, 0.0)),
        ("w + i      (family)", 1.0, Complex64::new(0.0, 1.0)),
        ("2w + 1 (out of family)", 2.0, Complex64::new(1.0, 0.0)),
    ] {
        let phi = AffineSymbol::new(Complex64::new(slope, 0.0), offset).unwrap();
        let w = w_phi_matrix(&tau1, &phi, order).unwrap();
        println!("  {label:<24} {:.3e}", c_symmetry_residual(&w, &j_omega));
    }
}
