//! The unbounded-domain obstruction: a non-automorphic symbol with a fixed
//! point in an unbounded Ω induces no complex symmetric composition
//! operator, witnessed by the diverging coefficient energy of (τ')^{1/2}.
//! Constant symbols sit on the other side: their operators are rank one and
//! always complex symmetric.
//!
//! ```bash
//! cargo run --example obstruction
//! ```

use hardy_smirnov::classify::{cs_obstruction, Obstruction};
use hardy_smirnov::hardy::{probe_operator, OperatorProperty};
use hardy_smirnov::smirnov::w_phi_matrix;
use hardy_smirnov::{AffineSymbol, RiemannMap};
use num_complex::Complex64;

fn main() {
    let order = 64;
    let tau1 = RiemannMap::tau1();

    // Φ(w) = 0.5w + 0.5 fixes 1 in the right half-plane
    let fixing = AffineSymbol::new(Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0)).unwrap();
    match cs_obstruction(&tau1, &fixing, order) {
        Obstruction::Obstructed { fixed_point, witness } => {
            println!("0.5w + 0.5 on C_+: obstructed (fixed point {fixed_point:.4})");
            for (m, sum) in &witness.partial_sums {
                println!("  energy sum through degree {m:>3}: {sum:>10.4}  (2(M+1) = {})", 2 * (m + 1));
            }
        }
        other => println!("unexpected: {other:?}"),
    }

    // Φ(w) = 2w + 1 has no fixed point in C_+; the theorem does not bite,
    // but the weight collapses to λ = 1/2 and the operator is still not
    // complex symmetric.
    let dilation = AffineSymbol::new(Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)).unwrap();
    match cs_obstruction(&tau1, &dilation, order) {
        Obstruction::NotObstructed {
            automorphism,
            fixed_point_free_not_cs,
            constant_weight,
        } => {
            println!(
                "\n2w + 1 on C_+: not obstructed (automorphism: {automorphism}, \
                 fixed-point-free flag: {fixed_point_free_not_cs})"
            );
            if let Some(w) = constant_weight {
                println!("  weight collapses to the constant {w:.6}: W_φ = λ·C_φ");
            }
        }
        other => println!("unexpected: {other:?}"),
    }

    // constant symbols give rank-one operators
    println!("\nsecond singular values of constant-symbol operators:");
    for zc in [Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.4)] {
        let w0 = tau1.apply(zc);
        let phi = AffineSymbol::constant(w0);
        let w = w_phi_matrix(&tau1, &phi, order).unwrap();
        let probe = probe_operator(&w, OperatorProperty::RankOne);
        println!(
            "  Φ ≡ {w0:.4}: σ₂/σ₁ = {:.3e}",
            probe.residual / probe.scale
        );
    }
}
