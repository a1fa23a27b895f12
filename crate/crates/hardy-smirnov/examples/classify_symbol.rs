//! Full classification of affine symbols on reference domains.
//!
//! ```bash
//! cargo run --example classify_symbol
//! ```

use hardy_smirnov::{classify_symbol, AffineSymbol, RiemannMap};
use num_complex::Complex64;

fn show(tag: &str, report: &hardy_smirnov::ClassificationReport) {
    println!("== {tag}");
    println!("   case       {}", report.case.as_str());
    println!("   self-map   {}", report.selfmap);
    println!(
        "   hermitian  {:<20} witness {:.3e}",
        report.hermitian.status.as_str(),
        report.hermitian.witness
    );
    println!(
        "   unitary    {:<20} witness {:.3e}",
        report.unitary.status.as_str(),
        report.unitary.witness
    );
    println!(
        "   normal     {:<20} witness {:.3e}",
        report.normal.status.as_str(),
        report.normal.witness
    );
    println!("   J_Omega    {}", report.jomega_symmetric.status.as_str());
    println!("   bounded    {}", report.bounded.as_str());
    if let Some(pair) = &report.adjoint {
        println!(
            "   adjoint    lambda = {:.4}, star = {:.4}·w + {:.4}",
            pair.lambda,
            pair.phi_star.slope(),
            pair.phi_star.offset()
        );
        if let Some(res) = report.adjoint_certificate {
            println!("   certificate residual {res:.3e}");
        }
    }
    println!("   obstruction {}", report.obstruction.as_str());
}

fn main() {
    let order = 64;
    let tau1 = RiemannMap::tau1();

    // vertical translation of the right half-plane: unitary
    let phi = AffineSymbol::new(Complex64::ONE, Complex64::new(0.0, 2.0)).unwrap();
    show("C_+ with w + 2i", &classify_symbol(&tau1, &phi, order, None));

    // horizontal translation: Hermitian
    let phi = AffineSymbol::new(Complex64::ONE, Complex64::new(0.7, 0.0)).unwrap();
    show("C_+ with w + 0.7", &classify_symbol(&tau1, &phi, order, None));

    // dilation with offset: neither, but with a clean adjoint formula
    let phi = AffineSymbol::new(Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)).unwrap();
    show("C_+ with 2w + 1", &classify_symbol(&tau1, &phi, order, None));

    // disc scaling
    let disc = RiemannMap::identity();
    let phi = AffineSymbol::new(Complex64::new(-0.5, 0.0), Complex64::ZERO).unwrap();
    show("disc with -0.5·z", &classify_symbol(&disc, &phi, order, None));
}
