//! Runs every randomized verification suite at desk scale and prints the
//! summary lines the acceptance gate is built on.
//!
//! ```bash
//! cargo run --release --example verify_suites
//! ```

use hardy_smirnov::suites::{
    suite_adjoints, suite_fixed_point, suite_hermitian_unitary, suite_kernels, suite_normality,
    suite_obstruction, suite_oracle, suite_symmetry,
};

fn main() {
    let order = 64;
    let seed = 1;
    let reports = [
        suite_kernels(order, seed),
        suite_oracle(order, seed, 16 * order, 0.75),
        suite_adjoints(order, seed),
        suite_hermitian_unitary(order, seed),
        suite_normality(order, seed),
        suite_symmetry(order, seed),
        suite_fixed_point(order, seed),
        suite_obstruction(order, seed),
    ];
    let mut all = true;
    for r in &reports {
        println!(
            "{:<20} {:>3}/{:<3} cases   max residual {:.3e}   (tol {:.1e})   {}",
            r.suite,
            r.passes,
            r.cases,
            r.max_residual,
            r.tolerance,
            if r.passed() { "ok" } else { "FAILED" }
        );
        all &= r.passed();
        for f in &r.failures {
            println!("    failure: {f}");
        }
    }
    std::process::exit(if all { 0 } else { 1 });
}
