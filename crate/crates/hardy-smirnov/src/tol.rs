//! Tolerances shared by classification, verification suites and the
//! acceptance tests.
//!
//! Two error regimes coexist: closed-form scalar identities evaluate a
//! handful of arithmetic operations on normalized quadruples (near machine
//! precision), while matrix certificates accumulate truncation tails on
//! trusted blocks.

/// Case-detection cutoff on `||c|²-|d|²|` and on the kernel-norm identity
/// defect, after quadruple normalization.
pub const TOL_CASE: f64 = 1e-10;

/// Closed-form scalar identities (coefficient equalities, normality LHS-RHS).
pub const TOL_SCALAR: f64 = 1e-10;

/// Matrix residuals on trusted blocks (certificates, commutators,
/// C-symmetry).
pub const TOL_MATRIX: f64 = 1e-7;

/// Conjugation axioms on trusted blocks.
pub const TOL_AXIOM: f64 = 1e-8;

/// Series-vs-quadrature agreement on trusted blocks.
pub const TOL_ORACLE: f64 = 1e-8;

/// Negative verdicts must separate from positive residuals by at least this
/// factor; theory gives no quantitative gap, so a ratio is used instead of an
/// absolute threshold.
pub const SEPARATION_RATIO: f64 = 100.0;
