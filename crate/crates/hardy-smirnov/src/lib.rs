//! Numerical workbench for composition operators C_Φ on Hardy-Smirnov spaces
//! H²(Ω), where Ω is the image of the unit disc under a linear-fractional
//! Riemann map τ(z) = (az+b)/(cz+d).
//!
//! Everything is computed at a finite truncation order N in the monomial
//! basis of H²(𝕌), transported to Ω through the isometry
//! `V f = (f∘τ)·(τ')^{1/2}`:
//!
//! - [`series`] — truncated complex Maclaurin arithmetic, the substrate.
//! - [`mobius`] — linear-fractional maps: composition, fixed points, exact
//!   disc self-map geometry, Taylor expansion, Denjoy-Wolff iteration.
//! - [`hardy`] — H²(𝕌) kernels, operator matrix truncations with trusted
//!   blocks, property probes and the independent quadrature oracle.
//! - [`smirnov`] — H²(Ω) in canonical V-coordinates: closed-form reproducing
//!   kernels, evaluation, and W_Φ matrices.
//! - [`symmetry`] — the conjugations J, J_Ω, J_{Ω,Ψ} and C-symmetry
//!   residuals.
//! - [`classify`] — adjoint symbols and the Hermitian / unitary / normal /
//!   J_Ω-symmetry verdicts with matrix certificates, the forced cohyponormal
//!   fixed point, half-plane boundedness, and the unbounded-domain
//!   complex-symmetry obstruction.
//! - [`suites`] — seeded randomized verification suites.
//! - [`cli`] — input grammar, run configuration and JSON reports.
//!
//! The runnable examples under `examples/` walk through each capability; the
//! `hardy-smirnov` binary exposes the same operations as subcommands.

pub mod classify;
pub mod cli;
pub mod hardy;
pub mod mobius;
pub mod series;
pub mod smirnov;
pub mod suites;
pub mod symmetry;
pub mod tol;

pub use classify::{classify_symbol, ClassificationReport};
pub use mobius::{AffineSymbol, MobiusMap, RiemannMap};
pub use series::TruncatedSeries;
