//! Conjugations J, J_Ω and J_{Ω,Ψ} as conjugate-linear matrix
//! representations, conjugation-axiom verification, and C-symmetry
//! residuals.
//!
//! A conjugate-linear operator is stored as the pair (A, entrywise
//! conjugation) acting as `x ↦ A·conj(x)`. In that normal form the
//! C-symmetry identity `CT = T*C` reads `A·conj(T) = T*·A`.
//!
//! In canonical V-coordinates J_Ω is *exactly* coefficient conjugation
//! (A = I); the pointwise formula on Ω is a derived test, and its
//! square roots must be taken along the analytic branch fixed by V —
//! with pointwise principal roots the identity picks up spurious
//! unimodular factors for complex-coefficient Riemann maps.

use crate::classify;
use crate::hardy::OperatorMatrix;
use crate::mobius::{AffineSymbol, RiemannMap};
use crate::smirnov::{v_inverse_eval, SmirnovError, SmirnovFunction};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SymmetryError {
    #[error("symbol does not induce a unitary composition operator")]
    NotUnitarySymbol,
    #[error(transparent)]
    Smirnov(#[from] SmirnovError),
}

/// A conjugation in coordinates: the conjugate-linear map `x ↦ A·conj(x)`.
#[derive(Debug, Clone)]
pub struct ConjugationRep {
    matrix: OperatorMatrix,
    label: String,
    isometry_residual: f64,
    involution_residual: f64,
    /// Residual of the pointwise formula check run at construction, when one
    /// applies to the conjugation.
    pointwise_residual: Option<f64>,
}

impl ConjugationRep {
    fn from_matrix(matrix: OperatorMatrix, label: impl Into<String>) -> Self {
        let (isometry_residual, involution_residual) = conjugation_axiom_residuals(&matrix);
        Self {
            matrix,
            label: label.into(),
            isometry_residual,
            involution_residual,
            pointwise_residual: None,
        }
    }

    pub fn matrix(&self) -> &OperatorMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn trusted_block(&self) -> usize {
        self.matrix.trusted_block()
    }

    /// `‖A*A - I‖` on the trusted block (isometry axiom).
    pub fn isometry_residual(&self) -> f64 {
        self.isometry_residual
    }

    /// `‖A·conj(A) - I‖` on the trusted block (C² = Id in coordinates).
    pub fn involution_residual(&self) -> f64 {
        self.involution_residual
    }

    pub fn pointwise_residual(&self) -> Option<f64> {
        self.pointwise_residual
    }

    /// Applies the conjugation to a coefficient vector.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let conj: Vec<Complex64> = x.iter().map(|v| v.conj()).collect();
        self.matrix.apply(&conj)
    }
}

/// Axiom residuals of a candidate conjugation matrix on its trusted block.
pub fn conjugation_axiom_residuals(a: &OperatorMatrix) -> (f64, f64) {
    let id = OperatorMatrix::identity(a.order());
    let b = a.trusted_block();
    let isometry = a.adjoint().mul(a).sub(&id).block_max_norm(b);
    let involution = a.mul(&a.conj_entries()).sub(&id).block_max_norm(b);
    (isometry, involution)
}

/// The conjugation (Jf)(z) = conj(f(conj z)): coefficient conjugation,
/// A = identity.
pub fn conj_j(order: usize) -> ConjugationRep {
    ConjugationRep::from_matrix(
        OperatorMatrix::identity(order).with_tag("J"),
        "J",
    )
}

/// J_Ω = V⁻¹ J V in canonical coordinates: again A = identity (a theorem of
/// the representation, not an approximation). Construction additionally
/// verifies the pointwise formula on a grid of Ω points against a kernel
/// function and stores the largest residual.
pub fn conj_j_omega(tau: &RiemannMap, order: usize) -> ConjugationRep {
    let mut rep = ConjugationRep::from_matrix(
        OperatorMatrix::identity(order).with_tag("J_Omega"),
        format!("J_Omega({:?})", tau.map()),
    );
    let u = tau.apply(Complex64::new(0.3, 0.2));
    if let Ok(kernel) = crate::smirnov::kernel_vector_omega(tau, u, order - 1) {
        let f = SmirnovFunction {
            tau: *tau,
            vcoeffs: kernel.vcoeffs,
        };
        let mut worst = 0.0f64;
        let mut any = false;
        for i in -2..=2 {
            for j in -2..=2 {
                let z = Complex64::new(0.22 * i as f64, 0.22 * j as f64);
                let w = tau.apply(z);
                if let Ok(res) = j_omega_pointwise_residual(tau, &f, w) {
                    worst = worst.max(res);
                    any = true;
                }
            }
        }
        if any {
            rep.pointwise_residual = Some(worst);
        }
    }
    rep
}

/// Applies J_Ω to a canonical-coordinates function: coefficient conjugation.
pub fn j_omega_apply(f: &SmirnovFunction) -> SmirnovFunction {
    SmirnovFunction {
        tau: f.tau,
        vcoeffs: f.vcoeffs.conj_coeffs(),
    }
}

/// Target point τ(conj(τ⁻¹(w))) of the pointwise J_Ω formula.
pub fn j_omega_target_point(tau: &RiemannMap, w: Complex64) -> Complex64 {
    tau.apply(tau.inverse_point(w).conj())
}

/// Defect of the pointwise identity
/// `(J_Ω f)(w) = (τ'(α))^{-1/2} · conj(τ'(conj α))^{1/2} · conj(f(τ(conj α)))`
/// with α = τ⁻¹(w) and square roots along the analytic V-branch.
pub fn j_omega_pointwise_residual(
    tau: &RiemannMap,
    f: &SmirnovFunction,
    w: Complex64,
) -> Result<f64, SmirnovError> {
    let alpha = tau.inverse_point(w);
    let target = tau.apply(alpha.conj());
    let lhs = v_inverse_eval(&j_omega_apply(f), w)?;
    let prefactor = tau.sqrt_prime(alpha.conj()).conj() / tau.sqrt_prime(alpha);
    let rhs = prefactor * v_inverse_eval(f, target)?.conj();
    Ok((lhs - rhs).norm())
}

/// J_{Ω,Ψ} = C_Ψ J_Ω C_Ψ⁻¹ for a unitary-inducing symbol Ψ, in coordinates:
/// `A = W_Ψ · conj(W_{Ψ⁻¹})`, since
/// `C x = W_Ψ · conj(W_{Ψ⁻¹} x) = (W_Ψ · conj(W_{Ψ⁻¹})) · conj(x)`.
/// The representation is assembled as a *single* weighted-composition
/// truncation (products of weighted composition operators are weighted
/// compositions), at a guard order extended past the requested one so the
/// axiom products stay certified on the requested-order trusted block. Naive
/// products of W-truncations would converge only algebraically for
/// boundary-tangent symbols.
pub fn conj_j_omega_psi(
    tau: &RiemannMap,
    psi: &AffineSymbol,
    order: usize,
) -> Result<ConjugationRep, SymmetryError> {
    let verdict = classify::is_unitary_symbol(tau, psi, order);
    if verdict.status != classify::VerdictStatus::Yes {
        return Err(SymmetryError::NotUnitarySymbol);
    }
    let (_, phi_l_probe) = crate::smirnov::transported_conjugation_symbol(tau, psi, 1)?;
    // boundary-tangent symbols spread column mass well past the pole-decay
    // scale; take four tail-bound margins and certify the block from the data
    let margin = crate::hardy::guard_order(phi_l_probe.pole_modulus(), 0);
    let guard = (order + 4 * margin).min(1024);
    let (psi_l, phi_l) =
        crate::smirnov::transported_conjugation_symbol(tau, psi, guard.saturating_sub(1))?;
    let a = crate::hardy::weighted_composition_matrix(&psi_l, &phi_l, guard)
        .map_err(SmirnovError::Hardy)?;
    let trusted = crate::hardy::certified_column_block(&a, order / 2);
    let a = a.with_trusted_block(trusted).with_tag("J_Omega_Psi");
    let mut rep = ConjugationRep::from_matrix(a, format!("J_Omega_Psi({:?})", psi));
    rep.pointwise_residual = j_omega_psi_pointwise_residual(tau, psi, &rep, guard);
    Ok(rep)
}

/// The pointwise target map of J_{Ω,Ψ} for real-coefficient τ:
/// `Ψ⁻¹(conj(Ψ(w)))`, which reduces to the closed forms
/// `w̄ - 2si` (equal-modulus case) and
/// `(conj(r)/r)·w̄ - 2i·Im(r)(bd - ac)/(r(|c|² - |d|²))` otherwise.
pub fn j_omega_psi_target_point(psi: &AffineSymbol, w: Complex64) -> Complex64 {
    let inv = psi.inverse().expect("unitary symbols are invertible");
    inv.apply(psi.apply(w).conj())
}

fn j_omega_psi_pointwise_residual(
    tau: &RiemannMap,
    psi: &AffineSymbol,
    rep: &ConjugationRep,
    order: usize,
) -> Option<f64> {
    // the closed-form reduction is stated for real-coefficient τ with
    // positive determinant (where J_Ω acts as f ↦ conj(f(w̄)))
    let m = tau.map();
    let real_coeffs = m.a.im.abs() + m.b.im.abs() + m.c.im.abs() + m.d.im.abs() < 1e-14;
    if !real_coeffs || m.det().re <= 0.0 {
        return None;
    }
    let u = tau.apply(Complex64::new(0.25, 0.15));
    let kernel = crate::smirnov::kernel_vector_omega(tau, u, order - 1).ok()?;
    let f = SmirnovFunction {
        tau: *tau,
        vcoeffs: kernel.vcoeffs,
    };
    let mut worst: f64 = 0.0;
    let mut any = false;
    for i in -2..=2 {
        for j in -2..=2 {
            let z = Complex64::new(0.2 * i as f64, 0.2 * j as f64);
            let w = tau.apply(z);
            let target = j_omega_psi_target_point(psi, w);
            if !tau.contains(target) {
                continue;
            }
            let Ok(rhs) = v_inverse_eval(&f, target) else {
                continue;
            };
            // LHS through the matrix representation
            let fw = rep.apply(f.vcoeffs.coeffs());
            let g = SmirnovFunction {
                tau: *tau,
                vcoeffs: crate::series::TruncatedSeries::new(fw).ok()?,
            };
            let Ok(lhs) = v_inverse_eval(&g, w) else {
                continue;
            };
            worst = worst.max((lhs - rhs.conj()).norm());
            any = true;
        }
    }
    any.then_some(worst)
}

/// Block-norm of `A·conj(T) - T*·A`, the coordinate form of `CT = T*C`.
pub fn c_symmetry_residual(t: &OperatorMatrix, c: &ConjugationRep) -> f64 {
    let a = c.matrix();
    let left = a.mul(&t.conj_entries());
    let right = t.adjoint().mul(a);
    let b = t.trusted_block().min(c.trusted_block());
    left.sub(&right).block_max_norm(b)
}
