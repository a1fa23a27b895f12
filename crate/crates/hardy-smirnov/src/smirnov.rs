//! H²(Ω) realized through the isometry `V f = (f∘τ)(τ')^{1/2}`.
//!
//! Every H²(Ω) object is stored as its V-image coefficients (the canonical
//! coordinates), which turns the Ω inner product into the plain coefficient
//! inner product and adjoints into conjugate transposes. Ω-side values are
//! always derived through `v_inverse_eval`.

use crate::hardy::{
    self, trusted_block_for_pole, weighted_composition_matrix, HardyError, OperatorMatrix,
};
use crate::mobius::{
    symbol_conjugate_to_disc, AffineSymbol, MobiusError, RiemannMap, SelfMapVerdict,
};
use crate::series::TruncatedSeries;
use num_complex::Complex64;
use std::f64::consts::TAU;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SmirnovError {
    #[error("point {0} lies outside Ω")]
    PointOutsideDomain(Complex64),
    #[error("evaluation point too near the boundary (|τ⁻¹(w)| = {0:.6} > 0.9)")]
    EvaluationPointTooNearBoundary(f64),
    #[error("kernel denominator vanished (numeric failure)")]
    DenominatorVanishes,
    #[error("symbol is not a self-map of Ω")]
    SymbolNotSelfMap,
    #[error(transparent)]
    Mobius(#[from] MobiusError),
    #[error(transparent)]
    Hardy(#[from] HardyError),
}

/// An element of H²(Ω) in canonical coordinates: the Maclaurin coefficients
/// of its V-image. `‖f‖²_Ω = Σ |vcoeffs[k]|²` by the isometry.
#[derive(Debug, Clone)]
pub struct SmirnovFunction {
    pub tau: RiemannMap,
    pub vcoeffs: TruncatedSeries,
}

impl SmirnovFunction {
    pub fn norm_sqr(&self) -> f64 {
        self.vcoeffs.norm_sqr()
    }
}

/// Reproducing kernel k_u of H²(Ω) in canonical coordinates together with
/// the scalars entering the closed form.
#[derive(Debug, Clone)]
pub struct KernelVectorOmega {
    pub u: Complex64,
    pub tau: RiemannMap,
    pub vcoeffs: TruncatedSeries,
}

/// V f for a black-box f on Ω, by quadrature on the circle |z| = radius:
/// the integrand `(f∘τ)·(τ')^{1/2}` uses the analytic square-root branch of
/// the Riemann map, so no pointwise branch flips can occur.
pub fn v_forward(
    tau: &RiemannMap,
    f: impl Fn(Complex64) -> Complex64,
    order: usize,
    samples: usize,
    radius: f64,
) -> SmirnovFunction {
    let vals: Vec<Complex64> = (0..samples)
        .map(|j| {
            let z = Complex64::from_polar(radius, TAU * j as f64 / samples as f64);
            f(tau.apply(z)) * tau.sqrt_prime(z)
        })
        .collect();
    let vcoeffs = TruncatedSeries::from_fn(order, |k| {
        let mut acc = Complex64::ZERO;
        for (j, v) in vals.iter().enumerate() {
            let theta = TAU * j as f64 * k as f64 / samples as f64;
            acc += v * Complex64::from_polar(1.0, -theta);
        }
        acc / samples as f64 / radius.powi(k as i32)
    });
    SmirnovFunction {
        tau: *tau,
        vcoeffs,
    }
}

/// V f for a polynomial `f(w) = Σ p_k w^k`, computed by series arithmetic:
/// Horner in the Taylor series of τ, times the series branch of (τ')^{1/2}.
pub fn v_forward_poly(
    tau: &RiemannMap,
    poly: &[Complex64],
    order: usize,
) -> Result<SmirnovFunction, SmirnovError> {
    let tau_series = tau.map().taylor(order)?;
    let mut acc = TruncatedSeries::zero(order);
    for p in poly.iter().rev() {
        acc = acc.mul(&tau_series);
        acc = acc.add(&TruncatedSeries::constant(order, *p));
    }
    let vcoeffs = acc.mul(&tau.sqrt_prime_series(order));
    Ok(SmirnovFunction {
        tau: *tau,
        vcoeffs,
    })
}

/// Evaluates a canonical-coordinates function back on Ω:
/// `f(w) = (τ'(τ⁻¹(w)))^{-1/2} · (Vf)(τ⁻¹(w))`.
pub fn v_inverse_eval(g: &SmirnovFunction, w: Complex64) -> Result<Complex64, SmirnovError> {
    let z = g.tau.inverse_point(w);
    if z.norm() > 0.9 {
        return Err(SmirnovError::EvaluationPointTooNearBoundary(z.norm()));
    }
    Ok(g.vcoeffs.eval(z) / g.tau.sqrt_prime(z))
}

/// Canonical coordinates of the reproducing kernel k_u:
/// `conj((τ'(τ⁻¹(u)))^{1/2})^{-1} · K_{τ⁻¹(u)}` with the V-consistent branch.
pub fn kernel_vector_omega(
    tau: &RiemannMap,
    u: Complex64,
    order: usize,
) -> Result<KernelVectorOmega, SmirnovError> {
    let alpha = tau.inverse_point(u);
    if !(alpha.norm() < 1.0 - 1e-12) {
        return Err(SmirnovError::PointOutsideDomain(u));
    }
    let scale = 1.0 / tau.sqrt_prime(alpha).conj();
    let k_alpha = hardy::kernel_k(alpha, order).map_err(SmirnovError::Hardy)?;
    Ok(KernelVectorOmega {
        u,
        tau: *tau,
        vcoeffs: k_alpha.coeffs.scale(scale),
    })
}

/// Closed-form reproducing kernel value
/// `k_u(w) = |ad-bc| / (|a|²-|b|² + (b·conj(d)-conj(c)·a)·conj(u)
///           + [(|c|²-|d|²)·conj(u) + conj(b)·d - conj(a)·c]·w)`.
pub fn kernel_k_omega(
    tau: &RiemannMap,
    u: Complex64,
    w: Complex64,
) -> Result<Complex64, SmirnovError> {
    for point in [u, w] {
        if !tau.contains(point) {
            return Err(SmirnovError::PointOutsideDomain(point));
        }
    }
    let m = tau.map();
    let (a, b, c, d) = (m.a, m.b, m.c, m.d);
    let det_abs = m.det().norm();
    let denom = a.norm_sqr() - b.norm_sqr()
        + (b * d.conj() - c.conj() * a) * u.conj()
        + ((c.norm_sqr() - d.norm_sqr()) * u.conj() + b.conj() * d - a.conj() * c) * w;
    if denom.norm() < 1e-300 {
        return Err(SmirnovError::DenominatorVanishes);
    }
    Ok(det_abs / denom)
}

/// The weight ψ = ((τ')/(τ'∘φ))^{1/2} as a truncated series, computed by the
/// mandated route: square root of the formal quotient of the two τ' series.
pub fn weight_series(
    tau: &RiemannMap,
    phi_disc: &crate::mobius::MobiusMap,
    order: usize,
) -> Result<TruncatedSeries, SmirnovError> {
    let tau_prime = tau.prime_series(order);
    // τ'∘φ = det·(rz+s)² / ((cp+dr)z + (cq+ds))² for φ = (pz+q)/(rz+s):
    // a ratio of quadratics, well-defined because τ'∘φ(0) ≠ 0.
    let m = tau.map();
    let (p, q, r, s) = (phi_disc.a, phi_disc.b, phi_disc.c, phi_disc.d);
    let num_lin = TruncatedSeries::from_fn(order, |k| match k {
        0 => s,
        1 => r,
        _ => Complex64::ZERO,
    });
    let den_lin = TruncatedSeries::from_fn(order, |k| match k {
        0 => m.c * q + m.d * s,
        1 => m.c * p + m.d * r,
        _ => Complex64::ZERO,
    });
    let numerator = num_lin.mul(&num_lin).scale(m.det());
    let denominator = den_lin.mul(&den_lin);
    let tau_prime_comp = numerator
        .div(&denominator)
        .map_err(|_| SmirnovError::DenominatorVanishes)?;
    tau_prime
        .div(&tau_prime_comp)
        .map_err(|_| SmirnovError::DenominatorVanishes)?
        .sqrt()
        .map_err(|_| SmirnovError::DenominatorVanishes)
}

/// The decay scale of W_Φ columns. Affine symbols fix the point at infinity,
/// so the weight's apparent singularity at τ's pole cancels against the
/// numerator zero and the only remaining pole is the conjugated symbol's own:
/// ψ = σ·(cφ(z)+d)/(cz+d) collapses to a function with pole(φ) alone.
pub fn effective_pole_modulus(_tau: &RiemannMap, phi_disc: &crate::mobius::MobiusMap) -> f64 {
    phi_disc.pole_modulus()
}

/// Canonical-coordinates matrix of C_Φ on H²(Ω): `W_φ = W_{ψ,φ}` with
/// `φ = τ⁻¹∘Φ∘τ` and `ψ = (τ'/τ'∘φ)^{1/2}`.
///
/// Constant symbols produce the rank-one operator of the constant-symbol
/// evaluation formula: column n is `τ⁻¹(w0)ⁿ` times the coefficients of
/// `(τ'(z)/τ'(α))^{1/2}`.
pub fn w_phi_matrix(
    tau: &RiemannMap,
    phi: &AffineSymbol,
    order: usize,
) -> Result<OperatorMatrix, SmirnovError> {
    if phi.is_constant() {
        let alpha = tau.inverse_point(phi.offset());
        if !(alpha.norm() < 1.0 - 1e-12) {
            return Err(SmirnovError::SymbolNotSelfMap);
        }
        let scaled_prime = tau
            .prime_series(order - 1)
            .scale(1.0 / tau.prime(alpha));
        let psi = scaled_prime
            .sqrt()
            .map_err(|_| SmirnovError::DenominatorVanishes)?;
        let mut out = OperatorMatrix::zeros(order, order / 2, "w-phi-constant");
        let mut power = Complex64::ONE;
        for n in 0..order {
            for m in 0..order {
                out.set(m, n, psi.coeff(m) * power);
            }
            power *= alpha;
        }
        return Ok(out);
    }
    let phi_disc = symbol_conjugate_to_disc(tau, phi)?;
    if phi_disc.disc_selfmap().verdict == SelfMapVerdict::No {
        return Err(SmirnovError::SymbolNotSelfMap);
    }
    let psi = weight_series(tau, &phi_disc, order - 1)?;
    let trusted = trusted_block_for_pole(effective_pole_modulus(tau, &phi_disc), order);
    Ok(weighted_composition_matrix(&psi, &phi_disc, order)?
        .with_trusted_block(trusted)
        .with_tag("w-phi"))
}

/// Order at which products of W_Φ truncations stay certified on the
/// order-level trusted block.
pub fn w_phi_guard_order(
    tau: &RiemannMap,
    phi: &AffineSymbol,
    order: usize,
) -> Result<usize, SmirnovError> {
    if phi.is_constant() {
        return Ok(crate::hardy::guard_order(tau.map().pole_modulus(), order));
    }
    let phi_disc = symbol_conjugate_to_disc(tau, phi)?;
    Ok(crate::hardy::guard_order(
        effective_pole_modulus(tau, &phi_disc),
        order,
    ))
}

/// The numerator and denominator series of `k1·m(z) + k2` for a Möbius map:
/// `(k1·(az+b) + k2·(cz+d)) / (cz+d)` as two degree-1 truncations.
fn linear_of_mobius(
    k1: Complex64,
    k2: Complex64,
    m: &crate::mobius::MobiusMap,
    order: usize,
) -> (TruncatedSeries, TruncatedSeries) {
    let num = TruncatedSeries::from_fn(order, |k| match k {
        0 => k1 * m.b + k2 * m.d,
        1 => k1 * m.a + k2 * m.c,
        _ => Complex64::ZERO,
    });
    let den = TruncatedSeries::from_fn(order, |k| match k {
        0 => m.d,
        1 => m.c,
        _ => Complex64::ZERO,
    });
    (num, den)
}

/// Weighted-composition data of the linear operator `W_Ψ · conj(W_{Ψ⁻¹})`
/// (the conjugation J_{Ω,Ψ} pre-composed with coefficient conjugation).
///
/// Products of weighted composition operators are weighted compositions, so
/// the transported conjugation is assembled as a *single* truncation
/// `M_{ψ_L}·C_{φ_L}` with exactly representable entries instead of a product
/// of truncations:
/// `φ_L = φ♯_{Ψ⁻¹} ∘ φ_Ψ` and `ψ_L = ψ_Ψ · (ψ♯_{Ψ⁻¹} ∘ φ_Ψ)`,
/// where ♯ conjugates coefficients and `ψ♯∘φ` is expanded through the closed
/// rational form `conj(σ)·(c̄·φ_L + d̄)/(c̄·φ_Ψ + d̄)`.
pub fn transported_conjugation_symbol(
    tau: &RiemannMap,
    psi: &AffineSymbol,
    order: usize,
) -> Result<(TruncatedSeries, crate::mobius::MobiusMap), SmirnovError> {
    let m = tau.map();
    let phi_a = symbol_conjugate_to_disc(tau, psi)?;
    let psi_inv = psi.inverse().map_err(SmirnovError::Mobius)?;
    let phi_b = symbol_conjugate_to_disc(tau, &psi_inv)?;
    let phi_b_sharp = crate::mobius::MobiusMap::new(
        phi_b.a.conj(),
        phi_b.b.conj(),
        phi_b.c.conj(),
        phi_b.d.conj(),
    )
    .map_err(SmirnovError::Mobius)?;
    let phi_l = phi_b_sharp.compose(&phi_a).map_err(SmirnovError::Mobius)?;

    let psi_a = weight_series(tau, &phi_a, order)?;
    let psi_b = weight_series(tau, &phi_b, order)?;
    // sign of ψ_b against its closed form σ·(c·φ_b + d)/(cz + d) at z = 0
    let closed0 = (m.c * phi_b.apply(Complex64::ZERO) + m.d) / m.d;
    let sigma_b = psi_b.coeff(0) / closed0;
    debug_assert!(
        (sigma_b.norm() - 1.0).abs() < 1e-8,
        "weight sign must be unimodular, got {sigma_b}"
    );

    let (num_n, num_d) = linear_of_mobius(m.c.conj(), m.d.conj(), &phi_l, order);
    let (den_n, den_d) = linear_of_mobius(m.c.conj(), m.d.conj(), &phi_a, order);
    let composed = num_n
        .mul(&den_d)
        .div(&num_d.mul(&den_n))
        .map_err(|_| SmirnovError::DenominatorVanishes)?
        .scale(sigma_b.conj());
    Ok((psi_a.mul(&composed), phi_l))
}

/// |⟨f, k_u⟩ - f(u)| — the reproducing defect of a canonical-coordinates
/// function at u.
pub fn reproducing_residual(
    tau: &RiemannMap,
    u: Complex64,
    f: &SmirnovFunction,
) -> Result<f64, SmirnovError> {
    let kernel = kernel_vector_omega(tau, u, f.vcoeffs.order())?;
    let lhs = hardy::inner_product(&f.vcoeffs, &kernel.vcoeffs);
    let rhs = v_inverse_eval(f, u)?;
    Ok((lhs - rhs).norm())
}

/// Block-norm defect of the kernel adjoint action `C_Φ* k_u = k_{Φ(u)}`.
pub fn adjoint_kernel_action_residual(
    tau: &RiemannMap,
    phi: &AffineSymbol,
    u: Complex64,
    order: usize,
) -> Result<f64, SmirnovError> {
    let w = w_phi_matrix(tau, phi, order)?;
    let k_u = kernel_vector_omega(tau, u, order - 1)?;
    let image = phi.apply(u);
    let k_img = kernel_vector_omega(tau, image, order - 1)?;
    let got = w.adjoint().apply(k_u.vcoeffs.coeffs());
    let b = w.trusted_block();
    let mut residual = 0.0f64;
    for m in 0..b {
        residual = residual.max((got[m] - k_img.vcoeffs.coeff(m)).norm());
    }
    Ok(residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardy::{probe_operator, OperatorProperty};
    use crate::mobius::MobiusMap;
    use rand::{RngExt, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn v_forward_of_one_on_tau1() {
        // V(1) = (τ₁')^{1/2} = √2/(1-z): all coefficients √2
        let tau1 = RiemannMap::tau1();
        let g = v_forward(&tau1, |_| Complex64::ONE, 24, 2048, 0.75);
        let rt2 = 2.0f64.sqrt();
        for k in 0..=24 {
            assert!(
                (g.vcoeffs.coeff(k) - c(rt2, 0.0)).norm() < 1e-10,
                "coefficient {k}: {}",
                g.vcoeffs.coeff(k)
            );
        }
    }

    #[test]
    fn v_forward_of_one_on_identity() {
        let id = RiemannMap::identity();
        let g = v_forward(&id, |_| Complex64::ONE, 16, 1024, 0.75);
        assert!((g.vcoeffs.coeff(0) - Complex64::ONE).norm() < 1e-12);
        for k in 1..=16 {
            assert!(g.vcoeffs.coeff(k).norm() < 1e-12);
        }
    }

    #[test]
    fn v_forward_of_half_plane_kernel_is_constant_vector() {
        // f(w) = 1/(conj(1) + w) on ℂ₊ maps to the constant vector 1/√2 · e₀
        let tau1 = RiemannMap::tau1();
        let g = v_forward(&tau1, |w| 1.0 / (Complex64::ONE + w), 24, 2048, 0.75);
        let expected = 1.0 / 2.0f64.sqrt();
        assert!((g.vcoeffs.coeff(0) - c(expected, 0.0)).norm() < 1e-10);
        for k in 1..=24 {
            assert!(g.vcoeffs.coeff(k).norm() < 1e-10);
        }
        // cross-check against the kernel vector at u = 1
        let kernel = kernel_vector_omega(&tau1, Complex64::ONE, 24).unwrap();
        assert!(g.vcoeffs.max_coeff_distance(&kernel.vcoeffs) < 1e-10);
    }

    #[test]
    fn v_round_trip() {
        let tau1 = RiemannMap::tau1();
        let g = v_forward(&tau1, |_| Complex64::ONE, 32, 2048, 0.75);
        for w in [c(1.0, 0.0), c(2.0, 0.5), c(0.5, -0.3)] {
            let val = v_inverse_eval(&g, w).unwrap();
            assert!((val - Complex64::ONE).norm() < 1e-10);
        }
    }

    #[test]
    fn v_inverse_eval_on_identity_is_series_eval() {
        let id = RiemannMap::identity();
        let f = SmirnovFunction {
            tau: id,
            vcoeffs: TruncatedSeries::from_fn(8, |k| c(1.0 / (k as f64 + 1.0), 0.0)),
        };
        let z = c(0.3, 0.2);
        assert!((v_inverse_eval(&f, z).unwrap() - f.vcoeffs.eval(z)).norm() < 1e-14);
    }

    #[test]
    fn v_inverse_eval_rejects_near_boundary_points() {
        let tau1 = RiemannMap::tau1();
        let g = v_forward(&tau1, |_| Complex64::ONE, 8, 512, 0.75);
        // τ₁(0.95) is deep in ℂ₊ but its preimage has modulus 0.95 > 0.9
        let w = tau1.apply(c(0.95, 0.0));
        assert!(matches!(
            v_inverse_eval(&g, w),
            Err(SmirnovError::EvaluationPointTooNearBoundary(_))
        ));
    }

    #[test]
    fn closed_form_kernels_on_reference_domains() {
        // identity: k_u(w) = 1/(1 - conj(u) w)
        let id = RiemannMap::identity();
        let (u, w) = (c(0.3, 0.1), c(-0.2, 0.4));
        let got = kernel_k_omega(&id, u, w).unwrap();
        let expected = 1.0 / (Complex64::ONE - u.conj() * w);
        assert!((got - expected).norm() < 1e-14);

        // τ₁: k_u(w) = 1/(conj(u) + w); at u = w = 1 the value is 1/2
        let tau1 = RiemannMap::tau1();
        let got = kernel_k_omega(&tau1, Complex64::ONE, Complex64::ONE).unwrap();
        assert!((got - c(0.5, 0.0)).norm() < 1e-14);
        let (u, w) = (c(2.0, 0.3), c(1.5, -0.4));
        let got = kernel_k_omega(&tau1, u, w).unwrap();
        let expected = 1.0 / (u.conj() + w);
        assert!((got - expected).norm() < 1e-14);

        // τ₂ at u = w = i: both routes must agree; the closed form gives 1/2
        let tau2 = RiemannMap::tau2();
        let got = kernel_k_omega(&tau2, Complex64::I, Complex64::I).unwrap();
        assert!((got - c(0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn kernel_two_route_consistency() {
        // closed form vs. V-route: conj(S(α_u))⁻¹ S(α_w)⁻¹ K_{α_u}(α_w),
        // evaluated through the truncated kernel vector.
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let order = 96;
        let domains = [
            RiemannMap::identity(),
            RiemannMap::tau1(),
            RiemannMap::tau2(),
            RiemannMap::from_coefficients(c(1.0, 0.0), c(3.0, 0.0), c(0.5, 0.0), c(2.0, 0.0))
                .unwrap(),
            RiemannMap::from_coefficients(c(0.3, 0.2), c(1.0, -0.4), c(0.25, 0.1), c(1.0, 0.0))
                .unwrap(),
        ];
        let mut checked = 0;
        for tau in &domains {
            let mut accepted = 0;
            while accepted < 20 {
                let zu = c(rng.random_range(-0.6..0.6), rng.random_range(-0.6..0.6));
                let zw = c(rng.random_range(-0.6..0.6), rng.random_range(-0.6..0.6));
                if zu.norm() >= 0.6 || zw.norm() >= 0.6 {
                    continue;
                }
                accepted += 1;
                let (u, w) = (tau.apply(zu), tau.apply(zw));
                let closed = kernel_k_omega(tau, u, w).unwrap();
                let kernel = kernel_vector_omega(tau, u, order).unwrap();
                let via_v = v_inverse_eval(
                    &SmirnovFunction {
                        tau: *tau,
                        vcoeffs: kernel.vcoeffs.clone(),
                    },
                    w,
                )
                .unwrap();
                assert!(
                    (closed - via_v).norm() <= 1e-9,
                    "two-route gap {:.3e} on {:?}",
                    (closed - via_v).norm(),
                    tau.map()
                );
                checked += 1;
            }
        }
        assert!(checked >= 80);
    }

    #[test]
    fn w_phi_of_identity_symbol() {
        let tau1 = RiemannMap::tau1();
        let w = w_phi_matrix(&tau1, &AffineSymbol::identity(), 16).unwrap();
        assert!(w.sub(&OperatorMatrix::identity(16)).block_max_norm(16) < 1e-12);
    }

    #[test]
    fn w_phi_of_half_plane_dilation_is_scaled_composition() {
        let tau1 = RiemannMap::tau1();
        let lambda = 0.5;
        let phi = AffineSymbol::new(c(1.0 / lambda, 0.0), c((1.0 - lambda) / lambda, 0.0))
            .unwrap();
        let n = 48;
        let w = w_phi_matrix(&tau1, &phi, n).unwrap();
        let disc_map = MobiusMap::affine(c(lambda, 0.0), c(1.0 - lambda, 0.0)).unwrap();
        let reference = crate::hardy::composition_matrix(&disc_map, n)
            .unwrap()
            .scale(c(lambda, 0.0));
        assert!(w.sub(&reference).block_max_norm(n) <= 1e-10);
    }

    #[test]
    fn constant_symbol_gives_rank_one() {
        let tau1 = RiemannMap::tau1();
        let phi = AffineSymbol::constant(Complex64::ONE);
        let w = w_phi_matrix(&tau1, &phi, 32).unwrap();
        let probe = probe_operator(&w, OperatorProperty::RankOne);
        assert!(probe.residual <= 1e-10 * probe.scale);
        // columns are proportional to the coefficients of (τ₁')^{1/2}/τ₁'(0)^{1/2}
        let expected_col0 = tau1.sqrt_prime_series(31).scale(1.0 / tau1.sqrt_prime(Complex64::ZERO));
        for m in 0..16 {
            assert!((w.get(m, 0) - expected_col0.coeff(m)).norm() < 1e-12);
        }
    }

    #[test]
    fn constant_symbol_outside_domain_is_rejected() {
        let tau1 = RiemannMap::tau1();
        let phi = AffineSymbol::constant(c(-1.0, 0.0)); // not in ℂ₊
        assert!(matches!(
            w_phi_matrix(&tau1, &phi, 16),
            Err(SmirnovError::SymbolNotSelfMap)
        ));
    }

    #[test]
    fn non_selfmap_symbol_is_rejected() {
        // w ↦ w - 5 pushes the right half-plane across the imaginary axis
        let tau1 = RiemannMap::tau1();
        let phi = AffineSymbol::new(Complex64::ONE, c(-5.0, 0.0)).unwrap();
        assert!(matches!(
            w_phi_matrix(&tau1, &phi, 16),
            Err(SmirnovError::SymbolNotSelfMap)
        ));
    }

    #[test]
    fn reproducing_residuals() {
        let tau1 = RiemannMap::tau1();
        let order = 64;
        let f = v_forward(&tau1, |_| Complex64::ONE, order, 4096, 0.75);
        for zu in [c(0.0, 0.0), c(0.3, 0.2), c(-0.4, 0.1)] {
            let u = tau1.apply(zu);
            let res = reproducing_residual(&tau1, u, &f).unwrap();
            assert!(res <= 1e-10, "residual {res:.3e}");
        }
    }

    #[test]
    fn kernel_of_kernel_symmetry() {
        // k_{u'}(u) = conj(k_u(u')) through the reproducing machinery
        let tau1 = RiemannMap::tau1();
        let order = 96;
        let u_prime = tau1.apply(c(0.25, 0.3));
        let kernel = kernel_vector_omega(&tau1, u_prime, order).unwrap();
        let f = SmirnovFunction {
            tau: tau1,
            vcoeffs: kernel.vcoeffs,
        };
        for zu in [c(0.1, 0.0), c(-0.2, 0.35), c(0.4, -0.2)] {
            let u = tau1.apply(zu);
            let res = reproducing_residual(&tau1, u, &f).unwrap();
            assert!(res <= 1e-9, "residual {res:.3e}");
            let lhs = v_inverse_eval(&f, u).unwrap();
            let rhs = kernel_k_omega(&tau1, u, u_prime).unwrap().conj();
            assert!((lhs - rhs).norm() <= 1e-9);
        }
    }

    #[test]
    fn reproducing_residual_for_random_polynomials() {
        let order = 96;
        let tau = RiemannMap::from_coefficients(c(1.0, 0.0), c(3.0, 0.0), c(0.5, 0.0), c(2.0, 0.0))
            .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let poly: Vec<Complex64> = (0..=8)
            .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let f = v_forward_poly(&tau, &poly, order).unwrap();
        for k in 0..5 {
            let u = tau.apply(c(0.15 * k as f64, -0.1 * k as f64));
            let res = reproducing_residual(&tau, u, &f).unwrap();
            assert!(res <= 1e-8, "residual {res:.3e}");
            // the reproduced value must be the polynomial value itself
            let direct: Complex64 = poly
                .iter()
                .rev()
                .fold(Complex64::ZERO, |acc, p| acc * u + p);
            assert!((v_inverse_eval(&f, u).unwrap() - direct).norm() <= 1e-8);
        }
    }

    #[test]
    fn adjoint_kernel_action_examples() {
        let tau1 = RiemannMap::tau1();
        let order = 64;
        assert!(
            adjoint_kernel_action_residual(&tau1, &AffineSymbol::identity(), c(2.0, 0.5), order)
                .unwrap()
                <= 1e-12
        );
        // Φ(w) = w + i is a vertical translation of ℂ₊
        let phi = AffineSymbol::new(Complex64::ONE, Complex64::I).unwrap();
        let res = adjoint_kernel_action_residual(&tau1, &phi, Complex64::ONE, order).unwrap();
        assert!(res <= 1e-8, "residual {res:.3e}");
        // bounded disc domain
        let tau = RiemannMap::from_coefficients(c(0.5, 0.0), c(1.0, 0.0), Complex64::ZERO, Complex64::ONE)
            .unwrap();
        let phi = AffineSymbol::new(c(0.5, 0.0), c(0.5, 0.0)).unwrap();
        let disc_map = symbol_conjugate_to_disc(&tau, &phi).unwrap();
        assert!(disc_map.disc_selfmap().admissible());
        let res = adjoint_kernel_action_residual(&tau, &phi, tau.apply(c(0.2, 0.1)), order)
            .unwrap();
        assert!(res <= 1e-8, "residual {res:.3e}");
    }

    #[test]
    fn isometry_against_boundary_integral() {
        // ‖f‖²_Ω equals the Γ_r mean-square integral as r → 1; bounded
        // domains with polynomial f keep the integrand smooth.
        let tau = RiemannMap::from_coefficients(c(1.0, 0.0), c(3.0, 0.0), c(0.5, 0.0), c(2.0, 0.0))
            .unwrap();
        let order = 64;
        let poly = [c(1.0, 0.0), c(0.5, -0.2), c(0.0, 0.3), c(-0.25, 0.0)];
        let f = v_forward_poly(&tau, &poly, order).unwrap();
        let r = 1.0 - 1e-9;
        let samples = 1 << 14;
        let mut integral = 0.0f64;
        for j in 0..samples {
            let z = Complex64::from_polar(r, TAU * j as f64 / samples as f64);
            let w = tau.apply(z);
            let fw: Complex64 = poly.iter().rev().fold(Complex64::ZERO, |acc, p| acc * w + p);
            integral += fw.norm_sqr() * tau.prime(z).norm() * r;
        }
        integral /= samples as f64;
        let norm_sq = f.norm_sqr();
        assert!(
            (integral - norm_sq).abs() <= 1e-6 * norm_sq.max(1.0),
            "quadrature {integral:.9} vs isometry {norm_sq:.9}"
        );
    }

    #[test]
    fn similarity_covariance_product_reversal() {
        // W(Φ₁)·W(Φ₂) is the truncation of C_{Φ₂∘Φ₁} in canonical coordinates
        let tau = RiemannMap::from_coefficients(c(1.0, 0.0), c(3.0, 0.0), c(0.5, 0.0), c(2.0, 0.0))
            .unwrap();
        let order = 64;
        // Ω is the disc around u₀ = 22/15; rotations-contractions about u₀
        // with a small extra offset stay inside it.
        let center = c(22.0 / 15.0, 0.0);
        let lam1 = c(0.6, 0.1);
        let phi1 = AffineSymbol::new(lam1, center * (Complex64::ONE - lam1) + c(0.02, 0.01))
            .unwrap();
        let lam2 = c(0.5, -0.2);
        let phi2 = AffineSymbol::new(lam2, center * (Complex64::ONE - lam2) + c(-0.01, 0.02))
            .unwrap();
        // both must be self-maps of the disc domain
        for phi in [&phi1, &phi2] {
            let m = symbol_conjugate_to_disc(&tau, phi).unwrap();
            assert!(m.disc_selfmap().admissible());
        }
        let w1 = w_phi_matrix(&tau, &phi1, order).unwrap();
        let w2 = w_phi_matrix(&tau, &phi2, order).unwrap();
        let composed = w_phi_matrix(&tau, &phi2.compose(&phi1), order).unwrap();
        let dist = w1.mul(&w2).trusted_distance(&composed);
        assert!(dist <= 1e-7, "covariance distance {dist:.3e}");
    }
}
