//! H²(𝕌) in the monomial orthonormal basis: inner products, reproducing
//! kernels, matrix truncations of multiplication / composition / weighted
//! composition operators, operator-property probes, and the independent
//! quadrature oracle.
//!
//! An operator `T` is truncated to the compression `entry[m][n] = ⟨T zⁿ, zᵐ⟩`
//! on `span{1, …, z^{N-1}}`. Identities are asserted on a *trusted block*:
//! the leading `B×B` sub-matrix inside which truncation tails are certified
//! below 1e-9.

use crate::mobius::{MobiusMap, MobiusError, SelfMapVerdict};
use crate::series::TruncatedSeries;
use num_complex::Complex64;
use std::f64::consts::TAU;
use thiserror::Error;

/// Tail bound certified inside a trusted block.
pub const TRUSTED_TAIL_BOUND: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum HardyError {
    #[error("kernel point must lie in the open unit disc (|alpha| = {0:.6})")]
    AlphaOutsideDisc(f64),
    #[error("symbol is not an analytic self-map of the unit disc")]
    NotSelfMap,
    #[error(transparent)]
    Mobius(#[from] MobiusError),
    #[error("oracle needs at least 8N samples (got {got}, need {need})")]
    SamplingTooCoarse { got: usize, need: usize },
    #[error("oracle radius must lie in (0, 1), got {0}")]
    BadRadius(f64),
}

/// Dense N×N complex truncation of an operator in the monomial basis.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    order: usize,
    entries: Vec<Complex64>,
    trusted_block: usize,
    tag: String,
}

impl OperatorMatrix {
    pub fn zeros(order: usize, trusted_block: usize, tag: impl Into<String>) -> Self {
        Self {
            order,
            entries: vec![Complex64::ZERO; order * order],
            trusted_block: trusted_block.min(order),
            tag: tag.into(),
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order, order / 2, "identity");
        for k in 0..order {
            m.set(k, k, Complex64::ONE);
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn trusted_block(&self) -> usize {
        self.trusted_block
    }

    pub fn with_trusted_block(mut self, b: usize) -> Self {
        self.trusted_block = b.min(self.order);
        self
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.order + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.order + col] = value;
    }

    /// Conjugate transpose; trusted block preserved.
    pub fn adjoint(&self) -> Self {
        let n = self.order;
        let mut out = Self::zeros(n, self.trusted_block, format!("adjoint({})", self.tag));
        for m in 0..n {
            for k in 0..n {
                out.set(k, m, self.get(m, k).conj());
            }
        }
        out
    }

    /// Entrywise conjugation (no transpose).
    pub fn conj_entries(&self) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.conj();
        }
        out
    }

    /// Matrix product; the trusted block is the smaller of the two.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "operator orders must match");
        let n = self.order;
        let mut out = Self::zeros(
            n,
            self.trusted_block.min(rhs.trusted_block),
            format!("({})*({})", self.tag, rhs.tag),
        );
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "operator orders must match");
        let mut out = self.clone();
        out.trusted_block = self.trusted_block.min(rhs.trusted_block);
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e *= s;
        }
        out
    }

    /// Applies the matrix to a coefficient vector (length N).
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.order);
        let mut out = vec![Complex64::ZERO; self.order];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = Complex64::ZERO;
            for (j, xv) in x.iter().enumerate() {
                acc += self.get(i, j) * xv;
            }
            *o = acc;
        }
        out
    }

    /// Largest entry modulus over the leading `b×b` block.
    pub fn block_max_norm(&self, b: usize) -> f64 {
        let b = b.min(self.order);
        let mut best = 0.0f64;
        for i in 0..b {
            for j in 0..b {
                best = best.max(self.get(i, j).norm());
            }
        }
        best
    }

    /// Max-norm of `self - rhs` over the common trusted block.
    pub fn trusted_distance(&self, rhs: &Self) -> f64 {
        let b = self.trusted_block.min(rhs.trusted_block);
        self.sub(rhs).block_max_norm(b)
    }

    /// The leading `b×b` block as a new matrix.
    pub fn leading_block(&self, b: usize) -> Self {
        let b = b.min(self.order);
        let mut out = Self::zeros(b, b, format!("block({})", self.tag));
        for i in 0..b {
            for j in 0..b {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }
}

/// Trusted-block size for a composition matrix whose symbol has the given
/// pole modulus: the smallest B with |pole|^-B < 1e-9, capped at N/2.
/// Polynomial symbols (pole at infinity) get the full N/2 cap.
pub fn trusted_block_for_pole(pole_modulus: f64, order: usize) -> usize {
    let cap = (order / 2).max(1);
    if !pole_modulus.is_finite() {
        return cap;
    }
    let rho = 1.0 / pole_modulus;
    if rho <= 0.0 {
        return cap;
    }
    if rho >= 1.0 {
        return 2.min(cap); // no decay at all; nothing beyond the corner is certified
    }
    let b0 = (TRUSTED_TAIL_BOUND.ln() / rho.ln()).ceil() as usize;
    b0.clamp(2, cap)
}

/// Truncation order at which *products* of truncations stay certified on the
/// order-level trusted block: a product tail contributes like ρ^(G - B), so
/// extending by B₀ (where ρ^B₀ < 1e-9) buys the bound back. Maps without a
/// finite pole have exactly representable columns and need no guard.
pub fn guard_order(pole_modulus: f64, order: usize) -> usize {
    if !pole_modulus.is_finite() || pole_modulus <= 1.0 {
        return order;
    }
    let rho = 1.0 / pole_modulus;
    let b0 = (TRUSTED_TAIL_BOUND.ln() / rho.ln()).ceil() as usize;
    (order + b0).min(1024)
}

/// Largest leading column block whose truncation tails are certifiably
/// spent: column n qualifies when the coefficient mass in the last stretch
/// of rows is below 1e-10. Boundary-tangent symbols spread column mass far
/// beyond the pole-decay estimate, so products involving them certify their
/// blocks from the data instead of the pole.
pub fn certified_column_block(m: &OperatorMatrix, cap: usize) -> usize {
    let g = m.order();
    let start = g.saturating_sub((g / 8).max(4));
    let mut certified = 0;
    for n in 0..cap.min(g) {
        let tail: f64 = (start..g).map(|k| m.get(k, n).norm_sqr()).sum();
        if tail.sqrt() > 1e-10 {
            break;
        }
        certified = n + 1;
    }
    certified.max(2)
}

/// Coefficient inner product Σ f̂(n)·conj(ĝ(n)) of H²(𝕌).
pub fn inner_product(f: &TruncatedSeries, g: &TruncatedSeries) -> Complex64 {
    assert_eq!(f.order(), g.order(), "inner product needs equal orders");
    f.coeffs()
        .iter()
        .zip(g.coeffs())
        .map(|(a, b)| a * b.conj())
        .sum()
}

/// Reproducing kernel K_α of H²(𝕌): coefficients conj(α)^k.
#[derive(Debug, Clone)]
pub struct KernelVectorU {
    pub alpha: Complex64,
    pub coeffs: TruncatedSeries,
}

pub fn kernel_k(alpha: Complex64, order: usize) -> Result<KernelVectorU, HardyError> {
    if alpha.norm() >= 1.0 {
        return Err(HardyError::AlphaOutsideDisc(alpha.norm()));
    }
    let ac = alpha.conj();
    let mut power = Complex64::ONE;
    let coeffs = TruncatedSeries::from_fn(order, |k| {
        if k == 0 {
            Complex64::ONE
        } else {
            power *= ac;
            power
        }
    });
    Ok(KernelVectorU { alpha, coeffs })
}

/// Matrix truncation of the composition operator C_φ: column n holds the
/// coefficients of φⁿ.
pub fn composition_matrix(phi: &MobiusMap, order: usize) -> Result<OperatorMatrix, HardyError> {
    if phi.disc_selfmap().verdict == SelfMapVerdict::No {
        return Err(HardyError::NotSelfMap);
    }
    let taylor = phi.taylor(order - 1)?;
    let trusted = trusted_block_for_pole(phi.pole_modulus(), order);
    let mut out = OperatorMatrix::zeros(order, trusted, "composition");
    out.set(0, 0, Complex64::ONE);
    let mut power = TruncatedSeries::one(order - 1);
    for n in 1..order {
        power = power.mul(&taylor);
        for m in 0..order {
            out.set(m, n, power.coeff(m));
        }
    }
    Ok(out)
}

/// Lower-triangular Toeplitz truncation of multiplication by ψ.
pub fn multiplication_matrix(psi: &TruncatedSeries, order: usize) -> OperatorMatrix {
    let mut out = OperatorMatrix::zeros(order, order / 2, "multiplication");
    for m in 0..order {
        for n in 0..=m {
            out.set(m, n, psi.coeff(m - n));
        }
    }
    out
}

/// W_{ψ,φ} truncation: multiplication by ψ composed with C_φ.
pub fn weighted_composition_matrix(
    psi: &TruncatedSeries,
    phi: &MobiusMap,
    order: usize,
) -> Result<OperatorMatrix, HardyError> {
    let comp = composition_matrix(phi, order)?;
    let trusted = comp.trusted_block();
    Ok(multiplication_matrix(psi, order)
        .mul(&comp)
        .with_trusted_block(trusted)
        .with_tag("weighted-composition"))
}

/// Operator properties probed at matrix level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorProperty {
    Hermitian,
    Unitary,
    Normal,
    RankOne,
}

/// Residual report for one probed property; residuals are reported, never
/// converted into hard verdicts here (classification owns tolerances).
#[derive(Debug, Clone)]
pub struct ProbeReport {
    pub property: OperatorProperty,
    /// Property residual on the trusted block. For `RankOne` this is the
    /// second singular value of the block.
    pub residual: f64,
    /// Scale reference: max entry modulus for the algebraic probes, leading
    /// singular value for `RankOne`.
    pub scale: f64,
    pub trusted_block: usize,
}

pub fn probe_operator(m: &OperatorMatrix, property: OperatorProperty) -> ProbeReport {
    let b = m.trusted_block();
    let scale = m.block_max_norm(b).max(1e-300);
    match property {
        OperatorProperty::Hermitian => {
            let mut residual = 0.0f64;
            for i in 0..b {
                for j in 0..b {
                    residual = residual.max((m.get(i, j) - m.get(j, i).conj()).norm());
                }
            }
            ProbeReport {
                property,
                residual,
                scale,
                trusted_block: b,
            }
        }
        OperatorProperty::Unitary => {
            let id = OperatorMatrix::identity(m.order());
            let left = m.adjoint().mul(m).sub(&id).block_max_norm(b);
            let right = m.mul(&m.adjoint()).sub(&id).block_max_norm(b);
            ProbeReport {
                property,
                residual: left.max(right),
                scale,
                trusted_block: b,
            }
        }
        OperatorProperty::Normal => {
            let comm = m.mul(&m.adjoint()).sub(&m.adjoint().mul(m));
            ProbeReport {
                property,
                residual: comm.block_max_norm(b),
                scale,
                trusted_block: b,
            }
        }
        OperatorProperty::RankOne => {
            let (s1, s2) = top_two_singular_values(&m.leading_block(b));
            ProbeReport {
                property,
                residual: s2,
                scale: s1,
                trusted_block: b,
            }
        }
    }
}

/// Top two singular values by alternating power iteration with explicit
/// rank-one deflation. The value is read off linearly as ‖Mv‖ (never through
/// the squared Gram spectrum, whose √ε floor would drown the rank-one
/// certificates at 1e-8).
pub fn top_two_singular_values(m: &OperatorMatrix) -> (f64, f64) {
    let n = m.order();
    if n == 0 {
        return (0.0, 0.0);
    }
    if n == 1 {
        return (m.get(0, 0).norm(), 0.0);
    }
    let apply_adjoint = |mat: &OperatorMatrix, y: &[Complex64]| -> Vec<Complex64> {
        let mut out = vec![Complex64::ZERO; n];
        for (j, o) in out.iter_mut().enumerate() {
            let mut acc = Complex64::ZERO;
            for (i, v) in y.iter().enumerate() {
                acc += mat.get(i, j).conj() * v;
            }
            *o = acc;
        }
        out
    };
    let norm = |x: &[Complex64]| -> f64 { x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt() };
    // dominant singular triple of one matrix
    let top_triple = |mat: &OperatorMatrix| -> (f64, Vec<Complex64>, Vec<Complex64>) {
        let mut v: Vec<Complex64> = (0..n)
            .map(|k| Complex64::new(1.0 + (k as f64 * 0.37).sin(), (k as f64 * 0.73).cos()))
            .collect();
        let nv = norm(&v);
        for e in &mut v {
            *e /= nv;
        }
        let mut u = vec![Complex64::ZERO; n];
        for _ in 0..300 {
            let mv = mat.apply(&v);
            let sigma = norm(&mv);
            if sigma < 1e-300 {
                return (0.0, u, v);
            }
            u = mv.iter().map(|e| e / sigma).collect();
            let mu = apply_adjoint(mat, &u);
            let nmu = norm(&mu);
            if nmu < 1e-300 {
                return (sigma, u, v);
            }
            v = mu.iter().map(|e| e / nmu).collect();
        }
        let mv = mat.apply(&v);
        let sigma = norm(&mv);
        if sigma > 1e-300 {
            u = mv.iter().map(|e| e / sigma).collect();
        }
        (sigma, u, v)
    };
    let (s1, u1, v1) = top_triple(m);
    if s1 == 0.0 {
        return (0.0, 0.0);
    }
    // deflate and find the runner-up
    let mut deflated = m.clone();
    for i in 0..n {
        for j in 0..n {
            let correction = s1 * u1[i] * v1[j].conj();
            deflated.set(i, j, deflated.get(i, j) - correction);
        }
    }
    let (s2, _, _) = top_triple(&deflated);
    if s1 >= s2 {
        (s1, s2)
    } else {
        (s2, s1)
    }
}

/// Contour-integral coefficient extraction of `⟨ψ·φⁿ, zᵐ⟩` by discrete
/// Fourier transform on the circle of radius ρ:
///
/// `entry[m][n] = ρ^-m · (1/S) · Σ_j ψ(ρe^{iθ_j}) φ(ρe^{iθ_j})ⁿ e^{-imθ_j}`.
///
/// Algorithmically independent of the series pipeline.
pub fn quadrature_matrix_oracle(
    psi: impl Fn(Complex64) -> Complex64,
    phi: impl Fn(Complex64) -> Complex64,
    order: usize,
    samples: usize,
    radius: f64,
) -> Result<OperatorMatrix, HardyError> {
    if samples < 8 * order {
        return Err(HardyError::SamplingTooCoarse {
            got: samples,
            need: 8 * order,
        });
    }
    if !(0.0 < radius && radius < 1.0) {
        return Err(HardyError::BadRadius(radius));
    }
    let points: Vec<Complex64> = (0..samples)
        .map(|j| Complex64::from_polar(radius, TAU * j as f64 / samples as f64))
        .collect();
    let psi_vals: Vec<Complex64> = points.iter().map(|&z| psi(z)).collect();
    let phi_vals: Vec<Complex64> = points.iter().map(|&z| phi(z)).collect();
    let inv_radius_pow: Vec<f64> = (0..order)
        .map(|m| radius.powi(-(m as i32)))
        .collect();
    let mut out = OperatorMatrix::zeros(order, order / 2, "quadrature-oracle");
    let mut column: Vec<Complex64> = psi_vals.clone();
    for n in 0..order {
        if n > 0 {
            for (w, p) in column.iter_mut().zip(&phi_vals) {
                *w *= p;
            }
        }
        let coeffs = dft_forward(&column);
        for m in 0..order {
            out.set(m, n, coeffs[m] * inv_radius_pow[m] / samples as f64);
        }
    }
    Ok(out)
}

/// Forward DFT `X_k = Σ_j x_j e^{-2πi jk/S}`, radix-2 in place when the
/// length is a power of two, direct sums otherwise.
fn dft_forward(x: &[Complex64]) -> Vec<Complex64> {
    let s = x.len();
    if s.is_power_of_two() {
        let mut buf = x.to_vec();
        fft_radix2(&mut buf);
        buf
    } else {
        let mut out = vec![Complex64::ZERO; s];
        for (k, o) in out.iter_mut().enumerate() {
            let mut acc = Complex64::ZERO;
            let w = Complex64::from_polar(1.0, -TAU * k as f64 / s as f64);
            let mut tw = Complex64::ONE;
            for v in x {
                acc += v * tw;
                tw *= w;
            }
            *o = acc;
        }
        out
    }
}

fn fft_radix2(buf: &mut [Complex64]) {
    let n = buf.len();
    if n <= 1 {
        return;
    }
    // bit-reversal permutation
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let ang = -TAU / len as f64;
        let wl = Complex64::from_polar(1.0, ang);
        for chunk in buf.chunks_mut(len) {
            let mut w = Complex64::ONE;
            let half = len / 2;
            for k in 0..half {
                let u = chunk[k];
                let v = chunk[k + half] * w;
                chunk[k] = u + v;
                chunk[k + half] = u - v;
                w *= wl;
            }
        }
        len <<= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::RiemannMap;
    use rand::{RngExt, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn orthonormal_basis_inner_products() {
        let n = 8;
        let z1 = TruncatedSeries::monomial(n, 1, Complex64::ONE);
        let z2 = TruncatedSeries::monomial(n, 2, Complex64::ONE);
        assert_eq!(inner_product(&z1, &z1), Complex64::ONE);
        assert_eq!(inner_product(&z1, &z2), Complex64::ZERO);
    }

    #[test]
    fn reproducing_identity_hand_check() {
        // ⟨1/(1 - z/2), K_{1/2}⟩ = value at 1/2 = 4/3 within the geometric tail
        let n = 64;
        let f = TruncatedSeries::from_fn(n, |k| c(0.5f64.powi(k as i32), 0.0));
        let k_half = kernel_k(c(0.5, 0.0), n).unwrap();
        let got = inner_product(&f, &k_half.coeffs);
        assert!((got - c(4.0 / 3.0, 0.0)).norm() < 1e-15 + 0.25f64.powi(n as i32));
    }

    #[test]
    fn kernel_examples() {
        let k0 = kernel_k(Complex64::ZERO, 8).unwrap();
        assert_eq!(k0.coeffs.coeff(0), Complex64::ONE);
        for k in 1..=8 {
            assert_eq!(k0.coeffs.coeff(k), Complex64::ZERO);
        }
        let kh = kernel_k(c(0.5, 0.0), 8).unwrap();
        for k in 0..=8 {
            assert!((kh.coeffs.coeff(k) - c(0.5f64.powi(k as i32), 0.0)).norm() < 1e-15);
        }
        assert!(matches!(
            kernel_k(c(1.0, 0.0), 8),
            Err(HardyError::AlphaOutsideDisc(_))
        ));
    }

    #[test]
    fn kernel_reproduces_polynomials_on_grid() {
        let n = 32;
        let f = TruncatedSeries::from_fn(n, |k| {
            if k <= 5 {
                c(1.0 / (k as f64 + 1.0), 0.3 * k as f64)
            } else {
                Complex64::ZERO
            }
        });
        for i in -2..=2 {
            for j in -2..=2 {
                let alpha = c(0.3 * i as f64, 0.3 * j as f64) * 0.99;
                let k = kernel_k(alpha, n).unwrap();
                let lhs = inner_product(&f, &k.coeffs);
                let rhs = f.eval(alpha);
                assert!((lhs - rhs).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn kernel_affine_image_property() {
        // K_α(φ_α(z)) = (conj(α)/(|α|²-1))·z + 1/(1-|α|²) for the disc
        // automorphism φ_α(z) = (α - z)/(1 - conj(α) z)
        let alpha = c(0.3, 0.4);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let z = loop {
                let z = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                if z.norm() < 0.95 {
                    break z;
                }
            };
            let phi_alpha = (alpha - z) / (Complex64::ONE - alpha.conj() * z);
            let lhs = Complex64::ONE / (Complex64::ONE - alpha.conj() * phi_alpha);
            let rhs = alpha.conj() / (alpha.norm_sqr() - 1.0) * z
                + Complex64::ONE / (1.0 - alpha.norm_sqr());
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn composition_matrix_of_identity_and_scaling() {
        let id = composition_matrix(&MobiusMap::identity(), 8).unwrap();
        assert!(id.sub(&OperatorMatrix::identity(8)).block_max_norm(8) < 1e-15);

        let lambda = c(0.6, 0.2);
        let scaling = MobiusMap::affine(lambda, Complex64::ZERO).unwrap();
        let m = composition_matrix(&scaling, 8).unwrap();
        for n in 0..8 {
            for r in 0..8 {
                let expected = if r == n { lambda.powu(n as u32) } else { Complex64::ZERO };
                assert!((m.get(r, n) - expected).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn composition_matrix_rejects_non_selfmap() {
        let double = MobiusMap::affine(c(2.0, 0.0), Complex64::ZERO).unwrap();
        assert!(matches!(
            composition_matrix(&double, 8),
            Err(HardyError::NotSelfMap)
        ));
    }

    #[test]
    fn multiplication_matrix_examples() {
        let n = 6;
        let one = multiplication_matrix(&TruncatedSeries::one(n - 1), n);
        assert!(one.sub(&OperatorMatrix::identity(n)).block_max_norm(n) < 1e-15);

        let z = multiplication_matrix(&TruncatedSeries::monomial(n - 1, 1, Complex64::ONE), n);
        for m in 0..n {
            for k in 0..n {
                let expected = if m == k + 1 { Complex64::ONE } else { Complex64::ZERO };
                assert_eq!(z.get(m, k), expected);
            }
        }

        // ψ = √2/(1-z): all lower-triangular entries are √2
        let rt2 = 2.0f64.sqrt();
        let psi = TruncatedSeries::from_fn(n - 1, |_| c(rt2, 0.0));
        let toeplitz = multiplication_matrix(&psi, n);
        for m in 0..n {
            for k in 0..=m {
                assert!((toeplitz.get(m, k) - c(rt2, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn weighted_composition_with_collapsing_weight() {
        // ψ ≡ λ, φ(z) = λz + 1 - λ with λ = 0.5: W = λ·C_φ
        let n = 32;
        let lambda = 0.5;
        let phi = MobiusMap::affine(c(lambda, 0.0), c(1.0 - lambda, 0.0)).unwrap();
        let psi = TruncatedSeries::constant(n - 1, c(lambda, 0.0));
        let w = weighted_composition_matrix(&psi, &phi, n).unwrap();
        let scaled = composition_matrix(&phi, n).unwrap().scale(c(lambda, 0.0));
        assert!(w.sub(&scaled).block_max_norm(n) < 1e-12);
    }

    #[test]
    fn adjoint_examples() {
        let id = OperatorMatrix::identity(6);
        assert!(id.adjoint().sub(&id).block_max_norm(6) < 1e-15);

        let lambda = c(0.5, 0.5);
        let diag = composition_matrix(
            &MobiusMap::affine(lambda, Complex64::ZERO).unwrap(),
            6,
        )
        .unwrap();
        let adj = diag.adjoint();
        for k in 0..6 {
            assert!((adj.get(k, k) - lambda.powu(k as u32).conj()).norm() < 1e-14);
        }
    }

    #[test]
    fn adjoint_action_on_kernels() {
        // W*_{ψ,φ} K_α = conj(ψ(α)) K_{φ(α)} on the trusted block
        let n = 64;
        let phi = MobiusMap::affine(c(0.5, 0.0), Complex64::ZERO).unwrap();
        let psi = TruncatedSeries::from_fn(n - 1, |k| {
            if k <= 4 {
                c(1.0 / (k as f64 + 1.0), 0.1 * k as f64)
            } else {
                Complex64::ZERO
            }
        });
        let w = weighted_composition_matrix(&psi, &phi, n).unwrap();
        let alpha = c(0.3, 0.0);
        let k_alpha = kernel_k(alpha, n - 1).unwrap();
        let got = w.adjoint().apply(k_alpha.coeffs.coeffs());
        let expected_scale = psi.eval(alpha).conj();
        let k_img = kernel_k(phi.apply(alpha), n - 1).unwrap();
        let b = w.trusted_block();
        for m in 0..b {
            let expected = expected_scale * k_img.coeffs.coeff(m);
            assert!(
                (got[m] - expected).norm() <= 1e-8,
                "row {m}: {} vs {}",
                got[m],
                expected
            );
        }
    }

    #[test]
    fn probe_identity_and_diagonal() {
        let id = OperatorMatrix::identity(16);
        assert!(probe_operator(&id, OperatorProperty::Hermitian).residual < 1e-15);
        assert!(probe_operator(&id, OperatorProperty::Unitary).residual < 1e-15);
        assert!(probe_operator(&id, OperatorProperty::Normal).residual < 1e-15);
        let rank_one = probe_operator(&id, OperatorProperty::RankOne);
        assert!(rank_one.residual > 0.9); // identity is far from rank one

        let diag = composition_matrix(
            &MobiusMap::affine(c(0.7, 0.0), Complex64::ZERO).unwrap(),
            16,
        )
        .unwrap();
        assert!(probe_operator(&diag, OperatorProperty::Hermitian).residual < 1e-15);
        assert!(probe_operator(&diag, OperatorProperty::Unitary).residual > 0.5);
    }

    #[test]
    fn rotation_composition_is_unitary() {
        let rot = MobiusMap::affine(c(0.0, 1.0), Complex64::ZERO).unwrap();
        let m = composition_matrix(&rot, 32).unwrap();
        assert!(probe_operator(&m, OperatorProperty::Unitary).residual <= 1e-12);
    }

    #[test]
    fn singular_values_of_known_matrix() {
        // diag(3, 2, 1e-12): subspace iteration should recover 3 and 2
        let mut m = OperatorMatrix::zeros(3, 3, "diag");
        m.set(0, 0, c(3.0, 0.0));
        m.set(1, 1, c(0.0, 2.0));
        m.set(2, 2, c(1e-12, 0.0));
        let (s1, s2) = top_two_singular_values(&m);
        assert!((s1 - 3.0).abs() < 1e-10);
        assert!((s2 - 2.0).abs() < 1e-10);
    }

    #[test]
    fn rank_one_probe_on_outer_product() {
        let n = 24;
        let mut m = OperatorMatrix::zeros(n, n / 2, "rank-one");
        for i in 0..n {
            for j in 0..n {
                let u = c(1.0 / (i as f64 + 1.0), 0.2 * i as f64);
                let v = c(0.8f64.powi(j as i32), -0.1 * j as f64);
                m.set(i, j, u * v);
            }
        }
        let probe = probe_operator(&m, OperatorProperty::RankOne);
        assert!(probe.residual <= 1e-10 * probe.scale);
    }

    #[test]
    fn oracle_identity_and_scaling() {
        let id = quadrature_matrix_oracle(|_| Complex64::ONE, |z| z, 16, 256, 0.5).unwrap();
        assert!(id.sub(&OperatorMatrix::identity(16)).block_max_norm(16) < 1e-12);

        let lambda = c(0.3, 0.4);
        let diag =
            quadrature_matrix_oracle(|_| Complex64::ONE, |z| lambda * z, 16, 256, 0.5).unwrap();
        for n in 0..16 {
            for m in 0..16 {
                let expected = if m == n { lambda.powu(n as u32) } else { Complex64::ZERO };
                assert!((diag.get(m, n) - expected).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn oracle_rejects_bad_inputs() {
        assert!(matches!(
            quadrature_matrix_oracle(|_| Complex64::ONE, |z| z, 16, 100, 0.5),
            Err(HardyError::SamplingTooCoarse { .. })
        ));
        assert!(matches!(
            quadrature_matrix_oracle(|_| Complex64::ONE, |z| z, 16, 256, 1.5),
            Err(HardyError::BadRadius(_))
        ));
    }

    #[test]
    fn oracle_weight_collapses_for_tangent_translation() {
        // ψ = (τ₁'/τ₁'∘φ)^{1/2} with φ(z) = 0.5z + 0.5 equals the constant 0.5
        let n = 32;
        let tau1 = RiemannMap::tau1();
        let phi = MobiusMap::affine(c(0.5, 0.0), c(0.5, 0.0)).unwrap();
        let psi = move |z: Complex64| {
            let ratio = tau1.prime(z) / tau1.prime(phi.apply(z));
            crate::series::principal_sqrt(ratio)
        };
        let oracle = quadrature_matrix_oracle(psi, |z| phi.apply(z), n, 16 * n, 0.75).unwrap();
        let reference = composition_matrix(&phi, n).unwrap().scale(c(0.5, 0.0));
        let b = reference.trusted_block().min(oracle.trusted_block());
        assert!(oracle.sub(&reference).block_max_norm(b) <= 1e-9);
    }

    #[test]
    fn oracle_matches_series_route_on_z_over_two_minus_z() {
        let n = 16;
        let phi = MobiusMap::new(c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0), c(2.0, 0.0)).unwrap();
        let series_route = composition_matrix(&phi, n).unwrap();
        let oracle =
            quadrature_matrix_oracle(|_| Complex64::ONE, |z| phi.apply(z), n, 16 * n, 0.75)
                .unwrap();
        let b = series_route.trusted_block();
        assert!(series_route.sub(&oracle).block_max_norm(b) <= 1e-9);
    }

    #[test]
    fn oracle_matches_weighted_composition_with_random_weight() {
        let n = 32;
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let coeffs: Vec<Complex64> = (0..5)
            .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let psi = TruncatedSeries::from_fn(n - 1, |k| {
            coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
        });
        let phi = MobiusMap::affine(c(0.5, 0.0), Complex64::ZERO).unwrap();
        let w = weighted_composition_matrix(&psi, &phi, n).unwrap();
        let psi_eval = psi.clone();
        let oracle = quadrature_matrix_oracle(
            move |z| psi_eval.eval(z),
            |z| phi.apply(z),
            n,
            16 * n,
            0.75,
        )
        .unwrap();
        assert!(w.trusted_distance(&oracle) <= 1e-9);
    }

    #[test]
    fn composition_multiplicativity_reversed() {
        // C_{φ1}·C_{φ2} is the truncation of composition by φ2 ∘ φ1
        let n = 64;
        let phi1 = MobiusMap::affine(c(0.4, 0.1), c(0.1, 0.0)).unwrap();
        let phi2 = MobiusMap::new(c(0.5, 0.0), c(0.1, 0.1), c(0.1, 0.0), c(1.0, 0.0)).unwrap();
        assert!(phi1.disc_selfmap().admissible());
        assert!(phi2.disc_selfmap().admissible());
        let m1 = composition_matrix(&phi1, n).unwrap();
        let m2 = composition_matrix(&phi2, n).unwrap();
        let product = m1.mul(&m2);
        let composed = composition_matrix(&phi2.compose(&phi1).unwrap(), n).unwrap();
        assert!(
            product.trusted_distance(&composed) <= 1e-8,
            "distance {:.3e}",
            product.trusted_distance(&composed)
        );
    }
}
