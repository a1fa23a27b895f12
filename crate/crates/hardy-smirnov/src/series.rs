//! Truncated complex Maclaurin series arithmetic.
//!
//! Every function in the workbench is represented by its first `N + 1`
//! Maclaurin coefficients. Arithmetic is plain O(N²) Cauchy products;
//! truncation order is fixed per workspace run (default 64) and binary
//! operations reject mixed orders instead of promoting.

use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by series construction and arithmetic.
#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("series coefficients must be finite (found NaN or infinity at index {0})")]
    NonFiniteCoefficient(usize),
    #[error("series must have at least one coefficient")]
    Empty,
    #[error("division by series with near-zero constant term (|t0| = {0:.3e})")]
    DivisionByZeroConstantTerm(f64),
    #[error("square root of series with near-zero constant term (|s0| = {0:.3e})")]
    ZeroConstantTerm(f64),
}

/// A degree-`N` truncated Maclaurin series: `coeffs[k]` is the k-th coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

/// Constant-term threshold for division and square roots, scaled by the
/// series' own magnitude so the check is unit-free.
fn constant_term_threshold(coeffs: &[Complex64]) -> f64 {
    let sup = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    1e-13 * sup.max(1.0)
}

impl TruncatedSeries {
    /// Builds a series from its coefficient vector (`len == order + 1`).
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        for (k, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(SeriesError::NonFiniteCoefficient(k));
            }
        }
        Ok(Self { coeffs })
    }

    /// The zero series of the given truncation order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex64::ZERO; order + 1],
        }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        Self::constant(order, Complex64::ONE)
    }

    /// A constant series.
    pub fn constant(order: usize, c: Complex64) -> Self {
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// The monomial `c·z^k` (zero if `k > order`).
    pub fn monomial(order: usize, k: usize, c: Complex64) -> Self {
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Self { coeffs }
    }

    /// Builds coefficients from a closure over the index.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Truncation degree N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient `k`, zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn assert_same_order(&self, rhs: &Self) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "mixed truncation orders are rejected ({} vs {})",
            self.order(),
            rhs.order()
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        let n = self.order();
        let mut coeffs = vec![Complex64::ZERO; n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Formal division `self / rhs`, requiring a nonzero constant term in `rhs`.
    ///
    /// Uses the standard recurrence `c[n] = (a[n] - Σ_{k=1..n} b[k]·c[n-k]) / b[0]`,
    /// so `div(s, t)·t == s` up to the truncation order within rounding.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.assert_same_order(rhs);
        let b0 = rhs.coeffs[0];
        if b0.norm() < constant_term_threshold(&rhs.coeffs) {
            return Err(SeriesError::DivisionByZeroConstantTerm(b0.norm()));
        }
        let n = self.order();
        let mut coeffs = vec![Complex64::ZERO; n + 1];
        for m in 0..=n {
            let mut acc = self.coeffs[m];
            for k in 1..=m {
                acc -= rhs.coeffs[k] * coeffs[m - k];
            }
            coeffs[m] = acc / b0;
        }
        Ok(Self { coeffs })
    }

    /// Formal square root with the principal branch at the constant term.
    ///
    /// The constant term's root is the principal square root; when the
    /// constant term is a negative real the root with positive imaginary
    /// part is taken. Higher coefficients follow the first-order recurrence
    /// `r[n] = (s[n] - Σ_{k=1..n-1} r[k]·r[n-k]) / (2·r[0])`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let s0 = self.coeffs[0];
        if s0.norm() < constant_term_threshold(&self.coeffs) {
            return Err(SeriesError::ZeroConstantTerm(s0.norm()));
        }
        let n = self.order();
        let mut coeffs = vec![Complex64::ZERO; n + 1];
        coeffs[0] = principal_sqrt(s0);
        let half = 0.5 / coeffs[0];
        for m in 1..=n {
            let mut acc = self.coeffs[m];
            for k in 1..m {
                acc -= coeffs[k] * coeffs[m - k];
            }
            coeffs[m] = acc * half;
        }
        Ok(Self { coeffs })
    }

    /// Horner evaluation of the truncated polynomial at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Formal derivative, zero-padded back to the original order.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![Complex64::ZERO; n + 1];
        for k in 0..n {
            coeffs[k] = self.coeffs[k + 1] * (k as f64 + 1.0);
        }
        Self { coeffs }
    }

    /// Entrywise conjugated coefficients (the conjugation `J` in coordinates).
    pub fn conj_coeffs(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    /// `Σ |coeffs[k]|²` — the squared H² norm of the truncation.
    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Largest entrywise distance to another series of the same order.
    pub fn max_coeff_distance(&self, rhs: &Self) -> f64 {
        self.assert_same_order(rhs);
        self.coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Principal complex square root; negative reals map to the positive
/// imaginary axis regardless of the sign of the zero imaginary part.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        // normalize -0.0 so the branch cut lands on +i
        Complex64::new(z.re, 0.0).sqrt()
    } else {
        z.sqrt()
    }
}
