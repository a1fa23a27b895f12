//! Linear-fractional map algebra: composition, inversion, fixed points,
//! disc self-map testing by exact circle geometry, Taylor expansion, and
//! Denjoy-Wolff iteration.
//!
//! Quadruples are kept normalized so the largest coefficient modulus is 1;
//! multiplying a quadruple by a nonzero scalar leaves the map unchanged, so
//! the normalization makes determinant thresholds scale-free.

use crate::series::TruncatedSeries;
use num_complex::Complex64;
use thiserror::Error;

/// Determinant threshold below which a normalized quadruple is rejected.
pub const DEGENERACY_TOL: f64 = 1e-12;
/// Tolerance band around |pole| = 1 that classifies the image domain as
/// unbounded (pole on the unit circle).
pub const POLE_BOUNDARY_TOL: f64 = 1e-9;
/// Margin used by the disc self-map verdict.
pub const SELF_MAP_TOL: f64 = 1e-12;
/// Tangency/automorphism tolerance for the boundary verdict.
pub const BOUNDARY_VERDICT_TOL: f64 = 1e-10;

#[derive(Debug, Error, PartialEq)]
pub enum MobiusError {
    #[error("degenerate quadruple: |ad-bc| = {0:.3e} after normalization")]
    DegenerateMap(f64),
    #[error("composition produced a degenerate quadruple (|ad-bc| = {0:.3e})")]
    DegenerateComposition(f64),
    #[error("fixed points of the identity map are not isolated")]
    IdentityMap,
    #[error("pole {0} lies in the closed unit disc; no Maclaurin expansion")]
    PoleInClosedDisc(Complex64),
    #[error("Riemann map must be analytic on the disc: pole {0} is inside")]
    PoleInsideDisc(Complex64),
    #[error("elliptic automorphisms have no Denjoy-Wolff point")]
    EllipticAutomorphism,
    #[error("iteration did not converge within {0} steps")]
    NoConvergence(usize),
    #[error("map is not a self-map of the unit disc")]
    NotSelfMap,
    #[error("affine symbol slope must be nonzero (use the constant constructor)")]
    ZeroSlope,
    #[error("operation requires a non-constant symbol")]
    ConstantSymbol,
}

/// A Möbius transformation `z ↦ (az + b)/(cz + d)` with `ad - bc ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

/// A finite fixed point or the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FixedPoint {
    Finite(Complex64),
    Infinity,
}

impl FixedPoint {
    pub fn finite(&self) -> Option<Complex64> {
        match self {
            FixedPoint::Finite(z) => Some(*z),
            FixedPoint::Infinity => None,
        }
    }
}

/// Verdict of the exact-geometry disc self-map test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfMapVerdict {
    Yes,
    Boundary,
    No,
}

/// Certificate accompanying a self-map verdict: the image of the unit circle
/// (a circle, or a line when the pole sits on the boundary) and the image of 0.
#[derive(Debug, Clone, Copy)]
pub struct SelfMapCheck {
    pub verdict: SelfMapVerdict,
    /// Center and radius of the image circle; `None` when the image is a line.
    pub image_circle: Option<(Complex64, f64)>,
    pub image_of_zero: Complex64,
}

impl SelfMapCheck {
    pub fn admissible(&self) -> bool {
        matches!(self.verdict, SelfMapVerdict::Yes | SelfMapVerdict::Boundary)
    }
}

impl MobiusMap {
    /// Builds and normalizes a map, rejecting near-degenerate quadruples.
    pub fn new(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
    ) -> Result<Self, MobiusError> {
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
        if scale == 0.0 || !scale.is_finite() {
            return Err(MobiusError::DegenerateMap(0.0));
        }
        let m = Self {
            a: a / scale,
            b: b / scale,
            c: c / scale,
            d: d / scale,
        };
        let det = m.det().norm();
        if det < DEGENERACY_TOL {
            return Err(MobiusError::DegenerateMap(det));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self {
            a: Complex64::ONE,
            b: Complex64::ZERO,
            c: Complex64::ZERO,
            d: Complex64::ONE,
        }
    }

    /// `z ↦ λz + r` as a Möbius quadruple.
    pub fn affine(lambda: Complex64, offset: Complex64) -> Result<Self, MobiusError> {
        Self::new(lambda, offset, Complex64::ZERO, Complex64::ONE)
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.c * z + self.d)
    }

    /// Pole `-d/c`, or `None` for affine maps (pole at infinity).
    pub fn pole(&self) -> Option<Complex64> {
        if self.c.norm() == 0.0 {
            None
        } else {
            Some(-self.d / self.c)
        }
    }

    pub fn pole_modulus(&self) -> f64 {
        self.pole().map_or(f64::INFINITY, |p| p.norm())
    }

    /// `self ∘ other` via the product of coefficient matrices.
    pub fn compose(&self, other: &Self) -> Result<Self, MobiusError> {
        let a = self.a * other.a + self.b * other.c;
        let b = self.a * other.b + self.b * other.d;
        let c = self.c * other.a + self.d * other.c;
        let d = self.c * other.b + self.d * other.d;
        Self::new(a, b, c, d).map_err(|e| match e {
            MobiusError::DegenerateMap(x) => MobiusError::DegenerateComposition(x),
            other => other,
        })
    }

    /// The inverse map `w ↦ (b - dw)/(cw - a)`.
    pub fn inverse(&self) -> Self {
        // determinant is unchanged up to sign, so this cannot degenerate
        Self::new(-self.d, self.b, self.c, -self.a).expect("inverse of valid map")
    }

    /// Projective distance: entrywise gap after aligning both quadruples on
    /// the largest coefficient of `self`.
    pub fn projective_distance(&self, other: &Self) -> f64 {
        let mine = [self.a, self.b, self.c, self.d];
        let theirs = [other.a, other.b, other.c, other.d];
        let pivot = (0..4)
            .max_by(|&i, &j| mine[i].norm().total_cmp(&mine[j].norm()))
            .unwrap();
        if theirs[pivot].norm() == 0.0 {
            return f64::INFINITY;
        }
        let (sa, sb) = (mine[pivot], theirs[pivot]);
        mine.iter()
            .zip(&theirs)
            .map(|(m, t)| (m / sa - t / sb).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.projective_distance(&Self::identity()) <= tol
    }

    /// Fixed points of the map: roots of `cz² + (d - a)z - b = 0`, with the
    /// point at infinity appearing exactly when `c = 0`.
    pub fn fixed_points(&self) -> Result<Vec<FixedPoint>, MobiusError> {
        if self.is_identity(1e-14) {
            return Err(MobiusError::IdentityMap);
        }
        let mut points = Vec::new();
        if self.c.norm() == 0.0 {
            points.push(FixedPoint::Infinity);
            // az + b = dz has the single finite root b/(d - a) unless a = d
            let denom = self.d - self.a;
            if denom.norm() > 1e-14 {
                points.push(FixedPoint::Finite(self.b / denom));
            }
        } else {
            let two_c = 2.0 * self.c;
            let disc = (self.d - self.a) * (self.d - self.a) + 4.0 * self.c * self.b;
            let sqrt_disc = disc.sqrt();
            let center = (self.a - self.d) / two_c;
            if sqrt_disc.norm() <= 1e-14 {
                points.push(FixedPoint::Finite(center));
            } else {
                points.push(FixedPoint::Finite(center + sqrt_disc / two_c));
                points.push(FixedPoint::Finite(center - sqrt_disc / two_c));
            }
        }
        Ok(points)
    }

    /// Exact image of the unit circle: a circle `(center, radius)`, or `None`
    /// when the pole lies on the boundary and the image is a line.
    pub fn image_of_unit_circle(&self) -> Option<(Complex64, f64)> {
        if self.c.norm() == 0.0 {
            // affine: w = (a/d) z + b/d
            return Some((self.b / self.d, (self.a / self.d).norm()));
        }
        let pole_gap = self.d.norm_sqr() - self.c.norm_sqr();
        if pole_gap.abs() < 1e-14 {
            return None; // pole on the unit circle
        }
        // m(z) = a/c + ((bc - ad)/c) / (cz + d); the inner circle |v - d| = |c|
        // inverts to a circle with center conj(d)/(|d|² - |c|²).
        let residue = (self.b * self.c - self.a * self.d) / self.c;
        let center = self.a / self.c + residue * self.d.conj() / pole_gap;
        let radius = (self.b * self.c - self.a * self.d).norm() / pole_gap.abs();
        Some((center, radius))
    }

    /// Decides whether the map sends the unit disc into itself, by comparing
    /// the exact image circle of the boundary against the unit circle.
    pub fn disc_selfmap(&self) -> SelfMapCheck {
        let image_of_zero = self.apply(Complex64::ZERO);
        // a pole strictly inside the disc means the map is not even analytic
        if self.c.norm() > 0.0 && self.pole_modulus() < 1.0 - POLE_BOUNDARY_TOL {
            return SelfMapCheck {
                verdict: SelfMapVerdict::No,
                image_circle: self.image_of_unit_circle(),
                image_of_zero,
            };
        }
        match self.image_of_unit_circle() {
            None => SelfMapCheck {
                // boundary pole: the image is a line, so the image of the
                // disc is a half-plane and never sits inside the disc
                verdict: SelfMapVerdict::No,
                image_circle: None,
                image_of_zero,
            },
            Some((center, radius)) => {
                let reach = center.norm() + radius;
                let verdict = if (reach - 1.0).abs() <= BOUNDARY_VERDICT_TOL {
                    SelfMapVerdict::Boundary
                } else if reach < 1.0 - SELF_MAP_TOL {
                    SelfMapVerdict::Yes
                } else {
                    SelfMapVerdict::No
                };
                SelfMapCheck {
                    verdict,
                    image_circle: Some((center, radius)),
                    image_of_zero,
                }
            }
        }
    }

    /// True when the map is an automorphism of the disc (image circle equals
    /// the unit circle within tolerance).
    pub fn is_disc_automorphism(&self) -> bool {
        match self.image_of_unit_circle() {
            Some((center, radius)) => {
                center.norm() <= BOUNDARY_VERDICT_TOL
                    && (radius - 1.0).abs() <= BOUNDARY_VERDICT_TOL
            }
            None => false,
        }
    }

    /// Maclaurin expansion, valid when the pole is strictly outside the
    /// closed disc. Computed by formal division of `(b + az)` by `(d + cz)`.
    pub fn taylor(&self, order: usize) -> Result<TruncatedSeries, MobiusError> {
        if self.c.norm() > 0.0 {
            let pole = -self.d / self.c;
            if pole.norm() <= 1.0 {
                return Err(MobiusError::PoleInClosedDisc(pole));
            }
        }
        let mut num = TruncatedSeries::zero(order);
        num = num.add(&TruncatedSeries::monomial(order, 0, self.b));
        num = num.add(&TruncatedSeries::monomial(order, 1, self.a));
        let mut den = TruncatedSeries::zero(order);
        den = den.add(&TruncatedSeries::monomial(order, 0, self.d));
        den = den.add(&TruncatedSeries::monomial(order, 1, self.c));
        Ok(num.div(&den).expect("d != 0 when pole is outside the disc"))
    }
}

/// Result of a Denjoy-Wolff iteration run.
#[derive(Debug, Clone)]
pub struct DenjoyWolff {
    /// Final iterate once successive steps differ by less than the tolerance.
    pub limit: Complex64,
    /// All iterates starting from `z0`.
    pub trail: Vec<Complex64>,
    pub iterations: usize,
}

/// Iterates a non-elliptic disc self-map from `z0` until successive iterates
/// differ by less than `tol`.
///
/// Convergence is geometric except for parabolic maps, where the iterates
/// approach the boundary fixed point like 1/n; callers wanting agreement to
/// 1e-6 with the predicted point must budget `n_max` accordingly.
pub fn denjoy_wolff_iterate(
    phi: &MobiusMap,
    z0: Complex64,
    n_max: usize,
    tol: f64,
) -> Result<DenjoyWolff, MobiusError> {
    let check = phi.disc_selfmap();
    if !check.admissible() {
        return Err(MobiusError::NotSelfMap);
    }
    if phi.is_disc_automorphism() {
        let interior_fixed_point = phi
            .fixed_points()
            .map_err(|_| MobiusError::EllipticAutomorphism)?
            .iter()
            .filter_map(FixedPoint::finite)
            .any(|p| p.norm() < 1.0 - 1e-10);
        if interior_fixed_point {
            return Err(MobiusError::EllipticAutomorphism);
        }
    }
    let mut trail = Vec::new();
    let mut z = z0;
    trail.push(z);
    for n in 1..=n_max {
        let next = phi.apply(z);
        trail.push(next);
        let step = (next - z).norm();
        z = next;
        if step < tol {
            return Ok(DenjoyWolff {
                limit: z,
                trail,
                iterations: n,
            });
        }
    }
    Err(MobiusError::NoConvergence(n_max))
}

/// A linear-fractional Riemann map `τ: 𝕌 → Ω`, analytic on the disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannMap {
    map: MobiusMap,
    domain_bounded: bool,
    /// Square root of the determinant fixing the analytic branch of (τ')^{1/2}
    /// as s/(cz + d), matching the series principal branch at z = 0.
    sqrt_det: Complex64,
}

impl RiemannMap {
    pub fn new(map: MobiusMap) -> Result<Self, MobiusError> {
        let domain_bounded = match map.pole() {
            None => true,
            Some(p) => {
                let r = p.norm();
                if r < 1.0 - POLE_BOUNDARY_TOL {
                    return Err(MobiusError::PoleInsideDisc(p));
                }
                r > 1.0 + POLE_BOUNDARY_TOL
            }
        };
        // τ'(0) = det/d²; d ≠ 0 because the pole is not inside the disc
        let principal_at_zero = crate::series::principal_sqrt(map.det() / (map.d * map.d));
        let sqrt_det = map.d * principal_at_zero;
        Ok(Self {
            map,
            domain_bounded,
            sqrt_det,
        })
    }

    pub fn from_coefficients(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
    ) -> Result<Self, MobiusError> {
        Self::new(MobiusMap::new(a, b, c, d)?)
    }

    /// Identity map of the disc.
    pub fn identity() -> Self {
        Self::new(MobiusMap::identity()).unwrap()
    }

    /// τ₁(z) = (1+z)/(1-z), the map onto the right half-plane.
    pub fn tau1() -> Self {
        Self::from_coefficients(
            Complex64::ONE,
            Complex64::ONE,
            -Complex64::ONE,
            Complex64::ONE,
        )
        .unwrap()
    }

    /// τ₂(z) = i(1+z)/(1-z), the map onto the upper half-plane.
    pub fn tau2() -> Self {
        Self::from_coefficients(
            Complex64::I,
            Complex64::I,
            -Complex64::ONE,
            Complex64::ONE,
        )
        .unwrap()
    }

    pub fn map(&self) -> &MobiusMap {
        &self.map
    }

    pub fn domain_bounded(&self) -> bool {
        self.domain_bounded
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        self.map.apply(z)
    }

    pub fn inverse_point(&self, w: Complex64) -> Complex64 {
        self.map.inverse().apply(w)
    }

    /// Ω-membership via the exact inverse: |τ⁻¹(w)| < 1 - 1e-12.
    /// Non-finite preimages (w at the image of the pole) count as outside.
    pub fn contains(&self, w: Complex64) -> bool {
        let r = self.inverse_point(w).norm();
        r.is_finite() && r < 1.0 - 1e-12
    }

    /// τ'(z) = (ad - bc)/(cz + d)².
    pub fn prime(&self, z: Complex64) -> Complex64 {
        let den = self.map.c * z + self.map.d;
        self.map.det() / (den * den)
    }

    /// The analytic branch of (τ')^{1/2} on the disc: s/(cz + d) with s² = det
    /// and s chosen so the value at 0 is the principal root of τ'(0).
    pub fn sqrt_prime(&self, z: Complex64) -> Complex64 {
        self.sqrt_det / (self.map.c * z + self.map.d)
    }

    /// Maclaurin series of τ' at the given order.
    pub fn prime_series(&self, order: usize) -> TruncatedSeries {
        let den = TruncatedSeries::from_fn(order, |k| match k {
            0 => self.map.d * self.map.d,
            1 => 2.0 * self.map.c * self.map.d,
            2 => self.map.c * self.map.c,
            _ => Complex64::ZERO,
        });
        TruncatedSeries::constant(order, self.map.det())
            .div(&den)
            .expect("d != 0 for a Riemann map")
    }

    /// Maclaurin series of the analytic (τ')^{1/2} branch.
    pub fn sqrt_prime_series(&self, order: usize) -> TruncatedSeries {
        self.prime_series(order)
            .sqrt()
            .expect("τ'(0) != 0 for a Riemann map")
    }
}

/// An affine symbol `Φ(w) = λw + r` on Ω, or a constant symbol `Φ ≡ r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineSymbol {
    lambda: Complex64,
    offset: Complex64,
}

impl AffineSymbol {
    pub fn new(lambda: Complex64, offset: Complex64) -> Result<Self, MobiusError> {
        if lambda.norm() == 0.0 {
            return Err(MobiusError::ZeroSlope);
        }
        Ok(Self { lambda, offset })
    }

    /// The constant symbol `Φ ≡ w0` (slope zero by construction).
    pub fn constant(w0: Complex64) -> Self {
        Self {
            lambda: Complex64::ZERO,
            offset: w0,
        }
    }

    pub fn identity() -> Self {
        Self {
            lambda: Complex64::ONE,
            offset: Complex64::ZERO,
        }
    }

    pub fn slope(&self) -> Complex64 {
        self.lambda
    }

    pub fn offset(&self) -> Complex64 {
        self.offset
    }

    pub fn is_constant(&self) -> bool {
        self.lambda.norm() == 0.0
    }

    pub fn apply(&self, w: Complex64) -> Complex64 {
        self.lambda * w + self.offset
    }

    pub fn as_mobius(&self) -> Result<MobiusMap, MobiusError> {
        if self.is_constant() {
            return Err(MobiusError::ConstantSymbol);
        }
        MobiusMap::affine(self.lambda, self.offset)
    }

    /// `Φ⁻¹(w) = (w - r)/λ` for non-constant symbols.
    pub fn inverse(&self) -> Result<Self, MobiusError> {
        if self.is_constant() {
            return Err(MobiusError::ConstantSymbol);
        }
        Ok(Self {
            lambda: 1.0 / self.lambda,
            offset: -self.offset / self.lambda,
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            lambda: self.lambda * other.lambda,
            offset: self.lambda * other.offset + self.offset,
        }
    }

    /// The finite fixed point of a non-identity affine map, if any
    /// (`λ = 1` translations fix only infinity).
    pub fn finite_fixed_point(&self) -> Option<Complex64> {
        if self.is_constant() {
            return Some(self.offset);
        }
        let denom = Complex64::ONE - self.lambda;
        if denom.norm() < 1e-14 {
            None
        } else {
            Some(self.offset / denom)
        }
    }

    pub fn max_coeff_distance(&self, other: &Self) -> f64 {
        (self.lambda - other.lambda)
            .norm()
            .max((self.offset - other.offset).norm())
    }
}

/// Conjugates a symbol on Ω back to the disc: `φ = τ⁻¹ ∘ Φ ∘ τ`.
pub fn symbol_conjugate_to_disc(
    tau: &RiemannMap,
    phi: &AffineSymbol,
) -> Result<MobiusMap, MobiusError> {
    let phi_mobius = phi.as_mobius()?;
    tau.map()
        .inverse()
        .compose(&phi_mobius)?
        .compose(tau.map())
}
