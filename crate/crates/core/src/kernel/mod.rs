//! The fractional Clifford-Fourier kernel K_{alpha,beta}(x, y).
//!
//! The kernel is a function of two vectors in R^m taking values in grades 0
//! and 2 of the complexified algebra Cl(0,m): a complex scalar plus a complex
//! multiple of the bivector x ^ y. Three independent routes compute it: a
//! Gegenbauer-Bessel series valid in every dimension ([`kernel_series`]), a
//! trigonometric closed form in dimension 2 ([`kernel_closed_m2`]), and a
//! finite Bessel-sum closed form in even dimensions >= 4
//! ([`kernel_closed_even`]). The routes share no code beyond the scalar
//! special functions, so their agreement is a meaningful cross-check.
//!
//! All routes factor through the same scalar invariants of the point pair
//! ([`GeometricInvariants`]) and multiply the same Gaussian chirp phase
//! e^{(i/2) cot(alpha) (|x|^2 + |y|^2)}.

use num_complex::Complex64;

use crate::algebra::Vector;
use crate::error::{Error, Result};

mod closed;
mod series;

pub use closed::{kernel_cft_reference, kernel_closed_even, kernel_closed_m2};
pub use series::{kernel_series, lemma_gamma_action, recursion_check, RecursionReport};

use crate::algebra::Multivector;

/// Smallest |sin(alpha)| accepted; below this the 1/sin(alpha) factors are
/// meaningless and the parameter is treated as exceptional.
const MIN_SIN_ALPHA: f64 = 1e-12;

/// Transform parameters: the angle pair (alpha, beta), the dimension m, the
/// series truncation, and the threshold under which beta is treated as 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    alpha: f64,
    beta: f64,
    m: usize,
    truncation: Option<usize>,
    beta_small_threshold: f64,
}

impl KernelParams {
    /// Validates m in 2..=8, alpha and beta in [-pi, pi], sin(alpha) != 0.
    pub fn new(m: usize, alpha: f64, beta: f64) -> Result<Self> {
        if !(2..=crate::algebra::MAX_DIMENSION).contains(&m) {
            return Err(Error::UnsupportedDimension {
                m,
                reason: "kernel formulas need 2 <= m <= 8",
            });
        }
        let pi = std::f64::consts::PI;
        if !alpha.is_finite() || alpha.abs() > pi {
            return Err(Error::InvalidParameter(format!(
                "alpha must lie in [-pi, pi], got {alpha}"
            )));
        }
        if !beta.is_finite() || beta.abs() > pi {
            return Err(Error::InvalidParameter(format!(
                "beta must lie in [-pi, pi], got {beta}"
            )));
        }
        if alpha.sin().abs() < MIN_SIN_ALPHA {
            return Err(Error::ExceptionalAlpha(alpha));
        }
        Ok(Self {
            alpha,
            beta,
            m,
            truncation: None,
            beta_small_threshold: 1e-6,
        })
    }

    /// Fixes the series truncation index instead of the adaptive default.
    pub fn with_truncation(mut self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter(
                "series truncation must be >= 1".into(),
            ));
        }
        self.truncation = Some(k);
        Ok(self)
    }

    /// Overrides the |beta| threshold below which the closed even-m route
    /// evaluates its beta -> 0 limit.
    pub fn with_beta_small_threshold(mut self, threshold: f64) -> Result<Self> {
        if !threshold.is_finite() || threshold < 0.0 || threshold > 0.1 {
            return Err(Error::InvalidParameter(format!(
                "beta_small_threshold must lie in [0, 0.1], got {threshold}"
            )));
        }
        self.beta_small_threshold = threshold;
        Ok(self)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn dimension(&self) -> usize {
        self.m
    }

    /// The Gegenbauer index lambda = (m - 2)/2; 0 in dimension 2.
    pub fn lambda(&self) -> f64 {
        (self.m as f64 - 2.0) / 2.0
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn beta_small_threshold(&self) -> f64 {
        self.beta_small_threshold
    }
}

/// The scalar invariants of a point pair that every kernel formula consumes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricInvariants {
    /// Inner product s = <x, y>.
    pub s: f64,
    /// Wedge norm t = |x ^ y| >= 0, so s^2 + t^2 = |x|^2 |y|^2.
    pub t: f64,
    /// Cosine of the angle between the directions, clamped to [-1, 1];
    /// 0 when either vector vanishes.
    pub w: f64,
    /// Scaled radial product z~ = |x||y| / sin(alpha), signed by sin(alpha).
    pub z_tilde: f64,
    /// s* = (sin(beta)/sin(alpha)) s.
    pub s_star: f64,
    /// t* = (sin(beta)/sin(alpha)) t.
    pub t_star: f64,
}

/// Computes the invariant set for a pair of vectors under given parameters.
///
/// t always comes from the bivector components directly, which stays accurate
/// for near-parallel vectors where |x|^2|y|^2 - s^2 would cancel.
pub fn invariants(x: &Vector, y: &Vector, p: &KernelParams) -> Result<GeometricInvariants> {
    if x.dimension() != p.m {
        return Err(Error::DimensionMismatch(p.m, x.dimension()));
    }
    if y.dimension() != p.m {
        return Err(Error::DimensionMismatch(p.m, y.dimension()));
    }
    let s = x.inner(y)?;
    let t = x.wedge_norm(y)?;
    let radial = x.norm() * y.norm();
    let w = if radial > 0.0 {
        (s / radial).clamp(-1.0, 1.0)
    } else {
        0.0
    };
    let sin_a = p.alpha.sin();
    let ratio = p.beta.sin() / sin_a;
    Ok(GeometricInvariants {
        s,
        t,
        w,
        z_tilde: radial / sin_a,
        s_star: ratio * s,
        t_star: ratio * t,
    })
}

/// A kernel value: complex scalar part plus grade-2 bivector part.
#[derive(Debug, Clone)]
pub struct KernelValue {
    scalar: Complex64,
    bivector: Multivector,
    series_tail: Option<f64>,
}

impl KernelValue {
    pub(crate) fn new(
        scalar: Complex64,
        bivector: Multivector,
        series_tail: Option<f64>,
    ) -> Self {
        debug_assert!(bivector
            .coeffs()
            .iter()
            .enumerate()
            .all(|(mask, c)| mask.count_ones() == 2 || c.norm() == 0.0));
        Self {
            scalar,
            bivector,
            series_tail,
        }
    }

    pub fn scalar_part(&self) -> Complex64 {
        self.scalar
    }

    pub fn bivector_part(&self) -> &Multivector {
        &self.bivector
    }

    /// Magnitude estimate of the truncated series remainder; None for the
    /// closed routes, which are exact finite sums.
    pub fn series_tail(&self) -> Option<f64> {
        self.series_tail
    }

    pub fn dimension(&self) -> usize {
        self.bivector.dimension()
    }

    /// Assembles scalar and bivector parts into one multivector.
    pub fn to_multivector(&self) -> Multivector {
        let mut out = self.bivector.clone();
        *out.coeff_mut(0) += self.scalar;
        out
    }
}

/// Gaussian chirp phase e^{(i/2) cot(alpha) (|x|^2 + |y|^2)} shared by all
/// kernel routes.
pub(crate) fn gaussian_phase(alpha: f64, x: &Vector, y: &Vector) -> Complex64 {
    let nx = x.norm();
    let ny = y.norm();
    let cot = alpha.cos() / alpha.sin();
    Complex64::from_polar(1.0, 0.5 * cot * (nx * nx + ny * ny))
}

/// Kernel of the scalar fractional Fourier transform,
/// e^{-i <x,y> / sin(alpha)} e^{(i/2) cot(alpha) (|x|^2 + |y|^2)}.
///
/// Every kernel route must reduce to this at beta = 0.
pub fn kernel_fractional_fourier(x: &Vector, y: &Vector, alpha: f64, m: usize) -> Result<Complex64> {
    let p = KernelParams::new(m, alpha, 0.0)?;
    let inv = invariants(x, y, &p)?;
    let carrier = Complex64::from_polar(1.0, -inv.s / alpha.sin());
    Ok(carrier * gaussian_phase(alpha, x, y))
}

/// Evaluates the kernel by the preferred route for the dimension: the closed
/// form for m = 2 and even m >= 4, the series otherwise.
pub fn kernel_auto(x: &Vector, y: &Vector, p: &KernelParams) -> Result<KernelValue> {
    if p.m == 2 {
        kernel_closed_m2(x, y, p)
    } else if p.m % 2 == 0 {
        kernel_closed_even(x, y, p)
    } else {
        kernel_series(x, y, p)
    }
}
