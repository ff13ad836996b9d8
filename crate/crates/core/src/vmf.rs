//! The von Mises-Fisher distribution and the uniform prior on the sphere.
//!
//! The density on `S^{m−1}` is
//!
//! ```text
//! q(z | μ, κ) = C_m(κ) exp(κ μᵀz),
//! C_m(κ) = κ^{m/2−1} / ((2π)^{m/2} I_{m/2−1}(κ))
//! ```
//!
//! and every quantity here is assembled from logarithms of scaled Bessel
//! functions, so nothing overflows for large `κ`.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::special::{log_iv_normalized, log_iv_scaled, ratio};

/// Largest concentration accepted. The Bessel kernel is validated up to here.
pub const MAX_KAPPA: f64 = 1e6;

/// Largest ambient dimension accepted; the Bessel order `m/2 − 1` stays within
/// the validated range.
pub const MAX_DIM: usize = 402;

/// Tolerance on `‖μ‖ = 1` when constructing a distribution.
pub const MU_NORM_TOL: f64 = 1e-9;

/// Tolerance on `‖z‖ = 1` for density evaluation. Points inside the band are
/// renormalized silently.
pub const Z_NORM_TOL: f64 = 1e-6;

/// Switch point below which KL is evaluated through the normalized power
/// series, which keeps full relative accuracy as `κ → 0`.
const KL_SERIES_KAPPA: f64 = 50.0;

/// A von Mises-Fisher distribution on `S^{m−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct VonMisesFisher {
    mu: Vec<f64>,
    kappa: f64,
}

impl VonMisesFisher {
    /// Builds a distribution from a unit mean direction. The dimension is
    /// `mu.len()`.
    pub fn new(mu: Vec<f64>, kappa: f64) -> Result<Self> {
        check_dimension(mu.len())?;
        check_kappa(kappa)?;
        if mu.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("mean direction".into()));
        }
        let norm = norm(&mu);
        if (norm - 1.0).abs() > MU_NORM_TOL {
            return Err(Error::NotUnitNorm { norm });
        }
        Ok(Self { mu, kappa })
    }

    /// Normalizes `direction` and builds the distribution.
    pub fn from_direction(direction: &[f64], kappa: f64) -> Result<Self> {
        let n = norm(direction);
        if !(n.is_finite() && n > 0.0) {
            return Err(domain(format!("cannot normalize direction with norm {n}")));
        }
        Self::new(direction.iter().map(|x| x / n).collect(), kappa)
    }

    /// Mean direction `e₁`.
    pub fn north_pole(m: usize, kappa: f64) -> Result<Self> {
        check_dimension(m)?;
        let mut mu = vec![0.0; m];
        mu[0] = 1.0;
        Self::new(mu, kappa)
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Ambient dimension `m`.
    pub fn dim(&self) -> usize {
        self.mu.len()
    }

    /// `E[μᵀz] = I_{m/2}(κ)/I_{m/2−1}(κ)`.
    pub fn mean_resultant(&self) -> f64 {
        ratio(self.dim() as f64 / 2.0, self.kappa)
    }

    pub fn log_prob(&self, z: &[f64]) -> Result<f64> {
        log_prob(self, z)
    }

    pub fn kl_to_uniform(&self) -> f64 {
        kl_to_uniform(self)
    }

    pub fn kl_grad_kappa(&self) -> f64 {
        kl_grad_kappa(self)
    }
}

/// The uniform distribution on `S^{m−1}`, whose density is `1/S(m−1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypersphericalUniform {
    m: usize,
}

impl HypersphericalUniform {
    pub fn new(m: usize) -> Result<Self> {
        check_dimension(m)?;
        Ok(Self { m })
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    /// Constant log density `−log S(m−1)`.
    pub fn log_density(&self) -> f64 {
        -log_unit_surface(self.m)
    }

    pub fn log_prob(&self, z: &[f64]) -> Result<f64> {
        if z.len() != self.m {
            return Err(Error::DimensionMismatch { expected: self.m, actual: z.len() });
        }
        check_unit(z)?;
        Ok(self.log_density())
    }
}

/// `log S(m−1)` for the sphere of radius `r` in `R^m`:
/// `log(r^{m−1} · 2π^{m/2} / Γ(m/2))`.
///
/// The radius enters with power `m − 1`, the usual surface measure.
pub fn log_surface_area(m: usize, r: f64) -> Result<f64> {
    check_dimension_unbounded(m)?;
    if !(r.is_finite() && r > 0.0) {
        return Err(domain(format!("radius must be finite and > 0, got {r}")));
    }
    Ok(log_unit_surface(m) + (m as f64 - 1.0) * r.ln())
}

fn log_unit_surface(m: usize) -> f64 {
    let half = m as f64 / 2.0;
    std::f64::consts::LN_2 + half * PI.ln() - libm::lgamma(half)
}

/// `log C_m(κ)`; at `κ = 0` the uniform limit `−log S(m−1)`.
pub fn log_normalizer(m: usize, kappa: f64) -> Result<f64> {
    check_dimension(m)?;
    check_kappa(kappa)?;
    Ok(log_normalizer_unchecked(m, kappa))
}

fn log_normalizer_unchecked(m: usize, kappa: f64) -> f64 {
    if kappa == 0.0 {
        return -log_unit_surface(m);
    }
    let v = m as f64 / 2.0 - 1.0;
    v * kappa.ln() - (m as f64 / 2.0) * (2.0 * PI).ln() - (log_iv_scaled(v, kappa) + kappa)
}

/// `log q(z)`. `z` must have unit norm within [`Z_NORM_TOL`].
pub fn log_prob(dist: &VonMisesFisher, z: &[f64]) -> Result<f64> {
    let m = dist.dim();
    if z.len() != m {
        return Err(Error::DimensionMismatch { expected: m, actual: z.len() });
    }
    let n = check_unit(z)?;
    let dot: f64 = dist.mu.iter().zip(z).map(|(a, b)| a * b).sum::<f64>() / n;
    Ok(log_normalizer_unchecked(m, dist.kappa) + dist.kappa * dot)
}

/// `KL(q ‖ U(S^{m−1})) = κ I_{m/2}/I_{m/2−1} + log C_m(κ) + log S(m−1)`.
///
/// Does not depend on `μ`. Exactly zero at `κ = 0`.
pub fn kl_to_uniform(dist: &VonMisesFisher) -> f64 {
    kl_unchecked(dist.dim(), dist.kappa)
}

pub(crate) fn kl_unchecked(m: usize, kappa: f64) -> f64 {
    if kappa == 0.0 {
        return 0.0;
    }
    let v = m as f64 / 2.0 - 1.0;
    let kl = if kappa < KL_SERIES_KAPPA {
        // log C_m + log S = −log[Γ(v+1) I_v(κ) / (κ/2)^v]
        kappa * ratio(v + 1.0, kappa) - log_iv_normalized(v, kappa)
    } else {
        let ls0 = log_iv_scaled(v, kappa);
        let ls1 = log_iv_scaled(v + 1.0, kappa);
        kappa * (ls1 - ls0).exp_m1() + v * kappa.ln() - (m as f64 / 2.0) * (2.0 * PI).ln() - ls0
            + log_unit_surface(m)
    };
    kl.max(0.0)
}

/// `∂/∂κ KL(q ‖ U)`:
///
/// ```text
/// (κ/2) [ I_{v+2}/I_v − I_{v+1}(I_{v−1} + I_{v+1})/I_v² + 1 ],   v = m/2 − 1
/// ```
pub fn kl_grad_kappa(dist: &VonMisesFisher) -> f64 {
    kl_grad_unchecked(dist.dim(), dist.kappa)
}

pub(crate) fn kl_grad_unchecked(m: usize, kappa: f64) -> f64 {
    if kappa == 0.0 {
        return 0.0;
    }
    let v = m as f64 / 2.0 - 1.0;
    let r1 = ratio(v + 1.0, kappa); // I_{v+1}/I_v
    let r2 = ratio(v + 2.0, kappa); // I_{v+2}/I_{v+1}
    // I_{v−1}/I_v; at m = 2 the partner is I_{−1} = I_1
    let inv_r0 = if v == 0.0 { r1 } else { 1.0 / ratio(v, kappa) };
    0.5 * kappa * (r1 * r2 - r1 * (inv_r0 + r1) + 1.0)
}

/// `KL(N(μ, diag σ²) ‖ N(0, I)) = ½ Σ (μ² + σ² − log σ² − 1)`.
pub fn gaussian_kl_std_normal(mu: &[f64], log_var: &[f64]) -> Result<f64> {
    if mu.len() != log_var.len() {
        return Err(Error::DimensionMismatch { expected: mu.len(), actual: log_var.len() });
    }
    let kl = mu
        .iter()
        .zip(log_var)
        .map(|(&m, &lv)| m * m + lv.exp_m1() - lv)
        .sum::<f64>()
        * 0.5;
    if !kl.is_finite() {
        return Err(Error::NonFinite("gaussian KL".into()));
    }
    Ok(kl)
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn check_unit(z: &[f64]) -> Result<f64> {
    let n = norm(z);
    if !n.is_finite() || (n - 1.0).abs() > Z_NORM_TOL {
        return Err(Error::NotUnitNorm { norm: n });
    }
    Ok(n)
}

fn check_dimension_unbounded(m: usize) -> Result<()> {
    if m < 2 {
        return Err(domain(format!("dimension must be >= 2, got {m}")));
    }
    Ok(())
}

pub(crate) fn check_dimension(m: usize) -> Result<()> {
    check_dimension_unbounded(m)?;
    if m > MAX_DIM {
        return Err(domain(format!("dimension must be <= {MAX_DIM}, got {m}")));
    }
    Ok(())
}

pub(crate) fn check_kappa(kappa: f64) -> Result<()> {
    if !(kappa.is_finite() && (0.0..=MAX_KAPPA).contains(&kappa)) {
        return Err(domain(format!("kappa must lie in [0, {MAX_KAPPA}], got {kappa}")));
    }
    Ok(())
}
