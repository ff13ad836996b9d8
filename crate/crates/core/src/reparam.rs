//! Reparameterization gradients through the rejection sampler.
//!
//! A draw `z = U(μ)(ω; √(1−ω²) v)` with `ω = h(ε, κ)` is differentiable in
//! `(μ, κ)` once the accepted proposal noise `ε` and the tangent direction `v`
//! are held fixed. Because acceptance itself depends on `κ`, the distribution
//! of the accepted `ε` does too, and the pathwise term alone is biased. The
//! full estimator of `∇_κ E_q[f(z)]` is
//!
//! ```text
//! g_rep = f'(z) · ∂z/∂ω · ∂h/∂κ
//! g_cor = f(z) · d/dκ [ log g(h(ε, κ) | κ) + log |∂h/∂ε| ]
//! ```
//!
//! where the derivative in `g_cor` is total: `ω = h(ε, κ)` moves with `κ`.
//! The gradient in `μ` has no correction term.
//!
//! On `S²` with the inverse-CDF branch `ω` is a smooth function of a uniform
//! draw, so `g_rep` alone is unbiased and `g_cor = 0`.

use crate::error::{domain, Error, Result};
use crate::sampler::{OmegaBranch, RejectionConstants, SampleTrace};
use crate::special::ratio;
use crate::vmf::{check_dimension, check_kappa, kl_grad_unchecked, VonMisesFisher};

const POLE_CLAMP: f64 = 1.0 - 1e-15;

/// Single-sample gradient of `E_q[f(z)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReparamGrad {
    /// Gradient in `μ`, in ambient coordinates (not projected onto the sphere).
    pub grad_mu: Vec<f64>,
    /// `g_rep_kappa + g_cor_kappa`.
    pub grad_kappa: f64,
    pub g_rep_kappa: f64,
    pub g_cor_kappa: f64,
}

/// Estimator switches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GradientOptions {
    /// Include the score-function correction. Turning it off gives the biased
    /// pathwise-only estimator.
    pub correction: bool,
    /// Subtracted from `f` inside `g_cor` only.
    pub baseline: f64,
}

impl Default for GradientOptions {
    fn default() -> Self {
        Self { correction: true, baseline: 0.0 }
    }
}

/// `∂/∂κ log g(ω | κ)` at fixed `ω`: `ω − I_{m/2}(κ)/I_{m/2−1}(κ)`.
pub fn log_g_unnormalized_grad_kappa(omega: f64, kappa: f64, m: usize) -> Result<f64> {
    check_kappa(kappa)?;
    check_dimension(m)?;
    if !(omega.abs() < 1.0) {
        return Err(domain(format!("omega must lie in (-1, 1), got {omega}")));
    }
    Ok(omega - ratio(m as f64 / 2.0, kappa))
}

/// `∂/∂κ log |∂h/∂ε|` with `log |∂h/∂ε| = log 2b − 2 log((b−1)ε + 1)`:
/// `b'(1/b − 2ε/((b−1)ε + 1))`.
pub fn log_abs_dh_deps_grad_kappa(eps: f64, kappa: f64, m: usize) -> Result<f64> {
    check_kappa(kappa)?;
    check_dimension(m)?;
    if !(0.0..=1.0).contains(&eps) {
        return Err(domain(format!("epsilon must lie in [0, 1], got {eps}")));
    }
    let b = RejectionConstants::new(kappa, m).b;
    let db = RejectionConstants::db_dkappa(kappa, m);
    Ok(db * (1.0 / b - 2.0 * eps / ((1.0 - eps) + b * eps)))
}

/// `∂h/∂κ` at fixed `ε`, through `b(κ)`: `−2ε(1−ε)/((1−ε) + bε)² · b'`.
pub fn h_grad_kappa(eps: f64, kappa: f64, m: usize) -> f64 {
    let b = RejectionConstants::new(kappa, m).b;
    let db = RejectionConstants::db_dkappa(kappa, m);
    let den = (1.0 - eps) + b * eps;
    -2.0 * eps * (1.0 - eps) / (den * den) * db
}

/// `∂ω/∂κ` of the inverse CDF `ω = 1 + κ⁻¹ log(u + (1−u)e^{−2κ})` at fixed `u`.
pub fn inverse_cdf_grad_kappa(u: f64, kappa: f64) -> f64 {
    if kappa < 1e-4 {
        // Taylor expansion; the closed form cancels catastrophically here
        let c0 = 3.0 - 3.0 * u;
        let c1 = 8.0 * u * u - 12.0 * u + 4.0;
        let c2 = -18.0 * u * u * u + 36.0 * u * u - 21.0 * u + 3.0;
        return 2.0 * u * (c0 + kappa * (c1 + kappa * c2)) / 3.0;
    }
    let e = (-2.0 * kappa).exp_m1();
    let l = ((1.0 - u) * e).ln_1p();
    let dl = (1.0 - u) * (-2.0 * (-2.0 * kappa).exp()) / (1.0 + (1.0 - u) * e);
    -l / (kappa * kappa) + dl / kappa
}

/// Total `d/dκ log g(h(ε, κ) | κ)` (up to the `κ`-free constant), with the
/// chain term through `ω` written so it stays finite at `ε ∈ {0, 1}`:
///
/// ```text
/// ω − A(κ) + κ ∂h/∂κ + (m−3) ω b'/(2b)
/// ```
fn log_g_total_grad_kappa(eps: f64, omega: f64, kappa: f64, m: usize) -> f64 {
    let b = RejectionConstants::new(kappa, m).b;
    let db = RejectionConstants::db_dkappa(kappa, m);
    omega - ratio(m as f64 / 2.0, kappa)
        + kappa * h_grad_kappa(eps, kappa, m)
        + (m as f64 - 3.0) * omega * db / (2.0 * b)
}

/// Single-sample gradient of `E_q[f(z)]` in `(μ, κ)` from a trace drawn under
/// `dist`. `f_value = f(z)`, `f_grad_z = ∇_z f(z)`.
pub fn reparam_gradient(
    trace: &SampleTrace,
    dist: &VonMisesFisher,
    f_value: f64,
    f_grad_z: &[f64],
) -> Result<ReparamGrad> {
    reparam_gradient_with(trace, dist, f_value, f_grad_z, GradientOptions::default())
}

pub fn reparam_gradient_with(
    trace: &SampleTrace,
    dist: &VonMisesFisher,
    f_value: f64,
    f_grad_z: &[f64],
    options: GradientOptions,
) -> Result<ReparamGrad> {
    let m = dist.dim();
    for len in [trace.z.len(), trace.v.len() + 1, f_grad_z.len()] {
        if len != m {
            return Err(Error::DimensionMismatch { expected: m, actual: len });
        }
    }
    let kappa = dist.kappa();
    let omega = trace.omega;
    let w = omega.clamp(-POLE_CLAMP, POLE_CLAMP);
    let s = (1.0 - w * w).sqrt();

    // z' = (ω; s v) and U g, with U the reflection e₁ ↦ μ (symmetric)
    let mut zp = Vec::with_capacity(m);
    zp.push(omega);
    zp.extend(trace.v.iter().map(|x| s * x));
    let ug = reflect(dist.mu(), f_grad_z);

    // ∂z'/∂ω = (1; −(ω/s) v)
    let dz_domega_dot_g =
        ug[0] - (w / s) * trace.v.iter().zip(&ug[1..]).map(|(a, b)| a * b).sum::<f64>();

    let (domega, g_cor) = match trace.branch {
        OmegaBranch::InverseCdf => (inverse_cdf_grad_kappa(trace.epsilon, kappa), 0.0),
        OmegaBranch::Rejection => {
            let eps = trace.epsilon;
            let score = log_g_total_grad_kappa(eps, omega, kappa, m)
                + log_abs_dh_deps_grad_kappa(eps, kappa, m)?;
            let g_cor = if options.correction { (f_value - options.baseline) * score } else { 0.0 };
            (h_grad_kappa(eps, kappa, m), g_cor)
        }
    };
    let g_rep = domega * dz_domega_dot_g;

    let grad_mu = mu_gradient(dist.mu(), &zp, f_grad_z);
    let grad_kappa = g_rep + g_cor;
    if !(grad_kappa.is_finite() && grad_mu.iter().all(|x| x.is_finite())) {
        return Err(Error::NonFinite(format!(
            "reparameterization gradient (eps = {}, omega = {omega}, kappa = {kappa}, m = {m})",
            trace.epsilon
        )));
    }
    Ok(ReparamGrad { grad_mu, grad_kappa, g_rep_kappa: g_rep, g_cor_kappa: g_cor })
}

/// Full single-sample ELBO gradient in `κ`: the reconstruction term through
/// [`reparam_gradient`] minus the analytic KL gradient.
pub fn elbo_gradient_kappa(
    trace: &SampleTrace,
    dist: &VonMisesFisher,
    recon_value: f64,
    recon_grad_z: &[f64],
) -> Result<f64> {
    let g = reparam_gradient(trace, dist, recon_value, recon_grad_z)?;
    Ok(g.grad_kappa - kl_grad_unchecked(dist.dim(), dist.kappa()))
}

fn reflect(mu: &[f64], x: &[f64]) -> Vec<f64> {
    crate::sampler::Householder::new(mu).apply(x)
}

/// `∇_μ gᵀ U(μ) z'` at fixed `z'`. With `w = e₁ − μ`, `q = wᵀw`, `s = wᵀz'`:
///
/// ```text
/// 2[(gᵀw) z' + s g]/q − 4 s (gᵀw) w/q²
/// ```
///
/// At `μ = e₁` the reflection is replaced by the identity, and the gradient
/// is that of the rotation `z' ↦ z' + z'₁ δ − (δᵀz') e₁` at `δ = 0`.
fn mu_gradient(mu: &[f64], zp: &[f64], g: &[f64]) -> Vec<f64> {
    let mut w: Vec<f64> = mu.iter().map(|x| -x).collect();
    w[0] += 1.0;
    let q: f64 = w.iter().map(|x| x * x).sum();
    if q.sqrt() < 1e-12 {
        return zp.iter().zip(g).map(|(z, gi)| zp[0] * gi - g[0] * z).collect();
    }
    let gw: f64 = g.iter().zip(&w).map(|(a, b)| a * b).sum();
    let s: f64 = zp.iter().zip(&w).map(|(a, b)| a * b).sum();
    (0..mu.len())
        .map(|i| 2.0 * (gw * zp[i] + s * g[i]) / q - 4.0 * s * gw * w[i] / (q * q))
        .collect()
}
