//! Exact sampling from the von Mises-Fisher distribution.
//!
//! A draw is assembled from three pieces: a scalar `ω = e₁ᵀz'` from the
//! marginal `g(ω | κ) ∝ exp(κω)(1 − ω²)^{(m−3)/2}`, a tangent direction `v`
//! uniform on `S^{m−2}`, and a Householder reflection taking `e₁` to `μ`.
//! The marginal is drawn by acceptance-rejection with a Beta proposal pushed
//! through `ω = h(ε, κ)`; on `S²` the inverse CDF is available in closed form.
//!
//! Every accepted draw is returned as a [`SampleTrace`] carrying the proposal
//! noise, which is what the gradient estimator in [`crate::reparam`] consumes.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

use crate::error::{domain, Error, Result};
use crate::vmf::{check_dimension, check_kappa, VonMisesFisher};

/// Proposals allowed before a draw is declared a numeric fault.
pub const PROPOSAL_BUDGET: usize = 10_000;

const POLE_CLAMP: f64 = 1.0 - 1e-15;

/// Seeded random stream. Identical seeds give identical streams on every
/// platform.
#[derive(Debug, Clone)]
pub struct Rng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self { seed, inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Independent stream `index` derived from `base` (seed `base ^ index`).
    pub fn stream(base: u64, index: u64) -> Self {
        Self::new(base ^ index)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform on `(0, 1]`.
    pub fn uniform(&mut self) -> f64 {
        // 53 random bits mapped to {1, …, 2^53} / 2^53
        ((self.inner.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.inner)
    }
}

impl RngCore for Rng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

/// Uniform draw from `S^{m−1} ⊂ R^m` by normalizing a Gaussian vector.
/// For `m = 1` this is a fair sign.
pub fn sample_uniform_sphere(rng: &mut Rng, m: usize) -> Result<Vec<f64>> {
    if m < 1 {
        return Err(domain("uniform sphere sample needs m >= 1"));
    }
    loop {
        let x: Vec<f64> = (0..m).map(|_| rng.normal()).collect();
        let n = x.iter().map(|a| a * a).sum::<f64>().sqrt();
        if n > 1e-150 {
            return Ok(x.into_iter().map(|a| a / n).collect());
        }
    }
}

/// Precomputed constants of the rejection step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RejectionConstants {
    pub b: f64,
    pub a: f64,
    pub d: f64,
}

impl RejectionConstants {
    /// `b = (−2κ + √(4κ² + (m−1)²))/(m−1)`, evaluated as `(m−1)/(2κ + √(…))`,
    /// which avoids cancellation at large `κ`.
    pub fn new(kappa: f64, m: usize) -> Self {
        let n = m as f64 - 1.0;
        let root = (4.0 * kappa * kappa + n * n).sqrt();
        let b = n / (2.0 * kappa + root);
        let a = (n + 2.0 * kappa + root) / 4.0;
        let d = 4.0 * a * b / (1.0 + b) - xlogx(n);
        Self { b, a, d }
    }

    /// `db/dκ = −2b/√(4κ² + (m−1)²)`.
    pub fn db_dkappa(kappa: f64, m: usize) -> f64 {
        let n = m as f64 - 1.0;
        let root = (4.0 * kappa * kappa + n * n).sqrt();
        -2.0 * Self::new(kappa, m).b / root
    }
}

fn xlogx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `h(ε, κ) = (1 − (1+b)ε)/(1 − (1−b)ε)`.
pub fn h_transform(eps: f64, kappa: f64, m: usize) -> Result<f64> {
    check_eps(eps)?;
    check_kappa(kappa)?;
    check_dimension(m)?;
    Ok(h_with_b(eps, RejectionConstants::new(kappa, m).b))
}

pub(crate) fn h_with_b(eps: f64, b: f64) -> f64 {
    // ((1−ε) − bε) / ((1−ε) + bε), exact at both endpoints
    let c = 1.0 - eps;
    ((c - b * eps) / (c + b * eps)).clamp(-1.0, 1.0)
}

/// `∂h/∂ε = −2b/((b−1)ε + 1)²`.
pub fn h_deps(eps: f64, kappa: f64, m: usize) -> Result<f64> {
    check_eps(eps)?;
    check_kappa(kappa)?;
    check_dimension(m)?;
    let b = RejectionConstants::new(kappa, m).b;
    let den = (b - 1.0) * eps + 1.0;
    Ok(-2.0 * b / (den * den))
}

fn check_eps(eps: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(domain(format!("epsilon must lie in [0, 1], got {eps}")));
    }
    Ok(())
}

/// How the marginal `ω` was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaBranch {
    /// Beta proposal accepted by the rejection test; `ω = h(ε, κ)`.
    Rejection,
    /// Closed-form inverse CDF on `S²`; `ε` holds the uniform draw.
    InverseCdf,
}

/// One accepted scalar draw.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaDraw {
    pub omega: f64,
    pub epsilon: f64,
    pub attempts: usize,
    pub branch: OmegaBranch,
}

/// One accepted vMF draw together with its noise.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleTrace {
    pub epsilon: f64,
    pub omega: f64,
    /// Tangent direction on `S^{m−2}`.
    pub v: Vec<f64>,
    /// Final sample `U(μ)(ω; √(1−ω²) v)`.
    pub z: Vec<f64>,
    pub attempts: usize,
    pub branch: OmegaBranch,
}

/// Sampler for a fixed `(m, κ)`.
///
/// On `S²` the inverse-CDF branch is used unless
/// [`OmegaSampler::force_rejection`] is set.
#[derive(Debug, Clone)]
pub struct OmegaSampler {
    m: usize,
    kappa: f64,
    consts: RejectionConstants,
    gamma: Gamma<f64>,
    inverse_cdf: bool,
}

impl OmegaSampler {
    pub fn new(kappa: f64, m: usize) -> Result<Self> {
        check_kappa(kappa)?;
        check_dimension(m)?;
        let shape = (m as f64 - 1.0) / 2.0;
        let gamma = Gamma::new(shape, 1.0).map_err(|e| domain(e.to_string()))?;
        Ok(Self { m, kappa, consts: RejectionConstants::new(kappa, m), gamma, inverse_cdf: m == 3 })
    }

    /// Use the rejection path even on `S²`.
    pub fn force_rejection(mut self, yes: bool) -> Self {
        self.inverse_cdf = self.m == 3 && !yes;
        self
    }

    pub fn constants(&self) -> RejectionConstants {
        self.consts
    }

    pub fn sample(&self, rng: &mut Rng) -> Result<OmegaDraw> {
        if self.inverse_cdf {
            let u = rng.uniform();
            return Ok(OmegaDraw {
                omega: inverse_cdf_s2(u, self.kappa),
                epsilon: u,
                attempts: 1,
                branch: OmegaBranch::InverseCdf,
            });
        }
        let RejectionConstants { a, b, d } = self.consts;
        let n = self.m as f64 - 1.0;
        for attempt in 1..=PROPOSAL_BUDGET {
            let x = self.gamma.sample(rng);
            let y = self.gamma.sample(rng);
            let eps = x / (x + y);
            if !eps.is_finite() {
                continue;
            }
            let t = 2.0 * a * b / ((1.0 - eps) + b * eps);
            let u = rng.uniform();
            if n * t.ln() - t + d >= u.ln() {
                return Ok(OmegaDraw {
                    omega: h_with_b(eps, b),
                    epsilon: eps,
                    attempts: attempt,
                    branch: OmegaBranch::Rejection,
                });
            }
        }
        Err(Error::ProposalBudget { budget: PROPOSAL_BUDGET, kappa: self.kappa, m: self.m })
    }
}

/// `ω = 1 + κ⁻¹ log(u + (1−u)e^{−2κ})`, the inverse CDF of `g(ω | κ)` on `S²`.
pub(crate) fn inverse_cdf_s2(u: f64, kappa: f64) -> f64 {
    if kappa < 1e-8 {
        // first-order expansion around the uniform case ω = 2u − 1
        return (2.0 * u - 1.0 + 2.0 * kappa * u * (1.0 - u)).clamp(-1.0, 1.0);
    }
    let l = ((1.0 - u) * (-2.0 * kappa).exp_m1()).ln_1p();
    (1.0 + l / kappa).clamp(-1.0, 1.0)
}

/// `log g(ω | κ, m)`, the exact density of `ω = μᵀz`:
/// `S(m−2) C_m(κ) exp(κω)(1 − ω²)^{(m−3)/2}`.
pub fn log_omega_density(omega: f64, kappa: f64, m: usize) -> Result<f64> {
    check_kappa(kappa)?;
    check_dimension(m)?;
    if !(-1.0..=1.0).contains(&omega) {
        return Err(domain(format!("omega must lie in [-1, 1], got {omega}")));
    }
    let shape = (m as f64 - 3.0) / 2.0;
    let tail = if shape == 0.0 { 0.0 } else { shape * (1.0 - omega * omega).ln() };
    Ok(log_subsphere_area(m) + crate::vmf::log_normalizer(m, kappa)? + kappa * omega + tail)
}

/// `log S(m−2)`, the surface of the unit sphere in `R^{m−1}`.
fn log_subsphere_area(m: usize) -> f64 {
    let half = (m as f64 - 1.0) / 2.0;
    std::f64::consts::LN_2 + half * std::f64::consts::PI.ln() - libm::lgamma(half)
}

/// Probability mass of `g(ω | κ, m)` in each of `bins` equal-width bins on
/// `[−1, 1]`, by Simpson quadrature in `θ = arccos ω` where the integrand
/// `exp(κ cos θ) sin^{m−2} θ` is smooth for every `m ≥ 2`.
pub fn omega_bin_probabilities(kappa: f64, m: usize, bins: usize) -> Result<Vec<f64>> {
    check_kappa(kappa)?;
    check_dimension(m)?;
    if bins == 0 {
        return Err(domain("need at least one bin"));
    }
    let log_c = log_subsphere_area(m) + crate::vmf::log_normalizer(m, kappa)?;
    let power = m as f64 - 2.0;
    let f = |theta: f64| {
        let s = theta.sin();
        let tail = if power == 0.0 { 0.0 } else { power * s.max(0.0).ln() };
        (log_c + kappa * theta.cos() + tail).exp()
    };
    const PANELS: usize = 256;
    let mut out = Vec::with_capacity(bins);
    for i in 0..bins {
        let lo = -1.0 + 2.0 * i as f64 / bins as f64;
        let hi = -1.0 + 2.0 * (i + 1) as f64 / bins as f64;
        let (t0, t1) = (hi.clamp(-1.0, 1.0).acos(), lo.clamp(-1.0, 1.0).acos());
        let h = (t1 - t0) / PANELS as f64;
        let mut acc = f(t0) + f(t1);
        for j in 1..PANELS {
            acc += if j % 2 == 1 { 4.0 } else { 2.0 } * f(t0 + j as f64 * h);
        }
        out.push(acc * h / 3.0);
    }
    Ok(out)
}

/// Draws `ω ~ g(ω | κ, m)`.
pub fn sample_omega(rng: &mut Rng, kappa: f64, m: usize) -> Result<OmegaDraw> {
    OmegaSampler::new(kappa, m)?.sample(rng)
}

/// The reflection `U = I − 2uuᵀ` with `u ∝ e₁ − μ`, so `U e₁ = μ`. Applied in
/// `O(m)`; the identity when `μ = e₁`.
#[derive(Debug, Clone, PartialEq)]
pub struct Householder {
    u: Option<Vec<f64>>,
}

impl Householder {
    pub fn new(mu: &[f64]) -> Self {
        let mut w = mu.iter().map(|x| -x).collect::<Vec<_>>();
        if let Some(first) = w.first_mut() {
            *first += 1.0;
        }
        let n = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n < 1e-12 {
            return Self { u: None };
        }
        w.iter_mut().for_each(|x| *x /= n);
        Self { u: Some(w) }
    }

    /// Unit normal of the reflecting hyperplane, if the map is not the identity.
    pub fn normal(&self) -> Option<&[f64]> {
        self.u.as_deref()
    }

    pub fn apply_in_place(&self, x: &mut [f64]) {
        if let Some(u) = &self.u {
            let dot: f64 = u.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
            x.iter_mut().zip(u).for_each(|(xi, ui)| *xi -= 2.0 * dot * ui);
        }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = x.to_vec();
        self.apply_in_place(&mut y);
        y
    }
}

/// The Householder reflection for `μ`.
pub fn householder_reflect(mu: &[f64]) -> Householder {
    Householder::new(mu)
}

/// Sampler for a fixed distribution; reuses the reflection and constants
/// across draws.
#[derive(Debug, Clone)]
pub struct VmfSampler {
    omega: OmegaSampler,
    reflect: Householder,
    m: usize,
}

impl VmfSampler {
    pub fn new(dist: &VonMisesFisher) -> Result<Self> {
        Ok(Self {
            omega: OmegaSampler::new(dist.kappa(), dist.dim())?,
            reflect: Householder::new(dist.mu()),
            m: dist.dim(),
        })
    }

    pub fn force_rejection(mut self, yes: bool) -> Self {
        self.omega = self.omega.force_rejection(yes);
        self
    }

    pub fn sample(&self, rng: &mut Rng) -> Result<SampleTrace> {
        let v = sample_uniform_sphere(rng, self.m - 1)?;
        let draw = self.omega.sample(rng)?;
        let w = draw.omega.clamp(-POLE_CLAMP, POLE_CLAMP);
        let s = (1.0 - w * w).sqrt();
        let mut z = Vec::with_capacity(self.m);
        z.push(draw.omega);
        z.extend(v.iter().map(|x| s * x));
        self.reflect.apply_in_place(&mut z);
        Ok(SampleTrace {
            epsilon: draw.epsilon,
            omega: draw.omega,
            v,
            z,
            attempts: draw.attempts,
            branch: draw.branch,
        })
    }
}

/// One draw from `dist`.
pub fn sample_vmf(rng: &mut Rng, dist: &VonMisesFisher) -> Result<SampleTrace> {
    VmfSampler::new(dist)?.sample(rng)
}
