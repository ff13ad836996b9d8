use serde::{Deserialize, Serialize};

use super::layers::{Activation, Adam, Dense, Mlp};
use super::tape::{Grads, Tape, Var};
use super::tensor::Tensor;
use crate::error::{domain, Error, Result};
use crate::reparam::{reparam_gradient_with, GradientOptions};
use crate::sampler::{Rng, VmfSampler};
use crate::vmf::{kl_grad_unchecked, kl_unchecked, log_surface_area, VonMisesFisher};

/// Variational family of the latent code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosteriorKind {
    /// `q = vMF(μ, κ)` on the unit sphere, prior uniform.
    Vmf,
    /// `q = N(μ, diag σ²)`, prior standard normal.
    Normal,
    /// Deterministic code, no KL term.
    Ae,
}

/// Observation model of the decoder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Likelihood {
    /// Decoder emits logits.
    Bernoulli,
    /// Decoder emits the mean; unit variance.
    Gaussian,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VaeConfig {
    pub input_dim: usize,
    /// Length of `z`. For [`PosteriorKind::Vmf`] this is the ambient
    /// dimension `m`, so the code lives on `S^{m−1}`.
    pub latent_dim: usize,
    /// Encoder widths; the decoder mirrors them.
    pub hidden: Vec<usize>,
    pub posterior: PosteriorKind,
    pub likelihood: Likelihood,
    pub activation: Activation,
}

impl VaeConfig {
    pub fn new(input_dim: usize, latent_dim: usize, posterior: PosteriorKind) -> Self {
        Self {
            input_dim,
            latent_dim,
            hidden: vec![256, 128],
            posterior,
            likelihood: Likelihood::Bernoulli,
            activation: Activation::Relu,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.input_dim == 0 || self.latent_dim == 0 {
            return Err(domain("input and latent dimensions must be positive"));
        }
        if self.posterior == PosteriorKind::Vmf && self.latent_dim < 2 {
            return Err(domain("a vMF code needs latent_dim >= 2"));
        }
        if self.hidden.contains(&0) {
            return Err(domain("hidden widths must be positive"));
        }
        Ok(())
    }

    fn head_widths(&self) -> Vec<usize> {
        match self.posterior {
            PosteriorKind::Vmf => vec![self.latent_dim, 1],
            PosteriorKind::Normal => vec![self.latent_dim, self.latent_dim],
            PosteriorKind::Ae => vec![self.latent_dim],
        }
    }
}

/// Per-datapoint averages of one pass over a batch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ElboReport {
    /// Reconstruction term `E_q[log p(x|z)]`.
    pub re: f64,
    /// `KL(q(z|x) ‖ p(z))`.
    pub kl: f64,
    /// `re − β·kl`, the quantity being maximized; the plain ELBO at `β = 1`.
    pub elbo: f64,
    /// Weight of the KL term.
    pub beta: f64,
    /// Importance-sampled `log p(x)`, when computed.
    pub ll_estimate: Option<f64>,
}

/// Knobs of a single gradient evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepOptions {
    pub beta: f64,
    /// Posterior samples per datapoint.
    pub samples: usize,
    /// Use the rejection path on `S²` too.
    pub force_rejection: bool,
    pub gradient: GradientOptions,
}

impl Default for StepOptions {
    fn default() -> Self {
        Self { beta: 1.0, samples: 1, force_rejection: false, gradient: GradientOptions::default() }
    }
}

/// `min(1, step/warmup)·β`; no warm-up when `warmup == 0`.
pub fn warmup_beta(step: u64, warmup: u64, beta: f64) -> f64 {
    if warmup == 0 {
        beta
    } else {
        (step as f64 / warmup as f64).min(1.0) * beta
    }
}

/// Encoder statistics of a batch.
#[derive(Debug, Clone, PartialEq)]
pub struct Encoding {
    /// `μ` (unit rows), the Gaussian mean, or the code.
    pub location: Tensor,
    /// `κ` (n x 1) or `log σ²` (n x d); `None` for the autoencoder.
    pub spread: Option<Tensor>,
}

/// Encoder MLP, posterior heads and decoder MLP.
#[derive(Debug, Clone, PartialEq)]
pub struct Vae {
    config: VaeConfig,
    pub(crate) encoder: Mlp,
    pub(crate) heads: Vec<Dense>,
    pub(crate) decoder: Mlp,
}

struct HeadVars {
    location: Var,
    spread: Option<Var>,
}

struct Recorded {
    tape: Tape,
    params: Vec<Var>,
    heads: HeadVars,
}

impl Vae {
    /// Glorot-initialized model.
    pub fn new(config: VaeConfig, rng: &mut Rng) -> Result<Self> {
        config.validate()?;
        let mut enc = vec![config.input_dim];
        enc.extend(&config.hidden);
        let encoder = Mlp::glorot(&enc, config.activation, true, rng);
        let top = *enc.last().expect("non-empty");
        let heads = config.head_widths().into_iter().map(|w| Dense::glorot(top, w, rng)).collect();
        let mut dec = vec![config.latent_dim];
        dec.extend(config.hidden.iter().rev());
        dec.push(config.input_dim);
        let decoder = Mlp::glorot(&dec, config.activation, false, rng);
        Ok(Self { config, encoder, heads, decoder })
    }

    /// Model with all-zero parameters, for loading.
    pub(crate) fn zeros(config: VaeConfig) -> Result<Self> {
        config.validate()?;
        let mut enc = vec![config.input_dim];
        enc.extend(&config.hidden);
        let encoder = Mlp::zeros(&enc, config.activation, true);
        let top = *enc.last().expect("non-empty");
        let heads = config.head_widths().into_iter().map(|w| Dense::zeros(top, w)).collect();
        let mut dec = vec![config.latent_dim];
        dec.extend(config.hidden.iter().rev());
        dec.push(config.input_dim);
        let decoder = Mlp::zeros(&dec, config.activation, false);
        Ok(Self { config, encoder, heads, decoder })
    }

    pub fn config(&self) -> &VaeConfig {
        &self.config
    }

    /// Parameters in a fixed order: encoder, heads, decoder; weight before
    /// bias.
    pub fn params(&self) -> Vec<&Tensor> {
        let mut out = self.encoder.tensors();
        out.extend(self.heads.iter().flat_map(|h| [&h.w, &h.b]));
        out.extend(self.decoder.tensors());
        out
    }

    pub fn params_mut(&mut self) -> Vec<&mut Tensor> {
        let mut out = self.encoder.tensors_mut();
        out.extend(self.heads.iter_mut().flat_map(|h| [&mut h.w, &mut h.b]));
        out.extend(self.decoder.tensors_mut());
        out
    }

    pub fn num_params(&self) -> usize {
        self.params().iter().map(|t| t.len()).sum()
    }

    fn check_input(&self, x: &Tensor) -> Result<()> {
        if x.cols() != self.config.input_dim {
            return Err(Error::DimensionMismatch { expected: self.config.input_dim, actual: x.cols() });
        }
        if x.rows() == 0 {
            return Err(domain("empty batch"));
        }
        Ok(())
    }

    fn record_encoder(&self, x: &Tensor) -> Recorded {
        let mut tape = Tape::new();
        let mut params = Vec::new();
        let xv = tape.constant(x.clone());
        let h = self.encoder.forward(&mut tape, xv, &mut params);
        let outs: Vec<Var> = self.heads.iter().map(|d| d.forward(&mut tape, h, &mut params)).collect();
        let heads = match self.config.posterior {
            PosteriorKind::Vmf => {
                let mu = tape.normalize_rows(outs[0]);
                let sp = tape.softplus(outs[1]);
                let kappa = tape.add_scalar(sp, 1.0);
                HeadVars { location: mu, spread: Some(kappa) }
            }
            PosteriorKind::Normal => HeadVars { location: outs[0], spread: Some(outs[1]) },
            PosteriorKind::Ae => HeadVars { location: outs[0], spread: None },
        };
        Recorded { tape, params, heads }
    }

    /// Posterior statistics for each row of `x`.
    pub fn encode(&self, x: &Tensor) -> Result<Encoding> {
        self.check_input(x)?;
        let rec = self.record_encoder(x);
        Ok(Encoding {
            location: rec.tape.value(rec.heads.location).clone(),
            spread: rec.heads.spread.map(|v| rec.tape.value(v).clone()),
        })
    }

    /// Decoder output (logits or means) for codes `z`.
    pub fn decode(&self, z: &Tensor) -> Result<Tensor> {
        if z.cols() != self.config.latent_dim {
            return Err(Error::DimensionMismatch { expected: self.config.latent_dim, actual: z.cols() });
        }
        let mut tape = Tape::new();
        let zv = tape.leaf(z.clone());
        let out = self.decoder.forward(&mut tape, zv, &mut Vec::new());
        Ok(tape.value(out).clone())
    }

    fn loglik(&self, tape: &mut Tape, out: Var, x: &Tensor) -> Var {
        match self.config.likelihood {
            Likelihood::Bernoulli => tape.bernoulli_loglik(out, x),
            Likelihood::Gaussian => tape.gaussian_loglik(out, x),
        }
    }

    /// Single-pass estimate of the batch objective and its gradient (ascent
    /// direction, averaged over rows) for every parameter in [`Vae::params`]
    /// order.
    pub fn gradient(&self, x: &Tensor, rng: &mut Rng, opts: StepOptions) -> Result<(ElboReport, Vec<Tensor>)> {
        self.check_input(x)?;
        if opts.samples == 0 {
            return Err(domain("at least one posterior sample is required"));
        }
        let x = if opts.samples > 1 {
            let idx: Vec<usize> = (0..x.rows()).flat_map(|i| std::iter::repeat_n(i, opts.samples)).collect();
            x.gather_rows(&idx)
        } else {
            x.clone()
        };
        let n = x.rows();
        let mut rec = self.record_encoder(&x);
        let beta = opts.beta;

        let (re_sum, kl_sum, grads) = match self.config.posterior {
            PosteriorKind::Vmf => self.vmf_pass(&mut rec, &x, rng, opts)?,
            PosteriorKind::Normal => {
                let mean = rec.heads.location;
                let log_var = rec.heads.spread.expect("normal head");
                let (rows, d) = rec.tape.value(mean).shape();
                let eps: Vec<f64> = (0..rows * d).map(|_| rng.normal()).collect();
                let tape = &mut rec.tape;
                let eps = tape.constant(Tensor::from_vec(rows, d, eps)?);
                let half = tape.scale(log_var, 0.5);
                let sd = tape.exp(half);
                let noise = tape.mul(sd, eps);
                let z = tape.add(mean, noise);
                let out = self.decoder.forward(tape, z, &mut rec.params);
                let ll = self.loglik(tape, out, &x);
                let m2 = tape.mul(mean, mean);
                let var = tape.exp(log_var);
                let t = tape.add(m2, var);
                let t = tape.sub(t, log_var);
                let t = tape.add_scalar(t, -1.0);
                let s = tape.sum_cols(t);
                let kl = tape.scale(s, 0.5);
                let grads = tape.backward(&[(ll, Tensor::full(n, 1, 1.0)), (kl, Tensor::full(n, 1, -beta))]);
                (tape.value(ll).sum(), tape.value(kl).sum(), vec![grads])
            }
            PosteriorKind::Ae => {
                let tape = &mut rec.tape;
                let out = self.decoder.forward(tape, rec.heads.location, &mut rec.params);
                let ll = self.loglik(tape, out, &x);
                let grads = tape.backward(&[(ll, Tensor::full(n, 1, 1.0))]);
                (tape.value(ll).sum(), 0.0, vec![grads])
            }
        };

        let scale = 1.0 / n as f64;
        let mut out = Vec::with_capacity(rec.params.len());
        for &p in &rec.params {
            let value = rec.tape.value(p);
            let mut g = Tensor::zeros(value.rows(), value.cols());
            for gr in &grads {
                if let Some(t) = gr.get(p) {
                    g.add_assign(t);
                }
            }
            g.data_mut().iter_mut().for_each(|v| *v *= scale);
            out.push(g);
        }
        let re = re_sum * scale;
        let kl = kl_sum * scale;
        let report = ElboReport { re, kl, elbo: re - beta * kl, beta, ll_estimate: None };
        if !(report.elbo.is_finite() && out.iter().all(Tensor::all_finite)) {
            return Err(Error::NonFinite("training objective or gradient".into()));
        }
        Ok((report, out))
    }

    /// Draws `z`, runs the decoder and returns `(Σ re, Σ kl, grads)`. The
    /// decoder is differentiated first; the sampler's `(μ, κ)` gradients
    /// are then pushed through the encoder by a second sweep.
    fn vmf_pass(
        &self,
        rec: &mut Recorded,
        x: &Tensor,
        rng: &mut Rng,
        opts: StepOptions,
    ) -> Result<(f64, f64, Vec<Grads>)> {
        let m = self.config.latent_dim;
        let mu_var = rec.heads.location;
        let kappa_var = rec.heads.spread.expect("vmf head");
        let n = x.rows();
        let mut dists = Vec::with_capacity(n);
        let mut traces = Vec::with_capacity(n);
        let mut z = Tensor::zeros(n, m);
        for r in 0..n {
            let mu = rec.tape.value(mu_var).row(r).to_vec();
            let kappa = rec.tape.value(kappa_var).get(r, 0);
            let dist = VonMisesFisher::new(mu, kappa)?;
            let trace = VmfSampler::new(&dist)?.force_rejection(opts.force_rejection).sample(rng)?;
            z.row_mut(r).copy_from_slice(&trace.z);
            dists.push(dist);
            traces.push(trace);
        }
        let tape = &mut rec.tape;
        let zv = tape.leaf(z);
        let out = self.decoder.forward(tape, zv, &mut rec.params);
        let ll = self.loglik(tape, out, x);
        let g_dec = tape.backward(&[(ll, Tensor::full(n, 1, 1.0))]);
        let dz = g_dec.get(zv).expect("decoder reaches z").clone();

        let mut seed_mu = Tensor::zeros(n, m);
        let mut seed_kappa = Tensor::zeros(n, 1);
        let mut kl_sum = 0.0;
        for r in 0..n {
            let f = tape.value(ll).get(r, 0);
            let g = reparam_gradient_with(&traces[r], &dists[r], f, dz.row(r), opts.gradient)?;
            let kappa = dists[r].kappa();
            kl_sum += kl_unchecked(m, kappa);
            seed_mu.row_mut(r).copy_from_slice(&g.grad_mu);
            seed_kappa.set(r, 0, g.grad_kappa - opts.beta * kl_grad_unchecked(m, kappa));
        }
        let g_enc = tape.backward(&[(mu_var, seed_mu), (kappa_var, seed_kappa)]);
        Ok((tape.value(ll).sum(), kl_sum, vec![g_dec, g_enc]))
    }

    /// One Adam step on the batch objective. Fails without touching the
    /// parameters when the objective or gradient is not finite.
    pub fn train_step(&mut self, x: &Tensor, rng: &mut Rng, opt: &mut Adam, opts: StepOptions) -> Result<ElboReport> {
        let (report, grads) = self.gradient(x, rng, opts)?;
        let descent: Vec<Tensor> = grads.iter().map(|g| g.map(|v| -v)).collect();
        opt.step(self.params_mut(), &descent);
        Ok(report)
    }

    /// Batch objective without a gradient, averaged over rows.
    pub fn evaluate(&self, x: &Tensor, rng: &mut Rng, beta: f64) -> Result<ElboReport> {
        let (re_rows, kl_rows) = self.evaluate_rows(x, rng)?;
        let n = x.rows() as f64;
        let re = re_rows.iter().sum::<f64>() / n;
        let kl = kl_rows.iter().sum::<f64>() / n;
        Ok(ElboReport { re, kl, elbo: re - beta * kl, beta, ll_estimate: None })
    }

    /// Single-sample reconstruction term and analytic KL for every row.
    pub fn evaluate_rows(&self, x: &Tensor, rng: &mut Rng) -> Result<(Vec<f64>, Vec<f64>)> {
        let (z, kl) = self.sample_posterior(x, rng)?;
        Ok((self.row_loglik(&z, x)?, kl))
    }

    /// One draw `z ~ q(z|x)` per row together with the row's KL to the
    /// prior. The autoencoder returns its code and zero KL.
    pub fn sample_posterior(&self, x: &Tensor, rng: &mut Rng) -> Result<(Tensor, Vec<f64>)> {
        let enc = self.encode(x)?;
        let n = x.rows();
        let m = self.config.latent_dim;
        let mut z = enc.location.clone();
        let mut kl = vec![0.0; n];
        match self.config.posterior {
            PosteriorKind::Vmf => {
                let kappa = enc.spread.as_ref().expect("vmf head");
                for r in 0..n {
                    let dist = VonMisesFisher::new(enc.location.row(r).to_vec(), kappa.get(r, 0))?;
                    let trace = VmfSampler::new(&dist)?.sample(rng)?;
                    z.row_mut(r).copy_from_slice(&trace.z);
                    kl[r] = kl_unchecked(m, dist.kappa());
                }
            }
            PosteriorKind::Normal => {
                let lv = enc.spread.as_ref().expect("normal head");
                for r in 0..n {
                    for c in 0..m {
                        let sd = (0.5 * lv.get(r, c)).exp();
                        z.set(r, c, enc.location.get(r, c) + sd * rng.normal());
                    }
                    kl[r] = crate::vmf::gaussian_kl_std_normal(enc.location.row(r), lv.row(r))?;
                }
            }
            PosteriorKind::Ae => {}
        }
        Ok((z, kl))
    }

    fn row_loglik(&self, z: &Tensor, x: &Tensor) -> Result<Vec<f64>> {
        let mut tape = Tape::new();
        let zv = tape.leaf(z.clone());
        let out = self.decoder.forward(&mut tape, zv, &mut Vec::new());
        let ll = self.loglik(&mut tape, out, x);
        Ok(tape.value(ll).data().to_vec())
    }

    /// `log p(x|z) + log p(z) − log q(z|x)` for each code row of `z`, all
    /// scored against the single datapoint `x` (1 x input_dim).
    pub fn log_weights(&self, x: &Tensor, z: &Tensor) -> Result<Vec<f64>> {
        self.check_input(x)?;
        if x.rows() != 1 {
            return Err(Error::Shape(format!("expected one datapoint, got {}", x.rows())));
        }
        let enc = self.encode(x)?;
        let m = self.config.latent_dim;
        let mut log_ratio = vec![0.0; z.rows()];
        match self.config.posterior {
            PosteriorKind::Vmf => {
                let kappa = enc.spread.as_ref().expect("vmf head").get(0, 0);
                let dist = VonMisesFisher::new(enc.location.row(0).to_vec(), kappa)?;
                let log_prior = -log_surface_area(m, 1.0)?;
                for (s, lr) in log_ratio.iter_mut().enumerate() {
                    *lr = log_prior - dist.log_prob(z.row(s))?;
                }
            }
            PosteriorKind::Normal => {
                let mean = enc.location.row(0);
                let lv = enc.spread.as_ref().expect("normal head").row(0);
                for (s, lr) in log_ratio.iter_mut().enumerate() {
                    // log N(z; 0, 1) − log N(z; μ, σ²); the 2π terms cancel
                    *lr = z
                        .row(s)
                        .iter()
                        .zip(mean.iter().zip(lv))
                        .map(|(&zc, (&mc, &l))| {
                            let e = (zc - mc) * (-0.5 * l).exp();
                            -0.5 * zc * zc + 0.5 * e * e + 0.5 * l
                        })
                        .sum();
                }
            }
            PosteriorKind::Ae => {
                return Err(domain("an autoencoder has no posterior to importance-sample"));
            }
        }
        let target = x.gather_rows(&vec![0; z.rows()]);
        let ll = self.row_loglik(z, &target)?;
        Ok(ll.iter().zip(&log_ratio).map(|(a, b)| a + b).collect())
    }

    /// Importance-sampled `log p(x)` per row with `samples` draws from the
    /// posterior as proposal.
    pub fn importance_ll(&self, x: &Tensor, samples: usize, rng: &mut Rng) -> Result<Vec<f64>> {
        self.check_input(x)?;
        if samples == 0 {
            return Err(domain("at least one importance sample is required"));
        }
        if self.config.posterior == PosteriorKind::Ae {
            return Err(domain("an autoencoder has no posterior to importance-sample"));
        }
        let enc = self.encode(x)?;
        let m = self.config.latent_dim;
        let mut out = Vec::with_capacity(x.rows());
        for r in 0..x.rows() {
            let mut z = Tensor::zeros(samples, m);
            match self.config.posterior {
                PosteriorKind::Vmf => {
                    let kappa = enc.spread.as_ref().expect("vmf head").get(r, 0);
                    let dist = VonMisesFisher::new(enc.location.row(r).to_vec(), kappa)?;
                    let sampler = VmfSampler::new(&dist)?;
                    for s in 0..samples {
                        z.row_mut(s).copy_from_slice(&sampler.sample(rng)?.z);
                    }
                }
                _ => {
                    let mean = enc.location.row(r);
                    let lv = enc.spread.as_ref().expect("normal head").row(r);
                    for s in 0..samples {
                        for c in 0..m {
                            z.set(s, c, mean[c] + (0.5 * lv[c]).exp() * rng.normal());
                        }
                    }
                }
            }
            let lw = self.log_weights(&x.gather_rows(&[r]), &z)?;
            out.push(log_sum_exp(&lw) - (samples as f64).ln());
        }
        Ok(out)
    }
}

/// `log Σ exp(xᵢ)`, stable for large magnitudes.
pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    max + xs.iter().map(|x| (x - max).exp()).sum::<f64>().ln()
}
