//! End-to-end pipelines: the circle-recovery toy problem and the MNIST
//! comparison between Gaussian and hyperspherical latents.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::Path;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{domain, Error, Result};
use crate::io::{self, ImageSet, Mnist};
use crate::nn::{Activation, Adam, ElboReport, Likelihood, PosteriorKind, StepOptions, Tensor, Vae, VaeConfig};
use crate::sampler::{sample_vmf, Rng};
use crate::stats::{chi_square_gof, circular_recovery_score, ks_one_sample, mean_and_se, ChiSquare, KolmogorovSmirnov};
use crate::vmf::VonMisesFisher;

/// Map from the circle into the observation space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ToyTransform {
    /// `x = z`; needs `ambient_dim == 2`.
    Identity,
    /// `x = B tanh(A z + a)` with Gaussian `A` (scaled by `input_scale`),
    /// `a` and `B` (standard deviation `output_scale/√hidden`), drawn from
    /// `transform_seed`.
    RandomTanh { hidden: usize, input_scale: f64, output_scale: f64 },
}

/// Mixture of three vMFs on the circle pushed through a noisy nonlinear map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToySpec {
    /// Mean angles in radians.
    pub component_means: [f64; 3],
    pub component_kappas: [f64; 3],
    pub n_train: usize,
    pub n_val: usize,
    pub ambient_dim: usize,
    pub transform_seed: u64,
    pub noise_sigma: f64,
    pub transform: ToyTransform,
}

impl Default for ToySpec {
    fn default() -> Self {
        Self {
            component_means: [0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0],
            component_kappas: [1.0, 1.0, 1.0],
            n_train: 2000,
            n_val: 500,
            ambient_dim: 100,
            transform_seed: 7,
            noise_sigma: 0.05,
            transform: ToyTransform::RandomTanh { hidden: 32, input_scale: 2.0, output_scale: 0.25 },
        }
    }
}

impl ToySpec {
    pub fn validate(&self) -> Result<()> {
        if self.ambient_dim < 2 {
            return Err(domain("ambient_dim must be at least 2"));
        }
        if self.component_kappas.iter().any(|&k| !(k > 0.0)) {
            return Err(domain("component concentrations must be positive"));
        }
        if self.noise_sigma < 0.0 {
            return Err(domain("noise_sigma must be non-negative"));
        }
        match self.transform {
            ToyTransform::Identity if self.ambient_dim != 2 => {
                Err(domain("the identity transform needs ambient_dim = 2"))
            }
            ToyTransform::RandomTanh { hidden: 0, .. } => Err(domain("transform needs a hidden width")),
            _ => Ok(()),
        }
    }
}

/// Observations with their latent ground truth.
#[derive(Debug, Clone, PartialEq)]
pub struct ToyData {
    pub data: Tensor,
    /// True angle of each row in `(−π, π]`.
    pub angles: Vec<f64>,
    /// Mixture component of each row.
    pub labels: Vec<usize>,
}

impl ToyData {
    fn rows(&self, range: std::ops::Range<usize>) -> ToyData {
        let idx: Vec<usize> = range.collect();
        ToyData {
            data: self.data.gather_rows(&idx),
            angles: idx.iter().map(|&i| self.angles[i]).collect(),
            labels: idx.iter().map(|&i| self.labels[i]).collect(),
        }
    }

    /// Training rows first, then validation rows.
    pub fn split(&self, n_train: usize) -> (ToyData, ToyData) {
        (self.rows(0..n_train), self.rows(n_train..self.angles.len()))
    }
}

struct TanhMap {
    a: Vec<[f64; 2]>,
    bias: Vec<f64>,
    b: Tensor,
}

impl TanhMap {
    fn new(hidden: usize, out: usize, input_scale: f64, output_scale: f64, seed: u64) -> Self {
        let mut rng = Rng::new(seed);
        let a = (0..hidden).map(|_| [input_scale * rng.normal(), input_scale * rng.normal()]).collect();
        let bias = (0..hidden).map(|_| rng.normal()).collect();
        let sd = output_scale / (hidden as f64).sqrt();
        let b = Tensor::from_vec(hidden, out, (0..hidden * out).map(|_| sd * rng.normal()).collect()).expect("shape");
        Self { a, bias, b }
    }

    fn apply(&self, z: [f64; 2], out: &mut [f64]) {
        out.iter_mut().for_each(|o| *o = 0.0);
        for (j, (w, c)) in self.a.iter().zip(&self.bias).enumerate() {
            let h = (w[0] * z[0] + w[1] * z[1] + c).tanh();
            out.iter_mut().zip(self.b.row(j)).for_each(|(o, bj)| *o += h * bj);
        }
    }
}

/// Draws `n_train + n_val` rows.
pub fn generate_toy_dataset(spec: &ToySpec, rng: &mut Rng) -> Result<ToyData> {
    spec.validate()?;
    let n = spec.n_train + spec.n_val;
    let d = spec.ambient_dim;
    let map = match spec.transform {
        ToyTransform::RandomTanh { hidden, input_scale, output_scale } => {
            Some(TanhMap::new(hidden, d, input_scale, output_scale, spec.transform_seed))
        }
        ToyTransform::Identity => None,
    };
    let comps = spec
        .component_means
        .iter()
        .zip(&spec.component_kappas)
        .map(|(&t, &k)| VonMisesFisher::new(vec![t.cos(), t.sin()], k))
        .collect::<Result<Vec<_>>>()?;
    let mut data = Tensor::zeros(n, d);
    let mut angles = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for r in 0..n {
        let k = ((rng.uniform() * 3.0) as usize).min(2);
        let z = sample_vmf(rng, &comps[k])?.z;
        let row = data.row_mut(r);
        match &map {
            Some(map) => map.apply([z[0], z[1]], row),
            None => row.copy_from_slice(&z),
        }
        if spec.noise_sigma > 0.0 {
            row.iter_mut().for_each(|x| *x += spec.noise_sigma * rng.normal());
        }
        angles.push(z[1].atan2(z[0]));
        labels.push(k);
    }
    Ok(ToyData { data, angles, labels })
}

/// Optimization settings shared by both pipelines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub epochs: usize,
    pub batch_size: usize,
    pub lr: f64,
    pub hidden: Vec<usize>,
    /// Epochs over which β ramps linearly from 0.
    pub warmup_epochs: usize,
    /// Stop after this many epochs without a better validation ELBO and
    /// restore the best parameters.
    pub patience: Option<usize>,
    /// Posterior samples per datapoint and step.
    pub samples: usize,
}

impl TrainConfig {
    pub fn toy() -> Self {
        Self {
            epochs: 60,
            batch_size: 64,
            lr: 1e-3,
            hidden: vec![64, 32],
            warmup_epochs: 0,
            patience: None,
            samples: 1,
        }
    }
}

/// One line of the metrics log.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricRecord {
    pub epoch: usize,
    pub split: String,
    pub re: f64,
    pub kl: f64,
    pub elbo: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ll: Option<f64>,
}

impl MetricRecord {
    fn from_report(epoch: usize, split: &str, r: &ElboReport) -> Self {
        Self { epoch, split: split.into(), re: r.re, kl: r.kl, elbo: r.elbo, ll: r.ll_estimate }
    }
}

/// Mini-batch Adam on `train`, returning the per-epoch metrics. With
/// `binarize` set, every epoch sees a fresh Bernoulli draw of the pixels.
#[allow(clippy::too_many_arguments)]
pub fn fit(
    vae: &mut Vae,
    train: &Tensor,
    val: Option<&Tensor>,
    cfg: &TrainConfig,
    beta: f64,
    binarize: bool,
    rng: &mut Rng,
) -> Result<Vec<MetricRecord>> {
    if cfg.batch_size == 0 {
        return Err(domain("batch_size must be positive"));
    }
    let mut opt = Adam::new(cfg.lr);
    let mut order: Vec<usize> = (0..train.rows()).collect();
    let steps_per_epoch = train.rows().div_ceil(cfg.batch_size) as u64;
    let warmup_steps = cfg.warmup_epochs as u64 * steps_per_epoch;
    let mut history = Vec::new();
    let mut best: Option<(f64, Vae)> = None;
    let mut since_best = 0;
    for epoch in 1..=cfg.epochs {
        let epoch_data = if binarize { io::binarize(train, rng) } else { train.clone() };
        order.shuffle(rng);
        let (mut re, mut kl, mut elbo, mut count) = (0.0, 0.0, 0.0, 0.0);
        for chunk in order.chunks(cfg.batch_size) {
            let batch = epoch_data.gather_rows(chunk);
            let b = crate::nn::warmup_beta(opt.steps(), warmup_steps, beta);
            let opts = StepOptions { beta: b, samples: cfg.samples, ..StepOptions::default() };
            let r = vae.train_step(&batch, rng, &mut opt, opts)?;
            let w = chunk.len() as f64;
            re += w * r.re;
            kl += w * r.kl;
            elbo += w * (r.re - r.kl);
            count += w;
        }
        history.push(MetricRecord {
            epoch,
            split: "train".into(),
            re: re / count,
            kl: kl / count,
            elbo: elbo / count,
            ll: None,
        });
        if let Some(val) = val {
            let v = if binarize { io::binarize(val, rng) } else { val.clone() };
            let r = vae.evaluate(&v, rng, 1.0)?;
            history.push(MetricRecord::from_report(epoch, "val", &r));
            if let Some(patience) = cfg.patience {
                if best.as_ref().is_none_or(|(b, _)| r.elbo > *b) {
                    best = Some((r.elbo, vae.clone()));
                    since_best = 0;
                } else {
                    since_best += 1;
                    if since_best >= patience {
                        break;
                    }
                }
            }
        }
    }
    if let Some((_, b)) = best {
        *vae = b;
    }
    Ok(history)
}

/// Models compared on the toy problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ToyModel {
    #[serde(rename = "ae")]
    Ae,
    #[serde(rename = "nvae")]
    NVae,
    #[serde(rename = "nvae-beta0.1")]
    NVaeBeta01,
    #[serde(rename = "svae")]
    SVae,
}

impl ToyModel {
    pub const ALL: [ToyModel; 4] = [ToyModel::Ae, ToyModel::NVae, ToyModel::NVaeBeta01, ToyModel::SVae];

    pub fn name(self) -> &'static str {
        match self {
            ToyModel::Ae => "ae",
            ToyModel::NVae => "nvae",
            ToyModel::NVaeBeta01 => "nvae-beta0.1",
            ToyModel::SVae => "svae",
        }
    }

    pub fn posterior(self) -> PosteriorKind {
        match self {
            ToyModel::Ae => PosteriorKind::Ae,
            ToyModel::NVae | ToyModel::NVaeBeta01 => PosteriorKind::Normal,
            ToyModel::SVae => PosteriorKind::Vmf,
        }
    }

    pub fn beta(self) -> f64 {
        if self == ToyModel::NVaeBeta01 {
            0.1
        } else {
            1.0
        }
    }
}

impl std::str::FromStr for ToyModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ToyModel::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| domain(format!("unknown toy model {s:?}; expected ae, nvae, nvae-beta0.1 or svae")))
    }
}

/// Number of equal-width angle bins in the latent uniformity test.
pub const ANGLE_BINS: usize = 12;

/// Results of one toy run, computed on the validation split.
#[derive(Debug, Clone)]
pub struct ToyOutcome {
    pub model: ToyModel,
    /// Circular correlation between true and recovered angles, maximized
    /// over rotation and reflection.
    pub recovery_score: f64,
    pub report: ElboReport,
    /// χ² test of aggregate-posterior angles against the uniform circle
    /// (S-VAE).
    pub angle_uniformity: Option<ChiSquare>,
    /// KS test of the embedding radii (posterior means) against the prior's
    /// radius law, Rayleigh(1) in two dimensions (Gaussian latents).
    pub radius_fit: Option<KolmogorovSmirnov>,
    /// Median embedding radius (Gaussian latents).
    pub median_radius: Option<f64>,
    /// Posterior location of each validation row.
    pub latents: Tensor,
    pub val: ToyData,
    pub history: Vec<MetricRecord>,
}

/// Median radius of a standard bivariate normal, `√(2 ln 2)`.
pub fn prior_median_radius() -> f64 {
    (2.0 * std::f64::consts::LN_2).sqrt()
}

fn derive(seed: u64, stream: u64) -> Rng {
    Rng::stream(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15), stream)
}

/// Trains `model` on the toy data drawn from `spec` and scores its latent
/// space on the validation split.
pub fn run_toy(spec: &ToySpec, model: ToyModel, cfg: &TrainConfig, seed: u64) -> Result<ToyOutcome> {
    let all = generate_toy_dataset(spec, &mut derive(seed, 1))?;
    let (train, val) = all.split(spec.n_train);
    let vae_cfg = VaeConfig {
        input_dim: spec.ambient_dim,
        latent_dim: 2,
        hidden: cfg.hidden.clone(),
        posterior: model.posterior(),
        likelihood: Likelihood::Gaussian,
        activation: Activation::Relu,
    };
    let mut vae = Vae::new(vae_cfg, &mut derive(seed, 0))?;
    let mut rng = derive(seed, 2);
    let history = fit(&mut vae, &train.data, Some(&val.data), cfg, model.beta(), false, &mut rng)?;

    let report = vae.evaluate(&val.data, &mut derive(seed, 3), 1.0)?;
    let latents = vae.encode(&val.data)?.location;
    let recovered: Vec<f64> = (0..latents.rows()).map(|r| latents.get(r, 1).atan2(latents.get(r, 0))).collect();
    let recovery_score = circular_recovery_score(&val.angles, &recovered)?;

    // aggregate posterior: one draw per validation row
    let (z, _) = vae.sample_posterior(&val.data, &mut derive(seed, 4))?;
    let (mut angle_uniformity, mut radius_fit, mut median_radius) = (None, None, None);
    match model.posterior() {
        PosteriorKind::Vmf => {
            let mut counts = vec![0u64; ANGLE_BINS];
            for r in 0..z.rows() {
                let a = z.get(r, 1).atan2(z.get(r, 0));
                let b = (((a + PI) / (2.0 * PI)) * ANGLE_BINS as f64) as usize;
                counts[b.min(ANGLE_BINS - 1)] += 1;
            }
            let expected = vec![z.rows() as f64 / ANGLE_BINS as f64; ANGLE_BINS];
            angle_uniformity = Some(chi_square_gof(&counts, &expected, 5.0)?);
        }
        PosteriorKind::Normal => {
            let mut radii: Vec<f64> =
                (0..latents.rows()).map(|r| latents.get(r, 0).hypot(latents.get(r, 1))).collect();
            radius_fit = Some(ks_one_sample(&radii, |r| -(-0.5 * r * r).exp_m1())?);
            radii.sort_by(f64::total_cmp);
            median_radius = Some(radii[radii.len() / 2]);
        }
        PosteriorKind::Ae => {}
    }
    Ok(ToyOutcome {
        model,
        recovery_score,
        report,
        angle_uniformity,
        radius_fit,
        median_radius,
        latents,
        val,
        history,
    })
}

/// Outcome of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunStatus {
    Ok,
    Failed,
}

/// Everything needed to reproduce and locate the outputs of a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub experiment: String,
    /// SHA-256 of the canonical JSON of the resolved configuration.
    pub config_hash: String,
    pub seed: u64,
    pub revision: String,
    pub status: RunStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    pub metric_files: Vec<String>,
    pub summary: BTreeMap<String, f64>,
}

/// Version string recorded in manifests; `SVAE_REVISION` at build time
/// overrides the crate version.
pub fn revision() -> String {
    option_env!("SVAE_REVISION").map_or_else(|| format!("v{}", env!("CARGO_PKG_VERSION")), str::to_string)
}

/// Hex SHA-256 of the JSON serialization of `config`.
pub fn config_hash<T: Serialize>(config: &T) -> Result<String> {
    let bytes = serde_json::to_vec(config)?;
    Ok(Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect())
}

#[derive(Serialize)]
struct ToyRunConfig<'a> {
    experiment: &'static str,
    model: ToyModel,
    seed: u64,
    spec: &'a ToySpec,
    train: &'a TrainConfig,
}

fn failed_manifest(experiment: &str, hash: String, seed: u64, err: &Error) -> RunManifest {
    RunManifest {
        experiment: experiment.into(),
        config_hash: hash,
        seed,
        revision: revision(),
        status: RunStatus::Failed,
        failure: Some(err.to_string()),
        metric_files: Vec::new(),
        summary: BTreeMap::new(),
    }
}

/// Runs [`run_toy`] and writes `config.json`, `metrics.ndjson`,
/// `latents.csv` and `manifest.json` into `out_dir`. A diverged run yields
/// a manifest with status `failed`; other errors are returned.
pub fn run_toy_experiment(
    spec: &ToySpec,
    model: ToyModel,
    cfg: &TrainConfig,
    seed: u64,
    out_dir: &Path,
) -> Result<(RunManifest, Option<ToyOutcome>)> {
    std::fs::create_dir_all(out_dir)?;
    let config = ToyRunConfig { experiment: "toy", model, seed, spec, train: cfg };
    io::write_json(&out_dir.join("config.json"), &config)?;
    let hash = config_hash(&config)?;
    let outcome = match run_toy(spec, model, cfg, seed) {
        Ok(o) => o,
        Err(e @ Error::NonFinite(_)) => {
            let m = failed_manifest("toy", hash, seed, &e);
            io::write_json(&out_dir.join("manifest.json"), &m)?;
            return Ok((m, None));
        }
        Err(e) => return Err(e),
    };
    let mut metrics = outcome.history.clone();
    metrics.push(MetricRecord::from_report(cfg.epochs, "final", &outcome.report));
    io::write_ndjson(&out_dir.join("metrics.ndjson"), &metrics)?;
    let rows = (0..outcome.latents.rows()).map(|r| {
        vec![
            r.to_string(),
            outcome.val.labels[r].to_string(),
            io::fmt_f64(outcome.val.angles[r]),
            io::fmt_f64(outcome.latents.get(r, 0)),
            io::fmt_f64(outcome.latents.get(r, 1)),
        ]
    });
    io::write_csv(&out_dir.join("latents.csv"), &["index", "label", "true_angle", "z0", "z1"], rows)?;

    let mut summary = BTreeMap::new();
    summary.insert("recovery_score".into(), outcome.recovery_score);
    summary.insert("re".into(), outcome.report.re);
    summary.insert("kl".into(), outcome.report.kl);
    summary.insert("elbo".into(), outcome.report.elbo);
    if let Some(c) = outcome.angle_uniformity {
        summary.insert("angle_chi2_p".into(), c.p_value);
    }
    if let Some(k) = outcome.radius_fit {
        summary.insert("radius_ks_p".into(), k.p_value);
    }
    if let Some(r) = outcome.median_radius {
        summary.insert("median_radius".into(), r);
    }
    let manifest = RunManifest {
        experiment: "toy".into(),
        config_hash: hash,
        seed,
        revision: revision(),
        status: RunStatus::Ok,
        failure: None,
        metric_files: vec!["config.json".into(), "metrics.ndjson".into(), "latents.csv".into()],
        summary,
    };
    io::write_json(&out_dir.join("manifest.json"), &manifest)?;
    Ok((manifest, Some(outcome)))
}

/// Size and schedule of an MNIST run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MnistBudget {
    pub n_train: usize,
    pub n_val: usize,
    /// Test points scored (ELBO and importance-sampled LL).
    pub n_test: usize,
    pub ll_samples: usize,
    pub train: TrainConfig,
}

impl MnistBudget {
    /// 10k training images, 50 epochs.
    pub fn desk_scale() -> Self {
        Self {
            n_train: 10_000,
            n_val: 1_000,
            n_test: 1_000,
            ll_samples: 500,
            train: TrainConfig {
                epochs: 50,
                batch_size: 64,
                lr: 1e-3,
                hidden: vec![256, 128],
                warmup_epochs: 5,
                patience: Some(50),
                samples: 1,
            },
        }
    }

    /// The full training protocol: 50k/10k split, up to 1000 epochs.
    pub fn full() -> Self {
        Self {
            n_train: 50_000,
            n_val: 10_000,
            n_test: 10_000,
            ll_samples: 500,
            train: TrainConfig {
                epochs: 1000,
                batch_size: 64,
                lr: 1e-3,
                hidden: vec![256, 128],
                warmup_epochs: 100,
                patience: Some(50),
                samples: 1,
            },
        }
    }
}

/// Test-split aggregates of one MNIST run.
#[derive(Debug, Clone)]
pub struct MnistOutcome {
    /// Means over the scored test points; `ll_estimate` is filled.
    pub report: ElboReport,
    pub re_se: f64,
    pub ll_se: f64,
    pub history: Vec<MetricRecord>,
    pub model: Vae,
}

/// Ambient latent size for a posterior with latent dimension `d`: the vMF
/// lives on `S^d ⊂ R^{d+1}`.
pub fn latent_size(d: usize, posterior: PosteriorKind) -> usize {
    if posterior == PosteriorKind::Vmf {
        d + 1
    } else {
        d
    }
}

/// Trains and scores one model on `data`.
pub fn run_mnist(data: &Mnist, d: usize, posterior: PosteriorKind, budget: &MnistBudget, seed: u64) -> Result<MnistOutcome> {
    if posterior == PosteriorKind::Ae {
        return Err(domain("the MNIST comparison needs a variational posterior"));
    }
    let need = budget.n_train + budget.n_val;
    if data.train.len() < need {
        return Err(domain(format!("budget needs {need} training images, data has {}", data.train.len())));
    }
    let train = data.train.images.gather_rows(&(0..budget.n_train).collect::<Vec<_>>());
    let val = data.train.images.gather_rows(&(budget.n_train..need).collect::<Vec<_>>());
    let test: ImageSet = data.test.truncate(budget.n_test);

    let cfg = VaeConfig {
        input_dim: train.cols(),
        latent_dim: latent_size(d, posterior),
        hidden: budget.train.hidden.clone(),
        posterior,
        likelihood: Likelihood::Bernoulli,
        activation: Activation::Relu,
    };
    let mut vae = Vae::new(cfg, &mut derive(seed, 0))?;
    let history = fit(&mut vae, &train, Some(&val), &budget.train, 1.0, true, &mut derive(seed, 2))?;

    let mut eval_rng = derive(seed, 3);
    let x = io::binarize(&test.images, &mut eval_rng);
    let (re_rows, kl_rows) = vae.evaluate_rows(&x, &mut eval_rng)?;
    let ll_rows = vae.importance_ll(&x, budget.ll_samples, &mut eval_rng)?;
    let (re, re_se) = mean_and_se(&re_rows);
    let (kl, _) = mean_and_se(&kl_rows);
    let (ll, ll_se) = mean_and_se(&ll_rows);
    let report = ElboReport { re, kl, elbo: re - kl, beta: 1.0, ll_estimate: Some(ll) };
    Ok(MnistOutcome { report, re_se, ll_se, history, model: vae })
}

#[derive(Serialize)]
struct MnistRunConfig<'a> {
    experiment: &'static str,
    dim: usize,
    posterior: PosteriorKind,
    seed: u64,
    data_source: &'a str,
    budget: &'a MnistBudget,
}

/// Runs [`run_mnist`] and writes `config.json`, `metrics.ndjson`,
/// `model.ckpt` and `manifest.json` into `out_dir`.
pub fn run_mnist_experiment(
    data: &Mnist,
    data_source: &str,
    d: usize,
    posterior: PosteriorKind,
    budget: &MnistBudget,
    seed: u64,
    out_dir: &Path,
) -> Result<(RunManifest, Option<MnistOutcome>)> {
    std::fs::create_dir_all(out_dir)?;
    let config = MnistRunConfig { experiment: "mnist", dim: d, posterior, seed, data_source, budget };
    io::write_json(&out_dir.join("config.json"), &config)?;
    let hash = config_hash(&config)?;
    let outcome = match run_mnist(data, d, posterior, budget, seed) {
        Ok(o) => o,
        Err(e @ Error::NonFinite(_)) => {
            let m = failed_manifest("mnist", hash, seed, &e);
            io::write_json(&out_dir.join("manifest.json"), &m)?;
            return Ok((m, None));
        }
        Err(e) => return Err(e),
    };
    let mut metrics = outcome.history.clone();
    metrics.push(MetricRecord::from_report(budget.train.epochs, "test", &outcome.report));
    io::write_ndjson(&out_dir.join("metrics.ndjson"), &metrics)?;
    crate::nn::checkpoint::save(&outcome.model, &out_dir.join("model.ckpt"))?;
    let r = &outcome.report;
    let summary = BTreeMap::from([
        ("re".to_string(), r.re),
        ("re_se".to_string(), outcome.re_se),
        ("kl".to_string(), r.kl),
        ("elbo".to_string(), r.elbo),
        ("ll".to_string(), r.ll_estimate.unwrap_or(f64::NAN)),
        ("ll_se".to_string(), outcome.ll_se),
    ]);
    let manifest = RunManifest {
        experiment: "mnist".into(),
        config_hash: hash,
        seed,
        revision: revision(),
        status: RunStatus::Ok,
        failure: None,
        metric_files: vec!["config.json".into(), "metrics.ndjson".into(), "model.ckpt".into()],
        summary,
    };
    io::write_json(&out_dir.join("manifest.json"), &manifest)?;
    Ok((manifest, Some(outcome)))
}

/// Synthetic stand-in with the MNIST layout, used when the real files are
/// absent.
pub fn synthetic_mnist(n_train: usize, n_test: usize, seed: u64) -> Mnist {
    let mut rng = derive(seed, 9);
    Mnist { train: io::synthetic_digits(n_train, &mut rng), test: io::synthetic_digits(n_test, &mut rng) }
}
