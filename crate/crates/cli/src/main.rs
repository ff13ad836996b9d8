use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperspherical::experiments::{
    run_mnist_experiment, run_toy_experiment, synthetic_mnist, MnistBudget, RunManifest, RunStatus, ToyModel,
    ToySpec, TrainConfig,
};
use hyperspherical::io::{self, fmt_f64, load_mnist, resolve_data_dir};
use hyperspherical::nn::checkpoint;
use hyperspherical::nn::PosteriorKind;
use hyperspherical::sampler::{Rng, VmfSampler};
use hyperspherical::vmf::{kl_grad_kappa, kl_to_uniform};
use hyperspherical::{Error, VonMisesFisher};
use serde::Serialize;

mod grid;

#[derive(Parser, Debug, Serialize)]
#[command(name = "svae", version, about = "von Mises-Fisher sampling, KL diagnostics and hyperspherical VAEs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
struct Common {
    /// Base random seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Worker threads for grid commands.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
    /// Tabular output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// MNIST directory (falls back to $SVAE_DATA_DIR, then data/mnist).
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Command {
    /// Draw samples from a vMF distribution.
    Sample(SampleArgs),
    /// Mean proposal counts of the rejection sampler over a grid.
    Stats(StatsArgs),
    /// KL to the uniform prior and its κ-derivative.
    Kl(GridArgs),
    /// Analytic KL gradient against central finite differences.
    Gradcheck(GridArgs),
    /// Train a model.
    #[command(subcommand)]
    Train(TrainCommand),
    /// Evaluate a trained model.
    #[command(subcommand)]
    Eval(EvalCommand),
}

#[derive(Args, Debug, Serialize)]
struct SampleArgs {
    /// Ambient dimension (samples lie on S^{m-1}).
    #[arg(long)]
    m: usize,
    #[arg(long, allow_negative_numbers = true)]
    kappa: f64,
    /// Mean direction: `e1` or comma-separated coordinates (renormalized).
    #[arg(long, default_value = "e1")]
    mu: String,
    #[arg(long, default_value_t = 1000)]
    n: usize,
}

#[derive(Args, Debug, Serialize)]
struct StatsArgs {
    /// Ambient dimensions; defaults to 5,10,20,40,100.
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    /// Concentrations; defaults to 1,5,10,50,100,500,1000,5000,10000.
    #[arg(long, value_delimiter = ',')]
    kappa: Vec<f64>,
    /// Sampler runs per cell.
    #[arg(long, default_value_t = 10_000)]
    runs: usize,
}

#[derive(Args, Debug, Serialize)]
struct GridArgs {
    /// Ambient dimensions; defaults to 3,5,10,20,40,64.
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    /// Concentrations; defaults to 0,0.1,1,10,100,1000.
    #[arg(long, value_delimiter = ',')]
    kappa: Vec<f64>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum TrainCommand {
    /// Recovery of a circle embedded in R^100.
    Toy(ToyArgs),
    /// Binarized MNIST.
    Mnist(MnistArgs),
}

#[derive(Args, Debug, Serialize)]
struct ToyArgs {
    /// ae, nvae, nvae-beta0.1 or svae.
    #[arg(long)]
    model: ToyModel,
    #[arg(long)]
    epochs: Option<usize>,
    #[arg(long)]
    n_train: Option<usize>,
    #[arg(long)]
    n_val: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Posterior {
    Vmf,
    Normal,
}

#[derive(Args, Debug, Serialize)]
struct MnistArgs {
    /// Latent dimension; the vMF lives on S^dim.
    #[arg(long)]
    dim: usize,
    #[arg(long, value_enum)]
    posterior: Posterior,
    /// 10k training images and 50 epochs (the default).
    #[arg(long, conflicts_with = "full")]
    desk_scale: bool,
    /// 50k training images and up to 1000 epochs.
    #[arg(long)]
    full: bool,
    /// Use the procedural stand-in instead of MNIST files.
    #[arg(long)]
    synthetic: bool,
    #[arg(long)]
    epochs: Option<usize>,
    #[arg(long)]
    n_train: Option<usize>,
    #[arg(long)]
    n_val: Option<usize>,
    #[arg(long)]
    n_test: Option<usize>,
    #[arg(long)]
    ll_samples: Option<usize>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum EvalCommand {
    /// Importance-sampled log-likelihood on the test split.
    Ll(LlArgs),
}

#[derive(Args, Debug, Serialize)]
struct LlArgs {
    #[arg(long)]
    checkpoint: PathBuf,
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Test images scored.
    #[arg(long, default_value_t = 1000)]
    n_test: usize,
    #[arg(long)]
    synthetic: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Json(_) | Error::Format { .. } => 1,
        Error::NonFinite(_) | Error::ProposalBudget { .. } => 3,
        Error::MissingData(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let c = &cli.common;
    fs::create_dir_all(&c.out)?;
    match &cli.command {
        Command::Train(_) => {}
        // experiments write their own resolved config
        _ => io::write_json(&c.out.join("config.json"), cli)?,
    }
    match &cli.command {
        Command::Sample(a) => sample(c, a),
        Command::Stats(a) => stats(c, a),
        Command::Kl(a) => kl_table(c, a, false),
        Command::Gradcheck(a) => kl_table(c, a, true),
        Command::Train(TrainCommand::Toy(a)) => train_toy(c, a),
        Command::Train(TrainCommand::Mnist(a)) => train_mnist(c, a),
        Command::Eval(EvalCommand::Ll(a)) => eval_ll(c, a),
    }
}

fn parse_mu(spec: &str, m: usize) -> Result<Vec<f64>, Error> {
    let bad = |msg: String| Error::Domain(format!("--mu {spec:?}: {msg}"));
    if spec == "e1" {
        let mut mu = vec![0.0; m];
        mu[0] = 1.0;
        return Ok(mu);
    }
    let coords = spec
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|e| bad(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != m {
        return Err(bad(format!("{} coordinates for m = {m}", coords.len())));
    }
    let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !(norm > 0.0 && norm.is_finite()) {
        return Err(bad("direction must be finite and nonzero".into()));
    }
    Ok(coords.iter().map(|x| x / norm).collect())
}

/// Writes `rows` as `<stem>.csv` with a header, or `<stem>.ndjson` with one
/// object per row.
fn write_table(c: &Common, stem: &str, header: &[String], rows: &[Vec<f64>]) -> Result<PathBuf, Error> {
    match c.format {
        Format::Csv => {
            let path = c.out.join(format!("{stem}.csv"));
            let h: Vec<&str> = header.iter().map(String::as_str).collect();
            io::write_csv(&path, &h, rows.iter().map(|r| r.iter().map(|&x| fmt_f64(x)).collect()))?;
            Ok(path)
        }
        Format::Json => {
            let path = c.out.join(format!("{stem}.ndjson"));
            let records: Vec<serde_json::Map<String, serde_json::Value>> = rows
                .iter()
                .map(|r| header.iter().cloned().zip(r.iter().map(|&x| serde_json::json!(x))).collect())
                .collect();
            io::write_ndjson(&path, &records)?;
            Ok(path)
        }
    }
}

#[derive(Serialize)]
struct SampleSummary {
    n: usize,
    m: usize,
    kappa: f64,
    /// Length of the sample mean vector.
    mean_resultant: f64,
    /// Expected length, `I_{m/2}(κ)/I_{m/2−1}(κ)`.
    expected_mean_resultant: f64,
    mean_attempts: f64,
}

fn sample(c: &Common, a: &SampleArgs) -> Result<ExitCode, Error> {
    if a.m < 2 {
        return Err(Error::Domain("--m must be at least 2".into()));
    }
    let dist = VonMisesFisher::new(parse_mu(&a.mu, a.m)?, a.kappa)?;
    let sampler = VmfSampler::new(&dist)?;
    let mut rng = Rng::new(c.seed);
    let mut rows = Vec::with_capacity(a.n);
    let mut sum = vec![0.0; a.m];
    let mut attempts = 0usize;
    for _ in 0..a.n {
        let t = sampler.sample(&mut rng)?;
        sum.iter_mut().zip(&t.z).for_each(|(s, z)| *s += z);
        attempts += t.attempts;
        rows.push(t.z);
    }
    let n = a.n.max(1) as f64;
    let summary = SampleSummary {
        n: a.n,
        m: a.m,
        kappa: a.kappa,
        mean_resultant: sum.iter().map(|s| (s / n).powi(2)).sum::<f64>().sqrt(),
        expected_mean_resultant: dist.mean_resultant(),
        mean_attempts: attempts as f64 / n,
    };
    let header: Vec<String> = (0..a.m).map(|i| format!("z{i}")).collect();
    write_table(c, "samples", &header, &rows)?;
    io::write_json(&c.out.join("summary.json"), &summary)?;
    println!(
        "n={} mean_resultant={:.6} expected={:.6} mean_attempts={:.4}",
        summary.n, summary.mean_resultant, summary.expected_mean_resultant, summary.mean_attempts
    );
    Ok(ExitCode::SUCCESS)
}

fn stats(c: &Common, a: &StatsArgs) -> Result<ExitCode, Error> {
    let ms = if a.m.is_empty() { vec![5, 10, 20, 40, 100] } else { a.m.clone() };
    let ks = if a.kappa.is_empty() {
        vec![1.0, 5.0, 10.0, 50.0, 100.0, 500.0, 1000.0, 5000.0, 10000.0]
    } else {
        a.kappa.clone()
    };
    let cells: Vec<(usize, f64)> = ms.iter().flat_map(|&m| ks.iter().map(move |&k| (m, k))).collect();
    let runs = a.runs;
    let seed = c.seed;
    let results = grid::par_map(&cells, c.threads as usize, |idx, &(m, k)| -> Result<Vec<f64>, Error> {
        let sampler = VmfSampler::new(&VonMisesFisher::north_pole(m, k)?)?.force_rejection(true);
        let mut rng = Rng::stream(seed, idx as u64);
        let (mut sum, mut sq) = (0.0, 0.0);
        for _ in 0..runs {
            let t = sampler.sample(&mut rng)?.attempts as f64;
            sum += t;
            sq += t * t;
        }
        let n = runs.max(1) as f64;
        let mean = sum / n;
        let se = ((sq / n - mean * mean).max(0.0) / (n - 1.0).max(1.0)).sqrt();
        Ok(vec![m as f64, k, mean, se])
    });
    let rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let header = ["m", "kappa", "mean_attempts", "se"].map(String::from);
    write_table(c, "stats", &header, &rows)?;
    for r in &rows {
        println!("m={} kappa={} mean_attempts={:.4} se={:.4}", r[0], r[1], r[2], r[3]);
    }
    Ok(ExitCode::SUCCESS)
}

/// Relative tolerance of `gradcheck`.
const GRADCHECK_TOL: f64 = 1e-5;

fn kl_row(m: usize, k: f64, check: bool) -> Result<Vec<f64>, Error> {
    let d = VonMisesFisher::north_pole(m, k)?;
    let kl = kl_to_uniform(&d);
    let grad = kl_grad_kappa(&d);
    if !check {
        return Ok(vec![m as f64, k, kl, grad]);
    }
    let h = 1e-5 * k.max(1e-2);
    let fd = if k < h {
        // KL is even in κ, so the symmetric difference at 0 vanishes
        0.0
    } else {
        let f = |x: f64| VonMisesFisher::north_pole(m, x).map(|d| kl_to_uniform(&d));
        (f(k + h)? - f(k - h)?) / (2.0 * h)
    };
    let scale = grad.abs().max(fd.abs());
    let rel = if scale == 0.0 { 0.0 } else { (grad - fd).abs() / scale };
    Ok(vec![m as f64, k, kl, grad, fd, rel])
}

fn kl_table(c: &Common, a: &GridArgs, check: bool) -> Result<ExitCode, Error> {
    let ms = if a.m.is_empty() { vec![3, 5, 10, 20, 40, 64] } else { a.m.clone() };
    let ks = if a.kappa.is_empty() { vec![0.0, 0.1, 1.0, 10.0, 100.0, 1000.0] } else { a.kappa.clone() };
    let cells: Vec<(usize, f64)> = ms.iter().flat_map(|&m| ks.iter().map(move |&k| (m, k))).collect();
    let rows = grid::par_map(&cells, c.threads as usize, |_, &(m, k)| kl_row(m, k, check))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let mut header: Vec<String> = ["m", "kappa", "kl", "grad_kappa"].map(String::from).to_vec();
    if check {
        header.extend(["fd_grad", "rel_err"].map(String::from));
    }
    write_table(c, if check { "gradcheck" } else { "kl" }, &header, &rows)?;
    if !check {
        println!("{} rows", rows.len());
        return Ok(ExitCode::SUCCESS);
    }
    let failures: Vec<&Vec<f64>> = rows.iter().filter(|r| !(r[5] < GRADCHECK_TOL)).collect();
    let worst = rows.iter().map(|r| r[5]).fold(0.0, f64::max);
    println!("{} rows, {} above {GRADCHECK_TOL:e}, max rel_err {worst:.3e}", rows.len(), failures.len());
    for r in &failures {
        eprintln!("m={} kappa={} grad={} fd={} rel_err={:.3e}", r[0], r[1], r[3], r[4], r[5]);
    }
    Ok(if failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn finish(m: &RunManifest) -> ExitCode {
    let metrics: Vec<String> = m.summary.iter().map(|(k, v)| format!("{k}={v:.6}")).collect();
    match m.status {
        RunStatus::Ok => {
            println!("{} ok {}", m.experiment, metrics.join(" "));
            ExitCode::SUCCESS
        }
        RunStatus::Failed => {
            eprintln!("{} failed: {}", m.experiment, m.failure.as_deref().unwrap_or("unknown"));
            ExitCode::from(3)
        }
    }
}

fn train_toy(c: &Common, a: &ToyArgs) -> Result<ExitCode, Error> {
    let defaults = ToySpec::default();
    let spec = ToySpec {
        n_train: a.n_train.unwrap_or(defaults.n_train),
        n_val: a.n_val.unwrap_or(defaults.n_val),
        ..defaults
    };
    let base = TrainConfig::toy();
    let cfg = TrainConfig { epochs: a.epochs.unwrap_or(base.epochs), ..base };
    let (manifest, _) = run_toy_experiment(&spec, a.model, &cfg, c.seed, &c.out)?;
    Ok(finish(&manifest))
}

fn mnist_data(c: &Common, synthetic: bool, n_train: usize, n_test: usize) -> Result<(io::Mnist, String), Error> {
    if synthetic {
        return Ok((synthetic_mnist(n_train, n_test, c.seed), "synthetic".into()));
    }
    let dir = resolve_data_dir(c.data_dir.as_deref());
    Ok((load_mnist(&dir)?, dir.display().to_string()))
}

fn train_mnist(c: &Common, a: &MnistArgs) -> Result<ExitCode, Error> {
    let mut budget = if a.full { MnistBudget::full() } else { MnistBudget::desk_scale() };
    budget.n_train = a.n_train.unwrap_or(budget.n_train);
    budget.n_val = a.n_val.unwrap_or(budget.n_val);
    budget.n_test = a.n_test.unwrap_or(budget.n_test);
    budget.ll_samples = a.ll_samples.unwrap_or(budget.ll_samples);
    budget.train.epochs = a.epochs.unwrap_or(budget.train.epochs);
    let posterior = match a.posterior {
        Posterior::Vmf => PosteriorKind::Vmf,
        Posterior::Normal => PosteriorKind::Normal,
    };
    let (data, source) = mnist_data(c, a.synthetic, budget.n_train + budget.n_val, budget.n_test)?;
    let (manifest, _) = run_mnist_experiment(&data, &source, a.dim, posterior, &budget, c.seed, &c.out)?;
    Ok(finish(&manifest))
}

#[derive(Serialize)]
struct LlSummary {
    checkpoint: String,
    n: usize,
    samples: usize,
    ll: f64,
    ll_se: f64,
}

fn eval_ll(c: &Common, a: &LlArgs) -> Result<ExitCode, Error> {
    let vae = checkpoint::load(&a.checkpoint)?;
    let (data, _) = mnist_data(c, a.synthetic, 0, a.n_test)?;
    let test = data.test.truncate(a.n_test);
    if test.images.cols() != vae.config().input_dim {
        return Err(Error::DimensionMismatch { expected: vae.config().input_dim, actual: test.images.cols() });
    }
    let mut rng = Rng::new(c.seed);
    let x = io::binarize(&test.images, &mut rng);
    let ll = vae.importance_ll(&x, a.samples, &mut rng)?;
    let (mean, se) = hyperspherical::stats::mean_and_se(&ll);
    let rows: Vec<Vec<f64>> = ll.iter().enumerate().map(|(i, &v)| vec![i as f64, v]).collect();
    write_table(c, "ll", &["index".to_string(), "ll".to_string()], &rows)?;
    let summary = LlSummary { checkpoint: a.checkpoint.display().to_string(), n: ll.len(), samples: a.samples, ll: mean, ll_se: se };
    io::write_json(&c.out.join("summary.json"), &summary)?;
    println!("ll={mean:.4} se={se:.4} n={} samples={}", summary.n, summary.samples);
    Ok(ExitCode::SUCCESS)
}
