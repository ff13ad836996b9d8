//! Modified Bessel functions of the first kind, log-gamma, and Bessel ratios.
//!
//! Every quantity the von Mises-Fisher formulas need is a ratio or a logarithm
//! of `I_v(κ)`, and `I_v` itself overflows an `f64` once `κ` passes ~700. All
//! evaluation therefore happens on the exponentially scaled logarithm
//!
//! ```text
//! log_bessel_i_scaled(v, κ) = log I_v(κ) − κ
//! ```
//!
//! Two evaluation routes are used:
//!
//! * the ascending power series `Σ (κ/2)^{2k+v} / (k! Γ(k+v+1))` when
//!   `√(v² + κ²) < 50`. All terms are positive so the sum is accurate to a few
//!   ulps; the term count is bounded by roughly `κ`.
//! * the uniform (Debye) asymptotic expansion otherwise. Written in terms of
//!   `t = 1/√(v² + κ²)` and `p = v·t`, the correction series is
//!   `Σ_k t^k P_k(p²)`, which stays valid for every order including `v = 0`,
//!   where it collapses to the classical large-argument Hankel expansion.
//!
//! The Debye polynomials are generated once from their recurrence rather than
//! transcribed from tables.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{domain, Result};

/// Below this radius `√(v² + κ²)` the power series is used.
const UNIFORM_RADIUS: f64 = 50.0;

/// Number of Debye polynomials generated. At radius 50 the twelfth term is
/// already below 1e-17.
const DEBYE_TERMS: usize = 20;

const SERIES_MAX_TERMS: usize = 1000;

/// Largest double strictly below one; Bessel ratios saturate here.
pub const ONE_MINUS_ULP: f64 = 1.0 - f64::EPSILON / 2.0;

/// Order of a modified Bessel function. Finite and non-negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(v: f64) -> Result<Self> {
        if !v.is_finite() || v < 0.0 {
            return Err(domain(format!("Bessel order must be finite and >= 0, got {v}")));
        }
        Ok(Self(v))
    }

    /// The order `m/2 − 1` that appears in the vMF normalizer on `S^{m−1}`.
    pub fn for_dimension(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(domain(format!("dimension must be >= 2, got {m}")));
        }
        Ok(Self(m as f64 / 2.0 - 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn check_argument(kappa: f64) -> Result<()> {
    if kappa.is_nan() || kappa < 0.0 || kappa.is_infinite() {
        return Err(domain(format!("Bessel argument must be finite and >= 0, got {kappa}")));
    }
    Ok(())
}

/// `log(I_v(κ)) − κ`.
///
/// Returns `0` at `v = 0, κ = 0` and `−∞` for `v > 0, κ = 0`.
pub fn log_bessel_i_scaled(v: BesselOrder, kappa: f64) -> Result<f64> {
    check_argument(kappa)?;
    Ok(log_iv_scaled(v.0, kappa))
}

/// `I_v(κ) / I_{v−1}(κ)` for `v ≥ 1/2`, assembled from scaled logarithms so the
/// `e^{−κ}` factors cancel.
///
/// The result lies in `[0, 1)`. For very large `κ` the exact ratio is closer to
/// one than an `f64` can resolve and the value saturates at [`ONE_MINUS_ULP`].
pub fn bessel_ratio(v: BesselOrder, kappa: f64) -> Result<f64> {
    check_argument(kappa)?;
    if v.0 < 0.5 {
        return Err(domain(format!("Bessel ratio needs order >= 1/2, got {}", v.0)));
    }
    Ok(ratio(v.0, kappa))
}

/// `log Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(domain(format!("log_gamma needs x > 0, got {x}")));
    }
    Ok(libm::lgamma(x))
}

/// Unchecked ratio `I_v/I_{v−1}` used by the vMF formulas, `v ≥ 1/2`, `κ ≥ 0`.
pub(crate) fn ratio(v: f64, kappa: f64) -> f64 {
    if kappa == 0.0 {
        return 0.0;
    }
    let r = if v.hypot(kappa) < UNIFORM_RADIUS {
        ratio_continued_fraction(v, kappa)
    } else {
        (log_iv_scaled(v, kappa) - log_iv_scaled(v - 1.0, kappa)).exp()
    };
    r.min(ONE_MINUS_ULP)
}

/// `I_v/I_{v−1} = 1/(2v/x + 1/(2(v+1)/x + …))` by the modified Lentz method.
fn ratio_continued_fraction(v: f64, x: f64) -> f64 {
    let mut f = 2.0 * v / x;
    let mut c = f;
    let mut d = 0.0;
    if f == 0.0 {
        f = f64::MIN_POSITIVE;
        c = f;
    }
    for j in 1..SERIES_MAX_TERMS * 10 {
        let b = 2.0 * (v + j as f64) / x;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < f64::EPSILON / 2.0 {
            break;
        }
    }
    1.0 / f
}

/// Unchecked scaled log Bessel for orders `v ≥ −1`.
///
/// Negative integer orders use `I_{−n} = I_n`. Orders in `(−1, 0)` are only
/// reached through the recurrence partners `I_{m/2−2}` at `m = 3`
/// (`v = −1/2`); for those the series is exact and the asymptotic branch drops
/// the `K_v` contribution, which is smaller by a factor `e^{−2κ}`.
pub(crate) fn log_iv_scaled(v: f64, kappa: f64) -> f64 {
    debug_assert!(v >= -1.0 && kappa >= 0.0);
    let v = if v < 0.0 && v.fract() == 0.0 { -v } else { v };
    if kappa == 0.0 {
        return if v == 0.0 {
            0.0
        } else if v > 0.0 {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
    }
    if v.hypot(kappa) < UNIFORM_RADIUS {
        series(v, kappa)
    } else {
        uniform_expansion(v.abs(), kappa)
    }
}

fn series(v: f64, x: f64) -> f64 {
    v * (0.5 * x).ln() - libm::lgamma(v + 1.0) + series_tail(v, x).ln_1p() - x
}

/// `Σ_{k≥1} (x²/4)^k / (k! (v+1)_k)`, the power series of
/// `Γ(v+1) I_v(x) / (x/2)^v` without its leading one.
fn series_tail(v: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 1..SERIES_MAX_TERMS {
        let kf = k as f64;
        term *= q / (kf * (kf + v));
        sum += term;
        if term < sum * 1e-17 && kf * kf > q {
            break;
        }
    }
    sum
}

/// `log[Γ(v+1) I_v(x) / (x/2)^v]` for `v ≥ 0`, `x ≥ 0`. Tends to zero with
/// full relative accuracy as `x → 0`.
pub(crate) fn log_iv_normalized(v: f64, x: f64) -> f64 {
    if x < UNIFORM_RADIUS {
        series_tail(v, x).ln_1p()
    } else {
        log_iv_scaled(v, x) + x - v * (0.5 * x).ln() + libm::lgamma(v + 1.0)
    }
}

fn uniform_expansion(v: f64, x: f64) -> f64 {
    let r = v.hypot(x);
    let t = 1.0 / r;
    let p2 = (v * t) * (v * t);

    let mut sum = 1.0;
    let mut tk = 1.0;
    let mut prev = f64::INFINITY;
    for poly in debye_polynomials().iter().skip(1) {
        tk *= t;
        let term = tk * horner(poly, p2);
        if term.abs() > prev {
            // asymptotic series started to diverge; the previous partial sum is optimal
            break;
        }
        sum += term;
        prev = term.abs();
        if prev < 1e-17 * sum.abs() {
            break;
        }
    }

    // v·η − x with η = √(1+z²) + ln(z / (1 + √(1+z²))), z = x/v, rearranged to
    // avoid the cancellation √(v²+x²) − x.
    let eta_minus_x = if v == 0.0 {
        0.0
    } else {
        v * v / (r + x) + v * (x / (v + r)).ln()
    };
    eta_minus_x - 0.5 * (2.0 * PI).ln() - 0.5 * r.ln() + sum.ln()
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// `P_k` such that `U_k(p) = p^k P_k(p²)`, for `k < DEBYE_TERMS`.
fn debye_polynomials() -> &'static [Vec<f64>] {
    static POLYS: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    POLYS.get_or_init(|| {
        // Dense coefficients of U_k in p, built from
        // U_{k+1} = ½ p²(1 − p²) U_k' + ⅛ ∫₀ᵖ (1 − 5t²) U_k(t) dt.
        let mut dense: Vec<Vec<f64>> = vec![vec![1.0]];
        for k in 0..DEBYE_TERMS - 1 {
            let u = &dense[k];
            let mut next = vec![0.0; u.len() + 3];
            for (i, &c) in u.iter().enumerate().skip(1) {
                let d = i as f64 * c; // coefficient of p^{i-1} in U_k'
                next[i + 1] += 0.5 * d;
                next[i + 3] -= 0.5 * d;
            }
            for (i, &c) in u.iter().enumerate() {
                next[i + 1] += c / (8.0 * (i as f64 + 1.0));
                next[i + 3] -= 5.0 * c / (8.0 * (i as f64 + 3.0));
            }
            dense.push(next);
        }
        dense
            .iter()
            .enumerate()
            .map(|(k, u)| (0..=k).map(|j| u.get(k + 2 * j).copied().unwrap_or(0.0)).collect())
            .collect()
    })
}
