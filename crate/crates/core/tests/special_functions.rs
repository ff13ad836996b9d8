//! High-precision checks for the Bessel kernel. The frozen tables were produced
//! by `oracles/gen_bessel.py` (mpmath, 60 digits); the continued fraction and
//! half-integer closed forms below are evaluated independently in this file.

#[path = "oracles/tables.rs"]
mod tables;

use hyperspherical::special::{bessel_ratio, log_bessel_i_scaled, log_gamma, BesselOrder};

fn order(v: f64) -> BesselOrder {
    BesselOrder::new(v).unwrap()
}

fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

#[test]
fn scaled_log_bessel_matches_mpmath_table() {
    let mut worst = (0.0, 0.0, 0.0);
    for &(v, k, want) in tables::LOG_IV_SCALED {
        let got = log_bessel_i_scaled(order(v), k).unwrap();
        assert!(got.is_finite(), "non-finite at v={v}, kappa={k}");
        // Values near zero (small kappa, v = 0) are compared on an absolute scale.
        let err = (got - want).abs() / want.abs().max(1e-3);
        if err > worst.0 {
            worst = (err, v, k);
        }
    }
    assert!(worst.0 < 1e-10, "worst relative error {:e} at v={}, kappa={}", worst.0, worst.1, worst.2);
}

#[test]
fn order_three_at_kappa_500() {
    let want = tables::LOG_IV_SCALED
        .iter()
        .find(|&&(v, k, _)| v == 3.0 && k == 500.0)
        .unwrap()
        .2;
    let got = log_bessel_i_scaled(order(3.0), 500.0).unwrap();
    assert!(rel_err(got, want) < 1e-10);
}

#[test]
fn ratio_matches_mpmath_table() {
    for &(v, k, want) in tables::RATIO {
        let got = bessel_ratio(order(v), k).unwrap();
        // at large kappa the exact ratio may sit within an ulp of one
        let tol = 1e-10 * want.abs();
        assert!((got - want).abs() <= tol.max(2.0 * f64::EPSILON), "v={v} kappa={k}: {got} vs {want}");
    }
}

/// Gauss continued fraction
/// I_v/I_{v−1} = 1 / (2v/x + 1 / (2(v+1)/x + 1 / (2(v+2)/x + ...)))
/// evaluated bottom-up from a deep truncation.
fn ratio_continued_fraction(v: f64, x: f64) -> f64 {
    let depth = 2000 + (4.0 * x) as usize;
    let mut acc = 0.0;
    for j in (0..depth).rev() {
        acc = 1.0 / (2.0 * (v + j as f64) / x + acc);
    }
    acc
}

#[test]
fn ratio_order_five_against_continued_fraction() {
    let want = ratio_continued_fraction(5.0, 10.0);
    let got = bessel_ratio(order(5.0), 10.0).unwrap();
    assert!(rel_err(got, want) < 1e-10, "{got} vs {want}");
}

#[test]
fn ratio_against_continued_fraction_grid() {
    for &v in &[0.5, 1.0, 1.5, 3.0, 7.5, 16.0, 31.0, 63.5] {
        for &x in &[1e-3, 0.5, 4.0, 25.0, 60.0, 300.0] {
            let want = ratio_continued_fraction(v, x);
            let got = bessel_ratio(order(v), x).unwrap();
            assert!(rel_err(got, want) < 1e-10, "v={v}, x={x}: {got} vs {want}");
        }
    }
}

#[test]
fn log_gamma_matches_mpmath_table() {
    for &(x, want) in tables::LOG_GAMMA {
        let got = log_gamma(x).unwrap();
        assert!(rel_err(got, want) < 1e-12, "x={x}: {got} vs {want}");
    }
}

#[test]
fn half_integer_closed_forms() {
    // I_{3/2}(x) = √(2/(πx)) (cosh x − sinh x / x)
    for &x in &[0.7f64, 3.0, 15.0, 45.0, 120.0, 700.0] {
        let scaled_bracket = 0.5 * (1.0 + (-2.0 * x).exp()) - 0.5 * (1.0 - (-2.0 * x).exp()) / x;
        let want = (2.0 / (std::f64::consts::PI * x)).sqrt().ln() + scaled_bracket.ln();
        let got = log_bessel_i_scaled(order(1.5), x).unwrap();
        assert!((got - want).abs() < 1e-10 * want.abs().max(1.0), "x={x}");
    }
}

#[test]
fn recurrence_in_scaled_log_space() {
    // I_{v−1} − I_{v+1} = (2v/κ) I_v, divided through by I_v
    for &v in &[1.0, 1.5, 2.0, 4.5, 10.0, 33.0, 100.0] {
        for &k in &[0.05, 1.0, 9.0, 48.0, 52.0, 400.0, 5e3, 9.9e3] {
            let lv = log_bessel_i_scaled(order(v), k).unwrap();
            let lm = log_bessel_i_scaled(order(v - 1.0), k).unwrap();
            let lp = log_bessel_i_scaled(order(v + 1.0), k).unwrap();
            let lhs = (lm - lv).exp() - (lp - lv).exp();
            let rhs = 2.0 * v / k;
            assert!(rel_err(lhs, rhs) < 1e-8, "v={v}, k={k}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn derivative_identity_against_finite_differences() {
    // d/dκ log I_v = ½ (I_{v−1} + I_{v+1}) / I_v; the scaled log has derivative
    // one less than that.
    for &v in &[1.0, 2.5, 8.0, 40.0] {
        for &k in &[0.5f64, 3.0, 30.0, 75.0, 800.0] {
            let h = 1e-5 * k.max(1.0);
            let fd = (log_bessel_i_scaled(order(v), k + h).unwrap()
                - log_bessel_i_scaled(order(v), k - h).unwrap())
                / (2.0 * h);
            let lv = log_bessel_i_scaled(order(v), k).unwrap();
            let lm = log_bessel_i_scaled(order(v - 1.0), k).unwrap();
            let lp = log_bessel_i_scaled(order(v + 1.0), k).unwrap();
            let analytic = 0.5 * ((lm - lv).exp() + (lp - lv).exp()) - 1.0;
            let scale = analytic.abs().max(1e-3);
            assert!((fd - analytic).abs() / scale < 1e-6, "v={v}, k={k}: {fd} vs {analytic}");
        }
    }
}

#[test]
fn ratio_is_bounded_and_monotone() {
    for &v in &[0.5, 1.0, 2.5, 12.0, 64.0] {
        let mut prev = -1.0;
        let mut k = 1e-4;
        while k < 1e6 {
            let r = bessel_ratio(order(v), k).unwrap();
            assert!((0.0..1.0).contains(&r), "v={v}, k={k}: {r}");
            // a few ulps of rounding once the ratio saturates near one
            assert!(r >= prev - 4.0 * f64::EPSILON, "not monotone at v={v}, k={k}");
            prev = r;
            k *= 1.3;
        }
    }
}

#[test]
fn ratio_sandwich_bounds() {
    for &v in &[0.5, 1.0, 1.5, 4.0, 20.0, 99.5] {
        for &k in &[1e-3, 0.2, 1.0, 6.0, 44.0, 300.0, 2e3] {
            let r = bessel_ratio(order(v), k).unwrap();
            let lower = k / (v - 0.5 + ((v + 0.5).powi(2) + k * k).sqrt());
            let upper = k / (v - 1.0 + ((v + 1.0).powi(2) + k * k).sqrt());
            let slack = 1e-12;
            assert!(r >= lower * (1.0 - slack), "lower bound v={v}, k={k}: {r} < {lower}");
            assert!(r <= upper * (1.0 + slack), "upper bound v={v}, k={k}: {r} > {upper}");
        }
    }
}

#[test]
fn finite_across_supported_range() {
    for &v in &[0.0, 0.5, 17.0, 128.0, 200.0] {
        for &k in &[0.0, 1e-6, 1.0, 1e3, 1e6] {
            let val = log_bessel_i_scaled(order(v), k).unwrap();
            assert!(val.is_finite() || (k == 0.0 && v > 0.0), "v={v}, k={k}");
        }
    }
}
