#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, nine coefficients (the GSL set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

// Taylor coefficients of 1/Γ(1+z) about z = 0.
const RECIP_GAMMA_1P: [f64; 30] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
    1.412_380_655_318_031_781_6e-18,
    -2.298_745_684_435_370_206_6e-19,
    1.714_406_321_927_337_433_4e-20,
];

fn lanczos_sum(xm1: f64) -> f64 {
    LANCZOS
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS[0], |acc, (i, &c)| acc + c / (xm1 + i as f64))
}

/// Γ(x) for `x > 0`.
///
/// Integers up to 170 are returned as exact factorials; everything else goes
/// through the Lanczos sum, with reflection below 1/2.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(
            "gamma_fn",
            format!("argument {x} is not a positive finite real"),
        ));
    }
    if x > 171.624_376_956_302_7 {
        return Err(Error::overflow(
            "gamma_fn",
            format!("Γ({x}) exceeds f64 range; use ln_gamma"),
        ));
    }
    if x.fract() == 0.0 && x <= 170.0 {
        let n = x as u32;
        return Ok((1..n).fold(1.0, |acc, k| acc * k as f64));
    }
    if x < 0.5 {
        // Γ(x)Γ(1−x) = π / sin(πx), and 1 − x ∈ (1/2, 1).
        return Ok(PI / ((PI * x).sin() * lanczos_gamma(1.0 - x)));
    }
    Ok(lanczos_gamma(x))
}

fn lanczos_gamma(x: f64) -> f64 {
    let xm1 = x - 1.0;
    let w = xm1 + LANCZOS_G + 0.5;
    // split the power so w^(x−1/2) cannot overflow before e^{−w} is applied
    let half = w.powf(0.5 * (xm1 + 0.5));
    (2.0 * PI).sqrt() * half * (-w).exp() * half * lanczos_sum(xm1)
}

/// ln Γ(x) for `x > 0`. Never overflows.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(
            "ln_gamma",
            format!("argument {x} is not a positive finite real"),
        ));
    }
    if x < 0.5 {
        let s = (PI * x).sin();
        return Ok((PI / s).ln() - ln_gamma_lanczos(1.0 - x));
    }
    if x.fract() == 0.0 && x <= 20.0 {
        return gamma_fn(x).map(f64::ln);
    }
    Ok(ln_gamma_lanczos(x))
}

fn ln_gamma_lanczos(x: f64) -> f64 {
    let xm1 = x - 1.0;
    let w = xm1 + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (xm1 + 0.5) * w.ln() - w + lanczos_sum(xm1).ln()
}

/// 1/Γ(1+μ) for |μ| ≤ 1/2, by its Taylor series about zero.
///
/// Used by the small-argument `K_ν` series where the combination
/// `(1/Γ(1−μ) − 1/Γ(1+μ)) / 2μ` must stay accurate as μ → 0.
pub fn recip_gamma_1p(mu: f64) -> f64 {
    debug_assert!(mu.abs() <= 0.5 + 1e-12);
    RECIP_GAMMA_1P.iter().rev().fold(0.0, |acc, &c| acc * mu + c)
}

/// `(1/Γ(1−μ) − 1/Γ(1+μ)) / (2μ)` and `(1/Γ(1−μ) + 1/Γ(1+μ)) / 2`, by
/// splitting the Taylor series into odd and even parts.
pub(crate) fn temme_gammas(mu: f64) -> (f64, f64) {
    let mu2 = mu * mu;
    let mut odd = 0.0;
    let mut even = 0.0;
    for (k, &c) in RECIP_GAMMA_1P.iter().enumerate().rev() {
        if k % 2 == 1 {
            odd = odd * mu2 + c;
        } else {
            even = even * mu2 + c;
        }
    }
    (-odd, even)
}
