//! Natural logarithm of the gamma function for positive real arguments.
//!
//! `ln Γ` has zeros at 1 and 2, so an absolute-accuracy approximation such as
//! Lanczos loses relative accuracy there. The interval `[0.5, 2.5)` is served
//! by the Taylor series of `ln Γ(2 + x)`, whose coefficients `ζ(k) - 1` decay
//! like `2^-k`; larger arguments are reduced into it by recurrence or handled
//! by the Stirling series.

use std::f64::consts::PI;

use crate::error::{domain, Result};

/// Euler–Mascheroni constant.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `ζ(k) - 1` for `k = 2..=31`.
const ZETA_MINUS_ONE: [f64; 30] = [
    0.644_934_066_848_226_4,
    0.202_056_903_159_594_3,
    0.082_323_233_711_138_19,
    0.036_927_755_143_369_93,
    0.017_343_061_984_449_14,
    0.008_349_277_381_922_827,
    0.004_077_356_197_944_339,
    0.002_008_392_826_082_214,
    9.945_751_278_180_853e-4,
    4.941_886_041_194_646e-4,
    2.460_865_533_080_483e-4,
    1.227_133_475_784_891_5e-4,
    6.124_813_505_870_483e-5,
    3.058_823_630_702_049e-5,
    1.528_225_940_865_187e-5,
    7.637_197_637_899_762e-6,
    3.817_293_264_999_84e-6,
    1.908_212_716_553_939e-6,
    9.539_620_338_727_961e-7,
    4.769_329_867_878_065e-7,
    2.384_505_027_277_33e-7,
    1.192_199_259_653_110_7e-7,
    5.960_818_905_125_948e-8,
    2.980_350_351_465_228e-8,
    1.490_155_482_836_504e-8,
    7.450_711_789_835_429e-9,
    3.725_334_024_788_457e-9,
    1.862_659_723_513_049e-9,
    9.313_274_324_196_682e-10,
    4.656_629_065_033_784e-10,
];

/// `B_{2k} / (2k (2k - 1))` for `k = 1..=8`.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

const STIRLING_MIN: f64 = 10.0;

/// `ln Γ(2 + x)` for `|x| <= 0.5`.
fn ln_gamma_2p(x: f64) -> f64 {
    // sum_{k>=2} (-1)^k (ζ(k) - 1)/k x^k, evaluated by Horner in x
    let tail = ZETA_MINUS_ONE
        .iter()
        .enumerate()
        .rev()
        .fold(0.0, |acc, (i, &zm1)| {
            let k = (i + 2) as f64;
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            (acc * x) + sign * zm1 / k
        });
    x * ((1.0 - EULER_GAMMA) + x * tail)
}

fn stirling(a: f64) -> f64 {
    let inv = a.recip();
    let inv2 = inv * inv;
    let corr = STIRLING
        .iter()
        .rev()
        .fold(0.0, |acc: f64, &c| acc.mul_add(inv2, c))
        * inv;
    (a - 0.5) * a.ln() - a + 0.5 * (2.0 * PI).ln() + corr
}

/// `ln Γ(a)` for `a > 0`.
pub fn log_gamma(a: f64) -> Result<f64> {
    if a.is_nan() || a <= 0.0 {
        return domain("a", a, "log_gamma requires a > 0");
    }
    if a.is_infinite() {
        return Ok(f64::INFINITY);
    }
    Ok(if a < 0.5 {
        // ln Γ(a) = ln Γ(a + 2) - ln(a + 1) - ln a
        ln_gamma_2p(a) - a.ln_1p() - a.ln()
    } else if a < 1.5 {
        ln_gamma_2p(a - 1.0) - (a - 1.0).ln_1p()
    } else if a < 2.5 {
        ln_gamma_2p(a - 2.0)
    } else if a < STIRLING_MIN {
        let mut x = a;
        let mut product = 1.0;
        while x >= 2.5 {
            x -= 1.0;
            product *= x;
        }
        product.ln() + ln_gamma_2p(x - 2.0)
    } else {
        stirling(a)
    })
}
