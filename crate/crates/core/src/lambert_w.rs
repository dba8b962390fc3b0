//! Real branches of the Lambert W function.
//!
//! `W(z)` inverts `u -> u e^u`. On the reals there are two branches:
//!
//! * `W0` (principal) for `z >= -1/e`, with `W0(z) >= -1`;
//! * `W-1` (secondary) for `-1/e <= z < 0`, with `W-1(z) <= -1`.
//!
//! Both meet at the branch point `(-1/e, -1)` where they behave like
//! `-1 ± p` with `p = sqrt(2 (1 + e z))`. Close to that point the two values
//! are evaluated from the branch-point expansion in `p`, and anywhere else by
//! Halley iteration on `w e^w - z`.
//!
//! Callers that already know `ln(-e z)` (the bandwidth formulas do) should go
//! through [`branch_difference_from_log_ratio`] (or the crate-internal
//! `branch_from_log_ratio`), which never round-trip through `z` and so keep
//! full relative accuracy as the argument approaches `-1/e`.

use std::f64::consts::E;

use crate::error::{domain, Result};

/// Real Lambert W branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `k = 0`, values in `[-1, inf)`.
    Principal,
    /// `k = -1`, values in `(-inf, -1]`.
    Secondary,
}

impl Branch {
    /// Lambert W branch index `k`.
    pub fn index(self) -> i32 {
        match self {
            Branch::Principal => 0,
            Branch::Secondary => -1,
        }
    }

    fn sign(self) -> f64 {
        match self {
            Branch::Principal => 1.0,
            Branch::Secondary => -1.0,
        }
    }
}

/// `e - E` where `E` is the nearest double to e.
const E_LO: f64 = 1.445_646_891_729_250_2e-16;

/// Inputs up to this relative distance below `-1/e` are snapped to it.
const BRANCH_CLAMP: f64 = 4.0 * f64::EPSILON;

/// Below this value of `1 + e z` the branch-point expansion is used.
pub(crate) const SERIES_SWITCH: f64 = 1e-3;

const MAX_ITER: usize = 50;

/// `ln(-z)` below which `W-1` is solved in logarithmic form (`e^-w` would
/// overflow in the Halley update).
const LOG_FORM_SWITCH: f64 = -690.0;

/// Coefficients of `W = sum c_k p^k`, `p = sqrt(2 (1 + e z))`, on `W0`;
/// `W-1` uses `-p`. Truncation error at `p = sqrt(2e-3)` is below 2e-16.
const BRANCH_SERIES: [f64; 10] = [
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17280.0,
    -221.0 / 8505.0,
    680_863.0 / 43_545_600.0,
    -1963.0 / 204_120.0,
    226_287_557.0 / 37_623_398_400.0,
];

/// `1 + e z`, with `e` carried beyond double precision so the offset keeps
/// its relative accuracy when `z` is within a few ulps of `-1/e`.
fn branch_offset(z: f64) -> f64 {
    E.mul_add(z, 1.0) + E_LO * z
}

/// Negative Lambert W argument in the three forms the solver needs.
#[derive(Debug, Clone, Copy)]
struct NegArg {
    z: f64,
    /// `1 + e z`, in `[0, 1)`.
    offset: f64,
    /// `ln(-z)`.
    ln_neg_z: f64,
}

impl NegArg {
    fn from_z(z: f64) -> Result<Self> {
        debug_assert!(z < 0.0);
        let mut offset = branch_offset(z);
        if offset < 0.0 {
            if offset < -BRANCH_CLAMP {
                return domain("z", z, "below the branch point -1/e");
            }
            offset = 0.0;
        }
        Ok(NegArg {
            z,
            offset,
            ln_neg_z: (-z).ln(),
        })
    }

    /// `z = -exp(r - 1)` for `r <= 0`.
    fn from_log_ratio(r: f64) -> Self {
        debug_assert!(r <= 0.0);
        NegArg {
            z: -(r - 1.0).exp(),
            offset: -r.exp_m1(),
            ln_neg_z: r - 1.0,
        }
    }
}

fn branch_series(p: f64) -> f64 {
    BRANCH_SERIES
        .iter()
        .rev()
        .fold(0.0, |acc: f64, &c| acc.mul_add(p, c))
}

/// Halley iteration on `f(w) = w e^w - z`.
///
/// The update is computed from `f(w) e^-w = w - z e^-w`, which gives the same
/// iterate without forming `e^w` (overflows near `z = f64::MAX`).
fn halley(z: f64, mut w: f64) -> f64 {
    for _ in 0..MAX_ITER {
        let scaled_z = z * (-w).exp();
        let g = w - scaled_z;
        if g == 0.0 {
            break;
        }
        let wp1 = w + 1.0;
        let step = g / (wp1 - (w + 2.0) * g / (2.0 * wp1));
        w -= step;
        let residual_met = g.abs() <= 1e-13 * scaled_z.abs();
        if step.abs() <= 4.0 * f64::EPSILON * w.abs() || residual_met {
            break;
        }
    }
    w
}

/// `W-1` from `l = ln(-z)`: solves `w + ln(-w) = l` by Halley iteration.
/// Used where `z` is too small to work with directly.
fn wm1_log_form(l: f64) -> f64 {
    let mut w = l - (-l).ln();
    for _ in 0..MAX_ITER {
        let h = w + (-w).ln() - l;
        let d1 = 1.0 + 1.0 / w;
        let d2 = -1.0 / (w * w);
        let step = h / (d1 - h * d2 / (2.0 * d1));
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs() {
            break;
        }
    }
    w
}

fn solve_negative(arg: NegArg, branch: Branch) -> f64 {
    let q = arg.offset;
    if q < SERIES_SWITCH {
        return branch_series(branch.sign() * (2.0 * q).sqrt());
    }
    let p = (2.0 * q).sqrt();
    match branch {
        Branch::Principal => {
            if arg.z == 0.0 {
                return arg.z;
            }
            halley(arg.z, -1.0 + p - p * p / 3.0)
        }
        Branch::Secondary => {
            if arg.ln_neg_z < LOG_FORM_SWITCH {
                return wm1_log_form(arg.ln_neg_z);
            }
            let guess = if arg.z < -0.25 {
                -1.0 - p - p * p / 3.0
            } else {
                let l = arg.ln_neg_z;
                l - (-l).ln()
            };
            halley(arg.z, guess)
        }
    }
}

/// Principal branch `W0(z)`, the solution `w >= -1` of `w e^w = z`.
///
/// Arguments up to `4 eps / e` below `-1/e` are treated as the branch point.
pub fn w0(z: f64) -> Result<f64> {
    if !z.is_finite() {
        return domain("z", z, "W0 requires a finite argument");
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    if z < 0.0 {
        return Ok(solve_negative(NegArg::from_z(z)?, Branch::Principal));
    }
    let guess = if z <= E {
        z / (1.0 + z)
    } else {
        let l = z.ln();
        l - l.ln()
    };
    Ok(halley(z, guess))
}

/// Secondary branch `W-1(z)`, the solution `w <= -1` of `w e^w = z`,
/// defined for `-1/e <= z < 0`.
pub fn wm1(z: f64) -> Result<f64> {
    if z.is_nan() || z >= 0.0 {
        return domain("z", z, "W-1 requires -1/e <= z < 0");
    }
    Ok(solve_negative(NegArg::from_z(z)?, Branch::Secondary))
}

/// Evaluates `branch` at `z` for either branch.
pub fn lambert_w(z: f64, branch: Branch) -> Result<f64> {
    match branch {
        Branch::Principal => w0(z),
        Branch::Secondary => wm1(z),
    }
}

/// `W_k(-exp(r - 1))` for `r <= 0`. The caller guarantees the domain.
pub(crate) fn branch_from_log_ratio(r: f64, branch: Branch) -> f64 {
    debug_assert!(r <= 0.0, "log ratio must be non-positive, got {r}");
    solve_negative(NegArg::from_log_ratio(r), branch)
}

/// `1 + W_k(-exp(r - 1))` for `r <= 0`, without cancellation near the
/// branch point.
pub(crate) fn branch_plus_one_from_log_ratio(r: f64, branch: Branch) -> f64 {
    debug_assert!(r <= 0.0, "log ratio must be non-positive, got {r}");
    let arg = NegArg::from_log_ratio(r);
    if arg.offset < SERIES_SWITCH {
        let p = branch.sign() * (2.0 * arg.offset).sqrt();
        let tail = BRANCH_SERIES[1..]
            .iter()
            .rev()
            .fold(0.0, |acc: f64, &c| acc.mul_add(p, c));
        return p * tail;
    }
    1.0 + solve_negative(arg, branch)
}

/// `W0(z) - W-1(z)` at `z = -exp(r - 1)`, i.e. `r = ln(-e z)`.
///
/// This is the bracket in the full-width formulas, where `r = ln(y)/(a - 1)`.
/// As `r -> 0-` both branches approach `-1` and their direct difference
/// cancels; for `1 + e z < 1e-3` only the odd terms of the branch-point
/// expansion are summed instead, `2 (p + 11/72 p^3 + 769/17280 p^5 + ...)`.
pub fn branch_difference_from_log_ratio(r: f64) -> Result<f64> {
    if r.is_nan() || r > 0.0 {
        return domain("r", r, "log ratio must be <= 0");
    }
    if r == 0.0 {
        return Ok(0.0);
    }
    let arg = NegArg::from_log_ratio(r);
    if arg.offset < SERIES_SWITCH {
        return Ok(odd_series_difference((2.0 * arg.offset).sqrt()));
    }
    Ok(solve_negative(arg, Branch::Principal) - solve_negative(arg, Branch::Secondary))
}

fn odd_series_difference(p: f64) -> f64 {
    let p2 = p * p;
    let odd = BRANCH_SERIES[1..]
        .iter()
        .step_by(2)
        .rev()
        .fold(0.0, |acc: f64, &c| acc.mul_add(p2, c));
    2.0 * p * odd
}

#[cfg(test)]
mod tests {
    use super::*;

    const INV_E: f64 = 0.367_879_441_171_442_33;

    fn rel(a: f64, b: f64) -> f64 {
        if a == b {
            0.0
        } else {
            (a - b).abs() / b.abs()
        }
    }

    #[test]
    fn principal_examples() {
        assert_eq!(w0(0.0).unwrap(), 0.0);
        assert!(rel(w0(E).unwrap(), 1.0) < 1e-15);
        assert_eq!(w0(-INV_E).unwrap(), -1.0);
        // mpmath: lambertw(-1/(2e), 0)
        assert!(rel(w0(-INV_E / 2.0).unwrap(), -0.231_960_952_986_534_43) < 1e-15);
    }

    #[test]
    fn secondary_examples() {
        assert_eq!(wm1(-INV_E).unwrap(), -1.0);
        // mpmath: lambertw(-1/(2e), -1)
        assert!(rel(wm1(-INV_E / 2.0).unwrap(), -2.678_346_990_016_660_7) < 1e-15);
        let z = -2.0 * (-2.0f64).exp();
        assert!(rel(wm1(z).unwrap(), -2.0) < 1e-14);
    }

    #[test]
    fn domain_errors() {
        assert!(w0(-0.4).is_err());
        assert!(w0(f64::NAN).is_err());
        assert!(w0(f64::INFINITY).is_err());
        assert!(wm1(0.0).is_err());
        assert!(wm1(0.1).is_err());
        assert!(wm1(-0.4).is_err());
        assert!(branch_difference_from_log_ratio(1e-12).is_err());
    }

    #[test]
    fn clamp_just_below_branch_point() {
        let below = -INV_E * (1.0 + 2.0 * f64::EPSILON);
        assert_eq!(w0(below).unwrap(), -1.0);
        assert_eq!(wm1(below).unwrap(), -1.0);
        let too_far = -INV_E * (1.0 + 1e-13);
        assert!(w0(too_far).is_err());
        assert!(wm1(too_far).is_err());
    }

    #[test]
    fn ordering_around_minus_one() {
        for i in 1..1000 {
            let z = -INV_E * i as f64 / 1000.0;
            let (p, s) = (w0(z).unwrap(), wm1(z).unwrap());
            assert!(s < -1.0 && -1.0 < p && p <= 0.0, "z = {z}: {s} {p}");
        }
    }

    #[test]
    fn residual_contract_moderate_range() {
        let mut zs: Vec<f64> = (0..400).map(|i| -INV_E + i as f64 * 1e-3).collect();
        zs.extend((0..200).map(|i| 10f64.powf(-12.0 + i as f64 * 0.1)));
        for z in zs {
            for branch in [Branch::Principal, Branch::Secondary] {
                if branch == Branch::Secondary && z >= 0.0 {
                    continue;
                }
                let w = lambert_w(z, branch).unwrap();
                if w.abs() > 20.0 {
                    continue;
                }
                let residual = (w * w.exp() - z).abs();
                assert!(
                    residual <= 1e-13 * z.abs().max(1e-300),
                    "{branch:?} z = {z}: residual {residual}"
                );
            }
        }
    }

    #[test]
    fn large_and_tiny_arguments() {
        // w e^w at w = 700 and w = -700.
        let z = 700.0 * 700f64.exp();
        assert!(rel(w0(z).unwrap(), 700.0) < 1e-14);
        let z = -700.0 * (-700f64).exp();
        assert!(rel(wm1(z).unwrap(), -700.0) < 1e-14);
        // Subnormal argument uses the logarithmic form.
        let w = wm1(-1e-310).unwrap();
        let l = (1e-310f64).ln();
        assert!(((w + (-w).ln()) - l).abs() < 1e-12 * l.abs());
        assert!(rel(w0(f64::MAX).unwrap(), 703.227_033_104_770_3) < 1e-14);
    }

    #[test]
    fn branch_difference_examples() {
        assert_eq!(branch_difference_from_log_ratio(0.0).unwrap(), 0.0);
        let d = branch_difference_from_log_ratio(-std::f64::consts::LN_2).unwrap();
        assert!(rel(d, 2.446_386_037_030_126_2) < 1e-14);
    }

    #[test]
    fn series_and_direct_agree_at_the_seam() {
        // r with -expm1(r) = SERIES_SWITCH, then nudge to either side.
        let r = (-SERIES_SWITCH).ln_1p();
        let q = -r.exp_m1();
        let p = (2.0 * q).sqrt();
        let series = odd_series_difference(p);
        let arg = NegArg::from_log_ratio(r);
        let direct =
            solve_negative(arg, Branch::Principal) - solve_negative(arg, Branch::Secondary);
        assert!(rel(series, direct) < 1e-9, "{series} vs {direct}");
        for branch in [Branch::Principal, Branch::Secondary] {
            let s = branch_series(branch.sign() * p);
            let h = halley(arg.z, s);
            assert!(rel(s, h) < 1e-14, "{branch:?}: {s} vs {h}");
        }
    }

    #[test]
    fn extremely_negative_log_ratio() {
        // z underflows; W0 -> 0 and W-1 solved in log form.
        let r = -6.931_471_805_599_453e7;
        let d = branch_difference_from_log_ratio(r).unwrap();
        let wm = -d;
        assert!(((wm + (-wm).ln()) - (r - 1.0)).abs() <= 1e-15 * r.abs());
    }
}
