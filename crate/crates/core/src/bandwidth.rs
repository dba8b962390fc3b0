//! Gamma densities, gamma-shaped functions and their widths.
//!
//! For shape `a > 1` the density `p(x) ∝ x^(a-1) e^(-x/b)` takes every level
//! below its maximum twice. Writing the level as a proportion `y` of the
//! maximum, both crossings are
//!
//! ```text
//! x_k = -(a - 1) b W_k(-y^(1/(a-1)) / e),   k in {0, -1}
//! ```
//!
//! with `W0` giving the crossing below the mode and `W-1` the one above it.
//! Every power in that expression is handled in log space: the Lambert W
//! argument is `-exp(r - 1)` with `r = ln(y)/(a - 1)`, and `r` itself is what
//! gets passed down so the branch-point offset `1 + e z = -expm1(r)` never
//! suffers cancellation.

use std::f64::consts::LN_2;

use crate::error::{domain, Result};
use crate::lambert_w::{branch_difference_from_log_ratio, branch_from_log_ratio, Branch};
use crate::log_gamma::log_gamma;

/// Shape `a` and scale `b` of a gamma density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeScale {
    a: f64,
    b: f64,
}

impl ShapeScale {
    /// Requires finite `a > 0` and `b > 0`. Width operations additionally
    /// require `a >= 1`.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return domain("a", a, "shape must be finite and > 0");
        }
        if !(b.is_finite() && b > 0.0) {
            return domain("b", b, "scale must be finite and > 0");
        }
        Ok(ShapeScale { a, b })
    }

    pub fn shape(&self) -> f64 {
        self.a
    }

    pub fn scale(&self) -> f64 {
        self.b
    }

    fn require_unimodal(&self) -> Result<()> {
        if self.a < 1.0 {
            return domain("a", self.a, "width is undefined for shape a < 1 (no mode)");
        }
        Ok(())
    }

    fn require_interior_mode(&self) -> Result<()> {
        if self.a <= 1.0 {
            return domain("a", self.a, "requires shape a > 1");
        }
        Ok(())
    }
}

/// A gamma-shaped function `K (x + s)^(a-1) exp(-(x + s)/b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaShapeSpec {
    pub params: ShapeScale,
    amplitude: f64,
    shift: f64,
}

impl GammaShapeSpec {
    pub fn new(params: ShapeScale, amplitude: f64, shift: f64) -> Result<Self> {
        if !(amplitude.is_finite() && amplitude > 0.0) {
            return domain("K", amplitude, "amplitude must be finite and > 0");
        }
        if !shift.is_finite() {
            return domain("s", shift, "shift must be finite");
        }
        Ok(GammaShapeSpec {
            params,
            amplitude,
            shift,
        })
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }
}

/// Proportion `y` of the maximum, `0 < y <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Proportion(f64);

impl Proportion {
    pub const HALF: Proportion = Proportion(0.5);

    pub fn new(y: f64) -> Result<Self> {
        if !(y > 0.0 && y <= 1.0) {
            return domain("y", y, "proportion must satisfy 0 < y <= 1");
        }
        Ok(Proportion(y))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Crossings of a gamma-shaped function at `y` times its maximum.
///
/// `width` comes from the cancellation-free branch difference and is the
/// authoritative value; near `y = 1` it is more accurate than
/// `x_high - x_low`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WidthResult {
    pub x_low: f64,
    pub x_high: f64,
    pub width: f64,
    pub mode: f64,
    pub y: Proportion,
}

/// Octave bandwidth `log2(H / L)` with its two crossings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OctaveResult {
    pub high: f64,
    pub low: f64,
    pub octaves: f64,
}

/// `ln p(x)`; `x >= 0` is the caller's responsibility.
fn ln_pdf(x: f64, params: ShapeScale) -> f64 {
    let ShapeScale { a, b } = params;
    let norm = log_gamma(a).expect("validated shape") + a * b.ln();
    if x == 0.0 {
        return match a.partial_cmp(&1.0) {
            Some(std::cmp::Ordering::Greater) => f64::NEG_INFINITY,
            Some(std::cmp::Ordering::Equal) => -b.ln(),
            _ => f64::INFINITY,
        };
    }
    (a - 1.0) * x.ln() - x / b - norm
}

/// Gamma density `x^(a-1) e^(-x/b) / (Γ(a) b^a)`, evaluated in log space.
pub fn gamma_pdf(x: f64, params: ShapeScale) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return domain("x", x, "gamma density is supported on x >= 0");
    }
    Ok(ln_pdf(x, params).exp())
}

/// `K (x + s)^(a-1) exp(-(x + s)/b)`.
pub fn gamma_shaped(x: f64, spec: GammaShapeSpec) -> Result<f64> {
    let xs = x + spec.shift;
    if xs.is_nan() || xs < 0.0 {
        return domain("x", x, "gamma-shaped function requires x + s >= 0");
    }
    let ShapeScale { a, b } = spec.params;
    if xs == 0.0 {
        return Ok(if a > 1.0 {
            0.0
        } else if a == 1.0 {
            spec.amplitude
        } else {
            f64::INFINITY
        });
    }
    Ok(spec.amplitude * ((a - 1.0) * xs.ln() - xs / b).exp())
}

/// Location of the maximum, `(a - 1) b`. At `a = 1` this is the boundary
/// maximum at the origin.
pub fn mode(params: ShapeScale) -> Result<f64> {
    params.require_unimodal()?;
    Ok((params.a - 1.0) * params.b)
}

/// `ln p_max` taken from the value `gamma_pdf` itself returns at the mode, so
/// that `inverse_pdf(gamma_pdf(mode))` lands exactly on the mode.
fn ln_pdf_max(params: ShapeScale) -> f64 {
    let lp = ln_pdf((params.a - 1.0) * params.b, params);
    let p = lp.exp();
    if p.is_normal() {
        p.ln()
    } else {
        lp
    }
}

/// Two-valued inverse of the gamma density:
/// `x = -(a - 1) b W_k(-(p Γ(a) b^a)^(1/(a-1)) / ((a - 1) b))`.
///
/// `Branch::Principal` returns the abscissa at or below the mode,
/// `Branch::Secondary` the one at or above it. Densities exceeding the
/// maximum by at most `1e-12` relative are clamped to it.
pub fn inverse_pdf(p: f64, params: ShapeScale, branch: Branch) -> Result<f64> {
    params.require_interior_mode()?;
    if !(p.is_finite() && p > 0.0) {
        return domain("p", p, "density level must be finite and > 0");
    }
    let log_level = p.ln() - ln_pdf_max(params);
    if log_level > 1e-12f64.ln_1p() {
        return domain("p", p, "density level exceeds the maximum of the density");
    }
    let scale = (params.a - 1.0) * params.b;
    let r = log_level.min(0.0) / (params.a - 1.0);
    Ok(-scale * branch_from_log_ratio(r, branch))
}

/// Full width at `y` times the maximum.
///
/// `a = 1` is the exponential density: the maximum sits at the origin and the
/// single interior crossing is `-b ln y`.
pub fn fwym(params: ShapeScale, y: Proportion) -> Result<WidthResult> {
    params.require_unimodal()?;
    let ShapeScale { a, b } = params;
    if a == 1.0 {
        let x_high = -b * y.0.ln();
        return Ok(WidthResult {
            x_low: 0.0,
            x_high,
            width: x_high,
            mode: 0.0,
            y,
        });
    }
    let scale = (a - 1.0) * b;
    let r = y.0.ln() / (a - 1.0);
    Ok(WidthResult {
        x_low: -scale * branch_from_log_ratio(r, Branch::Principal),
        x_high: -scale * branch_from_log_ratio(r, Branch::Secondary),
        width: scale * branch_difference_from_log_ratio(r)?,
        mode: scale,
        y,
    })
}

/// Full width at half maximum.
pub fn fwhm(params: ShapeScale) -> Result<WidthResult> {
    fwym(params, Proportion::HALF)
}

/// [`fwym`] for a shifted and scaled gamma-shaped function. The amplitude
/// has no effect; the crossings and the mode move by `-s`.
pub fn fwym_shifted(spec: GammaShapeSpec, y: Proportion) -> Result<WidthResult> {
    let w = fwym(spec.params, y)?;
    let s = spec.shift;
    Ok(WidthResult {
        x_low: w.x_low - s,
        x_high: w.x_high - s,
        mode: w.mode - s,
        ..w
    })
}

/// FWHM of the normal approximation `N(ab, ab^2)`: `2 sqrt(2 ln 2) b sqrt(a)`.
pub fn gaussian_fwhm_approx(params: ShapeScale) -> Result<f64> {
    params.require_unimodal()?;
    Ok(2.0 * (2.0 * LN_2).sqrt() * params.b * params.a.sqrt())
}

/// `gaussian_fwhm_approx / fwhm - 1`, evaluated at unit scale so the result
/// does not depend on `b` at all.
pub fn approx_proportional_error(params: ShapeScale) -> Result<f64> {
    params.require_unimodal()?;
    let unit = ShapeScale {
        a: params.a,
        b: 1.0,
    };
    Ok(gaussian_fwhm_approx(unit)? / fwhm(unit)?.width - 1.0)
}

/// Octave bandwidth `log2(H / L)` at `y` times the maximum.
///
/// Both branch values satisfy `ln(-w) + w = ln(-z)`, so
/// `ln(W-1 / W0) = W0 - W-1` and the octave count is the branch difference
/// over `ln 2`. That form stays accurate as `y -> 1` and when `L` underflows.
pub fn octave_bandwidth(params: ShapeScale, y: Proportion) -> Result<OctaveResult> {
    params.require_interior_mode()?;
    let ShapeScale { a, b } = params;
    let scale = (a - 1.0) * b;
    let r = y.0.ln() / (a - 1.0);
    Ok(OctaveResult {
        high: -scale * branch_from_log_ratio(r, Branch::Secondary),
        low: -scale * branch_from_log_ratio(r, Branch::Principal),
        octaves: branch_difference_from_log_ratio(r)? / LN_2,
    })
}
