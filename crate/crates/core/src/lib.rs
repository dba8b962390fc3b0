//! Exact bandwidths of gamma-distribution-shaped functions.
//!
//! A gamma-shaped function `g(x) = K (x + s)^(a-1) exp(-(x + s)/b)` has a
//! two-valued inverse expressible through the two real branches of the
//! Lambert W function. This crate evaluates those branches from scratch and
//! builds on them:
//!
//! * [`lambert_w`]: `W0`, `W-1` and the cancellation-free difference
//!   `W0(z) - W-1(z)` near the branch point `z = -1/e`.
//! * [`bandwidth`]: gamma pdf, inverse pdf, full width at any proportion of
//!   the maximum (FWyM / FWHM), octave bandwidth and the Gaussian (CLT)
//!   approximation to the FWHM.
//! * [`quantile`]: closed-form CDF, quantile and median of `Gamma(2, b)`.
//! * [`oracle`]: bisection-only reference implementations used to validate
//!   every closed form.
//!
//! ```
//! use gammabw::{fwhm, ShapeScale};
//!
//! let w = fwhm(ShapeScale::new(2.0, 1.0).unwrap()).unwrap();
//! assert!((w.width - 2.446386037030126).abs() < 1e-12);
//! ```

pub mod bandwidth;
pub mod error;
pub mod lambert_w;
pub mod log_gamma;
pub mod oracle;
pub mod quantile;

pub use bandwidth::{
    approx_proportional_error, fwhm, fwym, fwym_shifted, gamma_pdf, gamma_shaped,
    gaussian_fwhm_approx, inverse_pdf, mode, octave_bandwidth, GammaShapeSpec, OctaveResult,
    Proportion, ShapeScale, WidthResult,
};
pub use error::{Error, Result};
pub use lambert_w::{branch_difference_from_log_ratio, w0, wm1, Branch};
pub use log_gamma::log_gamma;
pub use quantile::{cdf_a2, check_transform_identity, median_a2, quantile_a2, ProbabilityLevel};
