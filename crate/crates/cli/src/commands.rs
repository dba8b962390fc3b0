use gammabw::oracle::oracle_crossings;
use gammabw::{
    approx_proportional_error, fwym, gamma_pdf, gaussian_fwhm_approx, mode, octave_bandwidth,
    GammaShapeSpec, Proportion, ShapeScale,
};

use crate::report::{Report, Table};

/// Relative disagreement with the oracle above which `--verify` fails.
pub const VERIFY_TOLERANCE: f64 = 1e-8;

#[derive(Debug)]
pub enum Failure {
    /// Bad parameters; nothing was computed.
    Invalid(String),
    /// The computed report disagrees with the oracle.
    Verification {
        report: Box<Report>,
        message: String,
    },
}

impl From<gammabw::Error> for Failure {
    fn from(e: gammabw::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn invalid<T>(message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Invalid(message.into()))
}

pub fn fwhm(a: f64, b: f64, y: f64, verify: bool) -> Result<Report, Failure> {
    let params = ShapeScale::new(a, b)?;
    let y = Proportion::new(y)?;
    let w = fwym(params, y)?;
    let mut record = vec![
        ("a", a),
        ("b", b),
        ("y", y.get()),
        ("width", w.width),
        ("x_low", w.x_low),
        ("x_high", w.x_high),
        ("mode", w.mode),
    ];
    if !verify {
        return Ok(Report::Record(record));
    }

    let oracle_width = if y.get() == 1.0 {
        0.0
    } else {
        let (lo, hi) = oracle_crossings(GammaShapeSpec::new(params, 1.0, 0.0)?, y)?;
        hi - lo
    };
    let discrepancy = if oracle_width == 0.0 {
        w.width.abs()
    } else {
        (w.width - oracle_width).abs() / oracle_width
    };
    record.push(("oracle_width", oracle_width));
    record.push(("rel_discrepancy", discrepancy));
    let report = Report::Record(record);
    if !(discrepancy <= VERIFY_TOLERANCE) {
        return Err(Failure::Verification {
            report: Box::new(report),
            message: format!(
                "verification failed: relative discrepancy {discrepancy:e} exceeds {VERIFY_TOLERANCE:e}"
            ),
        });
    }
    Ok(report)
}

pub fn octave(a: f64, b: f64, y: f64) -> Result<Report, Failure> {
    let params = ShapeScale::new(a, b)?;
    let y = Proportion::new(y)?;
    if a <= 1.0 {
        return invalid(format!(
            "a = {a}: octave bandwidth requires a > 1 (the low crossing is 0 otherwise)"
        ));
    }
    let o = octave_bandwidth(params, y)?;
    Ok(Report::Record(vec![
        ("a", a),
        ("b", b),
        ("y", y.get()),
        ("octaves", o.octaves),
        ("high", o.high),
        ("low", o.low),
    ]))
}

pub fn curve(
    a: f64,
    b: f64,
    n: usize,
    xmax: Option<f64>,
    levels: &[f64],
) -> Result<Report, Failure> {
    let params = ShapeScale::new(a, b)?;
    let m = mode(params)?;
    if n < 2 {
        return invalid(format!("n = {n}: the grid needs at least 2 points"));
    }
    let xmax = xmax.unwrap_or(m + 8.0 * b * a.sqrt());
    if !(xmax.is_finite() && xmax > 0.0) {
        return invalid(format!("xmax = {xmax}: must be finite and > 0"));
    }

    let mut data = Table::new(vec!["x", "pdf"]);
    let last = (n - 1) as f64;
    for i in 0..n {
        let x = xmax * i as f64 / last;
        data.push(vec![x, gamma_pdf(x, params)?]);
    }

    let peak = gamma_pdf(m, params)?;
    let mut notes = Table::new(vec!["y", "level", "x_low", "x_high", "width"]);
    for &y in levels {
        let w = fwym(params, Proportion::new(y)?)?;
        notes.push(vec![y, y * peak, w.x_low, w.x_high, w.width]);
    }

    Ok(Report::Table {
        params: vec![("a", a), ("b", b), ("mode", m), ("pdf_max", peak)],
        data: ("rows", data),
        annotation: Some(("crossings", notes)),
    })
}

pub fn compare(a_min: f64, a_max: f64, points: usize) -> Result<Report, Failure> {
    if !(a_min > 1.0 && a_min < a_max && a_max.is_finite()) {
        return invalid(format!(
            "a range [{a_min}, {a_max}]: requires 1 < a_min < a_max < inf"
        ));
    }
    if points < 2 {
        return invalid(format!(
            "points = {points}: the table needs at least 2 rows"
        ));
    }
    let (lo, hi) = (a_min.ln(), a_max.ln());
    let last = points - 1;
    let mut data = Table::new(vec![
        "a",
        "exact_fwhm",
        "gaussian_fwhm",
        "proportional_error",
    ]);
    for i in 0..points {
        let a = match i {
            0 => a_min,
            i if i == last => a_max,
            i => (lo + (hi - lo) * i as f64 / last as f64).exp(),
        };
        let params = ShapeScale::new(a, 1.0)?;
        data.push(vec![
            a,
            fwym(params, Proportion::HALF)?.width,
            gaussian_fwhm_approx(params)?,
            approx_proportional_error(params)?,
        ]);
    }
    Ok(Report::Table {
        params: vec![("b", 1.0)],
        data: ("rows", data),
        annotation: None,
    })
}
