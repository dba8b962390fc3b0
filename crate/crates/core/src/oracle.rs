//! Brute-force reference values.
//!
//! Everything here is plain bisection seeded from analytic brackets and
//! shares no code with [`crate::lambert_w`]. It is slow on purpose and only
//! used to validate the closed forms (tests and `--verify` in the CLI).

use crate::bandwidth::GammaShapeSpec;
use crate::error::{Error, Result};
use crate::lambert_w::Branch;
use crate::quantile::cdf_a2;
use crate::Proportion;

/// Interval `[lo, hi]` over which a target function changes sign, with the
/// absolute width at which bisection stops.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub tol: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64, tol: f64) -> Result<Self> {
        if !(lo < hi) || !(tol >= 0.0) {
            return Err(Error::Bracket {
                lo,
                hi,
                reason: "requires lo < hi and tol >= 0",
            });
        }
        Ok(Bracket { lo, hi, tol })
    }
}

/// Bisection for a sign change of `f` on the bracket.
///
/// Stops once the interval is no wider than `tol` or has no representable
/// midpoint, and returns the midpoint.
pub fn bisect<F: Fn(f64) -> f64>(f: F, bracket: Bracket) -> Result<f64> {
    let Bracket {
        mut lo,
        mut hi,
        tol,
    } = bracket;
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.is_nan() || f_hi.is_nan() || (f_lo > 0.0) == (f_hi > 0.0) {
        return Err(Error::Bracket {
            lo,
            hi,
            reason: "target does not change sign",
        });
    }
    let lo_positive = f_lo > 0.0;
    while hi - lo > tol {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + 0.5 * (hi - lo))
}

const ORACLE_INV_E: f64 = 0.367_879_441_171_442_33;

/// Solves `u e^u = z` on the requested branch by bisection.
///
/// The principal branch is searched over `[-1, max(1, 2 ln z)]`, the
/// secondary over `[min(-700, 2 ln(-z)), -1]`, each down to adjacent doubles
/// (well inside `1e-14 max(1, |u|)`). In plain double precision the
/// result is only good to about `sqrt(eps)` right at the branch point.
pub fn oracle_lambert_w(z: f64, branch: Branch) -> Result<f64> {
    let lowest = -ORACLE_INV_E * (1.0 + 4.0 * f64::EPSILON);
    let bad = |reason| Error::Domain {
        name: "z",
        value: z,
        reason,
    };
    if z.is_nan() || z < lowest {
        return Err(bad("oracle W requires z >= -1/e"));
    }
    let f = |u: f64| u * u.exp() - z;
    let bracket = match branch {
        Branch::Principal => {
            if !z.is_finite() {
                return Err(bad("oracle W0 requires finite z"));
            }
            Bracket::new(-1.0, 1f64.max(2.0 * z.ln()), 0.0)?
        }
        Branch::Secondary => {
            if z >= 0.0 {
                return Err(bad("oracle W-1 requires z < 0"));
            }
            Bracket::new((-700f64).min(2.0 * (-z).ln()), -1.0, 0.0)?
        }
    };
    if f(-1.0) >= 0.0 {
        // at (or rounded past) the branch point
        return Ok(-1.0);
    }
    bisect(f, bracket)
}

/// `ln(1 - t) + t`, accurate in relative terms as `t -> 0`.
fn log1m_plus(t: f64) -> f64 {
    if t.abs() < 0.25 {
        // -sum_{k>=2} t^k / k
        let mut sum = 0.0;
        for k in (2..=40).rev() {
            sum = sum * t + 1.0 / k as f64;
        }
        -sum * t * t
    } else {
        (-t).ln_1p() + t
    }
}

/// `W0(z) - W-1(z)` at `z = -exp(r - 1)`, computed without going through `z`.
///
/// Writing `u = t - 1` turns `u e^u = -exp(r - 1)` into
/// `ln(1 - t) + t = r`, whose left side is evaluated with a series near
/// `t = 0`. The two roots `t > 0` (principal) and `t < 0` (secondary) are
/// bisected separately and their difference never cancels, so this keeps
/// full relative accuracy as `r -> 0-`.
pub fn oracle_branch_difference(r: f64) -> Result<f64> {
    if r.is_nan() || r > 0.0 {
        return Err(Error::Domain {
            name: "r",
            value: r,
            reason: "log ratio must be <= 0",
        });
    }
    if r == 0.0 {
        return Ok(0.0);
    }
    let g = |t: f64| log1m_plus(t) - r;
    let upper = bisect(g, Bracket::new(0.0, 1.0, 0.0)?)?;
    let mut lo = -1.0;
    let mut doublings = 0;
    while g(lo) > 0.0 {
        lo *= 2.0;
        doublings += 1;
        if doublings > 2000 || !lo.is_finite() {
            return Err(Error::Bracket {
                lo,
                hi: 0.0,
                reason: "secondary root not enclosed",
            });
        }
    }
    let lower = bisect(g, Bracket::new(lo, 0.0, 0.0)?)?;
    Ok(upper - lower)
}

const MAX_DOUBLINGS: u32 = 1_000_000;

/// Both abscissae where a gamma-shaped function equals `y` times its maximum.
///
/// The level test is done on `ln(g(x) / g_max)`, which for `x' = x + s`,
/// `m = (a - 1) b` and `u = (x' - m)/m` is `(a - 1)(ln(1 + u) - u)`; the
/// amplitude cancels exactly. The left crossing is bisected on
/// `[-s, m - s]`; the right one is enclosed by doubling a step beyond the
/// mode, starting from `b`. For `a = 1` the maximum sits at the left end of
/// the domain, which is returned as the left crossing.
pub fn oracle_crossings(spec: GammaShapeSpec, y: Proportion) -> Result<(f64, f64)> {
    let a = spec.params.shape();
    let b = spec.params.scale();
    let s = spec.shift();
    let y = y.get();
    if a < 1.0 || y >= 1.0 {
        return Err(Error::Bracket {
            lo: -s,
            hi: f64::INFINITY,
            reason: "crossings need a >= 1 and y < 1",
        });
    }
    let ln_y = y.ln();
    let m = (a - 1.0) * b;
    let level = |x: f64| {
        let xs = x + s;
        if a == 1.0 {
            -xs / b - ln_y
        } else {
            (a - 1.0) * log1m_plus(-(xs - m) / m) - ln_y
        }
    };
    let tol = 1e-12 * (m + b);
    let peak = m - s;

    let low = if a == 1.0 {
        -s
    } else {
        bisect(level, Bracket::new(-s, peak, tol)?)?
    };

    let mut step = b;
    let mut doublings = 0;
    while level(peak + step) >= 0.0 {
        step *= 2.0;
        doublings += 1;
        if doublings >= MAX_DOUBLINGS || !(peak + step).is_finite() {
            return Err(Error::Bracket {
                lo: peak,
                hi: peak + step,
                reason: "right crossing not enclosed",
            });
        }
    }
    let high = bisect(level, Bracket::new(peak, peak + step, tol)?)?;
    Ok((low, high))
}

/// Median of `Gamma(2, b)` by bisecting `cdf_a2(x, b) = 1/2` on `[0, 10 b]`.
pub fn oracle_median_a2(b: f64) -> Result<f64> {
    let f = |x: f64| cdf_a2(x, b).map(|p| p - 0.5).unwrap_or(f64::NAN);
    bisect(f, Bracket::new(0.0, 10.0 * b, 1e-13 * b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ShapeScale;

    #[test]
    fn bisect_finds_sqrt_two() {
        let r = bisect(|x| x * x - 2.0, Bracket::new(0.0, 2.0, 1e-15).unwrap()).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn bisect_rejects_missing_sign_change() {
        let err = bisect(|x| x * x + 1.0, Bracket::new(-1.0, 1.0, 1e-12).unwrap());
        assert!(matches!(err, Err(Error::Bracket { .. })));
        assert!(Bracket::new(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn lambert_examples() {
        let w = oracle_lambert_w(std::f64::consts::E, Branch::Principal).unwrap();
        assert!((w - 1.0).abs() < 1e-14);
        let w = oracle_lambert_w(-ORACLE_INV_E / 2.0, Branch::Secondary).unwrap();
        assert!((w + 2.678_346_990_016_660_7).abs() < 1e-13);
        for branch in [Branch::Principal, Branch::Secondary] {
            let w = oracle_lambert_w(-ORACLE_INV_E, branch).unwrap();
            assert!((w + 1.0).abs() < 1e-7, "{branch:?}: {w}");
        }
        assert!(oracle_lambert_w(-0.5, Branch::Principal).is_err());
        assert!(oracle_lambert_w(0.5, Branch::Secondary).is_err());
    }

    #[test]
    fn lambert_residual() {
        let mut zs: Vec<f64> = (1..200).map(|i| -ORACLE_INV_E * i as f64 / 200.0).collect();
        zs.extend([1e-8, 0.3, 1.0, 5.0, 100.0, 1e5]);
        for z in zs {
            for branch in [Branch::Principal, Branch::Secondary] {
                if branch == Branch::Secondary && z > 0.0 {
                    continue;
                }
                let u = oracle_lambert_w(z, branch).unwrap();
                let residual = (u * u.exp() - z).abs();
                assert!(
                    residual <= 1e-12 * z.abs(),
                    "{branch:?} z = {z}: {residual}"
                );
            }
        }
    }

    #[test]
    fn log_form_difference_matches_reference() {
        let d = oracle_branch_difference(-std::f64::consts::LN_2).unwrap();
        assert!((d - 2.446_386_037_030_126_2).abs() < 1e-15);
        assert_eq!(oracle_branch_difference(0.0).unwrap(), 0.0);
    }

    #[test]
    fn crossings_examples() {
        let spec = GammaShapeSpec::new(ShapeScale::new(2.0, 1.0).unwrap(), 1.0, 0.0).unwrap();
        let (lo, hi) = oracle_crossings(spec, Proportion::HALF).unwrap();
        assert!((lo - 0.231_960_952_986_534_43).abs() < 1e-12);
        assert!((hi - 2.678_346_990_016_660_7).abs() < 1e-12);

        let moved = GammaShapeSpec::new(ShapeScale::new(2.0, 1.0).unwrap(), 5.0, 2.0).unwrap();
        let (lo2, hi2) = oracle_crossings(moved, Proportion::HALF).unwrap();
        assert!((lo2 - (lo - 2.0)).abs() < 1e-12);
        assert!((hi2 - (hi - 2.0)).abs() < 1e-12);

        let exp = GammaShapeSpec::new(ShapeScale::new(1.0, 3.0).unwrap(), 1.0, 0.0).unwrap();
        let (lo, hi) = oracle_crossings(exp, Proportion::HALF).unwrap();
        assert_eq!(lo, 0.0);
        assert!((hi - 3.0 * std::f64::consts::LN_2).abs() < 1e-11);

        assert!(oracle_crossings(spec, Proportion::new(1.0).unwrap()).is_err());
    }

    #[test]
    fn median_example() {
        let m = oracle_median_a2(1.0).unwrap();
        assert!((m - 1.678_346_990_016_660_7).abs() < 1e-12);
        let m2 = oracle_median_a2(2.0).unwrap();
        assert!((m2 - 2.0 * m).abs() < 1e-12);
    }
}
