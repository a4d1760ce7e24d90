//! Pointwise geometric functionals and direct radius-of-property scans.
//!
//! A normalized function is starlike / convex / close-to-convex on a disk
//! exactly when the corresponding real part stays positive there:
//!
//! * starlike:        Re( z·f'(z) / f(z) )
//! * convex:          Re( 1 + z·f''(z) / f'(z) )
//! * close-to-convex: Re( f'(z) )   (with the identity as reference)
//!
//! The radius of a property is found by scanning circles outward: the
//! minimum of the functional over each circle is tracked until it first
//! changes sign, then the crossing is bisected in r. Minima over a circle
//! need not be monotone in r, which is why the grid comes first — a
//! bracketing pair at grid resolution cannot be skipped.

use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Error;
use crate::scan;
use crate::series::{RawSeries, TaylorSeries};

/// Denominator modulus below which a functional is treated as having a
/// pole (signals that the scan radius left the domain of validity).
const POLE_EPS: f64 = 1e-14;

/// The three geometric properties characterized by a positive real part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PropertyKind {
    #[serde(rename = "starlike")]
    Starlike,
    #[serde(rename = "convex")]
    Convex,
    #[serde(rename = "ctc")]
    CloseToConvex,
}

impl FromStr for PropertyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "starlike" => Ok(PropertyKind::Starlike),
            "convex" => Ok(PropertyKind::Convex),
            "ctc" => Ok(PropertyKind::CloseToConvex),
            other => Err(Error::Parse(format!("unknown property kind: {}", other))),
        }
    }
}

/// Scan parameters for circle minimization and radius bisection.
#[derive(Debug, Clone, Copy)]
pub struct ScanConfig {
    /// Uniform θ samples per circle.
    pub theta_samples: usize,
    /// Outward step of the radius grid.
    pub r_step: f64,
    /// Bisection tolerance on the reported radius.
    pub bisection_tol: f64,
    /// θ tolerance of the golden-section refinement.
    pub refine_tol: f64,
    /// Largest radius scanned.
    pub r_max: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            theta_samples: 4096,
            r_step: 1e-3,
            bisection_tol: 1e-7,
            refine_tol: 1e-12,
            r_max: 0.999,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.theta_samples < 256 {
            return Err(Error::Domain("theta_samples must be at least 256".into()));
        }
        if !(self.r_step > 0.0 && self.bisection_tol > 0.0 && self.refine_tol > 0.0) {
            return Err(Error::Domain("scan tolerances must be positive".into()));
        }
        if !(0.0 < self.r_max && self.r_max < 1.0) {
            return Err(Error::Domain("r_max must lie in (0, 1)".into()));
        }
        Ok(())
    }
}

/// Minimum of a functional over one circle.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MinResult {
    pub r: f64,
    pub min_value: f64,
    pub argmin_theta: f64,
    pub samples: usize,
}

/// How a radius was determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RadiusMethod {
    #[serde(rename = "sign-bisection")]
    SignBisection,
    #[serde(rename = "analytic")]
    Analytic,
}

/// A computed radius of a geometric property.
///
/// Either `radius < r_max` and the circle minimum at `radius` is within
/// `residual` of zero, or `radius == r_max` and the minimum stayed positive
/// throughout the scan.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RadiusResult {
    pub kind: PropertyKind,
    pub radius: f64,
    /// |minimum on the circle at `radius`|.
    pub residual: f64,
    pub method: RadiusMethod,
    pub argmin_theta: f64,
}

/// Precomputed derivative chain, so circle scans don't rebuild series per θ.
struct FunctionalEvaluator<'a> {
    kind: PropertyKind,
    f: &'a TaylorSeries,
    fp: RawSeries,
    fpp: RawSeries,
}

impl<'a> FunctionalEvaluator<'a> {
    fn new(kind: PropertyKind, f: &'a TaylorSeries) -> Self {
        let fp = f.derivative();
        let fpp = fp.derivative();
        FunctionalEvaluator { kind, f, fp, fpp }
    }

    fn eval(&self, z: Complex64) -> Result<f64, Error> {
        if z.norm() == 0.0 {
            return Ok(1.0); // removable singularity: all three functionals are 1 at 0
        }
        match self.kind {
            PropertyKind::CloseToConvex => Ok(self.fp.eval(z).re),
            PropertyKind::Starlike => {
                let w = self.f.eval(z);
                if w.norm() < POLE_EPS {
                    return Err(Error::PoleEncountered {
                        radius: z.norm(),
                        theta: z.arg(),
                        last_good_radius: None,
                    });
                }
                Ok((z * self.fp.eval(z) / w).re)
            }
            PropertyKind::Convex => {
                let p = self.fp.eval(z);
                if p.norm() < POLE_EPS {
                    return Err(Error::PoleEncountered {
                        radius: z.norm(),
                        theta: z.arg(),
                        last_good_radius: None,
                    });
                }
                Ok(1.0 + (z * self.fpp.eval(z) / p).re)
            }
        }
    }
}

/// The real part characterizing `kind` at a single point.
pub fn eval_functional(kind: PropertyKind, f: &TaylorSeries, z: Complex64) -> Result<f64, Error> {
    FunctionalEvaluator::new(kind, f).eval(z)
}

/// Minimum of the functional over |z| = r: grid plus golden refinement.
pub fn min_on_circle(
    kind: PropertyKind,
    f: &TaylorSeries,
    r: f64,
    cfg: &ScanConfig,
) -> Result<MinResult, Error> {
    if !(0.0 < r && r < 1.0) {
        return Err(Error::Domain(format!(
            "circle radius must lie in (0, 1), got {}",
            r
        )));
    }
    cfg.validate()?;
    let ev = FunctionalEvaluator::new(kind, f);
    let mut g = |theta: f64| ev.eval(Complex64::from_polar(r, theta));
    let (argmin_theta, min_value) =
        scan::min_over_circle(&mut g, cfg.theta_samples, cfg.refine_tol)?;
    Ok(MinResult {
        r,
        min_value,
        argmin_theta,
        samples: cfg.theta_samples,
    })
}

/// Largest radius up to which the functional stays positive on every
/// scanned circle: outward grid walk to the first sign change, then
/// bisection of the bracketing pair. Ties resolve to the smaller radius.
///
/// A pole inside the scan is a hard stop and is reported together with the
/// last pole-free radius.
pub fn radius_of_positivity(
    kind: PropertyKind,
    f: &TaylorSeries,
    cfg: &ScanConfig,
) -> Result<RadiusResult, Error> {
    cfg.validate()?;
    let attach_last_good = |err: Error, last_good: f64| match err {
        Error::PoleEncountered { radius, theta, .. } => Error::PoleEncountered {
            radius,
            theta,
            last_good_radius: Some(last_good),
        },
        other => other,
    };

    let mut prev_r = 0.0f64;
    let bracket;
    let mut i = 1usize;
    loop {
        let r = (i as f64 * cfg.r_step).min(cfg.r_max);
        let m = min_on_circle(kind, f, r, cfg).map_err(|e| attach_last_good(e, prev_r))?;
        if m.min_value <= 0.0 {
            bracket = (prev_r, r);
            break;
        }
        if r >= cfg.r_max {
            // Positive throughout the scan range.
            return Ok(RadiusResult {
                kind,
                radius: cfg.r_max,
                residual: m.min_value,
                method: RadiusMethod::SignBisection,
                argmin_theta: m.argmin_theta,
            });
        }
        prev_r = r;
        i += 1;
    }

    let (mut lo, mut hi) = bracket;
    while hi - lo > cfg.bisection_tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let m = min_on_circle(kind, f, mid, cfg).map_err(|e| attach_last_good(e, lo))?;
        if m.min_value > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Report the verified-positive side of the bracket (never overstates).
    let radius = if lo > 0.0 { lo } else { hi };
    let m = min_on_circle(kind, f, radius, cfg).map_err(|e| attach_last_good(e, lo))?;
    Ok(RadiusResult {
        kind,
        radius,
        residual: m.min_value.abs(),
        method: RadiusMethod::SignBisection,
        argmin_theta: m.argmin_theta,
    })
}

/// Radius of the property for the n-th partial sum of f.
pub fn partial_sum_radius(
    kind: PropertyKind,
    f: &TaylorSeries,
    n: usize,
    cfg: &ScanConfig,
) -> Result<RadiusResult, Error> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "partial sum order must be >= 2, got {}",
            n
        )));
    }
    radius_of_positivity(kind, &f.partial_sum(n), cfg)
}

/// max over |z| = r of |z·f'(z)/f(z) − 1| (pole when f vanishes).
pub fn starlike_ratio_deviation(f: &TaylorSeries, r: f64, samples: usize) -> Result<f64, Error> {
    let fp = f.derivative();
    let mut g = |theta: f64| -> Result<f64, Error> {
        let z = Complex64::from_polar(r, theta);
        let w = f.eval(z);
        if w.norm() < POLE_EPS {
            return Err(Error::PoleEncountered {
                radius: r,
                theta,
                last_good_radius: None,
            });
        }
        Ok((z * fp.eval(z) / w - Complex64::new(1.0, 0.0)).norm())
    };
    scan::max_over_circle(&mut g, samples, scan::REFINE_TOL).map(|(_, v)| v)
}

/// max over |z| = r of |z·f''(z)/f'(z)| (pole when f' vanishes).
pub fn log_derivative_deviation(f: &TaylorSeries, r: f64, samples: usize) -> Result<f64, Error> {
    let fp = f.derivative();
    let fpp = fp.derivative();
    let mut g = |theta: f64| -> Result<f64, Error> {
        let z = Complex64::from_polar(r, theta);
        let p = fp.eval(z);
        if p.norm() < POLE_EPS {
            return Err(Error::PoleEncountered {
                radius: r,
                theta,
                last_good_radius: None,
            });
        }
        Ok((z * fpp.eval(z) / p).norm())
    };
    scan::max_over_circle(&mut g, samples, scan::REFINE_TOL).map(|(_, v)| v)
}

/// min over |z| = r of Re(z·f'(z)/f(z)).
pub fn min_starlike_on_circle(f: &TaylorSeries, r: f64, samples: usize) -> Result<f64, Error> {
    let cfg = ScanConfig {
        theta_samples: samples,
        ..ScanConfig::default()
    };
    min_on_circle(PropertyKind::Starlike, f, r, &cfg).map(|m| m.min_value)
}

/// min over |z| = r of Re(f'(z)).
pub fn min_ctc_on_circle(f: &TaylorSeries, r: f64, samples: usize) -> Result<f64, Error> {
    let cfg = ScanConfig {
        theta_samples: samples,
        ..ScanConfig::default()
    };
    min_on_circle(PropertyKind::CloseToConvex, f, r, &cfg).map(|m| m.min_value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn quick_cfg() -> ScanConfig {
        ScanConfig {
            theta_samples: 512,
            ..ScanConfig::default()
        }
    }

    #[test]
    fn identity_functionals_are_one() {
        let id = TaylorSeries::identity();
        for kind in [
            PropertyKind::Starlike,
            PropertyKind::Convex,
            PropertyKind::CloseToConvex,
        ] {
            assert_eq!(eval_functional(kind, &id, c(0.0, 0.0)).unwrap(), 1.0);
            let v = eval_functional(kind, &id, c(0.3, 0.4)).unwrap();
            assert!((v - 1.0).abs() < 1e-14);
        }
        let m = min_on_circle(PropertyKind::Starlike, &id, 0.9, &quick_cfg()).unwrap();
        assert!((m.min_value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn convex_functional_closed_form_for_half_quadratic() {
        // f = z + z²/2: 1 + zf''/f' = (1 + 2z)/(1 + z), zero at z = −1/2.
        let f = TaylorSeries::from_real(&[1.0, 0.5]).unwrap();
        let v = eval_functional(PropertyKind::Convex, &f, c(-0.5, 0.0)).unwrap();
        assert!(v.abs() < 1e-14);

        // Starlike functional at z = −r: (1 − r)/(1 − r/2).
        for &r in &[0.2, 0.5, 0.8] {
            let v = eval_functional(PropertyKind::Starlike, &f, c(-r, 0.0)).unwrap();
            assert!((v - (1.0 - r) / (1.0 - r / 2.0)).abs() < 1e-13);
        }
    }

    #[test]
    fn min_on_circle_finds_the_real_axis_zero() {
        let f = TaylorSeries::from_real(&[1.0, 0.5]).unwrap();
        let m = min_on_circle(PropertyKind::Convex, &f, 0.5, &quick_cfg()).unwrap();
        assert!(m.min_value.abs() < 1e-12);
        assert!((m.argmin_theta - std::f64::consts::PI).abs() < 1e-5);
    }

    #[test]
    fn convex_radius_of_half_quadratic() {
        let f = TaylorSeries::from_real(&[1.0, 0.5]).unwrap();
        let res = radius_of_positivity(PropertyKind::Convex, &f, &quick_cfg()).unwrap();
        assert!((res.radius - 0.5).abs() < 1e-6, "got {}", res.radius);
        assert_eq!(res.method, RadiusMethod::SignBisection);
    }

    #[test]
    fn quadratic_extremal_radii_match_closed_forms() {
        for &lambda in &[0.6, 1.0, 2.0] {
            let f = TaylorSeries::from_real(&[1.0, lambda]).unwrap();
            let res = radius_of_positivity(PropertyKind::Starlike, &f, &quick_cfg()).unwrap();
            assert!(
                (res.radius - 1.0 / (2.0 * lambda)).abs() < 1e-6,
                "starlike lambda={} got {}",
                lambda,
                res.radius
            );
        }
        let f = TaylorSeries::from_real(&[1.0, 1.0]).unwrap();
        let res = radius_of_positivity(PropertyKind::Convex, &f, &quick_cfg()).unwrap();
        assert!(
            (res.radius - 0.25).abs() < 1e-6,
            "convex got {}",
            res.radius
        );
    }

    #[test]
    fn positive_throughout_returns_r_max() {
        let id = TaylorSeries::identity();
        let cfg = ScanConfig {
            theta_samples: 512,
            r_step: 0.01,
            ..ScanConfig::default()
        };
        let res = radius_of_positivity(PropertyKind::Convex, &id, &cfg).unwrap();
        assert_eq!(res.radius, cfg.r_max);
        assert!(res.residual > 0.5);
    }

    #[test]
    fn partial_sum_radius_requires_order_two() {
        let f = TaylorSeries::from_real(&[1.0, 0.5, 0.25]).unwrap();
        assert!(matches!(
            partial_sum_radius(PropertyKind::Convex, &f, 1, &quick_cfg()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn pole_is_reported_with_last_good_radius() {
        // f' = 1 + 2·0.52·z + 3·0.35·z² has zeros inside |z| < 1; the convex
        // scan of this (non-member) function must stop at the pole or find
        // the sign change first — either way no panic and a usable report.
        let f = TaylorSeries::from_real(&[1.0, 0.52, 0.35]).unwrap();
        match radius_of_positivity(PropertyKind::Convex, &f, &quick_cfg()) {
            Ok(res) => assert!(res.radius > 0.0 && res.radius < 1.0),
            Err(Error::PoleEncountered {
                last_good_radius, ..
            }) => {
                assert!(last_good_radius.is_some());
            }
            Err(e) => panic!("unexpected error {:?}", e),
        }
    }

    #[test]
    fn halving_r_step_does_not_grow_the_radius() {
        let f = TaylorSeries::from_real(&[1.0, 0.5]).unwrap();
        let coarse = ScanConfig {
            theta_samples: 512,
            r_step: 2e-3,
            ..ScanConfig::default()
        };
        let fine = ScanConfig {
            theta_samples: 512,
            r_step: 1e-3,
            ..ScanConfig::default()
        };
        let rc = radius_of_positivity(PropertyKind::Convex, &f, &coarse).unwrap();
        let rf = radius_of_positivity(PropertyKind::Convex, &f, &fine).unwrap();
        assert!(rf.radius <= rc.radius + coarse.bisection_tol);
    }

    #[test]
    fn min_on_circle_is_continuous_in_r() {
        let f = TaylorSeries::from_real(&[1.0, 0.4, 0.1, -0.05]).unwrap();
        let cfg = quick_cfg();
        let delta = 1e-4;
        for &r in &[0.2, 0.4, 0.6, 0.8] {
            let a = min_on_circle(PropertyKind::Starlike, &f, r, &cfg)
                .unwrap()
                .min_value;
            let b = min_on_circle(PropertyKind::Starlike, &f, r + delta, &cfg)
                .unwrap()
                .min_value;
            // Empirical Lipschitz sanity bound for these smooth functionals.
            assert!(
                (a - b).abs() <= 50.0 * delta,
                "jump {} at r={}",
                (a - b).abs(),
                r
            );
        }
    }
}
