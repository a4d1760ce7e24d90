//! Uniform circle grids with local golden-section refinement.
//!
//! The quantities extremized here (moduli and real parts of rational
//! expressions in a polynomial at z = r·e^{iθ}) are trigonometric
//! polynomials of bounded degree, so a grid dense relative to that degree
//! localizes every extremum; a golden-section pass around the best grid
//! point then resolves it to `refine_tol` in θ.

use crate::error::Error;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Default θ tolerance for the refinement stage.
pub(crate) const REFINE_TOL: f64 = 1e-12;

/// Golden-section minimum of `g` on [a, b], assuming local unimodality.
/// Returns the best (θ, value) pair seen, including the endpoints probed.
fn golden_min(
    g: &mut dyn FnMut(f64) -> Result<f64, Error>,
    mut a: f64,
    mut b: f64,
    tol: f64,
) -> Result<(f64, f64), Error> {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = g(c)?;
    let mut fd = g(d)?;
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = g(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = g(d)?;
        }
        let (x, fx) = if fc <= fd { (c, fc) } else { (d, fd) };
        if fx < best.1 {
            best = (x, fx);
        }
    }
    Ok(best)
}

/// Minimum of `g(θ)` over [0, 2π): uniform grid of `samples` points, then
/// golden-section refinement on the bracket around the best grid point.
///
/// Errors from `g` (poles) propagate with the offending θ intact.
pub(crate) fn min_over_circle(
    g: &mut dyn FnMut(f64) -> Result<f64, Error>,
    samples: usize,
    refine_tol: f64,
) -> Result<(f64, f64), Error> {
    assert!(samples >= 4, "need at least 4 circle samples");
    let step = std::f64::consts::TAU / samples as f64;
    let mut best_idx = 0usize;
    let mut best_val = f64::INFINITY;
    for j in 0..samples {
        let v = g(j as f64 * step)?;
        if v < best_val {
            best_val = v;
            best_idx = j;
        }
    }
    let center = best_idx as f64 * step;
    let (theta, value) = golden_min(g, center - step, center + step, refine_tol)?;
    if value < best_val {
        let wrapped = theta.rem_euclid(std::f64::consts::TAU);
        Ok((wrapped, value))
    } else {
        Ok((center, best_val))
    }
}

/// Maximum of `g(θ)` over [0, 2π); same grid-plus-refinement scheme.
pub(crate) fn max_over_circle(
    g: &mut dyn FnMut(f64) -> Result<f64, Error>,
    samples: usize,
    refine_tol: f64,
) -> Result<(f64, f64), Error> {
    let mut neg = |theta: f64| g(theta).map(|v| -v);
    let (theta, value) = min_over_circle(&mut neg, samples, refine_tol)?;
    Ok((theta, -value))
}
