//! Bracketed scalar root finding and the catalog of named radius equations.
//!
//! Every radius threshold in this crate is the root of an explicit real
//! function of r on (0, 1). The catalog pins each equation to a
//! hand-verified bracket with a guaranteed sign change, so solving is a
//! plain bracket-preserving bisection — no search heuristics.

use serde::Serialize;

use crate::error::Error;

/// Default bracket-width tolerance. The printed reference values carry four
/// significant digits; converging the bracket to 1e−12 leaves orders of
/// magnitude of slack for every assertion downstream.
pub const DEFAULT_BRACKET_TOL: f64 = 1e-12;

/// Iteration cap for the bisection loop.
pub const MAX_BISECTION_ITERATIONS: usize = 200;

/// Keeps ln(1−r) finite when an expression is probed at r → 1.
const LN_GUARD: f64 = 1e-12;

fn ln_one_minus(r: f64) -> f64 {
    (1.0 - r).max(LN_GUARD).ln()
}

/// Outcome of a bracketed solve.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RootResult {
    pub root: f64,
    /// |F(root)| at the reported root.
    pub residual: f64,
    /// Width of the final bracket containing the root.
    pub bracket_width: f64,
    pub iterations: usize,
}

/// Bisection on [a, b], which must straddle a sign change of `f`.
///
/// Bracket-preserving by construction; stops once the bracket is narrower
/// than `tol` (or at the f64 resolution floor, whichever comes first).
pub fn solve_bracketed(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<RootResult, Error> {
    if a >= b || a.is_nan() || b.is_nan() {
        return Err(Error::Domain(format!("invalid bracket [{}, {}]", a, b)));
    }
    let fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(RootResult {
            root: a,
            residual: 0.0,
            bracket_width: 0.0,
            iterations: 0,
        });
    }
    if fb == 0.0 {
        return Ok(RootResult {
            root: b,
            residual: 0.0,
            bracket_width: 0.0,
            iterations: 0,
        });
    }
    if !fa.is_finite() || !fb.is_finite() || (fa > 0.0) == (fb > 0.0) {
        return Err(Error::NoSignChange { a, b, fa, fb });
    }
    let lo_positive = fa > 0.0;
    let (mut lo, mut hi) = (a, b);
    let mut iterations = 0usize;
    while hi - lo > tol {
        if iterations >= MAX_BISECTION_ITERATIONS {
            return Err(Error::MaxIterations(iterations));
        }
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // f64 resolution floor
        }
        let fm = f(mid);
        if fm == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (fm > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    Ok(RootResult {
        root,
        residual: f(root).abs(),
        bracket_width: hi - lo,
        iterations,
    })
}

/// One named radius equation: expression, bracket, and what it thresholds.
#[derive(Clone, Copy)]
pub struct NamedEquation {
    pub name: &'static str,
    /// What the root of the expression bounds.
    pub describes: &'static str,
    /// Hand-verified bracket with F(a)·F(b) < 0.
    pub bracket: (f64, f64),
    expr: fn(f64) -> f64,
}

impl NamedEquation {
    pub fn eval(&self, r: f64) -> f64 {
        (self.expr)(r)
    }

    /// Solve the equation inside its stored bracket.
    pub fn solve(&self) -> Result<RootResult, Error> {
        solve_bracketed(
            self.expr,
            self.bracket.0,
            self.bracket.1,
            DEFAULT_BRACKET_TOL,
        )
    }
}

fn eq_convexity(r: f64) -> f64 {
    let om = 1.0 - r;
    om * om * ln_one_minus(r) + 2.0 - 7.0 * r + 4.0 * r * r
}

fn eq_starlike(r: f64) -> f64 {
    3.0 * (1.0 - r) * (2.0 - r) * ln_one_minus(r) + 4.0 - 4.0 * r - 3.0 * r * r + 2.0 * r * r * r
}

fn eq_ctc(r: f64) -> f64 {
    (1.0 - r) * ln_one_minus(r) + 2.0 - 3.0 * r
}

fn eq_aux_9r2_8r_4(r: f64) -> f64 {
    9.0 * r * r + 8.0 * r - 4.0
}

fn eq_aux_3r2_4r_4(r: f64) -> f64 {
    3.0 * r * r + 4.0 * r - 4.0
}

fn eq_tail_dominance_fprime(r: f64) -> f64 {
    (2.0 - 3.0 * r) / (2.0 * (1.0 - r)) + ln_one_minus(r) / 2.0
}

fn eq_tail_dominance_f(r: f64) -> f64 {
    1.0 + ln_one_minus(r) / 2.0
}

static CATALOG: [NamedEquation; 7] = [
    NamedEquation {
        name: "convexity_2_1",
        describes: "universal convexity radius of partial sums (defect bound 1/2): \
                    (1-r)^2 ln(1-r) + 2 - 7r + 4r^2",
        bracket: (0.05, 0.6),
        expr: eq_convexity,
    },
    NamedEquation {
        name: "starlike_2_2",
        describes: "universal starlikeness radius of partial sums: \
                    3(1-r)(2-r) ln(1-r) + 4 - 4r - 3r^2 + 2r^3",
        bracket: (0.05, 0.8),
        expr: eq_starlike,
    },
    NamedEquation {
        name: "ctc_2_5",
        describes: "universal close-to-convexity radius of partial sums: \
                    (1-r) ln(1-r) + 2 - 3r",
        bracket: (0.05, 0.9),
        expr: eq_ctc,
    },
    NamedEquation {
        name: "aux_9r2_8r_4",
        describes: "convexity threshold of cubic truncations: 9r^2 + 8r - 4",
        bracket: (0.05, 0.6),
        expr: eq_aux_9r2_8r_4,
    },
    NamedEquation {
        name: "aux_3r2_4r_4",
        describes: "starlike/close-to-convex threshold of cubic truncations: \
                    3r^2 + 4r - 4 = (3r - 2)(r + 2)",
        bracket: (0.05, 0.9),
        expr: eq_aux_3r2_4r_4,
    },
    NamedEquation {
        name: "tail_dominance_fprime",
        describes: "radius below which the worst-case tail of f' stays smaller \
                    than |f'|: (2-3r)/(2(1-r)) + ln(1-r)/2",
        bracket: (0.05, 0.9),
        expr: eq_tail_dominance_fprime,
    },
    NamedEquation {
        name: "tail_dominance_f",
        describes: "radius below which the worst-case tail of f stays smaller \
                    than |f|: 1 + ln(1-r)/2, root 1 - e^{-2}",
        bracket: (0.05, 0.99),
        expr: eq_tail_dominance_f,
    },
];

/// The full equation catalog, in stable order.
pub fn catalog() -> &'static [NamedEquation] {
    &CATALOG
}

/// Look up an equation by its stable identifier.
pub fn equation(name: &str) -> Result<&'static NamedEquation, Error> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEquation(name.to_string()))
}

/// Solve a catalog equation by name.
pub fn named_radius(name: &str) -> Result<RootResult, Error> {
    equation(name)?.solve()
}

/// Worst-case positivity polynomial for Re(s_n') under the coefficient
/// bounds |a_k| ≤ 1/(2(k−1)):
///
///   P_n(r) = 1 − Σ_{k=2..n} k·r^{k−1} / (2(k−1)).
pub fn positivity_polynomial(n: usize) -> impl Fn(f64) -> f64 {
    let coeffs: Vec<f64> = std::iter::once(1.0)
        .chain((2..=n).map(|k| {
            let k = k as f64;
            -k / (2.0 * (k - 1.0))
        }))
        .collect();
    move |r: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c)
}

/// Radius where Re(s_n') can first vanish in the worst case: the root of
/// P_n in (0, 1]. Exactly 1 for n = 2 (P_2 = 1 − r), strictly decreasing
/// afterwards, converging to the `ctc_2_5` root as n grows.
pub fn partial_sum_positivity_radius(n: usize) -> Result<RootResult, Error> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "partial sum order must be >= 2, got {}",
            n
        )));
    }
    if n == 2 {
        return Ok(RootResult {
            root: 1.0,
            residual: 0.0,
            bracket_width: 0.0,
            iterations: 0,
        });
    }
    // Solve to the f64 floor: successive radii differ by ~0.15·0.547^n, so
    // distinguishing consecutive orders up to n ≈ 50 needs every bit.
    solve_bracketed(positivity_polynomial(n), 1e-6, 1.0, 1e-15)
}

/// Lower bound for Re(1 + z·s₃''/s₃') of the cubic truncation of the
/// Möbius-generated family at parameter μ, as a function of r = |z|:
/// 1 − 2|μ|r − (9/4)(1−μ²)r².
pub fn cubic_convexity_bound(mu: f64) -> impl Fn(f64) -> f64 {
    let m = mu.abs();
    move |r: f64| 1.0 - 2.0 * m * r - 2.25 * (1.0 - m * m) * r * r
}

/// Lower bound numerator for Re(z·s₃'/s₃) of the same family:
/// 4 − 4|μ|r − 3(1−μ²)r².
pub fn cubic_starlike_bound(mu: f64) -> impl Fn(f64) -> f64 {
    let m = mu.abs();
    move |r: f64| 4.0 - 4.0 * m * r - 3.0 * (1.0 - m * m) * r * r
}

/// Lower bound for Re(s₃') of the same family: 1 − |μ|r − (3/4)(1−μ²)r².
pub fn cubic_ctc_bound(mu: f64) -> impl Fn(f64) -> f64 {
    let m = mu.abs();
    move |r: f64| 1.0 - m * r - 0.75 * (1.0 - m * m) * r * r
}
