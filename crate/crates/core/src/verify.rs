//! Named verification suites.
//!
//! Each suite re-checks one block of the theory on seeded random members:
//! measured quantities against closed-form bounds, scanned radii against
//! catalog roots, sufficiency verdicts against boundary-scan membership.
//! Suites are deterministic given a seed and report one line per check;
//! the `verify` subcommand of the binary is a thin wrapper around them.

use std::str::FromStr;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{self, HarmonicMode};
use crate::error::Error;
use crate::geometry::{self, PropertyKind, ScanConfig};
use crate::omega::{self, Sufficiency};
use crate::roots;
use crate::series::TaylorSeries;

/// Seed used by the CLI when none is given.
pub const DEFAULT_SEED: u64 = 42;

/// The available suites. `All` runs every individual suite in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Lemma1,
    Lemma12,
    Lemma14,
    Thm21,
    Thm22,
    Thm23,
    Thm31,
    Thm32,
    Thm33,
    Thm41,
    Thm42,
    Thm43,
    Thm44,
    Thm45,
    Thm46,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma12 => "lemma12",
            Suite::Lemma14 => "lemma14",
            Suite::Thm21 => "thm21",
            Suite::Thm22 => "thm22",
            Suite::Thm23 => "thm23",
            Suite::Thm31 => "thm31",
            Suite::Thm32 => "thm32",
            Suite::Thm33 => "thm33",
            Suite::Thm41 => "thm41",
            Suite::Thm42 => "thm42",
            Suite::Thm43 => "thm43",
            Suite::Thm44 => "thm44",
            Suite::Thm45 => "thm45",
            Suite::Thm46 => "thm46",
        }
    }

    pub fn individual() -> [Suite; 15] {
        [
            Suite::Lemma1,
            Suite::Lemma12,
            Suite::Lemma14,
            Suite::Thm21,
            Suite::Thm22,
            Suite::Thm23,
            Suite::Thm31,
            Suite::Thm32,
            Suite::Thm33,
            Suite::Thm41,
            Suite::Thm42,
            Suite::Thm43,
            Suite::Thm44,
            Suite::Thm45,
            Suite::Thm46,
        ]
    }

    fn default_samples(self) -> usize {
        match self {
            Suite::Lemma1 => 500,
            Suite::Lemma12 => 100,
            Suite::Lemma14 => 200,
            Suite::Thm21 | Suite::Thm22 | Suite::Thm23 => 50,
            Suite::Thm31 => 100,
            Suite::Thm32 => 50,
            Suite::Thm33 => 1,
            Suite::Thm41 | Suite::Thm42 => 50,
            Suite::Thm43 | Suite::Thm44 => 500,
            Suite::Thm45 => 100,
            Suite::Thm46 => 500,
            Suite::All => 0,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "all" => Ok(Suite::All),
            "lemma1" => Ok(Suite::Lemma1),
            "lemma12" => Ok(Suite::Lemma12),
            "lemma14" => Ok(Suite::Lemma14),
            "thm21" => Ok(Suite::Thm21),
            "thm22" => Ok(Suite::Thm22),
            "thm23" => Ok(Suite::Thm23),
            "thm31" => Ok(Suite::Thm31),
            "thm32" => Ok(Suite::Thm32),
            "thm33" => Ok(Suite::Thm33),
            "thm41" => Ok(Suite::Thm41),
            "thm42" => Ok(Suite::Thm42),
            "thm43" => Ok(Suite::Thm43),
            "thm44" => Ok(Suite::Thm44),
            "thm45" => Ok(Suite::Thm45),
            "thm46" => Ok(Suite::Thm46),
            other => Err(Error::Parse(format!("unknown suite: {}", other))),
        }
    }
}

/// One verified comparison.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub label: String,
    pub pass: bool,
    pub measured: f64,
    pub expected: f64,
    pub slack: f64,
}

/// Outcome of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteReport {
    fn new(suite: Suite, seed: u64, samples: usize) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            seed,
            samples,
            checks: Vec::new(),
            passed: 0,
            failed: 0,
        }
    }

    fn push(&mut self, check: CheckResult) {
        if check.pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.checks.push(check);
    }

    /// measured ≤ expected + tol
    fn check_le(&mut self, label: impl Into<String>, measured: f64, expected: f64, tol: f64) {
        let slack = expected - measured;
        self.push(CheckResult {
            label: label.into(),
            pass: slack >= -tol,
            measured,
            expected,
            slack,
        });
    }

    /// measured ≥ expected − tol
    fn check_ge(&mut self, label: impl Into<String>, measured: f64, expected: f64, tol: f64) {
        let slack = measured - expected;
        self.push(CheckResult {
            label: label.into(),
            pass: slack >= -tol,
            measured,
            expected,
            slack,
        });
    }

    /// |measured − expected| ≤ tol
    fn check_eq(&mut self, label: impl Into<String>, measured: f64, expected: f64, tol: f64) {
        let err = (measured - expected).abs();
        self.push(CheckResult {
            label: label.into(),
            pass: err <= tol,
            measured,
            expected,
            slack: tol - err,
        });
    }

    fn check_true(&mut self, label: impl Into<String>, pass: bool) {
        self.push(CheckResult {
            label: label.into(),
            pass,
            measured: if pass { 1.0 } else { 0.0 },
            expected: 1.0,
            slack: 0.0,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// Human-readable rendering, one line per check plus a summary.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} (seed {}, samples {})\n",
            self.suite, self.seed, self.samples
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {}: measured={:.6e} expected={:.6e} slack={:.3e}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.label,
                c.measured,
                c.expected,
                c.slack
            ));
        }
        out.push_str(&format!(
            "  {} passed, {} failed\n",
            self.passed, self.failed
        ));
        out
    }
}

/// Run a suite (or all of them). `samples` overrides the per-suite default
/// number of random members.
pub fn run(suite: Suite, seed: u64, samples: Option<usize>) -> Vec<SuiteReport> {
    match suite {
        Suite::All => Suite::individual()
            .iter()
            .map(|&s| run_single(s, seed, samples))
            .collect(),
        s => vec![run_single(s, seed, samples)],
    }
}

fn run_single(suite: Suite, seed: u64, samples: Option<usize>) -> SuiteReport {
    let k = samples.unwrap_or_else(|| suite.default_samples());
    match suite {
        Suite::Lemma1 => suite_lemma1(seed, k),
        Suite::Lemma12 => suite_lemma12(seed, k),
        Suite::Lemma14 => suite_lemma14(seed, k),
        Suite::Thm21 => suite_thm21(seed, k),
        Suite::Thm22 => suite_thm22(seed, k),
        Suite::Thm23 => suite_thm23(seed, k),
        Suite::Thm31 => suite_thm31(seed, k),
        Suite::Thm32 => suite_thm32(seed, k),
        Suite::Thm33 => suite_thm33(seed, k),
        Suite::Thm41 => suite_thm41(seed, k),
        Suite::Thm42 => suite_thm42(seed, k),
        Suite::Thm43 => suite_thm43(seed, k),
        Suite::Thm44 => suite_thm44(seed, k),
        Suite::Thm45 => suite_thm45(seed, k),
        Suite::Thm46 => suite_thm46(seed, k),
        Suite::All => unreachable!("run() expands All"),
    }
}

const MEMBERSHIP_TOL: f64 = 1e-9;
const SCAN_SAMPLES: usize = 512;

fn radius_cfg() -> ScanConfig {
    ScanConfig {
        theta_samples: SCAN_SAMPLES,
        ..ScanConfig::default()
    }
}

fn members(seed: u64, lambda: f64, degree: usize, count: usize) -> Vec<TaylorSeries> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| omega::random_member(&mut rng, lambda, degree))
        .collect()
}

fn certify(f: &TaylorSeries, lambda: f64) -> omega::MembershipCertificate {
    omega::is_member(f, lambda, MEMBERSHIP_TOL).expect("lambda > 0")
}

// ---------------------------------------------------------------------------
// Coefficient, growth and distortion bounds (defect bound 1/2).
fn suite_lemma1(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Lemma1, seed, k);
    let lambda = 0.5;
    let pool = members(seed, lambda, 32, k);

    // |a_k| ≤ λ/(k−1) over the random pool.
    let mut worst = f64::NEG_INFINITY;
    for f in &pool {
        let cert = certify(f, lambda);
        for r in omega::coefficient_bounds_check(f, &cert).expect("member") {
            worst = worst.max(-r.slack);
        }
    }
    rep.check_le(
        format!("worst coefficient-bound excess over {} members", pool.len()),
        worst,
        0.0,
        1e-12,
    );

    // Single-term extremals attain the bound exactly.
    let mut exact = true;
    for kk in [2usize, 3, 5, 8] {
        let f = omega::extremal_k(kk, lambda).expect("valid");
        exact &= f.coeff(kk).norm() == lambda / (kk as f64 - 1.0);
    }
    rep.check_true("extremal members attain |a_k| = 1/(2(k-1)) exactly", exact);

    // Growth and distortion on three circles.
    let mut worst = f64::NEG_INFINITY;
    for f in pool.iter().take(150) {
        let cert = certify(f, lambda);
        for r in [0.3, 0.6, 0.9] {
            for b in omega::growth_distortion_check(f, &cert, r, SCAN_SAMPLES).expect("member") {
                worst = worst.max(-b.slack);
            }
        }
    }
    rep.check_le(
        "worst growth/distortion excess on r in {0.3,0.6,0.9}",
        worst,
        0.0,
        1e-9,
    );

    // The quadratic extremal z + z²/2 attains all four bounds at real z.
    let f = TaylorSeries::from_real(&[1.0, 0.5]).expect("normalized");
    let cert = certify(&f, lambda);
    let mut max_gap = 0.0f64;
    for r in [0.3, 0.6, 0.9] {
        for b in omega::growth_distortion_check(&f, &cert, r, 2048).expect("member") {
            max_gap = max_gap.max(b.slack.abs());
        }
    }
    rep.check_le(
        "equality gap of z + z^2/2 growth/distortion",
        max_gap,
        0.0,
        1e-9,
    );
    rep
}

// ---------------------------------------------------------------------------
// |z f'/f − 1| ≤ r/(2−r) on members with defect bound 1/2.
fn suite_lemma12(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Lemma12, seed, k);
    let pool = members(seed, 0.5, 32, k);
    let mut worst = f64::NEG_INFINITY;
    for f in &pool {
        for i in 1..=9 {
            let r = i as f64 / 10.0;
            let dev = geometry::starlike_ratio_deviation(f, r, SCAN_SAMPLES).expect("no pole");
            worst = worst.max(dev - r / (2.0 - r));
        }
    }
    rep.check_le(
        format!(
            "worst |zf'/f - 1| excess over r/(2-r), {} members, r in 0.1..0.9",
            pool.len()
        ),
        worst,
        0.0,
        1e-9,
    );
    rep
}

// ---------------------------------------------------------------------------
// Tail bounds: closed forms, monotonicity, and domination measurements.
fn suite_lemma14(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Lemma14, seed, k);

    // Spot values of the closed forms at r = 1/2.
    let tb = bounds::tail_bounds(2, 0.5).expect("valid");
    rep.check_eq(
        "tail bound |rho| at r=0.5",
        tb.rho_bound,
        0.25 * 2f64.ln() - 0.125,
        1e-14,
    );
    rep.check_eq(
        "tail bound |rho'| at r=0.5",
        tb.rho_prime_bound,
        2f64.ln() / 2.0,
        1e-14,
    );
    rep.check_eq(
        "tail bound |z rho''| at r=0.5",
        tb.z_rho_double_prime_bound,
        1.0,
        1e-14,
    );

    // Monotone in r.
    let mut monotone = true;
    let mut prev = bounds::tail_bounds(2, 0.005).expect("valid");
    for i in 2..=198 {
        let r = i as f64 * 0.005;
        let cur = bounds::tail_bounds(2, r).expect("valid");
        monotone &= cur.rho_bound >= prev.rho_bound
            && cur.rho_prime_bound >= prev.rho_prime_bound
            && cur.z_rho_double_prime_bound >= prev.z_rho_double_prime_bound;
        prev = cur;
    }
    rep.check_true("all three bounds increase in r", monotone);

    // Domination over the random pool.
    let pool = members(seed, 0.5, 64, k);
    let mut worst = f64::NEG_INFINITY;
    for f in &pool {
        let cert = certify(f, 0.5);
        for n in 2..=10 {
            for r in [0.1, 0.3, 0.5, 0.7, 0.8] {
                for b in
                    bounds::tail_domination_check(f, &cert, n, r, SCAN_SAMPLES).expect("member")
                {
                    worst = worst.max(-b.slack);
                }
            }
        }
    }
    rep.check_le(
        format!(
            "worst tail-domination excess, {} members x n 2..10 x 5 radii",
            pool.len()
        ),
        worst,
        0.0,
        1e-9,
    );

    // Single-term tail: |rho_n| = r^{n+1}/(2n) for the (n+1)-extremal.
    let n = 3usize;
    let f = omega::extremal_k(n + 1, 0.5).expect("valid");
    let cert = certify(&f, 0.5);
    let reps = bounds::tail_domination_check(&f, &cert, n, 0.5, SCAN_SAMPLES).expect("member");
    rep.check_eq(
        "single-term tail maximum r^{n+1}/(2n)",
        reps[0].measured,
        0.5f64.powi(n as i32 + 1) / (2.0 * n as f64),
        1e-12,
    );
    rep
}

/// Shared helper: worst shortfall of partial-sum radii against a bound,
/// plus the smallest radius seen.
fn universal_radius_shortfall(pool: &[TaylorSeries], kind: PropertyKind, bound: f64) -> (f64, f64) {
    let cfg = radius_cfg();
    let mut worst_shortfall = f64::NEG_INFINITY;
    let mut smallest_radius = f64::INFINITY;
    for f in pool {
        for n in [2usize, 3, 5, 8] {
            let res = geometry::partial_sum_radius(kind, f, n, &cfg).expect("scan inside disk");
            worst_shortfall = worst_shortfall.max(bound - res.radius);
            smallest_radius = smallest_radius.min(res.radius);
        }
    }
    (worst_shortfall, smallest_radius)
}

// ---------------------------------------------------------------------------
// Convexity of partial sums: catalog roots and the universal lower bound.
fn suite_thm21(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Thm21, seed, k);

    let root = roots::named_radius("convexity_2_1").expect("catalog");
    rep.check_eq("convexity equation root", root.root, 0.3181, 5e-4);
    rep.check_le("convexity equation residual", root.residual, 0.0, 1e-10);
    rep.check_true(
        "root lies in (0, (sqrt 5 - 1)/2)",
        root.root > 0.0 && root.root < (5f64.sqrt() - 1.0) / 2.0,
    );

    let aux = roots::named_radius("aux_9r2_8r_4").expect("catalog");
    rep.check_eq("9r^2+8r-4 root", aux.root, 0.3568, 5e-4);
    rep.check_eq(
        "9r^2+8r-4 vs quadratic formula",
        aux.root,
        (-8.0 + 208f64.sqrt()) / 18.0,
        1e-10,
    );
    let aux2 = roots::named_radius("aux_3r2_4r_4").expect("catalog");
    rep.check_eq("3r^2+4r-4 root is 2/3", aux2.root, 2.0 / 3.0, 1e-10);

    // Where the convexity lower bound of the cubic truncation fails at μ=0.9.
    let counter = roots::solve_bracketed(roots::cubic_convexity_bound(0.9), 0.0, 1.0, 1e-12)
        .expect("bracketed");
    rep.check_eq(
        "cubic-truncation convexity bound root (mu=0.9)",
        counter.root,
        0.4969,
        5e-4,
    );

    // The directly scanned convex radius of that truncation is at least the
    // bound root (the bound is a lower estimate of the functional).
    let f = omega::family_f_mu(0.9, 24).expect("valid");
    let scanned = geometry::partial_sum_radius(PropertyKind::Convex, &f, 3, &radius_cfg())
        .expect("scan inside disk");
    rep.check_ge(
        "scanned convex radius of s_3 (mu=0.9) vs bound root",
        scanned.radius,
        counter.root,
        1e-4,
    );

    // Universal lower bound over random members.
    let pool = members(seed, 0.5, 24, k);
    let (shortfall, smallest) = universal_radius_shortfall(&pool, PropertyKind::Convex, root.root);
    rep.check_le(
        format!(
            "worst convex-radius shortfall vs root, {} members x n {{2,3,5,8}}",
            pool.len()
        ),
        shortfall,
        0.0,
        1e-4,
    );
    rep.check_ge(
        "smallest convex partial-sum radius seen",
        smallest,
        0.3181,
        1e-4,
    );

    // |z f''/f'| ≤ r/(1−r) for members, r up to (√5−1)/2.
    let pool32 = members(seed, 0.5, 32, k.min(50));
    let mut worst = f64::NEG_INFINITY;
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    for f in &pool32 {
        for r in [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, golden] {
            let dev = geometry::log_derivative_deviation(f, r, SCAN_SAMPLES).expect("no pole");
            worst = worst.max(dev - r / (1.0 - r));
        }
    }
    rep.check_le("worst |zf''/f'| excess over r/(1-r)", worst, 0.0, 1e-9);
    rep
}

// ---------------------------------------------------------------------------
// Starlikeness of partial sums.
fn suite_thm22(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Thm22, seed, k);

    let root = roots::named_radius("starlike_2_2").expect("catalog");
    rep.check_eq("starlike equation root", root.root, 0.4899, 5e-4);
    rep.check_le("starlike equation residual", root.residual, 0.0, 1e-10);

    let tail_f = roots::named_radius("tail_dominance_f").expect("catalog");
    rep.check_eq(
        "tail-dominance root for f is 1 - e^{-2}",
        tail_f.root,
        1.0 - (-2.0f64).exp(),
        1e-10,
    );

    // Where the starlike lower bound of the cubic truncation fails at μ=0.7.
    let counter = roots::solve_bracketed(roots::cubic_starlike_bound(0.7), 0.0, 1.0, 1e-12)
        .expect("bracketed");
    rep.check_eq(
        "cubic-truncation starlike bound root (mu=0.7)",
        counter.root,
        0.9428,
        5e-4,
    );
    let f = omega::family_f_mu(0.7, 24).expect("valid");
    let scanned = geometry::partial_sum_radius(PropertyKind::Starlike, &f, 3, &radius_cfg())
        .expect("scan inside disk");
    rep.check_ge(
        "scanned starlike radius of s_3 (mu=0.7) vs bound root",
        scanned.radius,
        counter.root,
        1e-4,
    );

    // Re(zf'/f) ≥ 2(1−r)/(2−r) for members.
    let pool32 = members(seed, 0.5, 32, k.min(50));
    let mut worst = f64::NEG_INFINITY;
    for f in &pool32 {
        for i in 1..=9 {
            let r = i as f64 / 10.0;
            let min = geometry::min_starlike_on_circle(f, r, SCAN_SAMPLES).expect("no pole");
            worst = worst.max(2.0 * (1.0 - r) / (2.0 - r) - min);
        }
    }
    rep.check_le(
        "worst Re(zf'/f) shortfall vs 2(1-r)/(2-r)",
        worst,
        0.0,
        1e-9,
    );

    // Universal lower bound over random members.
    let pool = members(seed, 0.5, 24, k);
    let (shortfall, smallest) =
        universal_radius_shortfall(&pool, PropertyKind::Starlike, root.root);
    rep.check_le(
        format!(
            "worst starlike-radius shortfall vs root, {} members x n {{2,3,5,8}}",
            pool.len()
        ),
        shortfall,
        0.0,
        1e-4,
    );
    rep.check_ge(
        "smallest starlike partial-sum radius seen",
        smallest,
        0.4899,
        1e-4,
    );
    rep
}

// ---------------------------------------------------------------------------
// Close-to-convexity of partial sums and the order-versus-radius table.
fn suite_thm23(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Thm23, seed, k);

    let root = roots::named_radius("ctc_2_5").expect("catalog");
    rep.check_eq("close-to-convexity equation root", root.root, 0.5471, 5e-4);
    rep.check_le(
        "close-to-convexity equation residual",
        root.residual,
        0.0,
        1e-10,
    );

    let fprime = roots::named_radius("tail_dominance_fprime").expect("catalog");
    rep.check_eq(
        "tail-dominance root for f' equals the ctc root",
        fprime.root,
        root.root,
        1e-10,
    );

    let aux = roots::named_radius("aux_3r2_4r_4").expect("catalog");
    rep.check_eq("cubic-order threshold 2/3", aux.root, 2.0 / 3.0, 1e-10);

    // Close-to-convex counterexample bound at μ = 0.7 (same root as the
    // starlike one after scaling by 4).
    let counter =
        roots::solve_bracketed(roots::cubic_ctc_bound(0.7), 0.0, 1.0, 1e-12).expect("bracketed");
    rep.check_eq(
        "cubic-truncation ctc bound root (mu=0.7)",
        counter.root,
        0.9428,
        5e-4,
    );
    let f = omega::family_f_mu(0.7, 24).expect("valid");
    let scanned = geometry::partial_sum_radius(PropertyKind::CloseToConvex, &f, 3, &radius_cfg())
        .expect("scan inside disk");
    rep.check_ge(
        "scanned ctc radius of s_3 (mu=0.7) vs bound root",
        scanned.radius,
        counter.root,
        1e-4,
    );

    // Re(f') ≥ 1 − r for members.
    let pool32 = members(seed, 0.5, 32, k.min(50));
    let mut worst = f64::NEG_INFINITY;
    for f in &pool32 {
        for i in 1..=9 {
            let r = i as f64 / 10.0;
            let min = geometry::min_ctc_on_circle(f, r, SCAN_SAMPLES).expect("entire");
            worst = worst.max((1.0 - r) - min);
        }
    }
    rep.check_le("worst Re(f') shortfall vs 1-r", worst, 0.0, 1e-9);

    // Worst-case positivity radii of Re(s_n').
    let r2 = roots::partial_sum_positivity_radius(2).expect("n >= 2");
    rep.check_eq("positivity radius at n=2", r2.root, 1.0, 0.0);
    let r3 = roots::partial_sum_positivity_radius(3).expect("n >= 2");
    rep.check_eq("positivity radius at n=3", r3.root, 2.0 / 3.0, 1e-10);
    let r60 = roots::partial_sum_positivity_radius(60).expect("n >= 2");
    rep.check_eq(
        "positivity radius at n=60 vs ctc root",
        r60.root,
        root.root,
        1e-3,
    );

    let rows = bounds::figure1_data(2, 40).expect("valid range");
    let non_increasing = rows.windows(2).all(|w| w[1].radius <= w[0].radius + 1e-12);
    rep.check_true(
        "positivity radii non-increasing for n in 2..40",
        non_increasing,
    );
    match bounds::figure1_plateau(&rows, 1e-4) {
        Some(n) => rep.check_le(
            "plateau onset (successive diff < 1e-4)",
            n as f64,
            14.0,
            0.0,
        ),
        None => rep.check_true("plateau onset found", false),
    }
    rep.check_eq(
        "positivity radius at n=20 vs ctc root",
        rows[18].radius,
        root.root,
        1e-4,
    );

    // Universal lower bound over random members.
    let pool = members(seed, 0.5, 24, k);
    let (shortfall, smallest) =
        universal_radius_shortfall(&pool, PropertyKind::CloseToConvex, root.root);
    rep.check_le(
        format!(
            "worst ctc-radius shortfall vs root, {} members x n {{2,3,5,8}}",
            pool.len()
        ),
        shortfall,
        0.0,
        1e-4,
    );
    rep.check_ge(
        "smallest ctc partial-sum radius seen",
        smallest,
        0.5471,
        1e-4,
    );
    rep
}

// ---------------------------------------------------------------------------
// Inner-radius envelope for |s_n'/f' − 1|.
fn suite_thm31(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Thm31, seed, k);

    rep.check_eq(
        "A_2(0.5) in log-approx mode",
        bounds::a_n(2, 0.5, HarmonicMode::LogApprox).expect("valid"),
        3.09798,
        1e-4,
    );

    let mut exact_dominates = true;
    for n in 2..=40 {
        exact_dominates &= bounds::growth_factor(n, HarmonicMode::ExactHarmonic).expect("n >= 2")
            >= bounds::growth_factor(n, HarmonicMode::LogApprox).expect("n >= 2");
    }
    rep.check_true(
        "exact-harmonic factor dominates log-approx factor",
        exact_dominates,
    );

    let mut worst_factor_gap = 0.0f64;
    for n in 5..=40 {
        let lo = bounds::growth_factor(n, HarmonicMode::LogApprox).expect("n >= 2");
        let hi = bounds::growth_factor(n, HarmonicMode::ExactHarmonic).expect("n >= 2");
        worst_factor_gap = worst_factor_gap.max((1.0 - lo / hi).abs());
    }
    rep.check_le(
        "log-approx factor within 2% of exact for n >= 5",
        worst_factor_gap,
        0.02,
        0.0,
    );

    // Order-n coefficient of s_n'/f' equals −(n+1)a_{n+1}, coefficientwise.
    let mut worst_identity = 0.0f64;
    for &mu in &[0.3, 0.5, -0.7] {
        let f = omega::family_f_mu(mu, 24).expect("valid");
        let recip = f.derivative().reciprocal(12).expect("unit constant term");
        for n in 2..=8 {
            let sp = f.partial_sum(n).derivative();
            let prod = sp.mul_truncated(&recip, n);
            let got = prod.coeff(n);
            let want = -f.coeff(n + 1) * (n as f64 + 1.0);
            worst_identity = worst_identity.max((got - want).norm());
        }
    }
    rep.check_le(
        "coefficient identity c_n = -(n+1) a_{n+1}",
        worst_identity,
        0.0,
        1e-12,
    );

    // Envelope domination in exact-harmonic mode; log-approx within 2%.
    let pool = members(seed, 0.5, 64, k);
    let mut worst_exact = f64::NEG_INFINITY;
    let mut worst_approx = f64::NEG_INFINITY;
    for f in &pool {
        let cert = certify(f, 0.5);
        for n in 2..=10 {
            for i in 1..=5 {
                let r = i as f64 / 10.0;
                let b = bounds::ratio_gap_check(
                    f,
                    &cert,
                    n,
                    r,
                    SCAN_SAMPLES,
                    HarmonicMode::ExactHarmonic,
                    None,
                )
                .expect("member");
                worst_exact = worst_exact.max(-b.slack);
                let b = bounds::ratio_gap_check(
                    f,
                    &cert,
                    n,
                    r,
                    SCAN_SAMPLES,
                    HarmonicMode::LogApprox,
                    None,
                )
                .expect("member");
                worst_approx = worst_approx.max(-b.slack);
            }
        }
    }
    rep.check_le(
        format!(
            "worst ratio-gap excess, exact-harmonic, {} members",
            pool.len()
        ),
        worst_exact,
        0.0,
        1e-9,
    );
    rep.check_le(
        "worst ratio-gap excess, log-approx with 2% allowance",
        worst_approx,
        0.0,
        1e-9,
    );
    rep
}

// ---------------------------------------------------------------------------
// Outer-radius envelope for |s_n'/f' − 1|.
fn suite_thm32(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Thm32, seed, k);

    let mut worst_identity = 0.0f64;
    for n in 2..=10 {
        for mode in [HarmonicMode::LogApprox, HarmonicMode::ExactHarmonic] {
            let ro: f64 = 0.99;
            let b = bounds::b_n(n, ro, mode).expect("valid");
            let a = bounds::a_n(n, ro, mode).expect("valid");
            worst_identity = worst_identity.max((b - a / ro.powi(n as i32)).abs() / b);
        }
    }
    rep.check_le(
        "B_n = A_n(r_outer)/r_outer^n identity",
        worst_identity,
        0.0,
        1e-12,
    );

    let pool = members(seed, 0.5, 64, k);
    let mut worst = f64::NEG_INFINITY;
    for f in &pool {
        let cert = certify(f, 0.5);
        for n in 2..=8 {
            for i in 1..=5 {
                let r = i as f64 / 10.0;
                let b = bounds::ratio_gap_check(
                    f,
                    &cert,
                    n,
                    r,
                    SCAN_SAMPLES,
                    HarmonicMode::ExactHarmonic,
                    Some(0.99),
                )
                .expect("member");
                worst = worst.max(-b.slack);
            }
        }
    }
    rep.check_le(
        format!(
            "worst outer-envelope excess (r_outer=0.99), {} members",
            pool.len()
        ),
        worst,
        0.0,
        1e-9,
    );
    rep
}

// ---------------------------------------------------------------------------
// The minimal order past which Re(s_n') > 0 on |z| ≤ 0.547.
fn suite_thm33(seed: u64, _k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Thm33, seed, 0);

    rep.check_eq(
        "reconstructed composite constant",
        bounds::reconstructed_minimal_n_constant(),
        bounds::MINIMAL_N_CONSTANT,
        0.01,
    );
    let c11 = bounds::c_n(11).expect("n >= 2");
    rep.check_ge("C_11 exceeds 1 (criterion fails at n=11)", c11, 1.0, 0.0);
    let c12 = bounds::c_n(12).expect("n >= 2");
    rep.check_eq("C_12 reference value", c12, 0.798, 5e-3);
    rep.check_le(
        "C_12 below sin(56.84 deg)",
        c12,
        bounds::DEFAULT_ANGLE_BUDGET_DEGREES.to_radians().sin(),
        0.0,
    );
    rep.check_eq(
        "minimal order at the default angle budget",
        bounds::minimal_n(bounds::DEFAULT_ANGLE_BUDGET_DEGREES) as f64,
        12.0,
        0.0,
    );
    rep.check_eq(
        "minimal order at a 90-degree budget",
        bounds::minimal_n(89.9999) as f64,
        12.0,
        0.0,
    );

    let mut decreasing = true;
    for n in 12..60 {
        decreasing &= bounds::c_n(n + 1).expect("valid") < bounds::c_n(n).expect("valid");
    }
    rep.check_true("C_n strictly decreasing on 12..60", decreasing);
    rep
}

// ---------------------------------------------------------------------------
// Starlikeness radius 1/(2λ) and the growth/distortion envelope.
fn suite_thm41(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Thm41, seed, k);
    let cfg = radius_cfg();

    for lambda in [0.6, 1.0, 2.0] {
        let f = TaylorSeries::from_real(&[1.0, lambda]).expect("normalized");
        let res = geometry::radius_of_positivity(PropertyKind::Starlike, &f, &cfg)
            .expect("scan inside disk");
        rep.check_eq(
            format!("starlike radius of z + {}z^2", lambda),
            res.radius,
            1.0 / (2.0 * lambda),
            1e-6,
        );
    }

    // Growth/distortion at general λ.
    for lambda in [0.3, 1.0] {
        let pool = members(seed, lambda, 24, k.min(60));
        let mut worst = f64::NEG_INFINITY;
        for f in &pool {
            let cert = certify(f, lambda);
            for r in [0.3, 0.6, 0.9] {
                for b in omega::growth_distortion_check(f, &cert, r, SCAN_SAMPLES).expect("member")
                {
                    worst = worst.max(-b.slack);
                }
            }
        }
        rep.check_le(
            format!("worst growth/distortion excess at lambda={}", lambda),
            worst,
            0.0,
            1e-9,
        );
    }

    // Equality case z + λz² at real z.
    let lambda = 1.0;
    let f = TaylorSeries::from_real(&[1.0, lambda]).expect("normalized");
    let cert = certify(&f, lambda);
    let mut max_gap = 0.0f64;
    for b in omega::growth_distortion_check(&f, &cert, 0.5, 2048).expect("member") {
        max_gap = max_gap.max(b.slack.abs());
    }
    rep.check_le(
        "equality gap of z + z^2 growth/distortion",
        max_gap,
        0.0,
        1e-9,
    );

    // Sign changes of the cubic member's lower-bound margins in λ.
    let starlike_margin = |l: f64| 1.0 - 4.0 * l / (4.0 - 3.0 * l);
    let ctc_margin = |l: f64| 1.0 - 1.75 * l;
    let convex_margin = |l: f64| 1.0 - 2.5 * l / (1.0 - 1.75 * l);
    let l_star = 4.0 / 7.0;
    rep.check_true(
        "starlike margin of the cubic member changes sign at 4/7",
        starlike_margin(l_star - 1e-3) > 0.0
            && starlike_margin(l_star + 1e-3) < 0.0
            && starlike_margin(l_star).abs() < 1e-12,
    );
    rep.check_true(
        "derivative-positivity margin changes sign at 4/7",
        ctc_margin(l_star - 1e-3) > 0.0
            && ctc_margin(l_star + 1e-3) < 0.0
            && ctc_margin(l_star).abs() < 1e-12,
    );
    let l_conv = 4.0 / 17.0;
    rep.check_true(
        "convexity margin of the cubic member changes sign at 4/17",
        convex_margin(l_conv - 1e-3) > 0.0
            && convex_margin(l_conv + 1e-3) < 0.0
            && convex_margin(l_conv).abs() < 1e-12,
    );

    // Past λ = 4/7 the bound chain no longer certifies starlikeness on the
    // whole disk; record the directly scanned radius (the starlikeness
    // theorem still guarantees 1/(2λ)).
    let lambda = 0.6;
    let f = omega::cubic_member(lambda).expect("valid");
    let res =
        geometry::radius_of_positivity(PropertyKind::Starlike, &f, &cfg).expect("scan inside disk");
    rep.check_ge(
        "scanned starlike radius of the cubic member at lambda=0.6 vs 1/(2 lambda)",
        res.radius,
        1.0 / (2.0 * lambda),
        1e-4,
    );
    rep
}

// ---------------------------------------------------------------------------
// Univalence disk 1/(2λ) and convexity disk 1/(4λ).
fn suite_thm42(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Thm42, seed, k);
    let cfg = radius_cfg();

    let f = TaylorSeries::from_real(&[1.0, 1.0]).expect("normalized");
    let res =
        geometry::radius_of_positivity(PropertyKind::Convex, &f, &cfg).expect("scan inside disk");
    rep.check_eq("convex radius of z + z^2", res.radius, 0.25, 1e-6);

    let f = TaylorSeries::from_real(&[1.0, 0.5]).expect("normalized");
    let res =
        geometry::radius_of_positivity(PropertyKind::Convex, &f, &cfg).expect("scan inside disk");
    rep.check_eq("convex radius of z + z^2/2", res.radius, 0.5, 1e-6);

    for lambda in [0.75, 1.5] {
        let pool = members(seed, lambda, 16, k.min(40));
        let mut worst_convex = f64::NEG_INFINITY;
        let mut worst_starlike = f64::NEG_INFINITY;
        let mut worst_univalence = f64::NEG_INFINITY;
        for f in &pool {
            let res = geometry::radius_of_positivity(PropertyKind::Convex, f, &cfg)
                .expect("scan inside disk");
            worst_convex = worst_convex.max(1.0 / (4.0 * lambda) - res.radius);
            let res = geometry::radius_of_positivity(PropertyKind::Starlike, f, &cfg)
                .expect("scan inside disk");
            worst_starlike = worst_starlike.max(1.0 / (2.0 * lambda) - res.radius);

            // |f' − 1| ≤ 2λ|z|, the mechanism behind univalence in 1/(2λ).
            let fp = f.derivative();
            for i in 1..=4 {
                let r = i as f64 * 0.24;
                let mut g = |theta: f64| -> Result<f64, Error> {
                    let z = Complex64::from_polar(r, theta);
                    Ok((fp.eval(z) - Complex64::new(1.0, 0.0)).norm())
                };
                let (_, max) = crate::scan::max_over_circle(&mut g, SCAN_SAMPLES, 1e-12)
                    .expect("modulus scan cannot fail");
                worst_univalence = worst_univalence.max(max - 2.0 * lambda * r);
            }
        }
        rep.check_le(
            format!(
                "worst convex-radius shortfall vs 1/(4 lambda), lambda={}",
                lambda
            ),
            worst_convex,
            0.0,
            1e-4,
        );
        rep.check_le(
            format!(
                "worst starlike-radius shortfall vs 1/(2 lambda), lambda={}",
                lambda
            ),
            worst_starlike,
            0.0,
            1e-4,
        );
        rep.check_le(
            format!("worst |f' - 1| excess over 2 lambda r, lambda={}", lambda),
            worst_univalence,
            0.0,
            1e-9,
        );
    }
    rep
}

/// Shared driver for the two sharp sufficient conditions.
fn sufficiency_suite(
    suite: Suite,
    seed: u64,
    k: usize,
    test: impl Fn(&TaylorSeries, f64) -> Result<Sufficiency, Error>,
    witness_coeff: impl Fn(f64) -> f64, // a_2 from η
    witness_zero: impl Fn(f64) -> f64,  // f'-zero location from η
    sharp_multiple: f64,                // 2 for f'', 3 for the radial operator
) -> SuiteReport {
    let mut rep = SuiteReport::new(suite, seed, k);
    let lambda = 0.5;

    rep.check_true(
        "identity is accepted",
        test(&TaylorSeries::identity(), lambda).expect("valid") == Sufficiency::Sufficient,
    );

    // Boundary case: the quadratic member z + λz² sits exactly at the
    // sharp constant and must still be accepted.
    let f = TaylorSeries::from_real(&[1.0, lambda]).expect("normalized");
    rep.check_true(
        "quadratic member at the sharp constant is accepted",
        test(&f, lambda).expect("valid") == Sufficiency::Sufficient,
    );

    // Exceeding the sharp constant: inconclusive, and f' vanishes inside
    // the disk of radius 1/(2λ), so no better constant exists.
    let eta = sharp_multiple * lambda + 0.1;
    let f = TaylorSeries::from_real(&[1.0, witness_coeff(eta)]).expect("normalized");
    rep.check_true(
        "witness past the sharp constant is inconclusive",
        test(&f, lambda).expect("valid") == Sufficiency::Inconclusive,
    );
    let zero = Complex64::new(witness_zero(eta), 0.0);
    rep.check_le(
        "witness f' vanishes at the predicted point",
        f.derivative().eval(zero).norm(),
        0.0,
        1e-12,
    );
    rep.check_true(
        "the f'-zero lies inside the disk of radius 1/(2 lambda)",
        zero.norm() < 1.0 / (2.0 * lambda),
    );

    // No false positives against boundary-scan membership, on a mixed pool.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut false_positives = 0usize;
    let mut sufficient_seen = 0usize;
    for i in 0..k {
        let f = if i % 2 == 0 {
            omega::random_member(&mut rng, lambda, 24)
        } else {
            omega::random_nonmember(&mut rng, lambda, 24)
        };
        if test(&f, lambda).expect("valid") == Sufficiency::Sufficient {
            sufficient_seen += 1;
            if !certify(&f, lambda).member {
                false_positives += 1;
            }
        }
    }
    rep.check_eq(
        format!(
            "false positives over {} mixed inputs ({} accepted)",
            k, sufficient_seen
        ),
        false_positives as f64,
        0.0,
        0.0,
    );
    rep
}

// ---------------------------------------------------------------------------
// |f''| ≤ 2λ is sufficient, and 2λ is sharp.
fn suite_thm43(seed: u64, k: usize) -> SuiteReport {
    sufficiency_suite(
        Suite::Thm43,
        seed,
        k,
        omega::second_deriv_sufficient,
        |eta| eta / 2.0,
        |eta| -1.0 / eta,
        2.0,
    )
}

// ---------------------------------------------------------------------------
// |z²f'' + zf' − f| ≤ 3λ is sufficient, and 3λ is sharp.
fn suite_thm44(seed: u64, k: usize) -> SuiteReport {
    sufficiency_suite(
        Suite::Thm44,
        seed,
        k,
        omega::operator_sufficient,
        |eta| eta / 3.0,
        |eta| -3.0 / (2.0 * eta),
        3.0,
    )
}

// ---------------------------------------------------------------------------
// Convolution closure for λ ≤ 1.
fn suite_thm45(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Thm45, seed, k);

    for lambda in [0.5, 1.0] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut worst = f64::NEG_INFINITY;
        for _ in 0..k {
            let f = omega::random_member(&mut rng, lambda, 32);
            let g = omega::random_member(&mut rng, lambda, 32);
            let h = f.convolve(&g);
            let defect = omega::boundary_defect(&h, 1024);
            worst = worst.max(defect - lambda);
        }
        rep.check_le(
            format!(
                "worst convolution defect excess over lambda={}, {} pairs",
                lambda, k
            ),
            worst,
            0.0,
            1e-9,
        );
    }

    // Algebraic witness: (z + λz²) ∗ (z + λz²) = z + λ²z², exactly.
    let lambda = 0.8;
    let f = TaylorSeries::from_real(&[1.0, lambda]).expect("normalized");
    let h = f.convolve(&f);
    let exact = h.degree() == 2
        && h.coeff(1) == Complex64::new(1.0, 0.0)
        && h.coeff(2) == Complex64::new(lambda * lambda, 0.0);
    rep.check_true("quadratic convolution witness is exact", exact);
    rep
}

// ---------------------------------------------------------------------------
// Coefficient-sum sufficiency and the coefficient bound λ/(k−1).
fn suite_thm46(seed: u64, k: usize) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Thm46, seed, k);
    let lambda = 0.5;

    let f = TaylorSeries::from_real(&[1.0, lambda / 2.0]).expect("normalized");
    rep.check_true(
        "z + (lambda/2) z^2 is accepted by the coefficient sum",
        omega::coeff_sum_sufficient(&f, lambda).expect("valid") == Sufficiency::Sufficient,
    );

    // Single-term extremals: sum equals λ (not strictly below), yet the
    // boundary scan certifies them — sufficiency is not necessity.
    let mut all_inconclusive_but_member = true;
    for kk in [2usize, 5] {
        let f = omega::extremal_k(kk, lambda).expect("valid");
        all_inconclusive_but_member &= omega::coeff_sum_sufficient(&f, lambda).expect("valid")
            == Sufficiency::Inconclusive
            && certify(&f, lambda).member;
    }
    rep.check_true(
        "extremal members: inconclusive sum but certified",
        all_inconclusive_but_member,
    );

    // The Möbius family's coefficient sum telescopes to (1 + 2|μ|)/2.
    let mut worst = 0.0f64;
    for &mu in &[0.0, 0.5, -0.7, 0.9] {
        let f = omega::family_f_mu(mu, 256).expect("valid");
        let sum = omega::defect_coefficient_sum(&f);
        worst = worst.max((sum - (1.0 + 2.0 * mu.abs()) / 2.0).abs());
    }
    rep.check_le(
        "coefficient-sum closed form for the Moebius family",
        worst,
        0.0,
        1e-9,
    );

    // |a_k| ≤ λ/(k−1) over random members at two defect bounds.
    for lam in [0.3, 1.0] {
        let pool = members(seed, lam, 32, k);
        let mut worst = f64::NEG_INFINITY;
        for f in &pool {
            let cert = certify(f, lam);
            for b in omega::coefficient_bounds_check(f, &cert).expect("member") {
                worst = worst.max(-b.slack);
            }
        }
        rep.check_le(
            format!("worst coefficient-bound excess at lambda={}", lam),
            worst,
            0.0,
            1e-12,
        );
    }

    // Soundness: an accepted sum implies boundary-scan membership.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut false_positives = 0usize;
    for i in 0..k {
        let f = if i % 2 == 0 {
            omega::random_member(&mut rng, lambda, 24)
        } else {
            omega::random_nonmember(&mut rng, lambda, 24)
        };
        if omega::coeff_sum_sufficient(&f, lambda).expect("valid") == Sufficiency::Sufficient
            && !certify(&f, lambda).member
        {
            false_positives += 1;
        }
    }
    rep.check_eq(
        format!("coefficient-sum false positives over {} mixed inputs", k),
        false_positives as f64,
        0.0,
        0.0,
    );
    rep
}
