//! Construction and certification of members of the defect classes.
//!
//! For λ > 0 the class consists of normalized analytic functions on the
//! unit disk with |zf'(z) − f(z)| < λ throughout. Every member solves
//! zf'(z) − f(z) = λz²φ(z) for some analytic multiplier with |φ| ≤ 1,
//! equivalently f(z) = z + λz² ∫₀¹ φ(zt) dt, which is the generator used
//! here both for the named families and for random members.
//!
//! Membership of a polynomial is decided on the boundary circle: the
//! defect g = zf' − f is a polynomial with g(0) = 0, so by the maximum
//! modulus principle |g| < λ on the open disk iff max_{|z|=1} |g| ≤ λ
//! (interior equality would force g constant, impossible for g(0) = 0
//! unless g ≡ 0).

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::report::BoundReport;
use crate::scan;
use crate::series::{RawSeries, TaylorSeries};

/// Grid size for boundary scans; far above twice the working degree, so no
/// oscillation of the defect polynomial can slip between samples.
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 4096;

/// Default slack separating genuine boundary cases (margin 0) from float
/// noise in membership decisions.
pub const DEFAULT_MEMBERSHIP_TOL: f64 = 1e-9;

/// How a membership decision was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MembershipMethod {
    #[serde(rename = "boundary-scan")]
    BoundaryScan,
    #[serde(rename = "coefficient-sum")]
    CoefficientSum,
}

/// Outcome of a membership test at defect bound `lambda`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MembershipCertificate {
    pub lambda: f64,
    /// max |zf'(z) − f(z)| over the unit circle.
    pub defect: f64,
    pub method: MembershipMethod,
    /// lambda − defect; negative for non-members.
    pub margin: f64,
    /// Number of boundary grid samples used.
    pub samples: usize,
    pub member: bool,
}

/// A truncated multiplier φ(z) = Σ b_j z^j together with a certified bound
/// on sup_{|z|≤1} |φ|. The coefficient-sum bound Σ|b_j| always works; a
/// tighter analytic bound may be supplied when one is known.
#[derive(Debug, Clone)]
pub struct PhiSpec {
    coeffs: Vec<Complex64>,
    sup_norm_bound: f64,
}

impl PhiSpec {
    /// Build from coefficients, certifying sup |φ| by Σ|b_j|.
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptyInput);
        }
        let sup = coeffs.iter().map(|b| b.norm()).sum();
        Ok(PhiSpec {
            coeffs,
            sup_norm_bound: sup,
        })
    }

    /// Build with an externally known sup-norm bound (e.g. exact unimodular
    /// boundary values of a Möbius transform).
    pub fn with_sup_bound(coeffs: Vec<Complex64>, sup_norm_bound: f64) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(PhiSpec {
            coeffs,
            sup_norm_bound,
        })
    }

    /// The constant multiplier φ ≡ c.
    pub fn constant(c: Complex64) -> Self {
        PhiSpec {
            coeffs: vec![c],
            sup_norm_bound: c.norm(),
        }
    }

    /// Truncation of (μ + z)/(1 + μz) for μ ∈ [−1, 1]: b_0 = μ and
    /// b_j = (1 − μ²)(−μ)^{j−1} for j ≥ 1. A Möbius self-map of the disk,
    /// so the sup-norm bound is exactly 1 even though Σ|b_j| exceeds it.
    pub fn mobius(mu: f64, degree: usize) -> Result<Self, Error> {
        if !(-1.0..=1.0).contains(&mu) {
            return Err(Error::Domain(format!("mu must lie in [-1, 1], got {}", mu)));
        }
        let mut coeffs = vec![Complex64::new(mu, 0.0)];
        let head = 1.0 - mu * mu;
        let mut pow = 1.0;
        for _ in 1..=degree {
            coeffs.push(Complex64::new(head * pow, 0.0));
            pow *= -mu;
        }
        Ok(PhiSpec {
            coeffs,
            sup_norm_bound: 1.0,
        })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn sup_norm_bound(&self) -> f64 {
        self.sup_norm_bound
    }

    /// Whether the stored bound certifies |φ| ≤ 1.
    pub fn is_certified(&self) -> bool {
        self.sup_norm_bound <= 1.0 + 1e-12
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &b| acc * z + b)
    }
}

/// Integrate the defining equation: f(z) = z + λz² ∫₀¹ φ(zt) dt, i.e.
/// a_{j+2} = λ·b_j/(j+1). The output satisfies zf' − f = λz²φ(z)
/// coefficientwise up to the requested degree.
///
/// When `phi` is certified (|φ| ≤ 1) the result is guaranteed to be a
/// member at defect bound λ; otherwise the caller accepts uncertified
/// output and should re-certify by boundary scan.
pub fn from_phi(phi: &PhiSpec, lambda: f64, degree: usize) -> Result<TaylorSeries, Error> {
    if lambda <= 0.0 {
        return Err(Error::InvalidLambda(lambda));
    }
    if degree < 1 {
        return Err(Error::Domain("degree must be at least 1".into()));
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); degree];
    coeffs[0] = Complex64::new(1.0, 0.0);
    for (j, &b) in phi.coeffs.iter().enumerate() {
        let k = j + 2; // power of z receiving this contribution
        if k > degree {
            break;
        }
        coeffs[k - 1] = b * (lambda / (j as f64 + 1.0));
    }
    TaylorSeries::new(coeffs)
}

/// The Möbius-generated family: a_2 = μ/2 and
/// a_{k+2} = (1 − μ²)(−μ)^{k−1} / (2(k+1)) for k ≥ 1.
///
/// Members at defect bound 1/2 for every μ ∈ [−1, 1]; at μ = ±1 the series
/// terminates at z + (μ/2)z².
pub fn family_f_mu(mu: f64, degree: usize) -> Result<TaylorSeries, Error> {
    let phi = PhiSpec::mobius(mu, degree.saturating_sub(2))?;
    from_phi(&phi, 0.5, degree)
}

/// Single-term extremal member z + (λ/(k−1))·z^k: its defect is exactly
/// λ·|z|^k, so the boundary defect equals λ and the coefficient bound
/// λ/(k−1) is attained at index k.
pub fn extremal_k(k: usize, lambda: f64) -> Result<TaylorSeries, Error> {
    if lambda <= 0.0 {
        return Err(Error::InvalidLambda(lambda));
    }
    if k < 2 {
        return Err(Error::Domain(format!(
            "extremal index must be >= 2, got {}",
            k
        )));
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); k];
    coeffs[0] = Complex64::new(1.0, 0.0);
    coeffs[k - 1] = Complex64::new(lambda / (k as f64 - 1.0), 0.0);
    TaylorSeries::new(coeffs)
}

/// The cubic member z + (λ/2)z² + (λ/4)z³, whose defect (λ/2)z²(1+z)
/// attains boundary maximum exactly λ (a margin-zero member).
pub fn cubic_member(lambda: f64) -> Result<TaylorSeries, Error> {
    if lambda <= 0.0 {
        return Err(Error::InvalidLambda(lambda));
    }
    TaylorSeries::from_real(&[1.0, lambda / 2.0, lambda / 4.0])
}

/// max_{|z|=1} |zf'(z) − f(z)| for the truncated polynomial, via uniform
/// grid plus golden-section refinement around the best sample.
pub fn boundary_defect(f: &TaylorSeries, samples: usize) -> f64 {
    assert!(samples >= 256, "boundary scans need at least 256 samples");
    let g = f.defect_series();
    let mut modulus =
        |theta: f64| -> Result<f64, Error> { Ok(g.eval(Complex64::from_polar(1.0, theta)).norm()) };
    let (_, value) = scan::max_over_circle(&mut modulus, samples, scan::REFINE_TOL)
        .expect("modulus scan cannot fail");
    value
}

/// Decide membership at defect bound `lambda` by boundary scan.
pub fn is_member(f: &TaylorSeries, lambda: f64, tol: f64) -> Result<MembershipCertificate, Error> {
    if lambda <= 0.0 {
        return Err(Error::InvalidLambda(lambda));
    }
    let defect = boundary_defect(f, DEFAULT_BOUNDARY_SAMPLES);
    Ok(MembershipCertificate {
        lambda,
        defect,
        method: MembershipMethod::BoundaryScan,
        margin: lambda - defect,
        samples: DEFAULT_BOUNDARY_SAMPLES,
        member: defect <= lambda + tol,
    })
}

/// Certificate from the coefficient sum alone, without a boundary scan.
///
/// Σ_{k≥2}(k−1)|a_k| dominates the boundary defect, so when the sum stays
/// below λ the function is a member and the sum doubles as the recorded
/// defect value (an upper bound for the scanned one). When the sum reaches
/// λ this method proves nothing and the certificate reports a non-member
/// verdict; re-certify with [`is_member`] in that case.
pub fn certificate_from_coefficient_sum(
    f: &TaylorSeries,
    lambda: f64,
) -> Result<MembershipCertificate, Error> {
    if lambda <= 0.0 {
        return Err(Error::InvalidLambda(lambda));
    }
    let sum = defect_coefficient_sum(f);
    Ok(MembershipCertificate {
        lambda,
        defect: sum,
        method: MembershipMethod::CoefficientSum,
        margin: lambda - sum,
        samples: 0,
        member: sum < lambda,
    })
}

/// Verdict of a sufficient condition: `Sufficient` proves membership,
/// `Inconclusive` proves nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sufficiency {
    Sufficient,
    Inconclusive,
}

/// Coefficient-sum test: Σ_{k≥2} (k−1)|a_k| < λ forces the defect below λ
/// pointwise. Sufficient but not necessary (single-term extremals have sum
/// exactly λ yet are members).
pub fn coeff_sum_sufficient(f: &TaylorSeries, lambda: f64) -> Result<Sufficiency, Error> {
    if lambda <= 0.0 {
        return Err(Error::InvalidLambda(lambda));
    }
    let sum = defect_coefficient_sum(f);
    Ok(if sum < lambda {
        Sufficiency::Sufficient
    } else {
        Sufficiency::Inconclusive
    })
}

/// Σ_{k≥2} (k−1)|a_k|, the quantity behind the coefficient-sum test.
pub fn defect_coefficient_sum(f: &TaylorSeries) -> f64 {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(i, a)| i as f64 * a.norm()) // k−1 = i for a_k at index i = k−1
        .sum()
}

/// Second-derivative test: max_{|z|=1} |f''| ≤ 2λ implies membership.
/// The constant 2λ is sharp: z + (η/2)z² with η > 2λ has |f''| = η and its
/// derivative vanishes at −1/η, inside the disk of radius 1/(2λ).
pub fn second_deriv_sufficient(f: &TaylorSeries, lambda: f64) -> Result<Sufficiency, Error> {
    if lambda <= 0.0 {
        return Err(Error::InvalidLambda(lambda));
    }
    let fpp = f.second_derivative();
    let mut modulus = |theta: f64| -> Result<f64, Error> {
        Ok(fpp.eval(Complex64::from_polar(1.0, theta)).norm())
    };
    let (_, max) = scan::max_over_circle(&mut modulus, DEFAULT_BOUNDARY_SAMPLES, scan::REFINE_TOL)
        .expect("modulus scan cannot fail");
    Ok(if max <= 2.0 * lambda + 1e-12 {
        Sufficiency::Sufficient
    } else {
        Sufficiency::Inconclusive
    })
}

/// The operator z²f'' + zf' − f, coefficientwise (k²−1)·a_k at z^k.
pub fn operator_series(f: &TaylorSeries) -> RawSeries {
    let mut coeffs = vec![Complex64::new(0.0, 0.0); f.degree() + 1];
    for (i, &a) in f.coeffs().iter().enumerate() {
        let k = (i + 1) as f64;
        coeffs[i + 1] = a * (k * k - 1.0);
    }
    RawSeries::new(coeffs).expect("nonempty by construction")
}

/// Operator test: max_{|z|=1} |z²f'' + zf' − f| ≤ 3λ implies membership.
/// The constant 3λ is sharp, witnessed by z + (η/3)z² with η > 3λ.
pub fn operator_sufficient(f: &TaylorSeries, lambda: f64) -> Result<Sufficiency, Error> {
    if lambda <= 0.0 {
        return Err(Error::InvalidLambda(lambda));
    }
    let op = operator_series(f);
    let mut modulus = |theta: f64| -> Result<f64, Error> {
        Ok(op.eval(Complex64::from_polar(1.0, theta)).norm())
    };
    let (_, max) = scan::max_over_circle(&mut modulus, DEFAULT_BOUNDARY_SAMPLES, scan::REFINE_TOL)
        .expect("modulus scan cannot fail");
    Ok(if max <= 3.0 * lambda + 1e-12 {
        Sufficiency::Sufficient
    } else {
        Sufficiency::Inconclusive
    })
}

/// Coefficient bounds |a_k| ≤ λ/(k−1) for a certified member, one report
/// per index k ≥ 2.
pub fn coefficient_bounds_check(
    f: &TaylorSeries,
    cert: &MembershipCertificate,
) -> Result<Vec<BoundReport>, Error> {
    if !cert.member {
        return Err(Error::NotCertified);
    }
    let lambda = cert.lambda;
    let mut reports = Vec::with_capacity(f.degree().saturating_sub(1));
    for k in 2..=f.degree() {
        let measured = f.coeff(k).norm();
        let bound = lambda / (k as f64 - 1.0);
        reports.push(
            BoundReport::upper(format!("|a_{}|", k), measured, bound)
                .with_inputs(&[("k", k as f64), ("lambda", lambda)]),
        );
    }
    Ok(reports)
}

/// Growth and distortion on |z| = r for a certified member:
/// r − λr² ≤ |f| ≤ r + λr² and 1 − 2λr ≤ |f'| ≤ 1 + 2λr.
/// Returns the four comparisons (|f| lower/upper, |f'| lower/upper).
pub fn growth_distortion_check(
    f: &TaylorSeries,
    cert: &MembershipCertificate,
    r: f64,
    samples: usize,
) -> Result<Vec<BoundReport>, Error> {
    if !cert.member {
        return Err(Error::NotCertified);
    }
    if !(0.0 < r && r < 1.0) {
        return Err(Error::Domain(format!(
            "radius must lie in (0, 1), got {}",
            r
        )));
    }
    let lambda = cert.lambda;
    let fp = f.derivative();
    let mut abs_f =
        |theta: f64| -> Result<f64, Error> { Ok(f.eval(Complex64::from_polar(r, theta)).norm()) };
    let (_, min_f) = scan::min_over_circle(&mut abs_f, samples, scan::REFINE_TOL)?;
    let (_, max_f) = scan::max_over_circle(&mut abs_f, samples, scan::REFINE_TOL)?;
    let mut abs_fp =
        |theta: f64| -> Result<f64, Error> { Ok(fp.eval(Complex64::from_polar(r, theta)).norm()) };
    let (_, min_fp) = scan::min_over_circle(&mut abs_fp, samples, scan::REFINE_TOL)?;
    let (_, max_fp) = scan::max_over_circle(&mut abs_fp, samples, scan::REFINE_TOL)?;

    let echo: &[(&str, f64)] = &[("r", r), ("lambda", lambda)];
    Ok(vec![
        BoundReport::lower("min |f| vs r - lambda r^2", min_f, r - lambda * r * r)
            .with_inputs(echo),
        BoundReport::upper("max |f| vs r + lambda r^2", max_f, r + lambda * r * r)
            .with_inputs(echo),
        BoundReport::lower("min |f'| vs 1 - 2 lambda r", min_fp, 1.0 - 2.0 * lambda * r)
            .with_inputs(echo),
        BoundReport::upper("max |f'| vs 1 + 2 lambda r", max_fp, 1.0 + 2.0 * lambda * r)
            .with_inputs(echo),
    ])
}

/// Draw a certified multiplier: total coefficient mass < 1 split across a
/// random number of powers (so Σ|b_j| certifies the sup norm with no
/// numerical maximization), with independent uniform phases.
pub fn random_phi(rng: &mut impl Rng, max_terms: usize) -> PhiSpec {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mass: f64 = rng.gen_range(0.35..0.95);
    let weights: Vec<f64> = (0..terms).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let coeffs = weights
        .iter()
        .map(|w| {
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(mass * w / total, phase)
        })
        .collect();
    PhiSpec::from_coeffs(coeffs).expect("nonempty by construction")
}

/// Random certified member at defect bound `lambda`.
pub fn random_member(rng: &mut impl Rng, lambda: f64, degree: usize) -> TaylorSeries {
    let max_terms = degree.saturating_sub(2).clamp(1, 12);
    let phi = random_phi(rng, max_terms);
    from_phi(&phi, lambda, degree).expect("valid generator parameters")
}

/// Random crafted non-member: a certified member plus a single coefficient
/// bump large enough that the defect provably exceeds λ + 0.05.
pub fn random_nonmember(rng: &mut impl Rng, lambda: f64, degree: usize) -> TaylorSeries {
    let base = random_member(rng, lambda, degree.max(8));
    let k = rng.gen_range(2..=8usize);
    let phase = rng.gen_range(0.0..std::f64::consts::TAU);
    // Defect of the sum is at least (k−1)|c| − λ·(mass) ≥ λ + 0.05.
    let magnitude = (2.0 * lambda + 0.05) / (k as f64 - 1.0);
    let mut coeffs = base.coeffs().to_vec();
    coeffs[k - 1] += Complex64::from_polar(magnitude, phase);
    TaylorSeries::new(coeffs).expect("normalization untouched")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn from_phi_constant_multiplier() {
        let phi = PhiSpec::constant(c(1.0, 0.0));
        for &lambda in &[0.25, 0.5, 1.0] {
            let f = from_phi(&phi, lambda, 8).unwrap();
            assert_eq!(f.coeff(2), c(lambda, 0.0));
            for k in 3..=8 {
                assert_eq!(f.coeff(k), c(0.0, 0.0));
            }
        }
        assert!(matches!(
            from_phi(&phi, 0.0, 8),
            Err(Error::InvalidLambda(_))
        ));
    }

    #[test]
    fn from_phi_linear_multiplier() {
        let phi = PhiSpec::from_coeffs(vec![c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let lambda = 0.8;
        let f = from_phi(&phi, lambda, 6).unwrap();
        assert_eq!(f.coeff(2), c(0.0, 0.0));
        assert_eq!(f.coeff(3), c(lambda / 2.0, 0.0));
    }

    #[test]
    fn from_phi_reproduces_mobius_family() {
        for &mu in &[-0.8, -0.3, 0.0, 0.5, 0.9] {
            let n = 40;
            let direct = family_f_mu(mu, n).unwrap();
            let phi = PhiSpec::mobius(mu, n - 2).unwrap();
            let via_phi = from_phi(&phi, 0.5, n).unwrap();
            for k in 1..=n {
                assert!(
                    (direct.coeff(k) - via_phi.coeff(k)).norm() < 1e-12,
                    "mu={}, k={}",
                    mu,
                    k
                );
            }
        }
    }

    #[test]
    fn family_coefficients_at_reference_points() {
        // μ = 1: the series terminates at z + z²/2.
        let f = family_f_mu(1.0, 32).unwrap();
        assert_eq!(f.coeff(2), c(0.5, 0.0));
        for k in 3..=32 {
            assert_eq!(f.coeff(k), c(0.0, 0.0));
        }

        // μ = 0: only z + z³/4 survives.
        let f = family_f_mu(0.0, 32).unwrap();
        assert_eq!(f.coeff(2), c(0.0, 0.0));
        assert_eq!(f.coeff(3), c(0.25, 0.0));
        for k in 4..=32 {
            assert_eq!(f.coeff(k), c(0.0, 0.0));
        }

        // μ = 0.5: a_4 = (0.75)(−0.5)/6 = −0.0625.
        let f = family_f_mu(0.5, 32).unwrap();
        assert!((f.coeff(4) - c(-0.0625, 0.0)).norm() < 1e-15);

        assert!(matches!(family_f_mu(1.5, 16), Err(Error::Domain(_))));
    }

    #[test]
    fn extremal_members_attain_defect_lambda() {
        for &(k, lambda) in &[(2usize, 0.5), (5, 0.5), (3, 1.0), (8, 0.25)] {
            let f = extremal_k(k, lambda).unwrap();
            assert_eq!(f.coeff(k), c(lambda / (k as f64 - 1.0), 0.0));
            let defect = boundary_defect(&f, 1024);
            assert!((defect - lambda).abs() < 1e-12, "k={} lambda={}", k, lambda);
        }
        assert!(extremal_k(1, 0.5).is_err());
        assert_eq!(
            extremal_k(2, 0.5).unwrap(),
            TaylorSeries::from_real(&[1.0, 0.5]).unwrap()
        );
        assert_eq!(extremal_k(5, 0.5).unwrap().coeff(5), c(0.125, 0.0));
    }

    #[test]
    fn boundary_defect_reference_values() {
        let f = TaylorSeries::from_real(&[1.0, 0.5]).unwrap();
        assert!((boundary_defect(&f, 1024) - 0.5).abs() < 1e-12);

        for &lambda in &[0.25, 0.5, 1.0] {
            let f = cubic_member(lambda).unwrap();
            assert!((boundary_defect(&f, 1024) - lambda).abs() < 1e-9);
        }
    }

    #[test]
    fn mobius_family_stays_within_defect_half() {
        let mut mu = -1.0;
        while mu <= 1.0 {
            // High degree keeps the multiplier truncation below the test
            // tolerance even at |μ| = 0.9.
            let f = family_f_mu(mu, 256).unwrap();
            let defect = boundary_defect(&f, 2048);
            assert!(defect <= 0.5 + 1e-9, "mu={} defect={}", mu, defect);
            mu += 0.1;
        }
    }

    #[test]
    fn membership_examples() {
        let id = TaylorSeries::identity();
        let cert = is_member(&id, 0.1, DEFAULT_MEMBERSHIP_TOL).unwrap();
        assert!(cert.member);
        assert!(cert.defect < 1e-15);

        let f = cubic_member(0.5).unwrap();
        let cert = is_member(&f, 0.5, DEFAULT_MEMBERSHIP_TOL).unwrap();
        assert!(cert.member);
        assert!(cert.margin.abs() < 1e-9);

        let g = TaylorSeries::from_real(&[1.0, 1.0]).unwrap();
        let cert = is_member(&g, 0.5, DEFAULT_MEMBERSHIP_TOL).unwrap();
        assert!(!cert.member);
        assert!((cert.defect - 1.0).abs() < 1e-9);

        assert!(matches!(
            is_member(&g, -1.0, 1e-9),
            Err(Error::InvalidLambda(_))
        ));
    }

    #[test]
    fn coefficient_sum_certificate() {
        let lambda = 0.6;
        let f = TaylorSeries::from_real(&[1.0, lambda / 2.0]).unwrap();
        let cert = certificate_from_coefficient_sum(&f, lambda).unwrap();
        assert!(cert.member);
        assert_eq!(cert.method, MembershipMethod::CoefficientSum);
        assert_eq!(cert.defect, lambda / 2.0);
        // The recorded value dominates the scanned defect.
        assert!(cert.defect >= boundary_defect(&f, 1024) - 1e-12);

        // At the boundary the sum proves nothing.
        let f = extremal_k(4, lambda).unwrap();
        assert!(!certificate_from_coefficient_sum(&f, lambda).unwrap().member);
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.contains("coefficient-sum"));
    }

    #[test]
    fn coefficient_sum_test_cases() {
        let lambda = 0.6;
        let f = TaylorSeries::from_real(&[1.0, lambda / 2.0]).unwrap();
        assert_eq!(
            coeff_sum_sufficient(&f, lambda).unwrap(),
            Sufficiency::Sufficient
        );

        // Single-term extremal: sum equals λ, not strictly below it.
        let f = extremal_k(5, lambda).unwrap();
        assert_eq!(
            coeff_sum_sufficient(&f, lambda).unwrap(),
            Sufficiency::Inconclusive
        );
        assert!(is_member(&f, lambda, 1e-9).unwrap().member);

        // Möbius family: Σ(k−1)|a_k| telescopes to (1 + 2|μ|)/2, so the
        // test is inconclusive for every μ ≠ 0 at λ = 1/2 even though the
        // functions are members.
        for &mu in &[0.0, 0.5, -0.7] {
            let f = family_f_mu(mu, 200).unwrap();
            let sum = defect_coefficient_sum(&f);
            let want = (1.0 + 2.0 * mu.abs()) / 2.0;
            assert!(
                (sum - want).abs() < 1e-9,
                "mu={} sum={} want={}",
                mu,
                sum,
                want
            );
            assert_eq!(
                coeff_sum_sufficient(&f, 0.5).unwrap(),
                Sufficiency::Inconclusive
            );
        }
    }

    #[test]
    fn second_derivative_test_cases() {
        let lambda = 0.5;
        let f = TaylorSeries::from_real(&[1.0, lambda]).unwrap();
        assert_eq!(
            second_deriv_sufficient(&f, lambda).unwrap(),
            Sufficiency::Sufficient
        );
        assert_eq!(
            second_deriv_sufficient(&TaylorSeries::identity(), lambda).unwrap(),
            Sufficiency::Sufficient
        );

        // η = 2λ + 0.1 exceeds the sharp constant: inconclusive, and f'
        // vanishes at −1/η inside the disk of radius 1/(2λ).
        let eta = 2.0 * lambda + 0.1;
        let f = TaylorSeries::from_real(&[1.0, eta / 2.0]).unwrap();
        assert_eq!(
            second_deriv_sufficient(&f, lambda).unwrap(),
            Sufficiency::Inconclusive
        );
        let zero = c(-1.0 / eta, 0.0);
        assert!(f.derivative().eval(zero).norm() < 1e-12);
        assert!(zero.norm() < 1.0 / (2.0 * lambda));
    }

    #[test]
    fn operator_test_cases() {
        let lambda = 0.4;
        assert_eq!(
            operator_sufficient(&TaylorSeries::identity(), lambda).unwrap(),
            Sufficiency::Sufficient
        );

        // z + (η/3)z² has operator value |η z²|, boundary maximum η.
        for &eta in &[3.0 * lambda, 3.0 * lambda + 0.1] {
            let f = TaylorSeries::from_real(&[1.0, eta / 3.0]).unwrap();
            let op = operator_series(&f);
            assert!((op.coeff(2).norm() - eta).abs() < 1e-12);
            let verdict = operator_sufficient(&f, lambda).unwrap();
            if eta <= 3.0 * lambda {
                assert_eq!(verdict, Sufficiency::Sufficient);
            } else {
                assert_eq!(verdict, Sufficiency::Inconclusive);
            }
        }

        // z + λz²: operator is 3λz², a boundary case.
        let f = TaylorSeries::from_real(&[1.0, lambda]).unwrap();
        assert_eq!(
            operator_sufficient(&f, lambda).unwrap(),
            Sufficiency::Sufficient
        );
    }

    #[test]
    fn coefficient_bounds_for_members() {
        let f = family_f_mu(0.6, 64).unwrap();
        let cert = is_member(&f, 0.5, 1e-9).unwrap();
        let reports = coefficient_bounds_check(&f, &cert).unwrap();
        assert_eq!(reports.len(), 63);
        for rep in &reports {
            assert!(rep.passes(1e-12), "{} slack {}", rep.label, rep.slack);
        }

        // Equality at the extremal index.
        let f = extremal_k(6, 0.5).unwrap();
        let cert = is_member(&f, 0.5, 1e-9).unwrap();
        let reports = coefficient_bounds_check(&f, &cert).unwrap();
        assert_eq!(reports[4].measured, reports[4].bound);

        let nonmember = TaylorSeries::from_real(&[1.0, 1.0]).unwrap();
        let cert = is_member(&nonmember, 0.5, 1e-9).unwrap();
        assert!(matches!(
            coefficient_bounds_check(&nonmember, &cert),
            Err(Error::NotCertified)
        ));
    }

    #[test]
    fn growth_distortion_equality_for_quadratic_extremal() {
        let lambda = 0.5;
        let f = TaylorSeries::from_real(&[1.0, lambda]).unwrap();
        let cert = is_member(&f, lambda, 1e-9).unwrap();
        for &r in &[0.3, 0.6, 0.9] {
            let reports = growth_distortion_check(&f, &cert, r, 1024).unwrap();
            for rep in &reports {
                assert!(rep.passes(1e-9), "{} slack {}", rep.label, rep.slack);
                // The quadratic extremal attains all four bounds at real z.
                assert!(rep.slack.abs() < 1e-9, "{} slack {}", rep.label, rep.slack);
            }
        }
    }

    #[test]
    fn growth_distortion_strict_for_identity() {
        let id = TaylorSeries::identity();
        let cert = is_member(&id, 0.5, 1e-9).unwrap();
        let reports = growth_distortion_check(&id, &cert, 0.6, 1024).unwrap();
        for rep in &reports {
            assert!(rep.slack > 1e-3, "{} should be strictly inside", rep.label);
        }
    }

    #[test]
    fn random_members_are_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &lambda in &[0.3, 0.5, 1.0] {
            for _ in 0..25 {
                let f = random_member(&mut rng, lambda, 64);
                let cert = is_member(&f, lambda, 1e-9).unwrap();
                assert!(
                    cert.member,
                    "generator soundness violated: defect {}",
                    cert.defect
                );
            }
        }
    }

    #[test]
    fn random_nonmembers_are_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let f = random_nonmember(&mut rng, 0.5, 64);
            let cert = is_member(&f, 0.5, 1e-9).unwrap();
            assert!(!cert.member);
            assert!(cert.defect > 0.5 + 0.04);
        }
    }

    #[test]
    fn certificate_serializes_with_stable_field_names() {
        let f = cubic_member(0.5).unwrap();
        let cert = is_member(&f, 0.5, 1e-9).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        for key in ["lambda", "defect", "method", "margin", "samples", "member"] {
            assert!(json.contains(key), "missing {} in {}", key, json);
        }
        assert!(json.contains("boundary-scan"));
    }
}
