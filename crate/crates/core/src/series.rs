//! Truncated complex power series with the normalization f(0) = 0, f'(0) = 1.
//!
//! Two representations are used throughout the crate:
//!
//! * [`TaylorSeries`] — normalized functions z + a₂z² + … + a_N z^N, the
//!   universal representation of class members and their partial sums.
//! * [`RawSeries`] — derived objects (derivatives, defects zf' − f,
//!   reciprocals 1/f') that may carry a constant term.
//!
//! All operations are pure; values are immutable after construction and
//! safe to share across threads.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Evaluate Σ coeffs[j] z^j by Horner's nested scheme (stable for |z| ≤ 1).
fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// On-disk coefficient format: `{"degree": N, "coeffs": [[re, im], ...]}`
/// where `coeffs[0]` is the coefficient of z (must be `[1.0, 0.0]`).
#[derive(Serialize, Deserialize)]
struct CoeffFile {
    degree: usize,
    coeffs: Vec<[f64; 2]>,
}

/// Normalized truncated series z + Σ_{k=2..N} a_k z^k.
///
/// Storage is dense from power 1: `coeffs()[k-1]` is a_k, and the first
/// coefficient is exactly 1 (checked with zero tolerance — the
/// normalization is a hard precondition of every bound in this crate).
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorSeries {
    coeffs: Vec<Complex64>,
}

impl TaylorSeries {
    /// Build a series from the coefficients a_1..a_N.
    ///
    /// Fails with [`Error::Normalization`] unless a_1 = 1 exactly, and with
    /// [`Error::EmptyInput`] on an empty list.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, Error> {
        match coeffs.first() {
            None => Err(Error::EmptyInput),
            Some(&a1) if a1 != Complex64::new(1.0, 0.0) => Err(Error::Normalization { got: a1 }),
            _ => Ok(TaylorSeries { coeffs }),
        }
    }

    /// Convenience constructor from real coefficients a_1..a_N.
    pub fn from_real(coeffs: &[f64]) -> Result<Self, Error> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The identity function z.
    pub fn identity() -> Self {
        TaylorSeries {
            coeffs: vec![Complex64::new(1.0, 0.0)],
        }
    }

    /// Highest retained power N.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Dense coefficient slice; entry k−1 is a_k.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient a_k (zero outside 1..=degree; a_0 = 0 by normalization).
    pub fn coeff(&self, k: usize) -> Complex64 {
        if k >= 1 && k <= self.coeffs.len() {
            self.coeffs[k - 1]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }

    /// f(z) = z·(a_1 + a_2 z + …) via Horner.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        z * horner(&self.coeffs, z)
    }

    /// f'(z) as a raw series: coefficient of z^j is (j+1)·a_{j+1}.
    /// The constant term is f'(0) = 1.
    pub fn derivative(&self) -> RawSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, &a)| a * (j as f64 + 1.0))
            .collect();
        RawSeries { coeffs }
    }

    /// f''(z) as a raw series.
    pub fn second_derivative(&self) -> RawSeries {
        self.derivative().derivative()
    }

    /// The defect g(z) = zf'(z) − f(z), coefficientwise (k−1)·a_k at z^k.
    /// Its z⁰ and z¹ coefficients vanish identically.
    pub fn defect_series(&self) -> RawSeries {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let k = i + 1;
            coeffs[k] = a * (k as f64 - 1.0);
        }
        RawSeries { coeffs }
    }

    /// The n-th partial sum s_n = z + a_2 z² + … + a_min(n,N) z^min(n,N).
    pub fn partial_sum(&self, n: usize) -> TaylorSeries {
        assert!(n >= 1, "partial sum order must be at least 1");
        let keep = n.min(self.coeffs.len());
        TaylorSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// The tail ρ_n = f − s_n = Σ_{k>n} a_k z^k (zero series when n ≥ N).
    /// Coefficientwise, `partial_sum(n)` and `tail(n)` recombine to f exactly.
    pub fn tail(&self, n: usize) -> RawSeries {
        let deg = self.coeffs.len();
        if n >= deg {
            return RawSeries::zero();
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); deg + 1];
        coeffs[(n + 1)..=deg].copy_from_slice(&self.coeffs[n..deg]);
        RawSeries { coeffs }
    }

    /// Hadamard convolution: coefficientwise product a_k·b_k, truncated to
    /// the smaller degree. Both inputs are normalized by construction, so
    /// the result is normalized as well.
    pub fn convolve(&self, g: &TaylorSeries) -> TaylorSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(g.coeffs.iter())
            .map(|(&a, &b)| a * b)
            .collect();
        TaylorSeries { coeffs }
    }

    /// Serialize to the coefficient file format at full double precision.
    pub fn to_json(&self) -> String {
        let file = CoeffFile {
            degree: self.coeffs.len(),
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        };
        serde_json::to_string(&file).expect("coefficient serialization")
    }

    /// Parse the coefficient file format, validating the normalization.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let file: CoeffFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.coeffs.len() != file.degree {
            return Err(Error::Parse(format!(
                "declared degree {} but {} coefficients",
                file.degree,
                file.coeffs.len()
            )));
        }
        Self::new(
            file.coeffs
                .iter()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect(),
        )
    }
}

/// Truncated series Σ_{j=0..N} b_j z^j with no normalization constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct RawSeries {
    coeffs: Vec<Complex64>,
}

impl RawSeries {
    /// Build from coefficients b_0..b_N. Fails on an empty list.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(RawSeries { coeffs })
    }

    /// Convenience constructor from real coefficients b_0..b_N.
    pub fn from_real(coeffs: &[f64]) -> Result<Self, Error> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The zero series.
    pub fn zero() -> Self {
        RawSeries {
            coeffs: vec![Complex64::new(0.0, 0.0)],
        }
    }

    /// Highest stored power N.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Dense coefficient slice from power 0.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient b_j (zero outside 0..=degree).
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs
            .get(j)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    /// Termwise derivative; the derivative of a constant is the zero series.
    pub fn derivative(&self) -> RawSeries {
        if self.coeffs.len() <= 1 {
            return RawSeries::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &b)| b * (i as f64 + 1.0))
            .collect();
        RawSeries { coeffs }
    }

    /// Cauchy product truncated at `max_degree`.
    pub fn mul_truncated(&self, other: &RawSeries, max_degree: usize) -> RawSeries {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); max_degree + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > max_degree {
                break;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j > max_degree {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        RawSeries { coeffs }
    }

    /// Multiplicative inverse as a power series, to the given degree.
    ///
    /// Solves Σ_{j=0..m} b_j q_{m−j} = [m = 0] by forward recurrence; the
    /// product with the original series is 1 + O(z^{degree+1}).
    pub fn reciprocal(&self, degree: usize) -> Result<RawSeries, Error> {
        let b0 = self.coeffs[0];
        if b0 == Complex64::new(0.0, 0.0) {
            return Err(Error::ZeroConstantTerm);
        }
        let inv_b0 = Complex64::new(1.0, 0.0) / b0;
        let mut q = vec![Complex64::new(0.0, 0.0); degree + 1];
        q[0] = inv_b0;
        for m in 1..=degree {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..=m.min(self.coeffs.len() - 1) {
                acc += self.coeffs[j] * q[m - j];
            }
            q[m] = -inv_b0 * acc;
        }
        Ok(RawSeries { coeffs: q })
    }
}
