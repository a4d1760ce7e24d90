//! Measured-versus-bound reporting shared by the verification operations.

use std::collections::BTreeMap;

use serde::Serialize;

/// One measured quantity compared against a theoretical bound.
///
/// `slack` is the margin by which the comparison passes: `bound − measured`
/// for upper bounds, `measured − bound` for lower bounds. A passing report
/// has `slack ≥ −tol` for the tolerance of the check at hand.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub label: String,
    pub measured: f64,
    pub bound: f64,
    pub slack: f64,
    /// Inputs echoed for reproducibility (indices, radii, parameters).
    pub inputs: BTreeMap<String, f64>,
}

impl BoundReport {
    pub fn upper(label: impl Into<String>, measured: f64, bound: f64) -> Self {
        BoundReport {
            label: label.into(),
            measured,
            bound,
            slack: bound - measured,
            inputs: BTreeMap::new(),
        }
    }

    pub fn lower(label: impl Into<String>, measured: f64, bound: f64) -> Self {
        BoundReport {
            label: label.into(),
            measured,
            bound,
            slack: measured - bound,
            inputs: BTreeMap::new(),
        }
    }

    pub fn with_inputs(mut self, pairs: &[(&str, f64)]) -> Self {
        for (k, v) in pairs {
            self.inputs.insert((*k).to_string(), *v);
        }
        self
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.slack >= -tol
    }
}
