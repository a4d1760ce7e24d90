//! Numerical toolkit for the disk classes defined by the differential
//! inequality |zf'(z) − f(z)| < λ on the unit disk, for normalized analytic
//! functions f(z) = z + a₂z² + ….
//!
//! The crate constructs members of these classes (named families and seeded
//! random members), certifies membership by boundary scans, measures
//! geometric radii — starlikeness, convexity, close-to-convexity — of
//! functions and of their Taylor partial sums, solves the transcendental
//! equations whose roots are the sharp partial-sum radii for the defect
//! bound λ = 1/2, and verifies the tail and partial-sum approximation
//! bounds attached to that class. Everything is desk-scale and pure:
//! deterministic given a seed, no global state, safe to call concurrently.
//!
//! # Modules
//!
//! * [`series`] — truncated power series arithmetic (the universal
//!   representation) and the JSON coefficient format.
//! * [`omega`] — construction and certification of class members, plus the
//!   sufficient conditions expressed through f'', the radial operator, and
//!   coefficient sums.
//! * [`geometry`] — geometric functionals, circle minimization, and direct
//!   radius-of-property scans.
//! * [`roots`] — bracketed scalar root finding and the catalog of named
//!   radius equations.
//! * [`bounds`] — tail bounds, approximation constants, the minimal-order
//!   theorem, and the order-versus-radius table.
//! * [`verify`] — named suites that re-check every bound on seeded random
//!   members, as used by the `verify` subcommand of the bundled binary.
//! * [`cli`] — the command-line interface.
//!
//! # Quick start
//!
//! ```
//! use omega_gft::omega;
//!
//! // The cubic member z + λz²/2 + λz³/4 sits exactly on the boundary of
//! // its class: the defect maximum equals λ.
//! let f = omega::cubic_member(0.5).unwrap();
//! let cert = omega::is_member(&f, 0.5, 1e-9).unwrap();
//! assert!(cert.member);
//! assert!(cert.margin.abs() < 1e-9);
//! ```
//!
//! Runnable demonstrations of each capability live in `examples/`.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod omega;
pub mod report;
pub mod roots;
mod scan;
pub mod series;
pub mod verify;

pub use error::Error;
pub use report::BoundReport;
pub use series::{RawSeries, TaylorSeries};
