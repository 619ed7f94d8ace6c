//! Numerical laboratory for Bohr-type inequalities on the unit disk.
//!
//! The crate provides five layers:
//!
//! * [`series`] — value-semantic truncated Taylor series with tail-growth
//!   metadata, so every partial sum comes with a certified remainder bound;
//! * [`functions`] — the canonical disk functions (Moebius automorphisms,
//!   the half-plane map, the Koebe function) and seeded random generators
//!   of Schwarz-type and unit-bounded functions;
//! * [`functionals`] — majorant series, quadratic norms, and the refined
//!   Bohr functionals, each evaluated with a certified truncation tail;
//! * [`radii`] — exact radius formulas and certified bracketing solvers for
//!   the radius equations, plus the bivariate polynomials behind them;
//! * [`subordination`] — quasi-subordination triples, inequality
//!   verification records, sharpness witnesses, and the randomized suites.

pub mod series;
pub mod functions;
pub mod functionals;
pub mod radii;
pub mod subordination;

pub use num_complex::Complex64;
pub use series::{GrowthClass, SeriesError, TruncatedSeries, DEFAULT_ORDER};
