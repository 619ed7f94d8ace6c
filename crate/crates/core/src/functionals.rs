//! Bohr-type functionals evaluated with certified truncation tails.
//!
//! Each operation returns a [`RadialEvalReport`]: the partial-sum value at
//! radius r together with an upper bound on everything the truncation
//! discarded, derived from the input's growth class. A series with `Unknown`
//! growth yields an infinite tail flag rather than a silently unqualified
//! partial sum.

use std::fmt;

use crate::radii::phi_poly;
use crate::series::TruncatedSeries;

/// Value of a functional at radius r plus a certified bound on the omitted
/// tail. The bound is valid whenever the input's growth assertion holds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialEvalReport {
    pub r: f64,
    pub value: f64,
    pub tail: f64,
    pub order_used: usize,
}

impl RadialEvalReport {
    /// False when the input carried no usable tail information.
    pub fn is_certified(&self) -> bool {
        self.tail.is_finite()
    }

    /// Largest value the untruncated functional can take.
    pub fn upper(&self) -> f64 {
        self.value + self.tail
    }
}

/// Argument outside a functional's stated range.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainError {
    pub what: &'static str,
    pub value: f64,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "argument out of domain: {} = {}", self.what, self.value)
    }
}

impl std::error::Error for DomainError {}

fn check_radius(r: f64) -> Result<(), DomainError> {
    if !(0.0..1.0).contains(&r) {
        return Err(DomainError { what: "r", value: r });
    }
    Ok(())
}

/// Σ_{n=1..N} |a_n| rⁿ, Horner over moduli. Shared head of the functionals.
fn majorant_from_one(f: &TruncatedSeries, r: f64) -> f64 {
    let mut acc = 0.0;
    for c in f.coeffs().iter().skip(1).rev() {
        acc = acc * r + c.norm();
    }
    acc * r
}

/// Σ_{n=1..N} |a_n|² r^{2n}.
fn norm_sq_from_one(f: &TruncatedSeries, r: f64) -> f64 {
    let x = r * r;
    let mut acc = 0.0;
    for c in f.coeffs().iter().skip(1).rev() {
        acc = acc * x + c.norm_sqr();
    }
    acc * x
}

/// Majorant series M_f(r) = Σ_{n=0..N} |a_n| rⁿ with its truncation tail.
pub fn majorant(f: &TruncatedSeries, r: f64) -> Result<RadialEvalReport, DomainError> {
    check_radius(r)?;
    Ok(RadialEvalReport {
        r,
        value: f.constant_term().norm() + majorant_from_one(f, r),
        tail: f.growth().majorant_tail(r, f.order()),
        order_used: f.order(),
    })
}

/// Quadratic norm ‖f₀‖_r = Σ_{n=1..N} |a_n|² r^{2n}; the constant term is
/// excluded by definition.
pub fn norm_sq(f: &TruncatedSeries, r: f64) -> Result<RadialEvalReport, DomainError> {
    check_radius(r)?;
    Ok(RadialEvalReport {
        r,
        value: norm_sq_from_one(f, r),
        tail: f.growth().norm_sq_tail(r, f.order()),
        order_used: f.order(),
    })
}

/// Refined functional |a₀|ᵖ + Σ_{n≥1}|a_n|rⁿ + (1/(1+|a₀|) + r/(1−r))‖f₀‖_r.
///
/// Tails of the two series parts combine additively with the same weight.
pub fn refined_functional(
    f: &TruncatedSeries,
    r: f64,
    p: f64,
) -> Result<RadialEvalReport, DomainError> {
    check_radius(r)?;
    if !(p > 0.0 && p <= 2.0) {
        return Err(DomainError { what: "p", value: p });
    }
    let a0 = f.constant_term().norm();
    let weight = 1.0 / (1.0 + a0) + r / (1.0 - r);
    let order = f.order();
    Ok(RadialEvalReport {
        r,
        value: a0.powf(p) + majorant_from_one(f, r) + weight * norm_sq_from_one(f, r),
        tail: f.growth().majorant_tail(r, order) + weight * f.growth().norm_sq_tail(r, order),
        order_used: order,
    })
}

/// Distance-form functional T_f(r) = Σ_{n≥1}|a_n|rⁿ + (1/(2−λ) + r/(1−r))‖f₀‖_r.
///
/// λ is the distance from f(0) to the boundary of the target domain; it is
/// caller-supplied because it is known analytically only per family.
pub fn distance_form_t(
    f: &TruncatedSeries,
    r: f64,
    lambda: f64,
) -> Result<RadialEvalReport, DomainError> {
    check_radius(r)?;
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(DomainError { what: "lambda", value: lambda });
    }
    let weight = 1.0 / (2.0 - lambda) + r / (1.0 - r);
    let order = f.order();
    Ok(RadialEvalReport {
        r,
        value: majorant_from_one(f, r) + weight * norm_sq_from_one(f, r),
        tail: f.growth().majorant_tail(r, order) + weight * f.growth().norm_sq_tail(r, order),
        order_used: order,
    })
}

/// Closed form of the refined half-plane functional
/// S_g(r) = 1 − λ·Φ(λ, r) / ((2 − λ)(1 − r)(1 − r²)), λ = 1 − g(0).
///
/// Exact up to rounding: no truncation is involved.
pub fn half_plane_closed_form(lambda: f64, r: f64) -> Result<f64, DomainError> {
    check_radius(r)?;
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(DomainError { what: "lambda", value: lambda });
    }
    Ok(1.0 - lambda * phi_poly(lambda, r) / ((2.0 - lambda) * (1.0 - r) * (1.0 - r * r)))
}
