//! Quasi-subordination triples, inequality verification, and sharpness
//! witnesses.
//!
//! A function f is quasi-subordinate to g (relative to Φ) when
//! f = Φ·(g∘ω) for some Schwarz function ω and some Φ with |Φ| ≤ 1 on the
//! disk. Subordination is the Φ ≡ 1 case; majorization is ω(z) = z. This
//! module builds such triples, checks the coefficient inequalities they
//! satisfy, and locates the empirical violation radius of each sharpness
//! witness by bisection.
//!
//! Every comparison is made between certified enclosures: a check passes
//! when the left value does not exceed the right value by more than the two
//! truncation tails plus [`COMPARISON_SLACK`], so any genuine violation
//! beyond the certified uncertainty is caught.

pub mod suites;

use std::fmt;

use num_complex::Complex64;

use crate::functionals::{
    distance_form_t, half_plane_closed_form, majorant, norm_sq, refined_functional, DomainError,
    RadialEvalReport,
};
use crate::functions::{koebe, moebius_phi_a, CanonicalFamily};
use crate::radii::{p_family_radius, solve_r0, solve_rg, RadiusError};
use crate::series::{GrowthClass, SeriesError, TruncatedSeries};

/// Slack added to every pass/fail comparison: both sides carry certified
/// tails, so this only needs to absorb floating-point round-off.
pub const COMPARISON_SLACK: f64 = 1e-12;

/// Truncation order used by the witness generators.
const WITNESS_ORDER: usize = 256;

/// Default tolerance handed to the radius solvers backing predictions.
const SOLVER_TOL: f64 = 1e-12;

#[derive(Debug)]
pub enum LabError {
    Series(SeriesError),
    Functional(DomainError),
    Radius(RadiusError),
    Domain { what: &'static str, value: f64 },
    /// The triple does not satisfy a structural precondition.
    InvalidTriple(&'static str),
}

impl fmt::Display for LabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabError::Series(e) => write!(f, "series error: {}", e),
            LabError::Functional(e) => write!(f, "functional error: {}", e),
            LabError::Radius(e) => write!(f, "radius error: {}", e),
            LabError::Domain { what, value } => {
                write!(f, "argument out of domain: {} = {}", what, value)
            }
            LabError::InvalidTriple(msg) => write!(f, "invalid triple: {}", msg),
        }
    }
}

impl std::error::Error for LabError {}

impl From<SeriesError> for LabError {
    fn from(e: SeriesError) -> Self {
        LabError::Series(e)
    }
}

impl From<DomainError> for LabError {
    fn from(e: DomainError) -> Self {
        LabError::Functional(e)
    }
}

impl From<RadiusError> for LabError {
    fn from(e: RadiusError) -> Self {
        LabError::Radius(e)
    }
}

/// The data (Φ, ω, g) of a quasi-subordination together with the derived
/// f = Φ·(g∘ω), truncated at the common order.
#[derive(Clone, Debug)]
pub struct QuasiSubTriple {
    pub phi: TruncatedSeries,
    pub omega: TruncatedSeries,
    pub g: TruncatedSeries,
    pub f: TruncatedSeries,
}

/// Builds f = Φ·(g∘ω) and checks the structural identity f(0) = Φ(0)·g(0).
pub fn build_quasi(
    phi: &TruncatedSeries,
    omega: &TruncatedSeries,
    g: &TruncatedSeries,
) -> Result<QuasiSubTriple, LabError> {
    let f = phi.multiply(&g.compose(omega)?);
    let expected_a0 = phi.constant_term() * g.constant_term();
    if (f.constant_term() - expected_a0).norm() > COMPARISON_SLACK {
        return Err(LabError::InvalidTriple("f(0) != phi(0) * g(0)"));
    }
    Ok(QuasiSubTriple {
        phi: phi.clone(),
        omega: omega.clone(),
        g: g.clone(),
        f,
    })
}

impl QuasiSubTriple {
    /// Re-tags f with a growth class the caller asserts on analytic grounds
    /// (e.g. `BoundedBy(1)` when Φ and g are both bounded by one on the
    /// disk). Series products alone propagate `Unknown`, which would flag
    /// every downstream tail as infinite.
    pub fn with_f_growth(mut self, growth: GrowthClass, tol: f64) -> Result<Self, LabError> {
        self.f = self.f.with_growth(growth, tol)?;
        Ok(self)
    }

    fn phi_is_one(&self) -> bool {
        self.phi.coeff(0) == Complex64::new(1.0, 0.0)
            && self.phi.coeffs().iter().skip(1).all(|c| *c == Complex64::ZERO)
    }
}

/// Outcome of one inequality check at one radius.
#[derive(Clone, Copy, Debug)]
pub struct VerificationRecord {
    pub lhs: RadialEvalReport,
    pub rhs: RadialEvalReport,
    pub r: f64,
    pub passed: bool,
    pub margin: f64,
}

fn record(lhs: RadialEvalReport, rhs: RadialEvalReport, r: f64) -> VerificationRecord {
    VerificationRecord {
        lhs,
        rhs,
        r,
        passed: lhs.value <= rhs.value + lhs.tail + rhs.tail + COMPARISON_SLACK,
        margin: rhs.value - lhs.value,
    }
}

fn combined(base: RadialEvalReport, extra_value: f64, weight: f64, quad: RadialEvalReport) -> RadialEvalReport {
    RadialEvalReport {
        r: base.r,
        value: base.value + weight * (extra_value + quad.value),
        tail: base.tail + weight * quad.tail,
        order_used: base.order_used,
    }
}

fn check_lemma_radius(r: f64) -> Result<(), LabError> {
    if !(0.0..=1.0 / 3.0).contains(&r) {
        return Err(LabError::Domain { what: "r", value: r });
    }
    Ok(())
}

fn lemma1_sides(t: &QuasiSubTriple, r: f64) -> Result<(RadialEvalReport, RadialEvalReport), LabError> {
    let a0 = t.f.constant_term().norm();
    let b0 = t.g.constant_term().norm();
    let phi0 = t.phi.constant_term().norm();
    let weight_f = 1.0 / (1.0 + a0) + r / (1.0 - r);
    let weight_g = 1.0 / (1.0 + (t.g.constant_term() * t.phi.constant_term()).norm()) + r / (1.0 - r);
    let lhs = combined(majorant(&t.f, r)?, 0.0, weight_f, norm_sq(&t.f, r)?);
    let centred = b0 * b0 * (1.0 - phi0 * phi0);
    let rhs = combined(majorant(&t.g, r)?, centred, weight_g, norm_sq(&t.g, r)?);
    Ok((lhs, rhs))
}

/// Quasi-subordination inequality: the refined sum of f against the refined
/// sum of g with the centred correction |b₀|²(1 − |Φ₀|²). Guaranteed for
/// r ≤ 1/3; larger radii are rejected (see [`probe_lemma1`]).
pub fn verify_lemma1(t: &QuasiSubTriple, r: f64) -> Result<VerificationRecord, LabError> {
    check_lemma_radius(r)?;
    let (lhs, rhs) = lemma1_sides(t, r)?;
    Ok(record(lhs, rhs, r))
}

/// Exploratory variant of [`verify_lemma1`] for any r ∈ [0, 1): the sharp
/// radius of the inequality is open, so records from here are data points,
/// never assertions.
pub fn probe_lemma1(t: &QuasiSubTriple, r: f64) -> Result<VerificationRecord, LabError> {
    let (lhs, rhs) = lemma1_sides(t, r)?;
    Ok(record(lhs, rhs, r))
}

fn lemma2_sides(t: &QuasiSubTriple, r: f64) -> Result<(RadialEvalReport, RadialEvalReport), LabError> {
    if !t.phi_is_one() {
        return Err(LabError::InvalidTriple("lemma 2 requires phi == 1"));
    }
    let a0 = t.f.constant_term().norm();
    let weight = 1.0 / (1.0 + a0) + r / (1.0 - r);
    let lhs = combined(majorant(&t.f, r)?, 0.0, weight, norm_sq(&t.f, r)?);
    let rhs = combined(majorant(&t.g, r)?, 0.0, weight, norm_sq(&t.g, r)?);
    Ok((lhs, rhs))
}

/// Subordination inequality (Φ ≡ 1): both sides carry the same weight
/// 1/(1 + |a₀|) + r/(1 − r). Guaranteed for r ≤ 1/3.
pub fn verify_lemma2(t: &QuasiSubTriple, r: f64) -> Result<VerificationRecord, LabError> {
    check_lemma_radius(r)?;
    let (lhs, rhs) = lemma2_sides(t, r)?;
    Ok(record(lhs, rhs, r))
}

/// Exploratory variant of [`verify_lemma2`] for any r ∈ [0, 1).
pub fn probe_lemma2(t: &QuasiSubTriple, r: f64) -> Result<VerificationRecord, LabError> {
    let (lhs, rhs) = lemma2_sides(t, r)?;
    Ok(record(lhs, rhs, r))
}

/// Rogosinski-type inequality ‖f‖_r ≤ ‖g‖_r on the full quadratic sums
/// including the constant term; valid on the whole interval [0, 1).
pub fn verify_rogosinski(t: &QuasiSubTriple, r: f64) -> Result<VerificationRecord, LabError> {
    let a0 = t.f.constant_term().norm();
    let b0 = t.g.constant_term().norm();
    let nf = norm_sq(&t.f, r)?;
    let ng = norm_sq(&t.g, r)?;
    let lhs = RadialEvalReport {
        value: a0 * a0 + nf.value,
        ..nf
    };
    let rhs = RadialEvalReport {
        value: b0 * b0 + ng.value,
        ..ng
    };
    Ok(record(lhs, rhs, r))
}

/// Centred-norm transfer ‖f₀‖_r ≤ |b₀|²(1 − |Φ₀|²) + ‖g₀‖_r, valid on
/// [0, 1); follows from the Rogosinski inequality since a₀ = Φ₀b₀.
pub fn verify_centered_norm(t: &QuasiSubTriple, r: f64) -> Result<VerificationRecord, LabError> {
    let b0 = t.g.constant_term().norm();
    let phi0 = t.phi.constant_term().norm();
    let lhs = norm_sq(&t.f, r)?;
    let ng = norm_sq(&t.g, r)?;
    let rhs = RadialEvalReport {
        value: b0 * b0 * (1.0 - phi0 * phi0) + ng.value,
        ..ng
    };
    Ok(record(lhs, rhs, r))
}

/// Evaluation of a sharpness expression on an extremal family: the radius
/// where the inequality empirically first fails next to the radius the
/// closed formula predicts.
#[derive(Clone, Copy, Debug)]
pub struct WitnessReport {
    pub family: CanonicalFamily,
    pub parameter: f64,
    pub p: Option<f64>,
    pub threshold_found: f64,
    pub threshold_predicted: f64,
    /// Final bracket width of the bisection that located the threshold.
    pub found_uncertainty: f64,
}

impl WitnessReport {
    pub fn discrepancy(&self) -> f64 {
        (self.threshold_found - self.threshold_predicted).abs()
    }
}

/// Bisection on a monotone violation indicator. Requires
/// indicator(lo) = false and indicator(hi) = true. Returns the midpoint and
/// the final bracket width.
fn bisect_indicator(mut lo: f64, mut hi: f64, indicator: impl Fn(f64) -> bool) -> (f64, f64) {
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if indicator(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (0.5 * (lo + hi), hi - lo)
}

/// Sharpness witness of the p-th power refined inequality: the Moebius
/// automorphism φ_a meets the bound with equality at the predicted radius,
/// so the refined functional first exceeds one just beyond it. The
/// expression is strictly increasing in r, which keeps the bisection
/// well-posed.
pub fn sharpness_witness_thm_b(a: f64, p: f64) -> Result<WitnessReport, LabError> {
    if !(a > 0.0 && a < 1.0) {
        return Err(LabError::Domain { what: "a", value: a });
    }
    if !(p > 0.0 && p <= 2.0) {
        return Err(LabError::Domain { what: "p", value: p });
    }
    let witness = moebius_phi_a(a, WITNESS_ORDER)?;
    let exceeds = |r: f64| {
        refined_functional(&witness, r, p)
            .map(|rep| rep.value > 1.0)
            .unwrap_or(true)
    };
    // Grid scan for the first violating cell, then bisect inside it.
    let mut lo = 0.0;
    let mut hi = f64::NAN;
    for i in 1..=98 {
        let r = 0.01 * i as f64;
        if exceeds(r) {
            hi = r;
            break;
        }
        lo = r;
    }
    if hi.is_nan() {
        return Err(LabError::InvalidTriple("witness expression never exceeded one"));
    }
    let (found, width) = bisect_indicator(lo, hi, exceeds);
    Ok(WitnessReport {
        family: CanonicalFamily::MoebiusPhiA(a),
        parameter: a,
        p: Some(p),
        threshold_found: found,
        threshold_predicted: p_family_radius(a, p)?,
        found_uncertainty: width,
    })
}

/// Sharpness witness of the refined half-plane inequality: the first radius
/// where the closed form S_g(r) exceeds one, against the solved root of
/// Φ(λ, ·). The closed form stays at or below one up to r* and exceeds one
/// beyond 1/3, so [r*, 0.34] brackets the crossing for every λ ∈ (0, 1).
pub fn witness_theorem1(lambda: f64) -> Result<WitnessReport, LabError> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(LabError::Domain { what: "lambda", value: lambda });
    }
    let exceeds = |r: f64| {
        half_plane_closed_form(lambda, r)
            .map(|s| s > 1.0)
            .unwrap_or(true)
    };
    let lo = crate::radii::rstar_cardano();
    let hi = 0.34;
    debug_assert!(!exceeds(lo) && exceeds(hi));
    let (found, width) = bisect_indicator(lo, hi, exceeds);
    Ok(WitnessReport {
        family: CanonicalFamily::HalfPlane(1.0 - lambda),
        parameter: lambda,
        p: None,
        threshold_found: found,
        threshold_predicted: solve_r0(lambda, SOLVER_TOL)?.value,
        found_uncertainty: width,
    })
}

/// Sharpness witness of the univalent radius: the coefficient-extremal
/// univalent function with distance one (the Koebe function scaled to
/// b_n = 4n) drives the distance form past λ = 1 just beyond r_g.
pub fn witness_theorem3() -> Result<WitnessReport, LabError> {
    let witness = koebe(WITNESS_ORDER).scale(4.0);
    let exceeds = |r: f64| {
        distance_form_t(&witness, r, 1.0)
            .map(|rep| rep.value > 1.0)
            .unwrap_or(true)
    };
    debug_assert!(!exceeds(0.05) && exceeds(0.2));
    let (found, width) = bisect_indicator(0.05, 0.2, exceeds);
    Ok(WitnessReport {
        family: CanonicalFamily::Koebe,
        parameter: 1.0,
        p: None,
        threshold_found: found,
        threshold_predicted: solve_rg(SOLVER_TOL)?.value,
        found_uncertainty: width,
    })
}

/// Coefficient gate for the convex distance form: |b_n| ≤ 2λ for n ≥ 1.
pub fn convex_bound_check(g: &TruncatedSeries, lambda: f64) -> bool {
    lambda > 0.0
        && g.coeffs()
            .iter()
            .skip(1)
            .all(|c| c.norm() <= 2.0 * lambda + COMPARISON_SLACK)
}

/// Coefficient gate for the univalent distance form: |b_n| ≤ 4nλ for n ≥ 1.
pub fn univalent_bound_check(g: &TruncatedSeries, lambda: f64) -> bool {
    lambda > 0.0
        && g.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .all(|(n, c)| c.norm() <= 4.0 * n as f64 * lambda + COMPARISON_SLACK)
}
