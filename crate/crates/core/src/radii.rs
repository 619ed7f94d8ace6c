//! Exact radius formulas and certified bracketing solvers.
//!
//! Every solved radius is returned as a [`RadiusResult`] carrying the final
//! bracketing interval, the polynomial residual at the returned value, and
//! the iteration count, so callers can audit the enclosure instead of
//! trusting a bare number. Bisection is the primary solver: inside a
//! sign-changing bracket it cannot fail to converge, and the brackets here
//! are fixed per equation from the known localization of each root.

use std::fmt;

/// The two bivariate polynomials whose λ-sections carry all radius
/// equations: `Phi` for the half-plane/convex setting, `Psi` for the
/// univalent setting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BivariatePoly {
    Phi,
    Psi,
}

impl BivariatePoly {
    pub fn eval(&self, lambda: f64, r: f64) -> f64 {
        match self {
            BivariatePoly::Phi => phi_poly(lambda, r),
            BivariatePoly::Psi => psi_poly(lambda, r),
        }
    }

    pub fn partial_lambda(&self, lambda: f64, r: f64) -> f64 {
        match self {
            BivariatePoly::Phi => phi_partial_lambda(lambda, r),
            BivariatePoly::Psi => psi_partial_lambda(lambda, r),
        }
    }
}

/// Φ(λ, r) = 4r³λ² − (7r³ + 3r² − 3r + 1)λ + 6r³ − 2r² − 6r + 2.
pub fn phi_poly(lambda: f64, r: f64) -> f64 {
    let r2 = r * r;
    let r3 = r2 * r;
    4.0 * r3 * lambda * lambda - (7.0 * r3 + 3.0 * r2 - 3.0 * r + 1.0) * lambda
        + (6.0 * r3 - 2.0 * r2 - 6.0 * r + 2.0)
}

/// ∂Φ/∂λ = 8r³λ − (7r³ + 3r² − 3r + 1).
pub fn phi_partial_lambda(lambda: f64, r: f64) -> f64 {
    let r2 = r * r;
    let r3 = r2 * r;
    8.0 * r3 * lambda - (7.0 * r3 + 3.0 * r2 - 3.0 * r + 1.0)
}

/// (1 − 6r + r²)(1 − r)²(1 + r)³, the convex part of the Ψ polynomial.
fn psi_convex_part(r: f64) -> f64 {
    let one_minus = 1.0 - r;
    let one_plus = 1.0 + r;
    (1.0 - 6.0 * r + r * r) * one_minus * one_minus * one_plus * one_plus * one_plus
}

/// 16r²(1 + r²), the Koebe part of the Ψ polynomial.
fn psi_koebe_part(r: f64) -> f64 {
    16.0 * r * r * (1.0 + r * r)
}

/// Ψ(λ, r) = 16λ²r³(1+r²) − λ[(1−6r+r²)(1−r)²(1+r)³ + 16r²(1+r)(1+r²)]
///           + 2(1−6r+r²)(1−r)²(1+r)³.
///
/// Evaluated in the algebraically identical product arrangement
/// (2−λ)·P(r) − (1 + (1−λ)r)·λ·Q(r) with P, Q the two named parts: this
/// keeps the λ = 1 section bitwise consistent with [`rg_poly`], which the
/// identity suite checks at the 1e−14 level.
pub fn psi_poly(lambda: f64, r: f64) -> f64 {
    (2.0 - lambda) * psi_convex_part(r) - (1.0 + (1.0 - lambda) * r) * lambda * psi_koebe_part(r)
}

/// ∂Ψ/∂λ = 32λr³(1+r²) − [(1−6r+r²)(1−r)²(1+r)³ + 16r²(1+r)(1+r²)],
/// evaluated as −(P(r) + Q(r)(1 + r − 2λr)).
pub fn psi_partial_lambda(lambda: f64, r: f64) -> f64 {
    -(psi_convex_part(r) + psi_koebe_part(r) * (1.0 + r - 2.0 * lambda * r))
}

/// The cubic 3r³ − 5r² − 3r + 1 whose unique root in (0, 1) is r*.
pub fn rstar_cubic(r: f64) -> f64 {
    ((3.0 * r - 5.0) * r - 3.0) * r + 1.0
}

/// The degree-7 polynomial (1−6r+r²)(1−r)²(1+r)³ − 16r²(1+r²) whose unique
/// root in (0, 1) is the univalent radius r_g. Equals Ψ(1, r).
pub fn rg_poly(r: f64) -> f64 {
    psi_convex_part(r) - psi_koebe_part(r)
}

/// A(x) = −p − (2−p)x² + 2x^{2−p}: sign factor of dφ/dx for the p-family
/// radius φ(x) = (1−x^p)/(2−x²−x^p). Nonpositive on [0, 1] for 0 < p ≤ 2,
/// which is what makes the p-family radius nonincreasing.
pub fn p_family_monotonicity_factor(x: f64, p: f64) -> f64 {
    -p - (2.0 - p) * x * x + 2.0 * x.powf(2.0 - p)
}

/// A solved radius with its certificate: final bracket, residual, and
/// iteration count.
#[derive(Clone, Debug)]
pub struct RadiusResult {
    pub name: &'static str,
    pub value: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub residual: f64,
    pub iterations: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RadiusError {
    /// Argument outside the operation's stated range.
    Domain { what: &'static str, value: f64 },
    /// The function does not change sign across the requested bracket.
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
}

impl fmt::Display for RadiusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadiusError::Domain { what, value } => {
                write!(f, "argument out of domain: {} = {}", what, value)
            }
            RadiusError::Bracket { lo, hi, f_lo, f_hi } => write!(
                f,
                "no sign change on [{}, {}]: f(lo) = {}, f(hi) = {}",
                lo, hi, f_lo, f_hi
            ),
        }
    }
}

impl std::error::Error for RadiusError {}

/// Bracketing bisection; runs until the bracket width is at most `tol` (or
/// the width bottoms out at adjacent floats, capped at 200 halvings).
fn bisect(
    name: &'static str,
    f: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> Result<RadiusResult, RadiusError> {
    if !(tol > 0.0) {
        return Err(RadiusError::Domain { what: "tol", value: tol });
    }
    let f_lo = f(lo);
    let f_hi = f(hi);
    if !(f_lo * f_hi < 0.0) {
        return Err(RadiusError::Bracket { lo, hi, f_lo, f_hi });
    }
    let mut iterations = 0u32;
    while hi - lo > tol && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        if f(lo) * f(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        iterations += 1;
    }
    let value = 0.5 * (lo + hi);
    Ok(RadiusResult {
        name,
        value,
        bracket_lo: lo,
        bracket_hi: hi,
        residual: f(value),
        iterations,
    })
}

/// The classical Bohr radius, exactly 1/3.
pub fn classical_bohr_radius() -> f64 {
    1.0 / 3.0
}

/// Radius 1/(2 + a0) of the refined inequality for bounded functions with
/// |f(0)| = a0.
pub fn refined_radius(a0: f64) -> Result<f64, RadiusError> {
    if !(0.0..1.0).contains(&a0) {
        return Err(RadiusError::Domain { what: "a0", value: a0 });
    }
    Ok(1.0 / (2.0 + a0))
}

/// Radius (1 − a0^p)/(2 − a0² − a0^p) of the p-th power variant; reduces to
/// 1/(2 + a0) at p = 1 and to 1/2 at p = 2.
pub fn p_family_radius(a0: f64, p: f64) -> Result<f64, RadiusError> {
    if !(0.0..1.0).contains(&a0) {
        return Err(RadiusError::Domain { what: "a0", value: a0 });
    }
    if !(p > 0.0 && p <= 2.0) {
        return Err(RadiusError::Domain { what: "p", value: p });
    }
    let ap = a0.powf(p);
    Ok((1.0 - ap) / (2.0 - a0 * a0 - ap))
}

/// r* as the bisection root of 3r³ − 5r² − 3r + 1 on [0.2, 0.3].
pub fn rstar_bisect(tol: f64) -> Result<RadiusResult, RadiusError> {
    bisect("rstar", rstar_cubic, 0.2, 0.3, tol)
}

/// r* from the trigonometric closed form of the cubic's real root:
/// 5/9 − (2/9)√13 cos((1/3) arctan(9√303/103))
///     + (2/3)√(13/3) sin((1/3) arctan(9√303/103)).
pub fn rstar_cardano() -> f64 {
    let angle = (9.0 * 303.0f64.sqrt() / 103.0).atan() / 3.0;
    5.0 / 9.0 - (2.0 / 9.0) * 13.0f64.sqrt() * angle.cos()
        + (2.0 / 3.0) * (13.0f64 / 3.0).sqrt() * angle.sin()
}

/// Root r0(λ) of Φ(λ, ·) on [r*, 1/3]: the radius up to which the refined
/// half-plane functional stays at or below one when the distance parameter
/// is λ = 1 − a0. Decreasing in λ: r0 → 1/3 as λ → 0 and r0 → r* as λ → 1.
pub fn solve_r0(lambda: f64, tol: f64) -> Result<RadiusResult, RadiusError> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(RadiusError::Domain { what: "lambda", value: lambda });
    }
    bisect("r0", |r| phi_poly(lambda, r), rstar_cardano(), 1.0 / 3.0, tol)
}

/// The unique λ ∈ (0, 1) with Φ(λ, r) = 0, for r* < r < 1/3.
///
/// Φ is an upward parabola in λ with Φ(0, r) > 0 and Φ(1, r) < 0 on this
/// interval, so the smaller quadratic root is the one inside (0, 1); it is
/// computed in the rationalized form 2c/(b + √(b² − 4ac)) to avoid
/// cancellation, and the larger root is asserted to lie outside.
pub fn lambda_of_r(r: f64) -> Result<f64, RadiusError> {
    let rstar = rstar_cardano();
    if !(r > rstar && r < 1.0 / 3.0) {
        return Err(RadiusError::Domain { what: "r", value: r });
    }
    let r2 = r * r;
    let r3 = r2 * r;
    let a = 4.0 * r3;
    let b = 7.0 * r3 + 3.0 * r2 - 3.0 * r + 1.0; // = -(linear coefficient)
    let c = 6.0 * r3 - 2.0 * r2 - 6.0 * r + 2.0;
    let disc = b * b - 4.0 * a * c;
    debug_assert!(disc > 0.0);
    let sqrt_disc = disc.sqrt();
    let small = 2.0 * c / (b + sqrt_disc);
    let large = (b + sqrt_disc) / (2.0 * a);
    debug_assert!(
        large > 1.0,
        "companion root {} should lie outside (0,1) for r = {}",
        large,
        r
    );
    debug_assert!(small > 0.0 && small < 1.0);
    Ok(small)
}

/// Univalent radius r_g as the bisection root of the degree-7 polynomial on
/// [0.1, 0.15].
pub fn solve_rg(tol: f64) -> Result<RadiusResult, RadiusError> {
    bisect("rg", rg_poly, 0.1, 0.15, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference roots computed independently with 50-digit bisection.
    const RSTAR: f64 = 0.246_829_826_210_458_5;
    const RG: f64 = 0.128_445_081_600_688_47;
    const R0_HALF: f64 = 0.287_522_317_987_740_6;
    const LAMBDA_AT_03: f64 = 0.349_131_322_914_329_64;

    const TOL: f64 = 1e-12;

    #[test]
    fn classical_radius_is_one_third() {
        assert_eq!(classical_bohr_radius(), 1.0 / 3.0);
    }

    #[test]
    fn classical_radius_is_p_family_limit_at_p_one() {
        // inf over a0 of the p = 1 radius is attained as a0 -> 1.
        let near_limit = p_family_radius(1.0 - 1e-9, 1.0).unwrap();
        assert!((near_limit - classical_bohr_radius()).abs() < 1e-9);
    }

    #[test]
    fn refined_radius_values_and_domain() {
        assert_eq!(refined_radius(0.0).unwrap(), 0.5);
        assert_eq!(refined_radius(0.5).unwrap(), 0.4);
        assert!((refined_radius(1.0 - 1e-12).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert!(refined_radius(1.0).is_err());
        assert!(refined_radius(-0.1).is_err());
    }

    #[test]
    fn p_family_reduces_to_refined_at_p_one() {
        for i in 0..50 {
            let a0 = i as f64 / 50.0;
            let lhs = p_family_radius(a0, 1.0).unwrap();
            let rhs = refined_radius(a0).unwrap();
            assert!((lhs - rhs).abs() < 1e-14, "a0 = {}", a0);
        }
    }

    #[test]
    fn p_family_at_origin_is_one_half() {
        for &p in &[0.5, 1.0, 1.5, 2.0] {
            assert_eq!(p_family_radius(0.0, p).unwrap(), 0.5);
        }
    }

    #[test]
    fn p_family_grid_infimum_approaches_limit() {
        // At a0 = 0.99 the p = 1.5 radius is within 2e-2 of 1.5/3.5.
        let inf = (1..=99)
            .map(|i| p_family_radius(i as f64 / 100.0, 1.5).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert!((inf - 1.5 / 3.5).abs() < 2e-2, "inf = {}", inf);
    }

    #[test]
    fn p_family_rejects_out_of_range() {
        assert!(p_family_radius(0.5, 0.0).is_err());
        assert!(p_family_radius(0.5, 2.1).is_err());
        assert!(p_family_radius(1.0, 1.0).is_err());
    }

    #[test]
    fn p_family_monotonicity_factor_is_nonpositive() {
        for &p in &[0.5, 1.0, 1.5, 2.0] {
            for i in 0..=1000 {
                let x = i as f64 / 1000.0;
                let a = p_family_monotonicity_factor(x, p);
                assert!(a <= 1e-14, "A({}) = {} at p = {}", x, a, p);
            }
            assert!(p_family_monotonicity_factor(1.0, p).abs() < 1e-14);
        }
    }

    #[test]
    fn p_family_radius_nonincreasing_in_a0() {
        for &p in &[0.5, 1.0, 1.5, 2.0] {
            let mut prev = p_family_radius(0.0, p).unwrap();
            for i in 1..=100 {
                let cur = p_family_radius(i as f64 / 101.0, p).unwrap();
                assert!(cur <= prev + 1e-14);
                prev = cur;
            }
        }
    }

    #[test]
    fn rstar_bracket_endpoint_signs() {
        assert!(rstar_cubic(0.0) > 0.0);
        assert!(rstar_cubic(0.2) > 0.0);
        assert!(rstar_cubic(0.3) < 0.0);
        assert!(rstar_cubic(1.0 / 3.0) < 0.0);
    }

    #[test]
    fn rstar_bisect_matches_reference() {
        let r = rstar_bisect(TOL).unwrap();
        assert!((r.value - RSTAR).abs() < 5e-6);
        assert!((r.value - 0.24683).abs() < 5e-6);
        assert!(r.residual.abs() < 1e-11);
        assert!(r.bracket_lo < r.value && r.value < r.bracket_hi);
        assert!(r.bracket_hi - r.bracket_lo <= TOL);
    }

    #[test]
    fn rstar_cardano_matches_cubic_and_bisection() {
        let closed = rstar_cardano();
        assert!(rstar_cubic(closed).abs() <= 1e-14);
        assert!(closed > 0.2 && closed < 0.3);
        let bisected = rstar_bisect(TOL).unwrap().value;
        assert!((closed - bisected).abs() < 1e-12);
        assert!((closed - RSTAR).abs() < 1e-15);
    }

    #[test]
    fn solve_r0_golden_value() {
        let r = solve_r0(0.5, TOL).unwrap();
        assert!((r.value - R0_HALF).abs() < 1e-12);
        assert!(r.value > RSTAR && r.value < 1.0 / 3.0);
    }

    #[test]
    fn solve_r0_endpoint_limits() {
        assert!((solve_r0(0.001, TOL).unwrap().value - 1.0 / 3.0).abs() < 1e-3);
        assert!((solve_r0(0.999, TOL).unwrap().value - RSTAR).abs() < 1e-3);
    }

    #[test]
    fn solve_r0_strictly_decreasing() {
        let mut prev = f64::INFINITY;
        for i in 1..=50 {
            let lambda = i as f64 / 51.0;
            let value = solve_r0(lambda, TOL).unwrap().value;
            assert!(value < prev, "r0 not decreasing at lambda = {}", lambda);
            assert!(value > RSTAR - TOL && value < 1.0 / 3.0 + TOL);
            prev = value;
        }
    }

    #[test]
    fn solve_r0_rejects_out_of_range() {
        assert!(solve_r0(0.0, TOL).is_err());
        assert!(solve_r0(1.0, TOL).is_err());
    }

    #[test]
    fn lambda_of_r_endpoints_and_round_trip() {
        assert!(lambda_of_r(0.333).unwrap() < 0.02);
        assert!(lambda_of_r(0.2469).unwrap() > 0.99);
        // Inverse consistency with the radius solver.
        let lambda = lambda_of_r(0.3).unwrap();
        assert!((lambda - LAMBDA_AT_03).abs() < 1e-13);
        let back = solve_r0(lambda, TOL).unwrap().value;
        assert!((back - 0.3).abs() < 1e-9);
    }

    #[test]
    fn lambda_of_r_rejects_outside_interval() {
        assert!(lambda_of_r(0.2).is_err());
        assert!(lambda_of_r(1.0 / 3.0).is_err());
    }

    #[test]
    fn rg_bracket_endpoint_signs() {
        assert_eq!(rg_poly(0.0), 1.0);
        assert!(rg_poly(0.1) > 0.0);
        assert!(rg_poly(0.15) < 0.0);
    }

    #[test]
    fn solve_rg_matches_reference() {
        let r = solve_rg(TOL).unwrap();
        assert!((r.value - 0.128445).abs() < 5e-7);
        assert!((r.value - RG).abs() < 1e-12);
        assert!(psi_poly(1.0, r.value).abs() < 1e-11);
    }

    #[test]
    fn residuals_bounded_by_derivative_times_tolerance() {
        // |residual| <= 10 * tol * |derivative near the root|.
        let h = 1e-6;
        let r = rstar_bisect(TOL).unwrap();
        let deriv = (rstar_cubic(r.value + h) - rstar_cubic(r.value - h)) / (2.0 * h);
        assert!(r.residual.abs() <= 10.0 * TOL * deriv.abs());

        let g = solve_rg(TOL).unwrap();
        let deriv = (rg_poly(g.value + h) - rg_poly(g.value - h)) / (2.0 * h);
        assert!(g.residual.abs() <= 10.0 * TOL * deriv.abs());

        for &lambda in &[0.1, 0.5, 0.9] {
            let root = solve_r0(lambda, TOL).unwrap();
            let deriv =
                (phi_poly(lambda, root.value + h) - phi_poly(lambda, root.value - h)) / (2.0 * h);
            assert!(root.residual.abs() <= 10.0 * TOL * deriv.abs(), "lambda {}", lambda);
        }
    }

    #[test]
    fn bisect_rejects_invalid_input() {
        assert!(matches!(
            bisect("bad", |x| x * x + 1.0, 0.0, 1.0, TOL),
            Err(RadiusError::Bracket { .. })
        ));
        assert!(matches!(
            rstar_bisect(0.0),
            Err(RadiusError::Domain { what: "tol", .. })
        ));
    }

    #[test]
    fn phi_identity_at_lambda_zero() {
        for i in 0..=1000 {
            let r = i as f64 / 1001.0;
            let factored = 2.0 * (1.0 - 3.0 * r) * (1.0 - r * r);
            assert!((phi_poly(0.0, r) - factored).abs() <= 1e-14, "r = {}", r);
        }
    }

    #[test]
    fn phi_identity_at_lambda_one() {
        for i in 0..=1000 {
            let r = i as f64 / 1001.0;
            assert!((phi_poly(1.0, r) - rstar_cubic(r)).abs() <= 1e-14, "r = {}", r);
        }
    }

    #[test]
    fn phi_partial_identity_at_lambda_one() {
        for i in 0..=1000 {
            let r = i as f64 / 1001.0;
            let cube = -(1.0 - r) * (1.0 - r) * (1.0 - r);
            assert!((phi_partial_lambda(1.0, r) - cube).abs() <= 1e-14, "r = {}", r);
        }
    }

    #[test]
    fn phi_partial_negative_and_dominated_by_lambda_one_section() {
        // dPhi/dlambda increases in lambda, topping out at -(1-r)^3 < 0.
        for i in 1..50 {
            let r = i as f64 / 50.0;
            let at_one = phi_partial_lambda(1.0, r);
            assert!(at_one < 0.0);
            for j in 1..=10 {
                let lambda = j as f64 / 10.0;
                assert!(phi_partial_lambda(lambda, r) <= at_one + 1e-15);
            }
        }
    }

    #[test]
    fn psi_identity_at_lambda_one() {
        for i in 0..=1000 {
            let r = i as f64 / 1001.0;
            assert!((psi_poly(1.0, r) - rg_poly(r)).abs() <= 1e-14, "r = {}", r);
        }
    }

    #[test]
    fn psi_partial_factorization() {
        // -(1-r)[r^5(1-r) + r^2 + 27 r^4 + 3 r^5 + (2r-1)^2]
        for i in 0..=1000 {
            let r: f64 = i as f64 / 1001.0;
            let bracket = r.powi(5) * (1.0 - r)
                + r * r
                + 27.0 * r.powi(4)
                + 3.0 * r.powi(5)
                + (2.0 * r - 1.0) * (2.0 * r - 1.0);
            let factored = -(1.0 - r) * bracket;
            assert!(
                (psi_partial_lambda(1.0, r) - factored).abs() <= 1e-14,
                "r = {}",
                r
            );
        }
    }

    #[test]
    fn psi_matches_literally_expanded_form() {
        // The fully expanded arrangement of the same polynomial, term by term.
        let expanded = |lambda: f64, r: f64| {
            let p = (1.0 - 6.0 * r + r * r) * (1.0 - r) * (1.0 - r) * (1.0 + r).powi(3);
            16.0 * lambda * lambda * r.powi(3) * (1.0 + r * r)
                - lambda * (p + 16.0 * r * r * (1.0 + r) * (1.0 + r * r))
                + 2.0 * p
        };
        let mut stream = crate::functions::ParamStream::new(11);
        for _ in 0..500 {
            let lambda = stream.next_unit();
            let r = stream.next_unit();
            assert!((psi_poly(lambda, r) - expanded(lambda, r)).abs() <= 5e-14);
        }
    }

    #[test]
    fn partials_match_central_differences() {
        let h = 1e-5;
        let fd_phi = (phi_poly(0.4 + h, 0.28) - phi_poly(0.4 - h, 0.28)) / (2.0 * h);
        assert!((fd_phi - phi_partial_lambda(0.4, 0.28)).abs() < 1e-7);
        let fd_psi = (psi_poly(0.4 + h, 0.28) - psi_poly(0.4 - h, 0.28)) / (2.0 * h);
        assert!((fd_psi - psi_partial_lambda(0.4, 0.28)).abs() < 1e-7);
    }

    #[test]
    fn bivariate_poly_tags_dispatch() {
        assert_eq!(BivariatePoly::Phi.eval(0.3, 0.25), phi_poly(0.3, 0.25));
        assert_eq!(BivariatePoly::Psi.eval(0.3, 0.25), psi_poly(0.3, 0.25));
        assert_eq!(
            BivariatePoly::Phi.partial_lambda(0.3, 0.25),
            phi_partial_lambda(0.3, 0.25)
        );
        assert_eq!(
            BivariatePoly::Psi.partial_lambda(0.3, 0.25),
            psi_partial_lambda(0.3, 0.25)
        );
    }
}
