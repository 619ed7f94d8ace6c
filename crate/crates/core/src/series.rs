//! Truncated Taylor series over complex coefficients.
//!
//! A [`TruncatedSeries`] stores the coefficients a_0..a_N of an analytic
//! function on the unit disk together with a [`GrowthClass`] describing how
//! the coefficients beyond the truncation order behave. The growth metadata
//! is what turns partial sums into certified enclosures: every tail bound
//! produced downstream is derived from the asserted class, never guessed.
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so series can be shared freely across threads.

use std::fmt;

use num_complex::Complex64;

/// Default truncation order. Geometric tails at r ≤ 1/3 fall below 1e−25 at
/// this order, far under any comparison tolerance used by the test suites.
pub const DEFAULT_ORDER: usize = 64;

/// Asserted behaviour of the coefficients beyond the truncation order.
///
/// Claims constrain coefficients with index n ≥ 1; the constant term is
/// always stored explicitly and never enters a tail. The checked
/// constructors verify each claim against the stored coefficients, so an
/// inconsistent assertion is rejected instead of producing an unsound bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GrowthClass {
    /// |a_n| ≤ C for all n ≥ 1.
    BoundedBy(f64),
    /// |a_n| ≤ C·n for all n ≥ 1.
    LinearBy(f64),
    /// |a_n| = scale·base^(n−1) for all n ≥ 1 (disk-automorphism tails).
    ExactGeometric { base: f64, scale: f64 },
    /// No tail information; downstream reports carry an infinite tail flag.
    Unknown,
}

impl GrowthClass {
    fn params_valid(&self) -> bool {
        match *self {
            GrowthClass::BoundedBy(c) | GrowthClass::LinearBy(c) => c.is_finite() && c >= 0.0,
            GrowthClass::ExactGeometric { base, scale } => {
                base.is_finite() && (0.0..1.0).contains(&base) && scale.is_finite() && scale >= 0.0
            }
            GrowthClass::Unknown => true,
        }
    }

    /// Checks the claim against stored coefficients at indices 1..=N.
    fn check(&self, coeffs: &[Complex64], tol: f64) -> Result<(), SeriesError> {
        for (n, c) in coeffs.iter().enumerate().skip(1) {
            let actual = c.norm();
            let violation = match *self {
                GrowthClass::BoundedBy(bound) => actual > bound + tol,
                GrowthClass::LinearBy(slope) => actual > slope * n as f64 + tol,
                GrowthClass::ExactGeometric { base, scale } => {
                    (actual - scale * base.powi(n as i32 - 1)).abs() > tol
                }
                GrowthClass::Unknown => false,
            };
            if violation {
                return Err(SeriesError::GrowthInconsistent { index: n, actual });
            }
        }
        Ok(())
    }

    fn scaled(self, k: f64) -> GrowthClass {
        let k = k.abs();
        match self {
            GrowthClass::BoundedBy(c) => GrowthClass::BoundedBy(k * c),
            GrowthClass::LinearBy(c) => GrowthClass::LinearBy(k * c),
            GrowthClass::ExactGeometric { base, scale } => GrowthClass::ExactGeometric {
                base,
                scale: k * scale,
            },
            GrowthClass::Unknown => GrowthClass::Unknown,
        }
    }

    /// Combination rule under coefficientwise addition. Only same-kind
    /// bounds combine (triangle inequality); everything else degrades to
    /// `Unknown` so a result never claims unearned precision.
    fn combine_add(self, other: GrowthClass) -> GrowthClass {
        match (self, other) {
            (GrowthClass::BoundedBy(a), GrowthClass::BoundedBy(b)) => GrowthClass::BoundedBy(a + b),
            (GrowthClass::LinearBy(a), GrowthClass::LinearBy(b)) => GrowthClass::LinearBy(a + b),
            _ => GrowthClass::Unknown,
        }
    }

    /// Upper bound on Σ_{n>N} |a_n| rⁿ for 0 ≤ r < 1.
    pub fn majorant_tail(&self, r: f64, order: usize) -> f64 {
        if r == 0.0 {
            return 0.0;
        }
        let m = order as f64 + 1.0;
        match *self {
            GrowthClass::BoundedBy(c) => c * r.powf(m) / (1.0 - r),
            GrowthClass::LinearBy(c) => {
                c * r.powf(m) * (m * (1.0 - r) + r) / ((1.0 - r) * (1.0 - r))
            }
            GrowthClass::ExactGeometric { base, scale } => {
                scale * base.powi(order as i32) * r.powf(m) / (1.0 - base * r)
            }
            GrowthClass::Unknown => f64::INFINITY,
        }
    }

    /// Upper bound on Σ_{n>N} |a_n|² r^{2n} for 0 ≤ r < 1.
    pub fn norm_sq_tail(&self, r: f64, order: usize) -> f64 {
        if r == 0.0 {
            return 0.0;
        }
        let x = r * r;
        let m = order as f64 + 1.0;
        match *self {
            GrowthClass::BoundedBy(c) => c * c * x.powf(m) / (1.0 - x),
            GrowthClass::LinearBy(c) => {
                // Σ_{n≥M} n² xⁿ = x^M [M² − (2M²−2M−1)x + (M−1)²x²] / (1−x)³
                let poly = m * m - (2.0 * m * m - 2.0 * m - 1.0) * x + (m - 1.0) * (m - 1.0) * x * x;
                c * c * x.powf(m) * poly / ((1.0 - x) * (1.0 - x) * (1.0 - x))
            }
            GrowthClass::ExactGeometric { base, scale } => {
                scale * scale * base.powi(2 * order as i32) * x.powf(m) / (1.0 - base * base * x)
            }
            GrowthClass::Unknown => f64::INFINITY,
        }
    }
}

/// Errors raised by series construction and the partial operations.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesError {
    /// A series needs at least the constant term.
    EmptyCoefficients,
    /// NaN or infinity in a stored coefficient.
    NonFiniteCoefficient { index: usize },
    /// A growth claim disagrees with a stored coefficient.
    GrowthInconsistent { index: usize, actual: f64 },
    /// Growth parameters outside their stated ranges.
    InvalidGrowthParameters,
    /// Inner series of a composition must fix the origin.
    NonVanishingConstantTerm { magnitude: f64 },
    /// Argument outside the operation's domain.
    Domain { what: &'static str, value: f64 },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::EmptyCoefficients => write!(f, "series must carry at least one coefficient"),
            SeriesError::NonFiniteCoefficient { index } => {
                write!(f, "coefficient {} is not finite", index)
            }
            SeriesError::GrowthInconsistent { index, actual } => write!(
                f,
                "growth class inconsistent with stored coefficient {} (|a_n| = {})",
                index, actual
            ),
            SeriesError::InvalidGrowthParameters => write!(f, "growth parameters out of range"),
            SeriesError::NonVanishingConstantTerm { magnitude } => write!(
                f,
                "inner series must vanish at the origin (|w(0)| = {})",
                magnitude
            ),
            SeriesError::Domain { what, value } => {
                write!(f, "argument out of domain: {} = {}", what, value)
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// Finitely many Taylor coefficients plus a tail-growth descriptor.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
    growth: GrowthClass,
}

impl TruncatedSeries {
    /// Checked constructor. Rejects empty or non-finite coefficient lists,
    /// invalid growth parameters, and growth claims that disagree with the
    /// stored coefficients by more than `growth_tol`.
    pub fn new(
        coeffs: Vec<Complex64>,
        growth: GrowthClass,
        growth_tol: f64,
    ) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptyCoefficients);
        }
        if let Some(index) = coeffs.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(SeriesError::NonFiniteCoefficient { index });
        }
        if !growth.params_valid() {
            return Err(SeriesError::InvalidGrowthParameters);
        }
        growth.check(&coeffs, growth_tol)?;
        Ok(Self { coeffs, growth })
    }

    /// Checked constructor from real coefficients.
    pub fn from_real(
        coeffs: &[f64],
        growth: GrowthClass,
        growth_tol: f64,
    ) -> Result<Self, SeriesError> {
        Self::new(
            coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            growth,
            growth_tol,
        )
    }

    /// Internal constructor for derived results whose growth metadata is
    /// conservative by construction.
    pub(crate) fn from_parts(coeffs: Vec<Complex64>, growth: GrowthClass) -> Self {
        debug_assert!(!coeffs.is_empty());
        debug_assert!(coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite()));
        Self { coeffs, growth }
    }

    /// The zero series of the given order. Exact polynomial: zero tail.
    pub fn zero(order: usize) -> Self {
        Self::from_parts(vec![Complex64::ZERO; order + 1], GrowthClass::BoundedBy(0.0))
    }

    /// The constant-one series of the given order.
    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    /// A constant series. Exact polynomial: zero tail.
    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[0] = c;
        Self::from_parts(coeffs, GrowthClass::BoundedBy(0.0))
    }

    /// The identity map z. Requires order ≥ 1.
    pub fn identity(order: usize) -> Self {
        assert!(order >= 1, "identity series needs order >= 1");
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[1] = Complex64::new(1.0, 0.0);
        Self::from_parts(coeffs, GrowthClass::BoundedBy(0.0))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient a_n. Panics if n exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs[n]
    }

    pub fn constant_term(&self) -> Complex64 {
        self.coeffs[0]
    }

    pub fn growth(&self) -> GrowthClass {
        self.growth
    }

    /// Re-tags the series with a growth class the caller asserts on analytic
    /// grounds. The claim is still checked against the stored coefficients.
    pub fn with_growth(self, growth: GrowthClass, growth_tol: f64) -> Result<Self, SeriesError> {
        Self::new(self.coeffs, growth, growth_tol)
    }

    fn truncated(&self, order: usize) -> Self {
        if order >= self.order() {
            return self.clone();
        }
        Self::from_parts(self.coeffs[..=order].to_vec(), self.growth)
    }

    /// Coefficientwise sum to order min(self.order, other.order).
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|n| self.coeffs[n] + other.coeffs[n]).collect();
        Self::from_parts(coeffs, self.growth.combine_add(other.growth))
    }

    /// Cauchy product truncated at min(self.order, other.order).
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = cauchy_truncated(&self.coeffs, &other.coeffs, order + 1);
        Self::from_parts(coeffs, GrowthClass::Unknown)
    }

    /// Multiplies every coefficient by a real scalar; growth scales with it.
    pub fn scale(&self, k: f64) -> Self {
        assert!(k.is_finite());
        let coeffs = self.coeffs.iter().map(|&c| c * k).collect();
        Self::from_parts(coeffs, self.growth.scaled(k))
    }

    /// Taylor coefficients of self(inner(z)) to order min of the two orders,
    /// by Horner accumulation with every partial product truncated at the
    /// output order. The inner series must fix the origin.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        let w0 = inner.coeffs[0].norm();
        if w0 > 0.0 {
            return Err(SeriesError::NonVanishingConstantTerm { magnitude: w0 });
        }
        let order = self.order().min(inner.order());
        let w = inner.truncated(order);
        let len = order + 1;
        let mut acc = vec![Complex64::ZERO; len];
        acc[0] = self.coeffs[order];
        for k in (0..order).rev() {
            acc = cauchy_truncated(&acc, &w.coeffs, len);
            acc[0] += self.coeffs[k];
        }
        Ok(Self::from_parts(acc, GrowthClass::Unknown))
    }

    /// Horner evaluation of the partial sum Σ_{n≤N} a_n zⁿ. Requires |z| < 1.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64, SeriesError> {
        if !(z.norm() < 1.0) {
            return Err(SeriesError::Domain {
                what: "|z|",
                value: z.norm(),
            });
        }
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        Ok(acc)
    }
}

fn cauchy_truncated(a: &[Complex64], b: &[Complex64], out_len: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::ZERO; out_len];
    for (k, &ak) in a.iter().enumerate().take(out_len) {
        if ak == Complex64::ZERO {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(out_len - k) {
            out[k + j] += ak * bj;
        }
    }
    out
}

/// Certified bound on |eval(compose(outer, inner), z) − outer(inner(z))| for
/// any z with |z| = z_abs, both sides read as exact polynomials.
///
/// The compose call truncates the polynomial composition at the output
/// order; the discarded coefficients are dominated by the coefficients of
/// the majorant composition Ĝ∘Ŵ (moduli everywhere), so the bound is the
/// majorant composition's full value minus its retained partial sum.
pub fn composition_remainder_bound(
    outer: &TruncatedSeries,
    inner: &TruncatedSeries,
    z_abs: f64,
) -> Result<f64, SeriesError> {
    if !(0.0..1.0).contains(&z_abs) {
        return Err(SeriesError::Domain {
            what: "|z|",
            value: z_abs,
        });
    }
    let outer_abs = TruncatedSeries::from_parts(
        outer.coeffs.iter().map(|c| Complex64::new(c.norm(), 0.0)).collect(),
        GrowthClass::Unknown,
    );
    let inner_abs = TruncatedSeries::from_parts(
        inner.coeffs.iter().map(|c| Complex64::new(c.norm(), 0.0)).collect(),
        GrowthClass::Unknown,
    );
    let x = Complex64::new(z_abs, 0.0);
    let rho = inner_abs.evaluate(x)?;
    // Full majorant composition value: Horner in the (nonnegative) number ρ.
    let mut total = Complex64::ZERO;
    for &c in outer_abs.coeffs.iter().rev() {
        total = total * rho + c;
    }
    let partial = outer_abs.compose(&inner_abs)?.evaluate(x)?;
    Ok((total.re - partial.re).max(0.0))
}
