//! Constructors for the canonical analytic functions of the unit disk and
//! seeded generators of Schwarz-type and unit-bounded functions.
//!
//! The canonical families are assembled coefficient by coefficient from
//! their closed forms, so the stored growth metadata is exact rather than
//! estimated. The random generators build finite products of real-parameter
//! disk automorphisms (a − z)/(1 − az): these have unit modulus on the
//! boundary circle, which yields the |a_n| ≤ 1 coefficient bound for free
//! while still exercising non-trivial coefficient interplay.

use std::fmt;

use num_complex::Complex64;

use crate::series::{GrowthClass, SeriesError, TruncatedSeries};

/// Tolerance used when asserting an analytic growth class on coefficients
/// produced by series arithmetic; covers convolution round-off at order 512
/// with three orders of magnitude to spare.
const GROWTH_CHECK_TOL: f64 = 1e-9;

/// Tags for the closed-form families used as witnesses and worst cases.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CanonicalFamily {
    /// Disk automorphism (a − z)/(1 − az) with 0 < a < 1.
    MoebiusPhiA(f64),
    /// Univalent map onto the half plane Re w < 1 with value a0 at 0.
    HalfPlane(f64),
    /// z/(1−z)², coefficients n.
    Koebe,
    IdentityZ,
    Constant(f64),
}

impl fmt::Display for CanonicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalFamily::MoebiusPhiA(a) => write!(f, "moebius_phi_a({})", a),
            CanonicalFamily::HalfPlane(a0) => write!(f, "half_plane({})", a0),
            CanonicalFamily::Koebe => write!(f, "koebe"),
            CanonicalFamily::IdentityZ => write!(f, "identity_z"),
            CanonicalFamily::Constant(c) => write!(f, "constant({})", c),
        }
    }
}

/// φ_a(z) = (a − z)/(1 − az) = a − (1 − a²) Σ_{k≥1} a^{k−1} z^k.
///
/// The tail is exactly geometric, so downstream bounds are equalities.
pub fn moebius_phi_a(a: f64, order: usize) -> Result<TruncatedSeries, SeriesError> {
    if !(a > 0.0 && a < 1.0) {
        return Err(SeriesError::Domain { what: "a", value: a });
    }
    let scale = 1.0 - a * a;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(a, 0.0));
    for k in 1..=order {
        // Same expression as the growth check, so the exact-geometric claim
        // holds bitwise.
        coeffs.push(Complex64::new(-scale * a.powi(k as i32 - 1), 0.0));
    }
    TruncatedSeries::new(coeffs, GrowthClass::ExactGeometric { base: a, scale }, 0.0)
}

/// g(z) = a0 − 2(1 − a0) z/(1 − z): coefficients b_0 = a0, b_n = −2(1 − a0)
/// for n ≥ 1. Maps the disk univalently onto the half plane Re w < 1.
pub fn half_plane_map(a0: f64, order: usize) -> Result<TruncatedSeries, SeriesError> {
    if !(a0 > 0.0 && a0 < 1.0) {
        return Err(SeriesError::Domain { what: "a0", value: a0 });
    }
    let b = -2.0 * (1.0 - a0);
    let mut coeffs = vec![Complex64::new(b, 0.0); order + 1];
    coeffs[0] = Complex64::new(a0, 0.0);
    TruncatedSeries::new(coeffs, GrowthClass::BoundedBy(-b), 0.0)
}

/// The Koebe function z/(1−z)²: coefficients 0, 1, 2, …, n.
pub fn koebe(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order).map(|n| Complex64::new(n as f64, 0.0)).collect();
    TruncatedSeries::new(coeffs, GrowthClass::LinearBy(1.0), 0.0)
        .expect("koebe coefficients satisfy their own growth class")
}

/// Deterministic 64-bit stream (SplitMix64). Local so that frozen test
/// values survive dependency upgrades.
pub(crate) struct ParamStream(u64);

impl ParamStream {
    pub(crate) fn new(seed: u64) -> Self {
        Self(seed)
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Fresh sub-seed for a derived generator.
    pub(crate) fn next_seed(&mut self) -> u64 {
        self.next_u64()
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub(crate) fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Blaschke parameter in (0.1, 0.9); the clipped range avoids factors
    /// that are numerically near-identity or near-constant.
    pub(crate) fn next_blaschke_param(&mut self) -> f64 {
        0.1 + 0.8 * self.next_unit()
    }

    pub(crate) fn next_usize(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        lo + (self.next_u64() % (hi_inclusive - lo + 1) as u64) as usize
    }
}

/// Product of `depth` disk automorphisms with parameters drawn from the
/// seed; |Φ(z)| ≤ 1 on the disk, hence every coefficient modulus is ≤ 1.
/// Reproducible: the same seed yields identical coefficients.
pub fn random_unit_bounded(seed: u64, order: usize, depth: usize) -> TruncatedSeries {
    let mut stream = ParamStream::new(seed);
    let mut product = TruncatedSeries::one(order);
    for _ in 0..depth {
        let a = stream.next_blaschke_param();
        let factor = moebius_phi_a(a, order).expect("parameter drawn inside (0,1)");
        product = product.multiply(&factor);
    }
    product
        .with_growth(GrowthClass::BoundedBy(1.0), GROWTH_CHECK_TOL)
        .expect("unit-bounded product has coefficients of modulus at most 1")
}

/// Schwarz function ω(z) = z · Π_{i=1}^{depth} (a_i − z)/(1 − a_i z):
/// ω(0) = 0 and |ω(z)| ≤ |z| ≤ 1 on the disk. Depth 0 gives the identity.
pub fn random_schwarz(seed: u64, order: usize, depth: usize) -> TruncatedSeries {
    assert!(order >= 1, "a Schwarz function needs order >= 1");
    let product = random_unit_bounded(seed, order, depth);
    TruncatedSeries::identity(order)
        .multiply(&product)
        .with_growth(GrowthClass::BoundedBy(1.0), GROWTH_CHECK_TOL)
        .expect("Schwarz product has coefficients of modulus at most 1")
}
