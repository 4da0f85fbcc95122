//! Mean eigenvalues (normalized traces) on the maximal torus.
//!
//! Everything here is assembled from the `SU(3)` triplet character
//! χ(a,b) = a + b + (ab)⁻¹ evaluated on unit complexes a = e^{iα},
//! b = e^{iβ}, together with the branching rules of the larger groups:
//!
//! * `SU(n)`:  n·(X+iY) = z₁ + … + z_{n−1} + (z₁⋯z_{n−1})⁻¹
//! * `Spin(4n+2)`:  X+iY = ∏ cos θⱼ + i·∏ sin θⱼ over 2n+1 angles
//! * `E6`:  27 = (3,3̄,1) ⊕ (1,3,3) ⊕ (3̄,1,3̄) under SU(3)³
//! * `G2`:  7 = 1 ⊕ 3 ⊕ 3̄ under SU(3)
//! * `F4`:  26 = (8,1) ⊕ (3,3) ⊕ (3̄,3̄) under SU(3)²
//! * `E8`:  248 = (78,1) ⊕ (1,8) ⊕ (27,3) ⊕ (27̄,3̄) under E6 × SU(3)
//!
//! Characters of conjugate representations are evaluated by negating the
//! torus angles rather than by conjugating a cached value, so the two routes
//! can be cross-checked against each other.
//!
//! Angle convention for `E6` and `E8`: angles are consumed in SU(3) pairs in
//! order, so angles 1–6 feed the three SU(3) factors of the E6 branching
//! (pair 1 = angles 1,2 and so on) and, for `E8`, angles 7–8 feed the SU(3)
//! factor of the E6 × SU(3) decomposition.

use num_complex::Complex64;

use crate::{Error, GroupId, TorusPoint, TracePoint};

/// Tolerance for reality and unit-disk containment assertions. The character
/// formulas are short trigonometric sums, so double-precision error stays far
/// below this.
pub const NUMERIC_TOLERANCE: f64 = 1e-12;

fn cis(theta: f64) -> Complex64 {
    let (s, c) = theta.sin_cos();
    Complex64::new(c, s)
}

/// The `SU(3)` triplet character χ(a,b) = a + b + (ab)⁻¹ with a = e^{iα},
/// b = e^{iβ}. Total on real inputs; |χ| ≤ 3.
pub fn su3_char(alpha: f64, beta: f64) -> Complex64 {
    cis(alpha) + cis(beta) + cis(-(alpha + beta))
}

/// Octet character χ₈ = χ·χ̄ − 1, the character of 3 ⊗ 3̄ minus the singlet.
/// Real for all angles.
fn su3_octet(alpha: f64, beta: f64) -> f64 {
    (su3_char(alpha, beta) * su3_char(-alpha, -beta)).re - 1.0
}

/// Character of the 27 of `E6` from the SU(3)³ branching; angles come as
/// three consecutive pairs.
fn e6_char27(t: &[f64]) -> Complex64 {
    debug_assert_eq!(t.len(), 6);
    su3_char(t[0], t[1]) * su3_char(-t[2], -t[3])
        + su3_char(t[2], t[3]) * su3_char(t[4], t[5])
        + su3_char(-t[0], -t[1]) * su3_char(-t[4], -t[5])
}

/// Character of the adjoint 78 of `E6`: three octets plus the (3,3,3̄) pair.
/// Real up to rounding; returned as complex so the conjugate-path cross-test
/// stays possible.
fn e6_char78(t: &[f64]) -> Complex64 {
    debug_assert_eq!(t.len(), 6);
    let (a, am) = (su3_char(t[0], t[1]), su3_char(-t[0], -t[1]));
    let (b, bm) = (su3_char(t[2], t[3]), su3_char(-t[2], -t[3]));
    let (c, cm) = (su3_char(t[4], t[5]), su3_char(-t[4], -t[5]));
    let octets = (a * am).re + (b * bm).re + (c * cm).re - 3.0;
    Complex64::new(octets, 0.0) + a * b * cm + am * bm * c
}

/// Character of the adjoint 248 of `E8`; angles 1–6 feed the E6 factor,
/// angles 7–8 the SU(3) factor.
fn e8_char248(t: &[f64]) -> Complex64 {
    debug_assert_eq!(t.len(), 8);
    let e6 = &t[..6];
    let octet = su3_octet(t[6], t[7]);
    e6_char78(e6)
        + Complex64::new(octet, 0.0)
        + e6_char27(e6) * su3_char(t[6], t[7])
        + e6_char27(&[-t[0], -t[1], -t[2], -t[3], -t[4], -t[5]]) * su3_char(-t[6], -t[7])
}

/// Mean eigenvalue of the torus element `t` in the fundamental
/// representation of `group`.
///
/// The result lies in the closed unit disk (up to [`NUMERIC_TOLERANCE`]) and
/// is real, to the same tolerance, for the real-trace groups.
pub fn mean_trace(group: GroupId, t: &TorusPoint) -> Result<TracePoint, Error> {
    t.check_for(group)?;
    let a = t.angles();
    let z = match group {
        GroupId::Su(n) => {
            let mut sum = Complex64::new(0.0, 0.0);
            let mut total = 0.0;
            for &theta in a {
                sum += cis(theta);
                total += theta;
            }
            (sum + cis(-total)) / f64::from(n)
        }
        GroupId::Spin(_) => {
            let mut x = 1.0;
            let mut y = 1.0;
            for &theta in a {
                let (s, c) = theta.sin_cos();
                x *= c;
                y *= s;
            }
            Complex64::new(x, y)
        }
        GroupId::E6 => e6_char27(a) / 27.0,
        GroupId::G2 => (Complex64::new(1.0, 0.0) + su3_char(a[0], a[1]) + su3_char(-a[0], -a[1])) / 7.0,
        GroupId::F4 => {
            let (p, pm) = (su3_char(a[0], a[1]), su3_char(-a[0], -a[1]));
            let (q, qm) = (su3_char(a[2], a[3]), su3_char(-a[2], -a[3]));
            (p * pm - 1.0 + p * q + pm * qm) / 26.0
        }
        GroupId::E8 => e8_char248(a) / 248.0,
    };
    Ok(TracePoint::from(z))
}

/// Mean eigenvalue of `E8` on the diagonal of the torus, all eight unit
/// variables equal to ξ ± i√(1−ξ²):
/// X = (8ξ⁶ + 24ξ⁵ + 12ξ⁴ − 8ξ³ − 6ξ² + 1)/31.
pub fn e8_diagonal(xi: f64) -> Result<f64, Error> {
    if !(-1.0..=1.0).contains(&xi) {
        return Err(Error::OutOfDomain {
            value: xi,
            min: -1.0,
            max: 1.0,
        });
    }
    Ok(e8_diagonal_unchecked(xi))
}

pub(crate) fn e8_diagonal_unchecked(xi: f64) -> f64 {
    // Horner form of 8ξ⁶ + 24ξ⁵ + 12ξ⁴ − 8ξ³ − 6ξ² + 1.
    let p = ((((((8.0 * xi + 24.0) * xi + 12.0) * xi - 8.0) * xi - 6.0) * xi) * xi) + 1.0;
    p / 31.0
}

/// Mean eigenvalue of `F4` along its one-parameter reduced profile:
/// X = (2(2 + cos 3θ)² − 5)/13. 2π-periodic, minimum −3/13 at θ = π/3.
pub fn f4_profile(theta: f64) -> f64 {
    let c = (3.0 * theta).cos();
    (2.0 * (2.0 + c) * (2.0 + c) - 5.0) / 13.0
}
