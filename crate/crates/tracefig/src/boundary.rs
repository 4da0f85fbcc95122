//! Boundary curves of the planar trace figures: parameterization, cusps,
//! sampling, and point membership.
//!
//! The boundary of each figure splits at the cusps (the |Z(G)|-th roots of
//! unity) into congruent arcs related by rotation:
//!
//! * `SU(n)`: the hypocycloid n(X+iY) = (n−1)e^{iθ} + e^{i(1−n)θ}
//! * `Spin(4n+2)`: (X, Y) = (cos^{2n+1}θ, sin^{2n+1}θ)
//! * `E6`: X = (8ξ⁴+12ξ²+16ξ−9)/27, Y = ±(8/27)(1−ξ)²(2+ξ)√(1−ξ²),
//!   handled internally through ξ = cos φ so the arc is smooth in φ
//!
//! Membership uses the algebraic descriptions where they exist (the `SU(3)`
//! quartic, the |X|^{2/(2n+1)} + |Y|^{2/(2n+1)} ≤ 1 rule for `Spin(4n+2)`
//! and `SU(4)`) and otherwise folds the query into the fundamental sector
//! between two adjacent cusps and compares radii along the ray. The fold
//! assumes the polar angle grows monotonically along the half-arc; that is
//! an empirical fact validated by sampling when a group's cache is first
//! built, not a proven one, and [`membership_raycast`] provides an
//! independent polyline oracle to cross-check it.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;

use crate::{Error, GroupId, TracePoint};

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Membership verdict for a point of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Inside,
    Boundary,
    Outside,
}

/// Verdict plus the signed margin it was based on. The margin is positive
/// inside the figure and negative outside; `Boundary` is returned exactly
/// when |margin| does not exceed the caller's tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Membership {
    pub verdict: Verdict,
    pub margin: f64,
}

impl Membership {
    fn from_margin(margin: f64, tol: f64) -> Self {
        let verdict = if margin > tol {
            Verdict::Inside
        } else if margin < -tol {
            Verdict::Outside
        } else {
            Verdict::Boundary
        };
        Membership { verdict, margin }
    }
}

/// Branch selector for the `E6` boundary parameterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum E6Branch {
    /// Y ≥ 0 (the `+` sign).
    Upper,
    /// Y ≤ 0.
    Lower,
}

/// A sampled closed boundary polyline with its cusps.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCurve {
    pub group: GroupId,
    /// `(parameter, point)` pairs; the first and last entries coincide. The
    /// parameter is the curve angle θ for `SU(n)` and `Spin(4n+2)`; for `E6`
    /// it is the accumulated arc angle with the fundamental arc covering
    /// `[0, 2π/3]`.
    pub samples: Vec<(f64, TracePoint)>,
    pub cusps: Vec<TracePoint>,
}

/// Groups admitted by the boundary routines: planar figures plus the
/// degenerate `SU(2)` segment.
fn check_boundary_group(group: GroupId) -> Result<(), Error> {
    if group.has_planar_figure() || group == GroupId::Su(2) {
        Ok(())
    } else {
        Err(Error::UnsupportedGroup {
            group,
            reason: "real-trace group; its figure is an interval (see `bounds`)",
        })
    }
}

fn check_planar(group: GroupId) -> Result<(), Error> {
    check_boundary_group(group)
}

/// Arc span of the curve parameter between two adjacent cusps.
fn arc_span(group: GroupId) -> f64 {
    TAU / group.center_order() as f64
}

/// Point of the base arc (the one starting at the cusp 1) at local
/// parameter `u ∈ [0, arc_span]`.
fn base_point(group: GroupId, u: f64) -> TracePoint {
    match group {
        GroupId::Su(n) => su_point(n, u),
        GroupId::Spin(n) => spin_point(n, u),
        GroupId::E6 => e6_phi_point(u),
        _ => unreachable!("boundary arcs exist only for planar groups"),
    }
}

/// Position and velocity of the base arc at `u`.
pub(crate) fn base_point_velocity(group: GroupId, u: f64) -> (TracePoint, (f64, f64)) {
    match group {
        GroupId::Su(n) => {
            let nf = f64::from(n);
            let m = nf - 1.0;
            let (s1, c1) = u.sin_cos();
            let (sm, cm) = (m * u).sin_cos();
            let p = TracePoint::new((m * c1 + cm) / nf, (m * s1 - sm) / nf);
            let v = (m * (-s1 - sm) / nf, m * (c1 - cm) / nf);
            (p, v)
        }
        GroupId::Spin(n) => {
            let m = (2 * n + 1) as i32;
            let (s, c) = u.sin_cos();
            let p = TracePoint::new(c.powi(m), s.powi(m));
            let v = (
                -f64::from(m) * c.powi(m - 1) * s,
                f64::from(m) * s.powi(m - 1) * c,
            );
            (p, v)
        }
        GroupId::E6 => {
            let (s, c) = u.sin_cos();
            let p = e6_phi_point(u);
            let vx = -s * (32.0 * c * c * c + 24.0 * c + 16.0) / 27.0;
            let vy = (8.0 / 27.0) * (3.0 * s * s * s * s + (1.0 - c) * (1.0 - c) * (2.0 + c) * c);
            (p, (vx, vy))
        }
        _ => unreachable!("boundary arcs exist only for planar groups"),
    }
}

fn su_point(n: u32, theta: f64) -> TracePoint {
    let nf = f64::from(n);
    let m = nf - 1.0;
    let (s1, c1) = theta.sin_cos();
    let (sm, cm) = (m * theta).sin_cos();
    TracePoint::new((m * c1 + cm) / nf, (m * s1 - sm) / nf)
}

fn spin_point(n: u32, theta: f64) -> TracePoint {
    let m = (2 * n + 1) as i32;
    let (s, c) = theta.sin_cos();
    TracePoint::new(c.powi(m), s.powi(m))
}

/// `E6` fundamental arc through ξ = cos φ, which runs from the cusp 1 at
/// φ = 0 to the cusp e^{2πi/3} at φ = 2π/3 with Y ≥ 0 throughout.
fn e6_phi_point(phi: f64) -> TracePoint {
    let (s, c) = phi.sin_cos();
    let x = (8.0 * c * c * c * c + 12.0 * c * c + 16.0 * c - 9.0) / 27.0;
    let y = (8.0 / 27.0) * (1.0 - c) * (1.0 - c) * (2.0 + c) * s;
    TracePoint::new(x, y)
}

/// `E6` boundary point at parameter ξ ∈ [−1, 1] on the selected branch.
pub fn e6_boundary_point(xi: f64, branch: E6Branch) -> Result<TracePoint, Error> {
    if !(-1.0..=1.0).contains(&xi) {
        return Err(Error::OutOfDomain {
            value: xi,
            min: -1.0,
            max: 1.0,
        });
    }
    let x = (8.0 * xi * xi * xi * xi + 12.0 * xi * xi + 16.0 * xi - 9.0) / 27.0;
    let root = (1.0 - xi * xi).max(0.0).sqrt();
    let y = (8.0 / 27.0) * (1.0 - xi) * (1.0 - xi) * (2.0 + xi) * root;
    let y = match branch {
        E6Branch::Upper => y,
        E6Branch::Lower => -y,
    };
    Ok(TracePoint::new(x, y))
}

/// Boundary point of `group` at parameter `s`.
///
/// For `SU(n)` and `Spin(4n+2)` the parameter is the curve angle θ (the full
/// closed curve over one period 2π). For `E6` it is ξ ∈ [−1, 1] on the upper
/// branch; use [`e6_boundary_point`] to pick the branch explicitly.
pub fn boundary_point(group: GroupId, s: f64) -> Result<TracePoint, Error> {
    check_boundary_group(group)?;
    match group {
        GroupId::Su(n) => Ok(su_point(n, s)),
        GroupId::Spin(n) => Ok(spin_point(n, s)),
        GroupId::E6 => e6_boundary_point(s, E6Branch::Upper),
        _ => unreachable!(),
    }
}

/// The cusps of the figure: the |Z(G)|-th roots of unity.
pub fn cusps(group: GroupId) -> Result<Vec<TracePoint>, Error> {
    check_boundary_group(group)?;
    let k = group.center_order();
    Ok((0..k)
        .map(|j| {
            let (s, c) = (TAU * j as f64 / k as f64).sin_cos();
            TracePoint::new(c, s)
        })
        .collect())
}

/// Point of the assembled closed curve at global parameter `t ∈ [0, 2π)`,
/// with arc `j` covering `[j·span, (j+1)·span]`.
fn curve_point(group: GroupId, t: f64) -> TracePoint {
    match group {
        GroupId::Su(n) => su_point(n, t),
        GroupId::Spin(n) => spin_point(n, t),
        GroupId::E6 => {
            let span = arc_span(group);
            let j = (t / span).floor();
            let u = t - j * span;
            e6_phi_point(u).rotated(j * span)
        }
        _ => unreachable!(),
    }
}

/// Samples the closed boundary as a polyline of `count` segments.
///
/// The samples include every cusp exactly (emitted with the same coordinates
/// [`cusps`] returns), and the polyline closes: `samples[count]` equals
/// `samples[0]`, giving `count + 1` entries in total.
pub fn sample_boundary(group: GroupId, count: usize) -> Result<BoundaryCurve, Error> {
    check_boundary_group(group)?;
    let k = group.center_order();
    if count < 3 * k {
        return Err(Error::TooSmall {
            what: "boundary sample count",
            min: 3 * k,
            got: count,
        });
    }
    let cusp_points = cusps(group)?;
    let span = arc_span(group);
    let mut samples = Vec::with_capacity(count + 1);
    for j in 0..k {
        // distribute `count` segments over the k arcs as evenly as possible
        let segs = count / k + usize::from(j < count % k);
        let t0 = span * j as f64;
        samples.push((t0, cusp_points[j]));
        for i in 1..segs {
            let t = t0 + span * i as f64 / segs as f64;
            samples.push((t, curve_point(group, t)));
        }
    }
    samples.push((TAU, cusp_points[0]));
    Ok(BoundaryCurve {
        group,
        samples,
        cusps: cusp_points,
    })
}

/// Radicand of the `SU(3)` class-measure density at `Z = x + iy`:
/// 4(1 + Z³ + Z̄³) − 3(1 + Z̄Z)². Positive in the interior of the `SU(3)`
/// figure, zero on its boundary, negative outside.
pub fn weyl_radicand(p: TracePoint) -> f64 {
    let z = Complex64::from(p);
    let z3 = z * z * z;
    let zz = 1.0 + z.norm_sqr();
    4.0 * (1.0 + 2.0 * z3.re) - 3.0 * zz * zz
}

/// The `SU(3)` quartic as a scaled signed margin: positive inside.
fn su3_quartic_margin(p: TracePoint) -> f64 {
    let (x, y) = (p.x, p.y);
    let t1 = (1.0 + 3.0 * x) * (1.0 - x) * (1.0 - x) * (1.0 - x);
    let t2 = 6.0 * y * y * (1.0 + 4.0 * x + x * x);
    let t3 = 3.0 * y * y * y * y;
    let q = t1 - t2 - t3;
    // quartic scale varies across the disk; normalize so a tolerance acts
    // uniformly near the whole boundary
    let scale = 1.0_f64.max(t1.abs()).max(t2.abs()).max(t3.abs());
    q / scale
}

/// The |X|^q + |Y|^q ≤ 1 margin shared by `Spin(4n+2)` and `SU(4)`.
fn superellipse_margin(p: TracePoint, exponent_denom: f64) -> f64 {
    let q = 2.0 / exponent_denom;
    1.0 - p.x.abs().powf(q) - p.y.abs().powf(q)
}

/// Degenerate `SU(2)` figure: the segment [−1, 1] on the real axis. Margin
/// is zero on the segment and −(distance) off it; no point is Inside.
fn su2_segment_margin(p: TracePoint) -> f64 {
    let dx = (p.x.abs() - 1.0).max(0.0);
    -dx.hypot(p.y)
}

/// Half-arc length of the fold parameter and cached validation state.
struct GroupCache {
    /// Dense closed polyline for the ray-casting oracle.
    polyline: Vec<TracePoint>,
}

static CACHES: OnceLock<RwLock<HashMap<GroupId, Arc<GroupCache>>>> = OnceLock::new();

const POLYLINE_SEGMENTS: usize = 4096;
const POLAR_VALIDATION_SAMPLES: usize = 2048;

fn cache_for(group: GroupId) -> Result<Arc<GroupCache>, Error> {
    let lock = CACHES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(cache) = lock.read().unwrap().get(&group) {
        return Ok(cache.clone());
    }
    // Built outside the write lock; a concurrent first access may build the
    // same cache twice, which is harmless because construction is pure.
    let built = Arc::new(build_cache(group)?);
    let mut map = lock.write().unwrap();
    Ok(map.entry(group).or_insert(built).clone())
}

fn build_cache(group: GroupId) -> Result<GroupCache, Error> {
    if group.center_order() >= 3 {
        validate_polar_monotone(group)?;
    }
    let polyline = sample_boundary(group, POLYLINE_SEGMENTS)?
        .samples
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    Ok(GroupCache { polyline })
}

/// Empirical check that the polar angle grows strictly along the half-arc,
/// the assumption behind the fold-and-compare membership test.
fn validate_polar_monotone(group: GroupId) -> Result<(), Error> {
    let half = 0.5 * arc_span(group);
    let mut previous = -1.0;
    for i in 1..=POLAR_VALIDATION_SAMPLES {
        let u = half * i as f64 / POLAR_VALIDATION_SAMPLES as f64;
        let a = base_point(group, u).arg();
        if a <= previous {
            return Err(Error::ArcValidation { group });
        }
        previous = a;
    }
    Ok(())
}

/// Boundary radius along the ray of polar angle `a ∈ [0, half]`, found by
/// bisecting the half-arc parameter.
fn boundary_radius_at(group: GroupId, a: f64) -> f64 {
    let half = 0.5 * arc_span(group);
    let mut lo = 0.0;
    let mut hi = half;
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if base_point(group, mid).arg() < a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    base_point(group, 0.5 * (lo + hi)).norm()
}

/// Radial margin from folding `p` into the fundamental sector: positive
/// inside the figure.
fn fold_margin(group: GroupId, p: TracePoint) -> f64 {
    let sector = arc_span(group);
    let half = 0.5 * sector;
    let r = p.norm();
    if r == 0.0 {
        // the origin is interior to every planar figure
        return boundary_radius_at(group, half);
    }
    let mut a = p.arg().rem_euclid(sector);
    if a > half {
        a = sector - a;
    }
    boundary_radius_at(group, a) - r
}

/// Fold `p` into the fundamental sector (polar angle in [0, π/k]).
fn fold_point(group: GroupId, p: TracePoint) -> TracePoint {
    let sector = arc_span(group);
    let half = 0.5 * sector;
    let r = p.norm();
    let mut a = p.arg().rem_euclid(sector);
    if a > half {
        a = sector - a;
    }
    let (s, c) = a.sin_cos();
    TracePoint::new(r * c, r * s)
}

/// Margins only need to act like distances close to the curve; outside this
/// band the cheap algebraic or radial value decides the verdict alone.
const NEAR_BOUNDARY: f64 = 1e-4;

/// Parameter slack treated as "the foot of the perpendicular is the cusp
/// tip itself", which puts the query in the tip's outward cone.
const CUSP_PARAM_EPS: f64 = 1e-9;

/// Signed distance from `p` to the boundary, positive inside.
///
/// Radial and algebraic margins lose accuracy within ~1e−6 of a cusp (the
/// boundary radius has a fractional-power profile in the polar angle there),
/// so near the curve the margin is recomputed as the Euclidean distance to
/// the base arc, signed by which side of the oriented curve the point falls
/// on. The curve runs counterclockwise, so the interior lies left of the
/// tangent; a foot at the very tip of a cusp means the point sits in the
/// tip's outward cone and is outside.
fn signed_distance(group: GroupId, p: TracePoint) -> f64 {
    let sector = arc_span(group);
    let folded = fold_point(group, p);
    let dist_sq = |u: f64| {
        let b = base_point(group, u);
        (folded.x - b.x) * (folded.x - b.x) + (folded.y - b.y) * (folded.y - b.y)
    };
    let (u_min, d2) = crate::optim::scan_then_golden(dist_sq, 0.0, sector, 2048, 1e-13);
    let u_min = u_min.clamp(0.0, sector);
    let d = d2.max(0.0).sqrt();
    if u_min <= CUSP_PARAM_EPS || u_min >= sector - CUSP_PARAM_EPS {
        return -d;
    }
    let (b, (tx, ty)) = base_point_velocity(group, u_min);
    let cross = tx * (folded.y - b.y) - ty * (folded.x - b.x);
    if cross >= 0.0 {
        d
    } else {
        -d
    }
}

/// Coarse margin, refined into a signed distance when the point is close to
/// the curve.
fn refined_margin(group: GroupId, p: TracePoint, coarse: f64) -> f64 {
    if coarse.abs() <= NEAR_BOUNDARY {
        signed_distance(group, p)
    } else {
        coarse
    }
}

/// Decides whether `p` lies inside, on, or outside the trace figure of
/// `group`, with `Boundary` meaning |margin| ≤ `tol`.
///
/// The margin is the `SU(3)` quartic (scaled) for `SU(3)`, the superellipse
/// value 1 − |X|^{2/(2n+1)} − |Y|^{2/(2n+1)} for `Spin(4n+2)` and `SU(4)`,
/// and the radial fold margin for `SU(n ≥ 5)` and `E6`; it is positive
/// inside for every group.
pub fn membership(group: GroupId, p: TracePoint, tol: f64) -> Result<Membership, Error> {
    check_planar(group)?;
    if !(tol > 0.0) {
        return Err(Error::OutOfDomain {
            value: tol,
            min: f64::MIN_POSITIVE,
            max: f64::INFINITY,
        });
    }
    let margin = match group {
        GroupId::Su(2) => su2_segment_margin(p),
        GroupId::Su(3) => refined_margin(group, p, su3_quartic_margin(p)),
        GroupId::Su(4) => refined_margin(group, p, superellipse_margin(p, 3.0)),
        GroupId::Spin(n) => {
            refined_margin(group, p, superellipse_margin(p, f64::from(2 * n + 1)))
        }
        GroupId::Su(_) | GroupId::E6 => {
            cache_for(group)?;
            refined_margin(group, p, fold_margin(group, p))
        }
        _ => unreachable!(),
    };
    Ok(Membership::from_margin(margin, tol))
}

/// Independent membership oracle: even-odd ray casting against a dense
/// cached polyline, with the distance to the polyline as margin magnitude.
///
/// Coarser than [`membership`] near the boundary (the polyline chord error is
/// of order 1e−6); used to cross-check the fold-and-compare path.
pub fn membership_raycast(group: GroupId, p: TracePoint, tol: f64) -> Result<Membership, Error> {
    check_planar(group)?;
    if !(tol > 0.0) {
        return Err(Error::OutOfDomain {
            value: tol,
            min: f64::MIN_POSITIVE,
            max: f64::INFINITY,
        });
    }
    if group == GroupId::Su(2) {
        return Ok(Membership::from_margin(su2_segment_margin(p), tol));
    }
    let cache = cache_for(group)?;
    let poly = &cache.polyline;
    let mut inside = false;
    let mut dist2 = f64::INFINITY;
    for w in poly.windows(2) {
        let (a, b) = (w[0], w[1]);
        if (a.y > p.y) != (b.y > p.y) {
            let t = (p.y - a.y) / (b.y - a.y);
            if a.x + t * (b.x - a.x) > p.x {
                inside = !inside;
            }
        }
        dist2 = dist2.min(segment_distance_sq(p, a, b));
    }
    let dist = dist2.sqrt();
    let margin = if inside { dist } else { -dist };
    Ok(Membership::from_margin(margin, tol))
}

fn segment_distance_sq(p: TracePoint, a: TracePoint, b: TracePoint) -> f64 {
    let (ex, ey) = (b.x - a.x, b.y - a.y);
    let len2 = ex * ex + ey * ey;
    let t = if len2 > 0.0 {
        (((p.x - a.x) * ex + (p.y - a.y) * ey) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let (cx, cy) = (a.x + t * ex, a.y + t * ey);
    (p.x - cx) * (p.x - cx) + (p.y - cy) * (p.y - cy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn identity_cusp_every_group() {
        for g in [GroupId::Su(3), GroupId::Su(7), GroupId::Spin(2)] {
            let p = boundary_point(g, 0.0).unwrap();
            assert!(close(p.x, 1.0, 1e-15) && close(p.y, 0.0, 1e-15));
        }
        let p = e6_boundary_point(1.0, E6Branch::Upper).unwrap();
        assert!(close(p.x, 1.0, 1e-15) && close(p.y, 0.0, 1e-15));
    }

    #[test]
    fn su4_at_quarter_turn() {
        // cos³(π/4) = 2^{−3/2}; saturates |X|^{2/3} + |Y|^{2/3} = 1
        let p = boundary_point(GroupId::Su(4), PI / 4.0).unwrap();
        let expected = 2.0_f64.sqrt() / 4.0;
        assert!(close(p.x, expected, 1e-15));
        assert!(close(p.y, expected, 1e-15));
        assert!(superellipse_margin(p, 3.0).abs() < 1e-14);
    }

    #[test]
    fn e6_endpoints() {
        let p = e6_boundary_point(-1.0, E6Branch::Upper).unwrap();
        assert!(close(p.x, -5.0 / 27.0, 1e-15) && close(p.y, 0.0, 1e-15));
        let p = e6_boundary_point(-0.5, E6Branch::Upper).unwrap();
        assert!(close(p.x, -0.5, 1e-15));
        assert!(close(p.y, 0.5 * 3.0_f64.sqrt(), 1e-14));
        assert!(e6_boundary_point(1.5, E6Branch::Upper).is_err());
        let lower = e6_boundary_point(-0.5, E6Branch::Lower).unwrap();
        assert!(close(lower.y, -0.5 * 3.0_f64.sqrt(), 1e-14));
    }

    #[test]
    fn cusp_sets() {
        let su3 = cusps(GroupId::Su(3)).unwrap();
        assert_eq!(su3.len(), 3);
        assert!(close(su3[1].x, -0.5, 1e-15) && close(su3[1].y, 0.5 * 3.0_f64.sqrt(), 1e-15));
        let spin10 = cusps(GroupId::Spin(2)).unwrap();
        assert_eq!(spin10.len(), 4);
        assert!(close(spin10[1].x, 0.0, 1e-15) && close(spin10[1].y, 1.0, 1e-15));
        assert!(close(spin10[2].x, -1.0, 1e-15));
        let su2 = cusps(GroupId::Su(2)).unwrap();
        assert_eq!(su2.len(), 2);
        assert!(close(su2[1].x, -1.0, 1e-15));
        assert!(cusps(GroupId::G2).is_err());
        // cusps on the unit circle
        for g in [GroupId::Su(5), GroupId::Spin(3), GroupId::E6] {
            for c in cusps(g).unwrap() {
                assert!(close(c.norm(), 1.0, 1e-15));
            }
        }
    }

    #[test]
    fn membership_examples() {
        let m = membership(GroupId::Su(3), TracePoint::new(0.0, 0.0), 1e-9).unwrap();
        assert_eq!(m.verdict, Verdict::Inside);
        assert!(close(m.margin, 1.0, 1e-15));

        let m = membership(GroupId::Su(3), TracePoint::new(-0.4, 0.0), 1e-9).unwrap();
        assert_eq!(m.verdict, Verdict::Outside);
        assert!(close(m.margin, -0.5488, 1e-12));

        let m = membership(GroupId::Spin(2), TracePoint::new(0.5, 0.5), 1e-9).unwrap();
        assert_eq!(m.verdict, Verdict::Outside);

        let m = membership(GroupId::Su(3), TracePoint::new(1.0, 0.0), 1e-9).unwrap();
        assert_eq!(m.verdict, Verdict::Boundary);

        assert!(membership(GroupId::F4, TracePoint::new(0.0, 0.0), 1e-9).is_err());
        assert!(membership(GroupId::Su(3), TracePoint::new(0.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn su2_segment() {
        let on = membership(GroupId::Su(2), TracePoint::new(0.3, 0.0), 1e-9).unwrap();
        assert_eq!(on.verdict, Verdict::Boundary);
        let off = membership(GroupId::Su(2), TracePoint::new(0.3, 0.1), 1e-9).unwrap();
        assert_eq!(off.verdict, Verdict::Outside);
        let beyond = membership(GroupId::Su(2), TracePoint::new(1.2, 0.0), 1e-9).unwrap();
        assert_eq!(beyond.verdict, Verdict::Outside);
    }

    #[test]
    fn fold_membership_against_boundary() {
        for g in [GroupId::Su(5), GroupId::Su(6), GroupId::E6] {
            // boundary samples classify as Boundary
            let curve = sample_boundary(g, 120).unwrap();
            for &(_, p) in &curve.samples {
                let m = membership(g, p, 1e-9).unwrap();
                assert_eq!(m.verdict, Verdict::Boundary, "{g} at {p}");
            }
            // scaled-down points are inside, scaled-up outside
            for &(_, p) in curve.samples.iter().step_by(7) {
                let inside = TracePoint::new(0.9 * p.x, 0.9 * p.y);
                assert_eq!(membership(g, inside, 1e-9).unwrap().verdict, Verdict::Inside);
                let outside = TracePoint::new(1.05 * p.x + 0.01, 1.05 * p.y);
                let m = membership(g, outside, 1e-9).unwrap();
                assert_ne!(m.verdict, Verdict::Inside, "{g} at {outside}");
            }
        }
    }

    #[test]
    fn raycast_agrees_with_primary() {
        // clear of the boundary, both oracles must agree exactly
        for g in [GroupId::Su(3), GroupId::Su(5), GroupId::Spin(2), GroupId::E6] {
            for &(x, y) in &[
                (0.0, 0.0),
                (0.3, 0.2),
                (-0.2, 0.1),
                (0.9, 0.0),
                (0.8, 0.6),
                (-0.9, 0.1),
                (0.1, -0.5),
            ] {
                let p = TracePoint::new(x, y);
                let a = membership(g, p, 1e-9).unwrap();
                if a.margin.abs() < 1e-4 {
                    continue;
                }
                let b = membership_raycast(g, p, 1e-9).unwrap();
                assert_eq!(a.verdict, b.verdict, "{g} at {p}");
            }
        }
    }

    #[test]
    fn weyl_radicand_values() {
        assert!(close(weyl_radicand(TracePoint::new(0.0, 0.0)), 1.0, 1e-15));
        assert!(close(weyl_radicand(TracePoint::new(1.0, 0.0)), 0.0, 1e-15));
        assert!(weyl_radicand(TracePoint::new(-0.4, 0.0)) < 0.0);
        assert!(close(
            weyl_radicand(TracePoint::new(-0.4, 0.0)),
            -0.5488,
            1e-12
        ));
    }

    #[test]
    fn sampled_curves_are_closed_and_hit_cusps() {
        for g in [GroupId::Su(3), GroupId::Su(5), GroupId::Spin(2), GroupId::E6] {
            let curve = sample_boundary(g, 301).unwrap();
            assert_eq!(curve.samples.len(), 302);
            assert_eq!(curve.samples[0].1, curve.samples[301].1);
            for c in &curve.cusps {
                assert!(
                    curve.samples.iter().any(|(_, p)| p == c),
                    "{g}: cusp {c} missing from samples"
                );
            }
            for &(_, p) in &curve.samples {
                assert!(p.norm() <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn sample_count_bounds() {
        assert!(sample_boundary(GroupId::Su(5), 14).is_err());
        assert!(sample_boundary(GroupId::Su(5), 15).is_ok());
        assert!(sample_boundary(GroupId::G2, 100).is_err());
    }

    #[test]
    fn su3_radius_extremes() {
        let curve = sample_boundary(GroupId::Su(3), 300).unwrap();
        let max_r = curve.samples.iter().map(|(_, p)| p.norm()).fold(0.0, f64::max);
        let min_r = curve
            .samples
            .iter()
            .map(|(_, p)| p.norm())
            .fold(f64::INFINITY, f64::min);
        assert!(close(max_r, 1.0, 1e-12));
        assert!(close(min_r, 1.0 / 3.0, 1e-4)); // grid resolution limited
    }

    #[test]
    fn spin10_min_radius() {
        let curve = sample_boundary(GroupId::Spin(2), 400).unwrap();
        let min_r = curve
            .samples
            .iter()
            .map(|(_, p)| p.norm())
            .fold(f64::INFINITY, f64::min);
        assert!(min_r >= 0.25 - 1e-12);
        assert!(min_r <= 0.25 + 1e-4);
    }

    #[test]
    fn hypocycloid_rolling_circle_identity() {
        // rolling a circle of radius 1/n inside the unit circle:
        // (1−r)·e^{it} + r·e^{−i(1−r)t/r} with r = 1/n
        for n in [3u32, 5, 8] {
            let r = 1.0 / f64::from(n);
            for k in 0..100 {
                let t = TAU * k as f64 / 100.0;
                let rolled = TracePoint::new(
                    (1.0 - r) * t.cos() + r * ((1.0 - r) / r * t).cos(),
                    (1.0 - r) * t.sin() - r * ((1.0 - r) / r * t).sin(),
                );
                let ours = boundary_point(GroupId::Su(n), t).unwrap();
                assert!(rolled.dist(ours) < 1e-12);
            }
        }
    }

    #[test]
    fn su3_quartic_parameterization_route() {
        // 3(X+iY) = 2cos²θ + 2cosθ − 1 + 2i(1−cosθ)sinθ, derived by the
        // zero-derivative elimination, must match the hypocycloid form
        for k in 0..200 {
            let t = TAU * k as f64 / 200.0;
            let (s, c) = t.sin_cos();
            let alt = TracePoint::new(
                (2.0 * c * c + 2.0 * c - 1.0) / 3.0,
                2.0 * (1.0 - c) * s / 3.0,
            );
            let ours = boundary_point(GroupId::Su(3), t).unwrap();
            assert!(alt.dist(ours) < 1e-14);
        }
    }

    #[test]
    fn radius_profile_identity() {
        // |B(θ)|² = [n²−2n+2+2(n−1)cos nθ]/n²
        for n in [3u32, 4, 6, 8] {
            let nf = f64::from(n);
            for k in 0..500 {
                let t = TAU * k as f64 / 500.0;
                let r2 = boundary_point(GroupId::Su(n), t).unwrap().norm().powi(2);
                let profile = (nf * nf - 2.0 * nf + 2.0 + 2.0 * (nf - 1.0) * (nf * t).cos())
                    / (nf * nf);
                assert!(close(r2, profile, 1e-12));
            }
        }
    }

    #[test]
    fn su4_spin6_same_curve() {
        let a = sample_boundary(GroupId::Su(4), 400).unwrap();
        let b = sample_boundary(GroupId::Spin(1), 400).unwrap();
        for (&(_, p), &(_, q)) in a.samples.iter().zip(&b.samples) {
            assert!(p.dist(q) < 1e-14);
        }
    }

    #[test]
    fn membership_dihedral_symmetry() {
        for g in [GroupId::Su(3), GroupId::Su(5), GroupId::E6] {
            let step = TAU / g.center_order() as f64;
            for &(x, y) in &[(0.4, 0.2), (-0.3, 0.5), (0.05, -0.6)] {
                let p = TracePoint::new(x, y);
                let m0 = membership(g, p, 1e-9).unwrap();
                let mr = membership(g, p.rotated(step), 1e-9).unwrap();
                let mc = membership(g, p.conj(), 1e-9).unwrap();
                assert_eq!(m0.verdict, mr.verdict);
                assert_eq!(m0.verdict, mc.verdict);
                assert!(close(m0.margin, mr.margin, 1e-9));
                assert!(close(m0.margin, mc.margin, 1e-12));
            }
        }
        // Spin figures: x ↔ y symmetry
        for &(x, y) in &[(0.4, 0.2), (0.1, -0.8)] {
            let m0 = membership(GroupId::Spin(2), TracePoint::new(x, y), 1e-9).unwrap();
            let ms = membership(GroupId::Spin(2), TracePoint::new(y, x), 1e-9).unwrap();
            assert_eq!(m0.verdict, ms.verdict);
            assert!(close(m0.margin, ms.margin, 1e-12));
        }
    }
}
