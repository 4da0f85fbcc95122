//! Areas, perimeters, inradii, and the `SU(3)` class-measure.
//!
//! Every quantity is available twice: in closed form and numerically, with
//! the numeric route independent enough to serve as a cross-check. Areas use
//! Green's theorem, ½∮(X dY − Y dX), integrated arc by arc so the cusps are
//! always panel endpoints; perimeters integrate the parameterization's speed
//! (which vanishes smoothly at the cusps, so there is no singularity);
//! inradii minimize the boundary radius by a dense scan refined with golden
//! section.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::boundary::base_point_velocity;
use crate::quad::{self, QuadratureConfig};
use crate::{weyl_radicand, Error, GroupId, TracePoint};

/// Published agreement tolerance between closed-form and numeric areas.
pub const AREA_TOLERANCE: f64 = 1e-8;
/// Published agreement tolerance between closed-form and numeric perimeters.
pub const PERIMETER_TOLERANCE: f64 = 1e-8;
/// Published agreement tolerance between closed-form and numeric inradii.
pub const INRADIUS_TOLERANCE: f64 = 1e-10;

/// Closed-form and numeric geometry of one trace figure, with per-quantity
/// absolute discrepancies.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometryReport {
    pub group: GroupId,
    pub area_closed: f64,
    pub area_numeric: f64,
    /// Absent where no closed form exists (`Spin(4n+2)` for n ≥ 3 and `E6`
    /// have only tabulated decimal references, which are not closed forms).
    pub perimeter_closed: Option<f64>,
    pub perimeter_numeric: f64,
    pub inradius_closed: f64,
    pub inradius_numeric: f64,
    pub area_discrepancy: f64,
    pub perimeter_discrepancy: Option<f64>,
    pub inradius_discrepancy: f64,
}

impl GeometryReport {
    /// True when every available discrepancy is within its published
    /// tolerance.
    pub fn within_tolerance(&self) -> bool {
        self.area_discrepancy <= AREA_TOLERANCE
            && self.perimeter_discrepancy.map_or(true, |d| d <= PERIMETER_TOLERANCE)
            && self.inradius_discrepancy <= INRADIUS_TOLERANCE
    }
}

/// Inradius of the figure: closed form, numeric minimum of the boundary
/// radius, and the parameter attaining it (θ for `SU(n)` and `Spin(4n+2)`,
/// ξ for `E6`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Inradius {
    pub closed: f64,
    pub numeric: f64,
    pub minimizer: f64,
}

/// Geometry needs a genuinely two-dimensional figure; `SU(2)`'s segment is
/// rejected along with the real-trace groups.
fn check_geometry_group(group: GroupId) -> Result<(), Error> {
    if group.has_planar_figure() {
        Ok(())
    } else {
        Err(Error::UnsupportedGroup {
            group,
            reason: "no two-dimensional trace figure to measure",
        })
    }
}

/// Closed-form enclosed area: π(n−1)(n−2)/n² for `SU(n)`,
/// π(2n+1)!/(4ⁿn!)² for `Spin(4n+2)`, 20π/243 for `E6`.
pub fn area_closed(group: GroupId) -> Result<f64, Error> {
    check_geometry_group(group)?;
    Ok(match group {
        GroupId::Su(n) => {
            let nf = f64::from(n);
            PI * (nf - 1.0) * (nf - 2.0) / (nf * nf)
        }
        GroupId::Spin(n) => PI * spin_area_factor(n),
        GroupId::E6 => 20.0 * PI / 243.0,
        _ => unreachable!(),
    })
}

/// (2n+1)!/(4ⁿ n!)² = (2n+1)·C(2n,n)/16ⁿ; exact integer arithmetic up to
/// n = 15, log-gamma style summation beyond that for overflow safety.
fn spin_area_factor(n: u32) -> f64 {
    if n <= 15 {
        let numerator = (2 * u128::from(n) + 1) * binomial(2 * n, n);
        let denominator = 16u128.pow(n);
        numerator as f64 / denominator as f64
    } else {
        let ln = ln_factorial(2 * n + 1) - 2.0 * (f64::from(n) * 4.0_f64.ln() + ln_factorial(n));
        ln.exp()
    }
}

fn binomial(n: u32, k: u32) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

fn ln_factorial(m: u32) -> f64 {
    (2..=m).map(|k| f64::from(k).ln()).sum()
}

/// Position and velocity on arc `j` of the assembled closed curve.
fn arc_point_velocity(group: GroupId, j: usize, u: f64) -> (TracePoint, (f64, f64)) {
    let span = 2.0 * PI / group.center_order() as f64;
    match group {
        GroupId::Su(_) | GroupId::Spin(_) => base_point_velocity(group, span * j as f64 + u),
        GroupId::E6 => {
            let (p, (vx, vy)) = base_point_velocity(group, u);
            let angle = span * j as f64;
            let (s, c) = angle.sin_cos();
            (p.rotated(angle), (c * vx - s * vy, s * vx + c * vy))
        }
        _ => unreachable!(),
    }
}

/// Sums one integrand over all arcs of the closed curve, each arc getting an
/// equal share of the accuracy budget. Arc results are added in arc order.
fn integrate_over_arcs<F>(group: GroupId, cfg: &QuadratureConfig, f: F) -> Result<f64, Error>
where
    F: Fn(usize, f64) -> f64 + Sync,
{
    let k = group.center_order();
    let span = 2.0 * PI / k as f64;
    let per_arc = QuadratureConfig {
        abs_tol: cfg.abs_tol / k as f64,
        ..*cfg
    };
    let mut total = 0.0;
    for j in 0..k {
        let arc = |u: f64| f(j, u);
        total += quad::integrate(&arc, 0.0, span, &per_arc)?;
    }
    Ok(total)
}

/// Enclosed area by quadrature of ½∮(X dY − Y dX) over the assembled
/// boundary.
pub fn area_numeric(group: GroupId, cfg: &QuadratureConfig) -> Result<f64, Error> {
    check_geometry_group(group)?;
    integrate_over_arcs(group, cfg, |j, u| {
        let (p, (vx, vy)) = arc_point_velocity(group, j, u);
        0.5 * (p.x * vy - p.y * vx)
    })
}

/// Closed-form boundary length where one exists: 8(n−1)/n for `SU(n)`,
/// 6 for `Spin(6)`, 5 + (5√3/6)·ln(2+√3) for `Spin(10)`. `Spin(4n+2)` with
/// n ≥ 3 and `E6` return `None`.
pub fn perimeter_closed(group: GroupId) -> Result<Option<f64>, Error> {
    check_geometry_group(group)?;
    Ok(match group {
        GroupId::Su(n) => {
            let nf = f64::from(n);
            Some(8.0 * (nf - 1.0) / nf)
        }
        GroupId::Spin(1) => Some(6.0),
        GroupId::Spin(2) => {
            let s3 = 3.0_f64.sqrt();
            Some(5.0 + 5.0 * s3 / 6.0 * (2.0 + s3).ln())
        }
        GroupId::Spin(_) | GroupId::E6 => None,
        _ => unreachable!(),
    })
}

/// Boundary length by quadrature of the parameterization's speed over every
/// arc.
pub fn perimeter_numeric(group: GroupId, cfg: &QuadratureConfig) -> Result<f64, Error> {
    check_geometry_group(group)?;
    integrate_over_arcs(group, cfg, |j, u| {
        let (_, (vx, vy)) = arc_point_velocity(group, j, u);
        vx.hypot(vy)
    })
}

/// Radius of the largest origin-centered circle inside the figure.
///
/// Closed forms: 1 − 2/n for `SU(n)`, 2⁻ⁿ for `Spin(4n+2)`, 5/27 for `E6`.
/// The numeric value minimizes the boundary radius over one arc by a dense
/// scan refined with golden section.
pub fn inradius(group: GroupId) -> Result<Inradius, Error> {
    check_geometry_group(group)?;
    let closed = match group {
        GroupId::Su(n) => 1.0 - 2.0 / f64::from(n),
        GroupId::Spin(n) => 0.5_f64.powi(n as i32),
        GroupId::E6 => 5.0 / 27.0,
        _ => unreachable!(),
    };
    let span = 2.0 * PI / group.center_order() as f64;
    let radius_sq = |u: f64| {
        let (p, _) = base_point_velocity(group, u);
        p.x * p.x + p.y * p.y
    };
    let (u_min, r2) = crate::optim::scan_then_golden(radius_sq, 0.0, span, 4096, 1e-13);
    let minimizer = match group {
        GroupId::E6 => u_min.cos(), // report as ξ
        _ => u_min,
    };
    Ok(Inradius {
        closed,
        numeric: r2.sqrt(),
        minimizer,
    })
}

/// Weyl class-measure prefactor 27√3/(2π²).
fn weyl_prefactor() -> f64 {
    27.0 * 3.0_f64.sqrt() / (2.0 * PI * PI)
}

/// Density of the normalized `SU(3)` class measure at `p`, zero exactly on
/// the figure's boundary. Radicands more negative than the numeric tolerance
/// mean `p` lies outside the figure and are an error; the tiny negatives
/// rounding produces on the boundary itself clamp to zero.
pub fn weyl_density(p: TracePoint) -> Result<f64, Error> {
    let radicand = weyl_radicand(p);
    if radicand < -crate::NUMERIC_TOLERANCE {
        return Err(Error::OutsideRegion { x: p.x, y: p.y });
    }
    Ok(weyl_prefactor() * radicand.max(0.0).sqrt())
}

/// Vertical-section integral of the density at abscissa `x`, exact section
/// endpoints from the quadratic the quartic reduces to in y².
///
/// For x < −1/3 the section is two symmetric bands (the figure is notched
/// between the two left cusps); for x ≥ −1/3 it is one interval. The sine
/// substitution removes the square-root vanishing at the band edges.
fn weyl_section(x: f64, upper_only: bool) -> f64 {
    let a = 1.0 + 4.0 * x + x * x;
    let c = (1.0 + 3.0 * x) * (1.0 - x) * (1.0 - x) * (1.0 - x);
    let disc = a * a + c / 3.0;
    if disc <= 0.0 {
        return 0.0;
    }
    let root = disc.sqrt();
    let u_hi = -a + root;
    if u_hi <= 0.0 {
        return 0.0;
    }
    let u_lo = (-a - root).max(0.0);
    let (y_lo, y_hi) = (u_lo.sqrt(), u_hi.sqrt());
    let mid = 0.5 * (y_lo + y_hi);
    let half = 0.5 * (y_hi - y_lo);
    let pref = weyl_prefactor();
    let integrand = |psi: f64| {
        let (s, cs) = psi.sin_cos();
        let y = mid + half * s;
        let radicand = weyl_radicand(TracePoint::new(x, y)).max(0.0);
        pref * radicand.sqrt() * half * cs
    };
    let band = quad::composite(&integrand, -FRAC_PI_2, FRAC_PI_2, 8);
    if upper_only {
        band
    } else {
        2.0 * band
    }
}

pub(crate) fn weyl_normalization_region(
    cfg: &QuadratureConfig,
    upper_only: bool,
) -> Result<f64, Error> {
    cfg.validate()?;
    let per_piece = QuadratureConfig {
        abs_tol: 0.5 * cfg.abs_tol,
        ..*cfg
    };
    let section = |x: f64| weyl_section(x, upper_only);
    // the section count changes character at x = −1/3; split there
    let left = quad::integrate(&section, -0.5, -1.0 / 3.0, &per_piece)?;
    let right = quad::integrate(&section, -1.0 / 3.0, 1.0, &per_piece)?;
    Ok(left + right)
}

/// Integral of the class-measure density over the whole `SU(3)` figure.
/// The measure is normalized, so the result is 1 up to quadrature error.
pub fn weyl_normalization(cfg: &QuadratureConfig) -> Result<f64, Error> {
    weyl_normalization_region(cfg, false)
}

/// Full geometry of one figure: closed forms, numeric counterparts, and
/// their discrepancies.
pub fn geometry_report(group: GroupId, cfg: &QuadratureConfig) -> Result<GeometryReport, Error> {
    let area_c = area_closed(group)?;
    let area_n = area_numeric(group, cfg)?;
    let perim_c = perimeter_closed(group)?;
    let perim_n = perimeter_numeric(group, cfg)?;
    let inr = inradius(group)?;
    Ok(GeometryReport {
        group,
        area_closed: area_c,
        area_numeric: area_n,
        perimeter_closed: perim_c,
        perimeter_numeric: perim_n,
        inradius_closed: inr.closed,
        inradius_numeric: inr.numeric,
        area_discrepancy: (area_c - area_n).abs(),
        perimeter_discrepancy: perim_c.map(|c| (c - perim_n).abs()),
        inradius_discrepancy: (inr.closed - inr.numeric).abs(),
    })
}
