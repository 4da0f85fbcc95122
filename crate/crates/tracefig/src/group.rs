//! Group identifiers, torus coordinates, and trace-plane points.
//!
//! A [`GroupId`] names one of the simple, simply connected compact Lie groups
//! covered by this crate: `SU(n)` for n ≥ 2, `Spin(4n+2)` for n ≥ 1, and the
//! exceptional groups `E6`, `G2`, `F4`, `E8`. A [`TorusPoint`] is a list of
//! maximal-torus angles (radians) of the length fixed by the group; a
//! [`TracePoint`] is the normalized trace `tr U / dim` as a point of the
//! closed unit disk.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::Error;

/// Identifier of a group in scope: family plus rank parameter.
///
/// `Spin(n)` is indexed by the torus parameter `n`, naming the group
/// `Spin(4n+2)`; use [`GroupId::spin_dim`] to construct it from the
/// dimension that appears in the group's name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupId {
    /// `SU(n)`, n ≥ 2.
    Su(u32),
    /// `Spin(4n+2)`, n ≥ 1.
    Spin(u32),
    E6,
    G2,
    F4,
    E8,
}

impl GroupId {
    /// `SU(n)`; fails for n < 2.
    pub fn su(n: u32) -> Result<Self, Error> {
        if n >= 2 {
            Ok(GroupId::Su(n))
        } else {
            Err(Error::InvalidParam {
                family: "SU",
                param: n,
                min: 2,
            })
        }
    }

    /// `Spin(4n+2)` by torus parameter; fails for n < 1.
    pub fn spin(n: u32) -> Result<Self, Error> {
        if n >= 1 {
            Ok(GroupId::Spin(n))
        } else {
            Err(Error::InvalidParam {
                family: "Spin",
                param: n,
                min: 1,
            })
        }
    }

    /// `Spin(d)` by the dimension `d` in the group's name; requires d = 4n+2, d ≥ 6.
    pub fn spin_dim(dim: u32) -> Result<Self, Error> {
        if dim >= 6 && dim % 4 == 2 {
            Ok(GroupId::Spin((dim - 2) / 4))
        } else {
            Err(Error::InvalidParam {
                family: "Spin(4n+2) dimension",
                param: dim,
                min: 6,
            })
        }
    }

    /// Number of independent torus angles parameterizing conjugacy classes.
    pub fn angle_count(&self) -> usize {
        match *self {
            GroupId::Su(n) => (n - 1) as usize,
            GroupId::Spin(n) => (2 * n + 1) as usize,
            GroupId::E6 => 6,
            GroupId::G2 => 2,
            GroupId::F4 => 4,
            GroupId::E8 => 8,
        }
    }

    /// Dimension of the fundamental representation whose normalized trace is taken.
    pub fn rep_dim(&self) -> u64 {
        match *self {
            GroupId::Su(n) => n as u64,
            GroupId::Spin(n) => 4u64.pow(n),
            GroupId::E6 => 27,
            GroupId::G2 => 7,
            GroupId::F4 => 26,
            GroupId::E8 => 248,
        }
    }

    /// True when the mean eigenvalues fill a two-dimensional region of the
    /// unit disk (complex fundamental representation): `SU(n ≥ 3)`,
    /// `Spin(4n+2)`, `E6`.
    pub fn has_planar_figure(&self) -> bool {
        match *self {
            GroupId::Su(n) => n >= 3,
            GroupId::Spin(_) | GroupId::E6 => true,
            GroupId::G2 | GroupId::F4 | GroupId::E8 => false,
        }
    }

    /// True when every mean eigenvalue is real: `SU(2)`, `G2`, `F4`, `E8`.
    pub fn is_real_trace(&self) -> bool {
        !self.has_planar_figure()
    }

    /// Order of the center `Z(G)`, which equals the number of boundary cusps
    /// for groups with a planar figure.
    pub fn center_order(&self) -> usize {
        match *self {
            GroupId::Su(n) => n as usize,
            GroupId::Spin(_) => 4,
            GroupId::E6 => 3,
            GroupId::G2 | GroupId::F4 | GroupId::E8 => 1,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupId::Su(n) => write!(f, "SU({n})"),
            GroupId::Spin(n) => write!(f, "Spin({})", 4 * n + 2),
            GroupId::E6 => write!(f, "E6"),
            GroupId::G2 => write!(f, "G2"),
            GroupId::F4 => write!(f, "F4"),
            GroupId::E8 => write!(f, "E8"),
        }
    }
}

/// Error produced when a group name fails to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseGroupError {
    name: String,
}

impl fmt::Display for ParseGroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown group {:?} (expected su<n>, spin<4n+2>, e6, g2, f4 or e8)",
            self.name
        )
    }
}

impl std::error::Error for ParseGroupError {}

impl FromStr for GroupId {
    type Err = ParseGroupError;

    /// Parses the scriptable grammar `su3`, `su4`, …, `spin6`, `spin10`,
    /// `e6`, `g2`, `f4`, `e8` (case-insensitive). `spin6` is accepted as an
    /// alias of `su4`, reflecting the isomorphism of those groups.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGroupError { name: s.to_owned() };
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "e6" => return Ok(GroupId::E6),
            "g2" => return Ok(GroupId::G2),
            "f4" => return Ok(GroupId::F4),
            "e8" => return Ok(GroupId::E8),
            _ => {}
        }
        if let Some(digits) = lower.strip_prefix("su") {
            let n: u32 = digits.parse().map_err(|_| err())?;
            return GroupId::su(n).map_err(|_| err());
        }
        if let Some(digits) = lower.strip_prefix("spin") {
            let dim: u32 = digits.parse().map_err(|_| err())?;
            if dim == 6 {
                return Ok(GroupId::Su(4));
            }
            return GroupId::spin_dim(dim).map_err(|_| err());
        }
        Err(err())
    }
}

/// A maximal-torus element given by its angles in radians.
///
/// Every operation taking a `TorusPoint` is 2π-periodic in each angle, so the
/// angles are unconstrained reals.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    angles: Vec<f64>,
}

impl TorusPoint {
    pub fn new(angles: Vec<f64>) -> Self {
        TorusPoint { angles }
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// Checks the angle count against the group, the precondition of every
    /// character evaluation.
    pub fn check_for(&self, group: GroupId) -> Result<(), Error> {
        let expected = group.angle_count();
        if self.angles.len() == expected {
            Ok(())
        } else {
            Err(Error::AngleCount {
                group,
                expected,
                got: self.angles.len(),
            })
        }
    }
}

impl From<Vec<f64>> for TorusPoint {
    fn from(angles: Vec<f64>) -> Self {
        TorusPoint::new(angles)
    }
}

impl From<&[f64]> for TorusPoint {
    fn from(angles: &[f64]) -> Self {
        TorusPoint::new(angles.to_vec())
    }
}

/// A mean eigenvalue `(X, Y)` as a point of the closed unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TracePoint {
    pub x: f64,
    pub y: f64,
}

impl TracePoint {
    pub fn new(x: f64, y: f64) -> Self {
        TracePoint { x, y }
    }

    /// Distance from the origin.
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Polar angle in (−π, π].
    pub fn arg(&self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Complex conjugate (reflection across the real axis).
    pub fn conj(self) -> Self {
        TracePoint::new(self.x, -self.y)
    }

    /// Rotation about the origin by `angle` radians.
    pub fn rotated(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        TracePoint::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn dist(self, other: Self) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

impl From<Complex64> for TracePoint {
    fn from(z: Complex64) -> Self {
        TracePoint::new(z.re, z.im)
    }
}

impl From<TracePoint> for Complex64 {
    fn from(p: TracePoint) -> Self {
        Complex64::new(p.x, p.y)
    }
}

impl fmt::Display for TracePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_counts() {
        assert_eq!(GroupId::Su(3).angle_count(), 2);
        assert_eq!(GroupId::Su(8).angle_count(), 7);
        assert_eq!(GroupId::Spin(2).angle_count(), 5); // Spin(10)
        assert_eq!(GroupId::E6.angle_count(), 6);
        assert_eq!(GroupId::G2.angle_count(), 2);
        assert_eq!(GroupId::F4.angle_count(), 4);
        assert_eq!(GroupId::E8.angle_count(), 8);
    }

    #[test]
    fn constructors_validate() {
        assert!(GroupId::su(1).is_err());
        assert!(GroupId::su(2).is_ok());
        assert!(GroupId::spin(0).is_err());
        assert_eq!(GroupId::spin_dim(10).unwrap(), GroupId::Spin(2));
        assert!(GroupId::spin_dim(8).is_err());
        assert!(GroupId::spin_dim(2).is_err());
    }

    #[test]
    fn parse_grammar() {
        assert_eq!("su3".parse::<GroupId>().unwrap(), GroupId::Su(3));
        assert_eq!("spin10".parse::<GroupId>().unwrap(), GroupId::Spin(2));
        assert_eq!("spin14".parse::<GroupId>().unwrap(), GroupId::Spin(3));
        assert_eq!("e6".parse::<GroupId>().unwrap(), GroupId::E6);
        assert_eq!("G2".parse::<GroupId>().unwrap(), GroupId::G2);
        // spin6 is an alias of su4
        assert_eq!("spin6".parse::<GroupId>().unwrap(), GroupId::Su(4));
        assert!("su1".parse::<GroupId>().is_err());
        assert!("spin8".parse::<GroupId>().is_err());
        assert!("e7".parse::<GroupId>().is_err());
        assert!("".parse::<GroupId>().is_err());
    }

    #[test]
    fn display_names() {
        assert_eq!(GroupId::Su(5).to_string(), "SU(5)");
        assert_eq!(GroupId::Spin(3).to_string(), "Spin(14)");
        assert_eq!(GroupId::E8.to_string(), "E8");
    }

    #[test]
    fn figure_classification() {
        assert!(GroupId::Su(3).has_planar_figure());
        assert!(GroupId::Spin(1).has_planar_figure());
        assert!(GroupId::E6.has_planar_figure());
        assert!(!GroupId::Su(2).has_planar_figure());
        assert!(GroupId::Su(2).is_real_trace());
        assert!(GroupId::G2.is_real_trace());
        assert_eq!(GroupId::Su(6).center_order(), 6);
        assert_eq!(GroupId::Spin(2).center_order(), 4);
        assert_eq!(GroupId::E6.center_order(), 3);
        assert_eq!(GroupId::E8.center_order(), 1);
    }

    #[test]
    fn trace_point_ops() {
        let p = TracePoint::new(0.0, 1.0);
        assert!((p.rotated(std::f64::consts::FRAC_PI_2).x + 1.0).abs() < 1e-15);
        assert_eq!(p.conj(), TracePoint::new(0.0, -1.0));
        assert!((p.norm() - 1.0).abs() < 1e-15);
    }
}
