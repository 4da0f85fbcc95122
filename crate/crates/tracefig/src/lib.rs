//! Trace figures of the simple, simply connected compact Lie groups.
//!
//! For each group with a complex fundamental representation — `SU(n)`,
//! `Spin(4n+2)` and `E6` — the normalized traces `tr U / dim` fill a closed
//! region of the unit disk bounded by cusped curves; for the centerless real
//! groups `G2`, `F4` and `E8` they fill a real interval `[lower, 1]` with a
//! rational lower endpoint. This crate evaluates the characters on the
//! maximal torus, parameterizes the boundary curves, decides membership,
//! computes areas / perimeters / inradii both in closed form and by
//! quadrature, evaluates the `SU(3)` class-measure density, and certifies the
//! exceptional lower bounds numerically.
//!
//! ```
//! use tracefig::{mean_trace, GroupId, TorusPoint};
//!
//! let p = mean_trace(GroupId::Su(3), &TorusPoint::from(&[0.0, 0.0][..])).unwrap();
//! assert_eq!((p.x, p.y), (1.0, 0.0));
//! ```

mod error;
mod group;

pub mod boundary;
pub mod bounds;
pub mod characters;
pub mod geometry;
pub mod quad;
pub mod sampling;

mod optim;

pub use boundary::{
    boundary_point, cusps, e6_boundary_point, membership, membership_raycast, sample_boundary,
    weyl_radicand, BoundaryCurve, E6Branch, Membership, Verdict,
};
pub use bounds::{certify, full_interval_table, lower_bound, reduced_minimum, BoundCertificate};
pub use characters::{e8_diagonal, f4_profile, mean_trace, su3_char, NUMERIC_TOLERANCE};
pub use error::Error;
pub use geometry::{
    area_closed, area_numeric, geometry_report, inradius, perimeter_closed, perimeter_numeric,
    weyl_density, weyl_normalization, GeometryReport, Inradius,
};
pub use group::{GroupId, ParseGroupError, TorusPoint, TracePoint};
pub use quad::{QuadratureConfig, Rule};
