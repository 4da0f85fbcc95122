//! Error type shared by all modules.

use thiserror::Error;

use crate::GroupId;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The operation needs a two-dimensional trace figure and the group has
    /// none (real-trace groups fed to boundary or geometry routines), or the
    /// operation covers a different family altogether.
    #[error("{group} is not supported by this operation: {reason}")]
    UnsupportedGroup { group: GroupId, reason: &'static str },

    /// Torus point of the wrong length.
    #[error("{group} expects {expected} torus angles, got {got}")]
    AngleCount {
        group: GroupId,
        expected: usize,
        got: usize,
    },

    /// Scalar parameter outside its admissible interval.
    #[error("parameter {value} outside [{min}, {max}]")]
    OutOfDomain { value: f64, min: f64, max: f64 },

    /// Family parameter below its minimum (SU needs n ≥ 2, Spin n ≥ 1).
    #[error("{family} parameter must be at least {min}, got {param}")]
    InvalidParam {
        family: &'static str,
        param: u32,
        min: u32,
    },

    /// Integer argument too small (sample counts, grid resolutions, restarts).
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    /// Adaptive quadrature ran out of panel budget before meeting its target.
    #[error(
        "quadrature did not converge: residual {residual:.3e} after {panels} panels (target {target:.3e})"
    )]
    QuadratureFailure {
        residual: f64,
        panels: usize,
        target: f64,
    },

    /// Numerical certification of a bound failed; carries the offending
    /// point and the value observed there.
    #[error("certification failed for {group}: {detail} (value {value} at {angles:?})")]
    CertificationFailure {
        group: GroupId,
        detail: &'static str,
        angles: Vec<f64>,
        value: f64,
    },

    /// Point lies outside the region where the class-measure density exists.
    #[error("point ({x}, {y}) is outside the region carrying the class measure")]
    OutsideRegion { x: f64, y: f64 },

    /// Internal consistency check failed while building boundary caches.
    #[error("boundary arc of {group} failed its monotonicity validation")]
    ArcValidation { group: GroupId },
}
