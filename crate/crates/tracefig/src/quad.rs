//! Composite Gauss–Legendre quadrature.
//!
//! All boundary integrands in this crate are smooth on each arc (cusps are
//! always panel endpoints), so a fixed-order Gauss rule per panel converges
//! spectrally. The adaptive mode doubles the panel count until two successive
//! composite results agree, and reports the last residual on failure.
//!
//! Panels may be evaluated in parallel; the reduction always sums panel
//! results in index order, so the value is bit-identical no matter how many
//! workers participate.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::Error;

/// Nodes per panel of the underlying Gauss–Legendre rule.
const GAUSS_ORDER: usize = 16;

/// Hard cap on panel doubling in adaptive mode.
const MAX_PANELS: usize = 1 << 14;

/// How the panel count is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rule {
    /// Single pass with exactly `panels` panels.
    CompositeGauss,
    /// Double the panel count until two successive results agree within
    /// `abs_tol / 2`.
    #[default]
    Adaptive,
}

/// Configuration for the numeric integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Initial (or fixed) number of panels; at least 8.
    pub panels: usize,
    pub rule: Rule,
    /// Absolute accuracy target.
    pub abs_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            panels: 16,
            rule: Rule::Adaptive,
            abs_tol: 1e-9,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.panels < 8 {
            return Err(Error::TooSmall {
                what: "quadrature panels",
                min: 8,
                got: self.panels,
            });
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::OutOfDomain {
                value: self.abs_tol,
                min: f64::MIN_POSITIVE,
                max: f64::INFINITY,
            });
        }
        Ok(())
    }
}

/// Gauss–Legendre nodes and weights on [−1, 1], computed once by Newton
/// iteration on Pₙ and cached.
fn gauss_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| legendre_rule(GAUSS_ORDER))
}

/// Legendre Pₙ and P′ₙ at `x` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn legendre_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Chebyshev-based starting guess for the i-th root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Composite Gauss–Legendre integral of `f` over `[a, b]` with `panels`
/// equal panels. Panel contributions are computed in parallel and summed in
/// panel order.
pub fn composite<F>(f: &F, a: f64, b: f64, panels: usize) -> f64
where
    F: Fn(f64) -> f64 + Sync,
{
    let (nodes, weights) = gauss_rule();
    let h = (b - a) / panels as f64;
    let partials: Vec<f64> = (0..panels)
        .into_par_iter()
        .map(|k| {
            let lo = a + h * k as f64;
            let mid = lo + 0.5 * h;
            let half = 0.5 * h;
            let mut acc = 0.0;
            for (x, w) in nodes.iter().zip(weights) {
                acc += w * f(mid + half * x);
            }
            acc * half
        })
        .collect();
    partials.iter().sum()
}

/// Integral of `f` over `[a, b]` under `cfg`. In adaptive mode the panel
/// count doubles until two successive composite results differ by at most
/// `abs_tol / 2`; running out of budget yields a
/// [`Error::QuadratureFailure`] carrying the last residual.
pub fn integrate<F>(f: &F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64, Error>
where
    F: Fn(f64) -> f64 + Sync,
{
    cfg.validate()?;
    match cfg.rule {
        Rule::CompositeGauss => Ok(composite(f, a, b, cfg.panels)),
        Rule::Adaptive => {
            let mut panels = cfg.panels;
            let mut previous = composite(f, a, b, panels);
            let mut residual = f64::INFINITY;
            while panels < MAX_PANELS {
                panels *= 2;
                let current = composite(f, a, b, panels);
                residual = (current - previous).abs();
                if residual <= 0.5 * cfg.abs_tol {
                    return Ok(current);
                }
                previous = current;
            }
            Err(Error::QuadratureFailure {
                residual,
                panels,
                target: cfg.abs_tol,
            })
        }
    }
}
