//! Derivative-free minimization helpers: golden-section line search and
//! cyclic coordinate descent over periodic variables.

/// 2 − φ, the golden-section step fraction.
const GOLD: f64 = 0.381_966_011_250_105_1;

/// Golden-section search for the minimum of `f` on `[a, b]`.
///
/// Returns `(x_min, f_min)`. Assumes `f` is unimodal on the bracket; callers
/// establish the bracket with a coarse scan first.
pub(crate) fn golden_section_min<F>(f: F, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let mut x1 = a + GOLD * (b - a);
    let mut x2 = b - GOLD * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > xtol {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + GOLD * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - GOLD * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Scan `count` evenly spaced points of `[a, b)` and refine the best with
/// golden section inside its bracketing neighbors.
pub(crate) fn scan_then_golden<F>(f: F, a: f64, b: f64, count: usize, xtol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let step = (b - a) / count as f64;
    let mut best_k = 0;
    let mut best_v = f64::INFINITY;
    for k in 0..count {
        let v = f(a + step * k as f64);
        if v < best_v {
            best_v = v;
            best_k = k;
        }
    }
    let center = a + step * best_k as f64;
    golden_section_min(f, center - step, center + step, xtol)
}

/// Cyclic coordinate descent for a 2π-periodic objective of several angles.
///
/// Each coordinate pass scans one full period to bracket the best slice
/// minimum and polishes it with golden section, so the line step is global.
/// Sweeps continue until one of them improves the objective by less than
/// `stall` or `max_steps` coordinate steps have run. Returns the final value;
/// `x` holds the minimizer.
pub(crate) fn coordinate_descent<F>(
    f: F,
    x: &mut [f64],
    scan: usize,
    stall: f64,
    max_steps: usize,
) -> f64
where
    F: Fn(&[f64]) -> f64,
{
    let period = 2.0 * std::f64::consts::PI;
    let mut fx = f(x);
    let mut steps = 0;
    loop {
        let before = fx;
        for j in 0..x.len() {
            if steps >= max_steps {
                return fx;
            }
            steps += 1;
            let line = |v: f64| {
                let mut y = x.to_vec();
                y[j] = v;
                f(&y)
            };
            let (xj, fj) = scan_then_golden(line, x[j], x[j] + period, scan, 1e-12);
            if fj < fx {
                x[j] = xj;
                fx = fj;
            }
        }
        if before - fx < stall {
            return fx;
        }
    }
}
