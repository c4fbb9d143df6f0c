//! Adaptive Simpson quadrature.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimpsonOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Hard cap on the number of accepted subintervals.
    pub max_intervals: usize,
}

impl Default for SimpsonOptions {
    fn default() -> Self {
        SimpsonOptions { abs_tol: 1e-10, rel_tol: 1e-10, max_intervals: 1_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error_estimate: f64,
    pub intervals: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("subinterval cap of {0} reached before convergence")]
    IntervalCap(usize),
    #[error("integrand is not finite at x = {0}")]
    NonFinite(f64),
    #[error("invalid interval [{0}, {1}]")]
    InvalidInterval(f64, f64),
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

// Panels the interval is cut into before adapting; guards against a single
// coarse Simpson step that happens to look converged.
const INITIAL_PANELS: usize = 16;

/// Integrates `f` over `[a, b]`. A panel is accepted when the two-half
/// Simpson estimate differs from the one-panel estimate by at most 15 times
/// its share of the tolerance; the accepted value carries the Richardson
/// correction. The tolerance is `max(abs_tol, rel_tol * |I|)` with `I` a
/// first composite estimate.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, opts: SimpsonOptions) -> Result<Integral, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) || b < a {
        return Err(QuadratureError::InvalidInterval(a, b));
    }
    if a == b {
        return Ok(Integral { value: 0.0, error_estimate: 0.0, intervals: 0 });
    }
    let eval = |x: f64| {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(QuadratureError::NonFinite(x))
        }
    };

    let h = (b - a) / INITIAL_PANELS as f64;
    let mut stack = Vec::with_capacity(64);
    let mut coarse = 0.0;
    let mut left = eval(a)?;
    for i in 0..INITIAL_PANELS {
        let pa = a + h * i as f64;
        let pb = if i + 1 == INITIAL_PANELS { b } else { pa + h };
        let fm = eval(0.5 * (pa + pb))?;
        let fb = eval(pb)?;
        let whole = simpson(pa, pb, left, fm, fb);
        coarse += whole;
        stack.push(Panel { a: pa, b: pb, fa: left, fm, fb, whole, tol: 0.0 });
        left = fb;
    }
    let tol = opts.abs_tol.max(opts.rel_tol * coarse.abs());
    for p in &mut stack {
        p.tol = tol * (p.b - p.a) / (b - a);
    }

    let mut value = 0.0;
    let mut error_estimate = 0.0;
    let mut intervals = 0usize;
    while let Some(p) = stack.pop() {
        let m = 0.5 * (p.a + p.b);
        let flm = eval(0.5 * (p.a + m))?;
        let frm = eval(0.5 * (m + p.b))?;
        let sl = simpson(p.a, m, p.fa, flm, p.fm);
        let sr = simpson(m, p.b, p.fm, frm, p.fb);
        let delta = sl + sr - p.whole;
        // stop splitting once the midpoint no longer separates the ends
        if delta.abs() <= 15.0 * p.tol || m <= p.a || m >= p.b {
            value += sl + sr + delta / 15.0;
            error_estimate += delta.abs() / 15.0;
            intervals += 1;
            if intervals > opts.max_intervals {
                return Err(QuadratureError::IntervalCap(opts.max_intervals));
            }
            continue;
        }
        if intervals + stack.len() + 2 > opts.max_intervals {
            return Err(QuadratureError::IntervalCap(opts.max_intervals));
        }
        let half = 0.5 * p.tol;
        stack.push(Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, whole: sl, tol: half });
        stack.push(Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, whole: sr, tol: half });
    }
    Ok(Integral { value, error_estimate, intervals })
}
