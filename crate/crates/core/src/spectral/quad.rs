//! Deterministic quadrature rules used by the spectral checks.

use alloc::vec::Vec;

/// Integrates `f` over `[0, pi]` with the `nodes`-point interior rule
/// `theta_i = i pi / (nodes + 1)`, uniform weight `pi / (nodes + 1)`.
///
/// Under `x = cos(theta)` this is the Gauss-Chebyshev rule of the second
/// kind, so it is exact whenever `f(theta) = g(cos theta) sin^2(theta)` with
/// `g` a polynomial of degree at most `2 * nodes - 1`. Every integrand in
/// this crate's integral formulas has that shape.
pub fn interior_rule(mut f: impl FnMut(f64) -> f64, nodes: usize) -> f64 {
    assert!(nodes >= 1, "need at least one node");
    let h = core::f64::consts::PI / (nodes + 1) as f64;
    let mut sum = 0.0;
    for i in 1..=nodes {
        sum += f(i as f64 * h);
    }
    h * sum
}

/// Nodes and weights of the `q`-point Gauss-Legendre rule on `[-1, 1]`,
/// found by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre_nodes(q: usize) -> Vec<(f64, f64)> {
    assert!(q >= 1);
    let mut out = Vec::with_capacity(q);
    let n = q as f64;
    for i in 1..=q.div_ceil(2) {
        let mut x = libm::cos(core::f64::consts::PI * (i as f64 - 0.25) / (n + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(q, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if libm::fabs(dx) < 1e-15 {
                let (p, d) = legendre_with_derivative(q, x);
                dp = d;
                x -= p / d;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((-x, w));
        if 2 * i != q + 1 {
            out.push((x, w));
        }
    }
    out.sort_unstable_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

fn legendre_with_derivative(q: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=q {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = q as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrates `f` over `[a, b]` with the `q`-point Gauss-Legendre rule.
pub fn gauss_legendre(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, q: usize) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for &(x, w) in &gauss_legendre_nodes(q) {
        sum += w * f(mid + half * x);
    }
    half * sum
}
