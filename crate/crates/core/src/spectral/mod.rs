//! Spectral view of the counting operators and the integral formula.
//!
//! The multiplication operators `M_a` are commuting 0/1 Toeplitz matrices
//! with joint eigenvectors `v(theta) = (sin theta, sin 2theta, ...)` and
//! eigenvalues `lambda_a(theta) = sin((a+1)theta) / sin(theta)`. Expanding
//! `e_0` over the eigenvectors turns the count of a problem `(a_1, ..., a_m)`
//! into the integral `(2/pi) int_0^pi prod_i lambda_{a_i}(theta) sin^2 theta
//! dtheta`, which this module evaluates numerically, together with the
//! integral bounds used for the all-2s family.

pub mod quad;

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::problem::SchubertProblem;
use crate::repring::kostka;

use core::f64::consts::PI;

/// Switch-over distance from the interval endpoints below which
/// [`lambda_eval`] uses the Chebyshev recurrence instead of the sine ratio.
const ENDPOINT_GUARD: f64 = 1e-6;

/// The eigenvalue `lambda_a(theta) = sin((a+1)theta) / sin(theta)`, with the
/// removable singularities evaluated by their limits: `a + 1` at `0` and
/// `(-1)^a (a + 1)` at `pi`. Near the endpoints the equivalent Chebyshev
/// form `U_a(cos theta)` is used to avoid the 0/0.
pub fn lambda_eval(a: u32, theta: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::Domain);
    }
    Ok(lambda_unchecked(a, theta))
}

fn lambda_unchecked(a: u32, theta: f64) -> f64 {
    if theta < ENDPOINT_GUARD || PI - theta < ENDPOINT_GUARD {
        chebyshev_u(a, libm::cos(theta))
    } else {
        libm::sin((a as f64 + 1.0) * theta) / libm::sin(theta)
    }
}

/// Chebyshev polynomial of the second kind, `U_a(x)`.
fn chebyshev_u(a: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    let mut cur = 2.0 * x;
    match a {
        0 => prev,
        1 => cur,
        _ => {
            for _ in 2..=a {
                (prev, cur) = (cur, 2.0 * x * cur - prev);
            }
            cur
        }
    }
}

fn powi(x: f64, e: u32) -> f64 {
    let mut base = x;
    let mut e = e;
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Finite truncation of the Toeplitz matrix of the operator `M_a`:
/// entry `(b, j)` is 1 iff `j` lies in `{b+a, b+a-2, ..., |b-a|}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedToeplitz {
    a: u32,
    size: usize,
}

impl TruncatedToeplitz {
    pub fn new(a: u32, size: usize) -> Self {
        TruncatedToeplitz { a, size }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, b: usize, j: usize) -> bool {
        debug_assert!(b < self.size && j < self.size);
        let (b, j, a) = (b as u64, j as u64, u64::from(self.a));
        b.abs_diff(j) <= a && b + j >= a && (b + j + a) % 2 == 0
    }

    /// Matrix-vector product against the truncation.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.size);
        (0..self.size)
            .map(|b| {
                // |b - a| already has the parity of b + a; stepping by 2 keeps it
                let mut j = b.abs_diff(self.a as usize);
                let hi = (b + self.a as usize).min(self.size - 1);
                let mut sum = 0.0;
                while j <= hi {
                    sum += v[j];
                    j += 2;
                }
                sum
            })
            .collect()
    }
}

/// Residual of the eigenvector identity on the truncated operator: builds
/// `v(theta) = (sin theta, ..., sin(size * theta))` and returns the largest
/// deviation `|(M_a v)_b - lambda_a(theta) v_b|` over interior rows
/// (`b + a < size`); boundary rows are truncation artifacts and excluded.
pub fn eigen_residual(a: u32, theta: f64, size: usize) -> Result<f64> {
    if size <= (a + 2) as usize {
        return Err(Error::TruncationTooSmall);
    }
    let lambda = lambda_eval(a, theta)?;
    let v: Vec<f64> = (0..size)
        .map(|j| libm::sin((j as f64 + 1.0) * theta))
        .collect();
    let image = TruncatedToeplitz::new(a, size).apply(&v);
    let mut worst: f64 = 0.0;
    for b in 0..size - a as usize {
        let r = libm::fabs(image[b] - lambda * v[b]);
        if r > worst {
            worst = r;
        }
    }
    Ok(worst)
}

/// Residual of the eigenvector-completeness identity
/// `(2/pi) int_0^pi sin((j+1)theta) sin((k+1)theta) dtheta = delta_{jk}`,
/// evaluated with the interior rule at the given node count.
pub fn basis_reconstruction_residual(j: u32, k: u32, nodes: usize) -> f64 {
    let value = 2.0 / PI
        * quad::interior_rule(
            |t| libm::sin((j as f64 + 1.0) * t) * libm::sin((k as f64 + 1.0) * t),
            nodes,
        );
    let target = if j == k { 1.0 } else { 0.0 };
    libm::fabs(value - target)
}

/// A numeric estimate of a count integral next to its exact reference.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub nodes: usize,
    pub exact: Option<BigUint>,
    pub abs_residual: Option<f64>,
}

impl QuadratureResult {
    /// Attaches an exact reference count and the corresponding residual.
    pub fn with_exact(mut self, exact: BigUint) -> Self {
        let reference = exact.to_f64().unwrap_or(f64::INFINITY);
        self.abs_residual = Some(libm::fabs(self.value - reference));
        self.exact = Some(exact);
        self
    }
}

/// Default node count for [`kostka_integral`]: `4 * sum + 64`, far past the
/// rule's exactness threshold for the degree-`sum + 2` integrand.
pub fn default_nodes(p: &SchubertProblem) -> usize {
    4 * p.sum() as usize + 64
}

/// Evaluates the integral formula
/// `K = (2/pi) int_0^pi prod_i lambda_{a_i}(theta) sin^2 theta dtheta`
/// and attaches the exact count. A residual below 0.5 pins the rounded
/// estimate to the exact value.
pub fn kostka_integral(p: &SchubertProblem, nodes: usize) -> Result<QuadratureResult> {
    if !p.is_valid() {
        return Err(Error::InvalidProblem);
    }
    let value = 2.0 / PI
        * quad::interior_rule(
            |t| {
                let s = libm::sin(t);
                p.conditions()
                    .iter()
                    .fold(s * s, |acc, &a| acc * lambda_unchecked(a, t))
            },
            nodes,
        );
    Ok(QuadratureResult {
        value,
        nodes,
        exact: None,
        abs_residual: None,
    }
    .with_exact(kostka(p)))
}

/// `F(theta) = 2 cos(4 theta) - cos(6 theta) - 1`, the sign-carrying factor
/// in the all-2s difference integral. Zeroes on `[0, pi/2]` at `0`, `pi/12`,
/// and `5 pi/12`.
pub fn f_eval(theta: f64) -> f64 {
    2.0 * libm::cos(4.0 * theta) - libm::cos(6.0 * theta) - 1.0
}

/// The two sides of the decisive bound for the all-2s family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct A2Bounds {
    /// `int_0^{pi/12} lambda^m F`
    pub lhs: f64,
    /// `int_{pi/12}^{pi/3} |lambda^m F|`
    pub rhs_integral: f64,
    /// `rhs_integral + 2 pi / 3`
    pub rhs: f64,
    /// Whether `lhs > rhs` holds.
    pub holds: bool,
}

/// Evaluates both sides of `int_0^{pi/12} lambda^m F > int_{pi/12}^{pi/3}
/// |lambda^m F| + 2 pi / 3`.
///
/// The absolute-value integral is taken on a panel whose endpoints are the
/// known sign changes (`F` vanishes at `pi/12`, `lambda` at `pi/3`), so each
/// panel integrand is smooth and Gauss-Legendre converges spectrally.
pub fn a2_bound_integrals(m: u32) -> A2Bounds {
    assert!(m >= 1);
    let q = 64 + 2 * m as usize;
    let integrand = |t: f64| powi(lambda_unchecked(2, t), m) * f_eval(t);
    let lhs = quad::gauss_legendre(integrand, 0.0, PI / 12.0, q);
    let rhs_integral = quad::gauss_legendre(|t| libm::fabs(integrand(t)), PI / 12.0, PI / 3.0, q);
    let rhs = rhs_integral + 2.0 * PI / 3.0;
    A2Bounds {
        lhs,
        rhs_integral,
        rhs,
        holds: lhs > rhs,
    }
}

/// Default node count for [`difference_integral_a2`], matching the integral
/// formula's heuristic on the sum `2m + 4`.
pub fn difference_default_nodes(m: u32) -> usize {
    4 * (2 * m as usize + 4) + 64
}

/// The signed difference `K(2^m, 4) - K(2^m, 1, 1)` as the integral
/// `(1/pi) int_0^pi lambda_2^m(theta) F(theta) dtheta`; rounds to the exact
/// difference.
pub fn difference_integral_a2(m: u32, nodes: usize) -> f64 {
    quad::interior_rule(|t| powi(lambda_unchecked(2, t), m) * f_eval(t), nodes) / PI
}
