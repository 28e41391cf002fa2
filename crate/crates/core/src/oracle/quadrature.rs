//! Adaptive tanh-sinh quadrature on `(0, ∞)` and on finite intervals.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Nodes closer than this (relative to the interval) to an endpoint are dropped.
const ENDPOINT_CUTOFF: f64 = 1e-100;
/// Finest tanh-sinh step is `2^-LEVELS`.
const LEVELS: u32 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Length scale `s` of the map `r = s t / (1 - t)`.
    pub scale: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
            scale: 1.0,
        }
    }
}

impl QuadratureConfig {
    pub fn with_scale(scale: f64) -> Self {
        Self {
            scale,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureEstimate {
    pub value: Complex64,
    pub error: f64,
    pub evaluations: usize,
    pub intervals: usize,
}

/// A point of `[a, b]` with its distances to both unit-interval ends kept exact.
#[derive(Clone, Copy)]
struct Node {
    t: f64,
    one_minus_t: f64,
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

fn panel<F>(f: &F, a: f64, b: f64, evaluations: &mut usize) -> Result<Panel>
where
    F: Fn(Node) -> Result<Complex64>,
{
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut eval = |node: Node, weight: f64| -> Result<(Complex64, f64)> {
        *evaluations += 1;
        let v = f(node)?;
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonConvergence(format!(
                "integrand is not finite at t = {:e}",
                node.t
            )));
        }
        Ok((v * weight, (v * weight).norm()))
    };

    // Level-0 centre term, then odd multiples of h at each refinement.
    let (centre, mut magnitude) = eval(
        Node {
            t: mid,
            one_minus_t: 1.0 - mid,
        },
        half * FRAC_PI_2,
    )?;
    let mut sum = centre;
    let mut previous = Complex64::new(0.0, 0.0);
    let mut h = 1.0;
    let mut estimate = Complex64::new(0.0, 0.0);
    for level in 0..=LEVELS {
        let (start, stride) = if level == 0 { (1usize, 1usize) } else { (1, 2) };
        let mut j = start;
        loop {
            let u = j as f64 * h;
            let v = FRAC_PI_2 * u.sinh();
            let weight = half * FRAC_PI_2 * u.cosh() / v.cosh().powi(2);
            // Distance from either end: half·(1 - tanh v) = half·2/(e^{2v}+1).
            let delta = half * 2.0 / ((2.0 * v).exp() + 1.0);
            if delta < ENDPOINT_CUTOFF * (b - a) || weight == 0.0 {
                break;
            }
            let left = Node {
                t: a + delta,
                one_minus_t: (1.0 - a) - delta,
            };
            let right = Node {
                t: b - delta,
                one_minus_t: (1.0 - b) + delta,
            };
            for node in [left, right] {
                let (term, size) = eval(node, weight)?;
                sum += term;
                magnitude += size;
            }
            j += stride;
        }
        estimate = sum * h;
        if level == LEVELS {
            break;
        }
        previous = estimate;
        h *= 0.5;
    }
    let error = (estimate - previous).norm() + 1e-15 * magnitude * h;
    Ok(Panel {
        a,
        b,
        value: estimate,
        error,
    })
}

fn adaptive<F>(f: F, a: f64, b: f64, config: &QuadratureConfig) -> Result<QuadratureEstimate>
where
    F: Fn(Node) -> Result<Complex64>,
{
    let mut evaluations = 0;
    let mut panels = vec![panel(&f, a, b, &mut evaluations)?];
    let mut splits = 0;
    loop {
        let value: Complex64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        if error <= config.abs_tol.max(config.rel_tol * value.norm()) {
            return Ok(QuadratureEstimate {
                value,
                error,
                evaluations,
                intervals: panels.len(),
            });
        }
        if splits >= config.max_subdivisions {
            return Err(Error::NonConvergence(format!(
                "quadrature error estimate {error:e} above tolerance after {splits} subdivisions"
            )));
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        panels.push(panel(&f, p.a, mid, &mut evaluations)?);
        panels.push(panel(&f, mid, p.b, &mut evaluations)?);
        splits += 1;
    }
}

/// `∫₀^∞ f(r) dr` through `r = s t/(1-t)`.
pub fn integrate_radial<F>(f: F, config: &QuadratureConfig) -> Result<QuadratureEstimate>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let s = config.scale;
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::Precondition(format!(
            "quadrature scale must be positive, got {s}"
        )));
    }
    adaptive(
        |node: Node| {
            let r = s * node.t / node.one_minus_t;
            let jacobian = s / (node.one_minus_t * node.one_minus_t);
            let v = f(r)?;
            // e^{-r} decays first; avoid 0·∞ when the Jacobian overflows.
            Ok(if v == Complex64::new(0.0, 0.0) {
                v
            } else {
                v * jacobian
            })
        },
        0.0,
        1.0,
        config,
    )
}

/// `∫₀^∞ f(r) dr` for a real integrand.
pub fn integrate_radial_real<F>(f: F, config: &QuadratureConfig) -> Result<QuadratureEstimate>
where
    F: Fn(f64) -> Result<f64>,
{
    integrate_radial(|r| f(r).map(|v| Complex64::new(v, 0.0)), config)
}

/// `∫_a^b f(x) dx` with the same engine.
pub fn integrate_interval<F>(
    f: F,
    a: f64,
    b: f64,
    config: &QuadratureConfig,
) -> Result<QuadratureEstimate>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if !(a < b && a.is_finite() && b.is_finite()) {
        return Err(Error::Precondition(format!("bad interval [{a}, {b}]")));
    }
    let width = b - a;
    adaptive(
        |node: Node| f(a + width * node.t).map(|v| v * width),
        0.0,
        1.0,
        config,
    )
}
