//! Bound-state energies from the small-`r` matching condition, solved numerically.
//!
//! A bound state `K_ν(c r)` lies in the domain iff it equals `X [K_ν(a r) + e^{iφ} K_ν(a* r)]`
//! up to terms vanishing with their derivative at the origin. Matching the two
//! leading small-`r` coefficients fixes `X` and leaves one real equation for `c`,
//! which is bracketed and bisected in `ln c`. No closed-form energy is used.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extensions::PhysicalConfig;
use crate::specfun::gamma_fn;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Search bracket for `c`, as multiples of `k₀`.
pub const BRACKET: (f64, f64) = (1e-6, 1e6);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatchingProblem {
    /// Bessel order `ν ∈ [0, 1)`.
    pub nu: f64,
    /// Extension phase `φ ∈ [-π, π)` of the channel.
    pub phase: f64,
    pub config: PhysicalConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatchingSolution {
    pub energy: f64,
    pub energy_over_kappa: f64,
    pub decay: f64,
    pub match_constant: Complex64,
    pub iterations: u32,
    /// Relative deviation of `c^{2ν}` from the `k₀^{2ν}` cosine-ratio identity.
    pub consistency_residual: f64,
}

/// Bisection on a decreasing-or-increasing scalar function of `x = ln c`.
fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<Option<(f64, u32)>> {
    let (mut lo, mut hi) = (lo, hi);
    let (mut f_lo, f_hi) = (f(lo), f(hi));
    if f_lo == 0.0 {
        return Ok(Some((lo, 0)));
    }
    if f_hi == 0.0 {
        return Ok(Some((hi, 0)));
    }
    if f_lo.signum() == f_hi.signum() {
        return Ok(None);
    }
    for iteration in 1..=400 {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 || mid <= lo || mid >= hi || (hi - lo) <= 1e-16 * mid.abs().max(1.0) {
            return Ok(Some((mid, iteration)));
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NonConvergence(
        "bisection did not close the bracket".into(),
    ))
}

/// Solves the matching condition. `Ok(None)` means no negative-energy solution exists.
pub fn matching_energy(problem: &MatchingProblem) -> Result<Option<MatchingSolution>> {
    let MatchingProblem { nu, phase, config } = *problem;
    config.validate()?;
    if !(0.0..1.0).contains(&nu) {
        return Err(Error::Precondition(format!(
            "matching needs 0 <= nu < 1, got {nu}"
        )));
    }
    if !(phase.is_finite() && (-PI..PI).contains(&phase)) {
        return Err(Error::Precondition(format!(
            "phase {phase} outside [-pi, pi)"
        )));
    }
    let k0 = config.k0();
    let half_a = config.a() * 0.5;
    let half_ac = config.a_conj() * 0.5;
    let e_phi = Complex64::from_polar(1.0, phase);
    let (x_lo, x_hi) = ((BRACKET.0 * k0).ln(), (BRACKET.1 * k0).ln());

    let (x, iterations, match_constant) = if nu == 0.0 {
        // K₀(z r) = -ln r - (ln(z/2) + γ) + O(r² ln r).
        let log_coeff = -(e_phi + 1.0);
        if log_coeff.norm() < 1e-14 {
            return Ok(None);
        }
        let x_const = Complex64::new(-1.0, 0.0) / log_coeff;
        let constant_ext = -(half_a.ln() + EULER_GAMMA) - e_phi * (half_ac.ln() + EULER_GAMMA);
        let target = x_const * constant_ext;
        if target.im.abs() > 1e-10 * (1.0 + target.norm()) {
            return Err(Error::NonConvergence(format!(
                "matched constant term is not real: {target}"
            )));
        }
        let f = |x: f64| -(x - 2f64.ln()) - EULER_GAMMA - target.re;
        match bisect(f, x_lo, x_hi)? {
            Some((x, it)) => (x, it, x_const),
            None => {
                return Err(Error::BracketExhausted {
                    lo: BRACKET.0 * k0,
                    hi: BRACKET.1 * k0,
                })
            }
        }
    } else {
        // K_ν(z r) = ½Γ(ν)(z r/2)^{-ν} + ½Γ(-ν)(z r/2)^{ν} + O(r^{2-ν}).
        let g_plus = gamma_fn(nu)?;
        let g_minus = gamma_fn(-nu)?;
        let singular_ext =
            ((-nu * half_a.ln()).exp() + e_phi * (-nu * half_ac.ln()).exp()) * (0.5 * g_plus);
        let regular_ext =
            ((nu * half_a.ln()).exp() + e_phi * (nu * half_ac.ln()).exp()) * (0.5 * g_minus);
        // Either coefficient vanishing puts the root at c = ∞ or c = 0.
        let singular_scale = g_plus.abs() * k0.powf(-nu);
        let regular_scale = g_minus.abs() * k0.powf(nu);
        if singular_ext.norm() < 1e-13 * singular_scale
            || regular_ext.norm() < 1e-13 * regular_scale
        {
            return Ok(None);
        }
        let ratio = regular_ext / singular_ext;
        if ratio.im.abs() > 1e-10 * ratio.norm().max(1e-300) {
            return Err(Error::NonConvergence(format!(
                "coefficient ratio is not real: {ratio}"
            )));
        }
        let ratio = ratio.re;
        let g = g_minus / g_plus;
        if ratio / g <= 0.0 {
            return Ok(None);
        }
        let f = |x: f64| g * (2.0 * nu * (x - 2f64.ln())).exp() - ratio;
        let (x, it) = match bisect(f, x_lo, x_hi)? {
            Some(found) => found,
            None => {
                return Err(Error::BracketExhausted {
                    lo: BRACKET.0 * k0,
                    hi: BRACKET.1 * k0,
                })
            }
        };
        let c = x.exp();
        let singular_k = 0.5 * g_plus * (c / 2.0).powf(-nu);
        (x, it, Complex64::new(singular_k, 0.0) / singular_ext)
    };

    let c = x.exp();
    let energy = config.energy_from_decay(c);
    let consistency_residual = if nu == 0.0 {
        let closed = k0 * (-0.25 * PI * (0.5 * phase).tan()).exp();
        (c - closed).abs() / closed
    } else {
        let lhs = c.powf(2.0 * nu);
        let rhs = k0.powf(2.0 * nu) * (0.5 * phase + nu * PI / 4.0).cos()
            / (0.5 * phase - nu * PI / 4.0).cos();
        (lhs - rhs).abs() / rhs.abs()
    };
    if !(consistency_residual <= 1e-10) {
        return Err(Error::NonConvergence(format!(
            "matched decay constant fails the cosine-ratio identity by {consistency_residual:e}"
        )));
    }
    Ok(Some(MatchingSolution {
        energy,
        energy_over_kappa: energy / config.kappa,
        decay: c,
        match_constant,
        iterations,
        consistency_residual,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(nu: f64, phase: f64) -> Result<Option<MatchingSolution>> {
        matching_energy(&MatchingProblem {
            nu,
            phase,
            config: PhysicalConfig::default(),
        })
    }

    #[test]
    fn theta_zero_reference_point() {
        let s = solve(0.0, 0.0).unwrap().unwrap();
        assert!((s.energy_over_kappa + 1.0).abs() < 1e-14);
        assert!((s.match_constant - Complex64::new(0.5, 0.0)).norm() < 1e-14);
        assert!(solve(0.0, -PI).unwrap().is_none());
    }

    #[test]
    fn half_order_reference_point() {
        let s = solve(0.5, 0.0).unwrap().unwrap();
        assert!((s.energy_over_kappa + 1.0).abs() < 1e-14);
        assert!(solve(0.5, 2.5).unwrap().is_none());
        assert!(solve(0.5, 0.75 * PI).unwrap().is_none());
    }

    #[test]
    fn far_outside_bracket() {
        assert!(matches!(
            solve(0.0, -PI + 1e-3),
            Err(Error::BracketExhausted { .. })
        ));
    }

    #[test]
    fn bad_input() {
        assert!(solve(1.0, 0.0).is_err());
        assert!(solve(0.5, PI).is_err());
    }
}
