//! Quadrature norms of bound states and deficiency vectors.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::extensions::{DeficiencyVector, PhysicalConfig};
use crate::specfun::{bessel_k, k_orthogonality_integral, BesselOrder};
use crate::spectrum::{bound_wavefunction, radial_density, BoundState};

use super::quadrature::{integrate_radial, integrate_radial_real, QuadratureConfig};

pub const NORM_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormReport {
    /// `∫₀^∞ r |ψ|² dr` by quadrature.
    pub quadrature: f64,
    pub quadrature_error: f64,
    /// The same integral from the closed-form `∫ x K_μ(ax) K_μ(bx) dx`.
    pub closed_form: f64,
    pub passed: bool,
}

fn report(quadrature: f64, quadrature_error: f64, closed_form: f64) -> NormReport {
    let passed =
        (quadrature - 1.0).abs() <= NORM_TOLERANCE && (closed_form - 1.0).abs() <= NORM_TOLERANCE;
    NormReport {
        quadrature,
        quadrature_error,
        closed_form,
        passed,
    }
}

/// Norm of a bound-state wavefunction (angular factor has unit norm).
pub fn verify_norm(state: &BoundState) -> Result<NormReport> {
    let profile = bound_wavefunction(state);
    let q = QuadratureConfig::with_scale(1.0 / (2.0 * profile.decay));
    let est = integrate_radial_real(|r| radial_density(&profile, r), &q)?;
    let c = Complex64::new(profile.decay, 0.0);
    let closed = profile.norm_constant.powi(2)
        * k_orthogonality_integral(BesselOrder::new(profile.nu)?, c, c)?.re;
    Ok(report(est.value.re, est.error, closed))
}

/// Norm of a deficiency vector, `N² ∫ r K_ν(a r) K_ν(a* r) dr`.
pub fn verify_deficiency_norm(
    vector: &DeficiencyVector,
    config: &PhysicalConfig,
) -> Result<NormReport> {
    let order = BesselOrder::new(vector.channel.nu())?;
    let scale = vector.argument_scale;
    let q = QuadratureConfig::with_scale(1.0 / config.k0());
    let est = integrate_radial(
        |r| {
            Ok(Complex64::new(
                r * bessel_k(order, scale * r)?.norm_sqr(),
                0.0,
            ))
        },
        &q,
    )?;
    let n2 = vector.prefactor * vector.prefactor;
    let closed = n2 * k_orthogonality_integral(order, scale, scale.conj())?.re;
    Ok(report(n2 * est.value.re, n2 * est.error, closed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::{AngularSector, Channel, Theta};
    use crate::extensions::{deficiency_vector, Sign};
    use crate::spectrum::{energy_m_minus1, energy_theta0};

    #[test]
    fn bound_state_norms() {
        let cfg = PhysicalConfig::default();
        let s = energy_theta0(0.3, &cfg).unwrap();
        assert!(verify_norm(&s).unwrap().passed);
        let s = energy_m_minus1(Theta::new(0.1).unwrap(), 0.2, &cfg)
            .unwrap()
            .unwrap();
        let r = verify_norm(&s).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn deficiency_norms() {
        let cfg = PhysicalConfig::new(1.0, 0.5, 3.0).unwrap();
        for (theta, m) in [(0.0, 0), (0.3, 0), (0.3, -1)] {
            let ch = Channel::new(AngularSector::untwisted(Theta::new(theta).unwrap()), m);
            for sign in [Sign::Plus, Sign::Minus] {
                let v = deficiency_vector(&ch, sign, &cfg).unwrap();
                let r = verify_deficiency_norm(&v, &cfg).unwrap();
                assert!(r.passed, "{theta} {m}: {r:?}");
            }
        }
    }
}
