//! Special functions: gamma, `I_ν`, `K_ν` and the closed-form `∫ x K_μ K_μ` integral.

mod bessel;
mod gamma;
mod integrals;

pub use bessel::{
    bessel_i, bessel_k, bessel_k_asymptotic, bessel_k_reflection, BesselOrder, ComplexValue,
    EXP_OVERFLOW_ARG, NEAR_INTEGER, SERIES_RADIUS, TEMME_RADIUS,
};
pub use gamma::gamma_fn;
pub use integrals::k_orthogonality_integral;

/// `K_ν(z)` for a signed order in `(-2, 2)`, via `K_{-ν} = K_ν`.
pub fn bessel_k_signed(nu: f64, z: ComplexValue) -> crate::Result<ComplexValue> {
    bessel_k(BesselOrder::from_signed(nu)?, z)
}

/// `K_ν(z)` for any real order, by upward recurrence from the fractional part.
pub fn bessel_k_any_order(nu: f64, z: ComplexValue) -> crate::Result<ComplexValue> {
    let nu = nu.abs();
    if nu < 2.0 {
        return bessel_k(BesselOrder::new(nu)?, z);
    }
    let frac = nu - nu.floor();
    let mut lower = bessel_k(BesselOrder::new(frac)?, z)?;
    let mut upper = bessel_k(BesselOrder::new(frac + 1.0)?, z)?;
    let mut mu = frac + 1.0;
    while mu + 0.5 < nu {
        let next = lower + upper * (2.0 * mu) / z;
        lower = upper;
        upper = next;
        mu += 1.0;
    }
    if !(upper.re.is_finite() && upper.im.is_finite()) {
        return Err(crate::Error::Overflow(format!("K_{nu}({z})")));
    }
    Ok(upper)
}
