//! Numerical probe of the deficiency classification.
//!
//! A channel is deficient iff `K_ν(a r)` is square-integrable against `r dr`
//! near the origin (it always decays at infinity). The local exponent `p` of
//! `r |K_ν(a r)|²` is read off two small radii; integrability needs `p > -1`.

use serde::{Deserialize, Serialize};

use crate::angular::Channel;
use crate::error::Result;
use crate::extensions::PhysicalConfig;
use crate::specfun::bessel_k_any_order;

const PROBE_RADII: (f64, f64) = (1e-7, 1e-6);
/// Margin on `p > -1`; the logarithmic case `ν = 1` sits at `p = -1` up to `O(r²)`.
const EXPONENT_MARGIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegrabilityProbe {
    pub channel: Channel,
    pub exponent: f64,
    pub square_integrable: bool,
}

pub fn square_integrability_probe(
    channel: &Channel,
    config: &PhysicalConfig,
) -> Result<IntegrabilityProbe> {
    config.validate()?;
    let a = config.a();
    let density =
        |r: f64| -> Result<f64> { Ok(r * bessel_k_any_order(channel.nu(), a * r)?.norm_sqr()) };
    let (r1, r2) = PROBE_RADII;
    let exponent = (density(r2)? / density(r1)?).ln() / (r2 / r1).ln();
    Ok(IntegrabilityProbe {
        channel: *channel,
        exponent,
        square_integrable: exponent > -1.0 + EXPONENT_MARGIN,
    })
}
