//! Closed-form bound states of the rotationally invariant extensions.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angular::{AngularSector, Channel, Theta};
use crate::error::{Error, Result};
use crate::extensions::{ExtensionParams, PhysicalConfig};
use crate::specfun::{bessel_k, BesselOrder};

/// Distance from `η = -π` treated as the singular point itself.
pub const SINGULAR_ETA_TOLERANCE: f64 = 1e-12;

/// Which closed form produced a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Theta0,
    M0,
    MMinus1,
    TimeReversalHalf,
}

/// A bound state `E < 0` with its channel and the constant matching
/// `K_ν(c r)` to the deficiency combination.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundState {
    pub family: Family,
    pub energy: f64,
    pub energy_over_kappa: f64,
    pub decay: f64,
    pub channel: Channel,
    /// Second channel of a doubly degenerate level (`m = -1` at `θ = 1/2`).
    pub partner: Option<Channel>,
    pub degeneracy: u32,
    /// The extension phase of the channel (`η` or `ρ`).
    pub phase: f64,
    pub match_constant: Complex64,
}

/// Existence interval `(lo, hi)` for the phase attached to a channel of order `ν ∈ (0,1)`.
/// Both ends are excluded: at `hi` the energy reaches zero, at `lo` it diverges.
pub fn existence_window(nu: f64) -> (f64, f64) {
    (-PI + nu * FRAC_PI_2, PI - nu * FRAC_PI_2)
}

/// Window for the `m = 0` channel: `ρ ∈ (-π + θπ/2, π - θπ/2)`.
pub fn window_m0(theta: f64) -> (f64, f64) {
    existence_window(theta)
}

/// Window for the `m = -1` channel: `η ∈ (-(1+θ)π/2, (1+θ)π/2)`.
pub fn window_m_minus1(theta: f64) -> (f64, f64) {
    existence_window(1.0 - theta)
}

/// Window for the time-reversal-invariant `θ = 1/2` family: `η ∈ (-3π/4, 3π/4)`.
pub fn window_half_t() -> (f64, f64) {
    existence_window(0.5)
}

fn inside(x: f64, (lo, hi): (f64, f64)) -> bool {
    x > lo && x < hi
}

fn check_phase(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && (-PI..PI).contains(&x) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{name} = {x} outside [-pi, pi)"
        )))
    }
}

fn check_open_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < 1.0 {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "theta must lie in (0, 1), got {theta}"
        )))
    }
}

/// `ln(|E|/κ) = -(π/2) tan(η/2)` for the `θ = 0` family; finite wherever `η ≠ -π`.
pub fn theta0_log_binding(eta: f64) -> f64 {
    -FRAC_PI_2 * (0.5 * eta).tan()
}

/// `X = e^{-iφ/2} / √(2(cos φ + cos(νπ/2)))`.
pub fn match_constant(nu: f64, phase: f64) -> Complex64 {
    Complex64::from_polar(1.0, -0.5 * phase) / (2.0 * (phase.cos() + (nu * FRAC_PI_2).cos())).sqrt()
}

fn finite_energy(energy: f64, what: &str) -> Result<f64> {
    if !energy.is_finite() {
        Err(Error::EnergyOverflow(format!(
            "{what}: |E| exceeds the floating-point range"
        )))
    } else if energy == 0.0 {
        Err(Error::EnergyOverflow(format!(
            "{what}: |E| underflows to zero"
        )))
    } else {
        Ok(energy)
    }
}

fn state(
    family: Family,
    channel: Channel,
    phase: f64,
    energy_over_kappa: f64,
    match_constant: Complex64,
    config: &PhysicalConfig,
) -> BoundState {
    let energy = energy_over_kappa * config.kappa;
    BoundState {
        family,
        energy,
        energy_over_kappa,
        decay: config.decay_from_energy(energy),
        channel,
        partner: None,
        degeneracy: 1,
        phase,
        match_constant,
    }
}

/// `θ = 0`: `E = -κ exp(-(π/2) tan(η/2))`, one state for every `η ≠ -π`.
pub fn energy_theta0(eta: f64, config: &PhysicalConfig) -> Result<BoundState> {
    config.validate()?;
    check_phase("eta", eta)?;
    if (eta + PI).abs() <= SINGULAR_ETA_TOLERANCE {
        return Err(Error::NoFiniteBoundState);
    }
    let e_over_kappa = -theta0_log_binding(eta).exp();
    finite_energy(
        e_over_kappa * config.kappa,
        &format!("theta = 0, eta = {eta}"),
    )?;
    let x = Complex64::new(1.0, 0.0) / (Complex64::from_polar(1.0, eta) + 1.0);
    let channel = Channel::new(AngularSector::untwisted(Theta::ZERO), 0);
    Ok(state(Family::Theta0, channel, eta, e_over_kappa, x, config))
}

fn fractional_energy(nu: f64, phase: f64) -> f64 {
    let ratio = (0.5 * phase + nu * FRAC_PI_4).cos() / (0.5 * phase - nu * FRAC_PI_4).cos();
    -ratio.powf(1.0 / nu)
}

fn channel_state(
    family: Family,
    channel: Channel,
    phase: f64,
    config: &PhysicalConfig,
) -> Result<Option<BoundState>> {
    let nu = channel.nu();
    if !inside(phase, existence_window(nu)) {
        return Ok(None);
    }
    let e_over_kappa = fractional_energy(nu, phase);
    finite_energy(
        e_over_kappa * config.kappa,
        &format!("nu = {nu}, phase = {phase}"),
    )?;
    Ok(Some(state(
        family,
        channel,
        phase,
        e_over_kappa,
        match_constant(nu, phase),
        config,
    )))
}

/// `m = 0`, `θ ∈ (0,1)`: `E = -κ (cos(ρ/2 + θπ/4) / cos(ρ/2 - θπ/4))^{1/θ}`.
pub fn energy_m0(theta: Theta, rho: f64, config: &PhysicalConfig) -> Result<Option<BoundState>> {
    config.validate()?;
    check_open_theta(theta.value())?;
    check_phase("rho", rho)?;
    channel_state(
        Family::M0,
        Channel::new(AngularSector::untwisted(theta), 0),
        rho,
        config,
    )
}

/// `m = -1`, `θ ∈ (0,1)`: `E = -κ (cos(η/2 + (1-θ)π/4) / cos(η/2 - (1-θ)π/4))^{1/(1-θ)}`.
pub fn energy_m_minus1(
    theta: Theta,
    eta: f64,
    config: &PhysicalConfig,
) -> Result<Option<BoundState>> {
    config.validate()?;
    check_open_theta(theta.value())?;
    check_phase("eta", eta)?;
    channel_state(
        Family::MMinus1,
        Channel::new(AngularSector::untwisted(theta), -1),
        eta,
        config,
    )
}

/// `θ = 1/2`, `ρ = η`: `E = -κ (cos(η/2 + π/8) / cos(η/2 - π/8))²`, doubly degenerate.
pub fn spectrum_half_t(eta: f64, config: &PhysicalConfig) -> Result<Option<BoundState>> {
    config.validate()?;
    check_phase("eta", eta)?;
    let sector = AngularSector::untwisted(Theta::half());
    let found = channel_state(
        Family::TimeReversalHalf,
        Channel::new(sector, 0),
        eta,
        config,
    )?;
    Ok(found.map(|mut s| {
        s.partner = Some(Channel::new(sector, -1));
        s.degeneracy = 2;
        s
    }))
}

/// All bound states of the extension, lowest energy first.
pub fn bound_states(
    sector: &AngularSector,
    params: &ExtensionParams,
    config: &PhysicalConfig,
) -> Result<Vec<BoundState>> {
    params.validate_for(sector)?;
    if sector.lambda != 0.0 {
        return Err(Error::Precondition(
            "bound states are tabulated for lambda = 0".into(),
        ));
    }
    let mut states = match *params {
        ExtensionParams::Theta0 { eta } => match energy_theta0(eta, config) {
            Ok(s) => vec![s],
            Err(Error::NoFiniteBoundState) => vec![],
            Err(e) => return Err(e),
        },
        ExtensionParams::ThetaGeneral { rho, eta } => energy_m0(sector.theta, rho, config)?
            .into_iter()
            .chain(energy_m_minus1(sector.theta, eta, config)?)
            .collect(),
        ExtensionParams::TimeReversalHalf { eta } => {
            spectrum_half_t(eta, config)?.into_iter().collect()
        }
    };
    states.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    Ok(states)
}

/// Number of bound states counted with degeneracy; decided from the windows alone.
pub fn count_bound_states(sector: &AngularSector, params: &ExtensionParams) -> Result<u32> {
    params.validate_for(sector)?;
    let theta = sector.theta.value();
    Ok(match *params {
        ExtensionParams::Theta0 { eta } => u32::from((eta + PI).abs() > SINGULAR_ETA_TOLERANCE),
        ExtensionParams::ThetaGeneral { rho, eta } => {
            u32::from(inside(rho, window_m0(theta)))
                + u32::from(inside(eta, window_m_minus1(theta)))
        }
        ExtensionParams::TimeReversalHalf { eta } => 2 * u32::from(inside(eta, window_half_t())),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadialForm {
    /// `N K_ν(c r)`.
    MacDonald,
    /// `√(2c) e^{-cr} / √r`, the `ν = 1/2` case written out.
    HalfOrder,
}

/// Normalised radial factor of a bound state: `∫₀^∞ r |R(r)|² dr = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialProfile {
    pub nu: f64,
    pub decay: f64,
    pub norm_constant: f64,
    pub form: RadialForm,
}

impl RadialProfile {
    pub fn evaluate(&self, r: f64) -> Result<Complex64> {
        match self.form {
            RadialForm::HalfOrder => Ok(Complex64::new(
                (2.0 * self.decay).sqrt() * (-self.decay * r).exp() / r.sqrt(),
                0.0,
            )),
            RadialForm::MacDonald => {
                let k = bessel_k(
                    BesselOrder::new(self.nu)?,
                    Complex64::new(self.decay * r, 0.0),
                )?;
                Ok(k * self.norm_constant)
            }
        }
    }
}

/// `N² = 2c² sin(νπ)/(πν)`, and `2c²` at `ν = 0`.
pub fn norm_constant(nu: f64, decay: f64) -> f64 {
    let shape = if nu == 0.0 {
        1.0
    } else {
        (nu * PI).sin() / (PI * nu)
    };
    (2.0 * decay * decay * shape).sqrt()
}

pub fn bound_wavefunction(state: &BoundState) -> RadialProfile {
    let nu = state.channel.nu();
    let form = if state.channel.theta().is_half() {
        RadialForm::HalfOrder
    } else {
        RadialForm::MacDonald
    };
    RadialProfile {
        nu,
        decay: state.decay,
        norm_constant: norm_constant(nu, state.decay),
        form,
    }
}

/// `W²(r) = r |Ψ(r)|²`.
pub fn radial_density(profile: &RadialProfile, r: f64) -> Result<f64> {
    Ok(r * profile.evaluate(r)?.norm_sqr())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialSign {
    Attractive,
    Vanishing,
    Repulsive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EffectivePotential {
    pub value: f64,
    /// `(θ + m)² - 1/4`.
    pub coefficient: f64,
    pub sign: PotentialSign,
}

/// `(ℏ²/2M) ((θ + m)² - 1/4) / r²`.
pub fn effective_potential(
    channel: &Channel,
    r: f64,
    config: &PhysicalConfig,
) -> Result<EffectivePotential> {
    config.validate()?;
    if !(r > 0.0) {
        return Err(Error::Precondition(format!(
            "effective potential needs r > 0, got {r}"
        )));
    }
    let x = channel.angular_exponent();
    let coefficient = x * x - 0.25;
    let sign = if coefficient.abs() <= 1e-12 {
        PotentialSign::Vanishing
    } else if coefficient < 0.0 {
        PotentialSign::Attractive
    } else {
        PotentialSign::Repulsive
    };
    let value = config.hbar * config.hbar / (2.0 * config.mass) * coefficient / (r * r);
    Ok(EffectivePotential {
        value,
        coefficient,
        sign,
    })
}

/// `ℏ(θ + m)` for each channel of the state (two values for the degenerate `θ = 1/2` level).
pub fn angular_momentum_of_state(state: &BoundState, config: &PhysicalConfig) -> Result<Vec<f64>> {
    if state.channel.sector.lambda != 0.0 {
        return Err(Error::Precondition(
            "angular momentum is read off for lambda = 0".into(),
        ));
    }
    Ok(std::iter::once(state.channel)
        .chain(state.partner)
        .map(|ch| config.hbar * ch.angular_exponent())
        .collect())
}
