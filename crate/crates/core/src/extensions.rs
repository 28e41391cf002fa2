//! Deficiency subspaces and the self-adjoint extensions of the radial problem.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angular::{AngularFunction, AngularSector, Channel, Theta};
use crate::error::{Error, Result};
use crate::specfun::{bessel_k, BesselOrder};

/// Tolerance used when comparing extension angles (for instance `ρ = η`).
pub const ANGLE_TOLERANCE: f64 = 1e-12;

/// Default tolerance on `|χ(0)|` and `|χ'(0)|` in [`domain_element`].
pub const BOUNDARY_TOLERANCE: f64 = 1e-6;

/// `ℏ`, the mass `M` and the deficiency scale `κ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConfig {
    pub hbar: f64,
    pub mass: f64,
    pub kappa: f64,
}

impl Default for PhysicalConfig {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            mass: 0.5,
            kappa: 1.0,
        }
    }
}

impl PhysicalConfig {
    pub fn new(hbar: f64, mass: f64, kappa: f64) -> Result<Self> {
        for (name, v) in [("hbar", hbar), ("mass", mass), ("kappa", kappa)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(Self { hbar, mass, kappa })
    }

    pub fn validate(&self) -> Result<()> {
        Self::new(self.hbar, self.mass, self.kappa).map(|_| ())
    }

    /// `k₀ = √(2Mκ)/ℏ`.
    pub fn k0(&self) -> f64 {
        (2.0 * self.mass * self.kappa).sqrt() / self.hbar
    }

    /// `a = √(-i 2Mκ)/ℏ = k₀ e^{-iπ/4}` on the principal branch.
    pub fn a(&self) -> Complex64 {
        Complex64::new(0.0, -2.0 * self.mass * self.kappa).sqrt() / self.hbar
    }

    /// `a* = √(i 2Mκ)/ℏ`.
    pub fn a_conj(&self) -> Complex64 {
        Complex64::new(0.0, 2.0 * self.mass * self.kappa).sqrt() / self.hbar
    }

    /// `E = -ℏ²c²/2M` for decay constant `c`.
    pub fn energy_from_decay(&self, c: f64) -> f64 {
        -self.hbar * self.hbar * c * c / (2.0 * self.mass)
    }

    /// `c = √(2M|E|)/ℏ`.
    pub fn decay_from_energy(&self, energy: f64) -> f64 {
        (2.0 * self.mass * energy.abs()).sqrt() / self.hbar
    }
}

/// Deficiency indices `(n₊, n₋)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyIndex {
    pub n_plus: u32,
    pub n_minus: u32,
}

/// `(1,1)` for `m = 0`, and for `m = -1` when `θ ≠ 0`; `(0,0)` otherwise.
pub fn classify_channel(channel: &Channel) -> DeficiencyIndex {
    let deficient = channel.m == 0 || (channel.m == -1 && !channel.theta().is_zero());
    let n = u32::from(deficient);
    DeficiencyIndex {
        n_plus: n,
        n_minus: n,
    }
}

/// Channels with nonzero deficiency, in the order `m = 0, m = -1`.
pub fn deficient_channels(sector: &AngularSector) -> Vec<Channel> {
    [0, -1]
        .into_iter()
        .map(|m| Channel::new(*sector, m))
        .filter(|ch| classify_channel(ch).n_plus > 0)
        .collect()
}

/// Sum over channels: `(1,1)` at `θ = 0`, `(2,2)` for `θ ∈ (0,1)`.
pub fn global_deficiency(sector: &AngularSector) -> DeficiencyIndex {
    let n = deficient_channels(sector).len() as u32;
    DeficiencyIndex {
        n_plus: n,
        n_minus: n,
    }
}

/// Which deficiency subspace: `H*ψ = ±iκψ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// A normalised deficiency vector `Ψ±(r, φ) = N K_ν(a r) e^{i(θ+m)φ}`,
/// with `a = √(∓i 2Mκ)/ℏ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeficiencyVector {
    pub channel: Channel,
    pub sign: Sign,
    pub prefactor: f64,
    pub argument_scale: Complex64,
}

impl DeficiencyVector {
    pub fn radial(&self, r: f64) -> Result<Complex64> {
        let nu = BesselOrder::new(self.channel.nu())?;
        Ok(bessel_k(nu, self.argument_scale * r)? * self.prefactor)
    }

    pub fn angular_factor(&self, phi: f64) -> Complex64 {
        Complex64::from_polar(1.0, self.channel.angular_exponent() * phi)
    }

    pub fn evaluate(&self, r: f64, phi: f64) -> Result<Complex64> {
        Ok(self.radial(r)? * self.angular_factor(phi))
    }
}

/// Weight under the square root of the deficiency prefactor.
fn deficiency_weight(channel: &Channel) -> f64 {
    let theta = channel.theta();
    if theta.is_zero() {
        1.0
    } else if channel.m == 0 {
        (theta.value() * FRAC_PI_2).cos()
    } else {
        (theta.value() * FRAC_PI_2).sin()
    }
}

/// The unit-norm solution of `H*ψ = ±iκψ` in a deficient channel.
pub fn deficiency_vector(
    channel: &Channel,
    sign: Sign,
    config: &PhysicalConfig,
) -> Result<DeficiencyVector> {
    config.validate()?;
    if classify_channel(channel).n_plus == 0 {
        return Err(Error::NotDeficient {
            theta: channel.theta().value(),
            m: channel.m,
        });
    }
    let prefactor = (2.0 / config.hbar)
        * (2.0 * config.mass * config.kappa * deficiency_weight(channel) / PI).sqrt();
    let argument_scale = match sign {
        Sign::Plus => config.a(),
        Sign::Minus => config.a_conj(),
    };
    Ok(DeficiencyVector {
        channel: *channel,
        sign,
        prefactor,
        argument_scale,
    })
}

/// Extension parameters, one variant per sector family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ExtensionParams {
    /// `θ = 0`: the single phase `η`.
    Theta0 { eta: f64 },
    /// `θ ∈ (0,1)`, rotationally invariant: `ρ` on `m = 0`, `η` on `m = -1`.
    ThetaGeneral { rho: f64, eta: f64 },
    /// `θ = 1/2` and time-reversal invariant: `ρ = η`.
    TimeReversalHalf { eta: f64 },
}

fn check_angle(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && (-PI..PI).contains(&x) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{name} = {x} outside [-pi, pi)"
        )))
    }
}

impl ExtensionParams {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Theta0 { eta } | Self::TimeReversalHalf { eta } => check_angle("eta", eta),
            Self::ThetaGeneral { rho, eta } => {
                check_angle("rho", rho)?;
                check_angle("eta", eta)
            }
        }
    }

    /// Checks the variant against the sector and the angles against `[-π, π)`.
    pub fn validate_for(&self, sector: &AngularSector) -> Result<()> {
        self.validate()?;
        let theta = sector.theta;
        match self {
            Self::Theta0 { .. } if !theta.is_zero() => Err(Error::VariantMismatch(format!(
                "theta0 parameters given for theta = {theta}"
            ))),
            Self::ThetaGeneral { .. } if theta.is_zero() => Err(Error::VariantMismatch(
                "(rho, eta) parameters given for theta = 0".into(),
            )),
            Self::TimeReversalHalf { .. } if !theta.is_half() => Err(Error::VariantMismatch(
                format!("time-reversal-half parameters given for theta = {theta}"),
            )),
            _ => Ok(()),
        }
    }

    /// The phase attached to channel `m` (`ρ` for `m = 0`, `η` otherwise).
    pub fn phase_for(&self, m: i64) -> f64 {
        match *self {
            Self::Theta0 { eta } | Self::TimeReversalHalf { eta } => eta,
            Self::ThetaGeneral { rho, eta } => {
                if m == 0 {
                    rho
                } else {
                    eta
                }
            }
        }
    }
}

/// The unitary `U: K₊ → K₋` as a 2×2 matrix on the `(m = 0, m = -1)` basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtensionMatrix {
    pub entries: [[Complex64; 2]; 2],
}

impl ExtensionMatrix {
    /// General four-parameter family; rejects non-unitary input.
    pub fn general(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let m = Self { entries };
        let [[a, b], [c, d]] = entries;
        let col0 = a.norm_sqr() + c.norm_sqr();
        let col1 = b.norm_sqr() + d.norm_sqr();
        let cross = a.conj() * b + c.conj() * d;
        if (col0 - 1.0).abs() > 1e-12 || (col1 - 1.0).abs() > 1e-12 || cross.norm() > 1e-12 {
            return Err(Error::Precondition(
                "extension matrix is not unitary".into(),
            ));
        }
        Ok(m)
    }

    /// The diagonal matrix `diag(e^{iρ}, e^{iη})` of the rotationally invariant family.
    pub fn from_params(params: &ExtensionParams) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let (p0, p1) = match *params {
            ExtensionParams::Theta0 { eta } => (eta, 0.0),
            ExtensionParams::ThetaGeneral { rho, eta } => (rho, eta),
            ExtensionParams::TimeReversalHalf { eta } => (eta, eta),
        };
        let mut entries = [
            [Complex64::from_polar(1.0, p0), zero],
            [zero, Complex64::from_polar(1.0, p1)],
        ];
        if matches!(params, ExtensionParams::Theta0 { .. }) {
            entries[1][1] = Complex64::new(1.0, 0.0);
        }
        Self { entries }
    }

    /// Diagonal matrices commute with rotations; only those have a closed-form spectrum here.
    pub fn is_rotationally_invariant(&self) -> bool {
        self.entries[0][1].norm() <= ANGLE_TOLERANCE && self.entries[1][0].norm() <= ANGLE_TOLERANCE
    }
}

/// Coefficients of the deficiency part of a domain element.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum DomainCoefficients {
    /// `C` for `θ = 0`.
    Single(Complex64),
    /// `(A, B)` on the `m = 0` and `m = -1` channels.
    Pair(Complex64, Complex64),
}

/// `ψ = χ + (deficiency part)` in the domain of the extension fixed by `params`.
pub struct DomainElement<F> {
    pub sector: AngularSector,
    pub params: ExtensionParams,
    pub coefficients: DomainCoefficients,
    pub config: PhysicalConfig,
    regular: F,
}

impl<F: Fn(f64, f64) -> Complex64> DomainElement<F> {
    pub fn regular(&self, r: f64, phi: f64) -> Complex64 {
        (self.regular)(r, phi)
    }

    /// The deficiency part alone.
    pub fn singular(&self, r: f64, phi: f64) -> Result<Complex64> {
        let a = self.config.a();
        let ac = self.config.a_conj();
        let theta = self.sector.theta.value();
        let pair = |nu: f64, phase: f64| -> Result<Complex64> {
            let order = BesselOrder::new(nu)?;
            Ok(bessel_k(order, a * r)?
                + Complex64::from_polar(1.0, phase) * bessel_k(order, ac * r)?)
        };
        match (self.params, self.coefficients) {
            (ExtensionParams::Theta0 { eta }, DomainCoefficients::Single(c)) => {
                Ok(c * pair(0.0, eta)?)
            }
            (ExtensionParams::ThetaGeneral { rho, eta }, DomainCoefficients::Pair(a0, b1)) => {
                let up = a0 * pair(theta, rho)? * Complex64::from_polar(1.0, theta * phi);
                let down =
                    b1 * pair(1.0 - theta, eta)? * Complex64::from_polar(1.0, (theta - 1.0) * phi);
                Ok(up + down)
            }
            (ExtensionParams::TimeReversalHalf { eta }, DomainCoefficients::Pair(a0, b1)) => {
                let s = (self.config.mass * self.config.kappa).sqrt() / self.config.hbar;
                let radial = (-s * r).exp() / r.sqrt()
                    * (Complex64::from_polar(1.0, s * r)
                        + Complex64::from_polar(1.0, eta - FRAC_PI_4 - s * r));
                let angular = a0 * Complex64::from_polar(1.0, 0.5 * phi)
                    + b1 * Complex64::from_polar(1.0, -0.5 * phi);
                Ok(angular * radial)
            }
            _ => Err(Error::VariantMismatch(
                "coefficients do not match the extension family".into(),
            )),
        }
    }

    pub fn evaluate(&self, r: f64, phi: f64) -> Result<Complex64> {
        Ok(self.regular(r, phi) + self.singular(r, phi)?)
    }
}

/// Builds a domain element, checking `χ(0) = χ'(0) = 0` and the quasi-periodicity of `χ`.
///
/// `χ(0)` is probed at `r = 10⁻⁹` and `χ'(0)` by the forward difference
/// `(χ(2h) - χ(h))/h` at `h = 10⁻⁹`, at four angles, against an absolute `tolerance`.
pub fn domain_element<F: Fn(f64, f64) -> Complex64>(
    sector: &AngularSector,
    params: ExtensionParams,
    coefficients: DomainCoefficients,
    config: &PhysicalConfig,
    regular: F,
    tolerance: f64,
) -> Result<DomainElement<F>> {
    config.validate()?;
    params.validate_for(sector)?;
    match (params, coefficients) {
        (ExtensionParams::Theta0 { .. }, DomainCoefficients::Single(_))
        | (ExtensionParams::ThetaGeneral { .. }, DomainCoefficients::Pair(..))
        | (ExtensionParams::TimeReversalHalf { .. }, DomainCoefficients::Pair(..)) => {}
        _ => {
            return Err(Error::VariantMismatch(
                "coefficients do not match the extension family".into(),
            ))
        }
    }

    let h = 1e-9;
    let twist = Complex64::from_polar(1.0, 2.0 * PI * sector.theta.value());
    for phi in [0.0, FRAC_PI_2, PI, 1.5 * PI] {
        let value = regular(h, phi);
        let slope = (regular(2.0 * h, phi) - value) / h;
        if !(value.norm() <= tolerance) {
            return Err(Error::BoundaryCondition(format!(
                "|chi(0)| ~ {:e} at phi = {phi}",
                value.norm()
            )));
        }
        if !(slope.norm() <= tolerance) {
            return Err(Error::BoundaryCondition(format!(
                "|chi'(0)| ~ {:e} at phi = {phi}",
                slope.norm()
            )));
        }
        for r in [0.5, 2.0] {
            let base = regular(r, phi);
            let shifted = regular(r, phi + 2.0 * PI);
            if (shifted - twist * base).norm() > 1e-9 * (1.0 + base.norm()) {
                return Err(Error::Precondition(format!(
                    "regular part is not quasi-periodic with theta = {} at (r, phi) = ({r}, {phi})",
                    sector.theta
                )));
            }
        }
    }
    Ok(DomainElement {
        sector: *sector,
        params,
        coefficients,
        config: *config,
        regular,
    })
}

/// Time reversal is defined only for `θ ∈ {0, 1/2}` (with `λ = 0`).
pub fn time_reversal_admissible(sector: &AngularSector) -> bool {
    sector.theta.is_zero() || sector.theta.is_half()
}

/// Restriction of the extension family to time-reversal-invariant members.
///
/// `θ = 0`: every `η` is invariant. `θ = 1/2`: invariant iff `ρ = η`,
/// which is returned as [`ExtensionParams::TimeReversalHalf`].
pub fn apply_time_reversal(
    sector: &AngularSector,
    params: ExtensionParams,
) -> Result<ExtensionParams> {
    if !time_reversal_admissible(sector) {
        return Err(Error::InadmissibleSector(sector.theta.value()));
    }
    params.validate_for(sector)?;
    match params {
        ExtensionParams::ThetaGeneral { rho, eta } => {
            if (rho - eta).abs() <= ANGLE_TOLERANCE {
                Ok(ExtensionParams::TimeReversalHalf { eta })
            } else {
                Err(Error::TimeReversalConstraint { rho, eta })
            }
        }
        other => Ok(other),
    }
}

/// `Tψ = ξψ*` with `ξ = 1`, on the angular expansion.
///
/// `e^{i(m+θ)φ}` conjugates to `e^{i(m'+θ)φ}` with `m' = -m` at `θ = 0`
/// and `m' = -m - 1` at `θ = 1/2`.
pub fn time_reverse(f: &AngularFunction) -> Result<AngularFunction> {
    if !time_reversal_admissible(&f.sector) || f.sector.lambda != 0.0 {
        return Err(Error::InadmissibleSector(f.sector.theta.value()));
    }
    let offset = if f.sector.theta.is_zero() { 0 } else { -1 };
    Ok(AngularFunction {
        sector: f.sector,
        coefficients: f
            .coefficients
            .iter()
            .map(|(&m, &c)| (-m + offset, c.conj()))
            .collect(),
    })
}

/// Convenience: the sector `θ` with `λ = 0`.
pub fn sector(theta: Theta) -> AngularSector {
    AngularSector::untwisted(theta)
}
