//! The quasi-periodic angular space `L²(S¹, dφ)_θ`.
//!
//! Functions are stored by their coefficients in the eigenbasis
//! `f_m(φ) = e^{i(m+θ)φ}`, in which rotations, `Ĵ_λ`, `D² = -∂²/∂φ²` and
//! multiplication by `e^{iφ}` are all diagonal or shifts.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for recognising `θ = 0` or `θ = 1/2` when `θ` came in as a float.
pub const THETA_TOLERANCE: f64 = 1e-12;

/// Quasi-periodicity parameter `θ ∈ [0, 1)`.
///
/// Keeps the exact rational when constructed from `p/q` input so that the
/// measure-zero tests `θ = 0` and `θ = 1/2` are decided exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Theta {
    value: f64,
    exact: Option<Rational64>,
}

impl Theta {
    pub const ZERO: Theta = Theta {
        value: 0.0,
        exact: None,
    };

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && (0.0..1.0).contains(&value) {
            Ok(Self { value, exact: None })
        } else {
            Err(Error::InvalidTheta(value))
        }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Parse(format!("zero denominator in {numer}/{denom}")));
        }
        let exact = Rational64::new(numer, denom);
        let value = *exact.numer() as f64 / *exact.denom() as f64;
        if exact < Rational64::from_integer(0) || exact >= Rational64::from_integer(1) {
            return Err(Error::InvalidTheta(value));
        }
        Ok(Self {
            value,
            exact: Some(exact),
        })
    }

    pub fn half() -> Self {
        Self::from_ratio(1, 2).expect("1/2 is in [0, 1)")
    }

    /// Parses a decimal (`0.25`) or a rational (`1/4`).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some((p, q)) = text.split_once('/') {
            let p: i64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in theta '{text}'")))?;
            let q: i64 = q
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in theta '{text}'")))?;
            Self::from_ratio(p, q)
        } else {
            let v: f64 = text
                .parse()
                .map_err(|_| Error::Parse(format!("cannot parse theta '{text}'")))?;
            Self::new(v)
        }
    }

    pub fn value(self) -> f64 {
        self.value
    }

    pub fn exact(self) -> Option<Rational64> {
        self.exact
    }

    fn matches(self, numer: i64, denom: i64) -> bool {
        match self.exact {
            Some(r) => r == Rational64::new(numer, denom),
            None => (self.value - numer as f64 / denom as f64).abs() <= THETA_TOLERANCE,
        }
    }

    pub fn is_zero(self) -> bool {
        self.matches(0, 1)
    }

    pub fn is_half(self) -> bool {
        self.matches(1, 2)
    }

    /// Same sector: exact comparison when both are rational, bitwise otherwise.
    pub fn same_sector(self, other: Theta) -> bool {
        match (self.exact, other.exact) {
            (Some(a), Some(b)) => a == b,
            _ => self.value == other.value,
        }
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(r) if *r.denom() != 1 => write!(f, "{}/{}", r.numer(), r.denom()),
            _ => write!(f, "{}", self.value),
        }
    }
}

/// `L²(S¹, dφ)_θ` together with the projective parameter `λ` of the rotation realization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngularSector {
    pub theta: Theta,
    pub lambda: f64,
}

impl AngularSector {
    pub fn new(theta: Theta, lambda: f64) -> Self {
        Self { theta, lambda }
    }

    /// The `λ = 0` realization, the only one surviving time reversal.
    pub fn untwisted(theta: Theta) -> Self {
        Self { theta, lambda: 0.0 }
    }
}

/// An angular-momentum channel `(θ, m)` with Bessel order `ν = |θ + m|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Channel {
    pub sector: AngularSector,
    pub m: i64,
    nu: f64,
}

impl Channel {
    pub fn new(sector: AngularSector, m: i64) -> Self {
        Self {
            sector,
            m,
            nu: (sector.theta.value() + m as f64).abs(),
        }
    }

    pub fn theta(&self) -> Theta {
        self.sector.theta
    }

    /// `θ + m`, the exponent of the angular factor `e^{i(θ+m)φ}`.
    pub fn angular_exponent(&self) -> f64 {
        self.sector.theta.value() + self.m as f64
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

/// A finite expansion `f(φ) = Σ_m c_m e^{i(m+θ)φ}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngularFunction {
    pub sector: AngularSector,
    pub coefficients: BTreeMap<i64, Complex64>,
}

impl AngularFunction {
    pub fn new(
        sector: AngularSector,
        coefficients: impl IntoIterator<Item = (i64, Complex64)>,
    ) -> Self {
        Self {
            sector,
            coefficients: coefficients.into_iter().collect(),
        }
    }

    pub fn basis(sector: AngularSector, m: i64) -> Self {
        Self::new(sector, [(m, Complex64::new(1.0, 0.0))])
    }

    pub fn evaluate(&self, phi: f64) -> Complex64 {
        let theta = self.sector.theta.value();
        self.coefficients
            .iter()
            .map(|(&m, &c)| c * Complex64::from_polar(1.0, (m as f64 + theta) * phi))
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coefficients.values().map(|c| c.norm_sqr()).sum()
    }
}

/// `Û_λ(α) f(φ) = e^{iλα} f(φ + α)`.
pub fn rotate(f: &AngularFunction, alpha: f64) -> AngularFunction {
    let theta = f.sector.theta.value();
    let lambda = f.sector.lambda;
    let coefficients = f
        .coefficients
        .iter()
        .map(|(&m, &c)| {
            (
                m,
                c * Complex64::from_polar(1.0, lambda * alpha + (m as f64 + theta) * alpha),
            )
        })
        .collect();
    AngularFunction {
        sector: f.sector,
        coefficients,
    }
}

/// Eigenvalue `μ = ε + l` of `Ĵ_λ`, with `ε = λ + θ - ⌊λ + θ⌋ ∈ [0, 1)`.
pub fn j_lambda_eigenvalue(sector: &AngularSector, l: i64) -> f64 {
    let shift = sector.lambda + sector.theta.value();
    shift - shift.floor() + l as f64
}

/// The `m` label matching the `Ĵ_λ` label `l`: `m = l - ⌊λ + θ⌋`.
pub fn m_from_l(sector: &AngularSector, l: i64) -> i64 {
    l - (sector.lambda + sector.theta.value()).floor() as i64
}

/// Eigenvalue `(θ + m)²` of `D²`.
pub fn d2_eigenvalue(channel: &Channel) -> f64 {
    let x = channel.angular_exponent();
    x * x
}

/// Sector reached by `V_τ f = e^{iτφ} f`: `θ̃ = θ - τ + h(τ - θ)` with `h(0) = 0`.
///
/// This is the published map, implemented as written. Substituting
/// `e^{iτφ} f` into the quasi-periodicity condition directly gives
/// `(θ + τ) mod 1` instead; the two differ by the orientation of `τ`.
pub fn v_tau_map(theta: f64, tau: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&theta) {
        return Err(Error::InvalidTheta(theta));
    }
    if !(tau > 0.0 && tau < 1.0) {
        return Err(Error::Precondition(format!(
            "tau must lie in (0, 1), got {tau}"
        )));
    }
    let step = if tau - theta > 0.0 { 1.0 } else { 0.0 };
    let mapped = theta - tau + step;
    Ok(if mapped >= 1.0 { mapped - 1.0 } else { mapped })
}

/// `V̂` (multiplication by `e^{iφ}`) on channel labels: `m → m + 1`.
pub fn ladder_shift(channel: &Channel) -> Channel {
    Channel::new(channel.sector, channel.m + 1)
}

/// `V̂†` on channel labels: `m → m - 1`.
pub fn ladder_shift_adjoint(channel: &Channel) -> Channel {
    Channel::new(channel.sector, channel.m - 1)
}

/// `V̂ f(φ) = e^{iφ} f(φ)` on a full expansion.
pub fn apply_ladder(f: &AngularFunction) -> AngularFunction {
    AngularFunction {
        sector: f.sector,
        coefficients: f.coefficients.iter().map(|(&m, &c)| (m + 1, c)).collect(),
    }
}

/// `φ - 2π ⌊φ / 2π⌋ ∈ [0, 2π)`.
pub fn angle_reduce(phi: f64) -> f64 {
    let reduced = phi - TAU * (phi / TAU).floor();
    if reduced >= TAU {
        reduced - TAU
    } else {
        reduced
    }
}

/// `(f, g) = (1/2π) ∫₀^{2π} f* g dφ = Σ_m c*_m d_m`.
pub fn inner_product(f: &AngularFunction, g: &AngularFunction) -> Result<Complex64> {
    if !f.sector.theta.same_sector(g.sector.theta) {
        return Err(Error::SectorMismatch {
            left: f.sector.theta.value(),
            right: g.sector.theta.value(),
        });
    }
    Ok(f.coefficients
        .iter()
        .filter_map(|(m, c)| g.coefficients.get(m).map(|d| c.conj() * d))
        .sum())
}
