//! Invariant suites behind `verify`: special functions, energies, norms, domains.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angular::{AngularSector, Channel, Theta};
use crate::error::{Error, Result};
use crate::extensions::{
    classify_channel, deficiency_vector, ExtensionParams, PhysicalConfig, Sign,
};
use crate::specfun::{
    bessel_i, bessel_k, bessel_k_any_order, bessel_k_reflection, k_orthogonality_integral,
    BesselOrder,
};
use crate::spectrum::{
    bound_wavefunction, energy_m0, energy_m_minus1, energy_theta0, existence_window,
    radial_density, spectrum_half_t, BoundState,
};

use super::deficiency::square_integrability_probe;
use super::domain::{
    effective_match_constant, verify_domain_membership, verify_domain_membership_with_constant,
};
use super::matching::{matching_energy, MatchingProblem};
use super::norms::{verify_deficiency_norm, verify_norm, NORM_TOLERANCE};
use super::quadrature::{integrate_radial, QuadratureConfig};

pub const ENERGY_TOLERANCE: f64 = 1e-8;
pub const IDENTITY_TOLERANCE: f64 = 1e-12;
pub const QUADRATURE_TOLERANCE: f64 = 1e-8;
pub const DERIVATIVE_TOLERANCE: f64 = 1e-7;
pub const KAPPA_VALUES: [f64; 4] = [0.5, 1.0, 2.0, 10.0];
pub const THETA_GRID: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Specfun,
    Energies,
    Norms,
    Domains,
    All,
}

impl Scope {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "specfun" => Ok(Self::Specfun),
            "energies" => Ok(Self::Energies),
            "norms" => Ok(Self::Norms),
            "domains" => Ok(Self::Domains),
            "all" => Ok(Self::All),
            other => Err(Error::Parse(format!("unknown verify scope '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Worst deviation seen, in the units of `tolerance`.
    pub measured: f64,
    pub tolerance: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub config: PhysicalConfig,
    /// Relative error injected into closed-form energies before comparison (0 disables).
    pub energy_fault: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            config: PhysicalConfig::default(),
            energy_fault: 0.0,
        }
    }
}

/// Collects a worst-case deviation over many samples.
struct Tracker {
    name: String,
    tolerance: f64,
    worst: f64,
    detail: String,
    error: Option<String>,
}

impl Tracker {
    fn new(name: &str, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            tolerance,
            worst: 0.0,
            detail: String::new(),
            error: None,
        }
    }

    fn record(&mut self, deviation: f64, at: impl FnOnce() -> String) {
        if !(deviation <= self.worst) {
            self.worst = deviation;
            self.detail = at();
        }
    }

    fn fail(&mut self, message: String) {
        self.error.get_or_insert(message);
    }

    fn finish(self) -> CheckOutcome {
        let passed = self.error.is_none() && self.worst <= self.tolerance;
        let detail = match self.error {
            Some(e) => e,
            None if self.detail.is_empty() => "all samples exact".into(),
            None => format!("worst at {}", self.detail),
        };
        CheckOutcome {
            name: self.name,
            passed,
            measured: self.worst,
            tolerance: self.tolerance,
            detail,
        }
    }
}

fn flag(name: &str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        name: name.into(),
        passed,
        measured: f64::from(u8::from(!passed)),
        tolerance: 0.0,
        detail,
    }
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    let scale = b.norm().max(a.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

fn order(nu: f64) -> BesselOrder {
    BesselOrder::new(nu).expect("grid orders lie in [0, 2)")
}

/// `n` points strictly inside `(lo, hi)` at fractions `(k + 1/2)/n`.
pub fn interior_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| lo + (hi - lo) * (k as f64 + 0.5) / n as f64)
        .collect()
}

/// `η` samples for the `θ = 0` family, kept where the oracle bracket holds.
pub fn theta0_grid() -> Vec<f64> {
    interior_grid(-2.9, 2.9, 25)
}

/// `(θ, φ)` samples inside the window of order `ν(θ)`, three per `θ`.
pub fn fractional_grid(nu_of_theta: impl Fn(f64) -> f64) -> Vec<(f64, f64)> {
    THETA_GRID
        .iter()
        .flat_map(|&theta| {
            let (lo, hi) = existence_window(nu_of_theta(theta));
            [0.2, 0.5, 0.8].map(|f| (theta, lo + f * (hi - lo)))
        })
        .collect()
}

pub fn half_t_grid() -> Vec<f64> {
    let (lo, hi) = existence_window(0.5);
    interior_grid(lo, hi, 25)
}

/// Phases in `[-π, π)` outside the window of order `ν`, including both endpoints.
pub fn outside_window_grid(nu: f64, n: usize) -> Vec<f64> {
    let (lo, hi) = existence_window(nu);
    let half = n / 2;
    let mut points = vec![lo, hi];
    points.extend(interior_grid(-PI, lo, half - 1));
    points.extend(interior_grid(hi, PI, n - half - 1));
    points
}

fn theta(value: f64) -> Theta {
    Theta::new(value).expect("grid theta lies in [0, 1)")
}

// ---------------------------------------------------------------- specfun

const SPECFUN_ARGS: [(f64, f64); 8] = [
    (0.3, 0.0),
    (1.0, 0.0),
    (2.5, 0.0),
    (7.0, 0.0),
    (0.5, 0.5),
    (1.0, -1.0),
    (3.0, 4.0),
    (12.0, -5.0),
];
const SPECFUN_ORDERS: [f64; 6] = [0.0, 0.2, 0.5, 0.75, 1.3, 1.9];

pub fn specfun_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let args = || SPECFUN_ARGS.iter().map(|&(x, y)| Complex64::new(x, y));

    let mut symmetry = Tracker::new("K_{-mu} = K_mu", IDENTITY_TOLERANCE);
    let mut conj = Tracker::new("K_mu(z*) = K_mu(z)*", IDENTITY_TOLERANCE);
    let mut recurrence = Tracker::new("K_{mu-1} - K_{mu+1} = -(2 mu/z) K_mu", IDENTITY_TOLERANCE);
    let mut half = Tracker::new("K_{1/2}(z) = sqrt(pi/2z) e^{-z}", IDENTITY_TOLERANCE);
    let mut routes = Tracker::new(
        "K_mu: reflection route agrees with main route",
        IDENTITY_TOLERANCE,
    );
    let mut deriv = Tracker::new(
        "-2 K_mu' = K_{mu-1} + K_{mu+1} (finite differences)",
        DERIVATIVE_TOLERANCE,
    );
    let mut deriv_up = Tracker::new(
        "(z^mu K_mu)' = -z^mu K_{mu-1} (finite differences)",
        DERIVATIVE_TOLERANCE,
    );
    let mut deriv_down = Tracker::new(
        "(z^-mu K_mu)' = -z^-mu K_{mu+1} (finite differences)",
        DERIVATIVE_TOLERANCE,
    );
    let mut wronskian = Tracker::new("I_mu K_mu' - I_mu' K_mu = -1/z", IDENTITY_TOLERANCE);

    for z in args() {
        for &mu in &SPECFUN_ORDERS {
            let at = || format!("mu = {mu}, z = {z}");
            let k = |nu: f64, w: Complex64| bessel_k_any_order(nu, w);
            let mut run = || -> Result<()> {
                let kz = k(mu, z)?;
                symmetry.record(rel(crate::specfun::bessel_k_signed(-mu, z)?, kz), at);
                conj.record(rel(k(mu, z.conj())?, kz.conj()), at);
                let (lower, upper) = (k(mu - 1.0, z)?, k(mu + 1.0, z)?);
                let lhs = lower - upper;
                let rhs = -kz * (2.0 * mu) / z;
                let scale = lower.norm().max(upper.norm());
                recurrence.record((lhs - rhs).norm() / scale, at);
                if z.norm() <= 2.0 && !order(mu).is_near_integer() {
                    routes.record(rel(bessel_k_reflection(order(mu), z)?, kz), at);
                }
                let h = 1e-5 * z.norm();
                let fd = |f: &dyn Fn(Complex64) -> Result<Complex64>| -> Result<Complex64> {
                    Ok((f(z + h)? - f(z - h)?) / (2.0 * h))
                };
                let dk = fd(&|w| k(mu, w))?;
                deriv.record(rel(dk * -2.0, lower + upper), at);
                let up = fd(&|w| Ok(w.powf(mu) * k(mu, w)?))?;
                deriv_up.record(rel(up, -z.powf(mu) * lower), at);
                let down = fd(&|w| Ok(w.powf(-mu) * k(mu, w)?))?;
                deriv_down.record(rel(down, -z.powf(-mu) * upper), at);
                if mu < 1.0 && z.re.abs() < 30.0 {
                    // I'_mu = I_{mu+1} + (mu/z) I_mu, K'_mu = -K_{mu+1} + (mu/z) K_mu.
                    let i0 = bessel_i(order(mu), z)?;
                    let i1 = bessel_i(order(mu + 1.0), z)?;
                    let di = i1 + i0 * mu / z;
                    let dk_exact = -upper + kz * mu / z;
                    let w = i0 * dk_exact - di * kz;
                    wronskian.record(rel(w * z, Complex64::new(-1.0, 0.0)), at);
                }
                Ok(())
            };
            if let Err(e) = run() {
                symmetry.fail(format!("{e} at mu = {mu}, z = {z}"));
            }
        }
        match bessel_k(order(0.5), z) {
            Ok(v) => half.record(rel(v, (PI / (2.0 * z)).sqrt() * (-z).exp()), || {
                format!("z = {z}")
            }),
            Err(e) => half.fail(e.to_string()),
        }
    }
    checks.extend(
        [
            symmetry, conj, recurrence, half, routes, deriv, deriv_up, deriv_down, wronskian,
        ]
        .map(Tracker::finish),
    );

    let mut integrals = Tracker::new(
        "int x K_mu(ax) K_mu(bx) dx: quadrature = closed form",
        QUADRATURE_TOLERANCE,
    );
    let mut zero_limit = Tracker::new(
        "int x K_0(ax) K_0(bx) dx = (ln a - ln b)/(a^2 - b^2)",
        QUADRATURE_TOLERANCE,
    );
    let a_def = Complex64::from_polar(1.0, -PI / 4.0);
    let cases = [
        (0.3, Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)),
        (0.5, a_def, a_def.conj()),
        (0.7, Complex64::new(1.5, 0.0), Complex64::new(1.5, 0.0)),
        (0.9, Complex64::new(1.0, 0.5), Complex64::new(0.5, -0.2)),
        (0.0, a_def, a_def.conj()),
        (0.0, Complex64::new(1.0, 0.0), Complex64::new(3.0, 0.0)),
        (0.0, Complex64::new(2.0, 0.0), Complex64::new(2.0, 0.0)),
    ];
    for (mu, a, b) in cases {
        let run = || -> Result<(f64, f64)> {
            let closed = k_orthogonality_integral(order(mu), a, b)?;
            let q = QuadratureConfig::with_scale(1.0 / (a + b).re);
            let est = integrate_radial(
                |x| Ok(bessel_k(order(mu), a * x)? * bessel_k(order(mu), b * x)? * x),
                &q,
            )?;
            let explicit = if mu == 0.0 {
                if (a - b).norm() < 1e-14 {
                    Complex64::new(1.0, 0.0) / (a * a * 2.0)
                } else {
                    (a.ln() - b.ln()) / (a * a - b * b)
                }
            } else {
                closed
            };
            Ok((rel(est.value, closed), rel(explicit, closed)))
        };
        let at = || format!("mu = {mu}, a = {a}, b = {b}");
        match run() {
            Ok((quad, explicit)) => {
                integrals.record(quad, at);
                if mu == 0.0 {
                    zero_limit.record(quad.max(explicit), at);
                }
            }
            Err(e) => integrals.fail(format!("{e} at mu = {mu}")),
        }
    }
    checks.push(integrals.finish());
    checks.push(zero_limit.finish());
    SuiteReport {
        suite: "specfun".into(),
        checks,
    }
}

// ---------------------------------------------------------------- energies

/// Closed-form state and oracle energy at one parameter point of a family.
pub struct EnergySample {
    pub label: String,
    pub closed: Option<BoundState>,
    pub oracle: Option<f64>,
}

fn oracle_energy(nu: f64, phase: f64, config: &PhysicalConfig) -> Result<Option<f64>> {
    Ok(matching_energy(&MatchingProblem {
        nu,
        phase,
        config: *config,
    })?
    .map(|s| s.energy))
}

pub fn theta0_samples(config: &PhysicalConfig) -> Result<Vec<EnergySample>> {
    theta0_grid()
        .into_iter()
        .map(|eta| {
            Ok(EnergySample {
                label: format!("theta = 0, eta = {eta:.6}"),
                closed: Some(energy_theta0(eta, config)?),
                oracle: oracle_energy(0.0, eta, config)?,
            })
        })
        .collect()
}

pub fn m0_samples(config: &PhysicalConfig) -> Result<Vec<EnergySample>> {
    fractional_grid(|t| t)
        .into_iter()
        .map(|(t, rho)| {
            Ok(EnergySample {
                label: format!("m = 0, theta = {t}, rho = {rho:.6}"),
                closed: energy_m0(theta(t), rho, config)?,
                oracle: oracle_energy(t, rho, config)?,
            })
        })
        .collect()
}

pub fn m_minus1_samples(config: &PhysicalConfig) -> Result<Vec<EnergySample>> {
    fractional_grid(|t| 1.0 - t)
        .into_iter()
        .map(|(t, eta)| {
            Ok(EnergySample {
                label: format!("m = -1, theta = {t}, eta = {eta:.6}"),
                closed: energy_m_minus1(theta(t), eta, config)?,
                oracle: oracle_energy(1.0 - t, eta, config)?,
            })
        })
        .collect()
}

pub fn half_t_samples(config: &PhysicalConfig) -> Result<Vec<EnergySample>> {
    half_t_grid()
        .into_iter()
        .map(|eta| {
            Ok(EnergySample {
                label: format!("theta = 1/2 time-reversal, eta = {eta:.6}"),
                closed: spectrum_half_t(eta, config)?,
                oracle: oracle_energy(0.5, eta, config)?,
            })
        })
        .collect()
}

fn compare_family(name: &str, samples: Result<Vec<EnergySample>>, fault: f64) -> CheckOutcome {
    let mut t = Tracker::new(name, ENERGY_TOLERANCE);
    match samples {
        Err(e) => t.fail(e.to_string()),
        Ok(samples) => {
            for s in &samples {
                match (s.closed, s.oracle) {
                    (Some(c), Some(o)) => {
                        let closed = c.energy * (1.0 + fault);
                        t.record((closed - o).abs() / o.abs(), || s.label.clone());
                    }
                    _ => t.fail(format!(
                        "{}: closed form and oracle disagree on existence",
                        s.label
                    )),
                }
            }
        }
    }
    t.finish()
}

pub fn calibration_checks(config: &PhysicalConfig) -> Vec<CheckOutcome> {
    let half = Theta::half();
    let points: [(&str, Result<Option<BoundState>>); 4] = [
        ("theta = 0, eta = 0", energy_theta0(0.0, config).map(Some)),
        ("theta = 1/2, rho = 0", energy_m0(half, 0.0, config)),
        (
            "theta = 1/2, eta = 0 (m = -1)",
            energy_m_minus1(half, 0.0, config),
        ),
        (
            "theta = 1/2 time-reversal, eta = 0",
            spectrum_half_t(0.0, config),
        ),
    ];
    points
        .into_iter()
        .map(|(label, state)| {
            let mut t = Tracker::new(&format!("E/kappa = -1 at {label}"), IDENTITY_TOLERANCE);
            match state {
                Ok(Some(s)) => {
                    t.record((s.energy_over_kappa + 1.0).abs(), || label.into());
                    if label.contains("time-reversal") && s.degeneracy != 2 {
                        t.fail(format!("degeneracy {} instead of 2", s.degeneracy));
                    }
                }
                Ok(None) => t.fail("no bound state".into()),
                Err(e) => t.fail(e.to_string()),
            }
            t.finish()
        })
        .collect()
}

pub fn window_checks(config: &PhysicalConfig) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let families: [(&str, Box<dyn Fn(f64) -> f64>, bool); 3] = [
        ("m = 0", Box::new(|t| t), false),
        ("m = -1", Box::new(|t| 1.0 - t), true),
        ("theta = 1/2 time-reversal", Box::new(|_| 0.5), false),
    ];
    for (name, nu_of, minus_one) in families {
        let mut ok = true;
        let mut detail = String::new();
        let mut count = 0;
        let thetas: &[f64] = if name.contains("time-reversal") {
            &[0.5]
        } else {
            &THETA_GRID
        };
        for &t in thetas {
            let nu = nu_of(t);
            for phase in outside_window_grid(nu, 22) {
                count += 1;
                let closed = if name.contains("time-reversal") {
                    spectrum_half_t(phase, config)
                } else if minus_one {
                    energy_m_minus1(theta(t), phase, config)
                } else {
                    energy_m0(theta(t), phase, config)
                };
                let oracle = oracle_energy(nu, phase, config);
                match (closed, oracle) {
                    (Ok(None), Ok(None)) => {}
                    (c, o) => {
                        ok = false;
                        detail = format!(
                            "theta = {t}, phase = {phase}: closed {:?}, oracle {:?}",
                            c.map(|s| s.map(|s| s.energy)),
                            o
                        );
                    }
                }
            }
        }
        if ok {
            detail = format!("{count} outside points, none bound");
        }
        out.push(flag(
            &format!("no bound state outside the {name} window"),
            ok,
            detail,
        ));
    }
    out
}

pub fn kappa_scaling_check() -> CheckOutcome {
    let mut t = Tracker::new("energies scale linearly with kappa", IDENTITY_TOLERANCE);
    let reference = PhysicalConfig::default();
    let energies = |config: &PhysicalConfig| -> Result<Vec<f64>> {
        let mut out = Vec::new();
        for eta in theta0_grid() {
            out.push(energy_theta0(eta, config)?.energy);
        }
        for (th, rho) in fractional_grid(|t| t) {
            out.extend(energy_m0(theta(th), rho, config)?.map(|s| s.energy));
        }
        for (th, eta) in fractional_grid(|t| 1.0 - t) {
            out.extend(energy_m_minus1(theta(th), eta, config)?.map(|s| s.energy));
        }
        for eta in half_t_grid() {
            out.extend(spectrum_half_t(eta, config)?.map(|s| s.energy));
        }
        Ok(out)
    };
    let base = match energies(&reference) {
        Ok(b) => b,
        Err(e) => {
            t.fail(e.to_string());
            return t.finish();
        }
    };
    for kappa in KAPPA_VALUES {
        let config = PhysicalConfig { kappa, ..reference };
        match energies(&config) {
            Ok(scaled) if scaled.len() == base.len() => {
                for (i, (s, b)) in scaled.iter().zip(&base).enumerate() {
                    t.record((s / kappa - b).abs() / b.abs(), || {
                        format!("kappa = {kappa}, sample {i}")
                    });
                }
            }
            Ok(_) => t.fail(format!("state count changes at kappa = {kappa}")),
            Err(e) => t.fail(e.to_string()),
        }
    }
    t.finish()
}

pub fn energies_suite(options: &VerifyOptions) -> SuiteReport {
    let c = &options.config;
    let fault = options.energy_fault;
    let mut checks = vec![
        compare_family(
            "theta = 0 energies match the oracle",
            theta0_samples(c),
            fault,
        ),
        compare_family("m = 0 energies match the oracle", m0_samples(c), fault),
        compare_family(
            "m = -1 energies match the oracle",
            m_minus1_samples(c),
            fault,
        ),
        compare_family(
            "theta = 1/2 time-reversal energies match the oracle",
            half_t_samples(c),
            fault,
        ),
    ];
    checks.extend(calibration_checks(c));
    checks.extend(window_checks(c));
    checks.push(kappa_scaling_check());
    SuiteReport {
        suite: "energies".into(),
        checks,
    }
}

// ---------------------------------------------------------------- norms

/// One representative state per family plus a spread of fractional orders.
pub fn representative_states(config: &PhysicalConfig) -> Result<Vec<BoundState>> {
    let mut states = vec![
        energy_theta0(0.0, config)?,
        energy_theta0(1.3, config)?,
        energy_theta0(-1.5, config)?,
    ];
    for &t in &THETA_GRID {
        states.extend(energy_m0(theta(t), 0.3, config)?);
        states.extend(energy_m_minus1(theta(t), -0.4, config)?);
    }
    states.extend(spectrum_half_t(0.0, config)?);
    states.extend(spectrum_half_t(1.1, config)?);
    Ok(states)
}

fn describe(s: &BoundState) -> String {
    format!(
        "{:?}, theta = {}, m = {}, phase = {:.4}",
        s.family,
        s.channel.theta(),
        s.channel.m,
        s.phase
    )
}

pub fn norms_suite(config: &PhysicalConfig) -> SuiteReport {
    let mut checks = Vec::new();

    let mut def = Tracker::new("deficiency vectors have unit norm", NORM_TOLERANCE);
    for &t in [0.0].iter().chain(THETA_GRID.iter()) {
        let sector = AngularSector::untwisted(theta(t));
        for ch in crate::extensions::deficient_channels(&sector) {
            for sign in [Sign::Plus, Sign::Minus] {
                match deficiency_vector(&ch, sign, config)
                    .and_then(|v| verify_deficiency_norm(&v, config))
                {
                    Ok(r) => def.record(
                        (r.quadrature - 1.0).abs().max((r.closed_form - 1.0).abs()),
                        || format!("theta = {t}, m = {}, {sign:?}", ch.m),
                    ),
                    Err(e) => def.fail(e.to_string()),
                }
            }
        }
    }
    checks.push(def.finish());

    let mut bound = Tracker::new("bound states have unit norm", NORM_TOLERANCE);
    match representative_states(config) {
        Ok(states) => {
            for s in &states {
                match verify_norm(s) {
                    Ok(r) => bound.record(
                        (r.quadrature - 1.0).abs().max((r.closed_form - 1.0).abs()),
                        || describe(s),
                    ),
                    Err(e) => bound.fail(format!("{e} for {}", describe(s))),
                }
            }
        }
        Err(e) => bound.fail(e.to_string()),
    }
    checks.push(bound.finish());

    let density = energy_theta0(0.0, config).and_then(|s| {
        let p = bound_wavefunction(&s);
        [1e-16, 1e-12, 1e-8, 1e-4]
            .iter()
            .map(|&r| radial_density(&p, r))
            .collect::<Result<Vec<_>>>()
    });
    let (ok, detail) = match density {
        Ok(w) => (
            w.windows(2).all(|p| p[0] < p[1]) && w[0] < 1e-12,
            format!("W^2 at r = 1e-16, 1e-12, 1e-8, 1e-4: {w:?}"),
        ),
        Err(e) => (false, e.to_string()),
    };
    checks.push(flag(
        "theta = 0 density decreases to zero at the origin",
        ok,
        detail,
    ));

    SuiteReport {
        suite: "norms".into(),
        checks,
    }
}

// ---------------------------------------------------------------- domains

/// `-e^{-iρ/2}/√(2(cos ρ + cos(θπ/2)))`: the `m = 0` constant with the opposite overall sign.
///
/// Matching the small-`r` expansion fixes the sign to `+`; this variant is kept as a negative control.
pub fn reversed_sign_m0_constant(theta: f64, rho: f64) -> Complex64 {
    -crate::spectrum::match_constant(theta, rho)
}

pub fn domains_suite(config: &PhysicalConfig) -> SuiteReport {
    let mut checks = Vec::new();
    let mut members = Tracker::new(
        "bound states satisfy chi(0) = chi'(0) = 0",
        super::domain::DOMAIN_TOLERANCE,
    );
    let mut perturbed_ok = true;
    let mut perturbed_detail = String::from("every perturbed constant rejected");
    let states = match representative_states(config) {
        Ok(s) => s,
        Err(e) => {
            members.fail(e.to_string());
            Vec::new()
        }
    };
    for s in &states {
        let params = params_for(s);
        match verify_domain_membership(s, &params, config) {
            Ok(r) => members.record(r.chi_ratio().max(r.dchi_ratio()), || describe(s)),
            Err(e) => members.fail(format!("{e} for {}", describe(s))),
        }
        let perturbed = effective_match_constant(s, config) * 1.01;
        match verify_domain_membership_with_constant(s, &params, config, perturbed) {
            Ok(r) if !r.passed => {}
            other => {
                perturbed_ok = false;
                perturbed_detail = format!(
                    "perturbed constant accepted for {}: {:?}",
                    describe(s),
                    other.map(|r| r.passed)
                );
            }
        }
    }
    checks.push(members.finish());
    checks.push(flag(
        "perturbed match constants are rejected",
        perturbed_ok,
        perturbed_detail,
    ));

    let flipped = energy_m0(theta(0.3), 0.3, config).and_then(|s| {
        let s = s.ok_or(Error::Precondition("no m = 0 state".into()))?;
        verify_domain_membership_with_constant(
            &s,
            &params_for(&s),
            config,
            reversed_sign_m0_constant(0.3, 0.3),
        )
    });
    let (ok, detail) = match flipped {
        Ok(r) => (!r.passed, format!("chi ratio {:e}", r.chi_ratio())),
        Err(e) => (false, e.to_string()),
    };
    checks.push(flag(
        "m = 0 match constant with reversed overall sign is rejected",
        ok,
        detail,
    ));

    let mut probe_ok = true;
    let mut probe_detail = String::from("probe matches the classification");
    for &t in &[0.0, 0.1, 0.5, 0.9] {
        for m in -2..=1 {
            let ch = Channel::new(AngularSector::untwisted(theta(t)), m);
            match square_integrability_probe(&ch, config) {
                Ok(p) if p.square_integrable == (classify_channel(&ch).n_plus == 1) => {}
                other => {
                    probe_ok = false;
                    probe_detail = format!("theta = {t}, m = {m}: {other:?}");
                }
            }
        }
    }
    checks.push(flag(
        "square-integrability probe matches deficiency indices",
        probe_ok,
        probe_detail,
    ));
    SuiteReport {
        suite: "domains".into(),
        checks,
    }
}

/// Extension parameters that produce the given state.
pub fn params_for(state: &BoundState) -> ExtensionParams {
    use crate::spectrum::Family;
    match state.family {
        Family::Theta0 => ExtensionParams::Theta0 { eta: state.phase },
        Family::TimeReversalHalf => ExtensionParams::TimeReversalHalf { eta: state.phase },
        Family::M0 => ExtensionParams::ThetaGeneral {
            rho: state.phase,
            eta: 0.0,
        },
        Family::MMinus1 => ExtensionParams::ThetaGeneral {
            rho: 0.0,
            eta: state.phase,
        },
    }
}

pub fn run(scope: Scope, options: &VerifyOptions) -> Vec<SuiteReport> {
    let c = &options.config;
    match scope {
        Scope::Specfun => vec![specfun_suite()],
        Scope::Energies => vec![energies_suite(options)],
        Scope::Norms => vec![norms_suite(c)],
        Scope::Domains => vec![domains_suite(c)],
        Scope::All => vec![
            specfun_suite(),
            energies_suite(options),
            norms_suite(c),
            domains_suite(c),
        ],
    }
}
