//! Modified Bessel functions `I_ν` and MacDonald functions `K_ν` of real order
//! `ν ∈ [0, 2)` and complex argument.
//!
//! `K_ν` is computed from a pair `K_μ, K_{μ+1}` with `|μ| ≤ 1/2` followed by
//! upward recurrence, which is stable for `K`. The pair comes from Temme's
//! series for `|z| ≤ 2` and from Steed's continued fraction for `|z| > 2` in
//! the closed right half-plane. The left half-plane beyond `|z| = 2` is reached
//! by analytic continuation through `I_ν(-z)`.
//!
//! `I_ν` uses its power series for `|z| ≤ 8` and, beyond that, the continued
//! fraction for `I'_ν/I_ν` combined with the Wronskian
//! `I_ν K_{ν+1} + I_{ν+1} K_ν = 1/z`.
//!
//! The textbook reflection `K_ν = π (I_{-ν} - I_ν) / (2 sin νπ)` is kept as a
//! separate route ([`bessel_k_reflection`]) for cross-checks; it is exact in
//! principle but cancels badly near integer orders and at large `|z|`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::{rgamma, temme_gammas};
use crate::error::{Error, Result};

pub type ComplexValue = Complex64;

/// `|Re z|` beyond which `e^{|Re z|}` is treated as overflowing.
pub const EXP_OVERFLOW_ARG: f64 = 700.0;
/// Largest `|z|` evaluated with the `I_ν` power series.
pub const SERIES_RADIUS: f64 = 8.0;
/// Largest `|z|` evaluated with Temme's series for `K`.
pub const TEMME_RADIUS: f64 = 2.0;
/// Orders closer than this to an integer are refused by the reflection route.
pub const NEAR_INTEGER: f64 = 1e-6;

const EPS: f64 = 1e-16;
// Continued fractions stall near machine epsilon in complex arithmetic.
const CF_EPS: f64 = 1e-15;
// Lentz floor; squared it must stay representable for `Complex::inv`.
const TINY: f64 = 1e-150;
const MAX_ITER: usize = 100_000;

/// A Bessel order in `[0, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() && (0.0..2.0).contains(&nu) {
            Ok(Self(nu))
        } else {
            Err(Error::InvalidOrder(nu))
        }
    }

    /// Order for `K` from a signed value, using `K_{-ν} = K_ν`.
    pub fn from_signed(nu: f64) -> Result<Self> {
        Self::new(nu.abs()).map_err(|_| Error::InvalidOrder(nu))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_near_integer(self) -> bool {
        (self.0 - self.0.round()).abs() < NEAR_INTEGER
    }
}

fn check_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("non-finite argument {z}")))
    }
}

fn finite_or_overflow(value: Complex64, what: impl FnOnce() -> String) -> Result<Complex64> {
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow(what()))
    }
}

/// Modified Bessel function of the first kind `I_ν(z)` (principal branch).
pub fn bessel_i(nu: BesselOrder, z: ComplexValue) -> Result<ComplexValue> {
    check_finite(z)?;
    let nu = nu.value();
    if z.re.abs() > EXP_OVERFLOW_ARG {
        return Err(Error::Overflow(format!("I_{nu}({z})")));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(if nu == 0.0 { 1.0 } else { 0.0 }, 0.0));
    }
    let value = if z.re < 0.0 {
        // I_ν(w e^{±iπ}) = e^{±iπν} I_ν(w); the cut itself takes arg z = π.
        let sign = if z.im < 0.0 { -1.0 } else { 1.0 };
        Complex64::from_polar(1.0, sign * PI * nu) * bessel_i_right(nu, -z)?
    } else {
        bessel_i_right(nu, z)?
    };
    finite_or_overflow(value, || format!("I_{nu}({z})"))
}

fn bessel_i_right(nu: f64, z: Complex64) -> Result<Complex64> {
    if z.norm() <= SERIES_RADIUS {
        Ok(i_series(nu, z))
    } else {
        i_wronskian(nu, z)
    }
}

/// Power series of `I_ν` for any real non-negative-integer-free order, including
/// negative non-integer orders.
pub(crate) fn i_series(order: f64, z: Complex64) -> Complex64 {
    let half = z * 0.5;
    let quarter_sq = half * half;
    let mut term = Complex64::new(rgamma(order + 1.0), 0.0);
    let mut sum = term;
    let radius = half.norm();
    for k in 1..MAX_ITER {
        let kf = k as f64;
        term *= quarter_sq / (kf * (kf + order));
        sum += term;
        if kf > radius && term.norm() <= EPS * sum.norm() {
            break;
        }
    }
    if order == 0.0 {
        sum
    } else {
        sum * (half.ln() * order).exp()
    }
}

fn i_wronskian(nu: f64, z: Complex64) -> Result<Complex64> {
    let nl = (nu + 0.5).floor() as usize;
    let mu = nu - nl as f64;
    let xi = z.inv();
    let xi2 = xi * 2.0;

    // I'_ν / I_ν by modified Lentz.
    let mut h = xi * nu;
    if h.norm() < TINY {
        h = Complex64::new(TINY, 0.0);
    }
    let mut b = xi2 * nu;
    let mut d = Complex64::new(0.0, 0.0);
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        b += xi2;
        d = b + d;
        if d.norm() < TINY {
            d = Complex64::new(TINY, 0.0);
        }
        d = d.inv();
        c = b + c.inv();
        if c.norm() < TINY {
            c = Complex64::new(TINY, 0.0);
        }
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < CF_EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence(format!(
            "continued fraction for I_{nu}'/I_{nu} at z = {z}"
        )));
    }

    // Downward recurrence ν → μ on an unnormalised pair (I, I').
    let mut ril = Complex64::new(1.0, 0.0);
    let mut ripl = h;
    let ril_top = ril;
    let mut fact = xi * nu;
    for _ in 0..nl {
        let ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
    }
    let f = ripl / ril;

    let (kmu, kmu1) = k_pair(mu, z)?;
    let kmu_prime = xi * mu * kmu - kmu1;
    let imu = xi / (f * kmu - kmu_prime);
    Ok(imu * ril_top / ril)
}

/// MacDonald function `K_ν(z)` for `z ≠ 0`, `|arg z| < π`.
pub fn bessel_k(nu: BesselOrder, z: ComplexValue) -> Result<ComplexValue> {
    check_finite(z)?;
    let nu = nu.value();
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain(format!("K_{nu} is singular at z = 0")));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Domain(format!("K_{nu}({z}) lies on the branch cut")));
    }
    if z.re < -EXP_OVERFLOW_ARG {
        return Err(Error::Overflow(format!("K_{nu}({z})")));
    }
    let value = if z.re < 0.0 && z.norm() > TEMME_RADIUS {
        // K_ν(w e^{±iπ}) = e^{∓iπν} K_ν(w) ∓ iπ I_ν(w), with Re w > 0.
        let w = -z;
        let sign = if z.im > 0.0 { 1.0 } else { -1.0 };
        let kw = k_order(nu, w)?;
        let iw = bessel_i_right(nu, w)?;
        Complex64::from_polar(1.0, -sign * PI * nu) * kw - Complex64::new(0.0, sign * PI) * iw
    } else {
        k_order(nu, z)?
    };
    finite_or_overflow(value, || format!("K_{nu}({z})"))
}

fn k_order(nu: f64, z: Complex64) -> Result<Complex64> {
    let nl = (nu + 0.5).floor() as usize;
    let mu = nu - nl as f64;
    let (mut k0, mut k1) = k_pair(mu, z)?;
    let xi2 = z.inv() * 2.0;
    for i in 1..=nl {
        let next = xi2 * (mu + i as f64) * k1 + k0;
        k0 = k1;
        k1 = next;
    }
    Ok(k0)
}

/// `(K_μ(z), K_{μ+1}(z))` for `|μ| ≤ 1/2`.
fn k_pair(mu: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    if z.norm() <= TEMME_RADIUS {
        Ok(temme_pair(mu, z))
    } else {
        steed_pair(mu, z)
    }
}

fn temme_pair(mu: f64, z: Complex64) -> (Complex64, Complex64) {
    let one = Complex64::new(1.0, 0.0);
    let x2 = z * 0.5;
    let pimu = PI * mu;
    let fact = if pimu.abs() < EPS {
        1.0
    } else {
        pimu / pimu.sin()
    };
    let d = -x2.ln();
    let e = d * mu;
    let fact2 = if e.norm() < EPS { one } else { e.sinh() / e };
    let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
    let mut ff = (e.cosh() * gam1 + fact2 * d * gam2) * fact;
    let mut sum = ff;
    let ee = e.exp();
    let mut p = ee * (0.5 / gampl);
    let mut q = (ee * gammi).inv() * 0.5;
    let mut c = one;
    let dd = x2 * x2;
    let mut sum1 = p;
    let mu2 = mu * mu;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (ff * fi + p + q) / (fi * fi - mu2);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        let del1 = c * (p - ff * fi);
        sum1 += del1;
        if del.norm() < EPS * sum.norm() && del1.norm() < EPS * sum1.norm() {
            break;
        }
    }
    (sum, sum1 * 2.0 / z)
}

fn steed_pair(mu: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    let mut b = (z + 1.0) * 2.0;
    let mut d = b.inv();
    let mut h = d;
    let mut delh = d;
    let mut q1 = Complex64::new(0.0, 0.0);
    let mut q2 = Complex64::new(1.0, 0.0);
    let a1 = 0.25 - mu * mu;
    let mut q = Complex64::new(a1, 0.0);
    let mut c = a1;
    let mut a = -a1;
    let mut s = q * delh + 1.0;
    let mut converged = false;
    for i in 2..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += qnew * c;
        b += 2.0;
        d = (b + d * a).inv();
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).norm() < CF_EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence(format!(
            "continued fraction for K_{mu} at z = {z}"
        )));
    }
    let h = h * a1;
    let kmu = (Complex64::new(PI, 0.0) / (z * 2.0)).sqrt() * (-z).exp() / s;
    let kmu1 = kmu * (z + mu + 0.5 - h) / z;
    Ok((kmu, kmu1))
}

/// `K_ν` through `π (I_{-ν} - I_ν) / (2 sin νπ)` with power series for both `I`.
///
/// Refuses orders within [`NEAR_INTEGER`] of an integer and arguments outside
/// the power-series disc `|z| ≤ 8`.
pub fn bessel_k_reflection(nu: BesselOrder, z: ComplexValue) -> Result<ComplexValue> {
    check_finite(z)?;
    if nu.is_near_integer() {
        return Err(Error::PrecisionLoss { nu: nu.value() });
    }
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("K is singular at z = 0".into()));
    }
    if z.norm() > SERIES_RADIUS {
        return Err(Error::Precondition(format!(
            "reflection route limited to |z| <= {SERIES_RADIUS}, got |z| = {}",
            z.norm()
        )));
    }
    let nu = nu.value();
    let diff = i_series(-nu, z) - i_series(nu, z);
    Ok(diff * (PI / (2.0 * (nu * PI).sin())))
}

/// Large-argument expansion `√(π/2z) e^{-z} Σ_{k=0}^{terms} a_k(ν) z^{-k}`.
pub fn bessel_k_asymptotic(nu: BesselOrder, z: ComplexValue, terms: usize) -> Result<ComplexValue> {
    check_finite(z)?;
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("asymptotic expansion needs z != 0".into()));
    }
    let four_nu2 = 4.0 * nu.value() * nu.value();
    let zi = z.inv();
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..=terms {
        let odd = (2 * k - 1) as f64;
        term *= zi * ((four_nu2 - odd * odd) / (8.0 * k as f64));
        sum += term;
    }
    let lead = (Complex64::new(PI, 0.0) / (z * 2.0)).sqrt() * (-z).exp();
    finite_or_overflow(lead * sum, || format!("asymptotic K({z})"))
}
