use std::f64::consts::PI;

use num_complex::Complex64;

use super::bessel::{BesselOrder, ComplexValue};
use crate::error::{Error, Result};

/// `∫₀^∞ x K_μ(a x) K_μ(b x) dx` in closed form.
///
/// Evaluated as `π sinh(μL) / (sin(μπ) (a² - b²))` with `L = ln a - ln b`,
/// arranged so that the `μ → 0` limit `(ln a - ln b)/(a² - b²)` and the
/// `a → b` limit `πμ / (2a² sin μπ)` come out without cancellation.
/// Requires `Re(a + b) > 0` and `μ < 1`.
pub fn k_orthogonality_integral(
    mu: BesselOrder,
    a: ComplexValue,
    b: ComplexValue,
) -> Result<ComplexValue> {
    let mu = mu.value();
    if mu >= 1.0 {
        return Err(Error::Precondition(format!(
            "orthogonality integral needs |mu| < 1, got {mu}"
        )));
    }
    if (a + b).re <= 0.0 {
        return Err(Error::Precondition(format!(
            "orthogonality integral needs Re(a + b) > 0, got a = {a}, b = {b}"
        )));
    }
    if a.norm() == 0.0 || b.norm() == 0.0 {
        return Err(Error::Precondition(
            "orthogonality integral needs a, b != 0".into(),
        ));
    }

    // L / (a² - b²), with a series for ln(1+u)/u when a ≈ b.
    let u = (a - b) / b;
    let (log_diff, log_ratio_over_u) = if u.norm() < 1e-3 {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut power = Complex64::new(1.0, 0.0);
        for k in 1..=12 {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sum += power * (sign / k as f64);
            power *= u;
        }
        (sum * u, sum)
    } else {
        let l = a.ln() - b.ln();
        (l, l / u)
    };
    let l_over_diff = log_ratio_over_u / (b * (a + b));

    // sinh(μL)/(μL), with its series at small argument.
    let w = log_diff * mu;
    let sinhc = if w.norm() < 1e-4 {
        let w2 = w * w;
        w2 * (w2 / 120.0 + 1.0 / 6.0) + 1.0
    } else {
        w.sinh() / w
    };
    let mu_over_sin = if mu == 0.0 {
        1.0 / PI
    } else {
        mu / (mu * PI).sin()
    };

    Ok(l_over_diff * sinhc * (PI * mu_over_sin))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(nu: f64) -> BesselOrder {
        BesselOrder::new(nu).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn mu_zero_limit() {
        let got = k_orthogonality_integral(order(0.0), c(1.0), c(2.0)).unwrap();
        let want = 2f64.ln() / 3.0;
        assert!((got.re - want).abs() < 1e-15 && got.im == 0.0);
    }

    #[test]
    fn coincident_arguments() {
        for cc in [0.5, 1.0, 3.0] {
            let half = k_orthogonality_integral(order(0.5), c(cc), c(cc)).unwrap();
            assert!((half.re - PI / (4.0 * cc * cc)).abs() < 1e-15 / (cc * cc));
            let zero = k_orthogonality_integral(order(0.0), c(cc), c(cc)).unwrap();
            assert!((zero.re - 1.0 / (2.0 * cc * cc)).abs() < 1e-15 / (cc * cc));
        }
    }

    #[test]
    fn near_coincident_is_continuous() {
        let at = k_orthogonality_integral(order(0.3), c(1.0), c(1.0)).unwrap();
        for eps in [1e-12, 1e-6, 1e-4, 2e-3] {
            let near = k_orthogonality_integral(order(0.3), c(1.0 + eps), c(1.0)).unwrap();
            assert!((near - at).norm() < 2.0 * eps);
        }
    }

    #[test]
    fn general_formula() {
        // π (ab)^{-μ} (a^{2μ} - b^{2μ}) / (2 sin μπ (a² - b²)) written out directly.
        let (mu, a, b) = (0.4, Complex64::new(1.0, -1.0), Complex64::new(1.0, 1.0));
        let direct = (a * b).powf(-mu) * (a.powf(2.0 * mu) - b.powf(2.0 * mu)) * PI
            / ((a * a - b * b) * (2.0 * (mu * PI).sin()));
        let got = k_orthogonality_integral(order(mu), a, b).unwrap();
        assert!((got - direct).norm() < 1e-14 * direct.norm());
    }

    #[test]
    fn preconditions() {
        assert!(k_orthogonality_integral(order(1.2), c(1.0), c(1.0)).is_err());
        assert!(k_orthogonality_integral(order(0.2), c(-1.0), c(0.5)).is_err());
        assert!(k_orthogonality_integral(order(0.2), c(0.0), c(0.5)).is_err());
    }
}
