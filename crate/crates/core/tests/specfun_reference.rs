//! `I_ν` and `K_ν` against high-precision reference values.

#[allow(dead_code)]
mod fixtures {
    include!("fixtures/bessel_reference.rs");
}

use num_complex::Complex64;
use punctured_plane::specfun::{bessel_i, bessel_k, bessel_k_reflection, BesselOrder};

#[test]
fn k_matches_reference() {
    let mut worst = 0.0f64;
    for &(nu, x, y, _, _, kr, ki) in fixtures::BESSEL_REFERENCE {
        let z = Complex64::new(x, y);
        if y == 0.0 && x < 0.0 {
            continue;
        }
        let want = Complex64::new(kr, ki);
        let got = bessel_k(BesselOrder::new(nu).unwrap(), z).unwrap();
        let err = (got - want).norm() / want.norm();
        worst = worst.max(err);
        assert!(
            err <= 1e-12,
            "K_{nu}({z}) = {got}, want {want}, rel err {err:e}"
        );
    }
    eprintln!("worst K relative error {worst:e}");
}

#[test]
fn i_matches_reference() {
    let mut worst = 0.0f64;
    for &(nu, x, y, ir, ii, _, _) in fixtures::BESSEL_REFERENCE {
        let z = Complex64::new(x, y);
        let want = Complex64::new(ir, ii);
        let got = bessel_i(BesselOrder::new(nu).unwrap(), z)
            .unwrap_or_else(|e| panic!("I_{nu}({z}): {e}"));
        let err = (got - want).norm() / want.norm();
        worst = worst.max(err);
        assert!(
            err <= 1e-12,
            "I_{nu}({z}) = {got}, want {want}, rel err {err:e}"
        );
    }
    eprintln!("worst I relative error {worst:e}");
}

#[test]
fn reflection_route_matches_reference_inside_its_disc() {
    for &(nu, x, y, _, _, kr, ki) in fixtures::BESSEL_REFERENCE {
        let order = BesselOrder::new(nu).unwrap();
        let z = Complex64::new(x, y);
        if order.is_near_integer() || z.norm() > 2.0 || (y == 0.0 && x < 0.0) {
            continue;
        }
        let want = Complex64::new(kr, ki);
        let got = bessel_k_reflection(order, z).unwrap();
        let err = (got - want).norm() / want.norm();
        assert!(err <= 1e-12, "reflection K_{nu}({z}) rel err {err:e}");
    }
}
