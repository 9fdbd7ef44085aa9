use elliptic::{below, modular_consistency, parameter_at, theta, Complex, EllipticError};

fn sample_points() -> Vec<Complex> {
    vec![
        Complex::from_f64(0.0, 1.0),
        Complex::from_f64(0.5, 2.0),
        Complex::from_f64(0.0, 3.0),
    ]
}

#[test]
fn first_kind_vanishes_at_the_origin() {
    let v = theta(1, &Complex::from_f64(0.0, 2.0), 1e-30).unwrap();
    assert!(below(&v.value.modulus(), 1e-60));
}

#[test]
fn tate_limit_behaviour() {
    let rho = Complex::from_f64(0.0, 50.0);
    let t3 = theta(3, &rho, 1e-40).unwrap();
    let t2 = theta(2, &rho, 1e-40).unwrap();
    let one = Complex::one();
    assert!(below(&t3.value.sub(&one).modulus(), 1e-30));
    assert!(below(&t2.value.modulus(), 1e-15));
    assert!(below(&t3.tail_bound, 1e-30));
    assert!(below(&t2.tail_bound, 1e-30));
}

#[test]
fn tails_are_certified_below_tolerance() {
    for rho in sample_points() {
        for kind in 2..=4u8 {
            let v = theta(kind, &rho, 1e-25).unwrap();
            assert!(below(&v.tail_bound, 1e-25), "kind {kind}");
        }
    }
}

#[test]
fn fourth_power_identity_at_sample_points() {
    for rho in sample_points() {
        let report = modular_consistency(&rho, 1e-30).unwrap();
        let check = report.check("fourth-power identity").unwrap();
        assert!(check.residual_below(1e-12));
    }
}

#[test]
fn half_parameter_modulus_identity_at_sample_points() {
    for rho in sample_points() {
        let report = modular_consistency(&rho, 1e-30).unwrap();
        let check = report.check("half-parameter modulus identity").unwrap();
        assert!(check.residual_below(1e-12));
    }
}

#[test]
fn parameter_shift_swaps_the_even_ratios() {
    for rho in sample_points() {
        let report = modular_consistency(&rho, 1e-30).unwrap();
        let check = report
            .check("theta3/theta4 vs theta4/theta3 at shift")
            .unwrap();
        assert!(check.residual_below(1e-12));
    }
}

#[test]
fn quotient_parameter_gives_the_same_curve() {
    let report = modular_consistency(&Complex::from_f64(0.0, 3.0), 1e-30).unwrap();
    let check = report.check("j agreement (relative)").unwrap();
    assert!(check.residual_below(1e-8));
}

#[test]
fn family_parameter_is_not_constant() {
    let tol = 1e-30;
    let a = parameter_at(&Complex::from_f64(0.0, 2.0), tol).unwrap();
    let b = parameter_at(&Complex::from_f64(0.0, 3.0), tol).unwrap();
    assert!(!below(&a.sub(&b).modulus(), 1e-6));
}

#[test]
fn modulus_grows_toward_the_cusp() {
    let tol = 1e-40;
    let mut previous = None;
    for im in [5.0, 10.0, 20.0] {
        let rho = Complex::from_f64(0.0, im);
        let t = parameter_at(&rho, tol).unwrap();
        let quarter = Complex::from_f64(0.25, 0.0);
        let k = t.mul(&t).add(&quarter).div(&t).modulus();
        if let Some(p) = &previous {
            assert!(matches!(k.cmp(p), Some(c) if c > 0), "not increasing at {im}");
        }
        previous = Some(k);
    }
}

#[test]
fn rejects_bad_inputs() {
    assert!(matches!(
        theta(3, &Complex::from_f64(0.0, -1.0), 1e-10),
        Err(EllipticError::NonPositiveImaginaryPart)
    ));
    assert!(matches!(
        theta(5, &Complex::from_f64(0.0, 1.0), 1e-10),
        Err(EllipticError::InvalidThetaKind(5))
    ));
}
