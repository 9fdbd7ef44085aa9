//! Chart agreement, convexity, effectivity and growth-bound checks for the
//! piecewise-linear potential.

use affine_base::{kink, phi, phi_difference_bound, ConeChart, PLValue, UCoverPoint};

fn phi_k(k: i64) -> PLValue {
    phi(&UCoverPoint::integral(k))
}

#[test]
fn zero_on_the_zero_cone() {
    assert_eq!(phi_k(0), PLValue::zero());
    assert_eq!(phi_k(1), PLValue::zero());
    let interior = UCoverPoint::rational(1, 2).unwrap();
    assert_eq!(phi(&interior), PLValue::zero());
}

#[test]
fn pinned_values() {
    assert_eq!(phi_k(2), PLValue::boundary_class(1));
    assert_eq!(phi_k(4), PLValue::from_integers([3, 2, 1, 0]));
    assert_eq!(phi_k(-2), PLValue::from_integers([0, 0, 1, 2]));
    assert_eq!(phi_k(-4), PLValue::from_integers([1, 2, 3, 4]));
    assert_eq!(phi_k(6), PLValue::from_integers([6, 4, 3, 2]));
    assert_eq!(phi_k(8), PLValue::from_integers([10, 8, 6, 4]));
}

#[test]
fn chart_agreement_on_shared_rays() {
    for k in -32..=32i64 {
        let p = UCoverPoint::integral(k);
        let left = ConeChart::new(k - 1);
        let right = ConeChart::new(k);
        assert!(left.contains(&p) && right.contains(&p));
        assert_eq!(left.eval(&p), right.eval(&p), "disagreement on ray {k}");
        // also at a non-unit height point of the same ray
        let tall = UCoverPoint::new(
            p.x() * num_rational::BigRational::from_integer(3.into()),
            p.y() * num_rational::BigRational::from_integer(3.into()),
        )
        .unwrap();
        assert_eq!(left.eval(&tall), right.eval(&tall));
    }
}

#[test]
fn convexity_second_difference_is_kink() {
    for m in -64..=64i64 {
        let second = phi_k(m + 1).add(&phi_k(m - 1)).sub(&phi_k(m).scale_int(2));
        assert_eq!(second, kink(m), "second difference at {m}");
    }
}

#[test]
fn kinks_are_single_effective_classes_and_periodic() {
    for k in -8..=8i64 {
        let b = kink(k);
        assert!(b.is_effective());
        assert!(!b.is_zero(), "strict convexity requires nonzero kinks");
        assert_eq!(
            b.coeffs()
                .iter()
                .filter(|c| !num_traits::Zero::is_zero(*c))
                .count(),
            1
        );
        assert_eq!(kink(k + 4), kink(k));
    }
    assert_eq!(kink(1), PLValue::boundary_class(1));
    assert_eq!(kink(2), PLValue::boundary_class(2));
    assert_eq!(kink(3), PLValue::boundary_class(3));
    assert_eq!(kink(4), PLValue::boundary_class(4));
}

#[test]
fn effectivity_at_integral_points() {
    for k in -64..=64i64 {
        assert!(phi_k(k).is_effective(), "phi({k}, 1) not effective");
    }
}

#[test]
fn difference_bound_examples() {
    // m = 2: step D1 (doubled: 2 D1) against the trivial bound -D1
    let check = phi_difference_bound(2).unwrap();
    assert!(check.pass);
    assert_eq!(check.doubled_step, PLValue::boundary_class(1).scale_int(2));
    assert_eq!(check.bound, PLValue::boundary_class(1).scale_int(-1));
    // m = 5: bound class D4 with coefficient 1
    let check = phi_difference_bound(5).unwrap();
    assert!(check.pass);
    assert_eq!(check.bound, PLValue::boundary_class(4));
}

#[test]
fn difference_bound_full_range() {
    for m in 2..=64i64 {
        assert!(phi_difference_bound(m).unwrap().pass, "bound fails at {m}");
        assert!(
            phi_difference_bound(-m).unwrap().pass,
            "bound fails at -{m}"
        );
    }
}

#[test]
fn difference_bound_rejects_small_steps() {
    assert!(phi_difference_bound(1).is_err());
    assert!(phi_difference_bound(0).is_err());
    assert!(phi_difference_bound(-1).is_err());
}

#[test]
fn deck_transformation_shifts_by_fibres() {
    // phi(x + 4y, y) - phi(x, y) is linear in (x, y) plus a multiple of F on
    // each chart; concretely at integral points the grade difference grows by
    // the fibre pattern. Spot-check the first-difference telescoping.
    for m in -20..=20i64 {
        let step = phi_k(m + 1).sub(&phi_k(m));
        let mut expected = PLValue::zero();
        if m >= 1 {
            for k in 1..=m {
                expected = expected.add(&kink(k));
            }
        } else {
            for k in (m + 1)..=0 {
                expected = expected.sub(&kink(k));
            }
        }
        assert_eq!(step, expected, "telescoped step at {m}");
    }
}

#[test]
fn interior_points_use_rational_coefficients() {
    let p = UCoverPoint::rational(7, 2).unwrap();
    let v = phi(&p);
    assert!(v.integer_coeffs().is_none());
    // midpoint value is the average of the ray endpoints on a linear chart
    let avg = phi_k(3).add(&phi_k(4)).scale(&num_rational::BigRational::new(
        1.into(),
        2.into(),
    ));
    assert_eq!(v, avg);
}

#[test]
fn svg_is_deterministic() {
    let a = affine_base::svg_figure(6);
    let b = affine_base::svg_figure(6);
    assert_eq!(a, b);
    assert!(a.starts_with("<svg"));
    assert!(a.contains("zero cone"));
}

#[test]
fn non_positive_height_rejected() {
    use num_rational::BigRational;
    let bad = UCoverPoint::new(
        BigRational::from_integer(1.into()),
        BigRational::from_integer(0.into()),
    );
    assert!(bad.is_err());
}
