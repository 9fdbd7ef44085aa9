//! Exponential-bound certification and toolkit-closure checks.

use proptest::prelude::*;
use qseries::{
    certify_series, exp_bound_certify, qint, qrat, ExponentLattice, QSeries, SupCertificate, Q,
};

fn zlat() -> ExponentLattice {
    ExponentLattice::unit_weights(["z"]).unwrap()
}

#[test]
fn empty_series_passes_vacuously() {
    let s = QSeries::zero(zlat(), 10);
    let report = certify_series(&s, &qint(1), &qint(2));
    assert!(report.pass);
    assert_eq!(report.checked, 0);
}

#[test]
fn geometric_series_bound() {
    // sum 2^n z^n: diag(n) = n + 1 so c = 1, r = 2 passes and r = 3/2 fails
    let mut s = QSeries::zero(zlat(), 20);
    let mut c = qint(1);
    for n in 0..=20i64 {
        s = s
            .add(&QSeries::monomial(zlat(), 20, vec![n], c.clone()).unwrap())
            .unwrap();
        c *= qint(2);
    }
    assert!(certify_series(&s, &qint(1), &qint(2)).pass);
    let report = certify_series(&s, &qint(1), &qrat(3, 2));
    assert!(!report.pass);
    assert!(!report.failures.is_empty());
    assert!(report.empirical_minimal_r > 1.9 && report.empirical_minimal_r <= 2.0);
}

#[test]
fn certificate_round_trip_bounds_coefficients() {
    // a certified (c, r) converts to a sup bound and back to a valid (c', r')
    let c = qint(1);
    let r = qint(2);
    let cert = SupCertificate::from_coefficient_bound(&c, &r, 1);
    let (c2, r2) = cert.coefficient_bound();
    let mut s = QSeries::zero(zlat(), 15);
    let mut coeff = qint(1);
    for n in 0..=15i64 {
        s = s
            .add(&QSeries::monomial(zlat(), 15, vec![n], coeff.clone()).unwrap())
            .unwrap();
        coeff *= qint(2);
    }
    assert!(certify_series(&s, &c2, &r2).pass);
}

proptest! {
    /// Closure under products: if |a_v| <= c1 r1^diag and |b_v| <= c2 r2^diag
    /// then the certified product constants bound the actual product series.
    #[test]
    fn closure_under_products(
        coeffs_a in proptest::collection::vec(-8i64..=8, 6),
        coeffs_b in proptest::collection::vec(-8i64..=8, 6),
    ) {
        let trunc = 10i64;
        let build = |cs: &[i64]| {
            let mut s = QSeries::zero(zlat(), trunc);
            for (n, &c) in cs.iter().enumerate() {
                let m = QSeries::monomial(zlat(), trunc, vec![n as i64], qint(c)).unwrap();
                s = s.add(&m).unwrap();
            }
            s
        };
        let a = build(&coeffs_a);
        let b = build(&coeffs_b);
        let (c0, r0) = (qint(8), qint(1));
        prop_assert!(certify_series(&a, &c0, &r0).pass);
        prop_assert!(certify_series(&b, &c0, &r0).pass);
        let cert = SupCertificate::from_coefficient_bound(&c0, &r0, 1);
        let prod_cert = cert.product(&cert);
        let (cp, rp) = prod_cert.coefficient_bound();
        prop_assert!(certify_series(&a.mul(&b).unwrap(), &cp, &rp).pass);
    }

    /// Closure under exponentials of positive-grade elements.
    #[test]
    fn closure_under_exp(coeffs in proptest::collection::vec(-3i64..=3, 5)) {
        let trunc = 8i64;
        let mut s = QSeries::zero(zlat(), trunc);
        for (n, &c) in coeffs.iter().enumerate() {
            let m = QSeries::monomial(zlat(), trunc, vec![n as i64 + 1], qint(c)).unwrap();
            s = s.add(&m).unwrap();
        }
        let (c0, r0) = (qint(3), qint(1));
        prop_assert!(certify_series(&s, &c0, &r0).pass);
        let cert = SupCertificate::from_coefficient_bound(&c0, &r0, 1);
        let (ce, re) = cert.exp().coefficient_bound();
        prop_assert!(certify_series(&s.exp().unwrap(), &ce, &re).pass);
    }

    /// Closure under inverses of units.
    #[test]
    fn closure_under_inverse(coeffs in proptest::collection::vec(-3i64..=3, 5), c0n in 1i64..=4) {
        let trunc = 8i64;
        let mut tail = QSeries::zero(zlat(), trunc);
        for (n, &c) in coeffs.iter().enumerate() {
            let m = QSeries::monomial(zlat(), trunc, vec![n as i64 + 1], qint(c)).unwrap();
            tail = tail.add(&m).unwrap();
        }
        let c0 = qint(c0n);
        let unit = QSeries::constant(zlat(), trunc, c0.clone()).add(&tail).unwrap();
        let (cb, rb) = (qint(3), qint(1));
        prop_assert!(certify_series(&tail, &cb, &rb).pass);
        let tail_cert = SupCertificate::from_coefficient_bound(&cb, &rb, 1);
        let inv_cert = tail_cert.inverse_unit(&c0);
        let (ci, ri) = inv_cert.coefficient_bound();
        prop_assert!(certify_series(&unit.inverse().unwrap(), &ci, &ri).pass);
    }

    /// Closure under unit substitutions.
    #[test]
    fn closure_under_substitution(
        coeffs in proptest::collection::vec(-3i64..=3, 4),
        mult_tail in proptest::collection::vec(-2i64..=2, 3),
    ) {
        let trunc = 8i64;
        let mut s = QSeries::zero(zlat(), trunc);
        for (n, &c) in coeffs.iter().enumerate() {
            let m = QSeries::monomial(zlat(), trunc, vec![n as i64], qint(c)).unwrap();
            s = s.add(&m).unwrap();
        }
        let mut f = QSeries::one(zlat(), trunc);
        for (n, &c) in mult_tail.iter().enumerate() {
            let m = QSeries::monomial(zlat(), trunc, vec![n as i64 + 1], qint(c)).unwrap();
            f = f.add(&m).unwrap();
        }
        let (cs, rs) = (qint(3), qint(1));
        let (cf, rf) = (qint(2), qint(1));
        prop_assert!(certify_series(&s, &cs, &rs).pass);
        prop_assert!(certify_series(&f, &cf, &rf).pass);
        let s_cert = SupCertificate::from_coefficient_bound(&cs, &rs, 1);
        let f_cert = SupCertificate::from_coefficient_bound(&cf, &rf, 1);
        let sub_cert = s_cert.substitute(std::slice::from_ref(&f_cert));
        let (co, ro) = sub_cert.coefficient_bound();
        prop_assert!(certify_series(&s.substitute(std::slice::from_ref(&f)).unwrap(), &co, &ro).pass);
    }
}

#[test]
fn raw_table_interface() {
    let table: Vec<(Vec<i64>, Q)> = vec![(vec![0, 0], qint(1)), (vec![1, 2], qrat(1, 3))];
    let report = exp_bound_certify(table.iter().map(|(v, c)| (v, c)), &qint(1), &qint(2));
    assert!(report.pass);
    assert_eq!(report.checked, 2);
}
