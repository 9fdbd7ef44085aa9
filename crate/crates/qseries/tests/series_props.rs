//! Randomized ring-axiom and coherence properties for QSeries.

use proptest::prelude::*;
use qseries::{qint, qrat, ExponentLattice, QSeries, SeriesError, Q};

fn lat2() -> ExponentLattice {
    ExponentLattice::unit_weights(["x", "y"]).unwrap()
}

const TRUNC: i64 = 8;

fn arb_coeff() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qrat(n, d))
}

/// Series with nonnegative exponents and grade at most TRUNC.
fn arb_series() -> impl Strategy<Value = QSeries> {
    proptest::collection::vec(((0i64..=4, 0i64..=4), arb_coeff()), 0..6).prop_map(|terms| {
        let mut s = QSeries::zero(lat2(), TRUNC);
        for ((a, b), c) in terms {
            let m = QSeries::monomial(lat2(), TRUNC, vec![a, b], c).unwrap();
            s = s.add(&m).unwrap();
        }
        s
    })
}

/// Unit series: nonzero constant term plus a random positive-grade tail.
fn arb_unit() -> impl Strategy<Value = QSeries> {
    (
        prop_oneof![Just(qint(1)), Just(qint(-2)), Just(qrat(3, 2))],
        arb_positive_grade(),
    )
        .prop_map(|(c0, tail)| {
            QSeries::constant(lat2(), TRUNC, c0).add(&tail).unwrap()
        })
}

/// Series with every term of positive grade.
fn arb_positive_grade() -> impl Strategy<Value = QSeries> {
    arb_series().prop_map(|s| {
        let zero_exp = vec![0i64, 0];
        let c0 = s.coeff(&zero_exp);
        let const_part = QSeries::constant(lat2(), TRUNC, c0);
        s.sub(&const_part).unwrap()
    })
}

proptest! {
    #[test]
    fn add_commutes(a in arb_series(), b in arb_series()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
    }

    #[test]
    fn mul_commutes(a in arb_series(), b in arb_series()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn mul_associates(a in arb_series(), b in arb_series(), c in arb_series()) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn mul_distributes(a in arb_series(), b in arb_series(), c in arb_series()) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn unit_law(a in arb_series()) {
        let one = QSeries::one(lat2(), TRUNC);
        prop_assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn truncation_coherence(a in arb_series(), b in arb_series(), m in 0i64..=TRUNC) {
        // computing at order TRUNC then truncating to m equals computing at m
        let full = a.mul(&b).unwrap().truncate(m);
        let low = a.truncate(m).mul(&b.truncate(m)).unwrap();
        prop_assert_eq!(full, low);
    }

    #[test]
    fn exp_is_homomorphic(a in arb_positive_grade(), b in arb_positive_grade()) {
        let lhs = a.add(&b).unwrap().exp().unwrap();
        let rhs = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_cancels(a in arb_positive_grade()) {
        let prod = a.exp().unwrap().mul(&a.neg().exp().unwrap()).unwrap();
        prop_assert_eq!(prod, QSeries::one(lat2(), TRUNC));
    }

    #[test]
    fn inverse_round_trip(a in arb_unit()) {
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), QSeries::one(lat2(), TRUNC));
        prop_assert_eq!(inv.inverse().unwrap(), a);
    }

    #[test]
    fn substitution_composes(a in arb_series(), f in arb_unit(), g in arb_unit()) {
        // substituting by f then by g equals substituting by f(x*g)*g
        let id = QSeries::one(lat2(), TRUNC);
        let once = a.substitute(&[f.clone(), id.clone()]).unwrap();
        let twice = once.substitute(&[g.clone(), id.clone()]).unwrap();
        let fg = f
            .substitute(&[g.clone(), id.clone()])
            .unwrap()
            .mul(&g)
            .unwrap();
        let direct = a.substitute(&[fg, id]).unwrap();
        prop_assert_eq!(twice, direct);
    }

    #[test]
    fn substitution_by_ones_is_identity(a in arb_series()) {
        let id = QSeries::one(lat2(), TRUNC);
        prop_assert_eq!(a.substitute(&[id.clone(), id]).unwrap(), a);
    }
}

#[test]
fn difference_of_squares() {
    let lat = ExponentLattice::unit_weights(["z"]).unwrap();
    let one = QSeries::one(lat.clone(), 5);
    let z = QSeries::monomial(lat.clone(), 5, vec![1], qint(1)).unwrap();
    let prod = one.add(&z).unwrap().mul(&one.sub(&z).unwrap()).unwrap();
    let z2 = QSeries::monomial(lat.clone(), 5, vec![2], qint(-1)).unwrap();
    assert_eq!(prod, one.add(&z2).unwrap());
}

#[test]
fn geometric_series_inverse() {
    let lat = ExponentLattice::unit_weights(["z"]).unwrap();
    let one = QSeries::one(lat.clone(), 10);
    let z = QSeries::monomial(lat.clone(), 10, vec![1], qint(1)).unwrap();
    let inv = one.sub(&z).unwrap().inverse().unwrap();
    // oracle: partial products of hand recursion a_n = a_{n-1}
    for n in 0..=10i64 {
        assert_eq!(inv.coeff(&[n]), qint(1));
    }
    // inverse(1-z) to order 3 is 1 + z + z^2 + z^3
    let low = one.sub(&z).unwrap().truncate(3).inverse().unwrap();
    assert_eq!(low.len(), 4);
}

#[test]
fn scalar_inverse() {
    let lat = ExponentLattice::unit_weights(["z"]).unwrap();
    let c = QSeries::constant(lat, 4, qrat(7, 3));
    assert_eq!(c.inverse().unwrap().constant_term(), qrat(3, 7));
}

#[test]
fn exp_of_z_taylor() {
    let lat = ExponentLattice::unit_weights(["z"]).unwrap();
    let z = QSeries::monomial(lat.clone(), 4, vec![1], qint(1)).unwrap();
    let e = z.exp().unwrap();
    assert_eq!(e.coeff(&[0]), qint(1));
    assert_eq!(e.coeff(&[1]), qint(1));
    assert_eq!(e.coeff(&[2]), qrat(1, 2));
    assert_eq!(e.coeff(&[3]), qrat(1, 6));
    assert_eq!(e.coeff(&[4]), qrat(1, 24));
}

#[test]
fn exp_rejects_constant_term() {
    let lat = ExponentLattice::unit_weights(["z"]).unwrap();
    let s = QSeries::constant(lat, 4, qint(1));
    assert_eq!(s.exp().unwrap_err(), SeriesError::NonzeroConstant);
}

#[test]
fn inverse_rejects_zero_constant() {
    let lat = ExponentLattice::unit_weights(["z"]).unwrap();
    let z = QSeries::monomial(lat, 4, vec![1], qint(1)).unwrap();
    assert_eq!(z.inverse().unwrap_err(), SeriesError::ZeroConstant);
}

#[test]
fn substitution_binomial() {
    // x -> x(1+x) applied to x^2 at order 4 gives x^2 + 2x^3 + x^4
    let lat = ExponentLattice::unit_weights(["x"]).unwrap();
    let one = QSeries::one(lat.clone(), 4);
    let x = QSeries::monomial(lat.clone(), 4, vec![1], qint(1)).unwrap();
    let x2 = QSeries::monomial(lat.clone(), 4, vec![2], qint(1)).unwrap();
    let out = x2.substitute(&[one.add(&x).unwrap()]).unwrap();
    assert_eq!(out.coeff(&[2]), qint(1));
    assert_eq!(out.coeff(&[3]), qint(2));
    assert_eq!(out.coeff(&[4]), qint(1));
    assert_eq!(out.len(), 3);
}

#[test]
fn lattice_mismatch_rejected() {
    let a = QSeries::one(ExponentLattice::unit_weights(["x"]).unwrap(), 3);
    let b = QSeries::one(ExponentLattice::unit_weights(["y"]).unwrap(), 3);
    assert!(matches!(
        a.add(&b).unwrap_err(),
        SeriesError::LatticeMismatch(_)
    ));
}
