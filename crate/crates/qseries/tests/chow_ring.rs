//! Quotient-ring arithmetic and hbar-Laurent layer checks.

use proptest::prelude::*;
use qseries::{qint, ChowElement, HbarLaurent, Q};

fn arb_chow() -> impl Strategy<Value = ChowElement> {
    proptest::collection::vec((-4i64..=4).prop_map(qint), 24).prop_map(|cs| {
        let mut e = ChowElement::zero();
        let mut i = 0;
        for a in 0..=2usize {
            for b in 0..=1usize {
                for c in 0..=1usize {
                    for d in 0..=1usize {
                        let mut mono = ChowElement::one();
                        for _ in 0..a {
                            mono = mono.mul(&ChowElement::h(1));
                        }
                        for (gen, count) in [(2, b), (3, c), (4, d)] {
                            for _ in 0..count {
                                mono = mono.mul(&ChowElement::h(gen));
                            }
                        }
                        e = e.add(&mono.scale(&cs[i]));
                        i += 1;
                    }
                }
            }
        }
        e
    })
}

proptest! {
    #[test]
    fn chow_mul_commutes(a in arb_chow(), b in arb_chow()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn chow_mul_associates(a in arb_chow(), b in arb_chow(), c in arb_chow()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn chow_distributes(a in arb_chow(), b in arb_chow(), c in arb_chow()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn chow_unital(a in arb_chow()) {
        prop_assert_eq!(a.mul(&ChowElement::one()), a);
    }
}

#[test]
fn h1_cubed_vanishes() {
    let h1 = ChowElement::h(1);
    assert!(h1.mul(&h1).mul(&h1).is_zero());
    assert!(!h1.mul(&h1).is_zero());
}

#[test]
fn squares_of_line_factors_vanish() {
    for i in 2..=4 {
        let h = ChowElement::h(i);
        assert!(h.mul(&h).is_zero());
    }
}

#[test]
fn product_of_linear_forms() {
    // (3H1 + H2)(H2 + H3 + 2H4) = 3H1H2 + 3H1H3 + 6H1H4 + H2H3 + 2H2H4
    let l1 = ChowElement::linear([qint(3), qint(1), qint(0), qint(0)]);
    let l2 = ChowElement::linear([qint(0), qint(1), qint(1), qint(2)]);
    let p = l1.mul(&l2);
    assert_eq!(p.coeff(1, 1, 0, 0), qint(3));
    assert_eq!(p.coeff(1, 0, 1, 0), qint(3));
    assert_eq!(p.coeff(1, 0, 0, 1), qint(6));
    assert_eq!(p.coeff(0, 1, 1, 0), qint(1));
    assert_eq!(p.coeff(0, 1, 0, 1), qint(2));
    assert_eq!(p.coeff(0, 1, 1, 1), qint(0));
    assert_eq!(p.iter().count(), 5);
}

#[test]
fn top_pairing_normalization() {
    let mut top = ChowElement::h(1).mul(&ChowElement::h(1));
    for i in 2..=4 {
        top = top.mul(&ChowElement::h(i));
    }
    assert_eq!(top.top_pairing(), qint(1));
    assert_eq!(ChowElement::one().top_pairing(), qint(0));
}

#[test]
fn hbar_laurent_arithmetic() {
    let a = HbarLaurent::from_term(-1, ChowElement::h(1));
    let b = HbarLaurent::from_term(2, ChowElement::h(2));
    let p = a.mul(&b);
    assert_eq!(p.min_power(), Some(1));
    assert_eq!(p.max_power(), Some(1));
    assert_eq!(p.coeff(1), ChowElement::h(1).mul(&ChowElement::h(2)));
    // powers inside the window are never dropped silently
    let s = a.add(&b);
    assert_eq!(s.min_power(), Some(-1));
    assert_eq!(s.max_power(), Some(2));
    assert!(s.coeff(0).is_zero());
}

#[test]
fn hbar_floored_product_discards_below_floor() {
    let a = HbarLaurent::from_term(-3, ChowElement::one());
    let b = HbarLaurent::from_term(-3, ChowElement::one());
    assert!(a.mul_floored(&b, -5).is_zero());
    assert_eq!(a.mul(&b).min_power(), Some(-6));
}

#[test]
fn q_type_is_rational() {
    let x: Q = qint(3) / qint(4);
    assert_eq!(x.to_string(), "3/4");
}
