use gw_counts::{bryan_leung_series, CountError};
use num_bigint::BigInt;
use qseries::qint;

/// Expands the same product by repeated in-place division: twelve passes of
/// `c[i] += c[i - m]` per factor, touching only integer additions.
fn repeated_division_oracle(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); n + 1];
    c[0] = BigInt::from(1);
    for m in 1..=n {
        for _ in 0..12 {
            for i in m..=n {
                let prev = c[i - m].clone();
                c[i] += prev;
            }
        }
    }
    c
}

#[test]
fn leading_coefficients() {
    let s = bryan_leung_series(3).unwrap();
    assert_eq!(s.coeff(&[0]), qint(1));
    assert_eq!(s.coeff(&[1]), qint(12));
    assert_eq!(s.coeff(&[2]), qint(90));
    assert_eq!(s.coeff(&[3]), qint(520));
}

#[test]
fn matches_repeated_division_to_order_thirty() {
    let s = bryan_leung_series(30).unwrap();
    let oracle = repeated_division_oracle(30);
    for (m, expected) in oracle.iter().enumerate() {
        let got = s.coeff(&[m as i64]);
        assert_eq!(got.denom(), &BigInt::from(1));
        assert_eq!(got.numer(), expected, "order {m}");
    }
}

#[test]
fn coefficients_grow_slower_than_powers_of_two() {
    let n = 200usize;
    let c = repeated_division_oracle(n);
    let mut pow = BigInt::from(1);
    for (m, a) in c.iter().enumerate().skip(1) {
        pow *= 2;
        assert!(a > &BigInt::from(0), "order {m} not positive");
        let uniform = &pow << 17;
        assert!(a < &uniform, "order {m} reaches 2^(m+17)");
        if m >= 98 {
            assert!(a < &pow, "order {m} reaches 2^{m}");
        }
    }
    for m in 40..n {
        assert!(c[m + 1] < &c[m] << 1, "ratio grows at {m}");
    }
    let s = bryan_leung_series(30).unwrap();
    for m in 1..=30i64 {
        assert!(s.coeff(&[m]) > qint(0));
    }
}

#[test]
fn rejects_negative_order() {
    assert!(matches!(
        bryan_leung_series(-1),
        Err(CountError::NegativeOrder(-1))
    ));
}
