use gw_counts::{certify_i_function, class_grade, euler_class, i_function, stirling_radius};
use num_bigint::BigInt;
use qseries::{qint, qrat, Q};

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[test]
fn zero_class_entry_is_the_euler_class() {
    let table = i_function(2);
    let entry = table.entry(&[0, 0, 0, 0]).unwrap();
    assert_eq!(entry.coeff(0), euler_class());
    assert_eq!(entry.min_power(), Some(0));
    assert_eq!(entry.max_power(), Some(0));
}

#[test]
fn scalar_part_carries_the_factorial_ratio() {
    let table = i_function(3);
    for beta in table.classes() {
        let [a, b, c, d] = *beta;
        let num = factorial(3 * a + b) * factorial(b + c + 2 * d);
        let den = factorial(a).pow(3)
            * factorial(b).pow(2)
            * factorial(c).pow(2)
            * factorial(d).pow(2);
        let expected = Q::new(num, den);
        let got = table.summand(beta).unwrap().coeff(-(c as i32)).scalar_part();
        assert_eq!(got, expected, "class {beta:?}");
    }
}

#[test]
fn pinned_summand_values() {
    let table = i_function(3);
    let r = table.summand(&[0, 2, 0, 1]).unwrap();
    assert_eq!(r.coeff(0).scalar_part(), qint(12));
    assert_eq!(r.coeff(-1).coeff(1, 0, 0, 0), qint(54));
    assert_eq!(r.coeff(-1).coeff(0, 1, 0, 0), qint(7));
    assert_eq!(r.coeff(-1).coeff(0, 0, 1, 0), qint(25));
    assert_eq!(r.coeff(-1).coeff(0, 0, 0, 1), qint(26));
    assert_eq!(r.coeff(-2).coeff(1, 0, 1, 0), qrat(225, 2));
    assert_eq!(r.coeff(-5).coeff(2, 1, 1, 1), qint(-315));
    assert_eq!(r.min_power(), Some(-5));
}

#[test]
fn table_covers_every_class_up_to_the_grade() {
    let table = i_function(3);
    let n = table.classes().count();
    assert_eq!(n, 35);
    assert!(table.classes().all(|b| class_grade(b) <= 3));
}

#[test]
fn coefficients_pass_the_exponential_bound() {
    let table = i_function(4);
    let report = certify_i_function(&table);
    assert!(report.pass, "violations: {:?}", report.failures);
    assert!(report.checked > 0);
    assert!(report.empirical_minimal_r <= 14348907.0);
}

#[test]
fn constructed_radius_value() {
    assert_eq!(stirling_radius(), qint(14348907));
}
