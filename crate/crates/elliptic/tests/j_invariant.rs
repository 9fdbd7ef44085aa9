use elliptic::{
    j_from_modulus, j_of_modulus_value, modulus_j_formula, parameter_modulus, pencil_j_invariant,
    pencil_quartic, qrat, quartic_j, weierstrass_j, Poly, RationalFunction,
};

fn displayed_j() -> RationalFunction {
    let num = [
        (24usize, 16777216i64),
        (20, 44040192),
        (16, 38731776),
        (12, 11583488),
        (8, 151296),
        (4, 672),
        (0, 1),
    ]
    .into_iter()
    .fold(Poly::zero(), |acc, (n, c)| {
        acc.add(&Poly::monomial(n, qrat(c, 1)))
    });
    let den = [
        (20usize, 65536i64),
        (16, -16384),
        (12, 1536),
        (8, -64),
        (4, 1),
    ]
    .into_iter()
    .fold(Poly::zero(), |acc, (n, c)| {
        acc.add(&Poly::monomial(n, qrat(c, 1)))
    });
    RationalFunction::new(num, den).unwrap()
}

#[test]
fn both_routes_agree_and_match_the_display() {
    let j = pencil_j_invariant().unwrap();
    assert_eq!(j, displayed_j());
    assert_eq!(weierstrass_j().unwrap(), quartic_j().unwrap());
}

#[test]
fn quartic_coefficients_of_the_pencil() {
    let [a4, a3, a2, a1, a0] = pencil_quartic();
    assert_eq!(a4, Poly::monomial(2, qrat(-1, 4)));
    assert!(a3.is_zero());
    assert_eq!(
        a2,
        Poly::monomial(4, qrat(1, 1)).add(&Poly::constant(qrat(1, 16)))
    );
    assert!(a1.is_zero());
    assert_eq!(a0, Poly::monomial(2, qrat(-1, 4)));
}

#[test]
fn quartic_substitution_gives_the_even_form() {
    let j = pencil_j_invariant().unwrap();
    let replacement = Poly::monomial(2, qrat(1, 16));
    let js = j.substitute_power(4, &replacement).unwrap();
    let s4 = Poly::monomial(4, qrat(1, 1))
        .add(&Poly::monomial(2, qrat(14, 1)))
        .add(&Poly::one());
    let num = s4.pow(3).scale(&qrat(16, 1));
    let s = Poly::x();
    let den = Poly::monomial(2, qrat(1, 1))
        .mul(&s.sub(&Poly::one()).pow(4))
        .mul(&s.add(&Poly::one()).pow(4));
    assert_eq!(js, RationalFunction::new(num, den).unwrap());
}

#[test]
fn modulus_composition_recovers_the_pencil() {
    let composed = j_from_modulus(&parameter_modulus()).unwrap();
    assert_eq!(composed, pencil_j_invariant().unwrap());
}

#[test]
fn modulus_formula_symmetries() {
    let formula = modulus_j_formula();
    let neg_k = RationalFunction::new(Poly::monomial(1, qrat(-1, 1)), Poly::one()).unwrap();
    let inv_k = RationalFunction::new(Poly::one(), Poly::x()).unwrap();
    assert_eq!(formula.compose(&neg_k).unwrap(), formula);
    assert_eq!(formula.compose(&inv_k).unwrap(), formula);
}

#[test]
fn numeric_agreement_at_sample_parameters() {
    let a = weierstrass_j().unwrap();
    let b = quartic_j().unwrap();
    let k = parameter_modulus();
    for t in [qrat(1, 3), qrat(2, 5), qrat(1, 1), qrat(3, 1), qrat(7, 2)] {
        let va = a.eval(&t).unwrap();
        assert_eq!(va, b.eval(&t).unwrap(), "t = {t}");
        let kt = k.eval(&t).unwrap();
        assert_eq!(va, j_of_modulus_value(&kt).unwrap(), "modulus at t = {t}");
    }
}

#[test]
fn pole_and_zero_denominator_are_rejected() {
    let j = pencil_j_invariant().unwrap();
    assert!(j.eval(&qrat(0, 1)).is_err());
    assert!(RationalFunction::new(Poly::one(), Poly::zero()).is_err());
}
