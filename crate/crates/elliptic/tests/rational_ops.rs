use elliptic::{qrat, Poly, RationalFunction};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

fn random_poly(rng: &mut StdRng) -> Poly {
    let degree = rng.random_range(0..5usize);
    Poly::new(
        (0..=degree)
            .map(|_| qrat(rng.random_range(-6..=6i64), rng.random_range(1..=4i64)))
            .collect(),
    )
}

fn random_function(rng: &mut StdRng) -> RationalFunction {
    loop {
        let den = random_poly(rng);
        if !den.is_zero() {
            return RationalFunction::new(random_poly(rng), den).unwrap();
        }
    }
}

#[test]
fn evaluation_respects_the_arithmetic() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 50 {
        let f = random_function(&mut rng);
        let g = random_function(&mut rng);
        let x = qrat(rng.random_range(-20..=20i64), rng.random_range(1..=7i64));
        let (Ok(fx), Ok(gx)) = (f.eval(&x), g.eval(&x)) else {
            continue;
        };
        let sum = f.add(&g).unwrap();
        let product = f.mul(&g).unwrap();
        assert_eq!(sum.eval(&x).unwrap(), &fx + &gx);
        assert_eq!(product.eval(&x).unwrap(), &fx * &gx);
        if !g.is_zero() && !gx.is_zero() {
            assert_eq!(f.div(&g).unwrap().eval(&x).unwrap(), fx / gx);
        }
        checked += 1;
    }
}

#[test]
fn reduction_is_idempotent_and_monic() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let f = random_function(&mut rng);
        let again = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, again);
        assert_eq!(f.num().gcd(f.den()).degree(), Some(0));
        assert_eq!(f.den().leading(), qrat(1, 1));
    }
}

#[test]
fn division_round_trip() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..100 {
        let a = random_poly(&mut rng);
        let mut b = random_poly(&mut rng);
        if b.is_zero() {
            b = Poly::one();
        }
        let (q, r) = a.divmod(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        if let (Some(dr), Some(db)) = (r.degree(), b.degree()) {
            assert!(dr < db);
        }
    }
}
