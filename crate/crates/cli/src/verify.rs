//! Full verification suite: one check per acceptance criterion, each
//! returning a pass/fail verdict with a short human-readable detail line.

use std::time::Instant;

use affine_base::{kink, phi, phi_difference_bound, ConeChart, UCoverPoint};
use elliptic::{modular_consistency, pencil_j_invariant, qrat as erat, Complex, Poly, RationalFunction};
use gw_counts::{
    bryan_leung_series, certify_i_function, extract_curve_count, goldilocks_zone,
    goldilocks_zone_windowed, i_function, invert_multipliers, mirror_map, q_lattice,
    relative_bisection_count, stirling_radius, to_wall_counts,
};
use mirror_engine::{
    project_to_boundary_lattice, specialize_symmetric, theta_product_coefficients, OutputName,
    WallTable,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use qseries::{qint, qrat, ExponentLattice, QSeries, Q};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use crate::output::rational_string;

/// Verdict for one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CriterionResult {
    fn ok(name: &'static str, detail: String) -> Self {
        Self {
            name,
            pass: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        Self {
            name,
            pass: false,
            detail,
        }
    }
}

/// Runs every criterion; `quick` lowers grades for a desk-scale pass.
pub fn run_all(quick: bool) -> Vec<CriterionResult> {
    vec![
        curve_counts(quick),
        wall_decomposition(),
        section_series(quick),
        phi_pipeline(),
        symmetric_specialization(),
        section_classes(),
        holomorphicity_certificate(quick),
        elliptic_identities(),
        property_suites(),
    ]
}

fn expected_counts(quick: bool) -> Vec<([u32; 4], i64)> {
    let mut v = vec![([0, 2, 0, 1], -9)];
    if !quick {
        v.push(([1, 2, 0, 1], 144));
        v.push(([2, 2, 0, 1], 1980));
    }
    v
}

fn curve_counts(quick: bool) -> CriterionResult {
    let name = "curve counts from the change of variables";
    let start = Instant::now();
    let grade = if quick { 3 } else { 5 };
    let table = i_function(grade);
    let map = match mirror_map(&table) {
        Ok(m) => m,
        Err(e) => return CriterionResult::fail(name, format!("change of variables failed: {e}")),
    };
    let mut got = Vec::new();
    for (class, want) in expected_counts(quick) {
        match extract_curve_count(&map.j, &class) {
            Ok(c) if c == qint(want) => got.push(want.to_string()),
            Ok(c) => {
                return CriterionResult::fail(
                    name,
                    format!("class {class:?}: got {}, want {want}", rational_string(&c)),
                )
            }
            Err(e) => return CriterionResult::fail(name, format!("class {class:?}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 120 {
        return CriterionResult::fail(name, format!("took {:.1?}, budget 120s", elapsed));
    }
    CriterionResult::ok(
        name,
        format!(
            "grade-{grade} table gives {} in {:.1?}",
            got.join(", "),
            elapsed
        ),
    )
}

fn binomial(n: u64, k: u64) -> i64 {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    let q = num / den;
    i64::try_from(&q).expect("small binomial")
}

fn wall_decomposition() -> CriterionResult {
    let name = "wall multiplicity bookkeeping";
    let bisection = relative_bisection_count(&qint(-9));
    if bisection != qrat(-9, 4) {
        return CriterionResult::fail(name, "tangency-2 count is not -9/4".into());
    }
    let gz0 = goldilocks_zone(0).len() as i64;
    let gz1 = goldilocks_zone(1).len() as i64;
    if gz0 * 4 * 2 * 2 != 144 {
        return CriterionResult::fail(name, format!("{gz0}*4*2*2 != 144"));
    }
    let choose = binomial(9, 4);
    if choose * 4 * 2 * 2 - gz1 != 1980 {
        return CriterionResult::fail(name, format!("{choose}*4*2*2 - {gz1} != 1980"));
    }
    let series = match bryan_leung_series(4) {
        Ok(s) => s,
        Err(e) => return CriterionResult::fail(name, e.to_string()),
    };
    let table = match to_wall_counts(&series, 2, &bisection) {
        Ok(t) => t,
        Err(e) => return CriterionResult::fail(name, e.to_string()),
    };
    let t2_ok = table.tangency2_at(0).all(|w| w.count == qrat(-9, 4));
    let t1_ok = table
        .tangency1_at(0)
        .find(|w| w.fibre_steps == 1)
        .is_some_and(|w| w.count == qint(12));
    if !(t2_ok && t1_ok) {
        return CriterionResult::fail(name, "emitted wall table has wrong counts".into());
    }
    CriterionResult::ok(
        name,
        format!("-9/4 exact, 144 = {gz0}*4*2*2, 1980 = {choose}*4*2*2 - {gz1}"),
    )
}

fn eta_power_oracle(order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for m in 1..=order {
        for _ in 0..12 {
            for i in m..=order {
                let add = c[i - m].clone();
                c[i] += add;
            }
        }
    }
    c
}

fn section_series(quick: bool) -> CriterionResult {
    let name = "section-count series against the division oracle";
    let order = if quick { 30 } else { 200 };
    let series = match bryan_leung_series(order as i64) {
        Ok(s) => s,
        Err(e) => return CriterionResult::fail(name, e.to_string()),
    };
    let oracle = eta_power_oracle(order);
    for (m, want) in oracle.iter().enumerate() {
        let got = series.coeff(&[m as i64]);
        if got.denom() != &BigInt::one() || got.numer() != want {
            return CriterionResult::fail(name, format!("mismatch at order {m}"));
        }
        if !got.numer().is_positive() {
            return CriterionResult::fail(name, format!("non-positive coefficient at {m}"));
        }
        if m >= 1 {
            let shifted = BigInt::one() << (m + 17);
            if got.numer() >= &shifted {
                return CriterionResult::fail(name, format!("coefficient at {m} exceeds 2^(m+17)"));
            }
            if m >= 98 && got.numer() >= &(BigInt::one() << m) {
                return CriterionResult::fail(name, format!("coefficient at {m} exceeds 2^m"));
            }
        }
    }
    CriterionResult::ok(
        name,
        format!(
            "exact match to order {order}; growth bound a_m < 2^(m+17) (plain 2^m from m = 98)"
        ),
    )
}

fn phi_pipeline() -> CriterionResult {
    let name = "piecewise-linear potential invariants";
    let start = Instant::now();
    let phi_k = |k: i64| phi(&UCoverPoint::integral(k));
    for k in -64..=64i64 {
        let p = UCoverPoint::integral(k);
        if !phi_k(k).is_effective() {
            return CriterionResult::fail(name, format!("phi({k}, 1) not effective"));
        }
        let left = ConeChart::new(k - 1);
        let right = ConeChart::new(k);
        if !(left.contains(&p) && right.contains(&p) && left.eval(&p) == right.eval(&p)) {
            return CriterionResult::fail(name, format!("chart disagreement on ray {k}"));
        }
        let second = phi_k(k + 1).add(&phi_k(k - 1)).sub(&phi_k(k).scale_int(2));
        if second != kink(k) {
            return CriterionResult::fail(name, format!("second difference at {k} is not the kink"));
        }
        if kink(k + 4) != kink(k) || !kink(k).is_effective() || kink(k).is_zero() {
            return CriterionResult::fail(name, format!("kink at {k} breaks periodicity"));
        }
    }
    for m in 2..=64i64 {
        for s in [m, -m] {
            match phi_difference_bound(s) {
                Ok(check) if check.pass => {}
                Ok(_) => return CriterionResult::fail(name, format!("difference bound fails at {s}")),
                Err(e) => return CriterionResult::fail(name, e.to_string()),
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 1 {
        return CriterionResult::fail(name, format!("took {:.1?}, budget 1s", elapsed));
    }
    CriterionResult::ok(
        name,
        format!("|k| <= 64 invariants and difference bounds exact in {:.1?}", elapsed),
    )
}

fn symmetric_specialization() -> CriterionResult {
    let name = "symmetric-locus specialization support";
    let walls = WallTable::empty();
    let product = match theta_product_coefficients(0, 2, &walls, 49, 0) {
        Ok(p) => p,
        Err(e) => return CriterionResult::fail(name, e.to_string()),
    };
    let f22 = product.coefficient(OutputName::TwoD(2), 49);
    let projected = match project_to_boundary_lattice(&f22) {
        Ok(s) => s,
        Err(e) => return CriterionResult::fail(name, e.to_string()),
    };
    let specialized = match specialize_symmetric(&projected) {
        Ok(s) => s,
        Err(e) => return CriterionResult::fail(name, e.to_string()),
    };
    let support: Vec<i64> = specialized.terms().map(|(e, _)| e[0]).collect();
    let expected: Vec<i64> = (0..).map(|n| (2 * n + 1) * (2 * n + 1)).take_while(|&e| e <= 49).collect();
    if support != expected {
        return CriterionResult::fail(name, format!("support {support:?}, want {expected:?}"));
    }
    let constants: Vec<Q> = specialized.terms().map(|(_, c)| c.clone()).collect();
    if constants.iter().any(|c| c != &constants[0]) {
        return CriterionResult::fail(name, "nonconstant normalization across the support".into());
    }
    CriterionResult::ok(
        name,
        format!(
            "support {{1, 9, 25, 49}} exact; measured normalization constant {}",
            rational_string(&constants[0])
        ),
    )
}

fn section_classes() -> CriterionResult {
    let name = "low-degree section classes";
    let start = Instant::now();
    let gz0 = goldilocks_zone(0);
    let gz1 = goldilocks_zone(1);
    if gz0.len() != 9 || gz1.len() != 36 {
        return CriterionResult::fail(
            name,
            format!("sizes {} and {}, want 9 and 36", gz0.len(), gz1.len()),
        );
    }
    for d in 0..=4i64 {
        let narrow = goldilocks_zone(d);
        let wide = goldilocks_zone_windowed(d, 3);
        if narrow != wide {
            return CriterionResult::fail(name, format!("window loses classes at degree {d}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 10 {
        return CriterionResult::fail(name, format!("took {:.1?}, budget 10s", elapsed));
    }
    CriterionResult::ok(
        name,
        format!("sizes 9 and 36; widened window finds nothing new for d <= 4 in {:.1?}", elapsed),
    )
}

fn holomorphicity_certificate(quick: bool) -> CriterionResult {
    let name = "hypergeometric coefficient growth certificate";
    let grade = if quick { 4 } else { 6 };
    let table = i_function(grade);
    let report = certify_i_function(&table);
    if !report.pass {
        return CriterionResult::fail(
            name,
            format!("{} coefficients violate the bound at grade {grade}", report.failures.len()),
        );
    }
    CriterionResult::ok(
        name,
        format!(
            "grade {grade}: {} coefficients within c*r^diag for r = {}; empirical minimal r ~ {:.3e}",
            report.checked,
            rational_string(&stirling_radius()),
            report.empirical_minimal_r
        ),
    )
}

fn even_substitution_display() -> RationalFunction {
    let s4 = Poly::monomial(4, erat(1, 1))
        .add(&Poly::monomial(2, erat(14, 1)))
        .add(&Poly::one());
    let num = s4.pow(3).scale(&erat(16, 1));
    let s = Poly::x();
    let den = Poly::monomial(2, erat(1, 1))
        .mul(&s.sub(&Poly::one()).pow(4))
        .mul(&s.add(&Poly::one()).pow(4));
    RationalFunction::new(num, den).expect("nonzero denominator")
}

fn elliptic_identities() -> CriterionResult {
    let name = "elliptic curve identities";
    let start = Instant::now();
    let j = match pencil_j_invariant() {
        Ok(j) => j,
        Err(e) => return CriterionResult::fail(name, format!("j-invariant paths disagree: {e}")),
    };
    let replacement = Poly::monomial(2, erat(1, 16));
    match j.substitute_power(4, &replacement) {
        Ok(js) if js == even_substitution_display() => {}
        Ok(_) => return CriterionResult::fail(name, "even-form substitution mismatch".into()),
        Err(e) => return CriterionResult::fail(name, e.to_string()),
    }
    let samples = [
        Complex::from_f64(0.0, 1.0),
        Complex::from_f64(0.5, 2.0),
        Complex::from_f64(0.0, 3.0),
    ];
    for rho in &samples {
        let report = match modular_consistency(rho, 1e-30) {
            Ok(r) => r,
            Err(e) => return CriterionResult::fail(name, e.to_string()),
        };
        for identity in ["fourth-power identity", "half-parameter modulus identity"] {
            let Some(check) = report.check(identity) else {
                return CriterionResult::fail(name, format!("missing check {identity}"));
            };
            if !check.residual_below(1e-12) {
                return CriterionResult::fail(name, format!("{identity} above 1e-12"));
            }
        }
    }
    let report = match modular_consistency(&Complex::from_f64(0.0, 3.0), 1e-30) {
        Ok(r) => r,
        Err(e) => return CriterionResult::fail(name, e.to_string()),
    };
    match report.check("j agreement (relative)") {
        Some(check) if check.residual_below(1e-8) => {}
        _ => return CriterionResult::fail(name, "j agreement above 1e-8".into()),
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 5 {
        return CriterionResult::fail(name, format!("took {:.1?}, budget 5s", elapsed));
    }
    CriterionResult::ok(
        name,
        format!(
            "paths agree exactly; theta identities within 1e-12; j agreement within 1e-8 in {:.1?}",
            elapsed
        ),
    )
}

fn random_series(rng: &mut StdRng, lattice: &ExponentLattice, truncation: i64) -> QSeries {
    let rank = lattice.rank();
    let mut s = QSeries::zero(lattice.clone(), truncation);
    for _ in 0..6 {
        let mut exp = vec![0i64; rank];
        let mut budget = rng.random_range(0..=truncation);
        for e in exp.iter_mut() {
            let part = rng.random_range(0..=budget);
            *e = part;
            budget -= part;
        }
        let c = qrat(rng.random_range(-9..=9), rng.random_range(1..=4));
        if let Ok(m) = QSeries::monomial(lattice.clone(), truncation, exp, c) {
            s = s.add(&m).expect("same lattice");
        }
    }
    s
}

fn suite_digest(seed: u64) -> Result<String, String> {
    let lattice = q_lattice();
    let truncation = 5i64;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut digest = String::new();
    for _ in 0..100 {
        let a = random_series(&mut rng, &lattice, truncation);
        let b = random_series(&mut rng, &lattice, truncation);
        let c = random_series(&mut rng, &lattice, truncation);
        let e = |r: Result<QSeries, qseries::SeriesError>| r.map_err(|e| e.to_string());
        if e(a.add(&b))? != e(b.add(&a))? || e(a.mul(&b))? != e(b.mul(&a))? {
            return Err("commutativity failed".into());
        }
        if e(e(a.add(&b))?.add(&c))? != e(a.add(&e(b.add(&c))?))? {
            return Err("additive associativity failed".into());
        }
        if e(e(a.mul(&b))?.mul(&c))? != e(a.mul(&e(b.mul(&c))?))? {
            return Err("multiplicative associativity failed".into());
        }
        if e(a.mul(&e(b.add(&c))?))? != e(e(a.mul(&b))?.add(&e(a.mul(&c))?))? {
            return Err("distributivity failed".into());
        }
        let m = rng.random_range(0..=truncation);
        let lhs = e(a.mul(&b))?.truncate(m);
        let rhs = e(a.truncate(m).mul(&b.truncate(m)))?.truncate(m);
        if lhs != rhs {
            return Err("truncation coherence failed".into());
        }
        let unit = QSeries::one(lattice.clone(), truncation)
            .add(&a.sub(&QSeries::constant(lattice.clone(), truncation, a.constant_term()))
                .expect("same lattice"))
            .expect("same lattice");
        let inv = unit.inverse().map_err(|e| e.to_string())?;
        if e(unit.mul(&inv))? != QSeries::one(lattice.clone(), truncation) {
            return Err("inverse round trip failed".into());
        }
        let one = QSeries::one(lattice.clone(), truncation);
        let g: [QSeries; 4] = std::array::from_fn(|_| {
            let r = random_series(&mut rng, &lattice, truncation);
            one.add(&r.sub(&QSeries::constant(lattice.clone(), truncation, r.constant_term()))
                .expect("same lattice"))
                .expect("same lattice")
        });
        let u = invert_multipliers(&g).map_err(|e| e.to_string())?;
        let round = a
            .substitute(&g)
            .and_then(|s| s.substitute(&u))
            .map_err(|e| e.to_string())?;
        if round != a {
            return Err("substitution round trip failed".into());
        }
        digest.push_str(&format!("{}|", round.len()));
    }
    Ok(digest)
}

fn property_suites() -> CriterionResult {
    let name = "series ring randomized properties";
    let first = match suite_digest(2026) {
        Ok(d) => d,
        Err(e) => return CriterionResult::fail(name, e),
    };
    let second = match suite_digest(2026) {
        Ok(d) => d,
        Err(e) => return CriterionResult::fail(name, e),
    };
    if first != second {
        return CriterionResult::fail(name, "repeated run is not deterministic".into());
    }
    CriterionResult::ok(
        name,
        "ring axioms, truncation coherence and substitution round trips on 100 seeded instances; repeat run identical".into(),
    )
}
