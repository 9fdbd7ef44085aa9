//! The factored single-bend sum: index-set oracle, termwise grade bound, and
//! the specialization helpers.

use affine_base::{phi, UCoverPoint};
use mirror_engine::{
    enumerate_pairs, mirror_lattice, project_to_boundary_lattice, single_bend_series,
    specialize_symmetric, EngineError, Tangency1Wall, WallTable,
};
use num_traits::Zero;
use qseries::{qint, QSeries};

fn phi4(k: i64) -> [i64; 4] {
    phi(&UCoverPoint::integral(k))
        .integer_coeffs()
        .expect("integral value")
}

fn one_wall() -> WallTable {
    WallTable {
        tangency1: vec![Tangency1Wall {
            ray_residue: 0,
            section: "s".into(),
            fibre_steps: 0,
            count: qint(1),
        }],
        tangency2: Vec::new(),
    }
}

#[test]
fn empty_table_gives_zero() {
    let s = single_bend_series(&WallTable::empty(), 50).unwrap();
    assert!(s.terms().next().is_none());
}

#[test]
fn first_contribution_sits_at_grade_33() {
    let s = single_bend_series(&one_wall(), 40).unwrap();
    let grades: Vec<i64> = s.terms().map(|(e, _)| e.iter().sum()).collect();
    assert_eq!(grades, vec![33]);
}

#[test]
fn matches_direct_double_sum() {
    let truncation = 50;
    let s = single_bend_series(&one_wall(), truncation).unwrap();
    let mut expected = QSeries::zero(mirror_lattice(), truncation);
    for m in 1..=10i64 {
        for n in 1..=10i64 {
            let a = phi4(4 * m + 4 * n);
            let b = phi4(-4 * n);
            let c = phi4(4 * m);
            let exp = vec![
                a[0] + b[0] - c[0],
                a[1] + b[1] - c[1],
                a[2] + b[2] - c[2],
                a[3] + b[3] - c[3],
                1,
            ];
            if exp.iter().sum::<i64>() <= truncation {
                expected = expected
                    .add(&QSeries::monomial(mirror_lattice(), truncation, exp, qint(1)).unwrap())
                    .unwrap();
            }
        }
    }
    assert_eq!(s, expected);
}

#[test]
fn termwise_grade_bound() {
    for m in 1..=6i64 {
        for n in 1..=6i64 {
            let a = phi4(4 * m + 4 * n);
            let b = phi4(-4 * n);
            let c = phi4(4 * m);
            let grade: i64 = (0..4).map(|j| a[j] + b[j] - c[j]).sum();
            let floor: i64 = b.iter().sum::<i64>() + 2 * m + 2 * n - 1;
            assert!(grade >= floor, "bound fails at m={m}, n={n}");
            assert!((0..4).all(|j| a[j] + b[j] - c[j] >= 0), "effectivity at m={m}, n={n}");
        }
    }
}

#[test]
fn enumeration_reproduces_the_index_set() {
    let truncation = 50;
    let pairs = enumerate_pairs(0, 0, (0, 1), &one_wall(), truncation, 1).unwrap();
    let mut seen: Vec<(i64, i64)> = pairs
        .iter()
        .filter(|p| p.line_p.bends.len() == 1 && p.line_p.direction > 0)
        .map(|p| (p.line_p.direction, p.line_p.bends[0].ray.0))
        .collect();
    seen.sort_unstable();
    let mut expected = Vec::new();
    for m in 1..=8i64 {
        for n in 1..=8i64 {
            let a = phi4(4 * m + 4 * n);
            let b = phi4(-4 * n);
            let c = phi4(4 * m);
            let grade: i64 = (0..4).map(|j| a[j] + b[j] - c[j]).sum();
            if grade + 1 <= truncation {
                expected.push((4 * m + 4 * n, 4 * m));
            }
        }
    }
    expected.sort_unstable();
    assert_eq!(seen, expected);
}

#[test]
fn rejects_small_truncation() {
    assert!(single_bend_series(&one_wall(), 0).is_err());
}

#[test]
fn projection_rejects_section_markers() {
    let s = single_bend_series(&one_wall(), 40).unwrap();
    match project_to_boundary_lattice(&s) {
        Err(EngineError::SectionMarkerPresent) => {}
        other => panic!("expected a section-marker error, got {other:?}"),
    }
}

#[test]
fn specialize_zero_is_zero() {
    let zero = QSeries::zero(mirror_engine::boundary_lattice(), 10);
    let v = specialize_symmetric(&zero).unwrap();
    assert!(v.constant_term().is_zero());
    assert!(v.terms().next().is_none());
}
