use gw_counts::{goldilocks_zone, goldilocks_zone_windowed, SectionClass};

#[test]
fn degree_zero_gives_the_nine_exceptional_classes() {
    let zone = goldilocks_zone(0);
    assert_eq!(zone.len(), 9);
    for class in &zone {
        assert_eq!(class.d, 0);
        assert_eq!(class.a.iter().filter(|&&x| x == -1).count(), 1);
        assert_eq!(class.a.iter().filter(|&&x| x == 0).count(), 8);
    }
}

#[test]
fn degree_one_gives_the_thirty_six_line_classes() {
    let zone = goldilocks_zone(1);
    assert_eq!(zone.len(), 36);
    for class in &zone {
        assert_eq!(class.d, 1);
        assert_eq!(class.a.iter().filter(|&&x| x == 1).count(), 2);
        assert_eq!(class.a.iter().filter(|&&x| x == 0).count(), 7);
    }
}

#[test]
fn genus_filter_removes_singular_degree_one_classes() {
    let bad = SectionClass {
        d: 1,
        a: [2, 0, 0, 0, 0, 0, 0, 0, 0],
    };
    assert_eq!(bad.fibre_degree(), 1);
    assert!(bad.arithmetic_genus() < 0);
    assert!(!goldilocks_zone(1).contains(&bad));
}

#[test]
fn wider_window_finds_nothing_new_up_to_degree_four() {
    for d in 0..=4 {
        let standard = goldilocks_zone(d);
        let widened = goldilocks_zone_windowed(d, 3);
        assert_eq!(standard, widened, "degree {d}");
    }
}

#[test]
fn every_class_satisfies_the_defining_inequalities() {
    for d in 0..=4 {
        for class in goldilocks_zone(d) {
            assert_eq!(class.fibre_degree(), 1);
            let sum_sq: i64 = class.a.iter().map(|x| x * x).sum();
            assert!(sum_sq <= 3 + d * d);
            let twice_genus = 2 + class.self_intersection() - class.fibre_degree();
            assert_eq!(twice_genus % 2, 0);
            assert!(twice_genus >= 0);
        }
    }
}
