//! Golden values for every catalogue entry.

use milnor_core::bounds::{
    a3_characterization_holds, default_budget, search_multinets, sharp_pairs, upper_bound, vanishing_report, Bound,
    Criterion,
};
use milnor_core::catalogue::{check_entry, named, names, GRID_DIAGONAL_INDEX};
use milnor_core::geometry::multiple_points;

#[test]
fn entries_match_expectations() {
    for name in names() {
        let e = named(name).unwrap();
        let c = check_entry(&e).unwrap();
        assert!(c.mismatches.is_empty(), "{name}: {:?}", c.mismatches);
        assert!(c.spectrum.warnings.is_empty(), "{name}: {:?}", c.spectrum.warnings);
    }
}

#[test]
fn bounds_sandwich_every_entry() {
    for name in names() {
        let e = named(name).unwrap();
        let c = check_entry(&e).unwrap();
        let pairs = sharp_pairs(&e.arrangement);
        for o in &c.spectrum.per_order {
            if !pairs.is_empty() {
                assert!(o.dim <= 1, "{name} k = {}", o.k);
            }
            if o.k >= 3 {
                let s = search_multinets(&e.arrangement, o.k as usize, default_budget(e.lines()));
                if !s.found.is_empty() {
                    assert!(o.dim + 2 >= o.k as usize, "{name} k = {}", o.k);
                }
            }
            let r = vanishing_report(&e.arrangement, e.default_infinity, o.k).unwrap();
            if r.fires() {
                assert_eq!(o.dim, 0, "{name} k = {}", o.k);
            }
            assert!(a3_characterization_holds(&e.arrangement, o.dim, r.resonant_directions), "{name} k = {}", o.k);
        }
        if c.spectrum.dim(3) == Some(1) {
            assert!(!search_multinets(&e.arrangement, 3, default_budget(e.lines())).found.is_empty(), "{name}");
            assert_eq!(upper_bound(&e.arrangement, 3).unwrap().bound, Bound::AtMostOne, "{name}");
        }
    }
}

#[test]
fn a12_2_bounds() {
    let e = named("A(12,2)").unwrap();
    let ub = upper_bound(&e.arrangement, 3).unwrap();
    assert_eq!(ub.bound, Bound::Zero);
    assert_ne!(ub.certificate.unwrap().apex_multiplicity % 3, 0);
    let s = search_multinets(&e.arrangement, 3, None);
    assert!(s.exhaustive && s.found.is_empty());

    let r = vanishing_report(&e.arrangement, e.default_infinity, 3).unwrap();
    assert_eq!((r.resonant_bands, r.resonant_directions), (2, 2));
    assert_eq!(r.at_infinity, None);
    assert!(matches!(r.per_line_criterion, Some(Criterion::SparseLine { required: 3, .. })));
}

#[test]
fn pappus_sharp_pairs() {
    let e = named("Pappus").unwrap();
    let pairs: Vec<(usize, usize)> = sharp_pairs(&e.arrangement).iter().map(|p| (p.i, p.j)).collect();
    // Boundary lines of B1.
    assert!(pairs.contains(&(6, 7)));
    // H∞ with the right vertical line x = 240.
    assert!(pairs.contains(&(3, 8)));
    // With x = 160 the first two lines meet at (-80, 60), left of it.
    assert!(!pairs.contains(&(2, 8)));
    let p = multiple_points(&e.arrangement).into_iter().find(|p| p.incident == vec![0, 1]).unwrap();
    assert!(p.point[0].sign() * p.point[2].sign() < 0);
}

#[test]
fn grid_diagonal_at_infinity() {
    let e = named("GridDiagonal").unwrap();
    let mults: Vec<usize> = multiple_points(&e.arrangement)
        .iter()
        .filter(|p| p.contains(GRID_DIAGONAL_INDEX) && !p.contains(11))
        .map(|p| p.multiplicity())
        .collect();
    assert_eq!(mults, vec![3; 5]);
    for k in [2, 4, 6] {
        let r = vanishing_report(&e.arrangement, GRID_DIAGONAL_INDEX, k).unwrap();
        assert_eq!(r.resonant_bands, 0);
        assert_eq!(r.at_infinity, Some(Criterion::NoResonantBands));
    }
}

#[test]
fn b6_matches_a3() {
    let b = check_entry(&named("B(6)").unwrap()).unwrap();
    let a = check_entry(&named("A3").unwrap()).unwrap();
    assert_eq!(a.spectrum.dims(), b.spectrum.dims());
}
