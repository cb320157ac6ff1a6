//! Randomized properties over small rational arrangements.

use milnor_core::arith::RealField;
use milnor_core::bands::{analyze, divisors, milnor_spectrum, nabla_kernel, standing_wave};
use milnor_core::bounds::{a3_characterization_holds, search_multinets, sharp_pairs, verify_multinet, vanishing_report};
use milnor_core::complex::{build_complex, cohomology_dims, partition_chambers, LocalSystem};
use milnor_core::geometry::{decone, enumerate_chambers, multiple_points, ProjArrangement, ProjLine};
use proptest::prelude::*;

fn build(rows: &[[i64; 3]]) -> Option<ProjArrangement> {
    let f = RealField::rational();
    ProjArrangement::new(rows.iter().map(|r| ProjLine::from_ints(&f, r[0], r[1], r[2])).collect()).ok()
}

/// 4 to 7 affine lines plus the line at infinity, last; the first two
/// affine lines are parallel.
fn arb_arrangement() -> impl Strategy<Value = ProjArrangement> {
    (
        (-3i64..=3, -3i64..=3, -4i64..=4, -4i64..=4),
        proptest::collection::vec((-3i64..=3, -3i64..=3, -4i64..=4), 2..=5),
    )
        .prop_filter_map("invalid arrangement", |((a, b, c1, c2), rest)| {
            let mut rows = vec![[a, b, c1], [a, b, c2]];
            rows.extend(rest.into_iter().map(|(a, b, c)| [a, b, c]));
            rows.push([0, 0, 1]);
            build(&rows)
        })
}

fn arb_system(n: usize) -> impl Strategy<Value = LocalSystem> {
    (2u64..=12).prop_flat_map(move |m| {
        proptest::collection::vec(0i64..m as i64, n).prop_map(move |e| LocalSystem::new(m, e).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pairs_meet_once(a in arb_arrangement()) {
        let total: usize = multiple_points(&a).iter().map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2).sum();
        prop_assert_eq!(total, a.len() * (a.len() - 1) / 2);
    }

    #[test]
    fn decone_pulls_back(a in arb_arrangement(), pick in 0usize..8) {
        let inf = pick % a.len();
        let na = decone(&a, inf).unwrap();
        for i in 0..na.n() {
            let back = na.pull_back(i);
            prop_assert!(back.is_proportional(a.line(na.original_index(i))));
        }
    }

    #[test]
    fn complex_bookkeeping((a, l) in arb_arrangement().prop_flat_map(|a| { let n = a.len() - 1; (Just(a), arb_system(n)) })) {
        let na = decone(&a, a.len() - 1).unwrap();
        let ch = enumerate_chambers(&na);
        let part = partition_chambers(&na, &ch).unwrap();
        let n = na.n();

        let c = build_complex(&na, &ch, &l).unwrap();
        prop_assert!(c.d1.mul(&c.d0).is_zero());
        let h = cohomology_dims(&c).unwrap();
        prop_assert_eq!(h.h0 as i64 - h.h1 as i64 + h.h2 as i64, 1 - n as i64 + part.ch2.len() as i64);

        let t = cohomology_dims(&build_complex(&na, &ch, &LocalSystem::trivial(n)).unwrap()).unwrap();
        prop_assert_eq!((t.h0, t.h1, t.h2), (1, n, part.ch2.len()));
    }

    #[test]
    fn galois_conjugates_agree(a in arb_arrangement()) {
        let na = decone(&a, a.len() - 1).unwrap();
        let ch = enumerate_chambers(&na);
        let n = na.n();
        for k in divisors(n as u64 + 1) {
            let dims = |j: i64| cohomology_dims(&build_complex(&na, &ch, &LocalSystem::eigenvalue(k, j, n)).unwrap()).unwrap();
            let base = dims(1);
            for j in (2..k as i64).filter(|j| num_integer::gcd(*j, k as i64) == 1) {
                prop_assert_eq!(dims(j), base);
            }
        }
    }

    #[test]
    fn band_invariants_and_oracle(a in arb_arrangement()) {
        let an = analyze(&a, a.len() - 1).unwrap();
        let n = an.n();
        let pts = multiple_points(&a);
        let inf = a.len() - 1;
        prop_assert!(!an.bands.is_empty());
        for b in &an.bands {
            // The band's point at infinity is where its boundary lines meet H∞.
            let lo = an.normalized.original_index(b.lower);
            let p = pts.iter().find(|p| p.contains(lo) && p.contains(inf)).unwrap();
            prop_assert_eq!(b.length, n + 1 - p.multiplicity());
            for k in divisors(n as u64 + 1) {
                prop_assert_eq!(b.is_resonant(k), p.multiplicity() as u64 % k == 0);
                if b.is_resonant(k) {
                    let w = standing_wave(b, k, &an.chambers).unwrap();
                    prop_assert!(w.coefficient(b.u1).unwrap().is_zero());
                    prop_assert!(w.coefficient(b.u2).unwrap().is_zero());
                }
            }
        }
        for k in divisors(n as u64 + 1) {
            let nk = nabla_kernel(&an.normalized, &an.chambers, &an.bands, k).unwrap();
            let h = cohomology_dims(&build_complex(&an.normalized, &an.chambers, &LocalSystem::eigenvalue(k, 1, n)).unwrap()).unwrap();
            prop_assert_eq!(nk.kernel.dimension, h.h1);

            let r = vanishing_report(&a, inf, k).unwrap();
            if r.at_infinity.is_some() {
                prop_assert_eq!(nk.kernel.dimension, 0);
            }
            prop_assert!(a3_characterization_holds(&a, nk.kernel.dimension, r.resonant_directions));
        }
    }

    #[test]
    fn spectrum_ignores_infinity(a in arb_arrangement(), pick in 0usize..7) {
        let inf = pick % (a.len() - 1);
        let s0 = milnor_spectrum(&a, a.len() - 1).unwrap();
        let s1 = milnor_spectrum(&a, inf).unwrap();
        prop_assert_eq!(s0.dims(), s1.dims());
        prop_assert_eq!(s0.b1, s1.b1);
    }

    #[test]
    fn sharp_pairs_ignore_scaling(a in arb_arrangement(), which in 0usize..8, s in prop_oneof![-3i64..=-1, 1i64..=3]) {
        let base: Vec<(usize, usize)> = sharp_pairs(&a).iter().map(|p| (p.i, p.j)).collect();
        let i = which % a.len();
        let f = a.field().clone();
        let mut lines = a.lines().to_vec();
        let c = f.from_int(s);
        lines[i] = ProjLine::new(&lines[i].a * &c, &lines[i].b * &c, &lines[i].c * &c);
        let scaled = ProjArrangement::new(lines).unwrap();
        let got: Vec<(usize, usize)> = sharp_pairs(&scaled).iter().map(|p| (p.i, p.j)).collect();
        prop_assert_eq!(base, got);
        // Reversing the line order maps pairs to pairs.
        let rev = ProjArrangement::new(a.lines().iter().rev().cloned().collect()).unwrap();
        let m = a.len() - 1;
        let mut back: Vec<(usize, usize)> = sharp_pairs(&rev).iter().map(|p| ((m - p.j), (m - p.i))).collect();
        back.sort();
        let mut base_sorted: Vec<(usize, usize)> = sharp_pairs(&a).iter().map(|p| (p.i, p.j)).collect();
        base_sorted.sort();
        prop_assert_eq!(back, base_sorted);
    }

    #[test]
    fn found_multinets_verify(a in arb_arrangement()) {
        for k in (3..=a.len()).filter(|k| a.len() % k == 0) {
            let s = search_multinets(&a, k, None);
            prop_assert!(s.exhaustive);
            for m in &s.found {
                prop_assert_eq!(verify_multinet(&a, m).unwrap(), None);
            }
        }
    }
}
