//! Medium-scale equivalence suites across the independent computation
//! paths, plus randomized invariants.

use fatpoints_core::hilbert::{
    delta_direct, delta_from_betti, delta_of, delta_value, hilbert_direct, hilbert_from_betti,
};
use fatpoints_core::interp::{interpolate, Verdict};
use fatpoints_core::oracle::{dim_bidegree, fat_point_ideal, taylor_betti};
use fatpoints_core::resolution::{betti_closed, betti_recursive};
use fatpoints_core::types::{DeltaMatrix, FatPointConfig};
use proptest::prelude::*;

fn all_configs(max: u32) -> impl Iterator<Item = FatPointConfig> {
    (0..=max).flat_map(move |m11| {
        (0..=max).flat_map(move |m12| (0..=max).map(move |m21| FatPointConfig { m11, m12, m21 }))
    })
}

#[test]
fn cross_path_betti_equality_up_to_six() {
    let mut checked = 0;
    for c in all_configs(6) {
        if c.is_zero() {
            continue;
        }
        assert_eq!(betti_recursive(c).unwrap(), betti_closed(c), "{c:?}");
        checked += 1;
    }
    assert_eq!(checked, 342);
}

#[test]
fn taylor_oracle_equality_small_generator_counts() {
    let mut checked = 0;
    for c in all_configs(4) {
        let closed = betti_closed(c);
        if closed.total(0) > 14 {
            continue;
        }
        let table = taylor_betti(&fat_point_ideal(c)).unwrap();
        assert_eq!(table, closed, "oracle mismatch at {c:?}");
        checked += 1;
    }
    assert!(checked > 60, "only {checked} configs qualified");
}

#[test]
fn generator_census_equals_level_zero() {
    for c in all_configs(4) {
        let ideal = fat_point_ideal(c);
        if c.is_zero() {
            continue;
        }
        let closed = betti_closed(c);
        let mut census = fatpoints_core::types::BettiTable::new();
        for g in ideal.generators() {
            census.add(0, g.bidegree(), 1);
        }
        for (u, deg, mult) in census.iter() {
            assert_eq!(closed.get(u, deg.a, deg.b), mult as i64, "{c:?} at {deg}");
        }
        assert_eq!(census.total(0), closed.total(0), "{c:?}");
    }
}

#[test]
fn hilbert_three_ways_up_to_five() {
    for c in all_configs(5) {
        if c.is_zero() {
            continue;
        }
        let closed = betti_closed(c);
        let recursive = betti_recursive(c).unwrap();
        let bound = c.stabilization_bound() + 2;
        for a in 0..=bound {
            for b in 0..=bound {
                let direct = hilbert_direct(c, a, b);
                assert_eq!(direct, hilbert_from_betti(&closed, a, b), "{c:?} ({a},{b})");
                assert_eq!(
                    direct,
                    hilbert_from_betti(&recursive, a, b),
                    "{c:?} ({a},{b})"
                );
                let dd = delta_direct(c, a, b);
                assert_eq!(dd, delta_from_betti(&closed, a, b), "{c:?} ({a},{b})");
                assert_eq!(dd, delta_value(c, a, b), "{c:?} ({a},{b})");
            }
        }
    }
}

#[test]
fn quotient_and_ideal_dimensions_complement() {
    for c in all_configs(5) {
        let ideal = fat_point_ideal(c);
        let s = c.stabilization_bound();
        for a in 0..=s {
            for b in 0..=s {
                assert_eq!(
                    dim_bidegree(&ideal, a, b) + hilbert_direct(c, a, b),
                    (a + 1) * (b + 1),
                    "{c:?} ({a},{b})"
                );
            }
        }
    }
}

#[test]
fn interpolation_round_trip_up_to_five() {
    for c in all_configs(5) {
        if c.is_zero() {
            continue;
        }
        let s = c.stabilization_bound();
        let input = fatpoints_core::hilbert::delta_table(c, s, s).unwrap();
        let report = interpolate(&input);
        let Verdict::IsHilbertFunction(found) = report.verdict else {
            panic!("round trip failed for {c:?}: {:?}", report.verdict);
        };
        // soundness: the match reproduces the input exactly
        let fs = found.stabilization_bound().max(s);
        let echo = fatpoints_core::hilbert::delta_table(found, fs, fs).unwrap();
        for a in 0..=fs {
            for b in 0..=fs {
                assert_eq!(
                    echo.get(a, b),
                    input.get(a, b),
                    "{c:?} -> {found:?} ({a},{b})"
                );
            }
        }
        assert_eq!(found.degree(), c.degree(), "{c:?}");
    }
}

proptest! {
    #[test]
    fn delta_of_any_backend_telescopes(
        m11 in 0u32..5, m12 in 0u32..5, m21 in 0u32..5,
        amax in 0i64..10, bmax in 0i64..10,
    ) {
        // summing ΔH over a downward-closed rectangle returns H at the corner
        let c = FatPointConfig { m11, m12, m21 };
        let h = |a, b| hilbert_direct(c, a, b);
        let mut sum = 0;
        for a in 0..=amax {
            for b in 0..=bmax {
                sum += delta_of(h, a, b);
            }
        }
        prop_assert_eq!(sum, h(amax, bmax));
    }

    #[test]
    fn resolution_to_betti_counts_preserve_total(
        m11 in 0u32..6, m12 in 0u32..6, m21 in 0u32..6,
    ) {
        let c = FatPointConfig { m11, m12, m21 };
        let (norm, _) = fatpoints_core::types::normalize(c);
        let res = fatpoints_core::resolution::res_recursive(norm).unwrap();
        let table = res.to_betti_table();
        for u in 0..3 {
            prop_assert_eq!(table.total(u), res.levels[u].len() as i64);
        }
        if !c.is_zero() {
            prop_assert_eq!(table.total(0) - table.total(1) + table.total(2), 1);
        }
    }

    #[test]
    fn degree_identity_randomized(m11 in 0u32..6, m12 in 0u32..6, m21 in 0u32..6) {
        let c = FatPointConfig { m11, m12, m21 };
        let s = c.stabilization_bound();
        let mut sum = 0;
        for a in 0..=s {
            for b in 0..=s {
                sum += delta_value(c, a, b);
            }
        }
        prop_assert_eq!(sum, c.degree());
    }

    #[test]
    fn interpolate_is_sound_on_arbitrary_tables(
        cells in proptest::collection::vec(-3i64..4, 36),
    ) {
        // any verdict on an arbitrary zero-bordered table must be backed by
        // an exact forward match
        let mut rows: Vec<Vec<i64>> = cells.chunks(6).map(<[i64]>::to_vec).collect();
        for row in &mut rows {
            row.push(0);
        }
        rows.push(vec![0; 7]);
        let matrix = DeltaMatrix::new(rows).unwrap();
        if let Verdict::IsHilbertFunction(found) = interpolate(&matrix).verdict {
            let s = found.stabilization_bound().max(7);
            let echo = fatpoints_core::hilbert::delta_table(found, s, s).unwrap();
            for a in 0..=s {
                for b in 0..=s {
                    prop_assert_eq!(echo.get(a, b), matrix.get(a, b), "{:?}", found);
                }
            }
        }
    }

    #[test]
    fn malformed_matrices_rejected(rows in 1usize..5, cols in 1usize..5, fill in -2i64..3) {
        // a matrix whose border is nonzero anywhere must be refused
        let mut m = vec![vec![0i64; cols]; rows];
        m[rows - 1][cols - 1] = fill;
        let result = DeltaMatrix::new(m);
        if fill == 0 {
            prop_assert!(result.is_ok());
        } else {
            prop_assert!(result.is_err());
        }
    }
}
