//! Randomized invariants for the packing model and the solver stack.

use std::collections::BTreeMap;

use proptest::prelude::*;
use twobar_core::algorithms::{algorithm_a1, gamma_transform};
use twobar_core::atsp::ExactDp;
use twobar_core::graphs::{build_g1, build_g2, cycle_of_packing, packing_of_cycle, HamCycle};
use twobar_core::matching::{max_cardinality_matching, max_matching_exhaustive};
use twobar_core::oracles::{
    oracle_bcpp1, oracle_bcpp1_bruteforce, oracle_general, oracle_sequence,
};
use twobar_core::{CellPacking, Chart, Instance, SequencePacking};

const D: u32 = Instance::DEFAULT_DENOMINATOR;

fn instance(pairs: &[(u32, u32)]) -> Instance {
    let charts = pairs.iter().map(|&(a, b)| Chart::new(a, b)).collect();
    Instance::new("prop", charts).expect("generated heights are in range")
}

/// A chart order plus one requested union level per adjacent pair. The
/// requested levels are clamped down until the packing stays within the
/// strip, so the result is always a valid sequence packing.
fn packing_inputs(max_n: usize) -> impl Strategy<Value = (Vec<(u32, u32)>, Vec<usize>, Vec<u8>)> {
    prop::collection::vec((1..=D, 1..=D), 2..=max_n).prop_flat_map(|pairs| {
        let n = pairs.len();
        let order = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        let levels = prop::collection::vec(0u8..=2, n - 1);
        (Just(pairs), order, levels)
    })
}

/// Greedily realize the requested levels: each one is lowered until the new
/// chart's bars fit the running cell totals. Level 0 opens fresh cells, so
/// the walk always terminates. With `cap_after_two`, a request following an
/// accepted 2-union is capped at 1, keeping stacked 2-unions out.
fn realize(
    s: &Instance,
    order: &[usize],
    requested: &[u8],
    cap_after_two: bool,
) -> SequencePacking {
    let mut totals: BTreeMap<u32, u64> = BTreeMap::new();
    let mut overlaps = Vec::with_capacity(requested.len());
    let mut pos = 1u32;
    let first = s.chart(order[0]);
    totals.insert(1, u64::from(first.a()));
    totals.insert(2, u64::from(first.b()));
    for (k, &next) in order.iter().enumerate().skip(1) {
        let chart = s.chart(next);
        let mut want = requested[k - 1];
        if cap_after_two && k >= 2 && overlaps[k - 2] == 2 {
            want = want.min(1);
        }
        let t = (0..=want)
            .rev()
            .find(|&t| {
                let p = pos + 2 - u32::from(t);
                let left = totals.get(&p).copied().unwrap_or(0) + u64::from(chart.a());
                let right = totals.get(&(p + 1)).copied().unwrap_or(0) + u64::from(chart.b());
                left <= u64::from(s.denominator()) && right <= u64::from(s.denominator())
            })
            .expect("level 0 always fits");
        pos += 2 - u32::from(t);
        *totals.entry(pos).or_insert(0) += u64::from(chart.a());
        *totals.entry(pos + 1).or_insert(0) += u64::from(chart.b());
        overlaps.push(t);
    }
    SequencePacking::new(s, order.to_vec(), overlaps)
        .expect("greedily realized packings respect the strip")
}

proptest! {
    #[test]
    fn union_levels_never_grow_when_bars_grow(
        a0 in 1..=D, b0 in 1..=D, a1 in 1..=D, b1 in 1..=D,
        which in 0usize..4, bump in 1..=D,
    ) {
        let before = instance(&[(a0, b0), (a1, b1)]);
        let mut h = [a0, b0, a1, b1];
        h[which] = (h[which] + bump).min(D);
        let after = instance(&[(h[0], h[1]), (h[2], h[3])]);
        prop_assert!(after.union_level(0, 1) <= before.union_level(0, 1));
        prop_assert!(after.union_level(1, 0) <= before.union_level(1, 0));
    }

    #[test]
    fn two_union_feasibility_is_symmetric_and_implies_an_arc(
        pairs in prop::collection::vec((1..=D, 1..=D), 2..=8)
    ) {
        let s = instance(&pairs);
        let g1 = build_g1(&s).unwrap();
        let g2 = build_g2(&s).unwrap();
        for i in 0..s.n() {
            for j in 0..s.n() {
                if i == j {
                    continue;
                }
                prop_assert_eq!(s.level_feasible(i, j, 2), s.level_feasible(j, i, 2));
                prop_assert_eq!(g2.has_edge(i, j), s.level_feasible(i, j, 2));
                prop_assert_eq!(g1.weight(i, j) == 1, s.level_feasible(i, j, 1));
                if g2.has_edge(i, j) {
                    // Two charts that stack can also sit side by side one
                    // way or the other: the two shared-cell sums add up to
                    // at most twice the strip height.
                    prop_assert!(g1.weight(i, j) == 1 || g1.weight(j, i) == 1);
                }
            }
        }
    }

    #[test]
    fn sequence_packings_obey_the_length_identity(
        (pairs, order, levels) in packing_inputs(8)
    ) {
        let s = instance(&pairs);
        let p = realize(&s, &order, &levels, false);
        let n = s.n();
        let (k0, k1, k2) = p.count_unions();
        prop_assert_eq!(k0 + k1 + k2, n - 1);
        prop_assert_eq!(p.length(), 2 * n - k1 - 2 * k2);
        let cells = p.cell_packing();
        prop_assert_eq!(cells.length(), p.length());
        prop_assert!(cells.validate(&s).is_ok());
    }

    #[test]
    fn normalization_is_idempotent_and_keeps_occupancy(
        (pairs, order, levels) in packing_inputs(8),
        stretch in 1u32..4,
    ) {
        let s = instance(&pairs);
        let cells = realize(&s, &order, &levels, false).cell_packing();
        // Stretching positions only separates charts, so it stays valid and
        // leaves gaps for normalization to squeeze out.
        let spread = CellPacking::new(cells.positions().iter().map(|&p| p * stretch).collect());
        prop_assert!(spread.validate(&s).is_ok());
        let norm = spread.normalize();
        prop_assert!(norm.validate(&s).is_ok());
        prop_assert_eq!(norm.length(), spread.length());
        let occupied: Vec<u32> = norm.occupied_cells().into_iter().collect();
        let contiguous: Vec<u32> = (1..=norm.length() as u32).collect();
        prop_assert_eq!(occupied, contiguous);
        prop_assert_eq!(norm.normalize(), norm);
    }

    #[test]
    fn tours_split_into_packings_at_the_weight_bound(
        (pairs, tour, _) in packing_inputs(8)
    ) {
        let s = instance(&pairs);
        let n = s.n();
        let g = build_g1(&s).unwrap();
        let h = HamCycle::new(tour).unwrap();
        let w = g.tour_weight(&h);
        let p = packing_of_cycle(&h, &g, &s).unwrap();
        let (_, k1, k2) = p.count_unions();
        prop_assert_eq!(k2, 0);
        prop_assert_eq!(k1, w.min(n - 1));
        prop_assert_eq!(p.length(), 2 * n - k1);
        // Closing the packing back into a cycle keeps every 1-union as a
        // weight-1 arc, so the tour weight can only round up.
        let back = cycle_of_packing(&p, &g).unwrap();
        prop_assert!(g.tour_weight(&back) >= k1);
    }

    #[test]
    fn blossom_matching_is_maximum_on_union_graphs(
        pairs in prop::collection::vec((1..=D, 1..=D), 2..=7)
    ) {
        let s = instance(&pairs);
        let g = build_g2(&s).unwrap();
        let fast = max_cardinality_matching(&g);
        let slow = max_matching_exhaustive(&g);
        prop_assert_eq!(fast.len(), slow.len());
    }

    #[test]
    fn a1_is_valid_two_union_free_and_beats_the_baseline(
        pairs in prop::collection::vec((1..=D, 1..=D), 1..=7)
    ) {
        let s = instance(&pairs);
        let n = s.n();
        let p = algorithm_a1(&s, &ExactDp).unwrap();
        let (_, k1, k2) = p.count_unions();
        prop_assert_eq!(k2, 0);
        prop_assert!(p.length() <= 2 * n);
        prop_assert_eq!(p.length(), 2 * n - k1);
        prop_assert!(p.cell_packing().validate(&s).is_ok());
    }

    #[test]
    fn gamma_trades_each_two_union_for_a_one_union(
        (pairs, order, levels) in packing_inputs(8)
    ) {
        let s = instance(&pairs);
        let p = realize(&s, &order, &levels, true);
        let (_, k1, k2) = p.count_unions();
        let out = gamma_transform(&p, &s).unwrap();
        let (_, g1, g2) = out.count_unions();
        prop_assert_eq!(g2, 0);
        prop_assert_eq!(g1, k1 + k2);
        prop_assert_eq!(out.length(), p.length() + k2);
        prop_assert!(out.cell_packing().validate(&s).is_ok());
    }

    #[test]
    fn oracles_agree_on_small_instances(
        pairs in prop::collection::vec((1..=D, 1..=D), 1..=5)
    ) {
        let s = instance(&pairs);
        let tour = oracle_bcpp1(&s).unwrap();
        let brute = oracle_bcpp1_bruteforce(&s).unwrap();
        prop_assert_eq!(tour.optimum_length, brute.optimum_length);
        let seq = oracle_sequence(&s).unwrap();
        prop_assert!(seq.optimum_length <= tour.optimum_length);
        // Free-form placement has never beaten the best chain of unions:
        // sorting any placement by position yields gaps of at most two
        // cells, which a chain expresses exactly.
        let general = oracle_general(&s).unwrap();
        prop_assert_eq!(general.optimum_length, seq.optimum_length);
    }
}
