//! The approximation algorithms: a tour-based packer, a matching-based
//! packer, and the union-rewriting transform that connects their analyses.
//!
//! The tour packer reduces to a maximum tour in the 1-union digraph and
//! inherits the engine's guarantee; the combined packer additionally tries
//! the best pairing by 2-unions and keeps the shorter result, which is where
//! its stronger bound for charts with a half-height bar comes from.

use crate::atsp::AtspSolver;
use crate::error::{Error, Result};
use crate::graphs::{build_g1, build_g2, packing_of_cycle};
use crate::matching::{max_cardinality_matching, packing_of_matching};
use crate::model::{Chart, Instance, SequencePacking};

/// The reserved full-height chart appended to odd instances so the digraph
/// has an even vertex count. Both its bars fill the strip, so it can never
/// share a cell with anything and its removal costs exactly its own two
/// cells.
pub fn dummy_chart(denominator: u32) -> Chart {
    Chart::new(denominator, denominator)
}

/// Pack by one left-to-right chain of 0- and 1-unions, chosen via a maximum
/// tour in the 1-union digraph.
///
/// Odd instances are padded with the dummy chart first (tour-to-packing
/// conversion can sacrifice a unit on odd vertex counts; padding restores
/// the guarantee). The dummy is removed afterwards: its own unions are all
/// 0-unions, and the union level of its two orphaned neighbors is
/// recomputed, which can only gain a 1-union. With an engine of guarantee
/// `alpha`, the output keeps at least `alpha` times the best possible
/// 1-union count.
pub fn algorithm_a1(instance: &Instance, engine: &dyn AtspSolver) -> Result<SequencePacking> {
    let n = instance.n();
    if n == 1 {
        return SequencePacking::new(instance, vec![0], vec![]);
    }
    if n.is_multiple_of(2) {
        let g = build_g1(instance)?;
        let h = engine.solve(&g)?;
        return packing_of_cycle(&h, &g, instance);
    }

    let mut charts = instance.charts().to_vec();
    charts.push(dummy_chart(instance.denominator()));
    let padded = Instance::with_denominator(instance.name(), charts, instance.denominator())?;
    let g = build_g1(&padded)?;
    let h = engine.solve(&g)?;
    let on_padded = packing_of_cycle(&h, &g, &padded)?;

    let dummy = n; // its index in the padded instance
    let pos = on_padded
        .order()
        .iter()
        .position(|&v| v == dummy)
        .expect("the dummy chart is part of the padded packing");
    let mut order = on_padded.order().to_vec();
    order.remove(pos);
    let old = on_padded.overlaps();
    let mut overlaps = Vec::with_capacity(n - 1);
    overlaps.extend_from_slice(&old[..pos.saturating_sub(1)]);
    if pos > 0 && pos < old.len() {
        // The dummy sat between two charts; they become adjacent.
        let (l, r) = (order[pos - 1], order[pos]);
        overlaps.push(u8::from(instance.level_feasible(l, r, 1)));
    }
    if pos < old.len() {
        overlaps.extend_from_slice(&old[pos + 1..]);
    }
    SequencePacking::new(instance, order, overlaps)
}

/// Rewrite every 2-union of `p` as a 1-union, orienting each pair so the
/// shared cell fits.
///
/// For a 2-union of `i` before `j`, at least one of `b_i + a_j` and
/// `b_j + a_i` fits the strip, because the two sums add up to at most twice
/// the strip height; the order with the larger `a + b` cross sum is kept
/// (original order on ties). Each rewrite turns one 2-union into one
/// 1-union, so the result has `k1 + k2` 1-unions and is longer by one cell
/// per rewrite.
///
/// Two consecutive 2-unions stack three charts into the same pair of cells;
/// no pairwise reorientation is defined there and the transform refuses
/// such packings. (Charts with a half-height bar never admit them: three
/// half-or-taller left bars cannot share a cell.)
pub fn gamma_transform(p: &SequencePacking, instance: &Instance) -> Result<SequencePacking> {
    if let Some(k) = p.overlaps().windows(2).position(|w| w == [2, 2]) {
        return Err(Error::StackedTwoUnions { position: k + 1 });
    }
    let mut order = p.order().to_vec();
    let mut overlaps = p.overlaps().to_vec();
    for k in 0..overlaps.len() {
        if overlaps[k] != 2 {
            continue;
        }
        let (i, j) = (order[k], order[k + 1]);
        let (ci, cj) = (instance.chart(i), instance.chart(j));
        if u64::from(ci.a()) + u64::from(cj.b()) < u64::from(cj.a()) + u64::from(ci.b()) {
            order.swap(k, k + 1);
        }
        overlaps[k] = 1;
    }
    SequencePacking::new(instance, order, overlaps)
}

/// Pack by the better of two strategies: pair charts greedily by a maximum
/// matching in the 2-union graph, or chain them with [`algorithm_a1`].
///
/// Intended for instances where every chart has a bar of at least half the
/// strip height; that is what the approximation analysis needs, and it is
/// enforced unless `allow_nonbig` is set (the output is a valid packing
/// either way, only the ratio statement is forfeited). Ties between the two
/// strategies go to the matching packing.
pub fn algorithm_a2(
    instance: &Instance,
    engine: &dyn AtspSolver,
    allow_nonbig: bool,
) -> Result<SequencePacking> {
    if !allow_nonbig {
        if let Some(chart) = (0..instance.n()).find(|&i| {
            let c = instance.chart(i);
            2 * u64::from(c.a().max(c.b())) < u64::from(instance.denominator())
        }) {
            return Err(Error::NotNonStrictlyBig { chart });
        }
    }
    if instance.n() == 1 {
        return SequencePacking::new(instance, vec![0], vec![]);
    }
    let matching = max_cardinality_matching(&build_g2(instance)?);
    let by_matching = packing_of_matching(&matching, instance)?;
    let by_tour = algorithm_a1(instance, engine)?;
    if by_tour.length() < by_matching.length() {
        Ok(by_tour)
    } else {
        Ok(by_matching)
    }
}

/// The do-nothing comparator: identity order, no unions, length `2n`.
pub fn baseline_no_union(instance: &Instance) -> SequencePacking {
    let n = instance.n();
    SequencePacking::new(instance, (0..n).collect(), vec![0; n.saturating_sub(1)])
        .expect("the union-free identity packing is always valid")
}
