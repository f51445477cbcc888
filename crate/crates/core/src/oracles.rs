//! Exact reference solvers. Slow and small-n by design: they exist to check
//! the fast algorithms and to measure true approximation ratios.
//!
//! Three search spaces are covered, each a superset of the previous one's
//! restriction: packings built from 0/1-unions only, packings built from any
//! chain of adjacent unions, and arbitrary cell assignments.

use crate::algorithms::algorithm_a1;
use crate::atsp::ExactDp;
use crate::error::{Error, Result};
use crate::model::{CellPacking, Instance, SequencePacking};
use crate::util::next_permutation;

/// An exact optimum together with a packing that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum_length: usize,
    pub packing: OraclePacking,
    /// 1-unions in the optimal packing (0 for the cell-assignment oracle,
    /// whose packings carry no union structure).
    pub k1: usize,
    /// 2-unions in the optimal packing (0 for the cell-assignment oracle).
    pub k2: usize,
    /// Search effort: DP states, permutations or search nodes visited.
    pub explored: u64,
}

/// The packing an oracle returns: chain-structured when the search space is
/// sequence packings, raw cell positions for the unrestricted search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OraclePacking {
    Sequence(SequencePacking),
    Cells(CellPacking),
}

impl OraclePacking {
    pub fn length(&self) -> usize {
        match self {
            OraclePacking::Sequence(p) => p.length(),
            OraclePacking::Cells(p) => p.length(),
        }
    }

    pub fn cell_packing(&self) -> CellPacking {
        match self {
            OraclePacking::Sequence(p) => p.cell_packing(),
            OraclePacking::Cells(p) => p.clone(),
        }
    }
}

const ORACLE_LIMIT: usize = 18;
const BRUTEFORCE_LIMIT: usize = 8;
const GENERAL_LIMIT: usize = 5;

/// Exact optimum over packings built from 0- and 1-unions, via the exact
/// tour engine on the 1-union digraph (odd inputs padded with the dummy
/// chart).
pub fn oracle_bcpp1(instance: &Instance) -> Result<OracleResult> {
    let n = instance.n();
    if n > ORACLE_LIMIT {
        return Err(Error::SizeLimit {
            what: "the 0/1-union oracle",
            limit: ORACLE_LIMIT,
            got: n,
        });
    }
    let p = algorithm_a1(instance, &ExactDp)?;
    let (_, k1, k2) = p.count_unions();
    debug_assert_eq!(k2, 0);
    let m = if n == 1 {
        1
    } else if n.is_multiple_of(2) {
        n
    } else {
        n + 1
    };
    Ok(OracleResult {
        optimum_length: p.length(),
        packing: OraclePacking::Sequence(p),
        k1,
        k2,
        explored: (1u64 << m) * m as u64,
    })
}

/// Independent check of [`oracle_bcpp1`]: try all `n!` orders, taking every
/// feasible 1-union along each order (per-pair 1-unions are independent, so
/// greedy is optimal for a fixed order).
pub fn oracle_bcpp1_bruteforce(instance: &Instance) -> Result<OracleResult> {
    let n = instance.n();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::SizeLimit {
            what: "the 0/1-union brute-force oracle",
            limit: BRUTEFORCE_LIMIT,
            got: n,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, Vec<usize>, Vec<u8>)> = None;
    let mut explored = 0u64;
    loop {
        explored += 1;
        let overlaps: Vec<u8> = order
            .windows(2)
            .map(|w| u8::from(instance.level_feasible(w[0], w[1], 1)))
            .collect();
        let k1: usize = overlaps.iter().map(|&t| t as usize).sum();
        let length = 2 * n - k1;
        if best.as_ref().is_none_or(|(l, _, _)| length < *l) {
            best = Some((length, order.clone(), overlaps));
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    let (length, order, overlaps) = best.expect("at least one order exists");
    let p = SequencePacking::new(instance, order, overlaps)?;
    let (_, k1, _) = p.count_unions();
    Ok(OracleResult {
        optimum_length: length,
        packing: OraclePacking::Sequence(p),
        k1,
        k2: 0,
        explored,
    })
}

/// One Pareto entry of the suffix DP: a packing of the charts in some mask,
/// starting with a fixed chart, summarized by its total union value and the
/// bar totals in its first two cells.
#[derive(Debug, Clone, Copy)]
struct SuffixEntry {
    value: u8,
    first: u32,
    second: u32,
}

/// Exact optimum over all valid sequence packings (any union levels).
///
/// Maximizing the summed union levels minimizes length (`2n - sum`).
/// The obvious subset DP over maximum pair levels is wrong: chained
/// 2-unions can overfill a cell that every pairwise test accepts. Instead,
/// a packing of a chart subset is summarized by what later prepends can
/// still see — the bar totals in its first two cells — and states keep a
/// Pareto frontier over (value, first-cell total, second-cell total).
/// Prepending touches at most those two cells, so the frontier is an exact
/// interface. The optimal order is rebuilt greedily: always the smallest
/// next chart (then the highest union level) that some frontier entry
/// certifies can still reach the optimum.
pub fn oracle_sequence(instance: &Instance) -> Result<OracleResult> {
    let n = instance.n();
    if n > ORACLE_LIMIT {
        return Err(Error::SizeLimit {
            what: "the sequence-packing oracle",
            limit: ORACLE_LIMIT,
            got: n,
        });
    }
    if n == 1 {
        let p = SequencePacking::new(instance, vec![0], vec![])?;
        return Ok(OracleResult {
            optimum_length: 2,
            packing: OraclePacking::Sequence(p),
            k1: 0,
            k2: 0,
            explored: 1,
        });
    }

    let d = instance.denominator();
    let charts = instance.charts();
    let full: usize = (1 << n) - 1;
    let mut explored = 0u64;
    // frontiers[mask * n + first]: Pareto entries for packings of `mask`
    // whose leftmost chart is `first`.
    let mut frontiers: Vec<Vec<SuffixEntry>> = vec![Vec::new(); (full + 1) * n];
    for c in 0..n {
        frontiers[(1 << c) * n + c] = vec![SuffixEntry {
            value: 0,
            first: charts[c].a(),
            second: charts[c].b(),
        }];
        explored += 1;
    }
    for mask in 1..=full {
        for first in 0..n {
            if mask & (1 << first) == 0 || frontiers[mask * n + first].is_empty() {
                continue;
            }
            for (c, chart) in charts.iter().enumerate() {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let (a, b) = (chart.a(), chart.b());
                let target = (mask | (1 << c)) * n + c;
                for idx in 0..frontiers[mask * n + first].len() {
                    let e = frontiers[mask * n + first][idx];
                    // Level 0: the new chart's cells are disjoint from the rest.
                    push_entry(
                        &mut frontiers[target],
                        SuffixEntry {
                            value: e.value,
                            first: a,
                            second: b,
                        },
                        &mut explored,
                    );
                    // Level 1: its right bar joins the old first cell.
                    if b + e.first <= d {
                        push_entry(
                            &mut frontiers[target],
                            SuffixEntry {
                                value: e.value + 1,
                                first: a,
                                second: b + e.first,
                            },
                            &mut explored,
                        );
                    }
                    // Level 2: it stacks onto the old first two cells.
                    if a + e.first <= d && b + e.second <= d {
                        push_entry(
                            &mut frontiers[target],
                            SuffixEntry {
                                value: e.value + 2,
                                first: a + e.first,
                                second: b + e.second,
                            },
                            &mut explored,
                        );
                    }
                }
            }
        }
    }

    let optimum_value = (0..n)
        .flat_map(|first| frontiers[full * n + first].iter())
        .map(|e| e.value)
        .max()
        .expect("the full mask is reachable");

    // Forward reconstruction. The running prefix is summarized by the bar
    // totals in its last two cells, mirroring the suffix interface; a
    // candidate (chart, level) survives if some frontier entry for the
    // remaining charts still adds up to the optimum — the entry's own value
    // plus the (exact) level at which it would be joined on.
    let mut order = Vec::with_capacity(n);
    let mut overlaps = Vec::with_capacity(n - 1);
    let mut remaining = full;
    let mut value_used = 0i32;
    let mut last_two = (0u32, 0u32);
    for step in 0..n {
        let mut chosen: Option<(usize, u8, u32, u32)> = None;
        'charts: for (next, chart) in charts.iter().enumerate() {
            if remaining & (1 << next) == 0 {
                continue;
            }
            let rest = remaining & !(1 << next);
            let levels: &[u8] = if step == 0 { &[0] } else { &[2, 1, 0] };
            for &t in levels {
                let (a, b) = (chart.a(), chart.b());
                let joined = match t {
                    0 => (a, b),
                    1 if last_two.1 + a <= d => (last_two.1 + a, b),
                    2 if last_two.0 + a <= d && last_two.1 + b <= d => {
                        (last_two.0 + a, last_two.1 + b)
                    }
                    _ => continue,
                };
                let needed = i32::from(optimum_value) - value_used - i32::from(t);
                if needed < 0 {
                    continue;
                }
                let feasible = if rest == 0 {
                    needed == 0
                } else {
                    (0..n).filter(|&f| rest & (1 << f) != 0).any(|f| {
                        frontiers[rest * n + f].iter().any(|e| {
                            let join_level = needed - i32::from(e.value);
                            (0..=2).contains(&join_level)
                                && join_feasible(joined, (e.first, e.second), join_level as u8, d)
                        })
                    })
                };
                if feasible {
                    chosen = Some((next, t, joined.0, joined.1));
                    break 'charts;
                }
            }
        }
        let (next, t, c0, c1) = chosen.expect("the optimum value stays reachable");
        if step > 0 {
            overlaps.push(t);
            value_used += i32::from(t);
        }
        order.push(next);
        remaining &= !(1 << next);
        last_two = (c0, c1);
    }

    let p = SequencePacking::new(instance, order, overlaps)?;
    let (_, k1, k2) = p.count_unions();
    debug_assert_eq!(p.length(), 2 * n - usize::from(optimum_value));
    Ok(OracleResult {
        optimum_length: p.length(),
        packing: OraclePacking::Sequence(p),
        k1,
        k2,
        explored,
    })
}

/// Can a suffix whose first two cells hold `suffix` be joined onto a prefix
/// whose last two cells hold `prefix`, at exactly union level `t`? The levels
/// are not nested (a feasible 2-union does not imply a feasible 1-union), so
/// the caller names the level it needs.
fn join_feasible(prefix: (u32, u32), suffix: (u32, u32), t: u8, d: u32) -> bool {
    match t {
        0 => true,
        1 => prefix.1 + suffix.0 <= d,
        2 => prefix.0 + suffix.0 <= d && prefix.1 + suffix.1 <= d,
        _ => false,
    }
}

/// Insert into a Pareto frontier over (value max, first min, second min),
/// dropping dominated entries.
fn push_entry(frontier: &mut Vec<SuffixEntry>, e: SuffixEntry, explored: &mut u64) {
    *explored += 1;
    for old in frontier.iter() {
        if old.value >= e.value && old.first <= e.first && old.second <= e.second {
            return;
        }
    }
    frontier
        .retain(|old| !(e.value >= old.value && e.first <= old.first && e.second <= old.second));
    frontier.push(e);
}

/// Exact optimum over arbitrary cell assignments — charts may be placed
/// anywhere, three or more bars may share a cell. The true optimum of the
/// problem, affordable only for a handful of charts.
pub fn oracle_general(instance: &Instance) -> Result<OracleResult> {
    let n = instance.n();
    if n > GENERAL_LIMIT {
        return Err(Error::SizeLimit {
            what: "the cell-assignment oracle",
            limit: GENERAL_LIMIT,
            got: n,
        });
    }
    let d = u64::from(instance.denominator());
    let span = 2 * n + 2; // positions 1..=2n, cells up to 2n+1
    let mut totals = vec![0u64; span];
    let mut positions = vec![0u32; n];
    let mut best_len = usize::MAX;
    let mut best_positions = Vec::new();
    let mut explored = 0u64;

    fn occupied(totals: &[u64]) -> usize {
        totals.iter().filter(|&&t| t > 0).count()
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        instance: &Instance,
        d: u64,
        chart: usize,
        totals: &mut Vec<u64>,
        positions: &mut Vec<u32>,
        best_len: &mut usize,
        best_positions: &mut Vec<u32>,
        explored: &mut u64,
    ) {
        *explored += 1;
        if occupied(totals) >= *best_len {
            return; // occupied cells never decrease as charts are added
        }
        let n = instance.n();
        if chart == n {
            let len = occupied(totals);
            if len < *best_len {
                *best_len = len;
                *best_positions = positions.clone();
            }
            return;
        }
        let c = instance.chart(chart);
        for p in 1..=(2 * n) {
            if totals[p] + u64::from(c.a()) <= d && totals[p + 1] + u64::from(c.b()) <= d {
                totals[p] += u64::from(c.a());
                totals[p + 1] += u64::from(c.b());
                positions[chart] = p as u32;
                search(
                    instance,
                    d,
                    chart + 1,
                    totals,
                    positions,
                    best_len,
                    best_positions,
                    explored,
                );
                totals[p] -= u64::from(c.a());
                totals[p + 1] -= u64::from(c.b());
            }
        }
    }

    search(
        instance,
        d,
        0,
        &mut totals,
        &mut positions,
        &mut best_len,
        &mut best_positions,
        &mut explored,
    );
    let packing = CellPacking::new(best_positions).normalize();
    debug_assert!(packing.validate(instance).is_ok());
    Ok(OracleResult {
        optimum_length: best_len,
        packing: OraclePacking::Cells(packing),
        k1: 0,
        k2: 0,
        explored,
    })
}

/// Visit every valid sequence packing of `instance` with union levels up to
/// `level_cap`, in lexicographic (order, levels) order. Exponential — meant
/// for exhaustive checks on small instances.
pub fn for_each_packing<F: FnMut(&SequencePacking)>(
    instance: &Instance,
    level_cap: u8,
    mut visit: F,
) {
    let n = instance.n();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let mut levels = vec![0u8; n.saturating_sub(1)];
        'levels: loop {
            if let Ok(p) = SequencePacking::new(instance, order.clone(), levels.clone()) {
                visit(&p);
            }
            // Advance the level vector like a little-endian counter.
            for slot in levels.iter_mut() {
                if *slot < level_cap {
                    *slot += 1;
                    continue 'levels;
                }
                *slot = 0;
            }
            break;
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
}
