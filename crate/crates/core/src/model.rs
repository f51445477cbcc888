//! Domain model for packing two-bar charts into a unit-height strip.
//!
//! A *two-bar chart* is a pair of unit-width bars of heights `a` (left) and
//! `b` (right) that must occupy two adjacent cells of a horizontal strip of
//! height 1. Heights are exact fixed-point values: an [`Instance`] declares a
//! `denominator` (default 1000) and every bar height is an integer number of
//! those parts. Feasibility tests such as `b_i + a_j <= 1` then hold with
//! equality exactly, which matters at the half-height boundary; floating
//! point would misclassify those cases.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bar height in fixed-point parts of the strip height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Height(u32);

impl Height {
    pub const fn new(parts: u32) -> Self {
        Height(parts)
    }

    pub const fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One two-bar chart: a left bar of height `a` and a right bar of height `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chart {
    pub a: Height,
    pub b: Height,
}

impl Chart {
    pub const fn new(a: u32, b: u32) -> Self {
        Chart {
            a: Height::new(a),
            b: Height::new(b),
        }
    }

    /// Left bar height in parts.
    pub const fn a(self) -> u32 {
        self.a.get()
    }

    /// Right bar height in parts.
    pub const fn b(self) -> u32 {
        self.b.get()
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// An ordered set of charts together with the fixed-point denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    name: String,
    charts: Vec<Chart>,
    denominator: u32,
}

impl Instance {
    pub const DEFAULT_DENOMINATOR: u32 = 1000;

    /// Build an instance with the default denominator of 1000 parts.
    pub fn new(name: impl Into<String>, charts: Vec<Chart>) -> Result<Self> {
        Self::with_denominator(name, charts, Self::DEFAULT_DENOMINATOR)
    }

    /// Build an instance with a custom fixed-point denominator.
    ///
    /// Every bar height must lie in `1..=denominator`; heights of exactly
    /// `denominator` correspond to full-height bars.
    pub fn with_denominator(
        name: impl Into<String>,
        charts: Vec<Chart>,
        denominator: u32,
    ) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::BadDenominator { denominator });
        }
        if charts.is_empty() {
            return Err(Error::EmptyInstance);
        }
        for (i, c) in charts.iter().enumerate() {
            for (bar, h) in [("a", c.a()), ("b", c.b())] {
                if h == 0 || h > denominator {
                    return Err(Error::BadHeight {
                        chart: i,
                        bar,
                        value: h,
                        denominator,
                    });
                }
            }
        }
        Ok(Instance {
            name: name.into(),
            charts,
            denominator,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.charts.len()
    }

    pub fn charts(&self) -> &[Chart] {
        &self.charts
    }

    pub fn chart(&self, i: usize) -> Chart {
        self.charts[i]
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    /// Maximum feasible union level for the ordered pair `(i, j)`.
    ///
    /// Level 2 packs the two charts into the same two cells (needs both
    /// rows to fit: `a_i + a_j` and `b_i + b_j`); level 1 shares a single
    /// cell (needs `b_i + a_j`); level 0 is always feasible. Note that the
    /// levels are not nested: a pair may admit a 2-union whose rows fit
    /// while `b_i + a_j` alone overflows, so use [`Instance::level_feasible`]
    /// to test a specific level.
    pub fn union_level(&self, i: usize, j: usize) -> u8 {
        if self.level_feasible(i, j, 2) {
            2
        } else if self.level_feasible(i, j, 1) {
            1
        } else {
            0
        }
    }

    /// Whether the ordered pair `(i, j)` admits a union of exactly level `t`.
    pub fn level_feasible(&self, i: usize, j: usize, t: u8) -> bool {
        let d = u64::from(self.denominator);
        let (ci, cj) = (self.charts[i], self.charts[j]);
        match t {
            0 => true,
            1 => u64::from(ci.b()) + u64::from(cj.a()) <= d,
            2 => {
                u64::from(ci.a()) + u64::from(cj.a()) <= d
                    && u64::from(ci.b()) + u64::from(cj.b()) <= d
            }
            _ => false,
        }
    }
}

/// A placement of every chart: chart `i` occupies cells `p(i)` and `p(i)+1`.
///
/// Cells are numbered from 1. The packing does not have to be contiguous;
/// [`CellPacking::normalize`] removes internal gaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPacking {
    positions: Vec<u32>,
}

/// Everything [`CellPacking::validate`] found wrong, cell by cell.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Violations {
    /// `(expected, got)` when the packing covers a different number of charts.
    pub wrong_chart_count: Option<(usize, usize)>,
    /// Charts placed below cell 1.
    pub bad_positions: Vec<usize>,
    /// `(cell, total height)` for every cell whose bars exceed the strip.
    pub overfull: Vec<(u32, u64)>,
}

impl Violations {
    pub fn is_empty(&self) -> bool {
        self.wrong_chart_count.is_none()
            && self.bad_positions.is_empty()
            && self.overfull.is_empty()
    }
}

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        if let Some((expected, got)) = self.wrong_chart_count {
            write!(f, "expected {expected} chart positions, got {got}")?;
            sep = "; ";
        }
        for &i in &self.bad_positions {
            write!(f, "{sep}chart {i} placed below cell 1")?;
            sep = "; ";
        }
        for &(cell, total) in &self.overfull {
            write!(f, "{sep}cell {cell} overfull (total {total})")?;
            sep = "; ";
        }
        Ok(())
    }
}

impl CellPacking {
    pub fn new(positions: Vec<u32>) -> Self {
        CellPacking { positions }
    }

    /// Position of chart `i` (its left bar's cell).
    pub fn position(&self, i: usize) -> u32 {
        self.positions[i]
    }

    pub fn positions(&self) -> &[u32] {
        &self.positions
    }

    pub fn chart_count(&self) -> usize {
        self.positions.len()
    }

    /// The set of cells occupied by at least one bar.
    pub fn occupied_cells(&self) -> BTreeSet<u32> {
        let mut cells = BTreeSet::new();
        for &p in &self.positions {
            cells.insert(p);
            cells.insert(p + 1);
        }
        cells
    }

    /// Number of strip cells occupied by at least one bar.
    pub fn length(&self) -> usize {
        self.occupied_cells().len()
    }

    /// Check the packing against the strip-height budget of `instance`.
    ///
    /// Ok when every chart sits at a cell `>= 1` and every cell's combined
    /// bar height stays within the denominator; otherwise lists each bad
    /// position and each overfull cell with its total.
    pub fn validate(&self, instance: &Instance) -> std::result::Result<(), Violations> {
        let mut v = Violations::default();
        if self.positions.len() != instance.n() {
            v.wrong_chart_count = Some((instance.n(), self.positions.len()));
            return Err(v);
        }
        let mut totals: std::collections::BTreeMap<u32, u64> = std::collections::BTreeMap::new();
        for (i, &p) in self.positions.iter().enumerate() {
            if p < 1 {
                v.bad_positions.push(i);
                continue;
            }
            let c = instance.chart(i);
            *totals.entry(p).or_insert(0) += u64::from(c.a());
            *totals.entry(p + 1).or_insert(0) += u64::from(c.b());
        }
        let limit = u64::from(instance.denominator());
        for (&cell, &total) in &totals {
            if total > limit {
                v.overfull.push((cell, total));
            }
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    /// Slide every maximal block of charts left until no cell below the
    /// last occupied one is empty and cell 1 is occupied.
    ///
    /// No chart can span an empty cell (each occupies two *adjacent* cells),
    /// so deleting empty cells keeps every chart on two adjacent cells and
    /// can only lower per-cell totals' positions, never merge two cells.
    /// The left-to-right chart order is preserved and the result is a fixed
    /// point of this operation.
    pub fn normalize(&self) -> CellPacking {
        if self.positions.is_empty() {
            return self.clone();
        }
        let occupied: Vec<u32> = self.occupied_cells().into_iter().collect();
        let rank = |cell: u32| -> u32 {
            // 1-based rank of `cell` among the occupied cells.
            (occupied.partition_point(|&c| c < cell) + 1) as u32
        };
        CellPacking::new(self.positions.iter().map(|&p| rank(p)).collect())
    }
}

/// A packing described as a left-to-right chart order plus, for each adjacent
/// pair, the union level actually used (which may be below the maximum
/// feasible level for that pair).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePacking {
    order: Vec<usize>,
    overlaps: Vec<u8>,
    positions: Vec<u32>,
}

impl SequencePacking {
    /// Build and fully check a sequence packing.
    ///
    /// `order` must be a permutation of `0..n`, `overlaps` must hold `n - 1`
    /// levels, each level must be feasible for its ordered pair, and the
    /// induced cell packing must respect every cell's height budget. The
    /// last check is not implied by pairwise feasibility: three half-height
    /// charts chained by 2-unions would stack into the same cells.
    pub fn new(instance: &Instance, order: Vec<usize>, overlaps: Vec<u8>) -> Result<Self> {
        let n = instance.n();
        if order.len() != n {
            return Err(Error::NotAPermutation);
        }
        let mut seen = vec![false; n];
        for &i in &order {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation);
            }
            seen[i] = true;
        }
        if overlaps.len() + 1 != n {
            return Err(Error::OverlapCount {
                expected: n - 1,
                got: overlaps.len(),
            });
        }
        for (k, &t) in overlaps.iter().enumerate() {
            if t > 2 || !instance.level_feasible(order[k], order[k + 1], t) {
                return Err(Error::InfeasibleOverlap {
                    position: k,
                    left: order[k],
                    right: order[k + 1],
                    level: t,
                });
            }
        }
        let mut positions = vec![0u32; n];
        let mut cell = 1u32;
        positions[order[0]] = cell;
        for (k, &t) in overlaps.iter().enumerate() {
            cell += 2 - u32::from(t);
            positions[order[k + 1]] = cell;
        }
        let packing = CellPacking::new(positions.clone());
        if let Err(v) = packing.validate(instance) {
            return Err(Error::InvalidPacking(v));
        }
        Ok(SequencePacking {
            order,
            overlaps,
            positions,
        })
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn overlaps(&self) -> &[u8] {
        &self.overlaps
    }

    /// The induced cell packing (already normalized: it starts at cell 1 and
    /// has no gaps).
    pub fn cell_packing(&self) -> CellPacking {
        CellPacking::new(self.positions.clone())
    }

    /// Count adjacent pairs by used union level: `(k0, k1, k2)`.
    pub fn count_unions(&self) -> (usize, usize, usize) {
        let mut k = [0usize; 3];
        for &t in &self.overlaps {
            k[t as usize] += 1;
        }
        (k[0], k[1], k[2])
    }

    /// Occupied cells: `2n - k1 - 2*k2`.
    pub fn length(&self) -> usize {
        let (_, k1, k2) = self.count_unions();
        2 * self.order.len() - k1 - 2 * k2
    }
}

/// Structural classes of instances that solvers care about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChartClass {
    /// No structural restriction; every instance belongs here.
    Arbitrary,
    /// Every chart has a bar strictly taller than half the strip.
    Big,
    /// Every chart has a bar of at least half the strip height.
    NonStrictlyBig,
    /// Every chart's left bar is at least as tall as its right bar.
    MonotoneNonIncreasing,
    /// Every chart's left bar is at most as tall as its right bar.
    MonotoneNonDecreasing,
}

impl ChartClass {
    pub const ALL: [ChartClass; 5] = [
        ChartClass::Arbitrary,
        ChartClass::Big,
        ChartClass::NonStrictlyBig,
        ChartClass::MonotoneNonIncreasing,
        ChartClass::MonotoneNonDecreasing,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ChartClass::Arbitrary => "arbitrary",
            ChartClass::Big => "big",
            ChartClass::NonStrictlyBig => "non-strictly-big",
            ChartClass::MonotoneNonIncreasing => "monotone-nonincreasing",
            ChartClass::MonotoneNonDecreasing => "monotone-nondecreasing",
        }
    }

    fn holds_for(self, c: Chart, denominator: u32) -> bool {
        let d = u64::from(denominator);
        let hi = u64::from(c.a().max(c.b()));
        match self {
            ChartClass::Arbitrary => true,
            // max{a,b} > d/2 without integer division: 2*max > d.
            ChartClass::Big => 2 * hi > d,
            // max{a,b} >= d/2: 2*max >= d.
            ChartClass::NonStrictlyBig => 2 * hi >= d,
            ChartClass::MonotoneNonIncreasing => c.a() >= c.b(),
            ChartClass::MonotoneNonDecreasing => c.a() <= c.b(),
        }
    }
}

impl fmt::Display for ChartClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ChartClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ChartClass::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| format!("unknown chart class {s:?}"))
    }
}

impl Instance {
    /// Every class tag whose predicate holds for all charts.
    ///
    /// `Arbitrary` is always included. A chart with equal bars satisfies
    /// both monotone predicates, so constant-height instances carry both
    /// monotone tags.
    pub fn classify(&self) -> BTreeSet<ChartClass> {
        ChartClass::ALL
            .into_iter()
            .filter(|class| {
                self.charts
                    .iter()
                    .all(|&c| class.holds_for(c, self.denominator))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(charts: &[(u32, u32)]) -> Instance {
        let charts = charts.iter().map(|&(a, b)| Chart::new(a, b)).collect();
        Instance::new("test", charts).unwrap()
    }

    #[test]
    fn union_level_two_when_both_rows_fit() {
        let s = inst(&[(600, 600), (400, 400)]);
        assert_eq!(s.union_level(0, 1), 2);
    }

    #[test]
    fn union_level_one_when_only_shared_cell_fits() {
        let s = inst(&[(700, 600), (400, 500)]);
        assert_eq!(s.union_level(0, 1), 1);
    }

    #[test]
    fn union_level_zero_when_nothing_fits() {
        let s = inst(&[(500, 600), (500, 700)]);
        assert_eq!(s.union_level(0, 1), 0);
    }

    #[test]
    fn union_levels_are_not_nested() {
        // The pair admits a 2-union (rows 1000 and 1000) but not a 1-union
        // (900 + 900 overflows the shared cell), so feasibility must be
        // queried per level rather than by comparing against the maximum.
        let s = inst(&[(100, 900), (900, 100)]);
        assert_eq!(s.union_level(0, 1), 2);
        assert!(s.level_feasible(0, 1, 2));
        assert!(!s.level_feasible(0, 1, 1));
        assert!(s.level_feasible(0, 1, 0));
    }

    #[test]
    fn two_union_is_symmetric() {
        let s = inst(&[(600, 600), (400, 400)]);
        assert_eq!(s.union_level(1, 0), 2);
    }

    #[test]
    fn length_without_unions_is_two_cells_per_chart() {
        let s = inst(&[(1000, 1000), (1000, 1000), (1000, 1000)]);
        let p = SequencePacking::new(&s, vec![0, 1, 2], vec![0, 0]).unwrap();
        assert_eq!(p.length(), 6);
        assert_eq!(p.cell_packing().length(), 6);
    }

    #[test]
    fn length_of_a_single_two_union_is_two() {
        let s = inst(&[(600, 600), (400, 400)]);
        let p = SequencePacking::new(&s, vec![0, 1], vec![2]).unwrap();
        assert_eq!(p.length(), 2);
        assert_eq!(p.cell_packing().positions(), &[1, 1]);
    }

    #[test]
    fn length_of_three_charts_with_one_shared_cell_is_five() {
        let s = inst(&[(600, 500), (500, 600), (900, 900)]);
        let p = SequencePacking::new(&s, vec![0, 1, 2], vec![1, 0]).unwrap();
        assert_eq!(p.length(), 5);
        assert_eq!(p.cell_packing().positions(), &[1, 2, 4]);
    }

    #[test]
    fn validate_accepts_exactly_full_cells() {
        let s = inst(&[(600, 600), (400, 400)]);
        let p = CellPacking::new(vec![1, 1]);
        assert!(p.validate(&s).is_ok());
    }

    #[test]
    fn validate_reports_every_overfull_cell() {
        let s = inst(&[(600, 600), (500, 500)]);
        let p = CellPacking::new(vec![1, 1]);
        let v = p.validate(&s).unwrap_err();
        assert_eq!(v.overfull, vec![(1, 1100), (2, 1100)]);
        assert!(v.bad_positions.is_empty());
    }

    #[test]
    fn validate_accepts_a_single_chart() {
        let s = inst(&[(1000, 1000)]);
        assert!(CellPacking::new(vec![1]).validate(&s).is_ok());
    }

    #[test]
    fn validate_rejects_positions_below_the_strip() {
        let s = inst(&[(100, 100)]);
        let v = CellPacking::new(vec![0]).validate(&s).unwrap_err();
        assert_eq!(v.bad_positions, vec![0]);
    }

    #[test]
    fn normalize_shifts_a_lone_chart_to_cell_one() {
        let p = CellPacking::new(vec![3]);
        assert_eq!(p.normalize().positions(), &[1]);
    }

    #[test]
    fn normalize_removes_internal_gaps() {
        // Charts at cells {1, 4} occupy cells {1,2,4,5}; cell 3 is empty.
        let p = CellPacking::new(vec![1, 4]);
        assert_eq!(p.normalize().positions(), &[1, 3]);
    }

    #[test]
    fn normalize_is_identity_on_normalized_packings() {
        let p = CellPacking::new(vec![1, 2, 4]);
        assert_eq!(p.normalize(), p);
        assert_eq!(p.normalize().normalize(), p.normalize());
    }

    #[test]
    fn normalize_never_merges_charts_into_one_cell() {
        let s = inst(&[(1000, 1000), (1000, 1000)]);
        let p = CellPacking::new(vec![1, 5]);
        let q = p.normalize();
        assert_eq!(q.positions(), &[1, 3]);
        assert!(q.validate(&s).is_ok());
        assert_eq!(q.length(), 4);
    }

    #[test]
    fn count_unions_of_a_single_chart_is_zero() {
        let s = inst(&[(500, 500)]);
        let p = SequencePacking::new(&s, vec![0], vec![]).unwrap();
        assert_eq!(p.count_unions(), (0, 0, 0));
        assert_eq!(p.length(), 2);
    }

    #[test]
    fn count_unions_sees_a_two_union() {
        let s = inst(&[(600, 600), (400, 400)]);
        let p = SequencePacking::new(&s, vec![0, 1], vec![2]).unwrap();
        assert_eq!(p.count_unions(), (0, 0, 1));
    }

    #[test]
    fn count_unions_matches_length_identity() {
        let s = inst(&[(600, 500), (500, 500), (900, 900), (100, 100)]);
        let p = SequencePacking::new(&s, vec![0, 1, 2, 3], vec![1, 0, 2]).unwrap();
        assert_eq!(p.count_unions(), (1, 1, 1));
        assert_eq!(p.length(), 8 - 1 - 2);
        assert_eq!(p.cell_packing().length(), 5);
    }

    #[test]
    fn declared_levels_may_sit_below_the_maximum() {
        let s = inst(&[(100, 100), (100, 100)]);
        assert_eq!(s.union_level(0, 1), 2);
        let p = SequencePacking::new(&s, vec![0, 1], vec![1]).unwrap();
        assert_eq!(p.count_unions(), (0, 1, 0));
        assert_eq!(p.length(), 3);
    }

    #[test]
    fn sequence_rejects_infeasible_declared_level() {
        let s = inst(&[(100, 900), (900, 100)]);
        let err = SequencePacking::new(&s, vec![0, 1], vec![1]).unwrap_err();
        assert_eq!(
            err,
            Error::InfeasibleOverlap {
                position: 0,
                left: 0,
                right: 1,
                level: 1
            }
        );
    }

    #[test]
    fn sequence_rejects_cell_pileups_beyond_pairwise_checks() {
        // Each adjacent pair admits a 2-union, but chaining both stacks all
        // three left bars into cell 1 (1 + 500 + 500 > 1000).
        let s = inst(&[(1, 500), (500, 500), (500, 500)]);
        assert_eq!(s.union_level(0, 1), 2);
        assert_eq!(s.union_level(1, 2), 2);
        let err = SequencePacking::new(&s, vec![0, 1, 2], vec![2, 2]).unwrap_err();
        match err {
            Error::InvalidPacking(v) => assert_eq!(v.overfull, vec![(1, 1001), (2, 1500)]),
            other => panic!("expected a packing violation, got {other:?}"),
        }
    }

    #[test]
    fn sequence_rejects_non_permutations() {
        let s = inst(&[(500, 500), (500, 500)]);
        assert_eq!(
            SequencePacking::new(&s, vec![0, 0], vec![0]).unwrap_err(),
            Error::NotAPermutation
        );
        assert_eq!(
            SequencePacking::new(&s, vec![0], vec![]).unwrap_err(),
            Error::NotAPermutation
        );
    }

    #[test]
    fn sequence_rejects_wrong_overlap_count() {
        let s = inst(&[(500, 500), (500, 500)]);
        assert_eq!(
            SequencePacking::new(&s, vec![0, 1], vec![]).unwrap_err(),
            Error::OverlapCount {
                expected: 1,
                got: 0
            }
        );
    }

    #[test]
    fn classify_sees_half_height_left_bars() {
        let s = inst(&[(500, 300), (500, 300)]);
        let tags = s.classify();
        assert!(tags.contains(&ChartClass::NonStrictlyBig));
        assert!(tags.contains(&ChartClass::MonotoneNonIncreasing));
        assert!(!tags.contains(&ChartClass::Big));
        assert!(!tags.contains(&ChartClass::MonotoneNonDecreasing));
    }

    #[test]
    fn classify_sees_big_charts_regardless_of_side() {
        let s = inst(&[(501, 100), (100, 501)]);
        let tags = s.classify();
        assert!(tags.contains(&ChartClass::Big));
        assert!(tags.contains(&ChartClass::NonStrictlyBig));
        assert!(!tags.contains(&ChartClass::MonotoneNonIncreasing));
        assert!(!tags.contains(&ChartClass::MonotoneNonDecreasing));
    }

    #[test]
    fn classify_always_includes_arbitrary() {
        let s = inst(&[(499, 499)]);
        let tags = s.classify();
        assert!(tags.contains(&ChartClass::Arbitrary));
        assert!(!tags.contains(&ChartClass::Big));
        assert!(!tags.contains(&ChartClass::NonStrictlyBig));
        // Equal bars satisfy both monotone predicates.
        assert!(tags.contains(&ChartClass::MonotoneNonIncreasing));
        assert!(tags.contains(&ChartClass::MonotoneNonDecreasing));
    }

    #[test]
    fn instance_rejects_out_of_range_heights() {
        let e = Instance::new("bad", vec![Chart::new(0, 500)]).unwrap_err();
        assert_eq!(
            e,
            Error::BadHeight {
                chart: 0,
                bar: "a",
                value: 0,
                denominator: 1000
            }
        );
        let e = Instance::new("bad", vec![Chart::new(500, 1001)]).unwrap_err();
        assert_eq!(
            e,
            Error::BadHeight {
                chart: 0,
                bar: "b",
                value: 1001,
                denominator: 1000
            }
        );
    }

    #[test]
    fn instance_rejects_empty_chart_lists() {
        assert_eq!(
            Instance::new("empty", vec![]).unwrap_err(),
            Error::EmptyInstance
        );
    }

    #[test]
    fn custom_denominators_shift_the_half_height_boundary() {
        let charts = vec![Chart::new(3, 2), Chart::new(2, 3)];
        let s = Instance::with_denominator("fifths", charts, 5).unwrap();
        // 3 + 2 = 5 fits a row of denominator 5 exactly.
        assert_eq!(s.union_level(0, 1), 2);
        assert!(s.classify().contains(&ChartClass::Big));
    }

    #[test]
    fn chart_class_tags_round_trip() {
        for class in ChartClass::ALL {
            assert_eq!(class.tag().parse::<ChartClass>().unwrap(), class);
        }
        assert!("huge".parse::<ChartClass>().is_err());
    }
}
