//! Maximum-cardinality matching in the 2-union graph, and the packing a
//! matching induces.
//!
//! The matcher is a blossom-contracting augmenting-path search. Odd cycles
//! are the one thing that breaks bipartite-style augmentation; whenever the
//! search meets an edge between two even-depth vertices it contracts the odd
//! cycle they close into its base vertex and keeps growing the tree. Each
//! phase either augments the matching by one or proves the root stays
//! exposed, so n phases of O(n^2) work suffice on the dense graphs here.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graphs::UnionGraph;
use crate::model::{Instance, SequencePacking};

/// A set of vertex-disjoint pairs; pairs are stored as `(lo, hi)`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Wrap a pair list on `n` vertices, checking bounds and disjointness.
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut used = vec![false; n];
        let mut norm = Vec::with_capacity(pairs.len());
        for (i, j) in pairs {
            if i >= n || j >= n || i == j {
                return Err(Error::BadEdge { i, j, n });
            }
            for v in [i, j] {
                if used[v] {
                    return Err(Error::NotDisjoint { vertex: v });
                }
                used[v] = true;
            }
            norm.push((i.min(j), i.max(j)));
        }
        norm.sort_unstable();
        Ok(Matching { n, pairs: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The partner of `v`, if matched.
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(i, j)| {
            if i == v {
                Some(j)
            } else if j == v {
                Some(i)
            } else {
                None
            }
        })
    }
}

/// Find a maximum-cardinality matching of `g`.
pub fn max_cardinality_matching(g: &UnionGraph) -> Matching {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    // Seed greedily; augmentation then only runs for the leftovers.
    for v in 0..n {
        if mate[v].is_none() {
            for u in v + 1..n {
                if mate[u].is_none() && g.has_edge(v, u) {
                    mate[v] = Some(u);
                    mate[u] = Some(v);
                    break;
                }
            }
        }
    }
    for v in 0..n {
        if mate[v].is_none() {
            augment_from(g, v, &mut mate);
        }
    }
    let pairs = (0..n)
        .filter_map(|v| mate[v].filter(|&u| v < u).map(|u| (v, u)))
        .collect();
    Matching { n, pairs }
}

/// Grow an alternating tree from the exposed `root`; on success the
/// augmenting path is flipped into `mate` and the matching grows by one.
fn augment_from(g: &UnionGraph, root: usize, mate: &mut [Option<usize>]) -> bool {
    let n = g.n();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut in_tree = vec![false; n];
    let mut queue = VecDeque::new();
    in_tree[root] = true;
    queue.push_back(root);

    while let Some(v) = queue.pop_front() {
        for to in 0..n {
            if !g.has_edge(v, to) || base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].is_some_and(|m| parent[m].is_some()) {
                // `to` is an even vertex: the edge closes an odd cycle.
                // Contract it into its base and resume from all its vertices.
                let cycle_base = lowest_common_base(mate, &parent, &base, v, to);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(mate, &mut parent, &base, &mut in_blossom, v, cycle_base, to);
                mark_blossom_path(mate, &mut parent, &base, &mut in_blossom, to, cycle_base, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cycle_base;
                        if !in_tree[i] {
                            in_tree[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        // `to` is exposed: flip the alternating path to the root.
                        let mut u = to;
                        loop {
                            let pv = parent[u].expect("path vertices have parents");
                            let next = mate[pv];
                            mate[u] = Some(pv);
                            mate[pv] = Some(u);
                            match next {
                                Some(x) => u = x,
                                None => return true,
                            }
                        }
                    }
                    Some(m) => {
                        in_tree[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
    }
    false
}

/// Walk both tree paths upward to find the first common blossom base.
fn lowest_common_base(
    mate: &[Option<usize>],
    parent: &[Option<usize>],
    base: &[usize],
    a: usize,
    b: usize,
) -> usize {
    let mut seen = vec![false; base.len()];
    let mut v = a;
    loop {
        v = base[v];
        seen[v] = true;
        match mate[v] {
            None => break, // reached the tree root
            Some(m) => match parent[m] {
                Some(p) => v = p,
                None => break,
            },
        }
    }
    let mut v = b;
    loop {
        v = base[v];
        if seen[v] {
            return v;
        }
        let m = mate[v].expect("walk below the root stays on matched vertices");
        v = parent[m].expect("matched tree vertices have parents");
    }
}

/// Record every base on the path from `v` down to the blossom base `stop`,
/// and re-point parents so later augmentation can cross the contracted cycle.
fn mark_blossom_path(
    mate: &[Option<usize>],
    parent: &mut [Option<usize>],
    base: &[usize],
    in_blossom: &mut [bool],
    mut v: usize,
    stop: usize,
    mut child: usize,
) {
    while base[v] != stop {
        let m = mate[v].expect("blossom path alternates through matched vertices");
        in_blossom[base[v]] = true;
        in_blossom[base[m]] = true;
        parent[v] = Some(child);
        child = m;
        v = parent[m].expect("matched blossom vertices have parents");
    }
}

/// Reference matcher: enumerate all matchings by branching on the lowest
/// undecided vertex. Exponential; for cross-checking small graphs only.
pub fn max_matching_exhaustive(g: &UnionGraph) -> Matching {
    fn search(
        g: &UnionGraph,
        from: usize,
        used: &mut [bool],
        current: &mut Vec<(usize, usize)>,
        best: &mut Vec<(usize, usize)>,
    ) {
        let n = g.n();
        let Some(v) = (from..n).find(|&v| !used[v]) else {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        };
        used[v] = true;
        // Leave v unmatched.
        search(g, v + 1, used, current, best);
        // Or match it with any later free neighbor.
        for u in v + 1..n {
            if !used[u] && g.has_edge(v, u) {
                used[u] = true;
                current.push((v, u));
                search(g, v + 1, used, current, best);
                current.pop();
                used[u] = false;
            }
        }
        used[v] = false;
    }

    let mut best = Vec::new();
    search(g, 0, &mut vec![false; g.n()], &mut Vec::new(), &mut best);
    Matching {
        n: g.n(),
        pairs: best,
    }
}

/// Lay a matching out as a packing: each pair becomes a 2-union block, each
/// unmatched chart a singleton, blocks in ascending order of their smallest
/// chart index (pairs first), joined by 0-unions. Length is `2n - 2|m|`.
pub fn packing_of_matching(m: &Matching, instance: &Instance) -> Result<SequencePacking> {
    let n = instance.n();
    if m.n() != n {
        return Err(Error::NotAPermutation);
    }
    let mut matched = vec![false; n];
    for &(i, j) in m.pairs() {
        if !instance.level_feasible(i, j, 2) {
            return Err(Error::NotATwoUnionPair { i, j });
        }
        matched[i] = true;
        matched[j] = true;
    }
    let mut order = Vec::with_capacity(n);
    let mut overlaps = Vec::with_capacity(n.saturating_sub(1));
    for &(i, j) in m.pairs() {
        if !order.is_empty() {
            overlaps.push(0);
        }
        order.push(i);
        overlaps.push(2);
        order.push(j);
    }
    for v in (0..n).filter(|&v| !matched[v]) {
        if !order.is_empty() {
            overlaps.push(0);
        }
        order.push(v);
    }
    SequencePacking::new(instance, order, overlaps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build_g2;
    use crate::model::Chart;

    fn inst(charts: &[(u32, u32)]) -> Instance {
        let charts = charts.iter().map(|&(a, b)| Chart::new(a, b)).collect();
        Instance::new("test", charts).unwrap()
    }

    fn graph(n: usize, edges: &[(usize, usize)]) -> UnionGraph {
        UnionGraph::from_edges(n, edges).unwrap()
    }

    fn assert_valid_on(m: &Matching, g: &UnionGraph) {
        let mut used = vec![false; g.n()];
        for &(i, j) in m.pairs() {
            assert!(g.has_edge(i, j), "pair ({i}, {j}) is not an edge");
            assert!(!used[i] && !used[j], "pair ({i}, {j}) reuses a vertex");
            used[i] = true;
            used[j] = true;
        }
    }

    #[test]
    fn triangle_matches_one_pair() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let m = max_cardinality_matching(&g);
        assert_eq!(m.len(), 1);
        assert_valid_on(&m, &g);
    }

    #[test]
    fn path_on_four_vertices_matches_both_ends() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let m = max_cardinality_matching(&g);
        assert_eq!(m.pairs(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn path_g2_built_from_charts_matches_both_ends() {
        // G2 of these charts is exactly the path 0-1-2-3: the a-row kills
        // {0,2} and {0,3}, the b-row kills {1,3}.
        let s = inst(&[(700, 100), (300, 600), (310, 400), (310, 600)]);
        let g = build_g2(&s).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let m = max_cardinality_matching(&g);
        assert_eq!(m.pairs(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn five_cycle_matches_two_pairs() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let m = max_cardinality_matching(&g);
        assert_eq!(m.len(), 2);
        assert_valid_on(&m, &g);
    }

    #[test]
    fn augmentation_crosses_a_blossom() {
        // Two triangles joined by a bridge: the greedy seed can match the
        // bridge {2, 3}, and rescuing vertices 0/1 and 4/5 then requires
        // augmenting through both odd cycles.
        let g = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]);
        let m = max_cardinality_matching(&g);
        assert_eq!(m.len(), 3);
        assert_valid_on(&m, &g);
    }

    #[test]
    fn matches_agree_with_exhaustive_search_on_fixed_graphs() {
        let cases: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (2, vec![]),
            (2, vec![(0, 1)]),
            (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
            (
                7,
                vec![
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 4),
                ],
            ),
            (6, vec![(0, 3), (1, 4), (2, 5), (0, 4), (1, 5), (2, 3)]),
        ];
        for (n, edges) in cases {
            let g = graph(n, &edges);
            let fast = max_cardinality_matching(&g);
            let slow = max_matching_exhaustive(&g);
            assert_eq!(fast.len(), slow.len(), "on {n} vertices, edges {edges:?}");
            assert_valid_on(&fast, &g);
        }
    }

    #[test]
    fn empty_matching_packs_every_chart_alone() {
        let s = inst(&[(600, 600), (700, 700), (800, 800)]);
        let m = Matching::new(3, vec![]).unwrap();
        let p = packing_of_matching(&m, &s).unwrap();
        assert_eq!(p.length(), 6);
        assert_eq!(p.count_unions(), (2, 0, 0));
    }

    #[test]
    fn two_pairs_pack_into_four_cells() {
        let s = inst(&[(500, 500), (500, 500), (600, 600), (400, 400)]);
        let g = build_g2(&s).unwrap();
        let m = max_cardinality_matching(&g);
        assert_eq!(m.len(), 2);
        let p = packing_of_matching(&m, &s).unwrap();
        assert_eq!(p.length(), 2 * 4 - 2 * 2);
        let (_, k1, k2) = p.count_unions();
        assert_eq!((k1, k2), (0, 2));
        assert!(p.cell_packing().validate(&s).is_ok());
    }

    #[test]
    fn one_pair_and_a_singleton_pack_into_four_cells() {
        let s = inst(&[(500, 500), (500, 500), (900, 900)]);
        let m = Matching::new(3, vec![(0, 1)]).unwrap();
        let p = packing_of_matching(&m, &s).unwrap();
        assert_eq!(p.length(), 4);
        assert_eq!(p.order(), &[0, 1, 2]);
        assert_eq!(p.overlaps(), &[2, 0]);
    }

    #[test]
    fn packing_rejects_pairs_without_a_two_union() {
        let s = inst(&[(600, 600), (500, 500)]);
        let m = Matching::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(
            packing_of_matching(&m, &s).unwrap_err(),
            Error::NotATwoUnionPair { i: 0, j: 1 }
        );
    }

    #[test]
    fn matching_constructor_rejects_overlap_and_bad_pairs() {
        assert_eq!(
            Matching::new(4, vec![(0, 1), (1, 2)]).unwrap_err(),
            Error::NotDisjoint { vertex: 1 }
        );
        assert_eq!(
            Matching::new(3, vec![(0, 3)]).unwrap_err(),
            Error::BadEdge { i: 0, j: 3, n: 3 }
        );
        assert_eq!(
            Matching::new(3, vec![(2, 2)]).unwrap_err(),
            Error::BadEdge { i: 2, j: 2, n: 3 }
        );
    }

    #[test]
    fn mate_lookup_reads_both_pair_sides() {
        let m = Matching::new(4, vec![(2, 0)]).unwrap();
        assert_eq!(m.pairs(), &[(0, 2)]);
        assert_eq!(m.mate(0), Some(2));
        assert_eq!(m.mate(2), Some(0));
        assert_eq!(m.mate(1), None);
    }
}
