//! Engines for the maximum-weight Hamiltonian cycle in a complete 0/1
//! digraph, each with a declared approximation guarantee.
//!
//! The packing algorithms treat the engine as a black box: any engine whose
//! tours weigh at least `alpha` times the optimum yields a packing within
//! `2 - alpha` of the shortest one built from 0- and 1-unions. Three engines
//! are provided: an exact subset DP for small inputs, a cycle-cover patcher
//! with a proven 1/2 guarantee, and the patcher followed by hill-climbing.

use crate::error::{Error, Result};
use crate::graphs::{HamCycle, UnionDigraph};
use crate::util::next_permutation;

/// An approximation guarantee as an exact fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alpha {
    pub num: u32,
    pub den: u32,
}

impl Alpha {
    pub const ONE: Alpha = Alpha { num: 1, den: 1 };
    pub const HALF: Alpha = Alpha { num: 1, den: 2 };
}

impl std::fmt::Display for Alpha {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// What an engine promises: its name, its guarantee, and how large an input
/// it accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverContract {
    pub name: &'static str,
    pub alpha: Alpha,
    pub size_limit: Option<usize>,
}

/// A maximum-tour engine. Every returned cycle must weigh at least
/// `alpha` times the optimal tour weight, for all inputs within the
/// declared size limit.
pub trait AtspSolver {
    fn contract(&self) -> SolverContract;
    fn solve(&self, g: &UnionDigraph) -> Result<HamCycle>;
}

/// Exact engine: subset dynamic program, `alpha = 1`, inputs up to 20
/// vertices (the table has `2^n * n` one-byte entries).
pub struct ExactDp;

/// Cycle-cover engine: assignment problem plus patching, `alpha = 1/2`.
pub struct CycleCover;

/// Cycle-cover engine followed by hill-climbing; the guarantee stays 1/2
/// (local search never decreases weight).
pub struct CycleCoverLs;

impl AtspSolver for ExactDp {
    fn contract(&self) -> SolverContract {
        SolverContract {
            name: "exact",
            alpha: Alpha::ONE,
            size_limit: Some(EXACT_LIMIT),
        }
    }

    fn solve(&self, g: &UnionDigraph) -> Result<HamCycle> {
        solve_exact(g)
    }
}

impl AtspSolver for CycleCover {
    fn contract(&self) -> SolverContract {
        SolverContract {
            name: "cycle-cover",
            alpha: Alpha::HALF,
            size_limit: None,
        }
    }

    fn solve(&self, g: &UnionDigraph) -> Result<HamCycle> {
        Ok(solve_cycle_cover(g))
    }
}

impl AtspSolver for CycleCoverLs {
    fn contract(&self) -> SolverContract {
        SolverContract {
            name: "cycle-cover+ls",
            alpha: Alpha::HALF,
            size_limit: None,
        }
    }

    fn solve(&self, g: &UnionDigraph) -> Result<HamCycle> {
        // Each accepted move gains at least one weight unit and tour weight
        // is at most n, so a budget of n always reaches a local optimum.
        improve_local_search(g, &solve_cycle_cover(g), g.n())
    }
}

pub const ENGINE_NAMES: [&str; 3] = ["exact", "cycle-cover", "cycle-cover+ls"];

/// Look an engine up by its report name.
pub fn engine_by_name(name: &str) -> Result<Box<dyn AtspSolver>> {
    match name {
        "exact" => Ok(Box::new(ExactDp)),
        "cycle-cover" => Ok(Box::new(CycleCover)),
        "cycle-cover+ls" => Ok(Box::new(CycleCoverLs)),
        _ => Err(Error::UnknownEngine {
            name: name.to_string(),
        }),
    }
}

const EXACT_LIMIT: usize = 20;

/// Maximum-weight tour by dynamic programming over vertex subsets.
///
/// `best[mask][v]` is the best weight of a path that starts at `v`, visits
/// exactly the vertices outside `mask`, and closes back at vertex 0 (`mask`
/// always contains 0 and `v`). Filling masks in decreasing order makes each
/// state depend only on strict supersets. Ties are broken toward the
/// lexicographically smallest optimal tour that starts at vertex 0, by
/// walking forward and always taking the smallest next vertex that still
/// achieves the optimum.
pub fn solve_exact(g: &UnionDigraph) -> Result<HamCycle> {
    let n = g.n();
    if n > EXACT_LIMIT {
        return Err(Error::SizeLimit {
            what: "the exact tour engine",
            limit: EXACT_LIMIT,
            got: n,
        });
    }
    let full: usize = (1 << n) - 1;
    let mut best = vec![0u8; (full + 1) * n];
    for mask in (1..=full).rev() {
        if mask & 1 == 0 {
            continue;
        }
        for v in 0..n {
            if mask & (1 << v) == 0 {
                continue;
            }
            best[mask * n + v] = if mask == full {
                g.weight(v, 0)
            } else {
                (0..n)
                    .filter(|&u| mask & (1 << u) == 0)
                    .map(|u| g.weight(v, u) + best[(mask | (1 << u)) * n + u])
                    .max()
                    .expect("a non-full mask has a successor")
            };
        }
    }
    let mut tour = Vec::with_capacity(n);
    tour.push(0usize);
    let mut mask = 1usize;
    let mut v = 0usize;
    while tour.len() < n {
        let target = best[mask * n + v];
        let u = (0..n)
            .filter(|&u| mask & (1 << u) == 0)
            .find(|&u| g.weight(v, u) + best[(mask | (1 << u)) * n + u] == target)
            .expect("some successor achieves the state's value");
        tour.push(u);
        mask |= 1 << u;
        v = u;
    }
    HamCycle::new(tour)
}

/// Maximum-weight tour weight by enumerating all `(n-1)!` tours.
///
/// Returns the lexicographically smallest optimal tour starting at vertex 0
/// — the same tie-break as [`solve_exact`] — so the two can be compared for
/// equality, not just weight. Exponential; a reference for small inputs.
pub fn max_tour_bruteforce(g: &UnionDigraph) -> (HamCycle, usize) {
    let n = g.n();
    let mut rest: Vec<usize> = (1..n).collect();
    let mut best_tour = None;
    let mut best_weight = 0usize;
    loop {
        let mut tour = Vec::with_capacity(n);
        tour.push(0);
        tour.extend_from_slice(&rest);
        let h = HamCycle::new(tour).expect("enumerated tours are permutations");
        let w = g.tour_weight(&h);
        if best_tour.is_none() || w > best_weight {
            best_weight = w;
            best_tour = Some(h);
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    (
        best_tour.expect("every digraph has at least one tour"),
        best_weight,
    )
}

/// Maximum-weight cycle cover patched into a single tour; never returns
/// less than half the optimal tour weight.
///
/// The cover is found as a minimum-cost assignment (successor choice) with
/// self-loops priced out. Every Hamiltonian cycle is itself a cover, so the
/// cover weighs at least the optimal tour. Each cycle then gives up its
/// lightest arc: covers with a zero arc lose nothing, and a cycle of all
/// weight-1 arcs has at least two of them, so at most half its weight is
/// lost. A single-cycle cover is already the answer.
pub fn solve_cycle_cover(g: &UnionDigraph) -> HamCycle {
    let n = g.n();
    let mut cost = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            cost[i * n + j] = if i == j {
                // Large enough that no assignment with an alternative (any
                // derangement costs at most n) ever picks a self-loop.
                1_000_000
            } else {
                1 - i64::from(g.weight(i, j))
            };
        }
    }
    let succ = min_cost_assignment(&cost, n);

    // Split the successor permutation into cycles, lowest vertex first.
    let mut seen = vec![false; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v);
            v = succ[v];
        }
        cycles.push(cycle);
    }
    if cycles.len() == 1 {
        return HamCycle::new(cycles.pop().expect("one cycle")).expect("cover is a permutation");
    }

    // Open each cycle at its lightest arc (ties: smallest tail index) and
    // chain the resulting paths.
    let mut tour = Vec::with_capacity(n);
    for cycle in &cycles {
        let k = cycle.len();
        let cut = (0..k)
            .min_by_key(|&t| (g.weight(cycle[t], cycle[(t + 1) % k]), cycle[t]))
            .expect("cycles are nonempty");
        for step in 1..=k {
            tour.push(cycle[(cut + step) % k]);
        }
    }
    HamCycle::new(tour).expect("patched cover visits every vertex once")
}

/// Minimum-cost perfect assignment on an `n x n` cost matrix
/// (potentials-and-augmenting-paths method, O(n^3)); returns the column
/// assigned to each row.
fn min_cost_assignment(cost: &[i64], n: usize) -> Vec<usize> {
    const INF: i64 = i64::MAX / 2;
    // 1-based arrays; row/column 0 is the scratch slot.
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = INF;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut succ = vec![0usize; n];
    for j in 1..=n {
        if row_of[j] != 0 {
            succ[row_of[j] - 1] = j - 1;
        }
    }
    succ
}

/// Hill-climb `h` with single-vertex reinsertion and two-arc exchange
/// moves, first improvement, until a local optimum or until `budget` moves
/// have been accepted. Weight never decreases.
pub fn improve_local_search(g: &UnionDigraph, h: &HamCycle, budget: usize) -> Result<HamCycle> {
    let n = g.n();
    if h.n() != n {
        return Err(Error::NotAPermutation);
    }
    let mut tour = h.tour().to_vec();
    let mut accepted = 0usize;
    while accepted < budget {
        if let Some(next) = reinsertion_gain(g, &tour).or_else(|| exchange_gain(g, &tour)) {
            tour = next;
            accepted += 1;
        } else {
            break;
        }
    }
    HamCycle::new(tour)
}

/// First tour obtained by moving one vertex elsewhere that strictly gains
/// weight, if any.
fn reinsertion_gain(g: &UnionDigraph, tour: &[usize]) -> Option<Vec<usize>> {
    let n = tour.len();
    let w = |a: usize, b: usize| i64::from(g.weight(tour[a % n], tour[b % n]));
    for i in 0..n {
        // Removing tour[i] splices its neighbors together.
        let removal = w(i + n - 1, i + 1) - w(i + n - 1, i) - w(i, i + 1);
        for j in 0..n {
            // Reinsert between tour[j] and tour[j+1] (both != tour[i]).
            if j == i || (j + 1) % n == i {
                continue;
            }
            let insertion = w(j, i) + w(i, j + 1) - w(j, j + 1);
            if removal + insertion > 0 {
                let v = tour[i];
                let mut next: Vec<usize> = Vec::with_capacity(n);
                let mut k = (i + 1) % n;
                while k != i {
                    next.push(tour[k]);
                    if k == j {
                        next.push(v);
                    }
                    k = (k + 1) % n;
                }
                return Some(next);
            }
        }
    }
    None
}

/// First tour obtained by replacing two arcs and reversing the span between
/// them that strictly gains weight, if any. The reversed arcs change weight
/// too (the digraph is asymmetric), so the span contributes to the balance.
fn exchange_gain(g: &UnionDigraph, tour: &[usize]) -> Option<Vec<usize>> {
    let n = tour.len();
    let wt = |a: usize, b: usize| i64::from(g.weight(a, b));
    for i in 0..n.saturating_sub(1) {
        let mut span = 0i64;
        for j in i + 1..n {
            if j > i + 1 {
                // Arc tour[j-1] -> tour[j] flips when the span reverses.
                span += wt(tour[j], tour[j - 1]) - wt(tour[j - 1], tour[j]);
            }
            let before = wt(tour[i], tour[i + 1]) + wt(tour[j], tour[(j + 1) % n]);
            let after = wt(tour[i], tour[j]) + wt(tour[i + 1], tour[(j + 1) % n]);
            if after + span - before > 0 {
                let mut next = tour.to_vec();
                next[i + 1..=j].reverse();
                return Some(next);
            }
        }
    }
    None
}
