//! The two auxiliary graphs behind the solvers, and the conversions between
//! tours and packings.
//!
//! `G1` is a complete digraph whose arc `(i, j)` has weight 1 exactly when
//! charts `i` and `j` can share one cell in that order (a 1-union); maximum
//! tours in it correspond to good left-to-right packing orders. `G2` is an
//! undirected graph with an edge wherever two charts can share both cells
//! (a 2-union); matchings in it correspond to pairings.

use crate::error::{Error, Result};
use crate::model::{Instance, SequencePacking};

/// Complete 0/1-weighted digraph of 1-union feasibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionDigraph {
    n: usize,
    weight: Vec<u8>,
}

impl UnionDigraph {
    /// Build a digraph directly from its list of weight-1 arcs.
    ///
    /// Useful for exercising tour engines on graphs that no instance
    /// induces; [`build_g1`] is the constructor solvers use.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFew {
                what: "the 1-union digraph",
                needed: 2,
                got: n,
            });
        }
        let mut weight = vec![0u8; n * n];
        for &(i, j) in arcs {
            if i >= n || j >= n || i == j {
                return Err(Error::BadEdge { i, j, n });
            }
            weight[i * n + j] = 1;
        }
        Ok(UnionDigraph { n, weight })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arc weight for the ordered pair `(i, j)`; the diagonal is 0.
    pub fn weight(&self, i: usize, j: usize) -> u8 {
        self.weight[i * self.n + j]
    }

    /// Total weight of the closed tour, wrap-around arc included.
    pub fn tour_weight(&self, h: &HamCycle) -> usize {
        let t = h.tour();
        let mut w = 0usize;
        for k in 0..t.len() {
            w += usize::from(self.weight(t[k], t[(k + 1) % t.len()]));
        }
        w
    }
}

/// Undirected graph of 2-union feasibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionGraph {
    n: usize,
    adj: Vec<bool>,
}

impl UnionGraph {
    /// Build a graph directly from an edge list (undirected, loop-free).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFew {
                what: "the 2-union graph",
                needed: 2,
                got: n,
            });
        }
        let mut adj = vec![false; n * n];
        for &(i, j) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::BadEdge { i, j, n });
            }
            adj[i * n + j] = true;
            adj[j * n + i] = true;
        }
        Ok(UnionGraph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    /// All edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// A Hamiltonian cycle, stored as the vertex sequence of one traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamCycle {
    tour: Vec<usize>,
}

impl HamCycle {
    /// Wrap a vertex sequence, checking it is a permutation of `0..n`, n >= 2.
    pub fn new(tour: Vec<usize>) -> Result<Self> {
        let n = tour.len();
        if n < 2 {
            return Err(Error::TooFew {
                what: "a Hamiltonian cycle",
                needed: 2,
                got: n,
            });
        }
        let mut seen = vec![false; n];
        for &v in &tour {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(HamCycle { tour })
    }

    pub fn n(&self) -> usize {
        self.tour.len()
    }

    pub fn tour(&self) -> &[usize] {
        &self.tour
    }

    /// The same cycle rotated to begin at `tour[k]`.
    fn rotated(&self, k: usize) -> Vec<usize> {
        let mut t = Vec::with_capacity(self.tour.len());
        t.extend_from_slice(&self.tour[k..]);
        t.extend_from_slice(&self.tour[..k]);
        t
    }
}

/// Build the 1-union digraph: arc `(i, j)` has weight 1 iff `b_i + a_j`
/// fits the strip.
pub fn build_g1(instance: &Instance) -> Result<UnionDigraph> {
    let n = instance.n();
    if n < 2 {
        return Err(Error::TooFew {
            what: "the 1-union digraph",
            needed: 2,
            got: n,
        });
    }
    let mut weight = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j && instance.level_feasible(i, j, 1) {
                weight[i * n + j] = 1;
            }
        }
    }
    Ok(UnionDigraph { n, weight })
}

/// Build the 2-union graph: edge `{i, j}` iff both rows fit pairwise.
pub fn build_g2(instance: &Instance) -> Result<UnionGraph> {
    let n = instance.n();
    if n < 2 {
        return Err(Error::TooFew {
            what: "the 2-union graph",
            needed: 2,
            got: n,
        });
    }
    let mut adj = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j && instance.level_feasible(i, j, 2) {
                adj[i * n + j] = true;
            }
        }
    }
    Ok(UnionGraph { n, adj })
}

/// Read a packing's left-to-right order as a Hamiltonian cycle of `g`.
///
/// Only packings built from 0- and 1-unions convert; each used 1-union is a
/// weight-1 arc of the cycle, so the cycle weighs at least `k1`.
pub fn cycle_of_packing(p: &SequencePacking, g: &UnionDigraph) -> Result<HamCycle> {
    if p.n() != g.n() {
        return Err(Error::NotAPermutation);
    }
    if let Some(k) = p.overlaps().iter().position(|&t| t == 2) {
        return Err(Error::TwoUnionPresent { position: k });
    }
    HamCycle::new(p.order().to_vec())
}

/// Turn a tour of the 1-union digraph into a packing with `k1 =
/// min{w(h), n-1}`.
///
/// When some arc of the cycle has weight 0 the cycle is broken there, so
/// every weight-1 arc survives as a 1-union; when all `n` arcs have weight
/// 1 one of them must be sacrificed. Among the vertices whose incoming arc
/// has weight 0 the lowest chart index is chosen as the start, which makes
/// the conversion deterministic.
pub fn packing_of_cycle(
    h: &HamCycle,
    g: &UnionDigraph,
    instance: &Instance,
) -> Result<SequencePacking> {
    let n = instance.n();
    if h.n() != n || g.n() != n {
        return Err(Error::NotAPermutation);
    }
    let tour = h.tour();
    let start = if g.tour_weight(h) < n {
        (0..n)
            .filter(|&k| g.weight(tour[(k + n - 1) % n], tour[k]) == 0)
            .min_by_key(|&k| tour[k])
            .expect("a tour of weight below n has a zero-weight arc")
    } else {
        (0..n).min_by_key(|&k| tour[k]).expect("tour is nonempty")
    };
    let order = h.rotated(start);
    let overlaps = order.windows(2).map(|w| g.weight(w[0], w[1])).collect();
    SequencePacking::new(instance, order, overlaps)
}
