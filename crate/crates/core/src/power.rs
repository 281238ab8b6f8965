//! Square-graph construction, inductive orderings, greedy coloring, and the
//! exact oracles (chromatic number, clique number) used to certify the
//! square-coloring bounds. The exact solvers are budgeted: they either
//! return a provably optimal answer or fail loudly, never approximate.

use crate::graph::{Graph, Vertex};
use crate::outerplanar::is_outerplanar;

/// Square of a graph: same vertices, edges between all pairs at distance
/// 1 or 2.
pub fn square(g: &Graph) -> Graph {
    let mut sq = g.clone();
    for v in 0..g.n() {
        let nbrs: Vec<Vertex> = g.neighbors(v).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                sq.add_edge(a, b);
            }
        }
    }
    sq
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PowerError {
    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("vertex {vertex} has colors clashing with neighbor {neighbor}")]
    ColoringConflict { vertex: Vertex, neighbor: Vertex },
    #[error("vertex {0} is uncolored")]
    Uncolored(Vertex),
    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("graph too large for exact clique search: {n} vertices (limit 128)")]
    TooLarge { n: usize },
    #[error("clique witness requires an outerplanar graph")]
    NotOuterplanar,
}

/// Node budget for the exact solvers.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub node_limit: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 100_000_000,
        }
    }
}

impl SearchBudget {
    pub fn nodes(limit: u64) -> Self {
        SearchBudget { node_limit: limit }
    }
}

/// A vertex ordering together with its back-degrees: `back_degrees[i]`
/// counts neighbors of `order[i]` appearing later in the order. `k` is the
/// maximum back-degree, so the ordering certifies that the graph is
/// k-inductive (k-degenerate).
#[derive(Debug, Clone)]
pub struct InductiveOrdering {
    pub order: Vec<Vertex>,
    pub back_degrees: Vec<usize>,
    pub k: usize,
}

impl InductiveOrdering {
    /// Computes back-degrees for a given order, which must be a permutation
    /// of the vertex set.
    pub fn from_order(g: &Graph, order: Vec<Vertex>) -> Result<Self, PowerError> {
        let n = g.n();
        if order.len() != n {
            return Err(PowerError::NotAPermutation);
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(PowerError::NotAPermutation);
            }
            position[v] = i;
        }
        let back_degrees: Vec<usize> = order
            .iter()
            .enumerate()
            .map(|(i, &v)| g.neighbors(v).filter(|&w| position[w] > i).count())
            .collect();
        let k = back_degrees.iter().copied().max().unwrap_or(0);
        Ok(InductiveOrdering {
            order,
            back_degrees,
            k,
        })
    }

    pub fn validate(&self, g: &Graph) -> bool {
        match InductiveOrdering::from_order(g, self.order.clone()) {
            Ok(o) => o.back_degrees == self.back_degrees && o.k == self.k,
            Err(_) => false,
        }
    }
}

/// Degeneracy ordering: repeatedly removes a minimum-degree vertex (lowest
/// id on ties). The resulting `k` is the exact degeneracy.
pub fn degeneracy(g: &Graph) -> InductiveOrdering {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut back_degrees = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        order.push(v);
        back_degrees.push(deg[v]);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    let k = back_degrees.iter().copied().max().unwrap_or(0);
    InductiveOrdering {
        order,
        back_degrees,
        k,
    }
}

/// Proper vertex coloring with colors 1..=palette().
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn palette(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }
}

/// First-fit coloring processing vertices exactly in the given sequence.
/// Vertices outside the sequence stay uncolored (color 0).
pub fn first_fit_color(g: &Graph, seq: &[Vertex]) -> Coloring {
    let mut colors = vec![0usize; g.n()];
    for &v in seq {
        let mut taken: Vec<usize> = g
            .neighbors(v)
            .map(|w| colors[w])
            .filter(|&c| c != 0)
            .collect();
        taken.sort_unstable();
        let mut c = 1;
        for t in taken {
            if t == c {
                c += 1;
            } else if t > c {
                break;
            }
        }
        colors[v] = c;
    }
    Coloring { colors }
}

/// First-fit coloring in reverse order: the last vertex of the ordering is
/// colored first, so each vertex sees only its back-neighbors colored and
/// an ordering with max back-degree k uses at most k+1 colors.
pub fn greedy_color(g: &Graph, ordering: &InductiveOrdering) -> Coloring {
    let rev: Vec<Vertex> = ordering.order.iter().rev().copied().collect();
    first_fit_color(g, &rev)
}

pub fn validate_coloring(g: &Graph, coloring: &Coloring) -> Result<(), PowerError> {
    if coloring.colors.len() != g.n() {
        return Err(PowerError::NotAPermutation);
    }
    for v in 0..g.n() {
        if coloring.colors[v] == 0 {
            return Err(PowerError::Uncolored(v));
        }
        for w in g.neighbors(v) {
            if coloring.colors[v] == coloring.colors[w] {
                return Err(PowerError::ColoringConflict {
                    vertex: v,
                    neighbor: w,
                });
            }
        }
    }
    Ok(())
}

/// Greedy clique: grow from each start vertex, always adding the candidate
/// adjacent to everything chosen so far with maximum degree (lowest id on
/// ties). A cheap lower bound for the exact searches.
fn heuristic_clique(g: &Graph) -> Vec<Vertex> {
    let mut best: Vec<Vertex> = Vec::new();
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut cands: Vec<Vertex> = g.neighbors(start).collect();
        while !cands.is_empty() {
            let &v = cands
                .iter()
                .max_by_key(|&&v| (g.degree(v), usize::MAX - v))
                .unwrap();
            clique.push(v);
            cands.retain(|&w| w != v && g.has_edge(v, w));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// DSATUR first-fit: repeatedly colors the uncolored vertex with the most
/// distinctly-colored neighbors (lowest id on ties).
fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| {
                let sat = g
                    .neighbors(v)
                    .map(|w| colors[w])
                    .filter(|&c| c != 0)
                    .collect::<std::collections::BTreeSet<_>>()
                    .len();
                (sat, usize::MAX - v)
            })
            .unwrap();
        let taken: std::collections::BTreeSet<usize> =
            g.neighbors(v).map(|w| colors[w]).filter(|&c| c != 0).collect();
        let c = (1..).find(|c| !taken.contains(c)).unwrap();
        colors[v] = c;
    }
    Coloring { colors }
}

struct ColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl ColorSearch<'_> {
    fn run(&mut self, colored: usize, max_used: usize) -> Result<bool, PowerError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(PowerError::BudgetExceeded { limit: self.limit });
        }
        if colored == self.g.n() {
            return Ok(true);
        }
        // Most saturated uncolored vertex, lowest id on ties.
        let v = (0..self.g.n())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| {
                let sat = self
                    .g
                    .neighbors(v)
                    .map(|w| self.colors[w])
                    .filter(|&c| c != 0)
                    .collect::<std::collections::BTreeSet<_>>()
                    .len();
                (sat, usize::MAX - v)
            })
            .unwrap();
        let taken: std::collections::BTreeSet<usize> = self
            .g
            .neighbors(v)
            .map(|w| self.colors[w])
            .filter(|&c| c != 0)
            .collect();
        // Trying more than one fresh color only relabels colors.
        let cap = self.k.min(max_used + 1);
        for c in 1..=cap {
            if taken.contains(&c) {
                continue;
            }
            self.colors[v] = c;
            if self.run(colored + 1, max_used.max(c))? {
                return Ok(true);
            }
            self.colors[v] = 0;
        }
        Ok(false)
    }
}

/// Exact chromatic number with an optimal coloring witness: DSATUR upper
/// bound, greedy-clique lower bound, then budgeted branch-and-bound per
/// candidate k.
pub fn exact_chromatic(g: &Graph, budget: SearchBudget) -> Result<(usize, Coloring), PowerError> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring { colors: Vec::new() }));
    }
    let lb = heuristic_clique(g).len().max(1);
    let ub_coloring = dsatur_greedy(g);
    let ub = ub_coloring.palette();
    debug_assert!(validate_coloring(g, &ub_coloring).is_ok());
    let mut nodes_used = 0u64;
    for k in lb..ub {
        let mut search = ColorSearch {
            g,
            k,
            colors: vec![0; n],
            nodes: nodes_used,
            limit: budget.node_limit,
        };
        if search.run(0, 0)? {
            let coloring = Coloring {
                colors: search.colors,
            };
            debug_assert!(validate_coloring(g, &coloring).is_ok());
            return Ok((k, coloring));
        }
        nodes_used = search.nodes;
    }
    Ok((ub, ub_coloring))
}

struct CliqueSearch<'a> {
    adj: &'a [u128],
    best: u128,
    best_size: u32,
    nodes: u64,
    limit: u64,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, r: u128, rsize: u32, p: u128) -> Result<(), PowerError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(PowerError::BudgetExceeded { limit: self.limit });
        }
        if p == 0 {
            if rsize > self.best_size {
                self.best = r;
                self.best_size = rsize;
            }
            return Ok(());
        }
        if rsize + p.count_ones() <= self.best_size {
            return Ok(());
        }
        // Pivot on the candidate covering most of P.
        let mut pivot = 0usize;
        let mut pivot_cover = u32::MAX;
        let mut t = p;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            t &= t - 1;
            let missed = (p & !self.adj[v]).count_ones();
            if pivot_cover == u32::MAX || missed < pivot_cover {
                pivot_cover = missed;
                pivot = v;
            }
        }
        let mut cand = p & !self.adj[pivot];
        let mut p = p;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let bit = 1u128 << v;
            cand &= cand - 1;
            self.expand(r | bit, rsize + 1, p & self.adj[v])?;
            p &= !bit;
        }
        Ok(())
    }
}

/// Exact maximum clique (size and witness) via pivoting branch-and-bound.
pub fn exact_clique(g: &Graph, budget: SearchBudget) -> Result<(usize, Vec<Vertex>), PowerError> {
    let n = g.n();
    if n > 128 {
        return Err(PowerError::TooLarge { n });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let adj: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).fold(0u128, |m, w| m | (1u128 << w)))
        .collect();
    let seed = heuristic_clique(g);
    let seed_mask = seed.iter().fold(0u128, |m, &v| m | (1u128 << v));
    let mut search = CliqueSearch {
        adj: &adj,
        best: seed_mask,
        best_size: seed.len() as u32,
        nodes: 0,
        limit: budget.node_limit,
    };
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    search.expand(0, 0, full)?;
    let witness: Vec<Vertex> = (0..n).filter(|&v| search.best >> v & 1 == 1).collect();
    Ok((search.best_size as usize, witness))
}

/// Clique witness for an outerplanar square.
#[derive(Debug, Clone)]
pub struct SquareClique {
    pub size: usize,
    pub witness: Vec<Vertex>,
    /// True when the witness is the closed neighborhood of a max-degree
    /// vertex rather than the result of a search.
    pub structural: bool,
}

/// Clique number of G^2 for outerplanar G. With max degree >= 6 the closed
/// neighborhood of a maximum-degree vertex is a maximum clique of the
/// square; below that the exact search runs on the square.
pub fn clique_outerplanar_square(
    g: &Graph,
    budget: SearchBudget,
) -> Result<SquareClique, PowerError> {
    if !is_outerplanar(g) {
        return Err(PowerError::NotOuterplanar);
    }
    let delta = g.max_degree();
    if delta >= 6 {
        let v = (0..g.n()).find(|&v| g.degree(v) == delta).unwrap();
        let mut witness: Vec<Vertex> = g.neighbors(v).collect();
        witness.push(v);
        witness.sort_unstable();
        let sq = square(g);
        for (i, &a) in witness.iter().enumerate() {
            for &b in &witness[i + 1..] {
                assert!(sq.has_edge(a, b), "closed neighborhood not a clique in square");
            }
        }
        return Ok(SquareClique {
            size: delta + 1,
            witness,
            structural: true,
        });
    }
    let (size, witness) = exact_clique(&square(g), budget)?;
    Ok(SquareClique {
        size,
        witness,
        structural: false,
    })
}

/// Bounds on the choosability (list chromatic number) of any graph:
/// chromatic number from below, degeneracy + 1 from above.
pub fn choosability_bounds(h: &Graph, budget: SearchBudget) -> Result<(usize, usize), PowerError> {
    let (chi, _) = exact_chromatic(h, budget)?;
    let ind = degeneracy(h).k;
    debug_assert!(chi <= ind + 1);
    Ok((chi, ind + 1))
}
