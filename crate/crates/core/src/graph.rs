//! Undirected simple graphs on dense vertex ids, plus the small set of
//! structural operations the rest of the crate is built on: connectivity,
//! block decomposition, edge contraction, and subgraph embedding search.

use std::collections::BTreeSet;
use std::fmt;

pub type Vertex = usize;

/// Largest pattern accepted by [`contains_subgraph`].
pub const MAX_PATTERN: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("no edge between {0} and {1}")]
    MissingEdge(usize, usize),
    #[error("pattern has {0} vertices; subgraph search accepts at most {MAX_PATTERN}")]
    PatternTooLarge(usize),
}

/// Simple undirected graph with vertices `0..n`. Adjacency is kept in sorted
/// sets so that every iteration order in the crate is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert_ne!(u, v, "self-loop at {u}");
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        if self.adj[u].remove(&v) {
            self.adj[v].remove(&u);
            self.m -= 1;
        }
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_count() == 1
    }

    /// Induced subgraph on `verts` (dense relabel, new id = index into
    /// `verts`). The returned map sends new ids back to the originals.
    /// `verts` must be duplicate-free.
    pub fn induced(&self, verts: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            assert_eq!(new_id[v], usize::MAX, "duplicate vertex {v} in induced()");
            new_id[v] = i;
        }
        let mut g = Graph::empty(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for w in self.neighbors(v) {
                if new_id[w] != usize::MAX && new_id[w] > i {
                    g.add_edge(i, new_id[w]);
                }
            }
        }
        (g, verts.to_vec())
    }

    /// Deletes one vertex; remaining vertices are relabeled densely keeping
    /// their relative order. Returns the new graph and the new-to-old map.
    pub fn remove_vertex(&self, v: Vertex) -> (Graph, Vec<Vertex>) {
        let keep: Vec<Vertex> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Number of vertices at distance exactly 1 or 2 from `v`.
    pub fn distance2_degree(&self, v: Vertex) -> usize {
        let mut reach: BTreeSet<Vertex> = BTreeSet::new();
        for u in self.neighbors(v) {
            reach.insert(u);
            for w in self.neighbors(u) {
                if w != v {
                    reach.insert(w);
                }
            }
        }
        reach.len()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m, self.edges())
    }
}

/// Result of contracting an edge `uv` onto `v`: `u` disappears, `v` absorbs
/// `u`'s neighbors, and the survivors are relabeled densely in id order.
pub struct Contraction {
    pub graph: Graph,
    /// `to_old[new_id] = old_id`; the merged vertex maps to the old `v`.
    pub to_old: Vec<Vertex>,
    /// New id of the merged vertex.
    pub merged: Vertex,
}

/// Contracts edge `uv` onto `v` (no parallel edges or loops survive).
pub fn contract_edge(g: &Graph, u: Vertex, v: Vertex) -> Result<Contraction, GraphError> {
    if u >= g.n() {
        return Err(GraphError::VertexOutOfRange(u, g.n()));
    }
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange(v, g.n()));
    }
    if !g.has_edge(u, v) {
        return Err(GraphError::MissingEdge(u, v));
    }
    let mut work = g.clone();
    let nbrs: Vec<Vertex> = work.neighbors(u).collect();
    for w in nbrs {
        work.remove_edge(u, w);
        if w != v {
            work.add_edge(v, w);
        }
    }
    let (graph, to_old) = work.remove_vertex(u);
    let merged = to_old.iter().position(|&o| o == v).expect("v survives");
    Ok(Contraction {
        graph,
        to_old,
        merged,
    })
}

/// Block decomposition (biconnected components). Isolated vertices form
/// singleton blocks; every edge lies in exactly one block.
pub struct BlockDecomposition {
    /// Sorted vertex lists, one per block.
    pub blocks: Vec<Vec<Vertex>>,
    pub cutvertices: BTreeSet<Vertex>,
}

impl BlockDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn cutvertices_in(&self, b: usize) -> Vec<Vertex> {
        self.blocks[b]
            .iter()
            .copied()
            .filter(|v| self.cutvertices.contains(v))
            .collect()
    }

    /// A leaf block contains at most one cutvertex.
    pub fn is_leaf_block(&self, b: usize) -> bool {
        self.cutvertices_in(b).len() <= 1
    }

    /// Indices of leaf blocks, sorted by their smallest vertex id.
    pub fn leaf_blocks(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.blocks.len())
            .filter(|&b| self.is_leaf_block(b))
            .collect();
        out.sort_by_key(|&b| self.blocks[b][0]);
        out
    }
}

/// True when the whole graph is one block on at least 3 vertices.
pub fn is_biconnected(g: &Graph) -> bool {
    if g.n() < 3 {
        return false;
    }
    let d = blocks(g);
    d.blocks.len() == 1 && d.blocks[0].len() == g.n()
}

/// Computes the block decomposition via depth-first search with an edge stack.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        estack: Vec<(Vertex, Vertex)>,
        blocks: Vec<Vec<Vertex>>,
        cut: BTreeSet<Vertex>,
    }

    fn dfs(st: &mut State, v: Vertex, parent: Option<Vertex>) {
        st.disc[v] = st.timer;
        st.low[v] = st.timer;
        st.timer += 1;
        let mut children = 0usize;
        let nbrs: Vec<Vertex> = st.g.neighbors(v).collect();
        for w in nbrs {
            if Some(w) == parent {
                continue;
            }
            if st.disc[w] == usize::MAX {
                children += 1;
                st.estack.push((v, w));
                dfs(st, w, Some(v));
                st.low[v] = st.low[v].min(st.low[w]);
                if st.low[w] >= st.disc[v] {
                    if parent.is_some() || children > 1 {
                        st.cut.insert(v);
                    }
                    // Pop the block's edges, ending with the tree edge (v, w).
                    let mut verts = BTreeSet::new();
                    loop {
                        let (a, b) = st.estack.pop().expect("edge stack underflow");
                        verts.insert(a);
                        verts.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    st.blocks.push(verts.into_iter().collect());
                }
            } else if st.disc[w] < st.disc[v] {
                st.estack.push((v, w));
                st.low[v] = st.low[v].min(st.disc[w]);
            }
        }
    }

    let n = g.n();
    let mut st = State {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        estack: Vec::new(),
        blocks: Vec::new(),
        cut: BTreeSet::new(),
    };
    for s in 0..n {
        if st.disc[s] != usize::MAX {
            continue;
        }
        if g.degree(s) == 0 {
            st.disc[s] = st.timer;
            st.timer += 1;
            st.blocks.push(vec![s]);
            continue;
        }
        dfs(&mut st, s, None);
        debug_assert!(st.estack.is_empty());
    }
    st.blocks.sort();
    BlockDecomposition {
        blocks: st.blocks,
        cutvertices: st.cut,
    }
}

/// Searches for an injective map `phi` from pattern vertices to host
/// vertices such that every pattern edge maps to a host edge (ordinary
/// subgraph containment, not induced). Returns the first embedding found
/// under a deterministic most-constrained-first search order.
pub fn contains_subgraph(
    host: &Graph,
    pattern: &Graph,
) -> Result<Option<Vec<Vertex>>, GraphError> {
    if pattern.n() > MAX_PATTERN {
        return Err(GraphError::PatternTooLarge(pattern.n()));
    }
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Ok(None);
    }
    if pattern.n() == 0 {
        return Ok(Some(Vec::new()));
    }

    // Place high-degree, well-connected pattern vertices first.
    let pn = pattern.n();
    let mut order: Vec<Vertex> = Vec::with_capacity(pn);
    let mut placed = vec![false; pn];
    for _ in 0..pn {
        let mut best: Option<(usize, usize, Vertex)> = None;
        for v in 0..pn {
            if placed[v] {
                continue;
            }
            let anchored = pattern.neighbors(v).filter(|&w| placed[w]).count();
            let key = (anchored, pattern.degree(v), v);
            match best {
                Some((a, d, b)) if (a, d) > (key.0, key.1) || ((a, d) == (key.0, key.1) && b < v) => {}
                _ => best = Some(key),
            }
        }
        let (_, _, v) = best.unwrap();
        placed[v] = true;
        order.push(v);
    }

    let mut phi = vec![usize::MAX; pn];
    let mut used = vec![false; host.n()];

    fn rec(
        host: &Graph,
        pattern: &Graph,
        order: &[Vertex],
        idx: usize,
        phi: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let p = order[idx];
        for c in 0..host.n() {
            if used[c] || host.degree(c) < pattern.degree(p) {
                continue;
            }
            let ok = pattern
                .neighbors(p)
                .filter(|&q| phi[q] != usize::MAX)
                .all(|q| host.has_edge(c, phi[q]));
            if !ok {
                continue;
            }
            phi[p] = c;
            used[c] = true;
            if rec(host, pattern, order, idx + 1, phi, used) {
                return true;
            }
            phi[p] = usize::MAX;
            used[c] = false;
        }
        false
    }

    if rec(host, pattern, &order, 0, &mut phi, &mut used) {
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}
