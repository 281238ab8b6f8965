//! Outerplanarity recognition with certificates, outer embeddings, bounded
//! faces, and weak dual trees with the pruning / strongly-simplicial
//! machinery used by the ordering engine.
//!
//! Recognition works per block by repeatedly removing a degree-2 vertex
//! (recording its outer-cycle neighbors and adding a virtual edge between
//! them) down to a triangle, then unwinding the trace to rebuild the outer
//! cycle. The rebuilt certificate is validated from scratch: real cycle
//! edges, non-crossing chords, full edge partition. An input is accepted
//! exactly when a valid certificate comes out.

use crate::graph::{blocks, BlockDecomposition, Graph, Vertex};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotOuterplanar {
    #[error("block containing vertex {min_vertex}: {m} edges on {n} vertices exceeds 2n-3")]
    TooManyEdges { min_vertex: Vertex, n: usize, m: usize },
    #[error("block containing vertex {min_vertex}: degree-2 reduction got stuck")]
    ReductionStuck { min_vertex: Vertex },
    #[error("block containing vertex {min_vertex}: recovered cycle fails certificate validation")]
    EmbeddingInvalid { min_vertex: Vertex },
}

/// Outer embedding of one biconnected block (local dense vertex ids).
#[derive(Debug, Clone)]
pub struct OuterEmbedding {
    /// The unique Hamiltonian outer cycle, rotated to start at vertex 0 and
    /// oriented so the second entry is 0's smaller cycle-neighbor.
    pub outer_cycle: Vec<Vertex>,
    /// Edges not on the outer cycle, as (min, max), sorted.
    pub chords: Vec<(Vertex, Vertex)>,
    /// Position of each vertex on the outer cycle.
    pub pos: Vec<usize>,
}

impl OuterEmbedding {
    pub fn n(&self) -> usize {
        self.outer_cycle.len()
    }

    /// Outer-cycle edges as normalized pairs.
    pub fn cycle_edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.n();
        (0..n)
            .map(|i| {
                let u = self.outer_cycle[i];
                let v = self.outer_cycle[(i + 1) % n];
                (u.min(v), u.max(v))
            })
            .collect()
    }
}

/// Computes the outer embedding of a biconnected outerplanar graph with at
/// least 3 vertices. Fails with a reduction or validation error otherwise.
pub fn outer_embedding(b: &Graph) -> Result<OuterEmbedding, NotOuterplanar> {
    let n = b.n();
    let stuck = NotOuterplanar::ReductionStuck { min_vertex: 0 };
    let invalid = NotOuterplanar::EmbeddingInvalid { min_vertex: 0 };
    if n < 3 {
        return Err(stuck);
    }

    // Peel degree-2 vertices, lowest id first, down to three vertices.
    let mut work = b.clone();
    let mut alive: Vec<bool> = vec![true; n];
    let mut alive_count = n;
    let mut trace: Vec<(Vertex, Vertex, Vertex)> = Vec::new();
    while alive_count > 3 {
        let v = (0..n)
            .find(|&v| alive[v] && work.degree(v) == 2)
            .ok_or(stuck.clone())?;
        let nbrs: Vec<Vertex> = work.neighbors(v).collect();
        let (u, w) = (nbrs[0], nbrs[1]);
        work.remove_edge(v, u);
        work.remove_edge(v, w);
        work.add_edge(u, w);
        alive[v] = false;
        alive_count -= 1;
        trace.push((v, u, w));
    }
    let rem: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    if !(work.has_edge(rem[0], rem[1]) && work.has_edge(rem[1], rem[2]) && work.has_edge(rem[0], rem[2]))
    {
        return Err(stuck);
    }

    // Unwind: re-insert each vertex between its recorded neighbors, which
    // must be consecutive on the cycle built so far.
    let mut cyc: Vec<Vertex> = rem;
    for &(v, u, w) in trace.iter().rev() {
        let len = cyc.len();
        let slot = (0..len).find(|&i| {
            let a = cyc[i];
            let b2 = cyc[(i + 1) % len];
            (a, b2) == (u, w) || (a, b2) == (w, u)
        });
        match slot {
            Some(i) => cyc.insert(i + 1, v),
            None => return Err(invalid),
        }
    }

    // Validate the certificate against the original graph.
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cyc.iter().enumerate() {
        pos[v] = i;
    }
    let mut cycle_edges = BTreeSet::new();
    for i in 0..n {
        let u = cyc[i];
        let v = cyc[(i + 1) % n];
        if !b.has_edge(u, v) {
            return Err(invalid);
        }
        cycle_edges.insert((u.min(v), u.max(v)));
    }
    if cycle_edges.len() != n {
        return Err(invalid);
    }
    let chords: Vec<(Vertex, Vertex)> = b
        .edges()
        .into_iter()
        .filter(|e| !cycle_edges.contains(e))
        .collect();
    // Chords must be pairwise non-crossing as intervals of the cyclic order.
    let ivals: Vec<(usize, usize)> = chords
        .iter()
        .map(|&(u, v)| {
            let (a, b2) = (pos[u], pos[v]);
            (a.min(b2), a.max(b2))
        })
        .collect();
    for (i, &(a, b2)) in ivals.iter().enumerate() {
        for &(c, d) in &ivals[i + 1..] {
            let crossing = (a < c && c < b2 && b2 < d) || (c < a && a < d && d < b2);
            if crossing {
                return Err(invalid);
            }
        }
    }

    // Canonical rotation/orientation: start at vertex 0, head to its smaller
    // cycle-neighbor.
    let zero = pos[0];
    let next = cyc[(zero + 1) % n];
    let prev = cyc[(zero + n - 1) % n];
    let mut canon: Vec<Vertex> = Vec::with_capacity(n);
    if next <= prev {
        for i in 0..n {
            canon.push(cyc[(zero + i) % n]);
        }
    } else {
        for i in 0..n {
            canon.push(cyc[(zero + n - i) % n]);
        }
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in canon.iter().enumerate() {
        pos[v] = i;
    }
    Ok(OuterEmbedding {
        outer_cycle: canon,
        chords,
        pos,
    })
}

/// A bounded face of an embedded block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Boundary vertices in cyclic order (ascending outer-cycle position).
    pub boundary: Vec<Vertex>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.boundary.contains(&v)
    }

    /// Boundary edges as normalized pairs.
    pub fn boundary_edges(&self) -> Vec<(Vertex, Vertex)> {
        let k = self.boundary.len();
        (0..k)
            .map(|i| {
                let u = self.boundary[i];
                let v = self.boundary[(i + 1) % k];
                (u.min(v), u.max(v))
            })
            .collect()
    }
}

/// Bounded faces of an embedded block, found by a stack scan over the outer
/// cycle that closes a face at each chord. Face ids are 0.. in scan order.
pub fn faces(b: &Graph, emb: &OuterEmbedding) -> Vec<Face> {
    let n = emb.n();
    // Chords keyed by their higher cycle position, processed innermost first.
    let mut ending_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in &emb.chords {
        let (a, c) = (emb.pos[u].min(emb.pos[v]), emb.pos[u].max(emb.pos[v]));
        ending_at[c].push(a);
    }
    for list in ending_at.iter_mut() {
        list.sort_unstable_by(|x, y| y.cmp(x));
    }
    let mut out: Vec<Face> = Vec::new();
    let mut stack: Vec<usize> = vec![0];
    for p in 1..n {
        for &a in &ending_at[p] {
            let mut popped = Vec::new();
            while *stack.last().expect("chord start on stack") != a {
                popped.push(stack.pop().unwrap());
            }
            popped.reverse();
            let mut boundary = vec![a];
            boundary.extend(popped);
            boundary.push(p);
            out.push(Face {
                id: out.len(),
                boundary: boundary.iter().map(|&q| emb.outer_cycle[q]).collect(),
            });
        }
        stack.push(p);
    }
    out.push(Face {
        id: out.len(),
        boundary: stack.iter().map(|&q| emb.outer_cycle[q]).collect(),
    });
    debug_assert_eq!(out.len(), b.m() - n + 1);
    debug_assert!(out.iter().all(|f| f.len() >= 3));
    out
}

/// Weak dual tree of one block, with faces stated in global vertex ids.
/// Face ids are global across the whole graph's forest. An empty tree (no
/// bounded faces) is the sentinel for trivial blocks and fully pruned trees.
#[derive(Debug, Clone)]
pub struct DualTree {
    pub faces: Vec<Face>,
    /// Node adjacency (indices into `faces`), sorted.
    pub adj: Vec<Vec<usize>>,
    /// Chord shared by two adjacent nodes, keyed by (min, max) node pair.
    shared: BTreeMap<(usize, usize), (Vertex, Vertex)>,
    /// Outer-cycle edges of this block (global, normalized).
    pub outer_edges: BTreeSet<(Vertex, Vertex)>,
    pub root: Option<usize>,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub depth: Vec<usize>,
}

impl DualTree {
    pub fn empty() -> Self {
        DualTree {
            faces: Vec::new(),
            adj: Vec::new(),
            shared: BTreeMap::new(),
            outer_edges: BTreeSet::new(),
            root: None,
            parent: Vec::new(),
            children: Vec::new(),
            depth: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn node_of_face(&self, face_id: usize) -> Option<usize> {
        self.faces.iter().position(|f| f.id == face_id)
    }

    /// Chord separating two adjacent nodes.
    pub fn shared_edge(&self, x: usize, y: usize) -> Option<(Vertex, Vertex)> {
        self.shared.get(&(x.min(y), x.max(y))).copied()
    }

    /// Degree-≤1 nodes of the unrooted tree.
    pub fn unrooted_leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.adj[v].len() <= 1).collect()
    }

    /// Height of a node: longest downward path in its rooted subtree.
    pub fn height(&self, node: usize) -> usize {
        let mut h = 0;
        let mut stack = vec![(node, 0usize)];
        while let Some((v, d)) = stack.pop() {
            h = h.max(d);
            for &c in &self.children[v] {
                stack.push((c, d + 1));
            }
        }
        h
    }

    fn bfs_dist(&self, s: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.len()];
        d[s] = 0;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &self.adj[v] {
                if d[w] == usize::MAX {
                    d[w] = d[v] + 1;
                    q.push_back(w);
                }
            }
        }
        d
    }

    /// Number of edges on the longest path.
    pub fn diameter(&self) -> usize {
        if self.len() <= 1 {
            return 0;
        }
        let d0 = self.bfs_dist(0);
        let a = (0..self.len()).max_by_key(|&v| (d0[v], usize::MAX - v)).unwrap();
        let da = self.bfs_dist(a);
        da.iter().copied().max().unwrap()
    }

    /// Nodes with eccentricity at most ceil(diam/2): one node or two
    /// adjacent ones.
    pub fn center(&self) -> Vec<usize> {
        if self.is_empty() {
            return Vec::new();
        }
        let n = self.len();
        let mut ecc = vec![0usize; n];
        for v in 0..n {
            ecc[v] = self.bfs_dist(v).into_iter().max().unwrap();
        }
        let diam = ecc.iter().copied().max().unwrap();
        let bound = diam.div_ceil(2);
        (0..n).filter(|&v| ecc[v] <= bound).collect()
    }

    /// Rebuilds the tree on a subset of nodes (which must stay connected),
    /// keeping face identities. `root_hint` is the old root if it survives.
    fn rebuild(&self, keep: &[usize], root_hint: Option<usize>) -> DualTree {
        if keep.is_empty() {
            let mut t = DualTree::empty();
            t.outer_edges = self.outer_edges.clone();
            return t;
        }
        let mut new_id = BTreeMap::new();
        for (i, &v) in keep.iter().enumerate() {
            new_id.insert(v, i);
        }
        let faces: Vec<Face> = keep.iter().map(|&v| self.faces[v].clone()).collect();
        let mut adj = vec![Vec::new(); keep.len()];
        let mut shared = BTreeMap::new();
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(&j) = new_id.get(&w) {
                    adj[i].push(j);
                    if i < j {
                        if let Some(e) = self.shared_edge(v, w) {
                            shared.insert((i, j), e);
                        }
                    }
                }
            }
        }
        let root = root_hint
            .and_then(|r| new_id.get(&r).copied())
            .unwrap_or_else(|| {
                (0..faces.len()).min_by_key(|&i| faces[i].id).unwrap()
            });
        let mut t = DualTree {
            faces,
            adj,
            shared,
            outer_edges: self.outer_edges.clone(),
            root: Some(root),
            parent: Vec::new(),
            children: Vec::new(),
            depth: Vec::new(),
        };
        t.root_at(root);
        t
    }

    fn root_at(&mut self, root: usize) {
        let n = self.len();
        self.root = Some(root);
        self.parent = vec![None; n];
        self.children = vec![Vec::new(); n];
        self.depth = vec![0; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut q = std::collections::VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    self.parent[w] = Some(v);
                    self.children[v].push(w);
                    self.depth[w] = self.depth[v] + 1;
                    q.push_back(w);
                }
            }
        }
        debug_assert!(seen.iter().all(|&s| s), "dual tree not connected");
    }

    /// Same tree rooted elsewhere.
    pub fn rerooted(&self, new_root: usize) -> DualTree {
        let mut t = self.clone();
        t.root_at(new_root);
        t
    }

    /// Removes every leaf of the unrooted tree (single node -> empty).
    pub fn prune(&self) -> DualTree {
        let keep: Vec<usize> = (0..self.len()).filter(|&v| self.adj[v].len() >= 2).collect();
        self.rebuild(&keep, self.root)
    }

    /// Removes every childless node of the rooted tree; the root survives
    /// unless it is the only node.
    fn prune_rooted(&self) -> DualTree {
        if self.len() <= 1 {
            let mut t = DualTree::empty();
            t.outer_edges = self.outer_edges.clone();
            return t;
        }
        let keep: Vec<usize> = (0..self.len())
            .filter(|&v| !self.children[v].is_empty())
            .collect();
        self.rebuild(&keep, self.root)
    }

    /// Strongly-simplicial level of a node, with parent/grandparent handles.
    pub fn ss_level(&self, node: usize) -> SsInfo {
        let parent = self.parent[node];
        let grandparent = parent.and_then(|p| self.parent[p]);
        if self.len() == 1 {
            return SsInfo {
                level: SsLevel::Unbounded,
                parent,
                grandparent,
            };
        }
        if !self.children[node].is_empty() {
            return SsInfo {
                level: SsLevel::NotLeaf,
                parent,
                grandparent,
            };
        }
        // Walk ancestors: the j-th ancestor must be childless in pr^j.
        let mut level = 0usize;
        let mut cur = self.clone();
        let mut at = node;
        loop {
            let Some(p) = cur.parent[at] else { break };
            let p_face = cur.faces[p].id;
            let pruned = cur.prune_rooted();
            let Some(p_new) = pruned.node_of_face(p_face) else { break };
            if !pruned.children[p_new].is_empty() {
                break;
            }
            level += 1;
            cur = pruned;
            at = p_new;
        }
        SsInfo {
            level: SsLevel::Level(level),
            parent,
            grandparent,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsLevel {
    /// The node has children, so it is not i-ss for any i.
    NotLeaf,
    /// Maximum i such that the node is i-ss.
    Level(usize),
    /// Isolated face: i-ss for every i.
    Unbounded,
}

impl SsLevel {
    pub fn at_least(&self, i: usize) -> bool {
        match self {
            SsLevel::NotLeaf => false,
            SsLevel::Level(l) => *l >= i,
            SsLevel::Unbounded => true,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SsInfo {
    pub level: SsLevel,
    pub parent: Option<usize>,
    pub grandparent: Option<usize>,
}

/// One block of the certificate: global vertex list, the block-local graph,
/// and (for blocks with at least 3 vertices) its outer embedding.
#[derive(Debug, Clone)]
pub struct BlockView {
    /// Sorted global vertex ids; local id = index.
    pub vertices: Vec<Vertex>,
    pub graph: Graph,
    pub embedding: Option<OuterEmbedding>,
}

pub struct OuterplanarCertificate {
    pub decomposition: BlockDecomposition,
    /// Parallel to `decomposition.blocks`.
    pub blocks: Vec<BlockView>,
}

/// Recognizes outerplanarity and returns per-block embedding certificates.
pub fn check_outerplanar(g: &Graph) -> Result<OuterplanarCertificate, NotOuterplanar> {
    let decomposition = blocks(g);
    let mut views = Vec::with_capacity(decomposition.blocks.len());
    for verts in &decomposition.blocks {
        let (bg, _) = g.induced(verts);
        let embedding = if bg.n() < 3 {
            None
        } else {
            if bg.m() > 2 * bg.n() - 3 {
                return Err(NotOuterplanar::TooManyEdges {
                    min_vertex: verts[0],
                    n: bg.n(),
                    m: bg.m(),
                });
            }
            Some(outer_embedding(&bg).map_err(|e| match e {
                NotOuterplanar::ReductionStuck { .. } => NotOuterplanar::ReductionStuck {
                    min_vertex: verts[0],
                },
                _ => NotOuterplanar::EmbeddingInvalid {
                    min_vertex: verts[0],
                },
            })?)
        };
        views.push(BlockView {
            vertices: verts.clone(),
            graph: bg,
            embedding,
        });
    }
    Ok(OuterplanarCertificate {
        decomposition,
        blocks: views,
    })
}

pub fn is_outerplanar(g: &Graph) -> bool {
    check_outerplanar(g).is_ok()
}

/// Full structural view: certificate plus one rooted weak dual per block.
pub struct OuterStructure {
    pub cert: OuterplanarCertificate,
    /// Parallel to `cert.blocks`; empty trees for trivial blocks.
    pub duals: Vec<DualTree>,
}

/// Builds the certificate and the rooted weak dual forest.
pub fn analyze(g: &Graph) -> Result<OuterStructure, NotOuterplanar> {
    let cert = check_outerplanar(g)?;
    let mut duals = Vec::with_capacity(cert.blocks.len());
    let mut face_id_base = 0usize;
    for bv in &cert.blocks {
        let tree = match &bv.embedding {
            None => DualTree::empty(),
            Some(emb) => {
                let cuts = bv
                    .vertices
                    .iter()
                    .copied()
                    .filter(|v| cert.decomposition.cutvertices.contains(v))
                    .collect::<Vec<_>>();
                build_dual(&bv.graph, emb, &bv.vertices, face_id_base, cuts.first().copied())
            }
        };
        face_id_base += tree.len();
        duals.push(tree);
    }
    Ok(OuterStructure { cert, duals })
}

/// Weak dual forest of an outerplanar graph, one rooted tree per block.
pub fn weak_dual(g: &Graph) -> Result<Vec<DualTree>, NotOuterplanar> {
    Ok(analyze(g)?.duals)
}

/// Edges on the infinite face, globally: bridges plus every block's outer
/// cycle.
pub fn infinite_face_edges(s: &OuterStructure) -> BTreeSet<(Vertex, Vertex)> {
    let mut out = BTreeSet::new();
    for bv in &s.cert.blocks {
        match &bv.embedding {
            None => {
                for (u, v) in bv.graph.edges() {
                    let (gu, gv) = (bv.vertices[u], bv.vertices[v]);
                    out.insert((gu.min(gv), gu.max(gv)));
                }
            }
            Some(emb) => {
                for (u, v) in emb.cycle_edges() {
                    let (gu, gv) = (bv.vertices[u], bv.vertices[v]);
                    out.insert((gu.min(gv), gu.max(gv)));
                }
            }
        }
    }
    out
}

/// Constructs the rooted dual of one embedded block, translated to global
/// vertex ids. Rooting: blocks without a cutvertex root at the
/// eccentricity-maximal face (lowest face id on ties); blocks with
/// cutvertices root at the lowest-id face whose boundary carries an
/// outer-cycle edge incident to the lowest cutvertex.
fn build_dual(
    bg: &Graph,
    emb: &OuterEmbedding,
    to_global: &[Vertex],
    face_id_base: usize,
    lowest_cut_global: Option<Vertex>,
) -> DualTree {
    let local_faces = faces(bg, emb);
    let nf = local_faces.len();
    let global_faces: Vec<Face> = local_faces
        .iter()
        .map(|f| Face {
            id: face_id_base + f.id,
            boundary: f.boundary.iter().map(|&v| to_global[v]).collect(),
        })
        .collect();

    // Chord -> the (exactly two) faces it borders.
    let cycle_edges: BTreeSet<(Vertex, Vertex)> = emb.cycle_edges().into_iter().collect();
    let mut chord_faces: BTreeMap<(Vertex, Vertex), Vec<usize>> = BTreeMap::new();
    for (i, f) in local_faces.iter().enumerate() {
        for e in f.boundary_edges() {
            if !cycle_edges.contains(&e) {
                chord_faces.entry(e).or_default().push(i);
            }
        }
    }
    let mut adj = vec![Vec::new(); nf];
    let mut shared = BTreeMap::new();
    for (e, fs) in &chord_faces {
        assert_eq!(fs.len(), 2, "chord {e:?} must border exactly two faces");
        let (x, y) = (fs[0].min(fs[1]), fs[0].max(fs[1]));
        adj[x].push(y);
        adj[y].push(x);
        let ge = (to_global[e.0], to_global[e.1]);
        shared.insert((x, y), (ge.0.min(ge.1), ge.0.max(ge.1)));
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }
    let outer_edges: BTreeSet<(Vertex, Vertex)> = cycle_edges
        .iter()
        .map(|&(u, v)| {
            let (gu, gv) = (to_global[u], to_global[v]);
            (gu.min(gv), gu.max(gv))
        })
        .collect();

    let mut tree = DualTree {
        faces: global_faces,
        adj,
        shared,
        outer_edges,
        root: None,
        parent: Vec::new(),
        children: Vec::new(),
        depth: Vec::new(),
    };

    let root = match lowest_cut_global {
        None => {
            let mut best: Option<(usize, usize)> = None; // (ecc, node)
            for v in 0..nf {
                let ecc = tree.bfs_dist(v).into_iter().max().unwrap();
                let better = match best {
                    None => true,
                    Some((be, bv)) => ecc > be || (ecc == be && tree.faces[v].id < tree.faces[bv].id),
                };
                if better {
                    best = Some((ecc, v));
                }
            }
            best.unwrap().1
        }
        Some(cut) => {
            // The two outer-cycle edges at the cutvertex (global).
            let n = emb.n();
            let local_cut = to_global.iter().position(|&v| v == cut).expect("cut in block");
            let p = emb.pos[local_cut];
            let at_cut: Vec<(Vertex, Vertex)> = [
                (emb.outer_cycle[(p + n - 1) % n], local_cut),
                (local_cut, emb.outer_cycle[(p + 1) % n]),
            ]
            .iter()
            .map(|&(u, v)| {
                let (gu, gv) = (to_global[u], to_global[v]);
                (gu.min(gv), gu.max(gv))
            })
            .collect();
            (0..nf)
                .filter(|&v| {
                    let edges = tree.faces[v].boundary_edges();
                    at_cut.iter().any(|e| edges.contains(e))
                })
                .min_by_key(|&v| tree.faces[v].id)
                .expect("some face carries an outer edge at the cutvertex")
        }
    };
    tree.root_at(root);
    tree
}
