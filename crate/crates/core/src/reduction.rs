//! Inductive orderings for squares of outerplanar graphs.
//!
//! The engine repeatedly finds a vertex `u` with degree at most 2 whose
//! distance-2 degree is small, appends it to the ordering, and contracts
//! `u` into one of its neighbors. Contracting instead of deleting is what
//! makes the order inductive for the square: every square-edge among the
//! surviving vertices is still a square-edge after the merge, so the bound
//! certified for `u` holds against the original square.
//!
//! How such a vertex is found depends on the maximum degree of the current
//! graph. Up to degree 4 a direct scan suffices. From degree 5 on, the
//! engine walks the weak dual of a leaf block: blocks whose dual has
//! diameter at most 2 fall to a short case split ([`simple_leaf_block_vertex`]),
//! all others to a flowchart over the deepest leaf face, its parent, and
//! its grandparent ([`classify_delta5`], [`classify_delta7`]). Every branch
//! ends in the same literal check on the actual graph; the letters only
//! say which structural case produced the candidate.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{contract_edge, Graph, Vertex};
use crate::outerplanar::{analyze, check_outerplanar, DualTree, NotOuterplanar};
use crate::power::{square, InductiveOrdering, PowerError};

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Outerplanarity(#[from] NotOuterplanar),
    #[error("block is simple (weak dual diameter {diameter}), handled by the leaf-block scan")]
    SimpleBlock { diameter: usize },
    #[error("leaf-block scan applies from maximum degree 5 up, got {delta}")]
    DegreeTooLow { delta: usize },
    #[error("no reduction case matched on {n} vertices at maximum degree {delta}")]
    FlowchartExhausted { n: usize, delta: usize },
    #[error("no vertex of degree <= 2 has distance-2 degree <= {bound} (maximum degree {delta})")]
    NoKVertex { bound: usize, delta: usize },
    #[error(transparent)]
    Ordering(#[from] PowerError),
}

/// A vertex checked to have degree at most 2 and at most `k` vertices
/// within distance 2, in the graph it was found in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KVertexWitness {
    pub vertex: Vertex,
    pub degree: usize,
    pub dist2_degree: usize,
    /// Bound the witness was checked against; `dist2_degree <= k` holds.
    pub k: usize,
}

/// Qualifying vertex with the least (distance-2 degree, id), if any.
pub fn find_k_vertex(g: &Graph, k: usize) -> Option<KVertexWitness> {
    best_witness(g, g.vertices(), k)
}

fn best_witness(
    g: &Graph,
    candidates: impl IntoIterator<Item = Vertex>,
    k: usize,
) -> Option<KVertexWitness> {
    candidates
        .into_iter()
        .filter(|&v| g.degree(v) <= 2)
        .map(|v| (g.distance2_degree(v), v))
        .filter(|&(d2, _)| d2 <= k)
        .min()
        .map(|(d2, v)| KVertexWitness {
            vertex: v,
            degree: g.degree(v),
            dist2_degree: d2,
            k,
        })
}

/// Structural case that produced a reduction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    SimpleBlock,
}

impl ConfigLabel {
    /// Distance-2 degree bound the case promises, given the maximum degree
    /// of the graph it fired in.
    pub fn promised_k(self, delta: usize) -> usize {
        match self {
            ConfigLabel::A => 4,
            ConfigLabel::B => 5,
            ConfigLabel::C | ConfigLabel::G => 6,
            ConfigLabel::E | ConfigLabel::F | ConfigLabel::J => 7,
            ConfigLabel::I => delta,
            ConfigLabel::D | ConfigLabel::H => delta + 1,
            ConfigLabel::SimpleBlock => {
                if delta >= 6 {
                    delta
                } else {
                    delta + 1
                }
            }
        }
    }
}

impl fmt::Display for ConfigLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigLabel::SimpleBlock => write!(f, "simple-block"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// Matched flowchart case: the leaf face and parent it fired on, the bound
/// the case promises, and the checked witness.
#[derive(Debug, Clone, Copy)]
pub struct ConfigurationLabel {
    pub label: ConfigLabel,
    /// Global face id of the deepest leaf face, when the case came out of
    /// the flowchart rather than the leaf-block scan.
    pub face: Option<usize>,
    /// Global face id of its parent.
    pub parent: Option<usize>,
    pub promised_k: usize,
    pub witness: KVertexWitness,
}

/// Deepest-leaf selection in one block's rooted weak dual: the leaf `f`,
/// its parent and grandparent, the chord `ab` between parent and
/// grandparent, and an edge `e` whose two endpoints separate the
/// grandparent's region from the rest of the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoodFace {
    pub f: usize,
    pub f_prime: usize,
    pub f_dprime: usize,
    /// Chord shared by `f_prime` and `f_dprime`.
    pub ab: (Vertex, Vertex),
    /// The chord above the grandparent when one exists, otherwise an outer
    /// edge of the root incident on the block's cutvertex.
    pub e: (Vertex, Vertex),
}

/// Picks the deepest leaf of a non-simple block dual (ties to the lowest
/// face id) together with its parent, grandparent, and separating edge.
/// Simple blocks (dual diameter at most 2) are rejected; they are covered
/// by [`simple_leaf_block_vertex`] instead.
pub fn good_face(tree: &DualTree, cutvertex: Option<Vertex>) -> Result<GoodFace, ReductionError> {
    let diameter = tree.diameter();
    if diameter <= 2 {
        return Err(ReductionError::SimpleBlock { diameter });
    }
    let f = (0..tree.len())
        .max_by_key(|&x| (tree.depth[x], std::cmp::Reverse(tree.faces[x].id)))
        .expect("non-simple tree has nodes");
    // Depth of the deepest node is the root's eccentricity, at least half
    // the diameter, so parent and grandparent both exist.
    let f_prime = tree.parent[f].expect("deepest leaf has a parent");
    let f_dprime = tree.parent[f_prime].expect("deepest leaf has a grandparent");
    let ab = tree
        .shared_edge(f_prime, f_dprime)
        .expect("adjacent dual nodes share a chord");
    let e = match tree.parent[f_dprime] {
        Some(f3) => tree
            .shared_edge(f_dprime, f3)
            .expect("adjacent dual nodes share a chord"),
        None => {
            // The grandparent is the root, which only happens in blocks
            // rooted at a cutvertex face: cutvertex-free blocks root at an
            // eccentricity-maximal face, putting the deepest leaf a full
            // diameter away. The root's outer edge at the cutvertex then
            // separates the block from the rest of the graph.
            let c = cutvertex.expect("rooted grandparent requires a cutvertex");
            tree.faces[f_dprime]
                .boundary_edges()
                .into_iter()
                .filter(|&(u, v)| (u == c || v == c) && tree.outer_edges.contains(&(u, v)))
                .min()
                .expect("cutvertex face carries an outer edge at the cutvertex")
        }
    };
    Ok(GoodFace {
        f,
        f_prime,
        f_dprime,
        ab,
        e,
    })
}

/// Children of `p`, ordered by where their shared chord sits along the
/// boundary of `p`.
fn children_in_boundary_order(tree: &DualTree, p: usize) -> Vec<usize> {
    let edges = tree.faces[p].boundary_edges();
    let mut kids: Vec<(usize, usize)> = tree.children[p]
        .iter()
        .map(|&x| {
            let chord = tree.shared_edge(p, x).expect("child shares a chord");
            let pos = edges
                .iter()
                .position(|&e| e == chord)
                .expect("chord lies on the parent boundary");
            (pos, x)
        })
        .collect();
    kids.sort_unstable();
    kids.into_iter().map(|(_, x)| x).collect()
}

/// Boundary vertices of a face strictly between the endpoints of `chord`,
/// walked along the face away from the chord.
fn ears(tree: &DualTree, x: usize, chord: (Vertex, Vertex)) -> Vec<Vertex> {
    let b = &tree.faces[x].boundary;
    let l = b.len();
    let i = (0..l)
        .find(|&i| {
            let (u, v) = (b[i], b[(i + 1) % l]);
            (u.min(v), u.max(v)) == chord
        })
        .expect("chord lies on the face boundary");
    (2..l).map(|off| b[(i + off) % l]).collect()
}

/// Checks the ear vertices of leaf child `x`, least (distance-2 degree, id)
/// first, against `k`.
fn ear_witness(cur: &Graph, tree: &DualTree, p: usize, x: usize, k: usize) -> Option<KVertexWitness> {
    let chord = tree.shared_edge(p, x).expect("child shares a chord");
    best_witness(cur, ears(tree, x, chord), k)
}

fn finish(label: ConfigLabel, tree: &DualTree, gf: &GoodFace, witness: KVertexWitness) -> ConfigurationLabel {
    ConfigurationLabel {
        label,
        face: Some(tree.faces[gf.f].id),
        parent: Some(tree.faces[gf.f_prime].id),
        promised_k: witness.k,
        witness,
    }
}

/// A child of size 5 or more keeps an ear away from both chord ends; its
/// two distance-2 neighborhoods are single boundary edges.
fn try_a(cur: &Graph, tree: &DualTree, p: usize, kids: &[usize]) -> Option<KVertexWitness> {
    for &x in kids {
        if tree.faces[x].len() >= 5 {
            let chord = tree.shared_edge(p, x).expect("child shares a chord");
            let e = ears(tree, x, chord);
            if let Some(w) = best_witness(cur, e[1..e.len() - 1].iter().copied(), 4) {
                return Some(w);
            }
        }
    }
    None
}

/// A child of size 4 has two adjacent ears; each sees the other ear, one
/// chord end, and whatever sits within one step of that end.
fn try_b(cur: &Graph, tree: &DualTree, p: usize, kids: &[usize]) -> Option<KVertexWitness> {
    for &x in kids {
        if tree.faces[x].len() == 4 {
            if let Some(w) = ear_witness(cur, tree, p, x, 5) {
                return Some(w);
            }
        }
    }
    None
}

fn touches(chord: (Vertex, Vertex), v: Vertex) -> bool {
    chord.0 == v || chord.1 == v
}

/// Case split for maximum degree 5 or 6. Fires one of A, B, C, D, H and
/// returns the matched case with its checked witness.
pub fn classify_delta5(
    cur: &Graph,
    tree: &DualTree,
    gf: &GoodFace,
) -> Result<ConfigurationLabel, ReductionError> {
    let delta = cur.max_degree();
    let kids = children_in_boundary_order(tree, gf.f_prime);
    if let Some(w) = try_a(cur, tree, gf.f_prime, &kids) {
        return Ok(finish(ConfigLabel::A, tree, gf, w));
    }
    if let Some(w) = try_b(cur, tree, gf.f_prime, &kids) {
        return Ok(finish(ConfigLabel::B, tree, gf, w));
    }
    let triangles: Vec<usize> = kids
        .iter()
        .copied()
        .filter(|&x| tree.faces[x].len() == 3)
        .collect();
    if tree.faces[gf.f_prime].len() == 3 {
        // Triangle on a triangle: the ear's two neighbors share the third
        // parent vertex, so only one of them contributes unseen vertices.
        for &x in &triangles {
            if let Some(w) = ear_witness(cur, tree, gf.f_prime, x, delta + 1) {
                return Ok(finish(ConfigLabel::H, tree, gf, w));
            }
        }
    } else {
        let (a, b) = gf.ab;
        // A leaf triangle clear of both ends of ab hangs between two
        // bounded-degree parent vertices.
        for &x in &triangles {
            let chord = tree.shared_edge(gf.f_prime, x).expect("child shares a chord");
            if !touches(chord, a) && !touches(chord, b) {
                if let Some(w) = ear_witness(cur, tree, gf.f_prime, x, 6) {
                    return Ok(finish(ConfigLabel::C, tree, gf, w));
                }
            }
        }
        // Every remaining child crowds the ab end of the parent, leaving
        // parent boundary on the infinite face; the leaf ear works.
        for &x in &triangles {
            if let Some(w) = ear_witness(cur, tree, gf.f_prime, x, delta + 1) {
                return Ok(finish(ConfigLabel::D, tree, gf, w));
            }
        }
    }
    Err(ReductionError::FlowchartExhausted {
        n: cur.n(),
        delta,
    })
}

/// Case split for maximum degree 7 or more. Fires one of A, B, C, E, F, G,
/// I, J and returns the matched case with its checked witness.
pub fn classify_delta7(
    cur: &Graph,
    tree: &DualTree,
    gf: &GoodFace,
) -> Result<ConfigurationLabel, ReductionError> {
    let delta = cur.max_degree();
    let kids = children_in_boundary_order(tree, gf.f_prime);
    if let Some(w) = try_a(cur, tree, gf.f_prime, &kids) {
        return Ok(finish(ConfigLabel::A, tree, gf, w));
    }
    if let Some(w) = try_b(cur, tree, gf.f_prime, &kids) {
        return Ok(finish(ConfigLabel::B, tree, gf, w));
    }
    let triangles: Vec<usize> = kids
        .iter()
        .copied()
        .filter(|&x| tree.faces[x].len() == 3)
        .collect();
    let fp = &tree.faces[gf.f_prime];
    if fp.len() == 3 {
        if triangles.len() == 1 {
            // Lone triangle on a triangle: the ear's neighbors are adjacent
            // to each other and to the third parent vertex, so the ear sees
            // at most as much as the heavier neighbor.
            if let Some(w) = ear_witness(cur, tree, gf.f_prime, triangles[0], delta) {
                return Ok(finish(ConfigLabel::I, tree, gf, w));
            }
        } else {
            // Two triangles sharing the parent: one of the ears has both
            // neighbors of small degree.
            for &x in &triangles {
                if let Some(w) = ear_witness(cur, tree, gf.f_prime, x, 7) {
                    return Ok(finish(ConfigLabel::J, tree, gf, w));
                }
            }
        }
    } else {
        let (a, b) = gf.ab;
        for &x in &triangles {
            let chord = tree.shared_edge(gf.f_prime, x).expect("child shares a chord");
            if !touches(chord, a) && !touches(chord, b) {
                if let Some(w) = ear_witness(cur, tree, gf.f_prime, x, 6) {
                    return Ok(finish(ConfigLabel::C, tree, gf, w));
                }
            }
        }
        if fp.len() >= 5 {
            // All children crowd the ends of ab, so the middle of the
            // parent boundary lies on the infinite face with both
            // neighbors of bounded degree.
            let mut blocked: BTreeSet<Vertex> = BTreeSet::from([a, b]);
            for &x in &kids {
                let chord = tree.shared_edge(gf.f_prime, x).expect("child shares a chord");
                blocked.insert(chord.0);
                blocked.insert(chord.1);
            }
            let free = fp.boundary.iter().copied().filter(|v| !blocked.contains(v));
            if let Some(w) = best_witness(cur, free, 6) {
                return Ok(finish(ConfigLabel::G, tree, gf, w));
            }
        } else {
            // Parent of size 4. The two ends of ab cannot both be heavy:
            // first try the children whose chord touches a light end.
            for &x in &triangles {
                let chord = tree.shared_edge(gf.f_prime, x).expect("child shares a chord");
                let touched = if touches(chord, a) {
                    a
                } else if touches(chord, b) {
                    b
                } else {
                    continue;
                };
                if cur.degree(touched) <= 6 {
                    if let Some(w) = ear_witness(cur, tree, gf.f_prime, x, 7) {
                        return Ok(finish(ConfigLabel::E, tree, gf, w));
                    }
                }
            }
            // Otherwise the far end of ab is light and the parent's own
            // degree-2 boundary vertex, opposite the child, qualifies.
            for &x in &triangles {
                let chord = tree.shared_edge(gf.f_prime, x).expect("child shares a chord");
                let far = if touches(chord, a) {
                    b
                } else if touches(chord, b) {
                    a
                } else {
                    continue;
                };
                if cur.degree(far) <= 5 {
                    let on_child: BTreeSet<Vertex> = BTreeSet::from([a, b, chord.0, chord.1]);
                    let free = fp.boundary.iter().copied().filter(|v| !on_child.contains(v));
                    if let Some(w) = best_witness(cur, free, 7) {
                        return Ok(finish(ConfigLabel::F, tree, gf, w));
                    }
                }
            }
        }
    }
    Err(ReductionError::FlowchartExhausted {
        n: cur.n(),
        delta,
    })
}

/// Reduction vertex inside a simple leaf block (weak dual of diameter at
/// most 2): a pendant edge, one cycle, or a short chorded cycle whose
/// every bounded face touches one central face. Valid from maximum degree
/// 5 up; the witness bound is `delta` (or `delta + 1` when `delta` is 5).
pub fn simple_leaf_block_vertex(
    cur: &Graph,
    block_vertices: &[Vertex],
    tree: &DualTree,
    cutvertex: Option<Vertex>,
    delta: usize,
) -> Result<KVertexWitness, ReductionError> {
    if delta <= 4 {
        return Err(ReductionError::DegreeTooLow { delta });
    }
    let promise = if delta >= 6 { delta } else { delta + 1 };
    let exhausted = ReductionError::FlowchartExhausted {
        n: cur.n(),
        delta,
    };
    let non_cut = |v: &Vertex| Some(*v) != cutvertex;
    if block_vertices.len() <= 2 {
        // Isolated vertex or pendant edge: the free end sees one neighbor
        // and whatever sits around it.
        return best_witness(cur, block_vertices.iter().copied().filter(non_cut), promise)
            .ok_or(exhausted);
    }
    if tree.len() == 1 {
        let boundary = &tree.faces[0].boundary;
        if boundary.len() == 3 {
            // Triangle: both free corners see each other, the cutvertex,
            // and the cutvertex's other neighbors.
            return best_witness(cur, boundary.iter().copied().filter(non_cut), promise)
                .ok_or(exhausted);
        }
        // Longer cycle: away from the cutvertex every vertex and both its
        // neighbors have degree 2.
        let away = boundary.iter().copied().filter(|&v| {
            non_cut(&v) && cutvertex.map_or(true, |c| !cur.has_edge(v, c))
        });
        if let Some(w) = best_witness(cur, away, 4) {
            return Ok(w);
        }
        return best_witness(cur, boundary.iter().copied().filter(non_cut), promise)
            .ok_or(exhausted);
    }
    // Chorded block whose dual is an edge or a star: every vertex lies on
    // at most two bounded faces, so block degrees stay at most 4. A
    // degree-2 vertex two steps from the cutvertex sees only such vertices.
    let mut far = Vec::new();
    let mut near = Vec::new();
    for &v in block_vertices {
        if !non_cut(&v) {
            continue;
        }
        match cutvertex {
            Some(c) if cur.has_edge(v, c) => near.push(v),
            _ => far.push(v),
        }
    }
    if let Some(w) = best_witness(cur, far, 6) {
        return Ok(w);
    }
    // Remaining shape: a diagonalized 4- or 5-cycle with every degree-2
    // vertex beside the cutvertex.
    best_witness(cur, near, promise).ok_or(exhausted)
}

/// How a reduction step found its vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepRule {
    /// Direct scan, used while the maximum degree is at most 4 and for
    /// isolated vertices.
    LowDegreeScan,
    Config(ConfigLabel),
}

#[derive(Debug, Clone, Copy)]
pub struct StepRecord {
    /// Original id of the vertex ordered at this step.
    pub vertex: Vertex,
    pub rule: StepRule,
    /// Bound the step's case promised.
    pub promised_k: usize,
    /// Distance-2 degree at removal time, in the reduced graph.
    pub dist2_degree: usize,
    /// Original id of the neighbor the vertex was contracted into.
    pub contracted_into: Option<Vertex>,
}

/// Inductive ordering of the square together with the per-step trace.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub ordering: InductiveOrdering,
    /// Degree-based bound promised for `ordering.k` before the run.
    pub promised_k: usize,
    pub trace: Vec<StepRecord>,
}

/// Inductiveness bound for the square of an outerplanar graph with maximum
/// degree `delta`.
pub fn square_inductiveness_bound(delta: usize) -> usize {
    match delta {
        0 | 1 => delta,
        2 | 3 => 4,
        4 | 5 => 6,
        6 => 7,
        d => d,
    }
}

fn choose_step(cur: &Graph) -> Result<(KVertexWitness, StepRule), ReductionError> {
    let delta = cur.max_degree();
    if delta <= 4 {
        let bound = square_inductiveness_bound(delta);
        let w = find_k_vertex(cur, bound).ok_or(ReductionError::NoKVertex { bound, delta })?;
        return Ok((w, StepRule::LowDegreeScan));
    }
    if let Some(v) = cur.vertices().find(|&v| cur.degree(v) == 0) {
        let w = KVertexWitness {
            vertex: v,
            degree: 0,
            dist2_degree: 0,
            k: 0,
        };
        return Ok((w, StepRule::LowDegreeScan));
    }
    let structure = analyze(cur)?;
    let decomposition = &structure.cert.decomposition;
    let leafs = decomposition.leaf_blocks();
    for &b in &leafs {
        let tree = &structure.duals[b];
        if tree.diameter() <= 2 {
            let cut = decomposition.cutvertices_in(b).into_iter().next();
            let w =
                simple_leaf_block_vertex(cur, &decomposition.blocks[b], tree, cut, delta)?;
            return Ok((w, StepRule::Config(ConfigLabel::SimpleBlock)));
        }
    }
    let b = *leafs.first().expect("nonempty graph has a leaf block");
    let tree = &structure.duals[b];
    let cut = decomposition.cutvertices_in(b).into_iter().next();
    let gf = good_face(tree, cut)?;
    let label = if delta >= 7 {
        classify_delta7(cur, tree, &gf)?
    } else {
        classify_delta5(cur, tree, &gf)?
    };
    Ok((label.witness, StepRule::Config(label.label)))
}

/// Computes an inductive ordering of `square(g)` whose width meets the
/// degree bound of [`square_inductiveness_bound`], by repeated find-and-
/// contract. Rejects non-outerplanar input.
pub fn inductive_ordering_square(g: &Graph) -> Result<Reduction, ReductionError> {
    check_outerplanar(g)?;
    let promised_k = square_inductiveness_bound(g.max_degree());
    let mut cur = g.clone();
    let mut orig: Vec<Vertex> = (0..g.n()).collect();
    let mut trace: Vec<StepRecord> = Vec::with_capacity(g.n());
    while cur.n() > 0 {
        let (w, rule) = choose_step(&cur)?;
        assert!(
            w.dist2_degree <= promised_k,
            "step witness {} exceeds the promised bound {}",
            w.dist2_degree,
            promised_k
        );
        let v = w.vertex;
        let (next, to_old, merged_into) = if cur.degree(v) == 0 {
            let (nextg, to_old) = cur.remove_vertex(v);
            (nextg, to_old, None)
        } else {
            let u = cur.neighbors(v).next().expect("positive degree");
            let c = contract_edge(&cur, v, u).expect("edge exists");
            assert!(
                c.graph.max_degree() <= cur.max_degree(),
                "contraction must not raise the maximum degree"
            );
            (c.graph, c.to_old, Some(orig[u]))
        };
        trace.push(StepRecord {
            vertex: orig[v],
            rule,
            promised_k: w.k,
            dist2_degree: w.dist2_degree,
            contracted_into: merged_into,
        });
        orig = to_old.iter().map(|&o| orig[o]).collect();
        cur = next;
    }
    let order: Vec<Vertex> = trace.iter().map(|s| s.vertex).collect();
    let ordering = InductiveOrdering::from_order(&square(g), order)?;
    assert!(
        ordering.k <= promised_k,
        "realized width {} exceeds the promised bound {}",
        ordering.k,
        promised_k
    );
    Ok(Reduction {
        ordering,
        promised_k,
        trace,
    })
}


#[cfg(test)]
mod good_face_tests {
    use super::*;
    use crate::families::{cycle, rigid_ladder};
    use crate::outerplanar::analyze;

    // Vertices of the grandparent's subtree region, boundary included.
    fn region(tree: &DualTree, top: usize) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        let mut stack = vec![top];
        while let Some(x) = stack.pop() {
            out.extend(tree.faces[x].boundary.iter().copied());
            stack.extend(tree.children[x].iter().copied());
        }
        out
    }

    // Every path from the region to the rest must cross an endpoint of e.
    fn assert_separates(g: &Graph, tree: &DualTree, gf: &GoodFace) {
        let inside = region(tree, gf.f_dprime);
        let (x, y) = gf.e;
        let mut cut = g.clone();
        for w in cut.neighbors(x).collect::<Vec<_>>() {
            cut.remove_edge(x, w);
        }
        for w in cut.neighbors(y).collect::<Vec<_>>() {
            cut.remove_edge(y, w);
        }
        for comp in cut.components() {
            if comp == vec![x] || comp == vec![y] {
                continue;
            }
            let hits_inside = comp.iter().any(|v| inside.contains(v) && *v != x && *v != y);
            let hits_outside = comp.iter().any(|v| !inside.contains(v));
            assert!(
                !(hits_inside && hits_outside),
                "edge {:?} fails to separate the grandparent region",
                gf.e
            );
        }
    }

    #[test]
    fn ladder_good_face_sits_at_the_far_end() {
        let rl6 = rigid_ladder(6).unwrap();
        let s = analyze(&rl6).unwrap();
        let tree = &s.duals[0];
        let gf = good_face(tree, None).unwrap();
        let mut far_face = tree.faces[gf.f].boundary.clone();
        far_face.sort_unstable();
        assert_eq!(far_face, vec![2, 4, 5]);
        assert_eq!(gf.ab, (2, 3));
        assert_eq!(gf.e, (0, 3));
        assert!(tree.children[gf.f].is_empty());
        assert_separates(&rl6, tree, &gf);

        let rl10 = rigid_ladder(10).unwrap();
        let s = analyze(&rl10).unwrap();
        let tree = &s.duals[0];
        let gf = good_face(tree, None).unwrap();
        assert_eq!(tree.depth[gf.f], tree.diameter());
        assert!(tree.faces[gf.f]
            .boundary
            .iter()
            .any(|&v| rl10.degree(v) == 2));
        assert_separates(&rl10, tree, &gf);
    }

    #[test]
    fn rootless_grandparent_falls_back_to_the_cut_edge() {
        // A 7-gon whose dual is a path of four faces, hung on a pendant at
        // vertex 6: the root face carries the cutvertex, the deepest leaf
        // sits two levels below it, and e degrades to an outer edge at 6.
        let mut edges = vec![(0, 2), (0, 3), (3, 5), (6, 7)];
        edges.extend((0..7).map(|i| (i, (i + 1) % 7)));
        let g = Graph::from_edge_list(8, &edges).unwrap();
        let s = analyze(&g).unwrap();
        let (b, tree) = s
            .duals
            .iter()
            .enumerate()
            .find(|(_, t)| !t.is_empty())
            .unwrap();
        let cut = s.cert.decomposition.cutvertices_in(b).into_iter().next();
        assert_eq!(cut, Some(6));
        let gf = good_face(tree, cut).unwrap();
        assert_eq!(tree.faces[gf.f].boundary, vec![0, 1, 2]);
        assert_eq!(gf.ab, (0, 3));
        assert_eq!(tree.parent[gf.f_dprime], None);
        assert_eq!(gf.e, (0, 6));
        assert_separates(&g, tree, &gf);
    }

    #[test]
    fn simple_blocks_are_rejected() {
        let c5 = cycle(5).unwrap();
        let s = analyze(&c5).unwrap();
        let err = good_face(&s.duals[0], None).unwrap_err();
        assert!(matches!(err, ReductionError::SimpleBlock { diameter: 0 }));
    }
}
