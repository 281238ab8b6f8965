//! Chordal outerplanar graphs: recognition, exact square parameters, and
//! separator-based decomposition.
//!
//! An outerplanar graph is chordal exactly when every bounded face of its
//! outer embedding is a triangle. A longer bounded face would be an induced
//! cycle: an edge between two non-consecutive boundary vertices would have
//! to be drawn through the face, so it cannot exist. On this class the
//! clique number, chromatic number, and inductiveness of the square collapse
//! to formulas in the maximum degree, corrected by one when a matching
//! witness graph is present: the hat of the triangle at degree 4, the hat of
//! the 4-vertex rigid ladder at degree 5, and the double hat of the triangle
//! at degree 6. Plain and hatted rigid ladders never trigger the
//! correction; a hatted ladder square needs 7 colors but is only
//! 6-inductive. `classify` evaluates the formulas and, on small inputs,
//! replays them against the exact solvers before answering.
//!
//! For maximum degree 5 and 6 a biconnected member either has a complete
//! square, or has a weak dual without degree-2 vertices (which pins the
//! graph to a short catalogue), or contains a small vertex set that induces
//! a clique in the square and disconnects it. `find_separator` locates such
//! a set, `split_at_separator` cuts the graph in two along it, and
//! `recombine_colorings` merges optimal colorings of the halves by permuting
//! one palette, giving a divide-and-conquer route to optimal square
//! colorings.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::families;
use crate::graph::{contains_subgraph, is_biconnected, Graph, GraphError, Vertex};
use crate::outerplanar::{analyze, NotOuterplanar, OuterStructure};
use crate::power::{
    self, exact_chromatic, exact_clique, square, validate_coloring, Coloring, PowerError,
    SearchBudget,
};

#[derive(Debug, Error)]
pub enum ChordalError {
    #[error(transparent)]
    Outerplanarity(#[from] NotOuterplanar),
    #[error("bounded face {face} has {len} sides, so the graph is not chordal")]
    NotChordal { face: usize, len: usize },
    #[error("separator machinery needs a biconnected graph")]
    NotBiconnected,
    #[error("separator machinery covers maximum degree 5 and 6, got {delta}")]
    DegreeOutOfRange { delta: usize },
    #[error("invalid separator: {reason}")]
    InvalidSeparator { reason: &'static str },
    #[error("no separator candidate verified; the candidate generation is incomplete")]
    SeparatorSearchExhausted,
    #[error("classification check failed: {parameter} predicted {predicted}, exact search found {computed}")]
    OracleMismatch {
        parameter: &'static str,
        predicted: usize,
        computed: usize,
    },
    #[error(transparent)]
    Power(#[from] PowerError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn inv(reason: &'static str) -> ChordalError {
    ChordalError::InvalidSeparator { reason }
}

/// Every bounded face of every block must be a triangle.
fn all_faces_triangular(st: &OuterStructure) -> Result<(), ChordalError> {
    for tree in &st.duals {
        for f in &tree.faces {
            if f.len() != 3 {
                return Err(ChordalError::NotChordal {
                    face: f.id,
                    len: f.len(),
                });
            }
        }
    }
    Ok(())
}

/// Whether the graph is outerplanar with all bounded faces triangular,
/// which for outerplanar graphs coincides with ordinary chordality.
pub fn is_chordal_outerplanar(g: &Graph) -> bool {
    match analyze(g) {
        Ok(st) => all_faces_triangular(&st).is_ok(),
        Err(_) => false,
    }
}

/// Which witness subgraph raises the square's inductiveness to delta + 1.
/// `Base` means none applies and the degree formula stands uncorrected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriggeringCondition {
    /// Maximum degree 4 and the hat of the triangle is a subgraph.
    F4Subgraph,
    /// Maximum degree 5 and the hat of the 4-vertex rigid ladder is a
    /// subgraph.
    F5Subgraph,
    /// Maximum degree 6 and the double hat of the triangle is a subgraph.
    F6Subgraph,
    Base,
}

/// Exact square parameters of a chordal outerplanar graph, as predicted
/// from the maximum degree and the triggering condition alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChordalClassification {
    pub delta: usize,
    pub predicted_omega: usize,
    pub predicted_chi: usize,
    pub predicted_ind: usize,
    pub triggering_condition: TriggeringCondition,
}

/// Inputs at most this large are re-checked against the exact solvers
/// inside `classify`, so a formula error surfaces as `OracleMismatch`
/// instead of a silently wrong answer.
pub const ORACLE_CHECK_LIMIT: usize = 24;

/// Compute the clique number, chromatic number, and inductiveness of the
/// square without constructing it.
///
/// The square of a chordal outerplanar graph with maximum degree d has
/// clique and chromatic number d + 1, except at d = 4 with the hat of the
/// triangle present, where both are d + 2. Its inductiveness is d, raised
/// to d + 1 exactly when the witness for d in `TriggeringCondition` is a
/// subgraph; for d outside 4..=6 no witness exists and the base formula is
/// exact. Containment is checked as ordinary subgraph containment, so the
/// correction survives ears, pendants, and gluing at cutvertices.
pub fn classify(g: &Graph) -> Result<ChordalClassification, ChordalError> {
    let st = analyze(g)?;
    all_faces_triangular(&st)?;
    if g.n() == 0 {
        return Ok(ChordalClassification {
            delta: 0,
            predicted_omega: 0,
            predicted_chi: 0,
            predicted_ind: 0,
            triggering_condition: TriggeringCondition::Base,
        });
    }
    let delta = g.max_degree();
    let (bump, condition) = match delta {
        4 => match contains_subgraph(g, &families::f4())? {
            Some(_) => (true, TriggeringCondition::F4Subgraph),
            None => (false, TriggeringCondition::Base),
        },
        5 => match contains_subgraph(g, &families::f5())? {
            Some(_) => (true, TriggeringCondition::F5Subgraph),
            None => (false, TriggeringCondition::Base),
        },
        6 => match contains_subgraph(g, &families::f6())? {
            Some(_) => (true, TriggeringCondition::F6Subgraph),
            None => (false, TriggeringCondition::Base),
        },
        _ => (false, TriggeringCondition::Base),
    };
    let predicted_omega = if delta == 4 && bump { 6 } else { delta + 1 };
    let predicted_ind = if bump { delta + 1 } else { delta };
    let c = ChordalClassification {
        delta,
        predicted_omega,
        predicted_chi: predicted_omega,
        predicted_ind,
        triggering_condition: condition,
    };
    if g.n() <= ORACLE_CHECK_LIMIT {
        cross_check(g, &c)?;
    }
    Ok(c)
}

fn cross_check(g: &Graph, c: &ChordalClassification) -> Result<(), ChordalError> {
    let sq = square(g);
    let ind = power::degeneracy(&sq).k;
    if ind != c.predicted_ind {
        return Err(ChordalError::OracleMismatch {
            parameter: "inductiveness",
            predicted: c.predicted_ind,
            computed: ind,
        });
    }
    let budget = SearchBudget::default();
    let (omega, _) = exact_clique(&sq, budget)?;
    if omega != c.predicted_omega {
        return Err(ChordalError::OracleMismatch {
            parameter: "clique number",
            predicted: c.predicted_omega,
            computed: omega,
        });
    }
    let (chi, _) = exact_chromatic(&sq, budget)?;
    if chi != c.predicted_chi {
        return Err(ChordalError::OracleMismatch {
            parameter: "chromatic number",
            predicted: c.predicted_chi,
            computed: chi,
        });
    }
    Ok(())
}

/// A vertex set that induces a clique in the square and whose removal
/// disconnects the square. Both properties are checked literally by
/// `verify_separator`; nothing downstream trusts the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    pub vertices: Vec<Vertex>,
    pub h: usize,
}

/// Connected components of the square after deleting `s`, each sorted,
/// ordered by smallest member. Components are taken in the square itself:
/// two vertices at distance 2 through a deleted vertex stay adjacent.
fn components_outside(sq: &Graph, s: &BTreeSet<Vertex>) -> Vec<Vec<Vertex>> {
    let n = sq.n();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] || s.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for w in sq.neighbors(v) {
                if !seen[w] && !s.contains(&w) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Check the two defining properties of a separator against the square.
pub fn verify_separator(g: &Graph, sep: &Separator) -> Result<(), ChordalError> {
    if sep.h != sep.vertices.len() {
        return Err(inv("h does not match the number of vertices"));
    }
    let set: BTreeSet<Vertex> = sep.vertices.iter().copied().collect();
    if set.len() != sep.vertices.len() {
        return Err(inv("repeated vertex"));
    }
    if set.last().is_some_and(|&v| v >= g.n()) {
        return Err(inv("vertex out of range"));
    }
    if set.len() >= g.n() {
        return Err(inv("separator leaves nothing to disconnect"));
    }
    let sq = square(g);
    for &u in &set {
        for &v in &set {
            if u < v && !sq.has_edge(u, v) {
                return Err(inv("not a clique in the square"));
            }
        }
    }
    if components_outside(&sq, &set).len() < 2 {
        return Err(inv("removal leaves the square connected"));
    }
    Ok(())
}

/// Find a separator in a biconnected chordal outerplanar graph with
/// maximum degree 5 or 6, or report that none is needed.
///
/// `Ok(None)` covers the two terminal shapes of the decomposition: a
/// square that is already a clique, and a weak dual without degree-2
/// vertices, which confines the graph to a fixed catalogue. Otherwise
/// some dual vertex has degree 2 and a separator of 4 to 7 vertices
/// exists. Candidates come in three shapes, each with a vertex adjacent
/// to all others, which keeps the set a clique in both halves after
/// splitting: the union of two triangles sharing a chord, the closed
/// neighborhood of the vertex opposite the unique outer edge of a
/// degree-2 dual vertex's triangle, and the closed neighborhood of a
/// chord endpoint of a leaf triangle minus the leaf's degree-2 tip.
/// Candidates are verified literally, smallest first.
pub fn find_separator(g: &Graph) -> Result<Option<Separator>, ChordalError> {
    let st = analyze(g)?;
    all_faces_triangular(&st)?;
    if !is_biconnected(g) {
        return Err(ChordalError::NotBiconnected);
    }
    let delta = g.max_degree();
    if !(5..=6).contains(&delta) {
        return Err(ChordalError::DegreeOutOfRange { delta });
    }
    // One block spanning the whole graph, so face ids are graph ids.
    let tree = &st.duals[0];
    let full = (0..tree.len()).all(|x| tree.adj[x].len() != 2);
    if full {
        return Ok(None);
    }
    let n = g.n();
    if square(g).m() == n * (n - 1) / 2 {
        return Ok(None);
    }

    let mut cands: Vec<Vec<Vertex>> = Vec::new();
    for x in 0..tree.len() {
        for &y in &tree.adj[x] {
            if y > x {
                let mut s: BTreeSet<Vertex> = tree.faces[x].boundary.iter().copied().collect();
                s.extend(tree.faces[y].boundary.iter().copied());
                cands.push(s.into_iter().collect());
            }
        }
    }
    for x in 0..tree.len() {
        let deg = tree.adj[x].len();
        let f = &tree.faces[x];
        if deg == 2 {
            // Two of the triangle's sides are chords shared with the dual
            // neighbors; the third bounds the outer face.
            let shared: Vec<(Vertex, Vertex)> = tree
                .adj[x]
                .iter()
                .map(|&y| tree.shared_edge(x, y).expect("adjacent faces share an edge"))
                .collect();
            for e in f.boundary_edges() {
                if !shared.contains(&e) {
                    let w = f
                        .boundary
                        .iter()
                        .copied()
                        .find(|&v| v != e.0 && v != e.1)
                        .expect("triangle has a vertex off each side");
                    let mut s: BTreeSet<Vertex> = g.neighbors(w).collect();
                    s.insert(w);
                    cands.push(s.into_iter().collect());
                }
            }
        } else if deg == 1 {
            // The tip across the shared chord has no chords of its own, so
            // a chord endpoint's neighborhood minus the tip can cut it off.
            let (a, b) = tree
                .shared_edge(x, tree.adj[x][0])
                .expect("adjacent faces share an edge");
            let tip = f
                .boundary
                .iter()
                .copied()
                .find(|&v| v != a && v != b)
                .expect("triangle has a vertex off each side");
            for w in [a, b] {
                let mut s: BTreeSet<Vertex> = g.neighbors(w).collect();
                s.insert(w);
                s.remove(&tip);
                cands.push(s.into_iter().collect());
            }
        }
    }
    cands.sort();
    cands.dedup();
    cands.sort_by_key(Vec::len);
    for c in cands {
        let sep = Separator {
            h: c.len(),
            vertices: c,
        };
        if verify_separator(g, &sep).is_ok() {
            return Ok(Some(sep));
        }
    }
    Err(ChordalError::SeparatorSearchExhausted)
}

/// The two halves produced by `split_at_separator`. Vertex i of `left` is
/// `left_vertices[i]` in the original graph, and likewise on the right;
/// the separator vertices appear in both lists.
#[derive(Debug, Clone)]
pub struct SplitParts {
    pub left: Graph,
    pub left_vertices: Vec<Vertex>,
    pub right: Graph,
    pub right_vertices: Vec<Vertex>,
}

/// Cut the graph in two along a separator.
///
/// The left half is one component of the punctured square plus the
/// separator, the right half is everything else. Distinct components of
/// the punctured square have no square edge between them, so every edge of
/// the whole square lives inside one half, and each half sees it in its
/// own square: a witness path for a pair involving a non-separator vertex
/// cannot leave that vertex's component, and separator pairs are adjacent
/// in both halves' squares because a separator vertex dominates the rest.
pub fn split_at_separator(g: &Graph, sep: &Separator) -> Result<SplitParts, ChordalError> {
    verify_separator(g, sep)?;
    let sq = square(g);
    let inside: BTreeSet<Vertex> = sep.vertices.iter().copied().collect();
    let comps = components_outside(&sq, &inside);
    let first: BTreeSet<Vertex> = comps[0].iter().copied().collect();
    let left_vs: Vec<Vertex> = (0..g.n())
        .filter(|v| first.contains(v) || inside.contains(v))
        .collect();
    let right_vs: Vec<Vertex> = (0..g.n()).filter(|v| !first.contains(v)).collect();
    let (left, left_vertices) = g.induced(&left_vs);
    let (right, right_vertices) = g.induced(&right_vs);
    Ok(SplitParts {
        left,
        left_vertices,
        right,
        right_vertices,
    })
}

/// Merge square colorings of the two halves into a square coloring of the
/// whole graph, relabeling the right palette so that the halves agree on
/// the separator.
///
/// Both inputs are validated against their half's square, and both must
/// color the separator with pairwise distinct colors, which properness
/// already forces there. The merged coloring uses no color beyond the
/// larger of the two palettes and is validated against the whole square
/// before being returned: when the halves are colored optimally the result
/// is an optimal coloring of the square.
pub fn recombine_colorings(
    g: &Graph,
    sep: &Separator,
    parts: &SplitParts,
    left: &Coloring,
    right: &Coloring,
) -> Result<Coloring, ChordalError> {
    validate_coloring(&square(&parts.left), left)?;
    validate_coloring(&square(&parts.right), right)?;
    let mut merged = vec![0usize; g.n()];
    for (i, &v) in parts.left_vertices.iter().enumerate() {
        merged[v] = left.colors[i];
    }
    let mut perm: BTreeMap<usize, usize> = BTreeMap::new();
    let mut used: BTreeSet<usize> = BTreeSet::new();
    for &v in &sep.vertices {
        let li = parts
            .left_vertices
            .binary_search(&v)
            .map_err(|_| inv("separator vertex missing from the left half"))?;
        let ri = parts
            .right_vertices
            .binary_search(&v)
            .map_err(|_| inv("separator vertex missing from the right half"))?;
        let lc = left.colors[li];
        let rc = right.colors[ri];
        match perm.get(&rc) {
            Some(&prev) if prev != lc => {
                return Err(inv("right half repeats a color on the separator"))
            }
            Some(_) => {}
            None => {
                if !used.insert(lc) {
                    return Err(inv("left half repeats a color on the separator"));
                }
                perm.insert(rc, lc);
            }
        }
    }
    for c in 1..=right.palette() {
        if !perm.contains_key(&c) {
            let fresh = (1..).find(|x| !used.contains(x)).unwrap();
            used.insert(fresh);
            perm.insert(c, fresh);
        }
    }
    for (i, &v) in parts.right_vertices.iter().enumerate() {
        merged[v] = perm[&right.colors[i]];
    }
    let coloring = Coloring { colors: merged };
    validate_coloring(&square(g), &coloring)?;
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::families::{
        cycle, enumerate_biconnected_outerplanar, enumerate_outerplanar, f4, f5, f6, fan,
        hat_rigid_ladder, path, random_chordal_outerplanar, rigid_ladder,
    };
    use crate::oracle;

    fn strip7() -> Graph {
        Graph::from_edge_list(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap()
    }

    /// Three triangles sharing one vertex.
    fn friendship3() -> Graph {
        Graph::from_edge_list(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (0, 4),
                (3, 4),
                (0, 5),
                (0, 6),
                (5, 6),
            ],
        )
        .unwrap()
    }

    /// Identify v2 of g2 with v1 of g1, keeping everything else disjoint.
    fn glue(g1: &Graph, v1: Vertex, g2: &Graph, v2: Vertex) -> Graph {
        let mut g = Graph::empty(g1.n() + g2.n() - 1);
        for (a, b) in g1.edges() {
            g.add_edge(a, b);
        }
        let map = |v: Vertex| {
            if v == v2 {
                v1
            } else if v < v2 {
                g1.n() + v
            } else {
                g1.n() + v - 1
            }
        };
        for (a, b) in g2.edges() {
            g.add_edge(map(a), map(b));
        }
        g
    }

    /// New vertex adjacent to both ends of an existing edge.
    fn with_ear(g: &Graph, a: Vertex, b: Vertex) -> Graph {
        assert!(g.has_edge(a, b));
        let mut h = Graph::empty(g.n() + 1);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        h.add_edge(a, g.n());
        h.add_edge(b, g.n());
        h
    }

    /// First edge whose endpoint degrees are exactly {da, db}.
    fn edge_with_degrees(g: &Graph, da: usize, db: usize) -> (Vertex, Vertex) {
        g.edges()
            .into_iter()
            .find(|&(u, v)| {
                let mut d = [g.degree(u), g.degree(v)];
                d.sort_unstable();
                d == [da.min(db), da.max(db)]
            })
            .expect("no edge with the requested degrees")
    }

    fn classify_tuple(g: &Graph) -> (usize, usize, usize, usize, TriggeringCondition) {
        let c = classify(g).unwrap();
        (
            c.delta,
            c.predicted_omega,
            c.predicted_chi,
            c.predicted_ind,
            c.triggering_condition,
        )
    }

    #[test]
    fn recognition_matches_face_shapes() {
        assert!(is_chordal_outerplanar(&Graph::empty(0)));
        assert!(is_chordal_outerplanar(&Graph::empty(4)));
        assert!(is_chordal_outerplanar(&path(6).unwrap()));
        assert!(is_chordal_outerplanar(&cycle(3).unwrap()));
        assert!(is_chordal_outerplanar(&fan(6).unwrap()));
        assert!(is_chordal_outerplanar(&rigid_ladder(8).unwrap()));
        assert!(is_chordal_outerplanar(&f6()));
        assert!(is_chordal_outerplanar(&friendship3()));
        assert!(!is_chordal_outerplanar(&cycle(4).unwrap()));
        assert!(!is_chordal_outerplanar(&cycle(5).unwrap()));
        assert!(!is_chordal_outerplanar(&cycle(6).unwrap()));
        let mut hex_chord = cycle(6).unwrap();
        hex_chord.add_edge(0, 3);
        assert!(!is_chordal_outerplanar(&hex_chord));
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(!is_chordal_outerplanar(&k4));
        match classify(&cycle(4).unwrap()) {
            Err(ChordalError::NotChordal { len: 4, .. }) => {}
            other => panic!("expected a 4-face rejection, got {other:?}"),
        }
    }

    #[test]
    fn recognition_matches_abstract_chordality() {
        for n in 1..=8 {
            for g in enumerate_outerplanar(n, None).unwrap() {
                assert_eq!(
                    is_chordal_outerplanar(&g),
                    oracle::is_chordal(&g),
                    "disagreement on n={n} edges={:?}",
                    g.edges()
                );
            }
        }
    }

    #[test]
    fn witness_squares_have_the_expected_shape() {
        let sf4 = square(&f4());
        assert_eq!((sf4.n(), sf4.m()), (6, 15));
        assert!(oracle::is_chordal(&sf4));
        assert!(!oracle::is_chordal(&square(&f5())));
        assert!(!oracle::is_chordal(&square(&f6())));
    }

    #[test]
    fn named_graphs_classify_exactly() {
        use TriggeringCondition::*;
        assert_eq!(classify_tuple(&Graph::empty(0)), (0, 0, 0, 0, Base));
        assert_eq!(classify_tuple(&Graph::empty(3)), (0, 1, 1, 0, Base));
        assert_eq!(
            classify_tuple(&Graph::from_edge_list(2, &[(0, 1)]).unwrap()),
            (1, 2, 2, 1, Base)
        );
        assert_eq!(classify_tuple(&path(6).unwrap()), (2, 3, 3, 2, Base));
        assert_eq!(classify_tuple(&cycle(3).unwrap()), (2, 3, 3, 2, Base));
        assert_eq!(classify_tuple(&rigid_ladder(4).unwrap()), (3, 4, 4, 3, Base));
        assert_eq!(classify_tuple(&rigid_ladder(8).unwrap()), (4, 5, 5, 4, Base));
        assert_eq!(classify_tuple(&fan(5).unwrap()), (5, 6, 6, 5, Base));
        assert_eq!(classify_tuple(&fan(6).unwrap()), (6, 7, 7, 6, Base));
        assert_eq!(classify_tuple(&fan(7).unwrap()), (7, 8, 8, 7, Base));
        assert_eq!(classify_tuple(&strip7()), (5, 6, 6, 5, Base));
        assert_eq!(classify_tuple(&friendship3()), (6, 7, 7, 6, Base));
        assert_eq!(classify_tuple(&f4()), (4, 6, 6, 5, F4Subgraph));
        assert_eq!(classify_tuple(&f5()), (5, 6, 6, 6, F5Subgraph));
        assert_eq!(classify_tuple(&f6()), (6, 7, 7, 7, F6Subgraph));
    }

    /// Hatted rigid ladders need 7 colors on the square but stay
    /// 6-inductive, so at degree 6 only the double hat of the triangle
    /// raises the inductiveness.
    #[test]
    fn hatted_ladders_do_not_trigger() {
        use TriggeringCondition::*;
        let h5 = hat_rigid_ladder(5).unwrap();
        assert_eq!(classify_tuple(&h5), (6, 7, 7, 6, Base));
        let h6 = hat_rigid_ladder(6).unwrap();
        assert_eq!(classify_tuple(&h6), (6, 7, 7, 6, Base));
        for n in 5..=7 {
            let h = hat_rigid_ladder(n).unwrap();
            assert_eq!(power::degeneracy(&square(&h)).k, 6, "n={n}");
        }
        let (chi, _) = exact_chromatic(&square(&h5), SearchBudget::default()).unwrap();
        assert_eq!(chi, 7);
        // The witnesses nest strictly into the hatted ladders and each
        // other, except that the double hat never embeds into a ladder.
        assert!(contains_subgraph(&h5, &f5()).unwrap().is_some());
        assert!(contains_subgraph(&f6(), &f5()).unwrap().is_some());
        assert!(contains_subgraph(&f6(), &h5).unwrap().is_some());
        assert!(contains_subgraph(&hat_rigid_ladder(6).unwrap(), &h5)
            .unwrap()
            .is_some());
        assert!(contains_subgraph(&hat_rigid_ladder(7).unwrap(), &h6)
            .unwrap()
            .is_some());
        assert!(contains_subgraph(&h6, &f6()).unwrap().is_none());
    }

    #[test]
    fn ladder_squares_stay_four_inductive() {
        for n in 5..=12 {
            let g = rigid_ladder(n).unwrap();
            assert_eq!(power::degeneracy(&square(&g)).k, 4, "n={n}");
        }
        assert_eq!(power::degeneracy(&square(&f4())).k, 5);
        assert_eq!(power::degeneracy(&square(&f5())).k, 6);
        assert_eq!(power::degeneracy(&square(&f6())).k, 7);
    }

    /// Containment is by subgraph, so ears and pendants keep the witness.
    #[test]
    fn decorated_witnesses_keep_their_condition() {
        use TriggeringCondition::*;
        let f5 = f5();
        let (h, c) = edge_with_degrees(&f5, 2, 4);
        assert_eq!(classify_tuple(&with_ear(&f5, h, c)), (5, 6, 6, 6, F5Subgraph));
        let f6 = f6();
        let (h, c) = edge_with_degrees(&f6, 2, 4);
        assert_eq!(classify_tuple(&with_ear(&f6, h, c)), (6, 7, 7, 7, F6Subgraph));
        let mut pendant = Graph::empty(f5.n() + 1);
        for (a, b) in f5.edges() {
            pendant.add_edge(a, b);
        }
        let low = (0..f5.n()).find(|&v| f5.degree(v) == 4).unwrap();
        pendant.add_edge(low, f5.n());
        assert_eq!(classify_tuple(&pendant), (5, 6, 6, 6, F5Subgraph));
    }

    /// Blocks glued at cutvertices: the condition looks through the whole
    /// graph, and cross-block square edges never manufacture a witness.
    #[test]
    fn cutvertex_probes_classify_exactly() {
        use TriggeringCondition::*;
        let two_f4 = glue(&f4(), 3, &f4(), 3);
        assert_eq!(two_f4.max_degree(), 4);
        assert_eq!(classify_tuple(&two_f4), (4, 6, 6, 5, F4Subgraph));
        let f5_tri = glue(&f5(), 4, &cycle(3).unwrap(), 0);
        assert_eq!(f5_tri.max_degree(), 5);
        assert_eq!(classify_tuple(&f5_tri), (5, 6, 6, 6, F5Subgraph));
        let f6_tri = glue(&f6(), 6, &cycle(3).unwrap(), 0);
        assert_eq!(f6_tri.max_degree(), 6);
        assert_eq!(classify_tuple(&f6_tri), (6, 7, 7, 7, F6Subgraph));
        let h5 = hat_rigid_ladder(5).unwrap();
        let hat = (0..h5.n()).find(|&v| h5.degree(v) == 2).unwrap();
        let mixed = glue(&h5, hat, &f5(), 4);
        assert_eq!(mixed.max_degree(), 6);
        assert_eq!(classify_tuple(&mixed), (6, 7, 7, 6, Base));
    }

    #[test]
    fn fused_pair_keeps_the_witness() {
        use crate::families::{fuse, FuseOrientation};
        let f6 = f6();
        let e = edge_with_degrees(&f6, 2, 4);
        let fused = fuse(&f6, e, &f6, e, FuseOrientation::Crossed, Some(6)).unwrap();
        assert_eq!(fused.n(), 22);
        assert_eq!(fused.max_degree(), 6);
        let c = classify(&fused).unwrap();
        assert_eq!(c.triggering_condition, TriggeringCondition::F6Subgraph);
        assert_eq!(
            (c.predicted_omega, c.predicted_chi, c.predicted_ind),
            (7, 7, 7)
        );
    }

    /// Every chordal member of the small enumerations passes the internal
    /// oracle replay, and both values of each condition show up.
    #[test]
    fn exhaustive_small_graphs_classify_cleanly() {
        let mut seen: BTreeSet<(usize, bool)> = BTreeSet::new();
        let mut total = 0usize;
        let mut tri_counts = BTreeMap::new();
        for n in 3..=10 {
            let mut count = 0usize;
            for g in enumerate_biconnected_outerplanar(n, None).unwrap() {
                if !is_chordal_outerplanar(&g) {
                    continue;
                }
                count += 1;
                total += 1;
                let c = classify(&g).unwrap();
                seen.insert((c.delta, c.triggering_condition != TriggeringCondition::Base));
            }
            tri_counts.insert(n, count);
        }
        assert_eq!(tri_counts[&6], 3);
        assert!(total > 100, "only {total} triangulations enumerated");
        for n in 1..=8 {
            for g in enumerate_outerplanar(n, None).unwrap() {
                if is_chordal_outerplanar(&g) {
                    classify(&g).unwrap();
                }
            }
        }
        for pair in [
            (4, false),
            (4, true),
            (5, false),
            (5, true),
            (6, false),
            (7, false),
        ] {
            assert!(seen.contains(&pair), "never saw delta/condition {pair:?}");
        }
        // The degree-6 witness has 12 vertices, so it cannot appear yet.
        assert!(!seen.contains(&(6, true)));
    }

    #[test]
    fn random_triangulations_classify_cleanly() {
        // Low targets get harder to sample as n grows: a triangulation
        // with maximum degree 4 is a rigid ladder, which rejection
        // sampling will not hit at this size. Such draws are skipped, and
        // the tail asserts that they stay rare.
        let mut sampled = 0usize;
        for delta in 4..=8 {
            for seed in 0..12 {
                let n = 12 + ((seed as usize * 3 + delta) % 9);
                let Ok(g) = random_chordal_outerplanar(n, delta, seed) else {
                    continue;
                };
                sampled += 1;
                let c = classify(&g).unwrap();
                assert_eq!(c.delta, delta);
                assert_eq!(c.predicted_chi, c.predicted_omega);
                assert!(c.predicted_ind == delta || c.predicted_ind == delta + 1);
            }
        }
        assert!(sampled >= 40, "generator rejected too often: {sampled}/60");
    }

    /// Weak duals without degree-2 vertices pin the graph down: at degree 5
    /// only the hat of the rigid ladder on 4 vertices, at degree 6 only
    /// hatted ladders and the double hat of the triangle.
    #[test]
    fn full_dual_catalogue_small() {
        let is_full = |g: &Graph| {
            let st = analyze(g).unwrap();
            let t = &st.duals[0];
            (0..t.len()).all(|x| t.adj[x].len() != 2)
        };
        let mut delta5 = Vec::new();
        let mut delta6 = Vec::new();
        for n in 3..=10 {
            for g in enumerate_biconnected_outerplanar(n, None).unwrap() {
                if !is_chordal_outerplanar(&g) || !is_full(&g) {
                    continue;
                }
                let st = analyze(&g).unwrap();
                for x in 0..st.duals[0].len() {
                    assert!(st.duals[0].adj[x].len() <= 3);
                }
                match g.max_degree() {
                    5 => delta5.push(g),
                    6 => delta6.push(g),
                    _ => {}
                }
            }
        }
        assert_eq!(delta5.len(), 1);
        assert!(are_isomorphic(&delta5[0], &f5()));
        assert_eq!(delta6.len(), 1);
        assert!(are_isomorphic(&delta6[0], &hat_rigid_ladder(5).unwrap()));
        assert!(is_full(&f6()));
        assert!(is_full(&hat_rigid_ladder(6).unwrap()));
        assert!(!is_full(&fan(6).unwrap()));
    }

    #[test]
    fn separator_rejects_out_of_scope_inputs() {
        match find_separator(&f4()) {
            Err(ChordalError::DegreeOutOfRange { delta: 4 }) => {}
            other => panic!("expected degree gate, got {other:?}"),
        }
        match find_separator(&fan(8).unwrap()) {
            Err(ChordalError::DegreeOutOfRange { delta: 8 }) => {}
            other => panic!("expected degree gate, got {other:?}"),
        }
        match find_separator(&cycle(4).unwrap()) {
            Err(ChordalError::NotChordal { .. }) => {}
            other => panic!("expected chordality gate, got {other:?}"),
        }
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        match find_separator(&k4) {
            Err(ChordalError::Outerplanarity(_)) => {}
            other => panic!("expected outerplanarity gate, got {other:?}"),
        }
        let f5 = f5();
        let mut pendant = Graph::empty(f5.n() + 1);
        for (a, b) in f5.edges() {
            pendant.add_edge(a, b);
        }
        pendant.add_edge(0, f5.n());
        match find_separator(&pendant) {
            Err(ChordalError::NotBiconnected) => {}
            other => panic!("expected biconnectivity gate, got {other:?}"),
        }
    }

    #[test]
    fn terminal_shapes_need_no_separator() {
        // Full weak duals.
        assert!(find_separator(&f5()).unwrap().is_none());
        assert!(find_separator(&hat_rigid_ladder(5).unwrap()).unwrap().is_none());
        // Complete squares: every fan is within distance 2 through the hub.
        assert!(find_separator(&fan(5).unwrap()).unwrap().is_none());
        assert!(find_separator(&fan(6).unwrap()).unwrap().is_none());
    }

    #[test]
    fn strip_separator_is_found_and_splits() {
        let g = strip7();
        let sep = find_separator(&g).unwrap().expect("strip has a separator");
        assert_eq!(sep.vertices, vec![0, 3, 4, 5]);
        assert_eq!(sep.h, 4);
        verify_separator(&g, &sep).unwrap();
        let parts = split_at_separator(&g, &sep).unwrap();
        assert_eq!(parts.left_vertices, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(parts.right_vertices, vec![0, 3, 4, 5, 6]);
        let budget = SearchBudget::default();
        let (kl, cl) = exact_chromatic(&square(&parts.left), budget).unwrap();
        let (kr, cr) = exact_chromatic(&square(&parts.right), budget).unwrap();
        assert_eq!((kl, kr), (6, 5));
        let merged = recombine_colorings(&g, &sep, &parts, &cl, &cr).unwrap();
        let (chi, _) = exact_chromatic(&square(&g), budget).unwrap();
        assert_eq!(merged.palette(), chi);
        assert_eq!(chi, 6);
        let (wl, _) = exact_clique(&square(&parts.left), budget).unwrap();
        let (wr, _) = exact_clique(&square(&parts.right), budget).unwrap();
        let (w, _) = exact_clique(&square(&g), budget).unwrap();
        assert_eq!(wl.max(wr), w);
    }

    #[test]
    fn bad_separators_are_rejected() {
        let g = strip7();
        let wrong_h = Separator {
            vertices: vec![0, 3, 4, 5],
            h: 3,
        };
        assert!(matches!(
            verify_separator(&g, &wrong_h),
            Err(ChordalError::InvalidSeparator { .. })
        ));
        let not_clique = Separator {
            vertices: vec![1, 6],
            h: 2,
        };
        assert!(matches!(
            verify_separator(&g, &not_clique),
            Err(ChordalError::InvalidSeparator { .. })
        ));
        let not_cutting = Separator {
            vertices: vec![0, 1, 2],
            h: 3,
        };
        assert!(matches!(
            verify_separator(&g, &not_cutting),
            Err(ChordalError::InvalidSeparator { .. })
        ));
    }

    #[test]
    fn eared_hatted_ladder_splits_and_recombines() {
        let base = hat_rigid_ladder(5).unwrap();
        let (a, b) = edge_with_degrees(&base, 2, 5);
        let g = with_ear(&base, a, b);
        assert_eq!(g.max_degree(), 6);
        assert_eq!(classify(&g).unwrap().predicted_chi, 7);
        let sep = find_separator(&g).unwrap().expect("ear breaks fullness");
        let parts = split_at_separator(&g, &sep).unwrap();
        assert!(parts.left.n() < g.n());
        assert!(parts.right.n() < g.n());
        let budget = SearchBudget::default();
        let (_, cl) = exact_chromatic(&square(&parts.left), budget).unwrap();
        let (_, cr) = exact_chromatic(&square(&parts.right), budget).unwrap();
        let merged = recombine_colorings(&g, &sep, &parts, &cl, &cr).unwrap();
        let (chi, _) = exact_chromatic(&square(&g), budget).unwrap();
        assert_eq!(merged.palette(), chi);
        let (wl, _) = exact_clique(&square(&parts.left), budget).unwrap();
        let (wr, _) = exact_clique(&square(&parts.right), budget).unwrap();
        let (w, _) = exact_clique(&square(&g), budget).unwrap();
        assert_eq!(wl.max(wr), w);
    }

    /// Over every biconnected chordal graph on up to 10 vertices with
    /// maximum degree 5 or 6: a separator is found unless the dual is full
    /// or the square is complete, and splitting plus recombination
    /// reproduces the exact chromatic and clique numbers of the square.
    #[test]
    fn exhaustive_separator_contract() {
        let budget = SearchBudget::default();
        let mut found = 0usize;
        let mut terminal = 0usize;
        for n in 6..=10 {
            for g in enumerate_biconnected_outerplanar(n, None).unwrap() {
                if !is_chordal_outerplanar(&g) || !(5..=6).contains(&g.max_degree()) {
                    continue;
                }
                match find_separator(&g).unwrap() {
                    Some(sep) => {
                        found += 1;
                        let parts = split_at_separator(&g, &sep).unwrap();
                        let (kl, cl) = exact_chromatic(&square(&parts.left), budget).unwrap();
                        let (kr, cr) = exact_chromatic(&square(&parts.right), budget).unwrap();
                        let merged = recombine_colorings(&g, &sep, &parts, &cl, &cr).unwrap();
                        let (chi, _) = exact_chromatic(&square(&g), budget).unwrap();
                        assert_eq!(merged.palette(), chi);
                        assert_eq!(kl.max(kr), chi);
                        let (wl, _) = exact_clique(&square(&parts.left), budget).unwrap();
                        let (wr, _) = exact_clique(&square(&parts.right), budget).unwrap();
                        let (w, _) = exact_clique(&square(&g), budget).unwrap();
                        assert_eq!(wl.max(wr), w);
                    }
                    None => {
                        terminal += 1;
                        let st = analyze(&g).unwrap();
                        let t = &st.duals[0];
                        let full = (0..t.len()).all(|x| t.adj[x].len() != 2);
                        let sq = square(&g);
                        let clique = sq.m() == g.n() * (g.n() - 1) / 2;
                        assert!(full || clique, "separator missing on {:?}", g.edges());
                    }
                }
            }
        }
        assert!(found > 20, "too few separators exercised: {found}");
        assert!(terminal > 2, "too few terminal shapes exercised: {terminal}");
    }

    #[test]
    fn random_separator_roundtrip() {
        let budget = SearchBudget::default();
        let mut found = 0usize;
        for seed in 0..30u64 {
            let delta = 5 + (seed as usize % 2);
            let n = 12 + (seed as usize % 9);
            let g = random_chordal_outerplanar(n, delta, seed).unwrap();
            match find_separator(&g).unwrap() {
                Some(sep) => {
                    found += 1;
                    let parts = split_at_separator(&g, &sep).unwrap();
                    let (kl, cl) = exact_chromatic(&square(&parts.left), budget).unwrap();
                    let (kr, cr) = exact_chromatic(&square(&parts.right), budget).unwrap();
                    let merged = recombine_colorings(&g, &sep, &parts, &cl, &cr).unwrap();
                    let (chi, _) = exact_chromatic(&square(&g), budget).unwrap();
                    assert_eq!(merged.palette(), chi);
                    assert_eq!(kl.max(kr), chi);
                }
                None => {
                    let sq = square(&g);
                    let st = analyze(&g).unwrap();
                    let t = &st.duals[0];
                    let full = (0..t.len()).all(|x| t.adj[x].len() != 2);
                    assert!(full || sq.m() == g.n() * (g.n() - 1) / 2);
                }
            }
        }
        assert!(found > 10, "random instances almost never split: {found}");
    }
}
