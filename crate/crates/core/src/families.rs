//! Named graph families and generators: paths, cycles, rigid ladders, fans,
//! hatted graphs, the tight examples for the square-coloring bounds, fusion
//! of outerplanar graphs along outer edges, exhaustive enumeration, and
//! seeded random instances.

use crate::canon::canonical_form;
use crate::graph::{is_biconnected, Graph, Vertex};
use crate::outerplanar::{
    analyze, infinite_face_edges, is_outerplanar, outer_embedding, NotOuterplanar,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

#[derive(Debug, thiserror::Error)]
pub enum FamilyError {
    #[error("{family} requires {requirement}, got {got}")]
    BadParameter {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("{family} requires a biconnected graph")]
    NotBiconnected { family: &'static str },
    #[error("fuse: edge ({u}, {v}) is not in the graph")]
    MissingEdge { u: Vertex, v: Vertex },
    #[error("fuse: edge ({u}, {v}) does not bound the infinite face")]
    EdgeNotOuter { u: Vertex, v: Vertex },
    #[error("fuse: vertex {vertex} would reach degree {degree}, over the cap {cap}")]
    DegreeCapExceeded {
        vertex: Vertex,
        degree: usize,
        cap: usize,
    },
    #[error("gave up after {attempts} attempts: no instance with maximum degree exactly {delta}")]
    RetriesExhausted { attempts: usize, delta: usize },
    #[error(transparent)]
    Outerplanarity(#[from] NotOuterplanar),
}

fn bad(family: &'static str, requirement: &'static str, got: usize) -> FamilyError {
    FamilyError::BadParameter {
        family,
        requirement,
        got,
    }
}

/// Path on `k` vertices, edges `i -- i+1`.
pub fn path(k: usize) -> Result<Graph, FamilyError> {
    if k < 1 {
        return Err(bad("path", "k >= 1", k));
    }
    let edges: Vec<(Vertex, Vertex)> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edge_list(k, &edges).unwrap())
}

/// Cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(bad("cycle", "k >= 3", k));
    }
    let edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Ok(Graph::from_edge_list(k, &edges).unwrap())
}

/// Fan: a hub (vertex 0) joined to every vertex of the path `1..=k`.
/// Its square is the complete graph on `k + 1` vertices.
pub fn fan(k: usize) -> Result<Graph, FamilyError> {
    if k < 2 {
        return Err(bad("fan", "k >= 2 path vertices", k));
    }
    let mut edges: Vec<(Vertex, Vertex)> = (1..=k).map(|i| (0, i)).collect();
    edges.extend((1..k).map(|i| (i, i + 1)));
    Ok(Graph::from_edge_list(k + 1, &edges).unwrap())
}

/// Rigid ladder RL_n: the maximal outerplanar graph whose weak dual is a
/// path and whose triangles alternate sides. Even n uses two rails
/// u_1..u_{n/2} (even ids, in order) and v_1..v_{n/2} (odd ids): rungs
/// u_i v_i, rail edges, plus diagonals u_i v_{i+1}. Odd n is
/// RL_{n+1} minus u_{(n+1)/2} (id n-1), relabeled densely. RL_2 is an
/// edge, RL_3 a triangle, RL_4 a 4-cycle with one diagonal.
pub fn rigid_ladder(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(bad("rigid_ladder", "n >= 2", n));
    }
    if n % 2 == 1 {
        let bigger = rigid_ladder(n + 1)?;
        let (g, _) = bigger.remove_vertex(n - 1);
        return Ok(g);
    }
    let half = n / 2;
    let u = |i: usize| 2 * (i - 1); // i in 1..=half
    let v = |i: usize| 2 * (i - 1) + 1;
    let mut edges = Vec::new();
    for i in 1..=half {
        edges.push((u(i), v(i)));
        if i < half {
            edges.push((u(i), u(i + 1)));
            edges.push((v(i), v(i + 1)));
            edges.push((u(i), v(i + 1)));
        }
    }
    Ok(Graph::from_edge_list(n, &edges).unwrap())
}

/// Hat operator: one new degree-2 vertex per outer-cycle edge, joined to
/// both endpoints. The vertex for the i-th edge of the canonical outer
/// cycle gets id n + i, so the output has 2n vertices and maximum degree
/// exactly two more than the input's.
pub fn hat(g: &Graph) -> Result<Graph, FamilyError> {
    if !is_biconnected(g) {
        return Err(FamilyError::NotBiconnected { family: "hat" });
    }
    let emb = outer_embedding(g)?;
    let n = g.n();
    let mut edges = g.edges();
    for (i, &(u, v)) in emb.cycle_edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    let h = Graph::from_edge_list(2 * n, &edges).unwrap();
    assert_eq!(h.max_degree(), g.max_degree() + 2);
    assert!(is_outerplanar(&h));
    Ok(h)
}

/// F4, the hat of the triangle: 6 vertices, maximum degree 4, square K6.
pub fn f4() -> Graph {
    hat(&cycle(3).unwrap()).unwrap()
}

/// F5, the hat of the rigid 4-ladder: 8 vertices, maximum degree 5.
pub fn f5() -> Graph {
    hat(&rigid_ladder(4).unwrap()).unwrap()
}

/// F6, the hat of F4: 12 vertices, maximum degree 6. Numbering: inner
/// triangle 0..2, middle hats 3 (on edge 01), 4 (on 12), 5 (on 02), outer
/// hats 6..11 along the outer cycle 0-3-1-4-2-5.
pub fn f6() -> Graph {
    hat(&f4()).unwrap()
}

/// Hat of the rigid n-ladder, on 2n vertices.
pub fn hat_rigid_ladder(n: usize) -> Result<Graph, FamilyError> {
    hat(&rigid_ladder(n)?)
}

/// Vertex sequence that makes first-fit spend 8 colors on the square of
/// F6, one more than its chromatic number.
pub fn f6_adversarial_order() -> Vec<Vertex> {
    vec![0, 1, 2, 3, 4, 5, 11, 10, 9, 8, 7, 6]
}

/// Which endpoints of two fused edges are identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuseOrientation {
    /// e1.0 with e2.0, e1.1 with e2.1.
    Aligned,
    /// e1.0 with e2.1, e1.1 with e2.0.
    Crossed,
}

/// Glues `g2` onto `g1` by identifying edge `e2` with edge `e1`. The shared
/// edge is kept once, so a merged vertex ends at the sum of its two degrees
/// minus one. Both edges must bound the infinite face of their graph, which
/// is what keeps the result outerplanar. Vertices of `g2` other than the
/// endpoints of `e2` get ids from g1.n() up, in increasing original order.
pub fn fuse(
    g1: &Graph,
    e1: (Vertex, Vertex),
    g2: &Graph,
    e2: (Vertex, Vertex),
    orientation: FuseOrientation,
    delta_cap: Option<usize>,
) -> Result<Graph, FamilyError> {
    let norm = |e: (Vertex, Vertex)| (e.0.min(e.1), e.0.max(e.1));
    for (g, e) in [(g1, e1), (g2, e2)] {
        if e.0 >= g.n() || e.1 >= g.n() || !g.has_edge(e.0, e.1) {
            return Err(FamilyError::MissingEdge { u: e.0, v: e.1 });
        }
        let s = analyze(g)?;
        if !infinite_face_edges(&s).contains(&norm(e)) {
            return Err(FamilyError::EdgeNotOuter { u: e.0, v: e.1 });
        }
    }
    let (a1, b1) = match orientation {
        FuseOrientation::Aligned => e1,
        FuseOrientation::Crossed => (e1.1, e1.0),
    };
    let mut map = vec![usize::MAX; g2.n()];
    map[e2.0] = a1;
    map[e2.1] = b1;
    let mut next = g1.n();
    for v in 0..g2.n() {
        if map[v] == usize::MAX {
            map[v] = next;
            next += 1;
        }
    }
    let mut eset: BTreeSet<(Vertex, Vertex)> = g1.edges().into_iter().collect();
    for (u, v) in g2.edges() {
        eset.insert(norm((map[u], map[v])));
    }
    let edges: Vec<(Vertex, Vertex)> = eset.into_iter().collect();
    let fused = Graph::from_edge_list(next, &edges).unwrap();
    if let Some(cap) = delta_cap {
        for v in fused.vertices() {
            if fused.degree(v) > cap {
                return Err(FamilyError::DegreeCapExceeded {
                    vertex: v,
                    degree: fused.degree(v),
                    cap,
                });
            }
        }
    }
    assert!(is_outerplanar(&fused));
    Ok(fused)
}

/// Named family selector, as exposed by the generator front-ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Fan(usize),
    RigidLadder(usize),
    Hat(Box<FamilySpec>),
    HatRigidLadder(usize),
    F4,
    F5,
    F6,
    G10,
}

impl FamilySpec {
    pub fn realize(&self) -> Result<Graph, FamilyError> {
        let g = match self {
            FamilySpec::Path(k) => path(*k)?,
            FamilySpec::Cycle(k) => cycle(*k)?,
            FamilySpec::Fan(k) => fan(*k)?,
            FamilySpec::RigidLadder(n) => rigid_ladder(*n)?,
            FamilySpec::Hat(inner) => hat(&inner.realize()?)?,
            FamilySpec::HatRigidLadder(n) => hat_rigid_ladder(*n)?,
            FamilySpec::F4 => f4(),
            FamilySpec::F5 => f5(),
            FamilySpec::F6 => f6(),
            FamilySpec::G10 => g10(),
        };
        assert!(is_outerplanar(&g));
        Ok(g)
    }
}

/// Two chords in cycle-position form interleave.
fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let ((i, j), (k, l)) = (a, b);
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

fn graph_from_chords(n: usize, chords: &[(usize, usize)]) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend_from_slice(chords);
    Graph::from_edge_list(n, &edges).unwrap()
}

fn chord_set_image(
    n: usize,
    chords: &[(usize, usize)],
    rot: usize,
    reflect: bool,
) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = chords
        .iter()
        .map(|&(a, b)| {
            let (x, y) = if reflect {
                ((n - a + rot) % n, (n - b + rot) % n)
            } else {
                ((a + rot) % n, (b + rot) % n)
            };
            (x.min(y), x.max(y))
        })
        .collect();
    v.sort_unstable();
    v
}

fn is_canonical_chord_set(n: usize, chords: &[(usize, usize)]) -> bool {
    let mut this: Vec<(usize, usize)> = chords.to_vec();
    this.sort_unstable();
    for rot in 0..n {
        for reflect in [false, true] {
            if rot == 0 && !reflect {
                continue;
            }
            if chord_set_image(n, chords, rot, reflect) < this {
                return false;
            }
        }
    }
    true
}

/// All biconnected outerplanar graphs on n vertices, one per isomorphism
/// class: the outer cycle 0..n-1 plus every non-crossing chord set that is
/// least among its rotations and reflections. `delta_cap` prunes by
/// maximum degree during generation.
pub fn enumerate_biconnected_outerplanar(
    n: usize,
    delta_cap: Option<usize>,
) -> Result<Vec<Graph>, FamilyError> {
    if !(3..=12).contains(&n) {
        return Err(bad("enumerate_biconnected_outerplanar", "3 <= n <= 12", n));
    }
    let cap = delta_cap.unwrap_or(usize::MAX);
    if cap < 2 {
        return Ok(Vec::new());
    }
    let mut cands: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            cands.push((i, j));
        }
    }

    fn rec(
        idx: usize,
        n: usize,
        cap: usize,
        cands: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        deg: &mut [usize],
        out: &mut Vec<Graph>,
    ) {
        if idx == cands.len() {
            if is_canonical_chord_set(n, chosen) {
                out.push(graph_from_chords(n, chosen));
            }
            return;
        }
        rec(idx + 1, n, cap, cands, chosen, deg, out);
        let c = cands[idx];
        if deg[c.0] < cap && deg[c.1] < cap && chosen.iter().all(|&p| !chords_cross(p, c)) {
            chosen.push(c);
            deg[c.0] += 1;
            deg[c.1] += 1;
            rec(idx + 1, n, cap, cands, chosen, deg, out);
            deg[c.0] -= 1;
            deg[c.1] -= 1;
            chosen.pop();
        }
    }

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut deg = vec![2usize; n];
    rec(0, n, cap, &cands, &mut chosen, &mut deg, &mut out);
    Ok(out)
}

/// Every outerplanar graph on exactly n vertices up to isomorphism,
/// disconnected ones included, grown one vertex at a time with canonical
/// form deduplication.
pub fn enumerate_outerplanar(n: usize, delta_cap: Option<usize>) -> Result<Vec<Graph>, FamilyError> {
    if n > 9 {
        return Err(bad("enumerate_outerplanar", "n <= 9", n));
    }
    let cap = delta_cap.unwrap_or(usize::MAX);
    let mut reps = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &reps {
            let base = g.edges();
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = base.clone();
                for b in 0..(k - 1) {
                    if mask >> b & 1 == 1 {
                        edges.push((b, k - 1));
                    }
                }
                let h = Graph::from_edge_list(k, &edges).unwrap();
                // Degrees never shrink while growing, so capped graphs only
                // arise from capped intermediates.
                if h.max_degree() > cap || !is_outerplanar(&h) {
                    continue;
                }
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        reps = next;
    }
    Ok(reps)
}

/// Seeded random biconnected outerplanar graph with maximum degree exactly
/// `delta_target`: a random outer cycle with random non-crossing chords,
/// each insertion capped at the target. Attempts that end below the target
/// resample; late attempts plant a full fan at one position first, so
/// termination does not depend on luck.
pub fn random_outerplanar(n: usize, delta_target: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("random_outerplanar", "n >= 3", n));
    }
    if delta_target < 2 {
        return Err(bad("random_outerplanar", "delta_target >= 2", delta_target));
    }
    if delta_target > n - 1 {
        return Err(bad("random_outerplanar", "delta_target <= n - 1", delta_target));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cands: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            cands.push((i, j));
        }
    }
    let attempts = 64;
    for attempt in 0..attempts {
        let mut perm: Vec<Vertex> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut deg = vec![2usize; n];
        let mut chords: Vec<(usize, usize)> = Vec::new();
        if attempt >= 8 && delta_target > 2 {
            for t in 2..delta_target {
                chords.push((0, t));
                deg[0] += 1;
                deg[t] += 1;
            }
        }
        cands.shuffle(&mut rng);
        let density: f64 = rng.gen_range(0.2..0.95);
        for &c in &cands {
            if chords.contains(&c) {
                continue;
            }
            if deg[c.0] >= delta_target || deg[c.1] >= delta_target {
                continue;
            }
            if chords.iter().any(|&p| chords_cross(p, c)) {
                continue;
            }
            if !rng.gen_bool(density) {
                continue;
            }
            deg[c.0] += 1;
            deg[c.1] += 1;
            chords.push(c);
        }
        if deg.iter().copied().max().unwrap() != delta_target {
            continue;
        }
        let mut edges: Vec<(Vertex, Vertex)> =
            (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
        edges.extend(chords.iter().map(|&(i, j)| (perm[i], perm[j])));
        let g = Graph::from_edge_list(n, &edges).unwrap();
        assert!(is_outerplanar(&g));
        return Ok(g);
    }
    Err(FamilyError::RetriesExhausted {
        attempts,
        delta: delta_target,
    })
}

fn triangulate_random(poly: &[usize], rng: &mut ChaCha8Rng, chords: &mut Vec<(usize, usize)>) {
    if poly.len() < 4 {
        return;
    }
    let last = poly.len() - 1;
    // Apexes at the ends keep degrees low; interior apexes add variety.
    let k = if rng.gen_bool(0.6) {
        if rng.gen_bool(0.5) {
            1
        } else {
            last - 1
        }
    } else {
        rng.gen_range(1..last)
    };
    if k > 1 {
        chords.push((poly[0].min(poly[k]), poly[0].max(poly[k])));
    }
    if k < last - 1 {
        chords.push((poly[k].min(poly[last]), poly[k].max(poly[last])));
    }
    triangulate_random(&poly[..=k], rng, chords);
    triangulate_random(&poly[k..], rng, chords);
}

/// Seeded random maximal chordal outerplanar graph (a triangulated
/// polygon) with maximum degree exactly `delta`. A fan planted at one
/// position fixes the maximum, a guard chord walls the apex off, and the
/// remaining region is triangulated at random apexes; attempts where the
/// free region overshoots the target resample.
pub fn random_chordal_outerplanar(n: usize, delta: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("random_chordal_outerplanar", "n >= 3", n));
    }
    if n == 3 {
        return if delta == 2 {
            cycle(3)
        } else {
            Err(bad("random_chordal_outerplanar", "delta = 2 when n = 3", delta))
        };
    }
    if delta < 3 {
        return Err(bad("random_chordal_outerplanar", "delta >= 3 when n >= 4", delta));
    }
    if delta > n - 1 {
        return Err(bad("random_chordal_outerplanar", "delta <= n - 1", delta));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = 2000;
    for _ in 0..attempts {
        let mut chords: Vec<(usize, usize)> = (2..delta).map(|t| (0, t)).collect();
        if n - 1 > delta {
            chords.push((delta - 1, n - 1));
        }
        let region: Vec<usize> = (delta - 1..n).collect();
        triangulate_random(&region, &mut rng, &mut chords);
        let mut perm: Vec<Vertex> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut edges: Vec<(Vertex, Vertex)> =
            (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
        edges.extend(chords.iter().map(|&(i, j)| (perm[i], perm[j])));
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.max_degree() != delta {
            continue;
        }
        assert_eq!(g.m(), 2 * n - 3);
        assert!(is_outerplanar(&g));
        return Ok(g);
    }
    Err(FamilyError::RetriesExhausted { attempts, delta })
}

/// Exhaustive profile search behind `find_g10`: biconnected outerplanar on
/// 10 vertices, maximum degree 5, square chromatic number 7, at least four
/// outer edges whose endpoint degrees are 2 and 3. One graph per
/// isomorphism class, least canonical form first.
pub fn g10_profile_hits() -> Vec<Graph> {
    let mut hits: Vec<(u128, Graph)> = Vec::new();
    for g in enumerate_biconnected_outerplanar(10, Some(5)).unwrap() {
        if g.max_degree() != 5 {
            continue;
        }
        let deg23 = (0..10)
            .filter(|&i| {
                let (u, v) = (i, (i + 1) % 10);
                let lo = g.degree(u).min(g.degree(v));
                let hi = g.degree(u).max(g.degree(v));
                (lo, hi) == (2, 3)
            })
            .count();
        if deg23 < 4 {
            continue;
        }
        let sq = crate::power::square(&g);
        let (chi, _) = crate::power::exact_chromatic(&sq, crate::power::SearchBudget::default())
            .expect("10-vertex square search stays within budget");
        if chi != 7 {
            continue;
        }
        let form = canonical_form(&g);
        if hits.iter().all(|(f, _)| *f != form) {
            hits.push((form, g));
        }
    }
    hits.sort_by_key(|(f, _)| *f);
    hits.into_iter().map(|(_, g)| g).collect()
}

/// The least-canonical-form hit of the 10-vertex profile search. Panics if
/// the search comes up empty.
pub fn find_g10() -> Graph {
    let hits = g10_profile_hits();
    assert!(!hits.is_empty(), "no 10-vertex graph fits the profile");
    hits.into_iter().next().unwrap()
}

/// The frozen 10-vertex tight example, as found once by `find_g10`.
pub fn g10() -> Graph {
    crate::io::parse_edge_list(include_str!("../data/g10.edgelist")).unwrap()
}

#[cfg(test)]
mod basic_tests {
    use super::*;

    #[test]
    fn path_and_cycle_shapes() {
        let p = path(5).unwrap();
        assert_eq!((p.n(), p.m()), (5, 4));
        assert_eq!(p.degree(0), 1);
        let c = cycle(6).unwrap();
        assert_eq!((c.n(), c.m()), (6, 6));
        assert!(c.vertices().all(|v| c.degree(v) == 2));
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn fan_square_is_complete() {
        let f = fan(6).unwrap();
        assert_eq!((f.n(), f.m()), (7, 11));
        assert_eq!(f.degree(0), 6);
        let sq = crate::power::square(&f);
        assert_eq!(sq.m(), 7 * 6 / 2);
    }

    #[test]
    fn rigid_ladder_small_cases() {
        let rl2 = rigid_ladder(2).unwrap();
        assert_eq!((rl2.n(), rl2.m()), (2, 1));
        let rl3 = rigid_ladder(3).unwrap();
        assert_eq!(rl3.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let rl4 = rigid_ladder(4).unwrap();
        assert_eq!(rl4.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
        assert_eq!(rl4.max_degree(), 3);
    }

    #[test]
    fn rigid_ladder_counts_and_degrees() {
        for n in 2..=12 {
            let g = rigid_ladder(n).unwrap();
            assert_eq!(g.n(), n);
            // Maximal outerplanar: m = 2n - 3.
            assert_eq!(g.m(), 2 * n - 3, "RL_{n}");
            if n >= 5 {
                assert_eq!(g.max_degree(), 4, "RL_{n}");
            }
        }
    }

    #[test]
    fn odd_ladder_is_even_ladder_minus_last_upper_vertex() {
        let rl5 = rigid_ladder(5).unwrap();
        let rl6 = rigid_ladder(6).unwrap();
        let (expect, _) = rl6.remove_vertex(4);
        assert_eq!(rl5, expect);
        assert_eq!(rl5.m(), 7);
        // The two ladder ends stay degree 2.
        assert_eq!(rl5.degree(1), 2);
        assert_eq!(rl5.degree(4), 2);
        assert_eq!(rl5.max_degree(), 4);
    }
}
