//! Small brute-force reference implementations. Deliberately naive and
//! independent of the production solvers in `power`, so the two can be
//! cross-checked on small inputs.

use crate::graph::{Graph, Vertex};

/// Chromatic number by exhaustive color assignment in vertex-id order.
/// Intended for n <= 10 or so.
pub fn chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    fn feasible(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 1..=k {
            if g.neighbors(v).all(|w| colors[w] != c) {
                colors[v] = c;
                if feasible(g, k, colors, v + 1) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        if feasible(g, k, &mut colors, 0) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

/// Clique number by subset enumeration over bitmasks. Requires n <= 20.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "clique oracle limited to 20 vertices");
    if n == 0 {
        return 0;
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect();
    let mut is_clique = vec![false; 1 << n];
    is_clique[0] = true;
    let mut best = 0usize;
    for s in 1usize..(1 << n) {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        is_clique[s] = is_clique[rest] && (rest as u32 & !adj[v]) == 0;
        if is_clique[s] {
            best = best.max(s.count_ones() as usize);
        }
    }
    best
}

/// Degeneracy as its definition states it: the maximum over all induced
/// subgraphs of the minimum degree. Requires n <= 16.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "degeneracy oracle limited to 16 vertices");
    let mut best = 0usize;
    for s in 1usize..(1 << n) {
        let members: Vec<Vertex> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let mut min_deg = usize::MAX;
        for &v in &members {
            let d = g.neighbors(v).filter(|&w| s >> w & 1 == 1).count();
            min_deg = min_deg.min(d);
        }
        best = best.max(min_deg);
    }
    best
}

/// Chordality by maximum cardinality search. The reverse of an MCS order
/// is a perfect elimination order exactly on chordal graphs; the order is
/// checked by the parent test, where the later neighbors of each vertex
/// must all be adjacent to the earliest of them.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .unwrap();
        numbered[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    order.reverse();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<Vertex> = g.neighbors(v).filter(|&w| pos[w] > i).collect();
        if let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) {
            for &w in &later {
                if w != p && !g.has_edge(p, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimum number of cliques covering all vertices, by subset dynamic
/// programming. Requires n <= 16.
pub fn clique_cover_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "clique cover oracle limited to 16 vertices");
    if n == 0 {
        return 0;
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect();
    let full = (1usize << n) - 1;
    let is_clique = |s: usize| -> bool {
        let mut t = s;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            t &= t - 1;
            if (t as u32) & !adj[v] != 0 {
                return false;
            }
        }
        true
    };
    let mut cover = vec![usize::MAX; full + 1];
    cover[0] = 0;
    for s in 1usize..=full {
        let v = s.trailing_zeros() as usize;
        // Enumerate subsets of s that contain v and form a clique.
        let rest = s & !(1 << v);
        let mut t = rest;
        loop {
            let cand = t | (1 << v);
            if is_clique(cand) && cover[s & !cand] != usize::MAX {
                cover[s] = cover[s].min(cover[s & !cand] + 1);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
    }
    cover[full]
}
