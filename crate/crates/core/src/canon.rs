//! Canonical forms for small graphs (n <= 16): the lexicographically
//! smallest upper-triangle adjacency bitstring over all vertex orderings
//! compatible with iterated degree refinement. Two graphs get the same form
//! iff they are isomorphic, which is what the enumeration uses to
//! deduplicate up to isomorphism.

use crate::graph::Graph;

pub const MAX_CANON: usize = 16;

/// Iterated refinement: vertices keep splitting into classes by (class,
/// sorted multiset of neighbor classes) until stable. Returns a class id
/// per vertex; ids are ranks of the class keys, so they are
/// isomorphism-invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = keys
            .drain(..)
            .map(|k| sorted.binary_search(&k).unwrap())
            .collect();
        if next == color {
            return color;
        }
        color = next;
    }
}

/// Canonical adjacency encoding. Bits are emitted placement by placement:
/// putting a vertex at position p appends its adjacency to positions
/// 0..p, and earlier bits are more significant.
pub fn canonical_form(g: &Graph) -> u128 {
    let n = g.n();
    assert!(n <= MAX_CANON, "canonical form limited to {MAX_CANON} vertices");
    if n <= 1 {
        return 0;
    }
    let classes = refine(g);
    // cell_of_position[p] = refinement class whose members occupy position p.
    let mut class_sizes = std::collections::BTreeMap::new();
    for &c in &classes {
        *class_sizes.entry(c).or_insert(0usize) += 1;
    }
    let mut cell_of_position = Vec::with_capacity(n);
    for (&c, &s) in &class_sizes {
        cell_of_position.extend(std::iter::repeat(c).take(s));
    }

    let total_bits = n * (n - 1) / 2;
    struct Search<'a> {
        g: &'a Graph,
        classes: &'a [usize],
        cell_of_position: &'a [usize],
        perm: Vec<usize>, // position -> original vertex
        used: Vec<bool>,
        best: u128,
        have_best: bool,
        total_bits: usize,
    }
    impl Search<'_> {
        fn go(&mut self, prefix: u128, bits: usize) {
            let p = self.perm.len();
            let n = self.g.n();
            if p == n {
                if !self.have_best || prefix < self.best {
                    self.best = prefix;
                    self.have_best = true;
                }
                return;
            }
            let want = self.cell_of_position[p];
            for v in 0..n {
                if self.used[v] || self.classes[v] != want {
                    continue;
                }
                let mut np = prefix;
                for q in 0..p {
                    np = (np << 1) | u128::from(self.g.has_edge(self.perm[q], v));
                }
                let nbits = bits + p;
                // Prefix pruning: compare against the best value's prefix.
                if self.have_best {
                    let best_prefix = self.best >> (self.total_bits - nbits);
                    if np > best_prefix {
                        continue;
                    }
                }
                self.perm.push(v);
                self.used[v] = true;
                self.go(np, nbits);
                self.perm.pop();
                self.used[v] = false;
            }
        }
    }
    let mut s = Search {
        g,
        classes: &classes,
        cell_of_position: &cell_of_position,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        best: 0,
        have_best: false,
        total_bits,
    };
    s.go(0, 0);
    debug_assert!(s.have_best);
    s.best
}

/// Sort key that distinguishes non-isomorphic graphs and equates isomorphic
/// ones: (n, m, canonical form).
pub fn canonical_key(g: &Graph) -> (usize, usize, u128) {
    (g.n(), g.m(), canonical_form(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}
