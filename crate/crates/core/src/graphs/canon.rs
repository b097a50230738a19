//! Canonical labeling by exhaustive search over vertex orders with prefix
//! pruning, and isomorph-free generation built on top of it.
//!
//! The canonical form of a graph is the relabeling that minimizes the
//! upper-triangle bit string (column-major, as in graph6). The search walks
//! vertex positions left to right; at each position it only follows
//! candidates whose adjacency column into the placed prefix does not exceed
//! the best known column, so whole orbits of bad prefixes are cut early.

use super::{write_graph6, Graph, GraphError, MAX_CANON_VERTICES, MAX_ENUM_VERTICES};

/// A graph in canonical vertex order together with its certificate, the
/// graph6 string of that canonical form. Two graphs are isomorphic exactly
/// when their certs are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGraph {
    pub graph: Graph,
    pub cert: String,
}

struct MinSearch<'a> {
    g: &'a Graph,
    n: usize,
    /// Columns of the best complete labeling found so far; u32::MAX marks
    /// positions not yet fixed by any completed branch.
    best_cols: Vec<u32>,
    perm: Vec<usize>,
    used: u64,
    best_perm: Vec<usize>,
}

impl MinSearch<'_> {
    fn run(g: &Graph) -> Vec<usize> {
        let n = g.n();
        let mut s = MinSearch {
            g,
            n,
            best_cols: vec![u32::MAX; n],
            perm: vec![0; n],
            used: 0,
            best_perm: vec![0; n],
        };
        s.extend(0);
        s.best_perm
    }

    /// Invariant: the columns of perm[0..pos] equal best_cols[0..pos].
    fn extend(&mut self, pos: usize) {
        if pos == self.n {
            // every column matched or improved the best, so this labeling
            // is the minimum seen so far
            self.best_perm.copy_from_slice(&self.perm);
            return;
        }
        let mut cands: Vec<(u32, usize, usize)> = Vec::with_capacity(self.n - pos);
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut col = 0u32;
            for i in 0..pos {
                col = col << 1 | self.g.has_edge(self.perm[i], v) as u32;
            }
            cands.push((col, self.g.degree(v), v));
        }
        // ascending column order is what makes the break below sound; the
        // degree is only a tie-break heuristic that tends to reach small
        // codes sooner
        cands.sort_unstable();
        for (col, _, v) in cands {
            if col > self.best_cols[pos] {
                break;
            }
            if col < self.best_cols[pos] {
                self.best_cols[pos] = col;
                for c in self.best_cols[pos + 1..].iter_mut() {
                    *c = u32::MAX;
                }
            }
            self.perm[pos] = v;
            self.used |= 1 << v;
            self.extend(pos + 1);
            self.used &= !(1 << v);
        }
    }
}

/// Canonical form of `g`: the relabeled copy whose adjacency bit string is
/// lexicographically minimal over all vertex orders.
pub fn canonical_form(g: &Graph) -> Result<CanonicalGraph, GraphError> {
    canonical_form_with_map(g).map(|(cg, _)| cg)
}

/// Canonical form plus the relabeling that produced it: `map[pos]` is the
/// original vertex sitting at canonical position `pos`, so the returned
/// graph equals `g.relabeled(&map)`.
pub fn canonical_form_with_map(g: &Graph) -> Result<(CanonicalGraph, Vec<usize>), GraphError> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(GraphError::TooLargeForCanonical { n: g.n() });
    }
    let map = MinSearch::run(g);
    let graph = g.relabeled(&map);
    let cert = write_graph6(&graph);
    Ok((CanonicalGraph { graph, cert }, map))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(canonical_form(a)?.cert == canonical_form(b)?.cert)
}

/// True iff the identity labeling of `g` is already the canonical one, i.e.
/// no vertex order yields a strictly smaller adjacency bit string.
pub(crate) fn is_canonical_labeling(g: &Graph) -> bool {
    let n = g.n();
    let mut own = vec![0u32; n];
    for j in 0..n {
        let mut col = 0u32;
        for i in 0..j {
            col = col << 1 | g.has_edge(i, j) as u32;
        }
        own[j] = col;
    }
    let mut perm = vec![0usize; n];
    !smaller_labeling_exists(g, &own, &mut perm, 0, 0)
}

fn smaller_labeling_exists(
    g: &Graph,
    own: &[u32],
    perm: &mut [usize],
    used: u64,
    pos: usize,
) -> bool {
    if pos == own.len() {
        return false;
    }
    let mut cands: Vec<(u32, usize)> = Vec::with_capacity(own.len() - pos);
    for v in 0..own.len() {
        if used >> v & 1 == 1 {
            continue;
        }
        let mut col = 0u32;
        for i in 0..pos {
            col = col << 1 | g.has_edge(perm[i], v) as u32;
        }
        cands.push((col, v));
    }
    cands.sort_unstable();
    for (col, v) in cands {
        if col > own[pos] {
            break;
        }
        if col < own[pos] {
            // the prefix so far matched own exactly, so this branch ends in
            // a strictly smaller bit string no matter how it is completed
            return true;
        }
        perm[pos] = v;
        if smaller_labeling_exists(g, own, perm, used | 1 << v, pos + 1) {
            return true;
        }
    }
    false
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices, each in canonical order, sorted by cert.
///
/// Works by orderly generation: canonically labeled graphs on m vertices
/// are extended by one new last vertex in all 2^m ways and only extensions
/// that are again canonically labeled survive. Dropping the last vertex of
/// a canonically labeled graph leaves a canonically labeled graph (its
/// columns are a prefix of the larger bit string), so every class is
/// reached, and each labeled graph arises from exactly one (parent, subset)
/// pair, so no class is emitted twice.
pub fn enumerate_graphs(n: usize) -> Result<Vec<CanonicalGraph>, GraphError> {
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(GraphError::OrderOutOfRange {
            n,
            max: MAX_ENUM_VERTICES,
        });
    }
    let mut layer = vec![Graph::new(1)];
    for m in 2..=n {
        let mut next = Vec::new();
        for g in &layer {
            for s in 0u64..1 << (m - 1) {
                let mut h = Graph::new(m);
                for (u, w) in g.edges() {
                    h.add_edge(u, w);
                }
                for i in 0..m - 1 {
                    if s >> i & 1 == 1 {
                        h.add_edge(i, m - 1);
                    }
                }
                if is_canonical_labeling(&h) {
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<CanonicalGraph> = layer
        .into_iter()
        .map(|graph| {
            let cert = write_graph6(&graph);
            CanonicalGraph { graph, cert }
        })
        .collect();
    out.sort_by(|a, b| a.cert.cmp(&b.cert));
    Ok(out)
}
