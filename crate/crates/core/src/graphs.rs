//! Simple graphs on up to 64 vertices stored as per-vertex adjacency
//! bitsets, plus exact induced-subgraph density. Canonical forms,
//! isomorph-free enumeration and the graph6 codec live in submodules and are
//! re-exported here.

mod canon;
mod graph6;

pub use canon::{
    are_isomorphic, canonical_form, canonical_form_with_map, enumerate_graphs, CanonicalGraph,
};
pub use graph6::{parse_graph6, write_graph6};

use crate::rational::binomial;
use num::{BigRational, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub const MAX_VERTICES: usize = 64;
/// Canonical forms compare upper-triangle bit strings packed into `u128`,
/// which caps the order at 16; 12 is plenty for everything built on top and
/// keeps the search space sane.
pub const MAX_CANON_VERTICES: usize = 12;
/// Largest order the enumerator will attempt.
pub const MAX_ENUM_VERTICES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    OrderOutOfRange { n: usize, max: usize },
    TooLargeForCanonical { n: usize },
    EmptyVertexSet,
    DuplicateVertex { v: usize },
    VertexOutOfRange { v: usize, n: usize },
    EmptyGraph6,
    BadGraph6Header { byte: u8 },
    Graph6OrderUnsupported,
    BadGraph6Char { pos: usize, byte: u8 },
    Graph6Truncated { expected: usize, got: usize },
    Graph6TrailingBytes { extra: usize },
    Graph6Padding,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OrderOutOfRange { n, max } => {
                write!(f, "vertex count {n} outside supported range 1..={max}")
            }
            GraphError::TooLargeForCanonical { n } => write!(
                f,
                "canonical form supports at most {MAX_CANON_VERTICES} vertices, got {n}"
            ),
            GraphError::EmptyVertexSet => write!(f, "vertex set is empty"),
            GraphError::DuplicateVertex { v } => write!(f, "vertex {v} listed twice"),
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for order {n}")
            }
            GraphError::EmptyGraph6 => write!(f, "empty graph6 string"),
            GraphError::BadGraph6Header { byte } => {
                write!(f, "bad graph6 header byte 0x{byte:02x}")
            }
            GraphError::Graph6OrderUnsupported => {
                write!(f, "graph6 order beyond the 3-byte header form is not supported")
            }
            GraphError::BadGraph6Char { pos, byte } => {
                write!(f, "graph6 byte 0x{byte:02x} at position {pos} outside 63..=126")
            }
            GraphError::Graph6Truncated { expected, got } => {
                write!(f, "graph6 string truncated: expected {expected} bytes, got {got}")
            }
            GraphError::Graph6TrailingBytes { extra } => {
                write!(f, "graph6 string has {extra} trailing byte(s)")
            }
            GraphError::Graph6Padding => write!(f, "graph6 padding bits are not zero"),
        }
    }
}

impl std::error::Error for GraphError {}

/// Undirected simple graph; vertices are 0..n-1 and `adj[v]` is the
/// neighborhood of `v` as a bitset. Symmetric and loop-free by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Empty graph on `n` vertices.
    ///
    /// # Panics
    /// Panics unless `1 <= n <= 64`.
    pub fn new(n: usize) -> Graph {
        assert!(
            (1..=MAX_VERTICES).contains(&n),
            "vertex count {n} outside 1..={MAX_VERTICES}"
        );
        Graph {
            n,
            adj: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete bipartite graph with parts {0..a-1} and {a..a+b-1}.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle 0-1-...-(n-1)-0.
    ///
    /// # Panics
    /// Panics if `n < 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n);
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut t = self.adj[u] >> (u + 1) << (u + 1);
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                out.push((u, v));
                t &= t - 1;
            }
        }
        out
    }

    /// Triangles (a, b, c) with a < b < c, in lexicographic order.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let mut bs = self.adj[a] >> (a + 1) << (a + 1);
            while bs != 0 {
                let b = bs.trailing_zeros() as usize;
                bs &= bs - 1;
                let mut cs = self.adj[a] & self.adj[b];
                cs = cs >> (b + 1) << (b + 1);
                while cs != 0 {
                    let c = cs.trailing_zeros() as usize;
                    out.push((a, b, c));
                    cs &= cs - 1;
                }
            }
        }
        out
    }

    /// Subgraph induced by `verts`; vertex `i` of the result is `verts[i]`,
    /// so the caller's order is preserved.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph, GraphError> {
        if verts.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut seen = 0u64;
        for &v in verts {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
            if seen >> v & 1 == 1 {
                return Err(GraphError::DuplicateVertex { v });
            }
            seen |= 1 << v;
        }
        let mut g = Graph::new(verts.len());
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if self.has_edge(verts[i], verts[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Relabeled copy: vertex `i` of the result is vertex `perm[i]` of self.
    ///
    /// # Panics
    /// Panics unless `perm` is a permutation of 0..n-1.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
        }
        let mut g = Graph::new(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Upper-triangle adjacency bits in column-major order (pairs (0,1),
    /// (0,2), (1,2), (0,3), ...), first pair in the highest bit. Total order
    /// on labeled graphs of equal order. Requires n <= 16.
    pub(crate) fn bitcode(&self) -> u128 {
        assert!(self.n <= 16, "bitcode needs n <= 16");
        let mut code = 0u128;
        for j in 1..self.n {
            for i in 0..j {
                code = code << 1 | self.has_edge(i, j) as u128;
            }
        }
        code
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {})", self.n, write_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

/// Calls `f` once per k-subset of 0..n, in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Probability that a uniformly random |f|-subset of g's vertices induces a
/// copy of f. Exact; requires |f| within the canonical-form limit.
pub fn density(f: &Graph, g: &Graph) -> Result<BigRational, GraphError> {
    if f.n() > g.n() {
        return Ok(BigRational::zero());
    }
    let target = canonical_form(f)?.cert;
    let mut hits = 0u64;
    for_each_combination(g.n(), f.n(), |w| {
        let sub = g.induced(w).expect("combination is a valid vertex set");
        let cert = canonical_form(&sub).expect("order already checked").cert;
        if cert == target {
            hits += 1;
        }
    });
    Ok(BigRational::new(
        hits.into(),
        binomial(g.n() as u64, f.n() as u64).into(),
    ))
}

/// Histogram of the canonical classes of all k-vertex induced subgraphs,
/// keyed by canonical cert. Counts sum to C(n, k).
pub fn induced_class_counts(g: &Graph, k: usize) -> Result<BTreeMap<String, u64>, GraphError> {
    if k == 0 || k > MAX_CANON_VERTICES {
        return Err(GraphError::OrderOutOfRange {
            n: k,
            max: MAX_CANON_VERTICES,
        });
    }
    let mut counts = BTreeMap::new();
    for_each_combination(g.n(), k, |w| {
        let sub = g.induced(w).expect("combination is a valid vertex set");
        let cert = canonical_form(&sub).expect("order already checked").cert;
        *counts.entry(cert).or_insert(0) += 1;
    });
    Ok(counts)
}
