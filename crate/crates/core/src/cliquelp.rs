//! Edge/triangle decompositions of a graph and the two quantities they
//! minimize: the fractional optimum computed by exact LP (two independent
//! formulations, cross-checked) and the integral optimum computed by exact
//! branch-and-bound triangle packing.
//!
//! A decomposition assigns nonnegative weights to edges and triangles so
//! that every edge of the graph is covered with total weight exactly 1; its
//! cost is the weight total Σ 2 w(e) + Σ 3 w(t). Packing view: maximizing
//! total triangle weight subject to coverage at most 1 per edge gives the
//! same optimum through cost = 2 e - 3 (packing value).

mod simplex;
pub use simplex::{maximize, Optimum, Program, SimplexError};

use crate::graphs::{write_graph6, Graph};
use crate::rational::{frac_string, rat_int};
use num::{BigRational, Signed, ToPrimitive, Zero};
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;

/// Largest order for the LP paths: the triangle list and tableau stay tiny.
pub const MAX_LP_VERTICES: usize = 16;
/// Largest order for exhaustive integer packing.
pub const MAX_PACKING_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueLpError {
    SizeExceeded { n: usize, max: usize },
    FormulationMismatch { g6: String, via_packing: String, via_direct: String },
    Simplex(SimplexError),
}

impl fmt::Display for CliqueLpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliqueLpError::SizeExceeded { n, max } => {
                write!(f, "graph has {n} vertices, limit is {max}")
            }
            CliqueLpError::FormulationMismatch {
                g6,
                via_packing,
                via_direct,
            } => write!(
                f,
                "packing and decomposition optima disagree on {g6}: {via_packing} vs {via_direct}"
            ),
            CliqueLpError::Simplex(e) => write!(f, "simplex failed: {e}"),
        }
    }
}

impl std::error::Error for CliqueLpError {}

impl From<SimplexError> for CliqueLpError {
    fn from(e: SimplexError) -> Self {
        CliqueLpError::Simplex(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverError {
    NotAnEdge { u: usize, v: usize },
    NotATriangle { a: usize, b: usize, c: usize },
    NegativeEdgeWeight { u: usize, v: usize },
    NegativeTriangleWeight { a: usize, b: usize, c: usize },
    BadCoverage { u: usize, v: usize, total: String },
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::NotAnEdge { u, v } => write!(f, "({u},{v}) is not an edge of the graph"),
            CoverError::NotATriangle { a, b, c } => {
                write!(f, "({a},{b},{c}) is not a triangle of the graph")
            }
            CoverError::NegativeEdgeWeight { u, v } => {
                write!(f, "edge ({u},{v}) has negative weight")
            }
            CoverError::NegativeTriangleWeight { a, b, c } => {
                write!(f, "triangle ({a},{b},{c}) has negative weight")
            }
            CoverError::BadCoverage { u, v, total } => {
                write!(f, "edge ({u},{v}) is covered with total {total}, want 1")
            }
        }
    }
}

impl std::error::Error for CoverError {}

/// Weighted edge/triangle cover of a graph on vertices 0..n-1. Keys are
/// sorted tuples; weights accumulate on repeated insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    n: usize,
    pub edge_weights: BTreeMap<(usize, usize), BigRational>,
    pub triangle_weights: BTreeMap<(usize, usize, usize), BigRational>,
}

impl Decomposition {
    pub fn new(n: usize) -> Decomposition {
        Decomposition {
            n,
            edge_weights: BTreeMap::new(),
            triangle_weights: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge_weight(&mut self, u: usize, v: usize, w: BigRational) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        if w.is_zero() {
            return;
        }
        let key = (u.min(v), u.max(v));
        *self
            .edge_weights
            .entry(key)
            .or_insert_with(BigRational::zero) += w;
    }

    pub fn add_triangle_weight(&mut self, a: usize, b: usize, c: usize, w: BigRational) {
        let mut t = [a, b, c];
        t.sort_unstable();
        assert!(
            t[0] < t[1] && t[1] < t[2] && t[2] < self.n,
            "bad triangle ({a},{b},{c})"
        );
        if w.is_zero() {
            return;
        }
        *self
            .triangle_weights
            .entry((t[0], t[1], t[2]))
            .or_insert_with(BigRational::zero) += w;
    }

    /// Σ 2 w(e) + Σ 3 w(t).
    pub fn total_weight(&self) -> BigRational {
        let edges: BigRational = self.edge_weights.values().sum();
        let tris: BigRational = self.triangle_weights.values().sum();
        rat_int(2) * edges + rat_int(3) * tris
    }

    /// Total weight covering the pair {u, v}: its edge weight plus the
    /// weight of every triangle containing both endpoints.
    pub fn coverage(&self, u: usize, v: usize) -> BigRational {
        let key = (u.min(v), u.max(v));
        let mut total = self
            .edge_weights
            .get(&key)
            .cloned()
            .unwrap_or_else(BigRational::zero);
        for (&(a, b, c), w) in &self.triangle_weights {
            let hits = (a == key.0 || b == key.0 || c == key.0)
                && (a == key.1 || b == key.1 || c == key.1);
            if hits {
                total += w;
            }
        }
        total
    }

    /// Per-pair covered weight, accumulated in one pass over the support.
    pub fn coverage_map(&self) -> BTreeMap<(usize, usize), BigRational> {
        let mut cover = self.edge_weights.clone();
        for (&(a, b, c), w) in &self.triangle_weights {
            for key in [(a, b), (a, c), (b, c)] {
                *cover.entry(key).or_insert_with(BigRational::zero) += w;
            }
        }
        cover
    }

    /// Checks that the support lies inside `g`, weights are nonnegative and
    /// every edge of `g` is covered with total weight exactly 1.
    pub fn validate_exact_cover(&self, g: &Graph) -> Result<(), CoverError> {
        for (&(u, v), w) in &self.edge_weights {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(CoverError::NotAnEdge { u, v });
            }
            if w.is_negative() {
                return Err(CoverError::NegativeEdgeWeight { u, v });
            }
        }
        for (&(a, b, c), w) in &self.triangle_weights {
            let in_range = c < g.n();
            if !(in_range && g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) {
                return Err(CoverError::NotATriangle { a, b, c });
            }
            if w.is_negative() {
                return Err(CoverError::NegativeTriangleWeight { a, b, c });
            }
        }
        let one = rat_int(1);
        let cover = self.coverage_map();
        for (u, v) in g.edges() {
            let total = cover.get(&(u, v)).cloned().unwrap_or_else(BigRational::zero);
            if total != one {
                return Err(CoverError::BadCoverage {
                    u,
                    v,
                    total: frac_string(&total),
                });
            }
        }
        Ok(())
    }

    pub fn scale(&mut self, factor: &BigRational) {
        for w in self.edge_weights.values_mut() {
            *w *= factor;
        }
        for w in self.triangle_weights.values_mut() {
            *w *= factor;
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .edge_weights
            .iter()
            .map(|(&(u, v), w)| json!({"edge": [u, v], "weight": frac_string(w)}))
            .collect();
        let triangles: Vec<serde_json::Value> = self
            .triangle_weights
            .iter()
            .map(|(&(a, b, c), w)| json!({"triangle": [a, b, c], "weight": frac_string(w)}))
            .collect();
        json!({"edges": edges, "triangles": triangles})
    }
}

/// Optimal fractional triangle packing: nonzero weights and their exact sum.
#[derive(Debug, Clone)]
pub struct FractionalPacking {
    pub value: BigRational,
    pub weights: BTreeMap<(usize, usize, usize), BigRational>,
}

/// maximize Σ w(t) over triangles subject to Σ_{t ∋ e} w(t) <= 1 per edge,
/// w >= 0, solved exactly (slack variables give the starting basis).
pub fn max_fractional_triangle_packing(g: &Graph) -> Result<FractionalPacking, CliqueLpError> {
    if g.n() > MAX_LP_VERTICES {
        return Err(CliqueLpError::SizeExceeded {
            n: g.n(),
            max: MAX_LP_VERTICES,
        });
    }
    let tris = g.triangles();
    if tris.is_empty() {
        return Ok(FractionalPacking {
            value: BigRational::zero(),
            weights: BTreeMap::new(),
        });
    }
    let edges = g.edges();
    let eidx: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let m = edges.len();
    let t = tris.len();
    let zero = BigRational::zero;
    let one = || rat_int(1);
    let mut rows = vec![vec![zero(); t + m]; m];
    for (c, &(a, b, cc)) in tris.iter().enumerate() {
        rows[eidx[&(a, b)]][c] = one();
        rows[eidx[&(a, cc)]][c] = one();
        rows[eidx[&(b, cc)]][c] = one();
    }
    for r in 0..m {
        rows[r][t + r] = one();
    }
    let mut objective = vec![zero(); t + m];
    for v in objective.iter_mut().take(t) {
        *v = one();
    }
    let opt = maximize(Program {
        rows,
        rhs: vec![one(); m],
        objective,
        basis: (t..t + m).collect(),
    })?;
    let mut weights = BTreeMap::new();
    for (c, &tri) in tris.iter().enumerate() {
        if !opt.solution[c].is_zero() {
            weights.insert(tri, opt.solution[c].clone());
        }
    }
    Ok(FractionalPacking {
        value: opt.value,
        weights,
    })
}

/// Optimum of the direct formulation: one variable per edge and per
/// triangle, coverage of every edge equal to 1, minimize Σ 2 w(e) + 3 w(t).
/// The edge columns form the starting identity basis.
fn direct_decomposition_value(g: &Graph) -> Result<BigRational, CliqueLpError> {
    let edges = g.edges();
    let tris = g.triangles();
    let m = edges.len();
    if m == 0 {
        return Ok(BigRational::zero());
    }
    let eidx: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let t = tris.len();
    let zero = BigRational::zero;
    let mut rows = vec![vec![zero(); m + t]; m];
    for r in 0..m {
        rows[r][r] = rat_int(1);
    }
    for (c, &(a, b, cc)) in tris.iter().enumerate() {
        rows[eidx[&(a, b)]][m + c] = rat_int(1);
        rows[eidx[&(a, cc)]][m + c] = rat_int(1);
        rows[eidx[&(b, cc)]][m + c] = rat_int(1);
    }
    let mut objective = vec![rat_int(-2); m];
    objective.extend(std::iter::repeat_with(|| rat_int(-3)).take(t));
    let opt = maximize(Program {
        rows,
        rhs: vec![rat_int(1); m],
        objective,
        basis: (0..m).collect(),
    })?;
    Ok(-opt.value)
}

#[derive(Debug, Clone)]
pub struct Pi3f {
    /// 2 e - 3 nu_f, the cost of an optimal fractional decomposition.
    pub value: BigRational,
    /// Optimal fractional packing value nu_f.
    pub nu_f: BigRational,
    /// Witness built from the packing: packed triangles at their weights,
    /// every edge at 1 minus its triangle coverage.
    pub decomposition: Decomposition,
}

/// Fractional decomposition optimum with its witness, computed through the
/// packing LP and cross-checked against the direct LP; a disagreement
/// between the two formulations is reported as an error, never papered over.
pub fn pi3f(g: &Graph) -> Result<Pi3f, CliqueLpError> {
    let packing = max_fractional_triangle_packing(g)?;
    let e = g.edge_count() as i64;
    let via_packing = rat_int(2 * e) - rat_int(3) * &packing.value;
    let via_direct = direct_decomposition_value(g)?;
    if via_packing != via_direct {
        return Err(CliqueLpError::FormulationMismatch {
            g6: write_graph6(g),
            via_packing: frac_string(&via_packing),
            via_direct: frac_string(&via_direct),
        });
    }
    let mut dec = Decomposition::new(g.n());
    let mut cover: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
    for (&(a, b, c), w) in &packing.weights {
        dec.add_triangle_weight(a, b, c, w.clone());
        for key in [(a, b), (a, c), (b, c)] {
            *cover.entry(key).or_insert_with(BigRational::zero) += w;
        }
    }
    let one = rat_int(1);
    for (u, v) in g.edges() {
        let covered = cover.remove(&(u, v)).unwrap_or_else(BigRational::zero);
        dec.add_edge_weight(u, v, &one - covered);
    }
    debug_assert_eq!(dec.validate_exact_cover(g), Ok(()));
    debug_assert_eq!(dec.total_weight(), via_packing);
    Ok(Pi3f {
        value: via_packing,
        nu_f: packing.value,
        decomposition: dec,
    })
}

/// Exact maximum set of pairwise edge-disjoint triangles, found by DFS over
/// the lexicographic triangle list with include-first branching, pruned by
/// a per-node capacity bound and stopped early at the fractional optimum's
/// floor. The witness is the lexicographically first optimal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPacking {
    pub value: u64,
    pub support: Vec<(usize, usize, usize)>,
}

pub fn max_integer_triangle_packing(g: &Graph) -> Result<IntegerPacking, CliqueLpError> {
    if g.n() > MAX_PACKING_VERTICES {
        return Err(CliqueLpError::SizeExceeded {
            n: g.n(),
            max: MAX_PACKING_VERTICES,
        });
    }
    let tris = g.triangles();
    if tris.is_empty() {
        return Ok(IntegerPacking {
            value: 0,
            support: Vec::new(),
        });
    }
    let edges = g.edges();
    let eidx: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let masks: Vec<u64> = tris
        .iter()
        .map(|&(a, b, c)| {
            1u64 << eidx[&(a, b)] | 1u64 << eidx[&(a, c)] | 1u64 << eidx[&(b, c)]
        })
        .collect();
    // union of all triangle masks from position i on, for capacity pruning
    let mut suffix = vec![0u64; masks.len() + 1];
    for i in (0..masks.len()).rev() {
        suffix[i] = suffix[i + 1] | masks[i];
    }
    let frac = max_fractional_triangle_packing(g)?;
    let stop_at = frac
        .value
        .floor()
        .to_integer()
        .to_u64()
        .expect("packing value is a small nonnegative number");

    struct Search<'a> {
        masks: &'a [u64],
        suffix: &'a [u64],
        stop_at: u64,
        best: u64,
        best_set: Vec<usize>,
        chosen: Vec<usize>,
    }
    impl Search<'_> {
        fn dfs(&mut self, idx: usize, used: u64, count: u64) {
            if count > self.best {
                self.best = count;
                self.best_set = self.chosen.clone();
            }
            if self.best >= self.stop_at || idx == self.masks.len() {
                return;
            }
            let capacity = (self.suffix[idx] & !used).count_ones() as u64 / 3;
            let remaining = (self.masks.len() - idx) as u64;
            if count + capacity.min(remaining) <= self.best {
                return;
            }
            if (self.masks[idx] & used) != 0 {
                self.dfs(idx + 1, used, count);
                return;
            }
            self.chosen.push(idx);
            self.dfs(idx + 1, used | self.masks[idx], count + 1);
            self.chosen.pop();
            self.dfs(idx + 1, used, count);
        }
    }
    let mut s = Search {
        masks: &masks,
        suffix: &suffix,
        stop_at,
        best: 0,
        best_set: Vec::new(),
        chosen: Vec::new(),
    };
    s.dfs(0, 0, 0);
    Ok(IntegerPacking {
        value: s.best,
        support: s.best_set.iter().map(|&i| tris[i]).collect(),
    })
}

#[derive(Debug, Clone)]
pub struct Pi3 {
    /// 2 e - 3 nu, the cost of an optimal integral decomposition.
    pub value: u64,
    /// Maximum number nu of pairwise edge-disjoint triangles.
    pub nu: u64,
    /// Packed triangles at weight 1, uncovered edges at weight 1.
    pub decomposition: Decomposition,
}

pub fn pi3(g: &Graph) -> Result<Pi3, CliqueLpError> {
    let packing = max_integer_triangle_packing(g)?;
    let mut dec = Decomposition::new(g.n());
    let one = rat_int(1);
    let mut covered = std::collections::BTreeSet::new();
    for &(a, b, c) in &packing.support {
        dec.add_triangle_weight(a, b, c, one.clone());
        covered.insert((a, b));
        covered.insert((a, c));
        covered.insert((b, c));
    }
    for (u, v) in g.edges() {
        if !covered.contains(&(u, v)) {
            dec.add_edge_weight(u, v, one.clone());
        }
    }
    debug_assert_eq!(dec.validate_exact_cover(g), Ok(()));
    let value = 2 * g.edge_count() as u64 - 3 * packing.value;
    debug_assert_eq!(rat_int(value as i64), dec.total_weight());
    Ok(Pi3 {
        value,
        nu: packing.value,
        decomposition: dec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::enumerate_graphs;
    use crate::rational::rat;
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn packing_spot_values() {
        assert_eq!(
            max_fractional_triangle_packing(&Graph::complete(3))
                .unwrap()
                .value,
            rat_int(1)
        );
        assert_eq!(
            max_fractional_triangle_packing(&Graph::complete(4))
                .unwrap()
                .value,
            rat_int(2)
        );
        assert_eq!(
            max_fractional_triangle_packing(&Graph::cycle(5)).unwrap().value,
            rat_int(0)
        );
    }

    #[test]
    fn k4_packing_is_feasible_and_tight() {
        let p = max_fractional_triangle_packing(&Graph::complete(4)).unwrap();
        let total: BigRational = p.weights.values().sum();
        assert_eq!(total, rat_int(2));
        // feasibility check: no edge of K4 is covered beyond 1
        let g = Graph::complete(4);
        for (u, v) in g.edges() {
            let mut cov = BigRational::zero();
            for (&(a, b, c), w) in &p.weights {
                let has = [a, b, c].contains(&u) && [a, b, c].contains(&v);
                if has {
                    cov += w;
                }
            }
            assert!(cov <= rat_int(1));
        }
    }

    #[test]
    fn pi3f_spot_values() {
        assert_eq!(pi3f(&Graph::complete(7)).unwrap().value, rat_int(21));
        assert_eq!(pi3f(&Graph::complete(4)).unwrap().value, rat_int(6));
        assert_eq!(pi3f(&Graph::new(5)).unwrap().value, rat_int(0));
        assert_eq!(
            pi3f(&Graph::complete_bipartite(3, 3)).unwrap().value,
            rat_int(18)
        );
        assert_eq!(pi3f(&Graph::cycle(5)).unwrap().value, rat_int(10));
    }

    #[test]
    fn pi3f_witness_is_an_exact_cover() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..25 {
            let mut g = Graph::new(7);
            for u in 0..7 {
                for v in u + 1..7 {
                    if rng.next_u32() % 2 == 0 {
                        g.add_edge(u, v);
                    }
                }
            }
            let r = pi3f(&g).unwrap();
            assert_eq!(r.decomposition.validate_exact_cover(&g), Ok(()));
            assert_eq!(r.decomposition.total_weight(), r.value);
            assert_eq!(
                r.value,
                rat_int(2 * g.edge_count() as i64) - rat_int(3) * &r.nu_f
            );
        }
    }

    #[test]
    fn integer_packing_spot_values() {
        assert_eq!(
            max_integer_triangle_packing(&Graph::complete(4)).unwrap().value,
            1
        );
        assert_eq!(
            max_integer_triangle_packing(&Graph::cycle(5)).unwrap().value,
            0
        );
        let k7 = max_integer_triangle_packing(&Graph::complete(7)).unwrap();
        assert_eq!(k7.value, 7);
        // the witness is deterministic: the lexicographically first
        // Steiner-style family
        assert_eq!(
            k7.support,
            vec![
                (0, 1, 2),
                (0, 3, 4),
                (0, 5, 6),
                (1, 3, 5),
                (1, 4, 6),
                (2, 3, 6),
                (2, 4, 5),
            ]
        );
        let edge_union: usize = 3 * k7.support.len();
        assert_eq!(edge_union, 21, "covers every edge of K7 exactly once");
    }

    #[test]
    fn integer_packing_support_is_edge_disjoint() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let mut g = Graph::new(8);
            for u in 0..8 {
                for v in u + 1..8 {
                    if rng.next_u32() % 100 < 60 {
                        g.add_edge(u, v);
                    }
                }
            }
            let p = max_integer_triangle_packing(&g).unwrap();
            let mut used = std::collections::BTreeSet::new();
            for &(a, b, c) in &p.support {
                for e in [(a, b), (a, c), (b, c)] {
                    assert!(used.insert(e), "triangles share edge {e:?}");
                }
            }
            assert_eq!(p.value as usize, p.support.len());
        }
    }

    #[test]
    fn pi3_spot_values() {
        assert_eq!(pi3(&Graph::complete(4)).unwrap().value, 9);
        assert_eq!(pi3(&Graph::complete_bipartite(3, 3)).unwrap().value, 18);
        assert_eq!(pi3(&Graph::complete(3)).unwrap().value, 3);
        assert_eq!(pi3(&Graph::complete(7)).unwrap().value, 21);
    }

    #[test]
    fn fractional_never_exceeds_integral() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..30 {
            let mut g = Graph::new(7);
            for u in 0..7 {
                for v in u + 1..7 {
                    if rng.next_u32() % 100 < 50 {
                        g.add_edge(u, v);
                    }
                }
            }
            let f = pi3f(&g).unwrap().value;
            let i = pi3(&g).unwrap();
            assert!(f <= rat_int(i.value as i64));
            assert_eq!(i.decomposition.total_weight(), rat_int(i.value as i64));
        }
    }

    #[test]
    fn both_formulations_agree_on_all_small_classes() {
        for n in 1..=5 {
            for cg in enumerate_graphs(n).unwrap() {
                let r = pi3f(&cg.graph).expect("formulations must agree");
                assert!(r.value >= BigRational::zero());
            }
        }
    }

    #[test]
    fn size_limits() {
        assert!(matches!(
            max_fractional_triangle_packing(&Graph::new(17)),
            Err(CliqueLpError::SizeExceeded { n: 17, max: 16 })
        ));
        assert!(matches!(
            max_integer_triangle_packing(&Graph::new(11)),
            Err(CliqueLpError::SizeExceeded { n: 11, max: 10 })
        ));
    }

    #[test]
    fn cover_validation_catches_defects() {
        let g = Graph::complete(3);
        let mut d = Decomposition::new(3);
        d.add_triangle_weight(0, 1, 2, rat_int(1));
        assert_eq!(d.validate_exact_cover(&g), Ok(()));
        assert_eq!(d.total_weight(), rat_int(3));

        let mut short = Decomposition::new(3);
        short.add_triangle_weight(0, 1, 2, rat(1, 2));
        assert_eq!(
            short.validate_exact_cover(&g),
            Err(CoverError::BadCoverage {
                u: 0,
                v: 1,
                total: "1/2".into()
            })
        );

        let mut stray = Decomposition::new(4);
        stray.add_edge_weight(0, 3, rat_int(1));
        assert_eq!(
            stray.validate_exact_cover(&g),
            Err(CoverError::NotAnEdge { u: 0, v: 3 })
        );

        let mut neg = Decomposition::new(3);
        neg.add_edge_weight(0, 1, rat_int(-1));
        assert_eq!(
            neg.validate_exact_cover(&g),
            Err(CoverError::NegativeEdgeWeight { u: 0, v: 1 })
        );
    }

    #[test]
    fn decomposition_json_shape() {
        let mut d = Decomposition::new(4);
        d.add_edge_weight(3, 0, rat(1, 2));
        d.add_triangle_weight(2, 1, 0, rat_int(1));
        let v = d.to_json();
        assert_eq!(v["edges"][0]["edge"], serde_json::json!([0, 3]));
        assert_eq!(v["edges"][0]["weight"], "1/2");
        assert_eq!(v["triangles"][0]["triangle"], serde_json::json!([0, 1, 2]));
        assert_eq!(v["triangles"][0]["weight"], "1/1");
    }

    #[test]
    fn coverage_accumulates_across_kinds() {
        let mut d = Decomposition::new(4);
        d.add_triangle_weight(0, 1, 2, rat(1, 3));
        d.add_edge_weight(0, 1, rat(1, 6));
        d.add_edge_weight(1, 0, rat(1, 2));
        assert_eq!(d.coverage(0, 1), rat_int(1));
        assert_eq!(d.coverage(0, 2), rat(1, 3));
        assert_eq!(d.coverage(0, 3), rat_int(0));
    }
}
