//! Constructive decompositions of arbitrary graphs: averaging the optimal
//! fractional decompositions of 7-vertex induced subgraphs (exhaustively or
//! by uniform sampling), a deterministic greedy integral decomposer, and
//! the triangle-count record comparing exact or greedy packings against the
//! 2k/3 yardstick.

use crate::cliquelp::{pi3f, CliqueLpError, Decomposition};
use crate::graphs::{canonical_form_with_map, for_each_combination, Graph, GraphError};
use crate::rational::{binomial, rat, rat_int, rat_u64};
use num::{BigRational, Signed, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::fmt;

pub const SUBSET_ORDER: usize = 7;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecomposerError {
    BudgetExceeded { subsets: u64, budget: u64 },
    Lp(CliqueLpError),
    Graph(GraphError),
}

impl fmt::Display for DecomposerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposerError::BudgetExceeded { subsets, budget } => write!(
                f,
                "{subsets} subsets exceed the exhaustive budget of {budget}; \
                 use sampling instead"
            ),
            DecomposerError::Lp(e) => write!(f, "subset lp failed: {e}"),
            DecomposerError::Graph(e) => write!(f, "graph error: {e}"),
        }
    }
}

impl std::error::Error for DecomposerError {}

impl From<CliqueLpError> for DecomposerError {
    fn from(e: CliqueLpError) -> Self {
        DecomposerError::Lp(e)
    }
}

impl From<GraphError> for DecomposerError {
    fn from(e: GraphError) -> Self {
        DecomposerError::Graph(e)
    }
}

/// How to run the averaging construction. `sample_count: None` walks every
/// 7-subset (exhaustive, subject to `budget`); `Some(s)` draws `s` uniform
/// subsets with the seeded generator instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AveragingPlan {
    pub sample_count: Option<u64>,
    pub rng_seed: u64,
    pub budget: u64,
}

impl Default for AveragingPlan {
    fn default() -> Self {
        AveragingPlan {
            sample_count: None,
            rng_seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Averaging output. Exhaustive mode produces an exact decomposition with
/// per-edge coverage 1; sampled mode is an estimate, flagged `approximate`,
/// with the worst per-edge deviation from coverage 1 reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AveragedDecomposition {
    pub decomposition: Decomposition,
    pub total_weight: BigRational,
    /// Scaled sum of the per-subset LP optima, accumulated independently of
    /// the weight map; always equals `total_weight`.
    pub lp_total: BigRational,
    pub approximate: bool,
    pub subsets_processed: u64,
    pub max_coverage_residual: Option<BigRational>,
    pub mode: &'static str,
}

/// Per-class LP results, cached so isomorphic subsets are solved once. The
/// first level keys the labeled induced subgraph (bit code), skipping even
/// the canonical-form search on repeats; the second keys the canonical
/// class, holding its optimal decomposition in canonical coordinates.
struct SubsetCache {
    labeled: HashMap<u128, (usize, [usize; SUBSET_ORDER])>,
    class_index: HashMap<String, usize>,
    classes: Vec<ClassDecomposition>,
}

struct ClassDecomposition {
    value: BigRational,
    edges: Vec<((usize, usize), BigRational)>,
    triangles: Vec<((usize, usize, usize), BigRational)>,
}

impl SubsetCache {
    fn new() -> SubsetCache {
        SubsetCache {
            labeled: HashMap::new(),
            class_index: HashMap::new(),
            classes: Vec::new(),
        }
    }

    /// Adds the verts' optimal subset decomposition, pulled back to global
    /// vertex names, into `acc` at weight 1, and the subset's LP value into
    /// `lp_sum`. `verts` is ascending.
    fn accumulate(
        &mut self,
        g: &Graph,
        verts: &[usize],
        acc: &mut Decomposition,
        lp_sum: &mut BigRational,
    ) -> Result<(), DecomposerError> {
        let sub = g.induced(verts)?;
        let key = sub.bitcode();
        let (idx, map) = match self.labeled.get(&key) {
            Some(&hit) => hit,
            None => {
                let (cg, map_vec) = canonical_form_with_map(&sub)?;
                let idx = match self.class_index.get(&cg.cert) {
                    Some(&i) => i,
                    None => {
                        let sol = pi3f(&cg.graph)?;
                        self.classes.push(ClassDecomposition {
                            value: sol.value,
                            edges: sol
                                .decomposition
                                .edge_weights
                                .iter()
                                .map(|(&e, w)| (e, w.clone()))
                                .collect(),
                            triangles: sol
                                .decomposition
                                .triangle_weights
                                .iter()
                                .map(|(&t, w)| (t, w.clone()))
                                .collect(),
                        });
                        self.class_index.insert(cg.cert, self.classes.len() - 1);
                        self.classes.len() - 1
                    }
                };
                let mut map = [0usize; SUBSET_ORDER];
                map.copy_from_slice(&map_vec);
                self.labeled.insert(key, (idx, map));
                (idx, map)
            }
        };
        // canonical position p names local vertex map[p], hence the global
        // vertex verts[map[p]]
        let class = &self.classes[idx];
        for &((a, b), ref w) in &class.edges {
            acc.add_edge_weight(verts[map[a]], verts[map[b]], w.clone());
        }
        for &((a, b, c), ref w) in &class.triangles {
            acc.add_triangle_weight(verts[map[a]], verts[map[b]], verts[map[c]], w.clone());
        }
        *lp_sum += &class.value;
        Ok(())
    }
}

/// Uniform draw from 0..m by rejection, so every residue is equally likely.
fn uniform_below(rng: &mut ChaCha8Rng, m: u64) -> u64 {
    debug_assert!(m > 0);
    let limit = (u64::MAX / m) * m;
    loop {
        let x = rng.next_u64();
        if x < limit {
            return x % m;
        }
    }
}

/// Builds a fractional decomposition of `g` by averaging optimal
/// decompositions of induced subgraphs on 7 vertices. Exhaustive mode
/// scales each accumulated weight by 1/C(n-2,5), which covers every edge of
/// `g` exactly once; this coverage identity is recomputed and enforced.
/// Graphs on fewer than 7 vertices are solved directly instead.
pub fn averaging_decomposition(
    g: &Graph,
    plan: &AveragingPlan,
) -> Result<AveragedDecomposition, DecomposerError> {
    let n = g.n();
    if n < SUBSET_ORDER {
        let sol = pi3f(g)?;
        return Ok(AveragedDecomposition {
            total_weight: sol.value.clone(),
            lp_total: sol.value,
            decomposition: sol.decomposition,
            approximate: false,
            subsets_processed: 1,
            max_coverage_residual: None,
            mode: "direct",
        });
    }
    let per_edge = binomial(n as u64 - 2, 5);
    let mut cache = SubsetCache::new();
    let mut acc = Decomposition::new(n);
    let mut lp_sum = BigRational::zero();
    match plan.sample_count {
        None => {
            let subsets = binomial(n as u64, SUBSET_ORDER as u64);
            if subsets > plan.budget {
                return Err(DecomposerError::BudgetExceeded {
                    subsets,
                    budget: plan.budget,
                });
            }
            let mut failure = None;
            for_each_combination(n, SUBSET_ORDER, |verts| {
                if failure.is_none() {
                    if let Err(e) = cache.accumulate(g, verts, &mut acc, &mut lp_sum) {
                        failure = Some(e);
                    }
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
            let scale = rat(1, per_edge as i64);
            acc.scale(&scale);
            let lp_total = lp_sum * &scale;
            let total_weight = acc.total_weight();
            assert_eq!(total_weight, lp_total, "weight map disagrees with lp sum");
            acc.validate_exact_cover(g)
                .expect("averaging must cover every edge exactly once");
            Ok(AveragedDecomposition {
                decomposition: acc,
                total_weight,
                lp_total,
                approximate: false,
                subsets_processed: subsets,
                max_coverage_residual: None,
                mode: "exhaustive",
            })
        }
        Some(samples) => {
            assert!(samples > 0, "sample count must be positive");
            let mut rng = ChaCha8Rng::seed_from_u64(plan.rng_seed);
            let mut pool: Vec<usize> = (0..n).collect();
            for _ in 0..samples {
                for i in 0..SUBSET_ORDER {
                    let j = i + uniform_below(&mut rng, (n - i) as u64) as usize;
                    pool.swap(i, j);
                }
                let mut verts: Vec<usize> = pool[..SUBSET_ORDER].to_vec();
                verts.sort_unstable();
                cache.accumulate(g, &verts, &mut acc, &mut lp_sum)?;
            }
            // estimator: each subset is drawn with probability 1/C(n,7), so
            // the exhaustive sum is approximated by C(n,7)/samples times
            // the sampled sum, then scaled by the same 1/C(n-2,5)
            let scale = rat_u64(binomial(n as u64, SUBSET_ORDER as u64))
                / (rat_u64(samples) * rat_u64(per_edge));
            acc.scale(&scale);
            let lp_total = lp_sum * &scale;
            let total_weight = acc.total_weight();
            assert_eq!(total_weight, lp_total, "weight map disagrees with lp sum");
            let cover = acc.coverage_map();
            let one = rat_int(1);
            let residual = g
                .edges()
                .into_iter()
                .map(|e| {
                    let c = cover.get(&e).cloned().unwrap_or_else(BigRational::zero);
                    (c - &one).abs()
                })
                .max()
                .unwrap_or_else(BigRational::zero);
            Ok(AveragedDecomposition {
                decomposition: acc,
                total_weight,
                lp_total,
                approximate: true,
                subsets_processed: samples,
                max_coverage_residual: Some(residual),
                mode: "sampled",
            })
        }
    }
}

/// Number of edges of `g` that lie in no triangle of `g`.
fn stranded_edges(g: &Graph) -> usize {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| (g.neighbors(u) & g.neighbors(v)) == 0)
        .count()
}

/// Integral decomposition by repeated triangle removal. Among the current
/// triangles, takes the lexicographically first of those whose removal
/// leaves the fewest edges lying in no triangle; once no triangle remains,
/// the leftover edges are covered singly. Deterministic by construction.
pub fn greedy_decomposition(g: &Graph) -> Decomposition {
    let mut current = g.clone();
    let mut dec = Decomposition::new(g.n());
    let one = rat_int(1);
    loop {
        let tris = current.triangles();
        if tris.is_empty() {
            break;
        }
        let mut best: Option<(usize, (usize, usize, usize))> = None;
        for &(a, b, c) in &tris {
            let mut trial = current.clone();
            trial.remove_edge(a, b);
            trial.remove_edge(a, c);
            trial.remove_edge(b, c);
            let stranded = stranded_edges(&trial);
            // strict inequality keeps the lexicographically first minimizer
            if best.as_ref().is_none_or(|&(s, _)| stranded < s) {
                best = Some((stranded, (a, b, c)));
            }
        }
        let (_, (a, b, c)) = best.expect("triangle list is nonempty");
        dec.add_triangle_weight(a, b, c, one.clone());
        current.remove_edge(a, b);
        current.remove_edge(a, c);
        current.remove_edge(b, c);
    }
    for (u, v) in current.edges() {
        dec.add_edge_weight(u, v, one.clone());
    }
    dec
}

/// Triangle-count record: k = e - n²/4, the packed triangle count (exact
/// for n <= 10, greedy otherwise, distinguished by `exact`) and the 2k/3
/// yardstick. Report-only; no inequality between them is asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleCountRecord {
    pub k: BigRational,
    pub packed: u64,
    pub exact: bool,
    pub bound: BigRational,
}

pub fn corollary_check(g: &Graph) -> Result<TriangleCountRecord, DecomposerError> {
    let n = g.n() as i64;
    let k = rat_int(g.edge_count() as i64) - rat(n * n, 4);
    let (packed, exact) = if g.n() <= crate::cliquelp::MAX_PACKING_VERTICES {
        (
            crate::cliquelp::max_integer_triangle_packing(g)?.value,
            true,
        )
    } else {
        (
            greedy_decomposition(g).triangle_weights.len() as u64,
            false,
        )
    };
    let bound = rat(2, 3) * &k;
    Ok(TriangleCountRecord {
        k,
        packed,
        exact,
        bound,
    })
}
