//! The seven rooted 4-vertex graphs behind the certificate, exact rooted
//! densities, pair-density expectations over 7-vertex graphs, and the
//! certificate matrix with its per-class coefficients.
//!
//! A "rooted" graph here is a graph with one distinguished vertex; the root
//! plays the role of the single labeled vertex. Two rooted graphs match when
//! some isomorphism maps root to root.

use crate::exactlin::RationalMatrix;
use crate::graphs::{for_each_combination, Graph};
use crate::rational::{binomial, rat, rat_int};
use num::{BigRational, Zero};
use sha2::{Digest, Sha256};
use std::fmt;
use std::sync::OnceLock;

pub const FLAG_COUNT: usize = 7;

/// Edge lists of the seven rooted graphs; the root is vertex 0.
///
/// In order: isolated root beside an independent pair and nothing else;
/// one edge between two non-root vertices; a star centered at a non-root
/// vertex with the root as a leaf; a star centered at the root; a triangle
/// through the root with a pendant on a non-root triangle vertex; a 4-cycle
/// through the root; K4 minus an edge at the root.
pub const FLAG_EDGES: [&[(usize, usize)]; FLAG_COUNT] = [
    &[],
    &[(2, 3)],
    &[(0, 3), (1, 3), (2, 3)],
    &[(0, 1), (0, 2), (0, 3)],
    &[(0, 2), (0, 3), (1, 3), (2, 3)],
    &[(0, 2), (0, 3), (1, 2), (1, 3)],
    &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub graph: Graph,
    pub root: usize,
}

/// The seven flags in their fixed order, rooted at vertex 0.
pub fn seven_flags() -> Vec<Flag> {
    FLAG_EDGES
        .iter()
        .map(|edges| Flag {
            graph: Graph::from_edges(4, edges),
            root: 0,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlagError {
    WrongOrder { n: usize, expected: usize },
}

impl fmt::Display for FlagError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlagError::WrongOrder { n, expected } => {
                write!(f, "expected a graph on {expected} vertices, got {n}")
            }
        }
    }
}

impl std::error::Error for FlagError {}

/// 6-bit adjacency code of a rooted 4-vertex selection: pairs in the fixed
/// order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) of positions, first pair in the
/// highest bit, where position k means `order[k]` in the host graph.
fn code6(g: &Graph, order: [usize; 4]) -> u8 {
    const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
    let mut code = 0u8;
    for (a, b) in PAIRS {
        code = code << 1 | g.has_edge(order[a], order[b]) as u8;
    }
    code
}

/// code -> flag index for all 64 labeled rooted graphs on 4 vertices;
/// entries not matching any of the seven flags are FLAG_COUNT.
fn classification_table() -> &'static [u8; 64] {
    static TABLE: OnceLock<[u8; 64]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [FLAG_COUNT as u8; 64];
        const ORDERS: [[usize; 4]; 6] = [
            [0, 1, 2, 3],
            [0, 1, 3, 2],
            [0, 2, 1, 3],
            [0, 2, 3, 1],
            [0, 3, 1, 2],
            [0, 3, 2, 1],
        ];
        for (idx, flag) in seven_flags().iter().enumerate() {
            for order in ORDERS {
                let code = code6(&flag.graph, order) as usize;
                assert!(
                    table[code] == FLAG_COUNT as u8 || table[code] == idx as u8,
                    "two flags share a labeling"
                );
                table[code] = idx as u8;
            }
        }
        table
    })
}

/// Which flag the rooted subgraph on `root` and the three `others` matches,
/// if any. The order of `others` does not matter.
pub fn classify(g: &Graph, root: usize, others: [usize; 3]) -> Option<usize> {
    let code = code6(g, [root, others[0], others[1], others[2]]);
    match classification_table()[code as usize] {
        c if (c as usize) < FLAG_COUNT => Some(c as usize),
        _ => None,
    }
}

/// counts[i][j] = over the 7 root choices and, per root, the 20 ordered
/// splits of the remaining six vertices into two triples, how many splits
/// induce flag i on the first triple and flag j on the second. At most
/// 7 * 20 = 140 in total; splits whose halves match no flag count nowhere.
pub fn pair_profile(g: &Graph) -> Result<[[u64; FLAG_COUNT]; FLAG_COUNT], FlagError> {
    if g.n() != 7 {
        return Err(FlagError::WrongOrder {
            n: g.n(),
            expected: 7,
        });
    }
    let mut counts = [[0u64; FLAG_COUNT]; FLAG_COUNT];
    for root in 0..7 {
        let rest: Vec<usize> = (0..7).filter(|&v| v != root).collect();
        for_each_combination(6, 3, |half| {
            let mut first = [0usize; 3];
            let mut second = [0usize; 3];
            let mut s = 0;
            let mut in_half = [false; 6];
            for (k, &h) in half.iter().enumerate() {
                first[k] = rest[h];
                in_half[h] = true;
            }
            for (k, &r) in rest.iter().enumerate() {
                if !in_half[k] {
                    second[s] = r;
                    s += 1;
                }
            }
            if let (Some(i), Some(j)) = (classify(g, root, first), classify(g, root, second)) {
                counts[i][j] += 1;
            }
        });
    }
    Ok(counts)
}

/// Probability that a uniformly random root and a uniformly random ordered
/// split of the remaining six vertices induce flags i and j: the (i, j)
/// pair count divided by 140.
pub fn pair_density_expectation(
    i: usize,
    j: usize,
    g: &Graph,
) -> Result<BigRational, FlagError> {
    assert!(i < FLAG_COUNT && j < FLAG_COUNT, "flag index out of range");
    let counts = pair_profile(g)?;
    Ok(rat(counts[i][j] as i64, 140))
}

/// Rooted density vector: entry i is the fraction of 3-element subsets of
/// the non-root vertices that induce flag i with the given root.
pub fn flag_densities(g: &Graph, root: usize) -> [BigRational; FLAG_COUNT] {
    let n = g.n();
    assert!(n >= 4, "need at least 4 vertices, got {n}");
    assert!(root < n, "root {root} out of range for order {n}");
    let rest: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    let mut hits = [0u64; FLAG_COUNT];
    for_each_combination(n - 1, 3, |sel| {
        if let Some(i) = classify(g, root, [rest[sel[0]], rest[sel[1]], rest[sel[2]]]) {
            hits[i] += 1;
        }
    });
    let total = binomial(n as u64 - 1, 3);
    std::array::from_fn(|i| rat(hits[i] as i64, total as i64))
}

/// Symmetric 7x7 certificate matrix held as integer numerators over a
/// common positive denominator, so every entry is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateMatrix {
    pub denominator: i64,
    pub numerators: [[i64; FLAG_COUNT]; FLAG_COUNT],
}

const BUILTIN_DENOMINATOR: i64 = 12_000_000_000;

#[rustfmt::skip]
const BUILTIN_NUMERATORS: [[i64; FLAG_COUNT]; FLAG_COUNT] = [
    [ 1800000000,  2444365956,   640188285, -1524146769,  1386815580,  -732139362, -129387078],
    [ 2444365956,  4759879134,  1177441152, -1783771230,  2546923788, -1397639394, -143552208],
    [  640188285,  1177441152,   484273772,  -317303211,  1038156300,  -591902130,   -6783162],
    [-1524146769, -1783771230,  -317303211,  1558870290,  -651906630,   305728704,  154602378],
    [ 1386815580,  2546923788,  1038156300,  -651906630,  2285399634, -1283125950,  -10755036],
    [ -732139362, -1397639394,  -591902130,   305728704, -1283125950,   734039016,   -1621938],
    [ -129387078,  -143552208,    -6783162,   154602378,   -10755036,    -1621938,   23860164],
];

impl CertificateMatrix {
    pub fn builtin() -> CertificateMatrix {
        CertificateMatrix {
            denominator: BUILTIN_DENOMINATOR,
            numerators: BUILTIN_NUMERATORS,
        }
    }

    pub fn zero() -> CertificateMatrix {
        CertificateMatrix {
            denominator: 1,
            numerators: [[0; FLAG_COUNT]; FLAG_COUNT],
        }
    }

    /// First index pair (i, j), i < j, where symmetry fails.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..FLAG_COUNT {
            for j in i + 1..FLAG_COUNT {
                if self.numerators[i][j] != self.numerators[j][i] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn entry(&self, i: usize, j: usize) -> BigRational {
        rat(self.numerators[i][j], self.denominator)
    }

    pub fn to_rational_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_fn(FLAG_COUNT, |i, j| self.entry(i, j))
    }

    /// Hash of the exact entries, for pinning a report to its matrix. The
    /// preimage is the denominator and the row-major numerators joined by
    /// commas, e.g. "12000000000;1800000000,2444365956,...".
    pub fn sha256_hex(&self) -> String {
        let body: Vec<String> = self
            .numerators
            .iter()
            .flatten()
            .map(|v| v.to_string())
            .collect();
        let preimage = format!("{};{}", self.denominator, body.join(","));
        let digest = Sha256::digest(preimage.as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// d^T M d, exact.
    pub fn quadratic_form(&self, d: &[BigRational; FLAG_COUNT]) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..FLAG_COUNT {
            for j in 0..FLAG_COUNT {
                if self.numerators[i][j] != 0 {
                    acc += rat_int(self.numerators[i][j]) * &d[i] * &d[j];
                }
            }
        }
        acc / rat_int(self.denominator)
    }
}

/// Per-class coefficient of a 7-vertex graph: the certificate matrix
/// contracted with the raw pair counts, Σ_ij M[i][j] * counts[i][j].
///
/// Note the counts enter unnormalized (not divided by the 140 root/split
/// choices). With the built-in matrix this scaling puts the coefficient on
/// the same footing as the per-graph LP value, which is what the slack
/// computation in the certificate module consumes; see that module's tests
/// for the fixed anchor values.
pub fn coefficient_cu(m: &CertificateMatrix, g: &Graph) -> Result<BigRational, FlagError> {
    let counts = pair_profile(g)?;
    let mut acc: i128 = 0;
    for i in 0..FLAG_COUNT {
        for j in 0..FLAG_COUNT {
            acc += m.numerators[i][j] as i128 * counts[i][j] as i128;
        }
    }
    let num = BigRational::from_integer(acc.into());
    Ok(num / rat_int(m.denominator))
}

/// Flag-density quadratic form of a rooted graph: d^T M d where d is the
/// rooted density vector. Nonnegative for every rooted graph whenever M is
/// positive semidefinite.
pub fn quadratic_form_density(m: &CertificateMatrix, g: &Graph, root: usize) -> BigRational {
    m.quadratic_form(&flag_densities(g, root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{is_psd, kernel_check, PsdOutcome};
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, density_percent: u32) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_u32() % 100 < density_percent {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn flag_shapes() {
        let flags = seven_flags();
        assert_eq!(flags.len(), 7);
        let edge_counts: Vec<usize> = flags.iter().map(|f| f.graph.edge_count()).collect();
        assert_eq!(edge_counts, vec![0, 1, 3, 3, 4, 4, 5]);
        let root_degrees: Vec<usize> = flags.iter().map(|f| f.graph.degree(f.root)).collect();
        assert_eq!(root_degrees, vec![0, 0, 1, 3, 2, 2, 2]);
    }

    #[test]
    fn each_flag_classifies_as_itself() {
        for (idx, flag) in seven_flags().iter().enumerate() {
            assert_eq!(classify(&flag.graph, 0, [1, 2, 3]), Some(idx));
            // invariant under reordering the non-root vertices
            assert_eq!(classify(&flag.graph, 0, [3, 1, 2]), Some(idx));
            assert_eq!(classify(&flag.graph, 0, [2, 3, 1]), Some(idx));
        }
    }

    #[test]
    fn twenty_of_the_sixty_four_codes_are_flags() {
        let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
        let mut hits = 0;
        for bits in 0u32..64 {
            let mut g = Graph::new(4);
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            if classify(&g, 0, [1, 2, 3]).is_some() {
                hits += 1;
            }
        }
        assert_eq!(hits, 20);
    }

    #[test]
    fn non_flag_shapes_classify_to_none() {
        assert_eq!(classify(&Graph::complete(4), 0, [1, 2, 3]), None);
        // triangle on the non-root vertices, root isolated
        let t = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(classify(&t, 0, [1, 2, 3]), None);
        // path through all four vertices starting at the root
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(classify(&p, 0, [1, 2, 3]), None);
    }

    #[test]
    fn star_classification_depends_on_root() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(classify(&star, 0, [1, 2, 3]), Some(3));
        let leaf_rooted = Graph::from_edges(4, &[(1, 0), (1, 2), (1, 3)]);
        assert_eq!(classify(&leaf_rooted, 0, [1, 2, 3]), Some(2));
    }

    #[test]
    fn pair_profile_of_extremes() {
        let empty = pair_profile(&Graph::new(7)).unwrap();
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(empty[i][j], if (i, j) == (0, 0) { 140 } else { 0 });
            }
        }
        let complete = pair_profile(&Graph::complete(7)).unwrap();
        assert!(complete.iter().flatten().all(|&c| c == 0));
    }

    #[test]
    fn pair_profile_is_symmetric_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let g = random_graph(&mut rng, 7, 45);
            let counts = pair_profile(&g).unwrap();
            let mut total = 0;
            for i in 0..7 {
                for j in 0..7 {
                    assert_eq!(counts[i][j], counts[j][i]);
                    total += counts[i][j];
                }
            }
            assert!(total <= 140);
        }
    }

    #[test]
    fn pair_density_examples() {
        let empty = Graph::new(7);
        assert_eq!(pair_density_expectation(0, 0, &empty).unwrap(), rat(1, 1));
        assert_eq!(pair_density_expectation(1, 1, &empty).unwrap(), rat(0, 1));
        let k7 = Graph::complete(7);
        for i in 0..7 {
            for j in 0..7 {
                assert!(pair_density_expectation(i, j, &k7).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn wrong_order_is_an_error() {
        assert_eq!(
            pair_profile(&Graph::new(6)).unwrap_err(),
            FlagError::WrongOrder { n: 6, expected: 7 }
        );
    }

    #[test]
    fn builtin_matrix_is_psd_rank_six_with_known_kernel() {
        let m = CertificateMatrix::builtin();
        assert!(m.asymmetry().is_none());
        assert_eq!(m.entry(0, 0), rat(3, 20));
        let rm = m.to_rational_matrix();
        match is_psd(&rm).unwrap() {
            PsdOutcome::Psd { rank } => assert_eq!(rank, 6),
            PsdOutcome::NotPsd { .. } => panic!("built-in matrix must be PSD"),
        }
        let kernel: Vec<BigRational> = [1i64, 0, 3, 1, 0, 3, 0].iter().map(|&v| rat_int(v)).collect();
        assert!(kernel_check(&rm, &kernel).unwrap());
    }

    #[test]
    fn coefficient_anchor_values() {
        let m = CertificateMatrix::builtin();
        let cases: [(Graph, BigRational); 5] = [
            (Graph::new(7), rat_int(21)),
            (Graph::complete(7), rat_int(0)),
            (Graph::complete_bipartite(1, 6), rat_int(9)),
            (Graph::complete_bipartite(2, 5), rat_int(1)),
            (Graph::complete_bipartite(3, 4), rat_int(-3)),
        ];
        for (g, want) in cases {
            assert_eq!(coefficient_cu(&m, &g).unwrap(), want, "graph {g}");
        }
    }

    #[test]
    fn coefficient_is_isomorphism_invariant() {
        let m = CertificateMatrix::builtin();
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..15 {
            let g = random_graph(&mut rng, 7, 50);
            let c = coefficient_cu(&m, &g).unwrap();
            let perm = [5, 2, 6, 0, 3, 1, 4];
            assert_eq!(coefficient_cu(&m, &g.relabeled(&perm)).unwrap(), c);
        }
    }

    #[test]
    fn quadratic_form_spot_values() {
        let m = CertificateMatrix::builtin();
        // the 4-cycle rooted anywhere has density vector e_6 (index 5)
        let c4 = Graph::cycle(4);
        assert_eq!(
            quadratic_form_density(&m, &c4, 0),
            rat(734039016, 12_000_000_000)
        );
        assert_eq!(
            quadratic_form_density(&m, &c4, 0),
            rat(30584959, 500_000_000)
        );
        // the known null direction evaluates to exactly zero
        let kernel: [BigRational; 7] = [1i64, 0, 3, 1, 0, 3, 0].map(rat_int);
        assert!(m.quadratic_form(&kernel).is_zero());
    }

    #[test]
    fn quadratic_form_nonnegative_on_random_rooted_graphs() {
        let m = CertificateMatrix::builtin();
        let zero = BigRational::zero();
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..20 {
            let n = 5 + (rng.next_u32() % 4) as usize;
            let g = random_graph(&mut rng, n, 50);
            for root in 0..n {
                assert!(quadratic_form_density(&m, &g, root) >= zero);
            }
        }
    }

    #[test]
    fn flag_densities_sum_to_classifiable_fraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..10 {
            let g = random_graph(&mut rng, 8, 50);
            for root in 0..8 {
                let d = flag_densities(&g, root);
                let sum: BigRational = d.iter().cloned().sum();
                assert!(sum >= BigRational::zero() && sum <= rat_int(1));
            }
        }
        // the star K_{1,6} rooted at the hub is flag 4 (index 3) on every triple
        let mut hub = Graph::new(7);
        for v in 1..7 {
            hub.add_edge(0, v);
        }
        let d = flag_densities(&hub, 0);
        assert_eq!(d[3], rat_int(1));
    }

    #[test]
    fn matrix_hash_is_stable_and_entry_sensitive() {
        let a = CertificateMatrix::builtin();
        let b = CertificateMatrix::builtin();
        assert_eq!(a.sha256_hex(), b.sha256_hex());
        assert_eq!(a.sha256_hex().len(), 64);
        assert!(a.sha256_hex().chars().all(|c| c.is_ascii_hexdigit()));
        assert_ne!(a.sha256_hex(), CertificateMatrix::zero().sha256_hex());
        let mut c = CertificateMatrix::builtin();
        c.numerators[6][6] += 1;
        assert_ne!(a.sha256_hex(), c.sha256_hex());
    }

    #[test]
    fn asymmetry_is_detected() {
        let mut m = CertificateMatrix::builtin();
        m.numerators[2][5] += 7;
        assert_eq!(m.asymmetry(), Some((2, 5)));
    }
}
