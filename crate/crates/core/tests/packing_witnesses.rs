//! Independent certificates for the packing optima: explicit hand-checked
//! witnesses pin the K7 and K4 answers, and a pruning-free exhaustive
//! search over edge-disjoint triangle families re-derives every small
//! integral optimum.

use num::BigRational;
use std::collections::BTreeSet;
use tridecomp::cliquelp::{
    max_fractional_triangle_packing, max_integer_triangle_packing, pi3, pi3f,
};
use tridecomp::graphs::{enumerate_graphs, Graph};
use tridecomp::rational::{rat, rat_int};

#[test]
fn a_steiner_family_certifies_the_k7_packing() {
    let family = [
        (0, 1, 2),
        (0, 3, 4),
        (0, 5, 6),
        (1, 3, 5),
        (1, 4, 6),
        (2, 3, 6),
        (2, 4, 5),
    ];
    let mut covered = BTreeSet::new();
    for &(a, b, c) in &family {
        for e in [(a, b), (a, c), (b, c)] {
            assert!(covered.insert(e), "family is not edge-disjoint at {e:?}");
        }
    }
    // 7 disjoint triangles cover 21 edges: the whole of K7, so the packing
    // number is at least 7 and at most e/3 = 7
    assert_eq!(covered.len(), 21);
    let k7 = Graph::complete(7);
    assert_eq!(max_integer_triangle_packing(&k7).unwrap().value, 7);
    assert_eq!(pi3(&k7).unwrap().value, 21);
    assert_eq!(pi3f(&k7).unwrap().value, rat_int(21));
    // fractional relaxation is sandwiched: at least the integral 7, at
    // most e/3
    assert_eq!(
        max_fractional_triangle_packing(&k7).unwrap().value,
        rat_int(7)
    );
}

#[test]
fn half_weights_certify_the_k4_fractional_packing() {
    let k4 = Graph::complete(4);
    let tris = k4.triangles();
    assert_eq!(tris.len(), 4);
    // weight 1/2 on every triangle is feasible: each edge lies in exactly
    // two triangles, so its coverage is exactly 1; the value 4 * 1/2 = 2
    // meets the e/3 = 2 upper bound
    for (u, v) in k4.edges() {
        let containing = tris
            .iter()
            .filter(|&&(a, b, c)| {
                let t = [a, b, c];
                t.contains(&u) && t.contains(&v)
            })
            .count();
        assert_eq!(containing, 2);
    }
    assert_eq!(
        max_fractional_triangle_packing(&k4).unwrap().value,
        rat_int(2)
    );
    assert_eq!(pi3f(&k4).unwrap().value, rat_int(6));
    // the integral optimum cannot split triangles: one triangle plus three
    // single edges
    assert_eq!(pi3(&k4).unwrap().value, 9);
}

/// Exhaustive maximum over edge-disjoint triangle subfamilies, written
/// without bounds or ordering tricks so it shares nothing with the
/// branch-and-bound under test.
fn brute_packing(tris: &[(usize, usize, usize)]) -> u64 {
    fn go(
        tris: &[(usize, usize, usize)],
        idx: usize,
        used: &mut BTreeSet<(usize, usize)>,
    ) -> u64 {
        if idx == tris.len() {
            return 0;
        }
        let mut best = go(tris, idx + 1, used);
        let (a, b, c) = tris[idx];
        let edges = [(a, b), (a, c), (b, c)];
        if edges.iter().all(|e| !used.contains(e)) {
            for e in edges {
                used.insert(e);
            }
            best = best.max(1 + go(tris, idx + 1, used));
            for e in &edges {
                used.remove(e);
            }
        }
        best
    }
    go(tris, 0, &mut BTreeSet::new())
}

#[test]
fn branch_and_bound_matches_exhaustive_search_on_all_small_classes() {
    let mut checked = 0;
    for n in 1..=5 {
        for cg in enumerate_graphs(n).unwrap() {
            let g = &cg.graph;
            let brute = brute_packing(&g.triangles());
            assert_eq!(
                max_integer_triangle_packing(g).unwrap().value,
                brute,
                "packing mismatch on {}",
                cg.cert
            );
            let expected = 2 * g.edge_count() as u64 - 3 * brute;
            assert_eq!(pi3(g).unwrap().value, expected, "pi3 mismatch on {}", cg.cert);
            checked += 1;
        }
    }
    // 1 + 2 + 4 + 11 + 34 isomorphism classes
    assert_eq!(checked, 52);
}

#[test]
fn six_vertex_classes_keep_the_lp_sandwich() {
    let k6 = Graph::complete(6);
    assert_eq!(max_integer_triangle_packing(&k6).unwrap().value, 4);
    assert_eq!(pi3(&k6).unwrap().value, 2 * 15 - 3 * 4);
    for cg in enumerate_graphs(6).unwrap() {
        let g = &cg.graph;
        let frac = pi3f(g).unwrap();
        let whole = pi3(g).unwrap();
        assert!(frac.value <= rat_int(whole.value as i64), "gap inverted on {}", cg.cert);
        assert!(rat_int(whole.value as i64) <= rat_int(2 * g.edge_count() as i64));
        assert_eq!(frac.decomposition.validate_exact_cover(g), Ok(()));
    }
}

#[test]
fn fractional_beats_integral_strictly_somewhere() {
    // K5 packs two disjoint triangles integrally but 10/3 fractionally, so
    // the relaxation is strict: pi3f = 10 < 12 = pi3
    let k5 = Graph::complete(5);
    assert_eq!(max_integer_triangle_packing(&k5).unwrap().value, 2);
    assert_eq!(
        max_fractional_triangle_packing(&k5).unwrap().value,
        rat(10, 3)
    );
    assert_eq!(pi3(&k5).unwrap().value, 14);
    assert_eq!(pi3f(&k5).unwrap().value, rat_int(10));
    let gap: BigRational = rat_int(14) - rat_int(10);
    assert!(gap > rat_int(0));
}
