mod common;

use rand::Rng;
use scsrg_core::constructions::{lex_product, paley};
use scsrg_core::iso::{
    are_isomorphic, is_self_complementary, joint_stable_coloring, selfcomp_by_group_automorphism, stable_coloring,
    verify_certificate, Fingerprint, IsoCertificate, IsoOptions, Refinement,
};
use scsrg_core::{DenseGraph, EnumerationBudget};

/// Extends a partial map vertex by vertex, keeping adjacency to every
/// mapped vertex consistent. Exhaustive over all permutations.
fn brute_force_isomorphic(g1: &DenseGraph, g2: &DenseGraph) -> bool {
    fn extend(m1: &[Vec<bool>], m2: &[Vec<bool>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let u = map.len();
        if u == m1.len() {
            return true;
        }
        for w in 0..m1.len() {
            if used[w] || (0..u).any(|x| m1[u][x] != m2[w][map[x]]) {
                continue;
            }
            used[w] = true;
            map.push(w);
            if extend(m1, m2, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    if g1.n() != g2.n() {
        return false;
    }
    let (m1, m2) = (common::matrix(g1), common::matrix(g2));
    extend(&m1, &m2, &mut Vec::new(), &mut vec![false; g1.n()])
}

/// Swaps edges `ab, cd` for `ac, bd`, which keeps every degree.
fn switch_edges(rng: &mut impl Rng, g: &DenseGraph) -> DenseGraph {
    let n = g.n();
    let mut h = g.clone();
    for _ in 0..200 {
        let (a, b, c, d) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        if distinct && h.has_edge(a, b) && h.has_edge(c, d) && !h.has_edge(a, c) && !h.has_edge(b, d) {
            h.remove_edge(a, b);
            h.remove_edge(c, d);
            h.add_edge(a, c);
            h.add_edge(b, d);
            return h;
        }
    }
    h
}

/// Seeded pairs on at most 12 vertices: relabelings, degree-preserving
/// switches, independent graphs with equal edge counts, and complements.
fn pair_corpus() -> Vec<(DenseGraph, DenseGraph)> {
    let mut rng = common::rng(21);
    let mut pairs = Vec::new();
    for i in 0..240 {
        let n = 1 + i % 12;
        let density = rng.random_range(0.2..0.8);
        let g = common::random_graph(&mut rng, n, density);
        match i % 4 {
            0 => {
                let h = g.relabel(&common::random_permutation(&mut rng, n));
                pairs.push((g, h));
            }
            1 => {
                let h = switch_edges(&mut rng, &g).relabel(&common::random_permutation(&mut rng, n));
                pairs.push((g, h));
            }
            2 => {
                let mut h = DenseGraph::empty(n);
                while h.edge_count() < g.edge_count() {
                    let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
                    if u != v {
                        h.add_edge(u, v);
                    }
                }
                pairs.push((g, h));
            }
            _ => {
                let c = g.complement();
                pairs.push((g, c));
            }
        }
    }
    pairs.push((DenseGraph::path(4), DenseGraph::path(4).complement()));
    pairs.push((DenseGraph::cycle(5), DenseGraph::cycle(5).complement()));
    pairs.push((DenseGraph::cycle(6), DenseGraph::cycle(6).complement()));
    let two_triangles = DenseGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
    pairs.push((DenseGraph::cycle(6), two_triangles));
    pairs
}

#[test]
fn decisions_match_brute_force() {
    let mut positives = 0;
    let mut negatives = 0;
    for (i, (g1, g2)) in pair_corpus().iter().enumerate() {
        let expected = brute_force_isomorphic(g1, g2);
        for refinement in [Refinement::Basic, Refinement::CellEdges, Refinement::Auto] {
            for use_fingerprint in [true, false] {
                let opts = IsoOptions { refinement, use_fingerprint, ..IsoOptions::default() };
                let d = are_isomorphic(g1, g2, &opts).unwrap();
                assert_eq!(d.isomorphic, expected, "pair {i} {refinement:?} fingerprint={use_fingerprint}");
                match &d.certificate {
                    IsoCertificate::VertexBijection { permutation } => {
                        assert!(verify_certificate(g1, g2, permutation));
                    }
                    IsoCertificate::InvariantRefutation { left, right, .. } => {
                        assert!(use_fingerprint);
                        assert_ne!(left, right);
                    }
                    IsoCertificate::SearchExhausted => assert!(!expected),
                    IsoCertificate::GroupAutomorphism { .. } => unreachable!(),
                }
            }
        }
        if expected { positives += 1 } else { negatives += 1 }
    }
    assert!(positives > 50 && negatives > 50, "{positives} / {negatives}");
}

#[test]
fn fingerprint_refutation_is_confirmed_by_search() {
    let forced = IsoOptions { use_fingerprint: false, ..IsoOptions::default() };
    let mut refuted = 0;
    for (g1, g2) in pair_corpus() {
        if g1.n() != g2.n() || Fingerprint::of(&g1) == Fingerprint::of(&g2) {
            continue;
        }
        refuted += 1;
        let d = are_isomorphic(&g1, &g2, &forced).unwrap();
        assert!(!d.isomorphic);
        assert_eq!(d.certificate, IsoCertificate::SearchExhausted);
    }
    assert!(refuted > 20);
}

#[test]
fn fingerprint_is_invariant() {
    let mut rng = common::rng(22);
    let mut graphs: Vec<DenseGraph> = common::family_corpus().into_iter().map(|(_, s)| s.cayley_graph()).collect();
    graphs.push(common::random_graph(&mut rng, 30, 0.4));
    for g in graphs {
        let f = Fingerprint::of(&g);
        for _ in 0..3 {
            let h = g.relabel(&common::random_permutation(&mut rng, g.n()));
            assert_eq!(Fingerprint::of(&h), f);
        }
    }
}

#[test]
fn stable_coloring_follows_relabeling() {
    let mut rng = common::rng(23);
    let mut graphs: Vec<DenseGraph> = (0..40).map(|i| common::random_graph(&mut rng, 5 + i, 0.3)).collect();
    graphs.extend(common::family_corpus().into_iter().map(|(_, s)| s.cayley_graph()));
    for g in graphs {
        for mode in [Refinement::Basic, Refinement::CellEdges] {
            let perm = common::random_permutation(&mut rng, g.n());
            let h = g.relabel(&perm);
            let (c1, c2) = joint_stable_coloring(&g, &h, mode).unwrap();
            for x in 0..g.n() {
                assert_eq!(c1[x], c2[perm[x]]);
            }
            let sizes = |c: &[u32]| {
                let mut s = vec![0usize; g.n()];
                c.iter().for_each(|&x| s[x as usize] += 1);
                s
            };
            assert_eq!(sizes(&stable_coloring(&g, mode)), sizes(&stable_coloring(&h, mode)));
        }
    }
}

#[test]
fn group_automorphism_certificates_translate_to_vertex_maps() {
    for (name, s) in common::family_corpus().into_iter().filter(|(_, s)| s.group().order() <= 49) {
        let Ok(scan) = selfcomp_by_group_automorphism(&s, EnumerationBudget::default()) else {
            continue;
        };
        if let Some(sigma) = scan.found {
            let g = s.cayley_graph();
            assert!(verify_certificate(&g, &g.complement(), &sigma.to_permutation()), "{name}");
        }
    }
}

#[test]
fn paley_graphs_have_multiplier_certificates() {
    for q in [5, 9, 13, 25] {
        let s = paley(q).unwrap().connection_set;
        let scan = selfcomp_by_group_automorphism(&s, EnumerationBudget::default()).unwrap();
        assert!(scan.found.is_some(), "paley {q}");
        let d = is_self_complementary(&s.cayley_graph(), Some(&s), &IsoOptions::default()).unwrap();
        assert_eq!(d.decision.certificate.kind(), "group-automorphism");
    }
}

#[test]
fn every_family_member_is_self_complementary_by_search() {
    for (name, s) in common::family_corpus() {
        let g = s.cayley_graph();
        let d = is_self_complementary(&g, None, &IsoOptions::default()).unwrap();
        assert!(d.decision.isomorphic, "{name}");
        assert!(verify_certificate(&g, &g.complement(), d.decision.certificate.permutation().unwrap()));
    }
}

#[test]
fn lex_square_of_pentagon() {
    let p5 = paley(5).unwrap();
    let g = lex_product(&p5, &p5).unwrap().connection_set.cayley_graph();
    assert!(g.check_srg().is_err());
    let d = is_self_complementary(&g, None, &IsoOptions::default()).unwrap();
    assert!(d.decision.isomorphic);
}

#[test]
fn search_is_deterministic() {
    let g = paley(13).unwrap().connection_set.cayley_graph();
    let opts = IsoOptions { use_fingerprint: false, ..IsoOptions::default() };
    let first = are_isomorphic(&g, &g.complement(), &opts).unwrap();
    for _ in 0..3 {
        assert_eq!(are_isomorphic(&g, &g.complement(), &opts).unwrap(), first);
    }
}
