#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scsrg_core::constructions::{davis, lex_product, paley, peisert};
use scsrg_core::{AbelianGroup, ConnectionSet, DenseGraph};

pub const SEED: u64 = 0x5eed_c0de;

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Every constructed family instance small enough for quadratic checks,
/// with a short label.
pub fn family_corpus() -> Vec<(String, ConnectionSet)> {
    let mut out = Vec::new();
    for q in [5, 9, 13, 17, 25, 29, 49, 81] {
        out.push((format!("paley{q}"), paley(q).unwrap().connection_set));
    }
    for q in [9, 49, 81] {
        out.push((format!("peisert{q}"), peisert(q).unwrap().connection_set));
    }
    out.push(("davis3".into(), davis(3).unwrap().connection_set));
    let p5 = paley(5).unwrap();
    out.push(("p5[p5]".into(), lex_product(&p5, &p5).unwrap().connection_set));
    let p9 = paley(9).unwrap();
    out.push(("p5[p9]".into(), lex_product(&p5, &p9).unwrap().connection_set));
    out
}

/// Small connection sets outside the families, including degenerate ones.
pub fn misc_corpus() -> Vec<(String, ConnectionSet)> {
    let z = |n| AbelianGroup::cyclic(n).unwrap();
    vec![
        ("c5".into(), ConnectionSet::from_indices(&z(5), [1, 4]).unwrap()),
        ("z4{2}".into(), ConnectionSet::from_indices(&z(4), [2]).unwrap()),
        ("z7{}".into(), ConnectionSet::from_indices(&z(7), []).unwrap()),
        ("k6".into(), ConnectionSet::from_indices(&z(6), 1..6).unwrap()),
        ("c6(1,5,3)".into(), ConnectionSet::from_indices(&z(6), [1, 3, 5]).unwrap()),
        (
            "z2xz4".into(),
            ConnectionSet::from_indices(&AbelianGroup::new(vec![2, 4]).unwrap(), [1, 3, 4]).unwrap(),
        ),
    ]
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> DenseGraph {
    let mut g = DenseGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random inverse-closed, identity-free subset, each inverse pair kept with
/// probability one half.
pub fn random_connection_set(rng: &mut impl Rng, group: &AbelianGroup) -> ConnectionSet {
    let mut keep = vec![false; group.order()];
    for i in 1..group.order() {
        let j = group.neg_index(i);
        if i <= j {
            let k = rng.random_bool(0.5);
            keep[i] = k;
            keep[j] = k;
        }
    }
    ConnectionSet::from_indices(group, (0..group.order()).filter(|&i| keep[i])).unwrap()
}

/// Adjacency matrix as nested booleans, for oracles that avoid the bit
/// representation.
pub fn matrix(g: &DenseGraph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}
