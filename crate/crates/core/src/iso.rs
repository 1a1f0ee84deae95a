//! Isomorphism and self-complementarity decisions with checkable
//! certificates.
//!
//! Three routes, tried in this order:
//!
//! 1. For Cayley graphs, a group automorphism `σ` with `σ(S) = G \ (S ∪ {e})`
//!    is a fast positive certificate. Its absence proves nothing.
//! 2. A [`Fingerprint`] of isomorphism invariants refutes quickly when two
//!    graphs differ in one of them.
//! 3. Individualization-refinement search decides every remaining case. The
//!    two graphs are refined jointly so that color names agree; the search
//!    individualizes the first vertex of the first smallest non-singleton
//!    cell of the first graph and tries every vertex of the matching cell of
//!    the second, in increasing order. An exhausted tree is a proof of
//!    non-isomorphism.
//!
//! The search runs sequentially, so the bijection it returns is the one at
//! the first successful leaf in that order and is reproducible. Every
//! positive answer is re-checked with [`verify_certificate`].

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cayley::ConnectionSet;
use crate::graph::{iter_bits, DenseGraph, SrgParams};
use crate::group::{EnumerationBudget, GroupAutomorphism, GroupError};

/// Primes whose ranks of `A` and `A + I` enter the fingerprint.
pub const FINGERPRINT_PRIMES: [u32; 4] = [2, 3, 5, 7];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoError {
    /// Node or time budget ran out before a decision.
    Undecided(SearchStats),
    /// The connection-set hint does not generate the given graph.
    HintMismatch,
    /// A positive answer failed re-verification. Indicates a bug.
    CertificateRejected,
}

impl fmt::Display for IsoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoError::Undecided(s) => write!(f, "undecided within budget after {} search nodes", s.nodes),
            IsoError::HintMismatch => f.write_str("connection-set hint does not generate this graph"),
            IsoError::CertificateRejected => f.write_str("internal error: certificate failed verification"),
        }
    }
}

impl core::error::Error for IsoError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoCertificate {
    /// `σ(S)` is the complementary connection set; `permutation` is `σ`
    /// acting on vertex indices.
    GroupAutomorphism { automorphism: GroupAutomorphism, permutation: Vec<usize> },
    /// `u ~ v` in the first graph iff `π(u) ~ π(v)` in the second.
    VertexBijection { permutation: Vec<usize> },
    /// An invariant with different values on the two graphs.
    InvariantRefutation { invariant: &'static str, left: String, right: String },
    /// The complete search tree has no isomorphism.
    SearchExhausted,
}

impl IsoCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            IsoCertificate::GroupAutomorphism { .. } => "group-automorphism",
            IsoCertificate::VertexBijection { .. } => "vertex-bijection",
            IsoCertificate::InvariantRefutation { .. } => "invariant-refutation",
            IsoCertificate::SearchExhausted => "search-exhausted",
        }
    }

    pub fn permutation(&self) -> Option<&[usize]> {
        match self {
            IsoCertificate::GroupAutomorphism { permutation, .. }
            | IsoCertificate::VertexBijection { permutation } => Some(permutation),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub refinements: u64,
    pub max_depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refinement {
    /// Colors refined by counts of neighbors in each color class.
    Basic,
    /// Additionally counts, for each vertex and each color class, the edges
    /// inside the part of its neighborhood in that class. Splits strongly
    /// regular graphs once a vertex is individualized.
    CellEdges,
    /// `CellEdges` when the first graph is strongly regular, else `Basic`.
    Auto,
}

#[derive(Clone, Copy)]
pub struct IsoOptions<'a> {
    pub max_nodes: u64,
    pub refinement: Refinement,
    /// Compare fingerprints before searching. Disabling forces the search to
    /// decide on its own.
    pub use_fingerprint: bool,
    /// Polled once per search node; returning true abandons the search.
    pub interrupt: Option<&'a dyn Fn() -> bool>,
    pub automorphism_budget: EnumerationBudget,
}

impl Default for IsoOptions<'_> {
    fn default() -> Self {
        IsoOptions {
            max_nodes: 100_000_000,
            refinement: Refinement::Auto,
            use_fingerprint: true,
            interrupt: None,
            automorphism_budget: EnumerationBudget::default(),
        }
    }
}

impl fmt::Debug for IsoOptions<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IsoOptions")
            .field("max_nodes", &self.max_nodes)
            .field("refinement", &self.refinement)
            .field("use_fingerprint", &self.use_fingerprint)
            .field("interrupt", &self.interrupt.is_some())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoDecision {
    pub isomorphic: bool,
    pub certificate: IsoCertificate,
    pub stats: SearchStats,
}

/// Isomorphism invariants, compared field by field in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub n: usize,
    pub degrees: Vec<(usize, usize)>,
    pub srg: Option<SrgParams>,
    pub triangles: u64,
    pub four_cliques: u64,
    /// `(p, rank_p(A), rank_p(A + I))`.
    pub ranks: Vec<(u32, usize, usize)>,
    pub distances: Vec<(Vec<usize>, usize)>,
}

impl Fingerprint {
    pub fn of(g: &DenseGraph) -> Fingerprint {
        let counts = g.invariant_counts();
        Fingerprint {
            n: g.n(),
            degrees: counts.degrees,
            srg: g.check_srg().ok(),
            triangles: counts.triangles,
            four_cliques: counts.four_cliques,
            ranks: FINGERPRINT_PRIMES.iter().map(|&p| (p, g.mod_p_rank(p, 0), g.mod_p_rank(p, 1))).collect(),
            distances: g.distance_distribution(),
        }
    }

    /// First field that differs, with both values rendered.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<(&'static str, String, String)> {
        fn diff<T: PartialEq + fmt::Debug>(name: &'static str, a: &T, b: &T) -> Option<(&'static str, String, String)> {
            (a != b).then(|| (name, format!("{a:?}"), format!("{b:?}")))
        }
        diff("vertex count", &self.n, &other.n)
            .or_else(|| diff("degree multiset", &self.degrees, &other.degrees))
            .or_else(|| diff("strongly regular parameters", &self.srg, &other.srg))
            .or_else(|| diff("triangle count", &self.triangles, &other.triangles))
            .or_else(|| diff("4-clique count", &self.four_cliques, &other.four_cliques))
            .or_else(|| diff("distance distribution", &self.distances, &other.distances))
            .or_else(|| diff("p-ranks of A and A+I", &self.ranks, &other.ranks))
    }
}

/// `(u ~ v in g1) ⇔ (π(u) ~ π(v) in g2)` for all pairs, and `π` is a
/// permutation of the vertex set.
pub fn verify_certificate(g1: &DenseGraph, g2: &DenseGraph, perm: &[usize]) -> bool {
    let n = g1.n();
    if g2.n() != n || perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    (0..n).all(|u| (u + 1..n).all(|v| g1.has_edge(u, v) == g2.has_edge(perm[u], perm[v])))
}

/// Outcome of scanning `Aut(G)` for `σ` with `σ(S) = G \ (S ∪ {e})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismScan {
    /// Automorphisms examined, including the successful one.
    pub scanned: u64,
    pub found: Option<GroupAutomorphism>,
}

/// Scans automorphisms in enumeration order and stops at the first one
/// carrying `S` onto its complement. `found == None` means every
/// automorphism was examined, which does not rule out self-complementarity.
pub fn selfcomp_by_group_automorphism(
    s: &ConnectionSet,
    budget: EnumerationBudget,
) -> Result<AutomorphismScan, GroupError> {
    let group = s.group();
    let complement = s.complement();
    if complement.len() != s.len() {
        return Ok(AutomorphismScan { scanned: 0, found: None });
    }
    let target = complement.mask();
    let members: Vec<Vec<u32>> = s.indices().iter().map(|&i| group.residues_at(i)).collect();
    let factors = group.factors();
    let mut acc = vec![0u64; group.rank()];
    let mut scanned = 0u64;
    for sigma in group.automorphisms(budget)? {
        scanned += 1;
        let hit = members.iter().all(|r| {
            acc.iter_mut().for_each(|a| *a = 0);
            for (&c, img) in r.iter().zip(sigma.images()) {
                for ((a, &x), &n) in acc.iter_mut().zip(img.residues()).zip(factors) {
                    *a = (*a + c as u64 * x as u64) % n as u64;
                }
            }
            let idx: Vec<u32> = acc.iter().map(|&a| a as u32).collect();
            target[group.index_unchecked(&idx)]
        });
        if hit {
            return Ok(AutomorphismScan { scanned, found: Some(sigma) });
        }
    }
    Ok(AutomorphismScan { scanned, found: None })
}

/// Decides whether `g1` and `g2` are isomorphic.
pub fn are_isomorphic(g1: &DenseGraph, g2: &DenseGraph, opts: &IsoOptions<'_>) -> Result<IsoDecision, IsoError> {
    let refute = |invariant, left: String, right: String| IsoDecision {
        isomorphic: false,
        certificate: IsoCertificate::InvariantRefutation { invariant, left, right },
        stats: SearchStats::default(),
    };
    if g1.n() != g2.n() {
        return Ok(refute("vertex count", format!("{}", g1.n()), format!("{}", g2.n())));
    }
    let mut srg = None;
    if opts.use_fingerprint {
        let (f1, f2) = (Fingerprint::of(g1), Fingerprint::of(g2));
        if let Some((name, a, b)) = f1.first_difference(&f2) {
            return Ok(refute(name, a, b));
        }
        srg = Some(f1.srg.is_some());
    }
    let mode = match opts.refinement {
        Refinement::Auto => {
            let is_srg = srg.unwrap_or_else(|| g1.check_srg().is_ok());
            if is_srg { Refinement::CellEdges } else { Refinement::Basic }
        }
        m => m,
    };
    let mut search = Search { g1, g2, mode, opts, stats: SearchStats::default() };
    let found = search.run()?;
    let stats = search.stats;
    match found {
        Some(permutation) => {
            if !verify_certificate(g1, g2, &permutation) {
                return Err(IsoError::CertificateRejected);
            }
            Ok(IsoDecision { isomorphic: true, certificate: IsoCertificate::VertexBijection { permutation }, stats })
        }
        None => Ok(IsoDecision { isomorphic: false, certificate: IsoCertificate::SearchExhausted, stats }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfComplementarity {
    pub decision: IsoDecision,
    /// Present when a connection-set hint was given.
    pub scan: Option<Result<AutomorphismScan, GroupError>>,
}

/// Decides whether `g` is isomorphic to its complement.
///
/// A connection-set hint, which must generate `g` exactly, enables the
/// group-automorphism shortcut; an infeasible automorphism enumeration is
/// recorded and the full decider runs instead.
pub fn is_self_complementary(
    g: &DenseGraph,
    hint: Option<&ConnectionSet>,
    opts: &IsoOptions<'_>,
) -> Result<SelfComplementarity, IsoError> {
    let n = g.n();
    if let Some(s) = hint {
        if s.group().order() != n || s.cayley_graph() != *g {
            return Err(IsoError::HintMismatch);
        }
    }
    let refute = |invariant, left: String, right: String| SelfComplementarity {
        decision: IsoDecision {
            isomorphic: false,
            certificate: IsoCertificate::InvariantRefutation { invariant, left, right },
            stats: SearchStats::default(),
        },
        scan: None,
    };
    let edges = g.edge_count();
    let complement_edges = n * (n - 1) / 2 - edges;
    if edges != complement_edges {
        return Ok(refute("edge count", format!("{edges}"), format!("{complement_edges}")));
    }
    if g.regular_degree().is_some() && n % 4 != 1 {
        return Ok(refute("regular vertex count mod 4", format!("{}", n % 4), String::from("1")));
    }
    let complement = g.complement();
    let mut scan = None;
    if let Some(s) = hint {
        let result = selfcomp_by_group_automorphism(s, opts.automorphism_budget);
        if let Ok(AutomorphismScan { found: Some(sigma), .. }) = &result {
            let permutation = sigma.to_permutation();
            if !verify_certificate(g, &complement, &permutation) {
                return Err(IsoError::CertificateRejected);
            }
            return Ok(SelfComplementarity {
                decision: IsoDecision {
                    isomorphic: true,
                    certificate: IsoCertificate::GroupAutomorphism { automorphism: sigma.clone(), permutation },
                    stats: SearchStats::default(),
                },
                scan: Some(result),
            });
        }
        scan = Some(result);
    }
    let decision = are_isomorphic(g, &complement, opts)?;
    Ok(SelfComplementarity { decision, scan })
}

/// Stable coloring of a single graph; colors are `0..k` ordered by
/// refinement history.
pub fn stable_coloring(g: &DenseGraph, mode: Refinement) -> Vec<u32> {
    refine(g, vec![0; g.n()], resolve_basic(mode)).colors
}

/// Joint stable coloring of two graphs, so that equal colors correspond;
/// `None` if refinement already separates them.
pub fn joint_stable_coloring(g1: &DenseGraph, g2: &DenseGraph, mode: Refinement) -> Option<(Vec<u32>, Vec<u32>)> {
    if g1.n() != g2.n() {
        return None;
    }
    let trace = refine(g1, vec![0; g1.n()], resolve_basic(mode));
    let c2 = replay(g2, vec![0; g2.n()], &trace)?;
    Some((trace.colors, c2))
}

fn resolve_basic(mode: Refinement) -> Refinement {
    if mode == Refinement::Auto { Refinement::Basic } else { mode }
}

struct Search<'g, 'o, 'a> {
    g1: &'g DenseGraph,
    g2: &'g DenseGraph,
    mode: Refinement,
    opts: &'o IsoOptions<'a>,
    stats: SearchStats,
}

impl Search<'_, '_, '_> {
    fn run(&mut self) -> Result<Option<Vec<usize>>, IsoError> {
        let n = self.g1.n();
        self.stats.refinements += 1;
        let trace = refine(self.g1, vec![0; n], self.mode);
        match replay(self.g2, vec![0; n], &trace) {
            Some(c2) => self.descend(trace.colors, c2, 0),
            None => {
                self.stats.nodes = 1;
                Ok(None)
            }
        }
    }

    fn descend(&mut self, c1: Vec<u32>, c2: Vec<u32>, depth: usize) -> Result<Option<Vec<usize>>, IsoError> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if self.stats.nodes > self.opts.max_nodes || self.opts.interrupt.is_some_and(|f| f()) {
            return Err(IsoError::Undecided(self.stats));
        }
        let n = c1.len();
        let mut sizes = vec![0usize; n];
        for &c in &c1 {
            sizes[c as usize] += 1;
        }
        let target = (0..n).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c));
        let Some(target) = target.map(|c| c as u32) else {
            self.stats.leaves += 1;
            let mut by_color = vec![0usize; n];
            for (w, &c) in c2.iter().enumerate() {
                by_color[c as usize] = w;
            }
            let perm: Vec<usize> = c1.iter().map(|&c| by_color[c as usize]).collect();
            return Ok(verify_certificate(self.g1, self.g2, &perm).then_some(perm));
        };
        let v = c1.iter().position(|&c| c == target).expect("cell is non-empty");
        self.stats.refinements += 1;
        let trace = refine(self.g1, individualize(&c1, v), self.mode);
        for w in (0..n).filter(|&w| c2[w] == target) {
            self.stats.refinements += 1;
            let Some(b) = replay(self.g2, individualize(&c2, w), &trace) else {
                continue;
            };
            if let Some(perm) = self.descend(trace.colors.clone(), b, depth + 1)? {
                return Ok(Some(perm));
            }
        }
        Ok(None)
    }
}

/// One refinement round: the sorted signatures seen (new color = position)
/// and how many vertices received each.
struct Round {
    cell_edges: bool,
    dictionary: Vec<Vec<u32>>,
    counts: Vec<usize>,
}

/// Refinement history of the first graph, replayed on the second.
struct Trace {
    rounds: Vec<Round>,
    colors: Vec<u32>,
}

/// Refines to a stable coloring. In `CellEdges` mode the costly round runs
/// only once plain neighbor counts stop splitting cells.
fn refine(g: &DenseGraph, mut colors: Vec<u32>, mode: Refinement) -> Trace {
    let mut classes = normalize(&mut colors);
    let mut rounds = Vec::new();
    let mut cell_edges = false;
    loop {
        let mut ctx = SignatureContext::new(g, &colors, classes, cell_edges);
        let sigs: Vec<Vec<u32>> = (0..g.n()).map(|x| ctx.signature(g, &colors, x)).collect();
        let mut dictionary = sigs.clone();
        dictionary.sort_unstable();
        dictionary.dedup();
        let mut counts = vec![0usize; dictionary.len()];
        for (x, s) in sigs.iter().enumerate() {
            let c = dictionary.binary_search(s).expect("signature is present");
            colors[x] = c as u32;
            counts[c] += 1;
        }
        let split = dictionary.len() != classes;
        classes = dictionary.len();
        rounds.push(Round { cell_edges, dictionary, counts });
        if split {
            cell_edges = false;
        } else if mode == Refinement::CellEdges && !cell_edges {
            cell_edges = true;
        } else {
            return Trace { rounds, colors };
        }
    }
}

/// Applies the rounds of `trace` to another graph; `None` at the first
/// signature or class size the first graph did not produce.
fn replay(g: &DenseGraph, mut colors: Vec<u32>, trace: &Trace) -> Option<Vec<u32>> {
    let mut classes = normalize(&mut colors);
    let mut next = vec![0u32; g.n()];
    for round in &trace.rounds {
        let mut ctx = SignatureContext::new(g, &colors, classes, round.cell_edges);
        let mut counts = vec![0usize; round.counts.len()];
        for (x, slot) in next.iter_mut().enumerate() {
            let c = round.dictionary.binary_search(&ctx.signature(g, &colors, x)).ok()?;
            counts[c] += 1;
            if counts[c] > round.counts[c] {
                return None;
            }
            *slot = c as u32;
        }
        core::mem::swap(&mut colors, &mut next);
        classes = round.counts.len();
    }
    Some(colors)
}

/// Renames colors to `0..k` preserving order; returns `k`.
fn normalize(colors: &mut [u32]) -> usize {
    let mut used = colors.to_vec();
    used.sort_unstable();
    used.dedup();
    for c in colors.iter_mut() {
        *c = used.binary_search(c).expect("color is present") as u32;
    }
    used.len()
}

/// Puts `v` in a new singleton cell ordered just before the rest of its
/// old cell.
fn individualize(c: &[u32], v: usize) -> Vec<u32> {
    c.iter().enumerate().map(|(x, &col)| 2 * col + u32::from(x != v)).collect()
}

/// Per-vertex signature: own color, then `(color, neighbor count)` for each
/// color with a neighbor, plus the edge count inside that part of the
/// neighborhood when `cell_edges` is set.
struct SignatureContext {
    words: usize,
    masks: Vec<u64>,
    counts: Vec<u32>,
    inner: Vec<u32>,
    cell_edges: bool,
}

impl SignatureContext {
    fn new(g: &DenseGraph, colors: &[u32], k: usize, cell_edges: bool) -> Self {
        let words = g.words();
        let mut masks = Vec::new();
        if cell_edges {
            masks = vec![0u64; k * words];
            for (x, &c) in colors.iter().enumerate() {
                masks[c as usize * words + x / 64] |= 1 << (x % 64);
            }
        }
        SignatureContext { words, masks, counts: vec![0; k], inner: vec![0; k], cell_edges }
    }

    fn signature(&mut self, g: &DenseGraph, colors: &[u32], x: usize) -> Vec<u32> {
        let row = g.row(x);
        self.counts.iter_mut().for_each(|c| *c = 0);
        for y in iter_bits(row) {
            self.counts[colors[y] as usize] += 1;
        }
        if self.cell_edges {
            self.inner.iter_mut().for_each(|c| *c = 0);
            for y in iter_bits(row) {
                let cy = colors[y] as usize;
                let mask = &self.masks[cy * self.words..(cy + 1) * self.words];
                let e: u32 = g.row(y).iter().zip(row).zip(mask).map(|((a, b), m)| (a & b & m).count_ones()).sum();
                self.inner[cy] += e;
            }
        }
        let mut sig = vec![colors[x]];
        for (c, &cnt) in self.counts.iter().enumerate().filter(|(_, &cnt)| cnt > 0) {
            sig.push(c as u32);
            sig.push(cnt);
            if self.cell_edges {
                sig.push(self.inner[c] / 2);
            }
        }
        sig
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::AbelianGroup;

    fn circulant(n: usize, s: &[usize]) -> DenseGraph {
        let g = AbelianGroup::cyclic(n as u32).unwrap();
        ConnectionSet::from_indices(&g, s.iter().copied()).unwrap().cayley_graph()
    }

    fn p13() -> ConnectionSet {
        ConnectionSet::from_indices(&AbelianGroup::cyclic(13).unwrap(), [1, 3, 4, 9, 10, 12]).unwrap()
    }

    #[test]
    fn automorphism_certificates() {
        let scan = selfcomp_by_group_automorphism(&p13(), EnumerationBudget::default()).unwrap();
        let sigma = scan.found.unwrap();
        assert_eq!(sigma.images()[0].residues(), &[2]);
        assert_eq!(scan.scanned, 2);
        let c5 = ConnectionSet::from_indices(&AbelianGroup::cyclic(5).unwrap(), [1, 4]).unwrap();
        let scan = selfcomp_by_group_automorphism(&c5, EnumerationBudget::default()).unwrap();
        assert_eq!(scan.found.unwrap().images()[0].residues(), &[2]);
        // {1, 12} in Z_13 is too small to map onto its complement.
        let small = ConnectionSet::from_indices(&AbelianGroup::cyclic(13).unwrap(), [1, 12]).unwrap();
        let scan = selfcomp_by_group_automorphism(&small, EnumerationBudget::default()).unwrap();
        assert_eq!((scan.scanned, scan.found), (0, None));
    }

    #[test]
    fn fingerprint_examples() {
        let c5 = DenseGraph::cycle(5);
        let relabeled = c5.relabel(&[3, 0, 4, 1, 2]);
        assert_eq!(Fingerprint::of(&c5), Fingerprint::of(&relabeled));
        let diff = Fingerprint::of(&c5).first_difference(&Fingerprint::of(&DenseGraph::path(5))).unwrap();
        assert_eq!(diff.0, "degree multiset");
        let g = p13().cayley_graph();
        assert_eq!(Fingerprint::of(&g), Fingerprint::of(&g.complement()));
    }

    #[test]
    fn isomorphism_examples() {
        let opts = IsoOptions::default();
        let c5 = DenseGraph::cycle(5);
        let perm = [0, 2, 4, 1, 3];
        let other = c5.relabel(&perm);
        let d = are_isomorphic(&c5, &other, &opts).unwrap();
        assert!(d.isomorphic);
        assert!(verify_certificate(&c5, &other, d.certificate.permutation().unwrap()));
        let d = are_isomorphic(&c5, &DenseGraph::path(5), &opts).unwrap();
        assert!(!d.isomorphic);
        assert_eq!(d.certificate.kind(), "invariant-refutation");
        let g = p13().cayley_graph();
        let d = are_isomorphic(&g, &g.complement(), &opts).unwrap();
        assert!(d.isomorphic);
        assert!(verify_certificate(&g, &g.complement(), d.certificate.permutation().unwrap()));
    }

    #[test]
    fn self_complementary_examples() {
        let opts = IsoOptions::default();
        let p4 = DenseGraph::path(4);
        let d = is_self_complementary(&p4, None, &opts).unwrap();
        assert!(d.decision.isomorphic);
        assert_eq!(d.decision.certificate.kind(), "vertex-bijection");
        assert!(!is_self_complementary(&DenseGraph::path(5), None, &opts).unwrap().decision.isomorphic);
        let s = p13();
        let d = is_self_complementary(&s.cayley_graph(), Some(&s), &opts).unwrap();
        assert_eq!(d.decision.certificate.kind(), "group-automorphism");
        let wrong = DenseGraph::cycle(13);
        assert_eq!(is_self_complementary(&wrong, Some(&s), &opts), Err(IsoError::HintMismatch));
        // Regular, right edge count parity fails first: C_4 has 4 edges vs 2.
        let d = is_self_complementary(&DenseGraph::cycle(4), None, &opts).unwrap();
        assert_eq!(d.decision.certificate.kind(), "invariant-refutation");
    }

    #[test]
    fn certificate_checks() {
        let g = circulant(13, &[1, 3, 4, 9, 10, 12]);
        let id: Vec<usize> = (0..13).collect();
        assert!(verify_certificate(&g, &g, &id));
        assert!(!verify_certificate(&g, &DenseGraph::cycle(13), &id));
        assert!(!verify_certificate(&g, &g, &[0; 13]));
        assert!(!verify_certificate(&g, &g, &id[..12]));
    }

    #[test]
    fn budget_is_reported() {
        let g = circulant(13, &[1, 3, 4, 9, 10, 12]);
        let opts = IsoOptions { max_nodes: 1, use_fingerprint: false, ..IsoOptions::default() };
        assert!(matches!(are_isomorphic(&g, &g.complement(), &opts), Err(IsoError::Undecided(_))));
        let stop = || true;
        let opts = IsoOptions { interrupt: Some(&stop), use_fingerprint: false, ..IsoOptions::default() };
        assert!(matches!(are_isomorphic(&g, &g, &opts), Err(IsoError::Undecided(_))));
    }

    #[test]
    fn forced_search_agrees_with_fingerprint() {
        let opts = IsoOptions { use_fingerprint: false, ..IsoOptions::default() };
        let d = are_isomorphic(&DenseGraph::cycle(6), &circulant(6, &[1, 5, 3]).complement(), &opts).unwrap();
        // C6 vs the complement of K_{3,3} (two triangles).
        assert!(!d.isomorphic);
        assert_eq!(d.certificate, IsoCertificate::SearchExhausted);
    }
}
