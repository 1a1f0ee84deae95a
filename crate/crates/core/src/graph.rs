//! Dense undirected simple graphs as packed bit rows, with exact structural
//! checks: strong regularity, the adjacency-matrix identity, distance
//! regularity, clique counts and ranks over `Z_p`.
//!
//! Everything here is integral. Spectra are carried as the exact pair
//! `(beta, delta)`; there is no floating point.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest vertex count a [`DenseGraph`] accepts.
pub const MAX_VERTICES: usize = 4096;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for DenseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DenseGraph {{ n: {}, edges: {} }}", self.n, self.edge_count())
    }
}

impl DenseGraph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n` is zero or above [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&n), "vertex count {n} outside 1..={MAX_VERTICES}");
        let words = n.div_ceil(WORD);
        DenseGraph { n, words, bits: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Self {
        DenseGraph::empty(n).complement()
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = DenseGraph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = DenseGraph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Panics on a loop or an out-of-range endpoint.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = DenseGraph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v}) on {} vertices", self.n);
        self.bits[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.bits[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Neighborhood of `u` as packed bits.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        popcount(self.row(u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// `|N(u) ∩ N(v)|`.
    #[inline]
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    /// Edge iff non-edge between distinct vertices.
    pub fn complement(&self) -> DenseGraph {
        let mut out = self.clone();
        let tail = self.n % WORD;
        for u in 0..self.n {
            let row = &mut out.bits[u * self.words..(u + 1) * self.words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail != 0 {
                row[self.words - 1] &= (1u64 << tail) - 1;
            }
            row[u / WORD] &= !(1 << (u % WORD));
        }
        out
    }

    /// The graph with vertex `u` renamed `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> DenseGraph {
        assert_eq!(perm.len(), self.n);
        let mut out = DenseGraph::empty(self.n);
        for u in 0..self.n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                out.add_edge(perm[u], perm[v]);
            }
        }
        out
    }

    /// `Γ1[Γ2]`: vertex `(a, b)` has index `a * n2 + b`, and `(a,b) ~ (c,d)`
    /// iff `a ~ c`, or `a = c` and `b ~ d`.
    pub fn lexicographic_product(g1: &DenseGraph, g2: &DenseGraph) -> DenseGraph {
        let n2 = g2.n;
        let mut out = DenseGraph::empty(g1.n * n2);
        for a in 0..g1.n {
            for c in 0..g1.n {
                for b in 0..n2 {
                    for d in 0..n2 {
                        let (x, y) = (a * n2 + b, c * n2 + d);
                        if x < y && (g1.has_edge(a, c) || (a == c && g2.has_edge(b, d))) {
                            out.add_edge(x, y);
                        }
                    }
                }
            }
        }
        out
    }

    /// Distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        set_bit(&mut seen, source);
        set_bit(&mut frontier, source);
        dist[source] = 0;
        let mut level = 0;
        loop {
            let mut next = vec![0u64; self.words];
            for u in iter_bits(&frontier) {
                for (nw, (rw, sw)) in next.iter_mut().zip(self.row(u).iter().zip(&seen)) {
                    *nw |= rw & !sw;
                }
            }
            if next.iter().all(|&w| w == 0) {
                return dist;
            }
            level += 1;
            for v in iter_bits(&next) {
                dist[v] = level;
            }
            for (s, nw) in seen.iter_mut().zip(&next) {
                *s |= nw;
            }
            frontier = next;
        }
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Maximum eccentricity, computed by BFS from every vertex.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for u in 0..self.n {
            for d in self.bfs_distances(u) {
                if d == usize::MAX {
                    return Diameter::Disconnected;
                }
                best = best.max(d);
            }
        }
        Diameter::Finite(best)
    }

    /// Recognizes a strongly regular graph by direct common-neighbor counts
    /// over all vertex pairs.
    pub fn check_srg(&self) -> Result<SrgParams, NotStronglyRegular> {
        let n = self.n;
        let refuse = |reason| Err(NotStronglyRegular { reason });
        if n < 2 || self.edge_count() == 0 {
            return refuse(NotSrgReason::Empty);
        }
        if self.edge_count() == n * (n - 1) / 2 {
            return refuse(NotSrgReason::Complete);
        }
        let k = self.degree(0);
        if let Some(v) = (1..n).find(|&v| self.degree(v) != k) {
            return refuse(NotSrgReason::Irregular { u: 0, degree_u: k, v, degree_v: self.degree(v) });
        }
        if !self.is_connected() {
            return refuse(NotSrgReason::Disconnected);
        }
        let mut lambda: Option<((usize, usize), usize)> = None;
        let mut mu: Option<((usize, usize), usize)> = None;
        for u in 0..n {
            for v in u + 1..n {
                let c = self.common_neighbors(u, v);
                let adjacent = self.has_edge(u, v);
                let slot = if adjacent { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(((u, v), c)),
                    Some((first, expected)) if expected != c => {
                        return refuse(NotSrgReason::CommonNeighbors {
                            adjacent,
                            first,
                            first_count: expected,
                            second: (u, v),
                            second_count: c,
                        });
                    }
                    _ => {}
                }
            }
        }
        let (Some((_, lambda)), Some((_, mu))) = (lambda, mu) else {
            unreachable!("graph is neither empty nor complete");
        };
        Ok(SrgParams { n, k, lambda, mu })
    }

    /// Checks `A^2 = k I + λ A + μ (J - I - A)` entrywise.
    pub fn check_adjacency_identity(&self, p: &SrgParams) -> bool {
        if p.n != self.n {
            return false;
        }
        for u in 0..self.n {
            if self.degree(u) != p.k {
                return false;
            }
            for v in u + 1..self.n {
                let expected = if self.has_edge(u, v) { p.lambda } else { p.mu };
                if self.common_neighbors(u, v) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Intersection array from the distance partition of every base vertex.
    pub fn intersection_array(&self) -> Result<IntersectionArray, NotDistanceRegular> {
        let mut b: Vec<usize> = Vec::new();
        let mut c: Vec<usize> = Vec::new();
        let mut layer = vec![0u64; self.words];
        for x in 0..self.n {
            let dist = self.bfs_distances(x);
            if dist.contains(&usize::MAX) {
                return Err(NotDistanceRegular::Disconnected);
            }
            let ecc = dist.iter().copied().max().unwrap_or(0);
            if x == 0 {
                b = vec![usize::MAX; ecc];
                c = vec![usize::MAX; ecc];
            } else if ecc != b.len() {
                return Err(NotDistanceRegular::Eccentricity { vertex: x, eccentricity: ecc, expected: b.len() });
            }
            let layers: Vec<Vec<u64>> = (0..=ecc)
                .map(|i| {
                    layer.iter_mut().for_each(|w| *w = 0);
                    for (v, _) in dist.iter().enumerate().filter(|(_, &d)| d == i) {
                        set_bit(&mut layer, v);
                    }
                    layer.clone()
                })
                .collect();
            for (y, &i) in dist.iter().enumerate() {
                let row = self.row(y);
                let count = |l: &[u64]| -> usize { row.iter().zip(l).map(|(a, b)| (a & b).count_ones() as usize).sum() };
                if i < ecc {
                    let bi = count(&layers[i + 1]);
                    check_constant(&mut b[i], bi, (x, y), i, true)?;
                }
                if i > 0 {
                    let ci = count(&layers[i - 1]);
                    check_constant(&mut c[i - 1], ci, (x, y), i, false)?;
                }
            }
        }
        Ok(IntersectionArray { b, c })
    }

    /// Triangle count, 4-clique count and degree multiset.
    pub fn invariant_counts(&self) -> InvariantCounts {
        let mut triangles = 0u64;
        let mut four_cliques = 0u64;
        let mut cand = vec![0u64; self.words];
        for u in 0..self.n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                for (i, w) in cand.iter_mut().enumerate() {
                    *w = self.row(u)[i] & self.row(v)[i] & above_mask(v, i);
                }
                triangles += popcount(&cand) as u64;
                let mut inner = 0u64;
                for w in iter_bits(&cand) {
                    inner += self.row(w).iter().zip(&cand).map(|(a, b)| (a & b).count_ones() as u64).sum::<u64>();
                }
                four_cliques += inner / 2;
            }
        }
        let mut degrees: BTreeMap<usize, usize> = BTreeMap::new();
        for d in self.degrees() {
            *degrees.entry(d).or_default() += 1;
        }
        InvariantCounts { triangles, four_cliques, degrees: degrees.into_iter().collect() }
    }

    /// Rank of `A + shift * I` over `Z_p`.
    pub fn mod_p_rank(&self, p: u32, shift: i64) -> usize {
        assert!(p >= 2, "modulus must be a prime");
        let diag = shift.rem_euclid(p as i64) as u32;
        if p == 2 {
            return self.rank_gf2(diag == 1);
        }
        let n = self.n;
        let mut m: Vec<Vec<u32>> = (0..n)
            .map(|u| {
                let mut row: Vec<u32> = (0..n).map(|v| self.has_edge(u, v) as u32).collect();
                row[u] = diag;
                row
            })
            .collect();
        rank_mod_p(&mut m, p)
    }

    fn rank_gf2(&self, plus_identity: bool) -> usize {
        let mut rows: Vec<Vec<u64>> = (0..self.n)
            .map(|u| {
                let mut r = self.row(u).to_vec();
                if plus_identity {
                    r[u / WORD] ^= 1 << (u % WORD);
                }
                r
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.n {
            let (w, bit) = (col / WORD, 1u64 << (col % WORD));
            let Some(pivot) = (rank..self.n).find(|&r| rows[r][w] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[w] & bit != 0 {
                    for (a, b) in row.iter_mut().zip(&pivot_row) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// For every vertex, the number of vertices at each distance (index 0 is
    /// the vertex itself); unreachable vertices are dropped. Returned as a
    /// sorted multiset of `(profile, multiplicity)`.
    pub fn distance_distribution(&self) -> Vec<(Vec<usize>, usize)> {
        let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for u in 0..self.n {
            let mut profile: Vec<usize> = Vec::new();
            for d in self.bfs_distances(u).into_iter().filter(|&d| d != usize::MAX) {
                if profile.len() <= d {
                    profile.resize(d + 1, 0);
                }
                profile[d] += 1;
            }
            *counts.entry(profile).or_default() += 1;
        }
        counts.into_iter().collect()
    }
}

fn check_constant(
    slot: &mut usize,
    value: usize,
    pair: (usize, usize),
    distance: usize,
    is_b: bool,
) -> Result<(), NotDistanceRegular> {
    if *slot == usize::MAX {
        *slot = value;
        Ok(())
    } else if *slot != value {
        Err(NotDistanceRegular::NonConstant { is_b, distance, pair, found: value, expected: *slot })
    } else {
        Ok(())
    }
}

/// Gaussian elimination over `Z_p` for a small prime `p`; rows are consumed.
pub(crate) fn rank_mod_p(m: &mut [Vec<u32>], p: u32) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let p64 = p as u64;
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_multiple_of(p)) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_pow(m[rank][col] as u64, p64 - 2, p64);
        for x in m[rank].iter_mut() {
            *x = (*x as u64 * inv % p64) as u32;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col] % p;
            if f == 0 {
                continue;
            }
            let (a, b) = (&mut row[col..], &pivot_row[col..]);
            match p {
                3 => axpy(a, b, 3 - f, 3),
                5 => axpy(a, b, 5 - f, 5),
                7 => axpy(a, b, 7 - f, 7),
                _ if p < 1 << 15 => axpy(a, b, p - f, p),
                _ => {
                    for (a, &b) in a.iter_mut().zip(b) {
                        *a = ((*a as u64 + (p - f) as u64 * b as u64) % p64) as u32;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `a += f * b (mod p)` for `p < 2^15`; inlined so constant moduli
/// specialize.
#[inline(always)]
fn axpy(a: &mut [u32], b: &[u32], f: u32, p: u32) {
    for (x, &y) in a.iter_mut().zip(b) {
        *x = (*x + f * y) % p;
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

#[inline]
pub(crate) fn popcount(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / WORD] |= 1 << (i % WORD);
}

/// Bits strictly above position `v`, restricted to word `i`.
#[inline]
fn above_mask(v: usize, i: usize) -> u64 {
    let w = v / WORD;
    match i.cmp(&w) {
        core::cmp::Ordering::Less => 0,
        core::cmp::Ordering::Greater => !0,
        core::cmp::Ordering::Equal => {
            let b = v % WORD;
            if b == WORD - 1 { 0 } else { !0u64 << (b + 1) }
        }
    }
}

pub(crate) fn iter_bits(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        core::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * WORD + t)
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub fn new(n: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgParams { n, k, lambda, mu }
    }

    /// Conference parameters `(4t+1, 2t, t-1, t)`; needs `t >= 1`.
    pub fn conference(t: usize) -> Self {
        SrgParams { n: 4 * t + 1, k: 2 * t, lambda: t - 1, mu: t }
    }

    /// `β = λ − μ`.
    pub fn beta(&self) -> i64 {
        self.lambda as i64 - self.mu as i64
    }

    /// `Δ = (λ − μ)² + 4(k − μ)`.
    pub fn delta(&self) -> i64 {
        self.beta() * self.beta() + 4 * (self.k as i64 - self.mu as i64)
    }

    /// `(n − k − 1) μ = k (k − λ − 1)`.
    pub fn is_feasible(&self) -> bool {
        let lhs = (self.n as i64 - self.k as i64 - 1) * self.mu as i64;
        let rhs = self.k as i64 * (self.k as i64 - self.lambda as i64 - 1);
        lhs == rhs
    }

    /// `t` when the parameters are `(4t+1, 2t, t−1, t)`.
    pub fn conference_t(&self) -> Option<usize> {
        let t = self.mu;
        (t >= 1 && *self == SrgParams::conference(t)).then_some(t)
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> SrgParams {
        let (n, k, l, m) = (self.n, self.k, self.lambda, self.mu);
        SrgParams { n, k: n - k - 1, lambda: n + m - 2 - 2 * k, mu: n - 2 * k + l }
    }

    pub fn eigenvalues(&self) -> Eigenvalues {
        Eigenvalues::new(self.k as i64, self.beta(), self.delta())
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// `k` and `(β ± √Δ)/2`, kept as the integer pair `(β, Δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eigenvalues {
    pub k: i64,
    pub beta: i64,
    pub delta: i64,
    /// `√Δ` when `Δ` is a perfect square.
    pub sqrt_delta: Option<i64>,
}

impl Eigenvalues {
    pub fn new(k: i64, beta: i64, delta: i64) -> Self {
        let sqrt_delta = (delta >= 0)
            .then(|| crate::arith::isqrt(delta as u64) as i64)
            .filter(|s| s * s == delta);
        Eigenvalues { k, beta, delta, sqrt_delta }
    }

    /// The two restricted eigenvalues as doubled integers `β ± √Δ`, when
    /// `Δ` is a perfect square.
    pub fn doubled_restricted(&self) -> Option<(i64, i64)> {
        self.sqrt_delta.map(|s| (self.beta + s, self.beta - s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotStronglyRegular {
    pub reason: NotSrgReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotSrgReason {
    /// Fewer than two vertices or no edges.
    Empty,
    Complete,
    Disconnected,
    Irregular { u: usize, degree_u: usize, v: usize, degree_v: usize },
    /// Two pairs of the same adjacency type with different common-neighbor
    /// counts.
    CommonNeighbors {
        adjacent: bool,
        first: (usize, usize),
        first_count: usize,
        second: (usize, usize),
        second_count: usize,
    },
}

impl fmt::Display for NotStronglyRegular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason {
            NotSrgReason::Empty => f.write_str("graph has no edges"),
            NotSrgReason::Complete => f.write_str("graph is complete"),
            NotSrgReason::Disconnected => f.write_str("graph is disconnected"),
            NotSrgReason::Irregular { u, degree_u, v, degree_v } => {
                write!(f, "vertex {u} has degree {degree_u} but vertex {v} has degree {degree_v}")
            }
            NotSrgReason::CommonNeighbors { adjacent, first, first_count, second, second_count } => write!(
                f,
                "{} pairs {:?} and {:?} have {} and {} common neighbors",
                if adjacent { "adjacent" } else { "non-adjacent" },
                first,
                second,
                first_count,
                second_count
            ),
        }
    }
}

/// `{b0, ..., b_{d-1}; c1, ..., c_d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> usize {
        self.b.first().copied().unwrap_or(0)
    }

    /// `a_i = k − b_i − c_i` for `i = 0..=d` (with `b_d = c_0 = 0`).
    pub fn a(&self) -> Vec<usize> {
        let k = self.valency();
        (0..=self.diameter())
            .map(|i| {
                let bi = self.b.get(i).copied().unwrap_or(0);
                let ci = if i == 0 { 0 } else { self.c[i - 1] };
                k - bi - ci
            })
            .collect()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| alloc::format!("{x}")).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotDistanceRegular {
    Disconnected,
    Eccentricity { vertex: usize, eccentricity: usize, expected: usize },
    /// `b_i` (or `c_i` when `is_b` is false) differs at the given pair.
    NonConstant { is_b: bool, distance: usize, pair: (usize, usize), found: usize, expected: usize },
}

impl fmt::Display for NotDistanceRegular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotDistanceRegular::Disconnected => f.write_str("graph is disconnected"),
            NotDistanceRegular::Eccentricity { vertex, eccentricity, expected } => {
                write!(f, "vertex {vertex} has eccentricity {eccentricity}, expected {expected}")
            }
            NotDistanceRegular::NonConstant { is_b, distance, pair, found, expected } => write!(
                f,
                "{}_{} is {} at pair {:?}, expected {}",
                if *is_b { "b" } else { "c" },
                distance,
                found,
                pair,
                expected
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantCounts {
    pub triangles: u64,
    pub four_cliques: u64,
    /// `(degree, multiplicity)`, sorted by degree.
    pub degrees: Vec<(usize, usize)>,
}
