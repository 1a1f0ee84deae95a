//! Finite abelian groups presented as products of cyclic groups
//! `Z_{n1} x ... x Z_{nk}`, written additively.
//!
//! Elements are residue tuples. Every group fixes a mixed-radix numbering of
//! its elements (`index = r1*(n2...nk) + ... + rk`); vertex numbering of Cayley
//! graphs, group-algebra coefficient vectors and graph6 exports all use it.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// A cyclic factor below 2, or a group with no factors.
    InvalidFactor(u64),
    TooLarge { order: u128 },
    ArityMismatch { expected: usize, found: usize },
    ResidueOutOfRange { position: usize, value: u64, modulus: u32 },
    IndexOutOfRange { index: usize, order: usize },
    GroupMismatch,
    NotAnAutomorphism(String),
    /// Automorphism enumeration would exceed the configured budget.
    EnumerationInfeasible { order: usize, candidates: u128 },
    Parse(String),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::InvalidFactor(n) => write!(f, "invalid cyclic factor Z{n} (need >= 2)"),
            GroupError::TooLarge { order } => write!(f, "group order {order} is too large"),
            GroupError::ArityMismatch { expected, found } => {
                write!(f, "element has {found} components, group has {expected} factors")
            }
            GroupError::ResidueOutOfRange { position, value, modulus } => {
                write!(f, "residue {value} at position {position} is not reduced mod {modulus}")
            }
            GroupError::IndexOutOfRange { index, order } => {
                write!(f, "element index {index} out of range for group of order {order}")
            }
            GroupError::GroupMismatch => f.write_str("operands belong to different groups"),
            GroupError::NotAnAutomorphism(why) => write!(f, "not an automorphism: {why}"),
            GroupError::EnumerationInfeasible { order, candidates } => write!(
                f,
                "automorphism enumeration infeasible: order {order}, {candidates} candidate image tuples"
            ),
            GroupError::Parse(s) => write!(f, "cannot parse group description: {s}"),
        }
    }
}

impl core::error::Error for GroupError {}

/// Largest group order accepted by [`AbelianGroup::new`].
pub const MAX_ORDER: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u32>,
    strides: Vec<usize>,
    order: usize,
}

/// A residue tuple. Membership in a particular group is checked by the
/// group's operations, not by the element itself.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(Vec<u32>);

impl GroupElement {
    pub fn new(residues: Vec<u32>) -> Self {
        GroupElement(residues)
    }

    pub fn residues(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }
}

impl From<Vec<u32>> for GroupElement {
    fn from(v: Vec<u32>) -> Self {
        GroupElement(v)
    }
}

/// Comma-separated residues, e.g. `1,4`.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl AbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::InvalidFactor(0));
        }
        let mut order: u128 = 1;
        for &n in &factors {
            if n < 2 {
                return Err(GroupError::InvalidFactor(n as u64));
            }
            order *= n as u128;
            if order > MAX_ORDER as u128 {
                return Err(GroupError::TooLarge { order });
            }
        }
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1] as usize;
        }
        Ok(AbelianGroup { factors, strides, order: order as usize })
    }

    /// `Z_n`.
    pub fn cyclic(n: u32) -> Result<Self, GroupError> {
        Self::new(vec![n])
    }

    /// `Z_p^r`.
    pub fn elementary(p: u32, r: usize) -> Result<Self, GroupError> {
        Self::new(vec![p; r])
    }

    /// Direct product with the factors of `self` first, then `other`.
    pub fn product(&self, other: &AbelianGroup) -> Result<Self, GroupError> {
        let mut f = self.factors.clone();
        f.extend_from_slice(&other.factors);
        Self::new(f)
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.factors.len()])
    }

    /// Builds an element from arbitrary integers, reducing each one.
    pub fn element_reduced(&self, values: &[i64]) -> Result<GroupElement, GroupError> {
        self.check_arity(values.len())?;
        Ok(GroupElement(
            values
                .iter()
                .zip(&self.factors)
                .map(|(&v, &n)| v.rem_euclid(n as i64) as u32)
                .collect(),
        ))
    }

    pub fn element(&self, residues: &[u32]) -> Result<GroupElement, GroupError> {
        let g = GroupElement(residues.to_vec());
        self.check(&g)?;
        Ok(g)
    }

    fn check_arity(&self, found: usize) -> Result<(), GroupError> {
        if found != self.factors.len() {
            return Err(GroupError::ArityMismatch { expected: self.factors.len(), found });
        }
        Ok(())
    }

    /// Membership check: arity and reduced residues.
    pub fn check(&self, g: &GroupElement) -> Result<(), GroupError> {
        self.check_arity(g.0.len())?;
        for (position, (&r, &n)) in g.0.iter().zip(&self.factors).enumerate() {
            if r >= n {
                return Err(GroupError::ResidueOutOfRange { position, value: r as u64, modulus: n });
            }
        }
        Ok(())
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.check(g).is_ok()
    }

    pub fn add(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(g)?;
        self.check(h)?;
        Ok(GroupElement(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.factors)
                .map(|((&a, &b), &n)| ((a as u64 + b as u64) % n as u64) as u32)
                .collect(),
        ))
    }

    pub fn neg(&self, g: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(g)?;
        Ok(GroupElement(
            g.0.iter().zip(&self.factors).map(|(&a, &n)| (n - a) % n).collect(),
        ))
    }

    pub fn sub(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement, GroupError> {
        let nh = self.neg(h)?;
        self.add(g, &nh)
    }

    /// `m * g`.
    pub fn scale(&self, m: u64, g: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(g)?;
        Ok(GroupElement(
            g.0.iter()
                .zip(&self.factors)
                .map(|(&a, &n)| ((a as u64 % n as u64) * (m % n as u64) % n as u64) as u32)
                .collect(),
        ))
    }

    /// Least `m >= 1` with `m * g = 0`: the lcm of `n_i / gcd(n_i, r_i)`.
    pub fn element_order(&self, g: &GroupElement) -> Result<u64, GroupError> {
        self.check(g)?;
        Ok(g.0
            .iter()
            .zip(&self.factors)
            .map(|(&r, &n)| n as u64 / arith::gcd(n as u64, r as u64))
            .fold(1, arith::lcm))
    }

    /// Mixed-radix index of `g`.
    pub fn index_of(&self, g: &GroupElement) -> Result<usize, GroupError> {
        self.check(g)?;
        Ok(self.index_unchecked(&g.0))
    }

    pub(crate) fn index_unchecked(&self, residues: &[u32]) -> usize {
        residues.iter().zip(&self.strides).map(|(&r, &s)| r as usize * s).sum()
    }

    pub fn element_at(&self, index: usize) -> Result<GroupElement, GroupError> {
        if index >= self.order {
            return Err(GroupError::IndexOutOfRange { index, order: self.order });
        }
        Ok(GroupElement(self.residues_at(index)))
    }

    pub(crate) fn residues_at(&self, index: usize) -> Vec<u32> {
        self.strides
            .iter()
            .zip(&self.factors)
            .map(|(&s, &n)| ((index / s) % n as usize) as u32)
            .collect()
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| GroupElement(self.residues_at(i)))
    }

    /// Index of `g_i + g_j`, computed digit by digit.
    pub fn add_indices(&self, i: usize, j: usize) -> usize {
        let mut out = 0;
        for (&s, &n) in self.strides.iter().zip(&self.factors) {
            let n = n as usize;
            let a = (i / s) % n;
            let b = (j / s) % n;
            let d = if a + b >= n { a + b - n } else { a + b };
            out += d * s;
        }
        out
    }

    /// Index of `g_i - g_j`.
    pub fn sub_indices(&self, i: usize, j: usize) -> usize {
        self.add_indices(i, self.neg_index(j))
    }

    pub fn neg_index(&self, i: usize) -> usize {
        let mut out = 0;
        for (&s, &n) in self.strides.iter().zip(&self.factors) {
            let n = n as usize;
            let a = (i / s) % n;
            out += ((n - a) % n) * s;
        }
        out
    }

    /// `{0, g, 2g, ..., (ord(g)-1) g}` in generation order.
    pub fn cyclic_subgroup(&self, g: &GroupElement) -> Result<Vec<GroupElement>, GroupError> {
        let ord = self.element_order(g)?;
        let mut out = Vec::with_capacity(ord as usize);
        let mut x = self.identity();
        for _ in 0..ord {
            let next = self.add(&x, g)?;
            out.push(x);
            x = next;
        }
        Ok(out)
    }

    /// Elements whose order divides `m`, in index order.
    fn elements_with_order_dividing(&self, m: u64) -> Vec<GroupElement> {
        self.elements()
            .filter(|g| m.is_multiple_of(self.element_order(g).unwrap_or(0)))
            .collect()
    }

    pub fn identity_automorphism(&self) -> GroupAutomorphism {
        let images = (0..self.rank())
            .map(|i| {
                let mut r = vec![0; self.rank()];
                r[i] = 1;
                GroupElement(r)
            })
            .collect();
        GroupAutomorphism { group: self.clone(), images }
    }

    /// Every automorphism exactly once, ordered by the mixed-radix
    /// enumeration of candidate generator-image tuples (image of the first
    /// generator most significant, each image ranging over admissible
    /// elements in index order).
    pub fn automorphisms(&self, budget: EnumerationBudget) -> Result<Automorphisms, GroupError> {
        if self.order > budget.max_order {
            return Err(GroupError::EnumerationInfeasible { order: self.order, candidates: 0 });
        }
        let candidates: Vec<Vec<GroupElement>> = self
            .factors
            .iter()
            .map(|&n| self.elements_with_order_dividing(n as u64))
            .collect();
        let count: u128 = candidates.iter().map(|c| c.len() as u128).product();
        if count > budget.max_candidates as u128 {
            return Err(GroupError::EnumerationInfeasible { order: self.order, candidates: count });
        }
        // A homomorphism of finite abelian groups is injective iff no element
        // of prime order lies in its kernel, so only those need checking.
        let prime_order: Vec<GroupElement> = self
            .elements()
            .filter(|g| {
                let o = self.element_order(g).unwrap_or(1);
                arith::is_prime(o)
            })
            .collect();
        Ok(Automorphisms {
            group: self.clone(),
            counters: vec![0; self.rank()],
            candidates,
            prime_order,
            done: count == 0,
        })
    }

    /// Number of automorphisms, by exhausting [`AbelianGroup::automorphisms`].
    pub fn automorphism_count(&self, budget: EnumerationBudget) -> Result<u64, GroupError> {
        Ok(self.automorphisms(budget)?.count() as u64)
    }
}

/// `Z9xZ9`, `Z5`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{n}")?;
        }
        Ok(())
    }
}

/// Parses `Z9xZ9`, `z5`, `Z3xZ3xZ3` (case-insensitive, `x` separated).
impl FromStr for AbelianGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(GroupError::Parse(String::from("empty group description")));
        }
        let mut factors = Vec::new();
        for part in s.split(['x', 'X']) {
            let part = part.trim();
            let digits = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(|| GroupError::Parse(alloc::format!("factor `{part}` must look like Z<n>")))?;
            let n: u32 = digits
                .parse()
                .map_err(|_| GroupError::Parse(alloc::format!("bad modulus in `{part}`")))?;
            factors.push(n);
        }
        AbelianGroup::new(factors)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_order: usize,
    pub max_candidates: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_order: 1 << 16, max_candidates: 100_000_000 }
    }
}

/// An automorphism given by the images of the canonical generators
/// `e_i = (0,..,1,..,0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAutomorphism {
    group: AbelianGroup,
    images: Vec<GroupElement>,
}

impl GroupAutomorphism {
    /// Validates that the images define a bijective homomorphism.
    pub fn new(group: &AbelianGroup, images: Vec<GroupElement>) -> Result<Self, GroupError> {
        if images.len() != group.rank() {
            return Err(GroupError::ArityMismatch { expected: group.rank(), found: images.len() });
        }
        for (i, img) in images.iter().enumerate() {
            let o = group.element_order(img)?;
            if !(group.factors[i] as u64).is_multiple_of(o) {
                return Err(GroupError::NotAnAutomorphism(alloc::format!(
                    "image {img} of generator {i} has order {o}, which does not divide {}",
                    group.factors[i]
                )));
            }
        }
        let sigma = GroupAutomorphism { group: group.clone(), images };
        let mut seen = vec![false; group.order()];
        for i in 0..group.order() {
            let j = sigma.apply_index(i);
            if seen[j] {
                return Err(GroupError::NotAnAutomorphism(String::from("map is not injective")));
            }
            seen[j] = true;
        }
        Ok(sigma)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    fn apply_residues(&self, residues: &[u32]) -> Vec<u32> {
        let mut out = vec![0u64; self.group.rank()];
        for (&r, img) in residues.iter().zip(&self.images) {
            for ((o, &c), &n) in out.iter_mut().zip(&img.0).zip(&self.group.factors) {
                *o = (*o + r as u64 * c as u64) % n as u64;
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// `sigma(g) = sum r_i * images[i]`.
    pub fn apply(&self, g: &GroupElement) -> Result<GroupElement, GroupError> {
        self.group.check(g)?;
        Ok(GroupElement(self.apply_residues(&g.0)))
    }

    pub fn apply_index(&self, index: usize) -> usize {
        let r = self.group.residues_at(index);
        self.group.index_unchecked(&self.apply_residues(&r))
    }

    pub fn apply_set(&self, set: &[GroupElement]) -> Result<Vec<GroupElement>, GroupError> {
        set.iter().map(|g| self.apply(g)).collect()
    }

    /// The vertex permutation `i -> index(sigma(g_i))`.
    pub fn to_permutation(&self) -> Vec<usize> {
        (0..self.group.order()).map(|i| self.apply_index(i)).collect()
    }
}

/// Iterator returned by [`AbelianGroup::automorphisms`].
pub struct Automorphisms {
    group: AbelianGroup,
    candidates: Vec<Vec<GroupElement>>,
    counters: Vec<usize>,
    prime_order: Vec<GroupElement>,
    done: bool,
}

impl Automorphisms {
    fn advance(&mut self) {
        for i in (0..self.counters.len()).rev() {
            self.counters[i] += 1;
            if self.counters[i] < self.candidates[i].len() {
                return;
            }
            self.counters[i] = 0;
        }
        self.done = true;
    }

    fn current_is_injective(&self) -> bool {
        let zero = |v: &[u64]| v.iter().all(|&x| x == 0);
        let mut acc = vec![0u64; self.group.rank()];
        self.prime_order.iter().all(|g| {
            acc.iter_mut().for_each(|a| *a = 0);
            for (k, &r) in g.0.iter().enumerate() {
                if r == 0 {
                    continue;
                }
                let img = &self.candidates[k][self.counters[k]];
                for ((a, &c), &n) in acc.iter_mut().zip(&img.0).zip(&self.group.factors) {
                    *a = (*a + r as u64 * c as u64) % n as u64;
                }
            }
            !zero(&acc)
        })
    }
}

impl Iterator for Automorphisms {
    type Item = GroupAutomorphism;

    fn next(&mut self) -> Option<GroupAutomorphism> {
        while !self.done {
            let hit = self.current_is_injective();
            let images = if hit {
                Some(
                    self.counters
                        .iter()
                        .enumerate()
                        .map(|(k, &c)| self.candidates[k][c].clone())
                        .collect(),
                )
            } else {
                None
            };
            self.advance();
            if let Some(images) = images {
                return Some(GroupAutomorphism { group: self.group.clone(), images });
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn g(v: &[u32]) -> GroupElement {
        GroupElement(v.to_vec())
    }

    #[test]
    fn addition_examples() {
        let z99: AbelianGroup = "Z9xZ9".parse().unwrap();
        assert_eq!(z99.add(&g(&[2, 7]), &g(&[8, 5])).unwrap(), g(&[1, 3]));
        let z5 = AbelianGroup::cyclic(5).unwrap();
        assert_eq!(z5.add(&g(&[3]), &g(&[2])).unwrap(), g(&[0]));
        let x = g(&[4, 4]);
        assert_eq!(z99.add(&x, &z99.identity()).unwrap(), x);
        assert_eq!(
            z99.add(&g(&[1]), &g(&[1, 1])),
            Err(GroupError::ArityMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn orders() {
        let z99: AbelianGroup = "Z9xZ9".parse().unwrap();
        assert_eq!(z99.element_order(&g(&[3, 0])).unwrap(), 3);
        assert_eq!(z99.element_order(&g(&[1, 4])).unwrap(), 9);
        assert_eq!(z99.element_order(&z99.identity()).unwrap(), 1);
    }

    #[test]
    fn enumeration_examples() {
        let z99: AbelianGroup = "z9XZ9".parse().unwrap();
        assert_eq!(z99.element_at(0).unwrap(), g(&[0, 0]));
        assert_eq!(z99.element_at(13).unwrap(), g(&[1, 4]));
        assert_eq!(z99.index_of(&g(&[1, 4])).unwrap(), 13);
        let z5 = AbelianGroup::cyclic(5).unwrap();
        assert_eq!(z5.element_at(4).unwrap(), g(&[4]));
        assert!(z5.element_at(5).is_err());
    }

    #[test]
    fn cyclic_subgroups() {
        let z99: AbelianGroup = "Z9xZ9".parse().unwrap();
        let sub = z99.cyclic_subgroup(&g(&[1, 1])).unwrap();
        assert_eq!(sub, (0..9).map(|m| g(&[m, m])).collect::<Vec<_>>());
        let sub = z99.cyclic_subgroup(&g(&[3, 0])).unwrap();
        assert_eq!(sub, alloc::vec![g(&[0, 0]), g(&[3, 0]), g(&[6, 0])]);
        assert_eq!(z99.cyclic_subgroup(&z99.identity()).unwrap(), alloc::vec![z99.identity()]);
    }

    #[test]
    fn parse_and_display() {
        let grp: AbelianGroup = "Z3xZ3xZ3".parse().unwrap();
        assert_eq!(grp.factors(), &[3, 3, 3]);
        assert_eq!(alloc::format!("{grp}"), "Z3xZ3xZ3");
        assert!("Z1".parse::<AbelianGroup>().is_err());
        assert!("Q5".parse::<AbelianGroup>().is_err());
        assert!("".parse::<AbelianGroup>().is_err());
    }

    /// Independent count: all image tuples, kept when the induced map on
    /// every element is a well-defined bijection.
    fn brute_force_aut_count(grp: &AbelianGroup) -> usize {
        let elems: Vec<GroupElement> = grp.elements().collect();
        let k = grp.rank();
        let mut count = 0;
        let mut idx = vec![0usize; k];
        loop {
            let images: Vec<&GroupElement> = idx.iter().map(|&i| &elems[i]).collect();
            let hom = images
                .iter()
                .zip(grp.factors())
                .all(|(img, &n)| grp.scale(n as u64, img).unwrap() == grp.identity());
            if hom {
                let mut seen = BTreeSet::new();
                for x in &elems {
                    let mut acc = grp.identity();
                    for (r, img) in x.residues().iter().zip(&images) {
                        acc = grp.add(&acc, &grp.scale(*r as u64, img).unwrap()).unwrap();
                    }
                    seen.insert(acc);
                }
                if seen.len() == elems.len() {
                    count += 1;
                }
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    return count;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < elems.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        let b = EnumerationBudget::default();
        let z33: AbelianGroup = "Z3xZ3".parse().unwrap();
        assert_eq!(brute_force_aut_count(&z33), 48);
        assert_eq!(z33.automorphism_count(b).unwrap(), 48);
        assert_eq!(AbelianGroup::cyclic(5).unwrap().automorphism_count(b).unwrap(), 4);
        let z99: AbelianGroup = "Z9xZ9".parse().unwrap();
        assert_eq!(brute_force_aut_count(&z99), 3888);
        assert_eq!(z99.automorphism_count(b).unwrap(), 3888);
        assert_eq!(3888, 81 * 48);
        for p in [2u32, 3, 5] {
            let grp = AbelianGroup::elementary(p, 2).unwrap();
            let p = p as u64;
            assert_eq!(grp.automorphism_count(b).unwrap(), (p * p - 1) * (p * p - p));
        }
        // Mixed factors where a generator image must have restricted order.
        let z24: AbelianGroup = "Z2xZ4".parse().unwrap();
        assert_eq!(z24.automorphism_count(b).unwrap() as usize, brute_force_aut_count(&z24));
    }

    #[test]
    fn automorphism_budget() {
        let z99: AbelianGroup = "Z9xZ9".parse().unwrap();
        let tight = EnumerationBudget { max_order: 1 << 16, max_candidates: 1000 };
        assert!(matches!(
            z99.automorphisms(tight),
            Err(GroupError::EnumerationInfeasible { candidates: 6561, .. })
        ));
        let small = EnumerationBudget { max_order: 50, max_candidates: 1 << 40 };
        assert!(z99.automorphisms(small).is_err());
    }

    #[test]
    fn automorphism_order_and_application() {
        let z33: AbelianGroup = "Z3xZ3".parse().unwrap();
        let all: Vec<_> = z33.automorphisms(EnumerationBudget::default()).unwrap().collect();
        // First candidate tuple in mixed-radix order with a bijective map.
        assert_eq!(all[0].images(), &[g(&[0, 1]), g(&[1, 0])]);
        let distinct: BTreeSet<Vec<GroupElement>> = all.iter().map(|a| a.images().to_vec()).collect();
        assert_eq!(distinct.len(), 48);

        let z13 = AbelianGroup::cyclic(13).unwrap();
        let id = z13.identity_automorphism();
        assert_eq!(id.apply(&g(&[7])).unwrap(), g(&[7]));
        let dbl = GroupAutomorphism::new(&z13, alloc::vec![g(&[2])]).unwrap();
        assert_eq!(dbl.apply(&g(&[3])).unwrap(), g(&[6]));
        let s: Vec<_> = [1, 3, 4, 9, 10, 12].iter().map(|&x| g(&[x])).collect();
        let img: BTreeSet<_> = dbl.apply_set(&s).unwrap().into_iter().collect();
        let expected: BTreeSet<_> = [2, 6, 8, 5, 7, 11].iter().map(|&x| g(&[x])).collect();
        assert_eq!(img, expected);
        assert!(GroupAutomorphism::new(&z13, alloc::vec![g(&[0])]).is_err());
    }

    #[test]
    fn group_laws_small_orders() {
        for n in 2..=100u32 {
            let mut groups = alloc::vec![AbelianGroup::cyclic(n).unwrap()];
            for a in 2..n {
                if n % a == 0 && a * a <= n {
                    groups.push(AbelianGroup::new(alloc::vec![a, n / a]).unwrap());
                }
            }
            for grp in groups {
                for (i, x) in grp.elements().enumerate() {
                    assert_eq!(grp.index_of(&x).unwrap(), i);
                    assert_eq!(grp.order() as u64 % grp.element_order(&x).unwrap(), 0);
                    let nx = grp.neg(&x).unwrap();
                    assert_eq!(grp.neg(&nx).unwrap(), x);
                    assert_eq!(grp.add(&x, &nx).unwrap(), grp.identity());
                    assert_eq!(grp.neg_index(i), grp.index_of(&nx).unwrap());
                }
            }
        }
    }

    #[test]
    fn automorphisms_are_additive() {
        for desc in ["Z3xZ3", "Z9", "Z2xZ4", "Z3xZ9", "Z5xZ5"] {
            let grp: AbelianGroup = desc.parse().unwrap();
            let elems: Vec<_> = grp.elements().collect();
            for sigma in grp.automorphisms(EnumerationBudget::default()).unwrap().step_by(7) {
                let perm = sigma.to_permutation();
                let mut seen = vec![false; grp.order()];
                for &j in &perm {
                    assert!(!seen[j]);
                    seen[j] = true;
                }
                for (i, a) in elems.iter().enumerate().step_by(3) {
                    for (j, b) in elems.iter().enumerate() {
                        let sum = grp.add(a, b).unwrap();
                        let lhs = sigma.apply(&sum).unwrap();
                        let rhs = grp.add(&sigma.apply(a).unwrap(), &sigma.apply(b).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                        assert_eq!(perm[grp.add_indices(i, j)], grp.add_indices(perm[i], perm[j]));
                    }
                }
            }
        }
    }
}
