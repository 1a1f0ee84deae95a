//! Connection sets and Cayley graphs over finite abelian groups.
//!
//! Vertex `i` of `Cay(G, S)` is the `i`-th element of `G` in mixed-radix
//! order, and `i ~ j` iff `g_i - g_j ∈ S`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::DenseGraph;
use crate::group::{AbelianGroup, GroupElement, GroupError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConnectionSetError {
    Group(GroupError),
    /// Every violation found: identity membership and elements whose
    /// negation is missing (`(s, -s)` pairs).
    Invalid { identity_present: bool, missing_inverses: Vec<(GroupElement, GroupElement)> },
}

impl From<GroupError> for ConnectionSetError {
    fn from(e: GroupError) -> Self {
        ConnectionSetError::Group(e)
    }
}

impl fmt::Display for ConnectionSetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectionSetError::Group(e) => e.fmt(f),
            ConnectionSetError::Invalid { identity_present, missing_inverses } => {
                let mut sep = "";
                if *identity_present {
                    f.write_str("identity element present")?;
                    sep = "; ";
                }
                for (s, ns) in missing_inverses {
                    write!(f, "{sep}({s}) present but its inverse ({ns}) absent")?;
                    sep = "; ";
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for ConnectionSetError {}

/// An identity-free, inverse-closed subset of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    group: AbelianGroup,
    /// Sorted element indices.
    indices: Vec<usize>,
}

impl ConnectionSet {
    /// Validates `elements` (duplicates are merged) and reports every
    /// violation at once.
    pub fn new(
        group: &AbelianGroup,
        elements: impl IntoIterator<Item = GroupElement>,
    ) -> Result<Self, ConnectionSetError> {
        let mut member = vec![false; group.order()];
        for g in elements {
            member[group.index_of(&g)?] = true;
        }
        Self::from_mask(group, member)
    }

    /// Same as [`ConnectionSet::new`] for element indices.
    pub fn from_indices(
        group: &AbelianGroup,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Self, ConnectionSetError> {
        let mut member = vec![false; group.order()];
        for i in indices {
            if i >= group.order() {
                return Err(GroupError::IndexOutOfRange { index: i, order: group.order() }.into());
            }
            member[i] = true;
        }
        Self::from_mask(group, member)
    }

    fn from_mask(group: &AbelianGroup, member: Vec<bool>) -> Result<Self, ConnectionSetError> {
        let identity_present = member[0];
        let mut missing_inverses = Vec::new();
        for (i, _) in member.iter().enumerate().filter(|(_, &m)| m) {
            let ni = group.neg_index(i);
            if !member[ni] {
                missing_inverses.push((
                    GroupElement::new(group.residues_at(i)),
                    GroupElement::new(group.residues_at(ni)),
                ));
            }
        }
        if identity_present || !missing_inverses.is_empty() {
            return Err(ConnectionSetError::Invalid { identity_present, missing_inverses });
        }
        let indices = member.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        Ok(ConnectionSet { group: group.clone(), indices })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.group.index_of(g).is_ok_and(|i| self.contains_index(i))
    }

    /// Elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.indices.iter().map(|&i| GroupElement::new(self.group.residues_at(i)))
    }

    /// Membership mask over all element indices.
    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.group.order()];
        for &i in &self.indices {
            m[i] = true;
        }
        m
    }

    /// `Cay(G, S)`; panics if `|G|` exceeds the dense graph budget.
    pub fn cayley_graph(&self) -> DenseGraph {
        let n = self.group.order();
        let mut g = DenseGraph::empty(n);
        for i in 0..n {
            for &s in &self.indices {
                let j = self.group.add_indices(i, s);
                if i < j {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// `G \ (S ∪ {e})`, the connection set of the complementary graph.
    pub fn complement(&self) -> ConnectionSet {
        let mask = self.mask();
        let indices = (1..self.group.order()).filter(|&i| !mask[i]).collect();
        ConnectionSet { group: self.group.clone(), indices }
    }

    /// The subgroup generated by `S`, as a membership mask, by closure from
    /// the identity.
    pub fn generated_subgroup(&self) -> Vec<bool> {
        let mut member = vec![false; self.group.order()];
        member[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &s in &self.indices {
                let y = self.group.add_indices(x, s);
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        member
    }

    /// `Cay(G, S)` is connected iff `⟨S⟩ = G`.
    pub fn is_connected(&self) -> bool {
        self.generated_subgroup().iter().all(|&m| m)
    }

    /// Connection set of the lexicographic product `Cay(G1,S1)[Cay(G2,S2)]`
    /// over `G1 x G2`: `{(a, g) : a ∈ S1, g ∈ G2} ∪ {(0, s) : s ∈ S2}`.
    pub fn lex_product(s1: &ConnectionSet, s2: &ConnectionSet) -> Result<ConnectionSet, GroupError> {
        let group = s1.group.product(&s2.group)?;
        let n2 = s2.group.order();
        let mut indices: Vec<usize> = s1
            .indices
            .iter()
            .flat_map(|&a| (0..n2).map(move |g| a * n2 + g))
            .chain(s2.indices.iter().copied())
            .collect();
        indices.sort_unstable();
        Ok(ConnectionSet { group, indices })
    }
}
