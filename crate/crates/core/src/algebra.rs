//! The integral group algebra `ZG` of a finite abelian group, and exact
//! checks of the partial-difference-set and Schur-ring identities satisfied
//! by connection sets of strongly regular Cayley graphs.
//!
//! Elements are coefficient vectors indexed by the group's mixed-radix
//! numbering. Multiplication is convolution over support pairs with checked
//! 64-bit arithmetic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cayley::ConnectionSet;
use crate::graph::SrgParams;
use crate::group::{AbelianGroup, GroupElement, GroupError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    GroupMismatch,
    Overflow,
    Group(GroupError),
}

impl From<GroupError> for AlgebraError {
    fn from(e: GroupError) -> Self {
        AlgebraError::Group(e)
    }
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::GroupMismatch => f.write_str("group algebra elements over different groups"),
            AlgebraError::Overflow => f.write_str("coefficient overflow"),
            AlgebraError::Group(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for AlgebraError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    group: AbelianGroup,
    coeffs: Vec<i64>,
}

impl GroupAlgebraElement {
    pub fn zero(group: &AbelianGroup) -> Self {
        GroupAlgebraElement { group: group.clone(), coeffs: vec![0; group.order()] }
    }

    /// `e`, the identity of the algebra.
    pub fn one(group: &AbelianGroup) -> Self {
        Self::from_indices(group, [0])
    }

    /// The indicator `T̄ = Σ_{t ∈ T} t` (repeated elements are counted once).
    pub fn from_set<'a>(
        group: &AbelianGroup,
        set: impl IntoIterator<Item = &'a GroupElement>,
    ) -> Result<Self, AlgebraError> {
        let mut x = Self::zero(group);
        for g in set {
            x.coeffs[group.index_of(g)?] = 1;
        }
        Ok(x)
    }

    pub fn from_indices(group: &AbelianGroup, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut x = Self::zero(group);
        for i in indices {
            x.coeffs[i] = 1;
        }
        x
    }

    pub fn from_connection_set(s: &ConnectionSet) -> Self {
        Self::from_indices(s.group(), s.indices().iter().copied())
    }

    /// `Ḡ`.
    pub fn whole_group(group: &AbelianGroup) -> Self {
        GroupAlgebraElement { group: group.clone(), coeffs: vec![1; group.order()] }
    }

    pub fn from_coeffs(group: &AbelianGroup, coeffs: Vec<i64>) -> Result<Self, AlgebraError> {
        if coeffs.len() != group.order() {
            return Err(AlgebraError::GroupMismatch);
        }
        Ok(GroupAlgebraElement { group: group.clone(), coeffs })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> i64 {
        self.coeffs[index]
    }

    fn same_group(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.group != other.group {
            return Err(AlgebraError::GroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_group(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(AlgebraError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(GroupAlgebraElement { group: self.group.clone(), coeffs })
    }

    pub fn scale(&self, c: i64) -> Result<Self, AlgebraError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(c).ok_or(AlgebraError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(GroupAlgebraElement { group: self.group.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.scale(-1)?)
    }

    /// `x⁽⁻¹⁾ = Σ a_g (−g)`.
    pub fn inverse_image(&self) -> Self {
        let mut coeffs = vec![0; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            coeffs[self.group.neg_index(i)] = a;
        }
        GroupAlgebraElement { group: self.group.clone(), coeffs }
    }

    /// Convolution: the coefficient of `w` is `Σ_{g+h=w} a_g b_h`.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_group(other)?;
        let support_b: Vec<(usize, i64)> =
            other.coeffs.iter().copied().enumerate().filter(|&(_, b)| b != 0).collect();
        let mut out = vec![0i64; self.coeffs.len()];
        for (g, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for &(h, b) in &support_b {
                let w = self.group.add_indices(g, h);
                let term = a.checked_mul(b).ok_or(AlgebraError::Overflow)?;
                out[w] = out[w].checked_add(term).ok_or(AlgebraError::Overflow)?;
            }
        }
        Ok(GroupAlgebraElement { group: self.group.clone(), coeffs: out })
    }
}

/// A coefficient that disagrees with the identity being checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientWitness {
    pub index: usize,
    pub element: GroupElement,
    pub found: i64,
    pub expected: i64,
}

/// Outcome of an exact identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub holds: bool,
    /// First disagreeing coefficient, in index order.
    pub witness: Option<CoefficientWitness>,
    /// Set when a precondition fails and no product was computed.
    pub precondition: Option<&'static str>,
}

impl IdentityCheck {
    fn precondition_failed(identity: &'static str, why: &'static str) -> Self {
        IdentityCheck { identity, holds: false, witness: None, precondition: Some(why) }
    }

    fn compare(identity: &'static str, found: &GroupAlgebraElement, expected: &GroupAlgebraElement) -> Self {
        let witness = found.coeffs.iter().zip(&expected.coeffs).enumerate().find(|(_, (a, b))| a != b).map(
            |(index, (&found_c, &expected_c))| CoefficientWitness {
                index,
                element: GroupElement::new(found.group.residues_at(index)),
                found: found_c,
                expected: expected_c,
            },
        );
        IdentityCheck { identity, holds: witness.is_none(), witness, precondition: None }
    }
}

pub const PDS: &str = "partial difference set";
pub const SRG_EQUATION: &str = "S^2 = mu G + (lambda - mu) S + (k - mu) e";
pub const MIXED_PRODUCT: &str = "S N = t (G - e)";
pub const SCHUR_PARTITION: &str = "{e, S, N} spans a Schur ring";

fn indicator_of(group: &AbelianGroup, set: &[usize]) -> Result<GroupAlgebraElement, AlgebraError> {
    if let Some(&i) = set.iter().find(|&&i| i >= group.order()) {
        return Err(GroupError::IndexOutOfRange { index: i, order: group.order() }.into());
    }
    Ok(GroupAlgebraElement::from_indices(group, set.iter().copied()))
}

/// `D` is a `(|G|, |D|, λ, μ)` partial difference set: in `D̄ D̄⁽⁻¹⁾` the
/// identity has coefficient `|D|` and every other `g` has `λ` or `μ`
/// according to `g ∈ D`.
pub fn verify_pds(group: &AbelianGroup, set: &[usize], lambda: i64, mu: i64) -> Result<IdentityCheck, AlgebraError> {
    let d = indicator_of(group, set)?;
    let prod = d.mul(&d.inverse_image())?;
    let size = d.coeffs.iter().sum::<i64>();
    let expected: Vec<i64> = (0..group.order())
        .map(|i| if i == 0 { size } else if d.coeffs[i] != 0 { lambda } else { mu })
        .collect();
    Ok(IdentityCheck::compare(PDS, &prod, &GroupAlgebraElement::from_coeffs(group, expected)?))
}

/// `S̄² = μḠ + (λ−μ)S̄ + (k−μ)e`, checked as an identity in `ZG`.
pub fn verify_srg_equation(s: &ConnectionSet, params: &SrgParams) -> Result<IdentityCheck, AlgebraError> {
    let group = s.group();
    if params.n != group.order() || params.k != s.len() {
        return Ok(IdentityCheck::precondition_failed(SRG_EQUATION, "n must equal |G| and k must equal |S|"));
    }
    let sb = GroupAlgebraElement::from_connection_set(s);
    let lhs = sb.mul(&sb)?;
    let (k, lambda, mu) = (params.k as i64, params.lambda as i64, params.mu as i64);
    let rhs = GroupAlgebraElement::whole_group(group)
        .scale(mu)?
        .add(&sb.scale(lambda - mu)?)?
        .add(&GroupAlgebraElement::one(group).scale(k - mu)?)?;
    Ok(IdentityCheck::compare(SRG_EQUATION, &lhs, &rhs))
}

/// `S̄ · N̄ = t (Ḡ − e)` with `N = G \ (S ∪ {e})`, for `|G| = 4t+1`, `|S| = 2t`.
pub fn verify_mixed_product(s: &ConnectionSet, t: usize) -> Result<IdentityCheck, AlgebraError> {
    let group = s.group();
    if group.order() != 4 * t + 1 || s.len() != 2 * t {
        return Ok(IdentityCheck::precondition_failed(MIXED_PRODUCT, "need |G| = 4t + 1 and |S| = 2t"));
    }
    let sb = GroupAlgebraElement::from_connection_set(s);
    let nb = GroupAlgebraElement::from_connection_set(&s.complement());
    let lhs = sb.mul(&nb)?;
    let rhs = GroupAlgebraElement::whole_group(group)
        .sub(&GroupAlgebraElement::one(group))?
        .scale(t as i64)?;
    Ok(IdentityCheck::compare(MIXED_PRODUCT, &lhs, &rhs))
}

/// Structure constants of a three-class Schur ring with basis
/// `(e, S̄, N̄)`: `constants[i][j][l]` is the coefficient of basis `l` in the
/// product of bases `i` and `j`.
pub type StructureConstants = [[[i64; 3]; 3]; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurCheck {
    pub check: IdentityCheck,
    pub constants: Option<StructureConstants>,
    /// Which product left the span, as basis positions.
    pub failing_product: Option<(usize, usize)>,
}

/// Closure of the span of `{e, S̄, N̄}` under multiplication: each of the
/// nine products must be constant on each of the three cells.
pub fn verify_schur_partition(s: &ConnectionSet) -> Result<SchurCheck, AlgebraError> {
    let group = s.group();
    let n = s.complement();
    let basis = [
        GroupAlgebraElement::one(group),
        GroupAlgebraElement::from_connection_set(s),
        GroupAlgebraElement::from_connection_set(&n),
    ];
    let cells: [Vec<usize>; 3] = [vec![0], s.indices().to_vec(), n.indices().to_vec()];
    let mut constants = [[[0i64; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let prod = basis[i].mul(&basis[j])?;
            for (l, cell) in cells.iter().enumerate() {
                let Some(&first) = cell.first() else {
                    continue;
                };
                let c = prod.coeffs[first];
                constants[i][j][l] = c;
                if let Some(&bad) = cell.iter().find(|&&x| prod.coeffs[x] != c) {
                    let witness = CoefficientWitness {
                        index: bad,
                        element: GroupElement::new(group.residues_at(bad)),
                        found: prod.coeffs[bad],
                        expected: c,
                    };
                    return Ok(SchurCheck {
                        check: IdentityCheck {
                            identity: SCHUR_PARTITION,
                            holds: false,
                            witness: Some(witness),
                            precondition: None,
                        },
                        constants: None,
                        failing_product: Some((i, j)),
                    });
                }
            }
        }
    }
    Ok(SchurCheck {
        check: IdentityCheck { identity: SCHUR_PARTITION, holds: true, witness: None, precondition: None },
        constants: Some(constants),
        failing_product: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> AbelianGroup {
        AbelianGroup::cyclic(n).unwrap()
    }

    fn cs(n: u32, xs: &[usize]) -> ConnectionSet {
        ConnectionSet::from_indices(&z(n), xs.iter().copied()).unwrap()
    }

    #[test]
    fn indicators_and_linear_ops() {
        let z5 = z(5);
        let elems: Vec<GroupElement> = [1u32, 4].iter().map(|&x| GroupElement::new(vec![x])).collect();
        let s = GroupAlgebraElement::from_set(&z5, &elems).unwrap();
        assert_eq!(s.coeffs(), &[0, 1, 0, 0, 1]);
        let t = GroupAlgebraElement::from_indices(&z5, [2]);
        assert_eq!(s.add(&t).unwrap(), GroupAlgebraElement::from_indices(&z5, [1, 2, 4]));
        assert_eq!(GroupAlgebraElement::from_set(&z5, &[]).unwrap(), GroupAlgebraElement::zero(&z5));
        assert_eq!(s.scale(3).unwrap().coeffs(), &[0, 3, 0, 0, 3]);
        assert!(s.add(&GroupAlgebraElement::zero(&z(7))).is_err());
    }

    #[test]
    fn products() {
        let z5 = z(5);
        let s = GroupAlgebraElement::from_indices(&z5, [1, 4]);
        assert_eq!(s.mul(&s).unwrap().coeffs(), &[2, 0, 1, 1, 0]);
        let g = GroupAlgebraElement::from_indices(&z5, [3]);
        assert_eq!(g.mul(&GroupAlgebraElement::one(&z5)).unwrap(), g);
        let whole = GroupAlgebraElement::whole_group(&z5);
        assert_eq!(whole.mul(&whole).unwrap(), whole.scale(5).unwrap());
        let big = GroupAlgebraElement::from_coeffs(&z5, vec![i64::MAX, 0, 0, 0, 0]).unwrap();
        assert_eq!(big.mul(&big), Err(AlgebraError::Overflow));
    }

    /// Ordered pairs (d1, d2) with d1 - d2 = g, counted directly.
    fn difference_counts(n: usize, d: &[usize]) -> Vec<i64> {
        let mut c = vec![0; n];
        for &a in d {
            for &b in d {
                c[(a + n - b) % n] += 1;
            }
        }
        c
    }

    #[test]
    fn pds_examples() {
        let sq = [1, 3, 4, 9, 10, 12];
        let counts = difference_counts(13, &sq);
        assert!((1..13).all(|g| counts[g] == if sq.contains(&g) { 2 } else { 3 }));
        assert!(verify_pds(&z(13), &sq, 2, 3).unwrap().holds);
        let bad = verify_pds(&z(5), &[1, 2], 0, 1).unwrap();
        assert!(!bad.holds);
        let w = bad.witness.unwrap();
        assert_eq!(w.index, 1);
        assert_eq!((w.found, w.expected), (1, 0));
        assert!(verify_pds(&z(5), &[7], 0, 1).is_err());
    }

    #[test]
    fn srg_equation_examples() {
        let c5 = cs(5, &[1, 4]);
        assert!(verify_srg_equation(&c5, &SrgParams::new(5, 2, 0, 1)).unwrap().holds);
        let p13 = cs(13, &[1, 3, 4, 9, 10, 12]);
        assert!(verify_srg_equation(&p13, &SrgParams::new(13, 6, 2, 3)).unwrap().holds);
        let swapped = verify_srg_equation(&p13, &SrgParams::new(13, 6, 3, 2)).unwrap();
        assert!(!swapped.holds && swapped.witness.is_some());
        let wrong_n = verify_srg_equation(&p13, &SrgParams::new(14, 6, 2, 3)).unwrap();
        assert!(!wrong_n.holds && wrong_n.precondition.is_some());
    }

    #[test]
    fn mixed_product_examples() {
        assert!(verify_mixed_product(&cs(5, &[1, 4]), 1).unwrap().holds);
        assert!(verify_mixed_product(&cs(13, &[1, 3, 4, 9, 10, 12]), 3).unwrap().holds);
        assert!(!verify_mixed_product(&cs(13, &[1, 12, 2, 11, 6, 7]), 3).unwrap().holds);
        assert!(verify_mixed_product(&cs(13, &[1, 12]), 3).unwrap().precondition.is_some());
    }

    #[test]
    fn schur_examples() {
        let p13 = verify_schur_partition(&cs(13, &[1, 3, 4, 9, 10, 12])).unwrap();
        assert!(p13.check.holds);
        let c = p13.constants.unwrap();
        // S̄² = 6e + 2S̄ + 3N̄ and S̄N̄ = 3S̄ + 3N̄.
        assert_eq!(c[1][1], [6, 2, 3]);
        assert_eq!(c[1][2], [0, 3, 3]);
        assert_eq!(c[2][2], [6, 3, 2]);
        assert_eq!(c[0][1], [0, 1, 0]);
        let bad = verify_schur_partition(&cs(13, &[1, 12, 2, 11])).unwrap();
        assert!(!bad.check.holds);
        assert_eq!(bad.failing_product, Some((1, 1)));
    }

    #[test]
    fn punctured_group_square() {
        for n in [5u32, 9, 13, 17] {
            let g = z(n);
            let t = (n as i64 - 1) / 4;
            let punctured = GroupAlgebraElement::from_indices(&g, 1..n as usize);
            let lhs = punctured.mul(&punctured).unwrap();
            let rhs = GroupAlgebraElement::one(&g).scale(4 * t).unwrap().add(&punctured.scale(4 * t - 1).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
