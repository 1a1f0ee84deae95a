//! Named connection-set families: Paley and Peisert sets over `GF(q)`, the
//! Davis set over `Z_{p²} x Z_{p²}`, and the order feasibility test for
//! Paley-type partial difference sets in abelian groups.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::cayley::{ConnectionSet, ConnectionSetError};
use crate::field::{FieldElement, FieldError, FiniteField};
use crate::group::{AbelianGroup, GroupElement, GroupError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    NotPrimePower(u64),
    NotOneModFour(u64),
    NotOddPrime(u64),
    TooLarge(u64),
    Field(FieldError),
    Group(GroupError),
    ConnectionSet(ConnectionSetError),
    /// An internal consistency assertion failed; the string is the witness.
    Inconsistent(String),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            ConstructionError::NotOneModFour(q) => {
                write!(f, "{q} is not 1 mod 4, so the set would not be inverse-closed")
            }
            ConstructionError::NotOddPrime(p) => write!(f, "{p} is not an odd prime"),
            ConstructionError::TooLarge(n) => write!(f, "group order {n} exceeds the dense graph budget"),
            ConstructionError::Field(e) => e.fmt(f),
            ConstructionError::Group(e) => e.fmt(f),
            ConstructionError::ConnectionSet(e) => e.fmt(f),
            ConstructionError::Inconsistent(s) => write!(f, "construction inconsistent: {s}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

impl From<FieldError> for ConstructionError {
    fn from(e: FieldError) -> Self {
        ConstructionError::Field(e)
    }
}

impl From<GroupError> for ConstructionError {
    fn from(e: GroupError) -> Self {
        ConstructionError::Group(e)
    }
}

impl From<ConnectionSetError> for ConstructionError {
    fn from(e: ConnectionSetError) -> Self {
        ConstructionError::ConnectionSet(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Paley,
    Peisert,
    Davis,
    LexProduct,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Paley => "paley",
            Family::Peisert => "peisert",
            Family::Davis => "davis",
            Family::LexProduct => "lexprod",
        }
    }
}

/// Field data recorded for the Paley and Peisert families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldInfo {
    pub p: u32,
    pub r: usize,
    pub modulus: Vec<u32>,
    /// Primitive element used (Peisert only).
    pub primitive: Option<FieldElement>,
}

/// How the Davis subgroup lists were read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DavisDetails {
    /// Generators of the cyclic subgroups contributing their elements of
    /// order `p²` to `C`.
    pub c_generators: Vec<GroupElement>,
    /// Generators of the cyclic subgroups contributing all non-identity
    /// elements to `D`.
    pub d_generators: Vec<GroupElement>,
    /// The trailing `D` range `[(p²−p)/2+1, (p²+1)/2−2]` as written.
    pub d_literal_range: (u64, u64),
    /// Number of trailing generators the cardinality identity requires,
    /// `(p+1)/2 − 2`.
    pub d_trailing_required: u64,
    pub c_size: usize,
    pub d_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub family: Family,
    /// Characteristic (or the Davis prime).
    pub p: u64,
    /// Extension degree; 2 for Davis (the group has rank 2).
    pub r: u32,
    /// Group order.
    pub q: u64,
    /// Conference parameter `t` with `|G| = 4t + 1`, when `|G| ≡ 1 mod 4`.
    pub t: Option<u64>,
    pub connection_set: ConnectionSet,
    pub field: Option<FieldInfo>,
    pub davis: Option<DavisDetails>,
}

impl ConstructionReport {
    pub fn group(&self) -> &AbelianGroup {
        self.connection_set.group()
    }

    fn new(family: Family, p: u64, r: u32, set: ConnectionSet) -> Result<Self, ConstructionError> {
        let q = set.group().order() as u64;
        if set.len() as u64 * 2 != q - 1 {
            return Err(ConstructionError::Inconsistent(alloc::format!(
                "|S| = {} but (|G|-1)/2 = {}",
                set.len(),
                (q - 1) / 2
            )));
        }
        Ok(ConstructionReport {
            family,
            p,
            r,
            q,
            t: (q % 4 == 1).then_some((q - 1) / 4),
            connection_set: set,
            field: None,
            davis: None,
        })
    }
}

fn field_for(q: u64) -> Result<FiniteField, ConstructionError> {
    let (p, r) = arith::prime_power(q).ok_or(ConstructionError::NotPrimePower(q))?;
    if q > crate::field::MAX_FIELD_ORDER {
        return Err(ConstructionError::TooLarge(q));
    }
    Ok(FiniteField::new(p, r)?)
}

fn field_set(f: &FiniteField, elems: &[FieldElement]) -> Result<ConnectionSet, ConstructionError> {
    let g = f.additive_group();
    Ok(ConnectionSet::new(&g, elems.iter().map(|e| f.coordinates(e)))?)
}

/// Paley connection set: the nonzero squares of `GF(q)`, `q ≡ 1 mod 4`.
pub fn paley(q: u64) -> Result<ConstructionReport, ConstructionError> {
    let f = field_for(q)?;
    if q % 4 != 1 {
        return Err(ConstructionError::NotOneModFour(q));
    }
    let set = field_set(&f, &f.squares())?;
    let mut report = ConstructionReport::new(Family::Paley, f.characteristic() as u64, f.degree() as u32, set)?;
    report.field = Some(FieldInfo { p: f.characteristic(), r: f.degree(), modulus: f.modulus().to_vec(), primitive: None });
    Ok(report)
}

/// Peisert connection set `{a^i : i ≡ 0, 1 mod 4}` with the deterministic
/// primitive element.
pub fn peisert(q: u64) -> Result<ConstructionReport, ConstructionError> {
    peisert_with(q, None)
}

/// Peisert connection set with an optional primitive element override
/// (coefficients constant term first).
pub fn peisert_with(q: u64, generator: Option<&[u32]>) -> Result<ConstructionReport, ConstructionError> {
    let f = field_for(q)?;
    let a = match generator {
        Some(c) => f.element(c)?,
        None => f.primitive_element(),
    };
    let set = field_set(&f, &f.peisert_set_with(&a)?)?;
    let mut report = ConstructionReport::new(Family::Peisert, f.characteristic() as u64, f.degree() as u32, set)?;
    report.field = Some(FieldInfo {
        p: f.characteristic(),
        r: f.degree(),
        modulus: f.modulus().to_vec(),
        primitive: Some(a),
    });
    Ok(report)
}

/// The Davis set `S = C ∪ D` over `Z_{p²} x Z_{p²}`.
///
/// `C` is the set of elements of order `p²` in `⟨(1,1)⟩, …, ⟨(1, p(p−1)/2)⟩`
/// and `⟨(p,1)⟩, ⟨(2p,1)⟩, …, ⟨((p−1)p/2, 1)⟩`. `D` is the set of non-identity
/// elements of `⟨(1,0)⟩, ⟨(0,1)⟩` and `⟨(1,j)⟩` for `j` in
/// `[(p²−p)/2+1, (p²+1)/2−2]`. The subgroup counts, disjointness and
/// `|S| = (p⁴−1)/2` are asserted.
pub fn davis(p: u64) -> Result<ConstructionReport, ConstructionError> {
    if p.is_multiple_of(2) || !arith::is_prime(p) {
        return Err(ConstructionError::NotOddPrime(p));
    }
    let m = p * p;
    let order = m * m;
    if order > crate::graph::MAX_VERTICES as u64 {
        return Err(ConstructionError::TooLarge(order));
    }
    let group = AbelianGroup::new(vec![m as u32, m as u32])?;
    let gen = |a: u64, b: u64| group.element_reduced(&[a as i64, b as i64]);

    let mut c_generators = Vec::new();
    for j in 1..=p * (p - 1) / 2 {
        c_generators.push(gen(1, j)?);
    }
    for i in 1..=(p - 1) / 2 {
        c_generators.push(gen(i * p, 1)?);
    }
    let lo = (m - p) / 2 + 1;
    let hi = m.div_ceil(2) - 2;
    let mut d_generators = vec![gen(1, 0)?, gen(0, 1)?];
    for j in lo..=hi {
        d_generators.push(gen(1, j)?);
    }
    let literal_trailing = if hi >= lo { hi - lo + 1 } else { 0 };
    let d_trailing_required = p.div_ceil(2) - 2;
    if literal_trailing != d_trailing_required {
        return Err(ConstructionError::Inconsistent(alloc::format!(
            "trailing D range [{lo}, {hi}] lists {literal_trailing} subgroups, cardinality identity needs {d_trailing_required}"
        )));
    }

    let all: Vec<&GroupElement> = c_generators.iter().chain(&d_generators).collect();
    let subgroups: Vec<Vec<GroupElement>> =
        all.iter().map(|g| group.cyclic_subgroup(g)).collect::<Result<_, _>>()?;
    for (i, a) in subgroups.iter().enumerate() {
        if a.len() as u64 != m {
            return Err(ConstructionError::Inconsistent(alloc::format!(
                "subgroup <{}> has order {}, expected {m}",
                all[i],
                a.len()
            )));
        }
        for (j, b) in subgroups.iter().enumerate().skip(i + 1) {
            let mut sa = a.clone();
            let mut sb = b.clone();
            sa.sort();
            sb.sort();
            if sa == sb {
                return Err(ConstructionError::Inconsistent(alloc::format!(
                    "<{}> and <{}> are the same subgroup",
                    all[i],
                    all[j]
                )));
            }
        }
    }

    let n = group.order();
    let mut in_c = vec![false; n];
    let mut in_d = vec![false; n];
    for sub in &subgroups[..c_generators.len()] {
        for x in sub {
            if group.element_order(x)? == m {
                in_c[group.index_of(x)?] = true;
            }
        }
    }
    for sub in &subgroups[c_generators.len()..] {
        for x in sub.iter().skip(1) {
            in_d[group.index_of(x)?] = true;
        }
    }
    let c_size = in_c.iter().filter(|&&b| b).count();
    let d_size = in_d.iter().filter(|&&b| b).count();
    if let Some(i) = (0..n).find(|&i| in_c[i] && in_d[i]) {
        return Err(ConstructionError::Inconsistent(alloc::format!(
            "C and D share ({})",
            GroupElement::new(group.residues_at(i))
        )));
    }
    let expected_c = ((m - 1) / 2 * (m - p)) as usize;
    let expected_d = (p.div_ceil(2) * (m - 1)) as usize;
    if c_size != expected_c || d_size != expected_d || (c_size + d_size) as u64 != (order - 1) / 2 {
        return Err(ConstructionError::Inconsistent(alloc::format!(
            "|C| = {c_size} (expected {expected_c}), |D| = {d_size} (expected {expected_d})"
        )));
    }

    let set = ConnectionSet::from_indices(&group, (0..n).filter(|&i| in_c[i] || in_d[i]))?;
    let mut report = ConstructionReport::new(Family::Davis, p, 2, set)?;
    report.davis = Some(DavisDetails {
        c_generators,
        d_generators,
        d_literal_range: (lo, hi),
        d_trailing_required,
        c_size,
        d_size,
    });
    Ok(report)
}

/// Lexicographic product of two constructed sets.
pub fn lex_product(a: &ConstructionReport, b: &ConstructionReport) -> Result<ConstructionReport, ConstructionError> {
    let order = a.q * b.q;
    if order > crate::graph::MAX_VERTICES as u64 {
        return Err(ConstructionError::TooLarge(order));
    }
    let set = ConnectionSet::lex_product(&a.connection_set, &b.connection_set)?;
    let q = set.group().order() as u64;
    Ok(ConstructionReport {
        family: Family::LexProduct,
        p: 0,
        r: set.group().rank() as u32,
        q,
        t: (q % 4 == 1).then_some((q - 1) / 4),
        connection_set: set,
        field: None,
        davis: None,
    })
}

/// Which clause made an order admissible for a Paley-type partial
/// difference set in an abelian group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Feasibility {
    /// `m = p^r ≡ 1 mod 4`.
    PrimePower { p: u64, r: u32 },
    /// `m = n⁴`, `n > 1` odd, not a prime power.
    FourthPower { n: u64 },
    /// `m = 9 n⁴`, `n > 1` odd, not a prime power.
    NineFourthPower { n: u64 },
    /// A prime power that is `3 mod 4`.
    PrimePowerWrongResidue { p: u64, r: u32 },
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(
            self,
            Feasibility::PrimePower { .. } | Feasibility::FourthPower { .. } | Feasibility::NineFourthPower { .. }
        )
    }
}

/// True iff `m` is a prime power `≡ 1 mod 4`, or `m = n⁴` or `m = 9n⁴` for
/// an odd `n > 1`.
pub fn paley_type_order_feasible(m: u64) -> Feasibility {
    if let Some((p, r)) = arith::prime_power(m) {
        return if m % 4 == 1 {
            Feasibility::PrimePower { p, r }
        } else {
            Feasibility::PrimePowerWrongResidue { p, r }
        };
    }
    let odd_root = |x: u64| arith::fourth_root(x).filter(|&n| n > 1 && n % 2 == 1);
    if let Some(n) = odd_root(m) {
        return Feasibility::FourthPower { n };
    }
    if m.is_multiple_of(9) {
        if let Some(n) = odd_root(m / 9) {
            return Feasibility::NineFourthPower { n };
        }
    }
    Feasibility::Infeasible
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residues(r: &ConstructionReport) -> Vec<Vec<u32>> {
        r.connection_set.elements().map(|g| g.residues().to_vec()).collect()
    }

    #[test]
    fn paley_sets() {
        let p5 = paley(5).unwrap();
        assert_eq!(residues(&p5), vec![vec![1], vec![4]]);
        let p13 = paley(13).unwrap();
        assert_eq!(p13.connection_set.indices(), &[1, 3, 4, 9, 10, 12]);
        assert_eq!(p13.t, Some(3));
        let p9 = paley(9).unwrap();
        assert_eq!(p9.group().factors(), &[3, 3]);
        assert_eq!(p9.field.as_ref().unwrap().modulus, vec![1, 0, 1]);
        assert_eq!(paley(7), Err(ConstructionError::NotOneModFour(7)));
        assert_eq!(paley(15), Err(ConstructionError::NotPrimePower(15)));
        assert_eq!(paley(8193), Err(ConstructionError::NotPrimePower(8193)));
    }

    #[test]
    fn peisert_sets() {
        let p9 = peisert(9).unwrap();
        let mut got = residues(&p9);
        got.sort();
        assert_eq!(got, vec![vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 2]]);
        assert_eq!(p9.field.unwrap().primitive.unwrap().coeffs(), &[1, 1]);
        assert_eq!(peisert(49).unwrap().connection_set.len(), 24);
        assert!(matches!(peisert(13), Err(ConstructionError::Field(FieldError::Precondition(_)))));
        assert!(matches!(peisert(27), Err(ConstructionError::Field(FieldError::Precondition(_)))));
        let alt = peisert_with(9, Some(&[2, 2])).unwrap();
        assert_eq!(alt.connection_set.len(), 4);
        assert!(peisert_with(9, Some(&[0, 1])).is_err());
    }

    #[test]
    fn davis_sets() {
        let d3 = davis(3).unwrap();
        assert_eq!(d3.connection_set.len(), 40);
        assert_eq!(d3.group().factors(), &[9, 9]);
        let det = d3.davis.as_ref().unwrap();
        assert_eq!((det.c_size, det.d_size), (24, 16));
        assert_eq!(det.d_literal_range, (4, 3));
        assert_eq!(det.d_generators.len(), 2);
        let cg: Vec<_> = det.c_generators.iter().map(|g| g.residues().to_vec()).collect();
        assert_eq!(cg, vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![3, 1]]);

        let d5 = davis(5).unwrap();
        assert_eq!(d5.connection_set.len(), 312);
        let det = d5.davis.as_ref().unwrap();
        assert_eq!((det.c_size, det.d_size), (12 * 20, 3 * 24));
        assert_eq!(det.d_literal_range, (11, 11));
        assert_eq!(det.d_generators[2].residues(), &[1, 11]);

        let d7 = davis(7).unwrap();
        assert_eq!(d7.connection_set.len(), (7usize.pow(4) - 1) / 2);

        assert_eq!(davis(2), Err(ConstructionError::NotOddPrime(2)));
        assert_eq!(davis(9), Err(ConstructionError::NotOddPrime(9)));
        assert_eq!(davis(11), Err(ConstructionError::TooLarge(14641)));
        let d = davis(3).unwrap();
        assert_eq!(lex_product(&d, &d).map(|r| r.q), Err(ConstructionError::TooLarge(6561)));
    }

    #[test]
    fn feasibility_examples() {
        assert_eq!(paley_type_order_feasible(81), Feasibility::PrimePower { p: 3, r: 4 });
        assert_eq!(paley_type_order_feasible(45), Feasibility::Infeasible);
        assert_eq!(paley_type_order_feasible(5625), Feasibility::NineFourthPower { n: 5 });
        assert_eq!(paley_type_order_feasible(15u64.pow(4)), Feasibility::FourthPower { n: 15 });
        assert_eq!(paley_type_order_feasible(7), Feasibility::PrimePowerWrongResidue { p: 7, r: 1 });
        assert!(!paley_type_order_feasible(1).is_feasible());
        assert_eq!(paley_type_order_feasible(9), Feasibility::PrimePower { p: 3, r: 2 });
        assert_eq!(paley_type_order_feasible(3 * 3 * 5usize.pow(4) as u64 * 3), Feasibility::Infeasible);
    }
}
