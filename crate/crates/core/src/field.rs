//! Arithmetic in GF(p^r), represented as polynomials over `Z_p` modulo a
//! fixed monic irreducible polynomial.
//!
//! Coefficients are stored constant term first, everywhere: in
//! [`FieldElement`], in the modulus, in text form (`c0,c1,...`) and in the
//! additive coordinates that identify the field with `Z_p^r`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::group::{AbelianGroup, GroupElement};

/// Largest field order accepted by [`FiniteField::new`]; matches the dense
/// graph budget.
pub const MAX_FIELD_ORDER: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    ZeroDegree,
    TooLarge { p: u64, r: u32 },
    DivisionByZero,
    ZeroHasNoOrder,
    NotPrimitive(String),
    /// A construction precondition failed; the string names it.
    Precondition(String),
    WrongLength { expected: usize, found: usize },
    Parse(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::ZeroDegree => f.write_str("extension degree must be at least 1"),
            FieldError::TooLarge { p, r } => {
                write!(f, "GF({p}^{r}) exceeds the field order budget of {MAX_FIELD_ORDER}")
            }
            FieldError::DivisionByZero => f.write_str("zero has no inverse"),
            FieldError::ZeroHasNoOrder => f.write_str("zero has no multiplicative order"),
            FieldError::NotPrimitive(e) => write!(f, "{e} is not a primitive element"),
            FieldError::Precondition(s) => f.write_str(s),
            FieldError::WrongLength { expected, found } => {
                write!(f, "expected {expected} coefficients, found {found}")
            }
            FieldError::Parse(s) => write!(f, "cannot parse field element: {s}"),
        }
    }
}

impl core::error::Error for FieldError {}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// `c0,c1,...`
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        GroupElement::new(self.coeffs.clone()).fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    r: usize,
    /// Monic, length `r + 1`, constant term first.
    modulus: Vec<u32>,
    q: u64,
}

/// Remainder of `a` modulo the monic polynomial `m` over `Z_p`; both
/// constant term first. Trailing zeros of `a` are allowed.
fn poly_rem(mut a: Vec<u32>, m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap_or(0) as u64;
        if lead == 0 {
            continue;
        }
        let shift = a.len() - dm;
        for (i, &mc) in m[..dm].iter().enumerate() {
            let sub = lead * mc as u64 % p as u64;
            let slot = &mut a[shift + i];
            *slot = ((*slot as u64 + p as u64 - sub) % p as u64) as u32;
        }
    }
    a
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Monic polynomials of exact degree `d` over `Z_p`, in lex order of
/// coefficient tuples read from the constant term upward.
fn monic_polys(p: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut c = vec![0u32; d + 1];
        for slot in c[..d].iter_mut().rev() {
            *slot = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        c[d] = 1;
        c
    })
}

/// Irreducibility by trial division with every monic polynomial of degree
/// `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let d = poly.len() - 1;
    for k in 1..=d / 2 {
        for divisor in monic_polys(p, k) {
            if trim(poly_rem(poly.to_vec(), &divisor, p)).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// GF(p^r) with the lexicographically smallest monic irreducible modulus
    /// of degree `r`.
    pub fn new(p: u64, r: u32) -> Result<Self, FieldError> {
        if !arith::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if r == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = p.checked_pow(r).filter(|&q| q <= MAX_FIELD_ORDER);
        let Some(q) = q else {
            return Err(FieldError::TooLarge { p, r });
        };
        let p = p as u32;
        let r = r as usize;
        let modulus = monic_polys(p, r)
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial exists in every degree");
        Ok(FiniteField { p, r, modulus, q })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.r] }
    }

    pub fn one(&self) -> FieldElement {
        let mut c = vec![0; self.r];
        c[0] = 1;
        FieldElement { coeffs: c }
    }

    /// Reduces each coefficient mod `p`.
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() != self.r {
            return Err(FieldError::WrongLength { expected: self.r, found: coeffs.len() });
        }
        Ok(FieldElement { coeffs: coeffs.iter().map(|&c| c % self.p).collect() })
    }

    /// Parses `c0,c1,...`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement, FieldError> {
        let coeffs = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| FieldError::Parse(String::from(s))))
            .collect::<Result<Vec<_>, _>>()?;
        self.element(&coeffs)
    }

    /// The element at mixed-radix position `index` (`c0` most significant),
    /// which is also its index in `Z_p^r`.
    pub fn element_at(&self, mut index: u64) -> FieldElement {
        let mut c = vec![0; self.r];
        for slot in c.iter_mut().rev() {
            *slot = (index % self.p as u64) as u32;
            index /= self.p as u64;
        }
        FieldElement { coeffs: c }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |i| self.element_at(i))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + y) % self.p).collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement { coeffs: a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect() }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p as u64;
        let mut prod = vec![0u32; 2 * self.r - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        let mut c = poly_rem(prod, &self.modulus, self.p);
        c.resize(self.r, 0);
        FieldElement { coeffs: c }
    }

    /// Square-and-multiply.
    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm against the modulus.
    pub fn inverse(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let p = self.p;
        // Invariant: s_i * a == r_i (mod modulus).
        let (mut r0, mut r1) = (self.modulus.clone(), trim(a.coeffs.clone()));
        let (mut s0, mut s1): (Vec<u32>, Vec<u32>) = (vec![], vec![1]);
        while r1.len() > 1 {
            let (quot, rem) = poly_divmod(&r0, &r1, p);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1, p), p);
            r0 = core::mem::replace(&mut r1, rem);
            s0 = core::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant because the modulus is irreducible.
        let c_inv = mod_inverse(r1[0], p);
        let mut out: Vec<u32> = s1.iter().map(|&x| ((x as u64 * c_inv as u64) % p as u64) as u32).collect();
        out = poly_rem(out, &self.modulus, p);
        out.resize(self.r, 0);
        Ok(FieldElement { coeffs: out })
    }

    /// Order in the multiplicative group, from the factorization of `q - 1`.
    pub fn multiplicative_order(&self, a: &FieldElement) -> Result<u64, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroHasNoOrder);
        }
        let one = self.one();
        let mut order = self.q - 1;
        for (l, _) in arith::factorize(self.q - 1) {
            while order.is_multiple_of(l) && self.pow(a, order / l) == one {
                order /= l;
            }
        }
        Ok(order)
    }

    /// The first nonzero element, in enumeration order, of order `q - 1`.
    pub fn primitive_element(&self) -> FieldElement {
        self.elements()
            .skip(1)
            .find(|a| self.multiplicative_order(a) == Ok(self.q - 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// Nonzero squares, in enumeration order.
    pub fn squares(&self) -> Vec<FieldElement> {
        let mut seen = vec![false; self.q as usize];
        for x in self.elements().skip(1) {
            seen[self.index_of(&self.mul(&x, &x)) as usize] = true;
        }
        (0..self.q).filter(|&i| seen[i as usize]).map(|i| self.element_at(i)).collect()
    }

    /// `{a^i : i mod 4 in {0, 1}}` for the deterministic primitive element `a`.
    pub fn peisert_set(&self) -> Result<Vec<FieldElement>, FieldError> {
        self.peisert_set_with(&self.primitive_element())
    }

    /// Like [`FiniteField::peisert_set`] with a caller-chosen primitive element.
    pub fn peisert_set_with(&self, generator: &FieldElement) -> Result<Vec<FieldElement>, FieldError> {
        if self.p % 4 != 3 {
            return Err(FieldError::Precondition(alloc::format!(
                "Peisert sets need p = 3 mod 4, got p = {}",
                self.p
            )));
        }
        if !self.r.is_multiple_of(2) {
            return Err(FieldError::Precondition(alloc::format!(
                "Peisert sets need an even extension degree, got r = {}",
                self.r
            )));
        }
        if self.multiplicative_order(generator)? != self.q - 1 {
            return Err(FieldError::NotPrimitive(alloc::format!("{generator}")));
        }
        let mut out = Vec::with_capacity((self.q as usize - 1) / 2);
        let mut x = self.one();
        for i in 0..self.q - 1 {
            if i % 4 < 2 {
                out.push(x.clone());
            }
            x = self.mul(&x, generator);
        }
        out.sort();
        Ok(out)
    }

    /// Mixed-radix index, equal to the index of [`FiniteField::coordinates`]
    /// in [`FiniteField::additive_group`].
    pub fn index_of(&self, a: &FieldElement) -> u64 {
        a.coeffs.iter().fold(0, |acc, &c| acc * self.p as u64 + c as u64)
    }

    /// `Z_p^r`, the additive group of the field.
    pub fn additive_group(&self) -> AbelianGroup {
        AbelianGroup::elementary(self.p, self.r).expect("field order is within the group budget")
    }

    /// Coefficient vector read as a residue tuple of `Z_p^r`.
    pub fn coordinates(&self, a: &FieldElement) -> GroupElement {
        GroupElement::new(a.coeffs.clone())
    }

    pub fn from_coordinates(&self, g: &GroupElement) -> Result<FieldElement, FieldError> {
        self.element(g.residues())
    }
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    trim(out)
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Division by a nonzero (not necessarily monic) polynomial `b`.
fn poly_divmod(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = mod_inverse(b[db], p) as u64;
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![0u32; rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let coef = (*rem.last().unwrap() as u64 * lead_inv % p as u64) as u32;
        quot[shift] = coef;
        for (i, &bc) in b.iter().enumerate() {
            let sub = coef as u64 * bc as u64 % p as u64;
            rem[shift + i] = ((rem[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn roots_exist(poly: &[u32], p: u32) -> bool {
        (0..p).any(|x| {
            poly.iter().rev().fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64) == 0
        })
    }

    #[test]
    fn field_construction() {
        assert_eq!(FiniteField::new(13, 1).unwrap().modulus(), &[0, 1]);
        let f9 = FiniteField::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        // x^2 and x^2 + x have the root 0; x^2 + 1 has none mod 3.
        assert!(roots_exist(&[0, 0, 1], 3) && roots_exist(&[0, 1, 1], 3));
        assert!(!roots_exist(&[1, 0, 1], 3));
        let f49 = FiniteField::new(7, 2).unwrap();
        assert_eq!(f49.modulus(), &[1, 0, 1]);
        assert!(!roots_exist(&[1, 0, 1], 7));
        assert_eq!(FiniteField::new(9, 1), Err(FieldError::NotPrime(9)));
        assert_eq!(FiniteField::new(3, 0), Err(FieldError::ZeroDegree));
        assert!(matches!(FiniteField::new(2, 13), Err(FieldError::TooLarge { .. })));
        // Degree 4 moduli are checked against quadratic divisors too.
        let f81 = FiniteField::new(3, 4).unwrap();
        assert!(is_irreducible(f81.modulus(), 3));
        assert!(!is_irreducible(&[1, 0, 2, 0, 1], 3)); // (x^2+1)^2
    }

    #[test]
    fn arithmetic_examples() {
        let f9 = FiniteField::new(3, 2).unwrap();
        let x = f9.element(&[0, 1]).unwrap();
        assert_eq!(f9.mul(&x, &x), f9.element(&[2, 0]).unwrap());
        let x1 = f9.element(&[1, 1]).unwrap();
        assert_eq!(f9.mul(&x1, &x1), f9.element(&[0, 2]).unwrap());
        let f13 = FiniteField::new(13, 1).unwrap();
        assert_eq!(f13.inverse(&f13.element(&[2]).unwrap()).unwrap(), f13.element(&[7]).unwrap());
        assert_eq!(f13.inverse(&f13.zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn orders_and_primitive_elements() {
        let f9 = FiniteField::new(3, 2).unwrap();
        assert_eq!(f9.multiplicative_order(&f9.element(&[0, 1]).unwrap()).unwrap(), 4);
        let a = f9.primitive_element();
        assert_eq!(a, f9.element(&[1, 1]).unwrap());
        assert_eq!(f9.pow(&a, 2), f9.element(&[0, 2]).unwrap());
        assert_eq!(f9.pow(&a, 4), f9.element(&[2, 0]).unwrap());
        assert_eq!(f9.pow(&a, 8), f9.one());
        for i in 1..f9.index_of(&a) {
            assert!(f9.multiplicative_order(&f9.element_at(i)).unwrap() <= 4);
        }
        let f13 = FiniteField::new(13, 1).unwrap();
        assert_eq!(f13.primitive_element(), f13.element(&[2]).unwrap());
        assert_eq!(f13.multiplicative_order(&f13.zero()), Err(FieldError::ZeroHasNoOrder));
    }

    #[test]
    fn squares_examples() {
        let f13 = FiniteField::new(13, 1).unwrap();
        let sq: Vec<u32> = f13.squares().iter().map(|e| e.coeffs()[0]).collect();
        assert_eq!(sq, alloc::vec![1, 3, 4, 9, 10, 12]);
        let f5 = FiniteField::new(5, 1).unwrap();
        let sq: Vec<u32> = f5.squares().iter().map(|e| e.coeffs()[0]).collect();
        assert_eq!(sq, alloc::vec![1, 4]);
        let f9 = FiniteField::new(3, 2).unwrap();
        let sq = f9.squares();
        assert_eq!(sq.len(), 4);
        for s in &sq {
            assert!(sq.contains(&f9.neg(s)));
        }
    }

    #[test]
    fn peisert_examples() {
        let f9 = FiniteField::new(3, 2).unwrap();
        let s: BTreeSet<_> = f9.peisert_set().unwrap().into_iter().collect();
        let expected: BTreeSet<_> = [[1, 0], [1, 1], [2, 0], [2, 2]]
            .iter()
            .map(|c| f9.element(c).unwrap())
            .collect();
        assert_eq!(s, expected);

        let f49 = FiniteField::new(7, 2).unwrap();
        let s = f49.peisert_set().unwrap();
        assert_eq!(s.len(), 24);
        assert!(s.iter().all(|x| !x.is_zero() && s.contains(&f49.neg(x))));

        let f5 = FiniteField::new(5, 1).unwrap();
        assert!(matches!(f5.peisert_set(), Err(FieldError::Precondition(_))));
        let f7 = FiniteField::new(7, 1).unwrap();
        assert!(matches!(f7.peisert_set(), Err(FieldError::Precondition(_))));
        let not_primitive = f9.element(&[0, 1]).unwrap();
        assert!(matches!(f9.peisert_set_with(&not_primitive), Err(FieldError::NotPrimitive(_))));
    }

    #[test]
    fn coordinates() {
        let f9 = FiniteField::new(3, 2).unwrap();
        let g = f9.additive_group();
        let e = f9.element(&[2, 1]).unwrap();
        let c = f9.coordinates(&e);
        assert_eq!(c.residues(), &[2, 1]);
        assert_eq!(g.index_of(&c).unwrap(), 7);
        assert_eq!(f9.index_of(&e), 7);
        assert_eq!(f9.from_coordinates(&c).unwrap(), e);
        assert_eq!(f9.coordinates(&f9.zero()), g.identity());
        let f13 = FiniteField::new(13, 1).unwrap();
        assert_eq!(f13.coordinates(&f13.element(&[7]).unwrap()).residues(), &[7]);
        assert_eq!(alloc::format!("{e}"), "2,1");
        assert_eq!(f9.parse_element("2, 1").unwrap(), e);
    }

    #[test]
    fn coordinates_are_additive_isomorphisms() {
        for (p, r) in [(3, 2), (13, 1), (5, 2), (7, 2), (3, 4)] {
            let f = FiniteField::new(p, r).unwrap();
            let g = f.additive_group();
            let elems: Vec<_> = f.elements().collect();
            let mut seen = BTreeSet::new();
            for a in &elems {
                let ca = f.coordinates(a);
                assert!(seen.insert(g.index_of(&ca).unwrap()));
                for b in elems.iter().step_by(1 + elems.len() / 20) {
                    let lhs = f.coordinates(&f.add(a, b));
                    let rhs = g.add(&ca, &f.coordinates(b)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
            assert_eq!(seen.len() as u64, f.order());
        }
    }

    #[test]
    fn squares_and_peisert_structure() {
        for (p, r) in [(3u64, 2u32), (13, 1), (5, 2), (7, 2), (3, 4), (5, 1), (17, 1)] {
            let f = FiniteField::new(p, r).unwrap();
            let q = f.order();
            let sq = f.squares();
            assert_eq!(sq.len() as u64, (q - 1) / 2);
            let set: BTreeSet<_> = sq.iter().cloned().collect();
            for a in &sq {
                for b in sq.iter().take(5) {
                    assert!(set.contains(&f.mul(a, b)));
                }
            }
            if q % 4 == 1 {
                assert!(set.contains(&f.neg(&f.one())));
            }
        }
        for (p, r) in [(3u64, 2u32), (7, 2), (3, 4)] {
            let f = FiniteField::new(p, r).unwrap();
            let a = f.primitive_element();
            let s: BTreeSet<_> = f.peisert_set().unwrap().into_iter().collect();
            let mut other = BTreeSet::new();
            let mut x = f.one();
            for i in 0..f.order() - 1 {
                if i % 4 >= 2 {
                    other.insert(x.clone());
                }
                x = f.mul(&x, &a);
            }
            assert!(s.is_disjoint(&other));
            assert_eq!(s.len() + other.len(), f.order() as usize - 1);
            assert!(s.iter().all(|x| s.contains(&f.neg(x))));
        }
    }
}
