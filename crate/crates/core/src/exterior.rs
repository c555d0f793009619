//! Exterior algebra over an ordered orthonormal coframe.
//!
//! A [`Blade`] is a set of coframe indices stored as a bitmask; its
//! canonical orientation is the ascending wedge `θ_{i1} ∧ … ∧ θ_{ik}`.
//! A [`Multivector`] is a sparse map from blades to nonzero rationals.
//! Coefficients are exact everywhere.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::{rat, Error, Rational, Result};

/// Largest quaternionic rank whose coframe (`4n + 3` indices) fits a `u32` mask.
pub const MAX_RANK: usize = 7;

/// Quaternionic rank `n` and the coframe size `D = 4n + 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModelDims {
    n: usize,
}

impl ModelDims {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_RANK {
            return Err(Error::RankOutOfRange(n));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coframe size `4n + 3`.
    pub fn dim(&self) -> usize {
        4 * self.n + 3
    }

    /// Size `4n` of the η-free part of the coframe.
    pub fn horizontal_dim(&self) -> usize {
        4 * self.n
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.dim() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                dim: self.dim(),
            })
        }
    }

    /// The top blade `{0, …, D-1}`, i.e. the volume form.
    pub fn volume(&self) -> Blade {
        Blade((1u32 << self.dim()) - 1)
    }
}

/// A basis monomial of the exterior algebra.
///
/// Blades order first by degree, then lexicographically by their ascending
/// index sequences, which is the ordering used to pick leading terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let indices: Vec<usize> = indices.into_iter().collect();
        let mut mask = 0u32;
        let mut prev: Option<usize> = None;
        for &i in &indices {
            if i >= 32 || prev.is_some_and(|p| p >= i) {
                return Err(Error::UnorderedBlade(indices));
            }
            mask |= 1 << i;
            prev = Some(i);
        }
        Ok(Blade(mask))
    }

    pub fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    pub fn single(index: usize) -> Self {
        debug_assert!(index < 32);
        Blade(1 << index)
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, index: usize) -> bool {
        index < 32 && self.0 & (1 << index) != 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.0;
        (0..32).filter(move |i| mask & (1 << i) != 0)
    }

    /// Number of indices of `self` strictly below `index`.
    fn count_below(&self, index: usize) -> u32 {
        (self.0 & ((1u32 << index) - 1)).count_ones()
    }

    /// `self ∧ other` as a sign and a blade, or `None` when they share an index.
    pub fn wedge(&self, other: &Blade) -> Option<(i8, Blade)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // Sign of sorting the concatenation: pairs (i in self, j in other) with i > j.
        let inversions: u32 = other
            .indices()
            .map(|j| (self.0 >> (j + 1)).count_ones())
            .sum();
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, Blade(self.0 | other.0)))
    }

    /// `θ_index ∧ self`.
    pub fn wedge_index(&self, index: usize) -> Option<(i8, Blade)> {
        if self.contains(index) {
            return None;
        }
        let sign = if self.count_below(index).is_multiple_of(2) { 1 } else { -1 };
        Some((sign, Blade(self.0 | (1 << index))))
    }

    /// Contraction of `self` with the dual vector of `θ_index`.
    pub fn interior(&self, index: usize) -> Option<(i8, Blade)> {
        if !self.contains(index) {
            return None;
        }
        let sign = if self.count_below(index).is_multiple_of(2) { 1 } else { -1 };
        Some((sign, Blade(self.0 & !(1 << index))))
    }

    pub fn complement(&self, dims: ModelDims) -> Blade {
        Blade(dims.volume().0 & !self.0)
    }

    /// Lexicographic comparison of the ascending index sequences.
    pub fn lex_cmp(&self, other: &Blade) -> Ordering {
        self.indices().cmp(other.indices())
    }

    /// All blades of degree `k` over `dim` indices, in lexicographic order.
    pub fn all_of_degree(dim: usize, k: usize) -> Vec<Blade> {
        let mut out = Vec::new();
        if k > dim {
            return out;
        }
        let mut stack: Vec<usize> = (0..k).collect();
        loop {
            out.push(Blade::from_indices(stack.iter().copied()).expect("ascending"));
            // Advance to the next combination in lexicographic order.
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if stack[i] < dim - k + i {
                    stack[i] += 1;
                    for j in i + 1..k {
                        stack[j] = stack[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Blade{:?}", self.indices().collect::<Vec<_>>())
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().map(|i| format!("e{i}")).collect();
        write!(f, "{}", parts.join("^"))
    }
}

/// Grade information of a multivector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grade {
    Zero,
    Homogeneous(usize),
    Mixed,
}

/// Sparse exact-rational element of the exterior algebra.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Multivector {
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(value: Rational) -> Self {
        Self::term(Blade::SCALAR, value)
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    /// The coframe one-form `θ_index`.
    pub fn basis(index: usize) -> Self {
        Self::from_blade(Blade::single(index))
    }

    pub fn from_blade(blade: Blade) -> Self {
        Self::term(blade, Rational::one())
    }

    pub fn term(blade: Blade, coefficient: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(blade, coefficient);
        out
    }

    pub fn add_term(&mut self, blade: Blade, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(Rational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, blade: &Blade) -> Rational {
        self.terms.get(blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn grade(&self) -> Grade {
        let mut degrees = self.terms.keys().map(Blade::degree);
        match degrees.next() {
            None => Grade::Zero,
            Some(k) if degrees.all(|d| d == k) => Grade::Homogeneous(k),
            Some(_) => Grade::Mixed,
        }
    }

    /// Degree of a nonzero homogeneous multivector.
    pub fn degree(&self) -> Option<usize> {
        match self.grade() {
            Grade::Homogeneous(k) => Some(k),
            _ => None,
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, c * factor))
                .collect(),
        }
    }

    pub fn wedge(&self, other: &Multivector) -> Multivector {
        let mut out = Multivector::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, blade)) = a.wedge(b) {
                    out.add_term(blade, signed(sign, ca * cb));
                }
            }
        }
        out
    }

    /// `self^{∧ power}`; the zeroth power is the scalar `1`.
    pub fn wedge_power(&self, power: usize) -> Multivector {
        (0..power).fold(Multivector::one(), |acc, _| acc.wedge(self))
    }

    /// Contraction with the dual vector of coframe index `index`.
    pub fn interior(&self, index: usize) -> Multivector {
        let mut out = Multivector::zero();
        for (blade, c) in &self.terms {
            if let Some((sign, b)) = blade.interior(index) {
                out.add_term(b, signed(sign, c.clone()));
            }
        }
        out
    }

    /// Contraction with a vector given in the dual frame.
    pub fn interior_vector(&self, vector: &KVector) -> Result<Multivector> {
        let grade = vector.0.grade();
        if !matches!(grade, Grade::Zero | Grade::Homogeneous(1)) {
            return Err(Error::DegreeMismatch {
                expected: 1,
                got: vector.0.degree().unwrap_or(0),
            });
        }
        let mut out = Multivector::zero();
        for (blade, c) in vector.0.terms() {
            let index = blade.indices().next().expect("degree one");
            out += self.interior(index).scale(c);
        }
        Ok(out)
    }

    /// Hodge star for the volume form `θ_0 ∧ … ∧ θ_{D-1}`.
    pub fn hodge_star(&self, dims: ModelDims) -> Result<Multivector> {
        if self.grade() == Grade::Mixed {
            return Err(Error::NotHomogeneous);
        }
        let mut out = Multivector::zero();
        for (blade, c) in &self.terms {
            let complement = blade.complement(dims);
            let (sign, _) = blade.wedge(&complement).expect("disjoint");
            out.add_term(complement, signed(sign, c.clone()));
        }
        Ok(out)
    }

    /// Natural pairing `⟨ω, V⟩` with the `1/k!` normalisation:
    /// `⟨ρ1∧…∧ρk, V1∧…∧Vk⟩ = det[ρi(Vj)] / k!`.
    pub fn pairing(&self, vector: &KVector) -> Result<Rational> {
        let k = match (self.grade(), vector.0.grade()) {
            (Grade::Mixed, _) | (_, Grade::Mixed) => return Err(Error::NotHomogeneous),
            (Grade::Homogeneous(a), Grade::Homogeneous(b)) if a != b => {
                return Err(Error::DegreeMismatch {
                    expected: a,
                    got: b,
                })
            }
            (Grade::Homogeneous(a), _) | (_, Grade::Homogeneous(a)) => a,
            (Grade::Zero, Grade::Zero) => 0,
        };
        let total = self
            .terms
            .iter()
            .map(|(b, c)| c * vector.0.coefficient(b))
            .fold(Rational::zero(), |acc, x| acc + x);
        let factorial: i64 = (1..=k as i64).product();
        Ok(total / rat(factorial))
    }

    /// Smallest blade with nonzero coefficient in the lexicographic ordering.
    pub fn leading_blade(&self) -> Option<Blade> {
        self.terms.keys().copied().min()
    }

    /// Keep only the terms of degree `k`.
    pub fn graded_part(&self, k: usize) -> Multivector {
        Multivector {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.degree() == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }
}

fn signed(sign: i8, value: Rational) -> Rational {
    if sign < 0 {
        -value
    } else {
        value
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| format!("({c}) {b}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self + &(-rhs)
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        self + (-rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

impl Mul<&Rational> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Rational) -> Multivector {
        self.scale(rhs)
    }
}

/// A k-vector, expressed in the frame dual to the coframe.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KVector(pub Multivector);

impl KVector {
    /// The frame vector dual to `θ_index`.
    pub fn basis(index: usize) -> Self {
        KVector(Multivector::basis(index))
    }

    pub fn wedge(&self, other: &KVector) -> KVector {
        KVector(self.0.wedge(&other.0))
    }

    pub fn scale(&self, factor: &Rational) -> KVector {
        KVector(self.0.scale(factor))
    }

    /// Components of a vector (degree-one k-vector) by frame index.
    pub fn components(&self) -> BTreeMap<usize, Rational> {
        self.0
            .terms()
            .filter(|(b, _)| b.degree() == 1)
            .map(|(b, c)| (b.indices().next().expect("degree one"), c.clone()))
            .collect()
    }
}

/// All blades of degree `k` on the full coframe, in the lexicographic order
/// induced by the coframe ordering.
pub fn lex_order(dims: ModelDims, k: usize) -> Result<Vec<Blade>> {
    if k > dims.dim() {
        return Err(Error::DegreeOutOfRange {
            degree: k,
            max: dims.dim(),
        });
    }
    Ok(Blade::all_of_degree(dims.dim(), k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn dims(n: usize) -> ModelDims {
        ModelDims::new(n).unwrap()
    }

    #[test]
    fn wedge_is_antisymmetric_on_one_forms() {
        let z = Multivector::basis(0);
        assert!(z.wedge(&z).is_zero());
        let e1 = Multivector::basis(1);
        let e2 = Multivector::basis(2);
        let w = e2.wedge(&e1);
        assert_eq!(w.coefficient(&Blade::from_indices([1, 2]).unwrap()), rat(-1));
    }

    #[test]
    fn disjoint_ordered_wedge_has_plus_sign() {
        // n = 1: η2 = 5, η3 = 6.
        let w = Multivector::basis(5).wedge(&Multivector::basis(6));
        assert_eq!(w, Multivector::from_blade(Blade::from_indices([5, 6]).unwrap()));
    }

    #[test]
    fn interior_examples() {
        let z1 = Multivector::basis(0);
        let z2 = Multivector::basis(1);
        assert_eq!(z1.interior(0), Multivector::one());
        assert!(z2.interior(0).is_zero());
        // i_{X1}(ζ2 ∧ ζ1) = -ζ2
        assert_eq!(z2.wedge(&z1).interior(0), -&z2);
    }

    #[test]
    fn star_of_one_is_volume() {
        let d = dims(1);
        let s = Multivector::one().hodge_star(d).unwrap();
        assert_eq!(s, Multivector::from_blade(d.volume()));
    }

    #[test]
    fn star_squares_to_identity_example() {
        let d = dims(1);
        let w = Multivector::basis(0).wedge(&Multivector::basis(1));
        assert_eq!(w.hodge_star(d).unwrap().hodge_star(d).unwrap(), w);
    }

    #[test]
    fn star_rejects_mixed_degree() {
        let m = Multivector::one() + Multivector::basis(0);
        assert_eq!(m.hodge_star(dims(1)), Err(Error::NotHomogeneous));
    }

    #[test]
    fn pairing_normalisation() {
        assert_eq!(Multivector::basis(0).pairing(&KVector::basis(0)).unwrap(), rat(1));
        let w = Multivector::basis(5).wedge(&Multivector::basis(6));
        let v = KVector::basis(5).wedge(&KVector::basis(6));
        assert_eq!(w.pairing(&v).unwrap(), ratio(1, 2));
        assert!(matches!(
            w.pairing(&KVector::basis(5)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn lex_order_and_leading_blade() {
        // n = 1 layout: ζ1 = 0, φ*1ζ1 = 1, φ*2ζ1 = 2, φ*3ζ1 = 3, η = 4, 5, 6.
        let a = Blade::from_indices([0, 4]).unwrap();
        let b = Blade::from_indices([1, 4]).unwrap();
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert!(a < b);
        assert_eq!(Multivector::zero().leading_blade(), None);
        let d = dims(1);
        let blades = lex_order(d, 2).unwrap();
        assert_eq!(blades.len(), 21);
        assert!(blades.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn blade_rejects_unordered_indices() {
        assert!(Blade::from_indices([2, 1]).is_err());
        assert!(Blade::from_indices([1, 1]).is_err());
    }

    #[test]
    fn model_dims() {
        let d = dims(2);
        assert_eq!(d.dim(), 11);
        assert_eq!(d.horizontal_dim(), 8);
        assert!(d.check_index(11).is_err());
        assert!(ModelDims::new(8).is_err());
    }

    #[test]
    fn star_identity_with_interior_exhaustive_n1() {
        // *(ρ ∧ *ω) = (-1)^{(D-k)(k-1)} i_Y ω for every coframe element and blade.
        let d = dims(1);
        let dim = d.dim();
        for k in 0..=dim {
            let exponent = (dim as i64 - k as i64) * (k as i64 - 1);
            let sign = if exponent.rem_euclid(2) == 0 { 1 } else { -1 };
            for blade in Blade::all_of_degree(dim, k) {
                let w = Multivector::from_blade(blade);
                for j in 0..dim {
                    let lhs = Multivector::basis(j)
                        .wedge(&w.hodge_star(d).unwrap())
                        .hodge_star(d)
                        .unwrap();
                    let rhs = w.interior(j).scale(&rat(sign));
                    assert_eq!(lhs, rhs, "k={k} blade={blade} j={j}");
                }
            }
        }
    }
}
