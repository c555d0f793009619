//! Betti sequences, the constraints they must satisfy, and Poincaré series.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::contact::{Axis, ContactModel};
use crate::exterior::{Blade, Multivector};
use crate::linalg::rank_of;
use crate::report::{DivisibilityEntry, IdentityReport, MarginEntry, SkRankSummary};
use crate::{binomial, Error, Result};

/// Horizontal Betti numbers `b^h_0, …, b^h_{4n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorizontalBettiSequence {
    n: usize,
    values: Vec<u64>,
}

impl HorizontalBettiSequence {
    pub fn new(n: usize, values: Vec<u64>) -> Result<Self> {
        if values.len() != 4 * n + 1 {
            return Err(Error::LengthMismatch {
                expected: 4 * n + 1,
                got: values.len(),
            });
        }
        Ok(Self { n, values })
    }

    /// The flat torus case `b^h_k = C(4n, k)`.
    pub fn torus(n: usize) -> Self {
        let values = (0..=4 * n as u64).map(|k| binomial(4 * n as u64, k)).collect();
        Self { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `b^h_k`, zero outside `0..=4n`.
    pub fn get(&self, k: isize) -> u64 {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.values.get(k).copied())
            .unwrap_or(0)
    }
}

/// Betti numbers `b_0, …, b_{4n+3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiSequence {
    values: Vec<u64>,
}

impl BettiSequence {
    pub fn new(values: Vec<u64>) -> Self {
        Self { values }
    }

    /// Validates the length `4n + 4`.
    pub fn for_rank(n: usize, values: Vec<u64>) -> Result<Self> {
        if values.len() != 4 * n + 4 {
            return Err(Error::LengthMismatch {
                expected: 4 * n + 4,
                got: values.len(),
            });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, k: usize) -> u64 {
        self.values.get(k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(k, b)| if k % 2 == 0 { *b as i64 } else { -(*b as i64) })
            .sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }

    pub fn series(&self) -> PoincareSeries {
        PoincareSeries::new(self.values.iter().map(|b| *b as i64).collect())
    }
}

/// `b_k = b^h_k + 3b^h_{k-1} + 3b^h_{k-2} + b^h_{k-3}`.
pub fn betti_from_horizontal(bh: &HorizontalBettiSequence) -> BettiSequence {
    let weights = [1u64, 3, 3, 1];
    let values = (0..4 * bh.n() as isize + 4)
        .map(|k| {
            weights
                .iter()
                .enumerate()
                .map(|(j, w)| w * bh.get(k - j as isize))
                .sum()
        })
        .collect();
    BettiSequence { values }
}

/// Integer polynomial in `t`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareSeries {
    coeffs: Vec<i64>,
}

impl PoincareSeries {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `(1 + t)^k`.
    pub fn one_plus_t_pow(k: usize) -> Self {
        Self::new((0..=k as u64).map(|j| binomial(k as u64, j) as i64).collect())
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * t + c)
    }
}

/// Exact polynomial product.
pub fn series_product(a: &PoincareSeries, b: &PoincareSeries) -> PoincareSeries {
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        return PoincareSeries::new(vec![]);
    }
    let mut out = vec![0i64; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    PoincareSeries::new(out)
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, c)| {
                let coeff = if *c == 1 && k > 0 { String::new() } else { c.to_string() };
                match k {
                    0 => coeff,
                    1 => format!("{coeff}t"),
                    _ => format!("{coeff}t^{k}"),
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// The Poincaré polynomial of `T^7`, `(1 + t)^7`.
pub fn torus_series() -> PoincareSeries {
    PoincareSeries::one_plus_t_pow(7)
}

/// `(1 + 22t^2 + t^4)(1 + t)^3`, the product of `T^3` with a K3 surface.
pub fn k3_product_series() -> PoincareSeries {
    series_product(&PoincareSeries::new(vec![1, 0, 22, 0, 1]), &PoincareSeries::one_plus_t_pow(3))
}

/// Per-entry results of a divisibility constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityCheck {
    pub entries: Vec<DivisibilityEntry>,
}

impl DivisibilityCheck {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn to_report(&self, name: &str, statement: &str) -> IdentityReport {
        let failure = self
            .entries
            .iter()
            .find(|e| !e.passed)
            .map(|e| format!("k = {}: {} = {} mod {}", e.k, e.value, e.residue, e.modulus));
        IdentityReport::from_outcome(name, statement, failure)
    }
}

/// Per-entry results of a lower bound, with margins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub entries: Vec<MarginEntry>,
}

impl BoundCheck {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn margins(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.margin).collect()
    }

    pub fn to_report(&self, name: &str, statement: &str) -> IdentityReport {
        let failure = self
            .entries
            .iter()
            .find(|e| !e.passed)
            .map(|e| format!("k = {}: {} < {}", e.k, e.value, e.required));
        IdentityReport::from_outcome(name, statement, failure)
    }
}

fn divisible(k: usize, value: u64, modulus: u64) -> DivisibilityEntry {
    DivisibilityEntry {
        k,
        value,
        modulus,
        residue: value % modulus,
        passed: value.is_multiple_of(modulus),
    }
}

fn at_least(k: usize, value: u64, required: u64) -> MarginEntry {
    MarginEntry {
        k,
        value,
        required,
        margin: value as i64 - required as i64,
        passed: value >= required,
    }
}

/// `b_{k-1} + b_k ≡ 0 (mod 4)` for every odd `k`.
pub fn check_divisibility(b: &BettiSequence) -> DivisibilityCheck {
    let entries = (1..b.values().len())
        .step_by(2)
        .map(|k| divisible(k, b.get(k - 1) + b.get(k), 4))
        .collect();
    DivisibilityCheck { entries }
}

/// `b_k ≥ C(k+2, 2)` for `0 ≤ k ≤ 2n + 1`.
pub fn check_bounds(b: &BettiSequence, n: usize) -> BoundCheck {
    let entries = (0..=2 * n + 1)
        .map(|k| at_least(k, b.get(k), binomial(k as u64 + 2, 2)))
        .collect();
    BoundCheck { entries }
}

/// Constraints on the horizontal sequence itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorizontalCheck {
    /// `b^h_k ≡ 0 (mod 4)` for odd `k`.
    pub divisibility: DivisibilityCheck,
    /// `b^h_{2k} ≥ C(k+2, 2)` for `0 ≤ k ≤ n`.
    pub bounds: BoundCheck,
    /// Poincaré duality `b^h_k = b^h_{4n-k}` is expected but not a hard constraint.
    pub warnings: Vec<String>,
}

impl HorizontalCheck {
    pub fn passed(&self) -> bool {
        self.divisibility.passed() && self.bounds.passed()
    }
}

pub fn check_horizontal_constraints(bh: &HorizontalBettiSequence) -> HorizontalCheck {
    let n = bh.n();
    let divisibility = DivisibilityCheck {
        entries: (1..=4 * n)
            .step_by(2)
            .map(|k| divisible(k, bh.get(k as isize), 4))
            .collect(),
    };
    let bounds = BoundCheck {
        entries: (0..=n)
            .map(|k| at_least(2 * k, bh.get(2 * k as isize), binomial(k as u64 + 2, 2)))
            .collect(),
    };
    let warnings = (0..=2 * n)
        .filter(|k| bh.get(*k as isize) != bh.get((4 * n - k) as isize))
        .map(|k| {
            format!(
                "horizontal sequence is not palindromic: b^h_{k} = {} but b^h_{} = {}",
                bh.get(k as isize),
                4 * n - k,
                bh.get((4 * n - k) as isize)
            )
        })
        .collect();
    HorizontalCheck {
        divisibility,
        bounds,
        warnings,
    }
}

/// The products `Ξ_1^{k1} ∧ Ξ_2^{k2} ∧ Ξ_3^{k3}`, `k1 + k2 + k3 = k`, and their rank.
#[derive(Clone, Debug)]
pub struct SkRank {
    pub n: usize,
    pub k: usize,
    pub rank: usize,
    pub expected: u64,
    /// Exponents with the lexicographically leading blade of each product.
    pub leading: Vec<((usize, usize, usize), Option<Blade>)>,
}

impl SkRank {
    /// The leading blades are nonzero and pairwise distinct, which forces independence.
    pub fn leading_blades_distinct(&self) -> bool {
        let blades: Option<BTreeSet<Blade>> = self.leading.iter().map(|(_, b)| *b).collect();
        blades.is_some_and(|set| set.len() == self.leading.len())
    }

    pub fn passed(&self) -> bool {
        self.rank as u64 == self.expected && self.leading_blades_distinct()
    }

    pub fn summary(&self) -> SkRankSummary {
        SkRankSummary {
            n: self.n,
            k: self.k,
            rank: self.rank,
            expected: self.expected,
            leading_blades_distinct: self.leading_blades_distinct(),
        }
    }
}

/// Rank of `S_k` in the rank-`n` model; requires `k ≤ n`.
pub fn s_k_rank(n: usize, k: usize) -> Result<SkRank> {
    if k > n {
        return Err(Error::ParameterOutOfRange {
            name: "k",
            value: k,
            reason: format!("must be at most n = {n}"),
        });
    }
    let model = ContactModel::new(n)?;
    let xi: Vec<Multivector> = Axis::ALL.iter().map(|a| model.xi_form(*a)).collect();
    let mut products = Vec::new();
    for k1 in (0..=k).rev() {
        for k2 in (0..=k - k1).rev() {
            let k3 = k - k1 - k2;
            let p = xi[0]
                .wedge_power(k1)
                .wedge(&xi[1].wedge_power(k2))
                .wedge(&xi[2].wedge_power(k3));
            products.push(((k1, k2, k3), p));
        }
    }
    let rank = rank_of(products.iter().map(|(_, p)| {
        p.terms()
            .map(|(b, c)| (*b, c.clone()))
            .collect::<BTreeMap<_, _>>()
    }));
    Ok(SkRank {
        n,
        k,
        rank,
        expected: binomial(k as u64 + 2, 2),
        leading: products
            .iter()
            .map(|(e, p)| (*e, p.leading_blade()))
            .collect(),
    })
}

/// `s_k_rank(n, k) = C(k+2, 2)` with distinct leading blades, for `0 ≤ k ≤ n ≤ max_n`.
pub fn s_k_report(max_n: usize) -> (IdentityReport, Vec<SkRankSummary>) {
    let mut summaries = Vec::new();
    let mut failure = None;
    for n in 0..=max_n {
        for k in 0..=n {
            match s_k_rank(n, k) {
                Ok(r) => {
                    if !r.passed() && failure.is_none() {
                        failure = Some(format!("n = {n}, k = {k}: rank {}", r.rank));
                    }
                    summaries.push(r.summary());
                }
                Err(e) => failure = failure.or(Some(e.to_string())),
            }
        }
    }
    let report = IdentityReport::from_outcome(
        "S_k_rank",
        "the C(k+2,2) products Xi_1^k1 ^ Xi_2^k2 ^ Xi_3^k3 (k1+k2+k3 = k) are independent with pairwise distinct leading blades",
        failure,
    );
    (report, summaries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bh(values: &[u64]) -> HorizontalBettiSequence {
        HorizontalBettiSequence::new((values.len() - 1) / 4, values.to_vec()).unwrap()
    }

    #[test]
    fn torus_gives_binomials() {
        let b = betti_from_horizontal(&HorizontalBettiSequence::torus(1));
        assert_eq!(b.values(), &[1, 7, 21, 35, 35, 21, 7, 1]);
        assert_eq!(b.total(), 128);
        assert_eq!(b.series(), torus_series());
    }

    #[test]
    fn k3_series() {
        let b = betti_from_horizontal(&bh(&[1, 0, 22, 0, 1]));
        assert_eq!(b.series(), k3_product_series());
        assert_eq!(b.get(2), 25);
        assert_eq!(b.values(), &[1, 3, 25, 67, 67, 25, 3, 1]);
    }

    #[test]
    fn twisted_example_sequence() {
        let b = betti_from_horizontal(&bh(&[1, 0, 4, 0, 1]));
        assert_eq!(b.values(), &[1, 3, 7, 13, 13, 7, 3, 1]);
        assert!(check_divisibility(&b).passed());
        let bounds = check_bounds(&b, 1);
        assert!(bounds.passed());
        assert_eq!(bounds.margins(), vec![0, 0, 1, 3]);
    }

    #[test]
    fn delta_sequence_shifts() {
        let b = betti_from_horizontal(&bh(&[0, 0, 1, 0, 0]));
        assert_eq!(b.values(), &[0, 0, 1, 3, 3, 1, 0, 0]);
    }

    #[test]
    fn negative_controls() {
        assert!(!check_divisibility(&BettiSequence::new(vec![1, 2, 0, 0])).passed());
        let b = BettiSequence::new(vec![1, 3, 5, 11, 11, 5, 3, 1]);
        let bounds = check_bounds(&b, 1);
        assert!(!bounds.passed());
        assert_eq!(bounds.entries.iter().find(|e| !e.passed).unwrap().k, 2);
    }

    #[test]
    fn horizontal_constraints() {
        assert!(check_horizontal_constraints(&bh(&[1, 0, 4, 0, 1])).passed());
        assert!(check_horizontal_constraints(&bh(&[1, 4, 6, 4, 1])).passed());
        let bad = check_horizontal_constraints(&bh(&[1, 2, 6, 2, 1]));
        assert!(!bad.divisibility.passed());
        let lopsided = check_horizontal_constraints(&bh(&[1, 0, 4, 0, 2]));
        assert!(!lopsided.warnings.is_empty());
    }

    #[test]
    fn length_is_validated() {
        assert!(HorizontalBettiSequence::new(1, vec![1, 0, 4]).is_err());
        assert!(BettiSequence::for_rank(1, vec![1; 7]).is_err());
    }

    #[test]
    fn series_algebra() {
        let p = series_product(&PoincareSeries::one_plus_t_pow(4), &PoincareSeries::one_plus_t_pow(3));
        assert_eq!(p, PoincareSeries::one_plus_t_pow(7));
        assert_eq!(p.coefficient(2), 21);
        assert_eq!(series_product(&p, &PoincareSeries::one()), p);
        assert_eq!(k3_product_series().coefficient(2), 25);
        assert_eq!(PoincareSeries::one_plus_t_pow(3).to_string(), "1 + 3t + 3t^2 + t^3");
    }

    #[test]
    fn s_k_small_cases() {
        assert_eq!(s_k_rank(1, 0).unwrap().rank, 1);
        assert_eq!(s_k_rank(1, 1).unwrap().rank, 3);
        let r = s_k_rank(2, 2).unwrap();
        assert_eq!(r.rank, 6);
        assert!(r.leading_blades_distinct());
        assert!(s_k_rank(1, 2).is_err());
    }
}
