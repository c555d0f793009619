//! Cellular homology of the twisted torus quotient `M^7_f = (T^4 × R^3)/Z^3`.
//!
//! Cells are subsets `S ⊆ {1, …, 7}`; coordinates 1–4 are the quaternion
//! directions `1, i, j, k` of `T^4 = H/Z^4`, coordinates 5–7 the flat
//! directions. Crossing a face in direction 5, 6 or 7 identifies the
//! quaternion coordinates through the twist, so the boundary of a cube is
//! `Σ_s (−1)^{pos(s)+1} (face(S, s, 1) − face(S, s, 0))` with the face at 1
//! relabelled by the twist when `s ≥ 5`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::betti::{
    betti_from_horizontal, check_bounds, check_divisibility, BettiSequence,
    HorizontalBettiSequence,
};
use crate::exterior::{Blade, Multivector};
use crate::linalg::SparseMatrix;
use crate::report::{DegreeHomology, HomologySummary, IdentityReport};
use crate::{binomial, rat, Error, Result};

/// Number of cube coordinates.
pub const DIM: usize = 7;

/// Product of quaternion units labelled `1 = 1, 2 = i, 3 = j, 4 = k`, as a signed label.
pub fn quaternion_product(a: u8, b: u8) -> (i8, u8) {
    match (a, b) {
        (1, x) | (x, 1) => (1, x),
        (x, y) if x == y => (-1, 1),
        (2, 3) => (1, 4),
        (3, 4) => (1, 2),
        (4, 2) => (1, 3),
        (3, 2) => (-1, 4),
        (4, 3) => (-1, 2),
        (2, 4) => (-1, 3),
        _ => unreachable!("labels are 1..=4"),
    }
}

/// Signed permutation of the quaternion coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistMap {
    images: [(i8, u8); 4],
}

impl TwistMap {
    pub fn new(images: [(i8, u8); 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for (sign, label) in images {
            if !(1..=4).contains(&label) || sign.abs() != 1 || seen[label as usize - 1] {
                return Err(Error::InvalidTwist);
            }
            seen[label as usize - 1] = true;
        }
        Ok(Self { images })
    }

    /// `q ↦ q · u` for a signed unit `sign · e_label`.
    pub fn right_multiplication(sign: i8, label: u8) -> Result<Self> {
        if !(1..=4).contains(&label) {
            return Err(Error::InvalidTwist);
        }
        let images = std::array::from_fn(|i| {
            let (s, l) = quaternion_product(i as u8 + 1, label);
            (s * sign, l)
        });
        Self::new(images)
    }

    /// The gluing map of `M^7_f`: right multiplication by `i^{-1} = -i`.
    pub fn standard() -> Self {
        Self::right_multiplication(-1, 2).expect("unit quaternion")
    }

    /// Negates the image of one label (negative control).
    pub fn with_sign_flip(mut self, label: u8) -> Self {
        if let Some(entry) = self.images.get_mut(label as usize - 1) {
            entry.0 = -entry.0;
        }
        self
    }

    pub fn image(&self, label: u8) -> (i8, u8) {
        self.images[label as usize - 1]
    }

    pub fn compose(&self, rhs: &TwistMap) -> TwistMap {
        let images = std::array::from_fn(|i| {
            let (s1, l1) = rhs.images[i];
            let (s2, l2) = self.image(l1);
            (s1 * s2, l2)
        });
        TwistMap { images }
    }

    pub fn is_identity(&self) -> bool {
        (0..4).all(|i| self.images[i] == (1, i as u8 + 1))
    }

    /// Smallest `m ≥ 1` with `f^m = id`.
    pub fn order(&self) -> usize {
        let mut power = *self;
        let mut m = 1;
        while !power.is_identity() {
            power = power.compose(self);
            m += 1;
        }
        m
    }

    /// Determinant of the signed permutation matrix.
    pub fn determinant(&self) -> i64 {
        let labels: Vec<u8> = self.images.iter().map(|(_, l)| *l).collect();
        let signs: i64 = self.images.iter().map(|(s, _)| *s as i64).product();
        signs * permutation_sign(&labels)
    }
}

fn permutation_sign(values: &[u8]) -> i64 {
    let inversions = (0..values.len())
        .flat_map(|i| (i + 1..values.len()).map(move |j| (i, j)))
        .filter(|(i, j)| values[*i] > values[*j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A cube cell, a subset of `{1, …, 7}` stored as a bitmask (bit `c-1` for coordinate `c`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell(u8);

impl Cell {
    pub fn new(coords: &[usize]) -> Result<Self> {
        let mut mask = 0u8;
        for &c in coords {
            if !(1..=DIM).contains(&c) {
                return Err(Error::IndexOutOfRange { index: c, dim: DIM });
            }
            mask |= 1 << (c - 1);
        }
        Ok(Cell(mask))
    }

    pub fn dimension(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn coords(&self) -> Vec<usize> {
        (1..=DIM).filter(|c| self.0 & (1 << (c - 1)) != 0).collect()
    }

    fn without(&self, c: usize) -> Cell {
        Cell(self.0 & !(1 << (c - 1)))
    }

    /// All cells of dimension `k` in lexicographic order.
    pub fn all_of_dimension(k: usize) -> Vec<Cell> {
        Blade::all_of_degree(DIM, k)
            .into_iter()
            .map(|b| Cell(b.mask() as u8))
            .collect()
    }

    /// The twist applied to the quaternion labels, with its orientation sign.
    fn twisted(&self, twist: &TwistMap) -> (i64, Cell) {
        let mut sign = 1i64;
        let mut labels = Vec::new();
        let mut mask = 0u8;
        for c in self.coords() {
            if c <= 4 {
                let (s, l) = twist.image(c as u8);
                sign *= s as i64;
                labels.push(l);
                mask |= 1 << (l - 1);
            } else {
                mask |= 1 << (c - 1);
            }
        }
        (sign * permutation_sign(&labels), Cell(mask))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", coords.join(","))
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Boundary of a cell as an integer combination of cells.
pub fn boundary(cell: Cell, twist: &TwistMap) -> BTreeMap<Cell, i64> {
    let mut out = BTreeMap::new();
    for (pos, s) in cell.coords().into_iter().enumerate() {
        // pos is 0-based, so (−1)^{idx+1} with idx = pos + 1 is (−1)^pos
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        let face0 = cell.without(s);
        let (twist_sign, face1) = if s <= 4 {
            (1, face0)
        } else {
            face0.twisted(twist)
        };
        *out.entry(face1).or_insert(0) += sign * twist_sign;
        *out.entry(face0).or_insert(0) -= sign;
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self {
            rows: rows.len(),
            cols,
            data: rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i][j] += &self.data[i][k] * &rhs.data[k][j];
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn triples(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out.sort_by_key(|(i, j, _)| (*j, *i));
        out
    }

    fn to_rational(&self) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.rows, self.cols);
        for (i, j, v) in self.triples() {
            m.add_to(i, j, crate::Rational::from_integer(v));
        }
        m
    }
}

/// Nonzero invariant factors `d_1 | d_2 | …` of an integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.data.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the trailing block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|(i, j)| !a[*i][*j].is_zero())
            .min_by(|x, y| a[x.0][x.1].abs().cmp(&a[y.0][y.1].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    let (top, rest) = a.split_at_mut(i);
                    for (x, p) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                        *x -= &q * p;
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // move the smallest remainder in row/column t onto the diagonal
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.1 == t {
                    a.swap(t, best.0);
                } else {
                    for row in a.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
                continue;
            }
            // enforce divisibility of the trailing block by the pivot
            let offender = (t + 1..rows)
                .find(|i| (t + 1..cols).any(|j| !(&a[*i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    let (top, rest) = a.split_at_mut(i);
                    for (x, v) in top[t][t..].iter_mut().zip(&rest[0][t..]) {
                        *x += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // normalise to a divisibility chain
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

/// The cellular chain complex `C_*(M^7_f; Z)`.
#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    twist: TwistMap,
    cells: Vec<Vec<Cell>>,
    /// `boundaries[k]` is `∂_k: C_k → C_{k-1}`; `boundaries[0]` is the empty map.
    boundaries: Vec<IntMatrix>,
}

/// Builds the complex for a twist; fails if `∂∘∂ ≠ 0`.
pub fn build_complex(twist: &TwistMap) -> Result<ChainComplexZ> {
    let cells: Vec<Vec<Cell>> = (0..=DIM).map(Cell::all_of_dimension).collect();
    let mut boundaries = vec![IntMatrix::zeros(0, 1)];
    for k in 1..=DIM {
        let index: BTreeMap<Cell, usize> =
            cells[k - 1].iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut m = IntMatrix::zeros(cells[k - 1].len(), cells[k].len());
        for (j, cell) in cells[k].iter().enumerate() {
            for (face, v) in boundary(*cell, twist) {
                m.data[index[&face]][j] = BigInt::from(v);
            }
        }
        boundaries.push(m);
    }
    for k in 2..=DIM {
        let product = boundaries[k - 1].mul(&boundaries[k]);
        if let Some((_, j, _)) = product.triples().first() {
            return Err(Error::BoundarySquareNonzero(cells[k][*j].to_string()));
        }
    }
    Ok(ChainComplexZ {
        twist: *twist,
        cells,
        boundaries,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coefficients {
    Integers,
    Rationals,
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::Rationals => write!(f, "Q"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeResult {
    pub degree: usize,
    pub cells: usize,
    /// Rank of `∂_k`.
    pub boundary_rank: usize,
    pub betti: usize,
    /// Invariant factors greater than one (integral coefficients only).
    pub torsion: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub coefficients: Coefficients,
    pub degrees: Vec<DegreeResult>,
}

impl HomologyResult {
    pub fn betti(&self) -> BettiSequence {
        BettiSequence::new(self.degrees.iter().map(|d| d.betti as u64).collect())
    }
}

impl ChainComplexZ {
    pub fn twist(&self) -> &TwistMap {
        &self.twist
    }

    pub fn cells(&self, k: usize) -> &[Cell] {
        &self.cells[k]
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// `∂_k` with rows indexed by `(k-1)`-cells and columns by `k`-cells.
    pub fn boundary_matrix(&self, k: usize) -> &IntMatrix {
        &self.boundaries[k]
    }

    /// Coefficient of `face` in `∂cell`.
    pub fn degree(&self, cell: Cell, face: Cell) -> i64 {
        boundary(cell, &self.twist).get(&face).copied().unwrap_or(0)
    }

    pub fn homology(&self, coefficients: Coefficients) -> HomologyResult {
        let ranks_and_factors: Vec<(usize, Vec<BigInt>)> = (0..=DIM + 1)
            .map(|k| {
                if k == 0 || k > DIM {
                    return (0, Vec::new());
                }
                match coefficients {
                    Coefficients::Integers => {
                        let factors = smith_normal_form(&self.boundaries[k]);
                        (factors.len(), factors)
                    }
                    Coefficients::Rationals => (self.boundaries[k].to_rational().rank(), Vec::new()),
                }
            })
            .collect();
        let degrees = (0..=DIM)
            .map(|k| {
                let (rank_k, _) = &ranks_and_factors[k];
                let (rank_next, factors_next) = &ranks_and_factors[k + 1];
                DegreeResult {
                    degree: k,
                    cells: self.cells[k].len(),
                    boundary_rank: *rank_k,
                    betti: self.cells[k].len() - rank_k - rank_next,
                    torsion: factors_next.iter().filter(|d| !d.is_one()).cloned().collect(),
                }
            })
            .collect();
        HomologyResult {
            coefficients,
            degrees,
        }
    }

    /// Boundary matrices as `degree row col value` lines.
    pub fn export_triples(&self) -> String {
        let mut out = String::new();
        for k in 1..=DIM {
            for (i, j, v) in self.boundaries[k].triples() {
                out.push_str(&format!("{k} {i} {j} {v}\n"));
            }
        }
        out
    }

    pub fn export_json(&self) -> serde_json::Value {
        let matrices: Vec<serde_json::Value> = (1..=DIM)
            .map(|k| {
                let m = &self.boundaries[k];
                serde_json::json!({
                    "degree": k,
                    "rows": m.rows,
                    "cols": m.cols,
                    "row_cells": self.cells[k - 1].iter().map(|c| c.coords()).collect::<Vec<_>>(),
                    "col_cells": self.cells[k].iter().map(|c| c.coords()).collect::<Vec<_>>(),
                    "entries": m.triples().iter()
                        .map(|(i, j, v)| (*i, *j, v.to_i64().unwrap_or(0)))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "boundaries": matrices })
    }
}

/// Hamilton product of coordinate vectors in the basis `1, i, j, k`.
fn hamilton(p: [i64; 4], q: [i64; 4]) -> [i64; 4] {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

/// Dimensions of the subspaces of `Λ^k(R^4)` fixed by `q ↦ q·i^{-1}`.
///
/// Built from the Hamilton product alone; it does not consult [`TwistMap`].
pub fn invariant_cohomology_oracle() -> HorizontalBettiSequence {
    let unit_inverse = [0, -1, 0, 0];
    let action: Vec<Multivector> = (0..4)
        .map(|c| {
            let mut e = [0i64; 4];
            e[c] = 1;
            let image = hamilton(e, unit_inverse);
            let mut form = Multivector::zero();
            for (r, v) in image.iter().enumerate() {
                form.add_term(Blade::single(r), rat(*v));
            }
            form
        })
        .collect();
    let values = (0..=4)
        .map(|k| {
            let blades = Blade::all_of_degree(4, k);
            let position: BTreeMap<Blade, usize> =
                blades.iter().enumerate().map(|(i, b)| (*b, i)).collect();
            let mut m = SparseMatrix::zeros(blades.len(), blades.len());
            for (j, b) in blades.iter().enumerate() {
                let image = b
                    .indices()
                    .fold(Multivector::one(), |acc, i| acc.wedge(&action[i]));
                for (blade, v) in image.terms() {
                    m.add_to(position[blade], j, v.clone());
                }
                m.add_to(j, j, rat(-1));
            }
            (blades.len() - m.rank()) as u64
        })
        .collect();
    HorizontalBettiSequence::new(1, values).expect("five entries")
}

/// Comparison of the cellular Betti numbers with the oracle prediction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub cellular: Vec<u64>,
    pub oracle_horizontal: Vec<u64>,
    pub oracle: Vec<u64>,
    pub first_difference: Option<usize>,
    pub b2_not_torus: bool,
    pub b2_not_k3_product: bool,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.first_difference.is_none() && self.b2_not_torus && self.b2_not_k3_product
    }
}

pub fn cross_check(homology: &HomologyResult) -> CrossCheck {
    let cellular = homology.betti().values().to_vec();
    let horizontal = invariant_cohomology_oracle();
    let oracle = betti_from_horizontal(&horizontal).values().to_vec();
    let first_difference = (0..cellular.len().max(oracle.len()))
        .find(|k| cellular.get(*k) != oracle.get(*k));
    let b2 = cellular.get(2).copied().unwrap_or(0);
    CrossCheck {
        b2_not_torus: b2 != crate::betti::torus_series().coefficient(2) as u64,
        b2_not_k3_product: b2 != crate::betti::k3_product_series().coefficient(2) as u64,
        cellular,
        oracle_horizontal: horizontal.values().to_vec(),
        oracle,
        first_difference,
    }
}

/// Verdict on whether the cohomology could be that of `T^3 ×` a hyper-Kähler surface.
pub fn verdict(check: &CrossCheck) -> &'static str {
    if check.b2_not_torus && check.b2_not_k3_product {
        "not a T^3 x hyper-Kahler product cohomology"
    } else {
        "compatible with a T^3 x hyper-Kahler product"
    }
}

/// Every consistency check of the example, plus a serialisable summary.
pub fn homology_reports(twist: &TwistMap, coefficients: Coefficients) -> (Vec<IdentityReport>, Option<HomologySummary>) {
    let mut reports = Vec::new();
    reports.push(IdentityReport::from_outcome(
        "twist_order",
        "the twist has order 4 and determinant +-1",
        (twist.order() != 4 || twist.determinant().abs() != 1)
            .then(|| format!("order {}, det {}", twist.order(), twist.determinant())),
    ));
    let complex = match build_complex(twist) {
        Ok(c) => c,
        Err(e) => {
            reports.push(IdentityReport::fail("boundary_squared_zero", "d o d = 0", e.to_string()));
            return (reports, None);
        }
    };
    reports.push(IdentityReport::pass("boundary_squared_zero", "d o d = 0"));

    let counts = complex.cell_counts();
    let expected: Vec<usize> = (0..=DIM as u64).map(|k| binomial(DIM as u64, k) as usize).collect();
    reports.push(IdentityReport::from_outcome(
        "cell_counts",
        "C_k has C(7,k) generators",
        (counts != expected).then(|| format!("{counts:?}")),
    ));

    let c35 = Cell::new(&[3, 5]).expect("valid");
    let c3 = Cell::new(&[3]).expect("valid");
    let deg = complex.degree(c35, c3);
    reports.push(IdentityReport::from_outcome(
        "attaching_degree_35_3",
        "degree({3,5},{3}) = 1",
        (deg != 1).then(|| format!("degree {deg}")),
    ));

    let rational = complex.homology(Coefficients::Rationals);
    let integral = complex.homology(Coefficients::Integers);
    let b = rational.betti();
    reports.push(IdentityReport::from_outcome(
        "smith_vs_gauss_ranks",
        "Betti numbers from the Smith normal form equal those from rational elimination",
        (integral.betti() != b).then(|| format!("{:?} vs {:?}", integral.betti().values(), b.values())),
    ));
    reports.push(IdentityReport::from_outcome(
        "betti_connected",
        "b_0 = 1",
        (b.get(0) != 1).then(|| format!("b_0 = {}", b.get(0))),
    ));
    reports.push(IdentityReport::from_outcome(
        "betti_poincare_duality",
        "b_k = b_{7-k} and Euler characteristic 0",
        (!b.is_palindromic() || b.euler_characteristic() != 0)
            .then(|| format!("{:?}", b.values())),
    ));
    reports.push(IdentityReport::from_outcome(
        "b2_below_21",
        "b_2 < 21",
        (b.get(2) >= 21).then(|| format!("b_2 = {}", b.get(2))),
    ));
    let check = cross_check(&rational);
    reports.push(IdentityReport::from_outcome(
        "homology_cross_check",
        "cellular Betti numbers = (1,3,3,1) convolution of the invariant cohomology of Lambda*(R^4), and b_2 is neither 21 nor 25",
        (!check.passed()).then(|| match check.first_difference {
            Some(k) => format!(
                "degree {k}: cellular {} vs oracle {}",
                check.cellular.get(k).copied().unwrap_or(0),
                check.oracle.get(k).copied().unwrap_or(0)
            ),
            None => format!("b_2 = {}", b.get(2)),
        }),
    ));
    reports.push(
        check_divisibility(&b).to_report("cellular_divisibility", "b_(k-1) + b_k = 0 mod 4 for odd k"),
    );
    reports.push(check_bounds(&b, 1).to_report("cellular_bounds", "b_k >= C(k+2,2) for k <= 3"));

    let shown = match coefficients {
        Coefficients::Integers => &integral,
        Coefficients::Rationals => &rational,
    };
    let summary = HomologySummary {
        coefficients: coefficients.to_string(),
        degrees: shown
            .degrees
            .iter()
            .map(|d| DegreeHomology {
                degree: d.degree,
                cells: d.cells,
                boundary_rank: d.boundary_rank,
                betti: d.betti,
                torsion: d.torsion.iter().map(ToString::to_string).collect(),
            })
            .collect(),
        betti: shown.degrees.iter().map(|d| d.betti).collect(),
        oracle_horizontal: check.oracle_horizontal.clone(),
        oracle_betti: check.oracle.clone(),
        euler_characteristic: b.euler_characteristic(),
        verdict: verdict(&check).to_string(),
    };
    (reports, Some(summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(c: &[usize]) -> Cell {
        Cell::new(c).unwrap()
    }

    #[test]
    fn twist_is_right_multiplication_by_minus_i() {
        let t = TwistMap::standard();
        assert_eq!(t.image(1), (-1, 2));
        assert_eq!(t.image(2), (1, 1));
        assert_eq!(t.image(3), (1, 4));
        assert_eq!(t.image(4), (-1, 3));
        assert_eq!(t.order(), 4);
        assert_eq!(t.determinant().abs(), 1);
        assert!(TwistMap::new([(1, 1), (1, 1), (1, 3), (1, 4)]).is_err());
    }

    #[test]
    fn label_table_matches_hamilton_product() {
        for a in 1..=4u8 {
            for b in 1..=4u8 {
                let mut p = [0; 4];
                p[a as usize - 1] = 1;
                let mut q = [0; 4];
                q[b as usize - 1] = 1;
                let (s, l) = quaternion_product(a, b);
                let mut expected = [0; 4];
                expected[l as usize - 1] = s as i64;
                assert_eq!(hamilton(p, q), expected);
            }
        }
    }

    #[test]
    fn boundary_examples() {
        let t = TwistMap::standard();
        assert!(boundary(cell(&[5]), &t).is_empty());
        assert!(boundary(cell(&[1, 2]), &t).is_empty());
        assert!(boundary(cell(&[2]), &t).is_empty());
        let b = boundary(cell(&[3, 5]), &t);
        assert_eq!(b.get(&cell(&[3])), Some(&1));
        assert_eq!(b.get(&cell(&[4])), Some(&-1));
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn complex_and_degrees() {
        let c = build_complex(&TwistMap::standard()).unwrap();
        assert_eq!(c.cell_counts(), vec![1, 7, 21, 35, 35, 21, 7, 1]);
        assert_eq!(c.degree(cell(&[3, 5]), cell(&[3])), 1);
        assert_eq!(c.degree(cell(&[3, 5]), cell(&[4])), -1);
        assert_eq!(c.degree(cell(&[1, 2]), cell(&[1])), 0);
    }

    #[test]
    fn snf_small() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&m), vec![BigInt::from(1), BigInt::from(6)]);
        assert!(smith_normal_form(&IntMatrix::zeros(3, 3)).is_empty());
        let m = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let d: Vec<i64> = smith_normal_form(&m).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(d, vec![2, 6, 12]);
    }

    #[test]
    fn homology_of_m7f() {
        let c = build_complex(&TwistMap::standard()).unwrap();
        let q = c.homology(Coefficients::Rationals);
        let z = c.homology(Coefficients::Integers);
        assert_eq!(q.betti().values(), &[1, 3, 7, 13, 13, 7, 3, 1]);
        assert_eq!(z.betti(), q.betti());
        assert!(z.degrees[1].torsion.iter().all(|d| d == &BigInt::from(2)));
    }

    #[test]
    fn oracle_values() {
        assert_eq!(invariant_cohomology_oracle().values(), &[1, 0, 4, 0, 1]);
    }

    #[test]
    fn cross_check_passes_and_detects_flip() {
        let (reports, summary) = homology_reports(&TwistMap::standard(), Coefficients::Integers);
        assert!(reports.iter().all(|r| r.passed), "{reports:?}");
        assert_eq!(summary.unwrap().betti, vec![1, 3, 7, 13, 13, 7, 3, 1]);
        let flipped = TwistMap::standard().with_sign_flip(3);
        let (reports, _) = homology_reports(&flipped, Coefficients::Rationals);
        assert!(reports.iter().any(|r| !r.passed && r.witness.is_some()));
    }

    #[test]
    fn export_formats() {
        let c = build_complex(&TwistMap::standard()).unwrap();
        let text = c.export_triples();
        assert!(text.lines().all(|l| l.split(' ').count() == 4));
        let json = c.export_json();
        assert_eq!(json["boundaries"].as_array().unwrap().len(), 7);
    }
}
