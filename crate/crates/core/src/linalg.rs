//! Exact sparse matrices and incremental span computations over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

/// Column-major sparse matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            cols: vec![BTreeMap::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.cols[i].insert(i, Rational::one());
        }
        m
    }

    pub fn from_columns(nrows: usize, cols: Vec<BTreeMap<usize, Rational>>) -> Self {
        let mut m = Self {
            nrows,
            ncols: cols.len(),
            cols,
        };
        for col in &mut m.cols {
            col.retain(|_, v| !v.is_zero());
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, j: usize) -> &BTreeMap<usize, Rational> {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.cols[j].get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: Rational) {
        let col = &mut self.cols[j];
        let entry = col.entry(i).or_insert_with(Rational::zero);
        *entry += value;
        if entry.is_zero() {
            col.remove(&i);
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    /// Entries as `(row, col, value)` in column-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn apply(&self, x: &BTreeMap<usize, Rational>) -> BTreeMap<usize, Rational> {
        let mut out = BTreeMap::new();
        for (j, xj) in x {
            for (i, a) in &self.cols[*j] {
                *out.entry(*i).or_insert_with(Rational::zero) += a * xj;
            }
        }
        out.retain(|_, v: &mut Rational| !v.is_zero());
        out
    }

    /// `self * rhs`; panics on a shape mismatch, which is a programming error.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows, "matrix shapes do not compose");
        let cols = rhs.cols.iter().map(|col| self.apply(col)).collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: rhs.ncols,
            cols,
        }
    }

    fn zip(&self, rhs: &SparseMatrix, sign: &Rational) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        let mut out = self.clone();
        for (i, j, v) in rhs.triples() {
            out.add_to(i, j, v * sign);
        }
        out
    }

    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.zip(rhs, &Rational::one())
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.zip(rhs, &-Rational::one())
    }

    pub fn scale(&self, factor: &Rational) -> SparseMatrix {
        if factor.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(i, v)| (*i, v * factor)).collect())
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            cols,
        }
    }

    /// First `(row, col)` where the two matrices differ, scanning columns in order.
    pub fn first_difference(&self, rhs: &SparseMatrix) -> Option<(usize, usize)> {
        if (self.nrows, self.ncols) != (rhs.nrows, rhs.ncols) {
            return Some((0, 0));
        }
        for j in 0..self.ncols {
            if self.cols[j] != rhs.cols[j] {
                let a = &self.cols[j];
                let b = &rhs.cols[j];
                let row = a
                    .keys()
                    .chain(b.keys())
                    .filter(|i| a.get(i) != b.get(i))
                    .min()
                    .copied()
                    .unwrap_or(0);
                return Some((row, j));
            }
        }
        None
    }

    /// Exact rank by Gaussian elimination on the columns.
    pub fn rank(&self) -> usize {
        let mut span = SpanSolver::new();
        for col in &self.cols {
            span.insert(col.clone());
        }
        span.rank()
    }
}

#[derive(Clone, Debug)]
struct ReducedRow<K> {
    pivot: K,
    vector: BTreeMap<K, Rational>,
    combo: BTreeMap<usize, Rational>,
}

/// Incremental row echelon form over arbitrary ordered coordinates.
///
/// Every accepted (independent) vector receives a generator index; `solve`
/// expresses a vector in terms of those generators.
#[derive(Clone, Debug)]
pub struct SpanSolver<K: Ord + Clone> {
    rows: Vec<ReducedRow<K>>,
    pivots: BTreeMap<K, usize>,
    generators: usize,
}

impl<K: Ord + Clone> Default for SpanSolver<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> SpanSolver<K> {
    pub fn new() -> Self {
        Self {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            generators: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the remainder and the
    /// combination of generators that was subtracted.
    fn reduce(&self, mut v: BTreeMap<K, Rational>) -> (BTreeMap<K, Rational>, BTreeMap<usize, Rational>) {
        let mut combo: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut cursor: Option<K> = None;
        loop {
            // Stored rows only carry keys above their pivot, so a single ascending sweep suffices.
            let next = v
                .iter()
                .filter(|(k, _)| cursor.as_ref().is_none_or(|c| *k > c))
                .find(|(k, _)| self.pivots.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            let Some((key, coeff)) = next else { break };
            let row = &self.rows[self.pivots[&key]];
            for (k, x) in &row.vector {
                let entry = v.entry(k.clone()).or_insert_with(Rational::zero);
                *entry -= x * &coeff;
                if entry.is_zero() {
                    v.remove(k);
                }
            }
            for (g, x) in &row.combo {
                let entry = combo.entry(*g).or_insert_with(Rational::zero);
                *entry += x * &coeff;
                if entry.is_zero() {
                    combo.remove(g);
                }
            }
            cursor = Some(key);
        }
        (v, combo)
    }

    pub fn is_independent(&self, v: &BTreeMap<K, Rational>) -> bool {
        !self.reduce(v.clone()).0.is_empty()
    }

    /// Adds `v`; returns its generator index when it enlarges the span.
    pub fn insert(&mut self, v: BTreeMap<K, Rational>) -> Option<usize> {
        let (rest, combo) = self.reduce(v);
        let (pivot, lead) = match rest.iter().next() {
            Some((k, c)) => (k.clone(), c.clone()),
            None => return None,
        };
        let generator = self.generators;
        self.generators += 1;
        let inv = Rational::one() / lead;
        let vector = rest.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        // rest = v - Σ combo_g gen_g, so the normalised row is inv·(gen_new - Σ combo_g gen_g).
        let mut row_combo: BTreeMap<usize, Rational> =
            combo.into_iter().map(|(g, c)| (g, -c * &inv)).collect();
        row_combo.insert(generator, inv);
        self.pivots.insert(pivot.clone(), self.rows.len());
        self.rows.push(ReducedRow {
            pivot,
            vector,
            combo: row_combo,
        });
        Some(generator)
    }

    /// Coefficients `c_g` with `v = Σ c_g gen_g`, or `None` outside the span.
    pub fn solve(&self, v: &BTreeMap<K, Rational>) -> Option<BTreeMap<usize, Rational>> {
        let (rest, combo) = self.reduce(v.clone());
        if rest.is_empty() {
            Some(combo)
        } else {
            None
        }
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.iter().map(|r| &r.pivot)
    }
}

/// Rank of a family of sparse vectors.
pub fn rank_of<K: Ord + Clone>(vectors: impl IntoIterator<Item = BTreeMap<K, Rational>>) -> usize {
    let mut span = SpanSolver::new();
    for v in vectors {
        span.insert(v);
    }
    span.rank()
}

/// Checks that a slice has the expected length.
pub fn expect_len<T>(values: &[T], expected: usize) -> Result<()> {
    if values.len() == expected {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected,
            got: values.len(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn vec_of(entries: &[(usize, i64)]) -> BTreeMap<usize, Rational> {
        entries.iter().map(|(k, v)| (*k, rat(*v))).collect()
    }

    #[test]
    fn multiply_and_identity() {
        let mut a = SparseMatrix::zeros(2, 2);
        a.add_to(0, 1, rat(1));
        a.add_to(1, 0, rat(-1));
        let sq = a.mul(&a);
        assert_eq!(sq, SparseMatrix::identity(2).scale(&rat(-1)));
        assert_eq!(a.mul(&SparseMatrix::identity(2)), a);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.first_difference(&SparseMatrix::zeros(2, 2)), Some((1, 0)));
    }

    #[test]
    fn rank_of_dependent_columns() {
        let m = SparseMatrix::from_columns(
            3,
            vec![vec_of(&[(0, 1), (1, 2)]), vec_of(&[(0, 2), (1, 4)]), vec_of(&[(2, 5)])],
        );
        assert_eq!(m.rank(), 2);
        assert_eq!(SparseMatrix::zeros(4, 4).rank(), 0);
    }

    #[test]
    fn span_solver_recovers_coefficients() {
        let mut span = SpanSolver::new();
        let a = vec_of(&[(0, 1), (1, 1)]);
        let b = vec_of(&[(1, 1), (2, 3)]);
        assert_eq!(span.insert(a.clone()), Some(0));
        assert_eq!(span.insert(b.clone()), Some(1));
        let mut target = BTreeMap::new();
        for (k, v) in &a {
            *target.entry(*k).or_insert_with(Rational::zero) += v * rat(2);
        }
        for (k, v) in &b {
            *target.entry(*k).or_insert_with(Rational::zero) -= v * rat(5);
        }
        target.retain(|_, v| !v.is_zero());
        assert_eq!(span.insert(target.clone()), None);
        let coeffs = span.solve(&target).unwrap();
        assert_eq!(coeffs.get(&0), Some(&rat(2)));
        assert_eq!(coeffs.get(&1), Some(&rat(-5)));
        assert!(span.solve(&vec_of(&[(3, 1)])).is_none());
    }
}
