//! Graded operators on the blade basis and the exhaustive identity suite.
//!
//! Every operator is materialised as one exact sparse matrix per source
//! degree. Two bases are used: the full exterior algebra on all `4n + 3`
//! coframe indices, and the η-free ("000") sector on the first `4n`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::contact::{blade_label, Axis, ContactModel, FrameLabel};
use crate::exterior::{Blade, KVector, ModelDims, Multivector};
use crate::linalg::SparseMatrix;
use crate::report::{CheckBuilder, IdentityReport};
use crate::{binomial, rat, Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// All blades on the `4n + 3` coframe indices.
    Full,
    /// η-free blades, i.e. the 000 sector.
    Horizontal,
}

/// Blades grouped by degree, each degree in lexicographic order.
#[derive(Debug)]
pub struct BladeBasis {
    kind: BasisKind,
    dims: ModelDims,
    by_degree: Vec<Vec<Blade>>,
    position: HashMap<Blade, usize>,
}

impl BladeBasis {
    pub fn new(dims: ModelDims, kind: BasisKind) -> Self {
        let width = match kind {
            BasisKind::Full => dims.dim(),
            BasisKind::Horizontal => dims.horizontal_dim(),
        };
        let by_degree: Vec<Vec<Blade>> = (0..=width)
            .map(|k| Blade::all_of_degree(width, k))
            .collect();
        let position = by_degree
            .iter()
            .flat_map(|blades| blades.iter().enumerate().map(|(i, b)| (*b, i)))
            .collect();
        Self {
            kind,
            dims,
            by_degree,
            position,
        }
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn dims(&self) -> ModelDims {
        self.dims
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn len(&self, k: usize) -> usize {
        self.by_degree.get(k).map_or(0, Vec::len)
    }

    fn len_at(&self, k: isize) -> usize {
        usize::try_from(k).map_or(0, |k| self.len(k))
    }

    pub fn total_len(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total_len() == 0
    }

    pub fn blades(&self, k: usize) -> &[Blade] {
        self.by_degree.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = Blade> + '_ {
        self.by_degree.iter().flatten().copied()
    }

    /// Position of `blade` within its degree.
    pub fn position(&self, blade: &Blade) -> Option<usize> {
        self.position.get(blade).copied()
    }
}

/// A degree-shifting linear operator stored as one matrix per source degree.
#[derive(Clone, Debug)]
pub struct GradedOperator {
    name: String,
    shift: isize,
    basis: Arc<BladeBasis>,
    blocks: Vec<SparseMatrix>,
}

impl GradedOperator {
    /// Builds an operator from its action on basis blades.
    pub fn from_blade_fn<F>(
        name: impl Into<String>,
        basis: &Arc<BladeBasis>,
        shift: isize,
        f: F,
    ) -> Result<Self>
    where
        F: Fn(Blade) -> Multivector + Sync,
    {
        let mut blocks = Vec::with_capacity(basis.max_degree() + 1);
        for k in 0..=basis.max_degree() {
            let target = k as isize + shift;
            let cols = basis
                .blades(k)
                .par_iter()
                .map(|b| column_of(basis, target, &f(*b)))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(SparseMatrix::from_columns(basis.len_at(target), cols));
        }
        Ok(Self {
            name: name.into(),
            shift,
            basis: Arc::clone(basis),
            blocks,
        })
    }

    /// Scalar `f(k)` on degree `k`.
    pub fn diagonal(
        name: impl Into<String>,
        basis: &Arc<BladeBasis>,
        f: impl Fn(usize) -> Rational,
    ) -> Self {
        let blocks = (0..=basis.max_degree())
            .map(|k| SparseMatrix::identity(basis.len(k)).scale(&f(k)))
            .collect();
        Self {
            name: name.into(),
            shift: 0,
            basis: Arc::clone(basis),
            blocks,
        }
    }

    pub fn identity(basis: &Arc<BladeBasis>) -> Self {
        Self::diagonal("id", basis, |_| rat(1))
    }

    pub fn zero(basis: &Arc<BladeBasis>, shift: isize) -> Self {
        let blocks = (0..=basis.max_degree())
            .map(|k| SparseMatrix::zeros(basis.len_at(k as isize + shift), basis.len(k)))
            .collect();
        Self {
            name: "0".into(),
            shift,
            basis: Arc::clone(basis),
            blocks,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn shift(&self) -> isize {
        self.shift
    }

    pub fn basis(&self) -> &Arc<BladeBasis> {
        &self.basis
    }

    /// Matrix from degree `k` to degree `k + shift`.
    pub fn block(&self, k: usize) -> &SparseMatrix {
        &self.blocks[k]
    }

    fn same_space(&self, rhs: &GradedOperator) -> Result<()> {
        if self.basis.kind == rhs.basis.kind && self.basis.dims == rhs.basis.dims {
            Ok(())
        } else {
            Err(Error::IncompatibleOperators {
                left: self.name.clone(),
                right: rhs.name.clone(),
            })
        }
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &GradedOperator) -> Result<GradedOperator> {
        self.same_space(rhs)?;
        let shift = self.shift + rhs.shift;
        let max = self.basis.max_degree() as isize;
        let blocks = (0..=self.basis.max_degree())
            .map(|k| {
                let mid = k as isize + rhs.shift;
                if (0..=max).contains(&mid) {
                    self.blocks[mid as usize].mul(&rhs.blocks[k])
                } else {
                    SparseMatrix::zeros(self.basis.len_at(k as isize + shift), self.basis.len(k))
                }
            })
            .collect();
        Ok(GradedOperator {
            name: format!("{}{}", self.name, rhs.name),
            shift,
            basis: Arc::clone(&self.basis),
            blocks,
        })
    }

    fn combine(&self, rhs: &GradedOperator, subtract: bool) -> Result<GradedOperator> {
        self.same_space(rhs)?;
        if self.shift != rhs.shift {
            return Err(Error::IncompatibleOperators {
                left: self.name.clone(),
                right: rhs.name.clone(),
            });
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&rhs.blocks)
            .map(|(a, b)| if subtract { a.sub(b) } else { a.add(b) })
            .collect();
        let op = if subtract { "-" } else { "+" };
        Ok(GradedOperator {
            name: format!("({} {op} {})", self.name, rhs.name),
            shift: self.shift,
            basis: Arc::clone(&self.basis),
            blocks,
        })
    }

    pub fn add(&self, rhs: &GradedOperator) -> Result<GradedOperator> {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &GradedOperator) -> Result<GradedOperator> {
        self.combine(rhs, true)
    }

    pub fn scale(&self, factor: &Rational) -> GradedOperator {
        GradedOperator {
            name: format!("{factor}{}", self.name),
            shift: self.shift,
            basis: Arc::clone(&self.basis),
            blocks: self.blocks.iter().map(|b| b.scale(factor)).collect(),
        }
    }

    /// `[self, rhs] = self∘rhs − rhs∘self`.
    pub fn commutator(&self, rhs: &GradedOperator) -> Result<GradedOperator> {
        let op = self.compose(rhs)?.sub(&rhs.compose(self)?)?;
        Ok(op.with_name(format!("[{}, {}]", self.name, rhs.name)))
    }

    /// `{self, rhs} = self∘rhs + rhs∘self`.
    pub fn anticommutator(&self, rhs: &GradedOperator) -> Result<GradedOperator> {
        let op = self.compose(rhs)?.add(&rhs.compose(self)?)?;
        Ok(op.with_name(format!("{{{}, {}}}", self.name, rhs.name)))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(SparseMatrix::is_zero)
    }

    /// Applies the operator to a multivector supported on the basis.
    pub fn apply(&self, form: &Multivector) -> Result<Multivector> {
        let mut out = Multivector::zero();
        for (blade, c) in form.terms() {
            let k = blade.degree();
            let pos = self
                .basis
                .position(blade)
                .ok_or_else(|| Error::OutsideBasis(blade_label(self.basis.dims, *blade)))?;
            let targets = self.basis.blades((k as isize + self.shift).max(0) as usize);
            for (row, v) in self.blocks[k].column(pos) {
                out.add_term(targets[*row], v * c);
            }
        }
        Ok(out)
    }

    /// First basis blade on which the two operators differ, as a readable witness.
    pub fn difference_witness(&self, rhs: &GradedOperator) -> Option<String> {
        if self.shift != rhs.shift || self.basis.kind != rhs.basis.kind {
            return Some(format!(
                "shape mismatch: {} (shift {}) vs {} (shift {})",
                self.name, self.shift, rhs.name, rhs.shift
            ));
        }
        let dims = self.basis.dims;
        for (k, (a, b)) in self.blocks.iter().zip(&rhs.blocks).enumerate() {
            if let Some((row, col)) = a.first_difference(b) {
                let input = blade_label(dims, self.basis.blades(k)[col]);
                let target = (k as isize + self.shift) as usize;
                let output = self
                    .basis
                    .blades(target)
                    .get(row)
                    .map_or_else(|| "?".to_string(), |b| blade_label(dims, *b));
                return Some(format!(
                    "degree {k}, input {input}, output component {output}: {} vs {}",
                    a.get(row, col),
                    b.get(row, col)
                ));
            }
        }
        None
    }

    /// Entries keyed by `(degree, row, column)`, for span computations.
    pub fn flatten(&self) -> BTreeMap<(usize, usize, usize), Rational> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(k, m)| m.triples().map(move |(i, j, v)| ((k, i, j), v.clone())))
            .collect()
    }
}

fn column_of(
    basis: &BladeBasis,
    target: isize,
    image: &Multivector,
) -> Result<BTreeMap<usize, Rational>> {
    let mut col = BTreeMap::new();
    for (blade, c) in image.terms() {
        let pos = (blade.degree() as isize == target)
            .then(|| basis.position(blade))
            .flatten()
            .ok_or_else(|| Error::OutsideBasis(blade_label(basis.dims, *blade)))?;
        col.insert(pos, c.clone());
    }
    Ok(col)
}

fn slot(a: Axis) -> usize {
    a.get() as usize - 1
}

/// The operators of the flat model, built from a [`ContactModel`].
#[derive(Debug)]
pub struct OperatorAlgebra {
    model: ContactModel,
    full: Arc<BladeBasis>,
    horizontal: Arc<BladeBasis>,
    xi_forms: Vec<Multivector>,
    zeta: Vec<Multivector>,
    phi_zeta: Vec<Vec<Multivector>>,
    frame_x: Vec<KVector>,
    frame_phi_x: Vec<Vec<KVector>>,
}

#[allow(non_snake_case)]
impl OperatorAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self::with_model(ContactModel::new(n)?))
    }

    pub fn with_model(model: ContactModel) -> Self {
        let dims = model.dims();
        let n = dims.n();
        let xi_forms = Axis::ALL.iter().map(|a| model.xi_form(*a)).collect();
        let zeta = (1..=n).map(|s| model.zeta(s).unwrap()).collect();
        let phi_zeta = Axis::ALL
            .iter()
            .map(|a| (1..=n).map(|s| model.phi_zeta(*a, s).unwrap()).collect())
            .collect();
        let frame_x = (1..=n).map(|s| model.frame_x(s).unwrap()).collect();
        let frame_phi_x = Axis::ALL
            .iter()
            .map(|a| (1..=n).map(|s| model.frame_phi_x(*a, s).unwrap()).collect())
            .collect();
        Self {
            full: Arc::new(BladeBasis::new(dims, BasisKind::Full)),
            horizontal: Arc::new(BladeBasis::new(dims, BasisKind::Horizontal)),
            model,
            xi_forms,
            zeta,
            phi_zeta,
            frame_x,
            frame_phi_x,
        }
    }

    pub fn model(&self) -> &ContactModel {
        &self.model
    }

    pub fn dims(&self) -> ModelDims {
        self.model.dims()
    }

    pub fn basis(&self, kind: BasisKind) -> &Arc<BladeBasis> {
        match kind {
            BasisKind::Full => &self.full,
            BasisKind::Horizontal => &self.horizontal,
        }
    }

    /// The η-free blades of degree `k`.
    pub fn sector_000(&self, k: usize) -> Result<Vec<Blade>> {
        let max = self.dims().horizontal_dim();
        if k > max {
            return Err(Error::DegreeOutOfRange { degree: k, max });
        }
        Ok(self.horizontal.blades(k).to_vec())
    }

    pub fn star(&self, form: &Multivector) -> Result<Multivector> {
        form.hodge_star(self.dims())
    }

    fn contract(&self, v: &KVector, form: &Multivector) -> Multivector {
        form.interior_vector(v).expect("frame vectors have degree one")
    }

    fn l_image(&self, a: Axis, b: Blade) -> Multivector {
        self.model.eta(a).wedge(&Multivector::from_blade(b))
    }

    fn lambda_image(&self, a: Axis, b: Blade) -> Multivector {
        self.contract(&self.model.xi(a), &Multivector::from_blade(b))
    }

    fn big_l_image(&self, a: Axis, b: Blade) -> Multivector {
        self.xi_forms[slot(a)].wedge(&Multivector::from_blade(b))
    }

    /// `Σ_s (i_{X_s} i_{φ_αX_s} + i_{φ_βX_s} i_{φ_γX_s})`.
    fn big_lambda_image(&self, a: Axis, b: Blade) -> Multivector {
        let (be, ga) = a.cyclic();
        let form = Multivector::from_blade(b);
        let mut out = Multivector::zero();
        for s in 0..self.dims().n() {
            let inner = self.contract(&self.frame_phi_x[slot(a)][s], &form);
            out += self.contract(&self.frame_x[s], &inner);
            let inner = self.contract(&self.frame_phi_x[slot(ga)][s], &form);
            out += self.contract(&self.frame_phi_x[slot(be)][s], &inner);
        }
        out
    }

    fn big_lambda_star_image(&self, a: Axis, b: Blade) -> Multivector {
        let starred = self.star(&Multivector::from_blade(b)).expect("blade");
        let mut wedged = Multivector::zero();
        for (blade, c) in starred.terms() {
            wedged += self.big_l_image(a, *blade).scale(c);
        }
        self.star(&wedged).expect("homogeneous")
    }

    /// `Σ_s (φ*_αζ_s∧i_{X_s} + ζ_s∧i_{φ_αX_s} + φ*_γζ_s∧i_{φ_βX_s} − φ*_βζ_s∧i_{φ_γX_s})`.
    fn big_k_image(&self, a: Axis, b: Blade) -> Multivector {
        let (be, ga) = a.cyclic();
        let form = Multivector::from_blade(b);
        let mut out = Multivector::zero();
        for s in 0..self.dims().n() {
            out += self.phi_zeta[slot(a)][s].wedge(&self.contract(&self.frame_x[s], &form));
            out += self.zeta[s].wedge(&self.contract(&self.frame_phi_x[slot(a)][s], &form));
            out += self.phi_zeta[slot(ga)][s]
                .wedge(&self.contract(&self.frame_phi_x[slot(be)][s], &form));
            out += -self.phi_zeta[slot(be)][s]
                .wedge(&self.contract(&self.frame_phi_x[slot(ga)][s], &form));
        }
        out
    }

    /// For each `s`, the sum over `s`-element subsets of factors of `b` with
    /// `φ*_α` applied to the chosen factors.
    fn subset_images(&self, a: Axis, b: Blade) -> Vec<Multivector> {
        let factors: Vec<usize> = b.indices().collect();
        let k = factors.len();
        let table = self.model.table();
        let mut out = vec![Multivector::zero(); k + 1];
        for subset in 0u32..(1 << k) {
            let mut product = Multivector::one();
            for (pos, &i) in factors.iter().enumerate() {
                let theta = Multivector::basis(i);
                let factor = if subset & (1 << pos) != 0 {
                    table.apply(a, &theta).expect("one-form")
                } else {
                    theta
                };
                product = product.wedge(&factor);
                if product.is_zero() {
                    break;
                }
            }
            out[subset.count_ones() as usize] += product;
        }
        out
    }

    /// `l_α ω = η_α ∧ ω` on the full algebra.
    pub fn op_l(&self, a: Axis) -> Result<GradedOperator> {
        GradedOperator::from_blade_fn(format!("l{a}"), &self.full, 1, |b| self.l_image(a, b))
    }

    /// `λ_α ω = i_{ξ_α} ω` on the full algebra.
    pub fn op_lambda(&self, a: Axis) -> Result<GradedOperator> {
        GradedOperator::from_blade_fn(format!("lambda{a}"), &self.full, -1, |b| {
            self.lambda_image(a, b)
        })
    }

    /// `e_α = l_α λ_α`.
    pub fn op_e(&self, a: Axis) -> Result<GradedOperator> {
        Ok(self
            .op_l(a)?
            .compose(&self.op_lambda(a)?)?
            .with_name(format!("e{a}")))
    }

    /// `L_α ω = Ξ_α ∧ ω`.
    pub fn op_L(&self, a: Axis, kind: BasisKind) -> Result<GradedOperator> {
        GradedOperator::from_blade_fn(format!("L{a}"), self.basis(kind), 2, |b| {
            self.big_l_image(a, b)
        })
    }

    /// `Λ_α` from the contraction formula.
    pub fn op_Lambda(&self, a: Axis, kind: BasisKind) -> Result<GradedOperator> {
        GradedOperator::from_blade_fn(format!("Lambda{a}"), self.basis(kind), -2, |b| {
            self.big_lambda_image(a, b)
        })
    }

    /// `Λ_α = *L_α*` on the full algebra.
    pub fn op_Lambda_star(&self, a: Axis) -> Result<GradedOperator> {
        GradedOperator::from_blade_fn(format!("*L{a}*"), &self.full, -2, |b| {
            self.big_lambda_star_image(a, b)
        })
    }

    /// `H ω = (2n − k) ω` on the 000 sector.
    pub fn op_H(&self) -> GradedOperator {
        let two_n = 2 * self.dims().n() as i64;
        GradedOperator::diagonal("H", &self.horizontal, |k| rat(two_n - k as i64))
    }

    /// `K_α` from its defining sum of wedge-contraction terms.
    pub fn op_K(&self, a: Axis, kind: BasisKind) -> Result<GradedOperator> {
        GradedOperator::from_blade_fn(format!("K{a}"), self.basis(kind), 0, |b| {
            self.big_k_image(a, b)
        })
    }

    /// `K_α` as the derivation extension of `φ*_α`.
    pub fn op_K_derivation(&self, a: Axis) -> Result<GradedOperator> {
        GradedOperator::from_blade_fn(format!("D{a}"), &self.horizontal, 0, |b| {
            self.subset_images(a, b).get(1).cloned().unwrap_or_default()
        })
    }

    /// `K_{α,0}, …, K_{α,4n}` on the 000 sector; `K_{α,s}` vanishes below degree `s`.
    pub fn op_K_family(&self, a: Axis) -> Result<Vec<GradedOperator>> {
        let basis = &self.horizontal;
        let max = basis.max_degree();
        let mut columns: Vec<Vec<Vec<BTreeMap<usize, Rational>>>> =
            vec![Vec::with_capacity(max + 1); max + 1];
        for k in 0..=max {
            let per_blade = basis
                .blades(k)
                .par_iter()
                .map(|b| {
                    let images = self.subset_images(a, *b);
                    (0..=max)
                        .map(|s| match images.get(s) {
                            Some(img) => column_of(basis, k as isize, img),
                            None => Ok(BTreeMap::new()),
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            for (s, cols_s) in columns.iter_mut().enumerate() {
                cols_s.push(per_blade.iter().map(|c| c[s].clone()).collect());
            }
        }
        Ok(columns
            .into_iter()
            .enumerate()
            .map(|(s, blocks)| GradedOperator {
                name: format!("K{a},{s}"),
                shift: 0,
                basis: Arc::clone(basis),
                blocks: blocks
                    .into_iter()
                    .enumerate()
                    .map(|(k, cols)| SparseMatrix::from_columns(basis.len(k), cols))
                    .collect(),
            })
            .collect())
    }

    /// `K_{α,s}` on the 000 sector.
    pub fn op_K_s(&self, a: Axis, s: usize) -> Result<GradedOperator> {
        let max = self.horizontal.max_degree();
        if s > max {
            return Err(Error::ParameterOutOfRange {
                name: "s",
                value: s,
                reason: format!("must be at most {max}"),
            });
        }
        Ok(self.op_K_family(a)?.swap_remove(s))
    }

    /// The degree-`k` block of `K_{α,s}`; requires `s ≤ k`.
    pub fn op_K_s_block(&self, a: Axis, s: usize, k: usize) -> Result<SparseMatrix> {
        let max = self.horizontal.max_degree();
        if k > max {
            return Err(Error::DegreeOutOfRange { degree: k, max });
        }
        if s > k {
            return Err(Error::ParameterOutOfRange {
                name: "s",
                value: s,
                reason: format!("must be at most the degree {k}"),
            });
        }
        let cols = self
            .horizontal
            .blades(k)
            .iter()
            .map(|b| column_of(&self.horizontal, k as isize, &self.subset_images(a, *b)[s]))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_columns(self.horizontal.len(k), cols))
    }

    /// `I_α(ρ_1∧…∧ρ_k) = φ*_αρ_1∧…∧φ*_αρ_k` on the 000 sector.
    pub fn op_I(&self, a: Axis) -> Result<GradedOperator> {
        GradedOperator::from_blade_fn(format!("I{a}"), &self.horizontal, 0, |b| {
            self.subset_images(a, b).pop().unwrap_or_default()
        })
    }

    /// Runs every operator identity of the model; reports are sorted by name.
    pub fn verify_identities(&self) -> Vec<IdentityReport> {
        let suite = match Suite::build(self) {
            Ok(s) => s,
            Err(e) => {
                return vec![IdentityReport::fail(
                    "operator_construction",
                    "all operators map the basis into itself",
                    e.to_string(),
                )]
            }
        };
        let checks: Vec<fn(&Suite) -> IdentityReport> = vec![
            check_lambda_l,
            check_anticommutators,
            check_idempotents,
            check_cube,
            check_sector_dimensions,
            check_lambda_star,
            check_e_commutation,
            check_sector_preserved,
            check_star_involution,
            check_star_interior,
            check_llambda_h,
            check_llambda_k,
            check_l_l_commute,
            check_h_brackets,
            check_closure_table,
            check_k_derivation,
            check_k_recursion,
            check_quaternions,
            check_lambda_xi,
        ];
        let mut reports: Vec<IdentityReport> = checks.par_iter().map(|c| c(&suite)).collect();
        let table = self.model.table();
        reports.push(table.composition_report());
        reports.push(self.model.xi_form_report());
        reports.push(self.model.dual_pairing_report());
        reports.push(self.model.fundamental_form_table_report());
        reports.push(self.model.building_block_report());
        reports.sort_by(|a, b| a.name.cmp(&b.name));
        reports
    }
}

struct Suite<'a> {
    alg: &'a OperatorAlgebra,
    id_full: GradedOperator,
    l: Vec<GradedOperator>,
    lambda: Vec<GradedOperator>,
    e: Vec<GradedOperator>,
    l_full: Vec<GradedOperator>,
    lambda_full: Vec<GradedOperator>,
    lambda_star: Vec<GradedOperator>,
    id_h: GradedOperator,
    big_l: Vec<GradedOperator>,
    big_lambda: Vec<GradedOperator>,
    k: Vec<GradedOperator>,
    i: Vec<GradedOperator>,
    h: GradedOperator,
    k_family: Vec<Vec<GradedOperator>>,
}

impl<'a> Suite<'a> {
    fn build(alg: &'a OperatorAlgebra) -> Result<Self> {
        let per_axis = |f: &dyn Fn(Axis) -> Result<GradedOperator>| -> Result<Vec<GradedOperator>> {
            Axis::ALL.iter().map(|a| f(*a)).collect()
        };
        let h = BasisKind::Horizontal;
        Ok(Self {
            id_full: GradedOperator::identity(&alg.full),
            l: per_axis(&|a| alg.op_l(a))?,
            lambda: per_axis(&|a| alg.op_lambda(a))?,
            e: per_axis(&|a| alg.op_e(a))?,
            l_full: per_axis(&|a| alg.op_L(a, BasisKind::Full))?,
            lambda_full: per_axis(&|a| alg.op_Lambda(a, BasisKind::Full))?,
            lambda_star: per_axis(&|a| alg.op_Lambda_star(a))?,
            id_h: GradedOperator::identity(&alg.horizontal),
            big_l: per_axis(&|a| alg.op_L(a, h))?,
            big_lambda: per_axis(&|a| alg.op_Lambda(a, h))?,
            k: per_axis(&|a| alg.op_K(a, h))?,
            i: per_axis(&|a| alg.op_I(a))?,
            h: alg.op_H(),
            k_family: Axis::ALL
                .iter()
                .map(|a| alg.op_K_family(*a))
                .collect::<Result<_>>()?,
            alg,
        })
    }

    fn dims(&self) -> ModelDims {
        self.alg.dims()
    }
}

fn expect_equal(
    check: &mut CheckBuilder,
    what: &str,
    lhs: Result<GradedOperator>,
    rhs: Result<GradedOperator>,
) {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            check.max_degree(l.basis().max_degree());
            if let Some(w) = l.difference_witness(&r) {
                check.fail(w, what);
            }
        }
        (Err(e), _) | (_, Err(e)) => check.fail(e.to_string(), what),
    }
}

fn expect_zero(check: &mut CheckBuilder, what: &str, op: Result<GradedOperator>) {
    match op {
        Ok(op) => {
            let zero = GradedOperator::zero(op.basis(), op.shift());
            expect_equal(check, what, Ok(op), Ok(zero));
        }
        Err(e) => check.fail(e.to_string(), what),
    }
}

fn expect_block(
    check: &mut CheckBuilder,
    dims: ModelDims,
    basis: &BladeBasis,
    k: usize,
    what: &str,
    lhs: &SparseMatrix,
    rhs: &SparseMatrix,
) {
    if let Some((_, col)) = lhs.first_difference(rhs) {
        check.fail(
            format!("degree {k}, input {}", blade_label(dims, basis.blades(k)[col])),
            what,
        );
    }
}

fn check_lambda_l(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new("anticommutator_lambda_l", "{lambda_a, l_b} = delta_ab id");
    for a in Axis::ALL {
        for b in Axis::ALL {
            let expected = if a == b {
                s.id_full.clone()
            } else {
                GradedOperator::zero(s.id_full.basis(), 0)
            };
            expect_equal(
                &mut c,
                &format!("{{lambda{a}, l{b}}}"),
                s.lambda[slot(a)].anticommutator(&s.l[slot(b)]),
                Ok(expected),
            );
        }
    }
    c.finish()
}

fn check_anticommutators(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "anticommutators_vanish",
        "{lambda_a, lambda_b} = 0 and {l_a, l_b} = 0",
    );
    for a in Axis::ALL {
        for b in Axis::ALL {
            expect_zero(
                &mut c,
                &format!("{{lambda{a}, lambda{b}}}"),
                s.lambda[slot(a)].anticommutator(&s.lambda[slot(b)]),
            );
            expect_zero(
                &mut c,
                &format!("{{l{a}, l{b}}}"),
                s.l[slot(a)].anticommutator(&s.l[slot(b)]),
            );
        }
    }
    c.finish()
}

fn check_idempotents(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "idempotents_e",
        "e_a = l_a lambda_a satisfies e_a^2 = e_a and [e_a, e_b] = 0",
    );
    for a in Axis::ALL {
        let e = &s.e[slot(a)];
        expect_equal(&mut c, &format!("e{a}^2 = e{a}"), e.compose(e), Ok(e.clone()));
        for b in Axis::ALL {
            expect_zero(&mut c, &format!("[e{a}, e{b}]"), e.commutator(&s.e[slot(b)]));
        }
    }
    c.finish()
}

/// Sector of a blade read off from the idempotents: `ε_μ = 1` iff `e_μ b = b`.
fn sector_of(s: &Suite, form: &Multivector) -> Option<[bool; 3]> {
    let mut out = [false; 3];
    for (m, e) in s.e.iter().enumerate() {
        let image = e.apply(form).ok()?;
        if image == *form {
            out[m] = true;
        } else if !image.is_zero() {
            return None;
        }
    }
    Some(out)
}

fn check_cube(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "cube_isomorphisms",
        "l_a: Omega_(0,e2,e3) -> Omega_(1,e2,e3) with inverse lambda_a (and cyclically), sectors read from the e_mu",
    );
    let dims = s.dims();
    for b in s.id_full.basis().iter() {
        let form = Multivector::from_blade(b);
        let Some(sector) = sector_of(s, &form) else {
            c.fail(blade_label(dims, b), "blade is not an eigenvector of every e_mu");
            continue;
        };
        for a in Axis::ALL {
            let m = slot(a);
            let (there, back) = if sector[m] {
                (&s.lambda[m], &s.l[m])
            } else {
                (&s.l[m], &s.lambda[m])
            };
            let image = there.apply(&form).unwrap_or_default();
            let mut flipped = sector;
            flipped[m] = !sector[m];
            if image.is_zero() || sector_of(s, &image) != Some(flipped) {
                c.fail(blade_label(dims, b), format!("axis {a}: image not in the adjacent sector"));
            }
            if back.apply(&image).ok().as_ref() != Some(&form) {
                c.fail(blade_label(dims, b), format!("axis {a}: maps are not inverse"));
            }
        }
    }
    c.finish()
}

fn check_sector_dimensions(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "sector_000_dimensions",
        "the 000 sector in degree k is spanned by the eta-free blades, dimension C(4n, k)",
    );
    let dims = s.dims();
    let horizontal_mask = (1u32 << dims.horizontal_dim()) - 1;
    for k in 0..=dims.dim() {
        let from_e: Vec<Blade> = s
            .id_full
            .basis()
            .blades(k)
            .iter()
            .copied()
            .filter(|b| sector_of(s, &Multivector::from_blade(*b)) == Some([false; 3]))
            .collect();
        let expected = binomial(dims.horizontal_dim() as u64, k as u64) as usize;
        if from_e.len() != expected || from_e.iter().any(|b| b.mask() & !horizontal_mask != 0) {
            c.fail(format!("degree {k}"), format!("{} blades, expected {expected}", from_e.len()));
        }
        let listed = s.alg.sector_000(k).unwrap_or_default();
        if k <= dims.horizontal_dim() && listed != from_e {
            c.fail(format!("degree {k}"), "sector_000 disagrees with the idempotents");
        }
        c.max_degree(k);
    }
    c.finish()
}

fn check_lambda_star(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "lambda_via_hodge_star",
        "Lambda_a = sum_s (i_{X_s} i_{phi_a X_s} + i_{phi_b X_s} i_{phi_g X_s}) equals *L_a*",
    );
    for a in Axis::ALL {
        expect_equal(
            &mut c,
            &format!("Lambda{a} vs *L{a}*"),
            Ok(s.lambda_full[slot(a)].clone()),
            Ok(s.lambda_star[slot(a)].clone()),
        );
    }
    c.finish()
}

fn check_e_commutation(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "e_commutes_with_L_Lambda",
        "[L_a, e_mu] = 0 and [Lambda_a, e_mu] = 0",
    );
    for a in Axis::ALL {
        for e in &s.e {
            expect_zero(&mut c, "[L, e]", s.l_full[slot(a)].commutator(e));
            expect_zero(&mut c, "[Lambda, e]", s.lambda_full[slot(a)].commutator(e));
        }
    }
    c.finish()
}

fn check_sector_preserved(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "sector_000_preserved",
        "L_a, Lambda_a, K_a, I_a map eta-free blades to eta-free blades",
    );
    let dims = s.dims();
    let horizontal_mask = (1u32 << dims.horizontal_dim()) - 1;
    let leaves = |m: &Multivector| m.terms().any(|(b, _)| b.mask() & !horizontal_mask != 0);
    for b in s.alg.horizontal.iter() {
        let form = Multivector::from_blade(b);
        for a in Axis::ALL {
            let images = [
                ("L", s.l_full[slot(a)].apply(&form).unwrap_or_default()),
                ("Lambda", s.lambda_full[slot(a)].apply(&form).unwrap_or_default()),
                ("K", s.alg.big_k_image(a, b)),
                ("I", s.alg.subset_images(a, b).pop().unwrap_or_default()),
            ];
            for (name, image) in images {
                if leaves(&image) {
                    c.fail(blade_label(dims, b), format!("{name}{a} leaves the 000 sector"));
                }
            }
        }
    }
    c.finish()
}

fn check_star_involution(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new("hodge_star_involution", "** = id in dimension 4n+3");
    let dims = s.dims();
    for b in s.id_full.basis().iter() {
        let form = Multivector::from_blade(b);
        let twice = s.alg.star(&form).and_then(|x| s.alg.star(&x));
        if twice.as_ref() != Ok(&form) {
            c.fail(blade_label(dims, b), "** differs from id");
        }
    }
    c.max_degree(dims.dim());
    c.finish()
}

fn check_star_interior(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "hodge_star_interior",
        "*(rho ^ *w) = (-1)^((4n+3-k)(k-1)) i_Y w for every coframe element rho with dual Y",
    );
    let dims = s.dims();
    let d = dims.dim() as i64;
    for b in s.id_full.basis().iter() {
        let form = Multivector::from_blade(b);
        let k = b.degree() as i64;
        let sign = if ((d - k) * (k - 1)).rem_euclid(2) == 0 { 1 } else { -1 };
        let starred = s.alg.star(&form).expect("blade");
        for rho in 0..dims.dim() {
            let lhs = s.alg.star(&Multivector::basis(rho).wedge(&starred));
            let rhs = form.interior(rho).scale(&rat(sign));
            if lhs.as_ref() != Ok(&rhs) {
                c.fail(
                    format!("w = {}, rho = {}", blade_label(dims, b), blade_label(dims, Blade::single(rho))),
                    "sides differ",
                );
            }
        }
    }
    c.max_degree(dims.dim());
    c.finish()
}

fn check_llambda_h(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new("L_Lambda_H", "[L_a, Lambda_a] = -H on the 000 sector");
    let minus_h = s.h.scale(&rat(-1));
    for a in Axis::ALL {
        expect_equal(
            &mut c,
            &format!("[L{a}, Lambda{a}] + H"),
            s.big_l[slot(a)].commutator(&s.big_lambda[slot(a)]),
            Ok(minus_h.clone()),
        );
    }
    c.finish()
}

fn check_llambda_k(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "L_Lambda_K",
        "[L_a, Lambda_b] = K_g and [L_a, Lambda_g] = -K_b for cyclic (a, b, g)",
    );
    for a in Axis::ALL {
        let (b, g) = a.cyclic();
        expect_equal(
            &mut c,
            &format!("[L{a}, Lambda{b}] = K{g}"),
            s.big_l[slot(a)].commutator(&s.big_lambda[slot(b)]),
            Ok(s.k[slot(g)].clone()),
        );
        expect_equal(
            &mut c,
            &format!("[L{a}, Lambda{g}] = -K{b}"),
            s.big_l[slot(a)].commutator(&s.big_lambda[slot(g)]),
            Ok(s.k[slot(b)].scale(&rat(-1))),
        );
    }
    c.finish()
}

fn check_l_l_commute(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "L_L_and_Lambda_Lambda_commute",
        "[L_a, L_b] = 0 and [Lambda_a, Lambda_b] = 0",
    );
    for a in Axis::ALL {
        for b in Axis::ALL {
            expect_zero(&mut c, "[L, L]", s.big_l[slot(a)].commutator(&s.big_l[slot(b)]));
            expect_zero(
                &mut c,
                "[Lambda, Lambda]",
                s.big_lambda[slot(a)].commutator(&s.big_lambda[slot(b)]),
            );
        }
    }
    c.finish()
}

fn check_h_brackets(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "H_brackets",
        "[K_a, H] = 0, [L_a, H] = 2 L_a, [Lambda_a, H] = -2 Lambda_a",
    );
    for a in Axis::ALL {
        let m = slot(a);
        expect_zero(&mut c, &format!("[K{a}, H]"), s.k[m].commutator(&s.h));
        expect_equal(
            &mut c,
            &format!("[L{a}, H] = 2L{a}"),
            s.big_l[m].commutator(&s.h),
            Ok(s.big_l[m].scale(&rat(2))),
        );
        expect_equal(
            &mut c,
            &format!("[Lambda{a}, H] = -2Lambda{a}"),
            s.big_lambda[m].commutator(&s.h),
            Ok(s.big_lambda[m].scale(&rat(-2))),
        );
    }
    c.finish()
}

fn check_closure_table(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "so5_closure_table",
        "[K_a, L_a] = [K_a, Lambda_a] = 0, [K_a, L_b] = -2L_g, [K_a, L_g] = 2L_b, [K_a, Lambda_b] = -2Lambda_g, [K_a, Lambda_g] = 2Lambda_b, [K_a, K_b] = -2K_g",
    );
    let two = rat(2);
    let minus_two = rat(-2);
    for a in Axis::ALL {
        let (b, g) = a.cyclic();
        let (ka, sb, sg) = (&s.k[slot(a)], slot(b), slot(g));
        expect_zero(&mut c, &format!("[K{a}, L{a}]"), ka.commutator(&s.big_l[slot(a)]));
        expect_zero(
            &mut c,
            &format!("[K{a}, Lambda{a}]"),
            ka.commutator(&s.big_lambda[slot(a)]),
        );
        let cases = [
            (format!("[K{a}, L{b}] = -2L{g}"), ka.commutator(&s.big_l[sb]), s.big_l[sg].scale(&minus_two)),
            (format!("[K{a}, L{g}] = 2L{b}"), ka.commutator(&s.big_l[sg]), s.big_l[sb].scale(&two)),
            (
                format!("[K{a}, Lambda{b}] = -2Lambda{g}"),
                ka.commutator(&s.big_lambda[sb]),
                s.big_lambda[sg].scale(&minus_two),
            ),
            (
                format!("[K{a}, Lambda{g}] = 2Lambda{b}"),
                ka.commutator(&s.big_lambda[sg]),
                s.big_lambda[sb].scale(&two),
            ),
            (format!("[K{a}, K{b}] = -2K{g}"), ka.commutator(&s.k[sb]), s.k[sg].scale(&minus_two)),
        ];
        for (what, lhs, rhs) in cases {
            expect_equal(&mut c, &what, lhs, Ok(rhs));
        }
    }
    c.finish()
}

fn check_k_derivation(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "K_derivation",
        "K_a(rho_1^...^rho_k) = sum_j rho_1^...^phi*_a rho_j^...^rho_k",
    );
    for a in Axis::ALL {
        expect_equal(
            &mut c,
            &format!("K{a} vs derivation"),
            Ok(s.k[slot(a)].clone()),
            s.alg.op_K_derivation(a),
        );
    }
    c.finish()
}

#[allow(clippy::needless_range_loop)]
fn check_k_recursion(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "K_s_recursion",
        "K_a K_{a,s} = (s+1) K_{a,s+1} - (k-s+1) K_{a,s-1} on degree k; K_{a,0} = id, K_{a,1} = K_a, K_{a,k} = I_a",
    );
    let dims = s.dims();
    let basis = &s.alg.horizontal;
    let max = basis.max_degree();
    for a in Axis::ALL {
        let m = slot(a);
        let family = &s.k_family[m];
        let k_op = &s.k[m];
        for k in 0..=max {
            let zero = SparseMatrix::zeros(basis.len(k), basis.len(k));
            let block = |t: usize| if t <= max { family[t].block(k).clone() } else { zero.clone() };
            for sub in 0..=k {
                let lhs = k_op.block(k).mul(family[sub].block(k));
                let up = block(sub + 1).scale(&rat(sub as i64 + 1));
                let down = if sub >= 1 {
                    block(sub - 1).scale(&rat((k - sub + 1) as i64))
                } else {
                    zero.clone()
                };
                expect_block(
                    &mut c,
                    dims,
                    basis,
                    k,
                    &format!("recursion axis {a}, s = {sub}"),
                    &lhs,
                    &up.sub(&down),
                );
            }
            expect_block(&mut c, dims, basis, k, "K_{a,k} = I_a", family[k].block(k), s.i[m].block(k));
            c.max_degree(k);
        }
        expect_equal(&mut c, &format!("K{a},0 = id"), Ok(family[0].clone()), Ok(s.id_h.clone()));
        if max >= 1 {
            expect_equal(&mut c, &format!("K{a},1 = K{a}"), Ok(family[1].clone()), Ok(k_op.clone()));
        }
    }
    c.finish()
}

fn check_quaternions(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new(
        "quaternion_relations",
        "on odd degrees I_a^2 = -id, I_a I_b = -I_g, I_b I_a = I_g; on even degrees I_a^2 = id",
    );
    let dims = s.dims();
    let basis = &s.alg.horizontal;
    for k in 0..=basis.max_degree() {
        let id = SparseMatrix::identity(basis.len(k));
        let odd = k % 2 == 1;
        let sign = rat(if odd { -1 } else { 1 });
        for a in Axis::ALL {
            let (b, g) = a.cyclic();
            let ia = s.i[slot(a)].block(k);
            let ib = s.i[slot(b)].block(k);
            let ig = s.i[slot(g)].block(k);
            expect_block(&mut c, dims, basis, k, &format!("I{a}^2"), &ia.mul(ia), &id.scale(&sign));
            if odd {
                expect_block(&mut c, dims, basis, k, &format!("I{a}I{b} = -I{g}"), &ia.mul(ib), &ig.scale(&rat(-1)));
                expect_block(&mut c, dims, basis, k, &format!("I{b}I{a} = I{g}"), &ib.mul(ia), ig);
            }
        }
        c.max_degree(k);
    }
    c.finish()
}

fn check_lambda_xi(s: &Suite) -> IdentityReport {
    let mut c = CheckBuilder::new("Lambda_of_Xi", "Lambda_a(Xi_a) = 2n");
    let two_n = Multivector::scalar(rat(2 * s.dims().n() as i64));
    for a in Axis::ALL {
        let value = s.big_lambda[slot(a)].apply(&s.alg.xi_forms[slot(a)]);
        match value {
            Ok(v) if v == two_n => {}
            Ok(v) => c.fail(format!("axis {a}"), format!("got {v}")),
            Err(e) => c.fail(format!("axis {a}"), e.to_string()),
        }
    }
    c.finish()
}

/// Coframe label of `φ*_α ζ_s` as a one-form, used by examples and tests.
pub fn phi_zeta_index(dims: ModelDims, a: Axis, s: usize) -> Result<usize> {
    FrameLabel::PhiZeta(a, s).index(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::PhiStarTable;

    fn ax(a: u8) -> Axis {
        Axis::new(a).unwrap()
    }

    #[test]
    fn basis_sizes() {
        let dims = ModelDims::new(1).unwrap();
        let full = BladeBasis::new(dims, BasisKind::Full);
        let hor = BladeBasis::new(dims, BasisKind::Horizontal);
        assert_eq!(full.total_len(), 128);
        assert_eq!(hor.total_len(), 16);
        assert_eq!(hor.len(2), 6);
    }

    #[test]
    fn lambda_l_examples() {
        let alg = OperatorAlgebra::new(1).unwrap();
        let id = GradedOperator::identity(alg.basis(BasisKind::Full));
        let l1 = alg.op_l(ax(1)).unwrap();
        let lam1 = alg.op_lambda(ax(1)).unwrap();
        let l2 = alg.op_l(ax(2)).unwrap();
        assert!(lam1.anticommutator(&l1).unwrap().difference_witness(&id).is_none());
        assert!(lam1.anticommutator(&l2).unwrap().is_zero());
        assert!(l1.anticommutator(&l1).unwrap().is_zero());
    }

    #[test]
    fn e_action_on_blades() {
        let alg = OperatorAlgebra::new(1).unwrap();
        let e1 = alg.op_e(ax(1)).unwrap();
        let eta1 = alg.model().eta(ax(1));
        assert_eq!(e1.apply(&eta1).unwrap(), eta1);
        assert!(e1.apply(&alg.model().zeta(1).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn sector_000_sizes() {
        let alg = OperatorAlgebra::new(1).unwrap();
        assert_eq!(alg.sector_000(0).unwrap(), vec![Blade::SCALAR]);
        assert_eq!(alg.sector_000(2).unwrap().len(), 6);
        assert!(alg.sector_000(5).is_err());
    }

    #[test]
    fn h_values() {
        let alg = OperatorAlgebra::new(1).unwrap();
        let h = alg.op_H();
        assert_eq!(h.apply(&Multivector::one()).unwrap(), Multivector::scalar(rat(2)));
        let two_form = Multivector::from_blade(Blade::from_indices([0, 1]).unwrap());
        assert!(h.apply(&two_form).unwrap().is_zero());
    }

    #[test]
    fn k_on_zeta() {
        let alg = OperatorAlgebra::new(1).unwrap();
        let k1 = alg.op_K(ax(1), BasisKind::Horizontal).unwrap();
        let zeta = alg.model().zeta(1).unwrap();
        assert_eq!(k1.apply(&zeta).unwrap(), alg.model().phi_zeta(ax(1), 1).unwrap());
    }

    #[test]
    fn lambda_of_xi_is_two_n() {
        for n in 1..=2 {
            let alg = OperatorAlgebra::new(n).unwrap();
            let lam = alg.op_Lambda(ax(1), BasisKind::Horizontal).unwrap();
            let value = lam.apply(&alg.model().xi_form(ax(1))).unwrap();
            assert_eq!(value, Multivector::scalar(rat(2 * n as i64)));
        }
    }

    #[test]
    fn k_s_block_range() {
        let alg = OperatorAlgebra::new(1).unwrap();
        assert!(alg.op_K_s_block(ax(1), 3, 2).is_err());
        let k0 = alg.op_K_s_block(ax(1), 0, 2).unwrap();
        assert_eq!(k0, SparseMatrix::identity(6));
        assert!(alg.op_K_s(ax(1), 9).is_err());
    }

    #[test]
    fn recursion_example_degree_two() {
        // K_1 K_{1,1} = 2 K_{1,2} - 2 K_{1,0} on degree 2
        let alg = OperatorAlgebra::new(1).unwrap();
        let k = alg.op_K(ax(1), BasisKind::Horizontal).unwrap();
        let lhs = k.block(2).mul(&alg.op_K_s_block(ax(1), 1, 2).unwrap());
        let rhs = alg
            .op_K_s_block(ax(1), 2, 2)
            .unwrap()
            .scale(&rat(2))
            .sub(&SparseMatrix::identity(6).scale(&rat(2)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn suite_passes_n1() {
        let alg = OperatorAlgebra::new(1).unwrap();
        let reports = alg.verify_identities();
        for r in &reports {
            assert!(r.passed, "{r:?}");
        }
        let mut names: Vec<_> = reports.iter().map(|r| r.name.clone()).collect();
        let sorted = names.clone();
        names.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn suite_detects_sign_flip() {
        let dims = ModelDims::new(1).unwrap();
        let idx = phi_zeta_index(dims, ax(1), 1).unwrap();
        let table = PhiStarTable::standard(dims).with_sign_flip(ax(1), idx);
        let alg = OperatorAlgebra::with_model(ContactModel::with_table(table));
        let failed: Vec<_> = alg
            .verify_identities()
            .into_iter()
            .filter(|r| !r.passed)
            .collect();
        assert!(!failed.is_empty());
        assert!(failed.iter().all(|r| r.witness.is_some()));
    }
}
