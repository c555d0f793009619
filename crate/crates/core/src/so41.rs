//! The Lie algebra `so(4,1)` and the check that `H, L_α, Λ_α, K_α` realise it.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::contact::Axis;
use crate::linalg::{rank_of, SpanSolver};
use crate::operators::{BasisKind, GradedOperator, OperatorAlgebra};
use crate::report::{CheckBuilder, IdentityReport, PairCheckSummary, So41Summary};
use crate::{rat, Error, Rational, Result};

/// A 5×5 exact rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix5(pub [[Rational; 5]; 5]);

impl Matrix5 {
    pub fn zero() -> Self {
        Matrix5(std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())))
    }

    /// `E_1 = diag(1, 1, 1, 1, -1)`.
    pub fn e1() -> Self {
        let mut m = Self::zero();
        for i in 0..5 {
            m.0[i][i] = rat(if i == 4 { -1 } else { 1 });
        }
        m
    }

    /// The unit matrix `e_ij` (1-based indices).
    pub fn unit(i: usize, j: usize) -> Self {
        let mut m = Self::zero();
        m.0[i - 1][j - 1] = Rational::one();
        m
    }

    pub fn transpose(&self) -> Self {
        Matrix5(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn mul(&self, rhs: &Matrix5) -> Matrix5 {
        Matrix5(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..5).fold(Rational::zero(), |acc, k| acc + &self.0[i][k] * &rhs.0[k][j])
            })
        }))
    }

    pub fn add(&self, rhs: &Matrix5) -> Matrix5 {
        Matrix5(std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.0[i][j] + &rhs.0[i][j])
        }))
    }

    pub fn scale(&self, factor: &Rational) -> Matrix5 {
        Matrix5(std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.0[i][j] * factor)
        }))
    }

    pub fn sub(&self, rhs: &Matrix5) -> Matrix5 {
        self.add(&rhs.scale(&rat(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }

    fn entries(&self) -> BTreeMap<usize, Rational> {
        self.0
            .iter()
            .flatten()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }
}

/// An element of `so(4,1) = {A : A E_1 = -E_1 Aᵗ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement(Matrix5);

impl LieElement {
    pub fn new(matrix: Matrix5) -> Result<Self> {
        let e1 = Matrix5::e1();
        if matrix.mul(&e1).add(&e1.mul(&matrix.transpose())).is_zero() {
            Ok(LieElement(matrix))
        } else {
            Err(Error::NotInLieAlgebra)
        }
    }

    pub fn zero() -> Self {
        LieElement(Matrix5::zero())
    }

    pub fn matrix(&self) -> &Matrix5 {
        &self.0
    }

    pub fn add(&self, rhs: &LieElement) -> LieElement {
        LieElement(self.0.add(&rhs.0))
    }

    pub fn sub(&self, rhs: &LieElement) -> LieElement {
        LieElement(self.0.sub(&rhs.0))
    }

    pub fn scale(&self, factor: &Rational) -> LieElement {
        LieElement(self.0.scale(factor))
    }

    /// Flattened entries, for rank computations.
    pub fn entries(&self) -> BTreeMap<usize, Rational> {
        self.0.entries()
    }
}

/// `t_ij = e_i5 + e_5i` if `j = 5`, `e_ij − e_ji` otherwise; for `1 ≤ j < i ≤ 4`
/// this returns `t_ji = −t_ij`.
pub fn basis_t(i: usize, j: usize) -> Result<LieElement> {
    let valid = |x: usize| (1..=5).contains(&x);
    if !valid(i) || !valid(j) || i == j || i == 5 {
        return Err(Error::ParameterOutOfRange {
            name: "t index",
            value: i * 10 + j,
            reason: "need 1 <= i < j <= 5, or 1 <= j < i <= 4".into(),
        });
    }
    let m = if j == 5 {
        Matrix5::unit(i, 5).add(&Matrix5::unit(5, i))
    } else {
        Matrix5::unit(i, j).sub(&Matrix5::unit(j, i))
    };
    LieElement::new(m)
}

/// The commutator `AB − BA`.
pub fn bracket(a: &LieElement, b: &LieElement) -> LieElement {
    LieElement(a.0.mul(&b.0).sub(&b.0.mul(&a.0)))
}

/// The ten `t_ij`, `i < j`, in lexicographic order.
pub fn basis() -> Vec<((usize, usize), LieElement)> {
    let mut out = Vec::new();
    for i in 1..=5 {
        for j in i + 1..=5 {
            out.push(((i, j), basis_t(i, j).expect("valid indices")));
        }
    }
    out
}

/// Generators of the operator span.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    H,
    L(Axis),
    Lambda(Axis),
    K(Axis),
}

impl Generator {
    /// `H, L_1..3, Λ_1..3, K_1..3`.
    pub fn all() -> Vec<Generator> {
        let mut out = vec![Generator::H];
        out.extend(Axis::ALL.iter().map(|a| Generator::L(*a)));
        out.extend(Axis::ALL.iter().map(|a| Generator::Lambda(*a)));
        out.extend(Axis::ALL.iter().map(|a| Generator::K(*a)));
        out
    }

    pub fn from_name(name: &str) -> Result<Generator> {
        Generator::all()
            .into_iter()
            .find(|g| g.to_string() == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// The operator on the 000 sector.
    pub fn operator(&self, alg: &OperatorAlgebra) -> Result<GradedOperator> {
        let h = BasisKind::Horizontal;
        match *self {
            Generator::H => Ok(alg.op_H()),
            Generator::L(a) => alg.op_L(a, h),
            Generator::Lambda(a) => alg.op_Lambda(a, h),
            Generator::K(a) => alg.op_K(a, h),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::H => write!(f, "H"),
            Generator::L(a) => write!(f, "L{a}"),
            Generator::Lambda(a) => write!(f, "Lambda{a}"),
            Generator::K(a) => write!(f, "K{a}"),
        }
    }
}

/// `H ↦ 2t_45`, `L_α ↦ t_α5 + t_α4`, `Λ_α ↦ t_α5 − t_α4`, `K_α ↦ 2t_βγ`.
pub fn iso_map(g: Generator) -> LieElement {
    let t = |i, j| basis_t(i, j).expect("valid indices");
    let two = rat(2);
    match g {
        Generator::H => t(4, 5).scale(&two),
        Generator::L(a) => {
            let i = a.get() as usize;
            t(i, 5).add(&t(i, 4))
        }
        Generator::Lambda(a) => {
            let i = a.get() as usize;
            t(i, 5).sub(&t(i, 4))
        }
        Generator::K(a) => {
            let (b, c) = a.cyclic();
            t(b.get() as usize, c.get() as usize).scale(&two)
        }
    }
}

/// `iso_map` by generator name.
pub fn iso_map_named(name: &str) -> Result<LieElement> {
    Generator::from_name(name).map(iso_map)
}

fn t_name(i: usize, j: usize) -> String {
    format!("t{i}{j}")
}

/// Closure of every basis element and every bracket under the defining relation,
/// independence of the basis, and the bracket table for `i<j<k<5` and `i<j<5`.
pub fn bracket_table_report() -> IdentityReport {
    let mut c = CheckBuilder::new(
        "so41_bracket_table",
        "t_ij satisfy A E1 = -E1 A^t and are independent; [t_ij,t_ik] = -t_jk, [t_ij,t_jk] = t_ik, [t_ik,t_jk] = -t_ij (i<j<k<5); [t_ij,t_i5] = -t_j5, [t_ij,t_j5] = t_i5, [t_i5,t_j5] = t_ij (i<j<5)",
    );
    let t = |i, j| basis_t(i, j).expect("valid indices");
    let basis = basis();
    if rank_of(basis.iter().map(|(_, b)| b.entries())) != 10 {
        c.fail("basis", "the ten t_ij are dependent");
    }
    for (x, a) in &basis {
        for (y, b) in &basis {
            if LieElement::new(bracket(a, b).0).is_err() {
                c.fail(format!("[{}, {}]", t_name(x.0, x.1), t_name(y.0, y.1)), "leaves so(4,1)");
            }
        }
    }
    let mut expect = |lhs: LieElement, rhs: LieElement, what: String| {
        if lhs != rhs {
            c.fail(what, "bracket differs");
        }
    };
    let minus = rat(-1);
    for i in 1..=4 {
        for j in i + 1..=4 {
            for k in j + 1..=4 {
                expect(bracket(&t(i, j), &t(i, k)), t(j, k).scale(&minus), format!("[t{i}{j}, t{i}{k}]"));
                expect(bracket(&t(i, j), &t(j, k)), t(i, k), format!("[t{i}{j}, t{j}{k}]"));
                expect(bracket(&t(i, k), &t(j, k)), t(i, j).scale(&minus), format!("[t{i}{k}, t{j}{k}]"));
            }
            expect(bracket(&t(i, j), &t(i, 5)), t(j, 5).scale(&minus), format!("[t{i}{j}, t{i}5]"));
            expect(bracket(&t(i, j), &t(j, 5)), t(i, 5), format!("[t{i}{j}, t{j}5]"));
            expect(bracket(&t(i, 5), &t(j, 5)), t(i, j), format!("[t{i}5, t{j}5]"));
        }
    }
    c.finish()
}

/// Outcome of the module check.
#[derive(Clone, Debug)]
pub struct ModuleCheck {
    pub reports: Vec<IdentityReport>,
    pub summary: So41Summary,
}

impl ModuleCheck {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }
}

fn describe(coeffs: &BTreeMap<usize, Rational>, names: &[Generator]) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    coeffs
        .iter()
        .map(|(g, c)| format!("{c}*{}", names[*g]))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Checks that `H, L_α, Λ_α, K_α` on the 000 sector of the rank-`n` model
/// span a 10-dimensional Lie algebra whose structure constants match
/// `so(4,1)` through [`iso_map`], for all 45 generator pairs.
pub fn verify_module(n: usize) -> Result<ModuleCheck> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            value: n,
            reason: "the operators vanish identically for n = 0".into(),
        });
    }
    verify_module_with(&OperatorAlgebra::new(n)?, None)
}

/// [`verify_module`] on a given algebra; `negate` flips the sign of one
/// generator's operator (negative control).
pub fn verify_module_with(alg: &OperatorAlgebra, negate: Option<Generator>) -> Result<ModuleCheck> {
    let names = Generator::all();
    let ops: Vec<GradedOperator> = names
        .iter()
        .map(|g| {
            let op = g.operator(alg)?;
            Ok(if Some(*g) == negate { op.scale(&rat(-1)) } else { op })
        })
        .collect::<Result<_>>()?;

    let mut span = SpanSolver::new();
    let mut independent = true;
    for op in &ops {
        independent &= span.insert(op.flatten()).is_some();
    }
    let span_rank = span.rank();
    let images: Vec<LieElement> = names.iter().map(|g| iso_map(*g)).collect();
    let image_rank = rank_of(images.iter().map(LieElement::entries));

    let mut rank_check = CheckBuilder::new(
        "so41_span_rank",
        "H, L_a, Lambda_a, K_a are linearly independent on the 000 sector and their images under the isomorphism have rank 10",
    );
    if !independent || span_rank != 10 {
        rank_check.fail("operator span", format!("rank {span_rank}"));
    }
    if image_rank != 10 {
        rank_check.fail("image span", format!("rank {image_rank}"));
    }

    let pairs: Vec<(usize, usize)> = (0..names.len())
        .flat_map(|i| (i + 1..names.len()).map(move |j| (i, j)))
        .collect();
    let results: Vec<PairCheckSummary> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (left, right) = (names[i].to_string(), names[j].to_string());
            let coeffs = ops[i].commutator(&ops[j]).ok().and_then(|c| span.solve(&c.flatten()));
            let Some(coeffs) = coeffs else {
                return PairCheckSummary {
                    left,
                    right,
                    bracket: "outside the span".into(),
                    passed: false,
                };
            };
            let mapped = coeffs
                .iter()
                .fold(LieElement::zero(), |acc, (g, c)| acc.add(&images[*g].scale(c)));
            PairCheckSummary {
                passed: mapped == bracket(&images[i], &images[j]),
                bracket: describe(&coeffs, &names),
                left,
                right,
            }
        })
        .collect();

    let mut hom = CheckBuilder::new(
        "so41_homomorphism",
        "iso([x, y]) = [iso(x), iso(y)] for all 45 generator pairs, brackets expanded in the operator span",
    );
    let failing: Vec<String> = results
        .iter()
        .filter(|p| !p.passed)
        .map(|p| format!("({}, {})", p.left, p.right))
        .collect();
    if !failing.is_empty() {
        hom.fail(failing[0].clone(), format!("failing pairs: {}", failing.join(", ")));
    }

    let mut reports = vec![bracket_table_report(), rank_check.finish(), hom.finish()];
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(ModuleCheck {
        reports,
        summary: So41Summary {
            span_rank,
            image_rank,
            pairs: results,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize, j: usize) -> LieElement {
        basis_t(i, j).unwrap()
    }

    #[test]
    fn basis_elements_satisfy_relation() {
        let e1 = Matrix5::e1();
        for (_, b) in basis() {
            assert!(b.matrix().mul(&e1).add(&e1.mul(&b.matrix().transpose())).is_zero());
        }
        assert!(LieElement::new(Matrix5::unit(1, 1)).is_err());
        assert!(basis_t(5, 1).is_err());
        assert!(basis_t(0, 2).is_err());
        assert_eq!(t(2, 1), t(1, 2).scale(&rat(-1)));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(&t(1, 2), &t(1, 3)), t(2, 3).scale(&rat(-1)));
        assert_eq!(bracket(&t(1, 5), &t(2, 5)), t(1, 2));
        let a = t(1, 5).add(&t(1, 4));
        let b = t(1, 5).sub(&t(1, 4));
        assert_eq!(bracket(&a, &b), t(4, 5).scale(&rat(-2)));
    }

    #[test]
    fn table_and_iso() {
        assert!(bracket_table_report().passed);
        assert_eq!(iso_map(Generator::H), t(4, 5).scale(&rat(2)));
        assert_eq!(iso_map_named("K1").unwrap(), t(2, 3).scale(&rat(2)));
        assert!(iso_map_named("X").is_err());
    }

    #[test]
    fn module_n1() {
        let check = verify_module(1).unwrap();
        assert!(check.passed(), "{:?}", check.reports);
        assert_eq!(check.summary.pairs.len(), 45);
        assert_eq!(check.summary.span_rank, 10);
        assert!(verify_module(0).is_err());
    }

    #[test]
    fn negated_k3_is_caught() {
        let alg = OperatorAlgebra::new(1).unwrap();
        let k3 = Generator::from_name("K3").unwrap();
        let check = verify_module_with(&alg, Some(k3)).unwrap();
        assert!(!check.passed());
        assert!(check
            .summary
            .pairs
            .iter()
            .any(|p| !p.passed && (p.left == "K3" || p.right == "K3")));
    }
}
