//! Flat local model of an almost contact metric 3-structure.
//!
//! Coframe layout (block order):
//! `ζ_1..ζ_n, φ*_1ζ_1..φ*_1ζ_n, φ*_2ζ_*, φ*_3ζ_*, η_1, η_2, η_3`.
//!
//! The frame is `X_s`, `φ_αX_s`, `ξ_α`. Because `φ_α² = -1` on the
//! horizontal part, the coframe element labelled `φ*_αζ_s` pairs to `-1`
//! with `φ_αX_s`; every frame vector used here is derived from the
//! [`PhiStarTable`] by transposition, so a corrupted table propagates to
//! every operator built from it.

use std::fmt;

use num_traits::Zero;

use crate::exterior::{Blade, KVector, ModelDims, Multivector};
use crate::report::{CheckBuilder, IdentityReport};
use crate::{rat, Error, Rational, Result};

/// One of the three structures, `α ∈ {1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Axis(u8);

impl Axis {
    pub const ALL: [Axis; 3] = [Axis(1), Axis(2), Axis(3)];

    pub fn new(alpha: u8) -> Result<Self> {
        if (1..=3).contains(&alpha) {
            Ok(Axis(alpha))
        } else {
            Err(Error::InvalidAxis(alpha))
        }
    }

    pub fn get(&self) -> u8 {
        self.0
    }

    /// `(β, γ)` such that `(α, β, γ)` is a cyclic permutation of `(1, 2, 3)`.
    pub fn cyclic(&self) -> (Axis, Axis) {
        match self.0 {
            1 => (Axis(2), Axis(3)),
            2 => (Axis(3), Axis(1)),
            _ => (Axis(1), Axis(2)),
        }
    }

    fn slot(&self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Levi-Civita symbol with `ε_123 = +1`.
pub fn epsilon(a: Axis, b: Axis, c: Axis) -> i8 {
    match (a.0, b.0, c.0) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (1, 3, 2) | (3, 2, 1) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// Name of a coframe element; `s` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrameLabel {
    Zeta(usize),
    PhiZeta(Axis, usize),
    Eta(Axis),
}

impl FrameLabel {
    pub fn index(&self, dims: ModelDims) -> Result<usize> {
        let n = dims.n();
        let check = |s: usize| {
            if (1..=n).contains(&s) {
                Ok(())
            } else {
                Err(Error::InvalidFramePosition { s, n })
            }
        };
        match *self {
            FrameLabel::Zeta(s) => check(s).map(|_| s - 1),
            FrameLabel::PhiZeta(a, s) => check(s).map(|_| a.0 as usize * n + s - 1),
            FrameLabel::Eta(a) => Ok(4 * n + a.slot()),
        }
    }

    pub fn from_index(index: usize, dims: ModelDims) -> Result<Self> {
        dims.check_index(index)?;
        let n = dims.n();
        Ok(if index >= 4 * n {
            FrameLabel::Eta(Axis((index - 4 * n + 1) as u8))
        } else if index < n {
            FrameLabel::Zeta(index + 1)
        } else {
            FrameLabel::PhiZeta(Axis((index / n) as u8), index % n + 1)
        })
    }
}

impl fmt::Display for FrameLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameLabel::Zeta(s) => write!(f, "zeta{s}"),
            FrameLabel::PhiZeta(a, s) => write!(f, "phi{a}zeta{s}"),
            FrameLabel::Eta(a) => write!(f, "eta{a}"),
        }
    }
}

/// Human-readable form of a blade using coframe labels.
pub fn blade_label(dims: ModelDims, blade: Blade) -> String {
    if blade == Blade::SCALAR {
        return "1".to_string();
    }
    blade
        .indices()
        .map(|i| match FrameLabel::from_index(i, dims) {
            Ok(l) => l.to_string(),
            Err(_) => format!("e{i}"),
        })
        .collect::<Vec<_>>()
        .join("^")
}

/// Signed permutation-with-kill action of each `φ*_α` on the coframe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiStarTable {
    dims: ModelDims,
    images: [Vec<Option<(i8, usize)>>; 3],
}

impl PhiStarTable {
    /// The pullback table of the standard structure:
    /// `ζ ↦ φ*_αζ`, `φ*_αζ ↦ -ζ`, `φ*_βζ ↦ -φ*_γζ`, `φ*_γζ ↦ φ*_βζ`,
    /// `η_γ ↦ η_β`, `η_β ↦ -η_γ`, `η_α ↦ 0`.
    pub fn standard(dims: ModelDims) -> Self {
        let d = dims.dim();
        let idx = |l: FrameLabel| l.index(dims).expect("valid label");
        let images = Axis::ALL.map(|a| {
            let (b, g) = a.cyclic();
            let mut img = vec![None; d];
            for s in 1..=dims.n() {
                let z = idx(FrameLabel::Zeta(s));
                let pa = idx(FrameLabel::PhiZeta(a, s));
                let pb = idx(FrameLabel::PhiZeta(b, s));
                let pg = idx(FrameLabel::PhiZeta(g, s));
                img[z] = Some((1, pa));
                img[pa] = Some((-1, z));
                img[pb] = Some((-1, pg));
                img[pg] = Some((1, pb));
            }
            // η_δ ∘ φ_α = Σ_ε ε_{δαε} η_ε
            for delta in Axis::ALL {
                let target = Axis::ALL
                    .into_iter()
                    .find(|e| epsilon(delta, a, *e) != 0)
                    .map(|e| (epsilon(delta, a, e), idx(FrameLabel::Eta(e))));
                img[idx(FrameLabel::Eta(delta))] = target;
            }
            img
        });
        Self { dims, images }
    }

    /// Negates a single entry of the table (negative control).
    pub fn with_sign_flip(mut self, axis: Axis, index: usize) -> Self {
        if let Some(Some((sign, _))) = self.images[axis.slot()].get_mut(index) {
            *sign = -*sign;
        }
        self
    }

    pub fn dims(&self) -> ModelDims {
        self.dims
    }

    /// `φ*_α θ_index` as a sign and a target index, `None` when killed.
    pub fn image(&self, axis: Axis, index: usize) -> Option<(i8, usize)> {
        self.images[axis.slot()].get(index).copied().flatten()
    }

    /// Linear extension of the table to a one-form.
    pub fn apply(&self, axis: Axis, form: &Multivector) -> Result<Multivector> {
        if let Some(k) = form.degree().filter(|&k| k != 1) {
            return Err(Error::DegreeMismatch {
                expected: 1,
                got: k,
            });
        }
        if form.degree().is_none() && !form.is_zero() {
            return Err(Error::NotHomogeneous);
        }
        let mut out = Multivector::zero();
        for (blade, c) in form.terms() {
            let i = blade.indices().next().expect("degree one");
            if let Some((sign, j)) = self.image(axis, i) {
                out.add_term(Blade::single(j), c * rat(sign as i64));
            }
        }
        Ok(out)
    }

    /// `φ_α E_index` in the dual frame: the transpose of the pullback table.
    pub fn apply_to_vector(&self, axis: Axis, vector: &KVector) -> KVector {
        let mut out = Multivector::zero();
        for (source, c) in vector.components() {
            for j in 0..self.dims.dim() {
                if let Some((sign, target)) = self.image(axis, j) {
                    if target == source {
                        out.add_term(Blade::single(j), &c * rat(sign as i64));
                    }
                }
            }
        }
        KVector(out)
    }

    /// Checks `φ*_α² = -1` on η-free labels, `φ*_αφ*_β = -φ*_γ`,
    /// `φ*_βφ*_α = φ*_γ` and the η rules, entry by entry.
    pub fn composition_report(&self) -> IdentityReport {
        let mut check = CheckBuilder::new(
            "phi_star_composition",
            "phi*_a^2 = -1 on eta-free covectors, phi*_a phi*_b = -phi*_g, phi*_b phi*_a = phi*_g, eta_d o phi_a = sum eps_dae eta_e",
        );
        let dims = self.dims;
        for i in 0..dims.dim() {
            let theta = Multivector::basis(i);
            let horizontal = i < dims.horizontal_dim();
            for a in Axis::ALL {
                let (b, g) = a.cyclic();
                let aa = self.apply(a, &self.apply(a, &theta).unwrap()).unwrap();
                if horizontal && aa != -&theta {
                    check.fail(blade_label(dims, Blade::single(i)), format!("phi*_{a}^2 != -1"));
                }
                let ab = self.apply(a, &self.apply(b, &theta).unwrap()).unwrap();
                let ba = self.apply(b, &self.apply(a, &theta).unwrap()).unwrap();
                let gg = self.apply(g, &theta).unwrap();
                if horizontal && (ab != -&gg || ba != gg) {
                    check.fail(
                        blade_label(dims, Blade::single(i)),
                        format!("phi*_{a} phi*_{b} != -phi*_{g}"),
                    );
                }
            }
        }
        for delta in Axis::ALL {
            let eta = Multivector::basis(FrameLabel::Eta(delta).index(dims).unwrap());
            for a in Axis::ALL {
                let mut expected = Multivector::zero();
                for e in Axis::ALL {
                    let eps = epsilon(delta, a, e);
                    if eps != 0 {
                        expected.add_term(
                            Blade::single(FrameLabel::Eta(e).index(dims).unwrap()),
                            rat(eps as i64),
                        );
                    }
                }
                if self.apply(a, &eta).unwrap() != expected {
                    check.fail(format!("eta{delta}"), format!("eta_{delta} o phi_{a} wrong"));
                }
            }
        }
        check.finish()
    }
}

/// The flat model: dimensions plus a φ* table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactModel {
    dims: ModelDims,
    table: PhiStarTable,
}

impl ContactModel {
    pub fn new(n: usize) -> Result<Self> {
        let dims = ModelDims::new(n)?;
        Ok(Self {
            dims,
            table: PhiStarTable::standard(dims),
        })
    }

    pub fn with_table(table: PhiStarTable) -> Self {
        Self {
            dims: table.dims(),
            table,
        }
    }

    pub fn dims(&self) -> ModelDims {
        self.dims
    }

    pub fn table(&self) -> &PhiStarTable {
        &self.table
    }

    pub fn index(&self, label: FrameLabel) -> Result<usize> {
        label.index(self.dims)
    }

    pub fn coframe(&self, label: FrameLabel) -> Result<Multivector> {
        Ok(Multivector::basis(self.index(label)?))
    }

    pub fn zeta(&self, s: usize) -> Result<Multivector> {
        self.coframe(FrameLabel::Zeta(s))
    }

    pub fn eta(&self, axis: Axis) -> Multivector {
        self.coframe(FrameLabel::Eta(axis)).expect("eta always valid")
    }

    /// `φ*_α` applied to a one-form.
    pub fn phi_star(&self, axis: Axis, form: &Multivector) -> Result<Multivector> {
        self.table.apply(axis, form)
    }

    /// `φ*_α ζ_s` computed through the table.
    pub fn phi_zeta(&self, axis: Axis, s: usize) -> Result<Multivector> {
        self.phi_star(axis, &self.zeta(s)?)
    }

    pub fn frame_x(&self, s: usize) -> Result<KVector> {
        Ok(KVector::basis(self.index(FrameLabel::Zeta(s))?))
    }

    /// `φ_α X_s`.
    pub fn frame_phi_x(&self, axis: Axis, s: usize) -> Result<KVector> {
        Ok(self.table.apply_to_vector(axis, &self.frame_x(s)?))
    }

    pub fn xi(&self, axis: Axis) -> KVector {
        KVector::basis(FrameLabel::Eta(axis).index(self.dims).expect("valid"))
    }

    /// The orthonormal frame `X_s, φ_1X_s, φ_2X_s, φ_3X_s (s = 1..n), ξ_1, ξ_2, ξ_3`.
    pub fn frame(&self) -> Vec<(String, KVector)> {
        let mut out = Vec::new();
        for s in 1..=self.dims.n() {
            out.push((format!("X{s}"), self.frame_x(s).unwrap()));
            for a in Axis::ALL {
                out.push((format!("phi{a}X{s}"), self.frame_phi_x(a, s).unwrap()));
            }
        }
        for a in Axis::ALL {
            out.push((format!("xi{a}"), self.xi(a)));
        }
        out
    }

    /// `Σ_s (ζ_s ∧ φ*_αζ_s − φ*_βζ_s ∧ φ*_γζ_s)`.
    pub fn xi_form(&self, axis: Axis) -> Multivector {
        let (b, g) = axis.cyclic();
        let mut out = Multivector::zero();
        for s in 1..=self.dims.n() {
            let z = self.zeta(s).unwrap();
            out += z.wedge(&self.phi_zeta(axis, s).unwrap());
            out += -self
                .phi_zeta(b, s)
                .unwrap()
                .wedge(&self.phi_zeta(g, s).unwrap());
        }
        out
    }

    /// `Φ_α = 2 Σ_s (ζ_s ∧ φ*_αζ_s − φ*_βζ_s ∧ φ*_γζ_s) − 2 η_β ∧ η_γ`.
    pub fn fundamental_form(&self, axis: Axis) -> Multivector {
        let (b, g) = axis.cyclic();
        let two = rat(2);
        self.xi_form(axis).scale(&two) - self.eta(b).wedge(&self.eta(g)).scale(&two)
    }

    /// `Ξ_α` obtained from the fundamental form: `½(Φ_α + 2 η_β ∧ η_γ)`.
    pub fn xi_form_from_fundamental(&self, axis: Axis) -> Multivector {
        let (b, g) = axis.cyclic();
        let sum = self.fundamental_form(axis) + self.eta(b).wedge(&self.eta(g)).scale(&rat(2));
        sum.scale(&crate::ratio(1, 2))
    }

    /// `Φ_α(V, W) = g(V, φ_α W)` from the metric, independent of the explicit formula.
    pub fn fundamental_form_metric(&self, axis: Axis, v: &KVector, w: &KVector) -> Rational {
        let phi_w = self.table.apply_to_vector(axis, w).components();
        v.components()
            .iter()
            .map(|(i, c)| c * phi_w.get(i).cloned().unwrap_or_else(Rational::zero))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Checks the pairing table of `Φ_α` against every basis bivector of the frame:
    /// `-1` on `X_s∧φ_αX_s`, `φ_βX_s∧φ_γX_s`, `ξ_β∧ξ_γ`, `0` elsewhere, and agreement
    /// with the metric definition.
    pub fn fundamental_form_table_report(&self) -> IdentityReport {
        let mut check = CheckBuilder::new(
            "fundamental_form_pairings",
            "<Phi_a, X_s^phi_a X_s> = <Phi_a, phi_b X_s^phi_g X_s> = <Phi_a, xi_b^xi_g> = -1, zero on all other frame bivectors, and <Phi_a, V^W> = g(V, phi_a W)",
        );
        let frame = self.frame();
        for a in Axis::ALL {
            let (b, g) = a.cyclic();
            let phi = self.fundamental_form(a);
            let mut listed = Vec::new();
            for s in 1..=self.dims.n() {
                listed.push((format!("X{s}"), format!("phi{a}X{s}")));
                listed.push((format!("phi{b}X{s}"), format!("phi{g}X{s}")));
            }
            listed.push((format!("xi{b}"), format!("xi{g}")));
            for i in 0..frame.len() {
                for j in i + 1..frame.len() {
                    let (ni, vi) = &frame[i];
                    let (nj, vj) = &frame[j];
                    let value = phi.pairing(&vi.wedge(vj)).unwrap();
                    // listed pairs may appear reversed in frame order
                    let expected = if listed.contains(&(ni.clone(), nj.clone())) {
                        rat(-1)
                    } else if listed.contains(&(nj.clone(), ni.clone())) {
                        rat(1)
                    } else {
                        Rational::zero()
                    };
                    let metric = self.fundamental_form_metric(a, vi, vj);
                    if value != expected {
                        check.fail(
                            format!("alpha={a}: {ni}^{nj}"),
                            format!("pairing {value}, expected {expected}"),
                        );
                    }
                    if value != metric {
                        check.fail(
                            format!("alpha={a}: {ni}^{nj}"),
                            format!("pairing {value} != g(V, phi W) = {metric}"),
                        );
                    }
                }
            }
        }
        check.finish().with_max_degree(2)
    }

    /// Building-block pairings `⟨ζ∧φ*_αζ, X∧φ_αX⟩ = -1/2`, `⟨φ*_βζ∧φ*_γζ, φ_βX∧φ_γX⟩ = 1/2`,
    /// `⟨η_β∧η_γ, ξ_β∧ξ_γ⟩ = 1/2`.
    pub fn building_block_report(&self) -> IdentityReport {
        let mut check = CheckBuilder::new(
            "fundamental_form_building_blocks",
            "<zeta^phi*_a zeta, X^phi_a X> = -1/2, <phi*_b zeta^phi*_g zeta, phi_b X^phi_g X> = 1/2, <eta_b^eta_g, xi_b^xi_g> = 1/2",
        );
        let half = crate::ratio(1, 2);
        for a in Axis::ALL {
            let (b, g) = a.cyclic();
            for s in 1..=self.dims.n() {
                let z = self.zeta(s).unwrap();
                let x = self.frame_x(s).unwrap();
                let lhs = z
                    .wedge(&self.phi_zeta(a, s).unwrap())
                    .pairing(&x.wedge(&self.frame_phi_x(a, s).unwrap()))
                    .unwrap();
                if lhs != -&half {
                    check.fail(format!("alpha={a} s={s}"), format!("zeta term {lhs}"));
                }
                let lhs = self
                    .phi_zeta(b, s)
                    .unwrap()
                    .wedge(&self.phi_zeta(g, s).unwrap())
                    .pairing(
                        &self
                            .frame_phi_x(b, s)
                            .unwrap()
                            .wedge(&self.frame_phi_x(g, s).unwrap()),
                    )
                    .unwrap();
                if lhs != half {
                    check.fail(format!("alpha={a} s={s}"), format!("phi term {lhs}"));
                }
            }
            let lhs = self
                .eta(b)
                .wedge(&self.eta(g))
                .pairing(&self.xi(b).wedge(&self.xi(g)))
                .unwrap();
            if lhs != half {
                check.fail(format!("alpha={a}"), format!("eta term {lhs}"));
            }
        }
        check.finish().with_max_degree(2)
    }

    /// `i_{φ_αX_s}(φ*_αζ_t) = -δ_st` for all `s, t, α`.
    pub fn dual_pairing_report(&self) -> IdentityReport {
        let mut check = CheckBuilder::new(
            "phi_frame_duality",
            "i_{phi_a X_s}(phi*_a zeta_t) = -delta_st",
        );
        let n = self.dims.n();
        for a in Axis::ALL {
            for s in 1..=n {
                let v = self.frame_phi_x(a, s).unwrap();
                for t in 1..=n {
                    let value = self
                        .phi_zeta(a, t)
                        .unwrap()
                        .interior_vector(&v)
                        .unwrap()
                        .coefficient(&Blade::SCALAR);
                    let expected = if s == t { rat(-1) } else { Rational::zero() };
                    if value != expected {
                        check.fail(format!("alpha={a} s={s} t={t}"), format!("got {value}"));
                    }
                }
            }
        }
        check.finish().with_max_degree(1)
    }

    /// `Ξ_α` from `Φ_α` equals the explicit sum, carries no η factor, and
    /// is annihilated by every `i_{ξ_μ}`.
    pub fn xi_form_report(&self) -> IdentityReport {
        let mut check = CheckBuilder::new(
            "xi_form_consistency",
            "(Phi_a + 2 eta_b^eta_g)/2 = sum(zeta^phi*_a zeta - phi*_b zeta^phi*_g zeta), eta-free, i_{xi_m} Xi_a = 0",
        );
        let horizontal_mask = (1u32 << self.dims.horizontal_dim()) - 1;
        for a in Axis::ALL {
            let explicit = self.xi_form(a);
            let derived = self.xi_form_from_fundamental(a);
            if explicit != derived {
                check.fail(format!("alpha={a}"), "two definitions disagree");
            }
            if explicit
                .terms()
                .any(|(b, _)| b.mask() & !horizontal_mask != 0)
            {
                check.fail(format!("alpha={a}"), "contains an eta factor");
            }
            for m in Axis::ALL {
                if !explicit.interior_vector(&self.xi(m)).unwrap().is_zero() {
                    check.fail(format!("alpha={a} mu={m}"), "i_xi Xi != 0");
                }
            }
        }
        check.finish().with_max_degree(2)
    }
}

/// Multiplies a one-form coefficient vector check helper used in tests.
#[cfg(test)]
fn single(dims: ModelDims, label: FrameLabel, c: i64) -> Multivector {
    Multivector::term(Blade::single(label.index(dims).unwrap()), rat(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(n: usize) -> ContactModel {
        ContactModel::new(n).unwrap()
    }

    fn ax(a: u8) -> Axis {
        Axis::new(a).unwrap()
    }

    #[test]
    fn labels_biject_with_indices() {
        for n in 0..=3 {
            let dims = ModelDims::new(n).unwrap();
            for i in 0..dims.dim() {
                let l = FrameLabel::from_index(i, dims).unwrap();
                assert_eq!(l.index(dims).unwrap(), i);
            }
        }
        let dims = ModelDims::new(2).unwrap();
        assert_eq!(FrameLabel::PhiZeta(ax(2), 1).index(dims).unwrap(), 4);
        assert_eq!(FrameLabel::Eta(ax(1)).index(dims).unwrap(), 8);
        assert!(FrameLabel::Zeta(3).index(dims).is_err());
    }

    #[test]
    fn phi_star_table_examples() {
        let m = model(1);
        let d = m.dims();
        let z = m.zeta(1).unwrap();
        assert_eq!(
            m.phi_star(ax(1), &z).unwrap(),
            single(d, FrameLabel::PhiZeta(ax(1), 1), 1)
        );
        let composed = m
            .phi_star(ax(1), &m.phi_star(ax(2), &z).unwrap())
            .unwrap();
        assert_eq!(composed, -&m.phi_zeta(ax(3), 1).unwrap());
        // η_3 ∘ φ_2 = ε_321 η_1 = -η_1
        assert_eq!(
            m.phi_star(ax(2), &m.eta(ax(3))).unwrap(),
            single(d, FrameLabel::Eta(ax(1)), -1)
        );
        assert!(m.phi_star(ax(2), &m.eta(ax(2))).unwrap().is_zero());
    }

    #[test]
    fn phi_star_rejects_non_one_forms() {
        let m = model(1);
        let two = m.zeta(1).unwrap().wedge(&m.eta(ax(1)));
        assert!(matches!(
            m.phi_star(ax(1), &two),
            Err(Error::DegreeMismatch { expected: 1, got: 2 })
        ));
    }

    #[test]
    fn composition_laws_hold() {
        for n in 0..=3 {
            assert!(model(n).table().composition_report().passed);
        }
    }

    #[test]
    fn fundamental_form_pairing_examples() {
        let m = model(1);
        let phi1 = m.fundamental_form(ax(1));
        let x = m.frame_x(1).unwrap();
        let v = x.wedge(&m.frame_phi_x(ax(1), 1).unwrap());
        assert_eq!(phi1.pairing(&v).unwrap(), rat(-1));
        let v = x.wedge(&m.frame_phi_x(ax(2), 1).unwrap());
        assert_eq!(phi1.pairing(&v).unwrap(), rat(0));
        let v = m.xi(ax(2)).wedge(&m.xi(ax(3)));
        assert_eq!(phi1.pairing(&v).unwrap(), rat(-1));
    }

    #[test]
    fn xi_form_explicit_n1() {
        let m = model(1);
        let d = m.dims();
        let expected = Multivector::from_blade(Blade::from_indices([0, 1]).unwrap())
            - Multivector::from_blade(Blade::from_indices([2, 3]).unwrap());
        assert_eq!(m.xi_form(ax(1)), expected);
        assert_eq!(m.xi_form(ax(1)).leading_blade(), Blade::from_indices([0, 1]).ok());
        assert!(m
            .xi_form(ax(1))
            .interior(FrameLabel::Eta(ax(2)).index(d).unwrap())
            .is_zero());
    }

    #[test]
    fn reports_pass_for_standard_model() {
        for n in 1..=2 {
            let m = model(n);
            assert!(m.fundamental_form_table_report().passed);
            assert!(m.building_block_report().passed);
            assert!(m.dual_pairing_report().passed);
            assert!(m.xi_form_report().passed);
        }
    }

    #[test]
    fn sign_flip_breaks_composition() {
        let dims = ModelDims::new(1).unwrap();
        let table = PhiStarTable::standard(dims).with_sign_flip(ax(1), 1);
        let report = table.composition_report();
        assert!(!report.passed);
        assert!(report.witness.is_some());
    }

    #[test]
    fn phi_acts_on_frame_vectors_by_transpose() {
        // φ_α X_s = -E_{φ*_α ζ_s}, φ_α ξ_β = ξ_γ
        let m = model(1);
        let d = m.dims();
        for a in Axis::ALL {
            let (b, g) = a.cyclic();
            let idx = FrameLabel::PhiZeta(a, 1).index(d).unwrap();
            assert_eq!(m.frame_phi_x(a, 1).unwrap(), KVector::basis(idx).scale(&rat(-1)));
            let image = m.table().apply_to_vector(a, &m.xi(b));
            assert_eq!(image, m.xi(g));
            assert!(m.table().apply_to_vector(a, &m.xi(a)).0.is_zero());
        }
    }

    #[test]
    fn scalar_one_is_one() {
        assert_eq!(Multivector::one().coefficient(&Blade::SCALAR), rat(1));
    }
}
