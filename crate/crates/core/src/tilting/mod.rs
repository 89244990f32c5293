//! The subcategory `C_Λ` of modules generated and cogenerated by the
//! projective-injectives, the canonical tilting and cotilting modules in it,
//! the induced torsion pair, and the tiltedness test for Auslander algebras.

use serde::Serialize;

use crate::algebra::BoundQuiverAlgebra;
use crate::auslander_reiten::ar_translate;
use crate::decomposition::{
    decompose, group_summands, indecomposable_summands, is_indecomposable, is_isomorphic, Decomposition,
    IndecomposableLibrary,
};
use crate::error::{Error, Result};
use crate::homological::{
    cosyzygy, dominant_dimension, ext_dim, global_dimension, injective_dimension, is_injective, is_projective,
    projective_dimension, syzygy, HomDim,
};
use crate::module::{cogen_membership, dual_regular, gen_membership, injective, projective, Representation};

#[cfg(test)]
mod tests;

/// `Q̃`: one copy of each indecomposable projective-injective.
pub fn projective_injectives(a: &BoundQuiverAlgebra) -> Decomposition {
    let parts = (0..a.vertex_count())
        .map(|i| projective(a, i))
        .filter(is_injective)
        .collect();
    group_summands(parts)
}

fn sum_of(a: &BoundQuiverAlgebra, d: &Decomposition) -> Representation {
    Representation::direct_sum(a, &d.flat())
}

/// Membership of `X` in `Gen Q̃` and `Cogen Q̃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubcategoryWitness {
    pub generated: bool,
    pub cogenerated: bool,
}

impl SubcategoryWitness {
    /// `X` lies in `C_Λ`.
    pub fn in_c(&self) -> bool {
        self.generated && self.cogenerated
    }
}

pub fn c_lambda_membership(a: &BoundQuiverAlgebra, x: &Representation) -> Result<SubcategoryWitness> {
    let q = sum_of(a, &projective_injectives(a));
    Ok(SubcategoryWitness {
        generated: gen_membership(x, &q)?,
        cogenerated: cogen_membership(x, &q)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TiltingKind {
    Tilting,
    Cotilting,
}

/// Outcome of the three tilting (or cotilting) checks.
#[derive(Clone, Debug)]
pub struct TiltingCertificate {
    pub kind: TiltingKind,
    pub module: Decomposition,
    /// Largest `pd` (tilting) or `id` (cotilting) over the summands.
    pub max_dimension: HomDim,
    pub dimension_ok: bool,
    pub ext1: usize,
    pub summand_count: usize,
    pub vertex_count: usize,
}

impl TiltingCertificate {
    pub fn certified(&self) -> bool {
        self.dimension_ok && self.ext1 == 0 && self.summand_count == self.vertex_count
    }
}

fn certify(a: &BoundQuiverAlgebra, t: &Decomposition, kind: TiltingKind) -> Result<TiltingCertificate> {
    let dim = |m: &Representation| match kind {
        TiltingKind::Tilting => projective_dimension(m),
        TiltingKind::Cotilting => injective_dimension(m),
    };
    let max_dimension = t.modules().map(dim).max().unwrap_or(HomDim::Finite(0));
    let sum = sum_of(a, t);
    Ok(TiltingCertificate {
        kind,
        module: t.clone(),
        max_dimension,
        dimension_ok: max_dimension.is_at_most(1),
        ext1: ext_dim(&sum, &sum, 1)?,
        summand_count: t.distinct(),
        vertex_count: a.vertex_count(),
    })
}

/// `pd ≤ 1` on every summand, `Ext¹(T, T) = 0`, and as many non-isomorphic
/// summands as vertices.
pub fn verify_tilting(a: &BoundQuiverAlgebra, t: &Decomposition) -> Result<TiltingCertificate> {
    certify(a, t, TiltingKind::Tilting)
}

/// `id ≤ 1` on every summand, `Ext¹(C, C) = 0`, and as many non-isomorphic
/// summands as vertices.
pub fn verify_cotilting(a: &BoundQuiverAlgebra, c: &Decomposition) -> Result<TiltingCertificate> {
    certify(a, c, TiltingKind::Cotilting)
}

/// `T_C` or `C_C` together with its certificate and the `C_Λ` membership of
/// each summand (in the order of `certificate.module`).
#[derive(Clone, Debug)]
pub struct CanonicalModule {
    pub module: Representation,
    pub certificate: TiltingCertificate,
    pub membership: Vec<SubcategoryWitness>,
}

impl CanonicalModule {
    pub fn decomposition(&self) -> &Decomposition {
        &self.certificate.module
    }

    pub fn all_in_c(&self) -> bool {
        self.membership.iter().all(SubcategoryWitness::in_c)
    }
}

fn canonical(a: &BoundQuiverAlgebra, kind: TiltingKind) -> Result<Option<CanonicalModule>> {
    if !dominant_dimension(a).is_at_least(2) {
        return Ok(None);
    }
    let mut parts = projective_injectives(a).flat();
    for i in 0..a.vertex_count() {
        let extra = match kind {
            TiltingKind::Tilting => {
                let p = projective(a, i);
                (!is_injective(&p)).then(|| cosyzygy(&p, 1))
            }
            TiltingKind::Cotilting => {
                let q = injective(a, i);
                (!is_projective(&q)).then(|| syzygy(&q, 1))
            }
        };
        if let Some(x) = extra {
            parts.extend(indecomposable_summands(&x)?);
        }
    }
    let module = group_summands(parts);
    let membership = module
        .modules()
        .map(|x| c_lambda_membership(a, x))
        .collect::<Result<_>>()?;
    Ok(Some(CanonicalModule {
        module: sum_of(a, &module),
        certificate: certify(a, &module, kind)?,
        membership,
    }))
}

/// `Q̃ ⊕ ⨁ Ω⁻¹P(i)` over the projective non-injective `P(i)`, present exactly
/// when `domdim A ≥ 2`.
pub fn canonical_tilting_in_c(a: &BoundQuiverAlgebra) -> Result<Option<CanonicalModule>> {
    canonical(a, TiltingKind::Tilting)
}

/// `Q̃ ⊕ ⨁ ΩI(i)` over the injective non-projective `I(i)`, present exactly
/// when `domdim A ≥ 2`.
pub fn canonical_cotilting_in_c(a: &BoundQuiverAlgebra) -> Result<Option<CanonicalModule>> {
    canonical(a, TiltingKind::Cotilting)
}

/// The decompositions agree as multisets up to isomorphism.
pub fn same_summands(x: &Decomposition, y: &Decomposition) -> bool {
    x.distinct() == y.distinct()
        && x.summands
            .iter()
            .all(|(m, k)| y.summands.iter().any(|(n, l)| k == l && is_isomorphic(m, n)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TorsionClass {
    Torsion,
    Free,
    Neither,
    BothZero,
}

/// The torsion pair `(Gen T, Cogen τT)` of a tilting module `T`.
#[derive(Clone, Debug)]
pub struct TorsionPair {
    pub tilting: Representation,
    pub tau: Representation,
}

impl TorsionPair {
    pub fn new(t: &Representation) -> Self {
        TorsionPair {
            tilting: t.clone(),
            tau: ar_translate(t),
        }
    }

    pub fn is_torsion(&self, x: &Representation) -> Result<bool> {
        gen_membership(x, &self.tilting)
    }

    pub fn is_free(&self, x: &Representation) -> Result<bool> {
        cogen_membership(x, &self.tau)
    }

    /// Class of an indecomposable `X`.
    pub fn assign(&self, x: &Representation) -> Result<TorsionClass> {
        if x.is_zero() {
            return Ok(TorsionClass::BothZero);
        }
        if !is_indecomposable(x)? {
            return Err(Error::Decomposable(format!("dimension vector {:?}", x.dim_vector())));
        }
        Ok(match (self.is_torsion(x)?, self.is_free(x)?) {
            (true, false) => TorsionClass::Torsion,
            (false, true) => TorsionClass::Free,
            (false, false) => TorsionClass::Neither,
            (true, true) => {
                return Err(Error::Inconsistent("nonzero module both torsion and torsion-free".into()));
            }
        })
    }
}

pub fn torsion_assignment(t: &Representation, x: &Representation) -> Result<TorsionClass> {
    TorsionPair::new(t).assign(x)
}

/// Library indices by torsion class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub torsion: Vec<usize>,
    pub free: Vec<usize>,
    pub neither: Vec<usize>,
}

impl Partition {
    pub fn splitting(&self) -> bool {
        self.neither.is_empty()
    }
}

pub fn partition(pair: &TorsionPair, lib: &IndecomposableLibrary) -> Result<Partition> {
    let mut out = Partition::default();
    for (i, x) in lib.modules.iter().enumerate() {
        match pair.assign(x)? {
            TorsionClass::Torsion => out.torsion.push(i),
            TorsionClass::Free => out.free.push(i),
            TorsionClass::Neither => out.neither.push(i),
            TorsionClass::BothZero => {}
        }
    }
    Ok(out)
}

/// Every library member is torsion or torsion-free.
pub fn is_splitting(t: &Representation, lib: &IndecomposableLibrary) -> Result<(bool, Partition)> {
    let p = partition(&TorsionPair::new(t), lib)?;
    Ok((p.splitting(), p))
}

/// Both sides of "splitting ⟺ pd ≤ 1 on the torsion-free class", computed
/// separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingCriterion {
    /// `τ` maps every torsion-free indecomposable into the torsion-free class.
    pub splitting: bool,
    /// Largest `pd` over the torsion-free indecomposables; 0 when none.
    pub max_pd_on_f: HomDim,
    pub consistent: bool,
}

pub fn check_splitting_criterion(t: &Representation, lib: &IndecomposableLibrary) -> Result<SplittingCriterion> {
    let pair = TorsionPair::new(t);
    let mut splitting = true;
    let mut max_pd_on_f = HomDim::Finite(0);
    for x in &lib.modules {
        if !pair.is_free(x)? {
            continue;
        }
        max_pd_on_f = max_pd_on_f.max(projective_dimension(x));
        if splitting && !pair.is_free(&ar_translate(x))? {
            splitting = false;
        }
    }
    Ok(SplittingCriterion {
        splitting,
        max_pd_on_f,
        consistent: splitting == max_pd_on_f.is_at_most(1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuslanderCheck {
    pub gl_dim: HomDim,
    pub dom_dim: HomDim,
    pub is_auslander: bool,
    /// For `gl.dim = 2`: `T_C` exists and is isomorphic to `C_C`.
    pub tilting_cotilting: Option<bool>,
}

/// `gl.dim ≤ 2` and `domdim ≥ 2`.
pub fn auslander_check(a: &BoundQuiverAlgebra) -> Result<AuslanderCheck> {
    let gl_dim = global_dimension(a);
    let dom_dim = dominant_dimension(a);
    let is_auslander = gl_dim.is_at_most(2) && dom_dim.is_at_least(2);
    let tilting_cotilting = if gl_dim == HomDim::Finite(2) {
        let t = canonical_tilting_in_c(a)?;
        let c = canonical_cotilting_in_c(a)?;
        Some(match (t, c) {
            (Some(t), Some(c)) => same_summands(t.decomposition(), c.decomposition()),
            _ => false,
        })
    } else {
        None
    };
    if tilting_cotilting.is_some_and(|tc| tc != is_auslander) {
        return Err(Error::Inconsistent(
            "Auslander test disagrees with the tilting-cotilting criterion".into(),
        ));
    }
    Ok(AuslanderCheck {
        gl_dim,
        dom_dim,
        is_auslander,
        tilting_cotilting,
    })
}

pub fn is_auslander(a: &BoundQuiverAlgebra) -> Result<bool> {
    Ok(auslander_check(a)?.is_auslander)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Tilted,
    NotTilted,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Tilted => "tilted",
            Verdict::NotTilted => "not_tilted",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TiltedVerdict {
    pub auslander: AuslanderCheck,
    pub omega_da: Decomposition,
    pub tau_omega_da: Decomposition,
    pub pd_of_tau_omega_da: HomDim,
    pub verdict: Verdict,
    pub note: Option<String>,
}

impl TiltedVerdict {
    pub fn is_auslander(&self) -> bool {
        self.auslander.is_auslander
    }
}

/// For an Auslander algebra of `gl.dim 2`: tilted exactly when
/// `pd τΩDA ≤ 1`. Auslander algebras of `gl.dim ≤ 1` are hereditary, hence
/// tilted; other algebras are not assessed.
pub fn tilted_verdict(a: &BoundQuiverAlgebra) -> Result<TiltedVerdict> {
    let auslander = auslander_check(a)?;
    let omega = syzygy(&dual_regular(a), 1);
    let tau_omega = ar_translate(&omega);
    let pd = projective_dimension(&tau_omega);
    let (verdict, note) = if !auslander.is_auslander {
        (Verdict::NotApplicable, Some("not an Auslander algebra".to_string()))
    } else if auslander.gl_dim.is_at_most(1) {
        (Verdict::Tilted, Some("hereditary".to_string()))
    } else if pd.is_at_most(1) {
        (Verdict::Tilted, None)
    } else {
        (Verdict::NotTilted, None)
    };
    Ok(TiltedVerdict {
        auslander,
        omega_da: decompose(&omega)?,
        tau_omega_da: decompose(&tau_omega)?,
        pd_of_tau_omega_da: pd,
        verdict,
        note,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiTilted {
    pub quasi_tilted: bool,
    /// `gl.dim > 2`, so the answer is `false` by definition.
    pub gl_dim_exceeds: bool,
    /// Library indices with both `pd ≥ 2` and `id ≥ 2`.
    pub offenders: Vec<usize>,
}

/// `gl.dim ≤ 2` and every indecomposable has `pd ≤ 1` or `id ≤ 1`.
pub fn is_quasi_tilted(lib: &IndecomposableLibrary) -> QuasiTilted {
    let gl_dim_exceeds = !global_dimension(&lib.algebra).is_at_most(2);
    let offenders: Vec<usize> = lib
        .modules
        .iter()
        .enumerate()
        .filter(|(_, x)| !projective_dimension(x).is_at_most(1) && !injective_dimension(x).is_at_most(1))
        .map(|(i, _)| i)
        .collect();
    QuasiTilted {
        quasi_tilted: !gl_dim_exceeds && offenders.is_empty(),
        gl_dim_exceeds,
        offenders,
    }
}
