//! Transport of `S_G` along groupoid isomorphisms, and the embedding of
//! `S_T` into `S_G` for a transformation groupoid `G = U × T`.

use alloc::vec;
use alloc::vec::Vec;

use crate::action::{transformation_groupoid, GroupAction};
use crate::endo::{left_translation, star_into, GFun, Side};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::limits::Limits;
use crate::morphism::{isomorphisms, morphism_classify};
use crate::table::MonoidTable;

fn invert(psi: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; psi.len()];
    for (x, &y) in psi.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

/// `ψ ∘ f ∘ ψ⁻¹` for a bijection `ψ`.
pub fn induced_map(psi: &[usize], f: &[usize]) -> Vec<usize> {
    let inv = invert(psi);
    (0..psi.len()).map(|y| psi[f[inv[y]]]).collect()
}

fn require_iso(g: &Groupoid, h: &Groupoid, psi: &[usize]) -> Result<()> {
    if morphism_classify(g, h, psi)?.isomorphism {
        Ok(())
    } else {
        Err(Error::NotAnIsomorphism)
    }
}

/// `Ψ(f) = ψ f ψ⁻¹ ∈ S_H` for `f ∈ S_G` and an isomorphism `ψ : G → H`.
pub fn induced_monoid_map<'h>(h: &'h Groupoid, psi: &[usize], f: &GFun<'_>) -> Result<GFun<'h>> {
    let g = f.base();
    require_iso(g, h, psi)?;
    f.require(Side::S)?;
    GFun::new(h, induced_map(psi, f.map()))
}

/// Index map `S_G → S_H` induced by `ψ`, or the first element whose image
/// is not in the target table.
fn index_map(
    ts: &MonoidTable,
    th: &MonoidTable,
    psi: &[usize],
) -> core::result::Result<Vec<usize>, usize> {
    (0..ts.len())
        .map(|i| th.index_of(&induced_map(psi, ts.map(i))).ok_or(i))
        .collect()
}

/// Whether an index map is a bijective monoid homomorphism between tables.
fn monoid_iso_failure(ts: &MonoidTable, th: &MonoidTable, pi: &[usize]) -> Option<Vec<usize>> {
    if ts.len() != th.len() {
        return Some(Vec::new());
    }
    if pi[ts.identity()] != th.identity() {
        return Some(vec![ts.identity()]);
    }
    let mut seen = vec![false; th.len()];
    for (i, &k) in pi.iter().enumerate() {
        if core::mem::replace(&mut seen[k], true) {
            return Some(vec![i]);
        }
    }
    for a in 0..ts.len() {
        for b in 0..ts.len() {
            if pi[ts.product(a, b)] != th.product(pi[a], pi[b]) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorAudit {
    pub elements: usize,
    /// `Ψ_ψ` and `Ψ_φ` are monoid isomorphisms of the enumerated tables.
    pub monoid_isomorphisms: bool,
    /// `Ψ_{φ∘ψ} = Ψ_φ ∘ Ψ_ψ` on every element.
    pub composite: bool,
    /// `Ψ_id` fixes every element.
    pub identity: bool,
    pub witness: Option<Vec<usize>>,
}

impl FunctorAudit {
    pub fn pass(&self) -> bool {
        self.monoid_isomorphisms && self.composite && self.identity
    }
}

/// Audits the functor laws for isomorphisms `ψ : G → H` and `φ : H → K`.
pub fn functoriality_audit(
    g: &Groupoid,
    h: &Groupoid,
    k: &Groupoid,
    psi: &[usize],
    phi: &[usize],
    limits: &Limits,
) -> Result<FunctorAudit> {
    require_iso(g, h, psi)?;
    require_iso(h, k, phi)?;
    let tg = MonoidTable::enumerate(g, Side::S, limits)?;
    let th = MonoidTable::enumerate(h, Side::S, limits)?;
    let tk = MonoidTable::enumerate(k, Side::S, limits)?;
    let mut audit = FunctorAudit {
        elements: tg.len(),
        monoid_isomorphisms: true,
        composite: true,
        identity: true,
        witness: None,
    };
    let (pi_psi, pi_phi) = match (index_map(&tg, &th, psi), index_map(&th, &tk, phi)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(i), _) | (_, Err(i)) => {
            audit.monoid_isomorphisms = false;
            audit.composite = false;
            audit.witness = Some(vec![i]);
            return Ok(audit);
        }
    };
    if let Some(w) =
        monoid_iso_failure(&tg, &th, &pi_psi).or_else(|| monoid_iso_failure(&th, &tk, &pi_phi))
    {
        audit.monoid_isomorphisms = false;
        audit.witness = Some(w);
    }
    let both: Vec<usize> = (0..g.len()).map(|x| phi[psi[x]]).collect();
    let id: Vec<usize> = (0..g.len()).collect();
    for i in 0..tg.len() {
        let f = tg.map(i);
        if induced_map(&both, f) != tk.map(pi_phi[pi_psi[i]]) {
            audit.composite = false;
            audit.witness.get_or_insert_with(|| vec![i]);
        }
        if induced_map(&id, f) != f {
            audit.identity = false;
            audit.witness.get_or_insert_with(|| vec![i]);
        }
    }
    Ok(audit)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismAudit {
    /// Automorphisms examined.
    pub automorphisms: usize,
    /// The search stopped at [`Limits::max_automorphisms`].
    pub truncated: bool,
    /// Every `Ψ_ψ` is an automorphism of the `S_G` table.
    pub monoid_automorphisms: bool,
    /// Composite law over all ordered pairs of examined automorphisms.
    pub composite: bool,
    pub identity: bool,
    pub witness: Option<Vec<usize>>,
}

impl AutomorphismAudit {
    pub fn pass(&self) -> bool {
        self.monoid_automorphisms && self.composite && self.identity
    }
}

/// Transports `S_G` along every automorphism of `G` (up to the limit).
pub fn automorphism_audit(g: &Groupoid, t: &MonoidTable, limits: &Limits) -> AutomorphismAudit {
    let cap = limits.max_automorphisms;
    let mut autos = isomorphisms(g, g, cap.saturating_add(1));
    let truncated = autos.len() > cap;
    autos.truncate(cap);
    let mut audit = AutomorphismAudit {
        automorphisms: autos.len(),
        truncated,
        monoid_automorphisms: true,
        composite: true,
        identity: true,
        witness: None,
    };
    let mut maps = Vec::with_capacity(autos.len());
    for (a, psi) in autos.iter().enumerate() {
        match index_map(t, t, psi) {
            Ok(pi) => {
                if let Some(mut w) = monoid_iso_failure(t, t, &pi) {
                    audit.monoid_automorphisms = false;
                    w.insert(0, a);
                    audit.witness.get_or_insert(w);
                }
                maps.push(pi);
            }
            Err(i) => {
                audit.monoid_automorphisms = false;
                audit.witness.get_or_insert(vec![a, i]);
                return audit;
            }
        }
    }
    for (a, psi) in autos.iter().enumerate() {
        let fixed = psi.iter().enumerate().all(|(x, &y)| x == y);
        if fixed && maps[a].iter().enumerate().any(|(i, &k)| i != k) {
            audit.identity = false;
            audit.witness.get_or_insert(vec![a]);
        }
        for (b, phi) in autos.iter().enumerate() {
            let both: Vec<usize> = psi.iter().map(|&y| phi[y]).collect();
            let bad = (0..t.len())
                .find(|&i| t.index_of(&induced_map(&both, t.map(i))) != Some(maps[b][maps[a][i]]));
            if let Some(i) = bad {
                audit.composite = false;
                audit.witness.get_or_insert(vec![a, b, i]);
            }
        }
    }
    audit
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingAudit {
    /// `|S_T|`
    pub source_size: usize,
    pub pairs_checked: usize,
    /// Every `f_φ` lies in `S_G`.
    pub members: bool,
    /// `f_φ ∗ f_ψ = f_{φ∗ψ}` for all pairs.
    pub products: bool,
    pub injective: bool,
    /// Units of `S_T` map to units of `S_G`.
    pub units_embedded: bool,
    /// `f_{z₁} ∗ f_{z₂} = f_{z₁ z₂}` for all `z₁, z₂ ∈ T`.
    pub constant_family: bool,
    /// `f_{z₁} ∗ f_{z₂} = f_{z₂ z₁}` for all `z₁, z₂ ∈ T`.
    pub constant_family_reversed: bool,
    /// For each `s ∈ T`, whether `f_φ` with `φ(t) = t s⁻¹ t` has surjective
    /// left translation.
    pub twisted_dense: Vec<bool>,
    pub witness: Option<Vec<usize>>,
}

impl EmbeddingAudit {
    pub fn pass(&self) -> bool {
        self.members && self.products && self.injective && self.units_embedded
    }
}

/// `f_φ(u, t) = (u.φ(t)⁻¹, φ(t))` on the transformation groupoid.
pub fn embedded_map(a: &GroupAction, phi: &[usize]) -> Vec<usize> {
    let t = a.group();
    (0..a.space() * t.len())
        .map(|x| {
            let (u, s) = a.split_id(x);
            let p = phi[s];
            a.pair_id(a.act(u, t.inverse(p)), p)
        })
        .collect()
}

fn bijective(m: &[usize]) -> bool {
    let mut seen = vec![false; m.len()];
    m.iter().all(|&y| !core::mem::replace(&mut seen[y], true))
}

pub fn transformation_embedding_audit(a: &GroupAction, limits: &Limits) -> Result<EmbeddingAudit> {
    let t = a.group();
    let g = transformation_groupoid(a)?;
    let st = MonoidTable::enumerate(t, Side::S, limits)?;
    let embedded: Vec<Vec<usize>> = (0..st.len()).map(|i| embedded_map(a, st.map(i))).collect();
    let mut audit = EmbeddingAudit {
        source_size: st.len(),
        pairs_checked: 0,
        members: true,
        products: true,
        injective: true,
        units_embedded: true,
        constant_family: true,
        constant_family_reversed: true,
        twisted_dense: Vec::new(),
        witness: None,
    };
    for (i, f) in embedded.iter().enumerate() {
        if crate::endo::first_non_member(&g, f, Side::S).is_some() {
            audit.members = false;
            audit.witness.get_or_insert(vec![i]);
        }
    }
    if !audit.members {
        return Ok(audit);
    }
    let mut out = vec![0; g.len()];
    for i in 0..st.len() {
        for j in 0..st.len() {
            audit.pairs_checked += 1;
            star_into(&g, &embedded[i], &embedded[j], &mut out);
            if out != embedded[st.product(i, j)] {
                audit.products = false;
                audit.witness.get_or_insert(vec![i, j]);
            }
        }
    }
    let mut sorted: Vec<(&Vec<usize>, usize)> = embedded.iter().zip(0..).collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        audit.injective = false;
        audit.witness.get_or_insert(vec![w[0].1, w[1].1]);
    }
    for (i, e) in embedded.iter().enumerate() {
        let unit_t = bijective(&left_translation(t, st.map(i)));
        if unit_t && !bijective(&left_translation(&g, e)) {
            audit.units_embedded = false;
            audit.witness.get_or_insert(vec![i]);
        }
    }
    let order = t.len();
    let constant = |z: usize| embedded_map(a, &vec![z; order]);
    for z1 in 0..order {
        for z2 in 0..order {
            star_into(&g, &constant(z1), &constant(z2), &mut out);
            audit.constant_family &= out == constant(t.mul(z1, z2));
            audit.constant_family_reversed &= out == constant(t.mul(z2, z1));
        }
    }
    audit.twisted_dense = (0..order)
        .map(|s| {
            let phi: Vec<usize> = (0..order)
                .map(|x| t.mul(t.mul(x, t.inverse(s)), x))
                .collect();
            bijective(&left_translation(&g, &embedded_map(a, &phi)))
        })
        .collect();
    Ok(audit)
}
