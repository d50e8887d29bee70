//! Semigroup structure of an enumerated `S_G` / `S'_G`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::endo::{first_non_member, involution_map, translation, MapSpace, Side};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::limits::Limits;
use crate::morphism::morphism_classify;
use crate::table::MonoidTable;

fn is_bijection(m: &[usize]) -> bool {
    let mut seen = vec![false; m.len()];
    m.iter()
        .all(|&y| y < m.len() && !core::mem::replace(&mut seen[y], true))
}

fn is_surjection(m: &[usize]) -> bool {
    // finite set: surjective ⟺ bijective
    is_bijection(m)
}

/// Index of the inverse map `j` in a table over `g`.
pub(crate) fn j_index(g: &Groupoid, t: &MonoidTable) -> usize {
    t.index_of(g.inverse_map())
        .expect("the inverse map lies in both monoids")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialElements {
    pub idempotents: Vec<usize>,
    pub right_zeros: Vec<usize>,
    pub left_zeros: Vec<usize>,
}

pub fn special_elements(t: &MonoidTable) -> SpecialElements {
    let s = t.len();
    SpecialElements {
        idempotents: (0..s).filter(|&e| t.product(e, e) == e).collect(),
        right_zeros: (0..s)
            .filter(|&z| (0..s).all(|i| t.product(i, z) == z))
            .collect(),
        left_zeros: (0..s)
            .filter(|&z| (0..s).all(|i| t.product(z, i) == z))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftZeroCriterion {
    /// `j` is a left zero of the table.
    pub j_left_zero: bool,
    /// Every element fixes every unit.
    pub units_fixed: bool,
    /// First `(f, u)` with `f(u) ≠ u`, as (table index, element id).
    pub witness: Option<(usize, usize)>,
}

impl LeftZeroCriterion {
    pub fn agrees(&self) -> bool {
        self.j_left_zero == self.units_fixed
    }
}

/// Evaluates both sides of "`j` is a left zero ⟺ every `f` fixes `G⁰`" independently.
pub fn left_zero_criterion(g: &Groupoid, t: &MonoidTable) -> LeftZeroCriterion {
    let j = j_index(g, t);
    let j_left_zero = (0..t.len()).all(|i| t.product(j, i) == j);
    let witness = (0..t.len()).find_map(|i| {
        let f = t.map(i);
        g.units().iter().find(|&&u| f[u] != u).map(|&u| (i, u))
    });
    LeftZeroCriterion {
        j_left_zero,
        units_fixed: witness.is_none(),
        witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdealFlags {
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub ideal: bool,
    pub minimal_left: bool,
    pub minimal_right: bool,
    pub minimal: bool,
}

/// Ideal tests by table scan. A left ideal `T` is minimal iff `S x = T` for
/// every `x ∈ T`; likewise `x S` for right ideals and `S x S` for ideals.
pub fn ideal_check(t: &MonoidTable, subset: &[usize]) -> Result<IdealFlags> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let s = t.len();
    let mut member = vec![false; s];
    for &x in subset {
        if x >= s {
            return Err(Error::Shape(alloc::format!("index {x} out of range")));
        }
        member[x] = true;
    }
    let size = member.iter().filter(|&&b| b).count();
    let left_ideal = subset
        .iter()
        .all(|&x| (0..s).all(|a| member[t.product(a, x)]));
    let right_ideal = subset
        .iter()
        .all(|&x| (0..s).all(|a| member[t.product(x, a)]));
    let ideal = left_ideal && right_ideal;

    let generated = |x: usize, left: bool, right: bool| -> usize {
        let mut hit = vec![false; s];
        let lefts: Vec<usize> = if left {
            (0..s).map(|a| t.product(a, x)).collect()
        } else {
            vec![x]
        };
        for y in lefts {
            if right {
                for b in 0..s {
                    hit[t.product(y, b)] = true;
                }
            } else {
                hit[y] = true;
            }
        }
        // the generated set is inside T whenever T is the matching kind of ideal
        hit.iter().filter(|&&b| b).count()
    };
    let minimal_left = left_ideal && subset.iter().all(|&x| generated(x, true, false) == size);
    let minimal_right = right_ideal && subset.iter().all(|&x| generated(x, false, true) == size);
    let minimal = ideal && subset.iter().all(|&x| generated(x, true, true) == size);
    Ok(IdealFlags {
        left_ideal,
        right_ideal,
        ideal,
        minimal_left,
        minimal_right,
        minimal,
    })
}

/// The group of units of a table together with verified inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroup {
    /// Elements whose translation map is a bijection.
    pub indices: Vec<usize>,
    /// `inverse[k]` is the inverse of `indices[k]`.
    pub inverse: Vec<usize>,
    /// All inverse and closure checks passed.
    pub verified: bool,
    pub witness: Option<Vec<usize>>,
}

/// Units from bijective translations. For `φ ∈ S_G` the inverse is
/// `ψ(φ(x) x) = φ(x)⁻¹`; for `S'_G` it is `ψ(x φ(x)) = φ(x)⁻¹`.
pub fn group_of_units(g: &Groupoid, t: &MonoidTable) -> UnitGroup {
    let n = g.len();
    let side = t.side();
    let mut indices = Vec::new();
    let mut inverse = Vec::new();
    let mut witness = None;
    for i in 0..t.len() {
        let phi = t.map(i);
        let tr = translation(g, side, phi);
        if !is_bijection(&tr) {
            continue;
        }
        let mut psi = vec![0; n];
        for x in 0..n {
            psi[tr[x]] = g.inverse(phi[x]);
        }
        indices.push(i);
        match t.index_of(&psi) {
            Some(k) => {
                inverse.push(k);
                let e = t.identity();
                if witness.is_none() && (t.product(i, k) != e || t.product(k, i) != e) {
                    witness = Some(vec![i, k]);
                }
            }
            None => {
                inverse.push(usize::MAX);
                if witness.is_none() {
                    witness = Some(vec![i]);
                }
            }
        }
    }
    if witness.is_none() {
        let member: BTreeSet<usize> = indices.iter().copied().collect();
        'outer: for &a in &indices {
            for &b in &indices {
                if !member.contains(&t.product(a, b)) {
                    witness = Some(vec![a, b]);
                    break 'outer;
                }
            }
        }
    }
    UnitGroup {
        verified: witness.is_none(),
        indices,
        inverse,
        witness,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub pass: bool,
    /// Elements with a two-sided inverse in the Cayley table.
    pub cayley_units: Vec<usize>,
    /// First index in one set but not the other.
    pub witness: Option<usize>,
}

/// Compares a unit group against the set of Cayley-invertible elements.
pub fn units_crosscheck(t: &MonoidTable, h1: &UnitGroup) -> CrossCheck {
    let s = t.len();
    let e = t.identity();
    let cayley_units: Vec<usize> = (0..s)
        .filter(|&i| (0..s).any(|k| t.product(i, k) == e && t.product(k, i) == e))
        .collect();
    let a: BTreeSet<usize> = cayley_units.iter().copied().collect();
    let b: BTreeSet<usize> = h1.indices.iter().copied().collect();
    let witness = a.symmetric_difference(&b).next().copied();
    CrossCheck {
        pass: witness.is_none(),
        cayley_units,
        witness,
    }
}

/// Maps each index of an `S_G` table to the index of `f*` in the `S'_G` table.
pub fn involution_indices(
    g: &Groupoid,
    from: &MonoidTable,
    to: &MonoidTable,
) -> Vec<Option<usize>> {
    (0..from.len())
        .map(|i| to.index_of(&involution_map(g, from.map(i))))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSubmonoid {
    /// `T_G`: elements of `S_G` with surjective left translation.
    pub indices: Vec<usize>,
    /// `T'_G`: elements of `S'_G` with surjective right translation.
    pub prime_indices: Vec<usize>,
    pub contains_identity: bool,
    pub closed: bool,
    pub left_cancellative: bool,
    /// `{f* : f ∈ T_G} = T'_G`.
    pub involution_matches: bool,
    /// `T_G` equals the bijective-translation unit set.
    pub equals_units: bool,
    pub witness: Option<Vec<usize>>,
}

impl DenseSubmonoid {
    pub fn pass(&self) -> bool {
        self.contains_identity && self.closed && self.left_cancellative && self.involution_matches
    }
}

fn dense_set(g: &Groupoid, t: &MonoidTable) -> Vec<usize> {
    (0..t.len())
        .filter(|&i| is_surjection(&translation(g, t.side(), t.map(i))))
        .collect()
}

fn closure_failure(t: &MonoidTable, set: &[usize]) -> Option<Vec<usize>> {
    let member: BTreeSet<usize> = set.iter().copied().collect();
    for &a in set {
        for &b in set {
            if !member.contains(&t.product(a, b)) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn left_cancel_failure(t: &MonoidTable, set: &[usize]) -> Option<Vec<usize>> {
    for &f in set {
        let mut seen = vec![usize::MAX; t.len()];
        for (g2, p) in t.row(f).enumerate() {
            if seen[p] != usize::MAX {
                return Some(vec![f, seen[p], g2]);
            }
            seen[p] = g2;
        }
    }
    None
}

/// `T_G` and `T'_G`. Dense image means surjective translation here.
pub fn dense_submonoid(g: &Groupoid, ts: &MonoidTable, tsp: &MonoidTable) -> DenseSubmonoid {
    let indices = dense_set(g, ts);
    let prime_indices = dense_set(g, tsp);
    let contains_identity =
        indices.contains(&ts.identity()) && prime_indices.contains(&tsp.identity());
    let mut witness =
        closure_failure(ts, &indices).or_else(|| closure_failure(tsp, &prime_indices));
    let closed = witness.is_none();
    let cancel =
        left_cancel_failure(ts, &indices).or_else(|| left_cancel_failure(tsp, &prime_indices));
    let left_cancellative = cancel.is_none();
    witness = witness.or(cancel);
    let star = involution_indices(g, ts, tsp);
    let image: BTreeSet<Option<usize>> = indices.iter().map(|&i| star[i]).collect();
    let expected: BTreeSet<Option<usize>> = prime_indices.iter().map(|&i| Some(i)).collect();
    let involution_matches = image == expected;
    let units = group_of_units(g, ts);
    DenseSubmonoid {
        equals_units: units.indices == indices,
        indices,
        prime_indices,
        contains_identity,
        closed,
        left_cancellative,
        involution_matches,
        witness,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubSemigroup {
    /// `S_A = { φ ∈ S_G : φ(A) ⊆ A }`
    pub indices: Vec<usize>,
    pub closed: bool,
    /// `φ(A) ⊆ A ⟺ L_φ(A) ⊆ A` for every `φ` in the table.
    pub translation_criterion: bool,
    pub witness: Option<Vec<usize>>,
}

pub fn subgroupoid_semigroup(g: &Groupoid, a: &[usize], t: &MonoidTable) -> Result<SubSemigroup> {
    g.check_subgroupoid(a)?;
    let preserves = |m: &[usize]| a.iter().all(|&x| a.contains(&m[x]));
    let indices: Vec<usize> = (0..t.len()).filter(|&i| preserves(t.map(i))).collect();
    let mut witness = closure_failure(t, &indices);
    let closed = witness.is_none();
    let crit = (0..t.len()).find(|&i| {
        let m = t.map(i);
        preserves(m) != preserves(&translation(g, t.side(), m))
    });
    if witness.is_none() {
        witness = crit.map(|i| vec![i]);
    }
    Ok(SubSemigroup {
        indices,
        closed,
        translation_criterion: crit.is_none(),
        witness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeDomain {
    pub in_s: bool,
    /// `φ(G^u) ∩ G_u ≠ ∅` for every unit `u`.
    pub meets_fibers: bool,
    /// `G⁰ ⊆ Fix(φ)`.
    pub fixes_units: bool,
}

impl RangeDomain {
    pub fn agrees(&self) -> bool {
        self.in_s == self.meets_fibers && self.in_s == self.fixes_units
    }
}

fn range_domain_eval(g: &Groupoid, phi: &[usize]) -> RangeDomain {
    let in_s = first_non_member(g, phi, Side::S).is_none();
    let meets_fibers = g
        .units()
        .iter()
        .all(|&u| (0..g.len()).any(|x| g.range(x) == u && g.domain(phi[x]) == u));
    let fixes_units = g.units().iter().all(|&u| phi[u] == u);
    RangeDomain {
        in_s,
        meets_fibers,
        fixes_units,
    }
}

/// For a map with `d∘φ = φ∘r`, evaluates membership in `S_G`, the fiber
/// condition, and unit-fixing independently.
pub fn range_domain_criterion(g: &Groupoid, phi: &[usize]) -> Result<RangeDomain> {
    crate::endo::membership(g, phi)?;
    if let Some(x) = (0..g.len()).find(|&x| g.domain(phi[x]) != phi[g.range(x)]) {
        return Err(Error::PreconditionFailed { x });
    }
    Ok(range_domain_eval(g, phi))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeDomainSweep {
    /// Maps with `d∘φ = φ∘r` visited.
    pub eligible: u128,
    /// Of those, members of `S_G`.
    pub in_s: u128,
    /// First map where membership and the fiber condition disagree.
    pub fiber_failure: Option<Vec<usize>>,
    /// First map where membership and `G⁰ ⊆ Fix(φ)` disagree.
    pub fix_failure: Option<Vec<usize>>,
}

/// Visits every map with `d∘φ = φ∘r`. Such a map sends units to units, and
/// once the unit images are fixed each `φ(x)` ranges over `G_{φ(r(x))}`.
pub fn range_domain_sweep(g: &Groupoid, limits: &Limits) -> Result<RangeDomainSweep> {
    let n = g.len();
    let units = g.units();
    let k = units.len();
    let fibers: Vec<Vec<usize>> = (0..n).map(|u| g.domain_fiber(u)).collect();
    let non_units: Vec<usize> = (0..n).filter(|&x| !g.is_unit(x)).collect();

    let mut total: u128 = 0;
    let mut sigma = vec![0usize; k];
    loop {
        let mut count: u128 = 1;
        for &x in &non_units {
            let ui = units.binary_search(&g.range(x)).unwrap();
            count = count.saturating_mul(fibers[units[sigma[ui]]].len() as u128);
        }
        total = total.saturating_add(count);
        if !advance(&mut sigma, k) {
            break;
        }
    }
    if total > limits.max_sweep {
        return Err(Error::CapExceeded {
            what: "d∘φ = φ∘r maps",
            predicted: total,
            cap: limits.max_sweep,
        });
    }

    let mut sweep = RangeDomainSweep {
        eligible: 0,
        in_s: 0,
        fiber_failure: None,
        fix_failure: None,
    };
    let mut sigma = vec![0usize; k];
    let mut phi = vec![0usize; n];
    loop {
        for (ui, &u) in units.iter().enumerate() {
            phi[u] = units[sigma[ui]];
        }
        let options: Vec<&[usize]> = non_units
            .iter()
            .map(|&x| fibers[phi[g.range(x)]].as_slice())
            .collect();
        let mut digits = vec![0usize; non_units.len()];
        loop {
            for (slot, &x) in non_units.iter().enumerate() {
                phi[x] = options[slot][digits[slot]];
            }
            let rd = range_domain_eval(g, &phi);
            sweep.eligible += 1;
            sweep.in_s += rd.in_s as u128;
            if rd.in_s != rd.meets_fibers && sweep.fiber_failure.is_none() {
                sweep.fiber_failure = Some(phi.clone());
            }
            if rd.in_s != rd.fixes_units && sweep.fix_failure.is_none() {
                sweep.fix_failure = Some(phi.clone());
            }
            if !advance_bounded(&mut digits, &options) {
                break;
            }
        }
        if !advance(&mut sigma, k) {
            break;
        }
    }
    debug_assert_eq!(sweep.eligible, total);
    Ok(sweep)
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn advance_bounded(digits: &mut [usize], options: &[&[usize]]) -> bool {
    for (d, opts) in digits.iter_mut().zip(options).rev() {
        *d += 1;
        if *d < opts.len() {
            return true;
        }
        *d = 0;
    }
    false
}

/// Classification results for antihomomorphic elements of `S_G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntihomVerdicts {
    /// Bijective elements whose inverse function is not in `S'_G`.
    pub inverse_not_in_sp: Vec<usize>,
    /// Idempotent, injective antihomomorphisms.
    pub injective_idempotent_antihoms: Vec<usize>,
    /// Antihomomorphisms that are right zeros.
    pub right_zero_antihoms: Vec<usize>,
    /// Injective idempotents that are not antihomomorphisms.
    pub injective_idempotents_not_antihom: Vec<usize>,
    /// Antihomomorphisms in `S_G ∩ S'_G` with `f ⋆ f ≠ f ∗ f`.
    pub square_mismatches: Vec<usize>,
    pub j: usize,
}

impl AntihomVerdicts {
    pub fn bijection_inverse_pass(&self) -> bool {
        self.inverse_not_in_sp.is_empty()
    }
    pub fn idempotent_pass(&self) -> bool {
        self.injective_idempotent_antihoms == [self.j]
    }
    pub fn right_zero_pass(&self) -> bool {
        self.right_zero_antihoms == [self.j]
    }
    pub fn squares_pass(&self) -> bool {
        self.square_mismatches.is_empty()
    }
}

pub fn antihom_classification(g: &Groupoid, t: &MonoidTable) -> AntihomVerdicts {
    let n = g.len();
    let s = t.len();
    let j = j_index(g, t);
    let mut v = AntihomVerdicts {
        inverse_not_in_sp: Vec::new(),
        injective_idempotent_antihoms: Vec::new(),
        right_zero_antihoms: Vec::new(),
        injective_idempotents_not_antihom: Vec::new(),
        square_mismatches: Vec::new(),
        j,
    };
    let mut sq_s = vec![0; n];
    let mut sq_sp = vec![0; n];
    for i in 0..s {
        let f = t.map(i);
        let kind = morphism_classify(g, g, f).expect("table maps are total");
        let injective = is_bijection(f);
        let idempotent = t.product(i, i) == i;
        if injective {
            let mut inv = vec![0; n];
            for (x, &y) in f.iter().enumerate() {
                inv[y] = x;
            }
            if first_non_member(g, &inv, Side::SPrime).is_some() {
                v.inverse_not_in_sp.push(i);
            }
        }
        if kind.antihomomorphism && injective && idempotent {
            v.injective_idempotent_antihoms.push(i);
        }
        if injective && idempotent && !kind.antihomomorphism {
            v.injective_idempotents_not_antihom.push(i);
        }
        if kind.antihomomorphism && (0..s).all(|a| t.product(a, i) == i) {
            v.right_zero_antihoms.push(i);
        }
        if kind.antihomomorphism && first_non_member(g, f, Side::SPrime).is_none() {
            crate::endo::star_into(g, f, f, &mut sq_s);
            crate::endo::star_prime_into(g, f, f, &mut sq_sp);
            if sq_s != sq_sp {
                v.square_mismatches.push(i);
            }
        }
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intersection {
    /// Indices of `S_G ∩ S'_G` inside the `S_G` table.
    pub indices: Vec<usize>,
    pub equals_j: bool,
    pub principal: bool,
}

impl Intersection {
    /// principal ⟹ intersection = {j}
    pub fn forward_holds(&self) -> bool {
        !self.principal || self.equals_j
    }
}

pub fn intersection_analysis(g: &Groupoid, t: &MonoidTable) -> Intersection {
    let indices: Vec<usize> = (0..t.len())
        .filter(|&i| first_non_member(g, t.map(i), t.side().other()).is_none())
        .collect();
    let j = j_index(g, t);
    Intersection {
        equals_j: indices == [j],
        principal: g.is_principal(),
        indices,
    }
}

/// Size of `S_G ∩ S'_G` by the product formula `∏_x |G_{r(x)} ∩ G^{d(x)}|`.
pub(crate) fn intersection_size(g: &Groupoid) -> u128 {
    let space = MapSpace::new(g, Side::S);
    (0..g.len())
        .map(|x| {
            space
                .choices(x)
                .iter()
                .filter(|&&y| g.range(y) == g.domain(x))
                .count() as u128
        })
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s_table(g: &Groupoid) -> MonoidTable {
        MonoidTable::enumerate(g, Side::S, &Limits::default()).unwrap()
    }

    fn sp_table(g: &Groupoid) -> MonoidTable {
        MonoidTable::enumerate(g, Side::SPrime, &Limits::default()).unwrap()
    }

    // S_{C2} in lex order: 0 = r (e,e), 1 = id (e,a), 2 = swap (a,e), 3 = const-a (a,a)

    #[test]
    fn c2_special_elements() {
        let c2 = Groupoid::cyclic(2).unwrap();
        let sp = special_elements(&s_table(&c2));
        assert_eq!(sp.idempotents, vec![0, 1, 2]);
        assert_eq!(sp.right_zeros, vec![1, 2]);
        assert!(sp.left_zeros.is_empty());
    }

    #[test]
    fn one_element_monoid() {
        let u = Groupoid::unit_set(2).unwrap();
        let sp = special_elements(&s_table(&u));
        assert_eq!(sp.idempotents, vec![0]);
        assert_eq!(sp.right_zeros, vec![0]);
        assert_eq!(sp.left_zeros, vec![0]);
    }

    #[test]
    fn left_zero_criterion_examples() {
        let u = Groupoid::unit_set(2).unwrap();
        let c = left_zero_criterion(&u, &s_table(&u));
        assert!(c.j_left_zero && c.units_fixed);

        let c2 = Groupoid::cyclic(2).unwrap();
        let t = s_table(&c2);
        let c = left_zero_criterion(&c2, &t);
        assert!(!c.j_left_zero && !c.units_fixed && c.agrees());
        let (f, u) = c.witness.unwrap();
        assert_ne!(t.map(f)[u], u);
        assert_eq!(u, 0);

        let p = Groupoid::pair(2).unwrap();
        let c = left_zero_criterion(&p, &s_table(&p));
        assert!(!c.j_left_zero && !c.units_fixed);
        let c = left_zero_criterion(&p, &sp_table(&p));
        assert!(c.agrees());
    }

    #[test]
    fn ideals_in_c2() {
        let c2 = Groupoid::cyclic(2).unwrap();
        let t = s_table(&c2);
        let j = j_index(&c2, &t);
        let js: BTreeSet<usize> = (0..t.len()).map(|i| t.product(j, i)).collect();
        let js: Vec<usize> = js.into_iter().collect();
        let flags = ideal_check(&t, &js).unwrap();
        assert!(flags.ideal && flags.minimal);
        let inter = intersection_analysis(&c2, &t).indices;
        assert!(ideal_check(&t, &inter).unwrap().left_ideal);
        let full: Vec<usize> = (0..t.len()).collect();
        let flags = ideal_check(&t, &full).unwrap();
        assert!(flags.ideal && !flags.minimal);
        assert_eq!(ideal_check(&t, &[]), Err(Error::EmptySubset));
    }

    #[test]
    fn units_of_c2() {
        let c2 = Groupoid::cyclic(2).unwrap();
        let t = s_table(&c2);
        let h = group_of_units(&c2, &t);
        assert_eq!(h.indices, vec![0, 3]);
        assert_eq!(h.inverse, vec![0, 3]);
        assert!(h.verified);
        let x = units_crosscheck(&t, &h);
        assert!(x.pass);
        assert_eq!(x.cayley_units, vec![0, 3]);
    }

    #[test]
    fn j_is_a_unit_only_on_unit_groupoids() {
        for g in [
            Groupoid::unit_set(1).unwrap(),
            Groupoid::unit_set(3).unwrap(),
            Groupoid::cyclic(2).unwrap(),
            Groupoid::cyclic(3).unwrap(),
            Groupoid::pair(2).unwrap(),
        ] {
            let t = s_table(&g);
            let h = group_of_units(&g, &t);
            assert!(h.indices.contains(&t.identity()));
            let j = j_index(&g, &t);
            assert_eq!(
                h.indices.contains(&j),
                g.units().len() == g.len(),
                "{}",
                g.name()
            );
            assert!(units_crosscheck(&t, &h).pass);
        }
    }

    #[test]
    fn dense_submonoid_equals_units() {
        for g in [
            Groupoid::cyclic(2).unwrap(),
            Groupoid::cyclic(3).unwrap(),
            Groupoid::pair(2).unwrap(),
            Groupoid::unit_set(2).unwrap(),
        ] {
            let (ts, tsp) = (s_table(&g), sp_table(&g));
            let d = dense_submonoid(&g, &ts, &tsp);
            assert!(d.pass() && d.equals_units, "{}", g.name());
            assert!(d.indices.contains(&ts.identity()));
        }
        let c2 = Groupoid::cyclic(2).unwrap();
        let d = dense_submonoid(&c2, &s_table(&c2), &sp_table(&c2));
        assert_eq!(d.indices, vec![0, 3]);
    }

    #[test]
    fn subgroupoid_semigroups() {
        let c2 = Groupoid::cyclic(2).unwrap();
        let cc = Groupoid::disjoint_union(&c2, &c2).unwrap();
        let t = s_table(&cc);
        let full: Vec<usize> = (0..cc.len()).collect();
        let all = subgroupoid_semigroup(&cc, &full, &t).unwrap();
        assert_eq!(all.indices.len(), t.len());
        let block = subgroupoid_semigroup(&cc, &[0, 1], &t).unwrap();
        assert!(block.closed && block.translation_criterion);
        // elements are already confined to their block here
        assert_eq!(block.indices.len(), t.len());

        let u = Groupoid::unit_set(2).unwrap();
        let tu = s_table(&u);
        let sa = subgroupoid_semigroup(&u, u.units(), &tu).unwrap();
        assert_eq!(sa.indices.len(), tu.len());

        let p = Groupoid::pair(2).unwrap();
        let tp = s_table(&p);
        let sa = subgroupoid_semigroup(&p, p.units(), &tp).unwrap();
        assert!(sa.closed && sa.translation_criterion);
        assert!(sa.indices.len() < tp.len());
        assert!(matches!(
            subgroupoid_semigroup(&p, &[1], &tp),
            Err(Error::NotASubgroupoid { .. })
        ));
    }

    #[test]
    fn range_domain_examples() {
        let p = Groupoid::pair(2).unwrap();
        let rd = range_domain_criterion(&p, p.inverse_map()).unwrap();
        assert!(rd.in_s && rd.meets_fibers && rd.agrees());
        let c2 = Groupoid::cyclic(2).unwrap();
        let rd = range_domain_criterion(&c2, c2.range_map()).unwrap();
        assert!(rd.in_s && rd.meets_fibers);
        // swap on C2 moves the unit: d(φ(e)) = e ≠ a = φ(r(e))
        assert_eq!(
            range_domain_criterion(&c2, &[1, 0]),
            Err(Error::PreconditionFailed { x: 0 })
        );
    }

    #[test]
    fn range_domain_sweep_counts() {
        // groups: φ(e) = e forced, every other value free
        let c3 = Groupoid::cyclic(3).unwrap();
        let s = range_domain_sweep(&c3, &Limits::default()).unwrap();
        assert_eq!((s.eligible, s.in_s), (9, 9));
        assert!(s.fiber_failure.is_none() && s.fix_failure.is_none());
        // pair(2): 4 unit maps, each non-unit picks from a 2-element fiber
        let p = Groupoid::pair(2).unwrap();
        let s = range_domain_sweep(&p, &Limits::default()).unwrap();
        assert_eq!(s.eligible, 16);
        assert_eq!(s.in_s, 4);
        assert!(s.fiber_failure.is_none() && s.fix_failure.is_none());
    }

    #[test]
    fn antihom_on_c2_and_pair() {
        let c2 = Groupoid::cyclic(2).unwrap();
        let v = antihom_classification(&c2, &s_table(&c2));
        assert_eq!(v.j, 1);
        assert!(v.idempotent_pass() && v.right_zero_pass());
        assert!(v.bijection_inverse_pass() && v.squares_pass());
        let p = Groupoid::pair(2).unwrap();
        let v = antihom_classification(&p, &s_table(&p));
        assert!(v.idempotent_pass() && v.right_zero_pass());
        assert!(v.bijection_inverse_pass() && v.squares_pass());
    }

    #[test]
    fn intersections() {
        let p = Groupoid::pair(2).unwrap();
        let i = intersection_analysis(&p, &s_table(&p));
        assert!(i.equals_j && i.principal && i.forward_holds());
        let c2 = Groupoid::cyclic(2).unwrap();
        let i = intersection_analysis(&c2, &s_table(&c2));
        assert_eq!(i.indices.len(), 4);
        assert!(!i.equals_j && !i.principal);
        assert_eq!(intersection_size(&c2), 4);
        let u = Groupoid::unit_set(2).unwrap();
        let i = intersection_analysis(&u, &s_table(&u));
        assert!(i.equals_j && i.principal);
    }
}
