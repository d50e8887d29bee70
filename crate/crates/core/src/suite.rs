//! Runs every structural check on one groupoid and collects the verdicts.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::endo::{involution_map, left_translation, Side};
use crate::error::{Error, Result};
use crate::functor::automorphism_audit;
use crate::groupoid::Groupoid;
use crate::limits::Limits;
use crate::operator::representation_audit;
use crate::structure::{
    antihom_classification, dense_submonoid, group_of_units, ideal_check, intersection_analysis,
    involution_indices, j_index, left_zero_criterion, range_domain_sweep, special_elements,
    subgroupoid_semigroup, units_crosscheck,
};
use crate::table::{AssocCoverage, MonoidTable};

macro_rules! prop_ids {
    ($($variant:ident => $key:literal),* $(,)?) => {
        /// Identifier of one verdict in a [`StructureReport`].
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum PropId { $($variant),* }

        impl PropId {
            pub const ALL: &'static [PropId] = &[$(PropId::$variant),*];

            pub fn key(self) -> &'static str {
                match self { $(PropId::$variant => $key),* }
            }
        }
    };
}

prop_ids! {
    MonoidLaws => "P3.2",
    JRightZero => "P3.3.1",
    LeftZero => "P3.3.2",
    IntersectionLeftIdeal => "P3.3.3",
    MinimalIdeal => "P3.3.4",
    InverseInSPrime => "P3.3.5",
    IdempotentAntihom => "P3.3.6",
    RightZeroAntihom => "P3.3.7",
    AntihomSquares => "P3.3.8",
    TranslationEmbedding => "L3.7",
    Functor => "P3.6",
    Units => "P3.8",
    SubgroupoidSemigroup => "P3.9",
    RangeDomain => "P3.10",
    RangeDomainFix => "P3.10.fix",
    DenseSubmonoid => "P3.11",
    LeftOperators => "P4.1",
    RightOperators => "P4.2",
    RightAction => "C4.3",
    PrincipalForward => "principal-forward",
}

impl fmt::Display for PropId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for PropId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropId::ALL
            .iter()
            .copied()
            .find(|p| p.key() == s)
            .ok_or_else(|| Error::Shape(alloc::format!("unknown property id {s:?}")))
    }
}

/// Counterexample data attached to a failed verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub what: String,
    pub values: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn ok() -> Self {
        Verdict {
            pass: true,
            witness: None,
        }
    }

    fn fail(what: &str, values: Vec<usize>) -> Self {
        Verdict {
            pass: false,
            witness: Some(Witness {
                what: what.into(),
                values,
            }),
        }
    }

    fn check(pass: bool, what: &str, values: Option<Vec<usize>>) -> Self {
        if pass {
            Self::ok()
        } else {
            Self::fail(what, values.unwrap_or_default())
        }
    }
}

/// Everything computed for one groupoid. Indices refer to the `S_G` table
/// unless stated otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub groupoid: String,
    pub size: usize,
    pub s_size: usize,
    pub sp_size: usize,
    pub assoc_exhaustive: bool,
    pub idempotents: Vec<usize>,
    pub right_zeros: Vec<usize>,
    pub left_zeros: Vec<usize>,
    pub units: Vec<usize>,
    /// `unit_inverses[k]` is the inverse of `units[k]`.
    pub unit_inverses: Vec<usize>,
    pub dense: Vec<usize>,
    pub j_ideal: Vec<usize>,
    pub intersection: Vec<usize>,
    pub verdicts: BTreeMap<PropId, Verdict>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.values().all(|v| v.pass)
    }
}

/// Involution checks: `(f*)* = f`, `f ↦ f*` is a bijection onto `S'_G`, and
/// `(f ∗ g)* = f* ⋆ g*` on every pair.
fn involution_verdict(g: &Groupoid, ts: &MonoidTable, tsp: &MonoidTable) -> Option<Verdict> {
    let star = involution_indices(g, ts, tsp);
    for (i, k) in star.iter().enumerate() {
        let Some(k) = *k else {
            return Some(Verdict::fail("f* outside S'", vec![i]));
        };
        if involution_map(g, tsp.map(k)) != ts.map(i) {
            return Some(Verdict::fail("(f*)* != f", vec![i]));
        }
    }
    let star: Vec<usize> = star.into_iter().map(Option::unwrap).collect();
    if star.iter().collect::<BTreeSet<_>>().len() != tsp.len() || ts.len() != tsp.len() {
        return Some(Verdict::fail("involution not bijective", Vec::new()));
    }
    for a in 0..ts.len() {
        for b in 0..ts.len() {
            if star[ts.product(a, b)] != tsp.product(star[a], star[b]) {
                return Some(Verdict::fail("(f*g)* != f* * g*", vec![a, b]));
            }
        }
    }
    None
}

/// Subgroupoids tried for the subsemigroup check: `G`, `G⁰`, each connected
/// component, each isotropy group.
fn test_subgroupoids(g: &Groupoid) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![(0..g.len()).collect(), g.units().to_vec()];
    out.extend(g.components());
    out.extend(g.units().iter().map(|&u| g.isotropy(u)));
    let mut seen = BTreeSet::new();
    out.retain(|s| seen.insert(s.clone()));
    out
}

/// Enumerates `S_G` and `S'_G` and evaluates the selected verdicts (all when
/// `selection` is empty). Index sets are always filled in.
pub fn run_suite(g: &Groupoid, limits: &Limits, selection: &[PropId]) -> Result<StructureReport> {
    let ts = MonoidTable::enumerate(g, Side::S, limits)?;
    let tsp = MonoidTable::enumerate(g, Side::SPrime, limits)?;
    let want = |p: PropId| selection.is_empty() || selection.contains(&p);
    let special = special_elements(&ts);
    let units = group_of_units(g, &ts);
    let dense = dense_submonoid(g, &ts, &tsp);
    let inter = intersection_analysis(g, &ts);
    let j = j_index(g, &ts);
    let j_ideal: Vec<usize> = (0..ts.len())
        .map(|i| ts.product(j, i))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let mut verdicts = BTreeMap::new();
    if want(PropId::MonoidLaws) {
        let exhaustive = ts.assoc_coverage() == AssocCoverage::Exhaustive
            && tsp.assoc_coverage() == AssocCoverage::Exhaustive;
        let v = if !exhaustive {
            Verdict::fail("associativity not checked exhaustively", Vec::new())
        } else {
            involution_verdict(g, &ts, &tsp).unwrap_or_else(Verdict::ok)
        };
        verdicts.insert(PropId::MonoidLaws, v);
    }
    if want(PropId::JRightZero) {
        let jp = j_index(g, &tsp);
        let v = if ts.product(j, j) != j {
            Verdict::fail("j*j != j", vec![j])
        } else if let Some(f) = (0..ts.len()).find(|&f| ts.product(f, j) != j) {
            Verdict::fail("f*j != j", vec![f])
        } else if let Some(h) = (0..tsp.len()).find(|&h| tsp.product(h, jp) != jp) {
            Verdict::fail("h*j != j in S'", vec![h])
        } else {
            Verdict::ok()
        };
        verdicts.insert(PropId::JRightZero, v);
    }
    if want(PropId::LeftZero) {
        let c = left_zero_criterion(g, &ts);
        let w = c.witness.map(|(f, u)| vec![f, u]);
        verdicts.insert(
            PropId::LeftZero,
            Verdict::check(c.agrees(), "left zero vs fixed units", w),
        );
    }
    if want(PropId::IntersectionLeftIdeal) {
        let f = ideal_check(&ts, &inter.indices)?;
        verdicts.insert(
            PropId::IntersectionLeftIdeal,
            Verdict::check(f.left_ideal, "S cap S' not a left ideal", None),
        );
    }
    if want(PropId::MinimalIdeal) {
        let f = ideal_check(&ts, &j_ideal)?;
        verdicts.insert(
            PropId::MinimalIdeal,
            Verdict::check(f.ideal && f.minimal, "jS not a minimal ideal", None),
        );
    }
    let antihom_wanted = [
        PropId::InverseInSPrime,
        PropId::IdempotentAntihom,
        PropId::RightZeroAntihom,
        PropId::AntihomSquares,
    ]
    .into_iter()
    .any(&want);
    if antihom_wanted {
        let a = antihom_classification(g, &ts);
        let entries = [
            (
                PropId::InverseInSPrime,
                a.bijection_inverse_pass(),
                "inverse outside S'",
                a.inverse_not_in_sp.clone(),
            ),
            (
                PropId::IdempotentAntihom,
                a.idempotent_pass(),
                "injective idempotent antihomomorphisms",
                a.injective_idempotent_antihoms.clone(),
            ),
            (
                PropId::RightZeroAntihom,
                a.right_zero_pass(),
                "right zero antihomomorphisms",
                a.right_zero_antihoms.clone(),
            ),
            (
                PropId::AntihomSquares,
                a.squares_pass(),
                "f*f != f*f in S'",
                a.square_mismatches.clone(),
            ),
        ];
        for (id, pass, what, values) in entries {
            if want(id) {
                verdicts.insert(id, Verdict::check(pass, what, Some(values)));
            }
        }
    }
    if want(PropId::TranslationEmbedding) {
        let maps: Vec<Vec<usize>> = (0..ts.len())
            .map(|i| left_translation(g, ts.map(i)))
            .collect();
        let mut v = Verdict::ok();
        let distinct: BTreeSet<&Vec<usize>> = maps.iter().collect();
        if distinct.len() != maps.len() {
            v = Verdict::fail("translation not injective", Vec::new());
        } else if let Some((a, b)) = (0..ts.len())
            .flat_map(|a| (0..ts.len()).map(move |b| (a, b)))
            .find(|&(a, b)| {
                let seq: Vec<usize> = maps[a].iter().map(|&y| maps[b][y]).collect();
                seq != maps[ts.product(a, b)]
            })
        {
            v = Verdict::fail("L(f*g) != L(g) o L(f)", vec![a, b]);
        }
        verdicts.insert(PropId::TranslationEmbedding, v);
    }
    if want(PropId::Functor) {
        let a = automorphism_audit(g, &ts, limits);
        verdicts.insert(
            PropId::Functor,
            Verdict::check(a.pass(), "induced map", a.witness),
        );
    }
    if want(PropId::Units) {
        let x = units_crosscheck(&ts, &units);
        let v = if !units.verified {
            Verdict::fail("unit inverse", units.witness.clone().unwrap_or_default())
        } else {
            Verdict::check(x.pass, "unit sets differ", x.witness.map(|w| vec![w]))
        };
        verdicts.insert(PropId::Units, v);
    }
    if want(PropId::SubgroupoidSemigroup) {
        let mut v = Verdict::ok();
        for a in test_subgroupoids(g) {
            let s = subgroupoid_semigroup(g, &a, &ts)?;
            if !(s.closed && s.translation_criterion) {
                v = Verdict::fail("subsemigroup", s.witness.unwrap_or(a));
                break;
            }
        }
        verdicts.insert(PropId::SubgroupoidSemigroup, v);
    }
    if want(PropId::RangeDomain) || want(PropId::RangeDomainFix) {
        let s = range_domain_sweep(g, limits)?;
        if want(PropId::RangeDomain) {
            let pass = s.fiber_failure.is_none();
            verdicts.insert(
                PropId::RangeDomain,
                Verdict::check(pass, "map", s.fiber_failure),
            );
        }
        if want(PropId::RangeDomainFix) {
            let pass = s.fix_failure.is_none();
            verdicts.insert(
                PropId::RangeDomainFix,
                Verdict::check(pass, "map", s.fix_failure),
            );
        }
    }
    if want(PropId::DenseSubmonoid) {
        let pass = dense.pass() && dense.equals_units;
        verdicts.insert(
            PropId::DenseSubmonoid,
            Verdict::check(pass, "dense submonoid", dense.witness.clone()),
        );
    }
    if want(PropId::LeftOperators) || want(PropId::RightOperators) || want(PropId::RightAction) {
        let a = representation_audit(g, &ts, &tsp)?;
        let entries = [
            (PropId::LeftOperators, a.left.pass(), a.left.witness.clone()),
            (
                PropId::RightOperators,
                a.right.pass(),
                a.right.witness.clone(),
            ),
            (PropId::RightAction, a.action_pass(), a.witness.clone()),
        ];
        for (id, pass, w) in entries {
            if want(id) {
                verdicts.insert(id, Verdict::check(pass, "operator", w));
            }
        }
    }
    if want(PropId::PrincipalForward) {
        verdicts.insert(
            PropId::PrincipalForward,
            Verdict::check(
                inter.forward_holds(),
                "principal but S cap S' != {j}",
                Some(inter.indices.clone()),
            ),
        );
    }

    Ok(StructureReport {
        groupoid: g.name().into(),
        size: g.len(),
        s_size: ts.len(),
        sp_size: tsp.len(),
        assoc_exhaustive: ts.assoc_coverage() == AssocCoverage::Exhaustive
            && tsp.assoc_coverage() == AssocCoverage::Exhaustive,
        idempotents: special.idempotents,
        right_zeros: special.right_zeros,
        left_zeros: special.left_zeros,
        units: units.indices,
        unit_inverses: units.inverse,
        dense: dense.indices,
        j_ideal,
        intersection: inter.indices,
        verdicts,
    })
}
