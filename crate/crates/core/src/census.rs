//! Exhaustive enumeration of small groupoids up to isomorphism.
//!
//! Every groupoid of order `n` is isomorphic to one labelled canonically:
//! units `0..k`, then `p` inverse pairs `(k + 2i, k + 2i + 1)`, then the
//! self-inverse non-units. A [`Branch`] fixes `(k, p)`. Within a branch the
//! search assigns ranges to non-units (domains follow from `d(x) = r(x⁻¹)`),
//! prefills the cells forced by the unit and inverse laws, and backtracks
//! over the remaining composable cells with cancellation and incremental
//! associativity pruning.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, RawGroupoid};
use crate::limits::Limits;
use crate::morphism::{find_isomorphism, signature};
use crate::structure::intersection_size;

/// Unit count and inverse-pair count of a canonical labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Branch {
    pub order: usize,
    pub units: usize,
    pub pairs: usize,
}

fn check_order(order: usize, limits: &Limits) -> Result<()> {
    if order > limits.max_census_order {
        return Err(Error::CapExceeded {
            what: "census order",
            predicted: order as u128,
            cap: limits.max_census_order as u128,
        });
    }
    if order == 0 {
        return Err(Error::Shape("census order must be positive".into()));
    }
    Ok(())
}

/// All branches for one order, in search order.
pub fn census_branches(order: usize, limits: &Limits) -> Result<Vec<Branch>> {
    check_order(order, limits)?;
    let mut out = Vec::new();
    for units in 1..=order {
        for pairs in 0..=(order - units) / 2 {
            out.push(Branch {
                order,
                units,
                pairs,
            });
        }
    }
    Ok(out)
}

const UNSET: u32 = u32::MAX;

struct Search {
    n: usize,
    range: Vec<usize>,
    domain: Vec<usize>,
    inverse: Vec<usize>,
    cell: Vec<u32>,
    row_used: Vec<bool>,
    col_used: Vec<bool>,
    todo: Vec<(usize, usize)>,
    found: Vec<Groupoid>,
}

impl Search {
    fn get(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.cell[x * self.n + y];
        (v != UNSET).then_some(v as usize)
    }

    /// Associativity over every triple whose four cells include `(x, y)` and are all set.
    fn associative_at(&self, x: usize, y: usize, z: usize) -> bool {
        let n = self.n;
        for w in 0..n {
            // (x y) w = x (y w)
            if let (Some(zw), Some(yw)) = (self.get(z, w), self.get(y, w)) {
                if let Some(v) = self.get(x, yw) {
                    if v != zw {
                        return false;
                    }
                }
            }
            // w (x y) = (w x) y
            if let (Some(wz), Some(wx)) = (self.get(w, z), self.get(w, x)) {
                if let Some(v) = self.get(wx, y) {
                    if v != wz {
                        return false;
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                // x = a b: (a b) y = a (b y)
                if self.get(a, b) == Some(x) {
                    if let Some(by) = self.get(b, y) {
                        if let Some(v) = self.get(a, by) {
                            if v != z {
                                return false;
                            }
                        }
                    }
                }
                // y = a b: x (a b) = (x a) b
                if self.get(a, b) == Some(y) {
                    if let Some(xa) = self.get(x, a) {
                        if let Some(v) = self.get(xa, b) {
                            if v != z {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn place(&mut self, x: usize, y: usize, z: usize) -> bool {
        let n = self.n;
        if self.row_used[x * n + z] || self.col_used[y * n + z] {
            return false;
        }
        self.cell[x * n + y] = z as u32;
        self.row_used[x * n + z] = true;
        self.col_used[y * n + z] = true;
        if self.associative_at(x, y, z) {
            true
        } else {
            self.unplace(x, y, z);
            false
        }
    }

    fn unplace(&mut self, x: usize, y: usize, z: usize) {
        let n = self.n;
        self.cell[x * n + y] = UNSET;
        self.row_used[x * n + z] = false;
        self.col_used[y * n + z] = false;
    }

    fn fill(&mut self, depth: usize) {
        if depth == self.todo.len() {
            self.emit();
            return;
        }
        let (x, y) = self.todo[depth];
        for z in 0..self.n {
            if self.range[z] != self.range[x] || self.domain[z] != self.domain[y] {
                continue;
            }
            if self.place(x, y, z) {
                self.fill(depth + 1);
                self.unplace(x, y, z);
            }
        }
    }

    fn emit(&mut self) {
        let n = self.n;
        let product = (0..n)
            .map(|x| (0..n).map(|y| self.get(x, y)).collect())
            .collect();
        let raw = RawGroupoid {
            name: format!("census-{n}"),
            size: n,
            product,
            inverse: self.inverse.clone(),
        };
        let built = Groupoid::build_capped(raw, n);
        debug_assert!(built.is_ok(), "search produced an invalid table: {built:?}");
        if let Ok(g) = built {
            self.found.push(g);
        }
    }
}

/// Every labelled groupoid in canonical form for one branch. Results are in
/// deterministic order and may contain isomorphic duplicates.
pub fn search_branch(branch: Branch) -> Vec<Groupoid> {
    let Branch {
        order: n,
        units: k,
        pairs: p,
    } = branch;
    assert!(k >= 1 && k + 2 * p <= n, "invalid branch {branch:?}");
    let mut inverse: Vec<usize> = (0..n).collect();
    for i in 0..p {
        let a = k + 2 * i;
        inverse[a] = a + 1;
        inverse[a + 1] = a;
    }
    let non_units: Vec<usize> = (k..n).collect();
    let mut found = Vec::new();
    let mut digits = vec![0usize; non_units.len()];
    loop {
        let mut range: Vec<usize> = (0..n).collect();
        for (slot, &x) in non_units.iter().enumerate() {
            range[x] = digits[slot];
        }
        let domain: Vec<usize> = (0..n).map(|x| range[inverse[x]]).collect();
        found.extend(search_assignment(n, range, domain, inverse.clone()));
        if !advance(&mut digits, k) {
            break;
        }
    }
    found
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

fn search_assignment(
    n: usize,
    range: Vec<usize>,
    domain: Vec<usize>,
    inverse: Vec<usize>,
) -> Vec<Groupoid> {
    let mut s = Search {
        n,
        range,
        domain,
        inverse,
        cell: vec![UNSET; n * n],
        row_used: vec![false; n * n],
        col_used: vec![false; n * n],
        todo: Vec::new(),
        found: Vec::new(),
    };
    let mut forced: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut force = |x: usize, y: usize, z: usize| match forced.insert((x, y), z) {
        Some(old) => old == z,
        None => true,
    };
    for x in 0..n {
        let ok = force(s.range[x], x, x)
            && force(x, s.domain[x], x)
            && force(x, s.inverse[x], s.range[x])
            && force(s.inverse[x], x, s.domain[x]);
        if !ok {
            return Vec::new();
        }
    }
    for (&(x, y), &z) in &forced {
        if s.range[y] != s.domain[x] || !s.place(x, y, z) {
            return Vec::new();
        }
    }
    s.todo = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| s.range[y] == s.domain[x] && s.get(x, y).is_none())
        .collect();
    s.fill(0);
    s.found
}

/// Pairwise non-isomorphic groupoids of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub order: usize,
    pub representatives: Vec<Groupoid>,
    /// Labelled tables produced by the search before deduplication.
    pub found: usize,
}

impl Census {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    /// Deduplicates per-branch search results, kept in the given order.
    pub fn from_branches(order: usize, results: Vec<Vec<Groupoid>>) -> Census {
        let mut found = 0;
        let mut reps: Vec<Groupoid> = Vec::new();
        let mut classes: BTreeMap<(usize, Vec<[usize; 6]>), Vec<usize>> = BTreeMap::new();
        for g in results.into_iter().flatten() {
            found += 1;
            let mut sig: Vec<[usize; 6]> = (0..g.len()).map(|x| signature(&g, x)).collect();
            sig.sort_unstable();
            let class = classes.entry((g.units().len(), sig)).or_default();
            if class
                .iter()
                .any(|&i| find_isomorphism(&reps[i], &g).is_some())
            {
                continue;
            }
            class.push(reps.len());
            reps.push(g);
        }
        let representatives = reps
            .into_iter()
            .enumerate()
            .map(|(i, g)| g.with_name(format!("census-{order}-{i}")))
            .collect();
        Census {
            order,
            representatives,
            found,
        }
    }
}

/// All groupoids of `order` elements up to isomorphism.
pub fn enumerate_groupoids(order: usize, limits: &Limits) -> Result<Census> {
    let branches = census_branches(order, limits)?;
    Ok(Census::from_branches(
        order,
        branches.into_iter().map(search_branch).collect(),
    ))
}

/// One groupoid's line in the converse probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeEntry {
    pub order: usize,
    pub name: alloc::string::String,
    pub principal: bool,
    /// `|S_G ∩ S'_G|`; the intersection always contains `j`.
    pub intersection_size: u128,
    /// Non-principal with intersection exactly `{j}`.
    pub candidate: bool,
}

impl ProbeEntry {
    pub fn of(g: &Groupoid) -> ProbeEntry {
        let principal = g.is_principal();
        let intersection_size = intersection_size(g);
        ProbeEntry {
            order: g.len(),
            name: g.name().into(),
            principal,
            intersection_size,
            candidate: !principal && intersection_size == 1,
        }
    }

    /// principal ⟹ the intersection is `{j}`
    pub fn forward_holds(&self) -> bool {
        !self.principal || self.intersection_size == 1
    }
}

/// Search evidence for "intersection `{j}` ⟹ principal" over a census range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub max_order: usize,
    pub entries: Vec<ProbeEntry>,
    /// Tables of every candidate, for independent checking.
    pub certificates: Vec<Groupoid>,
}

impl ProbeReport {
    pub fn from_censuses(max_order: usize, censuses: &[Census]) -> ProbeReport {
        let mut entries = Vec::new();
        let mut certificates = Vec::new();
        for g in censuses.iter().flat_map(|c| &c.representatives) {
            let e = ProbeEntry::of(g);
            if e.candidate {
                certificates.push(g.clone());
            }
            entries.push(e);
        }
        ProbeReport {
            max_order,
            entries,
            certificates,
        }
    }

    pub fn forward_holds(&self) -> bool {
        self.entries.iter().all(ProbeEntry::forward_holds)
    }

    pub fn candidates(&self) -> impl Iterator<Item = &ProbeEntry> {
        self.entries.iter().filter(|e| e.candidate)
    }
}

/// Runs the census for orders `1..=max_order` and probes each representative.
pub fn principal_converse_search(max_order: usize, limits: &Limits) -> Result<ProbeReport> {
    check_order(max_order.max(1), limits)?;
    let censuses = (1..=max_order)
        .map(|n| enumerate_groupoids(n, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProbeReport::from_censuses(max_order, &censuses))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let l = Limits::default();
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_groupoids(n, &l).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 2, 3, 7]);
    }

    #[test]
    fn order_two_is_c2_and_two_units() {
        let c = enumerate_groupoids(2, &Limits::default()).unwrap();
        let reps = &c.representatives;
        assert!(reps
            .iter()
            .any(|g| find_isomorphism(g, &Groupoid::cyclic(2).unwrap()).is_some()));
        assert!(reps
            .iter()
            .any(|g| find_isomorphism(g, &Groupoid::unit_set(2).unwrap()).is_some()));
        assert_eq!(reps[0].name(), "census-2-0");
    }

    #[test]
    fn order_three_contains_known_groupoids() {
        let c = enumerate_groupoids(3, &Limits::default()).unwrap();
        let known = [
            Groupoid::cyclic(3).unwrap(),
            Groupoid::unit_set(3).unwrap(),
            Groupoid::disjoint_union(
                &Groupoid::unit_set(1).unwrap(),
                &Groupoid::cyclic(2).unwrap(),
            )
            .unwrap(),
        ];
        for k in &known {
            assert!(
                c.representatives
                    .iter()
                    .any(|g| find_isomorphism(g, k).is_some()),
                "{}",
                k.name()
            );
        }
    }

    #[test]
    fn order_cap() {
        let l = Limits {
            max_census_order: 3,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_groupoids(4, &l),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn probe_entries() {
        let e = ProbeEntry::of(&Groupoid::cyclic(2).unwrap());
        assert!(!e.principal && !e.candidate);
        assert_eq!(e.intersection_size, 4);
        let r = principal_converse_search(2, &Limits::default()).unwrap();
        assert_eq!(r.entries.len(), 3);
        assert!(r.forward_holds());
        assert_eq!(r.candidates().count(), 0);
    }

    #[test]
    fn deterministic() {
        let l = Limits::default();
        assert_eq!(
            enumerate_groupoids(4, &l).unwrap(),
            enumerate_groupoids(4, &l).unwrap()
        );
    }
}
