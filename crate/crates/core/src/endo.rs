//! The monoids `S_G` and `S'_G` of self-maps of a groupoid.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

/// Which of the two monoids a map or table belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `S_G`: `f(x) ∈ G_{r(x)}`, product `∗`, identity `r`.
    S,
    /// `S'_G`: `f(x) ∈ G^{d(x)}`, product `⋆`, identity `d`.
    SPrime,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::S => "S",
            Side::SPrime => "S'",
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::S => Side::SPrime,
            Side::SPrime => Side::S,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Membership {
    pub in_s: bool,
    pub in_sp: bool,
}

impl Membership {
    pub fn on(self, side: Side) -> bool {
        match side {
            Side::S => self.in_s,
            Side::SPrime => self.in_sp,
        }
    }
}

fn check_len(g: &Groupoid, map: &[usize]) -> Result<()> {
    if map.len() != g.len() {
        return Err(Error::Shape(format!(
            "map has {} entries, expected {}",
            map.len(),
            g.len()
        )));
    }
    if let Some(x) = map.iter().position(|&v| v >= g.len()) {
        return Err(Error::Shape(format!("map[{x}] out of range")));
    }
    Ok(())
}

pub(crate) fn first_non_member(g: &Groupoid, map: &[usize], side: Side) -> Option<usize> {
    match side {
        Side::S => (0..g.len()).find(|&x| g.domain(map[x]) != g.range(x)),
        Side::SPrime => (0..g.len()).find(|&x| g.range(map[x]) != g.domain(x)),
    }
}

/// Membership flags: `d(f(x)) = r(x)` for all `x` (S), `r(f(x)) = d(x)` for all `x` (S').
pub fn membership(g: &Groupoid, map: &[usize]) -> Result<Membership> {
    check_len(g, map)?;
    Ok(Membership {
        in_s: first_non_member(g, map, Side::S).is_none(),
        in_sp: first_non_member(g, map, Side::SPrime).is_none(),
    })
}

/// A total self-map of a groupoid with its membership flags computed up front.
#[derive(Debug, Clone)]
pub struct GFun<'g> {
    base: &'g Groupoid,
    map: Vec<usize>,
    flags: Membership,
}

impl PartialEq for GFun<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.base, other.base) && self.map == other.map
    }
}

impl Eq for GFun<'_> {}

impl<'g> GFun<'g> {
    pub fn new(base: &'g Groupoid, map: Vec<usize>) -> Result<Self> {
        let flags = membership(base, &map)?;
        Ok(GFun { base, map, flags })
    }

    pub fn base(&self) -> &'g Groupoid {
        self.base
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn membership(&self) -> Membership {
        self.flags
    }

    pub fn in_s(&self) -> bool {
        self.flags.in_s
    }

    pub fn in_sp(&self) -> bool {
        self.flags.in_sp
    }

    pub(crate) fn require(&self, side: Side) -> Result<()> {
        if self.flags.on(side) {
            Ok(())
        } else {
            let x = first_non_member(self.base, &self.map, side).unwrap_or(0);
            Err(Error::Membership { side, x })
        }
    }

    fn same_base(&self, other: &GFun<'_>) -> Result<()> {
        if core::ptr::eq(self.base, other.base) {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }
}

/// `(f ∗ h)(x) = h(f(x) x) f(x)` written into `out`. Both maps must lie in `S_G`.
#[inline]
pub fn star_into(g: &Groupoid, f: &[usize], h: &[usize], out: &mut [usize]) {
    for (x, o) in out.iter_mut().enumerate() {
        let fx = f[x];
        *o = g.mul(h[g.mul(fx, x)], fx);
    }
}

/// `(h ⋆ k)(x) = h(x) k(x h(x))` written into `out`. Both maps must lie in `S'_G`.
#[inline]
pub fn star_prime_into(g: &Groupoid, h: &[usize], k: &[usize], out: &mut [usize]) {
    for (x, o) in out.iter_mut().enumerate() {
        let hx = h[x];
        *o = g.mul(hx, k[g.mul(x, hx)]);
    }
}

pub(crate) fn product_into(g: &Groupoid, side: Side, a: &[usize], b: &[usize], out: &mut [usize]) {
    match side {
        Side::S => star_into(g, a, b, out),
        Side::SPrime => star_prime_into(g, a, b, out),
    }
}

pub fn star<'g>(f: &GFun<'g>, h: &GFun<'g>) -> Result<GFun<'g>> {
    f.same_base(h)?;
    f.require(Side::S)?;
    h.require(Side::S)?;
    let g = f.base;
    let mut out = vec![0; g.len()];
    star_into(g, &f.map, &h.map, &mut out);
    GFun::new(g, out)
}

pub fn star_prime<'g>(h: &GFun<'g>, k: &GFun<'g>) -> Result<GFun<'g>> {
    h.same_base(k)?;
    h.require(Side::SPrime)?;
    k.require(Side::SPrime)?;
    let g = h.base;
    let mut out = vec![0; g.len()];
    star_prime_into(g, &h.map, &k.map, &mut out);
    GFun::new(g, out)
}

/// `f*(x) = (f(x⁻¹))⁻¹` on a raw map.
pub fn involution_map(g: &Groupoid, f: &[usize]) -> Vec<usize> {
    (0..g.len()).map(|x| g.inverse(f[g.inverse(x)])).collect()
}

/// `f*(x) = (f(x⁻¹))⁻¹`. Swaps `S_G` and `S'_G`; requires membership in one of them.
pub fn involution_star<'g>(f: &GFun<'g>) -> Result<GFun<'g>> {
    if !f.in_s() && !f.in_sp() {
        f.require(Side::S)?;
    }
    GFun::new(f.base, involution_map(f.base, &f.map))
}

#[derive(Debug, Clone)]
pub struct CanonicalElements<'g> {
    /// Range map, the identity of `S_G`.
    pub r: GFun<'g>,
    /// Domain map, the identity of `S'_G`.
    pub d: GFun<'g>,
    /// Inverse map, in both monoids.
    pub j: GFun<'g>,
}

pub fn canonical_elements(g: &Groupoid) -> CanonicalElements<'_> {
    let make = |m: &[usize]| GFun::new(g, m.to_vec()).expect("total map on g");
    CanonicalElements {
        r: make(g.range_map()),
        d: make(g.domain_map()),
        j: make(g.inverse_map()),
    }
}

/// Translation maps of a function: `L(x) = f(x) x` (needs `f ∈ S_G`) and
/// `R(x) = x f(x)` (needs `f ∈ S'_G`). A side the function is not in is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translations {
    pub left: Option<Vec<usize>>,
    pub right: Option<Vec<usize>>,
}

pub(crate) fn left_translation(g: &Groupoid, f: &[usize]) -> Vec<usize> {
    (0..g.len()).map(|x| g.mul(f[x], x)).collect()
}

pub(crate) fn right_translation(g: &Groupoid, f: &[usize]) -> Vec<usize> {
    (0..g.len()).map(|x| g.mul(x, f[x])).collect()
}

pub(crate) fn translation(g: &Groupoid, side: Side, f: &[usize]) -> Vec<usize> {
    match side {
        Side::S => left_translation(g, f),
        Side::SPrime => right_translation(g, f),
    }
}

pub fn translation_maps(f: &GFun<'_>) -> Result<Translations> {
    if !f.in_s() && !f.in_sp() {
        f.require(Side::S)?;
    }
    let g = f.base;
    Ok(Translations {
        left: f.in_s().then(|| left_translation(g, &f.map)),
        right: f.in_sp().then(|| right_translation(g, &f.map)),
    })
}

/// The product set `∏_x C(x)` that a monoid's elements range over, where
/// `C(x) = G_{r(x)}` for `S_G` and `G^{d(x)}` for `S'_G`.
///
/// Elements are ranked in lexicographic order of their map arrays, which is
/// the mixed-radix order with element `0` most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSpace {
    side: Side,
    choices: Vec<Vec<usize>>,
    /// Position of each element inside its own fiber.
    pos: Vec<usize>,
    weights: Vec<u128>,
    size: u128,
}

impl MapSpace {
    pub fn new(g: &Groupoid, side: Side) -> Self {
        let n = g.len();
        let fiber_key = |y: usize| match side {
            Side::S => g.domain(y),
            Side::SPrime => g.range(y),
        };
        let target = |x: usize| match side {
            Side::S => g.range(x),
            Side::SPrime => g.domain(x),
        };
        let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut pos = vec![0; n];
        for (y, p) in pos.iter_mut().enumerate() {
            let key = fiber_key(y);
            *p = fibers[key].len();
            fibers[key].push(y);
        }
        let choices: Vec<Vec<usize>> = (0..n).map(|x| fibers[target(x)].clone()).collect();
        let mut weights = vec![0u128; n];
        let mut size: u128 = 1;
        for x in (0..n).rev() {
            weights[x] = size;
            size = size.saturating_mul(choices[x].len() as u128);
        }
        MapSpace {
            side,
            choices,
            pos,
            weights,
            size,
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `∏_x |C(x)|`, saturating.
    pub fn size(&self) -> u128 {
        self.size
    }

    pub fn choices(&self, x: usize) -> &[usize] {
        &self.choices[x]
    }

    /// Rank of `map`, or `None` if it is not in the space.
    #[inline]
    pub fn rank(&self, map: &[usize]) -> Option<usize> {
        let mut idx: u128 = 0;
        for (x, &y) in map.iter().enumerate() {
            let p = self.pos[y];
            if self.choices[x].get(p) != Some(&y) {
                return None;
            }
            idx += p as u128 * self.weights[x];
        }
        usize::try_from(idx).ok()
    }

    /// Writes the map of rank `idx` into `out`.
    #[inline]
    pub fn unrank(&self, idx: usize, out: &mut [usize]) {
        let mut rest = idx as u128;
        for (x, o) in out.iter_mut().enumerate() {
            let digit = (rest / self.weights[x]) as usize;
            rest %= self.weights[x];
            *o = self.choices[x][digit];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_maps(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|m| {
                    (0..n).map(move |v| {
                        let mut m2 = m.clone();
                        m2.push(v);
                        m2
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn groups_admit_every_map() {
        let c3 = Groupoid::cyclic(3).unwrap();
        for m in all_maps(3) {
            let f = membership(&c3, &m).unwrap();
            assert!(f.in_s && f.in_sp);
        }
    }

    #[test]
    fn range_map_is_in_s() {
        let p = Groupoid::pair(2).unwrap();
        assert!(membership(&p, p.range_map()).unwrap().in_s);
        assert!(membership(&p, p.domain_map()).unwrap().in_sp);
        // constant at the non-unit (0,1)
        assert!(!membership(&p, &[1, 1, 1, 1]).unwrap().in_s);
    }

    #[test]
    fn star_examples_on_c2() {
        let c2 = Groupoid::cyclic(2).unwrap();
        let c = canonical_elements(&c2);
        let const_a = GFun::new(&c2, vec![1, 1]).unwrap();
        assert_eq!(star(&const_a, &const_a).unwrap(), c.r);
        for m in all_maps(2) {
            let f = GFun::new(&c2, m).unwrap();
            assert_eq!(star(&c.r, &f).unwrap(), f);
            assert_eq!(star(&f, &c.r).unwrap(), f);
            assert_eq!(star(&f, &c.j).unwrap(), c.j);
            assert_eq!(star_prime(&c.d, &f).unwrap(), f);
            assert_eq!(star_prime(&f, &c.d).unwrap(), f);
            assert_eq!(star_prime(&f, &c.j).unwrap(), c.j);
        }
    }

    #[test]
    fn star_prime_is_star_under_involution_on_c2() {
        let c2 = Groupoid::cyclic(2).unwrap();
        let maps: Vec<GFun<'_>> = all_maps(2)
            .into_iter()
            .map(|m| GFun::new(&c2, m).unwrap())
            .collect();
        for f in &maps {
            for h in &maps {
                let lhs = involution_star(&star(f, h).unwrap()).unwrap();
                let rhs =
                    star_prime(&involution_star(f).unwrap(), &involution_star(h).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn membership_errors() {
        let p = Groupoid::pair(2).unwrap();
        let q = Groupoid::pair(2).unwrap();
        let bad = GFun::new(&p, vec![1, 1, 1, 1]).unwrap();
        let r = canonical_elements(&p).r;
        assert!(matches!(
            star(&bad, &r),
            Err(Error::Membership { side: Side::S, .. })
        ));
        let r_other = canonical_elements(&q).r;
        assert!(matches!(star(&r, &r_other), Err(Error::BaseMismatch)));
        assert!(matches!(GFun::new(&p, vec![0, 1]), Err(Error::Shape(_))));
        // neither side
        assert!(involution_star(&bad).is_err());
        assert!(translation_maps(&bad).is_err());
    }

    #[test]
    fn involution_examples() {
        let p = Groupoid::pair(2).unwrap();
        let c = canonical_elements(&p);
        assert_eq!(involution_star(&c.j).unwrap(), c.j);
        assert_eq!(involution_star(&c.r).unwrap(), c.d);
        let c3 = Groupoid::cyclic(3).unwrap();
        let f = GFun::new(&c3, vec![1, 1, 1]).unwrap();
        let fs = involution_star(&f).unwrap();
        assert_eq!(fs.map(), &[2, 2, 2]);
        assert!(fs.in_sp());
        assert_eq!(involution_star(&fs).unwrap(), f);
    }

    #[test]
    fn canonical_examples() {
        let u = Groupoid::unit_set(3).unwrap();
        let c = canonical_elements(&u);
        assert_eq!(c.r.map(), &[0, 1, 2]);
        assert_eq!(c.r, c.d);
        assert_eq!(c.d, c.j);
        let c2 = Groupoid::cyclic(2).unwrap();
        assert_eq!(canonical_elements(&c2).j.map(), &[0, 1]);
        let p = Groupoid::pair(2).unwrap();
        let c = canonical_elements(&p);
        assert_eq!(c.j.map(), &[0, 2, 1, 3]);
        assert!(c.j.in_s() && c.j.in_sp() && c.r.in_s() && c.d.in_sp());
        assert_eq!(star(&c.j, &c.j).unwrap(), c.j);
        assert_eq!(star_prime(&c.j, &c.j).unwrap(), c.j);
    }

    #[test]
    fn translation_examples() {
        let p = Groupoid::pair(2).unwrap();
        let c = canonical_elements(&p);
        assert_eq!(
            translation_maps(&c.r).unwrap().left.unwrap(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            translation_maps(&c.j).unwrap().left.unwrap(),
            p.domain_map().to_vec()
        );
        assert_eq!(
            translation_maps(&c.j).unwrap().right.unwrap(),
            p.range_map().to_vec()
        );
        let c2 = Groupoid::cyclic(2).unwrap();
        let t = translation_maps(&GFun::new(&c2, vec![1, 1]).unwrap()).unwrap();
        assert_eq!(t.left.unwrap(), vec![1, 0]);
        assert_eq!(t.right.unwrap(), vec![1, 0]);
    }

    #[test]
    fn left_translation_turns_star_into_sequential_composition() {
        let p = Groupoid::pair(2).unwrap();
        let space = MapSpace::new(&p, Side::S);
        let mut f = vec![0; 4];
        let mut h = vec![0; 4];
        let mut fh = vec![0; 4];
        for i in 0..space.size() as usize {
            space.unrank(i, &mut f);
            for k in 0..space.size() as usize {
                space.unrank(k, &mut h);
                star_into(&p, &f, &h, &mut fh);
                let lf = left_translation(&p, &f);
                let lh = left_translation(&p, &h);
                let composed: Vec<usize> = lf.iter().map(|&y| lh[y]).collect();
                assert_eq!(left_translation(&p, &fh), composed);
            }
        }
    }

    #[test]
    fn map_space_rank_is_lexicographic() {
        let p = Groupoid::pair(2).unwrap();
        let space = MapSpace::new(&p, Side::S);
        assert_eq!(space.size(), 16);
        let mut prev: Option<Vec<usize>> = None;
        let mut m = vec![0; 4];
        for i in 0..16 {
            space.unrank(i, &mut m);
            assert_eq!(space.rank(&m), Some(i));
            assert!(membership(&p, &m).unwrap().in_s);
            if let Some(p) = &prev {
                assert!(p < &m);
            }
            prev = Some(m.clone());
        }
        assert_eq!(space.rank(&[1, 1, 1, 1]), None);
    }
}
