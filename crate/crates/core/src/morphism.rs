use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

/// Classification of a total map between two groupoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MorphismKind {
    /// `(x, y)` composable implies `(m x, m y)` composable and `m(xy) = m(x) m(y)`.
    pub homomorphism: bool,
    /// `(x, y)` composable implies `(m y, m x)` composable and `m(xy) = m(y) m(x)`.
    pub antihomomorphism: bool,
    /// Bijective homomorphism whose inverse is a homomorphism.
    pub isomorphism: bool,
    pub units_to_units: bool,
    pub inverses_to_inverses: bool,
}

fn check_map(g: &Groupoid, h: &Groupoid, m: &[usize]) -> Result<()> {
    if m.len() != g.len() {
        return Err(Error::Shape(format!(
            "map has {} entries, expected {}",
            m.len(),
            g.len()
        )));
    }
    if let Some(x) = m.iter().position(|&v| v >= h.len()) {
        return Err(Error::Shape(format!("map[{x}] out of range")));
    }
    Ok(())
}

fn is_hom(g: &Groupoid, h: &Groupoid, m: &[usize], anti: bool) -> bool {
    (0..g.len()).all(|x| {
        (0..g.len()).all(|y| match g.product(x, y) {
            None => true,
            Some(xy) => {
                let image = if anti {
                    h.product(m[y], m[x])
                } else {
                    h.product(m[x], m[y])
                };
                image == Some(m[xy])
            }
        })
    })
}

pub fn morphism_classify(g: &Groupoid, h: &Groupoid, m: &[usize]) -> Result<MorphismKind> {
    check_map(g, h, m)?;
    let homomorphism = is_hom(g, h, m, false);
    let antihomomorphism = is_hom(g, h, m, true);
    let mut isomorphism = false;
    if homomorphism && g.len() == h.len() {
        let mut back = vec![usize::MAX; h.len()];
        let mut bijective = true;
        for (x, &y) in m.iter().enumerate() {
            if back[y] != usize::MAX {
                bijective = false;
                break;
            }
            back[y] = x;
        }
        isomorphism = bijective && is_hom(h, g, &back, false);
    }
    let units_to_units = g.units().iter().all(|&u| h.is_unit(m[u]));
    let inverses_to_inverses = (0..g.len()).all(|x| m[g.inverse(x)] == h.inverse(m[x]));
    Ok(MorphismKind {
        homomorphism,
        antihomomorphism,
        isomorphism,
        units_to_units,
        inverses_to_inverses,
    })
}

/// `Fix(m) = { x : m(x) = x }`.
pub fn fixed_points(m: &[usize]) -> Vec<usize> {
    m.iter()
        .enumerate()
        .filter(|&(x, &y)| x == y)
        .map(|(x, _)| x)
        .collect()
}

/// Isomorphism-invariant fingerprint of one element.
pub(crate) fn signature(g: &Groupoid, x: usize) -> [usize; 6] {
    let (r, d) = (g.range(x), g.domain(x));
    let parallel = (0..g.len())
        .filter(|&y| g.range(y) == r && g.domain(y) == d)
        .count();
    let mut order = 0;
    if r == d {
        let mut p = x;
        order = 1;
        while p != r {
            p = g.mul(p, x);
            order += 1;
        }
    }
    [
        g.is_unit(x) as usize,
        (g.inverse(x) == x) as usize,
        g.range_fiber(r).len(),
        g.domain_fiber(d).len(),
        parallel,
        order,
    ]
}

struct IsoSearch<'a> {
    g: &'a Groupoid,
    h: &'a Groupoid,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    limit: usize,
    found: Vec<Vec<usize>>,
}

const UNSET: usize = usize::MAX;

impl IsoSearch<'_> {
    fn consistent(&self, x: usize) -> bool {
        let (g, h, m) = (self.g, self.h, &self.map);
        let mx = m[x];
        if m[g.inverse(x)] != UNSET && m[g.inverse(x)] != h.inverse(mx) {
            return false;
        }
        for a in 0..g.len() {
            let ma = m[a];
            if ma == UNSET {
                continue;
            }
            for (p, q, mp, mq) in [(x, a, mx, ma), (a, x, ma, mx)] {
                match (g.product(p, q), h.product(mp, mq)) {
                    (None, None) => {}
                    (Some(pq), Some(img)) => {
                        if m[pq] != UNSET && m[pq] != img {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        // products landing on x
        for a in 0..g.len() {
            if m[a] == UNSET {
                continue;
            }
            for b in 0..g.len() {
                if m[b] == UNSET || g.product(a, b) != Some(x) {
                    continue;
                }
                if h.product(m[a], m[b]) != Some(mx) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            self.found.push(self.map.clone());
            return;
        }
        let x = self.order[depth];
        for i in 0..self.candidates[x].len() {
            let y = self.candidates[x][i];
            if self.used[y] {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            if self.consistent(x) {
                self.run(depth + 1);
            }
            self.used[y] = false;
            self.map[x] = UNSET;
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}

/// Up to `limit` isomorphisms `g → h` in lexicographic order of their maps.
pub fn isomorphisms(g: &Groupoid, h: &Groupoid, limit: usize) -> Vec<Vec<usize>> {
    let n = g.len();
    if n != h.len() || g.units().len() != h.units().len() || limit == 0 {
        return Vec::new();
    }
    let sg: Vec<_> = (0..n).map(|x| signature(g, x)).collect();
    let sh: Vec<_> = (0..n).map(|y| signature(h, y)).collect();
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Vec::new();
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| sg[x] == sh[y]).collect())
        .collect();
    // units first, then by id: unit images pin down most of the structure
    let mut order: Vec<usize> = g.units().to_vec();
    order.extend((0..n).filter(|&x| !g.is_unit(x)));
    let mut search = IsoSearch {
        g,
        h,
        order,
        candidates,
        map: vec![UNSET; n],
        used: vec![false; n],
        limit,
        found: Vec::new(),
    };
    search.run(0);
    let mut found = search.found;
    found.sort();
    found
}

pub fn find_isomorphism(g: &Groupoid, h: &Groupoid) -> Option<Vec<usize>> {
    isomorphisms(g, h, 1).pop()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_an_isomorphism() {
        for g in [
            Groupoid::cyclic(3).unwrap(),
            Groupoid::pair(2).unwrap(),
            Groupoid::unit_set(2).unwrap(),
        ] {
            let id: Vec<usize> = (0..g.len()).collect();
            let k = morphism_classify(&g, &g, &id).unwrap();
            assert!(k.homomorphism && k.isomorphism && k.units_to_units && k.inverses_to_inverses);
        }
    }

    #[test]
    fn inversion_on_c3_is_anti_only() {
        // C3 is abelian, so inversion is also a homomorphism there; the
        // antihomomorphism property is what matters
        let c3 = Groupoid::cyclic(3).unwrap();
        let j = c3.inverse_map().to_vec();
        let k = morphism_classify(&c3, &c3, &j).unwrap();
        assert!(k.antihomomorphism);
        // on pair(2), inversion is an antihomomorphism and not a homomorphism
        let p = Groupoid::pair(2).unwrap();
        let k = morphism_classify(&p, &p, p.inverse_map()).unwrap();
        assert!(k.antihomomorphism && !k.homomorphism);
    }

    #[test]
    fn constant_unit_map_is_homomorphism() {
        let c2 = Groupoid::cyclic(2).unwrap();
        let k = morphism_classify(&c2, &c2, &[0, 0]).unwrap();
        assert!(k.homomorphism && !k.isomorphism);
    }

    #[test]
    fn out_of_range_map() {
        let c2 = Groupoid::cyclic(2).unwrap();
        assert!(matches!(
            morphism_classify(&c2, &c2, &[0, 2]),
            Err(Error::Shape(_))
        ));
        assert!(morphism_classify(&c2, &c2, &[0]).is_err());
    }

    #[test]
    fn fixed_point_sets() {
        assert_eq!(fixed_points(&[0, 1, 2]), vec![0, 1, 2]);
        let c2 = Groupoid::cyclic(2).unwrap();
        assert_eq!(fixed_points(c2.inverse_map()), vec![0, 1]);
        let c3 = Groupoid::cyclic(3).unwrap();
        assert_eq!(fixed_points(c3.inverse_map()), vec![0]);
    }

    #[test]
    fn automorphism_counts() {
        let count = |g: &Groupoid| isomorphisms(g, g, usize::MAX).len();
        assert_eq!(count(&Groupoid::cyclic(2).unwrap()), 1);
        assert_eq!(count(&Groupoid::cyclic(3).unwrap()), 2);
        assert_eq!(count(&Groupoid::cyclic(5).unwrap()), 4);
        assert_eq!(count(&Groupoid::klein_four()), 6);
        assert_eq!(count(&Groupoid::pair(2).unwrap()), 2);
        assert_eq!(count(&Groupoid::unit_set(3).unwrap()), 6);
        // pair(3): unit permutations only
        assert_eq!(count(&Groupoid::pair(3).unwrap()), 6);
    }

    #[test]
    fn non_isomorphic_groups() {
        assert!(find_isomorphism(&Groupoid::cyclic(4).unwrap(), &Groupoid::klein_four()).is_none());
        assert!(find_isomorphism(&Groupoid::pair(2).unwrap(), &Groupoid::klein_four()).is_none());
    }
}
