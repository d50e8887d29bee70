use alloc::vec;
use alloc::vec::Vec;

use crate::endo::{product_into, GFun, MapSpace, Side};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::limits::Limits;

/// How much of the associativity law a table has been checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssocCoverage {
    /// Every triple of indices.
    Exhaustive,
    /// Skipped because `len³` exceeded [`Limits::max_assoc_triples`].
    Unchecked { triples: u128 },
}

/// A fully enumerated `S_G` or `S'_G` with its Cayley table.
///
/// Elements are listed in lexicographic order of their map arrays, so
/// indices are stable across runs and platforms.
#[derive(Debug, Clone)]
pub struct MonoidTable {
    side: Side,
    n: usize,
    size: usize,
    space: MapSpace,
    maps: Vec<usize>,
    op: Vec<u32>,
    identity: usize,
    assoc: AssocCoverage,
}

fn predicted(g: &Groupoid, side: Side, limits: &Limits) -> Result<(MapSpace, usize)> {
    let space = MapSpace::new(g, side);
    let size = space.size();
    if size > limits.max_monoid as u128 {
        return Err(Error::CapExceeded {
            what: "monoid elements",
            predicted: size,
            cap: limits.max_monoid as u128,
        });
    }
    Ok((space, size as usize))
}

impl MonoidTable {
    pub fn enumerate(g: &Groupoid, side: Side, limits: &Limits) -> Result<Self> {
        let (space, size) = predicted(g, side, limits)?;
        let products = (size as u128) * (size as u128);
        if products > limits.max_products {
            return Err(Error::CapExceeded {
                what: "cayley products",
                predicted: products,
                cap: limits.max_products,
            });
        }
        let n = g.len();
        let mut maps = vec![0; size * n];
        for (i, chunk) in maps.chunks_mut(n.max(1)).enumerate().take(size) {
            space.unrank(i, chunk);
        }
        let mut op = vec![0u32; size * size];
        let mut out = vec![0; n];
        for i in 0..size {
            let a = &maps[i * n..(i + 1) * n];
            for j in 0..size {
                product_into(g, side, a, &maps[j * n..(j + 1) * n], &mut out);
                let k = space.rank(&out).ok_or(Error::LawViolation {
                    law: "closure",
                    witness: vec![i, j],
                })?;
                op[i * size + j] = k as u32;
            }
        }
        let unit_map = match side {
            Side::S => g.range_map(),
            Side::SPrime => g.domain_map(),
        };
        let identity = space.rank(unit_map).ok_or(Error::LawViolation {
            law: "identity membership",
            witness: Vec::new(),
        })?;
        let mut table = MonoidTable {
            side,
            n,
            size,
            space,
            maps,
            op,
            identity,
            assoc: AssocCoverage::Unchecked { triples: 0 },
        };
        if let Some(i) =
            (0..size).find(|&i| table.product(identity, i) != i || table.product(i, identity) != i)
        {
            return Err(Error::LawViolation {
                law: "identity",
                witness: vec![i],
            });
        }
        let triples = products * size as u128;
        if triples <= limits.max_assoc_triples {
            if let Some(w) = table.associativity_failure() {
                return Err(Error::LawViolation {
                    law: "associativity",
                    witness: w.to_vec(),
                });
            }
            table.assoc = AssocCoverage::Exhaustive;
        } else {
            table.assoc = AssocCoverage::Unchecked { triples };
        }
        Ok(table)
    }

    /// Lists the elements of a monoid without building its Cayley table.
    pub fn enumerate_elements(
        g: &Groupoid,
        side: Side,
        limits: &Limits,
    ) -> Result<Vec<Vec<usize>>> {
        let (space, size) = predicted(g, side, limits)?;
        Ok((0..size)
            .map(|i| {
                let mut m = vec![0; g.len()];
                space.unrank(i, &mut m);
                m
            })
            .collect())
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.op.is_empty()
    }

    /// Index of `r` (for `S_G`) or `d` (for `S'_G`).
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn assoc_coverage(&self) -> AssocCoverage {
        self.assoc
    }

    pub fn space(&self) -> &MapSpace {
        &self.space
    }

    pub fn map(&self, i: usize) -> &[usize] {
        &self.maps[i * self.n..(i + 1) * self.n]
    }

    pub fn maps(&self) -> impl Iterator<Item = &[usize]> + '_ {
        (0..self.len()).map(move |i| self.map(i))
    }

    pub fn gfun<'g>(&self, g: &'g Groupoid, i: usize) -> GFun<'g> {
        GFun::new(g, self.map(i).to_vec()).expect("table map is total on its groupoid")
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.op[i * self.size + j] as usize
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let s = self.len();
        self.op[i * s..(i + 1) * s].iter().map(|&v| v as usize)
    }

    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        if map.len() != self.n {
            return None;
        }
        self.space.rank(map)
    }

    /// First triple `(i, j, k)` with `(ij)k ≠ i(jk)`, scanning all triples.
    pub fn associativity_failure(&self) -> Option<[usize; 3]> {
        let s = self.len();
        for i in 0..s {
            for j in 0..s {
                let ij = self.product(i, j);
                let row_ij = &self.op[ij * s..(ij + 1) * s];
                let row_j = &self.op[j * s..(j + 1) * s];
                let row_i = &self.op[i * s..(i + 1) * s];
                for k in 0..s {
                    if row_ij[k] != row_i[row_j[k] as usize] {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }
}
