use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Axiom, Error, Result};
use crate::limits::Limits;

const UNDEFINED: u32 = u32::MAX;

/// An unvalidated groupoid table: elements are ids `0..size`, `product[x][y]`
/// is `None` when `(x, y)` is not composable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawGroupoid {
    pub name: String,
    pub size: usize,
    pub product: Vec<Vec<Option<usize>>>,
    pub inverse: Vec<usize>,
}

/// Result of one axiom check in [`Groupoid::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomStatus {
    pub axiom: Axiom,
    /// `None` when the axiom could not be evaluated because an earlier one failed.
    pub witness: Option<Option<Vec<usize>>>,
}

impl AxiomStatus {
    pub fn passed(&self) -> bool {
        matches!(self.witness, Some(None))
    }
}

/// A validated finite groupoid.
///
/// Immutable after construction. The product table uses a sentinel for
/// undefined entries; range, domain, and the unit space are derived once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    name: String,
    n: usize,
    product: Vec<u32>,
    inverse: Vec<usize>,
    range: Vec<usize>,
    domain: Vec<usize>,
    units: Vec<usize>,
    unit_flag: Vec<bool>,
}

fn shape_check(raw: &RawGroupoid) -> Result<()> {
    let n = raw.size;
    if n == 0 {
        return Err(Error::Shape("size must be positive".to_string()));
    }
    if n >= UNDEFINED as usize {
        return Err(Error::Shape(format!("size {n} too large")));
    }
    if raw.product.len() != n {
        return Err(Error::Shape(format!(
            "product has {} rows, expected {n}",
            raw.product.len()
        )));
    }
    for (i, row) in raw.product.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Shape(format!(
                "product row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(j) = row.iter().position(|e| matches!(e, Some(v) if *v >= n)) {
            return Err(Error::Shape(format!("product[{i}][{j}] out of range")));
        }
    }
    if raw.inverse.len() != n {
        return Err(Error::Shape(format!(
            "inverse has {} entries, expected {n}",
            raw.inverse.len()
        )));
    }
    if let Some(i) = raw.inverse.iter().position(|&v| v >= n) {
        return Err(Error::Shape(format!("inverse[{i}] out of range")));
    }
    Ok(())
}

struct Table<'a> {
    raw: &'a RawGroupoid,
}

impl Table<'_> {
    fn p(&self, x: usize, y: usize) -> Option<usize> {
        self.raw.product[x][y]
    }
    fn inv(&self, x: usize) -> usize {
        self.raw.inverse[x]
    }
}

fn first_failure<I, F>(iter: I, mut bad: F) -> Option<Vec<usize>>
where
    I: IntoIterator<Item = Vec<usize>>,
    F: FnMut(&[usize]) -> bool,
{
    iter.into_iter().find(|w| bad(w))
}

impl Groupoid {
    /// Validates `raw` against every groupoid axiom with the default size cap.
    pub fn build(raw: RawGroupoid) -> Result<Self> {
        Self::build_capped(raw, Limits::default().max_groupoid)
    }

    pub fn build_capped(raw: RawGroupoid, cap: usize) -> Result<Self> {
        if raw.size > cap {
            return Err(Error::CapExceeded {
                what: "groupoid elements",
                predicted: raw.size as u128,
                cap: cap as u128,
            });
        }
        let report = Self::check_axioms(&raw)?;
        if let Some(failed) = report.iter().find(|s| !s.passed()) {
            let witness = match &failed.witness {
                Some(Some(w)) => w.clone(),
                _ => Vec::new(),
            };
            return Err(Error::AxiomViolation {
                axiom: failed.axiom,
                witness,
            });
        }
        Ok(Self::assemble(raw))
    }

    /// Runs every axiom check exhaustively and reports each one.
    ///
    /// Only malformed tables are an error here; axiom failures are reported
    /// per entry with the first witness found in id order.
    pub fn check_axioms(raw: &RawGroupoid) -> Result<Vec<AxiomStatus>> {
        shape_check(raw)?;
        let n = raw.size;
        let t = Table { raw };
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| vec![x, y]));
        let mut out = Vec::new();

        out.push(AxiomStatus {
            axiom: Axiom::InverseInvolution,
            witness: Some(first_failure((0..n).map(|x| vec![x]), |w| {
                t.inv(t.inv(w[0])) != w[0]
            })),
        });

        let inv_composable = first_failure((0..n).map(|x| vec![x]), |w| {
            let x = w[0];
            t.p(t.inv(x), x).is_none() || t.p(x, t.inv(x)).is_none()
        });
        let inv_ok = inv_composable.is_none();
        out.push(AxiomStatus {
            axiom: Axiom::InverseComposable,
            witness: Some(inv_composable),
        });

        let mut assoc = None;
        'outer: for x in 0..n {
            for y in 0..n {
                let Some(xy) = t.p(x, y) else { continue };
                for z in 0..n {
                    let Some(yz) = t.p(y, z) else { continue };
                    match (t.p(xy, z), t.p(x, yz)) {
                        (Some(a), Some(b)) if a == b => {}
                        _ => {
                            assoc = Some(vec![x, y, z]);
                            break 'outer;
                        }
                    }
                }
            }
        }
        out.push(AxiomStatus {
            axiom: Axiom::Associativity,
            witness: Some(assoc),
        });

        out.push(AxiomStatus {
            axiom: Axiom::LeftCancellation,
            witness: Some(first_failure(pairs(), |w| {
                let (x, y) = (w[0], w[1]);
                match t.p(x, y) {
                    Some(xy) => t.p(t.inv(x), xy) != Some(y),
                    None => false,
                }
            })),
        });
        out.push(AxiomStatus {
            axiom: Axiom::RightCancellation,
            witness: Some(first_failure(pairs(), |w| {
                let (z, x) = (w[0], w[1]);
                match t.p(z, x) {
                    Some(zx) => t.p(zx, t.inv(x)) != Some(z),
                    None => false,
                }
            })),
        });

        if inv_ok {
            let range: Vec<usize> = (0..n).map(|x| t.p(x, t.inv(x)).unwrap()).collect();
            let domain: Vec<usize> = (0..n).map(|x| t.p(t.inv(x), x).unwrap()).collect();
            out.push(AxiomStatus {
                axiom: Axiom::Composability,
                witness: Some(first_failure(pairs(), |w| {
                    let (x, y) = (w[0], w[1]);
                    t.p(x, y).is_some() != (range[y] == domain[x])
                })),
            });
            let range_img: BTreeSet<usize> = range.iter().copied().collect();
            let domain_img: BTreeSet<usize> = domain.iter().copied().collect();
            let unit_law = first_failure((0..n).map(|x| vec![x]), |w| {
                let x = w[0];
                t.p(range[x], x) != Some(x) || t.p(x, domain[x]) != Some(x)
            })
            .or_else(|| {
                range_img
                    .symmetric_difference(&domain_img)
                    .next()
                    .map(|&u| vec![u])
            });
            out.push(AxiomStatus {
                axiom: Axiom::UnitLaw,
                witness: Some(unit_law),
            });
        } else {
            out.push(AxiomStatus {
                axiom: Axiom::Composability,
                witness: None,
            });
            out.push(AxiomStatus {
                axiom: Axiom::UnitLaw,
                witness: None,
            });
        }
        Ok(out)
    }

    fn assemble(raw: RawGroupoid) -> Self {
        let n = raw.size;
        let mut product = vec![UNDEFINED; n * n];
        for (x, row) in raw.product.iter().enumerate() {
            for (y, e) in row.iter().enumerate() {
                if let Some(v) = e {
                    product[x * n + y] = *v as u32;
                }
            }
        }
        let inverse = raw.inverse;
        let range: Vec<usize> = (0..n)
            .map(|x| product[x * n + inverse[x]] as usize)
            .collect();
        let domain: Vec<usize> = (0..n)
            .map(|x| product[inverse[x] * n + x] as usize)
            .collect();
        let mut unit_flag = vec![false; n];
        for &u in &range {
            unit_flag[u] = true;
        }
        let units = (0..n).filter(|&u| unit_flag[u]).collect();
        Groupoid {
            name: raw.name,
            n,
            product,
            inverse,
            range,
            domain,
            units,
            unit_flag,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn product(&self, x: usize, y: usize) -> Option<usize> {
        match self.product[x * self.n + y] {
            UNDEFINED => None,
            v => Some(v as usize),
        }
    }

    pub fn is_composable(&self, x: usize, y: usize) -> bool {
        self.product[x * self.n + y] != UNDEFINED
    }

    /// Product of a pair the caller knows to be composable.
    ///
    /// # Panics
    /// If `(x, y)` is not composable.
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        let v = self.product[x * self.n + y];
        assert!(v != UNDEFINED, "({x}, {y}) is not composable");
        v as usize
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// `r(x) = x x⁻¹`
    pub fn range(&self, x: usize) -> usize {
        self.range[x]
    }

    /// `d(x) = x⁻¹ x`
    pub fn domain(&self, x: usize) -> usize {
        self.domain[x]
    }

    pub fn inverse_map(&self) -> &[usize] {
        &self.inverse
    }

    pub fn range_map(&self) -> &[usize] {
        &self.range
    }

    pub fn domain_map(&self) -> &[usize] {
        &self.domain
    }

    /// The unit space `G⁰`, sorted.
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.unit_flag[x]
    }

    /// `G_u = d⁻¹(u)`
    pub fn domain_fiber(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&x| self.domain[x] == u).collect()
    }

    /// `G^u = r⁻¹(u)`
    pub fn range_fiber(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&x| self.range[x] == u).collect()
    }

    pub fn defined_count(&self) -> usize {
        self.product.iter().filter(|&&v| v != UNDEFINED).count()
    }

    /// True when `x ↦ (r(x), d(x))` is injective.
    pub fn is_principal(&self) -> bool {
        let mut seen = BTreeSet::new();
        (0..self.n).all(|x| seen.insert((self.range[x], self.domain[x])))
    }

    /// A group is a groupoid with a single unit.
    pub fn is_group(&self) -> bool {
        self.units.len() == 1
    }

    pub fn to_raw(&self) -> RawGroupoid {
        let n = self.n;
        RawGroupoid {
            name: self.name.clone(),
            size: n,
            product: (0..n)
                .map(|x| (0..n).map(|y| self.product(x, y)).collect())
                .collect(),
            inverse: self.inverse.clone(),
        }
    }

    /// Checks that `subset` is closed under defined products and inverses.
    pub fn check_subgroupoid(&self, subset: &[usize]) -> Result<()> {
        let mut member = vec![false; self.n];
        for &a in subset {
            if a >= self.n {
                return Err(Error::Shape(format!("element {a} out of range")));
            }
            member[a] = true;
        }
        for &a in subset {
            if !member[self.inverse[a]] {
                return Err(Error::NotASubgroupoid { witness: vec![a] });
            }
            for &b in subset {
                if let Some(ab) = self.product(a, b) {
                    if !member[ab] {
                        return Err(Error::NotASubgroupoid {
                            witness: vec![a, b],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Element sets of the connected components, ordered by smallest unit.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for x in 0..self.n {
            let a = find(&mut parent, self.range[x]);
            let b = find(&mut parent, self.domain[x]);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.n {
            let root = find(&mut parent, self.range[x]);
            match roots.iter().position(|&r| r == root) {
                Some(i) => comps[i].push(x),
                None => {
                    roots.push(root);
                    comps.push(vec![x]);
                }
            }
        }
        let mut order: Vec<usize> = (0..roots.len()).collect();
        order.sort_by_key(|&i| roots[i]);
        order
            .into_iter()
            .map(|i| core::mem::take(&mut comps[i]))
            .collect()
    }

    /// The isotropy group `G^u_u`.
    pub fn isotropy(&self, u: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.range[x] == u && self.domain[x] == u)
            .collect()
    }

    // ---- constructors -------------------------------------------------

    /// The pair groupoid on `n` points. Element `(i, j)` has id `i * n + j`;
    /// `(i, j)(j, k) = (i, k)` and `(i, j)⁻¹ = (j, i)`.
    pub fn pair(n: usize) -> Result<Self> {
        Self::pair_capped(n, Limits::default().max_groupoid)
    }

    pub fn pair_capped(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("pair groupoid needs n >= 1".to_string()));
        }
        check_cap(n.saturating_mul(n), cap)?;
        let size = n * n;
        let id = |i: usize, j: usize| i * n + j;
        let mut product = vec![vec![None; size]; size];
        let mut inverse = vec![0; size];
        for i in 0..n {
            for j in 0..n {
                inverse[id(i, j)] = id(j, i);
                for k in 0..n {
                    product[id(i, j)][id(j, k)] = Some(id(i, k));
                }
            }
        }
        Self::build_capped(
            RawGroupoid {
                name: format!("pair({n})"),
                size,
                product,
                inverse,
            },
            cap,
        )
    }

    /// The cyclic group of order `n`; element `k` is the `k`-th power of a generator.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_capped(n, Limits::default().max_groupoid)
    }

    pub fn cyclic_capped(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("cyclic group needs n >= 1".to_string()));
        }
        check_cap(n, cap)?;
        let cayley = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        Self::group_capped(format!("C{n}"), cayley, inverse, cap)
    }

    /// The Klein four-group, ids `0..4` under bitwise xor.
    pub fn klein_four() -> Self {
        let cayley = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        Self::group("V4", cayley, (0..4).collect()).expect("xor table is a group")
    }

    /// The groupoid `G = G⁰` on `n` points: only `u u = u` is defined.
    pub fn unit_set(n: usize) -> Result<Self> {
        Self::unit_set_capped(n, Limits::default().max_groupoid)
    }

    pub fn unit_set_capped(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("unit groupoid needs n >= 1".to_string()));
        }
        check_cap(n, cap)?;
        let mut product = vec![vec![None; n]; n];
        for (u, row) in product.iter_mut().enumerate() {
            row[u] = Some(u);
        }
        Self::build_capped(
            RawGroupoid {
                name: format!("unit({n})"),
                size: n,
                product,
                inverse: (0..n).collect(),
            },
            cap,
        )
    }

    /// Wraps a group table as a one-unit groupoid.
    pub fn group(
        name: impl Into<String>,
        cayley: Vec<Vec<usize>>,
        inverse: Vec<usize>,
    ) -> Result<Self> {
        Self::group_capped(name, cayley, inverse, Limits::default().max_groupoid)
    }

    pub fn group_capped(
        name: impl Into<String>,
        cayley: Vec<Vec<usize>>,
        inverse: Vec<usize>,
        cap: usize,
    ) -> Result<Self> {
        let size = cayley.len();
        let product = cayley
            .into_iter()
            .map(|row| row.into_iter().map(Some).collect())
            .collect();
        Self::build_capped(
            RawGroupoid {
                name: name.into(),
                size,
                product,
                inverse,
            },
            cap,
        )
    }

    /// Tagged union: `g1`'s ids first, then `g2`'s shifted by `g1.len()`.
    /// No product crosses the two blocks.
    pub fn disjoint_union(g1: &Groupoid, g2: &Groupoid) -> Result<Self> {
        Self::disjoint_union_capped(g1, g2, Limits::default().max_groupoid)
    }

    pub fn disjoint_union_capped(g1: &Groupoid, g2: &Groupoid, cap: usize) -> Result<Self> {
        let (a, b) = (g1.n, g2.n);
        check_cap(a + b, cap)?;
        let size = a + b;
        let mut product = vec![vec![None; size]; size];
        for (x, row) in product.iter_mut().take(a).enumerate() {
            for (y, cell) in row.iter_mut().take(a).enumerate() {
                *cell = g1.product(x, y);
            }
        }
        for x in 0..b {
            for y in 0..b {
                product[a + x][a + y] = g2.product(x, y).map(|v| v + a);
            }
        }
        let inverse = g1
            .inverse
            .iter()
            .copied()
            .chain(g2.inverse.iter().map(|&v| v + a))
            .collect();
        Self::build_capped(
            RawGroupoid {
                name: format!("{}+{}", g1.name, g2.name),
                size,
                product,
                inverse,
            },
            cap,
        )
    }
}

pub(crate) fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::CapExceeded {
            what: "groupoid elements",
            predicted: size as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}
