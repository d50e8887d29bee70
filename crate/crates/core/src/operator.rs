//! Composition operators on the coordinate space over `G`.
//!
//! A self-map `τ` of `G` becomes the matrix with row `x` holding a single 1
//! in column `τ(x)`, so `(M v)[x] = v[τ(x)]`, i.e. `M v = v ∘ τ`. With this
//! convention `M(τ₁) M(τ₂) = M(τ₂ ∘ τ₁)`. Since `L_{f∗g} = L_g ∘ L_f` the map
//! `f ↦ M(L_f)` is a monoid homomorphism. Worked on `C2 = {e, a}`:
//!
//! ```text
//! f = const-a: L_f = swap,  M = [0 1; 1 0]
//! f ∗ f = r:   L_r = id,    M(r) = I = [0 1; 1 0]·[0 1; 1 0]
//! ```

use alloc::vec;
use alloc::vec::Vec;

use crate::endo::{involution_map, left_translation, right_translation, GFun, Side};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::structure::{dense_submonoid, group_of_units, involution_indices};
use crate::table::MonoidTable;

/// A dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinOp {
    n: usize,
    entries: Vec<i64>,
}

impl LinOp {
    /// The composition operator `v ↦ v ∘ τ`.
    pub fn composition(tau: &[usize]) -> Self {
        let n = tau.len();
        let mut entries = vec![0; n * n];
        for (x, &y) in tau.iter().enumerate() {
            entries[x * n + y] = 1;
        }
        LinOp { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let id: Vec<usize> = (0..n).collect();
        Self::composition(&id)
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(alloc::string::String::from(
                "matrix must be square",
            )));
        }
        Ok(LinOp {
            n,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n, "vector length must match dimension");
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &LinOp) -> LinOp {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        LinOp { n, entries }
    }

    pub fn transpose(&self) -> LinOp {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j);
            }
        }
        LinOp { n, entries }
    }

    /// Every row is a unit vector.
    pub fn is_composition_operator(&self) -> bool {
        (0..self.n).all(|i| {
            let row = &self.entries[i * self.n..(i + 1) * self.n];
            row.iter().all(|&v| v == 0 || v == 1) && row.iter().filter(|&&v| v == 1).count() == 1
        })
    }

    /// Column index of the 1 in each row, if this is a composition operator.
    pub fn underlying_map(&self) -> Option<Vec<usize>> {
        if !self.is_composition_operator() {
            return None;
        }
        Some(
            (0..self.n)
                .map(|i| (0..self.n).find(|&j| self.get(i, j) == 1).unwrap())
                .collect(),
        )
    }

    /// Fraction-free Gaussian elimination. Returns `(rank, determinant)`.
    fn bareiss(&self) -> Result<(usize, i64)> {
        let n = self.n;
        let mut m: Vec<i128> = self.entries.iter().map(|&v| v as i128).collect();
        let mut rank = 0;
        let mut prev: i128 = 1;
        let mut sign = 1i128;
        let mut col = 0;
        while rank < n && col < n {
            let Some(p) = (rank..n).find(|&r| m[r * n + col] != 0) else {
                col += 1;
                continue;
            };
            if p != rank {
                for j in 0..n {
                    m.swap(p * n + j, rank * n + j);
                }
                sign = -sign;
            }
            let pivot = m[rank * n + col];
            for r in rank + 1..n {
                for j in col + 1..n {
                    let v = m[r * n + j]
                        .checked_mul(pivot)
                        .and_then(|a| {
                            m[r * n + col]
                                .checked_mul(m[rank * n + j])
                                .and_then(|b| a.checked_sub(b))
                        })
                        .ok_or(Error::Overflow)?;
                    m[r * n + j] = v / prev;
                }
                m[r * n + col] = 0;
            }
            prev = pivot;
            rank += 1;
            col += 1;
        }
        let det = if rank == n && n > 0 {
            sign * prev
        } else if n == 0 {
            1
        } else {
            0
        };
        Ok((rank, i64::try_from(det).map_err(|_| Error::Overflow)?))
    }

    pub fn rank(&self) -> Result<usize> {
        self.bareiss().map(|(r, _)| r)
    }

    pub fn determinant(&self) -> Result<i64> {
        self.bareiss().map(|(_, d)| d)
    }

    /// Checks `M(αu + βv) = α M u + β M v` on a fixed family of integer vectors.
    pub fn linearity_holds(&self) -> bool {
        let n = self.n;
        let vec_k =
            |k: i64| -> Vec<i64> { (0..n as i64).map(|x| (x * k + 3 * k + 1) % 7 - 3).collect() };
        (1..5).all(|k| {
            let (u, v) = (vec_k(k), vec_k(k + 5));
            let (alpha, beta) = (k - 2, 3 - 2 * k);
            let mix: Vec<i64> = u
                .iter()
                .zip(&v)
                .map(|(a, b)| alpha * a + beta * b)
                .collect();
            let lhs = self.apply(&mix);
            let (mu, mv) = (self.apply(&u), self.apply(&v));
            lhs.iter()
                .zip(mu.iter().zip(&mv))
                .all(|(l, (a, b))| *l == alpha * a + beta * b)
        })
    }
}

/// Matrix of `g ↦ g ∘ L_f` for `f ∈ S_G`.
pub fn left_operator(f: &GFun<'_>) -> Result<LinOp> {
    f.require(Side::S)?;
    Ok(LinOp::composition(&left_translation(f.base(), f.map())))
}

/// Matrix of `g ↦ g ∘ R_f` for `f ∈ S'_G`.
pub fn right_operator(f: &GFun<'_>) -> Result<LinOp> {
    f.require(Side::SPrime)?;
    Ok(LinOp::composition(&right_translation(f.base(), f.map())))
}

fn operators(g: &Groupoid, t: &MonoidTable) -> Vec<LinOp> {
    (0..t.len())
        .map(|i| {
            let m = t.map(i);
            LinOp::composition(&match t.side() {
                Side::S => left_translation(g, m),
                Side::SPrime => right_translation(g, m),
            })
        })
        .collect()
}

/// Results of checking one side's representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideAudit {
    pub pairs_checked: usize,
    /// `M(a ∘ b) = M(a) M(b)` for every pair.
    pub homomorphism: bool,
    /// Distinct elements give distinct matrices.
    pub injective: bool,
    /// Every matrix has exactly one 1 per row and passes the linearity check.
    pub well_formed: bool,
    /// `det M(f) ≠ 0` exactly on the group of units.
    pub det_matches_units: bool,
    /// Every element of the dense submonoid gives a full-rank matrix.
    pub dense_full_rank: bool,
    pub witness: Option<Vec<usize>>,
}

impl SideAudit {
    pub fn pass(&self) -> bool {
        self.homomorphism
            && self.injective
            && self.well_formed
            && self.det_matches_units
            && self.dense_full_rank
    }
}

fn audit_side(g: &Groupoid, t: &MonoidTable, dense: &[usize]) -> Result<(SideAudit, Vec<LinOp>)> {
    let ops = operators(g, t);
    let s = t.len();
    let mut a = SideAudit {
        pairs_checked: 0,
        homomorphism: true,
        injective: true,
        well_formed: ops
            .iter()
            .all(|m| m.is_composition_operator() && m.linearity_holds()),
        det_matches_units: true,
        dense_full_rank: true,
        witness: None,
    };
    for i in 0..s {
        for j in 0..s {
            a.pairs_checked += 1;
            if ops[t.product(i, j)] != ops[i].compose(&ops[j]) {
                a.homomorphism = false;
                a.witness.get_or_insert_with(|| vec![i, j]);
            }
        }
    }
    let mut sorted: Vec<(&LinOp, usize)> = ops.iter().zip(0..).collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        a.injective = false;
        a.witness.get_or_insert_with(|| vec![w[0].1, w[1].1]);
    }
    let units = group_of_units(g, t);
    for (i, m) in ops.iter().enumerate() {
        let det = m.determinant()?;
        if (det != 0) != units.indices.contains(&i) {
            a.det_matches_units = false;
            a.witness.get_or_insert_with(|| vec![i]);
        }
    }
    for &i in dense {
        if ops[i].rank()? != g.len() {
            a.dense_full_rank = false;
            a.witness.get_or_insert_with(|| vec![i]);
        }
    }
    Ok((a, ops))
}

/// Results of [`representation_audit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationAudit {
    pub left: SideAudit,
    pub right: SideAudit,
    /// With `A(f) = M(R_{f*})`: `A(f₁ ∗ f₂) = A(f₁) A(f₂)`, i.e.
    /// `g·(f₁∗f₂) = (g·f₂)·f₁` for `g·f := A(f) g`.
    pub involution_action: bool,
    /// Whether `(g·f₁)·f₂ = g·(f₁∗f₂)` holds for the same `g·f := A(f) g`.
    /// This is the reversed order and fails whenever `∗` is not commutative
    /// on the relevant elements.
    pub involution_action_reversed: bool,
    /// `g·f := M(L_f)ᵀ g` satisfies `(g·f₁)·f₂ = g·(f₁∗f₂)`.
    pub transpose_right_action: bool,
    pub witness: Option<Vec<usize>>,
}

impl RepresentationAudit {
    /// The action laws that must hold: the involution-transported law in
    /// its valid order and the transpose right action.
    pub fn action_pass(&self) -> bool {
        self.involution_action && self.transpose_right_action
    }

    pub fn pass(&self) -> bool {
        self.left.pass() && self.right.pass() && self.action_pass()
    }
}

/// Exhaustive audit of the operator representations of `ts = S_G` and `tsp = S'_G`.
pub fn representation_audit(
    g: &Groupoid,
    ts: &MonoidTable,
    tsp: &MonoidTable,
) -> Result<RepresentationAudit> {
    if ts.side() != Side::S || tsp.side() != Side::SPrime {
        return Err(Error::Shape(alloc::string::String::from(
            "expected an S table and an S' table",
        )));
    }
    let dense = dense_submonoid(g, ts, tsp);
    let (left, left_ops) = audit_side(g, ts, &dense.indices)?;
    let (right, right_ops) = audit_side(g, tsp, &dense.prime_indices)?;

    let star = involution_indices(g, ts, tsp);
    let acting: Vec<&LinOp> = star
        .iter()
        .enumerate()
        .map(|(i, k)| {
            let k = k.unwrap_or_else(|| {
                panic!(
                    "involution image of {:?} missing",
                    involution_map(g, ts.map(i))
                )
            });
            &right_ops[k]
        })
        .collect();
    let transposed: Vec<LinOp> = left_ops.iter().map(LinOp::transpose).collect();
    let mut audit = RepresentationAudit {
        left,
        right,
        involution_action: true,
        involution_action_reversed: true,
        transpose_right_action: true,
        witness: None,
    };
    for i in 0..ts.len() {
        for j in 0..ts.len() {
            let ij = ts.product(i, j);
            if *acting[ij] != acting[i].compose(acting[j]) {
                audit.involution_action = false;
                audit.witness.get_or_insert_with(|| vec![i, j]);
            }
            if *acting[ij] != acting[j].compose(acting[i]) {
                audit.involution_action_reversed = false;
            }
            // (g·f₁)·f₂ = M(f₂)ᵀ M(f₁)ᵀ g
            if transposed[ij] != transposed[j].compose(&transposed[i]) {
                audit.transpose_right_action = false;
                audit.witness.get_or_insert_with(|| vec![i, j]);
            }
        }
    }
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::canonical_elements;
    use crate::limits::Limits;

    fn tables(g: &Groupoid) -> (MonoidTable, MonoidTable) {
        let l = Limits::default();
        (
            MonoidTable::enumerate(g, Side::S, &l).unwrap(),
            MonoidTable::enumerate(g, Side::SPrime, &l).unwrap(),
        )
    }

    const SWAP: [[i64; 2]; 2] = [[0, 1], [1, 0]];

    fn rows2(m: &LinOp) -> [[i64; 2]; 2] {
        let r = m.rows();
        [[r[0][0], r[0][1]], [r[1][0], r[1][1]]]
    }

    #[test]
    fn canonical_operators() {
        let p = Groupoid::pair(2).unwrap();
        let c = canonical_elements(&p);
        assert_eq!(left_operator(&c.r).unwrap(), LinOp::identity(4));
        assert_eq!(right_operator(&c.d).unwrap(), LinOp::identity(4));
        let lj = left_operator(&c.j).unwrap();
        assert_eq!(lj.underlying_map().unwrap(), p.domain_map());
        assert_eq!(lj.rank().unwrap(), p.units().len());
        let rj = right_operator(&c.j).unwrap();
        assert_eq!(rj.underlying_map().unwrap(), p.range_map());
        assert!(left_operator(&c.d).is_err());
    }

    #[test]
    fn const_a_on_c2_is_swap() {
        let c2 = Groupoid::cyclic(2).unwrap();
        let f = GFun::new(&c2, vec![1, 1]).unwrap();
        assert_eq!(rows2(&left_operator(&f).unwrap()), SWAP);
        assert_eq!(rows2(&right_operator(&f).unwrap()), SWAP);
        assert_eq!(left_operator(&f).unwrap().determinant().unwrap(), -1);
    }

    #[test]
    fn apply_is_precomposition() {
        let m = LinOp::composition(&[2, 0, 0]);
        assert_eq!(m.apply(&[5, 6, 7]), vec![7, 5, 5]);
        assert!(m.linearity_holds());
        assert_eq!(m.rank().unwrap(), 2);
        assert_eq!(m.determinant().unwrap(), 0);
    }

    #[test]
    fn determinants_of_permutations() {
        assert_eq!(LinOp::composition(&[1, 2, 0]).determinant().unwrap(), 1);
        assert_eq!(LinOp::composition(&[1, 0, 2]).determinant().unwrap(), -1);
        assert_eq!(LinOp::identity(0).determinant().unwrap(), 1);
        let m = LinOp::from_rows(&[vec![2, 1], vec![1, 3]]).unwrap();
        assert_eq!(m.determinant().unwrap(), 5);
        assert!(!m.is_composition_operator());
    }

    #[test]
    fn audits_pass_on_small_groupoids() {
        for g in [
            Groupoid::cyclic(2).unwrap(),
            Groupoid::pair(2).unwrap(),
            Groupoid::unit_set(2).unwrap(),
            Groupoid::cyclic(3).unwrap(),
        ] {
            let (ts, tsp) = tables(&g);
            let a = representation_audit(&g, &ts, &tsp).unwrap();
            assert!(a.pass(), "{}: {a:?}", g.name());
            assert_eq!(a.left.pairs_checked, ts.len() * ts.len());
        }
    }

    #[test]
    fn reversed_involution_action_fails_on_c2() {
        // f₁ = id, f₂ = swap: id ∗ swap = swap but swap ∗ id = id
        let c2 = Groupoid::cyclic(2).unwrap();
        let (ts, tsp) = tables(&c2);
        assert_eq!(ts.product(1, 2), 2);
        assert_eq!(ts.product(2, 1), 1);
        let a = representation_audit(&c2, &ts, &tsp).unwrap();
        assert!(a.involution_action && a.transpose_right_action);
        assert!(!a.involution_action_reversed);
    }
}
