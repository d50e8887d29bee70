use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groupoid::{check_cap, Groupoid, RawGroupoid};
use crate::limits::Limits;

/// A finite group `T` acting on the right of the set `0..space`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    group: Groupoid,
    space: usize,
    act: Vec<Vec<usize>>,
}

impl GroupAction {
    /// `act[u][t]` is `u.t`. Checks `u.e = u` and `(u.t).t' = u.(tt')`.
    pub fn new(group: Groupoid, space: usize, act: Vec<Vec<usize>>) -> Result<Self> {
        if !group.is_group() {
            return Err(Error::Shape(
                "acting groupoid must have a single unit".to_string(),
            ));
        }
        let order = group.len();
        if (0..order).any(|a| (0..order).any(|b| !group.is_composable(a, b))) {
            return Err(Error::Shape("acting group table must be total".to_string()));
        }
        if space == 0 {
            return Err(Error::Shape("space must be nonempty".to_string()));
        }
        if act.len() != space {
            return Err(Error::Shape(format!(
                "act has {} rows, expected {space}",
                act.len()
            )));
        }
        for (u, row) in act.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Shape(format!(
                    "act row {u} has {} entries, expected {order}",
                    row.len()
                )));
            }
            if row.iter().any(|&v| v >= space) {
                return Err(Error::Shape(format!("act row {u} out of range")));
            }
        }
        let e = group.units()[0];
        for (u, row) in act.iter().enumerate() {
            if row[e] != u {
                return Err(Error::ActionViolation {
                    law: "u.e = u",
                    witness: vec![u],
                });
            }
            for t in 0..order {
                for s in 0..order {
                    if act[row[t]][s] != row[group.mul(t, s)] {
                        return Err(Error::ActionViolation {
                            law: "(u.t).t' = u.(tt')",
                            witness: vec![u, t, s],
                        });
                    }
                }
            }
        }
        Ok(GroupAction { group, space, act })
    }

    /// `T` acting trivially on `space` points.
    pub fn trivial(group: Groupoid, space: usize) -> Result<Self> {
        let act = (0..space).map(|u| vec![u; group.len()]).collect();
        Self::new(group, space, act)
    }

    pub fn group(&self) -> &Groupoid {
        &self.group
    }

    pub fn space(&self) -> usize {
        self.space
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.act
    }

    /// `u.t`
    pub fn act(&self, u: usize, t: usize) -> usize {
        self.act[u][t]
    }

    /// Id of the pair `(u, t)` in the transformation groupoid: `u * |T| + t`.
    pub fn pair_id(&self, u: usize, t: usize) -> usize {
        u * self.group.len() + t
    }

    /// Inverse of [`GroupAction::pair_id`].
    pub fn split_id(&self, x: usize) -> (usize, usize) {
        (x / self.group.len(), x % self.group.len())
    }
}

/// The transformation groupoid `U × T`: `(u, t)(u.t, t') = (u, tt')` and
/// `(u, t)⁻¹ = (u.t, t⁻¹)`. Pair ids follow [`GroupAction::pair_id`].
pub fn transformation_groupoid(a: &GroupAction) -> Result<Groupoid> {
    transformation_groupoid_capped(a, Limits::default().max_groupoid)
}

pub fn transformation_groupoid_capped(a: &GroupAction, cap: usize) -> Result<Groupoid> {
    let t = &a.group;
    let order = t.len();
    let size = a.space.saturating_mul(order);
    check_cap(size, cap)?;
    let mut product = vec![vec![None; size]; size];
    let mut inverse = vec![0; size];
    for u in 0..a.space {
        for s in 0..order {
            let x = a.pair_id(u, s);
            inverse[x] = a.pair_id(a.act(u, s), t.inverse(s));
            let v = a.act(u, s);
            for s2 in 0..order {
                product[x][a.pair_id(v, s2)] = Some(a.pair_id(u, t.mul(s, s2)));
            }
        }
    }
    Groupoid::build_capped(
        RawGroupoid {
            name: format!("{}x{}", a.space, t.name()),
            size,
            product,
            inverse,
        },
        cap,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::find_isomorphism;

    pub(crate) fn c2_swap() -> GroupAction {
        GroupAction::new(
            Groupoid::cyclic(2).unwrap(),
            2,
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap()
    }

    #[test]
    fn trivial_action_on_a_point_is_the_group() {
        let c2 = Groupoid::cyclic(2).unwrap();
        let g = transformation_groupoid(&GroupAction::trivial(c2.clone(), 1).unwrap()).unwrap();
        assert!(find_isomorphism(&g, &c2).is_some());
    }

    #[test]
    fn swap_action() {
        let a = c2_swap();
        let g = transformation_groupoid(&a).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.units().len(), 2);
        // units are exactly the (u, e) pairs
        let expected: Vec<usize> = (0..2).map(|u| a.pair_id(u, 0)).collect();
        assert_eq!(g.units(), expected.as_slice());
        for x in 0..g.len() {
            let (u, s) = a.split_id(x);
            assert_eq!(g.range(x), a.pair_id(u, 0));
            assert_eq!(g.domain(x), a.pair_id(a.act(u, s), 0));
        }
    }

    #[test]
    fn broken_action_is_rejected() {
        let c3 = Groupoid::cyclic(3).unwrap();
        // u.1 swaps two points, which cannot be an action of an element of order 3
        let act = vec![vec![0, 1, 1], vec![1, 0, 0]];
        assert!(matches!(
            GroupAction::new(c3, 2, act),
            Err(Error::ActionViolation { .. })
        ));
    }
}
