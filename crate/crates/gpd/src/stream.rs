//! Monoid law checks for monoids too large for a stored Cayley table.
//!
//! Closure and both identity laws are checked on every element and pair.
//! Associativity is checked on seeded random triples.

use gpd_core::{star_into, star_prime_into, Groupoid, Limits, MapSpace, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamReport {
    pub side: Side,
    pub elements: usize,
    pub pairs: u128,
    pub triples: usize,
    pub seed: u64,
    /// `(law, element indices)` of the first failure found.
    pub failure: Option<(&'static str, Vec<usize>)>,
}

impl StreamReport {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

fn product(g: &Groupoid, side: Side, a: &[usize], b: &[usize], out: &mut [usize]) {
    match side {
        Side::S => star_into(g, a, b, out),
        Side::SPrime => star_prime_into(g, a, b, out),
    }
}

const UNDEFINED: u16 = u16::MAX;

/// Closure and identity over every element and pair. Works on a local
/// compact copy of the product table; closure means membership, which for
/// `S_G` is `d(out(x)) = r(x)` and for `S'_G` is `r(out(x)) = d(x)`.
fn pair_scan(
    g: &Groupoid,
    side: Side,
    maps: &[usize],
    size: usize,
    identity: &[usize],
) -> Option<(&'static str, Vec<usize>)> {
    let n = g.len();
    let table: Vec<u16> = (0..n * n)
        .map(|c| g.product(c / n, c % n).map_or(UNDEFINED, |z| z as u16))
        .collect();
    let compact: Vec<u16> = maps.iter().map(|&y| y as u16).collect();
    let (want, key): (Vec<usize>, Vec<usize>) = match side {
        Side::S => (g.range_map().to_vec(), g.domain_map().to_vec()),
        Side::SPrime => (g.domain_map().to_vec(), g.range_map().to_vec()),
    };
    let mul = |x: u16, y: u16| -> u16 {
        if x == UNDEFINED || y == UNDEFINED {
            UNDEFINED
        } else {
            table[x as usize * n + y as usize]
        }
    };
    (0..size).into_par_iter().find_map_first(|i| {
        let a = &maps[i * n..(i + 1) * n];
        let mut out = vec![0; n];
        product(g, side, identity, a, &mut out);
        if out != a {
            return Some(("left identity", vec![i]));
        }
        product(g, side, a, identity, &mut out);
        if out != a {
            return Some(("right identity", vec![i]));
        }
        let f = &compact[i * n..(i + 1) * n];
        // f(x) x for S, x f(x) for S'
        let shifted: Vec<usize> = (0..n)
            .map(|x| match side {
                Side::S => mul(f[x], x as u16) as usize,
                Side::SPrime => mul(x as u16, f[x]) as usize,
            })
            .collect();
        // lands[x * n + y]: the product built from h-value y at x is a member
        let lands: Vec<bool> = (0..n * n)
            .map(|c| {
                let (x, y) = (c / n, (c % n) as u16);
                let v = match side {
                    Side::S => mul(y, f[x]),
                    Side::SPrime => mul(f[x], y),
                };
                v != UNDEFINED && key[v as usize] == want[x]
            })
            .collect();
        (0..size).find_map(|j| {
            let h = &compact[j * n..(j + 1) * n];
            let closed = shifted
                .iter()
                .enumerate()
                .all(|(x, &sx)| lands[x * n + h[sx] as usize]);
            (!closed).then(|| ("closure", vec![i, j]))
        })
    })
}

pub fn stream_check(
    g: &Groupoid,
    side: Side,
    triples: usize,
    seed: u64,
    limits: &Limits,
) -> Result<StreamReport> {
    let space = MapSpace::new(g, side);
    if space.size() > limits.max_monoid as u128 {
        return Err(gpd_core::Error::CapExceeded {
            what: "monoid elements",
            predicted: space.size(),
            cap: limits.max_monoid as u128,
        }
        .into());
    }
    let size = space.size() as usize;
    let n = g.len();
    let mut maps = vec![0; size * n];
    for (i, chunk) in maps.chunks_mut(n).enumerate() {
        space.unrank(i, chunk);
    }
    let map = |i: usize| &maps[i * n..(i + 1) * n];
    let identity = match side {
        Side::S => g.range_map(),
        Side::SPrime => g.domain_map(),
    };

    let pair_failure = pair_scan(g, side, &maps, size, identity);

    let mut failure = pair_failure;
    if failure.is_none() && size > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut ab, mut left, mut bc, mut right) =
            (vec![0; n], vec![0; n], vec![0; n], vec![0; n]);
        for _ in 0..triples {
            let (i, j, k) = (
                rng.random_range(0..size),
                rng.random_range(0..size),
                rng.random_range(0..size),
            );
            product(g, side, map(i), map(j), &mut ab);
            product(g, side, &ab, map(k), &mut left);
            product(g, side, map(j), map(k), &mut bc);
            product(g, side, map(i), &bc, &mut right);
            if left != right {
                failure = Some(("associativity", vec![i, j, k]));
                break;
            }
        }
    }
    Ok(StreamReport {
        side,
        elements: size,
        pairs: (size as u128) * (size as u128),
        triples,
        seed,
        failure,
    })
}
