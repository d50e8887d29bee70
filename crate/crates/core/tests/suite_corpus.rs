use gpd_core::*;

fn s3() -> Groupoid {
    // permutations of {0,1,2} as image arrays, composed left to right
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let cayley: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| idx([b[a[0]], b[a[1]], b[a[2]]]))
                .collect()
        })
        .collect();
    let inverse: Vec<usize> = (0..6)
        .map(|i| (0..6).find(|&j| cayley[i][j] == 0).unwrap())
        .collect();
    Groupoid::group("S3", cayley, inverse).unwrap()
}

#[test]
fn full_suite_on_corpus() {
    let c2 = Groupoid::cyclic(2).unwrap();
    let swap = GroupAction::new(c2.clone(), 2, vec![vec![0, 1], vec![1, 0]]).unwrap();
    let corpus = [
        Groupoid::cyclic(1).unwrap(),
        Groupoid::unit_set(2).unwrap(),
        c2.clone(),
        Groupoid::cyclic(3).unwrap(),
        Groupoid::cyclic(4).unwrap(),
        Groupoid::klein_four(),
        Groupoid::pair(2).unwrap(),
        Groupoid::disjoint_union(&c2, &c2).unwrap(),
        transformation_groupoid(&swap).unwrap(),
    ];
    for g in &corpus {
        let r = run_suite(g, &Limits::default(), &[]).unwrap();
        let failed: Vec<_> = r.verdicts.iter().filter(|(_, v)| !v.pass).collect();
        assert!(failed.is_empty(), "{}: {failed:?}", g.name());
        assert!(r.assoc_exhaustive);
        assert_eq!(r.units, r.dense);
    }
}

#[test]
fn j_ideal_sizes() {
    // jS_G = { x ↦ f(d(x)) x⁻¹ }, determined by f on the units
    let r = run_suite(&Groupoid::cyclic(3).unwrap(), &Limits::default(), &[]).unwrap();
    assert_eq!(r.j_ideal.len(), 3);
    let r = run_suite(&Groupoid::pair(2).unwrap(), &Limits::default(), &[]).unwrap();
    assert_eq!(r.j_ideal.len(), 4);
}

#[test]
fn injective_idempotents_outside_the_antihomomorphisms() {
    // on a group, f(x) = y x⁻¹ is an injective idempotent for every y, but an
    // antihomomorphism only for y = e
    let c3 = Groupoid::cyclic(3).unwrap();
    let t = MonoidTable::enumerate(&c3, Side::S, &Limits::default()).unwrap();
    let a = antihom_classification(&c3, &t);
    assert!(a.idempotent_pass());
    let maps: Vec<&[usize]> = a
        .injective_idempotents_not_antihom
        .iter()
        .map(|&i| t.map(i))
        .collect();
    let expected: Vec<Vec<usize>> = (1..3)
        .map(|y| (0..3).map(|x| c3.mul(y, c3.inverse(x))).collect())
        .collect();
    assert_eq!(maps.len(), 2);
    for m in &expected {
        assert!(maps.contains(&m.as_slice()));
    }
    let u = Groupoid::unit_set(2).unwrap();
    let t = MonoidTable::enumerate(&u, Side::S, &Limits::default()).unwrap();
    assert_eq!(
        antihom_classification(&u, &t).injective_idempotent_antihoms,
        vec![0]
    );
}

#[test]
fn constant_family_order_on_a_nonabelian_group() {
    // f_{z₁} ∗ f_{z₂} = f_{z₂ z₁}; the two orders agree only for commuting z₁, z₂
    let t = s3();
    let act = GroupAction::trivial(t.clone(), 2).unwrap();
    let g = transformation_groupoid(&act).unwrap();
    let f = |z: usize| embedded_map(&act, &[z; 6]);
    let mut out = vec![0; g.len()];
    let mut commuting = 0;
    for z1 in 0..6 {
        for z2 in 0..6 {
            star_into(&g, &f(z1), &f(z2), &mut out);
            assert_eq!(out, f(t.mul(z2, z1)));
            if out == f(t.mul(z1, z2)) {
                commuting += 1;
            }
        }
    }
    // commuting pairs in S3: 6 (identity row) + 5 (identity column) - 1 + 5 (z with itself) + 2 (the two 3-cycles)
    assert_eq!(commuting, 18);
}

#[test]
fn s3_automorphisms() {
    let g = s3();
    assert_eq!(isomorphisms(&g, &g, 100).len(), 6);
}
