mod common;

use std::collections::BTreeSet;

use topoctl::census::{enumerate_topologies_bounded, topology_classes};
use topoctl::convergence::limits;
use topoctl::maps::{enumerate_continuous_maps, homeomorphism, is_homeomorphic};
use topoctl::{CofinalProfile, FinSpace, PointSet};

fn set(xs: &[usize]) -> PointSet {
    xs.iter().copied().collect()
}

fn opens_bits(s: &FinSpace) -> Vec<u64> {
    s.opens().iter().map(|u| u.bits()).collect()
}

#[test]
fn four_point_census_matches_subset_families() {
    let ours: BTreeSet<Vec<u64>> = enumerate_topologies_bounded(4, 4).unwrap().iter().map(opens_bits).collect();
    assert_eq!(ours.len(), 355);
    assert_eq!(ours, common::brute_force_topologies(4));
}

#[test]
fn homeomorphism_classes_up_to_four_points() {
    let counts: Vec<usize> = (0..=4).map(|n| topology_classes(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 3, 9, 33]);
}

/// Continuous maps by the definition: every open preimage is open.
fn literal_maps(z: &FinSpace, x: &FinSpace) -> Vec<Vec<usize>> {
    let opens: BTreeSet<u64> = z.opens().iter().map(|u| u.bits()).collect();
    let total = x.n().pow(z.n() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let f: Vec<usize> = (0..z.n()).map(|i| code / x.n().pow((z.n() - 1 - i) as u32) % x.n()).collect();
        let ok = x.opens().iter().all(|u| {
            let pre = (0..z.n()).filter(|&i| u.contains(f[i])).fold(0u64, |a, i| a | 1 << i);
            opens.contains(&pre)
        });
        if ok {
            out.push(f);
        }
    }
    out
}

#[test]
fn map_enumeration_matches_the_definition() {
    let spaces: Vec<FinSpace> = (0..=3).flat_map(|n| enumerate_topologies_bounded(n, 4).unwrap()).collect();
    for z in &spaces {
        for x in spaces.iter().filter(|x| x.n() <= 2 || z.n() <= 2) {
            let ours: Vec<Vec<usize>> = enumerate_continuous_maps(z, x).iter().map(|m| m.map().to_vec()).collect();
            assert_eq!(ours, literal_maps(z, x), "{:?} -> {:?}", z.opens(), x.opens());
        }
    }
}

#[test]
fn named_map_counts() {
    let s = FinSpace::sierpinski();
    let p = FinSpace::indiscrete(2);
    assert_eq!(literal_maps(&p, &s), vec![vec![0, 0], vec![1, 1]]);
    assert_eq!(literal_maps(&s, &s).len(), 3);
    assert_eq!(enumerate_continuous_maps(&s, &s).len(), 3);
    assert_eq!(enumerate_continuous_maps(&FinSpace::discrete(3), &FinSpace::point()).len(), 1);
}

#[test]
fn sierpinski_square_has_six_opens() {
    // up-sets of the 2x2 grid ordered by specialization
    let s = FinSpace::sierpinski();
    let sq = s.product(&s).unwrap().space;
    assert_eq!(sq.n(), 4);
    assert_eq!(sq.opens().len(), 6);
}

#[test]
fn doubling_the_sierpinski_closed_point() {
    let d = FinSpace::sierpinski().double_points(set(&[1])).unwrap();
    let expected = FinSpace::new(3, [set(&[]), set(&[0]), set(&[0, 1]), set(&[0, 2]), set(&[0, 1, 2])]).unwrap();
    assert_eq!(d.space, expected);
    assert_eq!(d.space.closure(set(&[0])), set(&[0, 1, 2]));
    let ls = limits(&d.space, CofinalProfile::new(set(&[0])).unwrap()).unwrap();
    assert!(ls.contains(1) && ls.contains(2));
    let relabeled = FinSpace::new(3, [set(&[]), set(&[1]), set(&[1, 0]), set(&[1, 2]), set(&[0, 1, 2])]).unwrap();
    assert!(is_homeomorphic(&d.space, &relabeled));
    assert_eq!(homeomorphism(&d.space, &relabeled).map(|p| p[0]), Some(1));
}

#[test]
fn doubling_the_sierpinski_open_point_is_discrete() {
    let d = FinSpace::sierpinski().double_points(set(&[0])).unwrap();
    assert_eq!(d.space, FinSpace::discrete(3));
}

#[test]
fn profile_limits_on_small_spaces_match_sequences() {
    for x in [FinSpace::sierpinski(), FinSpace::indiscrete(2), FinSpace::discrete(3)] {
        let opens = opens_bits(&x);
        for s in x.points().subsets().filter(|s| !s.is_empty()) {
            let ours = limits(&x, CofinalProfile::new(s).unwrap()).unwrap();
            for seq in common::sequences_with_values(x.n(), s.bits()) {
                assert_eq!(seq.limits(x.n(), &opens), ours.bits());
            }
        }
    }
}
