//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the library's own algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Every topology on `n <= 4` points as a sorted list of open-set bitmasks,
/// found by testing each family of subsets for the topology axioms.
pub fn brute_force_topologies(n: usize) -> BTreeSet<Vec<u64>> {
    assert!(n <= 4);
    let subsets = 1usize << n;
    let top = subsets - 1;
    let mut out = BTreeSet::new();
    for fam in 0u64..=((1u128 << subsets) - 1) as u64 {
        let has = |s: usize| fam >> s & 1 == 1;
        if !has(0) || !has(top) {
            continue;
        }
        let members: Vec<usize> = (0..subsets).filter(|&s| has(s)).collect();
        let closed = members.iter().all(|&a| members.iter().all(|&b| has(a | b) && has(a & b)));
        if closed {
            out.insert(members.into_iter().map(|s| s as u64).collect());
        }
    }
    out
}

/// An eventually periodic sequence: `prefix` once, then `cycle` forever.
pub struct Periodic {
    pub prefix: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl Periodic {
    fn at(&self, i: usize) -> usize {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.cycle[(i - self.prefix.len()) % self.cycle.len()]
        }
    }

    /// Does the open set `u` contain a final segment of the sequence?
    /// Past the prefix the sequence repeats, so one full period after any
    /// candidate start decides it.
    fn eventually_in(&self, u: u64) -> bool {
        let horizon = self.prefix.len() + self.cycle.len();
        (0..=horizon).any(|k| (k..k + 2 * self.cycle.len() + 1).all(|i| u >> self.at(i) & 1 == 1))
    }

    /// Limit points by the definition: every open set around the point
    /// contains a final segment.
    pub fn limits(&self, n: usize, opens: &[u64]) -> u64 {
        (0..n)
            .filter(|&x| opens.iter().filter(|&&u| u >> x & 1 == 1).all(|&u| self.eventually_in(u)))
            .fold(0, |acc, x| acc | 1 << x)
    }
}

/// Several literal sequences whose cofinal value set is exactly `s`.
pub fn sequences_with_values(n: usize, s: u64) -> Vec<Periodic> {
    let vals: Vec<usize> = (0..n).filter(|&x| s >> x & 1 == 1).collect();
    let others: Vec<usize> = (0..n).filter(|&x| s >> x & 1 == 0).collect();
    let mut rev = vals.clone();
    rev.reverse();
    let mut doubled_first = vals.clone();
    doubled_first.insert(0, vals[0]);
    vec![
        Periodic { prefix: vec![], cycle: vals.clone() },
        Periodic { prefix: others.clone(), cycle: rev },
        Periodic { prefix: (0..n).collect(), cycle: doubled_first },
        Periodic { prefix: others.iter().rev().copied().collect(), cycle: vals.iter().chain(&vals).copied().collect() },
    ]
}
