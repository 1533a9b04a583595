//! Exhaustive enumeration of labeled topologies on `{0, .., n-1}`.
//!
//! Finite topologies correspond one-to-one with preorders, so the search
//! picks a minimal neighborhood for each point in turn and prunes as soon as
//! two chosen neighborhoods violate transitivity. The first point's choices
//! split the search into independent shards.

use rayon::prelude::*;

use crate::error::{Result, TopologyError};
use crate::maps::is_homeomorphic;
use crate::pointset::PointSet;
use crate::space::FinSpace;

/// Census bound used when `TOPOCTL_MAX_POINTS` is unset.
pub const DEFAULT_CENSUS_BOUND: usize = 4;
/// No census is run above this many points.
pub const HARD_CENSUS_LIMIT: usize = 5;
pub const MAX_POINTS_ENV: &str = "TOPOCTL_MAX_POINTS";

/// Reads the census bound from `TOPOCTL_MAX_POINTS`, falling back to
/// [`DEFAULT_CENSUS_BOUND`]. Values above [`HARD_CENSUS_LIMIT`] are refused.
pub fn census_bound() -> Result<usize> {
    match std::env::var(MAX_POINTS_ENV) {
        Ok(v) => {
            let bound: usize = v
                .trim()
                .parse()
                .map_err(|_| TopologyError::CensusTooLarge { n: usize::MAX, bound: HARD_CENSUS_LIMIT })?;
            if bound > HARD_CENSUS_LIMIT {
                Err(TopologyError::CensusTooLarge { n: bound, bound: HARD_CENSUS_LIMIT })
            } else {
                Ok(bound)
            }
        }
        Err(_) => Ok(DEFAULT_CENSUS_BOUND),
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    let bound = bound.min(HARD_CENSUS_LIMIT);
    if n > bound {
        Err(TopologyError::CensusTooLarge { n, bound })
    } else {
        Ok(())
    }
}

/// Sort key: neighborhoods packed with point 0's most significant.
fn key(n: usize, nbhd: &[PointSet]) -> u64 {
    nbhd.iter().fold(0u64, |acc, nb| (acc << n) | nb.bits())
}

/// Candidate neighborhoods of `x`: every subset of the points containing `x`.
fn candidates(n: usize, x: usize) -> impl Iterator<Item = PointSet> {
    PointSet::full(n).without(x).subsets().map(move |s| s.with(x))
}

/// Chosen rows `0..=i` are consistent where both endpoints are decided.
fn consistent(nbhd: &[PointSet], i: usize) -> bool {
    let new = nbhd[i];
    for (x, &old) in nbhd[..i].iter().enumerate() {
        // x ⊑ i forces nbhd(x) ⊆ nbhd(i); i ⊑ x forces the reverse
        if new.contains(x) && !old.is_subset(new) {
            return false;
        }
        if old.contains(i) && !new.is_subset(old) {
            return false;
        }
    }
    true
}

fn transitive(nbhd: &[PointSet]) -> bool {
    nbhd.iter().all(|nb| nb.iter().all(|y| nbhd[y].is_subset(*nb)))
}

fn extend(n: usize, nbhd: &mut Vec<PointSet>, out: &mut Vec<(u64, FinSpace)>) {
    let i = nbhd.len();
    if i == n {
        if transitive(nbhd) {
            out.push((key(n, nbhd), FinSpace::from_nbhds_unchecked(n, nbhd.clone())));
        }
        return;
    }
    for c in candidates(n, i) {
        nbhd.push(c);
        if consistent(nbhd, i) {
            extend(n, nbhd, out);
        }
        nbhd.pop();
    }
}

/// One shard of the labeled census: the spaces whose first point's
/// neighborhood has candidate index `≡ shard (mod shards)`. Each space is
/// returned with its sort key; concatenating all shards and sorting by key
/// reproduces [`enumerate_topologies`].
pub fn enumerate_shard(n: usize, shard: usize, shards: usize) -> Result<Vec<(u64, FinSpace)>> {
    check_bound(n, census_bound()?)?;
    Ok(shard_unchecked(n, shard, shards.max(1)))
}

fn shard_unchecked(n: usize, shard: usize, shards: usize) -> Vec<(u64, FinSpace)> {
    let mut out = Vec::new();
    if n == 0 {
        if shard == 0 {
            out.push((0, FinSpace::empty()));
        }
        return out;
    }
    for (idx, first) in candidates(n, 0).enumerate() {
        if idx % shards != shard {
            continue;
        }
        let mut nbhd = vec![first];
        extend(n, &mut nbhd, &mut out);
    }
    out
}

/// Every topology on `n` labeled points, each once, in a fixed order.
/// Refused above the configured census bound.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FinSpace>> {
    enumerate_topologies_bounded(n, census_bound()?)
}

pub fn enumerate_topologies_bounded(n: usize, bound: usize) -> Result<Vec<FinSpace>> {
    check_bound(n, bound)?;
    Ok(shard_unchecked(n, 0, 1).into_iter().map(|(_, s)| s).collect())
}

/// Same output as [`enumerate_topologies`], with shards run on the rayon
/// pool.
pub fn enumerate_topologies_parallel(n: usize, shards: usize) -> Result<Vec<FinSpace>> {
    check_bound(n, census_bound()?)?;
    let shards = shards.max(1);
    let mut all: Vec<(u64, FinSpace)> =
        (0..shards).into_par_iter().flat_map_iter(|s| shard_unchecked(n, s, shards)).collect();
    all.sort_unstable_by_key(|(k, _)| *k);
    Ok(all.into_iter().map(|(_, s)| s).collect())
}

pub fn count_topologies(n: usize) -> Result<usize> {
    Ok(enumerate_topologies(n)?.len())
}

/// Every labeled space on `0..=max_n` points, smallest first.
pub fn census(max_n: usize) -> Result<Vec<FinSpace>> {
    let bound = census_bound()?;
    let mut out = Vec::new();
    for n in 0..=max_n {
        out.extend(enumerate_topologies_bounded(n, bound)?);
    }
    Ok(out)
}

/// One representative per homeomorphism class, in order of first
/// appearance in the labeled census.
pub fn topology_classes(n: usize) -> Result<Vec<FinSpace>> {
    let mut reps: Vec<FinSpace> = Vec::new();
    for s in enumerate_topologies(n)? {
        if !reps.iter().any(|r| is_homeomorphic(r, &s)) {
            reps.push(s);
        }
    }
    Ok(reps)
}
