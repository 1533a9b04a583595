//! Separation axioms and auxiliary properties of finite spaces.
//!
//! k1-Hausdorff and weakly Hausdorff get no checker. Every subset of a
//! finite space is compact, so k1H asks that every subspace be T2, and the
//! image conditions of wH degenerate the same way; both coincide with
//! discreteness here and only exist as knowledge-base nodes.

use std::ops::ControlFlow;

use crate::error::{Result, TopologyError};
use crate::maps::for_each_continuous_map;
use crate::pointset::PointSet;
use crate::space::FinSpace;

/// Default size limit for the retraction search behind [`is_rc`].
pub const RC_BOUND: usize = 5;

/// No two distinct points have the same neighborhoods.
pub fn is_t0(space: &FinSpace) -> bool {
    space.specialization_preorder().is_antisymmetric()
}

/// Every singleton is closed.
pub fn is_t1(space: &FinSpace) -> bool {
    (0..space.n()).all(|x| space.is_closed(PointSet::singleton(x)))
}

/// Distinct points have disjoint open neighborhoods. Minimal neighborhoods
/// are the smallest candidates, so it suffices to test those.
pub fn is_t2(space: &FinSpace) -> bool {
    let n = space.n();
    (0..n).all(|x| (x + 1..n).all(|y| space.min_nbhd(x).is_disjoint(space.min_nbhd(y))))
}

/// Every subset is open.
pub fn is_discrete(space: &FinSpace) -> bool {
    let n = space.n();
    n < 64 && space.opens().len() == 1usize << n || n == 64 && (0..n).all(|x| space.is_open(PointSet::singleton(x)))
}

/// Finite-subcover check for `set`.
///
/// An open cover of `set` is a subfamily of the open family, which is finite.
/// The check extracts, from the cover formed by every open set, one member
/// per point of `set` and confirms the extracted family covers.
pub fn is_compact(space: &FinSpace, set: PointSet) -> bool {
    let cover: Vec<PointSet> = space.opens().iter().copied().filter(|u| !u.is_disjoint(set)).collect();
    let mut covered = PointSet::EMPTY;
    for x in set.iter() {
        match cover.iter().find(|u| u.contains(x)) {
            Some(u) => covered = covered.union(*u),
            None => return false,
        }
    }
    set.is_subset(covered)
}

pub fn compact_subsets(space: &FinSpace) -> Vec<PointSet> {
    space.points().subsets().filter(|&a| is_compact(space, a)).collect()
}

/// Compact subsets are closed.
pub fn is_kc(space: &FinSpace) -> bool {
    compact_subsets(space).into_iter().all(|a| space.is_closed(a))
}

/// Compact subsets are finite. Every subset here is finite, so the loop can
/// only confirm it.
pub fn is_anticompact(space: &FinSpace) -> bool {
    compact_subsets(space).into_iter().all(|a| a.len() <= space.n())
}

/// Each point has a neighborhood whose subspace is T2.
///
/// Any neighborhood of `x` contains its minimal neighborhood and T2 passes
/// to subspaces, so the minimal neighborhood is the one to test.
pub fn is_lh(space: &FinSpace) -> bool {
    (0..space.n()).all(|x| {
        let sub = space.subspace(space.min_nbhd(x)).expect("minimal neighborhood lies in the space");
        is_t2(&sub.space)
    })
}

/// Opens equal to the interior of their closure.
pub fn regular_opens(space: &FinSpace) -> Vec<PointSet> {
    space.opens().iter().copied().filter(|&u| space.interior(space.closure(u)) == u).collect()
}

/// For distinct `x`, `y` some regular open set contains `x` and misses `y`.
pub fn is_sh(space: &FinSpace) -> bool {
    let regular = regular_opens(space);
    let n = space.n();
    (0..n).all(|x| (0..n).filter(|&y| y != x).all(|y| regular.iter().any(|u| u.contains(x) && !u.contains(y))))
}

/// A continuous `space -> subspace(set)` fixing `set` pointwise, if any.
pub fn retraction_onto(space: &FinSpace, set: PointSet) -> Result<Option<Vec<usize>>> {
    let sub = space.subspace(set)?;
    if set.is_empty() {
        return Ok((space.n() == 0).then(Vec::new));
    }
    let mut fixed = vec![None; space.n()];
    for (i, &p) in sub.points.iter().enumerate() {
        fixed[p] = Some(i);
    }
    let mut found = None;
    let _ = for_each_continuous_map(space, &sub.space, Some(&fixed), |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    Ok(found)
}

/// Every retract is closed, with the default size bound.
pub fn is_rc(space: &FinSpace) -> Result<bool> {
    is_rc_bounded(space, RC_BOUND)
}

pub fn is_rc_bounded(space: &FinSpace, bound: usize) -> Result<bool> {
    if space.n() > bound {
        return Err(TopologyError::SpaceTooLarge { n: space.n(), bound });
    }
    for a in space.points().subsets() {
        if !space.is_closed(a) && retraction_onto(space, a)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nonempty opens pairwise intersect.
pub fn is_hyperconnected(space: &FinSpace) -> bool {
    let nonempty: Vec<PointSet> = space.opens().iter().copied().filter(|u| !u.is_empty()).collect();
    nonempty.iter().enumerate().all(|(i, u)| nonempty[i + 1..].iter().all(|v| !u.is_disjoint(*v)))
}

/// Has a basis partitioning the space: the specialization preorder is
/// symmetric, so minimal neighborhoods are equivalence classes.
pub fn is_partition_topology(space: &FinSpace) -> bool {
    space.specialization_preorder().is_symmetric()
}

/// Intersections of arbitrary open families are open. For a finite family
/// that means closure under pairwise intersection and an open intersection
/// of the whole family.
pub fn is_alexandrov(space: &FinSpace) -> bool {
    let opens = space.opens();
    let whole = opens.iter().fold(space.points(), |acc, u| acc.intersection(*u));
    space.is_open(whole)
        && opens.iter().enumerate().all(|(i, u)| opens[i + 1..].iter().all(|v| space.is_open(u.intersection(*v))))
}
