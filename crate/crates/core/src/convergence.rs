//! Convergence of sequences and transfinite sequences into finite spaces.
//!
//! Into a finite space, a (transfinite) sequence converges to `x` exactly
//! when the set of values it takes cofinally lies inside the minimal
//! neighborhood of `x`. Conversely every nonempty value set is the cofinal
//! set of an ω-sequence cycling through it, and ω-sequences are continuous.
//! So one limit computation over [`CofinalProfile`]s answers the questions
//! for sequences, transfinite sequences and continuous transfinite
//! sequences alike; the separate entry points below exist so the property
//! names line up with the knowledge base.

use crate::error::{Result, TopologyError};
use crate::pointset::PointSet;
use crate::space::FinSpace;

/// Above this many points the profile sweeps fall back to the singleton and
/// pair profiles, which decide the same questions because limits are
/// antitone in the profile.
const SWEEP_LIMIT: usize = 20;

/// The nonempty set of values a sequence takes cofinally often.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CofinalProfile(PointSet);

impl CofinalProfile {
    pub fn new(values: PointSet) -> Result<Self> {
        if values.is_empty() {
            Err(TopologyError::EmptyProfile)
        } else {
            Ok(CofinalProfile(values))
        }
    }

    pub fn values(self) -> PointSet {
        self.0
    }
}

/// Limits of any sequence whose cofinal value set is `profile`.
pub fn limits(space: &FinSpace, profile: CofinalProfile) -> Result<PointSet> {
    let values = profile.values();
    if !values.within(space.n()) {
        return Err(TopologyError::OutOfRange { set: values, n: space.n() });
    }
    Ok(limits_of(space, values))
}

/// `{x : values ⊆ min_nbhd(x)}`; `values` must be nonempty and in range.
#[inline]
pub(crate) fn limits_of(space: &FinSpace, values: PointSet) -> PointSet {
    (0..space.n()).filter(|&x| values.is_subset(space.min_nbhd(x))).fold(PointSet::EMPTY, PointSet::with)
}

/// Nonempty profiles inside `within` worth checking for a property that is
/// preserved when the profile grows (limits only shrink).
fn profiles(within: PointSet, min_len: usize) -> Box<dyn Iterator<Item = PointSet>> {
    if within.len() <= SWEEP_LIMIT {
        Box::new(within.subsets().filter(move |s| s.len() >= min_len.max(1)))
    } else {
        let pts: Vec<usize> = within.iter().collect();
        let len = min_len.max(1);
        if len == 1 {
            Box::new(pts.into_iter().map(PointSet::singleton))
        } else {
            Box::new(pts.clone().into_iter().flat_map(move |a| {
                pts.clone().into_iter().filter(move |&b| b > a).map(move |b| PointSet::singleton(a).with(b))
            }))
        }
    }
}

fn unique_limits(space: &FinSpace) -> bool {
    profiles(space.points(), 1).all(|s| limits_of(space, s).len() <= 1)
}

/// Unique sequential limits.
pub fn is_us(space: &FinSpace) -> bool {
    unique_limits(space)
}

/// Unique limits of transfinite sequences.
pub fn is_ur(space: &FinSpace) -> bool {
    unique_limits(space)
}

/// Unique limits of continuous transfinite sequences.
pub fn is_ucr(space: &FinSpace) -> bool {
    unique_limits(space)
}

/// Every convergent sequence is eventually constant: no profile with two or
/// more values has a limit. Constant sequences may have extra limits.
pub fn is_sequentially_discrete(space: &FinSpace) -> bool {
    profiles(space.points(), 2).all(|s| limits_of(space, s).is_empty())
}

/// Which kind of sequence witnesses closure points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ApproachMode {
    /// Fréchet-Urysohn: ω-sequences.
    FrechetUrysohn,
    /// Continuous transfinite sequences.
    CRadial,
    /// Arbitrary transfinite sequences.
    Radial,
}

/// Which kind of sequence defines the closed-under-limits sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosureMode {
    Sequential,
    PseudoCRadial,
    Pseudoradial,
}

/// Every point in the closure of `a` is a limit of some profile inside `a`.
fn closure_points_reached(space: &FinSpace, a: PointSet) -> bool {
    space.closure(a).iter().all(|p| profiles(a, 1).any(|s| limits_of(space, s).contains(p)))
}

/// Fréchet-Urysohn, C-radial or radial, depending on `mode`.
pub fn is_radial_style(space: &FinSpace, _mode: ApproachMode) -> bool {
    // every mode realizes the same profiles on a finite space
    space.points().subsets().all(|a| closure_points_reached(space, a))
}

pub fn is_frechet_urysohn(space: &FinSpace) -> bool {
    is_radial_style(space, ApproachMode::FrechetUrysohn)
}

/// `a` contains the limits of every profile it contains.
pub fn is_closed_under_limits(space: &FinSpace, a: PointSet) -> bool {
    profiles(a, 1).all(|s| limits_of(space, s).is_subset(a))
}

/// Sequential, pseudo-C-radial or pseudoradial, depending on `mode`: every
/// set closed under limits is closed.
pub fn is_sequential_style(space: &FinSpace, _mode: ClosureMode) -> bool {
    space.points().subsets().all(|a| !is_closed_under_limits(space, a) || space.is_closed(a))
}

pub fn is_sequential(space: &FinSpace) -> bool {
    is_sequential_style(space, ClosureMode::Sequential)
}
