//! Finite topological spaces and the standard constructions on them.
//!
//! A finite topology is determined by the minimal neighborhood of each point
//! (the intersection of all opens containing it, which is itself open). Both
//! the full open family and the minimal neighborhoods are kept: the family is
//! the canonical value, the neighborhoods make most queries a few bit
//! operations.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Result, TopologyError, Violation};
use crate::maps::ContinuousMap;
use crate::pointset::{PointSet, MAX_POINTS};

#[derive(PartialEq, Eq, Hash)]
struct SpaceData {
    n: usize,
    /// Sorted, deduplicated.
    opens: Vec<PointSet>,
    nbhd: Vec<PointSet>,
}

/// A finite topological space on the points `{0, .., n-1}`.
///
/// Cloning is cheap; values are immutable and shareable across threads.
#[derive(Clone)]
pub struct FinSpace(Arc<SpaceData>);

impl PartialEq for FinSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FinSpace {}

impl std::hash::Hash for FinSpace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for FinSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinSpace(n={}, opens=[", self.n())?;
        for (i, u) in self.opens().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}")?;
        }
        f.write_str("])")
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        Err(TopologyError::TooManyPoints { n, max: MAX_POINTS })
    } else {
        Ok(())
    }
}

fn check_set(n: usize, set: PointSet) -> Result<()> {
    if set.within(n) {
        Ok(())
    } else {
        Err(TopologyError::OutOfRange { set, n })
    }
}

/// Every union of minimal neighborhoods, sorted.
fn opens_from_nbhds(nbhd: &[PointSet]) -> Vec<PointSet> {
    let mut family = vec![PointSet::EMPTY];
    let mut seen: HashSet<PointSet> = HashSet::from([PointSet::EMPTY]);
    for &nb in nbhd {
        for i in 0..family.len() {
            let u = family[i].union(nb);
            if seen.insert(u) {
                family.push(u);
            }
        }
    }
    family.sort_unstable();
    family
}

/// Minimal neighborhoods of a family closed under intersection.
fn nbhds_from_opens(n: usize, opens: &[PointSet]) -> Vec<PointSet> {
    let mut nbhd = vec![PointSet::full(n); n];
    for &u in opens {
        for x in u.iter() {
            nbhd[x] = nbhd[x].intersection(u);
        }
    }
    nbhd
}

impl FinSpace {
    /// Validates `opens` as a topology on `n` points and canonicalizes it.
    pub fn new(n: usize, opens: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        check_size(n)?;
        let mut opens: Vec<PointSet> = opens.into_iter().collect();
        for &u in &opens {
            if !u.within(n) {
                return Err(TopologyError::NotATopology(Violation::OutOfRange(u)));
            }
        }
        opens.sort_unstable();
        opens.dedup();
        if opens.binary_search(&PointSet::EMPTY).is_err() {
            return Err(TopologyError::NotATopology(Violation::MissingEmpty));
        }
        if opens.binary_search(&PointSet::full(n)).is_err() {
            return Err(TopologyError::NotATopology(Violation::MissingFull));
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                if opens.binary_search(&a.union(b)).is_err() {
                    return Err(TopologyError::NotATopology(Violation::UnionNotOpen(a, b)));
                }
                if opens.binary_search(&a.intersection(b)).is_err() {
                    return Err(TopologyError::NotATopology(Violation::IntersectionNotOpen(a, b)));
                }
            }
        }
        Ok(Self::from_canonical_opens(n, opens))
    }

    /// The smallest topology containing every member of `subbasis`.
    pub fn generate(n: usize, subbasis: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        check_size(n)?;
        let mut nbhd = vec![PointSet::full(n); n];
        for s in subbasis {
            check_set(n, s)?;
            for x in s.iter() {
                nbhd[x] = nbhd[x].intersection(s);
            }
        }
        Ok(Self::from_nbhds_unchecked(n, nbhd))
    }

    /// Builds the space whose minimal neighborhoods are `nbhd`.
    ///
    /// `nbhd` must describe a preorder: `x in nbhd[x]`, and `y in nbhd[x]`
    /// implies `nbhd[y] ⊆ nbhd[x]`.
    pub fn from_neighborhoods(nbhd: Vec<PointSet>) -> Result<Self> {
        let n = nbhd.len();
        check_size(n)?;
        for (x, &nb) in nbhd.iter().enumerate() {
            check_set(n, nb)?;
            if !nb.contains(x) {
                return Err(TopologyError::NotAPreorder(format!(
                    "point {x} is missing from its own neighborhood {nb}"
                )));
            }
            for y in nb.iter() {
                if !nbhd[y].is_subset(nb) {
                    return Err(TopologyError::NotAPreorder(format!(
                        "{y} lies in the neighborhood {nb} of {x} but its own neighborhood {} does not",
                        nbhd[y]
                    )));
                }
            }
        }
        Ok(Self::from_nbhds_unchecked(n, nbhd))
    }

    pub(crate) fn from_nbhds_unchecked(n: usize, nbhd: Vec<PointSet>) -> Self {
        debug_assert_eq!(nbhd.len(), n);
        let opens = opens_from_nbhds(&nbhd);
        FinSpace(Arc::new(SpaceData { n, opens, nbhd }))
    }

    /// `opens` must already be a sorted, deduplicated topology.
    pub(crate) fn from_canonical_opens(n: usize, opens: Vec<PointSet>) -> Self {
        let nbhd = nbhds_from_opens(n, &opens);
        FinSpace(Arc::new(SpaceData { n, opens, nbhd }))
    }

    pub(crate) fn from_opens_unchecked(n: usize, mut opens: Vec<PointSet>) -> Self {
        opens.sort_unstable();
        opens.dedup();
        Self::from_canonical_opens(n, opens)
    }

    pub fn empty() -> Self {
        Self::from_nbhds_unchecked(0, Vec::new())
    }

    pub fn point() -> Self {
        Self::discrete(1)
    }

    pub fn discrete(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        Self::from_nbhds_unchecked(n, (0..n).map(PointSet::singleton).collect())
    }

    pub fn indiscrete(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        Self::from_nbhds_unchecked(n, vec![PointSet::full(n); n])
    }

    /// `{0, 1}` with opens `{}`, `{0}`, `{0 1}`.
    pub fn sierpinski() -> Self {
        Self::from_nbhds_unchecked(2, vec![PointSet::singleton(0), PointSet::full(2)])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.0.n
    }

    #[inline]
    pub fn points(&self) -> PointSet {
        PointSet::full(self.0.n)
    }

    /// The open sets in canonical (numeric) order.
    #[inline]
    pub fn opens(&self) -> &[PointSet] {
        &self.0.opens
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        self.0.opens.binary_search(&set).is_ok()
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        set.within(self.n()) && self.is_open(set.complement(self.n()))
    }

    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut closed: Vec<_> = self.opens().iter().map(|u| u.complement(self.n())).collect();
        closed.sort_unstable();
        closed
    }

    /// Intersection of all opens containing `x`.
    #[inline]
    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.0.nbhd[x]
    }

    #[inline]
    pub fn min_nbhds(&self) -> &[PointSet] {
        &self.0.nbhd
    }

    /// Largest open subset of `set`.
    pub fn interior(&self, set: PointSet) -> PointSet {
        set.iter().filter(|&x| self.min_nbhd(x).is_subset(set)).fold(PointSet::EMPTY, PointSet::with)
    }

    /// Smallest closed superset of `set`.
    pub fn closure(&self, set: PointSet) -> PointSet {
        let n = self.n();
        self.interior(set.complement(n)).complement(n)
    }

    /// `x ⊑ y` iff `x` lies in every open set containing `y`.
    pub fn specialization_preorder(&self) -> Preorder {
        Preorder { below: self.0.nbhd.clone() }
    }

    /// Product topology; the pair `(x, y)` is the point `x * other.n() + y`.
    pub fn product(&self, other: &FinSpace) -> Result<Product> {
        let (n, m) = (self.n(), other.n());
        check_size(n * m)?;
        let mut nbhd = Vec::with_capacity(n * m);
        for x in 0..n {
            for y in 0..m {
                let mut nb = PointSet::EMPTY;
                for a in self.min_nbhd(x).iter() {
                    for b in other.min_nbhd(y).iter() {
                        nb.insert(a * m + b);
                    }
                }
                nbhd.push(nb);
            }
        }
        let space = Self::from_nbhds_unchecked(n * m, nbhd);
        let left =
            ContinuousMap::new_unchecked(space.clone(), self.clone(), (0..n * m).map(|p| p / m.max(1)).collect());
        let right =
            ContinuousMap::new_unchecked(space.clone(), other.clone(), (0..n * m).map(|p| p % m.max(1)).collect());
        Ok(Product { space, left, right })
    }

    /// Disjoint union; `other`'s points follow `self`'s.
    pub fn coproduct(&self, other: &FinSpace) -> Result<Coproduct> {
        let (n, m) = (self.n(), other.n());
        check_size(n + m)?;
        let nbhd = self
            .min_nbhds()
            .iter()
            .copied()
            .chain(other.min_nbhds().iter().map(|nb| PointSet::from_bits(nb.bits() << n)))
            .collect();
        let space = Self::from_nbhds_unchecked(n + m, nbhd);
        let left = ContinuousMap::new_unchecked(self.clone(), space.clone(), (0..n).collect());
        let right = ContinuousMap::new_unchecked(other.clone(), space.clone(), (n..n + m).collect());
        Ok(Coproduct { space, left, right })
    }

    /// Trace topology on `set`; its points are relabeled `0..set.len()` in
    /// increasing order.
    pub fn subspace(&self, set: PointSet) -> Result<Subspace> {
        check_set(self.n(), set)?;
        let points: Vec<usize> = set.iter().collect();
        let nbhd = points
            .iter()
            .map(|&x| {
                let nb = self.min_nbhd(x).intersection(set);
                points
                    .iter()
                    .enumerate()
                    .filter(|&(_, &p)| nb.contains(p))
                    .fold(PointSet::EMPTY, |acc, (i, _)| acc.with(i))
            })
            .collect();
        let space = Self::from_nbhds_unchecked(points.len(), nbhd);
        let inclusion = ContinuousMap::new_unchecked(space.clone(), self.clone(), points.clone());
        Ok(Subspace { space, inclusion, points })
    }

    /// Quotient by a partition into blocks; block `i` becomes point `i`.
    pub fn quotient(&self, blocks: &[PointSet]) -> Result<Quotient> {
        let n = self.n();
        let mut covered = PointSet::EMPTY;
        let mut label = vec![usize::MAX; n];
        for (i, &b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(TopologyError::InvalidPartition(format!("block {i} is empty")));
            }
            if !b.within(n) {
                return Err(TopologyError::InvalidPartition(format!("block {b} leaves the {n} points")));
            }
            if !covered.is_disjoint(b) {
                return Err(TopologyError::InvalidPartition(format!("block {b} overlaps an earlier block")));
            }
            covered = covered.union(b);
            for x in b.iter() {
                label[x] = i;
            }
        }
        if covered != self.points() {
            return Err(TopologyError::InvalidPartition(format!(
                "points {} are not covered",
                self.points().difference(covered)
            )));
        }
        let k = blocks.len();
        let opens = self
            .opens()
            .iter()
            .filter(|u| u.iter().all(|x| blocks[label[x]].is_subset(**u)))
            .map(|u| u.image(&label))
            .collect();
        let space = Self::from_opens_unchecked(k, opens);
        let map = ContinuousMap::new_unchecked(self.clone(), space.clone(), label);
        Ok(Quotient { space, map })
    }

    /// Adjoins a twin `x'` for every `x` in `doubled`.
    ///
    /// Twins are numbered `n, n+1, ..` in increasing order of the original
    /// point. The topology is generated by the original opens together with
    /// `(U \ {x}) ∪ {x'}` for every doubled `x` and open `U` containing `x`.
    pub fn double_points(&self, doubled: PointSet) -> Result<Doubled> {
        let n = self.n();
        check_set(n, doubled)?;
        check_size(n + doubled.len())?;
        let twins: Vec<(usize, usize)> = doubled.iter().enumerate().map(|(i, x)| (x, n + i)).collect();
        let mut subbasis: Vec<PointSet> = self.opens().to_vec();
        for &(x, twin) in &twins {
            for &u in self.opens().iter().filter(|u| u.contains(x)) {
                subbasis.push(u.without(x).with(twin));
            }
        }
        let space = Self::generate(n + twins.len(), subbasis)?;
        Ok(Doubled { space, twins })
    }
}

/// The specialization preorder of a finite space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preorder {
    below: Vec<PointSet>,
}

impl Preorder {
    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    /// `x ⊑ y`.
    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    /// `{x : x ⊑ y}`.
    pub fn down_set(&self, y: usize) -> PointSet {
        self.below[y]
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.len()).all(|y| self.below[y].iter().all(|x| x == y || !self.le(y, x)))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|y| self.below[y].iter().all(|x| self.le(y, x)))
    }

    /// All related pairs `(x, y)` with `x ⊑ y`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (0..self.len()).flat_map(|y| self.below[y].iter().map(move |x| (x, y))).collect();
        out.sort_unstable();
        out
    }
}

#[derive(Clone, Debug)]
pub struct Product {
    pub space: FinSpace,
    pub left: ContinuousMap,
    pub right: ContinuousMap,
}

#[derive(Clone, Debug)]
pub struct Coproduct {
    pub space: FinSpace,
    pub left: ContinuousMap,
    pub right: ContinuousMap,
}

#[derive(Clone, Debug)]
pub struct Subspace {
    pub space: FinSpace,
    pub inclusion: ContinuousMap,
    /// Original label of each subspace point.
    pub points: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub space: FinSpace,
    pub map: ContinuousMap,
}

#[derive(Clone, Debug)]
pub struct Doubled {
    pub space: FinSpace,
    /// `(original, twin)` pairs.
    pub twins: Vec<(usize, usize)>,
}

impl Doubled {
    /// The permutation exchanging every point with its twin.
    pub fn twin_swap(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.space.n()).collect();
        for &(x, t) in &self.twins {
            perm.swap(x, t);
        }
        perm
    }
}
