//! Continuous maps between finite spaces, their enumeration, and
//! homeomorphism search.

use std::ops::ControlFlow;

use crate::error::{Result, TopologyError};
use crate::pointset::PointSet;
use crate::space::FinSpace;

/// A point function `dom -> cod` whose open preimages are open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuousMap {
    dom: FinSpace,
    cod: FinSpace,
    map: Vec<usize>,
}

impl ContinuousMap {
    /// Checks the preimage of every open set of `cod`.
    pub fn new(dom: FinSpace, cod: FinSpace, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.n() {
            return Err(TopologyError::MapShape { len: map.len(), expected: dom.n() });
        }
        if let Some(&point) = map.iter().find(|&&x| x >= cod.n()) {
            return Err(TopologyError::PointOutOfRange { point, n: cod.n() });
        }
        for &open in cod.opens() {
            let preimage = open.preimage(&map);
            if !dom.is_open(preimage) {
                return Err(TopologyError::NotContinuous { open, preimage });
            }
        }
        Ok(ContinuousMap { dom, cod, map })
    }

    pub(crate) fn new_unchecked(dom: FinSpace, cod: FinSpace, map: Vec<usize>) -> Self {
        debug_assert!(is_continuous(&dom, &cod, &map));
        ContinuousMap { dom, cod, map }
    }

    pub fn dom(&self) -> &FinSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FinSpace {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn preimage(&self, set: PointSet) -> PointSet {
        set.preimage(&self.map)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ContinuousMap) -> Result<ContinuousMap> {
        if self.cod != other.dom {
            return Err(TopologyError::NotComposable);
        }
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        Ok(ContinuousMap::new_unchecked(self.dom.clone(), other.cod.clone(), map))
    }
}

/// Literal continuity: the preimage of every open set is open.
pub fn is_continuous(dom: &FinSpace, cod: &FinSpace, map: &[usize]) -> bool {
    map.len() == dom.n() && map.iter().all(|&x| x < cod.n()) && cod.opens().iter().all(|u| dom.is_open(u.preimage(map)))
}

/// Monotonicity for the specialization preorders: `z' ⊑ z` implies
/// `f(z') ⊑ f(z)`. Equivalent to continuity on finite spaces.
pub fn is_monotone(dom: &FinSpace, cod: &FinSpace, map: &[usize]) -> bool {
    map.len() == dom.n()
        && map.iter().all(|&x| x < cod.n())
        && (0..dom.n()).all(|z| dom.min_nbhd(z).image(map).is_subset(cod.min_nbhd(map[z])))
}

/// Visits every continuous `dom -> cod` map in lexicographic order (the value
/// at point 0 varies slowest). Entries of `fixed` that are `Some` pin the
/// value at that point. Stops early when `visit` breaks.
pub fn for_each_continuous_map<F>(
    dom: &FinSpace,
    cod: &FinSpace,
    fixed: Option<&[Option<usize>]>,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = dom.n();
    if let Some(fixed) = fixed {
        debug_assert_eq!(fixed.len(), n);
    }
    let mut map = vec![0usize; n];
    search(dom, cod, fixed, 0, &mut map, &mut visit)
}

fn search<F>(
    dom: &FinSpace,
    cod: &FinSpace,
    fixed: Option<&[Option<usize>]>,
    i: usize,
    map: &mut [usize],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if i == dom.n() {
        return visit(map);
    }
    let candidates = match fixed.and_then(|f| f[i]) {
        Some(v) => v..v + 1,
        None => 0..cod.n(),
    };
    let below_i = dom.min_nbhd(i);
    for v in candidates {
        // relations between i and the points already assigned
        let ok = (0..i).all(|j| {
            (!below_i.contains(j) || cod.min_nbhd(v).contains(map[j]))
                && (!dom.min_nbhd(j).contains(i) || cod.min_nbhd(map[j]).contains(v))
        });
        if ok {
            map[i] = v;
            search(dom, cod, fixed, i + 1, map, visit)?;
        }
    }
    ControlFlow::Continue(())
}

/// All continuous maps `dom -> cod`, lexicographically ordered.
pub fn enumerate_continuous_maps(dom: &FinSpace, cod: &FinSpace) -> Vec<ContinuousMap> {
    let mut out = Vec::new();
    let _ = for_each_continuous_map(dom, cod, None, |m| {
        out.push(ContinuousMap::new_unchecked(dom.clone(), cod.clone(), m.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// A bijection `perm` with `perm` mapping the opens of `x` onto the opens of
/// `y`, if one exists.
pub fn homeomorphism(x: &FinSpace, y: &FinSpace) -> Option<Vec<usize>> {
    let n = x.n();
    if n != y.n() || x.opens().len() != y.opens().len() {
        return None;
    }
    let mut xs: Vec<usize> = x.min_nbhds().iter().map(|s| s.len()).collect();
    let mut ys: Vec<usize> = y.min_nbhds().iter().map(|s| s.len()).collect();
    xs.sort_unstable();
    ys.sort_unstable();
    if xs != ys {
        return None;
    }
    let mut perm = vec![0usize; n];
    let mut used = PointSet::EMPTY;
    if place(x, y, 0, &mut perm, &mut used) {
        Some(perm)
    } else {
        None
    }
}

fn place(x: &FinSpace, y: &FinSpace, i: usize, perm: &mut [usize], used: &mut PointSet) -> bool {
    if i == x.n() {
        return true;
    }
    for v in 0..y.n() {
        if used.contains(v) || x.min_nbhd(i).len() != y.min_nbhd(v).len() {
            continue;
        }
        let consistent = (0..i).all(|j| {
            x.min_nbhd(i).contains(j) == y.min_nbhd(v).contains(perm[j])
                && x.min_nbhd(j).contains(i) == y.min_nbhd(perm[j]).contains(v)
        });
        if consistent {
            perm[i] = v;
            used.insert(v);
            if place(x, y, i + 1, perm, used) {
                return true;
            }
            used.remove(v);
        }
    }
    false
}

pub fn is_homeomorphic(x: &FinSpace, y: &FinSpace) -> bool {
    homeomorphism(x, y).is_some()
}

/// The space with every point `p` renamed to `perm[p]`.
pub fn relabel(space: &FinSpace, perm: &[usize]) -> Result<FinSpace> {
    let n = space.n();
    let mut seen = PointSet::EMPTY;
    if perm.len() != n {
        return Err(TopologyError::MapShape { len: perm.len(), expected: n });
    }
    for &p in perm {
        if p >= n || seen.contains(p) {
            return Err(TopologyError::InvalidPartition(format!("{perm:?} is not a permutation")));
        }
        seen.insert(p);
    }
    let opens = space.opens().iter().map(|u| u.image(perm)).collect();
    Ok(FinSpace::from_opens_unchecked(n, opens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_functions(m: usize, n: usize) -> Vec<Vec<usize>> {
        let total = n.pow(m as u32);
        (0..total)
            .map(|mut code| {
                let mut f = vec![0; m];
                for i in (0..m).rev() {
                    f[i] = code % n;
                    code /= n;
                }
                f
            })
            .collect()
    }

    #[test]
    fn maps_from_indiscrete_pair_to_sierpinski_are_constant() {
        let maps = enumerate_continuous_maps(&FinSpace::indiscrete(2), &FinSpace::sierpinski());
        let got: Vec<_> = maps.iter().map(|m| m.map().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn sierpinski_self_maps() {
        let s = FinSpace::sierpinski();
        let got: Vec<_> = enumerate_continuous_maps(&s, &s).iter().map(|m| m.map().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert!(ContinuousMap::new(s.clone(), s.clone(), vec![1, 0]).is_err());
    }

    #[test]
    fn maps_into_a_point() {
        for x in [FinSpace::sierpinski(), FinSpace::discrete(3), FinSpace::empty()] {
            assert_eq!(enumerate_continuous_maps(&x, &FinSpace::point()).len(), 1);
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let spaces = [
            FinSpace::sierpinski(),
            FinSpace::indiscrete(2),
            FinSpace::discrete(2),
            FinSpace::sierpinski().double_points(PointSet::singleton(1)).unwrap().space,
        ];
        for z in &spaces {
            for x in &spaces {
                let expected: Vec<_> =
                    all_functions(z.n(), x.n()).into_iter().filter(|f| is_continuous(z, x, f)).collect();
                let got: Vec<_> = enumerate_continuous_maps(z, x).iter().map(|m| m.map().to_vec()).collect();
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn homeomorphisms() {
        let s = FinSpace::sierpinski();
        let swapped = relabel(&s, &[1, 0]).unwrap();
        assert_ne!(s, swapped);
        assert_eq!(homeomorphism(&s, &swapped), Some(vec![1, 0]));
        assert!(!is_homeomorphic(&s, &FinSpace::discrete(2)));
        let d = s.double_points(PointSet::singleton(1)).unwrap().space;
        let d2 = relabel(&d, &[2, 0, 1]).unwrap();
        let perm = homeomorphism(&d, &d2).unwrap();
        let image: Vec<_> = d.opens().iter().map(|u| u.image(&perm)).collect();
        assert!(image.iter().all(|u| d2.is_open(*u)));
    }

    #[test]
    fn composition_and_errors() {
        let s = FinSpace::sierpinski();
        let p = s.product(&s).unwrap();
        let diag = ContinuousMap::new(s.clone(), p.space.clone(), vec![0, 3]).unwrap();
        assert_eq!(diag.then(&p.left).unwrap().map(), &[0, 1]);
        assert!(matches!(ContinuousMap::new(s.clone(), s.clone(), vec![0]), Err(TopologyError::MapShape { .. })));
        assert!(matches!(
            ContinuousMap::new(s.clone(), s.clone(), vec![0, 2]),
            Err(TopologyError::PointOutOfRange { .. })
        ));
    }
}
