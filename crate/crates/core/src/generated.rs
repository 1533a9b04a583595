//! Topologies generated by maps out of a test class.
//!
//! For a class `C`, a subset `U` of `X` is C-open when `f⁻¹(U)` is open for
//! every member `Z` of `C` and every continuous `f: Z -> X`. The C-open sets
//! form the coreflected topology `X_C`; `X` is C-generated when nothing
//! changes, and C-Hausdorff when the diagonal of `X × X` is C-closed.
//!
//! The builtin `P` and `A` classes are the indiscrete pair and the Sierpinski
//! space. `Sfin` stands for the convergent sequence `ω+1`: a map out of it is
//! a convergent sequence with a chosen limit, so its closed sets are the sets
//! closed under limits of cofinal profiles. The same profiles also realize
//! the classes of regular-cardinal successors (continuous or not), so `Sfin`
//! answers for those classes too on finite spaces.
//!
//! Compact, compact Hausdorff and Hausdorff classes are not restricted to
//! their finite members, which would misjudge spaces such as Sierpinski.
//! Every finite space is sequential, and sequential spaces are k1-, k2- and
//! H-generated, so those predicates run the sequential check instead.

use std::ops::ControlFlow;

use crate::convergence::{self, ClosureMode};
use crate::error::{Result, TopologyError};
use crate::maps::for_each_continuous_map;
use crate::pointset::PointSet;
use crate::space::FinSpace;

/// Largest member accepted in an explicit class.
pub const MEMBER_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassKind {
    Explicit(Vec<FinSpace>),
    BuiltinP,
    BuiltinA,
    BuiltinSfin,
}

/// A generating class of test spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestClass {
    name: String,
    kind: ClassKind,
}

impl TestClass {
    pub fn explicit(name: impl Into<String>, members: Vec<FinSpace>) -> Result<Self> {
        Self::explicit_bounded(name, members, MEMBER_BOUND)
    }

    pub fn explicit_bounded(name: impl Into<String>, members: Vec<FinSpace>, bound: usize) -> Result<Self> {
        let name = name.into();
        if members.is_empty() {
            return Err(TopologyError::InvalidClass(format!("class {name} has no members")));
        }
        if let Some(big) = members.iter().find(|z| z.n() > bound) {
            return Err(TopologyError::InvalidClass(format!(
                "class {name} has a {}-point member, the limit is {bound}",
                big.n()
            )));
        }
        Ok(TestClass { name, kind: ClassKind::Explicit(members) })
    }

    /// The two-point indiscrete space.
    pub fn p() -> Self {
        TestClass { name: "P".into(), kind: ClassKind::BuiltinP }
    }

    /// The Sierpinski space.
    pub fn a() -> Self {
        TestClass { name: "A".into(), kind: ClassKind::BuiltinA }
    }

    /// Convergent sequences, via cofinal profiles.
    pub fn sfin() -> Self {
        TestClass { name: "Sfin".into(), kind: ClassKind::BuiltinSfin }
    }

    /// Looks up `P`, `A` or `Sfin`.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "P" => Some(Self::p()),
            "A" => Some(Self::a()),
            "Sfin" => Some(Self::sfin()),
            _ => None,
        }
    }

    /// The same class under another name.
    pub fn with_name(self, name: impl Into<String>) -> Self {
        TestClass { name: name.into(), ..self }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &ClassKind {
        &self.kind
    }

    /// Finite member spaces, or `None` for `Sfin`.
    pub fn members(&self) -> Option<Vec<FinSpace>> {
        match &self.kind {
            ClassKind::Explicit(m) => Some(m.clone()),
            ClassKind::BuiltinP => Some(vec![FinSpace::indiscrete(2)]),
            ClassKind::BuiltinA => Some(vec![FinSpace::sierpinski()]),
            ClassKind::BuiltinSfin => None,
        }
    }
}

/// The closed-set test a class induces on one target space.
enum Probe {
    Maps(Vec<(FinSpace, Vec<usize>)>),
    Limits,
}

impl Probe {
    fn new(space: &FinSpace, class: &TestClass) -> Self {
        match class.members() {
            None => Probe::Limits,
            Some(members) => {
                let mut maps = Vec::new();
                for z in members {
                    let _ = for_each_continuous_map(&z, space, None, |m| {
                        maps.push((z.clone(), m.to_vec()));
                        ControlFlow::Continue(())
                    });
                }
                Probe::Maps(maps)
            }
        }
    }

    fn is_closed(&self, space: &FinSpace, set: PointSet) -> bool {
        match self {
            Probe::Limits => convergence::is_closed_under_limits(space, set),
            Probe::Maps(maps) => maps.iter().all(|(z, m)| z.is_closed(set.preimage(m))),
        }
    }
}

fn check_set(space: &FinSpace, set: PointSet) -> Result<()> {
    if set.within(space.n()) {
        Ok(())
    } else {
        Err(TopologyError::OutOfRange { set, n: space.n() })
    }
}

/// Whether `set` is closed in the coreflected topology.
pub fn c_closed(space: &FinSpace, class: &TestClass, set: PointSet) -> Result<bool> {
    check_set(space, set)?;
    Ok(match class.members() {
        None => convergence::is_closed_under_limits(space, set),
        Some(members) => members.iter().all(|z| {
            for_each_continuous_map(z, space, None, |m| {
                if z.is_closed(set.preimage(m)) {
                    ControlFlow::Continue(())
                } else {
                    ControlFlow::Break(())
                }
            })
            .is_continue()
        }),
    })
}

pub fn c_open(space: &FinSpace, class: &TestClass, set: PointSet) -> Result<bool> {
    check_set(space, set)?;
    c_closed(space, class, set.complement(space.n()))
}

/// `X_C`: the same points with every C-open set open.
pub fn coreflection(space: &FinSpace, class: &TestClass) -> FinSpace {
    let n = space.n();
    let probe = Probe::new(space, class);
    let opens = space.points().subsets().filter(|u| probe.is_closed(space, u.complement(n))).collect();
    FinSpace::from_opens_unchecked(n, opens)
}

/// Every C-open set is already open.
pub fn is_c_generated(space: &FinSpace, class: &TestClass) -> bool {
    let n = space.n();
    let probe = Probe::new(space, class);
    space.points().subsets().all(|u| space.is_open(u) || !probe.is_closed(space, u.complement(n)))
}

/// The diagonal of `X × X`.
pub fn diagonal(n: usize) -> PointSet {
    (0..n).map(|x| x * n + x).collect()
}

/// The diagonal of `X × X` is C-closed.
pub fn is_c_hausdorff(space: &FinSpace, class: &TestClass) -> Result<bool> {
    let square = space.product(space)?;
    c_closed(&square.space, class, diagonal(space.n()))
}

/// Which compactly generated flavor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KVariant {
    /// Generated by compact spaces.
    K1,
    /// Generated by compact Hausdorff spaces.
    K2,
}

/// Generated by Hausdorff spaces. Decided through sequentiality.
pub fn is_h_generated(space: &FinSpace) -> bool {
    convergence::is_sequential_style(space, ClosureMode::Sequential)
}

/// A k1- or k2-space. Decided through sequentiality.
pub fn is_k_generated(space: &FinSpace, _variant: KVariant) -> bool {
    convergence::is_sequential_style(space, ClosureMode::Sequential)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms;

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn c_closed_examples() {
        let s = FinSpace::sierpinski();
        let p = TestClass::p();
        assert!(c_closed(&s, &p, set(&[1])).unwrap());
        assert!(c_open(&s, &p, set(&[1])).unwrap());
        let pair = FinSpace::indiscrete(2);
        assert!(!c_open(&pair, &p, set(&[0])).unwrap());
        for class in [TestClass::p(), TestClass::a(), TestClass::sfin()] {
            assert!(c_closed(&s, &class, PointSet::EMPTY).unwrap());
        }
        assert!(c_closed(&s, &p, set(&[4])).is_err());
    }

    #[test]
    fn coreflection_examples() {
        let s = FinSpace::sierpinski();
        assert_eq!(coreflection(&s, &TestClass::p()), FinSpace::discrete(2));
        let pair = FinSpace::indiscrete(2);
        assert_eq!(coreflection(&pair, &TestClass::a()), pair);
        assert_eq!(coreflection(&pair, &TestClass::p()), pair);
        assert_eq!(coreflection(&s, &TestClass::a()), s);
    }

    #[test]
    fn members_are_generated() {
        let d = FinSpace::sierpinski().double_points(set(&[1])).unwrap().space;
        let class = TestClass::explicit("mine", vec![d.clone(), FinSpace::indiscrete(2)]).unwrap();
        assert!(is_c_generated(&d, &class));
        assert!(is_c_generated(&FinSpace::indiscrete(2), &class));
    }

    #[test]
    fn generated_examples() {
        assert!(!is_c_generated(&FinSpace::sierpinski(), &TestClass::p()));
        assert!(is_c_generated(&FinSpace::indiscrete(2), &TestClass::p()));
        assert!(is_c_generated(&FinSpace::sierpinski(), &TestClass::a()));
        assert!(is_c_generated(&FinSpace::sierpinski(), &TestClass::sfin()));
    }

    #[test]
    fn hausdorff_examples() {
        let s = FinSpace::sierpinski();
        let pair = FinSpace::indiscrete(2);
        assert!(is_c_hausdorff(&s, &TestClass::p()).unwrap());
        assert!(!is_c_hausdorff(&pair, &TestClass::p()).unwrap());
        for class in [TestClass::p(), TestClass::a(), TestClass::sfin()] {
            assert!(is_c_hausdorff(&FinSpace::discrete(3), &class).unwrap());
        }
        assert!(!is_c_hausdorff(&s, &TestClass::a()).unwrap());
        assert!(!is_c_hausdorff(&s, &TestClass::sfin()).unwrap());
    }

    #[test]
    fn compactly_generated_shortcuts() {
        for s in [FinSpace::sierpinski(), FinSpace::indiscrete(2), FinSpace::discrete(3)] {
            assert!(is_h_generated(&s));
            assert!(is_k_generated(&s, KVariant::K1));
            assert!(is_k_generated(&s, KVariant::K2));
        }
    }

    #[test]
    fn explicit_classes_are_validated() {
        assert!(TestClass::explicit("e", vec![]).is_err());
        assert!(TestClass::explicit("big", vec![FinSpace::discrete(5)]).is_err());
        assert!(TestClass::builtin("Q").is_none());
        let p = TestClass::explicit("P'", vec![FinSpace::indiscrete(2)]).unwrap();
        let x = FinSpace::sierpinski();
        assert_eq!(coreflection(&x, &p), coreflection(&x, &TestClass::p()));
        assert_eq!(axioms::is_t0(&x), is_c_hausdorff(&x, &p).unwrap());
    }
}
