//! The theorem suite run by `topoctl verify`: every law the library claims,
//! checked exhaustively over the labeled census.
//!
//! Suites run in a fixed order and each aggregates its parallel work in
//! census order, so results do not depend on the thread count.

use rayon::prelude::*;
use serde::Serialize;

use crate::axioms;
use crate::census;
use crate::convergence::{self, ApproachMode, ClosureMode};
use crate::deduction::{
    check_census_consistency, completeness_report, derive, status, KnowledgeBase, Status, DIAGRAM_PROPERTIES,
};
use crate::error::Result;
use crate::generated::{self, TestClass};
use crate::maps::{self, for_each_continuous_map};
use crate::pointset::PointSet;
use crate::properties::CHECKERS;
use crate::space::FinSpace;

/// Violation messages kept per suite; the count is always exact.
const KEEP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub violation_count: usize,
    pub violations: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

/// Census spaces with labels, and the knowledge base under test.
pub struct Context {
    pub max_points: usize,
    pub spaces: Vec<(String, FinSpace)>,
    pub kb: KnowledgeBase,
}

impl Context {
    pub fn new(max_points: usize, kb: KnowledgeBase) -> Result<Self> {
        let bound = census::census_bound()?;
        let mut spaces = Vec::new();
        for n in 0..=max_points {
            for (i, s) in census::enumerate_topologies_bounded(n, bound)?.into_iter().enumerate() {
                spaces.push((format!("n={n}#{i}"), s));
            }
        }
        Ok(Context { max_points, spaces, kb })
    }

    fn upto(&self, n: usize) -> &[(String, FinSpace)] {
        let end = self.spaces.partition_point(|(_, s)| s.n() <= n);
        &self.spaces[..end]
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    count: usize,
    kept: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.count += 1;
            if self.kept.len() < KEEP {
                self.kept.push(msg());
            }
        }
    }

    /// One verdict standing for `checked` individual checks.
    fn bulk(&mut self, checked: usize, ok: bool, msg: impl FnOnce() -> String) {
        self.check(ok, msg);
        self.checked += checked.saturating_sub(1);
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.count += other.count;
        for m in other.kept {
            if self.kept.len() < KEEP {
                self.kept.push(m);
            }
        }
        self
    }

    fn finish(self, name: &'static str) -> SuiteResult {
        SuiteResult { name, checked: self.checked, violation_count: self.count, violations: self.kept }
    }
}

/// Runs `f` on every item in parallel and merges the tallies in item order.
fn over<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            f(item, &mut t);
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

type Suite = fn(&Context) -> Tally;

/// Suite names and bodies, in run order.
const SUITES: &[(&str, Suite)] = &[
    ("core.constructors-valid", constructors_valid),
    ("core.continuity-is-monotonicity", continuity_is_monotonicity),
    ("core.closure-laws", closure_laws),
    ("core.product-universal-property", product_universal_property),
    ("core.census-counts", census_counts),
    ("core.doubling-twin-symmetry", doubling_twin_symmetry),
    ("convergence.limits-antitone", limits_antitone),
    ("convergence.constant-sequences-converge", constant_sequences_converge),
    ("convergence.unique-limits-collapse", unique_limits_collapse),
    ("convergence.sequentially-discrete-collapse", sequentially_discrete_collapse),
    ("convergence.mode-independence", mode_independence),
    ("axioms.diagram-soundness", diagram_soundness),
    ("axioms.finite-collapse", finite_collapse),
    ("axioms.sh-implies-t1", sh_implies_t1),
    ("axioms.homeomorphism-invariance", homeomorphism_invariance),
    ("generated.coreflection-finer", coreflection_finer),
    ("generated.coreflection-idempotent", coreflection_idempotent),
    ("generated.coreflection-functorial", coreflection_functorial),
    ("generated.class-monotonicity", class_monotonicity),
    ("generated.contravariance", contravariance),
    ("generated.characterizations", characterizations),
    ("generated.quotient-coproduct-stability", quotient_coproduct_stability),
    ("deduction.derive-idempotent-monotone", derive_idempotent_monotone),
    ("deduction.status-reflexive", status_reflexive),
    ("deduction.witness-chains-grounded", witness_chains_grounded),
    ("deduction.diagram-complete", diagram_complete),
    ("deduction.census-consistency", census_consistency),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs every suite.
pub fn run_all(ctx: &Context) -> Vec<SuiteResult> {
    SUITES.iter().map(|(name, f)| f(ctx).finish(name)).collect()
}

/// Runs the named suites, in the order given.
pub fn run_named(ctx: &Context, names: &[&str]) -> Option<Vec<SuiteResult>> {
    names.iter().map(|n| SUITES.iter().find(|(name, _)| name == n).map(|(name, f)| f(ctx).finish(name))).collect()
}

fn same_space(a: &FinSpace, b: &FinSpace) -> bool {
    FinSpace::new(a.n(), a.opens().to_vec()).is_ok_and(|v| v == *b)
}

/// Set partitions of `0..n`, as restricted growth strings.
pub(crate) fn partitions(n: usize) -> Vec<Vec<PointSet>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<PointSet>, out: &mut Vec<Vec<PointSet>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].insert(i);
            go(i + 1, n, blocks, out);
            blocks[b].remove(i);
        }
        blocks.push(PointSet::singleton(i));
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

fn all_functions(dom: usize, cod: usize, mut f: impl FnMut(&[usize])) {
    if dom > 0 && cod == 0 {
        return;
    }
    let mut map = vec![0usize; dom];
    loop {
        f(&map);
        let mut i = dom;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < cod {
                break;
            }
            map[i] = 0;
        }
    }
}

fn constructors_valid(ctx: &Context) -> Tally {
    let small = ctx.upto(ctx.max_points.min(2));
    let mid = ctx.upto(ctx.max_points.min(3));
    let mut t = over(small, |(la, a), t| {
        for (lb, b) in small {
            let p = a.product(b).expect("small product");
            t.check(same_space(&p.space, &p.space), || format!("product {la} x {lb}"));
            let c = a.coproduct(b).expect("small coproduct");
            t.check(same_space(&c.space, &c.space), || format!("coproduct {la} + {lb}"));
        }
    });
    t = t.merge(over(mid, |(l, x), t| {
        for set in x.points().subsets() {
            let s = x.subspace(set).expect("subspace");
            t.check(same_space(&s.space, &s.space), || format!("subspace of {l} on {set}"));
            let d = x.double_points(set).expect("doubling");
            t.check(same_space(&d.space, &d.space), || format!("doubling of {l} at {set}"));
            let g = FinSpace::generate(x.n(), x.opens().iter().copied().filter(|u| u.is_subset(set)));
            t.check(g.is_ok_and(|g| same_space(&g, &g)), || format!("generated from {l}"));
        }
        for blocks in partitions(x.n()) {
            let q = x.quotient(&blocks).expect("quotient");
            t.check(same_space(&q.space, &q.space), || format!("quotient of {l}"));
        }
    }));
    t
}

fn continuity_is_monotonicity(ctx: &Context) -> Tally {
    let spaces = ctx.upto(ctx.max_points.min(3));
    over(spaces, |(lz, z), t| {
        for (lx, x) in spaces {
            all_functions(z.n(), x.n(), |f| {
                t.check(maps::is_continuous(z, x, f) == maps::is_monotone(z, x, f), || {
                    format!("{lz} -> {lx} map {f:?}")
                })
            });
            let mut enumerated = Vec::new();
            let _ = for_each_continuous_map(z, x, None, |m| {
                enumerated.push(m.to_vec());
                std::ops::ControlFlow::Continue(())
            });
            let mut literal = Vec::new();
            all_functions(z.n(), x.n(), |f| {
                if maps::is_continuous(z, x, f) {
                    literal.push(f.to_vec());
                }
            });
            t.check(enumerated == literal, || format!("enumeration {lz} -> {lx}"));
        }
    })
}

fn closure_laws(ctx: &Context) -> Tally {
    over(&ctx.spaces, |(l, x), t| {
        let full = x.points();
        for a in full.subsets() {
            let cl = x.closure(a);
            let int = x.interior(a);
            t.check(a.is_subset(cl) && x.closure(cl) == cl && x.is_closed(cl), || format!("closure of {a} in {l}"));
            t.check(int.is_subset(a) && x.interior(int) == int && x.is_open(int), || format!("interior of {a} in {l}"));
            t.check(cl == x.interior(a.complement(x.n())).complement(x.n()), || {
                format!("closure/interior duality at {a} in {l}")
            });
            for b in full.subsets().filter(|b| a.is_subset(*b)) {
                t.check(cl.is_subset(x.closure(b)) && int.is_subset(x.interior(b)), || {
                    format!("monotonicity {a} <= {b} in {l}")
                });
            }
        }
    })
}

fn product_universal_property(ctx: &Context) -> Tally {
    let spaces = ctx.upto(ctx.max_points.min(2));
    over(spaces, |(lx, x), t| {
        for (ly, y) in spaces {
            let p = x.product(y).expect("small product");
            for (lw, w) in spaces {
                all_functions(w.n(), p.space.n(), |g| {
                    let left: Vec<usize> = g.iter().map(|&v| p.left.apply(v)).collect();
                    let right: Vec<usize> = g.iter().map(|&v| p.right.apply(v)).collect();
                    t.check(
                        maps::is_continuous(w, &p.space, g)
                            == (maps::is_continuous(w, x, &left) && maps::is_continuous(w, y, &right)),
                        || format!("{lw} -> {lx} x {ly} map {g:?}"),
                    );
                });
            }
        }
    })
}

/// Counts topologies on `n <= 4` points by testing every family of subsets.
pub(crate) fn brute_force_count(n: usize) -> usize {
    let subsets = 1usize << n;
    let full = (1u64 << subsets) - 1;
    let top = subsets - 1;
    (0..=full)
        .into_par_iter()
        .filter(|&fam| {
            let has = |s: usize| fam >> s & 1 == 1;
            has(0)
                && has(top)
                && (0..subsets)
                    .filter(|&a| has(a))
                    .all(|a| (0..subsets).filter(|&b| has(b)).all(|b| has(a | b) && has(a & b)))
        })
        .count()
}

fn census_counts(ctx: &Context) -> Tally {
    const KNOWN: [usize; 6] = [1, 1, 4, 29, 355, 6942];
    let mut t = Tally::default();
    for (n, &known) in KNOWN.iter().enumerate().take(ctx.max_points + 1) {
        let got = ctx.spaces.iter().filter(|(_, s)| s.n() == n).count();
        t.check(got == known, || format!("n={n}: {got} topologies, expected {known}"));
        if n <= 3 {
            let oracle = brute_force_count(n);
            t.check(got == oracle, || format!("n={n}: {got} topologies, brute force finds {oracle}"));
        }
        if let Ok(parallel) = census::enumerate_topologies_parallel(n, 3) {
            let serial: Vec<&FinSpace> = ctx.spaces.iter().filter(|(_, s)| s.n() == n).map(|(_, s)| s).collect();
            t.check(parallel.iter().eq(serial.iter().copied()), || format!("n={n}: sharded census differs"));
        }
    }
    t
}

fn is_antichain(x: &FinSpace, d: PointSet) -> bool {
    d.iter().all(|a| d.iter().all(|b| a == b || !x.min_nbhd(b).contains(a)))
}

fn doubling_twin_symmetry(ctx: &Context) -> Tally {
    over(ctx.upto(ctx.max_points.min(3)), |(l, x), t| {
        for d in x.points().subsets().filter(|d| is_antichain(x, *d)) {
            let doubled = x.double_points(d).expect("doubling");
            let swapped = maps::relabel(&doubled.space, &doubled.twin_swap());
            t.check(swapped.is_ok_and(|s| s == doubled.space), || {
                format!("doubling {l} at {d}: twin swap is not a homeomorphism")
            });
        }
    })
}

fn limits_antitone(ctx: &Context) -> Tally {
    over(&ctx.spaces, |(l, x), t| {
        for s in x.points().subsets().filter(|s| !s.is_empty()) {
            let ls = convergence::limits_of(x, s);
            for sub in s.subsets().filter(|s| !s.is_empty()) {
                t.check(ls.is_subset(convergence::limits_of(x, sub)), || {
                    format!("{l}: limits({s}) not within limits({sub})")
                });
            }
        }
    })
}

fn constant_sequences_converge(ctx: &Context) -> Tally {
    over(&ctx.spaces, |(l, x), t| {
        for p in x.points().iter() {
            t.check(convergence::limits_of(x, PointSet::singleton(p)).contains(p), || {
                format!("{l}: constant {p} does not converge to {p}")
            });
        }
    })
}

fn unique_limits_collapse(ctx: &Context) -> Tally {
    over(&ctx.spaces, |(l, x), t| {
        let d = axioms::is_discrete(x);
        let v = [convergence::is_us(x), convergence::is_ur(x), convergence::is_ucr(x)];
        t.check(v.iter().all(|&b| b == d), || format!("{l}: US/UR/UCR = {v:?}, discrete = {d}"));
    })
}

fn sequentially_discrete_collapse(ctx: &Context) -> Tally {
    over(&ctx.spaces, |(l, x), t| {
        let d = axioms::is_discrete(x);
        let s = convergence::is_sequentially_discrete(x);
        t.check(s == d, || format!("{l}: sequentially discrete = {s}, discrete = {d}"));
    })
}

fn mode_independence(ctx: &Context) -> Tally {
    over(&ctx.spaces, |(l, x), t| {
        let a = [ApproachMode::FrechetUrysohn, ApproachMode::CRadial, ApproachMode::Radial]
            .map(|m| convergence::is_radial_style(x, m));
        let c = [ClosureMode::Sequential, ClosureMode::PseudoCRadial, ClosureMode::Pseudoradial]
            .map(|m| convergence::is_sequential_style(x, m));
        t.check(a.iter().chain(&c).all(|&b| b), || format!("{l}: approach {a:?}, closure {c:?}"));
    })
}

/// Pairs of checkable diagram properties where the first implies the second.
fn checkable_implications(kb: &KnowledgeBase) -> Vec<(String, String)> {
    let Ok(closed) = derive(kb) else {
        return Vec::new();
    };
    let ids: Vec<&str> = DIAGRAM_PROPERTIES
        .iter()
        .copied()
        .filter(|p| kb.has_property(p) && crate::properties::checker(p).is_some())
        .collect();
    let mut out = Vec::new();
    for p in &ids {
        for q in &ids {
            if p != q && matches!(status(&closed, p, q), Ok(Status::Implies(_))) {
                out.push((p.to_string(), q.to_string()));
            }
        }
    }
    out
}

fn diagram_soundness(ctx: &Context) -> Tally {
    let edges = checkable_implications(&ctx.kb);
    let mut t = Tally::default();
    t.check(!edges.is_empty(), || "no checkable implications in the knowledge base".into());
    t.merge(over(&ctx.spaces, |(l, x), t| {
        for (p, q) in &edges {
            let vp = crate::properties::evaluate(x, p);
            let vq = crate::properties::evaluate(x, q);
            t.check(vp != Some(true) || vq == Some(true), || format!("{l}: {p} holds but {q} fails"));
        }
    }))
}

fn finite_collapse(ctx: &Context) -> Tally {
    over(&ctx.spaces, |(l, x), t| {
        let d = axioms::is_discrete(x);
        let rc = axioms::is_rc(x);
        let v = [
            ("T1", axioms::is_t1(x)),
            ("T2", axioms::is_t2(x)),
            ("KC", axioms::is_kc(x)),
            ("US", convergence::is_us(x)),
            ("lH", axioms::is_lh(x)),
            ("sH", axioms::is_sh(x)),
            ("RC", rc.as_ref().is_ok_and(|&b| b)),
        ];
        for (name, b) in v {
            t.check(b == d, || format!("{l}: {name} = {b}, discrete = {d}"));
        }
        t.check(rc.is_ok(), || format!("{l}: RC refused"));
    })
}

fn sh_implies_t1(ctx: &Context) -> Tally {
    over(&ctx.spaces, |(l, x), t| {
        t.check(!axioms::is_sh(x) || axioms::is_t1(x), || format!("{l}: sH without T1"));
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn homeomorphism_invariance(ctx: &Context) -> Tally {
    over(&ctx.spaces, |(l, x), t| {
        let base: Vec<Option<bool>> = CHECKERS.iter().map(|c| (c.eval)(x)).collect();
        for perm in permutations(x.n()).into_iter().skip(1) {
            let y = maps::relabel(x, &perm).expect("permutation");
            t.check(maps::is_homeomorphic(x, &y), || format!("{l}: relabeling by {perm:?} not recognized"));
            for (c, b) in CHECKERS.iter().zip(&base) {
                let v = (c.eval)(&y);
                t.check(v == *b, || format!("{l}: {} changes under relabeling {perm:?}", c.id));
            }
        }
    })
}

/// Builtin classes plus every explicit class of one or two members drawn
/// from the spaces on at most two points.
fn test_classes(ctx: &Context) -> Vec<TestClass> {
    let mut out = vec![TestClass::p(), TestClass::a(), TestClass::sfin()];
    out.extend(explicit_classes(ctx));
    out
}

fn explicit_classes(ctx: &Context) -> Vec<TestClass> {
    let small: Vec<&FinSpace> = ctx.upto(ctx.max_points.min(2)).iter().map(|(_, s)| s).collect();
    let mut out = Vec::new();
    for (i, a) in small.iter().enumerate() {
        out.push(TestClass::explicit(format!("[{i}]"), vec![(*a).clone()]).expect("small class"));
        for (j, b) in small.iter().enumerate().skip(i + 1) {
            out.push(TestClass::explicit(format!("[{i},{j}]"), vec![(*a).clone(), (*b).clone()]).expect("small class"));
        }
    }
    out
}

fn coreflection_finer(ctx: &Context) -> Tally {
    let classes = test_classes(ctx);
    over(&ctx.spaces, |(l, x), t| {
        for c in &classes {
            let xc = generated::coreflection(x, c);
            t.check(same_space(&xc, &xc) && x.opens().iter().all(|u| xc.is_open(*u)), || {
                format!("{l}: coreflection for {} is not finer", c.name())
            });
        }
    })
}

fn coreflection_idempotent(ctx: &Context) -> Tally {
    let classes = test_classes(ctx);
    over(&ctx.spaces, |(l, x), t| {
        for c in &classes {
            let xc = generated::coreflection(x, c);
            t.check(generated::coreflection(&xc, c) == xc, || {
                format!("{l}: coreflection for {} is not idempotent", c.name())
            });
        }
    })
}

fn coreflection_functorial(ctx: &Context) -> Tally {
    let classes = test_classes(ctx);
    let spaces = ctx.upto(ctx.max_points.min(2));
    over(spaces, |(lx, x), t| {
        for (ly, y) in spaces {
            for f in maps::enumerate_continuous_maps(x, y) {
                for c in &classes {
                    let xc = generated::coreflection(x, c);
                    let yc = generated::coreflection(y, c);
                    t.check(maps::is_continuous(&xc, &yc, f.map()), || {
                        format!("{lx} -> {ly} map {:?} not continuous after coreflecting by {}", f.map(), c.name())
                    });
                }
            }
        }
    })
}

fn class_monotonicity(ctx: &Context) -> Tally {
    let small: Vec<FinSpace> = ctx.upto(ctx.max_points.min(2)).iter().map(|(_, s)| s.clone()).collect();
    let mut pairs: Vec<(TestClass, TestClass)> = Vec::new();
    for (i, a) in small.iter().enumerate() {
        let c = TestClass::explicit(format!("[{i}]"), vec![a.clone()]).expect("small class");
        for (j, b) in small.iter().enumerate() {
            if i != j {
                let d = TestClass::explicit(format!("[{i},{j}]"), vec![a.clone(), b.clone()]).expect("small class");
                pairs.push((c.clone(), d));
            }
        }
    }
    let p_and_a = TestClass::explicit("[P,A]", vec![FinSpace::indiscrete(2), FinSpace::sierpinski()]).expect("class");
    pairs.push((TestClass::p(), p_and_a.clone()));
    pairs.push((TestClass::a(), p_and_a));
    over(&ctx.spaces, |(l, x), t| {
        for (c, d) in &pairs {
            let xc = generated::coreflection(x, c);
            let xd = generated::coreflection(x, d);
            t.check(xd.opens().iter().all(|u| xc.is_open(*u)), || {
                format!("{l}: {} within {} but its coreflection is not coarser", c.name(), d.name())
            });
            let gc = generated::is_c_generated(x, c);
            let gd = generated::is_c_generated(x, d);
            t.check(!gc || gd, || format!("{l}: {}-generated but not {}-generated", c.name(), d.name()));
            let hc = generated::is_c_hausdorff(x, c);
            let hd = generated::is_c_hausdorff(x, d);
            t.check(hc.is_ok() && hd.is_ok(), || format!("{l}: Hausdorff check refused"));
            if let (Ok(hc), Ok(hd)) = (hc, hd) {
                t.check(!hd || hc, || format!("{l}: {}-Hausdorff but not {}-Hausdorff", d.name(), c.name()));
            }
        }
    })
}

fn contravariance(ctx: &Context) -> Tally {
    let (p, a) = (TestClass::p(), TestClass::a());
    let mut t = Tally::default();
    t.check(generated::is_c_generated(&FinSpace::indiscrete(2), &a), || {
        "the indiscrete pair is not A-generated".into()
    });
    t.merge(over(&ctx.spaces, |(l, x), t| match (generated::is_c_hausdorff(x, &a), generated::is_c_hausdorff(x, &p)) {
        (Ok(ha), Ok(hp)) => t.check(!ha || hp, || format!("{l}: A-Hausdorff but not P-Hausdorff")),
        _ => t.check(false, || format!("{l}: Hausdorff check refused")),
    }))
}

fn characterizations(ctx: &Context) -> Tally {
    let (p, a, s) = (TestClass::p(), TestClass::a(), TestClass::sfin());
    over(&ctx.spaces, |(l, x), t| {
        let haus = |c: &TestClass| generated::is_c_hausdorff(x, c).ok();
        let rows = [
            ("P-Hausdorff = T0", haus(&p), Some(axioms::is_t0(x))),
            ("A-Hausdorff = T1", haus(&a), Some(axioms::is_t1(x))),
            ("Sfin-Hausdorff = US", haus(&s), Some(convergence::is_us(x))),
            ("Sfin-Hausdorff = UR", haus(&s), Some(convergence::is_ur(x))),
            ("Sfin-Hausdorff = UCR", haus(&s), Some(convergence::is_ucr(x))),
            ("P-generated = partition", Some(generated::is_c_generated(x, &p)), Some(axioms::is_partition_topology(x))),
            ("A-generated = Alexandrov", Some(generated::is_c_generated(x, &a)), Some(axioms::is_alexandrov(x))),
            ("A-generated", Some(generated::is_c_generated(x, &a)), Some(true)),
            (
                "Sfin-generated = sequential",
                Some(generated::is_c_generated(x, &s)),
                Some(convergence::is_sequential(x)),
            ),
            ("Sfin-generated", Some(generated::is_c_generated(x, &s)), Some(true)),
        ];
        for (name, lhs, rhs) in rows {
            t.check(lhs.is_some() && lhs == rhs, || format!("{l}: {name} fails ({lhs:?} vs {rhs:?})"));
        }
    })
}

fn quotient_coproduct_stability(ctx: &Context) -> Tally {
    let p = TestClass::p();
    let generated_spaces: Vec<(String, FinSpace)> =
        ctx.upto(ctx.max_points.min(3)).iter().filter(|(_, x)| generated::is_c_generated(x, &p)).cloned().collect();
    over(&generated_spaces, |(l, x), t| {
        for blocks in partitions(x.n()) {
            let q = x.quotient(&blocks).expect("quotient");
            t.check(generated::is_c_generated(&q.space, &p), || format!("{l}: quotient not P-generated"));
        }
        for (m, y) in &generated_spaces {
            let c = x.coproduct(y).expect("small coproduct");
            t.check(generated::is_c_generated(&c.space, &p), || format!("{l} + {m}: not P-generated"));
        }
    })
}

fn derive_idempotent_monotone(ctx: &Context) -> Tally {
    let mut t = Tally::default();
    let closed = match derive(&ctx.kb) {
        Ok(c) => c,
        Err(e) => {
            t.check(false, || format!("derivation failed: {e}"));
            return t;
        }
    };
    let again = derive(&closed.to_knowledge_base());
    t.check(
        again.as_ref().is_ok_and(|a| {
            a.records().iter().zip(closed.records()).all(|(x, y)| {
                x.traits
                    .iter()
                    .map(|v| v.as_ref().map(|d| d.value))
                    .eq(y.traits.iter().map(|v| v.as_ref().map(|d| d.value)))
            })
        }),
        || "derivation is not idempotent".into(),
    );
    for (rec, full) in ctx.kb.spaces().iter().zip(closed.records()) {
        for drop in 0..rec.traits.len() {
            let mut fewer = rec.clone();
            fewer.traits.remove(drop);
            let Ok(d) = crate::deduction::derive_record(&ctx.kb, &fewer) else {
                t.check(false, || format!("{}: dropping a trait caused a contradiction", rec.name));
                continue;
            };
            let within = d
                .traits
                .iter()
                .zip(&full.traits)
                .all(|(a, b)| a.is_none() || a.as_ref().map(|x| x.value) == b.as_ref().map(|x| x.value));
            t.check(within, || format!("{}: adding {} removed a derived fact", rec.name, rec.traits[drop].prop));
        }
    }
    t
}

fn status_reflexive(ctx: &Context) -> Tally {
    let mut t = Tally::default();
    match derive(&ctx.kb) {
        Ok(closed) => {
            for p in ctx.kb.properties() {
                t.check(status(&closed, &p.id, &p.id) == Ok(Status::Implies(vec![])), || {
                    format!("{} does not trivially imply itself", p.id)
                });
            }
        }
        Err(e) => t.check(false, || format!("derivation failed: {e}")),
    }
    t
}

fn witness_chains_grounded(ctx: &Context) -> Tally {
    let mut t = Tally::default();
    let closed = match derive(&ctx.kb) {
        Ok(c) => c,
        Err(e) => {
            t.check(false, || format!("derivation failed: {e}"));
            return t;
        }
    };
    for p in ctx.kb.properties() {
        for q in ctx.kb.properties() {
            if let Ok(Status::NotImplies { witness, p_chain, q_chain }) = status(&closed, &p.id, &q.id) {
                let grounded = |c: &[String]| c.first().is_some_and(|l| l.contains("(asserted:"));
                t.check(grounded(&p_chain) && grounded(&q_chain), || {
                    format!("{} vs {}: chains for {witness} are not grounded", p.id, q.id)
                });
            }
        }
    }
    t
}

fn diagram_complete(ctx: &Context) -> Tally {
    let mut t = Tally::default();
    match derive(&ctx.kb) {
        Ok(closed) => {
            let props: Vec<String> = DIAGRAM_PROPERTIES.iter().map(|s| s.to_string()).collect();
            match completeness_report(&closed, &props) {
                Ok(unknown) => t.bulk(props.len() * (props.len() - 1), unknown.is_empty(), || {
                    format!("unresolved pairs: {unknown:?}")
                }),
                Err(e) => t.check(false, || e.to_string()),
            }
        }
        Err(e) => t.check(false, || format!("derivation failed: {e}")),
    }
    t
}

fn census_consistency(ctx: &Context) -> Tally {
    let mut t = Tally::default();
    match check_census_consistency(&ctx.kb, ctx.max_points) {
        Ok(report) => t.bulk(report.spaces_checked, report.contradictions.is_empty(), || {
            let (l, e) = &report.contradictions[0];
            format!("{} contradictions, first in {l}: {e}", report.contradictions.len())
        }),
        Err(e) => t.check(false, || e.to_string()),
    }
    t
}
