//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so every verdict is printed even when an earlier one fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use topoctl::axioms;
use topoctl::census::enumerate_topologies_bounded;
use topoctl::convergence::{self, limits, ClosureMode};
use topoctl::deduction::{
    check_census_consistency, completeness_report, derive, export_dot, status, KnowledgeBase, Status,
    DIAGRAM_PROPERTIES, GRID_PROPERTIES,
};
use topoctl::generated::{coreflection, is_c_generated, is_c_hausdorff};
use topoctl::maps::{enumerate_continuous_maps, is_continuous};
use topoctl::{CofinalProfile, FinSpace, PointSet, TestClass};

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn census(max_n: usize) -> Vec<FinSpace> {
    (0..=max_n).flat_map(|n| enumerate_topologies_bounded(n, 4).expect("within bound")).collect()
}

fn first_failure<T>(items: &[T], mut ok: impl FnMut(&T) -> Result<(), String>) -> Result<usize, String> {
    for it in items {
        ok(it)?;
    }
    Ok(items.len())
}

fn census_counts() -> Verdict {
    let start = Instant::now();
    let counts: Vec<usize> = (0..=4).map(|n| enumerate_topologies_bounded(n, 4).unwrap().len()).collect();
    let elapsed = start.elapsed();
    if counts != [1, 1, 4, 29, 355] {
        return Err(format!("counts {counts:?}"));
    }
    for n in 0..=3 {
        let ours: BTreeSet<Vec<u64>> = enumerate_topologies_bounded(n, 4)
            .unwrap()
            .iter()
            .map(|s| s.opens().iter().map(|u| u.bits()).collect())
            .collect();
        if ours != common::brute_force_topologies(n) {
            return Err(format!("n={n} differs from the subset-family oracle"));
        }
    }
    if elapsed > Duration::from_secs(60) {
        return Err(format!("census took {elapsed:?}"));
    }
    Ok(format!("1, 1, 4, 29, 355; n<=3 match the oracle; {} ms", elapsed.as_millis()))
}

fn characterizations(spaces: &[FinSpace]) -> Verdict {
    let (p, a, s) = (TestClass::p(), TestClass::a(), TestClass::sfin());
    let n = first_failure(spaces, |x| {
        let rows = [
            ("P-Hausdorff <=> T0", is_c_hausdorff(x, &p).unwrap(), axioms::is_t0(x)),
            ("A-Hausdorff <=> T1", is_c_hausdorff(x, &a).unwrap(), axioms::is_t1(x)),
            ("Sfin-Hausdorff <=> US", is_c_hausdorff(x, &s).unwrap(), convergence::is_us(x)),
            ("Sfin-Hausdorff <=> UR", is_c_hausdorff(x, &s).unwrap(), convergence::is_ur(x)),
            ("P-generated <=> partition", is_c_generated(x, &p), axioms::is_partition_topology(x)),
            ("A-generated <=> Alexandrov", is_c_generated(x, &a), axioms::is_alexandrov(x)),
            ("A-generated", is_c_generated(x, &a), true),
        ];
        match rows.iter().find(|(_, l, r)| l != r) {
            Some((name, ..)) => Err(format!("{name} fails on {:?}", x.opens())),
            None => Ok(()),
        }
    })?;
    Ok(format!("{n} spaces, 7 equivalences each"))
}

fn coreflection_laws(spaces: &[FinSpace]) -> Verdict {
    let classes = [TestClass::p(), TestClass::a(), TestClass::sfin()];
    first_failure(spaces, |x| {
        for c in &classes {
            let xc = coreflection(x, c);
            if !x.opens().iter().all(|u| xc.is_open(*u)) {
                return Err(format!("{} coreflection not finer on {:?}", c.name(), x.opens()));
            }
            if coreflection(&xc, c) != xc {
                return Err(format!("{} coreflection not idempotent on {:?}", c.name(), x.opens()));
            }
        }
        Ok(())
    })?;
    let small: Vec<FinSpace> = spaces.iter().filter(|s| s.n() <= 2).cloned().collect();
    let mut maps = 0;
    for x in &small {
        for y in &small {
            for f in enumerate_continuous_maps(x, y) {
                for c in &classes {
                    maps += 1;
                    if !is_continuous(&coreflection(x, c), &coreflection(y, c), f.map()) {
                        return Err(format!("{} functoriality fails for {:?}", c.name(), f.map()));
                    }
                }
            }
        }
    }
    let both = TestClass::explicit("PA", vec![FinSpace::indiscrete(2), FinSpace::sierpinski()]).unwrap();
    let pairs = [(TestClass::p(), &both), (TestClass::a(), &both)];
    first_failure(spaces, |x| {
        for (c, d) in &pairs {
            let (xc, xd) = (coreflection(x, c), coreflection(x, d));
            if !xd.opens().iter().all(|u| xc.is_open(*u)) {
                return Err(format!("monotonicity {} within {} fails", c.name(), d.name()));
            }
        }
        Ok(())
    })?;
    Ok(format!("{} spaces x 3 classes; {maps} functoriality checks", spaces.len()))
}

fn contravariance(spaces: &[FinSpace]) -> Verdict {
    let (p, a) = (TestClass::p(), TestClass::a());
    if !is_c_generated(&FinSpace::indiscrete(2), &a) {
        return Err("the indiscrete pair is not A-generated".into());
    }
    let n = first_failure(spaces, |x| {
        if is_c_hausdorff(x, &a).unwrap() && !is_c_hausdorff(x, &p).unwrap() {
            Err(format!("A-Hausdorff but not P-Hausdorff: {:?}", x.opens()))
        } else {
            Ok(())
        }
    })?;
    Ok(format!("{n} spaces, zero violations"))
}

fn finite_collapse(spaces: &[FinSpace]) -> Verdict {
    let n = first_failure(spaces, |x| {
        let d = axioms::is_discrete(x);
        let values = [
            ("US", convergence::is_us(x)),
            ("UR", convergence::is_ur(x)),
            ("UCR", convergence::is_ucr(x)),
            ("KC", axioms::is_kc(x)),
            ("T1", axioms::is_t1(x)),
            ("T2", axioms::is_t2(x)),
            ("lH", axioms::is_lh(x)),
            ("sH", axioms::is_sh(x)),
            ("RC", axioms::is_rc(x).unwrap()),
            ("sequentially discrete", convergence::is_sequentially_discrete(x)),
        ];
        match values.iter().find(|(_, v)| *v != d) {
            Some((name, _)) => Err(format!("{name} differs from discreteness on {:?}", x.opens())),
            None => Ok(()),
        }
    })?;
    Ok(format!("{n} spaces, 10 predicates agree with discreteness"))
}

fn diagram_soundness() -> Verdict {
    let report = check_census_consistency(&KnowledgeBase::shipped(), 4).map_err(|e| e.to_string())?;
    if let Some((space, e)) = report.contradictions.first() {
        return Err(format!("{} contradictions, first {space}: {e}", report.contradictions.len()));
    }
    Ok(format!(
        "{} spaces, {} checked properties, zero contradictions",
        report.spaces_checked,
        report.checked_properties.len()
    ))
}

fn kb_reproduction() -> Verdict {
    let kb = KnowledgeBase::shipped();
    let closed = derive(&kb).map_err(|e| e.to_string())?;
    match status(&closed, "T2", "T1") {
        Ok(Status::Implies(_)) => {}
        other => return Err(format!("T2 => T1: {other:?}")),
    }
    let expected = [
        ("US", "UCR", "S37"),
        ("UCR", "UOK", "beta-omega-doubled"),
        ("UR", "k2H", "URnotk2H"),
        ("UR", "RC", "URnotk2H"),
        ("k1H", "UR", "S17"),
        ("UR", "sH", "S145"),
        ("UR", "lH", "S145"),
        ("RC", "US", "S192"),
    ];
    for (p, q, w) in expected {
        match status(&closed, p, q) {
            Ok(Status::NotImplies { witness, .. }) if witness == w => {}
            other => return Err(format!("{p} vs {q}: expected witness {w}, got {other:?}")),
        }
    }
    let diagram: Vec<String> = DIAGRAM_PROPERTIES.iter().map(|s| s.to_string()).collect();
    let unknown = completeness_report(&closed, &diagram).map_err(|e| e.to_string())?;
    if !unknown.is_empty() {
        return Err(format!("unknown pairs {unknown:?}"));
    }
    let paper = derive(&kb.paper_only()).map_err(|e| e.to_string())?;
    let paper_unknown = completeness_report(&paper, &diagram).map_err(|e| e.to_string())?;
    Ok(format!(
        "9 statuses reproduced; diagram complete; {} unknown pairs with paper records only",
        paper_unknown.len()
    ))
}

fn count_dot(dot: &str) -> (usize, usize) {
    let edges = dot.lines().filter(|l| l.contains(" -> ")).count();
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    (nodes, edges)
}

fn dot_export() -> Verdict {
    let closed = derive(&KnowledgeBase::shipped()).map_err(|e| e.to_string())?;
    let diagram: Vec<String> = DIAGRAM_PROPERTIES.iter().map(|s| s.to_string()).collect();
    let grid: Vec<String> = GRID_PROPERTIES.iter().map(|s| s.to_string()).collect();
    let d = count_dot(&export_dot(&closed, &diagram).map_err(|e| e.to_string())?);
    let g = count_dot(&export_dot(&closed, &grid).map_err(|e| e.to_string())?);
    if d != (13, 16) || g != (6, 7) {
        return Err(format!("diagram {d:?}, grid {g:?}"));
    }
    Ok("diagram 13 nodes / 16 edges; grid 6 nodes / 7 edges".into())
}

fn convergence_oracle(spaces: &[FinSpace]) -> Verdict {
    let mut sequences = 0;
    for x in spaces.iter().filter(|s| s.n() <= 3) {
        let opens: Vec<u64> = x.opens().iter().map(|u| u.bits()).collect();
        for s in x.points().subsets().filter(|s| !s.is_empty()) {
            let ours = limits(x, CofinalProfile::new(s).unwrap()).unwrap().bits();
            for seq in common::sequences_with_values(x.n(), s.bits()) {
                sequences += 1;
                let literal = seq.limits(x.n(), &opens);
                if literal != ours {
                    return Err(format!(
                        "{:?}, values {s}: profile gives {}, sequence gives {}",
                        x.opens(),
                        PointSet::from_bits(ours),
                        PointSet::from_bits(literal)
                    ));
                }
            }
        }
        if !convergence::is_sequential_style(x, ClosureMode::Sequential) {
            return Err(format!("{:?} is not sequential", x.opens()));
        }
    }
    Ok(format!("{sequences} literal sequences agree"))
}

fn main() -> ExitCode {
    let spaces = census(4);
    let criteria: Vec<Criterion> = vec![
        ("census counts", Box::new(census_counts)),
        ("C-Hausdorff and C-generated characterizations", Box::new(|| characterizations(&spaces))),
        ("coreflection laws", Box::new(|| coreflection_laws(&spaces))),
        ("contravariance for P within A", Box::new(|| contravariance(&spaces))),
        ("finite collapse", Box::new(|| finite_collapse(&spaces))),
        ("diagram soundness on the census", Box::new(diagram_soundness)),
        ("knowledge base reproduction", Box::new(kb_reproduction)),
        ("DOT export", Box::new(dot_export)),
        ("convergence oracle", Box::new(|| convergence_oracle(&spaces))),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{}/{} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
