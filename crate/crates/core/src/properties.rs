//! Named property checkers, keyed by the ids the knowledge base uses.
//!
//! Rows whose id is not a knowledge-base property (the class-generated and
//! class-Hausdorff rows) only show up in `check` reports.

use crate::axioms;
use crate::convergence::{self, ApproachMode, ClosureMode};
use crate::generated::{self, KVariant, TestClass};
use crate::space::FinSpace;

pub struct Checker {
    pub id: &'static str,
    pub label: &'static str,
    /// `None` when the check refuses the space (size bounds).
    pub eval: fn(&FinSpace) -> Option<bool>,
}

macro_rules! total {
    ($f:expr) => {
        |s: &FinSpace| Some($f(s))
    };
}

pub static CHECKERS: &[Checker] = &[
    Checker { id: "T0", label: "T0 (Kolmogorov)", eval: total!(axioms::is_t0) },
    Checker { id: "T1", label: "T1", eval: total!(axioms::is_t1) },
    Checker { id: "T2", label: "T2 (Hausdorff)", eval: total!(axioms::is_t2) },
    Checker { id: "US", label: "unique sequential limits", eval: total!(convergence::is_us) },
    Checker { id: "UR", label: "unique radial limits", eval: total!(convergence::is_ur) },
    Checker { id: "UCR", label: "unique C-radial limits", eval: total!(convergence::is_ucr) },
    Checker { id: "KC", label: "compact sets closed", eval: total!(axioms::is_kc) },
    Checker { id: "lH", label: "locally Hausdorff", eval: total!(axioms::is_lh) },
    Checker { id: "sH", label: "semi-Hausdorff", eval: total!(axioms::is_sh) },
    Checker { id: "RC", label: "retracts closed", eval: |s| axioms::is_rc(s).ok() },
    Checker { id: "discrete", label: "discrete", eval: total!(axioms::is_discrete) },
    Checker { id: "seq-discrete", label: "sequentially discrete", eval: total!(convergence::is_sequentially_discrete) },
    Checker { id: "compact", label: "compact", eval: |s| Some(axioms::is_compact(s, s.points())) },
    Checker { id: "anticompact", label: "anticompact", eval: total!(axioms::is_anticompact) },
    Checker { id: "hyperconnected", label: "hyperconnected", eval: total!(axioms::is_hyperconnected) },
    Checker { id: "partition", label: "topologically partitioned", eval: total!(axioms::is_partition_topology) },
    Checker { id: "Alexandrov", label: "Alexandrov", eval: total!(axioms::is_alexandrov) },
    Checker {
        id: "FU",
        label: "Frechet-Urysohn",
        eval: |s| Some(convergence::is_radial_style(s, ApproachMode::FrechetUrysohn)),
    },
    Checker {
        id: "C-radial",
        label: "C-radial",
        eval: |s| Some(convergence::is_radial_style(s, ApproachMode::CRadial)),
    },
    Checker { id: "radial", label: "radial", eval: |s| Some(convergence::is_radial_style(s, ApproachMode::Radial)) },
    Checker {
        id: "sequential",
        label: "sequential",
        eval: |s| Some(convergence::is_sequential_style(s, ClosureMode::Sequential)),
    },
    Checker {
        id: "pseudo-C-radial",
        label: "pseudo-C-radial",
        eval: |s| Some(convergence::is_sequential_style(s, ClosureMode::PseudoCRadial)),
    },
    Checker {
        id: "pseudoradial",
        label: "pseudoradial",
        eval: |s| Some(convergence::is_sequential_style(s, ClosureMode::Pseudoradial)),
    },
    Checker {
        id: "k1-space",
        label: "generated by compact spaces",
        eval: |s| Some(generated::is_k_generated(s, KVariant::K1)),
    },
    Checker {
        id: "k2-space",
        label: "generated by compact Hausdorff spaces",
        eval: |s| Some(generated::is_k_generated(s, KVariant::K2)),
    },
    Checker { id: "H-generated", label: "generated by Hausdorff spaces", eval: total!(generated::is_h_generated) },
    Checker {
        id: "P-generated",
        label: "generated by the indiscrete pair",
        eval: |s| Some(generated::is_c_generated(s, &TestClass::p())),
    },
    Checker {
        id: "A-generated",
        label: "generated by the Sierpinski space",
        eval: |s| Some(generated::is_c_generated(s, &TestClass::a())),
    },
    Checker {
        id: "Sfin-generated",
        label: "generated by convergent sequences",
        eval: |s| Some(generated::is_c_generated(s, &TestClass::sfin())),
    },
    Checker {
        id: "P-Hausdorff",
        label: "diagonal closed for the indiscrete pair",
        eval: |s| generated::is_c_hausdorff(s, &TestClass::p()).ok(),
    },
    Checker {
        id: "A-Hausdorff",
        label: "diagonal closed for the Sierpinski space",
        eval: |s| generated::is_c_hausdorff(s, &TestClass::a()).ok(),
    },
    Checker {
        id: "Sfin-Hausdorff",
        label: "diagonal closed for convergent sequences",
        eval: |s| generated::is_c_hausdorff(s, &TestClass::sfin()).ok(),
    },
];

pub fn checker(id: &str) -> Option<&'static Checker> {
    CHECKERS.iter().find(|c| c.id == id)
}

pub fn evaluate(space: &FinSpace, id: &str) -> Option<bool> {
    checker(id).and_then(|c| (c.eval)(space))
}

/// Close matches for a mistyped checker id.
pub fn suggestions(id: &str) -> Vec<&'static str> {
    let lower = id.to_lowercase();
    let mut scored: Vec<(usize, &'static str)> = CHECKERS
        .iter()
        .map(|c| (strsim::levenshtein(&lower, &c.id.to_lowercase()), c.id))
        .filter(|&(d, _)| d <= 2)
        .collect();
    scored.sort();
    scored.into_iter().take(3).map(|(_, id)| id).collect()
}
