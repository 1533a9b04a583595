use rayon::prelude::*;

use super::derive::{derive_record, proof_chain, ClosedKb};
use super::{KbError, KnowledgeBase, Source, SpaceRecord, TraitAssertion};
use crate::census;
use crate::error::TopologyError;
use crate::properties;

/// Answer to "does P imply Q?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    /// Implication references, in an order where every step's hypotheses
    /// are already established. Empty when `P == Q`.
    Implies(Vec<String>),
    /// A recorded space with `P` and without `Q`, and the proof chains of
    /// both traits.
    NotImplies {
        witness: String,
        p_chain: Vec<String>,
        q_chain: Vec<String>,
    },
    Unknown,
}

impl ClosedKb {
    /// Properties reachable from `from` through implications whose
    /// hypotheses are all reachable. For each reached property, the
    /// implication that reached it.
    pub(crate) fn reach(&self, from: usize) -> Vec<Option<Option<usize>>> {
        let kb = self.kb();
        let mut via: Vec<Option<Option<usize>>> = vec![None; kb.properties.len()];
        via[from] = Some(None);
        loop {
            let mut next = via.clone();
            for (i, imp) in kb.implications.iter().enumerate() {
                let c = kb.index[&imp.conclusion];
                if next[c].is_none() && imp.hypotheses.iter().all(|h| via[kb.index[h]].is_some()) {
                    next[c] = Some(Some(i));
                }
            }
            if next == via {
                return via;
            }
            via = next;
        }
    }

    fn implication_chain(&self, via: &[Option<Option<usize>>], q: usize) -> Vec<String> {
        let kb = self.kb();
        let mut used = Vec::new();
        let mut done = vec![false; via.len()];
        fn visit(
            kb: &KnowledgeBase,
            via: &[Option<Option<usize>>],
            p: usize,
            done: &mut [bool],
            used: &mut Vec<usize>,
        ) {
            if done[p] {
                return;
            }
            done[p] = true;
            if let Some(Some(i)) = via[p] {
                for h in &kb.implications[i].hypotheses {
                    visit(kb, via, kb.index[h], done, used);
                }
                used.push(i);
            }
        }
        visit(kb, via, q, &mut done, &mut used);
        used.into_iter()
            .map(|i| {
                let imp = &kb.implications[i];
                format!("{} => {} ({})", imp.hypotheses.join(" & "), imp.conclusion, imp.reference)
            })
            .collect()
    }
}

/// Whether `p` implies `q` in the closed knowledge base. Records are searched
/// for a witness with `paper` records before `external` ones, each group in file order.
pub fn status(closed: &ClosedKb, p: &str, q: &str) -> Result<Status, KbError> {
    let kb = closed.kb();
    let pi = kb.lookup(p)?;
    let qi = kb.lookup(q)?;
    let via = closed.reach(pi);
    let witness = [Source::Paper, Source::External]
        .iter()
        .flat_map(|src| closed.records().iter().filter(move |r| r.source == *src))
        .find(|r| r.value(pi) == Some(true) && r.value(qi) == Some(false));

    match (via[qi].is_some(), witness) {
        (true, Some(w)) => {
            let mut true_chain = closed.implication_chain(&via, qi);
            true_chain.insert(0, format!("{}: {p} = true", w.name));
            Err(KbError::Contradiction {
                space: w.name.clone(),
                property: q.to_string(),
                true_chain,
                false_chain: proof_chain(kb, w, qi),
            })
        }
        (true, None) => Ok(Status::Implies(closed.implication_chain(&via, qi))),
        (false, Some(w)) => Ok(Status::NotImplies {
            witness: w.name.clone(),
            p_chain: proof_chain(kb, w, pi),
            q_chain: proof_chain(kb, w, qi),
        }),
        (false, None) => Ok(Status::Unknown),
    }
}

/// Ordered pairs of distinct properties from `props` whose status is
/// unknown.
pub fn completeness_report(closed: &ClosedKb, props: &[String]) -> Result<Vec<(String, String)>, KbError> {
    let mut out = Vec::new();
    for p in props {
        for q in props {
            if p != q && status(closed, p, q)? == Status::Unknown {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub spaces_checked: usize,
    /// Properties that received computed traits.
    pub checked_properties: Vec<String>,
    /// Census label and the contradiction it produced.
    pub contradictions: Vec<(String, KbError)>,
}

/// Adds every labeled census space on up to `max_n` points to the knowledge
/// base, with its computed traits, and reports any contradiction.
pub fn check_census_consistency(kb: &KnowledgeBase, max_n: usize) -> Result<ConsistencyReport, TopologyError> {
    let checked: Vec<(String, &'static properties::Checker)> =
        kb.properties.iter().filter_map(|p| properties::checker(&p.id).map(|c| (p.id.clone(), c))).collect();
    let spaces = census::census(max_n)?;
    let contradictions: Vec<(String, KbError)> = spaces
        .par_iter()
        .enumerate()
        .filter_map(|(i, space)| {
            let name = format!("census#{i} (n={})", space.n());
            let traits = checked
                .iter()
                .filter_map(|(id, c)| {
                    (c.eval)(space).map(|value| TraitAssertion {
                        prop: id.clone(),
                        value,
                        reference: format!("computed: {}", c.label),
                    })
                })
                .collect();
            let record =
                SpaceRecord { name: name.clone(), pibase: None, source: Source::External, description: None, traits };
            derive_record(kb, &record).err().map(|e| (name, e))
        })
        .collect();
    Ok(ConsistencyReport {
        spaces_checked: spaces.len(),
        checked_properties: checked.into_iter().map(|(id, _)| id).collect(),
        contradictions,
    })
}
