//! Forward chaining over space records.

use super::{KbError, KnowledgeBase, Source, SpaceRecord, TraitAssertion};

/// Why a trait holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Asserted {
        reference: String,
    },
    /// All hypotheses of the implication hold.
    Forward {
        implication: usize,
    },
    /// The conclusion fails and every other hypothesis holds.
    Contrapositive {
        implication: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedTrait {
    pub value: bool,
    pub why: Justification,
}

/// A space record closed under the implications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedRecord {
    pub name: String,
    pub source: Source,
    /// Indexed like the knowledge base's properties.
    pub traits: Vec<Option<DerivedTrait>>,
}

impl DerivedRecord {
    pub fn value(&self, prop: usize) -> Option<bool> {
        self.traits[prop].as_ref().map(|t| t.value)
    }
}

/// A knowledge base whose space records have been closed.
#[derive(Debug, Clone)]
pub struct ClosedKb {
    kb: KnowledgeBase,
    records: Vec<DerivedRecord>,
}

fn step_source(kb: &KnowledgeBase, rec: &DerivedRecord, prop: usize) -> String {
    let id = &kb.properties[prop].id;
    match &rec.traits[prop] {
        None => format!("{}: {id} unknown", rec.name),
        Some(t) => {
            let v = if t.value { "true" } else { "false" };
            match &t.why {
                Justification::Asserted { reference } => {
                    format!("{}: {id} = {v} (asserted: {reference})", rec.name)
                }
                Justification::Forward { implication } | Justification::Contrapositive { implication } => {
                    let imp = &kb.implications[*implication];
                    let how =
                        if matches!(t.why, Justification::Forward { .. }) { "by" } else { "by contrapositive of" };
                    format!(
                        "{}: {id} = {v} {how} {} => {} ({})",
                        rec.name,
                        imp.hypotheses.join(" & "),
                        imp.conclusion,
                        imp.reference
                    )
                }
            }
        }
    }
}

fn premises(kb: &KnowledgeBase, why: &Justification, prop: usize) -> Vec<usize> {
    match why {
        Justification::Asserted { .. } => Vec::new(),
        Justification::Forward { implication } => {
            kb.implications[*implication].hypotheses.iter().map(|h| kb.index[h]).collect()
        }
        Justification::Contrapositive { implication } => {
            let imp = &kb.implications[*implication];
            imp.hypotheses
                .iter()
                .map(|h| kb.index[h])
                .filter(|&h| h != prop)
                .chain([kb.index[&imp.conclusion]])
                .collect()
        }
    }
}

/// Proof lines for `prop` in `rec`, premises first, ending with `prop`.
pub(crate) fn proof_chain(kb: &KnowledgeBase, rec: &DerivedRecord, prop: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut visited = vec![false; rec.traits.len()];
    walk(kb, rec, prop, &mut visited, &mut out);
    out
}

fn walk(kb: &KnowledgeBase, rec: &DerivedRecord, prop: usize, visited: &mut [bool], out: &mut Vec<String>) {
    if visited[prop] {
        return;
    }
    visited[prop] = true;
    if let Some(t) = &rec.traits[prop] {
        for p in premises(kb, &t.why, prop) {
            walk(kb, rec, p, visited, out);
        }
    }
    out.push(step_source(kb, rec, prop));
}

/// Closes one record. Fails on the first contradiction, reporting the proof
/// chains of both values.
pub fn derive_record(kb: &KnowledgeBase, record: &SpaceRecord) -> Result<DerivedRecord, KbError> {
    let mut rec =
        DerivedRecord { name: record.name.clone(), source: record.source, traits: vec![None; kb.properties.len()] };
    for TraitAssertion { prop, value, reference } in &record.traits {
        let p = kb.lookup(prop)?;
        rec.traits[p] =
            Some(DerivedTrait { value: *value, why: Justification::Asserted { reference: reference.clone() } });
    }
    let rules: Vec<(Vec<usize>, usize)> = kb
        .implications
        .iter()
        .map(|imp| (imp.hypotheses.iter().map(|h| kb.index[h]).collect(), kb.index[&imp.conclusion]))
        .collect();

    loop {
        let mut changed = false;
        for (i, (hyps, concl)) in rules.iter().enumerate() {
            let values: Vec<Option<bool>> = hyps.iter().map(|&h| rec.value(h)).collect();
            let concl_value = rec.value(*concl);
            if values.iter().all(|v| *v == Some(true)) {
                match concl_value {
                    None => {
                        rec.traits[*concl] =
                            Some(DerivedTrait { value: true, why: Justification::Forward { implication: i } });
                        changed = true;
                    }
                    Some(true) => {}
                    Some(false) => {
                        let false_chain = proof_chain(kb, &rec, *concl);
                        let mut probe = rec.clone();
                        probe.traits[*concl] =
                            Some(DerivedTrait { value: true, why: Justification::Forward { implication: i } });
                        let true_chain = proof_chain(kb, &probe, *concl);
                        return Err(KbError::Contradiction {
                            space: rec.name.clone(),
                            property: kb.properties[*concl].id.clone(),
                            true_chain,
                            false_chain,
                        });
                    }
                }
            } else if concl_value == Some(false) {
                let unknown: Vec<usize> = (0..hyps.len()).filter(|&k| values[k].is_none()).collect();
                let others_true = (0..hyps.len()).filter(|k| !unknown.contains(k)).all(|k| values[k] == Some(true));
                if unknown.len() == 1 && others_true {
                    rec.traits[hyps[unknown[0]]] =
                        Some(DerivedTrait { value: false, why: Justification::Contrapositive { implication: i } });
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(rec);
        }
    }
}

/// Closes every record of `kb`.
pub fn derive(kb: &KnowledgeBase) -> Result<ClosedKb, KbError> {
    let records = kb.spaces.iter().map(|r| derive_record(kb, r)).collect::<Result<Vec<_>, _>>()?;
    Ok(ClosedKb { kb: kb.clone(), records })
}

impl ClosedKb {
    pub fn kb(&self) -> &KnowledgeBase {
        &self.kb
    }

    pub fn records(&self) -> &[DerivedRecord] {
        &self.records
    }

    pub fn record(&self, name: &str) -> Option<&DerivedRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// Value of `prop` in the named record.
    pub fn trait_value(&self, space: &str, prop: &str) -> Option<bool> {
        let p = self.kb.index.get(prop)?;
        self.record(space)?.value(*p)
    }

    /// Proof lines for a trait of a record, ending with the trait itself.
    pub fn chain(&self, space: &str, prop: &str) -> Option<Vec<String>> {
        let p = *self.kb.index.get(prop)?;
        let rec = self.record(space)?;
        rec.traits[p].as_ref()?;
        Some(proof_chain(&self.kb, rec, p))
    }

    /// Every known trait written back as an assertion.
    pub fn to_knowledge_base(&self) -> KnowledgeBase {
        let spaces = self
            .kb
            .spaces
            .iter()
            .zip(&self.records)
            .map(|(orig, rec)| SpaceRecord {
                traits: rec
                    .traits
                    .iter()
                    .enumerate()
                    .filter_map(|(p, t)| {
                        t.as_ref().map(|t| TraitAssertion {
                            prop: self.kb.properties[p].id.clone(),
                            value: t.value,
                            reference: proof_chain(&self.kb, rec, p).join("; "),
                        })
                    })
                    .collect(),
                ..orig.clone()
            })
            .collect();
        KnowledgeBase { spaces, ..self.kb.clone() }
    }
}
