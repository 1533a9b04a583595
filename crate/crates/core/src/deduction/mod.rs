//! A knowledge base of topological properties, implications between them,
//! and space records asserting which properties particular spaces have.
//!
//! [`derive`] closes every space record under the implications (forward, and
//! contrapositively backward); [`status`] answers whether one property
//! implies another or is refuted by a recorded space; [`export_dot`] draws the
//! implication diagram.

mod derive;
mod dot;
mod query;

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use derive::{derive, derive_record, ClosedKb, DerivedRecord, DerivedTrait, Justification};
pub use dot::export_dot;
pub use query::{check_census_consistency, completeness_report, status, ConsistencyReport, Status};

/// The knowledge base shipped with the crate.
pub const PAPER_KB_JSON: &str = include_str!("../../data/paper_kb.json");

/// The thirteen properties of the separation diagram between T2 and T1.
pub const DIAGRAM_PROPERTIES: [&str; 13] =
    ["T2", "lH", "sH", "RC", "UR", "k1H", "KC", "wH", "k2H", "UOK", "UCR", "US", "T1"];

/// Sequence-based closure properties.
pub const GRID_PROPERTIES: [&str; 6] = ["FU", "sequential", "C-radial", "pseudo-C-radial", "radial", "pseudoradial"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KbError {
    #[error("could not read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed knowledge base: {0}")]
    Json(String),
    #[error("duplicate property id {0}")]
    DuplicateProperty(String),
    #[error("unknown property {id}{}", suggest(.suggestions))]
    UnknownProperty { id: String, suggestions: Vec<String> },
    #[error("implication {index} is malformed: {reason}")]
    BadImplication { index: usize, reason: String },
    #[error("space {space} asserts {property} both true and false")]
    ConflictingAssertion { space: String, property: String },
    #[error(
        "contradiction in {space}: {property} is derived both true and false\n  true because:\n{}\n  false because:\n{}",
        indent(.true_chain), indent(.false_chain)
    )]
    Contradiction { space: String, property: String, true_chain: Vec<String>, false_chain: Vec<String> },
}

fn suggest(s: &[String]) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!(" (did you mean {}?)", s.join(", "))
    }
}

fn indent(lines: &[String]) -> String {
    lines.iter().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Property {
    pub id: String,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pibase: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Implication {
    #[serde(rename = "if")]
    pub hypotheses: Vec<String>,
    #[serde(rename = "then")]
    pub conclusion: String,
    #[serde(rename = "ref")]
    pub reference: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Paper,
    External,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraitAssertion {
    pub prop: String,
    pub value: bool,
    #[serde(rename = "ref")]
    pub reference: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceRecord {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pibase: Option<String>,
    pub source: Source,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub traits: Vec<TraitAssertion>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct KbFile {
    properties: Vec<Property>,
    implications: Vec<Implication>,
    spaces: Vec<SpaceRecord>,
}

/// Properties, implications and space records, validated.
#[derive(Debug, Clone, Default)]
pub struct KnowledgeBase {
    properties: Vec<Property>,
    implications: Vec<Implication>,
    spaces: Vec<SpaceRecord>,
    index: HashMap<String, usize>,
}

impl KnowledgeBase {
    pub fn new(
        properties: Vec<Property>,
        implications: Vec<Implication>,
        spaces: Vec<SpaceRecord>,
    ) -> Result<Self, KbError> {
        let mut index = HashMap::new();
        for (i, p) in properties.iter().enumerate() {
            if index.insert(p.id.clone(), i).is_some() {
                return Err(KbError::DuplicateProperty(p.id.clone()));
            }
        }
        let kb = KnowledgeBase { properties, implications: Vec::new(), spaces: Vec::new(), index };
        for (i, imp) in implications.iter().enumerate() {
            if imp.hypotheses.is_empty() {
                return Err(KbError::BadImplication { index: i, reason: "no hypotheses".into() });
            }
            if imp.hypotheses.contains(&imp.conclusion) {
                return Err(KbError::BadImplication {
                    index: i,
                    reason: format!("{} is both hypothesis and conclusion", imp.conclusion),
                });
            }
            for id in imp.hypotheses.iter().chain([&imp.conclusion]) {
                kb.lookup(id)?;
            }
        }
        for rec in &spaces {
            let mut seen: HashMap<&str, bool> = HashMap::new();
            for t in &rec.traits {
                kb.lookup(&t.prop)?;
                if let Some(&v) = seen.get(t.prop.as_str()) {
                    if v != t.value {
                        return Err(KbError::ConflictingAssertion {
                            space: rec.name.clone(),
                            property: t.prop.clone(),
                        });
                    }
                }
                seen.insert(&t.prop, t.value);
            }
        }
        Ok(KnowledgeBase { implications, spaces, ..kb })
    }

    pub fn from_json(text: &str) -> Result<Self, KbError> {
        let file: KbFile = serde_json::from_str(text).map_err(|e| KbError::Json(e.to_string()))?;
        Self::new(file.properties, file.implications, file.spaces)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, KbError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| KbError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::from_json(&text)
    }

    /// The knowledge base shipped in `data/paper_kb.json`.
    pub fn shipped() -> Self {
        Self::from_json(PAPER_KB_JSON).expect("shipped knowledge base is valid")
    }

    pub fn to_json(&self) -> String {
        let file = KbFile {
            properties: self.properties.clone(),
            implications: self.implications.clone(),
            spaces: self.spaces.clone(),
        };
        serde_json::to_string_pretty(&file).expect("knowledge base serializes")
    }

    pub fn properties(&self) -> &[Property] {
        &self.properties
    }

    pub fn implications(&self) -> &[Implication] {
        &self.implications
    }

    pub fn spaces(&self) -> &[SpaceRecord] {
        &self.spaces
    }

    pub fn has_property(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    /// Index of a property id, or an error listing close matches.
    pub fn lookup(&self, id: &str) -> Result<usize, KbError> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| KbError::UnknownProperty { id: id.to_string(), suggestions: self.suggestions(id) })
    }

    fn suggestions(&self, id: &str) -> Vec<String> {
        let lower = id.to_lowercase();
        let mut scored: Vec<(usize, &str)> = self
            .properties
            .iter()
            .map(|p| (strsim::levenshtein(&lower, &p.id.to_lowercase()), p.id.as_str()))
            .filter(|&(d, _)| d <= 2)
            .collect();
        scored.sort();
        scored.into_iter().take(3).map(|(_, s)| s.to_string()).collect()
    }

    /// A copy keeping only records with `source: paper`.
    pub fn paper_only(&self) -> Self {
        KnowledgeBase {
            spaces: self.spaces.iter().filter(|s| s.source == Source::Paper).cloned().collect(),
            ..self.clone()
        }
    }

    /// A copy with one more space record.
    pub fn with_space(&self, record: SpaceRecord) -> Result<Self, KbError> {
        let mut spaces = self.spaces.clone();
        spaces.push(record);
        Self::new(self.properties.clone(), self.implications.clone(), spaces)
    }

    /// Resolves a property-set argument: `diagram`, `grid`, `all`, or a
    /// comma-separated list of ids.
    pub fn property_set(&self, spec: &str) -> Result<Vec<String>, KbError> {
        let ids: Vec<String> = match spec.trim() {
            "diagram" => DIAGRAM_PROPERTIES.iter().map(|s| s.to_string()).collect(),
            "grid" => GRID_PROPERTIES.iter().map(|s| s.to_string()).collect(),
            "all" => self.properties.iter().map(|p| p.id.clone()).collect(),
            "" => Vec::new(),
            list => list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        };
        for id in &ids {
            self.lookup(id)?;
        }
        Ok(ids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prop(id: &str) -> Property {
        Property { id: id.into(), name: id.into(), pibase: None }
    }

    fn imp(hyps: &[&str], then: &str) -> Implication {
        Implication {
            hypotheses: hyps.iter().map(|s| s.to_string()).collect(),
            conclusion: then.into(),
            reference: "test".into(),
        }
    }

    #[test]
    fn shipped_kb_loads() {
        let kb = KnowledgeBase::shipped();
        for id in DIAGRAM_PROPERTIES.iter().chain(GRID_PROPERTIES.iter()) {
            assert!(kb.has_property(id), "{id}");
        }
        let again = KnowledgeBase::from_json(&kb.to_json()).unwrap();
        assert_eq!(again.spaces(), kb.spaces());
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            KnowledgeBase::new(vec![prop("A"), prop("A")], vec![], vec![]).unwrap_err(),
            KbError::DuplicateProperty("A".into())
        );
        assert!(matches!(
            KnowledgeBase::new(vec![prop("A")], vec![imp(&[], "A")], vec![]),
            Err(KbError::BadImplication { .. })
        ));
        assert!(matches!(
            KnowledgeBase::new(vec![prop("A")], vec![imp(&["A"], "A")], vec![]),
            Err(KbError::BadImplication { .. })
        ));
        assert!(matches!(
            KnowledgeBase::new(vec![prop("A")], vec![imp(&["A"], "B")], vec![]),
            Err(KbError::UnknownProperty { .. })
        ));
        let rec = SpaceRecord {
            name: "X".into(),
            pibase: None,
            source: Source::Paper,
            description: None,
            traits: vec![
                TraitAssertion { prop: "A".into(), value: true, reference: "r".into() },
                TraitAssertion { prop: "A".into(), value: false, reference: "r".into() },
            ],
        };
        assert!(matches!(
            KnowledgeBase::new(vec![prop("A")], vec![], vec![rec]),
            Err(KbError::ConflictingAssertion { .. })
        ));
    }

    #[test]
    fn unknown_ids_come_with_suggestions() {
        let kb = KnowledgeBase::shipped();
        match kb.lookup("K2H") {
            Err(KbError::UnknownProperty { suggestions, .. }) => {
                assert!(suggestions.contains(&"k2H".to_string()))
            }
            other => panic!("{other:?}"),
        }
        assert!(kb.property_set("T2,nope").is_err());
        assert_eq!(kb.property_set("diagram").unwrap().len(), 13);
        assert!(kb.property_set("").unwrap().is_empty());
    }
}
