use std::fmt::Write;

use super::derive::ClosedKb;
use super::KbError;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph of the transitive reduction of the implications among
/// `props`. Nodes appear in the given order; edges are sorted by the
/// positions of their endpoints.
pub fn export_dot(closed: &ClosedKb, props: &[String]) -> Result<String, KbError> {
    let kb = closed.kb();
    let idx: Vec<usize> = props.iter().map(|p| kb.lookup(p)).collect::<Result<_, _>>()?;
    let k = idx.len();
    let reach: Vec<Vec<bool>> = idx
        .iter()
        .map(|&p| {
            let r = closed.reach(p);
            idx.iter().map(|&q| r[q].is_some()).collect()
        })
        .collect();
    let equivalent = |a: usize, b: usize| reach[a][b] && reach[b][a];

    let mut out = String::from("digraph implications {\n");
    for &p in &idx {
        let prop = &kb.properties[p];
        let _ = writeln!(out, "  {} [label={}];", quote(&prop.id), quote(&prop.id));
    }
    for a in 0..k {
        for b in 0..k {
            if a == b || !reach[a][b] {
                continue;
            }
            let shortcut = (0..k)
                .any(|m| m != a && m != b && !equivalent(m, a) && !equivalent(m, b) && reach[a][m] && reach[m][b]);
            if !shortcut {
                let _ = writeln!(out, "  {} -> {};", quote(&props[a]), quote(&props[b]));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
