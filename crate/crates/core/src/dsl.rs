//! Text format for spaces and test classes.
//!
//! ```text
//! # the Sierpinski space
//! space sierpinski
//! points 2
//! opens {} {0} {0 1}
//!
//! space vee
//! points 3
//! subbasis {0 1} {1 2}
//!
//! class small = [sierpinski, vee]
//! class pairs = P
//! ```
//!
//! A line starting with `{` continues the previous `opens` or `subbasis`
//! line. Class members name spaces defined anywhere in the same file.

use std::fmt;

use crate::generated::TestClass;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::space::FinSpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

/// A parsed file: spaces and classes in definition order.
#[derive(Debug, Clone)]
pub struct Document {
    pub spaces: Vec<(String, FinSpace)>,
    pub classes: Vec<TestClass>,
}

impl Document {
    pub fn space(&self, name: &str) -> Option<&FinSpace> {
        self.spaces.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn class(&self, name: &str) -> Option<&TestClass> {
        self.classes.iter().find(|c| c.name() == name)
    }

    /// The first space of the file.
    pub fn main_space(&self) -> Option<(&str, &FinSpace)> {
        self.spaces.first().map(|(n, s)| (n.as_str(), s))
    }

    /// A class defined in the file, or a builtin one.
    pub fn resolve_class(&self, name: &str) -> Option<TestClass> {
        self.class(name).cloned().or_else(|| TestClass::builtin(name))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    Opens,
    Subbasis,
}

struct PendingSpace {
    name: String,
    line: usize,
    points: Option<usize>,
    family: Option<(Family, usize, Vec<PointSet>)>,
}

enum ClassSpec {
    Builtin(TestClass),
    Members(Vec<(String, usize, usize)>),
}

struct Line<'a> {
    no: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    /// Column (1-based, in characters) of a byte offset into the line.
    fn col(&self, offset: usize) -> usize {
        self.text[..offset].chars().count() + 1
    }
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | '\'')
}

fn parse_name(line: &Line, offset: usize, rest: &str) -> Result<String, ParseError> {
    let name = rest.trim();
    let at = offset + (rest.len() - rest.trim_start().len());
    if name.is_empty() {
        return err(line.no, line.col(at), "expected a name");
    }
    if let Some((i, c)) = name.char_indices().find(|&(_, c)| !is_name_char(c)) {
        return err(line.no, line.col(at + i), format!("unexpected character {c:?} in name"));
    }
    Ok(name.to_string())
}

/// Parses `{..} {..} ...` starting at byte `offset` of the line.
fn parse_sets(line: &Line, offset: usize, n: usize) -> Result<Vec<PointSet>, ParseError> {
    let text = line.text;
    let bytes = text.as_bytes();
    let mut i = offset;
    let mut out = Vec::new();
    loop {
        while i < bytes.len() && (bytes[i] as char).is_whitespace() {
            i += 1;
        }
        if i >= bytes.len() || bytes[i] == b'#' {
            return Ok(out);
        }
        if bytes[i] != b'{' {
            return err(line.no, line.col(i), "expected '{'");
        }
        i += 1;
        let mut set = PointSet::EMPTY;
        loop {
            while i < bytes.len() && (bytes[i] as char).is_whitespace() {
                i += 1;
            }
            if i >= bytes.len() {
                return err(line.no, line.col(i), "unclosed '{'");
            }
            if bytes[i] == b'}' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                let c = text[i..].chars().next().unwrap_or(' ');
                return err(line.no, line.col(i), format!("expected a point number, found {c:?}"));
            }
            let x: usize = match text[start..i].parse() {
                Ok(x) => x,
                Err(_) => return err(line.no, line.col(start), "point number too large"),
            };
            if x >= n {
                return err(line.no, line.col(start), format!("point {x} is out of range for {n} points"));
            }
            set.insert(x);
        }
        out.push(set);
    }
}

fn finish_space(p: PendingSpace) -> Result<(String, FinSpace), ParseError> {
    let Some(n) = p.points else {
        return err(p.line, 1, format!("space {} has no 'points' line", p.name));
    };
    let built = match p.family {
        None => return err(p.line, 1, format!("space {} has no 'opens' or 'subbasis' line", p.name)),
        Some((Family::Opens, line, sets)) => (line, FinSpace::new(n, sets)),
        Some((Family::Subbasis, line, sets)) => (line, FinSpace::generate(n, sets)),
    };
    match built {
        (_, Ok(space)) => Ok((p.name, space)),
        (line, Err(e)) => err(line, 1, format!("space {}: {e}", p.name)),
    }
}

/// Parses a whole file.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut spaces: Vec<(String, FinSpace)> = Vec::new();
    let mut class_specs: Vec<(String, usize, ClassSpec)> = Vec::new();
    let mut current: Option<PendingSpace> = None;
    let mut last_line = 0;

    for (idx, text) in text.lines().enumerate() {
        let line = Line { no: idx + 1, text };
        last_line = line.no;
        let trimmed = text.trim_start();
        let indent = text.len() - trimmed.len();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if trimmed.starts_with('{') {
            let Some(cur) = current.as_mut() else {
                return err(line.no, line.col(indent), "set list outside a space");
            };
            let (Some(n), Some((_, _, sets))) = (cur.points, cur.family.as_mut()) else {
                return err(line.no, line.col(indent), "continuation line without 'opens' or 'subbasis'");
            };
            sets.extend(parse_sets(&line, indent, n)?);
            continue;
        }
        let kw_len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let keyword = &trimmed[..kw_len];
        let rest_at = indent + kw_len;
        let rest = &text[rest_at..];
        match keyword {
            "space" => {
                let name = parse_name(&line, rest_at, rest)?;
                if spaces.iter().any(|(n, _)| *n == name) || current.as_ref().is_some_and(|c| c.name == name) {
                    return err(line.no, line.col(indent), format!("space {name} defined twice"));
                }
                if let Some(p) = current.take() {
                    spaces.push(finish_space(p)?);
                }
                current = Some(PendingSpace { name, line: line.no, points: None, family: None });
            }
            "points" => {
                let Some(cur) = current.as_mut() else {
                    return err(line.no, line.col(indent), "'points' before any 'space' line");
                };
                if cur.points.is_some() {
                    return err(line.no, line.col(indent), "duplicate 'points' line");
                }
                let arg = rest.trim();
                let at = rest_at + (rest.len() - rest.trim_start().len());
                let n: usize = arg.parse().map_err(|_| ParseError {
                    line: line.no,
                    column: line.col(at),
                    message: format!("expected a point count, found {arg:?}"),
                })?;
                if n > MAX_POINTS {
                    return err(line.no, line.col(at), format!("at most {MAX_POINTS} points are supported"));
                }
                cur.points = Some(n);
            }
            "opens" | "subbasis" => {
                let Some(cur) = current.as_mut() else {
                    return err(line.no, line.col(indent), format!("'{keyword}' before any 'space' line"));
                };
                let Some(n) = cur.points else {
                    return err(line.no, line.col(indent), format!("'{keyword}' before 'points'"));
                };
                if cur.family.is_some() {
                    return err(line.no, line.col(indent), "a space takes one 'opens' or 'subbasis' line");
                }
                let family = if keyword == "opens" { Family::Opens } else { Family::Subbasis };
                let sets = parse_sets(&line, rest_at, n)?;
                cur.family = Some((family, line.no, sets));
            }
            "class" => {
                let Some(eq) = rest.find('=') else {
                    return err(line.no, line.col(text.len()), "expected '=' in class line");
                };
                let name = parse_name(&line, rest_at, &rest[..eq])?;
                if class_specs.iter().any(|(n, _, _)| *n == name) {
                    return err(line.no, line.col(indent), format!("class {name} defined twice"));
                }
                let body_at = rest_at + eq + 1;
                let body = text[body_at..].trim();
                let body_at = body_at + (text[body_at..].len() - text[body_at..].trim_start().len());
                let spec = if let Some(inner) = body.strip_prefix('[') {
                    let Some(inner) = inner.strip_suffix(']') else {
                        return err(line.no, line.col(body_at + body.len()), "expected ']'");
                    };
                    let mut members = Vec::new();
                    let mut at = body_at + 1;
                    for part in inner.split(',') {
                        let name = part.trim();
                        let col = line.col(at + (part.len() - part.trim_start().len()));
                        if name.is_empty() {
                            return err(line.no, col, "empty class member");
                        }
                        members.push((name.to_string(), line.no, col));
                        at += part.len() + 1;
                    }
                    ClassSpec::Members(members)
                } else {
                    match TestClass::builtin(body) {
                        Some(c) => ClassSpec::Builtin(c),
                        None => {
                            return err(
                                line.no,
                                line.col(body_at),
                                format!("unknown class {body:?}: expected P, A, Sfin or [space, ...]"),
                            )
                        }
                    }
                };
                class_specs.push((name, line.no, spec));
            }
            other => {
                return err(
                    line.no,
                    line.col(indent),
                    format!("unknown keyword {other:?}: expected space, points, opens, subbasis or class"),
                )
            }
        }
    }
    if let Some(p) = current.take() {
        spaces.push(finish_space(p)?);
    }
    if spaces.is_empty() && class_specs.is_empty() {
        return err(last_line.max(1), 1, "no space defined");
    }

    let mut classes = Vec::new();
    for (name, line, spec) in class_specs {
        let class = match spec {
            ClassSpec::Builtin(c) => c.with_name(name),
            ClassSpec::Members(members) => {
                let mut spaces_of = Vec::new();
                for (m, l, c) in members {
                    match spaces.iter().find(|(n, _)| *n == m) {
                        Some((_, s)) => spaces_of.push(s.clone()),
                        None => return err(l, c, format!("class {name} names unknown space {m}")),
                    }
                }
                TestClass::explicit(name, spaces_of).or_else(|e| err(line, 1, e.to_string()))?
            }
        };
        classes.push(class);
    }
    Ok(Document { spaces, classes })
}

/// Parses a file holding a single space.
pub fn parse_space(text: &str) -> Result<FinSpace, ParseError> {
    let doc = parse(text)?;
    match doc.spaces.len() {
        1 => Ok(doc.spaces[0].1.clone()),
        0 => err(1, 1, "no space defined"),
        _ => err(1, 1, "expected exactly one space"),
    }
}

/// Renders a space in the text format, listing every open set.
pub fn render(name: &str, space: &FinSpace) -> String {
    let mut out = format!("space {name}\npoints {}\nopens", space.n());
    for u in space.opens() {
        out.push(' ');
        out.push_str(&u.to_string());
    }
    out.push('\n');
    out
}
