//! The `topoctl` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or derivation fails, 2 on
//! usage, parse and input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::census;
use crate::deduction::{self, derive, KbError, KnowledgeBase, Status};
use crate::dsl::{self, Document};
use crate::generated::{self, TestClass};
use crate::properties::{self, CHECKERS};
use crate::space::FinSpace;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "topoctl", version, about = "Finite topological spaces and a property knowledge base")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate property checkers on a space
    Check {
        file: PathBuf,
        /// Space to check when the file defines several (default: the first)
        #[arg(long)]
        space: Option<String>,
        /// Only report these properties
        #[arg(long = "property", value_name = "ID")]
        properties: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the coreflection of a space for a test class
    Coreflect {
        file: PathBuf,
        #[arg(long)]
        class: String,
        #[arg(long)]
        space: Option<String>,
    },
    /// Enumerate every labeled topology on N points
    Census {
        n: usize,
        #[arg(long)]
        count_only: bool,
        /// One representative per homeomorphism class
        #[arg(long)]
        classes: bool,
    },
    /// Run the theorem suite over the census
    Verify {
        #[arg(long, value_name = "N")]
        max_points: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
        /// Run only the named suites
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Does property P imply property Q?
    KbStatus { kb: PathBuf, p: String, q: String },
    /// List property pairs whose implication status is unknown
    KbReport {
        kb: PathBuf,
        /// `diagram`, `grid`, `all` or a comma-separated list of ids
        #[arg(long)]
        props: String,
        /// Ignore space records from outside sources
        #[arg(long)]
        paper_only: bool,
    },
    /// Write the implication diagram as Graphviz DOT
    KbDot {
        kb: PathBuf,
        #[arg(long)]
        props: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

impl From<KbError> for Failure {
    fn from(e: KbError) -> Self {
        let code = match e {
            KbError::Contradiction { .. } => EXIT_FAILED,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<crate::error::TopologyError> for Failure {
    fn from(e: crate::error::TopologyError) -> Self {
        usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // a closed pipe means the reader has seen enough
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure { code: EXIT_OK, message: String::new() };
        }
        usage(e.to_string())
    }
}

/// Runs the command line `args` (program name first), writing reports to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check { file, space, properties, json } => check(&file, space.as_deref(), &properties, json, out),
        Command::Coreflect { file, class, space } => coreflect(&file, &class, space.as_deref(), out),
        Command::Census { n, count_only, classes } => census_cmd(n, count_only, classes, out),
        Command::Verify { max_points, threads, suites, json } => verify_cmd(max_points, threads, &suites, json, out),
        Command::KbStatus { kb, p, q } => kb_status(&kb, &p, &q, out),
        Command::KbReport { kb, props, paper_only } => kb_report(&kb, &props, paper_only, out),
        Command::KbDot { kb, props, output } => kb_dot(&kb, &props, output.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn load_document(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    dsl::parse(&text).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn pick_space<'a>(doc: &'a Document, name: Option<&str>) -> Result<(&'a str, &'a FinSpace), Failure> {
    match name {
        None => doc.main_space().ok_or_else(|| usage("the file defines no space")),
        Some(n) => doc.spaces.iter().find(|(s, _)| s == n).map(|(s, x)| (s.as_str(), x)).ok_or_else(|| {
            let names: Vec<&str> = doc.spaces.iter().map(|(s, _)| s.as_str()).collect();
            usage(format!("unknown space {n}{}", did_you_mean(n, &names)))
        }),
    }
}

fn did_you_mean(id: &str, candidates: &[&str]) -> String {
    let lower = id.to_lowercase();
    let mut close: Vec<(usize, &str)> = candidates
        .iter()
        .map(|c| (strsim::levenshtein(&lower, &c.to_lowercase()), *c))
        .filter(|&(d, _)| d <= 2)
        .collect();
    close.sort();
    close.dedup();
    if close.is_empty() {
        String::new()
    } else {
        let names: Vec<&str> = close.into_iter().take(3).map(|(_, c)| c).collect();
        format!(" (did you mean {}?)", names.join(", "))
    }
}

#[derive(Serialize)]
struct Row {
    id: String,
    label: String,
    /// `None` when no value is available for this space.
    value: Option<bool>,
    note: Option<&'static str>,
}

fn check(file: &Path, space: Option<&str>, wanted: &[String], json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let doc = load_document(file)?;
    let (name, x) = pick_space(&doc, space)?;
    let kb = KnowledgeBase::shipped();
    let rows: Vec<Row> = if wanted.is_empty() {
        CHECKERS
            .iter()
            .map(|c| {
                let value = (c.eval)(x);
                Row {
                    id: c.id.into(),
                    label: c.label.into(),
                    value,
                    note: value.is_none().then_some("refused: space too large"),
                }
            })
            .collect()
    } else {
        let mut known: Vec<&str> = CHECKERS.iter().map(|c| c.id).collect();
        known.extend(kb.properties().iter().map(|p| p.id.as_str()));
        let mut rows = Vec::new();
        for id in wanted {
            if let Some(c) = properties::checker(id) {
                let value = (c.eval)(x);
                rows.push(Row {
                    id: c.id.into(),
                    label: c.label.into(),
                    value,
                    note: value.is_none().then_some("refused: space too large"),
                });
            } else if let Some(p) = kb.properties().iter().find(|p| p.id == *id) {
                rows.push(Row {
                    id: p.id.clone(),
                    label: p.name.clone(),
                    value: None,
                    note: Some("no finite checker"),
                });
            } else {
                return Err(usage(format!("unknown property {id}{}", did_you_mean(id, &known))));
            }
        }
        rows
    };
    if json {
        #[derive(Serialize)]
        struct Report<'a> {
            space: &'a str,
            points: usize,
            opens: usize,
            properties: Vec<Row>,
        }
        let report = Report { space: name, points: x.n(), opens: x.opens().len(), properties: rows };
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?;
    } else {
        writeln!(out, "space {name}: {} points, {} open sets", x.n(), x.opens().len())?;
        writeln!(out, "{:<16} {:<7} description", "property", "value")?;
        for r in rows {
            let value = match r.value {
                Some(true) => "true",
                Some(false) => "false",
                None => "-",
            };
            let label = match r.note {
                Some(n) => format!("{} ({n})", r.label),
                None => r.label,
            };
            writeln!(out, "{:<16} {:<7} {}", r.id, value, label)?;
        }
    }
    Ok(EXIT_OK)
}

fn coreflect(file: &Path, class: &str, space: Option<&str>, out: &mut dyn Write) -> Result<i32, Failure> {
    let doc = load_document(file)?;
    let (name, x) = pick_space(&doc, space)?;
    let c: TestClass = doc.resolve_class(class).ok_or_else(|| {
        let mut names: Vec<&str> = doc.classes.iter().map(|c| c.name()).collect();
        names.extend(["P", "A", "Sfin"]);
        usage(format!("unknown class {class}{}", did_you_mean(class, &names)))
    })?;
    let xc = generated::coreflection(x, &c);
    out.write_all(dsl::render(&format!("{name}_{}", c.name()), &xc).as_bytes())?;
    Ok(EXIT_OK)
}

fn census_cmd(n: usize, count_only: bool, classes: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let spaces = if classes {
        census::topology_classes(n)?
    } else {
        census::enumerate_topologies_parallel(n, rayon::current_num_threads())?
    };
    if !count_only {
        for (i, s) in spaces.iter().enumerate() {
            let opens: Vec<String> = s.opens().iter().map(|u| u.to_string()).collect();
            writeln!(out, "{i}: {}", opens.join(" "))?;
        }
        write!(out, "total: ")?;
    }
    writeln!(out, "{}", spaces.len())?;
    Ok(EXIT_OK)
}

fn verify_cmd(
    max_points: Option<usize>,
    threads: Option<usize>,
    suites: &[String],
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let bound = census::census_bound()?;
    let max_points = max_points.unwrap_or(bound);
    if max_points > bound {
        return Err(usage(format!(
            "--max-points {max_points} exceeds the census bound {bound} (set {} to raise it, at most {})",
            census::MAX_POINTS_ENV,
            census::HARD_CENSUS_LIMIT
        )));
    }
    let names = verify::suite_names();
    for s in suites {
        if !names.contains(&s.as_str()) {
            return Err(usage(format!("unknown suite {s}{}", did_you_mean(s, &names))));
        }
    }
    let work = || -> Result<Vec<verify::SuiteResult>, Failure> {
        let ctx = verify::Context::new(max_points, KnowledgeBase::shipped())?;
        Ok(if suites.is_empty() {
            verify::run_all(&ctx)
        } else {
            let picked: Vec<&str> = suites.iter().map(String::as_str).collect();
            verify::run_named(&ctx, &picked).expect("suite names validated")
        })
    };
    let results = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| usage(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    let passed = results.iter().filter(|r| r.passed()).count();
    if json {
        #[derive(Serialize)]
        struct Report<'a> {
            max_points: usize,
            passed: usize,
            total: usize,
            suites: &'a [verify::SuiteResult],
        }
        let report = Report { max_points, passed, total: results.len(), suites: &results };
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?;
    } else {
        for r in &results {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(out, "{verdict} {:<46} {:>10} checks {:>6} violations", r.name, r.checked, r.violation_count)?;
            for v in &r.violations {
                writeln!(out, "     {v}")?;
            }
        }
        writeln!(out, "{passed}/{} suites passed (max points {max_points})", results.len())?;
    }
    Ok(if passed == results.len() { EXIT_OK } else { EXIT_FAILED })
}

fn kb_status(path: &Path, p: &str, q: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let kb = KnowledgeBase::load(path)?;
    let closed = derive(&kb)?;
    match deduction::status(&closed, p, q)? {
        Status::Implies(chain) => {
            writeln!(out, "IMPLIES")?;
            for line in chain {
                writeln!(out, "  {line}")?;
            }
        }
        Status::NotImplies { witness, p_chain, q_chain } => {
            writeln!(out, "NOT IMPLIES (witness: {witness})")?;
            for line in p_chain.iter().chain(&q_chain) {
                writeln!(out, "  {line}")?;
            }
        }
        Status::Unknown => writeln!(out, "UNKNOWN")?,
    }
    Ok(EXIT_OK)
}

fn kb_report(path: &Path, props: &str, paper_only: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut kb = KnowledgeBase::load(path)?;
    if paper_only {
        kb = kb.paper_only();
    }
    let ids = kb.property_set(props)?;
    let closed = derive(&kb)?;
    let unknown = deduction::completeness_report(&closed, &ids)?;
    for (p, q) in &unknown {
        writeln!(out, "unknown: {p} => {q}")?;
    }
    writeln!(out, "{} unknown pairs among {} properties", unknown.len(), ids.len())?;
    Ok(EXIT_OK)
}

fn kb_dot(path: &Path, props: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<i32, Failure> {
    let kb = KnowledgeBase::load(path)?;
    let ids = kb.property_set(props)?;
    let closed = derive(&kb)?;
    let dot = deduction::export_dot(&closed, &ids)?;
    match output {
        Some(file) => std::fs::write(file, dot).map_err(|e| usage(format!("{}: {e}", file.display())))?,
        None => out.write_all(dot.as_bytes())?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("topoctl").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn census_count() {
        assert_eq!(run_str(&["census", "3", "--count-only"]), (0, "29\n".into(), String::new()));
        let (code, out, _) = run_str(&["census", "2"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("total: 4\n"));
    }

    struct ClosedPipe;

    impl Write for ClosedPipe {
        fn write(&mut self, _: &[u8]) -> std::io::Result<usize> {
            Err(std::io::ErrorKind::BrokenPipe.into())
        }
        fn flush(&mut self) -> std::io::Result<()> {
            Ok(())
        }
    }

    #[test]
    fn closed_stdout_is_not_an_error() {
        let mut err = Vec::new();
        assert_eq!(run(["topoctl", "census", "3"], &mut ClosedPipe, &mut err), EXIT_OK);
        assert!(err.is_empty());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["census", "9"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "--max-points", "1", "--suite", "core.closure-lawz"]).0, EXIT_USAGE);
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("kb-status"));
    }

    #[test]
    fn did_you_mean_lists_close_ids() {
        assert_eq!(did_you_mean("sierpinsky", &["sierpinski", "vee"]), " (did you mean sierpinski?)");
        assert_eq!(did_you_mean("zzz", &["T2"]), "");
    }
}
