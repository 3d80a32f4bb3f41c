//! Command-line front end. Subcommands mirror the library surface:
//! `invariants`, `classify`, `equivalent`, `table`, `canonical` and
//! `automorphism`. Exit codes: 0 for success (and for "equivalent"), 1 for a
//! well-formed negative answer, 2 and above for input errors.

use crate::classify::{witness_automorphism, ClassifyError, OpenBook5};
use crate::families::{FamilyError, FamilyParams, Variant};
use crate::front::{FrontDiagram, FrontDocument, FrontError};
use crate::handlebody::{HandlebodyError, SteinHandlebody};
use crate::lattice::{automorphism_mapping, IntVector, LatticeError};
use crate::report::{
    ComponentInvariants, LabelRecord, Payload, Provenance, Report, TableRow,
};
use clap::{Parser, Subcommand};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error(transparent)]
    Handlebody(#[from] HandlebodyError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("failed to read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("failed to write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{0}")]
    Input(String),
}

#[derive(Parser, Debug)]
#[command(
    name = "steinobd",
    version,
    about = "Legendrian front and Stein handlebody invariants, and the contact 5-manifolds their open books support"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classical invariants (tb, rot, writhe, linking) of a front-word file
    Invariants {
        /// Front-word file: whitespace-separated L<n>/R<n>/X<n> tokens
        front_file: PathBuf,
    },
    /// Label the contact 5-manifold of a handlebody file or family member
    Classify {
        /// Handlebody file; omit when using family flags
        file: Option<PathBuf>,
        /// Family variant (A or B)
        #[arg(long, value_parser = parse_variant)]
        variant: Option<Variant>,
        /// Twist parameter p >= 1
        #[arg(long)]
        p: Option<i64>,
        /// Comma triple m0,m1,m2
        #[arg(long, value_parser = parse_m)]
        m: Option<(i64, i64, i64)>,
        /// Boundary-sum size (0 for the bare page)
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
    /// Decide whether two inputs support the same contact 5-manifold
    Equivalent {
        /// Handlebody file, or inline family spec like A:p=1:m=5,3,1:n=2
        input_a: String,
        /// Second input in the same syntax
        input_b: String,
    },
    /// Tabulate family labels across a range of p
    Table {
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        /// Single value or inclusive range, e.g. 7 or 1..10
        #[arg(long, value_parser = parse_p_range)]
        p: PRange,
        #[arg(long, value_parser = parse_m)]
        m: (i64, i64, i64),
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
    /// Write the canonical page for (r, n) and a front file per handle
    Canonical {
        /// Rotation divisor r >= 0
        r: i64,
        /// Number of 2-handles (b2) >= 1
        n: usize,
        /// Output handlebody file; fronts land next to it
        out: PathBuf,
    },
    /// A unimodular matrix mapping one integer vector to the other
    Automorphism {
        /// Comma-separated integers
        #[arg(long, value_parser = parse_int_list)]
        from: IntList,
        /// Comma-separated integers, same gcd
        #[arg(long, value_parser = parse_int_list)]
        to: IntList,
    },
}

#[derive(Debug, Clone, Copy)]
pub struct PRange {
    pub start: i64,
    pub end: i64,
}

#[derive(Debug, Clone)]
pub struct IntList(pub Vec<i64>);

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

fn parse_m(s: &str) -> Result<(i64, i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("m must be a comma triple m0,m1,m2, got `{s}`"));
    }
    let mut vals = [0i64; 3];
    for (slot, part) in vals.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| format!("`{part}` is not an integer"))?;
    }
    Ok((vals[0], vals[1], vals[2]))
}

fn parse_p_range(s: &str) -> Result<PRange, String> {
    let parse_one = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("`{t}` is not an integer"))
    };
    if let Some((a, b)) = s.split_once("..") {
        let (start, end) = (parse_one(a)?, parse_one(b)?);
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(PRange { start, end })
    } else {
        let v = parse_one(s)?;
        Ok(PRange { start: v, end: v })
    }
}

fn parse_int_list(s: &str) -> Result<IntList, String> {
    let entries: Result<Vec<i64>, String> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| format!("`{t}` is not an integer"))
        })
        .collect();
    Ok(IntList(entries?))
}

/// Runs the CLI against explicit arguments and streams, returning the exit
/// code. `STEINOBD_COLOR=1` enables ANSI styling of text output.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let echo = argv[1..].join(" ");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                let _ = write!(out, "{rendered}");
                0
            } else {
                let _ = write!(err, "{rendered}");
                2
            };
        }
    };
    let color = std::env::var("STEINOBD_COLOR").map(|v| v == "1").unwrap_or(false);
    match execute(cli.command, echo) {
        Ok((report, code)) => {
            let rendered = if cli.json {
                let mut s = report.to_json();
                s.push('\n');
                s
            } else {
                report.to_text(color)
            };
            let _ = write!(out, "{rendered}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Dispatches a parsed command; returns the report and the exit code (0 or 1).
pub fn execute(command: Command, echo: String) -> Result<(Report, i32), CliError> {
    let (source, warnings, result, code) = match command {
        Command::Invariants { front_file } => cmd_invariants(&front_file)?,
        Command::Classify {
            file,
            variant,
            p,
            m,
            n,
        } => cmd_classify(file, variant, p, m, n)?,
        Command::Equivalent { input_a, input_b } => cmd_equivalent(&input_a, &input_b)?,
        Command::Table { variant, p, m, n } => cmd_table(variant, p, m, n)?,
        Command::Canonical { r, n, out } => cmd_canonical(r, n, &out)?,
        Command::Automorphism { from, to } => cmd_automorphism(from.0, to.0)?,
    };
    let report = Report {
        command: echo,
        source,
        warnings,
        result,
    };
    Ok((report, code))
}

type CmdOutput = (Provenance, Vec<String>, Payload, i32);

fn cmd_invariants(path: &Path) -> Result<CmdOutput, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let front = FrontDocument::parse(&text)?.oriented()?;
    let inv = front.invariants();
    let components = (0..front.component_count())
        .map(|c| ComponentInvariants {
            component: c,
            tb: inv.tb[c],
            rot: inv.rot[c],
            writhe: inv.writhe[c],
        })
        .collect();
    Ok((
        Provenance::File {
            path: path.display().to_string(),
        },
        Vec::new(),
        Payload::Invariants {
            components,
            linking: inv.linking,
        },
        0,
    ))
}

fn family_params(
    variant: Option<Variant>,
    p: Option<i64>,
    m: Option<(i64, i64, i64)>,
    n: usize,
) -> Result<FamilyParams, CliError> {
    match (variant, p, m) {
        (Some(variant), Some(p), Some(m)) => Ok(FamilyParams::new(variant, p, m, n)?),
        _ => Err(CliError::Input(
            "family input needs --variant, --p and --m together".into(),
        )),
    }
}

fn book_from_file(path: &Path) -> Result<(OpenBook5, Provenance), CliError> {
    let page = SteinHandlebody::load(path)?;
    Ok((
        OpenBook5::new(page),
        Provenance::File {
            path: path.display().to_string(),
        },
    ))
}

fn label_record(book: &OpenBook5, source: Provenance) -> LabelRecord {
    LabelRecord::new(
        book.supported_contact(),
        book.page().c1_cochain().entries().to_vec(),
        source,
    )
}

fn cmd_classify(
    file: Option<PathBuf>,
    variant: Option<Variant>,
    p: Option<i64>,
    m: Option<(i64, i64, i64)>,
    n: usize,
) -> Result<CmdOutput, CliError> {
    let has_flags = variant.is_some() || p.is_some() || m.is_some();
    let (book, source, warnings) = match (file, has_flags) {
        (Some(_), true) => {
            return Err(CliError::Input(
                "give either a handlebody file or family flags, not both".into(),
            ))
        }
        (Some(path), false) => {
            let (book, source) = book_from_file(&path)?;
            (book, source, Vec::new())
        }
        (None, _) => {
            let params = family_params(variant, p, m, n)?;
            let warnings = params.warnings();
            let book = OpenBook5::new(params.generate()?);
            (book, Provenance::Family(params), warnings)
        }
    };
    let record = label_record(&book, source.clone());
    Ok((source, warnings, Payload::Label(record), 0))
}

/// An `equivalent` input: an existing handlebody file, or an inline family
/// spec `<A|B>:p=<int>:m=<m0>,<m1>,<m2>[:n=<int>]`.
fn resolve_input(token: &str) -> Result<(OpenBook5, Provenance, Vec<String>), CliError> {
    let path = Path::new(token);
    if path.exists() {
        let (book, source) = book_from_file(path)?;
        return Ok((book, source, Vec::new()));
    }
    if token.contains(':') {
        let params = parse_family_spec(token)?;
        let warnings = params.warnings();
        let book = OpenBook5::new(params.generate()?);
        return Ok((book, Provenance::Family(params), warnings));
    }
    Err(CliError::Input(format!(
        "`{token}` is neither an existing file nor a family spec like A:p=1:m=5,3,1:n=2"
    )))
}

fn parse_family_spec(token: &str) -> Result<FamilyParams, CliError> {
    let bad = |msg: String| CliError::Input(format!("family spec `{token}`: {msg}"));
    let mut fields = token.split(':');
    let variant: Variant = fields
        .next()
        .unwrap_or_default()
        .parse()
        .map_err(bad)?;
    let (mut p, mut m, mut n) = (None, None, 0usize);
    for field in fields {
        let Some((key, value)) = field.split_once('=') else {
            return Err(bad(format!("`{field}` is not a key=value field")));
        };
        match key {
            "p" => {
                p = Some(
                    value
                        .parse::<i64>()
                        .map_err(|_| bad(format!("`{value}` is not an integer")))?,
                )
            }
            "m" => m = Some(parse_m(value).map_err(bad)?),
            "n" => {
                n = value
                    .parse::<usize>()
                    .map_err(|_| bad(format!("`{value}` is not a size")))?
            }
            other => return Err(bad(format!("unknown field `{other}`"))),
        }
    }
    let (Some(p), Some(m)) = (p, m) else {
        return Err(bad("needs p= and m= fields".into()));
    };
    Ok(FamilyParams::new(variant, p, m, n)?)
}

fn cmd_equivalent(input_a: &str, input_b: &str) -> Result<CmdOutput, CliError> {
    let (book_a, prov_a, mut warnings) = resolve_input(input_a)?;
    let (book_b, prov_b, warnings_b) = resolve_input(input_b)?;
    warnings.extend(warnings_b);

    let rec_a = label_record(&book_a, prov_a.clone());
    let rec_b = label_record(&book_b, prov_b.clone());
    let source = Provenance::Pair {
        a: Box::new(prov_a),
        b: Box::new(prov_b),
    };

    let (la, lb) = (book_a.supported_contact(), book_b.supported_contact());
    if la == lb {
        let witness = witness_automorphism(&book_a, &book_b)?;
        let payload = Payload::Equivalence {
            equivalent: true,
            a: rec_a,
            b: rec_b,
            witness: Some(witness.rows().to_vec()),
            reason: None,
        };
        Ok((source, warnings, payload, 0))
    } else {
        let reason = if la.n != lb.n {
            format!("b2 {} != {}", la.n, lb.n)
        } else {
            format!("rotation divisor {} != {}", la.r, lb.r)
        };
        let payload = Payload::Equivalence {
            equivalent: false,
            a: rec_a,
            b: rec_b,
            witness: None,
            reason: Some(reason),
        };
        Ok((source, warnings, payload, 1))
    }
}

fn cmd_table(
    variant: Variant,
    range: PRange,
    m: (i64, i64, i64),
    n: usize,
) -> Result<CmdOutput, CliError> {
    let mut rows = Vec::new();
    let mut warnings = Vec::new();
    let mut labels = Vec::new();
    for p in range.start..=range.end {
        let params = FamilyParams::new(variant, p, m, n)?;
        if p == range.start {
            warnings = params.warnings();
        }
        let page = params.generate()?;
        let label = OpenBook5::new(page.clone()).supported_contact();
        labels.push((label.r, label.n));
        rows.push(TableRow {
            p,
            rot: page.c1_cochain().entries().to_vec(),
            r: label.r,
            label: label.zeta(),
            diffeo: label.diffeo,
            n: label.n,
        });
    }
    let all_equal = labels.windows(2).all(|w| w[0] == w[1]);
    let mut dedup = labels.clone();
    dedup.sort_unstable();
    dedup.dedup();
    let pairwise_distinct = dedup.len() == labels.len();
    let (expectation, matches_expectation) = match variant {
        Variant::A => ("variant A: labels all equal across p".to_string(), all_equal),
        Variant::B if m.1 >= 2 => (
            "variant B with m1 >= 2: labels pairwise distinct across p".to_string(),
            pairwise_distinct,
        ),
        Variant::B => (
            "variant B with m1 = 1: degenerate, labels all equal across p".to_string(),
            all_equal,
        ),
    };
    // Echo the whole range in the provenance via the first row's params.
    let params = FamilyParams::new(variant, range.start, m, n)?;
    Ok((
        Provenance::Family(params),
        warnings,
        Payload::Table {
            rows,
            all_equal,
            pairwise_distinct,
            expectation,
            matches_expectation,
        },
        0,
    ))
}

fn cmd_canonical(r: i64, n: usize, out: &Path) -> Result<CmdOutput, CliError> {
    let model = SteinHandlebody::canonical_model(r, n)?;

    let mut front_paths = Vec::new();
    for (i, handle) in model.handles().iter().enumerate() {
        let front_path = out.with_extension(format!("{i}.front"));
        let word = FrontDiagram::stabilized_unknot(handle.rot());
        let contents = format!(
            "# stabilized Legendrian unknot: tb={} rot={}\n{word}\n",
            handle.tb(),
            handle.rot()
        );
        fs::write(&front_path, contents).map_err(|source| CliError::Write {
            path: front_path.display().to_string(),
            source,
        })?;
        front_paths.push(front_path.display().to_string());
    }

    let mut text = format!("# canonical page: rotation divisor {r}, b2 {n}\n");
    for (i, fp) in front_paths.iter().enumerate() {
        text.push_str(&format!("# handle {i} front: {fp}\n"));
    }
    text.push_str(&model.to_file_string());
    fs::write(out, text).map_err(|source| CliError::Write {
        path: out.display().to_string(),
        source,
    })?;

    // Round trip through the file to label what was actually written.
    let (book, file_prov) = book_from_file(out)?;
    let record = label_record(&book, file_prov);
    let source = Provenance::Canonical { r, n };
    Ok((
        source,
        Vec::new(),
        Payload::Canonical {
            r,
            n,
            path: out.display().to_string(),
            front_paths,
            label: record,
        },
        0,
    ))
}

fn cmd_automorphism(from: Vec<i64>, to: Vec<i64>) -> Result<CmdOutput, CliError> {
    let v = IntVector::new(from.clone())?;
    let w = IntVector::new(to.clone())?;
    let matrix = automorphism_mapping(&v, &w)?;
    debug_assert_eq!(matrix.apply(&v).unwrap(), w);
    Ok((
        Provenance::Vectors {
            from: from.clone(),
            to: to.clone(),
        },
        Vec::new(),
        Payload::Automorphism {
            from,
            to,
            gcd: v.gcd_nonneg(),
            matrix: matrix.rows().to_vec(),
        },
        0,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_strings(args: &[&str]) -> (String, String, i32) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("steinobd").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
            code,
        )
    }

    #[test]
    fn classify_family_text() {
        let (out, err, code) =
            run_to_strings(&["classify", "--variant", "A", "--p", "7", "--m", "5,3,1"]);
        assert_eq!(code, 0, "stderr: {err}");
        assert!(out.contains("label: zeta_{3,2}"), "{out}");
        assert!(out.contains("diffeo: #_2 S2xtS3"), "{out}");
    }

    #[test]
    fn classify_variant_b_arithmetic() {
        let (out, _, code) =
            run_to_strings(&["classify", "--variant", "B", "--p", "2", "--m", "2,3,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("zeta_{4,2}"), "{out}");
        assert!(out.contains("S2xS3"), "{out}");
    }

    #[test]
    fn classify_rejects_mixed_inputs() {
        let (_, err, code) = run_to_strings(&["classify", "some.hb", "--variant", "A"]);
        assert_eq!(code, 2);
        assert!(err.contains("not both"), "{err}");
    }

    #[test]
    fn classify_requires_complete_family() {
        let (_, err, code) = run_to_strings(&["classify", "--variant", "A"]);
        assert_eq!(code, 2);
        assert!(err.contains("--variant, --p and --m"), "{err}");
    }

    #[test]
    fn constraint_violation_is_exit_2() {
        let (_, err, code) =
            run_to_strings(&["classify", "--variant", "A", "--p", "1", "--m", "1,3,1"]);
        assert_eq!(code, 2);
        assert!(err.contains("m0 must be >= 2"), "{err}");
    }

    #[test]
    fn equivalent_family_specs() {
        let (out, _, code) = run_to_strings(&["equivalent", "A:p=1:m=5,3,1", "A:p=9:m=5,3,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("equivalent: yes"), "{out}");
        assert!(out.contains("witness"), "{out}");
    }

    #[test]
    fn equivalent_negative_answer_is_exit_1() {
        let (out, _, code) = run_to_strings(&["equivalent", "B:p=1:m=2,3,1", "B:p=2:m=2,3,1"]);
        assert_eq!(code, 1);
        assert!(out.contains("equivalent: no"), "{out}");
        assert!(out.contains("rotation divisor 2 != 4"), "{out}");
    }

    #[test]
    fn bad_input_token_is_exit_2() {
        let (_, err, code) = run_to_strings(&["equivalent", "nosuchfile.hb", "A:p=1:m=5,3,1"]);
        assert_eq!(code, 2);
        assert!(err.contains("neither an existing file"), "{err}");
    }

    #[test]
    fn table_variant_a_all_equal() {
        let (out, _, code) = run_to_strings(&[
            "table",
            "--variant",
            "A",
            "--p",
            "1..10",
            "--m",
            "5,3,1",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("label=zeta_{3,2}").count(), 10, "{out}");
        assert!(out.contains("labels all equal: yes"), "{out}");
        assert!(out.contains("-> met"), "{out}");
    }

    #[test]
    fn table_variant_b_distinct() {
        let (out, _, code) =
            run_to_strings(&["table", "--variant", "B", "--p", "1..5", "--m", "2,3,1"]);
        assert_eq!(code, 0);
        for r in [2, 4, 6, 8, 10] {
            assert!(out.contains(&format!("r={r} ")), "missing r={r} in {out}");
        }
        assert!(out.contains("labels pairwise distinct: yes"), "{out}");
    }

    #[test]
    fn table_degenerate_m1_warns() {
        let (out, _, code) =
            run_to_strings(&["table", "--variant", "B", "--p", "1..5", "--m", "2,1,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("warning:"), "{out}");
        assert!(out.contains("m1=1"), "{out}");
        assert!(out.contains("labels all equal: yes"), "{out}");
    }

    #[test]
    fn automorphism_maps_vectors() {
        let (out, _, code) = run_to_strings(&["automorphism", "--from", "4,6", "--to", "2,0"]);
        assert_eq!(code, 0);
        assert!(out.contains("gcd: 2"), "{out}");
    }

    #[test]
    fn automorphism_gcd_mismatch_is_exit_2() {
        let (_, err, code) = run_to_strings(&["automorphism", "--from", "2,4", "--to", "3,0"]);
        assert_eq!(code, 2);
        assert!(err.contains("gcd mismatch"), "{err}");
    }

    #[test]
    fn text_output_is_byte_stable() {
        let args = &["classify", "--variant", "B", "--p", "3", "--m", "4,5,2", "--n", "2"];
        let (a, _, _) = run_to_strings(args);
        let (b, _, _) = run_to_strings(args);
        assert_eq!(a, b);
        assert!(!a.contains('\u{1b}'), "no ANSI codes without STEINOBD_COLOR=1");
    }

    #[test]
    fn malformed_front_file_reports_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.front");
        std::fs::write(&path, "L1 R1\nL1 Q9 R1\n").unwrap();
        let (_, err, code) = run_to_strings(&["invariants", path.to_str().unwrap()]);
        assert_eq!(code, 2);
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn invariants_of_front_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("trefoil.front");
        std::fs::write(&path, "L1 L2 X1 X1 X1 R2 R1\n").unwrap();
        let (out, _, code) = run_to_strings(&["invariants", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.contains("component 0: tb=1 rot=0 writhe=3"), "{out}");
    }

    #[test]
    fn canonical_round_trips_through_classify() {
        let dir = tempfile::tempdir().unwrap();
        let hb = dir.path().join("model.hb");
        let (out, _, code) = run_to_strings(&["canonical", "3", "2", hb.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.contains("label: zeta_{3,2}"), "{out}");

        let (out, _, code) = run_to_strings(&["classify", hb.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.contains("zeta_{3,2}"), "{out}");

        let (_, _, code) =
            run_to_strings(&["equivalent", hb.to_str().unwrap(), hb.to_str().unwrap()]);
        assert_eq!(code, 0);
    }

    #[test]
    fn canonical_writes_expected_handles() {
        let dir = tempfile::tempdir().unwrap();
        let hb = dir.path().join("flat.hb");
        let (_, _, code) = run_to_strings(&["canonical", "0", "2", hb.to_str().unwrap()]);
        assert_eq!(code, 0);
        let text = std::fs::read_to_string(&hb).unwrap();
        assert_eq!(text.matches("handle tb=-1 rot=0").count(), 2, "{text}");

        // rotation pattern (2, 0, 0) for even r
        let hb = dir.path().join("even.hb");
        run_to_strings(&["canonical", "2", "3", hb.to_str().unwrap()]);
        let text = std::fs::read_to_string(&hb).unwrap();
        assert!(text.contains("handle tb=-3 rot=2"), "{text}");
        assert_eq!(text.matches("handle tb=-1 rot=0").count(), 2, "{text}");
    }

    #[test]
    fn json_output_parses() {
        let (out, _, code) = run_to_strings(&[
            "classify",
            "--json",
            "--variant",
            "A",
            "--p",
            "7",
            "--m",
            "5,3,1",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["kind"], "label");
        assert_eq!(v["result"]["r"], 3);
        assert_eq!(v["result"]["n"], 2);
        assert_eq!(v["result"]["diffeo"], "S2xtS3");
        assert_eq!(v["result"]["c1"], serde_json::json!([0, 3]));
    }
}
