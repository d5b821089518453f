//! Argument parsing and subcommand dispatch.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use roq_core::fixing::{
    affine_complete_descriptor, describe_halfspace, matches_halfspace, recover_affine, satisfies_descriptor,
};
use roq_core::kernel::{intersect_planes, HalfSpace, Hyperplane};
use roq_core::logic::{evaluate_with, parse, Assignment, EvalOptions, Truth, Verdict};
use roq_core::predicates::{canonical_frame, check_frame, classify_triple, FrameWitness, TripleTag};
use roq_core::vonstaudt::{check_witness, encode_rational, point_value, vs_add, vs_multiply};
use serde_json::{json, Value};

use crate::format::{self, to_text};
use crate::suite::{helly_suite, truth_text};
use crate::{exit, render, Failure};

const EXIT_HELP: &str = "\
Exit status:
  0   True, or success
  1   False, or a failed check (no match, not a frame, not satisfied)
  2   Unknown
  3   file could not be read or written
  4   malformed input (JSON, rational, formula syntax, unbound variable)
  5   dimension mismatch
  6   budget exhausted
  7   precondition violated or degenerate configuration
  64  command-line usage error";

#[derive(Parser, Debug)]
#[command(name = "roq", version, about = "Exact spatial logic over rational polytopes", after_help = EXIT_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a formula (or one per line with --batch) under an assignment.
    Eval(EvalArgs),
    /// Classify three half-spaces as a fan, prism or corner.
    Classify { a: PathBuf, b: PathBuf, c: PathBuf },
    /// Check that four half-spaces form a coordinate frame.
    FrameCheck { a: PathBuf, b: PathBuf, c: PathBuf, d: PathBuf },
    /// Segment arithmetic by incidence constructions.
    Vonstaudt {
        #[command(subcommand)]
        op: VonStaudtOp,
    },
    /// Fixing descriptors of half-spaces relative to a frame.
    Fix {
        #[command(subcommand)]
        op: FixOp,
    },
    /// Affine-complete descriptors of regions.
    AffineComplete {
        #[command(subcommand)]
        op: CompleteOp,
    },
    /// Certify the Helly separation and sample convex families.
    Helly(HellyArgs),
    /// Draw a planar region, or a section of a spatial region, as SVG.
    Render(RenderArgs),
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Formula file.
    pub formula: PathBuf,
    #[arg(long)]
    pub dim: usize,
    /// Bind a variable to a region file, as NAME=FILE.
    #[arg(long = "bind", value_name = "NAME=FILE")]
    pub bind: Vec<String>,
    /// Treat every nonempty line not starting with '#' as a formula.
    #[arg(long)]
    pub batch: bool,
    #[arg(long, default_value_t = EvalOptions::default().budget)]
    pub budget: usize,
    #[arg(long, default_value_t = EvalOptions::default().pool_depth)]
    pub pool_depth: usize,
}

#[derive(Args, Debug, Clone)]
pub struct Chart {
    /// Corner plane carrying the construction.
    #[arg(long, default_value_t = 2)]
    pub plane: usize,
    /// Axis inside that plane.
    #[arg(long, default_value_t = 0)]
    pub axis: usize,
}

#[derive(Subcommand, Debug)]
pub enum VonStaudtOp {
    /// Construct a + b.
    Add {
        frame: PathBuf,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        chart: Chart,
    },
    /// Construct a · b.
    Mul {
        frame: PathBuf,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        chart: Chart,
    },
    /// Construct the axis point of a rational from the frame alone.
    Enc {
        frame: PathBuf,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[command(flatten)]
        chart: Chart,
    },
    /// Read off the value of an axis point file.
    Val { frame: PathBuf, point: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum FixOp {
    /// Emit the descriptor of a half-space.
    Describe { frame: PathBuf, halfspace: PathBuf },
    /// Test a candidate half-space against a descriptor.
    Match { frame: PathBuf, descriptor: PathBuf, candidate: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum CompleteOp {
    /// Emit the descriptor of a spatial region.
    Describe { region: PathBuf },
    /// Test a frame and half-space tuple against a descriptor.
    Check {
        descriptor: PathBuf,
        frame: PathBuf,
        halfspaces: Vec<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct HellyArgs {
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub count: usize,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = EvalOptions::default().budget)]
    pub budget: usize,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    pub region: PathBuf,
    /// Section plane normal, comma separated (spatial regions only).
    #[arg(long, allow_hyphen_values = true, requires = "offset")]
    pub normal: Option<String>,
    /// Section plane offset: the plane is normal·x = offset.
    #[arg(long, allow_hyphen_values = true, requires = "normal")]
    pub offset: Option<String>,
    /// Write the SVG here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    exit::TRUE
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    exit::USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string()))
}

fn halfspace_file(path: &Path) -> Result<HalfSpace, Failure> {
    format::parse_halfspace(&read(path)?)
}

fn frame_file(path: &Path) -> Result<FrameWitness, Failure> {
    format::parse_frame(&read(path)?)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Eval(a) => eval(a, out),
        Command::Classify { a, b, c } => {
            let [a, b, c] = [a, b, c].map(|p| halfspace_file(&p));
            let class = classify_triple(&a?, &b?, &c?);
            emit(out, &format!("{} ({} cells)\n", tag_text(class.tag), class.cell_count))?;
            Ok(exit::TRUE)
        }
        Command::FrameCheck { a, b, c, d } => {
            let hs = [a, b, c, d].map(|p| halfspace_file(&p));
            let [a, b, c, d] = hs;
            let (a, b, c, d) = (a?, b?, c?, d?);
            match check_frame(&a, &b, &c, &d) {
                Some(w) => {
                    emit(out, &to_text(&format::frame_json(&w)))?;
                    Ok(exit::TRUE)
                }
                None => {
                    emit(out, &format!("not a frame: {}\n", frame_failure(&a, &b, &c, &d)))?;
                    Ok(exit::FALSE)
                }
            }
        }
        Command::Vonstaudt { op } => vonstaudt(op, out),
        Command::Fix { op } => fix(op, out),
        Command::AffineComplete { op } => complete(op, out),
        Command::Helly(a) => helly(a, out),
        Command::Render(a) => {
            let region = format::parse_region(&read(&a.region)?)?;
            let plane = match (&a.normal, &a.offset) {
                (Some(n), Some(o)) => Some(Hyperplane::new(format::parse_vector_arg(n)?, format::parse_rational(o)?)?),
                _ => None,
            };
            let r = render::render_section(&region, plane.as_ref())?;
            for w in &r.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            match &a.out {
                Some(p) => std::fs::write(p, &r.svg).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
                None => emit(out, &r.svg)?,
            }
            Ok(exit::TRUE)
        }
    }
}

fn tag_text(t: TripleTag) -> &'static str {
    match t {
        TripleTag::Fan => "fan",
        TripleTag::Prism => "prism",
        TripleTag::Corner => "corner",
        TripleTag::Degenerate => "degenerate",
    }
}

fn frame_failure(a: &HalfSpace, b: &HalfSpace, c: &HalfSpace, d: &HalfSpace) -> String {
    let class = classify_triple(a, b, c);
    if class.tag != TripleTag::Corner {
        return format!(
            "the first three half-spaces form a {} ({} cells), not a corner",
            tag_text(class.tag),
            class.cell_count
        );
    }
    let Some(origin) = intersect_planes(&[a.plane(), b.plane(), c.plane()]) else {
        return "the corner planes have no common point".into();
    };
    if d.plane().contains(&origin) {
        return "the fourth plane passes through the origin".into();
    }
    let corner = [a, b, c];
    for j in 0..3 {
        let (p, q) = match j {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let dir = corner[p].plane().normal().cross(corner[q].plane().normal());
        if d.plane().normal().dot(&dir) == num_traits::Zero::zero() {
            return format!("the fourth plane is parallel to axis {j}");
        }
    }
    "the configuration is degenerate".into()
}

fn bindings(dim: usize, binds: &[String]) -> Result<Assignment, Failure> {
    let mut a = Assignment::new();
    for b in binds {
        let (name, path) = b
            .split_once('=')
            .ok_or_else(|| Failure::malformed(format!("binding {b:?} is not NAME=FILE")))?;
        let r = format::parse_region(&read(Path::new(path))?)?;
        if r.dim() != dim {
            return Err(Failure::Dimension { expected: dim, found: r.dim() });
        }
        a.insert(name.trim().to_string(), r);
    }
    Ok(a)
}

fn verdict_json(v: &Verdict) -> Value {
    let witness: BTreeMap<&str, format::RegionJson> =
        v.witness.iter().map(|(n, r)| (n.as_str(), format::region_json(r))).collect();
    json!({
        "value": truth_text(v.value),
        "budget_exhausted": v.budget_exhausted,
        "witness": witness,
    })
}

fn verdict_code(v: &Verdict) -> i32 {
    match v.value {
        Truth::True => exit::TRUE,
        Truth::False => exit::FALSE,
        Truth::Unknown if v.budget_exhausted => exit::BUDGET,
        Truth::Unknown => exit::UNKNOWN,
    }
}

fn eval(a: EvalArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = read(&a.formula)?;
    let assignment = bindings(a.dim, &a.bind)?;
    let options = EvalOptions { budget: a.budget, pool_depth: a.pool_depth };
    if !a.batch {
        let f = parse(text.trim())?;
        let v = evaluate_with(a.dim, &f, &assignment, options)?;
        emit(out, &to_text(&verdict_json(&v)))?;
        return Ok(verdict_code(&v));
    }
    // Worst verdict wins: budget, then Unknown, then False.
    let rank = |c: i32| match c {
        exit::BUDGET => 3,
        exit::UNKNOWN => 2,
        exit::FALSE => 1,
        _ => 0,
    };
    let mut code = exit::TRUE;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f = parse(line).map_err(|e| Failure::malformed(format!("line {}: {e}", i + 1)))?;
        let v = evaluate_with(a.dim, &f, &assignment, options)?;
        let mut record = verdict_json(&v);
        record["line"] = json!(i + 1);
        emit(out, &format!("{}\n", serde_json::to_string(&record).expect("serializable")))?;
        let c = verdict_code(&v);
        if rank(c) > rank(code) {
            code = c;
        }
    }
    Ok(code)
}

fn construction_output(
    point: &roq_core::vonstaudt::AxisPoint,
    certificate: &[roq_core::vonstaudt::ConstructionWitness],
) -> (String, bool) {
    let checked = certificate.iter().all(check_witness);
    let v = json!({
        "point": format::axis_point_json(point),
        "certificate": certificate.iter().map(format::witness_json).collect::<Vec<_>>(),
        "checked": checked,
    });
    (to_text(&v), checked)
}

fn vonstaudt(op: VonStaudtOp, out: &mut dyn Write) -> Result<i32, Failure> {
    let (text, checked) = match op {
        VonStaudtOp::Enc { frame, q, chart } => {
            let f = frame_file(&frame)?;
            let (p, cert) = encode_rational(&f, chart.plane, chart.axis, &format::parse_rational(&q)?)?;
            construction_output(&p, &cert)
        }
        VonStaudtOp::Add { frame, a, b, chart } => binary(&frame, &a, &b, &chart, false)?,
        VonStaudtOp::Mul { frame, a, b, chart } => binary(&frame, &a, &b, &chart, true)?,
        VonStaudtOp::Val { frame, point } => {
            let f = frame_file(&frame)?;
            let p: format::AxisPointJson = format::from_text(&read(&point)?)?;
            let p = format::axis_point_from_json(&f, &p)?;
            let v = point_value(&f, p.axis(), p.marker())?;
            emit(out, &format!("{v}\n"))?;
            return Ok(exit::TRUE);
        }
    };
    emit(out, &text)?;
    Ok(if checked { exit::TRUE } else { exit::FALSE })
}

/// Encodes both operands, then records the one construction combining them.
fn binary(frame: &Path, a: &str, b: &str, chart: &Chart, multiply: bool) -> Result<(String, bool), Failure> {
    let f = frame_file(frame)?;
    let (pa, _) = encode_rational(&f, chart.plane, chart.axis, &format::parse_rational(a)?)?;
    let (pb, _) = encode_rational(&f, chart.plane, chart.axis, &format::parse_rational(b)?)?;
    let (p, w) = if multiply { vs_multiply(&pa, &pb)? } else { vs_add(&pa, &pb)? };
    Ok(construction_output(&p, &[w]))
}

fn fix(op: FixOp, out: &mut dyn Write) -> Result<i32, Failure> {
    match op {
        FixOp::Describe { frame, halfspace } => {
            let d = describe_halfspace(&frame_file(&frame)?, &halfspace_file(&halfspace)?)?;
            emit(out, &to_text(&format::descriptor_json(&d)))?;
            Ok(exit::TRUE)
        }
        FixOp::Match { frame, descriptor, candidate } => {
            let f = frame_file(&frame)?;
            let d = format::descriptor_from_json(&format::from_text(&read(&descriptor)?)?)?;
            let hit = matches_halfspace(&f, &d, &halfspace_file(&candidate)?)?;
            emit(out, if hit { "match\n" } else { "no match\n" })?;
            Ok(if hit { exit::TRUE } else { exit::FALSE })
        }
    }
}

fn complete(op: CompleteOp, out: &mut dyn Write) -> Result<i32, Failure> {
    match op {
        CompleteOp::Describe { region } => {
            let r = format::parse_region(&read(&region)?)?;
            let d = affine_complete_descriptor(&r)?;
            emit(out, &to_text(&format::region_descriptor_json(&d)))?;
            Ok(exit::TRUE)
        }
        CompleteOp::Check { descriptor, frame, halfspaces } => {
            let d = format::region_descriptor_from_json(&format::from_text(&read(&descriptor)?)?)?;
            let f = frame_file(&frame)?;
            let hs = halfspaces.iter().map(|p| halfspace_file(p)).collect::<Result<Vec<_>, _>>()?;
            match satisfies_descriptor(&f, &hs, &d) {
                Some(r) => {
                    let map = recover_affine(&canonical_frame(), &f)?;
                    let v = json!({
                        "region": format::region_json(&r),
                        "map": format::affine_json(&map),
                    });
                    emit(out, &to_text(&v))?;
                    Ok(exit::TRUE)
                }
                None => {
                    emit(out, "not satisfied\n")?;
                    Ok(exit::FALSE)
                }
            }
        }
    }
}

fn helly(a: HellyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let options = EvalOptions { budget: a.budget, ..EvalOptions::default() };
    let report = helly_suite(a.dim, a.count, a.samples, a.seed, options)?;
    let mut text = format!("sentence: {}\n", report.sentence);
    if let Some(v) = &report.verdict {
        let regions: Vec<Value> = v
            .witness
            .iter()
            .map(|(n, r)| json!({ "name": n, "region": format::region_json(r) }))
            .collect();
        text.push_str(&to_text(&json!({ "dim": a.dim + 1, "witness": regions })));
    }
    text.push_str(&format!(
        "{} of {} sampled families met the hypothesis\n",
        report.nonvacuous, report.samples
    ));
    text.push_str(&report.summary());
    text.push('\n');
    emit(out, &text)?;
    if report.verdict.as_ref().is_some_and(|v| v.budget_exhausted && v.value == Truth::Unknown) {
        return Ok(exit::BUDGET);
    }
    Ok(if report.separates() { exit::TRUE } else { exit::FALSE })
}
