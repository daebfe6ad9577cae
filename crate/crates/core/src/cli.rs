//! Command-line front end.
//!
//! Exit codes: 0 when every law passes, 1 when some law fails, 2 on parse,
//! IO or usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::exactla::FieldDesc;
use crate::formats::{
    header_word, load_cayley, load_cosmash, load_dimodule, load_smash, load_structure, parse_structure, read_text,
    write_cayley, write_structure, write_text, ReportDocument, StructureKind,
};
use crate::longdimod::{check_d_equation, check_lemma_identities, check_long_dimodule, d_map};
use crate::loops::{associativity_witness, check_ip_loop, is_associative, loop_algebra, search_ip_loops_budgeted};
use crate::report::{fact, ReportEntry, Side, VerificationReport, Witness};
use crate::smash::{
    build_smash_coproduct, build_smash_product, check_cocommu, check_commu, check_comodcoass, check_modass,
    sweep_cosmash, sweep_smash, theorem_cosmash_roundtrip, theorem_smash_roundtrip, RoundtripReport, SweepSummary,
    DEFAULT_SEED,
};
use crate::structures::{check_antipode_basic, hopf_coquasigroup_suite, hopf_quasigroup_suite, HopfData};

#[derive(Parser, Debug)]
#[command(name = "hopfq", version, about = "Exact checks for Hopf quasigroups, coquasigroups and their modules")]
pub struct Cli {
    /// Coefficient field: `Q` or `F <p>`. Constructions use it; parsed files must agree with it.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<FieldDesc>,

    /// Also write the JSON report document to this path.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,

    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Maximum number of search nodes for `search-loops`.
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindFlag {
    Auto,
    Quasigroup,
    Coquasigroup,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the verification suite for a structure, Cayley or bundle file.
    Verify {
        path: PathBuf,
        /// Suite to run on a structure file; `auto` follows its header.
        #[arg(long, value_enum, default_value_t = KindFlag::Auto)]
        kind: KindFlag,
    },
    /// Write the loop algebra of a Cayley table.
    LoopAlgebra {
        cayley: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Build the smash product of a `smash` bundle, or sweep random inputs.
    Smash {
        #[arg(required_unless_present = "sweep")]
        bundle: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Number of seeded random inputs to sweep instead of reading a bundle.
        #[arg(long, conflicts_with = "bundle")]
        sweep: Option<usize>,
    },
    /// Build the smash coproduct of a `cosmash` bundle, or sweep random inputs.
    Cosmash {
        #[arg(required_unless_present = "sweep")]
        bundle: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, conflicts_with = "bundle")]
        sweep: Option<usize>,
    },
    /// Check the D-equation for the map induced by a dimodule bundle.
    Dequation { bundle: PathBuf },
    /// Enumerate IP loops of order `n` up to isomorphism and write Cayley files.
    SearchLoops {
        n: usize,
        /// Keep only non-associative loops.
        #[arg(long)]
        nonassoc: bool,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Write the dual structure file, swapping the header.
    Dual {
        path: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

fn parse_field(s: &str) -> std::result::Result<FieldDesc, String> {
    FieldDesc::parse(s).map_err(|e| e.to_string())
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses arguments and runs one command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let mut io = Io { out, err };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            match e {
                Error::NotIpLoop(r)
                | Error::PreconditionFailed(r)
                | Error::InvalidInput(r)
                | Error::HypothesisNotMet(r) => {
                    let _ = write!(io.err, "{}", ReportDocument::new("", "", &r).to_text());
                    1
                }
                _ => 2,
            }
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> Result<i32> {
    match &cli.command {
        Command::Verify { path, kind } => verify(cli, io, path, *kind),
        Command::LoopAlgebra { cayley, out } => cmd_loop_algebra(cli, io, cayley, out),
        Command::Smash { bundle, out, sweep } => match (bundle, sweep) {
            (_, Some(count)) => cmd_sweep(cli, io, "smash", sweep_smash(cli.seed, *count, field(cli))),
            (Some(b), None) => cmd_smash(cli, io, b, out.as_deref()),
            (None, None) => unreachable!("clap requires one of them"),
        },
        Command::Cosmash { bundle, out, sweep } => match (bundle, sweep) {
            (_, Some(count)) => cmd_sweep(cli, io, "cosmash", sweep_cosmash(cli.seed, *count, field(cli))),
            (Some(b), None) => cmd_cosmash(cli, io, b, out.as_deref()),
            (None, None) => unreachable!("clap requires one of them"),
        },
        Command::Dequation { bundle } => cmd_dequation(cli, io, bundle),
        Command::SearchLoops { n, nonassoc, limit, out_dir } => cmd_search(cli, io, *n, *nonassoc, *limit, out_dir),
        Command::Dual { path, out } => cmd_dual(cli, io, path, out),
    }
}

fn field(cli: &Cli) -> FieldDesc {
    cli.field.unwrap_or(FieldDesc::Rationals)
}

fn check_field(cli: &Cli, path: &Path, found: FieldDesc) -> Result<()> {
    match cli.field {
        Some(f) if f != found => Err(Error::parse(1, format!("file is over {found}, but --field {f} was given")).with_path(path)),
        _ => Ok(()),
    }
}

fn emit(cli: &Cli, doc: &ReportDocument) -> Result<()> {
    if let Some(p) = &cli.report {
        write_text(p, &doc.to_json())?;
    }
    Ok(())
}

fn code(pass: bool) -> i32 {
    if pass {
        0
    } else {
        1
    }
}

/// The full suite for the declared kind plus the antipode properties.
pub fn structure_suite(h: &HopfData, kind: StructureKind) -> VerificationReport {
    let mut r = match kind {
        StructureKind::Quasigroup => hopf_quasigroup_suite(&h.clone().into()),
        StructureKind::Coquasigroup => hopf_coquasigroup_suite(&h.clone().into()),
    };
    r.extend(check_antipode_basic(h));
    r
}

fn verify(cli: &Cli, io: &mut Io<'_>, path: &Path, kind: KindFlag) -> Result<i32> {
    let text = read_text(path)?;
    let subject = path.display().to_string();
    let (report, notes): (VerificationReport, Vec<(&str, String)>) = match header_word(&text) {
        Some("hopfqg" | "hopfcoqg") => {
            let f = parse_structure(&text).map_err(|e| e.with_path(path))?;
            check_field(cli, path, f.data.field())?;
            let k = match kind {
                KindFlag::Auto => f.kind,
                KindFlag::Quasigroup => StructureKind::Quasigroup,
                KindFlag::Coquasigroup => StructureKind::Coquasigroup,
            };
            (structure_suite(&f.data, k), vec![("kind", k.header().to_string())])
        }
        Some("loop") => {
            let t = load_cayley(path)?;
            let mut r = check_ip_loop(&t);
            let assoc = associativity_witness(&t);
            r.push(ReportEntry {
                informational: true,
                ..fact("loop.assoc", t.order().pow(3), assoc.map(|w| Witness {
                    index: w.to_vec(),
                    lhs: Side { terms: vec![(vec![t.mul(t.mul(w[0], w[1]), w[2])], field(cli).one())] },
                    rhs: Side { terms: vec![(vec![t.mul(w[0], t.mul(w[1], w[2]))], field(cli).one())] },
                }))
            });
            (r, vec![("kind", "loop".into()), ("associative", is_associative(&t).to_string())])
        }
        Some("dimodule") => {
            let d = load_dimodule(path)?;
            check_field(cli, path, d.field())?;
            let mut r = check_long_dimodule(&d);
            r.extend(check_lemma_identities(&d));
            (r, vec![("kind", format!("dimodule {}", d.variant().name()))])
        }
        Some("smash") => {
            let s = load_smash(path)?;
            check_field(cli, path, s.h.field())?;
            let mut r = s.validate();
            r.extend(check_cocommu(&s));
            r.extend(check_modass(&s));
            (r, vec![("kind", "smash".into())])
        }
        Some("cosmash") => {
            let s = load_cosmash(path)?;
            check_field(cli, path, s.h.field())?;
            let mut r = s.validate();
            r.extend(check_commu(&s));
            r.extend(check_comodcoass(&s));
            (r, vec![("kind", "cosmash".into())])
        }
        Some(w @ ("action" | "coaction")) => {
            return Err(Error::parse(1, format!("a bare {w} file needs a bundle naming its Hopf structure")).with_path(path))
        }
        other => {
            return Err(Error::parse(1, format!("unknown file header `{}`", other.unwrap_or(""))).with_path(path));
        }
    };
    let mut doc = ReportDocument::new("verify", subject, &report);
    for (k, v) in notes {
        doc = doc.note(k, v);
    }
    emit(cli, &doc)?;
    write!(io.out, "{}", doc.to_json()).map_err(|e| Error::Io { path: "<stdout>".into(), source: e })?;
    let _ = write!(io.err, "{}", doc.to_text());
    Ok(code(doc.passed()))
}

fn say(io: &mut Io<'_>, text: &str) -> Result<()> {
    io.out.write_all(text.as_bytes()).map_err(|e| Error::Io { path: "<stdout>".into(), source: e })
}

fn cmd_loop_algebra(cli: &Cli, io: &mut Io<'_>, cayley: &Path, out: &Path) -> Result<i32> {
    let t = load_cayley(cayley)?;
    let h = loop_algebra(&t, field(cli))?;
    write_text(out, &write_structure(StructureKind::Quasigroup, &h))?;
    let doc = ReportDocument::new("loop-algebra", cayley.display().to_string(), &check_ip_loop(&t))
        .note("dim", h.dim())
        .note("associative", is_associative(&t));
    emit(cli, &doc)?;
    say(io, &format!("wrote {} (dim {}, field {})\n", out.display(), h.dim(), h.field()))?;
    Ok(0)
}

fn roundtrip_doc(command: &str, subject: String, built: &VerificationReport, rt: Result<RoundtripReport>) -> Result<ReportDocument> {
    let mut report = built.clone();
    let doc = match rt {
        Ok(r) => {
            report.extend(r.condition.clone());
            ReportDocument::new(command, subject, &report)
                .note("antipode_bijective", r.antipode_bijective)
                .note("p", r.p)
                .note("q", r.q)
                .note("theorem", if r.consistent() { "consistent" } else { "DISCREPANCY" })
        }
        Err(Error::HypothesisNotMet(h)) => {
            ReportDocument::new(command, subject, &report).note("theorem", format!("hypotheses not met: {}", h.failed_ids().join(", ")))
        }
        Err(e) => return Err(e),
    };
    Ok(doc)
}

fn cmd_smash(cli: &Cli, io: &mut Io<'_>, bundle: &Path, out: Option<&Path>) -> Result<i32> {
    let input = load_smash(bundle)?;
    check_field(cli, bundle, input.h.field())?;
    let built = build_smash_product(&input)?;
    if let Some(o) = out {
        write_text(o, &write_structure(StructureKind::Quasigroup, &built))?;
    }
    let suite = hopf_quasigroup_suite(&built);
    let doc = roundtrip_doc("smash", bundle.display().to_string(), &suite, theorem_smash_roundtrip(&input))?
        .note("dim", built.dim());
    emit(cli, &doc)?;
    say(io, &doc.to_text())?;
    Ok(code(suite.all_pass()))
}

fn cmd_cosmash(cli: &Cli, io: &mut Io<'_>, bundle: &Path, out: Option<&Path>) -> Result<i32> {
    let input = load_cosmash(bundle)?;
    check_field(cli, bundle, input.h.field())?;
    let built = build_smash_coproduct(&input)?;
    if let Some(o) = out {
        write_text(o, &write_structure(StructureKind::Coquasigroup, &built))?;
    }
    let suite = hopf_coquasigroup_suite(&built);
    let doc = roundtrip_doc("cosmash", bundle.display().to_string(), &suite, theorem_cosmash_roundtrip(&input))?
        .note("dim", built.dim());
    emit(cli, &doc)?;
    say(io, &doc.to_text())?;
    Ok(code(suite.all_pass()))
}

fn cmd_sweep(cli: &Cli, io: &mut Io<'_>, command: &str, s: SweepSummary) -> Result<i32> {
    let ok = s.discrepancies.is_empty() && s.hypothesis_failures == 0;
    let entry = fact(format!("{command}.sweep"), s.total, None);
    let mut report = VerificationReport::new();
    report.push(ReportEntry { pass: ok, failures: s.discrepancies.len(), ..entry });
    let doc = ReportDocument::new(command, format!("seed {}", cli.seed), &report)
        .note("total", s.total)
        .note("p_and_q", s.p_and_q)
        .note("neither", s.neither)
        .note("hypothesis_failures", s.hypothesis_failures)
        .note("discrepancies", format!("{:?}", s.discrepancies));
    emit(cli, &doc)?;
    say(io, &doc.to_text())?;
    Ok(code(ok))
}

fn cmd_dequation(cli: &Cli, io: &mut Io<'_>, bundle: &Path) -> Result<i32> {
    let d = load_dimodule(bundle)?;
    check_field(cli, bundle, d.field())?;
    let mut report = check_long_dimodule(&d);
    let dimodule_ok = report.all_pass();
    let r = d_map(&d);
    let eq = check_d_equation(&r);
    let eq_ok = eq.all_pass();
    report.extend(eq);
    let n = d.dim();
    let shape = if r.is_identity() { "identity".to_string() } else { "non-identity".to_string() };
    let doc = ReportDocument::new("dequation", bundle.display().to_string(), &report)
        .note("R", &shape)
        .note("R_dims", format!("{}x{}", n * n, n * n));
    emit(cli, &doc)?;
    let mut text = format!("R = {shape}; D-equation: {}\n", if eq_ok { "pass" } else { "fail" });
    text.push_str(&format!("R: {0}x{0} on M⊗M, dim M = {1}\n", n * n, n));
    if !dimodule_ok {
        text.push_str(&format!("dimodule laws failing: {}\n", report.failed_ids().join(", ")));
    }
    say(io, &text)?;
    Ok(code(report.all_pass()))
}

fn cmd_search(cli: &Cli, io: &mut Io<'_>, n: usize, nonassoc: bool, limit: Option<usize>, dir: &Path) -> Result<i32> {
    let found = search_ip_loops_budgeted(n, nonassoc, limit, cli.budget)?;
    std::fs::create_dir_all(dir).map_err(|source| Error::Io { path: dir.to_path_buf(), source })?;
    let mut text = String::new();
    for (i, t) in found.iter().enumerate() {
        let p = dir.join(format!("loop{n}-{i}.cayley"));
        write_text(&p, &write_cayley(t))?;
        text.push_str(&format!("{}\n", p.display()));
    }
    text.push_str(&format!("found {} loop(s) of order {n}\n", found.len()));
    let mut report = VerificationReport::new();
    for t in &found {
        report.extend(check_ip_loop(t));
    }
    let doc = ReportDocument::new("search-loops", format!("order {n}"), &report).note("found", found.len());
    emit(cli, &doc)?;
    say(io, &text)?;
    Ok(0)
}

fn cmd_dual(cli: &Cli, io: &mut Io<'_>, path: &Path, out: &Path) -> Result<i32> {
    let f = load_structure(path)?;
    check_field(cli, path, f.data.field())?;
    let kind = match f.kind {
        StructureKind::Quasigroup => StructureKind::Coquasigroup,
        StructureKind::Coquasigroup => StructureKind::Quasigroup,
    };
    write_text(out, &write_structure(kind, &f.data.dual()))?;
    say(io, &format!("wrote {} ({})\n", out.display(), kind.header()))?;
    Ok(0)
}
