//! Line-oriented text formats for structures, (co)actions, Cayley tables and
//! bundles, plus the JSON report document.
//!
//! Every format is sparse: only nonzero entries are listed, one per line, and
//! `#` starts a comment that runs to the end of the line. Writers emit entries
//! in row-major index order so that `write(parse(write(x))) == write(x)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Serialize;

use crate::actions::{ActionData, CoactionData};
use crate::error::{Error, Result};
use crate::exactla::{FieldDesc, Matrix, Scalar, Tensor3, Vector};
use crate::longdimod::{LongDimodule, Variant};
use crate::loops::LoopTable;
use crate::report::{ReportEntry, Side, VerificationReport};
use crate::smash::{CosmashInput, SmashInput};
use crate::structures::{HopfCoquasigroup, HopfData, HopfQuasigroup};

/// Which family a structure file declares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    Quasigroup,
    Coquasigroup,
}

impl StructureKind {
    pub fn header(self) -> &'static str {
        match self {
            StructureKind::Quasigroup => "hopfqg",
            StructureKind::Coquasigroup => "hopfcoqg",
        }
    }

    fn from_header(s: &str) -> Option<Self> {
        match s {
            "hopfqg" => Some(StructureKind::Quasigroup),
            "hopfcoqg" => Some(StructureKind::Coquasigroup),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct StructureFile {
    pub kind: StructureKind,
    pub data: HopfData,
}

impl StructureFile {
    pub fn quasigroup(&self) -> HopfQuasigroup {
        HopfQuasigroup::new(self.data.clone())
    }

    pub fn coquasigroup(&self) -> HopfCoquasigroup {
        HopfCoquasigroup::new(self.data.clone())
    }
}

/// Meaningful lines as `(1-based line number, tokens)`.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let toks: Vec<&str> = l.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn index(line: usize, tok: &str, bound: usize) -> Result<usize> {
    let i: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("bad index `{tok}`")))?;
    if i >= bound {
        return Err(Error::parse(line, format!("index {i} out of range 0..{bound}")));
    }
    Ok(i)
}

fn count(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::parse(line, format!("bad count `{tok}`")))
}

fn scalar(line: usize, field: FieldDesc, tok: &str) -> Result<Scalar> {
    Scalar::parse(field, tok).map_err(|m| Error::parse(line, m))
}

fn expect_len(line: usize, toks: &[&str], n: usize, what: &str) -> Result<()> {
    if toks.len() != n {
        return Err(Error::parse(line, format!("expected {what}")));
    }
    Ok(())
}

/// Entries of a sparse order-3 tensor, rejecting duplicates.
fn set3(t: &mut Tensor3, seen: &mut [bool], line: usize, toks: &[&str]) -> Result<()> {
    let [d0, d1, d2] = t.dims();
    expect_len(line, toks, 4, "`i j k <scalar>`")?;
    let (i, j, k) = (index(line, toks[0], d0)?, index(line, toks[1], d1)?, index(line, toks[2], d2)?);
    let flat = (i * d1 + j) * d2 + k;
    if std::mem::replace(&mut seen[flat], true) {
        return Err(Error::parse(line, format!("duplicate entry {i} {j} {k}")));
    }
    t.set(i, j, k, scalar(line, t.field(), toks[3])?);
    Ok(())
}

fn write_tensor(out: &mut String, t: &Tensor3) {
    for ([i, j, k], s) in t.nonzeros() {
        let _ = writeln!(out, "{i} {j} {k} {s}");
    }
}

// ---------------------------------------------------------------------------
// structure files

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Mu,
    Delta,
    Unit,
    Counit,
    Antipode,
}

impl Section {
    const ALL: [Section; 5] = [Section::Mu, Section::Delta, Section::Unit, Section::Counit, Section::Antipode];

    fn name(self) -> &'static str {
        match self {
            Section::Mu => "mu:",
            Section::Delta => "delta:",
            Section::Unit => "unit:",
            Section::Counit => "counit:",
            Section::Antipode => "antipode:",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Section::ALL.into_iter().find(|x| x.name() == s)
    }
}

pub fn parse_structure(text: &str) -> Result<StructureFile> {
    let mut it = lines(text);
    let (l0, head) = it.next().ok_or_else(|| Error::parse(1, "empty structure file"))?;
    let kind = match head.as_slice() {
        [h] => StructureKind::from_header(h),
        _ => None,
    }
    .ok_or_else(|| Error::parse(l0, "expected header `hopfqg` or `hopfcoqg`"))?;

    let mut field = None;
    let mut dim = None;
    let mut rest = Vec::new();
    for (line, toks) in it.by_ref() {
        match toks[0] {
            "field" => {
                if field.is_some() {
                    return Err(Error::parse(line, "duplicate field line"));
                }
                let f = FieldDesc::parse(&toks[1..].join(" ")).map_err(|e| Error::parse(line, e.to_string()))?;
                field = Some(f);
            }
            "dim" => {
                expect_len(line, &toks, 2, "`dim <n>`")?;
                if dim.is_some() {
                    return Err(Error::parse(line, "duplicate dim line"));
                }
                dim = Some(count(line, toks[1])?);
            }
            _ => {
                rest.push((line, toks));
                break;
            }
        }
    }
    let field = field.ok_or_else(|| Error::parse(l0, "missing `field` line"))?;
    let n = dim.ok_or_else(|| Error::parse(l0, "missing `dim` line"))?;

    let mut mu = Tensor3::zeros(field, n, n, n);
    let mut delta = Tensor3::zeros(field, n, n, n);
    let mut unit = Vector::zeros(field, n);
    let mut counit = Vector::zeros(field, n);
    let mut antipode = Matrix::zeros(field, n, n);
    let mut seen_mu = vec![false; n * n * n];
    let mut seen_delta = vec![false; n * n * n];
    let mut seen_vec = [vec![false; n], vec![false; n]];
    let mut seen_s = vec![false; n * n];
    let mut done: Vec<Section> = Vec::new();
    let mut current: Option<Section> = None;

    for (line, toks) in rest.into_iter().chain(it) {
        if let Some(sec) = Section::from_name(toks[0]) {
            expect_len(line, &toks, 1, "a section header on its own line")?;
            if done.contains(&sec) {
                return Err(Error::parse(line, format!("duplicate section `{}`", sec.name())));
            }
            done.push(sec);
            current = Some(sec);
            continue;
        }
        let sec = current.ok_or_else(|| Error::parse(line, format!("unexpected `{}` before any section", toks[0])))?;
        match sec {
            Section::Mu => set3(&mut mu, &mut seen_mu, line, &toks)?,
            Section::Delta => set3(&mut delta, &mut seen_delta, line, &toks)?,
            Section::Unit | Section::Counit => {
                expect_len(line, &toks, 2, "`i <scalar>`")?;
                let i = index(line, toks[0], n)?;
                let slot = usize::from(sec == Section::Counit);
                if std::mem::replace(&mut seen_vec[slot][i], true) {
                    return Err(Error::parse(line, format!("duplicate entry {i}")));
                }
                let s = scalar(line, field, toks[1])?;
                if sec == Section::Unit { unit.set(i, s) } else { counit.set(i, s) }
            }
            Section::Antipode => {
                expect_len(line, &toks, 3, "`i j <scalar>`")?;
                let (i, j) = (index(line, toks[0], n)?, index(line, toks[1], n)?);
                if std::mem::replace(&mut seen_s[i * n + j], true) {
                    return Err(Error::parse(line, format!("duplicate entry {i} {j}")));
                }
                antipode.set(i, j, scalar(line, field, toks[2])?);
            }
        }
    }
    if let Some(missing) = Section::ALL.into_iter().find(|s| !done.contains(s)) {
        let last = text.lines().count().max(1);
        return Err(Error::parse(last, format!("missing section `{}`", missing.name())));
    }
    let data = HopfData::from_tensors(mu, unit, delta, counit, antipode).map_err(|e| Error::parse(l0, e.to_string()))?;
    Ok(StructureFile { kind, data })
}

pub fn write_structure(kind: StructureKind, h: &HopfData) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", kind.header());
    let _ = writeln!(out, "field {}", h.field());
    let _ = writeln!(out, "dim {}", h.dim());
    out.push_str("mu:\n");
    write_tensor(&mut out, h.algebra().mu());
    out.push_str("delta:\n");
    write_tensor(&mut out, h.coalgebra().delta());
    out.push_str("unit:\n");
    for (i, s) in h.algebra().unit().nonzeros() {
        let _ = writeln!(out, "{i} {s}");
    }
    out.push_str("counit:\n");
    for (i, s) in h.coalgebra().counit().nonzeros() {
        let _ = writeln!(out, "{i} {s}");
    }
    out.push_str("antipode:\n");
    let s = h.antipode();
    for i in 0..s.rows() {
        for j in 0..s.cols() {
            let c = s.get(i, j);
            if !c.is_zero() {
                let _ = writeln!(out, "{i} {j} {c}");
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// action and coaction files

fn parse_rho(text: &str, field: FieldDesc, header: &str) -> Result<(Tensor3, usize, usize)> {
    let mut it = lines(text);
    let (l0, head) = it.next().ok_or_else(|| Error::parse(1, format!("empty {header} file")))?;
    if head.len() != 3 || head[0] != header {
        return Err(Error::parse(l0, format!("expected header `{header} <dim> <dim>`")));
    }
    let (a, b) = (count(l0, head[1])?, count(l0, head[2])?);
    let mut t = if header == "action" {
        Tensor3::zeros(field, a, b, b)
    } else {
        Tensor3::zeros(field, a, a, b)
    };
    let [d0, d1, d2] = t.dims();
    let mut seen = vec![false; d0 * d1 * d2];
    for (line, toks) in it {
        set3(&mut t, &mut seen, line, &toks)?;
    }
    Ok((t, a, b))
}

/// `action <H_dim> <M_dim>` followed by `h m m' <scalar>` entries.
pub fn parse_action(text: &str, field: FieldDesc) -> Result<ActionData> {
    let (t, _, _) = parse_rho(text, field, "action")?;
    ActionData::new(t)
}

pub fn write_action(act: &ActionData) -> String {
    let mut out = format!("action {} {}\n", act.h_dim(), act.m_dim());
    write_tensor(&mut out, act.rho());
    out
}

/// `coaction <M_dim> <H_dim>` followed by `m m' h <scalar>` entries.
pub fn parse_coaction(text: &str, field: FieldDesc) -> Result<CoactionData> {
    let (t, _, _) = parse_rho(text, field, "coaction")?;
    CoactionData::new(t)
}

pub fn write_coaction(co: &CoactionData) -> String {
    let mut out = format!("coaction {} {}\n", co.m_dim(), co.h_dim());
    write_tensor(&mut out, co.rho());
    out
}

// ---------------------------------------------------------------------------
// Cayley files

pub fn parse_cayley(text: &str) -> Result<LoopTable> {
    let mut it = lines(text);
    let (l0, head) = it.next().ok_or_else(|| Error::parse(1, "empty Cayley file"))?;
    if head.len() != 2 || head[0] != "loop" {
        return Err(Error::parse(l0, "expected header `loop <n>`"));
    }
    let n = count(l0, head[1])?;
    let mut rows = Vec::with_capacity(n);
    for (line, toks) in it {
        if rows.len() == n {
            return Err(Error::parse(line, format!("more than {n} rows")));
        }
        if toks.len() != n {
            return Err(Error::parse(line, format!("row has {} entries, expected {n}", toks.len())));
        }
        rows.push(toks.iter().map(|t| index(line, t, n)).collect::<Result<Vec<_>>>()?);
    }
    if rows.len() != n {
        return Err(Error::parse(text.lines().count().max(1), format!("expected {n} rows, found {}", rows.len())));
    }
    LoopTable::from_rows(rows).map_err(|e| Error::parse(l0, e.to_string()))
}

pub fn write_cayley(t: &LoopTable) -> String {
    let mut out = format!("loop {}\n", t.order());
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// bundles

/// Header and three path lines, paths kept as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub header: Vec<String>,
    pub paths: [PathBuf; 3],
}

pub fn parse_bundle(text: &str) -> Result<Bundle> {
    let mut it = lines(text);
    let (_, head) = it.next().ok_or_else(|| Error::parse(1, "empty bundle file"))?;
    let mut paths = Vec::new();
    for (line, toks) in it {
        if paths.len() == 3 {
            return Err(Error::parse(line, "a bundle lists exactly three paths"));
        }
        paths.push(PathBuf::from(toks.join(" ")));
    }
    let paths: [PathBuf; 3] = paths
        .try_into()
        .map_err(|p: Vec<PathBuf>| Error::parse(text.lines().count().max(1), format!("expected 3 paths, found {}", p.len())))?;
    Ok(Bundle { header: head.into_iter().map(String::from).collect(), paths })
}

pub fn write_bundle(b: &Bundle) -> String {
    let mut out = b.header.join(" ");
    out.push('\n');
    for p in &b.paths {
        out.push_str(&p.display().to_string());
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// loading from disk

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

/// First meaningful token of a file, used to dispatch on its format.
pub fn header_word(text: &str) -> Option<&str> {
    lines(text).next().map(|(_, t)| t[0])
}

pub fn load_structure(path: &Path) -> Result<StructureFile> {
    parse_structure(&read_text(path)?).map_err(|e| e.with_path(path))
}

pub fn load_cayley(path: &Path) -> Result<LoopTable> {
    parse_cayley(&read_text(path)?).map_err(|e| e.with_path(path))
}

pub fn load_action(path: &Path, field: FieldDesc) -> Result<ActionData> {
    parse_action(&read_text(path)?, field).map_err(|e| e.with_path(path))
}

pub fn load_coaction(path: &Path, field: FieldDesc) -> Result<CoactionData> {
    parse_coaction(&read_text(path)?, field).map_err(|e| e.with_path(path))
}

fn load_bundle(path: &Path) -> Result<(Bundle, [PathBuf; 3])> {
    let b = parse_bundle(&read_text(path)?).map_err(|e| e.with_path(path))?;
    let base = path.parent().unwrap_or(Path::new(""));
    let resolved = b.paths.clone().map(|p| base.join(p));
    Ok((b, resolved))
}

fn header_error(path: &Path, msg: &str) -> Error {
    Error::parse(1, msg).with_path(path)
}

/// `dimodule <variant>` followed by the Hopf structure, action and coaction paths.
pub fn load_dimodule(path: &Path) -> Result<LongDimodule> {
    let (b, [hp, ap, cp]) = load_bundle(path)?;
    let variant = match b.header.as_slice() {
        [d, v] if d == "dimodule" => Variant::parse(v),
        _ => None,
    }
    .ok_or_else(|| header_error(path, "expected header `dimodule quasigroup|coquasigroup`"))?;
    let h = load_structure(&hp)?;
    let act = load_action(&ap, h.data.field())?;
    let co = load_coaction(&cp, h.data.field())?;
    LongDimodule::new(variant, Arc::new(h.data), act, co)
}

/// `smash` followed by the `H` structure, `A` structure and action paths.
pub fn load_smash(path: &Path) -> Result<SmashInput> {
    let (b, [hp, ap, actp]) = load_bundle(path)?;
    if b.header != ["smash"] {
        return Err(header_error(path, "expected header `smash`"));
    }
    let (h, a) = (load_structure(&hp)?, load_structure(&ap)?);
    let act = load_action(&actp, h.data.field())?;
    SmashInput::new(h.quasigroup(), a.quasigroup(), act)
}

/// `cosmash` followed by the `H` structure, `C` structure and coaction paths.
pub fn load_cosmash(path: &Path) -> Result<CosmashInput> {
    let (b, [hp, cp, cop]) = load_bundle(path)?;
    if b.header != ["cosmash"] {
        return Err(header_error(path, "expected header `cosmash`"));
    }
    let (h, c) = (load_structure(&hp)?, load_structure(&cp)?);
    let co = load_coaction(&cop, h.data.field())?;
    CosmashInput::new(h.coquasigroup(), c.coquasigroup(), co)
}

// ---------------------------------------------------------------------------
// report document

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TermDoc {
    pub basis: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WitnessDoc {
    pub index: Vec<usize>,
    pub lhs: Vec<TermDoc>,
    pub rhs: Vec<TermDoc>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LawDoc {
    pub id: String,
    pub status: &'static str,
    pub informational: bool,
    pub checked: usize,
    pub failures: usize,
    pub witness: Option<WitnessDoc>,
}

/// Machine-readable form of a [`VerificationReport`]. Field order is fixed by
/// declaration order, so equal reports serialize to equal bytes.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportDocument {
    pub command: String,
    pub subject: String,
    pub verdict: &'static str,
    pub laws: Vec<LawDoc>,
    pub notes: BTreeMap<String, String>,
}

fn side_doc(s: &Side) -> Vec<TermDoc> {
    s.terms
        .iter()
        .map(|(b, c)| TermDoc { basis: b.clone(), coeff: c.to_string() })
        .collect()
}

fn law_doc(e: &ReportEntry) -> LawDoc {
    LawDoc {
        id: e.law_id.clone(),
        status: if e.pass { "pass" } else { "fail" },
        informational: e.informational,
        checked: e.checked,
        failures: e.failures,
        witness: e.witness.as_ref().map(|w| WitnessDoc {
            index: w.index.clone(),
            lhs: side_doc(&w.lhs),
            rhs: side_doc(&w.rhs),
        }),
    }
}

impl ReportDocument {
    pub fn new(command: impl Into<String>, subject: impl Into<String>, report: &VerificationReport) -> Self {
        ReportDocument {
            command: command.into(),
            subject: subject.into(),
            verdict: if report.all_pass() { "pass" } else { "fail" },
            laws: report.entries().iter().map(law_doc).collect(),
            notes: BTreeMap::new(),
        }
    }

    pub fn note(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.notes.insert(key.into(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per law, failures with their witness index.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.laws {
            let tag = if l.informational { " (informational)" } else { "" };
            let _ = write!(out, "{}: {}{tag}", l.id, l.status);
            if let Some(w) = &l.witness {
                let _ = write!(out, " at {:?}, {} of {} failing", w.index, l.failures, l.checked);
            }
            out.push('\n');
        }
        for (k, v) in &self.notes {
            let _ = writeln!(out, "{k}: {v}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, group_algebra, loop7, octonion_units, s3};
    use crate::loops::loop_algebra;

    const Q: FieldDesc = FieldDesc::Rationals;

    #[test]
    fn structure_round_trip() {
        for t in [cyclic(2), s3(), loop7()] {
            let h = loop_algebra(&t, Q).unwrap();
            let text = write_structure(StructureKind::Quasigroup, &h);
            let back = parse_structure(&text).unwrap();
            assert_eq!(back.kind, StructureKind::Quasigroup);
            assert!(back.data.same_tensors(&h));
            assert_eq!(write_structure(back.kind, &back.data), text);
        }
        let dual = h_dual();
        let text = write_structure(StructureKind::Coquasigroup, &dual);
        assert_eq!(write_structure(StructureKind::Coquasigroup, &parse_structure(&text).unwrap().data), text);
    }

    fn h_dual() -> HopfData {
        group_algebra(&s3(), FieldDesc::prime(5).unwrap()).dual()
    }

    #[test]
    fn structure_header_and_comments() {
        let text = "# C2\nhopfqg\nfield F 3  # small\ndim 2\nmu:\n0 0 0 1\n0 1 1 1\n1 0 1 1\n1 1 0 1\n\
                    delta:\n0 0 0 1\n1 1 1 1\nunit:\n0 1\ncounit:\n0 1\n1 4\nantipode:\n0 0 1\n1 1 1\n";
        let f = parse_structure(text).unwrap();
        assert_eq!(f.data.field(), FieldDesc::Prime(3));
        assert!(f.data.eps_basis(1).is_one());
    }

    #[test]
    fn structure_errors_carry_lines() {
        let bad = "hopfqg\nfield Q\ndim 2\nmu:\n0 0 2 1\n";
        let e = parse_structure(bad).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }), "{e}");
        let e = parse_structure("hopfqg\nfield Q\ndim 1\nmu:\n0 0 0 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }), "{e}");
        let e = parse_structure("hopf\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_structure("hopfqg\nfield Q\ndim 1\nmu:\nunit:\n").unwrap_err();
        assert!(e.to_string().contains("missing section"), "{e}");
        let e = parse_structure("hopfqg\nfield Q\ndim 1\nmu:\n0 0 0 1\n0 0 0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 6, .. }), "{e}");
        let e = parse_structure("hopfqg\nfield F 4\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
    }

    #[test]
    fn action_round_trip() {
        let h = group_algebra(&s3(), Q);
        let act = ActionData::regular(&h);
        let text = write_action(&act);
        let back = parse_action(&text, Q).unwrap();
        assert!(back.same_tensor(&act));
        assert_eq!(write_action(&back), text);
        let co = CoactionData::from_action(&act);
        let text = write_coaction(&co);
        assert_eq!(write_coaction(&parse_coaction(&text, Q).unwrap()), text);
        assert!(parse_action("action 2 2\n0 0 2 1\n", Q).is_err());
        assert!(parse_action("coaction 2 2\n", Q).is_err());
    }

    #[test]
    fn cayley_round_trip() {
        for t in [cyclic(1), loop7(), octonion_units()] {
            let text = write_cayley(&t);
            let back = parse_cayley(&text).unwrap();
            assert_eq!(back, t);
            assert_eq!(write_cayley(&back), text);
        }
        let e = parse_cayley("loop 2\n0 1\n1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let not_latin = parse_cayley("loop 2\n0 1\n1 1\n").unwrap();
        assert!(!crate::loops::check_ip_loop(&not_latin).all_pass());
        assert!(parse_cayley("loop 2\n0 1\n1 2\n").is_err());
    }

    #[test]
    fn bundle_round_trip() {
        let text = "dimodule quasigroup\nh.hq\nm.act\nm.coact\n";
        let b = parse_bundle(text).unwrap();
        assert_eq!(b.header, ["dimodule", "quasigroup"]);
        assert_eq!(write_bundle(&b), text);
        assert!(parse_bundle("smash\na\nb\n").is_err());
    }

    #[test]
    fn report_document_is_stable() {
        let h = HopfQuasigroup::new(loop_algebra(&loop7(), Q).unwrap().dual());
        let r = crate::structures::hopf_quasigroup_suite(&h);
        let a = ReportDocument::new("verify", "x", &r).to_json();
        let b = ReportDocument::new("verify", "x", &r).to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["verdict"], "fail");
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 5);
    }
}
