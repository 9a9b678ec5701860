//! The subcommands, as functions from a [`RunSpec`] to a report.

use std::fmt::Write as _;
use std::sync::Arc;

use constacyclic_core::codes::ConstacyclicCode;
use constacyclic_core::distance::{certify, CertifyOptions};
use constacyclic_core::families::{closed_form_bounds, Bound, Family, FamilyParams};
use constacyclic_core::galois::{FieldSpec, Tower};
use constacyclic_core::qadic::{wt, wt_q, IndexUniverse};
use constacyclic_core::Error;
use serde::Serialize;

use crate::dto::{split_q, CodeDescriptor, DistanceDto, FamilyDescriptor, ReportDto};
use crate::exec::Rayon;
use crate::runspec::{Command, Format, Preset, RunSpec};
use crate::tables::{table, Published};

/// Operation budget per table entry unless `--extended` is given.
pub const DESK_BUDGET: u64 = 10_000_000_000;
const ISD_ROUNDS: u64 = 256;
const ISD_ROUNDS_EXTENDED: u64 = 4096;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("invalid run spec or descriptor: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(Error::BudgetExceeded { .. }) => 3,
            AppError::Core(_) | AppError::Usage(_) | AppError::Json(_) => 2,
            AppError::Csv(_) | AppError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    BudgetExhausted,
    Mismatch,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::BudgetExhausted => 3,
            Status::Mismatch => 4,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldReport {
    pub p: u32,
    pub s: u32,
    pub q: u64,
    pub m: u32,
    pub r: u64,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub n: u64,
    pub modulus: Vec<u32>,
    pub modulus_pretty: String,
    /// `λ = β^n` as a `GF(q)` label.
    pub lambda_label: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct CosetRow {
    pub leader: u64,
    pub size: usize,
    pub wt_q: u64,
    pub wt: u32,
    pub members: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CosetReport {
    pub q: u64,
    pub m: u32,
    pub r: u64,
    pub residue: u64,
    pub n: u64,
    pub cosets: Vec<CosetRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelfDualDto {
    pub defining_set: bool,
    pub gram: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructReport {
    pub family: FamilyDescriptor,
    pub code: CodeDescriptor,
    pub defining_set: Vec<u64>,
    pub closed_form: ReportDto,
    pub self_dual: SelfDualDto,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertifyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyDescriptor>,
    pub dual: bool,
    pub code: CodeDescriptor,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ReportDto>,
    pub result: DistanceDto,
}

#[derive(Debug, Clone, Serialize)]
pub struct SideReport {
    pub n: u64,
    pub k: u64,
    pub d_published: u64,
    pub label: &'static str,
    pub lower: u64,
    pub upper: u64,
    /// `exact` or `lower-bound-only`.
    pub status: &'static str,
    pub mismatch: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRowReport {
    pub q: u64,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    pub code: SideReport,
    pub dual: SideReport,
    pub ours_exact: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub table: u8,
    pub budget: u64,
    pub rows: Vec<TableRowReport>,
    pub mismatches: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelfDualEntry {
    pub family: String,
    pub n: u64,
    pub k: u64,
    pub defining_set: bool,
    pub gram: bool,
    pub self_dual: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelfDualReport {
    pub q: u64,
    pub m: u32,
    pub entries: Vec<SelfDualEntry>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Output {
    Field(FieldReport),
    Cosets(CosetReport),
    Construct(Box<ConstructReport>),
    Certify(Box<CertifyReport>),
    Table(TableReport),
    SelfDual(SelfDualReport),
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub output: Output,
    pub status: Status,
}

/// The tower for `spec` under the run's preset or explicit modulus.
pub fn tower_for(spec: FieldSpec, run: &RunSpec) -> Result<Arc<Tower>, AppError> {
    let t = match (&run.modulus, run.preset) {
        (Some(f), _) => Tower::new(spec, Some(f))?,
        (None, Preset::Paper) => Tower::with_reference_preset(spec)?,
        (None, Preset::Auto) => Tower::new(spec, None)?,
    };
    Ok(Arc::new(t))
}

fn build(params: &FamilyParams, run: &RunSpec) -> Result<ConstacyclicCode, AppError> {
    let tower = tower_for(params.field_spec()?, run)?;
    Ok(params.build(tower)?)
}

pub fn execute(run: &RunSpec) -> Result<Outcome, AppError> {
    let ok = |output| Outcome {
        output,
        status: Status::Ok,
    };
    match &run.command {
        Command::Field { q, m, r } => Ok(ok(Output::Field(field(*q, *m, *r, run)?))),
        Command::Cosets { q, m, r, residue } => Ok(ok(Output::Cosets(cosets(*q, *m, *r, *residue)?))),
        Command::Construct { family } => Ok(ok(Output::Construct(Box::new(construct(family, run)?)))),
        Command::Certify {
            family,
            descriptor,
            dual,
        } => {
            let report = certify_cmd(family.as_ref(), descriptor.as_deref(), *dual, run)?;
            let status = if report.result.exact {
                Status::Ok
            } else {
                Status::BudgetExhausted
            };
            Ok(Outcome {
                output: Output::Certify(Box::new(report)),
                status,
            })
        }
        Command::Table { id } => {
            let report = table_cmd(*id, run)?;
            let status = if report.mismatches > 0 {
                Status::Mismatch
            } else {
                Status::Ok
            };
            Ok(Outcome {
                output: Output::Table(report),
                status,
            })
        }
        Command::SelfdualScan { q, m } => Ok(ok(Output::SelfDual(selfdual_scan(*q, *m, run)?))),
    }
}

fn pretty_prime_poly(c: &[u32]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| {
            let coef = if a == 1 && i > 0 { String::new() } else { a.to_string() };
            match i {
                0 => a.to_string(),
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            }
        })
        .collect();
    terms.join(" + ")
}

fn field(q: u64, m: u32, r: u64, run: &RunSpec) -> Result<FieldReport, AppError> {
    let (p, s) = split_q(q)?;
    let t = tower_for(FieldSpec::new(p, s, m, r)?, run)?;
    let spec = t.spec();
    Ok(FieldReport {
        p,
        s,
        q,
        m,
        r,
        big_n: spec.big_n(),
        n: spec.n(),
        modulus: t.modulus().to_vec(),
        modulus_pretty: pretty_prime_poly(t.modulus()),
        lambda_label: t.label(t.lambda()).expect("λ lies in GF(q)"),
    })
}

fn cosets(q: u64, m: u32, r: u64, residue: u64) -> Result<CosetReport, AppError> {
    split_q(q)?;
    if m == 0 || (q as f64).powi(m as i32) > 1e8 {
        return Err(AppError::Usage(format!("q^m must be at most 1e8 to list cosets, got q = {q}, m = {m}")));
    }
    let u = IndexUniverse::new(q, m, r, residue)?;
    let cosets = u
        .gamma_t
        .iter()
        .map(|&l| {
            let mut members = u.coset(l).members;
            members.sort_unstable();
            CosetRow {
                leader: l,
                size: members.len(),
                wt_q: wt_q(l, q),
                wt: wt(l, q),
                members,
            }
        })
        .collect();
    Ok(CosetReport {
        q,
        m,
        r,
        residue: u.residue,
        n: u.n(),
        cosets,
    })
}

fn construct(family: &FamilyDescriptor, run: &RunSpec) -> Result<ConstructReport, AppError> {
    let params = family.to_params()?;
    let code = build(&params, run)?;
    let sd = code.self_duality();
    Ok(ConstructReport {
        family: FamilyDescriptor::from_params(&params),
        code: CodeDescriptor::from_code(&code),
        defining_set: code.defining_set().members().to_vec(),
        closed_form: ReportDto::new(&closed_form_bounds(&params)?),
        self_dual: SelfDualDto {
            defining_set: sd.defining_set,
            gram: sd.gram,
        },
    })
}

fn options(run: &RunSpec, budget: u64) -> CertifyOptions {
    CertifyOptions {
        budget,
        isd_iterations: if run.extended { ISD_ROUNDS_EXTENDED } else { ISD_ROUNDS },
        ..CertifyOptions::default()
    }
}

fn hints(bound: Option<&Bound>) -> Vec<Bound> {
    bound.into_iter().cloned().collect()
}

fn certify_cmd(
    family: Option<&FamilyDescriptor>,
    descriptor: Option<&std::path::Path>,
    dual: bool,
    run: &RunSpec,
) -> Result<CertifyReport, AppError> {
    let (code, params) = match (family, descriptor) {
        (Some(f), None) => {
            let params = f.to_params()?;
            (build(&params, run)?, Some(params))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let d: CodeDescriptor = serde_json::from_str(&text)?;
            (d.to_code()?, None)
        }
        _ => return Err(AppError::Usage(String::from("certify needs exactly one of a family or --descriptor"))),
    };
    let report = params.as_ref().map(closed_form_bounds).transpose()?;
    let (target, bound) = match (&report, dual) {
        (Some(r), false) => (code.clone(), r.distance.as_ref()),
        (Some(r), true) => (code.dual(), r.dual_distance.as_ref()),
        (None, false) => (code.clone(), None),
        (None, true) => (code.dual(), None),
    };
    let result = certify(&target, &hints(bound), &options(run, run.budget), &Rayon)?;
    Ok(CertifyReport {
        family: params.as_ref().map(FamilyDescriptor::from_params),
        dual,
        code: CodeDescriptor::from_code(&target),
        closed_form: report.as_ref().map(ReportDto::new),
        result: DistanceDto::new(&result),
    })
}

fn side_report(code: &ConstacyclicCode, bound: Option<&Bound>, published: &Published, run: &RunSpec, budget: u64) -> Result<SideReport, AppError> {
    let r = certify(code, &hints(bound), &options(run, budget), &Rayon)?;
    let mut mismatch = Vec::new();
    if (r.n, r.k) != (published.n, published.k) {
        mismatch.push(format!("[n, k] = [{}, {}], published [{}, {}]", r.n, r.k, published.n, published.k));
    }
    if r.exact && r.lower != published.d {
        mismatch.push(format!("exact d = {}, published {}", r.lower, published.d));
    }
    if !r.exact && !(r.lower <= published.d && published.d <= r.upper) {
        mismatch.push(format!("bounds [{}, {}] exclude published d = {}", r.lower, r.upper, published.d));
    }
    Ok(SideReport {
        n: r.n,
        k: r.k,
        d_published: published.d,
        label: published.label,
        lower: r.lower,
        upper: r.upper,
        status: if r.exact { "exact" } else { "lower-bound-only" },
        mismatch,
    })
}

/// Recomputes one published row for one family instance.
pub fn table_row(id: u8, params: &FamilyParams, code_pub: &Published, dual_pub: &Published, run: &RunSpec) -> Result<TableRowReport, AppError> {
    let budget = if run.extended { run.budget } else { run.budget.min(DESK_BUDGET) };
    let code = build(params, run)?;
    let report = closed_form_bounds(params)?;
    let c = side_report(&code, report.distance.as_ref(), code_pub, run, budget)?;
    let d = side_report(&code.dual(), report.dual_distance.as_ref(), dual_pub, run, budget)?;
    Ok(TableRowReport {
        q: params.q,
        m: params.m,
        ell: match params.family {
            Family::QWeight(l) if id == 2 => Some(l),
            _ => None,
        },
        ours_exact: c.status == "exact" && d.status == "exact",
        code: c,
        dual: d,
    })
}

fn table_cmd(id: u8, run: &RunSpec) -> Result<TableReport, AppError> {
    let rows = table(id).ok_or_else(|| AppError::Usage(format!("table id must be 1 or 2, got {id}")))?;
    let mut out = Vec::new();
    for row in rows {
        let families: Vec<Family> = if id == 1 {
            vec![Family::Parity(1)]
        } else {
            row.ells.iter().map(|&l| Family::QWeight(l)).collect()
        };
        for f in families {
            let params = FamilyParams::new(f, row.q, row.m)?;
            out.push(table_row(id, &params, &row.code, &row.dual, run)?);
        }
    }
    let mismatches = out
        .iter()
        .filter(|r| !r.code.mismatch.is_empty() || !r.dual.mismatch.is_empty())
        .count();
    Ok(TableReport {
        table: id,
        budget: if run.extended { run.budget } else { run.budget.min(DESK_BUDGET) },
        rows: out,
        mismatches,
    })
}

fn selector_vectors(m: u32) -> Vec<Vec<u32>> {
    let half = m / 2;
    (0..1u32 << half)
        .map(|bits| {
            (0..half)
                .map(|i| if bits >> i & 1 == 1 { m - 1 - i } else { i })
                .collect()
        })
        .collect()
}

fn selfdual_scan(q: u64, m: u32, run: &RunSpec) -> Result<SelfDualReport, AppError> {
    let mut fams = Vec::new();
    if q % 2 == 1 {
        fams.push(Family::Parity(0));
        fams.push(Family::Parity(1));
    }
    if q == 3 && m >= 4 && m % 2 == 0 {
        fams.extend(selector_vectors(m).into_iter().map(Family::S4));
    }
    if fams.is_empty() {
        return Err(AppError::Usage(format!("no scanned family applies to q = {q}, m = {m}")));
    }
    let mut entries = Vec::new();
    for f in fams {
        let params = FamilyParams::new(f, q, m)?;
        let code = build(&params, run)?;
        let sd = code.self_duality();
        entries.push(SelfDualEntry {
            family: params.tag(),
            n: code.n() as u64,
            k: code.k() as u64,
            defining_set: sd.defining_set,
            gram: sd.gram,
            self_dual: sd.is_self_dual(),
        });
    }
    Ok(SelfDualReport { q, m, entries })
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl Output {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> Result<String, AppError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match self {
            Output::Field(f) => {
                w.write_record(["p", "s", "q", "m", "r", "N", "n", "modulus", "lambda_label"])?;
                w.write_record([
                    f.p.to_string(),
                    f.s.to_string(),
                    f.q.to_string(),
                    f.m.to_string(),
                    f.r.to_string(),
                    f.big_n.to_string(),
                    f.n.to_string(),
                    join(&f.modulus, " "),
                    f.lambda_label.to_string(),
                ])?;
            }
            Output::Cosets(c) => {
                w.write_record(["leader", "size", "wt_q", "wt", "members"])?;
                for row in &c.cosets {
                    w.write_record([
                        row.leader.to_string(),
                        row.size.to_string(),
                        row.wt_q.to_string(),
                        row.wt.to_string(),
                        join(&row.members, " "),
                    ])?;
                }
            }
            Output::Construct(c) => {
                w.write_record(["family", "q", "m", "n", "k", "leaders", "generator", "d_lb", "dual_d_lb"])?;
                w.write_record([
                    c.closed_form.family.clone(),
                    c.family.q.to_string(),
                    c.family.m.to_string(),
                    c.code.n.to_string(),
                    c.code.k.to_string(),
                    join(&c.code.leaders, " "),
                    c.code.generator.pretty.clone(),
                    c.closed_form.distance_lb.as_ref().map_or(String::new(), |b| b.certified.to_string()),
                    c.closed_form.dual_distance_lb.as_ref().map_or(String::new(), |b| b.certified.to_string()),
                ])?;
            }
            Output::Certify(c) => {
                w.write_record(["n", "k", "lower", "upper", "exact", "methods"])?;
                let methods: Vec<&str> = c.result.method_trace.iter().map(|t| t.method.as_str()).collect();
                w.write_record([
                    c.result.n.to_string(),
                    c.result.k.to_string(),
                    c.result.lower.to_string(),
                    c.result.upper.to_string(),
                    c.result.exact.to_string(),
                    methods.join(" "),
                ])?;
            }
            Output::Table(t) => {
                w.write_record([
                    "q", "m", "ell", "n", "k", "d_published", "d_lower", "d_upper", "status", "label", "dual_n", "dual_k",
                    "dual_d_published", "dual_d_lower", "dual_d_upper", "dual_status", "dual_label", "ours_exact", "mismatch",
                ])?;
                for r in &t.rows {
                    let mism: Vec<String> = r.code.mismatch.iter().chain(&r.dual.mismatch).cloned().collect();
                    w.write_record([
                        r.q.to_string(),
                        r.m.to_string(),
                        r.ell.map_or(String::new(), |l| l.to_string()),
                        r.code.n.to_string(),
                        r.code.k.to_string(),
                        r.code.d_published.to_string(),
                        r.code.lower.to_string(),
                        r.code.upper.to_string(),
                        r.code.status.to_string(),
                        r.code.label.to_string(),
                        r.dual.n.to_string(),
                        r.dual.k.to_string(),
                        r.dual.d_published.to_string(),
                        r.dual.lower.to_string(),
                        r.dual.upper.to_string(),
                        r.dual.status.to_string(),
                        r.dual.label.to_string(),
                        r.ours_exact.to_string(),
                        mism.join("; "),
                    ])?;
                }
            }
            Output::SelfDual(s) => {
                w.write_record(["family", "n", "k", "defining_set", "gram", "self_dual"])?;
                for e in &s.entries {
                    w.write_record([
                        e.family.clone(),
                        e.n.to_string(),
                        e.k.to_string(),
                        e.defining_set.to_string(),
                        e.gram.to_string(),
                        e.self_dual.to_string(),
                    ])?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| AppError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self {
            Output::Field(f) => {
                let _ = writeln!(s, "GF({}^{}) over GF({}), q = {}, m = {}", f.p, f.s * f.m, f.p, f.q, f.m);
                let _ = writeln!(s, "modulus: {}", f.modulus_pretty);
                let _ = writeln!(s, "N = {}, r = {}, n = {}, λ label = {}", f.big_n, f.r, f.n, f.lambda_label);
            }
            Output::Cosets(c) => {
                let _ = writeln!(s, "{} cosets in Ω (q = {}, m = {}, r = {}, t = {})", c.cosets.len(), c.q, c.m, c.r, c.residue);
                for row in &c.cosets {
                    let _ = writeln!(s, "{:>8}  size {:>3}  wt_q {:>3}  {{{}}}", row.leader, row.size, row.wt_q, join(&row.members, ", "));
                }
            }
            Output::Construct(c) => {
                let _ = writeln!(s, "{} over GF({}), m = {}: [{}, {}]", c.closed_form.family, c.family.q, c.family.m, c.code.n, c.code.k);
                let _ = writeln!(s, "modulus: {}", pretty_prime_poly(&c.code.tower.modulus));
                let _ = writeln!(s, "leaders: {}", join(&c.code.leaders, ", "));
                let _ = writeln!(s, "g(x) = {}", c.code.generator.pretty);
                if let Some(b) = &c.closed_form.distance_lb {
                    let _ = writeln!(s, "d >= {} ({})", b.certified, b.rule);
                }
                if let Some(b) = &c.closed_form.dual_distance_lb {
                    let _ = writeln!(s, "d⊥ >= {} ({})", b.certified, b.rule);
                }
                for note in &c.closed_form.notes {
                    let _ = writeln!(s, "note: {note}");
                }
                let _ = writeln!(s, "self-dual: defining set {}, gram {}", c.self_dual.defining_set, c.self_dual.gram);
            }
            Output::Certify(c) => {
                let r = &c.result;
                let verdict = if r.exact { format!("d = {}", r.lower) } else { format!("{} <= d <= {}", r.lower, r.upper) };
                let _ = writeln!(s, "[{}, {}]: {}", r.n, r.k, verdict);
                for t in &r.method_trace {
                    let _ = writeln!(s, "  {:<16} [{}, {}] {}", t.method, t.lower, t.upper, t.detail);
                }
            }
            Output::Table(t) => {
                let _ = writeln!(s, "table {} ({} mismatches)", t.table, t.mismatches);
                for r in &t.rows {
                    let ell = r.ell.map_or(String::new(), |l| format!(" ℓ={l}"));
                    let side = |x: &SideReport| {
                        if x.status == "exact" {
                            format!("[{},{},{}]", x.n, x.k, x.lower)
                        } else {
                            format!("[{},{},{}..{}]", x.n, x.k, x.lower, x.upper)
                        }
                    };
                    let flag = if r.code.mismatch.is_empty() && r.dual.mismatch.is_empty() { "ok" } else { "MISMATCH" };
                    let _ = writeln!(
                        s,
                        "q={} m={}{}: {} published d={} ({}); dual {} published d={} ({}) {}",
                        r.q, r.m, ell, side(&r.code), r.code.d_published, r.code.label, side(&r.dual), r.dual.d_published, r.dual.label, flag
                    );
                }
            }
            Output::SelfDual(d) => {
                for e in &d.entries {
                    let _ = writeln!(
                        s,
                        "{:<12} [{}, {}] defining-set {} gram {}",
                        e.family, e.n, e.k, e.defining_set, e.gram
                    );
                }
            }
        }
        s
    }

    pub fn render(&self, format: Format) -> Result<String, AppError> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
            Format::Text => Ok(self.to_text()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_polynomials_print_descending() {
        assert_eq!(pretty_prime_poly(&[2, 2, 1]), "x^2 + 2x + 2");
        assert_eq!(pretty_prime_poly(&[2, 0, 0, 2, 1]), "x^4 + 2x^3 + 2");
        assert_eq!(pretty_prime_poly(&[1, 1]), "x + 1");
    }

    #[test]
    fn selector_vectors_cover_every_choice() {
        let v = selector_vectors(6);
        assert_eq!(v.len(), 8);
        assert_eq!(v[0], vec![0, 1, 2]);
        assert_eq!(v[7], vec![5, 4, 3]);
        assert!(v.iter().all(|s| s.iter().enumerate().all(|(i, &j)| j == i as u32 || j == 5 - i as u32)));
    }

    #[test]
    fn budget_failures_map_to_exit_3() {
        assert_eq!(AppError::from(Error::BudgetExceeded { needed: 5, budget: 1 }).exit_code(), 3);
        assert_eq!(AppError::from(Error::BadParams(String::from("q"))).exit_code(), 2);
        assert_eq!(join(&[1, 2, 3], ";"), "1;2;3");
    }

    #[test]
    fn cosets_partition_omega() {
        let r = cosets(3, 3, 2, 1).unwrap();
        let total: usize = r.cosets.iter().map(|c| c.size).sum();
        assert_eq!(total, 13);
    }
}
