//! Verification harness: computed depths, invariants and ideal identities
//! checked against closed-form predictions.
//!
//! Every row carries the `symdepth` invocation that recomputes it. Rows whose
//! computation hits the time budget or the lattice cap are `skipped`; rows
//! without a prediction are `info`.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::betti::{depth_row, BettiOptions, PowerKind};
use crate::bipartite::{bc, bc_prime, maximal_induced_bipartite};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, WhiskerSpec};
use crate::io::parse_graph_shorthand;
use crate::linalg::Field;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::symbolic::{check_leaf_colon_at, symbolic_power_within, SymbolicPowerRequest};

/// Lattice cap used by the harness; larger than the library default so the
/// seven-cycle window fits.
pub const VERIFY_LATTICE_CAP: usize = 5_000_000;

pub const DEFAULT_ROW_TIMEOUT: Duration = Duration::from_secs(600);

/// Largest exponent `verify_example_w` accepts unless `allow_large` is set.
pub const EXAMPLE_W_GUARD: u32 = 4;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub field: Field,
    pub lattice_cap: usize,
    pub row_timeout: Option<Duration>,
    pub ordinary: bool,
    pub allow_large: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: Field::DEFAULT,
            lattice_cap: VERIFY_LATTICE_CAP,
            row_timeout: Some(DEFAULT_ROW_TIMEOUT),
            ordinary: false,
            allow_large: false,
        }
    }
}

impl VerifyOptions {
    fn budget(&self) -> Budget {
        self.row_timeout.map_or(Budget::UNLIMITED, Budget::with_timeout)
    }

    fn betti(&self) -> BettiOptions {
        BettiOptions { field: self.field, lattice_cap: self.lattice_cap, budget: self.budget() }
    }
}

/// Closed-form predictors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpectedFormula {
    /// `φ(n, t) = ⌈(n - t + 1)/3⌉`.
    Phi,
    /// Odd cycles: `⌈(n-1)/3⌉` at `s = 1`, `max(1, φ(n, s))` after.
    CycleSymbolic,
    /// Ordinary powers of cycles, `n ≥ 5`.
    CycleOrdinary,
    /// `depth S/I(W_a) = 1 + a_2 + ⋯ + a_k`, `a` sorted decreasingly.
    WhiskerBase,
    /// `W_n`: `n` at `s = 1`, `n - 1` after.
    UniformWhisker,
    /// `bc(W_a) = 1 + a_3 + ⋯ + a_n` for `a_i ≥ 1`, sorted decreasingly.
    WhiskerBc,
}

impl ExpectedFormula {
    pub fn name(self) -> &'static str {
        match self {
            ExpectedFormula::Phi => "phi",
            ExpectedFormula::CycleSymbolic => "cycle-symbolic",
            ExpectedFormula::CycleOrdinary => "cycle-ordinary",
            ExpectedFormula::WhiskerBase => "whisker-base",
            ExpectedFormula::UniformWhisker => "uniform-whisker",
            ExpectedFormula::WhiskerBc => "whisker-bc",
        }
    }

    /// `None` outside the formula's domain.
    pub fn predict(self, n: usize, s: u32, a: &[usize]) -> Option<i64> {
        match self {
            ExpectedFormula::Phi => Some(phi(n, s)),
            ExpectedFormula::CycleSymbolic => cycle_symbolic_depth(n, s).map(|d| d as i64),
            ExpectedFormula::CycleOrdinary => cycle_ordinary_depth(n, s).map(|d| d as i64),
            ExpectedFormula::WhiskerBase => Some(whisker_base_depth(a) as i64),
            ExpectedFormula::UniformWhisker => uniform_whisker_depth(n, s).map(|d| d as i64),
            ExpectedFormula::WhiskerBc => whisker_bc(a).map(|d| d as i64),
        }
    }
}

pub fn phi(n: usize, t: u32) -> i64 {
    (n as i64 - t as i64 + 1).div_euclid(3) + i64::from((n as i64 - t as i64 + 1).rem_euclid(3) != 0)
}

pub fn cycle_symbolic_depth(n: usize, s: u32) -> Option<usize> {
    if n < 5 || n.is_multiple_of(2) || s == 0 {
        return None;
    }
    Some(if s == 1 { (n - 1).div_ceil(3) } else { phi(n, s).max(1) as usize })
}

pub fn cycle_ordinary_depth(n: usize, t: u32) -> Option<usize> {
    if n < 5 || t == 0 {
        return None;
    }
    let t_us = t as usize;
    Some(if t == 1 {
        (n - 1).div_ceil(3)
    } else if t_us < (n + 1).div_ceil(2) {
        phi(n, t) as usize
    } else if n.is_multiple_of(2) {
        1
    } else {
        0
    })
}

pub fn whisker_base_depth(a: &[usize]) -> usize {
    let mut sorted: Vec<usize> = a.iter().copied().filter(|&x| x > 0).collect();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    1 + sorted.iter().skip(1).sum::<usize>()
}

pub fn uniform_whisker_depth(n: usize, s: u32) -> Option<usize> {
    match s {
        0 => None,
        _ if n < 2 => None,
        1 => Some(n),
        _ => Some(n - 1),
    }
}

pub fn whisker_bc(a: &[usize]) -> Option<usize> {
    if a.len() < 2 || a.contains(&0) {
        return None;
    }
    let mut sorted = a.to_vec();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    Some(1 + sorted[2..].iter().sum::<usize>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ReportRow {
    pub instance: String,
    pub check: String,
    pub s: Option<u32>,
    pub expected: String,
    pub computed: String,
    pub field: Field,
    pub status: Status,
    pub seconds: f64,
    pub command: String,
    pub note: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub info: usize,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub title: String,
    pub rows: Vec<ReportRow>,
}

impl VerificationReport {
    fn new(title: impl Into<String>) -> Self {
        VerificationReport { title: title.into(), rows: Vec::new() }
    }

    pub fn summary(&self) -> Summary {
        let mut out = Summary::default();
        for r in &self.rows {
            match r.status {
                Status::Pass => out.pass += 1,
                Status::Fail => out.fail += 1,
                Status::Skipped => out.skipped += 1,
                Status::Info => out.info += 1,
            }
        }
        out
    }

    /// True when no row failed.
    pub fn passed(&self) -> bool {
        self.summary().fail == 0
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.rows.extend(other.rows);
    }

    pub fn row(&self, check: &str, s: Option<u32>) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.check == check && r.s == s)
    }

    pub fn to_table(&self) -> String {
        let header = ["instance", "check", "s", "expected", "computed", "field", "status", "seconds", "note"];
        let cells: Vec<[String; 9]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.instance.clone(),
                    r.check.clone(),
                    r.s.map_or("-".into(), |s| s.to_string()),
                    r.expected.clone(),
                    r.computed.clone(),
                    r.field.to_string(),
                    r.status.to_string(),
                    format!("{:.3}", r.seconds),
                    r.note.clone(),
                ]
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        if !self.title.is_empty() {
            let _ = writeln!(out, "{}", self.title);
        }
        let line = |cols: &[String]| {
            cols.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
        };
        let _ = writeln!(out, "{}", line(&header.map(String::from)));
        for row in &cells {
            let _ = writeln!(out, "{}", line(row));
        }
        let s = self.summary();
        let _ = writeln!(out, "pass {}  fail {}  skipped {}  info {}", s.pass, s.fail, s.skipped, s.info);
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("instance,check,s,expected,computed,field,status,seconds,note,command\n");
        for r in &self.rows {
            let fields = [
                r.instance.clone(),
                r.check.clone(),
                r.s.map_or(String::new(), |s| s.to_string()),
                r.expected.clone(),
                r.computed.clone(),
                r.field.to_string(),
                r.status.to_string(),
                format!("{:.3}", r.seconds),
                r.note.clone(),
                r.command.clone(),
            ];
            let _ = writeln!(out, "{}", fields.iter().map(|f| csv_cell(f)).collect::<Vec<_>>().join(","));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let s = self.summary();
        json!({
            "title": self.title,
            "rows": self.rows.iter().map(|r| json!({
                "instance": r.instance,
                "check": r.check,
                "s": r.s,
                "expected": r.expected,
                "computed": r.computed,
                "field": r.field.to_string(),
                "status": r.status.to_string(),
                "seconds": r.seconds,
                "note": r.note,
                "command": r.command,
            })).collect::<Vec<_>>(),
            "summary": {"pass": s.pass, "fail": s.fail, "skipped": s.skipped, "info": s.info},
        })
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn field_flag(opts: &VerifyOptions) -> String {
    format!("--field {}", opts.field)
}

fn table_command(spec: &str, kind: PowerKind, s: u32, opts: &VerifyOptions) -> String {
    format!("symdepth table --graph {spec} --kind {kind} --smin {s} --smax {s} {}", field_flag(opts))
}

/// Row template; status and values are filled in by the caller.
fn blank(instance: &str, check: &str, s: Option<u32>, opts: &VerifyOptions, command: String) -> ReportRow {
    ReportRow {
        instance: instance.to_string(),
        check: check.to_string(),
        s,
        expected: String::new(),
        computed: String::new(),
        field: opts.field,
        status: Status::Info,
        seconds: 0.0,
        command,
        note: String::new(),
    }
}

fn failure_row(mut row: ReportRow, e: &Error) -> ReportRow {
    row.computed = "-".into();
    match e {
        Error::Timeout => {
            row.status = Status::Skipped;
            row.note = "time budget exhausted".into();
        }
        Error::LatticeCap { cap } => {
            row.status = Status::Skipped;
            row.note = format!("lattice cap {cap} exceeded");
        }
        other => {
            row.status = Status::Fail;
            row.note = other.to_string();
        }
    }
    row
}

/// Expected value for a depth row.
#[derive(Clone, Copy, Debug)]
enum Expect {
    Exactly(usize),
    AtLeast(usize),
    Nothing,
}

impl Expect {
    fn judge(self, computed: usize) -> (String, Status) {
        match self {
            Expect::Exactly(e) => (e.to_string(), if e == computed { Status::Pass } else { Status::Fail }),
            Expect::AtLeast(e) => (format!(">= {e}"), if computed >= e { Status::Pass } else { Status::Fail }),
            Expect::Nothing => ("-".into(), Status::Info),
        }
    }
}

struct DepthRun {
    rows: Vec<ReportRow>,
    /// Computed depths in order, stopping at the first missing value.
    depths: Vec<usize>,
}

fn depth_rows(
    instance: &str,
    spec: &str,
    g: &Graph,
    kind: PowerKind,
    s_max: u32,
    expect: impl Fn(u32) -> Expect,
    opts: &VerifyOptions,
) -> DepthRun {
    let check = format!("{kind} depth");
    let mut rows = Vec::new();
    let mut depths = Vec::new();
    let mut complete = true;
    for s in 1..=s_max {
        let row = blank(instance, &check, Some(s), opts, table_command(spec, kind, s, opts));
        let start = Instant::now();
        let row = match depth_row(g, kind, s, &opts.betti()) {
            Ok(r) => {
                let (expected, status) = expect(s).judge(r.depth);
                if complete {
                    depths.push(r.depth);
                }
                ReportRow {
                    expected,
                    computed: r.depth.to_string(),
                    status,
                    note: format!("pd {}, {} generators", r.pd, r.generators),
                    ..row
                }
            }
            Err(e) => {
                complete = false;
                failure_row(row, &e)
            }
        };
        rows.push(ReportRow { seconds: start.elapsed().as_secs_f64(), ..row });
    }
    DepthRun { rows, depths }
}

fn invariant_row(
    instance: &str,
    spec: &str,
    g: &Graph,
    prime: bool,
    expected: Option<usize>,
    opts: &VerifyOptions,
) -> (ReportRow, Option<usize>) {
    let check = if prime { "bc'" } else { "bc" };
    let row = blank(instance, check, None, opts, format!("symdepth bc --graph {spec} --format json"));
    let start = Instant::now();
    let value = if prime { bc_prime(g) } else { bc(g) };
    let seconds = start.elapsed().as_secs_f64();
    match value {
        Ok((v, w)) => {
            let (exp, status) = expected.map_or(Expect::Nothing, Expect::Exactly).judge(v);
            let note = format!("witness {:?}", w.vertices);
            (ReportRow { expected: exp, computed: v.to_string(), status, seconds, note, ..row }, Some(v))
        }
        Err(e) => (ReportRow { seconds, ..failure_row(row, &e) }, None),
    }
}

/// `depth S/I^(s) ≤ bc(G)` at the largest computed `s`.
fn bound_row(instance: &str, depths: &[usize], bc_value: Option<usize>, opts: &VerifyOptions, command: String) -> ReportRow {
    let s = depths.len() as u32;
    let mut row = blank(instance, "depth <= bc", (s > 0).then_some(s), opts, command);
    match (depths.last(), bc_value) {
        (Some(&d), Some(b)) => {
            row.expected = format!("<= {b}");
            row.computed = d.to_string();
            row.status = if d <= b { Status::Pass } else { Status::Fail };
        }
        _ => {
            row.status = Status::Skipped;
            row.note = "missing depth or bc".into();
        }
    }
    row
}

fn monotone_row(instance: &str, depths: &[usize], opts: &VerifyOptions, command: String) -> ReportRow {
    let mut row = blank(instance, "non-increasing", None, opts, command);
    row.expected = "non-increasing".into();
    row.computed = format!("{depths:?}");
    row.status = if depths.windows(2).all(|w| w[0] >= w[1]) { Status::Pass } else { Status::Fail };
    row
}

/// Odd cycle `C_n`: symbolic depths against the closed form, the stabilization
/// index `n - 2` once `s_max ≥ n - 1`, `bc = 1`, and optionally ordinary powers.
/// Even `n` only gets the ordinary rows.
pub fn verify_cycle(n: usize, s_max: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!("cycle length {n} below 5")));
    }
    if s_max == 0 {
        return Err(Error::InvalidParameter("s_max must be at least 1".into()));
    }
    let g = Graph::cycle(n)?;
    let spec = format!("cycle:{n}");
    let instance = format!("C{n}");
    let base = format!("symdepth verify cycle --n {n} --smax {s_max} {}", field_flag(opts));
    let mut report = VerificationReport::new(format!("cycle C{n}, s <= {s_max}"));
    if n % 2 == 1 {
        let run = depth_rows(
            &instance,
            &spec,
            &g,
            PowerKind::Symbolic,
            s_max,
            |s| cycle_symbolic_depth(n, s).map_or(Expect::Nothing, Expect::Exactly),
            opts,
        );
        report.rows.extend(run.rows);
        if s_max as usize >= n - 1 {
            let mut row = blank(&instance, "sdstab", None, opts, base.clone());
            row.expected = (n - 2).to_string();
            if run.depths.len() == s_max as usize {
                let stab = crate::betti::stabilization_index(&run.depths, Some(n - 2)).expect("nonempty");
                row.computed = stab.index.to_string();
                row.status = if stab.index == n - 2 { Status::Pass } else { Status::Fail };
            } else {
                row.computed = "-".into();
                row.status = Status::Skipped;
                row.note = "depth sequence incomplete".into();
            }
            report.rows.push(row);
        }
        let (row, bc_value) = invariant_row(&instance, &spec, &g, false, Some(1), opts);
        report.rows.push(row);
        report.rows.push(bound_row(&instance, &run.depths, bc_value, opts, base.clone()));
    }
    if opts.ordinary || n.is_multiple_of(2) {
        let run = depth_rows(
            &instance,
            &spec,
            &g,
            PowerKind::Ordinary,
            s_max,
            |t| cycle_ordinary_depth(n, t).map_or(Expect::Nothing, Expect::Exactly),
            opts,
        );
        report.rows.extend(run.rows);
    }
    Ok(report)
}

/// Whisker graph `W_a`.
pub fn verify_whisker(a: &[usize], s_max: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    if s_max == 0 {
        return Err(Error::InvalidParameter("s_max must be at least 1".into()));
    }
    let whisker = WhiskerSpec::new(a.to_vec())?;
    let g = Graph::whisker(&whisker)?;
    let n = a.len();
    let list = a.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let spec = format!("whisker:{list}");
    let instance = format!("W({list})");
    let base = format!("symdepth verify whisker --a {list} --smax {s_max} {}", field_flag(opts));
    let all_positive = a.iter().all(|&x| x >= 1);
    let uniform = a.iter().all(|&x| x == 1);
    let mut report = VerificationReport::new(format!("whisker graph {instance}, s <= {s_max}"));
    let run = depth_rows(
        &instance,
        &spec,
        &g,
        PowerKind::Symbolic,
        s_max,
        |s| match s {
            1 => Expect::Exactly(whisker_base_depth(a)),
            _ if uniform => Expect::Exactly(n - 1),
            _ if all_positive => Expect::AtLeast(n - 1),
            _ => Expect::Nothing,
        },
        opts,
    );
    report.rows.extend(run.rows);
    report.rows.push(monotone_row(&instance, &run.depths, opts, base.clone()));
    let (row, bc_value) = invariant_row(&instance, &spec, &g, false, whisker_bc(a), opts);
    report.rows.push(row);
    let (row, _) = invariant_row(&instance, &spec, &g, true, all_positive.then_some(n - 1), opts);
    report.rows.push(row);
    report.rows.push(bound_row(&instance, &run.depths, bc_value, opts, base));
    Ok(report)
}

/// Tabulated depth values for the triangle with two whiskers per vertex.
pub fn example_w_expected(s: u32) -> usize {
    match s {
        1 => 7,
        2 => 4,
        _ => 2,
    }
}

pub fn verify_example_w(s_max: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    if s_max == 0 {
        return Err(Error::InvalidParameter("s_max must be at least 1".into()));
    }
    if s_max > EXAMPLE_W_GUARD && !opts.allow_large {
        return Err(Error::InvalidParameter(format!(
            "s_max {s_max} above {EXAMPLE_W_GUARD}; pass --allow-large to override"
        )));
    }
    let g = Graph::example_w();
    let spec = "example:w";
    let instance = "W";
    let base = format!("symdepth verify example-w --smax {s_max} {}", field_flag(opts));
    let mut report = VerificationReport::new(format!("example W, s <= {s_max}"));
    let run = depth_rows(
        instance,
        spec,
        &g,
        PowerKind::Symbolic,
        s_max,
        |s| Expect::Exactly(example_w_expected(s)),
        opts,
    );
    report.rows.extend(run.rows);
    report.rows.push(monotone_row(instance, &run.depths, opts, base.clone()));
    let (row, bc_value) = invariant_row(instance, spec, &g, false, Some(3), opts);
    report.rows.push(row);
    let (row, _) = invariant_row(instance, spec, &g, true, Some(2), opts);
    report.rows.push(row);
    report.rows.push(bound_row(instance, &run.depths, bc_value, opts, base));
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    LeafColon,
    CompleteColon,
    BipartiteCompletionColon,
    CompletionSum,
    WhiskerColon,
    CycleColonF,
    CycleUpperBound,
}

impl Lemma {
    pub const ALL: [Lemma; 7] = [
        Lemma::LeafColon,
        Lemma::CompleteColon,
        Lemma::BipartiteCompletionColon,
        Lemma::CompletionSum,
        Lemma::WhiskerColon,
        Lemma::CycleColonF,
        Lemma::CycleUpperBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::LeafColon => "leaf-colon",
            Lemma::CompleteColon => "complete-colon",
            Lemma::BipartiteCompletionColon => "bipartite-completion-colon",
            Lemma::CompletionSum => "completion-sum",
            Lemma::WhiskerColon => "whisker-colon",
            Lemma::CycleColonF => "cycle-colon-f",
            Lemma::CycleUpperBound => "cycle-upperbound",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = match s.trim() {
            "eq-3-1" => "completion-sum",
            other => other,
        };
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown lemma `{s}`")))
    }
}

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn symbolic(g: &Graph, s: u32, opts: &VerifyOptions) -> Result<MonomialIdeal> {
    symbolic_power_within(&SymbolicPowerRequest::new(g.clone(), s), &opts.budget())
}

fn odd_cycle_length(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n >= 5 && n % 2 == 1 && *g == Graph::cycle(n)? {
        Ok(n)
    } else {
        Err(hypothesis("graph must be an odd cycle of length at least 5"))
    }
}

/// Outcome of one identity: `(expected, computed, holds, note)`.
type Identity = (String, String, bool, String);

fn equality(left: &MonomialIdeal, right: &MonomialIdeal, note: String) -> Result<Identity> {
    let holds = left.equals(right)?;
    Ok((format!("{} generators", right.len()), format!("{} generators", left.len()), holds, note))
}

/// Checks one identity of the lemma suite on `graph_spec` (a shorthand or a
/// graph file). `s` is required by `leaf-colon`, `cycle-colon-f` and
/// `cycle-upperbound`; the other identities fix their own exponent.
pub fn verify_lemma(lemma: Lemma, graph_spec: &str, s: Option<u32>, opts: &VerifyOptions) -> Result<VerificationReport> {
    let g = crate::io::load_graph(graph_spec)?;
    let s_flag = s.map_or(String::new(), |s| format!(" --s {s}"));
    let command = format!("symdepth verify lemma --name {lemma} --graph {graph_spec}{s_flag} {}", field_flag(opts));
    let need_s = || s.ok_or_else(|| hypothesis(format!("{lemma} needs --s")));
    let start = Instant::now();
    let outcome: Result<Vec<(Option<u32>, Identity)>> = match lemma {
        Lemma::LeafColon => {
            let s = need_s()?;
            let edges = g.leaf_edges();
            if edges.is_empty() {
                return Err(Error::NoLeafEdge);
            }
            let mut bad = Vec::new();
            for &e in &edges {
                if !check_leaf_colon_at(&g, s, e)? {
                    bad.push(format!("x{}x{}", e.0 + 1, e.1 + 1));
                }
            }
            let note = format!("{} leaf edges", edges.len());
            Ok(vec![(
                Some(s),
                ("I^(s-1)".into(), if bad.is_empty() { "I^(s-1)".into() } else { format!("differs at {}", bad.join(" ")) }, bad.is_empty(), note),
            )])
        }
        Lemma::CompleteColon => {
            let n = g.n();
            if n < 2 || g != Graph::complete(n)? {
                return Err(hypothesis("graph must be complete"));
            }
            let left = symbolic(&g, n as u32, opts)?.colon(&Monomial::squarefree(n, 0..n))?;
            Ok(vec![(Some(n as u32), equality(&left, &g.edge_ideal(), "I(K_n)^(n) : x_1...x_n vs I(K_n)".into())?)])
        }
        Lemma::BipartiteCompletionColon => {
            let targets: Vec<(String, Graph)> = if g.is_bipartite() {
                vec![("whole graph".into(), g.clone())]
            } else {
                maximal_induced_bipartite(&g)?
                    .into_iter()
                    .map(|w| Ok((format!("H = {:?}", w.vertices), g.restrict_to(w.vertices)?)))
                    .collect::<Result<_>>()?
            };
            targets
                .into_iter()
                .map(|(label, h)| {
                    let a = h.nonleaf_degree_vector();
                    let total: u32 = a.iter().sum();
                    let s = total / 2;
                    let xa = Monomial::new(a)?;
                    let left = h.edge_ideal().power(s + 1)?.colon(&xa)?.radical();
                    let right = h.bipartite_completion()?.edge_ideal();
                    Ok((Some(s), equality(&left, &right, label)?))
                })
                .collect()
        }
        Lemma::CompletionSum => {
            let witnesses = maximal_induced_bipartite(&g)?;
            let mut cache: Vec<(u32, MonomialIdeal)> = Vec::new();
            let mut out = Vec::new();
            for w in witnesses {
                let h = g.restrict_to(w.vertices)?;
                let s = h.edge_count() as u32;
                let xa = h.edge_product();
                let power = match cache.iter().find(|(t, _)| *t == s + 1) {
                    Some((_, p)) => p.clone(),
                    None => {
                        let p = symbolic(&g, s + 1, opts)?;
                        cache.push((s + 1, p.clone()));
                        p
                    }
                };
                let left = power.colon(&xa)?.radical();
                let outside = g.vertices().difference(w.vertices);
                let right = h.bipartite_completion()?.edge_ideal().sum(&MonomialIdeal::prime(g.n(), outside.iter()))?;
                out.push((Some(s), equality(&left, &right, format!("H = {:?}", w.vertices))?));
            }
            Ok(out)
        }
        Lemma::WhiskerColon => {
            let spec = whisker_spec_of(graph_spec)?;
            let n = spec.base();
            if spec.a.contains(&0) {
                return Err(hypothesis("whisker-colon needs a_i >= 1"));
            }
            let left = symbolic(&g, n as u32, opts)?.colon(&Monomial::squarefree(g.n(), 0..n))?;
            let mut product = MonomialIdeal::unit(g.n());
            for i in 0..n {
                product = product.multiply(&MonomialIdeal::prime(g.n(), spec.leaves_of(i)))?;
            }
            let right = g.edge_ideal().sum(&product)?;
            Ok(vec![(Some(n as u32), equality(&left, &right, "I(W_a)^(n) : x_1...x_n vs I(W_a) + product of leaf ideals".into())?)])
        }
        Lemma::CycleColonF => {
            let n = odd_cycle_length(&g)?;
            let k = (n - 1) / 2;
            let s = need_s()?;
            if (s as usize) < k + 1 || s as usize > n - 2 {
                return Err(hypothesis(format!("cycle-colon-f needs {} <= s <= {}", k + 1, n - 2)));
            }
            let left = symbolic(&g, s, opts)?.colon(&Monomial::squarefree(n, 0..n))?;
            let right = g.edge_ideal().power(s - k as u32 - 1)?;
            Ok(vec![(Some(s), equality(&left, &right, "I^(s) : f vs I^(s-k-1)".into())?)])
        }
        Lemma::CycleUpperBound => {
            let n = odd_cycle_length(&g)?;
            let s = need_s()?;
            if s < 1 || s as usize > n - 2 {
                return Err(hypothesis(format!("cycle-upperbound needs 1 <= s <= {}", n - 2)));
            }
            // e_2 ⋯ e_{s-1} with e_i = x_i x_{i+1}
            let mut m = Monomial::one(n);
            for i in 2..s as usize {
                m = m.mul(&Monomial::squarefree(n, [i - 1, i]))?;
            }
            let colon = symbolic(&g, s, opts)?.colon(&m)?;
            let bound = phi(n, s);
            let d = crate::betti::depth_with(&colon, &opts.betti())?;
            Ok(vec![(Some(s), (format!("<= {bound}"), d.to_string(), d as i64 <= bound, "depth S/(I^(s) : e_2...e_{s-1})".into()))])
        }
    };
    let seconds = start.elapsed().as_secs_f64();
    let mut report = VerificationReport::new(format!("{lemma} on {graph_spec}"));
    match outcome {
        Ok(items) => {
            for (s_used, (expected, computed, holds, note)) in items {
                let mut row = blank(graph_spec, lemma.name(), s_used, opts, command.clone());
                row.expected = expected;
                row.computed = computed;
                row.status = if holds { Status::Pass } else { Status::Fail };
                row.note = note;
                row.seconds = seconds;
                report.rows.push(row);
            }
        }
        Err(e @ (Error::Timeout | Error::LatticeCap { .. })) => {
            let row = blank(graph_spec, lemma.name(), s, opts, command);
            report.rows.push(ReportRow { seconds, ..failure_row(row, &e) });
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

fn whisker_spec_of(graph_spec: &str) -> Result<WhiskerSpec> {
    let rest = graph_spec
        .trim()
        .strip_prefix("whisker:")
        .ok_or_else(|| hypothesis("whisker-colon needs a whisker:a1,...,an graph"))?;
    let a = rest
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    WhiskerSpec::new(a)
}

/// First exponent from which the limit is known to be attained, for the
/// families where the value is proven.
pub fn proven_window(spec: &str) -> Option<u32> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("cycle:") {
        let n: usize = rest.trim().parse().ok()?;
        return (n >= 5 && n % 2 == 1).then_some(n as u32 - 2);
    }
    if let Some(rest) = spec.strip_prefix("whisker:") {
        let a: Vec<usize> = rest.split(',').map(|t| t.trim().parse().ok()).collect::<Option<_>>()?;
        if a.iter().all(|&x| x == 1) {
            return Some(2);
        }
        if a.iter().all(|&x| x >= 1) {
            return Some(a.len() as u32);
        }
        return None;
    }
    if spec.eq_ignore_ascii_case("example:w") {
        return Some(3);
    }
    None
}

pub const DEFAULT_SCAN_SMAX: u32 = 4;

/// For each graph: symbolic depths up to the proven window (or `s_max`),
/// then `bc'` against the smallest observed depth, which bounds the limit from
/// above. Verdicts: `violates` if the depth drops below `bc'`; `matches` if
/// equal and either the proven window was reached or the value is 1 (the
/// limit is at least 1); `inconclusive` otherwise.
pub fn run_conjecture_scan(graphs: &[(String, Graph)], s_max: Option<u32>, opts: &VerifyOptions) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("stable symbolic depth vs bc'");
    for (spec, g) in graphs {
        let window = proven_window(spec);
        let top = s_max.or(window).unwrap_or(DEFAULT_SCAN_SMAX).max(1);
        let command = format!("symdepth conjecture --graphs {spec} --smax {top} {}", field_flag(opts));
        let run = depth_rows(spec, spec, g, PowerKind::Symbolic, top, |_| Expect::Nothing, opts);
        report.rows.extend(run.rows);
        let (bc_row, bc_value) = invariant_row(spec, spec, g, false, None, opts);
        let (bcp_row, bcp_value) = invariant_row(spec, spec, g, true, None, opts);
        report.rows.push(bc_row);
        report.rows.push(bcp_row);
        report.rows.push(bound_row(spec, &run.depths, bc_value, opts, command.clone()));
        let mut row = blank(spec, "limit = bc'", (!run.depths.is_empty()).then_some(run.depths.len() as u32), opts, command);
        match (run.depths.iter().min(), bcp_value) {
            (Some(&d), Some(b)) => {
                row.expected = b.to_string();
                row.computed = d.to_string();
                let reached = window.is_some_and(|w| run.depths.len() as u32 >= w);
                (row.status, row.note) = if d < b {
                    (Status::Fail, "violates".into())
                } else if d == b && (reached || d == 1) {
                    (Status::Pass, "matches".into())
                } else {
                    (Status::Info, "inconclusive: window may not have stabilized".into())
                };
            }
            _ => {
                row.status = Status::Skipped;
                row.note = "missing depth or bc'".into();
            }
        }
        report.rows.push(row);
    }
    Ok(report)
}

/// Graph specs separated by whitespace or `;`.
pub fn parse_graph_list(list: &str) -> Result<Vec<(String, Graph)>> {
    list.split([';', ' ', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Ok((s.to_string(), crate::io::load_graph(s)?)))
        .collect()
}

/// Default suite for the conjecture scan.
pub fn default_scan_suite() -> Vec<(String, Graph)> {
    ["cycle:5", "cycle:7", "whisker:1,1", "whisker:1,1,1", "whisker:1,1,1,1", "whisker:2,1", "path:4", "example:w"]
        .into_iter()
        .map(|s| (s.to_string(), parse_graph_shorthand(s).expect("valid shorthand")))
        .collect()
}
