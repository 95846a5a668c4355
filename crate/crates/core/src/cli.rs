//! Command-line front end: compute, tabulate, cross-verify and export.
//!
//! Exit codes are part of the interface: 0 on success or agreement, 1 when
//! two methods (or a value and its closed form) disagree, 2 for invalid
//! arguments and exceeded caps.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closedform::{
    b_closed, poincare_chain_formula, poincare_shortcut_formula, saturated_monomial, saturated_specs, sigma_pi,
};
use crate::error::{check_range, Error, Result};
use crate::fcenum::{inversion_polynomial, oracle_poincare, oracle_poincare_by_last, oracle_poincare_split};
use crate::numbers::{catalan, catalan_triangle};
use crate::poly::Polynomial;
use crate::recur::{
    a_last_via_table, check_b_at_one, check_catalan_recurrence, flipped_step, last_generator_triangle,
    poincare_by_partition, poincare_sequence_by_partition, standard_step, CoeffTable, MainRecurrence, TableView,
};
use crate::trimatrix::{
    check_double_shift, check_generic_relation, check_shortcut, solve_by_chain_formula, solve_by_recurrence,
    GeneralInstance, UnitriMatrix,
};

/// Environment variable naming the directory that relative `--out` paths
/// resolve against.
pub const OUT_DIR_ENV: &str = "FCPOINCARE_OUT_DIR";

/// Largest rank the permutation method accepts.
pub const PERMUTATION_MAX_N: usize = crate::fcenum::PERMUTATION_CAP - 1;

/// Rank above which the chain-based methods print a slowness warning.
pub const CHAIN_WARN_N: usize = 12;

const RANDOM_INSTANCES: usize = 200;
const RANDOM_MAX_LEN: usize = 7;
const RANDOM_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// The Poincaré polynomial a_n (or a_n^j with --j)
    Poincare,
    /// The last-generator triangle a_m^j for m <= n, with its q = 1 check
    Table,
    /// The coefficient table b_j^k for j <= n
    Bjk,
    /// Run the cross-check battery up to n
    Verify,
    /// a_m(1) against the Catalan numbers for m <= n
    Catalan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Permutation,
    Partition,
    MainRecurrence,
    Chain,
    Shortcut,
    All,
}

impl Method {
    pub const SINGLE: [Method; 6] = [
        Method::Oracle,
        Method::Permutation,
        Method::Partition,
        Method::MainRecurrence,
        Method::Chain,
        Method::Shortcut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Permutation => "permutation",
            Method::Partition => "partition",
            Method::MainRecurrence => "main-recurrence",
            Method::Chain => "chain",
            Method::Shortcut => "shortcut",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "fcpoincare",
    version,
    about = "Exact Poincaré polynomials of fully commutative elements in type A"
)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,

    /// Rank n
    #[arg(long)]
    pub n: usize,

    /// Last generator j (poincare, table) or row j (bjk)
    #[arg(long)]
    pub j: Option<usize>,

    #[arg(long, value_enum, default_value_t = Method::Partition)]
    pub method: Method,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Index the bjk dump as B_j^k = b_j^(j-k+1)
    #[arg(long)]
    pub upper: bool,

    /// Build the coefficient table with one sign flipped (negative control)
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub n: usize,
    pub j: Option<usize>,
    pub method: Method,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub upper: bool,
    pub inject_fault: bool,
}

impl RunConfig {
    pub fn new(command: Command, n: usize) -> Self {
        RunConfig {
            command,
            n,
            j: None,
            method: Method::Partition,
            format: Format::Text,
            output: None,
            upper: false,
            inject_fault: false,
        }
    }

    /// Builds a config from parsed flags; a relative `--out` is joined onto
    /// `out_dir` when one is given.
    pub fn from_cli(cli: Cli, out_dir: Option<&Path>) -> Result<Self> {
        let output = cli.out.map(|p| match out_dir {
            Some(dir) if p.is_relative() => dir.join(p),
            _ => p,
        });
        let cfg = RunConfig {
            command: cli.command,
            n: cli.n,
            j: cli.j,
            method: cli.method,
            format: cli.format,
            output,
            upper: cli.upper,
            inject_fault: cli.inject_fault,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.method == Method::Permutation && self.n > PERMUTATION_MAX_N {
            return Err(Error::CapExceeded {
                m: self.n + 1,
                cap: crate::fcenum::PERMUTATION_CAP,
            });
        }
        if let Some(j) = self.j {
            match self.command {
                Command::Poincare | Command::Table | Command::Bjk => check_range("j", j, 1, self.n)?,
                Command::Verify | Command::Catalan => return Err(invalid("j", j, 0, 0)),
            }
            if self.command == Command::Poincare
                && matches!(self.method, Method::Permutation | Method::Chain | Method::Shortcut)
            {
                return Err(invalid("j", j, 0, 0));
            }
        }
        Ok(())
    }

    /// Warnings to print before running.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        let chains =
            matches!(self.method, Method::Chain | Method::Shortcut | Method::All) || self.command == Command::Verify;
        if chains && self.n > CHAIN_WARN_N {
            out.push(format!(
                "warning: chain sums visit about 2^{} chains at n = {}; expect a long run",
                self.n + 1,
                self.n
            ));
        }
        out
    }

    fn table(&self, rows: usize) -> CoeffTable {
        if self.inject_fault {
            CoeffTable::build_with_step(rows, flipped_step)
        } else {
            CoeffTable::build_with_step(rows, standard_step)
        }
    }
}

fn invalid(what: &'static str, value: usize, lo: usize, hi: usize) -> Error {
    Error::IndexOutOfRange {
        what,
        value: value as i64,
        lo: lo as i64,
        hi: hi as i64,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Disagree,
    Invalid,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Disagree => 1,
            Status::Invalid => 2,
        }
    }

    fn from_agreement(agree: bool) -> Self {
        if agree {
            Status::Ok
        } else {
            Status::Disagree
        }
    }
}

/// Rendered output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub body: String,
    pub status: Status,
}

pub fn run(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    match cfg.command {
        Command::Poincare => cmd_poincare(cfg),
        Command::Table => cmd_table(cfg),
        Command::Bjk => cmd_bjk(cfg),
        Command::Verify => cmd_verify(cfg),
        Command::Catalan => cmd_catalan(cfg),
    }
}

fn methods_for(cfg: &RunConfig, n: usize) -> Vec<Method> {
    match cfg.method {
        Method::All if cfg.j.is_some() => vec![Method::Oracle, Method::Partition, Method::MainRecurrence],
        Method::All => Method::SINGLE
            .into_iter()
            .filter(|&m| m != Method::Permutation || n <= PERMUTATION_MAX_N)
            .collect(),
        m => vec![m],
    }
}

/// `a_n` by a single method. The table must hold rows up to `n + 3`.
///
/// Panics when given [`Method::All`].
pub fn compute(method: Method, n: usize, table: &CoeffTable) -> Result<Polynomial> {
    match method {
        Method::Oracle => Ok(oracle_poincare(n)),
        Method::Permutation => inversion_polynomial(n + 1),
        Method::Partition => Ok(poincare_by_partition(n)),
        Method::MainRecurrence => MainRecurrence::new(table).get(n).cloned(),
        Method::Chain => poincare_chain_formula(n, table),
        Method::Shortcut => poincare_shortcut_formula(n, table),
        Method::All => panic!("`all` is not a single method"),
    }
}

/// `a_n^j` by a single method: the enumeration, the direct recurrence, or the
/// table expansion over `a_0..a_(n-1)` from the main recurrence.
pub fn compute_last(method: Method, n: usize, j: usize, table: &CoeffTable) -> Result<Polynomial> {
    check_range("j", j, 1, n)?;
    match method {
        Method::Oracle => oracle_poincare_by_last(n, j),
        Method::Partition => Ok(last_generator_triangle(n).swap_remove(n - 1).swap_remove(j - 1)),
        Method::MainRecurrence => {
            let a = MainRecurrence::new(table).sequence(n - 1)?;
            a_last_via_table(n, j, table, &a)
        }
        _ => Err(invalid("j", j, 0, 0)),
    }
}

// Fields are declared in key order so that a generic JSON value re-renders
// to the same bytes.
#[derive(Serialize)]
struct MethodResult {
    coefficients: Polynomial,
    method: &'static str,
}

#[derive(Serialize)]
struct PoincareJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    n: usize,
    results: Vec<MethodResult>,
    verdict: &'static str,
}

pub fn cmd_poincare(cfg: &RunConfig) -> Result<Report> {
    let n = cfg.n;
    let table = cfg.table(n + 3);
    let mut results = Vec::new();
    for m in methods_for(cfg, n) {
        let p = match cfg.j {
            Some(j) => compute_last(m, n, j, &table)?,
            None => compute(m, n, &table)?,
        };
        results.push((m, p));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let verdict = if agree { "AGREE" } else { "DISAGREE" };
    let all = cfg.method == Method::All;
    let label = match cfg.j {
        Some(j) => format!("a_{n}^{j}"),
        None => format!("a_{n}"),
    };

    let body = match cfg.format {
        Format::Text if !all => format!("{}\n", results[0].1),
        Format::Text => {
            let mut s = format!("{label}\n");
            for (m, p) in &results {
                let _ = writeln!(s, "  {:<16} {p}", m.name());
            }
            let _ = writeln!(s, "verdict: {verdict}");
            s
        }
        Format::Json if !all => format!("{}\n", results[0].1.to_json()),
        Format::Json => {
            let doc = PoincareJson {
                n,
                j: cfg.j,
                results: results
                    .iter()
                    .map(|(m, p)| MethodResult {
                        coefficients: p.clone(),
                        method: m.name(),
                    })
                    .collect(),
                verdict,
            };
            to_json_line(&doc)
        }
        Format::Csv => {
            let j = cfg.j.map(|j| j.to_string()).unwrap_or_default();
            csv_table(
                &["n", "j", "method", "polynomial", "value_at_1"],
                results.iter().map(|(m, p)| {
                    vec![
                        n.to_string(),
                        j.clone(),
                        m.name().into(),
                        p.to_string(),
                        p.eval_i64(1).to_string(),
                    ]
                }),
            )
        }
    };
    Ok(Report {
        body,
        status: Status::from_agreement(agree),
    })
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    j: usize,
    polynomial: Polynomial,
    value_at_1: String,
    binomial_formula: String,
    #[serde(rename = "match")]
    matches: bool,
}

/// The triangle `a_m^j`, `1 <= j <= m <= n`, with `a_m^j(1)` against
/// `(j/(m+1)) binom(2m-j+1, m)`.
pub fn cmd_table(cfg: &RunConfig) -> Result<Report> {
    let mut rows = Vec::new();
    for (m, row) in (1..).zip(last_generator_triangle(cfg.n)) {
        for (j, p) in (1..).zip(row) {
            if cfg.j.is_some_and(|want| want != j) {
                continue;
            }
            let value = p.eval_i64(1);
            let formula = catalan_triangle(m, j);
            rows.push(TableRow {
                n: m,
                j,
                matches: value == formula,
                value_at_1: value.to_string(),
                binomial_formula: formula.to_string(),
                polynomial: p,
            });
        }
    }
    let ok = rows.iter().all(|r| r.matches);
    let body = match cfg.format {
        Format::Text => {
            let mut s = format!(
                "{:>3} {:>3} {:>12} {:>12} {:>5}  a_n^j\n",
                "n", "j", "a_n^j(1)", "formula", "match"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>3} {:>3} {:>12} {:>12} {:>5}  {}",
                    r.n,
                    r.j,
                    r.value_at_1,
                    r.binomial_formula,
                    yes_no(r.matches),
                    r.polynomial
                );
            }
            s
        }
        Format::Json => to_json_line(&rows),
        Format::Csv => csv_table(
            &["n", "j", "polynomial", "value_at_1", "binomial_formula", "match"],
            rows.iter().map(|r| {
                vec![
                    r.n.to_string(),
                    r.j.to_string(),
                    r.polynomial.to_string(),
                    r.value_at_1.clone(),
                    r.binomial_formula.clone(),
                    r.matches.to_string(),
                ]
            }),
        ),
    };
    Ok(Report {
        body,
        status: Status::from_agreement(ok),
    })
}

#[derive(Serialize)]
struct BjkRow {
    j: usize,
    k: usize,
    polynomial: Polynomial,
}

pub fn cmd_bjk(cfg: &RunConfig) -> Result<Report> {
    let table = cfg.table(cfg.n);
    let view = if cfg.upper { TableView::Upper } else { TableView::Lower };
    let symbol = if cfg.upper { "B" } else { "b" };
    let rows: Vec<BjkRow> = (1..=cfg.n)
        .filter(|&j| cfg.j.is_none_or(|want| want == j))
        .flat_map(|j| (1..=j).map(move |k| (j, k)))
        .map(|(j, k)| BjkRow {
            j,
            k,
            polynomial: table.entry(view, j, k).clone(),
        })
        .collect();
    let body = match cfg.format {
        Format::Text => rows
            .iter()
            .map(|r| format!("{symbol}_{}^{} = {}\n", r.j, r.k, r.polynomial))
            .collect(),
        Format::Json => to_json_line(&rows),
        Format::Csv => csv_table(
            &["j", "k", &format!("{symbol}_j^k")],
            rows.iter()
                .map(|r| vec![r.j.to_string(), r.k.to_string(), r.polynomial.to_string()]),
        ),
    };
    Ok(Report {
        body,
        status: Status::Ok,
    })
}

#[derive(Serialize)]
struct CatalanRow {
    n: usize,
    method: &'static str,
    value_at_1: String,
    catalan: String,
    #[serde(rename = "match")]
    matches: bool,
}

/// `a_m(1)` against `C_(m+1)` for `m <= n`.
pub fn cmd_catalan(cfg: &RunConfig) -> Result<Report> {
    let table = cfg.table(cfg.n + 3);
    let mut rows = Vec::new();
    for m in 0..=cfg.n {
        let expect = catalan(m + 1);
        for method in methods_for(cfg, m) {
            let value = compute(method, m, &table)?.eval_i64(1);
            rows.push(CatalanRow {
                n: m,
                method: method.name(),
                matches: value == expect,
                value_at_1: value.to_string(),
                catalan: expect.to_string(),
            });
        }
    }
    let ok = rows.iter().all(|r| r.matches);
    let body = match cfg.format {
        Format::Text => {
            let mut s = format!(
                "{:>3} {:<16} {:>14} {:>14} {:>5}\n",
                "n", "method", "a_n(1)", "C_(n+1)", "match"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>3} {:<16} {:>14} {:>14} {:>5}",
                    r.n,
                    r.method,
                    r.value_at_1,
                    r.catalan,
                    yes_no(r.matches)
                );
            }
            s
        }
        Format::Json => to_json_line(&rows),
        Format::Csv => csv_table(
            &["n", "method", "value_at_1", "catalan", "match"],
            rows.iter().map(|r| {
                vec![
                    r.n.to_string(),
                    r.method.into(),
                    r.value_at_1.clone(),
                    r.catalan.clone(),
                    r.matches.to_string(),
                ]
            }),
        ),
    };
    Ok(Report {
        body,
        status: Status::from_agreement(ok),
    })
}

/// Outcome of one entry of the verification battery.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

type CheckFn = fn(usize, &CoeffTable) -> std::result::Result<String, String>;

const BATTERY: [(&str, CheckFn); 12] = [
    ("method-agreement", check_methods),
    ("catalan-counts", check_catalan_counts),
    ("catalan-triangle", check_triangle),
    ("closed-form-table", check_closed_form),
    ("b-specializations", check_specializations),
    ("catalan-recurrence", check_catalan_rec),
    ("random-unitriangular", check_random_instances),
    ("poincare-instance", check_poincare_instance),
    ("shortcut", check_shortcut_identity),
    ("generic-relation", check_generic),
    ("double-shift", check_shift),
    ("saturated-gaps", check_saturated),
];

/// Runs every check up to rank `n` against `table`, which needs rows up to
/// `n + 3`. Failures are reported, never raised.
pub fn verify_battery(n: usize, table: &CoeffTable) -> Vec<CheckResult> {
    BATTERY
        .iter()
        .map(|&(check, f)| {
            let (passed, detail) = match f(n, table) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { check, passed, detail }
        })
        .collect()
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Report> {
    let table = cfg.table(cfg.n + 3);
    let results = verify_battery(cfg.n, &table);
    let ok = results.iter().all(|r| r.passed);
    let body = match cfg.format {
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(s, "{} {:<22} {}", pass_fail(r.passed), r.check, r.detail);
            }
            let passed = results.iter().filter(|r| r.passed).count();
            let _ = writeln!(s, "{passed}/{} checks passed", results.len());
            s
        }
        Format::Json => to_json_line(&results),
        Format::Csv => csv_table(
            &["check", "status", "detail"],
            results
                .iter()
                .map(|r| vec![r.check.into(), pass_fail(r.passed).into(), r.detail.clone()]),
        ),
    };
    Ok(Report {
        body,
        status: Status::from_agreement(ok),
    })
}

type CheckOutcome = std::result::Result<String, String>;

fn check_methods(n: usize, table: &CoeffTable) -> CheckOutcome {
    for m in 0..=n {
        let reference = poincare_by_partition(m);
        for method in Method::SINGLE {
            if method == Method::Permutation && m > PERMUTATION_MAX_N {
                continue;
            }
            let got = compute(method, m, table).map_err(|e| format!("n={m} {}: {e}", method.name()))?;
            if got != reference {
                return Err(format!("n={m}: {} differs from partition", method.name()));
            }
        }
    }
    Ok(format!("six methods, n <= {n}"))
}

fn check_catalan_counts(n: usize, _: &CoeffTable) -> CheckOutcome {
    for (m, a) in poincare_sequence_by_partition(n).iter().enumerate() {
        if a.eval_i64(1) != catalan(m + 1) {
            return Err(format!("n={m}: a_n(1) != C_(n+1)"));
        }
    }
    Ok(format!("n <= {n}"))
}

fn check_triangle(n: usize, _: &CoeffTable) -> CheckOutcome {
    for (m, row) in (1..).zip(last_generator_triangle(n)) {
        let (_, oracle) = oracle_poincare_split(m);
        for (j, p) in (1..).zip(&row) {
            if *p != oracle[j - 1] {
                return Err(format!("(n,j)=({m},{j}): recurrence differs from enumeration"));
            }
            if p.eval_i64(1) != catalan_triangle(m, j) {
                return Err(format!("(n,j)=({m},{j}): value at 1 differs from the binomial formula"));
            }
        }
    }
    Ok(format!("1 <= j <= n <= {n}"))
}

fn check_closed_form(n: usize, table: &CoeffTable) -> CheckOutcome {
    for j in 1..=n {
        for k in 1..=j {
            let closed = b_closed(j, k).map_err(|e| e.to_string())?;
            if closed != *table.b(j, k) {
                return Err(format!("first disagreement at (j,k)=({j},{k})"));
            }
        }
    }
    Ok(format!("1 <= k <= j <= {n}"))
}

fn check_specializations(n: usize, table: &CoeffTable) -> CheckOutcome {
    for j in 1..=n {
        for k in 1..=j {
            if table.upper(j, k).eval_i64(0) != BigInt::one() {
                return Err(format!("B_{j}^{k}(0) != 1"));
            }
            if !check_b_at_one(table, j, k).map_err(|e| e.to_string())? {
                return Err(format!("B_{j}^{k}(1) differs from the binomial formula"));
            }
        }
    }
    Ok(format!("1 <= k <= j <= {n}"))
}

fn check_catalan_rec(n: usize, _: &CoeffTable) -> CheckOutcome {
    match (1..=n).find(|&m| !check_catalan_recurrence(m)) {
        Some(m) => Err(format!("fails at n={m}")),
        None => Ok(format!("1 <= n <= {n}")),
    }
}

fn check_random_instances(n: usize, _: &CoeffTable) -> CheckOutcome {
    let max_len = n.min(RANDOM_MAX_LEN);
    if max_len == 0 {
        return Ok("nothing to check".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    for i in 0..RANDOM_INSTANCES {
        let len = rng.gen_range(1..=max_len);
        let inst = GeneralInstance::random_integer(&mut rng, len, 9);
        if solve_by_recurrence(&inst) != solve_by_chain_formula(&inst) {
            return Err(format!("instance {i} (N={len}) disagrees"));
        }
    }
    Ok(format!("{RANDOM_INSTANCES} instances, N <= {max_len}"))
}

fn check_poincare_instance(n: usize, table: &CoeffTable) -> CheckOutcome {
    let inst = GeneralInstance::poincare(table, n).map_err(|e| e.to_string())?;
    let u = solve_by_recurrence(&inst);
    if u != solve_by_chain_formula(&inst) {
        return Err("substitution and chain sums disagree".into());
    }
    let a = poincare_sequence_by_partition(n);
    for (m, um) in (1..).zip(&u) {
        if *um != a[m - 1].shift(m + 1) {
            return Err(format!("u_{m} != q^{} a_{}", m + 1, m - 1));
        }
    }
    Ok(format!("N = {n}"))
}

fn poincare_matrix(n: usize, table: &CoeffTable) -> std::result::Result<UnitriMatrix<Polynomial>, String> {
    UnitriMatrix::from_coeff_table(table, n + 2).map_err(|e| e.to_string())
}

fn check_shortcut_identity(n: usize, table: &CoeffTable) -> CheckOutcome {
    let p = poincare_matrix(n, table)?;
    let a = poincare_sequence_by_partition(n);
    for m in 1..=n {
        if !check_shortcut(m, &p, &a).map_err(|e| e.to_string())? {
            return Err(format!("fails at n={m}"));
        }
    }
    Ok(format!("1 <= n <= {n}"))
}

fn check_generic(n: usize, table: &CoeffTable) -> CheckOutcome {
    let p = poincare_matrix(n, table)?;
    for m in 1..=n {
        if !check_generic_relation(m, &p).map_err(|e| e.to_string())? {
            return Err(format!("fails at n={m}"));
        }
    }
    Ok(format!("1 <= n <= {n}"))
}

fn check_shift(n: usize, table: &CoeffTable) -> CheckOutcome {
    let p = poincare_matrix(n, table)?;
    if check_double_shift(&p) {
        Ok(format!("rows 1..={n}"))
    } else {
        Err("first column of P S P^-1 differs".into())
    }
}

fn check_saturated(n: usize, _: &CoeffTable) -> CheckOutcome {
    let specs = saturated_specs(n, 3);
    for spec in &specs {
        if sigma_pi(spec) != saturated_monomial(spec) {
            return Err(format!("a={} b={} lengths={:?}", spec.a(), spec.b(), spec.lengths()));
        }
    }
    Ok(format!("{} specs, b <= {n}", specs.len()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types always serialize");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory cannot fail");
    for row in rows {
        w.write_record(&row).expect("writing to memory cannot fail");
    }
    let bytes = w.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

/// Parses `args`, runs the command and writes the report. Returns the exit
/// code.
pub fn main_with<I, T>(args: I, out_dir: Option<&Path>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    let cfg = match RunConfig::from_cli(cli, out_dir) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return Status::Invalid.code();
        }
    };
    for w in cfg.warnings() {
        let _ = writeln!(stderr, "{w}");
    }
    let report = match run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return Status::Invalid.code();
        }
    };
    let written = match &cfg.output {
        Some(path) => write_file(path, &report.body),
        None => stdout.write_all(report.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write report: {e}");
        return Status::Invalid.code();
    }
    report.status.code()
}

fn write_file(path: &Path, body: &str) -> std::io::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, body)
}

/// Entry point used by the binary.
pub fn main_from_env() -> i32 {
    let out_dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
    main_with(
        std::env::args_os(),
        out_dir.as_deref(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
