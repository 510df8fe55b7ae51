use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use serde::Serialize;
use wg_core::coeff::{Coefficient, Field, TauRational};
use wg_core::matrix::Matrix;
use wg_core::orthogonal::{gram_orthogonal, pairing_with_loop_type, weingarten_entry_orthogonal, weingarten_orthogonal};
use wg_core::report::VerificationReport;
use wg_core::suites::{run_suite, Suite, SuiteOptions};
use wg_core::symcore::{all_permutations, enumerate_pairings, Pairing, Permutation};
use wg_core::table::{Group, TableFile, TauSpec, WeingartenTable};
use wg_core::unitary::{gram_unitary, weingarten_unitary, wg_function_unitary};
use wg_core::young::cache;
use wg_core::WgError;
use wg_haar::{estimate_batch, estimate_moment, false_alarm_rate, degree_grid, Indices, MomentSpec};

use crate::args::*;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(WgError),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) | CliError::Core(WgError::Parse(_) | WgError::Io(_)) => ExitCode::from(2),
            CliError::Core(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<WgError> for CliError {
    fn from(e: WgError) -> Self {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn io(path: &Path, e: std::io::Error) -> CliError {
    CliError::Core(WgError::Io(format!("{}: {e}", path.display())))
}

/// `$WG_CACHE_DIR`, else `$XDG_CACHE_HOME/wg`, else `~/.cache/wg`.
fn cache_dir() -> PathBuf {
    if let Some(d) = std::env::var_os("WG_CACHE_DIR") {
        return PathBuf::from(d);
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(d).join("wg");
    }
    match std::env::var_os("HOME") {
        Some(h) => PathBuf::from(h).join(".cache").join("wg"),
        None => std::env::temp_dir().join("wg-cache"),
    }
}

/// Loads the character tables of `S_m` from the cache, ignoring cache failures
/// (they are recomputed in memory on demand anyway).
fn warm_characters(sizes: &[usize]) {
    let dir = cache_dir();
    for &m in sizes {
        let _ = cache::load_or_compute(&dir, m);
    }
}

fn check_cap(n: usize, cap: usize, force: bool, what: &str) -> Result<()> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if n > cap && !force {
        return Err(usage(format!("--n {n} exceeds the {what} cap of {cap}; pass --force to override")));
    }
    Ok(())
}

fn table_cap(group: Group, tau: &TauSpec) -> usize {
    match (group, tau) {
        (Group::Unitary, _) => 5,
        (Group::Orthogonal, TauSpec::Symbolic) => 4,
        (Group::Orthogonal, TauSpec::Value(_)) => 5,
    }
}

fn character_sizes(group: Group, n: usize) -> Vec<usize> {
    match group {
        Group::Unitary => vec![n],
        Group::Orthogonal => vec![2 * n],
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| io(Path::new("<stdout>"), e))
        }
    }
}

fn to_csv<C: Coefficient>(labels: &[String], m: &Matrix<C>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Core(WgError::Io(e.to_string()));
    w.write_record(labels).map_err(csv_err)?;
    for row in m.render() {
        w.write_record(&row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Core(WgError::Io(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn basis_labels(group: Group, n: usize) -> Result<Vec<String>> {
    Ok(match group {
        Group::Unitary => all_permutations(n).iter().map(Permutation::to_string).collect(),
        Group::Orthogonal => enumerate_pairings(n)?.iter().map(Pairing::to_string).collect(),
    })
}

fn build_table<F: Field>(group: Group, n: usize, tau: &F, spec: TauSpec) -> Result<WeingartenTable<F>> {
    Ok(match group {
        Group::Unitary => weingarten_unitary(n, tau, spec)?,
        Group::Orthogonal => weingarten_orthogonal(n, tau, spec)?,
    })
}

fn render_table<F: Field>(table: &WeingartenTable<F>, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(table.to_json() + "\n"),
        Format::Csv => to_csv(&table.basis, &table.weingarten),
    }
}

fn table(a: TableArgs) -> Result<ExitCode> {
    check_cap(a.n, table_cap(a.group, &a.tau), a.force, &format!("{} table", a.group))?;
    warm_characters(&character_sizes(a.group, a.n));
    let text = match &a.tau {
        TauSpec::Symbolic => render_table(&build_table(a.group, a.n, &TauRational::tau(), a.tau.clone())?, a.format)?,
        TauSpec::Value(t) => render_table(&build_table(a.group, a.n, t, a.tau.clone())?, a.format)?,
    };
    emit(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct GramFile {
    group: Group,
    n: usize,
    tau: String,
    basis: Vec<String>,
    gram: Vec<Vec<String>>,
}

fn gram_text<C: Coefficient>(a: &TableArgs, tau: &C) -> Result<String> {
    let basis = basis_labels(a.group, a.n)?;
    let g = match a.group {
        Group::Unitary => gram_unitary(a.n, tau)?,
        Group::Orthogonal => gram_orthogonal(a.n, tau)?,
    };
    match a.format {
        Format::Json => {
            let file = GramFile {
                group: a.group,
                n: a.n,
                tau: a.tau.to_string(),
                basis,
                gram: g.render(),
            };
            Ok(serde_json::to_string_pretty(&file).expect("serializable") + "\n")
        }
        Format::Csv => to_csv(&basis, &g),
    }
}

fn gram(a: TableArgs) -> Result<ExitCode> {
    check_cap(a.n, table_cap(a.group, &a.tau), a.force, &format!("{} table", a.group))?;
    let text = match &a.tau {
        TauSpec::Symbolic => gram_text(&a, &TauRational::tau())?,
        TauSpec::Value(t) => gram_text(&a, t)?,
    };
    emit(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn wgfn_value<F: Field>(a: &WgfnArgs, tau: &F) -> Result<F> {
    let n = a.cycle_type.weight();
    Ok(match a.group {
        Group::Unitary => wg_function_unitary(&a.cycle_type, tau)?,
        Group::Orthogonal => {
            let beta = Pairing::beta(n)?;
            weingarten_entry_orthogonal(&beta, &pairing_with_loop_type(&a.cycle_type)?, tau)?
        }
    })
}

fn wgfn(a: WgfnArgs) -> Result<ExitCode> {
    let n = a.cycle_type.weight();
    let cap = match a.group {
        Group::Unitary => 8,
        Group::Orthogonal => 5,
    };
    check_cap(n, cap, a.force, &format!("{} wgfn", a.group))?;
    warm_characters(&character_sizes(a.group, n));
    let text = match &a.tau {
        TauSpec::Symbolic => wgfn_value(&a, &TauRational::tau())?.to_string(),
        TauSpec::Value(t) => wgfn_value(&a, t)?.to_string(),
    };
    emit(None, &(text + "\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn characters(a: CharactersArgs) -> Result<ExitCode> {
    check_cap(a.n, 14, a.force, "character table")?;
    let dir = cache_dir();
    let table = if a.refresh {
        cache::refresh(&dir, a.n)?
    } else {
        cache::load_or_compute(&dir, a.n)?
    };
    emit(None, &(table.to_json() + "\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn report_exit(report: &VerificationReport) -> Result<ExitCode> {
    emit(None, &format!("{report}\n"))?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn check_table_file<F: Field>(file: &TableFile, tau: &F) -> Result<VerificationReport> {
    let table: WeingartenTable<F> = WeingartenTable::from_file(file)?;
    let mut report = VerificationReport::new(format!("table-{}", table.group), table.n, file.tau.clone());
    let expected_basis = basis_labels(table.group, table.n)?;
    report.check("basis is canonical", table.basis == expected_basis, "");
    let gram = match table.group {
        Group::Unitary => gram_unitary(table.n, tau)?,
        Group::Orthogonal => gram_orthogonal(table.n, tau)?,
    };
    report.check("gram matches recomputation", gram == table.gram, "");
    let r = table.check();
    report.check("shapes match", r.shapes_match, format!("size {}", r.size));
    report.check("GWG = G", r.gwg_equals_g, "");
    report.check("WGW = W", r.wgw_equals_w, "");
    report.check("W symmetric", r.w_symmetric, "");
    Ok(report)
}

fn verify(a: VerifyArgs) -> Result<ExitCode> {
    if let Some(path) = &a.table {
        let text = fs::read_to_string(path).map_err(|e| io(path, e))?;
        let file: TableFile = serde_json::from_str(&text)
            .map_err(|e| CliError::Core(WgError::Parse(format!("{}: {e}", path.display()))))?;
        let report = match file.tau.parse::<TauSpec>()? {
            TauSpec::Symbolic => check_table_file(&file, &TauRational::tau())?,
            TauSpec::Value(t) => check_table_file(&file, &t)?,
        };
        return report_exit(&report);
    }
    let n = a.n.expect("clap requires --n without --table");
    if a.suite != Suite::All {
        let cap = a.suite.cap(a.tau.is_some(), a.deep);
        check_cap(n, cap, a.force, &format!("{} suite", a.suite))?;
    } else if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    warm_characters(&[n, 2 * n]);
    let opts = SuiteOptions {
        tau: a.tau,
        deep: a.deep,
        force: a.force,
    };
    report_exit(&run_suite(a.suite, n, &opts)?)
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| usage(format!("--indices: bad index {x:?}"))))
        .collect()
}

fn parse_indices(group: Group, s: &str) -> Result<Indices> {
    let parts: Vec<&str> = s.split('|').collect();
    match (group, parts.len()) {
        (Group::Unitary, 4) => Ok(Indices::unitary(
            &parse_list(parts[0])?,
            &parse_list(parts[1])?,
            &parse_list(parts[2])?,
            &parse_list(parts[3])?,
        )),
        (Group::Orthogonal, 2) => Ok(Indices::orthogonal(&parse_list(parts[0])?, &parse_list(parts[1])?)),
        _ => Err(usage(format!(
            "--indices for {group} takes {} '|'-separated lists",
            if group == Group::Unitary { 4 } else { 2 }
        ))),
    }
}

#[derive(Serialize)]
struct GridSummary {
    group: Group,
    tau: usize,
    n: usize,
    samples: usize,
    seed: u64,
    threshold: f64,
    moments: usize,
    failures: usize,
    worst_abs_z: f64,
    expected_false_failures: f64,
    reports: Vec<wg_haar::MomentReport>,
}

fn mc(a: McArgs) -> Result<ExitCode> {
    if a.tau == 0 {
        return Err(usage("--tau must be a positive integer"));
    }
    if a.samples < 100 {
        return Err(usage("--samples must be at least 100"));
    }
    if let Some(text) = &a.indices {
        let indices = parse_indices(a.group, text)?;
        indices.validate(a.group, a.tau).map_err(|e| usage(format!("--indices: {e}")))?;
        let degree = match a.group {
            Group::Unitary => indices.i.len().max(indices.i_conj.len()),
            Group::Orthogonal => indices.i.len().div_ceil(2),
        };
        check_cap(degree.max(1), 5, a.force, "moment degree")?;
        let spec = MomentSpec {
            group: a.group,
            tau: a.tau,
            indices,
            samples: a.samples,
            seed: a.seed,
        };
        let report = estimate_moment(&spec)?;
        emit(None, &(report.to_json() + "\n"))?;
        return Ok(if report.within(a.threshold) {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    let n = a.n.expect("clap requires --n without --indices");
    check_cap(n, 5, a.force, "moment degree")?;
    let grid = degree_grid(a.group, a.tau, n);
    let reports = estimate_batch(a.group, a.tau, &grid, a.samples, a.seed)?;
    let failures = reports.iter().filter(|r| !r.within(a.threshold)).count();
    let summary = GridSummary {
        group: a.group,
        tau: a.tau,
        n,
        samples: a.samples,
        seed: a.seed,
        threshold: a.threshold,
        moments: reports.len(),
        failures,
        worst_abs_z: reports.iter().map(|r| r.z.abs()).fold(0.0, f64::max),
        expected_false_failures: reports.len() as f64 * false_alarm_rate(a.threshold),
        reports,
    };
    emit(None, &(serde_json::to_string_pretty(&summary).expect("serializable") + "\n"))?;
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Table(a) => table(a),
        Command::Gram(a) => gram(a),
        Command::Wgfn(a) => wgfn(a),
        Command::Characters(a) => characters(a),
        Command::Verify(a) => verify(a),
        Command::Mc(a) => mc(a),
    }
}
