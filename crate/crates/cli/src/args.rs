use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wg_core::coeff::Rational;
use wg_core::suites::Suite;
use wg_core::symcore::Partition;
use wg_core::table::{Group, TauSpec};

#[derive(Parser, Debug)]
#[command(name = "wg", version, about = "Exact Weingarten matrices for U(t) and O(t) via Jucys-Murphy elements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gram and Weingarten matrices on the permutation or pairing basis.
    Table(TableArgs),
    /// The Gram matrix alone.
    Gram(TableArgs),
    /// One value of the Weingarten function.
    Wgfn(WgfnArgs),
    /// Emit (and cache) the character table of S_n.
    Characters(CharactersArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Monte-Carlo estimates of Haar moments against exact predictions.
    Mc(McArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn parse_group(s: &str) -> Result<Group, String> {
    s.parse().map_err(|e: wg_core::WgError| e.to_string())
}

fn parse_tau(s: &str) -> Result<TauSpec, String> {
    s.parse().map_err(|_| format!("expected \"symbolic\" or a rational p/q, got {s:?}"))
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|_| format!("expected a rational p/q, got {s:?}"))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: wg_core::WgError| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: wg_core::WgError| e.to_string())
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_group)]
    pub group: Group,
    #[arg(long)]
    pub n: usize,
    /// "symbolic" or a rational such as 7 or 5/2.
    #[arg(long, value_parser = parse_tau, default_value = "symbolic")]
    pub tau: TauSpec,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Lift the default size caps.
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
pub struct WgfnArgs {
    #[arg(long, value_parser = parse_group, default_value = "unitary")]
    pub group: Group,
    /// Cycle type (unitary) or loop type (orthogonal), e.g. "[2,1]".
    #[arg(long, value_parser = parse_partition)]
    pub cycle_type: Partition,
    #[arg(long, value_parser = parse_tau, default_value = "symbolic")]
    pub tau: TauSpec,
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
pub struct CharactersArgs {
    #[arg(long)]
    pub n: usize,
    /// Recompute even when a cached copy exists.
    #[arg(long)]
    pub refresh: bool,
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_suite, default_value = "all")]
    pub suite: Suite,
    #[arg(long, required_unless_present = "table")]
    pub n: Option<usize>,
    #[arg(long, value_parser = parse_rational)]
    pub tau: Option<Rational>,
    /// Include the eight-box doubling check.
    #[arg(long)]
    pub deep: bool,
    #[arg(long)]
    pub force: bool,
    /// Check a table file (as written by `wg table`) instead of running a suite.
    #[arg(long, conflicts_with_all = ["n", "tau", "deep"])]
    pub table: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct McArgs {
    #[arg(long, value_parser = parse_group)]
    pub group: Group,
    /// Degree: n factors and n conjugates (unitary) or 2n factors (orthogonal).
    /// Required unless --indices is given.
    #[arg(long, required_unless_present = "indices")]
    pub n: Option<usize>,
    /// Matrix size.
    #[arg(long)]
    pub tau: usize,
    #[arg(long, default_value_t = 200_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// One monomial as "i|j|i'|j'" (unitary) or "i|j" (orthogonal), each a
    /// comma-separated list of 1-based indices. Without it the full
    /// degree-n grid is estimated.
    #[arg(long)]
    pub indices: Option<String>,
    /// Largest accepted |z|.
    #[arg(long, default_value_t = 4.0)]
    pub threshold: f64,
    #[arg(long)]
    pub force: bool,
}
