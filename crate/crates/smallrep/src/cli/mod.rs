//! Batch front end: `tables`, `classify`, and `verify <suite>` commands
//! over a shared flag set. All output flows through [`crate::report`], so
//! a fixed config and seed render byte-identical reports.

pub mod suites;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::repth::chars::character_table;
use crate::repth::{
    casimir_scalar, classify_sweep, omega_w_scalar, root_lattice_weights_below, weyl_dim,
};
use crate::report::{cell_rat, cell_rat_vec, render_suite, render_tables, Format, NamedTable, SuiteReport, TableReport};
use crate::rootsys::chevalley::build_chevalley;
use crate::rootsys::weyl::WeylGroup;
use crate::rootsys::{build_root_system, RootSystem};
use crate::scalar::{parse_rat, Rat};

#[derive(Parser)]
#[command(
    name = "smallrep",
    version,
    about = "Exact-rational tables and verification suites for root systems, \
             Dunkl operators, graded Hecke algebras, and Harish-Chandra projections"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Emit the Ω_W table (per W-irreducible) and the Ω_g table (per swept
    /// highest weight)
    Tables(CommonArgs),
    /// Sweep dominant weights in the root lattice up to --dim-cap and flag
    /// small / quasi-small representations
    Classify(CommonArgs),
    /// Run one named verification suite and exit nonzero on failure
    Verify(VerifyArgs),
}

#[derive(Args)]
pub struct CommonArgs {
    /// Root system, family letter with optional rank: B2, or B with --rank
    #[arg(long = "type", value_name = "TYPE")]
    pub type_: String,

    /// Rank, when not already part of --type
    #[arg(long)]
    pub rank: Option<usize>,

    /// Hecke parameters: comma list of rationals (per root orbit, or one
    /// value for all), "generic", or "geometric:<m1>,<m2>"
    #[arg(long)]
    pub k: Option<String>,

    /// Degree cap for graded and filtered checks (suite-specific default)
    #[arg(long)]
    pub max_degree: Option<u32>,

    /// Dimension cap for highest-weight sweeps
    #[arg(long, default_value_t = 40)]
    pub dim_cap: usize,

    /// Highest weight as comma-separated rational coordinates
    #[arg(long)]
    pub lambda: Option<String>,

    /// Output format: table, json, or csv
    #[arg(long, default_value = "table")]
    pub format: String,

    /// Write the report to this path instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Seed for randomized checks; reports embed it
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Suite: dunkl, hecke-fixed, hecke-eigen, a-lambda, casimir,
    /// hc-equivariance, broer-graded, or column-det
    #[arg(value_name = "SUITE")]
    pub suite_pos: Option<String>,

    /// Suite name (alternative to the positional form)
    #[arg(long)]
    pub suite: Option<String>,

    #[command(flatten)]
    pub common: CommonArgs,
}

/// Everything a command needs, with the raw flags already parsed.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub family: char,
    pub rank: usize,
    pub k: Option<KSpec>,
    pub max_degree: Option<u32>,
    pub dim_cap: usize,
    pub lambda: Option<Vec<Rat>>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum KSpec {
    /// Hecke parameters per root orbit (a single value broadcasts).
    List(Vec<Rat>),
    /// One formal symbol k on every orbit.
    Generic,
    /// Multiplicity-function values m per orbit; empty means the geometric
    /// complex case m ≡ 2. Hecke parameters derive as k = m + 2·m(2α).
    Geometric(Vec<Rat>),
}

impl KSpec {
    pub fn parse(s: &str) -> Result<KSpec> {
        let s = s.trim();
        if s == "generic" {
            return Ok(KSpec::Generic);
        }
        if s == "geometric" {
            return Ok(KSpec::Geometric(Vec::new()));
        }
        if let Some(rest) = s.strip_prefix("geometric:") {
            return Ok(KSpec::Geometric(parse_rat_list(rest)?));
        }
        Ok(KSpec::List(parse_rat_list(s)?))
    }

    pub fn echo(&self) -> String {
        match self {
            KSpec::List(v) => cell_rat_vec(v),
            KSpec::Generic => "generic".into(),
            KSpec::Geometric(v) if v.is_empty() => "geometric".into(),
            KSpec::Geometric(v) => format!("geometric:{}", cell_rat_vec(v)),
        }
    }
}

pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    s.split(',')
        .map(|p| parse_rat(p).map_err(Error::Invalid))
        .collect()
}

/// Stretch a 1- or n-element parameter list over n orbits.
pub fn orbit_values(vals: &[Rat], n_orbits: usize) -> Result<Vec<Rat>> {
    if vals.len() == n_orbits {
        Ok(vals.to_vec())
    } else if vals.len() == 1 {
        Ok(vec![vals[0].clone(); n_orbits])
    } else {
        Err(Error::Invalid(format!(
            "expected 1 or {} parameter values, got {}",
            n_orbits,
            vals.len()
        )))
    }
}

fn parse_type(type_: &str, rank_flag: Option<usize>) -> Result<(char, usize)> {
    let t = type_.trim();
    let mut chars = t.chars();
    let family = chars
        .next()
        .ok_or_else(|| Error::Invalid("--type must not be empty".into()))?
        .to_ascii_uppercase();
    let rest: String = chars.collect();
    let suffix_rank = if rest.is_empty() {
        None
    } else {
        Some(rest.parse::<usize>().map_err(|_| {
            Error::Invalid(format!("cannot read a rank from --type {t}"))
        })?)
    };
    let rank = match (suffix_rank, rank_flag) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Invalid(format!(
                "--type {t} disagrees with --rank {b}"
            )))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => {
            return Err(Error::Invalid(
                "rank missing: pass --type B2 or --type B --rank 2".into(),
            ))
        }
    };
    Ok((family, rank))
}

impl RunConfig {
    pub fn from_args(a: &CommonArgs) -> Result<RunConfig> {
        let (family, rank) = parse_type(&a.type_, a.rank)?;
        let k = match &a.k {
            None => None,
            Some(s) => Some(KSpec::parse(s)?),
        };
        let lambda = match &a.lambda {
            None => None,
            Some(s) => Some(parse_rat_list(s)?),
        };
        let format = Format::parse(&a.format)
            .ok_or_else(|| Error::Invalid(format!("unknown format `{}`", a.format)))?;
        Ok(RunConfig {
            family,
            rank,
            k,
            max_degree: a.max_degree,
            dim_cap: a.dim_cap,
            lambda,
            format,
            out: a.out.clone(),
            seed: a.seed,
        })
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        build_root_system(self.family, self.rank)
    }

    pub fn base_echo(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("type".into(), format!("{}{}", self.family, self.rank));
        m.insert("dim_cap".into(), self.dim_cap.to_string());
        if let Some(k) = &self.k {
            m.insert("k".into(), k.echo());
        }
        if let Some(d) = self.max_degree {
            m.insert("max_degree".into(), d.to_string());
        }
        if let Some(l) = &self.lambda {
            m.insert("lambda".into(), cell_rat_vec(l));
        }
        m
    }
}

pub fn cmd_tables(cfg: &RunConfig) -> Result<TableReport> {
    let rs = cfg.root_system()?;
    let w = WeylGroup::new(&rs);
    let table = character_table(&rs, &w)?;

    let omega_w_rows: Vec<Vec<String>> = (0..table.n_chars())
        .map(|chi| {
            vec![
                table.names[chi].clone(),
                cell_rat(table.degree(chi)),
                cell_rat(&omega_w_scalar(&rs, &w, &table, chi)),
            ]
        })
        .collect();

    let mut omega_g_rows = Vec::new();
    for lambda in root_lattice_weights_below(&rs, cfg.dim_cap)? {
        omega_g_rows.push(vec![
            format!("σ_{}", cell_rat_vec(&lambda)),
            weyl_dim(&rs, &lambda)?.to_string(),
            cell_rat(&casimir_scalar(&rs, &lambda)),
        ]);
    }

    Ok(TableReport {
        command: "tables".into(),
        root_system: rs.type_name(),
        seed: cfg.seed,
        config: cfg.base_echo(),
        tables: vec![
            NamedTable {
                name: "omega_w".into(),
                columns: vec!["irreducible".into(), "degree".into(), "omega_w".into()],
                rows: omega_w_rows,
            },
            NamedTable {
                name: "omega_g".into(),
                columns: vec!["highest_weight".into(), "dim".into(), "omega_g".into()],
                rows: omega_g_rows,
            },
        ],
    })
}

pub fn cmd_classify(cfg: &RunConfig) -> Result<TableReport> {
    let rs = cfg.root_system()?;
    let cd = build_chevalley(&rs)?;
    let w = WeylGroup::new(&rs);
    let table = character_table(&rs, &w)?;
    let rows = classify_sweep(&rs, &cd, &w, &table, cfg.dim_cap)?;

    let fmt_constituents = |cs: &[(String, u64)]| -> String {
        if cs.is_empty() {
            return "-".into();
        }
        cs.iter()
            .map(|(name, m)| {
                if *m == 1 {
                    name.clone()
                } else {
                    format!("{m}·{name}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let yesno = |b: bool| if b { "yes" } else { "no" }.to_string();

    let out_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                format!("σ_{}", cell_rat_vec(&r.lambda)),
                r.dim.to_string(),
                yesno(r.small),
                yesno(r.quasi_small),
                r.dim_vh.to_string(),
                r.dim_single.to_string(),
                r.dim_double.to_string(),
                fmt_constituents(&r.w_constituents),
                cell_rat(&r.casimir),
            ]
        })
        .collect();

    Ok(TableReport {
        command: "classify".into(),
        root_system: rs.type_name(),
        seed: cfg.seed,
        config: cfg.base_echo(),
        tables: vec![NamedTable {
            name: "classify".into(),
            columns: vec![
                "highest_weight".into(),
                "dim".into(),
                "small".into(),
                "quasi_small".into(),
                "dim_vh".into(),
                "dim_single".into(),
                "dim_double".into(),
                "single_constituents".into(),
                "omega_g".into(),
            ],
            rows: out_rows,
        }],
    })
}

pub fn cmd_verify(cfg: &RunConfig, suite: &str) -> Result<SuiteReport> {
    let rs = cfg.root_system()?;
    let (echo, entries) = match suite {
        "dunkl" => suites::dunkl(cfg, &rs)?,
        "hecke-fixed" => suites::hecke_fixed(cfg, &rs)?,
        "hecke-eigen" => suites::hecke_eigen(cfg, &rs)?,
        "a-lambda" => suites::a_lambda(cfg, &rs)?,
        "casimir" => suites::casimir(cfg, &rs)?,
        "hc-equivariance" => suites::hc_equivariance(cfg, &rs)?,
        "broer-graded" => suites::broer_graded(cfg, &rs)?,
        "column-det" => suites::column_det(cfg, &rs)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let mut config = cfg.base_echo();
    config.extend(echo);
    Ok(SuiteReport::new(
        suite,
        rs.type_name(),
        cfg.seed,
        config,
        entries,
    ))
}

fn emit(cfg: &RunConfig, text: &str) -> std::io::Result<()> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::UnknownSuite(_)
            | Error::UnsupportedType { .. }
            | Error::Invalid(_)
            | Error::RankCapExceeded(..)
    )
}

/// Returns the process exit code: 0 all checks pass, 1 an assertion or
/// suite entry failed, 2 the invocation itself was unusable.
pub fn run(cli: Cli) -> i32 {
    let outcome = || -> Result<(RunConfig, String, bool)> {
        match &cli.command {
            Command::Tables(a) => {
                let cfg = RunConfig::from_args(a)?;
                let rep = cmd_tables(&cfg)?;
                Ok((cfg.clone(), render_tables(&rep, cfg.format), true))
            }
            Command::Classify(a) => {
                let cfg = RunConfig::from_args(a)?;
                let rep = cmd_classify(&cfg)?;
                Ok((cfg.clone(), render_tables(&rep, cfg.format), true))
            }
            Command::Verify(v) => {
                let cfg = RunConfig::from_args(&v.common)?;
                let suite = v
                    .suite
                    .as_deref()
                    .or(v.suite_pos.as_deref())
                    .ok_or_else(|| Error::Invalid("verify needs a suite name".into()))?;
                let rep = cmd_verify(&cfg, suite)?;
                Ok((cfg.clone(), render_suite(&rep, cfg.format), rep.passed))
            }
        }
    }();
    match outcome {
        Ok((cfg, text, passed)) => {
            if let Err(e) = emit(&cfg, &text) {
                eprintln!("error: cannot write report: {e}");
                return 1;
            }
            if passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if usage_error(&e) {
                2
            } else {
                1
            }
        }
    }
}
