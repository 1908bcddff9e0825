//! Command-line front end.
//!
//! Exit statuses: 0 success, 1 internal failure, 2 invalid input, 3 capacity.

use std::fmt::Write;
use std::path::PathBuf;

use borel_core::ideals::{
    brute_force_ideals, is_abelian, is_abelian_set, is_ideal_set, DEFAULT_BRUTE_FORCE_BOUND,
};
use borel_core::kernel::CartanElementDisplay;
use borel_core::lattice::{build_lattice, counts_by_dimension};
use borel_core::subalgebra::{is_monomial_subalgebra, monomial_centralizer, monomial_normalizer};
use borel_core::{
    borel::borel_basis, ideals::IdealDisplay, Family, MonomialIdeal, MonomialSubalgebra, RootSet,
    RootStyle, RootSystem,
};
use clap::{Parser, ValueEnum};
use thiserror::Error;

use crate::dot::{export_dot, RenderOptions};
use crate::json::{classified_entries, ideal_entry, root_vectors, Checks, Counts, Report};
use crate::parallel::{Workers, DEFAULT_MAX_IDEALS};
use crate::parse::{parse_root_set, ParseError};

/// Largest rank accepted; the root tables grow with the square of |R+|.
pub const MAX_RANK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Action {
    /// Positive roots, Cartan matrix and Dynkin diagram
    Roots,
    /// Nonzero monomial ideals of the Borel subalgebra inside its nilradical
    Ideals,
    /// Abelian monomial ideals, zero included
    Abelian,
    /// Every ideal with the Cartan kernel that parametrizes its torus part
    Classify,
    /// Inclusion lattice of the monomial ideals
    Lattice,
    /// Root vectors normalizing the span of --set
    Normalizer,
    /// Root vectors commuting with the span of --set
    Centralizer,
    /// Test --set, or cross-check the enumeration against the subset oracle
    Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "borel",
    version,
    about = "Ideals of Borel subalgebras of simple Lie algebras"
)]
pub struct Cli {
    #[arg(value_enum)]
    pub action: Action,
    /// Root system type: A, B, C, D, E, F or G
    pub family: String,
    pub rank: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also list the zero ideal (ideals command)
    #[arg(long)]
    pub include_zero: bool,
    /// Worker threads (default: one per core)
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Root set such as "a2, a1+2a2" or "[0,1], [1,2]"
    #[arg(long)]
    pub set: Option<String>,
    /// Write the output here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Render roots with α and subscripts
    #[arg(long)]
    pub unicode: bool,
    /// Stop with exit status 3 once more ideals than this are found
    #[arg(long, default_value_t = DEFAULT_MAX_IDEALS)]
    pub max_ideals: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub action: Action,
    pub family: Family,
    pub rank: usize,
    pub format: Format,
    pub include_zero: bool,
    pub jobs: Option<usize>,
    pub set: Option<String>,
    pub unicode: bool,
    pub max_ideals: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Invalid(borel_core::Error),
    #[error(transparent)]
    Capacity(borel_core::Error),
    #[error("rank {rank} exceeds the supported maximum of {MAX_RANK}")]
    RankTooLarge { rank: usize },
    #[error("enumeration found {enumerated} ideals but the subset oracle found {oracle}")]
    Mismatch { enumerated: usize, oracle: usize },
}

impl From<borel_core::Error> for CliError {
    fn from(e: borel_core::Error) -> Self {
        match e {
            borel_core::Error::Capacity { .. } => Self::Capacity(e),
            _ => Self::Invalid(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) | Self::Parse(_) | Self::Invalid(_) => 2,
            Self::Capacity(_) | Self::RankTooLarge { .. } => 3,
            Self::Mismatch { .. } => 1,
        }
    }
}

impl TryFrom<&Cli> for Command {
    type Error = CliError;

    fn try_from(cli: &Cli) -> Result<Self, CliError> {
        let family: Family = cli.family.parse()?;
        if cli.format == Format::Dot && cli.action != Action::Lattice {
            return Err(CliError::Usage(
                "--format dot is only available for the lattice command".into(),
            ));
        }
        let takes_set = matches!(
            cli.action,
            Action::Normalizer | Action::Centralizer | Action::Check
        );
        if cli.set.is_some() && !takes_set {
            return Err(CliError::Usage(
                "--set is only used by check, normalizer and centralizer".into(),
            ));
        }
        if cli.set.is_none() && matches!(cli.action, Action::Normalizer | Action::Centralizer) {
            return Err(CliError::Usage(
                "this command needs --set \"<roots>\"".into(),
            ));
        }
        Ok(Self {
            action: cli.action,
            family,
            rank: cli.rank,
            format: cli.format,
            include_zero: cli.include_zero,
            jobs: cli.jobs.map(usize::from),
            set: cli.set.clone(),
            unicode: cli.unicode,
            max_ideals: cli.max_ideals,
        })
    }
}

struct Ctx<'a> {
    cmd: &'a Command,
    rs: RootSystem,
    style: RootStyle,
}

impl Ctx<'_> {
    fn json(&self) -> bool {
        self.cmd.format == Format::Json
    }

    fn ideals(&self) -> Result<Vec<MonomialIdeal>, CliError> {
        Ok(Workers::new(self.cmd.jobs).enumerate(&self.rs, self.cmd.max_ideals)?)
    }

    fn show(&self, set: &RootSet) -> String {
        IdealDisplay::of_set(set, &self.rs, self.style).to_string()
    }

    fn parsed_set(&self) -> Result<Option<RootSet>, CliError> {
        let Some(literal) = &self.cmd.set else {
            return Ok(None);
        };
        let roots = parse_root_set(literal, &self.rs)?;
        Ok(Some(self.rs.set_of(&roots)?))
    }
}

/// Runs `cmd` and returns everything it prints on success.
pub fn run(cmd: &Command) -> Result<String, CliError> {
    cmd.family.check_rank(cmd.rank)?;
    if cmd.rank > MAX_RANK {
        return Err(CliError::RankTooLarge { rank: cmd.rank });
    }
    let ctx = Ctx {
        cmd,
        rs: RootSystem::new(cmd.family, cmd.rank)?,
        style: if cmd.unicode {
            RootStyle::Unicode
        } else {
            RootStyle::Ascii
        },
    };
    let input = ctx.parsed_set()?;
    match cmd.action {
        Action::Roots => Ok(roots(&ctx)),
        Action::Ideals => ideals(&ctx),
        Action::Abelian => abelian(&ctx),
        Action::Classify => classify(&ctx),
        Action::Lattice => lattice(&ctx),
        Action::Normalizer | Action::Centralizer => {
            subalgebra_query(&ctx, input.expect("checked when the command was built"))
        }
        Action::Check => match input {
            Some(set) => check_set(&ctx, set),
            None => check_oracle(&ctx),
        },
    }
}

fn roots(ctx: &Ctx) -> String {
    let rs = &ctx.rs;
    let cartan = rs.cartan();
    if ctx.json() {
        let mut r = Report::new("roots", rs);
        r.cartan_matrix = Some(cartan.rows().map(<[i32]>::to_vec).collect());
        r.highest_root = Some(rs.highest_root().coeffs().to_vec());
        r.dynkin = Some(cartan.dynkin_description());
        return r.to_json();
    }
    let mut out = String::new();
    writeln!(out, "{}", rs.name()).unwrap();
    writeln!(out, "dynkin: {}", cartan.dynkin_description()).unwrap();
    out.push_str("cartan matrix:\n");
    for row in cartan.rows() {
        writeln!(out, "  {row:?}").unwrap();
    }
    writeln!(out, "positive roots ({}):", rs.len()).unwrap();
    let names: Vec<String> = rs
        .positive_roots()
        .iter()
        .map(|r| r.display(ctx.style).to_string())
        .collect();
    let width = names.iter().map(|n| n.chars().count()).max().unwrap_or(0);
    for (name, r) in names.iter().zip(rs.positive_roots()) {
        let pad = width - name.chars().count();
        writeln!(out, "  {name}{:pad$}  {}", "", r.display(RootStyle::Vector)).unwrap();
    }
    writeln!(
        out,
        "highest root: {}",
        rs.highest_root().display(ctx.style)
    )
    .unwrap();
    let basis = borel_basis(rs);
    let shown: Vec<String> = basis
        .iter()
        .map(|b| b.display(ctx.style).to_string())
        .collect();
    writeln!(out, "borel basis ({}): {}", basis.len(), shown.join(", ")).unwrap();
    out
}

fn ideal_list(ctx: &Ctx, command: &str, ideals: &[MonomialIdeal]) -> String {
    let rs = &ctx.rs;
    if ctx.json() {
        let mut r = Report::new(command, rs);
        r.ideals = Some(
            ideals
                .iter()
                .map(|j| ideal_entry(j, is_abelian(j, rs), rs))
                .collect(),
        );
        r.counts = Some(Counts::from(&counts_by_dimension(ideals, rs)));
        return r.to_json();
    }
    ideals
        .iter()
        .map(|j| format!("{}\n", j.display(rs, ctx.style)))
        .collect()
}

fn ideals(ctx: &Ctx) -> Result<String, CliError> {
    let mut all = ctx.ideals()?;
    if ctx.cmd.include_zero {
        all.insert(0, MonomialIdeal::zero(&ctx.rs));
    }
    Ok(ideal_list(ctx, "ideals", &all))
}

fn abelian(ctx: &Ctx) -> Result<String, CliError> {
    let rs = &ctx.rs;
    let mut all = vec![MonomialIdeal::zero(rs)];
    all.extend(ctx.ideals()?.into_iter().filter(|j| is_abelian(j, rs)));
    Ok(ideal_list(ctx, "abelian", &all))
}

fn classify(ctx: &Ctx) -> Result<String, CliError> {
    let rs = &ctx.rs;
    let ideals = ctx.ideals()?;
    let classification = Workers::new(ctx.cmd.jobs).classify(&ideals, rs);
    let counts = counts_by_dimension(&ideals, rs);
    if ctx.json() {
        let mut r = Report::new("classify", rs);
        r.ideals = Some(classified_entries(&classification, rs));
        r.counts = Some(Counts::from(&counts));
        return Ok(r.to_json());
    }
    let mut out = String::new();
    for e in &classification.entries {
        write!(
            out,
            "{} | kernel {}",
            e.ideal.display(rs, ctx.style),
            e.kernel.dimension()
        )
        .unwrap();
        if !e.kernel.is_zero() {
            let basis: Vec<String> = e
                .kernel
                .vectors
                .iter()
                .map(|v| {
                    CartanElementDisplay {
                        coeffs: v,
                        style: ctx.style,
                    }
                    .to_string()
                })
                .collect();
            write!(out, ": {}", basis.join(", ")).unwrap();
        }
        if e.abelian {
            out.push_str(" | abelian");
        }
        if e.is_mixed(rs) {
            out.push_str(" | mixed");
        }
        out.push('\n');
    }
    let histogram: Vec<String> = counts
        .by_dimension
        .iter()
        .map(|(d, n)| format!("{d}:{n}"))
        .collect();
    writeln!(
        out,
        "# monomial ideals: {} nonzero, {} with zero; abelian with zero: {}; mixed: {}",
        counts.nonzero,
        counts.with_zero,
        counts.abelian_with_zero,
        classification.mixed(rs).count()
    )
    .unwrap();
    writeln!(
        out,
        "# nonzero ideals by dimension: {}",
        histogram.join(" ")
    )
    .unwrap();
    Ok(out)
}

fn lattice(ctx: &Ctx) -> Result<String, CliError> {
    let rs = &ctx.rs;
    let ideals = ctx.ideals()?;
    let l = build_lattice(&ideals, rs)?;
    match ctx.cmd.format {
        Format::Dot => {
            let opts = RenderOptions {
                unicode: ctx.cmd.unicode,
                graph_name: rs.name(),
                ..Default::default()
            };
            Ok(export_dot(&l, rs, &opts))
        }
        Format::Json => {
            let mut r = Report::new("lattice", rs);
            r.ideals = Some(
                l.nodes
                    .iter()
                    .map(|j| ideal_entry(j, is_abelian(j, rs), rs))
                    .collect(),
            );
            r.edges = Some(l.edges.iter().map(|&(a, b)| [a, b]).collect());
            r.counts = Some(Counts::from(&counts_by_dimension(&ideals, rs)));
            Ok(r.to_json())
        }
        Format::Text => {
            let mut out = String::new();
            for (i, node) in l.nodes.iter().enumerate() {
                writeln!(out, "n{i} {}", node.display(rs, ctx.style)).unwrap();
            }
            for (lo, hi) in &l.edges {
                writeln!(out, "n{lo} -> n{hi}").unwrap();
            }
            Ok(out)
        }
    }
}

fn subalgebra_query(ctx: &Ctx, set: RootSet) -> Result<String, CliError> {
    let rs = &ctx.rs;
    let s = MonomialSubalgebra::new(set, rs)?;
    let (command, result) = if ctx.cmd.action == Action::Normalizer {
        ("normalizer", monomial_normalizer(&s, rs).root_set().clone())
    } else {
        ("centralizer", monomial_centralizer(&s, rs))
    };
    if ctx.json() {
        let mut r = Report::new(command, rs);
        r.input_set = Some(root_vectors(s.root_set(), rs));
        r.result_set = Some(root_vectors(&result, rs));
        r.checks = Some(Checks {
            subalgebra: Some(is_monomial_subalgebra(rs.roots_of(&result), rs)?),
            ..Default::default()
        });
        return Ok(r.to_json());
    }
    Ok(format!("{}\n", ctx.show(&result)))
}

fn check_set(ctx: &Ctx, set: RootSet) -> Result<String, CliError> {
    let rs = &ctx.rs;
    let checks = Checks {
        monomial_ideal: Some(is_ideal_set(&set, rs)),
        subalgebra: Some(is_monomial_subalgebra(rs.roots_of(&set), rs)?),
        abelian: Some(is_abelian_set(&set, rs)),
        ..Default::default()
    };
    if ctx.json() {
        let mut r = Report::new("check", rs);
        r.input_set = Some(root_vectors(&set, rs));
        r.checks = Some(checks);
        return Ok(r.to_json());
    }
    let yes = |b: Option<bool>| if b == Some(true) { "yes" } else { "no" };
    Ok(format!(
        "set: {}\nmonomial ideal: {}\nsubalgebra: {}\nabelian: {}\n",
        ctx.show(&set),
        yes(checks.monomial_ideal),
        yes(checks.subalgebra),
        yes(checks.abelian),
    ))
}

fn check_oracle(ctx: &Ctx) -> Result<String, CliError> {
    let rs = &ctx.rs;
    let oracle = brute_force_ideals(rs, DEFAULT_BRUTE_FORCE_BOUND)?;
    let enumerated = ctx.ideals()?;
    let agree = oracle == enumerated;
    let checks = Checks {
        enumerated: Some(enumerated.len()),
        oracle: Some(oracle.len()),
        agree: Some(agree),
        ..Default::default()
    };
    if !agree {
        return Err(CliError::Mismatch {
            enumerated: enumerated.len(),
            oracle: oracle.len(),
        });
    }
    if ctx.json() {
        let mut r = Report::new("check", rs);
        r.checks = Some(checks);
        return Ok(r.to_json());
    }
    Ok(format!(
        "{}: enumeration {}, subset oracle {}, agree\n",
        rs.name(),
        enumerated.len(),
        oracle.len()
    ))
}
