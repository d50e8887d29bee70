//! The `gpd` command line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gpd_core::{
    left_operator, representation_audit, right_operator, run_suite, transformation_groupoid_capped,
    GFun, GroupAction, Groupoid, Limits, MonoidTable, PropId, Side,
};
use serde::Serialize;

use crate::census::parallel_probe;
use crate::error::{read, write, Error, Result};
use crate::format::{
    named_groupoid, parse, to_compact, to_pretty, ActionFile, GFunFile, GroupoidFile, ManifestFile,
    MatrixFile, ProbeFile, ReportFile, TableFile,
};
use crate::stream::stream_check;

#[derive(Debug, Parser)]
#[command(
    name = "gpd",
    version,
    about = "Finite groupoids and their endomorphism monoids"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

/// Settings shared by every command. There is no environment configuration.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Largest monoid to enumerate.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_monoid: u64,
    /// Largest census order.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_order: u64,
    /// Largest groupoid to build or load.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_groupoid: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Write output here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            max_groupoid: self.cap_groupoid as usize,
            max_monoid: self.cap_monoid as usize,
            max_census_order: self.cap_order as usize,
            ..Limits::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    #[value(name = "S")]
    S,
    #[value(name = "S'")]
    SPrime,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::S => Side::S,
            SideArg::SPrime => Side::SPrime,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a groupoid file against every axiom.
    Validate { path: PathBuf },
    /// Write a constructed groupoid.
    Build {
        #[command(subcommand)]
        kind: BuildKind,
    },
    /// Enumerate S_G or S'_G with its Cayley table.
    Monoid {
        /// Groupoid file or constructor name (C3, V4, pair(2), unit(2)).
        groupoid: String,
        #[arg(long, value_enum, default_value_t = SideArg::S)]
        side: SideArg,
        /// Check the monoid laws without storing the table: every pair plus
        /// random triples for associativity.
        #[arg(long)]
        stream: bool,
        #[arg(long, default_value_t = 1_000_000)]
        triples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the structure checks and report every verdict.
    Verify {
        groupoid: String,
        /// `all` or a comma-separated list of ids such as `P3.3.4,P3.8`.
        #[arg(long, default_value = "all")]
        props: String,
    },
    /// Operator matrix of one element, or the full representation audit.
    Rep {
        groupoid: String,
        /// Element as comma-separated ids.
        #[arg(long, conflicts_with_all = ["function", "audit"])]
        map: Option<String>,
        /// Element from a function file.
        #[arg(long = "fn", conflicts_with = "audit")]
        function: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SideArg::S)]
        side: SideArg,
        #[arg(long)]
        audit: bool,
    },
    /// Census of small groupoids and the intersection probe.
    Search {
        #[arg(long)]
        order: usize,
        /// Also write every representative and a manifest per order here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BuildKind {
    Cyclic {
        n: usize,
    },
    Pair {
        n: usize,
    },
    Unitset {
        n: usize,
    },
    Union {
        a: String,
        b: String,
    },
    /// Transformation groupoid of an action file.
    Transform {
        path: PathBuf,
    },
}

/// Loads a groupoid file, or builds a named constructor when no such file exists.
pub fn load_groupoid(arg: &str, cap: usize) -> Result<Groupoid> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Ok(g) = named_groupoid(arg, cap) {
            return Ok(g);
        }
    }
    let file: GroupoidFile = parse(&read(path)?)?;
    let g = Groupoid::build_capped(file.to_raw()?, cap)?;
    if file.name.is_empty() {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        Ok(g.with_name(stem))
    } else {
        Ok(g)
    }
}

fn parse_props(s: &str) -> Result<Vec<PropId>> {
    if s == "all" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<PropId>().map_err(Error::from))
        .collect()
}

fn parse_map(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse()
                .map_err(|_| Error::Format(format!("bad map entry {v:?}")))
        })
        .collect()
}

/// Output of one command.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

fn render<T: Serialize>(config: &RunConfig, value: &T, text: impl FnOnce() -> String) -> String {
    match config.format {
        OutputFormat::Json => to_pretty(value),
        OutputFormat::Text => text(),
    }
}

#[derive(Serialize)]
struct AxiomLine {
    axiom: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ValidateReport {
    name: String,
    valid: bool,
    axioms: Vec<AxiomLine>,
}

#[derive(Serialize)]
struct StreamFile {
    side: String,
    elements: usize,
    pairs: String,
    triples: usize,
    seed: u64,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<(String, Vec<usize>)>,
}

#[derive(Serialize)]
struct SideAuditFile {
    pairs_checked: usize,
    homomorphism: bool,
    injective: bool,
    well_formed: bool,
    det_matches_units: bool,
    dense_full_rank: bool,
}

#[derive(Serialize)]
struct AuditFile {
    groupoid: String,
    pass: bool,
    left: SideAuditFile,
    right: SideAuditFile,
    involution_action: bool,
    involution_action_reversed: bool,
    transpose_right_action: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

fn side_file(a: &gpd_core::SideAudit) -> SideAuditFile {
    SideAuditFile {
        pairs_checked: a.pairs_checked,
        homomorphism: a.homomorphism,
        injective: a.injective,
        well_formed: a.well_formed,
        det_matches_units: a.det_matches_units,
        dense_full_rank: a.dense_full_rank,
    }
}

fn validate(config: &RunConfig, path: &Path) -> Result<Outcome> {
    let file: GroupoidFile = parse(&read(path)?)?;
    let raw = file.to_raw()?;
    let statuses = Groupoid::check_axioms(&raw)?;
    let valid = statuses.iter().all(|s| s.passed());
    let report = ValidateReport {
        name: file.name.clone(),
        valid,
        axioms: statuses
            .iter()
            .map(|s| AxiomLine {
                axiom: s.axiom.to_string(),
                status: match &s.witness {
                    Some(None) => "pass",
                    Some(Some(_)) => "fail",
                    None => "skipped",
                },
                witness: s.witness.clone().flatten(),
            })
            .collect(),
    };
    let text = render(config, &report, || {
        let mut t = String::new();
        for a in &report.axioms {
            let _ = write!(t, "{:<24} {}", a.axiom, a.status);
            if let Some(w) = &a.witness {
                let _ = write!(t, " {w:?}");
            }
            t.push('\n');
        }
        t.push_str(if valid { "valid\n" } else { "invalid\n" });
        t
    });
    Ok(Outcome {
        text,
        code: if valid { 0 } else { 1 },
    })
}

fn build(config: &RunConfig, kind: &BuildKind) -> Result<Outcome> {
    let cap = config.limits().max_groupoid;
    let g = match kind {
        BuildKind::Cyclic { n } => Groupoid::cyclic_capped(*n, cap)?,
        BuildKind::Pair { n } => Groupoid::pair_capped(*n, cap)?,
        BuildKind::Unitset { n } => Groupoid::unit_set_capped(*n, cap)?,
        BuildKind::Union { a, b } => {
            Groupoid::disjoint_union_capped(&load_groupoid(a, cap)?, &load_groupoid(b, cap)?, cap)?
        }
        BuildKind::Transform { path } => {
            let file: ActionFile = parse(&read(path)?)?;
            let action = GroupAction::new(file.group.resolve(cap)?, file.space, file.act)?;
            transformation_groupoid_capped(&action, cap)?
        }
    };
    // groupoid files are always compact JSON
    Ok(Outcome {
        text: to_compact(&GroupoidFile::from_groupoid(&g)),
        code: 0,
    })
}

fn monoid(
    config: &RunConfig,
    g: &Groupoid,
    side: Side,
    stream: Option<(usize, u64)>,
) -> Result<Outcome> {
    let limits = config.limits();
    if let Some((triples, seed)) = stream {
        let r = stream_check(g, side, triples, seed, &limits)?;
        let file = StreamFile {
            side: side.as_str().into(),
            elements: r.elements,
            pairs: r.pairs.to_string(),
            triples: r.triples,
            seed: r.seed,
            pass: r.pass(),
            failure: r.failure.clone().map(|(law, w)| (law.to_string(), w)),
        };
        let text = render(config, &file, || {
            format!(
                "{} on {}: {} elements, {} pairs, {} sampled triples: {}\n",
                file.side,
                g.name(),
                file.elements,
                file.pairs,
                file.triples,
                if file.pass { "pass" } else { "FAIL" }
            )
        });
        return Ok(Outcome {
            text,
            code: if r.pass() { 0 } else { 1 },
        });
    }
    let t = MonoidTable::enumerate(g, side, &limits)?;
    let file = TableFile::from_table(&t);
    let text = render(config, &file, || {
        let mut s = format!(
            "{} on {}: {} elements, identity {}\n",
            file.side,
            g.name(),
            t.len(),
            t.identity()
        );
        for (i, m) in file.elements.iter().enumerate() {
            let _ = writeln!(s, "{i:>6} {m:?}");
        }
        s
    });
    Ok(Outcome { text, code: 0 })
}

fn verify(config: &RunConfig, g: &Groupoid, props: &str) -> Result<Outcome> {
    let selection = parse_props(props)?;
    let report = run_suite(g, &config.limits(), &selection)?;
    let file = ReportFile::from(&report);
    let text = render(config, &file, || {
        let mut s = format!(
            "{}: |G| = {}, |S| = {}, |S'| = {}\n",
            file.groupoid, file.size, file.s_size, file.sp_size
        );
        for (k, v) in &file.verdicts {
            let _ = write!(s, "{k:<18} {}", if v.pass { "pass" } else { "FAIL" });
            if let Some(w) = &v.witness {
                let _ = write!(s, " {} {:?}", w.what, w.values);
            }
            s.push('\n');
        }
        s
    });
    Ok(Outcome {
        text,
        code: if report.all_pass() { 0 } else { 1 },
    })
}

fn rep(
    config: &RunConfig,
    g: &Groupoid,
    map: Option<Vec<usize>>,
    side: Side,
    audit: bool,
) -> Result<Outcome> {
    let limits = config.limits();
    if audit {
        let ts = MonoidTable::enumerate(g, Side::S, &limits)?;
        let tsp = MonoidTable::enumerate(g, Side::SPrime, &limits)?;
        let a = representation_audit(g, &ts, &tsp)?;
        let file = AuditFile {
            groupoid: g.name().into(),
            pass: a.pass(),
            left: side_file(&a.left),
            right: side_file(&a.right),
            involution_action: a.involution_action,
            involution_action_reversed: a.involution_action_reversed,
            transpose_right_action: a.transpose_right_action,
            witness: a.witness.clone(),
        };
        let text = render(config, &file, || {
            format!(
                "{}: left {} right {} action {}\n",
                file.groupoid,
                a.left.pass(),
                a.right.pass(),
                a.action_pass()
            )
        });
        return Ok(Outcome {
            text,
            code: if a.pass() { 0 } else { 1 },
        });
    }
    let map = map.ok_or_else(|| Error::Format("rep needs --map, --fn, or --audit".into()))?;
    let f = GFun::new(g, map)?;
    let op = match side {
        Side::S => left_operator(&f)?,
        Side::SPrime => right_operator(&f)?,
    };
    let file = MatrixFile::new(f.map(), &op);
    let text = render(config, &file, || {
        let mut s = String::new();
        for row in &file.matrix {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
        s
    });
    Ok(Outcome { text, code: 0 })
}

fn search(config: &RunConfig, order: usize, out_dir: Option<&Path>) -> Result<Outcome> {
    let (censuses, report) = parallel_probe(order, &config.limits())?;
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|source| Error::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        for c in &censuses {
            for g in &c.representatives {
                let path = dir.join(format!("{}.json", g.name()));
                write(&path, &to_compact(&GroupoidFile::from_groupoid(g)))?;
            }
            let path = dir.join(format!("manifest-{}.json", c.order));
            write(&path, &to_pretty(&ManifestFile::from(c)))?;
        }
    }
    let file = ProbeFile::from(&report);
    let text = render(config, &file, || {
        let mut s = String::new();
        for c in &censuses {
            let _ = writeln!(s, "order {}: {} groupoids", c.order, c.count());
        }
        let _ = writeln!(
            s,
            "forward direction: {}",
            if file.forward_holds { "holds" } else { "FAILS" }
        );
        let _ = writeln!(s, "{}", file.conclusion);
        s
    });
    Ok(Outcome { text, code: 0 })
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let config = &cli.config;
    let cap = config.limits().max_groupoid;
    match &cli.command {
        Command::Validate { path } => validate(config, path),
        Command::Build { kind } => build(config, kind),
        Command::Monoid {
            groupoid,
            side,
            stream,
            triples,
            seed,
        } => {
            let g = load_groupoid(groupoid, cap)?;
            monoid(
                config,
                &g,
                (*side).into(),
                stream.then_some((*triples, *seed)),
            )
        }
        Command::Verify { groupoid, props } => {
            verify(config, &load_groupoid(groupoid, cap)?, props)
        }
        Command::Rep {
            groupoid,
            map,
            function,
            side,
            audit,
        } => {
            let g = load_groupoid(groupoid, cap)?;
            let map = match (map, function) {
                (Some(m), _) => Some(parse_map(m)?),
                (None, Some(path)) => {
                    let file: GFunFile = parse(&read(path)?)?;
                    let (a, b) = (file.groupoid.resolve(cap)?.to_raw(), g.to_raw());
                    if a.product != b.product || a.inverse != b.inverse {
                        return Err(Error::Format(
                            "function file refers to a different groupoid".into(),
                        ));
                    }
                    Some(file.map)
                }
                (None, None) => None,
            };
            rep(config, &g, map, (*side).into(), *audit)
        }
        Command::Search { order, out_dir } => search(config, *order, out_dir.as_deref()),
    }
}

/// Runs a parsed command line, writes its output, and returns the exit code.
pub fn run(cli: &Cli) -> u8 {
    match execute(cli) {
        Ok(out) => {
            let written = match &cli.config.output {
                Some(path) => write(path, &out.text),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
