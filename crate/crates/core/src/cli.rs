//! The `grouplab` command line.
//!
//! Exit codes: 0 success, 1 disagreement or failed verification, 2 usage,
//! 3 cap or time budget exceeded, 4 I/O or malformed input file.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::characteristic::{center, fitting, frattini, is_nilpotent, is_supersoluble};
use crate::constructors::{build_with_caps, profile_specs, read_manifest, GroupSpec, Profile};
use crate::error::{Error, Result};
use crate::genset::{GenSearch, GenSetSearchConfig};
use crate::graphs::{build_graph, export_dot, export_tsv, GraphKind};
use crate::group::{Caps, Group};
use crate::report::{emit_report, run_corpus, EvalOptions};
use crate::simpleverify::{candidate_report, census, find_witness};
use crate::structure::{
    decide_independence_structural, decide_rank_independence_structural, decompose,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "grouplab",
    version,
    about = "Minimal generating sets and independence in finite groups"
)]
struct Cli {
    /// Largest group order whose subgroup lattice may be computed
    /// [env: GROUPLAB_LATTICE_CAP].
    #[arg(long, global = true)]
    lattice_cap: Option<usize>,
    /// Wall-clock budget in seconds for each generating-set search.
    #[arg(long, global = true)]
    time_budget: Option<f64>,
    /// Reserved; accepted for reproducible invocations and otherwise unused.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Suppress progress and summary output.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, d(G) and characteristic subgroups of a group.
    Info {
        group: String,
        /// Print one JSON object, including the decomposition `W ⋊ H`.
        #[arg(long)]
        json: bool,
    },
    /// Decide a property by brute force, structure, or both.
    Decide {
        group: String,
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Write a graph on the elements of a group as DOT.
    Graph {
        group: String,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        out: PathBuf,
        /// Also write the edge list as TSV.
        #[arg(long)]
        tsv: Option<PathBuf>,
    },
    /// Maximal-subgroup census and witness search for a simple group.
    VerifySimple {
        group: String,
        /// Report every conjugacy class representative, not only the witness.
        #[arg(long)]
        full: bool,
        /// Write the census table as TSV.
        #[arg(long)]
        census: Option<PathBuf>,
    },
    /// Sweep a corpus and write the comparison report.
    Corpus {
        #[arg(long, default_value = "small")]
        profile: String,
        /// Read spec strings from a manifest instead of a built-in profile.
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        /// Largest order for which m(G) is computed.
        #[arg(long, default_value_t = 128)]
        m_cap: usize,
        /// Fill the ms column; reports are then no longer reproducible.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    Independence,
    Rank,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Structural,
    Both,
}

struct Ctx<'a> {
    caps: Caps,
    search: GenSetSearchConfig,
    quiet: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn say(&mut self, line: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", line.as_ref()).map_err(|e| Error::io("<stdout>", e))
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::TimeBudgetExceeded => EXIT_CAP,
        Error::Io { .. } | Error::MalformedLine { .. } => EXIT_IO,
        Error::InvalidSpec(_) | Error::NotSimple(_) => EXIT_USAGE,
        _ => EXIT_DISAGREE,
    }
}

/// A spec string, an existing `.gens` file, or `@path`.
pub fn resolve_group_arg(arg: &str) -> Result<GroupSpec> {
    if !arg.starts_with('@') && Path::new(arg).is_file() {
        return Ok(GroupSpec::FromFile(PathBuf::from(arg)));
    }
    arg.parse()
}

fn load(ctx: &Ctx<'_>, arg: &str) -> Result<Group> {
    build_with_caps(&resolve_group_arg(arg)?, ctx.caps)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut caps = Caps::default();
    let env_cap = std::env::var("GROUPLAB_LATTICE_CAP").ok();
    match cli
        .lattice_cap
        .map(Ok)
        .or_else(|| env_cap.map(|s| s.trim().parse::<usize>()))
    {
        Some(Ok(n)) => caps.lattice_order = n,
        Some(Err(_)) => {
            let _ = writeln!(err, "error: GROUPLAB_LATTICE_CAP is not a number");
            return EXIT_USAGE;
        }
        None => {}
    }
    let search = GenSetSearchConfig {
        time_budget: cli.time_budget.map(Duration::from_secs_f64),
        ..GenSetSearchConfig::default()
    };
    let mut ctx = Ctx {
        caps,
        search,
        quiet: cli.quiet,
        out,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(ctx: &mut Ctx<'_>, cmd: Command) -> Result<i32> {
    match cmd {
        Command::Info { group, json } => info(ctx, &group, json),
        Command::Decide {
            group,
            property,
            method,
        } => decide(ctx, &group, property, method),
        Command::Graph {
            group,
            kind,
            out,
            tsv,
        } => graph(ctx, &group, &kind, &out, tsv.as_deref()),
        Command::VerifySimple {
            group,
            full,
            census,
        } => verify_simple(ctx, &group, full, census.as_deref()),
        Command::Corpus {
            profile,
            manifest,
            out,
            jobs,
            m_cap,
            timings,
        } => corpus(
            ctx,
            &profile,
            manifest.as_deref(),
            &out,
            jobs,
            m_cap,
            timings,
        ),
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn info(ctx: &mut Ctx<'_>, arg: &str, json: bool) -> Result<i32> {
    let g = load(ctx, arg)?;
    let search = GenSearch::with_config(&g, ctx.search)?;
    let fields = [
        ("order", g.order().to_string()),
        ("degree", g.degree().to_string()),
        ("d", search.d()?.to_string()),
        ("center", center(&g).order().to_string()),
        ("frattini", frattini(&g)?.order().to_string()),
        ("fitting", fitting(&g)?.order().to_string()),
        ("abelian", flag(g.is_abelian()).to_string()),
        ("nilpotent", flag(is_nilpotent(&g)).to_string()),
        ("supersoluble", flag(is_supersoluble(&g)?).to_string()),
    ];
    if json {
        let mut obj = serde_json::Map::new();
        obj.insert("group".into(), g.name().into());
        for (k, v) in fields {
            let value = match v.parse::<u64>() {
                Ok(n) => n.into(),
                Err(_) => (v == "yes").into(),
            };
            obj.insert(k.into(), value);
        }
        let dec = serde_json::to_value(decompose(&g)?)
            .map_err(|e| Error::io("<json>", std::io::Error::other(e)))?;
        obj.insert("decomposition".into(), dec);
        ctx.say(serde_json::Value::Object(obj).to_string())?;
        return Ok(EXIT_OK);
    }
    ctx.say(format!("group\t{}", g.name()))?;
    for (k, v) in fields {
        ctx.say(format!("{k}\t{v}"))?;
    }
    Ok(EXIT_OK)
}

fn decide(ctx: &mut Ctx<'_>, arg: &str, property: Property, method: Method) -> Result<i32> {
    let g = load(ctx, arg)?;
    let (name, brute, structural) = match property {
        Property::Independence => {
            let brute = if method != Method::Structural {
                let search = GenSearch::with_config(&g, ctx.search)?;
                let cex = search.independence_counterexample()?;
                let detail =
                    cex.map_or(String::new(), |(x, y)| format!(" dependent pair e{x} e{y}"));
                Some((cex.is_none(), format!("{}{detail}", cex.is_none())))
            } else {
                None
            };
            let structural = (method != Method::Brute)
                .then(|| decide_independence_structural(&g))
                .transpose()?;
            ("independence", brute, structural)
        }
        Property::Rank => {
            let brute = if method != Method::Structural {
                let search = GenSearch::with_config(&g, ctx.search)?;
                let p = search.has_rank_independence_property()?;
                let cex = search.rank_counterexample()?;
                let detail = cex.map_or(String::new(), |(x, y)| format!(" pair e{x} e{y}"));
                Some((p.as_bool(), format!("{p:?}{detail}")))
            } else {
                None
            };
            let structural = (method != Method::Brute)
                .then(|| decide_rank_independence_structural(&g))
                .transpose()?;
            ("rank", brute, structural)
        }
    };
    if let Some((_, text)) = &brute {
        ctx.say(format!("{name}\tbrute\t{text}"))?;
    }
    if let Some(v) = &structural {
        ctx.say(format!("{name}\tstructural\t{v}"))?;
    }
    if let (Some((b, _)), Some(v)) = (brute, structural) {
        match v.as_bool() {
            Some(s) if s != b => {
                ctx.say(format!("{name}\tagree\tno"))?;
                return Ok(EXIT_DISAGREE);
            }
            Some(_) => ctx.say(format!("{name}\tagree\tyes"))?,
            None => ctx.say(format!("{name}\tagree\tundecided"))?,
        }
    }
    Ok(EXIT_OK)
}

fn graph(ctx: &mut Ctx<'_>, arg: &str, kind: &str, out: &Path, tsv: Option<&Path>) -> Result<i32> {
    let kind: GraphKind = kind.parse()?;
    let g = load(ctx, arg)?;
    let search = GenSearch::with_config(&g, ctx.search)?;
    let graph = build_graph(&search, kind)?;
    export_dot(&graph, out)?;
    if let Some(path) = tsv {
        export_tsv(&graph, path)?;
    }
    if !ctx.quiet {
        ctx.say(format!(
            "{} graph: {} vertices, {} edges -> {}",
            kind.as_str(),
            graph.vertex_count(),
            graph.edge_count(),
            out.display()
        ))?;
    }
    Ok(EXIT_OK)
}

fn verify_simple(
    ctx: &mut Ctx<'_>,
    arg: &str,
    full: bool,
    census_out: Option<&Path>,
) -> Result<i32> {
    let g = load(ctx, arg)?;
    let witness = find_witness(&g)?;
    let Some(w) = witness else {
        ctx.say("witness\tnone")?;
        return Ok(EXIT_DISAGREE);
    };
    let search = GenSearch::with_config(&g, ctx.search)?;
    let independent = search.independent(w.s, w.x)?;
    let rows = candidate_report(&g)?;
    let row = rows
        .iter()
        .find(|r| r.s == w.s)
        .expect("witness is a class representative");
    let lines = [
        format!("group\t{}", g.name()),
        format!("s\te{}\torder {}", w.s, g.elem_order(w.s)),
        format!("x\te{}\torder {}", w.x, g.elem_order(w.x)),
        format!("maximals containing s\t{}", w.containing.len()),
        format!("classes met\t{}", row.classes_met),
        format!("x in intersection\t{}", w.checks.x_in_intersection),
        format!("non-commuting\t{}", w.checks.non_commuting),
        format!(
            "x normalizes, not centralizes\t{}",
            w.checks.x_normalizes_not_centralizes
        ),
        format!("s, x independent\t{independent}"),
        format!("N > C\t{}", row.n_gt_c),
        format!("no two conjugate\t{}", row.no_two_conjugate),
    ];
    for l in lines {
        ctx.say(l)?;
    }
    if full {
        ctx.say("s\torder\tmaximals\tclasses\tno_two_conjugate\tn_gt_c")?;
        for r in &rows {
            ctx.say(format!(
                "e{}\t{}\t{}\t{}\t{}\t{}",
                r.s, r.order, r.maximals_containing, r.classes_met, r.no_two_conjugate, r.n_gt_c
            ))?;
        }
    }
    if let Some(path) = census_out {
        let candidates: Vec<usize> = rows.iter().map(|r| r.s).collect();
        let text = census(&g)?.to_tsv(&candidates);
        std::fs::write(path, text).map_err(|e| Error::io(path, e))?;
    }
    let ok = w.checks.x_in_intersection
        && w.checks.non_commuting
        && !independent
        && row.satisfies_both();
    Ok(if ok { EXIT_OK } else { EXIT_DISAGREE })
}

fn corpus(
    ctx: &mut Ctx<'_>,
    profile: &str,
    manifest: Option<&Path>,
    out: &Path,
    jobs: Option<usize>,
    m_cap: usize,
    timings: bool,
) -> Result<i32> {
    let specs: Vec<GroupSpec> = match manifest {
        Some(path) => read_manifest(path)?,
        None => profile_specs(profile.parse::<Profile>()?)
            .into_iter()
            .map(str::parse)
            .collect::<Result<_>>()?,
    };
    let opts = EvalOptions {
        m_cap,
        search: ctx.search,
        timings,
    };
    let report = run_corpus(&specs, ctx.caps, &opts, jobs)?;
    emit_report(&report, out)?;
    let s = report.summary();
    if !ctx.quiet {
        ctx.say(format!(
            "{} groups: {} agree, {} disagree, {} undecided",
            report.rows.len(),
            s.agreements,
            s.disagreements,
            s.undecided
        ))?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    })
}
