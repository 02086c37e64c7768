use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use submodular::classes::ClassReport;
use submodular::lattice::{to_dot, Limits, DEFAULT_SUBGROUP_CAP};
use submodular::verify::{self, Universe, VerifyOptions, VerifyReport};
use submodular::{catalog, modularity, Error, GroupSpec, SubgroupLattice};

#[derive(Parser)]
#[command(name = "submodular", version, about = "Subgroup lattices, submodular subgroups and group classes")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    #[arg(long, global = true, default_value_t = DEFAULT_SUBGROUP_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    subgroup_cap: u64,
    #[arg(long, global = true, default_value_t = submodular::group::DEFAULT_ELEMENT_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    element_cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every class predicate for a catalog group or a group spec file.
    Analyze { group: String },
    /// Print or write the Hasse diagram of the subgroup lattice as DOT.
    Lattice {
        group: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Shade the subgroups that are modular in the whole group.
        #[arg(long)]
        modular: bool,
    },
    /// Run verification suites over the catalog and any extra groups.
    Verify {
        /// Suite id, or "all" (repeatable).
        #[arg(long = "suite", default_value = "all")]
        suites: Vec<String>,
        /// Additional group spec files (repeatable).
        #[arg(long = "extra")]
        extras: Vec<PathBuf>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Record wall time per suite (makes reports run-dependent).
        #[arg(long)]
        timings: bool,
        /// Per-suite time budget in seconds.
        #[arg(long, default_value_t = verify::DEFAULT_SUITE_BUDGET.as_secs())]
        budget_secs: u64,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the built-in groups.
    List,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        _ if e.is_resource() => 3,
        Error::UnknownGroup(_)
        | Error::UnknownSuite(_)
        | Error::Parse { .. }
        | Error::InvalidArgument(_)
        | Error::InvalidPermutation(_)
        | Error::DegreeMismatch { .. } => 2,
        _ => 1,
    }
}

fn limits(cli: &Cli) -> Limits {
    Limits {
        element_cap: cli.element_cap as usize,
        subgroup_cap: cli.subgroup_cap as usize,
        ..Limits::default()
    }
}

fn resolve(name: &str) -> submodular::Result<GroupSpec> {
    if let Some(spec) = catalog::find(name) {
        return Ok(spec);
    }
    let path = Path::new(name);
    if path.is_file() {
        return GroupSpec::parse(&std::fs::read_to_string(path)?);
    }
    Err(Error::UnknownGroup(name.to_string()))
}

fn build(cli: &Cli, name: &str) -> submodular::Result<(GroupSpec, SubgroupLattice)> {
    let spec = resolve(name)?;
    let limits = limits(cli);
    let group = spec.close(limits.element_cap)?;
    let lattice = SubgroupLattice::with_limits(Arc::new(group), limits)?;
    Ok((spec, lattice))
}

fn json<T: Serialize>(value: &T) -> submodular::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn run(cli: &Cli) -> submodular::Result<u8> {
    match &cli.command {
        Command::Analyze { group } => {
            let (spec, lat) = build(cli, group)?;
            let report = ClassReport::build(&spec.name, &lat)?;
            match cli.format {
                Format::Json => print!("{}", json(&report)?),
                Format::Text => print!("{}", render_report(&report)),
            }
            Ok(0)
        }
        Command::Lattice { group, dot, modular } => {
            let (_, lat) = build(cli, group)?;
            let shaded = modular.then(|| modularity::relation(&lat).modular_in(lat.top()).clone());
            let text = to_dot(&lat, shaded.as_ref());
            match dot {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Verify { suites, extras, report, timings, budget_secs } => {
            let mut specs = catalog::builtin_catalog();
            for path in extras {
                specs.push(GroupSpec::parse(&std::fs::read_to_string(path)?)?);
            }
            // Reject unknown ids before building any lattice.
            for id in suites {
                if id != "all" && verify::suite_description(id).is_none() {
                    return Err(Error::UnknownSuite(id.clone()));
                }
            }
            let universe = Universe::build(specs, limits(cli))?;
            let opts = VerifyOptions {
                budget: Duration::from_secs(*budget_secs),
                timings: *timings,
            };
            let result = verify::run_suites(&universe, suites, &opts)?;
            if let Some(path) = report {
                std::fs::write(path, result.to_json()?)?;
            }
            match cli.format {
                Format::Json => print!("{}", result.to_json()?),
                Format::Text => print!("{}", render_verify(&result)),
            }
            Ok(if result.pass { 0 } else { 1 })
        }
        Command::Catalog { action: CatalogAction::List } => {
            #[derive(Serialize)]
            struct Row {
                name: String,
                order: usize,
                degree: usize,
            }
            let rows = catalog::builtin_catalog()
                .into_iter()
                .map(|spec| {
                    let order = spec.close(cli.element_cap as usize)?.order();
                    Ok(Row { order, degree: spec.degree, name: spec.name })
                })
                .collect::<submodular::Result<Vec<_>>>()?;
            match cli.format {
                Format::Json => print!("{}", json(&rows)?),
                Format::Text => {
                    for r in rows {
                        println!("{:<16} order {:<5} degree {}", r.name, r.order, r.degree);
                    }
                }
            }
            Ok(0)
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_report(r: &ClassReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group {} (order {}, degree {}, {} subgroups)", r.group, r.order, r.degree, r.subgroup_count);
    let _ = writeln!(out, "primes: {:?}", r.primes);
    let flags = [
        ("abelian", r.abelian),
        ("in B (abelian, squarefree exponent)", r.in_b),
        ("nilpotent", r.nilpotent),
        ("soluble", r.soluble),
        ("metanilpotent", r.metanilpotent),
        ("supersoluble", r.supersoluble),
        ("strongly supersoluble", r.strongly_supersoluble),
        ("smU (Sylows submodular)", r.sm_u),
        ("wU (Sylows P-subnormal)", r.w_u),
        ("Ore dispersive", r.ore_dispersive),
    ];
    for (name, v) in flags {
        let _ = writeln!(out, "{name}: {}", yes(v));
    }
    for f in &r.in_a {
        let _ = writeln!(out, "in A({}): {}", f.prime - 1, yes(f.value));
    }
    for f in &r.p_nilpotent {
        let _ = writeln!(out, "{}-nilpotent: {}", f.prime, yes(f.value));
    }
    let orders = |chain: &[submodular::classes::SubgroupInfo]| {
        chain.iter().map(|s| s.order.to_string()).collect::<Vec<_>>().join(" < ")
    };
    if let Some(chain) = &r.ore_chain {
        let _ = writeln!(out, "Ore chain: {}", orders(chain));
    }
    let _ = writeln!(out, "Fitting subgroup: order {} <{}>", r.fitting.order, r.fitting.generators.join(", "));
    let _ = writeln!(out, "Frattini subgroup: order {} <{}>", r.frattini.order, r.frattini.generators.join(", "));
    let factors: Vec<String> = r.chief_series.iter().map(|f| f.order.to_string()).collect();
    let _ = writeln!(out, "chief factor orders: {}", factors.join(", "));
    for s in &r.sylows {
        let chain = s.submodular_chain.as_deref().map_or("not submodular".to_string(), |c| format!("submodular chain {}", orders(c)));
        let _ = writeln!(
            out,
            "Sylow {}-subgroup <{}> (order {}, {} conjugates): {chain}; K-P-subnormal {}, P-subnormal {}",
            s.prime,
            s.subgroup.generators.join(", "),
            s.subgroup.order,
            s.conjugates,
            yes(s.kp_subnormal),
            yes(s.p_subnormal)
        );
    }
    out
}

fn render_verify(report: &VerifyReport) -> String {
    let mut out = String::new();
    for s in &report.suites {
        let status = if s.pass { "PASS" } else { "FAIL" };
        let time = s.elapsed_ms.map_or(String::new(), |ms| format!(", {ms} ms"));
        let skipped = if s.skipped.is_empty() { String::new() } else { format!(", {} skipped", s.skipped.len()) };
        let _ = writeln!(out, "[{status}] {} ({} instances{skipped}{time})", s.suite_id, s.instances.len());
        for i in s.instances.iter().filter(|i| !i.pass) {
            let _ = writeln!(out, "    {}: {}", i.group, i.witness);
        }
    }
    let _ = writeln!(
        out,
        "{} over {} groups",
        if report.pass { "all suites pass" } else { "verification FAILED" },
        report.universe.len()
    );
    out
}
