use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::json;

use unsharp_core::deduction::{
    check_theta_theorem, implication_membership, induced_relation, relevant_universe,
    search_deductive_systems, verify_deductive_system, DeductiveSystem, SetFamily,
    DEFAULT_UNIVERSE_CAP,
};
use unsharp_core::enumeration::{sweep, GeneratorSpec};
use unsharp_core::laws::{run_law_suite, LawId, LawReport, SuiteConfig};
use unsharp_core::{io, Algebra, Error, Operator, OperatorTable, Poset};

/// Unsharp negation, implication and conjunction on finite bounded posets.
#[derive(Parser)]
#[command(name = "unsharp", version)]
struct Cli {
    /// Emit JSON lines instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a poset file describes a bounded partial order.
    Validate { file: PathBuf },
    /// Print the table of an operator.
    Table {
        file: PathBuf,
        /// neg, imp or conj.
        #[arg(long)]
        op: Operator,
    },
    /// Model-check laws on one poset.
    Laws {
        file: PathBuf,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Deductive systems.
    #[command(subcommand)]
    Ds(DsCommand),
    /// Print the relation induced by a deductive system and check its properties.
    Theta {
        file: PathBuf,
        /// Comma-separated sets, e.g. `d,e,1` or `bc,d+e,1`.
        #[arg(long)]
        system: String,
    },
    /// Run a law suite over generated posets.
    Sweep(SweepArgs),
    /// Print the Hasse diagram in DOT.
    ExportDot { file: PathBuf },
}

#[derive(Subcommand)]
enum DsCommand {
    /// Check the deductive-system conditions for a family of sets.
    Verify {
        file: PathBuf,
        #[arg(long)]
        system: String,
    },
    /// List deductive systems inside the relevant universe.
    Search {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 100)]
        limit: usize,
        /// Largest universe to search.
        #[arg(long, default_value_t = DEFAULT_UNIVERSE_CAP)]
        cap: usize,
    },
}

#[derive(Args)]
struct SuiteArgs {
    /// Law ids or groups (all, theorems, negation, implication,
    /// characterization, probes), comma-separated.
    #[arg(long, default_value = "theorems")]
    suite: String,
    /// Quantify over all non-empty subsets when there are at most this many.
    #[arg(long, default_value_t = SuiteConfig::default().subset_budget)]
    subset_budget: usize,
    /// Random subsets drawn above the budget.
    #[arg(long, default_value_t = SuiteConfig::default().sample_size)]
    sample_size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SuiteArgs {
    fn config(&self) -> SuiteConfig {
        SuiteConfig {
            subset_budget: self.subset_budget,
            sample_size: self.sample_size,
            seed: self.seed,
            ..SuiteConfig::default()
        }
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("generator").required(true).args(["all", "random"])))]
struct SweepArgs {
    /// Every labeled bounded poset with this many elements.
    #[arg(long, value_name = "N")]
    all: Option<usize>,
    /// Random bounded posets with this many elements.
    #[arg(long, value_name = "N", requires_all = ["seeds", "prob"])]
    random: Option<usize>,
    /// Number of random posets, one per seed.
    #[arg(long)]
    seeds: Option<u64>,
    /// Edge probability between inner elements.
    #[arg(long)]
    prob: Option<f64>,
    #[arg(long, default_value_t = 0)]
    first_seed: u64,
    #[arg(long, default_value = "theorems")]
    laws: String,
    #[arg(long, default_value_t = SuiteConfig::default().subset_budget)]
    subset_budget: usize,
}

/// Everything that makes the process exit with status 2.
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<bool, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Poset, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    io::parse(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Validate { file } => validate(&load(file)?, json),
        Command::Table { file, op } => table(&load(file)?, *op, json),
        Command::Laws { file, suite } => laws(&load(file)?, suite, json),
        Command::Ds(DsCommand::Verify { file, system }) => ds_verify(&load(file)?, system, json),
        Command::Ds(DsCommand::Search {
            file,
            depth,
            limit,
            cap,
        }) => ds_search(&load(file)?, *depth, *limit, *cap, json),
        Command::Theta { file, system } => theta(&load(file)?, system, json),
        Command::Sweep(args) => run_sweep(args, json),
        Command::ExportDot { file } => {
            print!("{}", io::export_dot(&load(file)?));
            Ok(true)
        }
    }
}

fn validate(p: &Poset, json: bool) -> Outcome {
    if json {
        println!(
            "{}",
            json!({
                "check": "validate",
                "pass": true,
                "elements": p.len(),
                "covers": p.covers().len(),
                "bottom": p.name(p.bottom()),
                "top": p.name(p.top()),
            })
        );
    } else {
        println!(
            "valid bounded poset: {} elements, {} covers, bottom {}, top {}",
            p.len(),
            p.covers().len(),
            p.name(p.bottom()),
            p.name(p.top())
        );
    }
    Ok(true)
}

fn table(p: &Poset, op: Operator, json: bool) -> Outcome {
    let alg = Algebra::new(p.clone());
    let t = alg.table(op);
    if json {
        let entries = match &t {
            OperatorTable::Unary(u) => json!(u
                .entries()
                .iter()
                .map(|&s| p.format_set(s))
                .collect::<Vec<_>>()),
            OperatorTable::Binary(_, b) => json!((0..b.size())
                .map(|a| b
                    .row(a)
                    .iter()
                    .map(|&s| p.format_set(s))
                    .collect::<Vec<_>>())
                .collect::<Vec<_>>()),
        };
        println!(
            "{}",
            json!({"op": op.symbol(), "elements": p.names(), "table": entries})
        );
    } else {
        print!("{}", io::render_table(p, &t));
    }
    Ok(true)
}

fn print_reports(p: &Poset, reports: &[LawReport], json: bool) -> bool {
    for r in reports {
        if json {
            println!("{}", r.to_json(p));
        } else {
            println!("{}", r.summary(p));
            for cx in r.counterexamples.iter().skip(1) {
                println!(
                    "     counterexample {}: {} vs {}",
                    cx.render_witness(p),
                    cx.lhs.render(p),
                    cx.rhs.render(p)
                );
            }
        }
    }
    reports.iter().all(|r| r.pass)
}

fn laws(p: &Poset, suite: &SuiteArgs, json: bool) -> Outcome {
    let ids = LawId::parse_selection(&suite.suite)?;
    let alg = Algebra::new(p.clone());
    let reports = run_law_suite(&alg, &ids, &suite.config());
    Ok(print_reports(p, &reports, json))
}

fn ds_verify(p: &Poset, system: &str, json: bool) -> Outcome {
    let family = SetFamily::parse(p, system)?;
    let alg = Algebra::new(p.clone());
    let v = verify_deductive_system(&alg, &family);
    if json {
        let violations: Vec<_> = v
            .violations
            .iter()
            .map(|viol| {
                json!({
                    "condition": viol.condition(),
                    "elements": viol.elements().iter().map(|&x| p.name(x)).collect::<Vec<_>>(),
                    "detail": viol.render(p),
                })
            })
            .collect();
        let mut obj = json!({
            "check": "deductive-system",
            "system": family.render(p),
            "pass": v.holds,
        });
        if !violations.is_empty() {
            obj["witness"] = violations[0].clone();
            obj["violations"] = json!(violations);
        }
        println!("{obj}");
    } else {
        println!(
            "{}: deductive system: {}",
            family.render(p),
            if v.holds { "yes" } else { "no" }
        );
        for viol in &v.violations {
            println!("  {}", viol.render(p));
        }
    }
    Ok(v.holds)
}

fn ds_search(p: &Poset, depth: usize, limit: usize, cap: usize, json: bool) -> Outcome {
    let alg = Algebra::new(p.clone());
    let universe = relevant_universe(&alg, depth)?;
    let found = search_deductive_systems(&alg, &universe, limit, cap)?;
    if json {
        for d in &found {
            let sets: Vec<String> = d
                .members()
                .sets()
                .iter()
                .map(|&s| p.format_set(s))
                .collect();
            println!(
                "{}",
                json!({"check": "deductive-system-search", "system": sets})
            );
        }
    } else {
        println!(
            "universe of {} sets: {}",
            universe.len(),
            universe.render(p)
        );
        for d in &found {
            println!("{}", d.members().render(p));
        }
        println!("{} deductive system(s)", found.len());
    }
    Ok(true)
}

fn theta(p: &Poset, system: &str, json: bool) -> Outcome {
    let family = SetFamily::parse(p, system)?;
    let alg = Algebra::new(p.clone());
    let d = match DeductiveSystem::try_new(&alg, family.clone()) {
        Ok(d) => d,
        Err(v) => {
            if json {
                println!(
                    "{}",
                    json!({"check": "deductive-system", "system": family.render(p), "pass": false})
                );
            } else {
                println!("{}: deductive system: no", family.render(p));
                for viol in &v.violations {
                    println!("  {}", viol.render(p));
                }
            }
            return Ok(false);
        }
    };
    let universe = relevant_universe(&alg, 1)?;
    let relation = induced_relation(&alg, d.members(), &universe);
    let pair = |(x, y): (usize, usize)| format!("({},{})", p.name(x), p.name(y));
    let restriction: Vec<String> = relation.restriction_pairs().into_iter().map(pair).collect();
    let membership: Vec<String> = implication_membership(&alg, d.members())
        .into_iter()
        .map(pair)
        .collect();
    let reports = check_theta_theorem(&alg, &d);
    if json {
        let classes = relation
            .classes()
            .map(|cs| cs.iter().map(|&c| p.format_set(c)).collect::<Vec<_>>());
        println!(
            "{}",
            json!({
                "check": "theta",
                "system": d.members().render(p),
                "restriction": restriction,
                "classes": classes,
                "implication_members": membership,
            })
        );
    } else {
        match relation.classes() {
            Some(cs) => {
                let cs: Vec<String> = cs
                    .iter()
                    .map(|&c| format!("{{{}}}", p.format_set(c)))
                    .collect();
                println!("Θ(D) ∩ P² classes: {}", cs.join(" "));
            }
            None => println!("Θ(D) ∩ P²: {}", restriction.join(" ")),
        }
        println!("x→y ∈ D for: {}", membership.join(" "));
    }
    Ok(print_reports(p, &reports, json))
}

fn run_sweep(args: &SweepArgs, json: bool) -> Outcome {
    let generator = match (args.all, args.random) {
        (Some(n), None) => GeneratorSpec::All { n },
        (None, Some(n)) => GeneratorSpec::Random {
            n,
            seeds: args.seeds.unwrap_or(1),
            prob: args.prob.unwrap_or(0.5),
            first_seed: args.first_seed,
        },
        _ => return Err(UsageError("give exactly one of --all and --random".into())),
    };
    let ids = LawId::parse_selection(&args.laws)?;
    let config = SuiteConfig {
        subset_budget: args.subset_budget,
        ..SuiteConfig::default()
    };
    let report = sweep(&generator, &ids, &config)?;
    for f in &report.failures {
        if json {
            println!("{}", f.to_json()?);
        } else {
            let p = io::parse(&f.poset)?;
            println!("{}\n  poset {}", f.report.summary(&p), f.poset);
        }
    }
    let pass = report.failures.is_empty();
    if json {
        println!(
            "{}",
            json!({
                "check": "sweep",
                "generator": generator,
                "posets": report.posets_checked,
                "laws": ids.iter().map(|l| l.id()).collect::<Vec<_>>(),
                "failures": report.failures.len(),
                "pass": pass,
            })
        );
    } else {
        println!(
            "{} poset(s), {} law(s), {} failure(s)",
            report.posets_checked,
            ids.len(),
            report.failures.len()
        );
    }
    Ok(pass)
}
