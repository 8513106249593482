use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use trihom::pipeline::{reduce_to_digraph_family, solve, Route, Strategy};
use trihom::recognize::{classify, ClassReport, DerivedDigraph};
use trihom::surjective::solve_surjective;
use trihom::{brute_force, check_certificate, Budget, Certificate, Error, ListInstance, Trigraph};

mod catalog;
mod equivcheck;

#[derive(Parser)]
#[command(name = "trihom", version, about = "List homomorphism problems for trigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural classification of a trigraph.
    Classify {
        trigraph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide a list homomorphism instance. Exit 0 = YES, 1 = NO.
    Solve {
        trigraph: PathBuf,
        instance: PathBuf,
        /// Require every vertex of H to be used.
        #[arg(long)]
        surjective: bool,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        /// Print the homomorphism when one exists.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write the equivalent family of instances over H-minus.
    Reduce {
        trigraph: PathBuf,
        instance: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare every solver against brute force on random instances.
    Equivcheck {
        trigraph: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tabulate class membership for all small trigraphs.
    Catalog {
        #[arg(long)]
        k: usize,
        /// Only symmetric trigraphs.
        #[arg(long)]
        symmetric: bool,
        /// CSV destination; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Trigraphs drawn when k = 4.
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Tree,
    TreeLike,
    Cycle,
    Exact,
    Oracle,
}

/// Exit status 1: a NO answer or a failed check.
const NO: u8 = 1;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) => 2,
        Error::Contract(_) => 3,
        Error::Budget(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::from_env();
    let result = match cli.command {
        Command::Classify { trigraph, json } => cmd_classify(&trigraph, json, &budget),
        Command::Solve {
            trigraph,
            instance,
            surjective,
            strategy,
            witness,
            json,
        } => cmd_solve(&trigraph, &instance, surjective, strategy, witness, json, &budget),
        Command::Reduce { trigraph, instance, out } => cmd_reduce(&trigraph, &instance, &out, &budget),
        Command::Equivcheck {
            trigraph,
            max_n,
            samples,
            seed,
        } => read_trigraph(&trigraph).and_then(|h| equivcheck::run(&h, max_n, samples, seed, &budget)),
        Command::Catalog {
            k,
            symmetric,
            out,
            samples,
            seed,
        } => catalog::run(k, symmetric, out.as_deref(), samples, seed, &budget),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn read_trigraph(path: &Path) -> Result<Trigraph, Error> {
    Trigraph::parse_tri(&read(path)?)
}

fn read_instance(h: &Path, g: &Path) -> Result<ListInstance, Error> {
    let h = read_trigraph(h)?;
    ListInstance::parse_lhi(&h, &read(g)?)
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn cmd_classify(path: &Path, as_json: bool, budget: &Budget) -> Result<u8, Error> {
    let h = read_trigraph(path)?;
    let report = classify(&h, budget)?;
    if as_json {
        println!("{}", json(&report));
    } else {
        print!("{}", render_report(&report));
    }
    Ok(0)
}

fn render_report(r: &ClassReport) -> String {
    let flag = |b: bool| if b { "true" } else { "false" };
    let pairs = |f: &[(usize, usize)]| f.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ");
    let digraph = |d: &DerivedDigraph| {
        let ids = d.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        let mut s = format!("vertices [{ids}]\n");
        for row in &d.matrix {
            s += &format!("  {row}\n");
        }
        s
    };
    let mut s = format!("k: {}\n", r.k);
    s += &format!("is_trigraph_tree: {}\n", flag(r.is_trigraph_tree));
    s += &match &r.special_tree_like {
        Some(f) => format!("special_tree_like: F' = {{{}}}\n", pairs(f)),
        None => "special_tree_like: NONE\n".into(),
    };
    match (&r.tree_like, &r.not_tree_like) {
        (Some(steps), _) => {
            s += "tree_like: derivation\n";
            for step in steps {
                s += &format!("  {step}\n");
            }
        }
        (None, reason) => s += &format!("tree_like: NONE ({})\n", reason.as_deref().unwrap_or("")),
    }
    s += &format!("is_cycle: {}\n", flag(r.is_cycle));
    s += &format!("good_cycle: {}\n", r.good_cycle.as_deref().map_or("NONE".into(), |c| format!("({c})")));
    s += &format!("unresolved_cycle: {}\n", flag(r.unresolved_cycle));
    s += &format!("simple_case: {}\n", flag(r.simple_case));
    s += &format!("slhom_equiv: {}\n", flag(r.slhom_equiv));
    s += &format!("h_minus: {}", digraph(&r.h_minus));
    s += &format!("h_minus_minus: {}", digraph(&r.h_minus_minus));
    s += &format!("verdict: {}\n", r.verdict);
    s
}

#[derive(Serialize)]
struct Verdict {
    verdict: &'static str,
    strategy: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<(usize, usize)>>,
}

fn cmd_solve(
    h: &Path,
    g: &Path,
    surjective: bool,
    strategy: StrategyArg,
    witness: bool,
    as_json: bool,
    budget: &Budget,
) -> Result<u8, Error> {
    let inst = read_instance(h, g)?;
    let (cert, taken) = decide(&inst, surjective, strategy, budget)?;
    if let Some(f) = &cert {
        if !check_certificate(&inst, f, surjective)? {
            return Err(Error::Contract(format!("{taken} solver returned an invalid homomorphism")));
        }
    }
    let out = Verdict {
        verdict: if cert.is_some() { "YES" } else { "NO" },
        strategy: taken,
        witness: cert
            .as_ref()
            .filter(|_| witness)
            .map(|f| f.0.iter().enumerate().map(|(u, &x)| (u + 1, x + 1)).collect()),
    };
    if as_json {
        println!("{}", json(&out));
    } else {
        println!("{}", out.verdict);
        println!("strategy: {}", out.strategy);
        if let Some(f) = cert.as_ref().filter(|_| witness) {
            print!("{}", ListInstance::witness_lines(f));
        }
    }
    Ok(if cert.is_some() { 0 } else { NO })
}

fn decide(
    inst: &ListInstance,
    surjective: bool,
    strategy: StrategyArg,
    budget: &Budget,
) -> Result<(Option<Certificate>, String), Error> {
    let route = match strategy {
        StrategyArg::Oracle => return Ok((brute_force(inst, surjective, budget)?, "oracle".into())),
        _ if surjective => {
            if !matches!(strategy, StrategyArg::Auto) {
                return Err(Error::Input("surjective problems support only the auto and oracle strategies".into()));
            }
            return Ok((solve_surjective(inst, budget)?, "surjective".into()));
        }
        StrategyArg::Auto => return solve(inst, Strategy::Auto, budget).map(|s| (s.certificate, s.route.name().into())),
        StrategyArg::Tree => Route::Tree,
        StrategyArg::TreeLike => Route::TreeLike,
        StrategyArg::Cycle => Route::GoodCycle,
        StrategyArg::Exact => Route::Exact,
    };
    let s = solve(inst, Strategy::Force(route), budget)?;
    Ok((s.certificate, s.route.name().into()))
}

#[derive(Serialize)]
struct Manifest {
    /// `h_minus.tri` vertex i is vertex `h_minus_vertices[i - 1]` of H.
    h_minus_vertices: Vec<usize>,
    members: Vec<String>,
}

fn cmd_reduce(h: &Path, g: &Path, out: &Path, budget: &Budget) -> Result<u8, Error> {
    let inst = read_instance(h, g)?;
    let family = reduce_to_digraph_family(&inst, budget)?;
    let (minus, map) = if inst.h.has_strong() {
        inst.h.h_minus()
    } else {
        (inst.h.clone(), trihom::Remap::identity(inst.k()))
    };
    fs::create_dir_all(out).map_err(|e| Error::Input(format!("{}: {e}", out.display())))?;
    write(&out.join("h_minus.tri"), &minus.to_tri())?;
    let width = family.len().to_string().len().max(3);
    let mut members = Vec::new();
    for (i, m) in family.members.iter().enumerate() {
        let name = format!("member_{:0width$}.lhi", i + 1);
        write(&out.join(&name), &m.to_lhi())?;
        members.push(name);
    }
    let manifest = Manifest {
        h_minus_vertices: map.origin.iter().map(|x| x + 1).collect(),
        members,
    };
    write(&out.join("manifest.json"), &(json(&manifest) + "\n"))?;
    println!(
        "{} instances over H-minus ({} vertices) written to {}",
        family.len(),
        minus.order(),
        out.display()
    );
    Ok(0)
}
