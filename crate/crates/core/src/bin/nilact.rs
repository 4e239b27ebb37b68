use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nilact::actions::{ActionOnGroup, SemidirectProduct};
use nilact::cohomology::{decomposition_map_with_budget, h1_with_budget};
use nilact::group::Subgroup;
use nilact::harness::{self, report, Check, Format};
use nilact::structure::{all_complements, conjugacy_classes_under};
use nilact::theorems::VerifyOptions;

#[derive(Parser)]
#[command(name = "nilact", version, about = "Nonabelian H¹ of nilpotent actions and conjugacy/fixed-point checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Scenario file(s) to use instead of the built-in catalog.
    #[arg(long, global = true)]
    scenario: Vec<PathBuf>,
    /// Restrict to one instance (an action id, or a check id prefix).
    #[arg(long, global = true)]
    instance: Option<String>,
    /// Cap on enumeration work (candidate cocycles, subgroup closures).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    /// Evaluate conclusions even when hypotheses fail.
    #[arg(long, global = true)]
    relaxed_hypotheses: bool,
    /// Skip the proof-guided conjugator search.
    #[arg(long, global = true)]
    exhaustive_only: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print H¹(J, N) for an action.
    H1,
    /// List the complements of N in N ⋊ J and their N-conjugacy classes.
    Complements,
    /// Sylow-wise decomposition report of H¹(J, N).
    Decompose,
    /// Run one family of checks.
    Verify { which: Theorem },
    /// Run every check.
    Suite,
    /// List the built-in instances.
    Catalog,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Lemma1,
    Prop2,
    Prop3,
    Prop5,
    Thm4,
}

impl Theorem {
    fn name(self) -> &'static str {
        match self {
            Theorem::Lemma1 => "lemma1",
            Theorem::Prop2 => "prop2",
            Theorem::Prop3 => "prop3",
            Theorem::Prop5 => "prop5",
            Theorem::Thm4 => "thm4",
        }
    }
}

/// Failure before any check ran; exit code 3.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn options(c: &Common) -> VerifyOptions {
    let mut opts = VerifyOptions::default();
    if let Some(b) = c.budget {
        opts.budget = b;
    }
    opts.relaxed_hypotheses = c.relaxed_hypotheses;
    opts.proof_guided = !c.exhaustive_only;
    opts
}

fn checks(c: &Common) -> Result<Vec<Check>, InputError> {
    let mut all = Vec::new();
    if c.scenario.is_empty() {
        all = harness::default_suite()?;
    }
    for path in &c.scenario {
        all.extend(harness::load_scenario(path)?.checks);
    }
    if let Some(id) = &c.instance {
        let prefix = format!("{id}/");
        all.retain(|ch| ch.id == *id || ch.id.starts_with(&prefix));
        if all.is_empty() {
            return Err(InputError(format!("no checks for instance `{id}`")));
        }
    }
    Ok(all)
}

fn action(c: &Common) -> Result<(String, Arc<ActionOnGroup>), InputError> {
    let id = c.instance.clone().ok_or_else(|| InputError("--instance is required".into()))?;
    for path in &c.scenario {
        if let Some(a) = harness::load_scenario(path)?.action(&id) {
            return Ok((id, a.clone()));
        }
    }
    harness::all_actions()?
        .into_iter()
        .find(|a| a.id == id)
        .map(|a| (id.clone(), a.action))
        .ok_or_else(|| InputError(format!("unknown instance `{id}`")))
}

fn emit(records: &[harness::Record], format: Format) -> u8 {
    print!("{}", report::render(records, format));
    harness::exit_code(records) as u8
}

fn print_value(v: serde_json::Value, format: Format, human: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{v}"),
        Format::Human => print!("{}", human()),
    }
}

fn run(cli: &Cli) -> Result<u8, InputError> {
    let c = &cli.common;
    let opts = options(c);
    match &cli.command {
        Command::Suite => Ok(emit(&harness::run_suite(&checks(c)?, &opts), c.format)),
        Command::Verify { which } => {
            let mut list = checks(c)?;
            list.retain(|ch| ch.kind.name() == which.name());
            Ok(emit(&harness::run_suite(&list, &opts), c.format))
        }
        Command::Catalog => {
            let acts = harness::all_actions()?;
            let rows: Vec<_> = acts
                .iter()
                .map(|a| {
                    json!({
                        "id": a.id,
                        "j": a.action.actor().order(),
                        "n": a.action.target().order(),
                        "shared_primes": a.shared_primes(),
                        "nilpotent": a.nilpotent(),
                    })
                })
                .collect();
            print_value(json!(rows), c.format, || {
                let mut out = String::new();
                for a in &acts {
                    out.push_str(&format!(
                        "{:<16} |J| = {:<3} |N| = {:<3} shared {:?}{}\n",
                        a.id,
                        a.action.actor().order(),
                        a.action.target().order(),
                        a.shared_primes(),
                        if a.nilpotent() { "" } else { "  (J not nilpotent)" },
                    ));
                }
                out
            });
            Ok(0)
        }
        Command::H1 => {
            let (id, a) = action(c)?;
            let h = match h1_with_budget(&a, &Subgroup::whole(a.actor()), opts.budget) {
                Ok(h) => h,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(1);
                }
            };
            print_value(h.to_json(), c.format, || {
                let mut out = format!("{id}: {} cocycles, {} classes\n", h.num_cocycles(), h.len());
                for k in 0..h.len() {
                    let size = h.members(k).count();
                    out.push_str(&format!("  [{k}] {:?} ({size} cocycles)\n", h.representative(k).values()));
                }
                out
            });
            Ok(0)
        }
        Command::Complements => {
            let (id, a) = action(c)?;
            let p = SemidirectProduct::new(a)?;
            let n = p.n_subgroup();
            let comps = match all_complements(&n, opts.budget) {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(1);
                }
            };
            let classes = conjugacy_classes_under(&comps, &n);
            let v = json!({
                "complements": comps.iter().map(|k| k.to_json()).collect::<Vec<_>>(),
                "classes": classes,
            });
            print_value(v, c.format, || {
                let count = classes.iter().max().map_or(0, |m| m + 1);
                let mut out = format!("{id}: {} complements in {count} N-classes\n", comps.len());
                for (k, cl) in comps.iter().zip(&classes) {
                    out.push_str(&format!("  class {cl}: {:?}\n", k.elements()));
                }
                out
            });
            Ok(0)
        }
        Command::Decompose => {
            let (id, a) = action(c)?;
            let d = match decomposition_map_with_budget(&a, opts.budget) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(1);
                }
            };
            print_value(serde_json::to_value(&d)?, c.format, || {
                let mut out = format!("{id}: shared primes {:?}, {} classes\n", d.shared_primes, d.h1_classes);
                for f in &d.factors {
                    out.push_str(&format!(
                        "  p = {}: |J_p| = {}, {} classes, {} fixed by the Hall p'-subgroup\n",
                        f.prime,
                        f.sylow_order,
                        f.classes,
                        f.fixed.len()
                    ));
                }
                out.push_str(&format!("  bijective: {}\n", d.bijective()));
                out
            });
            Ok(if d.bijective() { 0 } else { 2 })
        }
    }
}
