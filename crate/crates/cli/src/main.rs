//! Command-line front end: hom-set listings, presheaf file validation,
//! the verification suites, instance generators, an interactive-free
//! reals demo, and per-point program agreement checks.
//!
//! Exit codes: 0 = success / all checks pass, 1 = a check failed or an
//! input was semantically invalid, 2 = usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cubical_sets::cube::enum_homs;
use cubical_sets::gen::{quotient, random_map_into, random_subobject, random_tcset, GenConfig};
use cubical_sets::kleene::{ect_check, EctStatus, MachineCode, PartialFn, Program};
use cubical_sets::presheaf::{
    neg_map, product, tcset_from_json, tcset_to_json, tcsetmor_from_json, tcsetmor_to_json,
    yoneda,
};
use cubical_sets::reals::{
    member_up_to, rat, rational_cocut, sqrt_cocut, Cocut, CocutAnswer, CocutLog, MemberVerdict,
};
use cubical_sets::report::SuiteConfig;
use cubical_sets::verify::run_suite;

#[derive(Parser)]
#[command(name = "cubical-sets", version, about = "Verification CLI for finite truncated cubical sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cube-category utilities
    Cube {
        #[command(subcommand)]
        command: CubeCommand,
    },
    /// Presheaf file utilities
    Psh {
        #[command(subcommand)]
        command: PshCommand,
    },
    /// Run the verification suites and print a report
    Verify(VerifyArgs),
    /// Emit generated instance files (deterministic in the seed)
    Generate(GenerateArgs),
    /// Reals oracle demos
    Reals {
        #[command(subcommand)]
        command: RealsCommand,
    },
    /// Program-extraction checks
    Ect {
        #[command(subcommand)]
        command: EctCommand,
    },
}

#[derive(Subcommand)]
enum CubeCommand {
    /// List all cube-category morphisms [m] -> [n], one per line
    Homs { m: usize, n: usize },
}

#[derive(Subcommand)]
enum PshCommand {
    /// Validate a TCSet or TCSetMor JSON file (functoriality, naturality)
    Validate { file: PathBuf },
}

#[derive(Args)]
struct VerifyArgs {
    /// Truncation dimension for generated instances
    #[arg(long, default_value_t = 2)]
    trunc: usize,
    /// RNG seed; the verdicts are seed-independent, the instances are not
    #[arg(long, default_value_t = 0xC0FFEE)]
    seed: u64,
    /// Baseline instance count per randomized suite
    #[arg(long = "size", default_value_t = 100)]
    size: usize,
    /// Comma-separated theorem tags to run (default: all)
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Directory for replay files of failing checks
    #[arg(long, default_value = ".")]
    replay_dir: PathBuf,
    /// Write the full JSON report here
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    /// One of: constant, representable, subobject-of-product,
    /// negation-image, random-quotient
    kind: String,
    #[arg(long, default_value_t = 2)]
    trunc: usize,
    #[arg(long, default_value_t = 0xC0FFEE)]
    seed: u64,
    /// Size parameter: |Z| for constant, n for representable
    #[arg(long, default_value_t = 2)]
    size: usize,
    /// Output file (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum RealsCommand {
    /// Query a sample real's locator on random intervals and report
    /// answer consistency
    Demo {
        /// Which real: `q` (the rational 1/2) or `sqrt2`
        #[arg(long, default_value = "sqrt2")]
        real: String,
        #[arg(long, default_value_t = 20)]
        queries: usize,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum EctCommand {
    /// Check a program file against a named function on 0..range
    Check {
        /// Function spec: identity | successor | pred | zero | double |
        /// add:<k> | const:<k> | even-succ (partial: even inputs only)
        #[arg(long = "fn")]
        function: String,
        /// Assembly file (`inc r` / `decjz r t` / `halt`, `#` comments)
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = 10)]
        range: u64,
        #[arg(long, default_value_t = 100_000)]
        fuel: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Cube { command: CubeCommand::Homs { m, n } } => {
            for s in enum_homs(m, n) {
                println!("{s}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Psh { command: PshCommand::Validate { file } } => cmd_validate(&file),
        Command::Verify(args) => cmd_verify(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Reals { command: RealsCommand::Demo { real, queries, seed } } => {
            cmd_reals_demo(&real, queries, seed)
        }
        Command::Ect { command: EctCommand::Check { function, code, range, fuel } } => {
            cmd_ect_check(&function, &code, range, fuel)
        }
    }
}

fn cmd_validate(file: &PathBuf) -> Result<ExitCode> {
    let text = std::fs::read_to_string(file)
        .with_context(|| format!("reading {}", file.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).context("file is not valid JSON")?;
    // morphism files carry a `components` table, object files do not;
    // both constructors re-validate functoriality and naturality
    if value.get("components").is_some() {
        match tcsetmor_from_json(&value) {
            Ok(f) => {
                println!(
                    "OK: morphism, source {} elements, target {} elements, mono: {}",
                    f.source().total_size(),
                    f.target().total_size(),
                    f.is_mono(),
                );
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                eprintln!("INVALID: {e}");
                Ok(ExitCode::from(1))
            }
        }
    } else {
        match tcset_from_json(&value) {
            Ok(x) => {
                let sizes: Vec<usize> = (0..=x.trunc()).map(|n| x.level_size(n)).collect();
                println!("OK: object, trunc {}, level sizes {:?}", x.trunc(), sizes);
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                eprintln!("INVALID: {e}");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let cfg = SuiteConfig {
        trunc: args.trunc,
        seed: args.seed,
        instances: args.size,
        only: args.only,
        ..SuiteConfig::default()
    };
    let report = run_suite(&cfg);
    if report.records.is_empty() {
        bail!("no checks selected; unknown tag in --only?");
    }
    for (tag, pass, fail, inconclusive) in report.tally() {
        println!("{tag}: {pass} PASS, {fail} FAIL, {inconclusive} INCONCLUSIVE");
    }
    if let Some(path) = &args.json {
        std::fs::write(path, serde_json::to_string_pretty(&report)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if report.has_fail() {
        for (i, r) in report.failures().enumerate() {
            let path = args.replay_dir.join(format!("replay-{}-{i:03}.json", r.theorem));
            std::fs::write(&path, serde_json::to_string_pretty(r)?)
                .with_context(|| format!("writing {}", path.display()))?;
            eprintln!(
                "FAIL {} [{}]: witness {}, replay file {}",
                r.theorem,
                r.instance,
                r.witness,
                path.display(),
            );
        }
        Ok(ExitCode::from(1))
    } else {
        println!(
            "all {} checks passed ({} theorem tags)",
            report.records.len(),
            report.tally().len(),
        );
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let gen_cfg = GenConfig { trunc: args.trunc, max_level: 6 };
    let value = match args.kind.as_str() {
        "constant" => {
            let names: Vec<String> = (0..args.size).map(|i| format!("z{i}")).collect();
            tcset_to_json(&cubical_sets::presheaf::delta_const(&names, args.trunc))
        }
        "representable" => {
            if args.size > args.trunc {
                bail!("representable size {} exceeds truncation {}", args.size, args.trunc);
            }
            tcset_to_json(&yoneda(args.size, args.trunc))
        }
        "subobject-of-product" => {
            let square = product(&yoneda(1, args.trunc), &yoneda(1, args.trunc))
                .map_err(|e| anyhow!("{e}"))?;
            let sub = random_subobject(&mut rng, &square.object);
            tcsetmor_to_json(&sub.inclusion())
        }
        "negation-image" => {
            let y = random_tcset(&mut rng, gen_cfg);
            let f = random_map_into(&mut rng, &y);
            tcsetmor_to_json(&neg_map(&f).map_err(|e| anyhow!("{e}"))?)
        }
        "random-quotient" => {
            let base = random_tcset(&mut rng, gen_cfg);
            // one extra identification pass, so the recipe is visible even
            // when random_tcset already produced a quotient
            let x = if base.level_size(0) >= 2 {
                quotient(&base, &[(0, 0, 1)])
            } else {
                base
            };
            tcset_to_json(&x)
        }
        other => bail!(
            "unknown kind `{other}`; expected constant | representable | \
             subobject-of-product | negation-image | random-quotient"
        ),
    };
    let text = serde_json::to_string_pretty(&value)? + "\n";
    match &args.out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reals_demo(real: &str, queries: usize, seed: u64) -> Result<ExitCode> {
    let c: Cocut = match real {
        "q" => rational_cocut(&rat(1, 2)),
        "sqrt2" => sqrt_cocut(2),
        other => bail!("unknown real `{other}`; expected q | sqrt2"),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut log = CocutLog::default();
    for _ in 0..queries {
        let (a, b) = loop {
            use rand::Rng;
            let a = rat(rng.gen_range(-20..40), rng.gen_range(1..10));
            let b = rat(rng.gen_range(-20..40), rng.gen_range(1..10));
            if a < b {
                break (a, b);
            }
            if b < a {
                break (b, a);
            }
        };
        let answer = c.locate(&a, &b).map_err(|e| anyhow!("{e}"))?;
        match &answer {
            CocutAnswer::InC(q) => println!("locate({a}, {b}) -> InC({q})"),
            CocutAnswer::NotInC(q) => println!("locate({a}, {b}) -> NotInC({q})"),
        }
        log.record(&answer);
    }
    println!("answers consistent: {}", log.consistent());
    for probe in [rat(1, 2), rat(3, 2), rat(-1, 1)] {
        match member_up_to(&c, &probe, 50).map_err(|e| anyhow!("{e}"))? {
            MemberVerdict::DefinitelyOut { at_n } => {
                println!("member_up_to({probe}, 50) -> DefinitelyOut at n = {at_n}")
            }
            MemberVerdict::ConsistentInUpTo { n, .. } => {
                println!("member_up_to({probe}, 50) -> ConsistentInUpTo n = {n}")
            }
        }
    }
    Ok(if log.consistent() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn parse_fn_spec(spec: &str) -> Result<PartialFn> {
    Ok(match spec {
        "identity" => PartialFn::total(|x| x),
        "successor" => PartialFn::total(|x| x + 1),
        "pred" => PartialFn::total(|x| x.saturating_sub(1)),
        "zero" => PartialFn::total(|_| 0),
        "double" => PartialFn::total(|x| 2 * x),
        "even-succ" => PartialFn::new(|x| x % 2 == 0, |x| x + 1),
        other => {
            if let Some(k) = other.strip_prefix("add:") {
                let k: u64 = k.parse().context("add:<k> needs a number")?;
                PartialFn::total(move |x| x + k)
            } else if let Some(k) = other.strip_prefix("const:") {
                let k: u64 = k.parse().context("const:<k> needs a number")?;
                PartialFn::total(move |_| k)
            } else {
                bail!(
                    "unknown function spec `{other}`; expected identity | successor | \
                     pred | zero | double | add:<k> | const:<k> | even-succ"
                );
            }
        }
    })
}

fn cmd_ect_check(function: &str, code: &PathBuf, range: u64, fuel: usize) -> Result<ExitCode> {
    let f = parse_fn_spec(function)?;
    let text = std::fs::read_to_string(code)
        .with_context(|| format!("reading {}", code.display()))?;
    let program: Program = text.parse().map_err(|e| anyhow!("{e}"))?;
    let machine = MachineCode::encode(&program);
    let inputs: Vec<u64> = (0..range).collect();
    let report = ect_check(&f, &machine, &inputs, fuel);
    for (x, outcome) in &report.points {
        println!("x = {x}: {outcome:?}");
    }
    println!("status: {:?}", report.status);
    Ok(match report.status {
        EctStatus::Pass => ExitCode::SUCCESS,
        _ => ExitCode::from(1),
    })
}
