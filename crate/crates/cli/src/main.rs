use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gfp_cli::{render, suites, sweep};
use gfp_core::criteria::{analyze, Mode};
use gfp_core::gfp::{builtin, conjugate_partner, Family, FamilySpec, Kind, Validation, BUILTIN_NAMES};
use gfp_core::polycore::{format_poly, parse_poly, IntPoly};
use gfp_core::qfactor::factor_q_seeded;
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "gfp",
    version,
    about = "Generalized Fibonacci and Lucas polynomial families: terms, factorization, irreducibility verdicts"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized subroutines.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in families and their defining data
    Families {
        /// Show a single family
        #[arg(long)]
        name: Option<String>,
    },
    /// Print terms 0..=n of a family by the recurrence
    Seq {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        /// Also evaluate the closed-form expansion and assert equality
        #[arg(long)]
        closed_form: bool,
    },
    /// Print the closed-form expansion of the term at one index
    Expand {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
    },
    /// Factor an integer polynomial over the rationals
    Factor {
        /// Polynomial, e.g. "x^4 - 15*x^2 + 25"
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Judge irreducibility of the canonical object at index n
    Verdict {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        /// Stop after the criteria pipeline; no factorization fallback
        #[arg(long)]
        criteria_only: bool,
    },
    /// Run the verification suites
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// Seeded random soundness sweep of the criteria pipeline
    Sweep {
        /// Maximum degree of d
        #[arg(long, default_value_t = 3)]
        dmax: usize,
        /// Half-width of the coefficient box
        #[arg(long, default_value_t = 5)]
        coeff: i64,
        /// Comma-separated prime indices to judge
        #[arg(long, default_value = "3,5,7")]
        primes: String,
        /// Number of random specifications
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Suite {
    Corpus,
    Capelli,
    Identities,
    All,
}

#[derive(Copy, Clone, ValueEnum)]
enum KindArg {
    Fibonacci,
    Lucas,
}

#[derive(Args)]
struct SpecArgs {
    /// Built-in family name (see `gfp families`)
    #[arg(long, conflicts_with_all = ["kind", "d", "g", "p0", "relaxed"])]
    family: Option<String>,
    /// Family kind for a custom specification
    #[arg(long, value_enum, requires = "d", requires = "g")]
    kind: Option<KindArg>,
    /// Recurrence multiplier d of a custom specification
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    /// Recurrence addend g of a custom specification
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// Lucas-type seed p0 (1, -1, 2, or -2); default 2
    #[arg(long, allow_hyphen_values = true)]
    p0: Option<i64>,
    /// Waive the strict validity conditions
    #[arg(long)]
    relaxed: bool,
}

impl SpecArgs {
    fn resolve(&self) -> Result<Family, String> {
        if let Some(name) = &self.family {
            return builtin(name).ok_or_else(|| {
                format!("unknown family {name:?}; valid names: {}", BUILTIN_NAMES.join(", "))
            });
        }
        let kind = self.kind.ok_or("specify --family, or --kind with --d and --g")?;
        let d = parse_poly(self.d.as_deref().ok_or("--d is required for a custom specification")?)
            .map_err(|e| format!("--d: {e}"))?;
        let g = parse_poly(self.g.as_deref().ok_or("--g is required for a custom specification")?)
            .map_err(|e| format!("--g: {e}"))?;
        let mode = if self.relaxed { Validation::Relaxed } else { Validation::Strict };
        let spec = match kind {
            KindArg::Fibonacci => {
                if self.p0.is_some() {
                    return Err("--p0 applies only to --kind lucas".into());
                }
                FamilySpec::fibonacci(d, g)
            }
            KindArg::Lucas => {
                let p0 = BigInt::from(self.p0.unwrap_or(2));
                // The interface takes d; the seed is p1 = d * p0 / 2.
                let p1 = d
                    .scaled(&p0)
                    .exact_divide(&IntPoly::constant(BigInt::from(2)))
                    .map_err(|_| "with |p0| = 1 every coefficient of d must be even".to_string())?;
                FamilySpec::lucas(p0, p1, g).map_err(|e| e.to_string())?
            }
        };
        Family::new(spec, mode).map_err(|e| e.to_string())
    }
}

fn main() -> ExitCode {
    // Die quietly when a downstream pager closes the pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Families { name } => cmd_families(name.as_deref(), cli.json),
        Command::Seq { spec, n, closed_form } => cmd_seq(&spec.resolve()?, n, closed_form, cli.json),
        Command::Expand { spec, n } => cmd_expand(&spec.resolve()?, n, cli.json),
        Command::Factor { poly } => cmd_factor(&poly, cli.seed, cli.json),
        Command::Verdict { spec, n, criteria_only } => {
            cmd_verdict(&spec.resolve()?, n, criteria_only, cli.seed, cli.json)
        }
        Command::Verify { suite } => cmd_verify(suite, cli.seed, cli.json),
        Command::Sweep { dmax, coeff, primes, count } => {
            cmd_sweep(dmax, coeff, &primes, count, cli.seed, cli.json)
        }
    }
}

fn mode_str(mode: Validation) -> &'static str {
    match mode {
        Validation::Strict => "strict",
        Validation::Relaxed => "relaxed",
    }
}

fn family_json(name: &str) -> Value {
    let fam = builtin(name).expect("builtin exists");
    let spec = fam.spec();
    json!({
        "name": name,
        "kind": spec.kind().to_string(),
        "d": render::poly_json(spec.d()),
        "g": render::poly_json(spec.g()),
        "p0": spec.p0().map(|p| p.to_string()),
        "p1": spec.p1().map(render::poly_json),
        "delta": render::poly_json(&spec.delta()),
        "conjugate": conjugate_partner(name),
        "mode": mode_str(fam.mode()),
        "violations": spec.violations(Validation::Strict),
    })
}

fn cmd_families(name: Option<&str>, json_out: bool) -> Result<u8, String> {
    let names: Vec<&str> = match name {
        Some(n) => match BUILTIN_NAMES.iter().find(|x| **x == n) {
            Some(found) => vec![found],
            None => {
                return Err(format!(
                    "unknown family {n:?}; valid names: {}",
                    BUILTIN_NAMES.join(", ")
                ))
            }
        },
        None => BUILTIN_NAMES.to_vec(),
    };
    if json_out {
        let list: Vec<Value> = names.iter().map(|n| family_json(n)).collect();
        println!("{}", serde_json::to_string_pretty(&Value::Array(list)).unwrap());
    } else {
        println!(
            "{:<16} {:<10} {:>3}  {:<10} {:<7} {:<14} {}",
            "name", "kind", "p0", "d", "g", "conjugate", "mode"
        );
        for n in names {
            let fam = builtin(n).expect("builtin exists");
            let spec = fam.spec();
            println!(
                "{:<16} {:<10} {:>3}  {:<10} {:<7} {:<14} {}",
                n,
                spec.kind().to_string(),
                spec.p0().map(|p| p.to_string()).unwrap_or_else(|| "-".into()),
                format_poly(spec.d()),
                format_poly(spec.g()),
                conjugate_partner(n).unwrap_or("-"),
                mode_str(fam.mode()),
            );
        }
    }
    Ok(0)
}

fn term_label(kind: Kind, i: usize) -> String {
    match kind {
        Kind::Fibonacci => format!("Ft_{i}"),
        Kind::Lucas => format!("Lt_{i}"),
    }
}

fn cmd_seq(fam: &Family, n: usize, closed_form: bool, json_out: bool) -> Result<u8, String> {
    // Trip the degree guard before printing anything.
    fam.term(n).map_err(|e| e.to_string())?;
    let kind = fam.spec().kind();
    let mut terms = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = fam.term(i).map_err(|e| e.to_string())?;
        if closed_form {
            let c = fam.closed_form(i).map_err(|e| e.to_string())?;
            if c != t {
                eprintln!(
                    "closed form mismatch at n = {i}: {} vs {}",
                    format_poly(&c),
                    format_poly(&t)
                );
                return Ok(1);
            }
        }
        terms.push(t);
    }
    if json_out {
        let doc = json!({
            "family": fam.name(),
            "kind": kind.to_string(),
            "n": n,
            "terms": terms.iter().map(render::poly_json).collect::<Vec<_>>(),
            "closed_form_checked": closed_form,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        for (i, t) in terms.iter().enumerate() {
            println!("{} = {}", term_label(kind, i), format_poly(t));
        }
        if closed_form {
            println!("closed form: matches the recurrence for n = 0..={n}");
        }
    }
    Ok(0)
}

fn cmd_expand(fam: &Family, n: usize, json_out: bool) -> Result<u8, String> {
    let c = fam.closed_form(n).map_err(|e| e.to_string())?;
    let t = fam.term(n).map_err(|e| e.to_string())?;
    if c != t {
        eprintln!("closed form mismatch at n = {n}");
        return Ok(1);
    }
    let kind = fam.spec().kind();
    if json_out {
        let doc = json!({
            "family": fam.name(),
            "kind": kind.to_string(),
            "n": n,
            "term": render::poly_json(&c),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("{} = {}", term_label(kind, n), format_poly(&c));
    }
    Ok(0)
}

fn cmd_factor(poly: &str, seed: u64, json_out: bool) -> Result<u8, String> {
    let f = parse_poly(poly).map_err(|e| e.to_string())?;
    if f.is_zero() {
        return Err("cannot factor the zero polynomial".into());
    }
    let fac = factor_q_seeded(&f, seed).map_err(|e| e.to_string())?;
    if json_out {
        println!(
            "{}",
            serde_json::to_string_pretty(&render::factorization_json(&f, &fac)).unwrap()
        );
    } else {
        println!("{}", render::factorization_text(&f, &fac));
    }
    Ok(0)
}

fn cmd_verdict(
    fam: &Family,
    n: usize,
    criteria_only: bool,
    seed: u64,
    json_out: bool,
) -> Result<u8, String> {
    let mode = if criteria_only { Mode::CriteriaOnly } else { Mode::Full };
    let analysis = analyze(fam, n, mode, seed).map_err(|e| e.to_string())?;
    if json_out {
        println!(
            "{}",
            serde_json::to_string_pretty(&render::verdict_json(&analysis, fam.name())).unwrap()
        );
    } else {
        println!("{}", render::verdict_text(&analysis, fam.name()));
    }
    Ok(0)
}

fn cmd_verify(which: Suite, seed: u64, json_out: bool) -> Result<u8, String> {
    let mut reports = Vec::new();
    if matches!(which, Suite::Corpus | Suite::All) {
        reports.push(suites::corpus_suite(seed).map_err(|e| e.to_string())?);
    }
    if matches!(which, Suite::Capelli | Suite::All) {
        reports.push(suites::capelli_suite().map_err(|e| e.to_string())?);
    }
    if matches!(which, Suite::Identities | Suite::All) {
        reports.push(suites::identities_suite().map_err(|e| e.to_string())?);
    }
    let ok = reports.iter().all(|r| r.all_pass());
    if json_out {
        let list: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
        let doc = json!({ "suites": list, "ok": ok });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        for r in &reports {
            print!("{}", r.to_text());
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_sweep(
    dmax: usize,
    coeff: i64,
    primes: &str,
    count: usize,
    seed: u64,
    json_out: bool,
) -> Result<u8, String> {
    if dmax == 0 {
        return Err("--dmax must be at least 1".into());
    }
    if coeff <= 0 {
        return Err("--coeff must be positive".into());
    }
    let primes = primes
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| format!("bad prime list entry {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    for &p in &primes {
        if !gfp_core::primes::is_prime_u64(p as u64) {
            return Err(format!("{p} is not prime"));
        }
    }
    let params = sweep::SweepParams { dmax, coeff, primes, count, seed };
    let report = sweep::run(&params).map_err(|e| e.to_string())?;
    if json_out {
        println!("{}", serde_json::to_string_pretty(&sweep::report_json(&report)).unwrap());
    } else {
        print!("{}", sweep::report_text(&report));
    }
    Ok(if report.violations.is_empty() { 0 } else { 1 })
}
