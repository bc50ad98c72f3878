//! Command-line front end: one subcommand per engine plus a self-test.
//!
//! Exit codes are scripting-friendly: 0 for success or an affirmative
//! verdict, 1 for a negative verdict (uncolourable, non-member, failed
//! identity, failed self-test), 2 for usage or input errors. Data goes to
//! the output stream, diagnostics to the error stream.

use crate::chebyshev;
use crate::exact_arith::parse_rational;
use crate::ks::{self, BranchTree, Certificate, EmitFormat};
use crate::multipoly::{
    groebner_basis, ideal_member, parse_poly, MonomialOrder, Poly, VarTable,
};
use crate::selftest;
use crate::unitfrac;
use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (certificate schema 1)");

#[derive(Parser)]
#[command(
    name = "midproof",
    version = VERSION,
    about = "Exact decision procedures that emit replayable certificates",
    color = clap::ColorChoice::Never
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate sums of unit fractions hitting an exact rational target
    Unitfrac(UnitfracArgs),
    /// Decide boolean colourability of a set of rays, with certificates
    Ks(KsArgs),
    /// Gröbner bases and certified ideal membership
    Groebner(GroebnerArgs),
    /// Chebyshev polynomials and the certified product formula
    Chebyshev(ChebyshevArgs),
    /// Run the flagship computations and report pass/fail
    SelfTest(SelfTestArgs),
}

#[derive(Args)]
struct UnitfracArgs {
    /// How many unit fractions to use
    #[arg(long)]
    terms: u32,
    /// Exact target, an integer or a fraction like 5/4
    #[arg(long)]
    target: String,
    /// Smallest denominator allowed
    #[arg(long, default_value_t = 1)]
    min: u64,
    /// Print a JSON array of arrays
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["dataset", "file"])))]
struct KsArgs {
    /// Bundled dataset name (peres33)
    #[arg(long)]
    dataset: Option<String>,
    /// Vector file: one ray per line, three components
    #[arg(long)]
    file: Option<std::path::PathBuf>,
    /// Initial colours: bundled preset name (wlog) or an assumption file
    #[arg(long)]
    assume: Option<String>,
    /// search branches to a verdict; greedy only propagates
    #[arg(long, value_enum, default_value_t = Mode::Search)]
    mode: Mode,
    /// Output format
    #[arg(long, default_value = "text", value_parser = parse_emit)]
    emit: EmitFormat,
    /// Write the result to this file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Search,
    Greedy,
}

#[derive(Args)]
struct GroebnerArgs {
    /// Comma-separated variable names, e.g. "x,y"
    #[arg(long)]
    vars: String,
    /// Monomial order
    #[arg(long, default_value = "grevlex", value_parser = parse_order)]
    order: MonomialOrder,
    /// Generator file: one polynomial per line, # starts a comment
    #[arg(long)]
    gens: std::path::PathBuf,
    /// Decide membership of this polynomial in the generated ideal
    #[arg(long)]
    goal: Option<String>,
    /// Print the cofactor witness when the goal is a member
    #[arg(long, requires = "goal")]
    witness: bool,
    /// Print the reduced basis
    #[arg(long)]
    basis: bool,
    /// JSON output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ChebyshevArgs {
    /// Print the polynomial with this index
    #[arg(long)]
    n: Option<usize>,
    /// Check 2*T_m*T_{m+k} = T_{2m+k} + T_k at concrete indices
    #[arg(long, num_args = 2, value_names = ["M", "K"])]
    verify_mult: Option<Vec<usize>>,
    /// Prove the abstract product formula by ideal membership
    #[arg(long)]
    prove: bool,
    /// JSON output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SelfTestArgs {
    /// Machine-readable report
    #[arg(long)]
    json: bool,
}

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match cli.command {
        Command::Unitfrac(a) => run_unitfrac(a, out, err),
        Command::Ks(a) => run_ks(a, out, err),
        Command::Groebner(a) => run_groebner(a, out, err),
        Command::Chebyshev(a) => run_chebyshev(a, out, err),
        Command::SelfTest(a) => run_selftest(a, out, err),
    }
}

fn parse_emit(s: &str) -> Result<EmitFormat, String> {
    s.parse()
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse()
}

fn input_error(err: &mut dyn Write, message: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {message}");
    2
}

fn run_unitfrac(args: UnitfracArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let target = match parse_rational(&args.target) {
        Ok(t) => t,
        Err(e) => return input_error(err, e),
    };
    let tuples = match unitfrac::enumerate(args.terms, &target, args.min) {
        Ok(t) => t,
        Err(e) => return input_error(err, e),
    };
    if args.json {
        let _ = writeln!(out, "{}", serde_json::to_string(&tuples).expect("serialises"));
    } else {
        for t in &tuples {
            let words: Vec<String> = t.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "{}", words.join(" "));
        }
        let _ = writeln!(err, "{} decompositions", tuples.len());
    }
    0
}

fn run_ks(args: KsArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let items: Vec<(ks::Vec3, Option<String>)> = if let Some(name) = &args.dataset {
        if name != "peres33" {
            return input_error(err, format!("unknown dataset {name:?} (try peres33)"));
        }
        ks::peres33()
            .into_iter()
            .zip(ks::peres33_compact())
            .map(|(v, label)| (v, Some(label)))
            .collect()
    } else {
        let path = args.file.as_ref().expect("clap requires one ray source");
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return input_error(err, format_args!("{}: {e}", path.display())),
        };
        match ks::parse_vector_file(&text) {
            Ok(items) => items,
            Err(e) => return input_error(err, format_args!("{}: {e}", path.display())),
        }
    };
    let graph = match ks::OrthGraph::build_labeled(items) {
        Ok(g) => g,
        Err(e) => return input_error(err, e),
    };

    let raw = match args.assume.as_deref() {
        None => Vec::new(),
        Some("wlog") => ks::wlog_assumptions(),
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return input_error(err, format_args!("{path}: {e}")),
            };
            match ks::parse_assumption_file(&text) {
                Ok(a) => a,
                Err(e) => return input_error(err, format_args!("{path}: {e}")),
            }
        }
    };
    let assumptions = match graph.resolve_assumptions(&raw) {
        Ok(a) => a,
        Err(e) => return input_error(err, e),
    };

    // every certificate is validated before being emitted
    let checked = |cert: Certificate, err: &mut dyn Write| -> Result<Certificate, i32> {
        match ks::check_certificate(&graph, &assumptions, &cert) {
            Ok(()) => Ok(cert),
            Err(e) => {
                let _ = writeln!(err, "internal error: certificate failed validation: {e}");
                Err(2)
            }
        }
    };
    let (output, code) = match args.mode {
        Mode::Search => {
            let cert = match ks::search(&graph, &assumptions) {
                Ok(c) => c,
                Err(e) => return input_error(err, e),
            };
            let cert = match checked(cert, err) {
                Ok(c) => c,
                Err(code) => return code,
            };
            let code = match &cert {
                Certificate::Colourable { .. } => 0,
                Certificate::Uncolourable { .. } => 1,
            };
            (ks::emit(&graph, &cert, args.emit), code)
        }
        Mode::Greedy => match ks::greedy(&graph, &assumptions) {
            Ok(ks::GreedyOutcome::Colourable { assignment, .. }) => {
                let cert = match checked(Certificate::Colourable { assignment }, err) {
                    Ok(c) => c,
                    Err(code) => return code,
                };
                (ks::emit(&graph, &cert, args.emit), 0)
            }
            Ok(ks::GreedyOutcome::Refuted { steps, witness }) => {
                let tree = BranchTree::Contradiction { steps, witness };
                let cert = match checked(Certificate::Uncolourable { tree }, err) {
                    Ok(c) => c,
                    Err(code) => return code,
                };
                (ks::emit(&graph, &cert, args.emit), 1)
            }
            Ok(ks::GreedyOutcome::Inconclusive { partial, steps }) => {
                (ks::emit_inconclusive(&graph, &steps, &partial, args.emit), 0)
            }
            Err(e) => return input_error(err, e),
        },
    };

    match &args.out {
        None => {
            let _ = write!(out, "{output}");
        }
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output) {
                return input_error(err, format_args!("{}: {e}", path.display()));
            }
            let _ = writeln!(err, "wrote {}", path.display());
        }
    }
    code
}

#[derive(Serialize)]
struct GroebnerOutput {
    vars: Vec<String>,
    order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    goal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    member: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

fn parse_poly_file(
    path: &std::path::Path,
    vars: &Arc<VarTable>,
) -> Result<Vec<Poly>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut polys = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let poly = parse_poly(line, vars)
            .map_err(|e| format!("{}:{}: {e}", path.display(), lineno + 1))?;
        polys.push(poly);
    }
    Ok(polys)
}

fn run_groebner(args: GroebnerArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if args.goal.is_none() && !args.basis {
        return input_error(err, "nothing to do: pass --basis and/or --goal");
    }
    let names: Vec<String> = args.vars.split(',').map(|s| s.trim().to_string()).collect();
    let vars = match VarTable::new(names.iter().map(String::as_str)) {
        Ok(v) => v,
        Err(e) => return input_error(err, e),
    };
    let gens = match parse_poly_file(&args.gens, &vars) {
        Ok(g) => g,
        Err(e) => return input_error(err, e),
    };
    if gens.is_empty() {
        return input_error(err, "the generator file contains no polynomials");
    }

    let render = |p: &Poly| p.to_string_with(args.order);
    let basis = if args.basis {
        match groebner_basis(&gens, args.order) {
            Ok(gb) => Some(gb.basis.iter().map(render).collect::<Vec<_>>()),
            Err(e) => return input_error(err, e),
        }
    } else {
        None
    };

    let mut code = 0;
    let mut goal_rendered = None;
    let mut member = None;
    let mut witness = None;
    if let Some(goal_src) = &args.goal {
        let goal = match parse_poly(goal_src, &vars) {
            Ok(g) => g,
            Err(e) => return input_error(err, e),
        };
        let (is_member, w) = match ideal_member(&goal, &gens, args.order, args.witness) {
            Ok(x) => x,
            Err(e) => return input_error(err, e),
        };
        code = if is_member { 0 } else { 1 };
        goal_rendered = Some(render(&goal));
        member = Some(is_member);
        witness = w.map(|w| w.cofactors.iter().map(render).collect::<Vec<_>>());
    }

    if args.json {
        let doc = GroebnerOutput {
            vars: names,
            order: args.order.to_string(),
            basis,
            goal: goal_rendered,
            member,
            witness,
        };
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serialises")
        );
    } else {
        let _ = writeln!(out, "order: {}", args.order);
        if let Some(basis) = &basis {
            let _ = writeln!(out, "basis:");
            for b in basis {
                let _ = writeln!(out, "  {b}");
            }
        }
        if let Some(goal) = &goal_rendered {
            let _ = writeln!(out, "goal: {goal}");
            let _ = writeln!(out, "member: {}", member.unwrap_or(false));
        }
        if let Some(witness) = &witness {
            let _ = writeln!(out, "witness cofactors (aligned with the generators):");
            for (i, c) in witness.iter().enumerate() {
                let _ = writeln!(out, "  [{i}] {c}");
            }
        }
    }
    code
}

#[derive(Serialize)]
struct VerifyMultOutput {
    m: usize,
    k: usize,
    holds: bool,
}

#[derive(Serialize)]
struct ProveOutput {
    member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

#[derive(Serialize, Default)]
struct ChebyshevOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify_mult: Option<VerifyMultOutput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prove: Option<ProveOutput>,
}

fn run_chebyshev(args: ChebyshevArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if args.n.is_none() && args.verify_mult.is_none() && !args.prove {
        return input_error(err, "nothing to do: pass --n, --verify-mult or --prove");
    }
    let mut doc = ChebyshevOutput::default();
    let mut code = 0;

    if let Some(n) = args.n {
        let p = chebyshev::cheb(n);
        if args.json {
            doc.n = Some(n);
            doc.poly = Some(p.to_string());
        } else {
            let _ = writeln!(out, "T{n} = {p}");
        }
    }

    if let Some(mk) = &args.verify_mult {
        let (m, k) = (mk[0], mk[1]);
        let holds = chebyshev::verify_mult(m, k);
        if !holds {
            code = 1;
        }
        if args.json {
            doc.verify_mult = Some(VerifyMultOutput { m, k, holds });
        } else {
            let _ = writeln!(
                out,
                "2*T{m}*T{} == T{} + T{k}: {holds}",
                m + k,
                2 * m + k
            );
        }
    }

    if args.prove {
        let (member, witness) = match chebyshev::prove_mult_formula() {
            Ok(pair) => pair,
            Err(e) => {
                let _ = writeln!(err, "internal error: {e}");
                return 2;
            }
        };
        if !member {
            code = 1;
        }
        let cofactors = witness.map(|w| {
            w.cofactors
                .iter()
                .map(|c| c.to_string_with(MonomialOrder::GrevLex))
                .collect::<Vec<_>>()
        });
        if args.json {
            doc.prove = Some(ProveOutput { member, witness: cofactors });
        } else {
            let _ = writeln!(out, "member: {member}");
            if let Some(cofactors) = &cofactors {
                let _ = writeln!(out, "witness cofactors (aligned with the generators):");
                for (i, c) in cofactors.iter().enumerate() {
                    let _ = writeln!(out, "  [{i}] {c}");
                }
            }
        }
    }

    if args.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serialises")
        );
    }
    code
}

fn run_selftest(args: SelfTestArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let report = selftest::run();
    for leg in &report.legs {
        let _ = writeln!(err, "{}: {} ms", leg.name, leg.millis);
    }
    if args.json {
        let _ = writeln!(out, "{}", report.to_json());
    } else {
        for leg in &report.legs {
            let status = if leg.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{status}] {}: {}", leg.name, leg.detail);
        }
    }
    if report.passed() {
        0
    } else {
        1
    }
}
