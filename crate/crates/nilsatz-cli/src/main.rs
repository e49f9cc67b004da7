//! Command line front end: exact arithmetic in enveloping and Weyl
//! algebras, Pfaffian calculus, morphism synthesis, and the bundled
//! workflows, over JSON file formats.
//!
//! Exit codes: 0 for success (or a true predicate), 1 for a false
//! predicate, 2 for errors and inconclusive oracles.

mod formats;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde_json::json;

use nilsatz::error::Error as AlgError;
use nilsatz::expr::{parse_env, parse_weyl};
use nilsatz::invariant::{dual_elem, expand_over_invariants, invariant_elem};
use nilsatz::lie::TwoStepLieAlgebra;
use nilsatz::pfaffian::pf_set;
use nilsatz::pipeline::EvenSubsetPoset;
use nilsatz::report::CheckReport;

use formats::{
    load_algebra, load_character, load_heisenberg_desc, load_morphism, morphism_to_file,
    parse_subset, subset_to_json,
};

const EXIT_FALSE: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "nilsatz",
    version,
    about = "Exact computer algebra for 2-step nilpotent enveloping algebras and Weyl algebras"
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Lie algebra file (antisymmetry and center-basis checks)
    ValidateLie { file: PathBuf },
    /// Normalize an expression to PBW (or Weyl normal) order
    Normalize {
        /// Lie algebra file; expression uses B<n>, C<n>
        #[arg(short = 'a', long = "algebra", conflicts_with = "weyl")]
        algebra: Option<PathBuf>,
        /// Weyl dimension; expression uses P<n>, Q<n>
        #[arg(short = 'w', long = "weyl")]
        weyl: Option<usize>,
        expr: String,
    },
    /// Commutator [a, b] of two enveloping-algebra expressions
    Commutator {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        expr1: String,
        expr2: String,
    },
    /// The *-involution of an expression
    Star {
        #[arg(short = 'a', long = "algebra", conflicts_with = "weyl")]
        algebra: Option<PathBuf>,
        #[arg(short = 'w', long = "weyl")]
        weyl: Option<usize>,
        expr: String,
    },
    /// Pfaffian Pf(K) of an even index subset, a central polynomial
    Pfaffian {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        /// Even 1-based index set, e.g. "1,2" (empty string for the empty set)
        #[arg(short = 'K', long = "subset")]
        subset: String,
    },
    /// Invariant element E_{K,m}
    Invariant {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        #[arg(short = 'K', long = "subset")]
        subset: String,
        /// 1-based index m outside K
        #[arg(short = 'm')]
        m: usize,
    },
    /// Dual element D_{K,l}
    Dual {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        #[arg(short = 'K', long = "subset")]
        subset: String,
        /// 1-based index l inside K
        #[arg(short = 'l')]
        l: usize,
    },
    /// Expand Pf(K)^r * a over the invariant subalgebra, with certificate
    Expand {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        #[arg(short = 'K', long = "subset")]
        subset: String,
        expr: String,
    },
    /// Synthesize a filtered morphism from a character file
    BuildMorphism {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        char_file: PathBuf,
    },
    /// Apply a morphism file to an enveloping-algebra expression
    Apply {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        morph_file: PathBuf,
        expr: String,
    },
    /// Is the expression in the common kernel of the given morphisms?
    InVanishing {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        /// Morphism files (the empty list accepts everything)
        morph_files: Vec<PathBuf>,
        /// Expression to test
        #[arg(short = 'e', long = "expr")]
        expr: String,
    },
    /// Topologically ordered even subsets of {1..beta}
    Toposort { beta: usize },
    /// Minimal central polynomial data of a Heisenberg morphism family
    HeisenbergMu { morph_files: Vec<PathBuf> },
    /// Membership in a described real ideal of the Heisenberg algebra
    HeisenbergMember {
        desc_file: PathBuf,
        expr: String,
        /// Multiplier degree bound for the commutative oracle
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Run the free 2-step (three-generator) demonstration checks
    F3Demo,
    /// Exhaustive and randomized identity checks over an algebra file
    CheckIdentities {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn heisenberg_algebra() -> Arc<TwoStepLieAlgebra> {
    TwoStepLieAlgebra::heisenberg()
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::ValidateLie { file } => {
            let text = std::fs::read_to_string(file)
                .with_context(|| format!("reading {}", file.display()))?;
            let parsed: formats::LieAlgFile =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", file.display()))?;
            match formats::algebra_from_file(&parsed) {
                Ok(alg) => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({"valid": true, "beta": alg.beta(), "gamma": alg.gamma()})
                        );
                    } else {
                        println!(
                            "valid 2-step nilpotent Lie algebra: beta = {}, gamma = {}",
                            alg.beta(),
                            alg.gamma()
                        );
                    }
                    Ok(0)
                }
                Err(e) => {
                    if cli.json {
                        println!("{}", json!({"valid": false, "error": e.to_string()}));
                    } else {
                        println!("invalid: {e}");
                    }
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::Normalize { algebra, weyl, expr } => {
            let text = match (algebra, weyl) {
                (Some(path), None) => {
                    let alg = load_algebra(path)?;
                    parse_env(&alg, expr).map_err(algerr)?.to_string()
                }
                (None, Some(d)) => parse_weyl(*d, expr).map_err(algerr)?.to_string(),
                _ => return Err(anyhow!("exactly one of --algebra/--weyl is required")),
            };
            emit_result(cli.json, &text);
            Ok(0)
        }
        Command::Commutator { algebra, expr1, expr2 } => {
            let alg = load_algebra(algebra)?;
            let a = parse_env(&alg, expr1).map_err(algerr)?;
            let b = parse_env(&alg, expr2).map_err(algerr)?;
            emit_result(cli.json, &a.commutator(&b).map_err(algerr)?.to_string());
            Ok(0)
        }
        Command::Star { algebra, weyl, expr } => {
            let text = match (algebra, weyl) {
                (Some(path), None) => {
                    let alg = load_algebra(path)?;
                    parse_env(&alg, expr).map_err(algerr)?.star().to_string()
                }
                (None, Some(d)) => parse_weyl(*d, expr).map_err(algerr)?.star().to_string(),
                _ => return Err(anyhow!("exactly one of --algebra/--weyl is required")),
            };
            emit_result(cli.json, &text);
            Ok(0)
        }
        Command::Pfaffian { algebra, subset } => {
            let alg = load_algebra(algebra)?;
            let k = parse_subset(subset)?;
            let pf = pf_set(&alg, &k).map_err(algerr)?;
            emit_result(cli.json, &pf.to_string());
            Ok(0)
        }
        Command::Invariant { algebra, subset, m } => {
            let alg = load_algebra(algebra)?;
            let k = parse_subset(subset)?;
            if *m == 0 {
                return Err(anyhow!("index m is 1-based"));
            }
            let e = invariant_elem(&alg, &k, m - 1).map_err(algerr)?;
            emit_result(cli.json, &e.to_string());
            Ok(0)
        }
        Command::Dual { algebra, subset, l } => {
            let alg = load_algebra(algebra)?;
            let k = parse_subset(subset)?;
            if *l == 0 {
                return Err(anyhow!("index l is 1-based"));
            }
            let d = dual_elem(&alg, &k, l - 1).map_err(algerr)?;
            emit_result(cli.json, &d.to_string());
            Ok(0)
        }
        Command::Expand { algebra, subset, expr } => {
            let alg = load_algebra(algebra)?;
            let k = parse_subset(subset)?;
            let a = parse_env(&alg, expr).map_err(algerr)?;
            let cert = expand_over_invariants(&k, &a).map_err(algerr)?;
            let verified = cert.verify(&a);
            if cli.json {
                let coeffs: Vec<_> = cert
                    .coeffs
                    .iter()
                    .map(|(alpha, cc)| {
                        json!({
                            "alpha": alpha.entries(),
                            "witness": cc.witness.to_expr_string(),
                            "value": cc.value.to_string(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "K": subset_to_json(&cert.k),
                        "r": cert.r,
                        "s": cert.s,
                        "coefficients": coeffs,
                        "verified": verified,
                    })
                );
            } else {
                println!("Pf(K)^{} * ({a}) =", cert.r);
                for (alpha, cc) in &cert.coeffs {
                    println!("  [{alpha}]  ({})  B_K^{alpha}", cc.value);
                    println!("         witness: {}", cc.witness.to_expr_string());
                }
                println!("reconstruction verified: {verified}");
            }
            if verified {
                Ok(0)
            } else {
                Err(anyhow!("expansion certificate failed verification"))
            }
        }
        Command::BuildMorphism { algebra, char_file } => {
            let alg = load_algebra(algebra)?;
            let chi = load_character(char_file, &alg)?;
            let phi = chi.to_morphism().map_err(algerr)?;
            let file = morphism_to_file(&phi);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&file)?);
            } else {
                println!("filtered morphism into W_{}:", file.d);
                for (idx, img) in file.images.iter().enumerate() {
                    let name = if idx < alg.beta() {
                        format!("B{}", idx + 1)
                    } else {
                        format!("C{}", idx + 1 - alg.beta())
                    };
                    println!("  {name} -> {img}");
                }
            }
            Ok(0)
        }
        Command::Apply { algebra, morph_file, expr } => {
            let alg = load_algebra(algebra)?;
            let phi = load_morphism(morph_file, &alg)?;
            let a = parse_env(&alg, expr).map_err(algerr)?;
            emit_result(cli.json, &phi.apply(&a).map_err(algerr)?.to_string());
            Ok(0)
        }
        Command::InVanishing { algebra, morph_files, expr } => {
            let alg = load_algebra(algebra)?;
            let morphisms = morph_files
                .iter()
                .map(|p| load_morphism(p, &alg))
                .collect::<Result<Vec<_>>>()?;
            let a = parse_env(&alg, expr).map_err(algerr)?;
            let member = nilsatz::morphism::in_vanishing_ideal(&morphisms, &a);
            if cli.json {
                println!("{}", json!({"member": member}));
            } else {
                println!("{member}");
            }
            Ok(if member { 0 } else { EXIT_FALSE })
        }
        Command::Toposort { beta } => {
            if *beta > 16 {
                return Err(anyhow!("beta = {beta} gives 2^{} subsets; supported: beta <= 16", beta - 1));
            }
            let order = EvenSubsetPoset::new(*beta).toposort();
            if cli.json {
                let sets: Vec<_> = order.iter().map(subset_to_json).collect();
                println!("{}", json!({"order": sets}));
            } else {
                for k in &order {
                    println!("{k}");
                }
            }
            Ok(0)
        }
        Command::HeisenbergMu { morph_files } => {
            let alg = heisenberg_algebra();
            let morphisms = morph_files
                .iter()
                .map(|p| load_morphism(p, &alg))
                .collect::<Result<Vec<_>>>()?;
            let mu = nilsatz::heisenberg::mu_from_morphisms(&morphisms).map_err(algerr)?;
            if cli.json {
                let lambda: Vec<String> = mu.lambda.iter().map(|l| l.to_string()).collect();
                println!(
                    "{}",
                    json!({
                        "lambda": lambda,
                        "mu": mu.mu.to_string(),
                        "mu_x": mu.mu_x.to_string(),
                    })
                );
            } else {
                let lambda: Vec<String> = mu.lambda.iter().map(|l| l.to_string()).collect();
                println!("Lambda = {{{}}}", lambda.join(", "));
                println!("mu   = {}", mu.mu);
                println!("mu_x = {}", mu.mu_x);
            }
            Ok(0)
        }
        Command::HeisenbergMember { desc_file, expr, bound } => {
            let desc = load_heisenberg_desc(desc_file)?;
            let alg = heisenberg_algebra();
            let a = parse_env(&alg, expr).map_err(algerr)?;
            match desc.membership(&a, *bound) {
                Ok(member) => {
                    if cli.json {
                        println!("{}", json!({"member": member}));
                    } else {
                        println!("{member}");
                    }
                    Ok(if member { 0 } else { EXIT_FALSE })
                }
                Err(e @ AlgError::Inconclusive { .. }) => {
                    if cli.json {
                        println!("{}", json!({"member": null, "inconclusive": e.to_string()}));
                    } else {
                        println!("{e}");
                    }
                    Ok(EXIT_ERROR)
                }
                Err(e) => Err(algerr(e)),
            }
        }
        Command::F3Demo => {
            let report = nilsatz::pipeline::f3_demo().map_err(algerr)?;
            emit_report(cli.json, &report);
            Ok(if report.all_pass() { 0 } else { EXIT_FALSE })
        }
        Command::CheckIdentities { file, seed, max_degree, cases } => {
            let alg = load_algebra(file)?;
            let mut rng = ChaCha12Rng::seed_from_u64(*seed);
            let report = nilsatz::pipeline::run_identity_checks(&alg, &mut rng, *cases, *max_degree)
                .map_err(algerr)?;
            emit_report(cli.json, &report);
            Ok(if report.all_pass() { 0 } else { EXIT_FALSE })
        }
    }
}

fn algerr(e: AlgError) -> anyhow::Error {
    anyhow!("{e}")
}

fn emit_result(as_json: bool, text: &str) {
    if as_json {
        println!("{}", json!({ "result": text }));
    } else {
        println!("{text}");
    }
}

fn emit_report(as_json: bool, report: &CheckReport) {
    if as_json {
        let checks: Vec<_> = report
            .entries
            .iter()
            .map(|e| json!({"label": e.label, "pass": e.pass}))
            .collect();
        println!(
            "{}",
            json!({"checks": checks, "all_pass": report.all_pass()})
        );
    } else {
        println!("{report}");
    }
}
