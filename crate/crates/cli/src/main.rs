use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use ugh_core::center::{central_character, is_central, CentralCharacterPoint};
use ugh_core::equitable::{verify_equitable_hopf, verify_equitable_relations};
use ugh_core::frontend::{module_from_json, module_to_value, parse_element, parse_scalar};
use ugh_core::hopf::{check_element, check_hopf_axioms, check_pair, HopfReport};
use ugh_core::pbw::{random_element, AlgebraElement, Generator};
use ugh_core::rep::{
    check_module, decompose, dual_module, ext_dims_torus, extension_module, highest_weight_vectors,
    simple_module, tensor, twisted_dual, ExtensionParams, HighestWeightData, HighestWeights, WeightModule,
};
use ugh_core::verma::{is_simple_verma, maximal_vectors, verma, verma_hom, HomSearch, DEFAULT_CUTOFF};
use ugh_core::{Error, RatFunc};

#[derive(Parser)]
#[command(name = "ugh", version, about = "Exact computations in the Hopf algebra U_{g,h}")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite an expression in the PBW basis F^l K^m g^n h^s E^t.
    Normalize { expr: String },
    /// Decide whether an expression is central.
    Central { expr: String },
    /// Check the Hopf axioms on generators, generator pairs and random elements.
    HopfCheck {
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build the simple module V_{eps,n,alpha,beta}.
    Simple {
        #[arg(long, allow_hyphen_values = true)]
        eps: i8,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Decompose the tensor product of two modules given as JSON files.
    TensorDecompose { left: PathBuf, right: PathBuf },
    /// Dual (or twisted dual) of a module given as a JSON file.
    Dual {
        module: PathBuf,
        #[arg(long)]
        twisted: bool,
    },
    /// Dimensions of Ext^0, Ext^1, Ext^2 between one-dimensional torus modules.
    ExtDims {
        /// alpha,beta
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// alpha',beta'
        #[arg(long, allow_hyphen_values = true)]
        pprime: String,
    },
    /// Maximal vectors and simplicity of the truncated Verma module V(a,b,c).
    Verma {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: usize,
    },
    /// Search for a homomorphism V(a,b,c) -> V(a',b',c').
    VermaHom {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        a2: String,
        #[arg(allow_hyphen_values = true)]
        b2: String,
        #[arg(allow_hyphen_values = true)]
        c2: String,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: usize,
    },
    /// Value of the central character at (a,b,c) on a central expression.
    Char {
        /// a,b,c
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        expr: String,
    },
    /// Verify the equitable presentation and its Hopf structure.
    EquitableCheck,
    /// Build the extension V_{eps,n} ⊗ M_{x,y} and inspect it.
    Extension {
        #[arg(long, allow_hyphen_values = true)]
        eps: i8,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
}

/// Output of a subcommand; `ok = false` maps to exit code 1.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn pass(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json output")
            } else {
                out.text.trim_end().to_string()
            };
            // a closed pipe is not our failure
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Normalize { expr } => {
            let a = parse_element(&expr)?;
            Ok(Outcome::pass(a.to_string(), json!({ "input": expr, "normal_form": a.to_string(), "terms": a.len() })))
        }
        Command::Central { expr } => {
            let a = parse_element(&expr)?;
            let central = is_central(&a);
            Ok(Outcome { text: central.to_string(), json: json!({ "input": expr, "central": central }), ok: central })
        }
        Command::HopfCheck { samples, seed } => hopf_check(samples, seed),
        Command::Simple { eps, n, alpha, beta } => {
            let d = HighestWeightData::new(eps, n, parse_scalar(&alpha)?, parse_scalar(&beta)?)?;
            let m = simple_module(&d);
            let mut text = format!("{d}\ndim {}\ncasimir acts by {}\n", m.dim(), d.casimir_scalar());
            let report = check_module(&m);
            write_matrices(&mut text, &m);
            let _ = write!(text, "relations: {report}");
            Ok(Outcome { text, json: module_to_value(&m), ok: report.passed() })
        }
        Command::TensorDecompose { left, right } => {
            let m = read_module(&left)?;
            let n = read_module(&right)?;
            match decompose(&tensor(&m, &n)) {
                Ok(parts) => {
                    let text = parts.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n");
                    Ok(Outcome::pass(text, json!({ "dim": m.dim() * n.dim(), "constituents": parts })))
                }
                Err(e @ Error::NotCompletelyReducible { .. }) => {
                    Ok(Outcome { text: e.to_string(), json: json!({ "error": e.to_string() }), ok: false })
                }
                Err(e) => Err(e),
            }
        }
        Command::Dual { module, twisted } => {
            let m = read_module(&module)?;
            let d = if twisted { twisted_dual(&m) } else { dual_module(&m) };
            let report = check_module(&d);
            let mut text = format!("{} dual, dim {}\n", if twisted { "twisted" } else { "ordinary" }, d.dim());
            if let Ok(parts) = decompose(&d) {
                for p in parts {
                    let _ = writeln!(text, "  {p}");
                }
            }
            write_matrices(&mut text, &d);
            let _ = write!(text, "relations: {report}");
            Ok(Outcome { text, json: module_to_value(&d), ok: report.passed() })
        }
        Command::ExtDims { p, pprime } => {
            let [alpha, beta] = scalars::<2>(&p, "--p")?;
            let [alpha2, beta2] = scalars::<2>(&pprime, "--pprime")?;
            let dims = ext_dims_torus(&alpha, &beta, &alpha2, &beta2)?;
            let text = format!("Ext^0 = {}, Ext^1 = {}, Ext^2 = {}", dims[0], dims[1], dims[2]);
            Ok(Outcome::pass(text, json!({ "ext0": dims[0], "ext1": dims[1], "ext2": dims[2] })))
        }
        Command::Verma { a, b, c, cutoff } => {
            let (a, b, c) = (parse_scalar(&a)?, parse_scalar(&b)?, parse_scalar(&c)?);
            let v = verma(a.clone(), b.clone(), c.clone(), cutoff)?;
            let maximal = maximal_vectors(&v);
            let verdict = is_simple_verma(&a, &b, &c, cutoff)?;
            let mut text = format!("V({a}, {b}, {c}), cutoff {cutoff}\nmaximal vectors:\n");
            for mv in &maximal {
                let _ = writeln!(text, "  depth {}  weight {}", mv.depth, mv.weight);
            }
            let _ = write!(text, "verdict: {verdict}");
            let json = json!({
                "parameters": { "a": a, "b": b, "c": c },
                "cutoff": cutoff,
                "maximal_vectors": maximal,
                "simplicity": verdict,
            });
            Ok(Outcome::pass(text, json))
        }
        Command::VermaHom { a, b, c, a2, b2, c2, cutoff } => {
            let source = point(&a, &b, &c)?;
            let target = point(&a2, &b2, &c2)?;
            let (text, json) = match verma_hom(&source, &target, cutoff)? {
                HomSearch::Found(h) => (
                    format!("found: F^p v -> F^(p+{}) v', epsilon {}", h.n, h.epsilon),
                    json!({ "result": "found", "n": h.n, "epsilon": h.epsilon }),
                ),
                HomSearch::None => ("none".to_string(), json!({ "result": "none" })),
                HomSearch::Inconclusive { n } => (
                    format!("inconclusive: degree {n} exceeds cutoff {cutoff}"),
                    json!({ "result": "inconclusive", "n": n }),
                ),
            };
            Ok(Outcome::pass(text, json))
        }
        Command::Char { point: p, expr } => {
            let [a, b, c] = scalars::<3>(&p, "--point")?;
            let pt = CentralCharacterPoint::new(a, b, c)?;
            let z = parse_element(&expr)?;
            match central_character(&pt, &z) {
                Ok(v) => Ok(Outcome::pass(v.to_string(), json!({ "point": pt, "value": v }))),
                Err(e @ Error::NotCentral(_)) => {
                    Ok(Outcome { text: e.to_string(), json: json!({ "error": e.to_string() }), ok: false })
                }
                Err(e) => Err(e),
            }
        }
        Command::EquitableCheck => {
            let relations = verify_equitable_relations();
            let hopf = verify_equitable_hopf();
            let ok = relations.passed() && hopf.passed();
            let text = format!("relations\n{relations}\n\nhopf structure\n{hopf}");
            Ok(Outcome { text, json: json!({ "relations": relations, "hopf": hopf }), ok })
        }
        Command::Extension { eps, n, alpha, beta, x, y } => {
            let d = HighestWeightData::new(eps, n, parse_scalar(&alpha)?, parse_scalar(&beta)?)?;
            let p = ExtensionParams::new(parse_scalar(&x)?, parse_scalar(&y)?);
            let m = extension_module(&d, &p);
            let report = check_module(&m);
            let non_diagonal: Vec<&str> = match highest_weight_vectors(&m) {
                HighestWeights::NonDiagonalizable(gs) => gs.iter().map(|g| g.name()).collect(),
                HighestWeights::Vectors(_) => Vec::new(),
            };
            let mut text = format!("{d} ⊗ M(x={}, y={}), dim {}\n", p.x, p.y, m.dim());
            let _ = writeln!(text, "split: {}", p.is_split());
            if !non_diagonal.is_empty() {
                let _ = writeln!(text, "not diagonalizable: {}", non_diagonal.join(", "));
            }
            write_matrices(&mut text, &m);
            let _ = write!(text, "relations: {report}");
            let mut json = module_to_value(&m);
            json["split"] = json!(p.is_split());
            json["non_diagonalizable"] = json!(non_diagonal);
            Ok(Outcome { text, json, ok: report.passed() })
        }
    }
}

fn hopf_check(samples: usize, seed: u64) -> Result<Outcome, Error> {
    let gens: Vec<AlgebraElement> = Generator::ALL.iter().map(|&x| AlgebraElement::generator(x)).collect();
    let mut report = HopfReport::default();
    for a in &gens {
        report.checks.extend(check_element(a));
    }
    for a in &gens {
        for b in &gens {
            report.checks.extend(check_pair(a, b));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<AlgebraElement> = (0..samples).map(|_| random_element(&mut rng, 3, 3)).collect();
    report.merge(check_hopf_axioms(&sample));

    let failed = report.failures().count();
    let mut text = String::new();
    for c in report.failures() {
        let _ = writeln!(text, "FAIL {}  {}  [{}]", c.axiom.name(), c.input, c.witness.as_deref().unwrap_or(""));
    }
    let _ = write!(text, "seed {seed}, {samples} samples: {} checks, {failed} failed", report.checks.len());
    let json = json!({
        "seed": seed,
        "samples": samples,
        "checks": report.checks.len(),
        "failed": failed,
        "failures": report.failures().collect::<Vec<_>>(),
    });
    Ok(Outcome { text, json, ok: failed == 0 })
}

fn write_matrices(out: &mut String, m: &WeightModule) {
    let _ = writeln!(out, "basis: {}", m.labels().join(", "));
    for x in [Generator::E, Generator::F, Generator::K, Generator::G, Generator::H] {
        let _ = writeln!(out, "{}:", x.name());
        let a = m.matrix(x);
        for i in 0..a.rows() {
            let row: Vec<String> = a.row(i).iter().map(RatFunc::to_string).collect();
            let _ = writeln!(out, "  [{}]", row.join(", "));
        }
    }
}

fn read_module(path: &PathBuf) -> Result<WeightModule, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    module_from_json(&text)
}

fn point(a: &str, b: &str, c: &str) -> Result<CentralCharacterPoint, Error> {
    CentralCharacterPoint::new(parse_scalar(a)?, parse_scalar(b)?, parse_scalar(c)?)
}

/// Parse `N` comma-separated scalars; commas inside parentheses do not split.
fn scalars<const N: usize>(text: &str, flag: &str) -> Result<[RatFunc; N], Error> {
    let parts = split_top_level(text);
    if parts.len() != N {
        return Err(Error::InvalidArgument(format!("{flag} expects {N} comma-separated values, got {}", parts.len())));
    }
    let values = parts.iter().map(|p| parse_scalar(p)).collect::<Result<Vec<_>, _>>()?;
    Ok(values.try_into().expect("length checked"))
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}
