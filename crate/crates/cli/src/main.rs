use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use jackcalc::binomial::{binom_poly, binom_table, binom_w, operator_route_raw, OPERATOR_ROUTE_CALIBRATION};
use jackcalc::expansions::{c_direct, c_formula, generating_residual, partitions_up_to, q_direct, q_symmetry, three_way_consistency};
use jackcalc::numquad::{laguerre_gram, laplace_check_r1, QuadratureSpec};
use jackcalc::operators::Permutation;
use jackcalc::params::{compositions_up_to, hook_products};
use jackcalc::rational::{format_rational, int, parse_rational, rising, sign_pow};
use jackcalc::special::{hyp2f1_terminating, kernel_truncated, mp_value, LaguerreFunction};
use jackcalc::{AlphaContext, Composition, JackFamily, Polynomial, RationalVector, Q};
use serde_json::{json, Value};

const MAX_DEGREE: u32 = 6;

#[derive(Parser, Debug)]
#[command(name = "jackcalc", version, about = "Exact computations with non-symmetric Jack polynomials")]
struct Cli {
    /// Write the JSON document here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Base {
    /// Number of variables.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=6))]
    r: u32,
    /// Jack parameter as "p" or "p/q", positive.
    #[arg(long, default_value = "1", value_parser = rational_arg)]
    alpha: Q,
}

#[derive(Args, Debug, Clone)]
struct Degree {
    /// Truncation degree.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(0..=MAX_DEGREE as i64))]
    deg: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Non-symmetric Jack polynomial E_η.
    E {
        #[command(flatten)]
        base: Base,
        #[arg(long, value_parser = composition_arg)]
        eta: Composition,
    },
    /// Hook products d, d′ and e.
    Hooks {
        #[command(flatten)]
        base: Base,
        #[arg(long, value_parser = composition_arg)]
        eta: Composition,
    },
    /// Binomial coefficients binom(η, ν), all ν or one.
    Binom {
        #[command(flatten)]
        base: Base,
        #[arg(long, value_parser = composition_arg)]
        eta: Composition,
        #[arg(long, value_parser = composition_arg)]
        nu: Option<Composition>,
    },
    /// Twisted binomial binom_w(η, ν), by expansion and by Dunkl operators.
    BinomW {
        #[command(flatten)]
        base: Base,
        #[arg(long, value_parser = composition_arg)]
        eta: Composition,
        #[arg(long, value_parser = composition_arg)]
        nu: Composition,
        /// Permutation in image ("2,1,3") or cycle ("(1 2)") notation.
        #[arg(long)]
        w: Option<String>,
    },
    /// Non-symmetric Laguerre polynomial.
    Laguerre {
        #[command(flatten)]
        base: Base,
        #[arg(long, value_parser = composition_arg)]
        kappa: Composition,
        #[arg(long, value_parser = rational_arg)]
        b: Q,
    },
    /// Meixner–Pollaczek type polynomial at a rational point.
    Mp {
        #[command(flatten)]
        base: Base,
        #[arg(long, value_parser = composition_arg)]
        kappa: Composition,
        #[arg(long, value_parser = vector_arg, allow_hyphen_values = true)]
        lambda: RationalVector,
        #[arg(long, value_parser = rational_arg)]
        b: Q,
        #[arg(long)]
        w: Option<String>,
    },
    /// Truncated exponential kernel in (t, y).
    Kernel {
        #[command(flatten)]
        base: Base,
        #[command(flatten)]
        deg: Degree,
    },
    /// Exact verification sweeps.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Floating-point quadrature checks.
    Quad {
        #[command(subcommand)]
        which: Quad,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Laguerre generating function against the kernel.
    #[command(name = "lemma41")]
    Generating {
        #[command(flatten)]
        base: Base,
        #[arg(long, value_parser = rational_arg)]
        b: Q,
        #[command(flatten)]
        deg: Degree,
    },
    /// Cayley-transform coefficients: series against closed form.
    #[command(name = "lemma42")]
    Coefficients {
        #[command(flatten)]
        base: Base,
        #[arg(long)]
        b: u32,
        #[arg(long, value_parser = composition_arg)]
        eta: Composition,
        #[command(flatten)]
        deg: Degree,
    },
    /// Series, closed form and Meixner–Pollaczek route side by side.
    #[command(name = "thm43")]
    ThreeWay {
        #[command(flatten)]
        base: Base,
        #[arg(long)]
        b: u32,
        #[arg(long, value_parser = composition_arg)]
        eta: Composition,
        #[command(flatten)]
        deg: Degree,
    },
    /// One-variable reduction to ₂F₁ at argument 2.
    Mp1var {
        #[arg(long, default_value = "1", value_parser = rational_arg)]
        alpha: Q,
        #[arg(long, value_parser = rational_arg)]
        b: Q,
        /// Comma-separated rational evaluation points.
        #[arg(long, value_parser = vector_arg, allow_hyphen_values = true)]
        lambda: RationalVector,
        #[command(flatten)]
        deg: Degree,
    },
    /// Permutation invariance of the symmetric expansion coefficients.
    SymQ {
        #[command(flatten)]
        base: Base,
        #[arg(long)]
        b: u32,
        /// Semicolon-separated points, e.g. "1/2,3;-2,5/3".
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
        #[command(flatten)]
        deg: Degree,
    },
}

#[derive(Subcommand, Debug)]
enum Quad {
    /// Gram matrix of Laguerre functions with |κ| ≤ deg.
    Ortho {
        #[command(flatten)]
        base: Base,
        #[arg(long, value_parser = rational_arg)]
        b: Q,
        #[command(flatten)]
        deg: Degree,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long)]
        nodes: Option<usize>,
    },
    /// One-variable Laplace transform of x^{c+l}, l ≤ deg.
    Laplace {
        #[arg(long, value_parser = rational_arg)]
        c: Q,
        #[command(flatten)]
        deg: Degree,
        /// Comma-separated positive t values.
        #[arg(long, default_value = "0.5,1,2,3")]
        t: String,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long)]
        nodes: Option<usize>,
    },
}

fn rational_arg(s: &str) -> Result<Q, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn composition_arg(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: jackcalc::Error| e.to_string())
}

fn vector_arg(s: &str) -> Result<RationalVector, String> {
    s.parse().map_err(|e: jackcalc::Error| e.to_string())
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] jackcalc::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(e) if is_input_error(e) => 2,
            _ => 1,
        }
    }
}

fn is_input_error(e: &jackcalc::Error) -> bool {
    matches!(
        e,
        jackcalc::Error::Input(_) | jackcalc::Error::RankMismatch { .. } | jackcalc::Error::ParameterOutOfRange(_)
    )
}

type CliResult<T> = Result<T, CliError>;

/// JSON document plus the verdict of a verification (None for plain computations).
struct Outcome {
    doc: Value,
    pass: Option<bool>,
}

impl Outcome {
    fn plain(doc: Value) -> Self {
        Self { doc, pass: None }
    }

    fn verdict(doc: Value, pass: bool) -> Self {
        Self { doc, pass: Some(pass) }
    }
}

fn usage(flag: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("--{flag}: {msg}"))
}

fn context(base: &Base) -> CliResult<AlphaContext> {
    AlphaContext::new(base.r as usize, base.alpha.clone()).map_err(|e| usage("alpha", e))
}

fn family(base: &Base) -> CliResult<JackFamily> {
    Ok(JackFamily::new(context(base)?))
}

fn check_len(flag: &str, len: usize, r: u32) -> CliResult<()> {
    if len != r as usize {
        return Err(usage(flag, format!("expected {r} entries, got {len}")));
    }
    Ok(())
}

fn check_weight(flag: &str, c: &Composition) -> CliResult<()> {
    if c.weight() > MAX_DEGREE {
        return Err(usage(flag, format!("weight {} exceeds the bound {MAX_DEGREE}", c.weight())));
    }
    Ok(())
}

fn permutation(w: &Option<String>, r: u32) -> CliResult<Permutation> {
    match w {
        None => Ok(Permutation::identity(r as usize)),
        Some(s) => Permutation::parse(s, r as usize).map_err(|e| usage("w", e)),
    }
}

fn q(x: &Q) -> Value {
    Value::String(format_rational(x))
}

fn qs(v: &[Q]) -> Value {
    Value::Array(v.iter().map(q).collect())
}

fn poly_terms(p: &Polynomial) -> Value {
    serde_json::to_value(p).expect("serializable")["terms"].take()
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn run(cmd: Command) -> CliResult<Outcome> {
    match cmd {
        Command::E { base, eta } => {
            check_len("eta", eta.len(), base.r)?;
            check_weight("eta", &eta)?;
            let fam = family(&base)?;
            let j = fam.jack(&eta)?;
            Ok(Outcome::plain(json!({
                "r": base.r,
                "alpha": q(&base.alpha),
                "eta": eta.parts(),
                "poly": poly_terms(&j.poly),
                "spectral": qs(j.spectral.entries()),
                "value_at_ones": q(&j.value_at_ones),
            })))
        }
        Command::Hooks { base, eta } => {
            check_len("eta", eta.len(), base.r)?;
            let h = hook_products(&eta, &context(&base)?);
            Ok(Outcome::plain(json!({"d": q(&h.d), "d_prime": q(&h.d_prime), "e": q(&h.e)})))
        }
        Command::Binom { base, eta, nu } => {
            check_len("eta", eta.len(), base.r)?;
            check_weight("eta", &eta)?;
            let fam = family(&base)?;
            let table = binom_table(&fam, &eta)?;
            let doc = match nu {
                Some(nu) => {
                    check_len("nu", nu.len(), base.r)?;
                    json!({"eta": eta.parts(), "nu": nu.parts(), "value": q(&table.get(&nu))})
                }
                None => json!({"eta": eta.parts(), "table": to_json(&*table)}),
            };
            Ok(Outcome::plain(doc))
        }
        Command::BinomW { base, eta, nu, w } => {
            check_len("eta", eta.len(), base.r)?;
            check_len("nu", nu.len(), base.r)?;
            check_weight("eta", &eta)?;
            let w = permutation(&w, base.r)?;
            let fam = family(&base)?;
            let expansion = binom_w(&fam, &eta, &nu, &w)?;
            let operator = operator_route_raw(&fam, &eta, &nu, &w)? / int(OPERATOR_ROUTE_CALIBRATION);
            let polynomial = if nu.weight() <= 3 {
                let bp = binom_poly(&fam, &nu, &w)?;
                Value::from(bp.poly.degree().unwrap_or(0))
            } else {
                Value::Null
            };
            Ok(Outcome::plain(json!({
                "eta": eta.parts(),
                "nu": nu.parts(),
                "w": w.images().iter().map(|i| i + 1).collect::<Vec<_>>(),
                "value": q(&expansion),
                "operator_route": q(&operator),
                "interpolant_degree": polynomial,
            })))
        }
        Command::Laguerre { base, kappa, b } => {
            check_len("kappa", kappa.len(), base.r)?;
            check_weight("kappa", &kappa)?;
            let fam = family(&base)?;
            let p = jackcalc::special::laguerre_poly(&fam, &kappa, &b)?;
            let orthogonal = LaguerreFunction::new(&fam, &kappa, &b).is_ok();
            Ok(Outcome::plain(json!({
                "kappa": kappa.parts(),
                "b": q(&b),
                "poly": poly_terms(&p),
                "measure_admissible": orthogonal,
            })))
        }
        Command::Mp { base, kappa, lambda, b, w } => {
            check_len("kappa", kappa.len(), base.r)?;
            check_len("lambda", lambda.len(), base.r)?;
            check_weight("kappa", &kappa)?;
            let w = permutation(&w, base.r)?;
            let fam = family(&base)?;
            let m = mp_value(&fam, &kappa, &lambda, &w, &b)?;
            Ok(Outcome::plain(json!({
                "kappa": kappa.parts(),
                "lambda": qs(lambda.entries()),
                "b": q(&b),
                "w": w.images().iter().map(|i| i + 1).collect::<Vec<_>>(),
                "value": q(&m.value),
            })))
        }
        Command::Kernel { base, deg } => {
            let fam = family(&base)?;
            let k = kernel_truncated(&fam, deg.deg)?;
            let slices: Vec<Value> = (0..=deg.deg).map(|m| poly_terms(&k.slice(m))).collect();
            Ok(Outcome::plain(json!({"r": base.r, "deg": deg.deg, "variables": "t1..tr, y1..yr", "slices": slices})))
        }
        Command::Verify { which } => verify(which),
        Command::Quad { which } => quad(which),
    }
}

fn verify(which: Verify) -> CliResult<Outcome> {
    match which {
        Verify::Generating { base, b, deg } => {
            let fam = family(&base)?;
            let res = generating_residual(&fam, deg.deg, &b)?;
            let pass = res.is_zero();
            Ok(Outcome::verdict(
                json!({
                    "b": q(&b),
                    "deg": deg.deg,
                    "variables": "x1..xr, z1..zr",
                    "residual_terms": poly_terms(&res),
                    "pass": pass,
                }),
                pass,
            ))
        }
        Verify::Coefficients { base, b, eta, deg } => {
            check_len("eta", eta.len(), base.r)?;
            let fam = family(&base)?;
            let direct = c_direct(&fam, &eta, b, deg.deg).map_err(|e| usage("eta", e))?;
            let mut rows = Vec::new();
            let mut pass = true;
            for kappa in compositions_up_to(fam.r(), deg.deg) {
                let d = direct.get(&kappa);
                let f = c_formula(&fam, &eta, &kappa, b)?;
                pass &= d == f;
                rows.push(json!({"kappa": kappa.parts(), "direct": q(&d), "formula": q(&f), "agree": d == f}));
            }
            Ok(Outcome::verdict(json!({"eta": eta.parts(), "b": b, "deg": deg.deg, "rows": rows, "pass": pass}), pass))
        }
        Verify::ThreeWay { base, b, eta, deg } => {
            check_len("eta", eta.len(), base.r)?;
            let fam = family(&base)?;
            let rep = three_way_consistency(&fam, &eta, b, deg.deg).map_err(|e| usage("eta", e))?;
            let pass = rep.pass;
            Ok(Outcome::verdict(to_json(&rep), pass))
        }
        Verify::Mp1var { alpha, b, lambda, deg } => {
            let fam = JackFamily::new(AlphaContext::new(1, alpha).map_err(|e| usage("alpha", e))?);
            let mut rows = Vec::new();
            let mut pass = true;
            for k in 0..=deg.deg {
                for lam in lambda.entries() {
                    let m = mp_value(&fam, &Composition::new(vec![k]), &RationalVector::new(vec![lam.clone()]), &Permutation::identity(1), &b)?;
                    let hyp = hyp2f1_terminating(k, &(&b / int(2) - lam), &b, &int(2))?;
                    let want = rising(&b, k) * sign_pow(k) * hyp;
                    pass &= m.value == want;
                    rows.push(json!({"k": k, "lambda": q(lam), "mp": q(&m.value), "hypergeometric": q(&want), "agree": m.value == want}));
                }
            }
            Ok(Outcome::verdict(json!({"b": q(&b), "deg": deg.deg, "rows": rows, "pass": pass}), pass))
        }
        Verify::SymQ { base, b, points, deg } => {
            let fam = family(&base)?;
            let points = match points {
                Some(s) => s
                    .split(';')
                    .map(|p| p.parse::<RationalVector>().map_err(|e| usage("points", e)))
                    .collect::<CliResult<Vec<_>>>()?,
                None => default_points(base.r as usize),
            };
            for p in &points {
                check_len("points", p.len(), base.r)?;
            }
            let kappas: Vec<Composition> = partitions_up_to(fam.r(), deg.deg).into_iter().filter(|k| !k.is_zero()).collect();
            let rep = q_symmetry(&fam, &kappas, b, &points).map_err(|e| match e {
                jackcalc::Error::Input(m) => usage("b", m),
                e => e.into(),
            })?;
            // a small sample table for the record
            let lowest = Composition::new((0..fam.r()).map(|_| b / 2).collect());
            let sample = q_direct(&fam, &lowest, b, deg.deg)?;
            let pass = rep.pass;
            let mut doc = to_json(&rep);
            doc["sample_table"] = json!({"eta": lowest.parts(), "coefficients": to_json(&sample)});
            Ok(Outcome::verdict(doc, pass))
        }
    }
}

fn default_points(r: usize) -> Vec<RationalVector> {
    let pool = ["1/2", "3", "-2", "5/3", "7/4", "-1/5", "0", "4", "-3/2", "-9/2", "2/7", "1"];
    (0..6)
        .map(|i| RationalVector::new((0..r).map(|j| parse_rational(pool[(2 * i + j) % pool.len()]).expect("literal")).collect()))
        .collect()
}

fn quad_spec(r: usize, tolerance: Option<f64>, nodes: Option<usize>) -> CliResult<QuadratureSpec> {
    let mut spec = QuadratureSpec::default_for(r);
    if let Some(t) = tolerance {
        spec.tolerance = t;
    }
    if let Some(n) = nodes {
        spec.nodes = n;
    }
    spec.validate().map_err(|e| usage("tolerance", e))?;
    Ok(spec)
}

fn quad(which: Quad) -> CliResult<Outcome> {
    match which {
        Quad::Ortho { base, b, deg, tolerance, nodes } => {
            let fam = family(&base)?;
            let spec = quad_spec(base.r as usize, tolerance, nodes)?;
            let g = laguerre_gram(&fam, deg.deg, &b, &spec)?;
            let pass = g.pass;
            Ok(Outcome::verdict(to_json(&g), pass))
        }
        Quad::Laplace { c, deg, t, tolerance, nodes } => {
            let ts = t
                .split(',')
                .map(|x| x.trim().parse::<f64>().map_err(|e| usage("t", e)))
                .collect::<CliResult<Vec<_>>>()?;
            let spec = quad_spec(1, tolerance, nodes)?;
            let ls: Vec<u32> = (0..=deg.deg).collect();
            let rep = laplace_check_r1(&c, &ls, &ts, &spec)?;
            let pass = rep.pass;
            Ok(Outcome::verdict(to_json(&rep), pass))
        }
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("JACKCALC_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("JACKCALC_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("JACKCALC_THREADS: {e}")))
}

fn emit(doc: &Value, output: &Option<PathBuf>) -> CliResult<()> {
    let text = serde_json::to_string_pretty(doc).expect("serializable") + "\n";
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| run(cli.command)).and_then(|out| {
        emit(&out.doc, &cli.output)?;
        Ok(out.pass)
    });
    match result {
        Ok(Some(false)) => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("jackcalc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
