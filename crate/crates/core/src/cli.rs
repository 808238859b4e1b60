//! Command-line front end. [`run`] parses arguments, executes one command and
//! returns the process exit code: 0 on success, 1 on a mathematical violation
//! or disagreement, 2 on a usage or parse error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::definitions::{
    check_hypotheses, classify, geometric_suite, definability_environment, pow_characterization_check, telescoping_suite,
    ClassificationRecord, A_SET,
};
use crate::divisibility::constant_annihilation_check;
use crate::enumerate::{enumerate_fragment, CoefficientRange, FragmentShape, FragmentSpec};
use crate::formula::{cross_check_set, eval_formula, parse_formula};
use crate::parse::{parse_element, parse_scalar};
use crate::ring::{Ring, RingElement};

/// Samples of `t` per exponent in the telescoping suite.
const TELESCOPING_SAMPLES: usize = 200;
const TELESCOPING_SEED: u64 = 0x7e1e;

#[derive(Parser, Debug)]
#[command(name = "intdef", version, about = "Check integer-definability formulas in polynomial rings and the quantum plane")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Opts {
    /// Ring to work in.
    #[arg(long, global = true, value_enum)]
    ring: Option<RingName>,
    /// Quantum-plane parameter, e.g. 2, 1/3, i, -1.
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    /// Largest exponent N searched for powers of x (at least 2).
    #[arg(long, global = true)]
    bound: Option<u32>,
    /// Fragment degree bound (univariate rings).
    #[arg(long, global = true)]
    degree: Option<u32>,
    /// Fragment bidegree bound DX,DY (quantum plane).
    #[arg(long, global = true, value_parser = parse_bidegree)]
    bidegree: Option<(u32, u32)>,
    /// Coefficient height H (at least 1).
    #[arg(long, global = true)]
    height: Option<u32>,
    /// Coefficient values drawn by fragments.
    #[arg(long, global = true, value_enum)]
    coeffs: Option<Coeffs>,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// TOML file with defaults for the options above.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every verification suite for the selected ring.
    Verify,
    /// Decide membership in N and Z for each element.
    Classify {
        #[arg(required = true, allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Evaluate a formula.
    Eval {
        formula: String,
        /// Parameter binding NAME=ELEMENT; may be repeated.
        #[arg(long = "bind", value_parser = parse_binding)]
        bindings: Vec<(String, String)>,
    },
    /// List x, x^2, ..., x^N.
    Powers,
    /// List the elements of the configured fragment.
    Enumerate,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum RingName {
    IntPoly,
    RatPoly,
    GaussPoly,
    Qplane,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Coeffs {
    Domain,
    Integers,
    GaussianIntegers,
}

impl From<Coeffs> for CoefficientRange {
    fn from(c: Coeffs) -> Self {
        match c {
            Coeffs::Domain => CoefficientRange::Domain,
            Coeffs::Integers => CoefficientRange::Integers,
            Coeffs::GaussianIntegers => CoefficientRange::GaussianIntegers,
        }
    }
}

/// Keys accepted in the `--config` file.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    ring: Option<RingName>,
    q: Option<String>,
    bound: Option<u32>,
    degree: Option<u32>,
    bidegree: Option<(u32, u32)>,
    height: Option<u32>,
    coeffs: Option<Coeffs>,
    json: Option<bool>,
}

fn parse_bidegree(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected DX,DY, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

fn parse_binding(s: &str) -> Result<(String, String), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=ELEMENT, got {s:?}"))?;
    if name.is_empty() {
        return Err(format!("empty name in {s:?}"));
    }
    Ok((name.trim().to_string(), value.to_string()))
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Resolved settings: flags over config file over defaults.
struct RunConfig {
    ring_name: RingName,
    ring: Ring,
    q: Option<String>,
    bound: u32,
    fragment: FragmentSpec,
    json: bool,
}

impl RunConfig {
    fn resolve(opts: Opts) -> Result<Self, UsageError> {
        let file = match &opts.config {
            Some(path) => read_config(path)?,
            None => FileConfig::default(),
        };
        let ring_name = opts.ring.or(file.ring).unwrap_or(RingName::IntPoly);
        let q_text = opts.q.or(file.q);
        let ring = match ring_name {
            RingName::IntPoly => Ring::int_poly(),
            RingName::RatPoly => Ring::rat_poly(),
            RingName::GaussPoly => Ring::gauss_poly(),
            RingName::Qplane => {
                let q = parse_scalar(q_text.as_deref().unwrap_or("2")).map_err(|e| format!("--q: {e}"))?;
                Ring::quantum_plane(q).map_err(|e| format!("--q: {e}"))?
            }
        };
        if ring_name != RingName::Qplane && q_text.is_some() {
            return Err(UsageError("--q applies only to --ring qplane".into()));
        }
        let bound = opts.bound.or(file.bound).unwrap_or(16);
        if bound < 2 {
            return Err(UsageError(format!("--bound must be at least 2, got {bound}")));
        }
        let degree = opts.degree.or(file.degree);
        let bidegree = opts.bidegree.or(file.bidegree);
        let (shape, default_height, default_range) = match ring_name {
            RingName::Qplane => {
                if degree.is_some() {
                    return Err(UsageError("use --bidegree for the quantum plane".into()));
                }
                let (dx, dy) = bidegree.unwrap_or((2, 2));
                (FragmentShape::Bidegree(dx, dy), 1, CoefficientRange::Integers)
            }
            _ => {
                if bidegree.is_some() {
                    return Err(UsageError("--bidegree applies only to --ring qplane".into()));
                }
                let range = if ring_name == RingName::GaussPoly {
                    CoefficientRange::GaussianIntegers
                } else {
                    CoefficientRange::Domain
                };
                (FragmentShape::Degree(degree.unwrap_or(2)), 3, range)
            }
        };
        let height = opts.height.or(file.height).unwrap_or(default_height);
        let range = opts.coeffs.or(file.coeffs).map_or(default_range, CoefficientRange::from);
        let fragment = FragmentSpec::new(&ring, shape, height)?.with_range(range);
        Ok(RunConfig {
            ring_name,
            ring,
            q: if ring_name == RingName::Qplane { q_text.or(Some("2".into())) } else { None },
            bound,
            fragment,
            json: opts.json || file.json.unwrap_or(false),
        })
    }

    fn to_json(&self) -> Value {
        json!({
            "ring": self.ring_name,
            "context": self.ring.to_string(),
            "q": self.q,
            "bound": self.bound,
            "fragment": self.fragment,
        })
    }
}

fn read_config(path: &Path) -> Result<FileConfig, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    toml::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let config = match RunConfig::resolve(cli.opts) {
        Ok(c) => c,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let result = match cli.command {
        Command::Verify => cmd_verify(&config),
        Command::Classify { elements } => cmd_classify(&config, &elements),
        Command::Eval { formula, bindings } => cmd_eval(&config, &formula, &bindings),
        Command::Powers => cmd_powers(&config),
        Command::Enumerate => cmd_enumerate(&config),
    };
    match result {
        Ok(Report { code, text, json, warnings }) => {
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let body = if config.json {
                let mut s = serde_json::to_string_pretty(&json).expect("reports serialize");
                s.push('\n');
                s
            } else {
                text
            };
            if out.write_all(body.as_bytes()).is_err() {
                return 2;
            }
            code
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

struct Report {
    code: i32,
    text: String,
    json: Value,
    warnings: Vec<String>,
}

struct Suite {
    name: &'static str,
    /// `None` when the suite does not apply to the ring.
    passed: Option<bool>,
    counterexample: Option<String>,
    details: Value,
}

impl Suite {
    fn to_json(&self) -> Value {
        let status = match self.passed {
            Some(true) => "pass",
            Some(false) => "fail",
            None => "skipped",
        };
        let mut v = json!({"name": self.name, "status": status});
        if let Some(c) = &self.counterexample {
            v["counterexample"] = json!(c);
        }
        v["details"] = self.details.clone();
        v
    }
}

fn worked_example_suite(ring: &Ring) -> Result<Suite, UsageError> {
    let el = |s: &str| parse_element(s, ring);
    let (a, b) = (el("3+x")?, el("2+y")?);
    let ab = a.mul(&b)?;
    let ba = b.mul(&a)?;
    let q = ring.constant(ring.q().expect("quantum plane").clone())?;
    let xy = el("x*y")?;
    let base = el("6 + 2*x + 3*y")?;
    let expected_ab = base.add(&xy)?;
    let expected_ba = base.add(&q.mul(&xy)?)?;
    let passed = ab == expected_ab && ba == expected_ba;
    Ok(Suite {
        name: "worked-example",
        passed: Some(passed),
        counterexample: (!passed).then(|| format!("(3+x)*(2+y) = {ab}, (2+y)*(3+x) = {ba}")),
        details: json!({
            "(3+x)*(2+y)": ab, "expected (3+x)*(2+y)": expected_ab,
            "(2+y)*(3+x)": ba, "expected (2+y)*(3+x)": expected_ba,
        }),
    })
}

fn cmd_verify(config: &RunConfig) -> Result<Report, UsageError> {
    let ring = &config.ring;
    let x = ring.x();
    let env = definability_environment(ring, &x)?;
    let mut suites = Vec::new();

    if ring.q().is_some() {
        suites.push(worked_example_suite(ring)?);
    }

    let hyp = check_hypotheses(&env, &x, A_SET, &config.fragment, config.bound)?;
    let violated = hyp.entries().into_iter().find_map(|(name, s)| match s {
        crate::definitions::HypothesisStatus::Violated { counterexample, detail } => {
            Some(format!("{name}: {counterexample} ({detail})"))
        }
        _ => None,
    });
    suites.push(Suite {
        name: "hypotheses",
        passed: Some(hyp.all_hold()),
        counterexample: violated,
        details: serde_json::to_value(&hyp)?,
    });

    let geo = geometric_suite(ring, config.bound)?;
    suites.push(Suite {
        name: "geometric-identity",
        passed: Some(geo.holds()),
        counterexample: geo.counterexample.clone(),
        details: json!({"max_n": config.bound, "checked": geo.checked}),
    });

    let tel = telescoping_suite(&config.fragment, config.bound, TELESCOPING_SAMPLES, TELESCOPING_SEED)?;
    suites.push(Suite {
        name: "telescoping-identity",
        passed: Some(tel.holds()),
        counterexample: tel.counterexample.clone(),
        details: json!({"max_n": config.bound, "samples": TELESCOPING_SAMPLES, "seed": TELESCOPING_SEED, "checked": tel.checked}),
    });

    let ann = constant_annihilation_check(&config.fragment)?;
    suites.push(Suite {
        name: "constant-annihilation",
        passed: Some(ann.holds),
        counterexample: ann.counterexample.as_ref().map(ToString::to_string),
        details: json!({"checked": ann.checked}),
    });

    if ring.is_commutative() {
        // The divisor search is quadratic in fragment size, so both sides use
        // integer coefficients; divisors go one degree higher.
        let FragmentShape::Degree(d) = config.fragment.shape() else { unreachable!() };
        let h = config.fragment.height();
        let z_frag = FragmentSpec::degree(ring, d, h)?.with_range(CoefficientRange::Integers);
        let d_frag = FragmentSpec::degree(ring, d + 1, h)?.with_range(CoefficientRange::Integers);
        let rep = pow_characterization_check(&z_frag, &d_frag)?;
        let first = rep
            .contradictions
            .first()
            .map(|c| format!("{}: {}", c.element, c.reason))
            .or_else(|| rep.oracle_mismatches.first().map(|z| format!("{z}: power oracles disagree")));
        suites.push(Suite {
            name: "pow-characterization",
            passed: Some(rep.sound()),
            counterexample: first,
            details: json!({"fragment": z_frag, "divisors": d_frag, "report": rep}),
        });
    } else {
        suites.push(Suite {
            name: "pow-characterization",
            passed: None,
            counterexample: None,
            details: json!({"reason": "the decomposition argument needs a commutative ring"}),
        });
    }

    if env.set_definition(A_SET).is_some() {
        let cc = cross_check_set(&env, A_SET, &config.fragment)?;
        suites.push(Suite {
            name: "constants-formula",
            passed: Some(cc.agrees()),
            counterexample: cc.disagreement.as_ref().map(|(z, m, v)| format!("{z}: decider {m}, formula {v}")),
            details: json!({"formula": "z = 0 | z | 1", "checked": cc.checked}),
        });
    } else {
        suites.push(Suite {
            name: "constants-formula",
            passed: None,
            counterexample: None,
            details: json!({"reason": "coefficients do not form a field"}),
        });
    }

    let failed = suites.iter().any(|s| s.passed == Some(false));
    let mut text = format!("{}\nfragment {}, N = {}\n", ring, config.fragment, config.bound);
    for s in &suites {
        let status = match s.passed {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "skipped",
        };
        let _ = write!(text, "{:<24}{status}", s.name);
        if let Some(c) = &s.counterexample {
            let _ = write!(text, "  counterexample: {c}");
        }
        text.push('\n');
    }
    if ring.q().is_some() {
        let d = &suites[0].details;
        let _ = writeln!(text, "(3+x)*(2+y) = {}", d["(3+x)*(2+y)"].as_str().unwrap_or_default());
        let _ = writeln!(text, "(2+y)*(3+x) = {}", d["(2+y)*(3+x)"].as_str().unwrap_or_default());
    }
    let json = json!({"config": config.to_json(), "suites": suites.iter().map(Suite::to_json).collect::<Vec<_>>()});
    Ok(Report { code: failed as i32, text, json, warnings: Vec::new() })
}

fn cmd_classify(config: &RunConfig, elements: &[String]) -> Result<Report, UsageError> {
    let env = definability_environment(&config.ring, &config.ring.x())?;
    let mut records = Vec::new();
    let mut text = String::new();
    let mut warnings = Vec::new();
    let (mut valid, mut disagree) = (0, false);
    for input in elements {
        let t = match parse_element(input, &config.ring) {
            Ok(t) => t,
            Err(e) => {
                let _ = writeln!(text, "{input}: error: {e}");
                records.push(json!({"input": input, "error": e.to_string()}));
                continue;
            }
        };
        valid += 1;
        let rec = classify(&env, &t, config.bound)?;
        if rec.natural.bound_too_small || rec.integer.bound_too_small {
            warnings.push(format!("{t}: bound N = {} is below the value; the negative answer is inconclusive", config.bound));
        }
        disagree |= !rec.agrees();
        let _ = writeln!(text, "{}", record_line(&rec));
        let mut v = serde_json::to_value(&rec)?;
        v["input"] = json!(input);
        v["agrees"] = json!(rec.agrees());
        records.push(v);
    }
    if valid == 0 {
        return Err(UsageError(format!("no valid elements:\n{text}")));
    }
    let json = json!({"config": config.to_json(), "records": records});
    Ok(Report { code: disagree as i32, text, json, warnings })
}

fn record_line(rec: &ClassificationRecord) -> String {
    let witness = match rec.integer.witness {
        Some(n) => format!("  n = {n}"),
        None => String::new(),
    };
    let flag = if rec.agrees() { "" } else { "  DISAGREES WITH GROUND TRUTH" };
    format!(
        "{}: integer: {}  natural: {}  formula: {}{witness}{flag}",
        rec.element, rec.integer.member, rec.natural.member, rec.formula
    )
}

fn cmd_eval(config: &RunConfig, formula: &str, bindings: &[(String, String)]) -> Result<Report, UsageError> {
    let f = parse_formula(formula).map_err(|e| format!("formula: {e}"))?;
    let mut env = definability_environment(&config.ring, &config.ring.x())?;
    env.set_default_fragment(config.fragment.clone())?;
    let mut bound = Vec::new();
    for (name, text) in bindings {
        let value: RingElement = parse_element(text, &config.ring).map_err(|e| format!("--bind {name}: {e}"))?;
        env.bind(name, value.clone())?;
        bound.push(json!({"name": name, "value": value}));
    }
    let verdict = eval_formula(&f, &env)?;
    let text = format!("{f}\n{verdict}\n");
    let json = json!({"config": config.to_json(), "formula": f.to_string(), "bindings": bound, "verdict": verdict});
    Ok(Report { code: 0, text, json, warnings: Vec::new() })
}

fn cmd_powers(config: &RunConfig) -> Result<Report, UsageError> {
    let x = config.ring.x();
    let mut text = String::new();
    let mut records = Vec::new();
    let mut cur = x.clone();
    for n in 1..=config.bound {
        let _ = writeln!(text, "{n}: {cur}");
        records.push(json!({"n": n, "power": cur}));
        cur = cur.mul(&x)?;
    }
    Ok(Report { code: 0, text, json: json!({"config": config.to_json(), "records": records}), warnings: Vec::new() })
}

fn cmd_enumerate(config: &RunConfig) -> Result<Report, UsageError> {
    let frag = enumerate_fragment(&config.fragment)?;
    let mut text = String::new();
    let mut records = Vec::new();
    for z in frag.iter() {
        let _ = writeln!(text, "{z}");
        records.push(json!(z));
    }
    Ok(Report { code: 0, text, json: json!({"config": config.to_json(), "records": records}), warnings: Vec::new() })
}
