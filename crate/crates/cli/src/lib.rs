//! Command-line front end for `webflat`.
//!
//! [`run`] takes the argument vector and returns the rendered output together
//! with the exit code, so the binary is a thin wrapper and tests can drive the
//! whole dispatch in-process.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use webflat::field::Field;
use webflat::parse::{parse_components, parse_field_spec, parse_poly, parse_scalar, ParseError};
use webflat::singularities::{check_classification, classify_singularity};
use webflat::web::{
    dual_curvature, eta_criterion, gauss_map_point, holomorphic_along, homogenize, inflection_divisor, is_flat,
    kw_curvature, legendre_transform, tangent_cone, web_discriminant, AffineVectorField, CubicWebEquation,
    CurvatureForm, EtaWebSpec, HomogeneousVectorField,
};
use webflat::{FieldScalar, MPoly, Var};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    /// Legendre transform of --vf as a cubic in x over (p, q)
    Legendre,
    /// Curvature of the implicit web --web F(x, y, p)
    Curvature,
    /// Curvature of the dual web of --vf
    DualCurvature,
    /// Whether the dual web of --vf is flat
    Flat,
    /// Inflection divisor of --vf (affine pair or homogeneous triple)
    Inflection,
    /// Discriminant of the Legendre transform of --vf, or of --web
    Discriminant,
    /// y A - x B for --vf
    TangentCone,
    /// Local invariants of --vf at --at x0,y0
    Sing,
    /// Holomorphy criterion along y = 0 for --eta "h1 ; h2 ; h3" and --order a
    Eta,
    /// Checks the classification family member at --nu
    Classify,
    /// Tangent line of --vf at --at x,y,z as a point of the dual plane
    Gauss,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "webflat", version, about = "Exact curvature of dual webs of plane foliations")]
pub struct Cli {
    /// Operation to run; omitted with --batch
    #[arg(value_enum, required_unless_present = "batch")]
    pub verb: Option<Verb>,
    /// Vector field "A ; B" (affine) or "A ; B ; C" (homogeneous)
    #[arg(long)]
    pub vf: Option<String>,
    /// Implicit web F(x, y, p) with slope p = dy/dx
    #[arg(long)]
    pub web: Option<String>,
    /// Point "x0,y0" or "x,y,z"
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<String>,
    /// Quadratic field "t^2=<u>*t+<v>"; enables t in expressions
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// File with one invocation per line, run in parallel
    #[arg(long, conflicts_with = "verb")]
    pub batch: Option<PathBuf>,
    /// Also test holomorphy of the curvature along this curve
    #[arg(long, allow_hyphen_values = true)]
    pub along: Option<String>,
    /// "h1 ; h2 ; h3" for the eta verb
    #[arg(long)]
    pub eta: Option<String>,
    /// Order a of the eta web
    #[arg(long)]
    pub order: Option<u32>,
    /// Parameter of the classification family
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn failure(code: i32, msg: String) -> Self {
        Outcome { stdout: String::new(), stderr: format!("{msg}\n"), code }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(ParseError),
    Domain(webflat::Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<webflat::Error> for Failure {
    fn from(e: webflat::Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        match self {
            Failure::Usage(msg) => Outcome::failure(EXIT_USAGE, format!("UsageError: {msg}")),
            Failure::Parse(e) => Outcome::failure(EXIT_USAGE, format!("{}: {e}", e.name())),
            Failure::Domain(e) => Outcome::failure(EXIT_DOMAIN, format!("{}: {e}", e.name())),
        }
    }
}

/// A rendered field of a result.
enum Item {
    Str(String),
    Bool(bool),
    Int(u64),
    List(Vec<String>),
}

struct Rendered {
    kind: &'static str,
    items: Vec<(&'static str, Item)>,
}

impl Rendered {
    fn new(kind: &'static str) -> Self {
        Rendered { kind, items: Vec::new() }
    }

    fn with(mut self, key: &'static str, item: Item) -> Self {
        self.items.push((key, item));
        self
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.items {
            let v = match v {
                Item::Str(s) => s.clone(),
                Item::Bool(b) => b.to_string(),
                Item::Int(n) => n.to_string(),
                Item::List(l) => l.join(", "),
            };
            out.push_str(&format!("{k}: {v}\n"));
        }
        out
    }

    fn json(&self, verb: Verb, field: Option<&Field>) -> String {
        let mut result = Map::new();
        result.insert("kind".into(), json!(self.kind));
        for (k, v) in &self.items {
            let v = match v {
                Item::Str(s) => json!(s),
                Item::Bool(b) => json!(b),
                Item::Int(n) => json!(n),
                Item::List(l) => json!(l),
            };
            result.insert((*k).into(), v);
        }
        let doc = json!({
            "command": verb_name(verb),
            "field": field.map(|f| f.to_string()),
            "result": Value::Object(result),
        });
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
    }
}

fn verb_name(v: Verb) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

/// Parses `args` (including the program name) and runs the invocation.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { stdout: text, stderr: String::new(), code: EXIT_OK }
                }
                _ => Outcome::failure(EXIT_USAGE, text.trim_end().to_string()),
            };
        }
    };
    match &cli.batch {
        Some(path) => run_batch(path),
        None => run_single(&cli),
    }
}

fn run_single(cli: &Cli) -> Outcome {
    let verb = cli.verb.expect("clap requires a verb without --batch");
    let field = match cli.field.as_deref().map(parse_field_spec).transpose() {
        Ok(f) => f,
        Err(e) => return Failure::Parse(e).into_outcome(),
    };
    match dispatch(verb, cli, field.as_ref()) {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Text => r.text(),
                Format::Json => r.json(verb, field.as_ref()),
            };
            Outcome { stdout, stderr: String::new(), code: EXIT_OK }
        }
        Err(f) => f.into_outcome(),
    }
}

fn run_batch(path: &PathBuf) -> Outcome {
    let content = match fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => return Outcome::failure(EXIT_USAGE, format!("UsageError: cannot read {}: {e}", path.display())),
    };
    let lines: Vec<&str> =
        content.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    let outcomes: Vec<Outcome> = lines
        .par_iter()
        .map(|line| match shlex::split(line) {
            Some(words) if words.iter().any(|w| w == "--batch") => {
                Outcome::failure(EXIT_USAGE, "UsageError: --batch cannot be nested".into())
            }
            Some(words) => run(std::iter::once("webflat".to_string()).chain(words)),
            None => Outcome::failure(EXIT_USAGE, format!("UsageError: unbalanced quotes in '{line}'")),
        })
        .collect();
    let mut all = Outcome { stdout: String::new(), stderr: String::new(), code: EXIT_OK };
    for o in outcomes {
        all.stdout.push_str(&o.stdout);
        all.stderr.push_str(&o.stderr);
        all.code = all.code.max(o.code);
    }
    all
}

fn required<'a>(value: &'a Option<String>, flag: &str, verb: Verb) -> Result<&'a str, Failure> {
    value.as_deref().ok_or_else(|| Failure::Usage(format!("{} needs {flag}", verb_name(verb))))
}

fn affine_field(src: &str, field: Option<&Field>) -> Result<AffineVectorField, Failure> {
    match parse_components(src, field)?.as_slice() {
        [a, b] => Ok(AffineVectorField::new(a.clone(), b.clone())?),
        other => Err(Failure::Usage(format!("--vf needs \"A ; B\", got {} components", other.len()))),
    }
}

fn homogeneous_field(src: &str, field: Option<&Field>) -> Result<HomogeneousVectorField, Failure> {
    match parse_components(src, field)?.as_slice() {
        [a, b, c] => Ok(HomogeneousVectorField::new(a.clone(), b.clone(), c.clone())?),
        [a, b] => {
            let vf = AffineVectorField::new(a.clone(), b.clone())?;
            Ok(homogenize(&vf, vf.degree())?)
        }
        other => Err(Failure::Usage(format!("--vf needs two or three components, got {}", other.len()))),
    }
}

fn point(src: &str, field: Option<&Field>) -> Result<Vec<FieldScalar>, Failure> {
    src.split(',').map(|s| parse_scalar(s, field).map_err(Failure::from)).collect()
}

fn implicit_web(src: &str, field: Option<&Field>) -> Result<CubicWebEquation, Failure> {
    let f = parse_poly(src, field)?;
    Ok(CubicWebEquation::from_implicit(&f, Var::P, (Var::X, Var::Y))?)
}

fn poly_str(p: &MPoly) -> Item {
    Item::Str(p.to_string())
}

fn curvature_result(k: &CurvatureForm, along: Option<&str>, field: Option<&Field>) -> Result<Rendered, Failure> {
    let mut r = Rendered::new("ratfn")
        .with("numerator", poly_str(k.coeff().numerator()))
        .with("denominator", poly_str(k.coeff().denominator()))
        .with("chart", Item::Str(k.chart_name()));
    if let Some(g) = along {
        let g = parse_poly(g, field)?;
        r = r.with("holomorphic", Item::Bool(holomorphic_along(k, &g)?));
    }
    Ok(r)
}

fn dispatch(verb: Verb, cli: &Cli, field: Option<&Field>) -> Result<Rendered, Failure> {
    let vf = || required(&cli.vf, "--vf", verb);
    Ok(match verb {
        Verb::Legendre => {
            let w = legendre_transform(&affine_field(vf()?, field)?)?;
            let [a0, a1, a2, a3] = w.coefficients();
            Rendered::new("poly")
                .with("value", poly_str(&w.implicit()))
                .with("slope", Item::Str(w.slope_var().to_string()))
                .with("chart", Item::Str("pq".into()))
                .with("a0", poly_str(a0))
                .with("a1", poly_str(a1))
                .with("a2", poly_str(a2))
                .with("a3", poly_str(a3))
        }
        Verb::Curvature => {
            let w = implicit_web(required(&cli.web, "--web", verb)?, field)?;
            curvature_result(&kw_curvature(&w)?, cli.along.as_deref(), field)?
        }
        Verb::DualCurvature => {
            let k = dual_curvature(&affine_field(vf()?, field)?)?;
            curvature_result(&k, cli.along.as_deref(), field)?
        }
        Verb::Flat => Rendered::new("bool").with("flat", Item::Bool(is_flat(&affine_field(vf()?, field)?)?)),
        Verb::Inflection => {
            let i = inflection_divisor(&homogeneous_field(vf()?, field)?);
            let deg = i.total_degree().map_or(Item::Str("none".into()), |d| Item::Int(d.into()));
            Rendered::new("poly").with("value", poly_str(&i)).with("degree", deg)
        }
        Verb::Discriminant => {
            let (w, chart) = match (&cli.vf, &cli.web) {
                (Some(v), None) => (legendre_transform(&affine_field(v, field)?)?, "pq"),
                (None, Some(w)) => (implicit_web(w, field)?, "xy"),
                _ => return Err(Failure::Usage("discriminant needs exactly one of --vf and --web".into())),
            };
            Rendered::new("poly").with("value", poly_str(&web_discriminant(&w))).with("chart", Item::Str(chart.into()))
        }
        Verb::TangentCone => Rendered::new("poly").with("value", poly_str(&tangent_cone(&affine_field(vf()?, field)?))),
        Verb::Sing => {
            let f = affine_field(vf()?, field)?;
            let at = point(required(&cli.at, "--at", verb)?, field)?;
            let [x0, y0] = <[FieldScalar; 2]>::try_from(at)
                .map_err(|_| Failure::Usage("sing needs --at x0,y0".into()))?;
            let rep = classify_singularity(&f, &[x0, y0])?;
            Rendered::new("report")
                .with("nu", Item::Int(rep.nu.into()))
                .with("tau", Item::Str(rep.tau.to_string()))
                .with("radial", Item::Bool(rep.radial))
                .with("special", Item::Bool(rep.special))
        }
        Verb::Eta => {
            let hs = parse_components(required(&cli.eta, "--eta", verb)?, field)?;
            let order = cli.order.ok_or_else(|| Failure::Usage("eta needs --order".into()))?;
            let [h1, h2, h3] = <[MPoly; 3]>::try_from(hs)
                .map_err(|_| Failure::Usage("--eta needs \"h1 ; h2 ; h3\"".into()))?;
            let spec = EtaWebSpec::new(h1, h2, h3, order)?;
            Rendered::new("bool").with("eta", Item::Bool(eta_criterion(&spec)?))
        }
        Verb::Classify => {
            let nu = parse_scalar(required(&cli.nu, "--nu", verb)?, field)?;
            let check = check_classification(&nu)?;
            Rendered::new("report")
                .with("classified", Item::Bool(check.holds()))
                .with("flat", Item::Bool(check.flat))
                .with("inflection_reduced", Item::Bool(check.inflection_reduced))
        }
        Verb::Gauss => {
            let h = homogeneous_field(vf()?, field)?;
            let mut at = point(required(&cli.at, "--at", verb)?, field)?;
            if at.len() == 2 {
                at.push(FieldScalar::int(1));
            }
            let pt = <[FieldScalar; 3]>::try_from(at)
                .map_err(|_| Failure::Usage("gauss needs --at x,y or x,y,z".into()))?;
            let line = gauss_map_point(&h, &pt)?;
            Rendered::new("report").with("line", Item::List(line.iter().map(|c| c.to_string()).collect()))
        }
    })
}
