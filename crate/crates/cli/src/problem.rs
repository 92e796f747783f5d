//! Problem files: a JSON object with keys `ambient`, `subalgebra`,
//! `crosses` and `options`.

use exactlin::{DenseMatrix, GaussRational as G};
use realforms::RealFormSpec;
use rootsys::Family;
use serde_json::{Map, Value};

use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum Ambient {
    RealForm(RealFormSpec),
    RootSystem { family: Family, rank: usize },
    Matrices { n: usize, basis: Vec<DenseMatrix> },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Toral {
    None,
    Cartan,
    Span(Vec<Vec<G>>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum SubalgebraSource {
    Roots { roots: Vec<String>, toral: Toral },
    Pattern(Vec<String>),
    Matrices(Vec<DenseMatrix>),
    MinimalOrbit,
}

/// A parabolic named by crosses, by its root set, by a matrix pattern,
/// or as the regularization of the subalgebra.
#[derive(Clone, Debug, PartialEq)]
pub enum Target {
    Crosses(Vec<usize>),
    Roots(Vec<String>),
    Pattern(Vec<String>),
    Regularization,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Options {
    pub seed: Option<u64>,
    pub rank_cap: Option<usize>,
    pub format: Option<Format>,
    pub target: Option<Target>,
    pub containing: Option<Target>,
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub ambient: Ambient,
    pub subalgebra: SubalgebraSource,
    pub crosses: Option<Vec<usize>>,
    pub options: Options,
    /// The input document, echoed in reports.
    pub source: Value,
}

const TOP_KEYS: [&str; 4] = ["ambient", "crosses", "options", "subalgebra"];
const OPTION_KEYS: [&str; 6] = ["containing", "format", "rank_cap", "seed", "target", "timings"];

struct Errors(Vec<String>);

impl Errors {
    fn push(&mut self, path: &str, msg: impl AsRef<str>) {
        self.0.push(format!("{path}: {}", msg.as_ref()));
    }
}

pub fn parse_problem(text: &str) -> Result<Problem, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Schema(vec![format!("/: invalid JSON: {e}")]))?;
    let mut errs = Errors(Vec::new());
    let Some(top) = doc.as_object() else {
        return Err(CliError::Schema(vec!["/: expected an object".into()]));
    };
    for k in top.keys() {
        if !TOP_KEYS.contains(&k.as_str()) {
            errs.push(&format!("/{k}"), "unknown key");
        }
    }
    let ambient = match top.get("ambient") {
        Some(v) => ambient(v, &mut errs),
        None => {
            errs.push("/ambient", "missing");
            None
        }
    };
    let subalgebra = match top.get("subalgebra") {
        Some(v) => subalgebra(v, &mut errs),
        None => {
            errs.push("/subalgebra", "missing");
            None
        }
    };
    let crosses = top.get("crosses").and_then(|v| usize_list(v, "/crosses", &mut errs));
    let options = match top.get("options") {
        Some(v) => options(v, &mut errs),
        None => Some(Options::default()),
    };
    if let (Some(a), Some(s)) = (&ambient, &subalgebra) {
        let real_form = matches!(a, Ambient::RealForm(_));
        match s {
            SubalgebraSource::Pattern(_) if !real_form => {
                errs.push("/subalgebra/pattern", "requires a real_form ambient")
            }
            SubalgebraSource::MinimalOrbit if !real_form => {
                errs.push("/subalgebra", "minimal-orbit requires a real_form ambient")
            }
            SubalgebraSource::MinimalOrbit if crosses.is_none() => errs.push("/crosses", "required by minimal-orbit"),
            SubalgebraSource::Roots { .. } if matches!(a, Ambient::Matrices { .. }) => {
                errs.push("/subalgebra/roots", "requires a root_system or real_form ambient")
            }
            SubalgebraSource::Matrices(_) if matches!(a, Ambient::RootSystem { .. }) => {
                errs.push("/subalgebra/matrices", "requires a matrix ambient")
            }
            _ => {}
        }
    }
    match (ambient, subalgebra, options, errs.0.is_empty()) {
        (Some(ambient), Some(subalgebra), Some(options), true) => {
            Ok(Problem { ambient, subalgebra, crosses, options, source: doc })
        }
        _ => Err(CliError::Schema(errs.0)),
    }
}

/// Exactly one key of `obj` among `allowed`.
fn single_key<'a>(
    obj: &'a Map<String, Value>,
    path: &str,
    allowed: &[&str],
    errs: &mut Errors,
) -> Option<(&'a str, &'a Value)> {
    let present: Vec<&String> = obj.keys().filter(|k| allowed.contains(&k.as_str())).collect();
    for k in obj.keys().filter(|k| !allowed.contains(&k.as_str())) {
        errs.push(&format!("{path}/{k}"), "unknown key");
    }
    match present.as_slice() {
        [k] => Some((k.as_str(), &obj[k.as_str()])),
        [] => {
            errs.push(path, format!("expected one of {allowed:?}"));
            None
        }
        many => {
            let names: Vec<String> = many.iter().map(|k| format!("{path}/{k}")).collect();
            errs.push(path, format!("exactly one source allowed, found {}", names.join(" and ")));
            None
        }
    }
}

fn ambient(v: &Value, errs: &mut Errors) -> Option<Ambient> {
    let Some(obj) = v.as_object() else {
        errs.push("/ambient", "expected an object");
        return None;
    };
    let (key, val) = single_key(obj, "/ambient", &["matrices", "real_form", "root_system"], errs)?;
    let path = format!("/ambient/{key}");
    match key {
        "real_form" => match val.as_str().map(str::parse::<RealFormSpec>) {
            Some(Ok(spec)) => Some(Ambient::RealForm(spec)),
            Some(Err(e)) => {
                errs.push(&path, e.to_string());
                None
            }
            None => {
                errs.push(&path, "expected a string like \"su:2,3\"");
                None
            }
        },
        "root_system" => {
            let Some(s) = val.as_str() else {
                errs.push(&path, "expected a string like \"B3\"");
                return None;
            };
            let family = match s.chars().next() {
                Some('A') => Family::A,
                Some('B') => Family::B,
                Some('C') => Family::C,
                Some('D') => Family::D,
                _ => {
                    errs.push(&path, format!("unknown family in {s:?}"));
                    return None;
                }
            };
            match s[1..].parse::<usize>() {
                Ok(rank) => Some(Ambient::RootSystem { family, rank }),
                Err(_) => {
                    errs.push(&path, format!("bad rank in {s:?}"));
                    None
                }
            }
        }
        _ => {
            let basis = matrix_list(val, &path, errs)?;
            let Some(n) = basis.first().map(DenseMatrix::rows) else {
                errs.push(&path, "empty basis");
                return None;
            };
            Some(Ambient::Matrices { n, basis })
        }
    }
}

fn subalgebra(v: &Value, errs: &mut Errors) -> Option<SubalgebraSource> {
    if v.as_str() == Some("minimal-orbit") {
        return Some(SubalgebraSource::MinimalOrbit);
    }
    let Some(obj) = v.as_object() else {
        errs.push("/subalgebra", "expected an object or \"minimal-orbit\"");
        return None;
    };
    let allowed = ["matrices", "pattern", "roots", "toral"];
    let sources: Vec<&str> = ["matrices", "pattern", "roots"].into_iter().filter(|k| obj.contains_key(*k)).collect();
    for k in obj.keys().filter(|k| !allowed.contains(&k.as_str())) {
        errs.push(&format!("/subalgebra/{k}"), "unknown key");
    }
    if sources.len() != 1 {
        let names: Vec<String> = sources.iter().map(|k| format!("/subalgebra/{k}")).collect();
        errs.push(
            "/subalgebra",
            if names.is_empty() {
                "expected one of roots, pattern, matrices".to_string()
            } else {
                format!("exactly one source allowed, found {}", names.join(" and "))
            },
        );
        return None;
    }
    if obj.contains_key("toral") && sources[0] != "roots" {
        errs.push("/subalgebra/toral", "only allowed with roots");
    }
    let path = format!("/subalgebra/{}", sources[0]);
    match sources[0] {
        "roots" => {
            let roots = string_list(&obj["roots"], &path, errs)?;
            let toral = match obj.get("toral") {
                None => Toral::None,
                Some(Value::String(s)) if s == "cartan" => Toral::Cartan,
                Some(Value::String(s)) if s == "none" => Toral::None,
                Some(Value::Array(rows)) => {
                    let mut vecs = Vec::new();
                    for (i, r) in rows.iter().enumerate() {
                        vecs.push(row(r, &format!("/subalgebra/toral/{i}"), errs)?);
                    }
                    Toral::Span(vecs)
                }
                Some(_) => {
                    errs.push("/subalgebra/toral", "expected \"cartan\", \"none\" or a list of vectors");
                    return None;
                }
            };
            Some(SubalgebraSource::Roots { roots, toral })
        }
        "pattern" => string_list(&obj["pattern"], &path, errs).map(SubalgebraSource::Pattern),
        _ => matrix_list(&obj["matrices"], &path, errs).map(SubalgebraSource::Matrices),
    }
}

fn target(v: &Value, path: &str, errs: &mut Errors) -> Option<Target> {
    if v.as_str() == Some("regularization") {
        return Some(Target::Regularization);
    }
    let Some(obj) = v.as_object() else {
        errs.push(path, "expected an object or \"regularization\"");
        return None;
    };
    let (key, val) = single_key(obj, path, &["crosses", "pattern", "roots"], errs)?;
    let p = format!("{path}/{key}");
    match key {
        "crosses" => usize_list(val, &p, errs).map(Target::Crosses),
        "pattern" => string_list(val, &p, errs).map(Target::Pattern),
        _ => string_list(val, &p, errs).map(Target::Roots),
    }
}

fn options(v: &Value, errs: &mut Errors) -> Option<Options> {
    let Some(obj) = v.as_object() else {
        errs.push("/options", "expected an object");
        return None;
    };
    let mut out = Options::default();
    let before = errs.0.len();
    for (k, val) in obj {
        let path = format!("/options/{k}");
        match k.as_str() {
            "seed" => match val.as_u64() {
                Some(s) => out.seed = Some(s),
                None => errs.push(&path, "expected a non-negative integer"),
            },
            "rank_cap" => match val.as_u64() {
                Some(s) => out.rank_cap = Some(s as usize),
                None => errs.push(&path, "expected a non-negative integer"),
            },
            "format" => match val.as_str() {
                Some("json") => out.format = Some(Format::Json),
                Some("text") => out.format = Some(Format::Text),
                _ => errs.push(&path, "expected \"json\" or \"text\""),
            },
            "timings" => match val.as_bool() {
                Some(b) => out.timings = b,
                None => errs.push(&path, "expected a boolean"),
            },
            "target" => out.target = target(val, &path, errs),
            "containing" => out.containing = target(val, &path, errs),
            _ => errs.push(&path, format!("unknown key; expected one of {OPTION_KEYS:?}")),
        }
    }
    (errs.0.len() == before).then_some(out)
}

fn string_list(v: &Value, path: &str, errs: &mut Errors) -> Option<Vec<String>> {
    let items = v.as_array().and_then(|a| a.iter().map(|x| x.as_str().map(str::to_string)).collect::<Option<Vec<_>>>());
    if items.is_none() {
        errs.push(path, "expected a list of strings");
    }
    items
}

fn usize_list(v: &Value, path: &str, errs: &mut Errors) -> Option<Vec<usize>> {
    let items = v.as_array().and_then(|a| a.iter().map(|x| x.as_u64().map(|n| n as usize)).collect::<Option<Vec<_>>>());
    if items.is_none() {
        errs.push(path, "expected a list of positive integers");
    }
    items
}

fn entry(v: &Value) -> Option<G> {
    match v {
        Value::String(s) => s.parse().ok(),
        Value::Number(n) => n.as_i64().map(G::from_int),
        _ => None,
    }
}

/// A row: a whitespace-separated string or a list of entries.
fn row(v: &Value, path: &str, errs: &mut Errors) -> Option<Vec<G>> {
    let parsed = match v {
        Value::String(s) => s.split_whitespace().map(|t| t.parse().ok()).collect::<Option<Vec<G>>>(),
        Value::Array(a) => a.iter().map(entry).collect::<Option<Vec<G>>>(),
        _ => None,
    };
    if parsed.is_none() {
        errs.push(path, "expected a row of Gaussian rationals such as \"1 -1/2 i 2-3i\"");
    }
    parsed
}

fn matrix(v: &Value, path: &str, errs: &mut Errors) -> Option<DenseMatrix> {
    let Some(rows) = v.as_array() else {
        errs.push(path, "expected a list of rows");
        return None;
    };
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        out.push(row(r, &format!("{path}/{i}"), errs)?);
    }
    let n = out.len();
    if n == 0 || out.iter().any(|r| r.len() != n) {
        errs.push(path, "expected a square matrix");
        return None;
    }
    DenseMatrix::from_rows(out).ok()
}

fn matrix_list(v: &Value, path: &str, errs: &mut Errors) -> Option<Vec<DenseMatrix>> {
    let Some(items) = v.as_array() else {
        errs.push(path, "expected a list of matrices");
        return None;
    };
    let mut out = Vec::new();
    for (i, m) in items.iter().enumerate() {
        out.push(matrix(m, &format!("{path}/{i}"), errs)?);
    }
    if out.windows(2).any(|w| w[0].rows() != w[1].rows()) {
        errs.push(path, "matrices of different sizes");
        return None;
    }
    Some(out)
}
