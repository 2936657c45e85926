//! One function per subcommand, each a thin wrapper over a library
//! operation, producing a JSON document and a text rendering.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use ratmap_core::dynatomic::{formal_per_form, nu, per_form};
use ratmap_core::git::{boundary_inverse, boundary_normal_form, classify, moduli_s_coordinate, Verdict};
use ratmap_core::milnor2::{from_moduli, good_reduction_rep, rho_sigma_explicit, sigma_pair};
use ratmap_core::ratmap::MoebiusMatrix;
use ratmap_core::scalar::{format_rational, parse_rational};
use ratmap_core::spectrum::{sigma_spectrum, Convention};
use ratmap_core::{Error, Rational};

use crate::json::{
    form_json, point_json, poly_json, read_point, ExtMapJson, ExtValue, MapJson, ModuliJson, SpectrumJson,
    StabilityJson,
};
use crate::suites::{report_json, report_text, run_suite, SuiteReport, SUITES};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// Malformed input or failed validation.
    pub const INPUT: i32 = 1;
    /// A well-formed input outside the operation's domain.
    pub const DOMAIN: i32 = 2;
    /// A verification suite found a counterexample.
    pub const VERIFICATION: i32 = 3;
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        exit::INPUT
    } else {
        exit::DOMAIN
    }
}

/// A command's result: a JSON document, its text rendering and exit code.
#[derive(Debug)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(doc: impl Serialize, text: String) -> Self {
        Output { json: serde_json::to_value(doc).expect("serializable"), text, code: exit::OK }
    }
}

pub type CommandResult = std::result::Result<Output, Error>;

fn q(x: &Rational) -> String {
    format_rational(x)
}

fn parse_q(s: &str) -> Result<Rational, Error> {
    parse_rational(s.trim())
}

/// `c₀ + c₁t + …` with signs folded in, highest power first.
fn poly_text(cs: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in cs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        let coef = if i > 0 && mag == "1" { String::new() } else { mag.to_string() };
        let var = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        let sep = if !coef.is_empty() && !var.is_empty() { "·" } else { "" };
        let term = format!("{coef}{sep}{var}");
        if out.is_empty() {
            out = if neg { format!("-{term}") } else { term };
        } else {
            out += if neg { " - " } else { " + " };
            out += &term;
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn ext_text(v: &ExtValue) -> String {
    match v {
        ExtValue::Rational(s) => s.clone(),
        ExtValue::Algebraic(cs) => format!("({})", poly_text(cs)),
    }
}

fn modulus_text(m: &Option<Vec<String>>) -> String {
    m.as_ref().map_or(String::new(), |cs| format!("\nwhere {} = 0", poly_text(cs)))
}

pub fn invariants(map: &str, n: u32, convention: Convention) -> CommandResult {
    let phi = read_point(map)?;
    let phi = ratmap_core::ratmap::RationalMap::new(phi)?;
    let spectrum = sigma_spectrum(&phi, n, convention)?;
    let doc = SpectrumJson::from_spectrum(&spectrum);
    let text = format!("sigma^({n}) [{}]: {}", doc.convention, doc.sigma.join(", "));
    Ok(Output::ok(doc, text))
}

pub fn conjugate(map: &str, matrix: &str) -> CommandResult {
    let phi = read_point(map)?;
    let e: Vec<Rational> = matrix.split(',').map(parse_q).collect::<Result<_, _>>()?;
    if e.len() != 4 {
        return Err(Error::Invalid("the matrix is \"alpha,beta,gamma,delta\"".into()));
    }
    let f = MoebiusMatrix::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone())
        .map_err(|_| Error::Invalid("the matrix must be invertible".into()))?;
    let psi = phi.conjugate(&f)?;
    let doc = MapJson::from_point(&psi);
    Ok(Output::ok(&doc, format!("{psi}")))
}

pub fn iterate(map: &str, n: u32) -> CommandResult {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let phi = ratmap_core::ratmap::RationalMap::new(read_point(map)?)?;
    let it = phi.iterate(n)?;
    Ok(Output::ok(MapJson::from_map(&it), format!("{it}")))
}

#[derive(Serialize)]
struct DynatomicJson {
    n: u32,
    formal: bool,
    degree: usize,
    expected_degree: usize,
    squarefree: bool,
    form: Vec<String>,
}

pub fn dynatomic(map: &str, n: u32, formal: bool) -> CommandResult {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let phi = ratmap_core::ratmap::RationalMap::new(read_point(map)?)?;
    let f = if formal { formal_per_form(&phi, n)? } else { per_form(&phi, n)? };
    let doc = DynatomicJson {
        n,
        formal,
        degree: f.form.degree(),
        expected_degree: f.expected_degree,
        squarefree: f.squarefree,
        form: form_json(&f.form),
    };
    let text = format!(
        "{}_{n}: degree {} (expected {}), {}squarefree\n{}",
        if formal { "Phi*" } else { "Phi" },
        doc.degree,
        doc.expected_degree,
        if doc.squarefree { "" } else { "not " },
        f.form
    );
    Ok(Output::ok(doc, text))
}

/// Parse `"a..b"` or `"a"` into an inclusive range.
pub fn parse_range(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::Invalid(format!("{s:?} is not a range like 2..8"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => {
            (a.trim().parse().map_err(|_| bad())?, b.trim().trim_start_matches('=').parse().map_err(|_| bad())?)
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn nu_table(d: &str, n: &str) -> CommandResult {
    let (d0, d1) = parse_range(d)?;
    let (n0, n1) = parse_range(n)?;
    if d0 < 2 || n0 < 1 {
        return Err(Error::Invalid("need d ≥ 2 and n ≥ 1".into()));
    }
    let ns: Vec<u64> = (n0..=n1).collect();
    let mut rows = Vec::new();
    let mut text = format!("{:>4}", "d\\n");
    for n in &ns {
        text += &format!(" {n:>10}");
    }
    for dd in d0..=d1 {
        let row: Vec<String> = ns.iter().map(|&n| nu(dd, n as u32).to_string()).collect();
        text += &format!("\n{dd:>4}");
        for v in &row {
            text += &format!(" {v:>10}");
        }
        rows.push(json!({ "d": dd, "nu": row }));
    }
    Ok(Output::ok(json!({ "n": ns, "rows": rows }), text))
}

pub fn stability(point: &str, strict: bool) -> CommandResult {
    let p = read_point(point)?;
    let class = classify(&p)?;
    let doc = StabilityJson::from_class(&class);
    let mut text = doc.verdict.clone();
    if let Some(w) = &doc.witness {
        text += &format!(
            "\nwitness ({} test): P = [{} : {}], Q = [{} : {}], mult_P(H_Q) = {}, mult_P(H_P) = {}{}",
            w.test,
            ext_text(&w.p[0]),
            ext_text(&w.p[1]),
            ext_text(&w.q[0]),
            ext_text(&w.q[1]),
            w.mult_h_q,
            w.mult_h_p,
            modulus_text(&w.modulus)
        );
    }
    let mut out = Output::ok(doc, text);
    if strict && class.verdict != Verdict::Stable {
        out.code = exit::DOMAIN;
    }
    Ok(out)
}

pub fn milnor(map: &str) -> CommandResult {
    let phi = ratmap_core::ratmap::RationalMap::new(read_point(map)?)?;
    let (s1, s2) = sigma_pair(&phi)?;
    let (r, r1, r2) = rho_sigma_explicit(phi.point())?;
    let doc = json!({
        "s1": q(&s1),
        "s2": q(&s2),
        "rho": q(&r),
        "rho_sigma1": q(&r1),
        "rho_sigma2": q(&r2),
    });
    Ok(Output::ok(doc, format!("(sigma1, sigma2) = ({}, {})", q(&s1), q(&s2))))
}

fn ext_map_text(doc: &ExtMapJson) -> String {
    let a: Vec<String> = doc.a.iter().map(ext_text).collect();
    let b: Vec<String> = doc.b.iter().map(ext_text).collect();
    format!("a = [{}]\nb = [{}]{}", a.join(", "), b.join(", "), modulus_text(&doc.modulus))
}

pub fn from_moduli_cmd(s1: &str, s2: &str) -> CommandResult {
    let phi = from_moduli(&parse_q(s1)?, &parse_q(s2)?)?;
    let doc = ExtMapJson::from_map(&phi);
    let text = ext_map_text(&doc);
    Ok(Output::ok(doc, text))
}

pub fn good_reduction(s1: &str, s2: &str, p: u64) -> CommandResult {
    let g = good_reduction_rep(&parse_q(s1)?, &parse_q(s2)?, p)?;
    let map = ExtMapJson::from_map(&g.map);
    let text = format!("{}\nform: {}\nnorm of resultant: {}", ext_map_text(&map), g.form, q(&g.resultant_norm));
    let doc = json!({ "map": map, "form": g.form, "resultant_norm": q(&g.resultant_norm) });
    Ok(Output::ok(doc, text))
}

pub fn boundary(point: &str) -> CommandResult {
    let p = read_point(point)?;
    let bf = boundary_normal_form(&p)?;
    let coord = ModuliJson::from_point(&bf.coordinate()?);
    let modulus = bf.modulus().map(|m| poly_json(&m));
    let (a, b, beta) = (ExtValue::from_elem(&bf.a), ExtValue::from_elem(&bf.b), ExtValue::from_elem(&bf.beta));
    let text = format!(
        "A = {}, B = {} (beta = {})\ncoordinate [{} : {} : {}]{}",
        ext_text(&a),
        ext_text(&b),
        ext_text(&beta),
        coord.coordinates[0],
        coord.coordinates[1],
        coord.coordinates[2],
        modulus_text(&modulus)
    );
    let mut doc = json!({ "A": a, "B": b, "beta": beta, "coordinate": coord });
    if let Some(m) = modulus {
        doc["modulus"] = json!(m);
    }
    Ok(Output::ok(doc, text))
}

pub fn boundary_inverse_cmd(u: &str, v: &str) -> CommandResult {
    let pair = boundary_inverse(&parse_q(u)?, &parse_q(v)?)?;
    let modulus =
        pair.iter().find_map(|p| p.coords().0.field().or(p.coords().1.field()).map(|f| poly_json(f.modulus())));
    let pts: Vec<[ExtValue; 2]> = pair.iter().map(point_json).collect();
    let text = format!(
        "{{[{} : {}], [{} : {}]}}{}",
        ext_text(&pts[0][0]),
        ext_text(&pts[0][1]),
        ext_text(&pts[1][0]),
        ext_text(&pts[1][1]),
        modulus_text(&modulus)
    );
    let mut doc = json!({ "pair": pts });
    if let Some(m) = modulus {
        doc["modulus"] = json!(m);
    }
    Ok(Output::ok(doc, text))
}

/// The moduli coordinate of a possibly degenerate quadratic point.
pub fn moduli_coordinate(point: &str) -> CommandResult {
    let p = read_point(point)?;
    let m = ModuliJson::from_point(&moduli_s_coordinate(&p)?);
    let text = format!("[{} : {} : {}]", m.coordinates[0], m.coordinates[1], m.coordinates[2]);
    Ok(Output::ok(m, text))
}

/// Run one suite or all of them (`"all"`).
pub fn verify(suite: &str, seed: u64, count: Option<usize>, timing: bool) -> CommandResult {
    let names: Vec<&str> = if suite == "all" { SUITES.iter().map(|s| s.name).collect() } else { vec![suite] };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for name in names {
        let start = Instant::now();
        let mut r = run_suite(name, seed, count)?;
        if timing {
            r.timing_ms = Some(start.elapsed().as_millis() as u64);
        }
        reports.push(r);
    }
    let passed = reports.iter().all(|r| r.passed);
    let text = reports.iter().map(report_text).collect::<Vec<_>>().join("\n");
    let doc: Value = if reports.len() == 1 {
        serde_json::from_str(&report_json(&reports[0])).expect("valid JSON")
    } else {
        serde_json::to_value(&reports).expect("serializable")
    };
    Ok(Output { json: doc, text, code: if passed { exit::OK } else { exit::VERIFICATION } })
}
