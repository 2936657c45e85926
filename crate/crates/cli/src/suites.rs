//! Seeded property suites, one per checked identity family.
//!
//! Sample `i` of a suite draws from stream `i` of the suite seed (see
//! [`Sampler`]), so samples can run on any number of threads and the report
//! is merged by sample index: the same seed and count always produce the
//! same report.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use ratmap_core::dynatomic::{divisors, formal_per_form_from_iterates, nu, per_form_of_iterate};
use ratmap_core::git::{
    boundary_inverse, boundary_normal_form, classify, find_witness, moduli_s_coordinate, phi_ab, Strictness, Verdict,
};
use ratmap_core::milnor2::{
    coefficient_field, eval_invariant_polynomial, fit_invariant_polynomial, from_moduli, good_reduction_rep,
    has_integer_coefficients, monomial_count, normal_form_pair, rho_sigma_explicit, sigma_pair, sigma_pair_rational,
    ModuliPoint,
};
use ratmap_core::random::Sampler;
use ratmap_core::ratmap::{RationalMap, RationalMapPoint};
use ratmap_core::scalar::{format_rational, valuation};
use ratmap_core::spectrum::{
    find_chart, fixed_point_identity_check, sigma_spectrum, sigma_spectrum_in_chart, Convention,
};
use ratmap_core::{Error, ExtElem, Rational, Result};

use crate::json::MapJson;
use crate::numeric::{float_oracle, TOLERANCE};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Counterexamples kept per property.
const MAX_COUNTEREXAMPLES: usize = 5;

/// Result of one property over all samples.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub skipped: usize,
    pub counterexamples: Vec<Value>,
}

/// Result of a suite run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub count: usize,
    pub passed: bool,
    pub properties: Vec<PropertyReport>,
    pub notes: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

/// Outcome of one property on one sample.
#[derive(Clone, Debug)]
enum Outcome {
    Pass,
    Fail(Value),
    Skip,
}

fn check(ok: bool, payload: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(payload())
    }
}

fn from_result(r: Result<bool>, payload: impl Fn() -> Value) -> Outcome {
    match r {
        Ok(ok) => check(ok, payload),
        Err(e) => Outcome::Fail(json!({ "error": e.to_string(), "input": payload() })),
    }
}

fn map_json(phi: &RationalMap<Rational>) -> Value {
    serde_json::to_value(MapJson::from_map(phi)).expect("serializable")
}

fn point_json(p: &RationalMapPoint<Rational>) -> Value {
    serde_json::to_value(MapJson::from_point(p)).expect("serializable")
}

fn q(x: &Rational) -> String {
    format_rational(x)
}

/// Accumulates per-property outcomes in sample order.
struct Properties {
    reports: Vec<PropertyReport>,
}

impl Properties {
    fn new(names: &[&str]) -> Self {
        Properties {
            reports: names
                .iter()
                .map(|n| PropertyReport {
                    name: n.to_string(),
                    passed: true,
                    checked: 0,
                    skipped: 0,
                    counterexamples: Vec::new(),
                })
                .collect(),
        }
    }

    fn record(&mut self, k: usize, o: Outcome) {
        let r = &mut self.reports[k];
        match o {
            Outcome::Pass => r.checked += 1,
            Outcome::Skip => r.skipped += 1,
            Outcome::Fail(v) => {
                r.checked += 1;
                r.passed = false;
                if r.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    r.counterexamples.push(v);
                }
            }
        }
    }

    fn by_name(&mut self, name: &str, o: Outcome) {
        let k = self.reports.iter().position(|r| r.name == name).expect("declared property");
        self.record(k, o);
    }

    /// Run `f` on samples `range`, each with its own stream, and record the
    /// outcomes (aligned with the declared names) in sample order. Extra
    /// per-sample data is returned in order too.
    fn run<T: Send>(
        &mut self,
        seed: u64,
        range: std::ops::Range<u64>,
        f: impl Fn(&mut Sampler, u64) -> (Vec<(&'static str, Outcome)>, T) + Sync,
    ) -> Vec<T> {
        let results: Vec<_> = range.into_par_iter().map(|i| f(&mut Sampler::new(seed, i), i)).collect();
        let mut extras = Vec::with_capacity(results.len());
        for (outcomes, extra) in results {
            for (name, o) in outcomes {
                self.by_name(name, o);
            }
            extras.push(extra);
        }
        extras
    }

    fn finish(self, suite: &str, seed: u64, count: usize, notes: BTreeMap<String, String>) -> SuiteReport {
        let mut properties = self.reports;
        for p in &mut properties {
            // A property that never ran has not been demonstrated.
            p.passed &= p.checked > 0;
        }
        SuiteReport {
            suite: suite.to_string(),
            seed,
            count,
            passed: properties.iter().all(|p| p.passed),
            properties,
            notes,
            timing_ms: None,
        }
    }
}

/// A named suite with its default sample count.
pub struct Suite {
    pub name: &'static str,
    pub criterion: Option<u32>,
    pub default_count: usize,
    pub summary: &'static str,
    run: fn(u64, usize) -> SuiteReport,
}

/// All suites, in criterion order.
pub const SUITES: &[Suite] = &[
    Suite {
        name: "nu-table",
        criterion: Some(1),
        default_count: 56,
        summary: "νₙ table for d ∈ 2..8, n ∈ 1..8 and Σ_{m|n} ν_m = dⁿ + 1",
        run: nu_table,
    },
    Suite {
        name: "dynatomic",
        criterion: Some(2),
        default_count: 25,
        summary: "Φₙ* by exact division, of degree νₙ in a good chart; Φ₁ | Φₙ",
        run: dynatomic,
    },
    Suite {
        name: "fixed-point",
        criterion: Some(3),
        default_count: 200,
        summary: "σ₃ = σ₁ − 2 in degree 2; p′(1) = p(1) for d ∈ 2..5",
        run: fixed_point,
    },
    Suite {
        name: "closed-forms",
        criterion: Some(4),
        default_count: 200,
        summary: "closed-form (ρ, ρσ₁, ρσ₂) against the spectrum pipeline",
        run: closed_forms,
    },
    Suite {
        name: "conjugation",
        criterion: Some(5),
        default_count: 50,
        summary: "all spectrum conventions invariant under conjugation, n ≤ 3",
        run: conjugation,
    },
    Suite {
        name: "milnor",
        criterion: Some(6),
        default_count: 100,
        summary: "period-2 and period-3 relations in (σ₁, σ₂)",
        run: milnor,
    },
    Suite {
        name: "normal-form",
        criterion: Some(7),
        default_count: 100,
        summary: "(z² + μ₁z)/(μ₂z + 1): resultant and multipliers",
        run: normal_form,
    },
    Suite {
        name: "round-trip",
        criterion: Some(8),
        default_count: 100,
        summary: "sigma_pair(from_moduli(s₁, s₂)) = (s₁, s₂)",
        run: round_trip,
    },
    Suite {
        name: "boundary",
        criterion: Some(9),
        default_count: 50,
        summary: "φ_{A,B}: stable, degenerate, coordinate [0 : AB : A² + B²], inverse",
        run: boundary,
    },
    Suite {
        name: "semistable",
        criterion: Some(10),
        default_count: 200,
        summary: "unstable and not-stable tests agree for even d; odd-d example",
        run: semistable,
    },
    Suite {
        name: "good-reduction",
        criterion: Some(11),
        default_count: 50,
        summary: "representatives with unit resultant at p ∈ {3, 5, 7}",
        run: good_reduction,
    },
    Suite {
        name: "float-oracle",
        criterion: Some(12),
        default_count: 20,
        summary: "numerical multipliers against exact spectra",
        run: float_suite,
    },
    Suite {
        name: "integrality",
        criterion: None,
        default_count: 10,
        summary: "per-cycle σ⁽ⁿ⁾ (n ≤ 3) are integer polynomials in (σ₁, σ₂)",
        run: integrality,
    },
];

/// Look up a suite by name.
pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Run a suite; `count = None` uses its default.
pub fn run_suite(name: &str, seed: u64, count: Option<usize>) -> Result<SuiteReport> {
    let s = suite(name).ok_or_else(|| {
        let names: Vec<_> = SUITES.iter().map(|s| s.name).collect();
        Error::Invalid(format!("unknown suite {name:?}; expected one of {}", names.join(", ")))
    })?;
    Ok((s.run)(seed, count.unwrap_or(s.default_count)))
}

const NU_TABLE: [[u64; 8]; 7] = [
    [3, 2, 6, 12, 30, 54, 126, 240],
    [4, 6, 24, 72, 240, 696, 2184, 6480],
    [5, 12, 60, 240, 1020, 4020, 16380, 65280],
    [6, 20, 120, 600, 3120, 15480, 78120, 390000],
    [7, 30, 210, 1260, 7770, 46410, 279930, 1678320],
    [8, 42, 336, 2352, 16800, 117264, 823536, 5762400],
    [9, 56, 504, 4032, 32760, 261576, 2097144, 16773120],
];

fn nu_table(seed: u64, _count: usize) -> SuiteReport {
    let mut props = Properties::new(&["table", "divisor-sum"]);
    for d in 2..=8u64 {
        for n in 1..=8u32 {
            let got = nu(d, n);
            let want = BigInt::from(NU_TABLE[d as usize - 2][n as usize - 1]);
            props.record(
                0,
                check(got == want, || json!({ "d": d, "n": n, "got": got.to_string(), "want": want.to_string() })),
            );
            let sum: BigInt = divisors(n).into_iter().map(|m| nu(d, m)).sum();
            let total = BigInt::from(d).pow(n) + 1;
            props.record(1, check(sum == total, || json!({ "d": d, "n": n, "sum": sum.to_string() })));
        }
    }
    props.finish("nu-table", seed, 56, BTreeMap::new())
}

fn dynatomic(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["exact-division", "degree-nu", "phi1-divides", "mobius-product"]);
    let count3 = (count * 2).div_ceil(5) as u64;
    let offset = 1 << 32;
    let indices = (0..count as u64).chain(offset..offset + count3);
    let work = |s: &mut Sampler, i: u64| {
        let (d, max_n) = if i < offset { (2, 4) } else { (3, 3) };
        let phi = s.map(d);
        let mut out = Vec::new();
        let iterates = phi.iterates(max_n);
        let phi1 = per_form_of_iterate(&iterates[0], 1).expect("Φ₁").form;
        for n in 1..=max_n {
            let payload = || json!({ "map": map_json(&phi), "n": n });
            let star = formal_per_form_from_iterates(&iterates, n);
            out.push(("exact-division", check(star.is_ok(), payload)));
            out.push((
                "degree-nu",
                from_result(find_chart(&phi, n).map(|c| c.modulus.degree() == Some(c.star.expected_degree)), payload),
            ));
            let full = per_form_of_iterate(&iterates[n as usize - 1], n).expect("Φₙ").form;
            out.push(("phi1-divides", check(full.exact_div(&phi1).is_ok(), payload)));
            let product =
                divisors(n).into_iter().try_fold(None::<ratmap_core::poly::BinaryForm<Rational>>, |acc, m| {
                    let f = formal_per_form_from_iterates(&iterates, m)?.form;
                    Ok::<_, Error>(Some(acc.map_or(f.clone(), |a| a.mul(&f))))
                });
            out.push((
                "mobius-product",
                from_result(product.map(|p| p.expect("n ≥ 1").normalized() == full.normalized()), payload),
            ));
        }
        (out, ())
    };
    let results: Vec<_> =
        indices.collect::<Vec<_>>().into_par_iter().map(|i| work(&mut Sampler::new(seed, i), i)).collect();
    for (outcomes, ()) in results {
        for (name, o) in outcomes {
            props.by_name(name, o);
        }
    }
    let mut notes = BTreeMap::new();
    notes.insert("degree-2 maps (n ≤ 4)".into(), count.to_string());
    notes.insert("degree-3 maps (n ≤ 3)".into(), count3.to_string());
    props.finish("dynatomic", seed, count, notes)
}

fn fixed_point(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["sigma3", "identity"]);
    props.run(seed, 0..count as u64, |s, _| {
        let phi = s.map(2);
        let r = sigma_spectrum(&phi, 1, Convention::PerPoint)
            .map(|sp| sp.sigma[2] == &sp.sigma[0] - Rational::from_integer(2.into()));
        (vec![("sigma3", from_result(r, || map_json(&phi)))], ())
    });
    let per_degree = (count / 4).max(1) as u64;
    let mut notes = BTreeMap::new();
    for d in 2..=5u64 {
        let base = d << 32;
        props.run(seed, base..base + per_degree, |s, _| {
            let phi = s.map(d as usize);
            let o = match fixed_point_identity_check(&phi) {
                Err(Error::DegenerateAtOne) => Outcome::Skip,
                r => from_result(r, || map_json(&phi)),
            };
            (vec![("identity", o)], ())
        });
        notes.insert(format!("identity maps per degree (d = {d})"), per_degree.to_string());
    }
    props.finish("fixed-point", seed, count, notes)
}

fn closed_forms(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["sigma-pair", "rho-resultant"]);
    props.run(seed, 0..count as u64, |s, _| {
        let phi = s.map(2);
        let pair = sigma_pair(&phi).and_then(|(s1, s2)| {
            let sp = sigma_spectrum(&phi, 1, Convention::PerPoint)?;
            Ok(sp.sigma[0] == s1 && sp.sigma[1] == s2)
        });
        let rho = rho_sigma_explicit(phi.point()).map(|(r, _, _)| r == phi.resultant());
        (
            vec![
                ("sigma-pair", from_result(pair, || map_json(&phi))),
                ("rho-resultant", from_result(rho, || map_json(&phi))),
            ],
            (),
        )
    });
    props.finish("closed-forms", seed, count, BTreeMap::new())
}

fn conjugation(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["point", "cycle", "twisted"]);
    props.run(seed, 0..count as u64, |s, _| {
        let phi = s.map(2);
        let f = s.moebius(3);
        let psi = phi.conjugate(&f).expect("invertible conjugation");
        let mut out = Vec::new();
        for n in 1..=3 {
            let charts = find_chart(&phi, n).and_then(|a| Ok((a, find_chart(&psi, n)?)));
            for c in Convention::ALL {
                let r = charts.as_ref().map_err(Clone::clone).and_then(|(a, b)| {
                    Ok(sigma_spectrum_in_chart(a, n, c)?.sigma == sigma_spectrum_in_chart(b, n, c)?.sigma)
                });
                let [a, b, g, d] = f.entries();
                let payload = || json!({ "map": map_json(&phi), "n": n, "matrix": [q(a), q(b), q(g), q(d)] });
                out.push((c.as_str(), from_result(r, payload)));
            }
        }
        (out, ())
    });
    props.finish("conjugation", seed, count, BTreeMap::new())
}

/// `c = σ₁⁽³⁾ − σ₁(2σ₁ + σ₂) − 3σ₁` and the two period relations.
fn milnor_quantities(phi: &RationalMap<Rational>) -> Result<(bool, bool, Rational)> {
    let two = Rational::from_integer(2.into());
    let (s1, s2) = sigma_pair(phi)?;
    let c2 = sigma_spectrum(phi, 2, Convention::PerCycle)?.sigma;
    let c3 = sigma_spectrum(phi, 3, Convention::PerCycle)?.sigma;
    let rel2 = c2 == vec![&two * &s1 + &s2];
    let t = &s1 + &s2;
    let rhs = &t * &t * (&two * &s1 + &s2) - &s1 * (&s1 + &two * &s2)
        + Rational::from_integer(12.into()) * &s1
        + Rational::from_integer(28.into());
    let rel3 = c3[1] == rhs;
    let c = &c3[0] - &s1 * (&two * &s1 + &s2) - Rational::from_integer(3.into()) * &s1;
    Ok((rel2, rel3, c))
}

fn milnor(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["period-2", "period-3-sigma2", "period-3-constant"]);
    let constants = props.run(seed, 0..count as u64, |s, _| {
        let phi = s.map(2);
        match milnor_quantities(&phi) {
            Ok((r2, r3, c)) => (
                vec![("period-2", check(r2, || map_json(&phi))), ("period-3-sigma2", check(r3, || map_json(&phi)))],
                Some((c, map_json(&phi))),
            ),
            Err(e) => {
                let fail = Outcome::Fail(json!({ "error": e.to_string(), "map": map_json(&phi) }));
                (vec![("period-2", fail.clone()), ("period-3-sigma2", fail)], None)
            }
        }
    });
    let mut notes = BTreeMap::new();
    let first = constants.iter().flatten().next().map(|(c, _)| c.clone());
    for (c, m) in constants.iter().flatten() {
        let same = Some(c) == first.as_ref();
        props.by_name("period-3-constant", check(same, || json!({ "c": q(c), "map": m })));
    }
    if let Some(c) = &first {
        notes.insert("c".into(), q(c));
    }
    for (label, a, b) in [("c(z^2)", [1, 0, 0], [0, 0, 1]), ("c(z^2-2)", [1, 0, -2], [0, 0, 1])] {
        let phi = RationalMap::<Rational>::from_i64s(&a, &b).expect("morphism");
        if let Ok((_, _, c)) = milnor_quantities(&phi) {
            notes.insert(label.into(), q(&c));
            props.by_name(
                "period-3-constant",
                check(Some(&c) == first.as_ref(), || json!({ "c": q(&c), "map": label })),
            );
        }
    }
    props.finish("milnor", seed, count, notes)
}

fn normal_form(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["resultant", "sigma-pair"]);
    props.run(seed, 0..count as u64, |s, _| {
        let (m1, m2) = loop {
            let (a, b) = (s.rational(9, 5), s.rational(9, 5));
            if &a * &b != Rational::one() {
                break (a, b);
            }
        };
        let payload = || json!({ "mu1": q(&m1), "mu2": q(&m2) });
        let phi = normal_form_pair(&ExtElem::rational(m1.clone()), &ExtElem::rational(m2.clone()));
        let one_minus = Rational::one() - &m1 * &m2;
        let res = phi.as_ref().map_err(Clone::clone).map(|p| p.resultant() == ExtElem::rational(one_minus.clone()));
        let m3 = (Rational::from_integer(2.into()) - &m1 - &m2) / &one_minus;
        let want = (&m1 + &m2 + &m3, &m1 * &m2 + &m1 * &m3 + &m2 * &m3);
        let sig = phi.and_then(|p| sigma_pair_rational(&p)).map(|got| got == want);
        (vec![("resultant", from_result(res, payload)), ("sigma-pair", from_result(sig, payload))], ())
    });
    props.finish("normal-form", seed, count, BTreeMap::new())
}

fn round_trip(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["round-trip", "integer-grid"]);
    let degrees = props.run(seed, 0..count as u64, |s, _| {
        let (s1, s2) = (s.rational(20, 6), s.rational(20, 6));
        let payload = || json!({ "s1": q(&s1), "s2": q(&s2) });
        let phi = from_moduli(&s1, &s2);
        let degree = phi.as_ref().ok().map_or(0, |p| coefficient_field(p).map_or(1, |f| f.degree()));
        let r = phi.and_then(|p| sigma_pair_rational(&p)).map(|got| got == (s1.clone(), s2.clone()));
        (vec![("round-trip", from_result(r, payload))], degree)
    });
    // Integer pairs reach the cases with rational multipliers, which random
    // rational pairs almost never do.
    let grid: Vec<(i64, i64)> = (-5..=5).flat_map(|a| (-5..=5).map(move |b| (a, b))).collect();
    let grid_degrees: Vec<usize> = grid
        .par_iter()
        .map(|&(a, b)| {
            let (s1, s2) = (Rational::from_integer(a.into()), Rational::from_integer(b.into()));
            let phi = from_moduli(&s1, &s2);
            let degree = phi.as_ref().ok().map_or(0, |p| coefficient_field(p).map_or(1, |f| f.degree()));
            (phi.and_then(|p| sigma_pair_rational(&p)).map(|got| got == (s1, s2)), degree)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .zip(&grid)
        .map(|((r, degree), (a, b))| {
            props.by_name("integer-grid", from_result(r, || json!({ "s1": a, "s2": b })));
            degree
        })
        .collect();
    let mut notes = BTreeMap::new();
    for (k, label) in [
        (1, "grid: rational representatives"),
        (2, "grid: quadratic-field representatives"),
        (3, "grid: cubic-field representatives"),
    ] {
        notes.insert(label.into(), grid_degrees.iter().filter(|&&d| d == k).count().to_string());
    }
    for (k, label) in
        [(1, "rational representatives"), (2, "quadratic-field representatives"), (3, "cubic-field representatives")]
    {
        notes.insert(label.into(), degrees.iter().filter(|&&d| d == k).count().to_string());
    }
    props.finish("round-trip", seed, count, notes)
}

fn boundary(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&[
        "stable",
        "degenerate",
        "coordinate",
        "inverse",
        "normal-form",
        "unstable-example",
        "random-degenerate",
    ]);
    props.run(seed, 0..count as u64, |s, _| {
        let (a, b) = loop {
            let (a, b) = (s.rational(9, 4), s.rational(9, 4));
            if !(a.is_zero() && b.is_zero()) {
                break (a, b);
            }
        };
        let payload = || json!({ "A": q(&a), "B": q(&b) });
        let p = phi_ab(&a, &b).expect("nonzero point");
        let stable = classify(&p).map(|c| c.verdict == Verdict::Stable);
        let degenerate = p.resultant().map(|r| r.is_zero());
        let want = ModuliPoint::projective(&Rational::zero(), &(&a * &b), &(&a * &a + &b * &b));
        let coord = moduli_s_coordinate(&p);
        let coord_ok = coord.clone().and_then(|c| Ok(c == want.clone()?));
        let inverse = coord.clone().and_then(|c| {
            let [_, u, v] = c.coordinates();
            let pair = boundary_inverse(&u, &v)?;
            let (ae, be) = (ExtElem::rational(a.clone()), ExtElem::rational(b.clone()));
            Ok(pair.iter().any(|pt| {
                let (x, y) = pt.coords();
                (x.clone() * be.clone() - y.clone() * ae.clone()).is_zero()
            }))
        });
        let nf = boundary_normal_form(&p).and_then(|bf| Ok(bf.coordinate()? == coord?));
        (
            vec![
                ("stable", from_result(stable, payload)),
                ("degenerate", from_result(degenerate, payload)),
                ("coordinate", from_result(coord_ok, payload)),
                ("inverse", from_result(inverse, payload)),
                ("normal-form", from_result(nf, payload)),
            ],
            (),
        )
    });
    let unstable = RationalMapPoint::<Rational>::from_i64s(&[0, 0, 0], &[0, 1, 0]).expect("nonzero");
    let v = classify(&unstable).map(|c| c.verdict == Verdict::Unstable);
    props.by_name("unstable-example", from_result(v, || point_json(&unstable)));
    // Random stable degenerate points: normal form and coordinate agree.
    let offset = 1 << 32;
    props.run(seed, offset..offset + 4 * count as u64, |s, _| {
        let p = s.degenerate_point(2);
        let o = match classify(&p) {
            Ok(c) if c.verdict == Verdict::Stable => from_result(
                boundary_normal_form(&p).and_then(|bf| Ok(bf.coordinate()? == moduli_s_coordinate(&p)?)),
                || point_json(&p),
            ),
            Ok(_) => Outcome::Skip,
            Err(e) => Outcome::Fail(json!({ "error": e.to_string(), "point": point_json(&p) })),
        };
        (vec![("random-degenerate", o)], ())
    });
    props.finish("boundary", seed, count, BTreeMap::new())
}

fn semistable(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["agree-d2", "agree-d4", "odd-example"]);
    let mut notes = BTreeMap::new();
    for (d, name) in [(2usize, "agree-d2"), (4, "agree-d4")] {
        let base = (d as u64) << 32;
        let verdicts = props.run(seed, base..base + count as u64, |s, _| {
            let p = s.degenerate_point(d);
            let r = (|| {
                let u = find_witness(&p, Strictness::UnstableTest)?.is_some();
                let ns = find_witness(&p, Strictness::NotStableTest)?.is_some();
                let v = classify(&p)?.verdict;
                Ok((u == ns && v != Verdict::SemistableNotStable, v))
            })();
            let verdict = r.as_ref().ok().map(|(_, v)| *v);
            (vec![(name, from_result(r.map(|(ok, _)| ok), || point_json(&p)))], verdict)
        });
        for v in [Verdict::Stable, Verdict::SemistableNotStable, Verdict::Unstable] {
            let k = verdicts.iter().filter(|x| **x == Some(v)).count();
            notes.insert(format!("d={d} {}", v.as_str()), k.to_string());
        }
    }
    let example = RationalMapPoint::<Rational>::from_i64s(&[0, 1, 0, 0], &[0, 0, 0, 1]).expect("nonzero");
    let v = classify(&example).map(|c| c.verdict == Verdict::SemistableNotStable);
    props.by_name("odd-example", from_result(v, || point_json(&example)));
    props.finish("semistable", seed, count, notes)
}

fn good_reduction(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["p=3", "p=5", "p=7"]);
    let mut notes = BTreeMap::new();
    for (p, name) in [(3u64, "p=3"), (5, "p=5"), (7, "p=7")] {
        let base = p << 32;
        let forms = props.run(seed, base..base + count as u64, |s, _| {
            let mut pick = || loop {
                let x = s.rational(30, 12);
                if valuation(&x, p).is_none_or(|v| v >= 0) {
                    return x;
                }
            };
            let (s1, s2) = (pick(), pick());
            let payload = || json!({ "s1": q(&s1), "s2": q(&s2), "p": p });
            let g = good_reduction_rep(&s1, &s2, p);
            let form = g.as_ref().ok().map(|g| g.form);
            let r = g.and_then(|g| {
                Ok(valuation(&g.resultant_norm, p) == Some(0)
                    && sigma_pair_rational(&g.map)? == (s1.clone(), s2.clone()))
            });
            (vec![(name, from_result(r, payload))], form)
        });
        let mut hist: BTreeMap<&str, usize> = BTreeMap::new();
        for f in forms.into_iter().flatten() {
            *hist.entry(f).or_default() += 1;
        }
        for (f, k) in hist {
            notes.insert(format!("p={p} form {f}"), k.to_string());
        }
    }
    props.finish("good-reduction", seed, count, notes)
}

fn float_suite(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["relative-error"]);
    let errors = props.run(seed, 0..count as u64, |s, i| {
        let d = 2 + (i % 2) as usize;
        let n = 1 + ((i / 2) % 3) as u32;
        let phi = s.map(d);
        match float_oracle(&phi, n) {
            Ok(c) => {
                let o = check(c.passed, || json!({ "map": map_json(&phi), "n": n, "error": c.max_relative_error }));
                (vec![("relative-error", o)], c.max_relative_error)
            }
            Err(e) => (
                vec![(
                    "relative-error",
                    Outcome::Fail(json!({ "error": e.to_string(), "map": map_json(&phi), "n": n })),
                )],
                f64::INFINITY,
            ),
        }
    });
    let worst = errors.iter().copied().fold(0.0f64, f64::max);
    let mut notes = BTreeMap::new();
    notes.insert("max relative error".into(), format!("{worst:.3e}"));
    notes.insert("tolerance".into(), format!("{TOLERANCE:e}"));
    props.finish("float-oracle", seed, count, notes)
}

/// `σ⁽ⁿ⁾` per cycle, `n = 1, 2, 3`, as integer polynomials of total degree
/// `≤ 2n` in `(σ₁, σ₂)`: fitted on 3× as many samples as monomials, then
/// checked on `count` fresh ones.
fn integrality(seed: u64, count: usize) -> SuiteReport {
    let mut props = Properties::new(&["n=1", "n=2", "n=3"]);
    let mut notes = BTreeMap::new();
    for (n, name) in [(1u32, "n=1"), (2, "n=2"), (3, "n=3")] {
        let bound = 2 * n;
        let train = 3 * monomial_count(bound) as u64;
        let base = (n as u64) << 32;
        let data = |range: std::ops::Range<u64>| -> Vec<Result<(Rational, Rational, Vec<Rational>)>> {
            range
                .into_par_iter()
                .map(|i| {
                    let phi = Sampler::new(seed, i).map(2);
                    let (s1, s2) = sigma_pair(&phi)?;
                    Ok((s1, s2, sigma_spectrum(&phi, n, Convention::PerCycle)?.sigma))
                })
                .collect()
        };
        let fit_data: Result<Vec<_>> = data(base..base + train).into_iter().collect();
        let fresh = data(base + train..base + train + count as u64);
        let fit = fit_data.and_then(|rows| {
            (0..rows[0].2.len())
                .map(|k| {
                    let pts: Vec<_> = rows.iter().map(|(a, b, s)| (a.clone(), b.clone(), s[k].clone())).collect();
                    fit_invariant_polynomial(&pts, bound)
                })
                .collect::<Result<Vec<_>>>()
        });
        match fit {
            Err(e) => props.by_name(name, Outcome::Fail(json!({ "error": format!("interpolation failed: {e}") }))),
            Ok(polys) => {
                let integral = polys.iter().all(has_integer_coefficients);
                props.by_name(name, check(integral, || json!({ "error": "non-integer coefficient" })));
                for row in fresh {
                    let o = match row {
                        Ok((a, b, s)) => check(
                            polys.iter().zip(&s).all(|(p, v)| eval_invariant_polynomial(p, &a, &b) == *v),
                            || json!({ "s1": q(&a), "s2": q(&b) }),
                        ),
                        Err(e) => Outcome::Fail(json!({ "error": e.to_string() })),
                    };
                    props.by_name(name, o);
                }
                for (k, p) in polys.iter().enumerate() {
                    let terms: Vec<String> = p.iter().map(|(i, j, c)| format!("{}·σ1^{i}·σ2^{j}", q(c))).collect();
                    notes.insert(
                        format!("n={n} σ{}", k + 1),
                        if terms.is_empty() { "0".into() } else { terms.join(" + ") },
                    );
                }
            }
        }
    }
    props.finish("integrality", seed, count, notes)
}

/// Serialize a report (deterministic key order).
pub fn report_json(r: &SuiteReport) -> String {
    serde_json::to_string_pretty(r).expect("serializable")
}

/// Human-readable summary of a report.
pub fn report_text(r: &SuiteReport) -> String {
    let mut s =
        format!("suite {} (seed {}, count {}): {}\n", r.suite, r.seed, r.count, if r.passed { "PASS" } else { "FAIL" });
    for p in &r.properties {
        s += &format!(
            "  {:<20} {}  checked {}, skipped {}\n",
            p.name,
            if p.passed { "pass" } else { "FAIL" },
            p.checked,
            p.skipped
        );
        for c in &p.counterexamples {
            s += &format!("    counterexample: {c}\n");
        }
    }
    for (k, v) in &r.notes {
        s += &format!("  note: {k} = {v}\n");
    }
    if let Some(t) = r.timing_ms {
        s += &format!("  time: {t} ms\n");
    }
    s
}
