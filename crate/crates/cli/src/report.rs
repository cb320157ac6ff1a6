//! The `spectrum` report and its JSON form.

use std::time::Instant;

use milnor_core::bands::{analyze, spectrum_of, Analysis};
use milnor_core::bounds::{default_budget, search_multinets, upper_bound, vanishing_report, Bound};
use milnor_core::geometry::{multiple_points, profile, ProjArrangement};
use milnor_core::Result;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub input: Input,
    pub n: usize,
    pub divisors: Vec<DivisorRow>,
    pub b1: usize,
    pub pure_tone: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Input {
    pub source: String,
    pub lines: usize,
    pub field: String,
    pub infinity: usize,
    /// `[multiplicity, count]` for points of multiplicity at least 2.
    pub points: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivisorRow {
    pub k: u64,
    pub resonant_bands: usize,
    pub dim: usize,
    /// Sum of the dimensions over all primitive k-th roots.
    pub total: usize,
    /// `[j, h1]` for the roots `e^{2πij/k}` checked by the oracle.
    pub oracle_checks: Vec<[u64; 2]>,
    pub certificates: Certificates,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificates {
    /// `zero`, `at_most_one` or `unbounded`.
    pub upper_bound: String,
    pub sharp_pair: Option<[usize; 2]>,
    /// `found`, `none`, `truncated` or `not_applicable` (k < 3).
    pub multinet_search: String,
    pub multinet: Option<Vec<Vec<usize>>>,
    pub vanishing: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub analysis_ms: f64,
    pub spectrum_ms: f64,
    pub bounds_ms: f64,
}

pub fn field_name(arr: &ProjArrangement) -> String {
    let f = arr.field();
    if f.is_rational() {
        "Q".to_string()
    } else {
        format!("Q[t]/({})", f.minpoly())
    }
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

pub fn bound_name(b: Bound) -> &'static str {
    match b {
        Bound::Zero => "zero",
        Bound::AtMostOne => "at_most_one",
        Bound::Unbounded => "unbounded",
    }
}

pub fn build(
    source: &str,
    arr: &ProjArrangement,
    infinity: usize,
    multinet_budget: Option<u64>,
) -> Result<(SpectrumReport, Analysis)> {
    let t0 = Instant::now();
    let analysis = analyze(arr, infinity)?;
    let analysis_ms = ms(t0);

    let t1 = Instant::now();
    let spectrum = spectrum_of(arr, &analysis)?;
    let spectrum_ms = ms(t1);

    let t2 = Instant::now();
    let budget = multinet_budget.or(default_budget(arr.len()));
    let mut divisors = Vec::new();
    for o in &spectrum.per_order {
        let ub = upper_bound(arr, o.k)?;
        let (multinet_search, multinet) = if o.k < 3 {
            ("not_applicable", None)
        } else {
            let s = search_multinets(arr, o.k as usize, budget);
            match s.found.into_iter().next() {
                Some(m) => ("found", Some(m.classes)),
                None if s.exhaustive => ("none", None),
                None => ("truncated", None),
            }
        };
        let v = vanishing_report(arr, infinity, o.k)?;
        divisors.push(DivisorRow {
            k: o.k,
            resonant_bands: o.resonant.len(),
            dim: o.dim,
            total: o.total(),
            oracle_checks: o.oracle_checks.iter().map(|&(j, h)| [j, h as u64]).collect(),
            certificates: Certificates {
                upper_bound: bound_name(ub.bound).to_string(),
                sharp_pair: ub.certificate.map(|p| [p.i, p.j]),
                multinet_search: multinet_search.to_string(),
                multinet,
                vanishing: v.at_infinity.iter().chain(&v.per_line_criterion).map(|c| c.to_string()).collect(),
            },
        });
    }
    let bounds_ms = ms(t2);

    let points = profile(&multiple_points(arr)).into_iter().map(|(m, c)| [m, c]).collect();
    let report = SpectrumReport {
        input: Input { source: source.to_string(), lines: arr.len(), field: field_name(arr), infinity, points },
        n: spectrum.n,
        divisors,
        b1: spectrum.b1,
        pure_tone: spectrum.pure_tone,
        warnings: spectrum.warnings,
        timings: Some(Timings { analysis_ms, spectrum_ms, bounds_ms }),
    };
    Ok((report, analysis))
}

impl SpectrumReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let i = &self.input;
        let pts: Vec<String> = i.points.iter().map(|[m, c]| format!("{m}:{c}")).collect();
        out += &format!("input    {}\n", i.source);
        out += &format!("lines    {} over {}, infinity = line {}\n", i.lines, i.field, i.infinity);
        out += &format!("points   {}\n", pts.join(" "));
        out += &format!("n        {}\n\n", self.n);
        out += &format!("{:>4} {:>6} {:>5} {:>6}  {:<12} {:<11} {:<15} vanishing\n", "k", "|RB|", "dim", "total", "bound", "sharp", "multinet");
        for r in &self.divisors {
            let c = &r.certificates;
            let sharp = c.sharp_pair.map_or("-".to_string(), |[a, b]| format!("({a},{b})"));
            let van = if c.vanishing.is_empty() { "-".to_string() } else { c.vanishing.join("; ") };
            out += &format!(
                "{:>4} {:>6} {:>5} {:>6}  {:<12} {:<11} {:<15} {}\n",
                r.k, r.resonant_bands, r.dim, r.total, c.upper_bound, sharp, c.multinet_search, van
            );
        }
        out += &format!("\nb1 = {}\npure-tone: {}\n", self.b1, self.pure_tone);
        for w in &self.warnings {
            out += &format!("warning: {w}\n");
        }
        if let Some(t) = &self.timings {
            out += &format!(
                "timings: analysis {:.1} ms, spectrum {:.1} ms, bounds {:.1} ms\n",
                t.analysis_ms, t.spectrum_ms, t.bounds_ms
            );
        }
        out
    }
}
