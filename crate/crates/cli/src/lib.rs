//! The `milnor` command line.

pub mod report;
pub mod svg;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use milnor_core::bands::{analyze, check_order, standing_wave};
use milnor_core::bounds::{default_budget, search_multinets, sharp_pairs, upper_bound_from, vanishing_report};
use milnor_core::catalogue;
use milnor_core::complex::{local_system_cohomology, LocalSystem};
use milnor_core::geometry::{decone, parse_arrangement, write_arrangement, ArrFile};

#[derive(Parser)]
#[command(name = "milnor", version, about = "Milnor fiber monodromy eigenspaces of real line arrangements")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Eigenspace dimensions for every order k dividing the number of lines.
    Spectrum {
        file: PathBuf,
        /// Index of the line sent to infinity (default: the `infinity` line, else the last).
        #[arg(long)]
        infinity: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        multinet_budget: Option<u64>,
    },
    /// Bands, their lengths and resonance, and standing waves of resonant bands.
    Bands {
        file: PathBuf,
        #[arg(short)]
        k: u64,
        #[arg(long)]
        infinity: Option<usize>,
    },
    /// Chamber sign vectors.
    Chambers {
        file: PathBuf,
        #[arg(long)]
        infinity: Option<usize>,
    },
    /// Local-system cohomology from the twisted cochain complex.
    Oracle {
        file: PathBuf,
        /// Exponents e_i with q_i^(1/2) = exp(2πi e_i / M), in file order of the affine lines.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        weights: Vec<i64>,
        /// The order M.
        #[arg(long)]
        order: u64,
        #[arg(long)]
        infinity: Option<usize>,
    },
    /// Sharp-pair upper bound, multinet lower bound and vanishing criteria.
    Bounds {
        file: PathBuf,
        #[arg(short)]
        k: u64,
        #[arg(long)]
        infinity: Option<usize>,
        #[arg(long)]
        multinet_budget: Option<u64>,
    },
    /// Built-in arrangements.
    Catalogue {
        #[command(subcommand)]
        action: CatalogueAction,
    },
    /// Draw the arrangement in its affine chart.
    Svg {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Shade the k-resonant bands and label their wave supports.
        #[arg(short)]
        k: Option<u64>,
        #[arg(long)]
        infinity: Option<usize>,
    },
}

#[derive(Subcommand)]
pub enum CatalogueAction {
    /// Names with line counts and multiple-point profiles.
    List,
    /// Write an entry in the .arr format.
    Emit { name: String },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{source}")]
    Parse { path: String, source: milnor_core::Error },
    #[error(transparent)]
    Core(#[from] milnor_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for internal invariant violations, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) | CliError::Parse { source: e, .. } if e.is_internal() => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

fn load(path: &PathBuf) -> Result<ArrFile> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    parse_arrangement(&text).map_err(|source| match source {
        milnor_core::Error::Syntax { .. } => CliError::Parse { path: shown, source },
        other => CliError::Core(other),
    })
}

fn resolve_infinity(file: &ArrFile, flag: Option<usize>) -> Result<usize> {
    let arr = &file.arrangement;
    let idx = flag.or(file.infinity).unwrap_or(arr.len() - 1);
    arr.check_index(idx)?;
    Ok(idx)
}

/// Runs one command and returns its standard output.
pub fn run(cli: Cli) -> Result<String> {
    let mut out = String::new();
    match cli.command {
        Command::Spectrum { file, infinity, json, timings, multinet_budget } => {
            let f = load(&file)?;
            let inf = resolve_infinity(&f, infinity)?;
            let (mut rep, _) = report::build(&file.display().to_string(), &f.arrangement, inf, multinet_budget)?;
            if !timings {
                rep.timings = None;
            }
            out = if json { rep.to_json() } else { rep.to_text() };
        }
        Command::Bands { file, k, infinity } => {
            let f = load(&file)?;
            let inf = resolve_infinity(&f, infinity)?;
            check_order(k, f.arrangement.len())?;
            let a = analyze(&f.arrangement, inf)?;
            let na = &a.normalized;
            out += &format!("{} bands, infinity = line {inf}\n", a.bands.len());
            out += &format!("{:>4}  {:>9}  {:>6}  {:>7}  {:>8}  {:>4}  {:>4}\n", "band", "lines", "length", "inf-mul", "resonant", "u1", "u2");
            for (i, b) in a.bands.iter().enumerate() {
                let lines = format!("{},{}", na.original_index(b.lower), na.original_index(b.upper));
                out += &format!(
                    "{:>4}  {:>9}  {:>6}  {:>7}  {:>8}  {:>4}  {:>4}\n",
                    i,
                    lines,
                    b.length,
                    b.infinity_multiplicity,
                    if b.is_resonant(k) { "yes" } else { "no" },
                    b.u1,
                    b.u2
                );
            }
            for (i, b) in a.bands.iter().enumerate().filter(|(_, b)| b.is_resonant(k)) {
                let wave = standing_wave(b, k, &a.chambers)?;
                let terms: Vec<String> = wave.coeffs.iter().filter(|(_, v)| !v.is_zero()).map(|(c, v)| format!("C{c}: {v:#}")).collect();
                out += &format!("wave of band {i} (z = zeta_{}): {}\n", 2 * k, terms.join(", "));
            }
        }
        Command::Chambers { file, infinity } => {
            let f = load(&file)?;
            let inf = resolve_infinity(&f, infinity)?;
            let a = analyze(&f.arrangement, inf)?;
            let order: Vec<String> = a.normalized.original_indices().iter().map(|i| format!("H{i}")).collect();
            out += &format!("{} chambers, sign order {}\n", a.chambers.len(), order.join(" "));
            for (i, c) in a.chambers.iter().enumerate() {
                let kind = if c.bounded { "bounded" } else { "unbounded" };
                out += &format!("C{i:<4} {}  {kind}\n", c.sign_string());
            }
        }
        Command::Oracle { file, weights, order, infinity } => {
            let f = load(&file)?;
            let inf = resolve_infinity(&f, infinity)?;
            let n = f.arrangement.len() - 1;
            if weights.len() != n {
                return Err(CliError::Usage(format!("expected {n} weights, got {}", weights.len())));
            }
            let na = decone(&f.arrangement, inf)?;
            let mut half = vec![0; n];
            let affine = (0..f.arrangement.len()).filter(|&i| i != inf);
            for (w, orig) in weights.iter().zip(affine) {
                let pos = na.normalized_index(orig).ok_or(milnor_core::Error::LineIndex { index: orig, count: n + 1 })?;
                half[pos] = *w;
            }
            let h = local_system_cohomology(&f.arrangement, inf, &LocalSystem::new(order, half)?)?;
            out += &format!("h0 = {}\nh1 = {}\nh2 = {}\n", h.h0, h.h1, h.h2);
        }
        Command::Bounds { file, k, infinity, multinet_budget } => {
            let f = load(&file)?;
            let arr = &f.arrangement;
            let inf = resolve_infinity(&f, infinity)?;
            check_order(k, arr.len())?;
            let pairs = sharp_pairs(arr);
            let ub = upper_bound_from(&pairs, k);
            out += &format!("sharp pairs ({}):\n", pairs.len());
            for p in &pairs {
                out += &format!("  ({}, {})  apex multiplicity {}, empty side sign {:+}\n", p.i, p.j, p.apex_multiplicity, p.empty_region_sign);
            }
            let cert = ub.certificate.as_ref().map_or(String::new(), |p| format!(" from ({}, {})", p.i, p.j));
            out += &format!("upper bound: {}{cert}\n", report::bound_name(ub.bound));
            if k >= 3 {
                let budget = multinet_budget.or(default_budget(arr.len()));
                let s = search_multinets(arr, k as usize, budget);
                match s.found.first() {
                    Some(m) => out += &format!("multinet: {:?} ({} base points)\n", m.classes, m.base_points.len()),
                    None if s.exhaustive => out += &format!("multinet: none (exhaustive, {} nodes)\n", s.nodes),
                    None => out += &format!("multinet: none found within {} nodes\n", s.nodes),
                }
            } else {
                out += "multinet: not applicable for k < 3\n";
            }
            let v = vanishing_report(arr, inf, k)?;
            out += &format!(
                "resonant bands at infinity {inf}: {} in {} directions\n",
                v.resonant_bands, v.resonant_directions
            );
            out += &format!("at-infinity criterion: {}\n", v.at_infinity.as_ref().map_or("-".to_string(), |c| c.to_string()));
            out += &format!("{:>4}  {:>8}  {:>9}\n", "line", "mult>=3", "k | mult");
            for e in &v.per_line {
                out += &format!("{:>4}  {:>8}  {:>9}\n", e.line, e.multiple_points, e.resonant_points);
            }
            out += &format!(
                "per-line criterion: {}\n",
                v.per_line_criterion.as_ref().map_or("-".to_string(), |c| c.to_string())
            );
        }
        Command::Catalogue { action: CatalogueAction::List } => {
            for name in catalogue::names() {
                let e = catalogue::named(name)?;
                out += &format!("{name:<12} {}\n", catalogue::describe(&e));
            }
        }
        Command::Catalogue { action: CatalogueAction::Emit { name } } => {
            let e = catalogue::named(&name)?;
            out = write_arrangement(&e.arrangement, Some(e.default_infinity), &format!("catalogue entry {name}"));
        }
        Command::Svg { file, output, k, infinity } => {
            let f = load(&file)?;
            let inf = resolve_infinity(&f, infinity)?;
            if let Some(k) = k {
                check_order(k, f.arrangement.len())?;
            }
            let a = analyze(&f.arrangement, inf)?;
            let text = svg::render(&a, k, &file.display().to_string())?;
            std::fs::write(&output, text)
                .map_err(|source| CliError::Io { path: output.display().to_string(), source })?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn internal_errors_exit_with_2() {
        assert_eq!(CliError::Core(milnor_core::Error::Internal("d1 * d0".into())).exit_code(), 2);
        assert_eq!(CliError::Core(milnor_core::Error::TooFewLines { count: 2 }).exit_code(), 1);
        assert_eq!(CliError::Usage("bad".into()).exit_code(), 1);
    }

    #[test]
    fn arguments_parse() {
        let cli = Cli::try_parse_from(["milnor", "oracle", "a.arr", "--weights", "1,-2,3", "--order", "6"]).unwrap();
        match cli.command {
            Command::Oracle { weights, order, .. } => {
                assert_eq!(weights, vec![1, -2, 3]);
                assert_eq!(order, 6);
            }
            _ => panic!("wrong subcommand"),
        }
    }
}
