//! Named arrangements with exact coordinates and the results they are
//! known to produce.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::{QPoly, Rational, RealAlgebraic, RealField};
use crate::arith::{Cyclotomic, CyclotomicField};
use crate::bands::{analyze, spectrum_of, Analysis, Spectrum};
use crate::error::{Error, Result};
use crate::geometry::{enumerate_chambers, multiple_points, profile, Chamber, Point, ProjArrangement, ProjLine};

/// A linear relation among standing waves, by band label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub k: u64,
    /// Coefficient of every labelled k-resonant band; zero means absent.
    pub coefficients: Vec<(&'static str, i64)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expected {
    /// `(multiplicity, count)` over all intersection points.
    pub profile: Vec<(usize, usize)>,
    /// `(k, dim_k)`.
    pub dims: Vec<(u64, usize)>,
    /// `(k, |RB_k|)` at the default line at infinity.
    pub resonant: Vec<(u64, usize)>,
    pub pure_tone: Option<bool>,
    pub relations: Vec<Relation>,
    /// Values generated by this tool and frozen as regression data rather
    /// than taken from a published computation.
    pub derived: bool,
}

/// A point inside one end of a band, in the arrangement's coordinates.
/// That end is the reference end `u1` used by [`Expected::relations`].
#[derive(Debug, Clone, PartialEq)]
pub struct BandLabel {
    pub label: &'static str,
    pub anchor: Point,
}

#[derive(Debug, Clone)]
pub struct CatalogueEntry {
    pub name: String,
    pub arrangement: ProjArrangement,
    pub default_infinity: usize,
    pub expected: Expected,
    pub band_labels: Vec<BandLabel>,
    /// Line sets of the points of multiplicity at least 3, sorted.
    pub incidences: Option<Vec<Vec<usize>>>,
}

/// Names accepted by [`named`], with sample parameters for the families.
pub fn names() -> Vec<&'static str> {
    vec![
        "A3",
        "A(6,1)",
        "A(12,1)",
        "A(12,2)",
        "B(6)",
        "B(9)",
        "B(12)",
        "Pappus",
        "Gru244a",
        "Gru244b",
        "Gru44",
        "GridDiagonal",
    ]
}

pub fn named(name: &str) -> Result<CatalogueEntry> {
    let entry = match name {
        "A3" => a3(),
        "A(12,2)" => a12_2(),
        "Pappus" => pappus(),
        "Gru244a" => gru244a(),
        "Gru244b" => gru244b(),
        "Gru44" => gru44(),
        "GridDiagonal" => grid_diagonal(),
        _ => {
            if let Some(p) = family_parameter(name, "A(", ",1)") {
                a_2n_1(p?)
            } else if let Some(p) = family_parameter(name, "B(", ")") {
                b_3m(p?)
            } else {
                return Err(Error::UnknownName(name.to_owned()));
            }
        }
    }?;
    entry.validate()?;
    Ok(entry)
}

fn family_parameter(name: &str, prefix: &str, suffix: &str) -> Option<Result<u64>> {
    let inner = name.strip_prefix(prefix)?.strip_suffix(suffix)?;
    Some(inner.parse::<u64>().map_err(|_| Error::InvalidParameter(format!("bad parameter in {name}"))))
}

impl CatalogueEntry {
    fn validate(&self) -> Result<()> {
        let pts = multiple_points(&self.arrangement);
        let prof: Vec<(usize, usize)> = profile(&pts).into_iter().collect();
        if !self.expected.profile.is_empty() && prof != self.expected.profile {
            return Err(Error::Internal(format!("{}: multiplicity profile {prof:?} does not match", self.name)));
        }
        if let Some(inc) = &self.incidences {
            let mut got: Vec<Vec<usize>> =
                pts.iter().filter(|p| p.multiplicity() >= 3).map(|p| p.incident.clone()).collect();
            got.sort();
            if &got != inc {
                return Err(Error::Internal(format!("{}: incidences do not match", self.name)));
            }
        }
        Ok(())
    }

    pub fn lines(&self) -> usize {
        self.arrangement.len()
    }
}

/// Where a label's anchor lands for one choice of line at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledBand {
    pub label: &'static str,
    pub band: usize,
    /// The anchor's chamber; the label's reference end.
    pub end: usize,
}

/// Resolves band labels through an analysis of the entry's arrangement.
pub fn label_bands(entry: &CatalogueEntry, analysis: &Analysis) -> Result<Vec<LabelledBand>> {
    let na = &analysis.normalized;
    entry
        .band_labels
        .iter()
        .map(|l| {
            let (x, y) = na
                .chart_point(&l.anchor)
                .ok_or_else(|| Error::Internal(format!("anchor {} is at infinity", l.label)))?;
            let signs = na.signs_at(&x, &y);
            if signs.contains(&0) {
                return Err(Error::Internal(format!("anchor {} lies on a line", l.label)));
            }
            let signs: Vec<bool> = signs.iter().map(|&s| s > 0).collect();
            let end = crate::geometry::chambers::find_chamber(&analysis.chambers, &signs)
                .ok_or_else(|| Error::Internal(format!("anchor {} is in no chamber", l.label)))?;
            let band = analysis
                .bands
                .iter()
                .position(|b| b.u1 == end || b.u2 == end)
                .ok_or_else(|| Error::Internal(format!("anchor {} is not at the end of a band", l.label)))?;
            Ok(LabelledBand { label: l.label, band, end })
        })
        .collect()
}

/// Kernel vector rewritten against the labels' reference ends, scaled so
/// the first nonzero coefficient in label order is 1. Waves measured from
/// the opposite end differ by `(-1)^{L/k + 1}`.
pub fn relation_by_label(
    analysis: &Analysis,
    labels: &[LabelledBand],
    resonant: &[usize],
    vector: &[Cyclotomic],
    k: u64,
) -> Result<Vec<(&'static str, Cyclotomic)>> {
    let mut out = Vec::new();
    for l in labels {
        let Some(col) = resonant.iter().position(|&b| b == l.band) else { continue };
        let band = &analysis.bands[l.band];
        let mut c = vector[col].clone();
        if band.u1 != l.end && (band.length as u64 / k) % 2 == 0 {
            c = -c;
        }
        out.push((l.label, c));
    }
    if let Some(lead) = out.iter().find(|(_, c)| !c.is_zero()).map(|(_, c)| c.clone()) {
        let inv = lead.inv()?;
        for (_, c) in &mut out {
            *c = &*c * &inv;
        }
    }
    Ok(out)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rational_lines(rows: &[[i64; 3]]) -> Result<ProjArrangement> {
    let f = RealField::rational();
    ProjArrangement::new(rows.iter().map(|r| ProjLine::from_ints(&f, r[0], r[1], r[2])).collect())
}

fn point(f: &Arc<RealField>, x: Rational, y: Rational, z: Rational) -> Point {
    [f.from_rational(x), f.from_rational(y), f.from_rational(z)]
}

fn affine_labels(f: &Arc<RealField>, anchors: &[(&'static str, Rational, Rational)]) -> Vec<BandLabel> {
    anchors
        .iter()
        .map(|(label, x, y)| BandLabel { label, anchor: point(f, x.clone(), y.clone(), q(1, 1)) })
        .collect()
}

fn int(n: i64) -> Rational {
    q(n, 1)
}

fn a3() -> Result<CatalogueEntry> {
    let arrangement = rational_lines(&[[1, 0, 0], [1, 0, -1], [0, 1, 0], [0, 1, -1], [1, -1, 0], [0, 0, 1]])?;
    let f = arrangement.field().clone();
    Ok(CatalogueEntry {
        name: "A3".into(),
        default_infinity: 5,
        expected: Expected {
            profile: vec![(2, 3), (3, 4)],
            dims: vec![(2, 0), (3, 1), (6, 0)],
            resonant: vec![(2, 0), (3, 2), (6, 0)],
            pure_tone: Some(true),
            relations: vec![Relation { k: 3, coefficients: vec![("B1", 1), ("B2", -1)] }],
            derived: false,
        },
        band_labels: affine_labels(&f, &[("B1", q(1, 2), int(10)), ("B2", int(-10), q(1, 2))]),
        incidences: Some(vec![vec![0, 1, 5], vec![0, 2, 4], vec![1, 3, 4], vec![2, 3, 5]]),
        arrangement,
    })
}

fn a12_2() -> Result<CatalogueEntry> {
    let arrangement = rational_lines(&[
        [1, 0, -140],
        [1, 0, -180],
        [1, 0, -220],
        [1, 0, -260],
        [0, 1, -45],
        [0, 1, -75],
        [0, 1, -105],
        [3, -4, -240],
        [3, -4, -360],
        [3, 4, -840],
        [3, 4, -960],
        [0, 0, 1],
    ])?;
    let f = arrangement.field().clone();
    Ok(CatalogueEntry {
        name: "A(12,2)".into(),
        default_infinity: 11,
        expected: Expected {
            profile: vec![(2, 8), (3, 10), (4, 3), (5, 1)],
            dims: vec![(2, 0), (3, 0), (4, 0), (6, 0), (12, 0)],
            resonant: vec![(2, 2), (3, 2), (4, 2)],
            pure_tone: Some(false),
            relations: Vec::new(),
            derived: false,
        },
        band_labels: affine_labels(
            &f,
            &[
                ("B1", int(108), int(144)),
                ("B2", int(100), int(90)),
                ("B3", int(100), int(60)),
                ("B4", int(108), int(6)),
                ("B5", int(160), int(-10)),
                ("B6", int(200), int(5)),
                ("B7", int(240), int(-10)),
            ],
        ),
        incidences: None,
        arrangement,
    })
}

fn pappus() -> Result<CatalogueEntry> {
    let arrangement = rational_lines(&[
        [1, -8, 560],
        [0, 1, -60],
        [1, 0, -160],
        [1, 0, -240],
        [1, -1, -100],
        [1, -1, -140],
        [3, 4, -840],
        [3, 4, -960],
        [0, 0, 1],
    ])?;
    let f = arrangement.field().clone();
    Ok(CatalogueEntry {
        name: "Pappus".into(),
        default_infinity: 8,
        expected: Expected {
            profile: vec![(2, 9), (3, 9)],
            dims: vec![(3, 1), (9, 0)],
            resonant: vec![(3, 3), (9, 0)],
            pure_tone: Some(true),
            relations: vec![Relation { k: 3, coefficients: vec![("B1", 1), ("B2", -1), ("B3", 1)] }],
            derived: false,
        },
        band_labels: affine_labels(
            &f,
            &[("B1", int(128), int(129)), ("B2", int(200), int(140)), ("B3", q(805, 3), q(445, 3))],
        ),
        incidences: None,
        arrangement,
    })
}

fn gru244a() -> Result<CatalogueEntry> {
    let arrangement = rational_lines(&[
        [5, -3, -1],
        [0, 1, 0],
        [0, 1, -1],
        [1, 0, 0],
        [1, 0, -1],
        [2, 3, 1],
        [-2, -3, 6],
        [-1, -3, 1],
        [1, 3, -3],
        [2, -3, 0],
        [2, -3, 1],
        [0, 0, 1],
    ])?;
    let f = arrangement.field().clone();
    Ok(CatalogueEntry {
        name: "Gru244a".into(),
        default_infinity: 11,
        expected: Expected {
            profile: vec![(2, 9), (3, 19)],
            dims: vec![(2, 0), (3, 1), (4, 0), (6, 0), (12, 0)],
            resonant: vec![(3, 5)],
            pure_tone: Some(true),
            relations: vec![Relation {
                k: 3,
                coefficients: vec![("B1", 1), ("B2", -1), ("B3", 1), ("B4", -1), ("B5", 0)],
            }],
            derived: false,
        },
        band_labels: affine_labels(
            &f,
            &[
                ("B1", q(25, 8), q(9, 4)),
                ("B2", q(1, 2), int(4)),
                ("B3", q(-5, 2), q(5, 2)),
                ("B4", int(-10), int(4)),
                ("B5", q(-19, 4), q(1, 2)),
            ],
        ),
        incidences: None,
        arrangement,
    })
}

fn gru244b() -> Result<CatalogueEntry> {
    let arrangement = rational_lines(&[
        [1, 0, 0],
        [1, 0, -1],
        [2, 4, -3],
        [3, 1, -2],
        [-1, 1, 0],
        [0, 1, 0],
        [2, -1, 2],
        [-3, 4, -3],
        [0, 1, -1],
        [-2, 1, 3],
        [3, -4, -2],
        [0, 0, 1],
    ])?;
    let f = arrangement.field().clone();
    Ok(CatalogueEntry {
        name: "Gru244b".into(),
        default_infinity: 11,
        expected: Expected {
            profile: vec![(2, 9), (3, 19)],
            dims: vec![(2, 0), (3, 1), (4, 0), (6, 0), (12, 0)],
            resonant: vec![(3, 4)],
            pure_tone: Some(true),
            relations: vec![Relation { k: 3, coefficients: vec![("B1", 1), ("B2", -1), ("B3", 1), ("B4", -1)] }],
            derived: false,
        },
        band_labels: affine_labels(
            &f,
            &[
                ("B1", q(17, 4), q(1, 2)),
                ("B2", q(1, 2), int(-7)),
                ("B3", int(-1), q(-5, 2)),
                ("B4", q(-11, 2), int(-4)),
            ],
        ),
        incidences: None,
        arrangement,
    })
}

/// Realized over `Q(r)`, `r² = 115`; the incidences have no rational
/// solution.
fn gru44() -> Result<CatalogueEntry> {
    let f = RealField::new(QPoly::from_i64(&[-115, 0, 1]), int(10), int(11))?;
    // a + b r
    let e = |a: (i64, i64), b: (i64, i64)| -> RealAlgebraic { f.element(&QPoly::new(vec![q(a.0, a.1), q(b.0, b.1)])) };
    let c = |n: i64, d: i64| f.from_rational(q(n, d));
    let mut lines: Vec<ProjLine> = [[1, 0, 0], [1, 0, -1], [0, 1, 0], [0, 1, -1]]
        .iter()
        .map(|r| ProjLine::from_ints(&f, r[0], r[1], r[2]))
        .collect();
    lines.push(ProjLine::new(c(2, 5), c(1, 1), c(-2, 5)));
    lines.push(ProjLine::new(c(-3, 5), c(1, 1), c(-2, 5)));
    lines.push(ProjLine::new(c(2, 5), c(1, 1), c(-1, 1)));
    lines.push(ProjLine::new(c(-3, 5), c(1, 1), c(0, 1)));
    lines.push(ProjLine::new(e((-43, 95), (1, 19)), c(-1, 1), e((98, 95), (-3, 95))));
    lines.push(ProjLine::new(e((-43, 95), (1, 19)), c(-1, 1), e((8, 19), (-2, 95))));
    lines.push(ProjLine::new(e((-6, 475), (6, 475)), c(3, 5), e((3, 95), (-3, 95))));
    lines.push(ProjLine::new(e((36, 95), (-9, 475)), c(-3, 5), e((-3, 95), (3, 95))));
    lines.push(ProjLine::new(e((-24, 95), (6, 475)), c(2, 5), e((-16, 95), (4, 475))));
    lines.push(ProjLine::new(e((4, 475), (-4, 475)), c(-2, 5), e((196, 475), (-6, 475))));
    lines.push(ProjLine::from_ints(&f, 0, 0, 1));
    let arrangement = ProjArrangement::with_field(f.clone(), lines)?;
    Ok(CatalogueEntry {
        name: "Gru44".into(),
        default_infinity: 14,
        expected: Expected {
            profile: vec![(2, 12), (3, 31)],
            dims: vec![(3, 1), (5, 0), (15, 0)],
            resonant: vec![(3, 7)],
            pure_tone: Some(true),
            relations: vec![Relation {
                k: 3,
                coefficients: vec![
                    ("B1", 1),
                    ("B2", 0),
                    ("B3", -1),
                    ("B4", 1),
                    ("B5", 0),
                    ("B6", -1),
                    ("B7", 1),
                ],
            }],
            derived: false,
        },
        band_labels: affine_labels(
            &f,
            &[
                ("B1", q(111, 8), int(2)),
                ("B2", q(45, 8), int(2)),
                ("B3", int(3), int(2)),
                ("B4", q(1, 2), int(2)),
                ("B5", q(-13, 4), int(2)),
                ("B6", q(-41, 6), int(2)),
                ("B7", q(-37, 6), q(1, 2)),
            ],
        ),
        incidences: None,
        arrangement,
    })
}

fn grid_diagonal() -> Result<CatalogueEntry> {
    let mut rows: Vec<[i64; 3]> = (1..=5).map(|i| [1, 0, -i]).collect();
    rows.extend((1..=5).map(|i| [0, 1, -i]));
    rows.push([1, -1, 0]);
    rows.push([0, 0, 1]);
    let arrangement = rational_lines(&rows)?;
    let f = arrangement.field().clone();
    let mut band_labels = Vec::new();
    const V: [&str; 4] = ["V1", "V2", "V3", "V4"];
    const H: [&str; 4] = ["H1", "H2", "H3", "H4"];
    for j in 0..4i64 {
        band_labels.push(BandLabel { label: V[j as usize], anchor: point(&f, int(9 + 6 * j), int(-2), int(6)) });
        band_labels.push(BandLabel { label: H[j as usize], anchor: point(&f, int(2), int(15 + 10 * j), int(10)) });
    }
    Ok(CatalogueEntry {
        name: "GridDiagonal".into(),
        default_infinity: 11,
        expected: Expected {
            profile: vec![(2, 21), (3, 5), (6, 2)],
            dims: vec![(2, 0), (3, 0), (4, 0), (6, 0), (12, 0)],
            resonant: vec![(3, 8)],
            pure_tone: Some(false),
            relations: Vec::new(),
            derived: false,
        },
        band_labels,
        incidences: None,
        arrangement,
    })
}

/// Index of the diagonal line `y = x` in [`named`]`("GridDiagonal")`.
pub const GRID_DIAGONAL_INDEX: usize = 10;

/// Sides and symmetry axes of a regular polygon with `sides` sides over
/// `Q(2cos(π/(2·sides)))`. Side `j` has unit normal at angle `2πj/sides`;
/// the axes listed by `axes` sit at angles `jπ/sides`.
fn polygon(sides: u64, axes: &[i64]) -> Result<ProjArrangement> {
    let f = RealField::cos_field(4 * sides);
    let n = sides as i64;
    let two = f.from_int(2);
    let mut lines = Vec::new();
    for j in 0..n {
        lines.push(ProjLine::new(f.dickson(4 * j), f.dickson(n - 4 * j), -&two));
    }
    for &j in axes {
        lines.push(ProjLine::new(-&f.dickson(n - 2 * j), f.dickson(2 * j), f.zero()));
    }
    ProjArrangement::with_field(f, lines)
}

fn a_2n_1(lines: u64) -> Result<CatalogueEntry> {
    if lines < 6 || lines % 2 != 0 {
        return Err(Error::InvalidParameter(format!("A({lines},1) needs an even number of lines, at least 6")));
    }
    let sides = lines / 2;
    let axes: Vec<i64> = (0..sides as i64).collect();
    let arrangement = polygon(sides, &axes)?;
    let default_infinity = (sides + sides / 2) as usize;
    let mut expected = Expected { derived: true, ..Expected::default() };
    let mut band_labels = Vec::new();
    if lines == 12 {
        let f = arrangement.field().clone();
        expected = Expected {
            profile: vec![(2, 6), (3, 15), (6, 1)],
            dims: vec![(2, 0), (3, 1), (4, 0), (6, 0), (12, 0)],
            resonant: vec![(3, 7)],
            pure_tone: Some(true),
            relations: vec![Relation {
                k: 3,
                coefficients: vec![
                    ("B1", 0),
                    ("B2", 1),
                    ("B3", -1),
                    ("B4", 0),
                    ("B5", 0),
                    ("B6", 1),
                    ("B7", -1),
                ],
            }],
            derived: false,
        };
        let m = |x: i64| q(x, 1_000_000);
        let anchors: [(&'static str, i64, i64, i64); 7] = [
            ("B1", -300_120, -1_000_000, 0),
            ("B2", -339_961, -1_000_000, 866_025),
            ("B3", -322_581, -372_484, 1_000_000),
            ("B4", -384_615, -111_029, 1_000_000),
            ("B5", -384_615, 111_029, 1_000_000),
            ("B6", -322_581, 372_484, 1_000_000),
            ("B7", -339_961, 1_000_000, 866_025),
        ];
        band_labels =
            anchors.iter().map(|&(label, x, y, z)| BandLabel { label, anchor: point(&f, m(x), m(y), m(z)) }).collect();
    } else if lines == 6 {
        expected = Expected {
            profile: vec![(2, 3), (3, 4)],
            dims: vec![(2, 0), (3, 1), (6, 0)],
            resonant: vec![(3, 2)],
            pure_tone: Some(true),
            derived: false,
            ..Expected::default()
        };
    } else if lines % 6 == 0 {
        expected.pure_tone = Some(true);
    }
    Ok(CatalogueEntry {
        name: format!("A({lines},1)"),
        arrangement,
        default_infinity,
        expected,
        band_labels,
        incidences: None,
    })
}

fn b_3m(lines: u64) -> Result<CatalogueEntry> {
    if lines < 6 || lines % 3 != 0 {
        return Err(Error::InvalidParameter(format!("B({lines}) needs a multiple of 3 lines, at least 6")));
    }
    let m = (lines / 3) as i64;
    let diagonals: Vec<i64> = (0..m).map(|j| 2 * j + 1).collect();
    let arrangement = polygon(2 * m as u64, &diagonals)?;
    let default_infinity = arrangement.len() - 1;
    let mut expected = Expected { pure_tone: Some(true), derived: true, ..Expected::default() };
    match m {
        2 => {
            expected.profile = vec![(2, 3), (3, 4)];
            expected.dims = vec![(2, 0), (3, 1), (6, 0)];
            expected.derived = false;
        }
        3 => {
            expected.profile = vec![(2, 6), (3, 10)];
            expected.dims = vec![(3, 1), (9, 0)];
            expected.resonant = vec![(3, 4), (9, 0)];
        }
        4 => {
            expected.profile = vec![(2, 12), (3, 16), (4, 1)];
            expected.dims = vec![(2, 0), (3, 1), (4, 0), (6, 0), (12, 0)];
            expected.resonant = vec![(2, 2), (3, 4), (4, 2)];
        }
        _ => {}
    }
    Ok(CatalogueEntry {
        name: format!("B({lines})"),
        arrangement,
        default_infinity,
        expected,
        band_labels: Vec::new(),
        incidences: None,
    })
}

/// Outcome of comparing an entry's computed data with its expectations.
#[derive(Debug, Clone)]
pub struct EntryCheck {
    pub spectrum: Spectrum,
    pub resonant: Vec<(u64, usize)>,
    /// Relations by label for each order with a one-dimensional kernel.
    pub relations: Vec<(u64, Vec<(&'static str, Cyclotomic)>)>,
    /// Empty when everything matches.
    pub mismatches: Vec<String>,
}

/// Runs the full pipeline at the default infinity and compares.
pub fn check_entry(entry: &CatalogueEntry) -> Result<EntryCheck> {
    let analysis = analyze(&entry.arrangement, entry.default_infinity)?;
    let spectrum = spectrum_of(&entry.arrangement, &analysis)?;
    let ex = &entry.expected;
    let mut mismatches = Vec::new();

    let prof: Vec<(usize, usize)> = profile(&multiple_points(&entry.arrangement)).into_iter().collect();
    if !ex.profile.is_empty() && prof != ex.profile {
        mismatches.push(format!("profile {prof:?}, expected {:?}", ex.profile));
    }
    for &(k, d) in &ex.dims {
        match spectrum.dim(k) {
            Some(got) if got == d => {}
            got => mismatches.push(format!("dim_{k} = {got:?}, expected {d}")),
        }
    }
    let resonant: Vec<(u64, usize)> = spectrum.per_order.iter().map(|o| (o.k, o.resonant.len())).collect();
    for &(k, c) in &ex.resonant {
        let got = resonant.iter().find(|r| r.0 == k).map(|r| r.1);
        if got != Some(c) {
            mismatches.push(format!("|RB_{k}| = {got:?}, expected {c}"));
        }
    }
    if let Some(p) = ex.pure_tone {
        if spectrum.pure_tone != p {
            mismatches.push(format!("pure-tone = {}, expected {p}", spectrum.pure_tone));
        }
    }

    let labels = label_bands(entry, &analysis)?;
    let mut relations = Vec::new();
    for o in &spectrum.per_order {
        if o.basis.len() == 1 && !labels.is_empty() {
            relations.push((o.k, relation_by_label(&analysis, &labels, &o.resonant, &o.basis[0], o.k)?));
        }
    }
    for rel in &ex.relations {
        let Some((_, got)) = relations.iter().find(|r| r.0 == rel.k) else {
            mismatches.push(format!("no one-dimensional relation for k = {}", rel.k));
            continue;
        };
        let field = CyclotomicField::new(2 * rel.k);
        let want: Vec<(&'static str, Cyclotomic)> =
            rel.coefficients.iter().map(|&(l, c)| (l, field.from_int(c))).collect();
        let mut got_nonzero: Vec<_> = got.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        let mut want_nonzero: Vec<_> = want.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        got_nonzero.sort_by_key(|(l, _)| *l);
        want_nonzero.sort_by_key(|(l, _)| *l);
        if got_nonzero != want_nonzero {
            let show: Vec<String> = got.iter().map(|(l, c)| format!("{l}: {c}")).collect();
            mismatches.push(format!("relation for k = {} is [{}]", rel.k, show.join(", ")));
        }
    }
    Ok(EntryCheck { spectrum, resonant, relations, mismatches })
}

/// Frozen profile of every catalogue entry, for listing.
pub fn describe(entry: &CatalogueEntry) -> String {
    let prof: BTreeMap<usize, usize> = profile(&multiple_points(&entry.arrangement));
    let parts: Vec<String> = prof.iter().map(|(m, c)| format!("{m}:{c}")).collect();
    format!("{} lines, field {}, points {}", entry.lines(), field_name(entry.arrangement.field()), parts.join(" "))
}

fn field_name(f: &RealField) -> String {
    if f.is_rational() {
        "Q".to_string()
    } else {
        format!("Q(t), {} = 0", f.minpoly())
    }
}

/// Chambers at the default infinity, for quick inspection.
pub fn default_chambers(entry: &CatalogueEntry) -> Result<Vec<Chamber>> {
    let na = crate::geometry::decone(&entry.arrangement, entry.default_infinity)?;
    Ok(enumerate_chambers(&na))
}
