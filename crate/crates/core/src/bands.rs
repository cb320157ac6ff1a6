//! Bands, resonance, standing waves and the eigenspace dimensions they
//! compute.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::arith::{totient, CycMatrix, Cyclotomic, CyclotomicField, Kernel};
use crate::complex::{local_system_cohomology, LocalSystem};
use crate::error::{Error, Result};
use crate::geometry::{decone, distance, enumerate_chambers, Chamber, NormalizedArrangement, ProjArrangement};

/// The strip between two consecutive parallel lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Band {
    /// Normalized index of the boundary line with the smaller crossing.
    pub lower: usize,
    pub upper: usize,
    /// Designated unbounded chamber: the end going up in the chart.
    pub u1: usize,
    /// The opposite unbounded chamber.
    pub u2: usize,
    /// Every chamber inside the band, ascending.
    pub interior: Vec<usize>,
    pub length: usize,
    /// Lines of `cA` through the band's point at infinity.
    pub infinity_multiplicity: usize,
}

impl Band {
    pub fn is_resonant(&self, k: u64) -> bool {
        self.length as u64 % k == 0
    }
}

/// One band per pair of consecutive lines in each parallel class, ordered
/// by lower line.
pub fn bands(arr: &NormalizedArrangement, chambers: &[Chamber]) -> Result<Vec<Band>> {
    let n = arr.n();
    let mut class_of: Vec<Option<usize>> = alloc::vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i].is_some() {
            continue;
        }
        let members: Vec<usize> = (i..n).filter(|&j| arr.line(i).is_parallel(arr.line(j))).collect();
        for &j in &members {
            class_of[j] = Some(classes.len());
        }
        classes.push(members);
    }
    let mut out = Vec::new();
    for class in &classes {
        for w in class.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let interior: Vec<usize> =
                (0..chambers.len()).filter(|&c| chambers[c].positive(lo) && !chambers[c].positive(hi)).collect();
            let ends: Vec<usize> = interior.iter().copied().filter(|&c| !chambers[c].bounded).collect();
            let top: Vec<usize> = ends.iter().copied().filter(|&c| chambers[c].top).collect();
            let bottom: Vec<usize> = ends.iter().copied().filter(|&c| chambers[c].bottom).collect();
            if ends.len() != 2 || top.len() != 1 || bottom.len() != 1 || top == bottom {
                return Err(Error::Internal(format!("band ({lo}, {hi}) does not have two opposite ends")));
            }
            let (u1, u2) = (top[0], bottom[0]);
            let length = distance(&chambers[u1], &chambers[u2]);
            let infinity_multiplicity = class.len() + 1;
            if length + infinity_multiplicity != n + 1 {
                return Err(Error::Internal(format!(
                    "band ({lo}, {hi}) has length {length} but {infinity_multiplicity} lines at infinity"
                )));
            }
            out.push(Band { lower: lo, upper: hi, u1, u2, interior, length, infinity_multiplicity });
        }
    }
    out.sort_by_key(|b| (b.lower, b.upper));
    Ok(out)
}

pub fn check_order(k: u64, lines: usize) -> Result<()> {
    if k < 2 || lines as u64 % k != 0 {
        return Err(Error::InvalidOrder { k, lines });
    }
    Ok(())
}

/// Indices of the k-resonant bands; `k` must divide `n + 1`.
pub fn resonant_bands(bands: &[Band], k: u64, n: usize) -> Result<Vec<usize>> {
    check_order(k, n + 1)?;
    Ok((0..bands.len()).filter(|&b| bands[b].is_resonant(k)).collect())
}

/// `∇(B)` for `λ = e^{2πi/k}` over `Q(ζ_{2k})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandingWave {
    pub k: u64,
    /// Coefficient of each chamber in the band, by ascending chamber index.
    pub coeffs: Vec<(usize, Cyclotomic)>,
}

impl StandingWave {
    /// Chambers with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().filter(|(_, c)| !c.is_zero()).map(|(i, _)| *i)
    }

    pub fn coefficient(&self, chamber: usize) -> Option<&Cyclotomic> {
        self.coeffs.iter().find(|(i, _)| *i == chamber).map(|(_, c)| c)
    }
}

/// Coefficient of `C` is `ζ_{2k}^d - ζ_{2k}^{-d}` with `d = d(u1, C)`.
pub fn standing_wave(band: &Band, k: u64, chambers: &[Chamber]) -> Result<StandingWave> {
    standing_wave_from(band, band.u1, k, chambers, &CyclotomicField::new(2 * k))
}

/// Standing wave measured from an arbitrary end of the band.
pub fn standing_wave_from(
    band: &Band,
    origin: usize,
    k: u64,
    chambers: &[Chamber],
    field: &Arc<CyclotomicField>,
) -> Result<StandingWave> {
    if k < 2 || !band.is_resonant(k) {
        return Err(Error::NotResonant { length: band.length, k });
    }
    let coeffs: Vec<(usize, Cyclotomic)> = band
        .interior
        .iter()
        .map(|&c| {
            let d = distance(&chambers[origin], &chambers[c]) as i64;
            (c, &field.root(d) - &field.root(-d))
        })
        .collect();
    let wave = StandingWave { k, coeffs };
    for end in [band.u1, band.u2] {
        if !wave.coefficient(end).is_some_and(Cyclotomic::is_zero) {
            return Err(Error::Internal("standing wave does not vanish at a band end".into()));
        }
    }
    if wave.support().any(|c| !chambers[c].bounded) {
        return Err(Error::Internal("standing wave supported on an unbounded chamber".into()));
    }
    Ok(wave)
}

/// The matrix of `∇ : C[RB_k] -> C[ch]` restricted to the union of wave
/// supports, and its kernel.
#[derive(Debug, Clone)]
pub struct NablaKernel {
    pub k: u64,
    /// Band indices of `RB_k`, the columns.
    pub bands: Vec<usize>,
    /// Chamber indices of the rows.
    pub rows: Vec<usize>,
    pub matrix: CycMatrix,
    pub kernel: Kernel,
}

pub fn nabla_kernel(arr: &NormalizedArrangement, chambers: &[Chamber], all_bands: &[Band], k: u64) -> Result<NablaKernel> {
    let rb = resonant_bands(all_bands, k, arr.n())?;
    let field = CyclotomicField::new(2 * k);
    let waves: Vec<StandingWave> = rb
        .iter()
        .map(|&b| standing_wave_from(&all_bands[b], all_bands[b].u1, k, chambers, &field))
        .collect::<Result<_>>()?;
    let mut rows: Vec<usize> = waves.iter().flat_map(|w| w.support().collect::<Vec<_>>()).collect();
    rows.sort_unstable();
    rows.dedup();
    let mut matrix = CycMatrix::zeros(&field, rows.len(), rb.len());
    for (col, w) in waves.iter().enumerate() {
        for (c, v) in &w.coeffs {
            if let Ok(r) = rows.binary_search(c) {
                matrix.set(r, col, v.clone());
            }
        }
    }
    let kernel = matrix.kernel();
    Ok(NablaKernel { k, bands: rb, rows, matrix, kernel })
}

/// Everything computed from one choice of line at infinity.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub normalized: NormalizedArrangement,
    pub chambers: Vec<Chamber>,
    pub bands: Vec<Band>,
}

pub fn analyze(arr: &ProjArrangement, infinity: usize) -> Result<Analysis> {
    let normalized = decone(arr, infinity)?;
    let chambers = enumerate_chambers(&normalized);
    let bands = bands(&normalized, &chambers)?;
    Ok(Analysis { normalized, chambers, bands })
}

impl Analysis {
    pub fn n(&self) -> usize {
        self.normalized.n()
    }

    pub fn nabla_kernel(&self, k: u64) -> Result<NablaKernel> {
        nabla_kernel(&self.normalized, &self.chambers, &self.bands, k)
    }
}

/// Eigenspace data for the primitive k-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpectrum {
    pub k: u64,
    /// `dim H¹(F)_λ` for `λ = e^{2πi/k}`.
    pub dim: usize,
    /// Relation vectors over the resonant bands.
    pub basis: Vec<Vec<Cyclotomic>>,
    /// Band indices of `RB_k`.
    pub resonant: Vec<usize>,
    /// `(j, dim)` for each primitive root `e^{2πij/k}` checked by the oracle.
    pub oracle_checks: Vec<(u64, usize)>,
    /// False if some primitive root disagreed with `dim`.
    pub galois_constant: bool,
}

impl OrderSpectrum {
    /// Sum of the dimensions over all primitive k-th roots.
    pub fn total(&self) -> usize {
        if self.galois_constant {
            totient(self.k) as usize * self.dim
        } else {
            self.oracle_checks.iter().map(|(_, d)| d).sum()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub n: usize,
    pub per_order: Vec<OrderSpectrum>,
    /// `dim H¹(F)_1 = n`.
    pub fixed_part: usize,
    pub b1: usize,
    pub pure_tone: bool,
    pub warnings: Vec<String>,
}

impl Spectrum {
    pub fn order(&self, k: u64) -> Option<&OrderSpectrum> {
        self.per_order.iter().find(|o| o.k == k)
    }

    pub fn dim(&self, k: u64) -> Option<usize> {
        self.order(k).map(|o| o.dim)
    }

    /// `(k, dim_k)` pairs.
    pub fn dims(&self) -> Vec<(u64, usize)> {
        self.per_order.iter().map(|o| (o.k, o.dim)).collect()
    }
}

pub fn divisors(m: u64) -> Vec<u64> {
    (2..=m).filter(|k| m % k == 0).collect()
}

/// The other primitive root checked when `dim_k > 0`.
fn non_standard_root(k: u64) -> Option<u64> {
    (2..k).find(|j| j.gcd(&k) == 1)
}

pub fn milnor_spectrum(arr: &ProjArrangement, infinity: usize) -> Result<Spectrum> {
    let analysis = analyze(arr, infinity)?;
    spectrum_of(arr, &analysis)
}

/// Spectrum from a prepared analysis of `arr`.
pub fn spectrum_of(arr: &ProjArrangement, analysis: &Analysis) -> Result<Spectrum> {
    let n = analysis.n();
    let infinity = analysis.normalized.infinity_index();
    let mut per_order = Vec::new();
    let mut warnings = Vec::new();
    for k in divisors(n as u64 + 1) {
        let nk = analysis.nabla_kernel(k)?;
        let dim = nk.kernel.dimension;
        let mut oracle_checks = Vec::new();
        let mut galois_constant = true;
        if dim > 0 {
            if let Some(j) = non_standard_root(k) {
                let h = oracle_h1(arr, infinity, k, j as i64, n)?;
                oracle_checks.push((j, h));
                if h != dim {
                    galois_constant = false;
                    warnings.push(format!("k = {k}: root j = {j} gives {h}, not {dim}; reporting per root"));
                    oracle_checks.clear();
                    for j in (1..k).filter(|j| j.gcd(&k) == 1) {
                        oracle_checks.push((j, oracle_h1(arr, infinity, k, j as i64, n)?));
                    }
                }
            }
        }
        per_order.push(OrderSpectrum { k, dim, basis: nk.kernel.basis, resonant: nk.bands, oracle_checks, galois_constant });
    }
    let b1 = n + per_order.iter().map(OrderSpectrum::total).sum::<usize>();
    let pure_tone = per_order.iter().any(|o| o.k == 3)
        && per_order.iter().all(|o| if o.k == 3 { o.dim == 1 && o.galois_constant } else { o.dim == 0 });
    Ok(Spectrum { n, per_order, fixed_part: n, b1, pure_tone, warnings })
}

fn oracle_h1(arr: &ProjArrangement, infinity: usize, k: u64, j: i64, n: usize) -> Result<usize> {
    Ok(local_system_cohomology(arr, infinity, &LocalSystem::eigenvalue(k, j, n))?.h1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RealField;
    use crate::geometry::ProjLine;
    use alloc::vec;

    fn arr(rows: &[[i64; 3]]) -> ProjArrangement {
        let f = RealField::rational();
        ProjArrangement::new(rows.iter().map(|r| ProjLine::from_ints(&f, r[0], r[1], r[2])).collect()).unwrap()
    }

    fn a3() -> ProjArrangement {
        arr(&[[1, 0, 0], [1, 0, -1], [0, 1, 0], [0, 1, -1], [1, -1, 0], [0, 0, 1]])
    }

    #[test]
    fn a3_bands_and_waves() {
        let a = analyze(&a3(), 5).unwrap();
        assert_eq!(a.bands.len(), 2);
        assert!(a.bands.iter().all(|b| b.length == 3 && b.infinity_multiplicity == 3));
        assert_eq!(resonant_bands(&a.bands, 3, 5).unwrap(), vec![0, 1]);
        assert!(resonant_bands(&a.bands, 2, 5).unwrap().is_empty());
        assert_eq!(resonant_bands(&a.bands, 4, 5).unwrap_err(), Error::InvalidOrder { k: 4, lines: 6 });

        let f = CyclotomicField::new(6);
        let s = &f.root(1) - &f.root(-1);
        for b in &a.bands {
            let w = standing_wave(b, 3, &a.chambers).unwrap();
            let support: Vec<usize> = w.support().collect();
            assert_eq!(support.len(), 2);
            for c in support {
                assert_eq!(w.coefficient(c).unwrap(), &s);
            }
            assert_eq!(standing_wave(b, 2, &a.chambers).unwrap_err(), Error::NotResonant { length: 3, k: 2 });
        }
    }

    #[test]
    fn a3_spectrum() {
        let s = milnor_spectrum(&a3(), 5).unwrap();
        assert_eq!(s.dims(), vec![(2, 0), (3, 1), (6, 0)]);
        assert_eq!(s.b1, 7);
        assert!(s.pure_tone);
        let f = CyclotomicField::new(6);
        assert_eq!(s.order(3).unwrap().basis, vec![vec![f.one(), f.from_int(-1)]]);
        assert_eq!(s.order(3).unwrap().oracle_checks, vec![(2, 1)]);
    }

    #[test]
    fn spectrum_at_another_infinity() {
        for inf in 0..6 {
            assert_eq!(milnor_spectrum(&a3(), inf).unwrap().dims(), vec![(2, 0), (3, 1), (6, 0)]);
        }
    }

    #[test]
    fn generic_lines_have_no_bands() {
        let a = analyze(&arr(&[[1, 0, 0], [0, 1, 0], [1, 1, -1], [0, 0, 1]]), 3).unwrap();
        assert!(a.bands.is_empty());
    }

    #[test]
    fn endpoint_swap_sign_law() {
        // Any band: measuring from u2 gives (-1)^{L/k + 1} times the wave.
        let a = analyze(&a3(), 5).unwrap();
        let f = CyclotomicField::new(6);
        for b in &a.bands {
            let w1 = standing_wave_from(b, b.u1, 3, &a.chambers, &f).unwrap();
            let w2 = standing_wave_from(b, b.u2, 3, &a.chambers, &f).unwrap();
            let same = (b.length / 3) % 2 == 1;
            for ((c1, x), (c2, y)) in w1.coeffs.iter().zip(&w2.coeffs) {
                assert_eq!(c1, c2);
                assert_eq!(*x, if same { y.clone() } else { -y.clone() });
            }
        }
    }
}
