//! SVG 1.1 rendering of a deconed arrangement in its normalized chart.

use std::collections::BTreeMap;
use std::fmt::Write;

use milnor_core::bands::{standing_wave, Analysis};
use milnor_core::Result;

type P = (f64, f64);

const WIDTH: f64 = 800.0;
const PALETTE: [&str; 6] = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628"];

struct Frame {
    lo: P,
    hi: P,
    scale: f64,
}

impl Frame {
    fn new(vertices: &[P]) -> Frame {
        let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
        for &(x, y) in vertices {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        if vertices.is_empty() {
            (lo, hi) = ((-1.0, -1.0), (1.0, 1.0));
        }
        let pad = |a: f64, b: f64| {
            let m = if b - a > 0.0 { 0.1 * (b - a) } else { 1.0 };
            (a - m, b + m)
        };
        let (x0, x1) = pad(lo.0, hi.0);
        let (y0, y1) = pad(lo.1, hi.1);
        let scale = WIDTH / (x1 - x0).max(y1 - y0);
        Frame { lo: (x0, y0), hi: (x1, y1), scale }
    }

    fn size(&self) -> P {
        ((self.hi.0 - self.lo.0) * self.scale, (self.hi.1 - self.lo.1) * self.scale)
    }

    /// Chart to SVG coordinates; y grows downward in SVG.
    fn map(&self, (x, y): P) -> P {
        ((x - self.lo.0) * self.scale, (self.hi.1 - y) * self.scale)
    }

    fn corners(&self) -> Vec<P> {
        vec![self.lo, (self.hi.0, self.lo.1), self.hi, (self.lo.0, self.hi.1)]
    }

    fn clamp(&self, (x, y): P) -> P {
        let inset = 0.04 * (self.hi.0 - self.lo.0).max(self.hi.1 - self.lo.1);
        (x.clamp(self.lo.0 + inset, self.hi.0 - inset), y.clamp(self.lo.1 + inset, self.hi.1 - inset))
    }
}

/// Keeps the part of `poly` where `positive == (a x + b y + c > 0)`.
fn clip(poly: &[P], (a, b, c): (f64, f64, f64), positive: bool) -> Vec<P> {
    let f = |p: P| {
        let v = a * p.0 + b * p.1 + c;
        if positive {
            v
        } else {
            -v
        }
    };
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        let (fp, fq) = (f(p), f(q));
        if fp >= 0.0 {
            out.push(p);
        }
        if (fp > 0.0 && fq < 0.0) || (fp < 0.0 && fq > 0.0) {
            let t = fp / (fp - fq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

/// Segment of `a x + b y + c = 0` inside the frame.
fn segment(frame: &Frame, (a, b, c): (f64, f64, f64)) -> Option<(P, P)> {
    let eps = 1e-9 * (frame.hi.0 - frame.lo.0 + frame.hi.1 - frame.lo.1);
    let mut hits = Vec::new();
    if b != 0.0 {
        for x in [frame.lo.0, frame.hi.0] {
            let y = -(a * x + c) / b;
            if y >= frame.lo.1 - eps && y <= frame.hi.1 + eps {
                hits.push((x, y));
            }
        }
    }
    if a != 0.0 {
        for y in [frame.lo.1, frame.hi.1] {
            let x = -(b * y + c) / a;
            if x >= frame.lo.0 - eps && x <= frame.hi.0 + eps {
                hits.push((x, y));
            }
        }
    }
    let t = |p: &P| -b * p.0 + a * p.1;
    let first = hits.iter().min_by(|p, q| t(p).total_cmp(&t(q)))?;
    let last = hits.iter().max_by(|p, q| t(p).total_cmp(&t(q)))?;
    Some((*first, *last))
}

pub fn render(analysis: &Analysis, k: Option<u64>, title: &str) -> Result<String> {
    let na = &analysis.normalized;
    let coeffs: Vec<(f64, f64, f64)> = na.lines().iter().map(|l| (l.a.to_f64(), l.b.to_f64(), l.c.to_f64())).collect();
    let vertices: Vec<P> = na.vertices().iter().map(|(x, y)| (x.to_f64(), y.to_f64())).collect();
    let frame = Frame::new(&vertices);
    let (w, h) = frame.size();

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let mut labels: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    if let Some(k) = k {
        let resonant = analysis.bands.iter().enumerate().filter(|(_, b)| b.is_resonant(k));
        for (colour, (idx, band)) in resonant.enumerate() {
            let u1 = &analysis.chambers[band.u1];
            let mut poly = frame.corners();
            poly = clip(&poly, coeffs[band.lower], u1.positive(band.lower));
            poly = clip(&poly, coeffs[band.upper], u1.positive(band.upper));
            let pts: Vec<String> = poly.iter().map(|&p| frame.map(p)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
            let _ = writeln!(
                s,
                r#"<polygon points="{}" fill="{}" fill-opacity="0.18" stroke="none"><title>band {idx}</title></polygon>"#,
                pts.join(" "),
                PALETTE[colour % PALETTE.len()]
            );
            for ch in standing_wave(band, k, &analysis.chambers)?.support() {
                labels.entry(ch).or_default().push(format!("B{idx}"));
            }
        }
    }

    for (i, &l) in coeffs.iter().enumerate() {
        let Some((p, q)) = segment(&frame, l) else { continue };
        let ((x1, y1), (x2, y2)) = (frame.map(p), frame.map(q));
        let _ = writeln!(s, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1.5"/>"#);
        let _ = writeln!(
            s,
            r##"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13" fill="#555">H{}</text>"##,
            x1 + 0.94 * (x2 - x1) + 4.0,
            y1 + 0.94 * (y2 - y1) - 4.0,
            na.original_index(i)
        );
    }
    for (x, y) in &vertices {
        let (px, py) = frame.map((*x, *y));
        let _ = writeln!(s, r#"<circle cx="{px:.2}" cy="{py:.2}" r="2.5" fill="black"/>"#);
    }
    for (ch, names) in &labels {
        let (x, y) = &analysis.chambers[*ch].witness;
        let (px, py) = frame.map(frame.clamp((x.to_f64(), y.to_f64())));
        let _ = writeln!(
            s,
            r#"<text x="{px:.2}" y="{py:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{}</text>"#,
            names.join(",")
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clip_square_by_diagonal() {
        let square = vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        let half = clip(&square, (1.0, -1.0, 0.0), true);
        assert_eq!(half.len(), 3);
        assert!(half.iter().all(|p| p.0 >= p.1));
    }

    #[test]
    fn frame_pads_by_a_tenth() {
        let f = Frame::new(&[(0.0, 0.0), (10.0, 5.0)]);
        assert_eq!(f.lo, (-1.0, -0.5));
        assert_eq!(f.hi, (11.0, 5.5));
    }

    #[test]
    fn segment_spans_frame() {
        let f = Frame::new(&[(0.0, 0.0), (10.0, 10.0)]);
        let (p, q) = segment(&f, (0.0, 1.0, -5.0)).unwrap();
        assert!((p.1 - 5.0).abs() < 1e-9 && (q.1 - 5.0).abs() < 1e-9);
        assert!(((p.0 - q.0).abs() - 12.0).abs() < 1e-9);
    }
}
