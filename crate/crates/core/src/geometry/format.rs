//! The `.arr` text format.
//!
//! ```text
//! # comment
//! field t^2-115 10 11
//! line 1 0 -1/2
//! line -43/95+1/19*t -1 0
//! infinity
//! ```
//!
//! Coefficients are polynomials in `t` without spaces; `infinity` appends
//! the line `(0, 0, 1)` after all others.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::line::{ProjArrangement, ProjLine};
use crate::arith::{QPoly, Rational, RealField};
use crate::error::{Error, Result};

/// A parsed file: the arrangement and the index of the `infinity` line.
#[derive(Debug, Clone)]
pub struct ArrFile {
    pub arrangement: ProjArrangement,
    pub infinity: Option<usize>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

/// Whitespace-separated words with their 1-based columns.
fn words(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, (byte, ch)) in text.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((i, byte)),
            (true, Some((col, b))) => {
                out.push((col + 1, &text[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((col, b)) = start {
        out.push((col + 1, &text[b..]));
    }
    out
}

fn parse_uint(s: &[char], pos: &mut usize) -> Option<BigInt> {
    let begin = *pos;
    while *pos < s.len() && s[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == begin {
        return None;
    }
    s[begin..*pos].iter().collect::<String>().parse().ok()
}

/// Unsigned rational: `7`, `7/3` or `2.25`.
fn parse_number(s: &[char], pos: &mut usize) -> Option<Rational> {
    let whole = parse_uint(s, pos)?;
    if *pos < s.len() && s[*pos] == '/' {
        *pos += 1;
        let den = parse_uint(s, pos)?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(whole, den));
    }
    if *pos < s.len() && s[*pos] == '.' {
        *pos += 1;
        let begin = *pos;
        let frac = parse_uint(s, pos)?;
        let scale = num_traits::pow(BigInt::from(10), *pos - begin);
        return Some(Rational::new(whole * &scale + frac, scale));
    }
    Some(Rational::from_integer(whole))
}

/// Parses `expr := [sign] term (sign term)*`, `term := number ['*' t ['^' n]] | t ['^' n]`.
fn parse_poly(word: &str, allow_t: bool) -> core::result::Result<QPoly, (usize, String)> {
    let s: Vec<char> = word.chars().collect();
    let mut pos = 0;
    let mut acc = QPoly::zero();
    let mut first = true;
    while pos < s.len() || first {
        let mut sign = Rational::one();
        if pos < s.len() && (s[pos] == '+' || s[pos] == '-') {
            if s[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if !first {
            return Err((pos, "expected '+' or '-'".into()));
        }
        first = false;
        let coeff = if pos < s.len() && s[pos].is_ascii_digit() {
            let c = parse_number(&s, &mut pos).ok_or((pos, "malformed number".to_string()))?;
            if pos < s.len() && s[pos] == '*' {
                pos += 1;
                if pos >= s.len() || s[pos] != 't' {
                    return Err((pos, "expected 't' after '*'".into()));
                }
            }
            c
        } else if pos < s.len() && s[pos] == 't' {
            Rational::one()
        } else {
            return Err((pos, "expected a number or 't'".into()));
        };
        let mut degree = 0usize;
        if pos < s.len() && s[pos] == 't' {
            if !allow_t {
                return Err((pos, "'t' needs a field header".into()));
            }
            pos += 1;
            degree = 1;
            if pos < s.len() && s[pos] == '^' {
                pos += 1;
                let e = parse_uint(&s, &mut pos).ok_or((pos, "expected an exponent".to_string()))?;
                degree = usize::try_from(e).map_err(|_| (pos, "exponent too large".to_string()))?;
            }
        }
        acc = acc.add(&QPoly::x_pow(degree).scale(&(sign * coeff)));
    }
    Ok(acc)
}

pub fn parse_arrangement(text: &str) -> Result<ArrFile> {
    let mut field: Option<Arc<RealField>> = None;
    let mut lines: Vec<ProjLine> = Vec::new();
    let mut infinity_seen = false;
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let ws = words(body);
        let Some(&(col, directive)) = ws.first() else { continue };
        let expect = |n: usize| -> Result<()> {
            if ws.len() == n + 1 {
                Ok(())
            } else {
                let at = ws.get(n + 1).map_or(body.chars().count() + 1, |w| w.0);
                Err(syntax(ln, at, format!("'{directive}' takes {n} arguments, got {}", ws.len() - 1)))
            }
        };
        match directive {
            "field" => {
                expect(3)?;
                if field.is_some() || !lines.is_empty() {
                    return Err(syntax(ln, col, "'field' must come first and only once"));
                }
                let poly = parse_poly(ws[1].1, true).map_err(|(p, m)| syntax(ln, ws[1].0 + p, m))?;
                if poly.coeffs().iter().any(|c| !c.is_integer()) {
                    return Err(syntax(ln, ws[1].0, "field polynomial must have integer coefficients"));
                }
                let bound = |i: usize| -> Result<Rational> {
                    let w: Vec<char> = ws[i].1.chars().collect();
                    let (neg, start) = if w.first() == Some(&'-') { (true, 1) } else { (false, 0) };
                    let mut pos = start;
                    match parse_number(&w, &mut pos) {
                        Some(q) if pos == w.len() => Ok(if neg { -q } else { q }),
                        _ => Err(syntax(ln, ws[i].0, "expected a rational bound")),
                    }
                };
                let (lo, hi) = (bound(2)?, bound(3)?);
                field = Some(RealField::new(poly, lo, hi).map_err(|e| syntax(ln, col, e.to_string()))?);
            }
            "line" => {
                expect(3)?;
                let f = field.clone().unwrap_or_else(RealField::rational);
                let mut c = Vec::with_capacity(3);
                for &(wc, w) in &ws[1..] {
                    let p = parse_poly(w, field.is_some()).map_err(|(p, m)| syntax(ln, wc + p, m))?;
                    c.push(f.element(&p));
                }
                let cz = c.pop().unwrap();
                let cy = c.pop().unwrap();
                let cx = c.pop().unwrap();
                lines.push(ProjLine::new(cx, cy, cz));
            }
            "infinity" => {
                expect(0)?;
                if infinity_seen {
                    return Err(syntax(ln, col, "'infinity' may appear only once"));
                }
                infinity_seen = true;
            }
            other => return Err(syntax(ln, col, format!("unknown directive '{other}'"))),
        }
    }
    let f = field.unwrap_or_else(RealField::rational);
    let mut infinity = None;
    if infinity_seen {
        infinity = Some(lines.len());
        lines.push(ProjLine::from_ints(&f, 0, 0, 1));
    }
    let arrangement = ProjArrangement::with_field(f, lines)?;
    Ok(ArrFile { arrangement, infinity })
}

/// A short dyadic interval isolating the field generator.
fn simple_interval(f: &Arc<RealField>) -> (Rational, Rational) {
    let (alo, ahi) = f.generator().approx(96);
    let p = f.minpoly();
    let chain = p.sturm_chain();
    for k in 0u32..96 {
        let scale = Rational::from_integer(BigInt::one() << k);
        let lo = (&alo * &scale).floor() / &scale;
        let hi = (&ahi * &scale).floor() / &scale + Rational::one() / &scale;
        if !p.eval(&lo).is_zero() && !p.eval(&hi).is_zero() && QPoly::count_roots(&chain, &lo, &hi) == 1 {
            return (lo, hi);
        }
    }
    let (lo, hi) = f.interval();
    (lo.clone(), hi.clone())
}

/// Writes `arr` with line `infinity` (if any) moved last. That line is
/// written as the `infinity` directive when it is `z = 0`.
pub fn write_arrangement(arr: &ProjArrangement, infinity: Option<usize>, header: &str) -> String {
    let mut out = String::new();
    for h in header.lines() {
        let _ = writeln!(out, "# {h}");
    }
    let f = arr.field();
    if !f.is_rational() {
        let (lo, hi) = simple_interval(f);
        let _ = writeln!(out, "field {} {} {}", f.minpoly(), lo, hi);
    }
    let mut order: Vec<usize> = (0..arr.len()).filter(|&i| Some(i) != infinity).collect();
    order.extend(infinity);
    for i in order {
        let l = arr.line(i);
        if Some(i) == infinity && l.a.is_zero() && l.b.is_zero() {
            out.push_str("infinity\n");
        } else {
            let _ = writeln!(out, "line {} {} {}", l.a, l.b, l.c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{multiple_points, profile};

    #[test]
    fn a3_text() {
        let file = parse_arrangement("line 1 0 0\nline 1 0 -1\nline 0 1 0\nline 0 1 -1\nline 1 -1 0\ninfinity").unwrap();
        assert_eq!(file.arrangement.len(), 6);
        assert_eq!(file.infinity, Some(5));
        let p = profile(&multiple_points(&file.arrangement));
        assert_eq!(p.get(&3), Some(&4));
        assert_eq!(p.get(&2), Some(&3));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(parse_arrangement("line 1 0 0\nline 2 0 0\nline 0 1 0").unwrap_err(), Error::DuplicateLine {
            first: 0,
            second: 1
        });
        assert_eq!(parse_arrangement("line 0 0 0").unwrap_err(), Error::DegenerateLine { index: 0 });
        assert_eq!(parse_arrangement("line 1 0 0\nline 0 1 0").unwrap_err(), Error::TooFewLines { count: 2 });
    }

    #[test]
    fn syntax_positions() {
        let e = parse_arrangement("line 1 0 0\nline 1 x 0\n").unwrap_err();
        assert_eq!(e, Error::Syntax { line: 2, column: 8, message: "expected a number or 't'".into() });
        let e = parse_arrangement("  lien 1 0 0").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, column: 3, .. }));
        let e = parse_arrangement("line 1 t 0").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, column: 8, .. }));
        let e = parse_arrangement("line 1 0").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, column: 9, .. }));
    }

    #[test]
    fn field_coefficients_and_comments() {
        let text = "# golden\nfield t^2-115 10 11\nline -43/95+1/19*t -1 0.5 # trailing\nline 1 0 0\nline 0 1 -t\n";
        let file = parse_arrangement(text).unwrap();
        let l = file.arrangement.line(0);
        assert_eq!(l.a.coeffs(), &[Rational::new((-43).into(), 95.into()), Rational::new(1.into(), 19.into())]);
        assert_eq!(l.c.as_rational(), Some(&Rational::new(1.into(), 2.into())));
        assert_eq!(file.infinity, None);
    }

    #[test]
    fn write_then_read() {
        let f = RealField::cos_field(24);
        let t = f.generator();
        let lines = alloc::vec![
            ProjLine::new(t.clone(), f.from_int(1), f.from_int(-2)),
            ProjLine::from_ints(&f, 1, 0, 0),
            ProjLine::new(f.from_int(0), t.clone(), f.from_int(-1)),
            ProjLine::from_ints(&f, 0, 0, 3),
        ];
        let arr = ProjArrangement::with_field(f.clone(), lines).unwrap();
        let text = write_arrangement(&arr, Some(3), "test");
        assert!(text.ends_with("infinity\n"));
        let back = parse_arrangement(&text).unwrap();
        assert_eq!(back.arrangement.field().minpoly(), f.minpoly());
        for i in 0..3 {
            let (a, b) = (back.arrangement.line(i), arr.line(i));
            assert_eq!(
                [a.a.coeffs(), a.b.coeffs(), a.c.coeffs()],
                [b.a.coeffs(), b.b.coeffs(), b.c.coeffs()]
            );
        }
        assert_eq!(write_arrangement(&back.arrangement, back.infinity, "test"), text);
    }
}
