//! Monodromy files, seed files and the calibration record.
//!
//! Monodromy: one `gamma<i> -> (a b)` per line, `gamma<i>'` or `γ<i>` also
//! accepted, optional `degree d`. Seeds: `factor <k> -> class (u, v)` or
//! `factor <k> -> conjugate-of <j> by <k1>^<e1> <k2> ...`. Calibration:
//! `conjugation successive|product` and `band standard|swapped`.

use braidmon::covers::MonodromyMap;
use braidmon::halftwist::{BandRule, ConjugationRule, Conventions};
use braidmon::mcg::{FactorPower, HomologyClass, Seed, Seeds};
use braidmon::Presentation;

use crate::error::ParseError;

fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn col_of(raw: &str, needle: &str) -> usize {
    raw.find(needle).map_or(1, |b| raw[..b].chars().count() + 1)
}

/// A parsed monodromy file: generator name and transposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyFile {
    /// Number of sheets.
    pub degree: usize,
    /// `(γ-name, (a, b))` in file order.
    pub entries: Vec<(String, (usize, usize))>,
}

fn gamma_name(tok: &str) -> Option<String> {
    let rest = tok.strip_prefix("gamma").or_else(|| tok.strip_prefix('γ'))?;
    let digits = rest.trim_end_matches(['\'', '′']);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let primes = rest.len() - digits.len();
    Some(format!("γ{digits}{}", if primes > 0 { "'" } else { "" }))
}

fn transposition(s: &str) -> Option<(usize, usize)> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    let parts: Vec<&str> = inner.split([' ', ',']).filter(|p| !p.is_empty()).collect();
    match parts[..] {
        [a, b] => Some((a.parse().ok()?, b.parse().ok()?)),
        _ => None,
    }
}

/// Parses a monodromy file.
pub fn parse_monodromy(text: &str) -> Result<MonodromyFile, ParseError> {
    let mut degree = None;
    let mut entries: Vec<(String, (usize, usize))> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = content(raw);
        if s.is_empty() {
            continue;
        }
        if let Some(d) = s.strip_prefix("degree") {
            let d = d.trim().parse().map_err(|_| ParseError::at(line, col_of(raw, d.trim()), "bad degree"))?;
            degree = Some(d);
            continue;
        }
        let (lhs, rhs) =
            s.split_once("->").ok_or_else(|| ParseError::at(line, col_of(raw, s), "expected 'gamma<i> -> (a b)'"))?;
        let name = gamma_name(lhs.trim())
            .ok_or_else(|| ParseError::at(line, col_of(raw, lhs.trim()), format!("bad generator {:?}", lhs.trim())))?;
        let t = transposition(rhs).ok_or_else(|| {
            ParseError::at(line, col_of(raw, rhs.trim()), format!("bad transposition {:?}", rhs.trim()))
        })?;
        if entries.iter().any(|(n, _)| *n == name) {
            return Err(ParseError::at(line, 1, format!("{name} assigned twice")));
        }
        entries.push((name, t));
    }
    if entries.is_empty() {
        return Err(ParseError::at(1, 1, "no assignments"));
    }
    let degree = degree.unwrap_or_else(|| entries.iter().map(|(_, (a, b))| *a.max(b)).max().unwrap_or(0));
    Ok(MonodromyFile { degree, entries })
}

impl MonodromyFile {
    /// The map on a presentation's generators. A primed generator without an
    /// entry takes the image of its unprimed partner.
    pub fn resolve(&self, p: &Presentation) -> Result<MonodromyMap, braidmon::Error> {
        let find = |n: &str| self.entries.iter().find(|(e, _)| e == n).map(|(_, t)| *t);
        let mut images = Vec::new();
        for g in p.generators() {
            let t = find(g)
                .or_else(|| g.strip_suffix('\'').and_then(find))
                .ok_or_else(|| braidmon::Error::Invalid(format!("no monodromy for {g}")))?;
            images.push(t);
        }
        MonodromyMap::new(self.degree, images)
    }
}

fn parse_class(s: &str) -> Option<HomologyClass> {
    let (u, v) = transposition_like(s)?;
    Some(HomologyClass::new(u, v))
}

fn transposition_like(s: &str) -> Option<(i64, i64)> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

fn parse_factor_power(tok: &str) -> Option<FactorPower> {
    let (k, e) = match tok.split_once('^') {
        Some((k, e)) => (k, e.parse().ok()?),
        None => (tok, 1),
    };
    Some(FactorPower { factor: k.parse().ok()?, exponent: e })
}

/// Parses a seed file.
pub fn parse_seeds(text: &str) -> Result<Seeds, ParseError> {
    let mut out: Seeds = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = content(raw);
        if s.is_empty() {
            continue;
        }
        let err = |msg: &str| ParseError::at(line, col_of(raw, s), msg.to_string());
        let rest = s.strip_prefix("factor").ok_or_else(|| err("expected 'factor <k> -> ...'"))?;
        let (k, rule) = rest.split_once("->").ok_or_else(|| err("expected '->'"))?;
        let k: usize = k.trim().parse().map_err(|_| ParseError::at(line, col_of(raw, k.trim()), "bad factor index"))?;
        let rule = rule.trim();
        let seed = if let Some(c) = rule.strip_prefix("class") {
            Seed::Class(
                parse_class(c)
                    .ok_or_else(|| ParseError::at(line, col_of(raw, c.trim()), "bad class, expected (u, v)"))?,
            )
        } else if let Some(c) = rule.strip_prefix("conjugate-of") {
            let (base, word) = c.split_once(" by ").ok_or_else(|| err("expected 'conjugate-of <j> by <word>'"))?;
            let base =
                base.trim().parse().map_err(|_| ParseError::at(line, col_of(raw, base.trim()), "bad base index"))?;
            let mut by = Vec::new();
            for tok in word.split_whitespace() {
                by.push(
                    parse_factor_power(tok)
                        .ok_or_else(|| ParseError::at(line, col_of(raw, tok), format!("bad letter {tok:?}")))?,
                );
            }
            Seed::ConjugateOf { base, by }
        } else {
            return Err(err("expected 'class' or 'conjugate-of'"));
        };
        if out.iter().any(|(j, _)| *j == k) {
            return Err(ParseError::at(line, 1, format!("factor {k} seeded twice")));
        }
        out.push((k, seed));
    }
    Ok(out)
}

/// Parses a calibration record.
pub fn parse_calibration(text: &str) -> Result<Conventions, ParseError> {
    let mut conv = Conventions::CALIBRATED;
    for (i, raw) in text.lines().enumerate() {
        let s = content(raw);
        if s.is_empty() {
            continue;
        }
        let bad = || ParseError::at(i + 1, col_of(raw, s), format!("unrecognised calibration line {s:?}"));
        let (key, value) = s.split_once(char::is_whitespace).ok_or_else(bad)?;
        match (key, value.trim()) {
            ("conjugation", "successive") => conv.conjugation = ConjugationRule::Successive,
            ("conjugation", "product") => conv.conjugation = ConjugationRule::Product,
            ("band", "standard") => conv.band = BandRule::Standard,
            ("band", "swapped") => conv.band = BandRule::Swapped,
            _ => return Err(bad()),
        }
    }
    Ok(conv)
}

/// Writes a calibration record.
pub fn print_calibration(c: Conventions) -> String {
    let conj = match c.conjugation {
        ConjugationRule::Successive => "successive",
        ConjugationRule::Product => "product",
    };
    let band = match c.band {
        BandRule::Standard => "standard",
        BandRule::Swapped => "swapped",
    };
    format!("conjugation {conj}\nband {band}\n")
}
