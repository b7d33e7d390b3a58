//! Reader and writer for factorization files.
//!
//! ```text
//! strands 6 labels 1,1',2,2',3,3'
//! # comment
//! ( Z{1',3}^2 ) ^ [ Z{2', 3 3'}^-2 ]
//! ~Z{2, 3 3'}^2
//! FT{1,2,3}
//! ```
//!
//! A factor is a base, then an optional power, then any number of
//! conjugator groups `^[A, B]`. Parentheses may wrap a factor; a power
//! after a parenthesised factor multiplies its exponent.

use braidmon::factorization::Bmf;
use braidmon::halftwist::{Base, Endpoint, Factor, Label, LabelMap, Side};

use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(i64),
    Prime,
    Sym(char),
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex_line(text: &str, line: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| ParseError::at(line, col, format!("number {s} out of range")))?;
            out.push(Spanned { tok: Tok::Int(n), line, col });
            continue;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Spanned { tok: Tok::Word(chars[start..i].iter().collect()), line, col });
            continue;
        } else if c == '\'' || c == '′' {
            Tok::Prime
        } else if "{}[](),^~".contains(c) {
            Tok::Sym(c)
        } else {
            return Err(ParseError::at(line, col, format!("unexpected character {c:?}")));
        };
        out.push(Spanned { tok, line, col });
        i += 1;
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [Spanned],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or((self.line, self.end_col), |s| (s.line, s.col))
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        let (l, c) = self.here();
        ParseError::at(l, c, msg)
    }

    fn bump(&mut self) -> Option<&'a Tok> {
        let t = self.toks.get(self.pos).map(|s| &s.tok);
        self.pos += 1;
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Sym(x)) if *x == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected '{c}'"))),
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(x)) if *x == c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self, what: &str) -> Result<i64, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn label(&mut self, map: Option<&LabelMap>) -> Result<Label, ParseError> {
        let (l, c) = self.here();
        let n = self.int("a label")?;
        if n <= 0 || n > u32::MAX as i64 {
            return Err(ParseError::at(l, c, format!("label index {n} must be positive")));
        }
        let primed = matches!(self.peek(), Some(Tok::Prime));
        if primed {
            self.pos += 1;
        }
        let label = Label { index: n as u32, primed };
        if let Some(m) = map {
            if m.position(label).is_err() {
                return Err(ParseError::at(l, c, format!("unknown label {label}")));
            }
        }
        Ok(label)
    }

    fn at_label(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_)))
    }
}

fn endpoint(cur: &mut Cursor, map: &LabelMap) -> Result<Endpoint, ParseError> {
    let a = cur.label(Some(map))?;
    if cur.at_label() {
        let b = cur.label(Some(map))?;
        Ok(Endpoint::Pair(a, b))
    } else {
        Ok(Endpoint::Single(a))
    }
}

fn power(cur: &mut Cursor) -> Result<i32, ParseError> {
    let (l, c) = cur.here();
    let n = cur.int("an exponent or '['")?;
    i32::try_from(n).map_err(|_| ParseError::at(l, c, format!("malformed power {n}")))
}

fn base(cur: &mut Cursor, map: &LabelMap) -> Result<Factor, ParseError> {
    let side = if cur.eat_sym('~') { Side::Above } else { Side::Below };
    let (l, c) = cur.here();
    match cur.bump() {
        Some(Tok::Word(w)) if w == "Z" => {
            cur.expect_sym('{')?;
            let a = endpoint(cur, map)?;
            cur.expect_sym(',')?;
            let b = endpoint(cur, map)?;
            cur.expect_sym('}')?;
            Ok(Factor::band(a, b, side, 1))
        }
        Some(Tok::Word(w)) if w == "FT" => {
            if side == Side::Above {
                return Err(ParseError::at(l, c, "a full twist has no side"));
            }
            cur.expect_sym('{')?;
            let mut labels = vec![cur.label(Some(map))?];
            while cur.eat_sym(',') {
                labels.push(cur.label(Some(map))?);
            }
            cur.expect_sym('}')?;
            if labels.len() < 2 {
                return Err(ParseError::at(l, c, "a full twist needs at least two labels"));
            }
            Ok(Factor::full_twist(labels))
        }
        _ => Err(ParseError::at(l, c, "expected 'Z', '~Z', 'FT' or '('")),
    }
}

fn factor(cur: &mut Cursor, map: &LabelMap) -> Result<Factor, ParseError> {
    let (mut f, grouped) = if cur.eat_sym('(') {
        let f = factor(cur, map)?;
        cur.expect_sym(')')?;
        (f, true)
    } else {
        (base(cur, map)?, false)
    };
    let mut powered = false;
    while cur.eat_sym('^') {
        if cur.eat_sym('[') {
            let mut chain = vec![factor(cur, map)?];
            while cur.eat_sym(',') {
                chain.push(factor(cur, map)?);
            }
            cur.expect_sym(']')?;
            f = f.conjugate(&chain);
        } else {
            let (l, c) = cur.here();
            let e = power(cur)?;
            if powered || (!grouped && !f.conjugators.is_empty()) {
                return Err(ParseError::at(l, c, "a power must come before the conjugators"));
            }
            f.power = f.power.checked_mul(e).ok_or_else(|| ParseError::at(l, c, "power overflows"))?;
            powered = true;
        }
    }
    Ok(f)
}

fn header(toks: &[Spanned], line: usize) -> Result<LabelMap, ParseError> {
    let mut cur = Cursor { toks, pos: 0, line, end_col: 1 };
    match cur.bump() {
        Some(Tok::Word(w)) if w == "strands" => {}
        _ => return Err(ParseError::at(line, 1, "expected header 'strands N labels ...'")),
    }
    let (l, c) = cur.here();
    let n = cur.int("a strand count")?;
    match cur.bump() {
        Some(Tok::Word(w)) if w == "labels" => {}
        _ => return Err(cur.error("expected 'labels'")),
    }
    let mut labels = vec![cur.label(None)?];
    while cur.eat_sym(',') {
        labels.push(cur.label(None)?);
    }
    if cur.peek().is_some() {
        return Err(cur.error("trailing input after labels"));
    }
    if n <= 0 || labels.len() as i64 != n {
        return Err(ParseError::at(l, c, format!("strand count {n} does not match {} labels", labels.len())));
    }
    LabelMap::new(labels).map_err(|e| ParseError::at(l, c, e.to_string()))
}

/// Parses a factorization file.
pub fn parse_bmf(text: &str) -> Result<Bmf, ParseError> {
    let mut map: Option<LabelMap> = None;
    let mut factors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = lex_line(raw, line)?;
        if toks.is_empty() {
            continue;
        }
        match &map {
            None => map = Some(header(&toks, line)?),
            Some(m) => {
                let end_col = raw.chars().count() + 1;
                let mut cur = Cursor { toks: &toks, pos: 0, line, end_col };
                let f = factor(&mut cur, m)?;
                if cur.peek().is_some() {
                    return Err(cur.error("trailing input after factor"));
                }
                if let Base::Band { .. } = f.base {
                    f.expand().map_err(|e| ParseError::at(line, 1, e.to_string()))?;
                }
                factors.push(f);
            }
        }
    }
    let labels = map.ok_or_else(|| ParseError::at(1, 1, "empty input: missing header"))?;
    Ok(Bmf::new(labels, factors))
}

/// Writes a factorization in the file syntax.
pub fn print_bmf(b: &Bmf) -> String {
    let labels: Vec<String> = b.labels.labels().iter().map(Label::to_string).collect();
    let mut s = format!("strands {} labels {}\n", b.strands(), labels.join(","));
    for f in &b.factors {
        s.push_str(&f.to_string());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEAD: &str = "strands 6 labels 1,1',2,2',3,3'\n";

    fn l(s: &str) -> Label {
        Label::parse(s).unwrap()
    }

    #[test]
    fn single_atom() {
        let b = parse_bmf(&format!("{HEAD}Z{{1,1'}}\n")).unwrap();
        assert_eq!(b.factors, vec![Factor::atom(l("1"), l("1'"), Side::Below, 1)]);
    }

    #[test]
    fn parenthesised_conjugate() {
        let b = parse_bmf(&format!("{HEAD}( Z{{1',3}}^2 ) ^ [ Z{{2', 3 3'}}^-2 ]")).unwrap();
        let c = Factor::band(Endpoint::Single(l("2'")), Endpoint::Pair(l("3"), l("3'")), Side::Below, -2);
        assert_eq!(b.factors[0], Factor::atom(l("1'"), l("3"), Side::Below, 2).conjugate(&[c]));
    }

    #[test]
    fn above_and_chains() {
        let b = parse_bmf(&format!("{HEAD}Z{{2,2'}}^[Z{{1 1', 2}}^-2, ~Z{{2, 3 3'}}^2]^[Z{{1,1'}}]")).unwrap();
        let f = &b.factors[0];
        assert_eq!(f.conjugators.len(), 3);
        assert!(matches!(f.conjugators[1].base, Base::Band { side: Side::Above, .. }));
    }

    #[test]
    fn full_twist_line() {
        let b = parse_bmf("strands 3 labels 1,2,3\nFT{1,2,3}  # three lines\n").unwrap();
        assert_eq!(b.factors, vec![Factor::full_twist(vec![l("1"), l("2"), l("3")])]);
    }

    #[test]
    fn round_trip() {
        let text = format!("{HEAD}Z{{1',3}}^2^[Z{{2', 3 3'}}^-2]\n~Z{{2, 3 3'}}^3^[Z{{2,2'}}^2]\nZ{{1 1', 2'}}^3\n");
        let b = parse_bmf(&text).unwrap();
        assert_eq!(parse_bmf(&print_bmf(&b)).unwrap(), b);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_bmf(&format!("{HEAD}Z{{1,4}}")).unwrap_err();
        assert_eq!((e.line, e.col), (2, 5));
        assert!(e.message.contains("unknown label"));
        let e = parse_bmf(&format!("{HEAD}Z{{1,2}}^x")).unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_bmf(&format!("{HEAD}Z{{1,2}}^99999999999")).unwrap_err();
        assert!(e.message.contains("malformed power"));
        let e = parse_bmf(&format!("{HEAD}Z{{1,2}}^[Z{{1,1'}}]^2")).unwrap_err();
        assert!(e.message.contains("before the conjugators"));
        assert!(parse_bmf("").is_err());
        assert!(parse_bmf("# only a comment\n").is_err());
        assert!(parse_bmf("strands 2 labels 1,2,3").is_err());
        assert!(parse_bmf("strands 2 labels 1,1").is_err());
        let e = parse_bmf(&format!("{HEAD}Z{{1,2}} $")).unwrap_err();
        assert_eq!((e.line, e.col), (2, 8));
    }
}
