//! Band generators between labelled punctures and the composite notations
//! built from them, compiled down to Artin words.
//!
//! A factor is a power of a band (or of a composite band, or a full twist
//! on a block of labels) together with a chain of conjugators. How the chain
//! acts and which side of the axis a band runs on are fixed by
//! [`Conventions`]; the default is the calibrated choice used by every
//! fixture.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::ArtinWord;
use crate::error::{Error, Result};

/// A puncture label such as `2` or `2'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    /// Index of the line or pair.
    pub index: u32,
    /// True for the doubled copy `i'`.
    pub primed: bool,
}

impl Label {
    /// Plain label `i`.
    pub const fn plain(index: u32) -> Self {
        Label { index, primed: false }
    }

    /// Primed label `i'`.
    pub const fn primed(index: u32) -> Self {
        Label { index, primed: true }
    }

    /// The partner label in a doubled pair.
    pub fn partner(self) -> Self {
        Label { index: self.index, primed: !self.primed }
    }

    /// Parses `"3"` or `"3'"`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        digits.parse().ok().map(|index| Label { index, primed })
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.index, if self.primed { "'" } else { "" })
    }
}

/// Assigns each label a strand position `1..=n`, in list order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabelMap {
    labels: Vec<Label>,
}

impl LabelMap {
    /// Builds a map; labels must be distinct.
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Invalid(format!("label {l} appears twice")));
            }
        }
        if labels.is_empty() {
            return Err(Error::Invalid("empty label map".into()));
        }
        Ok(LabelMap { labels })
    }

    /// Labels `1..=n` without primes.
    pub fn standard(n: usize) -> Self {
        LabelMap { labels: (1..=n as u32).map(Label::plain).collect() }
    }

    /// Labels in position order.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Number of strands.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false for a valid map.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// One-based strand position of a label.
    pub fn position(&self, l: Label) -> Result<usize> {
        self.labels.iter().position(|&x| x == l).map(|p| p + 1).ok_or_else(|| Error::UnknownLabel(format!("{l}")))
    }

    /// Label at a one-based position.
    pub fn label_at(&self, pos: usize) -> Option<Label> {
        self.labels.get(pos.wrapping_sub(1)).copied()
    }

    /// Indices `i` for which both `i` and `i'` are present, ascending.
    pub fn doubled(&self) -> Vec<u32> {
        let mut v: Vec<u32> =
            self.labels.iter().filter(|l| !l.primed && self.labels.contains(&l.partner())).map(|l| l.index).collect();
        v.sort_unstable();
        v
    }
}

/// Side of the real axis along which a band runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Below the axis, written `Z`.
    Below,
    /// Above the axis, written `Z̄`.
    Above,
}

impl Side {
    /// The other side.
    pub fn flip(self) -> Self {
        match self {
            Side::Below => Side::Above,
            Side::Above => Side::Below,
        }
    }
}

/// How a conjugator chain acts on a factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjugationRule {
    /// `X^Y = Y·X·Y⁻¹`, chain applied left to right: `X^[A,B] = B·A·X·A⁻¹·B⁻¹`.
    Successive,
    /// `X^Y = Y⁻¹·X·Y` with `Y` the product of the chain: `X^[A,B] = (A·B)⁻¹·X·(A·B)`.
    Product,
}

/// Which Artin word a band below the axis denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BandRule {
    /// Below: `σ_{q−1}…σ_{p+1} σ_p σ_{p+1}⁻¹…σ_{q−1}⁻¹`; above uses inverted middle letters.
    Standard,
    /// The two words exchanged.
    Swapped,
}

/// The two calibration axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Conventions {
    /// Conjugation semantics.
    pub conjugation: ConjugationRule,
    /// Band semantics.
    pub band: BandRule,
}

impl Conventions {
    /// The calibrated conventions shipped with the fixtures.
    pub const CALIBRATED: Conventions =
        Conventions { conjugation: ConjugationRule::Successive, band: BandRule::Standard };

    /// All four combinations, calibrated first.
    pub const ALL: [Conventions; 4] = [
        Conventions::CALIBRATED,
        Conventions { conjugation: ConjugationRule::Successive, band: BandRule::Swapped },
        Conventions { conjugation: ConjugationRule::Product, band: BandRule::Standard },
        Conventions { conjugation: ConjugationRule::Product, band: BandRule::Swapped },
    ];
}

impl Default for Conventions {
    fn default() -> Self {
        Self::CALIBRATED
    }
}

/// One end of a band: a label, or a doubled pair written `i i'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    /// A single puncture.
    Single(Label),
    /// Two punctures, in the order written.
    Pair(Label, Label),
}

impl Endpoint {
    fn labels(&self) -> Vec<Label> {
        match *self {
            Endpoint::Single(a) => vec![a],
            Endpoint::Pair(a, b) => vec![a, b],
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Single(a) => write!(f, "{a}"),
            Endpoint::Pair(a, b) => write!(f, "{a} {b}"),
        }
    }
}

/// What a factor raises to a power.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// A band, atomic when both endpoints are single labels.
    Band {
        /// First endpoint.
        a: Endpoint,
        /// Second endpoint.
        b: Endpoint,
        /// Side of the axis.
        side: Side,
    },
    /// `Δ²` on a block of labels occupying consecutive positions.
    FullTwist(Vec<Label>),
}

/// A power of a band with a conjugator chain: the atom of a factorization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    /// What is raised to the power.
    pub base: Base,
    /// The exponent.
    pub power: i32,
    /// Conjugators, innermost first.
    pub conjugators: Vec<Factor>,
}

/// Singularity type read off an exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Singularity {
    /// `|ε| = 1`.
    BranchPoint,
    /// `|ε| = 2`.
    Node,
    /// `|ε| = 3`.
    Cusp,
    /// `|ε| = 4`.
    Tangency,
    /// A full twist on `m` strands.
    MultiplePoint(usize),
    /// Anything else.
    Other(i32),
}

impl Singularity {
    /// Classifies an atom exponent.
    pub fn of_power(e: i32) -> Self {
        match e.abs() {
            1 => Singularity::BranchPoint,
            2 => Singularity::Node,
            3 => Singularity::Cusp,
            4 => Singularity::Tangency,
            _ => Singularity::Other(e),
        }
    }
}

/// A conjugated atomic band after composites are expanded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpandedAtom {
    /// First label.
    pub a: Label,
    /// Second label.
    pub b: Label,
    /// Side of the axis.
    pub side: Side,
    /// Exponent.
    pub power: i32,
    /// Conjugators, innermost first.
    pub conjugators: Vec<Factor>,
}

impl ExpandedAtom {
    /// The atom as a factor.
    pub fn to_factor(&self) -> Factor {
        Factor {
            base: Base::Band { a: Endpoint::Single(self.a), b: Endpoint::Single(self.b), side: self.side },
            power: self.power,
            conjugators: self.conjugators.clone(),
        }
    }
}

/// An atom placed on strands: the braid `Q⁻¹ · σ_p^power · Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedTwist {
    /// Left strand of the standard generator.
    pub position: usize,
    /// Exponent.
    pub power: i32,
    /// Transport `Q`.
    pub transport: ArtinWord,
}

/// A full twist placed on strands: `Q⁻¹ · Δ²(first..first+len) · Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedBlock {
    /// First strand of the block.
    pub first: usize,
    /// Number of strands.
    pub len: usize,
    /// Transport `Q`.
    pub transport: ArtinWord,
}

/// Either kind of placed piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Placed {
    /// A power of a band.
    Twist(PlacedTwist),
    /// A full twist on a block.
    Block(PlacedBlock),
}

impl Factor {
    /// An atomic band `Z_{ab}^power`.
    pub fn atom(a: Label, b: Label, side: Side, power: i32) -> Self {
        Factor {
            base: Base::Band { a: Endpoint::Single(a), b: Endpoint::Single(b), side },
            power,
            conjugators: Vec::new(),
        }
    }

    /// A possibly composite band.
    pub fn band(a: Endpoint, b: Endpoint, side: Side, power: i32) -> Self {
        Factor { base: Base::Band { a, b, side }, power, conjugators: Vec::new() }
    }

    /// `Δ²` on a block of labels.
    pub fn full_twist(labels: Vec<Label>) -> Self {
        Factor { base: Base::FullTwist(labels), power: 1, conjugators: Vec::new() }
    }

    /// Appends conjugators to the chain.
    pub fn conjugate(&self, by: &[Factor]) -> Self {
        let mut f = self.clone();
        f.conjugators.extend(by.iter().cloned());
        f
    }

    /// True when the base is an atomic band.
    pub fn is_atomic(&self) -> bool {
        matches!(self.base, Base::Band { a: Endpoint::Single(_), b: Endpoint::Single(_), .. })
    }

    /// Every label mentioned by the base.
    pub fn base_labels(&self) -> Vec<Label> {
        match &self.base {
            Base::Band { a, b, .. } => {
                let mut v = a.labels();
                v.extend(b.labels());
                v
            }
            Base::FullTwist(ls) => ls.clone(),
        }
    }

    /// Expands composites into conjugated atoms.
    ///
    /// A composite raised to an even power `e` is the notation product with
    /// every atom raised to `e`; a composite cusp (`e = 3`) is
    /// `Z³_{ij} · Z³_{ij'} · (Z³_{ij})^{Z²_{jj'}}`, or its mirror when the
    /// first endpoint is the doubled one.
    pub fn expand(&self) -> Result<Vec<ExpandedAtom>> {
        let Base::Band { a, b, side } = &self.base else {
            return Err(Error::Unsupported("a full twist has no band atoms".into()));
        };
        let side = *side;
        let e = self.power;
        let at = |x: Label, y: Label, inner: Vec<Factor>| -> Result<ExpandedAtom> {
            if x == y {
                return Err(Error::DegenerateBand(format!("{x}")));
            }
            let mut conjugators = inner;
            conjugators.extend(self.conjugators.iter().cloned());
            Ok(ExpandedAtom { a: x, b: y, side, power: e, conjugators })
        };
        match (*a, *b) {
            (Endpoint::Single(i), Endpoint::Single(j)) => Ok(vec![at(i, j, Vec::new())?]),
            _ if e == 0 => Ok(Vec::new()),
            (Endpoint::Single(i), Endpoint::Pair(j, jp)) if e % 2 == 0 => {
                Ok(vec![at(i, jp, Vec::new())?, at(i, j, Vec::new())?])
            }
            (Endpoint::Pair(i, ip), Endpoint::Single(j)) if e % 2 == 0 => {
                Ok(vec![at(ip, j, Vec::new())?, at(i, j, Vec::new())?])
            }
            (Endpoint::Pair(i, ip), Endpoint::Pair(j, jp)) if e % 2 == 0 => {
                Ok(vec![at(ip, jp, Vec::new())?, at(i, jp, Vec::new())?, at(ip, j, Vec::new())?, at(i, j, Vec::new())?])
            }
            (Endpoint::Single(i), Endpoint::Pair(j, jp)) if e == 3 => {
                let twist = Factor::atom(j, jp, Side::Below, 2);
                Ok(vec![at(i, j, Vec::new())?, at(i, jp, Vec::new())?, at(i, j, vec![twist])?])
            }
            (Endpoint::Pair(i, ip), Endpoint::Single(j)) if e == 3 => {
                let twist = Factor::atom(i, ip, Side::Below, 2);
                Ok(vec![at(i, j, Vec::new())?, at(ip, j, Vec::new())?, at(i, j, vec![twist])?])
            }
            _ => Err(Error::Unsupported(format!("composite band {self} with power {e}"))),
        }
    }

    /// Number of atoms times the exponent: the nominal degree.
    pub fn degree(&self) -> Result<i64> {
        match &self.base {
            Base::FullTwist(ls) => Ok((ls.len() * ls.len().saturating_sub(1)) as i64),
            Base::Band { .. } => Ok(self.expand()?.iter().map(|a| a.power as i64).sum()),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            Base::Band { a, b, side } => {
                if *side == Side::Above {
                    f.write_str("~")?;
                }
                write!(f, "Z{{{a}, {b}}}")?;
            }
            Base::FullTwist(ls) => {
                f.write_str("FT{")?;
                for (i, l) in ls.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{l}")?;
                }
                f.write_str("}")?;
            }
        }
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        if !self.conjugators.is_empty() {
            f.write_str("^[")?;
            for (i, c) in self.conjugators.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// `(p, B0)` with the band word equal to `B0⁻¹ · σ_p · B0`.
fn band_transport(n: usize, p: usize, q: usize, side: Side, conv: Conventions) -> ArtinWord {
    let below = match conv.band {
        BandRule::Standard => side == Side::Below,
        BandRule::Swapped => side == Side::Above,
    };
    let sign = if below { -1 } else { 1 };
    ArtinWord::from_trusted(n, (p + 1..q).map(|k| sign * k as i32))
}

fn ordered(map: &LabelMap, a: Label, b: Label) -> Result<(usize, usize)> {
    if a == b {
        return Err(Error::DegenerateBand(format!("{a}")));
    }
    let (p, q) = (map.position(a)?, map.position(b)?);
    Ok(if p < q { (p, q) } else { (q, p) })
}

/// The halftwist exchanging `a` and `b` along a band on the given side.
pub fn band_word(a: Label, b: Label, side: Side, map: &LabelMap, conv: Conventions) -> Result<ArtinWord> {
    let (p, q) = ordered(map, a, b)?;
    let n = map.len();
    let b0 = band_transport(n, p, q, side, conv);
    let core = ArtinWord::from_trusted(n, [p as i32]);
    Ok(b0.inverse().mul(&core).mul(&b0))
}

/// Conjugates `x` by a chain of words.
pub fn conjugate_word(x: &ArtinWord, chain: &[ArtinWord], conv: Conventions) -> ArtinWord {
    match conv.conjugation {
        ConjugationRule::Successive => chain.iter().fold(x.clone(), |acc, y| y.mul(&acc).mul(&y.inverse())),
        ConjugationRule::Product => {
            let y = chain.iter().fold(ArtinWord::identity(x.strands()), |acc, c| acc.mul(c));
            y.inverse().mul(x).mul(&y)
        }
    }
}

/// The word `T` with `X^chain = T⁻¹ · X · T`.
fn chain_transport(n: usize, chain: &[ArtinWord], conv: Conventions) -> ArtinWord {
    let mut t = ArtinWord::identity(n);
    for y in chain {
        t = match conv.conjugation {
            ConjugationRule::Successive => t.mul(&y.inverse()),
            ConjugationRule::Product => t.mul(y),
        };
    }
    t
}

fn chain_words(chain: &[Factor], map: &LabelMap, conv: Conventions) -> Result<Vec<ArtinWord>> {
    chain.iter().map(|c| factor_word(c, map, conv)).collect()
}

fn block(map: &LabelMap, labels: &[Label]) -> Result<(usize, usize)> {
    let mut pos: Vec<usize> = labels.iter().map(|&l| map.position(l)).collect::<Result<_>>()?;
    pos.sort_unstable();
    let first = pos[0];
    if pos.iter().enumerate().any(|(i, &p)| p != first + i) {
        return Err(Error::Unsupported("full twist labels must occupy consecutive positions".into()));
    }
    Ok((first, pos.len()))
}

/// Atoms (or blocks) of a factor with their transports.
pub fn placed(f: &Factor, map: &LabelMap, conv: Conventions) -> Result<Vec<Placed>> {
    let n = map.len();
    if let Base::FullTwist(labels) = &f.base {
        let (first, len) = block(map, labels)?;
        let t = chain_transport(n, &chain_words(&f.conjugators, map, conv)?, conv);
        let mut out = Vec::new();
        for _ in 0..f.power.unsigned_abs() {
            out.push(Placed::Block(PlacedBlock { first, len, transport: t.clone() }));
        }
        return Ok(out);
    }
    let mut out = Vec::new();
    for atom in f.expand()? {
        let (p, q) = ordered(map, atom.a, atom.b)?;
        let b0 = band_transport(n, p, q, atom.side, conv);
        let t = chain_transport(n, &chain_words(&atom.conjugators, map, conv)?, conv);
        out.push(Placed::Twist(PlacedTwist { position: p, power: atom.power, transport: b0.mul(&t) }));
    }
    Ok(out)
}

/// Compiles a factor to an Artin word.
pub fn factor_word(f: &Factor, map: &LabelMap, conv: Conventions) -> Result<ArtinWord> {
    let n = map.len();
    let mut w = ArtinWord::identity(n);
    for piece in placed(f, map, conv)? {
        let (core, t) = match piece {
            Placed::Twist(a) => (ArtinWord::from_trusted(n, [a.position as i32]).pow(a.power), a.transport),
            Placed::Block(b) => {
                let local = ArtinWord::full_twist(b.len);
                let shift = b.first as i32 - 1;
                let core = ArtinWord::from_trusted(n, local.letters().iter().map(|x| x + x.signum() * shift));
                let core = if f.power < 0 { core.inverse() } else { core };
                (core, b.transport)
            }
        };
        w = w.mul(&t.inverse()).mul(&core).mul(&t);
    }
    Ok(w)
}

/// Renders a list of factors separated by `·`.
pub fn render_product(fs: &[Factor]) -> String {
    let mut s = String::new();
    for (i, f) in fs.iter().enumerate() {
        if i > 0 {
            s.push_str(" · ");
        }
        s.push_str(&format!("{f}"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const C: Conventions = Conventions::CALIBRATED;

    fn l(s: &str) -> Label {
        Label::parse(s).unwrap()
    }

    fn cayley() -> LabelMap {
        LabelMap::new(["1", "1'", "2", "2'", "3", "3'"].iter().map(|s| l(s)).collect()).unwrap()
    }

    #[test]
    fn labels_parse_and_print() {
        assert_eq!(l("3'"), Label::primed(3));
        assert_eq!(format!("{}", l("12")), "12");
        assert!(Label::parse("x").is_none());
        assert!(Label::parse("'").is_none());
        assert_eq!(cayley().doubled(), vec![1, 2, 3]);
    }

    #[test]
    fn adjacent_band_is_a_generator() {
        let m = LabelMap::standard(4);
        for side in [Side::Below, Side::Above] {
            let w = band_word(Label::plain(2), Label::plain(3), side, &m, C).unwrap();
            assert_eq!(w.letters(), &[2]);
        }
        let w = band_word(l("1"), l("1'"), Side::Below, &cayley(), C).unwrap();
        assert_eq!(w.letters(), &[1]);
    }

    #[test]
    fn band_words_match_formulas() {
        let m = LabelMap::standard(4);
        let below = band_word(Label::plain(1), Label::plain(4), Side::Below, &m, C).unwrap();
        assert_eq!(below.letters(), &[3, 2, 1, -2, -3]);
        let above = band_word(Label::plain(4), Label::plain(1), Side::Above, &m, C).unwrap();
        assert_eq!(above.letters(), &[-3, -2, 1, 2, 3]);
        assert_eq!(below.permutation().as_transposition(), Some((1, 4)));
    }

    #[test]
    fn below_and_above_differ_by_middle_full_twist() {
        let m = LabelMap::standard(3);
        let below = band_word(Label::plain(1), Label::plain(3), Side::Below, &m, C).unwrap();
        let above = band_word(Label::plain(1), Label::plain(3), Side::Above, &m, C).unwrap();
        assert!(!below.equals(&above).unwrap());
        // the middle puncture makes a full turn around the right endpoint
        let t = ArtinWord::new(3, &[2, 2]).unwrap();
        assert!(t.inverse().mul(&below).mul(&t).equals(&above).unwrap());
    }

    #[test]
    fn composite_expansion_orders() {
        let f = Factor::band(Endpoint::Single(l("2'")), Endpoint::Pair(l("3"), l("3'")), Side::Below, 2);
        let atoms = f.expand().unwrap();
        assert_eq!((atoms[0].a, atoms[0].b), (l("2'"), l("3'")));
        assert_eq!((atoms[1].a, atoms[1].b), (l("2'"), l("3")));
        let g = Factor::band(Endpoint::Pair(l("1"), l("1'")), Endpoint::Pair(l("3"), l("3'")), Side::Below, 2);
        let pairs: Vec<_> = g.expand().unwrap().iter().map(|a| (a.a, a.b)).collect();
        assert_eq!(pairs, vec![(l("1'"), l("3'")), (l("1"), l("3'")), (l("1'"), l("3")), (l("1"), l("3"))]);
        let h = Factor::band(Endpoint::Single(l("2")), Endpoint::Pair(l("3"), l("3'")), Side::Below, 3);
        let atoms = h.expand().unwrap();
        assert_eq!(atoms.len(), 3);
        assert!(atoms[0].conjugators.is_empty() && atoms[1].conjugators.is_empty());
        assert_eq!(atoms[2].conjugators, vec![Factor::atom(l("3"), l("3'"), Side::Below, 2)]);
        assert_eq!(h.degree().unwrap(), 9);
    }

    #[test]
    fn negative_composite_powers_are_atomwise() {
        let m = cayley();
        let f = Factor::band(Endpoint::Single(l("2'")), Endpoint::Pair(l("3"), l("3'")), Side::Below, -2);
        let w = factor_word(&f, &m, C).unwrap();
        let a = band_word(l("2'"), l("3'"), Side::Below, &m, C).unwrap().pow(-2);
        let b = band_word(l("2'"), l("3"), Side::Below, &m, C).unwrap().pow(-2);
        assert!(w.equals(&a.mul(&b)).unwrap());
    }

    #[test]
    fn conjugation_semantics() {
        let m = cayley();
        let x = Factor::atom(l("1'"), l("3"), Side::Below, 2);
        let y = Factor::atom(l("3"), l("3'"), Side::Below, -1);
        let xw = factor_word(&x, &m, C).unwrap();
        let yw = factor_word(&y, &m, C).unwrap();
        let cw = factor_word(&x.conjugate(core::slice::from_ref(&y)), &m, C).unwrap();
        assert_eq!(cw, yw.mul(&xw).mul(&yw.inverse()));
        let p = Conventions { conjugation: ConjugationRule::Product, band: BandRule::Standard };
        let pw = factor_word(&x.conjugate(core::slice::from_ref(&y)), &m, p).unwrap();
        assert_eq!(pw, yw.inverse().mul(&xw).mul(&yw));
        assert_eq!(factor_word(&x.conjugate(&[]), &m, C).unwrap(), xw);
    }

    #[test]
    fn placed_atoms_rebuild_the_word() {
        let m = cayley();
        let f = Factor::band(Endpoint::Single(l("2")), Endpoint::Pair(l("3"), l("3'")), Side::Below, 3)
            .conjugate(&[Factor::atom(l("2"), l("2'"), Side::Below, 2)]);
        let mut w = ArtinWord::identity(6);
        for p in placed(&f, &m, C).unwrap() {
            let Placed::Twist(t) = p else { panic!() };
            let s = ArtinWord::new(6, &[t.position as i32]).unwrap().pow(t.power);
            w = w.mul(&t.transport.inverse()).mul(&s).mul(&t.transport);
        }
        assert_eq!(w, factor_word(&f, &m, C).unwrap());
        assert_eq!(w.exponent_sum(), 9);
    }

    #[test]
    fn full_twist_blocks() {
        let m = LabelMap::standard(4);
        let f = Factor::full_twist(vec![Label::plain(2), Label::plain(3), Label::plain(4)]);
        let w = factor_word(&f, &m, C).unwrap();
        assert_eq!(w.exponent_sum(), 6);
        assert!(w.permutation().is_identity());
        let bad = Factor::full_twist(vec![Label::plain(1), Label::plain(3)]);
        assert!(factor_word(&bad, &m, C).is_err());
    }

    #[test]
    fn errors() {
        let m = cayley();
        assert!(band_word(l("1"), l("1"), Side::Below, &m, C).is_err());
        assert!(band_word(l("1"), l("4"), Side::Below, &m, C).is_err());
        let f = Factor::band(Endpoint::Pair(l("1"), l("1'")), Endpoint::Pair(l("3"), l("3'")), Side::Below, 3);
        assert!(f.expand().is_err());
    }

    #[test]
    fn display_round_shape() {
        let f = Factor::atom(l("1'"), l("3"), Side::Below, 2).conjugate(&[Factor::band(
            Endpoint::Single(l("2'")),
            Endpoint::Pair(l("3"), l("3'")),
            Side::Below,
            -2,
        )]);
        assert_eq!(format!("{f}"), "Z{1', 3}^2^[Z{2', 3 3'}^-2]");
        let g = Factor::atom(l("2"), l("3"), Side::Above, 1);
        assert_eq!(format!("{g}"), "~Z{2, 3}");
    }
}
