//! Zariski–van Kampen presentations, Tietze simplification and
//! abelianization.
//!
//! Fiber generators are the standard free generators `x1..xn` in strand
//! order, named after the puncture labels (`γ1`, `γ1'`, ...). An atom
//! `T⁻¹ σ_p^ε T` yields the words `A`, `B` obtained by pushing `x_p`,
//! `x_{p+1}` through `T` and reading the result right to left, which turns
//! the left Artin action into the right action on loops.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::factorization::Bmf;
use crate::free::FreeWord;
use crate::halftwist::{placed, Conventions, Factor, LabelMap, Placed};
use crate::matrix::IntMatrix;

/// A finite presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

/// A finitely generated abelian group `Z^r ⊕ Z/d1 ⊕ … ⊕ Z/dk`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    /// Invariant factors, each at least 2 and dividing the next.
    pub torsion: Vec<i64>,
    /// Rank of the free part.
    pub free_rank: usize,
}

impl AbelianGroup {
    /// Quotient of `Z^ambient` by the span of the columns of `m`.
    pub fn cokernel(m: &IntMatrix) -> Result<Self> {
        let inv = m.smith()?.invariants;
        Ok(AbelianGroup { torsion: inv.iter().copied().filter(|&d| d > 1).collect(), free_rank: m.rows() - inv.len() })
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: i64) -> Self {
        match n {
            0 => AbelianGroup { torsion: Vec::new(), free_rank: 1 },
            1 => AbelianGroup { torsion: Vec::new(), free_rank: 0 },
            _ => AbelianGroup { torsion: alloc::vec![n], free_rank: 0 },
        }
    }

    /// Group order, if finite.
    pub fn order(&self) -> Option<i64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Presentation {
    /// Builds a presentation, checking names and relator ranks.
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        let names: BTreeSet<&String> = generators.iter().collect();
        if names.len() != generators.len() {
            return Err(Error::Invalid("duplicate generator name".into()));
        }
        let rank = generators.len();
        for r in &relators {
            if let Some(&x) = r.letters().iter().find(|x| x.unsigned_abs() as usize > rank) {
                return Err(Error::GeneratorOutOfRange { index: x as i64, bound: rank });
            }
        }
        let relators = relators.into_iter().map(|r| r.with_rank(rank)).collect();
        Ok(Presentation { generators, relators })
    }

    /// The free group on the given names.
    pub fn free(generators: Vec<String>) -> Result<Self> {
        Self::new(generators, Vec::new())
    }

    /// Generator names.
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// Relators in order.
    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// 1-based index of a generator name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name).map(|i| i + 1)
    }

    /// Appends a relator.
    pub fn with_relator(mut self, r: FreeWord) -> Self {
        self.relators.push(r.with_rank(self.rank()));
        self
    }

    /// Relators up to conjugation and inversion, without the trivial one.
    pub fn relator_classes(&self) -> BTreeSet<FreeWord> {
        self.relators.iter().map(FreeWord::canonical).filter(|w| !w.is_empty()).collect()
    }

    /// Same generator names and the same relator classes.
    pub fn same_as(&self, other: &Presentation) -> bool {
        self.generators == other.generators && self.relator_classes() == other.relator_classes()
    }

    /// Renders a word with this presentation's names.
    pub fn render(&self, w: &FreeWord) -> String {
        w.render(&self.generators)
    }

    /// Rows are relators, columns generators.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.relators.len(), self.rank());
        for (i, r) in self.relators.iter().enumerate() {
            for (j, e) in r.with_rank(self.rank()).exponent_sums().into_iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }

    /// The abelianized group.
    pub fn abelianization(&self) -> Result<AbelianGroup> {
        AbelianGroup::cokernel(&self.exponent_matrix().transpose())
    }

    fn eliminate(&self, g: usize, value: &FreeWord, skip: usize) -> Presentation {
        let rank = self.rank();
        let images: Vec<FreeWord> = (1..=rank)
            .map(|k| {
                let w = if k == g { value.clone() } else { FreeWord::from_trusted(rank, [k as i32]) };
                let shifted = w.letters().iter().map(|&x| {
                    let a = x.unsigned_abs() as usize;
                    let s = if a > g { a - 1 } else { a };
                    x.signum() * s as i32
                });
                FreeWord::from_trusted(rank - 1, shifted)
            })
            .collect();
        let relators = self
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, r)| r.substitute(&images).with_rank(rank - 1))
            .collect();
        let mut generators = self.generators.clone();
        generators.remove(g - 1);
        Presentation { generators, relators }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel: {}", self.render(r))?;
        }
        Ok(())
    }
}

fn name_of(map: &LabelMap, pos: usize) -> String {
    map.label_at(pos).map_or_else(|| format!("x{pos}"), |l| format!("γ{l}"))
}

/// Generator names for a label map, in strand order.
pub fn generator_names(map: &LabelMap) -> Vec<String> {
    (1..=map.len()).map(|p| name_of(map, p)).collect()
}

fn loop_image(t: &crate::braid::ArtinWord, pos: usize) -> Result<FreeWord> {
    Ok(t.artin_image(pos)?.reversed())
}

/// Relators contributed by one factor.
pub fn relation_from_factor(f: &Factor, map: &LabelMap, conv: Conventions) -> Result<Vec<FreeWord>> {
    let mut out = Vec::new();
    for piece in placed(f, map, conv)? {
        match piece {
            Placed::Twist(a) => {
                let x = loop_image(&a.transport, a.position)?;
                let y = loop_image(&a.transport, a.position + 1)?;
                out.push(match a.power.abs() {
                    1 => x.mul(&y.inverse()),
                    2 => FreeWord::commutator(&x, &y),
                    3 => FreeWord::triple(&x, &y),
                    _ => {
                        return Err(Error::Unsupported(format!(
                            "no van Kampen relation for exponent {}, regenerate first",
                            a.power
                        )))
                    }
                });
            }
            Placed::Block(b) => {
                let xs: Vec<FreeWord> =
                    (b.first..b.first + b.len).map(|p| loop_image(&b.transport, p)).collect::<Result<_>>()?;
                let rot = |k: usize| FreeWord::product(map.len(), xs[k..].iter().chain(&xs[..k]));
                let base = rot(0);
                for k in 1..xs.len() {
                    out.push(base.mul(&rot(k).inverse()));
                }
            }
        }
    }
    Ok(out)
}

/// The affine presentation: one generator per strand, relators from every factor.
pub fn presentation_affine(b: &Bmf, conv: Conventions) -> Result<Presentation> {
    let mut rels = Vec::new();
    for f in &b.factors {
        rels.extend(relation_from_factor(f, &b.labels, conv)?);
    }
    Presentation::new(generator_names(&b.labels), rels)
}

/// Appends the product of the generators in descending fiber order.
pub fn presentation_projective(p: &Presentation, fiber_order: &[String]) -> Result<Presentation> {
    let mut seen = BTreeSet::new();
    let mut idx = Vec::new();
    for name in fiber_order {
        let i = p.index_of(name).ok_or(Error::BadFiberOrder)?;
        if !seen.insert(i) {
            return Err(Error::BadFiberOrder);
        }
        idx.push(i as i32);
    }
    if idx.len() != p.rank() {
        return Err(Error::BadFiberOrder);
    }
    let r = FreeWord::from_trusted(p.rank(), idx.into_iter().rev());
    Ok(p.clone().with_relator(r))
}

/// One step of a Tietze simplification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TietzeMove {
    /// A relator replaced by its cyclic reduction.
    CyclicReduce {
        /// Before.
        from: String,
        /// After.
        to: String,
    },
    /// The empty relator removed.
    DeleteTrivial,
    /// A relator equal to an earlier one up to conjugation and inversion removed.
    DeleteDuplicate {
        /// The relator.
        relator: String,
    },
    /// A generator removed using a relator in which it occurs once.
    Eliminate {
        /// Generator name.
        generator: String,
        /// Its value in the remaining generators.
        value: String,
        /// The relator used.
        relator: String,
    },
    /// A relator replaced by an equivalent one modulo the others.
    Rewrite {
        /// Before.
        from: String,
        /// After.
        to: String,
    },
    /// A relator that follows from the others removed.
    DeleteRedundant {
        /// The relator.
        relator: String,
    },
}

impl fmt::Display for TietzeMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TietzeMove::CyclicReduce { from, to } => write!(f, "cyclic-reduce {from} => {to}"),
            TietzeMove::DeleteTrivial => f.write_str("delete-trivial"),
            TietzeMove::DeleteDuplicate { relator } => write!(f, "delete-duplicate {relator}"),
            TietzeMove::Eliminate { generator, value, relator } => {
                write!(f, "eliminate {generator} = {value} via {relator}")
            }
            TietzeMove::Rewrite { from, to } => write!(f, "rewrite {from} => {to}"),
            TietzeMove::DeleteRedundant { relator } => write!(f, "delete-redundant {relator}"),
        }
    }
}

/// A move together with the presentation it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoggedMove {
    /// The move.
    pub step: TietzeMove,
    /// Presentation after the move.
    pub after: Presentation,
}

/// Knobs of the deterministic simplifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TietzePolicy {
    /// Eliminate generators that occur once in some relator.
    pub eliminate: bool,
    /// Search for shorter or commutator-shaped equivalents of each relator.
    pub rewrite: bool,
    /// Cap on the number of words visited per relator search.
    pub search_limit: usize,
}

impl Default for TietzePolicy {
    fn default() -> Self {
        TietzePolicy { eliminate: true, rewrite: true, search_limit: 200_000 }
    }
}

fn is_primed(name: &str) -> bool {
    name.ends_with('\'')
}

/// True if some rotation of `w` or `w⁻¹` reads `g u g⁻¹ u⁻¹` with `g` a letter.
pub fn is_commutator_shaped(w: &FreeWord) -> bool {
    let l = w.cyclically_reduced();
    let n = l.len();
    if n < 4 || n % 2 == 1 {
        return false;
    }
    let h = (n - 2) / 2;
    for v in [l.letters().to_vec(), l.inverse().letters().to_vec()] {
        for i in 0..n {
            let z: Vec<i32> = v[i..].iter().chain(&v[..i]).copied().collect();
            if z[h + 1] == -z[0] && (0..h).all(|k| z[h + 2 + k] == -z[h - k]) {
                return true;
            }
        }
    }
    false
}

/// Rewriting rules `u → v` with `u v⁻¹` a rotation of a relator or its inverse.
fn rules(others: &[FreeWord]) -> Vec<(Vec<i32>, Vec<i32>)> {
    let mut set = BTreeSet::new();
    for r in others {
        let r = r.cyclically_reduced();
        for x in [r.letters().to_vec(), r.inverse().letters().to_vec()] {
            let n = x.len();
            for i in 0..n {
                let y: Vec<i32> = x[i..].iter().chain(&x[..i]).copied().collect();
                for k in 1..n {
                    let v: Vec<i32> = y[k..].iter().rev().map(|a| -a).collect();
                    set.insert((y[..k].to_vec(), v));
                }
            }
        }
    }
    set.into_iter().collect()
}

enum Search {
    Trivial,
    Better(FreeWord),
    Stuck,
}

/// Explores the words reachable from `w` by applying relators in `others`
/// to cyclic rotations, never exceeding the length of `w`.
fn search(w: &FreeWord, others: &[FreeWord], limit: usize) -> Search {
    let rank = w.rank();
    let start = w.canonical();
    let bound = start.len();
    let rules = rules(others);
    // Only a strictly better shape or length justifies replacing the relator.
    let shape = |x: &FreeWord| (!is_commutator_shaped(x), x.len());
    let key = |x: &FreeWord| (shape(x), x.letters().to_vec());
    let floor = shape(&start);
    let mut best: Option<FreeWord> = None;
    let mut seen = BTreeSet::new();
    seen.insert(start.letters().to_vec());
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur.is_empty() {
            return Search::Trivial;
        }
        if shape(&cur) < floor && best.as_ref().is_none_or(|b| key(&cur) < key(b)) {
            best = Some(cur.clone());
        }
        let l = cur.letters();
        let n = l.len();
        for i in 0..n {
            let y: Vec<i32> = l[i..].iter().chain(&l[..i]).copied().collect();
            for (u, v) in &rules {
                if u.len() <= n && y[..u.len()] == u[..] {
                    let z = FreeWord::from_trusted(rank, v.iter().chain(&y[u.len()..]).copied()).canonical();
                    if z.len() <= bound && seen.len() < limit && seen.insert(z.letters().to_vec()) {
                        queue.push_back(z);
                    }
                }
            }
        }
    }
    best.map_or(Search::Stuck, Search::Better)
}

/// Simplifies a presentation by sound Tietze moves.
///
/// The order is fixed: cyclic reduction, removal of trivial and duplicate
/// relators, elimination of a generator occurring once in some relator
/// (primed names first in ascending order, then the highest index, shortest
/// relator first), and finally a bounded search that deletes a relator
/// following from the others, or replaces it by an equivalent one that is
/// commutator-shaped where it was not, or strictly shorter.
pub fn tietze_simplify(p: &Presentation, policy: TietzePolicy) -> (Presentation, Vec<LoggedMove>) {
    let mut cur = p.clone();
    let mut log = Vec::new();
    let push = |log: &mut Vec<LoggedMove>, step, after: &Presentation| {
        log.push(LoggedMove { step, after: after.clone() });
    };
    'outer: loop {
        for i in 0..cur.relators.len() {
            let r = cur.relators[i].cyclically_reduced();
            if r != cur.relators[i] {
                let step = TietzeMove::CyclicReduce { from: cur.render(&cur.relators[i]), to: cur.render(&r) };
                cur.relators[i] = r;
                push(&mut log, step, &cur);
            }
        }
        if let Some(i) = cur.relators.iter().position(FreeWord::is_empty) {
            cur.relators.remove(i);
            push(&mut log, TietzeMove::DeleteTrivial, &cur);
            continue;
        }
        let mut seen = BTreeSet::new();
        for i in 0..cur.relators.len() {
            if !seen.insert(cur.relators[i].canonical()) {
                let relator = cur.render(&cur.relators[i]);
                cur.relators.remove(i);
                push(&mut log, TietzeMove::DeleteDuplicate { relator }, &cur);
                continue 'outer;
            }
        }
        if policy.eliminate {
            if let Some((g, ri)) = elimination_candidate(&cur) {
                let r = &cur.relators[ri];
                let l = r.letters();
                let at = l.iter().position(|x| x.unsigned_abs() as usize == g).expect("occurs once");
                let rest = FreeWord::from_trusted(cur.rank(), l[at + 1..].iter().chain(&l[..at]).copied());
                let value = if l[at] > 0 { rest.inverse() } else { rest };
                let step = TietzeMove::Eliminate {
                    generator: cur.generators[g - 1].clone(),
                    value: cur.render(&value),
                    relator: cur.render(r),
                };
                cur = cur.eliminate(g, &value, ri);
                push(&mut log, step, &cur);
                continue;
            }
        }
        if policy.rewrite {
            for i in 0..cur.relators.len() {
                let others: Vec<FreeWord> =
                    cur.relators.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r.clone()).collect();
                match search(&cur.relators[i], &others, policy.search_limit) {
                    Search::Trivial => {
                        let relator = cur.render(&cur.relators[i]);
                        cur.relators.remove(i);
                        push(&mut log, TietzeMove::DeleteRedundant { relator }, &cur);
                        continue 'outer;
                    }
                    Search::Better(b) => {
                        let step = TietzeMove::Rewrite { from: cur.render(&cur.relators[i]), to: cur.render(&b) };
                        cur.relators[i] = b;
                        push(&mut log, step, &cur);
                        continue 'outer;
                    }
                    Search::Stuck => {}
                }
            }
        }
        break;
    }
    (cur, log)
}

/// Primed before unprimed, then index order, then relator length and position.
type EliminationKey = (u8, i64, usize, usize);

fn elimination_candidate(p: &Presentation) -> Option<(usize, usize)> {
    let mut best: Option<(EliminationKey, (usize, usize))> = None;
    for g in 1..=p.rank() {
        let primed = is_primed(&p.generators[g - 1]);
        for (ri, r) in p.relators.iter().enumerate() {
            if r.occurrences(g) != 1 {
                continue;
            }
            let order = if primed { (0, g as i64) } else { (1, -(g as i64)) };
            let key = (order.0, order.1, r.len(), ri);
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, (g, ri)));
            }
        }
    }
    best.map(|(_, c)| c)
}

/// Generator names as used in presentations: `γ` followed by the label.
pub fn gamma(label: &str) -> String {
    let mut s = String::from("γ");
    s.push_str(label);
    s
}

/// Parses a word such as `γ1 γ2^-1` against a presentation's names.
pub fn parse_word(p: &Presentation, text: &str) -> Result<FreeWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, inv) = match tok.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (tok, false),
        };
        let i = p.index_of(name).ok_or_else(|| Error::Invalid(format!("unknown generator {name}")))? as i32;
        letters.push(if inv { -i } else { i });
    }
    FreeWord::new(p.rank(), &letters)
}
