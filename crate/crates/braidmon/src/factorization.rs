//! Braid monodromy factorizations: products, degree census, forgetting
//! degrees, branch-point completion and the regeneration rules.

use alloc::vec;
use alloc::vec::Vec;

use crate::braid::ArtinWord;
use crate::error::{Error, Result};
use crate::halftwist::{factor_word, Base, Conventions, Endpoint, Factor, Label, LabelMap, Side, Singularity};

/// An ordered factorization on labelled strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bmf {
    /// Label to position map.
    pub labels: LabelMap,
    /// Factors, leftmost first.
    pub factors: Vec<Factor>,
}

/// Singularity counts of a factorization.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Census {
    /// Atoms with `|ε| = 1`.
    pub branch: usize,
    /// Atoms with `|ε| = 2`.
    pub node: usize,
    /// Atoms with `|ε| = 3`.
    pub cusp: usize,
    /// Atoms with `|ε| = 4`.
    pub tangency: usize,
    /// Full-twist blocks.
    pub multiple: usize,
    /// Atoms with any other exponent.
    pub other: usize,
    /// Sum of all degrees, the exponent sum of the product.
    pub total: i64,
}

/// Which endpoint(s) a regeneration doubles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Doubling {
    /// `i` becomes `i, i'`.
    First,
    /// `j` becomes `j, j'`.
    Second,
    /// Both.
    Both,
}

impl Bmf {
    /// Wraps labels and factors.
    pub fn new(labels: LabelMap, factors: Vec<Factor>) -> Self {
        Bmf { labels, factors }
    }

    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.labels.len()
    }

    /// The first `k` factors.
    pub fn prefix(&self, k: usize) -> Bmf {
        Bmf { labels: self.labels.clone(), factors: self.factors[..k.min(self.factors.len())].to_vec() }
    }

    /// Word of each factor.
    pub fn factor_words(&self, conv: Conventions) -> Result<Vec<ArtinWord>> {
        self.factors.iter().map(|f| factor_word(f, &self.labels, conv)).collect()
    }

    /// Left-to-right product of the factors.
    pub fn product_word(&self, conv: Conventions) -> Result<ArtinWord> {
        let mut w = ArtinWord::identity(self.strands());
        for f in &self.factors {
            w = w.mul(&factor_word(f, &self.labels, conv)?);
        }
        Ok(w)
    }

    /// Whether the product equals the full twist, exactly.
    pub fn is_delta_squared(&self, conv: Conventions) -> Result<bool> {
        self.product_word(conv)?.equals(&ArtinWord::full_twist(self.strands()))
    }

    /// Counts atoms by singularity type.
    pub fn census(&self) -> Result<Census> {
        let mut c = Census::default();
        for f in &self.factors {
            if let Base::FullTwist(ls) = &f.base {
                c.multiple += f.power.unsigned_abs() as usize;
                c.total += f.degree()? * f.power as i64;
                let _ = ls;
                continue;
            }
            for atom in f.expand()? {
                match Singularity::of_power(atom.power) {
                    Singularity::BranchPoint => c.branch += 1,
                    Singularity::Node => c.node += 1,
                    Singularity::Cusp => c.cusp += 1,
                    Singularity::Tangency => c.tangency += 1,
                    _ => c.other += 1,
                }
                c.total += atom.power as i64;
            }
        }
        Ok(c)
    }

    /// Degree of the forgetting map onto the pair `{i, i'}`.
    pub fn forgetting_degree(&self, i: u32, conv: Conventions) -> Result<i64> {
        let p = self.labels.position(Label::plain(i))?;
        let q = self.labels.position(Label::primed(i))?;
        self.product_word(conv)?.linking_number(p.min(q), p.max(q))
    }

    /// Forgetting degrees of every doubled pair, ascending.
    pub fn forgetting_degrees(&self, conv: Conventions) -> Result<Vec<(u32, i64)>> {
        let w = self.product_word(conv)?;
        let mut out = Vec::new();
        for i in self.labels.doubled() {
            let p = self.labels.position(Label::plain(i))?;
            let q = self.labels.position(Label::primed(i))?;
            out.push((i, w.linking_number(p.min(q), p.max(q))?));
        }
        Ok(out)
    }

    /// Appends `Z_{i,i'}` until every doubled pair has forgetting degree 2.
    pub fn complete_branch_points(&self, conv: Conventions) -> Result<Bmf> {
        let mut out = self.clone();
        for (i, k) in self.forgetting_degrees(conv)? {
            for _ in k..2 {
                out.factors.push(Factor::atom(Label::plain(i), Label::primed(i), Side::Below, 1));
            }
        }
        Ok(out)
    }
}

/// Applies a regeneration rule to an atomic factor.
///
/// Rule 1 (`|ε| = 1`) gives `Z_{i',j} · Z_{i,j'}`, the second band on the
/// other side of the axis. Rule 2 (`|ε| = 2`) doubles the chosen endpoints.
/// Rule 3 (`|ε| = 4`) gives three cusps conjugated by `Z_{jj'}`, `1` and
/// `Z_{jj'}⁻¹`. Conjugators of the input are kept, outermost.
pub fn apply_regeneration(f: &Factor, rule: u8, doubling: Doubling) -> Result<Vec<Factor>> {
    let Base::Band { a: Endpoint::Single(i), b: Endpoint::Single(j), side } = f.base else {
        return Err(Error::Unsupported("regeneration needs an atomic band".into()));
    };
    let inherit = |g: Factor| g.conjugate(&f.conjugators);
    let sign = f.power.signum();
    match (rule, f.power.abs()) {
        (1, 1) => Ok(vec![
            inherit(Factor::atom(i.partner(), j, side, f.power)),
            inherit(Factor::atom(i, j.partner(), side.flip(), f.power)),
        ]),
        (2, 2) => {
            let (a, b) = match doubling {
                Doubling::First => (Endpoint::Pair(i, i.partner()), Endpoint::Single(j)),
                Doubling::Second => (Endpoint::Single(i), Endpoint::Pair(j, j.partner())),
                Doubling::Both => (Endpoint::Pair(i, i.partner()), Endpoint::Pair(j, j.partner())),
            };
            let g = Factor::band(a, b, side, f.power);
            Ok(g.expand()?.iter().map(|atom| atom.to_factor()).collect())
        }
        (3, 4) => {
            let pair = match doubling {
                Doubling::First => (i, i.partner()),
                Doubling::Second => (j, j.partner()),
                Doubling::Both => return Err(Error::Unsupported("rule 3 doubles a single endpoint".into())),
            };
            let cusp = Factor::atom(i, j, side, 3 * sign);
            let up = Factor::atom(pair.0, pair.1, Side::Below, 1);
            let down = Factor::atom(pair.0, pair.1, Side::Below, -1);
            Ok(vec![inherit(cusp.conjugate(&[up])), inherit(cusp.clone()), inherit(cusp.conjugate(&[down]))])
        }
        (r @ 1..=3, _) => Err(Error::RuleMismatch { rule: r, power: f.power }),
        (r, _) => Err(Error::Invalid(alloc::format!("no regeneration rule {r}"))),
    }
}
