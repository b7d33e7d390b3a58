//! Dehn twists on the torus acting on `H1 = Zα ⊕ Zβ`, lifts of a
//! factorization to the mapping class group, and the cokernel of the
//! monodromy action.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::ArtinWord;
use crate::error::{Error, Result};
use crate::factorization::Bmf;
use crate::halftwist::{conjugate_word, Base, Conventions, Singularity};
use crate::matrix::IntMatrix;
use crate::vankampen::AbelianGroup;

/// `uα + vβ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass {
    /// Coefficient of `α`.
    pub u: i64,
    /// Coefficient of `β`.
    pub v: i64,
}

impl HomologyClass {
    /// `α`.
    pub const ALPHA: HomologyClass = HomologyClass { u: 1, v: 0 };
    /// `β`.
    pub const BETA: HomologyClass = HomologyClass { u: 0, v: 1 };

    /// `uα + vβ`.
    pub const fn new(u: i64, v: i64) -> Self {
        HomologyClass { u, v }
    }

    /// Intersection number, with `α · β = 1`.
    pub fn dot(self, other: HomologyClass) -> Result<i64> {
        let a = self.u.checked_mul(other.v).ok_or(Error::Overflow)?;
        let b = self.v.checked_mul(other.u).ok_or(Error::Overflow)?;
        a.checked_sub(b).ok_or(Error::Overflow)
    }

    /// The zero class.
    pub fn is_zero(self) -> bool {
        self.u == 0 && self.v == 0
    }

    /// gcd of the coefficients is 1.
    pub fn is_primitive(self) -> bool {
        let (mut a, mut b) = (self.u.unsigned_abs(), self.v.unsigned_abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a == 1
    }
}

fn term(out: &mut String, k: i64, sym: char) {
    if k == 0 {
        return;
    }
    if !out.is_empty() {
        out.push(if k < 0 { '-' } else { '+' });
    } else if k < 0 {
        out.push('-');
    }
    if k.unsigned_abs() != 1 {
        out.push_str(&format!("{}", k.unsigned_abs()));
    }
    out.push(sym);
}

impl fmt::Display for HomologyClass {
    /// Written `β` first, as in `β-2α`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        term(&mut s, self.v, 'β');
        term(&mut s, self.u, 'α');
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}

/// A 2×2 integer matrix acting on column vectors `(u, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    /// Rows.
    pub m: [[i64; 2]; 2],
}

impl Mat2 {
    /// Identity.
    pub const IDENTITY: Mat2 = Mat2 { m: [[1, 0], [0, 1]] };

    /// From rows.
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    /// Checked product `self · other`.
    pub fn mul(&self, other: &Mat2) -> Result<Mat2> {
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let x = self.m[i][0].checked_mul(other.m[0][j]).ok_or(Error::Overflow)?;
                let y = self.m[i][1].checked_mul(other.m[1][j]).ok_or(Error::Overflow)?;
                *cell = x.checked_add(y).ok_or(Error::Overflow)?;
            }
        }
        Ok(Mat2 { m: out })
    }

    /// Determinant.
    pub fn det(&self) -> Result<i64> {
        let a = self.m[0][0].checked_mul(self.m[1][1]).ok_or(Error::Overflow)?;
        let b = self.m[0][1].checked_mul(self.m[1][0]).ok_or(Error::Overflow)?;
        a.checked_sub(b).ok_or(Error::Overflow)
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse(&self) -> Result<Mat2> {
        if self.det()? != 1 {
            return Err(Error::Invalid("inverse needs determinant 1".into()));
        }
        let [[a, b], [c, d]] = self.m;
        Ok(Mat2::new(d, -b, -c, a))
    }

    /// Integer power.
    pub fn pow(&self, e: i32) -> Result<Mat2> {
        let base = if e < 0 { self.inverse()? } else { *self };
        let mut out = Mat2::IDENTITY;
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    /// Image of a class.
    pub fn apply(&self, c: HomologyClass) -> Result<HomologyClass> {
        let col = |i: usize| -> Result<i64> {
            let x = self.m[i][0].checked_mul(c.u).ok_or(Error::Overflow)?;
            let y = self.m[i][1].checked_mul(c.v).ok_or(Error::Overflow)?;
            x.checked_add(y).ok_or(Error::Overflow)
        };
        Ok(HomologyClass::new(col(0)?, col(1)?))
    }

    /// `self − I`.
    pub fn minus_identity(&self) -> Mat2 {
        let [[a, b], [c, d]] = self.m;
        Mat2::new(a - 1, b, c, d - 1)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// The action of `τ_c` on homology: `γ ↦ γ + (c · γ) c`.
pub fn dehn_twist_matrix(c: HomologyClass) -> Result<Mat2> {
    if c.is_zero() {
        return Err(Error::Invalid("Dehn twist about the zero class".into()));
    }
    let image = |g: HomologyClass| -> Result<HomologyClass> {
        let k = c.dot(g)?;
        let du = k.checked_mul(c.u).ok_or(Error::Overflow)?;
        let dv = k.checked_mul(c.v).ok_or(Error::Overflow)?;
        Ok(HomologyClass::new(g.u.checked_add(du).ok_or(Error::Overflow)?, g.v.checked_add(dv).ok_or(Error::Overflow)?))
    };
    let a = image(HomologyClass::ALPHA)?;
    let b = image(HomologyClass::BETA)?;
    Ok(Mat2::new(a.u, b.u, a.v, b.v))
}

/// `τ_c^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PoweredTwist {
    /// Vanishing class.
    pub class: HomologyClass,
    /// Exponent.
    pub exponent: i32,
}

impl PoweredTwist {
    /// Matrix of the twist power.
    pub fn matrix(&self) -> Result<Mat2> {
        dehn_twist_matrix(self.class)?.pow(self.exponent)
    }
}

impl fmt::Display for PoweredTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "τ_{{{}}}", self.class)?;
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

/// An ordered product of twist powers, leftmost applied first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct McgFactorization {
    /// The twists.
    pub twists: Vec<PoweredTwist>,
}

impl McgFactorization {
    /// Wraps a sequence.
    pub fn new(twists: Vec<PoweredTwist>) -> Self {
        McgFactorization { twists }
    }

    /// `M_k ⋯ M_1`: the first twist acts first.
    pub fn matrix(&self) -> Result<Mat2> {
        let mut m = Mat2::IDENTITY;
        for t in &self.twists {
            m = t.matrix()?.mul(&m)?;
        }
        Ok(m)
    }

    /// Whether the composite is the identity.
    pub fn is_identity(&self) -> Result<bool> {
        Ok(self.matrix()? == Mat2::IDENTITY)
    }

    /// Columns of `M_ρ − I` for every twist.
    pub fn relation_matrix(&self) -> Result<IntMatrix> {
        let mut m = IntMatrix::zeros(2, 2 * self.twists.len());
        for (i, t) in self.twists.iter().enumerate() {
            let d = t.matrix()?.minus_identity();
            for j in 0..2 {
                m.set(0, 2 * i + j, d.m[0][j]);
                m.set(1, 2 * i + j, d.m[1][j]);
            }
        }
        Ok(m)
    }

    /// `Z²` modulo the images of `M_ρ − I`.
    pub fn cokernel(&self) -> Result<AbelianGroup> {
        AbelianGroup::cokernel(&self.relation_matrix()?)
    }
}

/// A letter `F_k^e` of a conjugating word, `k` a 1-based factor index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FactorPower {
    /// Factor index.
    pub factor: usize,
    /// Exponent.
    pub exponent: i32,
}

/// How one factor lifts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Seed {
    /// The factor's vanishing class is given.
    Class(HomologyClass),
    /// The factor equals another one conjugated by a word in factors.
    ConjugateOf {
        /// The seed factor.
        base: usize,
        /// The conjugating word, braid order.
        by: Vec<FactorPower>,
    },
}

/// Seed data for a lift: factor index and rule.
pub type Seeds = Vec<(usize, Seed)>;

/// What happened to each factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftStep {
    /// Every atom is a cusp; the factor lies in the kernel.
    Dropped,
    /// Lifted from a seed class.
    Seeded(PoweredTwist),
    /// Lifted as a verified conjugate of another lift.
    Conjugated {
        /// The twist.
        twist: PoweredTwist,
        /// Seed factor.
        base: usize,
        /// Matrix of the conjugating word.
        by: Mat2,
    },
}

/// A lifted factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    /// One step per factor, in factor order.
    pub steps: Vec<LiftStep>,
    /// The twists that survive.
    pub factorization: McgFactorization,
}

fn seed_for(seeds: &Seeds, k: usize) -> Option<&Seed> {
    seeds.iter().find(|(i, _)| *i == k).map(|(_, s)| s)
}

/// Lifts a factorization using seed classes and verified conjugations.
///
/// Factors whose atoms are all cusps are dropped. A `Class` seed needs an
/// atomic factor; the twist exponent is the factor's power. A
/// `ConjugateOf` seed is accepted only if the factor's braid equals the base
/// factor conjugated by the given word; its class is the base class moved by
/// the matrices of the conjugating letters, first letter acting first.
pub fn lift_factorization(b: &Bmf, seeds: &Seeds, conv: Conventions) -> Result<Lift> {
    let words = b.factor_words(conv)?;
    let n = b.factors.len();
    let mut steps: Vec<Option<LiftStep>> = alloc::vec![None; n];
    let mut lifted: Vec<Option<PoweredTwist>> = alloc::vec![None; n];
    for (i, f) in b.factors.iter().enumerate() {
        let all_cusps = !matches!(f.base, Base::FullTwist(_))
            && f.expand()?.iter().all(|a| Singularity::of_power(a.power) == Singularity::Cusp);
        if all_cusps {
            steps[i] = Some(LiftStep::Dropped);
            continue;
        }
        match seed_for(seeds, i + 1) {
            None => return Err(Error::Unliftable(i + 1)),
            Some(Seed::Class(c)) => {
                if !f.is_atomic() {
                    return Err(Error::Unliftable(i + 1));
                }
                let t = PoweredTwist { class: *c, exponent: f.power };
                lifted[i] = Some(t);
                steps[i] = Some(LiftStep::Seeded(t));
            }
            Some(Seed::ConjugateOf { .. }) => {}
        }
    }
    // Conjugates may refer to factors later in the list; resolve to a fixpoint.
    loop {
        let mut progress = false;
        for i in 0..n {
            if steps[i].is_some() {
                continue;
            }
            let Some(Seed::ConjugateOf { base, by }) = seed_for(seeds, i + 1) else { continue };
            let Some(base_twist) = base.checked_sub(1).and_then(|j| lifted.get(j).copied().flatten()) else {
                continue;
            };
            let mut chain = Vec::new();
            let mut m = Mat2::IDENTITY;
            let mut ready = true;
            for fp in by {
                let j = fp.factor.checked_sub(1).filter(|&j| j < n).ok_or(Error::Unliftable(i + 1))?;
                let Some(t) = lifted[j] else {
                    ready = false;
                    break;
                };
                chain.push(words[j].pow(fp.exponent));
                m = t.matrix()?.pow(fp.exponent)?.mul(&m)?;
            }
            if !ready {
                continue;
            }
            let y = chain.iter().fold(ArtinWord::identity(b.strands()), |acc, w| acc.mul(w));
            let target = conjugate_word(&words[base - 1], core::slice::from_ref(&y), conv);
            if !words[i].equals(&target)? {
                return Err(Error::Unliftable(i + 1));
            }
            let twist = PoweredTwist { class: m.apply(base_twist.class)?, exponent: base_twist.exponent };
            lifted[i] = Some(twist);
            steps[i] = Some(LiftStep::Conjugated { twist, base: *base, by: m });
            progress = true;
        }
        if !progress {
            break;
        }
    }
    if let Some(i) = steps.iter().position(Option::is_none) {
        return Err(Error::Unliftable(i + 1));
    }
    let factorization = McgFactorization::new(lifted.into_iter().flatten().collect());
    Ok(Lift { steps: steps.into_iter().flatten().collect(), factorization })
}
