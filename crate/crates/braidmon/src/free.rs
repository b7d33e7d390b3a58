//! Words in a free group, always kept freely reduced.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::{Error, Result};

/// An element of the free group on `rank` generators.
///
/// Letters are signed generator indices: `3` is `x3`, `-3` is `x3⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

fn push_reduced(out: &mut Vec<i32>, x: i32) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

impl FreeWord {
    /// Builds a word, checking indices and reducing it.
    pub fn new(rank: usize, letters: &[i32]) -> Result<Self> {
        for &x in letters {
            if x == 0 || x.unsigned_abs() as usize > rank {
                return Err(Error::GeneratorOutOfRange { index: x as i64, bound: rank });
            }
        }
        Ok(Self::from_trusted(rank, letters.iter().copied()))
    }

    pub(crate) fn from_trusted(rank: usize, letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out = Vec::new();
        for x in letters {
            push_reduced(&mut out, x);
        }
        FreeWord { rank, letters: out }
    }

    /// The empty word.
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    /// The generator `x_i`, with `i` in `1..=rank`.
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        Self::new(rank, &[i as i32])
    }

    /// Number of free generators.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The reduced letters.
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the identity.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group product `self · other`.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.letters.clone();
        for &x in &other.letters {
            push_reduced(&mut out, x);
        }
        FreeWord { rank: self.rank.max(other.rank), letters: out }
    }

    /// Product of a sequence of words.
    pub fn product<'a>(rank: usize, words: impl IntoIterator<Item = &'a FreeWord>) -> FreeWord {
        words.into_iter().fold(FreeWord::identity(rank), |acc, w| acc.mul(w))
    }

    /// Group inverse.
    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|x| -x).collect() }
    }

    /// Integer power.
    pub fn pow(&self, e: i32) -> FreeWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Letters in reverse order, each keeping its sign.
    ///
    /// This is the anti-automorphism that converts a left action into a right one.
    pub fn reversed(&self) -> FreeWord {
        FreeWord::from_trusted(self.rank, self.letters.iter().rev().copied())
    }

    /// `c · self · c⁻¹`.
    pub fn conjugated_by(&self, c: &FreeWord) -> FreeWord {
        c.mul(self).mul(&c.inverse())
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// `⟨a, b⟩ = a b a b⁻¹ a⁻¹ b⁻¹`.
    pub fn triple(a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.mul(b).mul(a).mul(&b.inverse()).mul(&a.inverse()).mul(&b.inverse())
    }

    /// Strips matching letters from both ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j >= i + 2 && l[i] == -l[j - 1] {
            i += 1;
            j -= 1;
        }
        FreeWord { rank: self.rank, letters: l[i..j].to_vec() }
    }

    /// Representative of the conjugacy classes of `self` and `self⁻¹`.
    ///
    /// Two relators generate the same normal subgroup element-wise up to
    /// conjugation and inversion iff their canonical forms agree.
    pub fn canonical(&self) -> FreeWord {
        let c = self.cyclically_reduced();
        let n = c.letters.len();
        if n == 0 {
            return c;
        }
        let inv = c.inverse();
        let mut best: Option<Vec<i32>> = None;
        for w in [&c.letters, &inv.letters] {
            for i in 0..n {
                let rot: Vec<i32> = w[i..].iter().chain(&w[..i]).copied().collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        FreeWord { rank: self.rank, letters: best.unwrap_or_default() }
    }

    /// Replaces every generator `x_i` by `images[i - 1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = Vec::new();
        for &x in &self.letters {
            let img = &images[x.unsigned_abs() as usize - 1];
            if x > 0 {
                for &y in &img.letters {
                    push_reduced(&mut out, y);
                }
            } else {
                for &y in img.letters.iter().rev() {
                    push_reduced(&mut out, -y);
                }
            }
        }
        FreeWord { rank, letters: out }
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut v = alloc::vec![0i64; self.rank];
        for &x in &self.letters {
            v[x.unsigned_abs() as usize - 1] += x.signum() as i64;
        }
        v
    }

    /// Number of letters equal to `x_g` or its inverse.
    pub fn occurrences(&self, g: usize) -> usize {
        self.letters.iter().filter(|x| x.unsigned_abs() as usize == g).count()
    }

    /// True if every letter has the same sign.
    pub fn is_one_signed(&self) -> bool {
        self.letters.iter().all(|&x| x > 0) || self.letters.iter().all(|&x| x < 0)
    }

    /// The same letters viewed in a free group of another rank.
    pub fn with_rank(&self, rank: usize) -> FreeWord {
        FreeWord { rank, letters: self.letters.clone() }
    }

    /// Renders with custom generator names, `g` and `g^-1` separated by spaces.
    pub fn render(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return String::from("1");
        }
        let mut s = String::new();
        for (i, &x) in self.letters.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            let idx = x.unsigned_abs() as usize - 1;
            match names.get(idx) {
                Some(n) => s.push_str(n),
                None => {
                    let _ = write!(s, "x{}", idx + 1);
                }
            }
            if x < 0 {
                s.push_str("^-1");
            }
        }
        s
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[i32]) -> FreeWord {
        FreeWord::new(3, l).unwrap()
    }

    #[test]
    fn reduces_on_construction() {
        assert_eq!(w(&[1, 2, -2, -1, 3]).letters(), &[3]);
    }

    #[test]
    fn canonical_identifies_conjugates_and_inverses() {
        let a = w(&[1, 2, -1, -2]);
        let b = w(&[2, -1, -2, 1]);
        let c = a.inverse();
        assert_eq!(a.canonical(), b.canonical());
        assert_eq!(a.canonical(), c.canonical());
        assert_eq!(w(&[-3, 1, 2, 3]).canonical(), w(&[1, 2]).canonical());
    }

    #[test]
    fn commutator_swap_is_inverse() {
        let a = w(&[1]);
        let b = w(&[2, 3]);
        assert_eq!(FreeWord::commutator(&b, &a), FreeWord::commutator(&a, &b).inverse());
    }

    #[test]
    fn triple_swap_is_inverse() {
        let a = w(&[1, 3]);
        let b = w(&[2]);
        assert_eq!(FreeWord::triple(&b, &a), FreeWord::triple(&a, &b).inverse());
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let images = [w(&[1, 2]), w(&[-1]), w(&[3, 3])];
        let u = w(&[1, -2]);
        let v = w(&[3, 2, 1]);
        assert_eq!(u.mul(&v).substitute(&images), u.substitute(&images).mul(&v.substitute(&images)));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(FreeWord::new(2, &[3]).is_err());
        assert!(FreeWord::new(2, &[0]).is_err());
    }
}
