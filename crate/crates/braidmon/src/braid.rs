//! Exact arithmetic in the braid group `B_n`.
//!
//! Products are read left to right: in `a·b` the braid `a` happens first.
//! The word problem is solved with the Garside left normal form, whose
//! canonical factors are permutation braids.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::free::FreeWord;

/// A braid on `strands` strands as a word in the Artin generators.
///
/// Letter `k` is `σ_k`, letter `-k` is `σ_k⁻¹`. Words are kept freely reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    strands: usize,
    letters: Vec<i32>,
}

fn push_reduced(out: &mut Vec<i32>, x: i32) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

impl ArtinWord {
    /// Checks generator indices and freely reduces.
    pub fn new(strands: usize, letters: &[i32]) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        for &x in letters {
            if x == 0 || x.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { index: x as i64, bound: strands });
            }
        }
        Ok(Self::from_trusted(strands, letters.iter().copied()))
    }

    pub(crate) fn from_trusted(strands: usize, letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out = Vec::new();
        for x in letters {
            push_reduced(&mut out, x);
        }
        ArtinWord { strands, letters: out }
    }

    /// The identity braid.
    pub fn identity(strands: usize) -> Self {
        ArtinWord { strands: strands.max(1), letters: Vec::new() }
    }

    /// The generator `σ_k^sign`.
    pub fn generator(strands: usize, k: usize, sign: i32) -> Result<Self> {
        Self::new(strands, &[k as i32 * sign.signum()])
    }

    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The reduced letters.
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_same(&self, other: &ArtinWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    /// The product `self · other`, `self` first.
    pub fn compose(&self, other: &ArtinWord) -> Result<ArtinWord> {
        self.check_same(other)?;
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &ArtinWord) -> ArtinWord {
        let mut out = self.letters.clone();
        for &x in &other.letters {
            push_reduced(&mut out, x);
        }
        ArtinWord { strands: self.strands, letters: out }
    }

    /// Group inverse.
    pub fn inverse(&self) -> ArtinWord {
        ArtinWord { strands: self.strands, letters: self.letters.iter().rev().map(|x| -x).collect() }
    }

    /// Integer power.
    pub fn pow(&self, e: i32) -> ArtinWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = ArtinWord::identity(self.strands);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Mirror image: every crossing changes sign.
    pub fn mirror(&self) -> ArtinWord {
        ArtinWord { strands: self.strands, letters: self.letters.iter().map(|x| -x).collect() }
    }

    /// The half twist `Δ = σ1 (σ2 σ1) … (σ_{n−1} … σ1)`.
    pub fn half_twist(strands: usize) -> ArtinWord {
        let mut letters = Vec::new();
        for k in 1..strands {
            letters.extend((1..=k as i32).rev());
        }
        ArtinWord { strands: strands.max(1), letters }
    }

    /// The full twist `Δ²`, generator of the center.
    pub fn full_twist(strands: usize) -> ArtinWord {
        Self::half_twist(strands).pow(2)
    }

    /// Underlying permutation: strand starting at `i` ends at `π(i)`.
    pub fn permutation(&self) -> Permutation {
        let n = self.strands;
        let mut at: Vec<usize> = (0..n).collect();
        for &x in &self.letters {
            let i = x.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut images = vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    /// Sum of the letter signs, the abelianization `B_n → Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|x| x.signum() as i64).sum()
    }

    /// Signed number of crossings between the strands starting at `p` and `q`.
    pub fn linking_number(&self, p: usize, q: usize) -> Result<i64> {
        let n = self.strands;
        for pos in [p, q] {
            if pos == 0 || pos > n {
                return Err(Error::PositionOutOfRange { position: pos, strands: n });
            }
        }
        if p == q {
            return Err(Error::Invalid("linking number needs two distinct strands".into()));
        }
        let mut at: Vec<usize> = (1..=n).collect();
        let mut count = 0i64;
        for &x in &self.letters {
            let i = x.unsigned_abs() as usize - 1;
            let (a, b) = (at[i], at[i + 1]);
            if (a == p && b == q) || (a == q && b == p) {
                count += x.signum() as i64;
            }
            at.swap(i, i + 1);
        }
        Ok(count)
    }

    /// Deletes every strand whose starting position is not in `keep`.
    pub fn forget(&self, keep: &[usize]) -> Result<ArtinWord> {
        let n = self.strands;
        let mut kept = vec![false; n + 1];
        for &k in keep {
            if k == 0 || k > n {
                return Err(Error::PositionOutOfRange { position: k, strands: n });
            }
            kept[k] = true;
        }
        let m = kept.iter().filter(|&&b| b).count();
        let mut at: Vec<usize> = (0..=n).collect();
        let mut out = Vec::new();
        for &x in &self.letters {
            let i = x.unsigned_abs() as usize;
            if kept[at[i]] && kept[at[i + 1]] {
                let k = (1..=i).filter(|&j| kept[at[j]]).count() as i32;
                out.push(k * x.signum());
            }
            at.swap(i, i + 1);
        }
        Ok(ArtinWord::from_trusted(m.max(1), out))
    }

    /// Image of `x_k` under the automorphism of the free group induced by the braid.
    ///
    /// `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹` and `x_{i+1} ↦ x_i`; the leftmost
    /// letter is applied first.
    pub fn artin_image(&self, k: usize) -> Result<FreeWord> {
        let n = self.strands;
        if k == 0 || k > n {
            return Err(Error::GeneratorOutOfRange { index: k as i64, bound: n });
        }
        let mut w = FreeWord::from_trusted(n, [k as i32]);
        for &x in &self.letters {
            w = artin_letter(n, x).apply(&w);
        }
        Ok(w)
    }

    /// Images of all free generators.
    pub fn artin_images(&self) -> Vec<FreeWord> {
        (1..=self.strands).map(|k| self.artin_image(k).expect("in range")).collect()
    }

    /// Garside left normal form.
    pub fn normal_form(&self) -> GarsideNormalForm {
        garside(self)
    }

    /// Equality in `B_n`, decided by normal forms.
    pub fn equals(&self, other: &ArtinWord) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.normal_form() == other.normal_form())
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, &x) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if x > 0 {
                write!(f, "s{x}")?;
            } else {
                write!(f, "s{}^-1", -x)?;
            }
        }
        Ok(())
    }
}

/// Substitution for one Artin letter.
struct Substitution {
    i: i32,
    img_i: [i32; 3],
    len_i: usize,
    img_j: [i32; 3],
    len_j: usize,
}

fn artin_letter(_n: usize, x: i32) -> Substitution {
    let i = x.abs();
    if x > 0 {
        Substitution { i, img_i: [i, i + 1, -i], len_i: 3, img_j: [i, 0, 0], len_j: 1 }
    } else {
        Substitution { i, img_i: [i + 1, 0, 0], len_i: 1, img_j: [-(i + 1), i, i + 1], len_j: 3 }
    }
}

impl Substitution {
    fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out: Vec<i32> = Vec::with_capacity(w.len() + 4);
        let push = |out: &mut Vec<i32>, y: i32| {
            if out.last() == Some(&-y) {
                out.pop();
            } else {
                out.push(y);
            }
        };
        for &x in w.letters() {
            let g = x.abs();
            let img: &[i32] = if g == self.i {
                &self.img_i[..self.len_i]
            } else if g == self.i + 1 {
                &self.img_j[..self.len_j]
            } else {
                push(&mut out, x);
                continue;
            };
            if x > 0 {
                for &y in img {
                    push(&mut out, y);
                }
            } else {
                for &y in img.iter().rev() {
                    push(&mut out, -y);
                }
            }
        }
        FreeWord::from_trusted(w.rank(), out)
    }
}

/// A permutation of `{1, …, d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Identity of degree `d`.
    pub fn identity(d: usize) -> Self {
        Permutation { images: (0..d).collect() }
    }

    /// Builds from one-based images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in images {
            if i == 0 || i > d || seen[i - 1] {
                return Err(Error::Invalid("images do not form a bijection".into()));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|i| i - 1).collect() })
    }

    /// The transposition `(a b)` in `Sym_d`.
    pub fn transposition(d: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > d || b > d {
            return Err(Error::Invalid("bad transposition".into()));
        }
        let mut p = Self::identity(d);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Degree `d`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `π(i)`, one-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// All images, one-based.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `Some((a, b))` with `a < b` when this is a transposition.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = self.images.iter().enumerate().filter(|(i, j)| i != *j).map(|(i, _)| i + 1).collect();
        match moved[..] {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    /// Number of inversions, the length of the permutation braid.
    pub fn inversions(&self) -> usize {
        let p = &self.images;
        let mut c = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    c += 1;
                }
            }
        }
        c
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for s in 0..n {
            if seen[s] || self.images[s] == s {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut i = s;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Left normal form `Δ^p · s_1 ⋯ s_k`.
///
/// Each canonical factor is a permutation braid, stored as the permutation
/// it induces; none is trivial or equal to `Δ`, and each adjacent pair is
/// left-weighted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    /// Number of strands.
    pub strands: usize,
    /// Power of `Δ`.
    pub infimum: i64,
    /// Canonical factors.
    pub factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    /// A braid word with this normal form.
    pub fn to_word(&self) -> ArtinWord {
        let n = self.strands;
        let delta = ArtinWord::half_twist(n);
        let mut w = delta.pow(self.infimum.clamp(i32::MIN as i64, i32::MAX as i64) as i32);
        for f in &self.factors {
            w = w.mul(&simple_word(&f.images));
        }
        w
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.infimum)?;
        for p in &self.factors {
            write!(f, " · {p}")?;
        }
        Ok(())
    }
}

// Simple elements are permutations `π` (strand starting at i ends at π(i)),
// zero-based. Concatenation `xy` has permutation `π_y ∘ π_x`.

fn strand_at(p: &[usize], pos: usize) -> usize {
    p.iter().position(|&x| x == pos).expect("bijection")
}

/// `σ_i ≼ x`: the strands starting at `i` and `i+1` cross.
fn starts_with(p: &[usize], i: usize) -> bool {
    p[i] > p[i + 1]
}

/// `x ≽ σ_i`: the strands ending at `i` and `i+1` cross.
fn ends_with(p: &[usize], i: usize) -> bool {
    strand_at(p, i) > strand_at(p, i + 1)
}

/// `x ↦ x·σ_i`.
fn append(p: &mut [usize], i: usize) {
    for v in p.iter_mut() {
        if *v == i {
            *v = i + 1;
        } else if *v == i + 1 {
            *v = i;
        }
    }
}

/// `x ↦ σ_i⁻¹·x`, assuming `σ_i ≼ x`.
fn strip_front(p: &mut [usize], i: usize) {
    p.swap(i, i + 1);
}

fn tau(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    (0..n).map(|i| n - 1 - p[n - 1 - i]).collect()
}

fn is_delta(p: &[usize]) -> bool {
    let n = p.len();
    p.iter().enumerate().all(|(i, &j)| j == n - 1 - i)
}

fn is_trivial(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &j)| i == j)
}

/// Makes `(a, b)` left-weighted; returns whether anything moved.
fn left_weight(a: &mut [usize], b: &mut [usize]) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let pick = (0..n.saturating_sub(1)).find(|&i| starts_with(b, i) && !ends_with(a, i));
        match pick {
            Some(i) => {
                append(a, i);
                strip_front(b, i);
                moved = true;
            }
            None => return moved,
        }
    }
}

fn simple_word(p: &[usize]) -> ArtinWord {
    let n = p.len();
    let mut q = p.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..n.saturating_sub(1)).find(|&i| ends_with(&q, i)) {
        rev.push(i as i32 + 1);
        append(&mut q, i);
    }
    rev.reverse();
    ArtinWord::from_trusted(n.max(1), rev)
}

fn garside(w: &ArtinWord) -> GarsideNormalForm {
    let n = w.strands;
    let mut inf = 0i64;
    let mut fs: Vec<Vec<usize>> = Vec::new();
    let identity: Vec<usize> = (0..n).collect();
    for &x in &w.letters {
        let i = x.unsigned_abs() as usize - 1;
        if x > 0 {
            let mut s = identity.clone();
            s.swap(i, i + 1);
            fs.push(s);
        } else {
            // x σ_i⁻¹ = Δ⁻¹ τ(x) (Δ σ_i⁻¹)
            inf -= 1;
            for f in fs.iter_mut() {
                *f = tau(f);
            }
            let mut s: Vec<usize> = (0..n).map(|j| n - 1 - j).collect();
            for v in s.iter_mut() {
                if *v == i {
                    *v = i + 1;
                } else if *v == i + 1 {
                    *v = i;
                }
            }
            fs.push(s);
        }
    }
    loop {
        let mut changed = false;
        for j in 0..fs.len().saturating_sub(1) {
            let (l, r) = fs.split_at_mut(j + 1);
            if left_weight(&mut l[j], &mut r[0]) {
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut start = 0;
    while start < fs.len() && is_delta(&fs[start]) {
        inf += 1;
        start += 1;
    }
    let factors = fs[start..].iter().filter(|f| !is_trivial(f)).map(|f| Permutation { images: f.clone() }).collect();
    GarsideNormalForm { strands: n, infimum: inf, factors }
}
