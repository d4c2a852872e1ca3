//! Words in the Artin braid groups `B_n`.
//!
//! Letter `k > 0` is `σ_k`, letter `-k` is `σ_k⁻¹`. Words compose left to right,
//! which is top to bottom in a diagram. In `σ_k` the strand at position `k`
//! passes over the strand at position `k + 1`.
//!
//! Equality is decided through the left-greedy Garside normal form in
//! [`garside`].

pub mod garside;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
pub use garside::NormalForm;

/// A permutation of `0..n`, `image[i]` being where `i` goes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &p in &image {
            if p >= n || seen[p] {
                return Err(Error::IndexOutOfRange { index: p, size: n });
            }
            seen[p] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &p) in self.image.iter().enumerate() {
            inv[p] = i;
        }
        Permutation { image: inv }
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation {
            image: self.image.iter().map(|&p| other.image[p]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// The `k` with `ρ(i) = i + k (mod n)` for every `i`, if there is one.
    pub fn cyclic_shift(&self) -> Option<usize> {
        let n = self.image.len();
        if n == 0 {
            return Some(0);
        }
        let k = self.image[0];
        self.image
            .iter()
            .enumerate()
            .all(|(i, &p)| p == (i + k) % n)
            .then_some(k)
    }

    /// Replace each point `i` by a block of `widths[i]` consecutive points that
    /// travel together and keep their order.
    pub fn expand_blocks(&self, widths: &[usize]) -> Result<Self> {
        let n = self.image.len();
        if widths.len() != n {
            return Err(Error::WidthCount {
                expected: n,
                got: widths.len(),
            });
        }
        let inv = self.inverse();
        // bottom position q holds the block of top strand inv(q)
        let mut bottom_start = vec![0; n];
        let mut acc = 0;
        for q in 0..n {
            bottom_start[inv.image[q]] = acc;
            acc += widths[inv.image[q]];
        }
        let mut image = Vec::with_capacity(acc);
        for i in 0..n {
            image.extend((0..widths[i]).map(|j| bottom_start[i] + j));
        }
        Ok(Permutation { image })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|p| (p + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A word in the Artin generators of `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(&bad) = letters
            .iter()
            .find(|l| **l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(BraidWord::new(strands, letters.clone()).is_ok());
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    /// Parse `"1 -2 3"`, optionally prefixed by `B<n>:`. Without a prefix the
    /// strand count must be supplied.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let err = |message: String| Error::Parse {
            line: 1,
            column: 1,
            message,
        };
        let text = text.trim();
        let (prefix, body) = match text.split_once(':') {
            Some((p, b)) if p.trim_start().starts_with('B') => (Some(p.trim()), b),
            _ => (None, text),
        };
        let n = match prefix {
            Some(p) => {
                let n: usize = p[1..]
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad strand prefix {p:?}")))?;
                if let Some(expected) = strands {
                    if expected != n {
                        return Err(Error::StrandMismatch {
                            left: n,
                            right: expected,
                        });
                    }
                }
                n
            }
            None => strands.ok_or_else(|| err("missing strand count".into()))?,
        };
        let letters = body
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| err(format!("bad letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Concatenation `self · other`.
    pub fn compose(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Cancel adjacent `σ_i σ_i⁻¹` pairs.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// `ρ(i)`: the bottom position of the strand that starts at top position `i`.
    pub fn permutation(&self) -> Permutation {
        // at[p] = strand currently at position p
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            at.swap(k, k + 1);
        }
        Permutation { image: at }.inverse()
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    pub fn cyclic_shift(&self) -> Option<usize> {
        self.permutation().cyclic_shift()
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic_shift().is_some()
    }

    /// The same letters on `total` strands, moved right by `offset` positions.
    pub fn shifted(&self, offset: usize, total: usize) -> Result<Self> {
        if offset + self.strands > total {
            return Err(Error::IndexOutOfRange {
                index: offset + self.strands,
                size: total,
            });
        }
        let o = offset as i32;
        Ok(BraidWord {
            strands: total,
            letters: self
                .letters
                .iter()
                .map(|&l| if l > 0 { l + o } else { l - o })
                .collect(),
        })
    }

    /// The Garside half twist `Δ_d = σ_1 (σ_2 σ_1) ⋯ (σ_{d-1} ⋯ σ_1)`.
    pub fn half_twist(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadArity(d));
        }
        let mut letters = Vec::with_capacity(d * (d - 1) / 2);
        for top in 1..d as i32 {
            letters.extend((1..=top).rev());
        }
        Ok(BraidWord {
            strands: d,
            letters,
        })
    }

    /// The positive braid in which every pair of strands crosses at most once
    /// and whose permutation is `perm`.
    pub fn permutation_braid(perm: &Permutation) -> Self {
        let n = perm.len().max(1);
        let simple = garside::Simple::from_perm(perm.images().iter().map(|&p| p as u32).collect());
        BraidWord {
            strands: n,
            letters: if perm.is_empty() { Vec::new() } else { simple.to_letters() },
        }
    }

    /// Geometric cabling: strand `j` (counted at the top) becomes `widths[j]`
    /// parallel strands. Widths follow their strands through the word.
    pub fn cable(&self, widths: &[usize]) -> Result<Self> {
        if widths.len() != self.strands {
            return Err(Error::WidthCount {
                expected: self.strands,
                got: widths.len(),
            });
        }
        if widths.contains(&0) {
            return Err(Error::ZeroWidth);
        }
        let total: usize = widths.iter().sum();
        let mut at = widths.to_vec();
        let mut letters = Vec::new();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            let (a, b) = (at[k], at[k + 1]);
            let s: usize = at[..k].iter().sum();
            let sign = l.signum();
            // the left block moves right across the right block, one strand at a time
            for i in (0..a).rev() {
                for j in 1..=b {
                    letters.push(sign * (s + i + j) as i32);
                }
            }
            at.swap(k, k + 1);
        }
        Ok(BraidWord {
            strands: total,
            letters,
        })
    }

    /// Cable only strand `i` into `width` strands.
    pub fn cable_at(&self, i: usize, width: usize) -> Result<Self> {
        if i >= self.strands {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: self.strands,
            });
        }
        let mut widths = vec![1; self.strands];
        widths[i] = width;
        self.cable(&widths)
    }

    /// Forget the strands that start at the given top positions.
    pub fn delete_strands(&self, deleted: &BTreeSet<usize>) -> Result<Self> {
        if let Some(&bad) = deleted.iter().find(|&&s| s >= self.strands) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: self.strands,
            });
        }
        if deleted.len() >= self.strands {
            return Err(Error::DeleteAll);
        }
        let mut at: Vec<usize> = (0..self.strands).collect();
        let gone: Vec<bool> = (0..self.strands).map(|s| deleted.contains(&s)).collect();
        let mut letters = Vec::new();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            if !gone[at[k]] && !gone[at[k + 1]] {
                let before = at[..k].iter().filter(|&&s| gone[s]).count();
                let new_k = (k - before + 1) as i32;
                letters.push(l.signum() * new_k);
            }
            at.swap(k, k + 1);
        }
        Ok(BraidWord {
            strands: self.strands - deleted.len(),
            letters,
        })
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::of(self)
    }

    /// The word read off the Garside normal form; equal braids give equal words.
    pub fn canonical(&self) -> Self {
        self.normal_form().to_word()
    }

    pub fn is_trivial(&self) -> bool {
        if self.strands < 2 || self.letters.is_empty() {
            return true;
        }
        if self.exponent_sum() != 0 || !self.is_pure() {
            return false;
        }
        self.normal_form().is_identity()
    }

    /// Whether both words represent the same braid.
    pub fn equivalent(&self, other: &BraidWord) -> Result<bool> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        if self.letters == other.letters {
            return Ok(true);
        }
        if self.exponent_sum() != other.exponent_sum() || self.permutation() != other.permutation()
        {
            return Ok(false);
        }
        Ok(self.normal_form() == other.normal_form())
    }
}

/// Decide equality in `B_n`.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.equivalent(b)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}
