//! Left-greedy Garside normal form for Artin braid groups.
//!
//! Every braid on `n` strands factors uniquely as `Δ^p · A_1 ⋯ A_k` where each
//! `A_i` is a positive permutation braid (a *simple* element), `A_1 ≠ Δ`,
//! `A_k ≠ 1`, and every adjacent pair is left-weighted: the starting set of
//! `A_{i+1}` is contained in the finishing set of `A_i`. Simple elements are
//! stored as permutations, so equality of normal forms is plain equality of
//! integer vectors.

use super::BraidWord;

/// A positive permutation braid, stored by its permutation and inverse.
///
/// `perm[i]` is the bottom position of the strand starting at top position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simple {
    perm: Vec<u32>,
    inv: Vec<u32>,
}

impl Simple {
    pub fn identity(n: usize) -> Self {
        let perm: Vec<u32> = (0..n as u32).collect();
        Simple {
            inv: perm.clone(),
            perm,
        }
    }

    pub fn delta(n: usize) -> Self {
        let perm: Vec<u32> = (0..n as u32).rev().collect();
        Simple {
            inv: perm.clone(),
            perm,
        }
    }

    pub(crate) fn from_perm(perm: Vec<u32>) -> Self {
        let mut inv = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Simple { perm, inv }
    }

    /// The generator `σ_{i+1}` (crossing positions `i` and `i+1`).
    pub fn generator(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.perm.swap(i, i + 1);
        s.inv.swap(i, i + 1);
        s
    }

    /// `Δ · σ_{i+1}^{-1}`, the simple element with `X σ_{i+1} = Δ`.
    fn delta_over_generator(n: usize, i: usize) -> Self {
        let perm = (0..n)
            .map(|x| {
                let y = n - 1 - x;
                if y == i {
                    i as u32 + 1
                } else if y == i + 1 {
                    i as u32
                } else {
                    y as u32
                }
            })
            .collect();
        Self::from_perm(perm)
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &[u32] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.perm.len();
        self.perm
            .iter()
            .enumerate()
            .all(|(i, &p)| p as usize == n - 1 - i)
    }

    /// Conjugation by `Δ`, which maps `σ_i` to `σ_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.perm.len();
        let perm = (0..n)
            .map(|i| (n - 1) as u32 - self.perm[n - 1 - i])
            .collect();
        Self::from_perm(perm)
    }

    /// The right complement `A⁻¹Δ`.
    pub fn right_complement(&self) -> Self {
        let n = self.perm.len();
        let perm = (0..n).map(|i| (n - 1) as u32 - self.inv[i]).collect();
        Self::from_perm(perm)
    }

    fn starts_with(&self, i: usize) -> bool {
        self.perm[i] > self.perm[i + 1]
    }

    fn finishes_with(&self, i: usize) -> bool {
        self.inv[i] > self.inv[i + 1]
    }

    /// A positive word for this element, lexicographically smallest first letters.
    pub fn to_letters(&self) -> Vec<i32> {
        let mut p = self.perm.clone();
        let mut out = Vec::new();
        let n = p.len();
        let mut i = 0;
        while i + 1 < n {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                out.push(i as i32 + 1);
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        out
    }
}

/// Make the pair `(a, b)` left-weighted by moving generators from the front of
/// `b` to the back of `a`. Returns whether anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let n = a.perm.len();
    let mut moved = false;
    loop {
        let Some(i) = (0..n.saturating_sub(1)).find(|&i| b.starts_with(i) && !a.finishes_with(i))
        else {
            return moved;
        };
        // a <- a σ_i : the strands ending at i and i+1 trade places
        let (x, y) = (a.inv[i] as usize, a.inv[i + 1] as usize);
        a.perm.swap(x, y);
        a.inv.swap(i, i + 1);
        // b <- σ_i^{-1} b
        let (u, v) = (b.perm[i] as usize, b.perm[i + 1] as usize);
        b.perm.swap(i, i + 1);
        b.inv.swap(u, v);
        moved = true;
    }
}

/// Append a simple factor to a left-weighted sequence and restore left-weightedness.
fn push_factor(factors: &mut Vec<Simple>, x: Simple) {
    factors.push(x);
    let mut j = factors.len() - 1;
    while j > 0 {
        let (head, tail) = factors.split_at_mut(j);
        if !left_weight(&mut head[j - 1], &mut tail[0]) {
            break;
        }
        j -= 1;
    }
    while factors.last().is_some_and(Simple::is_identity) {
        factors.pop();
    }
    if factors.iter().any(Simple::is_identity) {
        settle(factors);
    }
}

/// Full left-weighting sweeps until nothing moves; only reached if an interior
/// factor was emptied.
fn settle(factors: &mut Vec<Simple>) {
    loop {
        factors.retain(|f| !f.is_identity());
        let mut changed = false;
        for j in (1..factors.len()).rev() {
            let (head, tail) = factors.split_at_mut(j);
            changed |= left_weight(&mut head[j - 1], &mut tail[0]);
        }
        if !changed {
            factors.retain(|f| !f.is_identity());
            return;
        }
    }
}

/// The left normal form `Δ^p · A_1 ⋯ A_k` of a braid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Simple>,
}

impl NormalForm {
    pub fn of(word: &BraidWord) -> Self {
        let n = word.strands();
        if n < 2 {
            return NormalForm {
                strands: n,
                delta_power: 0,
                factors: Vec::new(),
            };
        }
        // Each σ_i^{-1} becomes Δ^{-1}·(Δσ_i^{-1}); pushing every Δ^{-1} to the
        // front conjugates everything to its left by Δ once.
        let total_negative = word.letters().iter().filter(|&&l| l < 0).count();
        let mut negatives_seen = 0;
        let mut factors: Vec<Simple> = Vec::new();
        for &letter in word.letters() {
            let i = letter.unsigned_abs() as usize - 1;
            let mut simple = if letter > 0 {
                Simple::generator(n, i)
            } else {
                negatives_seen += 1;
                Simple::delta_over_generator(n, i)
            };
            if (total_negative - negatives_seen) % 2 == 1 {
                simple = simple.flip();
            }
            push_factor(&mut factors, simple);
        }
        let leading = factors.iter().take_while(|f| f.is_delta()).count();
        factors.drain(..leading);
        NormalForm {
            strands: n,
            delta_power: leading as i64 - total_negative as i64,
            factors,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// A word for this normal form. Negative powers of `Δ` are absorbed into the
    /// leading factors, giving a word of the shape `N⁻¹ P` with `N`, `P` positive.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = Simple::delta(n).to_letters();
        let mut letters = Vec::new();
        let rest: &[Simple];
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                letters.extend_from_slice(&delta);
            }
            rest = &self.factors;
        } else {
            let m = (-self.delta_power) as usize;
            let q = m.min(self.factors.len());
            let mut denominator = Vec::new();
            for j in 0..q {
                let mut c = self.factors[q - 1 - j].right_complement();
                if j % 2 == 1 {
                    c = c.flip();
                }
                denominator.extend(c.to_letters());
            }
            for _ in q..m {
                denominator.extend_from_slice(&delta);
            }
            letters.extend(denominator.iter().rev().map(|l| -l));
            rest = &self.factors[q..];
        }
        for f in rest {
            letters.extend(f.to_letters());
        }
        BraidWord::from_parts_unchecked(n, letters)
    }
}
