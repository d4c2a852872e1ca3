//! Labeled braids: a braid on `l` strands with one element of `H ≤ B_d` per strand.

use std::fmt;

use crate::braid::{braid_equal, BraidWord};
use crate::error::{Error, Result};

/// A word in the declared generators of `H`: entry `k > 0` is `g_k`, `-k` is `g_k⁻¹`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(Vec<i32>);

impl Label {
    pub fn identity() -> Self {
        Label(Vec::new())
    }

    /// A freely reduced label from raw signed generator indices.
    pub fn new(word: Vec<i32>) -> Self {
        Label(word).reduced()
    }

    pub fn generator(k: usize) -> Self {
        Label(vec![k as i32])
    }

    pub fn word(&self) -> &[i32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn reduced(self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for x in self.0 {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        Label(out)
    }

    pub fn then(&self, other: &Label) -> Self {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Label(w).reduced()
    }

    pub fn inverse(&self) -> Self {
        Label(self.0.iter().rev().map(|x| -x).collect())
    }

    /// Parse `"g1 g2^-1 g1"` or `"e"`.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |message: String| Error::Parse {
            line: 1,
            column: 1,
            message,
        };
        let mut word = Vec::new();
        for token in text.split_whitespace() {
            if token == "e" {
                continue;
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<i32>()
                        .map_err(|_| err(format!("bad exponent in {token:?}")))?,
                ),
                None => (token, 1),
            };
            let k: i32 = base
                .strip_prefix('g')
                .and_then(|k| k.parse().ok())
                .filter(|&k| k > 0)
                .ok_or_else(|| err(format!("bad generator {token:?}")))?;
            for _ in 0..exp.unsigned_abs() {
                word.push(k * exp.signum());
            }
        }
        Ok(Label::new(word))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&x| {
                if x > 0 {
                    format!("g{x}")
                } else {
                    format!("g{}^-1", -x)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// The label group `H`, given by generating braids in `B_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelGroupSpec {
    d: usize,
    generators: Vec<BraidWord>,
    require_pure: bool,
}

impl LabelGroupSpec {
    pub fn new(d: usize, generators: Vec<BraidWord>, require_pure: bool) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadArity(d));
        }
        for (k, g) in generators.iter().enumerate() {
            if g.strands() != d {
                return Err(Error::GeneratorStrands {
                    index: k + 1,
                    strands: g.strands(),
                    expected: d,
                });
            }
            if require_pure && !g.is_pure() {
                return Err(Error::GeneratorNotPure(k + 1));
            }
        }
        Ok(LabelGroupSpec {
            d,
            generators,
            require_pure,
        })
    }

    /// The trivial group.
    pub fn trivial(d: usize) -> Result<Self> {
        LabelGroupSpec::new(d, Vec::new(), true)
    }

    /// `⟨Δ_d⟩`, or `⟨Δ_d²⟩` when oriented.
    pub fn ribbon(d: usize, oriented: bool) -> Result<Self> {
        let delta = BraidWord::half_twist(d)?;
        if oriented {
            let full = delta.compose(&delta)?;
            LabelGroupSpec::new(d, vec![full], true)
        } else {
            LabelGroupSpec::new(d, vec![delta], false)
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[BraidWord] {
        &self.generators
    }

    pub fn require_pure(&self) -> bool {
        self.require_pure
    }

    /// Whether every generator is a pure braid, whatever was required.
    pub fn is_pure(&self) -> bool {
        self.generators.iter().all(BraidWord::is_pure)
    }

    pub fn check(&self, label: &Label) -> Result<()> {
        match label
            .word()
            .iter()
            .find(|x| x.unsigned_abs() as usize > self.generators.len())
        {
            Some(&x) => Err(Error::UnknownGenerator(x.unsigned_abs() as usize)),
            None => Ok(()),
        }
    }

    /// The braid in `B_d` that a label stands for.
    pub fn realize(&self, label: &Label) -> Result<BraidWord> {
        self.check(label)?;
        let mut letters = Vec::new();
        for &x in label.word() {
            let g = &self.generators[x.unsigned_abs() as usize - 1];
            if x > 0 {
                letters.extend_from_slice(g.letters());
            } else {
                letters.extend(g.letters().iter().rev().map(|l| -l));
            }
        }
        BraidWord::new(self.d, letters)
    }

    pub fn label_equal(&self, a: &Label, b: &Label) -> Result<bool> {
        if a == b {
            return Ok(true);
        }
        braid_equal(&self.realize(a)?, &self.realize(b)?)
    }

    pub fn is_trivial_label(&self, a: &Label) -> Result<bool> {
        Ok(a.is_empty() || self.realize(a)?.is_trivial())
    }
}

/// An element of `B_l(H)`. Labels are indexed by the top position of their strand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledBraid {
    braid: BraidWord,
    labels: Vec<Label>,
}

impl LabeledBraid {
    pub fn new(braid: BraidWord, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != braid.strands() {
            return Err(Error::LabelCount {
                labels: labels.len(),
                strands: braid.strands(),
            });
        }
        Ok(LabeledBraid { braid, labels })
    }

    pub fn identity(strands: usize) -> Self {
        let braid = BraidWord::identity(strands);
        let labels = vec![Label::identity(); braid.strands()];
        LabeledBraid { braid, labels }
    }

    pub fn unlabeled(braid: BraidWord) -> Self {
        let labels = vec![Label::identity(); braid.strands()];
        LabeledBraid { braid, labels }
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn strands(&self) -> usize {
        self.braid.strands()
    }

    pub fn into_parts(self) -> (BraidWord, Vec<Label>) {
        (self.braid, self.labels)
    }

    /// Stack `self` on top of `other`; labels multiply along each strand.
    pub fn multiply(&self, other: &LabeledBraid) -> Result<Self> {
        let braid = self.braid.compose(&other.braid)?;
        let rho = self.braid.permutation();
        let labels = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, a)| a.then(&other.labels[rho.apply(i)]))
            .collect();
        Ok(LabeledBraid { braid, labels })
    }

    pub fn invert(&self) -> Self {
        let inv = self.braid.permutation().inverse();
        let labels = (0..self.strands())
            .map(|j| self.labels[inv.apply(j)].inverse())
            .collect();
        LabeledBraid {
            braid: self.braid.inverse(),
            labels,
        }
    }

    pub fn equal(&self, other: &LabeledBraid, spec: &LabelGroupSpec) -> Result<bool> {
        if !braid_equal(&self.braid, &other.braid)? {
            return Ok(false);
        }
        for (a, b) in self.labels.iter().zip(&other.labels) {
            if !spec.label_equal(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_identity(&self, spec: &LabelGroupSpec) -> Result<bool> {
        if !self.braid.is_trivial() {
            return Ok(false);
        }
        for a in &self.labels {
            if !spec.is_trivial_label(a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The same element with its braid word in canonical form.
    pub fn canonical(&self) -> Self {
        LabeledBraid {
            braid: self.braid.canonical(),
            labels: self.labels.clone(),
        }
    }
}
