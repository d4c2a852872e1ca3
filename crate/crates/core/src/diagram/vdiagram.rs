//! Paired forest diagrams `(F₋, ρ, F₊)` for the unbraided groups `V_{d,r}`.
//!
//! Kept separate from the braided code so that it can serve as a check on it:
//! expansion and reduction here work on permutations only.

use std::fmt;

use crate::braid::Permutation;
use crate::error::{Error, Result};
use crate::forest::Forest;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairedForestDiagram {
    minus: Forest,
    perm: Vec<usize>,
    plus: Forest,
}

impl PairedForestDiagram {
    pub fn new(minus: Forest, perm: Permutation, plus: Forest) -> Result<Self> {
        if minus.arity() != plus.arity() {
            return Err(Error::ArityMismatch {
                left: minus.arity(),
                right: plus.arity(),
            });
        }
        if minus.leaves() != perm.len() || plus.leaves() != perm.len() {
            return Err(Error::LeafMismatch {
                minus: minus.leaves(),
                strands: perm.len(),
                plus: plus.leaves(),
            });
        }
        Ok(PairedForestDiagram {
            minus,
            perm: perm.images().to_vec(),
            plus,
        })
    }

    pub fn identity(d: usize, r: usize) -> Result<Self> {
        let f = Forest::trivial(d, r)?;
        Ok(PairedForestDiagram {
            minus: f.clone(),
            perm: (0..r).collect(),
            plus: f,
        })
    }

    pub fn minus(&self) -> &Forest {
        &self.minus
    }

    pub fn plus(&self) -> &Forest {
        &self.plus
    }

    /// Leaf `i` of `F₋` is joined to leaf `perm()[i]` of `F₊`.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn expand(&self, i: usize) -> Result<Self> {
        let n = self.perm.len();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, size: n });
        }
        let d = self.minus.arity();
        let p = self.perm[i];
        let bump = |q: usize| if q > p { q + d - 1 } else { q };
        let mut perm = Vec::with_capacity(n + d - 1);
        perm.extend(self.perm[..i].iter().map(|&q| bump(q)));
        perm.extend(p..p + d);
        perm.extend(self.perm[i + 1..].iter().map(|&q| bump(q)));
        Ok(PairedForestDiagram {
            minus: self.minus.attach_caret(i)?,
            perm,
            plus: self.plus.attach_caret(p)?,
        })
    }

    fn try_reduce_at(&self, i: usize) -> Option<Self> {
        let d = self.minus.arity();
        let p = self.perm[i];
        if (1..d).any(|j| self.perm[i + j] != p + j) || !self.plus.has_elementary_caret_at(p) {
            return None;
        }
        let drop = |q: usize| if q > p { q - (d - 1) } else { q };
        let perm = self.perm[..i]
            .iter()
            .chain(std::iter::once(&p))
            .chain(&self.perm[i + d..])
            .map(|&q| drop(q))
            .collect();
        Some(PairedForestDiagram {
            minus: self.minus.remove_caret(i).ok()?,
            perm,
            plus: self.plus.remove_caret(p).ok()?,
        })
    }

    pub fn reduce(&self) -> Self {
        let mut x = self.clone();
        while let Some(y) = x
            .minus
            .elementary_carets()
            .into_iter()
            .find_map(|i| x.try_reduce_at(i))
        {
            x = y;
        }
        x
    }

    pub fn invert(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &q) in self.perm.iter().enumerate() {
            inv[q] = i;
        }
        PairedForestDiagram {
            minus: self.plus.clone(),
            perm: inv,
            plus: self.minus.clone(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let (_, pa, pb) = self.plus.join(&other.minus)?;
        let mut a = self.clone();
        for k in pa {
            let i = a.perm.iter().position(|&q| q == k).expect("bijection");
            a = a.expand(i)?;
        }
        let mut b = other.clone();
        for i in pb {
            b = b.expand(i)?;
        }
        let perm = a.perm.iter().map(|&q| b.perm[q]).collect();
        Ok(PairedForestDiagram {
            minus: a.minus,
            perm,
            plus: b.plus,
        }
        .reduce())
    }

    pub fn equal(&self, other: &Self) -> bool {
        self.reduce() == other.reduce()
    }

    pub fn is_identity(&self) -> bool {
        let x = self.reduce();
        x.minus.is_trivial() && x.plus.is_trivial() && x.perm.iter().enumerate().all(|(i, &q)| i == q)
    }
}

impl fmt::Display for PairedForestDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|q| (q + 1).to_string()).collect();
        write!(f, "[{}, [{}], {}]", self.minus, perm.join(" "), self.plus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(minus: &str, perm: &[usize], plus: &str, d: usize) -> PairedForestDiagram {
        let p = Permutation::from_images(perm.iter().map(|x| x - 1).collect()).unwrap();
        PairedForestDiagram::new(
            Forest::parse(minus, d).unwrap(),
            p,
            Forest::parse(plus, d).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn eight_leaf_diagram_reduces_to_six() {
        let top = pf(
            "((...)..)|(...)",
            &[2, 3, 4, 1, 8, 5, 6, 7],
            "(.(...).)|(...)",
            3,
        );
        let bottom = pf("(...)|(...)", &[2, 1, 6, 3, 4, 5], "(...)|(...)", 3);
        assert_eq!(top.reduce(), bottom);
        assert_eq!(bottom.reduce(), bottom);
    }

    #[test]
    fn expand_then_reduce() {
        let x = pf("(..)|.", &[3, 1, 2], "(..)|.", 2);
        for i in 0..3 {
            assert_eq!(x.expand(i).unwrap().reduce(), x.reduce());
        }
    }

    #[test]
    fn inverse_multiplies_to_identity() {
        let x = pf("((..).)", &[2, 3, 1], "(.(..))", 2);
        assert!(x.multiply(&x.invert()).unwrap().is_identity());
        assert!(!x.is_identity());
        let e = PairedForestDiagram::identity(2, 1).unwrap();
        assert!(x.multiply(&e).unwrap().equal(&x));
    }
}
