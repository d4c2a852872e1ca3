//! Ordered forests of rooted `d`-ary trees.
//!
//! Leaves are numbered from 0 left to right across the whole forest in
//! depth-first order. The text form is `tree := "." | "(" tree{d} ")"` with the
//! trees of a forest separated by `|`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Caret(Vec<Tree>),
}

impl Tree {
    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Caret(children) => children.iter().map(Tree::leaves).sum(),
        }
    }

    pub fn carets(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Caret(children) => 1 + children.iter().map(Tree::carets).sum::<usize>(),
        }
    }

    fn caret(d: usize) -> Tree {
        Tree::Caret(vec![Tree::Leaf; d])
    }

    fn is_elementary_caret(&self) -> bool {
        matches!(self, Tree::Caret(c) if c.iter().all(|t| *t == Tree::Leaf))
    }

    fn check_arity(&self, d: usize) -> Result<()> {
        match self {
            Tree::Leaf => Ok(()),
            Tree::Caret(children) if children.len() == d => {
                children.iter().try_for_each(|c| c.check_arity(d))
            }
            Tree::Caret(children) => Err(Error::ArityMismatch {
                left: d,
                right: children.len(),
            }),
        }
    }

    /// Replace the leaf with local index `i` by `with`. `i` must be in range.
    fn replace_leaf(&mut self, i: usize, with: Tree) {
        match self {
            Tree::Leaf => *self = with,
            Tree::Caret(children) => {
                let mut i = i;
                for c in children {
                    let n = c.leaves();
                    if i < n {
                        c.replace_leaf(i, with);
                        return;
                    }
                    i -= n;
                }
                unreachable!("leaf index checked by caller")
            }
        }
    }

    /// Collapse the elementary caret whose first leaf has local index `i`.
    fn collapse(&mut self, i: usize) -> bool {
        if i == 0 && self.is_elementary_caret() {
            *self = Tree::Leaf;
            return true;
        }
        let Tree::Caret(children) = self else {
            return false;
        };
        let mut i = i;
        for c in children {
            let n = c.leaves();
            if i < n {
                return c.collapse(i);
            }
            i -= n;
        }
        false
    }

    fn is_prefix_of(&self, other: &Tree) -> bool {
        match (self, other) {
            (Tree::Leaf, _) => true,
            (Tree::Caret(_), Tree::Leaf) => false,
            (Tree::Caret(a), Tree::Caret(b)) => a.iter().zip(b).all(|(x, y)| x.is_prefix_of(y)),
        }
    }

    fn union(&self, other: &Tree) -> Tree {
        match (self, other) {
            (Tree::Leaf, t) | (t, Tree::Leaf) => t.clone(),
            (Tree::Caret(a), Tree::Caret(b)) => {
                Tree::Caret(a.iter().zip(b).map(|(x, y)| x.union(y)).collect())
            }
        }
    }

    /// Push `(leaf start, is elementary)` for every caret, in leaf order.
    fn caret_starts(&self, offset: usize, out: &mut Vec<(usize, bool)>) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Caret(children) => {
                out.push((offset, self.is_elementary_caret()));
                let mut n = 0;
                for c in children {
                    n += c.caret_starts(offset + n, out);
                }
                n
            }
        }
    }

    /// For each leaf of `self` in order: whether the same node of `target` is a caret.
    fn leaves_internal_in(&self, target: &Tree, out: &mut Vec<bool>) {
        match (self, target) {
            (Tree::Leaf, t) => out.push(matches!(t, Tree::Caret(_))),
            (Tree::Caret(a), Tree::Caret(b)) => {
                for (x, y) in a.iter().zip(b) {
                    x.leaves_internal_in(y, out);
                }
            }
            (Tree::Caret(a), Tree::Leaf) => {
                for x in a {
                    x.leaves_internal_in(&Tree::Leaf, out);
                }
            }
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("."),
            Tree::Caret(children) => {
                f.write_str("(")?;
                for c in children {
                    c.write(f)?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Caret insertions, each leaf index referring to the forest as it stands
/// after the previous insertions.
pub type ExpansionPath = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Forest {
    arity: usize,
    trees: Vec<Tree>,
}

impl Forest {
    pub fn new(arity: usize, trees: Vec<Tree>) -> Result<Self> {
        if arity < 2 {
            return Err(Error::BadArity(arity));
        }
        if trees.is_empty() {
            return Err(Error::NoRoots);
        }
        trees.iter().try_for_each(|t| t.check_arity(arity))?;
        Ok(Forest { arity, trees })
    }

    /// The forest `1_n` of `n` single-leaf trees.
    pub fn trivial(arity: usize, roots: usize) -> Result<Self> {
        Forest::new(arity, vec![Tree::Leaf; roots])
    }

    /// `n` roots, root `j` carrying a single caret exactly when `j ∈ carets`.
    pub fn elementary(arity: usize, roots: usize, carets: &[usize]) -> Result<Self> {
        let mut trees = vec![Tree::Leaf; roots];
        for &j in carets {
            if j >= roots {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    size: roots,
                });
            }
            trees[j] = Tree::caret(arity);
        }
        Forest::new(arity, trees)
    }

    pub fn parse(text: &str, arity: usize) -> Result<Self> {
        let err = |column: usize, message: &str| Error::Parse {
            line: 1,
            column: column + 1,
            message: message.to_string(),
        };
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;

        fn tree(chars: &[char], pos: &mut usize, arity: usize) -> std::result::Result<Tree, (usize, &'static str)> {
            match chars.get(*pos) {
                Some('.') => {
                    *pos += 1;
                    Ok(Tree::Leaf)
                }
                Some('(') => {
                    *pos += 1;
                    let mut children = Vec::new();
                    while chars.get(*pos) != Some(&')') {
                        if *pos >= chars.len() {
                            return Err((*pos, "unclosed caret"));
                        }
                        children.push(tree(chars, pos, arity)?);
                    }
                    if children.len() != arity {
                        return Err((*pos, "caret has the wrong number of children"));
                    }
                    *pos += 1;
                    Ok(Tree::Caret(children))
                }
                _ => Err((*pos, "expected '.' or '('")),
            }
        }

        let mut trees = Vec::new();
        loop {
            trees.push(tree(&chars, &mut pos, arity).map_err(|(c, m)| err(c, m))?);
            match chars.get(pos) {
                None => break,
                Some('|') => pos += 1,
                Some(_) => return Err(err(pos, "expected '|' between trees")),
            }
        }
        Forest::new(arity, trees)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn roots(&self) -> usize {
        self.trees.len()
    }

    pub fn leaves(&self) -> usize {
        self.trees.iter().map(Tree::leaves).sum()
    }

    pub fn carets(&self) -> usize {
        self.trees.iter().map(Tree::carets).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.trees.iter().all(|t| *t == Tree::Leaf)
    }

    /// Every caret hangs directly from a root and has only leaves below it.
    pub fn is_elementary(&self) -> bool {
        self.trees
            .iter()
            .all(|t| *t == Tree::Leaf || t.is_elementary_caret())
    }

    /// The root whose tree contains leaf `i`, and the local index of `i` in it.
    fn locate(&self, i: usize) -> Result<(usize, usize)> {
        let mut i_local = i;
        for (r, t) in self.trees.iter().enumerate() {
            let n = t.leaves();
            if i_local < n {
                return Ok((r, i_local));
            }
            i_local -= n;
        }
        Err(Error::IndexOutOfRange {
            index: i,
            size: self.leaves(),
        })
    }

    /// The root carrying each leaf.
    pub fn leaf_roots(&self) -> Vec<usize> {
        self.trees
            .iter()
            .enumerate()
            .flat_map(|(r, t)| std::iter::repeat(r).take(t.leaves()))
            .collect()
    }

    pub fn attach_caret(&self, i: usize) -> Result<Self> {
        let (r, local) = self.locate(i)?;
        let mut out = self.clone();
        out.trees[r].replace_leaf(local, Tree::caret(self.arity));
        Ok(out)
    }

    /// Undo [`Forest::attach_caret`]: turn the elementary caret over leaves
    /// `i..i+d` back into a leaf.
    pub fn remove_caret(&self, i: usize) -> Result<Self> {
        let (r, local) = self.locate(i)?;
        let mut out = self.clone();
        if out.trees[r].collapse(local) {
            Ok(out)
        } else {
            Err(Error::NoCaretAt(i))
        }
    }

    /// First leaves of all carets whose children are all leaves, in order.
    pub fn elementary_carets(&self) -> Vec<usize> {
        self.caret_starts_flagged()
            .into_iter()
            .filter_map(|(s, e)| e.then_some(s))
            .collect()
    }

    fn caret_starts_flagged(&self) -> Vec<(usize, bool)> {
        let mut out = Vec::new();
        let mut offset = 0;
        for t in &self.trees {
            offset += t.caret_starts(offset, &mut out);
        }
        out
    }

    pub fn has_elementary_caret_at(&self, i: usize) -> bool {
        self.caret_starts_flagged().contains(&(i, true))
    }

    fn check_compatible(&self, other: &Forest) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        if self.roots() != other.roots() {
            return Err(Error::RootMismatch {
                left: self.roots(),
                right: other.roots(),
            });
        }
        Ok(())
    }

    /// Whether `other` is obtained from `self` by attaching carets.
    pub fn is_prefix(&self, other: &Forest) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self
            .trees
            .iter()
            .zip(&other.trees)
            .all(|(a, b)| a.is_prefix_of(b)))
    }

    /// Leaves at which carets must be attached, one after another, to turn
    /// `self` into `target`.
    pub fn path_to(&self, target: &Forest) -> Result<ExpansionPath> {
        if !self.is_prefix(target)? {
            return Err(Error::Shape(format!("{target} does not refine {self}")));
        }
        let mut current = self.clone();
        let mut path = Vec::new();
        loop {
            let mut flags = Vec::new();
            for (a, b) in current.trees.iter().zip(&target.trees) {
                a.leaves_internal_in(b, &mut flags);
            }
            let Some(i) = flags.iter().position(|&f| f) else {
                return Ok(path);
            };
            current = current.attach_caret(i)?;
            path.push(i);
        }
    }

    pub fn replay(&self, path: &[usize]) -> Result<Self> {
        path.iter().try_fold(self.clone(), |f, &i| f.attach_caret(i))
    }

    /// The smallest common refinement, with a path to it from each side.
    pub fn join(&self, other: &Forest) -> Result<(Forest, ExpansionPath, ExpansionPath)> {
        self.check_compatible(other)?;
        let joined = Forest {
            arity: self.arity,
            trees: self
                .trees
                .iter()
                .zip(&other.trees)
                .map(|(a, b)| a.union(b))
                .collect(),
        };
        let p = self.path_to(&joined)?;
        let q = other.path_to(&joined)?;
        Ok((joined, p, q))
    }

    /// The leaf intervals `(first, last)` of the carets of an elementary forest.
    pub fn to_matching(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_elementary() {
            return Err(Error::NotElementary);
        }
        Ok(self
            .elementary_carets()
            .into_iter()
            .map(|s| (s, s + self.arity - 1))
            .collect())
    }

    /// The elementary forest on `leaves` leaves whose carets cover the given intervals.
    pub fn from_matching(arity: usize, leaves: usize, intervals: &[(usize, usize)]) -> Result<Self> {
        if arity < 2 {
            return Err(Error::BadArity(arity));
        }
        let mut sorted = intervals.to_vec();
        sorted.sort_unstable();
        let mut trees = Vec::new();
        let mut next = 0;
        for &(start, end) in &sorted {
            if end + 1 != start + arity || end >= leaves {
                return Err(Error::BadInterval {
                    start,
                    end,
                    arity,
                    leaves,
                });
            }
            if start < next {
                return Err(Error::OverlappingIntervals);
            }
            trees.extend(std::iter::repeat(Tree::Leaf).take(start - next));
            trees.push(Tree::caret(arity));
            next = end + 1;
        }
        trees.extend(std::iter::repeat(Tree::Leaf).take(leaves - next));
        Forest::new(arity, trees)
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.trees.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            t.write(f)?;
        }
        Ok(())
    }
}
