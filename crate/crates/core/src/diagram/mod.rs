//! Braided forest diagrams ("spraiges") and the groups `bV`, `bF`, `bT`.
//!
//! A spraige `(F₋, (b, λ), F₊)` has a labeled braid running from the leaves of
//! `F₋` (top) to the leaves of `F₊` (bottom). The roots of `F₋` are its heads
//! and the roots of `F₊` its feet; group elements have `r` heads and `r` feet.

mod dangling;
pub mod vdiagram;

use std::collections::BTreeSet;
use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::labeled::{Label, LabelGroupSpec, LabeledBraid};

pub use dangling::{arc_support, dangling_equal};
pub use vdiagram::PairedForestDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    V,
    F,
    T,
}

impl Flavor {
    pub fn parse(s: &str) -> Option<Flavor> {
        match s {
            "V" => Some(Flavor::V),
            "F" => Some(Flavor::F),
            "T" => Some(Flavor::T),
            _ => None,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::V => "V",
            Flavor::F => "F",
            Flavor::T => "T",
        })
    }
}

/// Which caret `reduce` tries first. The result does not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReduceOrder {
    #[default]
    Lowest,
    Highest,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spraige {
    minus: Forest,
    lb: LabeledBraid,
    plus: Forest,
}

impl Spraige {
    pub fn new(minus: Forest, lb: LabeledBraid, plus: Forest) -> Result<Self> {
        if minus.arity() != plus.arity() {
            return Err(Error::ArityMismatch {
                left: minus.arity(),
                right: plus.arity(),
            });
        }
        if minus.leaves() != lb.strands() || plus.leaves() != lb.strands() {
            return Err(Error::LeafMismatch {
                minus: minus.leaves(),
                strands: lb.strands(),
                plus: plus.leaves(),
            });
        }
        Ok(Spraige { minus, lb, plus })
    }

    /// `(1_n, (id, ι), 1_n)`.
    pub fn identity(d: usize, n: usize) -> Result<Self> {
        let f = Forest::trivial(d, n)?;
        Ok(Spraige {
            lb: LabeledBraid::identity(n),
            minus: f.clone(),
            plus: f,
        })
    }

    /// `λ^{(n)}_J = (F^{(n)}_J, (id, ι), 1_{n+(d-1)|J|})`.
    pub fn lambda(d: usize, n: usize, carets: &[usize]) -> Result<Self> {
        let minus = Forest::elementary(d, n, carets)?;
        let l = minus.leaves();
        Spraige::new(minus, LabeledBraid::identity(l), Forest::trivial(d, l)?)
    }

    /// `μ^{(n)}_J`, the inverse of `λ^{(n)}_J`.
    pub fn mu(d: usize, n: usize, carets: &[usize]) -> Result<Self> {
        Ok(Spraige::lambda(d, n, carets)?.invert())
    }

    pub fn minus(&self) -> &Forest {
        &self.minus
    }

    pub fn plus(&self) -> &Forest {
        &self.plus
    }

    pub fn lb(&self) -> &LabeledBraid {
        &self.lb
    }

    pub fn braid(&self) -> &BraidWord {
        self.lb.braid()
    }

    pub fn labels(&self) -> &[Label] {
        self.lb.labels()
    }

    pub fn arity(&self) -> usize {
        self.minus.arity()
    }

    pub fn heads(&self) -> usize {
        self.minus.roots()
    }

    pub fn feet(&self) -> usize {
        self.plus.roots()
    }

    pub fn leaves(&self) -> usize {
        self.lb.strands()
    }

    pub fn invert(&self) -> Self {
        Spraige {
            minus: self.plus.clone(),
            lb: self.lb.invert(),
            plus: self.minus.clone(),
        }
    }

    /// Split leaf `i` of `F₋` (and its partner `ρ(i)` of `F₊`), cabling the
    /// strand and putting the braid of its label at the top of the cable.
    pub fn expand(&self, spec: &LabelGroupSpec, i: usize) -> Result<Self> {
        let n = self.leaves();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, size: n });
        }
        let d = self.arity();
        let p = self.braid().permutation().apply(i);
        let label = &self.labels()[i];
        let inner = spec.realize(label)?.shifted(i, n + d - 1)?;
        let braid = inner.compose(&self.braid().cable_at(i, d)?)?;
        let mut labels = Vec::with_capacity(n + d - 1);
        labels.extend_from_slice(&self.labels()[..i]);
        labels.extend(std::iter::repeat(label.clone()).take(d));
        labels.extend_from_slice(&self.labels()[i + 1..]);
        Ok(Spraige {
            minus: self.minus.attach_caret(i)?,
            lb: LabeledBraid::new(braid, labels)?,
            plus: self.plus.attach_caret(p)?,
        })
    }

    /// Expand along leaves of `F₊`, as produced by [`Forest::join`].
    fn expand_plus_path(&self, spec: &LabelGroupSpec, path: &[usize]) -> Result<Self> {
        let mut s = self.clone();
        for &k in path {
            let i = s.braid().permutation().inverse().apply(k);
            s = s.expand(spec, i)?;
        }
        Ok(s)
    }

    fn expand_minus_path(&self, spec: &LabelGroupSpec, path: &[usize]) -> Result<Self> {
        path.iter().try_fold(self.clone(), |s, &i| s.expand(spec, i))
    }

    /// Undo an expansion at the elementary caret of `F₋` starting at leaf `i`,
    /// if the diagram has the shape an expansion would produce there.
    pub fn try_reduce_at(&self, spec: &LabelGroupSpec, i: usize) -> Result<Option<Self>> {
        if !self.minus.has_elementary_caret_at(i) {
            return Err(Error::NoCaretAt(i));
        }
        let d = self.arity();
        let rho = self.braid().permutation();
        let images: BTreeSet<usize> = (i..i + d).map(|j| rho.apply(j)).collect();
        let p = *images.first().expect("arity is at least 2");
        if *images.last().expect("nonempty") != p + d - 1 || !self.plus.has_elementary_caret_at(p) {
            return Ok(None);
        }
        let labels = self.labels();
        for j in i + 1..i + d {
            if !spec.label_equal(&labels[i], &labels[j])? {
                return Ok(None);
            }
        }
        let h = spec.realize(&labels[i])?;
        // the inner braid must move the block exactly as the strands do
        let block_perm: Vec<usize> = (i..i + d).map(|j| rho.apply(j) - p).collect();
        if h.permutation().images() != block_perm.as_slice() {
            return Ok(None);
        }
        let others: BTreeSet<usize> = (i + 1..i + d).collect();
        let reduced = self.braid().delete_strands(&others)?;
        let rebuilt = h
            .shifted(i, self.leaves())?
            .compose(&reduced.cable_at(i, d)?)?;
        if !rebuilt.equivalent(self.braid())? {
            return Ok(None);
        }
        let mut new_labels = Vec::with_capacity(self.leaves() - d + 1);
        new_labels.extend_from_slice(&labels[..=i]);
        new_labels.extend_from_slice(&labels[i + d..]);
        Ok(Some(Spraige {
            minus: self.minus.remove_caret(i)?,
            lb: LabeledBraid::new(reduced, new_labels)?,
            plus: self.plus.remove_caret(p)?,
        }))
    }

    /// The unique reduced representative, with its braid word in canonical form.
    pub fn reduce(&self, spec: &LabelGroupSpec) -> Result<Self> {
        self.reduce_with(spec, ReduceOrder::Lowest)
    }

    pub fn reduce_with(&self, spec: &LabelGroupSpec, order: ReduceOrder) -> Result<Self> {
        let mut s = self.clone();
        'outer: loop {
            let mut carets = s.minus.elementary_carets();
            if order == ReduceOrder::Highest {
                carets.reverse();
            }
            for i in carets {
                if let Some(t) = s.try_reduce_at(spec, i)? {
                    s = t;
                    continue 'outer;
                }
            }
            break;
        }
        s.lb = s.lb.canonical();
        Ok(s)
    }

    pub fn is_reduced(&self, spec: &LabelGroupSpec) -> Result<bool> {
        for i in self.minus.elementary_carets() {
            if self.try_reduce_at(spec, i)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The product before reduction: both factors expanded to a common middle forest.
    pub fn compose_unreduced(&self, spec: &LabelGroupSpec, other: &Spraige) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        if self.feet() != other.heads() {
            return Err(Error::Shape(format!(
                "left factor has {} feet, right factor has {} heads",
                self.feet(),
                other.heads()
            )));
        }
        let (_, path_g, path_h) = self.plus.join(&other.minus)?;
        let g = self.expand_plus_path(spec, &path_g)?;
        let h = other.expand_minus_path(spec, &path_h)?;
        Ok(Spraige {
            minus: g.minus,
            lb: g.lb.multiply(&h.lb)?,
            plus: h.plus,
        })
    }

    pub fn multiply(&self, spec: &LabelGroupSpec, other: &Spraige) -> Result<Self> {
        self.compose_unreduced(spec, other)?.reduce(spec)
    }

    /// Whether this represents `1_n`. Every representative of the identity is
    /// an expansion of the trivial diagram, and those are exactly the diagrams
    /// with equal forests, trivial braid and trivial labels.
    pub fn is_identity(&self, spec: &LabelGroupSpec) -> Result<bool> {
        if self.heads() != self.feet() {
            return Err(Error::Shape(format!(
                "{} heads but {} feet",
                self.heads(),
                self.feet()
            )));
        }
        Ok(self.minus == self.plus && self.lb.is_identity(spec)?)
    }

    pub fn equal(&self, spec: &LabelGroupSpec, other: &Spraige) -> Result<bool> {
        if self.heads() != other.heads() || self.feet() != other.feet() {
            return Err(Error::Shape(format!(
                "({}, {}) vs ({}, {}) heads and feet",
                self.heads(),
                self.feet(),
                other.heads(),
                other.feet()
            )));
        }
        self.compose_unreduced(spec, &other.invert())?
            .is_identity(spec)
    }

    /// The realized label of the first strand.
    pub fn first_label(&self, spec: &LabelGroupSpec) -> Result<BraidWord> {
        spec.realize(&self.labels()[0])
    }
}

impl fmt::Display for Spraige {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(Label::to_string).collect();
        write!(
            f,
            "[{}, ({}; {}), {}]",
            self.minus,
            self.braid(),
            labels.join("; "),
            self.plus
        )
    }
}

/// The data fixing one of the groups `bV_{d,r}(H)`, `bF_{d,r}(H)`, `bT_{d,r}(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupContext {
    r: usize,
    spec: LabelGroupSpec,
    flavor: Flavor,
}

impl GroupContext {
    pub fn new(r: usize, spec: LabelGroupSpec, flavor: Flavor) -> Result<Self> {
        if r == 0 {
            return Err(Error::Context("r must be at least 1".into()));
        }
        if flavor != Flavor::V && !spec.require_pure() {
            return Err(Error::Context(format!(
                "flavor {flavor} needs a label group of pure braids"
            )));
        }
        Ok(GroupContext { r, spec, flavor })
    }

    pub fn d(&self) -> usize {
        self.spec.d()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn spec(&self) -> &LabelGroupSpec {
        &self.spec
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn identity(&self) -> Spraige {
        Spraige::identity(self.d(), self.r).expect("context parameters are valid")
    }

    /// Check that `s` is a well-formed element of this group.
    pub fn check(&self, s: &Spraige) -> Result<()> {
        if s.arity() != self.d() {
            return Err(Error::ArityMismatch {
                left: self.d(),
                right: s.arity(),
            });
        }
        if s.heads() != self.r || s.feet() != self.r {
            return Err(Error::Shape(format!(
                "element has {} heads and {} feet, group has r = {}",
                s.heads(),
                s.feet(),
                self.r
            )));
        }
        self.check_labels_and_flavor(s)
    }

    /// The checks of [`GroupContext::check`] that also make sense for spraiges
    /// with other numbers of heads and feet.
    pub fn check_labels_and_flavor(&self, s: &Spraige) -> Result<()> {
        if s.arity() != self.d() {
            return Err(Error::ArityMismatch {
                left: self.d(),
                right: s.arity(),
            });
        }
        s.labels().iter().try_for_each(|l| self.spec.check(l))?;
        let ok = match self.flavor {
            Flavor::V => true,
            Flavor::F => s.braid().is_pure(),
            Flavor::T => s.braid().is_cyclic(),
        };
        if !ok {
            return Err(Error::Shape(format!(
                "braid permutation {} is not allowed in flavor {}",
                s.braid().permutation(),
                self.flavor
            )));
        }
        Ok(())
    }

    pub fn reduce(&self, s: &Spraige) -> Result<Spraige> {
        s.reduce(&self.spec)
    }

    pub fn multiply(&self, a: &Spraige, b: &Spraige) -> Result<Spraige> {
        a.multiply(&self.spec, b)
    }

    pub fn invert(&self, a: &Spraige) -> Spraige {
        a.invert()
    }

    pub fn is_identity(&self, a: &Spraige) -> Result<bool> {
        a.is_identity(&self.spec)
    }

    pub fn equal(&self, a: &Spraige, b: &Spraige) -> Result<bool> {
        a.equal(&self.spec, b)
    }

    fn require_pure_spec(&self) -> Result<()> {
        if self.spec.require_pure() {
            Ok(())
        } else {
            Err(Error::NotPureContext)
        }
    }

    pub fn in_bf(&self, s: &Spraige) -> Result<bool> {
        self.require_pure_spec()?;
        Ok(self.reduce(s)?.braid().is_pure())
    }

    pub fn in_bt(&self, s: &Spraige) -> Result<bool> {
        self.require_pure_spec()?;
        Ok(self.reduce(s)?.braid().is_cyclic())
    }

    /// Forget labels and braiding, keeping the permutation.
    pub fn project_to_v(&self, s: &Spraige) -> Result<PairedForestDiagram> {
        if !self.spec.is_pure() {
            return Err(Error::NotPureContext);
        }
        PairedForestDiagram::new(s.minus.clone(), s.braid().permutation(), s.plus.clone())
    }

    /// `h ↦ [1_r, (id, λ_h), 1_r]` with every strand labeled `h`.
    pub fn iota(&self, h: &Label) -> Result<Spraige> {
        self.spec.check(h)?;
        let lb = LabeledBraid::new(BraidWord::identity(self.r), vec![h.clone(); self.r])?;
        let f = Forest::trivial(self.d(), self.r)?;
        Spraige::new(f.clone(), lb, f)
    }

    /// `h ↦ [T₁, (id, λ'_h), T₁]` where `T₁` has a single caret on its first
    /// root and only the first strand is labeled `h`.
    pub fn iota_prime(&self, h: &Label) -> Result<Spraige> {
        self.spec.check(h)?;
        let t1 = Forest::elementary(self.d(), self.r, &[0])?;
        let mut labels = vec![Label::identity(); t1.leaves()];
        labels[0] = h.clone();
        let lb = LabeledBraid::new(BraidWord::identity(t1.leaves()), labels)?;
        Spraige::new(t1.clone(), lb, t1)
    }

    /// `[F₋, (b, λ), F₊] ↦ λ(1)`, realized in `B_d`.
    pub fn retract(&self, s: &Spraige) -> Result<BraidWord> {
        s.first_label(&self.spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn trivial_spec(d: usize) -> LabelGroupSpec {
        LabelGroupSpec::trivial(d).unwrap()
    }

    #[test]
    fn expanding_identity() {
        let spec = trivial_spec(3);
        let e = Spraige::identity(3, 2).unwrap();
        for i in 0..2 {
            let x = e.expand(&spec, i).unwrap();
            assert_eq!(x.leaves(), 4);
            assert_eq!(x.minus(), x.plus());
            assert_eq!(x.minus(), &Forest::elementary(3, 2, &[i]).unwrap());
            assert!(x.braid().is_empty());
            assert!(x.is_identity(&spec).unwrap());
            assert_eq!(x.reduce(&spec).unwrap(), e);
        }
        assert!(e.expand(&spec, 2).is_err());
    }

    #[test]
    fn single_caret_swap() {
        let spec = trivial_spec(2);
        let f = Forest::parse("(..)", 2).unwrap();
        let s = Spraige::new(f.clone(), LabeledBraid::unlabeled(w(2, &[1])), f).unwrap();
        assert!(s.is_reduced(&spec).unwrap());
        assert!(!s.is_identity(&spec).unwrap());
        let ctx = GroupContext::new(1, spec, Flavor::V).unwrap();
        assert!(ctx.in_bt(&s).unwrap());
        assert!(!ctx.in_bf(&s).unwrap());
        let sq = ctx.multiply(&s, &s).unwrap();
        assert!(!ctx.is_identity(&sq).unwrap());
        assert!(ctx.is_identity(&ctx.multiply(&s, &s.invert()).unwrap()).unwrap());
    }

    #[test]
    fn identity_predicate_rejects_braids() {
        let spec = trivial_spec(2);
        let f = Forest::trivial(2, 2).unwrap();
        let s = Spraige::new(f.clone(), LabeledBraid::unlabeled(w(2, &[1])), f).unwrap();
        assert!(!s.is_identity(&spec).unwrap());
        let lam = Spraige::lambda(2, 1, &[0]).unwrap();
        assert!(lam.is_identity(&spec).is_err());
    }

    #[test]
    fn lambda_mu_cancel() {
        let spec = trivial_spec(3);
        let lam = Spraige::lambda(3, 5, &[1, 4]).unwrap();
        assert_eq!((lam.heads(), lam.feet()), (5, 9));
        let mu = Spraige::mu(3, 5, &[1, 4]).unwrap();
        let p = lam.multiply(&spec, &mu).unwrap();
        assert_eq!(p, Spraige::identity(3, 5).unwrap());
        let q = mu.multiply(&spec, &lam).unwrap();
        assert_eq!(q.heads(), 9);
        assert!(q.is_identity(&spec).unwrap());
        assert_eq!(Spraige::lambda(3, 5, &[]).unwrap(), Spraige::identity(3, 5).unwrap());
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let spec = trivial_spec(3);
        let a = Spraige::lambda(3, 5, &[1, 4]).unwrap();
        let b = Spraige::lambda(3, 5, &[1]).unwrap();
        assert!(matches!(a.equal(&spec, &b), Err(Error::Shape(_))));
        assert!(a.multiply(&spec, &a).is_err());
    }

    #[test]
    fn flavor_requires_pure_spec() {
        let spec = LabelGroupSpec::ribbon(3, false).unwrap();
        assert!(GroupContext::new(1, spec.clone(), Flavor::F).is_err());
        assert!(GroupContext::new(0, spec.clone(), Flavor::V).is_err());
        let ctx = GroupContext::new(1, spec, Flavor::V).unwrap();
        assert!(matches!(
            ctx.in_bf(&ctx.identity()),
            Err(Error::NotPureContext)
        ));
    }

    #[test]
    fn ribbon_label_reduces_with_twisted_cable() {
        // a caret whose three strands carry Δ and are twisted by Δ reduces to one strand
        let spec = LabelGroupSpec::ribbon(3, false).unwrap();
        let e = Spraige::identity(3, 1).unwrap();
        let lb = LabeledBraid::new(w(1, &[]), vec![Label::generator(1)]).unwrap();
        let s = Spraige::new(e.minus().clone(), lb, e.plus().clone()).unwrap();
        let x = s.expand(&spec, 0).unwrap();
        assert_eq!(x.braid().letters(), &[1, 2, 1]);
        assert_eq!(x.reduce(&spec).unwrap(), s);
    }

    #[test]
    fn retraction_basics() {
        let spec = LabelGroupSpec::new(2, vec![w(2, &[1, 1])], true).unwrap();
        let ctx = GroupContext::new(2, spec, Flavor::F).unwrap();
        let h = Label::generator(1);
        let i = ctx.iota(&h).unwrap();
        assert!(ctx.retract(&i).unwrap().equivalent(&w(2, &[1, 1])).unwrap());
        let ip = ctx.iota_prime(&h).unwrap();
        let ip_inv = ctx.iota_prime(&h.inverse()).unwrap();
        assert!(ctx.is_identity(&ctx.multiply(&ip, &ip_inv).unwrap()).unwrap());
        assert!(ctx.is_identity(&ctx.iota_prime(&Label::identity()).unwrap()).unwrap());
    }
}
