//! Random braids, forests and group elements for testing and experiments.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::{BraidWord, Permutation};
use crate::diagram::{Flavor, GroupContext, Spraige};
use crate::forest::Forest;
use crate::labeled::{Label, LabelGroupSpec, LabeledBraid};

pub fn braid<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands);
    }
    let k = strands as i32 - 1;
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=k);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters in range")
}

pub fn pure_braid<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let b = braid(rng, strands, len);
    let fix = BraidWord::permutation_braid(&b.permutation().inverse());
    b.compose(&fix).expect("same strands")
}

/// A braid whose permutation is the cyclic shift by a random amount.
pub fn cyclic_braid<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let b = braid(rng, strands, len);
    let k = rng.gen_range(0..strands);
    let shift = Permutation::from_images((0..strands).map(|i| (i + k) % strands).collect())
        .expect("cyclic shift");
    let fix = BraidWord::permutation_braid(&b.permutation().inverse().then(&shift));
    b.compose(&fix).expect("same strands")
}

pub fn label<R: Rng + ?Sized>(rng: &mut R, spec: &LabelGroupSpec, max_len: usize) -> Label {
    let g = spec.generators().len() as i32;
    if g == 0 {
        return Label::identity();
    }
    let len = rng.gen_range(0..=max_len);
    Label::new(
        (0..len)
            .map(|_| {
                let k = rng.gen_range(1..=g);
                if rng.gen_bool(0.5) {
                    k
                } else {
                    -k
                }
            })
            .collect(),
    )
}

pub fn forest<R: Rng + ?Sized>(rng: &mut R, d: usize, roots: usize, carets: usize) -> Forest {
    let mut f = Forest::trivial(d, roots).expect("valid arity and roots");
    for _ in 0..carets {
        let i = rng.gen_range(0..f.leaves());
        f = f.attach_caret(i).expect("leaf in range");
    }
    f
}

/// Size parameters for [`element`].
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub carets: usize,
    pub braid_len: usize,
    pub label_len: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            carets: 2,
            braid_len: 4,
            label_len: 2,
        }
    }
}

pub fn labeled_braid<R: Rng + ?Sized>(
    rng: &mut R,
    spec: &LabelGroupSpec,
    flavor: Flavor,
    strands: usize,
    shape: Shape,
) -> LabeledBraid {
    let b = match flavor {
        Flavor::V => braid(rng, strands, shape.braid_len),
        Flavor::F => pure_braid(rng, strands, shape.braid_len),
        Flavor::T => cyclic_braid(rng, strands, shape.braid_len),
    };
    let labels = (0..strands)
        .map(|_| label(rng, spec, shape.label_len))
        .collect();
    LabeledBraid::new(b, labels).expect("one label per strand")
}

/// A random element of the group, usually not reduced.
pub fn element<R: Rng + ?Sized>(rng: &mut R, ctx: &GroupContext, shape: Shape) -> Spraige {
    let minus = forest(rng, ctx.d(), ctx.r(), shape.carets);
    let plus = forest(rng, ctx.d(), ctx.r(), shape.carets);
    let lb = labeled_braid(rng, ctx.spec(), ctx.flavor(), minus.leaves(), shape);
    Spraige::new(minus, lb, plus).expect("matching leaf counts")
}

fn random_subset<R: Rng + ?Sized>(rng: &mut R, n: usize, size: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(size);
    all.sort_unstable();
    all
}

/// A product `λ · b · μ`, optionally with label embeddings `ι(h)` and `ι′(h)`
/// multiplied on either side. The `λ` layers add `shape.carets` carets in
/// total, the middle factor is a random labeled braid on all the leaves, and
/// the `μ` layers remove the same number of carets in a different grouping.
pub fn element_from_generators<R: Rng + ?Sized>(
    rng: &mut R,
    ctx: &GroupContext,
    shape: Shape,
    embeddings: usize,
) -> Spraige {
    let (d, spec) = (ctx.d(), ctx.spec());
    let mut g = ctx.identity();
    let mut roots = ctx.r();
    let mut left = shape.carets;
    while left > 0 {
        let j = rng.gen_range(1..=left.min(roots));
        let lambda = Spraige::lambda(d, roots, &random_subset(rng, roots, j)).expect("carets in range");
        g = g.multiply(spec, &lambda).expect("roots agree");
        roots += (d - 1) * j;
        left -= j;
    }
    let lb = labeled_braid(rng, spec, ctx.flavor(), roots, shape);
    let one = Forest::trivial(d, roots).expect("valid arity");
    g = g
        .multiply(spec, &Spraige::new(one.clone(), lb, one).expect("matching leaves"))
        .expect("roots agree");
    while roots > ctx.r() {
        // j carets on distinct roots of what remains
        let max_j = ((roots - ctx.r()) / (d - 1)).min(roots / d);
        let j = rng.gen_range(1..=max_j);
        let below = roots - (d - 1) * j;
        let mu = Spraige::mu(d, below, &random_subset(rng, below, j)).expect("carets in range");
        g = g.multiply(spec, &mu).expect("roots agree");
        roots = below;
    }
    for _ in 0..embeddings {
        let h = label(rng, spec, shape.label_len);
        let e = if rng.gen_bool(0.5) {
            ctx.iota(&h)
        } else {
            ctx.iota_prime(&h)
        }
        .expect("label from the context");
        g = if rng.gen_bool(0.5) {
            ctx.multiply(&e, &g)
        } else {
            ctx.multiply(&g, &e)
        }
        .expect("same context");
    }
    g
}
