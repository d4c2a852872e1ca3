use bvkit::braid::{braid_equal, BraidWord, Permutation};
use bvkit::diagram::{Flavor, GroupContext, PairedForestDiagram, Spraige};
use bvkit::forest::Forest;
use bvkit::labeled::{Label, LabelGroupSpec, LabeledBraid};

fn one_based(images: &[usize]) -> Permutation {
    Permutation::from_images(images.iter().map(|x| x - 1).collect()).unwrap()
}

fn f3(text: &str) -> Forest {
    Forest::parse(text, 3).unwrap()
}

#[test]
fn eight_leaf_braided_diagram_reduces_to_six() {
    let ctx = GroupContext::new(2, LabelGroupSpec::trivial(3).unwrap(), Flavor::V).unwrap();
    let rho = one_based(&[2, 3, 4, 1, 8, 5, 6, 7]);
    let s = Spraige::new(
        f3("((...)..)|(...)"),
        LabeledBraid::unlabeled(BraidWord::permutation_braid(&rho)),
        f3("(.(...).)|(...)"),
    )
    .unwrap();
    let r = ctx.reduce(&s).unwrap();
    assert_eq!(r.leaves(), 6);
    assert_eq!(r.minus(), &f3("(...)|(...)"));
    assert_eq!(r.plus(), &f3("(...)|(...)"));
    assert_eq!(r.braid().permutation(), one_based(&[2, 1, 6, 3, 4, 5]));
    assert!(ctx.equal(&r, &s).unwrap());

    let v = ctx.project_to_v(&s).unwrap().reduce();
    let expected = PairedForestDiagram::new(
        f3("(...)|(...)"),
        one_based(&[2, 1, 6, 3, 4, 5]),
        f3("(...)|(...)"),
    )
    .unwrap();
    assert_eq!(v, expected);
}

#[test]
fn labeled_cable_block_reduces() {
    // H ≤ B_3 generated by σ1 and σ2; the block of three strands carries h = g1 g2
    // both as its labels and as the braid at the top of the cable
    let gens = vec![
        BraidWord::new(3, vec![1]).unwrap(),
        BraidWord::new(3, vec![2]).unwrap(),
    ];
    let ctx = GroupContext::new(2, LabelGroupSpec::new(3, gens, false).unwrap(), Flavor::V).unwrap();
    let h = Label::parse("g1 g2").unwrap();
    let rest: Vec<Label> = ["g1", "e", "g2", "g2^-1", "g1 g1"]
        .iter()
        .map(|t| Label::parse(t).unwrap())
        .collect();
    let mut labels = vec![h.clone(); 3];
    labels.extend(rest.iter().cloned());
    let braid = BraidWord::new(8, vec![1, 2, 3, 2, 1, 5, 6, 7]).unwrap();
    let s = Spraige::new(
        f3("((...)..)|(...)"),
        LabeledBraid::new(braid, labels).unwrap(),
        f3("(.(...).)|(...)"),
    )
    .unwrap();

    let once = s.try_reduce_at(ctx.spec(), 0).unwrap().expect("block reduces");
    assert_eq!(once.leaves(), 6);
    assert!(braid_equal(once.braid(), &BraidWord::new(6, vec![1, 3, 4, 5]).unwrap()).unwrap());
    let mut expected = vec![h];
    expected.extend(rest);
    assert_eq!(once.labels(), expected.as_slice());
    assert_eq!(ctx.reduce(&s).unwrap().leaves(), 6);

    // a different label on one strand of the block blocks the reduction
    let mut bad = s.labels().to_vec();
    bad[1] = Label::parse("g2 g1").unwrap();
    let t = Spraige::new(
        s.minus().clone(),
        LabeledBraid::new(s.braid().clone(), bad).unwrap(),
        s.plus().clone(),
    )
    .unwrap();
    assert!(t.try_reduce_at(ctx.spec(), 0).unwrap().is_none());
    assert_eq!(ctx.reduce(&t).unwrap().leaves(), 8);
}

#[test]
fn elementary_split_counts() {
    let lam = Spraige::lambda(3, 5, &[1, 4]).unwrap();
    assert_eq!(lam.heads(), 5);
    assert_eq!(lam.feet(), 9);
    assert_eq!(lam.minus().to_string(), ".|(...)|.|.|(...)");
}
