//! Braid equality checked against the Artin action on a free group, which is
//! faithful, and algebraic identities of cabling and deletion.

use std::collections::BTreeSet;

use bvkit::braid::{braid_equal, BraidWord};
use proptest::prelude::*;

type FreeWord = Vec<i32>;

fn reduce(word: FreeWord) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(word.len());
    for x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn invert(word: &[i32]) -> FreeWord {
    word.iter().rev().map(|x| -x).collect()
}

/// Images of the free generators `x_1..x_n` under the automorphism of the word.
fn artin_images(b: &BraidWord) -> Vec<FreeWord> {
    let n = b.strands();
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|j| vec![j]).collect();
    for &l in b.letters() {
        let i = l.unsigned_abs() as i32;
        let (x, y) = (i, i + 1);
        // positive: x ↦ x y x⁻¹, y ↦ x; negative is the inverse automorphism
        let sub = |g: i32| -> FreeWord {
            let a = g.abs();
            let img: FreeWord = if l > 0 {
                if a == x {
                    vec![x, y, -x]
                } else if a == y {
                    vec![x]
                } else {
                    vec![a]
                }
            } else if a == x {
                vec![y]
            } else if a == y {
                vec![-y, x, y]
            } else {
                vec![a]
            };
            if g > 0 {
                img
            } else {
                invert(&img)
            }
        };
        images = images
            .into_iter()
            .map(|w| reduce(w.into_iter().flat_map(sub).collect()))
            .collect();
    }
    images
}

fn oracle_equal(a: &BraidWord, b: &BraidWord) -> bool {
    artin_images(a) == artin_images(b)
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let k = (n - 1) as i32;
    prop::collection::vec(
        (1..=k, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }),
        0..=max_len,
    )
    .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
}

/// Apply a braid relation, a commutation, or a free insertion somewhere.
fn perturb(b: &BraidWord, choice: usize, pos: usize) -> BraidWord {
    let n = b.strands() as i32;
    let mut letters = b.letters().to_vec();
    let p = if letters.is_empty() {
        0
    } else {
        pos % (letters.len() + 1)
    };
    match choice % 3 {
        0 => {
            let i = (pos as i32 % (n - 1)) + 1;
            letters.splice(p..p, [i, -i]);
        }
        1 if p + 1 < letters.len() => {
            let (a, c) = (letters[p], letters[p + 1]);
            if (a.abs() - c.abs()).abs() >= 2 {
                letters.swap(p, p + 1);
            }
        }
        2 if p + 2 < letters.len() => {
            let (a, c, e) = (letters[p], letters[p + 1], letters[p + 2]);
            if a == e && (a.abs() - c.abs()).abs() == 1 && a.signum() == c.signum() {
                letters[p] = c;
                letters[p + 1] = a;
                letters[p + 2] = c;
            }
        }
        _ => {}
    }
    BraidWord::new(b.strands(), letters).unwrap()
}

#[test]
fn oracle_sanity() {
    let a = BraidWord::new(3, vec![1, 2, 1]).unwrap();
    let b = BraidWord::new(3, vec![2, 1, 2]).unwrap();
    assert!(oracle_equal(&a, &b));
    let c = BraidWord::new(3, vec![1, 2]).unwrap();
    assert!(!oracle_equal(&a, &c));
    let inv = BraidWord::new(3, vec![1, -1]).unwrap();
    assert!(oracle_equal(&inv, &BraidWord::identity(3)));
}

#[test]
fn exhaustive_short_words_b3() {
    // every pair of words of length ≤ 3 in B_3
    let mut words = vec![BraidWord::identity(3)];
    let gens = [1, -1, 2, -2];
    let mut frontier = vec![Vec::<i32>::new()];
    for _ in 0..3 {
        let mut next = Vec::new();
        for w in &frontier {
            for g in gens {
                let mut v = w.clone();
                v.push(g);
                words.push(BraidWord::new(3, v.clone()).unwrap());
                next.push(v);
            }
        }
        frontier = next;
    }
    let images: Vec<_> = words.iter().map(artin_images).collect();
    for (i, a) in words.iter().enumerate() {
        for (j, b) in words.iter().enumerate() {
            assert_eq!(
                braid_equal(a, b).unwrap(),
                images[i] == images[j],
                "{a} vs {b}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn equality_agrees_with_artin_action((a, b) in (2usize..=5).prop_flat_map(|n| (word(n, 6), word(n, 6)))) {
        prop_assert_eq!(braid_equal(&a, &b).unwrap(), oracle_equal(&a, &b));
        let quotient = a.compose(&b.inverse()).unwrap();
        prop_assert_eq!(quotient.is_trivial(), oracle_equal(&a, &b));
    }

    #[test]
    fn relations_preserve_the_braid(b in word(4, 10), moves in prop::collection::vec((0usize..3, 0usize..20), 0..8)) {
        let mut c = b.clone();
        for (choice, pos) in moves {
            c = perturb(&c, choice, pos);
        }
        prop_assert!(braid_equal(&b, &c).unwrap());
        prop_assert!(oracle_equal(&b, &c));
    }

    #[test]
    fn canonical_word_is_equivalent_and_stable(b in word(4, 10)) {
        let c = b.canonical();
        prop_assert!(oracle_equal(&b, &c));
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert_eq!(b.inverse().compose(&b).unwrap().canonical().len(), 0);
    }

    #[test]
    fn inverse_is_inverse(b in word(5, 12)) {
        prop_assert!(b.compose(&b.inverse()).unwrap().is_trivial());
        prop_assert_eq!(b.inverse().inverse(), b.clone());
        prop_assert_eq!(b.inverse().permutation(), b.permutation().inverse());
    }

    #[test]
    fn permutation_is_a_homomorphism(a in word(5, 8), b in word(5, 8)) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.permutation(), a.permutation().then(&b.permutation()));
    }

    #[test]
    fn cable_respects_composition(a in word(3, 5), b in word(3, 5), widths in prop::collection::vec(1usize..=3, 3)) {
        let rho = a.permutation();
        let mut mid = vec![0; 3];
        for (i, &w) in widths.iter().enumerate() {
            mid[rho.apply(i)] = w;
        }
        let lhs = a.compose(&b).unwrap().cable(&widths).unwrap();
        let rhs = a.cable(&widths).unwrap().compose(&b.cable(&mid).unwrap()).unwrap();
        prop_assert_eq!(lhs.letters(), rhs.letters());
        let expected = rho.then(&b.permutation()).expand_blocks(&widths).unwrap();
        prop_assert_eq!(lhs.permutation(), expected);
    }

    #[test]
    fn deleting_a_cable_recovers_the_braid(b in word(3, 6), i in 0usize..3, width in 2usize..=3) {
        let c = b.cable_at(i, width).unwrap();
        let extra: BTreeSet<usize> = (i + 1..i + width).collect();
        let back = c.delete_strands(&extra).unwrap();
        prop_assert!(braid_equal(&back, &b).unwrap());
    }

    #[test]
    fn cabling_preserves_equality(a in word(3, 6), moves in prop::collection::vec((0usize..3, 0usize..20), 0..5), widths in prop::collection::vec(1usize..=2, 3)) {
        let mut b = a.clone();
        for (choice, pos) in moves {
            b = perturb(&b, choice, pos);
        }
        prop_assert!(braid_equal(&a.cable(&widths).unwrap(), &b.cable(&widths).unwrap()).unwrap());
    }

    #[test]
    fn deletion_is_a_homomorphism_on_pure_braids(a in word(4, 6), b in word(4, 6), s in 0usize..4) {
        // make both pure by appending a positive braid undoing the permutation
        let purify = |w: &BraidWord| {
            let mut letters = w.letters().to_vec();
            let mut at: Vec<usize> = w.permutation().inverse().images().to_vec();
            let mut i = 0;
            while i + 1 < at.len() {
                if at[i] > at[i + 1] { at.swap(i, i + 1); letters.push(i as i32 + 1); i = i.saturating_sub(1); } else { i += 1; }
            }
            BraidWord::new(w.strands(), letters).unwrap()
        };
        let (a, b) = (purify(&a), purify(&b));
        prop_assert!(a.is_pure() && b.is_pure());
        let del: BTreeSet<usize> = [s].into_iter().collect();
        let lhs = a.compose(&b).unwrap().delete_strands(&del).unwrap();
        let rhs = a.delete_strands(&del).unwrap().compose(&b.delete_strands(&del).unwrap()).unwrap();
        prop_assert!(braid_equal(&lhs, &rhs).unwrap());
    }
}
