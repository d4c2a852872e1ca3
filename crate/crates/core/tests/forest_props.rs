use std::collections::HashSet;

use bvkit::forest::Forest;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All forests with the given roots and at most `max_carets` carets.
fn forests_up_to(d: usize, roots: usize, max_carets: usize) -> Vec<Forest> {
    let mut seen: HashSet<Forest> = HashSet::new();
    let mut layer = vec![Forest::trivial(d, roots).unwrap()];
    seen.insert(layer[0].clone());
    for _ in 0..max_carets {
        let mut next = Vec::new();
        for f in &layer {
            for i in 0..f.leaves() {
                let g = f.attach_caret(i).unwrap();
                if seen.insert(g.clone()) {
                    next.push(g);
                }
            }
        }
        layer = next;
    }
    seen.into_iter().collect()
}

/// Elementary forests on `m` leaves, built from matchings by brute force.
fn elementary_forests(d: usize, m: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(d: usize, m: usize, start: usize, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(acc.clone());
        for s in start..m {
            if s + d <= m {
                acc.push((s, s + d - 1));
                go(d, m, s + d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, m, 0, &mut Vec::new(), &mut out);
    out
}

#[test]
fn leaf_count_identity() {
    for f in forests_up_to(3, 2, 4) {
        assert_eq!(f.leaves(), f.roots() + 2 * f.carets());
    }
}

#[test]
fn elementary_five_root_example() {
    let f = Forest::elementary(3, 5, &[1, 4]).unwrap();
    assert_eq!(f.leaves(), 9);
    assert_eq!(f.to_string(), ".|(...)|.|.|(...)");
    let replayed = Forest::trivial(3, 5).unwrap().replay(&[1, 6]).unwrap();
    assert_eq!(replayed, f);
    assert_eq!(Forest::elementary(3, 5, &[]).unwrap(), Forest::trivial(3, 5).unwrap());
    assert_eq!(Forest::elementary(2, 1, &[0]).unwrap().to_string(), "(..)");
    assert!(Forest::elementary(2, 3, &[3]).is_err());
}

#[test]
fn join_is_least_upper_bound() {
    let all = forests_up_to(2, 1, 4);
    for a in &all {
        for b in &all {
            let (j, pa, pb) = a.join(b).unwrap();
            assert!(a.is_prefix(&j).unwrap() && b.is_prefix(&j).unwrap());
            assert_eq!(a.replay(&pa).unwrap(), j);
            assert_eq!(b.replay(&pb).unwrap(), j);
            for c in &all {
                if a.is_prefix(c).unwrap() && b.is_prefix(c).unwrap() {
                    assert!(j.is_prefix(c).unwrap(), "{a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn prefix_is_a_partial_order() {
    let all = forests_up_to(2, 2, 3);
    for a in &all {
        assert!(a.is_prefix(a).unwrap());
        for b in &all {
            if a.is_prefix(b).unwrap() && b.is_prefix(a).unwrap() {
                assert_eq!(a, b);
            }
            for c in &all {
                if a.is_prefix(b).unwrap() && b.is_prefix(c).unwrap() {
                    assert!(a.is_prefix(c).unwrap());
                }
            }
        }
    }
}

#[test]
fn matching_roundtrip_d2() {
    for m in 1..=8 {
        for matching in elementary_forests(2, m) {
            let f = Forest::from_matching(2, m, &matching).unwrap();
            assert!(f.is_elementary());
            assert_eq!(f.leaves(), m);
            assert_eq!(f.to_matching().unwrap(), matching);
        }
    }
}

#[test]
fn matching_roundtrip_from_forests() {
    // every elementary forest reachable by attaching carets to roots
    for roots in 1..=5 {
        for mask in 0u32..(1 << roots) {
            let carets: Vec<usize> = (0..roots).filter(|j| mask >> j & 1 == 1).collect();
            let f = Forest::elementary(2, roots, &carets).unwrap();
            let m = f.to_matching().unwrap();
            assert_eq!(Forest::from_matching(2, f.leaves(), &m).unwrap(), f);
        }
    }
}

#[test]
fn caret_count_identity() {
    for d in [2, 3] {
        for m in 1..=12 {
            let all = elementary_forests(d, m);
            for c in 0..=m / d {
                let count = all.iter().filter(|x| x.len() == c).count();
                assert_eq!(count, binomial(m - c * (d - 1), c), "d={d} m={m} c={c}");
            }
        }
    }
}

#[test]
fn nine_leaf_example() {
    let f = Forest::from_matching(3, 9, &[(0, 2), (6, 8)]).unwrap();
    assert_eq!(f.roots(), 5);
    assert_eq!(f.to_matching().unwrap(), vec![(0, 2), (6, 8)]);
}
