use bvkit_complex::homology::{euler_consistent, reduced_homology, HomologyReport};
use bvkit_complex::matching::linear_matching;
use bvkit_complex::SimplicialComplex;

/// Reduced Betti numbers by brute force: every subset of the vertex set is
/// tested for being a face, and boundary ranks are taken modulo two large
/// primes. Agreement of the two ranks rules out torsion at either prime.
fn oracle_betti(k: &SimplicialComplex) -> Vec<usize> {
    let verts = k.vertices().to_vec();
    let n = verts.len();
    assert!(n <= 16);
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1u32 << n) {
        let face: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
        if k.contains(&face) {
            levels[face.len()].push(mask);
        }
    }
    while levels.last().is_some_and(Vec::is_empty) {
        levels.pop();
    }
    let rank_mod = |p: i64, size: usize| -> usize {
        // boundary from faces of `size` vertices to `size − 1`
        let rows = &levels[size - 1];
        let index: std::collections::HashMap<u32, usize> = rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut mat: Vec<Vec<i64>> = levels[size]
            .iter()
            .map(|&m| {
                let mut col = vec![0i64; rows.len()];
                let bits: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                for (j, &b) in bits.iter().enumerate() {
                    let sign = if j % 2 == 0 { 1 } else { p - 1 };
                    col[index[&(m & !(1 << b))]] = sign;
                }
                col
            })
            .collect();
        let mut rank = 0;
        let width = rows.len();
        for c in 0..width {
            let Some(pivot) = (rank..mat.len()).find(|&r| mat[r][c] != 0) else { continue };
            mat.swap(rank, pivot);
            let inv = pow(mat[rank][c], p - 2, p);
            for r in 0..mat.len() {
                if r != rank && mat[r][c] != 0 {
                    let f = mat[r][c] * inv % p;
                    for j in 0..width {
                        mat[r][j] = (mat[r][j] - f * mat[rank][j]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
        }
        rank
    };
    let top = levels.len();
    let ranks = |p: i64| -> Vec<usize> { (0..=top).map(|s| if s == 0 || s >= top { 0 } else { rank_mod(p, s) }).collect() };
    let a = ranks(1_000_000_007);
    let b = ranks(998_244_353);
    assert_eq!(a, b, "torsion detected by the oracle");
    // level s holds the faces of dimension s − 1
    (0..top).map(|s| levels[s].len() - a[s] - a.get(s + 1).copied().unwrap_or(0)).collect()
}

fn pow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    b = b.rem_euclid(p);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn checked(k: &SimplicialComplex) -> HomologyReport {
    let h = reduced_homology(k);
    assert!(euler_consistent(k, &h));
    h
}

/// Reduced Betti numbers in degrees −1, 0, 1, … up to the dimension.
fn betti(k: &SimplicialComplex) -> Vec<usize> {
    checked(k).betti_numbers()
}

fn sphere_betti(dim: usize) -> Vec<usize> {
    let mut v = vec![0; dim + 2];
    v[dim + 1] = 1;
    v
}

#[test]
fn spheres() {
    for n in 1..=5 {
        let s = SimplicialComplex::sphere_boundary(n);
        assert_eq!(betti(&s), sphere_betti(n - 1), "boundary of the {n}-simplex");
        assert_eq!(oracle_betti(&s), sphere_betti(n - 1));
        assert!(checked(&s).groups.iter().all(|g| g.torsion.is_empty()));
    }
}

#[test]
fn cones_are_acyclic() {
    for k in [
        SimplicialComplex::sphere_boundary(3),
        SimplicialComplex::points(4),
        SimplicialComplex::empty(),
        linear_matching(2, 7).unwrap(),
    ] {
        assert!(checked(&k.cone()).is_trivial());
    }
}

#[test]
fn disjoint_unions_add() {
    let a = SimplicialComplex::sphere_boundary(2);
    let b = SimplicialComplex::sphere_boundary(3);
    let u = a.disjoint_union(&b);
    // H̃₀ gains one class; H̃₁ and H̃₂ are the sums
    assert_eq!(betti(&u), vec![0, 1, 1, 1]);
    assert_eq!(oracle_betti(&u), vec![0, 1, 1, 1]);
    let three = SimplicialComplex::points(1).disjoint_union(&SimplicialComplex::points(2));
    assert_eq!(betti(&three), vec![0, 2]);
}

#[test]
fn suspension_shifts_degrees() {
    for k in [
        SimplicialComplex::sphere_boundary(2),
        SimplicialComplex::points(3),
        SimplicialComplex::empty(),
        linear_matching(2, 6).unwrap(),
    ] {
        let b = betti(&k);
        let s = betti(&k.suspension());
        assert_eq!(s[0], 0);
        assert_eq!(&s[1..], &b[..]);
    }
}

#[test]
fn join_of_two_zero_spheres() {
    let s0 = SimplicialComplex::points(2);
    assert_eq!(betti(&s0.join(&s0)), vec![0, 0, 1]);
}

/// Reduced Betti numbers (from degree −1) of the 2-matching complex of the
/// path with `m` points, `m = 1..=12`, as produced by [`oracle_betti`].
const MATCHING_TABLE: [&[usize]; 12] = [
    &[1],
    &[0, 0],
    &[0, 1],
    &[0, 1, 0],
    &[0, 0, 0],
    &[0, 0, 1, 0],
    &[0, 0, 1, 0],
    &[0, 0, 0, 0, 0],
    &[0, 0, 0, 1, 0],
    &[0, 0, 0, 1, 0, 0],
    &[0, 0, 0, 0, 0, 0],
    &[0, 0, 0, 0, 1, 0, 0],
];

#[test]
fn frozen_matching_table() {
    for m in 1..=12 {
        let k = linear_matching(2, m).unwrap();
        let expected = MATCHING_TABLE[m - 1].to_vec();
        assert_eq!(oracle_betti(&k), expected, "oracle, m = {m}");
        let h = checked(&k);
        assert_eq!(h.betti_numbers(), expected, "engine, m = {m}");
        assert!(h.groups.iter().all(|g| g.torsion.is_empty()));
    }
}

#[test]
fn torsion_survives_suspension() {
    let rp2 = SimplicialComplex::from_faces([
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
        [1, 2, 4], [2, 3, 5], [1, 3, 4], [1, 3, 5], [2, 4, 5],
    ]);
    let h = checked(&rp2.suspension());
    assert_eq!(h.group(2).unwrap().torsion, vec![2.into()]);
    assert_eq!(h.betti_numbers(), vec![0, 0, 0, 0, 0]);
}
