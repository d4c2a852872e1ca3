//! `d`-matching complexes of the linear graph `L_{m−1}` (points `1..=m`) and
//! of the cycle on `m` points.
//!
//! Vertex `p` is the arc of `d` consecutive points starting at `p` (1-based).
//! A set of arcs spans a face when the arcs are pairwise disjoint.

use std::collections::BTreeSet;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

fn check(d: usize, m: usize) -> Result<()> {
    if d < 2 || m < 1 {
        return Err(Error::Parameters(format!("need d ≥ 2 and m ≥ 1, got d={d}, m={m}")));
    }
    Ok(())
}

/// Maximal pairwise-compatible subsets of `starts` under `compatible`.
fn maximal_independent(starts: &[usize], compatible: impl Fn(usize, usize) -> bool) -> Vec<Face> {
    fn go(
        starts: &[usize],
        from: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Face>,
        ok: &dyn Fn(usize, usize) -> bool,
    ) {
        let extendable = |v: usize, cur: &[usize]| cur.iter().all(|&u| u != v && ok(u, v));
        let mut any = false;
        for i in from..starts.len() {
            let v = starts[i];
            if extendable(v, current) {
                any = true;
                current.push(v);
                go(starts, i + 1, current, out, ok);
                current.pop();
            }
        }
        // only keep faces that nothing at all can be added to
        if !any && starts.iter().all(|&v| !extendable(v, current)) {
            out.push(current.clone());
        }
    }
    let mut out = Vec::new();
    go(starts, 0, &mut Vec::new(), &mut out, &compatible);
    out
}

/// `ℳ_d(L_{m−1})`: vertices are the starts `1..=m−d+1`.
pub fn linear_matching(d: usize, m: usize) -> Result<SimplicialComplex> {
    check(d, m)?;
    if m < d {
        return Ok(SimplicialComplex::empty());
    }
    let starts: Vec<usize> = (1..=m - d + 1).collect();
    let faces = maximal_independent(&starts, |p, q| p.abs_diff(q) >= d);
    Ok(SimplicialComplex::new(starts, faces))
}

/// The cyclic version: starts `1..=m`, arcs taken mod `m`. Empty when `m < d`,
/// since an arc would then wrap onto itself.
pub fn cyclic_matching(d: usize, m: usize) -> Result<SimplicialComplex> {
    check(d, m)?;
    if m < d {
        return Ok(SimplicialComplex::empty());
    }
    let starts: Vec<usize> = (1..=m).collect();
    let faces = maximal_independent(&starts, |p, q| {
        let forward = (q + m - p) % m;
        let backward = (p + m - q) % m;
        forward >= d && backward >= d
    });
    Ok(SimplicialComplex::new(starts, faces))
}

/// The full subcomplex on the vertices whose start lies in `z`.
pub fn restrict_initial(k: &SimplicialComplex, z: &BTreeSet<usize>) -> Result<SimplicialComplex> {
    if let Some(&v) = z.iter().find(|&&v| !k.has_vertex(v)) {
        return Err(Error::NotAVertex(v));
    }
    Ok(k.restrict(z))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Face counts of `ℳ_d(L_{m−1})` by dimension, from the closed formula:
/// `c` disjoint arcs can be placed in `C(m − c(d−1), c)` ways.
pub fn simplex_counts(d: usize, m: usize) -> Result<Vec<u128>> {
    check(d, m)?;
    Ok((1..=m / d).map(|c| binomial(m - c * (d - 1), c)).collect())
}
