//! Discrete Morse filtrations by vertex heights.
//!
//! A height function is valid when every face has a unique highest vertex,
//! which for vertex heights means no edge joins two vertices of equal height.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, relative_homology, HomologyReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightFunction {
    heights: BTreeMap<usize, i64>,
}

impl HeightFunction {
    pub fn new(heights: BTreeMap<usize, i64>) -> Self {
        HeightFunction { heights }
    }

    pub fn from_fn(k: &SimplicialComplex, f: impl Fn(usize) -> i64) -> Self {
        HeightFunction {
            heights: k.vertices().iter().map(|&v| (v, f(v))).collect(),
        }
    }

    pub fn height(&self, v: usize) -> Option<i64> {
        self.heights.get(&v).copied()
    }

    pub fn validate(&self, k: &SimplicialComplex) -> Result<()> {
        for &v in k.vertices() {
            if !self.heights.contains_key(&v) {
                return Err(Error::MissingHeight(v));
            }
        }
        for face in k.maximal_faces() {
            for (i, &u) in face.iter().enumerate() {
                for &w in &face[i + 1..] {
                    if self.heights[&u] == self.heights[&w] {
                        return Err(Error::InvalidHeight(u, w));
                    }
                }
            }
        }
        Ok(())
    }

    /// Distinct heights taken on the vertices of `k`, ascending.
    pub fn levels(&self, k: &SimplicialComplex) -> Vec<i64> {
        let set: BTreeSet<i64> = k.vertices().iter().filter_map(|&v| self.height(v)).collect();
        set.into_iter().collect()
    }

    fn below(&self, k: &SimplicialComplex, t: i64, strict: bool) -> BTreeSet<usize> {
        k.vertices()
            .iter()
            .copied()
            .filter(|&v| {
                let h = self.heights[&v];
                if strict {
                    h < t
                } else {
                    h <= t
                }
            })
            .collect()
    }
}

/// `K^{≤t}` (or `K^{<t}` when `strict`): the full subcomplex on low vertices.
pub fn sublevel(k: &SimplicialComplex, h: &HeightFunction, t: i64, strict: bool) -> Result<SimplicialComplex> {
    h.validate(k)?;
    Ok(k.restrict(&h.below(k, t, strict)))
}

/// The link of `v` restricted to vertices strictly lower than `v`.
pub fn descending_link(k: &SimplicialComplex, h: &HeightFunction, v: usize) -> Result<SimplicialComplex> {
    h.validate(k)?;
    let t = h.height(v).ok_or(Error::NotAVertex(v))?;
    let lower = h.below(k, t, true);
    Ok(k.link(&[v])?.restrict(&lower))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorseLevel {
    pub level: i64,
    pub k: isize,
    /// Every descending link at this level has `H̃_i = 0` for `i ≤ k−1`.
    pub premise: bool,
    /// `H_i(K^{≤t}, K^{<t}) = 0` for `i ≤ k`.
    pub conclusion: bool,
    pub relative: HomologyReport,
}

impl MorseLevel {
    pub fn holds(&self) -> bool {
        !self.premise || self.conclusion
    }
}

fn level_vertices(k: &SimplicialComplex, h: &HeightFunction, t: i64) -> Vec<usize> {
    k.vertices().iter().copied().filter(|&v| h.heights[&v] == t).collect()
}

/// Evaluates the Morse implication at level `t` with connectivity `k`.
pub fn morse_level(k: &SimplicialComplex, h: &HeightFunction, t: i64, conn: isize) -> Result<MorseLevel> {
    h.validate(k)?;
    let mut premise = true;
    for v in level_vertices(k, h, t) {
        if !reduced_homology(&descending_link(k, h, v)?).vanishes_through(conn - 1) {
            premise = false;
            break;
        }
    }
    let high = sublevel(k, h, t, false)?;
    let low = sublevel(k, h, t, true)?;
    let relative = relative_homology(&high, &low);
    Ok(MorseLevel {
        level: t,
        k: conn,
        premise,
        conclusion: relative.vanishes_through(conn),
        relative,
    })
}

pub fn morse_check(k: &SimplicialComplex, h: &HeightFunction, t: i64, conn: isize) -> Result<bool> {
    Ok(morse_level(k, h, t, conn)?.holds())
}

/// Runs [`morse_level`] at every level, taking `k` one more than the
/// smallest homological connectivity among that level's descending links.
pub fn filtration_report(k: &SimplicialComplex, h: &HeightFunction) -> Result<Vec<MorseLevel>> {
    h.validate(k)?;
    let top = k.dimension() + 1;
    let mut out = Vec::new();
    for t in h.levels(k) {
        let mut conn = top;
        for v in level_vertices(k, h, t) {
            let report = reduced_homology(&descending_link(k, h, v)?);
            if let Some(c) = report.connectivity() {
                conn = conn.min(c + 1);
            }
        }
        out.push(morse_level(k, h, t, conn)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn top_vertex_of_a_simplex() {
        let s = SimplicialComplex::simplex(3);
        let h = HeightFunction::from_fn(&s, |v| v as i64);
        let dlk = descending_link(&s, &h, 3).unwrap();
        assert_eq!(dlk, SimplicialComplex::simplex(2));
        assert!(reduced_homology(&dlk).is_trivial());
        for level in filtration_report(&s, &h).unwrap() {
            assert!(level.premise && level.conclusion);
        }
    }

    #[test]
    fn constant_height_on_an_edge_is_invalid() {
        let e = SimplicialComplex::simplex(1);
        let h = HeightFunction::from_fn(&e, |_| 0);
        assert_eq!(h.validate(&e), Err(Error::InvalidHeight(0, 1)));
        assert!(morse_check(&e, &h, 0, 0).is_err());
    }

    #[test]
    fn circle_filtration() {
        let c = SimplicialComplex::sphere_boundary(2);
        let h = HeightFunction::from_fn(&c, |v| v as i64);
        let report = filtration_report(&c, &h).unwrap();
        // the last vertex closes the loop: its descending link is two points
        let last = report.last().unwrap();
        assert_eq!(last.k, 0);
        assert_eq!(last.relative.betti(1), 1);
        assert!(last.holds());
    }
}
