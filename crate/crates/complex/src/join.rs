//! Complete joins: simplicial maps whose fibers over each simplex form a join.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// A vertex map from a source complex to a target complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    pub source: SimplicialComplex,
    pub target: SimplicialComplex,
    pub map: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinFailure {
    /// Some target vertex or maximal face is not hit.
    NotSurjective(Face),
    /// Two vertices of one face share an image.
    NotSimplexwiseInjective(Face),
    /// A choice of one preimage per vertex of a target face is not a face.
    MissingTransversal(Face),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinReport {
    pub complete_join: bool,
    pub failure: Option<JoinFailure>,
}

impl VertexMap {
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        map: BTreeMap<usize, usize>,
    ) -> Result<Self> {
        for &v in source.vertices() {
            let w = *map.get(&v).ok_or(Error::Unmapped(v))?;
            if !target.has_vertex(w) {
                return Err(Error::NotAVertex(w));
            }
        }
        for face in source.maximal_faces() {
            let image: Vec<usize> = face.iter().map(|v| map[v]).collect();
            if !target.contains(&image) {
                return Err(Error::NotSimplicial(face.clone()));
            }
        }
        Ok(VertexMap { source, target, map })
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[&v]
    }
}

/// Whether the map is a complete join: surjective, injective on each
/// simplex, and with the preimage of every target simplex equal to the join
/// of the vertex fibers.
pub fn complete_join_check(f: &VertexMap) -> JoinReport {
    let fail = |failure| JoinReport {
        complete_join: false,
        failure: Some(failure),
    };
    for face in f.source.maximal_faces() {
        let image: BTreeSet<usize> = face.iter().map(|&v| f.apply(v)).collect();
        if image.len() != face.len() {
            return fail(JoinFailure::NotSimplexwiseInjective(face.clone()));
        }
    }
    let mut fibers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &v in f.source.vertices() {
        fibers.entry(f.apply(v)).or_default().push(v);
    }
    // injectivity on simplices makes the preimage of σ contained in the join of
    // the fibers; the reverse containment only needs checking on maximal faces
    for face in f.target.maximal_faces() {
        let choices: Vec<&Vec<usize>> = match face.iter().map(|w| fibers.get(w)).collect() {
            Some(c) => c,
            None => return fail(JoinFailure::NotSurjective(face.clone())),
        };
        let mut index = vec![0usize; choices.len()];
        loop {
            let transversal: Face = index.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            if !f.source.contains(&transversal) {
                let mut t = transversal;
                t.sort_unstable();
                return fail(JoinFailure::MissingTransversal(t));
            }
            let mut pos = 0;
            while pos < index.len() {
                index[pos] += 1;
                if index[pos] < choices[pos].len() {
                    break;
                }
                index[pos] = 0;
                pos += 1;
            }
            if pos == index.len() {
                break;
            }
        }
    }
    JoinReport {
        complete_join: true,
        failure: None,
    }
}

/// Each vertex `v` of `l` becomes two vertices `2v` and `2v+1`, every face is
/// lifted in all combinations, and the projection sends `2v+c` back to `v`.
pub fn duplicated_cover(l: &SimplicialComplex) -> VertexMap {
    let mut faces = Vec::new();
    for face in l.maximal_faces() {
        for mask in 0u64..(1u64 << face.len()) {
            let lifted: Face = face
                .iter()
                .enumerate()
                .map(|(i, &v)| 2 * v + (mask >> i & 1) as usize)
                .collect();
            faces.push(lifted);
        }
    }
    let source = SimplicialComplex::from_faces(faces);
    let map = source.vertices().iter().map(|&v| (v, v / 2)).collect();
    VertexMap::new(source, l.clone(), map).expect("the projection of a lift is simplicial")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(k: &SimplicialComplex) -> VertexMap {
        let map = k.vertices().iter().map(|&v| (v, v)).collect();
        VertexMap::new(k.clone(), k.clone(), map).unwrap()
    }

    #[test]
    fn identity_is_a_complete_join() {
        let k = SimplicialComplex::sphere_boundary(3);
        assert!(complete_join_check(&identity(&k)).complete_join);
    }

    #[test]
    fn collapsing_an_edge_is_not() {
        let edge = SimplicialComplex::simplex(1);
        let point = SimplicialComplex::simplex(0);
        let f = VertexMap::new(edge, point, [(0, 0), (1, 0)].into()).unwrap();
        let r = complete_join_check(&f);
        assert_eq!(r.failure, Some(JoinFailure::NotSimplexwiseInjective(vec![0, 1])));
    }

    #[test]
    fn non_simplicial_maps_are_rejected() {
        let edge = SimplicialComplex::simplex(1);
        let two = SimplicialComplex::points(2);
        assert!(matches!(
            VertexMap::new(edge, two, [(0, 0), (1, 1)].into()),
            Err(Error::NotSimplicial(_))
        ));
    }

    #[test]
    fn missing_lift() {
        // two fibers over an edge, but only one lift of the edge present
        let src = SimplicialComplex::from_faces([vec![0, 2], vec![1]]);
        let f = VertexMap::new(src, SimplicialComplex::simplex(1), [(0, 0), (1, 0), (2, 1)].into()).unwrap();
        assert!(matches!(complete_join_check(&f).failure, Some(JoinFailure::MissingTransversal(_))));
    }

    #[test]
    fn duplicated_cover_passes() {
        let l = SimplicialComplex::from_faces([vec![0, 1, 2], vec![2, 3]]);
        let cover = duplicated_cover(&l);
        assert_eq!(cover.source.vertices().len(), 8);
        assert!(complete_join_check(&cover).complete_join);
    }
}
