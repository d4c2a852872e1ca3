//! Homological weak Cohen–Macaulay test.

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::homology::reduced_homology;

/// A face whose link has nonzero reduced homology in a degree that must vanish.
/// The empty face stands for the whole complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WcmViolation {
    pub face: Face,
    pub degree: isize,
    pub required_through: isize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WcmReport {
    pub dimension: isize,
    pub holds: bool,
    pub violation: Option<WcmViolation>,
}

/// Checks `H̃_i(K) = 0` for `i ≤ n−1` and `H̃_i(Lk σ) = 0` for `i ≤ n−p−2`
/// for every `p`-face `σ`, stopping at the first failure (faces in
/// increasing dimension, then lexicographically).
pub fn wcm_report(k: &SimplicialComplex, n: isize) -> WcmReport {
    let mut faces: Vec<Face> = vec![Vec::new()];
    faces.extend(k.faces_by_dimension().into_iter().flatten());
    for face in faces {
        let p = face.len() as isize - 1;
        let through = n - p - 2;
        if through < -1 {
            continue;
        }
        let link = k.link(&face).expect("listed faces belong to the complex");
        let h = reduced_homology(&link);
        if let Some(g) = h.groups.iter().find(|g| g.degree <= through && !g.is_zero()) {
            return WcmReport {
                dimension: n,
                holds: false,
                violation: Some(WcmViolation {
                    face,
                    degree: g.degree,
                    required_through: through,
                }),
            };
        }
    }
    WcmReport {
        dimension: n,
        holds: true,
        violation: None,
    }
}

pub fn is_homology_wcm(k: &SimplicialComplex, n: isize) -> bool {
    wcm_report(k, n).holds
}
