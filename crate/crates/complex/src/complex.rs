//! Finite abstract simplicial complexes stored by their maximal faces.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// A face is a sorted list of distinct vertex ids.
pub type Face = Vec<usize>;

/// A finite simplicial complex. It always contains the empty face; the complex
/// with no vertices is `{∅}`, whose reduced homology is `Z` in degree −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    maximal: Vec<Face>,
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn normalize(face: &[usize]) -> Face {
    let set: BTreeSet<usize> = face.iter().copied().collect();
    set.into_iter().collect()
}

impl SimplicialComplex {
    /// The complex generated by `faces`, plus every vertex in `vertices`.
    pub fn new<I, F>(vertices: impl IntoIterator<Item = usize>, faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        let mut verts: BTreeSet<usize> = vertices.into_iter().collect();
        let mut candidates: Vec<Face> = faces
            .into_iter()
            .map(|f| normalize(f.as_ref()))
            .filter(|f| !f.is_empty())
            .collect();
        for f in &candidates {
            verts.extend(f.iter().copied());
        }
        for &v in &verts {
            candidates.push(vec![v]);
        }
        // larger faces first so that containment only needs checking one way
        candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        candidates.dedup();
        let mut maximal: Vec<Face> = Vec::new();
        for f in candidates {
            if !maximal.iter().any(|m| is_subset(&f, m)) {
                maximal.push(f);
            }
        }
        maximal.sort();
        SimplicialComplex {
            vertices: verts.into_iter().collect(),
            maximal,
        }
    }

    pub fn from_faces<I, F>(faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        SimplicialComplex::new(std::iter::empty(), faces)
    }

    /// `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            maximal: Vec::new(),
        }
    }

    /// The full simplex on vertices `0..=n`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex::from_faces([(0..=n).collect::<Vec<_>>()])
    }

    /// The boundary of the `n`-simplex, a triangulated `(n−1)`-sphere.
    pub fn sphere_boundary(n: usize) -> Self {
        let all: Vec<usize> = (0..=n).collect();
        SimplicialComplex::new(
            all.clone(),
            (0..=n).map(|skip| all.iter().copied().filter(|&v| v != skip).collect::<Vec<_>>()),
        )
    }

    /// `n` isolated points.
    pub fn points(n: usize) -> Self {
        SimplicialComplex::new(0..n, std::iter::empty::<Vec<usize>>())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn maximal_faces(&self) -> &[Face] {
        &self.maximal
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension; −1 for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.maximal.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let f = normalize(face);
        f.is_empty() || self.maximal.iter().any(|m| is_subset(&f, m))
    }

    fn check_face(&self, face: &[usize]) -> Result<Face> {
        let f = normalize(face);
        if self.contains(&f) {
            Ok(f)
        } else {
            Err(Error::NotAFace(f))
        }
    }

    /// All nonempty faces, grouped by dimension and sorted within each group.
    pub fn faces_by_dimension(&self) -> Vec<Vec<Face>> {
        let dim = self.dimension();
        if dim < 0 {
            return Vec::new();
        }
        let mut levels: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); dim as usize + 1];
        for m in &self.maximal {
            let k = m.len();
            for mask in 1u64..(1u64 << k) {
                let f: Face = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| m[i]).collect();
                levels[f.len() - 1].insert(f);
            }
        }
        levels.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Number of faces in each dimension `0, 1, …`.
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces_by_dimension().iter().map(Vec::len).collect()
    }

    /// The reduced Euler characteristic `−1 + f₀ − f₁ + ⋯`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut chi = -1i64;
        for (k, n) in self.face_counts().into_iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            chi += sign * n as i64;
        }
        chi
    }

    /// The full subcomplex on the given vertices.
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> Self {
        let faces: Vec<Face> = self
            .maximal
            .iter()
            .map(|m| m.iter().copied().filter(|v| keep.contains(v)).collect())
            .collect();
        let verts = self.vertices.iter().copied().filter(|v| keep.contains(v));
        SimplicialComplex::new(verts, faces)
    }

    pub fn link(&self, face: &[usize]) -> Result<Self> {
        let f = self.check_face(face)?;
        let faces: Vec<Face> = self
            .maximal
            .iter()
            .filter(|m| is_subset(&f, m))
            .map(|m| m.iter().copied().filter(|v| f.binary_search(v).is_err()).collect())
            .collect();
        Ok(SimplicialComplex::from_faces(faces))
    }

    /// The closed star: all faces of maximal faces containing `face`.
    pub fn star(&self, face: &[usize]) -> Result<Self> {
        let f = self.check_face(face)?;
        let faces: Vec<&Face> = self.maximal.iter().filter(|m| is_subset(&f, m)).collect();
        Ok(SimplicialComplex::from_faces(faces))
    }

    /// Faces lying in both complexes.
    pub fn intersection(&self, other: &Self) -> Self {
        let mut faces = Vec::new();
        for a in &self.maximal {
            for b in &other.maximal {
                let common: Face = a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect();
                faces.push(common);
            }
        }
        SimplicialComplex::from_faces(faces)
    }

    /// `Lk(x) ∩ Lk(x')` for two vertices.
    pub fn mutual_link(&self, x: usize, y: usize) -> Result<Self> {
        for v in [x, y] {
            if !self.has_vertex(v) {
                return Err(Error::NotAVertex(v));
            }
        }
        Ok(self.link(&[x])?.intersection(&self.link(&[y])?))
    }

    /// Rename vertices through `f`, which must be injective.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        SimplicialComplex::new(
            self.vertices.iter().map(|&v| f(v)),
            self.maximal.iter().map(|m| m.iter().map(|&v| f(v)).collect::<Vec<_>>()),
        )
    }

    /// The join. Vertices of `other` are shifted past those of `self`.
    pub fn join(&self, other: &Self) -> Self {
        let offset = self.vertices.last().map_or(0, |v| v + 1);
        let b = other.relabel(|v| v + offset);
        let left: Vec<Face> = if self.maximal.is_empty() { vec![vec![]] } else { self.maximal.clone() };
        let right: Vec<Face> = if b.maximal.is_empty() { vec![vec![]] } else { b.maximal.clone() };
        let mut faces = Vec::new();
        for x in &left {
            for y in &right {
                let mut f = x.clone();
                f.extend_from_slice(y);
                faces.push(f);
            }
        }
        SimplicialComplex::new(self.vertices.iter().copied().chain(b.vertices.iter().copied()), faces)
    }

    /// The cone with apex one past the largest vertex.
    pub fn cone(&self) -> Self {
        self.join(&SimplicialComplex::points(1))
    }

    pub fn suspension(&self) -> Self {
        self.join(&SimplicialComplex::points(2))
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let offset = self.vertices.last().map_or(0, |v| v + 1);
        let b = other.relabel(|v| v + offset);
        SimplicialComplex::new(
            self.vertices.iter().copied().chain(b.vertices.iter().copied()),
            self.maximal.iter().chain(b.maximal.iter()),
        )
    }

    /// Same complex with vertices renamed to `0..V` in order, and the old names.
    pub fn compacted(&self) -> (Self, Vec<usize>) {
        let index: BTreeMap<usize, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        (self.relabel(|v| index[&v]), self.vertices.clone())
    }
}
