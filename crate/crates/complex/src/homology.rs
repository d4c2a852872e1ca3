//! Integer homology through Smith normal form over arbitrary-precision integers.
//!
//! Faces are oriented by ascending vertex id, so the boundary of
//! `[v₀, …, v_k]` is `Σ (−1)^i [v₀, …, v̂_i, …, v_k]`.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};

/// Homology in one degree: `Z^betti ⊕ ⨁ Z/t` over the torsion coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub degree: isize,
    pub betti: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match u64::try_from(x) {
            Ok(small) => seq.serialize_element(&small)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Homology groups in consecutive degrees starting at `first_degree()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub reduced: bool,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyReport {
    pub fn group(&self, degree: isize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.degree == degree)
    }

    pub fn betti(&self, degree: isize) -> usize {
        self.group(degree).map_or(0, |g| g.betti)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    /// Whether every group in degrees `≤ k` vanishes.
    pub fn vanishes_through(&self, k: isize) -> bool {
        self.groups
            .iter()
            .filter(|g| g.degree <= k)
            .all(HomologyGroup::is_zero)
    }

    /// The largest `k` with all groups in degrees `≤ k` zero ("homology
    /// k-connected"); `−2` when degree −1 already fails, and `None` when every
    /// group vanishes.
    pub fn connectivity(&self) -> Option<isize> {
        match self.groups.iter().find(|g| !g.is_zero()) {
            Some(g) => Some(g.degree - 1),
            None => None,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|g| if g.degree.rem_euclid(2) == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }
}

/// Rank and nonunit invariant factors of an integer matrix given by its
/// columns as sparse `(row, entry)` lists.
pub fn smith_invariants(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> (usize, Vec<BigInt>) {
    let mut cols: Vec<BTreeMap<usize, BigInt>> = columns
        .into_iter()
        .map(|c| {
            let mut m = BTreeMap::new();
            for (r, x) in c {
                if x != 0 {
                    *m.entry(r).or_insert_with(BigInt::zero) += x;
                }
            }
            m.retain(|_, x: &mut BigInt| !x.is_zero());
            m
        })
        .filter(|m| !m.is_empty())
        .collect();
    let mut rank = 0;

    // unit pivots first: they contribute invariant factor 1 and keep things sparse
    loop {
        let Some((c, r)) = cols.iter().enumerate().find_map(|(c, col)| {
            col.iter().find(|(_, x)| x.abs().is_one()).map(|(&r, _)| (c, r))
        }) else {
            break;
        };
        let pivot_col = cols.swap_remove(c);
        let unit = pivot_col[&r].clone();
        for col in cols.iter_mut() {
            let Some(a) = col.get(&r).cloned() else { continue };
            let factor = &a * &unit; // unit⁻¹ = unit
            for (&row, x) in &pivot_col {
                let e = col.entry(row).or_insert_with(BigInt::zero);
                *e -= &factor * x;
            }
            col.retain(|_, x| !x.is_zero());
        }
        // row r is now zero outside the pivot column, so deleting it changes nothing else
        cols.retain(|m| !m.is_empty());
        rank += 1;
    }
    if cols.is_empty() {
        return (rank, Vec::new());
    }

    let used_rows: Vec<usize> = {
        let mut s: Vec<usize> = cols.iter().flat_map(|c| c.keys().copied()).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    let _ = rows;
    let index: HashMap<usize, usize> = used_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut dense = vec![vec![BigInt::zero(); cols.len()]; used_rows.len()];
    for (j, col) in cols.iter().enumerate() {
        for (r, x) in col {
            dense[index[r]][j] = x.clone();
        }
    }
    let diag = dense_smith(dense);
    rank += diag.len();
    let torsion = diag.into_iter().filter(|x| !x.is_one()).collect();
    (rank, torsion)
}

/// Nonzero diagonal of the Smith normal form, each entry dividing the next.
fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut moved = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                let pivot_row = a[t].clone();
                for j in t..n {
                    let d = &q * &pivot_row[j];
                    a[i][j] -= d;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    moved = true;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for i in t..m {
                    let d = &q * &a[i][t];
                    a[i][j] -= d;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    moved = true;
                }
            }
            if moved {
                continue;
            }
            // the pivot must divide the whole remaining block
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let x = a[i][j].clone();
                        a[t][j] += x;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Homology of the chain complex spanned by `faces[k]` in degree `k`
/// (degree −1 allowed as the empty face), boundaries restricted to the
/// listed faces. Faces absent from the lists are treated as quotiented out.
fn chain_homology(levels: &[(isize, Vec<Face>)], reduced: bool) -> HomologyReport {
    let index: Vec<HashMap<&Face, usize>> = levels
        .iter()
        .map(|(_, fs)| fs.iter().enumerate().map(|(i, f)| (f, i)).collect())
        .collect();
    // rank and torsion of the boundary out of each level into the one below
    let mut boundary: Vec<(usize, Vec<BigInt>)> = Vec::with_capacity(levels.len());
    for (k, (_, fs)) in levels.iter().enumerate() {
        if k == 0 {
            boundary.push((0, Vec::new()));
            continue;
        }
        let below = &index[k - 1];
        let columns: Vec<Vec<(usize, i64)>> = fs
            .iter()
            .map(|f| {
                let mut col = Vec::new();
                for skip in 0..f.len() {
                    let g: Face = f
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    if let Some(&r) = below.get(&g) {
                        col.push((r, if skip % 2 == 0 { 1 } else { -1 }));
                    }
                }
                col
            })
            .collect();
        boundary.push(smith_invariants(levels[k - 1].1.len(), columns));
    }
    let mut groups = Vec::with_capacity(levels.len());
    for (k, (degree, fs)) in levels.iter().enumerate() {
        let rank_out = boundary[k].0;
        let (rank_in, torsion) = boundary.get(k + 1).cloned().unwrap_or((0, Vec::new()));
        groups.push(HomologyGroup {
            degree: *degree,
            betti: fs.len() - rank_out - rank_in,
            torsion,
        });
    }
    HomologyReport { reduced, groups }
}

/// Reduced integer homology in degrees `−1 ..= dim`.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologyReport {
    let mut levels: Vec<(isize, Vec<Face>)> = vec![(-1, vec![Vec::new()])];
    for (d, fs) in k.faces_by_dimension().into_iter().enumerate() {
        levels.push((d as isize, fs));
    }
    chain_homology(&levels, true)
}

/// Ordinary (unreduced) integer homology in degrees `0 ..= dim`.
pub fn homology(k: &SimplicialComplex) -> HomologyReport {
    let levels: Vec<(isize, Vec<Face>)> = k
        .faces_by_dimension()
        .into_iter()
        .enumerate()
        .map(|(d, fs)| (d as isize, fs))
        .collect();
    chain_homology(&levels, false)
}

/// `H_*(K, L)` for a subcomplex `L ⊆ K`, in degrees `0 ..= dim K`.
pub fn relative_homology(k: &SimplicialComplex, sub: &SimplicialComplex) -> HomologyReport {
    let inner: HashSet<Face> = sub.faces_by_dimension().into_iter().flatten().collect();
    let levels: Vec<(isize, Vec<Face>)> = k
        .faces_by_dimension()
        .into_iter()
        .enumerate()
        .map(|(d, fs)| (d as isize, fs.into_iter().filter(|f| !inner.contains(f)).collect()))
        .collect();
    chain_homology(&levels, false)
}

/// Whether the alternating sum of Betti numbers equals the face-count Euler characteristic.
pub fn euler_consistent(k: &SimplicialComplex, report: &HomologyReport) -> bool {
    let chi = k.reduced_euler_characteristic();
    if report.reduced {
        report.euler_characteristic() == chi
    } else {
        report.euler_characteristic() == chi + 1
    }
}
