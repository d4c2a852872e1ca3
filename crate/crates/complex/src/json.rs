//! JSON form of a complex: `{"vertices": V, "maximal_faces": [[...], ...]}` on
//! vertices `0..V`, with the original vertex names in `vertex_labels`.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: usize,
    pub maximal_faces: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_labels: Option<Vec<usize>>,
}

impl ComplexJson {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let (compact, names) = k.compacted();
        let labels = if names.iter().enumerate().all(|(i, &v)| i == v) {
            None
        } else {
            Some(names)
        };
        ComplexJson {
            vertices: compact.vertices().len(),
            maximal_faces: compact.maximal_faces().to_vec(),
            vertex_labels: labels,
        }
    }

    /// The complex on `0..V`; labels are informational only.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        for face in &self.maximal_faces {
            if let Some(&v) = face.iter().find(|&&v| v >= self.vertices) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: self.vertices,
                });
            }
        }
        if let Some(labels) = &self.vertex_labels {
            if labels.len() != self.vertices {
                return Err(Error::Json(format!(
                    "{} vertex labels for {} vertices",
                    labels.len(),
                    self.vertices
                )));
            }
        }
        Ok(SimplicialComplex::new(0..self.vertices, &self.maximal_faces))
    }

    /// The complex with vertices renamed to their labels, when present.
    pub fn to_labeled_complex(&self) -> Result<SimplicialComplex> {
        let k = self.to_complex()?;
        Ok(match &self.vertex_labels {
            Some(labels) => k.relabel(|v| labels[v]),
            None => k,
        })
    }
}

pub fn parse_complex(text: &str) -> Result<ComplexJson> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}
