//! Finite abstract simplicial complexes given by their facets.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::stratified::{StratifiedSpace, Stratum};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("a simplex must have at least one vertex")]
    EmptySimplex,
    #[error("vertex {0} repeated within a simplex")]
    DuplicateVertex(Vertex),
    #[error("a complex needs at least one facet")]
    NoFacets,
    #[error("{0} is not a face of the complex")]
    NotAFace(Simplex),
}

/// Opaque vertex label; integers sort before strings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Vertex {
    Int(i64),
    Name(String),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Int(i) => write!(f, "{i}"),
            Vertex::Name(s) => write!(f, "{s:?}"),
        }
    }
}

impl From<i64> for Vertex {
    fn from(i: i64) -> Self {
        Vertex::Int(i)
    }
}

impl From<&str> for Vertex {
    fn from(s: &str) -> Self {
        Vertex::Name(s.to_string())
    }
}

/// A simplex in canonical form: non-empty, strictly increasing vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<Vertex>,
}

impl Simplex {
    pub fn new<V: Into<Vertex>>(vertices: impl IntoIterator<Item = V>) -> Result<Self, SimplicialError> {
        let mut vertices: Vec<Vertex> = vertices.into_iter().map(Into::into).collect();
        if vertices.is_empty() {
            return Err(SimplicialError::EmptySimplex);
        }
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(SimplicialError::DuplicateVertex(w[0].clone()));
        }
        Ok(Simplex { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.vertices.binary_search(v).is_err())
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.vertices.binary_search(v).is_ok())
    }

    /// Union of two simplices, in canonical form.
    pub fn join(&self, other: &Simplex) -> Simplex {
        let set: BTreeSet<&Vertex> = self.vertices.iter().chain(&other.vertices).collect();
        Simplex { vertices: set.into_iter().cloned().collect() }
    }

    /// Every non-empty subset of the vertex set.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let k = self.vertices.len();
        (1u64..(1u64 << k)).map(move |mask| Simplex {
            vertices: (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.vertices[i].clone())
                .collect(),
        })
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Input schema: `{"facets": [[1,2,3],[3,4]]}`.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ComplexInput {
    pub facets: Vec<Vec<Vertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
    faces: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    /// The complex with no faces; its Euler characteristic is 0.
    pub fn empty() -> Self {
        SimplicialComplex { facets: Vec::new(), faces: BTreeSet::new() }
    }

    pub fn from_input(input: ComplexInput) -> Result<Self, SimplicialError> {
        let facets = input
            .facets
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<Vec<_>, _>>()?;
        downward_closure(facets)
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn faces(&self) -> impl Iterator<Item = &Simplex> {
        self.faces.iter()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.faces.contains(s)
    }

    /// Faces that are not a proper face of anything else.
    pub fn maximal_faces(&self) -> Vec<Simplex> {
        self.faces
            .iter()
            .filter(|s| !self.faces.iter().any(|t| t.dim() > s.dim() && s.is_face_of(t)))
            .cloned()
            .collect()
    }

    pub fn euler_char(&self) -> i64 {
        self.faces.iter().map(|s| if s.dim() % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ X}`.
    pub fn link(&self, sigma: &Simplex) -> Result<SimplicialComplex, SimplicialError> {
        if !self.contains(sigma) {
            return Err(SimplicialError::NotAFace(sigma.clone()));
        }
        let faces: BTreeSet<Simplex> = self
            .faces
            .iter()
            .filter(|t| t.is_disjoint(sigma) && self.faces.contains(&t.join(sigma)))
            .cloned()
            .collect();
        let mut link = SimplicialComplex { facets: Vec::new(), faces };
        link.facets = link.maximal_faces();
        Ok(link)
    }

    /// One stratum per open cell: dimension `d_σ`, `χ_c = (-1)^{d_σ}`,
    /// link Euler characteristic from [`link`](Self::link), sheaf rank unset.
    pub fn cell_stratification(&self) -> StratifiedSpace {
        let strata = self
            .faces
            .iter()
            .map(|sigma| {
                let link_chi = self
                    .link(sigma)
                    .expect("iterating over own faces")
                    .euler_char();
                Stratum {
                    name: sigma.to_string(),
                    dim: sigma.dim() as i64,
                    chi_c: if sigma.dim() % 2 == 0 { 1 } else { -1 },
                    link_chi: Some(link_chi),
                    sheaf_rank: None,
                }
            })
            .collect();
        StratifiedSpace::new(strata)
    }
}

/// Builds the complex generated by `facets`, every face listed once.
pub fn downward_closure(facets: Vec<Simplex>) -> Result<SimplicialComplex, SimplicialError> {
    if facets.is_empty() {
        return Err(SimplicialError::NoFacets);
    }
    let faces = facets.iter().flat_map(Simplex::faces).collect();
    Ok(SimplicialComplex { facets, faces })
}
