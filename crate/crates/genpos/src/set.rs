use serde::Serialize;

/// How a candidate general position set came to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Built by a closed-form construction (leaf sets, product constructions).
    Constructed,
    /// Found by search (greedy or exact solver).
    Solved,
}

/// A set of vertices, kept sorted and deduplicated, tagged with its origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexSet {
    vertices: Vec<usize>,
    provenance: Provenance,
}

impl VertexSet {
    pub fn new(mut vertices: Vec<usize>, provenance: Provenance) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet { vertices, provenance }
    }

    pub fn constructed(vertices: Vec<usize>) -> Self {
        Self::new(vertices, Provenance::Constructed)
    }

    pub fn solved(vertices: Vec<usize>) -> Self {
        Self::new(vertices, Provenance::Solved)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }
}
