//! Simplicial complexes on `[m]`, missing faces, non-faces, full subcomplexes
//! and simplicial complements.
//!
//! Complexes are ingested as facet lists; the downward closure is computed,
//! never trusted. Ghost vertices (elements of `[m]` that are not faces) are
//! legal: `{i}` not a face simply makes `{i}` a missing face.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    faces: BTreeSet<VertexSet>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Build a complex on `[m]` from a facet list. The empty simplex is
    /// always a face, so an empty facet list yields the empty complex `{∅}`.
    pub fn from_facets(m: usize, facets: &[VertexSet]) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroVertices);
        }
        if m > VertexSet::MAX_VERTICES {
            return Err(Error::TooManyVertices(m));
        }
        let full = VertexSet::full(m);
        for &f in facets {
            if !f.is_subset_of(full) {
                let vertex = f.difference(full).vertices().next().unwrap();
                return Err(Error::VertexOutOfRange { vertex, m });
            }
        }
        let mut faces = BTreeSet::new();
        faces.insert(VertexSet::empty());
        for &f in facets {
            for sub in f.subsets() {
                faces.insert(sub);
            }
        }
        Ok(Self::from_face_set(m, faces))
    }

    pub(crate) fn from_face_set(m: usize, faces: BTreeSet<VertexSet>) -> Self {
        debug_assert!(faces.contains(&VertexSet::empty()));
        let facets = maximal_elements(&faces);
        SimplicialComplex { m, faces, facets }
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.faces.contains(&s)
    }

    pub fn faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces.iter().copied()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Maximal faces, in canonical (cardinality, bitmask) order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Dimension: -1 for the empty complex `{∅}`.
    pub fn dim(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| f.cardinality() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    /// Faces of dimension `k` (so cardinality `k + 1`), canonical order.
    pub fn faces_of_dim(&self, k: i64) -> Vec<VertexSet> {
        let card = (k + 1) as usize;
        let mut out: Vec<_> = self
            .faces
            .iter()
            .copied()
            .filter(|f| f.cardinality() == card)
            .collect();
        out.sort_by_key(|f| f.canonical_key());
        out
    }

    pub fn is_full_simplex(&self) -> bool {
        self.faces.len() == 1usize << self.m
    }

    /// Reduced Euler characteristic by face counting, with the empty simplex
    /// contributing `(-1)^{-1} = -1`. Equals the alternating sum of reduced
    /// Betti numbers over Q.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.cardinality() % 2 == 0 { -1 } else { 1 })
            .sum()
    }

    /// The minimal non-faces of the complex: subsets not in `K` all of whose
    /// proper subsets are in `K`. Returned in canonical order.
    pub fn missing_faces(&self) -> Vec<VertexSet> {
        let mut found = BTreeSet::new();
        // A missing face minus any vertex is a face, so every missing face is
        // a face plus one vertex. Scanning (face, extra vertex) pairs avoids
        // the 2^m sweep.
        for &sigma in &self.faces {
            for v in 1..=self.m {
                if sigma.contains(v) {
                    continue;
                }
                let tau = sigma.insert(v);
                if self.faces.contains(&tau) || found.contains(&tau) {
                    continue;
                }
                let all_proper_in = tau.vertices().all(|w| self.faces.contains(&tau.remove(w)));
                if all_proper_in {
                    found.insert(tau);
                }
            }
        }
        let mut out: Vec<_> = found.into_iter().collect();
        out.sort_by_key(|f| f.canonical_key());
        out
    }

    /// All nonempty subsets of `[m]` that are not faces: the maximal
    /// simplicial complement. Enumerates `2^m` subsets.
    pub fn all_nonfaces(&self) -> Vec<VertexSet> {
        let mut out: Vec<_> = (1..(1u64 << self.m))
            .map(VertexSet::from_bits)
            .filter(|s| !self.faces.contains(s))
            .collect();
        out.sort_by_key(|f| f.canonical_key());
        out
    }

    /// The full subcomplex `K_J = {σ ∈ K | σ ⊆ J}`. Vertex labels are kept;
    /// vertices outside `J` become ghosts.
    pub fn full_subcomplex(&self, j: VertexSet) -> SimplicialComplex {
        let faces: BTreeSet<_> = self
            .faces
            .iter()
            .copied()
            .filter(|f| f.is_subset_of(j))
            .collect();
        Self::from_face_set(self.m, faces)
    }
}

fn maximal_elements(faces: &BTreeSet<VertexSet>) -> Vec<VertexSet> {
    let mut facets: Vec<VertexSet> = Vec::new();
    // BTreeSet iterates in ascending bitmask order; sort by cardinality
    // descending so earlier picks can only absorb later ones.
    let mut sorted: Vec<_> = faces.iter().copied().collect();
    sorted.sort_by_key(|f| std::cmp::Reverse(f.cardinality()));
    for f in sorted {
        if !facets.iter().any(|&g| f.is_subset_of(g)) {
            facets.push(f);
        }
    }
    facets.sort_by_key(|f| f.canonical_key());
    facets
}

/// An ordered sequence of non-faces containing every missing face. The order
/// is fixed at construction; differential signs depend on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    generators: Vec<VertexSet>,
    parent_m: usize,
}

impl Complement {
    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn parent_m(&self) -> usize {
        self.parent_m
    }

    /// The minimal complement `MF(K)`.
    pub fn minimal(k: &SimplicialComplex) -> Complement {
        make_complement(k, &[]).expect("missing faces are always valid generators")
    }

    /// The maximal complement: every non-face of `K`.
    pub fn maximal(k: &SimplicialComplex) -> Complement {
        Complement {
            generators: k.all_nonfaces(),
            parent_m: k.vertex_count(),
        }
    }

    /// Generators contained in `j`, with their positions in the original
    /// sequence. This is a simplicial complement of `K_J`.
    pub fn restrict(&self, j: VertexSet) -> Vec<(usize, VertexSet)> {
        self.generators
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, g)| g.is_subset_of(j))
            .collect()
    }
}

/// Build a complement from `MF(K)` (canonical order) followed by the
/// deduplicated extras. Rejects any extra that is a face of `K`.
pub fn make_complement(k: &SimplicialComplex, extra: &[VertexSet]) -> Result<Complement> {
    let mut generators = k.missing_faces();
    let mut seen: BTreeSet<VertexSet> = generators.iter().copied().collect();
    for &e in extra {
        if e.is_empty() || k.is_face(e) {
            return Err(Error::InvalidComplement { subset: e });
        }
        let full = VertexSet::full(k.vertex_count());
        if !e.is_subset_of(full) {
            let vertex = e.difference(full).vertices().next().unwrap();
            return Err(Error::VertexOutOfRange {
                vertex,
                m: k.vertex_count(),
            });
        }
        if seen.insert(e) {
            generators.push(e);
        }
    }
    Ok(Complement {
        generators,
        parent_m: k.vertex_count(),
    })
}
