//! The named complex corpus shipped in-repo, so every check is runnable
//! offline: simplices, simplex boundaries, cycles, disjoint unions, the
//! 6-vertex projective plane and the octahedron boundary.

use crate::doc::ComplexDocument;
use crate::error::Result;

const CORPUS: &[(&str, &str)] = &[
    ("point", include_str!("../corpus/point.json")),
    ("two-points", include_str!("../corpus/two-points.json")),
    ("simplex-3", include_str!("../corpus/simplex-3.json")),
    ("boundary-2", include_str!("../corpus/boundary-2.json")),
    ("boundary-3", include_str!("../corpus/boundary-3.json")),
    ("cycle-4", include_str!("../corpus/cycle-4.json")),
    ("cycle-5", include_str!("../corpus/cycle-5.json")),
    ("cycle-6", include_str!("../corpus/cycle-6.json")),
    ("cycle-7", include_str!("../corpus/cycle-7.json")),
    ("cycle-8", include_str!("../corpus/cycle-8.json")),
    (
        "two-triangles",
        include_str!("../corpus/two-triangles.json"),
    ),
    ("rp2-6", include_str!("../corpus/rp2-6.json")),
    ("octahedron", include_str!("../corpus/octahedron.json")),
];

pub fn names() -> Vec<&'static str> {
    CORPUS.iter().map(|&(n, _)| n).collect()
}

pub fn raw(name: &str) -> Option<&'static str> {
    CORPUS
        .iter()
        .find(|&&(n, _)| n == name)
        .map(|&(_, text)| text)
}

pub fn document(name: &str) -> Option<Result<ComplexDocument>> {
    raw(name).map(ComplexDocument::parse)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses_and_validates() {
        for name in names() {
            let doc = document(name).unwrap().unwrap();
            let k = doc.complex().unwrap();
            assert!(k.vertex_count() <= 8, "{name}");
            assert_eq!(doc.name.as_deref(), Some(name));
        }
    }

    #[test]
    fn rp2_is_a_closed_surface() {
        let k = document("rp2-6").unwrap().unwrap().complex().unwrap();
        assert_eq!(k.faces_of_dim(0).len(), 6);
        assert_eq!(k.faces_of_dim(1).len(), 15);
        assert_eq!(k.faces_of_dim(2).len(), 10);
        // every edge lies in exactly two triangles
        for edge in k.faces_of_dim(1) {
            let count = k
                .faces_of_dim(2)
                .into_iter()
                .filter(|t| edge.is_subset_of(*t))
                .count();
            assert_eq!(count, 2, "edge {edge}");
        }
    }

    #[test]
    fn octahedron_is_the_threefold_join_of_two_points() {
        let k = document("octahedron").unwrap().unwrap().complex().unwrap();
        use crate::vertex_set::VertexSet;
        let antipodal = [
            VertexSet::from_vertices([1, 4]),
            VertexSet::from_vertices([2, 5]),
            VertexSet::from_vertices([3, 6]),
        ];
        assert_eq!(k.missing_faces(), antipodal.to_vec());
        assert_eq!(k.faces_of_dim(2).len(), 8);
    }
}
