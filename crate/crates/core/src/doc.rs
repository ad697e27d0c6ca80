//! The on-disk complex document: a small JSON format with 1-based vertex
//! labels. Facets are the input of record; downward closure is computed on
//! load, never trusted.

use serde::{Deserialize, Serialize};

use crate::complex::{make_complement, Complement, SimplicialComplex};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub complement: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
}

fn to_vertex_set(list: &[usize], m: usize) -> Result<VertexSet> {
    let mut s = VertexSet::empty();
    for &v in list {
        if v < 1 || v > m {
            return Err(Error::VertexOutOfRange { vertex: v, m });
        }
        s = s.insert(v);
    }
    Ok(s)
}

impl ComplexDocument {
    /// Parse and validate a document: syntax, vertex ranges, and complement
    /// entries (each must be a non-face).
    pub fn parse(input: &str) -> Result<ComplexDocument> {
        let doc: ComplexDocument =
            serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
        doc.complex()?; // surface validation errors at parse time
        if doc.complement.is_some() {
            doc.given_complement()?;
        }
        Ok(doc)
    }

    pub fn complex(&self) -> Result<SimplicialComplex> {
        let facets = self
            .facets
            .iter()
            .map(|f| to_vertex_set(f, self.m))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(self.m, &facets)
    }

    /// The complement listed in the document, validated against the complex
    /// and completed with the missing faces.
    pub fn given_complement(&self) -> Result<Option<Complement>> {
        let Some(listed) = &self.complement else {
            return Ok(None);
        };
        let k = self.complex()?;
        let extras = listed
            .iter()
            .map(|f| to_vertex_set(f, self.m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(make_complement(&k, &extras)?))
    }

    /// Canonical form: facets and vertices sorted, so serialize-parse is an
    /// identity on the output.
    pub fn canonicalize(&self) -> Result<ComplexDocument> {
        let k = self.complex()?;
        let facets = k.facets().iter().map(|f| f.vertices().collect()).collect();
        let complement = self.given_complement()?.map(|p| {
            p.generators()
                .iter()
                .map(|g| g.vertices().collect())
                .collect()
        });
        Ok(ComplexDocument {
            m: self.m,
            facets,
            complement,
            name: self.name.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_four_cycle() {
        let doc = ComplexDocument::parse(r#"{"m":4,"facets":[[1,2],[2,3],[3,4],[1,4]]}"#).unwrap();
        let k = doc.complex().unwrap();
        assert_eq!(k.vertex_count(), 4);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.missing_faces().len(), 2);
    }

    #[test]
    fn parse_two_points() {
        let doc = ComplexDocument::parse(r#"{"m":2,"facets":[[1],[2]]}"#).unwrap();
        let k = doc.complex().unwrap();
        assert_eq!(k.face_count(), 3);
    }

    #[test]
    fn complement_entry_that_is_a_face_is_rejected() {
        let err = ComplexDocument::parse(r#"{"m":4,"facets":[[1,2],[2,3]],"complement":[[1,2]]}"#)
            .unwrap_err();
        assert!(matches!(err, Error::InvalidComplement { .. }));
    }

    #[test]
    fn vertex_out_of_range_is_rejected() {
        let err = ComplexDocument::parse(r#"{"m":2,"facets":[[1,3]]}"#).unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { vertex: 3, m: 2 }));
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(ComplexDocument::parse("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn canonical_round_trip() {
        let doc =
            ComplexDocument::parse(r#"{"m":4,"facets":[[4,3],[2,1],[3,2],[1,4]],"name":"cycle"}"#)
                .unwrap();
        let canon = doc.canonicalize().unwrap();
        let reparsed = ComplexDocument::parse(&canon.to_json()).unwrap();
        assert_eq!(canon, reparsed);
        assert_eq!(canon, reparsed.canonicalize().unwrap());
    }
}
