//! Reduced simplicial homology and cohomology of abstract simplicial
//! complexes. The augmentation degree -1 (the empty simplex) is a first
//! class degree, so the reduced cohomology of the empty complex is the
//! coefficient group in degree -1 with no special-casing.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::chain::FreeChainComplex;
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::linalg::{homology_of_pair, Coefficients, HomologyGroup, IntMatrix};
use crate::vertex_set::VertexSet;

/// The augmented chain complex: degree -1 holds the empty simplex, degree
/// `k` the `k`-faces with ascending vertex order as orientation. Ghost
/// vertices contribute nothing.
pub fn reduced_chain_complex(k: &SimplicialComplex) -> FreeChainComplex {
    let faces: BTreeSet<VertexSet> = k.faces().collect();
    reduced_chain_complex_from_faces(&faces)
}

/// Same construction from a raw downward-closed face set (used for nerves,
/// whose vertex set is an index set rather than `[m]`).
pub(crate) fn reduced_chain_complex_from_faces(faces: &BTreeSet<VertexSet>) -> FreeChainComplex {
    let mut by_degree: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
    for &f in faces {
        by_degree
            .entry(f.cardinality() as i64 - 1)
            .or_default()
            .push(f.bits());
    }
    for gens in by_degree.values_mut() {
        gens.sort_unstable();
    }

    let index: BTreeMap<i64, HashMap<u64, usize>> = by_degree
        .iter()
        .map(|(&d, gens)| {
            (
                d,
                gens.iter()
                    .enumerate()
                    .map(|(i, &g)| (g, i))
                    .collect::<HashMap<_, _>>(),
            )
        })
        .collect();

    let mut boundaries = BTreeMap::new();
    for (&d, gens) in &by_degree {
        let Some(lower) = index.get(&(d - 1)) else {
            continue;
        };
        let mut triplets = Vec::new();
        for (col, &bits) in gens.iter().enumerate() {
            let simplex = VertexSet::from_bits(bits);
            for (position, v) in simplex.vertices().enumerate() {
                let face = simplex.remove(v).bits();
                let row = lower[&face]; // downward closure guarantees presence
                let sign = if position % 2 == 0 { 1 } else { -1 };
                triplets.push((row, col, BigInt::from(sign)));
            }
        }
        boundaries.insert(
            d,
            IntMatrix::from_triplets(lower.len(), gens.len(), triplets),
        );
    }
    FreeChainComplex::new(by_degree, boundaries)
}

/// Reduced homology in one degree.
pub fn reduced_homology(
    k: &SimplicialComplex,
    degree: i64,
    coeffs: Coefficients,
) -> Result<HomologyGroup> {
    reduced_chain_complex(k).homology(degree, coeffs)
}

/// Reduced cohomology in one degree: homology of the transposed complex,
/// keeping Smith normal form as the single engine. Out-of-range degrees
/// return the zero group. Over Z the torsion sits one degree above the
/// homology torsion, as universal coefficients dictates.
pub fn reduced_cohomology(
    k: &SimplicialComplex,
    degree: i64,
    coeffs: Coefficients,
) -> Result<HomologyGroup> {
    let chain = reduced_chain_complex(k);
    if chain.rank(degree) == 0 {
        return Ok(HomologyGroup::zero());
    }
    // coboundary into degree q is the transpose of d_q; coboundary out of
    // degree q is the transpose of d_{q+1}
    let delta_in = chain.boundary(degree).transpose();
    let delta_out = chain.boundary(degree + 1).transpose();
    homology_of_pair(&delta_in, &delta_out, coeffs)
}
