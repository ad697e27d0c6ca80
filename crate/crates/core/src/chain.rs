//! Free chain complexes with integer boundary matrices, and the three
//! builders derived from a simplicial complement: the bigraded exterior
//! complex with the total-set differential, the full exterior complex with
//! the unrestricted differential, and the nerve complex of the associated
//! cover.
//!
//! Monomials in the exterior algebra are subsets of the generator sequence,
//! kept in ascending index order; the sign `(-1)^(j+1)` is applied to the
//! position `j` of the deleted factor within that order.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::complex::Complement;
use crate::error::{Error, Result};
use crate::homology::reduced_chain_complex_from_faces;
use crate::linalg::{group_from_reductions, Coefficients, HomologyGroup, IntMatrix, Reduction};
use crate::vertex_set::VertexSet;

/// Default cap on the number of complement generators a builder will accept
/// for one bigrading: beyond this, `2^r` subset enumeration is refused.
pub const DEFAULT_MAX_GENERATORS: usize = 24;

/// Largest generator count for which homology is computed on the fully
/// materialized monomial complex. Past this, the `_auto` builders switch to
/// the Morse-reduced complexes, which have the same homology (including
/// torsion) but exponentially fewer cells.
pub const DIRECT_LIMIT: usize = 14;

/// Per-degree ordered generator lists plus boundary matrices `d_n` mapping
/// degree `n` to degree `n - 1`. Generator labels are opaque bitmasks whose
/// meaning depends on the builder.
#[derive(Clone, Debug)]
pub struct FreeChainComplex {
    generators: BTreeMap<i64, Vec<u64>>,
    boundaries: BTreeMap<i64, IntMatrix>,
}

impl FreeChainComplex {
    pub(crate) fn new(
        generators: BTreeMap<i64, Vec<u64>>,
        boundaries: BTreeMap<i64, IntMatrix>,
    ) -> Self {
        let c = FreeChainComplex {
            generators,
            boundaries,
        };
        debug_assert!(c.dimensions_consistent());
        c
    }

    fn dimensions_consistent(&self) -> bool {
        self.boundaries
            .iter()
            .all(|(&n, d)| d.cols() == self.rank(n) && d.rows() == self.rank(n - 1))
    }

    pub fn rank(&self, n: i64) -> usize {
        self.generators.get(&n).map_or(0, Vec::len)
    }

    pub fn total_rank(&self) -> usize {
        self.generators.values().map(Vec::len).sum()
    }

    /// Degrees with at least one generator, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.generators
            .iter()
            .filter(|(_, g)| !g.is_empty())
            .map(|(&n, _)| n)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.degrees().next()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.degrees().last()
    }

    pub fn generators(&self, n: i64) -> &[u64] {
        self.generators.get(&n).map_or(&[], Vec::as_slice)
    }

    /// The boundary `d_n`; a zero matrix of the right shape when absent.
    pub fn boundary(&self, n: i64) -> IntMatrix {
        self.boundaries
            .get(&n)
            .cloned()
            .unwrap_or_else(|| IntMatrix::zero(self.rank(n - 1), self.rank(n)))
    }

    /// Replace one boundary matrix. The shape must match the generator
    /// lists; composability is not re-checked here.
    pub fn set_boundary(&mut self, n: i64, d: IntMatrix) {
        assert_eq!(d.cols(), self.rank(n));
        assert_eq!(d.rows(), self.rank(n - 1));
        self.boundaries.insert(n, d);
    }

    /// Whether `d_n ∘ d_{n+1} = 0` holds for every degree.
    pub fn boundaries_compose_to_zero(&self) -> bool {
        self.generators.keys().all(|&n| {
            let d_out = self.boundary(n);
            let d_in = self.boundary(n + 1);
            d_out.composes_to_zero(&d_in)
        })
    }

    /// Homology at one degree with the given coefficients.
    pub fn homology(&self, n: i64, coeffs: Coefficients) -> Result<HomologyGroup> {
        let dim = self.rank(n);
        if dim == 0 {
            return Ok(HomologyGroup::zero());
        }
        crate::linalg::homology_of_pair(&self.boundary(n + 1), &self.boundary(n), coeffs)
    }
}

/// Homology of a whole complex with the boundary reductions computed once
/// and shared across degrees and coefficient systems.
pub struct ComplexHomology<'a> {
    complex: &'a FreeChainComplex,
    reductions: BTreeMap<i64, Reduction>,
}

impl<'a> ComplexHomology<'a> {
    pub fn new(complex: &'a FreeChainComplex) -> Result<Self> {
        if !complex.boundaries_compose_to_zero() {
            return Err(Error::NonComposable);
        }
        let degrees: Vec<i64> = complex.degrees().collect();
        let mut wanted = BTreeSet::new();
        for &n in &degrees {
            wanted.insert(n);
            wanted.insert(n + 1);
        }
        let reductions = {
            use rayon::prelude::*;
            wanted
                .into_iter()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|n| (n, Reduction::compute(&complex.boundary(n))))
                .collect()
        };
        Ok(ComplexHomology {
            complex,
            reductions,
        })
    }

    pub fn group(&self, n: i64, coeffs: Coefficients) -> HomologyGroup {
        let dim = self.complex.rank(n);
        if dim == 0 {
            return HomologyGroup::zero();
        }
        group_from_reductions(
            dim,
            &self.reductions[&n],
            &self.reductions[&(n + 1)],
            coeffs,
        )
    }

    /// All nonzero homology groups, by degree.
    pub fn nonzero_groups(&self, coeffs: Coefficients) -> BTreeMap<i64, HomologyGroup> {
        self.complex
            .degrees()
            .filter_map(|n| {
                let g = self.group(n, coeffs);
                (!g.is_zero()).then_some((n, g))
            })
            .collect()
    }
}

/// Restriction of a complement to the generators inside `J`, with the subset
/// enumeration cap applied.
fn restricted_generators(
    p: &Complement,
    j: VertexSet,
    max_generators: usize,
) -> Result<Vec<VertexSet>> {
    let gens: Vec<VertexSet> = p.restrict(j).into_iter().map(|(_, g)| g).collect();
    if gens.len() > max_generators {
        return Err(Error::SizeCap {
            j,
            count: gens.len(),
            cap: max_generators,
        });
    }
    Ok(gens)
}

/// The bigraded piece `Λ^{*,J}[P]`: degree-`n` generators are the length-`n`
/// monomials whose total set is exactly `J`, and the differential deletes
/// one factor at a time, keeping only deletions that preserve the total set.
pub fn build_complement_complex(
    p: &Complement,
    j: VertexSet,
    max_generators: usize,
) -> Result<FreeChainComplex> {
    if j.is_empty() {
        // The empty monomial alone, in degree 0.
        let mut generators = BTreeMap::new();
        generators.insert(0, vec![0u64]);
        return Ok(FreeChainComplex::new(generators, BTreeMap::new()));
    }
    let gens = restricted_generators(p, j, max_generators)?;
    let r = gens.len();
    let masks: Vec<u64> = gens.iter().map(|g| g.bits()).collect();
    let target = j.bits();

    let mut by_degree: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
    for mono in 1u64..(1u64 << r) {
        let mut union = 0u64;
        let mut bits = mono;
        while bits != 0 {
            union |= masks[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        if union == target {
            by_degree
                .entry(mono.count_ones() as i64)
                .or_default()
                .push(mono);
        }
    }
    for monos in by_degree.values_mut() {
        monos.sort_unstable();
    }

    let boundaries = monomial_boundaries(&by_degree, |mono, _removed_idx| {
        // keep the term only if the deletion preserves the total set
        let mut union = 0u64;
        let mut bits = mono;
        while bits != 0 {
            union |= masks[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        union == target
    });
    Ok(FreeChainComplex::new(by_degree, boundaries))
}

/// Morse-reduced form of [`build_complement_complex`]: the same homology in
/// every degree, on exponentially fewer generators.
///
/// The monomial complex is closed under adjoining the first generator `g0`
/// (a superset of a covering set still covers), so pairing each `g0`-free
/// monomial `S` with `S ∪ {g0}` is an acyclic matching. Its critical cells
/// are the monomials that contain `g0` and stop covering `J` without it,
/// and no gradient path of positive length survives (every facet of a
/// critical cell still contains `g0`, hence is never matched upward), so the
/// Morse differential is just the original differential restricted to the
/// critical cells. Matching cancellation is a chain homotopy equivalence
/// over the integers, so free ranks and torsion are both preserved.
pub fn build_complement_complex_reduced(
    p: &Complement,
    j: VertexSet,
    max_generators: usize,
) -> Result<FreeChainComplex> {
    let gens = restricted_generators(p, j, max_generators)?;
    let r = gens.len();
    if j.is_empty() || r == 0 {
        return build_complement_complex(p, j, max_generators);
    }
    let masks: Vec<u64> = gens.iter().map(|g| g.bits()).collect();
    let target = j.bits();
    let g0 = masks[0];

    let mut by_degree: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
    for rest in 0u64..(1u64 << (r - 1)) {
        let mono = (rest << 1) | 1; // always contains generator 0
        let mut union_without = 0u64;
        let mut bits = rest << 1;
        while bits != 0 {
            union_without |= masks[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        if union_without != target && (union_without | g0) == target {
            by_degree
                .entry(mono.count_ones() as i64)
                .or_default()
                .push(mono);
        }
    }
    for monos in by_degree.values_mut() {
        monos.sort_unstable();
    }
    // the index lookup inside `monomial_boundaries` keeps exactly the
    // critical facets, which is the whole Morse differential here
    let boundaries = monomial_boundaries(&by_degree, |_, _| true);
    Ok(FreeChainComplex::new(by_degree, boundaries))
}

/// Morse-reduced form of [`build_nerve_complex`], by the dual matching: pair
/// each `g0`-free face `S` of the nerve with `S ∪ {g0}` whenever the latter
/// is still a face. Critical cells are the `g0`-free faces whose union
/// becomes everything once `g0` joins; faces containing `g0` are always
/// matched down, so again no positive-length gradient path survives and the
/// differential is the plain restriction.
pub fn build_nerve_complex_reduced(
    p: &Complement,
    max_generators: usize,
) -> Result<FreeChainComplex> {
    let r = p.len();
    if r > max_generators {
        return Err(Error::SizeCap {
            j: VertexSet::full(p.parent_m()),
            count: r,
            cap: max_generators,
        });
    }
    if r == 0 {
        return build_nerve_complex(p, max_generators);
    }
    let full = VertexSet::full(p.parent_m()).bits();
    let masks: Vec<u64> = p.generators().iter().map(|g| g.bits()).collect();
    let g0 = masks[0];

    // chain degree is |S| - 1 (reduced simplicial convention)
    let mut by_degree: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
    for rest in 0u64..(1u64 << (r - 1)) {
        let mono = rest << 1; // never contains generator 0
        let mut union = 0u64;
        let mut bits = mono;
        while bits != 0 {
            union |= masks[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        if union != full && (union | g0) == full {
            by_degree
                .entry(mono.count_ones() as i64 - 1)
                .or_default()
                .push(mono);
        }
    }
    for monos in by_degree.values_mut() {
        monos.sort_unstable();
    }
    let boundaries = monomial_boundaries(&by_degree, |_, _| true);
    Ok(FreeChainComplex::new(by_degree, boundaries))
}

/// [`build_complement_complex`] for generator counts where the full complex
/// is affordable, the Morse-reduced complex beyond that. Intended for
/// homology computations; the two have identical homology.
pub fn build_complement_complex_auto(
    p: &Complement,
    j: VertexSet,
    max_generators: usize,
) -> Result<FreeChainComplex> {
    if p.restrict(j).len() <= DIRECT_LIMIT {
        build_complement_complex(p, j, max_generators)
    } else {
        build_complement_complex_reduced(p, j, max_generators)
    }
}

/// [`build_nerve_complex`] below the direct limit, the Morse-reduced nerve
/// beyond it.
pub fn build_nerve_complex_auto(p: &Complement, max_generators: usize) -> Result<FreeChainComplex> {
    if p.len() <= DIRECT_LIMIT {
        build_nerve_complex(p, max_generators)
    } else {
        build_nerve_complex_reduced(p, max_generators)
    }
}

/// The full exterior complex `Λ^*[P]` with the unrestricted differential:
/// all monomials, including the empty one in degree 0. This is the augmented
/// chain complex of the full simplex on `r` vertices, shifted by one.
pub fn build_full_exterior_complex(
    p: &Complement,
    max_generators: usize,
) -> Result<FreeChainComplex> {
    let r = p.len();
    if r > max_generators {
        return Err(Error::SizeCap {
            j: VertexSet::full(p.parent_m()),
            count: r,
            cap: max_generators,
        });
    }
    let mut by_degree: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
    for mono in 0u64..(1u64 << r) {
        by_degree
            .entry(mono.count_ones() as i64)
            .or_default()
            .push(mono);
    }
    for monos in by_degree.values_mut() {
        monos.sort_unstable();
    }
    let boundaries = monomial_boundaries(&by_degree, |_, _| true);
    Ok(FreeChainComplex::new(by_degree, boundaries))
}

/// Exact acyclicity certificate for a full exterior complex: verifies from
/// the stored boundary matrices that the insertion operator `s` (adjoin the
/// first generator, which carries sign `+1` because it sorts first) is a
/// chain contraction, i.e. `d∘s + s∘d = id` on every cell. That identity
/// forces `H_* = 0` over the integers and every field, and checking it costs
/// one pass over the nonzero boundary entries instead of an elimination, so
/// it stays exact at sizes where rank computations are hopeless.
///
/// Returns `false` if any cell violates the identity or if the complex is
/// not closed under inserting the first generator.
pub fn full_exterior_is_acyclic(c: &FreeChainComplex) -> bool {
    let index: BTreeMap<i64, HashMap<u64, usize>> = c
        .generators
        .iter()
        .map(|(&n, monos)| {
            (
                n,
                monos
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| (m, i))
                    .collect::<HashMap<_, _>>(),
            )
        })
        .collect();
    let column = |n: i64, col: usize| -> Option<Vec<(u64, i64)>> {
        let Some(d) = c.boundaries.get(&n) else {
            return Some(Vec::new());
        };
        let monos = c.generators.get(&(n - 1))?;
        d.column(col)
            .map(|(row, v)| Some((monos[row], v.try_into().ok()?)))
            .collect()
    };
    for (&n, monos) in &c.generators {
        for (col, &mono) in monos.iter().enumerate() {
            let mut acc: HashMap<u64, i64> = HashMap::new();
            // s(d(mono)): inserting the first generator into the g0-free
            // boundary terms, with sign +1
            let Some(d_mono) = column(n, col) else {
                return false;
            };
            for &(sub, v) in &d_mono {
                if sub & 1 == 0 {
                    *acc.entry(sub | 1).or_default() += v;
                }
            }
            // d(s(mono)) when the first generator is missing
            if mono & 1 == 0 {
                let Some(up) = index.get(&(n + 1)).and_then(|ix| ix.get(&(mono | 1))) else {
                    return false; // not closed under insertion
                };
                let Some(d_up) = column(n + 1, *up) else {
                    return false;
                };
                for (sub, v) in d_up {
                    *acc.entry(sub).or_default() += v;
                }
            }
            acc.retain(|_, v| *v != 0);
            if acc.len() != 1 || acc.get(&mono) != Some(&1) {
                return false;
            }
        }
    }
    true
}

/// Boundary matrices for monomial complexes: delete the factor at ascending
/// position `j` with sign `(-1)^(j+1)`; `keep` decides whether a term
/// survives.
fn monomial_boundaries(
    by_degree: &BTreeMap<i64, Vec<u64>>,
    keep: impl Fn(u64, usize) -> bool,
) -> BTreeMap<i64, IntMatrix> {
    let index: BTreeMap<i64, HashMap<u64, usize>> = by_degree
        .iter()
        .map(|(&n, monos)| {
            (
                n,
                monos
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| (m, i))
                    .collect::<HashMap<_, _>>(),
            )
        })
        .collect();

    let mut boundaries = BTreeMap::new();
    for (&n, monos) in by_degree {
        let Some(lower) = index.get(&(n - 1)) else {
            continue;
        };
        let mut triplets = Vec::new();
        for (col, &mono) in monos.iter().enumerate() {
            let mut bits = mono;
            let mut position = 0usize; // 0-based position of the deleted factor
            while bits != 0 {
                let idx = bits.trailing_zeros() as usize;
                let sub = mono & !(1u64 << idx);
                if keep(sub, idx) {
                    if let Some(&row) = lower.get(&sub) {
                        let sign = if position.is_multiple_of(2) { 1 } else { -1 };
                        triplets.push((row, col, BigInt::from(sign)));
                    }
                }
                bits &= bits - 1;
                position += 1;
            }
        }
        boundaries.insert(
            n,
            IntMatrix::from_triplets(lower.len(), monos.len(), triplets),
        );
    }
    boundaries
}

/// The nerve of the cover attached to the complement: simplices are the
/// index sets whose generator union is not all of `[m]`. Returned as the
/// reduced simplicial chain complex, so a set of `n` indices sits in chain
/// degree `n - 1` and the empty simplex in degree `-1`.
pub fn build_nerve_complex(p: &Complement, max_generators: usize) -> Result<FreeChainComplex> {
    let r = p.len();
    if r > max_generators {
        return Err(Error::SizeCap {
            j: VertexSet::full(p.parent_m()),
            count: r,
            cap: max_generators,
        });
    }
    let full = VertexSet::full(p.parent_m()).bits();
    let masks: Vec<u64> = p.generators().iter().map(|g| g.bits()).collect();
    let mut faces = BTreeSet::new();
    faces.insert(VertexSet::empty());
    for simplex in 1u64..(1u64 << r) {
        let mut union = 0u64;
        let mut bits = simplex;
        while bits != 0 {
            union |= masks[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        // unions are monotone, so this face set is downward closed
        if union != full {
            faces.insert(VertexSet::from_bits(simplex));
        }
    }
    Ok(reduced_chain_complex_from_faces(&faces))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{make_complement, SimplicialComplex};

    fn vs(vertices: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vertices.iter().copied())
    }

    fn four_cycle_complement() -> Complement {
        let k = SimplicialComplex::from_facets(
            4,
            &[vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4]), vs(&[1, 4])],
        )
        .unwrap();
        make_complement(&k, &[]).unwrap()
    }

    #[test]
    fn two_points_top_grading() {
        let k = SimplicialComplex::from_facets(2, &[vs(&[1]), vs(&[2])]).unwrap();
        let p = make_complement(&k, &[]).unwrap();
        let c = build_complement_complex(&p, VertexSet::full(2), DEFAULT_MAX_GENERATORS).unwrap();
        assert_eq!(c.rank(1), 1);
        assert_eq!(c.total_rank(), 1);
        assert!(c.boundary(1).is_zero());
        assert_eq!(
            c.homology(1, Coefficients::Rationals).unwrap(),
            HomologyGroup::free(1)
        );
    }

    #[test]
    fn four_cycle_top_grading_is_one_generator_in_degree_two() {
        let p = four_cycle_complement();
        let c = build_complement_complex(&p, VertexSet::full(4), DEFAULT_MAX_GENERATORS).unwrap();
        // neither {1,3} nor {2,4} alone covers [4]; the product does
        assert_eq!(c.rank(1), 0);
        assert_eq!(c.rank(2), 1);
        assert!(c.boundary(2).is_zero());
        assert_eq!(
            c.homology(2, Coefficients::Integers).unwrap(),
            HomologyGroup::free(1)
        );
    }

    #[test]
    fn empty_bigrading_is_the_unit() {
        let p = four_cycle_complement();
        let c = build_complement_complex(&p, VertexSet::empty(), DEFAULT_MAX_GENERATORS).unwrap();
        assert_eq!(c.rank(0), 1);
        assert_eq!(
            c.homology(0, Coefficients::Integers).unwrap(),
            HomologyGroup::free(1)
        );
    }

    #[test]
    fn full_exterior_ranks_and_acyclicity() {
        // r = 1: boundary of the triangle, single missing face {1,2,3}
        let k =
            SimplicialComplex::from_facets(3, &[vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]).unwrap();
        let p = make_complement(&k, &[]).unwrap();
        assert_eq!(p.len(), 1);
        let c = build_full_exterior_complex(&p, DEFAULT_MAX_GENERATORS).unwrap();
        assert_eq!((c.rank(0), c.rank(1)), (1, 1));
        for n in 0..=1 {
            assert_eq!(
                c.homology(n, Coefficients::Integers).unwrap(),
                HomologyGroup::zero(),
                "degree {n}"
            );
        }

        // r = 2
        let p2 = four_cycle_complement();
        let c2 = build_full_exterior_complex(&p2, DEFAULT_MAX_GENERATORS).unwrap();
        assert_eq!((c2.rank(0), c2.rank(1), c2.rank(2)), (1, 2, 1));
        assert!(c2.boundaries_compose_to_zero());
        for n in 0..=2 {
            assert_eq!(
                c2.homology(n, Coefficients::Integers).unwrap(),
                HomologyGroup::zero(),
                "degree {n}"
            );
        }

        // r = 3: three disjoint points, missing faces are the three pairs
        let k3 = SimplicialComplex::from_facets(3, &[vs(&[1]), vs(&[2]), vs(&[3])]).unwrap();
        let p3 = make_complement(&k3, &[]).unwrap();
        assert_eq!(p3.len(), 3);
        let c3 = build_full_exterior_complex(&p3, DEFAULT_MAX_GENERATORS).unwrap();
        assert_eq!(
            (c3.rank(0), c3.rank(1), c3.rank(2), c3.rank(3)),
            (1, 3, 3, 1)
        );
        for n in 0..=3 {
            assert_eq!(
                c3.homology(n, Coefficients::Integers).unwrap(),
                HomologyGroup::zero(),
                "degree {n}"
            );
        }
    }

    #[test]
    fn nerve_of_two_points_is_empty() {
        let k = SimplicialComplex::from_facets(2, &[vs(&[1]), vs(&[2])]).unwrap();
        let p = make_complement(&k, &[]).unwrap();
        let n = build_nerve_complex(&p, DEFAULT_MAX_GENERATORS).unwrap();
        assert_eq!(n.rank(-1), 1);
        assert_eq!(n.rank(0), 0);
        assert_eq!(
            n.homology(-1, Coefficients::Integers).unwrap(),
            HomologyGroup::free(1)
        );
    }

    #[test]
    fn nerve_of_four_cycle_is_two_points() {
        let p = four_cycle_complement();
        let n = build_nerve_complex(&p, DEFAULT_MAX_GENERATORS).unwrap();
        assert_eq!(n.rank(0), 2);
        assert_eq!(n.rank(1), 0);
        assert_eq!(
            n.homology(0, Coefficients::Integers).unwrap(),
            HomologyGroup::free(1)
        );
    }

    #[test]
    fn nerve_with_all_unions_proper_is_a_cone() {
        // star of vertex 1 in three edges: the missing faces {2,3}, {2,4},
        // {3,4} never cover [4], so the nerve is a full simplex.
        let k =
            SimplicialComplex::from_facets(4, &[vs(&[1, 2]), vs(&[1, 3]), vs(&[1, 4])]).unwrap();
        let p = make_complement(&k, &[]).unwrap();
        assert_eq!(p.len(), 3);
        let n = build_nerve_complex(&p, DEFAULT_MAX_GENERATORS).unwrap();
        assert_eq!(n.rank(2), 1);
        let h = ComplexHomology::new(&n).unwrap();
        let degrees: Vec<i64> = n.degrees().collect();
        for d in degrees {
            assert_eq!(
                h.group(d, Coefficients::Integers),
                HomologyGroup::zero(),
                "degree {d}"
            );
        }
    }

    #[test]
    fn reduced_complement_complex_matches_direct() {
        use crate::corpus;
        for name in ["cycle-4", "cycle-5", "cycle-6", "rp2-6", "two-triangles"] {
            let k = corpus::document(name).unwrap().unwrap().complex().unwrap();
            let p = make_complement(&k, &[]).unwrap();
            let m = k.vertex_count();
            for j in [
                VertexSet::full(m),
                VertexSet::full(m).remove(1),
                VertexSet::from_vertices(1..=m.min(4)),
            ] {
                let direct = build_complement_complex(&p, j, DEFAULT_MAX_GENERATORS).unwrap();
                let reduced =
                    build_complement_complex_reduced(&p, j, DEFAULT_MAX_GENERATORS).unwrap();
                assert!(reduced.total_rank() <= direct.total_rank());
                let hd = ComplexHomology::new(&direct).unwrap();
                let hr = ComplexHomology::new(&reduced).unwrap();
                for coeffs in [
                    Coefficients::Integers,
                    Coefficients::Rationals,
                    Coefficients::PrimeField(2),
                ] {
                    assert_eq!(
                        hd.nonzero_groups(coeffs),
                        hr.nonzero_groups(coeffs),
                        "{name} J={j} over {coeffs}"
                    );
                }
            }
        }
    }

    #[test]
    fn reduced_nerve_complex_matches_direct() {
        use crate::corpus;
        for name in [
            "two-points",
            "cycle-4",
            "cycle-5",
            "cycle-6",
            "boundary-2",
            "rp2-6",
        ] {
            let k = corpus::document(name).unwrap().unwrap().complex().unwrap();
            let p = make_complement(&k, &[]).unwrap();
            let direct = build_nerve_complex(&p, DEFAULT_MAX_GENERATORS).unwrap();
            let reduced = build_nerve_complex_reduced(&p, DEFAULT_MAX_GENERATORS).unwrap();
            let hd = ComplexHomology::new(&direct).unwrap();
            let hr = ComplexHomology::new(&reduced).unwrap();
            for coeffs in [Coefficients::Integers, Coefficients::PrimeField(3)] {
                assert_eq!(
                    hd.nonzero_groups(coeffs),
                    hr.nonzero_groups(coeffs),
                    "{name} over {coeffs}"
                );
            }
        }
    }

    #[test]
    fn contraction_certificate_accepts_full_and_rejects_tampering() {
        let p = four_cycle_complement();
        let c = build_full_exterior_complex(&p, DEFAULT_MAX_GENERATORS).unwrap();
        assert!(full_exterior_is_acyclic(&c));

        // a complement complex is not closed under insertion / not acyclic
        let bigraded =
            build_complement_complex(&p, VertexSet::full(4), DEFAULT_MAX_GENERATORS).unwrap();
        assert!(!full_exterior_is_acyclic(&bigraded));

        // flipping one sign must break the identity
        let k = SimplicialComplex::from_facets(3, &[vs(&[1]), vs(&[2]), vs(&[3])]).unwrap();
        let p3 = make_complement(&k, &[]).unwrap();
        let mut c3 = build_full_exterior_complex(&p3, DEFAULT_MAX_GENERATORS).unwrap();
        assert!(full_exterior_is_acyclic(&c3));
        let mut d = c3.boundary(2);
        let flipped = -d.get(0, 0);
        d.set(0, 0, flipped);
        c3.set_boundary(2, d);
        assert!(!full_exterior_is_acyclic(&c3));
    }

    #[test]
    fn size_cap_is_enforced() {
        let p = four_cycle_complement();
        let err = build_complement_complex(&p, VertexSet::full(4), 1).unwrap_err();
        assert!(matches!(
            err,
            Error::SizeCap {
                count: 2,
                cap: 1,
                ..
            }
        ));
    }
}
