//! The engine tying the three routes together: Tor groups via the bigraded
//! complement complex, via reduced cohomology of full subcomplexes, and via
//! the nerve of the cover; Betti tables; the Poincare polynomial of the
//! moment-angle complex; and the cross-route verification report.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::chain::{build_complement_complex_auto, build_nerve_complex_auto, ComplexHomology};
use crate::complex::{Complement, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::reduced_cohomology;
use crate::linalg::{Coefficients, HomologyGroup};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    Complement,
    Hochster,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Complement => write!(f, "complement"),
            Route::Hochster => write!(f, "hochster"),
        }
    }
}

/// Nonzero groups of one bigrading column, keyed by (degree, J).
type TableChunk = Vec<((i64, VertexSet), HomologyGroup)>;

/// Sparse bigraded Betti table: only nonzero groups are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub m: usize,
    pub coeffs: Coefficients,
    pub entries: BTreeMap<(i64, VertexSet), HomologyGroup>,
}

impl BettiTable {
    pub fn get(&self, i: i64, j: VertexSet) -> HomologyGroup {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(HomologyGroup::zero)
    }

    /// Entries in canonical order: by (|J|, J) then homological degree.
    pub fn rows(&self) -> Vec<(i64, VertexSet, &HomologyGroup)> {
        let mut rows: Vec<_> = self.entries.iter().map(|(&(i, j), g)| (i, j, g)).collect();
        rows.sort_by_key(|&(i, j, _)| (j.canonical_key(), i));
        rows
    }
}

/// Homology of the bigraded complement complex in one degree.
pub fn tor_via_complement(
    p: &Complement,
    i: i64,
    j: VertexSet,
    coeffs: Coefficients,
    max_generators: usize,
) -> Result<HomologyGroup> {
    let complex = build_complement_complex_auto(p, j, max_generators)?;
    complex.homology(i, coeffs)
}

/// Hochster route: reduced cohomology of the full subcomplex `K_J` in
/// degree `|J| - i - 1`.
pub fn tor_via_hochster(
    k: &SimplicialComplex,
    i: i64,
    j: VertexSet,
    coeffs: Coefficients,
) -> Result<HomologyGroup> {
    let degree = j.cardinality() as i64 - i - 1;
    reduced_cohomology(&k.full_subcomplex(j), degree, coeffs)
}

/// Nerve route, top bigrading only: `H̃_{n-2}` of the nerve complex equals
/// the complement route at `(n, [m])`.
pub fn tor_via_nerve(
    p: &Complement,
    n: i64,
    coeffs: Coefficients,
    max_generators: usize,
) -> Result<HomologyGroup> {
    let nerve = build_nerve_complex_auto(p, max_generators)?;
    nerve.homology(n - 2, coeffs)
}

/// All homology groups of the complement complex for one bigrading `J`,
/// sharing the boundary reductions across degrees and coefficient systems.
fn complement_groups(
    p: &Complement,
    j: VertexSet,
    coeffs_list: &[Coefficients],
    max_generators: usize,
) -> Result<BTreeMap<Coefficients, BTreeMap<i64, HomologyGroup>>> {
    let complex = build_complement_complex_auto(p, j, max_generators)?;
    let homology = ComplexHomology::new(&complex)?;
    Ok(coeffs_list
        .iter()
        .map(|&c| (c, homology.nonzero_groups(c)))
        .collect())
}

/// Whether `K_J` is a full simplex on `J`, in which case every Tor entry at
/// `J != ∅` vanishes. Cheap: true iff no missing face fits inside `J`.
fn subcomplex_is_simplex(missing: &[VertexSet], j: VertexSet) -> bool {
    !missing.iter().any(|mf| mf.is_subset_of(j))
}

/// The bigraded Betti table over all `J ⊆ [m]`, by the selected route with
/// the minimal complement. Bigradings whose full subcomplex is a simplex
/// are pruned.
pub fn betti_table(
    k: &SimplicialComplex,
    coeffs: Coefficients,
    route: Route,
    max_generators: usize,
) -> Result<BettiTable> {
    match route {
        Route::Complement => {
            betti_table_with_complement(k, &Complement::minimal(k), coeffs, max_generators)
        }
        Route::Hochster => betti_table_hochster(k, coeffs),
    }
}

/// Complement-route Betti table for a caller-supplied complement.
pub fn betti_table_with_complement(
    k: &SimplicialComplex,
    p: &Complement,
    coeffs: Coefficients,
    max_generators: usize,
) -> Result<BettiTable> {
    let m = k.vertex_count();
    let missing = k.missing_faces();
    let coeffs_list = [coeffs];
    let subsets: Vec<VertexSet> = VertexSet::full(m).subsets().collect();
    let per_j: Vec<Result<TableChunk>> = subsets
        .par_iter()
        .map(|&j| {
            if !j.is_empty() && subcomplex_is_simplex(&missing, j) {
                return Ok(Vec::new());
            }
            let groups = complement_groups(p, j, &coeffs_list, max_generators)?;
            Ok(groups[&coeffs]
                .iter()
                .map(|(&i, g)| ((i, j), g.clone()))
                .collect())
        })
        .collect();
    let mut entries = BTreeMap::new();
    for chunk in per_j {
        entries.extend(chunk?);
    }
    Ok(BettiTable { m, coeffs, entries })
}

fn betti_table_hochster(k: &SimplicialComplex, coeffs: Coefficients) -> Result<BettiTable> {
    let m = k.vertex_count();
    let missing = k.missing_faces();
    let subsets: Vec<VertexSet> = VertexSet::full(m).subsets().collect();
    let per_j: Vec<Result<TableChunk>> = subsets
        .par_iter()
        .map(|&j| {
            if !j.is_empty() && subcomplex_is_simplex(&missing, j) {
                return Ok(Vec::new());
            }
            let mut out = Vec::new();
            for i in 0..=j.cardinality() as i64 {
                let g = tor_via_hochster(k, i, j, coeffs)?;
                if !g.is_zero() {
                    out.push(((i, j), g));
                }
            }
            Ok(out)
        })
        .collect();
    let mut entries = BTreeMap::new();
    for chunk in per_j {
        entries.extend(chunk?);
    }
    Ok(BettiTable { m, coeffs, entries })
}

/// Betti numbers of the moment-angle complex by total degree `2|J| - i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincarePolynomial(pub BTreeMap<i64, usize>);

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .filter(|&(_, &c)| c > 0)
            .map(|(&e, &c)| match (c, e) {
                (_, 0) => format!("{c}"),
                (1, 1) => "t".to_string(),
                (1, _) => format!("t^{e}"),
                (_, 1) => format!("{c}t"),
                (_, _) => format!("{c}t^{e}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Sum the free ranks of a field-coefficient table by total degree.
pub fn poincare_polynomial(table: &BettiTable) -> Result<PoincarePolynomial> {
    if !table.coeffs.is_field() {
        return Err(Error::FieldRequired);
    }
    let mut coeffs: BTreeMap<i64, usize> = BTreeMap::new();
    for (&(i, j), g) in &table.entries {
        if g.free_rank > 0 {
            *coeffs.entry(2 * j.cardinality() as i64 - i).or_default() += g.free_rank;
        }
    }
    Ok(PoincarePolynomial(coeffs))
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Check {
    /// Complement route against the Hochster route, all bigradings.
    ComplementVsHochster,
    /// Nerve route against the complement route at the top bigrading.
    NerveShift,
    /// Complement route rerun with the maximal complement.
    ComplementChoice,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::ComplementVsHochster => write!(f, "complement-vs-hochster"),
            Check::NerveShift => write!(f, "nerve-shift"),
            Check::ComplementChoice => write!(f, "complement-choice"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub check: Check,
    pub i: i64,
    pub j: VertexSet,
    pub coeffs: Coefficients,
    pub left: HomologyGroup,
    pub right: HomologyGroup,
}

impl Comparison {
    pub fn matched(&self) -> bool {
        self.left == self.right
    }
}

/// A bigrading a check could not run on because the generator cap refused
/// the subset enumeration. Skips are report content, never silent.
#[derive(Clone, Debug)]
pub struct Skip {
    pub check: Check,
    pub j: VertexSet,
    pub generators: usize,
    pub cap: usize,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub comparisons: Vec<Comparison>,
    pub skipped: Vec<Skip>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(Comparison::matched)
    }

    pub fn check_passed(&self, check: Check) -> bool {
        self.comparisons
            .iter()
            .filter(|c| c.check == check)
            .all(Comparison::matched)
    }

    pub fn check_compared(&self, check: Check) -> usize {
        self.comparisons.iter().filter(|c| c.check == check).count()
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Comparison> {
        self.comparisons.iter().filter(|c| !c.matched())
    }
}

/// Run every executable identity on one complex: the Hochster comparison in
/// every bigrading, the nerve shift at the top bigrading, and complement
/// independence against the maximal complement. Mismatches are report
/// content, not errors.
pub fn verify(
    k: &SimplicialComplex,
    p: &Complement,
    coeffs_list: &[Coefficients],
    max_generators: usize,
) -> Result<VerificationReport> {
    let m = k.vertex_count();
    let pmax = Complement::maximal(k);
    let full = VertexSet::full(m);
    let mut subsets: Vec<VertexSet> = full.subsets().collect();
    subsets.sort_by_key(|j| j.canonical_key());

    let per_j: Vec<Result<(Vec<Comparison>, Vec<Skip>)>> = subsets
        .par_iter()
        .map(|&j| verify_bigrading(k, p, &pmax, j, full, coeffs_list, max_generators))
        .collect();

    let mut report = VerificationReport::default();
    for chunk in per_j {
        let (comparisons, skips) = chunk?;
        report.comparisons.extend(comparisons);
        report.skipped.extend(skips);
    }
    Ok(report)
}

fn verify_bigrading(
    k: &SimplicialComplex,
    p: &Complement,
    pmax: &Complement,
    j: VertexSet,
    full: VertexSet,
    coeffs_list: &[Coefficients],
    max_generators: usize,
) -> Result<(Vec<Comparison>, Vec<Skip>)> {
    let mut comparisons = Vec::new();
    let mut skipped = Vec::new();

    let r_j = p.restrict(j).len() as i64;
    let i_max = (j.cardinality() as i64).max(r_j);

    let groups = match complement_groups(p, j, coeffs_list, max_generators) {
        Ok(g) => Some(g),
        Err(Error::SizeCap { j, count, cap }) => {
            skipped.push(Skip {
                check: Check::ComplementVsHochster,
                j,
                generators: count,
                cap,
            });
            None
        }
        Err(e) => return Err(e),
    };

    if let Some(groups) = &groups {
        for &coeffs in coeffs_list {
            for i in 0..=i_max {
                let left = groups[&coeffs]
                    .get(&i)
                    .cloned()
                    .unwrap_or_else(HomologyGroup::zero);
                let right = tor_via_hochster(k, i, j, coeffs)?;
                comparisons.push(Comparison {
                    check: Check::ComplementVsHochster,
                    i,
                    j,
                    coeffs,
                    left,
                    right,
                });
            }
        }
    }

    // nerve shift at the top bigrading; the identity presumes K is not a
    // simplex (a full simplex has an empty complement and no cover)
    if j == full && !k.is_full_simplex() {
        if let Some(groups) = &groups {
            match build_nerve_complex_auto(p, max_generators) {
                Ok(nerve) => {
                    let nerve_homology = ComplexHomology::new(&nerve)?;
                    let n_max = i_max.max(p.len() as i64 + 1);
                    for &coeffs in coeffs_list {
                        for n in 0..=n_max {
                            let left = nerve_homology.group(n - 2, coeffs);
                            let right = groups[&coeffs]
                                .get(&n)
                                .cloned()
                                .unwrap_or_else(HomologyGroup::zero);
                            comparisons.push(Comparison {
                                check: Check::NerveShift,
                                i: n,
                                j,
                                coeffs,
                                left,
                                right,
                            });
                        }
                    }
                }
                Err(Error::SizeCap { j, count, cap }) => {
                    skipped.push(Skip {
                        check: Check::NerveShift,
                        j,
                        generators: count,
                        cap,
                    });
                }
                Err(e) => return Err(e),
            }
        }
    }

    // complement independence against the maximal complement
    if let Some(groups) = &groups {
        match complement_groups(pmax, j, coeffs_list, max_generators) {
            Ok(max_groups) => {
                let i_max_choice = i_max.max(pmax.restrict(j).len() as i64);
                for &coeffs in coeffs_list {
                    for i in 0..=i_max_choice {
                        let left = groups[&coeffs]
                            .get(&i)
                            .cloned()
                            .unwrap_or_else(HomologyGroup::zero);
                        let right = max_groups[&coeffs]
                            .get(&i)
                            .cloned()
                            .unwrap_or_else(HomologyGroup::zero);
                        comparisons.push(Comparison {
                            check: Check::ComplementChoice,
                            i,
                            j,
                            coeffs,
                            left,
                            right,
                        });
                    }
                }
            }
            Err(Error::SizeCap { j, count, cap }) => {
                skipped.push(Skip {
                    check: Check::ComplementChoice,
                    j,
                    generators: count,
                    cap,
                });
            }
            Err(e) => return Err(e),
        }
    }

    Ok((comparisons, skipped))
}
