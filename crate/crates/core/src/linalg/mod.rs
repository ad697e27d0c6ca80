//! Exact linear algebra over Z, Q and F_p: sparse integer matrices, Smith
//! normal form, and homology groups of one degree of a chain complex.
//!
//! No floating point anywhere. Matrices are stored sparse; entries that fit
//! an `i64` stay in the fast representation, anything larger is promoted to
//! an arbitrary-precision side table.

mod dense;
mod matrix;
mod sparse;

use num_bigint::BigUint;
use num_traits::One;
use std::fmt;
use std::str::FromStr;

pub use matrix::IntMatrix;
pub use sparse::Reduction;

use crate::error::{Error, Result};

/// The coefficient system: Z, Q, or a prime field F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Coefficients {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl Coefficients {
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Coefficients::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Coefficients::Integers)
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::Rationals => write!(f, "Q"),
            Coefficients::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z" => Ok(Coefficients::Integers),
            "Q" => Ok(Coefficients::Rationals),
            _ => {
                let p = s
                    .strip_prefix("Fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| {
                        Error::Parse(format!(
                            "unknown coefficient system `{s}` (expected Z, Q or Fp:<p>)"
                        ))
                    })?;
                Coefficients::prime_field(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    if p.is_multiple_of(3) {
        return p == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) || p.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// A finitely generated abelian group in canonical form: free rank plus the
/// invariant-factor divisibility chain. Over a field the torsion list is
/// empty and `free_rank` is the dimension.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.free_rank == 1 {
            write!(f, "Z")?;
            first = false;
        } else if self.free_rank > 1 {
            write!(f, "Z^{}", self.free_rank)?;
            first = false;
        }
        for t in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z/{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` together with the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub invariant_factors: Vec<BigUint>,
    pub rank: usize,
}

/// Smith normal form of an exact integer matrix. Total on valid matrices.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let red = Reduction::compute(m);
    let invariant_factors = red.invariant_factors().to_vec();
    SmithNormalForm {
        rank: invariant_factors.len(),
        invariant_factors,
    }
}

/// Rank of the matrix over Q by fraction-free (Bareiss) elimination, run
/// directly on the dense matrix. This is the slow second route kept for
/// cross-checking the sparse reduction.
pub fn rank_over_q_dense(m: &IntMatrix) -> usize {
    dense::bareiss_rank(m.to_dense())
}

/// Homology at one degree: `ker(d_out) / im(d_in)`, where `d_in` maps into
/// the middle space and `d_out` maps out of it.
pub fn homology_of_pair(
    d_in: &IntMatrix,
    d_out: &IntMatrix,
    coeffs: Coefficients,
) -> Result<HomologyGroup> {
    if d_in.rows() != d_out.cols() {
        return Err(Error::DimensionMismatch {
            left: (d_out.rows(), d_out.cols()),
            right: (d_in.rows(), d_in.cols()),
        });
    }
    if !d_out.composes_to_zero(d_in) {
        return Err(Error::NonComposable);
    }
    let red_in = Reduction::compute(d_in);
    let red_out = Reduction::compute(d_out);
    Ok(group_from_reductions(
        d_in.rows(),
        &red_out,
        &red_in,
        coeffs,
    ))
}

/// Shared homology formula once the two boundary reductions are in hand.
/// `middle_dim` is the rank of the chain group at the degree in question.
pub(crate) fn group_from_reductions(
    middle_dim: usize,
    red_out: &Reduction,
    red_in: &Reduction,
    coeffs: Coefficients,
) -> HomologyGroup {
    match coeffs {
        Coefficients::Integers => {
            let free_rank = middle_dim - red_out.rank() - red_in.rank();
            // im(d_in) sits inside ker(d_out), which is a direct summand of
            // the middle group (the quotient embeds in a free group), so the
            // invariant factors of d_in computed in the ambient basis are the
            // torsion coefficients of the homology.
            let torsion: Vec<BigUint> = red_in
                .invariant_factors()
                .iter()
                .filter(|d| !d.is_one())
                .cloned()
                .collect();
            HomologyGroup { free_rank, torsion }
        }
        Coefficients::Rationals => HomologyGroup::free(middle_dim - red_out.rank() - red_in.rank()),
        Coefficients::PrimeField(p) => {
            HomologyGroup::free(middle_dim - red_out.rank_mod(p) - red_in.rank_mod(p))
        }
    }
}
