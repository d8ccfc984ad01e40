//! Exact counting of the subdivided family: necklace numbers, member counts
//! and listings, and quasi-polynomial closed forms.

mod members;
mod necklace;
mod quasipoly;

pub use members::{enumerate_members, Member, MEMBER_LIMIT};
pub use necklace::{binomial, necklace, necklace_bruteforce, totient};
pub use quasipoly::{
    derive_quasipoly, format_rational, quasipoly_printed, Derivation, QuasiPolynomial, TermDifference, TermComparison,
};

use num_bigint::BigUint;
use thiserror::Error;

use crate::wedge::WedgeError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("necklace with no beads")]
    BothZero,
    #[error("brute force limited to a + b <= 24, got {a} + {b}")]
    TooLarge { a: u32, b: u32 },
    #[error("n must be an odd integer at least 3, got {0}")]
    InvalidN(u32),
    #[error("k must be at least 1")]
    InvalidK,
    #[error("the critical groove length exists only for n = 3")]
    CriticalOnlyForN3,
    #[error("{count} members exceed the enumeration limit of {limit}")]
    TooMany { count: BigUint, limit: u64 },
    #[error("no printed quasi-polynomial for n = {0}")]
    UnsupportedN(u32),
    #[error("quasi-polynomial fitting is limited to n <= 7, got {0}")]
    FitTooLarge(u32),
    #[error("fitted quasi-polynomial disagrees with the exact count at k = {k}")]
    FitInconsistent { k: u64 },
    #[error("quasi-polynomial value at k = {k} is not a non-negative integer")]
    NotACount { k: u64 },
}

fn check_n(n: u32) -> Result<(), CombinatoricsError> {
    crate::wedge::vertex_chain(n).map(|_| ()).map_err(|e| match e {
        WedgeError::InvalidN(n) => CombinatoricsError::InvalidN(n),
        _ => CombinatoricsError::InvalidN(n),
    })
}

/// `|C_{n,k}^t|`: 2 for `k = 1`, otherwise twice the number of edge-word
/// necklaces with `i` long and `(2n − i)k` short edges, summed over `i`.
pub fn count_c(n: u32, k: u32) -> Result<BigUint, CombinatoricsError> {
    check_n(n)?;
    if k == 0 {
        return Err(CombinatoricsError::InvalidK);
    }
    if k == 1 {
        return Ok(BigUint::from(2u32));
    }
    Ok(necklace_sum(n, k)? * 2u32)
}

/// `Σ_{i=0}^{2n} N_{i,(2n−i)k}`: the number of edge words up to rotation.
pub(crate) fn necklace_sum(n: u32, k: u32) -> Result<BigUint, CombinatoricsError> {
    (0..=2 * n).map(|i| necklace(i, (2 * n - i) * k)).sum()
}

/// `|C̃_{n,k}^{t*}|`: the two pivots in both chiralities.
pub fn count_ctilde(n: u32, k: u32) -> Result<BigUint, CombinatoricsError> {
    check_n(n)?;
    if k == 0 {
        return Err(CombinatoricsError::InvalidK);
    }
    Ok(BigUint::from(4u32))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrooveClass {
    Interior,
    Critical,
}

/// `|D_n^t|`: a tiling and its mirror image.
pub fn count_d(n: u32, class: GrooveClass) -> Result<BigUint, CombinatoricsError> {
    check_n(n)?;
    if class == GrooveClass::Critical && n != 3 {
        return Err(CombinatoricsError::CriticalOnlyForN3);
    }
    Ok(BigUint::from(2u32))
}
