//! Exact evaluation of the Weyl dimension formula, the height polynomials
//! `f_j(t) = dim V(t lambda_j)`, and the minimal fundamental weight orbit.

use crate::error::LieError;
use crate::poly::ExactPolynomial;
use crate::rootsys::{DominantWeight, RootSystem};
use crate::Result;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeSet;

/// `dim V(w)` as an exact integer.
///
/// Numerator and denominator products are accumulated separately and divided
/// once; a nonzero remainder would indicate a root-system bug and is
/// reported as an internal error rather than rounded away.
pub fn weyl_dim(rs: &RootSystem, w: &DominantWeight) -> Result<BigInt> {
    if w.len() != rs.rank() {
        return Err(LieError::WeightLength {
            got: w.len(),
            rank: rs.rank(),
        });
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..rs.positive_roots().len() {
        let mut term = rs.rho_pair(k);
        for (i, &a) in w.coeffs().iter().enumerate() {
            term += a as i64 * rs.coroot_coeffs(k)[i];
        }
        num *= BigInt::from(term);
        den *= BigInt::from(rs.rho_pair(k));
    }
    let (q, r) = num::Integer::div_rem(&num, &den);
    if !r.is_zero() {
        return Err(LieError::Internal(
            "Weyl numerator not divisible by denominator".into(),
        ));
    }
    if !q.is_positive() {
        return Err(LieError::Internal("non-positive dimension".into()));
    }
    Ok(q)
}

/// `dim V(t lambda_j)` for one integer `t >= 0`.
pub fn weyl_dim_fundamental_multiple(rs: &RootSystem, j: usize, t: u32) -> Result<BigInt> {
    if j == 0 || j > rs.rank() {
        return Err(LieError::NodeOutOfRange {
            node: j,
            rank: rs.rank(),
        });
    }
    weyl_dim(
        rs,
        &DominantWeight::multiple_of_fundamental(rs.rank(), j, t),
    )
}

/// The polynomial `f_j(t) = dim V(t lambda_j)`.
///
/// Obtained by exact interpolation of `weyl_dim` at `deg + 1` integer points,
/// where `deg` is the size of the nilradical at node `j`; the one dimension
/// code path stays the single source of truth.
pub fn f_poly(rs: &RootSystem, j: usize) -> Result<ExactPolynomial> {
    let deg = rs.nilradical_indices(j)?.len();
    let points: Vec<(BigRational, BigRational)> = (0..=deg as u32)
        .map(|t| {
            let d = weyl_dim_fundamental_multiple(rs, j, t)?;
            Ok((
                BigRational::from_integer(BigInt::from(t)),
                BigRational::from_integer(d),
            ))
        })
        .collect::<Result<_>>()?;
    let p = ExactPolynomial::interpolate(&points);
    if p.degree() != Some(deg) {
        return Err(LieError::Internal(format!(
            "f_{j} has degree {:?}, expected {deg}",
            p.degree()
        )));
    }
    Ok(p)
}

/// Which fundamental weights have the least module dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinFundamentalReport {
    /// Chosen representative node (the smallest in the orbit).
    pub s: usize,
    /// All nodes attaining the minimum; a single diagram-automorphism orbit.
    pub orbit: BTreeSet<usize>,
    /// The minimal dimension.
    pub m: BigInt,
}

/// Identify the minimal fundamental dimension and the orbit attaining it.
pub fn min_fundamental(rs: &RootSystem) -> Result<MinFundamentalReport> {
    let dims: Vec<BigInt> = (1..=rs.rank())
        .map(|j| weyl_dim_fundamental_multiple(rs, j, 1))
        .collect::<Result<_>>()?;
    let m = dims.iter().min().cloned().expect("rank >= 1");
    let argmin: BTreeSet<usize> = (1..=rs.rank()).filter(|&j| dims[j - 1] == m).collect();
    // The minimizers must be one orbit of the diagram automorphism group.
    let first = *argmin.iter().next().unwrap();
    let orbit_of_first = rs
        .diagram_automorphism_orbits()
        .into_iter()
        .find(|o| o.contains(&first))
        .unwrap();
    if orbit_of_first != argmin {
        return Err(LieError::Internal(format!(
            "minimal fundamentals {argmin:?} are not a single orbit"
        )));
    }
    Ok(MinFundamentalReport {
        s: first,
        orbit: argmin,
        m,
    })
}
