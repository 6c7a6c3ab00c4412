//! The least dimension of `V(lambda)` over all dominant weights of a fixed
//! height, with three layers of evidence:
//!
//! * a direct computation (`min_dim_at_height`) placing the minimum at
//!   `t * lambda_s` for the minimal fundamental orbit,
//! * a brute-force check over the whole height-`t` simplex
//!   (`verify_min_at_height`),
//! * constructive certificates (`find_injection`) that dominate the Weyl
//!   numerator factors of `V(t lambda_s)` by those of `V(t lambda_j)`
//!   termwise, for every node `j`.
//!
//! A certificate is an injection `phi` from the nilradical root set `R_s`
//! into `R_j` with `pair(rho, a) <= pair(rho, phi a)` and
//! `pair(lambda_s, a) <= pair(lambda_j, phi a)`. Exactly one family needs
//! more: for `B_n` at `j = n` one source root has no admissible target, and
//! a composite certificate maps it to a pair of targets whose product of
//! factors dominates; the inequality is certified by expanding the
//! difference polynomial and checking its coefficients are nonnegative.

use crate::dims::{min_fundamental, weyl_dim, weyl_dim_fundamental_multiple};
use crate::error::LieError;
use crate::poly::ExactPolynomial;
use crate::rootsys::{simplex_size, weights_of_height, DominantWeight, Family, RootSystem};
use crate::Result;
use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Default cap on brute-force enumeration sizes.
pub const DEFAULT_ENUMERATION_CAP: u128 = 2_000_000;

/// The minimum dimension at one height, with the attaining weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightMinimum {
    pub t: u32,
    pub min_dim: BigInt,
    /// All weights of height `t` attaining the minimum; closed under diagram
    /// automorphisms.
    pub minimizing_weights: BTreeSet<DominantWeight>,
}

/// The minimum dimension at height `t`: attained exactly on the orbit of
/// `t * lambda_s`.
pub fn min_dim_at_height(rs: &RootSystem, t: u32) -> Result<HeightMinimum> {
    let report = min_fundamental(rs)?;
    let min_dim = weyl_dim_fundamental_multiple(rs, report.s, t)?;
    let base = DominantWeight::multiple_of_fundamental(rs.rank(), report.s, t);
    let minimizing_weights: BTreeSet<DominantWeight> =
        rs.weight_orbit(&base).into_iter().collect();
    Ok(HeightMinimum {
        t,
        min_dim,
        minimizing_weights,
    })
}

/// Outcome of the brute-force check at one height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightMinimumCheck {
    pub t: u32,
    pub enumerated: usize,
    pub pass: bool,
    pub expected: HeightMinimum,
    /// Weights violating the bound or the equality clause, if any.
    pub offenders: Vec<DominantWeight>,
}

/// Enumerate the full height-`t` simplex and confirm that the minimum and
/// its attaining set are exactly as predicted.
pub fn verify_min_at_height(rs: &RootSystem, t: u32, cap: u128) -> Result<HeightMinimumCheck> {
    let required = simplex_size(rs.rank(), t);
    if required > cap {
        return Err(LieError::EnumerationCap { required, cap });
    }
    let expected = min_dim_at_height(rs, t)?;
    let mut offenders = Vec::new();
    let mut attained: BTreeSet<DominantWeight> = BTreeSet::new();
    let weights = weights_of_height(rs.rank(), t);
    let enumerated = weights.len();
    for w in weights {
        let d = weyl_dim(rs, &w)?;
        if d < expected.min_dim {
            offenders.push(w);
        } else if d == expected.min_dim {
            attained.insert(w);
        }
    }
    let pass = offenders.is_empty() && attained == expected.minimizing_weights;
    if !pass && offenders.is_empty() {
        // equality clause failed; report the symmetric difference
        offenders = attained
            .symmetric_difference(&expected.minimizing_weights)
            .cloned()
            .collect();
    }
    Ok(HeightMinimumCheck {
        t,
        enumerated,
        pass,
        expected,
        offenders,
    })
}

/// Check `dim V(t lambda_j) >= dim V(t lambda_s)` for `1 <= t <= t_max`.
pub fn verify_fundamental_monotone(rs: &RootSystem, j: usize, t_max: u32) -> Result<bool> {
    let s = min_fundamental(rs)?.s;
    for t in 1..=t_max {
        let dj = weyl_dim_fundamental_multiple(rs, j, t)?;
        let ds = weyl_dim_fundamental_multiple(rs, s, t)?;
        if dj < ds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One matched source/target pair inside a certificate, with the pairing
/// values conditions (1) and (2) constrain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertPair {
    /// Simple-root coefficients of the source root (in `R_s`).
    pub source: Vec<i64>,
    /// Simple-root coefficients of the target root (in `R_j`).
    pub target: Vec<i64>,
    pub rho_source: i64,
    pub rho_target: i64,
    pub weight_source: i64,
    pub weight_target: i64,
}

/// Composite record for the one source root that admits no single target:
/// two targets whose factor product dominates the source factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FallbackRecord {
    pub source: Vec<i64>,
    pub targets: [Vec<i64>; 2],
    /// Coefficients (constant first) of the polynomial
    /// `product_of_target_factors - source_factor`, cleared of denominators;
    /// all nonnegative, which proves domination for every `t >= 0`.
    pub difference_coeffs: Vec<String>,
}

/// A verified injection certificate for one node `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectionCertificate {
    pub lie_type: String,
    pub s: usize,
    pub j: usize,
    pub mapping: Vec<CertPair>,
    pub fallback: Option<FallbackRecord>,
}

impl InjectionCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

struct PairingData {
    /// (rho pairing, weight pairing) per root index.
    rho: Vec<i64>,
    source_weight: Vec<i64>,
    target_weight: Vec<i64>,
}

fn pairing_data(rs: &RootSystem, s: usize, j: usize) -> PairingData {
    let count = rs.positive_roots().len();
    PairingData {
        rho: (0..count).map(|k| rs.rho_pair(k)).collect(),
        source_weight: (0..count).map(|k| rs.coroot_coeffs(k)[s - 1]).collect(),
        target_weight: (0..count).map(|k| rs.coroot_coeffs(k)[j - 1]).collect(),
    }
}

/// Kuhn's augmenting-path maximum matching. `adj[u]` lists target slots
/// admissible for source `u`.
fn max_matching(adj: &[Vec<usize>], n_targets: usize) -> Vec<Option<usize>> {
    let mut matched_target: Vec<Option<usize>> = vec![None; n_targets];

    fn try_augment(
        u: usize,
        adj: &[Vec<usize>],
        visited: &mut [bool],
        matched_target: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            if matched_target[v].is_none()
                || try_augment(matched_target[v].unwrap(), adj, visited, matched_target)
            {
                matched_target[v] = Some(u);
                return true;
            }
        }
        false
    }

    for u in 0..adj.len() {
        let mut visited = vec![false; n_targets];
        try_augment(u, adj, &mut visited, &mut matched_target);
    }
    matched_target
}

/// Search for an injection certificate at node `j`, sources taken from the
/// minimal fundamental node `s`.
///
/// Strategy: maximum bipartite matching over the admissibility relation.
/// When that leaves a single source uncovered (which happens only in family
/// B at the short node), a composite certificate is attempted: the uncovered
/// source mapped to the pair (itself, itself + alpha_j), then to any other
/// target pair, with the factor-product domination checked by expanding the
/// difference polynomial.
pub fn find_injection(rs: &RootSystem, j: usize) -> Result<InjectionCertificate> {
    if j == 0 || j > rs.rank() {
        return Err(LieError::NodeOutOfRange {
            node: j,
            rank: rs.rank(),
        });
    }
    let s = min_fundamental(rs)?.s;
    let sources = rs.nilradical_indices(s)?;
    let targets = rs.nilradical_indices(j)?;
    let pd = pairing_data(rs, s, j);

    let admissible = |src: usize, tgt: usize| -> bool {
        pd.rho[src] <= pd.rho[tgt] && pd.source_weight[src] <= pd.target_weight[tgt]
    };

    let adj: Vec<Vec<usize>> = sources
        .iter()
        .map(|&src| {
            (0..targets.len())
                .filter(|&ti| admissible(src, targets[ti]))
                .collect()
        })
        .collect();

    let matched_target = max_matching(&adj, targets.len());
    let mut source_to_target: Vec<Option<usize>> = vec![None; sources.len()];
    for (ti, m) in matched_target.iter().enumerate() {
        if let Some(si) = m {
            source_to_target[*si] = Some(ti);
        }
    }
    let uncovered: Vec<usize> = (0..sources.len())
        .filter(|&si| source_to_target[si].is_none())
        .collect();

    let make_pairs = |assignment: &[Option<usize>], skip: Option<usize>| -> Vec<CertPair> {
        let mut pairs = Vec::new();
        for (si, slot) in assignment.iter().enumerate() {
            if Some(si) == skip {
                continue;
            }
            let ti = slot.expect("covered source");
            let (src, tgt) = (sources[si], targets[ti]);
            pairs.push(CertPair {
                source: rs.root_coeffs(src).to_vec(),
                target: rs.root_coeffs(tgt).to_vec(),
                rho_source: pd.rho[src],
                rho_target: pd.rho[tgt],
                weight_source: pd.source_weight[src],
                weight_target: pd.target_weight[tgt],
            });
        }
        pairs
    };

    if uncovered.is_empty() {
        return Ok(InjectionCertificate {
            lie_type: rs.lie_type().to_string(),
            s,
            j,
            mapping: make_pairs(&source_to_target, None),
            fallback: None,
        });
    }

    if uncovered.len() > 1 {
        return Err(LieError::NoCertificate { j });
    }
    let lone = uncovered[0];
    let lone_root = sources[lone];

    // Candidate target pairs, the documented composite construction first:
    // the source root itself, completed by source + alpha_j.
    let mut candidate_pairs: Vec<(usize, usize)> = Vec::new();
    let self_idx = targets.iter().position(|&k| k == lone_root);
    let completion = {
        let v = rs.positive_roots()[lone_root].add(&rs.simple_roots()[j - 1]);
        rs.root_index(&v)
            .and_then(|k| targets.iter().position(|&t| t == k))
    };
    if let (Some(a), Some(b)) = (self_idx, completion) {
        if a != b {
            candidate_pairs.push((a, b));
        }
    }
    for a in 0..targets.len() {
        for b in a + 1..targets.len() {
            if Some((a, b)) != candidate_pairs.first().copied() {
                candidate_pairs.push((a, b));
            }
        }
    }

    for (a, b) in candidate_pairs {
        let diff = factor_product_difference(
            (pd.rho[lone_root], pd.source_weight[lone_root]),
            (pd.rho[targets[a]], pd.target_weight[targets[a]]),
            (pd.rho[targets[b]], pd.target_weight[targets[b]]),
        );
        if !diff.coeffs_nonnegative() {
            continue;
        }
        // The remaining sources must still match injectively into the
        // remaining targets.
        let rest_adj: Vec<Vec<usize>> = sources
            .iter()
            .enumerate()
            .filter(|&(si, _)| si != lone)
            .map(|(_, &src)| {
                (0..targets.len())
                    .filter(|&ti| ti != a && ti != b && admissible(src, targets[ti]))
                    .collect()
            })
            .collect();
        let rest_match = max_matching(&rest_adj, targets.len());
        let mut rest_assignment: Vec<Option<usize>> = vec![None; sources.len()];
        let mut covered = 0usize;
        for (ti, m) in rest_match.iter().enumerate() {
            if let Some(row) = m {
                // rows skip the lone source
                let si = if *row >= lone { row + 1 } else { *row };
                rest_assignment[si] = Some(ti);
                covered += 1;
            }
        }
        if covered != sources.len() - 1 {
            continue;
        }
        let diff_coeffs: Vec<String> = clear_denominators(&diff)
            .iter()
            .map(|c| c.to_string())
            .collect();
        return Ok(InjectionCertificate {
            lie_type: rs.lie_type().to_string(),
            s,
            j,
            mapping: make_pairs(&rest_assignment, Some(lone)),
            fallback: Some(FallbackRecord {
                source: rs.root_coeffs(lone_root).to_vec(),
                targets: [
                    rs.root_coeffs(targets[a]).to_vec(),
                    rs.root_coeffs(targets[b]).to_vec(),
                ],
                difference_coeffs: diff_coeffs,
            }),
        });
    }
    Err(LieError::NoCertificate { j })
}

/// `((h_a + t m_a)/h_a) * ((h_b + t m_b)/h_b) - (h_s + t m_s)/h_s` as a
/// polynomial in `t`.
fn factor_product_difference(
    source: (i64, i64),
    ta: (i64, i64),
    tb: (i64, i64),
) -> ExactPolynomial {
    let lin = |(h, m): (i64, i64)| {
        ExactPolynomial::linear(
            BigRational::new(BigInt::from(m), BigInt::from(h)),
            BigRational::from_integer(BigInt::from(1)),
        )
    };
    lin(ta).mul(&lin(tb)).sub(&lin(source))
}

fn clear_denominators(p: &ExactPolynomial) -> Vec<BigInt> {
    use num::Integer;
    let mut l = BigInt::from(1);
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    p.coeffs()
        .iter()
        .map(|c| {
            let v = c * BigRational::from_integer(l.clone());
            debug_assert!(v.denom() == &BigInt::from(1));
            v.numer().clone()
        })
        .collect()
}

/// Re-verify a certificate from scratch against the root system.
pub fn verify_certificate(rs: &RootSystem, cert: &InjectionCertificate) -> Result<()> {
    let s = cert.s;
    let j = cert.j;
    let sources = rs.nilradical_indices(s)?;
    let targets = rs.nilradical_indices(j)?;
    let pd = pairing_data(rs, s, j);
    let find = |coeffs: &[i64]| -> Result<usize> {
        (0..rs.positive_roots().len())
            .find(|&k| rs.root_coeffs(k) == coeffs)
            .ok_or_else(|| LieError::Internal(format!("unknown root {coeffs:?}")))
    };

    let mut used_sources: BTreeSet<usize> = BTreeSet::new();
    let mut used_targets: BTreeSet<usize> = BTreeSet::new();
    for pair in &cert.mapping {
        let src = find(&pair.source)?;
        let tgt = find(&pair.target)?;
        if !sources.contains(&src) || !targets.contains(&tgt) {
            return Err(LieError::Internal("certificate root outside nilradical".into()));
        }
        if !used_sources.insert(src) || !used_targets.insert(tgt) {
            return Err(LieError::Internal("certificate mapping not injective".into()));
        }
        if pd.rho[src] > pd.rho[tgt] || pd.source_weight[src] > pd.target_weight[tgt] {
            return Err(LieError::Internal("certificate violates domination".into()));
        }
        if pd.rho[src] != pair.rho_source
            || pd.rho[tgt] != pair.rho_target
            || pd.source_weight[src] != pair.weight_source
            || pd.target_weight[tgt] != pair.weight_target
        {
            return Err(LieError::Internal("certificate pairing values stale".into()));
        }
    }
    if let Some(fb) = &cert.fallback {
        let src = find(&fb.source)?;
        let ta = find(&fb.targets[0])?;
        let tb = find(&fb.targets[1])?;
        if !sources.contains(&src) || !targets.contains(&ta) || !targets.contains(&tb) {
            return Err(LieError::Internal("fallback root outside nilradical".into()));
        }
        if !used_sources.insert(src) || !used_targets.insert(ta) || !used_targets.insert(tb) {
            return Err(LieError::Internal("fallback overlaps the mapping".into()));
        }
        let diff = factor_product_difference(
            (pd.rho[src], pd.source_weight[src]),
            (pd.rho[ta], pd.target_weight[ta]),
            (pd.rho[tb], pd.target_weight[tb]),
        );
        if !diff.coeffs_nonnegative() {
            return Err(LieError::Internal("fallback difference has negative coefficient".into()));
        }
    }
    if used_sources.len() != sources.len() {
        return Err(LieError::Internal(format!(
            "certificate covers {} of {} sources",
            used_sources.len(),
            sources.len()
        )));
    }
    Ok(())
}

/// The composite-factor inequality used by the family-B fallback:
/// `(2t + 2n - 1)/(2n - 1) <= ((t + 2n - 1)/(2n - 1)) ((t + n)/n)`.
pub fn composite_factor_inequality_holds(n: i64, t: i64) -> bool {
    // exact integers: cross-multiplied form
    let lhs = BigInt::from(n) * BigInt::from(2 * t + 2 * n - 1);
    let rhs = BigInt::from(t + n) * BigInt::from(t + 2 * n - 1);
    lhs <= rhs
}

/// Hand-built explicit injections for the classical families, used as test
/// fixtures alongside the matcher. Returns `(source, target)` ambient
/// vectors for node `j`; `None` for the exceptional types, where only the
/// search applies.
pub fn classical_fixture(
    rs: &RootSystem,
    j: usize,
) -> Option<Vec<(crate::rootsys::RootVec, crate::rootsys::RootVec)>> {
    use crate::rootsys::RootVec;
    let n = rs.rank();
    let fam = rs.lie_type().family();
    let dim = rs.ambient_dim();
    let e = |i: usize| RootVec::basis(dim, i);
    let mut out = Vec::new();
    match fam {
        Family::A => {
            // sources e_1 - e_{i+1}, height i
            for i in 1..=n {
                let src = e(1).sub(&e(i + 1));
                let tgt = if i <= n - j {
                    e(j).sub(&e(j + i))
                } else {
                    e(n + 1 - i).sub(&e(n + 1))
                };
                out.push((src, tgt));
            }
            Some(out)
        }
        Family::C => {
            // sources: e_1 - e_{k} (heights 1..n-1), 2 e_1 (height n),
            // e_1 + e_k (heights n+1..2n-1)
            if j < n {
                for i in 1..n {
                    let src = e(1).sub(&e(i + 1));
                    let tgt = if i <= j {
                        e(j + 1 - i).sub(&e(j + 1))
                    } else {
                        src.clone()
                    };
                    out.push((src, tgt));
                }
                out.push((e(1).scale(&two()), e(1).scale(&two())));
                for k in (2..=n).rev() {
                    out.push((e(1).add(&e(k)), e(1).add(&e(k))));
                }
            } else {
                for i in 1..n {
                    out.push((e(1).sub(&e(i + 1)), e(n + 1 - i).scale(&two())));
                }
                out.push((e(1).scale(&two()), e(1).scale(&two())));
                for k in (2..=n).rev() {
                    out.push((e(1).add(&e(k)), e(1).add(&e(k))));
                }
            }
            Some(out)
        }
        Family::B => {
            // sources: e_1 - e_k, e_1 + e_k, and the short root e_1 last.
            if j < n {
                for i in 1..n {
                    let src = e(1).sub(&e(i + 1));
                    let tgt = if i <= j {
                        e(j + 1 - i).sub(&e(j + 1))
                    } else {
                        src.clone()
                    };
                    out.push((src, tgt));
                }
                for k in (2..=n).rev() {
                    out.push((e(1).add(&e(k)), e(1).add(&e(k))));
                }
                out.push((e(1), e(1)));
                Some(out)
            } else {
                // Partial matching at the short node: the source with rho
                // pairing p goes to a single short root for odd p and to a
                // consecutive sum for even p. The short source e_1 itself
                // (pairing 2n-1) is left to the composite record.
                let target_for = |p: usize| -> RootVec {
                    if p % 2 == 1 {
                        e((2 * n + 1 - p) / 2)
                    } else {
                        e(n - p / 2).add(&e(n - p / 2 + 1))
                    }
                };
                for i in 1..n {
                    out.push((e(1).sub(&e(i + 1)), target_for(i)));
                }
                for k in (2..=n).rev() {
                    out.push((e(1).add(&e(k)), target_for(2 * n - k)));
                }
                Some(out)
            }
        }
        Family::D => {
            if j <= n - 2 {
                for i in 1..n {
                    let src = e(1).sub(&e(i + 1));
                    let tgt = if i <= j {
                        e(j + 1 - i).sub(&e(j + 1))
                    } else {
                        src.clone()
                    };
                    out.push((src, tgt));
                }
                for k in (2..=n).rev() {
                    out.push((e(1).add(&e(k)), e(1).add(&e(k))));
                }
                Some(out)
            } else if j == n {
                for k in 2..=n {
                    out.push((e(1).add(&e(k)), e(1).add(&e(k))));
                }
                for k in 2..n {
                    out.push((e(1).sub(&e(k)), e(n - k + 1).add(&e(n))));
                }
                out.push((e(1).sub(&e(n)), e(2).add(&e(n - 1))));
                Some(out)
            } else {
                // j = n - 1, mirror of the j = n construction
                for k in 2..n {
                    out.push((e(1).add(&e(k)), e(1).add(&e(k))));
                }
                out.push((e(1).add(&e(n)), e(2).add(&e(n - 1))));
                for k in 2..=n {
                    out.push((e(1).sub(&e(k)), e(n - k + 1).sub(&e(n))));
                }
                Some(out)
            }
        }
        _ => None,
    }
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

/// Check one fixture mapping: injective, lands in `R_j`, and satisfies the
/// two domination conditions.
pub fn fixture_is_admissible(
    rs: &RootSystem,
    j: usize,
    mapping: &[(crate::rootsys::RootVec, crate::rootsys::RootVec)],
    sources_expected: usize,
) -> Result<()> {
    let s = min_fundamental(rs)?.s;
    let sources = rs.nilradical_indices(s)?;
    let targets = rs.nilradical_indices(j)?;
    let pd = pairing_data(rs, s, j);
    let mut seen_src = BTreeSet::new();
    let mut seen_tgt = BTreeSet::new();
    for (src_v, tgt_v) in mapping {
        let src = rs
            .root_index(src_v)
            .ok_or_else(|| LieError::Internal("fixture source not a root".to_string()))?;
        let tgt = rs
            .root_index(tgt_v)
            .ok_or_else(|| LieError::Internal("fixture target not a root".to_string()))?;
        if !sources.contains(&src) {
            return Err(LieError::Internal("fixture source outside R_s".into()));
        }
        if !targets.contains(&tgt) {
            return Err(LieError::Internal("fixture target outside R_j".into()));
        }
        if !seen_src.insert(src) || !seen_tgt.insert(tgt) {
            return Err(LieError::Internal("fixture not injective".into()));
        }
        if pd.rho[src] > pd.rho[tgt] {
            return Err(LieError::Internal(format!(
                "fixture rho condition fails: {} > {}",
                pd.rho[src], pd.rho[tgt]
            )));
        }
        if pd.source_weight[src] > pd.target_weight[tgt] {
            return Err(LieError::Internal(format!(
                "fixture weight condition fails: {} > {}",
                pd.source_weight[src], pd.target_weight[tgt]
            )));
        }
    }
    if seen_src.len() != sources_expected {
        return Err(LieError::Internal(format!(
            "fixture covers {} sources, expected {sources_expected}",
            seen_src.len()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{LieType, RootVec};
    use num::FromPrimitive;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(LieType::parse(s).unwrap()).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn minimum_at_height_pins() {
        let d4 = min_dim_at_height(&rs("D4"), 1).unwrap();
        assert_eq!(d4.min_dim, big(8));
        assert_eq!(
            d4.minimizing_weights,
            BTreeSet::from([
                DominantWeight::new(vec![1, 0, 0, 0]),
                DominantWeight::new(vec![0, 0, 1, 0]),
                DominantWeight::new(vec![0, 0, 0, 1]),
            ])
        );
        let f4 = min_dim_at_height(&rs("F4"), 1).unwrap();
        assert_eq!(f4.min_dim, big(26));
        assert_eq!(f4.minimizing_weights.len(), 1);
        let a3 = min_dim_at_height(&rs("A3"), 2).unwrap();
        assert_eq!(a3.min_dim, big(10));
        assert_eq!(
            a3.minimizing_weights,
            BTreeSet::from([
                DominantWeight::new(vec![2, 0, 0]),
                DominantWeight::new(vec![0, 0, 2]),
            ])
        );
    }

    #[test]
    fn brute_force_small_cases() {
        // A2 at height 3: the simplex (3,0),(2,1),(1,2),(0,3), minimum 10 on
        // the two ends.
        let chk = verify_min_at_height(&rs("A2"), 3, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(chk.pass);
        assert_eq!(chk.enumerated, 4);
        assert_eq!(chk.expected.min_dim, big(10));
        assert_eq!(
            chk.expected.minimizing_weights,
            BTreeSet::from([
                DominantWeight::new(vec![3, 0]),
                DominantWeight::new(vec![0, 3]),
            ])
        );
        // B3 at height 1: fundamentals 7, 21, 8.
        let chk = verify_min_at_height(&rs("B3"), 1, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(chk.pass);
        assert_eq!(chk.expected.min_dim, big(7));
        // G2 at height 2: minimum 27, cross-checked against the product form
        // (t+1)(t+2)(t+3)(t+4)(2t+5) at t = 2 over its value at 0.
        let chk = verify_min_at_height(&rs("G2"), 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(chk.pass);
        assert_eq!(chk.expected.min_dim, big(27));
        let f2 = 3 * 4 * 5 * 6 * 9;
        let f0 = 2 * 3 * 4 * 5;
        assert_eq!(chk.expected.min_dim, big(f2 / f0));
    }

    #[test]
    fn cap_is_enforced_with_required_size() {
        let err = verify_min_at_height(&rs("A5"), 4, 10).unwrap_err();
        match err {
            LieError::EnumerationCap { required, cap } => {
                assert_eq!(required, 70); // C(8, 4)
                assert_eq!(cap, 10);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn support_one_minimizers_small_ranks() {
        // The simplex minimum is always attained on a support-1 weight.
        for s in ["A3", "A5", "B3", "B5", "C2", "C4", "D4", "D5", "F4", "G2"] {
            let r = rs(s);
            for t in 1..=4u32 {
                let weights = weights_of_height(r.rank(), t);
                let min = weights
                    .iter()
                    .map(|w| weyl_dim(&r, w).unwrap())
                    .min()
                    .unwrap();
                let support_one_min = weights
                    .iter()
                    .filter(|w| w.support() == 1)
                    .map(|w| weyl_dim(&r, w).unwrap())
                    .min()
                    .unwrap();
                assert_eq!(min, support_one_min, "{s} t={t}");
            }
        }
    }

    #[test]
    fn full_matchings_for_a_family() {
        for n in 2..=10 {
            let r = rs(&format!("A{n}"));
            for j in 1..=n {
                let cert = find_injection(&r, j).unwrap();
                assert!(cert.fallback.is_none(), "A{n} j={j}");
                verify_certificate(&r, &cert).unwrap();
            }
        }
    }

    #[test]
    fn b_family_fallback_occurs_exactly_at_the_short_node() {
        for n in 3..=8 {
            let r = rs(&format!("B{n}"));
            for j in 1..=n {
                let cert = find_injection(&r, j).unwrap();
                verify_certificate(&r, &cert).unwrap();
                if j == n {
                    assert!(cert.fallback.is_some(), "B{n} j={j} should fall back");
                } else {
                    assert!(cert.fallback.is_none(), "B{n} j={j} should match fully");
                }
            }
        }
    }

    #[test]
    fn b5_fallback_targets_are_the_short_root_and_its_completion() {
        let r = rs("B5");
        let cert = find_injection(&r, 5).unwrap();
        let fb = cert.fallback.expect("fallback");
        // source e_1 = (1,1,1,1,1) in simple-root coordinates
        assert_eq!(fb.source, vec![1, 1, 1, 1, 1]);
        let e1 = RootVec::basis(5, 1);
        let e1_plus_e5 = e1.add(&RootVec::basis(5, 5));
        let as_coeffs = |v: &RootVec| {
            let k = r.root_index(v).unwrap();
            r.root_coeffs(k).to_vec()
        };
        assert_eq!(fb.targets[0], as_coeffs(&e1));
        assert_eq!(fb.targets[1], as_coeffs(&e1_plus_e5));
        // difference polynomial t^2 + (n-1) t after clearing denominators,
        // scaled by 1/(n(2n-1)); nonnegative either way
        for c in &fb.difference_coeffs {
            assert!(!c.starts_with('-'));
        }
    }

    #[test]
    fn exceptional_types_match_fully_at_every_node() {
        for s in ["G2", "F4", "E6", "E7", "E8"] {
            let r = rs(s);
            for j in 1..=r.rank() {
                let cert = find_injection(&r, j).unwrap();
                assert!(cert.fallback.is_none(), "{s} j={j}");
                verify_certificate(&r, &cert).unwrap();
            }
        }
    }

    #[test]
    fn certificates_dominate_termwise_in_t() {
        // For each matched pair the factor (rho + t * weight) of the target
        // dominates the source factor coefficientwise.
        let r = rs("C4");
        for j in 1..=4 {
            let cert = find_injection(&r, j).unwrap();
            for p in &cert.mapping {
                assert!(p.rho_source <= p.rho_target);
                assert!(p.weight_source <= p.weight_target);
            }
        }
    }

    #[test]
    fn composite_inequality_grid() {
        for n in 3..=20 {
            for t in 0..=100 {
                assert!(composite_factor_inequality_holds(n, t), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn fundamental_monotonicity() {
        assert!(verify_fundamental_monotone(&rs("C4"), 2, 10).unwrap());
        assert!(verify_fundamental_monotone(&rs("E6"), 4, 5).unwrap());
        // strictness at a non-minimal node
        let r = rs("E6");
        for t in 1..=5 {
            let dj = weyl_dim_fundamental_multiple(&r, 4, t).unwrap();
            let ds = weyl_dim_fundamental_multiple(&r, 1, t).unwrap();
            assert!(dj > ds);
        }
        // equality when j = s
        let r = rs("B4");
        for t in 1..=6 {
            let dj = weyl_dim_fundamental_multiple(&r, 1, t).unwrap();
            let ds = weyl_dim_fundamental_multiple(&r, 1, t).unwrap();
            assert_eq!(dj, ds);
        }
    }

    #[test]
    fn classical_fixtures_are_admissible() {
        for n in 3..=8 {
            let a = rs(&format!("A{n}"));
            for j in 1..=n {
                let m = classical_fixture(&a, j).unwrap();
                fixture_is_admissible(&a, j, &m, n).unwrap();
            }
            let c = rs(&format!("C{n}"));
            for j in 1..=n {
                let m = classical_fixture(&c, j).unwrap();
                fixture_is_admissible(&c, j, &m, 2 * n - 1).unwrap();
            }
            let b = rs(&format!("B{n}"));
            for j in 1..n {
                let m = classical_fixture(&b, j).unwrap();
                fixture_is_admissible(&b, j, &m, 2 * n - 1).unwrap();
            }
            // at j = n the fixture is the partial matching; the short root
            // e_1 is handled by the composite record
            let m = classical_fixture(&b, n).unwrap();
            fixture_is_admissible(&b, n, &m, 2 * n - 2).unwrap();
        }
        for n in 4..=8 {
            let d = rs(&format!("D{n}"));
            for j in 1..=n {
                let m = classical_fixture(&d, j).unwrap();
                fixture_is_admissible(&d, j, &m, 2 * n - 2).unwrap();
            }
        }
    }

    #[test]
    fn a_family_fixture_preserves_rho_pairings() {
        let r = rs("A6");
        for j in 1..=6 {
            let m = classical_fixture(&r, j).unwrap();
            for (src, tgt) in m {
                let ps = r.pair(r.rho(), &src).unwrap();
                let pt = r.pair(r.rho(), &tgt).unwrap();
                assert_eq!(ps, pt, "A6 j={j}");
            }
        }
    }

    #[test]
    fn certificate_json_roundtrip_and_fixture() {
        let r = rs("B5");
        let cert = find_injection(&r, 5).unwrap();
        let json = cert.to_json();
        let back = InjectionCertificate::from_json(&json).unwrap();
        assert_eq!(cert, back);
        let frozen = include_str!("../tests/fixtures/cert_b5_j5.json");
        assert_eq!(json.trim(), frozen.trim());
    }

    #[test]
    fn min_dim_at_height_a1() {
        let a1 = rs("A1");
        let m = min_dim_at_height(&a1, 5).unwrap();
        assert_eq!(m.min_dim, BigInt::from_i64(6).unwrap());
    }
}
