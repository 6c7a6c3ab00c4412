//! Exact root-system data for the simple complex Lie algebras.
//!
//! Every type is realized in an ambient rational vector space following the
//! standard coordinate conventions (orthonormal `e_i` basis; the classical
//! families in their usual realizations, `E6`/`E7` inside the `R^8`
//! realization of `E8`, `F4` in `R^4`, `G2` in the sum-zero hyperplane of
//! `R^3`). Node numbering is Bourbaki throughout, pinned by the
//! `pair(fundamental_i, simple_j) = delta_ij` tests.
//!
//! The invariant form is the ambient dot product rescaled so that inner
//! products of root-lattice elements are integers with collective gcd 1.
//! The scale is computed from the realization, not hard-coded.

use crate::error::LieError;
use crate::Result;
use num::{BigInt, BigRational, Integer, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

pub type Rat = BigRational;

fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The seven families of simple complex Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A family tag plus rank, validated on construction.
///
/// `B2` is rejected: that diagram is presented as `C2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let constraint: &'static str = match family {
            Family::A => {
                if rank >= 1 {
                    return Ok(LieType { family, rank });
                }
                "rank >= 1"
            }
            Family::B => {
                if rank == 2 {
                    return Err(LieError::B2IsC2);
                }
                if rank >= 3 {
                    return Ok(LieType { family, rank });
                }
                "rank >= 3"
            }
            Family::C => {
                if rank >= 2 {
                    return Ok(LieType { family, rank });
                }
                "rank >= 2"
            }
            Family::D => {
                if rank >= 4 {
                    return Ok(LieType { family, rank });
                }
                "rank >= 4"
            }
            Family::E => {
                if (6..=8).contains(&rank) {
                    return Ok(LieType { family, rank });
                }
                "rank in {6, 7, 8}"
            }
            Family::F => {
                if rank == 4 {
                    return Ok(LieType { family, rank });
                }
                "rank = 4"
            }
            Family::G => {
                if rank == 2 {
                    return Ok(LieType { family, rank });
                }
                "rank = 2"
            }
        };
        Err(LieError::InvalidRank {
            family: family.letter(),
            rank,
            constraint,
        })
    }

    /// Parse a spec string such as `"C3"` or `"e7"` (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(LieError::ParseType(s.to_string())),
        };
        let rest: String = chars.collect();
        let rank: usize = rest
            .parse()
            .map_err(|_| LieError::ParseType(s.to_string()))?;
        LieType::new(fam, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A vector in the ambient realization, exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVec {
    coords: Vec<Rat>,
}

impl RootVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        RootVec { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RootVec {
            coords: coords.iter().map(|&c| rat(c)).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        RootVec {
            coords: vec![Rat::zero(); dim],
        }
    }

    /// `e_i` (1-indexed) in an ambient space of the given dimension.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = RootVec::zero(dim);
        v.coords[i - 1] = Rat::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        RootVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        RootVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RootVec {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        RootVec {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    /// Plain ambient dot product (the invariant form is a rescaling of this).
    pub fn dot(&self, other: &Self) -> Rat {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// A dominant weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DominantWeight {
    coeffs: Vec<u32>,
}

impl DominantWeight {
    pub fn new(coeffs: Vec<u32>) -> Self {
        DominantWeight { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight {
            coeffs: vec![0; rank],
        }
    }

    /// `t * lambda_j` with `j` 1-indexed.
    pub fn multiple_of_fundamental(rank: usize, j: usize, t: u32) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[j - 1] = t;
        DominantWeight { coeffs }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    /// Sum of the fundamental-weight coefficients.
    pub fn height(&self) -> u32 {
        self.coeffs.iter().sum()
    }

    /// Number of nonzero coefficients.
    pub fn support(&self) -> usize {
        self.coeffs.iter().filter(|&&a| a > 0).count()
    }

    /// Image under a permutation of the nodes (`perm[i]` is the 0-indexed
    /// image of node `i`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut coeffs = vec![0; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            coeffs[perm[i]] = a;
        }
        DominantWeight { coeffs }
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, ")")
    }
}

/// All dominant weights of the given rank and exact height, in lexicographic
/// order.
pub fn weights_of_height(rank: usize, t: u32) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    let mut current = vec![0u32; rank];
    fn rec(current: &mut Vec<u32>, idx: usize, remaining: u32, out: &mut Vec<DominantWeight>) {
        if idx + 1 == current.len() {
            current[idx] = remaining;
            out.push(DominantWeight::new(current.clone()));
            return;
        }
        for a in (0..=remaining).rev() {
            current[idx] = a;
            rec(current, idx + 1, remaining - a, out);
        }
        current[idx] = 0;
    }
    if rank == 0 {
        return out;
    }
    rec(&mut current, 0, t, &mut out);
    out.sort();
    out
}

/// `C(rank + t - 1, t)`, the size of the height-`t` simplex.
pub fn simplex_size(rank: usize, t: u32) -> u128 {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..t as usize {
        num *= BigInt::from(rank + i);
        den *= BigInt::from(i + 1);
    }
    let q = num / den;
    q.to_string().parse::<u128>().unwrap_or(u128::MAX)
}

/// Fully constructed root-system data for one simple type.
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    ambient_dim: usize,
    simple_roots: Vec<RootVec>,
    positive_roots: Vec<RootVec>,
    fundamental_weights: Vec<RootVec>,
    rho: RootVec,
    highest_root: RootVec,
    highest_short_root: RootVec,
    form_scale: Rat,
    /// Expansion of each positive root in the simple roots (integers).
    root_coeffs: Vec<Vec<i64>>,
    /// `pair(fundamental_i, alpha)` for each positive root `alpha`; these are
    /// the coefficients of the coroot in the simple coroots.
    coroot_coeffs: Vec<Vec<i64>>,
    /// `pair(rho, alpha)` per positive root (the coroot height).
    rho_pairs: Vec<i64>,
    cartan: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Construct the root system for a valid type.
    pub fn build(lie_type: LieType) -> Result<RootSystem> {
        let simple_roots = simple_root_realization(lie_type);
        let ambient_dim = simple_roots[0].dim();
        let n = lie_type.rank();

        // Orbit of the simple roots under the simple reflections.
        let mut all: BTreeSet<Vec<Rat>> = BTreeSet::new();
        let mut queue: Vec<RootVec> = Vec::new();
        for r in &simple_roots {
            if all.insert(r.coords().to_vec()) {
                queue.push(r.clone());
            }
        }
        while let Some(x) = queue.pop() {
            for s in &simple_roots {
                let coef = rat(2) * x.dot(s) / s.dot(s);
                let refl = x.sub(&s.scale(&coef));
                if all.insert(refl.coords().to_vec()) {
                    queue.push(refl);
                }
            }
        }

        // Gram matrix of the simple roots, for expanding roots in the base.
        let gram: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| simple_roots[i].dot(&simple_roots[j])).collect())
            .collect();
        let gram_inv = invert(&gram)
            .ok_or_else(|| LieError::Internal("simple roots are degenerate".into()))?;

        let expand = |x: &RootVec| -> Vec<Rat> {
            let rhs: Vec<Rat> = (0..n).map(|j| x.dot(&simple_roots[j])).collect();
            (0..n)
                .map(|i| (0..n).map(|j| &gram_inv[i][j] * &rhs[j]).sum())
                .collect()
        };

        let mut positive: Vec<(Vec<i64>, RootVec)> = Vec::new();
        for coords in &all {
            let x = RootVec::new(coords.clone());
            let exp = expand(&x);
            let ints: Option<Vec<i64>> = exp
                .iter()
                .map(|c| {
                    if c.denom().is_one() {
                        to_i64(c.numer())
                    } else {
                        None
                    }
                })
                .collect();
            let ints = ints.ok_or_else(|| {
                LieError::Internal("root with non-integer simple-root coefficients".into())
            })?;
            if ints.iter().all(|&c| c >= 0) && ints.iter().any(|&c| c > 0) {
                positive.push((ints, x));
            }
        }
        // Canonical order: by height then lexicographic coefficient vector.
        positive.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| a.0.cmp(&b.0))
        });
        let root_coeffs: Vec<Vec<i64>> = positive.iter().map(|(c, _)| c.clone()).collect();
        let positive_roots: Vec<RootVec> = positive.into_iter().map(|(_, r)| r).collect();

        // Fundamental weights from the inverse of the Cartan matrix.
        let cartan_rat: Vec<Vec<Rat>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| {
                        rat(2) * simple_roots[j].dot(&simple_roots[k])
                            / simple_roots[k].dot(&simple_roots[k])
                    })
                    .collect()
            })
            .collect();
        let cartan: Vec<Vec<i64>> = cartan_rat
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| to_i64(c.numer()).expect("cartan entry fits i64"))
                    .collect()
            })
            .collect();
        let cartan_inv = invert(&cartan_rat)
            .ok_or_else(|| LieError::Internal("singular Cartan matrix".into()))?;
        let fundamental_weights: Vec<RootVec> = (0..n)
            .map(|i| {
                let mut w = RootVec::zero(ambient_dim);
                for j in 0..n {
                    w = w.add(&simple_roots[j].scale(&cartan_inv[i][j]));
                }
                w
            })
            .collect();

        // rho two ways; they must agree exactly.
        let mut rho = RootVec::zero(ambient_dim);
        for w in &fundamental_weights {
            rho = rho.add(w);
        }
        let mut half_sum = RootVec::zero(ambient_dim);
        for r in &positive_roots {
            half_sum = half_sum.add(r);
        }
        half_sum = half_sum.scale(&rat_frac(1, 2));
        if rho != half_sum {
            return Err(LieError::Internal(
                "rho differs between half-sum and fundamental-weight sum".into(),
            ));
        }

        // Highest root: unique maximal height. Highest short root: maximal
        // height among roots of minimal squared length.
        let highest_root = positive_roots
            .last()
            .cloned()
            .ok_or_else(|| LieError::Internal("no positive roots".into()))?;
        let min_len = positive_roots
            .iter()
            .map(|r| r.dot(r))
            .min()
            .expect("nonempty");
        let highest_short_root = positive_roots
            .iter().rfind(|r| r.dot(r) == min_len)
            .cloned()
            .expect("nonempty");

        // Scale making root-lattice inner products integral with gcd 1.
        let mut denom_lcm = BigInt::one();
        for a in &positive_roots {
            for b in &positive_roots {
                denom_lcm = denom_lcm.lcm(a.dot(b).denom());
            }
        }
        let mut g = BigInt::zero();
        for a in &positive_roots {
            for b in &positive_roots {
                let p = a.dot(b) * Rat::from_integer(denom_lcm.clone());
                debug_assert!(p.denom().is_one());
                g = g.gcd(p.numer());
            }
        }
        if g.is_zero() {
            return Err(LieError::Internal("degenerate form".into()));
        }
        let form_scale = Rat::new(denom_lcm, g);

        // Pairing tables for the dimension formula.
        let mut coroot_coeffs = Vec::with_capacity(positive_roots.len());
        let mut rho_pairs = Vec::with_capacity(positive_roots.len());
        for alpha in &positive_roots {
            let len2 = alpha.dot(alpha);
            let mut row = Vec::with_capacity(n);
            for w in &fundamental_weights {
                let p = rat(2) * w.dot(alpha) / len2.clone();
                let v = if p.denom().is_one() {
                    to_i64(p.numer())
                } else {
                    None
                };
                row.push(v.ok_or_else(|| {
                    LieError::Internal("non-integer weight/coroot pairing".into())
                })?);
            }
            rho_pairs.push(row.iter().sum());
            coroot_coeffs.push(row);
        }

        Ok(RootSystem {
            lie_type,
            ambient_dim,
            simple_roots,
            positive_roots,
            fundamental_weights,
            rho,
            highest_root,
            highest_short_root,
            form_scale,
            root_coeffs,
            coroot_coeffs,
            rho_pairs,
            cartan,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[RootVec] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive_roots
    }

    pub fn fundamental_weights(&self) -> &[RootVec] {
        &self.fundamental_weights
    }

    pub fn rho(&self) -> &RootVec {
        &self.rho
    }

    pub fn highest_root(&self) -> &RootVec {
        &self.highest_root
    }

    pub fn highest_short_root(&self) -> &RootVec {
        &self.highest_short_root
    }

    pub fn form_scale(&self) -> &Rat {
        &self.form_scale
    }

    /// The form scale of the family at generic rank (2 for F4, 1 otherwise).
    ///
    /// For A1 and C2 the computed gcd scale degenerates to 1/2 because every
    /// pairwise product happens to be even; bound formulas stay on the
    /// generic-rank normalization for continuity across a family.
    pub fn family_form_scale(&self) -> Rat {
        match self.lie_type.family() {
            Family::F => rat(2),
            _ => rat(1),
        }
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Simple-root coefficients of the `k`-th positive root.
    pub fn root_coeffs(&self, k: usize) -> &[i64] {
        &self.root_coeffs[k]
    }

    /// `pair(fundamental_i, alpha_k)` table row for the `k`-th positive root.
    pub fn coroot_coeffs(&self, k: usize) -> &[i64] {
        &self.coroot_coeffs[k]
    }

    /// `pair(rho, alpha_k)` for the `k`-th positive root.
    pub fn rho_pair(&self, k: usize) -> i64 {
        self.rho_pairs[k]
    }

    /// The normalized invariant bilinear form.
    pub fn inner(&self, x: &RootVec, y: &RootVec) -> Result<Rat> {
        if x.dim() != y.dim() || x.dim() != self.ambient_dim {
            return Err(LieError::DimensionMismatch(x.dim(), y.dim()));
        }
        Ok(x.dot(y) * self.form_scale.clone())
    }

    /// `pair(x, alpha) = 2 (x, alpha) / (alpha, alpha)`; independent of the
    /// form scale.
    pub fn pair(&self, x: &RootVec, alpha: &RootVec) -> Result<Rat> {
        if x.dim() != alpha.dim() || x.dim() != self.ambient_dim {
            return Err(LieError::DimensionMismatch(x.dim(), alpha.dim()));
        }
        if alpha.is_zero() {
            return Err(LieError::ZeroAlpha);
        }
        Ok(rat(2) * x.dot(alpha) / alpha.dot(alpha))
    }

    /// Ambient vector of a dominant weight.
    pub fn weight_vector(&self, w: &DominantWeight) -> Result<RootVec> {
        if w.len() != self.rank() {
            return Err(LieError::WeightLength {
                got: w.len(),
                rank: self.rank(),
            });
        }
        let mut v = RootVec::zero(self.ambient_dim);
        for (i, &a) in w.coeffs().iter().enumerate() {
            if a > 0 {
                v = v.add(&self.fundamental_weights[i].scale(&rat(a as i64)));
            }
        }
        Ok(v)
    }

    /// Indices of the positive roots whose expansion involves node `j`
    /// (1-indexed): the roots of the nilradical of the `j`-th maximal
    /// parabolic.
    pub fn nilradical_indices(&self, j: usize) -> Result<Vec<usize>> {
        if j == 0 || j > self.rank() {
            return Err(LieError::NodeOutOfRange {
                node: j,
                rank: self.rank(),
            });
        }
        Ok((0..self.positive_roots.len())
            .filter(|&k| self.root_coeffs[k][j - 1] != 0)
            .collect())
    }

    /// The nilradical roots themselves.
    pub fn nilradical_roots(&self, j: usize) -> Result<Vec<RootVec>> {
        Ok(self
            .nilradical_indices(j)?
            .into_iter()
            .map(|k| self.positive_roots[k].clone())
            .collect())
    }

    /// Index of a root in the canonical positive-root list.
    pub fn root_index(&self, r: &RootVec) -> Option<usize> {
        self.positive_roots.iter().position(|x| x == r)
    }

    /// Node permutations generating the full diagram automorphism group,
    /// returned as the complete group (including the identity).
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        diagram_automorphisms(self.lie_type)
    }

    /// Partition of the nodes (1-indexed) into diagram-automorphism orbits.
    pub fn diagram_automorphism_orbits(&self) -> Vec<BTreeSet<usize>> {
        let n = self.rank();
        let autos = self.diagram_automorphisms();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut orbit = BTreeSet::new();
            for p in &autos {
                orbit.insert(p[i] + 1);
                seen[p[i]] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Orbit of a dominant weight under the diagram automorphisms, sorted.
    pub fn weight_orbit(&self, w: &DominantWeight) -> Vec<DominantWeight> {
        weight_orbit_of_type(self.lie_type, w)
    }

    /// The involution on nodes induced by duality of modules
    /// (identity when every module is self-dual).
    pub fn duality_involution(&self) -> Vec<usize> {
        let n = self.rank();
        let id: Vec<usize> = (0..n).collect();
        match self.lie_type.family() {
            Family::A => (0..n).rev().collect(),
            Family::D if n % 2 == 1 => {
                let mut p = id;
                p.swap(n - 2, n - 1);
                p
            }
            Family::E if n == 6 => vec![5, 1, 4, 3, 2, 0],
            _ => id,
        }
    }
}

fn to_i64(b: &BigInt) -> Option<i64> {
    let s = b.to_string();
    s.parse::<i64>().ok()
}

/// Gaussian elimination inverse over the rationals.
fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] = &a[r][j] - t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] = &inv[r][j] - t;
                }
            }
        }
    }
    Some(inv)
}

/// Simple roots in the standard ambient realization, Bourbaki numbering.
fn simple_root_realization(lt: LieType) -> Vec<RootVec> {
    let n = lt.rank();
    match lt.family() {
        Family::A => {
            let dim = n + 1;
            (1..=n)
                .map(|i| RootVec::basis(dim, i).sub(&RootVec::basis(dim, i + 1)))
                .collect()
        }
        Family::B => {
            let mut v: Vec<RootVec> = (1..n)
                .map(|i| RootVec::basis(n, i).sub(&RootVec::basis(n, i + 1)))
                .collect();
            v.push(RootVec::basis(n, n));
            v
        }
        Family::C => {
            let mut v: Vec<RootVec> = (1..n)
                .map(|i| RootVec::basis(n, i).sub(&RootVec::basis(n, i + 1)))
                .collect();
            v.push(RootVec::basis(n, n).scale(&rat(2)));
            v
        }
        Family::D => {
            let mut v: Vec<RootVec> = (1..n)
                .map(|i| RootVec::basis(n, i).sub(&RootVec::basis(n, i + 1)))
                .collect();
            v.push(RootVec::basis(n, n - 1).add(&RootVec::basis(n, n)));
            v
        }
        Family::E => {
            // Realized inside R^8 for ranks 6, 7, 8.
            let dim = 8;
            let mut alpha1 = RootVec::zero(dim);
            alpha1.coords[0] = rat_frac(1, 2);
            alpha1.coords[7] = rat_frac(1, 2);
            for k in 1..7 {
                alpha1.coords[k] = rat_frac(-1, 2);
            }
            let alpha2 = RootVec::basis(dim, 1).add(&RootVec::basis(dim, 2));
            let mut v = vec![alpha1, alpha2];
            for i in 3..=n {
                // alpha_i = e_{i-1} - e_{i-2}
                v.push(RootVec::basis(dim, i - 1).sub(&RootVec::basis(dim, i - 2)));
            }
            v
        }
        Family::F => vec![
            RootVec::basis(4, 2).sub(&RootVec::basis(4, 3)),
            RootVec::basis(4, 3).sub(&RootVec::basis(4, 4)),
            RootVec::basis(4, 4),
            RootVec::new(vec![
                rat_frac(1, 2),
                rat_frac(-1, 2),
                rat_frac(-1, 2),
                rat_frac(-1, 2),
            ]),
        ],
        Family::G => vec![
            RootVec::from_i64(&[1, -1, 0]),
            RootVec::from_i64(&[-2, 1, 1]),
        ],
    }
}

/// Orbit of a dominant weight under the diagram automorphisms of a type,
/// sorted; needs no root-system construction.
pub fn weight_orbit_of_type(lt: LieType, w: &DominantWeight) -> Vec<DominantWeight> {
    let mut set: BTreeSet<DominantWeight> = BTreeSet::new();
    for p in diagram_automorphisms(lt) {
        set.insert(w.permuted(&p));
    }
    set.into_iter().collect()
}

/// The full diagram automorphism group as node permutations (0-indexed).
fn diagram_automorphisms(lt: LieType) -> Vec<Vec<usize>> {
    let n = lt.rank();
    let id: Vec<usize> = (0..n).collect();
    match lt.family() {
        Family::A if n >= 2 => vec![id.clone(), (0..n).rev().collect()],
        Family::D if n == 4 => {
            // S3 on nodes {1, 3, 4}, node 2 fixed (0-indexed {0, 2, 3}).
            let perms3: [[usize; 3]; 6] = [
                [0, 2, 3],
                [0, 3, 2],
                [2, 0, 3],
                [2, 3, 0],
                [3, 0, 2],
                [3, 2, 0],
            ];
            perms3
                .iter()
                .map(|p| vec![p[0], 1, p[1], p[2]])
                .collect()
        }
        Family::D => {
            let mut sw = id.clone();
            sw.swap(n - 2, n - 1);
            vec![id, sw]
        }
        Family::E if n == 6 => vec![id, vec![5, 1, 4, 3, 2, 0]],
        _ => vec![id],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn all_types_up_to(max_classical: usize) -> Vec<LieType> {
        let mut v = Vec::new();
        for n in 1..=max_classical {
            v.push(LieType::new(Family::A, n).unwrap());
        }
        for n in 3..=max_classical {
            v.push(LieType::new(Family::B, n).unwrap());
        }
        for n in 2..=max_classical {
            v.push(LieType::new(Family::C, n).unwrap());
        }
        for n in 4..=max_classical {
            v.push(LieType::new(Family::D, n).unwrap());
        }
        for n in 6..=8 {
            v.push(LieType::new(Family::E, n).unwrap());
        }
        v.push(LieType::new(Family::F, 4).unwrap());
        v.push(LieType::new(Family::G, 2).unwrap());
        v
    }

    #[test]
    fn rank_validation() {
        assert!(LieType::new(Family::B, 2).is_err());
        assert!(matches!(LieType::new(Family::B, 2), Err(LieError::B2IsC2)));
        assert!(LieType::new(Family::D, 3).is_err());
        assert!(LieType::new(Family::E, 5).is_err());
        assert!(LieType::new(Family::F, 3).is_err());
        assert!(LieType::new(Family::G, 3).is_err());
        assert!(LieType::new(Family::A, 1).is_ok());
        assert!(LieType::parse("c3").is_ok());
        assert!(LieType::parse("E7").is_ok());
        assert!(LieType::parse("H3").is_err());
        assert!(LieType::parse("B2").is_err());
    }

    #[test]
    fn positive_root_counts() {
        let expect = |lt: &str, count: usize| {
            let rs = RootSystem::build(LieType::parse(lt).unwrap()).unwrap();
            assert_eq!(rs.positive_roots().len(), count, "count for {lt}");
        };
        expect("A5", 15); // n(n+1)/2
        expect("B4", 16); // n^2
        expect("C4", 16); // n^2
        expect("D5", 20); // n(n-1)
        expect("E6", 36);
        expect("E7", 63);
        expect("E8", 120);
        expect("F4", 24);
        expect("G2", 6);
    }

    #[test]
    fn fundamental_pairings_are_kronecker_delta() {
        for lt in all_types_up_to(6) {
            let rs = RootSystem::build(lt).unwrap();
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    let p = rs
                        .pair(&rs.fundamental_weights()[i], &rs.simple_roots()[j])
                        .unwrap();
                    let want = if i == j { Rat::one() } else { Rat::zero() };
                    assert_eq!(p, want, "{lt} pair(w{}, a{})", i + 1, j + 1);
                }
            }
        }
    }

    #[test]
    fn rho_pairs_equal_coroot_heights() {
        for lt in all_types_up_to(6) {
            let rs = RootSystem::build(lt).unwrap();
            for k in 0..rs.positive_roots().len() {
                let alpha = &rs.positive_roots()[k];
                let p = rs.pair(rs.rho(), alpha).unwrap();
                // pair(rho, alpha) equals the height of the coroot, which is
                // the sum of the coroot coefficients.
                let coheight: i64 = rs.coroot_coeffs(k).iter().sum();
                assert_eq!(p, Rat::from_i64(coheight).unwrap());
                assert_eq!(rs.rho_pair(k), coheight);
                // and pair(rho, simple root) = 1
            }
            for a in rs.simple_roots() {
                assert_eq!(rs.pair(rs.rho(), a).unwrap(), Rat::one());
            }
        }
    }

    #[test]
    fn form_scale_values() {
        // F4 needs doubling to clear the half-integer products. A1 and C2
        // degenerate: every pairwise product is even there, so the computed
        // gcd scale halves; the family normalization stays at 1.
        for lt in all_types_up_to(5) {
            let rs = RootSystem::build(lt).unwrap();
            let degenerate = (lt.family() == Family::A && lt.rank() == 1)
                || (lt.family() == Family::C && lt.rank() == 2);
            let want = if lt.family() == Family::F {
                rat(2)
            } else if degenerate {
                rat_frac(1, 2)
            } else {
                rat(1)
            };
            assert_eq!(*rs.form_scale(), want, "scale for {lt}");
            let fam_want = if lt.family() == Family::F { rat(2) } else { rat(1) };
            assert_eq!(rs.family_form_scale(), fam_want, "family scale for {lt}");
        }
    }

    #[test]
    fn root_lattice_inner_products_integral_with_gcd_one() {
        for lt in all_types_up_to(5) {
            let rs = RootSystem::build(lt).unwrap();
            let mut g = BigInt::zero();
            for a in rs.positive_roots() {
                for b in rs.positive_roots() {
                    let p = rs.inner(a, b).unwrap();
                    assert!(p.denom().is_one(), "{lt}: non-integral ({a:?},{b:?})");
                    g = g.gcd(p.numer());
                }
            }
            assert_eq!(g, BigInt::one(), "gcd for {lt}");
        }
    }

    #[test]
    fn weight_lattice_doubled_pairings() {
        // Under the family normalization, (lambda, 2 alpha) is an integer for
        // every fundamental weight and positive root, and even unless the
        // family is B.
        for lt in all_types_up_to(5) {
            let rs = RootSystem::build(lt).unwrap();
            let fam = rs.family_form_scale();
            for w in rs.fundamental_weights() {
                for a in rs.positive_roots() {
                    let p = w.dot(&a.scale(&rat(2))) * fam.clone();
                    assert!(p.denom().is_one(), "{lt}");
                    if lt.family() != Family::B {
                        assert!(p.numer().is_even(), "{lt}: (w, 2a) = {p} odd");
                    }
                }
            }
        }
    }

    #[test]
    fn rho_inner_highest_root_per_family() {
        let check = |s: &str, want: i64| {
            let rs = RootSystem::build(LieType::parse(s).unwrap()).unwrap();
            let p = rs.inner(rs.rho(), rs.highest_root()).unwrap();
            assert_eq!(p, rat(want), "(rho, highest) for {s}");
        };
        check("A4", 4); // n
        check("B5", 8); // 2n - 2
        check("C5", 10); // 2n
        check("D6", 9); // 2n - 3
        check("E6", 11);
        check("E7", 17);
        check("E8", 29);
        check("F4", 16); // scaled form
        check("G2", 9);
    }

    #[test]
    fn rho_inner_highest_short_root() {
        // The doubled short root drives the type-B bound; for F4 and G2 the
        // short root itself is the relevant functional.
        let b5 = RootSystem::build(LieType::parse("B5").unwrap()).unwrap();
        let two_beta = b5.highest_short_root().scale(&rat(2));
        assert_eq!(b5.inner(b5.rho(), &two_beta).unwrap(), rat(9)); // 2n - 1
        let f4 = RootSystem::build(LieType::parse("F4").unwrap()).unwrap();
        assert_eq!(f4.inner(f4.rho(), f4.highest_short_root()).unwrap(), rat(11));
        let g2 = RootSystem::build(LieType::parse("G2").unwrap()).unwrap();
        assert_eq!(g2.inner(g2.rho(), g2.highest_short_root()).unwrap(), rat(5));
    }

    #[test]
    fn c_family_rho_coordinates() {
        // rho = n e_1 + (n-1) e_2 + ... + e_n for C_n.
        let rs = RootSystem::build(LieType::parse("C4").unwrap()).unwrap();
        let want = RootVec::from_i64(&[4, 3, 2, 1]);
        assert_eq!(*rs.rho(), want);
        // and exactly one positive root for A1 with rho = lambda_1
        let a1 = RootSystem::build(LieType::parse("A1").unwrap()).unwrap();
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(*a1.rho(), a1.fundamental_weights()[0]);
    }

    #[test]
    fn a_family_weights_are_trace_zero_representatives() {
        let rs = RootSystem::build(LieType::parse("A3").unwrap()).unwrap();
        // lambda_2 = e_1 + e_2 - (2/4) (e_1 + ... + e_4)
        let w = &rs.fundamental_weights()[1];
        let half = rat_frac(1, 2);
        let want = RootVec::new(vec![
            rat(1) - half.clone(),
            rat(1) - half.clone(),
            -half.clone(),
            -half,
        ]);
        assert_eq!(*w, want);
        let total: Rat = w.coords().iter().cloned().sum();
        assert!(total.is_zero());
    }

    #[test]
    fn b_family_short_root_pairing_is_two() {
        // pair(lambda_1, e_1) = 2 in type B.
        let rs = RootSystem::build(LieType::parse("B4").unwrap()).unwrap();
        let e1 = RootVec::from_i64(&[1, 0, 0, 0]);
        let p = rs.pair(&rs.fundamental_weights()[0], &e1).unwrap();
        assert_eq!(p, rat(2));
    }

    #[test]
    fn simply_laced_pair_equals_inner() {
        for s in ["A4", "D5", "E6"] {
            let rs = RootSystem::build(LieType::parse(s).unwrap()).unwrap();
            for a in rs.positive_roots() {
                let x = &rs.fundamental_weights()[0];
                assert_eq!(rs.pair(x, a).unwrap(), rs.inner(x, a).unwrap(), "{s}");
            }
        }
    }

    #[test]
    fn nilradical_sizes() {
        let dim_u = |s: &str, j: usize| {
            let rs = RootSystem::build(LieType::parse(s).unwrap()).unwrap();
            rs.nilradical_roots(j).unwrap().len()
        };
        assert_eq!(dim_u("A5", 1), 5); // n
        assert_eq!(dim_u("C5", 1), 9); // 2n - 1
        assert_eq!(dim_u("B5", 1), 9); // 2n - 1
        assert_eq!(dim_u("D5", 1), 8); // 2n - 2
        assert_eq!(dim_u("G2", 1), 5);
        assert_eq!(dim_u("F4", 4), 15);
        assert_eq!(dim_u("E6", 1), 16);
        assert_eq!(dim_u("E7", 7), 27);
        assert_eq!(dim_u("E8", 8), 57);
        let rs = RootSystem::build(LieType::parse("A3").unwrap()).unwrap();
        assert!(rs.nilradical_roots(0).is_err());
        assert!(rs.nilradical_roots(4).is_err());
    }

    #[test]
    fn diagram_automorphism_orbits_match_known_groups() {
        let orbits = |s: &str| {
            let rs = RootSystem::build(LieType::parse(s).unwrap()).unwrap();
            rs.diagram_automorphism_orbits()
        };
        let d4 = orbits("D4");
        assert!(d4.contains(&BTreeSet::from([1, 3, 4])));
        assert!(d4.contains(&BTreeSet::from([2])));
        let e6 = orbits("E6");
        assert!(e6.contains(&BTreeSet::from([1, 6])));
        assert!(e6.contains(&BTreeSet::from([3, 5])));
        assert!(e6.contains(&BTreeSet::from([2])));
        assert!(e6.contains(&BTreeSet::from([4])));
        let f4 = orbits("F4");
        assert_eq!(f4.len(), 4);
        assert!(f4.iter().all(|o| o.len() == 1));
        // automorphism group orders
        let count = |s: &str| {
            RootSystem::build(LieType::parse(s).unwrap())
                .unwrap()
                .diagram_automorphisms()
                .len()
        };
        assert_eq!(count("D4"), 6);
        assert_eq!(count("A5"), 2);
        assert_eq!(count("D6"), 2);
        assert_eq!(count("E6"), 2);
        assert_eq!(count("E7"), 1);
        assert_eq!(count("B6"), 1);
    }

    #[test]
    fn automorphisms_preserve_cartan_matrix() {
        for s in ["A5", "D4", "D6", "E6"] {
            let rs = RootSystem::build(LieType::parse(s).unwrap()).unwrap();
            let c = rs.cartan_matrix();
            for p in rs.diagram_automorphisms() {
                for i in 0..rs.rank() {
                    for j in 0..rs.rank() {
                        assert_eq!(c[i][j], c[p[i]][p[j]], "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn cartan_matrices_for_short_long_types() {
        let g2 = RootSystem::build(LieType::parse("G2").unwrap()).unwrap();
        assert_eq!(g2.cartan_matrix(), &[vec![2, -1], vec![-3, 2]]);
        let f4 = RootSystem::build(LieType::parse("F4").unwrap()).unwrap();
        assert_eq!(
            f4.cartan_matrix(),
            &[
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
        let b3 = RootSystem::build(LieType::parse("B3").unwrap()).unwrap();
        assert_eq!(
            b3.cartan_matrix(),
            &[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        let c3 = RootSystem::build(LieType::parse("C3").unwrap()).unwrap();
        assert_eq!(
            c3.cartan_matrix(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
    }

    #[test]
    fn pair_is_scale_invariant() {
        // pair computed from the raw dot product agrees with pair computed
        // from any rescaling of it.
        let rs = RootSystem::build(LieType::parse("F4").unwrap()).unwrap();
        let x = &rs.fundamental_weights()[2];
        for a in rs.positive_roots() {
            let raw = rat(2) * x.dot(a) / a.dot(a);
            let doubled = rat(2) * (x.dot(a) * rat(2)) / (a.dot(a) * rat(2));
            assert_eq!(raw, doubled);
            assert_eq!(rs.pair(x, a).unwrap(), raw);
        }
    }

    #[test]
    fn pair_rejects_zero_and_mismatched_dimensions() {
        let rs = RootSystem::build(LieType::parse("A2").unwrap()).unwrap();
        let z = RootVec::zero(3);
        assert!(matches!(
            rs.pair(&rs.rho().clone(), &z),
            Err(LieError::ZeroAlpha)
        ));
        let bad = RootVec::zero(5);
        assert!(rs.inner(rs.rho(), &bad).is_err());
    }

    #[test]
    fn weight_enumeration_is_lexicographic_and_complete() {
        let w = weights_of_height(3, 2);
        assert_eq!(w.len(), simplex_size(3, 2) as usize);
        assert_eq!(w.len(), 6);
        let mut sorted = w.clone();
        sorted.sort();
        assert_eq!(w, sorted);
        assert!(w.iter().all(|x| x.height() == 2));
    }

    #[test]
    fn weight_heights() {
        assert_eq!(DominantWeight::zero(4).height(), 0);
        assert_eq!(DominantWeight::new(vec![1, 0, 0, 1]).height(), 2);
        assert_eq!(DominantWeight::new(vec![0, 0, 3]).height(), 3);
    }

    #[test]
    fn duality_involutions() {
        let rs = RootSystem::build(LieType::parse("A4").unwrap()).unwrap();
        assert_eq!(rs.duality_involution(), vec![3, 2, 1, 0]);
        let rs = RootSystem::build(LieType::parse("D5").unwrap()).unwrap();
        assert_eq!(rs.duality_involution(), vec![0, 1, 2, 4, 3]);
        let rs = RootSystem::build(LieType::parse("D6").unwrap()).unwrap();
        assert_eq!(rs.duality_involution(), (0..6).collect::<Vec<_>>());
        let rs = RootSystem::build(LieType::parse("E6").unwrap()).unwrap();
        assert_eq!(rs.duality_involution(), vec![5, 1, 4, 3, 2, 0]);
        let rs = RootSystem::build(LieType::parse("E7").unwrap()).unwrap();
        assert_eq!(rs.duality_involution(), (0..7).collect::<Vec<_>>());
    }
}
