//! Block designs and transversal designs with brute-force verification.
//!
//! Points are canonically labeled `0..v-1` and ordered as integers. Every
//! block is stored sorted ascending and the block list is sorted
//! lexicographically, so equal designs serialize identically and everything
//! derived from a design (matrices, covers) is reproducible byte for byte.
//! Transversal designs instead keep each block ordered by group index; with
//! the contiguous group labeling used here the two orders coincide.

mod constructions;
mod fixtures;

pub use constructions::{
    construct_affine_plane_bibd, construct_inversive_plane, construct_projective_plane_bibd,
    construct_transversal_design,
};
pub use fixtures::{builtin_design, builtin_names, BuiltinDesign};

pub use crate::gf::FiniteField;

use crate::bitmat::BitMatrix;
use crate::gf::FieldError;
use itertools::Itertools;
use num_integer::binomial;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Default ceiling on the number of subsets a brute-force verification may
/// enumerate before reporting itself as skipped.
pub const DEFAULT_SUBSET_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum DesignError {
    #[error("NotPrimePower: {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("UnsupportedBlockSize: block size must be q or q+1, got k={k} with q={q}")]
    UnsupportedBlockSize { k: usize, q: u64 },
    #[error("UnknownFixture: no builtin design named {0:?}")]
    UnknownFixture(String),
    #[error(
        "NonIntegral: {lambda} * C({v}-{s}, {t}-{s}) / C({k}-{s}, {t}-{s}) is not an integer"
    )]
    NonIntegral {
        t: usize,
        v: usize,
        k: usize,
        lambda: u64,
        s: usize,
    },
    #[error("invalid design: {0}")]
    Invalid(String),
}

impl DesignError {
    fn from_field(e: FieldError) -> Self {
        match e {
            FieldError::NotPrimePower(n) => DesignError::NotPrimePower(n),
            other => DesignError::Invalid(other.to_string()),
        }
    }
}

pub(crate) fn field(n: u64) -> Result<FiniteField, DesignError> {
    FiniteField::new(n).map_err(DesignError::from_field)
}

/// A claimed (t, lambda) for a design, pending verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeclaredParams {
    pub t: usize,
    pub lambda: u64,
}

/// Admissible-parameter arithmetic for a t-(v, k, lambda) design.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: u64,
}

impl DesignParams {
    /// Blocks through any s-subset of points, `s <= t`.
    pub fn lambda_s(&self, s: usize) -> Result<u64, DesignError> {
        design_params(self.t, self.v, self.k, self.lambda, s)
    }

    /// Total block count (`lambda_0`).
    pub fn b(&self) -> Result<u64, DesignError> {
        self.lambda_s(0)
    }

    /// Replication number (`lambda_1`).
    pub fn r(&self) -> Result<u64, DesignError> {
        self.lambda_s(1)
    }
}

/// Number of blocks of a t-(v, k, lambda) design containing a fixed
/// s-subset of points: `lambda * C(v-s, t-s) / C(k-s, t-s)`. Errors if the
/// quotient is not an integer, which rules the parameter set inadmissible.
pub fn design_params(
    t: usize,
    v: usize,
    k: usize,
    lambda: u64,
    s: usize,
) -> Result<u64, DesignError> {
    if !(s <= t && t <= k && k < v) {
        return Err(DesignError::Invalid(format!(
            "need s <= t <= k < v, got s={s}, t={t}, k={k}, v={v}"
        )));
    }
    let num = lambda as u128 * binomial((v - s) as u128, (t - s) as u128);
    let den = binomial((k - s) as u128, (t - s) as u128);
    if num % den != 0 {
        return Err(DesignError::NonIntegral { t, v, k, lambda, s });
    }
    u64::try_from(num / den)
        .map_err(|_| DesignError::Invalid(format!("lambda_{s} overflows u64 for v={v}")))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DesignRepr {
    v: usize,
    k: usize,
    declared: Option<DeclaredParams>,
    blocks: Vec<Vec<usize>>,
    labels: Option<BTreeMap<usize, String>>,
}

/// A block design on points `0..v-1` with constant block size.
///
/// Blocks may repeat; consumers that need distinct blocks check separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DesignRepr", into = "DesignRepr")]
pub struct Design {
    v: usize,
    k: usize,
    blocks: Vec<Vec<usize>>,
    declared: Option<DeclaredParams>,
    labels: Option<BTreeMap<usize, String>>,
}

impl Design {
    /// Validate and canonicalize: sorts each block ascending and the block
    /// list lexicographically.
    pub fn new(
        v: usize,
        mut blocks: Vec<Vec<usize>>,
        declared: Option<DeclaredParams>,
        labels: Option<BTreeMap<usize, String>>,
    ) -> Result<Self, DesignError> {
        if v == 0 {
            return Err(DesignError::Invalid("no points".into()));
        }
        if blocks.is_empty() {
            return Err(DesignError::Invalid("no blocks".into()));
        }
        let k = blocks[0].len();
        for block in &mut blocks {
            if block.len() != k {
                return Err(DesignError::Invalid(format!(
                    "block sizes differ: {} vs {}",
                    k,
                    block.len()
                )));
            }
            block.sort_unstable();
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(DesignError::Invalid(format!(
                    "block {block:?} repeats a point"
                )));
            }
            if block.last().is_some_and(|&x| x >= v) {
                return Err(DesignError::Invalid(format!(
                    "block {block:?} exceeds point range 0..{v}"
                )));
            }
        }
        if k == 0 {
            return Err(DesignError::Invalid("empty blocks".into()));
        }
        blocks.sort();
        if let Some(d) = declared {
            if !(d.t <= k && k < v) {
                return Err(DesignError::Invalid(format!(
                    "declared t={} needs t <= k < v with k={k}, v={v}",
                    d.t
                )));
            }
            if d.lambda == 0 {
                return Err(DesignError::Invalid("declared lambda must be positive".into()));
            }
        }
        if let Some(map) = &labels {
            if map.keys().any(|&p| p >= v) {
                return Err(DesignError::Invalid("label map names a point >= v".into()));
            }
        }
        Ok(Design {
            v,
            k,
            blocks,
            declared,
            labels,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// Block size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Block count.
    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn declared(&self) -> Option<DeclaredParams> {
        self.declared
    }

    pub fn labels(&self) -> Option<&BTreeMap<usize, String>> {
        self.labels.as_ref()
    }

    /// Human name for a point: the recorded label if any, else its index.
    pub fn label_for(&self, point: usize) -> String {
        self.labels
            .as_ref()
            .and_then(|m| m.get(&point).cloned())
            .unwrap_or_else(|| point.to_string())
    }

    /// Blocks containing `point`, as indices into the block list.
    pub fn blocks_through(&self, point: usize) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.binary_search(&point).is_ok())
            .map(|(i, _)| i)
            .collect()
    }
}

impl TryFrom<DesignRepr> for Design {
    type Error = DesignError;

    fn try_from(r: DesignRepr) -> Result<Self, Self::Error> {
        let d = Design::new(r.v, r.blocks, r.declared, r.labels)?;
        if d.k != r.k {
            return Err(DesignError::Invalid(format!(
                "stated block size {} but blocks have size {}",
                r.k, d.k
            )));
        }
        Ok(d)
    }
}

impl From<Design> for DesignRepr {
    fn from(d: Design) -> Self {
        DesignRepr {
            v: d.v,
            k: d.k,
            declared: d.declared,
            blocks: d.blocks,
            labels: d.labels,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TransversalRepr {
    v: usize,
    k: usize,
    declared: Option<DeclaredParams>,
    blocks: Vec<Vec<usize>>,
    labels: Option<BTreeMap<usize, String>>,
    groups: Vec<Vec<usize>>,
}

/// A transversal design TD(k, n): k groups of n points, n^2 blocks, each
/// block meeting every group exactly once, each cross-group pair covered by
/// exactly one block. Blocks are stored ordered by group index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TransversalRepr", into = "TransversalRepr")]
pub struct TransversalDesign {
    k: usize,
    n: usize,
    groups: Vec<Vec<usize>>,
    blocks: Vec<Vec<usize>>,
    labels: Option<BTreeMap<usize, String>>,
}

impl TransversalDesign {
    pub fn new(
        k: usize,
        n: usize,
        groups: Vec<Vec<usize>>,
        blocks: Vec<Vec<usize>>,
        labels: Option<BTreeMap<usize, String>>,
    ) -> Result<Self, DesignError> {
        let v = k * n;
        if k == 0 || n == 0 {
            return Err(DesignError::Invalid("empty transversal design".into()));
        }
        if groups.len() != k {
            return Err(DesignError::Invalid(format!(
                "expected {k} groups, got {}",
                groups.len()
            )));
        }
        let mut groups = groups;
        for g in &mut groups {
            g.sort_unstable();
            if g.len() != n {
                return Err(DesignError::Invalid(format!(
                    "group {g:?} has size {} instead of {n}",
                    g.len()
                )));
            }
        }
        let mut group_of = vec![usize::MAX; v];
        for (gi, g) in groups.iter().enumerate() {
            for &p in g {
                if p >= v {
                    return Err(DesignError::Invalid(format!(
                        "group point {p} exceeds range 0..{v}"
                    )));
                }
                if group_of[p] != usize::MAX {
                    return Err(DesignError::Invalid(format!(
                        "point {p} appears in two groups"
                    )));
                }
                group_of[p] = gi;
            }
        }
        if group_of.contains(&usize::MAX) {
            return Err(DesignError::Invalid("groups do not cover all points".into()));
        }

        let mut blocks = blocks;
        for block in &mut blocks {
            if block.len() != k {
                return Err(DesignError::Invalid(format!(
                    "block {block:?} has size {} instead of {k}",
                    block.len()
                )));
            }
            block.sort_unstable_by_key(|&p| group_of[p]);
            let hit: Vec<usize> = block.iter().map(|&p| group_of[p]).collect();
            if hit != (0..k).collect::<Vec<_>>() {
                return Err(DesignError::Invalid(format!(
                    "block {block:?} does not meet every group exactly once"
                )));
            }
        }
        blocks.sort();
        if blocks.len() != n * n {
            return Err(DesignError::Invalid(format!(
                "expected {} blocks, got {}",
                n * n,
                blocks.len()
            )));
        }

        // cross-group pairs in exactly one block, within-group pairs in none
        let mut pair_count = vec![0u32; v * v];
        for block in &blocks {
            for i in 0..k {
                for j in (i + 1)..k {
                    let (a, b) = (block[i].min(block[j]), block[i].max(block[j]));
                    pair_count[a * v + b] += 1;
                }
            }
        }
        for a in 0..v {
            for b in (a + 1)..v {
                let same_group = group_of[a] == group_of[b];
                let expected = if same_group { 0 } else { 1 };
                if pair_count[a * v + b] != expected {
                    return Err(DesignError::Invalid(format!(
                        "pair ({a}, {b}) lies in {} blocks, expected {expected}",
                        pair_count[a * v + b]
                    )));
                }
            }
        }

        let mut point_count = vec![0usize; v];
        for block in &blocks {
            for &p in block {
                point_count[p] += 1;
            }
        }
        if point_count.iter().any(|&c| c != n) {
            return Err(DesignError::Invalid(format!(
                "some point does not lie in exactly {n} blocks"
            )));
        }

        if let Some(map) = &labels {
            if map.keys().any(|&p| p >= v) {
                return Err(DesignError::Invalid("label map names a point >= v".into()));
            }
        }

        Ok(TransversalDesign {
            k,
            n,
            groups,
            blocks,
            labels,
        })
    }

    /// Group count, which equals the block size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Group size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn v(&self) -> usize {
        self.k * self.n
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn labels(&self) -> Option<&BTreeMap<usize, String>> {
        self.labels.as_ref()
    }

    pub fn label_for(&self, point: usize) -> String {
        self.labels
            .as_ref()
            .and_then(|m| m.get(&point).cloned())
            .unwrap_or_else(|| point.to_string())
    }

    /// Group index of a point.
    pub fn group_of(&self, point: usize) -> usize {
        self.groups
            .iter()
            .position(|g| g.binary_search(&point).is_ok())
            .expect("point out of range")
    }

    /// Blocks containing `point`, as indices into the block list.
    pub fn blocks_through(&self, point: usize) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.contains(&point))
            .map(|(i, _)| i)
            .collect()
    }

    /// Point-by-block incidence matrix, v rows and n^2 columns.
    pub fn incidence_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.v(), self.b());
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                m.set(p, j, true);
            }
        }
        m
    }
}

impl TryFrom<TransversalRepr> for TransversalDesign {
    type Error = DesignError;

    fn try_from(r: TransversalRepr) -> Result<Self, Self::Error> {
        let n = r.groups.first().map_or(0, |g| g.len());
        let td = TransversalDesign::new(r.k, n, r.groups, r.blocks, r.labels)?;
        if td.v() != r.v {
            return Err(DesignError::Invalid(format!(
                "stated v={} but groups cover {} points",
                r.v,
                td.v()
            )));
        }
        Ok(td)
    }
}

impl From<TransversalDesign> for TransversalRepr {
    fn from(td: TransversalDesign) -> Self {
        TransversalRepr {
            v: td.v(),
            k: td.k,
            declared: None,
            blocks: td.blocks,
            labels: td.labels,
            groups: td.groups,
        }
    }
}

/// Point-by-block incidence matrix: entry (i, j) is 1 iff point i lies in
/// block j.
pub fn incidence_matrix(d: &Design) -> BitMatrix {
    let mut m = BitMatrix::zeros(d.v(), d.b());
    for (j, block) in d.blocks().iter().enumerate() {
        for &p in block {
            m.set(p, j, true);
        }
    }
    m
}

/// Replace every block by its complement in the point set. A symmetric
/// 2-(v, k, lambda) input yields a symmetric 2-(v, v-k, b-2r+lambda) output,
/// recorded in the result's declared parameters.
pub fn complement_design(d: &Design) -> Result<Design, DesignError> {
    if d.k() >= d.v() {
        return Err(DesignError::Invalid(
            "complement needs block size below point count".into(),
        ));
    }
    let blocks = d
        .blocks()
        .iter()
        .map(|block| (0..d.v()).filter(|p| block.binary_search(p).is_err()).collect())
        .collect();
    let declared = match d.declared() {
        Some(DeclaredParams { t: 2, lambda }) => {
            let params = DesignParams {
                t: 2,
                v: d.v(),
                k: d.k(),
                lambda,
            };
            match (params.b(), params.r()) {
                (Ok(b), Ok(r)) if b + lambda > 2 * r => Some(DeclaredParams {
                    t: 2,
                    lambda: b + lambda - 2 * r,
                }),
                _ => None,
            }
        }
        _ => None,
    };
    Design::new(d.v(), blocks, declared, d.labels().cloned())
}

/// All k-subsets of `0..v` in lexicographic order: the complete k-(v, k, 1)
/// design.
pub fn trivial_t_design(v: usize, k: usize) -> Result<Design, DesignError> {
    if !(0 < k && k < v) {
        return Err(DesignError::Invalid(format!(
            "need 0 < k < v, got k={k}, v={v}"
        )));
    }
    let blocks = (0..v).combinations(k).collect();
    Design::new(v, blocks, Some(DeclaredParams { t: k, lambda: 1 }), None)
}

/// First counterexample found by a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub subset: Vec<usize>,
    pub expected: u64,
    pub actual: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum VerificationOutcome {
    Passed,
    Failed(Violation),
    /// The sweep would exceed the subset budget; nothing was checked.
    Skipped { needed: u64, budget: u64 },
}

/// Measured coverage at one subset size, against the predicted value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaLevel {
    pub s: usize,
    /// None when the parameter formula is non-integral at this level.
    pub predicted: Option<u64>,
    pub measured_min: u64,
    pub measured_max: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub t: usize,
    pub lambda: u64,
    pub outcome: VerificationOutcome,
    pub b: usize,
    pub levels: Vec<LambdaLevel>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, VerificationOutcome::Passed)
    }

    /// Measured replication number if it is constant over points.
    pub fn r(&self) -> Option<u64> {
        self.levels
            .iter()
            .find(|l| l.s == 1)
            .filter(|l| l.measured_min == l.measured_max)
            .map(|l| l.measured_min)
    }
}

/// Check by exhaustion that every t-subset of points lies in exactly
/// `lambda` blocks, and that coverage at every level `s <= t` matches the
/// parameter formula. Uses the default subset budget.
pub fn verify_t_design(d: &Design, t: usize, lambda: u64) -> Result<VerificationReport, DesignError> {
    verify_t_design_budgeted(d, t, lambda, DEFAULT_SUBSET_BUDGET)
}

/// As `verify_t_design`, but reports Skipped (never a silent pass) when the
/// total subset count over all levels exceeds `budget`.
pub fn verify_t_design_budgeted(
    d: &Design,
    t: usize,
    lambda: u64,
    budget: u64,
) -> Result<VerificationReport, DesignError> {
    if t > d.k() {
        return Err(DesignError::Invalid(format!(
            "t={t} exceeds block size {}",
            d.k()
        )));
    }
    let v = d.v();
    let needed: u128 = (0..=t).map(|s| binomial(v as u128, s as u128)).sum();
    if needed > budget as u128 {
        return Ok(VerificationReport {
            t,
            lambda,
            outcome: VerificationOutcome::Skipped {
                needed: u64::try_from(needed).unwrap_or(u64::MAX),
                budget,
            },
            b: d.b(),
            levels: Vec::new(),
        });
    }

    let mut levels = Vec::with_capacity(t + 1);
    // the reported witness is the lexicographically first bad t-subset;
    // lower-level mismatches only matter when the t-level is clean
    let mut t_violation: Option<Violation> = None;
    let mut lower_violation: Option<Violation> = None;
    for s in 0..=t {
        let predicted = design_params(t, v, d.k(), lambda, s).ok();
        let mut min = u64::MAX;
        let mut max = 0u64;
        for subset in (0..v).combinations(s) {
            let count = d
                .blocks()
                .iter()
                .filter(|block| subset.iter().all(|x| block.binary_search(x).is_ok()))
                .count() as u64;
            min = min.min(count);
            max = max.max(count);
            if s == t {
                if count != lambda && t_violation.is_none() {
                    t_violation = Some(Violation {
                        subset: subset.clone(),
                        expected: lambda,
                        actual: count,
                    });
                }
            } else if let Some(e) = predicted {
                if count != e && lower_violation.is_none() {
                    lower_violation = Some(Violation {
                        subset: subset.clone(),
                        expected: e,
                        actual: count,
                    });
                }
            }
        }
        levels.push(LambdaLevel {
            s,
            predicted,
            measured_min: min,
            measured_max: max,
        });
    }

    let all_match = levels.iter().all(|l| {
        l.predicted
            .is_some_and(|p| l.measured_min == p && l.measured_max == p)
    });
    let outcome = match (all_match, t_violation.or(lower_violation)) {
        (true, _) => VerificationOutcome::Passed,
        (false, Some(w)) => VerificationOutcome::Failed(w),
        // a level had a non-integral prediction, so no witness subset exists
        (false, None) => VerificationOutcome::Failed(Violation {
            subset: Vec::new(),
            expected: 0,
            actual: 0,
        }),
    };
    Ok(VerificationReport {
        t,
        lambda,
        outcome,
        b: d.b(),
        levels,
    })
}

/// Check that every pair of distinct blocks meets in exactly `lambda`
/// points, the defining property of a symmetric design. Exhaustive over all
/// block pairs; returns the first violating pair if any.
pub fn verify_block_intersections(d: &Design, lambda: usize) -> Result<(), (usize, usize, usize)> {
    let blocks = d.blocks();
    for i in 0..blocks.len() {
        for j in (i + 1)..blocks.len() {
            let shared = blocks[i]
                .iter()
                .filter(|x| blocks[j].binary_search(x).is_ok())
                .count();
            if shared != lambda {
                return Err((i, j, shared));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> Design {
        match builtin_design("fano_7_3_1").unwrap() {
            BuiltinDesign::Block(d) => d,
            _ => unreachable!(),
        }
    }

    #[test]
    fn parameter_formula_matches_known_values() {
        assert_eq!(design_params(3, 8, 4, 1, 1).unwrap(), 7);
        assert_eq!(design_params(2, 9, 3, 1, 1).unwrap(), 4);
        assert_eq!(design_params(2, 7, 3, 1, 0).unwrap(), 7);
        // s = t always returns lambda itself
        assert_eq!(design_params(3, 20, 5, 4, 3).unwrap(), 4);
    }

    #[test]
    fn parameter_formula_rejects_inadmissible_sets() {
        // C(8,2)/C(3,2) = 28/3
        assert!(matches!(
            design_params(2, 8, 3, 1, 0),
            Err(DesignError::NonIntegral { .. })
        ));
    }

    #[test]
    fn replication_identity_holds() {
        // v * r = b * k for 2-designs
        for (v, k, lambda) in [(7, 3, 1), (9, 3, 1), (11, 5, 2), (13, 4, 1)] {
            let p = DesignParams { t: 2, v, k, lambda };
            let b = p.b().unwrap();
            let r = p.r().unwrap();
            assert_eq!(v as u64 * r, b * k as u64);
        }
    }

    #[test]
    fn blocks_are_canonicalized() {
        let d = Design::new(5, vec![vec![4, 0, 2], vec![3, 1, 0]], None, None).unwrap();
        assert_eq!(d.blocks(), &[vec![0, 1, 3], vec![0, 2, 4]]);
        assert_eq!(d.k(), 3);
    }

    #[test]
    fn invalid_blocks_are_rejected() {
        assert!(Design::new(4, vec![vec![0, 1], vec![2, 3, 1]], None, None).is_err());
        assert!(Design::new(4, vec![vec![0, 4]], None, None).is_err());
        assert!(Design::new(4, vec![vec![2, 2]], None, None).is_err());
        assert!(Design::new(4, vec![], None, None).is_err());
    }

    #[test]
    fn trivial_design_is_complete() {
        let d = trivial_t_design(4, 2).unwrap();
        assert_eq!(d.b(), 6);
        let d = trivial_t_design(6, 3).unwrap();
        assert_eq!(d.b(), 20);
        let report = verify_t_design(&d, 3, 1).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn verification_passes_on_fano() {
        let report = verify_t_design(&fano(), 2, 1).unwrap();
        assert!(report.passed());
        assert_eq!(report.b, 7);
        assert_eq!(report.r(), Some(3));
    }

    #[test]
    fn verification_fails_with_lex_first_witness() {
        let d = fano();
        // drop the lexicographically first block {0,1,6}
        let rest: Vec<Vec<usize>> = d.blocks()[1..].to_vec();
        let damaged = Design::new(7, rest, None, None).unwrap();
        let report = verify_t_design(&damaged, 2, 1).unwrap();
        match report.outcome {
            VerificationOutcome::Failed(ref w) => {
                assert_eq!(w.subset, vec![0, 1]);
                assert_eq!(w.expected, 1);
                assert_eq!(w.actual, 0);
            }
            ref other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn verification_respects_budget() {
        let d = trivial_t_design(6, 3).unwrap();
        let report = verify_t_design_budgeted(&d, 3, 1, 10).unwrap();
        match report.outcome {
            VerificationOutcome::Skipped { needed, budget } => {
                // 1 + 6 + 15 + 20 subsets across levels 0..=3
                assert_eq!(needed, 42);
                assert_eq!(budget, 10);
            }
            ref other => panic!("expected skip, got {other:?}"),
        }
    }

    #[test]
    fn incidence_round_trips_to_blocks() {
        let d = fano();
        let m = incidence_matrix(&d);
        assert_eq!(m.rows(), 7);
        assert_eq!(m.cols(), 7);
        for j in 0..m.cols() {
            assert_eq!(m.col_support(j), d.blocks()[j]);
            assert_eq!(m.col_weight(j), 3);
        }
        for i in 0..m.rows() {
            assert_eq!(m.row_weight(i), 3);
        }
    }

    #[test]
    fn complement_of_fano_is_a_biplane() {
        let c = complement_design(&fano()).unwrap();
        assert_eq!(c.k(), 4);
        assert_eq!(c.declared(), Some(DeclaredParams { t: 2, lambda: 2 }));
        let report = verify_t_design(&c, 2, 2).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(verify_block_intersections(&c, 2), Ok(()));
    }

    #[test]
    fn complement_of_single_block_is_set_complement() {
        let d = Design::new(7, vec![vec![0, 1, 6], vec![2, 3, 4]], None, None).unwrap();
        let c = complement_design(&d).unwrap();
        assert!(c.blocks().contains(&vec![2, 3, 4, 5]));
        assert!(c.blocks().contains(&vec![0, 1, 5, 6]));
    }

    #[test]
    fn complement_of_complete_pair_design_has_same_parameters() {
        let d = trivial_t_design(4, 2).unwrap();
        let base = Design::new(4, d.blocks().to_vec(), Some(DeclaredParams { t: 2, lambda: 1 }), None)
            .unwrap();
        let c = complement_design(&base).unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(c.declared(), Some(DeclaredParams { t: 2, lambda: 1 }));
        assert_eq!(c.blocks(), d.blocks());
    }

    #[test]
    fn design_json_round_trip_is_exact() {
        let d = fano();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"v":7,"k":3,"declared":{"t":2,"lambda":1},"blocks":[[0,1,6],[0,2,5],[0,3,4],[1,2,3],[1,4,5],[2,4,6],[3,5,6]],"labels":{"0":"1","1":"2","2":"3","3":"4","4":"5","5":"6","6":"7"}}"#
        );
        let back: Design = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn design_json_rejects_mismatched_block_size() {
        let json = r#"{"v":7,"k":4,"declared":null,"blocks":[[0,1,6]],"labels":null}"#;
        assert!(serde_json::from_str::<Design>(json).is_err());
    }

    #[test]
    fn trivial_design_blocks_are_label_invariant() {
        // permuting point labels maps the complete k-subset family to itself
        let d = trivial_t_design(5, 2).unwrap();
        let perm = [3, 0, 4, 1, 2];
        let mut permuted: Vec<Vec<usize>> = d
            .blocks()
            .iter()
            .map(|b| {
                let mut nb: Vec<usize> = b.iter().map(|&x| perm[x]).collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        permuted.sort();
        assert_eq!(permuted, d.blocks());
    }
}
