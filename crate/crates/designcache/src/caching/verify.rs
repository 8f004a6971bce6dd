//! Brute-force cover verification.

use super::{CachingMatrix, Cover};
use serde::Serialize;

/// Why a submatrix fails the permuted-identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SubmatrixFault {
    PivotOutOfRange { row: usize, col: usize },
    RepeatedRow { row: usize },
    RepeatedCol { col: usize },
    PivotNotOne { row: usize, col: usize },
    OffPivotOne { row: usize, col: usize },
}

/// First failing submatrix, located by submatrix index and pivot index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadSubmatrix {
    pub submatrix: usize,
    pub pivot: usize,
    pub fault: SubmatrixFault,
}

/// Everything the exhaustive check learned about a (matrix, cover) pair.
/// The cover is valid iff every submatrix is a permuted identity and no
/// 1-entry of the matrix is left uncovered. Overlaps do not invalidate a
/// cover; they are only counted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub is_valid_cover: bool,
    pub bad_submatrix: Option<BadSubmatrix>,
    pub uncovered_ones: usize,
    /// Row-major first uncovered 1-entry, if any.
    pub first_uncovered: Option<(usize, usize)>,
    /// 1-entries covered by more than one submatrix.
    pub overlap_count: usize,
    pub ones_total: usize,
    /// Distinct 1-entries covered at least once.
    pub ones_covered: usize,
}

/// Check every submatrix invariant and every 1-entry's coverage count.
/// Witnesses are deterministic: the first bad submatrix in (submatrix,
/// pivot) order and the row-major first uncovered 1-entry.
pub fn verify_cover(matrix: &CachingMatrix, cover: &Cover) -> CoverReport {
    let k = matrix.k();
    let f = matrix.f();
    let mut bad: Option<BadSubmatrix> = None;
    let mut coverage = vec![0u32; k * f];

    for (si, sub) in cover.submatrices.iter().enumerate() {
        if bad.is_none() {
            bad = check_submatrix(matrix, si, &sub.pivots);
        }
        for &(r, c) in &sub.pivots {
            if r < k && c < f {
                coverage[r * f + c] += 1;
            }
        }
    }

    let mut uncovered_ones = 0;
    let mut first_uncovered = None;
    let mut overlap_count = 0;
    let mut ones_total = 0;
    let mut ones_covered = 0;
    for r in 0..k {
        for c in 0..f {
            if !matrix.get(r, c) {
                continue;
            }
            ones_total += 1;
            match coverage[r * f + c] {
                0 => {
                    uncovered_ones += 1;
                    if first_uncovered.is_none() {
                        first_uncovered = Some((r, c));
                    }
                }
                1 => ones_covered += 1,
                _ => {
                    ones_covered += 1;
                    overlap_count += 1;
                }
            }
        }
    }

    CoverReport {
        is_valid_cover: bad.is_none() && uncovered_ones == 0,
        bad_submatrix: bad,
        uncovered_ones,
        first_uncovered,
        overlap_count,
        ones_total,
        ones_covered,
    }
}

fn check_submatrix(
    matrix: &CachingMatrix,
    si: usize,
    pivots: &[(usize, usize)],
) -> Option<BadSubmatrix> {
    let fail = |pivot, fault| Some(BadSubmatrix { submatrix: si, pivot, fault });
    for (pi, &(r, c)) in pivots.iter().enumerate() {
        if r >= matrix.k() || c >= matrix.f() {
            return fail(pi, SubmatrixFault::PivotOutOfRange { row: r, col: c });
        }
        if pivots[..pi].iter().any(|&(r2, _)| r2 == r) {
            return fail(pi, SubmatrixFault::RepeatedRow { row: r });
        }
        if pivots[..pi].iter().any(|&(_, c2)| c2 == c) {
            return fail(pi, SubmatrixFault::RepeatedCol { col: c });
        }
        if !matrix.get(r, c) {
            return fail(pi, SubmatrixFault::PivotNotOne { row: r, col: c });
        }
    }
    // off-pivot cells in pivot rows and pivot columns must all be 0
    for (pi, &(r, _)) in pivots.iter().enumerate() {
        for &(_, c2) in pivots.iter().filter(|&&(r2, _)| r2 != r) {
            if matrix.get(r, c2) {
                return fail(pi, SubmatrixFault::OffPivotOne { row: r, col: c2 });
            }
        }
    }
    None
}
