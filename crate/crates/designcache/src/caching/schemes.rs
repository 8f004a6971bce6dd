//! The five scheme constructors: caching matrix plus identity-submatrix
//! cover for each supported design family.
//!
//! Each cover builder enumerates submatrices in a fixed canonical order and
//! sorts pivots by ascending column, so repeated runs produce identical
//! covers. Position indices inside a block are 0-based over the sorted
//! block, and successor means the next position cyclically.

use super::{CachingMatrix, Cover, IdentitySubmatrix, Label, SchemeError};
use crate::bitmat::BitMatrix;
use crate::designs::{verify_t_design, Design, TransversalDesign, VerificationOutcome};
use itertools::Itertools;
use std::collections::HashMap;

fn require_design(d: &Design, t: usize, lambda: u64) -> Result<(), String> {
    match verify_t_design(d, t, lambda) {
        Ok(report) => match report.outcome {
            VerificationOutcome::Passed => Ok(()),
            VerificationOutcome::Failed(w) => Err(format!(
                "point set {:?} lies in {} blocks, expected {}",
                w.subset, w.actual, w.expected
            )),
            VerificationOutcome::Skipped { needed, budget } => Err(format!(
                "verification needs {needed} subsets, over the budget of {budget}; cannot certify"
            )),
        },
        Err(e) => Err(e.to_string()),
    }
}

/// Incidence matrix of a (v, k, 1) design read as a caching matrix: point
/// rows, block columns, row weight r.
pub fn bibd_caching_matrix(d: &Design) -> Result<CachingMatrix, SchemeError> {
    require_design(d, 2, 1).map_err(SchemeError::NotBibd)?;
    let rows = (0..d.v()).map(Label::Point).collect();
    let cols = (0..d.b()).map(Label::Block).collect();
    CachingMatrix::new(rows, cols, crate::designs::incidence_matrix(d))
}

/// One submatrix per point x: its columns are the r blocks through x, and
/// the row paired with each block is the cyclic successor of x inside that
/// block. Any two blocks through x share no other point, which is exactly
/// the identity property.
pub fn bibd_cover(d: &Design, matrix: &CachingMatrix) -> Cover {
    assert_eq!(matrix.k(), d.v(), "matrix was built from another design");
    assert_eq!(matrix.f(), d.b(), "matrix was built from another design");
    let k = d.k();
    let submatrices = (0..d.v())
        .map(|x| {
            let pivots = d
                .blocks_through(x)
                .into_iter()
                .map(|bi| {
                    let block = &d.blocks()[bi];
                    let j = block.binary_search(&x).expect("x in its own block");
                    (block[(j + 1) % k], bi)
                })
                .collect();
            IdentitySubmatrix::new(pivots)
        })
        .collect();
    Cover { submatrices }
}

/// Caching matrix of a symmetric (v, k, 2) design with distinct blocks:
/// point rows against (block, point) columns, where column (B, j) marks
/// every point of B except j itself.
pub fn symm_caching_matrix(d: &Design) -> Result<CachingMatrix, SchemeError> {
    if d.b() != d.v() {
        return Err(SchemeError::NotSymmetric { v: d.v(), b: d.b() });
    }
    for i in 0..d.b() {
        for j in (i + 1)..d.b() {
            if d.blocks()[i] == d.blocks()[j] {
                return Err(SchemeError::RepeatedBlocks(i, j));
            }
        }
    }
    require_design(d, 2, 2).map_err(SchemeError::NotLambda2)?;

    let k = d.k();
    let rows: Vec<Label> = (0..d.v()).map(Label::Point).collect();
    let mut cols = Vec::with_capacity(d.b() * k);
    let mut bits = BitMatrix::zeros(d.v(), d.b() * k);
    for (bi, block) in d.blocks().iter().enumerate() {
        for (pos, &j) in block.iter().enumerate() {
            let col = bi * k + pos;
            cols.push(Label::Pair { block: bi, point: j });
            for &i in block {
                if i != j {
                    bits.set(i, col, true);
                }
            }
        }
    }
    CachingMatrix::new(rows, cols, bits)
}

/// One submatrix per (point i, block B) with i in B: its columns are the
/// k-1 other blocks through i, and the row paired with column (B', i) is
/// the second point of the two-point intersection of B and B'. Every block
/// pair of a symmetric lambda=2 design meets in exactly two points, so the
/// paired row exists and is unique.
pub fn symm_cover(d: &Design, matrix: &CachingMatrix) -> Cover {
    let k = d.k();
    assert_eq!(matrix.k(), d.v(), "matrix was built from another design");
    assert_eq!(matrix.f(), d.b() * k, "matrix was built from another design");
    let mut submatrices = Vec::with_capacity(d.b() * k);
    for (bi, block) in d.blocks().iter().enumerate() {
        for &i in block {
            let mut pivots = Vec::with_capacity(k - 1);
            for b2 in d.blocks_through(i) {
                if b2 == bi {
                    continue;
                }
                let other = &d.blocks()[b2];
                let x = block
                    .iter()
                    .find(|&&p| p != i && other.binary_search(&p).is_ok())
                    .copied()
                    .expect("blocks meet in two points");
                let pos = other.binary_search(&i).expect("i in block");
                pivots.push((x, b2 * k + pos));
            }
            submatrices.push(IdentitySubmatrix::new(pivots));
        }
    }
    Cover { submatrices }
}

/// First Steiner scheme matrix: rows are all (t-1)-subsets of points in
/// lexicographic order, columns are (point, block) pairs ordered
/// block-major, and entry (D, (y, B)) is 1 iff y completes D to a t-subset
/// inside B.
pub fn t1_caching_matrix(d: &Design, t: usize) -> Result<CachingMatrix, SchemeError> {
    require_design(d, t, 1).map_err(SchemeError::NotSteiner)?;
    let v = d.v();
    let k = d.k();
    let row_subsets: Vec<Vec<usize>> = (0..v).combinations(t - 1).collect();
    let rank: HashMap<&[usize], usize> = row_subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let rows: Vec<Label> = row_subsets.iter().cloned().map(Label::Subset).collect();
    let mut cols = Vec::with_capacity(d.b() * k);
    let mut bits = BitMatrix::zeros(rows.len(), d.b() * k);
    for (bi, block) in d.blocks().iter().enumerate() {
        for (pos, &y) in block.iter().enumerate() {
            let col = bi * k + pos;
            cols.push(Label::Pair { block: bi, point: y });
            let rest: Vec<usize> = block.iter().copied().filter(|&p| p != y).collect();
            for subset in rest.into_iter().combinations(t - 1) {
                bits.set(rank[subset.as_slice()], col, true);
            }
        }
    }
    CachingMatrix::new(rows, cols, bits)
}

/// First Steiner scheme cover: for each point y and each index j below
/// C(k-1, t-1), one submatrix whose columns are the blocks through y and
/// whose row for block B is the j-th (t-1)-subset of B minus y in
/// lexicographic order. Two blocks cannot share a full t-subset, which
/// gives the identity property.
pub fn t1_cover(d: &Design, matrix: &CachingMatrix, t: usize) -> Cover {
    let v = d.v();
    let k = d.k();
    assert_eq!(matrix.f(), d.b() * k, "matrix was built from another design");
    let row_subsets: Vec<Vec<usize>> = (0..v).combinations(t - 1).collect();
    assert_eq!(matrix.k(), row_subsets.len(), "matrix row space mismatch");
    let rank: HashMap<&[usize], usize> = row_subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let per_point = crate::binomial_usize(k - 1, t - 1);
    let mut submatrices = Vec::with_capacity(v * per_point);
    for y in 0..v {
        let through = d.blocks_through(y);
        for j in 0..per_point {
            let pivots = through
                .iter()
                .map(|&bi| {
                    let block = &d.blocks()[bi];
                    let rest: Vec<usize> =
                        block.iter().copied().filter(|&p| p != y).collect();
                    let subset = rest
                        .into_iter()
                        .combinations(t - 1)
                        .nth(j)
                        .expect("j below C(k-1, t-1)");
                    let pos = block.binary_search(&y).expect("y in block");
                    (rank[subset.as_slice()], bi * k + pos)
                })
                .collect();
            submatrices.push(IdentitySubmatrix::new(pivots));
        }
    }
    Cover { submatrices }
}

/// Second Steiner scheme matrix: point rows against (block, t-subset)
/// columns, block-major with subsets in lexicographic order; entry
/// (i, (B, E)) is 1 iff i lies in E.
pub fn t2_caching_matrix(d: &Design, t: usize) -> Result<CachingMatrix, SchemeError> {
    require_design(d, t, 1).map_err(SchemeError::NotSteiner)?;
    let per_block = crate::binomial_usize(d.k(), t);
    let rows: Vec<Label> = (0..d.v()).map(Label::Point).collect();
    let mut cols = Vec::with_capacity(d.b() * per_block);
    let mut bits = BitMatrix::zeros(d.v(), d.b() * per_block);
    for (bi, block) in d.blocks().iter().enumerate() {
        for subset in block.iter().copied().combinations(t) {
            let col = cols.len();
            for &i in &subset {
                bits.set(i, col, true);
            }
            cols.push(Label::BlockSubset {
                block: bi,
                subset,
            });
        }
    }
    CachingMatrix::new(rows, cols, bits)
}

/// Second Steiner scheme cover: one submatrix per (t-1)-subset D, with a
/// column (B, D + w) and row w for every block B through D and every point
/// w of B outside D. The t-subset D + w pins down its block uniquely, so
/// distinct columns never share an uncached point beyond their own row.
pub fn t2_cover(d: &Design, matrix: &CachingMatrix, t: usize) -> Cover {
    let per_block = crate::binomial_usize(d.k(), t);
    assert_eq!(
        matrix.f(),
        d.b() * per_block,
        "matrix was built from another design"
    );
    assert_eq!(matrix.k(), d.v(), "matrix was built from another design");
    let mut submatrices = Vec::new();
    for dset in (0..d.v()).combinations(t - 1) {
        let mut pivots = Vec::new();
        for (bi, block) in d.blocks().iter().enumerate() {
            if !dset.iter().all(|x| block.binary_search(x).is_ok()) {
                continue;
            }
            for &w in block.iter().filter(|p| !dset.contains(p)) {
                let mut subset = dset.clone();
                subset.push(w);
                subset.sort_unstable();
                let local = block
                    .iter()
                    .copied()
                    .combinations(t)
                    .position(|e| e == subset)
                    .expect("subset drawn from the block");
                pivots.push((w, bi * per_block + local));
            }
        }
        submatrices.push(IdentitySubmatrix::new(pivots));
    }
    Cover { submatrices }
}

/// Transposed incidence matrix of a transversal design: block rows, point
/// columns, row weight k. Requires k >= n so the cover below has room to
/// pick a successor group.
pub fn td_caching_matrix(td: &TransversalDesign) -> Result<CachingMatrix, SchemeError> {
    if td.k() < td.n() {
        return Err(SchemeError::BlockSizeBelowGroupSize {
            k: td.k(),
            n: td.n(),
        });
    }
    let rows = (0..td.b()).map(Label::Block).collect();
    let cols = (0..td.v()).map(Label::Point).collect();
    let mut bits = BitMatrix::zeros(td.b(), td.v());
    for (bi, block) in td.blocks().iter().enumerate() {
        for &p in block {
            bits.set(bi, p, true);
        }
    }
    CachingMatrix::new(rows, cols, bits)
}

/// One submatrix per point x: its rows are the n blocks through x, and the
/// column paired with each block is that block's point in the cyclic
/// successor of x's group. Two blocks through x never share a second
/// point, which gives the identity property.
pub fn td_cover(td: &TransversalDesign, matrix: &CachingMatrix) -> Cover {
    assert_eq!(matrix.k(), td.b(), "matrix was built from another design");
    assert_eq!(matrix.f(), td.v(), "matrix was built from another design");
    let k = td.k();
    let submatrices = (0..td.v())
        .map(|x| {
            let succ = (td.group_of(x) + 1) % k;
            let pivots = td
                .blocks_through(x)
                .into_iter()
                .map(|bi| (bi, td.blocks()[bi][succ]))
                .collect();
            IdentitySubmatrix::new(pivots)
        })
        .collect();
    Cover { submatrices }
}
