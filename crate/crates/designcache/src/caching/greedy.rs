//! Baseline cover finder for matrices outside the five schemes.

use super::{CachingMatrix, Cover, IdentitySubmatrix};

/// Cover the matrix by repeatedly extracting a maximal identity submatrix.
///
/// Each round starts at the row-major first uncovered 1-entry and grows the
/// pivot set by scanning the remaining uncovered 1s in row-major order,
/// accepting a candidate whenever rows stay distinct, columns stay
/// distinct, and all cross cells between pivots are 0. Deterministic by
/// construction; the result always verifies, but its size is not minimal.
pub fn greedy_cover(matrix: &CachingMatrix) -> Cover {
    let k = matrix.k();
    let f = matrix.f();
    assert!(matrix.ones() > 0, "matrix has no 1-entries to cover");

    let mut covered = vec![false; k * f];
    let mut submatrices = Vec::new();
    loop {
        let mut seed = None;
        'scan: for r in 0..k {
            for c in 0..f {
                if matrix.get(r, c) && !covered[r * f + c] {
                    seed = Some((r, c));
                    break 'scan;
                }
            }
        }
        let Some((r0, c0)) = seed else { break };

        let mut pivots = vec![(r0, c0)];
        let mut used_rows = vec![false; k];
        let mut used_cols = vec![false; f];
        used_rows[r0] = true;
        used_cols[c0] = true;
        for r in 0..k {
            if used_rows[r] {
                continue;
            }
            for c in 0..f {
                if used_cols[c] || !matrix.get(r, c) || covered[r * f + c] {
                    continue;
                }
                let compatible = pivots.iter().all(|&(pr, pc)| {
                    !matrix.get(pr, c) && !matrix.get(r, pc)
                });
                if compatible {
                    pivots.push((r, c));
                    used_rows[r] = true;
                    used_cols[c] = true;
                    break;
                }
            }
        }

        for &(r, c) in &pivots {
            covered[r * f + c] = true;
        }
        submatrices.push(IdentitySubmatrix::new(pivots));
    }
    Cover { submatrices }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caching::schemes::bibd_caching_matrix;
    use crate::caching::verify::verify_cover;
    use crate::caching::Label;
    use crate::designs::builtin_design;
    use crate::BitMatrix;

    fn plain_matrix(bits: BitMatrix) -> CachingMatrix {
        let rows = (0..bits.rows()).map(Label::Point).collect();
        let cols = (0..bits.cols()).map(Label::Block).collect();
        CachingMatrix::new(rows, cols, bits).unwrap()
    }

    #[test]
    fn identity_matrix_needs_one_submatrix() {
        let mut bits = BitMatrix::zeros(3, 3);
        for i in 0..3 {
            bits.set(i, i, true);
        }
        let m = plain_matrix(bits);
        let cover = greedy_cover(&m);
        assert_eq!(cover.s(), 1);
        assert!(verify_cover(&m, &cover).is_valid_cover);
    }

    #[test]
    fn all_ones_square_needs_one_submatrix_per_entry() {
        // no identity submatrix of size 2 exists inside an all-ones block,
        // so each of the four 1s gets its own single-pivot submatrix
        let mut bits = BitMatrix::zeros(2, 2);
        for r in 0..2 {
            for c in 0..2 {
                bits.set(r, c, true);
            }
        }
        let m = plain_matrix(bits);
        let cover = greedy_cover(&m);
        assert_eq!(cover.s(), 4);
        assert!(cover.submatrices.iter().all(|s| s.len() == 1));
        assert!(verify_cover(&m, &cover).is_valid_cover);
    }

    #[test]
    fn fano_incidence_is_covered_within_bounds() {
        let d = builtin_design("fano_7_3_1")
            .unwrap()
            .as_block()
            .unwrap()
            .clone();
        let m = bibd_caching_matrix(&d).unwrap();
        let cover = greedy_cover(&m);
        assert!(cover.s() <= 21);
        let report = verify_cover(&m, &cover);
        assert!(report.is_valid_cover, "{report:?}");
    }

    #[test]
    fn anti_diagonal_identity_is_recovered() {
        let mut bits = BitMatrix::zeros(4, 4);
        for i in 0..4 {
            bits.set(i, 3 - i, true);
        }
        let m = plain_matrix(bits);
        let cover = greedy_cover(&m);
        assert_eq!(cover.s(), 1);
        assert_eq!(cover.submatrices[0].len(), 4);
    }

    #[test]
    fn greedy_is_deterministic() {
        let d = builtin_design("bibd_9_3_1")
            .unwrap()
            .as_block()
            .unwrap()
            .clone();
        let m = bibd_caching_matrix(&d).unwrap();
        let a = greedy_cover(&m);
        let b = greedy_cover(&m);
        assert_eq!(a, b);
    }
}
