//! Parameterized design families over finite fields.

use super::{field, DeclaredParams, Design, DesignError, TransversalDesign};
use crate::gf::{prime_power, FiniteField};
use std::collections::BTreeSet;

/// Affine plane of order n as a 2-(n^2, n, 1) design. Points are field
/// pairs (x, y) labeled x*n + y; blocks are the lines y = a*x + b together
/// with the vertical lines x = c, giving n^2 + n blocks with replication
/// n + 1.
pub fn construct_affine_plane_bibd(n: u64) -> Result<Design, DesignError> {
    let f = field(n)?;
    let nu = n as usize;
    let label = |x: u64, y: u64| (x * n + y) as usize;
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(nu * nu + nu);
    for a in f.elements() {
        for b in f.elements() {
            blocks.push(
                f.elements()
                    .map(|x| label(x, f.add(f.mul(a, x), b)))
                    .collect(),
            );
        }
    }
    for c in f.elements() {
        blocks.push(f.elements().map(|y| label(c, y)).collect());
    }
    Design::new(
        nu * nu,
        blocks,
        Some(DeclaredParams { t: 2, lambda: 1 }),
        None,
    )
}

/// Homogeneous coordinate triples with the first nonzero entry scaled to 1,
/// in lexicographic order. One triple per projective point.
fn normalized_triples(f: &FiniteField) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                let first = [a, b, c].into_iter().find(|&x| x != 0);
                if first == Some(1) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Projective plane of order n as a symmetric 2-(n^2+n+1, n+1, 1) design.
/// Points and lines are both normalized coordinate triples; point p lies on
/// line l iff their dot product vanishes.
pub fn construct_projective_plane_bibd(n: u64) -> Result<Design, DesignError> {
    let f = field(n)?;
    let triples = normalized_triples(&f);
    let dot = |u: &[u64; 3], w: &[u64; 3]| {
        let mut acc = 0;
        for i in 0..3 {
            acc = f.add(acc, f.mul(u[i], w[i]));
        }
        acc
    };
    let blocks: Vec<Vec<usize>> = triples
        .iter()
        .map(|line| {
            triples
                .iter()
                .enumerate()
                .filter(|(_, p)| dot(line, p) == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Design::new(
        triples.len(),
        blocks,
        Some(DeclaredParams { t: 2, lambda: 1 }),
        None,
    )
}

/// Inversive plane as a 3-(q^2+1, q+1, 1) design. Points are the field of
/// order q^2 plus a point at infinity (labeled q^2). The base block is the
/// order-q subfield plus infinity; the block set is its orbit under all
/// invertible fractional-linear maps z -> (az+b)/(cz+d), deduplicated by
/// sorted form. Brute-forcing all q^8 coefficient choices is fine at q <= 5.
pub fn construct_inversive_plane(q: u64) -> Result<Design, DesignError> {
    prime_power(q).ok_or(DesignError::NotPrimePower(q))?;
    let e = field(q * q)?;
    let infinity = (q * q) as usize;
    let base: Vec<u64> = e.subfield_elements(q);

    let apply = |a: u64, b: u64, c: u64, d: u64| -> Vec<usize> {
        let mut img: Vec<usize> = base
            .iter()
            .map(|&z| {
                let den = e.add(e.mul(c, z), d);
                if den == 0 {
                    infinity
                } else {
                    e.div(e.add(e.mul(a, z), b), den) as usize
                }
            })
            .collect();
        img.push(if c == 0 { infinity } else { e.div(a, c) as usize });
        img.sort_unstable();
        img
    };

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in e.elements() {
        for b in e.elements() {
            for c in e.elements() {
                for d in e.elements() {
                    if e.sub(e.mul(a, d), e.mul(b, c)) == 0 {
                        continue;
                    }
                    seen.insert(apply(a, b, c, d));
                }
            }
        }
    }
    Design::new(
        infinity + 1,
        seen.into_iter().collect(),
        Some(DeclaredParams { t: 3, lambda: 1 }),
        None,
    )
}

/// TD(k, q) for k = q or k = q+1, from the lines of the affine plane read
/// as an orthogonal array. Group i holds labels i*q..i*q+q-1. The block for
/// slope a and intercept b takes point a*x_i + b in group i; for k = q+1 an
/// extra group indexes the slope itself.
pub fn construct_transversal_design(k: usize, q: u64) -> Result<TransversalDesign, DesignError> {
    let f = field(q)?;
    if k as u64 != q && k as u64 != q + 1 {
        return Err(DesignError::UnsupportedBlockSize { k, q });
    }
    let n = q as usize;
    let groups: Vec<Vec<usize>> = (0..k).map(|i| (i * n..(i + 1) * n).collect()).collect();
    let mut blocks = Vec::with_capacity(n * n);
    for a in f.elements() {
        for b in f.elements() {
            let mut block: Vec<usize> = f
                .elements()
                .map(|x| x as usize * n + f.add(f.mul(a, x), b) as usize)
                .collect();
            if k as u64 == q + 1 {
                block.push(q as usize * n + a as usize);
            }
            blocks.push(block);
        }
    }
    TransversalDesign::new(k, n, groups, blocks, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{
        trivial_t_design, verify_block_intersections, verify_t_design, DesignError,
    };

    #[test]
    fn affine_plane_order_two_is_the_complete_pair_design() {
        let d = construct_affine_plane_bibd(2).unwrap();
        assert_eq!((d.v(), d.k(), d.b()), (4, 2, 6));
        let t = trivial_t_design(4, 2).unwrap();
        assert_eq!(d.blocks(), t.blocks());
    }

    #[test]
    fn affine_plane_order_three_has_twelve_lines() {
        let d = construct_affine_plane_bibd(3).unwrap();
        assert_eq!((d.v(), d.k(), d.b()), (9, 3, 12));
        let report = verify_t_design(&d, 2, 1).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.r(), Some(4));
    }

    #[test]
    fn affine_plane_order_four_verifies_exhaustively() {
        let d = construct_affine_plane_bibd(4).unwrap();
        assert_eq!((d.v(), d.k(), d.b()), (16, 4, 20));
        let report = verify_t_design(&d, 2, 1).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.r(), Some(5));
    }

    #[test]
    fn affine_plane_rejects_composite_order() {
        assert!(matches!(
            construct_affine_plane_bibd(6),
            Err(DesignError::NotPrimePower(6))
        ));
    }

    #[test]
    fn projective_plane_order_two_matches_known_parameters() {
        let d = construct_projective_plane_bibd(2).unwrap();
        assert_eq!((d.v(), d.k(), d.b()), (7, 3, 7));
        let report = verify_t_design(&d, 2, 1).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(verify_block_intersections(&d, 1), Ok(()));
    }

    #[test]
    fn projective_plane_order_three_verifies_exhaustively() {
        let d = construct_projective_plane_bibd(3).unwrap();
        assert_eq!((d.v(), d.k(), d.b()), (13, 4, 13));
        let report = verify_t_design(&d, 2, 1).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.r(), Some(4));
        assert_eq!(verify_block_intersections(&d, 1), Ok(()));
    }

    #[test]
    fn projective_plane_order_four_uses_extension_field() {
        let d = construct_projective_plane_bibd(4).unwrap();
        assert_eq!((d.v(), d.k(), d.b()), (21, 5, 21));
        let report = verify_t_design(&d, 2, 1).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn inversive_plane_order_two_is_all_triples() {
        let d = construct_inversive_plane(2).unwrap();
        assert_eq!((d.v(), d.k(), d.b()), (5, 3, 10));
        let t = trivial_t_design(5, 3).unwrap();
        assert_eq!(d.blocks(), t.blocks());
    }

    #[test]
    fn inversive_plane_order_three_verifies_exhaustively() {
        let d = construct_inversive_plane(3).unwrap();
        assert_eq!((d.v(), d.k(), d.b()), (10, 4, 30));
        let report = verify_t_design(&d, 3, 1).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn inversive_plane_block_count_matches_formula() {
        for q in [2u64, 3, 4] {
            let d = construct_inversive_plane(q).unwrap();
            assert_eq!(d.b() as u64, q * (q * q + 1), "q={q}");
        }
    }

    #[test]
    fn transversal_design_of_the_known_size() {
        let td = construct_transversal_design(4, 3).unwrap();
        assert_eq!((td.k(), td.n(), td.v(), td.b()), (4, 3, 12, 9));
        for p in 0..td.v() {
            assert_eq!(td.blocks_through(p).len(), 3);
        }
    }

    #[test]
    fn transversal_design_complete_bipartite_case() {
        let td = construct_transversal_design(2, 2).unwrap();
        assert_eq!(td.b(), 4);
        let expected: Vec<Vec<usize>> =
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]];
        assert_eq!(td.blocks(), expected.as_slice());
    }

    #[test]
    fn transversal_design_square_case_covers_cross_pairs() {
        // TD(3,3): constructor re-verifies pair coverage internally
        let td = construct_transversal_design(3, 3).unwrap();
        assert_eq!((td.k(), td.n(), td.b()), (3, 3, 9));
    }

    #[test]
    fn transversal_design_rejects_bad_block_size() {
        assert!(matches!(
            construct_transversal_design(3, 5),
            Err(DesignError::UnsupportedBlockSize { k: 3, q: 5 })
        ));
        assert!(matches!(
            construct_transversal_design(7, 5),
            Err(DesignError::UnsupportedBlockSize { k: 7, q: 5 })
        ));
    }

    #[test]
    fn transversal_design_larger_field() {
        let td = construct_transversal_design(5, 4).unwrap();
        assert_eq!((td.k(), td.n(), td.v(), td.b()), (5, 4, 20, 16));
    }
}
