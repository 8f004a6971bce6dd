//! Frozen pivot layouts for the worked covers on the builtin fixtures.
//! Every expected value here was derived by hand from the construction
//! rules before the builders existed; these tests pin the implementation
//! to that independent arithmetic.

use designcache::caching::{build_scheme, Scheme, SchemeInput};
use designcache::designs::{builtin_design, BuiltinDesign, Design, TransversalDesign};

fn block_fixture(name: &str) -> Design {
    builtin_design(name).unwrap().as_block().unwrap().clone()
}

fn transversal_fixture(name: &str) -> TransversalDesign {
    match builtin_design(name).unwrap() {
        BuiltinDesign::Transversal(td) => td,
        BuiltinDesign::Block(_) => panic!("{name} is a block design"),
    }
}

#[test]
fn fano_cover_matches_the_golden_file() {
    let d = block_fixture("fano_7_3_1");
    let (_, cover, _) = build_scheme(Scheme::Bibd, SchemeInput::Block(&d), None).unwrap();
    let golden = include_str!("golden/fano_cover.json");
    assert_eq!(serde_json::to_string(&cover).unwrap(), golden.trim_end());
}

#[test]
fn fano_point_submatrices_pivot_on_cyclic_successors() {
    let d = block_fixture("fano_7_3_1");
    let (_, cover, _) = build_scheme(Scheme::Bibd, SchemeInput::Block(&d), None).unwrap();
    assert_eq!(cover.submatrices.len(), 7);
    // point 0 lies in blocks 0, 1, 2; its successors there are 1, 2, 3
    assert_eq!(cover.submatrices[0].pivots, vec![(1, 0), (2, 1), (3, 2)]);
    // wrap-around: point 6 is the maximum of every block containing it
    assert_eq!(cover.submatrices[6].pivots, vec![(0, 0), (2, 5), (3, 6)]);
}

#[test]
fn biplane_cover_contains_the_worked_submatrix() {
    let d = block_fixture("biplane_11_5_2");
    let (_, cover, _) = build_scheme(Scheme::Symm, SchemeInput::Block(&d), None).unwrap();
    assert_eq!(cover.submatrices.len(), 55);
    // the submatrix for point 2 inside block [0,2,3,5,6] (block index 2,
    // position 1): one column per other block through point 2, pivot row
    // = the second point the two blocks share
    let sub = &cover.submatrices[2 * 5 + 1];
    assert_eq!(sub.pivots, vec![(0, 2), (6, 26), (3, 40), (5, 45)]);
}

#[test]
fn steiner_scheme_one_cover_contains_the_worked_submatrix() {
    let d = block_fixture("steiner_3_8_4");
    let (_, cover, _) = build_scheme(Scheme::T1, SchemeInput::Block(&d), None).unwrap();
    assert_eq!(cover.submatrices.len(), 24);
    // submatrix for point 3, first pair slot: one column per block through
    // point 3, row = the lex-first pair in that block once 3 is removed
    let sub = &cover.submatrices[3 * 3];
    assert_eq!(
        sub.pivots,
        vec![(0, 3), (3, 21), (4, 25), (9, 37), (10, 41), (14, 45), (16, 49)]
    );
}

#[test]
fn steiner_scheme_two_cover_contains_the_worked_submatrix() {
    let d = block_fixture("steiner_3_8_4");
    let (_, cover, _) = build_scheme(Scheme::T2, SchemeInput::Block(&d), None).unwrap();
    assert_eq!(cover.submatrices.len(), 28);
    // submatrix for the lex-first pair {0,1}: blocks 0, 1, 2 contain it,
    // each contributing one pivot per leftover point
    let sub = &cover.submatrices[0];
    assert_eq!(
        sub.pivots,
        vec![(2, 0), (3, 1), (4, 4), (5, 5), (6, 8), (7, 9)]
    );
}

#[test]
fn transversal_cover_pivots_on_next_group_elements() {
    let td = transversal_fixture("td_4_3");
    let (_, cover, _) = build_scheme(Scheme::Td, SchemeInput::Transversal(&td), None).unwrap();
    assert_eq!(cover.submatrices.len(), 12);
    // point 1 lies in blocks 3, 4, 5; each pivots on that block's
    // element from the following group, points 3, 4, 5
    assert_eq!(cover.submatrices[1].pivots, vec![(3, 3), (4, 4), (5, 5)]);
}
