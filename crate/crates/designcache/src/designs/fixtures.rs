//! Hand-checked reference designs, stored exactly as published with their
//! original point labels ('1'-based, with 'a' = 10 and 'b' = 11 in the
//! eleven-point biplane). Points are relabeled to 0-based integers on load
//! and the original names kept in the label map.

use super::{DeclaredParams, Design, DesignError, TransversalDesign};
use std::collections::BTreeMap;

/// A named reference design: either a plain block design or a transversal
/// design with its group partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinDesign {
    Block(Design),
    Transversal(TransversalDesign),
}

impl BuiltinDesign {
    pub fn as_block(&self) -> Option<&Design> {
        match self {
            BuiltinDesign::Block(d) => Some(d),
            BuiltinDesign::Transversal(_) => None,
        }
    }

    pub fn as_transversal(&self) -> Option<&TransversalDesign> {
        match self {
            BuiltinDesign::Transversal(td) => Some(td),
            BuiltinDesign::Block(_) => None,
        }
    }
}

const FANO_BLOCKS: &[&[usize]] = &[
    &[1, 2, 7],
    &[1, 4, 5],
    &[1, 3, 6],
    &[4, 6, 7],
    &[2, 5, 6],
    &[3, 5, 7],
    &[2, 3, 4],
];

const BIBD_9_3_1_BLOCKS: &[&[usize]] = &[
    &[3, 5, 7],
    &[1, 2, 3],
    &[4, 5, 6],
    &[7, 8, 9],
    &[1, 4, 7],
    &[2, 5, 8],
    &[3, 6, 9],
    &[1, 5, 9],
    &[2, 6, 7],
    &[3, 4, 8],
    &[1, 6, 8],
    &[2, 4, 9],
];

const BIPLANE_11_5_2_BLOCKS: &[&[usize]] = &[
    &[1, 6, 8, 9, 10],
    &[1, 3, 4, 6, 7],
    &[1, 2, 4, 9, 11],
    &[1, 2, 3, 5, 10],
    &[2, 3, 7, 8, 9],
    &[3, 4, 8, 10, 11],
    &[4, 5, 7, 9, 10],
    &[2, 6, 7, 10, 11],
    &[1, 5, 7, 8, 11],
    &[2, 4, 5, 6, 8],
    &[3, 5, 6, 9, 11],
];

const STEINER_3_8_4_BLOCKS: &[&[usize]] = &[
    &[1, 2, 5, 6],
    &[3, 4, 7, 8],
    &[1, 3, 5, 7],
    &[2, 4, 6, 8],
    &[1, 4, 5, 8],
    &[2, 3, 6, 7],
    &[1, 2, 3, 4],
    &[5, 6, 7, 8],
    &[1, 2, 7, 8],
    &[3, 4, 5, 6],
    &[1, 3, 6, 8],
    &[2, 4, 5, 7],
    &[1, 4, 6, 7],
    &[2, 3, 5, 8],
];

const TD_4_3_GROUPS: &[&[usize]] = &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9], &[10, 11, 12]];

const TD_4_3_BLOCKS: &[&[usize]] = &[
    &[1, 4, 7, 10],
    &[1, 5, 8, 11],
    &[1, 6, 9, 12],
    &[2, 4, 9, 11],
    &[2, 5, 7, 12],
    &[2, 6, 8, 10],
    &[3, 4, 8, 12],
    &[3, 5, 9, 10],
    &[3, 6, 7, 11],
];

fn rebase(blocks: &[&[usize]]) -> Vec<Vec<usize>> {
    blocks
        .iter()
        .map(|b| b.iter().map(|&p| p - 1).collect())
        .collect()
}

fn numeric_labels(v: usize) -> BTreeMap<usize, String> {
    (0..v).map(|p| (p, (p + 1).to_string())).collect()
}

/// Label map for the eleven-point fixture, whose published names run
/// 1..9, a, b.
fn biplane_labels() -> BTreeMap<usize, String> {
    let mut m = numeric_labels(9);
    m.insert(9, "a".to_string());
    m.insert(10, "b".to_string());
    m
}

/// Fixture names accepted by `builtin_design`.
pub fn builtin_names() -> &'static [&'static str] {
    &[
        "bibd_9_3_1",
        "biplane_11_5_2",
        "fano_7_3_1",
        "steiner_3_8_4",
        "td_4_3",
    ]
}

/// Load a reference design by name.
pub fn builtin_design(name: &str) -> Result<BuiltinDesign, DesignError> {
    let block = |v: usize,
                 blocks: &[&[usize]],
                 declared: DeclaredParams,
                 labels: BTreeMap<usize, String>| {
        Design::new(v, rebase(blocks), Some(declared), Some(labels)).map(BuiltinDesign::Block)
    };
    match name {
        "fano_7_3_1" => block(
            7,
            FANO_BLOCKS,
            DeclaredParams { t: 2, lambda: 1 },
            numeric_labels(7),
        ),
        "bibd_9_3_1" => block(
            9,
            BIBD_9_3_1_BLOCKS,
            DeclaredParams { t: 2, lambda: 1 },
            numeric_labels(9),
        ),
        "biplane_11_5_2" => block(
            11,
            BIPLANE_11_5_2_BLOCKS,
            DeclaredParams { t: 2, lambda: 2 },
            biplane_labels(),
        ),
        "steiner_3_8_4" => block(
            8,
            STEINER_3_8_4_BLOCKS,
            DeclaredParams { t: 3, lambda: 1 },
            numeric_labels(8),
        ),
        "td_4_3" => {
            let groups = rebase(TD_4_3_GROUPS);
            let blocks = rebase(TD_4_3_BLOCKS);
            TransversalDesign::new(4, 3, groups, blocks, Some(numeric_labels(12)))
                .map(BuiltinDesign::Transversal)
        }
        other => Err(DesignError::UnknownFixture(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{verify_block_intersections, verify_t_design};

    fn block_fixture(name: &str) -> Design {
        builtin_design(name).unwrap().as_block().unwrap().clone()
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(matches!(
            builtin_design("petersen"),
            Err(DesignError::UnknownFixture(_))
        ));
    }

    #[test]
    fn every_block_fixture_verifies_as_declared() {
        for name in ["fano_7_3_1", "bibd_9_3_1", "biplane_11_5_2", "steiner_3_8_4"] {
            let d = block_fixture(name);
            let p = d.declared().unwrap();
            let report = verify_t_design(&d, p.t, p.lambda).unwrap();
            assert!(report.passed(), "{name}: {report:?}");
        }
    }

    #[test]
    fn fano_canonical_block_order() {
        let d = block_fixture("fano_7_3_1");
        let expected: Vec<Vec<usize>> = vec![
            vec![0, 1, 6],
            vec![0, 2, 5],
            vec![0, 3, 4],
            vec![1, 2, 3],
            vec![1, 4, 5],
            vec![2, 4, 6],
            vec![3, 5, 6],
        ];
        assert_eq!(d.blocks(), expected.as_slice());
        assert_eq!(d.label_for(0), "1");
        assert_eq!(d.label_for(6), "7");
    }

    #[test]
    fn steiner_fixture_counts() {
        let d = block_fixture("steiner_3_8_4");
        assert_eq!((d.v(), d.k(), d.b()), (8, 4, 14));
        let report = verify_t_design(&d, 3, 1).unwrap();
        assert_eq!(report.r(), Some(7));
    }

    #[test]
    fn biplane_fixture_is_symmetric() {
        let d = block_fixture("biplane_11_5_2");
        assert_eq!((d.v(), d.k(), d.b()), (11, 5, 11));
        assert_eq!(verify_block_intersections(&d, 2), Ok(()));
        assert_eq!(d.label_for(9), "a");
        assert_eq!(d.label_for(10), "b");
    }

    #[test]
    fn nine_point_fixture_counts() {
        let d = block_fixture("bibd_9_3_1");
        assert_eq!((d.v(), d.k(), d.b()), (9, 3, 12));
        let report = verify_t_design(&d, 2, 1).unwrap();
        assert_eq!(report.r(), Some(4));
    }

    #[test]
    fn transversal_fixture_round_trip() {
        let td = builtin_design("td_4_3")
            .unwrap()
            .as_transversal()
            .unwrap()
            .clone();
        assert_eq!((td.k(), td.n(), td.v(), td.b()), (4, 3, 12, 9));
        let expected: Vec<Vec<usize>> = vec![
            vec![0, 3, 6, 9],
            vec![0, 4, 7, 10],
            vec![0, 5, 8, 11],
            vec![1, 3, 8, 10],
            vec![1, 4, 6, 11],
            vec![1, 5, 7, 9],
            vec![2, 3, 7, 11],
            vec![2, 4, 8, 9],
            vec![2, 5, 6, 10],
        ];
        assert_eq!(td.blocks(), expected.as_slice());
        assert_eq!(td.label_for(9), "10");

        let json = serde_json::to_string(&td).unwrap();
        let back: TransversalDesign = serde_json::from_str(&json).unwrap();
        assert_eq!(back, td);
    }
}
