//! Binary caching matrices and identity-submatrix covers.
//!
//! A caching matrix has one row per user and one column per subfile; an
//! entry is 1 exactly when the user does not cache that subfile, and every
//! row has the same weight Q, so all users cache the same fraction
//! 1 - Q/F of the library. An identity submatrix (a permuted identity,
//! given by its pivot cells) corresponds to one coded transmission that
//! serves all its pivot users at once, so a cover of the matrix by S
//! identity submatrices is a delivery scheme with rate S/F.
//!
//! Five scheme constructors build such matrices and covers from designs.
//! Everything is deterministic: rows, columns, submatrices, and pivots all
//! follow fixed canonical orders, and pivots within a submatrix are sorted
//! by ascending column.

mod greedy;
mod metrics;
mod schemes;
mod verify;

pub use greedy::greedy_cover;
pub use metrics::{scheme_metrics, ExpectedMetrics, SchemeKind, SchemeMetrics};
pub use schemes::{
    bibd_caching_matrix, bibd_cover, symm_caching_matrix, symm_cover, t1_caching_matrix,
    t1_cover, t2_caching_matrix, t2_cover, td_caching_matrix, td_cover,
};
pub use verify::{verify_cover, BadSubmatrix, CoverReport, SubmatrixFault};

use crate::bitmat::BitMatrix;
use crate::designs::{Design, TransversalDesign};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error("NotBIBD: {0}")]
    NotBibd(String),
    #[error("NotSymmetric: design has {b} blocks on {v} points, need b = v")]
    NotSymmetric { v: usize, b: usize },
    #[error("NotLambda2: {0}")]
    NotLambda2(String),
    #[error("RepeatedBlocks: block indices {0} and {1} hold the same point set")]
    RepeatedBlocks(usize, usize),
    #[error("NotSteiner: {0}")]
    NotSteiner(String),
    #[error("BlockSizeBelowGroupSize: k={k} is below group size n={n}")]
    BlockSizeBelowGroupSize { k: usize, n: usize },
    #[error("invalid caching matrix: {0}")]
    InvalidMatrix(String),
    #[error("scheme {scheme} needs a {needed} design")]
    WrongDesignKind {
        scheme: &'static str,
        needed: &'static str,
    },
    #[error("scheme needs a strength parameter t, none declared and none given")]
    MissingStrength,
}

/// Row or column index object of a caching matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    /// A single design point.
    Point(usize),
    /// A sorted point subset.
    Subset(Vec<usize>),
    /// A block, by index into the design's block list.
    Block(usize),
    /// A (block, point) pair with the point inside the block.
    Pair { block: usize, point: usize },
    /// A (block, subset) pair with the subset inside the block.
    BlockSubset { block: usize, subset: Vec<usize> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct MatrixRepr {
    rows: Vec<Label>,
    cols: Vec<Label>,
    bits: Vec<String>,
}

/// A K x F binary matrix with constant row weight Q, plus the labels that
/// tie rows to users and columns to subfiles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct CachingMatrix {
    rows: Vec<Label>,
    cols: Vec<Label>,
    bits: BitMatrix,
    q: usize,
}

impl CachingMatrix {
    pub fn new(
        rows: Vec<Label>,
        cols: Vec<Label>,
        bits: BitMatrix,
    ) -> Result<Self, SchemeError> {
        if rows.is_empty() || cols.is_empty() {
            return Err(SchemeError::InvalidMatrix("empty matrix".into()));
        }
        if bits.rows() != rows.len() || bits.cols() != cols.len() {
            return Err(SchemeError::InvalidMatrix(format!(
                "bit storage is {}x{} but labels say {}x{}",
                bits.rows(),
                bits.cols(),
                rows.len(),
                cols.len()
            )));
        }
        let q = bits.row_weight(0);
        for r in 1..bits.rows() {
            if bits.row_weight(r) != q {
                return Err(SchemeError::InvalidMatrix(format!(
                    "row 0 has weight {q} but row {r} has weight {}",
                    bits.row_weight(r)
                )));
            }
        }
        Ok(CachingMatrix { rows, cols, bits, q })
    }

    /// User count.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Subfile count.
    pub fn f(&self) -> usize {
        self.cols.len()
    }

    /// Common row weight: subfiles each user leaves uncached.
    pub fn q(&self) -> usize {
        self.q
    }

    /// Q/F, the uncached fraction 1 - M/N.
    pub fn uncached_fraction(&self) -> Rational {
        Rational::of_counts(self.q, self.f())
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.cols
    }

    pub fn bits(&self) -> &BitMatrix {
        &self.bits
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits.get(row, col)
    }

    /// Total number of 1-entries.
    pub fn ones(&self) -> usize {
        self.bits.ones() as usize
    }
}

impl TryFrom<MatrixRepr> for CachingMatrix {
    type Error = SchemeError;

    fn try_from(r: MatrixRepr) -> Result<Self, Self::Error> {
        let cols = r.cols.len();
        let bits = BitMatrix::from_bit_strings(&r.bits, cols)
            .ok_or_else(|| SchemeError::InvalidMatrix("malformed bit strings".into()))?;
        CachingMatrix::new(r.rows, r.cols, bits)
    }
}

impl From<CachingMatrix> for MatrixRepr {
    fn from(m: CachingMatrix) -> Self {
        let bits = (0..m.bits.rows()).map(|r| m.bits.row_bit_string(r)).collect();
        MatrixRepr {
            rows: m.rows,
            cols: m.cols,
            bits,
        }
    }
}

/// A permuted identity inside a host matrix, recorded as (row, column)
/// pivot cells sorted by ascending column. Rows are pairwise distinct,
/// columns are pairwise distinct, every pivot cell holds a 1, and every
/// off-pivot cell in a pivot row and pivot column holds a 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySubmatrix {
    pub pivots: Vec<(usize, usize)>,
}

impl IdentitySubmatrix {
    pub fn new(mut pivots: Vec<(usize, usize)>) -> Self {
        pivots.sort_by_key(|&(_, c)| c);
        IdentitySubmatrix { pivots }
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.iter().map(|&(r, _)| r)
    }

    pub fn cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.iter().map(|&(_, c)| c)
    }
}

/// An ordered list of identity submatrices intended to cover every 1-entry
/// of a caching matrix. Its size S is the transmission count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub submatrices: Vec<IdentitySubmatrix>,
}

impl Cover {
    pub fn s(&self) -> usize {
        self.submatrices.len()
    }
}

/// The five delivery schemes, named by the design family they consume.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Incidence matrix of a (v,k,1)-BIBD, one submatrix per point.
    Bibd,
    /// Symmetric lambda=2 design, point rows against (block, point) columns.
    Symm,
    /// Steiner t-design, (t-1)-subset rows against (point, block) columns.
    T1,
    /// Steiner t-design, point rows against (block, t-subset) columns.
    T2,
    /// Transversal design, block rows against point columns.
    Td,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Bibd => "bibd",
            Scheme::Symm => "symm",
            Scheme::T1 => "t1",
            Scheme::T2 => "t2",
            Scheme::Td => "td",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "bibd" => Some(Scheme::Bibd),
            "symm" => Some(Scheme::Symm),
            "t1" => Some(Scheme::T1),
            "t2" => Some(Scheme::T2),
            "td" => Some(Scheme::Td),
            _ => None,
        }
    }
}

/// Either kind of design a scheme can consume.
#[derive(Debug, Clone, Copy)]
pub enum SchemeInput<'a> {
    Block(&'a Design),
    Transversal(&'a TransversalDesign),
}

/// Matrix, cover, and metrics for one scheme applied to one design. The
/// strength `t` for the two Steiner schemes comes from `t_override` if
/// given, else from the design's declared parameters.
pub fn build_scheme(
    scheme: Scheme,
    input: SchemeInput<'_>,
    t_override: Option<usize>,
) -> Result<(CachingMatrix, Cover, SchemeMetrics), SchemeError> {
    let need_block = |scheme: &'static str| SchemeError::WrongDesignKind {
        scheme,
        needed: "block",
    };
    match (scheme, input) {
        (Scheme::Bibd, SchemeInput::Block(d)) => {
            let m = bibd_caching_matrix(d)?;
            let c = bibd_cover(d, &m);
            let kind = SchemeKind::Bibd { v: d.v(), k: d.k() };
            let metrics = scheme_metrics(&m, &c, kind);
            Ok((m, c, metrics))
        }
        (Scheme::Symm, SchemeInput::Block(d)) => {
            let m = symm_caching_matrix(d)?;
            let c = symm_cover(d, &m);
            let kind = SchemeKind::Symmetric { v: d.v(), k: d.k() };
            let metrics = scheme_metrics(&m, &c, kind);
            Ok((m, c, metrics))
        }
        (Scheme::T1, SchemeInput::Block(d)) => {
            let t = strength(d, t_override)?;
            let m = t1_caching_matrix(d, t)?;
            let c = t1_cover(d, &m, t);
            let kind = SchemeKind::Scheme1 {
                v: d.v(),
                k: d.k(),
                t,
                b: d.b(),
            };
            let metrics = scheme_metrics(&m, &c, kind);
            Ok((m, c, metrics))
        }
        (Scheme::T2, SchemeInput::Block(d)) => {
            let t = strength(d, t_override)?;
            let m = t2_caching_matrix(d, t)?;
            let c = t2_cover(d, &m, t);
            let kind = SchemeKind::Scheme2 {
                v: d.v(),
                k: d.k(),
                t,
            };
            let metrics = scheme_metrics(&m, &c, kind);
            Ok((m, c, metrics))
        }
        (Scheme::Td, SchemeInput::Transversal(td)) => {
            let m = td_caching_matrix(td)?;
            let c = td_cover(td, &m);
            let kind = SchemeKind::Transversal {
                k: td.k(),
                n: td.n(),
            };
            let metrics = scheme_metrics(&m, &c, kind);
            Ok((m, c, metrics))
        }
        (Scheme::Td, SchemeInput::Block(_)) => Err(SchemeError::WrongDesignKind {
            scheme: "td",
            needed: "transversal",
        }),
        (s, SchemeInput::Transversal(_)) => Err(need_block(s.name())),
    }
}

fn strength(d: &Design, t_override: Option<usize>) -> Result<usize, SchemeError> {
    t_override
        .or_else(|| d.declared().map(|p| p.t))
        .ok_or(SchemeError::MissingStrength)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_json_shapes() {
        assert_eq!(
            serde_json::to_string(&Label::Point(3)).unwrap(),
            r#"{"point":3}"#
        );
        assert_eq!(
            serde_json::to_string(&Label::Subset(vec![1, 2])).unwrap(),
            r#"{"subset":[1,2]}"#
        );
        assert_eq!(
            serde_json::to_string(&Label::Block(2)).unwrap(),
            r#"{"block":2}"#
        );
        assert_eq!(
            serde_json::to_string(&Label::Pair { block: 2, point: 3 }).unwrap(),
            r#"{"pair":{"block":2,"point":3}}"#
        );
        assert_eq!(
            serde_json::to_string(&Label::BlockSubset {
                block: 0,
                subset: vec![0, 1, 4]
            })
            .unwrap(),
            r#"{"block_subset":{"block":0,"subset":[0,1,4]}}"#
        );
    }

    #[test]
    fn matrix_requires_constant_row_weight() {
        let mut bits = BitMatrix::zeros(2, 3);
        bits.set(0, 0, true);
        bits.set(0, 1, true);
        bits.set(1, 2, true);
        let rows = vec![Label::Point(0), Label::Point(1)];
        let cols = vec![Label::Block(0), Label::Block(1), Label::Block(2)];
        assert!(CachingMatrix::new(rows, cols, bits).is_err());
    }

    #[test]
    fn matrix_json_round_trip() {
        let mut bits = BitMatrix::zeros(2, 3);
        bits.set(0, 0, true);
        bits.set(1, 2, true);
        let m = CachingMatrix::new(
            vec![Label::Point(0), Label::Point(1)],
            vec![Label::Block(0), Label::Block(1), Label::Block(2)],
            bits,
        )
        .unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(
            json,
            r#"{"rows":[{"point":0},{"point":1}],"cols":[{"block":0},{"block":1},{"block":2}],"bits":["100","001"]}"#
        );
        let back: CachingMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn cover_json_round_trip() {
        let cover = Cover {
            submatrices: vec![
                IdentitySubmatrix::new(vec![(1, 0), (0, 1)]),
                IdentitySubmatrix::new(vec![(2, 2)]),
            ],
        };
        let json = serde_json::to_string(&cover).unwrap();
        assert_eq!(
            json,
            r#"{"submatrices":[{"pivots":[[1,0],[0,1]]},{"pivots":[[2,2]]}]}"#
        );
        let back: Cover = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cover);
    }

    #[test]
    fn submatrix_pivots_sort_by_column() {
        let s = IdentitySubmatrix::new(vec![(0, 5), (3, 1), (2, 4)]);
        assert_eq!(s.pivots, vec![(3, 1), (2, 4), (0, 5)]);
    }

    #[test]
    fn scheme_names_round_trip() {
        for s in [Scheme::Bibd, Scheme::Symm, Scheme::T1, Scheme::T2, Scheme::Td] {
            assert_eq!(Scheme::from_name(s.name()), Some(s));
        }
        assert_eq!(Scheme::from_name("unknown"), None);
    }
}
