//! Character-table route: exact arithmetic over `Q(√d)`.

mod dims;
mod quad;
mod table;

pub use dims::{
    chartab_breakdown, diagonal_part, dim_invariants_chartab, fs_indicator, fs_indicators, tau_part,
    twisted_sums, ChartabBreakdown, TwistedSums,
};
pub use quad::{is_squarefree, QuadValue};
pub use table::{CharTable, CharTableFile, QuadEntry};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChartabError {
    #[error("values from Q(sqrt {0}) and Q(sqrt {1}) cannot be combined")]
    MixedRadicand(u64, u64),
    #[error("radicand {0} is not a squarefree positive integer")]
    NotSquarefree(u64),
    #[error("character table parse error: {0}")]
    Parse(String),
    #[error("malformed character table: {0}")]
    Shape(String),
    #[error("first row must be the trivial character")]
    NotTrivialFirstRow,
    #[error("irrep {0} has no positive integral degree")]
    BadDimension(usize),
    #[error("class sizes sum to {order} but squared degrees sum to {dim_sq}")]
    DimensionSum { order: u64, dim_sq: u64 },
    #[error("row orthogonality fails for irreps ({0}, {1})")]
    OrthogonalityViolation(usize, usize),
    #[error("value is not real: {0}")]
    NonRealValue(String),
    #[error("Frobenius-Schur indicator of irrep {irrep} is {value}, outside {{-1, 0, 1}}")]
    IndicatorOutOfRange { irrep: usize, value: String },
    #[error("internal error: {0} is not rational")]
    NonRationalSum(String),
    #[error("internal error: invariant dimension {0} is not a nonnegative integer")]
    NonIntegralDimension(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_entries() {
        let t = CharTable::builtin_sl2f5();
        assert_eq!(t.value(1, 5), &-QuadValue::phi_conj());
        assert_eq!(t.value(7, 0), &QuadValue::integer(5, 5));
        assert_eq!(t.group_order(), 120);
        assert_eq!(t.irrep_dims(), &[1, 2, 2, 3, 3, 4, 4, 5, 6]);
    }

    #[test]
    fn all_row_pairs_orthogonal() {
        let t = CharTable::builtin_sl2f5();
        for i in 0..9 {
            for j in 0..9 {
                let expected = if i == j { 120 } else { 0 };
                assert_eq!(t.inner_product(i, j), QuadValue::integer(expected, 5), "({i},{j})");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let t = CharTable::builtin_sl2f5();
        let json = t.to_json();
        assert_eq!(CharTable::from_json(&json).unwrap(), t);
    }

    #[test]
    fn sign_flip_breaks_orthogonality() {
        let mut file = CharTable::builtin_sl2f5().to_file();
        file.rows[7][2].a_num = -file.rows[7][2].a_num;
        match CharTable::from_file(file) {
            Err(ChartabError::OrthogonalityViolation(i, j)) => assert!(i == 7 || j == 7),
            other => panic!("expected orthogonality violation, got {other:?}"),
        }
    }

    #[test]
    fn trivial_table_loads() {
        let json = r#"{"radicand": 1, "class_sizes": [1], "power2": [0], "power3": [0],
                       "rows": [[{"a_num": 1, "a_den": 1, "b_num": 0, "b_den": 1}]]}"#;
        let t = CharTable::from_json(json).unwrap();
        assert_eq!(t.group_order(), 1);
    }

    #[test]
    fn loader_errors() {
        assert!(matches!(CharTable::from_json("{"), Err(ChartabError::Parse(_))));
        let neg = r#"{"radicand": -3, "class_sizes": [1], "power2": [0], "power3": [0],
                      "rows": [[{"a_num": 1, "a_den": 1}]]}"#;
        assert!(matches!(CharTable::from_json(neg), Err(ChartabError::NonRealValue(_))));
        let zero_den = r#"{"radicand": 1, "class_sizes": [1], "power2": [0], "power3": [0],
                           "rows": [[{"a_num": 1, "a_den": 0}]]}"#;
        assert!(matches!(CharTable::from_json(zero_den), Err(ChartabError::Parse(_))));
    }

    #[test]
    fn s3_rational_table() {
        // classes e, (12), (123); irreps trivial, sign, standard
        let i = |n| QuadValue::integer(n, 1);
        let t = CharTable::new(
            1,
            vec![1, 3, 2],
            vec![vec![i(1), i(1), i(1)], vec![i(1), i(-1), i(1)], vec![i(2), i(0), i(-1)]],
            vec![0, 0, 2],
            vec![0, 1, 0],
            vec![],
        )
        .unwrap();
        assert_eq!(fs_indicators(&t).unwrap(), vec![1, 1, 1]);
    }
}
