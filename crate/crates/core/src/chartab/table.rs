use num::{BigInt, BigRational, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::quad::{is_squarefree, QuadValue};
use super::ChartabError;

/// A real character table with values in a single field `Q(√d)`.
///
/// Rows are irreducible characters, columns conjugacy classes. Column 0 is
/// the identity class and row 0 the trivial character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharTable {
    radicand: u64,
    class_sizes: Vec<u64>,
    irrep_dims: Vec<u64>,
    values: Vec<Vec<QuadValue>>,
    power2: Vec<usize>,
    power3: Vec<usize>,
    class_names: Vec<String>,
}

impl CharTable {
    /// Builds and validates a table.
    pub fn new(
        radicand: u64,
        class_sizes: Vec<u64>,
        values: Vec<Vec<QuadValue>>,
        power2: Vec<usize>,
        power3: Vec<usize>,
        class_names: Vec<String>,
    ) -> Result<Self, ChartabError> {
        if !is_squarefree(radicand) {
            return Err(ChartabError::NotSquarefree(radicand));
        }
        let k = class_sizes.len();
        if k == 0 {
            return Err(ChartabError::Shape("table has no classes".into()));
        }
        if values.len() != k || values.iter().any(|r| r.len() != k) {
            return Err(ChartabError::Shape(format!("expected a {k}x{k} grid of values")));
        }
        if power2.len() != k || power3.len() != k {
            return Err(ChartabError::Shape("power maps must have one entry per class".into()));
        }
        if let Some(&bad) = power2.iter().chain(&power3).find(|&&c| c >= k) {
            return Err(ChartabError::Shape(format!("power map entry {bad} out of range")));
        }
        let class_names = if class_names.is_empty() {
            (0..k).map(|c| format!("C{}", c + 1)).collect()
        } else if class_names.len() == k {
            class_names
        } else {
            return Err(ChartabError::Shape("class_names must have one entry per class".into()));
        };
        if values.iter().flatten().any(|v| v.radicand() != radicand) {
            return Err(ChartabError::Shape("value with a foreign radicand".into()));
        }
        if class_sizes[0] != 1 || power2[0] != 0 || power3[0] != 0 {
            return Err(ChartabError::Shape("column 0 must be the identity class".into()));
        }
        if class_sizes.contains(&0) {
            return Err(ChartabError::Shape("class sizes must be positive".into()));
        }
        if values[0].iter().any(|v| *v != QuadValue::one(radicand)) {
            return Err(ChartabError::NotTrivialFirstRow);
        }
        let irrep_dims = values
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row[0]
                    .to_integer()
                    .and_then(|n| n.to_u64())
                    .filter(|&n| n > 0)
                    .ok_or(ChartabError::BadDimension(i))
            })
            .collect::<Result<Vec<_>, _>>()?;

        let table = Self {
            radicand,
            class_sizes,
            irrep_dims,
            values,
            power2,
            power3,
            class_names,
        };
        table.validate()?;
        Ok(table)
    }

    /// Degree sum, class sizes dividing the order, and exact row orthogonality.
    pub fn validate(&self) -> Result<(), ChartabError> {
        let order = self.group_order();
        let dim_sq: u64 = self.irrep_dims.iter().map(|d| d * d).sum();
        if dim_sq != order {
            return Err(ChartabError::DimensionSum { order, dim_sq });
        }
        if let Some(c) = self.class_sizes.iter().position(|s| order % s != 0) {
            return Err(ChartabError::Shape(format!("class {c} size does not divide the order")));
        }
        let k = self.num_classes();
        let order_q = QuadValue::integer(order as i64, self.radicand);
        let zero = QuadValue::zero(self.radicand);
        for i in 0..k {
            for j in i..k {
                let expected = if i == j { &order_q } else { &zero };
                if &self.inner_product(i, j) != expected {
                    return Err(ChartabError::OrthogonalityViolation(i, j));
                }
            }
        }
        Ok(())
    }

    /// `Σ_c |c| χ_i(c) χ_j(c)`; values are real so no conjugation.
    pub fn inner_product(&self, i: usize, j: usize) -> QuadValue {
        (0..self.num_classes()).fold(QuadValue::zero(self.radicand), |acc, c| {
            let term = (&self.values[i][c] * &self.values[j][c]).scale(&self.size_q(c));
            acc + term
        })
    }

    pub(crate) fn size_q(&self, c: usize) -> BigRational {
        BigRational::from_integer(self.class_sizes[c].into())
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn group_order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn irrep_dims(&self) -> &[u64] {
        &self.irrep_dims
    }

    pub fn value(&self, irrep: usize, class: usize) -> &QuadValue {
        &self.values[irrep][class]
    }

    pub fn row(&self, irrep: usize) -> &[QuadValue] {
        &self.values[irrep]
    }

    pub fn power2(&self) -> &[usize] {
        &self.power2
    }

    pub fn power3(&self) -> &[usize] {
        &self.power3
    }

    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    /// The binary icosahedral group SL_2(F_5): classes
    /// `I, -I, α, β, β', γ, γ', -γ, -γ'` and irreducibles `A_1..A_9`, with
    /// the corrected `A_7` row.
    pub fn builtin_sl2f5() -> Self {
        let i = |n: i64| QuadValue::integer(n, 5);
        let phi = QuadValue::phi;
        let psi = QuadValue::phi_conj;
        let rows = vec![
            vec![i(1), i(1), i(1), i(1), i(1), i(1), i(1), i(1), i(1)],
            vec![i(2), i(-2), i(0), i(-1), i(1), -psi(), -phi(), psi(), phi()],
            vec![i(2), i(-2), i(0), i(-1), i(1), -phi(), -psi(), phi(), psi()],
            vec![i(3), i(3), i(-1), i(0), i(0), phi(), psi(), phi(), psi()],
            vec![i(3), i(3), i(-1), i(0), i(0), psi(), phi(), psi(), phi()],
            vec![i(4), i(4), i(0), i(1), i(1), i(-1), i(-1), i(-1), i(-1)],
            vec![i(4), i(-4), i(0), i(1), i(-1), i(-1), i(-1), i(1), i(1)],
            vec![i(5), i(5), i(1), i(-1), i(-1), i(0), i(0), i(0), i(0)],
            vec![i(6), i(-6), i(0), i(0), i(0), i(1), i(1), i(-1), i(-1)],
        ];
        let names = ["I", "-I", "alpha", "beta", "beta'", "gamma", "gamma'", "-gamma", "-gamma'"];
        Self::new(
            5,
            vec![1, 1, 30, 20, 20, 12, 12, 12, 12],
            rows,
            vec![0, 0, 1, 3, 3, 6, 5, 6, 5],
            vec![0, 1, 2, 0, 1, 6, 5, 8, 7],
            names.iter().map(|s| s.to_string()).collect(),
        )
        .expect("builtin SL2(F5) table is valid")
    }

    /// The one-class table of the trivial group.
    pub fn trivial() -> Self {
        Self::new(1, vec![1], vec![vec![QuadValue::one(1)]], vec![0], vec![0], vec!["e".into()])
            .expect("trivial table")
    }

    pub fn to_file(&self) -> CharTableFile {
        let entry = |v: &QuadValue| {
            let (a, b) = (v.rational_part(), v.radical_part());
            let int = |x: &BigInt| x.to_i64().expect("table entries fit in i64");
            QuadEntry {
                a_num: int(a.numer()),
                a_den: int(a.denom()),
                b_num: int(b.numer()),
                b_den: int(b.denom()),
            }
        };
        CharTableFile {
            radicand: self.radicand as i64,
            class_sizes: self.class_sizes.clone(),
            power2: self.power2.clone(),
            power3: self.power3.clone(),
            rows: self.values.iter().map(|r| r.iter().map(entry).collect()).collect(),
            class_names: self.class_names.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ChartabError> {
        let file: CharTableFile =
            serde_json::from_str(text).map_err(|e| ChartabError::Parse(e.to_string()))?;
        Self::from_file(file)
    }

    pub fn from_file(file: CharTableFile) -> Result<Self, ChartabError> {
        let d = match u64::try_from(file.radicand) {
            Ok(d) if d > 0 => d,
            _ => return Err(ChartabError::NonRealValue(format!("radicand {}", file.radicand))),
        };
        let ratio = |n: i64, den: i64| {
            if den == 0 {
                Err(ChartabError::Parse("zero denominator".into()))
            } else {
                Ok(BigRational::new(n.into(), den.into()))
            }
        };
        if !is_squarefree(d) {
            return Err(ChartabError::NotSquarefree(d));
        }
        let mut values = Vec::with_capacity(file.rows.len());
        for row in &file.rows {
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                let a = ratio(e.a_num, e.a_den)?;
                let b = ratio(e.b_num, e.b_den)?;
                out.push(QuadValue::new_unchecked(a, b, d));
            }
            values.push(out);
        }
        Self::new(d, file.class_sizes, values, file.power2, file.power3, file.class_names)
    }
}

/// One table cell `a_num/a_den + (b_num/b_den)√d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadEntry {
    pub a_num: i64,
    pub a_den: i64,
    #[serde(default)]
    pub b_num: i64,
    #[serde(default = "one_i64")]
    pub b_den: i64,
}

fn one_i64() -> i64 {
    1
}

/// On-disk character-table layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTableFile {
    pub radicand: i64,
    pub class_sizes: Vec<u64>,
    pub power2: Vec<usize>,
    pub power3: Vec<usize>,
    pub rows: Vec<Vec<QuadEntry>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub class_names: Vec<String>,
}
