//! Exact dense matrices and fraction-free rank.

use num::{BigInt, BigRational, Integer, One, Zero};

/// Square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![BigRational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigRational::one();
        }
        m
    }

    pub fn from_integer_rows(rows: &IntMatrix, denom: &BigInt) -> Self {
        let dim = rows.dim;
        let entries = rows
            .data
            .iter()
            .map(|&v| BigRational::new(v.into(), denom.clone()))
            .collect();
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> BigRational {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// Rank via fraction-free elimination after clearing row denominators.
    pub fn rank(&self) -> usize {
        let rows = (0..self.dim)
            .map(|i| {
                let row = &self.entries[i * self.dim..(i + 1) * self.dim];
                let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect::<Vec<BigInt>>()
            })
            .collect();
        rank_big(rows)
    }
}

/// Square integer matrix, row-major. Used for integral action matrices and
/// for `|Γ|` times the Reynolds projector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![0; dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        let cell = &mut self.data[i * self.dim + j];
        *cell = cell.checked_add(v).expect("integer matrix entry overflow");
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn trace(&self) -> i128 {
        (0..self.dim).map(|i| self.get(i, i) as i128).sum()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        rank_of_integer_rows(self.rows())
    }
}

/// Rank of a list of integer rows (all the same length).
///
/// Fraction-free elimination: each row update is `p·r − q·pivot` followed by
/// division by the row content, so entries stay integral. Runs on `i128`
/// with checked arithmetic and restarts on big integers if anything
/// overflows.
pub fn rank_of_integer_rows(rows: Vec<Vec<i64>>) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    match rank_i128(small) {
        Some(r) => r,
        None => rank_big(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        ),
    }
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn normalize_i128(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, &v| if g == 1 { 1 } else { gcd_i128(g, v) });
    if g > 1 {
        row.iter_mut().for_each(|v| *v /= g);
    }
}

fn rank_i128(mut rows: Vec<Vec<i128>>) -> Option<usize> {
    rows.retain(|r| r.iter().any(|&v| v != 0));
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        normalize_i128(&mut rows[rank]);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let pv = pivot[col];
        for row in tail.iter_mut() {
            let rv = row[col];
            if rv == 0 {
                continue;
            }
            let g = gcd_i128(pv, rv);
            let (a, b) = (pv / g, rv / g);
            for j in col..width {
                let lhs = row[j].checked_mul(a)?;
                let rhs = pivot[j].checked_mul(b)?;
                row[j] = lhs.checked_sub(rhs)?;
            }
            normalize_i128(row);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Some(rank)
}

fn rank_big(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let pv = &pivot[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[col]);
            let a = pv / &g;
            let b = &row[col] / &g;
            for j in col..width {
                row[j] = &row[j] * &a - &pivot[j] * &b;
            }
            let content = row.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
            if content > BigInt::one() {
                row.iter_mut().for_each(|v| *v /= &content);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn simple_ranks() {
        assert_eq!(rank_of_integer_rows(vec![]), 0);
        assert_eq!(rank_of_integer_rows(vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_of_integer_rows(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_of_integer_rows(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // Vandermonde-like growth with large entries
        let big = i64::MAX / 3;
        let rows = vec![vec![big, 1, 0], vec![1, big, 1], vec![0, 1, big]];
        assert_eq!(rank_of_integer_rows(rows), 3);
    }

    #[test]
    fn rational_rank_and_trace() {
        let mut m = RationalMatrix::zeros(2);
        let half = BigRational::new(1.into(), 2.into());
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, half.clone());
            }
        }
        // projector onto (1,1)
        assert_eq!(m.mul(&m), m);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.trace(), BigRational::one());
    }

    fn rank_by_rational_elimination(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        let width = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..width {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
            m.swap(rank, p);
            let pivot = m[rank].clone();
            for row in m.iter_mut().skip(rank + 1) {
                let f = &row[col] / &pivot[col];
                for j in 0..width {
                    row[j] -= &f * &pivot[j];
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn fraction_free_matches_rational_elimination(
            rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 6), 0..7)
        ) {
            prop_assert_eq!(rank_of_integer_rows(rows.clone()), rank_by_rational_elimination(&rows));
        }
    }
}
