//! Closed forms for `π = Z_n`, the partition count `p₃`, and the weight
//! systems whose image ranks realize them.
//!
//! For `Z_n` the four dimensions are
//! `(p₃(n), p₃(n−6), p₃(n−3), p₃(n−6))` for odd `C[π]`, even `C[π]`, odd
//! `Ker ε` and even `Ker ε`, where `p₃(m)` counts partitions of `m` into at
//! most three parts.
//!
//! ```
//! use theta_dims::lens::{lens_dims, p3_closed};
//!
//! assert_eq!(p3_closed(6).unwrap(), 7);
//! let row = lens_dims(10).unwrap();
//! assert_eq!((row.odd_ca, row.even_ca, row.odd_ker, row.even_ker), (14, 4, 8, 4));
//! ```

use std::collections::BTreeMap;

use num::{BigRational, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::{rank_of_integer_rows, SymMonomial, WedgeMonomial};
use crate::Parity;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LensError {
    #[error("internal error: (m+3)^2/12 is a half-integer at m = {0}")]
    HalfwayPoint(u64),
    #[error("the cyclic group order must be at least 1")]
    ZeroOrder,
}

/// `p₃(m)` by dynamic programming over parts `1, 2, 3`; `0` for `m < 0`.
pub fn p3_dp(m: i64) -> u64 {
    if m < 0 {
        return 0;
    }
    *p3_dp_table(m as usize).last().expect("table has m + 1 entries")
}

/// `p₃(0), …, p₃(max)`.
pub fn p3_dp_table(max: usize) -> Vec<u64> {
    let mut ways = vec![0u64; max + 1];
    ways[0] = 1;
    for part in 1..=3 {
        for m in part..=max {
            ways[m] += ways[m - part];
        }
    }
    ways
}

/// `p₃(m)` as the nearest integer to `(m+3)²/12`, in integer arithmetic.
pub fn p3_closed(m: u64) -> Result<u64, LensError> {
    let s = (m as u128 + 3).pow(2);
    let (q, r) = (s / 12, s % 12);
    // squares mod 12 lie in {0, 1, 4, 9}
    match r {
        6 => Err(LensError::HalfwayPoint(m)),
        r if r > 6 => Ok(q as u64 + 1),
        _ => Ok(q as u64),
    }
}

/// `p₃` on all integers via the closed form, `0` below zero.
pub fn p3(m: i64) -> u64 {
    if m < 0 {
        0
    } else {
        p3_closed(m as u64).expect("(m+3)^2 is never 6 mod 12")
    }
}

/// One row of the lens-space table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensDims {
    pub n: u64,
    pub odd_ca: u64,
    pub even_ca: u64,
    pub odd_ker: u64,
    pub even_ker: u64,
}

impl LensDims {
    /// Values in table order: odd and even `C[π]`, then odd and even `Ker ε`.
    pub fn values(&self) -> [u64; 4] {
        [self.odd_ca, self.even_ca, self.odd_ker, self.even_ker]
    }
}

pub fn lens_dims(n: u64) -> Result<LensDims, LensError> {
    if n == 0 {
        return Err(LensError::ZeroOrder);
    }
    let n_i = n as i64;
    Ok(LensDims {
        n,
        odd_ca: p3(n_i),
        even_ca: p3(n_i - 6),
        odd_ker: p3(n_i - 3),
        even_ker: p3(n_i - 6),
    })
}

/// Sparse combination of canonical cubic monomials in `C[Z_n]`.
///
/// Keys are sorted triples of exponents; wedge keys are strictly increasing.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightVector(BTreeMap<[u32; 3], BigRational>);

impl WeightVector {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, key: [u32; 3]) -> BigRational {
        self.0.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &BigRational)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, key: [u32; 3], coeff: BigRational) {
        let entry = self.0.entry(key).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.0.remove(&key);
        }
    }

    /// Adds `t^p ∧ t^q ∧ t^r` or `t^p · t^q · t^r` in canonical form.
    fn add_monomial(&mut self, p: u32, q: u32, r: u32, parity: Parity) {
        let one = BigRational::from_integer(1.into());
        match parity {
            Parity::Even => {
                if let Some((m, odd)) = WedgeMonomial::canonical(p, q, r) {
                    self.add_term(m.indices(), if odd { -one } else { one });
                }
            }
            Parity::Odd => self.add_term(SymMonomial::canonical(p, q, r).indices(), one),
        }
    }

    pub fn negate(&self) -> Self {
        Self(self.0.iter().map(|(k, v)| (*k, -v)).collect())
    }
}

fn residue(x: i64, n: u64) -> u32 {
    x.rem_euclid(n as i64) as u32
}

/// `W(t^a, t^b, t^c) = t^{b−a}∘t^{c−b}∘t^{a−c} + t^{a−b}∘t^{b−c}∘t^{c−a}` with `∘`
/// the wedge (even) or symmetric (odd) product.
pub fn weight_map(n: u64, a: i64, b: i64, c: i64, parity: Parity) -> WeightVector {
    assert!(n >= 1, "weight_map needs n >= 1");
    let mut v = WeightVector::default();
    v.add_monomial(residue(b - a, n), residue(c - b, n), residue(a - c, n), parity);
    v.add_monomial(residue(a - b, n), residue(b - c, n), residue(c - a, n), parity);
    v
}

fn monomial_column(key: [u32; 3], parity: Parity) -> usize {
    let [x, y, z] = key;
    match parity {
        Parity::Even => WedgeMonomial::canonical(x, y, z).expect("wedge key is strict").0.index(),
        Parity::Odd => SymMonomial::canonical(x, y, z).index(),
    }
}

fn span_rank(n: u64, parity: Parity, inputs: impl Iterator<Item = [i64; 3]>) -> usize {
    let width = match parity {
        Parity::Even => WedgeMonomial::count(n as usize),
        Parity::Odd => SymMonomial::count(n as usize),
    };
    let rows = inputs
        .map(|[a, b, c]| {
            let mut row = vec![0i64; width];
            for (key, coeff) in weight_map(n, a, b, c, parity).terms() {
                row[monomial_column(*key, parity)] = coeff.to_integer().to_i64().expect("coefficients are small integers");
            }
            row
        })
        .filter(|r| r.iter().any(|&v| v != 0))
        .collect();
    rank_of_integer_rows(rows)
}

fn domain(n: u64, parity: Parity, translate_to_zero: bool) -> Vec<[i64; 3]> {
    let n = n as i64;
    let mut out = Vec::new();
    let a_range = if translate_to_zero { 0..1.min(n) } else { 0..n };
    for a in a_range {
        let b_start = if parity == Parity::Even { a + 1 } else { a };
        for b in b_start..n {
            let c_start = if parity == Parity::Even { b + 1 } else { b };
            for c in c_start..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Rank of the span of `W` over all cubic monomials of `C[Z_n]`.
///
/// `W` is translation invariant, so monomials with smallest exponent `0`
/// already span the image. For `n ≤ 12` the full span is also computed and
/// must agree.
pub fn weight_rank(n: u64, parity: Parity) -> usize {
    assert!(n >= 1, "weight_rank needs n >= 1");
    let reduced = span_rank(n, parity, domain(n, parity, true).into_iter());
    if n <= 12 {
        let full = span_rank(n, parity, domain(n, parity, false).into_iter());
        assert_eq!(reduced, full, "translation representatives must span the image");
    }
    reduced
}
