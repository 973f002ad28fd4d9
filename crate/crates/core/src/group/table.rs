use std::fmt;

use super::GroupError;

/// Largest order accepted by the product constructor.
pub const MAX_ORDER: usize = 1 << 20;

/// Orders up to this bound get an exhaustive associativity check; above it
/// the check is sampled.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;

/// A finite group stored as a dense Cayley table over indices `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl GroupTable {
    /// The cyclic group `Z_n` with `i * j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let mut mul = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mul.push(((i + j) % n) as u32);
            }
        }
        let inv = (0..n).map(|i| ((n - i) % n) as u32).collect();
        Ok(Self {
            order: n,
            mul,
            inv,
            identity: 0,
            labels: None,
        })
    }

    /// Validates an arbitrary square table and derives identity and inverses.
    ///
    /// Fails with the first violated axiom: a bad entry, a row or column that
    /// is not a permutation, a missing identity or inverse, or an
    /// associativity failure at a witness triple.
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row: i, col: j, value: v });
                }
                mul.push(v as u32);
            }
        }
        Self::from_flat(n, mul, None)
    }

    pub(crate) fn from_flat(
        n: usize,
        mul: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        debug_assert_eq!(mul.len(), n * n);
        let at = |x: usize, y: usize| mul[x * n + y] as usize;

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;

        let mut inv = vec![0u32; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| at(x, y) == identity)
                .filter(|&y| at(y, x) == identity)
                .ok_or(GroupError::MissingInverse { element: x })?;
            inv[x] = y as u32;
        }

        let group = Self {
            order: n,
            mul,
            inv,
            identity: identity as u32,
            labels,
        };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order;
        let check = |x: usize, y: usize, z: usize| {
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                Err(GroupError::NotAssociative { x, y, z })
            } else {
                Ok(())
            }
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        check(x, y, z)?;
                    }
                }
            }
        } else {
            // Deterministic xorshift sampling: 10 n^2 triples.
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15 ^ n as u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            for _ in 0..10 * n * n {
                let (x, y, z) = (next(), next(), next());
                check(x, y, z)?;
            }
        }
        Ok(())
    }

    /// Componentwise product; the pair `(i, j)` is encoded as `i * |H| + j`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<Self, GroupError> {
        let (a, b) = (g.order, h.order);
        let n = a
            .checked_mul(b)
            .filter(|&n| n <= MAX_ORDER)
            .ok_or(GroupError::TooLarge(a.saturating_mul(b)))?;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (x1, x2) = (x / b, x % b);
            for y in 0..n {
                let (y1, y2) = (y / b, y % b);
                mul.push((g.mul(x1, y1) * b + h.mul(x2, y2)) as u32);
            }
        }
        let inv = (0..n)
            .map(|x| (g.inv(x / b) * b + h.inv(x % b)) as u32)
            .collect();
        let labels = match (&g.labels, &h.labels) {
            (None, None) => None,
            _ => Some(
                (0..n)
                    .map(|x| format!("({}, {})", g.label(x / b), h.label(x % b)))
                    .collect(),
            ),
        };
        Ok(Self {
            order: n,
            mul,
            inv,
            identity: (g.identity() * b + h.identity()) as u32,
            labels,
        })
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// `g^k` by repeated squaring; `pow(g, 0)` is the identity.
    pub fn pow(&self, g: usize, mut k: u64) -> usize {
        let mut result = self.identity();
        let mut base = g;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    /// `h g h^-1`.
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Largest element order.
    pub fn exponent(&self) -> usize {
        let orders = (0..self.order).map(|g| self.element_order(g));
        orders.fold(1, num::integer::lcm)
    }

    /// Display label: the stored label when present, else the index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Rows of the multiplication table, for serialization.
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    /// The subgroup generated by `gens`, as a membership mask.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        let mut stack = vec![self.identity()];
        member[self.identity()] = true;
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        member
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.generated_subgroup(gens).iter().all(|&m| m)
    }

    /// A generating set built greedily, adding the smallest element not yet
    /// in the subgroup generated so far.
    pub fn greedy_generators(&self) -> Vec<usize> {
        self.greedy_generators_in((0..self.order).collect::<Vec<_>>())
    }

    /// Like [`greedy_generators`](Self::greedy_generators) but scanning from
    /// the largest index down.
    pub fn greedy_generators_rev(&self) -> Vec<usize> {
        self.greedy_generators_in((0..self.order).rev().collect::<Vec<_>>())
    }

    fn greedy_generators_in(&self, candidates: Vec<usize>) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut member = self.generated_subgroup(&gens);
        for g in candidates {
            if !member[g] {
                gens.push(g);
                member = self.generated_subgroup(&gens);
            }
        }
        gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let z1 = GroupTable::cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        let z6 = GroupTable::cyclic(6).unwrap();
        assert_eq!(z6.inv(2), 4);
        assert_eq!(z6.pow(5, 3), 3);
        assert_eq!(z6.pow(5, 0), 0);
        assert!(matches!(GroupTable::cyclic(0), Err(GroupError::EmptyGroup)));
    }

    #[test]
    fn trivial_cayley() {
        let g = GroupTable::from_cayley(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn non_associative_latin_square_is_rejected() {
        // Order-5 loop: identity 0, every element self-inverse, not a group.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match GroupTable::from_cayley(&rows) {
            Err(GroupError::NotAssociative { x, y, z }) => {
                let m = |a: usize, b: usize| rows[a][b];
                assert_ne!(m(m(x, y), z), m(x, m(y, z)));
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn missing_identity_and_bad_entries() {
        assert!(matches!(
            GroupTable::from_cayley(&[vec![1, 1], vec![1, 1]]),
            Err(GroupError::NoIdentity)
        ));
        assert!(matches!(
            GroupTable::from_cayley(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::EntryOutOfRange { .. })
        ));
        assert!(matches!(
            GroupTable::from_cayley(&[vec![0, 1], vec![1]]),
            Err(GroupError::NotSquare { .. })
        ));
        // identity 0, but 1 has no inverse
        assert!(matches!(
            GroupTable::from_cayley(&[vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 0]]),
            Err(GroupError::MissingInverse { element: 1 })
        ));
    }

    #[test]
    fn direct_products() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let v4 = GroupTable::direct_product(&z2, &z2).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
        let z6 = GroupTable::cyclic(6).unwrap();
        assert_eq!(GroupTable::direct_product(&z6, &z6).unwrap().order(), 36);
        // round trip through the validating constructor
        let again = GroupTable::from_cayley(&v4.cayley_rows()).unwrap();
        assert_eq!(again.cayley_rows(), v4.cayley_rows());
    }

    #[test]
    fn generators() {
        let z12 = GroupTable::cyclic(12).unwrap();
        assert_eq!(z12.greedy_generators(), vec![1]);
        let rev = z12.greedy_generators_rev();
        assert!(z12.generates(&rev));
        assert!(!z12.generates(&[2]));
        let z1 = GroupTable::cyclic(1).unwrap();
        assert!(z1.greedy_generators().is_empty());
        assert!(z1.generates(&[]));
    }
}
