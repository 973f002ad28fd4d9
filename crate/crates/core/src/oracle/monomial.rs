//! Cubic monomials in a basis `0..n` and their dense indexing.

/// `e_x ∧ e_y ∧ e_z` with `x < y < z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeMonomial([u32; 3]);

/// `e_x · e_y · e_z` with `x ≤ y ≤ z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymMonomial([u32; 3]);

fn binom2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

fn binom3(k: u64) -> u64 {
    if k < 3 {
        0
    } else {
        k * (k - 1) * (k - 2) / 6
    }
}

/// Colex rank of a strictly increasing triple.
#[inline]
fn strict_rank(a: u32, b: u32, c: u32) -> usize {
    (a as u64 + binom2(b as u64) + binom3(c as u64)) as usize
}

fn strict_unrank(mut r: u64) -> [u32; 3] {
    let mut c = 2;
    while binom3(c + 1) <= r {
        c += 1;
    }
    r -= binom3(c);
    let mut b = 1;
    while binom2(b + 1) <= r {
        b += 1;
    }
    r -= binom2(b);
    [r as u32, b as u32, c as u32]
}

/// Sorts three entries and returns the parity of the sorting permutation
/// (`true` for odd).
#[inline]
fn sort3(mut t: [u32; 3]) -> ([u32; 3], bool) {
    let mut odd = false;
    if t[0] > t[1] {
        t.swap(0, 1);
        odd = !odd;
    }
    if t[1] > t[2] {
        t.swap(1, 2);
        odd = !odd;
    }
    if t[0] > t[1] {
        t.swap(0, 1);
        odd = !odd;
    }
    (t, odd)
}

impl WedgeMonomial {
    /// Canonical form of `e_x ∧ e_y ∧ e_z`: the sorted monomial and whether
    /// sorting flipped the sign, or `None` when two indices coincide.
    #[inline]
    pub fn canonical(x: u32, y: u32, z: u32) -> Option<(Self, bool)> {
        let (t, odd) = sort3([x, y, z]);
        (t[0] < t[1] && t[1] < t[2]).then_some((Self(t), odd))
    }

    pub fn indices(&self) -> [u32; 3] {
        self.0
    }

    /// Number of wedge monomials on `n` basis vectors.
    pub fn count(n: usize) -> usize {
        binom3(n as u64) as usize
    }

    #[inline]
    pub fn index(&self) -> usize {
        strict_rank(self.0[0], self.0[1], self.0[2])
    }

    pub fn from_index(i: usize) -> Self {
        Self(strict_unrank(i as u64))
    }
}

impl SymMonomial {
    #[inline]
    pub fn canonical(x: u32, y: u32, z: u32) -> Self {
        Self(sort3([x, y, z]).0)
    }

    pub fn indices(&self) -> [u32; 3] {
        self.0
    }

    /// Number of symmetric monomials on `n` basis vectors.
    pub fn count(n: usize) -> usize {
        binom3(n as u64 + 2) as usize
    }

    #[inline]
    pub fn index(&self) -> usize {
        strict_rank(self.0[0], self.0[1] + 1, self.0[2] + 2)
    }

    pub fn from_index(i: usize) -> Self {
        let [a, b, c] = strict_unrank(i as u64);
        Self([a, b - 1, c - 2])
    }
}
