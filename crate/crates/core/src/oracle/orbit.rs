//! Orbit counting on cubic monomials of `C[π]`.
//!
//! Each generator of the symmetry group sends a monomial to `±` another
//! monomial. A union-find with a sign potential per node tracks, for every
//! node, the sign relating it to its root. For the symmetric cube every orbit
//! spans one invariant. For the exterior cube an orbit contributes only when
//! its signs are consistent; a conflict means some stabilizer element acts by
//! `-1` and the orbit sum vanishes.

use crate::group::GroupTable;
use crate::perm::{act, CosetElement};
use crate::{Parity, SymmetryChoice};

use super::monomial::{SymMonomial, WedgeMonomial};
use super::OracleError;

/// Union-find over `0..n` where each edge carries a sign.
#[derive(Debug, Clone)]
pub struct SignedUnionFind {
    parent: Vec<u32>,
    /// Parity of the sign from a node to its parent.
    flip: Vec<bool>,
    rank: Vec<u8>,
    killed: Vec<bool>,
}

impl SignedUnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            flip: vec![false; n],
            rank: vec![0; n],
            killed: vec![false; n],
        }
    }

    /// Root of `x` and the parity from `x` to it, with path compression.
    pub fn find(&mut self, x: usize) -> (usize, bool) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur] as usize != cur {
            path.push(cur);
            cur = self.parent[cur] as usize;
        }
        let root = cur;
        // Walk back from the node nearest the root, accumulating parities.
        let mut acc = false;
        for &node in path.iter().rev() {
            acc ^= self.flip[node];
            self.flip[node] = acc;
            self.parent[node] = root as u32;
        }
        (root, if path.is_empty() { false } else { self.flip[x] })
    }

    /// Records `e_a = (-1)^odd · e_b`. Returns `false` if this contradicts
    /// earlier relations, in which case the merged class is marked killed.
    pub fn union(&mut self, a: usize, b: usize, odd: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            let consistent = (pa ^ pb) == odd;
            if !consistent {
                self.killed[ra] = true;
            }
            return consistent;
        }
        let rel = pa ^ pb ^ odd;
        let killed = self.killed[ra] || self.killed[rb];
        let (child, root) = if self.rank[ra] < self.rank[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[child] = root as u32;
        self.flip[child] = rel;
        if self.rank[ra] == self.rank[rb] {
            self.rank[root] += 1;
        }
        self.killed[root] = killed;
        true
    }

    pub fn is_root(&self, x: usize) -> bool {
        self.parent[x] as usize == x
    }

    pub fn is_killed_root(&self, x: usize) -> bool {
        self.is_root(x) && self.killed[x]
    }
}

/// The symmetry generators: `(s, e)` and `(e, s)` for each generator `s` of
/// `π`, plus `τ` for the full group.
pub fn symmetry_generators(group: &GroupTable, gens: &[usize], symmetry: SymmetryChoice) -> Vec<CosetElement> {
    let e = group.identity();
    let mut out: Vec<CosetElement> = gens
        .iter()
        .flat_map(|&s| [CosetElement::untwisted(s, e), CosetElement::untwisted(e, s)])
        .collect();
    if symmetry == SymmetryChoice::Full {
        out.push(CosetElement::twisted(e, e));
    }
    out
}

/// Result of an orbit count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCount {
    pub orbits: usize,
    /// Orbits whose stabilizer acts by `-1` (exterior cube only).
    pub sign_killed: usize,
    /// Lexicographically smallest monomial of each surviving orbit.
    pub representatives: Vec<[u32; 3]>,
}

impl OrbitCount {
    pub fn dimension(&self) -> u64 {
        (self.orbits - self.sign_killed) as u64
    }
}

/// Dimension of the invariants in `Λ³C[π]` or `Sym³C[π]` by orbit counting.
pub fn dim_invariants_orbit(
    group: &GroupTable,
    parity: Parity,
    symmetry: SymmetryChoice,
    generators: &[usize],
) -> Result<u64, OracleError> {
    Ok(count_orbits(group, parity, symmetry, generators)?.dimension())
}

pub fn count_orbits(
    group: &GroupTable,
    parity: Parity,
    symmetry: SymmetryChoice,
    generators: &[usize],
) -> Result<OrbitCount, OracleError> {
    if generators.iter().any(|&g| g >= group.order()) || !group.generates(generators) {
        return Err(OracleError::GeneratorsDontGenerate);
    }
    let n = group.order();
    let perms: Vec<Vec<u32>> = symmetry_generators(group, generators, symmetry)
        .into_iter()
        .map(|s| (0..n).map(|x| act(group, s, x) as u32).collect())
        .collect();

    let (size, monomial) = match parity {
        Parity::Even => (WedgeMonomial::count(n), mono_wedge as fn(usize) -> [u32; 3]),
        Parity::Odd => (SymMonomial::count(n), mono_sym as fn(usize) -> [u32; 3]),
    };
    let mut uf = SignedUnionFind::new(size);
    for i in 0..size {
        let [x, y, z] = monomial(i);
        for p in &perms {
            let (a, b, c) = (p[x as usize], p[y as usize], p[z as usize]);
            match parity {
                Parity::Even => {
                    let (m, odd) = WedgeMonomial::canonical(a, b, c)
                        .expect("a permutation keeps distinct indices distinct");
                    uf.union(m.index(), i, odd);
                }
                Parity::Odd => {
                    uf.union(SymMonomial::canonical(a, b, c).index(), i, false);
                }
            }
        }
    }

    let mut orbits = 0;
    let mut sign_killed = 0;
    let mut best: Vec<Option<[u32; 3]>> = vec![None; size];
    for i in 0..size {
        let (root, _) = uf.find(i);
        let m = monomial(i);
        let slot = &mut best[root];
        if slot.map_or(true, |b| m < b) {
            *slot = Some(m);
        }
        if root == i {
            orbits += 1;
            if uf.is_killed_root(i) {
                sign_killed += 1;
            }
        }
    }
    let mut representatives: Vec<[u32; 3]> = (0..size)
        .filter(|&i| uf.is_root(i) && !uf.is_killed_root(i))
        .filter_map(|i| best[i])
        .collect();
    representatives.sort_unstable();
    Ok(OrbitCount { orbits, sign_killed, representatives })
}

fn mono_wedge(i: usize) -> [u32; 3] {
    WedgeMonomial::from_index(i).indices()
}

fn mono_sym(i: usize) -> [u32; 3] {
    SymMonomial::from_index(i).indices()
}
