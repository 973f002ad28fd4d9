//! Reynolds projector on `Λ³W` / `Sym³W` with explicit matrices.
//!
//! `W = C[π]` uses the basis `π`. `W = Ker ε` uses `f_g = e_g − e_1` for
//! `g ≠ 1`, on which `σ f_g = f_{σg} − f_{σ1}` (with `f_1 = 0`). Cubes use the
//! sorted-monomial bases, so every action matrix is integral.

use num::{BigInt, BigRational};

use crate::group::GroupTable;
use crate::perm::{act, CosetElement};
use crate::{ModuleChoice, Parity, SymmetryChoice};

use super::matrix::{IntMatrix, RationalMatrix};
use super::monomial::{SymMonomial, WedgeMonomial};
use super::orbit::symmetry_generators;
use super::OracleError;

/// Default bound on `|π|` for the dense projector.
pub const DEFAULT_MAX_ORDER: usize = 12;

/// Projector dimensions up to this size are squared directly to check
/// idempotence; above it the check uses invariance under generators.
pub const DIRECT_IDEMPOTENCE_LIMIT: usize = 400;

#[derive(Debug, Clone)]
pub struct ReynoldsOptions {
    pub max_order: usize,
}

impl Default for ReynoldsOptions {
    fn default() -> Self {
        Self { max_order: DEFAULT_MAX_ORDER }
    }
}

/// Sparse integer columns: `columns[j]` lists `(row, coeff)` of the image of
/// basis monomial `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseAction {
    pub dim: usize,
    pub columns: Vec<Vec<(u32, i64)>>,
}

impl SparseAction {
    pub fn to_rational(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, c) in col {
                m.set(i as usize, j, BigRational::from_integer(c.into()));
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(j, col)| col.as_slice() == [(j as u32, 1)])
    }
}

/// Action matrices of every element of `(π×π)⋊Z₂` on a cube of `W`,
/// produced on demand.
pub struct ModuleActions<'a> {
    group: &'a GroupTable,
    module: ModuleChoice,
    parity: Parity,
    elements: Vec<CosetElement>,
    /// Basis letters of `W` as elements of `π`.
    letters: Vec<usize>,
    /// Inverse of `letters`; `None` for the identity in `Ker ε`.
    letter_of: Vec<Option<u32>>,
    dim: usize,
}

pub fn build_module_actions<'a>(
    group: &'a GroupTable,
    module: ModuleChoice,
    parity: Parity,
    opts: &ReynoldsOptions,
) -> Result<ModuleActions<'a>, OracleError> {
    let n = group.order();
    if n > opts.max_order {
        return Err(OracleError::TooLarge { order: n, max: opts.max_order });
    }
    let letters: Vec<usize> = match module {
        ModuleChoice::GroupAlgebra => (0..n).collect(),
        ModuleChoice::AugKernel => (0..n).filter(|&x| x != group.identity()).collect(),
    };
    let mut letter_of = vec![None; n];
    for (i, &x) in letters.iter().enumerate() {
        letter_of[x] = Some(i as u32);
    }
    let dim = match parity {
        Parity::Even => WedgeMonomial::count(letters.len()),
        Parity::Odd => SymMonomial::count(letters.len()),
    };
    let elements = [false, true]
        .into_iter()
        .flat_map(|t| (0..n).flat_map(move |g| (0..n).map(move |h| CosetElement { twisted: t, g, h })))
        .collect();
    Ok(ModuleActions { group, module, parity, elements, letters, letter_of, dim })
}

impl<'a> ModuleActions<'a> {
    /// Dimension of the cube the matrices act on.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `|Γ| = 2|π|²`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[CosetElement] {
        &self.elements
    }

    /// Image of basis letter `i` of `W` as a combination of letters.
    fn letter_image(&self, sigma: CosetElement, i: u32) -> ([(u32, i64); 2], usize) {
        let x = self.letters[i as usize];
        let sx = act(self.group, sigma, x);
        match self.module {
            ModuleChoice::GroupAlgebra => ([(sx as u32, 1), (0, 0)], 1),
            ModuleChoice::AugKernel => {
                let se = act(self.group, sigma, self.group.identity());
                let mut out = [(0, 0); 2];
                let mut k = 0;
                if let Some(l) = self.letter_of[sx] {
                    out[k] = (l, 1);
                    k += 1;
                }
                if let Some(l) = self.letter_of[se] {
                    out[k] = (l, -1);
                    k += 1;
                }
                (out, k)
            }
        }
    }

    fn monomial_letters(&self, j: usize) -> [u32; 3] {
        match self.parity {
            Parity::Even => WedgeMonomial::from_index(j).indices(),
            Parity::Odd => SymMonomial::from_index(j).indices(),
        }
    }

    /// Image of basis monomial `j` under `σ`, merged and without zeros.
    fn column(&self, sigma: CosetElement, j: usize) -> Vec<(u32, i64)> {
        let [x, y, z] = self.monomial_letters(j);
        let (ix, kx) = self.letter_image(sigma, x);
        let (iy, ky) = self.letter_image(sigma, y);
        let (iz, kz) = self.letter_image(sigma, z);
        let mut col: Vec<(u32, i64)> = Vec::with_capacity(8);
        for &(a, ca) in &ix[..kx] {
            for &(b, cb) in &iy[..ky] {
                for &(c, cc) in &iz[..kz] {
                    let coeff = ca * cb * cc;
                    let term = match self.parity {
                        Parity::Even => WedgeMonomial::canonical(a, b, c)
                            .map(|(m, odd)| (m.index() as u32, if odd { -coeff } else { coeff })),
                        Parity::Odd => Some((SymMonomial::canonical(a, b, c).index() as u32, coeff)),
                    };
                    if let Some((row, v)) = term {
                        match col.iter_mut().find(|(r, _)| *r == row) {
                            Some(entry) => entry.1 += v,
                            None => col.push((row, v)),
                        }
                    }
                }
            }
        }
        col.retain(|&(_, v)| v != 0);
        col.sort_unstable();
        col
    }

    pub fn matrix_for(&self, sigma: CosetElement) -> SparseAction {
        SparseAction {
            dim: self.dim,
            columns: (0..self.dim).map(|j| self.column(sigma, j)).collect(),
        }
    }

    pub fn matrix(&self, k: usize) -> SparseAction {
        self.matrix_for(self.elements[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = SparseAction> + '_ {
        self.elements.iter().map(|&s| self.matrix_for(s))
    }

    /// `Σ_σ M_σ`, i.e. `|Γ|` times the projector.
    pub fn summed(&self) -> IntMatrix {
        let mut total = IntMatrix::zeros(self.dim);
        for &sigma in &self.elements {
            for j in 0..self.dim {
                for (i, v) in self.column(sigma, j) {
                    total.add_to(i as usize, j, v);
                }
            }
        }
        total
    }
}

/// How idempotence was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdempotenceCheck {
    /// `P·P = P` computed entrywise.
    Direct,
    /// `M_s P = P` for every generator `s` of `Γ`, which with `P` the group
    /// average gives `P·P = P`.
    Generators,
}

#[derive(Debug, Clone)]
pub struct ReynoldsReport {
    /// `|Γ|·P`.
    pub scaled: IntMatrix,
    pub group_size: usize,
    pub rank: usize,
    pub trace: BigRational,
    pub check: IdempotenceCheck,
}

impl ReynoldsReport {
    pub fn projector(&self) -> RationalMatrix {
        RationalMatrix::from_integer_rows(&self.scaled, &BigInt::from(self.group_size))
    }
}

fn check_direct(n_mat: &IntMatrix, scale: i128) -> bool {
    let d = n_mat.dim();
    for i in 0..d {
        let row = n_mat.row(i);
        let mut acc = vec![0i128; d];
        for (k, &a) in row.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in n_mat.row(k).iter().enumerate() {
                acc[j] += a as i128 * b as i128;
            }
        }
        if acc.iter().zip(row).any(|(&x, &y)| x != scale * y as i128) {
            return false;
        }
    }
    true
}

fn check_generators(actions: &ModuleActions<'_>, n_mat: &IntMatrix) -> bool {
    let gens = actions.group.greedy_generators();
    let d = n_mat.dim();
    for s in symmetry_generators(actions.group, &gens, SymmetryChoice::Full) {
        let m = actions.matrix_for(s);
        // (M N)[r] = Σ_k M[r][k] N[k]
        let mut out = IntMatrix::zeros(d);
        for (k, col) in m.columns.iter().enumerate() {
            let src = n_mat.row(k);
            for &(r, c) in col {
                for (j, &v) in src.iter().enumerate() {
                    if v != 0 {
                        out.add_to(r as usize, j, c * v);
                    }
                }
            }
        }
        if out != *n_mat {
            return false;
        }
    }
    true
}

/// Builds `P = (1/|Γ|) Σ M_σ`, checks `P² = P` and `rank P = trace P`.
pub fn reynolds_projector(
    group: &GroupTable,
    module: ModuleChoice,
    parity: Parity,
    opts: &ReynoldsOptions,
) -> Result<ReynoldsReport, OracleError> {
    let actions = build_module_actions(group, module, parity, opts)?;
    let scaled = actions.summed();
    let group_size = actions.len();
    let check = if scaled.dim() <= DIRECT_IDEMPOTENCE_LIMIT {
        if !check_direct(&scaled, group_size as i128) {
            return Err(OracleError::ProjectorNotIdempotent);
        }
        IdempotenceCheck::Direct
    } else {
        if !check_generators(&actions, &scaled) {
            return Err(OracleError::ProjectorNotIdempotent);
        }
        IdempotenceCheck::Generators
    };
    let rank = scaled.rank();
    let trace = BigRational::new(BigInt::from(scaled.trace()), BigInt::from(group_size));
    if trace != BigRational::from_integer(rank.into()) {
        return Err(OracleError::RankTraceMismatch { rank, trace: trace.to_string() });
    }
    Ok(ReynoldsReport { scaled, group_size, rank, trace, check })
}

/// Invariant dimension as the rank of the Reynolds projector.
pub fn dim_invariants_reynolds(
    group: &GroupTable,
    module: ModuleChoice,
    parity: Parity,
) -> Result<u64, OracleError> {
    dim_invariants_reynolds_with(group, module, parity, &ReynoldsOptions::default())
}

pub fn dim_invariants_reynolds_with(
    group: &GroupTable,
    module: ModuleChoice,
    parity: Parity,
    opts: &ReynoldsOptions,
) -> Result<u64, OracleError> {
    Ok(reynolds_projector(group, module, parity, opts)?.rank as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> GroupTable {
        GroupTable::cyclic(n).unwrap()
    }

    #[test]
    fn action_shapes() {
        let z2 = z(2);
        let a = build_module_actions(&z2, ModuleChoice::GroupAlgebra, Parity::Odd, &Default::default()).unwrap();
        assert_eq!((a.len(), a.dim()), (8, 4));
        let z4 = z(4);
        let b = build_module_actions(&z4, ModuleChoice::AugKernel, Parity::Even, &Default::default()).unwrap();
        assert_eq!((b.len(), b.dim()), (32, 1));
        assert!(b.matrix(0).is_identity());
        assert!(a.matrix(0).is_identity());
    }

    #[test]
    fn matrices_form_a_representation() {
        let s3 = crate::group::symmetric3();
        for module in ModuleChoice::BOTH {
            for parity in Parity::BOTH {
                let acts = build_module_actions(&s3, module, parity, &Default::default()).unwrap();
                let els = acts.elements().to_vec();
                for &a in els.iter().step_by(5) {
                    for &b in els.iter().step_by(7) {
                        let ab = acts.matrix_for(a.compose(b, &s3)).to_rational();
                        let prod = acts.matrix_for(a).to_rational().mul(&acts.matrix_for(b).to_rational());
                        assert_eq!(ab, prod);
                    }
                }
            }
        }
    }

    #[test]
    fn lens_kernel_values() {
        let ker = ModuleChoice::AugKernel;
        assert_eq!(dim_invariants_reynolds(&z(3), ker, Parity::Odd).unwrap(), 1);
        assert_eq!(dim_invariants_reynolds(&z(6), ker, Parity::Odd).unwrap(), 3);
        assert_eq!(dim_invariants_reynolds(&z(5), ker, Parity::Even).unwrap(), 0);
    }

    #[test]
    fn size_guard() {
        let z13 = z(13);
        assert!(matches!(
            dim_invariants_reynolds(&z13, ModuleChoice::GroupAlgebra, Parity::Odd),
            Err(OracleError::TooLarge { order: 13, max: 12 })
        ));
    }

    #[test]
    fn projector_is_idempotent_with_trace_equal_rank() {
        let g = z(4);
        let r = reynolds_projector(&g, ModuleChoice::GroupAlgebra, Parity::Odd, &Default::default()).unwrap();
        let p = r.projector();
        assert_eq!(p.mul(&p), p);
        assert_eq!(p.rank(), r.rank);
        assert_eq!(p.trace(), r.trace);
        assert_eq!(r.check, IdempotenceCheck::Direct);
    }

    #[test]
    fn both_idempotence_checks_agree() {
        let g = z(6);
        let acts = build_module_actions(&g, ModuleChoice::AugKernel, Parity::Odd, &Default::default()).unwrap();
        let n = acts.summed();
        assert!(check_direct(&n, acts.len() as i128));
        assert!(check_generators(&acts, &n));
        // a perturbed matrix fails both
        let mut bad = n.clone();
        bad.add_to(0, 1, 1);
        assert!(!check_direct(&bad, acts.len() as i128));
        assert!(!check_generators(&acts, &bad));
    }
}
