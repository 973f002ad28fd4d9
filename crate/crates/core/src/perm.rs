//! Invariant dimensions from permutation characters.
//!
//! `Γ = (π×π)⋊Z₂` acts on the basis `π` of `C[π]`: `(g, h)` sends
//! `x ↦ g x h⁻¹`, and the twisted element `τ·(g, h)` sends `x ↦ h x⁻¹ g⁻¹`
//! (apply `(g, h)`, then invert). Every element of `Γ` is therefore a basis
//! permutation, its character on `C[π]` is its fixed-point count, and on
//! `Ker ε` it is one less.
//!
//! The dimension of the invariants of `Λ³W` or `Sym³W` is the average over
//! `Γ` of the cube character
//! `(χ(σ)³ ∓ 3 χ(σ²) χ(σ) + 2 χ(σ³)) / 6`, where `σ²` and `σ³` are obtained
//! by composing `σ` with itself.

use num::{BigInt, BigRational, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::group::{ConjugacyData, GroupTable};
use crate::{ModuleChoice, Parity, SymmetryChoice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("internal error: invariant dimension {0} is not a nonnegative integer")]
    NonIntegralDimension(String),
    #[error("internal error: twisted coset sum {direct} disagrees with the simplified sum {simplified}")]
    SimplificationMismatch { direct: String, simplified: String },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// An element of `(π×π)⋊Z₂`: `(g, h)` when untwisted, `τ·(g, h)` when
/// twisted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CosetElement {
    pub twisted: bool,
    pub g: usize,
    pub h: usize,
}

impl CosetElement {
    pub fn untwisted(g: usize, h: usize) -> Self {
        Self { twisted: false, g, h }
    }

    pub fn twisted(g: usize, h: usize) -> Self {
        Self { twisted: true, g, h }
    }

    pub fn identity(group: &GroupTable) -> Self {
        Self::untwisted(group.identity(), group.identity())
    }

    /// `self ∘ other`, using `τ (g, h) τ = (h, g)`.
    pub fn compose(self, other: Self, group: &GroupTable) -> Self {
        let m = |x, y| group.mul(x, y);
        let (a, b, c, d) = (self.g, self.h, other.g, other.h);
        match (self.twisted, other.twisted) {
            (false, false) => Self::untwisted(m(a, c), m(b, d)),
            (false, true) => Self::twisted(m(b, c), m(a, d)),
            (true, false) => Self::twisted(m(a, c), m(b, d)),
            (true, true) => Self::untwisted(m(b, c), m(a, d)),
        }
    }

    /// `self^k` by repeated composition.
    pub fn power(self, k: u32, group: &GroupTable) -> Self {
        (0..k).fold(Self::identity(group), |acc, _| acc.compose(self, group))
    }
}

/// Image of the basis element `x` under `σ`.
#[inline]
pub fn act(group: &GroupTable, sigma: CosetElement, x: usize) -> usize {
    let y = group.mul(group.mul(sigma.g, x), group.inv(sigma.h));
    if sigma.twisted {
        group.inv(y)
    } else {
        y
    }
}

/// The permutation of `π` induced by `σ`.
pub fn permutation(group: &GroupTable, sigma: CosetElement) -> Vec<usize> {
    (0..group.order()).map(|x| act(group, sigma, x)).collect()
}

/// Number of basis elements fixed by `σ`: the permutation character of
/// `C[π]` at `σ`.
pub fn fixed_points(group: &GroupTable, sigma: CosetElement) -> usize {
    (0..group.order()).filter(|&x| act(group, sigma, x) == x).count()
}

/// `(c1³ ∓ 3 c2 c1 + 2 c3) / 6`; minus for `Even`, plus for `Odd`.
pub fn cube_character(
    c1: &BigRational,
    c2: &BigRational,
    c3: &BigRational,
    parity: Parity,
) -> BigRational {
    let three = BigRational::from_integer(3.into());
    let two = BigRational::from_integer(2.into());
    let cube = c1 * c1 * c1;
    let middle = three * c2 * c1;
    let sum = match parity {
        Parity::Even => cube - middle,
        Parity::Odd => cube + middle,
    };
    (sum + two * c3) / BigRational::from_integer(6.into())
}

/// Six times the cube character, on machine integers.
#[inline]
fn cube_numerator(c1: i64, c2: i64, c3: i64, parity: Parity) -> i128 {
    let (c1, c2, c3) = (c1 as i128, c2 as i128, c3 as i128);
    c1 * c1 * c1 + parity.middle_sign() as i128 * 3 * c2 * c1 + 2 * c3
}

fn shift(module: ModuleChoice) -> i64 {
    match module {
        ModuleChoice::GroupAlgebra => 0,
        ModuleChoice::AugKernel => 1,
    }
}

/// Six times the cube character of `σ` on `W`, with `σ²` and `σ³` composed
/// explicitly.
fn element_term(group: &GroupTable, sigma: CosetElement, module: ModuleChoice, parity: Parity) -> i128 {
    let sigma2 = sigma.compose(sigma, group);
    let sigma3 = sigma2.compose(sigma, group);
    let chi = |s| fixed_points(group, s) as i64 - shift(module);
    cube_numerator(chi(sigma), chi(sigma2), chi(sigma3), parity)
}

/// Tuning for [`dim_invariants_perm_with`].
#[derive(Debug, Clone, Default)]
pub struct PermOptions {
    /// Collapse the untwisted double sum to class pairs and the twisted sum
    /// to classes of `hg`. Exact; off by default.
    pub class_pairs: bool,
    /// Worker cap; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, PermError> {
    match threads {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| PermError::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Sums per-row machine integers into a big integer in row order.
fn reduce(rows: Vec<i128>) -> BigInt {
    rows.into_iter().fold(BigInt::zero(), |acc, r| acc + BigInt::from(r))
}

/// `Σ_{g,h}` of six times the cube character over the untwisted coset.
fn untwisted_sum(group: &GroupTable, module: ModuleChoice, parity: Parity, opts: &PermOptions) -> BigInt {
    let n = group.order();
    if opts.class_pairs {
        let cd = ConjugacyData::compute(group);
        let (reps, sizes) = (cd.reps(), cd.sizes());
        let rows = (0..reps.len())
            .into_par_iter()
            .map(|c| {
                (0..reps.len())
                    .map(|d| {
                        let sigma = CosetElement::untwisted(reps[c], reps[d]);
                        (sizes[c] * sizes[d]) as i128 * element_term(group, sigma, module, parity)
                    })
                    .sum()
            })
            .collect();
        reduce(rows)
    } else {
        let rows = (0..n)
            .into_par_iter()
            .map(|g| {
                (0..n)
                    .map(|h| element_term(group, CosetElement::untwisted(g, h), module, parity))
                    .sum()
            })
            .collect();
        reduce(rows)
    }
}

/// `Σ_{g,h}` over the twisted coset, composing each `τ·(g, h)` directly.
fn twisted_sum_direct(group: &GroupTable, module: ModuleChoice, parity: Parity) -> BigInt {
    let n = group.order();
    let rows = (0..n)
        .into_par_iter()
        .map(|g| {
            (0..n)
                .map(|h| element_term(group, CosetElement::twisted(g, h), module, parity))
                .sum()
        })
        .collect();
    reduce(rows)
}

/// The twisted coset sum collapsed to a single sum over `y = hg`.
///
/// `τ·(g, h)` is conjugate to `τ·(e, hg)`, its square is `(hg, gh)` and its
/// cube is `τ·(ghg, hgh)`. Taking `g = e`, `h = y` the three characters are
/// the fixed counts of `τ·(e, y)`, `(y, y)` and `τ·(y, y²)`, each entering
/// `|π|` times. With `classes`, `y` further runs over class representatives.
fn twisted_sum_simplified(
    group: &GroupTable,
    module: ModuleChoice,
    parity: Parity,
    classes: Option<&ConjugacyData>,
) -> BigInt {
    let e = group.identity();
    let term = |y: usize| {
        let chi = |s| fixed_points(group, s) as i64 - shift(module);
        let c1 = chi(CosetElement::twisted(e, y));
        let c2 = chi(CosetElement::untwisted(y, y));
        let c3 = chi(CosetElement::twisted(y, group.mul(y, y)));
        cube_numerator(c1, c2, c3, parity)
    };
    let inner: i128 = match classes {
        Some(cd) => cd
            .reps()
            .iter()
            .zip(cd.sizes())
            .map(|(&r, &s)| s as i128 * term(r))
            .sum(),
        None => (0..group.order()).map(term).sum(),
    };
    BigInt::from(inner) * BigInt::from(group.order())
}

fn average(sum: BigInt, count: usize) -> BigRational {
    BigRational::new(sum, BigInt::from(6) * BigInt::from(count))
}

fn to_dimension(value: &BigRational) -> Result<u64, PermError> {
    if !value.is_integer() {
        return Err(PermError::NonIntegralDimension(value.to_string()));
    }
    value
        .to_integer()
        .to_u64()
        .ok_or_else(|| PermError::NonIntegralDimension(value.to_string()))
}

/// Average of the cube character over the twisted coset `τ·(π×π)` alone.
///
/// Evaluated twice, by direct composition over all `|π|²` coset elements and
/// by the single-sum reduction; a disagreement is reported as
/// [`PermError::SimplificationMismatch`].
pub fn twisted_coset_average(
    group: &GroupTable,
    module: ModuleChoice,
    parity: Parity,
) -> Result<BigRational, PermError> {
    let direct = twisted_sum_direct(group, module, parity);
    let simplified = twisted_sum_simplified(group, module, parity, None);
    if direct != simplified {
        return Err(PermError::SimplificationMismatch {
            direct: direct.to_string(),
            simplified: simplified.to_string(),
        });
    }
    Ok(average(direct, group.order() * group.order()))
}

/// Exact components of the permutation-character average.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermBreakdown {
    /// Average over `π×π`.
    pub pi_pi: BigRational,
    /// Average over `τ·(π×π)`.
    pub twisted: BigRational,
    /// Average over all of `Γ`: `(pi_pi + twisted) / 2`.
    pub full: BigRational,
}

pub fn perm_breakdown(
    group: &GroupTable,
    module: ModuleChoice,
    parity: Parity,
    opts: &PermOptions,
) -> Result<PermBreakdown, PermError> {
    with_pool(opts.threads, || {
        let n2 = group.order() * group.order();
        let untwisted = untwisted_sum(group, module, parity, opts);
        let twisted = if opts.class_pairs {
            let cd = ConjugacyData::compute(group);
            twisted_sum_simplified(group, module, parity, Some(&cd))
        } else {
            let direct = twisted_sum_direct(group, module, parity);
            let simplified = twisted_sum_simplified(group, module, parity, None);
            if direct != simplified {
                return Err(PermError::SimplificationMismatch {
                    direct: direct.to_string(),
                    simplified: simplified.to_string(),
                });
            }
            direct
        };
        Ok(PermBreakdown {
            pi_pi: average(untwisted.clone(), n2),
            twisted: average(twisted.clone(), n2),
            full: average(untwisted + twisted, 2 * n2),
        })
    })?
}

/// Dimension of the invariants of `Λ³W` (even) or `Sym³W` (odd) under the
/// chosen symmetry group.
pub fn dim_invariants_perm(
    group: &GroupTable,
    module: ModuleChoice,
    parity: Parity,
    symmetry: SymmetryChoice,
) -> Result<u64, PermError> {
    dim_invariants_perm_with(group, module, parity, symmetry, &PermOptions::default())
}

pub fn dim_invariants_perm_with(
    group: &GroupTable,
    module: ModuleChoice,
    parity: Parity,
    symmetry: SymmetryChoice,
    opts: &PermOptions,
) -> Result<u64, PermError> {
    match symmetry {
        SymmetryChoice::PiPi => {
            let sum = with_pool(opts.threads, || untwisted_sum(group, module, parity, opts))?;
            to_dimension(&average(sum, group.order() * group.order()))
        }
        SymmetryChoice::Full => to_dimension(&perm_breakdown(group, module, parity, opts)?.full),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{battery, make_sl2};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn act_examples() {
        let z5 = GroupTable::cyclic(5).unwrap();
        let id = CosetElement::identity(&z5);
        assert!((0..5).all(|x| act(&z5, id, x) == x));
        assert_eq!(act(&z5, CosetElement::twisted(0, 0), 2), 3);
        let s3 = crate::group::symmetric3();
        for g in 0..6 {
            for h in 0..6 {
                let sigma = CosetElement::untwisted(g, h);
                assert_eq!(act(&s3, sigma, s3.identity()), s3.mul(g, s3.inv(h)));
            }
        }
    }

    #[test]
    fn composition_matches_permutation_product() {
        let s3 = crate::group::symmetric3();
        let all: Vec<CosetElement> = (0..6)
            .flat_map(|g| (0..6).flat_map(move |h| [CosetElement::untwisted(g, h), CosetElement::twisted(g, h)]))
            .collect();
        for &a in &all {
            let pa = permutation(&s3, a);
            for &b in &all {
                let pb = permutation(&s3, b);
                let composed: Vec<usize> = pb.iter().map(|&x| pa[x]).collect();
                assert_eq!(permutation(&s3, a.compose(b, &s3)), composed);
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let sl2 = make_sl2(5).unwrap();
        assert_eq!(fixed_points(&sl2, CosetElement::identity(&sl2)), 120);
        let z5 = GroupTable::cyclic(5).unwrap();
        assert_eq!(fixed_points(&z5, CosetElement::twisted(0, 0)), 1);
        assert_eq!(fixed_points(&z5, CosetElement::untwisted(1, 2)), 0);
    }

    #[test]
    fn fixed_point_identities_brute_force() {
        for b in battery() {
            let g = &b.group;
            let n = g.order();
            let cd = ConjugacyData::compute(g);
            for x in 0..n {
                for y in 0..n {
                    let untw = fixed_points(g, CosetElement::untwisted(x, y));
                    let expected = if cd.class_of(x) == cd.class_of(y) {
                        (0..n).filter(|&z| g.mul(z, x) == g.mul(x, z)).count()
                    } else {
                        0
                    };
                    assert_eq!(untw, expected, "{} untwisted ({x},{y})", b.name);
                    let tw = fixed_points(g, CosetElement::twisted(x, y));
                    let yx = g.mul(y, x);
                    let roots = (0..n).filter(|&z| g.mul(z, z) == yx).count();
                    assert_eq!(tw, roots, "{} twisted ({x},{y})", b.name);
                }
            }
        }
    }

    #[test]
    fn cube_character_examples() {
        let n = q(120);
        assert_eq!(cube_character(&n, &n, &n, Parity::Even), q(280840));
        assert_eq!(cube_character(&q(0), &q(7), &q(0), Parity::Even), q(0));
        assert_eq!(cube_character(&q(0), &q(7), &q(0), Parity::Odd), q(0));
        assert_eq!(cube_character(&q(2), &q(2), &q(2), Parity::Odd), q(4));
        for k in 0..10i64 {
            let got = cube_character(&q(k), &q(k), &q(k), Parity::Even);
            assert_eq!(got, q(k * (k - 1) * (k - 2) / 6));
        }
    }

    #[test]
    fn lens_table_entries() {
        let z = |n| GroupTable::cyclic(n).unwrap();
        use ModuleChoice::*;
        use Parity::*;
        let full = SymmetryChoice::Full;
        assert_eq!(dim_invariants_perm(&z(6), GroupAlgebra, Odd, full).unwrap(), 7);
        assert_eq!(dim_invariants_perm(&z(15), GroupAlgebra, Even, full).unwrap(), 12);
        assert_eq!(dim_invariants_perm(&z(3), AugKernel, Odd, full).unwrap(), 1);
        assert_eq!(dim_invariants_perm(&z(1), GroupAlgebra, Even, full).unwrap(), 0);
    }

    #[test]
    fn twisted_average_small_cases() {
        let z1 = GroupTable::cyclic(1).unwrap();
        let z2 = GroupTable::cyclic(2).unwrap();
        let ga = ModuleChoice::GroupAlgebra;
        assert_eq!(twisted_coset_average(&z1, ga, Parity::Odd).unwrap(), q(1));
        assert_eq!(twisted_coset_average(&z1, ga, Parity::Even).unwrap(), q(0));
        assert_eq!(twisted_coset_average(&z2, ga, Parity::Odd).unwrap(), q(2));
        assert_eq!(twisted_coset_average(&z2, ga, Parity::Even).unwrap(), q(0));
    }

    #[test]
    fn coset_split_and_class_pair_option() {
        for b in battery() {
            for module in ModuleChoice::BOTH {
                for parity in Parity::BOTH {
                    let plain = perm_breakdown(&b.group, module, parity, &PermOptions::default()).unwrap();
                    let pipi = dim_invariants_perm(&b.group, module, parity, SymmetryChoice::PiPi).unwrap();
                    assert_eq!(plain.pi_pi, q(pipi as i64));
                    assert_eq!(plain.full, (&plain.pi_pi + &plain.twisted) / q(2));
                    let twisted = twisted_coset_average(&b.group, module, parity).unwrap();
                    assert_eq!(plain.twisted, twisted);
                    let fast = PermOptions { class_pairs: true, threads: None };
                    assert_eq!(perm_breakdown(&b.group, module, parity, &fast).unwrap(), plain);
                }
            }
        }
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let g = make_sl2(3).unwrap();
        let reference = perm_breakdown(&g, ModuleChoice::AugKernel, Parity::Odd, &PermOptions::default()).unwrap();
        for threads in [1, 2, 5] {
            let opts = PermOptions { class_pairs: false, threads: Some(threads) };
            assert_eq!(perm_breakdown(&g, ModuleChoice::AugKernel, Parity::Odd, &opts).unwrap(), reference);
        }
    }

    #[test]
    fn augmentation_identities_on_battery() {
        for b in battery() {
            let g = &b.group;
            let orbits = ConjugacyData::compute(g).inversion(g).orbit_count as u64;
            let d = |m, p| dim_invariants_perm(g, m, p, SymmetryChoice::Full).unwrap();
            use ModuleChoice::*;
            assert_eq!(d(GroupAlgebra, Parity::Even), d(AugKernel, Parity::Even), "{}", b.name);
            assert_eq!(d(GroupAlgebra, Parity::Odd) - d(AugKernel, Parity::Odd), orbits, "{}", b.name);
        }
    }
}
