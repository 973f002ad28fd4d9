use num::{BigRational, ToPrimitive, Zero};

use super::{CharTable, ChartabError, QuadValue};
use crate::{Convention, ModuleChoice, Parity};

/// Frobenius–Schur indicator `(1/|G|) Σ_c |c| χ_i(c²)`.
pub fn fs_indicator(table: &CharTable, irrep: usize) -> Result<i8, ChartabError> {
    let d = table.radicand();
    let sum = (0..table.num_classes()).fold(QuadValue::zero(d), |acc, c| {
        acc + table.value(irrep, table.power2()[c]).scale(&table.size_q(c))
    });
    let order = BigRational::from_integer(table.group_order().into());
    let value = sum.scale(&(BigRational::from_integer(1.into()) / order));
    match value.to_integer().and_then(|n| n.to_i8()) {
        Some(v @ -1..=1) => Ok(v),
        _ => Err(ChartabError::IndicatorOutOfRange { irrep, value: value.to_string() }),
    }
}

pub fn fs_indicators(table: &CharTable) -> Result<Vec<i8>, ChartabError> {
    (0..table.num_classes()).map(|i| fs_indicator(table, i)).collect()
}

fn cube_combination(x: &QuadValue, x2: &QuadValue, x3: &QuadValue, parity: Parity) -> QuadValue {
    let middle = (x2 * x).scale(&BigRational::from_integer(3.into()));
    let cube = &(x * x) * x;
    let twice = x3.scale(&BigRational::from_integer(2.into()));
    match parity {
        Parity::Even => &(&cube - &middle) + &twice,
        Parity::Odd => &(&cube + &middle) + &twice,
    }
}

fn trivial_shift(module: ModuleChoice, d: u64) -> QuadValue {
    match module {
        ModuleChoice::GroupAlgebra => QuadValue::zero(d),
        ModuleChoice::AugKernel => QuadValue::one(d),
    }
}

fn rational_result(value: QuadValue, what: &str) -> Result<BigRational, ChartabError> {
    value
        .to_rational()
        .ok_or_else(|| ChartabError::NonRationalSum(format!("{what} = {value}")))
}

/// `Σ_i χ_i(c) χ_i(c')`: the character of `W` at the class pair.
fn pair_character(table: &CharTable, c: usize, c2: usize) -> QuadValue {
    (0..table.num_classes()).fold(QuadValue::zero(table.radicand()), |acc, i| {
        acc + table.value(i, c) * table.value(i, c2)
    })
}

/// Invariant dimension under `π×π` alone, summed over class pairs:
/// `(1/(6|G|²)) Σ_{c,c'} |c||c'| (χ³ ∓ 3 χ(·²) χ + 2 χ(·³))` with
/// `χ(g, h) = Σ_i χ_i(g) χ_i(h)`.
pub fn diagonal_part(table: &CharTable, module: ModuleChoice, parity: Parity) -> Result<BigRational, ChartabError> {
    let d = table.radicand();
    let k = table.num_classes();
    let shift = trivial_shift(module, d);
    let (p2, p3) = (table.power2(), table.power3());
    let mut total = QuadValue::zero(d);
    for c in 0..k {
        for c2 in 0..k {
            let x = &pair_character(table, c, c2) - &shift;
            let x2 = &pair_character(table, p2[c], p2[c2]) - &shift;
            let x3 = &pair_character(table, p3[c], p3[c2]) - &shift;
            let weight = table.size_q(c) * table.size_q(c2);
            total = total + cube_combination(&x, &x2, &x3, parity).scale(&weight);
        }
    }
    let order = table.group_order();
    let norm = BigRational::from_integer((6 * order * order).into());
    Ok(rational_result(total, "diagonal sum")? / norm)
}

/// The class functions entering the twisted-coset average.
///
/// `single` is the character of `τ·(e, g)`, `square` that of `(g, g)` and
/// `cube_term` that of `τ·(g, g²)`, each evaluated on class `c`. Under the
/// flip convention `single(c) = Σ_i χ_i(c)`; under inversion, each irrep is
/// weighted by its Frobenius–Schur indicator. `square` involves no `τ` and is
/// the same in both.
#[derive(Debug, Clone)]
pub struct TwistedSums {
    pub single: Vec<QuadValue>,
    pub square: Vec<QuadValue>,
    pub cube_term: Vec<QuadValue>,
}

pub fn twisted_sums(
    table: &CharTable,
    module: ModuleChoice,
    convention: Convention,
) -> Result<TwistedSums, ChartabError> {
    let d = table.radicand();
    let k = table.num_classes();
    let weights: Vec<i64> = match convention {
        Convention::Flip => vec![1; k],
        Convention::Inversion => fs_indicators(table)?.into_iter().map(i64::from).collect(),
    };
    let shift = trivial_shift(module, d);
    let p3 = table.power3();
    let weighted = |c: usize| {
        (0..k).fold(QuadValue::zero(d), |acc, i| {
            acc + table.value(i, c).scale(&BigRational::from_integer(weights[i].into()))
        })
    };
    let single = (0..k).map(|c| &weighted(c) - &shift).collect();
    let square = (0..k)
        .map(|c| &pair_character(table, c, c) - &shift)
        .collect();
    let cube_term = (0..k).map(|c| &weighted(p3[c]) - &shift).collect();
    Ok(TwistedSums { single, square, cube_term })
}

/// Average over the coset `τ·(π×π)`, reduced to one class sum:
/// `(1/(6|G|)) Σ_c |c| (S³ ∓ 3 S₂ S + 2 S₃)`.
pub fn tau_part(
    table: &CharTable,
    module: ModuleChoice,
    parity: Parity,
    convention: Convention,
) -> Result<BigRational, ChartabError> {
    let sums = twisted_sums(table, module, convention)?;
    let d = table.radicand();
    let total = (0..table.num_classes()).fold(QuadValue::zero(d), |acc, c| {
        let term = cube_combination(&sums.single[c], &sums.square[c], &sums.cube_term[c], parity);
        acc + term.scale(&table.size_q(c))
    });
    let norm = BigRational::from_integer((6 * table.group_order()).into());
    Ok(rational_result(total, "twisted sum")? / norm)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartabBreakdown {
    pub diagonal: BigRational,
    pub tau: BigRational,
    pub full: BigRational,
}

pub fn chartab_breakdown(
    table: &CharTable,
    module: ModuleChoice,
    parity: Parity,
    convention: Convention,
) -> Result<ChartabBreakdown, ChartabError> {
    let diagonal = diagonal_part(table, module, parity)?;
    let tau = tau_part(table, module, parity, convention)?;
    let full = (&diagonal + &tau) / BigRational::from_integer(2.into());
    Ok(ChartabBreakdown { diagonal, tau, full })
}

/// `(diagonal_part + tau_part) / 2`, which must be a nonnegative integer.
pub fn dim_invariants_chartab(
    table: &CharTable,
    module: ModuleChoice,
    parity: Parity,
    convention: Convention,
) -> Result<u64, ChartabError> {
    let full = chartab_breakdown(table, module, parity, convention)?.full;
    if !full.is_integer() || full < BigRational::zero() {
        return Err(ChartabError::NonIntegralDimension(full.to_string()));
    }
    full.to_integer()
        .to_u64()
        .ok_or_else(|| ChartabError::NonIntegralDimension(full.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ModuleChoice::*;
    use Parity::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn indicators() {
        let t = CharTable::builtin_sl2f5();
        assert_eq!(fs_indicator(&t, 0).unwrap(), 1);
        // explicit class sum for A_2: (2 + 2 - 60 - 20 - 20 - 24φ - 24φ*) / 120
        let phi = QuadValue::phi();
        let psi = QuadValue::phi_conj();
        let i = |n| QuadValue::integer(n, 5);
        let twelve = BigRational::from_integer(12.into());
        let oracle = i(2) + i(2) + i(-60) + i(-20) + i(-20)
            - phi.scale(&twelve) - psi.scale(&twelve) - phi.scale(&twelve) - psi.scale(&twelve);
        assert_eq!(oracle, i(-120));
        assert_eq!(fs_indicator(&t, 1).unwrap(), -1);
        assert_eq!(fs_indicator(&t, 3).unwrap(), 1);
        assert_eq!(fs_indicators(&t).unwrap(), vec![1, -1, -1, 1, 1, 1, -1, 1, -1]);
    }

    #[test]
    fn diagonal_values() {
        let t = CharTable::builtin_sl2f5();
        assert_eq!(diagonal_part(&t, GroupAlgebra, Even).unwrap(), q(33));
        assert_eq!(diagonal_part(&t, GroupAlgebra, Odd).unwrap(), q(71));
        assert_eq!(diagonal_part(&CharTable::trivial(), GroupAlgebra, Odd).unwrap(), q(1));
    }

    #[test]
    fn flip_tau_values() {
        let t = CharTable::builtin_sl2f5();
        assert_eq!(tau_part(&t, GroupAlgebra, Even, Convention::Flip).unwrap(), q(21));
        assert_eq!(tau_part(&t, GroupAlgebra, Odd, Convention::Flip).unwrap(), q(59));
    }

    #[test]
    fn headline_dimensions() {
        let t = CharTable::builtin_sl2f5();
        let f = |m, p| dim_invariants_chartab(&t, m, p, Convention::Flip).unwrap();
        assert_eq!(f(GroupAlgebra, Even), 27);
        assert_eq!(f(GroupAlgebra, Odd), 65);
        assert_eq!(f(AugKernel, Odd), 56);
        assert_eq!(f(AugKernel, Even), 27);
        assert_eq!(f(GroupAlgebra, Odd) - f(AugKernel, Odd), 9);
    }

    #[test]
    fn kernel_equals_shifted_group_algebra_sums() {
        let t = CharTable::builtin_sl2f5();
        for conv in [Convention::Flip, Convention::Inversion] {
            let full = twisted_sums(&t, GroupAlgebra, conv).unwrap();
            let ker = twisted_sums(&t, AugKernel, conv).unwrap();
            let one = QuadValue::one(5);
            for c in 0..9 {
                assert_eq!(ker.single[c], &full.single[c] - &one);
                assert_eq!(ker.square[c], &full.square[c] - &one);
                assert_eq!(ker.cube_term[c], &full.cube_term[c] - &one);
            }
        }
    }

    #[test]
    fn trivial_group_all_conventions() {
        let t = CharTable::trivial();
        for conv in [Convention::Flip, Convention::Inversion] {
            assert_eq!(dim_invariants_chartab(&t, GroupAlgebra, Odd, conv).unwrap(), 1);
            assert_eq!(dim_invariants_chartab(&t, GroupAlgebra, Even, conv).unwrap(), 0);
            assert_eq!(dim_invariants_chartab(&t, AugKernel, Odd, conv).unwrap(), 0);
        }
    }
}
