//! Self-check suites: the SL_2(F_5) fixture data, agreement of the
//! independent methods, and the flip/inversion comparison.

use num::BigRational;
use serde::Serialize;

use crate::chartab::{chartab_breakdown, dim_invariants_chartab, fs_indicators, tau_part, CharTable};
use crate::group::{battery, make_sl2, sl2f5_named_classes, verify_sl2f5_fixture, Sl2Fixture};
use crate::lens::{lens_dims, p3_dp_table};
use crate::oracle::{dim_invariants_orbit, dim_invariants_reynolds_with, ReynoldsOptions};
use crate::perm::{dim_invariants_perm_with, perm_breakdown, twisted_coset_average, PermOptions};
use crate::{ConjugacyData, Convention, GroupTable, ModuleChoice, Parity, SymmetryChoice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Fixtures,
    CrossMethods,
    Conventions,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "fixtures" => Ok(Suite::Fixtures),
            "cross-methods" => Ok(Suite::CrossMethods),
            "conventions" => Ok(Suite::Conventions),
            _ => Err(format!("unknown suite `{s}`, expected one of: all, fixtures, cross-methods, conventions")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// One `(module, parity)` line of the convention comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConventionRow {
    pub module: ModuleChoice,
    pub parity: Parity,
    pub diagonal: String,
    pub flip_tau: String,
    pub flip_dim: u64,
    pub inversion_tau_perm: String,
    pub inversion_tau_chartab: String,
    pub inversion_dim_perm: u64,
    pub inversion_dim_chartab: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndicatorRow {
    pub irrep: usize,
    pub degree: u64,
    pub indicator: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConventionReport {
    pub indicators: Vec<IndicatorRow>,
    pub rows: Vec<ConventionRow>,
    /// Orbit-oracle values for `C[π]`, even then odd, when requested.
    pub orbit_group_algebra: Option<[u64; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conventions: Option<ConventionReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Confirm the inversion-convention `C[π]` values for SL_2(F_5) with
    /// the orbit oracle.
    pub orbit_confirmation: bool,
    /// Size guard for the Reynolds oracle in the cross-method battery.
    pub reynolds_max_order: usize,
    pub threads: Option<usize>,
    pub fixture: Option<Sl2Fixture>,
    pub table: Option<CharTable>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            orbit_confirmation: false,
            reynolds_max_order: 24,
            threads: None,
            fixture: None,
            table: None,
        }
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let passed = got == want;
        let detail = if passed { format!("{got:?}") } else { format!("got {got:?}, expected {want:?}") };
        self.push(name, passed, detail);
    }

    fn fail(&mut self, name: impl Into<String>, err: impl std::fmt::Display) {
        self.push(name, false, err.to_string());
    }
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let mut checks = Checks::default();
    let mut conventions = None;
    if matches!(suite, Suite::All | Suite::Fixtures) {
        fixtures(&mut checks, opts);
    }
    if matches!(suite, Suite::All | Suite::CrossMethods) {
        cross_methods(&mut checks, opts);
    }
    if matches!(suite, Suite::All | Suite::Conventions) {
        conventions = convention_report(&mut checks, opts);
    }
    VerifyReport { suite, checks: checks.0, conventions }
}

fn table_of(opts: &VerifyOptions) -> CharTable {
    opts.table.clone().unwrap_or_else(CharTable::builtin_sl2f5)
}

/// Table columns mapped to computed classes, and the computed power maps
/// read back in table column order.
pub fn sl2f5_power_maps_in_table_order(group: &GroupTable, cd: &ConjugacyData) -> Result<(Vec<usize>, Vec<usize>), crate::GroupError> {
    let named = sl2f5_named_classes(cd)?;
    let column = |c: usize| named.iter().position(|&k| k == c).expect("every class is named");
    let p2 = cd.power_map(group, 2);
    let p3 = cd.power_map(group, 3);
    Ok((
        named.iter().map(|&c| column(p2[c])).collect(),
        named.iter().map(|&c| column(p3[c])).collect(),
    ))
}

fn fixtures(checks: &mut Checks, opts: &VerifyOptions) {
    let group = make_sl2(5).expect("SL_2(F_5) builds");
    let cd = ConjugacyData::compute(&group);
    checks.eq("sl2f5: class count", cd.num_classes(), 9);
    let mut sizes = cd.sizes().to_vec();
    sizes.sort_unstable();
    checks.eq("sl2f5: class sizes", sizes, vec![1, 1, 12, 12, 12, 12, 20, 20, 30]);

    let table = table_of(opts);
    match sl2f5_named_classes(&cd) {
        Ok(named) => {
            let in_order: Vec<u64> = named.iter().map(|&c| cd.sizes()[c] as u64).collect();
            checks.eq("sl2f5: sizes in table order", in_order, table.class_sizes().to_vec());
            match sl2f5_power_maps_in_table_order(&group, &cd) {
                Ok((p2, p3)) => {
                    checks.eq("sl2f5: power-2 map", p2, table.power2().to_vec());
                    checks.eq("sl2f5: power-3 map", p3, table.power3().to_vec());
                }
                Err(e) => checks.fail("sl2f5: power maps", e),
            }
        }
        Err(e) => checks.fail("sl2f5: named classes", e),
    }

    let inv = cd.inversion(&group);
    checks.eq("sl2f5: inversion fixes every class", inv.is_trivial(), true);
    checks.eq("sl2f5: inversion orbits", inv.orbit_count, 9);

    let fixture = opts.fixture.clone().unwrap_or_else(Sl2Fixture::builtin);
    match verify_sl2f5_fixture(&group, &fixture) {
        Ok(rep) => {
            let detail = match rep.mismatches.first() {
                None => format!("{} elements classified", rep.checked),
                Some(m) => format!(
                    "{} of {} elements disagree; first counterexample {}: expected {}, computed {}",
                    rep.mismatches.len(),
                    rep.checked,
                    m.name,
                    m.expected,
                    m.computed
                ),
            };
            checks.push("sl2f5: element classification", rep.mismatches.is_empty(), detail);
        }
        Err(e) => checks.fail("sl2f5: element classification", e),
    }

    match table.validate() {
        Ok(()) => checks.push("character table: orthogonality", true, format!("{} rows", table.num_classes())),
        Err(e) => checks.fail("character table: orthogonality", e),
    }
}

fn cross_methods(checks: &mut Checks, opts: &VerifyOptions) {
    let popts = PermOptions { class_pairs: false, threads: opts.threads };
    let ropts = ReynoldsOptions { max_order: opts.reynolds_max_order };
    for b in battery() {
        let g = &b.group;
        let gens = g.greedy_generators();
        for parity in Parity::BOTH {
            for sym in [SymmetryChoice::PiPi, SymmetryChoice::Full] {
                let perm = dim_invariants_perm_with(g, ModuleChoice::GroupAlgebra, parity, sym, &popts);
                let orbit = dim_invariants_orbit(g, parity, sym, &gens);
                let name = format!("{}: perm = orbit, group-algebra {parity} {sym}", b.name);
                match (perm, orbit) {
                    (Ok(p), Ok(o)) => checks.eq(name, p, o),
                    (Err(e), _) => checks.fail(name, e),
                    (_, Err(e)) => checks.fail(name, e),
                }
            }
            let mut perm_vals = [0u64; 2];
            for (slot, module) in ModuleChoice::BOTH.into_iter().enumerate() {
                let name = format!("{}: perm = reynolds, {module} {parity}", b.name);
                let p = match dim_invariants_perm_with(g, module, parity, SymmetryChoice::Full, &popts) {
                    Ok(p) => p,
                    Err(e) => {
                        checks.fail(name, e);
                        continue;
                    }
                };
                perm_vals[slot] = p;
                if g.order() <= ropts.max_order {
                    match dim_invariants_reynolds_with(g, module, parity, &ropts) {
                        Ok(r) => checks.eq(name, p, r),
                        Err(e) => checks.fail(name, e),
                    }
                }
            }
            let ident = ConjugacyData::compute(g).inversion(g).orbit_count as u64;
            let [ca, ker] = perm_vals;
            match parity {
                Parity::Even => checks.eq(format!("{}: even C[G] = even Ker", b.name), ca, ker),
                Parity::Odd => checks.eq(
                    format!("{}: odd C[G] - odd Ker = inversion orbits", b.name),
                    ca.checked_sub(ker),
                    Some(ident),
                ),
            }
        }
    }

    let table = p3_dp_table(30);
    for n in 1..=15u64 {
        let closed = lens_dims(n).expect("n >= 1").values();
        let g = GroupTable::cyclic(n as usize).expect("cyclic group");
        let mut perm = [0u64; 4];
        let mut ok = true;
        for (slot, (module, parity)) in LENS_COLUMNS.into_iter().enumerate() {
            match dim_invariants_perm_with(&g, module, parity, SymmetryChoice::Full, &popts) {
                Ok(v) => perm[slot] = v,
                Err(e) => {
                    checks.fail(format!("Z{n}: lens row"), e);
                    ok = false;
                }
            }
        }
        let gens = [1 % n as usize];
        let orbit = [Parity::Odd, Parity::Even]
            .map(|p| dim_invariants_orbit(&g, p, SymmetryChoice::Full, &gens).unwrap_or(u64::MAX));
        let dp = [n as i64, n as i64 - 6, n as i64 - 3, n as i64 - 6]
            .map(|m| if m < 0 { 0 } else { table[m as usize] });
        if ok {
            let agree = closed == perm && closed == dp && orbit == [closed[0], closed[1]];
            checks.push(
                format!("Z{n}: lens row"),
                agree,
                format!("closed {closed:?}, p3 table {dp:?}, perm {perm:?}, orbit {orbit:?}"),
            );
        }
    }
}

/// Column order of the lens table.
pub const LENS_COLUMNS: [(ModuleChoice, Parity); 4] = [
    (ModuleChoice::GroupAlgebra, Parity::Odd),
    (ModuleChoice::GroupAlgebra, Parity::Even),
    (ModuleChoice::AugKernel, Parity::Odd),
    (ModuleChoice::AugKernel, Parity::Even),
];

fn rat(q: &BigRational) -> String {
    q.to_string()
}

fn convention_report(checks: &mut Checks, opts: &VerifyOptions) -> Option<ConventionReport> {
    let table = table_of(opts);
    let group = match make_sl2(5) {
        Ok(g) => g,
        Err(e) => {
            checks.fail("conventions: SL_2(F_5)", e);
            return None;
        }
    };
    let nus = match fs_indicators(&table) {
        Ok(v) => v,
        Err(e) => {
            checks.fail("conventions: indicators", e);
            return None;
        }
    };
    checks.eq("conventions: indicator of A_2", nus.get(1).copied(), Some(-1));
    let indicators = nus
        .iter()
        .enumerate()
        .map(|(i, &indicator)| IndicatorRow { irrep: i + 1, degree: table.irrep_dims()[i], indicator })
        .collect();

    let popts = PermOptions { class_pairs: false, threads: opts.threads };
    let mut rows = Vec::new();
    for module in ModuleChoice::BOTH {
        for parity in Parity::BOTH {
            let tag = format!("{module} {parity}");
            let flip = chartab_breakdown(&table, module, parity, Convention::Flip);
            let flip_dim = dim_invariants_chartab(&table, module, parity, Convention::Flip);
            let inv_tab = tau_part(&table, module, parity, Convention::Inversion);
            let inv_dim_tab = dim_invariants_chartab(&table, module, parity, Convention::Inversion);
            let inv_perm = twisted_coset_average(&group, module, parity);
            let breakdown = perm_breakdown(&group, module, parity, &popts);
            let inv_dim_perm = dim_invariants_perm_with(&group, module, parity, SymmetryChoice::Full, &popts);
            let (Ok(flip), Ok(flip_dim), Ok(inv_tab), Ok(inv_dim_tab), Ok(inv_perm), Ok(breakdown), Ok(inv_dim_perm)) =
                (flip, flip_dim, inv_tab, inv_dim_tab, inv_perm, breakdown, inv_dim_perm)
            else {
                checks.push(format!("conventions: {tag}"), false, "evaluation failed");
                continue;
            };
            let expected_flip = match (module, parity) {
                (ModuleChoice::GroupAlgebra, Parity::Even) => 27,
                (ModuleChoice::GroupAlgebra, Parity::Odd) => 65,
                (ModuleChoice::AugKernel, Parity::Even) => 27,
                (ModuleChoice::AugKernel, Parity::Odd) => 56,
            };
            checks.eq(format!("conventions: flip {tag}"), flip_dim, expected_flip);
            checks.eq(format!("conventions: diagonal chartab = perm, {tag}"), rat(&flip.diagonal), rat(&breakdown.pi_pi));
            checks.eq(format!("conventions: inversion tau chartab = perm, {tag}"), rat(&inv_tab), rat(&inv_perm));
            checks.eq(format!("conventions: inversion dim chartab = perm, {tag}"), inv_dim_tab, inv_dim_perm);
            rows.push(ConventionRow {
                module,
                parity,
                diagonal: rat(&flip.diagonal),
                flip_tau: rat(&flip.tau),
                flip_dim,
                inversion_tau_perm: rat(&inv_perm),
                inversion_tau_chartab: rat(&inv_tab),
                inversion_dim_perm: inv_dim_perm,
                inversion_dim_chartab: inv_dim_tab,
            });
        }
    }

    let orbit_group_algebra = if opts.orbit_confirmation {
        let gens = group.greedy_generators();
        let mut vals = [0u64; 2];
        for (slot, parity) in Parity::BOTH.into_iter().enumerate() {
            let tag = format!("conventions: orbit = perm, group-algebra {parity}");
            let perm = rows
                .iter()
                .find(|r| r.module == ModuleChoice::GroupAlgebra && r.parity == parity)
                .map(|r| r.inversion_dim_perm);
            match dim_invariants_orbit(&group, parity, SymmetryChoice::Full, &gens) {
                Ok(v) => {
                    vals[slot] = v;
                    checks.eq(tag, Some(v), perm);
                }
                Err(e) => checks.fail(tag, e),
            }
        }
        Some(vals)
    } else {
        None
    };

    Some(ConventionReport { indicators, rows, orbit_group_algebra })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_suite_passes() {
        let r = run(Suite::Fixtures, &VerifyOptions::default());
        assert!(r.passed(), "{:?}", r.first_failure());
        assert!(r.conventions.is_none());
    }

    #[test]
    fn conventions_suite_passes_and_reports() {
        let r = run(Suite::Conventions, &VerifyOptions::default());
        assert!(r.passed(), "{:?}", r.first_failure());
        let c = r.conventions.unwrap();
        assert_eq!(c.indicators.len(), 9);
        assert_eq!(c.rows.len(), 4);
        assert!(c.orbit_group_algebra.is_none());
        // no check compares the two conventions with each other
        assert!(r.checks.iter().all(|k| !k.name.contains("flip = inversion")));
    }

    #[test]
    fn a_corrupted_fixture_fails_with_a_counterexample() {
        let mut fixture = Sl2Fixture::builtin();
        fixture.elements[0].class = "c4".into();
        let opts = VerifyOptions { fixture: Some(fixture), ..Default::default() };
        let r = run(Suite::Fixtures, &opts);
        let bad = r.first_failure().unwrap();
        assert!(bad.detail.contains("g1"), "{}", bad.detail);
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("cross-methods".parse::<Suite>(), Ok(Suite::CrossMethods));
        assert!("nope".parse::<Suite>().is_err());
    }
}
