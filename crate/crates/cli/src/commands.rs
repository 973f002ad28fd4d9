use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use num::BigRational;
use serde_json::{json, Value};
use theta_dims::chartab::{chartab_breakdown, diagonal_part, dim_invariants_chartab, CharTable};
use theta_dims::group::{format_mat, sl2f5_named_classes, Sl2Fixture, SL2F5_CLASS_REPS};
use theta_dims::lens::lens_dims;
use theta_dims::oracle::{dim_invariants_orbit, dim_invariants_reynolds_with, ReynoldsOptions, DEFAULT_MAX_ORDER};
use theta_dims::perm::{dim_invariants_perm_with, perm_breakdown, PermOptions};
use theta_dims::verify::{self, Suite, VerifyOptions, VerifyReport, LENS_COLUMNS};
use theta_dims::{ConjugacyData, Convention, GroupTable, ModuleChoice, Parity, SymmetryChoice};

use crate::group_arg::GroupArg;
use crate::output::{text_table, Output};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Perm,
    Chartab,
    Orbit,
    Reynolds,
    ClosedForm,
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "perm" => Ok(Method::Perm),
            "chartab" => Ok(Method::Chartab),
            "orbit" => Ok(Method::Orbit),
            "reynolds" => Ok(Method::Reynolds),
            "closed-form" => Ok(Method::ClosedForm),
            _ => Err(format!(
                "unknown method `{s}`, expected one of: perm, chartab, orbit, reynolds, closed-form"
            )),
        }
    }
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Perm => "perm",
            Method::Chartab => "chartab",
            Method::Orbit => "orbit",
            Method::Reynolds => "reynolds",
            Method::ClosedForm => "closed-form",
        }
    }
}

/// Validated `dims` request.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub group: GroupArg,
    pub module: ModuleChoice,
    pub parity: Parity,
    pub symmetry: SymmetryChoice,
    pub method: Method,
    pub convention: Option<Convention>,
    pub table: Option<PathBuf>,
    pub reynolds_max_order: usize,
    pub class_pairs: bool,
    pub threads: Option<usize>,
}

/// A command's output, plus the first failed assertion if any. `Err` is a
/// usage or validation error.
pub type CmdResult = Result<(Output, Option<String>), String>;

fn load_table(path: &Path) -> Result<CharTable, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    CharTable::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn rational_text(q: &BigRational) -> String {
    q.to_string()
}

pub fn cmd_dims(cfg: &RunConfig) -> CmdResult {
    let (convention, convention_source) = match cfg.convention {
        Some(c) => (c, "explicit"),
        None if cfg.method == Method::Chartab => (Convention::Flip, "default"),
        None => (Convention::Inversion, "default"),
    };
    if convention == Convention::Flip && cfg.method != Method::Chartab {
        return Err(format!(
            "the flip convention needs --method chartab; method {} uses inversion",
            cfg.method.name()
        ));
    }
    let group = cfg.group.load()?;
    let popts = PermOptions { class_pairs: cfg.class_pairs, threads: cfg.threads };
    let start = Instant::now();
    let mut breakdown: Vec<(&str, String)> = Vec::new();

    let dim = match cfg.method {
        Method::Perm => {
            if cfg.symmetry == SymmetryChoice::Full && !cfg.class_pairs {
                let b = perm_breakdown(&group, cfg.module, cfg.parity, &popts).map_err(|e| e.to_string())?;
                breakdown.push(("pi_pi", rational_text(&b.pi_pi)));
                breakdown.push(("twisted", rational_text(&b.twisted)));
            }
            dim_invariants_perm_with(&group, cfg.module, cfg.parity, cfg.symmetry, &popts).map_err(|e| e.to_string())?
        }
        Method::Chartab => {
            let table = match (&cfg.table, cfg.group.is_sl2f5()) {
                (Some(path), _) => load_table(path)?,
                (None, true) => CharTable::builtin_sl2f5(),
                (None, false) => {
                    return Err(format!("--method chartab on {} needs --table FILE", cfg.group));
                }
            };
            if table.group_order() != group.order() as u64 {
                return Err(format!(
                    "character table has group order {} but {} has order {}",
                    table.group_order(),
                    cfg.group,
                    group.order()
                ));
            }
            match cfg.symmetry {
                SymmetryChoice::Full => {
                    let b = chartab_breakdown(&table, cfg.module, cfg.parity, convention).map_err(|e| e.to_string())?;
                    breakdown.push(("diagonal", rational_text(&b.diagonal)));
                    breakdown.push(("tau", rational_text(&b.tau)));
                    dim_invariants_chartab(&table, cfg.module, cfg.parity, convention).map_err(|e| e.to_string())?
                }
                SymmetryChoice::PiPi => {
                    let d = diagonal_part(&table, cfg.module, cfg.parity).map_err(|e| e.to_string())?;
                    breakdown.push(("diagonal", rational_text(&d)));
                    if !d.is_integer() {
                        return Err(format!("internal error: diagonal part {d} is not an integer"));
                    }
                    d.to_integer().try_into().map_err(|_| format!("diagonal part {d} is out of range"))?
                }
            }
        }
        Method::Orbit => {
            if cfg.module != ModuleChoice::GroupAlgebra {
                return Err("--method orbit supports only --module group-algebra".into());
            }
            let gens = group.greedy_generators();
            dim_invariants_orbit(&group, cfg.parity, cfg.symmetry, &gens).map_err(|e| e.to_string())?
        }
        Method::Reynolds => {
            if cfg.symmetry != SymmetryChoice::Full {
                return Err("--method reynolds supports only --symmetry full".into());
            }
            let ropts = ReynoldsOptions { max_order: cfg.reynolds_max_order };
            dim_invariants_reynolds_with(&group, cfg.module, cfg.parity, &ropts).map_err(|e| {
                format!("{e} (raise it with --reynolds-max-order)")
            })?
        }
        Method::ClosedForm => {
            let GroupArg::Cyclic(n) = cfg.group else {
                return Err("--method closed-form needs a cyclic group (cyclic:N)".into());
            };
            if cfg.symmetry != SymmetryChoice::Full {
                return Err("--method closed-form supports only --symmetry full".into());
            }
            let row = lens_dims(n as u64).map_err(|e| e.to_string())?;
            match (cfg.module, cfg.parity) {
                (ModuleChoice::GroupAlgebra, Parity::Odd) => row.odd_ca,
                (ModuleChoice::GroupAlgebra, Parity::Even) => row.even_ca,
                (ModuleChoice::AugKernel, Parity::Odd) => row.odd_ker,
                (ModuleChoice::AugKernel, Parity::Even) => row.even_ker,
            }
        }
    };
    let elapsed = start.elapsed();

    let mut text = String::new();
    let _ = writeln!(text, "group:      {} (order {})", cfg.group, group.order());
    let _ = writeln!(text, "module:     {}", cfg.module);
    let _ = writeln!(text, "parity:     {}", cfg.parity);
    let _ = writeln!(text, "symmetry:   {}", cfg.symmetry);
    let _ = writeln!(text, "method:     {}", cfg.method.name());
    let _ = writeln!(text, "convention: {convention} ({convention_source})");
    for (k, v) in &breakdown {
        let _ = writeln!(text, "{:<11} {v}", format!("{k}:"));
    }
    let _ = writeln!(text, "dimension:  {dim}");
    let _ = writeln!(text, "time:       {:.3} s", elapsed.as_secs_f64());

    let mut parts = serde_json::Map::new();
    for (k, v) in &breakdown {
        parts.insert((*k).to_string(), Value::String(v.clone()));
    }
    let json = json!({
        "group": cfg.group.to_string(),
        "order": group.order(),
        "module": cfg.module.to_string(),
        "parity": cfg.parity.to_string(),
        "symmetry": cfg.symmetry.to_string(),
        "method": cfg.method.name(),
        "convention": convention.to_string(),
        "convention_source": convention_source,
        "breakdown": Value::Object(parts),
        "dimension": dim,
    });
    let csv_header = ["group", "order", "module", "parity", "symmetry", "method", "convention", "dimension"]
        .map(String::from)
        .to_vec();
    let csv_rows = vec![vec![
        cfg.group.to_string(),
        group.order().to_string(),
        cfg.module.to_string(),
        cfg.parity.to_string(),
        cfg.symmetry.to_string(),
        cfg.method.name().to_string(),
        convention.to_string(),
        dim.to_string(),
    ]];
    Ok((Output { text, json, csv_header, csv_rows }, None))
}

pub const LENS_HEADER: [&str; 5] = ["n", "odd_group_algebra", "even_group_algebra", "odd_aug_kernel", "even_aug_kernel"];

/// Rows `n = 1..=max_n` from the closed forms; with `cross_check`, each row
/// is recomputed by the permutation path and the orbit oracle.
pub fn cmd_lens_table(max_n: u64, cross_check: bool, threads: Option<usize>) -> CmdResult {
    if max_n == 0 {
        return Err("--max-n must be at least 1".into());
    }
    let popts = PermOptions { class_pairs: false, threads };
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for n in 1..=max_n {
        let closed = lens_dims(n).map_err(|e| e.to_string())?.values();
        if cross_check {
            let g = GroupTable::cyclic(n as usize).map_err(|e| e.to_string())?;
            let mut perm = [0u64; 4];
            for (slot, (module, parity)) in LENS_COLUMNS.into_iter().enumerate() {
                perm[slot] = dim_invariants_perm_with(&g, module, parity, SymmetryChoice::Full, &popts)
                    .map_err(|e| e.to_string())?;
            }
            let gens = [1 % n as usize];
            let mut orbit = [0u64; 2];
            for (slot, parity) in [Parity::Odd, Parity::Even].into_iter().enumerate() {
                orbit[slot] = dim_invariants_orbit(&g, parity, SymmetryChoice::Full, &gens).map_err(|e| e.to_string())?;
            }
            if perm != closed || orbit != [closed[0], closed[1]] {
                mismatches.push(format!("n = {n}: closed {closed:?}, perm {perm:?}, orbit {orbit:?}"));
            }
        }
        rows.push((n, closed));
    }

    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|(n, v)| std::iter::once(n.to_string()).chain(v.iter().map(u64::to_string)).collect())
        .collect();
    let mut text = text_table(&LENS_HEADER, &cells);
    if cross_check {
        if mismatches.is_empty() {
            let _ = writeln!(text, "cross-check: closed forms, perm and orbit agree on all {max_n} rows");
        } else {
            for m in &mismatches {
                let _ = writeln!(text, "MISMATCH {m}");
            }
        }
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|(n, v)| {
            json!({
                LENS_HEADER[0]: n,
                LENS_HEADER[1]: v[0],
                LENS_HEADER[2]: v[1],
                LENS_HEADER[3]: v[2],
                LENS_HEADER[4]: v[3],
            })
        })
        .collect();
    let mut json = json!({ "rows": json_rows });
    if cross_check {
        json["cross_check"] = json!({ "agree": mismatches.is_empty(), "mismatches": mismatches });
    }
    let failure = mismatches.first().map(|m| format!("lens table cross-check failed at {m}"));
    Ok((Output { text, json, csv_header: LENS_HEADER.map(String::from).to_vec(), csv_rows: cells }, failure))
}

struct ClassRow {
    name: String,
    representative: String,
    size: usize,
    power2: String,
    power3: String,
    inverse: String,
}

pub fn cmd_classes(group_arg: &GroupArg) -> CmdResult {
    let group = group_arg.load()?;
    let cd = ConjugacyData::compute(&group);
    // display order and names of the computed classes
    let (order, names): (Vec<usize>, Vec<String>) = if group_arg.is_sl2f5() {
        let named = sl2f5_named_classes(&cd).map_err(|e| e.to_string())?;
        (named.to_vec(), SL2F5_CLASS_REPS.iter().map(|(n, _)| n.to_string()).collect())
    } else {
        ((0..cd.num_classes()).collect(), (1..=cd.num_classes()).map(|i| format!("C{i}")).collect())
    };
    // SL_2(F_5) shows the matrices that name its classes
    let named_reps: Option<Vec<String>> = group_arg
        .is_sl2f5()
        .then(|| SL2F5_CLASS_REPS.iter().map(|&(_, m)| format_mat(m)).collect());
    let name_of = |c: usize| names[order.iter().position(|&k| k == c).expect("every class is listed")].clone();
    let p2 = cd.power_map(&group, 2);
    let p3 = cd.power_map(&group, 3);
    let inversion = cd.inversion(&group);
    let rows: Vec<ClassRow> = order
        .iter()
        .zip(&names)
        .map(|(&c, name)| ClassRow {
            name: name.clone(),
            representative: match &named_reps {
                Some(reps) => reps[order.iter().position(|&k| k == c).expect("listed")].clone(),
                None => group.label(cd.reps()[c]),
            },
            size: cd.sizes()[c],
            power2: name_of(p2[c]),
            power3: name_of(p3[c]),
            inverse: name_of(inversion.perm[c]),
        })
        .collect();

    let header = ["class", "representative", "size", "power2", "power3", "inverse"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                r.representative.clone(),
                r.size.to_string(),
                r.power2.clone(),
                r.power3.clone(),
                r.inverse.clone(),
            ]
        })
        .collect();
    let mut text = format!("{} (order {}): {} classes\n", group_arg, group.order(), rows.len());
    text.push_str(&text_table(&header, &cells));
    let _ = writeln!(text, "inversion orbits on classes: {}", inversion.orbit_count);
    let json = json!({
        "group": group_arg.to_string(),
        "order": group.order(),
        "classes": rows.iter().map(|r| json!({
            "class": r.name,
            "representative": r.representative,
            "size": r.size,
            "power2": r.power2,
            "power3": r.power3,
            "inverse": r.inverse,
        })).collect::<Vec<_>>(),
        "inversion_orbits": inversion.orbit_count,
    });
    Ok((Output { text, json, csv_header: header.map(String::from).to_vec(), csv_rows: cells }, None))
}

pub struct VerifyArgs {
    pub suite: Suite,
    pub fixture: Option<PathBuf>,
    pub table: Option<PathBuf>,
    pub orbit: bool,
    pub reynolds_max_order: Option<usize>,
    pub threads: Option<usize>,
}

fn verify_text(report: &VerifyReport) -> String {
    let mut text = String::new();
    for c in &report.checks {
        let _ = writeln!(text, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    if let Some(conv) = &report.conventions {
        let _ = writeln!(text, "\nFrobenius-Schur indicators of SL_2(F_5):");
        let cells: Vec<Vec<String>> = conv
            .indicators
            .iter()
            .map(|r| vec![format!("A_{}", r.irrep), r.degree.to_string(), r.indicator.to_string()])
            .collect();
        text.push_str(&text_table(&["irrep", "degree", "indicator"], &cells));
        let _ = writeln!(
            text,
            "\nFlip and inversion conventions for SL_2(F_5), reported side by side and not compared:"
        );
        let cells: Vec<Vec<String>> = conv
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.module.to_string(),
                    r.parity.to_string(),
                    r.diagonal.clone(),
                    r.flip_tau.clone(),
                    r.flip_dim.to_string(),
                    r.inversion_tau_perm.clone(),
                    r.inversion_tau_chartab.clone(),
                    r.inversion_dim_perm.to_string(),
                    r.inversion_dim_chartab.to_string(),
                ]
            })
            .collect();
        text.push_str(&text_table(
            &["module", "parity", "diagonal", "flip_tau", "flip", "inv_tau_perm", "inv_tau_chartab", "inv_perm", "inv_chartab"],
            &cells,
        ));
        match conv.orbit_group_algebra {
            Some([even, odd]) => {
                let _ = writeln!(text, "orbit oracle, group-algebra: even {even}, odd {odd}");
            }
            None => {
                let _ = writeln!(text, "orbit oracle confirmation skipped (pass --orbit)");
            }
        }
    }
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(text, "\n{} checks, {} failed", report.checks.len(), failed);
    text
}

pub fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let fixture = match &args.fixture {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            Some(Sl2Fixture::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?)
        }
        None => None,
    };
    let table = args.table.as_deref().map(load_table).transpose()?;
    let defaults = VerifyOptions::default();
    let opts = VerifyOptions {
        orbit_confirmation: args.orbit,
        reynolds_max_order: args.reynolds_max_order.unwrap_or(defaults.reynolds_max_order),
        threads: args.threads,
        fixture,
        table,
    };
    let report = verify::run(args.suite, &opts);
    let text = verify_text(&report);
    let json = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    let csv_rows = report
        .checks
        .iter()
        .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()])
        .collect();
    let failure = report.first_failure().map(|c| format!("verification failed: {}: {}", c.name, c.detail));
    Ok((Output { text, json, csv_header: ["check", "passed", "detail"].map(String::from).to_vec(), csv_rows }, failure))
}

/// Default size guard for `dims --method reynolds`.
pub const REYNOLDS_DEFAULT: usize = DEFAULT_MAX_ORDER;
