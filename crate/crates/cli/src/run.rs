//! Command execution: each handler returns the process exit code
//! (0 success, 1 negative verdict, 2 invalid input, 3 budget exceeded).

use std::path::Path;

use crossed_forge_core::{
    brute_force_is_cyclic, build_crossed_product, classify_special_case, consistency_sweep,
    decide_cyclic_main, default_transversal, enumerate_crossed_systems,
    enumerate_profiles_with_budget, extract_crossed_system, gcd3, order_profile, partial_sums,
    profile_to_cocycle, tables_isomorphic, validate_crossed_system, verify_group_axioms,
    CocycleProfile, CyclicityError, CyclicityInput, CyclicityVerdict, FiniteGroupTable,
    GroupFamily, OracleError, DEFAULT_PROFILE_BUDGET, DEFAULT_SYSTEM_BUDGET,
};
use serde_json::json;

use crate::output::{self, OutputFormat};
use crate::spec_file::{parse_spec, write_system, Construct};
use crate::CliError;

pub struct Options {
    pub format: OutputFormat,
    pub budget: Option<u64>,
}

fn load(path: &Path) -> Result<Construct, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_spec(&text)
}

/// Description of the input for structured output: a family name and its
/// parameters.
fn describe(construct: &Construct) -> serde_json::Value {
    match construct {
        Construct::Family(fam) => output::family_json(fam),
        Construct::Profile(p) => json!({
            "family": if p.target().is_finite() { "twisted_finite" } else { "twisted_infinite" },
            "parameters": output::profile_params(p),
        }),
        Construct::System(sys) => json!({
            "family": "crossed_system",
            "parameters": {
                "h_order": sys.h().order(),
                "g_order": sys.g().order(),
            },
        }),
        Construct::Group(t) => json!({
            "family": "group_table",
            "parameters": { "order": t.order() },
        }),
    }
}

/// A finite multiplication table for any construct that has one.
fn to_table(construct: &Construct) -> Result<FiniteGroupTable, CliError> {
    match construct {
        Construct::Group(t) => Ok(t.clone()),
        Construct::Family(fam) => {
            fam.validate().map_err(CliError::semantic)?;
            fam.to_table().map_err(CliError::semantic)
        }
        Construct::Profile(p) => {
            if !p.target().is_finite() {
                return Err(CliError::Semantic {
                    message: "infinite-target profiles have no finite table".to_owned(),
                });
            }
            GroupFamily::twisted_finite(p.clone())
                .map_err(CliError::semantic)?
                .to_table()
                .map_err(CliError::semantic)
        }
        Construct::System(sys) => {
            let validated =
                validate_crossed_system(sys.clone()).map_err(CliError::semantic)?;
            build_crossed_product(&validated).map_err(CliError::semantic)
        }
    }
}

fn family_of_profile(p: &CocycleProfile) -> Result<GroupFamily, CliError> {
    if p.target().is_finite() {
        GroupFamily::twisted_finite(p.clone()).map_err(CliError::semantic)
    } else {
        GroupFamily::twisted_infinite(p.clone()).map_err(CliError::semantic)
    }
}

fn decide(construct: &Construct) -> Result<CyclicityVerdict, CliError> {
    let verdict = match construct {
        Construct::Family(fam) => {
            fam.validate().map_err(CliError::semantic)?;
            decide_cyclic_main(CyclicityInput::Family(fam))
        }
        Construct::Profile(p) => {
            let fam = family_of_profile(p)?;
            decide_cyclic_main(CyclicityInput::Family(&fam))
        }
        Construct::System(sys) => {
            let validated =
                validate_crossed_system(sys.clone()).map_err(CliError::semantic)?;
            decide_cyclic_main(CyclicityInput::System(&validated))
        }
        Construct::Group(_) => {
            return Err(CliError::Semantic {
                message: "classification expects a family, profile, or crossed system".to_owned(),
            })
        }
    };
    verdict.map_err(|e| match e {
        CyclicityError::NotCyclicInputs { group } => CliError::Semantic {
            message: format!("{group} is not cyclic; the decision requires cyclic factors"),
        },
        other => CliError::semantic(other),
    })
}

pub fn validate(path: &Path, opts: &Options) -> Result<i32, CliError> {
    let construct = load(path)?;
    match construct {
        Construct::Family(ref fam) => match fam.validate() {
            Ok(()) => {
                output::emit_validation(opts.format, &describe(&construct), true, None);
                Ok(0)
            }
            Err(e) => {
                output::emit_validation(
                    opts.format,
                    &describe(&construct),
                    false,
                    Some(e.to_string()),
                );
                Ok(1)
            }
        },
        Construct::System(sys) => match validate_crossed_system(sys) {
            Ok(valid) => {
                let case = classify_special_case(&valid);
                output::emit_system_validation(opts.format, &valid, case);
                Ok(0)
            }
            Err(e) => {
                output::emit_validation(
                    opts.format,
                    &json!({"family": "crossed_system"}),
                    false,
                    Some(e.to_string()),
                );
                Ok(1)
            }
        },
        Construct::Profile(ref p) => {
            // well-formedness was checked at parse time; re-check the
            // generated cocycle laws
            let f = profile_to_cocycle(p);
            f.validate().map_err(CliError::semantic)?;
            output::emit_validation(opts.format, &describe(&construct), true, None);
            Ok(0)
        }
        Construct::Group(ref t) => {
            let report = verify_group_axioms(t);
            let ok = report.passed();
            output::emit_axiom_report(opts.format, t, &report);
            Ok(if ok { 0 } else { 1 })
        }
    }
}

pub fn product(
    path: &Path,
    show_table: bool,
    show_order_profile: bool,
    opts: &Options,
) -> Result<i32, CliError> {
    let construct = load(path)?;
    let table = to_table(&construct)?;
    output::emit_product(opts.format, &table, show_table, show_order_profile);
    Ok(0)
}

pub fn classify(path: &Path, opts: &Options) -> Result<i32, CliError> {
    let construct = load(path)?;
    let verdict = decide(&construct)?;
    output::emit_verdict(opts.format, &describe(&construct), &verdict);
    Ok(if verdict.cyclic { 0 } else { 1 })
}

pub fn generator(path: &Path, opts: &Options) -> Result<i32, CliError> {
    let construct = load(path)?;
    let verdict = decide(&construct)?;
    if verdict.cyclic {
        output::emit_witness(opts.format, verdict.witness.as_ref().expect("cyclic"));
        Ok(0)
    } else {
        eprintln!(
            "not cyclic: {}",
            output::obstruction_text(verdict.obstruction.as_ref().expect("not cyclic"))
        );
        Ok(1)
    }
}

pub fn iso(path_a: &Path, path_b: &Path, opts: &Options) -> Result<i32, CliError> {
    let ta = to_table(&load(path_a)?)?;
    let tb = to_table(&load(path_b)?)?;
    match tables_isomorphic(&ta, &tb) {
        Ok(Some(map)) => {
            output::emit_iso(opts.format, true, Some(&map));
            Ok(0)
        }
        Ok(None) => {
            output::emit_iso(opts.format, false, None);
            Ok(1)
        }
        Err(OracleError::TooLarge { required, budget }) => Err(CliError::Budget {
            message: format!("isomorphism search bound: order {required} exceeds {budget}"),
        }),
    }
}

pub fn extract(
    group_path: &Path,
    normal: &str,
    transversal: Option<&str>,
    opts: &Options,
) -> Result<i32, CliError> {
    let table = to_table(&load(group_path)?)?;
    let h_indices = parse_indices(normal)?;
    let transversal = match transversal {
        Some(text) => parse_indices(text)?,
        None => default_transversal(&table, &h_indices).map_err(CliError::semantic)?,
    };
    let sys = extract_crossed_system(&table, &h_indices, &transversal)
        .map_err(CliError::semantic)?;
    let case = classify_special_case(&sys);
    match opts.format {
        OutputFormat::Human => {
            println!("# extracted crossed system ({})", output::case_name(case));
            print!("{}", write_system(&sys));
        }
        OutputFormat::Json => {
            let text = write_system(&sys);
            println!(
                "{}",
                json!({
                    "special_case": output::case_name(case),
                    "h_order": sys.h().order(),
                    "g_order": sys.g().order(),
                    "alpha": sys.alpha().perms(),
                    "f": sys.f().rows(),
                    "spec": text,
                })
            );
        }
    }
    Ok(0)
}

fn parse_indices(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<usize>().map_err(|_| CliError::Semantic {
                message: format!("bad index `{}` in index list", part.trim()),
            })
        })
        .collect()
}

pub fn cocycles_enumerate(
    m: u64,
    n: u64,
    cyclic_only: bool,
    opts: &Options,
) -> Result<i32, CliError> {
    let budget = opts.budget.unwrap_or(DEFAULT_PROFILE_BUDGET);
    let profiles = enumerate_profiles_with_budget(m, n, budget).map_err(|e| match e {
        crossed_forge_core::CocycleError::TooLarge { required, budget } => CliError::Budget {
            message: format!("{required} profiles exceed budget {budget}"),
        },
        other => CliError::semantic(other),
    })?;
    let mut listed = 0u64;
    for profile in profiles {
        let sums = partial_sums(&profile);
        let s_m = sums.s_m();
        let d = gcd3(s_m, m as i64, n as i64);
        let cyclic = d == 1;
        if cyclic_only && !cyclic {
            continue;
        }
        listed += 1;
        match opts.format {
            OutputFormat::Human => {
                println!(
                    "phi = {:?}  S_m = {} (= {} mod {})  gcd(S_m, m, n) = {}  cyclic = {}",
                    profile.values(),
                    s_m,
                    sums.s_m_reduced(n),
                    n,
                    d,
                    cyclic
                );
            }
            OutputFormat::Json => {
                println!(
                    "{}",
                    json!({
                        "phi": profile.values(),
                        "s_m": s_m,
                        "s_m_mod_n": sums.s_m_reduced(n),
                        "gcd": d,
                        "cyclic": cyclic,
                    })
                );
            }
        }
    }
    if opts.format == OutputFormat::Human {
        println!("# {listed} profiles listed");
    }
    Ok(0)
}

pub fn oracle_sweep(max_order: u64, opts: &Options) -> Result<i32, CliError> {
    if max_order > 48 {
        return Err(CliError::Budget {
            message: format!("sweep bound is 48, got {max_order}"),
        });
    }
    let report = consistency_sweep(max_order);
    match opts.format {
        OutputFormat::Human => {
            println!(
                "swept {} twisted profiles and {} Holder presentations up to order {}",
                report.twisted_profiles_checked,
                report.holder_presentations_checked,
                report.max_order
            );
            for line in &report.mismatches {
                println!("MISMATCH {line}");
            }
            println!(
                "{}",
                if report.passed() { "sweep PASS" } else { "sweep FAIL" }
            );
        }
        OutputFormat::Json => {
            println!(
                "{}",
                json!({
                    "max_order": report.max_order,
                    "twisted_profiles_checked": report.twisted_profiles_checked,
                    "holder_presentations_checked": report.holder_presentations_checked,
                    "mismatches": report.mismatches,
                    "passed": report.passed(),
                })
            );
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

pub fn oracle_enumerate(h_order: u64, g_order: u64, opts: &Options) -> Result<i32, CliError> {
    if h_order == 0 || g_order == 0 {
        return Err(CliError::Semantic {
            message: "group orders must be positive".to_owned(),
        });
    }
    let budget = opts.budget.unwrap_or(DEFAULT_SYSTEM_BUDGET);
    let h = FiniteGroupTable::cyclic(h_order as usize);
    let g = FiniteGroupTable::cyclic(g_order as usize);
    let systems = enumerate_crossed_systems(&h, &g, budget).map_err(|e| match e {
        OracleError::TooLarge { required, budget } => CliError::Budget {
            message: format!("{required} candidates exceed budget {budget}"),
        },
    })?;
    let count = systems.len();
    for sys in &systems {
        let case = classify_special_case(sys);
        let product = build_crossed_product(sys).expect("validated");
        let (cyclic, _) = brute_force_is_cyclic(&product);
        match opts.format {
            OutputFormat::Human => {
                println!(
                    "alpha = {:?}  f = {:?}  case = {}  product_cyclic = {}",
                    sys.alpha().perms(),
                    sys.f().rows(),
                    output::case_name(case),
                    cyclic
                );
            }
            OutputFormat::Json => {
                println!(
                    "{}",
                    json!({
                        "alpha": sys.alpha().perms(),
                        "f": sys.f().rows(),
                        "special_case": output::case_name(case),
                        "product_cyclic": cyclic,
                        "product_order_profile": order_profile(&product),
                    })
                );
            }
        }
    }
    if opts.format == OutputFormat::Human {
        println!("# {count} normalized crossed systems");
    }
    Ok(0)
}
