//! Human and machine renderings of verdicts, tables, and reports. Machine
//! output is one JSON document per result line.

use crossed_forge_core::{
    AxiomReport, CocycleProfile, CocycleTarget, CrossedSystem, CyclicityVerdict,
    FiniteGroupTable, GroupFamily, Obstruction, SpecialCase, Witness,
};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
}

pub fn case_name(case: SpecialCase) -> &'static str {
    match case {
        SpecialCase::Trivial => "trivial",
        SpecialCase::Semidirect => "semidirect",
        SpecialCase::Twisted => "twisted",
        SpecialCase::General => "general",
    }
}

pub fn profile_params(p: &CocycleProfile) -> serde_json::Value {
    let n = match p.target() {
        CocycleTarget::Finite(n) => json!(n),
        CocycleTarget::InfiniteCyclic => json!("inf"),
    };
    json!({ "m": p.m(), "n": n, "phi": p.values() })
}

pub fn family_json(fam: &GroupFamily) -> serde_json::Value {
    match fam {
        GroupFamily::Holder { n, m, i, j } => json!({
            "family": "holder",
            "parameters": { "n": n, "m": m, "i": i, "j": j },
        }),
        GroupFamily::FinByInf { n, t } => json!({
            "family": "fin_by_inf",
            "parameters": { "n": n, "t": t },
        }),
        GroupFamily::InfByFinAbelian { n, t } => json!({
            "family": "inf_by_fin_abelian",
            "parameters": { "n": n, "t": t },
        }),
        GroupFamily::InfByFinFlip { n } => json!({
            "family": "inf_by_fin_flip",
            "parameters": { "n": n },
        }),
        GroupFamily::ZxZ => json!({ "family": "zxz", "parameters": {} }),
        GroupFamily::KleinBottle => json!({ "family": "klein_bottle", "parameters": {} }),
        GroupFamily::TwistedFinite(data) => json!({
            "family": "twisted_finite",
            "parameters": profile_params(data.profile()),
        }),
        GroupFamily::TwistedInfinite(data) => json!({
            "family": "twisted_infinite",
            "parameters": profile_params(data.profile()),
        }),
    }
}

fn witness_json(witness: &Witness) -> serde_json::Value {
    match witness {
        Witness::FiniteGenerator { element, order } => json!({
            "type": "finite_generator",
            "element": [element.p, element.q],
            "order": order,
        }),
        Witness::InfiniteEmbedding { theta, generator } => json!({
            "type": "infinite_embedding",
            "generator": [generator.p, generator.q],
            "theta": {
                "h_image": theta.h_image,
                "g_image": theta.g_image,
                "d": theta.d,
                "kernel_generator": [theta.kernel_generator.p, theta.kernel_generator.q],
            },
        }),
    }
}

fn obstruction_json(obstruction: &Obstruction) -> serde_json::Value {
    match obstruction {
        Obstruction::NonTrivialAction => json!({ "type": "non_trivial_action" }),
        Obstruction::JNotOne { j } => json!({ "type": "j_not_one", "j": j }),
        Obstruction::GcdObstruction { d, kernel_generator } => json!({
            "type": "gcd_obstruction",
            "d": d,
            "kernel_generator": kernel_generator.map(|k| vec![k.p, k.q]),
        }),
        Obstruction::TorsionObstruction => json!({ "type": "torsion_obstruction" }),
        Obstruction::QuotientObstruction => json!({ "type": "quotient_obstruction" }),
    }
}

pub fn witness_text(witness: &Witness) -> String {
    match witness {
        Witness::FiniteGenerator { element, order } => {
            format!("generator ({}, {}) of order {order}", element.p, element.q)
        }
        Witness::InfiniteEmbedding { theta, generator } => format!(
            "generator ({}, {}); theta: h -> {}, g -> {} (image {}Z), kernel generator ({}, {})",
            generator.p,
            generator.q,
            theta.h_image,
            theta.g_image,
            theta.d,
            theta.kernel_generator.p,
            theta.kernel_generator.q
        ),
    }
}

pub fn obstruction_text(obstruction: &Obstruction) -> String {
    match obstruction {
        Obstruction::NonTrivialAction => "the weak action is non-trivial".to_owned(),
        Obstruction::JNotOne { j } => format!("conjugation exponent j = {j} is not 1"),
        Obstruction::GcdObstruction { d, kernel_generator } => match kernel_generator {
            Some(k) => format!("governing gcd is {d}; kernel generator ({}, {})", k.p, k.q),
            None => format!("governing gcd is {d}"),
        },
        Obstruction::TorsionObstruction => {
            "infinite product with torsion elements".to_owned()
        }
        Obstruction::QuotientObstruction => {
            "the product has an infinite proper quotient".to_owned()
        }
    }
}

pub fn emit_verdict(
    format: OutputFormat,
    input: &serde_json::Value,
    verdict: &CyclicityVerdict,
) {
    match format {
        OutputFormat::Human => {
            println!("cyclic: {}", verdict.cyclic);
            if let Some(w) = &verdict.witness {
                println!("witness: {}", witness_text(w));
            }
            if let Some(o) = &verdict.obstruction {
                println!("obstruction: {}", obstruction_text(o));
            }
        }
        OutputFormat::Json => {
            let mut doc = json!({
                "cyclic": verdict.cyclic,
                "witness": verdict.witness.as_ref().map(witness_json),
                "obstruction": verdict.obstruction.as_ref().map(obstruction_json),
            });
            if let (Some(obj), Some(extra)) = (doc.as_object_mut(), input.as_object()) {
                for (k, v) in extra {
                    obj.insert(k.clone(), v.clone());
                }
            }
            println!("{doc}");
        }
    }
}

pub fn emit_witness(format: OutputFormat, witness: &Witness) {
    match format {
        OutputFormat::Human => println!("{}", witness_text(witness)),
        OutputFormat::Json => println!("{}", witness_json(witness)),
    }
}

pub fn emit_validation(
    format: OutputFormat,
    input: &serde_json::Value,
    valid: bool,
    error: Option<String>,
) {
    match format {
        OutputFormat::Human => {
            if valid {
                println!("valid");
            } else {
                println!("invalid: {}", error.as_deref().unwrap_or("unknown"));
            }
        }
        OutputFormat::Json => {
            let mut doc = json!({ "valid": valid, "error": error });
            if let (Some(obj), Some(extra)) = (doc.as_object_mut(), input.as_object()) {
                for (k, v) in extra {
                    obj.insert(k.clone(), v.clone());
                }
            }
            println!("{doc}");
        }
    }
}

pub fn emit_system_validation(format: OutputFormat, sys: &CrossedSystem, case: SpecialCase) {
    match format {
        OutputFormat::Human => {
            println!(
                "valid crossed system: |H| = {}, |G| = {}, case = {}",
                sys.h().order(),
                sys.g().order(),
                case_name(case)
            );
        }
        OutputFormat::Json => {
            println!(
                "{}",
                json!({
                    "valid": true,
                    "family": "crossed_system",
                    "h_order": sys.h().order(),
                    "g_order": sys.g().order(),
                    "special_case": case_name(case),
                })
            );
        }
    }
}

pub fn emit_axiom_report(format: OutputFormat, table: &FiniteGroupTable, report: &AxiomReport) {
    match format {
        OutputFormat::Human => {
            if report.passed() {
                println!("valid group table of order {}", table.order());
            } else {
                println!("not a group table:");
                if let Some((x, y)) = report.closure_failure {
                    println!("  closure fails at ({x}, {y})");
                }
                if let Some(x) = report.identity_failure {
                    println!("  unit law fails at {x}");
                }
                if let Some(x) = report.inverse_failure {
                    println!("  element {x} has no two-sided inverse");
                }
                if let Some((x, y, z)) = report.associativity_failure {
                    println!("  associativity fails at ({x}, {y}, {z})");
                }
            }
        }
        OutputFormat::Json => {
            println!(
                "{}",
                json!({
                    "valid": report.passed(),
                    "order": table.order(),
                    "closure_failure": report.closure_failure.map(|(x, y)| vec![x, y]),
                    "identity_failure": report.identity_failure,
                    "inverse_failure": report.inverse_failure,
                    "associativity_failure":
                        report.associativity_failure.map(|(x, y, z)| vec![x, y, z]),
                })
            );
        }
    }
}

pub fn emit_product(
    format: OutputFormat,
    table: &FiniteGroupTable,
    show_table: bool,
    show_order_profile: bool,
) {
    let (cyclic, _) = crossed_forge_core::brute_force_is_cyclic(table);
    match format {
        OutputFormat::Human => {
            println!(
                "order {} | abelian {} | cyclic {}",
                table.order(),
                table.is_abelian(),
                cyclic
            );
            if show_order_profile {
                println!("order profile: {:?}", crossed_forge_core::order_profile(table));
            }
            if show_table {
                print_human_table(table);
            }
        }
        OutputFormat::Json => {
            let mut doc = json!({
                "order": table.order(),
                "abelian": table.is_abelian(),
                "cyclic": cyclic,
            });
            let obj = doc.as_object_mut().expect("object");
            if show_order_profile {
                obj.insert(
                    "order_profile".to_owned(),
                    json!(crossed_forge_core::order_profile(table)),
                );
            }
            if show_table {
                obj.insert("table".to_owned(), json!(table.rows()));
                if let Some(labels) = table.labels() {
                    obj.insert("labels".to_owned(), json!(labels));
                }
            }
            println!("{doc}");
        }
    }
}

fn print_human_table(table: &FiniteGroupTable) {
    let labels: Vec<String> = (0..table.order()).map(|x| table.label(x)).collect();
    let width = labels.iter().map(|l| l.len()).max().unwrap_or(1);
    let pad = |s: &str| format!("{s:<width$}");
    let header: Vec<String> = labels.iter().map(|l| pad(l)).collect();
    println!("{} | {}", pad("*"), header.join("  "));
    let rule = "-".repeat(width);
    println!("{}-+-{}", rule, vec![rule.clone(); table.order()].join("--"));
    for x in 0..table.order() {
        let row: Vec<String> = (0..table.order())
            .map(|y| pad(&labels[table.mul(x, y)]))
            .collect();
        println!("{} | {}", pad(&labels[x]), row.join("  "));
    }
}

pub fn emit_iso(format: OutputFormat, isomorphic: bool, map: Option<&[usize]>) {
    match format {
        OutputFormat::Human => {
            if isomorphic {
                println!("isomorphic");
                if let Some(map) = map {
                    println!("bijection: {map:?}");
                }
            } else {
                println!("not isomorphic");
            }
        }
        OutputFormat::Json => {
            println!("{}", json!({ "isomorphic": isomorphic, "bijection": map }));
        }
    }
}
