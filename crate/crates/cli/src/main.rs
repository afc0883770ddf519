use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use gdet::search::{report_to_json, SearchMode};
use gdet::spectrum::MembershipForm;
use gdet::{
    classify, classify_subgroup_spectra, det_oracle, det_via_reduction, factor_profile,
    GroupId, GroupRingElement, GroupTable, SearchConfig,
};

mod selftest;

#[derive(Parser)]
#[command(name = "gdet", version, about = "Integer group determinants for the non-abelian groups of order 18")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Args)]
struct GroupArg {
    /// group: g18-4, z3xd6 or d18
    #[arg(long, value_parser = GroupId::from_str)]
    group: GroupId,
}

#[derive(Args)]
struct CoeffsArg {
    /// 18 comma-separated integers, f-block then g-block
    #[arg(long, conflicts_with = "coeffs_pos")]
    coeffs: Option<String>,
    #[arg(value_name = "COEFFS")]
    coeffs_pos: Option<String>,
}

impl CoeffsArg {
    fn text(&self) -> Result<&str, String> {
        self.coeffs
            .as_deref()
            .or(self.coeffs_pos.as_deref())
            .ok_or_else(|| "missing coefficient list".to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the determinant by every available exact path
    Det {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        coeffs: CoeffsArg,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Print the integer factor profile (g18-4 and z3xd6 only)
    Factor {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        coeffs: CoeffsArg,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Decide spectrum membership of an integer
    Classify {
        #[command(flatten)]
        group: GroupArg,
        #[arg(value_name = "D", allow_hyphen_values = true)]
        d: String,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Construct a witness element with the given determinant
    Achieve {
        #[command(flatten)]
        group: GroupArg,
        #[arg(value_name = "D", allow_hyphen_values = true)]
        d: String,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Sweep coefficient space and verify the theorems empirically
    Search {
        #[command(flatten)]
        group: GroupArg,
        /// exhaustive or random
        #[arg(long, value_enum, default_value = "random")]
        mode: Mode,
        /// coefficient range lo..hi
        #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// comma-separated flat positions allowed nonzero (default: all)
        #[arg(long)]
        support: Option<String>,
        /// check the factor-level congruence lemmas instead of membership
        #[arg(long)]
        congruences: bool,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Run the invariant suite at small scale
    Selftest,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim().parse::<BigInt>().map_err(|e| format!("cannot parse integer {s:?}: {e}"))
}

fn parse_element(table: &GroupTable, text: &str) -> Result<GroupRingElement, String> {
    GroupRingElement::parse(table, text).map_err(|e| e.to_string())
}

fn membership_json(d: &BigInt, form: &MembershipForm) -> serde_json::Value {
    json!({
        "d": d.to_string(),
        "member": form.is_member(),
        "class": form.class.to_string(),
        "sign": form.sign.map(|s| s.to_string()),
        "m": form.m.as_ref().map(|m| m.to_string()),
        "family": form.family,
    })
}

fn membership_text(d: &BigInt, form: &MembershipForm) -> String {
    format!(
        "d={} member={} class={} sign={} m={} family={}",
        d,
        form.is_member(),
        form.class,
        form.sign.map_or_else(|| "none".into(), |s| s.to_string()),
        form.m.as_ref().map_or_else(|| "none".into(), |m| m.to_string()),
        form.family.unwrap_or("none"),
    )
}

// exit 0 on success, 1 on domain errors; clap exits 2 on usage errors
fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Det { group, coeffs, emit } => {
            let table = group.group.table();
            let elem = parse_element(&table, coeffs.text()?)?;
            let oracle = det_oracle(&table, &elem);
            let reduction = det_via_reduction(&table, &elem);
            let profile = factor_profile(&table, &elem).ok();
            let agree = oracle == reduction
                && profile.as_ref().is_none_or(|p| p.product() == oracle);
            match emit {
                Emit::Text => {
                    println!("D = {oracle}");
                    println!("oracle = {oracle}");
                    println!("reduction = {reduction}");
                    if let Some(p) = &profile {
                        println!("profile = {} ({p})", p.product());
                    }
                    println!("agreement = {agree}");
                }
                Emit::Json => {
                    let v = json!({
                        "d": oracle.to_string(),
                        "oracle": oracle.to_string(),
                        "reduction": reduction.to_string(),
                        "profile": profile.as_ref().map(|p| p.to_string()),
                        "profile_product": profile.as_ref().map(|p| p.product().to_string()),
                        "agreement": agree,
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            if !agree {
                return Err("determinant paths disagree (internal error)".into());
            }
            Ok(())
        }
        Command::Factor { group, coeffs, emit } => {
            let table = group.group.table();
            let elem = parse_element(&table, coeffs.text()?)?;
            let p = factor_profile(&table, &elem).map_err(|e| e.to_string())?;
            match emit {
                Emit::Text => println!("{p} product={}", p.product()),
                Emit::Json => {
                    let v = json!({
                        "profile": p.to_string(),
                        "product": p.product().to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(())
        }
        Command::Classify { group, d, emit } => {
            let d = parse_bigint(&d)?;
            let form = classify(&d, group.group);
            let sub = classify_subgroup_spectra(&d);
            match emit {
                Emit::Text => {
                    println!("{}", membership_text(&d, &form));
                    println!(
                        "subgroups: d18={} z3xz3={} d6={}",
                        sub.in_d18, sub.in_z3xz3, sub.in_d6
                    );
                }
                Emit::Json => {
                    let mut v = membership_json(&d, &form);
                    v["subgroups"] = json!({
                        "d18": sub.in_d18,
                        "z3xz3": sub.in_z3xz3,
                        "d6": sub.in_d6,
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(())
        }
        Command::Achieve { group, d, emit } => {
            let d = parse_bigint(&d)?;
            let table = group.group.table();
            let witness = gdet::achieve(&table, &d).map_err(|e| e.to_string())?;
            // re-verify before printing
            let check = det_via_reduction(&table, &witness);
            if check != d {
                return Err(format!(
                    "internal error: witness determinant {check} does not match requested {d}"
                ));
            }
            let form = classify(&d, group.group);
            match emit {
                Emit::Text => {
                    println!("{}", membership_text(&d, &form));
                    println!("witness = {witness}");
                    println!("verified = {check}");
                }
                Emit::Json => {
                    let mut v = membership_json(&d, &form);
                    v["witness"] = json!(witness.to_string());
                    v["verified"] = json!(check.to_string());
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(())
        }
        Command::Search { group, mode, range, samples, seed, support, congruences, emit } => {
            let (lo, hi) = parse_range(&range)?;
            let mode = match mode {
                Mode::Exhaustive => SearchMode::Exhaustive,
                Mode::Random => SearchMode::Random,
            };
            let mut cfg = SearchConfig::new(group.group, lo, hi, mode);
            cfg.samples = samples;
            cfg.seed = seed;
            if let Some(s) = support {
                cfg.support = s
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?;
            }
            let table = group.group.table();
            let report = if congruences {
                gdet::verify_congruence_lemmas(&cfg, &table)
            } else {
                gdet::run_search(&cfg, &table)
            }
            .map_err(|e| e.to_string())?;
            match emit {
                Emit::Text => {
                    println!("group = {}", group.group);
                    println!("total = {}", report.total);
                    println!(
                        "classes: coprime_six={} two_not_three={} three_not_two={} div_six={} not_member={}",
                        report.classes.coprime_six,
                        report.classes.two_not_three,
                        report.classes.three_not_two,
                        report.classes.div_six,
                        report.classes.not_member
                    );
                    println!("violations = {}", report.violations.len());
                    for v in &report.violations {
                        println!("  {} det={} coeffs={:?}", v.predicate, v.det, v.coeffs);
                    }
                    println!("residues mod 18 = {:?}", report.residues_mod_18);
                    println!("min = {} max = {}", report.min_det, report.max_det);
                }
                Emit::Json => println!("{}", report_to_json(&report)),
            }
            if report.violations.is_empty() {
                Ok(())
            } else {
                Err(format!("{} violations found", report.violations.len()))
            }
        }
        Command::Selftest => selftest::run(),
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("range {s:?} is not lo..hi"))?;
    let lo = lo.trim().parse::<i64>().map_err(|e| format!("bad range start: {e}"))?;
    let hi = hi.trim().parse::<i64>().map_err(|e| format!("bad range end: {e}"))?;
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
