//! Dispatch for the data subcommands.

use crate::render;
use crate::{CliArgs, CliCommand, Format};
use liedim::classify::{bound_value, classify_bounded, pq_catalogue, search_dimension};
use liedim::dims::weyl_dim;
use liedim::duality::duality_indicator;
use liedim::heightmin::{min_dim_at_height, verify_min_at_height};
use liedim::rootsys::DominantWeight;
use liedim::{LieType, RootSystem};
use num::BigInt;
use serde::Serialize;
use std::str::FromStr;

pub struct Outcome {
    pub text: String,
    pub exit: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, exit: 0 }
    }
}

pub fn parse_type(s: &str) -> Result<LieType, String> {
    LieType::parse(s).map_err(|e| e.to_string())
}

pub fn parse_weight(s: &str, rank: usize) -> Result<DominantWeight, String> {
    let coeffs: Result<Vec<u32>, _> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect();
    let coeffs = coeffs.map_err(|_| format!("cannot parse weight {s:?}"))?;
    if coeffs.len() != rank {
        return Err(format!(
            "weight has {} coefficients but the rank is {rank}",
            coeffs.len()
        ));
    }
    Ok(DominantWeight::new(coeffs))
}

#[derive(Serialize)]
struct DimReport {
    lie_type: String,
    weight: DominantWeight,
    #[serde(with = "liedim::report::bigint_string")]
    dim: BigInt,
    bound: liedim::classify::BoundValue,
    duality: liedim::duality::DualityIndicator,
}

pub fn dispatch(cli: &CliArgs) -> Result<Outcome, String> {
    match &cli.command {
        CliCommand::Dim { lie_type, weight } => {
            let lt = parse_type(lie_type)?;
            let rs = RootSystem::build(lt).map_err(|e| e.to_string())?;
            let w = parse_weight(weight, rs.rank())?;
            let dim = weyl_dim(&rs, &w).map_err(|e| e.to_string())?;
            let bound = bound_value(&rs, &w).map_err(|e| e.to_string())?;
            let duality = duality_indicator(&rs, &w);
            let report = DimReport {
                lie_type: lt.to_string(),
                weight: w,
                dim,
                bound,
                duality,
            };
            let text = match cli.format() {
                Format::Text => format!(
                    "dim V({}) = {}\nbound {}\nduality {}",
                    render::weight_str(&report.weight),
                    report.dim,
                    render::bound_str(&report.bound),
                    report.duality.as_str()
                ),
                Format::Json => render::to_canonical_json(&report),
                Format::Csv => format!(
                    "{}\n{},{},{},{},{},{}",
                    render::MODULE_CSV_HEADER,
                    report.lie_type,
                    render::weight_str(&report.weight).replace(',', ";"),
                    report.dim,
                    report.bound.long_bound,
                    report
                        .bound
                        .short_bound
                        .as_ref()
                        .map(|s| s.to_string())
                        .unwrap_or_default(),
                    report.duality.as_str()
                ),
            };
            Ok(Outcome::ok(text))
        }

        CliCommand::Minheight {
            lie_type,
            height,
            verify,
            cap,
        } => {
            let lt = parse_type(lie_type)?;
            if *height == 0 {
                return Err("height must be at least 1".into());
            }
            let rs = RootSystem::build(lt).map_err(|e| e.to_string())?;
            let hm = min_dim_at_height(&rs, *height).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct MinReport {
                lie_type: String,
                t: u32,
                #[serde(with = "liedim::report::bigint_string")]
                min_dim: BigInt,
                minimizing_weights: Vec<DominantWeight>,
                verified: Option<bool>,
            }
            let verified = if *verify {
                let chk = verify_min_at_height(&rs, *height, *cap).map_err(|e| e.to_string())?;
                Some(chk.pass)
            } else {
                None
            };
            let report = MinReport {
                lie_type: lt.to_string(),
                t: *height,
                min_dim: hm.min_dim.clone(),
                minimizing_weights: hm.minimizing_weights.iter().cloned().collect(),
                verified,
            };
            let text = match cli.format() {
                Format::Json => render::to_canonical_json(&report),
                _ => {
                    let mins: Vec<String> = report
                        .minimizing_weights
                        .iter()
                        .map(|w| format!("({})", render::weight_str(w)))
                        .collect();
                    let mut s = format!(
                        "{} height {}: min dim {}\nminimizers {}",
                        report.lie_type,
                        report.t,
                        report.min_dim,
                        mins.join(" ")
                    );
                    if let Some(v) = report.verified {
                        s.push_str(&format!(
                            "\nbrute force: {}",
                            if v { "confirmed" } else { "FAILED" }
                        ));
                    }
                    s
                }
            };
            let exit = if verified == Some(false) { 1 } else { 0 };
            Ok(Outcome { text, exit })
        }

        CliCommand::Classify { lie_type } => {
            let lt = parse_type(lie_type)?;
            let c = classify_bounded(lt).map_err(|e| e.to_string())?;
            match cli.format() {
                Format::Json => Ok(Outcome::ok(render::to_canonical_json(&CatalogReport {
                    lie_type: lt.to_string(),
                    rank: lt.rank(),
                    modules: c.modules.clone(),
                    a2_families: c.a2_families.clone(),
                }))),
                Format::Csv => {
                    let mut out = vec![render::MODULE_CSV_HEADER.to_string()];
                    out.extend(c.modules.iter().map(render::module_csv));
                    Ok(Outcome::ok(out.join("\n")))
                }
                Format::Text => {
                    let mut out = Vec::new();
                    if let Some(f) = &c.a2_families {
                        out.push("infinite families:".to_string());
                        for fam in &f.families {
                            out.push(format!("  {}: {}", fam.name, fam.constraint));
                        }
                        out.push("finite residue:".to_string());
                    }
                    for m in &c.modules {
                        out.push(render::module_text(m));
                    }
                    if let Some((t, min, env)) = &c.cutoff {
                        out.push(format!(
                            "cutoff: height {t} excluded (min dim {min} > {env})"
                        ));
                    }
                    Ok(Outcome::ok(out.join("\n")))
                }
            }
        }

        CliCommand::Pq {
            lie_type,
            cap,
            max_height,
        } => {
            let lt = parse_type(lie_type)?;
            let rs = RootSystem::build(lt).map_err(|e| e.to_string())?;
            let entries = pq_catalogue(&rs, &BigInt::from(*cap), *max_height)
                .map_err(|e| e.to_string())?;
            match cli.format() {
                Format::Json => Ok(Outcome::ok(render::to_canonical_json(&entries))),
                Format::Csv => {
                    let mut out = vec![render::PQ_CSV_HEADER.to_string()];
                    out.extend(entries.iter().map(render::pq_csv));
                    Ok(Outcome::ok(out.join("\n")))
                }
                Format::Text => {
                    let out: Vec<String> = entries.iter().map(render::pq_text).collect();
                    Ok(Outcome::ok(if out.is_empty() {
                        "no semiprime dimensions in range".to_string()
                    } else {
                        out.join("\n")
                    }))
                }
            }
        }

        CliCommand::Duality { lie_type, weight } => {
            let lt = parse_type(lie_type)?;
            let rs = RootSystem::build(lt).map_err(|e| e.to_string())?;
            let w = parse_weight(weight, rs.rank())?;
            let ind = duality_indicator(&rs, &w);
            #[derive(Serialize)]
            struct DualityReport {
                lie_type: String,
                weight: DominantWeight,
                duality: liedim::duality::DualityIndicator,
                symplectic_fundamentals: Vec<usize>,
            }
            let b = liedim::duality::symplectic_fundamentals(lt);
            let report = DualityReport {
                lie_type: lt.to_string(),
                weight: w,
                duality: ind,
                symplectic_fundamentals: b.nodes.iter().cloned().collect(),
            };
            let text = match cli.format() {
                Format::Json => render::to_canonical_json(&report),
                _ => format!(
                    "{} ({}): {}",
                    report.lie_type,
                    render::weight_str(&report.weight),
                    report.duality.as_str()
                ),
            };
            Ok(Outcome::ok(text))
        }

        CliCommand::Search {
            lie_type,
            dim,
            max_height,
            enumeration_cap,
        } => {
            let lt = parse_type(lie_type)?;
            let rs = RootSystem::build(lt).map_err(|e| e.to_string())?;
            let d = BigInt::from_str(dim).map_err(|_| format!("cannot parse dim {dim:?}"))?;
            let hits = search_dimension(&rs, &d, *max_height, *enumeration_cap)
                .map_err(|e| e.to_string())?;
            match cli.format() {
                Format::Json => Ok(Outcome::ok(render::to_canonical_json(&hits))),
                Format::Csv => {
                    let mut out = vec!["type,weight,dim".to_string()];
                    out.extend(hits.iter().map(|w| {
                        format!("{},{},{}", lt, render::weight_str(w).replace(',', ";"), d)
                    }));
                    Ok(Outcome::ok(out.join("\n")))
                }
                Format::Text => {
                    if hits.is_empty() {
                        Ok(Outcome::ok(format!(
                            "no weights of height <= {max_height} with dim {d}"
                        )))
                    } else {
                        let out: Vec<String> = hits
                            .iter()
                            .map(|w| format!("{} ({})  dim {}", lt, render::weight_str(w), d))
                            .collect();
                        Ok(Outcome::ok(out.join("\n")))
                    }
                }
            }
        }

        CliCommand::Tables {
            id,
            ranks,
            cap,
            max_rank,
            expect,
        } => {
            if cli.format() != Format::Text {
                return Err("tables output is text only".into());
            }
            crate::tables_cmd::run(*id, ranks.as_deref(), *cap, *max_rank, expect.as_deref())
        }

        CliCommand::Verify {
            suite,
            max_rank,
            max_height,
            cap,
        } => {
            if cli.format() != Format::Text {
                return Err("verify output is text only".into());
            }
            crate::verify_cmd::run(suite, *max_rank, *max_height, *cap)
        }
    }
}

#[derive(Serialize)]
struct CatalogReport {
    lie_type: String,
    rank: usize,
    modules: Vec<liedim::classify::ClassifiedModule>,
    a2_families: Option<liedim::classify::A2Families>,
}
